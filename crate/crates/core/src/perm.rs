//! Permutations of `{1..n}` in one-line notation.
//!
//! Products follow the convention where `w·s_i` exchanges the entries in
//! positions `i` and `i+1`, and `s_i·w` exchanges the positions of the
//! values `i` and `i+1`. Under this convention the product `s1 s2 s1 s3`
//! is `3241`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Hard storage limit for a permutation. Enumeration caps are much lower.
pub const MAX_GROUP_SIZE: usize = 16;

/// A permutation stored as its one-line notation `w(1) w(2) … w(n)`.
///
/// Values are 1-based. Ordering is lexicographic on the one-line notation
/// (for equal `n`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    n: u8,
    entries: [u8; MAX_GROUP_SIZE],
}

/// The adjacent transposition `s_i`, `i ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleReflection(pub usize);

impl SimpleReflection {
    pub fn index(self) -> usize {
        self.0
    }

    fn check(self, n: usize) -> Result<()> {
        if self.0 == 0 || self.0 >= n {
            Err(Error::IndexOutOfRange { index: self.0, n })
        } else {
            Ok(())
        }
    }
}

fn check_size(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidGroupSize(0))
    } else if n > MAX_GROUP_SIZE {
        Err(Error::GroupTooLarge {
            n,
            max: MAX_GROUP_SIZE,
        })
    } else {
        Ok(())
    }
}

impl Permutation {
    /// Builds a permutation from its one-line notation, checking that the
    /// values are exactly `1..=n`.
    pub fn new(values: &[usize]) -> Result<Self> {
        let n = values.len();
        check_size(n)?;
        let mut seen = [false; MAX_GROUP_SIZE + 1];
        let mut entries = [0u8; MAX_GROUP_SIZE];
        for (slot, &v) in entries.iter_mut().zip(values) {
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotAPermutation(format!("{values:?}")));
            }
            seen[v] = true;
            *slot = v as u8;
        }
        Ok(Permutation {
            n: n as u8,
            entries,
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        check_size(n)?;
        let mut entries = [0u8; MAX_GROUP_SIZE];
        for (i, e) in entries.iter_mut().take(n).enumerate() {
            *e = (i + 1) as u8;
        }
        Ok(Permutation {
            n: n as u8,
            entries,
        })
    }

    /// The longest element `n(n-1)⋯21`.
    pub fn longest(n: usize) -> Result<Self> {
        check_size(n)?;
        let mut entries = [0u8; MAX_GROUP_SIZE];
        for (i, e) in entries.iter_mut().take(n).enumerate() {
            *e = (n - i) as u8;
        }
        Ok(Permutation {
            n: n as u8,
            entries,
        })
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// One-line notation as a slice of 1-based values.
    pub fn entries(&self) -> &[u8] {
        &self.entries[..self.n()]
    }

    /// `w(i)` for a 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.entries[i - 1] as usize
    }

    /// 0-based position of the value `v`.
    pub fn position_of(&self, v: usize) -> usize {
        self.entries()
            .iter()
            .position(|&e| e as usize == v)
            .expect("value in range")
    }

    pub fn is_identity(&self) -> bool {
        self.entries()
            .iter()
            .enumerate()
            .all(|(i, &e)| e as usize == i + 1)
    }

    /// Number of inversions, which equals the Coxeter length.
    pub fn length(&self) -> usize {
        let e = self.entries();
        let mut count = 0;
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                if e[i] > e[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// All inversions `(i, j)`, 1-based, with `i < j` and `w(i) > w(j)`.
    pub fn inversions(&self) -> Vec<(usize, usize)> {
        let e = self.entries();
        let mut out = Vec::new();
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                if e[i] > e[j] {
                    out.push((i + 1, j + 1));
                }
            }
        }
        out
    }

    /// Exchanges the entries at 0-based positions `a` and `b`.
    pub(crate) fn swap_positions(&self, a: usize, b: usize) -> Self {
        let mut out = *self;
        out.entries.swap(a, b);
        out
    }

    /// Exchanges the positions of the values `a` and `b`.
    pub(crate) fn swap_values(&self, a: usize, b: usize) -> Self {
        let mut out = *self;
        for e in out.entries.iter_mut().take(self.n()) {
            if *e as usize == a {
                *e = b as u8;
            } else if *e as usize == b {
                *e = a as u8;
            }
        }
        out
    }

    /// `s·w`: values `i` and `i+1` exchange positions.
    pub fn apply_left(&self, s: SimpleReflection) -> Result<Self> {
        s.check(self.n())?;
        Ok(self.swap_values(s.0, s.0 + 1))
    }

    /// `w·s`: entries in positions `i` and `i+1` are exchanged.
    pub fn apply_right(&self, s: SimpleReflection) -> Result<Self> {
        s.check(self.n())?;
        Ok(self.swap_positions(s.0 - 1, s.0))
    }

    /// `i` is a right descent when `w(i) > w(i+1)`, i.e. `ℓ(w·s_i) < ℓ(w)`.
    pub fn is_right_descent(&self, i: usize) -> bool {
        self.entries[i - 1] > self.entries[i]
    }

    /// `i` is a left descent when `i+1` sits left of `i`, i.e. `ℓ(s_i·w) < ℓ(w)`.
    pub fn is_left_descent(&self, i: usize) -> bool {
        self.position_of(i + 1) < self.position_of(i)
    }

    pub fn right_descents(&self) -> impl Iterator<Item = usize> + '_ {
        (1..self.n()).filter(|&i| self.is_right_descent(i))
    }

    pub fn left_descents(&self) -> impl Iterator<Item = usize> + '_ {
        (1..self.n()).filter(|&i| self.is_left_descent(i))
    }

    /// Group product `self · other`, as maps: `(u·v)(j) = u(v(j))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        let mut out = *self;
        for j in 0..self.n() {
            out.entries[j] = self.entries[other.entries[j] as usize - 1];
        }
        Ok(out)
    }

    pub fn inverse(&self) -> Self {
        let mut out = *self;
        for (i, &v) in self.entries().iter().enumerate() {
            out.entries[v as usize - 1] = (i + 1) as u8;
        }
        out
    }

    /// Conjugation by the longest element: `w0 · w · w0`.
    pub fn conjugate_by_longest(&self) -> Self {
        let n = self.n();
        let mut out = *self;
        for i in 0..n {
            out.entries[i] = (n + 1 - self.entries[n - 1 - i] as usize) as u8;
        }
        out
    }

    /// Appends fixed points so the result lives in `S_m`.
    pub fn embed(&self, m: usize) -> Result<Self> {
        if m < self.n() {
            return Err(Error::EmbedTooSmall {
                from: self.n(),
                to: m,
            });
        }
        check_size(m)?;
        let mut out = *self;
        for i in self.n()..m {
            out.entries[i] = (i + 1) as u8;
        }
        out.n = m as u8;
        Ok(out)
    }

    /// All permutations of `S_n` in lexicographic order.
    pub fn all(n: usize) -> Result<Vec<Self>> {
        let mut cur = Self::identity(n)?;
        let mut out = Vec::new();
        loop {
            out.push(cur);
            if !cur.advance() {
                break;
            }
        }
        Ok(out)
    }

    /// Steps to the lexicographic successor; false at the last permutation.
    fn advance(&mut self) -> bool {
        let n = self.n();
        let e = &mut self.entries[..n];
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| e[i] < e[i + 1]) else {
            return false;
        };
        let j = (i + 1..n).rev().find(|&j| e[j] > e[i]).unwrap();
        e.swap(i, j);
        e[i + 1..].reverse();
        true
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for &e in self.entries() {
                write!(f, "{e}")?;
            }
        } else {
            let parts: Vec<String> = self.entries().iter().map(|e| e.to_string()).collect();
            write!(f, "{}", parts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// Accepts `3241` (one digit per entry) or whitespace/comma separated values.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_err = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let values: Vec<usize> = if s.contains(|c: char| c.is_whitespace() || c == ',') {
            s.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| parse_err("expected integers"))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| parse_err("expected digits"))
                })
                .collect::<Result<_>>()?
        };
        if values.is_empty() {
            return Err(parse_err("empty permutation"));
        }
        Permutation::new(&values)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
