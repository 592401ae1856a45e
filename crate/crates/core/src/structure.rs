//! Structural tools relating interval shape to reduced words:
//! decompositions into small-letter and large-letter blocks, the
//! non-forcing interval built from a decomposition, thin monotonic
//! substrings, swap-strings and their factorization into reduced words.

use serde::Serialize;

use crate::bruhat::{ideal, interval};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::forcing::factor_deletion;
use crate::perm::Permutation;
use crate::words::{lex_least_reduced_word, reduced_words_capped, Word};

/// Whether the monotonic substring of `s` at the (0-based, increasing)
/// `positions` is thin: no value strictly between its smallest and largest
/// values, other than its own, sits between the positions of those two.
pub fn is_thin(s: &[i64], positions: &[usize]) -> Result<bool> {
    if positions.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Precondition("positions must increase".into()));
    }
    if let Some(&p) = positions.last() {
        if p >= s.len() {
            return Err(Error::PositionOutOfRange {
                position: p,
                n: s.len(),
            });
        }
    }
    let values: Vec<i64> = positions.iter().map(|&p| s[p]).collect();
    let increasing = values.windows(2).all(|w| w[0] < w[1]);
    let decreasing = values.windows(2).all(|w| w[0] > w[1]);
    if !increasing && !decreasing {
        return Err(Error::NotMonotonic);
    }
    if positions.len() < 2 {
        return Ok(true);
    }
    let (first, last) = (positions[0], *positions.last().unwrap());
    let (lo, hi) = (
        values[0].min(values[values.len() - 1]),
        values[0].max(values[values.len() - 1]),
    );
    Ok(!(first + 1..last)
        .filter(|p| !positions.contains(p))
        .any(|p| lo < s[p] && s[p] < hi))
}

fn perm_values(w: &Permutation) -> Vec<i64> {
    w.entries().iter().map(|&e| e as i64).collect()
}

/// Which block of a decomposition holds the letters `≤ m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BlockSide {
    SmallFirst,
    SmallLast,
}

/// A reduced word `a1·a2` of `w` where one block uses only letters `≤ m`
/// and the other only letters `> m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub m: i32,
    pub a1: Word,
    pub a2: Word,
    pub side: BlockSide,
}

impl Decomposition {
    fn blocks(&self) -> (&Word, &Word) {
        match self.side {
            BlockSide::SmallFirst => (&self.a1, &self.a2),
            BlockSide::SmallLast => (&self.a2, &self.a1),
        }
    }

    /// Largest letter of the small block and smallest of the large block.
    pub fn boundary_letters(&self) -> (i32, i32) {
        let (small, large) = self.blocks();
        (
            *small.letters().iter().max().unwrap(),
            *large.letters().iter().min().unwrap(),
        )
    }

    pub fn validate(&self, w: &Permutation) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidDecomposition(msg.to_string()));
        if self.a1.is_empty() || self.a2.is_empty() {
            return bad("both blocks must be nonempty");
        }
        let (small, large) = self.blocks();
        if small.letters().iter().any(|&a| a > self.m) {
            return bad("small block has a letter above m");
        }
        if large.letters().iter().any(|&a| a <= self.m) {
            return bad("large block has a letter at most m");
        }
        let word = Word::concat(&[&self.a1, &self.a2]);
        match word.evaluate(w.n()) {
            Ok(v) if v == *w && word.len() == w.length() => Ok(()),
            Ok(_) => bad("blocks do not form a reduced word of w"),
            Err(e) => Err(e),
        }
    }
}

/// Searches `R(w)` for a decomposition. Words are tried in lexicographic
/// order, then split points left to right, small block first before small
/// block last; `m` is the largest letter of the small block.
pub fn decompose(w: &Permutation) -> Result<Option<Decomposition>> {
    decompose_capped(w, &Caps::default())
}

pub fn decompose_capped(w: &Permutation, caps: &Caps) -> Result<Option<Decomposition>> {
    let words = reduced_words_capped(w, caps)?;
    for word in &words.words {
        let l = word.letters();
        for split in 1..l.len() {
            let (left, right) = l.split_at(split);
            let (lmax, lmin) = (*left.iter().max().unwrap(), *left.iter().min().unwrap());
            let (rmax, rmin) = (*right.iter().max().unwrap(), *right.iter().min().unwrap());
            let a1 = Word(left.to_vec());
            let a2 = Word(right.to_vec());
            if lmax < rmin {
                return Ok(Some(Decomposition {
                    m: lmax,
                    a1,
                    a2,
                    side: BlockSide::SmallFirst,
                }));
            }
            if rmax < lmin {
                return Ok(Some(Decomposition {
                    m: rmax,
                    a1,
                    a2,
                    side: BlockSide::SmallLast,
                }));
            }
        }
    }
    Ok(None)
}

/// An interval `[w_minus, w_plus] ≅ Λ(w)` admitting no factor deletion,
/// in `S_n` or `S_{n+1}` depending on the letters used.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NonForcingWitness {
    pub w: Permutation,
    pub w_minus: Permutation,
    pub w_plus: Permutation,
    /// The run of consecutive letters; a reduced word of `w_minus`.
    pub b: Word,
    pub k1: i32,
    pub k2: i32,
    /// A reduced word of `w_plus` containing `b` as a factor.
    #[serde(rename = "word")]
    pub full_word: Word,
    pub side: BlockSide,
}

/// Builds the non-forcing interval for a decomposable `w`.
///
/// With the small block `a1` first, the run `b = (k1+1)(k1+2)⋯k2` is
/// inserted between `a1` and the large block shifted up by one. When the
/// small block comes last the construction is mirrored through `w ↦ w⁻¹`,
/// which reverses every word, so `b` runs downward.
///
/// Both defining properties are checked before returning.
pub fn nonforcing_witness(w: &Permutation, d: &Decomposition) -> Result<NonForcingWitness> {
    d.validate(w)?;
    let (k1, k2) = d.boundary_letters();
    let run = Word((k1 + 1..=k2).collect());
    let (b, full_word) = match d.side {
        BlockSide::SmallFirst => {
            let full = Word::concat(&[&d.a1, &run, &d.a2.shift(1)]);
            (run, full)
        }
        BlockSide::SmallLast => {
            let b = run.reversed();
            let full = Word::concat(&[&d.a1.shift(1), &b, &d.a2]);
            (b, full)
        }
    };
    // The shifted large block may need one more strand than w has.
    let n = w
        .n()
        .max(*full_word.letters().iter().max().unwrap() as usize + 1);
    let w_minus = b.evaluate(n)?;
    let w_plus = full_word.evaluate(n)?;
    if full_word.len() != w_plus.length() {
        return Err(Error::InvalidDecomposition(format!(
            "constructed word {full_word} is not reduced"
        )));
    }
    let target = ideal(w)?.to_poset();
    if !interval(&w_minus, &w_plus)?
        .to_poset()
        .is_isomorphic(&target)
    {
        return Err(Error::InvalidDecomposition(format!(
            "[{w_minus}, {w_plus}] is not isomorphic to the ideal of {w}"
        )));
    }
    if let Some(cert) = factor_deletion(&w_minus, &w_plus)? {
        return Err(Error::InvalidDecomposition(format!(
            "[{w_minus}, {w_plus}] admits the factor deletion {cert:?}"
        )));
    }
    Ok(NonForcingWitness {
        w: *w,
        w_minus,
        w_plus,
        b,
        k1,
        k2,
        full_word,
        side: d.side,
    })
}

/// The thin monotonic substring outside of which `x` and `y` agree,
/// increasing in `x` and decreasing in `y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SwapString {
    /// 1-based positions, increasing.
    pub positions: Vec<usize>,
    /// The values at those positions in `x`, increasing.
    pub values: Vec<usize>,
    pub k: usize,
}

pub fn detect_swap_string(x: &Permutation, y: &Permutation) -> Option<SwapString> {
    if x.n() != y.n() {
        return None;
    }
    let diff: Vec<usize> = (0..x.n())
        .filter(|&p| x.entries()[p] != y.entries()[p])
        .collect();
    // Reversing k values moves all of them except the centre when k is odd.
    if diff.len() < 2 || diff.len() % 2 == 1 {
        return None;
    }
    let h = diff.len() / 2;
    let mut candidates = vec![diff.clone()];
    for centre in diff[h - 1] + 1..diff[h] {
        let mut c = diff.clone();
        c.insert(h, centre);
        candidates.push(c);
    }
    let (xv, yv) = (perm_values(x), perm_values(y));
    candidates.into_iter().find_map(|pos| {
        let k = pos.len();
        let increasing = pos.windows(2).all(|w| xv[w[0]] < xv[w[1]]);
        let reversed = (0..k).all(|j| yv[pos[j]] == xv[pos[k - 1 - j]]);
        if increasing
            && reversed
            && is_thin(&xv, &pos).unwrap_or(false)
            && is_thin(&yv, &pos).unwrap_or(false)
        {
            Some(SwapString {
                values: pos.iter().map(|&p| x.entries()[p] as usize).collect(),
                positions: pos.into_iter().map(|p| p + 1).collect(),
                k,
            })
        } else {
            None
        }
    })
}

/// Reduced words `a·c ∈ R(x)` and `a·b·c ∈ R(y)` with `shift(b, t)` a
/// reduced word of the longest element of `S_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SwapFactorization {
    pub a: Word,
    pub b: Word,
    pub c: Word,
    pub t: i32,
}

/// Factors `y` over `x` through their swap-string.
///
/// Values lying inside the span of the swap-string but outside its value
/// range are swept out by right multiplication: too-large values move
/// right (rightmost first), then too-small values move left (leftmost
/// first), each step removing one inversion from both `x` and `y`. The
/// swap-string is then a consecutive block, `b` is the lexicographically
/// least reduced word reversing that block, `c` undoes the sweep, and `a`
/// is the lexicographically least reduced word of the swept `x`.
pub fn swap_string_factorization(
    x: &Permutation,
    y: &Permutation,
    ss: &SwapString,
) -> Result<SwapFactorization> {
    match detect_swap_string(x, y) {
        Some(found) if found == *ss => {}
        _ => {
            return Err(Error::InvalidSwapString(format!(
                "{ss:?} is not the swap-string of ({x}, {y})"
            )))
        }
    }
    let lo = ss.values[0] as u8;
    let hi = *ss.values.last().unwrap() as u8;
    let in_string = |v: u8| ss.values.contains(&(v as usize));
    let mut xs = *x;
    let mut ys = *y;
    let mut sweep: Vec<i32> = Vec::new();
    let mut step = |xs: &mut Permutation, ys: &mut Permutation, p: usize| {
        debug_assert!(xs.entries()[p] > xs.entries()[p + 1]);
        debug_assert!(ys.entries()[p] > ys.entries()[p + 1]);
        *xs = xs.swap_positions(p, p + 1);
        *ys = ys.swap_positions(p, p + 1);
        sweep.push(p as i32 + 1);
    };
    let span = |xs: &Permutation| {
        let e = xs.entries();
        let first = e.iter().position(|&v| in_string(v)).unwrap();
        let last = e.iter().rposition(|&v| in_string(v)).unwrap();
        (first, last)
    };
    loop {
        let (first, last) = span(&xs);
        let Some(mut p) = (first..last).rev().find(|&p| xs.entries()[p] > hi) else {
            break;
        };
        while p < last {
            step(&mut xs, &mut ys, p);
            p += 1;
        }
    }
    loop {
        let (first, last) = span(&xs);
        let Some(mut p) = (first + 1..=last).find(|&p| xs.entries()[p] < lo) else {
            break;
        };
        while p > first {
            step(&mut xs, &mut ys, p - 1);
            p -= 1;
        }
    }
    let (first, _) = span(&xs);
    let k = ss.k;
    let longest = Permutation::longest(k)?;
    let b = lex_least_reduced_word(&longest).shift(first as i32);
    let t = -(first as i32);
    let a = lex_least_reduced_word(&xs);
    let c = Word(sweep).reversed();

    let ac = Word::concat(&[&a, &c]);
    let abc = Word::concat(&[&a, &b, &c]);
    if ac.evaluate(x.n())? != *x
        || ac.len() != x.length()
        || abc.evaluate(y.n())? != *y
        || abc.len() != y.length()
    {
        return Err(Error::InvalidSwapString(format!(
            "factorization of ({x}, {y}) failed to reproduce both endpoints"
        )));
    }
    Ok(SwapFactorization { a, b, c, t })
}

/// The `t` with `shift(b, t) ∈ R(w0^k)`, if any. The shift is forced:
/// the smallest letter must land on 1.
pub fn shifted_longest_offset(b: &Word, k: usize) -> Option<i32> {
    if k == 0 || b.len() != k * (k - 1) / 2 {
        return None;
    }
    if b.is_empty() {
        return Some(0);
    }
    let t = 1 - b.letters().iter().min().unwrap();
    let shifted = b.shift(t);
    match shifted.evaluate(k) {
        Ok(v) if v == Permutation::longest(k).ok()? => Some(t),
        _ => None,
    }
}

/// `k` with `C(k, 2) = length`, when one exists.
pub(crate) fn longest_rank(length: usize) -> Option<usize> {
    (1..)
        .take_while(|k| k * (k - 1) / 2 <= length)
        .find(|k| k * (k - 1) / 2 == length)
}

/// Whether some shift of `b` is a reduced word of the longest element
/// whose ideal has the length of `iv`.
pub fn verify_b_is_shifted_longest(iv: &crate::bruhat::Interval, b: &Word) -> bool {
    longest_rank(iv.length()).is_some_and(|k| shifted_longest_offset(b, k).is_some())
}
