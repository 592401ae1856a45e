//! Bruhat order on `S_n`: comparisons, covers, intervals and principal
//! order ideals.

use std::collections::{BTreeSet, HashMap};
use std::ops::Deref;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poset::RankedPoset;

/// `x ≤ y` by the rank-matrix criterion: for every prefix `1..i` and every
/// threshold `j`, `x` has no more prefix entries `≥ j` than `y` does.
pub fn bruhat_leq(x: &Permutation, y: &Permutation) -> Result<bool> {
    if x.n() != y.n() {
        return Err(Error::SizeMismatch {
            left: x.n(),
            right: y.n(),
        });
    }
    Ok(leq_unchecked(x, y))
}

pub(crate) fn leq_unchecked(x: &Permutation, y: &Permutation) -> bool {
    let n = x.n();
    // cx[j] - cy[j] for thresholds j = 1..=n, updated one prefix at a time.
    let mut diff = [0i32; 17];
    let (xe, ye) = (x.entries(), y.entries());
    for i in 0..n {
        let (a, b) = (xe[i] as usize, ye[i] as usize);
        if a == b {
            continue;
        }
        if a > b {
            for d in &mut diff[b + 1..=a] {
                *d += 1;
                if *d > 0 {
                    return false;
                }
            }
        } else {
            for d in &mut diff[a + 1..=b] {
                *d -= 1;
            }
        }
    }
    true
}

/// Elements covering `x`: swaps of positions `a < b` with `x(a) < x(b)` and
/// no intermediate value between them.
pub fn covers_above(x: &Permutation) -> Vec<Permutation> {
    let e = x.entries();
    let mut out = Vec::new();
    for a in 0..e.len() {
        let mut ceiling = u8::MAX;
        for b in a + 1..e.len() {
            if e[b] > e[a] && e[b] < ceiling {
                out.push(x.swap_positions(a, b));
                ceiling = e[b];
            }
        }
    }
    out.sort_unstable();
    out
}

/// Elements covered by `y`.
pub fn covers_below(y: &Permutation) -> Vec<Permutation> {
    let e = y.entries();
    let mut out = Vec::new();
    for a in 0..e.len() {
        let mut floor = 0u8;
        for b in a + 1..e.len() {
            if e[b] < e[a] && e[b] > floor {
                out.push(y.swap_positions(a, b));
                floor = e[b];
            }
        }
    }
    out.sort_unstable();
    out
}

/// The interval `[low, high]` with its Hasse diagram.
///
/// Elements are sorted by rank, then lexicographically; covers are index
/// pairs `(lower, upper)` into that order.
#[derive(Debug, Clone)]
pub struct Interval {
    low: Permutation,
    high: Permutation,
    elements: Vec<Permutation>,
    ranks: Vec<usize>,
    covers: Vec<(usize, usize)>,
    index: HashMap<Permutation, usize>,
}

impl Interval {
    pub fn low(&self) -> &Permutation {
        &self.low
    }

    pub fn high(&self) -> &Permutation {
        &self.high
    }

    pub fn n(&self) -> usize {
        self.low.n()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `ℓ(high) − ℓ(low)`.
    pub fn length(&self) -> usize {
        self.high.length() - self.low.length()
    }

    pub fn contains(&self, z: &Permutation) -> bool {
        self.index.contains_key(z)
    }

    /// Rank offset from `low`.
    pub fn rank_of(&self, z: &Permutation) -> Option<usize> {
        self.index.get(z).map(|&i| self.ranks[i])
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn cover_pairs(&self) -> impl Iterator<Item = (Permutation, Permutation)> + '_ {
        self.covers
            .iter()
            .map(|&(a, b)| (self.elements[a], self.elements[b]))
    }

    pub fn rank_profile(&self) -> Vec<usize> {
        let mut profile = vec![0; self.length() + 1];
        for &r in &self.ranks {
            profile[r] += 1;
        }
        profile
    }

    /// Elements covered by `high`.
    pub fn coatoms(&self) -> Vec<Permutation> {
        let top = self.len() - 1;
        self.covers
            .iter()
            .filter(|&&(_, b)| b == top)
            .map(|&(a, _)| self.elements[a])
            .collect()
    }

    /// Elements covering `low`.
    pub fn atoms(&self) -> Vec<Permutation> {
        self.covers
            .iter()
            .filter(|&&(a, _)| a == 0)
            .map(|&(_, b)| self.elements[b])
            .collect()
    }

    pub fn to_poset(&self) -> RankedPoset {
        RankedPoset::new(self.ranks.clone(), &self.covers)
            .expect("intervals are bounded and graded")
    }

    pub fn labels(&self) -> Vec<String> {
        self.elements.iter().map(|z| z.to_string()).collect()
    }

    pub fn to_dot(&self) -> String {
        self.to_poset().to_dot(Some(&self.labels()))
    }
}

impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let covers: Vec<[String; 2]> = self
            .cover_pairs()
            .map(|(a, b)| [a.to_string(), b.to_string()])
            .collect();
        let mut s = serializer.serialize_struct("Interval", 5)?;
        s.serialize_field("low", &self.low)?;
        s.serialize_field("high", &self.high)?;
        s.serialize_field("n", &self.n())?;
        s.serialize_field("elements", &self.elements)?;
        s.serialize_field("covers", &covers)?;
        s.end()
    }
}

/// A principal order ideal `Λ(w) = [e, w]`.
#[derive(Debug, Clone)]
pub struct Ideal(Interval);

impl Ideal {
    pub fn into_interval(self) -> Interval {
        self.0
    }
}

impl Deref for Ideal {
    type Target = Interval;

    fn deref(&self) -> &Interval {
        &self.0
    }
}

impl Serialize for Ideal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

pub fn interval(x: &Permutation, y: &Permutation) -> Result<Interval> {
    interval_capped(x, y, &Caps::default())
}

/// Builds `[x, y]` by walking down from `y` one rank at a time, keeping
/// only elements above `x`.
pub fn interval_capped(x: &Permutation, y: &Permutation, caps: &Caps) -> Result<Interval> {
    caps.check_perm(y)?;
    if !bruhat_leq(x, y)? {
        return Err(Error::NotBelow {
            x: x.to_string(),
            y: y.to_string(),
        });
    }
    Ok(build_interval(x, y))
}

pub(crate) fn build_interval(x: &Permutation, y: &Permutation) -> Interval {
    let gap = y.length() - x.length();
    let mut levels: Vec<BTreeSet<Permutation>> = vec![BTreeSet::from([*y])];
    let mut edges: Vec<(Permutation, Permutation)> = Vec::new();
    for _ in 0..gap {
        let mut next = BTreeSet::new();
        for z in levels.last().unwrap() {
            for c in covers_below(z) {
                if leq_unchecked(x, &c) {
                    edges.push((c, *z));
                    next.insert(c);
                }
            }
        }
        levels.push(next);
    }
    let mut elements = Vec::new();
    let mut ranks = Vec::new();
    for (r, level) in levels.iter().rev().enumerate() {
        for z in level {
            elements.push(*z);
            ranks.push(r);
        }
    }
    let index: HashMap<Permutation, usize> =
        elements.iter().enumerate().map(|(i, z)| (*z, i)).collect();
    let mut covers: Vec<(usize, usize)> = edges.iter().map(|(a, b)| (index[a], index[b])).collect();
    covers.sort_unstable();
    Interval {
        low: *x,
        high: *y,
        elements,
        ranks,
        covers,
        index,
    }
}

pub fn ideal(w: &Permutation) -> Result<Ideal> {
    ideal_capped(w, &Caps::default())
}

pub fn ideal_capped(w: &Permutation, caps: &Caps) -> Result<Ideal> {
    let e = Permutation::identity(w.n())?;
    interval_capped(&e, w, caps).map(Ideal)
}

/// Elements `w` with `x ≤ w ⋖ y`, without building the whole interval.
pub fn coatoms_between(x: &Permutation, y: &Permutation) -> Vec<Permutation> {
    covers_below(y)
        .into_iter()
        .filter(|c| leq_unchecked(x, c))
        .collect()
}

/// Elements `w` with `x ⋖ w ≤ y`.
pub fn atoms_between(x: &Permutation, y: &Permutation) -> Vec<Permutation> {
    covers_above(x)
        .into_iter()
        .filter(|c| leq_unchecked(c, y))
        .collect()
}

/// A coatom `w` of `[x, y]` with `w(i) ≠ y(i)` (1-based `i`), which exists
/// whenever `x < y` and `x(i) ≠ y(i)`. Returns the least such coatom.
pub fn coatom_avoiding_position(x: &Permutation, y: &Permutation, i: usize) -> Result<Permutation> {
    if !bruhat_leq(x, y)? || x == y {
        return Err(Error::Precondition(format!("{x} < {y} does not hold")));
    }
    if i == 0 || i > x.n() {
        return Err(Error::PositionOutOfRange {
            position: i,
            n: x.n(),
        });
    }
    if x.at(i) == y.at(i) {
        return Err(Error::Precondition(format!(
            "{x} and {y} agree at position {i}"
        )));
    }
    coatoms_between(x, y)
        .into_iter()
        .find(|w| w.at(i) != y.at(i))
        .ok_or_else(|| Error::Precondition(format!("no coatom of [{x}, {y}] moves position {i}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn ps(list: &[&str]) -> Vec<Permutation> {
        let mut v: Vec<_> = list.iter().map(|s| p(s)).collect();
        v.sort();
        v
    }

    #[test]
    fn comparisons() {
        assert!(bruhat_leq(&p("1324"), &p("2341")).unwrap());
        assert!(bruhat_leq(&p("3241"), &p("3241")).unwrap());
        assert!(!bruhat_leq(&p("2341"), &p("4123")).unwrap());
        assert!(!bruhat_leq(&p("4123"), &p("2341")).unwrap());
        assert!(bruhat_leq(&p("123"), &p("1234")).is_err());
    }

    #[test]
    fn covers_match_length_scan() {
        for x in Permutation::all(5).unwrap() {
            let mut brute: Vec<_> = Permutation::all(5)
                .unwrap()
                .into_iter()
                .filter(|z| z.length() == x.length() + 1 && leq_unchecked(&x, z))
                .collect();
            brute.sort();
            assert_eq!(covers_above(&x), brute, "covers above {x}");
            for z in &brute {
                assert!(covers_below(z).contains(&x));
            }
        }
    }

    #[test]
    fn cover_examples() {
        assert_eq!(covers_above(&p("1234")), ps(&["2134", "1324", "1243"]));
        assert!(covers_above(&p("4321")).is_empty());
        let above = covers_above(&p("2143"));
        for z in ps(&["2341", "2413", "3142", "4123"]) {
            assert!(above.contains(&z));
        }
        assert_eq!(
            atoms_between(&p("2143"), &p("4231")),
            ps(&["2341", "2413", "3142", "4123"])
        );
    }

    #[test]
    fn crown_interval_of_length_three() {
        let iv = interval(&p("2143"), &p("4231")).unwrap();
        assert_eq!(iv.len(), 10);
        assert_eq!(iv.rank_profile(), vec![1, 4, 4, 1]);
        assert_eq!(iv.covers().len(), 16);
        let mut co = iv.coatoms();
        co.sort();
        assert_eq!(co, ps(&["2431", "3241", "4213", "4132"]));
        assert_eq!(iv.rank_of(&p("2143")), Some(0));
        assert_eq!(iv.rank_of(&p("4231")), Some(3));
    }

    #[test]
    fn degenerate_and_full_intervals() {
        let iv = interval(&p("3241"), &p("3241")).unwrap();
        assert_eq!(iv.len(), 1);
        assert!(iv.coatoms().is_empty());
        let full = interval(&p("1234"), &p("4321")).unwrap();
        assert_eq!(full.len(), 24);
        let mut co = full.coatoms();
        co.sort();
        assert_eq!(co, ps(&["4312", "4231", "3421"]));
        assert!(matches!(
            interval(&p("2341"), &p("4123")),
            Err(Error::NotBelow { .. })
        ));
    }

    #[test]
    fn ideals() {
        assert_eq!(ideal(&p("2314")).unwrap().len(), 4);
        assert_eq!(ideal(&p("1234")).unwrap().len(), 1);
        assert_eq!(ideal(&p("4213")).unwrap().len(), 12);
    }

    #[test]
    fn coatom_avoiding() {
        let w = coatom_avoiding_position(&p("2143"), &p("4231"), 1).unwrap();
        assert!(ps(&["2431", "3241"]).contains(&w));
        assert_eq!(
            coatom_avoiding_position(&p("1324"), &p("1342"), 3).unwrap(),
            p("1324")
        );
        let w = coatom_avoiding_position(&p("1234"), &p("4321"), 2).unwrap();
        assert_ne!(w.at(2), 3);
        assert!(coatom_avoiding_position(&p("1234"), &p("1234"), 1).is_err());
        assert!(coatom_avoiding_position(&p("1234"), &p("2134"), 3).is_err());
    }

    #[test]
    fn interval_json_shape() {
        let iv = ideal(&p("2314")).unwrap();
        let v: serde_json::Value = serde_json::to_value(&*iv).unwrap();
        assert_eq!(v["low"], "1234");
        assert_eq!(v["high"], "2314");
        assert_eq!(v["n"], 4);
        assert_eq!(v["elements"][0], "1234");
        assert_eq!(v["covers"].as_array().unwrap().len(), 4);
    }
}
