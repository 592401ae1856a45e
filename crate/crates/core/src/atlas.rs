//! Counting isomorphism classes of Bruhat intervals and principal order
//! ideals in `S_n`, by length.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::bruhat::{covers_below, leq_unchecked};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poset::{CanonicalForm, RankedPoset};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AtlasRow {
    pub length: usize,
    pub intervals: usize,
    pub ideals: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct AtlasStats {
    /// Intervals whose shape was computed, after symmetry reduction.
    pub intervals_examined: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Atlas {
    pub n: usize,
    pub rows: Vec<AtlasRow>,
    #[serde(skip)]
    pub stats: AtlasStats,
}

/// Certificates of every interval and ideal class, indexed by length.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AtlasClasses {
    pub intervals: Vec<BTreeSet<CanonicalForm>>,
    pub ideals: Vec<BTreeSet<CanonicalForm>>,
    pub stats: AtlasStats,
}

impl AtlasClasses {
    fn empty(max_len: usize) -> Self {
        AtlasClasses {
            intervals: vec![BTreeSet::new(); max_len + 1],
            ideals: vec![BTreeSet::new(); max_len + 1],
            stats: AtlasStats::default(),
        }
    }

    fn merge(mut self, other: AtlasClasses) -> AtlasClasses {
        for (a, b) in self.intervals.iter_mut().zip(other.intervals) {
            a.extend(b);
        }
        for (a, b) in self.ideals.iter_mut().zip(other.ideals) {
            a.extend(b);
        }
        self.stats.intervals_examined += other.stats.intervals_examined;
        self
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AtlasOptions {
    pub caps: Caps,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

pub fn atlas(n: usize, max_len: usize, options: &AtlasOptions) -> Result<Atlas> {
    let classes = atlas_classes(n, max_len, options)?;
    let rows = (0..=max_len)
        .map(|length| AtlasRow {
            length,
            intervals: classes.intervals[length].len(),
            ideals: classes.ideals[length].len(),
        })
        .collect();
    Ok(Atlas {
        n,
        rows,
        stats: classes.stats,
    })
}

/// Collects the certificate of every interval `[x, y] ⊆ S_n` with
/// `ℓ(y) − ℓ(x) ≤ max_len`, and of every ideal `Λ(w)` with `ℓ(w) ≤ max_len`.
///
/// Only one pair per orbit of `(x, y) ↦ (x⁻¹, y⁻¹)` and
/// `(x, y) ↦ (w0 x w0, w0 y w0)` is examined; both maps are poset
/// automorphisms of the Bruhat order, so the class sets are unchanged.
pub fn atlas_classes(n: usize, max_len: usize, options: &AtlasOptions) -> Result<AtlasClasses> {
    if n == 0 {
        return Err(Error::InvalidGroupSize(0));
    }
    options.caps.check_n(n)?;
    if max_len > options.caps.max_length {
        return Err(Error::LengthCapExceeded {
            length: max_len,
            cap: options.caps.max_length,
        });
    }
    let tops = Permutation::all(n)?;
    let work = || {
        tops.par_iter()
            .fold(
                || (AtlasClasses::empty(max_len), ShapeMemo::new()),
                |(mut acc, mut memo), y| {
                    classes_below(y, max_len, &mut acc, &mut memo);
                    (acc, memo)
                },
            )
            .map(|(acc, _)| acc)
            .reduce(|| AtlasClasses::empty(max_len), AtlasClasses::merge)
    };
    Ok(match options.jobs {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .map_err(|e| Error::Precondition(e.to_string()))?
            .install(work),
        None => work(),
    })
}

pub(crate) fn is_orbit_representative(x: &Permutation, y: &Permutation) -> bool {
    let (xi, yi) = (x.inverse(), y.inverse());
    let images = [
        (xi, yi),
        (x.conjugate_by_longest(), y.conjugate_by_longest()),
        (xi.conjugate_by_longest(), yi.conjugate_by_longest()),
    ];
    images.iter().all(|img| (*x, *y) <= *img)
}

/// The part of the Bruhat order within `depth` ranks below `y`, with
/// lower covers recorded per element.
pub(crate) struct DownSet {
    pub levels: Vec<Vec<Permutation>>,
    pub lower: Vec<HashMap<Permutation, Vec<Permutation>>>,
}

impl DownSet {
    pub fn new(y: &Permutation, depth: usize) -> Self {
        let mut levels = vec![vec![*y]];
        let mut lower = Vec::new();
        for _ in 0..depth {
            let mut next = BTreeSet::new();
            let mut map = HashMap::new();
            for z in levels.last().unwrap() {
                let cs = covers_below(z);
                next.extend(cs.iter().copied());
                map.insert(*z, cs);
            }
            lower.push(map);
            if next.is_empty() {
                break;
            }
            levels.push(next.into_iter().collect());
        }
        DownSet { levels, lower }
    }

    /// The Hasse diagram of `[x, y]` where `x` lies `depth` ranks below `y`.
    pub fn interval_poset(&self, x: &Permutation, depth: usize) -> RankedPoset {
        let mut ids: HashMap<Permutation, usize> = HashMap::new();
        let mut ranks = Vec::new();
        let mut kept: Vec<Vec<Permutation>> = Vec::with_capacity(depth + 1);
        for (d, level) in self.levels.iter().take(depth + 1).enumerate() {
            let keep: Vec<Permutation> = if d == depth {
                vec![*x]
            } else {
                level
                    .iter()
                    .filter(|z| leq_unchecked(x, z))
                    .copied()
                    .collect()
            };
            for z in &keep {
                ids.insert(*z, ranks.len());
                ranks.push(depth - d);
            }
            kept.push(keep);
        }
        let mut covers = Vec::new();
        for (d, level) in kept.iter().take(depth).enumerate() {
            for z in level {
                for c in &self.lower[d][z] {
                    if let Some(&ci) = ids.get(c) {
                        covers.push((ci, ids[z]));
                    }
                }
            }
        }
        RankedPoset::new(ranks, &covers).expect("intervals are bounded and graded")
    }
}

/// Many intervals share the same labelled Hasse diagram; each distinct
/// one is canonicalized once per worker.
type ShapeMemo = HashMap<(Vec<usize>, Vec<(usize, usize)>), CanonicalForm>;

fn classes_below(y: &Permutation, max_len: usize, acc: &mut AtlasClasses, seen: &mut ShapeMemo) {
    let down = DownSet::new(y, max_len);
    for (d, level) in down.levels.iter().enumerate() {
        for x in level {
            if !is_orbit_representative(x, y) {
                continue;
            }
            acc.stats.intervals_examined += 1;
            let poset = down.interval_poset(x, d);
            let key = (poset.ranks().to_vec(), poset.covers());
            let cert = seen
                .entry(key)
                .or_insert_with(|| poset.canonical_form())
                .clone();
            if x.is_identity() {
                acc.ideals[d].insert(cert.clone());
            }
            acc.intervals[d].insert(cert);
        }
    }
}
