//! Bounded decision procedure for whether `w` forces a factor: every
//! interval `[x, y] ≅ Λ(w)` should have some reduced word of `x` obtained
//! from a reduced word of `y` by deleting one consecutive block.
//!
//! The ambient group is not bounded a priori, so verdicts only ever claim
//! "no counterexample up to `m_max`".

use std::collections::{HashMap, HashSet};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::atlas::DownSet;
use crate::bruhat::{atoms_between, bruhat_leq, ideal_capped, leq_unchecked};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poset::CanonicalForm;
use crate::structure::shifted_longest_offset;
use crate::words::Word;

/// `i = delete_factor(j, start, len)` with `j ∈ R(y)` and `i ∈ R(x)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorCertificate {
    pub j: Word,
    pub start: usize,
    pub len: usize,
    pub i: Word,
}

impl FactorCertificate {
    /// Re-checks every defining property against `x` and `y`.
    pub fn verify(&self, x: &Permutation, y: &Permutation) -> bool {
        let n = x.n();
        let ok = || -> Result<bool> {
            Ok(self.j.evaluate(n)? == *y
                && self.j.len() == y.length()
                && self.i.evaluate(n)? == *x
                && self.i.len() == x.length()
                && self.j.delete_factor(self.start, self.len)? == self.i
                && self.len + x.length() == y.length())
        };
        ok().unwrap_or(false)
    }

    pub fn factor(&self) -> Word {
        Word(self.j.letters()[self.start..self.start + self.len].to_vec())
    }
}

/// `u` is a left prefix of `z`: some reduced word of `z` starts with one
/// of `u`.
fn is_prefix(u: &Permutation, z: &Permutation) -> bool {
    let rest = u.inverse().compose(z).expect("same size");
    u.length() + rest.length() == z.length()
}

/// Finds the lexicographically least `j ∈ R(y)` from which deleting one
/// factor leaves a reduced word of `x`, and the leftmost such factor.
///
/// A deletion splits `y = u·g·v` and `x = u·v`, both length-additive. The
/// admissible `u` are enumerated first; the walk through `R(y)` in
/// lexicographic order then only enters prefixes that can still be
/// completed, so it never backtracks more than one letter.
pub fn factor_deletion(x: &Permutation, y: &Permutation) -> Result<Option<FactorCertificate>> {
    if !bruhat_leq(x, y)? {
        return Err(Error::NotBelow {
            x: x.to_string(),
            y: y.to_string(),
        });
    }
    let n = x.n();
    let gap = y.length() - x.length();

    // Admissible prefixes u, each with its factor g and suffix v.
    let mut splits: HashMap<Permutation, (Permutation, Permutation)> = HashMap::new();
    let mut frontier = vec![Permutation::identity(n)?];
    let mut seen = HashSet::from([frontier[0]]);
    while let Some(u) = frontier.pop() {
        let ui = u.inverse();
        let v = ui.compose(x)?;
        let r = ui.compose(y)?;
        let g = r.compose(&v.inverse())?;
        if g.length() + v.length() == r.length() {
            splits.insert(u, (g, v));
        }
        for i in 1..n {
            if u.is_right_descent(i) {
                continue;
            }
            let next = u.swap_positions(i - 1, i);
            if seen.contains(&next) || !is_prefix(&next, x) || !is_prefix(&next, y) {
                continue;
            }
            seen.insert(next);
            frontier.push(next);
        }
    }
    if splits.is_empty() {
        return Ok(None);
    }

    // prefixes[s] is the product of the first s letters of the walk.
    let mut prefixes = vec![Permutation::identity(n)?];
    let mut letters: Vec<i32> = Vec::new();
    let feasible = |prefixes: &[Permutation]| -> bool {
        let depth = prefixes.len() - 1;
        let here = prefixes[depth];
        if splits.keys().any(|u| is_prefix(&here, u)) {
            return true;
        }
        (0..depth).any(|s| {
            let Some((g, v)) = splits.get(&prefixes[s]) else {
                return false;
            };
            let between = |a: usize, b: usize| prefixes[a].inverse().compose(&prefixes[b]).unwrap();
            if depth - s <= gap {
                is_prefix(&between(s, depth), g)
            } else {
                between(s, s + gap) == *g && is_prefix(&between(s + gap, depth), v)
            }
        })
    };
    if !feasible(&prefixes) {
        return Ok(None);
    }
    while letters.len() < y.length() {
        let here = *prefixes.last().unwrap();
        let rest = here.inverse().compose(y)?;
        let mut advanced = false;
        for i in 1..n {
            if !rest.is_left_descent(i) {
                continue;
            }
            prefixes.push(here.swap_positions(i - 1, i));
            if feasible(&prefixes) {
                letters.push(i as i32);
                advanced = true;
                break;
            }
            prefixes.pop();
        }
        if !advanced {
            unreachable!("a feasible prefix always has a feasible extension");
        }
    }
    let j = Word(letters);
    for start in 0..=j.len() - gap {
        let i = j.delete_factor(start, gap)?;
        if i.evaluate(n)? == *x {
            return Ok(Some(FactorCertificate {
                j,
                start,
                len: gap,
                i,
            }));
        }
    }
    unreachable!("the completed word admits a deletion")
}

/// Whether the factor deleted by `cert` is a shift of a reduced word of
/// the longest element of `S_k`.
pub fn certificate_is_shifted_longest(
    x: &Permutation,
    y: &Permutation,
    cert: &FactorCertificate,
    k: usize,
) -> bool {
    cert.verify(x, y) && shifted_longest_offset(&cert.factor(), k).is_some()
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchOptions {
    pub caps: Caps,
    /// Worker threads; `None` runs on the global pool.
    pub jobs: Option<usize>,
    /// Examine only one interval per orbit of `(x, y) ↦ (x⁻¹, y⁻¹)` and
    /// `(x, y) ↦ (w0 x w0, w0 y w0)`. Verdicts are unchanged; which
    /// counterexample is reported may differ.
    pub symmetry_pruning: bool,
}

fn with_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        Some(k) => Ok(rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .map_err(|e| Error::Precondition(e.to_string()))?
            .install(f)),
        None => Ok(f()),
    }
}

/// Every `(x, y)` in `S_m` with `[x, y] ≅ Λ(w)`, sorted.
///
/// Candidates are filtered by length gap, atom and coatom counts, element
/// count and rank profile before certificates are compared.
pub fn intervals_isomorphic_to(
    w: &Permutation,
    m: usize,
    options: &SearchOptions,
) -> Result<Vec<(Permutation, Permutation)>> {
    options.caps.check_n(m)?;
    let target_ideal = ideal_capped(w, &options.caps)?;
    let target = target_ideal.to_poset();
    let key = target.shape_key();
    let gap = target.length();
    let profile = key.rank_profile.clone();
    let cert: CanonicalForm = target.canonical_form();

    let tops: Vec<Permutation> = Permutation::all(m)?
        .into_iter()
        .filter(|y| y.length() >= gap)
        .collect();
    let scan = |y: &Permutation| -> Vec<(Permutation, Permutation)> {
        let down = DownSet::new(y, gap);
        let Some(bottoms) = down.levels.get(gap) else {
            return Vec::new();
        };
        let coatoms = |x: &Permutation| {
            down.levels[1]
                .iter()
                .filter(|z| leq_unchecked(x, z))
                .count()
        };
        bottoms
            .iter()
            .filter(|x| gap < 2 || coatoms(x) == profile[gap - 1])
            .filter(|x| gap < 2 || atoms_between(x, y).len() == profile[1])
            .filter(|x| !options.symmetry_pruning || crate::atlas::is_orbit_representative(x, y))
            .filter_map(|x| {
                let p = down.interval_poset(x, gap);
                (p.shape_key() == key && p.canonical_form() == cert).then_some((*x, *y))
            })
            .collect()
    };
    let mut out: Vec<(Permutation, Permutation)> = with_pool(options.jobs, || {
        tops.par_iter().flat_map_iter(scan).collect()
    })?;
    out.sort_unstable();
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    /// `[x, y] ≅ Λ(w)` in `S_m` with no factor deletion from `R(y)` to `R(x)`.
    Counterexample {
        x: Permutation,
        y: Permutation,
        m: usize,
    },
    NoCounterexampleUpToBound,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ForcingStats {
    /// Intervals isomorphic to `Λ(w)` whose factor deletions were searched.
    pub intervals_examined: u64,
    /// Intervals examined per group size, starting at `S_{w.n}`.
    pub per_n: Vec<(usize, u64)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ForcingVerdict {
    pub w: Permutation,
    pub m_max: usize,
    pub outcome: Outcome,
    /// Certificate for every interval examined when no counterexample
    /// turned up, in search order.
    pub certificates: Vec<(Permutation, Permutation, FactorCertificate)>,
    pub stats: ForcingStats,
    pub seconds: f64,
}

impl ForcingVerdict {
    pub fn counterexample(&self) -> Option<(Permutation, Permutation, usize)> {
        match self.outcome {
            Outcome::Counterexample { x, y, m } => Some((x, y, m)),
            Outcome::NoCounterexampleUpToBound => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CounterexampleReport {
    pub x: Permutation,
    pub y: Permutation,
    pub m: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StatsReport {
    pub intervals_examined: u64,
    pub per_n: Vec<(usize, u64)>,
    pub caps: Caps,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seconds: Option<f64>,
}

/// JSON shape of a verdict. When no counterexample exists, `certificate`
/// is the deletion found for the first interval examined.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerdictReport {
    pub w: Permutation,
    pub m_max: usize,
    pub outcome: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<CounterexampleReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<FactorCertificate>,
    pub stats: StatsReport,
}

impl ForcingVerdict {
    /// Timing is left out unless asked for, so reports are reproducible.
    pub fn report(&self, caps: &Caps, with_timing: bool) -> VerdictReport {
        let (outcome, counterexample) = match self.outcome {
            Outcome::Counterexample { x, y, m } => {
                ("counterexample", Some(CounterexampleReport { x, y, m }))
            }
            Outcome::NoCounterexampleUpToBound => ("no-counterexample-up-to-bound", None),
        };
        VerdictReport {
            w: self.w,
            m_max: self.m_max,
            outcome,
            counterexample,
            certificate: self.certificates.first().map(|(_, _, c)| c.clone()),
            stats: StatsReport {
                intervals_examined: self.stats.intervals_examined,
                per_n: self.stats.per_n.clone(),
                caps: *caps,
                seconds: with_timing.then_some(self.seconds),
            },
        }
    }
}

/// Scans `S_m` for `m = w.n ..= m_max` for an interval `≅ Λ(w)` with no
/// factor deletion, returning the first by (m, x, y).
///
/// Intervals in `S_m` whose endpoints both fix `m` are copies of intervals
/// already scanned in `S_{m-1}` and are skipped.
pub fn forces_factor(
    w: &Permutation,
    m_max: usize,
    options: &SearchOptions,
) -> Result<ForcingVerdict> {
    let started = Instant::now();
    if m_max < w.n() {
        return Err(Error::Precondition(format!(
            "m_max = {m_max} is smaller than the size of {w}"
        )));
    }
    options.caps.check_n(m_max)?;
    let mut stats = ForcingStats::default();
    let mut certificates = Vec::new();
    for m in w.n()..=m_max {
        let wm = w.embed(m)?;
        let pairs: Vec<_> = intervals_isomorphic_to(&wm, m, options)?
            .into_iter()
            .filter(|(x, y)| m == w.n() || x.at(m) != m || y.at(m) != m)
            .collect();
        stats.intervals_examined += pairs.len() as u64;
        stats.per_n.push((m, pairs.len() as u64));
        let results: Vec<Option<FactorCertificate>> = with_pool(options.jobs, || {
            pairs
                .par_iter()
                .map(|(x, y)| factor_deletion(x, y).expect("x ≤ y by construction"))
                .collect()
        })?;
        if let Some(pos) = results.iter().position(Option::is_none) {
            let (x, y) = pairs[pos];
            return Ok(ForcingVerdict {
                w: *w,
                m_max,
                outcome: Outcome::Counterexample { x, y, m },
                certificates: Vec::new(),
                stats,
                seconds: started.elapsed().as_secs_f64(),
            });
        }
        certificates.extend(
            pairs
                .into_iter()
                .zip(results)
                .map(|((x, y), c)| (x, y, c.unwrap())),
        );
    }
    Ok(ForcingVerdict {
        w: *w,
        m_max,
        outcome: Outcome::NoCounterexampleUpToBound,
        certificates,
        stats,
        seconds: started.elapsed().as_secs_f64(),
    })
}
