//! Ranked posets given by their Hasse diagrams, with isomorphism-invariant
//! certificates.
//!
//! Canonical forms come from colour refinement seeded by rank, followed by
//! individualization of the first non-singleton cell and a search for the
//! lexicographically least encoding over all branches. The posets met here
//! are small intervals, so no automorphism pruning is attempted.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// A graded poset with a unique minimum and maximum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankedPoset {
    ranks: Vec<usize>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
}

/// Byte certificate; equal exactly for isomorphic posets.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(pub Vec<u8>);

/// Cheap isomorphism invariant used to reject before canonicalizing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShapeKey {
    pub size: usize,
    pub rank_profile: Vec<usize>,
    pub edges: usize,
}

impl RankedPoset {
    /// Builds a poset from per-element ranks and cover pairs `(lower, upper)`.
    pub fn new(ranks: Vec<usize>, covers: &[(usize, usize)]) -> Result<Self> {
        let size = ranks.len();
        if size == 0 {
            return Err(Error::MalformedPoset("no elements".into()));
        }
        let base = *ranks.iter().min().unwrap();
        let ranks: Vec<usize> = ranks.into_iter().map(|r| r - base).collect();
        let mut up = vec![Vec::new(); size];
        let mut down = vec![Vec::new(); size];
        for &(a, b) in covers {
            if a >= size || b >= size {
                return Err(Error::MalformedPoset(format!(
                    "cover ({a}, {b}) out of range"
                )));
            }
            if ranks[b] != ranks[a] + 1 {
                return Err(Error::MalformedPoset(format!(
                    "cover ({a}, {b}) joins ranks {} and {}",
                    ranks[a], ranks[b]
                )));
            }
            if up[a].contains(&b) {
                return Err(Error::MalformedPoset(format!("duplicate cover ({a}, {b})")));
            }
            up[a].push(b);
            down[b].push(a);
        }
        let minima = down.iter().filter(|d| d.is_empty()).count();
        let maxima = up.iter().filter(|u| u.is_empty()).count();
        if minima != 1 || maxima != 1 {
            return Err(Error::MalformedPoset(format!(
                "expected a unique minimum and maximum, found {minima} and {maxima}"
            )));
        }
        for v in up.iter_mut().chain(down.iter_mut()) {
            v.sort_unstable();
        }
        Ok(RankedPoset { ranks, up, down })
    }

    pub fn singleton() -> Self {
        RankedPoset::new(vec![0], &[]).unwrap()
    }

    /// A chain with `length` covers.
    pub fn chain(length: usize) -> Self {
        let covers: Vec<_> = (0..length).map(|i| (i, i + 1)).collect();
        RankedPoset::new((0..=length).collect(), &covers).unwrap()
    }

    pub fn size(&self) -> usize {
        self.ranks.len()
    }

    pub fn rank(&self, v: usize) -> usize {
        self.ranks[v]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// Length of a maximal chain.
    pub fn length(&self) -> usize {
        *self.ranks.iter().max().unwrap()
    }

    pub fn upper_covers(&self, v: usize) -> &[usize] {
        &self.up[v]
    }

    pub fn lower_covers(&self, v: usize) -> &[usize] {
        &self.down[v]
    }

    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<_> = self
            .up
            .iter()
            .enumerate()
            .flat_map(|(a, bs)| bs.iter().map(move |&b| (a, b)))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn edge_count(&self) -> usize {
        self.up.iter().map(Vec::len).sum()
    }

    pub fn rank_profile(&self) -> Vec<usize> {
        let mut profile = vec![0; self.length() + 1];
        for &r in &self.ranks {
            profile[r] += 1;
        }
        profile
    }

    pub fn minimum(&self) -> usize {
        self.down.iter().position(|d| d.is_empty()).unwrap()
    }

    pub fn maximum(&self) -> usize {
        self.up.iter().position(|u| u.is_empty()).unwrap()
    }

    pub fn shape_key(&self) -> ShapeKey {
        ShapeKey {
            size: self.size(),
            rank_profile: self.rank_profile(),
            edges: self.edge_count(),
        }
    }

    /// Product order on pairs, ranked by the sum of ranks.
    pub fn direct_product(&self, other: &RankedPoset) -> RankedPoset {
        let m = other.size();
        let id = |a: usize, b: usize| a * m + b;
        let mut ranks = Vec::with_capacity(self.size() * m);
        let mut covers = Vec::new();
        for a in 0..self.size() {
            for b in 0..m {
                ranks.push(self.ranks[a] + other.ranks[b]);
                for &a2 in &self.up[a] {
                    covers.push((id(a, b), id(a2, b)));
                }
                for &b2 in &other.up[b] {
                    covers.push((id(a, b), id(a, b2)));
                }
            }
        }
        RankedPoset::new(ranks, &covers).expect("product of bounded graded posets")
    }

    pub fn is_isomorphic(&self, other: &RankedPoset) -> bool {
        self.shape_key() == other.shape_key() && self.canonical_form() == other.canonical_form()
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        let colors: Vec<u32> = self.ranks.iter().map(|&r| r as u32).collect();
        let mut best = None;
        self.search(colors, &mut best);
        CanonicalForm(best.expect("search visits at least one leaf"))
    }

    fn search(&self, mut colors: Vec<u32>, best: &mut Option<Vec<u8>>) {
        let ncolors = self.refine(&mut colors);
        if ncolors == self.size() {
            let cert = self.encode(&colors);
            if best.as_ref().is_none_or(|b| cert < *b) {
                *best = Some(cert);
            }
            return;
        }
        let mut cell_sizes = vec![0usize; ncolors];
        for &c in &colors {
            cell_sizes[c as usize] += 1;
        }
        let target = cell_sizes.iter().position(|&s| s > 1).unwrap() as u32;
        for v in 0..self.size() {
            if colors[v] != target {
                continue;
            }
            let split: Vec<u32> = colors
                .iter()
                .enumerate()
                .map(|(u, &c)| if c < target || u == v { c } else { c + 1 })
                .collect();
            self.search(split, best);
        }
    }

    /// Refines `colors` to the coarsest equitable partition below it.
    /// Colour ids stay dense and ordered by their signatures, so the
    /// result depends only on the isomorphism class of the coloured poset.
    fn refine(&self, colors: &mut [u32]) -> usize {
        let mut count = distinct(colors);
        loop {
            let sigs: Vec<(u32, Vec<u32>, Vec<u32>)> = (0..self.size())
                .map(|v| {
                    let mut up: Vec<u32> = self.up[v].iter().map(|&u| colors[u]).collect();
                    let mut down: Vec<u32> = self.down[v].iter().map(|&u| colors[u]).collect();
                    up.sort_unstable();
                    down.sort_unstable();
                    (colors[v], up, down)
                })
                .collect();
            let mut ids: BTreeMap<&(u32, Vec<u32>, Vec<u32>), u32> = BTreeMap::new();
            for s in &sigs {
                ids.insert(s, 0);
            }
            for (i, id) in ids.values_mut().enumerate() {
                *id = i as u32;
            }
            let next = ids.len();
            for (c, s) in colors.iter_mut().zip(&sigs) {
                *c = ids[s];
            }
            if next == count {
                return count;
            }
            count = next;
        }
    }

    fn encode(&self, labels: &[u32]) -> Vec<u8> {
        let n = self.size();
        let mut by_label = vec![0usize; n];
        for (v, &l) in labels.iter().enumerate() {
            by_label[l as usize] = v;
        }
        let mut edges: Vec<(u32, u32)> = self
            .covers()
            .into_iter()
            .map(|(a, b)| (labels[a], labels[b]))
            .collect();
        edges.sort_unstable();
        let mut out = Vec::with_capacity(4 * (2 + n + 2 * edges.len()));
        out.extend_from_slice(&(n as u32).to_be_bytes());
        for &v in &by_label {
            out.extend_from_slice(&(self.ranks[v] as u32).to_be_bytes());
        }
        out.extend_from_slice(&(edges.len() as u32).to_be_bytes());
        for (a, b) in edges {
            out.extend_from_slice(&a.to_be_bytes());
            out.extend_from_slice(&b.to_be_bytes());
        }
        out
    }

    /// Renders the Hasse diagram as a DOT digraph with covers pointing
    /// upward and one `rank=same` group per rank.
    pub fn to_dot(&self, labels: Option<&[String]>) -> String {
        let name = |v: usize| match labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        };
        let mut out = String::new();
        out.push_str("digraph poset {\n  rankdir=BT;\n  node [shape=plaintext];\n");
        for v in 0..self.size() {
            let _ = writeln!(out, "  n{v} [label=\"{}\"];", name(v));
        }
        for r in 0..=self.length() {
            let members: Vec<String> = (0..self.size())
                .filter(|&v| self.ranks[v] == r)
                .map(|v| format!("n{v};"))
                .collect();
            let _ = writeln!(out, "  {{ rank=same; {} }}", members.join(" "));
        }
        for (a, b) in self.covers() {
            let _ = writeln!(out, "  n{a} -> n{b};");
        }
        out.push_str("}\n");
        out
    }
}

fn distinct(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

pub fn is_isomorphic(p: &RankedPoset, q: &RankedPoset) -> bool {
    p.is_isomorphic(q)
}
