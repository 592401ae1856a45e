//! Reference implementations that share no code with the library. They
//! work on plain `Vec<u8>` one-line notation and favour obviousness over
//! speed.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet};

pub type Perm = Vec<u8>;

pub fn identity(n: usize) -> Perm {
    (1..=n as u8).collect()
}

pub fn longest(n: usize) -> Perm {
    (1..=n as u8).rev().collect()
}

/// `p · s_i`: swap positions `i` and `i + 1` (1-based).
pub fn times(p: &Perm, i: usize) -> Perm {
    let mut q = p.clone();
    q.swap(i - 1, i);
    q
}

pub fn eval(word: &[usize], n: usize) -> Perm {
    word.iter().fold(identity(n), |p, &i| times(&p, i))
}

pub fn inversions(p: &Perm) -> usize {
    let mut c = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                c += 1;
            }
        }
    }
    c
}

pub fn all_perms(n: usize) -> Vec<Perm> {
    fn go(prefix: &mut Perm, left: &mut Vec<u8>, out: &mut Vec<Perm>) {
        if left.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for k in 0..left.len() {
            let v = left.remove(k);
            prefix.push(v);
            go(prefix, left, out);
            prefix.pop();
            left.insert(k, v);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut identity(n), &mut out);
    out
}

pub fn parse(s: &str) -> Perm {
    s.bytes().map(|b| b - b'0').collect()
}

pub fn show(p: &Perm) -> String {
    p.iter().map(|v| v.to_string()).collect()
}

pub fn word_string(w: &[usize]) -> String {
    w.iter().map(|v| v.to_string()).collect()
}

/// Every word of length `ℓ(p)` over `1..n` whose product is `p`, found by
/// trying all `(n−1)^ℓ` words.
pub fn brute_force_reduced_words(p: &Perm) -> BTreeSet<String> {
    let n = p.len();
    let len = inversions(p);
    let mut out = BTreeSet::new();
    let mut word = Vec::with_capacity(len);
    let mut stack = vec![identity(n)];
    fn go(
        p: &Perm,
        n: usize,
        len: usize,
        word: &mut Vec<usize>,
        stack: &mut Vec<Perm>,
        out: &mut BTreeSet<String>,
    ) {
        if word.len() == len {
            if stack.last().unwrap() == p {
                out.insert(word_string(word));
            }
            return;
        }
        for i in 1..n {
            let next = times(stack.last().unwrap(), i);
            word.push(i);
            stack.push(next);
            go(p, n, len, word, stack, out);
            stack.pop();
            word.pop();
        }
    }
    go(p, n, len, &mut word, &mut stack, &mut out);
    out
}

/// Reduced words by peeling right descents.
pub fn reduced_words(p: &Perm) -> BTreeSet<String> {
    fn go(p: &Perm, memo: &mut HashMap<Perm, Vec<Vec<usize>>>) -> Vec<Vec<usize>> {
        if let Some(v) = memo.get(p) {
            return v.clone();
        }
        let mut out = Vec::new();
        let mut descent = false;
        for i in 1..p.len() {
            if p[i - 1] > p[i] {
                descent = true;
                for mut w in go(&times(p, i), memo) {
                    w.push(i);
                    out.push(w);
                }
            }
        }
        if !descent {
            out.push(Vec::new());
        }
        memo.insert(p.clone(), out.clone());
        out
    }
    go(p, &mut HashMap::new())
        .iter()
        .map(|w| word_string(w))
        .collect()
}

/// One reduced word, by bubble sort.
pub fn some_reduced_word(p: &Perm) -> Vec<usize> {
    let mut q = p.clone();
    let mut word = Vec::new();
    'outer: loop {
        for i in 1..q.len() {
            if q[i - 1] > q[i] {
                q = times(&q, i);
                word.push(i);
                continue 'outer;
            }
        }
        break;
    }
    word.reverse();
    word
}

/// The set of `x ≤ y`, by the subword property: products of reduced
/// subwords of one reduced word of `y`.
pub fn subword_down_set(y: &Perm) -> HashSet<Perm> {
    let word = some_reduced_word(y);
    let mut out = HashSet::new();
    for mask in 0u32..(1 << word.len()) {
        let sub: Vec<usize> = (0..word.len())
            .filter(|b| mask >> b & 1 == 1)
            .map(|b| word[b])
            .collect();
        let p = eval(&sub, y.len());
        if inversions(&p) == sub.len() {
            out.insert(p);
        }
    }
    out
}

/// Bruhat order on all of `S_n`, with membership by subword products.
pub struct Order {
    pub perms: Vec<Perm>,
    pub index: HashMap<Perm, usize>,
    pub length: Vec<usize>,
    down: Vec<HashSet<usize>>,
}

impl Order {
    pub fn new(n: usize) -> Self {
        let perms = all_perms(n);
        let index: HashMap<Perm, usize> = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let length = perms.iter().map(inversions).collect();
        let down = perms
            .iter()
            .map(|y| subword_down_set(y).iter().map(|p| index[p]).collect())
            .collect();
        Order {
            perms,
            index,
            length,
            down,
        }
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.down[y].contains(&x)
    }

    /// Elements of `[x, y]` and their cover relations, as a graded diagram.
    pub fn interval(&self, x: usize, y: usize) -> Diagram {
        let elems: Vec<usize> = (0..self.perms.len())
            .filter(|&z| self.leq(x, z) && self.leq(z, y))
            .collect();
        let ranks = elems
            .iter()
            .map(|&z| self.length[z] - self.length[x])
            .collect();
        let mut covers = Vec::new();
        for (a, &u) in elems.iter().enumerate() {
            for (b, &v) in elems.iter().enumerate() {
                if self.length[v] == self.length[u] + 1 && self.leq(u, v) {
                    covers.push((a, b));
                }
            }
        }
        Diagram { ranks, covers }
    }
}

#[derive(Debug, Clone)]
pub struct Diagram {
    pub ranks: Vec<usize>,
    pub covers: Vec<(usize, usize)>,
}

/// Backtracking search for a rank- and cover-preserving bijection.
pub fn brute_isomorphic(a: &Diagram, b: &Diagram) -> bool {
    let n = a.ranks.len();
    if n != b.ranks.len() || a.covers.len() != b.covers.len() {
        return false;
    }
    let adj = |d: &Diagram| {
        let mut m = vec![vec![false; n]; n];
        for &(u, v) in &d.covers {
            m[u][v] = true;
        }
        m
    };
    let (ea, eb) = (adj(a), adj(b));
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        k: usize,
        a: &Diagram,
        b: &Diagram,
        ea: &[Vec<bool>],
        eb: &[Vec<bool>],
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let n = image.len();
        if k == n {
            return true;
        }
        for t in 0..n {
            if used[t] || a.ranks[k] != b.ranks[t] {
                continue;
            }
            let consistent =
                (0..k).all(|j| ea[j][k] == eb[image[j]][t] && ea[k][j] == eb[t][image[j]]);
            if !consistent {
                continue;
            }
            image[k] = t;
            used[t] = true;
            if go(k + 1, a, b, ea, eb, image, used) {
                return true;
            }
            used[t] = false;
        }
        image[k] = usize::MAX;
        false
    }
    go(0, a, b, &ea, &eb, &mut image, &mut used)
}

/// Whether some reduced word of `x` is a reduced word of `y` with one
/// consecutive factor removed, by scanning all of `R(y)`.
pub fn has_factor_deletion(x: &Perm, y: &Perm) -> bool {
    let rx = reduced_words(x);
    let gap = inversions(y) - inversions(x);
    reduced_words(y).iter().any(|w| {
        (0..=w.len() - gap).any(|s| {
            let mut del = String::with_capacity(w.len() - gap);
            del.push_str(&w[..s]);
            del.push_str(&w[s + gap..]);
            rx.contains(&del)
        })
    })
}
