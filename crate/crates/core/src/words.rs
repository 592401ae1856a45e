//! Words in the simple reflections and the sets `R(w)` of reduced words.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A string of generator subscripts. Letters are plain integers so that
/// shifted words may leave the generator range.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<i32>);

impl Word {
    pub fn new(letters: Vec<i32>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(parts: &[&Word]) -> Word {
        Word(parts.iter().flat_map(|w| w.0.iter().copied()).collect())
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Adds `t` to every letter.
    pub fn shift(&self, t: i32) -> Word {
        Word(self.0.iter().map(|&a| a + t).collect())
    }

    /// Removes the consecutive block `start..start + len`.
    pub fn delete_factor(&self, start: usize, len: usize) -> Result<Word> {
        if start + len > self.len() {
            return Err(Error::RangeOutOfBounds {
                start,
                len,
                size: self.len(),
            });
        }
        let mut out = self.0[..start].to_vec();
        out.extend_from_slice(&self.0[start + len..]);
        Ok(Word(out))
    }

    pub fn factor(&self, start: usize, len: usize) -> Result<Word> {
        if start + len > self.len() {
            return Err(Error::RangeOutOfBounds {
                start,
                len,
                size: self.len(),
            });
        }
        Ok(Word(self.0[start..start + len].to_vec()))
    }

    /// Whether `self` occurs in `other` as a (not necessarily consecutive)
    /// subsequence.
    pub fn is_subword_of(&self, other: &Word) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|a| it.any(|b| b == a))
    }

    /// Product of the simple reflections named by the letters, in `S_n`.
    pub fn evaluate(&self, n: usize) -> Result<Permutation> {
        let mut w = Permutation::identity(n)?;
        for &a in &self.0 {
            if a < 1 || a as usize >= n {
                return Err(Error::LetterOutOfRange { letter: a, n });
            }
            w = w.swap_positions(a as usize - 1, a as usize);
        }
        Ok(w)
    }

    pub fn is_reduced(&self, n: usize) -> Result<bool> {
        Ok(self.evaluate(n)?.length() == self.len())
    }

    /// Every word reachable by one commutation or braid move.
    pub fn coxeter_neighbors(&self) -> Vec<Word> {
        let a = &self.0;
        let mut out = Vec::new();
        for i in 0..a.len().saturating_sub(1) {
            if (a[i] - a[i + 1]).abs() > 1 {
                let mut b = a.clone();
                b.swap(i, i + 1);
                out.push(Word(b));
            }
        }
        for i in 0..a.len().saturating_sub(2) {
            if a[i] == a[i + 2] && (a[i] - a[i + 1]).abs() == 1 {
                let mut b = a.clone();
                b[i] = a[i + 1];
                b[i + 1] = a[i];
                b[i + 2] = a[i + 1];
                out.push(Word(b));
            }
        }
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&a| (0..=9).contains(&a)) {
            for a in &self.0 {
                write!(f, "{a}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
            // A lone multi-digit letter needs a separator to stay one letter.
            let tail = if parts.len() == 1 { "," } else { "" };
            write!(f, "{}{tail}", parts.join(" "))
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?})", self.to_string())
    }
}

/// Accepts `1213` (one digit per letter) or whitespace/comma separated
/// integers, which may be negative.
impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let err = || Error::Parse {
            input: s.to_string(),
            reason: "expected generator letters".to_string(),
        };
        if s.contains(|c: char| c.is_whitespace() || c == ',' || c == '-') {
            s.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<i32>().map_err(|_| err()))
                .collect::<Result<Vec<_>>>()
                .map(Word)
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as i32).ok_or_else(err))
                .collect::<Result<Vec<_>>>()
                .map(Word)
        }
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The complete set `R(w)`, sorted lexicographically by letter sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedWordSet {
    pub owner: Permutation,
    pub words: Vec<Word>,
}

impl ReducedWordSet {
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, word: &Word) -> bool {
        self.words.binary_search(word).is_ok()
    }
}

/// Serializes as a sorted array of word strings.
impl Serialize for ReducedWordSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.words.serialize(serializer)
    }
}

/// `|R(w)|` by right-descent recursion, memoized by permutation.
pub fn count_reduced_words(w: &Permutation) -> u128 {
    fn go(w: Permutation, memo: &mut HashMap<Permutation, u128>) -> u128 {
        if w.is_identity() {
            return 1;
        }
        if let Some(&c) = memo.get(&w) {
            return c;
        }
        let total = (1..w.n())
            .filter(|&i| w.is_right_descent(i))
            .map(|i| go(w.swap_positions(i - 1, i), memo))
            .sum();
        memo.insert(w, total);
        total
    }
    go(*w, &mut HashMap::new())
}

/// `R(w)` under the default caps.
pub fn reduced_words(w: &Permutation) -> Result<ReducedWordSet> {
    reduced_words_capped(w, &Caps::default())
}

pub fn reduced_words_capped(w: &Permutation, caps: &Caps) -> Result<ReducedWordSet> {
    caps.check_perm(w)?;
    let length = w.length();
    if length > caps.max_length {
        return Err(Error::LengthCapExceeded {
            length,
            cap: caps.max_length,
        });
    }
    let count = count_reduced_words(w);
    if count > caps.max_words as u128 {
        return Err(Error::WordCountCapExceeded {
            count,
            cap: caps.max_words,
        });
    }
    let mut words = Vec::with_capacity(count as usize);
    let mut prefix = Vec::with_capacity(length);
    // Peeling left descents in increasing order yields lexicographic order.
    fn go(w: Permutation, prefix: &mut Vec<i32>, out: &mut Vec<Word>) {
        if w.is_identity() {
            out.push(Word(prefix.clone()));
            return;
        }
        for i in 1..w.n() {
            if w.is_left_descent(i) {
                prefix.push(i as i32);
                go(w.swap_values(i, i + 1), prefix, out);
                prefix.pop();
            }
        }
    }
    go(*w, &mut prefix, &mut words);
    debug_assert_eq!(words.len() as u128, count);
    Ok(ReducedWordSet { owner: *w, words })
}

/// The lexicographically least element of `R(w)`.
pub fn lex_least_reduced_word(w: &Permutation) -> Word {
    let mut cur = *w;
    let mut out = Vec::with_capacity(w.length());
    while let Some(i) = (1..cur.n()).find(|&i| cur.is_left_descent(i)) {
        out.push(i as i32);
        cur = cur.swap_values(i, i + 1);
    }
    Word(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn evaluation() {
        assert_eq!(w("1213").evaluate(4).unwrap(), p("3241"));
        assert_eq!(w("").evaluate(4).unwrap(), p("1234"));
        assert_eq!(w("123").evaluate(4).unwrap(), p("2341"));
        assert_eq!(
            w("14").evaluate(4),
            Err(Error::LetterOutOfRange { letter: 4, n: 4 })
        );
        assert!(w("0").evaluate(4).is_err());
    }

    #[test]
    fn reducedness() {
        assert!(w("1213").is_reduced(4).unwrap());
        assert!(!w("133231").is_reduced(4).unwrap());
        assert_eq!(w("133231").evaluate(4).unwrap(), p("3241"));
        assert!(w("").is_reduced(4).unwrap());
        assert!(w("5").is_reduced(4).is_err());
    }

    #[test]
    fn shifting() {
        let s = Word(vec![5, -1, 0]);
        assert_eq!(s.shift(4), Word(vec![9, 3, 4]));
        assert_eq!(s.shift(-4), Word(vec![1, -5, -4]));
        assert_eq!(s.shift(0), s);
        assert_eq!(s.shift(-4).to_string(), "1 -5 -4");
        assert_eq!("1 -5 -4".parse::<Word>().unwrap(), s.shift(-4));
    }

    #[test]
    fn factor_deletion_on_words() {
        assert_eq!(w("1213").delete_factor(1, 2).unwrap(), w("13"));
        assert_eq!(w("1213").delete_factor(0, 4).unwrap(), w(""));
        assert_eq!(w("123").delete_factor(0, 1).unwrap(), w("23"));
        assert!(w("123").delete_factor(2, 2).is_err());
    }

    #[test]
    fn subwords() {
        assert!(w("2").is_subword_of(&w("123")));
        assert!(w("").is_subword_of(&w("4321")));
        assert!(!w("21").is_subword_of(&w("12")));
        assert!(w("13").is_subword_of(&w("1213")));
    }

    #[test]
    fn small_reduced_word_sets() {
        let r = reduced_words(&p("3241")).unwrap();
        assert_eq!(r.words, vec![w("1213"), w("1231"), w("2123")]);
        let r = reduced_words(&p("12543")).unwrap();
        assert_eq!(r.words, vec![w("343"), w("434")]);
        let r = reduced_words(&p("1234")).unwrap();
        assert_eq!(r.words, vec![w("")]);
    }

    #[test]
    fn caps_are_errors() {
        let caps = Caps {
            max_n: 8,
            max_length: 5,
            max_words: 1_000_000,
        };
        assert!(matches!(
            reduced_words_capped(&Permutation::longest(4).unwrap(), &caps),
            Err(Error::LengthCapExceeded { length: 6, cap: 5 })
        ));
        let caps = Caps {
            max_words: 10,
            ..Caps::default()
        };
        assert!(matches!(
            reduced_words_capped(&Permutation::longest(4).unwrap(), &caps),
            Err(Error::WordCountCapExceeded { count: 16, cap: 10 })
        ));
        assert!(reduced_words(&Permutation::identity(9).unwrap()).is_err());
    }

    #[test]
    fn lex_least_word() {
        assert_eq!(lex_least_reduced_word(&p("3241")), w("1213"));
        assert_eq!(lex_least_reduced_word(&p("1234")), w(""));
        for x in Permutation::all(4).unwrap() {
            assert_eq!(
                lex_least_reduced_word(&x),
                reduced_words(&x).unwrap().words[0]
            );
        }
    }

    #[test]
    fn braid_and_commutation_moves() {
        let nbrs = w("1213").coxeter_neighbors();
        assert!(nbrs.contains(&w("2123")));
        assert!(nbrs.contains(&w("1231")));
        assert_eq!(nbrs.len(), 2);
    }

    #[test]
    fn json_export_is_sorted_strings() {
        let r = reduced_words(&p("3241")).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(json, r#"["1213","1231","2123"]"#);
    }
}
