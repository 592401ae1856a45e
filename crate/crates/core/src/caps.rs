use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Bounds on enumeration work. Exceeding any of them is reported as an
/// error, never by truncating results.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Largest symmetric group an enumeration may range over.
    pub max_n: usize,
    /// Largest `ℓ(w)` for which `R(w)` may be enumerated.
    pub max_length: usize,
    /// Largest `|R(w)|` that may be materialized.
    pub max_words: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_n: 8,
            max_length: 15,
            max_words: 1_000_000,
        }
    }
}

impl Caps {
    pub fn check_n(&self, n: usize) -> Result<()> {
        if n > self.max_n {
            Err(Error::GroupTooLarge { n, max: self.max_n })
        } else {
            Ok(())
        }
    }

    pub fn check_perm(&self, w: &Permutation) -> Result<()> {
        self.check_n(w.n())
    }
}
