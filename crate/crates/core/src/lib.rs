//! Bruhat order on the symmetric groups.
//!
//! The crate covers permutations and reduced words, Bruhat intervals and
//! principal order ideals as ranked posets, isomorphism certificates for
//! those posets, and a bounded search deciding whether every interval
//! shaped like `Λ(w)` arises by deleting a single factor from a reduced
//! word of its top element.

pub mod atlas;
pub mod bruhat;
pub mod caps;
pub mod error;
pub mod forcing;
pub mod perm;
pub mod poset;
pub mod structure;
pub mod words;

pub use atlas::{atlas, Atlas, AtlasOptions, AtlasRow};
pub use bruhat::{
    bruhat_leq, coatom_avoiding_position, covers_above, covers_below, ideal, interval, Ideal,
    Interval,
};
pub use caps::Caps;
pub use error::{Error, Result};
pub use forcing::{
    factor_deletion, forces_factor, intervals_isomorphic_to, FactorCertificate, ForcingVerdict,
    Outcome, SearchOptions, VerdictReport,
};
pub use perm::{Permutation, SimpleReflection};
pub use poset::{is_isomorphic, CanonicalForm, RankedPoset};
pub use structure::{
    decompose, detect_swap_string, is_thin, nonforcing_witness, swap_string_factorization,
    Decomposition, NonForcingWitness, SwapFactorization, SwapString,
};
pub use words::{reduced_words, ReducedWordSet, Word};
