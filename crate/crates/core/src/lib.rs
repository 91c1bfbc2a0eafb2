//! Computing with positive permutation braids.
//!
//! The crate is organised bottom-up:
//!
//! * [`perm`] and [`braid`]: permutations, braid words, and the bijection between
//!   positive permutation braids and permutations, plus enumeration of the braids
//!   whose closure is a knot.
//! * [`garside`]: left-canonical normal forms, the word problem, and a complete
//!   conjugacy test through super summit sets.
//! * [`poly`] and [`invariants`]: exact Laurent polynomial arithmetic, the reduced
//!   Burau representation, its characteristic polynomial, Alexander polynomials of
//!   closures and identification of small knots.
//! * [`props`]: seeded randomized checks of the algebraic invariants.
//! * [`classify`]: conjugacy census of `n`-cycle permutation braids and
//!   computational checks of the classification results built on it.

pub mod braid;
pub mod classify;
pub mod error;
pub mod garside;
pub mod invariants;
pub mod perm;
pub mod poly;
pub mod props;
mod union_find;

pub use braid::{
    braid_power, closure_component_count, delete_strands, enumerate_ncycle_braids,
    is_permutation_braid, permutation_to_braid, word_to_permutation, writhe, BraidWord,
    NCycleBraid,
};
pub use error::{BraidError, Result};
pub use garside::{
    are_conjugate, complement, cycling, decycling, delta, equal_in_group, normal_form, summit_set,
    tau, Conjugacy, NormalForm, SummitCertificate, SummitSet,
};
pub use invariants::{
    alexander_of_closure, burau_char_poly, genus_of_positive_closure, identify_knot, reduced_burau,
    KnotId, KnotType,
};
pub use perm::{Permutation, SimpleFactor};
pub use poly::{LaurentPoly1, LaurentPoly2};

/// Largest supported strand count (descent sets are stored as `u64` masks).
pub const MAX_STRANDS: usize = 64;

/// Resource limits shared by the enumeration and conjugacy searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` accepted by enumeration and classification.
    pub max_n: usize,
    /// Largest super summit set that will be built before giving up.
    pub summit_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_n: 8,
            summit_cap: 100_000,
        }
    }
}
