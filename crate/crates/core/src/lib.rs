//! Counting permutations that avoid families of generalized (dashed)
//! patterns, three ways: exhaustive enumeration, linear recurrences over big
//! integers, and exact generating-function series.
//!
//! The crate is `no_std` and needs only `alloc`. IO, the command line and
//! parallel sweeps live in the `gpav` crate.

#![no_std]

extern crate alloc;

pub mod error;
pub mod families;
pub mod gf;
pub mod oracle;
pub mod perm;
pub mod recurrences;
pub mod sequence;
pub mod series;

pub use error::{Error, Result};
pub use families::{
    avoids_all, c_family, classical_centralizer_set, classical_parabolic_set, p_family,
    CentralizerReading, FamilyParams, FamilySource, Kind, PatternFamily,
};
pub use oracle::{brute_force_count, brute_force_refined, brute_force_sequence, Oracle};
pub use perm::{
    count_occurrences, format_pattern, occurs_in, order_isomorphic, parse_pattern,
    GeneralizedPattern, Permutation,
};
pub use recurrences::{
    c_sequence, p_closed_form_l1, p_sequence, reference_sequence, refined_c_boundary, Reference,
};
pub use sequence::CountSequence;
pub use series::TruncatedSeries;
