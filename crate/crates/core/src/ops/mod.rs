//! Reductions, single-element extensions and ways of combining sets.
//!
//! New coordinates are always appended after the existing ones.

mod closure;
mod combine;
mod extend;
mod reduce;

pub use closure::{disjunctive_closure, is_permutative, MAX_CLOSURE_GENERATORS};
pub use combine::{
    bullet, bullet_rank_profile, diamond, direct_sum, mutual_framing, BulletRankProfile,
    FramingCase, MutualFramingVerdict, RankIdentity,
};
pub use extend::{extend, Extension};
pub use reduce::{contract, delete, puncture, DeletionResult};
