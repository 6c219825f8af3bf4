//! Powerful sets: binary codes in which, for every set `X` of coordinates,
//! the number of codewords vanishing on `X` is a power of two.
//!
//! The crate covers the verification machinery ([`zeta`]), the rank
//! transform ([`rank`]), special elements ([`element`]), reductions,
//! extensions and combinators ([`ops`]), reconstruction from minimal members
//! ([`clutter`]), canonical forms under coordinate permutation ([`canon`]) and
//! the isomorph-free census with its conjecture and family harnesses
//! ([`enumerate`]).

pub mod canon;
pub mod clutter;
pub mod element;
pub mod enumerate;
pub mod error;
pub mod ops;
pub mod rank;
pub mod set;
pub mod text;
pub mod zeta;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use clutter::{min_members, reconstruct, Clutter, ReconstructionOutcome};
pub use element::{classify_element, ElementKind};
pub use error::{Error, Result};
pub use rank::{rank, RankValue};
pub use set::{BinarySet, Word};
pub use zeta::{count_zero_on, dim, is_linear, is_powerful, zeta_transform, Limits, ZetaTable};
