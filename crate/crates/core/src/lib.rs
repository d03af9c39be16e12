//! Hurwitz orbits of Nielsen tuples over finite permutation groups.
//!
//! A datum `(t₁, …, tₙ)` over a finite group `G` describes a Galois `G`-cover
//! of the sphere with `n` branch points. The braid group acts on data by
//! Hurwitz moves; orbits of that action (together with `Aut G`) are the
//! topological types of such covers. The pure braid subgroup gives the
//! stabilizer chain `H' ⊆ H''' ⊆ H''` whose indices are the covering degrees
//! of the bases of the associated families.
//!
//! The crate is `no_std` and needs only `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod builtin;
pub mod classify;
pub mod datum;
pub mod error;
pub mod extension;
pub mod group;
pub mod hurwitz;
pub mod orbit;
pub mod perm;

pub use classify::{classify_types, enumerate_data, type_of, TypeReport};
pub use datum::{validate, BranchSignature, Datum};
pub use error::{Error, PermError, Result};
pub use extension::{
    abelian_certificate, centerless_minimum, extension_report, join, AbelianCertificate,
    ExtensionHandle, ExtensionReport, MinimalExtension,
};
pub use group::{
    automorphism_group, inner_automorphism, AutGroup, Elem, GroupAutomorphism, PermGroup,
};
pub use hurwitz::{apply_sigma, apply_word, pure_generators, BraidWord, PureGen, Sign};
pub use orbit::{
    coset_action, enumerate_orbit, intersect_actions, schreier_generators, Canon, CosetAction,
    Mover, Orbit, SchreierGenerator,
};
pub use perm::Perm;

/// Size limits shared by the enumerating operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of canonical keys in one orbit.
    pub orbit_cap: usize,
    /// Maximum number of candidate tuples `|G|^(n−1)` for data enumeration.
    pub enum_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            orbit_cap: 1_000_000,
            enum_cap: 20_000_000,
        }
    }
}
