//! Exact finite ring theory on operation tables.
//!
//! Rings are carried as indexed carriers `0..order` with total addition and
//! multiplication tables; every algorithm here is table lookup and exhaustive
//! scan, so results are exact. The crate provides:
//!
//! - [`FiniteRing`], ideals, quotients, generated subrings, isomorphism search
//!   and the degenerate localization of a finite ring;
//! - nilpotent sets, the lower nilradical (two independent algorithms), the
//!   upper nilradical and the ring-class predicates built on them;
//! - finite and structured infinite monoids with bounded fragments;
//! - finite-support monoid-ring elements, skew products and materialized
//!   monoid rings of finite monoids;
//! - matrix-shaped constructions (triangular, full, `H_3`, skew triangular
//!   subrings, truncated skew polynomials);
//! - bounded exhaustive deciders for the Armendariz-type conditions relative
//!   to a monoid, with re-verified witnesses.
//!
//! The crate is `no_std` and needs only `alloc`. IO, catalogs and the CLI live
//! in the `ringlab` companion crate.

#![cfg_attr(not(test), no_std)]
#![warn(missing_debug_implementations)]

extern crate alloc;

pub mod construct;
pub mod error;
pub mod ideal;
pub mod iso;
pub mod localize;
pub mod monoid;
pub mod monoid_ring;
pub mod radical;
pub mod ring;
pub mod set;
pub mod verdict;

pub use error::{Error, Result};
pub use ideal::Ideal;
pub use monoid::{Monoid, MonoidElem, MonoidFragment};
pub use monoid_ring::{MonoidRing, MonoidRingElement};
pub use radical::{ClassFlags, RadicalProfile};
pub use ring::{FiniteRing, RingMap};
pub use set::ElemSet;
pub use verdict::{Variant, Verdict};

/// Largest carrier size for a table ring.
pub const RING_SIZE_CAP: usize = 4096;

/// Largest carrier size for which all ideals are enumerated.
pub const IDEAL_ENUMERATION_CAP: usize = 64;
