//! Combinatorics of admissible sequences, i-box chains and the monoidal seeds
//! they carry, for untwisted affine types A, D and E.
//!
//! The crate is `no_std` (it only needs `alloc`). Everything is exact integer
//! arithmetic: Cartan data and Weyl group words ([`cartan`]), doubly-infinite
//! admissible sequences over finite windows ([`adm_seq`]), i-boxes and their
//! T-systems ([`ibox`]), admissible chains and box moves ([`chain`]), the
//! inverse quantum Cartan series and the Λ pairing ([`invariants`]), seeds
//! and mutation ([`seed`]), and a Frenkel–Mukhin q-character engine used as
//! an exact verification oracle ([`qchar`]).

#![cfg_attr(not(any(feature = "std", test)), no_std)]

extern crate alloc;

pub mod adm_seq;
pub mod cartan;
pub mod chain;
mod error;
pub mod ibox;
pub mod invariants;
pub mod laurent;
pub mod matrix;
pub mod qchar;
pub mod seed;

pub use adm_seq::{AdmissibleSeq, Interval, Orientation, Preset};
pub use cartan::{Node, RootData, TypeLabel, WeylElement};
pub use chain::{Chain, MoveKind, Step};
pub use error::{Error, Result};
pub use ibox::{IBox, KRDescriptor, TSystem};
pub use invariants::{CartanSeries, LambdaMatrix};
pub use laurent::Laurent;
pub use matrix::IntMatrix;
pub use qchar::{QCharacter, YMonomial, YPolynomial};
pub use seed::{Label, Seed};
