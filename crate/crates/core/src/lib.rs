//! Terwilliger algebras of direct products of group divisible association
//! schemes over prime fields and the rationals: a basis with closed-form
//! structure constants, the center, the radical and the Wedderburn
//! decomposition of the semisimple quotient.
//!
//! Works without `std`; only `alloc` is required.

#![no_std]

extern crate alloc;

pub mod algebra;
pub mod error;
pub mod field;
pub mod linalg;
pub mod oracle;
pub mod scheme;
pub mod structure;
pub mod subset;
pub mod triple;

pub use algebra::{AlgebraElement, B1Label, B2Label};
pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use scheme::{Color, Factor, GdParams};
pub use structure::{DLabel, WedderburnClass, WedderburnReport};
pub use subset::Subset;
pub use triple::TripleSet;
