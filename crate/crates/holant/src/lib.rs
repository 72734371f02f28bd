//! Boolean Holant signatures with exact arithmetic over Q(sqrt2, i):
//! gadget constructions, holographic transformations, tensor factorization,
//! the property checks used by the dichotomy, and a sound classifier.

pub mod catalog;
pub mod claims;
pub mod classify;
pub mod error;
pub mod factor;
pub mod gadget;
pub mod holographic;
pub mod io;
pub mod matrix;
pub mod props;
pub mod random;
pub mod signature;

pub use error::{HolantError, Result};
pub use exact_field::ExactNumber;
pub use holographic::Transform2x2;
pub use matrix::Matrix;
pub use signature::{Parity, Signature};
