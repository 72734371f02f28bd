//! Property and class checks.

pub mod affine;
pub mod classes;
pub mod orth;
pub mod product;
pub mod square;

pub use affine::{affine_check, is_affine, AffineCertificate};
pub use classes::{
    bell_property, class_membership, closure_check, in_single_tensor, is_local_affine, strong_bell_property, ClosureFamily,
    MergeReport, SigClass,
};
pub use orth::{block_inner, first_orth, second_orth, second_orth_consequences, ConsequenceReport, OrthReport};
pub use product::{is_product_type, product_type_check, ProductWitness};
pub use square::{classify_square, enumerate_distance2_squares, Square, SquareKind, SquareType};
