//! Exact construction and verification of compact quantum semigroups built
//! as free products of finite-dimensional *-algebras, together with the
//! quantum family of all maps from a finite set into such an object.
//!
//! The symbolic layer works over exact Gaussian rationals; every identity
//! check is a decidable zero test in a reduced-word normal form. Numeric
//! layers ([`characters`], [`funcmodel`]) handle the character variety of a
//! small presentation and a concrete matrix-function model of `ℂ² ⋆ ℂ²`.

pub mod algebra;
pub mod characters;
pub mod cli;
pub mod error;
pub mod expr;
pub mod funcmodel;
pub mod morphism;
pub mod presentation;
pub mod products;
pub mod qsg;
pub mod scalar;

pub use algebra::{Algebra, AlgebraRef, Element, Key};
pub use error::AlgebraError;
pub use expr::NCExpr;
pub use morphism::Morphism;
pub use presentation::Presentation;
pub use scalar::Scalar;
