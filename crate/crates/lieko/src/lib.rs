//! Exact-arithmetic toolkit for finite-dimensional Lie algebras given by
//! structure constants: Chevalley-Eilenberg homology, Killing modules,
//! (reduced) Koszul maps, invariant bilinear forms, and the second homology
//! of current Lie algebras, over the rationals, odd prime fields, and
//! finite-dimensional commutative coefficient algebras.

pub mod catalog;
pub mod current;
pub mod homology;
pub mod koszul;
pub mod lie;
pub mod linalg;
pub mod scalars;
