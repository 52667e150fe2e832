//! Exact rational arithmetic, sparse matrices and multivariate polynomials.

pub mod matrix;
pub mod poly;
pub mod rational;

pub use matrix::{
    dense_to_sparse, sparse_axpy, sparse_scale, sparse_to_dense, ExactMatrix, RowEchelon,
    SpanSolver, SparseVec,
};
pub use poly::{Binding, MultiPoly, PolyError};
pub use rational::{
    format_rational, half, int, is_integer, one, parse_rational, rat, serde_rational, to_i64,
    to_usize, zero, ParseRationalError, Rational,
};
