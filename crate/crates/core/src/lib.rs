//! Exact construction and verification of degenerate affine Hecke algebra
//! modules of type BC_n arising from principal series of U(p,q).

pub mod central_char;
pub mod daha;
pub mod exactmath;
pub mod functor_image;
pub mod selftest;
pub mod symcomb;
pub mod tensor_model;
pub mod verify;
