//! Degenerate affine Hecke algebras: presentations, matrix representations,
//! induction from parabolic subalgebras and intertwiners.

pub mod induce;
pub mod intertwiner;
pub mod presentation;
pub mod rep;

pub use induce::{induce_module, InductionData, SeedModule};
pub use intertwiner::{contains_isomorphism, generic_combination, intertwiner_space};
pub use presentation::{
    make_presentation, make_presentation_with, Combination, DahaParameters, DahaPresentation,
    DahaType, Generator, Relation, Word,
};
pub use rep::{verify_linear_rep, LinearRep, RelationCheck, VerificationReport};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DahaError {
    #[error("no matrix assigned to generator {0}")]
    MissingGenerator(Generator),
    #[error("matrix for {generator} is {rows}x{cols}, expected {dim}x{dim}")]
    Shape {
        generator: Generator,
        rows: usize,
        cols: usize,
        dim: usize,
    },
    #[error("induction: {0}")]
    Induction(String),
}
