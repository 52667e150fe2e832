use super::presentation::{Combination, DahaPresentation, Generator};
use super::DahaError;
use crate::exactmath::{ExactMatrix, Rational};
use serde::Serialize;
use std::collections::BTreeMap;

/// Assignment of a square matrix to every generator.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearRep {
    pub dim: usize,
    pub matrices: BTreeMap<Generator, ExactMatrix>,
}

impl LinearRep {
    pub fn new(dim: usize) -> Self {
        LinearRep {
            dim,
            matrices: BTreeMap::new(),
        }
    }

    pub fn with(mut self, g: Generator, m: ExactMatrix) -> Self {
        self.matrices.insert(g, m);
        self
    }

    pub fn get(&self, g: Generator) -> Option<&ExactMatrix> {
        self.matrices.get(&g)
    }

    /// y_i ↦ c·y_i, other generators unchanged.
    pub fn scale_y(&self, c: &Rational) -> LinearRep {
        let matrices = self
            .matrices
            .iter()
            .map(|(g, m)| {
                (
                    *g,
                    if matches!(g, Generator::Y(_)) {
                        m.scale(c)
                    } else {
                        m.clone()
                    },
                )
            })
            .collect();
        LinearRep {
            dim: self.dim,
            matrices,
        }
    }

    pub fn evaluate(&self, comb: &Combination) -> Result<ExactMatrix, DahaError> {
        let mut acc = ExactMatrix::zeros(self.dim, self.dim);
        for (c, word) in comb {
            let mut m = ExactMatrix::identity(self.dim);
            for g in word {
                let x = self
                    .matrices
                    .get(g)
                    .ok_or(DahaError::MissingGenerator(*g))?;
                m = m.matmul(x);
            }
            acc = acc.add_matrix(&m.scale(c));
        }
        Ok(acc)
    }

    fn check_shapes(&self, pres: &DahaPresentation) -> Result<(), DahaError> {
        for g in &pres.generators {
            let m = self
                .matrices
                .get(g)
                .ok_or(DahaError::MissingGenerator(*g))?;
            if m.nrows() != self.dim || m.ncols() != self.dim {
                return Err(DahaError::Shape {
                    generator: *g,
                    rows: m.nrows(),
                    cols: m.ncols(),
                    dim: self.dim,
                });
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub passed: bool,
    /// Largest entry of lhs − rhs, as (row, col, value).
    pub worst_entry: Option<(usize, usize, String)>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub dim: usize,
    pub checks: Vec<RelationCheck>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&RelationCheck> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

/// Checks every relation of the presentation on the matrices.
pub fn verify_linear_rep(
    pres: &DahaPresentation,
    rep: &LinearRep,
) -> Result<VerificationReport, DahaError> {
    rep.check_shapes(pres)?;
    let mut checks = Vec::with_capacity(pres.relations.len());
    for rel in &pres.relations {
        let diff = rep.evaluate(&rel.lhs)?.sub_matrix(&rep.evaluate(&rel.rhs)?);
        let worst = diff.max_abs_entry().map(|(i, j, x)| (i, j, x.to_string()));
        checks.push(RelationCheck {
            relation: rel.name.clone(),
            passed: worst.is_none(),
            worst_entry: worst,
        });
    }
    Ok(VerificationReport {
        dim: rep.dim,
        checks,
    })
}
