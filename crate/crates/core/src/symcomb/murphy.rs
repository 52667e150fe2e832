use super::partition::Partition;
use super::perm::Permutation;
use super::specht::SpechtModule;
use crate::exactmath::{int, ExactMatrix, Rational};
use num::traits::Zero;
use thiserror::Error;

/// Which family of Jucys–Murphy elements to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JmVariant {
    /// L_s = Σ_{j<s} S_{sj}
    L,
    /// L̂_i = Σ_{j>i} S_{ij}
    LHat,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MurphyError {
    #[error("Murphy projector annihilated the polytabloid of tableau {0}")]
    Degenerate(usize),
}

/// Jucys–Murphy matrices in the standard polytabloid basis, indexed 1..=m
/// (entry 0 corresponds to element 1).
pub fn jm_matrices(sp: &SpechtModule, variant: JmVariant) -> Vec<ExactMatrix> {
    let m = sp.degree();
    let d = sp.dim();
    (1..=m)
        .map(|s| {
            let mut acc = ExactMatrix::zeros(d, d);
            let others: Vec<usize> = match variant {
                JmVariant::L => (1..s).collect(),
                JmVariant::LHat => (s + 1..=m).collect(),
            };
            for j in others {
                acc = acc.add_matrix(&sp.transposition_matrix(s, j));
            }
            acc
        })
        .collect()
}

/// The product of transpositions S_{i, m-i+1}, i ≤ m/2: the longest element.
pub fn reversal(m: usize) -> Permutation {
    Permutation::from_images((0..m).rev().collect())
}

/// Basis of simultaneous eigenvectors for the Jucys–Murphy elements.
#[derive(Clone, Debug)]
pub struct MurphyBasis {
    pub variant: JmVariant,
    /// `vectors[s]` in polytabloid coordinates.
    pub vectors: Vec<Vec<Rational>>,
    /// `eigenvalues[s][i]`: eigenvalue of the i-th element (0-based) on `vectors[s]`.
    pub eigenvalues: Vec<Vec<Rational>>,
}

impl MurphyBasis {
    /// Matrix with the basis vectors as columns.
    pub fn change_of_basis(&self) -> ExactMatrix {
        let d = self.vectors.len();
        let mut m = ExactMatrix::zeros(d, d);
        for (s, v) in self.vectors.iter().enumerate() {
            for (t, x) in v.iter().enumerate() {
                m.set(t, s, x.clone());
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }
}

/// Murphy basis w_s = E_s e_{T_s}, E_s = Π_c Π_{i: α_{i,s} ≠ c} (c - L_i)/(c - α_{i,s})
/// with c running over -m+1..=m-1 and α_{i,s} the content of i in T_s.
/// The `LHat` variant returns ŵ_s = σ w_s with eigenvalues α̂_{i,s} = α_{m-i+1,s}
/// for i < m and 0 for i = m.
pub fn murphy_basis(shape: &Partition, variant: JmVariant) -> Result<MurphyBasis, MurphyError> {
    let sp = SpechtModule::new(shape);
    murphy_basis_of(&sp, variant)
}

pub fn murphy_basis_of(sp: &SpechtModule, variant: JmVariant) -> Result<MurphyBasis, MurphyError> {
    let m = sp.degree() as i64;
    let d = sp.dim();
    let l = jm_matrices(sp, JmVariant::L);
    let mut vectors = Vec::with_capacity(d);
    let mut eigenvalues = Vec::with_capacity(d);
    for (s, t) in sp.tableaux().iter().enumerate() {
        let alpha: Vec<Rational> = t.contents().into_iter().map(int).collect();
        let mut v: Vec<Rational> = (0..d)
            .map(|k| if k == s { int(1) } else { int(0) })
            .collect();
        for c in -m + 1..m {
            let cr = int(c);
            for (i, a) in alpha.iter().enumerate() {
                if *a == cr {
                    continue;
                }
                let lv = l[i].mul_vec(&v);
                let denom = &cr - a;
                v = v
                    .iter()
                    .zip(lv)
                    .map(|(x, y)| (&cr * x - y) / &denom)
                    .collect();
            }
        }
        if v.iter().all(|x| x.is_zero()) {
            return Err(MurphyError::Degenerate(s));
        }
        vectors.push(v);
        eigenvalues.push(alpha);
    }
    if variant == JmVariant::LHat {
        let sigma = sp.perm_matrix(&reversal(sp.degree()));
        let mm = sp.degree();
        vectors = vectors.iter().map(|v| sigma.mul_vec(v)).collect();
        eigenvalues = eigenvalues
            .iter()
            .map(|a| {
                (0..mm)
                    .map(|i| {
                        if i + 1 == mm {
                            Rational::zero()
                        } else {
                            a[mm - 1 - i].clone()
                        }
                    })
                    .collect()
            })
            .collect();
    }
    Ok(MurphyBasis {
        variant,
        vectors,
        eigenvalues,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eigenvectors_for_two_one() {
        let shape = Partition::new(vec![2, 1]).unwrap();
        let sp = SpechtModule::new(&shape);
        for variant in [JmVariant::L, JmVariant::LHat] {
            let mb = murphy_basis_of(&sp, variant).unwrap();
            let jm = jm_matrices(&sp, variant);
            for s in 0..mb.dim() {
                for (i, li) in jm.iter().enumerate() {
                    let lv = li.mul_vec(&mb.vectors[s]);
                    let ev: Vec<Rational> = mb.vectors[s]
                        .iter()
                        .map(|x| x * &mb.eigenvalues[s][i])
                        .collect();
                    assert_eq!(lv, ev);
                }
            }
        }
    }
}
