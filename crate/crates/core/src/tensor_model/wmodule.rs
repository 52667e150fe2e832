use super::TensorError;
use crate::exactmath::{
    int, sparse_axpy, ExactMatrix, Rational, RowEchelon, SpanSolver, SparseVec,
};
use crate::symcomb::{weyl_dimension, Partition, Permutation};
use itertools::Itertools;
use num::traits::One;
use std::collections::HashMap;

/// The M-module W = V(n_1) ⊗ .. ⊗ V(n_p) ⊗ V(ξ): p torus characters and an
/// irreducible gl(q−p) module.
#[derive(Clone, Debug)]
pub struct WModule {
    pub torus_weights: Vec<i64>,
    pub rank: usize,
    pub dim: usize,
    /// `gl[a][b]` is the matrix of E_ab on V(ξ), 0-based.
    pub gl: Vec<Vec<ExactMatrix>>,
    /// gl(q−p) weight of each basis vector.
    pub weights: Vec<Vec<i64>>,
    pub highest_weight_index: usize,
}

/// Tensor power of C^r with place-permutation action; basis tuples in
/// lexicographic order.
struct TensorPower {
    tuples: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, usize>,
}

impl TensorPower {
    fn new(r: usize, m: usize) -> Self {
        let tuples: Vec<Vec<u8>> = if m == 0 {
            vec![Vec::new()]
        } else {
            (0..m)
                .map(|_| 0..r as u8)
                .multi_cartesian_product()
                .collect()
        };
        let index = tuples
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, t)| (t, i))
            .collect();
        TensorPower { tuples, index }
    }

    /// Factor i moves to position σ(i).
    fn permute(&self, sigma: &Permutation, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&i, c) in v {
            let t = &self.tuples[i];
            let mut nt = t.clone();
            for (k, &x) in t.iter().enumerate() {
                nt[sigma.apply(k)] = x;
            }
            let unit: SparseVec = [(self.index[&nt], c.clone())].into_iter().collect();
            sparse_axpy(&mut out, &Rational::one(), &unit);
        }
        out
    }

    /// Σ_k (E_ab)_k.
    fn e_ab(&self, a: u8, b: u8, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&i, c) in v {
            let t = &self.tuples[i];
            for k in 0..t.len() {
                if t[k] == b {
                    let mut nt = t.clone();
                    nt[k] = a;
                    let unit: SparseVec = [(self.index[&nt], c.clone())].into_iter().collect();
                    sparse_axpy(&mut out, &Rational::one(), &unit);
                }
            }
        }
        out
    }
}

fn group_elements(blocks: &[Vec<usize>], m: usize) -> Vec<(Permutation, i64)> {
    // All permutations preserving each block (as sets), with signs.
    let per_block: Vec<Vec<Vec<usize>>> = blocks
        .iter()
        .map(|b| b.iter().copied().permutations(b.len()).collect())
        .collect();
    if per_block.is_empty() {
        return vec![(Permutation::identity(m), 1)];
    }
    per_block
        .iter()
        .map(|v| v.iter())
        .multi_cartesian_product()
        .map(|choice| {
            let mut img: Vec<usize> = (0..m).collect();
            for (b, perm) in blocks.iter().zip(choice) {
                for (k, &x) in b.iter().enumerate() {
                    img[x] = perm[k];
                }
            }
            let p = Permutation::from_images(img);
            let s = p.sign();
            (p, s)
        })
        .collect()
}

/// Irreducible gl_r module of highest weight ξ, as the image of a Young
/// symmetrizer twisted by a power of the determinant.
pub fn irreducible_gl(
    xi: &[i64],
) -> Result<(usize, Vec<Vec<ExactMatrix>>, Vec<Vec<i64>>, usize), TensorError> {
    let r = xi.len();
    if r == 0 {
        return Ok((1, Vec::new(), vec![Vec::new()], 0));
    }
    let shift = xi[r - 1];
    let lam: Vec<usize> = xi.iter().map(|&x| (x - shift) as usize).collect();
    let shape = Partition::from_weakly_decreasing(lam.clone())
        .map_err(|e| TensorError::Invalid(e.to_string()))?;
    let m = shape.size();
    let tp = TensorPower::new(r, m);
    // Row-filled tableau: rows and columns as sets of positions 0..m.
    let mut rows = Vec::new();
    let mut next = 0;
    for &len in shape.parts() {
        rows.push((next..next + len).collect::<Vec<usize>>());
        next += len;
    }
    let width = shape.parts().first().copied().unwrap_or(0);
    let cols: Vec<Vec<usize>> = (0..width)
        .map(|c| rows.iter().filter(|r| r.len() > c).map(|r| r[c]).collect())
        .collect();
    let row_group = group_elements(&rows, m);
    let col_group = group_elements(&cols, m);
    let symmetrize = |v: &SparseVec| -> SparseVec {
        let mut a = SparseVec::new();
        for (g, _) in &row_group {
            sparse_axpy(&mut a, &Rational::one(), &tp.permute(g, v));
        }
        let mut b = SparseVec::new();
        for (g, s) in &col_group {
            sparse_axpy(&mut b, &int(*s), &tp.permute(g, &a));
        }
        b
    };
    let mut ech = RowEchelon::new(tp.tuples.len());
    let mut basis: Vec<SparseVec> = Vec::new();
    let mut weights: Vec<Vec<i64>> = Vec::new();
    for (i, t) in tp.tuples.iter().enumerate() {
        let unit: SparseVec = [(i, Rational::one())].into_iter().collect();
        let img = symmetrize(&unit);
        if !img.is_empty() && ech.insert(img.clone()) {
            basis.push(img);
            let mut w = vec![shift; r];
            for &x in t {
                w[x as usize] += 1;
            }
            weights.push(w);
        }
    }
    let dim = basis.len();
    let weyl = weyl_dimension(xi);
    if int(dim as i64) != weyl {
        return Err(TensorError::Invalid(format!(
            "Young symmetrizer image has dim {} but Weyl dimension is {}",
            dim, weyl
        )));
    }
    let solver = SpanSolver::new(tp.tuples.len(), &basis);
    let mut gl = vec![vec![ExactMatrix::zeros(dim, dim); r]; r];
    for a in 0..r {
        for b in 0..r {
            let mut mat = ExactMatrix::zeros(dim, dim);
            for (j, v) in basis.iter().enumerate() {
                let img = tp.e_ab(a as u8, b as u8, v);
                let c = solver
                    .coordinates(&img)
                    .ok_or_else(|| TensorError::Invalid("V(ξ) not gl-stable".into()))?;
                for (i, x) in c.into_iter().enumerate() {
                    mat.set(i, j, x);
                }
            }
            if a == b && shift != 0 {
                mat = mat.add_matrix(&ExactMatrix::scalar(dim, &int(shift)));
            }
            gl[a][b] = mat;
        }
    }
    let hw = weights
        .iter()
        .position(|w| w.as_slice() == xi)
        .ok_or_else(|| TensorError::Invalid("no highest weight vector".into()))?;
    Ok((dim, gl, weights, hw))
}

impl WModule {
    pub fn new(torus_weights: Vec<i64>, xi: &[i64]) -> Result<Self, TensorError> {
        let (dim, gl, weights, hw) = irreducible_gl(xi)?;
        Ok(WModule {
            torus_weights,
            rank: xi.len(),
            dim,
            gl,
            weights,
            highest_weight_index: hw,
        })
    }

    /// Checks [E_ab, E_cd] = δ_bc E_ad − δ_da E_cb.
    pub fn check_commutators(&self) -> bool {
        let r = self.rank;
        for a in 0..r {
            for b in 0..r {
                for c in 0..r {
                    for d in 0..r {
                        let lhs = self.gl[a][b].commutator(&self.gl[c][d]);
                        let mut rhs = ExactMatrix::zeros(self.dim, self.dim);
                        if b == c {
                            rhs = rhs.add_matrix(&self.gl[a][d]);
                        }
                        if d == a {
                            rhs = rhs.sub_matrix(&self.gl[c][b]);
                        }
                        if lhs != rhs {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn is_diagonal_weight_basis(&self) -> bool {
        (0..self.rank).all(|a| {
            let d: Vec<Rational> = self.weights.iter().map(|w| int(w[a])).collect();
            self.gl[a][a] == ExactMatrix::diagonal(&d)
        })
    }
}
