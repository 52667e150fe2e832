use super::partition::Partition;
use super::perm::Permutation;
use super::tableau::{enumerate_standard_tableaux, StandardTableau};
use crate::exactmath::{sparse_axpy, ExactMatrix, Rational, SpanSolver, SparseVec};
use itertools::Itertools;
use num::traits::One;
use std::collections::HashMap;

/// A tabloid, recorded as the row index of each entry 1..=m.
pub type Tabloid = Vec<u8>;

/// Specht module of a partition, realized on polytabloids inside the
/// permutation module spanned by tabloids.
#[derive(Clone, Debug)]
pub struct SpechtModule {
    shape: Partition,
    tableaux: Vec<StandardTableau>,
    tabloids: Vec<Tabloid>,
    index: HashMap<Tabloid, usize>,
    polytabloids: Vec<SparseVec>,
    solver: SpanSolver,
}

fn all_tabloids(shape: &Partition) -> Vec<Tabloid> {
    fn rec(left: &mut Vec<usize>, cur: &mut Tabloid, out: &mut Vec<Tabloid>, m: usize) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for r in 0..left.len() {
            if left[r] > 0 {
                left[r] -= 1;
                cur.push(r as u8);
                rec(left, cur, out, m);
                cur.pop();
                left[r] += 1;
            }
        }
    }
    let mut out = Vec::new();
    rec(
        &mut shape.parts().to_vec(),
        &mut Vec::new(),
        &mut out,
        shape.size(),
    );
    out
}

impl SpechtModule {
    pub fn new(shape: &Partition) -> Self {
        let tableaux = enumerate_standard_tableaux(shape);
        let tabloids = all_tabloids(shape);
        let index: HashMap<Tabloid, usize> = tabloids
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, t)| (t, i))
            .collect();
        let mut me = SpechtModule {
            shape: shape.clone(),
            tableaux,
            tabloids,
            index,
            polytabloids: Vec::new(),
            solver: SpanSolver::new(0, &[]),
        };
        me.polytabloids = me
            .tableaux
            .iter()
            .map(|t| me.polytabloid(t.rows()))
            .collect();
        me.solver = SpanSolver::new(me.tabloids.len(), &me.polytabloids);
        assert_eq!(
            me.solver.rank(),
            me.tableaux.len(),
            "polytabloids of standard tableaux must be independent"
        );
        me
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    pub fn degree(&self) -> usize {
        self.shape.size()
    }

    pub fn tableaux(&self) -> &[StandardTableau] {
        &self.tableaux
    }

    pub fn tabloids(&self) -> &[Tabloid] {
        &self.tabloids
    }

    /// Polytabloid of the standard tableau with index `s`, in tabloid coordinates.
    pub fn polytabloid_vector(&self, s: usize) -> &SparseVec {
        &self.polytabloids[s]
    }

    /// e_T = Σ_{σ in column group} sgn(σ) {σT} for an arbitrary filling of the shape.
    pub fn polytabloid(&self, rows: &[Vec<usize>]) -> SparseVec {
        let m = self.degree();
        let mut base: Tabloid = vec![0; m];
        for (r, row) in rows.iter().enumerate() {
            for &e in row {
                base[e - 1] = r as u8;
            }
        }
        let width = rows.first().map_or(0, |r| r.len());
        let cols: Vec<Vec<usize>> = (0..width)
            .map(|c| rows.iter().filter(|r| r.len() > c).map(|r| r[c]).collect())
            .collect();
        let col_perms: Vec<Vec<(Vec<usize>, i64)>> = cols
            .iter()
            .map(|col| {
                col.iter()
                    .copied()
                    .permutations(col.len())
                    .map(|img| {
                        let pos: Vec<usize> = img
                            .iter()
                            .map(|e| col.iter().position(|x| x == e).unwrap())
                            .collect();
                        (img, Permutation::from_images(pos).sign())
                    })
                    .collect()
            })
            .collect();
        let mut out = SparseVec::new();
        if cols.is_empty() {
            out.insert(self.index[&base], Rational::one());
            return out;
        }
        for choice in col_perms.iter().map(|v| v.iter()).multi_cartesian_product() {
            let mut t = base.clone();
            let mut sign = 1i64;
            for (col, (img, sg)) in cols.iter().zip(choice) {
                sign *= sg;
                // σ sends col[k] to img[k]; the entry img[k] now sits in col[k]'s row.
                for (k, &e) in col.iter().enumerate() {
                    t[img[k] - 1] = base[e - 1];
                }
            }
            let unit: SparseVec = [(self.index[&t], Rational::one())].into_iter().collect();
            sparse_axpy(&mut out, &Rational::from_integer(sign.into()), &unit);
        }
        out
    }

    /// Action of a permutation of {1..m} (0-based images) on a tabloid vector.
    pub fn act(&self, perm: &Permutation, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&i, c) in v {
            let t = &self.tabloids[i];
            let mut nt = vec![0u8; t.len()];
            for (x, &r) in t.iter().enumerate() {
                nt[perm.apply(x)] = r;
            }
            out.insert(self.index[&nt], c.clone());
        }
        out
    }

    /// Coordinates of a tabloid vector in the standard polytabloid basis.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Rational>> {
        self.solver.coordinates(v)
    }

    /// Matrix of a permutation in the standard polytabloid basis.
    pub fn perm_matrix(&self, perm: &Permutation) -> ExactMatrix {
        assert_eq!(perm.len(), self.degree());
        let d = self.dim();
        let mut m = ExactMatrix::zeros(d, d);
        for s in 0..d {
            let img = self.act(perm, &self.polytabloids[s]);
            let c = self
                .coordinates(&img)
                .expect("Specht module is closed under permutations");
            for (t, x) in c.into_iter().enumerate() {
                m.set(t, s, x);
            }
        }
        m
    }

    /// Matrix of the transposition (i j), 1-based.
    pub fn transposition_matrix(&self, i: usize, j: usize) -> ExactMatrix {
        self.perm_matrix(&Permutation::transposition(self.degree(), i - 1, j - 1))
    }

    /// Matrices of S_1, .., S_{m-1}.
    pub fn simple_matrices(&self) -> Vec<ExactMatrix> {
        (1..self.degree())
            .map(|i| self.transposition_matrix(i, i + 1))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_and_trivial() {
        let triv = SpechtModule::new(&Partition::new(vec![3]).unwrap());
        assert_eq!(triv.dim(), 1);
        assert_eq!(
            triv.transposition_matrix(1, 2).as_scalar(),
            Some(Rational::one())
        );
        let sgn = SpechtModule::new(&Partition::new(vec![1, 1, 1]).unwrap());
        assert_eq!(
            sgn.transposition_matrix(2, 3).as_scalar(),
            Some(-Rational::one())
        );
        let e = SpechtModule::new(&Partition::empty());
        assert_eq!(e.dim(), 1);
    }

    #[test]
    fn standard_module_is_a_representation() {
        let sp = SpechtModule::new(&Partition::new(vec![2, 1]).unwrap());
        let s = sp.simple_matrices();
        let id = ExactMatrix::identity(2);
        assert_eq!(s[0].matmul(&s[0]), id);
        assert_eq!(
            s[0].matmul(&s[1]).matmul(&s[0]),
            s[1].matmul(&s[0]).matmul(&s[1])
        );
        // Trace of a transposition in the (2,1) representation is 0.
        assert_eq!(
            s[0].get(0, 0) + s[0].get(1, 1),
            Rational::from_integer(0.into())
        );
    }
}
