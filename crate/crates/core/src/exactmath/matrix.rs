use super::rational::Rational;
use num::traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Sparse vector: index -> nonzero entry.
pub type SparseVec = BTreeMap<usize, Rational>;

pub fn sparse_axpy(y: &mut SparseVec, a: &Rational, x: &SparseVec) {
    if a.is_zero() {
        return;
    }
    for (&k, v) in x {
        let e = y.entry(k).or_insert_with(Rational::zero);
        *e += a * v;
        if e.is_zero() {
            y.remove(&k);
        }
    }
}

pub fn sparse_scale(x: &SparseVec, a: &Rational) -> SparseVec {
    if a.is_zero() {
        return SparseVec::new();
    }
    x.iter().map(|(&k, v)| (k, v * a)).collect()
}

pub fn dense_to_sparse(v: &[Rational]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn sparse_to_dense(v: &SparseVec, len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (&k, x) in v {
        out[k] = x.clone();
    }
    out
}

/// Sparse exact matrix stored by rows. Zero entries are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![SparseVec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, &Rational::one())
    }

    pub fn scalar(n: usize, c: &Rational) -> Self {
        let mut m = Self::zeros(n, n);
        if !c.is_zero() {
            for i in 0..n {
                m.data[i].insert(i, c.clone());
            }
        }
        m
    }

    pub fn diagonal(d: &[Rational]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            m.set(i, i, x.clone());
        }
        m
    }

    pub fn from_dense(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            m.data[i] = dense_to_sparse(&row);
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<SparseVec>) -> Self {
        debug_assert!(rows.iter().all(|r| r.keys().all(|&k| k < cols)));
        ExactMatrix {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    /// Matrix whose columns are the given sparse vectors.
    pub fn from_columns(rows: usize, columns: &[SparseVec]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            for (&i, x) in c {
                m.data[i].insert(j, x.clone());
            }
        }
        m
    }

    pub fn column_vector(v: &[Rational]) -> Self {
        Self::from_dense(v.iter().map(|x| vec![x.clone()]).collect())
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.data[i].get(&j).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        assert!(i < self.rows && j < self.cols);
        if v.is_zero() {
            self.data[i].remove(&j);
        } else {
            self.data[i].insert(j, v);
        }
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: &Rational) {
        if v.is_zero() {
            return;
        }
        let e = self.data[i].entry(j).or_insert_with(Rational::zero);
        *e += v;
        if e.is_zero() {
            self.data[i].remove(&j);
        }
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.data[i]
    }

    pub fn column(&self, j: usize) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, r) in self.data.iter().enumerate() {
            if let Some(x) = r.get(&j) {
                out.insert(i, x.clone());
            }
        }
        out
    }

    pub fn columns(&self) -> Vec<SparseVec> {
        let mut out = vec![SparseVec::new(); self.cols];
        for (i, r) in self.data.iter().enumerate() {
            for (&j, x) in r {
                out[j].insert(i, x.clone());
            }
        }
        out
    }

    pub fn dense_column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(&j, x)| (i, j, x)))
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_empty())
    }

    /// `Some(c)` when the matrix is c times the identity.
    pub fn as_scalar(&self) -> Option<Rational> {
        if !self.is_square() {
            return None;
        }
        if self.rows == 0 {
            return Some(Rational::zero());
        }
        let c = self.get(0, 0);
        for (i, r) in self.data.iter().enumerate() {
            for (&j, x) in r {
                if i != j || *x != c {
                    return None;
                }
            }
            if !c.is_zero() && r.get(&i).is_none() {
                return None;
            }
        }
        Some(c)
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for (i, j, x) in self.entries() {
            m.data[j].insert(i, x.clone());
        }
        m
    }

    pub fn scale(&self, c: &Rational) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|r| sparse_scale(r, c)).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        self.data
            .iter()
            .map(|r| {
                r.iter()
                    .fold(Rational::zero(), |acc, (&j, x)| acc + x * &v[j])
            })
            .collect()
    }

    pub fn mul_sparse(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, r) in self.data.iter().enumerate() {
            let mut acc = Rational::zero();
            for (j, x) in r {
                if let Some(y) = v.get(j) {
                    acc += x * y;
                }
            }
            if !acc.is_zero() {
                out.insert(i, acc);
            }
        }
        out
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut m = Self::zeros(self.rows, other.cols);
        for (i, r) in self.data.iter().enumerate() {
            let mut acc = SparseVec::new();
            for (&k, x) in r {
                sparse_axpy(&mut acc, x, &other.data[k]);
            }
            m.data[i] = acc;
        }
        m
    }

    pub fn add_matrix(&self, other: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "dimension mismatch in sum"
        );
        let mut m = self.clone();
        for (i, r) in other.data.iter().enumerate() {
            sparse_axpy(&mut m.data[i], &Rational::one(), r);
        }
        m
    }

    pub fn sub_matrix(&self, other: &Self) -> Self {
        self.add_matrix(&other.scale(&(-Rational::one())))
    }

    pub fn pow(&self, e: u32) -> Self {
        assert!(self.is_square());
        let mut out = Self::identity(self.rows);
        for _ in 0..e {
            out = out.matmul(self);
        }
        out
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.matmul(other).sub_matrix(&other.matmul(self))
    }

    /// Entry of largest absolute value, first in row-major order on ties.
    pub fn max_abs_entry(&self) -> Option<(usize, usize, Rational)> {
        let mut best: Option<(usize, usize, Rational)> = None;
        for (i, j, x) in self.entries() {
            let better = match &best {
                None => true,
                Some((_, _, b)) => x.abs() > b.abs(),
            };
            if better {
                best = Some((i, j, x.clone()));
            }
        }
        best
    }

    pub fn rank(&self) -> usize {
        let mut e = RowEchelon::new(self.cols);
        for r in &self.data {
            e.insert(r.clone());
        }
        e.rank()
    }

    /// Basis of the right kernel, as column vectors. The basis is read off the
    /// reduced row echelon form: one vector per free column, in increasing
    /// column order, with a 1 in that column.
    pub fn nullspace(&self) -> Vec<ExactMatrix> {
        self.nullspace_sparse()
            .iter()
            .map(|v| ExactMatrix::from_columns(self.cols, std::slice::from_ref(v)))
            .collect()
    }

    pub fn nullspace_sparse(&self) -> Vec<SparseVec> {
        let mut e = RowEchelon::new(self.cols);
        for r in &self.data {
            e.insert(r.clone());
        }
        e.kernel()
    }

    /// Inverse of a square matrix, or `None` if singular.
    pub fn inverse(&self) -> Option<ExactMatrix> {
        assert!(self.is_square());
        let n = self.rows;
        let cols: Vec<SparseVec> = self.columns();
        let solver = SpanSolver::new(n, &cols);
        if solver.rank() != n {
            return None;
        }
        let mut inv = ExactMatrix::zeros(n, n);
        for i in 0..n {
            let e: SparseVec = [(i, Rational::one())].into_iter().collect();
            let c = solver.coordinates(&e)?;
            for (j, x) in c.into_iter().enumerate() {
                inv.set(j, i, x);
            }
        }
        Some(inv)
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        (0..self.rows)
            .map(|i| sparse_to_dense(&self.data[i], self.cols))
            .collect()
    }

    /// Block placement of `block` with its top-left corner at (r0, c0).
    pub fn place(&mut self, r0: usize, c0: usize, block: &ExactMatrix) {
        for (i, j, x) in block.entries() {
            self.add_to(r0 + i, c0 + j, x);
        }
    }

    /// Kronecker product.
    pub fn kron(&self, other: &Self) -> Self {
        let mut m = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for (i, j, x) in self.entries() {
            for (k, l, y) in other.entries() {
                m.set(i * other.rows + k, j * other.cols + l, x * y);
            }
        }
        m
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<'a> Mul<&'a ExactMatrix> for &'a ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.matmul(rhs)
    }
}

impl<'a> Add<&'a ExactMatrix> for &'a ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.add_matrix(rhs)
    }
}

impl<'a> Sub<&'a ExactMatrix> for &'a ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.sub_matrix(rhs)
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;
    fn neg(self) -> ExactMatrix {
        self.scale(&(-Rational::one()))
    }
}

/// Incrementally maintained reduced row echelon form.
///
/// Pivot rows have a leading 1 and no entries in any other pivot column, so the
/// stored form is the RREF of every row inserted so far.
#[derive(Clone, Debug)]
pub struct RowEchelon {
    ncols: usize,
    pivots: BTreeMap<usize, SparseVec>,
}

impl RowEchelon {
    pub fn new(ncols: usize) -> Self {
        RowEchelon {
            ncols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = &usize> {
        self.pivots.keys()
    }

    /// Remainder of `row` after elimination against all pivots.
    pub fn reduce(&self, mut row: SparseVec) -> SparseVec {
        let hits: Vec<(usize, Rational)> = row
            .iter()
            .filter(|(k, _)| self.pivots.contains_key(k))
            .map(|(&k, v)| (k, v.clone()))
            .collect();
        for (k, f) in hits {
            sparse_axpy(&mut row, &(-f), &self.pivots[&k]);
        }
        row
    }

    pub fn contains(&self, row: &SparseVec) -> bool {
        self.reduce(row.clone()).is_empty()
    }

    /// Adds a row; returns whether the rank grew.
    pub fn insert(&mut self, row: SparseVec) -> bool {
        let mut r = self.reduce(row);
        let (lead, c) = match r.iter().next() {
            None => return false,
            Some((&k, c)) => (k, c.clone()),
        };
        if !c.is_one() {
            let inv = c.recip();
            for v in r.values_mut() {
                *v *= &inv;
            }
        }
        for p in self.pivots.values_mut() {
            if let Some(f) = p.get(&lead).cloned() {
                sparse_axpy(p, &(-f), &r);
            }
        }
        self.pivots.insert(lead, r);
        true
    }

    pub fn kernel(&self) -> Vec<SparseVec> {
        let mut out = Vec::new();
        for f in 0..self.ncols {
            if self.pivots.contains_key(&f) {
                continue;
            }
            let mut v = SparseVec::new();
            v.insert(f, Rational::one());
            for (&c, row) in &self.pivots {
                if let Some(x) = row.get(&f) {
                    v.insert(c, -x.clone());
                }
            }
            out.push(v);
        }
        out
    }

    pub fn rows(&self) -> impl Iterator<Item = (&usize, &SparseVec)> {
        self.pivots.iter()
    }
}

/// Coordinates of vectors relative to a fixed list of basis vectors.
///
/// Rows are kept in reduced echelon form together with the combination of the
/// original basis vectors that produced them.
#[derive(Clone, Debug)]
pub struct SpanSolver {
    ambient: usize,
    len: usize,
    pivots: BTreeMap<usize, (SparseVec, SparseVec)>,
    dependent: Vec<usize>,
}

impl SpanSolver {
    pub fn new(ambient: usize, basis: &[SparseVec]) -> Self {
        let mut s = SpanSolver {
            ambient,
            len: basis.len(),
            pivots: BTreeMap::new(),
            dependent: Vec::new(),
        };
        for (i, b) in basis.iter().enumerate() {
            let mut comb = SparseVec::new();
            comb.insert(i, Rational::one());
            let (r, comb) = s.reduce_tracked(b.clone(), comb);
            let (lead, c) = match r.iter().next() {
                None => {
                    s.dependent.push(i);
                    continue;
                }
                Some((&k, c)) => (k, c.clone()),
            };
            let inv = c.recip();
            let r = sparse_scale(&r, &inv);
            let comb = sparse_scale(&comb, &inv);
            for (pr, pc) in s.pivots.values_mut() {
                if let Some(f) = pr.get(&lead).cloned() {
                    sparse_axpy(pr, &(-f.clone()), &r);
                    sparse_axpy(pc, &(-f), &comb);
                }
            }
            s.pivots.insert(lead, (r, comb));
        }
        s
    }

    fn reduce_tracked(&self, mut row: SparseVec, mut comb: SparseVec) -> (SparseVec, SparseVec) {
        let hits: Vec<(usize, Rational)> = row
            .iter()
            .filter(|(k, _)| self.pivots.contains_key(k))
            .map(|(&k, v)| (k, v.clone()))
            .collect();
        for (k, f) in hits {
            let (pr, pc) = &self.pivots[&k];
            sparse_axpy(&mut row, &(-f.clone()), pr);
            sparse_axpy(&mut comb, &(-f), pc);
        }
        (row, comb)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Basis indices that were linearly dependent on earlier ones.
    pub fn dependent(&self) -> &[usize] {
        &self.dependent
    }

    /// Coordinates of `v` in the basis, or `None` when `v` is outside the span.
    /// Dependent basis vectors receive coordinate zero.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Rational>> {
        let mut coords = SparseVec::new();
        let mut rem = v.clone();
        let hits: Vec<(usize, Rational)> = rem
            .iter()
            .filter(|(k, _)| self.pivots.contains_key(k))
            .map(|(&k, x)| (k, x.clone()))
            .collect();
        for (k, f) in hits {
            let (pr, pc) = &self.pivots[&k];
            sparse_axpy(&mut rem, &(-f.clone()), pr);
            sparse_axpy(&mut coords, &f, pc);
        }
        if !rem.is_empty() {
            return None;
        }
        Some(sparse_to_dense(&coords, self.len))
    }
}

#[cfg(test)]
mod tests {
    use super::super::rational::{int, rat};
    use super::*;

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_dense(
            rows.iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn nullspace_of_rank_one() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = a.nullspace();
        assert_eq!(k.len(), 2);
        assert_eq!(k[0].dense_column(0), vec![int(-2), int(1), int(0)]);
        assert_eq!(k[1].dense_column(0), vec![int(-3), int(0), int(1)]);
        for v in &k {
            assert!(a.matmul(v).is_zero());
        }
    }

    #[test]
    fn nullspace_independent_of_row_order() {
        let a = m(&[&[0, 1, 1, 0], &[1, 0, 0, 1], &[1, 1, 1, 1]]);
        let b = m(&[&[1, 1, 1, 1], &[1, 0, 0, 1], &[0, 1, 1, 0]]);
        assert_eq!(a.nullspace_sparse(), b.nullspace_sparse());
    }

    #[test]
    fn inverse_and_span() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert!(a.matmul(&inv).as_scalar() == Some(int(1)));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
        let basis = vec![
            dense_to_sparse(&[int(1), int(1), int(0)]),
            dense_to_sparse(&[int(0), int(1), int(1)]),
        ];
        let s = SpanSolver::new(3, &basis);
        assert_eq!(
            s.coordinates(&dense_to_sparse(&[int(1), int(3), int(2)]))
                .unwrap(),
            vec![int(1), int(2)]
        );
        assert!(s
            .coordinates(&dense_to_sparse(&[int(1), int(0), int(0)]))
            .is_none());
    }

    #[test]
    fn scalar_detection() {
        assert_eq!(
            ExactMatrix::scalar(3, &rat(1, 2)).as_scalar(),
            Some(rat(1, 2))
        );
        assert_eq!(m(&[&[1, 0], &[0, 2]]).as_scalar(), None);
        assert_eq!(m(&[&[1, 0], &[0, 0]]).as_scalar(), None);
        assert_eq!(ExactMatrix::zeros(2, 2).as_scalar(), Some(int(0)));
    }
}
