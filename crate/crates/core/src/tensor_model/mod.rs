//! Brute-force model of the functor image: the (M, θ)-invariants of
//! W ⊗ (C^N)^{⊗n}, with the W(BC_n) action and the operators y_k written
//! out as matrices.

pub mod wmodule;

pub use wmodule::{irreducible_gl, WModule};

use crate::daha::{Generator, LinearRep};
use crate::exactmath::{half, int, sparse_axpy, ExactMatrix, Rational, SpanSolver, SparseVec};
use crate::functor_image::{
    derive, require_admissible, Admissible, DerivedParams, FunctorParams, ParamError,
};
use crate::symcomb::{murphy_basis_of, BcGenerator, JmVariant, SignedPermutation, SpechtModule};
use num::traits::{One, Zero};
use std::collections::HashMap;
use thiserror::Error;

/// Refuse models with dim(W)·N^n above this.
pub const DEFAULT_MAX_DIM: u128 = 1_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TensorError {
    #[error("dim(W)·N^n = {size} exceeds the limit {limit}")]
    Guardrail { size: u128, limit: u128 },
    #[error("{0}")]
    Invalid(String),
    #[error("operator {0} does not preserve the invariant subspace")]
    NotPreserved(String),
    #[error("index s = {s} out of range 1..={d}")]
    OutOfRange { s: usize, d: usize },
    #[error(transparent)]
    Params(#[from] ParamError),
}

#[derive(Clone, Debug)]
pub struct ModelOptions {
    pub max_dim: u128,
    /// Negates the γ_k coefficient in y_k. Only for exercising the verifier.
    pub flip_kappa_sign: bool,
}

impl Default for ModelOptions {
    fn default() -> Self {
        ModelOptions {
            max_dim: DEFAULT_MAX_DIM,
            flip_kappa_sign: false,
        }
    }
}

/// Elementary-matrix term of ỹ_k: on factor k only, or on factors l and k.
#[derive(Clone, Debug)]
struct SingleTerm {
    from: u8,
    to: u8,
    coeff: Rational,
}

#[derive(Clone, Debug)]
struct PairTerm {
    l_from: u8,
    l_to: u8,
    k_from: u8,
    k_to: u8,
    coeff: Rational,
}

/// Coefficients A_i of (E_{i,p+i})_k and B_i of (E_{p+i,i})_k in ỹ_k.
pub fn ytilde_scalars(params: &FunctorParams) -> (Vec<Rational>, Vec<Rational>) {
    let (p, q) = (params.p as i64, params.q as i64);
    let mu = &params.mu;
    let mut a = Vec::new();
    let mut b = Vec::new();
    for nu in &params.nu {
        if q > p {
            a.push(rat2(p - q) - nu * half() - mu * rat2(p + q));
            b.push(rat2(q - p) - nu * half() + mu * rat2(p + q));
        } else {
            a.push(-(nu * half()) - mu * int(p));
            b.push(-(nu * half()) + mu * int(p));
        }
    }
    (a, b)
}

/// Same scalars, assembled from ρ_i and the counts of the restricted-root
/// sums before they are collected.
pub fn ytilde_scalars_from_rho(
    params: &FunctorParams,
    derived: &DerivedParams,
) -> (Vec<Rational>, Vec<Rational>) {
    let (p, q) = (params.p as i64, params.q as i64);
    let mu_n = &params.mu * rat2(p + q);
    let mut a = Vec::new();
    let mut b = Vec::new();
    for i in 1..=p {
        let rho = &derived.rho[(i - 1) as usize];
        a.push(int(-(p - i)) - int(q - p) - rho - half() - &mu_n);
        b.push(int(-(p - i)) - rho - half() + &mu_n);
    }
    (a, b)
}

fn rat2(x: i64) -> Rational {
    Rational::new(x.into(), 2.into())
}

/// The (M, θ)-invariant subspace and the operators on it.
#[derive(Clone, Debug)]
pub struct TensorModel {
    pub params: FunctorParams,
    pub derived: DerivedParams,
    pub w: WModule,
    options: ModelOptions,
    big_n: usize,
    // weight-filtered ambient basis: (W index, tensor tuple)
    basis: Vec<(usize, Vec<u8>)>,
    index: HashMap<(usize, Vec<u8>), usize>,
    invariants: Vec<SparseVec>,
    solver: SpanSolver,
    singles: Vec<SingleTerm>,
    pairs: Vec<PairTerm>,
}

/// W for the parameters: characters n_i and V(ξ).
pub fn build_w(params: &FunctorParams) -> Result<WModule, TensorError> {
    params.check()?;
    WModule::new(params.nvec.clone(), &params.xi)
}

impl TensorModel {
    pub fn new(params: &FunctorParams) -> Result<Self, TensorError> {
        Self::with_options(params, ModelOptions::default())
    }

    pub fn with_options(
        params: &FunctorParams,
        options: ModelOptions,
    ) -> Result<Self, TensorError> {
        let derived = derive(params)?;
        let (p, q, n) = (params.p, params.q, params.n);
        let big_n = p + q;
        let r = q - p;
        let wdim_bound = crate::symcomb::weyl_dimension(&params.xi);
        let size = wdim_bound
            .to_integer()
            .try_into()
            .unwrap_or(u128::MAX)
            .saturating_mul((big_n as u128).saturating_pow(n as u32));
        if size > options.max_dim {
            return Err(TensorError::Guardrail {
                size,
                limit: options.max_dim,
            });
        }
        let w = build_w(params)?;

        // Cartan weights: torus block i needs n_i + #{k: t_k ∈ {i, p+i}} + θ_t = 0
        // and gl(r) weight a needs wt_a + #{k: t_k = 2p+a} + θ_a = 0.
        let theta_t = -(&params.mu * int((q - p) as i64)) - &derived.tau * int(2);
        let theta_a = &params.mu * int(p as i64) - &derived.tau;
        let need_torus: Vec<Option<usize>> = (0..p)
            .map(|i| crate::exactmath::to_usize(&(-(int(params.nvec[i]) + &theta_t))))
            .collect();
        let mut basis = Vec::new();
        if need_torus.iter().all(|x| x.is_some()) {
            let need_torus: Vec<usize> = need_torus.into_iter().map(|x| x.unwrap()).collect();
            for (wi, wt) in w.weights.iter().enumerate() {
                let need_gl: Option<Vec<usize>> = (0..r)
                    .map(|a| crate::exactmath::to_usize(&(-(int(wt[a]) + &theta_a))))
                    .collect();
                let Some(need_gl) = need_gl else { continue };
                // counts per "class": torus block i, or gl index a.
                let mut counts: Vec<usize> = need_torus.clone();
                counts.extend(need_gl.iter().copied());
                if counts.iter().sum::<usize>() != n {
                    continue;
                }
                let mut tuples = Vec::new();
                fill_tuples(p, &mut counts, &mut Vec::with_capacity(n), n, &mut tuples);
                for t in tuples {
                    basis.push((wi, t));
                }
            }
        }
        let index: HashMap<(usize, Vec<u8>), usize> = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, k)| (k, i))
            .collect();

        // gl(r) off-diagonal conditions, solved by nullspace.
        let mut rows: HashMap<(usize, usize, usize, Vec<u8>), SparseVec> = HashMap::new();
        for (col, (wi, t)) in basis.iter().enumerate() {
            for a in 0..r {
                for b in 0..r {
                    if a == b {
                        continue;
                    }
                    for (wj, c) in w.gl[a][b].column(*wi) {
                        rows.entry((a, b, wj, t.clone()))
                            .or_default()
                            .insert(col, c);
                    }
                    let (ga, gb) = ((2 * p + a) as u8, (2 * p + b) as u8);
                    for k in 0..n {
                        if t[k] == gb {
                            let mut nt = t.clone();
                            nt[k] = ga;
                            let e = rows.entry((a, b, *wi, nt)).or_default();
                            let v = e.entry(col).or_insert_with(Rational::zero);
                            *v += Rational::one();
                            if v.is_zero() {
                                e.remove(&col);
                            }
                        }
                    }
                }
            }
        }
        let mut keys: Vec<_> = rows.keys().cloned().collect();
        keys.sort();
        let mut ech = crate::exactmath::RowEchelon::new(basis.len());
        for k in keys {
            let row = rows.remove(&k).unwrap();
            if !row.is_empty() {
                ech.insert(row);
            }
        }
        let invariants = ech.kernel();
        let solver = SpanSolver::new(basis.len(), &invariants);
        let (singles, pairs) = ytilde_terms(params);
        Ok(TensorModel {
            params: params.clone(),
            derived,
            w,
            options,
            big_n,
            basis,
            index,
            invariants,
            solver,
            singles,
            pairs,
        })
    }

    pub fn dim(&self) -> usize {
        self.invariants.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.len()
    }

    /// Invariant basis vectors over the weight-filtered ambient basis.
    pub fn invariant_basis(&self) -> &[SparseVec] {
        &self.invariants
    }

    pub fn ambient_basis(&self) -> &[(usize, Vec<u8>)] {
        &self.basis
    }

    /// Ambient vector from its invariant coordinates.
    pub fn ambient_vector(&self, coords: &[Rational]) -> SparseVec {
        let mut out = SparseVec::new();
        for (c, v) in coords.iter().zip(&self.invariants) {
            sparse_axpy(&mut out, c, v);
        }
        out
    }

    fn apply_ambient<F>(&self, v: &SparseVec, f: F) -> Result<SparseVec, TensorError>
    where
        F: Fn(usize, &[u8], &mut Vec<(Rational, Vec<u8>)>),
    {
        let mut out = SparseVec::new();
        let mut buf = Vec::new();
        for (&i, c) in v {
            let (wi, t) = &self.basis[i];
            buf.clear();
            f(*wi, t, &mut buf);
            for (x, nt) in buf.drain(..) {
                let j = *self
                    .index
                    .get(&(*wi, nt))
                    .ok_or_else(|| TensorError::NotPreserved("(weight space)".into()))?;
                let unit: SparseVec = [(j, x * c)].into_iter().collect();
                sparse_axpy(&mut out, &Rational::one(), &unit);
            }
        }
        Ok(out)
    }

    fn matrix_of<F>(&self, name: &str, f: F) -> Result<ExactMatrix, TensorError>
    where
        F: Fn(usize, &[u8], &mut Vec<(Rational, Vec<u8>)>),
    {
        let d = self.dim();
        let mut m = ExactMatrix::zeros(d, d);
        for (j, v) in self.invariants.iter().enumerate() {
            let img = self.apply_ambient(v, &f)?;
            let c = self
                .solver
                .coordinates(&img)
                .ok_or_else(|| TensorError::NotPreserved(name.to_string()))?;
            for (i, x) in c.into_iter().enumerate() {
                m.set(i, j, x);
            }
        }
        Ok(m)
    }

    fn signed_perm_fn(
        &self,
        g: &SignedPermutation,
    ) -> impl Fn(usize, &[u8], &mut Vec<(Rational, Vec<u8>)>) + '_ {
        let g = g.clone();
        let p = self.params.p as u8;
        move |_, t, out| {
            let mut nt = t.to_vec();
            let mut sign = 1i64;
            for (i, &x) in t.iter().enumerate() {
                let (s, j) = g.image(i);
                if s < 0 && x >= p {
                    sign = -sign;
                }
                nt[j] = x;
            }
            out.push((int(sign), nt));
        }
    }

    /// Matrix of a signed permutation on the invariant subspace: S_ij swaps
    /// factors, γ_i applies J = diag(I_p, −I_q) to factor i.
    pub fn group_action(&self, g: &SignedPermutation) -> Result<ExactMatrix, TensorError> {
        assert_eq!(g.rank(), self.params.n);
        self.matrix_of("group element", self.signed_perm_fn(g))
    }

    fn ytilde_fn(&self, k: usize) -> impl Fn(usize, &[u8], &mut Vec<(Rational, Vec<u8>)>) + '_ {
        move |_, t, out| {
            for s in &self.singles {
                if t[k] == s.from {
                    let mut nt = t.to_vec();
                    nt[k] = s.to;
                    out.push((s.coeff.clone(), nt));
                }
            }
            for l in 0..t.len() {
                if l == k {
                    continue;
                }
                for pt in &self.pairs {
                    if t[k] == pt.k_from && t[l] == pt.l_from {
                        let mut nt = t.to_vec();
                        nt[k] = pt.k_to;
                        nt[l] = pt.l_to;
                        out.push((pt.coeff.clone(), nt));
                    }
                }
            }
        }
    }

    /// ỹ_k (1-based k) on the invariant subspace.
    pub fn ytilde_operator(&self, k: usize) -> Result<ExactMatrix, TensorError> {
        self.matrix_of(&format!("ytilde{}", k), self.ytilde_fn(k - 1))
    }

    /// y_k = ỹ_k + κ₁γ_k + ½Σ_{l>k}S_kl − ½Σ_{l<k}S_kl + ½Σ_{l≠k}S_kl γ_k γ_l.
    pub fn y_operator(&self, k: usize) -> Result<ExactMatrix, TensorError> {
        let n = self.params.n;
        let mut kappa = self.derived.kappa1.clone();
        if self.options.flip_kappa_sign {
            kappa = -kappa;
        }
        let mut y = self.ytilde_operator(k)?;
        y = y.add_matrix(
            &self
                .group_action(&SignedPermutation::gamma(n, k))?
                .scale(&kappa),
        );
        for l in 1..=n {
            if l == k {
                continue;
            }
            let s = SignedPermutation::transposition(n, k, l);
            let sign = if l > k { half() } else { -half() };
            y = y.add_matrix(&self.group_action(&s)?.scale(&sign));
            let sgg = s
                .compose(&SignedPermutation::gamma(n, k))
                .compose(&SignedPermutation::gamma(n, l));
            y = y.add_matrix(&self.group_action(&sgg)?.scale(&half()));
        }
        Ok(y)
    }

    /// Generators S_1..S_{n−1}, γ_n, y_1..y_n as a representation.
    pub fn linear_rep(&self) -> Result<LinearRep, TensorError> {
        let n = self.params.n;
        let mut rep = LinearRep::new(self.dim());
        for i in 1..n {
            rep.matrices.insert(
                Generator::S(i),
                self.group_action(&SignedPermutation::generator(n, BcGenerator::S(i)))?,
            );
        }
        rep.matrices.insert(
            Generator::Gamma,
            self.group_action(&SignedPermutation::gamma(n, n))?,
        );
        for k in 1..=n {
            rep.matrices.insert(Generator::Y(k), self.y_operator(k)?);
        }
        Ok(rep)
    }

    /// Coordinates of an ambient vector in the invariant basis.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Rational>> {
        self.solver.coordinates(v)
    }

    /// ϖ_s (1-based s) in invariant coordinates: the invariant vector whose
    /// component along the highest weight vector ω of W is
    /// u_1 ⊗ .. ⊗ u_p ⊗ t_s, where u_k = (e_k − e_{p+k})^{⊗ n_k^μ} and t_s is
    /// ŵ_s mapped into the last factors by row r ↦ e_{N+1−r}.
    pub fn varpi(&self, s: usize) -> Result<Vec<Rational>, TensorError> {
        let a = require_admissible(&self.params)?;
        let sp = SpechtModule::new(&a.xi_mu);
        let mb = murphy_basis_of(&sp, JmVariant::LHat).expect("Murphy basis exists");
        let d = sp.dim();
        if s == 0 || s > d {
            return Err(TensorError::OutOfRange { s, d });
        }
        let target = self.varpi_leading_term(&a, &sp, &mb.vectors[s - 1]);
        let omega = self.w.highest_weight_index;
        // Restrict the invariant basis to the ω-component and solve.
        let restrict = |v: &SparseVec| -> SparseVec {
            v.iter()
                .filter(|(i, _)| self.basis[**i].0 == omega)
                .map(|(i, c)| (*i, c.clone()))
                .collect()
        };
        let restricted: Vec<SparseVec> = self.invariants.iter().map(restrict).collect();
        let solver = SpanSolver::new(self.basis.len(), &restricted);
        if solver.rank() != self.dim() {
            return Err(TensorError::Invalid(
                "ω-component map is not injective on invariants".into(),
            ));
        }
        solver.coordinates(&target).ok_or_else(|| {
            TensorError::Invalid(format!(
                "no invariant vector with leading term for s = {}",
                s
            ))
        })
    }

    fn varpi_leading_term(
        &self,
        a: &Admissible,
        sp: &SpechtModule,
        what: &[Rational],
    ) -> SparseVec {
        let p = self.params.p;
        let n = self.params.n;
        let start = a.block_start();
        // Tabloid expansion of ŵ_s.
        let mut tab = SparseVec::new();
        for (t, c) in what.iter().enumerate() {
            sparse_axpy(&mut tab, c, sp.polytabloid_vector(t));
        }
        let mut terms: Vec<(Rational, Vec<u8>)> = vec![(Rational::one(), vec![0u8; n])];
        for r in 0..p {
            for pos in a.m[r]..a.m[r + 1] {
                let mut next = Vec::with_capacity(terms.len() * 2);
                for (c, t) in &terms {
                    let mut t1 = t.clone();
                    t1[pos] = r as u8;
                    next.push((c.clone(), t1));
                    let mut t2 = t.clone();
                    t2[pos] = (p + r) as u8;
                    next.push((-c.clone(), t2));
                }
                terms = next;
            }
        }
        let omega = self.w.highest_weight_index;
        let mut out = SparseVec::new();
        for (ti, c) in &tab {
            let rows = &sp.tabloids()[*ti];
            for (x, t) in &terms {
                let mut nt = t.clone();
                for (e, &row) in rows.iter().enumerate() {
                    nt[start + e] = (self.big_n - 1 - row as usize) as u8;
                }
                let j = self.index[&(omega, nt)];
                let unit: SparseVec = [(j, c * x)].into_iter().collect();
                sparse_axpy(&mut out, &Rational::one(), &unit);
            }
        }
        out
    }

    /// Whether the W(BC_n)-orbit of the ϖ_s spans the invariant subspace.
    pub fn orbit_span(&self, varpis: &[Vec<Rational>]) -> Result<bool, TensorError> {
        let n = self.params.n;
        let d = self.dim();
        if d == 0 {
            return Ok(true);
        }
        let mut gens = Vec::new();
        for i in 1..n {
            gens.push(self.group_action(&SignedPermutation::generator(n, BcGenerator::S(i)))?);
        }
        gens.push(self.group_action(&SignedPermutation::gamma(n, n))?);
        let mut ech = crate::exactmath::RowEchelon::new(d);
        let mut frontier: Vec<SparseVec> = Vec::new();
        for v in varpis {
            let sv = crate::exactmath::dense_to_sparse(v);
            if ech.insert(sv.clone()) {
                frontier.push(sv);
            }
        }
        while let Some(v) = frontier.pop() {
            for g in &gens {
                let w = g.mul_sparse(&v);
                if ech.insert(w.clone()) {
                    frontier.push(w);
                }
            }
        }
        Ok(ech.rank() == d)
    }
}

fn fill_tuples(
    p: usize,
    counts: &mut Vec<usize>,
    cur: &mut Vec<u8>,
    n: usize,
    out: &mut Vec<Vec<u8>>,
) {
    if cur.len() == n {
        out.push(cur.clone());
        return;
    }
    for class in 0..counts.len() {
        if counts[class] == 0 {
            continue;
        }
        counts[class] -= 1;
        if class < p {
            for x in [class, p + class] {
                cur.push(x as u8);
                fill_tuples(p, counts, cur, n, out);
                cur.pop();
            }
        } else {
            cur.push((p + class) as u8);
            fill_tuples(p, counts, cur, n, out);
            cur.pop();
        }
        counts[class] += 1;
    }
}

/// The reduced ỹ_k as a list of elementary-matrix terms (0-based indices:
/// i → e_i, p+i → e_{p+i}, 2p+a → the a-th vector of the C^{q−p} block).
fn ytilde_terms(params: &FunctorParams) -> (Vec<SingleTerm>, Vec<PairTerm>) {
    let (p, q) = (params.p, params.q);
    let (a, b) = ytilde_scalars(params);
    let mut singles = Vec::new();
    for i in 0..p {
        singles.push(SingleTerm {
            from: (p + i) as u8,
            to: i as u8,
            coeff: a[i].clone(),
        });
        singles.push(SingleTerm {
            from: i as u8,
            to: (p + i) as u8,
            coeff: b[i].clone(),
        });
    }
    let mut pairs = Vec::new();
    // −c(E_{l_to,l_from})_l (E_{k_to,k_from})_k, entered with the overall minus.
    let mut push = |c: Rational, l_to: usize, l_from: usize, k_to: usize, k_from: usize| {
        pairs.push(PairTerm {
            l_from: l_from as u8,
            l_to: l_to as u8,
            k_from: k_from as u8,
            k_to: k_to as u8,
            coeff: -c,
        });
    };
    for i in 0..p {
        for j in i + 1..p {
            push(int(-1), p + i, p + j, p + j, i);
            push(int(1), p + j, p + i, i, p + j);
        }
    }
    for j in 0..p {
        for i in j + 1..p {
            push(int(1), i, j, p + j, i);
            push(int(-1), j, i, i, p + j);
        }
    }
    if q > p {
        for i in 0..p {
            for jj in p..q {
                push(int(-1), p + i, p + jj, p + jj, i);
                push(int(1), p + jj, p + i, i, p + jj);
            }
        }
    }
    for i in 0..p {
        push(-half(), p + i, p + i, p + i, i);
        push(half(), i, i, p + i, i);
        push(half(), p + i, p + i, i, p + i);
        push(-half(), i, i, i, p + i);
    }
    (singles, pairs)
}

#[cfg(test)]
mod tests;
