use super::presentation::{DahaPresentation, DahaType, Generator};
use super::rep::LinearRep;
use super::DahaError;
use crate::exactmath::{ExactMatrix, Rational};
use crate::symcomb::{BcGenerator, CosetTable, Permutation, SignedPermutation, SpechtModule};
use num::traits::{One, Zero};
use std::cell::RefCell;
use std::collections::HashMap;

/// Module P over the parabolic subalgebra for blocks (n_1, .., n_p, n_last):
/// the S_{n_i} act trivially, the sign changes of the last block act by −1,
/// S_{n_last} acts through a Specht module in a chosen basis, and each y_k is
/// diagonal.
#[derive(Clone, Debug)]
pub struct SeedModule {
    blocks: Vec<usize>,
    y_eigenvalues: Vec<Vec<Rational>>,
    specht: SpechtModule,
    basis: ExactMatrix,
    basis_inv: ExactMatrix,
}

impl SeedModule {
    /// `y_eigenvalues[k][s]` is the eigenvalue of y_{k+1} on basis vector s;
    /// `basis` has the seed basis vectors as columns in polytabloid coordinates.
    pub fn new(
        blocks: Vec<usize>,
        y_eigenvalues: Vec<Vec<Rational>>,
        specht: SpechtModule,
        basis: ExactMatrix,
    ) -> Result<Self, DahaError> {
        let n: usize = blocks.iter().sum();
        let d = specht.dim();
        if *blocks.last().unwrap_or(&0) != specht.degree() {
            return Err(DahaError::Induction(
                "Specht module degree must equal the last block size".into(),
            ));
        }
        if y_eigenvalues.len() != n || y_eigenvalues.iter().any(|r| r.len() != d) {
            return Err(DahaError::Induction(
                "eigenvalue table must be n by dim".into(),
            ));
        }
        let basis_inv = basis
            .inverse()
            .ok_or_else(|| DahaError::Induction("seed basis is singular".into()))?;
        Ok(SeedModule {
            blocks,
            y_eigenvalues,
            specht,
            basis,
            basis_inv,
        })
    }

    pub fn dim(&self) -> usize {
        self.specht.dim()
    }

    pub fn rank(&self) -> usize {
        self.y_eigenvalues.len()
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn y_eigenvalues(&self) -> &[Vec<Rational>] {
        &self.y_eigenvalues
    }

    /// Action of h in Γ̃ on the seed.
    pub fn group_action(&self, h: &SignedPermutation) -> ExactMatrix {
        let n = self.rank();
        let start = n - self.specht.degree();
        let mut sign = Rational::one();
        let mut images = Vec::with_capacity(n - start);
        for i in start..n {
            let (s, j) = h.image(i);
            if s < 0 {
                sign = -sign;
            }
            images.push(j - start);
        }
        let m = self.specht.perm_matrix(&Permutation::from_images(images));
        self.basis_inv.matmul(&m).matmul(&self.basis).scale(&sign)
    }
}

/// Data for inducing the seed up to the whole algebra.
#[derive(Clone, Debug)]
pub struct InductionData {
    pub seed: SeedModule,
    pub cosets: CosetTable,
}

impl InductionData {
    pub fn new(seed: SeedModule) -> Result<Self, DahaError> {
        let n = seed.rank();
        let cosets =
            CosetTable::new(n, seed.blocks()).map_err(|e| DahaError::Induction(e.to_string()))?;
        Ok(InductionData { seed, cosets })
    }

    pub fn dim(&self) -> usize {
        self.cosets.len() * self.seed.dim()
    }
}

/// Induced module H ⊗_{H'} P on the basis w_c ⊗ v_s, ordered by coset then
/// seed index. The y_k are moved past the coset words with the cross relations
/// of the target presentation.
pub fn induce_module(
    data: &InductionData,
    target: &DahaPresentation,
) -> Result<LinearRep, DahaError> {
    if target.kind != DahaType::BC {
        return Err(DahaError::Induction(
            "induction is implemented for type BC".into(),
        ));
    }
    let n = data.seed.rank();
    if target.rank != n {
        return Err(DahaError::Induction(format!(
            "rank mismatch: seed {} vs algebra {}",
            n, target.rank
        )));
    }
    let ks = target.params.s_constant().clone();
    let kg = target
        .params
        .gamma_constant()
        .cloned()
        .unwrap_or_else(Rational::zero);
    let d = data.seed.dim();
    let nc = data.cosets.len();
    let dim = nc * d;
    let cache: RefCell<HashMap<SignedPermutation, ExactMatrix>> = RefCell::new(HashMap::new());
    let seed_of = |h: &SignedPermutation| -> ExactMatrix {
        if let Some(m) = cache.borrow().get(h) {
            return m.clone();
        }
        let m = data.seed.group_action(h);
        cache.borrow_mut().insert(h.clone(), m.clone());
        m
    };

    let mut rep = LinearRep::new(dim);
    for &g in &target.generators {
        let bc = match g {
            Generator::S(i) => Some(BcGenerator::S(i)),
            Generator::Gamma => Some(BcGenerator::Gamma),
            Generator::Y(_) => None,
        };
        if let Some(bc) = bc {
            let gp = SignedPermutation::generator(n, bc);
            let mut m = ExactMatrix::zeros(dim, dim);
            for (c, (w, _)) in data.cosets.representatives().iter().enumerate() {
                let (c2, h) = data.cosets.decompose(&gp.compose(w));
                m.place(c2 * d, c * d, &seed_of(&h));
            }
            rep.matrices.insert(g, m);
        }
    }
    for k in 1..=n {
        let mut m = ExactMatrix::zeros(dim, dim);
        for (c, (_, word)) in data.cosets.representatives().iter().enumerate() {
            let mut eps = Rational::one();
            let mut j = k;
            for (t, letter) in word.iter().enumerate() {
                let (j2, flip, constant) = match *letter {
                    BcGenerator::S(i) if j == i => (i + 1, false, ks.clone()),
                    BcGenerator::S(i) if j == i + 1 => (i, false, -ks.clone()),
                    BcGenerator::S(_) => (j, false, Rational::zero()),
                    BcGenerator::Gamma if j == n => (j, true, kg.clone()),
                    BcGenerator::Gamma => (j, false, Rational::zero()),
                };
                if !constant.is_zero() {
                    let mut rest = word[..t].to_vec();
                    rest.extend_from_slice(&word[t + 1..]);
                    let g = SignedPermutation::from_word(n, &rest);
                    let (c2, h) = data.cosets.decompose(&g);
                    m.place(c2 * d, c * d, &seed_of(&h).scale(&(&eps * &constant)));
                }
                if flip {
                    eps = -eps;
                }
                j = j2;
            }
            let diag: Vec<Rational> = data.seed.y_eigenvalues()[j - 1]
                .iter()
                .map(|x| x * &eps)
                .collect();
            m.place(c * d, c * d, &ExactMatrix::diagonal(&diag));
        }
        rep.matrices.insert(Generator::Y(k), m);
    }
    Ok(rep)
}
