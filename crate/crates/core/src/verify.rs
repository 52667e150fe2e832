//! Full check of one parameter set: closed-form dimension and eigenvalues
//! against the tensor model, the relation suite, the ϖ_s properties and the
//! isomorphism with the induced module.

use crate::daha::{
    contains_isomorphism, intertwiner_space, make_presentation, verify_linear_rep, DahaType,
    Generator, RelationCheck,
};
use crate::exactmath::{format_rational, int, ExactMatrix, Rational};
use crate::functor_image::{
    build_p_tilde, derive, eigenvalue_table_partial, eigenvalue_table_with, predicted_dimension,
    validate, DerivedParams, FunctorParams, LastBlockIndex, ParamError,
};
use crate::symcomb::{murphy_basis_of, JmVariant, Permutation, SignedPermutation, SpechtModule};
use crate::tensor_model::{ModelOptions, TensorError, TensorModel};
use serde::Serialize;
use std::collections::BTreeMap;
use std::time::Instant;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error(transparent)]
    Tensor(#[from] TensorError),
}

impl VerifyError {
    pub fn is_guardrail(&self) -> bool {
        matches!(self, VerifyError::Tensor(TensorError::Guardrail { .. }))
    }
}

/// Eigenvalue with its multiplicity.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SpectrumEntry {
    pub value: String,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VarpiChecks {
    /// S_j inside a torus block fixes every ϖ_s.
    pub block_invariance: bool,
    /// S_j inside the last block acts on span{ϖ_s} as on the Specht module.
    pub specht_action: bool,
    /// γ_k in the last block acts by −1.
    pub sign_action: bool,
    /// The W(BC_n)-orbit of the ϖ_s spans the image.
    pub orbit_spanning: bool,
}

impl VarpiChecks {
    pub fn all(&self) -> bool {
        self.block_invariance && self.specht_action && self.sign_action && self.orbit_spanning
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EigenChecks {
    /// λ_{k,s} from the closed form, `[k-1][s]`.
    pub table: Vec<Vec<String>>,
    /// y_k ϖ_s = λ_{k,s} ϖ_s with last-block index k − m_p.
    pub shifted_index: bool,
    /// Same with index k − m_p + 1, on the entries where it is in range;
    /// `None` when no entry is.
    pub printed_index: Option<bool>,
    /// Resolution applied to the last-block eigenvalue index.
    pub resolution: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct PointReport {
    pub params: FunctorParams,
    pub derived: DerivedParams,
    pub admissible: bool,
    pub violations: Vec<String>,
    pub predicted_dim: u64,
    pub model_dim: usize,
    pub relations: Vec<RelationCheck>,
    pub relations_pass: bool,
    /// Relation suite with the constants read off the κ labels literally.
    pub literal_label_failures: Vec<String>,
    pub eigen: Option<EigenChecks>,
    pub spectra: Vec<Option<Vec<SpectrumEntry>>>,
    pub varpi: Option<VarpiChecks>,
    pub intertwiner_dim: Option<usize>,
    pub isomorphic: Option<bool>,
    pub discrepancies: Vec<String>,
    pub timing_ms: u64,
}

impl PointReport {
    pub fn passed(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

fn vec_eq_scaled(lhs: &[Rational], v: &[Rational], c: &Rational) -> bool {
    lhs.iter().zip(v).all(|(a, b)| *a == b * c)
}

fn eigen_check(
    model: &TensorModel,
    ys: &[ExactMatrix],
    varpis: &[Vec<Rational>],
    table: &[Vec<Rational>],
) -> bool {
    ys.iter().enumerate().all(|(k, y)| {
        varpis
            .iter()
            .enumerate()
            .all(|(s, v)| vec_eq_scaled(&y.mul_vec(v), v, &table[k][s]))
    }) && model.dim() > 0
}

/// Compares the defined entries only; `None` if there are none.
fn partial_eigen_check(
    ys: &[ExactMatrix],
    varpis: &[Vec<Rational>],
    table: &[Vec<Option<Rational>>],
) -> Option<bool> {
    let mut any = false;
    let mut ok = true;
    for (k, y) in ys.iter().enumerate() {
        for (s, v) in varpis.iter().enumerate() {
            if let Some(lam) = &table[k][s] {
                any = true;
                ok &= vec_eq_scaled(&y.mul_vec(v), v, lam);
            }
        }
    }
    any.then_some(ok)
}

/// Spectrum of `y`, with the candidate eigenvalues taken from the block
/// diagonal of the same operator on the induced module and then confirmed
/// by generalized eigenspace dimensions.
fn spectrum(y: &ExactMatrix, induced_y: &ExactMatrix) -> Option<Vec<SpectrumEntry>> {
    let d = y.nrows();
    let mut counts: BTreeMap<Rational, usize> = BTreeMap::new();
    for i in 0..induced_y.nrows() {
        *counts.entry(induced_y.get(i, i)).or_default() += 1;
    }
    if counts.values().sum::<usize>() != d {
        return None;
    }
    for (lam, &m) in &counts {
        let shifted = y.sub_matrix(&ExactMatrix::scalar(d, lam));
        let nullity = d - shifted.pow(m as u32).rank();
        if nullity != m {
            return None;
        }
    }
    Some(
        counts
            .into_iter()
            .map(|(v, m)| SpectrumEntry {
                value: format_rational(&v),
                multiplicity: m,
            })
            .collect(),
    )
}

fn varpi_checks(
    model: &TensorModel,
    params: &FunctorParams,
    blocks: &[usize],
    varpis: &[Vec<Rational>],
    sp: &SpechtModule,
) -> Result<VarpiChecks, TensorError> {
    let n = params.n;
    let p = params.p;
    let mut m = vec![0usize];
    for b in blocks {
        m.push(m.last().unwrap() + b);
    }
    let start = m[p];
    let mut block_invariance = true;
    for r in 0..p {
        for j in m[r] + 1..m[r + 1] {
            let g = model.group_action(&SignedPermutation::transposition(n, j, j + 1))?;
            block_invariance &= varpis.iter().all(|v| g.mul_vec(v) == *v);
        }
    }
    let mb = murphy_basis_of(sp, JmVariant::LHat).expect("Murphy basis exists");
    let basis = mb.change_of_basis();
    let basis_inv = basis.inverse().expect("Murphy basis is a basis");
    let mut specht_action = true;
    for j in start + 1..n {
        let g = model.group_action(&SignedPermutation::transposition(n, j, j + 1))?;
        let local = Permutation::transposition(sp.degree(), j - start - 1, j - start);
        let rep = basis_inv.matmul(&sp.perm_matrix(&local)).matmul(&basis);
        for (s, v) in varpis.iter().enumerate() {
            let lhs = g.mul_vec(v);
            let mut rhs = vec![int(0); v.len()];
            for (t, w) in varpis.iter().enumerate() {
                let c = rep.get(t, s);
                for (x, y) in rhs.iter_mut().zip(w) {
                    *x += &c * y;
                }
            }
            specht_action &= lhs == rhs;
        }
    }
    let mut sign_action = true;
    for k in start + 1..=n {
        let g = model.group_action(&SignedPermutation::gamma(n, k))?;
        sign_action &= varpis
            .iter()
            .all(|v| g.mul_vec(v).iter().zip(v).all(|(a, b)| *a == -b.clone()));
    }
    let orbit_spanning = model.orbit_span(varpis)?;
    Ok(VarpiChecks {
        block_invariance,
        specht_action,
        sign_action,
        orbit_spanning,
    })
}

/// Runs every check on one parameter set. Inadmissible parameters are
/// checked for an empty image only.
pub fn verify_params(
    params: &FunctorParams,
    options: ModelOptions,
) -> Result<PointReport, VerifyError> {
    let t0 = Instant::now();
    let derived = derive(params)?;
    let validation = validate(params)?;
    let model = TensorModel::with_options(params, options)?;
    let mut discrepancies = Vec::new();
    let mut report = PointReport {
        params: params.clone(),
        derived: derived.clone(),
        admissible: validation.is_ok(),
        violations: validation
            .as_ref()
            .err()
            .map(|v| v.iter().map(|x| x.to_string()).collect())
            .unwrap_or_default(),
        predicted_dim: 0,
        model_dim: model.dim(),
        relations: Vec::new(),
        relations_pass: false,
        literal_label_failures: Vec::new(),
        eigen: None,
        spectra: Vec::new(),
        varpi: None,
        intertwiner_dim: None,
        isomorphic: None,
        discrepancies: Vec::new(),
        timing_ms: 0,
    };
    let admissible = match validation {
        Err(_) => {
            if model.dim() != 0 {
                discrepancies.push(format!(
                    "inadmissible parameters but the image has dimension {}",
                    model.dim()
                ));
            }
            report.relations_pass = true;
            report.discrepancies = discrepancies;
            report.timing_ms = t0.elapsed().as_millis() as u64;
            return Ok(report);
        }
        Ok(a) => a,
    };
    let pred = predicted_dimension(params)?;
    report.predicted_dim = pred.dimension as u64;
    if pred.dimension != model.dim() as u128 {
        discrepancies.push(format!(
            "dimension: predicted {} but the model has {}",
            pred.dimension,
            model.dim()
        ));
    }

    let rep = model.linear_rep()?;
    let pres = make_presentation(DahaType::BC, params.n, derived.hecke_parameters());
    let rel = verify_linear_rep(&pres, &rep).map_err(ParamError::Daha)?;
    report.relations_pass = rel.all_passed();
    for f in rel.failures() {
        discrepancies.push(format!("relation fails: {}", f.relation));
    }
    report.relations = rel.checks;
    let literal = make_presentation(DahaType::BC, params.n, derived.literal_parameters());
    let lit = verify_linear_rep(&literal, &rep).map_err(ParamError::Daha)?;
    report.literal_label_failures = lit.failures().iter().map(|c| c.relation.clone()).collect();

    let sp = SpechtModule::new(&admissible.xi_mu);
    let d = sp.dim();
    let varpis: Vec<Vec<Rational>> = (1..=d).map(|s| model.varpi(s)).collect::<Result<_, _>>()?;
    let ys: Vec<ExactMatrix> = (1..=params.n)
        .map(|k| rep.get(Generator::Y(k)).unwrap().clone())
        .collect();
    let shifted =
        eigenvalue_table_with(params, LastBlockIndex::Shifted)?.expect("shifted index in range");
    let printed = eigenvalue_table_partial(params, LastBlockIndex::Printed)?;
    let shifted_ok = eigen_check(&model, &ys, &varpis, &shifted);
    let printed_ok = partial_eigen_check(&ys, &varpis, &printed);
    if !shifted_ok {
        discrepancies.push("y_k ϖ_s ≠ λ_{k,s} ϖ_s".into());
    }
    report.eigen = Some(EigenChecks {
        table: shifted
            .iter()
            .map(|r| r.iter().map(format_rational).collect())
            .collect(),
        shifted_index: shifted_ok,
        printed_index: printed_ok,
        resolution: "last block uses α̂_{k−m_p,s}".into(),
    });

    let prop = varpi_checks(&model, params, &admissible.blocks(), &varpis, &sp)?;
    if !prop.all() {
        discrepancies.push(format!("ϖ_s properties fail: {:?}", prop));
    }
    report.varpi = Some(prop);

    let induced = build_p_tilde(params)?;
    report.spectra = (1..=params.n)
        .map(|k| spectrum(&ys[k - 1], induced.get(Generator::Y(k)).unwrap()))
        .collect();
    let space = intertwiner_space(&induced, &rep, &pres).map_err(ParamError::Daha)?;
    let iso = contains_isomorphism(&space);
    if !iso {
        discrepancies.push("no invertible intertwiner from the induced module".into());
    }
    report.intertwiner_dim = Some(space.len());
    report.isomorphic = Some(iso);
    report.discrepancies = discrepancies;
    report.timing_ms = t0.elapsed().as_millis() as u64;
    Ok(report)
}
