//! Parameters of the principal series, the admissibility conditions, the
//! predicted dimension and spectrum, and the induced module P̃.

use crate::daha::{
    induce_module, make_presentation, DahaError, DahaParameters, DahaPresentation, DahaType,
    InductionData, LinearRep, SeedModule,
};
use crate::exactmath::{half, int, rat, serde_rational, to_usize, Rational};
use crate::symcomb::{
    factorial, murphy_basis_of, specht_dimension, JmVariant, Partition, SpechtModule,
};
use num::traits::Zero;
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParamError {
    #[error("need q >= p >= 1 and n >= 1 (got p={p}, q={q}, n={n})")]
    Ranks { p: usize, q: usize, n: usize },
    #[error("nvec has length {got}, expected p = {expected}")]
    NvecLength { got: usize, expected: usize },
    #[error("xi has length {got}, expected q - p = {expected}")]
    XiLength { got: usize, expected: usize },
    #[error("nu has length {got}, expected p = {expected}")]
    NuLength { got: usize, expected: usize },
    #[error("xi must be weakly decreasing: {0:?}")]
    XiNotDominant(Vec<i64>),
    #[error("mu*p and mu*q must be integers (mu = {0})")]
    MuNotIntegral(String),
    #[error("parameters are not admissible: {0:?}")]
    Inadmissible(Vec<Violation>),
    #[error(transparent)]
    Daha(#[from] DahaError),
}

/// Parameters (p, q, n, μ, n_1..n_p, ξ, ν) of a principal series of U(p,q)
/// together with the functor degree n.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctorParams {
    pub p: usize,
    pub q: usize,
    pub n: usize,
    #[serde(with = "serde_rational")]
    pub mu: Rational,
    pub nvec: Vec<i64>,
    pub xi: Vec<i64>,
    #[serde(with = "serde_rational::vec")]
    pub nu: Vec<Rational>,
}

impl FunctorParams {
    pub fn new(
        p: usize,
        q: usize,
        n: usize,
        mu: Rational,
        nvec: Vec<i64>,
        xi: Vec<i64>,
        nu: Vec<Rational>,
    ) -> Self {
        FunctorParams {
            p,
            q,
            n,
            mu,
            nvec,
            xi,
            nu,
        }
    }

    pub fn big_n(&self) -> usize {
        self.p + self.q
    }

    pub fn r(&self) -> usize {
        self.q - self.p
    }

    /// Structural checks that do not involve admissibility.
    pub fn check(&self) -> Result<(), ParamError> {
        let (p, q, n) = (self.p, self.q, self.n);
        if p == 0 || q < p || n == 0 {
            return Err(ParamError::Ranks { p, q, n });
        }
        if self.nvec.len() != p {
            return Err(ParamError::NvecLength {
                got: self.nvec.len(),
                expected: p,
            });
        }
        if self.xi.len() != q - p {
            return Err(ParamError::XiLength {
                got: self.xi.len(),
                expected: q - p,
            });
        }
        if self.nu.len() != p {
            return Err(ParamError::NuLength {
                got: self.nu.len(),
                expected: p,
            });
        }
        if self.xi.windows(2).any(|w| w[0] < w[1]) {
            return Err(ParamError::XiNotDominant(self.xi.clone()));
        }
        let mp = &self.mu * int(p as i64);
        let mq = &self.mu * int(q as i64);
        if !mp.is_integer() || !mq.is_integer() {
            return Err(ParamError::MuNotIntegral(self.mu.to_string()));
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("parameters serialize")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

/// Quantities derived from the parameters. Block sizes and ξ^μ are kept as
/// rationals so that inadmissible inputs can still be reported.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerivedParams {
    #[serde(with = "serde_rational")]
    pub tau: Rational,
    #[serde(with = "serde_rational::vec")]
    pub n_mu: Vec<Rational>,
    #[serde(with = "serde_rational::vec")]
    pub xi_mu: Vec<Rational>,
    #[serde(with = "serde_rational")]
    pub n_xi_mu: Rational,
    /// m_0 = 0, m_1, .., m_p, m_{p+1} = n.
    #[serde(with = "serde_rational::vec")]
    pub m: Vec<Rational>,
    #[serde(with = "serde_rational")]
    pub kappa1: Rational,
    #[serde(with = "serde_rational")]
    pub kappa2: Rational,
    #[serde(with = "serde_rational::vec")]
    pub rho: Vec<Rational>,
}

impl DerivedParams {
    /// Constants of the presentation realized by the image: in the
    /// normalization S_i y_i − y_{i+1} S_i = c_S, γ_n y_n + y_n γ_n = c_γ,
    /// (c_S, c_γ) = (κ₂, 2κ₁). The parameter κ₁ belongs to the reflection
    /// class of γ_n, whose root is 2ε_n.
    pub fn hecke_parameters(&self) -> DahaParameters {
        DahaParameters::BC {
            kappa1: self.kappa2.clone(),
            kappa2: &self.kappa1 * int(2),
        }
    }

    /// The constants read literally off the labels κ₁, κ₂.
    pub fn literal_parameters(&self) -> DahaParameters {
        DahaParameters::BC {
            kappa1: self.kappa1.clone(),
            kappa2: self.kappa2.clone(),
        }
    }
}

pub fn derive(params: &FunctorParams) -> Result<DerivedParams, ParamError> {
    params.check()?;
    let p = params.p as i64;
    let q = params.q as i64;
    let big_n = p + q;
    let n = params.n as i64;
    let r = params.r();
    let mu = &params.mu;
    let sum: i64 = params.nvec.iter().sum::<i64>() + params.xi.iter().sum::<i64>() + n;
    let tau = rat(sum, big_n);
    let n_mu: Vec<Rational> = params
        .nvec
        .iter()
        .map(|&ni| int(-ni) + mu * int(q - p) + &tau * int(2))
        .collect();
    let xi_mu: Vec<Rational> = (0..r)
        .map(|i| int(-params.xi[r - 1 - i]) - mu * int(p) + &tau)
        .collect();
    let n_xi_mu: Rational = xi_mu.iter().fold(Rational::zero(), |a, b| a + b);
    let mut m = vec![Rational::zero()];
    for x in &n_mu {
        let last = m.last().unwrap().clone();
        m.push(last + x);
    }
    m.push(int(n));
    let kappa1 = (int(p - q) - mu * int(big_n)) * half();
    let kappa2 = int(1);
    let rho = (1..=p)
        .map(|i| {
            let nu_half = &params.nu[(i - 1) as usize] * half();
            if q > p {
                rat(-(p + q), 2) + int(i) - half() + nu_half
            } else {
                int(-p + i) - half() + nu_half
            }
        })
        .collect();
    Ok(DerivedParams {
        tau,
        n_mu,
        xi_mu,
        n_xi_mu,
        m,
        kappa1,
        kappa2,
        rho,
    })
}

/// Failed admissibility condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Violation {
    /// n_i − μ(q−p) − 2τ is not a non-positive integer.
    TorusBlock { index: usize, n_mu: String },
    /// (ξ_j + μp − τ)_j is not dominant with first entry ≤ 0.
    XiShift { xi_mu: Vec<String> },
    /// Σ n_i^μ + n_ξ^μ ≠ n.
    BlockSum { total: String, n: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TorusBlock { index, n_mu } => {
                write!(f, "n_{}^mu = {} is not a non-negative integer", index, n_mu)
            }
            Violation::XiShift { xi_mu } => {
                write!(f, "xi^mu = ({}) is not a partition", xi_mu.join(", "))
            }
            Violation::BlockSum { total, n } => {
                write!(f, "block sizes sum to {}, not n = {}", total, n)
            }
        }
    }
}

/// Integer data of an admissible parameter set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Admissible {
    pub derived: DerivedParams,
    pub n_mu: Vec<usize>,
    pub xi_mu: Partition,
    pub n_xi: usize,
    /// m_0 = 0, .., m_p (m_p is the start of the last block).
    pub m: Vec<usize>,
}

impl Admissible {
    /// Block sizes (n_1^μ, .., n_p^μ, n_ξ^μ).
    pub fn blocks(&self) -> Vec<usize> {
        let mut b = self.n_mu.clone();
        b.push(self.n_xi);
        b
    }

    pub fn block_start(&self) -> usize {
        *self.m.last().unwrap()
    }
}

pub fn validate(params: &FunctorParams) -> Result<Result<Admissible, Vec<Violation>>, ParamError> {
    let d = derive(params)?;
    let mut violations = Vec::new();
    let mut n_mu = Vec::new();
    for (i, x) in d.n_mu.iter().enumerate() {
        match to_usize(x) {
            Some(k) => n_mu.push(k),
            None => violations.push(Violation::TorusBlock {
                index: i + 1,
                n_mu: x.to_string(),
            }),
        }
    }
    let xi_parts: Option<Vec<usize>> = d.xi_mu.iter().map(to_usize).collect();
    let xi_mu = match xi_parts.map(Partition::from_weakly_decreasing) {
        Some(Ok(pt)) => Some(pt),
        _ => {
            violations.push(Violation::XiShift {
                xi_mu: d.xi_mu.iter().map(|x| x.to_string()).collect(),
            });
            None
        }
    };
    let total = d.n_mu.iter().fold(d.n_xi_mu.clone(), |a, b| a + b);
    if total != int(params.n as i64) {
        violations.push(Violation::BlockSum {
            total: total.to_string(),
            n: params.n,
        });
    }
    if !violations.is_empty() {
        return Ok(Err(violations));
    }
    let xi_mu = xi_mu.unwrap();
    let n_xi = xi_mu.size();
    let mut m = vec![0usize];
    for &k in &n_mu {
        m.push(m.last().unwrap() + k);
    }
    Ok(Ok(Admissible {
        derived: d,
        n_mu,
        xi_mu,
        n_xi,
        m,
    }))
}

pub fn require_admissible(params: &FunctorParams) -> Result<Admissible, ParamError> {
    validate(params)?.map_err(ParamError::Inadmissible)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionPrediction {
    pub dimension: u128,
    /// n! Π 2^{n_i^μ} / (Π n_i^μ! · n_ξ^μ!)
    pub c_mu: u128,
    /// Number of standard tableaux of shape ξ^μ.
    pub d_xi: u128,
}

pub fn predicted_dimension(params: &FunctorParams) -> Result<DimensionPrediction, ParamError> {
    let a = require_admissible(params)?;
    let n = params.n;
    let hooks: u128 = a
        .xi_mu
        .hooks()
        .iter()
        .flatten()
        .map(|&h| h as u128)
        .product();
    let two: u128 = a.n_mu.iter().map(|&k| 1u128 << k).product();
    let denom: u128 = a.n_mu.iter().map(|&k| factorial(k)).product();
    let dimension = factorial(n) * two / (denom * hooks);
    let c_mu = factorial(n) * two / (denom * factorial(a.n_xi));
    let d_xi = specht_dimension(&a.xi_mu);
    debug_assert_eq!(c_mu * d_xi, dimension);
    Ok(DimensionPrediction {
        dimension,
        c_mu,
        d_xi,
    })
}

/// Which Murphy eigenvalue enters the last block of the spectrum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LastBlockIndex {
    /// α̂_{k − m_p}
    Shifted,
    /// α̂_{k − m_p + 1}, as printed
    Printed,
}

/// λ_{k,s}, indexed `[k-1][s]`, with the last-block index confirmed by the
/// tensor model.
pub fn eigenvalue_table(params: &FunctorParams) -> Result<Vec<Vec<Rational>>, ParamError> {
    eigenvalue_table_with(params, LastBlockIndex::Shifted)?.ok_or_else(|| {
        ParamError::Daha(DahaError::Induction("eigenvalue index out of range".into()))
    })
}

/// `Ok(None)` when the chosen index runs past the end of the block.
pub fn eigenvalue_table_with(
    params: &FunctorParams,
    index: LastBlockIndex,
) -> Result<Option<Vec<Vec<Rational>>>, ParamError> {
    let partial = eigenvalue_table_partial(params, index)?;
    Ok(partial
        .into_iter()
        .map(|row| row.into_iter().collect::<Option<Vec<_>>>())
        .collect())
}

/// λ_{k,s} with `None` wherever the chosen index leaves the block.
pub fn eigenvalue_table_partial(
    params: &FunctorParams,
    index: LastBlockIndex,
) -> Result<Vec<Vec<Option<Rational>>>, ParamError> {
    let a = require_admissible(params)?;
    let sp = SpechtModule::new(&a.xi_mu);
    let mb =
        murphy_basis_of(&sp, JmVariant::LHat).expect("Murphy basis exists in characteristic zero");
    let d = sp.dim();
    let (p, q) = (params.p as i64, params.q as i64);
    let big_n = int(p + q);
    let mut table = Vec::with_capacity(params.n);
    for k in 1..=params.n {
        let mut row = Vec::with_capacity(d);
        let block = (1..=params.p).find(|&r| a.m[r - 1] < k && k <= a.m[r]);
        for s in 0..d {
            let v = match block {
                Some(r) => Some(
                    &params.nu[r - 1] * half() + rat((a.m[r] + a.m[r - 1]) as i64, 2)
                        - int(k as i64)
                        + half(),
                ),
                None => {
                    let local = k - a.block_start();
                    let idx = match index {
                        LastBlockIndex::Shifted => local,
                        LastBlockIndex::Printed => local + 1,
                    };
                    (idx <= a.n_xi).then(|| {
                        -(int(p - q) - &params.mu * &big_n) * half() + &mb.eigenvalues[s][idx - 1]
                    })
                }
            };
            row.push(v);
        }
        table.push(row);
    }
    Ok(table)
}

/// Presentation realized by the image of the functor.
pub fn image_presentation(params: &FunctorParams) -> Result<DahaPresentation, ParamError> {
    let d = derive(params)?;
    Ok(make_presentation(
        DahaType::BC,
        params.n,
        d.hecke_parameters(),
    ))
}

/// Seed module P: trivial on the S_{n_i^μ}, sign on the last block's sign
/// changes, Specht module S^{ξ^μ} in the ŵ basis, y_k acting by λ_{k,s}.
pub fn build_seed(
    params: &FunctorParams,
    index: LastBlockIndex,
) -> Result<Option<InductionData>, ParamError> {
    let a = require_admissible(params)?;
    let Some(table) = eigenvalue_table_with(params, index)? else {
        return Ok(None);
    };
    let sp = SpechtModule::new(&a.xi_mu);
    let mb =
        murphy_basis_of(&sp, JmVariant::LHat).expect("Murphy basis exists in characteristic zero");
    let seed = SeedModule::new(a.blocks(), table, sp, mb.change_of_basis())?;
    Ok(Some(InductionData::new(seed)?))
}

/// The induced module P̃ = H ⊗_{H'} P.
pub fn build_p_tilde(params: &FunctorParams) -> Result<LinearRep, ParamError> {
    let data = build_seed(params, LastBlockIndex::Shifted)?.expect("shifted index stays in range");
    let pres = image_presentation(params)?;
    Ok(induce_module(&data, &pres)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn case_a() -> FunctorParams {
        FunctorParams::new(1, 2, 1, int(0), vec![-1], vec![0], vec![rat(3, 5)])
    }

    #[test]
    fn derived_examples() {
        let d = derive(&case_a()).unwrap();
        assert_eq!(d.tau, int(0));
        assert_eq!(d.n_mu, vec![int(1)]);
        assert_eq!(d.xi_mu, vec![int(0)]);
        assert_eq!(d.n_xi_mu, int(0));
        assert_eq!(d.kappa1, rat(-1, 2));
        assert_eq!(d.kappa2, int(1));

        let pq = FunctorParams::new(1, 1, 2, int(0), vec![0], vec![], vec![rat(3, 5)]);
        let d = derive(&pq).unwrap();
        assert_eq!(d.tau, int(1));
        assert_eq!(d.n_mu, vec![int(2)]);
        assert_eq!(d.kappa1, int(0));

        let b = FunctorParams::new(1, 2, 1, int(0), vec![0], vec![-1], vec![rat(3, 5)]);
        let d = derive(&b).unwrap();
        assert_eq!(
            (
                d.tau.clone(),
                d.n_mu.clone(),
                d.xi_mu.clone(),
                d.n_xi_mu.clone()
            ),
            (int(0), vec![int(0)], vec![int(1)], int(1))
        );
    }

    #[test]
    fn validation_examples() {
        assert!(validate(&case_a()).unwrap().is_ok());
        let bad = FunctorParams::new(1, 2, 1, int(0), vec![1], vec![0], vec![rat(3, 5)]);
        let v = validate(&bad).unwrap().unwrap_err();
        assert!(v.contains(&Violation::TorusBlock {
            index: 1,
            n_mu: "1/3".into()
        }));
        let pq = FunctorParams::new(1, 1, 2, int(0), vec![0], vec![], vec![rat(3, 5)]);
        assert!(validate(&pq).unwrap().is_ok());
        let mu_bad = FunctorParams::new(1, 2, 1, rat(1, 2), vec![0], vec![0], vec![int(0)]);
        assert!(matches!(derive(&mu_bad), Err(ParamError::MuNotIntegral(_))));
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(predicted_dimension(&case_a()).unwrap().dimension, 2);
        let pq = FunctorParams::new(1, 1, 2, int(0), vec![0], vec![], vec![rat(3, 5)]);
        assert_eq!(predicted_dimension(&pq).unwrap().dimension, 4);
        let b = FunctorParams::new(1, 2, 1, int(0), vec![0], vec![-1], vec![rat(3, 5)]);
        assert_eq!(predicted_dimension(&b).unwrap().dimension, 1);
    }

    #[test]
    fn eigenvalue_examples() {
        assert_eq!(eigenvalue_table(&case_a()).unwrap(), vec![vec![rat(3, 10)]]);
        let pq = FunctorParams::new(1, 1, 2, int(0), vec![0], vec![], vec![rat(3, 5)]);
        assert_eq!(
            eigenvalue_table(&pq).unwrap(),
            vec![vec![rat(4, 5)], vec![rat(-1, 5)]]
        );
        let b = FunctorParams::new(1, 2, 1, int(0), vec![0], vec![-1], vec![rat(3, 5)]);
        assert_eq!(eigenvalue_table(&b).unwrap(), vec![vec![rat(1, 2)]]);
        assert_eq!(
            eigenvalue_table_with(&b, LastBlockIndex::Printed).unwrap(),
            None
        );
    }

    #[test]
    fn json_round_trip() {
        let p = case_a();
        let s = p.to_json();
        assert_eq!(
            s,
            r#"{"p":1,"q":2,"n":1,"mu":"0","nvec":[-1],"xi":[0],"nu":["3/5"]}"#
        );
        assert_eq!(FunctorParams::from_json(&s).unwrap(), p);
        let loose = r#"{"p":1,"q":2,"n":1,"mu":0,"nvec":[-1],"xi":[0],"nu":["3/5"]}"#;
        assert_eq!(FunctorParams::from_json(loose).unwrap(), p);
    }
}

#[cfg(test)]
mod induced_tests {
    use super::*;
    use crate::daha::verify_linear_rep;

    #[test]
    fn p_tilde_small_cases() {
        for params in [
            FunctorParams::new(1, 2, 1, int(0), vec![-1], vec![0], vec![rat(3, 5)]),
            FunctorParams::new(1, 2, 1, int(0), vec![0], vec![-1], vec![rat(3, 5)]),
            FunctorParams::new(1, 1, 2, int(0), vec![0], vec![], vec![rat(3, 5)]),
            FunctorParams::new(1, 3, 3, int(0), vec![0], vec![-1, -2], vec![rat(3, 5)]),
            FunctorParams::new(1, 2, 3, int(0), vec![-1], vec![-2], vec![rat(3, 5)]),
        ] {
            let rep = build_p_tilde(&params).unwrap();
            assert_eq!(
                rep.dim as u128,
                predicted_dimension(&params).unwrap().dimension
            );
            let report = verify_linear_rep(&image_presentation(&params).unwrap(), &rep).unwrap();
            assert!(report.all_passed(), "{:?}", report.failures());
        }
    }
}
