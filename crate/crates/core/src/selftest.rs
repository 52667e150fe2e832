//! The acceptance grid. Each criterion returns one result line; the CLI
//! `selftest` command and the `acceptance` test target both run these.

use crate::central_char::{
    end_to_end_check_with, evaluate_character, expected_y1_squared, select_shift_order, ycc_rhs,
    CaseTag, ShiftOrder, YccForm,
};
use crate::exactmath::{format_rational, int, parse_rational, rat};
use crate::functor_image::FunctorParams;
use crate::symcomb::{
    enumerate_standard_tableaux, jm_matrices, murphy_basis_of, specht_dimension, weyl_dimension,
    JmVariant, Partition, SpechtModule,
};
use crate::tensor_model::{ModelOptions, TensorModel, DEFAULT_MAX_DIM};
use crate::verify::{verify_params, PointReport};
use serde::Serialize;
use std::time::{Duration, Instant};

#[derive(Clone, Copy, Debug, Default)]
pub struct SelftestOptions {
    /// Negate κ₁ in the y_k, to confirm the suite notices.
    pub inject_kappa_flip: bool,
}

impl SelftestOptions {
    fn model(&self) -> ModelOptions {
        ModelOptions {
            max_dim: DEFAULT_MAX_DIM,
            flip_kappa_sign: self.inject_kappa_flip,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub title: String,
    pub passed: bool,
    pub notes: Vec<String>,
    pub failures: Vec<String>,
    pub timing_ms: u64,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        let mut s = format!(
            "criterion {}: {} {} ({} ms)",
            self.id, verdict, self.title, self.timing_ms
        );
        for f in self.failures.iter().take(5) {
            s.push_str(&format!("\n    failure: {}", f));
        }
        for n in &self.notes {
            s.push_str(&format!("\n    note: {}", n));
        }
        s
    }
}

/// Runtime budgets, pinned.
pub const MURPHY_BUDGET: Duration = Duration::from_secs(30);
pub const SCHUR_WEYL_BUDGET: Duration = Duration::from_secs(5);
pub const RELATION_BUDGET: Duration = Duration::from_secs(300);
pub const CENTRAL_BUDGET: Duration = Duration::from_secs(60);
/// Largest |λ| in the Murphy suite.
pub const MURPHY_MAX_SIZE: usize = 6;
/// Schur–Weyl range: N ≤ 4, m ≤ 5.
pub const SCHUR_WEYL_MAX_N: usize = 4;
pub const SCHUR_WEYL_MAX_M: usize = 5;

fn params(
    p: usize,
    q: usize,
    n: usize,
    mu: &str,
    nvec: &[i64],
    xi: &[i64],
    nu: &[&str],
) -> FunctorParams {
    FunctorParams::new(
        p,
        q,
        n,
        parse_rational(mu).expect("literal"),
        nvec.to_vec(),
        xi.to_vec(),
        nu.iter()
            .map(|s| parse_rational(s).expect("literal"))
            .collect(),
    )
}

/// Admissible grid for the relation, dimension, eigenvector and isomorphism
/// criteria.
pub fn relation_grid() -> Vec<FunctorParams> {
    vec![
        params(1, 2, 1, "0", &[-1], &[0], &["3/5"]),
        params(1, 2, 1, "0", &[0], &[-1], &["3/5"]),
        params(1, 1, 1, "1", &[1], &[], &["5/7"]),
        params(1, 1, 2, "0", &[0], &[], &["3/5"]),
        params(1, 2, 2, "0", &[-1], &[-1], &["3/5"]),
        params(1, 2, 2, "0", &[-2], &[0], &["3/5"]),
        params(1, 2, 2, "0", &[0], &[-2], &["3/5"]),
        params(2, 2, 2, "0", &[0, 0], &[], &["3/5", "7/3"]),
        params(1, 3, 2, "1", &[1], &[-1, -2], &["3/5"]),
        params(2, 3, 2, "0", &[-1, 0], &[-1], &["3/5", "7/3"]),
        params(1, 1, 3, "0", &[-1], &[], &["3/5"]),
        params(1, 2, 3, "0", &[-1], &[-2], &["3/5"]),
        params(1, 2, 3, "0", &[-3], &[0], &["3/5"]),
        params(1, 3, 3, "0", &[0], &[-1, -2], &["3/5"]),
    ]
}

/// Parameter sets violating the admissibility conditions.
pub fn inadmissible_grid() -> Vec<FunctorParams> {
    vec![
        params(1, 2, 1, "0", &[1], &[0], &["3/5"]),
        params(1, 2, 1, "0", &[2], &[-3], &["3/5"]),
        params(1, 3, 2, "0", &[-2], &[2, -2], &["3/5"]),
    ]
}

/// n = 1 parameter sets of Case 1 or Case 2 shape.
pub fn end_to_end_grid() -> Vec<FunctorParams> {
    vec![
        params(1, 2, 1, "0", &[-1], &[0], &["3/5"]),
        params(1, 2, 1, "0", &[1], &[1], &["7/3"]),
        params(1, 2, 1, "0", &[0], &[-1], &["3/5"]),
        params(1, 2, 1, "1", &[1], &[-2], &["7/3"]),
        params(2, 3, 1, "0", &[-1, 0], &[0], &["3/5", "7/3"]),
        params(2, 3, 1, "0", &[0, -1], &[0], &["3/5", "7/3"]),
        params(1, 1, 1, "0", &[0], &[], &["2"]),
    ]
}

fn finish(
    id: u8,
    title: &str,
    t0: Instant,
    budget: Option<Duration>,
    notes: Vec<String>,
    mut failures: Vec<String>,
) -> CriterionResult {
    let elapsed = t0.elapsed();
    if let Some(b) = budget {
        if elapsed > b {
            failures.push(format!(
                "runtime {} ms exceeds {} ms",
                elapsed.as_millis(),
                b.as_millis()
            ));
        }
    }
    CriterionResult {
        id,
        title: title.to_string(),
        passed: failures.is_empty(),
        notes,
        failures,
        timing_ms: elapsed.as_millis() as u64,
    }
}

pub fn criterion_1() -> CriterionResult {
    let t0 = Instant::now();
    let mut failures = Vec::new();
    let mut count = 0;
    for m in 1..=MURPHY_MAX_SIZE {
        for shape in Partition::all_of(m) {
            let sp = SpechtModule::new(&shape);
            let tableaux = enumerate_standard_tableaux(&shape);
            for variant in [JmVariant::L, JmVariant::LHat] {
                let mb = match murphy_basis_of(&sp, variant) {
                    Ok(mb) => mb,
                    Err(e) => {
                        failures.push(format!("{:?} {:?}: {}", shape.parts(), variant, e));
                        continue;
                    }
                };
                let jm = jm_matrices(&sp, variant);
                for (s, t) in tableaux.iter().enumerate() {
                    let alpha = t.contents();
                    for i in 1..=m {
                        let want = match variant {
                            JmVariant::L => int(alpha[i - 1]),
                            JmVariant::LHat if i == m => int(0),
                            JmVariant::LHat => int(alpha[m - i]),
                        };
                        let v = &mb.vectors[s];
                        let lv = jm[i - 1].mul_vec(v);
                        if lv.iter().zip(v).any(|(a, b)| *a != b * &want)
                            || v.iter().all(|x| *x == int(0))
                        {
                            failures.push(format!(
                                "{:?} {:?} s={} i={}",
                                shape.parts(),
                                variant,
                                s + 1,
                                i
                            ));
                        }
                    }
                }
                count += 1;
            }
        }
    }
    let notes = vec![format!(
        "{} (shape, variant) pairs with |λ| ≤ {}",
        count, MURPHY_MAX_SIZE
    )];
    finish(
        1,
        "Murphy basis eigenvectors",
        t0,
        Some(MURPHY_BUDGET),
        notes,
        failures,
    )
}

pub fn criterion_2() -> CriterionResult {
    let t0 = Instant::now();
    let mut failures = Vec::new();
    for n in 1..=SCHUR_WEYL_MAX_N {
        for m in 0..=SCHUR_WEYL_MAX_M {
            let mut total = int(0);
            for shape in Partition::all_of(m) {
                if shape.height() > n {
                    continue;
                }
                let mut hw: Vec<i64> = shape.parts().iter().map(|&x| x as i64).collect();
                hw.resize(n, 0);
                total += weyl_dimension(&hw) * int(specht_dimension(&shape) as i64);
            }
            let want = int((n as i64).pow(m as u32));
            if total != want {
                failures.push(format!("N={} m={}: sum {} vs {}", n, m, total, want));
            }
        }
    }
    finish(
        2,
        "Schur-Weyl dimension identity",
        t0,
        Some(SCHUR_WEYL_BUDGET),
        Vec::new(),
        failures,
    )
}

/// Full per-point reports on the relation grid.
pub fn grid_reports(opts: SelftestOptions) -> Vec<Result<PointReport, String>> {
    relation_grid()
        .iter()
        .map(|p| verify_params(p, opts.model()).map_err(|e| e.to_string()))
        .collect()
}

fn label(p: &FunctorParams) -> String {
    format!(
        "(p,q,n)=({},{},{}) mu={} nvec={:?} xi={:?}",
        p.p, p.q, p.n, p.mu, p.nvec, p.xi
    )
}

fn coverage(reports: &[Result<PointReport, String>]) -> String {
    let mut cells = std::collections::BTreeSet::new();
    for r in reports.iter().flatten() {
        let positive = r.derived.n_xi_mu > int(0);
        cells.insert((
            if r.params.q > r.params.p {
                "q>p"
            } else {
                "q=p"
            },
            positive,
            r.params.n,
        ));
    }
    let list: Vec<String> = cells
        .iter()
        .map(|(a, b, n)| format!("{} n_xi{} n={}", a, if *b { ">0" } else { "=0" }, n))
        .collect();
    format!("cells covered: {} (q=p forces n_xi = 0)", list.join(", "))
}

pub fn criterion_3(
    opts: SelftestOptions,
    reports: &[Result<PointReport, String>],
) -> CriterionResult {
    let t0 = Instant::now();
    let mut failures = Vec::new();
    let mut literal = 0;
    for (p, r) in relation_grid().iter().zip(reports) {
        match r {
            Ok(r) => {
                for c in r.relations.iter().filter(|c| !c.passed) {
                    failures.push(format!("{}: relation \"{}\" fails", label(p), c.relation));
                }
                if !r.literal_label_failures.is_empty() {
                    literal += 1;
                }
            }
            Err(e) => failures.push(format!("{}: {}", label(p), e)),
        }
    }
    let grid_ms: u64 = reports.iter().flatten().map(|r| r.timing_ms).sum();
    if grid_ms as u128 > RELATION_BUDGET.as_millis() {
        failures.push(format!(
            "grid runtime {} ms exceeds {} ms",
            grid_ms,
            RELATION_BUDGET.as_millis()
        ));
    }
    let mut notes = vec![
        format!(
            "{} admissible points, {} ms building and checking the grid",
            reports.len(),
            grid_ms
        ),
        coverage(reports),
        "constants: S-relation = κ₂ = 1, γ-relation = 2κ₁ = p−q−μN".into(),
        format!(
            "reading the constants as S = κ₁, γ = κ₂ fails on {} of {} points",
            literal,
            reports.len()
        ),
    ];
    if opts.inject_kappa_flip {
        notes.push("κ₁ sign flip injected".into());
    }
    finish(
        3,
        "relation suite on the tensor model",
        t0,
        Some(RELATION_BUDGET),
        notes,
        failures,
    )
}

pub fn criterion_4(
    opts: SelftestOptions,
    reports: &[Result<PointReport, String>],
) -> CriterionResult {
    let t0 = Instant::now();
    let mut failures = Vec::new();
    for (p, r) in relation_grid().iter().zip(reports) {
        match r {
            Ok(r) if r.predicted_dim as usize != r.model_dim => failures.push(format!(
                "{}: predicted {} model {}",
                label(p),
                r.predicted_dim,
                r.model_dim
            )),
            Ok(_) => {}
            Err(e) => failures.push(format!("{}: {}", label(p), e)),
        }
    }
    for p in inadmissible_grid() {
        match TensorModel::with_options(&p, opts.model()) {
            Ok(m) if m.dim() == 0 => {}
            Ok(m) => failures.push(format!("inadmissible {}: dimension {}", label(&p), m.dim())),
            Err(e) => failures.push(format!("inadmissible {}: {}", label(&p), e)),
        }
    }
    let notes = vec![format!(
        "{} admissible and {} inadmissible points",
        reports.len(),
        inadmissible_grid().len()
    )];
    finish(4, "dimension formula", t0, None, notes, failures)
}

pub fn criterion_5(reports: &[Result<PointReport, String>]) -> CriterionResult {
    let t0 = Instant::now();
    let mut failures = Vec::new();
    let mut printed_fail = 0;
    let mut printed_na = 0;
    for (p, r) in relation_grid().iter().zip(reports) {
        match r.as_ref().map(|r| r.eigen.as_ref()) {
            Ok(Some(e)) => {
                if !e.shifted_index {
                    failures.push(format!("{}: y_k ϖ_s ≠ λ_(k,s) ϖ_s", label(p)));
                }
                match e.printed_index {
                    Some(false) => printed_fail += 1,
                    None => printed_na += 1,
                    Some(true) => {}
                }
            }
            Ok(None) => failures.push(format!("{}: no eigenvector data", label(p))),
            Err(e) => failures.push(format!("{}: {}", label(p), e)),
        }
    }
    let notes = vec![
        "last-block eigenvalue uses α̂_(k−m_p, s)".into(),
        format!(
            "index k−m_p+1 fails on {} points and has no entry in range on {}",
            printed_fail, printed_na
        ),
    ];
    finish(5, "common eigenvectors", t0, None, notes, failures)
}

pub fn criterion_6(reports: &[Result<PointReport, String>]) -> CriterionResult {
    let t0 = Instant::now();
    let mut failures = Vec::new();
    for (p, r) in relation_grid().iter().zip(reports) {
        match r {
            Ok(r) => {
                if r.isomorphic != Some(true) {
                    failures.push(format!(
                        "{}: no isomorphism with the induced module",
                        label(p)
                    ));
                }
                match &r.varpi {
                    Some(pc) if pc.all() => {}
                    Some(pc) => failures.push(format!("{}: {:?}", label(p), pc)),
                    None => failures.push(format!("{}: ϖ_s checks missing", label(p))),
                }
            }
            Err(e) => failures.push(format!("{}: {}", label(p), e)),
        }
    }
    finish(
        6,
        "isomorphism with the induced module",
        t0,
        None,
        Vec::new(),
        failures,
    )
}

pub fn criterion_7() -> CriterionResult {
    let t0 = Instant::now();
    let mut failures = Vec::new();
    let mut notes = Vec::new();
    let order = select_shift_order();
    notes.push(format!("shift order selected: {:?}", order));
    if order != ShiftOrder::ShiftThenConjugate {
        failures.push("unexpected shift order".into());
    }
    let mut cases: Vec<(usize, usize, CaseTag)> = Vec::new();
    for (p, q) in [(1, 2), (1, 3), (2, 3)] {
        for k in 1..=p {
            cases.push((p, q, CaseTag::Case1(k)));
        }
        cases.push((p, q, CaseTag::Case2));
    }
    for p in 1..=2 {
        for k in 1..=p {
            cases.push((p, p, CaseTag::Case1PEqualsQ(k)));
        }
    }
    let mut printed_fail = 0;
    for (p, q, case) in &cases {
        let (c2, c3) = match evaluate_character(*p, *q, *case) {
            Ok(x) => x,
            Err(e) => {
                failures.push(format!("({},{}) {:?}: {}", p, q, case, e));
                continue;
            }
        };
        let want = expected_y1_squared(*p, *q, *case);
        if ycc_rhs(&c2, &c3, *p, *q, YccForm::Corrected) != want {
            failures.push(format!("({},{}) {:?}: y₁² ≠ {}", p, q, case, want));
        }
        if p != q && ycc_rhs(&c2, &c3, *p, *q, YccForm::Printed) != want {
            printed_fail += 1;
        }
    }
    notes.push(format!("{} symbolic identities", cases.len()));
    notes.push(format!(
        "constant term ¼(p−q−2τ)²μ² replaced by ¼((p−q)μ−2τ)²; the former fails {} of the q>p identities",
        printed_fail
    ));
    finish(
        7,
        "central character identities",
        t0,
        Some(CENTRAL_BUDGET),
        notes,
        failures,
    )
}

pub fn criterion_8(opts: SelftestOptions) -> CriterionResult {
    let t0 = Instant::now();
    let mut failures = Vec::new();
    let grid = end_to_end_grid();
    for p in &grid {
        match end_to_end_check_with(p, opts.model()) {
            Ok(r) if r.passed => {}
            Ok(r) => failures.push(format!(
                "{}: model {:?} vs formula {} (expected {})",
                label(p),
                r.model_y1_squared,
                r.ycc_corrected,
                r.expected
            )),
            Err(e) => failures.push(format!("{}: {}", label(p), e)),
        }
    }
    let notes = vec![format!("{} n=1 points", grid.len())];
    finish(8, "n=1 end to end", t0, None, notes, failures)
}

pub fn criterion_9(opts: SelftestOptions) -> CriterionResult {
    let t0 = Instant::now();
    let mut failures = Vec::new();
    let nu = rat(3, 5);
    let case_a = params(1, 2, 1, "0", &[-1], &[0], &["3/5"]);
    match verify_params(&case_a, opts.model()) {
        Ok(r) => {
            if r.model_dim != 2 {
                failures.push(format!("Case A dimension {}", r.model_dim));
            }
            let half_nu = format_rational(&(&nu * rat(1, 2)));
            let neg = format_rational(&(-(&nu * rat(1, 2))));
            let spec: Option<Vec<(String, usize)>> = r
                .spectra
                .first()
                .cloned()
                .flatten()
                .map(|s| s.into_iter().map(|e| (e.value, e.multiplicity)).collect());
            let mut want = vec![(neg, 1), (half_nu, 1)];
            want.sort();
            let mut got = spec.clone().unwrap_or_default();
            got.sort();
            if got != want {
                failures.push(format!("Case A y₁ spectrum {:?}", spec));
            }
            if !r.passed() {
                failures.extend(r.discrepancies.iter().map(|d| format!("Case A: {}", d)));
            }
        }
        Err(e) => failures.push(format!("Case A: {}", e)),
    }
    let split = params(1, 1, 2, "0", &[0], &[], &["3/5"]);
    match TensorModel::with_options(&split, opts.model()) {
        Ok(m) => {
            if m.dim() != 4 {
                failures.push(format!("p=q=1 n=2 dimension {}", m.dim()));
            }
            let want = [&nu * rat(1, 2) + rat(1, 2), &nu * rat(1, 2) - rat(1, 2)];
            let ok = m.varpi(1).ok().is_some_and(|v| {
                (1..=2).all(|k| {
                    m.y_operator(k).ok().is_some_and(|y| {
                        y.mul_vec(&v)
                            .iter()
                            .zip(&v)
                            .all(|(a, b)| *a == b * &want[k - 1])
                            && v.iter().any(|x| *x != int(0))
                    })
                })
            });
            if !ok {
                failures.push("p=q=1 n=2: ϖ eigenvalues differ from (ν₁/2+1/2, ν₁/2−1/2)".into());
            }
        }
        Err(e) => failures.push(format!("p=q=1 n=2: {}", e)),
    }
    finish(9, "known answers", t0, None, Vec::new(), failures)
}

/// All criteria in order.
pub fn run_all(opts: SelftestOptions) -> Vec<CriterionResult> {
    let reports = grid_reports(opts);
    vec![
        criterion_1(),
        criterion_2(),
        criterion_3(opts, &reports),
        criterion_4(opts, &reports),
        criterion_5(&reports),
        criterion_6(&reports),
        criterion_7(),
        criterion_8(opts),
        criterion_9(opts),
    ]
}
