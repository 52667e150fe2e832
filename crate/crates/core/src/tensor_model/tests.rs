use super::*;
use crate::daha::{contains_isomorphism, intertwiner_space, verify_linear_rep};
use crate::exactmath::{parse_rational, rat};
use crate::functor_image::{
    build_p_tilde, eigenvalue_table, image_presentation, predicted_dimension,
};

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
        parse_rational(mu).unwrap(),
        nvec.to_vec(),
        xi.to_vec(),
        nu.iter().map(|s| parse_rational(s).unwrap()).collect(),
    )
}

fn full_check(fp: &FunctorParams) {
    let model = TensorModel::new(fp).unwrap();
    let pred = predicted_dimension(fp).unwrap();
    assert_eq!(
        model.dim() as u128,
        pred.dimension,
        "dimension for {:?}",
        fp
    );
    let rep = model.linear_rep().unwrap();
    let pres = image_presentation(fp).unwrap();
    let report = verify_linear_rep(&pres, &rep).unwrap();
    assert!(report.all_passed(), "{:?}", report.failures());
    let table = eigenvalue_table(fp).unwrap();
    let d = table[0].len();
    let varpis: Vec<Vec<Rational>> = (1..=d).map(|s| model.varpi(s).unwrap()).collect();
    for (s, v) in varpis.iter().enumerate() {
        for k in 1..=fp.n {
            let y = model.y_operator(k).unwrap();
            let lhs = y.mul_vec(v);
            let rhs: Vec<Rational> = v.iter().map(|x| x * &table[k - 1][s]).collect();
            assert_eq!(lhs, rhs, "y{} on varpi{}", k, s + 1);
        }
    }
    assert!(model.orbit_span(&varpis).unwrap());
    let pt = build_p_tilde(fp).unwrap();
    let space = intertwiner_space(&pt, &rep, &pres).unwrap();
    assert!(contains_isomorphism(&space));
}

#[test]
fn case_a_two_dimensional() {
    let fp = params(1, 2, 1, "0", &[-1], &[0], &["3/5"]);
    let model = TensorModel::new(&fp).unwrap();
    assert_eq!(model.dim(), 2);
    let y = model.y_operator(1).unwrap();
    // y² = (ν/2)² on the image
    let sq = y.matmul(&y);
    assert_eq!(sq, ExactMatrix::scalar(2, &rat(9, 100)));
    full_check(&fp);
}

#[test]
fn case_b_one_dimensional() {
    let fp = params(1, 2, 1, "0", &[0], &[-1], &["3/5"]);
    let model = TensorModel::new(&fp).unwrap();
    assert_eq!(model.dim(), 1);
    let rep = model.linear_rep().unwrap();
    assert_eq!(
        rep.get(Generator::Gamma).unwrap().as_scalar(),
        Some(int(-1))
    );
    assert_eq!(rep.get(Generator::Y(1)).unwrap().as_scalar(), Some(half()));
    full_check(&fp);
}

#[test]
fn split_rank_two() {
    let fp = params(1, 1, 2, "0", &[0], &[], &["3/5"]);
    let model = TensorModel::new(&fp).unwrap();
    assert_eq!(model.dim(), 4);
    let v = model.varpi(1).unwrap();
    let y1 = model.y_operator(1).unwrap();
    let y2 = model.y_operator(2).unwrap();
    assert_eq!(
        y1.mul_vec(&v),
        v.iter().map(|x| x * rat(4, 5)).collect::<Vec<_>>()
    );
    assert_eq!(
        y2.mul_vec(&v),
        v.iter().map(|x| x * rat(-1, 5)).collect::<Vec<_>>()
    );
    full_check(&fp);
}

#[test]
fn larger_points() {
    for fp in [
        params(1, 2, 2, "0", &[-1], &[-1], &["3/5"]),
        params(1, 2, 2, "0", &[-2], &[0], &["3/5"]),
        params(1, 2, 3, "0", &[-1], &[-2], &["3/5"]),
        params(1, 3, 3, "0", &[0], &[-1, -2], &["3/5"]),
        params(2, 2, 2, "0", &[0, 0], &[], &["3/5", "7/3"]),
        params(1, 3, 2, "1", &[1], &[-1, -2], &["3/5"]),
        params(2, 3, 2, "0", &[-1, 0], &[-1], &["3/5", "7/3"]),
    ] {
        full_check(&fp);
    }
}

#[test]
fn rho_route_agrees() {
    for fp in [
        params(1, 2, 1, "0", &[-1], &[0], &["3/5"]),
        params(2, 3, 2, "0", &[-1, 0], &[-1], &["3/5", "7/3"]),
        params(2, 2, 2, "0", &[0, 0], &[], &["3/5", "7/3"]),
        params(1, 3, 2, "1", &[1], &[-1, -2], &["3/5"]),
    ] {
        let d = derive(&fp).unwrap();
        if fp.q > fp.p {
            assert_eq!(ytilde_scalars(&fp), ytilde_scalars_from_rho(&fp, &d));
        }
    }
}

#[test]
fn w_examples() {
    for (xi, dim) in [
        (vec![0i64], 1usize),
        (vec![-1, -2], 2),
        (vec![0, 0, 0], 1),
        (vec![2, 0], 3),
        (vec![1, 0, -1], 8),
    ] {
        let w = WModule::new(vec![], &xi).unwrap();
        assert_eq!(w.dim, dim);
        assert!(w.check_commutators());
        assert!(w.is_diagonal_weight_basis());
    }
}

#[test]
fn guardrail_fires() {
    let fp = params(1, 2, 3, "0", &[-1], &[-2], &["3/5"]);
    let opts = ModelOptions {
        max_dim: 10,
        flip_kappa_sign: false,
    };
    assert!(matches!(
        TensorModel::with_options(&fp, opts),
        Err(TensorError::Guardrail { .. })
    ));
}

#[test]
fn flipped_kappa_is_caught() {
    let fp = params(1, 2, 2, "0", &[-1], &[-1], &["3/5"]);
    let opts = ModelOptions {
        max_dim: DEFAULT_MAX_DIM,
        flip_kappa_sign: true,
    };
    let model = TensorModel::with_options(&fp, opts).unwrap();
    let rep = model.linear_rep().unwrap();
    let report = verify_linear_rep(&image_presentation(&fp).unwrap(), &rep).unwrap();
    assert!(!report.all_passed());
}
