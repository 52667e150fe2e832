use bcdaha::daha::{induce_module, make_presentation, verify_linear_rep, DahaType, Generator};
use bcdaha::exactmath::{rat, ExactMatrix, MultiPoly, Rational};
use bcdaha::functor_image::{
    build_p_tilde, build_seed, image_presentation, FunctorParams, LastBlockIndex,
};
use bcdaha::symcomb::{BcGenerator, Permutation, SignedPermutation};
use proptest::prelude::*;
use std::collections::BTreeMap;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(a, b)| rat(a, b))
}

fn matrix() -> impl Strategy<Value = ExactMatrix> {
    (1usize..=5, 1usize..=6).prop_flat_map(|(r, c)| {
        proptest::collection::vec(
            prop_oneof![3 => Just(rat(0, 1)), 2 => small_rational()],
            r * c,
        )
        .prop_map(move |v| ExactMatrix::from_dense(v.chunks(c).map(|row| row.to_vec()).collect()))
    })
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    proptest::collection::vec((small_rational(), 0u32..=2, 0u32..=2), 0..4).prop_map(|terms| {
        terms.into_iter().fold(MultiPoly::zero(), |acc, (c, i, j)| {
            acc + (MultiPoly::constant(c) * MultiPoly::var("x").pow(i) * MultiPoly::var("y").pow(j))
        })
    })
}

fn signed_perm(n: usize) -> impl Strategy<Value = SignedPermutation> {
    (
        Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
        proptest::collection::vec(prop::bool::ANY, n),
    )
        .prop_map(|(img, signs)| {
            SignedPermutation::new(
                Permutation::from_images(img),
                signs.into_iter().map(|b| if b { -1 } else { 1 }).collect(),
            )
        })
}

proptest! {
    #[test]
    fn rank_nullity(m in matrix()) {
        let ns = m.nullspace();
        prop_assert_eq!(m.rank() + ns.len(), m.ncols());
        for v in &ns {
            prop_assert!(m.matmul(v).is_zero());
        }
    }

    #[test]
    fn polynomial_ring_laws(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!((p.clone() + q.clone()) * r.clone(), p.clone() * r.clone() + q.clone() * r.clone());
        prop_assert_eq!(p.clone() * q.clone(), q.clone() * p.clone());
        prop_assert_eq!((p.clone() * q.clone()) * r.clone(), p.clone() * (q.clone() * r.clone()));
        prop_assert_eq!(p.clone() - p.clone(), MultiPoly::zero());
    }

    #[test]
    fn evaluation_is_a_ring_map(p in poly(), q in poly(), x in small_rational(), y in small_rational()) {
        let vals: BTreeMap<String, Rational> = [("x".to_string(), x), ("y".to_string(), y)].into();
        let prod = (p.clone() * q.clone()).eval(&vals).unwrap();
        prop_assert_eq!(prod, p.eval(&vals).unwrap() * q.eval(&vals).unwrap());
    }

    #[test]
    fn signed_permutation_group_laws(a in signed_perm(4), b in signed_perm(4), c in signed_perm(4)) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        prop_assert!(a.compose(&a.inverse()).is_identity());
        for i in 0..4 {
            let (s1, j) = b.image(i);
            let (s2, k) = a.image(j);
            prop_assert_eq!(a.compose(&b).image(i), (s1 * s2, k));
        }
    }

    #[test]
    fn words_multiply(w1 in proptest::collection::vec(0usize..4, 0..6), w2 in proptest::collection::vec(0usize..4, 0..6)) {
        let letter = |i: usize| if i == 3 { BcGenerator::Gamma } else { BcGenerator::S(i + 1) };
        let a: Vec<BcGenerator> = w1.iter().map(|&i| letter(i)).collect();
        let b: Vec<BcGenerator> = w2.iter().map(|&i| letter(i)).collect();
        let mut ab = a.clone();
        ab.extend(b.iter().copied());
        prop_assert_eq!(
            SignedPermutation::from_word(4, &ab),
            SignedPermutation::from_word(4, &a).compose(&SignedPermutation::from_word(4, &b))
        );
    }
}

fn fp(p: usize, q: usize, n: usize, nvec: &[i64], xi: &[i64]) -> FunctorParams {
    FunctorParams::new(
        p,
        q,
        n,
        rat(0, 1),
        nvec.to_vec(),
        xi.to_vec(),
        (0..p).map(|i| rat(3 + 4 * i as i64, 5)).collect(),
    )
}

fn modules() -> Vec<FunctorParams> {
    vec![
        fp(1, 2, 2, &[-1], &[-1]),
        fp(1, 1, 2, &[0], &[]),
        fp(2, 3, 2, &[-1, 0], &[-1]),
        fp(1, 3, 3, &[0], &[-1, -2]),
    ]
}

#[test]
fn scaling_isomorphism() {
    for params in modules() {
        let rep = build_p_tilde(&params).unwrap();
        let pres = image_presentation(&params).unwrap();
        for c in [rat(2, 1), rat(-1, 1)] {
            let scaled = make_presentation(DahaType::BC, params.n, pres.params.scaled(&c));
            assert!(verify_linear_rep(&scaled, &rep.scale_y(&c))
                .unwrap()
                .all_passed());
            if c != rat(1, 1) {
                assert!(!verify_linear_rep(&scaled, &rep).unwrap().all_passed());
            }
        }
    }
}

#[test]
fn induced_y_commute_and_contain_seed_spectrum() {
    for params in modules() {
        let data = build_seed(&params, LastBlockIndex::Shifted)
            .unwrap()
            .unwrap();
        let rep = induce_module(&data, &image_presentation(&params).unwrap()).unwrap();
        let ys: Vec<&ExactMatrix> = (1..=params.n)
            .map(|k| rep.get(Generator::Y(k)).unwrap())
            .collect();
        for a in &ys {
            for b in &ys {
                assert!(a.commutator(b).is_zero());
            }
        }
        // Coset 0 is the identity, so e_s spans a joint eigenline with the
        // seed eigenvalues.
        let table = data.seed.y_eigenvalues();
        for s in 0..data.seed.dim() {
            let mut e = vec![rat(0, 1); rep.dim];
            e[s] = rat(1, 1);
            for (k, y) in ys.iter().enumerate() {
                let ye = y.mul_vec(&e);
                let want: Vec<Rational> = e.iter().map(|x| x * &table[k][s]).collect();
                assert_eq!(ye, want);
            }
        }
    }
}
