use bcdaha::exactmath::rat;
use bcdaha::exactmath::{int, ExactMatrix};
use bcdaha::functor_image::{eigenvalue_table, require_admissible, FunctorParams};
use bcdaha::symcomb::{
    enumerate_standard_tableaux, jm_matrices, murphy_basis_of, reversal, specht_dimension,
    JmVariant, Partition, SpechtModule,
};

fn shapes() -> Vec<Partition> {
    (1..=6).flat_map(Partition::all_of).collect()
}

#[test]
fn specht_dimension_counts_tableaux() {
    for shape in shapes() {
        assert_eq!(
            specht_dimension(&shape) as usize,
            enumerate_standard_tableaux(&shape).len(),
            "{:?}",
            shape.parts()
        );
    }
}

#[test]
fn specht_generators_satisfy_coxeter_relations() {
    for shape in shapes() {
        let sp = SpechtModule::new(&shape);
        let s = sp.simple_matrices();
        let id = ExactMatrix::identity(sp.dim());
        for i in 0..s.len() {
            assert_eq!(s[i].matmul(&s[i]), id);
            for j in i + 1..s.len() {
                let prod = s[i].matmul(&s[j]);
                let order = if j == i + 1 { 3 } else { 2 };
                assert_eq!(
                    prod.pow(order),
                    id,
                    "{:?} s{} s{}",
                    shape.parts(),
                    i + 1,
                    j + 1
                );
            }
        }
    }
}

#[test]
fn jm_elements_commute_with_content_spectrum() {
    for shape in shapes() {
        let sp = SpechtModule::new(&shape);
        let l = jm_matrices(&sp, JmVariant::L);
        for a in &l {
            for b in &l {
                assert!(a.commutator(b).is_zero());
            }
        }
        let mb = murphy_basis_of(&sp, JmVariant::L).unwrap();
        let mut spectrum: Vec<Vec<i64>> = mb
            .eigenvalues
            .iter()
            .map(|v| {
                v.iter()
                    .map(|x| x.to_integer().try_into().unwrap())
                    .collect()
            })
            .collect();
        let mut contents: Vec<Vec<i64>> = enumerate_standard_tableaux(&shape)
            .iter()
            .map(|t| t.contents())
            .collect();
        spectrum.sort();
        contents.sort();
        assert_eq!(spectrum, contents);
    }
}

#[test]
fn reversed_jm_elements_are_conjugates() {
    for shape in shapes() {
        let sp = SpechtModule::new(&shape);
        let m = sp.degree();
        let l = jm_matrices(&sp, JmVariant::L);
        let lhat = jm_matrices(&sp, JmVariant::LHat);
        let sigma = sp.perm_matrix(&reversal(m));
        for i in 1..=m {
            assert_eq!(
                lhat[i - 1],
                sigma.matmul(&l[m - i]).matmul(&sigma),
                "{:?} i={}",
                shape.parts(),
                i
            );
        }
    }
}

#[test]
fn torus_eigenvalues_telescope() {
    for (p, q, n, nvec, xi) in [
        (1usize, 2usize, 3usize, vec![-3i64], vec![0i64]),
        (1, 1, 3, vec![-1], vec![]),
        (2, 2, 2, vec![0, 0], vec![]),
        (2, 3, 2, vec![-1, 0], vec![-1]),
    ] {
        let params = FunctorParams::new(
            p,
            q,
            n,
            int(0),
            nvec,
            xi,
            (0..p).map(|i| rat(3 + 4 * i as i64, 5)).collect(),
        );
        let a = require_admissible(&params).unwrap();
        let table = eigenvalue_table(&params).unwrap();
        for r in 1..=p {
            for k in a.m[r - 1] + 1..a.m[r] {
                for s in 0..table[0].len() {
                    assert_eq!(&table[k - 1][s] - &table[k][s], int(1));
                }
            }
        }
    }
}
