use super::presentation::{DahaPresentation, Generator};
use super::rep::LinearRep;
use super::DahaError;
use crate::exactmath::{sparse_axpy, ExactMatrix, Rational, RowEchelon, SpanSolver, SparseVec};
use num::traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Basis of {X : X·A(g) = B(g)·X for every generator g}.
///
/// The source module is spanned by translates of a few generating vectors, so
/// X is pinned down by the images of those vectors. The compatibility
/// conditions then form a linear system whose kernel is the answer.
pub fn intertwiner_space(
    a: &LinearRep,
    b: &LinearRep,
    pres: &DahaPresentation,
) -> Result<Vec<ExactMatrix>, DahaError> {
    let gens: &[Generator] = &pres.generators;
    for g in gens {
        a.get(*g).ok_or(DahaError::MissingGenerator(*g))?;
        b.get(*g).ok_or(DahaError::MissingGenerator(*g))?;
    }
    let da = a.dim;
    let db = b.dim;
    // Spanning basis of A: vectors[m] = A(word) e_root, and the matching
    // matrix taking the unknown image of e_root to X·vectors[m].
    let mut vectors: Vec<SparseVec> = Vec::new();
    let mut roots: Vec<usize> = Vec::new();
    let mut transports: Vec<ExactMatrix> = Vec::new();
    let mut seeds: Vec<usize> = Vec::new();
    let mut ech = RowEchelon::new(da);
    for e in 0..da {
        let unit: SparseVec = [(e, Rational::one())].into_iter().collect();
        if ech.contains(&unit) {
            continue;
        }
        let root = seeds.len();
        seeds.push(e);
        ech.insert(unit.clone());
        let mut frontier = vec![vectors.len()];
        vectors.push(unit);
        roots.push(root);
        transports.push(ExactMatrix::identity(db));
        while let Some(m) = frontier.pop() {
            for g in gens {
                let v = a.get(*g).unwrap().mul_sparse(&vectors[m]);
                if ech.insert(v.clone()) {
                    frontier.push(vectors.len());
                    vectors.push(v);
                    roots.push(root);
                    transports.push(b.get(*g).unwrap().matmul(&transports[m]));
                }
            }
        }
    }
    let r = seeds.len();
    let nunk = r * db;
    let solver = SpanSolver::new(da, &vectors);
    // X·vectors[m] as a (db × nunk) matrix acting on the stacked unknowns.
    let lift = |m: usize| -> ExactMatrix {
        let mut out = ExactMatrix::zeros(db, nunk);
        out.place(0, roots[m] * db, &transports[m]);
        out
    };
    let lifts: Vec<ExactMatrix> = (0..vectors.len()).map(lift).collect();
    let mut system = RowEchelon::new(nunk);
    for m in 0..vectors.len() {
        for g in gens {
            let v = a.get(*g).unwrap().mul_sparse(&vectors[m]);
            let coords = solver
                .coordinates(&v)
                .expect("spanning set covers the module");
            // Σ_l c_l X v_l − B(g) X v_m = 0
            let mut lhs = lifts[m].clone();
            lhs = b.get(*g).unwrap().matmul(&lhs).scale(&(-Rational::one()));
            for (l, c) in coords.iter().enumerate() {
                if !c.is_zero() {
                    lhs = lhs.add_matrix(&lifts[l].scale(c));
                }
            }
            for i in 0..db {
                let row = lhs.row(i);
                if !row.is_empty() {
                    system.insert(row.clone());
                }
            }
        }
    }
    let kernel = system.kernel();
    let mut out = Vec::with_capacity(kernel.len());
    for u in kernel {
        // Images of the spanning vectors, then of the standard basis.
        let images: Vec<SparseVec> = lifts.iter().map(|l| l.mul_sparse(&u)).collect();
        let mut x = ExactMatrix::zeros(db, da);
        for e in 0..da {
            let unit: SparseVec = [(e, Rational::one())].into_iter().collect();
            let coords = solver
                .coordinates(&unit)
                .expect("spanning set covers the module");
            let mut col = SparseVec::new();
            for (l, c) in coords.iter().enumerate() {
                sparse_axpy(&mut col, c, &images[l]);
            }
            for (i, v) in col {
                x.set(i, e, v);
            }
        }
        out.push(x);
    }
    Ok(out)
}

/// A pseudo-random combination of the basis, with a fixed seed.
pub fn generic_combination(space: &[ExactMatrix], seed: u64) -> Option<ExactMatrix> {
    let first = space.first()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut acc = ExactMatrix::zeros(first.nrows(), first.ncols());
    for x in space {
        let c = Rational::new(
            rng.gen_range(1i64..=97).into(),
            rng.gen_range(1i64..=13).into(),
        );
        acc = acc.add_matrix(&x.scale(&c));
    }
    Some(acc)
}

/// Whether the space of intertwiners contains an invertible element, tested on
/// a few pseudo-random combinations.
pub fn contains_isomorphism(space: &[ExactMatrix]) -> bool {
    let Some(first) = space.first() else {
        return false;
    };
    if !first.is_square() {
        return false;
    }
    (0..4u64).any(|seed| generic_combination(space, seed).is_some_and(|x| x.rank() == x.nrows()))
}
