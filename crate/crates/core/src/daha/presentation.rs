use crate::exactmath::{int, Rational};
use std::fmt;

/// Generator of a degenerate affine Hecke algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    /// Simple transposition S_i, 1 ≤ i < n.
    S(usize),
    /// Sign change γ_n of the last coordinate (type BC only).
    Gamma,
    /// Polynomial generator y_i, 1 ≤ i ≤ n.
    Y(usize),
}

impl Generator {
    pub fn name(&self, n: usize) -> String {
        match self {
            Generator::S(i) => format!("S{}", i),
            Generator::Gamma => format!("gamma{}", n),
            Generator::Y(i) => format!("y{}", i),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::S(i) => write!(f, "S{}", i),
            Generator::Gamma => write!(f, "gamma"),
            Generator::Y(i) => write!(f, "y{}", i),
        }
    }
}

pub type Word = Vec<Generator>;

/// Formal linear combination of words.
pub type Combination = Vec<(Rational, Word)>;

/// `lhs = rhs` in the algebra.
#[derive(Clone, Debug)]
pub struct Relation {
    pub name: String,
    pub lhs: Combination,
    pub rhs: Combination,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DahaType {
    A,
    BC,
}

/// Parameters in the normalization
/// type A:  S_i y_i − y_{i+1} S_i = κ;
/// type BC: S_i y_i − y_{i+1} S_i = κ₁ and γ_n y_n + y_n γ_n = κ₂.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DahaParameters {
    A { kappa: Rational },
    BC { kappa1: Rational, kappa2: Rational },
}

impl DahaParameters {
    /// Constant in the S_i-relation.
    pub fn s_constant(&self) -> &Rational {
        match self {
            DahaParameters::A { kappa } => kappa,
            DahaParameters::BC { kappa1, .. } => kappa1,
        }
    }

    /// Constant in the γ_n-relation, if any.
    pub fn gamma_constant(&self) -> Option<&Rational> {
        match self {
            DahaParameters::A { .. } => None,
            DahaParameters::BC { kappa2, .. } => Some(kappa2),
        }
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        match self {
            DahaParameters::A { kappa } => DahaParameters::A { kappa: kappa * c },
            DahaParameters::BC { kappa1, kappa2 } => DahaParameters::BC {
                kappa1: kappa1 * c,
                kappa2: kappa2 * c,
            },
        }
    }
}

#[derive(Clone, Debug)]
pub struct DahaPresentation {
    pub kind: DahaType,
    pub rank: usize,
    pub params: DahaParameters,
    /// Type A only: also impose y_1 + .. + y_n = 0.
    pub sum_zero: bool,
    pub generators: Vec<Generator>,
    pub relations: Vec<Relation>,
}

fn w(gs: &[Generator]) -> Word {
    gs.to_vec()
}

fn one(word: Word) -> Combination {
    vec![(int(1), word)]
}

fn commute(name: String, a: Generator, b: Generator) -> Relation {
    Relation {
        name,
        lhs: one(w(&[a, b])),
        rhs: one(w(&[b, a])),
    }
}

fn braid(name: String, a: Generator, b: Generator, m: usize) -> Relation {
    let alt = |x: Generator, y: Generator| -> Word {
        (0..m).map(|k| if k % 2 == 0 { x } else { y }).collect()
    };
    Relation {
        name,
        lhs: one(alt(a, b)),
        rhs: one(alt(b, a)),
    }
}

fn involution(name: String, a: Generator) -> Relation {
    Relation {
        name,
        lhs: one(w(&[a, a])),
        rhs: one(Vec::new()),
    }
}

/// Presentation of the degenerate affine Hecke algebra of the given type.
///
/// Coxeter relations of S_n (type A) or W(BC_n) (type BC), commutativity of
/// the y_i, and the cross relations between the two.
pub fn make_presentation(kind: DahaType, rank: usize, params: DahaParameters) -> DahaPresentation {
    make_presentation_with(kind, rank, params, false)
}

pub fn make_presentation_with(
    kind: DahaType,
    rank: usize,
    params: DahaParameters,
    sum_zero: bool,
) -> DahaPresentation {
    let n = rank;
    match (&kind, &params) {
        (DahaType::A, DahaParameters::A { .. }) | (DahaType::BC, DahaParameters::BC { .. }) => {}
        _ => panic!("parameter family does not match algebra type"),
    }
    let s = Generator::S;
    let y = Generator::Y;
    let g = Generator::Gamma;
    let mut gens: Vec<Generator> = (1..n).map(s).collect();
    if kind == DahaType::BC && n >= 1 {
        gens.push(g);
    }
    gens.extend((1..=n).map(y));

    let mut rels = Vec::new();
    for i in 1..n {
        rels.push(involution(format!("S{i}^2 = 1"), s(i)));
    }
    for i in 1..n.saturating_sub(1) {
        rels.push(braid(
            format!("S{i} S{} S{i} = S{} S{i} S{}", i + 1, i + 1, i + 1),
            s(i),
            s(i + 1),
            3,
        ));
    }
    for i in 1..n {
        for j in i + 2..n {
            rels.push(commute(format!("S{i} S{j} = S{j} S{i}"), s(i), s(j)));
        }
    }
    if kind == DahaType::BC && n >= 1 {
        rels.push(involution(format!("gamma{n}^2 = 1"), g));
        if n >= 2 {
            rels.push(braid(
                format!("(S{} gamma{n})^4 = 1", n - 1),
                s(n - 1),
                g,
                4,
            ));
        }
        for i in 1..n.saturating_sub(1) {
            rels.push(commute(format!("S{i} gamma{n} = gamma{n} S{i}"), s(i), g));
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            rels.push(commute(format!("y{i} y{j} = y{j} y{i}"), y(i), y(j)));
        }
    }
    let k1 = params.s_constant().clone();
    for i in 1..n {
        rels.push(Relation {
            name: format!("S{i} y{i} - y{} S{i} = {}", i + 1, k1),
            lhs: vec![(int(1), w(&[s(i), y(i)])), (int(-1), w(&[y(i + 1), s(i)]))],
            rhs: vec![(k1.clone(), Vec::new())],
        });
        for j in 1..=n {
            if j != i && j != i + 1 {
                rels.push(commute(format!("S{i} y{j} = y{j} S{i}"), s(i), y(j)));
            }
        }
    }
    if let (DahaType::BC, Some(k2)) = (kind, params.gamma_constant()) {
        if n >= 1 {
            rels.push(Relation {
                name: format!("gamma{n} y{n} + y{n} gamma{n} = {}", k2),
                lhs: vec![(int(1), w(&[g, y(n)])), (int(1), w(&[y(n), g]))],
                rhs: vec![(k2.clone(), Vec::new())],
            });
            for j in 1..n {
                rels.push(commute(format!("gamma{n} y{j} = y{j} gamma{n}"), g, y(j)));
            }
        }
    }
    if kind == DahaType::A && sum_zero {
        rels.push(Relation {
            name: "y1 + .. + yn = 0".to_string(),
            lhs: (1..=n).map(|i| (int(1), vec![y(i)])).collect(),
            rhs: Vec::new(),
        });
    }
    DahaPresentation {
        kind,
        rank,
        params,
        sum_zero,
        generators: gens,
        relations: rels,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relation_counts() {
        let p = make_presentation(
            DahaType::BC,
            2,
            DahaParameters::BC {
                kappa1: int(1),
                kappa2: int(1),
            },
        );
        let names: Vec<&str> = p.relations.iter().map(|r| r.name.as_str()).collect();
        assert!(names.contains(&"(S1 gamma2)^4 = 1"));
        assert!(names.contains(&"gamma2 y2 + y2 gamma2 = 1"));
        assert!(names.contains(&"gamma2 y1 = y1 gamma2"));
        assert_eq!(p.generators.len(), 4);
        let a = make_presentation(DahaType::A, 3, DahaParameters::A { kappa: int(1) });
        assert!(a.relations.iter().any(|r| r.name == "S1 S2 S1 = S2 S1 S2"));
        assert!(!a.generators.contains(&Generator::Gamma));
    }
}
