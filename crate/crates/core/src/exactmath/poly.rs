use super::rational::{int, Rational};
use num::traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("variable {0} has no value")]
    Unbound(String),
}

/// Value substituted for a variable.
#[derive(Clone, Debug)]
pub enum Binding {
    Value(Rational),
    Poly(MultiPoly),
}

impl From<Rational> for Binding {
    fn from(r: Rational) -> Self {
        Binding::Value(r)
    }
}

impl From<MultiPoly> for Binding {
    fn from(p: MultiPoly) -> Self {
        Binding::Poly(p)
    }
}

/// Polynomial with rational coefficients in named variables.
///
/// Monomials are exponent vectors aligned with `vars`; zero coefficients are
/// never stored.
#[derive(Clone)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly {
            vars: Vec::new(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        MultiPoly {
            vars: Vec::new(),
            terms,
        }
    }

    pub fn int(n: i64) -> Self {
        Self::constant(int(n))
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![1], Rational::one());
        MultiPoly {
            vars: vec![name.to_string()],
            terms,
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Coefficient of the monomial given as (variable, exponent) pairs.
    pub fn coefficient(&self, monomial: &[(&str, u32)]) -> Rational {
        let mut e = vec![0u32; self.vars.len()];
        for (v, k) in monomial {
            match self.vars.iter().position(|x| x == v) {
                Some(i) => e[i] += k,
                None if *k == 0 => {}
                None => return Rational::zero(),
            }
        }
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    fn with_vars(&self, vars: &[String]) -> Self {
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                vars.iter()
                    .position(|w| w == v)
                    .expect("variable missing from target list")
            })
            .collect();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut ne = vec![0u32; vars.len()];
                for (i, &k) in e.iter().enumerate() {
                    ne[map[i]] += k;
                }
                (ne, c.clone())
            })
            .collect();
        MultiPoly {
            vars: vars.to_vec(),
            terms,
        }
    }

    fn union_vars(&self, other: &Self) -> Vec<String> {
        let mut v = self.vars.clone();
        for x in &other.vars {
            if !v.contains(x) {
                v.push(x.clone());
            }
        }
        v
    }

    /// Drops variables that occur in no monomial.
    pub fn trimmed(&self) -> Self {
        let used: Vec<String> = self
            .vars
            .iter()
            .enumerate()
            .filter(|(i, _)| self.terms.keys().any(|e| e[*i] > 0))
            .map(|(_, v)| v.clone())
            .collect();
        let idx: Vec<usize> = self
            .vars
            .iter()
            .enumerate()
            .filter(|(_, v)| used.contains(v))
            .map(|(i, _)| i)
            .collect();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (idx.iter().map(|&i| e[i]).collect(), c.clone()))
            .collect();
        MultiPoly { vars: used, terms }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return MultiPoly {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
            };
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn add_poly(&self, other: &Self) -> Self {
        let vars = self.union_vars(other);
        let mut a = self.with_vars(&vars);
        let b = other.with_vars(&vars);
        for (e, c) in b.terms {
            let entry = a.terms.entry(e.clone()).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                a.terms.remove(&e);
            }
        }
        a
    }

    pub fn sub_poly(&self, other: &Self) -> Self {
        self.add_poly(&other.scale(&(-Rational::one())))
    }

    pub fn mul_poly(&self, other: &Self) -> Self {
        let vars = self.union_vars(other);
        let a = self.with_vars(&vars);
        let b = other.with_vars(&vars);
        let mut terms: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let entry = terms.entry(e.clone()).or_insert_with(Rational::zero);
                *entry += ca * cb;
                if entry.is_zero() {
                    terms.remove(&e);
                }
            }
        }
        MultiPoly { vars, terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = MultiPoly::int(1);
        for _ in 0..e {
            out = out.mul_poly(self);
        }
        out
    }

    /// Replaces bound variables by values or polynomials. Unbound variables stay.
    pub fn substitute(&self, bindings: &BTreeMap<String, Binding>) -> Self {
        let images: Vec<MultiPoly> = self
            .vars
            .iter()
            .map(|v| match bindings.get(v) {
                Some(Binding::Value(r)) => MultiPoly::constant(r.clone()),
                Some(Binding::Poly(p)) => p.clone(),
                None => MultiPoly::var(v),
            })
            .collect();
        let mut cache: BTreeMap<(usize, u32), MultiPoly> = BTreeMap::new();
        let mut out = MultiPoly::zero();
        for (e, c) in &self.terms {
            let mut t = MultiPoly::constant(c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let f = cache
                    .entry((i, k))
                    .or_insert_with(|| images[i].pow(k))
                    .clone();
                t = t.mul_poly(&f);
            }
            out = out.add_poly(&t);
        }
        out
    }

    /// Substitution with a closure-built binding list.
    pub fn substitute_pairs<I, B>(&self, pairs: I) -> Self
    where
        I: IntoIterator<Item = (String, B)>,
        B: Into<Binding>,
    {
        let map: BTreeMap<String, Binding> =
            pairs.into_iter().map(|(k, v)| (k, v.into())).collect();
        self.substitute(&map)
    }

    pub fn eval(&self, values: &BTreeMap<String, Rational>) -> Result<Rational, PolyError> {
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let v = values
                    .get(&self.vars[i])
                    .ok_or_else(|| PolyError::Unbound(self.vars[i].clone()))?;
                t *= num::traits::pow(v.clone(), k as usize);
            }
            total += t;
        }
        Ok(total)
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        self.sub_poly(other).is_zero()
    }
}

impl Eq for MultiPoly {}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        // Higher total degree first.
        let mut ts: Vec<(&Vec<u32>, &Rational)> = self.terms.iter().collect();
        ts.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        for (e, c) in ts {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{}", self.vars[i], k)
                    }
                })
                .collect();
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            if mono.is_empty() {
                write!(f, "{}", a)?;
            } else if a.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", a, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({})", self)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.add_poly(rhs)
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.sub_poly(rhs)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.mul_poly(rhs)
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        self.add_poly(&rhs)
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        self.sub_poly(&rhs)
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        self.mul_poly(&rhs)
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&(-Rational::one()))
    }
}

impl From<Rational> for MultiPoly {
    fn from(r: Rational) -> Self {
        MultiPoly::constant(r)
    }
}
