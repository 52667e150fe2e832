use std::fmt;

/// Permutation of {0, .., n-1}; `images[i]` is the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Self {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            assert!(
                i < images.len() && !seen[i],
                "not a permutation: {:?}",
                images
            );
            seen[i] = true;
        }
        Permutation { images }
    }

    /// Transposition of `i` and `j` (0-based).
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i, j);
        p
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    pub fn sign(&self) -> i64 {
        let mut seen = vec![false; self.len()];
        let mut s = 1;
        for i in 0..self.len() {
            if seen[i] {
                continue;
            }
            let mut j = i;
            let mut l = 0;
            while !seen[j] {
                seen[j] = true;
                j = self.images[j];
                l += 1;
            }
            if l % 2 == 0 {
                s = -s;
            }
        }
        s
    }
}

/// Generator of the hyperoctahedral group W(BC_n): `S(i)` swaps coordinates
/// i and i+1 (1-based), `Gamma` flips the sign of the last coordinate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BcGenerator {
    S(usize),
    Gamma,
}

impl fmt::Display for BcGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BcGenerator::S(i) => write!(f, "S{}", i),
            BcGenerator::Gamma => write!(f, "gamma"),
        }
    }
}

/// Signed permutation acting on R^n by ε_i ↦ signs[i] ε_{perm(i)} (0-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    perm: Permutation,
    signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            perm: Permutation::identity(n),
            signs: vec![1; n],
        }
    }

    pub fn new(perm: Permutation, signs: Vec<i8>) -> Self {
        assert_eq!(perm.len(), signs.len());
        assert!(signs.iter().all(|&s| s == 1 || s == -1));
        SignedPermutation { perm, signs }
    }

    pub fn rank(&self) -> usize {
        self.signs.len()
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// S_{ij}: transposition of coordinates i and j (1-based).
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        SignedPermutation {
            perm: Permutation::transposition(n, i - 1, j - 1),
            signs: vec![1; n],
        }
    }

    /// γ_i: sign flip of coordinate i (1-based).
    pub fn gamma(n: usize, i: usize) -> Self {
        let mut g = Self::identity(n);
        g.signs[i - 1] = -1;
        g
    }

    pub fn generator(n: usize, g: BcGenerator) -> Self {
        match g {
            BcGenerator::S(i) => Self::transposition(n, i, i + 1),
            BcGenerator::Gamma => Self::gamma(n, n),
        }
    }

    /// Product of the letters, left to right.
    pub fn from_word(n: usize, word: &[BcGenerator]) -> Self {
        word.iter().fold(Self::identity(n), |acc, &g| {
            acc.compose(&Self::generator(n, g))
        })
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.rank();
        assert_eq!(n, other.rank());
        let perm = self.perm.compose(&other.perm);
        let signs = (0..n)
            .map(|i| other.signs[i] * self.signs[other.perm.apply(i)])
            .collect();
        SignedPermutation { perm, signs }
    }

    pub fn inverse(&self) -> Self {
        let inv = self.perm.inverse();
        let signs = (0..self.rank()).map(|j| self.signs[inv.apply(j)]).collect();
        SignedPermutation { perm: inv, signs }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rank())
    }

    /// Image of the signed basis vector ±ε_i as (sign, index), 0-based.
    pub fn image(&self, i: usize) -> (i8, usize) {
        (self.signs[i], self.perm.apply(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_basics() {
        let p = Permutation::from_images(vec![1, 2, 0]);
        assert_eq!(p.sign(), 1);
        assert_eq!(p.compose(&p.inverse()), Permutation::identity(3));
        assert_eq!(Permutation::transposition(4, 0, 3).sign(), -1);
    }

    #[test]
    fn signed_composition_is_action() {
        // Composition must agree with acting on signed basis vectors.
        let n = 3;
        let a = SignedPermutation::from_word(
            n,
            &[BcGenerator::S(2), BcGenerator::Gamma, BcGenerator::S(1)],
        );
        let b = SignedPermutation::from_word(n, &[BcGenerator::Gamma, BcGenerator::S(2)]);
        let ab = a.compose(&b);
        for i in 0..n {
            let (s1, j) = b.image(i);
            let (s2, k) = a.image(j);
            assert_eq!(ab.image(i), (s1 * s2, k));
        }
        assert!(ab.compose(&ab.inverse()).is_identity());
    }

    #[test]
    fn coxeter_relations_bc() {
        let n = 3;
        let s2 = SignedPermutation::generator(n, BcGenerator::S(2));
        let g = SignedPermutation::generator(n, BcGenerator::Gamma);
        let x = s2.compose(&g);
        assert!(x.compose(&x).compose(&x).compose(&x).is_identity());
        assert!(!x.compose(&x).is_identity());
        let s1 = SignedPermutation::generator(n, BcGenerator::S(1));
        assert_eq!(s1.compose(&g), g.compose(&s1));
        assert_eq!(s2.compose(&g).compose(&s2), SignedPermutation::gamma(n, 2));
    }
}
