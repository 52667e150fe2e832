use super::perm::{BcGenerator, SignedPermutation};
use std::collections::{HashMap, VecDeque};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CosetError {
    #[error("block sizes {blocks:?} do not sum to the rank {n}")]
    BlockSum { blocks: Vec<usize>, n: usize },
    #[error("at least one block (the last, sign-free one) is required")]
    NoBlocks,
}

/// Every element of W(BC_n) with its reduced word: shortest first, and
/// lexicographically smallest among shortest (generators ordered
/// S_1 < .. < S_{n-1} < gamma).
pub fn enumerate_group(n: usize) -> Vec<(SignedPermutation, Vec<BcGenerator>)> {
    let gens: Vec<BcGenerator> = (1..n)
        .map(BcGenerator::S)
        .chain(std::iter::once(BcGenerator::Gamma))
        .collect();
    let gens = if n == 0 { Vec::new() } else { gens };
    let id = SignedPermutation::identity(n);
    let mut seen: HashMap<SignedPermutation, usize> = HashMap::new();
    let mut out = vec![(id.clone(), Vec::new())];
    seen.insert(id, 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        for &g in &gens {
            let (w, word) = &out[k];
            let next = w.compose(&SignedPermutation::generator(n, g));
            if seen.contains_key(&next) {
                continue;
            }
            let mut nw = word.clone();
            nw.push(g);
            seen.insert(next.clone(), out.len());
            queue.push_back(out.len());
            out.push((next, nw));
        }
    }
    out
}

/// Left cosets w·Γ̃ of the subgroup Γ̃ = S_{n_1} × .. × S_{n_p} × W(BC_{n_last})
/// inside W(BC_n). Blocks are consecutive; only the last block allows sign changes.
#[derive(Clone, Debug)]
pub struct CosetTable {
    n: usize,
    blocks: Vec<usize>,
    block_of: Vec<usize>,
    reps: Vec<(SignedPermutation, Vec<BcGenerator>)>,
    index: HashMap<Vec<(i64, Vec<usize>)>, usize>,
}

impl CosetTable {
    pub fn new(n: usize, blocks: &[usize]) -> Result<Self, CosetError> {
        if blocks.is_empty() {
            return Err(CosetError::NoBlocks);
        }
        if blocks.iter().sum::<usize>() != n {
            return Err(CosetError::BlockSum {
                blocks: blocks.to_vec(),
                n,
            });
        }
        let mut block_of = Vec::with_capacity(n);
        for (b, &sz) in blocks.iter().enumerate() {
            block_of.extend(std::iter::repeat_n(b, sz));
        }
        let mut table = CosetTable {
            n,
            blocks: blocks.to_vec(),
            block_of,
            reps: Vec::new(),
            index: HashMap::new(),
        };
        for (w, word) in enumerate_group(n) {
            let key = table.key(&w);
            if !table.index.contains_key(&key) {
                table.index.insert(key, table.reps.len());
                table.reps.push((w, word));
            }
        }
        Ok(table)
    }

    fn last_block(&self) -> usize {
        self.blocks.len() - 1
    }

    /// Invariant of the coset wΓ̃: the image under w of each block, with
    /// signs kept on the sign-free blocks only.
    fn key(&self, w: &SignedPermutation) -> Vec<(i64, Vec<usize>)> {
        let mut images: Vec<Vec<(i64, usize)>> = vec![Vec::new(); self.blocks.len()];
        for i in 0..self.n {
            let (s, j) = w.image(i);
            let b = self.block_of[i];
            let s = if b == self.last_block() { 1 } else { s as i64 };
            images[b].push((s, j));
        }
        images
            .into_iter()
            .enumerate()
            .map(|(b, mut v)| {
                v.sort();
                (
                    b as i64,
                    v.into_iter()
                        .map(|(s, j)| if s < 0 { self.n + j } else { j })
                        .collect(),
                )
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Minimal-length representative of each coset with its reduced word.
    pub fn representatives(&self) -> &[(SignedPermutation, Vec<BcGenerator>)] {
        &self.reps
    }

    /// Block index (0-based) of coordinate i (0-based).
    pub fn block_of(&self, i: usize) -> usize {
        self.block_of[i]
    }

    pub fn in_subgroup(&self, h: &SignedPermutation) -> bool {
        (0..self.n).all(|i| {
            let (s, j) = h.image(i);
            let b = self.block_of[i];
            self.block_of[j] == b && (b == self.last_block() || s == 1)
        })
    }

    /// Writes g = rep_c · h with h in Γ̃; returns (c, h).
    pub fn decompose(&self, g: &SignedPermutation) -> (usize, SignedPermutation) {
        let c = self.index[&self.key(g)];
        let h = self.reps[c].0.inverse().compose(g);
        debug_assert!(self.in_subgroup(&h));
        (c, h)
    }
}

/// 2^n n! / (2^{n_last} n_last! Π n_i!).
pub fn coset_count(blocks: &[usize]) -> u128 {
    use super::partition::factorial;
    let n: usize = blocks.iter().sum();
    let last = *blocks.last().unwrap_or(&0);
    let mut d = factorial(last) << last;
    for &b in &blocks[..blocks.len().saturating_sub(1)] {
        d *= factorial(b);
    }
    (factorial(n) << n) / d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders() {
        assert_eq!(enumerate_group(1).len(), 2);
        assert_eq!(enumerate_group(2).len(), 8);
        assert_eq!(enumerate_group(3).len(), 48);
        let g = enumerate_group(3);
        assert!(g.windows(2).all(|w| w[0].1.len() <= w[1].1.len()));
    }

    #[test]
    fn coset_enumeration_matches_count() {
        for blocks in [
            vec![1, 0],
            vec![0, 1],
            vec![2, 0],
            vec![1, 1],
            vec![1, 1, 1],
            vec![2, 1],
            vec![0, 0, 3],
            vec![1, 2, 0],
        ] {
            let n = blocks.iter().sum();
            let t = CosetTable::new(n, &blocks).unwrap();
            assert_eq!(t.len() as u128, coset_count(&blocks), "blocks {:?}", blocks);
            for (w, word) in t.representatives() {
                assert_eq!(&SignedPermutation::from_word(n, word), w);
                let (c, h) = t.decompose(w);
                assert!(h.is_identity());
                assert_eq!(&t.representatives()[c].0, w);
            }
        }
        assert!(CosetTable::new(2, &[1]).is_err());
    }
}
