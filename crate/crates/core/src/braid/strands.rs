//! Strand bookkeeping: the induced permutation, pairwise linking numbers
//! and the forgetful maps that delete a strand.

use serde::{Deserialize, Serialize};

use super::BraidWord;
use crate::error::{Error, Result};

/// A bijection of {1..n}; `image(i)` is the final position of the strand
/// that starts at position `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i == 0 || i > n || seen[i - 1] {
                return Err(Error::InvalidArgument(format!("{images:?} is not a permutation")));
            }
            seen[i - 1] = true;
        }
        Ok(Self { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &i)| i == k + 1)
    }

    /// First `self`, then `other`.
    pub fn then(&self, other: &Self) -> Self {
        Self {
            images: self.images.iter().map(|&i| other.image(i)).collect(),
        }
    }
}

/// Symmetric matrix of pairwise linking numbers of a pure braid, normalized
/// so that the Artin generator a_ij has lk(i, j) = 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinkingMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl LinkingMatrix {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            entries: vec![0; n * n],
        }
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    /// 1-based strand labels.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    fn add_pair(&mut self, i: usize, j: usize, v: i64) {
        self.entries[(i - 1) * self.n + (j - 1)] += v;
        self.entries[(j - 1) * self.n + (i - 1)] += v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn all_even(&self) -> bool {
        self.entries.iter().all(|&e| e % 2 == 0)
    }

    /// Upper-triangle entries in lexicographic pair order.
    pub fn pairs(&self) -> Vec<((usize, usize), i64)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                out.push(((i, j), self.get(i, j)));
            }
        }
        out
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.n.max(1)).map(|r| r.to_vec()).collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn mod2(&self) -> Vec<Vec<u8>> {
        self.rows()
            .into_iter()
            .map(|r| r.into_iter().map(|e| e.rem_euclid(2) as u8).collect())
            .collect()
    }
}

/// Walks the word, reporting for each letter the two strand labels (1-based)
/// occupying the crossing positions before the swap.
fn for_each_crossing(w: &BraidWord, mut f: impl FnMut(i32, usize, usize)) -> Vec<usize> {
    let mut at: Vec<usize> = (1..=w.strands()).collect();
    for &l in w.letters() {
        let k = l.unsigned_abs() as usize;
        f(l, at[k - 1], at[k]);
        at.swap(k - 1, k);
    }
    at
}

pub fn permutation_of(w: &BraidWord) -> Permutation {
    let at = for_each_crossing(w, |_, _, _| {});
    let mut images = vec![0; w.strands()];
    for (pos, &strand) in at.iter().enumerate() {
        images[strand - 1] = pos + 1;
    }
    Permutation { images }
}

pub fn is_pure(w: &BraidWord) -> bool {
    permutation_of(w).is_identity()
}

/// Half the signed crossing count between each pair of strands.
pub fn linking_numbers(w: &BraidWord) -> Result<LinkingMatrix> {
    let n = w.strands();
    let mut twice = LinkingMatrix::zero(n);
    let at = for_each_crossing(w, |l, a, b| twice.add_pair(a, b, l.signum() as i64));
    if at.iter().enumerate().any(|(p, &s)| s != p + 1) {
        return Err(Error::NotPure);
    }
    // crossings between a fixed pair of strands in a pure braid come in pairs
    for e in twice.entries.iter_mut() {
        debug_assert!(*e % 2 == 0);
        *e /= 2;
    }
    Ok(twice)
}

/// Deletes the strand that starts at position `strand` (1-based).
///
/// Works for any braid: letters crossing the deleted strand are dropped and
/// the rest are re-indexed against its current position.
pub fn delete_strand(w: &BraidWord, strand: usize) -> Result<BraidWord> {
    let n = w.strands();
    if strand == 0 || strand > n {
        return Err(Error::Index(format!("strand {strand} not in 1..={n}")));
    }
    if n == 1 {
        return Err(Error::Index("cannot delete the only strand".into()));
    }
    let mut pos = strand;
    let mut letters = Vec::with_capacity(w.len());
    for &l in w.letters() {
        let k = l.unsigned_abs() as usize;
        if pos == k {
            pos = k + 1;
        } else if pos == k + 1 {
            pos = k;
        } else if pos < k {
            letters.push(l - l.signum());
        } else {
            letters.push(l);
        }
    }
    Ok(BraidWord::from_raw(n - 1, letters))
}

/// Position the strand starting at `strand` ends at; used to track labels through a prefix.
pub fn final_position(w: &BraidWord, strand: usize) -> usize {
    permutation_of(w).image(strand)
}

/// Deletes several strands, given by their starting positions in `w`.
pub fn delete_strands(w: &BraidWord, strands: &[usize]) -> Result<BraidWord> {
    let mut sorted = strands.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != strands.len() {
        return Err(Error::Index(format!("repeated strand in {strands:?}")));
    }
    let mut out = w.clone();
    // highest label first so lower labels keep their meaning
    for &s in sorted.iter().rev() {
        out = delete_strand(&out, s)?;
    }
    Ok(out)
}
