//! Free groups and the Artin action of the braid group on them.

use serde::{Deserialize, Serialize};

use super::{is_pure, linking_numbers, BraidWord};
use crate::burau::burau_certifies_nontrivial;
use crate::error::{Error, Result};

pub const DEFAULT_LENGTH_LIMIT: usize = 1_000_000;

/// A freely reduced word in x_1, x_2, ... (letter `k` is x_k, `-k` its inverse).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct FreeGroupWord(Vec<i32>);

impl FreeGroupWord {
    pub fn identity() -> Self {
        Self(Vec::new())
    }

    pub fn generator(k: i32) -> Self {
        assert!(k != 0, "free generator index must be nonzero");
        Self(vec![k])
    }

    /// Reduces `letters` on the way in.
    pub fn from_letters(letters: &[i32]) -> Self {
        let mut w = Self::identity();
        w.push_all(letters.iter().copied());
        w
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn push(&mut self, l: i32) {
        if self.0.last() == Some(&-l) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    fn push_all(&mut self, letters: impl IntoIterator<Item = i32>) {
        for l in letters {
            self.push(l);
        }
    }

    pub fn inverse(&self) -> Self {
        Self(self.0.iter().rev().map(|l| -l).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.push_all(other.0.iter().copied());
        out
    }

    /// [a, b] = a b a⁻¹ b⁻¹
    pub fn commutator(a: &Self, b: &Self) -> Self {
        a.mul(b).mul(&a.inverse()).mul(&b.inverse())
    }

    /// Replaces every x_k by `images[k-1]`.
    pub fn substitute(&self, images: &[FreeGroupWord]) -> Self {
        let mut out = Self::identity();
        for &l in &self.0 {
            let img = &images[l.unsigned_abs() as usize - 1];
            if l > 0 {
                out.push_all(img.0.iter().copied());
            } else {
                out.push_all(img.0.iter().rev().map(|x| -x));
            }
        }
        out
    }
}

/// Images of x_1..x_n under the automorphism induced by `w`.
///
/// σ_i sends x_i ↦ x_i x_{i+1} x_i⁻¹ and x_{i+1} ↦ x_i; σ_i⁻¹ sends
/// x_i ↦ x_{i+1} and x_{i+1} ↦ x_{i+1}⁻¹ x_i x_{i+1}. Letters are applied by
/// precomposition, so the images are built from the current ones by
/// concatenation.
pub fn artin_images(w: &BraidWord, limit: usize) -> Result<Vec<FreeGroupWord>> {
    let mut cur: Vec<FreeGroupWord> = (1..=w.strands() as i32).map(FreeGroupWord::generator).collect();
    for &l in w.letters() {
        let i = l.unsigned_abs() as usize - 1;
        let a = std::mem::take(&mut cur[i]);
        let b = std::mem::take(&mut cur[i + 1]);
        let (new_i, new_next) = if l > 0 {
            (a.mul(&b).mul(&a.inverse()), a)
        } else {
            (b.clone(), b.inverse().mul(&a).mul(&b))
        };
        if new_i.len() > limit || new_next.len() > limit {
            return Err(Error::ResourceLimit { limit });
        }
        cur[i] = new_i;
        cur[i + 1] = new_next;
    }
    Ok(cur)
}

/// Exact word problem: `w` is trivial iff its Artin automorphism fixes every generator.
pub fn is_trivial(w: &BraidWord) -> Result<bool> {
    is_trivial_with_limit(w, DEFAULT_LENGTH_LIMIT)
}

/// Like [`is_trivial`] with an explicit cap on intermediate free-word length.
///
/// A `false` answer may come from a homomorphic image (permutation, linking
/// numbers, or a Burau specialization modulo a large prime) that is not the
/// identity; those are exact certificates of nontriviality. A `true` answer
/// always comes from the Artin action: the word is split as `u·v` and the
/// automorphisms of `u` and `v⁻¹` are compared, which keeps intermediate
/// images far shorter than running the whole word.
pub fn is_trivial_with_limit(w: &BraidWord, limit: usize) -> Result<bool> {
    let w = w.free_reduce();
    if w.is_empty() {
        return Ok(true);
    }
    if !is_pure(&w) {
        return Ok(false);
    }
    if !linking_numbers(&w)?.is_zero() {
        return Ok(false);
    }
    if burau_certifies_nontrivial(&w) {
        return Ok(false);
    }
    let mid = w.len() / 2;
    let u = BraidWord::from_raw(w.strands(), w.letters()[..mid].to_vec());
    let v_inv = BraidWord::from_raw(w.strands(), w.letters()[mid..].to_vec()).invert();
    Ok(artin_images(&u, limit)? == artin_images(&v_inv, limit)?)
}

/// Runs the Artin action on the whole word with no shortcuts.
pub fn is_trivial_by_action(w: &BraidWord, limit: usize) -> Result<bool> {
    let images = artin_images(&w.free_reduce(), limit)?;
    Ok(images
        .iter()
        .enumerate()
        .all(|(k, img)| img.letters() == [k as i32 + 1]))
}

/// Whether two words on the same strand count represent the same braid.
pub fn braids_equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    is_trivial(&u.concat(&v.invert())?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    #[test]
    fn word_problem_examples() {
        assert!(is_trivial(&w(3, &[1, -1])).unwrap());
        assert!(!is_trivial(&w(3, &[1, 1])).unwrap());
        assert!(is_trivial(&w(3, &[1, 2, 1, -2, -1, -2])).unwrap());
        // far commutation
        assert!(is_trivial(&w(4, &[1, 3, -1, -3])).unwrap());
        assert!(!is_trivial(&w(3, &[1, 2, -1, -2])).unwrap());
    }

    #[test]
    fn generator_images() {
        let imgs = artin_images(&w(2, &[1]), 100).unwrap();
        assert_eq!(imgs[0].letters(), &[1, 2, -1]);
        assert_eq!(imgs[1].letters(), &[1]);
        let imgs = artin_images(&w(2, &[-1]), 100).unwrap();
        assert_eq!(imgs[0].letters(), &[2]);
        assert_eq!(imgs[1].letters(), &[-2, 1, 2]);
    }

    #[test]
    fn length_limit_is_reported() {
        let long = w(3, &[1, -2].repeat(20));
        assert_eq!(
            is_trivial_by_action(&long, 50),
            Err(Error::ResourceLimit { limit: 50 })
        );
    }

    #[test]
    fn shortcuts_agree_with_the_plain_action() {
        let relator = w(3, &[1, 2, 1, -2, -1, -2]);
        for word in [relator.clone(), relator.pow(2), w(3, &[1, 1, -2, -2]), w(4, &[1, 3, -1, -3, 2])] {
            assert_eq!(
                is_trivial(&word).unwrap(),
                is_trivial_by_action(&word, DEFAULT_LENGTH_LIMIT).unwrap()
            );
        }
    }

    #[test]
    fn free_word_reduction() {
        let x = FreeGroupWord::from_letters(&[1, 2, -2, -1, 3]);
        assert_eq!(x.letters(), &[3]);
        let a = FreeGroupWord::generator(1);
        assert!(a.mul(&a.inverse()).is_empty());
    }
}
