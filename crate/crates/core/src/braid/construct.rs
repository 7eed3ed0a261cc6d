//! Distinguished braids: Artin generators of the pure braid group, point
//! pushes, Brunnian samples, round twists and random words.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::BraidWord;
use crate::error::{Error, Result};

pub(crate) fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// a_ij = ω⁻¹ σ_i² ω with ω = σ_{i+1} ⋯ σ_{j-1}.
pub fn artin_generator(i: usize, j: usize, n: usize) -> Result<BraidWord> {
    if !(1 <= i && i < j && j <= n) {
        return Err(Error::Index(format!("need 1 <= i < j <= n, got ({i}, {j}, {n})")));
    }
    let omega: Vec<i32> = (i + 1..j).map(|k| k as i32).collect();
    let mut letters: Vec<i32> = omega.iter().rev().map(|k| -k).collect();
    letters.extend([i as i32, i as i32]);
    letters.extend(&omega);
    Ok(BraidWord::from_raw(n, letters))
}

/// All Artin generators a_ij, 1 ≤ i < j ≤ n, in lexicographic order.
pub fn artin_generators(n: usize) -> Vec<BraidWord> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(artin_generator(i, j, n).expect("indices in range"));
        }
    }
    out
}

/// Pushes the first marked point once around the j-th one: the Artin
/// generator a_1j. For j = 2..n these freely generate the kernel of
/// forgetting strand 1.
pub fn push_generator(j: usize, n: usize) -> Result<BraidWord> {
    if !(2 <= j && j <= n) {
        return Err(Error::Index(format!("push generator needs 2 <= j <= n, got ({j}, {n})")));
    }
    artin_generator(1, j, n)
}

pub fn push_generators(n: usize) -> Vec<BraidWord> {
    (2..=n).map(|j| push_generator(j, n).expect("indices in range")).collect()
}

/// The full twist (σ_1 ⋯ σ_{k-1})^k about the round curve enclosing marked points 1..k.
pub fn round_twist(k: usize, n: usize) -> Result<BraidWord> {
    if !(2 <= k && k <= n) {
        return Err(Error::Index(format!("round twist needs 2 <= k <= n, got ({k}, {n})")));
    }
    let block: Vec<i32> = (1..k as i32).collect();
    Ok(BraidWord::from_raw(n, block.repeat(k)))
}

/// A Brunnian braid: an iterated commutator [[x_a, x_b], x_c], … of push
/// generators x_j = a_1j, one per strand j ≥ 2.
///
/// Seed 0 gives the plain commutator [[a_12, a_13], a_14] …; other seeds
/// shuffle the generators, flip exponents and conjugate by a random word.
pub fn brunnian_sample(n: usize, seed: u64) -> Result<BraidWord> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("Brunnian samples need n >= 3, got {n}")));
    }
    let mut rng = rng_for(seed);
    let mut gens: Vec<BraidWord> = push_generators(n);
    if seed != 0 {
        gens.shuffle(&mut rng);
        for g in gens.iter_mut() {
            if rng.gen_bool(0.5) {
                *g = g.invert();
            }
        }
    }
    let mut acc = gens[0].clone();
    for g in &gens[1..] {
        acc = BraidWord::commutator(&acc, g)?;
    }
    if seed != 0 {
        let len = rng.gen_range(1..=8);
        let conj = random_word_with(&mut rng, n, len);
        acc = acc.conjugate_by(&conj)?;
    }
    Ok(acc)
}

/// Uniform letters over ±{1..n-1}; deterministic in `seed`.
pub fn random_word(n: usize, length: usize, seed: u64) -> BraidWord {
    random_word_with(&mut rng_for(seed), n, length)
}

pub(crate) fn random_word_with<R: Rng>(rng: &mut R, n: usize, length: usize) -> BraidWord {
    if n < 2 {
        return BraidWord::identity(n);
    }
    let top = n as i32 - 1;
    let letters = (0..length)
        .map(|_| {
            let k = rng.gen_range(1..=top);
            if rng.gen_bool(0.5) {
                k
            } else {
                -k
            }
        })
        .collect();
    BraidWord::from_raw(n, letters)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{delete_strand, is_pure, is_trivial, linking_numbers};

    fn w(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    #[test]
    fn artin_generator_examples() {
        assert_eq!(artin_generator(1, 2, 3).unwrap(), w(3, &[1, 1]));
        assert_eq!(artin_generator(1, 3, 3).unwrap(), w(3, &[-2, 1, 1, 2]));
        assert_eq!(artin_generator(2, 4, 4).unwrap(), w(4, &[-3, 2, 2, 3]));
        assert!(artin_generator(2, 2, 3).is_err());
        assert!(artin_generator(1, 4, 3).is_err());
        assert!(artin_generator(0, 2, 3).is_err());
    }

    #[test]
    fn artin_generators_link_one_pair() {
        for n in 2..=6 {
            for i in 1..=n {
                for j in i + 1..=n {
                    let a = artin_generator(i, j, n).unwrap();
                    assert!(is_pure(&a));
                    let lk = linking_numbers(&a).unwrap();
                    for ((p, q), v) in lk.pairs() {
                        assert_eq!(v, i64::from((p, q) == (i, j)), "a_{i}{j} at ({p},{q})");
                    }
                }
            }
        }
    }

    #[test]
    fn push_generator_examples() {
        assert_eq!(push_generator(2, 3).unwrap(), w(3, &[1, 1]));
        for n in 2..=6 {
            for j in 2..=n {
                let p = push_generator(j, n).unwrap();
                assert!(is_pure(&p));
                assert!(is_trivial(&delete_strand(&p, 1).unwrap()).unwrap());
            }
        }
        assert!(push_generator(1, 3).is_err());
        assert!(push_generator(4, 3).is_err());
    }

    #[test]
    fn round_twist_examples() {
        assert_eq!(round_twist(2, 3).unwrap(), w(3, &[1, 1]));
        let t = round_twist(3, 3).unwrap();
        assert_eq!(t, w(3, &[1, 2, 1, 2, 1, 2]));
        let lk = linking_numbers(&t).unwrap();
        assert!(lk.pairs().iter().all(|&(_, v)| v == 1));

        let t4 = round_twist(3, 4).unwrap();
        assert_eq!(t4.letters(), t.letters());
        let lk = linking_numbers(&t4).unwrap();
        for ((i, j), v) in lk.pairs() {
            assert_eq!(v, i64::from(j <= 3), "({i},{j})");
        }
        assert!(round_twist(1, 3).is_err());
        assert!(round_twist(4, 3).is_err());
    }

    #[test]
    fn brunnian_base_case() {
        let b = brunnian_sample(3, 0).unwrap();
        let a12 = artin_generator(1, 2, 3).unwrap();
        let a13 = artin_generator(1, 3, 3).unwrap();
        assert_eq!(b, BraidWord::commutator(&a12, &a13).unwrap());
        assert!(!is_trivial(&b).unwrap());
        for s in 1..=3 {
            assert!(is_trivial(&delete_strand(&b, s).unwrap()).unwrap());
        }
        assert!(brunnian_sample(2, 0).is_err());
    }

    #[test]
    fn brunnian_samples_are_brunnian() {
        for n in 3..=5 {
            for seed in 0..6 {
                let b = brunnian_sample(n, seed).unwrap();
                assert!(is_pure(&b));
                assert!(!is_trivial(&b).unwrap(), "n={n} seed={seed}");
                for s in 1..=n {
                    assert!(is_trivial(&delete_strand(&b, s).unwrap()).unwrap());
                }
            }
        }
    }

    #[test]
    fn random_word_examples() {
        assert!(random_word(3, 0, 7).is_empty());
        assert_eq!(random_word(5, 37, 1).len(), 37);
        assert_eq!(random_word(5, 20, 9), random_word(5, 20, 9));
        assert_ne!(random_word(5, 20, 9), random_word(5, 20, 10));
        assert!(random_word(4, 200, 3)
            .letters()
            .iter()
            .all(|l| (1..=3).contains(&l.abs())));
    }
}
