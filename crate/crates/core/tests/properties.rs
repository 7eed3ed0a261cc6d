use braid_congruence::braid::{
    artin_generator, delete_strand, final_position, is_pure, is_trivial, linking_numbers,
    permutation_of, random_word, FreeGroupWord,
};
use braid_congruence::burau::{integral_burau, symplectize};
use braid_congruence::finite_group::{closure, ModMatrix};
use braid_congruence::matrix::IntMatrix;
use braid_congruence::oracles::{in_level_symplectic, membership, sample_with, Stratum};
use braid_congruence::symplectic::{transvection, SympVector};
use braid_congruence::BraidWord;
use num_bigint::BigInt;
use num_traits::{One, Signed};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_word(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    let letters = (1..n as i32).flat_map(|i| [i, -i]).collect::<Vec<_>>();
    prop::collection::vec(prop::sample::select(letters), 0..=max_len)
        .prop_map(move |l| BraidWord::new(n, l).unwrap())
}

fn arb_sized_word(max_len: usize) -> impl Strategy<Value = BraidWord> {
    (3usize..=6).prop_flat_map(move |n| arb_word(n, max_len))
}

fn arb_pure(n: usize) -> impl Strategy<Value = BraidWord> {
    any::<u64>().prop_map(move |seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        sample_with(&mut rng, Stratum::ConjugatedGenerators, n)
    })
}

fn relator(n: usize, i: i32) -> BraidWord {
    if i + 1 < n as i32 {
        BraidWord::new(n, vec![i, i + 1, i, -(i + 1), -i, -(i + 1)]).unwrap()
    } else {
        BraidWord::new(n, vec![i, -i]).unwrap()
    }
}

fn arb_free(len: usize) -> impl Strategy<Value = FreeGroupWord> {
    prop::collection::vec(prop::sample::select(vec![1, -1, 2, -2, 3, -3]), 0..=len)
        .prop_map(|l| FreeGroupWord::from_letters(&l))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn word_times_inverse_is_trivial(w in arb_sized_word(30)) {
        prop_assert!(is_trivial(&w.concat(&w.invert()).unwrap()).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn conjugated_relators_are_trivial(g in arb_word(5, 12), i in 1i32..4) {
        let w = relator(5, i).conjugate_by(&g).unwrap();
        prop_assert!(is_trivial(&w).unwrap());
    }

    #[test]
    fn composition_laws(a in arb_word(5, 12), b in arb_word(5, 12), c in arb_word(5, 12)) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left.free_reduce(), right.free_reduce());
        prop_assert_eq!(a.invert().invert(), a.clone());
        let pab = permutation_of(&a.concat(&b).unwrap());
        prop_assert_eq!(pab, permutation_of(&a).then(&permutation_of(&b)));
    }

    #[test]
    fn linking_is_additive(u in arb_pure(5), v in arb_pure(5)) {
        let uv = u.concat(&v).unwrap();
        prop_assert!(is_pure(&uv));
        prop_assert_eq!(
            linking_numbers(&uv).unwrap(),
            linking_numbers(&u).unwrap().add(&linking_numbers(&v).unwrap())
        );
    }

    #[test]
    fn deletion_commutes_with_composition(u in arb_word(5, 10), v in arb_word(5, 10), i in 1usize..=5) {
        let whole = delete_strand(&u.concat(&v).unwrap(), i).unwrap();
        let i2 = final_position(&u, i);
        let parts = delete_strand(&u, i).unwrap().concat(&delete_strand(&v, i2).unwrap()).unwrap();
        prop_assert!(is_trivial(&whole.concat(&parts.invert()).unwrap()).unwrap());
    }

    #[test]
    fn witt_hall(x in arb_free(10), y in arb_free(10), z in arb_free(10)) {
        let left = FreeGroupWord::commutator(&x.mul(&y), &z);
        let right = x
            .mul(&FreeGroupWord::commutator(&y, &z))
            .mul(&x.inverse())
            .mul(&FreeGroupWord::commutator(&x, &z));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn burau_is_a_homomorphism(u in arb_sized_word(16), seed in any::<u64>()) {
        let n = u.strands();
        let v = random_word(n, 16, seed);
        let (bu, bv) = (integral_burau(&u), integral_burau(&v));
        prop_assert_eq!(integral_burau(&u.concat(&v).unwrap()), bu.mul(&bv));
        let ones = vec![BigInt::one(); n];
        prop_assert_eq!(bu.mul_vec(&ones), ones);
        prop_assert!(bu.determinant().abs().is_one());
    }

    #[test]
    fn membership_is_conjugation_invariant(seed in any::<u64>(), g in arb_word(5, 10)) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for s in [Stratum::Random, Stratum::ConjugatedSquares, Stratum::NearMisses] {
            let w = sample_with(&mut rng, s, 5);
            let a = membership(&w);
            let b = membership(&w.conjugate_by(&g).unwrap());
            prop_assert_eq!(
                (a.is_pure, a.in_level2, a.in_pb_squared, a.in_level4),
                (b.is_pure, b.in_level2, b.in_pb_squared, b.in_level4)
            );
        }
    }
}

fn symplectic_change(dim: usize, vectors: &[Vec<i64>]) -> IntMatrix {
    vectors
        .iter()
        .fold(IntMatrix::identity(dim), |acc, v| acc.mul(&transvection(&SympVector(v.clone()))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn membership_ignores_the_symplectic_basis(
        n in 3usize..=6,
        raw in prop::collection::vec(prop::collection::vec(-2i64..=2, 6), 1..4),
        seed in any::<u64>(),
    ) {
        let ctx = symplectize(n).unwrap();
        let d = ctx.dim();
        // transvections along vectors orthogonal to y_{g+1} fix it
        let vs: Vec<Vec<i64>> = raw
            .into_iter()
            .map(|mut v| {
                v.truncate(d);
                if !ctx.is_odd() {
                    v[d - 2] = 0;
                }
                v
            })
            .collect();
        let other = ctx.with_basis_change(&symplectic_change(d, &vs)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for s in [Stratum::Random, Stratum::ConjugatedGenerators, Stratum::ConjugatedSquares] {
            let w = sample_with(&mut rng, s, n);
            for m in [2, 4] {
                prop_assert_eq!(
                    in_level_symplectic(&w, m, &ctx).unwrap(),
                    in_level_symplectic(&w, m, &other).unwrap()
                );
            }
        }
    }

    #[test]
    fn closure_contains_products_and_inverses(seed in any::<u64>()) {
        let ctx = symplectize(4).unwrap();
        let gens: Vec<ModMatrix> = (0..3)
            .map(|k| ModMatrix::from_int(&ctx.rho(&random_word(4, 6, seed.wrapping_add(k))).unwrap(), 2).unwrap())
            .collect();
        let g = closure(&gens, 1 << 16).unwrap();
        for x in g.elements() {
            prop_assert!(g.contains(&x.inverse().unwrap()).unwrap());
            for s in &gens {
                prop_assert!(g.contains(&s.mul(x).unwrap()).unwrap());
            }
        }
    }
}

#[test]
fn artin_generators_in_partial_brunnian_groups() {
    for n in 3..=5 {
        for i in 1..n {
            for j in i + 1..=n {
                let a = artin_generator(i, j, n).unwrap();
                for k in 1..=n {
                    let in_br = (1..=k).all(|s| is_trivial(&delete_strand(&a, s).unwrap()).unwrap());
                    let expected = (1..=k).all(|s| s == i || s == j);
                    assert_eq!(in_br, expected, "a_{i}{j} in Br_({n},{k})");
                }
            }
        }
    }
}

#[test]
fn long_words_stay_exact() {
    for n in [4, 6, 8] {
        let w = random_word(n, 200, 42);
        let m = integral_burau(&w);
        assert!(m.determinant().abs().is_one());
        let ctx = symplectize(n).unwrap();
        let r = ctx.rho(&w).unwrap();
        assert_eq!(r.transpose().mul(ctx.form()).mul(&r), *ctx.form());
    }
}
