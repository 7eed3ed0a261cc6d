//! Membership oracles for B_n[2], B_n[4], PB_n and PB_n², and the sampled
//! cross-validation of B_n[2] = PB_n and B_n[4] = PB_n².

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::braid::{
    artin_generators, is_pure, linking_numbers, permutation_of, random_word_with, rng_for, round_twist,
    BraidWord,
};
use crate::burau::{integral_burau_mod, SympContext};
use crate::error::{Error, Result};

fn check_level(m: u64) -> Result<()> {
    if m == 2 || m == 4 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("level must be 2 or 4, got {m}")))
    }
}

fn is_identity_residues(entries: &[u64], n: usize) -> bool {
    entries
        .iter()
        .enumerate()
        .all(|(k, &e)| e == u64::from(k / n == k % n))
}

/// Whether the integral Burau matrix of `w` is ≡ I mod `m` (m ∈ {2, 4}).
pub fn in_level(w: &BraidWord, m: u64) -> Result<bool> {
    check_level(m)?;
    Ok(is_identity_residues(&integral_burau_mod(w, m), w.strands()))
}

/// The same test carried out on ρ(w) in symplectic coordinates.
pub fn in_level_symplectic(w: &BraidWord, m: u64, ctx: &SympContext) -> Result<bool> {
    check_level(m)?;
    Ok(ctx.rho(w)?.is_identity_mod(m))
}

/// Pure with every linking number even.
pub fn in_pb_squared(w: &BraidWord) -> bool {
    is_pure(w) && linking_numbers(w).map(|lk| lk.all_even()).unwrap_or(false)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MembershipReport {
    pub word: String,
    pub is_pure: bool,
    pub in_level2: bool,
    pub in_pb_squared: bool,
    pub in_level4: bool,
    pub permutation: Vec<usize>,
    pub linking_mod2: Option<Vec<Vec<u8>>>,
    pub burau_mod2: Vec<Vec<u64>>,
    pub burau_mod4: Vec<Vec<u64>>,
}

impl MembershipReport {
    /// in_level2 ⟹ is_pure and in_level4 ⟹ in_level2.
    pub fn implications_hold(&self) -> bool {
        (!self.in_level2 || self.is_pure) && (!self.in_level4 || self.in_level2)
    }
}

pub fn membership(w: &BraidWord) -> MembershipReport {
    let n = w.strands();
    let rows = |v: Vec<u64>| v.chunks(n).map(<[u64]>::to_vec).collect::<Vec<_>>();
    let mod2 = integral_burau_mod(w, 2);
    let mod4 = integral_burau_mod(w, 4);
    MembershipReport {
        word: w.to_string(),
        is_pure: is_pure(w),
        in_level2: is_identity_residues(&mod2, n),
        in_pb_squared: in_pb_squared(w),
        in_level4: is_identity_residues(&mod4, n),
        permutation: permutation_of(w).images().to_vec(),
        linking_mod2: linking_numbers(w).ok().map(|lk| lk.mod2()),
        burau_mod2: rows(mod2),
        burau_mod4: rows(mod4),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Stratum {
    /// Uniformly random words.
    Random,
    /// Products of conjugated a_ij^{±1}.
    ConjugatedGenerators,
    /// Products of conjugated squares of a_ij and of round twists.
    ConjugatedSquares,
    /// Commutators of two random pure words.
    PureCommutators,
    /// A stratum-three word times one extra a_ij^{±1}.
    NearMisses,
}

impl Stratum {
    pub const STRUCTURED: [Stratum; 4] = [
        Stratum::ConjugatedGenerators,
        Stratum::ConjugatedSquares,
        Stratum::PureCommutators,
        Stratum::NearMisses,
    ];
}

fn conjugated<R: Rng>(rng: &mut R, w: &BraidWord) -> BraidWord {
    let len = rng.gen_range(0..=6);
    let g = random_word_with(rng, w.strands(), len);
    w.conjugate_by(&g).expect("same strands")
}

fn random_pure<R: Rng>(rng: &mut R, n: usize) -> BraidWord {
    let gens = artin_generators(n);
    let k = rng.gen_range(1..=4);
    let factors: Vec<BraidWord> = (0..k)
        .map(|_| {
            let a = gens.choose(rng).expect("n >= 2");
            let a = if rng.gen_bool(0.5) { a.clone() } else { a.invert() };
            conjugated(rng, &a)
        })
        .collect();
    BraidWord::product(n, &factors).expect("same strands")
}

fn random_square<R: Rng>(rng: &mut R, n: usize) -> BraidWord {
    let gens = artin_generators(n);
    let k = rng.gen_range(1..=3);
    let factors: Vec<BraidWord> = (0..k)
        .map(|_| {
            let base = if rng.gen_bool(0.7) {
                gens.choose(rng).expect("n >= 2").clone()
            } else {
                round_twist(rng.gen_range(2..=n), n).expect("k in range")
            };
            let e = if rng.gen_bool(0.5) { 2 } else { -2 };
            conjugated(rng, &base.pow(e))
        })
        .collect();
    BraidWord::product(n, &factors).expect("same strands")
}

/// One sample word from a stratum.
pub fn sample_with<R: Rng>(rng: &mut R, stratum: Stratum, n: usize) -> BraidWord {
    match stratum {
        Stratum::Random => {
            let len = rng.gen_range(1..=24);
            random_word_with(rng, n, len)
        }
        Stratum::ConjugatedGenerators => random_pure(rng, n),
        Stratum::ConjugatedSquares => random_square(rng, n),
        Stratum::PureCommutators => {
            let a = random_pure(rng, n);
            let b = random_pure(rng, n);
            BraidWord::commutator(&a, &b).expect("same strands")
        }
        Stratum::NearMisses => {
            let gens = artin_generators(n);
            let extra = gens.choose(rng).expect("n >= 2");
            let extra = if rng.gen_bool(0.5) { extra.clone() } else { extra.invert() };
            random_square(rng, n).concat(&extra).expect("same strands")
        }
    }
}

/// Deterministic corpus: `random` random words then `per_stratum` words from
/// each structured stratum.
pub fn corpus(n: usize, random: usize, per_stratum: usize, seed: u64) -> Result<Vec<(Stratum, BraidWord)>> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("need at least 2 strands, got {n}")));
    }
    let mut rng = rng_for(seed ^ ((n as u64) << 32));
    let mut out = Vec::with_capacity(random + 4 * per_stratum);
    for _ in 0..random {
        out.push((Stratum::Random, sample_with(&mut rng, Stratum::Random, n)));
    }
    for s in Stratum::STRUCTURED {
        for _ in 0..per_stratum {
            out.push((s, sample_with(&mut rng, s, n)));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct StratumCounts {
    pub total: usize,
    pub pure: usize,
    pub level2: usize,
    pub pb_squared: usize,
    pub level4: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub stratum: Stratum,
    pub report: MembershipReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossValidation {
    pub strands: usize,
    pub strata: BTreeMap<Stratum, StratumCounts>,
    pub counterexamples: Vec<Counterexample>,
}

impl CrossValidation {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn totals(&self) -> StratumCounts {
        self.strata.values().fold(StratumCounts::default(), |mut acc, c| {
            acc.total += c.total;
            acc.pure += c.pure;
            acc.level2 += c.level2;
            acc.pb_squared += c.pb_squared;
            acc.level4 += c.level4;
            acc
        })
    }
}

/// Checks in_level(·, 2) ⟺ is_pure and in_level(·, 4) ⟺ in_pb_squared on
/// every sample. Samples are evaluated in parallel and reported in input order.
pub fn cross_validate(n: usize, samples: &[(Stratum, BraidWord)]) -> CrossValidation {
    let reports: Vec<(Stratum, MembershipReport)> = samples
        .par_iter()
        .map(|(s, w)| (*s, membership(w)))
        .collect();
    let mut strata: BTreeMap<Stratum, StratumCounts> = BTreeMap::new();
    let mut counterexamples = Vec::new();
    for (s, r) in reports {
        let c = strata.entry(s).or_default();
        c.total += 1;
        c.pure += r.is_pure as usize;
        c.level2 += r.in_level2 as usize;
        c.pb_squared += r.in_pb_squared as usize;
        c.level4 += r.in_level4 as usize;
        if r.in_level2 != r.is_pure || r.in_level4 != r.in_pb_squared || !r.implications_hold() {
            counterexamples.push(Counterexample { stratum: s, report: r });
        }
    }
    CrossValidation {
        strands: n,
        strata,
        counterexamples,
    }
}
