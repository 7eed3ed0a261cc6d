//! The verification suite: relations, closure orders, point-pushing and
//! Brunnian images, forgetful maps, and the oracle equivalences.
//!
//! Every check produces a [`CheckRecord`] whose `computed` value is compared
//! against `expected` key by key. Records carry where their expected value
//! comes from; timing is kept out of the compared data so that two runs with
//! the same seed serialize identically once timings are disabled.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rand::Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::braid::{
    artin_generator, artin_generators, brunnian_sample, delete_strand, is_trivial, linking_numbers,
    push_generator, push_generators, random_word_with, rng_for, round_twist, BraidWord, FreeGroupWord,
};
use crate::burau::{integral_burau, invariant_skew_forms, symplectize, SympContext};
use crate::error::{Error, Result};
use crate::finite_group::{closure_of_int, subgroup_index, GroupClosure, ModMatrix};
use crate::matrix::IntMatrix;
use crate::oracles::{corpus, cross_validate, in_level, CrossValidation, Stratum};
use crate::symplectic::{
    generating_sets, is_symplectic, m_basis, m_lift, mumford_gens, omega, primitive_vectors, psi,
    transvection, transvection_power, BasisSymbol, Parity, SympVector,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// Asserted by the source theorem or relation.
    Paper,
    /// Immediate from definitions.
    Trivial,
    /// Computed independently (enumeration, oracle comparison, arithmetic).
    Derived,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub check: String,
    pub statement: String,
    pub status: Status,
    pub computed: Value,
    pub expected: Value,
    pub provenance: Vec<Provenance>,
    pub millis: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub suite: Suite,
    pub checks: Vec<CheckRecord>,
}

impl SuiteReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn skipped(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| c.status == Status::Skipped)
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    /// 0 pass, 1 failure, 3 skipped check under `strict`.
    pub fn exit_code(&self, strict: bool) -> i32 {
        if !self.passed() {
            1
        } else if strict && self.skipped().next().is_some() {
            3
        } else {
            0
        }
    }

    pub fn get(&self, check: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.check == check)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            out.push_str(&format!("{status:4}  {:<32} {:>7}ms  {}\n", c.check, c.millis, c.statement));
            if c.status != Status::Pass {
                out.push_str(&format!("      computed {}\n      expected {}\n", c.computed, c.expected));
            }
            if let Some(note) = &c.note {
                out.push_str(&format!("      note: {note}\n"));
            }
        }
        let fails = self.failures().count();
        let skips = self.skipped().count();
        out.push_str(&format!(
            "{} checks, {} failed, {} skipped\n",
            self.checks.len(),
            fails,
            skips
        ));
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Symplectic,
    Relations,
    Generators,
    Main,
    Pointpush,
    Forgetful,
    All,
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "symplectic" => Suite::Symplectic,
            "relations" => Suite::Relations,
            "generators" => Suite::Generators,
            "main" => Suite::Main,
            "pointpush" => Suite::Pointpush,
            "forgetful" => Suite::Forgetful,
            "all" => Suite::All,
            other => return Err(Error::InvalidArgument(format!("unknown suite {other:?}"))),
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Restricts checks that range over strand counts to this one.
    pub strands: Option<usize>,
    pub genus: usize,
    pub heavy: bool,
    pub workers: Option<usize>,
    pub closure_limit: usize,
    /// Random words per strand count in the oracle comparison.
    pub random_words: usize,
    /// Words per structured stratum per strand count.
    pub per_stratum: usize,
    /// Replaces the expected value of the named checks.
    pub overrides: BTreeMap<String, Value>,
    pub timings: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            strands: None,
            genus: 2,
            heavy: false,
            workers: None,
            closure_limit: 1 << 25,
            random_words: 10_000,
            per_stratum: 1_000,
            overrides: BTreeMap::new(),
            timings: true,
        }
    }
}

struct Outcome {
    computed: Value,
    skipped: bool,
    note: Option<String>,
}

impl Outcome {
    fn of(computed: Value) -> Self {
        Self {
            computed,
            skipped: false,
            note: None,
        }
    }

    fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// Whether every key of `expected` (or the whole value, if not an object)
/// agrees with `computed`.
fn matches(computed: &Value, expected: &Value) -> bool {
    match expected {
        Value::Object(map) => map.iter().all(|(k, v)| computed.get(k) == Some(v)),
        other => computed == other,
    }
}

struct Runner<'a> {
    cfg: &'a SuiteConfig,
    records: Vec<CheckRecord>,
}

impl Runner<'_> {
    fn run(
        &mut self,
        check: impl Into<String>,
        statement: &str,
        provenance: &[Provenance],
        expected: Value,
        f: impl FnOnce() -> Result<Outcome>,
    ) {
        let check = check.into();
        let expected = self.cfg.overrides.get(&check).cloned().unwrap_or(expected);
        let start = Instant::now();
        let result = f();
        let millis = if self.cfg.timings {
            start.elapsed().as_millis() as u64
        } else {
            0
        };
        let (status, computed, note) = match result {
            Ok(o) if o.skipped => (Status::Skipped, o.computed, o.note),
            Ok(o) => {
                let status = if matches(&o.computed, &expected) {
                    Status::Pass
                } else {
                    Status::Fail
                };
                (status, o.computed, o.note)
            }
            Err(Error::ClosureLimit { limit, partial }) => (
                Status::Skipped,
                json!({ "partial": partial, "limit": limit }),
                Some("closure limit reached".into()),
            ),
            Err(e) => (Status::Fail, Value::Null, Some(e.to_string())),
        };
        self.records.push(CheckRecord {
            check,
            statement: statement.into(),
            status,
            computed,
            expected,
            provenance: provenance.to_vec(),
            millis,
            note,
        });
    }

    fn strand_range(&self, lo: usize, hi: usize) -> Vec<usize> {
        match self.cfg.strands {
            Some(n) => vec![n],
            None => (lo..=hi).collect(),
        }
    }
}

use Provenance::{Derived, Paper, Trivial};

fn binom2(n: usize) -> u32 {
    (n * (n - 1) / 2) as u32
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn rho_all(ctx: &SympContext, words: &[BraidWord]) -> Result<Vec<IntMatrix>> {
    words.iter().map(|w| ctx.rho(w)).collect()
}

fn sigma_words(n: usize) -> Vec<BraidWord> {
    (1..n as i32)
        .map(|i| BraidWord::generator(n, i).expect("in range"))
        .collect()
}

fn ones(n: usize) -> Vec<BigInt> {
    vec![BigInt::one(); n]
}

// ---- symplectic structure ----

fn check_symplectic(r: &mut Runner) {
    let seed = r.cfg.seed;
    let ns = r.strand_range(3, 8);

    let ns2 = ns.clone();
    r.run(
        "rho_homomorphism",
        "ρ(uv) = ρ(u)ρ(v) and ρ(w) fixes (1,…,1)",
        &[Derived],
        json!({ "failures": 0 }),
        move || {
            let mut rng = rng_for(seed ^ 0x1001);
            let mut failures = 0usize;
            let mut pairs = 0usize;
            for &n in &ns2 {
                let ctx = symplectize(n)?;
                for _ in 0..1000 {
                    let (lu, lv) = (rng.gen_range(0..=16), rng.gen_range(0..=16));
                    let u = random_word_with(&mut rng, n, lu);
                    let v = random_word_with(&mut rng, n, lv);
                    let uv = u.concat(&v)?;
                    let (bu, bv, buv) = (integral_burau(&u), integral_burau(&v), integral_burau(&uv));
                    let ok = buv == bu.mul(&bv)
                        && buv.mul_vec(&ones(n)) == ones(n)
                        && ctx.conjugate(&buv) == ctx.conjugate(&bu).mul(&ctx.conjugate(&bv));
                    failures += usize::from(!ok);
                    pairs += 1;
                }
            }
            Ok(Outcome::of(json!({ "pairs": pairs, "failures": failures })))
        },
    );

    r.run(
        "symplectization",
        "integral Burau image preserves a unique skew form, standard on the symplectic block",
        &[Derived],
        json!({ "failures": 0 }),
        move || {
            let mut rng = rng_for(seed ^ 0x1002);
            let mut per_n = BTreeMap::new();
            let mut failures = 0usize;
            for &n in &ns {
                let forms = invariant_skew_forms(n).len();
                let ctx = symplectize(n)?;
                let det_ok = ctx.basis().determinant().abs().is_one();
                let j = ctx.form().clone();
                let y = ctx.distinguished_vector();
                let mut bad = 0usize;
                for _ in 0..500 {
                    let len = rng.gen_range(1..=20);
                    let w = random_word_with(&mut rng, n, len);
                    let m = ctx.rho(&w)?;
                    let mut ok = m.transpose().mul(&j).mul(&m) == j;
                    if let Some(y) = &y {
                        ok &= m.mul_vec(y) == *y;
                    }
                    bad += usize::from(!ok);
                }
                if forms != 1 || !det_ok {
                    bad += 1;
                }
                failures += bad;
                per_n.insert(
                    n.to_string(),
                    json!({ "skew_forms": forms, "genus": ctx.genus(), "dim": ctx.dim(), "failures": bad }),
                );
            }
            Ok(Outcome::of(json!({ "per_strands": per_n, "failures": failures })))
        },
    );

    r.run(
        "symplectic_identities",
        "transvection, ω_i and ψ(M_vw) = m_vw identities",
        &[Paper, Derived],
        json!({ "omega_1_is_minus_identity": true, "failures": 0 }),
        || {
            use BasisSymbol::{X, Y};
            let mut failures = Vec::new();
            let omega_1 = omega(1, 1)? == IntMatrix::identity(2).neg();
            for g in 1..=3usize {
                let d = 2 * g;
                for i in 1..=g {
                    let w = omega(i, g)?;
                    for s in BasisSymbol::all(g) {
                        let e = SympVector::basis(s, d);
                        let sign = if s == X(i) || s == Y(i) { -1 } else { 1 };
                        let expected: Vec<BigInt> = e.0.iter().map(|&c| BigInt::from(c * sign)).collect();
                        if w.mul_vec(&e.to_bigint()) != expected {
                            failures.push(format!("omega({i}, {g}) on {s}"));
                        }
                    }
                    let x = SympVector::basis(X(i), d);
                    let y = SympVector::basis(Y(i), d);
                    let lhs = transvection_power(&x, 2)
                        .mul(&transvection_power(&x.add(&y), 2))
                        .mul(&transvection_power(&x, -2));
                    if lhs != transvection_power(&x.sub(&y), 2) {
                        failures.push(format!("x{i}+y{i} conjugation, g={g}"));
                    }
                    for j in (1..=g).filter(|&j| j != i) {
                        let wj = omega(j, g)?;
                        let wj_inv = wj.inverse_unimodular()?;
                        let yj = SympVector::basis(Y(j), d);
                        let conj = |v: &SympVector| wj.mul(&transvection_power(v, 2)).mul(&wj_inv);
                        if conj(&y.add(&yj)) != transvection_power(&y.sub(&yj), 2) {
                            failures.push(format!("omega_{j} on y{i}+y{j}, g={g}"));
                        }
                        if conj(&x.add(&yj)) != transvection_power(&x.sub(&yj), 2) {
                            failures.push(format!("omega_{j} on x{i}+y{j}, g={g}"));
                        }
                    }
                }
                for v in BasisSymbol::all(g) {
                    for w in BasisSymbol::all(g) {
                        let lift = m_lift(v, w, g);
                        if !is_symplectic(&lift) || psi(&lift)? != m_basis(v, w, g) {
                            failures.push(format!("M_{v}{w}, g={g}"));
                        }
                        if m_basis(v, w, g) != m_basis(w.star(), v.star(), g) {
                            failures.push(format!("m_{v}{w} star symmetry, g={g}"));
                        }
                    }
                }
            }
            let t_x = transvection(&SympVector::basis(X(1), 2));
            if t_x != IntMatrix::from_rows(&[vec![1, -1], vec![0, 1]]) {
                failures.push("tau_x1".into());
            }
            Ok(Outcome::of(json!({
                "omega_1_is_minus_identity": omega_1,
                "failures": failures.len(),
                "failed": failures,
            })))
        },
    );
}

// ---- relations ----

fn squared_lantern_sides() -> (BraidWord, BraidWord) {
    let a = |i, j| artin_generator(i, j, 3).expect("valid indices");
    let (a12, a13, a23) = (a(1, 2), a(1, 3), a(2, 3));
    let lhs = BraidWord::commutator(&a12, &a13).expect("same strands");
    let inner = a12.invert().concat(&a13.pow(2)).and_then(|w| w.concat(&a12)).expect("same strands");
    let tail = BraidWord::product(3, &[a13.clone(), a12.clone(), a23.clone()])
        .expect("same strands")
        .pow(-2);
    let rhs = BraidWord::product(3, &[a12.pow(2), inner, a23.pow(2), tail]).expect("same strands");
    (lhs, rhs)
}

fn comm_relation_sides() -> (BraidWord, BraidWord) {
    let a = |i, j| artin_generator(i, j, 4).expect("valid indices");
    let (a13, a23, a24) = (a(1, 3), a(2, 3), a(2, 4));
    let x = a13.concat(&a23.invert()).expect("same strands");
    let lhs = BraidWord::commutator(&a13, &a24).expect("same strands");
    let rhs = BraidWord::product(
        4,
        &[
            x.clone(),
            BraidWord::commutator(&a23, &a24).expect("same strands"),
            x.invert(),
            a23.invert(),
            BraidWord::commutator(&a24, &a23).expect("same strands"),
            a23.clone(),
        ],
    )
    .expect("same strands");
    (lhs, rhs)
}

fn random_free_word<R: Rng>(rng: &mut R, rank: i32, len: usize) -> FreeGroupWord {
    let letters: Vec<i32> = (0..len)
        .map(|_| {
            let k = rng.gen_range(1..=rank);
            if rng.gen_bool(0.5) {
                k
            } else {
                -k
            }
        })
        .collect();
    FreeGroupWord::from_letters(&letters)
}

fn check_relations(r: &mut Runner) {
    let seed = r.cfg.seed;
    r.run(
        "squared_lantern",
        "squared lantern relation [a12,a13] = a12² (a12⁻¹a13²a12) a23² (a13a12a23)⁻²",
        &[Paper, Derived],
        json!({
            "relator_trivial": true,
            "matrices_equal": true,
            "lhs_linking_zero": true,
            "rhs_linking_even": true,
            "both_level4": true,
        }),
        || {
            let (lhs, rhs) = squared_lantern_sides();
            let relator = lhs.concat(&rhs.invert())?;
            Ok(Outcome::of(json!({
                "relator_trivial": is_trivial(&relator)?,
                "matrices_equal": integral_burau(&lhs) == integral_burau(&rhs),
                "lhs_linking_zero": linking_numbers(&lhs)?.is_zero(),
                "rhs_linking_even": linking_numbers(&rhs)?.all_even(),
                "both_level4": in_level(&lhs, 4)? && in_level(&rhs, 4)?,
                "relator": relator.to_string(),
            })))
        },
    );

    r.run(
        "commutator_relation",
        "[a13,a24] = (a13a23⁻¹)[a23,a24](a13a23⁻¹)⁻¹ a23⁻¹[a24,a23]a23 and [xy,z] = x[y,z]x⁻¹[x,z]",
        &[Paper, Trivial, Derived],
        json!({
            "relator_trivial": true,
            "linking_equal": true,
            "witt_hall_failures": 0,
        }),
        move || {
            let (lhs, rhs) = comm_relation_sides();
            let relator = lhs.concat(&rhs.invert())?;
            let mut rng = rng_for(seed ^ 0x2001);
            let mut witt_hall_failures = 0usize;
            for _ in 0..100 {
                let lens: [usize; 3] = [rng.gen_range(0..12), rng.gen_range(0..12), rng.gen_range(0..12)];
                let x = random_free_word(&mut rng, 4, lens[0]);
                let y = random_free_word(&mut rng, 4, lens[1]);
                let z = random_free_word(&mut rng, 4, lens[2]);
                let left = FreeGroupWord::commutator(&x.mul(&y), &z);
                let right = x
                    .mul(&FreeGroupWord::commutator(&y, &z))
                    .mul(&x.inverse())
                    .mul(&FreeGroupWord::commutator(&x, &z));
                witt_hall_failures += usize::from(!left.mul(&right.inverse()).is_empty());
            }
            Ok(Outcome::of(json!({
                "relator_trivial": is_trivial(&relator)?,
                "linking_equal": linking_numbers(&lhs)? == linking_numbers(&rhs)?,
                "witt_hall_failures": witt_hall_failures,
                "witt_hall_substitutions": 100,
            })))
        },
    );
}

// ---- oracle equivalences ----

fn check_main(r: &mut Runner) {
    let cfg = r.cfg.clone();
    let ns = r.strand_range(3, 7);
    let start = Instant::now();
    let results: Vec<(usize, Result<CrossValidation>)> = ns
        .iter()
        .map(|&n| {
            let samples = corpus(n, cfg.random_words, cfg.per_stratum, cfg.seed);
            (n, samples.map(|s| cross_validate(n, &s)))
        })
        .collect();
    let shared_millis = start.elapsed().as_millis() as u64;

    let summary = |pick: fn(&crate::oracles::StratumCounts) -> usize| -> Result<Value> {
        let mut per_n = BTreeMap::new();
        for (n, res) in &results {
            let cv = res.clone()?;
            let t = cv.totals();
            per_n.insert(
                n.to_string(),
                json!({
                    "samples": t.total,
                    "positives": pick(&t),
                    "negatives": t.total - pick(&t),
                    "counterexamples": cv.counterexamples.len(),
                }),
            );
        }
        Ok(Value::Object(per_n.into_iter().collect()))
    };
    let counterexamples: usize = results
        .iter()
        .map(|(_, r)| r.as_ref().map(|c| c.counterexamples.len()).unwrap_or(1))
        .sum();
    let first_counterexample = results
        .iter()
        .find_map(|(_, r)| r.as_ref().ok().and_then(|c| c.counterexamples.first().cloned()));

    let needed = cfg.per_stratum;
    r.run(
        "level2_equals_pure",
        "B_n[2] = PB_n",
        &[Paper, Derived],
        json!({ "counterexamples": 0 }),
        || {
            let mut o = Outcome::of(json!({
                "per_strands": summary(|c| c.level2)?,
                "counterexamples": counterexamples,
            }));
            if let Some(c) = &first_counterexample {
                o = o.note(format!("first counterexample: {}", c.report.word));
            }
            Ok(o)
        },
    );
    r.run(
        "level4_equals_pb_squared",
        "B_n[4] = PB_n²",
        &[Paper, Derived],
        json!({ "counterexamples": 0, "positives_sufficient": true }),
        || {
            let per = summary(|c| c.level4)?;
            let enough = per
                .as_object()
                .expect("object")
                .values()
                .all(|v| v["positives"].as_u64().unwrap_or(0) >= needed as u64 && v["negatives"].as_u64().unwrap_or(0) >= needed as u64);
            Ok(Outcome::of(json!({
                "per_strands": per,
                "counterexamples": counterexamples,
                "positives_sufficient": enough,
                "required_each_way": needed,
            })))
        },
    );
    if cfg.timings {
        // the corpus evaluation is shared; charge it to the first of the two checks
        let k = r.records.len() - 2;
        r.records[k].millis += shared_millis;
    }

    let seed = cfg.seed;
    r.run(
        "twist_squares_level4",
        "conjugated twist squares lie in B_n[4]",
        &[Paper, Derived],
        json!({ "failures": 0 }),
        move || {
            let mut rng = rng_for(seed ^ 0x3001);
            let mut failures = 0usize;
            let mut total = 0usize;
            let contexts: Vec<SympContext> = ns.iter().map(|&n| symplectize(n)).collect::<Result<_>>()?;
            while total < 1000 {
                let ctx = &contexts[total % contexts.len()];
                let n = ctx.strands();
                let k = rng.gen_range(2..=n);
                let len = rng.gen_range(0..=12);
                let g = random_word_with(&mut rng, n, len);
                let w = round_twist(k, n)?.pow(2).conjugate_by(&g)?;
                failures += usize::from(!ctx.rho(&w)?.is_identity_mod(4));
                total += 1;
            }
            Ok(Outcome::of(json!({ "samples": total, "failures": failures })))
        },
    );
}

// ---- closures of generator images ----

fn close_words(words: &[BraidWord], ctx: &SympContext, modulus: u64, limit: usize) -> Result<GroupClosure> {
    closure_of_int(&rho_all(ctx, words)?, modulus, limit)
}

fn squares(vs: &[SympVector]) -> Vec<IntMatrix> {
    vs.iter().map(|v| transvection_power(v, 2)).collect()
}

fn check_generators(r: &mut Runner) {
    let limit = r.cfg.closure_limit;
    let heavy = r.cfg.heavy && r.cfg.strands.is_none();

    let mut ns = r.strand_range(3, 6);
    if heavy {
        ns.push(7);
    }
    for &n in &ns {
        r.run(
            format!("closure_aij_mod4_n{n}"),
            "|ρ(PB_n) mod 4| = 2^C(n,2)",
            &[Derived],
            json!({ "order": 1u64 << binom2(n) }),
            move || {
                let ctx = symplectize(n)?;
                let g = close_words(&artin_generators(n), &ctx, 4, limit)?;
                Ok(Outcome::of(json!({ "order": g.order(), "dim": ctx.dim() })))
            },
        );
    }

    let ns = r.strand_range(3, 5);
    for &n in &ns {
        r.run(
            format!("full_group_mod2_n{n}"),
            "ρ(B_n) mod 2 is the symmetric group",
            &[Derived],
            json!({ "order": factorial(n) as u64 }),
            move || {
                let ctx = symplectize(n)?;
                let g = close_words(&sigma_words(n), &ctx, 2, limit)?;
                Ok(Outcome::of(json!({ "order": g.order() })))
            },
        );
    }
    let mut ns4 = ns;
    if heavy {
        ns4.push(6);
    }
    for &n in &ns4 {
        r.run(
            format!("full_group_mod4_n{n}"),
            "|ρ(B_n) mod 4| = 2^C(n,2)·n!",
            &[Derived],
            json!({ "order": (1u64 << binom2(n)) * factorial(n) as u64 }),
            move || {
                let ctx = symplectize(n)?;
                let g = close_words(&sigma_words(n), &ctx, 4, limit)?;
                Ok(Outcome::of(json!({ "order": g.order() })))
            },
        );
    }

    let g = r.cfg.genus;
    let odd_order = 1u64 << (g * (2 * g + 1));
    r.run(
        format!("generating_set_odd_g{g}"),
        "squared transvections of the odd generating set generate level 2 mod 4",
        &[Paper, Derived],
        json!({ "order": odd_order, "equals_mumford_closure": true }),
        move || {
            let set = generating_sets(g, Parity::Odd)?;
            let a = closure_of_int(&squares(&set), 4, limit)?;
            let b = closure_of_int(&squares(&mumford_gens(g)), 4, limit)?;
            Ok(Outcome::of(json!({
                "order": a.order(),
                "mumford_order": b.order(),
                "equals_mumford_closure": a.equals(&b)?,
                "generators": set.len(),
            })))
        },
    );
    r.run(
        format!("generating_set_minimal_g{g}"),
        "the odd generating set is minimal",
        &[Paper, Derived],
        json!({ "orders_without_one": vec![odd_order / 2; g * (2 * g + 1)] }),
        move || {
            let set = generating_sets(g, Parity::Odd)?;
            let mut orders = Vec::new();
            for k in 0..set.len() {
                let mut sub = set.clone();
                sub.remove(k);
                orders.push(closure_of_int(&squares(&sub), 4, limit)?.order() as u64);
            }
            Ok(Outcome::of(json!({ "orders_without_one": orders })))
        },
    );
    let even_order = 1u64 << binom2(2 * g + 2);
    r.run(
        format!("generating_set_even_g{g}"),
        "squared transvections of the even generating set generate the stabilizer of y_{g+1} mod 4",
        &[Derived],
        json!({ "order": even_order }),
        move || {
            let set = generating_sets(g, Parity::Even)?;
            let c = closure_of_int(&squares(&set), 4, limit)?;
            Ok(Outcome::of(json!({ "order": c.order(), "dim": 2 * g + 2 })))
        },
    );
}

// ---- point pushing and Brunnian braids ----

fn mennicke_group(g: usize, limit: usize) -> Result<(GroupClosure, i64)> {
    let target = 1usize << (g * (2 * g + 1));
    let mut bound = 2;
    loop {
        let gens: Vec<IntMatrix> = primitive_vectors(2 * g, bound)
            .iter()
            .map(|v| transvection_power(v, 4))
            .collect();
        let c = closure_of_int(&gens, 8, limit)?;
        if c.order() >= target || bound >= 4 {
            return Ok((c, bound));
        }
        bound += 1;
    }
}

fn all_deletions_trivial(w: &BraidWord) -> Result<bool> {
    for s in 1..=w.strands() {
        if !is_trivial(&delete_strand(w, s)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_pointpush(r: &mut Runner) {
    let limit = r.cfg.closure_limit;
    let seed = r.cfg.seed;
    let g = r.cfg.genus;
    let n = 2 * g + 1;
    let push_order = 1u64 << (2 * g);
    let pb_order = 1u64 << (g * (2 * g + 1));
    let discrepancy = (1u64 << (g * (2 * g + 1))) - (1u64 << (2 * g));

    r.run(
        "push_mod4",
        "ρ of the point-pushing subgroup mod 4 is (ℤ/2)^{2g}",
        &[Paper, Derived],
        json!({ "order": push_order, "index_in_pb": pb_order / push_order }),
        move || {
            let ctx = symplectize(n)?;
            let push = close_words(&push_generators(n), &ctx, 4, limit)?;
            let pb = close_words(&artin_generators(n), &ctx, 4, limit)?;
            let index = subgroup_index(&pb, &push)?;
            Ok(Outcome::of(json!({ "order": push.order(), "pb_order": pb.order(), "index_in_pb": index }))
                .note(format!(
                    "index is a power of two; the closed form 2^(g(2g+1)) - 2^(2g) = {discrepancy} is not asserted"
                )))
        },
    );

    r.run(
        "push_k2_lower_bound",
        "a12 lies in Br_{n,2} and ρ(a12) mod 4 has order 2",
        &[Derived],
        json!({ "in_br_n2": true, "order": 2 }),
        move || {
            let ctx = symplectize(n)?;
            let a12 = push_generator(2, n)?;
            let in_br = is_trivial(&delete_strand(&a12, 1)?)? && is_trivial(&delete_strand(&a12, 2)?)?;
            let c = close_words(std::slice::from_ref(&a12), &ctx, 4, limit)?;
            Ok(Outcome::of(json!({ "in_br_n2": in_br, "order": c.order() })))
        },
    );

    let brunnian_ns = match r.cfg.strands {
        Some(m) => vec![m],
        None => vec![2 * g, 2 * g + 1],
    };
    r.run(
        "brunnian_level4",
        "Brunnian braids map into level 4",
        &[Paper, Derived],
        json!({ "failures": 0 }),
        move || {
            let mut failures = Vec::new();
            let mut total = 0usize;
            for &m in &brunnian_ns {
                let ctx = symplectize(m)?;
                for k in 0..100u64 {
                    let w = brunnian_sample(m, seed.wrapping_mul(1000).wrapping_add(k))?;
                    let ok = ctx.rho(&w)?.is_identity_mod(4) && in_level(&w, 4)? && all_deletions_trivial(&w)?;
                    if !ok {
                        failures.push(w.to_string());
                    }
                    total += 1;
                }
            }
            Ok(Outcome::of(json!({ "samples": total, "failures": failures.len(), "failed": failures })))
        },
    );

    r.run(
        "mennicke_mod8",
        "fourth powers of primitive transvections generate level 4 mod 8",
        &[Derived],
        json!({ "order": pb_order, "brunnian_absorbed": true }),
        move || {
            let (group, bound) = mennicke_group(g, limit)?;
            let ctx = symplectize(n)?;
            let mut absorbed = true;
            for k in 0..100u64 {
                let w = brunnian_sample(n, seed.wrapping_mul(1000).wrapping_add(k))?;
                absorbed &= group.contains(&ModMatrix::from_int(&ctx.rho(&w)?, 8)?)?;
            }
            Ok(Outcome::of(json!({
                "order": group.order(),
                "entry_bound": bound,
                "brunnian_absorbed": absorbed,
            })))
        },
    );

    r.run(
        "push_mod8",
        "ρ of the point-pushing subgroup mod 8 contains the level-4 group",
        &[Derived],
        json!({ "order": pb_order * push_order, "contains_mennicke": true, "index": push_order }),
        move || {
            let ctx = symplectize(n)?;
            let push = close_words(&push_generators(n), &ctx, 8, limit)?;
            let (mennicke, _) = mennicke_group(g, limit)?;
            let contains = mennicke.is_subgroup_of(&push)?;
            let index = if contains { subgroup_index(&push, &mennicke)? } else { 0 };
            Ok(Outcome::of(json!({ "order": push.order(), "contains_mennicke": contains, "index": index })))
        },
    );

    if r.cfg.heavy {
        r.run(
            "closure_pb_mod8",
            "|ρ(PB_{2g+1}) mod 8| = 2^{2g(2g+1)}",
            &[Derived],
            json!({ "order": pb_order * pb_order }),
            move || {
                let ctx = symplectize(n)?;
                let c = close_words(&artin_generators(n), &ctx, 8, limit)?;
                Ok(Outcome::of(json!({ "order": c.order() })))
            },
        );
    }
}

// ---- forgetful maps ----

/// Checks level 4 along every ordered chain of strand deletions down to `k` strands.
fn deletion_chains_level4(w: &BraidWord, k: usize, chains: &mut usize) -> Result<bool> {
    if !in_level(w, 4)? {
        return Ok(false);
    }
    if w.strands() == k {
        *chains += 1;
        return Ok(true);
    }
    for s in 1..=w.strands() {
        if !deletion_chains_level4(&delete_strand(w, s)?, k, chains)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A twist square in B_n about a curve around an odd number of points that
/// maps to round_twist(j, k)² after deleting strands k+1..n.
pub fn forgetful_witness(j: usize, k: usize, n: usize) -> Result<BraidWord> {
    if !(2 <= j && j <= k && k < n) {
        return Err(Error::InvalidArgument(format!("need 2 <= j <= k < n, got j={j} k={k} n={n}")));
    }
    if j % 2 == 1 {
        return Ok(round_twist(j, n)?.pow(2));
    }
    // bring strand k+1 next to the first j strands
    let delta = BraidWord::new(n, (j as i32 + 1..=k as i32).rev().collect())?;
    round_twist(j + 1, n)?.pow(2).conjugate_by(&delta.invert())
}

fn check_forgetful(r: &mut Runner) {
    let seed = r.cfg.seed;
    let n = r.cfg.strands.unwrap_or(5).max(3);
    let k = 3.min(n - 1);

    r.run(
        format!("forgetful_level4_n{n}_k{k}"),
        "forgetful maps send B_n[4] into B_k[4]",
        &[Paper, Derived],
        json!({ "failures": 0 }),
        move || {
            let mut rng = rng_for(seed ^ 0x5001);
            let mut failures = 0usize;
            let mut chains = 0usize;
            let mut samples = 0usize;
            while samples < 200 {
                let w = crate::oracles::sample_with(&mut rng, Stratum::ConjugatedSquares, n);
                if !in_level(&w, 4)? {
                    failures += 1;
                }
                failures += usize::from(!deletion_chains_level4(&w, k, &mut chains)?);
                samples += 1;
            }
            Ok(Outcome::of(json!({ "samples": samples, "chains": chains, "failures": failures })))
        },
    );

    r.run(
        format!("forgetful_witnesses_n{n}_k{k}"),
        "every round twist square in B_k lifts to an odd-curve twist square in B_n[4]",
        &[Paper, Derived],
        json!({ "failures": 0 }),
        move || {
            let ctx = symplectize(n)?;
            let forget: Vec<usize> = (k + 1..=n).collect();
            let mut witnesses = Vec::new();
            let mut failures = 0usize;
            for j in 2..=k {
                let w = forgetful_witness(j, k, n)?;
                let image = crate::braid::delete_strands(&w, &forget)?;
                let target = round_twist(j, k)?.pow(2);
                let maps_to_target = is_trivial(&image.concat(&target.invert())?)?;
                let level4 = in_level(&w, 4)?;
                let torelli = ctx.rho(&w)?.is_identity();
                failures += usize::from(!(maps_to_target && level4 && torelli));
                witnesses.push(json!({
                    "j": j,
                    "witness": w.to_string(),
                    "maps_to_target": maps_to_target,
                    "level4": level4,
                    "rho_identity": torelli,
                }));
            }
            Ok(Outcome::of(json!({ "witnesses": witnesses, "failures": failures })))
        },
    );

    r.run(
        format!("forgetful_identity_n{n}"),
        "the identity forgets to the identity",
        &[Trivial],
        json!({ "trivial": true }),
        move || {
            let id = BraidWord::identity(n);
            Ok(Outcome::of(json!({ "trivial": is_trivial(&delete_strand(&id, n)?)? })))
        },
    );
}

fn run_checks(cfg: &SuiteConfig, suite: Suite) -> SuiteReport {
    let mut r = Runner {
        cfg,
        records: Vec::new(),
    };
    let all = suite == Suite::All;
    if all || suite == Suite::Symplectic {
        check_symplectic(&mut r);
    }
    if all || suite == Suite::Relations {
        check_relations(&mut r);
    }
    if all || suite == Suite::Main {
        check_main(&mut r);
    }
    if all || suite == Suite::Generators {
        check_generators(&mut r);
    }
    if all || suite == Suite::Pointpush {
        check_pointpush(&mut r);
    }
    if all || suite == Suite::Forgetful {
        check_forgetful(&mut r);
    }
    SuiteReport {
        seed: cfg.seed,
        suite,
        checks: r.records,
    }
}

/// Runs the selected checks, on a dedicated thread pool when `workers` is set.
pub fn run_suite(cfg: &SuiteConfig, suite: Suite) -> Result<SuiteReport> {
    match cfg.workers {
        None => Ok(run_checks(cfg, suite)),
        Some(w) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .map_err(|e| Error::InvalidArgument(e.to_string()))?;
            Ok(pool.install(|| run_checks(cfg, suite)))
        }
    }
}
