// Acceptance criteria, one line each. Heavy closures run only when
// BRAIDCONG_HEAVY is set.

use std::io::Write;

use braid_congruence::verify::{run_suite, Status, Suite, SuiteConfig, SuiteReport};
use serde_json::{json, Value};

struct Criterion {
    id: u32,
    title: &'static str,
    // (check, json pointer into computed, expected)
    expect: Vec<(String, String, Value)>,
}

fn say(line: &str) {
    // straight to stdout so the lines survive libtest's capture
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{line}");
}

fn evaluate(report: &SuiteReport, c: &Criterion) -> Vec<String> {
    let mut problems = Vec::new();
    for (check, pointer, expected) in &c.expect {
        let Some(rec) = report.get(check) else {
            problems.push(format!("{check}: missing"));
            continue;
        };
        if rec.status != Status::Pass {
            problems.push(format!("{check}: {:?} {}", rec.status, rec.computed));
            continue;
        }
        match rec.computed.pointer(pointer) {
            Some(v) if v == expected => {}
            other => problems.push(format!("{check}{pointer}: got {other:?}, want {expected}")),
        }
    }
    problems
}

fn report_all(report: &SuiteReport, criteria: &[Criterion]) -> usize {
    let mut failed = 0;
    for c in criteria {
        let problems = evaluate(report, c);
        if problems.is_empty() {
            say(&format!("PASS criterion {:>2}: {}", c.id, c.title));
        } else {
            failed += 1;
            say(&format!("FAIL criterion {:>2}: {} [{}]", c.id, c.title, problems.join("; ")));
        }
    }
    failed
}

fn e(check: impl Into<String>, pointer: impl Into<String>, expected: Value) -> (String, String, Value) {
    (check.into(), pointer.into(), expected)
}

fn default_criteria() -> Vec<Criterion> {
    let mut main = vec![
        e("level4_equals_pb_squared", "/counterexamples", json!(0)),
        e("level4_equals_pb_squared", "/positives_sufficient", json!(true)),
        e("level4_equals_pb_squared", "/required_each_way", json!(1000)),
        e("twist_squares_level4", "/samples", json!(1000)),
        e("twist_squares_level4", "/failures", json!(0)),
    ];
    let mut arnold = vec![e("level2_equals_pure", "/counterexamples", json!(0))];
    for n in 3..=7 {
        let p = format!("/per_strands/{n}/samples");
        arnold.push(e("level2_equals_pure", p.clone(), json!(14_000)));
        main.push(e("level4_equals_pb_squared", p, json!(14_000)));
    }

    let aij = [(3, 8u64), (4, 64), (5, 1024), (6, 32768)]
        .iter()
        .map(|&(n, o)| e(format!("closure_aij_mod4_n{n}"), "/order", json!(o)))
        .collect();
    let full = [(3, 6u64, 48u64), (4, 24, 1536), (5, 120, 122_880)]
        .iter()
        .flat_map(|&(n, m2, m4)| {
            [
                e(format!("full_group_mod2_n{n}"), "/order", json!(m2)),
                e(format!("full_group_mod4_n{n}"), "/order", json!(m4)),
            ]
        })
        .collect();

    vec![
        Criterion {
            id: 1,
            title: "homomorphism and fixed vector, 1000 pairs for each n in 3..8",
            expect: vec![e("rho_homomorphism", "/pairs", json!(6000)), e("rho_homomorphism", "/failures", json!(0))],
        },
        Criterion {
            id: 2,
            title: "symplectization, 500 words for each n in 3..8",
            expect: (3..=8)
                .map(|n| e("symplectization", format!("/per_strands/{n}/skew_forms"), json!(1)))
                .chain([e("symplectization", "/failures", json!(0))])
                .collect(),
        },
        Criterion {
            id: 3,
            title: "level 2 equals pure, 10^4 random + 4x10^3 stratified per n in 3..7",
            expect: arnold,
        },
        Criterion {
            id: 4,
            title: "level 4 equals squares of pure braids, same corpus; conjugated twist squares",
            expect: main,
        },
        Criterion {
            id: 5,
            title: "squared lantern relation",
            expect: vec![
                e("squared_lantern", "/relator_trivial", json!(true)),
                e("squared_lantern", "/matrices_equal", json!(true)),
                e("squared_lantern", "/both_level4", json!(true)),
            ],
        },
        Criterion {
            id: 6,
            title: "commutator relation in B_4 and Witt-Hall on 100 substitutions",
            expect: vec![
                e("commutator_relation", "/relator_trivial", json!(true)),
                e("commutator_relation", "/witt_hall_substitutions", json!(100)),
                e("commutator_relation", "/witt_hall_failures", json!(0)),
            ],
        },
        Criterion {
            id: 7,
            title: "symplectic identities",
            expect: vec![
                e("symplectic_identities", "/omega_1_is_minus_identity", json!(true)),
                e("symplectic_identities", "/failures", json!(0)),
            ],
        },
        Criterion { id: 8, title: "closure of a_ij images mod 4, n = 3..6", expect: aij },
        Criterion { id: 9, title: "full group images mod 2 and mod 4, n = 3..5", expect: full },
        Criterion {
            id: 10,
            title: "generating sets for g = 2: odd 1024, minimal, even 32768",
            expect: vec![
                e("generating_set_odd_g2", "/order", json!(1024)),
                e("generating_set_odd_g2", "/equals_mumford_closure", json!(true)),
                e("generating_set_minimal_g2", "/orders_without_one", json!(vec![512; 10])),
                e("generating_set_even_g2", "/order", json!(32768)),
            ],
        },
        Criterion {
            id: 11,
            title: "point pushing on 5 strands: mod 4 order 16 index 64, mod 8 order 16384 over Mennicke index 16",
            expect: vec![
                e("push_mod4", "/order", json!(16)),
                e("push_mod4", "/index_in_pb", json!(64)),
                e("push_mod8", "/order", json!(16384)),
                e("push_mod8", "/contains_mennicke", json!(true)),
                e("push_mod8", "/index", json!(16)),
            ],
        },
        Criterion {
            id: 12,
            title: "100 Brunnian samples each for n = 4, 5 are level 4 with trivial deletions",
            expect: vec![e("brunnian_level4", "/samples", json!(200)), e("brunnian_level4", "/failures", json!(0))],
        },
        Criterion {
            id: 13,
            title: "Mennicke group mod 8 has order 1024 and absorbs Brunnian images",
            expect: vec![
                e("mennicke_mod8", "/order", json!(1024)),
                e("mennicke_mod8", "/brunnian_absorbed", json!(true)),
            ],
        },
        Criterion {
            id: 14,
            title: "forgetful maps B_5[4] -> B_3[4] on 200 samples, witnesses exact",
            expect: vec![
                e("forgetful_level4_n5_k3", "/samples", json!(200)),
                e("forgetful_level4_n5_k3", "/failures", json!(0)),
                e("forgetful_witnesses_n5_k3", "/failures", json!(0)),
            ],
        },
    ]
}

#[test]
fn acceptance_criteria() {
    let report = run_suite(&SuiteConfig::default(), Suite::All).expect("suite runs");
    let failed = report_all(&report, &default_criteria());
    assert_eq!(failed, 0, "{}", report.render_text());
    assert_eq!(report.failures().count(), 0);
}

#[test]
fn acceptance_heavy() {
    if std::env::var_os("BRAIDCONG_HEAVY").is_none() {
        say("SKIP criteria  8, 9 heavy parts: set BRAIDCONG_HEAVY=1 to run n = 7 and mod-4 n = 6");
        return;
    }
    let cfg = SuiteConfig { heavy: true, ..SuiteConfig::default() };
    let report = run_suite(&cfg, Suite::Generators).expect("suite runs");
    let heavy = vec![
        Criterion {
            id: 8,
            title: "heavy: closure of a_ij images mod 4, n = 7",
            expect: vec![e("closure_aij_mod4_n7", "/order", json!(1u64 << 21))],
        },
        Criterion {
            id: 9,
            title: "heavy: full group image mod 4, n = 6",
            expect: vec![e("full_group_mod4_n6", "/order", json!(23_592_960u64))],
        },
    ];
    assert_eq!(report_all(&report, &heavy), 0, "{}", report.render_text());
}
