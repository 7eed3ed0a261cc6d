// Level-2 and level-4 membership, compared against purity and the parity
// of linking numbers on a stratified sample.

use braid_congruence::braid::{artin_generator, round_twist};
use braid_congruence::oracles::{corpus, cross_validate, in_level, in_pb_squared, membership};
use braid_congruence::Result;

pub fn run_example() -> Result<()> {
    let a13 = artin_generator(1, 3, 4)?;
    for w in [a13.clone(), a13.pow(2), round_twist(3, 4)?.pow(2)] {
        println!(
            "{w}: level 2 {}, level 4 {}, in PB^2 {}",
            in_level(&w, 2)?,
            in_level(&w, 4)?,
            in_pb_squared(&w)
        );
    }
    let report = membership(&a13);
    println!("{}", serde_json::to_string(&report).expect("report serializes"));

    for n in 3..=5 {
        let samples = corpus(n, 500, 100, 1)?;
        let cv = cross_validate(n, &samples);
        let t = cv.totals();
        println!(
            "n = {n}: {} words, {} pure, {} level 4, {} counterexamples",
            t.total,
            t.pure,
            t.level4,
            cv.counterexamples.len()
        );
        assert!(cv.passed());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
