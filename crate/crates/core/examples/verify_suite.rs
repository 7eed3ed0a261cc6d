// Runs a part of the verification suite and prints the JSON report.

use braid_congruence::verify::{run_suite, Suite, SuiteConfig};
use braid_congruence::Result;

pub fn run_example() -> Result<()> {
    let cfg = SuiteConfig {
        random_words: 500,
        per_stratum: 100,
        timings: false,
        ..SuiteConfig::default()
    };
    let report = run_suite(&cfg, Suite::Relations)?;
    println!("{}", report.to_json());
    assert_eq!(report.exit_code(false), 0);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
