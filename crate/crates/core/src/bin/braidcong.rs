use std::fs;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use braid_congruence::burau::{burau_unreduced, integral_burau, symplectize};
use braid_congruence::finite_group::{closure_with_workers, ModMatrix, DEFAULT_CLOSURE_LIMIT};
use braid_congruence::oracles::{in_level, membership};
use braid_congruence::verify::{run_suite, Suite, SuiteConfig};
use braid_congruence::{BraidWord, Error};

#[derive(Parser)]
#[command(name = "braidcong", version, about = "Burau images and congruence subgroups of braid groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Strand count (words) or the single strand count to verify
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Genus for the generating-set and point-pushing checks
    #[arg(long, global = true, default_value_t = 2)]
    g: usize,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Enable the large closures
    #[arg(long, global = true)]
    heavy: bool,
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[arg(long, global = true)]
    json: bool,
    /// Treat skipped checks as failures (exit code 3)
    #[arg(long, global = true)]
    strict: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Burau matrix of a braid word, e.g. "1 -2 1" or "n=4; 1 3"
    Burau { word: String },
    /// Membership of a word in the level-2 or level-4 congruence subgroup
    Member {
        word: String,
        #[arg(long, value_parser = ["2", "4"])]
        level: String,
    },
    /// Run verification checks
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        /// Zero all timings so that repeated runs produce identical output
        #[arg(long)]
        no_timing: bool,
        /// Cap on the size of any enumerated group
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Order of the group generated by matrices read from a JSON file
    Closure {
        #[arg(long)]
        gens: String,
        #[arg(long = "mod")]
        modulus: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_CLOSURE_LIMIT)]
        limit: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Symplectic,
    Relations,
    Generators,
    Main,
    Pointpush,
    Forgetful,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Symplectic => Suite::Symplectic,
            SuiteArg::Relations => Suite::Relations,
            SuiteArg::Generators => Suite::Generators,
            SuiteArg::Main => Suite::Main,
            SuiteArg::Pointpush => Suite::Pointpush,
            SuiteArg::Forgetful => Suite::Forgetful,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Deserialize)]
struct GensFile {
    modulus: Option<u64>,
    #[serde(alias = "matrices")]
    generators: Vec<Vec<Vec<Value>>>,
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn parse_word(text: &str, n: Option<usize>) -> Result<BraidWord, Error> {
    match n {
        Some(n) => BraidWord::parse_with_strands(text, n),
        None => text.parse(),
    }
}

fn entry(v: &Value) -> Option<i64> {
    match v {
        Value::Number(n) => n.as_i64(),
        Value::String(s) => s.trim().parse().ok(),
        _ => None,
    }
}

fn emit(cli: &Cli, value: &Value, text: String) {
    if cli.json {
        println!("{}", serde_json::to_string_pretty(value).expect("json"));
    } else {
        print!("{text}");
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Burau { word } => {
            let w = match parse_word(word, cli.n) {
                Ok(w) => w,
                Err(e) => return usage(e),
            };
            let start = Instant::now();
            let laurent = burau_unreduced(&w);
            let integral = integral_burau(&w);
            let rho = if w.strands() >= 3 {
                symplectize(w.strands()).and_then(|ctx| ctx.rho(&w)).ok()
            } else {
                None
            };
            let value = json!({
                "check": "burau",
                "status": "pass",
                "computed": {
                    "word": w.to_string(),
                    "laurent": laurent.to_string(),
                    "integral": integral,
                    "symplectic": rho,
                },
                "expected": Value::Null,
                "provenance": [],
                "millis": start.elapsed().as_millis() as u64,
            });
            let mut text = format!("{w}\nBurau:\n{laurent}\nt = -1:\n{integral}\n");
            if let Some(r) = &rho {
                text.push_str(&format!("symplectic:\n{r}\n"));
            }
            emit(&cli, &value, text);
            ExitCode::SUCCESS
        }
        Command::Member { word, level } => {
            let w = match parse_word(word, cli.n) {
                Ok(w) => w,
                Err(e) => return usage(e),
            };
            let m: u64 = level.parse().expect("validated by clap");
            let start = Instant::now();
            let report = membership(&w);
            let member = in_level(&w, m).expect("level is 2 or 4");
            let (other, other_name) = if m == 2 {
                (report.is_pure, "is_pure")
            } else {
                (report.in_pb_squared, "in_pb_squared")
            };
            let consistent = member == other && report.implications_hold();
            let value = json!({
                "check": format!("member_level{m}"),
                "status": if consistent { "pass" } else { "fail" },
                "computed": { "member": member, "report": report },
                "expected": { other_name: other },
                "provenance": ["paper"],
                "millis": start.elapsed().as_millis() as u64,
            });
            let text = format!(
                "{}\nlevel {m}: {}\n{other_name}: {other}\n{}",
                report.word,
                if member { "member" } else { "not a member" },
                if consistent { "" } else { "ORACLE MISMATCH\n" }
            );
            emit(&cli, &value, text);
            if consistent {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Verify { suite, no_timing, limit } => {
            let mut cfg = SuiteConfig {
                seed: cli.seed,
                strands: cli.n,
                genus: cli.g,
                heavy: cli.heavy,
                workers: cli.workers,
                timings: !no_timing,
                ..SuiteConfig::default()
            };
            if let Some(l) = limit {
                cfg.closure_limit = *l;
            }
            if cli.g < 2 {
                return usage("--g must be at least 2");
            }
            if cli.n.is_some_and(|n| n < 3) {
                return usage("--n must be at least 3");
            }
            let report = match run_suite(&cfg, (*suite).into()) {
                Ok(r) => r,
                Err(e) => return usage(e),
            };
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.render_text());
            }
            ExitCode::from(report.exit_code(cli.strict) as u8)
        }
        Command::Closure { gens, modulus, limit } => {
            let text = match fs::read_to_string(gens) {
                Ok(t) => t,
                Err(e) => return usage(format!("{gens}: {e}")),
            };
            let file: GensFile = match serde_json::from_str(&text) {
                Ok(f) => f,
                Err(e) => return usage(format!("{gens}: {e}")),
            };
            let m = match (modulus, file.modulus) {
                (Some(a), Some(b)) if *a != b => return usage(format!("--mod {a} disagrees with modulus {b} in {gens}")),
                (Some(a), _) => *a,
                (None, Some(b)) => b,
                (None, None) => return usage("no modulus given"),
            };
            let mut mats = Vec::new();
            for rows in &file.generators {
                let d = rows.len();
                let entries: Option<Vec<i64>> = rows.iter().flatten().map(entry).collect();
                let Some(entries) = entries.filter(|e| e.len() == d * d) else {
                    return usage("generators must be square matrices of integers");
                };
                match ModMatrix::from_signed(d, m, &entries) {
                    Ok(x) => mats.push(x),
                    Err(e) => return usage(e),
                }
            }
            let start = Instant::now();
            let (status, computed, code) = match closure_with_workers(&mats, *limit, cli.workers) {
                Ok(g) => ("pass", json!({ "order": g.order(), "dim": g.dim(), "modulus": m }), 0),
                Err(Error::ClosureLimit { limit, partial }) => (
                    "skipped",
                    json!({ "partial": partial, "limit": limit }),
                    if cli.strict { 3 } else { 0 },
                ),
                Err(e) => return usage(e),
            };
            let value = json!({
                "check": "closure",
                "status": status,
                "computed": computed,
                "expected": Value::Null,
                "provenance": ["derived"],
                "millis": start.elapsed().as_millis() as u64,
            });
            let text = match status {
                "pass" => format!("order {}\n", computed["order"]),
                _ => format!("closure limit reached after {} elements\n", computed["partial"]),
            };
            emit(&cli, &value, text);
            ExitCode::from(code)
        }
    }
}
