// Burau matrix of a braid word, its value at t = -1, and the image in
// symplectic coordinates.
//
//     cargo run --example burau_matrix -- "n=4; 1 -2 3"

use braid_congruence::burau::{burau_unreduced, integral_burau, symplectize};
use braid_congruence::symplectic::is_symplectic;
use braid_congruence::{BraidWord, Result};

pub fn run_example() -> Result<()> {
    show(&"n=4; 1 -2 3".parse()?)
}

fn show(w: &BraidWord) -> Result<()> {
    println!("word: {w}");
    println!("Burau matrix:\n{}", burau_unreduced(w));
    println!("at t = -1:\n{}", integral_burau(w));

    let ctx = symplectize(w.strands())?;
    let rho = ctx.rho(w)?;
    println!("genus {} symplectic image ({}x{}):\n{rho}", ctx.genus(), rho.rows(), rho.cols());
    assert!(is_symplectic(&rho));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    match std::env::args().nth(1) {
        Some(text) => show(&text.parse()?),
        None => run_example(),
    }
}
