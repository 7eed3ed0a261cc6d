// Orders of finite images: the pure braid group mod 4, the whole braid
// group mod 2 and 4, and the groups generated by squared transvections.

use braid_congruence::braid::artin_generators;
use braid_congruence::burau::symplectize;
use braid_congruence::finite_group::{closure_of_int, DEFAULT_CLOSURE_LIMIT};
use braid_congruence::matrix::IntMatrix;
use braid_congruence::symplectic::{generating_sets, mumford_gens, transvection_power, Parity};
use braid_congruence::{BraidWord, Result};

pub fn run_example() -> Result<()> {
    for n in 3..=5 {
        let ctx = symplectize(n)?;
        let pure: Vec<IntMatrix> = artin_generators(n).iter().map(|w| ctx.rho(w)).collect::<Result<_>>()?;
        let full: Vec<IntMatrix> = (1..n as i32)
            .map(|i| ctx.rho(&BraidWord::generator(n, i)?))
            .collect::<Result<_>>()?;
        println!(
            "n = {n}: |rho(PB_n) mod 4| = {}, |rho(B_n) mod 2| = {}, |rho(B_n) mod 4| = {}",
            closure_of_int(&pure, 4, DEFAULT_CLOSURE_LIMIT)?.order(),
            closure_of_int(&full, 2, DEFAULT_CLOSURE_LIMIT)?.order(),
            closure_of_int(&full, 4, DEFAULT_CLOSURE_LIMIT)?.order(),
        );
    }

    let squares = |vs: Vec<_>| vs.iter().map(|v| transvection_power(v, 2)).collect::<Vec<_>>();
    let odd = closure_of_int(&squares(generating_sets(2, Parity::Odd)?), 4, DEFAULT_CLOSURE_LIMIT)?;
    let mumford = closure_of_int(&squares(mumford_gens(2)), 4, DEFAULT_CLOSURE_LIMIT)?;
    println!(
        "g = 2: generating set closes to {}, equal to the Mumford closure: {}",
        odd.order(),
        odd.equals(&mumford)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
