// The point-pushing subgroup of B_5 and Brunnian braids, mod 4 and mod 8.

use braid_congruence::braid::{artin_generators, brunnian_sample, push_generators};
use braid_congruence::burau::symplectize;
use braid_congruence::finite_group::{closure_of_int, subgroup_index, ModMatrix, DEFAULT_CLOSURE_LIMIT};
use braid_congruence::matrix::IntMatrix;
use braid_congruence::symplectic::{primitive_vectors, transvection_power};
use braid_congruence::Result;

pub fn run_example() -> Result<()> {
    let ctx = symplectize(5)?;
    let images = |ws: Vec<_>| ws.iter().map(|w| ctx.rho(w)).collect::<Result<Vec<IntMatrix>>>();
    let push = images(push_generators(5))?;
    let pure = images(artin_generators(5))?;

    let push4 = closure_of_int(&push, 4, DEFAULT_CLOSURE_LIMIT)?;
    let pure4 = closure_of_int(&pure, 4, DEFAULT_CLOSURE_LIMIT)?;
    println!("push mod 4: order {}, index {}", push4.order(), subgroup_index(&pure4, &push4)?);

    let mennicke: Vec<IntMatrix> = primitive_vectors(4, 2).iter().map(|v| transvection_power(v, 4)).collect();
    let level4 = closure_of_int(&mennicke, 8, DEFAULT_CLOSURE_LIMIT)?;
    let push8 = closure_of_int(&push, 8, DEFAULT_CLOSURE_LIMIT)?;
    println!(
        "mod 8: push order {}, level-4 group order {}, index {}",
        push8.order(),
        level4.order(),
        subgroup_index(&push8, &level4)?
    );

    for seed in 0..3 {
        let w = brunnian_sample(5, seed)?;
        let image = ModMatrix::from_int(&ctx.rho(&w)?, 8)?;
        println!(
            "Brunnian sample {seed} ({} letters): level 4 {}, in level-4 group mod 8 {}",
            w.len(),
            ctx.rho(&w)?.is_identity_mod(4),
            level4.contains(&image)?
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
