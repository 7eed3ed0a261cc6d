// Forgetting strands keeps level-4 braids at level 4, and every twist
// square downstairs has a level-4 preimage.

use braid_congruence::braid::{delete_strands, is_trivial, round_twist};
use braid_congruence::oracles::{in_level, sample_with, Stratum};
use braid_congruence::verify::forgetful_witness;
use braid_congruence::Result;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..5 {
        let w = sample_with(&mut rng, Stratum::ConjugatedSquares, 5);
        let down = delete_strands(&w, &[4, 5])?;
        println!("{} letters, level 4 {}, forgotten to B_3 level 4 {}", w.len(), in_level(&w, 4)?, in_level(&down, 4)?);
    }
    for j in 2..=3 {
        let lift = forgetful_witness(j, 3, 5)?;
        let image = delete_strands(&lift, &[4, 5])?;
        let target = round_twist(j, 3)?.pow(2);
        println!("lift of T_{j}^2: {lift}; maps to target: {}", is_trivial(&image.concat(&target.invert())?)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
