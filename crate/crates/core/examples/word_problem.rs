// The exact word problem: braid relations, the squared lantern relation,
// and strand deletion.

use braid_congruence::braid::{artin_generator, braids_equal, delete_strand, is_trivial, linking_numbers};
use braid_congruence::{BraidWord, Result};

pub fn run_example() -> Result<()> {
    let braid_relation: BraidWord = "1 2 1 -2 -1 -2".parse()?;
    println!("{braid_relation} trivial: {}", is_trivial(&braid_relation)?);

    let a = |i, j| artin_generator(i, j, 3);
    let (a12, a13, a23) = (a(1, 2)?, a(1, 3)?, a(2, 3)?);
    let lhs = BraidWord::commutator(&a12, &a13)?;
    let rhs = BraidWord::product(
        3,
        &[
            a12.pow(2),
            a13.pow(2).conjugate_by(&a12)?,
            a23.pow(2),
            BraidWord::product(3, &[a13.clone(), a12.clone(), a23.clone()])?.pow(-2),
        ],
    )?;
    println!("[a12, a13] = {lhs}");
    println!("squared lantern holds: {}", braids_equal(&lhs, &rhs)?);
    assert!(braids_equal(&lhs, &rhs)?);

    let lk = linking_numbers(&rhs)?;
    println!("linking numbers of the right side: {:?}", lk.pairs());

    for s in 1..=3 {
        println!("a13 with strand {s} deleted: {}", delete_strand(&a13, s)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
