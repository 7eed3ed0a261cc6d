// Transvections, the map ψ to sp(ℤ/2), and the lifts of the m_vw basis.

use braid_congruence::symplectic::{
    combo, m_basis, m_basis_all, m_lift, omega, psi, span_dimension, transvection, transvection_power,
    BasisSymbol::{X, Y},
};
use braid_congruence::Result;

pub fn run_example() -> Result<()> {
    let x1 = combo(1, &[(1, X(1))]);
    println!("tau_x1 =\n{}", transvection(&x1));
    println!("tau_x1^2 =\n{}", transvection_power(&x1, 2));
    println!("omega_1 (g = 1) =\n{}", omega(1, 1)?);

    let g = 2;
    let m = m_lift(X(1), Y(2), g);
    println!("M_x1y2 =\n{m}");
    println!("psi(M_x1y2) =\n{}", psi(&m)?);
    assert_eq!(psi(&m)?, m_basis(X(1), Y(2), g));

    for g in 1..=3 {
        println!("g = {g}: dim sp = {}", span_dimension(&m_basis_all(g)));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
