//! The unreduced Burau representation, its integral specialization at
//! t = -1, and the change of coordinates that puts the integral image inside
//! a symplectic group.
//!
//! Matrices act on column vectors and ρ(w) is the product of the generator
//! blocks in word order. Every image fixes the column vector (1, …, 1)ᵀ.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::laurent::{pow_mod, LaurentPoly};
use crate::matrix::{
    bilinear, dot, kernel_basis_of_covector, primitive_integer_vector, IntMatrix, LaurentMatrix,
    RationalMatrix,
};

/// Product in word order of I_{i-1} ⊕ [[1-t, t], [1, 0]] ⊕ I_{n-i-1}
/// (and the inverse block for negative letters).
pub fn burau_unreduced(w: &BraidWord) -> LaurentMatrix {
    let n = w.strands();
    let one = LaurentPoly::one();
    let t = LaurentPoly::t();
    let t_inv = LaurentPoly::monomial(1, -1);
    let one_minus_t = &one - &t;
    let one_minus_t_inv = &one - &t_inv;
    let mut m = LaurentMatrix::identity(n);
    for &l in w.letters() {
        let i = l.unsigned_abs() as usize - 1;
        for r in 0..n {
            let a = m.get(r, i).clone();
            let b = m.get(r, i + 1).clone();
            let (new_a, new_b) = if l > 0 {
                (&(&a * &one_minus_t) + &b, &a * &t)
            } else {
                (&b * &t_inv, &a + &(&b * &one_minus_t_inv))
            };
            *m.get_mut(r, i) = new_a;
            *m.get_mut(r, i + 1) = new_b;
        }
    }
    m
}

/// The generator block of σ_i (or σ_i⁻¹) as a full n×n matrix at t = -1.
pub fn integral_generator(n: usize, letter: i32) -> IntMatrix {
    integral_burau(&BraidWord::from_raw(n, vec![letter]))
}

/// ρ(w): the unreduced Burau matrix evaluated at t = -1.
pub fn integral_burau(w: &BraidWord) -> IntMatrix {
    let n = w.strands();
    let mut m = IntMatrix::identity(n);
    for &l in w.letters() {
        let i = l.unsigned_abs() as usize - 1;
        for r in 0..n {
            let a = m[(r, i)].clone();
            let b = m[(r, i + 1)].clone();
            let (new_a, new_b) = if l > 0 {
                // block [[2, -1], [1, 0]]
                (&a * 2 + &b, -a)
            } else {
                // block [[0, 1], [-1, 2]]
                (-b.clone(), a + &b * 2)
            };
            m[(r, i)] = new_a;
            m[(r, i + 1)] = new_b;
        }
    }
    m
}

/// Burau matrix over ℤ/modulus with t specialized to an invertible residue.
/// Row-major, entries in 0..modulus.
pub fn burau_mod(w: &BraidWord, t: u64, modulus: u64) -> Result<Vec<u64>> {
    let t = t % modulus;
    let t_inv = inverse_mod(t, modulus)
        .ok_or_else(|| Error::InvalidArgument(format!("{t} is not invertible mod {modulus}")))?;
    let n = w.strands();
    let md = modulus as u128;
    let one_minus_t = (1 + modulus - t) % modulus;
    let one_minus_t_inv = (1 + modulus - t_inv) % modulus;
    let mut m = vec![0u64; n * n];
    for i in 0..n {
        m[i * n + i] = 1 % modulus;
    }
    let mulm = |x: u64, y: u64| ((x as u128 * y as u128) % md) as u64;
    let addm = |x: u64, y: u64| ((x as u128 + y as u128) % md) as u64;
    for &l in w.letters() {
        let i = l.unsigned_abs() as usize - 1;
        for r in 0..n {
            let a = m[r * n + i];
            let b = m[r * n + i + 1];
            let (na, nb) = if l > 0 {
                (addm(mulm(a, one_minus_t), b), mulm(a, t))
            } else {
                (mulm(b, t_inv), addm(a, mulm(b, one_minus_t_inv)))
            };
            m[r * n + i] = na;
            m[r * n + i + 1] = nb;
        }
    }
    Ok(m)
}

/// ρ(w) reduced mod m, computed directly in ℤ/m (reduction is a ring homomorphism).
pub fn integral_burau_mod(w: &BraidWord, modulus: u64) -> Vec<u64> {
    burau_mod(w, modulus - 1, modulus).expect("-1 is always invertible")
}

fn inverse_mod(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    (old_r == 1).then(|| old_s.rem_euclid(m as i128) as u64)
}

/// Mersenne prime 2⁶¹ − 1, used for nontriviality certificates.
pub(crate) const CERTIFICATE_PRIME: u64 = (1 << 61) - 1;

/// True when the Burau matrix of `w`, specialized at a few values of t
/// modulo a large prime, differs from the identity. A `true` answer proves
/// `w` is a nontrivial braid.
pub(crate) fn burau_certifies_nontrivial(w: &BraidWord) -> bool {
    let n = w.strands();
    [3u64, 5, 1_000_003, pow_mod(7, 31, CERTIFICATE_PRIME)]
        .iter()
        .any(|&t| {
            let m = burau_mod(w, t, CERTIFICATE_PRIME).expect("nonzero residue mod a prime");
            (0..n).any(|i| (0..n).any(|j| m[i * n + j] != u64::from(i == j)))
        })
}

/// Coordinates in which the integral Burau image is symplectic.
///
/// For n = 2g+1 the ambient lattice ℤⁿ splits as (a rank-2g invariant
/// sublattice) ⊕ ⟨(1,…,1)⟩ and the form is standard on the first summand.
/// For n = 2g+2 the form is unimodular on all of ℤⁿ and (1,…,1) is the last
/// basis vector y_{g+1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SympContext {
    n: usize,
    g: usize,
    /// Invariant skew form in Burau coordinates, primitive.
    invariant_form: IntMatrix,
    /// Standard form on the symplectic block (dimension `dim()`).
    form: IntMatrix,
    /// Columns: new basis in Burau coordinates (n×n).
    basis: IntMatrix,
    basis_inv: IntMatrix,
    /// Radical of the invariant form (odd n).
    radical: Option<Vec<BigInt>>,
    /// Invariant covector splitting off the radical (odd n).
    complement_covector: Option<Vec<BigInt>>,
}

/// Standard form with î(x_k, y_k) = 1 in the ordered basis (x_1, y_1, …, x_g, y_g).
pub fn standard_form(dim: usize) -> IntMatrix {
    assert!(dim.is_multiple_of(2), "symplectic dimension must be even");
    let mut j = IntMatrix::zeros(dim, dim);
    for k in 0..dim / 2 {
        j[(2 * k, 2 * k + 1)] = BigInt::one();
        j[(2 * k + 1, 2 * k)] = -BigInt::one();
    }
    j
}

impl SympContext {
    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn is_odd(&self) -> bool {
        self.n % 2 == 1
    }

    /// Size of the symplectic matrices: 2g for odd n, 2g+2 for even n.
    pub fn dim(&self) -> usize {
        if self.is_odd() {
            2 * self.g
        } else {
            2 * self.g + 2
        }
    }

    pub fn form(&self) -> &IntMatrix {
        &self.form
    }

    pub fn invariant_form(&self) -> &IntMatrix {
        &self.invariant_form
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn radical(&self) -> Option<&[BigInt]> {
        self.radical.as_deref()
    }

    pub fn complement_covector(&self) -> Option<&[BigInt]> {
        self.complement_covector.as_deref()
    }

    /// y_{g+1} in symplectic coordinates (even n only).
    pub fn distinguished_vector(&self) -> Option<Vec<BigInt>> {
        (!self.is_odd()).then(|| {
            let d = self.dim();
            (0..d).map(|i| BigInt::from(u8::from(i == d - 1))).collect()
        })
    }

    /// B⁻¹ M B, restricted to the symplectic block for odd n.
    pub fn conjugate(&self, m: &IntMatrix) -> IntMatrix {
        let full = self.basis_inv.mul(m).mul(&self.basis);
        if self.is_odd() {
            full.leading_block(self.dim())
        } else {
            full
        }
    }

    /// B⁻¹ M B without truncation.
    pub fn conjugate_full(&self, m: &IntMatrix) -> IntMatrix {
        self.basis_inv.mul(m).mul(&self.basis)
    }

    pub fn rho(&self, w: &BraidWord) -> Result<IntMatrix> {
        rho_symplectic(w, self)
    }

    /// Same context with the symplectic basis changed by `change`, which must
    /// preserve the standard form (and fix y_{g+1} for even n).
    pub fn with_basis_change(&self, change: &IntMatrix) -> Result<Self> {
        let d = self.dim();
        if change.rows() != d || change.cols() != d {
            return Err(Error::Mismatch(format!("basis change must be {d}x{d}")));
        }
        if change.transpose().mul(&self.form).mul(change) != self.form {
            return Err(Error::Symplectize("basis change is not symplectic".into()));
        }
        if let Some(y) = self.distinguished_vector() {
            if change.mul_vec(&y) != y {
                return Err(Error::Symplectize("basis change moves y_{g+1}".into()));
            }
        }
        let mut embedded = IntMatrix::identity(self.n);
        for i in 0..d {
            for j in 0..d {
                embedded[(i, j)] = change[(i, j)].clone();
            }
        }
        let basis = self.basis.mul(&embedded);
        let basis_inv = basis.inverse_unimodular()?;
        Ok(Self {
            basis,
            basis_inv,
            ..self.clone()
        })
    }
}

/// Skew forms J′ with MᵀJ′M = J′ for every generator image at t = -1.
pub fn invariant_skew_forms(n: usize) -> Vec<IntMatrix> {
    let gens: Vec<IntMatrix> = (1..n as i32).map(|i| integral_generator(n, i)).collect();
    let unknowns: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    let eq_rows = gens.len() * n * n;
    let mut system = RationalMatrix::zeros(eq_rows, unknowns.len());
    for (col, &(a, b)) in unknowns.iter().enumerate() {
        let mut unit = IntMatrix::zeros(n, n);
        unit[(a, b)] = BigInt::one();
        unit[(b, a)] = -BigInt::one();
        for (gi, m) in gens.iter().enumerate() {
            let e = m.transpose().mul(&unit).mul(m).sub(&unit);
            for r in 0..n {
                for c in 0..n {
                    system.set(gi * n * n + r * n + c, col, BigRational::from_integer(e[(r, c)].clone()));
                }
            }
        }
    }
    system
        .nullspace()
        .into_iter()
        .map(|v| {
            let ints = primitive_integer_vector(&v);
            let mut j = IntMatrix::zeros(n, n);
            for (k, &(a, b)) in unknowns.iter().enumerate() {
                j[(a, b)] = ints[k].clone();
                j[(b, a)] = -ints[k].clone();
            }
            j
        })
        .collect()
}

/// Row vectors φ with φ M = φ for every generator image.
pub fn invariant_covectors(n: usize) -> Vec<Vec<BigInt>> {
    let mut system = RationalMatrix::zeros((n - 1) * n, n);
    for (gi, i) in (1..n as i32).enumerate() {
        let m = integral_generator(n, i);
        // column c of φ(M - I) = Σ_r φ_r (M - I)_{rc}
        for c in 0..n {
            for r in 0..n {
                let mut v = m[(r, c)].clone();
                if r == c {
                    v -= 1;
                }
                system.set(gi * n + c, r, BigRational::from_integer(v));
            }
        }
    }
    system
        .nullspace()
        .into_iter()
        .map(|v| primitive_integer_vector(&v))
        .collect()
}

/// Integral symplectic Gram–Schmidt on the lattice spanned by `lattice`
/// (a basis, given in ambient coordinates) with respect to `omega`.
///
/// Returns pairs (e, f) with ω(e, f) = 1, pairwise ω-orthogonal, spanning
/// the same lattice. The first pair starts from `lattice[0]`.
fn symplectic_pairs(omega: &IntMatrix, lattice: Vec<Vec<BigInt>>) -> Result<Vec<(Vec<BigInt>, Vec<BigInt>)>> {
    let mut rest = lattice;
    let mut pairs = Vec::new();
    let sub_mul = |x: &mut Vec<BigInt>, q: &BigInt, y: &[BigInt]| {
        for (a, b) in x.iter_mut().zip(y) {
            *a -= q * b;
        }
    };
    while !rest.is_empty() {
        let e = rest.remove(0);
        let f_idx = loop {
            let pairing: Vec<BigInt> = rest.iter().map(|v| bilinear(omega, &e, v)).collect();
            let nonzero: Vec<usize> = (0..rest.len()).filter(|&k| !pairing[k].is_zero()).collect();
            let Some(&p) = nonzero.iter().min_by_key(|&&k| pairing[k].abs()) else {
                return Err(Error::Symplectize("form is degenerate on the lattice".into()));
            };
            if nonzero.len() == 1 {
                if !pairing[p].abs().is_one() {
                    return Err(Error::Symplectize(format!(
                        "form is not unimodular (pairing {})",
                        pairing[p]
                    )));
                }
                if pairing[p].is_negative() {
                    for x in rest[p].iter_mut() {
                        *x = -&*x;
                    }
                }
                break p;
            }
            let pivot = rest[p].clone();
            for &k in &nonzero {
                if k != p {
                    let q = num_integer::Integer::div_floor(&pairing[k], &pairing[p]);
                    sub_mul(&mut rest[k], &q, &pivot);
                }
            }
        };
        let f = rest.remove(f_idx);
        for v in rest.iter_mut() {
            // v ← v − ω(v, f) e + ω(v, e) f
            let vf = bilinear(omega, v, &f);
            let ve = bilinear(omega, v, &e);
            sub_mul(v, &vf, &e);
            sub_mul(v, &(-ve), &f);
        }
        pairs.push((e, f));
    }
    Ok(pairs)
}

/// Computes the symplectic coordinates for the integral Burau representation of B_n.
pub fn symplectize(n: usize) -> Result<SympContext> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("symplectize needs n >= 3, got {n}")));
    }
    let forms = invariant_skew_forms(n);
    if forms.len() != 1 {
        return Err(Error::Symplectize(format!(
            "expected a 1-dimensional space of invariant forms, found {}",
            forms.len()
        )));
    }
    let jp = forms.into_iter().next().expect("one form");
    let ones = vec![BigInt::one(); n];
    let g = (n - 1) / 2;

    if n % 2 == 1 {
        let kernel = RationalMatrix::from_int(&jp).nullspace();
        if kernel.len() != 1 {
            return Err(Error::Symplectize(format!("radical has rank {}", kernel.len())));
        }
        let radical = primitive_integer_vector(&kernel[0]);
        let covectors = invariant_covectors(n);
        if covectors.len() != 1 {
            return Err(Error::Symplectize(format!(
                "expected one invariant covector, found {}",
                covectors.len()
            )));
        }
        let mut phi = covectors.into_iter().next().expect("one covector");
        let pairing = dot(&phi, &radical);
        if !pairing.abs().is_one() {
            return Err(Error::Symplectize("radical does not split off over the integers".into()));
        }
        if pairing.is_negative() {
            phi.iter_mut().for_each(|x| *x = -&*x);
        }
        let complement = kernel_basis_of_covector(&phi)?;
        let pairs = symplectic_pairs(&jp, complement)?;
        let mut cols: Vec<Vec<BigInt>> = pairs.into_iter().flat_map(|(e, f)| [e, f]).collect();
        cols.push(radical.clone());
        finish(n, g, jp, cols, Some(radical), Some(phi))
    } else {
        // start from the unimodular basis (1,…,1), e_2, …, e_n
        let mut lattice = vec![ones.clone()];
        for k in 1..n {
            lattice.push((0..n).map(|i| BigInt::from(u8::from(i == k))).collect());
        }
        let mut pairs = symplectic_pairs(&jp, lattice)?;
        let (y_last, f) = pairs.remove(0);
        debug_assert_eq!(y_last, ones);
        let x_last: Vec<BigInt> = f.iter().map(|x| -x).collect();
        let mut cols: Vec<Vec<BigInt>> = pairs.into_iter().flat_map(|(e, f)| [e, f]).collect();
        cols.push(x_last);
        cols.push(y_last);
        finish(n, g, jp, cols, None, None)
    }
}

fn finish(
    n: usize,
    g: usize,
    invariant_form: IntMatrix,
    cols: Vec<Vec<BigInt>>,
    radical: Option<Vec<BigInt>>,
    complement_covector: Option<Vec<BigInt>>,
) -> Result<SympContext> {
    let basis = IntMatrix::from_columns(&cols);
    let basis_inv = basis
        .inverse_unimodular()
        .map_err(|_| Error::Symplectize("change of basis is not unimodular".into()))?;
    let dim = if n % 2 == 1 { 2 * g } else { 2 * g + 2 };
    let form = standard_form(dim);
    let gram = basis.transpose().mul(&invariant_form).mul(&basis);
    if gram.leading_block(dim) != form {
        return Err(Error::Symplectize("Gram matrix is not the standard form".into()));
    }
    Ok(SympContext {
        n,
        g,
        invariant_form,
        form,
        basis,
        basis_inv,
        radical,
        complement_covector,
    })
}

/// ρ(w) in symplectic coordinates.
pub fn rho_symplectic(w: &BraidWord, ctx: &SympContext) -> Result<IntMatrix> {
    if w.strands() != ctx.n {
        return Err(Error::StrandMismatch {
            left: w.strands(),
            right: ctx.n,
        });
    }
    Ok(ctx.conjugate(&integral_burau(w)))
}
