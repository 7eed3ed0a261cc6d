//! Integer Laurent polynomials in one variable `t`, stored densely over the
//! smallest window of exponents that holds every nonzero coefficient.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    /// Exponent of `coeffs[0]`; zero for the zero polynomial.
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c · t^e`
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        Self::from_coeffs(e, vec![c.into()])
    }

    /// `t`
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    pub fn from_coeffs(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { low, coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest and highest exponents with nonzero coefficient.
    pub fn degree_range(&self) -> Option<(i64, i64)> {
        if self.is_zero() {
            None
        } else {
            Some((self.low, self.low + self.coeffs.len() as i64 - 1))
        }
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        let idx = e - self.low;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            BigInt::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// `±t^k` for some k.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].abs().is_one()
    }

    pub fn eval_minus_one(&self) -> BigInt {
        let mut acc = BigInt::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            if (self.low + k as i64).rem_euclid(2) == 0 {
                acc += c;
            } else {
                acc -= c;
            }
        }
        acc
    }

    /// Evaluation in ℤ/modulus at an invertible residue `t` with inverse `t_inv`.
    pub fn eval_mod(&self, t: u64, t_inv: u64, modulus: u64) -> u64 {
        let m = BigInt::from(modulus);
        let base = if self.low < 0 { t_inv } else { t };
        let mut power = pow_mod(base, self.low.unsigned_abs(), modulus);
        let mut acc = 0u64;
        for c in &self.coeffs {
            let c = (c % &m + &m) % &m;
            let c: u64 = c.try_into().expect("reduced coefficient fits");
            acc = ((acc as u128 + c as u128 * power as u128) % modulus as u128) as u64;
            power = ((power as u128 * t as u128) % modulus as u128) as u64;
        }
        acc
    }
}

pub(crate) fn pow_mod(mut base: u64, mut e: u64, modulus: u64) -> u64 {
    let mut acc = 1 % modulus;
    base %= modulus;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * base as u128) % modulus as u128) as u64;
        }
        base = ((base as u128 * base as u128) % modulus as u128) as u64;
        e >>= 1;
    }
    acc
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = (self.low + self.coeffs.len() as i64).max(rhs.low + rhs.coeffs.len() as i64);
        let mut coeffs = vec![BigInt::zero(); (high - low) as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - low) as usize + k] += c;
        }
        for (k, c) in rhs.coeffs.iter().enumerate() {
            coeffs[(rhs.low - low) as usize + k] += c;
        }
        LaurentPoly::from_coeffs(low, coeffs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::from_coeffs(self.low + rhs.low, coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.low + k as i64;
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}t")?,
                (_, true) => write!(f, "t^{e}")?,
                (_, false) => write!(f, "{mag}t^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(low: i64, coeffs: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(low, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn normalization() {
        assert_eq!(poly(-2, &[0, 0, 1, 0]), LaurentPoly::one());
        assert!(poly(3, &[0, 0]).is_zero());
        assert_eq!(poly(3, &[0]), LaurentPoly::zero());
        assert_eq!(poly(-1, &[0, 2, 3]).degree_range(), Some((0, 1)));
    }

    #[test]
    fn arithmetic() {
        let one_minus_t = &LaurentPoly::one() - &LaurentPoly::t();
        assert_eq!(one_minus_t, poly(0, &[1, -1]));
        let t_inv = LaurentPoly::monomial(1, -1);
        assert!((&LaurentPoly::t() * &t_inv).is_one());
        assert_eq!(&one_minus_t * &one_minus_t, poly(0, &[1, -2, 1]));
        assert!((&one_minus_t - &one_minus_t).is_zero());
        assert!(LaurentPoly::monomial(-1, 5).is_unit());
        assert!(!poly(0, &[1, 1]).is_unit());
    }

    #[test]
    fn display() {
        assert_eq!(poly(0, &[1, -1]).to_string(), "1 - t");
        assert_eq!(poly(-1, &[2, 0, 0, -1]).to_string(), "2t^-1 - t^2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn evaluation() {
        assert_eq!(poly(0, &[1, -1]).eval_minus_one(), BigInt::from(2));
        assert_eq!(poly(-1, &[1]).eval_minus_one(), BigInt::from(-1));
        // 3t^-1 + 1 at t = 2 mod 7: 3*4 + 1 = 13 = 6
        assert_eq!(poly(-1, &[3, 1]).eval_mod(2, 4, 7), 6);
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        (-4i64..4, prop::collection::vec(-20i64..20, 0..6)).prop_map(|(low, c)| poly(low, &c))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn evaluation_is_a_ring_homomorphism(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!((&a * &b).eval_minus_one(), a.eval_minus_one() * b.eval_minus_one());
            prop_assert_eq!((&a + &b).eval_minus_one(), a.eval_minus_one() + b.eval_minus_one());
        }
    }
}
