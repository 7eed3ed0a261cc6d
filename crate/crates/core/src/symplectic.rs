//! The standard symplectic lattice ℤ^{2g}, transvections, and the mod-2
//! symplectic Lie algebra sp_{2g}(ℤ/2) with its m_vw spanning set.
//!
//! Vectors are columns in the ordered basis (x_1, y_1, …, x_g, y_g) and the
//! form satisfies î(x_k, y_k) = 1. Written products of matrices are matrix
//! products in the order written.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::burau::standard_form;
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// A standard basis vector x_k or y_k (1-based k).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BasisSymbol {
    X(usize),
    Y(usize),
}

impl BasisSymbol {
    pub fn index(self) -> usize {
        match self {
            BasisSymbol::X(k) => 2 * (k - 1),
            BasisSymbol::Y(k) => 2 * k - 1,
        }
    }

    pub fn from_index(i: usize) -> Self {
        if i.is_multiple_of(2) {
            BasisSymbol::X(i / 2 + 1)
        } else {
            BasisSymbol::Y(i / 2 + 1)
        }
    }

    /// x_k★ = y_k and y_k★ = x_k.
    pub fn star(self) -> Self {
        match self {
            BasisSymbol::X(k) => BasisSymbol::Y(k),
            BasisSymbol::Y(k) => BasisSymbol::X(k),
        }
    }

    /// x_1, y_1, …, x_g, y_g
    pub fn all(g: usize) -> Vec<Self> {
        (0..2 * g).map(Self::from_index).collect()
    }
}

impl fmt::Display for BasisSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisSymbol::X(k) => write!(f, "x{k}"),
            BasisSymbol::Y(k) => write!(f, "y{k}"),
        }
    }
}

/// Integer vector in ℤ^{2g}.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SympVector(pub Vec<i64>);

impl SympVector {
    pub fn zero(dim: usize) -> Self {
        Self(vec![0; dim])
    }

    pub fn basis(sym: BasisSymbol, dim: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[sym.index()] = 1;
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Self {
        Self(self.0.iter().map(|a| -a).collect())
    }

    /// î(self, other)
    pub fn pairing(&self, other: &Self) -> i64 {
        self.0
            .chunks(2)
            .zip(other.0.chunks(2))
            .map(|(a, b)| a[0] * b[1] - a[1] * b[0])
            .sum()
    }

    pub fn is_primitive(&self) -> bool {
        self.0.iter().fold(0i64, |g, &x| g.gcd(&x)) == 1
    }

    pub fn to_bigint(&self) -> Vec<BigInt> {
        self.0.iter().map(|&x| BigInt::from(x)).collect()
    }
}

/// Integer combination of basis vectors in ℤ^{2g}: `combo(2, &[(1, X(1)), (-1, Y(2))])`.
pub fn combo(g: usize, terms: &[(i64, BasisSymbol)]) -> SympVector {
    let mut v = SympVector::zero(2 * g);
    for &(c, s) in terms {
        v.0[s.index()] += c;
    }
    v
}

/// Matrix of τ_v(w) = w + î(w, v) v, i.e. I + v (Jv)ᵀ.
pub fn transvection(v: &SympVector) -> IntMatrix {
    let d = v.dim();
    let j = standard_form(d);
    let jv = j.mul_vec(&v.to_bigint());
    let mut m = IntMatrix::identity(d);
    for r in 0..d {
        for c in 0..d {
            m[(r, c)] += BigInt::from(v.0[r]) * &jv[c];
        }
    }
    m
}

/// τ_v^k, computed in closed form as I + k·v(Jv)ᵀ.
pub fn transvection_power(v: &SympVector, k: i64) -> IntMatrix {
    let base = transvection(v);
    let rank_one = base.sub(&IntMatrix::identity(v.dim()));
    IntMatrix::identity(v.dim()).add(&rank_one.scale(&BigInt::from(k)))
}

pub fn is_symplectic(m: &IntMatrix) -> bool {
    m.is_square() && m.rows().is_multiple_of(2) && {
        let j = standard_form(m.rows());
        m.transpose().mul(&j).mul(m) == j
    }
}

/// N_v: the identity with the v v- and v★ v★-entries negated.
pub fn negation(v: BasisSymbol, g: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(2 * g);
    m[(v.index(), v.index())] = -BigInt::one();
    m[(v.star().index(), v.star().index())] = -BigInt::one();
    m
}

/// Element of sp_{2g}(ℤ/2), stored as a bitset of the (2g)² entries
/// (entry (r, c) is bit r·2g + c). Supports 2g ≤ 8.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpLieElem {
    dim: usize,
    bits: u64,
}

impl SpLieElem {
    pub fn zero(dim: usize) -> Self {
        assert!(dim <= 8 && dim.is_multiple_of(2), "supported dimensions are 2, 4, 6, 8");
        Self { dim, bits: 0 }
    }

    /// Builds from a mod-2 matrix without checking the Lie algebra condition.
    pub fn from_entries(dim: usize, entries: &[u8]) -> Self {
        let mut e = Self::zero(dim);
        for (k, &x) in entries.iter().enumerate() {
            if x % 2 == 1 {
                e.bits |= 1 << k;
            }
        }
        e
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn get(&self, r: usize, c: usize) -> u8 {
        ((self.bits >> (r * self.dim + c)) & 1) as u8
    }

    fn set(&mut self, r: usize, c: usize) {
        self.bits |= 1 << (r * self.dim + c);
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        Self {
            dim: self.dim,
            bits: self.bits ^ other.bits,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Entry v w equals entry w★ v★ for all basis symbols.
    pub fn is_valid(&self) -> bool {
        let g = self.dim / 2;
        BasisSymbol::all(g).into_iter().all(|v| {
            BasisSymbol::all(g)
                .into_iter()
                .all(|w| self.get(v.index(), w.index()) == self.get(w.star().index(), v.star().index()))
        })
    }

    /// m·v over ℤ/2.
    pub fn apply(&self, v: &[u8]) -> Vec<u8> {
        (0..self.dim)
            .map(|r| (0..self.dim).map(|c| self.get(r, c) & (v[c] & 1)).fold(0, |a, b| a ^ b))
            .collect()
    }

    pub fn entries(&self) -> Vec<Vec<u8>> {
        (0..self.dim)
            .map(|r| (0..self.dim).map(|c| self.get(r, c)).collect())
            .collect()
    }
}

impl fmt::Display for SpLieElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.entries().iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let s: Vec<String> = row.iter().map(u8::to_string).collect();
            write!(f, "[{}]", s.join(" "))?;
        }
        Ok(())
    }
}

/// Dimension over ℤ/2 of the span of the given elements.
pub fn span_dimension(elems: &[SpLieElem]) -> usize {
    let mut basis: Vec<u64> = Vec::new();
    for e in elems {
        let mut x = e.bits;
        for &b in &basis {
            x = x.min(x ^ b);
        }
        if x != 0 {
            basis.push(x);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}

/// ψ(I + 2A) = A mod 2.
pub fn psi(m: &IntMatrix) -> Result<SpLieElem> {
    if !m.is_square() {
        return Err(Error::Mismatch("psi needs a square matrix".into()));
    }
    if !m.is_identity_mod(2) {
        return Err(Error::NotLevelTwo);
    }
    let d = m.rows();
    let two = BigInt::from(2);
    let mut out = SpLieElem::zero(d);
    for r in 0..d {
        for c in 0..d {
            let mut x = m[(r, c)].clone();
            if r == c {
                x -= 1;
            }
            let a = x / &two;
            if a.is_odd() {
                out.set(r, c);
            }
        }
    }
    Ok(out)
}

/// m_vw: zero except for 1s in the v w- and w★ v★-entries.
pub fn m_basis(v: BasisSymbol, w: BasisSymbol, g: usize) -> SpLieElem {
    let mut e = SpLieElem::zero(2 * g);
    e.set(v.index(), w.index());
    e.set(w.star().index(), v.star().index());
    e
}

/// Every m_vw in the spanning set, one per unordered orbit of (v, w) ↦ (w★, v★).
pub fn m_basis_all(g: usize) -> Vec<SpLieElem> {
    let mut out: Vec<SpLieElem> = Vec::new();
    for v in BasisSymbol::all(g) {
        for w in BasisSymbol::all(g) {
            let e = m_basis(v, w, g);
            if !out.contains(&e) {
                out.push(e);
            }
        }
    }
    out
}

/// Integral lift M_vw ∈ Sp_{2g}(ℤ)[2] with ψ(M_vw) = m_vw.
pub fn m_lift(v: BasisSymbol, w: BasisSymbol, g: usize) -> IntMatrix {
    let d = 2 * g;
    let vv = SympVector::basis(v, d);
    if v == w {
        negation(v, g)
    } else if v == w.star() {
        transvection_power(&vv, 2)
    } else {
        let ws = SympVector::basis(w.star(), d);
        transvection_power(&ws.add(&vv), -2)
            .mul(&transvection_power(&ws, 2))
            .mul(&transvection_power(&vv, 2))
    }
}

/// ω_i = τ_{x_i}² τ_{y_i}² τ_{x_i − y_i}².
pub fn omega(i: usize, g: usize) -> Result<IntMatrix> {
    if !(1 <= i && i <= g) {
        return Err(Error::Index(format!("omega index {i} not in 1..={g}")));
    }
    let d = 2 * g;
    let x = SympVector::basis(BasisSymbol::X(i), d);
    let y = SympVector::basis(BasisSymbol::Y(i), d);
    Ok(transvection_power(&x, 2)
        .mul(&transvection_power(&y, 2))
        .mul(&transvection_power(&x.sub(&y), 2)))
}

/// Generators m_vw of Ann(y_{g+1}) ⊂ sp_{2g+2}(ℤ/2): v ≠ x_{g+1}, w ≠ y_{g+1}.
pub fn ann_generators(g: usize) -> Vec<SpLieElem> {
    let h = g + 1;
    let mut out: Vec<SpLieElem> = Vec::new();
    for v in BasisSymbol::all(h) {
        for w in BasisSymbol::all(h) {
            if v == BasisSymbol::X(h) || w == BasisSymbol::Y(h) {
                continue;
            }
            let e = m_basis(v, w, h);
            if !out.contains(&e) {
                out.push(e);
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Parity {
    /// n = 2g+1: vectors in ℤ^{2g}.
    Odd,
    /// n = 2g+2: vectors in ℤ^{2g+2} orthogonal to y_{g+1}.
    Even,
}

/// Vectors v whose squared transvections generate Sp_{2g}(ℤ)[2] (odd) or
/// the stabilizer of y_{g+1} in Sp_{2g+2}(ℤ)[2] (even):
/// {x_i} ∪ {y_j} ∪ {x_i + x_j} ∪ {y_i − y_j} ∪ {x_i − y_j}, with x_{g+1}
/// excluded in the even case.
pub fn generating_sets(g: usize, parity: Parity) -> Result<Vec<SympVector>> {
    use BasisSymbol::{X, Y};
    if g < 2 {
        return Err(Error::InvalidArgument(format!("generating sets need g >= 2, got {g}")));
    }
    let (h, x_max) = match parity {
        Parity::Odd => (g, g),
        Parity::Even => (g + 1, g),
    };
    let mut out = Vec::new();
    for i in 1..=x_max {
        out.push(combo(h, &[(1, X(i))]));
    }
    for j in 1..=h {
        out.push(combo(h, &[(1, Y(j))]));
    }
    for i in 1..=x_max {
        for j in i + 1..=x_max {
            out.push(combo(h, &[(1, X(i)), (1, X(j))]));
        }
    }
    for i in 1..=h {
        for j in i + 1..=h {
            out.push(combo(h, &[(1, Y(i)), (-1, Y(j))]));
        }
    }
    for i in 1..=x_max {
        for j in 1..=h {
            out.push(combo(h, &[(1, X(i)), (-1, Y(j))]));
        }
    }
    Ok(out)
}

/// The symplectic basis together with all sums u + w of distinct basis vectors.
pub fn mumford_gens(g: usize) -> Vec<SympVector> {
    let syms = BasisSymbol::all(g);
    let mut out: Vec<SympVector> = syms.iter().map(|&s| SympVector::basis(s, 2 * g)).collect();
    for (a, &u) in syms.iter().enumerate() {
        for &w in &syms[a + 1..] {
            out.push(combo(g, &[(1, u), (1, w)]));
        }
    }
    out
}

/// Every primitive vector with entries in [-bound, bound], one of each ± pair.
pub fn primitive_vectors(dim: usize, bound: i64) -> Vec<SympVector> {
    let mut out = Vec::new();
    let mut cur = vec![-bound; dim];
    loop {
        let v = SympVector(cur.clone());
        let first = cur.iter().find(|&&x| x != 0);
        if first.is_some_and(|&x| x > 0) && v.is_primitive() {
            out.push(v);
        }
        let mut k = 0;
        loop {
            if k == dim {
                return out;
            }
            if cur[k] < bound {
                cur[k] += 1;
                break;
            }
            cur[k] = -bound;
            k += 1;
        }
    }
}

/// ψ-image of τ_v², as a convenience.
pub fn psi_of_square(v: &SympVector) -> SpLieElem {
    psi(&transvection_power(v, 2)).expect("τ_v² is level two")
}

#[cfg(test)]
mod tests {
    use super::BasisSymbol::{X, Y};
    use super::*;
    use rand::{Rng, SeedableRng};
    use proptest::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn transvection_examples() {
        assert_eq!(transvection(&combo(1, &[(1, X(1))])), m(&[&[1, -1], &[0, 1]]));
        assert_eq!(transvection(&combo(1, &[(1, Y(1))])), m(&[&[1, 0], &[1, 1]]));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            let v = SympVector((0..4).map(|_| rng.gen_range(-5..=5)).collect());
            let t = transvection(&v);
            assert_eq!(t, transvection(&v.neg()));
            assert!(is_symplectic(&t));
            assert_eq!(transvection_power(&v, 3), t.pow(3));
        }
    }

    #[test]
    fn transvection_acts_by_formula() {
        let v = combo(2, &[(2, X(1)), (-1, Y(2))]);
        let w = combo(2, &[(1, Y(1)), (3, X(2))]);
        let expected = w.add(&SympVector(v.0.iter().map(|c| c * w.pairing(&v)).collect()));
        let got = transvection(&v).mul_vec(&w.to_bigint());
        assert_eq!(got, expected.to_bigint());
    }

    #[test]
    fn psi_examples() {
        assert!(psi(&IntMatrix::identity(4)).unwrap().is_zero());
        let sq = transvection_power(&combo(1, &[(1, X(1))]), 2);
        assert_eq!(psi(&sq).unwrap(), m_basis(X(1), Y(1), 1));
        assert_eq!(psi(&sq).unwrap().get(0, 1), 1);
        assert!(psi(&sq.mul(&sq)).unwrap().is_zero());
        assert_eq!(psi(&transvection(&combo(1, &[(1, X(1))]))), Err(Error::NotLevelTwo));
    }

    #[test]
    fn m_basis_examples() {
        let e = m_basis(X(1), Y(1), 1);
        assert_eq!(e.bits().count_ones(), 1);
        assert_eq!(e.get(0, 1), 1);
        for g in 1..=3 {
            for v in BasisSymbol::all(g) {
                for w in BasisSymbol::all(g) {
                    assert_eq!(m_basis(v, w, g), m_basis(w.star(), v.star(), g));
                    assert!(m_basis(v, w, g).is_valid());
                    let single = m_basis(v, w, g).bits().count_ones() == 1;
                    assert_eq!(single, v == w.star());
                }
            }
            assert_eq!(span_dimension(&m_basis_all(g)), g * (2 * g + 1));
            assert_eq!(m_basis_all(g).len(), g * (2 * g + 1));
        }
    }

    #[test]
    fn m_lift_examples() {
        let n = m_lift(X(1), X(1), 2);
        let mut expected = IntMatrix::identity(4);
        expected[(0, 0)] = BigInt::from(-1);
        expected[(1, 1)] = BigInt::from(-1);
        assert_eq!(n, expected);
        assert_eq!(m_lift(X(1), Y(1), 1), m(&[&[1, -2], &[0, 1]]));
        for g in 1..=3 {
            for v in BasisSymbol::all(g) {
                for w in BasisSymbol::all(g) {
                    let lift = m_lift(v, w, g);
                    assert!(is_symplectic(&lift), "M_{v}{w}");
                    assert_eq!(psi(&lift).unwrap(), m_basis(v, w, g), "M_{v}{w}, g={g}");
                }
            }
        }
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega(1, 1).unwrap(), IntMatrix::identity(2).neg());
        let w2 = omega(2, 2).unwrap();
        assert_eq!(w2.column(0), SympVector::basis(X(1), 4).to_bigint());
        assert_eq!(w2.column(1), SympVector::basis(Y(1), 4).to_bigint());
        for g in 1..=3 {
            for i in 1..=g {
                assert!(omega(i, g).unwrap().pow(2).is_identity());
            }
        }
        assert!(omega(0, 2).is_err());
        assert!(omega(3, 2).is_err());
    }

    #[test]
    fn ann_examples() {
        for g in 1..=2 {
            let gens = ann_generators(g);
            let y = SympVector::basis(Y(g + 1), 2 * g + 2);
            let y2: Vec<u8> = y.0.iter().map(|&x| x as u8).collect();
            for e in &gens {
                assert!(e.apply(&y2).iter().all(|&b| b == 0));
                assert!(e.is_valid());
            }
            let d = 2 * g + 2;
            assert_eq!(span_dimension(&gens), d * (d - 1) / 2);
        }
        assert_eq!(span_dimension(&ann_generators(1)), 6);
    }

    #[test]
    fn generating_set_examples() {
        let odd = generating_sets(2, Parity::Odd).unwrap();
        assert_eq!(odd.len(), 10);
        let images: Vec<SpLieElem> = odd.iter().map(psi_of_square).collect();
        assert_eq!(span_dimension(&images), 10);
        for g in 2..=4 {
            assert_eq!(generating_sets(g, Parity::Odd).unwrap().len(), g * (2 * g + 1));
        }

        let even = generating_sets(2, Parity::Even).unwrap();
        let y3 = SympVector::basis(Y(3), 6);
        assert!(even.iter().all(|v| v.pairing(&y3) == 0));
        assert_eq!(even.len(), 15);
        let images: Vec<SpLieElem> = even.iter().map(psi_of_square).collect();
        assert_eq!(span_dimension(&images), 15);

        assert!(generating_sets(1, Parity::Odd).is_err());
        assert_eq!(mumford_gens(2).len(), 10);
    }

    #[test]
    fn primitive_vector_enumeration() {
        let vs = primitive_vectors(2, 1);
        // (1,0) (0,1) (1,1) (1,-1) up to sign
        assert_eq!(vs.len(), 4);
        assert!(vs.iter().all(SympVector::is_primitive));
        assert!(!SympVector(vec![2, 4]).is_primitive());
    }
    #[test]
    fn conjugation_identities() {
        for g in 1..=3 {
            let d = 2 * g;
            for i in 1..=g {
                let x = SympVector::basis(X(i), d);
                let y = SympVector::basis(Y(i), d);
                let lhs = transvection_power(&x, 2)
                    .mul(&transvection_power(&x.add(&y), 2))
                    .mul(&transvection_power(&x, -2));
                assert_eq!(lhs, transvection_power(&x.sub(&y), 2));
            }
            for i in 1..=g {
                for j in 1..=g {
                    if i == j {
                        continue;
                    }
                    let w = omega(j, g).unwrap();
                    let (yi, yj, xi) = (
                        SympVector::basis(Y(i), d),
                        SympVector::basis(Y(j), d),
                        SympVector::basis(X(i), d),
                    );
                    // ω_j is an involution
                    let conj = |v: &SympVector| w.mul(&transvection_power(v, 2)).mul(&w);
                    assert_eq!(conj(&yi.add(&yj)), transvection_power(&yi.sub(&yj), 2));
                    assert_eq!(conj(&xi.add(&yj)), transvection_power(&xi.sub(&yj), 2));
                }
            }
        }
    }

    #[test]
    fn omega_negates_exactly_one_pair() {
        for g in 1..=3 {
            for i in 1..=g {
                let w = omega(i, g).unwrap();
                for s in BasisSymbol::all(g) {
                    let e = SympVector::basis(s, 2 * g);
                    let k = if s == X(i) || s == Y(i) { -1 } else { 1 };
                    let expected: Vec<BigInt> = e.0.iter().map(|&c| BigInt::from(c * k)).collect();
                    assert_eq!(w.mul_vec(&e.to_bigint()), expected);
                }
            }
        }
    }

    fn arb_lift_product(g: usize) -> impl Strategy<Value = IntMatrix> {
        let syms = BasisSymbol::all(g);
        prop::collection::vec((0..syms.len(), 0..syms.len()), 1..5).prop_map(move |pairs| {
            pairs
                .into_iter()
                .fold(IntMatrix::identity(2 * g), |acc, (a, b)| acc.mul(&m_lift(syms[a], syms[b], g)))
        })
    }

    proptest! {
        #[test]
        fn psi_is_additive(a in arb_lift_product(2), b in arb_lift_product(2)) {
            let lhs = psi(&a.mul(&b)).unwrap();
            prop_assert_eq!(lhs, psi(&a).unwrap().add(&psi(&b).unwrap()));
            prop_assert!(lhs.is_valid());
        }

        #[test]
        fn transvections_are_symplectic(v in prop::collection::vec(-6i64..=6, 6), k in -3i64..=3) {
            let v = SympVector(v);
            prop_assert!(is_symplectic(&transvection_power(&v, k)));
            let shifted = SympVector(v.0.iter().map(|c| c + 2).collect());
            prop_assert_eq!(psi_of_square(&v), psi_of_square(&shifted));
        }
    }
}
