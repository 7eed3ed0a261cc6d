//! Exact matrices: arbitrary-precision integer matrices, matrices of
//! Laurent polynomials, and the bits of rational linear algebra needed to
//! find invariant forms and integral bases.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Copy>(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            data: rows.iter().flat_map(|row| row.iter().map(|&x| x.into())).collect(),
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<BigInt>]) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), r, "ragged columns");
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * k).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&BigInt::from(-1))
    }

    pub fn pow(&self, k: u32) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Entrywise congruence to the identity.
    pub fn is_identity_mod(&self, m: u64) -> bool {
        let m = BigInt::from(m);
        (0..self.rows).all(|i| {
            (0..self.cols).all(|j| {
                let target = if i == j { BigInt::one() } else { BigInt::zero() };
                (&self[(i, j)] - target).is_multiple_of(&m)
            })
        })
    }

    /// Entries reduced into 0..m, row-major.
    pub fn reduce_mod(&self, m: u64) -> Vec<u64> {
        let mb = BigInt::from(m);
        self.data
            .iter()
            .map(|x| {
                let r = x.mod_floor(&mb);
                u64::try_from(r).expect("residue fits in u64")
            })
            .collect()
    }

    pub fn max_abs_entry(&self) -> BigInt {
        self.data.iter().map(|x| x.abs()).max().unwrap_or_default()
    }

    /// Submatrix of the leading `k` rows and columns.
    pub fn leading_block(&self, k: usize) -> Self {
        let mut out = Self::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Fraction-free (Bareiss) determinant.
    pub fn determinant(&self) -> BigInt {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    /// Exact inverse of a matrix with determinant ±1.
    pub fn inverse_unimodular(&self) -> Result<Self> {
        let inv = RationalMatrix::from_int(self).inverse()?;
        inv.to_int()
            .ok_or_else(|| Error::InvalidArgument("matrix is not unimodular".into()))
    }

    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.to_string()).collect())
            .collect()
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

/// Row-major arrays of decimal strings.
impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.rows))?;
        for row in self.to_string_rows() {
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.to_string_rows();
        let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
        for (k, row) in rows.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x:>width$}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

/// Square matrix over ℤ[t, t⁻¹].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentMatrix {
    n: usize,
    data: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![LaurentPoly::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = LaurentPoly::one();
        }
        Self { n, data }
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Self {
            n,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.data[i * self.n + j]
    }

    pub(crate) fn get_mut(&mut self, i: usize, j: usize) -> &mut LaurentPoly {
        &mut self.data[i * self.n + j]
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut data = vec![LaurentPoly::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = LaurentPoly::zero();
                for k in 0..n {
                    let a = self.get(i, k);
                    let b = other.get(k, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                data[i * n + j] = acc;
            }
        }
        Self { n, data }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    pub fn eval_minus_one(&self) -> IntMatrix {
        IntMatrix {
            rows: self.n,
            cols: self.n,
            data: self.data.iter().map(LaurentPoly::eval_minus_one).collect(),
        }
    }

    /// Leibniz expansion; only meant for the small sizes used in checks.
    pub fn determinant(&self) -> LaurentPoly {
        fn go(m: &LaurentMatrix, rows: &[usize], cols: &mut Vec<usize>) -> LaurentPoly {
            let Some((&r, rest)) = rows.split_first() else {
                return LaurentPoly::one();
            };
            let mut acc = LaurentPoly::zero();
            for idx in 0..cols.len() {
                let c = cols.remove(idx);
                let entry = m.get(r, c);
                if !entry.is_zero() {
                    let minor = go(m, rest, cols);
                    let term = entry * &minor;
                    acc = if idx % 2 == 0 { &acc + &term } else { &acc - &term };
                }
                cols.insert(idx, c);
            }
            acc
        }
        let rows: Vec<usize> = (0..self.n).collect();
        let mut cols = rows.clone();
        go(self, &rows, &mut cols)
    }
}

impl fmt::Display for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            if i > 0 {
                writeln!(f)?;
            }
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Dense rational matrix used for exact solves.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn from_int(m: &IntMatrix) -> Self {
        Self {
            rows: m.rows,
            cols: m.cols,
            data: m.data.iter().map(|x| BigRational::from_integer(x.clone())).collect(),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    /// Reduced row echelon form in place; returns pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = self.get(r, c).recip();
            for j in 0..self.cols {
                let v = self.get(r, j) * &inv;
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i != r && !self.get(i, c).is_zero() {
                    let f = self.get(i, c).clone();
                    for j in 0..self.cols {
                        let v = self.get(i, j) - &f * self.get(r, j);
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the right kernel {v : A v = 0}.
    pub fn nullspace(&self) -> Vec<Vec<BigRational>> {
        let mut a = self.clone();
        let pivots = a.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![BigRational::zero(); self.cols];
                v[f] = BigRational::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -a.get(r, f).clone();
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::Mismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, BigRational::one());
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::InvalidArgument("matrix is singular".into()));
        }
        let mut out = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Ok(out)
    }

    pub fn to_int(&self) -> Option<IntMatrix> {
        let data = self
            .data
            .iter()
            .map(|x| x.is_integer().then(|| x.to_integer()))
            .collect::<Option<Vec<_>>>()?;
        Some(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }
}

/// Clears denominators and divides out the content, leaving a primitive
/// integer vector whose first nonzero entry is positive.
pub fn primitive_integer_vector(v: &[BigRational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() {
        for x in ints.iter_mut() {
            *x /= &g;
        }
    }
    if ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        for x in ints.iter_mut() {
            *x = -&*x;
        }
    }
    ints
}

/// Integral kernel basis of a primitive row vector `phi`: `n - 1` integer
/// vectors that, together with any `u` satisfying `phi·u = ±1`, form a basis
/// of ℤⁿ. Built from unimodular column operations that reduce `phi` to a
/// single entry.
pub fn kernel_basis_of_covector(phi: &[BigInt]) -> Result<Vec<Vec<BigInt>>> {
    let n = phi.len();
    let mut row = phi.to_vec();
    let mut cols: Vec<Vec<BigInt>> = (0..n)
        .map(|j| (0..n).map(|i| BigInt::from(u8::from(i == j))).collect())
        .collect();
    loop {
        let nonzero: Vec<usize> = (0..n).filter(|&j| !row[j].is_zero()).collect();
        let Some(&pivot) = nonzero.iter().min_by_key(|&&j| row[j].abs()) else {
            return Err(Error::InvalidArgument("zero covector".into()));
        };
        if nonzero.len() == 1 {
            if !row[pivot].abs().is_one() {
                return Err(Error::InvalidArgument("covector is not primitive".into()));
            }
            return Ok((0..n).filter(|&j| j != pivot).map(|j| cols[j].clone()).collect());
        }
        for &j in &nonzero {
            if j == pivot {
                continue;
            }
            let q = row[j].div_floor(&row[pivot]);
            row[j] = &row[j] - &q * &row[pivot];
            let pc = cols[pivot].clone();
            for (x, p) in cols[j].iter_mut().zip(&pc) {
                *x -= &q * p;
            }
        }
    }
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `aᵀ G b`
pub fn bilinear(g: &IntMatrix, a: &[BigInt], b: &[BigInt]) -> BigInt {
    dot(a, &g.mul_vec(b))
}
