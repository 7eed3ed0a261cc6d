//! Exact enumeration of finite matrix groups over ℤ/m for m ∈ {2, 4, 8}.
//!
//! Elements are bit-packed (1, 2 or 3 bits per entry) so that a closure of a
//! few million 6×6 matrices fits comfortably in memory.

use std::fmt;

use rayon::prelude::*;
use rustc_hash::FxHashSet;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::symplectic::Parity;

pub const MAX_DIM: usize = 8;
const WORDS: usize = 4;

/// Square matrix over ℤ/m, canonically packed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModMatrix {
    dim: u8,
    modulus: u8,
    packed: [u64; WORDS],
}

fn bits_for(modulus: u64) -> Result<u32> {
    match modulus {
        2 => Ok(1),
        4 => Ok(2),
        8 => Ok(3),
        _ => Err(Error::InvalidArgument(format!("modulus must be 2, 4 or 8, got {modulus}"))),
    }
}

impl ModMatrix {
    /// Row-major residues; anything outside [0, m) is reduced.
    pub fn from_residues(dim: usize, modulus: u64, entries: &[u64]) -> Result<Self> {
        bits_for(modulus)?;
        if dim == 0 || dim > MAX_DIM {
            return Err(Error::InvalidArgument(format!("dimension must be in 1..={MAX_DIM}, got {dim}")));
        }
        if entries.len() != dim * dim {
            return Err(Error::Mismatch(format!("{} entries for a {dim}x{dim} matrix", entries.len())));
        }
        let small: Vec<u8> = entries.iter().map(|&e| (e % modulus) as u8).collect();
        Ok(Self::pack(dim as u8, modulus as u8, &small))
    }

    /// Signed row-major entries, reduced into [0, m).
    pub fn from_signed(dim: usize, modulus: u64, entries: &[i64]) -> Result<Self> {
        let m = modulus as i64;
        let residues: Vec<u64> = entries.iter().map(|e| e.rem_euclid(m) as u64).collect();
        Self::from_residues(dim, modulus, &residues)
    }

    pub fn from_int(m: &IntMatrix, modulus: u64) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::Mismatch("matrix is not square".into()));
        }
        Self::from_residues(m.rows(), modulus, &m.reduce_mod(modulus))
    }

    pub fn identity(dim: usize, modulus: u64) -> Result<Self> {
        let mut e = vec![0u64; dim * dim];
        for i in 0..dim {
            e[i * dim + i] = 1;
        }
        Self::from_residues(dim, modulus, &e)
    }

    fn per_word(modulus: u8) -> usize {
        64 / modulus.trailing_zeros() as usize
    }

    fn pack(dim: u8, modulus: u8, entries: &[u8]) -> Self {
        let b = modulus.trailing_zeros() as usize;
        let per = Self::per_word(modulus);
        let mut packed = [0u64; WORDS];
        for (k, &e) in entries.iter().enumerate() {
            packed[k / per] |= (e as u64) << ((k % per) * b);
        }
        Self { dim, modulus, packed }
    }

    fn unpack_into(&self, out: &mut [u8; MAX_DIM * MAX_DIM]) {
        let b = self.modulus.trailing_zeros() as usize;
        let per = Self::per_word(self.modulus);
        let mask = (self.modulus - 1) as u64;
        let cells = self.dim as usize * self.dim as usize;
        for (k, o) in out.iter_mut().take(cells).enumerate() {
            *o = ((self.packed[k / per] >> ((k % per) * b)) & mask) as u8;
        }
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn modulus(&self) -> u64 {
        self.modulus as u64
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        let mut buf = [0u8; MAX_DIM * MAX_DIM];
        self.unpack_into(&mut buf);
        buf[r * self.dim() + c] as u64
    }

    pub fn entries(&self) -> Vec<u64> {
        let mut buf = [0u8; MAX_DIM * MAX_DIM];
        self.unpack_into(&mut buf);
        buf[..self.dim() * self.dim()].iter().map(|&x| x as u64).collect()
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        self.entries().chunks(self.dim()).map(<[u64]>::to_vec).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim(), self.modulus()).expect("valid shape")
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim || self.modulus != other.modulus {
            return Err(Error::Mismatch(format!(
                "{}x{} mod {} vs {}x{} mod {}",
                self.dim, self.dim, self.modulus, other.dim, other.dim, other.modulus
            )));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut a = [0u8; MAX_DIM * MAX_DIM];
        let mut b = [0u8; MAX_DIM * MAX_DIM];
        self.unpack_into(&mut a);
        other.unpack_into(&mut b);
        Ok(mul_unpacked(&a, &b, self.dim, self.modulus))
    }

    /// Over a power of two, invertible iff the determinant is odd.
    pub fn is_invertible(&self) -> bool {
        let d = self.dim();
        let mut rows: Vec<u64> = self
            .rows()
            .iter()
            .map(|r| r.iter().enumerate().fold(0u64, |acc, (c, &x)| acc | ((x & 1) << c)))
            .collect();
        for col in 0..d {
            let Some(p) = (col..d).find(|&r| rows[r] >> col & 1 == 1) else {
                return false;
            };
            rows.swap(col, p);
            for r in 0..d {
                if r != col && rows[r] >> col & 1 == 1 {
                    rows[r] ^= rows[col];
                }
            }
        }
        true
    }

    pub fn pow(&self, mut k: u64) -> Self {
        let mut acc = Self::identity(self.dim(), self.modulus()).expect("valid shape");
        let mut base = *self;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base).expect("same shape");
            }
            base = base.mul(&base).expect("same shape");
            k >>= 1;
        }
        acc
    }

    /// Multiplicative order; the matrix must be invertible.
    pub fn order(&self) -> u64 {
        let mut k = 1;
        let mut cur = *self;
        while !cur.is_identity() {
            cur = cur.mul(self).expect("same shape");
            k += 1;
        }
        k
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_invertible() {
            return Err(Error::NotInvertible { index: 0, modulus: self.modulus });
        }
        Ok(self.pow(self.order() - 1))
    }
}

fn mul_unpacked(a: &[u8; MAX_DIM * MAX_DIM], b: &[u8; MAX_DIM * MAX_DIM], dim: u8, modulus: u8) -> ModMatrix {
    let d = dim as usize;
    let mask = (modulus - 1) as u32;
    let mut out = [0u8; MAX_DIM * MAX_DIM];
    for i in 0..d {
        for j in 0..d {
            let mut s = 0u32;
            for k in 0..d {
                s += a[i * d + k] as u32 * b[k * d + j] as u32;
            }
            out[i * d + j] = (s & mask) as u8;
        }
    }
    ModMatrix::pack(dim, modulus, &out[..d * d])
}

impl Serialize for ModMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(u64::to_string).collect())
            .collect();
        rows.serialize(s)
    }
}

impl fmt::Display for ModMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.rows().iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            let s: Vec<String> = row.iter().map(u64::to_string).collect();
            write!(f, "[{}]", s.join(" "))?;
        }
        Ok(())
    }
}

/// A finite group given by generators together with its full element set.
#[derive(Debug, Clone)]
pub struct GroupClosure {
    gens: Vec<ModMatrix>,
    elements: FxHashSet<ModMatrix>,
    dim: usize,
    modulus: u64,
}

impl GroupClosure {
    pub fn generators(&self) -> &[ModMatrix] {
        &self.gens
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = &ModMatrix> {
        self.elements.iter()
    }

    /// Elements in canonical order.
    pub fn sorted_elements(&self) -> Vec<ModMatrix> {
        let mut v: Vec<ModMatrix> = self.elements.iter().copied().collect();
        v.sort_unstable();
        v
    }

    fn check(&self, m: &ModMatrix) -> Result<()> {
        if m.dim() != self.dim || m.modulus() != self.modulus {
            return Err(Error::Mismatch(format!(
                "{}x{} mod {} queried against a group of {}x{} mod {}",
                m.dim(),
                m.dim(),
                m.modulus(),
                self.dim,
                self.dim,
                self.modulus
            )));
        }
        Ok(())
    }

    pub fn contains(&self, m: &ModMatrix) -> Result<bool> {
        self.check(m)?;
        Ok(self.elements.contains(m))
    }

    pub fn is_subgroup_of(&self, other: &GroupClosure) -> Result<bool> {
        if self.dim != other.dim || self.modulus != other.modulus {
            return Err(Error::Mismatch("groups live in different matrix rings".into()));
        }
        Ok(self.order() <= other.order() && self.elements.iter().all(|e| other.elements.contains(e)))
    }

    pub fn equals(&self, other: &GroupClosure) -> Result<bool> {
        Ok(self.order() == other.order() && self.is_subgroup_of(other)?)
    }
}

/// |G| / |H|, checking that H ⊆ G.
pub fn subgroup_index(g: &GroupClosure, h: &GroupClosure) -> Result<usize> {
    if !h.is_subgroup_of(g)? {
        return Err(Error::NotContained);
    }
    debug_assert_eq!(g.order() % h.order(), 0);
    Ok(g.order() / h.order())
}

pub const DEFAULT_CLOSURE_LIMIT: usize = 1 << 23;

/// Breadth-first closure under left multiplication by the generators.
///
/// Products for a frontier are computed in parallel; new elements are
/// inserted in frontier order, so the element set and the next frontier do
/// not depend on the number of threads.
pub fn closure(gens: &[ModMatrix], limit: usize) -> Result<GroupClosure> {
    let first = gens
        .first()
        .ok_or_else(|| Error::InvalidArgument("closure needs at least one generator".into()))?;
    for (index, g) in gens.iter().enumerate() {
        first.check_compatible(g)?;
        if !g.is_invertible() {
            return Err(Error::NotInvertible { index, modulus: g.modulus });
        }
    }
    let (dim, modulus) = (first.dim, first.modulus);
    let unpacked: Vec<[u8; MAX_DIM * MAX_DIM]> = gens
        .iter()
        .map(|g| {
            let mut buf = [0u8; MAX_DIM * MAX_DIM];
            g.unpack_into(&mut buf);
            buf
        })
        .collect();

    let id = ModMatrix::identity(dim as usize, modulus as u64)?;
    let mut elements = FxHashSet::default();
    elements.insert(id);
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let candidates: Vec<ModMatrix> = frontier
            .par_iter()
            .flat_map_iter(|x| {
                let mut b = [0u8; MAX_DIM * MAX_DIM];
                x.unpack_into(&mut b);
                unpacked
                    .iter()
                    .map(move |a| mul_unpacked(a, &b, dim, modulus))
                    .collect::<Vec<_>>()
            })
            .filter(|y| !elements.contains(y))
            .collect();
        let mut next = Vec::new();
        for y in candidates {
            if elements.insert(y) {
                next.push(y);
                if elements.len() > limit {
                    return Err(Error::ClosureLimit { limit, partial: elements.len() });
                }
            }
        }
        frontier = next;
    }
    Ok(GroupClosure {
        gens: gens.to_vec(),
        elements,
        dim: dim as usize,
        modulus: modulus as u64,
    })
}

/// Runs [`closure`] on a dedicated pool of `workers` threads.
pub fn closure_with_workers(gens: &[ModMatrix], limit: usize, workers: Option<usize>) -> Result<GroupClosure> {
    match workers {
        None => closure(gens, limit),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| Error::InvalidArgument(e.to_string()))?;
            pool.install(|| closure(gens, limit))
        }
    }
}

/// Reduces integer matrices and closes them.
pub fn closure_of_int(gens: &[IntMatrix], modulus: u64, limit: usize) -> Result<GroupClosure> {
    let gens = gens
        .iter()
        .map(|g| ModMatrix::from_int(g, modulus))
        .collect::<Result<Vec<_>>>()?;
    closure(&gens, limit)
}

/// 2^{C(2g+1,2)} for odd parity and 2^{C(2g+2,2)} for even parity.
pub fn level_kernel_order(g: usize, parity: Parity) -> u128 {
    let d = match parity {
        Parity::Odd => 2 * g + 1,
        Parity::Even => 2 * g + 2,
    };
    1u128 << (d * (d - 1) / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mm(d: usize, m: u64, e: &[i64]) -> ModMatrix {
        ModMatrix::from_signed(d, m, e).unwrap()
    }

    #[test]
    fn packing_round_trips() {
        for m in [2u64, 4, 8] {
            let entries: Vec<u64> = (0..64).map(|k| (k * 7 + 3) % m).collect();
            let a = ModMatrix::from_residues(8, m, &entries).unwrap();
            assert_eq!(a.entries(), entries);
        }
        assert!(ModMatrix::from_residues(2, 3, &[1, 0, 0, 1]).is_err());
        assert!(ModMatrix::from_residues(9, 2, &[0; 81]).is_err());
        assert_eq!(mm(2, 4, &[-1, 5, 0, 1]).entries(), vec![3, 1, 0, 1]);
    }

    #[test]
    fn closure_examples() {
        let id = ModMatrix::identity(3, 4).unwrap();
        assert_eq!(closure(&[id], 10).unwrap().order(), 1);
        let swap = mm(2, 2, &[0, 1, 1, 0]);
        assert_eq!(closure(&[swap], 10).unwrap().order(), 2);
        // SL_2(Z/2) ≅ S_3
        let t = mm(2, 2, &[1, 1, 0, 1]);
        let g = closure(&[t, swap], 100).unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.contains(&ModMatrix::identity(2, 2).unwrap()).unwrap());
        assert!(g.equals(&g).unwrap());
        let h = closure(&[swap], 10).unwrap();
        assert_eq!(subgroup_index(&g, &h).unwrap(), 3);
        assert_eq!(subgroup_index(&g, &g).unwrap(), 1);
        let trivial = closure(&[ModMatrix::identity(2, 2).unwrap()], 1).unwrap();
        assert_eq!(subgroup_index(&g, &trivial).unwrap(), 6);
        assert_eq!(subgroup_index(&h, &g), Err(Error::NotContained));
    }

    #[test]
    fn closure_errors() {
        let singular = mm(2, 4, &[2, 0, 0, 1]);
        assert_eq!(
            closure(&[ModMatrix::identity(2, 4).unwrap(), singular], 10).unwrap_err(),
            Error::NotInvertible { index: 1, modulus: 4 }
        );
        let t = mm(2, 8, &[1, 1, 0, 1]);
        let s = mm(2, 8, &[0, 7, 1, 0]);
        match closure(&[t, s], 20) {
            Err(Error::ClosureLimit { limit: 20, partial }) => assert!(partial > 20),
            other => panic!("unexpected {other:?}"),
        }
        assert!(closure(&[], 10).is_err());
        let other = ModMatrix::identity(3, 4).unwrap();
        assert!(closure(&[t, other], 10).is_err());
        let g = closure(&[t], 100).unwrap();
        assert!(g.contains(&other).is_err());
    }

    #[test]
    fn sl2_orders() {
        // |SL_2(Z/2^k)| = 2^{3k-2} * 3
        let t = |m| mm(2, m, &[1, 1, 0, 1]);
        let s = |m| mm(2, m, &[0, -1, 1, 0]);
        assert_eq!(closure(&[t(4), s(4)], 1000).unwrap().order(), 48);
        assert_eq!(closure(&[t(8), s(8)], 1000).unwrap().order(), 384);
    }

    #[test]
    fn inverse_and_order() {
        let t = mm(2, 8, &[1, 1, 0, 1]);
        assert_eq!(t.order(), 8);
        assert!(t.mul(&t.inverse().unwrap()).unwrap().is_identity());
        assert!(!mm(2, 4, &[2, 0, 0, 1]).is_invertible());
    }

    #[test]
    fn workers_do_not_change_the_result() {
        let t = mm(3, 4, &[1, 1, 0, 0, 1, 0, 0, 0, 1]);
        let s = mm(3, 4, &[0, 0, 1, 1, 0, 0, 0, 1, 0]);
        let u = mm(3, 4, &[1, 0, 0, 0, 1, 0, 2, 0, 1]);
        let a = closure_with_workers(&[t, s, u], 1 << 16, Some(1)).unwrap();
        let b = closure_with_workers(&[t, s, u], 1 << 16, Some(4)).unwrap();
        assert_eq!(a.sorted_elements(), b.sorted_elements());
    }

    #[test]
    fn level_kernel_orders() {
        assert_eq!(level_kernel_order(1, Parity::Odd), 8);
        assert_eq!(level_kernel_order(2, Parity::Odd), 1024);
        assert_eq!(level_kernel_order(2, Parity::Even), 32768);
    }

    fn arb_gl(m: u64) -> impl Strategy<Value = ModMatrix> {
        prop::collection::vec(0..m, 9)
            .prop_map(move |e| ModMatrix::from_residues(3, m, &e).unwrap())
            .prop_filter("invertible", ModMatrix::is_invertible)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn multiplication_is_associative(a in arb_gl(8), b in arb_gl(8), c in arb_gl(8)) {
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        }

        #[test]
        fn order_is_invariant(a in arb_gl(2), b in arb_gl(2), c in arb_gl(2)) {
            let base = closure(&[a, b], 1 << 12).unwrap();
            prop_assert_eq!(base.order(), closure(&[b, a], 1 << 12).unwrap().order());
            prop_assert_eq!(base.order(), closure(&[a.inverse().unwrap(), b], 1 << 12).unwrap().order());
            let ci = c.inverse().unwrap();
            let conj = |x: &ModMatrix| ci.mul(x).unwrap().mul(&c).unwrap();
            prop_assert_eq!(base.order(), closure(&[conj(&a), conj(&b)], 1 << 12).unwrap().order());
            for e in base.elements() {
                prop_assert!(base.contains(&e.inverse().unwrap()).unwrap());
            }
            let h = closure(&[a], 1 << 12).unwrap();
            let idx = subgroup_index(&base, &h).unwrap();
            prop_assert_eq!(idx * h.order(), base.order());
        }
    }
}
