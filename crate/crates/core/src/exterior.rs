//! Exterior algebra over a coefficient ring with bitmask monomials.

use crate::error::{Error, Result};
use crate::ring::{Ring, Q};
use crate::tensor_power::{TensorMonomial, TensorPower};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

pub const MAX_DIM: usize = 64;

/// Strictly increasing index word, stored as a bitmask (bit k is index k+1).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ExtMonomial(u64);

impl ExtMonomial {
    pub const UNIT: ExtMonomial = ExtMonomial(0);

    pub fn from_mask(mask: u64) -> Self {
        ExtMonomial(mask)
    }

    /// Indices are 1-based; they must be strictly increasing.
    pub fn from_indices(indices: &[usize]) -> Result<Self> {
        let mut mask = 0u64;
        let mut last = 0usize;
        for &i in indices {
            if i == 0 || i > MAX_DIM {
                return Err(Error::InvalidArgument(format!("index {i} out of range")));
            }
            if i <= last {
                return Err(Error::InvalidArgument(
                    "indices must be strictly increasing".into(),
                ));
            }
            last = i;
            mask |= 1 << (i - 1);
        }
        Ok(ExtMonomial(mask))
    }

    pub fn single(i: usize) -> Self {
        assert!(i >= 1 && i <= MAX_DIM);
        ExtMonomial(1 << (i - 1))
    }

    pub fn top(n: usize) -> Self {
        ExtMonomial(low_mask(n))
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn step(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_unit(self) -> bool {
        self.0 == 0
    }

    pub fn indices(self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.step());
        let mut m = self.0;
        while m != 0 {
            let b = m.trailing_zeros() as usize;
            out.push(b + 1);
            m &= m - 1;
        }
        out
    }

    pub fn max_index(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    pub fn contains(self, other: ExtMonomial) -> bool {
        self.0 & other.0 == other.0
    }

    pub fn disjoint(self, other: ExtMonomial) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: ExtMonomial) -> ExtMonomial {
        ExtMonomial(self.0 | other.0)
    }

    pub fn minus(self, other: ExtMonomial) -> ExtMonomial {
        ExtMonomial(self.0 & !other.0)
    }

    pub fn complement(self, n: usize) -> ExtMonomial {
        ExtMonomial(low_mask(n) & !self.0)
    }

    /// Sign of `self ∧ other` relative to the sorted union, or `None` on overlap.
    pub fn wedge_sign(self, other: ExtMonomial) -> Option<i32> {
        if self.0 & other.0 != 0 {
            return None;
        }
        let mut inversions = 0u32;
        let mut b = other.0;
        while b != 0 {
            let j = b.trailing_zeros();
            // elements of self above j
            let above = if j >= 63 { 0 } else { self.0 >> (j + 1) };
            inversions += above.count_ones();
            b &= b - 1;
        }
        Some(if inversions % 2 == 0 { 1 } else { -1 })
    }

    /// All sub-monomials with exactly `k` indices, in increasing mask order.
    pub fn subsets(self, k: usize) -> Vec<ExtMonomial> {
        let mut out = Vec::new();
        if k > self.step() {
            return out;
        }
        let idx: Vec<u64> = self.indices().iter().map(|i| 1u64 << (i - 1)).collect();
        let mut choose = Vec::with_capacity(k);
        fn rec(idx: &[u64], start: usize, k: usize, acc: &mut Vec<u64>, out: &mut Vec<ExtMonomial>) {
            if acc.len() == k {
                out.push(ExtMonomial(acc.iter().fold(0, |a, b| a | b)));
                return;
            }
            for i in start..idx.len() {
                if idx.len() - i < k - acc.len() {
                    break;
                }
                acc.push(idx[i]);
                rec(idx, i + 1, k, acc, out);
                acc.pop();
            }
        }
        rec(&idx, 0, k, &mut choose, &mut out);
        out
    }

    /// Ordered set partitions into blocks of the given sizes, each with the
    /// sign `s` such that `B1 ∧ … ∧ Bk = s · self`.
    pub fn slices(self, parts: &[usize]) -> Vec<(i32, Vec<ExtMonomial>)> {
        if parts.iter().sum::<usize>() != self.step() {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut acc = Vec::with_capacity(parts.len());
        slice_rec(self, parts, 1, &mut acc, &mut out);
        out
    }
}

fn slice_rec(
    rest: ExtMonomial,
    parts: &[usize],
    sign: i32,
    acc: &mut Vec<ExtMonomial>,
    out: &mut Vec<(i32, Vec<ExtMonomial>)>,
) {
    match parts.split_first() {
        None => out.push((sign, acc.clone())),
        Some((&k, tail)) => {
            for block in rest.subsets(k) {
                let remaining = rest.minus(block);
                let s = block.wedge_sign(remaining).unwrap();
                acc.push(block);
                slice_rec(remaining, tail, sign * s, acc, out);
                acc.pop();
            }
        }
    }
}

fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Ord for ExtMonomial {
    /// Step first, then lexicographic on index words.
    fn cmp(&self, other: &Self) -> Ordering {
        self.step()
            .cmp(&other.step())
            .then_with(|| {
                // lexicographic on increasing index lists == reverse order on bit-reversed masks
                self.0.reverse_bits().cmp(&other.0.reverse_bits()).reverse()
            })
    }
}

impl PartialOrd for ExtMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ExtMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.indices())
    }
}

pub type Vector = Vec<Q>;

/// Sparse element of the exterior algebra on `dim` generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Exterior<C: Ring> {
    dim: usize,
    terms: BTreeMap<ExtMonomial, C>,
}

pub type ExteriorElement = Exterior<Q>;

impl<C: Ring> Exterior<C> {
    pub fn zero(dim: usize) -> Self {
        assert!(dim <= MAX_DIM, "dimension above {MAX_DIM}");
        Exterior {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(dim: usize) -> Self {
        Self::monomial(dim, ExtMonomial::UNIT, C::one())
    }

    pub fn scalar(dim: usize, c: C) -> Self {
        Self::monomial(dim, ExtMonomial::UNIT, c)
    }

    /// The basis vector with 1-based index `i`.
    pub fn basis(dim: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= dim);
        Self::monomial(dim, ExtMonomial::single(i), C::one())
    }

    pub fn monomial(dim: usize, mono: ExtMonomial, c: C) -> Self {
        let mut e = Self::zero(dim);
        assert!(mono.max_index() <= dim, "monomial outside ambient dimension");
        e.add_term(mono, c);
        e
    }

    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = (ExtMonomial, C)>) -> Self {
        let mut e = Self::zero(dim);
        for (m, c) in terms {
            assert!(m.max_index() <= dim, "monomial outside ambient dimension");
            e.add_term(m, c);
        }
        e
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExtMonomial, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: ExtMonomial) -> C {
        self.terms.get(&m).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, m: ExtMonomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v = v.add(&c);
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Step of a homogeneous nonzero element.
    pub fn step(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|m| m.step());
        let first = it.next()?;
        if it.all(|s| s == first) {
            Some(first)
        } else {
            None
        }
    }

    /// Step of a homogeneous element; the zero element is accepted with `default`.
    pub fn homogeneous_step(&self, default: usize) -> Result<usize> {
        if self.is_zero() {
            return Ok(default);
        }
        self.step().ok_or(Error::NotHomogeneous)
    }

    pub fn grade(&self, k: usize) -> Self {
        Self::from_terms(
            self.dim,
            self.terms
                .iter()
                .filter(|(m, _)| m.step() == k)
                .map(|(m, c)| (*m, c.clone())),
        )
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            Err(Error::DimensionMismatch(self.dim, other.dim))
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(*m, c.clone());
        }
        Ok(r)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&C::one().neg())
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.dim, self.terms.iter().map(|(m, v)| (*m, v.mul(c))))
    }

    pub fn wedge(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut r = Self::zero(self.dim);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some(s) = ma.wedge_sign(*mb) {
                    r.add_term(ma.union(*mb), ca.mul(cb).signed(s));
                }
            }
        }
        Ok(r)
    }

    /// Coproduct slice Δ_(parts) as a k-fold tensor.
    pub fn slice(&self, parts: &[usize]) -> TensorPower<C> {
        let mut t = TensorPower::zero(parts.len(), self.dim);
        for (m, c) in &self.terms {
            for (s, blocks) in m.slices(parts) {
                t.add_term(TensorMonomial::new(blocks), c.signed(s));
            }
        }
        t
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> Exterior<D> {
        Exterior::from_terms(self.dim, self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    /// Leading term in the canonical monomial order.
    pub fn first_term(&self) -> Option<(ExtMonomial, &C)> {
        self.terms.iter().next().map(|(m, c)| (*m, c))
    }
}

impl Exterior<Q> {
    pub fn from_vector(v: &[Q]) -> Self {
        Self::from_terms(
            v.len(),
            v.iter()
                .enumerate()
                .map(|(i, c)| (ExtMonomial::single(i + 1), c.clone())),
        )
    }

    /// Coordinates of a step-1 element.
    pub fn to_vector(&self) -> Result<Vector> {
        if self.terms.keys().any(|m| m.step() != 1) {
            return Err(Error::NotHomogeneous);
        }
        Ok((1..=self.dim)
            .map(|i| self.coeff(ExtMonomial::single(i)))
            .collect())
    }
}

/// Wedge of coordinate vectors; the unit when the list is empty.
pub fn make_extensor(dim: usize, vectors: &[Vector]) -> Result<ExteriorElement> {
    let mut acc = Exterior::one(dim);
    for v in vectors {
        if v.len() != dim {
            return Err(Error::DimensionMismatch(dim, v.len()));
        }
        acc = acc.wedge(&Exterior::from_vector(v))?;
    }
    Ok(acc)
}

/// Basis (in reduced echelon form) of the subspace represented by a nonzero
/// extensor, computed as the kernel of `v ↦ v ∧ a`.
pub fn extensor_span(a: &ExteriorElement) -> Result<Vec<Vector>> {
    if a.is_zero() {
        return Err(Error::ZeroInput);
    }
    let step = a.step().ok_or(Error::NotHomogeneous)?;
    let n = a.dim();
    let images: Vec<ExteriorElement> = (1..=n)
        .map(|i| Exterior::basis(n, i).wedge(a).unwrap())
        .collect();
    let mut monos: Vec<ExtMonomial> = images
        .iter()
        .flat_map(|e| e.terms().map(|(m, _)| *m))
        .collect();
    monos.sort();
    monos.dedup();
    let rows: Vec<Vec<Q>> = monos
        .iter()
        .map(|m| images.iter().map(|e| e.coeff(*m)).collect())
        .collect();
    let ker = if rows.is_empty() {
        crate::linalg::identity(n)
    } else {
        crate::linalg::kernel(&rows, n)
    };
    if ker.len() != step {
        return Err(Error::NotDecomposable);
    }
    let (basis, _) = crate::linalg::rref(&ker, n);
    Ok(basis)
}

impl<C: Ring> fmt::Display for Exterior<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("{}*{}", c, mono_name(*m)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

pub fn mono_name(m: ExtMonomial) -> String {
    if m.is_unit() {
        "1".to_string()
    } else {
        m.indices()
            .iter()
            .map(|i| format!("e{i}"))
            .collect::<Vec<_>>()
            .join("^")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::qi;

    fn e(dim: usize, i: usize) -> ExteriorElement {
        Exterior::basis(dim, i)
    }

    #[test]
    fn wedge_signs() {
        let e12 = e(3, 1).wedge(&e(3, 2)).unwrap();
        let e21 = e(3, 2).wedge(&e(3, 1)).unwrap();
        assert_eq!(e12.coeff(ExtMonomial::from_indices(&[1, 2]).unwrap()), qi(1));
        assert_eq!(e21, e12.neg());
        assert!(e12.wedge(&e(3, 1)).unwrap().is_zero());
    }

    #[test]
    fn dependent_vectors_give_zero() {
        let v = |a: i64, b: i64, c: i64| vec![qi(a), qi(b), qi(c)];
        let x = make_extensor(3, &[v(1, 1, 0), v(0, 1, 1), v(1, 0, -1)]).unwrap();
        assert!(x.is_zero());
        let y = make_extensor(3, &[v(1, 0, 0), v(1, 0, 0)]).unwrap();
        assert!(y.is_zero());
        assert!(make_extensor(3, &[vec![qi(1)]]).is_err());
    }

    #[test]
    fn slice_of_two_vectors() {
        let e12 = e(3, 1).wedge(&e(3, 2)).unwrap();
        let t = e12.slice(&[1, 1]);
        assert_eq!(t.len(), 2);
        let m1 = ExtMonomial::single(1);
        let m2 = ExtMonomial::single(2);
        assert_eq!(t.coeff(&TensorMonomial::new(vec![m1, m2])), qi(1));
        assert_eq!(t.coeff(&TensorMonomial::new(vec![m2, m1])), qi(-1));
    }

    #[test]
    fn slice_term_count_is_binomial() {
        let m = ExtMonomial::from_indices(&[1, 2, 4, 5, 6]).unwrap();
        for h in 0..=5 {
            assert_eq!(m.slices(&[5 - h, h]).len() as i64, crate::ring::binomial(5, h as u64));
        }
        assert!(m.slices(&[2, 2]).is_empty());
    }

    #[test]
    fn span_of_extensor() {
        let v = |a: i64, b: i64, c: i64| vec![qi(a), qi(b), qi(c)];
        let x = make_extensor(3, &[v(1, 1, 0), v(0, 1, 1)]).unwrap();
        let span = extensor_span(&x).unwrap();
        assert_eq!(span.len(), 2);
        for s in &span {
            assert!(Exterior::from_vector(s).wedge(&x).unwrap().is_zero());
        }
        let sum = e(4, 1).wedge(&e(4, 2)).unwrap().add(&e(4, 3).wedge(&e(4, 4)).unwrap()).unwrap();
        assert_eq!(extensor_span(&sum), Err(Error::NotDecomposable));
    }

    #[test]
    fn monomial_order_is_step_then_lex() {
        let a = ExtMonomial::from_indices(&[1, 3]).unwrap();
        let b = ExtMonomial::from_indices(&[2, 3]).unwrap();
        let c = ExtMonomial::from_indices(&[1, 2, 3]).unwrap();
        let d = ExtMonomial::from_indices(&[1, 2]).unwrap();
        assert!(d < a && a < b && b < c);
        assert!(ExtMonomial::single(4) < d);
    }
}
