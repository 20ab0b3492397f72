//! Tensor powers of the exterior algebra with the graded product and the
//! raising/lowering geometric products.

use crate::error::{Error, Result};
use crate::exterior::{mono_name, ExtMonomial, Exterior};
use crate::ring::{Ring, Q};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct TensorMonomial(Vec<ExtMonomial>);

impl TensorMonomial {
    pub fn new(folds: Vec<ExtMonomial>) -> Self {
        TensorMonomial(folds)
    }

    pub fn unit(m: usize) -> Self {
        TensorMonomial(vec![ExtMonomial::UNIT; m])
    }

    pub fn folds(&self) -> &[ExtMonomial] {
        &self.0
    }

    pub fn fold(&self, i: usize) -> ExtMonomial {
        self.0[i - 1]
    }

    pub fn steps(&self) -> Vec<usize> {
        self.0.iter().map(|f| f.step()).collect()
    }

    pub fn total_step(&self) -> usize {
        self.0.iter().map(|f| f.step()).sum()
    }
}

/// Sparse element of the m-fold tensor power of the exterior algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorPower<C: Ring> {
    m: usize,
    dim: usize,
    terms: BTreeMap<TensorMonomial, C>,
}

pub type TensorPowerElement = TensorPower<Q>;

/// Koszul sign of multiplying monomials fold-wise: (−1)^{Σ_{i>j} a_i b_j}.
fn koszul_sign(a: &TensorMonomial, b: &TensorMonomial) -> i32 {
    let mut prefix_b = 0usize;
    let mut exp = 0usize;
    for (fa, fb) in a.0.iter().zip(&b.0) {
        exp += fa.step() * prefix_b;
        prefix_b += fb.step();
    }
    if exp % 2 == 0 {
        1
    } else {
        -1
    }
}

impl<C: Ring> TensorPower<C> {
    pub fn zero(m: usize, dim: usize) -> Self {
        TensorPower {
            m,
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(m: usize, dim: usize) -> Self {
        let mut t = Self::zero(m, dim);
        t.add_term(TensorMonomial::unit(m), C::one());
        t
    }

    pub fn from_terms(
        m: usize,
        dim: usize,
        terms: impl IntoIterator<Item = (TensorMonomial, C)>,
    ) -> Self {
        let mut t = Self::zero(m, dim);
        for (k, c) in terms {
            t.add_term(k, c);
        }
        t
    }

    /// Pure tensor `x1 ⊗ … ⊗ xm`.
    pub fn pure(folds: &[Exterior<C>]) -> Result<Self> {
        let m = folds.len();
        if m == 0 {
            return Err(Error::InvalidArgument("no folds".into()));
        }
        let dim = folds[0].dim();
        let mut acc: Vec<(Vec<ExtMonomial>, C)> = vec![(Vec::new(), C::one())];
        for f in folds {
            if f.dim() != dim {
                return Err(Error::DimensionMismatch(dim, f.dim()));
            }
            let mut next = Vec::new();
            for (k, c) in &acc {
                for (mono, fc) in f.terms() {
                    let mut k2 = k.clone();
                    k2.push(*mono);
                    next.push((k2, c.mul(fc)));
                }
            }
            acc = next;
        }
        Ok(Self::from_terms(
            m,
            dim,
            acc.into_iter().map(|(k, c)| (TensorMonomial(k), c)),
        ))
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TensorMonomial, &C)> {
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

    pub fn coeff(&self, k: &TensorMonomial) -> C {
        self.terms.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, k: TensorMonomial, c: C) {
        assert_eq!(k.0.len(), self.m, "fold count mismatch");
        if c.is_zero() {
            return;
        }
        debug_assert!(k.0.iter().all(|f| f.max_index() <= self.dim));
        match self.terms.get_mut(&k) {
            Some(v) => {
                *v = v.add(&c);
                if v.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.m != other.m {
            return Err(Error::FoldMismatch(self.m, other.m));
        }
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut r = self.clone();
        for (k, c) in &other.terms {
            r.add_term(k.clone(), c.clone());
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
        Self::from_terms(
            self.m,
            self.dim,
            self.terms.iter().map(|(k, v)| (k.clone(), v.mul(c))),
        )
    }

    pub fn graded_product(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut r = Self::zero(self.m, self.dim);
        for (ka, ca) in &self.terms {
            'outer: for (kb, cb) in &other.terms {
                let mut sign = koszul_sign(ka, kb);
                let mut folds = Vec::with_capacity(self.m);
                for (fa, fb) in ka.0.iter().zip(&kb.0) {
                    match fa.wedge_sign(*fb) {
                        Some(s) => {
                            sign *= s;
                            folds.push(fa.union(*fb));
                        }
                        None => continue 'outer,
                    }
                }
                r.add_term(TensorMonomial(folds), ca.mul(cb).signed(sign));
            }
        }
        Ok(r)
    }

    /// Geometric product ◇_{dest,src}^{(h)}: moves `h` vectors from fold
    /// `src` to fold `dest` (folds are 1-based).
    pub fn diamond(&self, h: usize, dest: usize, src: usize) -> Result<Self> {
        if dest == 0 || src == 0 || dest > self.m || src > self.m {
            return Err(Error::InvalidArgument(format!(
                "fold index out of range 1..{}",
                self.m
            )));
        }
        if dest == src {
            if h != 1 {
                return Err(Error::InvalidArgument(
                    "diagonal geometric product is defined only for h = 1".into(),
                ));
            }
            return Ok(Self::from_terms(
                self.m,
                self.dim,
                self.terms.iter().map(|(k, c)| {
                    let s = C::from_i64(k.fold(src).step() as i64);
                    (k.clone(), c.mul(&s))
                }),
            ));
        }
        if h == 0 {
            return Ok(self.clone());
        }
        let mut r = Self::zero(self.m, self.dim);
        let (lo, hi) = (src.min(dest), src.max(dest));
        for (k, c) in &self.terms {
            let a = k.fold(src);
            if h > a.step() {
                continue;
            }
            let between: usize = (lo + 1..hi).map(|i| k.fold(i).step()).sum();
            let base = if (h * between) % 2 == 0 { 1 } else { -1 };
            let parts = if src < dest {
                [a.step() - h, h]
            } else {
                [h, a.step() - h]
            };
            for (s, blocks) in a.slices(&parts) {
                let (keep, moved) = if src < dest {
                    (blocks[0], blocks[1])
                } else {
                    (blocks[1], blocks[0])
                };
                let target = k.fold(dest);
                let joined = if src < dest {
                    moved.wedge_sign(target).map(|w| (w, moved.union(target)))
                } else {
                    target.wedge_sign(moved).map(|w| (w, target.union(moved)))
                };
                if let Some((w, folded)) = joined {
                    let mut folds = k.0.clone();
                    folds[src - 1] = keep;
                    folds[dest - 1] = folded;
                    r.add_term(TensorMonomial(folds), c.signed(base * s * w));
                }
            }
        }
        Ok(r)
    }

    /// Terms whose fold steps equal `steps`.
    pub fn component(&self, steps: &[usize]) -> Self {
        Self::from_terms(
            self.m,
            self.dim,
            self.terms
                .iter()
                .filter(|(k, _)| k.steps() == steps)
                .map(|(k, c)| (k.clone(), c.clone())),
        )
    }

    /// Applies a linear map fold-wise on each monomial's folds.
    pub fn map_monomials<D: Ring>(
        &self,
        dim: usize,
        f: impl Fn(usize, ExtMonomial) -> Exterior<D>,
        lift: impl Fn(&C) -> D,
    ) -> Result<TensorPower<D>> {
        let mut r = TensorPower::zero(self.m, dim);
        for (k, c) in &self.terms {
            let folds: Vec<Exterior<D>> = k
                .0
                .iter()
                .enumerate()
                .map(|(i, mono)| f(i + 1, *mono))
                .collect();
            let t = TensorPower::pure(&folds)?.scale(&lift(c));
            r = r.add(&t)?;
        }
        Ok(r)
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> TensorPower<D> {
        TensorPower::from_terms(
            self.m,
            self.dim,
            self.terms.iter().map(|(k, c)| (k.clone(), f(c))),
        )
    }

    /// Same terms viewed in a larger ambient dimension.
    pub fn with_dim(&self, dim: usize) -> Self {
        assert!(self.terms.keys().all(|k| k.0.iter().all(|f| f.max_index() <= dim)));
        TensorPower {
            m: self.m,
            dim,
            terms: self.terms.clone(),
        }
    }
}

impl<C: Ring> fmt::Display for TensorPower<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let folds: Vec<String> = k.0.iter().map(|m| mono_name(*m)).collect();
                format!("{}*({})", c, folds.join(" # "))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Ā ⊆ B̄, decided by the vanishing of ◇₂₁⁽¹⁾(A⊗B).
pub fn contains(a: &Exterior<Q>, b: &Exterior<Q>) -> Result<bool> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroInput);
    }
    Ok(TensorPower::pure(&[a.clone(), b.clone()])?
        .diamond(1, 2, 1)?
        .is_zero())
}

/// Splits ◇₂₁⁽ᵖ⁾(A⊗B) as C⊗D with C̄ = Ā∩B̄ and D̄ = Ā+B̄, where p is the
/// common length of the intervals [Ā∩B̄, Ā] and [B̄, Ā+B̄].
pub fn meet_join_factor(
    a: &Exterior<Q>,
    b: &Exterior<Q>,
) -> Result<(Exterior<Q>, Exterior<Q>, usize)> {
    let span_a = crate::exterior::extensor_span(a)?;
    let span_b = crate::exterior::extensor_span(b)?;
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch(a.dim(), b.dim()));
    }
    let both: Vec<Vec<Q>> = span_a.iter().chain(&span_b).cloned().collect();
    let p = crate::linalg::rank(&both) - span_b.len();
    let t = TensorPower::pure(&[a.clone(), b.clone()])?.diamond(p, 2, 1)?;
    let (c, d) = rank_one_factors(&t)?;
    let (c_step, d_step) = (c.step().unwrap(), d.step().unwrap());
    let certified = c_step + p == span_a.len()
        && d_step == span_b.len() + p
        && contains(&c, a)?
        && contains(&c, b)?
        && contains(a, &d)?
        && contains(b, &d)?;
    if !certified {
        return Err(Error::NotProportional);
    }
    Ok((c, d, p))
}

/// Factors a rank-one 2-fold tensor as C⊗D with the first nonzero
/// coefficient of C equal to 1.
pub fn rank_one_factors(t: &TensorPower<Q>) -> Result<(Exterior<Q>, Exterior<Q>)> {
    if t.m() != 2 {
        return Err(Error::FoldMismatch(2, t.m()));
    }
    let (k0, _) = t.terms().next().ok_or(Error::ZeroInput)?;
    let (l0, r0) = (k0.fold(1), k0.fold(2));
    let n = t.dim();
    let c = Exterior::from_terms(
        n,
        t.terms()
            .filter(|(k, _)| k.fold(2) == r0)
            .map(|(k, v)| (k.fold(1), v.clone())),
    );
    let lead = c.coeff(l0);
    let c = c.scale(&lead.recip());
    let d = Exterior::from_terms(
        n,
        t.terms()
            .filter(|(k, _)| k.fold(1) == l0)
            .map(|(k, v)| (k.fold(2), v.clone())),
    );
    if &TensorPower::pure(&[c.clone(), d.clone()])? != t {
        return Err(Error::NotProportional);
    }
    Ok((c, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::ExteriorElement;
    use crate::ring::qi;

    fn e(i: usize) -> ExteriorElement {
        Exterior::basis(3, i)
    }

    #[test]
    fn two_fold_product_sign() {
        let s = TensorPower::pure(&[e(1), e(2)]).unwrap();
        let t = TensorPower::pure(&[e(2), e(3)]).unwrap();
        let p = s.graded_product(&t).unwrap();
        let e12 = e(1).wedge(&e(2)).unwrap();
        let e23 = e(2).wedge(&e(3)).unwrap();
        assert_eq!(p, TensorPower::pure(&[e12, e23]).unwrap().neg());
    }

    #[test]
    fn unit_is_neutral() {
        let t = TensorPower::pure(&[e(1), e(2).wedge(&e(3)).unwrap()]).unwrap();
        let u = TensorPower::unit(2, 3);
        assert_eq!(u.graded_product(&t).unwrap(), t);
        assert_eq!(t.graded_product(&u).unwrap(), t);
    }

    #[test]
    fn diamond_moves_vectors() {
        let a = e(1).wedge(&e(2)).unwrap();
        let t = TensorPower::pure(&[a.clone(), e(3)]).unwrap();
        let r = t.diamond(1, 2, 1).unwrap();
        let expect = TensorPower::pure(&[e(1), e(2).wedge(&e(3)).unwrap()])
            .unwrap()
            .sub(&TensorPower::pure(&[e(2), e(1).wedge(&e(3)).unwrap()]).unwrap())
            .unwrap();
        assert_eq!(r, expect);
        assert!(t.diamond(3, 2, 1).unwrap().is_zero());
        assert_eq!(t.diamond(0, 2, 1).unwrap(), t);
        assert_eq!(t.diamond(1, 1, 1).unwrap(), t.scale(&qi(2)));
        assert!(t.diamond(2, 1, 1).is_err());
    }

    #[test]
    fn inclusion_via_diamond() {
        let e12 = e(1).wedge(&e(2)).unwrap();
        let e23 = e(2).wedge(&e(3)).unwrap();
        assert!(contains(&e(1), &e12).unwrap());
        assert!(!contains(&e12, &e23).unwrap());
        assert!(contains(&e12, &e12).unwrap());
        assert!(contains(&Exterior::zero(3), &e12).is_err());
    }

    #[test]
    fn factor_of_two_planes() {
        let e12 = e(1).wedge(&e(2)).unwrap();
        let e23 = e(2).wedge(&e(3)).unwrap();
        let (c, d, p) = meet_join_factor(&e12, &e23).unwrap();
        assert_eq!(p, 1);
        assert_eq!(c, e(2));
        assert_eq!(d.step(), Some(3));
        let (c, d, p) = meet_join_factor(&e(1), &e12).unwrap();
        assert_eq!((c, d, p), (e(1), e12, 0));
    }

    #[test]
    fn lowering_product() {
        // ◇_{12}^{(1)}(1 ⊗ e1e2) = e1 ⊗ e2 − e2 ⊗ e1
        let t = TensorPower::pure(&[Exterior::one(3), e(1).wedge(&e(2)).unwrap()]).unwrap();
        let r = t.diamond(1, 1, 2).unwrap();
        let expect = TensorPower::pure(&[e(1), e(2)])
            .unwrap()
            .sub(&TensorPower::pure(&[e(2), e(1)]).unwrap())
            .unwrap();
        assert_eq!(r, expect);
    }
}
