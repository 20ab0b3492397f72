//! Left and right spans of 2-fold tensors, minimal representations, the
//! canonical pairing and generalized Hodge operators.

use crate::error::{Error, Result};
use crate::exterior::{extensor_span, make_extensor, ExtMonomial, Exterior, ExteriorElement, Vector};
use crate::linalg;
use crate::ring::{Ring, Q};
use crate::tensor_power::{TensorMonomial, TensorPower, TensorPowerElement};
use std::collections::BTreeSet;

/// Independent representation Σ leftᵢ ⊗ rightᵢ of a 2-fold tensor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalRepresentation {
    dim: usize,
    pairs: Vec<(ExteriorElement, ExteriorElement)>,
}

fn monomials_of<'a>(xs: impl IntoIterator<Item = &'a ExteriorElement>) -> Vec<ExtMonomial> {
    let set: BTreeSet<ExtMonomial> = xs
        .into_iter()
        .flat_map(|x| x.terms().map(|(m, _)| *m).collect::<Vec<_>>())
        .collect();
    set.into_iter().collect()
}

fn coords(x: &ExteriorElement, monos: &[ExtMonomial]) -> Vec<Q> {
    monos.iter().map(|m| x.coeff(*m)).collect()
}

/// Coordinates of `x` in the (independent) list `basis`.
pub fn coords_in(basis: &[ExteriorElement], x: &ExteriorElement) -> Option<Vec<Q>> {
    let monos = monomials_of(basis.iter().chain(std::iter::once(x)));
    let rows: Vec<Vec<Q>> = basis.iter().map(|b| coords(b, &monos)).collect();
    linalg::coords_in_span(&rows, &coords(x, &monos))
}

/// Dimension of the span of a list of elements.
pub fn span_rank(xs: &[ExteriorElement]) -> usize {
    let monos = monomials_of(xs);
    let rows: Vec<Vec<Q>> = xs.iter().map(|x| coords(x, &monos)).collect();
    linalg::rank(&rows)
}

impl MinimalRepresentation {
    pub fn from_pairs(dim: usize, pairs: Vec<(ExteriorElement, ExteriorElement)>) -> Result<Self> {
        let rep = MinimalRepresentation { dim, pairs };
        let r = rep.pairs.len();
        if span_rank(&rep.lefts()) != r || span_rank(&rep.rights()) != r {
            return Err(Error::InvalidArgument("representation is not independent".into()));
        }
        Ok(rep)
    }

    pub fn pairs(&self) -> &[(ExteriorElement, ExteriorElement)] {
        &self.pairs
    }

    pub fn rank(&self) -> usize {
        self.pairs.len()
    }

    pub fn lefts(&self) -> Vec<ExteriorElement> {
        self.pairs.iter().map(|(l, _)| l.clone()).collect()
    }

    pub fn rights(&self) -> Vec<ExteriorElement> {
        self.pairs.iter().map(|(_, r)| r.clone()).collect()
    }

    pub fn tensor(&self) -> TensorPowerElement {
        let mut t = TensorPower::zero(2, self.dim);
        for (l, r) in &self.pairs {
            t = t.add(&TensorPower::pure(&[l.clone(), r.clone()]).unwrap()).unwrap();
        }
        t
    }

    /// β from coordinates: β(leftᵢ, rightⱼ) = δᵢⱼ.
    pub fn pairing(&self, x: &ExteriorElement, y: &ExteriorElement) -> Result<Q> {
        let cx = coords_in(&self.lefts(), x).ok_or(Error::NotInSpan("left"))?;
        let cy = coords_in(&self.rights(), y).ok_or(Error::NotInSpan("right"))?;
        Ok(cx.iter().zip(&cy).fold(Q::zero(), |acc, (a, b)| acc + a * b))
    }

    /// The linear map leftᵢ ↦ rightᵢ applied to an element of the left span.
    pub fn apply(&self, x: &ExteriorElement) -> Result<ExteriorElement> {
        let cx = coords_in(&self.lefts(), x).ok_or(Error::NotInSpan("left"))?;
        let mut r = Exterior::zero(self.dim);
        for (c, (_, right)) in cx.iter().zip(&self.pairs) {
            r = r.add(&right.scale(c))?;
        }
        Ok(r)
    }
}

/// Rank factorization of the coefficient matrix: lefts are the pivot columns,
/// rights the nonzero rows of the reduced echelon form.
pub fn minimal_representation(t: &TensorPowerElement) -> Result<MinimalRepresentation> {
    if t.m() != 2 {
        return Err(Error::FoldMismatch(2, t.m()));
    }
    let n = t.dim();
    let lefts: Vec<ExtMonomial> = t
        .terms()
        .map(|(k, _)| k.fold(1))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let rights: Vec<ExtMonomial> = t
        .terms()
        .map(|(k, _)| k.fold(2))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let matrix: Vec<Vec<Q>> = lefts
        .iter()
        .map(|l| {
            rights
                .iter()
                .map(|r| t.coeff(&TensorMonomial::new(vec![*l, *r])))
                .collect()
        })
        .collect();
    let (echelon, pivots) = linalg::rref(&matrix, rights.len());
    let pairs = pivots
        .iter()
        .zip(&echelon)
        .map(|(&pc, row)| {
            let left = Exterior::from_terms(
                n,
                lefts.iter().zip(&matrix).map(|(l, mrow)| (*l, mrow[pc].clone())),
            );
            let right = Exterior::from_terms(n, rights.iter().zip(row).map(|(r, c)| (*r, c.clone())));
            (left, right)
        })
        .collect();
    Ok(MinimalRepresentation { dim: n, pairs })
}

pub fn left_span(t: &TensorPowerElement) -> Result<Vec<ExteriorElement>> {
    Ok(minimal_representation(t)?.lefts())
}

pub fn right_span(t: &TensorPowerElement) -> Result<Vec<ExteriorElement>> {
    Ok(minimal_representation(t)?.rights())
}

/// Σ_h ◇₂₁⁽ʰ⁾(A⊗B).
pub fn geometric_sum(a: &ExteriorElement, b: &ExteriorElement) -> Result<TensorPowerElement> {
    let base = TensorPower::pure(&[a.clone(), b.clone()])?;
    let mut t = TensorPower::zero(2, a.dim());
    for h in 0..=a.dim() {
        t = t.add(&base.diamond(h, 2, 1)?)?;
    }
    Ok(t)
}

/// β(X, Y) read off from ◇₂₁⁽ᵏ⁾(X⊗Y) = β(X,Y) C⊗D, where `t` is a sum of
/// geometric products of two extensors and `c` spans their intersection.
pub fn pairing_beta(
    t: &TensorPowerElement,
    x: &ExteriorElement,
    y: &ExteriorElement,
    c: &ExteriorElement,
) -> Result<Q> {
    let rep = minimal_representation(t)?;
    coords_in(&rep.lefts(), x).ok_or(Error::NotInSpan("left"))?;
    coords_in(&rep.rights(), y).ok_or(Error::NotInSpan("right"))?;
    let c_step = c.step().ok_or(Error::NotHomogeneous)?;
    let d = cofactor(t, c)?;
    let d_step = d.step().ok_or(Error::NotHomogeneous)?;
    let (x_step, y_step) = (x.homogeneous_step(0)?, y.homogeneous_step(0)?);
    if x.is_zero() || y.is_zero() || x_step + y_step != c_step + d_step {
        return Ok(Q::zero());
    }
    if x_step < c_step {
        return Err(Error::NotInSpan("left"));
    }
    let k = x_step - c_step;
    let prod = TensorPower::pure(&[x.clone(), y.clone()])?.diamond(k, 2, 1)?;
    let reference = TensorPower::pure(&[c.clone(), d])?;
    proportion(&prod, &reference)
}

/// D with C⊗D equal to the component of `t` whose left step is step(C).
fn cofactor(t: &TensorPowerElement, c: &ExteriorElement) -> Result<ExteriorElement> {
    let c_step = c.step().ok_or(Error::NotHomogeneous)?;
    let (l0, c0) = c.first_term().ok_or(Error::ZeroInput)?;
    let part = TensorPower::from_terms(
        2,
        t.dim(),
        t.terms()
            .filter(|(k, _)| k.fold(1).step() == c_step)
            .map(|(k, v)| (k.clone(), v.clone())),
    );
    let inv = c0.recip();
    let d = Exterior::from_terms(
        t.dim(),
        part.terms()
            .filter(|(k, _)| k.fold(1) == l0)
            .map(|(k, v)| (k.fold(2), v * &inv)),
    );
    if d.is_zero() || TensorPower::pure(&[c.clone(), d.clone()])? != part {
        return Err(Error::NotProportional);
    }
    Ok(d)
}

/// λ with `x = λ·reference`.
pub fn proportion(x: &TensorPowerElement, reference: &TensorPowerElement) -> Result<Q> {
    let (k0, r0) = reference.terms().next().ok_or(Error::ZeroInput)?;
    let lambda = x.coeff(k0) / r0;
    if &reference.scale(&lambda) != x {
        return Err(Error::NotProportional);
    }
    Ok(lambda)
}

/// Split of an extensor A as C∧A′ with C̄ = Ā∩B̄; returns C and the factor
/// vectors of A′.
pub fn intersection_split(
    a: &ExteriorElement,
    b: &ExteriorElement,
) -> Result<(ExteriorElement, Vec<Vector>)> {
    let n = a.dim();
    let span_a = extensor_span(a)?;
    let span_b = extensor_span(b)?;
    // Ā∩B̄ from the kernel of [span_a | −span_b]
    let cols: Vec<Vec<Q>> = span_a
        .iter()
        .cloned()
        .chain(span_b.iter().map(|v| v.iter().map(|x| -x.clone()).collect()))
        .collect();
    let rows = linalg::transpose(&cols);
    let ker = linalg::kernel(&rows, cols.len());
    let meet_vectors: Vec<Vector> = ker
        .iter()
        .map(|k| {
            (0..n)
                .map(|i| {
                    span_a
                        .iter()
                        .zip(k)
                        .fold(Q::zero(), |acc, (v, c)| acc + &v[i] * c)
                })
                .collect()
        })
        .collect();
    let (meet_basis, _) = linalg::rref(&meet_vectors, n);
    // complete to a basis of Ā
    let mut extra: Vec<Vector> = Vec::new();
    let mut current = meet_basis.clone();
    for v in &span_a {
        let mut trial = current.clone();
        trial.push(v.clone());
        if linalg::rank(&trial) > current.len() {
            current = trial;
            extra.push(v.clone());
        }
    }
    let c = make_extensor(n, &meet_basis)?;
    let prod = c.wedge(&make_extensor(n, &extra)?)?;
    let (m0, v0) = prod.first_term().ok_or(Error::NotDecomposable)?;
    let lambda = a.coeff(m0) / v0;
    if extra.is_empty() {
        return Ok((c.scale(&lambda), extra));
    }
    extra[0] = extra[0].iter().map(|x| x * &lambda).collect();
    Ok((c, extra))
}

/// The representation Σ_I ε_I C a_I ⊗ a_{I′} B of Σ_h ◇₂₁⁽ʰ⁾(A⊗B) built
/// from increasing subwords of the factor word of A′, with C.
pub fn dagger_representation(
    a: &ExteriorElement,
    b: &ExteriorElement,
) -> Result<(MinimalRepresentation, ExteriorElement)> {
    let (c, factors) = intersection_split(a, b)?;
    Ok((dagger_representation_of(&c, &factors, b)?, c))
}

/// The same representation for an explicit split A = C a₁⋯a_p.
pub fn dagger_representation_of(
    c: &ExteriorElement,
    factors: &[Vector],
    b: &ExteriorElement,
) -> Result<MinimalRepresentation> {
    let n = c.dim();
    let p = factors.len();
    let word = ExtMonomial::top(p);
    let mut subsets: Vec<ExtMonomial> = (0..=p).flat_map(|k| word.subsets(k)).collect();
    subsets.sort_by_key(|s| s.indices());
    let pick = |s: ExtMonomial| -> Vec<Vector> {
        s.indices().iter().map(|&i| factors[i - 1].clone()).collect()
    };
    let mut pairs = Vec::with_capacity(subsets.len());
    for s in subsets {
        let rest = word.minus(s);
        let eps = s.wedge_sign(rest).unwrap();
        let left = c.wedge(&make_extensor(n, &pick(s))?)?;
        let right = make_extensor(n, &pick(rest))?.wedge(b)?.signed_by(eps);
        pairs.push((left, right));
    }
    MinimalRepresentation::from_pairs(n, pairs)
}

/// The generalized Hodge operator leftᵢ ↦ rightᵢ of a representation.
pub fn generalized_hodge(
    rep: &MinimalRepresentation,
) -> impl Fn(&ExteriorElement) -> Result<ExteriorElement> + '_ {
    move |x| rep.apply(x)
}

trait SignedBy {
    fn signed_by(self, s: i32) -> Self;
}

impl SignedBy for ExteriorElement {
    fn signed_by(self, s: i32) -> Self {
        if s < 0 {
            self.neg()
        } else {
            self
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::qi;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| qi(x)).collect()
    }

    #[test]
    fn decomposable_tensor_has_rank_one() {
        let a = make_extensor(3, &[v(&[1, 2, 0]), v(&[0, 1, 1])]).unwrap();
        let b = make_extensor(3, &[v(&[3, 0, 1])]).unwrap();
        let t = TensorPower::pure(&[a.clone(), b.clone()]).unwrap();
        let rep = minimal_representation(&t).unwrap();
        assert_eq!(rep.rank(), 1);
        assert_eq!(rep.tensor(), t);
        assert_eq!(rep.pairing(&rep.lefts()[0], &rep.rights()[0]).unwrap(), qi(1));
        assert_eq!(minimal_representation(&TensorPower::zero(2, 3)).unwrap().rank(), 0);
    }

    #[test]
    fn dagger_representation_reconstructs_geometric_sum() {
        let a = make_extensor(4, &[v(&[1, 0, 0, 0]), v(&[0, 1, 0, 0]), v(&[0, 0, 1, 1])]).unwrap();
        let b = make_extensor(4, &[v(&[1, 1, 0, 0]), v(&[0, 0, 0, 1])]).unwrap();
        let (rep, c) = dagger_representation(&a, &b).unwrap();
        assert_eq!(rep.tensor(), geometric_sum(&a, &b).unwrap());
        assert_eq!(c.step(), Some(1));
        assert_eq!(rep.rank(), 4);
    }
}
