//! Peano spaces: bracket, join and meet, and Hodge star operators.

use crate::error::{Error, Result};
use crate::exterior::{make_extensor, ExtMonomial, Exterior, ExteriorElement, Vector};
use crate::linalg::{self, Matrix};
use crate::ring::{Ring, Q};

/// A vector space with a chosen top-step integral E.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeanoSpace {
    dim: usize,
    integral: ExteriorElement,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MeetSide {
    Left,
    Right,
}

impl PeanoSpace {
    pub fn new(integral: ExteriorElement) -> Result<Self> {
        let n = integral.dim();
        if integral.is_zero() {
            return Err(Error::ZeroInput);
        }
        if integral.step() != Some(n) {
            return Err(Error::NotHomogeneous);
        }
        Ok(PeanoSpace { dim: n, integral })
    }

    /// E = e₁ ∧ ⋯ ∧ eₙ.
    pub fn standard(n: usize) -> Self {
        PeanoSpace {
            dim: n,
            integral: Exterior::monomial(n, ExtMonomial::top(n), Q::one()),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn integral(&self) -> &ExteriorElement {
        &self.integral
    }

    /// The scalar `s` with `x = s·E` for the top-step part of `x`; other
    /// steps contribute nothing.
    pub fn bracket_of(&self, x: &ExteriorElement) -> Q {
        let top = ExtMonomial::top(self.dim);
        x.coeff(top) / self.integral.coeff(top)
    }

    pub fn bracket(&self, xs: &[Vector]) -> Result<Q> {
        if xs.len() != self.dim {
            return Err(Error::InvalidArgument(format!(
                "bracket needs {} vectors, got {}",
                self.dim,
                xs.len()
            )));
        }
        Ok(self.bracket_of(&make_extensor(self.dim, xs)?))
    }

    fn steps(&self, a: &ExteriorElement, b: &ExteriorElement) -> Result<(usize, usize)> {
        for x in [a, b] {
            if x.dim() != self.dim {
                return Err(Error::DimensionMismatch(self.dim, x.dim()));
            }
        }
        Ok((a.homogeneous_step(0)?, b.homogeneous_step(0)?))
    }

    /// A ∧ B by either coproduct expansion.
    pub fn meet(&self, a: &ExteriorElement, b: &ExteriorElement, side: MeetSide) -> Result<ExteriorElement> {
        let n = self.dim;
        let (sa, sb) = self.steps(a, b)?;
        let mut r = Exterior::zero(n);
        if a.is_zero() || b.is_zero() || sa + sb < n {
            return Ok(r);
        }
        match side {
            MeetSide::Left => {
                for (m, c) in a.terms() {
                    for (s, blocks) in m.slices(&[n - sb, sa + sb - n]) {
                        let head = Exterior::monomial(n, blocks[0], Q::one());
                        let br = self.bracket_of(&head.wedge(b)?);
                        if !br.is_zero() {
                            r.add_term(blocks[1], (c * br).signed(s));
                        }
                    }
                }
            }
            MeetSide::Right => {
                for (m, c) in b.terms() {
                    for (s, blocks) in m.slices(&[sa + sb - n, n - sa]) {
                        let tail = Exterior::monomial(n, blocks[1], Q::one());
                        let br = self.bracket_of(&a.wedge(&tail)?);
                        if !br.is_zero() {
                            r.add_term(blocks[0], (c * br).signed(s));
                        }
                    }
                }
            }
        }
        Ok(r)
    }

    /// Σ A₍₁₎[A₍₂₎B] with A sliced as (a+b−n, n−b).
    pub fn dot_meet(&self, a: &ExteriorElement, b: &ExteriorElement) -> Result<ExteriorElement> {
        let n = self.dim;
        let (sa, sb) = self.steps(a, b)?;
        let mut r = Exterior::zero(n);
        if a.is_zero() || b.is_zero() || sa + sb < n {
            return Ok(r);
        }
        for (m, c) in a.terms() {
            for (s, blocks) in m.slices(&[sa + sb - n, n - sb]) {
                let tail = Exterior::monomial(n, blocks[1], Q::one());
                let br = self.bracket_of(&tail.wedge(b)?);
                if !br.is_zero() {
                    r.add_term(blocks[0], (c * br).signed(s));
                }
            }
        }
        Ok(r)
    }

    /// Left-nested meet of a list of elements.
    pub fn meet_all(&self, xs: &[ExteriorElement]) -> Result<ExteriorElement> {
        let (first, rest) = xs
            .split_first()
            .ok_or_else(|| Error::InvalidArgument("empty meet".into()))?;
        let mut acc = first.clone();
        for x in rest {
            acc = self.meet(&acc, x, MeetSide::Left)?;
        }
        Ok(acc)
    }
}

/// Image of an exterior element under the algebra map induced by a linear
/// map whose i-th column is the image of eᵢ.
pub fn apply_linear(m: &Matrix, a: &ExteriorElement) -> ExteriorElement {
    let n = a.dim();
    let images: Vec<ExteriorElement> = (0..n)
        .map(|i| Exterior::from_vector(&m.iter().map(|row| row[i].clone()).collect::<Vec<_>>()))
        .collect();
    let mut r = Exterior::zero(n);
    for (mono, c) in a.terms() {
        let mut img = Exterior::one(n);
        for i in mono.indices() {
            img = img.wedge(&images[i - 1]).unwrap();
        }
        r = r.add(&img.scale(c)).unwrap();
    }
    r
}

/// An ordered basis (f₁, …, fₙ) and its Hodge star.
#[derive(Clone, Debug)]
pub struct OrderedBasis {
    vectors: Vec<Vector>,
    to_standard: Matrix,
    from_standard: Matrix,
    top: ExteriorElement,
}

impl OrderedBasis {
    pub fn new(vectors: Vec<Vector>) -> Result<Self> {
        let n = vectors.len();
        if n == 0 {
            return Err(Error::InvalidArgument("empty basis".into()));
        }
        if let Some(v) = vectors.iter().find(|v| v.len() != n) {
            return Err(Error::DimensionMismatch(n, v.len()));
        }
        let to_standard = linalg::transpose(&vectors);
        let from_standard = linalg::inverse(&to_standard)
            .ok_or_else(|| Error::InvalidArgument("basis vectors are dependent".into()))?;
        let top = make_extensor(n, &vectors)?;
        Ok(OrderedBasis {
            vectors,
            to_standard,
            from_standard,
            top,
        })
    }

    pub fn standard(n: usize) -> Self {
        Self::new(linalg::identity(n)).unwrap()
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    /// F = f₁ ∧ ⋯ ∧ fₙ.
    pub fn top(&self) -> &ExteriorElement {
        &self.top
    }

    /// Canonical extensor f_I for 1-based index set I.
    pub fn canonical(&self, indices: ExtMonomial) -> ExteriorElement {
        let vs: Vec<Vector> = indices
            .indices()
            .iter()
            .map(|&i| self.vectors[i - 1].clone())
            .collect();
        make_extensor(self.dim(), &vs).unwrap()
    }

    /// The Peano space with integral E = F.
    pub fn peano(&self) -> PeanoSpace {
        PeanoSpace::new(self.top.clone()).unwrap()
    }

    pub fn hodge(&self, a: &ExteriorElement) -> Result<ExteriorElement> {
        let n = self.dim();
        if a.dim() != n {
            return Err(Error::DimensionMismatch(n, a.dim()));
        }
        let in_basis = apply_linear(&self.from_standard, a);
        let mut starred = Exterior::zero(n);
        for (m, c) in in_basis.terms() {
            let comp = m.complement(n);
            let s = m.wedge_sign(comp).unwrap();
            starred.add_term(comp, c.signed(s));
        }
        Ok(apply_linear(&self.to_standard, &starred))
    }
}
