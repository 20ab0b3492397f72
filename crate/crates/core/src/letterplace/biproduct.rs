//! Biproducts, products of biproducts (bitableaux) and the straightening
//! law identities.

use super::{lp_normalize, sort_with_sign, word_string, Letter, LetterplaceElement, Word};
use crate::exterior::ExtMonomial;
use crate::ring::{binomial, Ring};
use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::fmt;

/// (w | i₁^{(q₁)} ⋯ i_p^{(q_p)}) with places sorted and exponents positive.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Biproduct {
    word: Word,
    degree: Vec<(u8, u32)>,
}

pub type Row = Biproduct;

impl Biproduct {
    /// Places are symmetric, so repeated places are merged and sorted.
    pub fn new(word: Word, degree: &[(u8, u32)]) -> Biproduct {
        let mut merged: BTreeMap<u8, u32> = BTreeMap::new();
        for &(p, q) in degree {
            *merged.entry(p).or_insert(0) += q;
        }
        Biproduct {
            word,
            degree: merged.into_iter().filter(|(_, q)| *q > 0).collect(),
        }
    }

    /// From a weakly increasing (or arbitrary) list of places, one per letter.
    pub fn from_places(word: Word, places: &[u8]) -> Biproduct {
        let degree: Vec<(u8, u32)> = places.iter().map(|&p| (p, 1)).collect();
        Biproduct::new(word, &degree)
    }

    pub fn word(&self) -> &[Letter] {
        &self.word
    }

    pub fn degree(&self) -> &[(u8, u32)] {
        &self.degree
    }

    pub fn total(&self) -> usize {
        self.degree.iter().map(|(_, q)| *q as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Places with multiplicity, weakly increasing.
    pub fn place_sequence(&self) -> Vec<u8> {
        self.degree
            .iter()
            .flat_map(|&(p, q)| std::iter::repeat(p).take(q as usize))
            .collect()
    }

    /// Sorted word with the skew-symmetry sign, or `None` when the biproduct
    /// vanishes (repeated letter or degree mismatch).
    pub fn normalized(&self) -> Option<(i32, Biproduct)> {
        if self.word.len() != self.total() {
            return None;
        }
        let mut w = self.word.clone();
        let s = sort_with_sign(&mut w);
        if w.windows(2).any(|p| p[0] == p[1]) {
            return None;
        }
        Some((
            s,
            Biproduct {
                word: w,
                degree: self.degree.clone(),
            },
        ))
    }

    fn sort_key(&self) -> (Reverse<usize>, Word, Vec<u8>) {
        (Reverse(self.word.len()), self.word.clone(), self.place_sequence())
    }
}

impl PartialOrd for Biproduct {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Biproduct {
    /// Longer rows first, then by word, then by places.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for Biproduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let degree: Vec<String> = self.degree.iter().map(|(p, q)| format!("{p}:{q}")).collect();
        write!(f, "bp({}; {})", word_string(&self.word), degree.join(", "))
    }
}

/// Ordered slices of the positions of a word of length `n` into blocks of the
/// given sizes, with the sign of the concatenated block order.
pub(crate) fn position_slices(n: usize, sizes: &[usize]) -> Vec<(i32, Vec<Vec<usize>>)> {
    ExtMonomial::top(n)
        .slices(sizes)
        .into_iter()
        .map(|(s, blocks)| {
            (
                s,
                blocks
                    .into_iter()
                    .map(|b| b.indices().iter().map(|i| i - 1).collect())
                    .collect(),
            )
        })
        .collect()
}

/// All two-block slices (w₍₁₎, w₍₂₎) of a word, over every split size.
pub(crate) fn word_slices(w: &[Letter]) -> Vec<(i32, Word, Word)> {
    let n = w.len();
    let mut out = Vec::new();
    for k in 0..=n {
        for (s, blocks) in position_slices(n, &[k, n - k]) {
            let pick = |b: &Vec<usize>| b.iter().map(|&i| w[i]).collect::<Word>();
            out.push((s, pick(&blocks[0]), pick(&blocks[1])));
        }
    }
    out
}

/// Two-block slices of fixed sizes.
pub(crate) fn word_slices_sized(w: &[Letter], k1: usize, k2: usize) -> Vec<(i32, Word, Word)> {
    if k1 + k2 != w.len() {
        return Vec::new();
    }
    position_slices(w.len(), &[k1, k2])
        .into_iter()
        .map(|(s, blocks)| {
            let pick = |b: &Vec<usize>| b.iter().map(|&i| w[i]).collect::<Word>();
            (s, pick(&blocks[0]), pick(&blocks[1]))
        })
        .collect()
}

/// Laplace expansion of a biproduct.
pub fn biproduct_expand(b: &Biproduct) -> LetterplaceElement {
    let mut r = LetterplaceElement::zero();
    if b.word.len() != b.total() {
        return r;
    }
    let sizes: Vec<usize> = b.degree.iter().map(|(_, q)| *q as usize).collect();
    for (s, blocks) in position_slices(b.word.len(), &sizes) {
        let seq: Vec<(Letter, u8)> = blocks
            .iter()
            .zip(&b.degree)
            .flat_map(|(block, (place, _))| block.iter().map(move |&i| (b.word[i], *place)))
            .collect();
        let (t, m) = lp_normalize(&seq);
        if t != 0 {
            r.add_term(m, (s * t) as i64);
        }
    }
    r
}

/// Linear combination of products of biproducts, kept with canonical rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Bitableau<C: Ring = i64> {
    terms: BTreeMap<Vec<Biproduct>, C>,
}

pub type BitableauElement = Bitableau<i64>;

impl<C: Ring> Default for Bitableau<C> {
    fn default() -> Self {
        Bitableau {
            terms: BTreeMap::new(),
        }
    }
}

/// Canonical form of a row product: sign and sorted, normalized rows.
pub(crate) fn canonical_rows(rows: &[Biproduct]) -> Option<(i32, Vec<Biproduct>)> {
    let mut sign = 1;
    let mut out = Vec::with_capacity(rows.len());
    for r in rows {
        let (s, n) = r.normalized()?;
        sign *= s;
        if !n.is_empty() {
            out.push(n);
        }
    }
    // bubble sort with anticommutation signs (−1)^{pq}
    for i in 1..out.len() {
        let mut j = i;
        while j > 0 && out[j - 1] > out[j] {
            if out[j - 1].len() % 2 == 1 && out[j].len() % 2 == 1 {
                sign = -sign;
            }
            out.swap(j - 1, j);
            j -= 1;
        }
    }
    if out.windows(2).any(|w| w[0] == w[1] && w[0].len() % 2 == 1) {
        return None;
    }
    Some((sign, out))
}

impl<C: Ring> Bitableau<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rows(&[], C::one())
    }

    pub fn from_rows(rows: &[Biproduct], c: C) -> Self {
        let mut t = Self::zero();
        t.add_rows(rows, c);
        t
    }

    pub fn add_rows(&mut self, rows: &[Biproduct], c: C) {
        if let Some((s, rows)) = canonical_rows(rows) {
            self.add_canonical(rows, c.signed(s));
        }
    }

    /// Adds a term whose rows are already canonical.
    pub(crate) fn add_canonical(&mut self, rows: Vec<Biproduct>, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&rows) {
            Some(v) => {
                *v = v.add(&c);
                if v.is_zero() {
                    self.terms.remove(&rows);
                }
            }
            None => {
                self.terms.insert(rows, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Biproduct>, &C)> {
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

    pub fn coeff(&self, rows: &[Biproduct]) -> C {
        match canonical_rows(rows) {
            Some((s, r)) => self.terms.get(&r).cloned().unwrap_or_else(C::zero).signed(s),
            None => C::zero(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (rows, c) in &other.terms {
            r.add_canonical(rows.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&C::one().neg()))
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut r = Self::zero();
        for (rows, v) in &self.terms {
            r.add_canonical(rows.clone(), v.mul(c));
        }
        r
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut r = Self::zero();
        for (ra, ca) in &self.terms {
            for (rb, cb) in &other.terms {
                let rows: Vec<Biproduct> = ra.iter().chain(rb).cloned().collect();
                r.add_rows(&rows, ca.mul(cb));
            }
        }
        r
    }

    pub fn is_standard(&self) -> bool {
        self.terms.keys().all(|rows| is_standard(rows))
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> Bitableau<D> {
        let mut r = Bitableau::zero();
        for (rows, c) in &self.terms {
            r.add_canonical(rows.clone(), f(c));
        }
        r
    }
}

impl Bitableau<i64> {
    /// The element of the letterplace algebra this combination denotes.
    pub fn expand(&self) -> LetterplaceElement {
        let mut r = LetterplaceElement::zero();
        for (rows, c) in &self.terms {
            r = r.add(&expand_rows(rows).scale(*c));
        }
        r
    }
}

pub(crate) fn expand_rows(rows: &[Biproduct]) -> LetterplaceElement {
    rows.iter()
        .fold(LetterplaceElement::one(), |acc, b| acc.mul(&biproduct_expand(b)))
}

impl<C: Ring> fmt::Display for Bitableau<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(rows, c)| {
                let mut s = c.to_string();
                for r in rows {
                    s.push_str(&format!(" ^ {r}"));
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Standardness of a row product: row lengths weakly decreasing; letters
/// strictly increasing along rows and weakly increasing down columns; places
/// weakly increasing along rows and strictly increasing down columns.
pub fn is_standard(rows: &[Biproduct]) -> bool {
    for r in rows {
        if r.word.windows(2).any(|w| w[0] >= w[1]) || r.word.len() != r.total() {
            return false;
        }
    }
    rows.windows(2).all(|pair| {
        let (upper, lower) = (&pair[0], &pair[1]);
        if upper.len() < lower.len() {
            return false;
        }
        let (pu, pl) = (upper.place_sequence(), lower.place_sequence());
        (0..lower.len()).all(|t| upper.word[t] <= lower.word[t] && pu[t] < pl[t])
    })
}

fn concat(a: &[Letter], b: &[Letter]) -> Word {
    a.iter().chain(b).copied().collect()
}

fn degree_of(q: &[u32]) -> Vec<(u8, u32)> {
    q.iter().enumerate().map(|(i, &e)| (i as u8 + 1, e)).collect()
}

fn product2(w1: Word, d1: &[(u8, u32)], w2: Word, d2: &[(u8, u32)]) -> LetterplaceElement {
    biproduct_expand(&Biproduct::new(w1, d1)).mul(&biproduct_expand(&Biproduct::new(w2, d2)))
}

/// Both sides of the straightening law for words u, v, w and place degrees
/// p, q (indexed by place 1..m), fully expanded.
pub fn straightening_law_sides(
    u: &[Letter],
    v: &[Letter],
    w: &[Letter],
    p: &[u32],
    q: &[u32],
) -> (LetterplaceElement, LetterplaceElement) {
    assert_eq!(p.len(), q.len());
    let (dp, dq) = (degree_of(p), degree_of(q));
    let mut lhs = LetterplaceElement::zero();
    for (s, v1, v2) in word_slices(v) {
        lhs = lhs.add(&product2(concat(u, &v1), &dp, concat(&v2, w), &dq).scale(s as i64));
    }
    let mut rhs = LetterplaceElement::zero();
    let outer = if (u.len() * v.len()) % 2 == 0 { 1 } else { -1 };
    let mut rs: Vec<Vec<u32>> = vec![Vec::new()];
    for &qi in q {
        rs = rs
            .into_iter()
            .flat_map(|r| {
                (0..=qi).map(move |x| {
                    let mut r2 = r.clone();
                    r2.push(x);
                    r2
                })
            })
            .collect();
    }
    for (s, u1, u2) in word_slices(u) {
        let inner = if u2.len() % 2 == 0 { 1 } else { -1 };
        for r in &rs {
            let c: i64 = p
                .iter()
                .zip(r)
                .map(|(&pi, &ri)| binomial((pi + ri) as u64, ri as u64))
                .product();
            let pr: Vec<u32> = p.iter().zip(r).map(|(a, b)| a + b).collect();
            let qr: Vec<u32> = q.iter().zip(r).map(|(a, b)| a - b).collect();
            let t = product2(concat(v, &u1), &degree_of(&pr), concat(&u2, w), &degree_of(&qr));
            rhs = rhs.add(&t.scale(c * (s * outer * inner) as i64));
        }
    }
    (lhs, rhs)
}

/// Both sides of the two-place specialization of the straightening law.
pub fn corollary_sides(
    u: &[Letter],
    v: &[Letter],
    i: u8,
    j: u8,
    p: u32,
    q: u32,
) -> (LetterplaceElement, LetterplaceElement) {
    let mut lhs = LetterplaceElement::zero();
    for (s, v1, v2) in word_slices(v) {
        lhs = lhs.add(&product2(concat(u, &v1), &[(i, p)], v2, &[(j, q)]).scale(s as i64));
    }
    let outer = if (u.len() * v.len()) % 2 == 0 { 1 } else { -1 };
    let mut rhs = LetterplaceElement::zero();
    for (s, u1, u2) in word_slices(u) {
        let inner = if u2.len() % 2 == 0 { 1 } else { -1 };
        for r in 0..=q {
            let t = product2(concat(v, &u1), &[(i, p), (j, r)], u2.clone(), &[(j, q - r)]);
            rhs = rhs.add(&t.scale((s * outer * inner) as i64));
        }
    }
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::super::word;
    use super::*;

    #[test]
    fn laplace_expansion() {
        let x = Letter::from_char('x').unwrap();
        let y = Letter::from_char('y').unwrap();
        let single = biproduct_expand(&Biproduct::new(word("xy"), &[(1, 2)]));
        assert_eq!(single, LetterplaceElement::product_of(&[(x, 1), (y, 1)]));
        let mixed = biproduct_expand(&Biproduct::new(word("xy"), &[(1, 1), (2, 1)]));
        let expect = LetterplaceElement::product_of(&[(x, 1), (y, 2)])
            .sub(&LetterplaceElement::product_of(&[(y, 1), (x, 2)]));
        assert_eq!(mixed, expect);
        assert!(biproduct_expand(&Biproduct::new(word("xy"), &[(1, 1)])).is_zero());
        assert_eq!(biproduct_expand(&Biproduct::new(word(""), &[])), LetterplaceElement::one());
        assert!(biproduct_expand(&Biproduct::new(word("xx"), &[(1, 1), (2, 1)])).is_zero());
    }

    #[test]
    fn standardness() {
        let r = |w: &str, places: &[u8]| Biproduct::from_places(word(w), places);
        assert!(is_standard(&[r("xy", &[1, 2])]));
        assert!(is_standard(&[r("xy", &[1, 1]), r("xy", &[2, 2])]));
        assert!(!is_standard(&[r("xz", &[1, 1]), r("xy", &[2, 2])]));
        assert!(!is_standard(&[r("x", &[2]), r("y", &[1])]));
        assert!(is_standard(&[r("x", &[1]), r("y", &[2])]));
        assert!(!is_standard(&[r("x", &[1]), r("xy", &[1, 2])]));
    }

    #[test]
    fn canonical_rows_anticommute() {
        let a = Biproduct::from_places(word("x"), &[1]);
        let b = Biproduct::from_places(word("y"), &[2]);
        let ab = BitableauElement::from_rows(&[a.clone(), b.clone()], 1);
        let ba = BitableauElement::from_rows(&[b.clone(), a.clone()], 1);
        assert_eq!(ab, ba.scale(&-1));
        assert!(BitableauElement::from_rows(&[a.clone(), a.clone()], 1).is_zero());
        assert_eq!(ab.expand(), ba.expand().scale(-1));
    }

    #[test]
    fn small_straightening_law_instance() {
        let (l, r) = straightening_law_sides(&word("x"), &word("y"), &[], &[0, 1], &[1, 0]);
        assert_eq!(l, r);
        let (l, r) = corollary_sides(&word("a"), &word("b"), 1, 2, 1, 1);
        assert_eq!(l, r);
    }
}
