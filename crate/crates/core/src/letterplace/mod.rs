//! The free skew-symmetric letterplace algebra over ℤ, place polarizations,
//! biproducts and the encoding isomorphism onto tensor powers of the free
//! skew algebra.

mod biproduct;
mod straighten;

pub(crate) use biproduct::{expand_rows, word_slices_sized};
pub use biproduct::{
    biproduct_expand, corollary_sides, is_standard, straightening_law_sides, Biproduct,
    Bitableau, BitableauElement, Row,
};
pub use straighten::{
    standard_tableaux, straighten, Content, Straightener, TermOrder, DEFAULT_BUDGET,
};

use crate::error::{Error, Result};
use crate::exterior::ExtMonomial;
use crate::ring::Ring;
use crate::tensor_power::{TensorMonomial, TensorPower};
use std::collections::BTreeMap;
use std::fmt;

/// Letters are the 52 ASCII letters, ordered a < … < z < A < … < Z.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(u8);

pub const ALPHABET_SIZE: usize = 52;

impl Letter {
    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'a'..='z' => Some(Letter(c as u8 - b'a')),
            'A'..='Z' => Some(Letter(c as u8 - b'A' + 26)),
            _ => None,
        }
    }

    pub fn from_index(i: usize) -> Letter {
        assert!(i < ALPHABET_SIZE);
        Letter(i as u8)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn to_char(self) -> char {
        if self.0 < 26 {
            (b'a' + self.0) as char
        } else {
            (b'A' + self.0 - 26) as char
        }
    }

    /// The exterior generator (1-based) this letter corresponds to.
    pub fn generator(self) -> usize {
        self.0 as usize + 1
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

pub type Word = Vec<Letter>;

pub fn word(s: &str) -> Word {
    s.chars()
        .map(|c| Letter::from_char(c).unwrap_or_else(|| panic!("not a letter: {c}")))
        .collect()
}

pub fn word_string(w: &[Letter]) -> String {
    w.iter().map(|l| l.to_char()).collect()
}

/// Letterplace variable (x|i); ordered place-major, then letter.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Var {
    pub place: u8,
    pub letter: Letter,
}

impl Var {
    pub fn new(letter: Letter, place: u8) -> Var {
        Var { place, letter }
    }
}

/// Square-free monomial with variables in canonical order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct LPMonomial(Vec<Var>);

impl LPMonomial {
    pub fn vars(&self) -> &[Var] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn max_place(&self) -> u8 {
        self.0.iter().map(|v| v.place).max().unwrap_or(0)
    }
}

/// Sign of the permutation sorting `seq` and the sorted sequence; sign 0 if
/// a variable repeats.
pub fn lp_normalize(seq: &[(Letter, u8)]) -> (i32, LPMonomial) {
    let mut vars: Vec<Var> = seq.iter().map(|&(l, p)| Var::new(l, p)).collect();
    let sign = sort_with_sign(&mut vars);
    if vars.windows(2).any(|w| w[0] == w[1]) {
        return (0, LPMonomial::default());
    }
    (sign, LPMonomial(vars))
}

/// Insertion sort returning the parity of the sorting permutation.
pub(crate) fn sort_with_sign<T: Ord>(v: &mut [T]) -> i32 {
    let mut sign = 1;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    sign
}

/// ℤ-linear combination of letterplace monomials.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LetterplaceElement {
    terms: BTreeMap<LPMonomial, i64>,
}

impl LetterplaceElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut e = Self::zero();
        e.add_term(LPMonomial::default(), 1);
        e
    }

    /// The variable (x|i).
    pub fn var(x: Letter, place: u8) -> Self {
        let mut e = Self::zero();
        e.add_term(LPMonomial(vec![Var::new(x, place)]), 1);
        e
    }

    /// Product of variables in the given order.
    pub fn product_of(seq: &[(Letter, u8)]) -> Self {
        let (s, m) = lp_normalize(seq);
        let mut e = Self::zero();
        e.add_term(m, s as i64);
        e
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LPMonomial, &i64)> {
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

    pub fn coeff(&self, m: &LPMonomial) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: LPMonomial, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v = Ring::add(v, &c);
                if *v == 0 {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), *c);
        }
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut r = Self::zero();
        for (m, v) in &self.terms {
            r.add_term(m.clone(), Ring::mul(v, &c));
        }
        r
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut r = Self::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let seq: Vec<(Letter, u8)> = ma
                    .0
                    .iter()
                    .chain(&mb.0)
                    .map(|v| (v.letter, v.place))
                    .collect();
                let (s, m) = lp_normalize(&seq);
                if s != 0 {
                    r.add_term(m, Ring::mul(ca, cb) * s as i64);
                }
            }
        }
        r
    }

    /// Highest place occurring.
    pub fn max_place(&self) -> u8 {
        self.terms.keys().map(|m| m.max_place()).max().unwrap_or(0)
    }

    /// Place polarization D_{kh}: the derivation with (x|i) ↦ δ_{hi}(x|k).
    pub fn polarize(&self, k: u8, h: u8) -> Self {
        let mut r = Self::zero();
        for (m, c) in &self.terms {
            for (pos, v) in m.0.iter().enumerate() {
                if v.place != h {
                    continue;
                }
                let seq: Vec<(Letter, u8)> = m
                    .0
                    .iter()
                    .enumerate()
                    .map(|(i, w)| (w.letter, if i == pos { k } else { w.place }))
                    .collect();
                let (s, mm) = lp_normalize(&seq);
                if s != 0 {
                    r.add_term(mm, c * s as i64);
                }
            }
        }
        r
    }

    /// Divided power D_{ji}^{(h)} = D_{ji}^h / h!: the sum over h-subsets of
    /// place-i variables moved to place j.
    pub fn polarize_divided(&self, h: usize, j: u8, i: u8) -> Result<Self> {
        if i == j {
            return Err(Error::InvalidArgument(
                "divided polarization needs distinct places".into(),
            ));
        }
        let mut r = Self::zero();
        for (m, c) in &self.terms {
            let positions: Vec<usize> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, v)| v.place == i)
                .map(|(p, _)| p)
                .collect();
            for subset in combinations(&positions, h) {
                let seq: Vec<(Letter, u8)> = m
                    .0
                    .iter()
                    .enumerate()
                    .map(|(p, w)| (w.letter, if subset.contains(&p) { j } else { w.place }))
                    .collect();
                let (s, mm) = lp_normalize(&seq);
                if s != 0 {
                    r.add_term(mm, c * s as i64);
                }
            }
        }
        Ok(r)
    }
}

pub(crate) fn combinations<T: Clone>(items: &[T], k: usize) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    let mut acc = Vec::with_capacity(k);
    fn rec<T: Clone>(items: &[T], start: usize, k: usize, acc: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if acc.len() == k {
            out.push(acc.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - acc.len() {
                break;
            }
            acc.push(items[i].clone());
            rec(items, i + 1, k, acc, out);
            acc.pop();
        }
    }
    rec(items, 0, k, &mut acc, &mut out);
    out
}

impl fmt::Display for LetterplaceElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut s = c.to_string();
                for v in &m.0 {
                    s.push_str(&format!(" ^ ({}|{})", v.letter, v.place));
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Element of the m-fold tensor power of the free skew algebra on letters.
pub type FreeTensorElement = TensorPower<i64>;

fn letter_mask(letters: impl IntoIterator<Item = Letter>) -> ExtMonomial {
    letters
        .into_iter()
        .fold(ExtMonomial::UNIT, |acc, l| acc.union(ExtMonomial::single(l.generator())))
}

pub fn mask_letters(m: ExtMonomial) -> Word {
    m.indices().iter().map(|&i| Letter::from_index(i - 1)).collect()
}

/// Φ: (x|i) ↦ 1⊗⋯⊗x⊗⋯⊗1 (x in fold i).
pub fn phi(e: &LetterplaceElement, m: usize) -> Result<FreeTensorElement> {
    if e.max_place() as usize > m {
        return Err(Error::InvalidArgument(format!(
            "place {} exceeds fold count {m}",
            e.max_place()
        )));
    }
    let mut t = TensorPower::zero(m, ALPHABET_SIZE);
    for (mono, c) in e.terms() {
        // regroup by place; canonical order is already place-major
        let mut seq: Vec<(u8, Letter)> = mono.vars().iter().map(|v| (v.place, v.letter)).collect();
        let s = sort_with_sign(&mut seq);
        let folds: Vec<ExtMonomial> = (1..=m as u8)
            .map(|p| letter_mask(seq.iter().filter(|(q, _)| *q == p).map(|(_, l)| *l)))
            .collect();
        t.add_term(TensorMonomial::new(folds), c * s as i64);
    }
    Ok(t)
}

pub fn phi_inv(t: &FreeTensorElement) -> LetterplaceElement {
    let mut e = LetterplaceElement::zero();
    for (k, c) in t.terms() {
        let seq: Vec<(Letter, u8)> = k
            .folds()
            .iter()
            .enumerate()
            .flat_map(|(i, f)| mask_letters(*f).into_iter().map(move |l| (l, i as u8 + 1)))
            .collect();
        let (s, mono) = lp_normalize(&seq);
        e.add_term(mono, c * s as i64);
    }
    e
}

/// Pure tensor of words w₁⊗⋯⊗w_m in the free tensor power (letters of each
/// word wedged in order).
pub fn free_tensor_of_words(words: &[Word]) -> FreeTensorElement {
    let m = words.len();
    let mut sign = 1i64;
    let mut folds = Vec::with_capacity(m);
    for w in words {
        let mut sorted = w.clone();
        sign *= sort_with_sign(&mut sorted) as i64;
        if sorted.windows(2).any(|p| p[0] == p[1]) {
            return TensorPower::zero(m, ALPHABET_SIZE);
        }
        folds.push(letter_mask(sorted));
    }
    TensorPower::from_terms(m, ALPHABET_SIZE, [(TensorMonomial::new(folds), sign)])
}
