//! Standard bitableaux and straightening by triangular reduction in each
//! multihomogeneous component.

use super::biproduct::{expand_rows, Biproduct, BitableauElement};
use super::{LPMonomial, Letter, LetterplaceElement};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseVec};
use crate::ring::{q_to_i64, qi};
use std::collections::{BTreeMap, HashMap};

pub const DEFAULT_BUDGET: u64 = 1_000_000;
const COMPONENT_LIMIT: usize = 50_000;

/// Monomial order used to pick pivots; the straightened result does not
/// depend on it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Hash)]
pub enum TermOrder {
    #[default]
    PlaceLex,
    LetterLex,
    ReverseLex,
}

impl TermOrder {
    pub const ALL: [TermOrder; 3] = [TermOrder::PlaceLex, TermOrder::LetterLex, TermOrder::ReverseLex];

    pub(crate) fn key(self, m: &LPMonomial) -> Vec<(u8, u8)> {
        let mut k: Vec<(u8, u8)> = match self {
            TermOrder::PlaceLex => m.vars().iter().map(|v| (v.place, v.letter.0)).collect(),
            TermOrder::LetterLex => m.vars().iter().map(|v| (v.letter.0, v.place)).collect(),
            TermOrder::ReverseLex => m
                .vars()
                .iter()
                .map(|v| (u8::MAX - v.place, u8::MAX - v.letter.0))
                .collect(),
        };
        k.sort();
        k
    }
}

/// Letter and place content of a multihomogeneous component.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Content {
    pub letters: Vec<(Letter, u32)>,
    pub places: Vec<(u8, u32)>,
}

impl Content {
    pub fn of_monomial(m: &LPMonomial) -> Content {
        let mut letters: BTreeMap<Letter, u32> = BTreeMap::new();
        let mut places: BTreeMap<u8, u32> = BTreeMap::new();
        for v in m.vars() {
            *letters.entry(v.letter).or_insert(0) += 1;
            *places.entry(v.place).or_insert(0) += 1;
        }
        Content {
            letters: letters.into_iter().collect(),
            places: places.into_iter().collect(),
        }
    }

    pub fn of_rows(rows: &[Biproduct]) -> Content {
        let mut letters: BTreeMap<Letter, u32> = BTreeMap::new();
        let mut places: BTreeMap<u8, u32> = BTreeMap::new();
        for r in rows {
            for l in r.word() {
                *letters.entry(*l).or_insert(0) += 1;
            }
            for &(p, q) in r.degree() {
                *places.entry(p).or_insert(0) += q;
            }
        }
        Content {
            letters: letters.into_iter().collect(),
            places: places.into_iter().collect(),
        }
    }

    pub fn degree(&self) -> u32 {
        self.letters.iter().map(|(_, c)| c).sum()
    }

    /// Removes `other` from this content; `None` if it does not fit.
    pub fn minus(&self, other: &Content) -> Option<Content> {
        fn sub<K: Ord + Copy>(a: &[(K, u32)], b: &[(K, u32)]) -> Option<Vec<(K, u32)>> {
            let mut m: BTreeMap<K, u32> = a.iter().copied().collect();
            for &(k, c) in b {
                let e = m.get_mut(&k)?;
                *e = e.checked_sub(c)?;
            }
            Some(m.into_iter().filter(|(_, c)| *c > 0).collect())
        }
        Some(Content {
            letters: sub(&self.letters, &other.letters)?,
            places: sub(&self.places, &other.places)?,
        })
    }
}

fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for k in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - k, k) {
            rest.insert(0, k);
            out.push(rest);
        }
    }
    out
}

/// Row fillings with strictly increasing rows and weakly increasing columns.
fn letter_fillings(shape: &[u32], content: &[(Letter, u32)]) -> Vec<Vec<Vec<Letter>>> {
    fn rec(
        shape: &[u32],
        remaining: &mut Vec<(Letter, u32)>,
        rows: &mut Vec<Vec<Letter>>,
        out: &mut Vec<Vec<Vec<Letter>>>,
    ) {
        let i = rows.len();
        if i == shape.len() {
            if remaining.iter().all(|(_, c)| *c == 0) {
                out.push(rows.clone());
            }
            return;
        }
        let avail: Vec<usize> = (0..remaining.len()).filter(|&k| remaining[k].1 > 0).collect();
        for pick in super::combinations(&avail, shape[i] as usize) {
            let row: Vec<Letter> = pick.iter().map(|&k| remaining[k].0).collect();
            if i > 0 && row.iter().zip(&rows[i - 1]).any(|(a, b)| a < b) {
                continue;
            }
            for &k in &pick {
                remaining[k].1 -= 1;
            }
            rows.push(row);
            rec(shape, remaining, rows, out);
            rows.pop();
            for &k in &pick {
                remaining[k].1 += 1;
            }
        }
    }
    let mut out = Vec::new();
    rec(shape, &mut content.to_vec(), &mut Vec::new(), &mut out);
    out
}

/// Weakly increasing multisets of size k drawn from `remaining`.
fn multisets(remaining: &[(u8, u32)], k: usize) -> Vec<Vec<u8>> {
    fn rec(rem: &[(u8, u32)], start: usize, k: usize, acc: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if acc.len() == k {
            out.push(acc.clone());
            return;
        }
        for idx in start..rem.len() {
            let (p, c) = rem[idx];
            let already = acc.iter().filter(|&&x| x == p).count() as u32;
            if already < c {
                acc.push(p);
                rec(rem, idx, k, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(remaining, 0, k, &mut Vec::new(), &mut out);
    out
}

/// Row fillings with weakly increasing rows and strictly increasing columns.
fn place_fillings(shape: &[u32], content: &[(u8, u32)]) -> Vec<Vec<Vec<u8>>> {
    fn rec(
        shape: &[u32],
        remaining: &mut Vec<(u8, u32)>,
        rows: &mut Vec<Vec<u8>>,
        out: &mut Vec<Vec<Vec<u8>>>,
    ) {
        let i = rows.len();
        if i == shape.len() {
            if remaining.iter().all(|(_, c)| *c == 0) {
                out.push(rows.clone());
            }
            return;
        }
        for row in multisets(remaining, shape[i] as usize) {
            if i > 0 && row.iter().zip(&rows[i - 1]).any(|(a, b)| a <= b) {
                continue;
            }
            for p in &row {
                remaining.iter_mut().find(|(q, _)| q == p).unwrap().1 -= 1;
            }
            rows.push(row.clone());
            rec(shape, remaining, rows, out);
            rows.pop();
            for p in &row {
                remaining.iter_mut().find(|(q, _)| q == p).unwrap().1 += 1;
            }
        }
    }
    let mut out = Vec::new();
    rec(shape, &mut content.to_vec(), &mut Vec::new(), &mut out);
    out
}

/// All standard bitableaux with the given content, in canonical row form.
pub fn standard_tableaux(content: &Content) -> Vec<Vec<Biproduct>> {
    let d = content.degree();
    let mut out = Vec::new();
    for shape in partitions(d, d) {
        let letters = letter_fillings(&shape, &content.letters);
        if letters.is_empty() {
            continue;
        }
        let places = place_fillings(&shape, &content.places);
        for s in &letters {
            for t in &places {
                out.push(
                    s.iter()
                        .zip(t)
                        .map(|(w, p)| Biproduct::from_places(w.clone(), p))
                        .collect(),
                );
            }
        }
    }
    out
}

struct ComponentBasis {
    tableaux: Vec<Vec<Biproduct>>,
    echelon: Echelon<Vec<(u8, u8)>, usize>,
}

/// Straightening engine; caches the triangular data of each component.
pub struct Straightener {
    order: TermOrder,
    budget: u64,
    used: u64,
    components: HashMap<Content, ComponentBasis>,
}

impl Straightener {
    pub fn new(order: TermOrder, budget: u64) -> Self {
        Straightener {
            order,
            budget,
            used: 0,
            components: HashMap::new(),
        }
    }

    pub fn operations(&self) -> u64 {
        self.used
    }

    fn vector(&self, e: &LetterplaceElement) -> SparseVec<Vec<(u8, u8)>> {
        e.terms()
            .map(|(m, c)| (self.order.key(m), qi(*c)))
            .collect()
    }

    fn ensure_component(&mut self, content: &Content) -> Result<()> {
        if self.components.contains_key(content) {
            return Ok(());
        }
        let tableaux = standard_tableaux(content);
        if tableaux.len() > COMPONENT_LIMIT {
            return Err(Error::ComponentTooLarge(tableaux.len(), COMPONENT_LIMIT));
        }
        let mut echelon = Echelon::new(self.budget.saturating_sub(self.used));
        for (i, t) in tableaux.iter().enumerate() {
            let v = self.vector(&expand_rows(t));
            let combo: SparseVec<usize> = [(i, qi(1))].into_iter().collect();
            let grew = echelon
                .insert(v, combo)
                .map_err(|_| Error::BudgetExceeded(self.budget))?;
            assert!(grew, "standard bitableaux must be independent");
        }
        self.used += echelon.operations();
        self.components
            .insert(content.clone(), ComponentBasis { tableaux, echelon });
        Ok(())
    }

    /// Standard expansion of an arbitrary letterplace element.
    pub fn standard_expansion(&mut self, e: &LetterplaceElement) -> Result<BitableauElement> {
        let mut groups: BTreeMap<Content, LetterplaceElement> = BTreeMap::new();
        for (m, c) in e.terms() {
            groups
                .entry(Content::of_monomial(m))
                .or_default()
                .add_term(m.clone(), *c);
        }
        let mut out = BitableauElement::zero();
        for (content, part) in groups {
            self.ensure_component(&content)?;
            let v = self.vector(&part);
            let remaining = self.budget.saturating_sub(self.used);
            let basis = self.components.get_mut(&content).unwrap();
            let before = basis.echelon.operations();
            basis.echelon.set_budget(before + remaining);
            let coords = basis.echelon.express(v);
            self.used += basis.echelon.operations() - before;
            let coords = coords
                .map_err(|_| Error::BudgetExceeded(self.budget))?
                .ok_or_else(|| {
                Error::InvalidArgument("standard bitableaux do not span the component".into())
            })?;
            for (idx, c) in coords {
                let c = q_to_i64(&c).ok_or_else(|| {
                    Error::InvalidArgument("non-integral standard coordinate".into())
                })?;
                out.add_canonical(basis.tableaux[idx].clone(), c);
            }
        }
        Ok(out)
    }

    /// Rewrites every nonstandard row product into standard ones.
    pub fn straighten(&mut self, e: &BitableauElement) -> Result<BitableauElement> {
        let mut standard = BitableauElement::zero();
        let mut rest = LetterplaceElement::zero();
        for (rows, c) in e.terms() {
            if super::is_standard(rows) {
                standard.add_canonical(rows.clone(), *c);
            } else {
                rest = rest.add(&expand_rows(rows).scale(*c));
            }
        }
        Ok(standard.add(&self.standard_expansion(&rest)?))
    }
}

pub fn straighten(e: &BitableauElement, order: TermOrder, budget: u64) -> Result<BitableauElement> {
    Straightener::new(order, budget).straighten(e)
}

#[cfg(test)]
mod tests {
    use super::super::{is_standard, word};
    use super::*;

    fn content(letters: &str, places: &[(u8, u32)]) -> Content {
        let mut m: BTreeMap<Letter, u32> = BTreeMap::new();
        for l in word(letters) {
            *m.entry(l).or_insert(0) += 1;
        }
        Content {
            letters: m.into_iter().collect(),
            places: places.to_vec(),
        }
    }

    #[test]
    fn standard_basis_counts_monomials() {
        // content {x, y}, places {1, 2}: monomials (x|1)(y|2), (x|2)(y|1)
        let c = content("xy", &[(1, 1), (2, 1)]);
        let st = standard_tableaux(&c);
        assert_eq!(st.len(), 2);
        assert!(st.iter().all(|t| is_standard(t)));
        // content {x², y}, places {1², 2}: x must sit at both places
        let c = content("xxy", &[(1, 2), (2, 1)]);
        assert_eq!(standard_tableaux(&c).len(), 1);
    }

    #[test]
    fn straightens_place_violation() {
        let r = |w: &str, places: &[u8]| Biproduct::from_places(word(w), places);
        let e = BitableauElement::from_rows(&[r("x", &[2]), r("y", &[1])], 1);
        let s = straighten(&e, TermOrder::PlaceLex, DEFAULT_BUDGET).unwrap();
        let expect = BitableauElement::from_rows(&[r("xy", &[1, 2])], 1)
            .sub(&BitableauElement::from_rows(&[r("x", &[1]), r("y", &[2])], 1));
        assert_eq!(s, expect);
        assert_eq!(s.expand(), e.expand());
    }

    #[test]
    fn tiny_budget_trips() {
        let r = |w: &str, places: &[u8]| Biproduct::from_places(word(w), places);
        let e = BitableauElement::from_rows(&[r("x", &[3]), r("y", &[2]), r("z", &[1])], 1);
        assert_eq!(
            straighten(&e, TermOrder::PlaceLex, 2),
            Err(Error::BudgetExceeded(2))
        );
    }
}
