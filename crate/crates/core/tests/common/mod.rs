#![allow(dead_code)]

use cayley::exterior::{make_extensor, ExteriorElement, Vector};
use cayley::letterplace::{Letter, LetterplaceElement};
use cayley::ring::{q, Q};
use proptest::prelude::*;

/// Proptest settings without on-disk failure persistence.
pub fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

pub fn rational() -> impl Strategy<Value = Q> {
    (-5i64..=5, prop_oneof![3 => Just(1i64), 1 => 2i64..=3]).prop_map(|(n, d)| q(n, d))
}

pub fn vector(n: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(rational(), n)
}

/// Wedge of k random vectors; zero when they happen to be dependent.
pub fn extensor(n: usize, k: usize) -> impl Strategy<Value = ExteriorElement> {
    prop::collection::vec(vector(n), k).prop_map(move |vs| make_extensor(n, &vs).unwrap())
}

pub fn extensor_any_step(n: usize) -> impl Strategy<Value = ExteriorElement> {
    (0..=n).prop_flat_map(move |k| extensor(n, k))
}

pub fn nonzero_extensor(n: usize, k: usize) -> impl Strategy<Value = ExteriorElement> {
    extensor(n, k).prop_filter("zero extensor", |e| !e.is_zero())
}

/// Invertible n×n matrix given by its rows.
pub fn basis(n: usize) -> impl Strategy<Value = Vec<Vector>> {
    prop::collection::vec(vector(n), n).prop_filter("dependent rows", move |rows| {
        !make_extensor(n, rows).unwrap().is_zero()
    })
}

/// A small letterplace element over the first `letters` letters and places
/// 1..=m.
pub fn letterplace(letters: usize, m: u8, max_degree: usize) -> impl Strategy<Value = LetterplaceElement> {
    let var = (0..letters, 1..=m);
    let mono = prop::collection::vec(var, 0..=max_degree);
    prop::collection::vec((mono, -3i64..=3), 1..=3).prop_map(|terms| {
        terms.into_iter().fold(LetterplaceElement::zero(), |acc, (seq, c)| {
            let seq: Vec<(Letter, u8)> = seq.into_iter().map(|(l, p)| (Letter::from_index(l), p)).collect();
            acc.add(&LetterplaceElement::product_of(&seq).scale(c))
        })
    })
}

/// A word of distinct letters drawn from the first `letters` letters.
pub fn word(letters: usize, max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    Just((0..letters).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_flat_map(move |all| {
            (0..=max_len.min(letters)).prop_map(move |k| all[..k].iter().map(|&i| Letter::from_index(i)).collect())
        })
}

/// Split of `total` over places 1..=m as (place, count) pairs.
pub fn degree(total: usize, m: u8) -> impl Strategy<Value = Vec<(u8, u32)>> {
    prop::collection::vec(1..=m, total).prop_map(move |places| {
        let mut d: Vec<(u8, u32)> = Vec::new();
        for p in places {
            match d.iter_mut().find(|(q, _)| *q == p) {
                Some((_, c)) => *c += 1,
                None => d.push((p, 1)),
            }
        }
        d.sort();
        d
    })
}
