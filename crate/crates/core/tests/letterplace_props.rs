mod common;

use cayley::letterplace::{
    biproduct_expand, lp_normalize, phi, phi_inv, straighten, word as lp_word, Biproduct, Bitableau, Letter,
    LetterplaceElement, Straightener, TermOrder, DEFAULT_BUDGET,
};
use cayley::Error;
use common::*;
use proptest::prelude::*;

fn row(letters: usize, max_len: usize, m: u8) -> impl Strategy<Value = Biproduct> {
    word(letters, max_len).prop_flat_map(move |w| {
        let n = w.len();
        degree(n, m).prop_map(move |d| Biproduct::new(w.clone(), &d))
    })
}

fn bitableau(rows: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Bitableau> {
    prop::collection::vec(row(5, 3, 3), rows).prop_map(|rs| Bitableau::from_rows(&rs, 1))
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn phi_inverts(e in letterplace(5, 4, 5)) {
        let t = phi(&e, 4).unwrap();
        prop_assert_eq!(phi_inv(&t), e.clone());
        prop_assert_eq!(phi(&phi_inv(&t), 4).unwrap(), t);
    }

    #[test]
    fn phi_is_multiplicative(a in letterplace(4, 3, 3), b in letterplace(4, 3, 3)) {
        let lhs = phi(&a.mul(&b), 3).unwrap();
        let rhs = phi(&a, 3).unwrap().graded_product(&phi(&b, 3).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn normalization_is_a_signed_sort(seq in prop::collection::vec((0usize..4, 1u8..=3), 0..6)) {
        let seq: Vec<(Letter, u8)> = seq.into_iter().map(|(l, p)| (Letter::from_index(l), p)).collect();
        let (s, m) = lp_normalize(&seq);
        let mut sorted: Vec<(u8, Letter)> = seq.iter().map(|(l, p)| (*p, *l)).collect();
        sorted.sort();
        let repeated = sorted.windows(2).any(|w| w[0] == w[1]);
        prop_assert_eq!(s == 0, repeated);
        if !repeated {
            let got: Vec<(u8, Letter)> = m.vars().iter().map(|v| (v.place, v.letter)).collect();
            prop_assert_eq!(got, sorted);
        }
    }

    #[test]
    fn biproducts_are_skew_in_letters(b in row(5, 4, 3), i in 0usize..4, j in 0usize..4) {
        let w = b.word().to_vec();
        prop_assume!(i < j && j < w.len());
        let mut swapped = w.clone();
        swapped.swap(i, j);
        let lhs = biproduct_expand(&Biproduct::new(swapped, b.degree()));
        prop_assert_eq!(lhs, biproduct_expand(&b).scale(-1));
    }

    #[test]
    fn polarization_moves_one_place(w in word(5, 4)) {
        // D_{2,1} (w | 1^n) = (w | 1^{n-1} 2)
        let n = w.len() as u32;
        prop_assume!(n > 0);
        let lhs = biproduct_expand(&Biproduct::new(w.clone(), &[(1, n)])).polarize(2, 1);
        let rhs = biproduct_expand(&Biproduct::new(w, &[(1, n - 1), (2, 1)]));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn straightening_is_order_independent(t in bitableau(1..=3)) {
        let outs: Vec<Bitableau> = TermOrder::ALL
            .iter()
            .map(|&o| straighten(&t, o, DEFAULT_BUDGET).unwrap())
            .collect();
        prop_assert!(outs[0].is_standard());
        prop_assert_eq!(outs[0].expand(), t.expand());
        prop_assert_eq!(&outs[0], &outs[1]);
        prop_assert_eq!(&outs[0], &outs[2]);
        // standard input is a fixed point
        prop_assert_eq!(straighten(&outs[0], TermOrder::PlaceLex, DEFAULT_BUDGET).unwrap(), outs[0].clone());
    }

    #[test]
    fn standard_expansion_preserves_value(e in letterplace(4, 3, 4)) {
        let mut s = Straightener::new(TermOrder::LetterLex, DEFAULT_BUDGET);
        let b = s.standard_expansion(&e).unwrap();
        prop_assert!(b.is_standard());
        prop_assert_eq!(b.expand(), e);
    }
}

#[test]
fn laplace_examples() {
    let x = Letter::from_char('x').unwrap();
    let y = Letter::from_char('y').unwrap();
    let xy = lp_word("xy");
    assert_eq!(
        biproduct_expand(&Biproduct::new(xy.clone(), &[(1, 2)])),
        LetterplaceElement::product_of(&[(x, 1), (y, 1)])
    );
    assert_eq!(
        biproduct_expand(&Biproduct::new(xy.clone(), &[(1, 1), (2, 1)])),
        LetterplaceElement::product_of(&[(x, 1), (y, 2)]).sub(&LetterplaceElement::product_of(&[(y, 1), (x, 2)]))
    );
    assert!(biproduct_expand(&Biproduct::new(xy, &[(1, 1)])).is_zero());
    assert_eq!(biproduct_expand(&Biproduct::new(vec![], &[])), LetterplaceElement::one());
}

#[test]
fn polarization_examples() {
    let x = Letter::from_char('x').unwrap();
    let y = Letter::from_char('y').unwrap();
    let x1 = LetterplaceElement::var(x, 1);
    assert_eq!(x1.polarize(2, 1), LetterplaceElement::var(x, 2));
    let xy = LetterplaceElement::product_of(&[(x, 1), (y, 1)]);
    let expected = LetterplaceElement::product_of(&[(x, 2), (y, 1)]).add(&LetterplaceElement::product_of(&[(x, 1), (y, 2)]));
    assert_eq!(xy.polarize(2, 1), expected);
    assert!(xy.polarize_divided(1, 1, 1).is_err());
}

#[test]
fn standardness_examples() {
    let r = |w: &str| Biproduct::new(lp_word(w), &[(1, w.len() as u32)]);
    assert!(Bitableau::from_rows(&[r("xz")], 1).is_standard());
    // places must strictly increase down columns
    assert!(!cayley::letterplace::is_standard(&[r("xy"), r("xy")]));
    assert!(cayley::letterplace::is_standard(&[r("xy"), Biproduct::new(lp_word("xy"), &[(2, 2)])]));
    assert!(!cayley::letterplace::is_standard(&[r("xz"), r("xy")]));
}

#[test]
fn budget_overrun_is_reported() {
    let rows = [
        Biproduct::new(lp_word("x"), &[(3, 1)]),
        Biproduct::new(lp_word("y"), &[(2, 1)]),
        Biproduct::new(lp_word("z"), &[(1, 1)]),
    ];
    match straighten(&Bitableau::from_rows(&rows, 1), TermOrder::PlaceLex, 2) {
        Err(Error::BudgetExceeded(2)) => {}
        other => panic!("expected a budget error, got {other:?}"),
    }
}
