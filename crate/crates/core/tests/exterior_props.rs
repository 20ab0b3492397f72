mod common;

use cayley::exterior::{extensor_span, make_extensor, ExtMonomial, Exterior};
use cayley::ring::qi;
use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn wedge_is_associative(a in extensor_any_step(4), b in extensor_any_step(4), c in extensor_any_step(4)) {
        let left = a.wedge(&b).unwrap().wedge(&c).unwrap();
        let right = a.wedge(&b.wedge(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn wedge_is_graded_commutative(a in extensor_any_step(4), b in extensor_any_step(4)) {
        let (sa, sb) = (a.homogeneous_step(0).unwrap(), b.homogeneous_step(0).unwrap());
        let swapped = b.wedge(&a).unwrap();
        let expected = if sa * sb % 2 == 0 { swapped } else { swapped.neg() };
        prop_assert_eq!(a.wedge(&b).unwrap(), expected);
    }

    #[test]
    fn extensor_spans_rebuild_the_extensor(a in nonzero_extensor(5, 3)) {
        let span = extensor_span(&a).unwrap();
        prop_assert_eq!(span.len(), 3);
        let rebuilt = make_extensor(5, &span).unwrap();
        let (m, c) = rebuilt.first_term().unwrap();
        prop_assert_eq!(rebuilt.scale(&(a.coeff(m) / c)), a);
    }

    #[test]
    fn slices_reassemble(mask in 0u64..64, k in 0usize..=6) {
        let m = ExtMonomial::from_mask(mask);
        prop_assume!(k <= m.step());
        let slices = m.slices(&[k, m.step() - k]);
        for (s, parts) in &slices {
            prop_assert_eq!(parts[0].union(parts[1]), m);
            prop_assert_eq!(parts[0].wedge_sign(parts[1]), Some(*s));
        }
        let n = m.step() as i64;
        let binom = (0..k as i64).fold(1i64, |acc, i| acc * (n - i) / (i + 1));
        prop_assert_eq!(slices.len() as i64, binom);
    }
}

#[test]
fn dependent_vectors_vanish() {
    let v = vec![qi(1), qi(2), qi(3)];
    let w: Vec<_> = v.iter().map(|x| x * qi(-2)).collect();
    assert!(make_extensor(3, &[v, w]).unwrap().is_zero());
    assert!(extensor_span(&Exterior::zero(3)).is_err());
}
