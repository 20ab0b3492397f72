mod common;

use cayley::cg_algebra::{OrderedBasis, PeanoSpace};
use cayley::exterior::{Exterior, ExteriorElement, Vector};
use cayley::linalg;
use cayley::ring::{q, qi, Q};
use cayley::span_invariants::{
    dagger_representation, dagger_representation_of, generalized_hodge, geometric_sum, minimal_representation, pairing_beta, span_rank,
    MinimalRepresentation,
};
use cayley::tensor_power::{contains, TensorPower};
use common::*;
use num_traits::{One, Zero};
use proptest::prelude::*;

type Pairs = Vec<(ExteriorElement, ExteriorElement)>;

fn tensor_of(n: usize, pairs: &Pairs) -> TensorPower<Q> {
    pairs.iter().fold(TensorPower::zero(2, n), |acc, (l, r)| {
        acc.add(&TensorPower::pure(&[l.clone(), r.clone()]).unwrap()).unwrap()
    })
}

fn pairs(count: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Pairs> {
    prop::collection::vec((extensor(4, 1), extensor(4, 2)), count)
}

fn combine(m: &[Vector], xs: &[ExteriorElement]) -> Vec<ExteriorElement> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(xs)
                .fold(Exterior::zero(4), |acc, (c, x)| acc.add(&x.scale(c)).unwrap())
        })
        .collect()
}

fn is_orthogonal(t: &[Vector]) -> bool {
    let tt = linalg::transpose(t);
    linalg::mat_mul(t, &tt) == linalg::identity(t.len())
}

proptest! {
    #![proptest_config(config(48))]

    #[test]
    fn minimal_representation_rebuilds_the_tensor(ps in pairs(0..=4)) {
        let t = tensor_of(4, &ps);
        let rep = minimal_representation(&t).unwrap();
        prop_assert_eq!(rep.tensor(), t);
        prop_assert_eq!(span_rank(&rep.lefts()), rep.rank());
        prop_assert_eq!(span_rank(&rep.rights()), rep.rank());
        prop_assert!(rep.rank() <= ps.len());
        for (i, l) in rep.lefts().iter().enumerate() {
            for (j, r) in rep.rights().iter().enumerate() {
                let expected = if i == j { Q::one() } else { Q::zero() };
                prop_assert_eq!(rep.pairing(l, r).unwrap(), expected);
            }
        }
    }

    #[test]
    fn minimal_left_span_lies_in_every_left_span(ps in pairs(1..=4)) {
        let t = tensor_of(4, &ps);
        let rep = minimal_representation(&t).unwrap();
        let given: Vec<ExteriorElement> = ps.iter().map(|(l, _)| l.clone()).collect();
        let mut joint = given.clone();
        joint.extend(rep.lefts());
        prop_assert_eq!(span_rank(&joint), span_rank(&given));
    }

    #[test]
    fn shortest_representations_are_independent(ps in pairs(1..=3)) {
        let t = tensor_of(4, &ps);
        let rank = minimal_representation(&t).unwrap().rank();
        if rank == ps.len() {
            prop_assert!(MinimalRepresentation::from_pairs(4, ps).is_ok());
        }
    }

    #[test]
    fn compensated_bases_give_the_same_tensor(ps in pairs(2..=2), t in prop::collection::vec(vector(2), 2), rotate in any::<bool>()) {
        let rep = minimal_representation(&tensor_of(4, &ps)).unwrap();
        prop_assume!(rep.rank() == 2);
        let t: Vec<Vector> = if rotate { vec![vec![q(3, 5), q(-4, 5)], vec![q(4, 5), q(3, 5)]] } else { t };
        let Some(inv) = linalg::inverse(&t) else { return Ok(()); };
        let lefts = combine(&t, &rep.lefts());
        let rights = combine(&linalg::transpose(&inv), &rep.rights());
        let other = MinimalRepresentation::from_pairs(4, lefts.iter().cloned().zip(rights.iter().cloned()).collect()).unwrap();
        prop_assert_eq!(other.tensor(), rep.tensor());
        let same_map = lefts.iter().all(|x| rep.apply(x).unwrap() == other.apply(x).unwrap());
        prop_assert_eq!(same_map, is_orthogonal(&t));
    }

    #[test]
    fn dagger_pairing_is_dual(a in nonzero_extensor(4, 3), b in nonzero_extensor(4, 2)) {
        let (rep, c) = dagger_representation(&a, &b).unwrap();
        let t = geometric_sum(&a, &b).unwrap();
        prop_assert_eq!(rep.tensor(), t.clone());
        let (ls, rs) = (rep.lefts(), rep.rights());
        for (i, x) in ls.iter().enumerate() {
            for (j, y) in rs.iter().enumerate() {
                let beta = pairing_beta(&t, x, y, &c).unwrap();
                let expected = if i == j { Q::one() } else { Q::zero() };
                prop_assert_eq!(beta, expected, "i={} j={}", i, j);
            }
        }
    }

    #[test]
    fn pairing_of_the_top_is_the_cap_product(rows in basis(3), x in extensor_any_step(3), y in extensor_any_step(3)) {
        let basis = OrderedBasis::new(rows).unwrap();
        let f = basis.top().clone();
        let t = geometric_sum(&f, &Exterior::one(3)).unwrap();
        let beta = pairing_beta(&t, &x, &y, &Exterior::one(3)).unwrap();
        let (sx, sy) = (x.homogeneous_step(0).unwrap(), y.homogeneous_step(0).unwrap());
        let expected = if sx + sy == 3 {
            PeanoSpace::new(f).unwrap().bracket_of(&x.wedge(&y).unwrap())
        } else {
            Q::zero()
        };
        prop_assert_eq!(beta, expected);
    }

    #[test]
    fn dagger_of_the_top_is_the_star(rows in basis(3), x in extensor_any_step(3)) {
        let basis = OrderedBasis::new(rows).unwrap();
        let one = Exterior::one(3);
        let rep = dagger_representation_of(&one, basis.vectors(), &one).unwrap();
        prop_assert_eq!(rep.tensor(), geometric_sum(basis.top(), &one).unwrap());
        let star = generalized_hodge(&rep);
        prop_assert_eq!(star(&x).unwrap(), basis.hodge(&x).unwrap());
    }

    #[test]
    fn dagger_is_antitone(a in nonzero_extensor(4, 3), b in nonzero_extensor(4, 1), pick in prop::collection::vec(any::<bool>(), 3)) {
        let (rep, c) = dagger_representation(&a, &b).unwrap();
        let star = generalized_hodge(&rep);
        // X | X' inside [C, A]: grow X by some of A's remaining vectors
        let (_, extra) = cayley::span_invariants::intersection_split(&a, &b).unwrap();
        let chosen: Vec<Vector> = extra.iter().zip(&pick).filter(|(_, p)| **p).map(|(v, _)| v.clone()).collect();
        let x = c.clone();
        let x2 = c.wedge(&cayley::exterior::make_extensor(4, &chosen).unwrap()).unwrap();
        let (sx, sx2) = (star(&x).unwrap(), star(&x2).unwrap());
        prop_assert!(contains(&sx2, &sx).unwrap());
    }
}

#[test]
fn example_tensor_is_not_decomposable() {
    let v = |xs: [i64; 4]| xs.iter().map(|&x| qi(x)).collect::<Vector>();
    let (p1, p2, q1, q2) = (v([1, 0, 0, 0]), v([0, 1, 0, 0]), v([0, 0, 1, 0]), v([1, 1, 1, 1]));
    let a = cayley::make_extensor(4, &[p1, p2]).unwrap();
    let b = cayley::make_extensor(4, &[q1, q2]).unwrap();
    let t = TensorPower::pure(&[a, b]).unwrap().diamond(1, 2, 1).unwrap();
    assert_eq!(minimal_representation(&t).unwrap().rank(), 2);
}
