mod common;

use cayley::cg_algebra::{MeetSide, OrderedBasis, PeanoSpace};
use cayley::exterior::{ExtMonomial, Exterior, ExteriorElement, Vector};
use cayley::ring::{q, qi, Q};
use cayley::tensor_power::{contains, TensorPower};
use common::*;
use num_traits::One;
use proptest::prelude::*;

fn sign(e: usize) -> Q {
    if e % 2 == 0 {
        Q::one()
    } else {
        -Q::one()
    }
}

fn steps(a: &ExteriorElement, b: &ExteriorElement) -> (usize, usize) {
    (a.homogeneous_step(0).unwrap(), b.homogeneous_step(0).unwrap())
}

fn space() -> impl Strategy<Value = PeanoSpace> {
    nonzero_extensor(4, 4).prop_map(|e| PeanoSpace::new(e).unwrap())
}

/// Rotation by the Pythagorean angle (3/5, 4/5) in the (i, j) plane.
fn rotation(n: usize, i: usize, j: usize) -> Vec<Vector> {
    let mut m: Vec<Vector> = (0..n).map(|r| (0..n).map(|c| qi((r == c) as i64)).collect()).collect();
    m[i][i] = q(3, 5);
    m[j][j] = q(3, 5);
    m[i][j] = q(-4, 5);
    m[j][i] = q(4, 5);
    m
}

fn transform(basis: &[Vector], t: &[Vector]) -> Vec<Vector> {
    // f'_k = Σ_l t[l][k] f_l
    let n = basis.len();
    (0..n)
        .map(|k| (0..n).map(|c| (0..n).map(|l| &t[l][k] * &basis[l][c]).sum()).collect())
        .collect()
}

proptest! {
    #![proptest_config(config(48))]

    #[test]
    fn both_meet_expansions_agree(ps in space(), a in extensor_any_step(4), b in extensor_any_step(4)) {
        prop_assert_eq!(ps.meet(&a, &b, MeetSide::Left).unwrap(), ps.meet(&a, &b, MeetSide::Right).unwrap());
    }

    #[test]
    fn meet_is_bilinear(ps in space(), a in extensor(4, 3), b in extensor(4, 2), c in extensor(4, 2), k in rational()) {
        let sum = b.add(&c.scale(&k)).unwrap();
        let lhs = ps.meet(&a, &sum, MeetSide::Left).unwrap();
        let rhs = ps.meet(&a, &b, MeetSide::Left).unwrap().add(&ps.meet(&a, &c, MeetSide::Left).unwrap().scale(&k)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn dot_meet_differs_by_sign(ps in space(), a in extensor_any_step(4), b in extensor_any_step(4)) {
        let (sa, sb) = steps(&a, &b);
        prop_assume!(sa + sb >= 4);
        let n = 4;
        let dot = ps.dot_meet(&a, &b).unwrap();
        let meet = ps.meet(&a, &b, MeetSide::Left).unwrap();
        prop_assert_eq!(&dot, &meet.scale(&sign((sa + sb - n) * (n - sb))));
        let t = TensorPower::pure(&[a.clone(), b.clone()]).unwrap().diamond(n - sb, 2, 1).unwrap();
        prop_assert_eq!(t, TensorPower::pure(&[dot, ps.integral().clone()]).unwrap());
    }

    #[test]
    fn star_twice_is_a_sign(rows in basis(4), a in extensor_any_step(4)) {
        let b = OrderedBasis::new(rows).unwrap();
        let k = a.homogeneous_step(0).unwrap();
        prop_assert_eq!(b.hodge(&b.hodge(&a).unwrap()).unwrap(), a.scale(&sign(k * (4 - k))));
        prop_assert_eq!(b.hodge(&Exterior::one(4)).unwrap(), b.top().clone());
        prop_assert_eq!(b.hodge(b.top()).unwrap(), Exterior::one(4));
    }

    #[test]
    fn star_reverses_containment(rows in basis(4), a in nonzero_extensor(4, 1), b in nonzero_extensor(4, 2), inside in any::<bool>()) {
        let star = OrderedBasis::new(rows).unwrap();
        // force containment half of the time
        let b = if inside { a.wedge(&b).unwrap() } else { b };
        prop_assume!(!b.is_zero());
        let forward = contains(&a, &b).unwrap();
        let backward = contains(&star.hodge(&b).unwrap(), &star.hodge(&a).unwrap()).unwrap();
        prop_assert_eq!(forward, backward);
        if inside {
            prop_assert!(forward);
        }
    }

    #[test]
    fn rotated_bases_share_their_star(rows in basis(3), plane in 0usize..3, a in extensor_any_step(3)) {
        let (i, j) = [(0, 1), (0, 2), (1, 2)][plane];
        let f = OrderedBasis::new(rows.clone()).unwrap();
        let g = OrderedBasis::new(transform(&rows, &rotation(3, i, j))).unwrap();
        prop_assert_eq!(f.hodge(&a).unwrap(), g.hodge(&a).unwrap());
    }

    #[test]
    fn sheared_bases_have_another_star(rows in basis(3)) {
        let mut shear: Vec<Vector> = (0..3).map(|r| (0..3).map(|c| qi((r == c) as i64)).collect()).collect();
        shear[0][1] = qi(1);
        let f = OrderedBasis::new(rows.clone()).unwrap();
        let g = OrderedBasis::new(transform(&rows, &shear)).unwrap();
        let differs = (0..8u64).any(|m| {
            let e = f.canonical(ExtMonomial::from_mask(m));
            f.hodge(&e).unwrap() != g.hodge(&e).unwrap()
        });
        prop_assert!(differs);
    }
}

#[test]
fn meet_of_top_steps() {
    let e = Exterior::monomial(3, ExtMonomial::top(3), qi(1));
    let ps = PeanoSpace::standard(3);
    assert_eq!(ps.meet(&e, &e, MeetSide::Right).unwrap(), e);
    assert_eq!(ps.meet_all(&[e.clone(), e.clone(), e.clone()]).unwrap(), e);
    assert!(PeanoSpace::new(Exterior::basis(3, 1)).is_err());
}
