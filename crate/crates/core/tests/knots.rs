mod common;

use common::front_trace::walk;
use engeltori::knot::{bennequin_check, transverse_pushoff, BraidWord, FrontEvent, FrontWord, Sign};
use engeltori::random;
use engeltori::Error;
use proptest::prelude::*;

use FrontEvent::{Crossing as X, LeftCusp as L, RightCusp as R};

fn front(ev: &[FrontEvent]) -> FrontWord {
    FrontWord::new(ev.to_vec())
}

#[test]
fn fixtures_match_the_walker() {
    for f in [FrontWord::unknot(), FrontWord::trefoil(), front(&[L(0), X(0), X(0), R(0)])] {
        let w = walk(&f).expect("one component");
        let inv = f.invariants().unwrap();
        assert_eq!((inv.tb, inv.rot), (Some(w.tb), Some(w.rot)), "{f:?}");
    }
}

#[test]
fn classical_values() {
    // standard unknot
    assert_eq!((FrontWord::unknot().tb().unwrap(), FrontWord::unknot().rot().unwrap()), (-1, 0));
    // the tb = 1 right-handed trefoil
    assert_eq!((FrontWord::trefoil().tb().unwrap(), FrontWord::trefoil().rot().unwrap()), (1, 0));
    let s = FrontWord::unknot().stabilize(Sign::Positive).unwrap();
    assert_eq!((s.tb().unwrap(), s.rot().unwrap()), (-2, 1));
    let s = FrontWord::unknot().stabilize(Sign::Negative).unwrap();
    assert_eq!((s.tb().unwrap(), s.rot().unwrap()), (-2, -1));
}

#[test]
fn two_cusp_fronts_have_only_negative_crossings() {
    // On a front with a single pair of cusps the two branches run in opposite
    // directions, so no crossing can be positive.
    for n in 1..6 {
        let mut ev = vec![L(0)];
        ev.extend(std::iter::repeat(X(0)).take(n));
        ev.push(R(0));
        let f = front(&ev);
        match walk(&f) {
            Some(w) => {
                assert_eq!(w.writhe, -(n as i64));
                assert_eq!(f.tb().unwrap(), -(n as i64) - 1);
            }
            None => assert!(!f.validate().is_knot()),
        }
    }
}

#[test]
fn braid_values() {
    assert_eq!(BraidWord::unknot().self_linking().unwrap(), -1);
    assert_eq!(BraidWord::torus_knot_2(3).self_linking().unwrap(), 1);
    assert_eq!(BraidWord::torus_knot_2(5).self_linking().unwrap(), 3);
    assert_eq!(BraidWord::torus_knot_2(2).self_linking(), Err(Error::MultiComponent(2)));
    assert_eq!(BraidWord::new(3, vec![1, -2, 1, -2]).self_linking().unwrap(), -3);
}

#[test]
fn braid_and_front_pushoffs_agree() {
    for (b, f) in [(BraidWord::unknot(), FrontWord::unknot()), (BraidWord::torus_knot_2(3), FrontWord::trefoil())] {
        let (tb, rot) = (f.tb().unwrap(), f.rot().unwrap());
        assert_eq!(transverse_pushoff(tb, rot, Sign::Positive), b.self_linking().unwrap());
    }
}

#[test]
fn bennequin_bound_on_fixtures() {
    assert!(bennequin_check(BraidWord::unknot().self_linking().unwrap(), 0));
    assert!(bennequin_check(BraidWord::torus_knot_2(3).self_linking().unwrap(), 1));
    assert!(bennequin_check(BraidWord::torus_knot_2(5).self_linking().unwrap(), 2));
    assert!(!bennequin_check(1, 0));
}

#[test]
fn malformed_fronts_are_rejected() {
    assert!(!front(&[]).validate().valid);
    assert!(!front(&[L(0), R(1)]).validate().valid);
    assert!(!front(&[L(0), X(1), R(0)]).validate().valid);
    assert!(!front(&[L(0)]).validate().valid);
    // two unknots side by side
    assert!(!front(&[L(0), R(0), L(0), R(0)]).validate().is_knot());
    assert!(front(&[L(0), L(0), R(0), R(0)]).tb().is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn walker_agrees_with_library(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let f = random::front_knot(&mut rng, 8, 14);
        let w = walk(&f).expect("generator yields knots");
        let o = f.orient().unwrap();
        prop_assert_eq!((o.writhe(), o.tb(), o.rot()), (w.writhe, w.tb, w.rot));
        prop_assert_eq!((o.up_cusps(), o.down_cusps()), (w.up, w.down));
    }

    #[test]
    fn front_laws(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let f = random::front_knot(&mut rng, 6, 10);
        let (tb, rot) = (f.tb().unwrap(), f.rot().unwrap());
        prop_assert_eq!((tb + rot).rem_euclid(2), 1);
        for sign in [Sign::Positive, Sign::Negative] {
            let s = f.stabilize(sign).unwrap();
            let w = walk(&s).expect("stabilization keeps one component");
            prop_assert_eq!((w.tb, w.rot), (tb - 1, rot + sign.as_i64()));
            prop_assert_eq!(transverse_pushoff(tb, rot, sign).rem_euclid(2), 1);
        }
        let r = f.orient().unwrap().reversed();
        prop_assert_eq!((r.tb(), r.rot()), (tb, -rot));
    }

    #[test]
    fn braid_laws(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let b = random::braid_knot(&mut rng, 6, 14);
        let sl = b.self_linking().unwrap();
        prop_assert_eq!(sl.rem_euclid(2), 1);
        prop_assert_eq!(sl, b.word().iter().map(|&x| x.signum() as i64).sum::<i64>() - b.strands() as i64);
        let neg = b.markov_stabilize(Sign::Negative);
        let pos = b.markov_stabilize(Sign::Positive);
        prop_assert_eq!(neg.self_linking().unwrap(), sl - 2);
        prop_assert_eq!(pos.self_linking().unwrap(), sl);
        prop_assert_eq!(neg.strands(), b.strands() + 1);
        prop_assert!(neg.validate().is_knot() && pos.validate().is_knot());
    }

    #[test]
    fn braid_json_round_trip(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let b = random::braid_knot(&mut rng, 5, 10);
        let text = serde_json::to_string(&b).unwrap();
        prop_assert_eq!(serde_json::from_str::<BraidWord>(&text).unwrap(), b);
    }

    #[test]
    fn front_json_round_trip(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let f = random::front_knot(&mut rng, 6, 8);
        let text = serde_json::to_string(&f).unwrap();
        prop_assert_eq!(serde_json::from_str::<FrontWord>(&text).unwrap(), f);
    }
}
