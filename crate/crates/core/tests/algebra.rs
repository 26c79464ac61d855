use bolalg::algebra::{check_bol, check_lie};
use bolalg::classification::{action_on_params, canonical_form_iso, find_iso_witness, AutoParams};
use bolalg::enveloping::{family_bol, g4, induced_bol, EnvelopingPair};
use bolalg::linalg::rational::rat;
use bolalg::linalg::Rational;
use bolalg::specfile::{emit_algebra, parse_algebra};
use bolalg::{Sign, SubalgebraParams};
use num_traits::Zero;
use proptest::prelude::*;

fn q() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

fn sign() -> impl Strategy<Value = Sign> {
    prop_oneof![Just(Sign::Minus), Just(Sign::Plus)]
}

fn params() -> impl Strategy<Value = SubalgebraParams> {
    (sign(), q(), q(), q()).prop_map(|(s, x, y, z)| SubalgebraParams::new(s, x, y, z))
}

fn auto() -> impl Strategy<Value = AutoParams> {
    (
        q().prop_filter("b != 0", |b| !b.is_zero()),
        q(),
        q(),
        prop_oneof![Just(1i8), Just(-1i8)],
    )
        .prop_map(|(b, f, d, eps)| AutoParams::new(b, f, d, eps).unwrap())
}

#[test]
fn g4_is_lie() {
    for s in Sign::BOTH {
        assert!(check_lie(&g4(s)).passed());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn family_is_bol(s in params()) {
        prop_assert!(check_bol(&family_bol(&s)).passed());
    }

    #[test]
    fn induced_matches_family(s in params()) {
        let alg = induced_bol(&EnvelopingPair::family(&s)).unwrap();
        prop_assert!(alg.same_operations(&family_bol(&s)));
    }

    #[test]
    fn canonical_form_is_orbit_invariant(s in params(), p in auto()) {
        let moved = action_on_params(&p, &s).unwrap();
        prop_assert_eq!(canonical_form_iso(&moved).0, canonical_form_iso(&s).0);
        let (label, w) = canonical_form_iso(&s);
        prop_assert_eq!(action_on_params(&w, &s).unwrap(), label.representative());
        let back = find_iso_witness(&moved, &s).unwrap();
        prop_assert_eq!(action_on_params(&back, &moved).unwrap(), s);
    }

    #[test]
    fn file_round_trip(s in params()) {
        let alg = family_bol(&s);
        let text = emit_algebra(&alg);
        let parsed = parse_algebra(&text).unwrap();
        prop_assert_eq!(&parsed, &alg);
        prop_assert_eq!(emit_algebra(&parsed), text);
    }
}
