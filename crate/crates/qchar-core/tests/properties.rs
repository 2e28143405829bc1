use proptest::prelude::*;

use qchar_core::catalog::Catalog;
use qchar_core::freealg::{Letter, Word};
use qchar_core::qsl2::{oq_sigma, DetSign};
use qchar_core::series::pbw_graded_character;
use qchar_core::{GaussRat, NcPoly, QLaurent};

fn gauss() -> impl Strategy<Value = GaussRat> {
    (-6i64..=6, 1i64..=4, -3i64..=3).prop_map(|(n, d, im)| {
        let re = GaussRat::ratio(n, d).unwrap();
        &re + &(&GaussRat::int(im) * &GaussRat::i())
    })
}

fn laurent() -> impl Strategy<Value = QLaurent> {
    prop::collection::vec((-6i64..=6, gauss()), 0..4).prop_map(QLaurent::from_terms)
}

fn poly(letters: u16, max_len: usize) -> impl Strategy<Value = NcPoly> {
    let word = prop::collection::vec(0..letters, 0..=max_len).prop_map(|v| Word(v.into_iter().map(|l| l as Letter).collect()));
    prop::collection::vec((word, laurent()), 0..4).prop_map(NcPoly::from_terms)
}

proptest! {
    #[test]
    fn laurent_ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &QLaurent::one(), a.clone());
    }

    #[test]
    fn monomials_invert(c in gauss(), e in -8i64..=8) {
        prop_assume!(!c.is_zero());
        let m = QLaurent::term(c, e);
        let inv = m.inv().unwrap();
        prop_assert_eq!(&m * &inv, QLaurent::one());
    }

    #[test]
    fn free_algebra_laws(a in poly(3, 3), b in poly(3, 3), c in poly(3, 3)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &NcPoly::one(), a.clone());
    }

    #[test]
    fn normal_forms_are_linear_and_idempotent(a in poly(4, 4), b in poly(4, 4)) {
        let sys = oq_sigma(DetSign::One);
        let na = sys.normal_form(&a).unwrap();
        prop_assert_eq!(sys.normal_form(&na).unwrap(), na.clone());
        prop_assert!(na.terms().all(|(w, _)| sys.is_reduced(w)));
        let nb = sys.normal_form(&b).unwrap();
        prop_assert_eq!(sys.normal_form(&(&a + &b)).unwrap(), &na + &nb);
    }

    #[test]
    fn strategy_independence(a in poly(4, 5), seed in any::<u64>()) {
        let sys = oq_sigma(DetSign::One);
        prop_assert_eq!(sys.random_strategy_nf(&a, seed).unwrap(), sys.normal_form(&a).unwrap());
    }

    #[test]
    fn strategy_independence_torus(a in poly(8, 4), seed in any::<u64>()) {
        let cat = Catalog::builtin();
        let sys = cat.get_presentation("A-t11").unwrap().rewriting.as_ref().unwrap();
        prop_assert_eq!(sys.random_strategy_nf(&a, seed).unwrap(), sys.normal_form(&a).unwrap());
    }
}

#[test]
fn characters_are_symmetric_in_u() {
    let cat = Catalog::builtin();
    for n in ["Oq-sigma", "Oq-tau", "A-t11"] {
        let ch = pbw_graded_character(cat.get_presentation(n).unwrap().rewriting.as_ref().unwrap(), 6);
        assert_eq!(ch, ch.mirrored(), "{}", n);
    }
}
