use proptest::prelude::*;

use qchar::expr::{parse_expr, print_expr};
use qchar::files::{parse_presentation, print_presentation, same_presentation};
use qchar_core::catalog::Catalog;
use qchar_core::freealg::{Letter, Word};
use qchar_core::qsl2::{build_algebra, BuildOptions, GluingPattern};
use qchar_core::homcheck::Presentation;
use qchar_core::{GaussRat, NcPoly, QLaurent};

fn coeff() -> impl Strategy<Value = QLaurent> {
    prop::collection::vec((-5i64..=5, -4i64..=4, 1i64..=3, -2i64..=2), 0..3).prop_map(|ts| {
        QLaurent::from_terms(ts.into_iter().map(|(e, n, d, im)| {
            let c = &GaussRat::ratio(n, d).unwrap() + &(&GaussRat::int(im) * &GaussRat::i());
            (e, c)
        }))
    })
}

fn poly(letters: u16) -> impl Strategy<Value = NcPoly> {
    let word = prop::collection::vec(0..letters, 0..4).prop_map(|v| Word(v.into_iter().map(|l| l as Letter).collect()));
    prop::collection::vec((word, coeff()), 0..5).prop_map(NcPoly::from_terms)
}

proptest! {
    #[test]
    fn expressions_round_trip(p in poly(8)) {
        let cat = Catalog::builtin();
        let alpha = &cat.get_presentation("A-t11").unwrap().alphabet;
        let text = print_expr(&p, alpha);
        prop_assert_eq!(parse_expr(&text, alpha).unwrap(), p);
    }
}

#[test]
fn built_presentations_round_trip() {
    for pattern in [GluingPattern::torus1(), GluingPattern::sphere4()] {
        let sys = build_algebra(&pattern, BuildOptions::default()).unwrap();
        let p = Presentation::from_system("P", sys);
        let text = print_presentation(&p);
        let back = parse_presentation(&text).unwrap();
        assert!(same_presentation(&p, &back));
        assert_eq!(print_presentation(&back), text);
    }
}
