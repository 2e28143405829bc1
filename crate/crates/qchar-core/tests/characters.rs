use std::time::Instant;

use qchar_core::qsl2::{build_algebra, oq_sigma, BuildOptions, DetSign, GluingPattern};
use qchar_core::series::*;

#[test]
fn counted_characters_match_closed_forms() {
    let systems = [
        oq_sigma(DetSign::One),
        build_algebra(&GluingPattern::torus1(), BuildOptions { det: DetSign::Printed, alt_middle: false }).unwrap(),
        build_algebra(&GluingPattern::sphere4(), BuildOptions::default()).unwrap(),
    ];
    for (k, s) in systems.iter().enumerate() {
        let t = Instant::now();
        let closed = expand_closed_form(&oq_character_spec().pow(k as u32 + 1), 8).unwrap();
        let fast = pbw_character_fast(s, 8, 4).unwrap();
        assert!(compare_series(&fast, &closed).unwrap().passed(), "power {}", k + 1);
        let max = if k == 2 { 6 } else { 8 };
        let counted = pbw_graded_character(s, max);
        assert!(compare_series(&counted, &closed.truncate(max)).unwrap().passed(), "power {}", k + 1);
        assert_eq!(counted, counted.mirrored());
        eprintln!("power {} in {:?}", k + 1, t.elapsed());
    }
}

#[test]
fn invariant_series_match_both_oracles() {
    let s04 = build_algebra(&GluingPattern::sphere4(), BuildOptions::default()).unwrap();
    let t11 = build_algebra(&GluingPattern::torus1(), BuildOptions { det: DetSign::Printed, alt_middle: false }).unwrap();
    let h = invariant_hilbert(&pbw_character_fast(&s04, 8, 4).unwrap());
    assert_eq!(h.coeffs, expand_univariate(&s04_hilbert_spec(), 8).unwrap().coeffs);
    assert_eq!(&h.coeffs[..5], [1, 3, 9, 20, 42]);
    let h = invariant_hilbert(&pbw_character_fast(&t11, 8, 4).unwrap());
    assert_eq!(h.coeffs, expand_univariate(&t11_hilbert_spec(), 8).unwrap().coeffs);
    assert_eq!(&h.coeffs[..6], [1, 2, 4, 6, 9, 12]);
    assert!(h.coeffs.iter().all(|c| *c >= 0));
}

#[test]
fn multiplicativity_of_characters() {
    let one = pbw_graded_character(&oq_sigma(DetSign::One), 6);
    let t11 = build_algebra(&GluingPattern::torus1(), BuildOptions { det: DetSign::Printed, alt_middle: false }).unwrap();
    assert_eq!(pbw_graded_character(&t11, 6), one.pow(2));
}
