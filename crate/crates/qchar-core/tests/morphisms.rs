use std::time::Instant;

use qchar_core::catalog::Catalog;
use qchar_core::homcheck::{check_morphism, RoundTrip};

fn passes(cat: &Catalog, name: &str) -> bool {
    let t = Instant::now();
    let m = cat.get_morphism(name).unwrap();
    let r = check_morphism(cat, m).unwrap();
    eprintln!("{} {:?} {}", name, t.elapsed(), r.passed());
    for rel in &r.relations {
        if !rel.holds() {
            eprintln!("  {} fails", rel.label);
        }
    }
    r.passed()
}

#[test]
fn every_builtin_morphism_has_the_expected_verdict() {
    let cat = Catalog::builtin();
    let good = ["Phi", "GE-variant-defn", "Psi", "alpha", "beta", "gamma", "delta", "iota", "iota-inv", "kappa", "mu", "mu-summary", "mu-inv", "nu"];
    let bad = ["Phi-printed", "GE-variant-summary", "Psi-det1", "beta-printed", "delta-printed", "iota-printed", "kappa-printed", "mu-printed"];
    let mut wrong = Vec::new();
    for n in good {
        if !passes(&cat, n) {
            wrong.push(n);
        }
    }
    for n in bad {
        if passes(&cat, n) {
            wrong.push(n);
        }
    }
    assert!(wrong.is_empty(), "{:?}", wrong);
}

#[test]
fn iota_round_trips_exactly() {
    let cat = Catalog::builtin();
    let r = check_morphism(&cat, cat.get_morphism("iota").unwrap()).unwrap();
    let inv = r.inverse.unwrap();
    assert!(inv.source_side.iter().chain(&inv.target_side).all(|(_, t)| *t == RoundTrip::Exact));
}

#[test]
fn identity_morphisms_pass() {
    use qchar_core::homcheck::{AlgebraMorphism, Route, ScalarMap};
    let cat = Catalog::builtin();
    for n in ["Oq-sigma", "T", "A-t11"] {
        let p = cat.get_presentation(n).unwrap();
        let images = p.alphabet.gens().iter().map(|g| (g.name.as_str(), p.alphabet.x(&g.name))).collect();
        let id = AlgebraMorphism::new("id", p, p, images, ScalarMap::IDENTITY, Route::Direct).unwrap();
        assert!(check_morphism(&cat, &id).unwrap().passed(), "{}", n);
    }
}

#[test]
fn a_wrong_image_is_caught() {
    use qchar_core::homcheck::{AlgebraMorphism, Route, ScalarMap};
    let cat = Catalog::builtin();
    let p = cat.get_presentation("T").unwrap();
    let x = p.alphabet.x("X");
    let images = vec![("X", p.alphabet.x("Y")), ("Y", x.clone()), ("Z", p.alphabet.x("Z"))];
    let swap = AlgebraMorphism::new("swap", p, p, images, ScalarMap::IDENTITY, Route::Direct).unwrap();
    let r = check_morphism(&cat, &swap).unwrap();
    assert!(!r.passed());
    assert!(r.relations.iter().any(|x| !x.residual.is_zero()));
}
