use qchar_core::catalog::Catalog;
use qchar_core::homcheck::{centrality_check, commutes_with, is_invariant, ActionSpec};
use qchar_core::qsl2::{cayley_hamilton_residual, oq_sigma, Block, DetSign, QuantumMatrix};
use qchar_core::NcPoly;

fn images(cat: &Catalog, m: &str) -> Vec<(String, NcPoly)> {
    let m = cat.get_morphism(m).unwrap();
    let src = cat.get_presentation(&m.source).unwrap();
    src.alphabet.letters().map(|l| (src.alphabet.get(l).name.clone(), m.image(l).clone())).collect()
}

#[test]
fn trace_images_are_invariant() {
    let cat = Catalog::builtin();
    for (m, tgt) in [("Phi", "A-s04"), ("Psi", "A-t11")] {
        let sys = cat.get_presentation(tgt).unwrap().rewriting.as_ref().unwrap();
        let spec = ActionSpec::reflection_blocks(&sys.alphabet);
        for (g, p) in images(&cat, m) {
            assert!(is_invariant(&p, &spec, sys).unwrap().holds(), "{} {}", m, g);
        }
    }
}

#[test]
fn products_of_invariants_are_invariant() {
    let cat = Catalog::builtin();
    let sys = cat.get_presentation("A-t11").unwrap().rewriting.as_ref().unwrap();
    let spec = ActionSpec::reflection_blocks(&sys.alphabet);
    let im = images(&cat, "Psi");
    let p = &im[0].1 * &im[2].1;
    assert!(is_invariant(&p, &spec, sys).unwrap().holds());
}

#[test]
fn parameter_images_centrality() {
    let cat = Catalog::builtin();
    let sys = cat.get_presentation("A-s04").unwrap().rewriting.as_ref().unwrap();
    let im = images(&cat, "Phi");
    let mut failing = Vec::new();
    for (g, p) in &im {
        if ["s", "t", "u", "v"].contains(&g.as_str()) {
            let r = centrality_check(p, sys, None).unwrap();
            for l in r.failing() {
                failing.push(format!("{}:{}", g, sys.alphabet.get(l).name));
            }
        }
    }
    eprintln!("{:?}", failing);
    assert!(failing.iter().all(|f| f.starts_with("v:")));
    assert!(!failing.is_empty());
    // Inside the image of B all four commute.
    let others: Vec<NcPoly> = im.iter().map(|(_, p)| p.clone()).collect();
    for (g, p) in &im[..4] {
        assert!(commutes_with(p, &others, sys).unwrap().iter().all(|c| c.is_zero()), "{}", g);
    }
}

#[test]
fn torus_central_element() {
    let cat = Catalog::builtin();
    let sys = cat.get_presentation("A-t11").unwrap().rewriting.as_ref().unwrap();
    let psi = cat.get_morphism("Psi").unwrap();
    let l = psi.apply(cat.get_presentation("T").unwrap().derived("L").unwrap()).unwrap();
    let r = centrality_check(&l, sys, None).unwrap();
    eprintln!("{}", r.failing().len());
    let others: Vec<NcPoly> = images(&cat, "Psi").into_iter().map(|(_, p)| p).collect();
    assert!(commutes_with(&l, &others, sys).unwrap().iter().all(|c| c.is_zero()));
}

#[test]
fn cayley_hamilton() {
    let s = oq_sigma(DetSign::One);
    let a = QuantumMatrix::of_block(&Block::find(&s.alphabet, "a").unwrap());
    assert!(cayley_hamilton_residual(&a, &s).unwrap().entries().all(|e| e.is_zero()));
    let id = QuantumMatrix::identity();
    assert!(cayley_hamilton_residual(&id, &s).unwrap().entries().all(|e| e.is_zero()));
}

#[test]
fn cayley_hamilton_without_the_determinant_rule() {
    use qchar_core::rewrite::ReductionSystem;
    use qchar_core::{QLaurent, Word};
    let s = oq_sigma(DetSign::One);
    let rules: Vec<_> = s.rules().iter().filter(|r| r.rhs.coeff(&Word::empty()).is_zero()).cloned().collect();
    assert_eq!(rules.len() + 1, s.rules().len());
    let cut = ReductionSystem::new(s.alphabet.clone(), rules, Vec::new(), 0).unwrap();
    let a = QuantumMatrix::of_block(&Block::find(&cut.alphabet, "a").unwrap());
    // With det_q kept symbolic the identity still holds.
    assert!(cayley_hamilton_residual(&a, &cut).unwrap().entries().all(|e| e.is_zero()));
    // Substituting det_q = 1 leaves q^-2 (1 - det_q) on the diagonal.
    let sq = a.mul(&a).add(&a.scale(&-a.trace_q())).add(&QuantumMatrix::identity().scale(&NcPoly::constant(QLaurent::q(-2))));
    let want = cut.normal_form(&(&QLaurent::q(-2) * &(&NcPoly::one() - &a.det_q()))).unwrap();
    assert!(!want.is_zero());
    assert_eq!(cut.normal_form(&sq.e[0][0]).unwrap(), want);
    assert_eq!(cut.normal_form(&sq.e[1][1]).unwrap(), want);
    assert!(cut.normal_form(&sq.e[0][1]).unwrap().is_zero());
}
