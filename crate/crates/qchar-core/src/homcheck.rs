//! Finitely presented algebras, morphisms between them and the checks that
//! a morphism respects relations, that elements are invariant under the
//! `U_q(sl2)` action, and that elements are central.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::freealg::{Alphabet, FreeAlgError, Letter, NcPoly, Word};
use crate::qsl2::{entry_name, PAIRS};
use crate::rewrite::{ReductionSystem, RewriteError};
use crate::scalar::{QLaurent, ScalarError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomError {
    UnknownPresentation(String),
    UnknownMorphism(String),
    Unassigned { morphism: String, generator: String },
    UnknownGenerator(String),
    NoConfluentTarget(String),
    ChainMismatch { from: String, to: String },
    MissingAction(String),
    RouteCycle(String),
    Scalar(ScalarError),
    Rewrite(RewriteError),
    Alphabet(FreeAlgError),
}

impl fmt::Display for HomError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomError::UnknownPresentation(n) => write!(f, "unknown presentation `{}`", n),
            HomError::UnknownMorphism(n) => write!(f, "unknown morphism `{}`", n),
            HomError::Unassigned { morphism, generator } => {
                write!(f, "morphism `{}` does not assign generator `{}`", morphism, generator)
            }
            HomError::UnknownGenerator(g) => write!(f, "unknown generator `{}`", g),
            HomError::NoConfluentTarget(n) => {
                write!(f, "target of `{}` has no confluent rewriting system and no route is declared", n)
            }
            HomError::ChainMismatch { from, to } => write!(f, "cannot compose: `{}` does not land in the source of `{}`", from, to),
            HomError::MissingAction(g) => write!(f, "no action table entry for `{}`", g),
            HomError::RouteCycle(n) => write!(f, "verification route of `{}` loops", n),
            HomError::Scalar(e) => write!(f, "{}", e),
            HomError::Rewrite(e) => write!(f, "{}", e),
            HomError::Alphabet(e) => write!(f, "{}", e),
        }
    }
}

impl From<ScalarError> for HomError {
    fn from(e: ScalarError) -> Self {
        HomError::Scalar(e)
    }
}
impl From<RewriteError> for HomError {
    fn from(e: RewriteError) -> Self {
        HomError::Rewrite(e)
    }
}
impl From<FreeAlgError> for HomError {
    fn from(e: FreeAlgError) -> Self {
        HomError::Alphabet(e)
    }
}

/// `q^n a b - q^-n b a`.
pub fn q_bracket_pow(a: &NcPoly, b: &NcPoly, n: i64) -> NcPoly {
    &(&QLaurent::q(n) * &(a * b)) - &(&QLaurent::q(-n) * &(b * a))
}

/// `[a, b]_q = q a b - q^-1 b a`.
pub fn q_bracket(a: &NcPoly, b: &NcPoly) -> NcPoly {
    q_bracket_pow(a, b, 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub label: String,
    pub poly: NcPoly,
}

impl Relation {
    pub fn new(label: &str, poly: NcPoly) -> Self {
        Relation { label: label.into(), poly }
    }
}

/// Generators, relations (each meaning `poly = 0`) and, when one is known,
/// a confluent rewriting system for the same algebra.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub name: String,
    pub alphabet: Alphabet,
    pub relations: Vec<Relation>,
    pub rewriting: Option<ReductionSystem>,
    /// Named elements such as central elements and structure constants.
    pub derived: Vec<(String, NcPoly)>,
}

impl Presentation {
    pub fn new(name: &str, alphabet: Alphabet, relations: Vec<Relation>) -> Self {
        Presentation { name: name.into(), alphabet, relations, rewriting: None, derived: Vec::new() }
    }

    pub fn with_rewriting(mut self, sys: ReductionSystem) -> Self {
        self.rewriting = Some(sys);
        self
    }

    pub fn with_derived(mut self, name: &str, p: NcPoly) -> Self {
        self.derived.push((name.into(), p));
        self
    }

    /// Presentation whose relations are exactly the rules of `sys`.
    pub fn from_system(name: &str, sys: ReductionSystem) -> Self {
        let relations = sys.rules().iter().map(|r| Relation::new(&r.label, r.relation())).collect();
        Presentation { name: name.into(), alphabet: sys.alphabet.clone(), relations, rewriting: Some(sys), derived: Vec::new() }
    }

    pub fn derived(&self, name: &str) -> Option<&NcPoly> {
        self.derived.iter().find(|(n, _)| n == name).map(|(_, p)| p)
    }

    pub fn x(&self, name: &str) -> NcPoly {
        self.alphabet.x(name)
    }

    /// Relations whose normal form is not zero in the attached system.
    pub fn unsatisfied_relations(&self) -> Result<Vec<String>, HomError> {
        let mut out = Vec::new();
        if let Some(sys) = &self.rewriting {
            for r in &self.relations {
                if !sys.normal_form(&r.poly)?.is_zero() {
                    out.push(r.label.clone());
                }
            }
        }
        Ok(out)
    }
}

/// Rescales exponents: `q^(k/2)` goes to `q^(k*num/(2*den))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScalarMap {
    pub num: i64,
    pub den: i64,
}

impl ScalarMap {
    pub const IDENTITY: ScalarMap = ScalarMap { num: 1, den: 1 };

    pub fn is_identity(&self) -> bool {
        self.num == self.den
    }

    pub fn apply(&self, c: &QLaurent) -> Result<QLaurent, ScalarError> {
        if self.is_identity() {
            return Ok(c.clone());
        }
        c.map_exponents(self.num, self.den)
    }

    /// The image of `q` as a target scalar, e.g. `q^2` for a factor of 2.
    pub fn image_of_q(&self) -> Result<QLaurent, ScalarError> {
        self.apply(&QLaurent::q(1))
    }
}

/// How relation images are shown to vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Route {
    /// Reduce in the target's own rewriting system.
    Direct,
    /// Push further along the named morphisms, then reduce in the last target.
    Via(Vec<String>),
    /// Check the named inverse map instead, plus that the two maps are
    /// mutually inverse on generators.
    Inverse(String),
}

#[derive(Clone, Debug)]
pub struct AlgebraMorphism {
    pub name: String,
    pub source: String,
    pub target: String,
    /// Image of each source letter, over the target alphabet.
    pub assignment: Vec<NcPoly>,
    pub scalar: ScalarMap,
    pub route: Route,
}

impl AlgebraMorphism {
    pub fn new(
        name: &str,
        source: &Presentation,
        target: &Presentation,
        images: Vec<(&str, NcPoly)>,
        scalar: ScalarMap,
        route: Route,
    ) -> Result<Self, HomError> {
        let mut slots: Vec<Option<NcPoly>> = alloc::vec![None; source.alphabet.len()];
        for (g, p) in images {
            let l = source.alphabet.index(g).ok_or_else(|| HomError::UnknownGenerator(g.into()))?;
            p.check_alphabet(&target.alphabet)?;
            slots[l as usize] = Some(p);
        }
        let mut assignment = Vec::with_capacity(slots.len());
        for (l, s) in slots.into_iter().enumerate() {
            match s {
                Some(p) => assignment.push(p),
                None => {
                    return Err(HomError::Unassigned {
                        morphism: name.into(),
                        generator: source.alphabet.get(l as Letter).name.clone(),
                    })
                }
            }
        }
        Ok(AlgebraMorphism {
            name: name.into(),
            source: source.name.clone(),
            target: target.name.clone(),
            assignment,
            scalar,
            route,
        })
    }

    pub fn image(&self, l: Letter) -> &NcPoly {
        &self.assignment[l as usize]
    }

    /// Image of a source polynomial.
    pub fn apply(&self, p: &NcPoly) -> Result<NcPoly, HomError> {
        let mut out = NcPoly::zero();
        let mut cache: BTreeMap<Word, NcPoly> = BTreeMap::new();
        for (w, c) in p.terms() {
            let c2 = self.scalar.apply(c)?;
            let img = self.word_image(w, &mut cache);
            out += &(&c2 * &img);
        }
        Ok(out)
    }

    fn word_image(&self, w: &Word, cache: &mut BTreeMap<Word, NcPoly>) -> NcPoly {
        if w.is_empty() {
            return NcPoly::one();
        }
        if let Some(p) = cache.get(w) {
            return p.clone();
        }
        let (head, last) = w.0.split_at(w.len() - 1);
        let prefix = self.word_image(&Word(head.to_vec()), cache);
        let p = &prefix * self.image(last[0]);
        cache.insert(w.clone(), p.clone());
        p
    }
}

/// Lookup of presentations and morphisms by name.
pub trait Resolver {
    fn presentation(&self, name: &str) -> Option<&Presentation>;
    fn morphism(&self, name: &str) -> Option<&AlgebraMorphism>;
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationOutcome {
    pub label: String,
    pub residual: NcPoly,
}

impl RelationOutcome {
    pub fn holds(&self) -> bool {
        self.residual.is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RoundTrip {
    /// The composite sends the generator to itself.
    Exact,
    /// The difference is a unit multiple of the named relation.
    ModRelation(String),
    /// The difference is sent to zero by the other map, reduced on the
    /// confluent side.
    ModKernel,
    Fails(NcPoly),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseCheck {
    pub inverse: String,
    /// `inv(m(g))` against `g` for source generators.
    pub source_side: Vec<(String, RoundTrip)>,
    /// `m(inv(h))` against `h` for target generators.
    pub target_side: Vec<(String, RoundTrip)>,
}

impl InverseCheck {
    pub fn holds(&self) -> bool {
        self.source_side.iter().chain(&self.target_side).all(|(_, r)| !matches!(r, RoundTrip::Fails(_)))
    }
}

#[derive(Clone, Debug)]
pub struct MorphismReport {
    pub name: String,
    /// Morphism whose relation images were reduced.
    pub checked: String,
    /// The composite used, e.g. `kappa ; iota-inv ; Phi`.
    pub chain: Vec<String>,
    /// Presentation whose rewriting system did the reduction.
    pub reduced_in: String,
    pub relations: Vec<RelationOutcome>,
    pub inverse: Option<InverseCheck>,
}

impl MorphismReport {
    pub fn passed(&self) -> bool {
        self.relations.iter().all(|r| r.holds()) && self.inverse.as_ref().map_or(true, |i| i.holds())
    }

    pub fn lines(&self, alpha: &Alphabet) -> Vec<String> {
        let mut out = Vec::new();
        out.push(format!("MORPHISM {} via {} reduced in {}", self.name, self.chain.join(" ; "), self.reduced_in));
        for r in &self.relations {
            if r.holds() {
                out.push(format!("REL {} OK", r.label));
            } else {
                out.push(format!("REL {} FAIL ({} terms)", r.label, r.residual.len()));
                out.push(format!("  residual: {}", r.residual.display(alpha)));
            }
        }
        if let Some(inv) = &self.inverse {
            for (side, list) in [("source", &inv.source_side), ("target", &inv.target_side)] {
                for (g, rt) in list {
                    let s = match rt {
                        RoundTrip::Exact => String::from("OK"),
                        RoundTrip::ModRelation(l) => format!("OK modulo {}", l),
                        RoundTrip::ModKernel => String::from("OK modulo kernel"),
                        RoundTrip::Fails(_) => String::from("FAIL"),
                    };
                    out.push(format!("INVERSE {} {} {}", side, g, s));
                }
            }
        }
        out
    }
}

/// Relation images along a resolved route, ready to be reduced one by one.
pub struct MorphismPlan<'a> {
    pub name: String,
    pub checked: String,
    pub chain: Vec<String>,
    pub system: &'a ReductionSystem,
    pub reduced_in: String,
    pub images: Vec<(String, NcPoly)>,
    pub inverse: Option<InverseCheck>,
}

impl MorphismPlan<'_> {
    pub fn reduce(&self, i: usize) -> Result<RelationOutcome, HomError> {
        let (label, img) = &self.images[i];
        Ok(RelationOutcome { label: label.clone(), residual: self.system.normal_form(img)? })
    }

    pub fn finish(self, relations: Vec<RelationOutcome>) -> MorphismReport {
        MorphismReport {
            name: self.name,
            checked: self.checked,
            chain: self.chain,
            reduced_in: self.reduced_in,
            relations,
            inverse: self.inverse,
        }
    }

    pub fn target_alphabet(&self) -> &Alphabet {
        &self.system.alphabet
    }
}

fn lookup_m<'a, R: Resolver + ?Sized>(cat: &'a R, name: &str) -> Result<&'a AlgebraMorphism, HomError> {
    cat.morphism(name).ok_or_else(|| HomError::UnknownMorphism(name.into()))
}

fn lookup_p<'a, R: Resolver + ?Sized>(cat: &'a R, name: &str) -> Result<&'a Presentation, HomError> {
    cat.presentation(name).ok_or_else(|| HomError::UnknownPresentation(name.into()))
}

/// Applies `m` and then each morphism of `chain` in turn.
pub fn apply_chain<R: Resolver + ?Sized>(
    cat: &R,
    m: &AlgebraMorphism,
    chain: &[String],
    p: &NcPoly,
) -> Result<NcPoly, HomError> {
    let mut cur = m.apply(p)?;
    let mut at = m.target.clone();
    for n in chain {
        let next = lookup_m(cat, n)?;
        if next.source != at {
            return Err(HomError::ChainMismatch { from: at, to: next.name.clone() });
        }
        cur = next.apply(&cur)?;
        at = next.target.clone();
    }
    Ok(cur)
}

/// Resolves the verification route of `m` into concrete relation images.
pub fn plan_morphism<'a, R: Resolver + ?Sized>(cat: &'a R, m: &AlgebraMorphism) -> Result<MorphismPlan<'a>, HomError> {
    plan_inner(cat, m, 0)
}

fn plan_inner<'a, R: Resolver + ?Sized>(cat: &'a R, m: &AlgebraMorphism, depth: usize) -> Result<MorphismPlan<'a>, HomError> {
    if depth > 8 {
        return Err(HomError::RouteCycle(m.name.clone()));
    }
    match &m.route {
        Route::Inverse(inv_name) => {
            let inv = lookup_m(cat, inv_name)?;
            let mut plan = plan_inner(cat, inv, depth + 1)?;
            let check = inverse_check(cat, m, inv)?;
            plan.name = m.name.clone();
            plan.inverse = Some(check);
            Ok(plan)
        }
        Route::Direct | Route::Via(_) => {
            let chain: Vec<String> = match &m.route {
                Route::Via(c) => c.clone(),
                _ => Vec::new(),
            };
            let last_target = match chain.last() {
                Some(n) => lookup_m(cat, n)?.target.clone(),
                None => m.target.clone(),
            };
            let tgt = lookup_p(cat, &last_target)?;
            let system = tgt.rewriting.as_ref().ok_or_else(|| HomError::NoConfluentTarget(m.name.clone()))?;
            let src = lookup_p(cat, &m.source)?;
            let mut images = Vec::with_capacity(src.relations.len());
            for r in &src.relations {
                images.push((r.label.clone(), apply_chain(cat, m, &chain, &r.poly)?));
            }
            let mut names = alloc::vec![m.name.clone()];
            names.extend(chain.iter().cloned());
            Ok(MorphismPlan {
                name: m.name.clone(),
                checked: m.name.clone(),
                chain: names,
                system,
                reduced_in: tgt.name.clone(),
                images,
                inverse: None,
            })
        }
    }
}

/// Reduces every relation image; stops only on hard errors.
pub fn check_morphism<R: Resolver + ?Sized>(cat: &R, m: &AlgebraMorphism) -> Result<MorphismReport, HomError> {
    let plan = plan_morphism(cat, m)?;
    let mut rels = Vec::with_capacity(plan.images.len());
    for i in 0..plan.images.len() {
        rels.push(plan.reduce(i)?);
    }
    Ok(plan.finish(rels))
}

fn round_trip(got: &NcPoly, want: &NcPoly, rels: &[Relation]) -> RoundTrip {
    let d = got - want;
    if d.is_zero() {
        return RoundTrip::Exact;
    }
    for r in rels {
        if let Some((w, c)) = r.poly.terms().next() {
            if let Some(ci) = c.inv() {
                let k = &d.coeff(w) * &ci;
                if !k.is_zero() && k.is_monomial() && r.poly.scale(&k) == d {
                    return RoundTrip::ModRelation(r.label.clone());
                }
            }
        }
    }
    RoundTrip::Fails(d)
}

fn inverse_check<R: Resolver + ?Sized>(cat: &R, m: &AlgebraMorphism, inv: &AlgebraMorphism) -> Result<InverseCheck, HomError> {
    if inv.source != m.target || inv.target != m.source {
        return Err(HomError::ChainMismatch { from: m.name.clone(), to: inv.name.clone() });
    }
    let src = lookup_p(cat, &m.source)?;
    let tgt = lookup_p(cat, &m.target)?;
    let mut source_side = Vec::new();
    for l in src.alphabet.letters() {
        let got = inv.apply(&m.apply(&NcPoly::letter(l))?)?;
        source_side.push((src.alphabet.get(l).name.clone(), round_trip(&got, &NcPoly::letter(l), &src.relations)));
    }
    let mut target_side = Vec::new();
    for l in tgt.alphabet.letters() {
        let got = m.apply(&inv.apply(&NcPoly::letter(l))?)?;
        let mut rt = round_trip(&got, &NcPoly::letter(l), &tgt.relations);
        if let (RoundTrip::Fails(d), Some(sys)) = (&rt, &src.rewriting) {
            if sys.normal_form(&inv.apply(d)?)?.is_zero() {
                rt = RoundTrip::ModKernel;
            }
        }
        target_side.push((tgt.alphabet.get(l).name.clone(), rt));
    }
    Ok(InverseCheck { inverse: inv.name.clone(), source_side, target_side })
}

/// The generators `K`, `K^-1`, `E`, `F` of `U_q(sl2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ActionGen {
    K,
    Kinv,
    E,
    F,
}

/// Images of every generator under `E` and `F`; `K` is read off the weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionSpec {
    pub e: Vec<Option<NcPoly>>,
    pub f: Vec<Option<NcPoly>>,
}

impl ActionSpec {
    /// Tables for every reflection equation block `x.i.j` in `alpha`. The
    /// same tables are used on every block.
    pub fn reflection_blocks(alpha: &Alphabet) -> ActionSpec {
        let n = alpha.len();
        let mut e = alloc::vec![None; n];
        let mut f = alloc::vec![None; n];
        let mut blocks: Vec<String> = Vec::new();
        for g in alpha.gens() {
            if let Some(stem) = g.name.strip_suffix(".1.1") {
                blocks.push(stem.into());
            }
        }
        for b in blocks {
            let mut ls = [0 as Letter; 4];
            let mut ok = true;
            for (k, &(i, j)) in PAIRS.iter().enumerate() {
                match alpha.index(&entry_name(&b, i, j)) {
                    Some(l) => ls[k] = l,
                    None => ok = false,
                }
            }
            if !ok {
                continue;
            }
            let x = |k: usize| NcPoly::letter(ls[k]);
            let q = |n: i64| QLaurent::q(n);
            // E: x11 -> q^-1 x12, x12 -> 0, x21 -> q (x22 - x11), x22 -> -q x12
            e[ls[0] as usize] = Some(&q(-1) * &x(1));
            e[ls[1] as usize] = Some(NcPoly::zero());
            e[ls[2] as usize] = Some(&q(1) * &(&x(3) - &x(0)));
            e[ls[3] as usize] = Some(&-q(1) * &x(1));
            // F: x11 -> -q^-2 x21, x12 -> x11 - x22, x21 -> 0, x22 -> x21
            f[ls[0] as usize] = Some(&-q(-2) * &x(2));
            f[ls[1] as usize] = Some(&x(0) - &x(3));
            f[ls[2] as usize] = Some(NcPoly::zero());
            f[ls[3] as usize] = Some(x(2));
        }
        ActionSpec { e, f }
    }
}

fn weight_of(alpha: &Alphabet, ws: &[Letter]) -> i64 {
    ws.iter().map(|&l| alpha.get(l).weight as i64).sum()
}

/// `g . p`, using the coproducts `E -> E x 1 + K^-1 x E` and
/// `F -> F x K + 1 x F` letter by letter.
pub fn act(g: ActionGen, p: &NcPoly, spec: &ActionSpec, alpha: &Alphabet) -> Result<NcPoly, HomError> {
    let mut out = NcPoly::zero();
    for (w, c) in p.terms() {
        let ws = &w.0;
        match g {
            ActionGen::K | ActionGen::Kinv => {
                let s = if g == ActionGen::K { 2 } else { -2 };
                out.add_term(w.clone(), &c.shift(s * weight_of(alpha, ws)));
            }
            ActionGen::E | ActionGen::F => {
                let table = if g == ActionGen::E { &spec.e } else { &spec.f };
                for k in 0..ws.len() {
                    let img = table
                        .get(ws[k] as usize)
                        .and_then(|x| x.as_ref())
                        .ok_or_else(|| HomError::MissingAction(alpha.get(ws[k]).name.clone()))?;
                    if img.is_zero() {
                        continue;
                    }
                    let shift = if g == ActionGen::E {
                        -2 * weight_of(alpha, &ws[..k])
                    } else {
                        2 * weight_of(alpha, &ws[k + 1..])
                    };
                    let pre = NcPoly::word(Word(ws[..k].to_vec()));
                    let post = NcPoly::word(Word(ws[k + 1..].to_vec()));
                    let t = &(&pre * img) * &post;
                    out += &(&c.shift(shift) * &t);
                }
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvarianceReport {
    pub e_image: NcPoly,
    pub f_image: NcPoly,
    pub k_fixed: bool,
}

impl InvarianceReport {
    pub fn holds(&self) -> bool {
        self.e_image.is_zero() && self.f_image.is_zero() && self.k_fixed
    }
}

/// `E . p` and `F . p` reduced, and whether `K . p = p`.
pub fn is_invariant(p: &NcPoly, spec: &ActionSpec, sys: &ReductionSystem) -> Result<InvarianceReport, HomError> {
    let alpha = &sys.alphabet;
    let e_image = sys.normal_form(&act(ActionGen::E, p, spec, alpha)?)?;
    let f_image = sys.normal_form(&act(ActionGen::F, p, spec, alpha)?)?;
    let k_fixed = act(ActionGen::K, p, spec, alpha)? == *p;
    Ok(InvarianceReport { e_image, f_image, k_fixed })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralityReport {
    /// `(generator, normal form of p g - g p)`.
    pub commutators: Vec<(Letter, NcPoly)>,
}

impl CentralityReport {
    pub fn holds(&self) -> bool {
        self.commutators.iter().all(|(_, c)| c.is_zero())
    }
    pub fn failing(&self) -> Vec<Letter> {
        self.commutators.iter().filter(|(_, c)| !c.is_zero()).map(|(l, _)| *l).collect()
    }
}

/// Commutators of `p` with the given elements (generators when `with` is
/// `None`), reduced in `sys`.
pub fn centrality_check(p: &NcPoly, sys: &ReductionSystem, with: Option<&[Letter]>) -> Result<CentralityReport, HomError> {
    let all: Vec<Letter> = sys.alphabet.letters().collect();
    let ls = with.unwrap_or(&all);
    let mut commutators = Vec::with_capacity(ls.len());
    for &l in ls {
        let g = NcPoly::letter(l);
        let c = &(p * &g) - &(&g * p);
        commutators.push((l, sys.normal_form(&c)?));
    }
    Ok(CentralityReport { commutators })
}

/// Commutators of `p` with arbitrary elements.
pub fn commutes_with(p: &NcPoly, others: &[NcPoly], sys: &ReductionSystem) -> Result<Vec<NcPoly>, HomError> {
    others.iter().map(|o| Ok(sys.normal_form(&(&(p * o) - &(o * p)))?)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qsl2::{oq_sigma, Block, DetSign, QuantumMatrix};

    #[test]
    fn bracket_of_self() {
        let s = oq_sigma(DetSign::One);
        let a = s.alphabet.x("a.1.1");
        let want = &(&QLaurent::q(1) - &QLaurent::q(-1)) * &(&a * &a);
        assert_eq!(q_bracket(&a, &a), want);
    }

    #[test]
    fn action_examples() {
        let s = oq_sigma(DetSign::One);
        let al = &s.alphabet;
        let spec = ActionSpec::reflection_blocks(al);
        let a12 = al.x("a.1.2");
        assert_eq!(act(ActionGen::K, &a12, &spec, al).unwrap(), &QLaurent::q(2) * &a12);
        let e21 = act(ActionGen::E, &al.x("a.2.1"), &spec, al).unwrap();
        assert_eq!(e21, &QLaurent::q(1) * &(&al.x("a.2.2") - &al.x("a.1.1")));
        assert!(act(ActionGen::E, &NcPoly::one(), &spec, al).unwrap().is_zero());
        for l in al.letters() {
            let x = NcPoly::letter(l);
            let back = act(ActionGen::Kinv, &act(ActionGen::K, &x, &spec, al).unwrap(), &spec, al).unwrap();
            assert_eq!(back, x);
        }
    }

    #[test]
    fn trace_is_invariant_and_entries_are_not() {
        let s = oq_sigma(DetSign::One);
        let spec = ActionSpec::reflection_blocks(&s.alphabet);
        let b = Block::find(&s.alphabet, "a").unwrap();
        let tr = QuantumMatrix::of_block(&b).trace_q();
        assert!(is_invariant(&tr, &spec, &s).unwrap().holds());
        assert!(is_invariant(&(&tr * &tr), &spec, &s).unwrap().holds());
        assert!(!is_invariant(&b.x(1, 2), &spec, &s).unwrap().holds());
        assert!(centrality_check(&tr, &s, None).unwrap().holds());
        assert!(centrality_check(&NcPoly::one(), &s, None).unwrap().holds());
    }

    #[test]
    fn det_is_invariant_under_both_signs() {
        for det in [DetSign::One, DetSign::Printed] {
            let s = oq_sigma(det);
            let spec = ActionSpec::reflection_blocks(&s.alphabet);
            let b = Block::find(&s.alphabet, "a").unwrap();
            let d = QuantumMatrix::of_block(&b).det_q();
            assert!(is_invariant(&d, &spec, &s).unwrap().holds());
        }
    }

    #[test]
    fn scalar_map_rejects_half_lattice_exit() {
        let m = ScalarMap { num: 1, den: 2 };
        assert_eq!(m.apply(&QLaurent::q(1)).unwrap(), QLaurent::qh(1));
        assert!(m.apply(&QLaurent::qh(1)).is_err());
        assert_eq!(ScalarMap { num: 2, den: 1 }.image_of_q().unwrap(), QLaurent::q(2));
    }
}
