//! The fourteen acceptance checks, each with its own time limit.

use std::fmt::Display;
use std::time::{Duration, Instant};

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use qchar_core::catalog::Catalog;
use qchar_core::freealg::{word_grade, GradeMode, Letter};
use qchar_core::homcheck::{
    centrality_check, is_invariant, plan_morphism, ActionSpec, MorphismReport, Presentation,
};
use qchar_core::qsl2::{
    block_generators, cayley_hamilton_residual, compare_reflection, crossing_rules, standard_matrices, Block,
    BlockOrder, CrossingKind, QuantumMatrix,
};
use qchar_core::rewrite::{AmbiguityKind, ConfluenceReport, ReductionSystem};
use qchar_core::series::{
    compare_series, expand_closed_form, expand_univariate, invariant_hilbert, oq_character_spec,
    pbw_character_fast, pbw_graded_character, s04_hilbert_spec, t11_hilbert_spec, BiSeries, Comparison,
};
use qchar_core::{Alphabet, NcPoly, QLaurent, Word};

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("builtin `{0}` is missing from the catalog")]
    Missing(String),
    #[error("`{0}` has no rewriting system")]
    NoSystem(String),
    #[error("unknown stage `{0}`")]
    BadStage(String),
    #[error("{0}")]
    Engine(String),
}

fn eng<E: Display>(e: E) -> SuiteError {
    SuiteError::Engine(e.to_string())
}

pub const STAGES: &[(&str, &[u8])] = &[
    ("confluence", &[1, 2, 3, 4, 5]),
    ("relations", &[6]),
    ("morphisms", &[7, 8, 13]),
    ("invariance", &[9]),
    ("cayley-hamilton", &[10]),
    ("characters", &[11, 12]),
    ("strategy", &[14]),
];

/// Expands a comma-separated list of stage names and criterion numbers.
pub fn select(only: &str) -> Result<Vec<u8>, SuiteError> {
    let mut ids = Vec::new();
    for part in only.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if let Some((_, v)) = STAGES.iter().find(|(n, _)| *n == part) {
            ids.extend_from_slice(v);
        } else {
            match part.parse::<u8>() {
                Ok(n) if (1..=14).contains(&n) => ids.push(n),
                _ => return Err(SuiteError::BadStage(part.into())),
            }
        }
    }
    ids.sort_unstable();
    ids.dedup();
    if ids.is_empty() {
        return Err(SuiteError::BadStage(only.into()));
    }
    Ok(ids)
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub family_bound: usize,
    pub max_t: usize,
    pub seed: u64,
    pub samples: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { family_bound: 4, max_t: 8, seed: 0, samples: 100 }
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: u8,
    pub title: &'static str,
    /// Whether the mathematical check held, ignoring time.
    pub holds: bool,
    pub summary: String,
    pub details: Vec<String>,
    pub elapsed: Duration,
    pub limit: Duration,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.holds && self.elapsed <= self.limit
    }

    pub fn line(&self) -> String {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let slow = if self.holds && !self.passed() { ", over time" } else { "" };
        format!(
            "{} {:>2} {}: {} [{:.2}s / {}s{}]",
            verdict,
            self.id,
            self.title,
            self.summary,
            self.elapsed.as_secs_f64(),
            self.limit.as_secs(),
            slow
        )
    }

    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "title": self.title,
            "passed": self.passed(),
            "holds": self.holds,
            "summary": self.summary,
            "details": self.details,
            "seconds": self.elapsed.as_secs_f64(),
            "limit_seconds": self.limit.as_secs(),
        })
    }
}

pub const TITLES: [(&str, u64); 14] = [
    ("confluence of Oq-sigma", 5),
    ("confluence of Oq-tau", 5),
    ("confluence of T", 1),
    ("confluence of GB", 60),
    ("glued systems and PBW patterns", 60),
    ("reflection and crossing relations", 10),
    ("Phi and the centre of B", 600),
    ("Psi and the centre of T", 60),
    ("invariance of trace images", 60),
    ("Cayley-Hamilton", 10),
    ("graded characters", 60),
    ("invariant Hilbert series", 60),
    ("morphism suite", 600),
    ("strategy independence", 120),
];

fn pres<'a>(cat: &'a Catalog, name: &str) -> Result<&'a Presentation, SuiteError> {
    cat.get_presentation(name).ok_or_else(|| SuiteError::Missing(name.into()))
}

fn system<'a>(cat: &'a Catalog, name: &str) -> Result<&'a ReductionSystem, SuiteError> {
    pres(cat, name)?.rewriting.as_ref().ok_or_else(|| SuiteError::NoSystem(name.into()))
}

/// `check_confluence` with the ambiguities resolved in parallel; the result
/// keeps the sequential order.
pub fn confluence_par(sys: &ReductionSystem) -> ConfluenceReport {
    let compatibility = sys.check_compatibility();
    let termination = if compatibility.is_compatible() { None } else { sys.find_weight_order() };
    let results = sys
        .find_ambiguities()
        .into_par_iter()
        .map(|a| {
            let r = sys.check_ambiguity(&a);
            (a, r)
        })
        .collect();
    ConfluenceReport { compatibility, termination, results }
}

/// `check_morphism` with the relation images reduced in parallel.
pub fn morphism_par(cat: &Catalog, name: &str) -> Result<MorphismReport, SuiteError> {
    let m = cat.get_morphism(name).ok_or_else(|| SuiteError::Missing(name.into()))?;
    let plan = plan_morphism(cat, m).map_err(eng)?;
    let rels = (0..plan.images.len()).into_par_iter().map(|i| plan.reduce(i)).collect::<Result<Vec<_>, _>>().map_err(eng)?;
    Ok(plan.finish(rels))
}

fn confluence_summary(r: &ConfluenceReport) -> String {
    format!(
        "{} overlaps, {} inclusions, {} unresolved{}",
        r.count(AmbiguityKind::Overlap),
        r.count(AmbiguityKind::Inclusion),
        r.failures(),
        if r.is_terminating() { "" } else { ", no termination order" }
    )
}

/// Report lines worth showing: nothing for a confluent system, otherwise
/// everything except the resolvable ambiguities.
fn failing_lines(r: &ConfluenceReport, alpha: &Alphabet) -> Vec<String> {
    if r.is_confluent() {
        return Vec::new();
    }
    r.lines(alpha).into_iter().filter(|l| !l.ends_with("RESOLVABLE")).collect()
}

struct Partial {
    holds: bool,
    summary: String,
    details: Vec<String>,
}

fn partial(holds: bool, summary: String, details: Vec<String>) -> Result<Partial, SuiteError> {
    Ok(Partial { holds, summary, details })
}

fn confluence_case(cat: &Catalog, name: &str, want_overlaps: Option<usize>, want_total: Option<usize>) -> Result<Partial, SuiteError> {
    let sys = system(cat, name)?;
    let r = confluence_par(sys);
    let total = r.results.len();
    let holds = r.is_confluent()
        && want_overlaps.is_none_or(|n| r.count(AmbiguityKind::Overlap) == n && r.count(AmbiguityKind::Inclusion) == 0)
        && want_total.is_none_or(|n| total == n);
    partial(holds, confluence_summary(&r), failing_lines(&r, &sys.alphabet))
}

fn c4(cat: &Catalog, cfg: &SuiteConfig) -> Result<Partial, SuiteError> {
    pres(cat, "GB")?;
    let sys = system(cat, "GB")?.clone().with_family_bound(cfg.family_bound);
    let r = confluence_par(&sys);
    let plain = sys.rules().iter().filter(|r| !r.label.starts_with("central_")).count();
    let summary = format!(
        "{} rules and {} family instantiated at n <= {}: {} (all n not machine-checked)",
        plain,
        sys.families().len(),
        cfg.family_bound,
        confluence_summary(&r)
    );
    partial(r.is_confluent(), summary, failing_lines(&r, &sys.alphabet))
}

/// Coefficients of `((1+t)/(1-t)^3)^k`, the PBW count for `k` blocks.
fn pbw_counts(k: u32, max: usize) -> Result<Vec<i64>, SuiteError> {
    let closed = expand_closed_form(&oq_character_spec().pow(k), max).map_err(eng)?;
    Ok((0..=max).map(|n| closed.total(n)).collect())
}

fn c5(cat: &Catalog) -> Result<Partial, SuiteError> {
    let mut holds = true;
    let mut parts = Vec::new();
    let mut details = Vec::new();
    for name in ["A-s04", "A-t11"] {
        let sys = system(cat, name)?;
        let r = confluence_par(sys);
        let blocks = (sys.alphabet.len() / 4) as u32;
        let mut counts = vec![0i64; 5];
        for w in sys.reduced_monomials(4) {
            counts[word_grade(&w, GradeMode::Degree, &sys.alphabet) as usize] += 1;
        }
        let want = pbw_counts(blocks, 4)?;
        let pattern = pbw_character_fast(sys, 4, 4);
        let ok = r.is_confluent() && counts == want && pattern.is_ok();
        holds &= ok;
        parts.push(format!("{} {} ambiguities, counts {:?}", name, r.results.len(), counts));
        details.extend(failing_lines(&r, &sys.alphabet));
        if counts != want {
            details.push(format!("{} PBW counts expected {:?}", name, want));
        }
        if let Err(e) = pattern {
            details.push(format!("{} {}", name, e));
        }
    }
    partial(holds, parts.join("; "), details)
}

fn c6(cat: &Catalog) -> Result<Partial, SuiteError> {
    let mats = standard_matrices();
    let sys = system(cat, "Oq-sigma")?;
    let block = Block::find(&sys.alphabet, "a").map_err(eng)?;
    let cmp = compare_reflection(&sys.alphabet, &block, &mats);
    let mut details = Vec::new();
    for (k, m) in cmp.matches.iter().enumerate() {
        if m.is_none() {
            details.push(format!("displayed relation {} has no contraction match", k + 1));
        }
    }
    for s in &cmp.stray {
        details.push(format!("contraction relation {} does not reduce to 0", s));
    }
    let mut gens = block_generators("a", BlockOrder::Standard);
    gens.extend(block_generators("b", BlockOrder::Standard));
    let alpha = Alphabet::new(gens).map_err(eng)?;
    let (a, b) = (Block::find(&alpha, "a").map_err(eng)?, Block::find(&alpha, "b").map_err(eng)?);
    let mut crossing = 0;
    let mut integral = true;
    for kind in [CrossingKind::Unlinked, CrossingKind::Linked] {
        for r in crossing_rules(&a, &b, kind, &mats).map_err(eng)? {
            crossing += 1;
            if !r.relation().is_integral() {
                integral = false;
                details.push(format!("crossing rule {} has half-integer q-powers", r.label));
            }
        }
    }
    let summary = format!(
        "{}/6 reflection relations matched, {} stray, {} crossing rules {}",
        cmp.matches.iter().filter(|m| m.is_some()).count(),
        cmp.stray.len(),
        crossing,
        if integral { "integral" } else { "not integral" }
    );
    partial(cmp.agrees() && integral, summary, details)
}

fn images(cat: &Catalog, m: &str) -> Result<Vec<(String, NcPoly)>, SuiteError> {
    let mor = cat.get_morphism(m).ok_or_else(|| SuiteError::Missing(m.into()))?;
    let src = pres(cat, &mor.source)?;
    Ok(src.alphabet.letters().map(|l| (src.alphabet.get(l).name.clone(), mor.image(l).clone())).collect())
}

fn failed_relations(r: &MorphismReport) -> Vec<String> {
    r.relations.iter().filter(|x| !x.holds()).map(|x| x.label.clone()).collect()
}

/// Centrality of each named element; returns (commutators checked, failing `g:x` pairs).
fn centrality(elems: &[(String, NcPoly)], sys: &ReductionSystem) -> Result<(usize, Vec<String>), SuiteError> {
    let res: Vec<_> = elems.par_iter().map(|(g, p)| centrality_check(p, sys, None).map(|r| (g, r))).collect();
    let mut n = 0;
    let mut bad = Vec::new();
    for r in res {
        let (g, r) = r.map_err(eng)?;
        n += r.commutators.len();
        for l in r.failing() {
            bad.push(format!("{}:{}", g, sys.alphabet.get(l).name));
        }
    }
    Ok((n, bad))
}

fn c7(cat: &Catalog) -> Result<Partial, SuiteError> {
    let defn = morphism_par(cat, "GE-variant-defn")?.passed();
    let summ = morphism_par(cat, "GE-variant-summary")?.passed();
    let phi = morphism_par(cat, "Phi")?;
    let sys = system(cat, &phi.reduced_in)?;
    let params: Vec<_> = images(cat, "Phi")?.into_iter().filter(|(g, _)| ["s", "t", "u", "v"].contains(&g.as_str())).collect();
    let (n, bad) = centrality(&params, sys)?;
    let variant = match (defn, summ) {
        (true, false) => "definition form of GE singled out",
        (false, true) => "summary form of GE singled out",
        (true, true) => "both GE forms pass",
        (false, false) => "neither GE form passes",
    };
    let rel_fail = failed_relations(&phi);
    let summary = format!(
        "{}; {}/{} relations vanish; {}/{} commutators vanish",
        variant,
        phi.relations.len() - rel_fail.len(),
        phi.relations.len(),
        n - bad.len(),
        n
    );
    let mut details: Vec<String> = rel_fail.iter().map(|l| format!("relation {} does not vanish", l)).collect();
    if !bad.is_empty() {
        details.push(format!("nonzero commutators: {}", bad.join(" ")));
    }
    partial(defn != summ && phi.passed() && bad.is_empty(), summary, details)
}

fn c8(cat: &Catalog) -> Result<Partial, SuiteError> {
    let psi = morphism_par(cat, "Psi")?;
    let sys = system(cat, &psi.reduced_in)?;
    let t = pres(cat, "T")?;
    let l = t.derived("L").ok_or_else(|| SuiteError::Missing("T derived L".into()))?;
    let m = cat.get_morphism("Psi").ok_or_else(|| SuiteError::Missing("Psi".into()))?;
    let image = m.apply(l).map_err(eng)?;
    let (n, bad) = centrality(&[("L".into(), image)], sys)?;
    let rel_fail = failed_relations(&psi);
    let summary = format!(
        "{}/{} relations vanish; {}/{} commutators with Psi(L) vanish",
        psi.relations.len() - rel_fail.len(),
        psi.relations.len(),
        n - bad.len(),
        n
    );
    let mut details: Vec<String> = rel_fail.iter().map(|l| format!("relation {} does not vanish", l)).collect();
    if !bad.is_empty() {
        details.push(format!("nonzero commutators: {}", bad.join(" ")));
    }
    partial(psi.passed() && bad.is_empty(), summary, details)
}

fn c9(cat: &Catalog) -> Result<Partial, SuiteError> {
    let mut total = 0;
    let mut bad = Vec::new();
    for m in ["Phi", "Psi"] {
        let tgt = &cat.get_morphism(m).ok_or_else(|| SuiteError::Missing(m.into()))?.target;
        let sys = system(cat, tgt)?;
        let spec = ActionSpec::reflection_blocks(&sys.alphabet);
        let im = images(cat, m)?;
        let res: Vec<_> = im.par_iter().map(|(g, p)| is_invariant(p, &spec, sys).map(|r| (g, r))).collect();
        for r in res {
            let (g, r) = r.map_err(eng)?;
            total += 1;
            if !r.holds() {
                let mut why = Vec::new();
                if !r.e_image.is_zero() {
                    why.push("E");
                }
                if !r.f_image.is_zero() {
                    why.push("F");
                }
                if !r.k_fixed {
                    why.push("K");
                }
                bad.push(format!("{}({}) fails {}", m, g, why.join(",")));
            }
        }
    }
    partial(bad.is_empty(), format!("{}/{} images invariant", total - bad.len(), total), bad)
}

fn c10(cat: &Catalog) -> Result<Partial, SuiteError> {
    let sys = system(cat, "Oq-sigma")?;
    let a = QuantumMatrix::of_block(&Block::find(&sys.alphabet, "a").map_err(eng)?);
    let res = cayley_hamilton_residual(&a, sys).map_err(eng)?;
    let bad: Vec<String> = res
        .entries()
        .enumerate()
        .filter(|(_, e)| !e.is_zero())
        .map(|(k, e)| format!("entry ({},{}): {}", k / 2 + 1, k % 2 + 1, e.display(&sys.alphabet)))
        .collect();
    partial(bad.is_empty(), format!("{}/4 residual entries reduce to 0", 4 - bad.len()), bad)
}

const CHARACTER_SYSTEMS: [(&str, u32); 3] = [("Oq-sigma", 1), ("A-t11", 2), ("A-s04", 3)];

/// Enumeration depth for the direct cross-check of the fast count.
fn enumeration_depth(blocks: u32, max_t: usize) -> usize {
    max_t.min(if blocks >= 3 { 6 } else { 8 })
}

fn describe(c: &Comparison) -> String {
    match c {
        Comparison::Pass => "agree".into(),
        Comparison::Mismatch { t, u, left, right } => format!("differ at t^{} u^{}: {} vs {}", t, u, left, right),
    }
}

fn c11(cat: &Catalog, cfg: &SuiteConfig) -> Result<Partial, SuiteError> {
    let mut holds = true;
    let mut parts = Vec::new();
    let mut details = Vec::new();
    for (name, k) in CHARACTER_SYSTEMS {
        let sys = system(cat, name)?;
        let closed = expand_closed_form(&oq_character_spec().pow(k), cfg.max_t).map_err(eng)?;
        let counted = match pbw_character_fast(sys, cfg.max_t, 4) {
            Ok(c) => c,
            Err(e) => {
                holds = false;
                details.push(format!("{}: {}", name, e));
                continue;
            }
        };
        let cmp = compare_series(&counted, &closed).map_err(eng)?;
        let depth = enumeration_depth(k, cfg.max_t);
        let direct = compare_series(&pbw_graded_character(sys, depth), &closed.truncate(depth)).map_err(eng)?;
        holds &= cmp.passed() && direct.passed();
        parts.push(format!("power {} {}", k, describe(&cmp)));
        if !direct.passed() {
            details.push(format!("{}: enumeration to t^{} {}", name, depth, describe(&direct)));
        }
    }
    partial(holds, format!("{} up to t^{}", parts.join(", "), cfg.max_t), details)
}

fn c12(cat: &Catalog, cfg: &SuiteConfig) -> Result<Partial, SuiteError> {
    let mut holds = true;
    let mut parts = Vec::new();
    let mut details = Vec::new();
    for (name, spec, head) in [("A-s04", s04_hilbert_spec(), [1i64, 3, 9, 20, 42]), ("A-t11", t11_hilbert_spec(), [1, 2, 4, 6, 9])] {
        let sys = system(cat, name)?;
        let ch: BiSeries = pbw_character_fast(sys, cfg.max_t, 4).map_err(eng)?;
        let counted = invariant_hilbert(&ch);
        let divided = expand_univariate(&spec, cfg.max_t).map_err(eng)?;
        let agree = counted.coeffs == divided.coeffs;
        let n = head.len().min(counted.coeffs.len());
        let lead = counted.coeffs[..n] == head[..n];
        holds &= agree && lead;
        parts.push(format!("{}: {}", name, counted));
        if !agree {
            details.push(format!("{}: counted {} but long division gives {}", name, counted, divided));
        }
        if !lead {
            details.push(format!("{}: expected to start {:?}", name, head));
        }
    }
    partial(holds, parts.join("; "), details)
}

pub const MORPHISM_SUITE: [&str; 8] = ["alpha", "beta", "gamma", "delta", "iota", "kappa", "mu", "nu"];

fn c13(cat: &Catalog) -> Result<Partial, SuiteError> {
    let reports: Vec<_> = MORPHISM_SUITE.par_iter().map(|m| morphism_par(cat, m)).collect();
    let mut ok = Vec::new();
    let mut details = Vec::new();
    for (m, r) in MORPHISM_SUITE.iter().zip(reports) {
        let r = r?;
        if r.passed() {
            ok.push(*m);
        } else {
            let alpha = &system(cat, &r.reduced_in)?.alphabet;
            details.extend(r.lines(alpha).into_iter().filter(|l| l.contains("FAIL") || l.starts_with("MORPHISM")));
        }
    }
    partial(ok.len() == MORPHISM_SUITE.len(), format!("{}/{} pass", ok.len(), MORPHISM_SUITE.len()), details)
}

/// A random polynomial of degree at most `max_deg` with small Laurent coefficients.
pub fn random_poly(rng: &mut ChaCha8Rng, alpha: &Alphabet, max_deg: usize) -> NcPoly {
    let n = alpha.len() as u64;
    let mut p = NcPoly::zero();
    let terms = 1 + rng.next_u64() % 4;
    for _ in 0..terms {
        let len = (rng.next_u64() % (max_deg as u64 + 1)) as usize;
        let mut w = Vec::with_capacity(len);
        for _ in 0..len {
            let mut cand = w.clone();
            cand.push((rng.next_u64() % n) as Letter);
            let cand = Word(cand);
            if word_grade(&cand, GradeMode::Degree, alpha) as usize <= max_deg {
                w = cand.0;
            }
        }
        let c = (rng.next_u64() % 7) as i64 - 3;
        let e = (rng.next_u64() % 5) as i64 - 2;
        p.add_term(Word(w), &QLaurent::int(if c == 0 { 1 } else { c }).shift(2 * e));
    }
    p
}

fn c14(cat: &Catalog, cfg: &SuiteConfig) -> Result<Partial, SuiteError> {
    let names: Vec<String> = cat
        .presentation_names()
        .filter(|n| cat.get_presentation(n).is_some_and(|p| p.rewriting.is_some()))
        .map(String::from)
        .collect();
    let confluent: Vec<(String, &ReductionSystem)> = names
        .par_iter()
        .filter_map(|n| {
            let sys = cat.get_presentation(n)?.rewriting.as_ref()?;
            confluence_par(sys).is_confluent().then(|| (n.clone(), sys))
        })
        .collect();
    let results: Vec<Result<Vec<String>, SuiteError>> = confluent
        .par_iter()
        .enumerate()
        .map(|(k, (name, sys))| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(k as u64));
            let mut bad = Vec::new();
            for i in 0..cfg.samples {
                let p = random_poly(&mut rng, &sys.alphabet, 6);
                let det = sys.normal_form(&p).map_err(eng)?;
                let rnd = sys.random_strategy_nf(&p, rng.next_u64()).map_err(eng)?;
                if det != rnd {
                    bad.push(format!("{} sample {}: {}", name, i, p.display(&sys.alphabet)));
                }
            }
            Ok(bad)
        })
        .collect();
    let mut details = Vec::new();
    for r in results {
        details.extend(r?);
    }
    let shown: Vec<&str> = confluent.iter().map(|(n, _)| n.as_str()).collect();
    let summary = format!(
        "{} samples on each of {} confluent systems ({}), {} disagreements",
        cfg.samples,
        confluent.len(),
        shown.join(" "),
        details.len()
    );
    partial(details.is_empty() && !confluent.is_empty(), summary, details)
}

/// Runs one criterion.
pub fn run_one(cat: &Catalog, cfg: &SuiteConfig, id: u8) -> Result<Outcome, SuiteError> {
    let (title, secs) = TITLES[(id - 1) as usize];
    let start = Instant::now();
    let p = match id {
        1 => confluence_case(cat, "Oq-sigma", Some(8), None)?,
        2 => confluence_case(cat, "Oq-tau", None, Some(8))?,
        3 => confluence_case(cat, "T", None, Some(1))?,
        4 => c4(cat, cfg)?,
        5 => c5(cat)?,
        6 => c6(cat)?,
        7 => c7(cat)?,
        8 => c8(cat)?,
        9 => c9(cat)?,
        10 => c10(cat)?,
        11 => c11(cat, cfg)?,
        12 => c12(cat, cfg)?,
        13 => c13(cat)?,
        14 => c14(cat, cfg)?,
        _ => return Err(SuiteError::BadStage(id.to_string())),
    };
    Ok(Outcome {
        id,
        title,
        holds: p.holds,
        summary: p.summary,
        details: p.details,
        elapsed: start.elapsed(),
        limit: Duration::from_secs(secs),
    })
}

/// Runs the selected criteria in order. A missing builtin aborts the run.
pub fn run(cat: &Catalog, cfg: &SuiteConfig, ids: &[u8]) -> Result<Vec<Outcome>, SuiteError> {
    ids.iter().map(|&id| run_one(cat, cfg, id)).collect()
}
