//! Reduction systems, normal forms and Diamond-lemma ambiguity checks.

use alloc::borrow::Cow;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::cmp::Ordering;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::freealg::{reduced_degree_compare, word_grade, Alphabet, GradeMode, Letter, NcPoly, RdOrder, Word};
use crate::scalar::QLaurent;

pub const DEFAULT_STEP_BUDGET: u64 = 1_000_000;
pub const DEFAULT_FAMILY_BOUND: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub label: String,
    pub lhs: Word,
    pub rhs: NcPoly,
}

impl RewriteRule {
    pub fn new(label: &str, lhs: Word, rhs: NcPoly) -> Self {
        RewriteRule { label: label.into(), lhs, rhs }
    }
    /// The relation `lhs - rhs`.
    pub fn relation(&self) -> NcPoly {
        &NcPoly::word(self.lhs.clone()) - &self.rhs
    }
}

/// Computes `f(n)` from `f(n-1)` (absent for `n = 1`).
pub type FamilyStep = fn(n: usize, prev: Option<&NcPoly>, alpha: &Alphabet) -> NcPoly;

/// Rules `prefix * repeat^n * suffix -> f(n)` for every `n >= 1`.
#[derive(Clone)]
pub struct ParametricFamily {
    pub label: String,
    pub prefix: Word,
    pub repeat: Letter,
    pub suffix: Word,
    step: FamilyStep,
    cache: Vec<NcPoly>,
}

impl fmt::Debug for ParametricFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ParametricFamily").field("label", &self.label).field("cached", &self.cache.len()).finish()
    }
}

impl ParametricFamily {
    pub fn new(label: &str, prefix: Word, repeat: Letter, suffix: Word, step: FamilyStep) -> Self {
        ParametricFamily { label: label.into(), prefix, repeat, suffix, step, cache: Vec::new() }
    }

    fn fill(&mut self, upto: usize, alpha: &Alphabet) {
        while self.cache.len() < upto {
            let n = self.cache.len() + 1;
            let next = (self.step)(n, self.cache.last(), alpha);
            self.cache.push(next);
        }
    }

    pub fn lhs(&self, n: usize) -> Word {
        let mut v = self.prefix.0.clone();
        v.extend(core::iter::repeat_n(self.repeat, n));
        v.extend_from_slice(&self.suffix.0);
        Word(v)
    }

    /// `f(n)`; values past the cache are rebuilt from the last cached one.
    pub fn rhs(&self, n: usize, alpha: &Alphabet) -> Cow<'_, NcPoly> {
        if n >= 1 && n <= self.cache.len() {
            return Cow::Borrowed(&self.cache[n - 1]);
        }
        let mut cur = self.cache.last().cloned();
        for k in self.cache.len() + 1..=n {
            cur = Some((self.step)(k, cur.as_ref(), alpha));
        }
        Cow::Owned(cur.unwrap_or_default())
    }

    pub fn instance_label(&self, n: usize) -> String {
        alloc::format!("{}[{}]", self.label, n)
    }

    pub fn instance(&self, n: usize, alpha: &Alphabet) -> RewriteRule {
        RewriteRule { label: self.instance_label(n), lhs: self.lhs(n), rhs: self.rhs(n, alpha).into_owned() }
    }

    /// Smallest `n` whose left-hand side starts at `pos`, with its length.
    pub fn match_at(&self, w: &[Letter], pos: usize) -> Option<(usize, usize)> {
        let p = &self.prefix.0;
        if !w[pos..].starts_with(p) {
            return None;
        }
        let mut i = pos + p.len();
        let mut n = 0;
        while i < w.len() && w[i] == self.repeat {
            n += 1;
            i += 1;
            if w[i..].starts_with(&self.suffix.0) {
                return Some((n, p.len() + n + self.suffix.len()));
            }
        }
        None
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RewriteError {
    StepBudget(u64),
    DuplicateLabel(String),
    BadRule(String),
    UnknownLabel(String),
}

impl fmt::Display for RewriteError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RewriteError::StepBudget(n) => write!(f, "step budget of {} rewrites exceeded", n),
            RewriteError::DuplicateLabel(l) => write!(f, "duplicate rule label `{}`", l),
            RewriteError::BadRule(l) => write!(f, "rule `{}` needs a left-hand side of length at least 2", l),
            RewriteError::UnknownLabel(l) => write!(f, "unknown rule `{}`", l),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum RuleRef {
    Rule(usize),
    Family(usize),
}

#[derive(Clone, Debug)]
pub struct ReductionSystem {
    pub alphabet: Alphabet,
    rules: Vec<RewriteRule>,
    families: Vec<ParametricFamily>,
    pub family_bound: usize,
    pub step_budget: u64,
    /// Candidate rules by first letter, in label order.
    index: Vec<Vec<RuleRef>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Redex {
    pos: usize,
    len: usize,
    rule: RuleRef,
    n: usize,
}

impl ReductionSystem {
    /// Builds the system and adds the swap rules `g z -> z g` for every
    /// central `z` and every later generator `g`.
    pub fn new(
        alphabet: Alphabet,
        rules: Vec<RewriteRule>,
        families: Vec<ParametricFamily>,
        family_bound: usize,
    ) -> Result<Self, RewriteError> {
        let mut rules = rules;
        let mut seen: BTreeMap<Word, ()> = rules.iter().map(|r| (r.lhs.clone(), ())).collect();
        for z in alphabet.letters() {
            if !alphabet.get(z).central {
                continue;
            }
            for g in z + 1..alphabet.len() as Letter {
                let lhs = Word(alloc::vec![g, z]);
                if seen.contains_key(&lhs) {
                    continue;
                }
                seen.insert(lhs.clone(), ());
                let label = alloc::format!("central_{}_{}", alphabet.get(g).name, alphabet.get(z).name);
                rules.push(RewriteRule::new(&label, lhs, NcPoly::word(Word(alloc::vec![z, g]))));
            }
        }
        Self::from_parts(alphabet, rules, families, family_bound)
    }

    /// Like `new` but without the automatic central swaps.
    pub fn from_parts(
        alphabet: Alphabet,
        mut rules: Vec<RewriteRule>,
        mut families: Vec<ParametricFamily>,
        family_bound: usize,
    ) -> Result<Self, RewriteError> {
        rules.sort_by(|a, b| a.label.cmp(&b.label));
        families.sort_by(|a, b| a.label.cmp(&b.label));
        for w in rules.windows(2) {
            if w[0].label == w[1].label {
                return Err(RewriteError::DuplicateLabel(w[0].label.clone()));
            }
        }
        for r in &rules {
            if r.lhs.len() < 2 {
                return Err(RewriteError::BadRule(r.label.clone()));
            }
        }
        for f in families.iter_mut() {
            if rules.iter().any(|r| r.label == f.label) {
                return Err(RewriteError::DuplicateLabel(f.label.clone()));
            }
            f.fill(family_bound.max(1), &alphabet);
        }
        let mut s = ReductionSystem {
            alphabet,
            rules,
            families,
            family_bound,
            step_budget: DEFAULT_STEP_BUDGET,
            index: Vec::new(),
        };
        s.reindex();
        Ok(s)
    }

    fn reindex(&mut self) {
        let mut index = alloc::vec![Vec::new(); self.alphabet.len()];
        let mut all: Vec<(&str, RuleRef)> = Vec::new();
        for (i, r) in self.rules.iter().enumerate() {
            all.push((&r.label, RuleRef::Rule(i)));
        }
        for (i, f) in self.families.iter().enumerate() {
            all.push((&f.label, RuleRef::Family(i)));
        }
        all.sort_by(|a, b| a.0.cmp(b.0));
        for (_, r) in all {
            let first = match r {
                RuleRef::Rule(i) => self.rules[i].lhs.0[0],
                RuleRef::Family(i) => {
                    let f = &self.families[i];
                    *f.prefix.0.first().unwrap_or(&f.repeat)
                }
            };
            index[first as usize].push(r);
        }
        self.index = index;
    }

    pub fn with_step_budget(mut self, budget: u64) -> Self {
        self.step_budget = budget;
        self
    }

    pub fn with_family_bound(mut self, bound: usize) -> Self {
        self.family_bound = bound;
        let alpha = self.alphabet.clone();
        for f in self.families.iter_mut() {
            f.fill(bound.max(1), &alpha);
        }
        self
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn families(&self) -> &[ParametricFamily] {
        &self.families
    }

    /// Concrete rules followed by the family instances up to the bound.
    pub fn instantiated_rules(&self) -> Vec<RewriteRule> {
        let mut out = self.rules.clone();
        for f in &self.families {
            for n in 1..=self.family_bound {
                out.push(f.instance(n, &self.alphabet));
            }
        }
        out.sort_by(|a, b| a.label.cmp(&b.label));
        out
    }

    pub fn rule(&self, label: &str) -> Result<RewriteRule, RewriteError> {
        if let Some(r) = self.rules.iter().find(|r| r.label == label) {
            return Ok(r.clone());
        }
        for f in &self.families {
            if let Some(rest) = label.strip_prefix(f.label.as_str()) {
                let n = rest.strip_prefix('[').and_then(|r| r.strip_suffix(']')).and_then(|n| n.parse::<usize>().ok());
                if let Some(n) = n.filter(|n| *n >= 1) {
                    return Ok(f.instance(n, &self.alphabet));
                }
            }
        }
        Err(RewriteError::UnknownLabel(label.into()))
    }

    fn match_ref(&self, r: RuleRef, w: &[Letter], pos: usize) -> Option<(usize, usize)> {
        match r {
            RuleRef::Rule(i) => {
                let lhs = &self.rules[i].lhs.0;
                if w[pos..].starts_with(lhs) {
                    Some((0, lhs.len()))
                } else {
                    None
                }
            }
            RuleRef::Family(i) => self.families[i].match_at(w, pos),
        }
    }

    fn first_redex(&self, w: &[Letter]) -> Option<Redex> {
        for pos in 0..w.len() {
            for r in &self.index[w[pos] as usize] {
                if let Some((n, len)) = self.match_ref(*r, w, pos) {
                    return Some(Redex { pos, len, rule: *r, n });
                }
            }
        }
        None
    }

    fn all_redexes(&self, w: &[Letter]) -> Vec<Redex> {
        let mut out = Vec::new();
        for pos in 0..w.len() {
            for r in &self.index[w[pos] as usize] {
                if let Some((n, len)) = self.match_ref(*r, w, pos) {
                    out.push(Redex { pos, len, rule: *r, n });
                }
            }
        }
        out
    }

    fn rhs_of(&self, r: &Redex) -> Cow<'_, NcPoly> {
        match r.rule {
            RuleRef::Rule(i) => Cow::Borrowed(&self.rules[i].rhs),
            RuleRef::Family(i) => self.families[i].rhs(r.n, &self.alphabet),
        }
    }

    /// True when no rule applies anywhere in `w`.
    pub fn is_reduced(&self, w: &Word) -> bool {
        self.first_redex(&w.0).is_none()
    }

    fn apply(&self, w: &[Letter], c: &QLaurent, r: &Redex, work: &mut BTreeMap<Word, QLaurent>) {
        let pre = &w[..r.pos];
        let post = &w[r.pos + r.len..];
        for (rw, rc) in self.rhs_of(r).terms() {
            let mut v = Vec::with_capacity(pre.len() + rw.len() + post.len());
            v.extend_from_slice(pre);
            v.extend_from_slice(&rw.0);
            v.extend_from_slice(post);
            add_into(work, Word(v), &(c * rc));
        }
    }

    /// Leftmost redex, first rule in label order, until nothing applies.
    pub fn normal_form(&self, p: &NcPoly) -> Result<NcPoly, RewriteError> {
        let mut work: BTreeMap<Word, QLaurent> = p.clone().into_terms();
        let mut done = NcPoly::zero();
        let mut steps = 0u64;
        while let Some((w, c)) = work.pop_last() {
            match self.first_redex(&w.0) {
                None => done.add_term(w, &c),
                Some(r) => {
                    steps += 1;
                    if steps > self.step_budget {
                        return Err(RewriteError::StepBudget(self.step_budget));
                    }
                    self.apply(&w.0, &c, &r, &mut work);
                }
            }
        }
        Ok(done)
    }

    /// Reduces with redexes and terms picked at random.
    pub fn random_strategy_nf(&self, p: &NcPoly, seed: u64) -> Result<NcPoly, RewriteError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut work: BTreeMap<Word, QLaurent> = p.clone().into_terms();
        let mut done = NcPoly::zero();
        let mut steps = 0u64;
        while !work.is_empty() {
            let k = (rng.next_u64() % work.len() as u64) as usize;
            let w = work.keys().nth(k).cloned().unwrap_or_default();
            let c = work.remove(&w).unwrap_or_default();
            let rs = self.all_redexes(&w.0);
            if rs.is_empty() {
                done.add_term(w, &c);
                continue;
            }
            steps += 1;
            if steps > self.step_budget {
                return Err(RewriteError::StepBudget(self.step_budget));
            }
            let r = rs[(rng.next_u64() % rs.len() as u64) as usize];
            self.apply(&w.0, &c, &r, &mut work);
        }
        Ok(done)
    }

    /// Overlap and inclusion ambiguities among the instantiated rules.
    pub fn find_ambiguities(&self) -> Vec<Ambiguity> {
        let rules = self.instantiated_rules();
        let mut out = Vec::new();
        for s in &rules {
            for t in &rules {
                let (ws, wt) = (&s.lhs.0, &t.lhs.0);
                for k in 1..ws.len().min(wt.len()) {
                    if ws[ws.len() - k..] == wt[..k] {
                        out.push(Ambiguity {
                            kind: AmbiguityKind::Overlap,
                            sigma: s.label.clone(),
                            tau: t.label.clone(),
                            a: Word::from(&ws[..ws.len() - k]),
                            b: Word::from(&wt[..k]),
                            c: Word::from(&wt[k..]),
                        });
                    }
                }
                if s.label != t.label && ws.len() <= wt.len() {
                    for p in 0..=wt.len() - ws.len() {
                        if wt[p..p + ws.len()] == ws[..] {
                            out.push(Ambiguity {
                                kind: AmbiguityKind::Inclusion,
                                sigma: s.label.clone(),
                                tau: t.label.clone(),
                                a: Word::from(&wt[..p]),
                                b: s.lhs.clone(),
                                c: Word::from(&wt[p + ws.len()..]),
                            });
                        }
                    }
                }
            }
        }
        out
    }

    pub fn check_ambiguity(&self, amb: &Ambiguity) -> Result<AmbiguityOutcome, RewriteError> {
        let s = self.rule(&amb.sigma)?;
        let t = self.rule(&amb.tau)?;
        let (a, c) = (NcPoly::word(amb.a.clone()), NcPoly::word(amb.c.clone()));
        let (left, right) = match amb.kind {
            AmbiguityKind::Overlap => (&s.rhs * &c, &a * &t.rhs),
            AmbiguityKind::Inclusion => (&(&a * &s.rhs) * &c, t.rhs.clone()),
        };
        let left = self.normal_form(&left)?;
        let right = self.normal_form(&right)?;
        Ok(AmbiguityOutcome { resolvable: left == right, left, right })
    }

    /// Every right-hand monomial must be shorter than the left-hand side, or
    /// of equal length and not greater in the reduced-degree order.
    pub fn check_compatibility(&self) -> CompatibilityReport {
        let mut violations = Vec::new();
        for r in self.instantiated_rules() {
            let lhs = NcPoly::word(r.lhs.clone());
            for (w, _) in r.rhs.terms() {
                let bad = if w.len() > r.lhs.len() {
                    Some(CompatIssue::LengthGrows)
                } else if w.len() == r.lhs.len() {
                    match reduced_degree_compare(&NcPoly::word(w.clone()), &lhs, &self.alphabet) {
                        Ok(RdOrder::Greater) | Ok(RdOrder::Incomparable) => Some(CompatIssue::NotSmaller),
                        Ok(_) => None,
                        Err(_) => Some(CompatIssue::ForeignLetter),
                    }
                } else if w.0.iter().any(|l| *l as usize >= self.alphabet.len()) {
                    Some(CompatIssue::ForeignLetter)
                } else {
                    None
                };
                if let Some(issue) = bad {
                    violations.push(CompatViolation { label: r.label.clone(), monomial: w.clone(), issue });
                }
            }
        }
        CompatibilityReport { violations }
    }

    /// A weighted degree-lexicographic order under which every right-hand
    /// monomial is smaller than its left-hand side. Such an order is a
    /// monomial order with descending chain condition, so it certifies
    /// termination when the reduced-degree preorder cannot. Tries unit
    /// weights first, then weights in {1, 2} for alphabets of at most 14
    /// generators.
    pub fn find_weight_order(&self) -> Option<WeightOrder> {
        let rules = self.instantiated_rules();
        let n = self.alphabet.len();
        let fits = |wo: &WeightOrder| {
            rules.iter().all(|r| r.rhs.terms().all(|(w, _)| wo.compare(w, &r.lhs) == Ordering::Less))
        };
        let limit: u64 = if n <= 14 { 1u64 << n } else { 1 };
        for mask in 0..limit {
            let weights = (0..n).map(|i| if mask >> i & 1 == 1 { 2 } else { 1 }).collect();
            let wo = WeightOrder { weights };
            if fits(&wo) {
                return Some(wo);
            }
        }
        None
    }

    pub fn check_confluence(&self) -> ConfluenceReport {
        let compatibility = self.check_compatibility();
        let termination = if compatibility.is_compatible() { None } else { self.find_weight_order() };
        let results = self
            .find_ambiguities()
            .into_iter()
            .map(|a| {
                let r = self.check_ambiguity(&a);
                (a, r)
            })
            .collect();
        ConfluenceReport { compatibility, termination, results }
    }

    /// Words of degree at most `max_degree` avoiding every left-hand side,
    /// in length-then-lex order. Words are also capped at `max_degree`
    /// letters so that degree-zero generators cannot make this infinite.
    pub fn reduced_monomials(&self, max_degree: usize) -> Vec<Word> {
        let mut out = alloc::vec![Word::empty()];
        let mut frontier = alloc::vec![Word::empty()];
        for _ in 0..max_degree {
            let mut next = Vec::new();
            for w in &frontier {
                for l in self.alphabet.letters() {
                    let mut v = w.0.clone();
                    v.push(l);
                    let nw = Word(v);
                    if word_grade(&nw, GradeMode::Degree, &self.alphabet) as usize > max_degree {
                        continue;
                    }
                    if self.redex_at_end(&nw.0) {
                        continue;
                    }
                    next.push(nw);
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    fn redex_at_end(&self, w: &[Letter]) -> bool {
        for pos in (0..w.len()).rev() {
            for r in &self.index[w[pos] as usize] {
                if let Some((_, len)) = self.match_ref(*r, w, pos) {
                    if pos + len == w.len() {
                        return true;
                    }
                }
            }
        }
        false
    }
}

fn add_into(work: &mut BTreeMap<Word, QLaurent>, w: Word, c: &QLaurent) {
    if c.is_zero() {
        return;
    }
    match work.get_mut(&w) {
        Some(v) => {
            *v += c;
            if v.is_zero() {
                work.remove(&w);
            }
        }
        None => {
            work.insert(w, c.clone());
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AmbiguityKind {
    Overlap,
    Inclusion,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ambiguity {
    pub kind: AmbiguityKind,
    pub sigma: String,
    pub tau: String,
    pub a: Word,
    pub b: Word,
    pub c: Word,
}

impl Ambiguity {
    pub fn word(&self) -> Word {
        self.a.concat(&self.b).concat(&self.c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmbiguityOutcome {
    pub resolvable: bool,
    pub left: NcPoly,
    pub right: NcPoly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompatIssue {
    LengthGrows,
    NotSmaller,
    ForeignLetter,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatViolation {
    pub label: String,
    pub monomial: Word,
    pub issue: CompatIssue,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CompatibilityReport {
    pub violations: Vec<CompatViolation>,
}

impl CompatibilityReport {
    pub fn is_compatible(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Compare by total weight, then lexicographically in the alphabet order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightOrder {
    pub weights: Vec<u32>,
}

impl WeightOrder {
    pub fn weight(&self, w: &Word) -> u64 {
        w.0.iter().map(|&l| self.weights[l as usize] as u64).sum()
    }
    pub fn compare(&self, a: &Word, b: &Word) -> Ordering {
        self.weight(a).cmp(&self.weight(b)).then_with(|| a.0.cmp(&b.0))
    }
}

#[derive(Clone, Debug)]
pub struct ConfluenceReport {
    pub compatibility: CompatibilityReport,
    /// Fallback termination certificate, searched only when the
    /// reduced-degree check reports violations.
    pub termination: Option<WeightOrder>,
    pub results: Vec<(Ambiguity, Result<AmbiguityOutcome, RewriteError>)>,
}

impl ConfluenceReport {
    pub fn is_terminating(&self) -> bool {
        self.compatibility.is_compatible() || self.termination.is_some()
    }
    pub fn all_resolvable(&self) -> bool {
        self.results.iter().all(|(_, r)| matches!(r, Ok(o) if o.resolvable))
    }
    pub fn is_confluent(&self) -> bool {
        self.is_terminating() && self.all_resolvable()
    }
    pub fn count(&self, kind: AmbiguityKind) -> usize {
        self.results.iter().filter(|(a, _)| a.kind == kind).count()
    }
    pub fn failures(&self) -> usize {
        self.results.iter().filter(|(_, r)| !matches!(r, Ok(o) if o.resolvable)).count()
    }
    /// `AMB sigma tau A|B|C RESOLVABLE|FAIL` lines, with witnesses on failure.
    pub fn lines(&self, alpha: &Alphabet) -> Vec<String> {
        let mut out = Vec::new();
        let tag = if self.termination.is_some() { "RD-VIOLATION" } else { "INCOMPATIBLE" };
        for v in &self.compatibility.violations {
            out.push(alloc::format!("{} {} {} {:?}", tag, v.label, alpha.word_str(&v.monomial), v.issue));
        }
        if let Some(wo) = &self.termination {
            let ws: Vec<String> =
                alpha.gens().iter().zip(&wo.weights).map(|(g, w)| alloc::format!("{}={}", g.name, w)).collect();
            out.push(alloc::format!("ORDER weighted-deglex {}", ws.join(" ")));
        }
        for (a, r) in &self.results {
            let words = alloc::format!("{}|{}|{}", alpha.word_str(&a.a), alpha.word_str(&a.b), alpha.word_str(&a.c));
            let kind = match a.kind {
                AmbiguityKind::Overlap => "",
                AmbiguityKind::Inclusion => " INCLUSION",
            };
            match r {
                Ok(o) if o.resolvable => out.push(alloc::format!("AMB {} {} {}{} RESOLVABLE", a.sigma, a.tau, words, kind)),
                Ok(o) => {
                    out.push(alloc::format!("AMB {} {} {}{} FAIL", a.sigma, a.tau, words, kind));
                    out.push(alloc::format!("  left:  {}", o.left.display(alpha)));
                    out.push(alloc::format!("  right: {}", o.right.display(alpha)));
                }
                Err(e) => out.push(alloc::format!("AMB {} {} {}{} FAIL ({})", a.sigma, a.tau, words, kind, e)),
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::Generator;

    fn ab() -> Alphabet {
        Alphabet::new(alloc::vec![Generator::new("a"), Generator::new("b")]).unwrap()
    }

    #[test]
    fn single_rule_has_no_ambiguity() {
        let a = ab();
        let s = ReductionSystem::new(a.clone(), alloc::vec![RewriteRule::new("r", Word(alloc::vec![0, 1]), a.x("b"))], alloc::vec![], 0)
            .unwrap();
        assert!(s.find_ambiguities().is_empty());
    }

    #[test]
    fn textbook_overlap_resolves() {
        // ab -> ba, ba -> a, examined on aba
        let a = ab();
        let rules = alloc::vec![
            RewriteRule::new("r1", Word(alloc::vec![0, 1]), NcPoly::word(Word(alloc::vec![1, 0]))),
            RewriteRule::new("r2", Word(alloc::vec![1, 0]), a.x("a")),
        ];
        let s = ReductionSystem::new(a.clone(), rules, alloc::vec![], 0).unwrap();
        let ambs = s.find_ambiguities();
        let amb = ambs.iter().find(|x| x.word() == Word(alloc::vec![0, 1, 0])).unwrap();
        let o = s.check_ambiguity(amb).unwrap();
        assert!(o.resolvable);
        assert_eq!(o.left, &a.x("a") * &a.x("a"));
    }

    #[test]
    fn step_budget_trips_on_loops() {
        let a = ab();
        let rules = alloc::vec![
            RewriteRule::new("r1", Word(alloc::vec![0, 1]), NcPoly::word(Word(alloc::vec![1, 0]))),
            RewriteRule::new("r2", Word(alloc::vec![1, 0]), NcPoly::word(Word(alloc::vec![0, 1]))),
        ];
        let s = ReductionSystem::new(a.clone(), rules, alloc::vec![], 0).unwrap().with_step_budget(50);
        assert_eq!(s.normal_form(&(&a.x("a") * &a.x("b"))), Err(RewriteError::StepBudget(50)));
    }

    #[test]
    fn length_growth_is_incompatible() {
        let a = Alphabet::new(alloc::vec![Generator::new("a"), Generator::new("b"), Generator::new("c")]).unwrap();
        let rhs = NcPoly::word(Word(alloc::vec![1, 0, 2]));
        let s = ReductionSystem::new(a, alloc::vec![RewriteRule::new("g", Word(alloc::vec![0, 1]), rhs)], alloc::vec![], 0).unwrap();
        let rep = s.check_compatibility();
        assert_eq!(rep.violations.len(), 1);
        assert_eq!(rep.violations[0].issue, CompatIssue::LengthGrows);
    }

    #[test]
    fn central_swaps_are_generated() {
        let a = Alphabet::new(alloc::vec![Generator::new("z").central(), Generator::new("x"), Generator::new("y")]).unwrap();
        let s = ReductionSystem::new(a.clone(), alloc::vec![], alloc::vec![], 0).unwrap();
        assert_eq!(s.rules().len(), 2);
        let p = &(&a.x("y") * &a.x("z")) * &a.x("x");
        let nf = s.normal_form(&p).unwrap();
        assert_eq!(nf, &(&a.x("z") * &a.x("y")) * &a.x("x"));
    }

    #[test]
    fn duplicate_labels_rejected() {
        let a = ab();
        let r = RewriteRule::new("r", Word(alloc::vec![1, 0]), NcPoly::zero());
        let e = ReductionSystem::new(a, alloc::vec![r.clone(), r], alloc::vec![], 0).unwrap_err();
        assert_eq!(e, RewriteError::DuplicateLabel("r".into()));
    }

    fn fam_step(n: usize, prev: Option<&NcPoly>, alpha: &Alphabet) -> NcPoly {
        // a b^n c -> b^(n-1) placeholder family used for matching tests
        let _ = prev;
        alpha.x("b").pow(n as u32 - 1)
    }

    #[test]
    fn families_match_and_extend_past_the_bound() {
        let a = Alphabet::new(alloc::vec![Generator::new("a"), Generator::new("b"), Generator::new("c")]).unwrap();
        let fam = ParametricFamily::new("f", Word(alloc::vec![0]), 1, Word(alloc::vec![2]), fam_step);
        let s = ReductionSystem::new(a.clone(), alloc::vec![], alloc::vec![fam], 2).unwrap();
        assert_eq!(s.instantiated_rules().len(), 2);
        let w = Word(alloc::vec![0, 1, 1, 1, 1, 2]);
        let nf = s.normal_form(&NcPoly::word(w)).unwrap();
        assert_eq!(nf, a.x("b").pow(3));
        assert_eq!(s.rule("f[5]").unwrap().lhs.len(), 7);
    }
}
