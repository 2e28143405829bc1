//! Flat-file formats for presentations and morphisms.
//!
//! A presentation file:
//!
//! ```text
//! presentation T
//! gen X
//! gen s central weight=0 degree=1
//! rel YX: Y*X - q^(-1)*X*Y - (q - q^(-1))*Z
//! rule YX: Y*X -> q^(-1)*X*Y + (q - q^(-1))*Z
//! derived L: q^5*X*Z*Y + ...
//! ```
//!
//! Rule lines make up the rewriting system (central swaps are added on
//! load). A morphism file:
//!
//! ```text
//! morphism Psi
//! source builtin:T
//! target builtin:A-t11
//! scalar q -> q
//! route via Phi
//! gen X -> a.1.1 + q^(-2)*a.2.2
//! ```
//!
//! Blank lines and lines starting with `#` are ignored.

use std::fs;
use std::path::{Path, PathBuf};

use qchar_core::catalog::Catalog;
use qchar_core::freealg::{Alphabet, Generator, Word};
use qchar_core::homcheck::{AlgebraMorphism, Presentation, Relation, Route, ScalarMap};
use qchar_core::rewrite::{ReductionSystem, RewriteRule};
use qchar_core::NcPoly;
use thiserror::Error;

use crate::expr::{constant_of, parse_expr, print_expr, ExprError};

#[derive(Debug, Error)]
pub enum FileError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Expr { line: usize, source: ExprError },
    #[error("unknown builtin `{0}`")]
    UnknownBuiltin(String),
    #[error("{0}")]
    Invalid(String),
}

fn syn(line: usize, msg: impl Into<String>) -> FileError {
    FileError::Syntax { line, msg: msg.into() }
}

/// Splits `label: rest` at the first `": "`.
fn labelled(line: usize, s: &str) -> Result<(&str, &str), FileError> {
    match s.find(": ") {
        Some(k) if k > 0 => Ok((s[..k].trim(), s[k + 2..].trim())),
        _ => Err(syn(line, "expected `label: ...`")),
    }
}

fn parse_gen(line: usize, rest: &str) -> Result<Generator, FileError> {
    let mut it = rest.split_whitespace();
    let name = it.next().ok_or_else(|| syn(line, "generator needs a name"))?;
    if name == "q" || name == "i" {
        return Err(syn(line, "`q` and `i` are reserved"));
    }
    let mut g = Generator::new(name);
    for opt in it {
        if opt == "central" {
            g = g.central();
        } else if let Some(w) = opt.strip_prefix("weight=") {
            g = g.weight(w.parse().map_err(|_| syn(line, "bad weight"))?);
        } else if let Some(d) = opt.strip_prefix("degree=") {
            g = g.degree(d.parse().map_err(|_| syn(line, "bad degree"))?);
        } else {
            return Err(syn(line, format!("unknown generator option `{}`", opt)));
        }
    }
    Ok(g)
}

fn parse_word(line: usize, s: &str, alpha: &Alphabet) -> Result<Word, FileError> {
    let p = parse_expr(s, alpha).map_err(|e| FileError::Expr { line, source: e })?;
    let mut terms = p.terms();
    match (terms.next(), terms.next()) {
        (Some((w, c)), None) if c.is_one() && !w.is_empty() => Ok(w.clone()),
        _ => Err(syn(line, "rule left-hand side must be a single word")),
    }
}

fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_presentation(text: &str) -> Result<Presentation, FileError> {
    let mut name = None;
    let mut gens = Vec::new();
    let mut body = Vec::new();
    for (ln, l) in lines(text) {
        let (kw, rest) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
        let rest = rest.trim();
        match kw {
            "presentation" if name.is_none() && !rest.is_empty() => name = Some(rest.to_string()),
            "gen" => {
                if !body.is_empty() {
                    return Err(syn(ln, "generators must come before relations"));
                }
                gens.push(parse_gen(ln, rest)?);
            }
            "rel" | "rule" | "derived" => body.push((ln, kw, rest)),
            _ => return Err(syn(ln, format!("unexpected `{}`", kw))),
        }
    }
    let name = name.ok_or_else(|| syn(1, "missing `presentation NAME` header"))?;
    let alpha = Alphabet::new(gens).map_err(|e| FileError::Invalid(e.to_string()))?;
    let expr = |ln: usize, s: &str| parse_expr(s, &alpha).map_err(|e| FileError::Expr { line: ln, source: e });
    let mut rels = Vec::new();
    let mut rules = Vec::new();
    let mut derived = Vec::new();
    for (ln, kw, rest) in body {
        let (label, e) = labelled(ln, rest)?;
        match kw {
            "rel" => rels.push(Relation::new(label, expr(ln, e)?)),
            "derived" => derived.push((label.to_string(), expr(ln, e)?)),
            _ => {
                let (lhs, rhs) = e.split_once("->").ok_or_else(|| syn(ln, "rule needs `->`"))?;
                rules.push(RewriteRule::new(label, parse_word(ln, lhs, &alpha)?, expr(ln, rhs)?));
            }
        }
    }
    let mut p = Presentation::new(&name, alpha.clone(), rels);
    p.derived = derived;
    if !rules.is_empty() {
        let sys = ReductionSystem::new(alpha, rules, Vec::new(), 0).map_err(|e| FileError::Invalid(e.to_string()))?;
        if p.relations.is_empty() {
            p.relations = sys
                .rules()
                .iter()
                .filter(|r| !is_auto_swap(r, &sys.alphabet))
                .map(|r| Relation::new(&r.label, r.relation()))
                .collect();
        }
        p.rewriting = Some(sys);
    }
    Ok(p)
}

fn is_auto_swap(r: &RewriteRule, alpha: &Alphabet) -> bool {
    if r.lhs.len() != 2 {
        return false;
    }
    let (g, z) = (r.lhs.0[0], r.lhs.0[1]);
    let label = format!("central_{}_{}", alpha.get(g).name, alpha.get(z).name);
    alpha.get(z).central && z < g && r.label == label && r.rhs == NcPoly::word(Word(vec![z, g]))
}

pub fn print_presentation(p: &Presentation) -> String {
    let al = &p.alphabet;
    let mut out = format!("presentation {}\n", p.name);
    for g in al.gens() {
        out.push_str(&format!("gen {}", g.name));
        if g.central {
            out.push_str(" central");
        }
        if g.weight != 0 {
            out.push_str(&format!(" weight={}", g.weight));
        }
        if g.degree != 1 {
            out.push_str(&format!(" degree={}", g.degree));
        }
        out.push('\n');
    }
    for r in &p.relations {
        out.push_str(&format!("rel {}: {}\n", r.label, print_expr(&r.poly, al)));
    }
    if let Some(sys) = &p.rewriting {
        for r in sys.rules() {
            if is_auto_swap(r, al) {
                continue;
            }
            out.push_str(&format!("rule {}: {} -> {}\n", r.label, al.word_str(&r.lhs), print_expr(&r.rhs, al)));
        }
        if !sys.families().is_empty() {
            out.push_str(&format!("# families written out up to n = {}\n", sys.family_bound));
            for f in sys.families() {
                for n in 1..=sys.family_bound.max(1) {
                    let r = f.instance(n, al);
                    out.push_str(&format!("rule {}: {} -> {}\n", r.label, al.word_str(&r.lhs), print_expr(&r.rhs, al)));
                }
            }
        }
    }
    for (n, d) in &p.derived {
        out.push_str(&format!("derived {}: {}\n", n, print_expr(d, al)));
    }
    out
}

/// Structural equality used for round-trip checks.
pub fn same_presentation(a: &Presentation, b: &Presentation) -> bool {
    let rules = |p: &Presentation| p.rewriting.as_ref().map(|s| s.rules().to_vec());
    a.name == b.name && a.alphabet == b.alphabet && a.relations == b.relations && a.derived == b.derived && rules(a) == rules(b)
}

/// Resolves `builtin:NAME` or a file path to a presentation.
pub fn load_presentation(spec: &str, cat: &Catalog, base: Option<&Path>) -> Result<Presentation, FileError> {
    if let Some(n) = spec.strip_prefix("builtin:") {
        return cat.get_presentation(n).cloned().ok_or_else(|| FileError::UnknownBuiltin(n.into()));
    }
    let path = resolve(spec, base);
    let text = fs::read_to_string(&path).map_err(|e| FileError::Io { path: path.display().to_string(), source: e })?;
    parse_presentation(&text)
}

fn resolve(spec: &str, base: Option<&Path>) -> PathBuf {
    let p = Path::new(spec);
    match base {
        Some(b) if p.is_relative() => b.join(p),
        _ => p.to_path_buf(),
    }
}

/// Parses a morphism file; source and target presentations loaded from
/// files are added to `cat` under their own names.
pub fn parse_morphism(text: &str, cat: &mut Catalog, base: Option<&Path>) -> Result<AlgebraMorphism, FileError> {
    let mut name = None;
    let mut src = None;
    let mut tgt = None;
    let mut scalar = ScalarMap::IDENTITY;
    let mut route = Route::Direct;
    let mut gens: Vec<(usize, String, String)> = Vec::new();
    for (ln, l) in lines(text) {
        let (kw, rest) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
        let rest = rest.trim();
        match kw {
            "morphism" if !rest.is_empty() => name = Some(rest.to_string()),
            "source" | "target" => {
                let p = load_presentation(rest, cat, base)?;
                let n = p.name.clone();
                if !rest.starts_with("builtin:") {
                    cat.add(p);
                }
                if kw == "source" {
                    src = Some(n)
                } else {
                    tgt = Some(n)
                }
            }
            "scalar" => {
                let e = rest.strip_prefix("q").and_then(|r| r.trim().strip_prefix("->")).ok_or_else(|| syn(ln, "expected `scalar q -> EXPR`"))?;
                scalar = parse_scalar(ln, e.trim())?;
            }
            "route" => {
                let mut it = rest.split_whitespace();
                route = match it.next() {
                    Some("direct") => Route::Direct,
                    Some("via") => Route::Via(it.map(String::from).collect()),
                    Some("inverse") => Route::Inverse(it.next().ok_or_else(|| syn(ln, "inverse needs a name"))?.to_string()),
                    _ => return Err(syn(ln, "route is `direct`, `via NAME...` or `inverse NAME`")),
                };
            }
            "gen" => {
                let (g, e) = rest.split_once("->").ok_or_else(|| syn(ln, "expected `gen NAME -> EXPR`"))?;
                gens.push((ln, g.trim().to_string(), e.trim().to_string()));
            }
            _ => return Err(syn(ln, format!("unexpected `{}`", kw))),
        }
    }
    let name = name.ok_or_else(|| syn(1, "missing `morphism NAME` header"))?;
    let src = src.ok_or_else(|| syn(1, "missing `source`"))?;
    let tgt = tgt.ok_or_else(|| syn(1, "missing `target`"))?;
    let sp = cat.get_presentation(&src).unwrap().clone();
    let tp = cat.get_presentation(&tgt).unwrap().clone();
    let mut images = Vec::new();
    for (ln, g, e) in &gens {
        images.push((g.as_str(), parse_expr(e, &tp.alphabet).map_err(|x| FileError::Expr { line: *ln, source: x })?));
    }
    AlgebraMorphism::new(&name, &sp, &tp, images, scalar, route).map_err(|e| FileError::Invalid(e.to_string()))
}

fn parse_scalar(ln: usize, e: &str) -> Result<ScalarMap, FileError> {
    let p = parse_expr(e, &Alphabet::new(vec![]).expect("empty alphabet")).map_err(|x| FileError::Expr { line: ln, source: x })?;
    let c = constant_of(&p).ok_or_else(|| syn(ln, "scalar image must be a constant"))?;
    let mut ts = c.terms();
    match (ts.next(), ts.next()) {
        (Some((k, g)), None) if g.is_one() && k != 0 => {
            let d = num_gcd(k.abs(), 2);
            Ok(ScalarMap { num: k / d, den: 2 / d })
        }
        _ => Err(syn(ln, "scalar image must be q^(k/2) with k nonzero")),
    }
}

fn num_gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

pub fn print_morphism(m: &AlgebraMorphism, cat: &Catalog) -> String {
    let src = cat.get_presentation(&m.source).expect("source is registered");
    let tgt = cat.get_presentation(&m.target).expect("target is registered");
    let mut out = format!("morphism {}\nsource builtin:{}\ntarget builtin:{}\n", m.name, m.source, m.target);
    if !m.scalar.is_identity() {
        let img = m.scalar.image_of_q().expect("q has an image");
        out.push_str(&format!("scalar q -> {}\n", img));
    }
    match &m.route {
        Route::Direct => out.push_str("route direct\n"),
        Route::Via(c) => out.push_str(&format!("route via {}\n", c.join(" "))),
        Route::Inverse(n) => out.push_str(&format!("route inverse {}\n", n)),
    }
    for l in src.alphabet.letters() {
        out.push_str(&format!("gen {} -> {}\n", src.alphabet.get(l).name, print_expr(m.image(l), &tgt.alphabet)));
    }
    out
}

pub fn same_morphism(a: &AlgebraMorphism, b: &AlgebraMorphism) -> bool {
    a.name == b.name
        && a.source == b.source
        && a.target == b.target
        && a.assignment == b.assignment
        && a.scalar == b.scalar
        && a.route == b.route
}

pub fn load_morphism(spec: &str, cat: &mut Catalog) -> Result<AlgebraMorphism, FileError> {
    if let Some(n) = spec.strip_prefix("builtin:") {
        return cat.get_morphism(n).cloned().ok_or_else(|| FileError::UnknownBuiltin(n.into()));
    }
    let path = Path::new(spec);
    let text = fs::read_to_string(path).map_err(|e| FileError::Io { path: spec.into(), source: e })?;
    let m = parse_morphism(&text, cat, path.parent())?;
    cat.add_morphism(m.clone());
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_presentations_round_trip() {
        let cat = Catalog::builtin();
        for n in cat.presentation_names() {
            if n == "GB" {
                continue;
            }
            let p = cat.get_presentation(n).unwrap();
            let text = print_presentation(p);
            let back = parse_presentation(&text).unwrap();
            assert!(same_presentation(p, &back), "{}", n);
            assert_eq!(print_presentation(&back), text);
        }
    }

    #[test]
    fn builtin_morphisms_round_trip() {
        let mut cat = Catalog::builtin();
        let names: Vec<String> = cat.morphism_names().map(String::from).collect();
        for n in names {
            let m = cat.get_morphism(&n).unwrap().clone();
            let text = print_morphism(&m, &cat);
            let back = parse_morphism(&text, &mut cat, None).unwrap();
            assert!(same_morphism(&m, &back), "{}", n);
        }
    }

    #[test]
    fn presentation_errors() {
        assert!(matches!(parse_presentation("gen x\n"), Err(FileError::Syntax { .. })));
        assert!(matches!(parse_presentation("presentation P\ngen x\nrel r: y\n"), Err(FileError::Expr { line: 3, .. })));
        assert!(matches!(parse_presentation("presentation P\ngen x\nrule r: 2*x*x -> x\n"), Err(FileError::Syntax { line: 3, .. })));
        assert!(matches!(parse_presentation("presentation P\ngen q\n"), Err(FileError::Syntax { .. })));
    }

    #[test]
    fn rules_become_relations() {
        let p = parse_presentation("presentation P\ngen z central\ngen x\ngen y\nrule yx: y*x -> x*y + z\n").unwrap();
        assert_eq!(p.relations.len(), 1);
        assert_eq!(p.rewriting.as_ref().unwrap().rules().len(), 3);
    }

    #[test]
    fn scalar_maps() {
        assert_eq!(parse_scalar(1, "q^2").unwrap(), ScalarMap { num: 2, den: 1 });
        assert_eq!(parse_scalar(1, "q^(1/2)").unwrap(), ScalarMap { num: 1, den: 2 });
        assert_eq!(parse_scalar(1, "q").unwrap(), ScalarMap { num: 1, den: 1 });
        assert!(parse_scalar(1, "2*q").is_err());
    }
}
