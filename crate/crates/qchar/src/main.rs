use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use qchar::expr::{parse_expr, print_expr};
use qchar::files::{load_morphism, load_presentation, print_morphism, print_presentation};
use qchar::suite::{self, confluence_par, morphism_par, SuiteConfig};
use qchar_core::catalog::{Catalog, MORPHISM_DOCS, PRESENTATION_DOCS};
use qchar_core::homcheck::Presentation;
use qchar_core::qsl2::{build_algebra, BuildOptions, DetSign, GluingPattern};
use qchar_core::rewrite::{AmbiguityKind, DEFAULT_FAMILY_BOUND, DEFAULT_STEP_BUDGET};
use qchar_core::series::{
    compare_univariate, expand_univariate, invariant_hilbert, pbw_character_fast, s04_hilbert_spec,
    t11_hilbert_spec, t11_hilbert_spec_alt,
};

/// Largest `--max-t` accepted by `hilbert`.
const HILBERT_LIMIT: usize = 16;

#[derive(Parser)]
#[command(name = "qchar", version, about = "Rewriting systems and presentation checks for quantized character varieties")]
struct Cli {
    /// List builtin presentations and morphisms, then exit.
    #[arg(long)]
    list: bool,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[arg(long, default_value_t = DEFAULT_STEP_BUDGET, global = true)]
    step_budget: u64,
    #[command(subcommand)]
    cmd: Option<Cmd>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Surface {
    S04,
    T11,
}

#[derive(Clone, Copy, ValueEnum)]
enum Det {
    One,
    Printed,
}

#[derive(Subcommand)]
enum Cmd {
    /// List builtin presentations and morphisms.
    List,
    /// Check termination and resolve every ambiguity.
    Confluence {
        /// `builtin:NAME` or a presentation file.
        source: String,
        #[arg(long, default_value_t = DEFAULT_FAMILY_BOUND)]
        family_bound: usize,
    },
    /// Print the normal form of an expression.
    Nf { source: String, expr: String },
    /// Check that relations map to zero under a morphism.
    CheckHom {
        /// `builtin:NAME` or a morphism file.
        morphism: String,
    },
    /// Invariant Hilbert series from counting against the closed form.
    Hilbert {
        #[arg(value_enum)]
        surface: Surface,
        #[arg(long, default_value_t = 8)]
        max_t: usize,
    },
    /// Run the acceptance checks.
    Suite {
        /// Stage names or criterion numbers, comma separated.
        #[arg(long)]
        only: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        max_t: usize,
        #[arg(long, default_value_t = DEFAULT_FAMILY_BOUND)]
        family_bound: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Delete a catalog entry before running.
        #[arg(long, hide = true)]
        without: Vec<String>,
    },
    /// Build a glued algebra from a gluing pattern and print it as a file.
    Build {
        /// Images of 1..2n, e.g. `1,3,2,4`.
        #[arg(long, value_delimiter = ',', required = true)]
        pattern: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Det::One)]
        det: Det,
        /// Alternative order and tau rules on the middle of three blocks.
        #[arg(long)]
        alt_middle: bool,
        #[arg(long, default_value = "A")]
        name: String,
    },
    /// Print a presentation or morphism in file format.
    Print { source: String },
}

/// Failure with an exit code: 1 for mathematics, 2 for usage and resources.
struct Fail(u8, String);

fn usage<E: std::fmt::Display>(e: E) -> Fail {
    Fail(2, e.to_string())
}

type Res = Result<ExitCode, Fail>;

fn verdict(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn print_json(v: serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(&v).expect("json values serialize"));
}

fn with_budget(cat: &mut Catalog, budget: u64) {
    let names: Vec<String> = cat.presentation_names().map(String::from).collect();
    for n in names {
        let mut p = cat.get_presentation(&n).expect("listed").clone();
        if let Some(s) = p.rewriting.take() {
            p.rewriting = Some(s.with_step_budget(budget));
            cat.add(p);
        }
    }
}

fn list(fmt: Format) -> Res {
    if fmt == Format::Json {
        let p: Vec<_> = PRESENTATION_DOCS.iter().map(|(n, d)| json!({"name": n, "doc": d})).collect();
        let m: Vec<_> = MORPHISM_DOCS.iter().map(|(n, d)| json!({"name": n, "doc": d})).collect();
        print_json(json!({"presentations": p, "morphisms": m}));
    } else {
        println!("presentations:");
        for (n, d) in PRESENTATION_DOCS {
            println!("  {:<18} {}", n, d);
        }
        println!("morphisms:");
        for (n, d) in MORPHISM_DOCS {
            println!("  {:<18} {}", n, d);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn rewriting(p: &Presentation) -> Result<&qchar_core::rewrite::ReductionSystem, Fail> {
    p.rewriting.as_ref().ok_or_else(|| Fail(2, format!("{} has no rewriting rules", p.name)))
}

fn confluence(cat: &Catalog, source: &str, bound: usize, budget: u64, fmt: Format) -> Res {
    let p = load_presentation(source, cat, None).map_err(usage)?;
    let sys = rewriting(&p)?.clone().with_family_bound(bound).with_step_budget(budget);
    let r = confluence_par(&sys);
    let lines = r.lines(&sys.alphabet);
    if fmt == Format::Json {
        print_json(json!({
            "system": p.name,
            "confluent": r.is_confluent(),
            "terminating": r.is_terminating(),
            "overlaps": r.count(AmbiguityKind::Overlap),
            "inclusions": r.count(AmbiguityKind::Inclusion),
            "unresolved": r.failures(),
            "report": lines,
        }));
    } else {
        for l in &lines {
            println!("{}", l);
        }
        println!(
            "{}: {} ambiguities ({} overlap, {} inclusion), {} unresolved, {}",
            p.name,
            r.results.len(),
            r.count(AmbiguityKind::Overlap),
            r.count(AmbiguityKind::Inclusion),
            r.failures(),
            if r.is_confluent() { "CONFLUENT" } else { "NOT CONFLUENT" }
        );
    }
    Ok(verdict(r.is_confluent()))
}

fn nf(cat: &Catalog, source: &str, expr: &str, budget: u64, fmt: Format) -> Res {
    let p = load_presentation(source, cat, None).map_err(usage)?;
    let sys = rewriting(&p)?.clone().with_step_budget(budget);
    let e = parse_expr(expr, &sys.alphabet).map_err(usage)?;
    let n = sys.normal_form(&e).map_err(usage)?;
    let s = print_expr(&n, &sys.alphabet);
    if fmt == Format::Json {
        print_json(json!({"system": p.name, "input": expr, "normal_form": s}));
    } else {
        println!("{}", s);
    }
    Ok(ExitCode::SUCCESS)
}

fn check_hom(cat: &mut Catalog, spec: &str, budget: u64, fmt: Format) -> Res {
    let m = load_morphism(spec, cat).map_err(usage)?;
    with_budget(cat, budget);
    let r = morphism_par(cat, &m.name).map_err(usage)?;
    let alpha = &cat.get_presentation(&r.reduced_in).ok_or_else(|| usage("target vanished"))?.alphabet;
    let lines = r.lines(alpha);
    if fmt == Format::Json {
        let rels: Vec<_> = r
            .relations
            .iter()
            .map(|x| json!({"label": x.label, "holds": x.holds(), "residual": print_expr(&x.residual, alpha)}))
            .collect();
        print_json(json!({
            "morphism": r.name,
            "chain": r.chain,
            "reduced_in": r.reduced_in,
            "passed": r.passed(),
            "relations": rels,
            "report": lines,
        }));
    } else {
        for l in &lines {
            println!("{}", l);
        }
        let ok = r.relations.iter().filter(|x| x.holds()).count();
        println!("{}: {}/{} relations OK, {}", r.name, ok, r.relations.len(), if r.passed() { "PASS" } else { "FAIL" });
    }
    Ok(verdict(r.passed()))
}

fn hilbert(cat: &Catalog, surface: Surface, max_t: usize, fmt: Format) -> Res {
    if max_t > HILBERT_LIMIT {
        return Err(Fail(2, format!("--max-t {} exceeds the limit {}", max_t, HILBERT_LIMIT)));
    }
    let (name, mut specs) = match surface {
        Surface::S04 => ("A-s04", vec![("closed form", s04_hilbert_spec())]),
        Surface::T11 => ("A-t11", vec![("closed form", t11_hilbert_spec())]),
    };
    if let Surface::T11 = surface {
        specs.push(("closed form (alt)", t11_hilbert_spec_alt()));
    }
    let p = cat.get_presentation(name).ok_or_else(|| Fail(2, format!("builtin `{}` is missing", name)))?;
    let ch = pbw_character_fast(rewriting(p)?, max_t, 4).map_err(usage)?;
    let counted = invariant_hilbert(&ch);
    let mut rows = vec![("counted".to_string(), counted.clone())];
    let mut ok = true;
    for (label, spec) in specs {
        let e = expand_univariate(&spec, max_t).map_err(usage)?;
        ok &= compare_univariate(&counted, &e).map_err(usage)?.passed();
        rows.push((label.to_string(), e));
    }
    if fmt == Format::Json {
        let r: Vec<_> = rows.iter().map(|(l, s)| json!({"row": l, "coeffs": s.coeffs})).collect();
        print_json(json!({"surface": name, "max_t": max_t, "rows": r, "passed": ok}));
    } else {
        for (l, s) in &rows {
            println!("{:<18} {}", format!("{}:", l), s);
        }
        println!("{}", if ok { "PASS" } else { "FAIL" });
    }
    Ok(verdict(ok))
}

fn run_suite(cat: &mut Catalog, only: Option<&str>, cfg: SuiteConfig, without: &[String], budget: u64, fmt: Format) -> Res {
    for w in without {
        cat.remove(w);
    }
    with_budget(cat, budget);
    let ids = match only {
        Some(o) => suite::select(o).map_err(usage)?,
        None => (1..=14).collect(),
    };
    let mut outcomes = Vec::new();
    for id in ids {
        let o = suite::run_one(cat, &cfg, id).map_err(usage)?;
        if fmt == Format::Text {
            println!("{}", o.line());
            for d in &o.details {
                println!("     {}", d);
            }
        }
        outcomes.push(o);
    }
    let passed = outcomes.iter().filter(|o| o.passed()).count();
    if fmt == Format::Json {
        let v: Vec<_> = outcomes.iter().map(|o| o.to_json()).collect();
        print_json(json!({"criteria": v, "passed": passed, "total": outcomes.len()}));
    } else {
        println!("{}/{} criteria pass", passed, outcomes.len());
    }
    Ok(verdict(passed == outcomes.len()))
}

fn build(pattern: &[usize], det: Det, alt_middle: bool, name: &str) -> Res {
    let p = GluingPattern::from_list(pattern).map_err(usage)?;
    let det = match det {
        Det::One => DetSign::One,
        Det::Printed => DetSign::Printed,
    };
    let sys = build_algebra(&p, BuildOptions { det, alt_middle }).map_err(usage)?;
    print!("{}", print_presentation(&Presentation::from_system(name, sys)));
    Ok(ExitCode::SUCCESS)
}

fn print(cat: &mut Catalog, source: &str) -> Res {
    if let Some(n) = source.strip_prefix("builtin:") {
        if let Some(m) = cat.get_morphism(n) {
            print!("{}", print_morphism(m, cat));
            return Ok(ExitCode::SUCCESS);
        }
    }
    let p = load_presentation(source, cat, None).map_err(usage)?;
    print!("{}", print_presentation(&p));
    Ok(ExitCode::SUCCESS)
}

fn dispatch(cli: Cli) -> Res {
    let mut cat = Catalog::builtin();
    let (fmt, budget) = (cli.format, cli.step_budget);
    if cli.list {
        return list(fmt);
    }
    let Some(cmd) = cli.cmd else {
        return Err(Fail(2, "no command given; try --help".into()));
    };
    match cmd {
        Cmd::List => list(fmt),
        Cmd::Confluence { source, family_bound } => confluence(&cat, &source, family_bound, budget, fmt),
        Cmd::Nf { source, expr } => nf(&cat, &source, &expr, budget, fmt),
        Cmd::CheckHom { morphism } => check_hom(&mut cat, &morphism, budget, fmt),
        Cmd::Hilbert { surface, max_t } => hilbert(&cat, surface, max_t, fmt),
        Cmd::Suite { only, seed, max_t, family_bound, samples, without } => {
            let cfg = SuiteConfig { family_bound, max_t, seed, samples };
            run_suite(&mut cat, only.as_deref(), cfg, &without, budget, fmt)
        }
        Cmd::Build { pattern, det, alt_middle, name } => build(&pattern, det, alt_middle, &name),
        Cmd::Print { source } => print(&mut cat, &source),
    }
}

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(c) => c,
        Err(Fail(code, msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(code)
        }
    }
}
