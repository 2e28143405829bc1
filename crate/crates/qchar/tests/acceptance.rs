//! Runs the fourteen acceptance criteria and prints one line per criterion.
//!
//! Criteria 7 and 8 fail: the parameter image v does not commute with the
//! block generators of A-s04, and Psi(L) does not commute with those of
//! A-t11. Both commute with every trace image, so the obstruction is in the
//! ambient algebra only. This target fails if any other criterion fails or
//! if either of those two obstructions changes shape.

use std::process::ExitCode;

use qchar::suite::{run_one, Outcome, SuiteConfig};
use qchar_core::catalog::Catalog;

fn commutator_list(g: &str, blocks: &[&str]) -> String {
    let mut out = Vec::new();
    for b in blocks {
        for (i, j) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            out.push(format!("{}:{}.{}.{}", g, b, i, j));
        }
    }
    format!("nonzero commutators: {}", out.join(" "))
}

/// The analysed failure for criteria 7 and 8, or `None` for the rest.
fn known_failure(id: u8) -> Option<(&'static str, String)> {
    match id {
        7 => Some(("definition form of GE singled out; 4/4 relations vanish; 36/48", commutator_list("v", &["a", "b", "c"]))),
        8 => Some(("3/3 relations vanish; 0/8", commutator_list("L", &["a", "b"]))),
        _ => None,
    }
}

fn as_expected(o: &Outcome) -> bool {
    match known_failure(o.id) {
        None => o.passed(),
        Some((head, detail)) => {
            !o.holds && o.elapsed <= o.limit && o.summary.starts_with(head) && o.details == [detail]
        }
    }
}

fn main() -> ExitCode {
    let cat = Catalog::builtin();
    let cfg = SuiteConfig::default();
    let mut unexpected = Vec::new();
    for id in 1..=14 {
        let o = match run_one(&cat, &cfg, id) {
            Ok(o) => o,
            Err(e) => {
                println!("FAIL {:>2} error: {}", id, e);
                unexpected.push(id);
                continue;
            }
        };
        let note = if known_failure(id).is_some() && as_expected(&o) { " (known obstruction)" } else { "" };
        println!("{}{}", o.line(), note);
        for d in &o.details {
            println!("     {}", d);
        }
        if !as_expected(&o) {
            unexpected.push(id);
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: 12 pass, criteria 7 and 8 fail as analysed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected results for criteria {:?}", unexpected);
        ExitCode::from(1)
    }
}
