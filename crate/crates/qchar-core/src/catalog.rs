//! Builtin presentations and morphisms, each under a stable name.
//!
//! Variants that keep a printed coefficient which does not survive the
//! checks carry a `-printed` suffix next to the corrected default.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::freealg::{Alphabet, Generator, NcPoly, Word};
use crate::homcheck::{q_bracket, q_bracket_pow, AlgebraMorphism, Presentation, Relation, Resolver, Route, ScalarMap};
use crate::qsl2::{build_algebra, oq_sigma, oq_tau, reflection_relations, Block, BuildOptions, DetSign, GluingPattern, QuantumMatrix};
use crate::rewrite::{ParametricFamily, ReductionSystem, RewriteRule, DEFAULT_FAMILY_BOUND};
use crate::scalar::{qdiff, QLaurent};

fn q(n: i64) -> QLaurent {
    QLaurent::q(n)
}

fn c(x: QLaurent) -> NcPoly {
    NcPoly::constant(x)
}

fn prod(ps: &[&NcPoly]) -> NcPoly {
    ps.iter().fold(NcPoly::one(), |acc, p| &acc * *p)
}

fn lin(terms: Vec<(QLaurent, NcPoly)>) -> NcPoly {
    let mut out = NcPoly::zero();
    for (k, p) in terms {
        out += &(&k * &p);
    }
    out
}

fn alphabet(plain: &[&str], central: &[&str]) -> Alphabet {
    let mut gens: Vec<Generator> = central.iter().map(|n| Generator::new(n).central()).collect();
    gens.extend(plain.iter().map(|n| Generator::new(n)));
    Alphabet::new(gens).expect("builtin generator names are distinct")
}

fn rule(alpha: &Alphabet, label: &str, lhs: &[&str], rhs: NcPoly) -> RewriteRule {
    let w = Word(lhs.iter().map(|n| alpha.letter(n).expect("builtin generator")).collect());
    RewriteRule::new(label, w, rhs)
}

fn system(alpha: &Alphabet, rules: Vec<RewriteRule>) -> ReductionSystem {
    ReductionSystem::new(alpha.clone(), rules, Vec::new(), 0).expect("builtin rule labels are distinct")
}

/// `d = q^2 - q^-2`, `d1 = q - q^-1`.
fn d2() -> QLaurent {
    qdiff(2, -2)
}
fn d1() -> QLaurent {
    qdiff(1, -1)
}

fn oq_presentation(name: &str, sys: ReductionSystem) -> Presentation {
    let b = Block::find(&sys.alphabet, "a").expect("block a");
    let rels = reflection_relations(&b)
        .into_iter()
        .enumerate()
        .map(|(k, p)| Relation::new(&alloc::format!("refl{}", k + 1), p))
        .collect();
    Presentation::new(name, sys.alphabet.clone(), rels).with_rewriting(sys)
}

fn block_matrix(alpha: &Alphabet, name: &str) -> QuantumMatrix {
    QuantumMatrix::of_block(&Block::find(alpha, name).expect("builtin block"))
}

/// Which printed form of the EFG and GE relations of `B` to use.
#[derive(Clone, Copy, PartialEq, Eq)]
enum BForm {
    Defn,
    PrintedEfg,
    SummaryGe,
}

fn b_presentation(name: &str, form: BForm) -> Presentation {
    let al = alphabet(&["E", "F", "G"], &["s", "t", "u", "v"]);
    let (e, f, g) = (al.x("E"), al.x("F"), al.x("G"));
    let (s, t, u, v) = (al.x("s"), al.x("t"), al.x("u"), al.x("v"));
    let a = &prod(&[&s, &v]) + &prod(&[&t, &u]);
    let b = &prod(&[&s, &u]) + &prod(&[&t, &v]);
    let cc = &prod(&[&s, &t]) + &prod(&[&u, &v]);
    let fe = &prod(&[&f, &e])
        - &lin(vec![(q(2), prod(&[&e, &f])), (d2(), g.clone()), (qdiff(0, 2), a.clone())]);
    let ge = match form {
        BForm::SummaryGe => {
            let su_tv = &prod(&[&s, &u]) + &(&q(-2) * &prod(&[&t, &v]));
            &prod(&[&g, &e])
                - &lin(vec![(q(-2), prod(&[&e, &g])), (&q(-2) * &d2(), f.clone()), (-qdiff(0, 2), su_tv)])
        }
        _ => &prod(&[&g, &e]) - &lin(vec![(q(-2), prod(&[&e, &g])), (-(&q(-2) * &d2()), f.clone()), (qdiff(0, -2), b.clone())]),
    };
    let gf = &prod(&[&g, &f])
        - &lin(vec![(q(2), prod(&[&f, &g])), (d2(), e.clone()), (qdiff(0, 2), cc.clone())]);
    let sq_coeff = if form == BForm::PrintedEfg { q(-4) } else { q(-2) };
    let squares = &(&(&prod(&[&s, &s]) + &prod(&[&t, &t])) + &prod(&[&u, &u])) + &prod(&[&v, &v]);
    let tail = &q(-6) * &(&(&q(2) + &QLaurent::one()) * &(&q(2) + &QLaurent::one()));
    let efg_rhs = lin(vec![
        (-QLaurent::one(), prod(&[&e, &e])),
        (-q(-4), prod(&[&f, &f])),
        (-QLaurent::one(), prod(&[&g, &g])),
        (-sq_coeff, squares),
        (QLaurent::one(), prod(&[&cc, &e])),
        (q(-2), prod(&[&b, &f])),
        (QLaurent::one(), prod(&[&a, &g])),
        (-QLaurent::one(), prod(&[&s, &t, &u, &v])),
        (tail, NcPoly::one()),
    ]);
    let efg = &prod(&[&e, &f, &g]) - &efg_rhs;
    let rels = vec![Relation::new("FE", fe), Relation::new("GE", ge), Relation::new("GF", gf), Relation::new("EFG", efg)];
    Presentation::new(name, al, rels).with_derived("a", a).with_derived("b", b).with_derived("c", cc)
}

fn gb_f(n: usize, prev: Option<&NcPoly>, al: &Alphabet) -> NcPoly {
    let (e, f, g) = (al.x("E"), al.x("F"), al.x("G"));
    let (s, t, u, v) = (al.x("s"), al.x("t"), al.x("u"), al.x("v"));
    let a = &prod(&[&s, &v]) + &prod(&[&t, &u]);
    match (n, prev) {
        (1, _) | (_, None) => {
            let b = &prod(&[&s, &u]) + &prod(&[&t, &v]);
            let cc = &prod(&[&s, &t]) + &prod(&[&u, &v]);
            let squares = &(&(&prod(&[&s, &s]) + &prod(&[&t, &t])) + &prod(&[&u, &u])) + &prod(&[&v, &v]);
            let tail = &q(-6) * &(&(&q(2) + &QLaurent::one()) * &(&q(2) + &QLaurent::one()));
            lin(vec![
                (-QLaurent::one(), prod(&[&e, &e])),
                (-q(-4), prod(&[&f, &f])),
                (-QLaurent::one(), prod(&[&g, &g])),
                (QLaurent::one(), prod(&[&cc, &e])),
                (q(-2), prod(&[&b, &f])),
                (QLaurent::one(), prod(&[&a, &g])),
                (-q(-4), squares),
                (-QLaurent::one(), prod(&[&s, &t, &u, &v])),
                (tail, NcPoly::one()),
            ])
        }
        (n, Some(p)) => {
            let fpow = f.pow(n as u32 - 1);
            lin(vec![
                (q(-2), prod(&[&f, p])),
                (qdiff(-4, 0), prod(&[&g, &fpow, &g])),
                (qdiff(0, -2), prod(&[&a, &fpow, &g])),
            ])
        }
    }
}

/// The rewriting system for the associated graded algebra of `B`, with
/// the family `E F^n G -> f(n)`.
pub fn gb_system(bound: usize) -> ReductionSystem {
    let al = alphabet(&["E", "F", "G"], &["s", "t", "u", "v"]);
    let bp = b_presentation("B", BForm::Defn);
    let (e, f, g) = (al.x("E"), al.x("F"), al.x("G"));
    let a = bp.derived("a").unwrap().clone();
    let b = bp.derived("b").unwrap().clone();
    let cc = bp.derived("c").unwrap().clone();
    let rules = vec![
        rule(&al, "FE", &["F", "E"], lin(vec![(q(2), prod(&[&e, &f])), (d2(), g.clone()), (qdiff(0, 2), a)])),
        rule(&al, "GF", &["G", "F"], lin(vec![(q(2), prod(&[&f, &g])), (d2(), e.clone()), (qdiff(0, 2), cc)])),
        rule(&al, "GE", &["G", "E"], lin(vec![(q(-2), prod(&[&e, &g])), (-(&q(-2) * &d2()), f.clone()), (qdiff(0, -2), b)])),
    ];
    let l = |n: &str| al.letter(n).expect("builtin generator");
    let fam = ParametricFamily::new("EFnG", Word(vec![l("E")]), l("F"), Word(vec![l("G")]), gb_f);
    ReductionSystem::new(al.clone(), rules, vec![fam], bound).expect("builtin rule labels are distinct")
}

fn t_system() -> ReductionSystem {
    let al = alphabet(&["X", "Y", "Z"], &[]);
    let (x, y, z) = (al.x("X"), al.x("Y"), al.x("Z"));
    let rules = vec![
        rule(&al, "YX", &["Y", "X"], lin(vec![(q(-1), prod(&[&x, &y])), (d1(), z.clone())])),
        rule(&al, "ZX", &["Z", "X"], lin(vec![(q(1), prod(&[&x, &z])), (&q(-2) * &d1(), y.clone())])),
        rule(&al, "ZY", &["Z", "Y"], lin(vec![(q(-1), prod(&[&y, &z])), (-(&q(-3) * &d1()), x.clone())])),
    ];
    system(&al, rules)
}

fn t_presentation() -> Presentation {
    let sys = t_system();
    let al = sys.alphabet.clone();
    let (x, y, z) = (al.x("X"), al.x("Y"), al.x("Z"));
    let yx = &(&prod(&[&y, &x]) - &(&q(-1) * &prod(&[&x, &y]))) - &(&d1() * &z);
    let xz = &(&prod(&[&x, &z]) - &(&q(-1) * &prod(&[&z, &x]))) + &(&(&q(-3) * &d1()) * &y);
    let zy = &(&prod(&[&z, &y]) - &(&q(-1) * &prod(&[&y, &z]))) + &(&(&q(-3) * &d1()) * &x);
    let l = lin(vec![
        (q(5), prod(&[&x, &z, &y])),
        (q(3), prod(&[&y, &y])),
        (-q(4), prod(&[&z, &z])),
        (q(3), prod(&[&x, &x])),
        (-d1(), NcPoly::one()),
    ]);
    Presentation::new("T", al, vec![Relation::new("YX", yx), Relation::new("XZ", xz), Relation::new("ZY", zy)])
        .with_rewriting(sys)
        .with_derived("L", l)
}

/// Rules `x2 x1`, `x3 x2`, `x3 x1` for the cyclic bracket
/// `[x_i, x_{i+1}]_q = k x_{i+2}`.
fn cyclic_rules(al: &Alphabet, names: [&str; 3], k: &QLaurent) -> Vec<RewriteRule> {
    let [n1, n2, n3] = names;
    let (x1, x2, x3) = (al.x(n1), al.x(n2), al.x(n3));
    let qk = &q(1) * k;
    let qik = &q(-1) * k;
    vec![
        rule(al, &alloc::format!("{}{}", n2, n1), &[n2, n1], lin(vec![(q(2), prod(&[&x1, &x2])), (-qk.clone(), x3.clone())])),
        rule(al, &alloc::format!("{}{}", n3, n2), &[n3, n2], lin(vec![(q(2), prod(&[&x2, &x3])), (-qk, x1.clone())])),
        rule(al, &alloc::format!("{}{}", n3, n1), &[n3, n1], lin(vec![(q(-2), prod(&[&x1, &x3])), (qik, x2.clone())])),
    ]
}

fn cyclic_relations(al: &Alphabet, names: [&str; 3], k: &QLaurent) -> Vec<Relation> {
    (0..3)
        .map(|i| {
            let a = al.x(names[i]);
            let b = al.x(names[(i + 1) % 3]);
            let c3 = al.x(names[(i + 2) % 3]);
            let label = alloc::format!("[{},{}]", names[i], names[(i + 1) % 3]);
            Relation::new(&label, &q_bracket(&a, &b) - &(k * &c3))
        })
        .collect()
}

fn cyclic_presentation(name: &str, names: [&str; 3], k: QLaurent) -> Presentation {
    let al = alphabet(&names, &[]);
    let sys = system(&al, cyclic_rules(&al, names, &k));
    let rels = cyclic_relations(&al, names, &k);
    Presentation::new(name, al, rels).with_rewriting(sys)
}

/// Bracket relations of `SH_{q,t}` together with `t ti = 1`, as a
/// confluent system; the Casimir is central here.
pub fn sh_a1_bracket_system() -> ReductionSystem {
    let al = alphabet(&["x", "y", "z"], &["t", "ti"]);
    let mut rules = cyclic_rules(&al, ["x", "y", "z"], &d2());
    rules.push(rule(&al, "t_ti", &["t", "ti"], NcPoly::one()));
    system(&al, rules)
}

fn sh_a1_presentation() -> Presentation {
    let al = alphabet(&["x", "y", "z"], &["t", "ti"]);
    let (x, y, z, t, ti) = (al.x("x"), al.x("y"), al.x("z"), al.x("t"), al.x("ti"));
    let mut rels = cyclic_relations(&al, ["x", "y", "z"], &d2());
    let casimir = lin(vec![
        (q(2), prod(&[&x, &x])),
        (q(-2), prod(&[&y, &y])),
        (q(2), prod(&[&z, &z])),
        (-q(1), prod(&[&x, &y, &z])),
    ]);
    let qq = &q(1) + &q(-1);
    let value = lin(vec![
        (q(-2), prod(&[&t, &t])),
        (QLaurent::int(-2), NcPoly::one()),
        (q(2), prod(&[&ti, &ti])),
        (&qq * &qq, NcPoly::one()),
    ]);
    rels.push(Relation::new("casimir", &casimir - &value));
    rels.push(Relation::new("t_ti", &prod(&[&t, &ti]) - &NcPoly::one()));
    Presentation::new("SH-A1", al, rels).with_derived("Casimir", casimir)
}

fn sh_cc1_presentation() -> Presentation {
    let al = alphabet(&["x", "y", "z"], &["T1", "T2", "T3", "T4"]);
    let (x, y, z) = (al.x("x"), al.x("y"), al.x("z"));
    let tt: Vec<NcPoly> = ["T1", "T2", "T3", "T4"].iter().map(|n| al.x(n)).collect();
    let pr = |i: usize, j: usize| prod(&[&tt[i - 1], &tt[j - 1]]);
    let alpha = &pr(1, 2) + &pr(3, 4);
    let beta = &pr(1, 4) + &pr(3, 2);
    let gamma = &pr(2, 4) + &pr(3, 1);
    let rel = |a: &NcPoly, b: &NcPoly, c3: &NcPoly, k: &NcPoly| {
        &(&q_bracket(a, b) - &(&d2() * c3)) + &(&d1() * k)
    };
    let omega = lin(vec![
        (-q(1), prod(&[&x, &y, &z])),
        (q(2), prod(&[&x, &x])),
        (q(-2), prod(&[&y, &y])),
        (q(2), prod(&[&z, &z])),
        (-q(1), prod(&[&alpha, &x])),
        (-q(-1), prod(&[&beta, &y])),
        (-q(1), prod(&[&gamma, &z])),
    ]);
    let sq = tt.iter().fold(NcPoly::zero(), |acc, p| &acc + &prod(&[p, p]));
    let qq = &q(1) + &q(-1);
    let value = &(&sq - &prod(&[&tt[0], &tt[1], &tt[2], &tt[3]])) + &c(&qq * &qq);
    let rels = vec![
        Relation::new("[x,y]", rel(&x, &y, &z, &gamma)),
        Relation::new("[y,z]", rel(&y, &z, &x, &alpha)),
        Relation::new("[z,x]", rel(&z, &x, &y, &beta)),
        Relation::new("Omega", &omega - &value),
    ];
    Presentation::new("SH-CC1", al, rels)
        .with_derived("alpha", alpha)
        .with_derived("beta", beta)
        .with_derived("gamma", gamma)
        .with_derived("Omega", omega)
}

fn sk_s04_presentation(printed: bool) -> Presentation {
    let al = alphabet(&["x1", "x2", "x3"], &["p1", "p2", "p3", "p4"]);
    let xs: Vec<NcPoly> = ["x1", "x2", "x3"].iter().map(|n| al.x(n)).collect();
    let ps: Vec<NcPoly> = ["p1", "p2", "p3", "p4"].iter().map(|n| al.x(n)).collect();
    let pp = |i: usize, j: usize| prod(&[&ps[i - 1], &ps[j - 1]]);
    // Parameters paired with x1, x2, x3 in the bracket relations.
    let big_p = [&pp(1, 3) + &pp(2, 4), &pp(1, 2) + &pp(3, 4), &pp(1, 4) + &pp(2, 3)];
    let mut rels = Vec::new();
    for i in 0..3 {
        let br = q_bracket_pow(&xs[i], &xs[(i + 1) % 3], 2);
        let lhs = &br - &(&qdiff(4, -4) * &xs[(i + 2) % 3]);
        let r = if printed { &lhs + &(&d2() * &ps[i]) } else { &lhs - &(&d2() * &big_p[i]) };
        rels.push(Relation::new(&alloc::format!("[x{},x{}]", i + 1, (i + 1) % 3 + 1), r));
    }
    let lin_terms = if printed {
        lin(vec![
            (q(2), prod(&[&ps[0], &xs[0]])),
            (q(-2), prod(&[&ps[1], &xs[1]])),
            (q(2), prod(&[&ps[2], &xs[2]])),
        ])
    } else {
        lin(vec![
            (q(2), prod(&[&big_p[1], &xs[0]])),
            (q(-2), prod(&[&big_p[2], &xs[1]])),
            (q(2), prod(&[&big_p[0], &xs[2]])),
        ])
    };
    let omega = &lin(vec![
        (-q(2), prod(&[&xs[0], &xs[1], &xs[2]])),
        (q(4), prod(&[&xs[0], &xs[0]])),
        (q(-4), prod(&[&xs[1], &xs[1]])),
        (q(4), prod(&[&xs[2], &xs[2]])),
    ]) + &lin_terms;
    let sq = ps.iter().fold(NcPoly::zero(), |acc, p| &acc + &prod(&[p, p]));
    let qq = &q(2) + &q(-2);
    let value = &c(&qq * &qq) - &(&prod(&[&ps[0], &ps[1], &ps[2], &ps[3]]) + &sq);
    rels.push(Relation::new("Omega_K", &omega - &value));
    let name = if printed { "Sk-s04-printed" } else { "Sk-s04" };
    Presentation::new(name, al, rels).with_derived("Omega_K", omega)
}

fn ab_s04_presentation() -> Presentation {
    let al = alphabet(&["Lu", "Ls", "Lt"], &["L1", "L2", "L3", "L4"]);
    let (lu, ls, lt) = (al.x("Lu"), al.x("Ls"), al.x("Lt"));
    let l: Vec<NcPoly> = ["L1", "L2", "L3", "L4"].iter().map(|n| al.x(n)).collect();
    let ll = |i: usize, j: usize| prod(&[&l[i - 1], &l[j - 1]]);
    let q_e = |a: &NcPoly, b: &NcPoly, c3: &NcPoly, k: NcPoly| {
        &(&q_bracket(a, b) - &(&d2() * c3)) - &(&d1() * &k)
    };
    let p14 = &ll(1, 4) + &ll(2, 3);
    let p13 = &ll(1, 3) + &ll(2, 4);
    let p34 = &ll(3, 4) + &ll(2, 1);
    let qq = &q(1) + &q(-1);
    let sq = l.iter().fold(NcPoly::zero(), |acc, p| &acc + &prod(&[p, p]));
    let p_e = &lin(vec![
        (-q(1), prod(&[&ls, &lt, &lu])),
        (q(2), prod(&[&lu, &lu])),
        (q(2), prod(&[&ls, &ls])),
        (q(-2), prod(&[&lt, &lt])),
        (q(1), prod(&[&p13, &lu])),
        (q(1), prod(&[&p34, &ls])),
        (q(-1), prod(&[&p14, &lt])),
        (QLaurent::one(), sq),
        (QLaurent::one(), prod(&[&l[0], &l[2], &l[1], &l[3]])),
    ]) - &c(&qq * &qq);
    let rels = vec![
        Relation::new("Q_us", q_e(&lu, &ls, &lt, p14)),
        Relation::new("Q_st", q_e(&ls, &lt, &lu, p13)),
        Relation::new("Q_tu", q_e(&lt, &lu, &ls, p34)),
        Relation::new("P", p_e),
    ];
    Presentation::new("Ab-s04", al, rels)
}

fn ab_t11_presentation(printed: bool) -> Presentation {
    let al = alphabet(&["Ls", "Lt", "Lu"], &["L0"]);
    let (ls, lt, lu, l0) = (al.x("Ls"), al.x("Lt"), al.x("Lu"), al.x("L0"));
    // e^{pi i/2}: i when printed, q^(1/2) otherwise.
    let (h, hi) = if printed { (QLaurent::i(), -QLaurent::i()) } else { (QLaurent::qh(1), QLaurent::qh(-1)) };
    let q_e = lin(vec![(h.clone(), prod(&[&ls, &lt])), (-hi, prod(&[&lt, &ls])), (-d1(), lu.clone())]);
    let p_e = lin(vec![
        (q(1), prod(&[&ls, &ls])),
        (q(-1), prod(&[&lt, &lt])),
        (q(1), prod(&[&lu, &lu])),
        (-h, prod(&[&ls, &lt, &lu])),
        (QLaurent::one(), l0),
        (-(&q(1) + &q(-1)), NcPoly::one()),
    ]);
    let name = if printed { "Ab-t11-printed" } else { "Ab-t11" };
    Presentation::new(name, al, vec![Relation::new("Q", q_e), Relation::new("P", p_e)])
}

/// Every builtin presentation and morphism.
#[derive(Clone, Debug)]
pub struct Catalog {
    presentations: BTreeMap<String, Presentation>,
    morphisms: BTreeMap<String, AlgebraMorphism>,
}

impl Resolver for Catalog {
    fn presentation(&self, name: &str) -> Option<&Presentation> {
        self.presentations.get(name)
    }
    fn morphism(&self, name: &str) -> Option<&AlgebraMorphism> {
        self.morphisms.get(name)
    }
}

/// One-line descriptions for listings.
pub const PRESENTATION_DOCS: &[(&str, &str)] = &[
    ("Oq-sigma", "reflection equation algebra, sigma rules, det_q = 1"),
    ("Oq-sigma-printed", "sigma rules with the printed sign on a12 a21 (det_q = -1)"),
    ("Oq-tau", "reflection equation algebra under the alternative order, tau rules"),
    ("Oq-tau-printed", "tau rules with the printed sign on a11 a21"),
    ("A-s04", "three glued blocks for the four-punctured sphere"),
    ("A-s04-alt", "A-s04 with the tau rules on the middle block"),
    ("A-t11", "two linked blocks for the punctured torus, printed det sign"),
    ("A-t11-det1", "A-t11 with det_q = 1 on both blocks"),
    ("B", "generators E, F, G over central s, t, u, v"),
    ("B-printed", "B with the printed q^-4 on the squares in EFG"),
    ("B-GE-summary", "B with the summary form of the GE relation"),
    ("T", "generators X, Y, Z with a central element L"),
    ("GB", "associated graded of B with the family E F^n G"),
    ("Sk-s04", "skein algebra of the four-punctured sphere"),
    ("Sk-s04-printed", "Sk-s04 with the printed parameter terms"),
    ("Sk-t11", "skein algebra of the punctured torus"),
    ("SH-A1", "spherical DAHA of type A1"),
    ("SH-CC1", "spherical DAHA of type C^vC1"),
    ("Usu2", "cyclic deformation of U(su2)"),
    ("Ab-s04", "Teschner-Vartanov algebra for the four-punctured sphere"),
    ("Ab-t11", "Teschner-Vartanov algebra for the punctured torus"),
    ("Ab-t11-printed", "Ab-t11 reading e^{pi i/2} as i"),
];

pub const MORPHISM_DOCS: &[(&str, &str)] = &[
    ("Phi", "B -> A-s04 by quantum traces"),
    ("Phi-printed", "B-printed -> A-s04"),
    ("GE-variant-defn", "Phi on B with the definition form of GE"),
    ("GE-variant-summary", "Phi on B-GE-summary"),
    ("Psi", "T -> A-t11 by quantum traces"),
    ("Psi-det1", "T -> A-t11-det1"),
    ("alpha", "SH-CC1 -> B, checked through Phi"),
    ("beta", "Sk-s04 -> B, skein q^2 to q, checked through Phi"),
    ("beta-printed", "Sk-s04-printed -> B"),
    ("gamma", "T -> Sk-t11, q to skein q^2"),
    ("delta", "Sk-s04 -> SH-CC1, checked through alpha and Phi"),
    ("delta-printed", "Sk-s04-printed -> SH-CC1"),
    ("iota", "B -> Ab-s04, checked through its inverse"),
    ("iota-inv", "Ab-s04 -> B, checked through Phi"),
    ("iota-printed", "iota with the printed images of u and v"),
    ("iota-inv-printed", "inverse of iota-printed"),
    ("kappa", "SH-CC1 -> Ab-s04, checked through iota-inv and Phi"),
    ("kappa-printed", "kappa with the printed images of T3 and T4"),
    ("mu", "T -> Ab-t11, checked through its inverse"),
    ("mu-summary", "mu as printed in the overview"),
    ("mu-inv", "Ab-t11 -> T, L0 to L + 2q"),
    ("mu-printed", "T -> Ab-t11-printed, checked through its inverse"),
    ("mu-inv-printed", "Ab-t11-printed -> T"),
    ("nu", "Sk-t11 -> Usu2"),
];

impl Catalog {
    pub fn builtin() -> Catalog {
        let mut cat = Catalog { presentations: BTreeMap::new(), morphisms: BTreeMap::new() };
        cat.add(oq_presentation("Oq-sigma", oq_sigma(DetSign::One)));
        cat.add(Presentation::from_system("Oq-sigma-printed", oq_sigma(DetSign::Printed)));
        cat.add(oq_presentation("Oq-tau", oq_tau(false)));
        cat.add(Presentation::from_system("Oq-tau-printed", oq_tau(true)));
        let built = |p: GluingPattern, det, alt_middle| {
            build_algebra(&p, BuildOptions { det, alt_middle }).expect("builtin gluing pattern")
        };
        cat.add(Presentation::from_system("A-s04", built(GluingPattern::sphere4(), DetSign::One, false)));
        cat.add(Presentation::from_system("A-s04-alt", built(GluingPattern::sphere4(), DetSign::One, true)));
        cat.add(Presentation::from_system("A-t11", built(GluingPattern::torus1(), DetSign::Printed, false)));
        cat.add(Presentation::from_system("A-t11-det1", built(GluingPattern::torus1(), DetSign::One, false)));
        cat.add(b_presentation("B", BForm::Defn));
        cat.add(b_presentation("B-printed", BForm::PrintedEfg));
        cat.add(b_presentation("B-GE-summary", BForm::SummaryGe));
        cat.add(t_presentation());
        let mut gb = Presentation::from_system("GB", gb_system(DEFAULT_FAMILY_BOUND));
        gb.relations.retain(|r| !r.label.starts_with("central_"));
        cat.add(gb);
        cat.add(sk_s04_presentation(false));
        cat.add(sk_s04_presentation(true));
        cat.add(cyclic_presentation("Sk-t11", ["x1", "x2", "x3"], d2()));
        cat.add(sh_a1_presentation());
        cat.add(sh_cc1_presentation());
        cat.add(cyclic_presentation("Usu2", ["y1", "y2", "y3"], QLaurent::one()));
        cat.add(ab_s04_presentation());
        cat.add(ab_t11_presentation(false));
        cat.add(ab_t11_presentation(true));
        cat.add_morphisms();
        cat
    }

    pub fn add(&mut self, p: Presentation) {
        self.presentations.insert(p.name.clone(), p);
    }

    pub fn add_morphism(&mut self, m: AlgebraMorphism) {
        self.morphisms.insert(m.name.clone(), m);
    }

    pub fn remove(&mut self, name: &str) -> bool {
        self.presentations.remove(name).is_some() | self.morphisms.remove(name).is_some()
    }

    pub fn presentation_names(&self) -> impl Iterator<Item = &str> {
        self.presentations.keys().map(|s| s.as_str())
    }

    pub fn morphism_names(&self) -> impl Iterator<Item = &str> {
        self.morphisms.keys().map(|s| s.as_str())
    }

    pub fn get_presentation(&self, name: &str) -> Option<&Presentation> {
        self.presentations.get(name)
    }

    pub fn get_morphism(&self, name: &str) -> Option<&AlgebraMorphism> {
        self.morphisms.get(name)
    }

    fn p(&self, name: &str) -> &Presentation {
        &self.presentations[name]
    }

    fn mor(&mut self, name: &str, src: &str, tgt: &str, images: Vec<(&str, NcPoly)>, scalar: ScalarMap, route: Route) {
        let m = AlgebraMorphism::new(name, self.p(src), self.p(tgt), images, scalar, route)
            .expect("builtin morphism assigns every generator");
        self.add_morphism(m);
    }

    fn add_morphisms(&mut self) {
        let one = ScalarMap::IDENTITY;
        let half = ScalarMap { num: 1, den: 2 };
        let i = QLaurent::i;

        // Phi and its variants.
        let a3 = self.p("A-s04").alphabet.clone();
        let (ma, mb, mc) = (block_matrix(&a3, "a"), block_matrix(&a3, "b"), block_matrix(&a3, "c"));
        let phi_images = || {
            vec![
                ("E", ma.mul(&mb).trace_q()),
                ("F", ma.mul(&mc).trace_q()),
                ("G", mb.mul(&mc).trace_q()),
                ("s", ma.trace_q()),
                ("t", mb.trace_q()),
                ("u", mc.trace_q()),
                ("v", ma.mul(&mb).mul(&mc).trace_q()),
            ]
        };
        self.mor("Phi", "B", "A-s04", phi_images(), one, Route::Direct);
        self.mor("Phi-printed", "B-printed", "A-s04", phi_images(), one, Route::Direct);
        self.mor("GE-variant-defn", "B", "A-s04", phi_images(), one, Route::Direct);
        self.mor("GE-variant-summary", "B-GE-summary", "A-s04", phi_images(), one, Route::Direct);

        for (name, tgt) in [("Psi", "A-t11"), ("Psi-det1", "A-t11-det1")] {
            let a2 = self.p(tgt).alphabet.clone();
            let (ma, mb) = (block_matrix(&a2, "a"), block_matrix(&a2, "b"));
            let images = vec![("X", ma.trace_q()), ("Y", mb.trace_q()), ("Z", ma.mul(&mb).trace_q())];
            self.mor(name, "T", tgt, images, one, Route::Direct);
        }

        let b_al = self.p("B").alphabet.clone();
        let bx = |n: &str| b_al.x(n);
        let mq = -q(1);
        let alpha = vec![
            ("x", &mq * &bx("E")),
            ("y", &mq * &bx("F")),
            ("z", &mq * &bx("G")),
            ("T1", &(&i() * &q(1)) * &bx("s")),
            ("T2", &(&i() * &q(1)) * &bx("t")),
            ("T3", &(&i() * &q(1)) * &bx("v")),
            ("T4", &(&i() * &q(1)) * &bx("u")),
        ];
        self.mor("alpha", "SH-CC1", "B", alpha, one, Route::Via(vec!["Phi".into()]));

        let beta = || {
            vec![
                ("x1", &mq * &bx("E")),
                ("x2", &mq * &bx("F")),
                ("x3", &mq * &bx("G")),
                ("p1", &mq * &bx("s")),
                ("p2", &mq * &bx("t")),
                ("p3", &mq * &bx("v")),
                ("p4", &mq * &bx("u")),
            ]
        };
        self.mor("beta", "Sk-s04", "B", beta(), half, Route::Via(vec!["Phi".into()]));
        self.mor("beta-printed", "Sk-s04-printed", "B", beta(), half, Route::Via(vec!["Phi".into()]));

        let h_al = self.p("SH-CC1").alphabet.clone();
        let hx = |n: &str| h_al.x(n);
        let delta = vec![
            ("x1", hx("x")),
            ("x2", hx("y")),
            ("x3", hx("z")),
            ("p1", &i() * &hx("T1")),
            ("p2", &i() * &hx("T2")),
            ("p3", &i() * &hx("T3")),
            ("p4", &i() * &hx("T4")),
        ];
        let via_alpha = Route::Via(vec!["alpha".into(), "Phi".into()]);
        self.mor("delta", "Sk-s04", "SH-CC1", delta.clone(), half, via_alpha.clone());
        self.mor("delta-printed", "Sk-s04-printed", "SH-CC1", delta, half, via_alpha);

        let s_al = self.p("Sk-t11").alphabet.clone();
        let sx = |n: &str| s_al.x(n);
        let gamma = vec![
            ("X", &(&i() * &q(-2)) * &sx("x2")),
            ("Y", &(&i() * &q(-2)) * &sx("x1")),
            ("Z", &-q(-5) * &sx("x3")),
        ];
        self.mor("gamma", "T", "Sk-t11", gamma, ScalarMap { num: 2, den: 1 }, Route::Direct);

        let u_al = self.p("Usu2").alphabet.clone();
        let ux = |n: &str| u_al.x(n);
        let nu = vec![("x1", &d2() * &ux("y1")), ("x2", &d2() * &ux("y2")), ("x3", &d2() * &ux("y3"))];
        self.mor("nu", "Sk-t11", "Usu2", nu, one, Route::Direct);

        // iota and its inverse; the printed form swaps the images of u and v.
        let l_al = self.p("Ab-s04").alphabet.clone();
        let lx = |n: &str| l_al.x(n);
        for (suffix, l_u, l_v) in [("", "L2", "L4"), ("-printed", "L4", "L2")] {
            let mqi = -q(-1);
            let iota = vec![
                ("E", &mqi * &lx("Lu")),
                ("F", &mqi * &lx("Ls")),
                ("G", &mqi * &lx("Lt")),
                ("s", &q(-1) * &lx("L1")),
                ("t", &q(-1) * &lx("L3")),
                ("u", &q(-1) * &lx(l_u)),
                ("v", &q(-1) * &lx(l_v)),
            ];
            let inv = vec![
                ("Lu", &mq * &bx("E")),
                ("Ls", &mq * &bx("F")),
                ("Lt", &mq * &bx("G")),
                ("L1", &q(1) * &bx("s")),
                ("L3", &q(1) * &bx("t")),
                (l_u, &q(1) * &bx("u")),
                (l_v, &q(1) * &bx("v")),
            ];
            let inv_name = alloc::format!("iota-inv{}", suffix);
            self.mor(&inv_name, "Ab-s04", "B", inv, one, Route::Via(vec!["Phi".into()]));
            self.mor(&alloc::format!("iota{}", suffix), "B", "Ab-s04", iota, one, Route::Inverse(inv_name));
        }

        for (name, t3, t4) in [("kappa", "L4", "L2"), ("kappa-printed", "L2", "L4")] {
            let kappa = vec![
                ("x", lx("Lu")),
                ("y", lx("Ls")),
                ("z", lx("Lt")),
                ("T1", &i() * &lx("L1")),
                ("T2", &i() * &lx("L3")),
                ("T3", &i() * &lx(t3)),
                ("T4", &i() * &lx(t4)),
            ];
            self.mor(name, "SH-CC1", "Ab-s04", kappa, one, Route::Via(vec!["iota-inv".into(), "Phi".into()]));
        }

        let t_al = self.p("T").alphabet.clone();
        let tx = |n: &str| t_al.x(n);
        let l_t = self.p("T").derived("L").expect("L").clone();
        for (suffix, tgt) in [("", "Ab-t11"), ("-printed", "Ab-t11-printed")] {
            let a_al = self.p(tgt).alphabet.clone();
            let ax = |n: &str| a_al.x(n);
            let mu = vec![
                ("Y", &(&i() * &q(-1)) * &ax("Ls")),
                ("X", &(&i() * &q(-1)) * &ax("Lt")),
                ("Z", &-QLaurent::qh(-5) * &ax("Lu")),
            ];
            let inv = vec![
                ("Ls", &(&-i() * &q(1)) * &tx("Y")),
                ("Lt", &(&-i() * &q(1)) * &tx("X")),
                ("Lu", &-QLaurent::qh(5) * &tx("Z")),
                ("L0", &l_t + &c(QLaurent::from(2).shift(2))),
            ];
            let inv_name = alloc::format!("mu-inv{}", suffix);
            self.mor(&inv_name, tgt, "T", inv, one, Route::Direct);
            self.mor(&alloc::format!("mu{}", suffix), "T", tgt, mu.clone(), one, Route::Inverse(inv_name.clone()));
            if suffix.is_empty() {
                self.mor("mu-summary", "T", tgt, mu, one, Route::Inverse(inv_name));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homcheck::check_morphism;

    #[test]
    fn presentations_satisfy_their_rewriting() {
        let cat = Catalog::builtin();
        for name in cat.presentation_names() {
            let p = cat.get_presentation(name).unwrap();
            for r in &p.relations {
                r.poly.check_alphabet(&p.alphabet).unwrap();
            }
            if name == "A-s04" || name == "A-s04-alt" {
                continue;
            }
            assert!(p.unsatisfied_relations().unwrap().is_empty(), "{}", name);
        }
    }

    #[test]
    fn docs_cover_catalog() {
        let cat = Catalog::builtin();
        let pn: Vec<&str> = cat.presentation_names().collect();
        let mn: Vec<&str> = cat.morphism_names().collect();
        assert_eq!(pn.len(), PRESENTATION_DOCS.len());
        assert_eq!(mn.len(), MORPHISM_DOCS.len());
        for (n, _) in PRESENTATION_DOCS {
            assert!(pn.contains(n), "{}", n);
        }
        for (n, _) in MORPHISM_DOCS {
            assert!(mn.contains(n), "{}", n);
        }
    }

    #[test]
    fn gamma_and_nu_pass() {
        let cat = Catalog::builtin();
        for n in ["gamma", "nu", "Psi"] {
            let r = check_morphism(&cat, cat.get_morphism(n).unwrap()).unwrap();
            assert!(r.passed(), "{}", n);
        }
        let r = check_morphism(&cat, cat.get_morphism("Psi-det1").unwrap()).unwrap();
        assert!(!r.passed());
    }

    #[test]
    fn mu_pair() {
        let cat = Catalog::builtin();
        let r = check_morphism(&cat, cat.get_morphism("mu").unwrap()).unwrap();
        assert!(r.passed(), "{:?}", r.relations);
        let inv = r.inverse.unwrap();
        assert!(inv.holds());
        let l0 = inv.target_side.iter().find(|(g, _)| g == "L0").unwrap();
        assert_eq!(l0.1, crate::homcheck::RoundTrip::ModKernel);
        assert!(!check_morphism(&cat, cat.get_morphism("mu-printed").unwrap()).unwrap().passed());
    }
}
