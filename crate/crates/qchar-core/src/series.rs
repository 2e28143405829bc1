//! Truncated graded characters in `t` and `u`, their closed forms, and the
//! invariant Hilbert series read off the `u^1` coefficient.

use alloc::collections::BTreeMap;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::freealg::{word_grade, Alphabet, GradeMode, Letter, Word};
use crate::rewrite::ReductionSystem;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesError {
    NotExpandable,
    TruncationMismatch { left: usize, right: usize },
    NotBlockPbw(String),
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::NotExpandable => write!(f, "denominator has no invertible constant term"),
            SeriesError::TruncationMismatch { left, right } => {
                write!(f, "series truncated at t^{} and t^{}", left, right)
            }
            SeriesError::NotBlockPbw(why) => write!(f, "no per-block PBW description: {}", why),
        }
    }
}

/// Laurent polynomial in `u`, keyed by exponent.
pub type UPoly = BTreeMap<i64, i64>;

fn upoly_add(a: &mut UPoly, e: i64, c: i64) {
    if c == 0 {
        return;
    }
    let v = a.entry(e).or_insert(0);
    *v += c;
    if *v == 0 {
        a.remove(&e);
    }
}

/// `sum c(n, e) t^n u^e` for `n <= max_t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSeries {
    pub max_t: usize,
    rows: Vec<UPoly>,
}

impl BiSeries {
    pub fn zero(max_t: usize) -> Self {
        BiSeries { max_t, rows: alloc::vec![UPoly::new(); max_t + 1] }
    }

    pub fn one(max_t: usize) -> Self {
        let mut s = Self::zero(max_t);
        s.add(0, 0, 1);
        s
    }

    /// From `(t-degree, u-exponent, coefficient)` triples; terms past
    /// `max_t` are dropped.
    pub fn from_terms<I: IntoIterator<Item = (usize, i64, i64)>>(max_t: usize, it: I) -> Self {
        let mut s = Self::zero(max_t);
        for (n, e, c) in it {
            s.add(n, e, c);
        }
        s
    }

    pub fn add(&mut self, n: usize, e: i64, c: i64) {
        if n <= self.max_t {
            upoly_add(&mut self.rows[n], e, c);
        }
    }

    pub fn get(&self, n: usize, e: i64) -> i64 {
        self.rows.get(n).and_then(|r| r.get(&e)).copied().unwrap_or(0)
    }

    pub fn row(&self, n: usize) -> &UPoly {
        &self.rows[n]
    }

    /// Coefficient of `t^n` at `u = 1`.
    pub fn total(&self, n: usize) -> i64 {
        self.rows[n].values().sum()
    }

    pub fn truncate(&self, max_t: usize) -> BiSeries {
        let m = max_t.min(self.max_t);
        BiSeries { max_t: m, rows: self.rows[..=m].to_vec() }
    }

    pub fn mul(&self, o: &BiSeries) -> BiSeries {
        let m = self.max_t.min(o.max_t);
        let mut out = Self::zero(m);
        for n1 in 0..=m {
            for n2 in 0..=m - n1 {
                for (e1, c1) in &self.rows[n1] {
                    for (e2, c2) in &o.rows[n2] {
                        out.add(n1 + n2, e1 + e2, c1 * c2);
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> BiSeries {
        (0..k).fold(Self::one(self.max_t), |acc, _| acc.mul(self))
    }

    /// Exchanges `u` and `u^-1`.
    pub fn mirrored(&self) -> BiSeries {
        let rows = self.rows.iter().map(|r| r.iter().map(|(e, c)| (-e, *c)).collect()).collect();
        BiSeries { max_t: self.max_t, rows }
    }

    pub fn lines(&self) -> Vec<String> {
        (0..=self.max_t).map(|n| format!("t^{}: {}", n, fmt_upoly(&self.rows[n]))).collect()
    }
}

fn fmt_upoly(p: &UPoly) -> String {
    if p.is_empty() {
        return String::from("0");
    }
    let parts: Vec<String> = p
        .iter()
        .map(|(e, c)| if *e == 0 { format!("{}", c) } else { format!("{} u^{}", c, e) })
        .collect();
    parts.join(" ")
}

impl fmt::Display for BiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in self.lines() {
            writeln!(f, "{}", l)?;
        }
        Ok(())
    }
}

/// Truncated power series in `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    pub coeffs: Vec<i64>,
}

impl Series {
    pub fn max_t(&self) -> usize {
        self.coeffs.len() - 1
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| format!("{}", c)).collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// `numerator / denominator`, both polynomials in `t` with Laurent
/// polynomial coefficients in `u` (index = power of `t`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeriesSpec {
    pub numerator: Vec<UPoly>,
    pub denominator: Vec<UPoly>,
}

/// Polynomial in `t` and `u` from `(t-power, u-exponent, coefficient)`.
pub fn tu_poly(terms: &[(usize, i64, i64)]) -> Vec<UPoly> {
    let deg = terms.iter().map(|t| t.0).max().unwrap_or(0);
    let mut v = alloc::vec![UPoly::new(); deg + 1];
    for &(n, e, c) in terms {
        upoly_add(&mut v[n], e, c);
    }
    v
}

fn upoly_mul(a: &UPoly, b: &UPoly) -> UPoly {
    let mut out = UPoly::new();
    for (e1, c1) in a {
        for (e2, c2) in b {
            upoly_add(&mut out, e1 + e2, c1 * c2);
        }
    }
    out
}

fn tpoly_mul(a: &[UPoly], b: &[UPoly]) -> Vec<UPoly> {
    let mut out = alloc::vec![UPoly::new(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            for (e, c) in upoly_mul(x, y) {
                upoly_add(&mut out[i + j], e, c);
            }
        }
    }
    out
}

impl RationalSeriesSpec {
    pub fn new(numerator: Vec<UPoly>, denominator: Vec<UPoly>) -> Self {
        RationalSeriesSpec { numerator, denominator }
    }

    /// Numerator and denominator are products of the given factors.
    pub fn from_factors(num: &[Vec<UPoly>], den: &[Vec<UPoly>]) -> Self {
        let one = tu_poly(&[(0, 0, 1)]);
        let n = num.iter().fold(one.clone(), |acc, f| tpoly_mul(&acc, f));
        let d = den.iter().fold(one, |acc, f| tpoly_mul(&acc, f));
        RationalSeriesSpec::new(n, d)
    }

    pub fn pow(&self, k: u32) -> Self {
        let one = tu_poly(&[(0, 0, 1)]);
        let mut n = one.clone();
        let mut d = one;
        for _ in 0..k {
            n = tpoly_mul(&n, &self.numerator);
            d = tpoly_mul(&d, &self.denominator);
        }
        RationalSeriesSpec::new(n, d)
    }
}

/// `(1+t) / ((1-t)(1-u^2 t)(1-u^-2 t))`.
pub fn oq_character_spec() -> RationalSeriesSpec {
    RationalSeriesSpec::from_factors(
        &[tu_poly(&[(0, 0, 1), (1, 0, 1)])],
        &[tu_poly(&[(0, 0, 1), (1, 0, -1)]), tu_poly(&[(0, 0, 1), (1, 2, -1)]), tu_poly(&[(0, 0, 1), (1, -2, -1)])],
    )
}

/// `(1 - t + t^2) / ((1-t)^6 (1+t)^2)`.
pub fn s04_hilbert_spec() -> RationalSeriesSpec {
    let one_minus = tu_poly(&[(0, 0, 1), (1, 0, -1)]);
    let one_plus = tu_poly(&[(0, 0, 1), (1, 0, 1)]);
    let mut den = alloc::vec![one_minus; 6];
    den.extend([one_plus.clone(), one_plus]);
    RationalSeriesSpec::from_factors(&[tu_poly(&[(0, 0, 1), (1, 0, -1), (2, 0, 1)])], &den)
}

/// `1 / ((1-t)^3 (1+t))`.
pub fn t11_hilbert_spec() -> RationalSeriesSpec {
    let one_minus = tu_poly(&[(0, 0, 1), (1, 0, -1)]);
    let one_plus = tu_poly(&[(0, 0, 1), (1, 0, 1)]);
    RationalSeriesSpec::from_factors(&[], &[one_minus.clone(), one_minus.clone(), one_minus, one_plus])
}

/// `1 / ((1-t)^2 (1-t^2))`, the other printed form of the torus series.
pub fn t11_hilbert_spec_alt() -> RationalSeriesSpec {
    let one_minus = tu_poly(&[(0, 0, 1), (1, 0, -1)]);
    RationalSeriesSpec::from_factors(&[], &[one_minus.clone(), one_minus, tu_poly(&[(0, 0, 1), (2, 0, -1)])])
}

/// Truncated expansion by long division. The constant term of the
/// denominator must be `±u^k`.
pub fn expand_closed_form(spec: &RationalSeriesSpec, max_t: usize) -> Result<BiSeries, SeriesError> {
    let d0 = spec.denominator.first().ok_or(SeriesError::NotExpandable)?;
    if d0.len() != 1 {
        return Err(SeriesError::NotExpandable);
    }
    let (&e0, &c0) = d0.iter().next().unwrap();
    if c0 != 1 && c0 != -1 {
        return Err(SeriesError::NotExpandable);
    }
    // out[n] = (num[n] - sum_{k>=1} den[k] out[n-k]) / den[0]
    let mut rows: Vec<UPoly> = Vec::with_capacity(max_t + 1);
    for n in 0..=max_t {
        let mut acc = spec.numerator.get(n).cloned().unwrap_or_default();
        for k in 1..=n.min(spec.denominator.len().saturating_sub(1)) {
            for (e, c) in upoly_mul(&spec.denominator[k], &rows[n - k]) {
                upoly_add(&mut acc, e, -c);
            }
        }
        let row: UPoly = acc.into_iter().map(|(e, c)| (e - e0, c * c0)).collect();
        rows.push(row);
    }
    Ok(BiSeries { max_t, rows })
}

/// Univariate expansion of a spec without `u`.
pub fn expand_univariate(spec: &RationalSeriesSpec, max_t: usize) -> Result<Series, SeriesError> {
    let b = expand_closed_form(spec, max_t)?;
    Ok(Series { coeffs: (0..=max_t).map(|n| b.total(n)).collect() })
}

/// Coefficient of `u^1` in `(u - u^-1) h(u, t)`, i.e. `c(n, 0) - c(n, 2)`.
pub fn invariant_hilbert(ch: &BiSeries) -> Series {
    Series { coeffs: (0..=ch.max_t).map(|n| ch.get(n, 0) - ch.get(n, 2)).collect() }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Comparison {
    Pass,
    /// First mismatch in `(t-degree, u-exponent)` order.
    Mismatch { t: usize, u: i64, left: i64, right: i64 },
}

impl Comparison {
    pub fn passed(&self) -> bool {
        *self == Comparison::Pass
    }
}

pub fn compare_series(a: &BiSeries, b: &BiSeries) -> Result<Comparison, SeriesError> {
    if a.max_t != b.max_t {
        return Err(SeriesError::TruncationMismatch { left: a.max_t, right: b.max_t });
    }
    for n in 0..=a.max_t {
        let keys: BTreeSet<i64> = a.rows[n].keys().chain(b.rows[n].keys()).copied().collect();
        for e in keys {
            let (l, r) = (a.get(n, e), b.get(n, e));
            if l != r {
                return Ok(Comparison::Mismatch { t: n, u: e, left: l, right: r });
            }
        }
    }
    Ok(Comparison::Pass)
}

pub fn compare_univariate(a: &Series, b: &Series) -> Result<Comparison, SeriesError> {
    if a.coeffs.len() != b.coeffs.len() {
        return Err(SeriesError::TruncationMismatch { left: a.max_t(), right: b.max_t() });
    }
    for (n, (l, r)) in a.coeffs.iter().zip(&b.coeffs).enumerate() {
        if l != r {
            return Ok(Comparison::Mismatch { t: n, u: 0, left: *l, right: *r });
        }
    }
    Ok(Comparison::Pass)
}

/// Counts reduced monomials by length and total weight, enumerating words.
pub fn pbw_graded_character(sys: &ReductionSystem, max_t: usize) -> BiSeries {
    let mut out = BiSeries::zero(max_t);
    for w in sys.reduced_monomials(max_t) {
        out.add(w.len(), word_grade(&w, GradeMode::Weight, &sys.alphabet), 1);
    }
    out
}

/// Character of monomials `x1^n1 x2^n2 x3^n3 x4^n4` (in this order) whose
/// letters have the given weights, with `n_i n_j = 0` for the forbidden
/// pair `(i, j)`.
pub fn block_pbw_character(weights: [i64; 4], forbidden: (usize, usize), max_t: usize) -> BiSeries {
    let mut out = BiSeries::zero(max_t);
    let mut n = [0usize; 4];
    fn rec(k: usize, left: usize, n: &mut [usize; 4], w: &[i64; 4], forb: (usize, usize), out: &mut BiSeries, max_t: usize) {
        if k == 4 {
            if n[forb.0] > 0 && n[forb.1] > 0 {
                return;
            }
            let deg: usize = n.iter().sum();
            let wt: i64 = (0..4).map(|i| n[i] as i64 * w[i]).sum();
            out.add(deg, wt, 1);
            let _ = max_t;
            return;
        }
        for e in 0..=left {
            n[k] = e;
            rec(k + 1, left - e, n, w, forb, out, max_t);
        }
        n[k] = 0;
    }
    rec(0, max_t, &mut n, &weights, forbidden, &mut out, max_t);
    out
}

/// Blocks of four consecutive letters named `x.i.j`, in alphabet order.
fn blocks(alpha: &Alphabet) -> Result<Vec<[Letter; 4]>, SeriesError> {
    if alpha.len() % 4 != 0 || alpha.is_empty() {
        return Err(SeriesError::NotBlockPbw(String::from("alphabet is not made of 4-letter blocks")));
    }
    let mut out = Vec::new();
    for k in 0..alpha.len() / 4 {
        let ls = [0, 1, 2, 3].map(|i| (4 * k + i) as Letter);
        let stem = |l: Letter| alpha.get(l).name.split('.').next().map(String::from);
        let s0 = stem(ls[0]);
        if s0.is_none() || ls.iter().any(|&l| stem(l) != s0 || !alpha.get(l).name.contains('.')) {
            return Err(SeriesError::NotBlockPbw(format!("letters {}..{} are not one block", 4 * k, 4 * k + 3)));
        }
        out.push(ls);
    }
    Ok(out)
}

/// Does `w` have the shape: block by block in order, letters ascending
/// inside each block, never both letters of the block's forbidden pair?
fn fits_pattern(w: &Word, blocks: &[([Letter; 4], (usize, usize))]) -> bool {
    let mut last: Option<Letter> = None;
    for &l in &w.0 {
        if let Some(p) = last {
            if l < p {
                return false;
            }
        }
        last = Some(l);
    }
    for (ls, (i, j)) in blocks {
        if w.0.contains(&ls[*i]) && w.0.contains(&ls[*j]) {
            return false;
        }
    }
    true
}

/// The fast counter: reads off each block's forbidden pair from the
/// system, checks that up to `check_degree` the reduced monomials are
/// exactly the block pattern, then multiplies per-block characters.
pub fn pbw_character_fast(sys: &ReductionSystem, max_t: usize, check_degree: usize) -> Result<BiSeries, SeriesError> {
    let alpha = &sys.alphabet;
    let bs = blocks(alpha)?;
    let mut described = Vec::new();
    for ls in &bs {
        let mut forb = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                if !sys.is_reduced(&Word(alloc::vec![ls[i], ls[j]])) {
                    forb.push((i, j));
                }
            }
        }
        if forb.len() != 1 {
            return Err(SeriesError::NotBlockPbw(format!("{} ascending pairs reduce in one block", forb.len())));
        }
        described.push((*ls, forb[0]));
    }
    let reduced: BTreeSet<Word> = sys.reduced_monomials(check_degree).into_iter().collect();
    for w in &reduced {
        if !fits_pattern(w, &described) {
            return Err(SeriesError::NotBlockPbw(format!("reduced word {} breaks the pattern", alpha.word_str(w))));
        }
    }
    let expected = pbw_character_product(alpha, &described, check_degree);
    let mut counted = BiSeries::zero(check_degree);
    for w in &reduced {
        counted.add(w.len(), word_grade(w, GradeMode::Weight, alpha), 1);
    }
    if counted != expected {
        return Err(SeriesError::NotBlockPbw(String::from("pattern misses reduced words")));
    }
    Ok(pbw_character_product(alpha, &described, max_t))
}

fn pbw_character_product(alpha: &Alphabet, described: &[([Letter; 4], (usize, usize))], max_t: usize) -> BiSeries {
    described.iter().fold(BiSeries::one(max_t), |acc, (ls, forb)| {
        let w = ls.map(|l| alpha.get(l).weight as i64);
        acc.mul(&block_pbw_character(w, *forb, max_t))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qsl2::{build_algebra, oq_sigma, BuildOptions, DetSign, GluingPattern};

    #[test]
    fn long_division_examples() {
        let geo = RationalSeriesSpec::from_factors(&[], &[tu_poly(&[(0, 0, 1), (1, 0, -1)])]);
        assert_eq!(expand_univariate(&geo, 3).unwrap().coeffs, [1, 1, 1, 1]);
        assert_eq!(expand_univariate(&t11_hilbert_spec(), 5).unwrap().coeffs, [1, 2, 4, 6, 9, 12]);
        assert_eq!(expand_univariate(&s04_hilbert_spec(), 4).unwrap().coeffs, [1, 3, 9, 20, 42]);
        let bad = RationalSeriesSpec::from_factors(&[], &[tu_poly(&[(1, 0, 1)])]);
        assert_eq!(expand_closed_form(&bad, 2), Err(SeriesError::NotExpandable));
    }

    #[test]
    fn torus_forms_agree() {
        let a = expand_closed_form(&t11_hilbert_spec(), 10).unwrap();
        let b = expand_closed_form(&t11_hilbert_spec_alt(), 10).unwrap();
        assert!(compare_series(&a, &b).unwrap().passed());
    }

    #[test]
    fn oq_character_low_degrees() {
        let ch = pbw_graded_character(&oq_sigma(DetSign::One), 3);
        assert_eq!(ch.row(0), &UPoly::from([(0, 1)]));
        assert_eq!(ch.row(1), &UPoly::from([(-2, 1), (0, 2), (2, 1)]));
        let closed = expand_closed_form(&oq_character_spec(), 3).unwrap();
        assert!(compare_series(&ch, &closed).unwrap().passed());
    }

    #[test]
    fn comparison_reports_first_mismatch() {
        let a = expand_closed_form(&RationalSeriesSpec::from_factors(&[], &[tu_poly(&[(0, 0, 1), (1, 0, -1)])]), 2).unwrap();
        let b = expand_closed_form(&RationalSeriesSpec::from_factors(&[], &[tu_poly(&[(0, 0, 1), (2, 0, -1)])]), 2).unwrap();
        assert_eq!(compare_series(&a, &b).unwrap(), Comparison::Mismatch { t: 1, u: 0, left: 1, right: 0 });
        assert!(compare_series(&a, &a).unwrap().passed());
        assert!(compare_series(&a, &a.truncate(1)).is_err());
    }

    #[test]
    fn invariants_of_trivial_module() {
        assert_eq!(invariant_hilbert(&BiSeries::one(3)).coeffs, [1, 0, 0, 0]);
    }

    #[test]
    fn fast_path_matches_enumeration() {
        let s = build_algebra(&GluingPattern::torus1(), BuildOptions { det: DetSign::Printed, alt_middle: false }).unwrap();
        let fast = pbw_character_fast(&s, 5, 4).unwrap();
        assert!(compare_series(&fast, &pbw_graded_character(&s, 5)).unwrap().passed());
        let s = build_algebra(&GluingPattern::sphere4(), BuildOptions { det: DetSign::One, alt_middle: true }).unwrap();
        let fast = pbw_character_fast(&s, 4, 3).unwrap();
        assert!(compare_series(&fast, &pbw_graded_character(&s, 4)).unwrap().passed());
    }

    #[test]
    fn printing() {
        let ch = expand_closed_form(&oq_character_spec(), 1).unwrap();
        assert_eq!(ch.lines(), ["t^0: 1", "t^1: 1 u^-2 2 1 u^2"]);
        assert_eq!(format!("{}", Series { coeffs: alloc::vec![1, 2, 4] }), "1, 2, 4");
    }
}
