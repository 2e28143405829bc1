//! Ordered alphabets, words and noncommutative polynomials, together with
//! the reduced-degree preorder used to orient rewriting rules.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::scalar::QLaurent;

pub type Letter = u16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    /// Filtration degree, 1 unless a filtration says otherwise.
    pub degree: u32,
    /// Exponent of the K-eigenvalue: `K . g = q^weight g`.
    pub weight: i32,
    pub central: bool,
}

impl Generator {
    pub fn new(name: &str) -> Self {
        Generator { name: name.into(), degree: 1, weight: 0, central: false }
    }
    pub fn weight(mut self, w: i32) -> Self {
        self.weight = w;
        self
    }
    pub fn degree(mut self, d: u32) -> Self {
        self.degree = d;
        self
    }
    pub fn central(mut self) -> Self {
        self.central = true;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FreeAlgError {
    DuplicateName(String),
    UnknownGenerator(String),
    AlphabetMismatch,
    TooManyGenerators,
}

impl fmt::Display for FreeAlgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FreeAlgError::DuplicateName(n) => write!(f, "duplicate generator `{}`", n),
            FreeAlgError::UnknownGenerator(n) => write!(f, "unknown generator `{}`", n),
            FreeAlgError::AlphabetMismatch => f.write_str("polynomial uses letters outside the alphabet"),
            FreeAlgError::TooManyGenerators => f.write_str("alphabet too large"),
        }
    }
}

/// Generators in their total order: the order index is the list position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    gens: Vec<Generator>,
    by_name: BTreeMap<String, Letter>,
}

impl Alphabet {
    pub fn new(gens: Vec<Generator>) -> Result<Self, FreeAlgError> {
        if gens.len() > Letter::MAX as usize {
            return Err(FreeAlgError::TooManyGenerators);
        }
        let mut by_name = BTreeMap::new();
        for (i, g) in gens.iter().enumerate() {
            if by_name.insert(g.name.clone(), i as Letter).is_some() {
                return Err(FreeAlgError::DuplicateName(g.name.clone()));
            }
        }
        Ok(Alphabet { gens, by_name })
    }
    pub fn len(&self) -> usize {
        self.gens.len()
    }
    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }
    pub fn gens(&self) -> &[Generator] {
        &self.gens
    }
    pub fn get(&self, l: Letter) -> &Generator {
        &self.gens[l as usize]
    }
    pub fn index(&self, name: &str) -> Option<Letter> {
        self.by_name.get(name).copied()
    }
    pub fn letter(&self, name: &str) -> Result<Letter, FreeAlgError> {
        self.index(name).ok_or_else(|| FreeAlgError::UnknownGenerator(name.into()))
    }
    /// The generator as a polynomial. Panics on unknown names, which is
    /// what builtin construction wants.
    pub fn x(&self, name: &str) -> NcPoly {
        match self.index(name) {
            Some(l) => NcPoly::letter(l),
            None => panic!("unknown generator {}", name),
        }
    }
    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        0..self.gens.len() as Letter
    }
    pub fn word_str(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let mut s = String::new();
        for (k, l) in w.0.iter().enumerate() {
            if k > 0 {
                s.push('*');
            }
            s.push_str(&self.gens[*l as usize].name);
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }
    pub fn len(&self) -> usize {
        self.0.len()
    }
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
    pub fn concat(&self, o: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + o.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&o.0);
        Word(v)
    }
    pub fn letters(&self) -> &[Letter] {
        &self.0
    }
}

impl From<&[Letter]> for Word {
    fn from(s: &[Letter]) -> Self {
        Word(s.to_vec())
    }
}

/// Number of pairs `k < l` with `w[k] >= w[l]`. Equal letters count.
pub fn word_inversions(w: &Word) -> u64 {
    let s = &w.0;
    let mut n = 0;
    for k in 0..s.len() {
        for l in k + 1..s.len() {
            if s[k] >= s[l] {
                n += 1;
            }
        }
    }
    n
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GradeMode {
    Degree,
    Weight,
}

pub fn word_grade(w: &Word, mode: GradeMode, alpha: &Alphabet) -> i64 {
    w.0.iter()
        .map(|l| {
            let g = alpha.get(*l);
            match mode {
                GradeMode::Degree => g.degree as i64,
                GradeMode::Weight => g.weight as i64,
            }
        })
        .sum()
}

#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct NcPoly {
    terms: BTreeMap<Word, QLaurent>,
}

impl NcPoly {
    pub fn zero() -> Self {
        NcPoly { terms: BTreeMap::new() }
    }
    pub fn one() -> Self {
        Self::constant(QLaurent::one())
    }
    pub fn constant(c: QLaurent) -> Self {
        Self::monomial(c, Word::empty())
    }
    pub fn word(w: Word) -> Self {
        Self::monomial(QLaurent::one(), w)
    }
    pub fn letter(l: Letter) -> Self {
        Self::word(Word(alloc::vec![l]))
    }
    pub fn monomial(c: QLaurent, w: Word) -> Self {
        let mut p = NcPoly::zero();
        p.add_term(w, &c);
        p
    }
    pub fn from_terms<I: IntoIterator<Item = (Word, QLaurent)>>(it: I) -> Self {
        let mut p = NcPoly::zero();
        for (w, c) in it {
            p.add_term(w, &c);
        }
        p
    }
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &QLaurent)> + '_ {
        self.terms.iter()
    }
    pub fn into_terms(self) -> BTreeMap<Word, QLaurent> {
        self.terms
    }
    pub fn len(&self) -> usize {
        self.terms.len()
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn coeff(&self, w: &Word) -> QLaurent {
        self.terms.get(w).cloned().unwrap_or_default()
    }
    pub fn add_term(&mut self, w: Word, c: &QLaurent) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }
    pub fn scale(&self, c: &QLaurent) -> Self {
        if c.is_zero() {
            return NcPoly::zero();
        }
        let mut out = NcPoly::zero();
        for (w, v) in &self.terms {
            out.add_term(w.clone(), &(v * c));
        }
        out
    }
    pub fn pow(&self, n: u32) -> Self {
        let mut out = NcPoly::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }
    /// Longest word length, or `None` for zero.
    pub fn max_len(&self) -> Option<usize> {
        self.terms.keys().map(|w| w.len()).max()
    }
    pub fn check_alphabet(&self, alpha: &Alphabet) -> Result<(), FreeAlgError> {
        let n = alpha.len();
        if self.terms.keys().all(|w| w.0.iter().all(|l| (*l as usize) < n)) {
            Ok(())
        } else {
            Err(FreeAlgError::AlphabetMismatch)
        }
    }
    /// All scalar exponents are integer powers of `q`.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integral())
    }
    pub fn display<'a>(&'a self, alpha: &'a Alphabet) -> PolyDisplay<'a> {
        PolyDisplay { p: self, alpha }
    }
    /// Terms in print order: longer words first, then by letter order.
    pub fn sorted_terms(&self) -> Vec<(&Word, &QLaurent)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| match b.0.len().cmp(&a.0.len()) {
            Ordering::Equal => a.0.cmp(b.0),
            o => o,
        });
        v
    }
}

impl core::ops::AddAssign<&NcPoly> for NcPoly {
    fn add_assign(&mut self, o: &NcPoly) {
        for (w, c) in &o.terms {
            self.add_term(w.clone(), c);
        }
    }
}
impl core::ops::SubAssign<&NcPoly> for NcPoly {
    fn sub_assign(&mut self, o: &NcPoly) {
        for (w, c) in &o.terms {
            self.add_term(w.clone(), &-c);
        }
    }
}
impl core::ops::Add for &NcPoly {
    type Output = NcPoly;
    fn add(self, o: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        out += o;
        out
    }
}
impl core::ops::Sub for &NcPoly {
    type Output = NcPoly;
    fn sub(self, o: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        out -= o;
        out
    }
}
impl core::ops::Neg for &NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        NcPoly { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
}
impl core::ops::Mul for &NcPoly {
    type Output = NcPoly;
    fn mul(self, o: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                out.add_term(a.concat(b), &(x * y));
            }
        }
        out
    }
}
impl core::ops::Mul<&QLaurent> for &NcPoly {
    type Output = NcPoly;
    fn mul(self, c: &QLaurent) -> NcPoly {
        self.scale(c)
    }
}
impl core::ops::Mul<&NcPoly> for &QLaurent {
    type Output = NcPoly;
    fn mul(self, p: &NcPoly) -> NcPoly {
        p.scale(self)
    }
}
macro_rules! poly_by_value {
    ($tr:ident, $m:ident) => {
        impl core::ops::$tr for NcPoly {
            type Output = NcPoly;
            fn $m(self, o: NcPoly) -> NcPoly {
                (&self).$m(&o)
            }
        }
        impl core::ops::$tr<&NcPoly> for NcPoly {
            type Output = NcPoly;
            fn $m(self, o: &NcPoly) -> NcPoly {
                (&self).$m(o)
            }
        }
        impl core::ops::$tr<NcPoly> for &NcPoly {
            type Output = NcPoly;
            fn $m(self, o: NcPoly) -> NcPoly {
                self.$m(&o)
            }
        }
    };
}
poly_by_value!(Add, add);
poly_by_value!(Sub, sub);
poly_by_value!(Mul, mul);
impl core::ops::Mul<NcPoly> for QLaurent {
    type Output = NcPoly;
    fn mul(self, p: NcPoly) -> NcPoly {
        p.scale(&self)
    }
}
impl core::ops::Mul<&NcPoly> for QLaurent {
    type Output = NcPoly;
    fn mul(self, p: &NcPoly) -> NcPoly {
        p.scale(&self)
    }
}
impl core::ops::Neg for NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        -&self
    }
}
impl From<QLaurent> for NcPoly {
    fn from(c: QLaurent) -> Self {
        NcPoly::constant(c)
    }
}

pub struct PolyDisplay<'a> {
    p: &'a NcPoly,
    alpha: &'a Alphabet,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.p.sorted_terms().into_iter().enumerate() {
            let s = if w.is_empty() {
                if c.is_monomial() {
                    alloc::format!("{}", c)
                } else if k > 0 {
                    alloc::format!("({})", c)
                } else {
                    alloc::format!("{}", c)
                }
            } else {
                let ws = self.alpha.word_str(w);
                if c.is_one() {
                    ws
                } else if (-c).is_one() {
                    alloc::format!("-{}", ws)
                } else if c.is_monomial() {
                    alloc::format!("{}*{}", c, ws)
                } else {
                    alloc::format!("({})*{}", c, ws)
                }
            };
            if k == 0 {
                f.write_str(&s)?;
            } else if let Some(rest) = s.strip_prefix('-') {
                write!(f, " - {}", rest)?;
            } else {
                write!(f, " + {}", s)?;
            }
        }
        Ok(())
    }
}

/// `rho_n(T)`: the summed inversion counts of the words of length `n`.
pub fn rho(p: &NcPoly) -> BTreeMap<usize, u64> {
    let mut out = BTreeMap::new();
    for (w, _) in p.terms() {
        *out.entry(w.len()).or_insert(0) += word_inversions(w);
    }
    out
}

/// Largest `n` with `rho_n(T) != 0`.
pub fn reduced_degree(p: &NcPoly) -> Option<usize> {
    rho(p).into_iter().filter(|(_, r)| *r != 0).map(|(n, _)| n).max()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RdOrder {
    Less,
    EqualRank,
    Greater,
    /// Kept for completeness; the two-clause comparison is total, so it is
    /// never produced.
    Incomparable,
}

pub fn reduced_degree_compare(lhs: &NcPoly, rhs: &NcPoly, alpha: &Alphabet) -> Result<RdOrder, FreeAlgError> {
    lhs.check_alphabet(alpha)?;
    rhs.check_alphabet(alpha)?;
    let (a, b) = (reduced_degree(lhs), reduced_degree(rhs));
    let ord = match (a, b) {
        (None, None) => Ordering::Equal,
        (None, Some(_)) => Ordering::Less,
        (Some(_), None) => Ordering::Greater,
        (Some(x), Some(y)) if x != y => x.cmp(&y),
        (Some(n), Some(_)) => rho(lhs)[&n].cmp(&rho(rhs)[&n]),
    };
    Ok(match ord {
        Ordering::Less => RdOrder::Less,
        Ordering::Equal => RdOrder::EqualRank,
        Ordering::Greater => RdOrder::Greater,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::qdiff;
    use alloc::string::ToString;

    fn oq() -> Alphabet {
        Alphabet::new(
            ["a.1.1", "a.1.2", "a.2.1", "a.2.2"].iter().map(|n| Generator::new(n)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn inversions() {
        let a = oq();
        let w = |names: &[&str]| Word(names.iter().map(|n| a.index(n).unwrap()).collect());
        assert_eq!(word_inversions(&w(&["a.2.1", "a.1.1"])), 1);
        assert_eq!(word_inversions(&Word::empty()), 0);
        assert_eq!(word_inversions(&w(&["a.1.1", "a.1.1"])), 1);
    }

    #[test]
    fn reduced_degree_examples() {
        let a = oq();
        let x = |n| a.x(n);
        let lhs = &x("a.1.1") * &x("a.1.2") + (&x("a.1.2") * &x("a.2.2")).scale(&qdiff(0, -1));
        let rhs = &x("a.1.2") * &x("a.1.1");
        assert_eq!(reduced_degree_compare(&lhs, &rhs, &a).unwrap(), RdOrder::Less);
        assert_eq!(reduced_degree_compare(&rhs, &rhs, &a).unwrap(), RdOrder::EqualRank);
        // both sides have no inversions at all, so the literal definition ties
        let l2 = NcPoly::constant(QLaurent::q(-2)) + (&x("a.1.1") * &x("a.2.2")).scale(&QLaurent::q(-2));
        let r2 = &x("a.1.2") * &x("a.2.1");
        assert_eq!(reduced_degree_compare(&l2, &r2, &a).unwrap(), RdOrder::EqualRank);
    }

    #[test]
    fn alphabet_mismatch_is_reported() {
        let a = oq();
        let p = NcPoly::letter(9);
        assert_eq!(reduced_degree_compare(&p, &p, &a), Err(FreeAlgError::AlphabetMismatch));
    }

    #[test]
    fn duplicate_names_rejected() {
        let r = Alphabet::new(alloc::vec![Generator::new("x"), Generator::new("x")]);
        assert!(matches!(r, Err(FreeAlgError::DuplicateName(_))));
    }

    #[test]
    fn grades() {
        let a = Alphabet::new(alloc::vec![
            Generator::new("a.1.2").weight(2).degree(2),
            Generator::new("b.2.1").weight(-2),
            Generator::new("a.1.1"),
        ])
        .unwrap();
        let w = Word(alloc::vec![0, 1]);
        assert_eq!(word_grade(&w, GradeMode::Weight, &a), 0);
        assert_eq!(word_grade(&Word(alloc::vec![2, 0, 1]), GradeMode::Degree, &a), 4);
        assert_eq!(word_grade(&Word(alloc::vec![0]), GradeMode::Degree, &a), 2);
    }

    #[test]
    fn arithmetic() {
        let a = oq();
        let (x, y, z) = (a.x("a.1.1"), a.x("a.1.2"), a.x("a.2.1"));
        assert_eq!(&NcPoly::one() * &x, x);
        let prod = &x * &y;
        assert_eq!(prod.coeff(&Word(alloc::vec![0, 1])), QLaurent::one());
        assert_eq!(&(&x + &y) * &z, &(&x * &z) + &(&y * &z));
    }

    #[test]
    fn printing_order() {
        let a = oq();
        let p = &a.x("a.2.2") + &a.x("a.1.1").scale(&QLaurent::q(-2)) + NcPoly::constant(qdiff(1, -1))
            + &a.x("a.1.1") * &a.x("a.2.2");
        assert_eq!(
            p.display(&a).to_string(),
            "a.1.1*a.2.2 + q^(-2)*a.1.1 + a.2.2 + (q - q^(-1))"
        );
    }
}
