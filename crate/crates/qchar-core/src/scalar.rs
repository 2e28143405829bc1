//! Laurent polynomials in `q^(1/2)` with Gaussian-rational coefficients.
//!
//! Exponents are stored as integer counts of half-steps, so `q` is stored as 2
//! and `q^(1/2)` as 1. Values are always canonical: coefficients are in lowest
//! terms and no stored coefficient is zero, so derived `PartialEq` is the
//! mathematical equality.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussRat {
    pub re: BigRational,
    pub im: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScalarError {
    ZeroDenominator,
    NotInvertible,
    OffLattice,
}

impl fmt::Display for ScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarError::ZeroDenominator => f.write_str("zero denominator"),
            ScalarError::NotInvertible => f.write_str("scalar is not a unit monomial"),
            ScalarError::OffLattice => f.write_str("exponent leaves the half-integer lattice"),
        }
    }
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }
    pub fn zero() -> Self {
        GaussRat { re: BigRational::zero(), im: BigRational::zero() }
    }
    pub fn one() -> Self {
        Self::int(1)
    }
    pub fn int(n: i64) -> Self {
        GaussRat { re: rat(n, 1), im: BigRational::zero() }
    }
    pub fn ratio(n: i64, d: i64) -> Result<Self, ScalarError> {
        if d == 0 {
            return Err(ScalarError::ZeroDenominator);
        }
        Ok(GaussRat { re: rat(n, d), im: BigRational::zero() })
    }
    /// The imaginary unit.
    pub fn i() -> Self {
        GaussRat { re: BigRational::zero(), im: rat(1, 1) }
    }
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }
    pub fn conj(&self) -> Self {
        GaussRat { re: self.re.clone(), im: -self.im.clone() }
    }
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = &self.re * &self.re + &self.im * &self.im;
        Some(GaussRat { re: &self.re / &n, im: -(&self.im / &n) })
    }
    /// True when the value is a plain integer, used by series code.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.im.is_zero() && self.re.is_integer() {
            Some(self.re.to_integer())
        } else {
            None
        }
    }
}

impl Add for &GaussRat {
    type Output = GaussRat;
    fn add(self, o: &GaussRat) -> GaussRat {
        GaussRat { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}
impl Sub for &GaussRat {
    type Output = GaussRat;
    fn sub(self, o: &GaussRat) -> GaussRat {
        GaussRat { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}
impl Mul for &GaussRat {
    type Output = GaussRat;
    fn mul(self, o: &GaussRat) -> GaussRat {
        // fast paths: purely real factors are by far the common case
        if self.im.is_zero() && o.im.is_zero() {
            return GaussRat { re: &self.re * &o.re, im: BigRational::zero() };
        }
        GaussRat {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}
impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat { re: -self.re.clone(), im: -self.im.clone() }
    }
}
impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat { re: -self.re, im: -self.im }
    }
}

fn fmt_rat(r: &BigRational) -> String {
    r.to_string()
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imag = |im: &BigRational| -> String {
            if im.is_one() {
                "i".into()
            } else if (-im).is_one() {
                "-i".into()
            } else {
                alloc::format!("{}*i", fmt_rat(im))
            }
        };
        if self.im.is_zero() {
            write!(f, "{}", fmt_rat(&self.re))
        } else if self.re.is_zero() {
            f.write_str(&imag(&self.im))
        } else if self.im.is_negative() {
            write!(f, "({} - {})", fmt_rat(&self.re), imag(&-self.im.clone()))
        } else {
            write!(f, "({} + {})", fmt_rat(&self.re), imag(&self.im))
        }
    }
}

/// A finite sum of `c * q^(k/2)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QLaurent {
    terms: BTreeMap<i64, GaussRat>,
}

/// `(numer/denom) * q^(half_steps/2)`.
pub fn qmono(numer: i64, denom: i64, half_steps: i64) -> Result<QLaurent, ScalarError> {
    let c = GaussRat::ratio(numer, denom)?;
    Ok(QLaurent::term(c, half_steps))
}

impl QLaurent {
    pub fn zero() -> Self {
        QLaurent { terms: BTreeMap::new() }
    }
    pub fn one() -> Self {
        Self::int(1)
    }
    pub fn int(n: i64) -> Self {
        Self::term(GaussRat::int(n), 0)
    }
    pub fn i() -> Self {
        Self::term(GaussRat::i(), 0)
    }
    /// `q^(half_steps/2)`.
    pub fn qh(half_steps: i64) -> Self {
        Self::term(GaussRat::one(), half_steps)
    }
    /// `q^n`.
    pub fn q(n: i64) -> Self {
        Self::qh(2 * n)
    }
    pub fn term(c: GaussRat, half_steps: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(half_steps, c);
        }
        QLaurent { terms }
    }
    pub fn constant(c: GaussRat) -> Self {
        Self::term(c, 0)
    }
    pub fn from_terms<I: IntoIterator<Item = (i64, GaussRat)>>(it: I) -> Self {
        let mut out = QLaurent::zero();
        for (k, c) in it {
            out.add_term(k, &c);
        }
        out
    }
    pub fn terms(&self) -> impl Iterator<Item = (i64, &GaussRat)> + '_ {
        self.terms.iter().map(|(k, v)| (*k, v))
    }
    pub fn len(&self) -> usize {
        self.terms.len()
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }
    /// Coefficient of `q^(k/2)`.
    pub fn coeff(&self, half_steps: i64) -> GaussRat {
        self.terms.get(&half_steps).cloned().unwrap_or_else(GaussRat::zero)
    }
    pub fn add_term(&mut self, half_steps: i64, c: &GaussRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&half_steps) {
            Some(v) => {
                *v = &*v + c;
                if v.is_zero() {
                    self.terms.remove(&half_steps);
                }
            }
            None => {
                self.terms.insert(half_steps, c.clone());
            }
        }
    }
    /// Inverse of a unit monomial; general division is never needed.
    pub fn inv(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (k, c) = self.terms.iter().next()?;
        Some(Self::term(c.inv()?, -k))
    }
    pub fn pow(&self, n: i64) -> Option<Self> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut out = QLaurent::one();
        for _ in 0..n.unsigned_abs() {
            out = &out * &base;
        }
        Some(out)
    }
    /// Multiplies every exponent by `num/den`, the action of a scalar map
    /// `q -> q^(num/den)` on half-steps.
    pub fn map_exponents(&self, num: i64, den: i64) -> Result<Self, ScalarError> {
        if den == 0 {
            return Err(ScalarError::ZeroDenominator);
        }
        let mut out = QLaurent::zero();
        for (k, c) in &self.terms {
            let p = k * num;
            if p % den != 0 {
                return Err(ScalarError::OffLattice);
            }
            out.add_term(p / den, c);
        }
        Ok(out)
    }
    /// True when every exponent is an integer power of `q`.
    pub fn is_integral(&self) -> bool {
        self.terms.keys().all(|k| k % 2 == 0)
    }
    pub fn scale(&self, c: &GaussRat) -> Self {
        if c.is_zero() {
            return QLaurent::zero();
        }
        QLaurent { terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect() }
    }
    pub fn shift(&self, half_steps: i64) -> Self {
        QLaurent { terms: self.terms.iter().map(|(k, v)| (k + half_steps, v.clone())).collect() }
    }
}

impl Add for &QLaurent {
    type Output = QLaurent;
    fn add(self, o: &QLaurent) -> QLaurent {
        let mut out = self.clone();
        out += o;
        out
    }
}
impl AddAssign<&QLaurent> for QLaurent {
    fn add_assign(&mut self, o: &QLaurent) {
        for (k, c) in &o.terms {
            self.add_term(*k, c);
        }
    }
}
impl SubAssign<&QLaurent> for QLaurent {
    fn sub_assign(&mut self, o: &QLaurent) {
        for (k, c) in &o.terms {
            self.add_term(*k, &-c);
        }
    }
}
impl Sub for &QLaurent {
    type Output = QLaurent;
    fn sub(self, o: &QLaurent) -> QLaurent {
        let mut out = self.clone();
        out -= o;
        out
    }
}
impl Mul for &QLaurent {
    type Output = QLaurent;
    fn mul(self, o: &QLaurent) -> QLaurent {
        let mut out = QLaurent::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                out.add_term(a + b, &(x * y));
            }
        }
        out
    }
}
impl Neg for &QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        QLaurent { terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect() }
    }
}
macro_rules! by_value {
    ($tr:ident, $m:ident) => {
        impl $tr for QLaurent {
            type Output = QLaurent;
            fn $m(self, o: QLaurent) -> QLaurent {
                (&self).$m(&o)
            }
        }
    };
}
by_value!(Add, add);
by_value!(Sub, sub);
by_value!(Mul, mul);
impl Neg for QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        -&self
    }
}

fn fmt_qpow(k: i64) -> Option<String> {
    if k == 0 {
        None
    } else if k % 2 != 0 {
        Some(alloc::format!("q^({}/2)", k))
    } else if k == 2 {
        Some("q".into())
    } else if k > 0 {
        Some(alloc::format!("q^{}", k / 2))
    } else {
        Some(alloc::format!("q^({})", k / 2))
    }
}

impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.terms.iter().rev() {
            let s = match fmt_qpow(*k) {
                None => c.to_string(),
                Some(qs) if c.is_one() => qs,
                Some(qs) if (-c).is_one() => alloc::format!("-{}", qs),
                Some(qs) => alloc::format!("{}*{}", c, qs),
            };
            if first {
                f.write_str(&s)?;
                first = false;
            } else if let Some(rest) = s.strip_prefix('-') {
                write!(f, " - {}", rest)?;
            } else {
                write!(f, " + {}", s)?;
            }
        }
        Ok(())
    }
}

impl From<i64> for QLaurent {
    fn from(n: i64) -> Self {
        QLaurent::int(n)
    }
}

/// `q^a - q^b`, a shape that turns up in almost every relation.
pub fn qdiff(a: i64, b: i64) -> QLaurent {
    &QLaurent::q(a) - &QLaurent::q(b)
}
