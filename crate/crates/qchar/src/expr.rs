//! Expression grammar for noncommutative polynomials.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary (("*" | "/") unary)*        division only by constants
//! unary  := "-" unary | power
//! power  := atom ("^" exp)?
//! exp    := int | "(" "-"? int ("/" int)? ")"
//! atom   := int | "q" | "i" | ident | "(" expr ")"
//! ```
//!
//! `q` takes half-integer exponents such as `q^(3/2)`; generators take
//! nonnegative integer powers. Identifiers may contain letters, digits,
//! `_` and `.`, so block entries read `a.1.2`.

use qchar_core::freealg::Alphabet;
use qchar_core::{GaussRat, NcPoly, QLaurent};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExprError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("parse error at column {col}: {msg}")]
    Syntax { col: usize, msg: String },
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(i64),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>, ExprError> {
    let cs: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let txt: String = cs[st..i].iter().collect();
            let n = txt.parse().map_err(|_| ExprError::Syntax { col: st + 1, msg: "integer too large".into() })?;
            out.push((st, Tok::Int(n)));
        } else if c.is_alphabetic() || c == '_' {
            let st = i;
            while i < cs.len() && (cs[i].is_alphanumeric() || cs[i] == '_' || cs[i] == '.') {
                i += 1;
            }
            out.push((st, Tok::Ident(cs[st..i].iter().collect())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(ExprError::Syntax { col: i + 1, msg: format!("unexpected character `{}`", c) });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    alpha: &'a Alphabet,
    len: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.len, |t| t.0) + 1
    }

    fn err<T>(&self, msg: &str) -> Result<T, ExprError> {
        Err(ExprError::Syntax { col: self.col(), msg: msg.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ExprError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(&format!("expected `{}`", c))
        }
    }

    fn int(&mut self) -> Result<i64, ExprError> {
        match self.peek() {
            Some(Tok::Int(n)) => {
                let n = *n;
                self.pos += 1;
                Ok(n)
            }
            _ => self.err("expected an integer"),
        }
    }

    fn expr(&mut self) -> Result<NcPoly, ExprError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<NcPoly, ExprError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.pos < self.toks.len() && self.peek() == Some(&Tok::Op('/')) {
                let col = self.col();
                self.pos += 1;
                let d = self.unary()?;
                let inv = constant_of(&d).and_then(|c| c.inv());
                match inv {
                    Some(k) => acc = &k * &acc,
                    None => return Err(ExprError::Syntax { col, msg: "can only divide by an invertible constant".into() }),
                }
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<NcPoly, ExprError> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        self.power()
    }

    /// Exponent in half-steps.
    fn exponent(&mut self) -> Result<i64, ExprError> {
        if self.eat('(') {
            let neg = self.eat('-');
            let n = self.int()?;
            let half = if self.eat('/') {
                match self.int()? {
                    1 => 2 * n,
                    2 => n,
                    _ => return self.err("exponent denominators must be 1 or 2"),
                }
            } else {
                2 * n
            };
            self.expect(')')?;
            Ok(if neg { -half } else { half })
        } else {
            Ok(2 * self.int()?)
        }
    }

    fn power(&mut self) -> Result<NcPoly, ExprError> {
        let is_q = matches!(self.peek(), Some(Tok::Ident(s)) if s == "q");
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let col = self.col();
        let half = self.exponent()?;
        if is_q {
            return Ok(NcPoly::constant(QLaurent::qh(half)));
        }
        if half % 2 != 0 {
            return Err(ExprError::Syntax { col, msg: "half-integer powers apply only to q".into() });
        }
        let n = half / 2;
        if n >= 0 {
            return Ok(base.pow(n as u32));
        }
        match constant_of(&base).and_then(|c| c.pow(n)) {
            Some(c) => Ok(NcPoly::constant(c)),
            None => Err(ExprError::Syntax { col, msg: "negative powers need an invertible constant".into() }),
        }
    }

    fn atom(&mut self) -> Result<NcPoly, ExprError> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(NcPoly::constant(QLaurent::int(n)))
            }
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                match s.as_str() {
                    "q" => Ok(NcPoly::constant(QLaurent::q(1))),
                    "i" => Ok(NcPoly::constant(QLaurent::constant(GaussRat::i()))),
                    _ => match self.alpha.index(&s) {
                        Some(l) => Ok(NcPoly::letter(l)),
                        None => Err(ExprError::UnknownGenerator(s)),
                    },
                }
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            _ => self.err("expected a number, `q`, `i`, a generator or `(`"),
        }
    }
}

/// The scalar of a polynomial supported on the empty word.
pub fn constant_of(p: &NcPoly) -> Option<QLaurent> {
    if p.is_zero() {
        return Some(QLaurent::zero());
    }
    if p.len() == 1 {
        let (w, c) = p.terms().next()?;
        if w.is_empty() {
            return Some(c.clone());
        }
    }
    None
}

pub fn parse_expr(s: &str, alpha: &Alphabet) -> Result<NcPoly, ExprError> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(ExprError::Syntax { col: 1, msg: "empty expression".into() });
    }
    let mut p = Parser { toks, pos: 0, alpha, len: s.chars().count() };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

pub fn print_expr(p: &NcPoly, alpha: &Alphabet) -> String {
    p.display(alpha).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use qchar_core::freealg::Generator;

    fn abc() -> Alphabet {
        Alphabet::new(vec![Generator::new("X"), Generator::new("Y"), Generator::new("a.1.2")]).unwrap()
    }

    #[test]
    fn scalars() {
        let a = abc();
        assert_eq!(parse_expr("q^(3/2)", &a).unwrap(), NcPoly::constant(QLaurent::qh(3)));
        assert_eq!(parse_expr("q^(-1)", &a).unwrap(), NcPoly::constant(QLaurent::q(-1)));
        assert_eq!(parse_expr("3/2", &a).unwrap(), NcPoly::constant(QLaurent::constant(GaussRat::ratio(3, 2).unwrap())));
        assert_eq!(parse_expr("i*i", &a).unwrap(), NcPoly::constant(QLaurent::int(-1)));
        assert_eq!(parse_expr("X/q", &a).unwrap(), &QLaurent::q(-1) * &a.x("X"));
    }

    #[test]
    fn products_keep_order() {
        let a = abc();
        let p = parse_expr("Y*X - X*Y", &a).unwrap();
        assert_eq!(p, &(&a.x("Y") * &a.x("X")) - &(&a.x("X") * &a.x("Y")));
        assert_eq!(parse_expr("(X + 1)^2", &a).unwrap().len(), 3);
    }

    #[test]
    fn errors() {
        let a = abc();
        assert_eq!(parse_expr("W", &a), Err(ExprError::UnknownGenerator("W".into())));
        assert!(matches!(parse_expr("X +", &a), Err(ExprError::Syntax { .. })));
        assert!(matches!(parse_expr("X^(1/2)", &a), Err(ExprError::Syntax { .. })));
        assert!(matches!(parse_expr("1/X", &a), Err(ExprError::Syntax { .. })));
        assert!(matches!(parse_expr("", &a), Err(ExprError::Syntax { .. })));
    }

    #[test]
    fn printed_forms_parse_back() {
        let a = abc();
        for s in ["q^(-1)*X*Y + (q - q^(-1))*a.1.2", "-q^(1/2)*Y*X + 3/2", "(1 + i)*X - 2*i", "0", "1"] {
            let p = parse_expr(s, &a).unwrap();
            assert_eq!(parse_expr(&print_expr(&p, &a), &a).unwrap(), p, "{}", s);
        }
    }
}
