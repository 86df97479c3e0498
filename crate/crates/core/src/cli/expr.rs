//! Expression grammar for Laurent polynomials.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' ['-'] integer)?
//! atom   := integer | identifier | '(' expr ')'
//! ```
//!
//! `^` binds tighter than unary minus, so `-x^2` is `-(x^2)`. There is no
//! division; negative exponents are allowed on single-term bases only.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::arith::{LaurentPolynomial, Polynomial, Rational};
use crate::error::{Error, Result};

/// Parses `text` over the variables `names`.
pub fn parse_expression(text: &str, names: &[String]) -> Result<LaurentPolynomial> {
    parse_expression_with(text, names, &HashMap::new())
}

/// Like [`parse_expression`], with extra identifiers bound to fixed values.
/// Variable names take precedence over bindings.
pub fn parse_expression_with(
    text: &str,
    names: &[String],
    bindings: &HashMap<String, LaurentPolynomial>,
) -> Result<LaurentPolynomial> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        names,
        bindings,
    };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(v)
}

/// Parses an expression that must be an ordinary polynomial.
pub fn parse_polynomial(text: &str, names: &[String]) -> Result<Polynomial> {
    parse_polynomial_with(text, names, &HashMap::new())
}

pub fn parse_polynomial_with(
    text: &str,
    names: &[String],
    bindings: &HashMap<String, LaurentPolynomial>,
) -> Result<Polynomial> {
    let l = parse_expression_with(text, names, bindings)?;
    l.as_polynomial().cloned().ok_or(Error::Parse {
        pos: 0,
        msg: "expected a polynomial, found negative exponents".into(),
    })
}

/// Parses a relation string. `lhs = rhs` is read as `lhs - rhs`.
pub fn parse_relation(
    text: &str,
    names: &[String],
    bindings: &HashMap<String, LaurentPolynomial>,
) -> Result<Polynomial> {
    let parts: Vec<&str> = text.split('=').collect();
    match parts.as_slice() {
        [one] => parse_polynomial_with(one, names, bindings),
        [lhs, rhs] => {
            let l = parse_polynomial_with(lhs, names, bindings)?;
            let r = parse_polynomial_with(rhs, names, bindings).map_err(|e| shift(e, lhs.len() + 1))?;
            l.checked_sub(&r)
        }
        _ => Err(Error::Parse {
            pos: parts[0].len() + parts[1].len() + 1,
            msg: "more than one '='".into(),
        }),
    }
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { pos, msg } => Error::Parse { pos: pos + by, msg },
        other => other,
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    names: &'a [String],
    bindings: &'a HashMap<String, LaurentPolynomial>,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn nvars(&self) -> usize {
        self.names.len()
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<LaurentPolynomial> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPolynomial> {
        let mut acc = self.unary()?;
        while self.eat(b'*') {
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<LaurentPolynomial> {
        if self.eat(b'-') {
            Ok(-&self.unary()?)
        } else if self.eat(b'+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<LaurentPolynomial> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let neg = self.eat(b'-');
        self.skip_ws();
        let at = self.pos;
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.err("expected an integer exponent"));
        }
        let k: i64 = digits
            .parse()
            .map_err(|_| Error::Parse { pos: at, msg: "exponent too large".into() })?;
        let k = if neg { -k } else { k };
        base.pow(k).map_err(|_| Error::Parse {
            pos: at,
            msg: "negative exponent on a base with more than one term".into(),
        })
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<LaurentPolynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits();
                if self.src.get(self.pos) == Some(&b'.') {
                    return Err(self.err("only integer literals are allowed"));
                }
                let n: BigInt = d.parse().expect("digits");
                Ok(LaurentPolynomial::constant(self.nvars(), Rational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let id = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                if let Some(i) = self.names.iter().position(|n| n == id) {
                    Ok(LaurentPolynomial::var(self.nvars(), i))
                } else if let Some(v) = self.bindings.get(id) {
                    Ok(v.clone())
                } else {
                    Err(Error::UnknownVariable(id.to_string()))
                }
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}
