use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::Rational;
use crate::error::{Error, Result};

/// A Laurent polynomial `numerator / denominator` with a monomial
/// denominator, kept in lowest terms: no variable divides both the
/// numerator and the denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    num: Polynomial,
    den: Monomial,
}

/// Cancels common variable powers between `num` and `den`.
pub fn laurent_normalize(num: Polynomial, den: Monomial) -> LaurentPolynomial {
    assert_eq!(num.nvars(), den.nvars(), "Laurent context mismatch");
    if num.is_zero() {
        let n = num.nvars();
        return LaurentPolynomial {
            num,
            den: Monomial::one(n),
        };
    }
    let common = num.monomial_content().gcd(&den);
    if common.is_one() {
        return LaurentPolynomial { num, den };
    }
    let num = num.divide_monomial(&common).expect("common factor divides numerator");
    let den = common.divide_into(&den).expect("common factor divides denominator");
    LaurentPolynomial { num, den }
}

impl LaurentPolynomial {
    pub fn new(num: Polynomial, den: Monomial) -> Self {
        laurent_normalize(num, den)
    }

    pub fn zero(nvars: usize) -> Self {
        Self::from_polynomial(Polynomial::zero(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_polynomial(Polynomial::one(nvars))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::from_polynomial(Polynomial::var(nvars, i))
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        let den = Monomial::one(p.nvars());
        Self { num: p, den }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::from_polynomial(Polynomial::constant(nvars, c))
    }

    /// `x^exps` with exponents of either sign.
    pub fn laurent_monomial(exps: &[i64]) -> Self {
        let pos: Vec<u32> = exps.iter().map(|&e| e.max(0) as u32).collect();
        let neg: Vec<u32> = exps.iter().map(|&e| (-e).max(0) as u32).collect();
        Self {
            num: Polynomial::monomial(Monomial::from_exponents(&pos)),
            den: Monomial::from_exponents(&neg),
        }
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Monomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The polynomial itself when the denominator is trivial.
    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn to_fraction(&self) -> Fraction {
        Fraction {
            num: self.num.clone(),
            den: Polynomial::monomial(self.den.clone()),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        laurent_normalize(self.num.scale(c), self.den.clone())
    }

    /// Multiplicative inverse, defined only for single-term elements.
    pub fn inverse(&self) -> Option<Self> {
        let (m, c) = self.num.as_term()?;
        Some(laurent_normalize(
            Polynomial::term(c.recip(), self.den.clone()),
            m.clone(),
        ))
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        if k >= 0 {
            return Ok(LaurentPolynomial {
                num: self.num.pow(k as u32),
                den: self.den.pow(k as u32),
            });
        }
        let inv = self
            .inverse()
            .ok_or_else(|| Error::Precondition("negative power of a non-monomial".into()))?;
        inv.pow(-k)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.nvars() != other.nvars() {
            return Err(Error::ContextMismatch {
                left: self.nvars(),
                right: other.nvars(),
            });
        }
        let l = self.den.lcm(&other.den);
        let a = self.num.mul_monomial(&self.den.divide_into(&l).unwrap());
        let b = other.num.mul_monomial(&other.den.divide_into(&l).unwrap());
        Ok(laurent_normalize(&a + &b, l))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let num = self.num.checked_mul(&other.num)?;
        Ok(laurent_normalize(num, self.den.mul(&other.den)))
    }

    /// Sends variable `i` of a polynomial to `images[i]`.
    pub fn compose(p: &Polynomial, images: &[LaurentPolynomial]) -> Result<LaurentPolynomial> {
        assert_eq!(images.len(), p.nvars());
        let nvars = images.first().map(|l| l.nvars()).ok_or_else(|| {
            Error::Precondition("composition needs at least one image".into())
        })?;
        // Common denominator: each image i raised to the max degree of i in p.
        let degs: Vec<u32> = (0..p.nvars()).map(|i| p.degree_in(i)).collect();
        let mut den = Monomial::one(nvars);
        for (img, &d) in images.iter().zip(&degs) {
            den = den.mul(&img.den.pow(d));
        }
        let mut num = Polynomial::zero(nvars);
        let mut cache: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|img| vec![Polynomial::one(nvars), img.num.clone()])
            .collect();
        for (m, c) in p.terms() {
            let mut t = Polynomial::constant(nvars, c.clone());
            let mut shift = Monomial::one(nvars);
            for (i, &e) in m.exponents().iter().enumerate() {
                let pw = &mut cache[i];
                while pw.len() <= e as usize {
                    let next = &pw[pw.len() - 1] * &pw[1];
                    pw.push(next);
                }
                if e > 0 {
                    t = &t * &pw[e as usize];
                }
                shift = shift.mul(&images[i].den.pow(degs[i] - e));
            }
            num = &num + &t.mul_monomial(&shift);
        }
        Ok(laurent_normalize(num, den))
    }

    pub fn to_expr_string(&self, names: &[String]) -> String {
        if self.den.is_one() {
            return self.num.to_expr_string(names);
        }
        let mut out = if self.num.len() == 1 {
            self.num.to_expr_string(names)
        } else {
            format!("({})", self.num.to_expr_string(names))
        };
        for (i, &e) in self.den.exponents().iter().enumerate() {
            if e > 0 {
                out.push_str(&format!("*{}^-{}", names[i], e));
            }
        }
        out
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}) / {:?}", self.num, self.den)
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.checked_add(rhs).expect("Laurent context mismatch")
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.checked_add(&-rhs).expect("Laurent context mismatch")
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.checked_mul(rhs).expect("Laurent context mismatch")
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

/// An unreduced quotient of polynomials. Never auto-simplified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fraction {
    num: Polynomial,
    den: Polynomial,
}

impl Fraction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.nvars() != den.nvars() {
            return Err(Error::ContextMismatch {
                left: num.nvars(),
                right: den.nvars(),
            });
        }
        Ok(Self { num, den })
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        let den = Polynomial::one(p.nvars());
        Self { num: p, den }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::from_polynomial(Polynomial::var(nvars, i))
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    /// Cross-multiplication test; exact without any GCD computation.
    pub fn equals(&self, other: &Fraction) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

/// Substitutes `assignments[i]` for variable `i` of `p`.
///
/// Denominators are multiplied out and no cancellation is attempted.
pub fn substitute(p: &LaurentPolynomial, assignments: &[Fraction]) -> Result<Fraction> {
    if assignments.len() != p.nvars() {
        return Err(Error::ContextMismatch {
            left: p.nvars(),
            right: assignments.len(),
        });
    }
    let target = assignments
        .first()
        .map(Fraction::nvars)
        .ok_or_else(|| Error::Precondition("substitution needs at least one variable".into()))?;
    if let Some(a) = assignments.iter().find(|a| a.nvars() != target) {
        return Err(Error::ContextMismatch {
            left: target,
            right: a.nvars(),
        });
    }
    if assignments.iter().any(|a| a.den.is_zero()) {
        return Err(Error::DivisionByZero);
    }
    let num_p = p.numerator();
    let degs: Vec<u32> = (0..p.nvars()).map(|i| num_p.degree_in(i)).collect();
    let mut powers_num: Vec<Vec<Polynomial>> = assignments
        .iter()
        .map(|a| vec![Polynomial::one(target), a.num.clone()])
        .collect();
    let mut powers_den: Vec<Vec<Polynomial>> = assignments
        .iter()
        .map(|a| vec![Polynomial::one(target), a.den.clone()])
        .collect();
    fn power<'a>(cache: &'a mut Vec<Polynomial>, e: usize) -> &'a Polynomial {
        while cache.len() <= e {
            let next = &cache[cache.len() - 1] * &cache[1];
            cache.push(next);
        }
        &cache[e]
    }

    // N(a/b) = sum_c c * prod a_i^e_i b_i^(D_i - e_i) / prod b_i^D_i
    let mut num = Polynomial::zero(target);
    for (m, c) in num_p.terms() {
        let mut t = Polynomial::constant(target, c.clone());
        for (i, &e) in m.exponents().iter().enumerate() {
            let e = e as usize;
            if e > 0 {
                t = &t * power(&mut powers_num[i], e);
            }
            let rest = (degs[i] as usize) - e;
            if rest > 0 {
                t = &t * power(&mut powers_den[i], rest);
            }
        }
        num = &num + &t;
    }
    let mut den = Polynomial::one(target);
    for (i, &d) in degs.iter().enumerate() {
        if d > 0 {
            den = &den * power(&mut powers_den[i], d as usize);
        }
    }
    // Divide by the Laurent denominator x^beta: multiply by (b/a)^beta.
    for (i, &beta) in p.denominator().exponents().iter().enumerate() {
        if beta > 0 {
            num = &num * power(&mut powers_den[i], beta as usize);
            den = &den * power(&mut powers_num[i], beta as usize);
        }
    }
    Fraction::new(num, den)
}

/// Decides whether `f` lies in the Laurent ring inverting `laurent_vars`.
///
/// Strips the largest monomial factor (in `laurent_vars`) from the
/// denominator and exactly divides the numerator by what remains. This is
/// complete because the Laurent ring is the localization at monomials.
pub fn fraction_is_laurent(f: &Fraction, laurent_vars: &[usize]) -> Result<LaurentPolynomial> {
    let nvars = f.nvars();
    let content = f.den.monomial_content();
    let mut strip = Monomial::one(nvars);
    for &v in laurent_vars {
        strip.0[v] = content.exponent(v);
    }
    let residual = f.den.divide_monomial(&strip).expect("content divides denominator");
    let quotient = match f.num.exact_divide(&residual) {
        Ok(q) => q,
        Err(Error::NotDivisible) => return Err(Error::NotLaurent),
        Err(e) => return Err(e),
    };
    Ok(laurent_normalize(quotient, strip))
}
