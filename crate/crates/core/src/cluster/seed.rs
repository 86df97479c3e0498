use std::fmt;

use super::matrix::ExchangeMatrix;
use crate::arith::{fraction_is_laurent, Fraction, LaurentPolynomial, Monomial, Polynomial};
use crate::error::{Error, Result};

/// A sequence of mutable indices, 0-based.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MutationWord(pub Vec<usize>);

impl MutationWord {
    pub fn new(indices: Vec<usize>) -> Self {
        Self(indices)
    }

    /// Parses 1-based indices separated by spaces or commas, e.g. `"1 2 1"`.
    pub fn parse_one_based(text: &str, m: usize) -> Result<Self> {
        let mut out = Vec::new();
        for tok in text.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let k: usize = tok
                .parse()
                .map_err(|_| Error::InvalidSeed(format!("bad mutation index {tok:?}")))?;
            if k == 0 || k > m {
                return Err(Error::IndexOutOfRange { index: k, max: m });
            }
            out.push(k - 1);
        }
        Ok(Self(out))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for MutationWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|k| (k + 1).to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// An exchange matrix together with a cluster written as Laurent
/// polynomials in the initial variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seed {
    matrix: ExchangeMatrix,
    cluster: Vec<LaurentPolynomial>,
    names: Vec<String>,
}

impl Seed {
    /// The initial seed: cluster entry `i` is the variable `names[i]`.
    pub fn initial(matrix: ExchangeMatrix, names: Vec<String>) -> Result<Self> {
        let n = matrix.n();
        if names.len() != n {
            return Err(Error::InvalidSeed(format!("{} names for {} rows", names.len(), n)));
        }
        crate::arith::VariableContext::new(names.clone(), matrix.m(), n - matrix.m())?;
        let cluster = (0..n).map(|i| LaurentPolynomial::var(n, i)).collect();
        Ok(Self { matrix, cluster, names })
    }

    pub fn matrix(&self) -> &ExchangeMatrix {
        &self.matrix
    }

    pub fn cluster(&self) -> &[LaurentPolynomial] {
        &self.cluster
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn n(&self) -> usize {
        self.matrix.n()
    }

    pub fn m(&self) -> usize {
        self.matrix.m()
    }

    /// `∏_{B_jk>0} x_j^{B_jk} + ∏_{B_jk<0} x_j^{-B_jk}` in the current cluster.
    pub fn exchange_binomial(&self, k: usize) -> Result<LaurentPolynomial> {
        if k >= self.m() {
            return Err(Error::IndexOutOfRange { index: k, max: self.m() });
        }
        let n = self.n();
        let mut plus = LaurentPolynomial::one(n);
        let mut minus = LaurentPolynomial::one(n);
        for j in 0..n {
            let b = self.matrix.get(j, k);
            if b > 0 {
                plus = &plus * &self.cluster[j].pow(b)?;
            } else if b < 0 {
                minus = &minus * &self.cluster[j].pow(-b)?;
            }
        }
        Ok(&plus + &minus)
    }

    /// The cluster variable obtained by mutating at `k`, certified Laurent.
    pub fn mutated_variable(&self, k: usize) -> Result<LaurentPolynomial> {
        let p = self.exchange_binomial(k)?;
        let xk = &self.cluster[k];
        let num = p.numerator().mul_monomial(xk.denominator());
        let den = xk.numerator().mul_monomial(p.denominator());
        let f = Fraction::new(num, den)?;
        let all: Vec<usize> = (0..self.n()).collect();
        fraction_is_laurent(&f, &all).map_err(|e| match e {
            Error::NotLaurent => Error::LaurentViolation {
                index: k,
                detail: format!(
                    "mutation at {} of cluster entry {}",
                    k + 1,
                    xk.to_expr_string(&self.names)
                ),
            },
            other => other,
        })
    }

    /// Seed mutation at the mutable index `k` (0-based).
    pub fn mutate(&self, k: usize) -> Result<Self> {
        let xk = self.mutated_variable(k)?;
        let mut cluster = self.cluster.clone();
        cluster[k] = xk;
        Ok(Self {
            matrix: self.matrix.mutate(k)?,
            cluster,
            names: self.names.clone(),
        })
    }

    pub fn apply_word(&self, word: &MutationWord) -> Result<Self> {
        word.0.iter().try_fold(self.clone(), |s, &k| s.mutate(k))
    }

    /// Generators of the lower bound: the cluster, its one-step mutations
    /// and the inverses of the frozen variables.
    pub fn lower_bound_generators(&self) -> Result<Vec<LaurentPolynomial>> {
        let mut out = self.cluster.clone();
        for k in 0..self.m() {
            out.push(self.mutated_variable(k)?);
        }
        for j in self.m()..self.n() {
            out.push(self.cluster[j].inverse().ok_or_else(|| {
                Error::Internal("frozen cluster entry is not a monomial".into())
            })?);
        }
        Ok(out)
    }

    /// `x_1⋯x_m` followed by `x_1⋯x_i'⋯x_m` for each mutable `i`.
    pub fn lower_deep_ideal_generators(&self) -> Result<Vec<LaurentPolynomial>> {
        let m = self.m();
        let primes: Vec<LaurentPolynomial> = (0..m).map(|k| self.mutated_variable(k)).collect::<Result<_>>()?;
        let product = |swap: Option<usize>| {
            (0..m).fold(LaurentPolynomial::one(self.n()), |acc, j| {
                let x = if swap == Some(j) { &primes[j] } else { &self.cluster[j] };
                &acc * x
            })
        };
        let mut out = vec![product(None)];
        out.extend((0..m).map(|i| product(Some(i))));
        Ok(out)
    }

    /// The product of the mutable variables of the initial cluster as a
    /// monomial in `n` variables.
    pub fn mutable_monomial(&self) -> Monomial {
        let mut e = vec![0u32; self.n()];
        for x in e.iter_mut().take(self.m()) {
            *x = 1;
        }
        Monomial::from_exponents(&e)
    }

    /// The exchange binomial at `k` for the initial variables as a
    /// polynomial; only meaningful on an initial seed.
    pub fn initial_exchange_polynomial(&self, k: usize) -> Result<Polynomial> {
        let b = self.exchange_binomial(k)?;
        b.as_polynomial()
            .cloned()
            .ok_or_else(|| Error::Precondition("exchange binomial of a non-initial seed".into()))
    }
}
