use crate::arith::LaurentPolynomial;
use crate::cluster::Seed;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedGenerator {
    pub name: String,
    pub expr: LaurentPolynomial,
}

/// The extra generators `y_1..y_p` of a candidate ring. The initial
/// mutable variables are always part of the ring and are not listed here.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GeneratorSet {
    entries: Vec<NamedGenerator>,
}

impl GeneratorSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a generator. Zero is rejected; names must be unique.
    pub fn push(&mut self, name: impl Into<String>, expr: LaurentPolynomial) -> Result<()> {
        let name = name.into();
        if expr.is_zero() {
            return Err(Error::DegenerateGenerator(name));
        }
        if self.entries.iter().any(|e| e.name == name) {
            return Err(Error::InvalidSeed(format!("duplicate generator name {name}")));
        }
        self.entries.push(NamedGenerator { name, expr });
        Ok(())
    }

    pub fn with(mut self, name: impl Into<String>, expr: LaurentPolynomial) -> Result<Self> {
        self.push(name, expr)?;
        Ok(self)
    }

    /// The one-step mutations `x_i'` of the seed, i.e. the lower bound
    /// beyond the initial cluster and frozen inverses.
    pub fn lower_bound(seed: &Seed) -> Result<Self> {
        let mut out = Self::new();
        for k in 0..seed.m() {
            let name = out.fresh_name(&format!("{}p", seed.names()[k]), seed.names());
            out.push(name, seed.mutated_variable(k)?)?;
        }
        Ok(out)
    }

    /// A name based on `base` that clashes neither with existing generators
    /// nor with `reserved`.
    pub fn fresh_name(&self, base: &str, reserved: &[String]) -> String {
        let taken = |s: &str| reserved.iter().any(|r| r == s) || self.entries.iter().any(|e| e.name == s);
        if !taken(base) {
            return base.to_string();
        }
        (1..).map(|i| format!("{base}{i}")).find(|s| !taken(s)).expect("unbounded")
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &NamedGenerator> {
        self.entries.iter()
    }

    pub fn names(&self) -> Vec<String> {
        self.entries.iter().map(|e| e.name.clone()).collect()
    }

    pub fn exprs(&self) -> Vec<LaurentPolynomial> {
        self.entries.iter().map(|e| e.expr.clone()).collect()
    }

    pub fn get(&self, i: usize) -> &NamedGenerator {
        &self.entries[i]
    }

    /// Keeps the entries whose index satisfies `keep`.
    pub fn retain_indices(&self, keep: impl Fn(usize) -> bool) -> Self {
        Self {
            entries: self
                .entries
                .iter()
                .enumerate()
                .filter(|(i, _)| keep(*i))
                .map(|(_, e)| e.clone())
                .collect(),
        }
    }
}
