//! JSON input formats.

use std::collections::HashMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::expr::parse_expression_with;
use crate::arith::LaurentPolynomial;
use crate::cluster::{ExchangeMatrix, Seed};
use crate::error::{Error, Result};
use crate::presentation::GeneratorSet;

/// `{"n": 3, "m": 3, "matrix": [[...], ...], "names": [...]}` with `n`
/// rows of length `m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedFile {
    pub n: usize,
    pub m: usize,
    pub matrix: Vec<Vec<i64>>,
    pub names: Vec<String>,
}

impl SeedFile {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?)
    }

    pub fn from_seed(seed: &Seed) -> Self {
        Self {
            n: seed.n(),
            m: seed.m(),
            matrix: seed.matrix().rows().to_vec(),
            names: seed.names().to_vec(),
        }
    }

    /// Validates dimensions and skew-symmetrizability.
    pub fn to_seed(&self) -> Result<Seed> {
        if self.matrix.len() != self.n {
            return Err(Error::InvalidSeed(format!("n = {} but {} rows", self.n, self.matrix.len())));
        }
        if let Some(r) = self.matrix.iter().position(|r| r.len() != self.m) {
            return Err(Error::InvalidSeed(format!("row {} does not have m = {} entries", r + 1, self.m)));
        }
        if self.names.len() != self.n {
            return Err(Error::InvalidSeed(format!("n = {} but {} names", self.n, self.names.len())));
        }
        if let Some(bad) = self.names.iter().find(|s| !is_identifier(s)) {
            return Err(Error::InvalidSeed(format!("{bad:?} is not a valid variable name")));
        }
        Seed::initial(ExchangeMatrix::new(self.matrix.clone())?, self.names.clone())
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorEntry {
    pub name: String,
    pub expr: String,
}

/// `{"generators": [{"name": "M", "expr": "..."}]}`. Expressions may use
/// the seed variables and any earlier generator name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorFile {
    pub generators: Vec<GeneratorEntry>,
}

impl GeneratorFile {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?)
    }

    /// Entries naming a mutable seed variable must be that variable and
    /// are skipped, since the cluster variables are always generators.
    pub fn to_generator_set(&self, seed: &Seed) -> Result<GeneratorSet> {
        let names = seed.names();
        let mut bindings: HashMap<String, LaurentPolynomial> = HashMap::new();
        let mut set = GeneratorSet::new();
        for entry in &self.generators {
            if !is_identifier(&entry.name) {
                return Err(Error::InvalidSeed(format!("{:?} is not a valid generator name", entry.name)));
            }
            let expr = parse_expression_with(&entry.expr, names, &bindings)?;
            if let Some(i) = names.iter().position(|n| n == &entry.name) {
                if i < seed.m() && expr == LaurentPolynomial::var(seed.n(), i) {
                    continue;
                }
                return Err(Error::InvalidSeed(format!(
                    "generator {} shadows a seed variable",
                    entry.name
                )));
            }
            set.push(entry.name.clone(), expr.clone())?;
            bindings.insert(entry.name.clone(), expr);
        }
        Ok(set)
    }

    pub fn from_generator_set(set: &GeneratorSet, names: &[String]) -> Self {
        Self {
            generators: set
                .iter()
                .map(|g| GeneratorEntry {
                    name: g.name.clone(),
                    expr: g.expr.to_expr_string(names),
                })
                .collect(),
        }
    }
}

/// `{"relations": ["lhs = rhs", "poly", ...]}` over the generator names,
/// seed variable names and frozen variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationsFile {
    pub relations: Vec<String>,
}

impl RelationsFile {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?)
    }
}
