use std::collections::HashMap;

use crate::error::{Error, Result};

/// Ordered variable names for a polynomial ring, split into mutable, frozen
/// and auxiliary (tag) positions, in that order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableContext {
    names: Vec<String>,
    index: HashMap<String, usize>,
    mutable_count: usize,
    frozen_count: usize,
}

impl VariableContext {
    pub fn new(names: Vec<String>, mutable_count: usize, frozen_count: usize) -> Result<Self> {
        if mutable_count + frozen_count > names.len() {
            return Err(Error::InvalidSeed(format!(
                "{} mutable + {} frozen exceeds {} names",
                mutable_count,
                frozen_count,
                names.len()
            )));
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || index.insert(name.clone(), i).is_some() {
                return Err(Error::InvalidSeed(format!("duplicate or empty variable name `{name}`")));
            }
        }
        Ok(Self {
            names,
            index,
            mutable_count,
            frozen_count,
        })
    }

    /// Context with names `x1, ..., xn` and no frozen or tag variables.
    pub fn numbered(prefix: &str, n: usize) -> Self {
        let names = (1..=n).map(|i| format!("{prefix}{i}")).collect();
        Self::new(names, n, 0).expect("generated names are unique")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn mutable_count(&self) -> usize {
        self.mutable_count
    }

    pub fn frozen_count(&self) -> usize {
        self.frozen_count
    }

    pub fn tag_count(&self) -> usize {
        self.names.len() - self.mutable_count - self.frozen_count
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn is_mutable(&self, i: usize) -> bool {
        i < self.mutable_count
    }

    pub fn is_frozen(&self, i: usize) -> bool {
        i >= self.mutable_count && i < self.mutable_count + self.frozen_count
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates() {
        let err = VariableContext::new(vec!["a".into(), "a".into()], 2, 0);
        assert!(err.is_err());
    }

    #[test]
    fn counts() {
        let ctx = VariableContext::new(vec!["a".into(), "b".into(), "f".into(), "t".into()], 2, 1).unwrap();
        assert_eq!(ctx.tag_count(), 1);
        assert!(ctx.is_frozen(2));
        assert!(!ctx.is_frozen(3));
        assert_eq!(ctx.index_of("t"), Some(3));
    }
}
