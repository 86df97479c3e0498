use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use rayon::prelude::*;

use super::engine::{buchberger, normal_form, GbOptions};
use super::order::MonomialOrder;
use crate::arith::Polynomial;
use crate::error::{Error, Result};

/// An ideal given by generators, caching one reduced Groebner basis per
/// monomial order. Cache updates are synchronized; callers only ever see
/// immutable bases.
pub struct GroebnerIdeal {
    nvars: usize,
    generators: Vec<Polynomial>,
    options: GbOptions,
    cache: RwLock<HashMap<MonomialOrder, Arc<Vec<Polynomial>>>>,
}

impl Clone for GroebnerIdeal {
    fn clone(&self) -> Self {
        Self {
            nvars: self.nvars,
            generators: self.generators.clone(),
            options: self.options.clone(),
            cache: RwLock::new(self.cache.read().unwrap().clone()),
        }
    }
}

impl std::fmt::Debug for GroebnerIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GroebnerIdeal")
            .field("nvars", &self.nvars)
            .field("generators", &self.generators)
            .finish()
    }
}

impl GroebnerIdeal {
    pub fn new(nvars: usize, generators: Vec<Polynomial>) -> Result<Self> {
        Self::with_options(nvars, generators, GbOptions::from_env())
    }

    pub fn with_options(nvars: usize, generators: Vec<Polynomial>, options: GbOptions) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.nvars() != nvars) {
            return Err(Error::ContextMismatch {
                left: nvars,
                right: g.nvars(),
            });
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Self {
            nvars,
            generators,
            options,
            cache: RwLock::new(HashMap::new()),
        })
    }

    /// Ideal whose generators are already a reduced basis for `order`.
    fn from_basis(nvars: usize, basis: Vec<Polynomial>, order: &MonomialOrder, options: GbOptions) -> Self {
        let ideal = Self {
            nvars,
            generators: basis.clone(),
            options,
            cache: RwLock::new(HashMap::new()),
        };
        ideal.cache.write().unwrap().insert(order.clone(), Arc::new(basis));
        ideal
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn options(&self) -> &GbOptions {
        &self.options
    }

    /// Reduced Groebner basis for `order`, computed once and cached.
    pub fn basis(&self, order: &MonomialOrder) -> Result<Arc<Vec<Polynomial>>> {
        if let Some(b) = self.cache.read().unwrap().get(order) {
            return Ok(Arc::clone(b));
        }
        let basis = Arc::new(buchberger(&self.generators, order, &self.options)?);
        self.cache
            .write()
            .unwrap()
            .entry(order.clone())
            .or_insert_with(|| Arc::clone(&basis));
        Ok(basis)
    }

    pub fn default_basis(&self) -> Result<Arc<Vec<Polynomial>>> {
        self.basis(&MonomialOrder::DegRevLex)
    }

    pub fn is_unit(&self) -> Result<bool> {
        let b = self.default_basis()?;
        Ok(b.len() == 1 && b[0].is_one())
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Ideal plus extra generators.
    pub fn extended(&self, extra: impl IntoIterator<Item = Polynomial>) -> Result<Self> {
        let mut gens = self.generators.clone();
        gens.extend(extra);
        Self::with_options(self.nvars, gens, self.options.clone())
    }
}

pub fn ideal_membership(f: &Polynomial, ideal: &GroebnerIdeal) -> Result<bool> {
    if f.nvars() != ideal.nvars {
        return Err(Error::ContextMismatch {
            left: f.nvars(),
            right: ideal.nvars,
        });
    }
    let order = MonomialOrder::DegRevLex;
    let basis = ideal.basis(&order)?;
    Ok(normal_form(f, &basis, &order).is_zero())
}

/// Equality via reduced Groebner bases, which are canonical for a fixed order.
pub fn ideal_equality(a: &GroebnerIdeal, b: &GroebnerIdeal) -> Result<bool> {
    ideal_equality_in(a, b, &MonomialOrder::DegRevLex)
}

pub fn ideal_equality_in(a: &GroebnerIdeal, b: &GroebnerIdeal, order: &MonomialOrder) -> Result<bool> {
    if a.nvars != b.nvars {
        return Err(Error::ContextMismatch {
            left: a.nvars,
            right: b.nvars,
        });
    }
    Ok(*a.basis(order)? == *b.basis(order)?)
}

/// `I ∩ k[remaining variables]`, as a Groebner basis of the elimination ideal.
pub fn eliminate(ideal: &GroebnerIdeal, elim_vars: &[usize]) -> Result<GroebnerIdeal> {
    let order = MonomialOrder::elimination(ideal.nvars, elim_vars);
    let basis = ideal.basis(&order)?;
    let kept: Vec<Polynomial> = basis
        .iter()
        .filter(|g| g.uses_only(|v| !elim_vars.contains(&v)))
        .cloned()
        .collect();
    Ok(GroebnerIdeal::from_basis(ideal.nvars, kept, &order, ideal.options.clone()))
}

/// Adjoins one variable `t` and eliminates it from `gens(t)`, returning the
/// result in the original ring.
fn eliminate_fresh(ideal: &GroebnerIdeal, gens: Vec<Polynomial>) -> Result<GroebnerIdeal> {
    let n = ideal.nvars;
    let big = GroebnerIdeal::with_options(n + 1, gens, ideal.options.clone())?;
    let elim = eliminate(&big, &[n])?;
    let gens: Vec<Polynomial> = elim.generators.iter().map(|g| g.truncate(n)).collect();
    GroebnerIdeal::with_options(n, gens, ideal.options.clone())
}

/// `(I : f^∞)` by the Rabinowitsch trick: eliminate `t` from `I + (1 - t f)`.
pub fn saturate_element(ideal: &GroebnerIdeal, f: &Polynomial) -> Result<GroebnerIdeal> {
    if f.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if f.is_constant() {
        return Ok(ideal.clone());
    }
    let n = ideal.nvars;
    let t = Polynomial::var(n + 1, n);
    let mut gens: Vec<Polynomial> = ideal.generators.iter().map(|g| g.extend(1)).collect();
    gens.push(&Polynomial::one(n + 1) - &(&t * &f.extend(1)));
    eliminate_fresh(ideal, gens)
}

/// `(I : f^∞)` for a monomial `f`, saturating one variable at a time.
/// Agrees with [`saturate_element`]; usually much cheaper.
pub fn saturate_monomial(ideal: &GroebnerIdeal, f: &Polynomial) -> Result<GroebnerIdeal> {
    let (m, _) = f
        .as_term()
        .ok_or_else(|| Error::Precondition("saturate_monomial needs a monomial".into()))?;
    let mut current = ideal.clone();
    for v in m.support() {
        current = saturate_element(&current, &Polynomial::var(ideal.nvars, v))?;
    }
    Ok(current)
}

/// `I ∩ J` as the elimination of `t` from `t I + (1 - t) J`.
pub fn intersect(a: &GroebnerIdeal, b: &GroebnerIdeal) -> Result<GroebnerIdeal> {
    let n = a.nvars;
    if b.nvars != n {
        return Err(Error::ContextMismatch { left: n, right: b.nvars });
    }
    if a.is_zero() || b.is_zero() {
        return GroebnerIdeal::with_options(n, Vec::new(), a.options.clone());
    }
    let t = Polynomial::var(n + 1, n);
    let one_minus_t = &Polynomial::one(n + 1) - &t;
    let mut gens: Vec<Polynomial> = a.generators.iter().map(|g| &t * &g.extend(1)).collect();
    gens.extend(b.generators.iter().map(|g| &one_minus_t * &g.extend(1)));
    eliminate_fresh(a, gens)
}

/// `(I : J^∞)` as the intersection over generators `g` of `J` of `(I : g^∞)`.
/// The per-generator saturations run in parallel.
pub fn saturate_ideal(ideal: &GroebnerIdeal, by: &GroebnerIdeal) -> Result<GroebnerIdeal> {
    if by.nvars != ideal.nvars {
        return Err(Error::ContextMismatch {
            left: ideal.nvars,
            right: by.nvars,
        });
    }
    if by.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let basis = ideal.default_basis()?;
    let parts: Vec<GroebnerIdeal> = by
        .generators
        .par_iter()
        .map(|g| {
            if normal_form(g, &basis, &MonomialOrder::default()).is_zero() {
                GroebnerIdeal::with_options(ideal.nvars, vec![Polynomial::one(ideal.nvars)], ideal.options.clone())
            } else if g.as_term().is_some() {
                saturate_monomial(ideal, g)
            } else {
                saturate_element(ideal, g)
            }
        })
        .collect::<Result<_>>()?;
    let mut acc: Option<GroebnerIdeal> = None;
    for part in parts {
        if part.is_unit()? {
            continue;
        }
        acc = Some(match acc {
            None => part,
            Some(prev) => intersect(&prev, &part)?,
        });
    }
    match acc {
        Some(a) => Ok(a),
        None => GroebnerIdeal::with_options(ideal.nvars, vec![Polynomial::one(ideal.nvars)], ideal.options.clone()),
    }
}
