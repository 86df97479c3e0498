use std::sync::Arc;

use super::engine::{normal_form, GbOptions};
use super::ideal::GroebnerIdeal;
use super::order::MonomialOrder;
use crate::arith::{LaurentPolynomial, Monomial, Polynomial};
use crate::error::{Error, Result};

/// Membership tests for the algebra generated by a list of Laurent
/// polynomials over the Laurent ring of a set of coefficient variables.
///
/// The graph ideal lives in a ring with blocks
/// `[x | x̄ | tags | c | c̄]`: non-coefficient variables, their formal
/// inverses, one tag per generator, coefficient variables and their
/// inverses. It is generated by `x x̄ - 1`, `c c̄ - 1` and `tag - gen`, and
/// its basis is taken in an order eliminating `x` and `x̄`.
pub struct SubalgebraMembership {
    laurent_nvars: usize,
    ngens: usize,
    /// Ambient slot of each Laurent variable and of its inverse.
    slot: Vec<usize>,
    inv_slot: Vec<usize>,
    elim_count: usize,
    ambient_nvars: usize,
    order: MonomialOrder,
    basis: Arc<Vec<Polynomial>>,
}

impl SubalgebraMembership {
    pub fn new(gens: &[LaurentPolynomial], coefficient_vars: &[usize], options: &GbOptions) -> Result<Self> {
        let n = match gens.first() {
            Some(g) => g.nvars(),
            None => return Err(Error::Precondition("no generators".into())),
        };
        if let Some(g) = gens.iter().find(|g| g.nvars() != n) {
            return Err(Error::ContextMismatch { left: n, right: g.nvars() });
        }
        let cluster: Vec<usize> = (0..n).filter(|v| !coefficient_vars.contains(v)).collect();
        let coeff: Vec<usize> = (0..n).filter(|v| coefficient_vars.contains(v)).collect();
        let e = cluster.len();
        let p = gens.len();
        let k = coeff.len();
        let ambient_nvars = 2 * e + p + 2 * k;
        let mut slot = vec![0; n];
        let mut inv_slot = vec![0; n];
        for (i, &v) in cluster.iter().enumerate() {
            slot[v] = i;
            inv_slot[v] = e + i;
        }
        for (i, &v) in coeff.iter().enumerate() {
            slot[v] = 2 * e + p + i;
            inv_slot[v] = 2 * e + p + k + i;
        }
        let mut me = Self {
            laurent_nvars: n,
            ngens: p,
            slot,
            inv_slot,
            elim_count: 2 * e,
            ambient_nvars,
            order: MonomialOrder::elimination(ambient_nvars, &(0..2 * e).collect::<Vec<_>>()),
            basis: Arc::new(Vec::new()),
        };
        let mut rels = Vec::new();
        for v in 0..n {
            let x = Polynomial::var(ambient_nvars, me.slot[v]);
            let xi = Polynomial::var(ambient_nvars, me.inv_slot[v]);
            rels.push(&(&x * &xi) - &Polynomial::one(ambient_nvars));
        }
        for (j, g) in gens.iter().enumerate() {
            let tag = Polynomial::var(ambient_nvars, 2 * e + j);
            rels.push(&tag - &me.embed(g));
        }
        let ideal = GroebnerIdeal::with_options(ambient_nvars, rels, options.clone())?;
        me.basis = ideal.basis(&me.order)?;
        Ok(me)
    }

    fn embed(&self, l: &LaurentPolynomial) -> Polynomial {
        let num = l.numerator().remap(self.ambient_nvars, &self.slot);
        let mut den = Monomial::one(self.ambient_nvars);
        for (v, &e) in l.denominator().exponents().iter().enumerate() {
            if e > 0 {
                den = den.mul(&Monomial::var(self.ambient_nvars, self.inv_slot[v]).pow(e));
            }
        }
        num.mul_monomial(&den)
    }

    /// Number of variables of the witness ring `[tags | c | c̄]`.
    pub fn witness_nvars(&self) -> usize {
        self.ambient_nvars - self.elim_count
    }

    pub fn generator_count(&self) -> usize {
        self.ngens
    }

    /// Returns a witness expression when `g` is a member.
    ///
    /// The witness is a polynomial in the ring `[tags | c | c̄]`, tag `j`
    /// standing for generator `j`.
    pub fn test(&self, g: &LaurentPolynomial) -> Result<Option<Polynomial>> {
        if g.nvars() != self.laurent_nvars {
            return Err(Error::ContextMismatch {
                left: self.laurent_nvars,
                right: g.nvars(),
            });
        }
        let nf = normal_form(&self.embed(g), &self.basis, &self.order);
        if !nf.uses_only(|v| v >= self.elim_count) {
            return Ok(None);
        }
        let map: Vec<usize> = (0..self.ambient_nvars)
            .map(|v| v.saturating_sub(self.elim_count))
            .collect();
        Ok(Some(nf.remap(self.witness_nvars(), &map)))
    }
}

/// One-shot form of [`SubalgebraMembership::test`].
pub fn subalgebra_membership(
    g: &LaurentPolynomial,
    gens: &[LaurentPolynomial],
    coefficient_vars: &[usize],
) -> Result<Option<Polynomial>> {
    SubalgebraMembership::new(gens, coefficient_vars, &GbOptions::from_env())?.test(g)
}
