use std::cmp::Ordering;

use serde::Serialize;

use super::ring::PresentedRing;
use crate::arith::{LaurentPolynomial, Monomial, Polynomial};
use crate::cluster::CoprimeCertificate;
use crate::error::Result;
use crate::groebner::{ideal_membership, GroebnerIdeal, MonomialOrder};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "verified_equal_U")]
    VerifiedEqualU,
    #[serde(rename = "candidate")]
    Candidate,
    #[serde(rename = "max_iterations_reached")]
    MaxIterationsReached,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::VerifiedEqualU => "verified_equal_U",
            Status::Candidate => "candidate",
            Status::MaxIterationsReached => "max_iterations_reached",
        }
    }
}

/// Generators with their Laurent expressions and a generating set of the
/// relations among them.
#[derive(Clone, Debug)]
pub struct Presentation {
    /// Seed variable names; Laurent expressions are written in these.
    pub variable_names: Vec<String>,
    /// `x_1..x_m` then the extra generators.
    pub generator_names: Vec<String>,
    pub generator_exprs: Vec<LaurentPolynomial>,
    /// Frozen variables, inverted in the coefficient ring.
    pub coefficient_names: Vec<String>,
    /// Names of the ambient ring the relations live in.
    pub ambient_names: Vec<String>,
    /// Integer-coefficient relations, free of the formal inverses.
    pub relations: Vec<Polynomial>,
    pub status: Status,
    pub certificate: CoprimeCertificate,
    /// Equality with the upper cluster algebra holds only under the
    /// total-coprimality hypothesis.
    pub conditional: bool,
}

impl Presentation {
    pub fn relation_strings(&self) -> Vec<String> {
        self.relations.iter().map(|r| r.to_expr_string(&self.ambient_names)).collect()
    }

    pub fn generator_strings(&self) -> Vec<(String, String)> {
        self.generator_names
            .iter()
            .zip(&self.generator_exprs)
            .map(|(n, e)| (n.clone(), e.to_expr_string(&self.variable_names)))
            .collect()
    }
}

fn leading_monomial<'a>(p: &'a Polynomial, order: &MonomialOrder) -> Option<&'a Monomial> {
    p.terms().map(|(m, _)| m).max_by(|a, b| order.compare(a, b))
}

/// Integer primitive form with a positive leading coefficient in `order`.
pub fn normalize_relation(p: &Polynomial, order: &MonomialOrder) -> Polynomial {
    let q = p.primitive_part();
    match leading_monomial(&q, order) {
        Some(m) if q.coefficient(m) < num_traits::zero() => -&q,
        _ => q,
    }
}

fn relation_key(p: &Polynomial, order: &MonomialOrder, a: &Polynomial) -> Ordering {
    p.total_degree()
        .cmp(&a.total_degree())
        .then_with(|| match (leading_monomial(p, order), leading_monomial(a, order)) {
            (Some(x), Some(y)) => order.compare(x, y),
            _ => Ordering::Equal,
        })
        .then_with(|| p.len().cmp(&a.len()))
}

/// Printable relations of the kernel: the reduced basis with formal
/// inverses substituted away, normalized, sorted by degree then leading
/// monomial, and thinned to an irredundant generating set when `minimize`.
pub fn kernel_relations(pr: &PresentedRing, minimize: bool) -> Result<Vec<Polynomial>> {
    let order = pr.order();
    let basis = pr.kernel().basis(order)?;
    let mut rels: Vec<Polynomial> = Vec::new();
    for g in basis.iter() {
        let c = pr.clear_frozen_inverses(g);
        if c.is_zero() || c.is_constant() {
            continue;
        }
        let c = normalize_relation(&c, order);
        if !rels.contains(&c) {
            rels.push(c);
        }
    }
    rels.sort_by(|a, b| relation_key(a, order, b));
    if !minimize || rels.len() <= 1 {
        return Ok(rels);
    }
    // Forward greedy: keep a relation only if the ones kept so far do not
    // already generate it (modulo f f̄ - 1).
    let mut kept: Vec<Polynomial> = Vec::new();
    for r in rels {
        let mut gens = pr.inverse_relations();
        gens.extend(kept.iter().cloned());
        let ideal = GroebnerIdeal::with_options(pr.nvars(), gens, pr.config().gb.clone())?;
        if kept.is_empty() || !ideal_membership(&r, &ideal)? {
            kept.push(r);
        }
    }
    Ok(kept)
}

pub fn presentation_from_ring(pr: &PresentedRing, status: Status, minimize: bool) -> Result<Presentation> {
    let m = pr.mutable_count();
    let p = pr.generators().len();
    let ambient = pr.ambient_names().to_vec();
    Ok(Presentation {
        variable_names: pr.seed_names().to_vec(),
        generator_names: ambient[..m + p].to_vec(),
        generator_exprs: pr.ring_generators(),
        coefficient_names: ambient[m + p..m + p + pr.frozen_count()].to_vec(),
        ambient_names: ambient,
        relations: kernel_relations(pr, minimize)?,
        status,
        certificate: pr.certificate(),
        conditional: pr.is_conditional(),
    })
}
