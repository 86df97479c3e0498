use rayon::prelude::*;

use super::ring::PresentedRing;
use crate::arith::{fraction_is_laurent, laurent_normalize, substitute, Fraction, LaurentPolynomial, Monomial, Polynomial};
use crate::cluster::Seed;
use crate::error::{Error, Result};
use crate::groebner::{normal_form, saturate_element, saturate_ideal, GroebnerIdeal};

/// Outcome of testing `x_i' ∈ S` for every mutable `i`.
#[derive(Clone, Debug)]
pub struct LowerContainment {
    /// Ambient polynomial expressing `x_i'`, or `None` when not a member.
    pub witnesses: Vec<Option<Polynomial>>,
}

impl LowerContainment {
    pub fn holds(&self) -> bool {
        self.witnesses.iter().all(Option::is_some)
    }

    pub fn first_failure(&self) -> Option<usize> {
        self.witnesses.iter().position(Option::is_none)
    }
}

pub fn check_lower_containment(pr: &PresentedRing, seed: &Seed) -> Result<LowerContainment> {
    let test = pr.membership()?;
    let witnesses = (0..seed.m())
        .map(|i| test.test(&seed.mutated_variable(i)?))
        .collect::<Result<_>>()?;
    Ok(LowerContainment { witnesses })
}

/// Outcome of testing that every generator is Laurent in each adjacent
/// cluster.
#[derive(Clone, Debug)]
pub struct UpperContainment {
    /// `(generator index, mutable index)` pairs that failed.
    pub failures: Vec<(usize, usize)>,
}

impl UpperContainment {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Rewrites `g` in the cluster mutated at `i` (slot `i` now holding `x_i'`)
/// and tests Laurentness there.
pub fn laurent_in_adjacent_cluster(seed: &Seed, g: &LaurentPolynomial, i: usize) -> Result<LaurentPolynomial> {
    let n = seed.n();
    let binomial = seed.initial_exchange_polynomial(i)?;
    let assign: Vec<Fraction> = (0..n)
        .map(|j| {
            if j == i {
                Fraction::new(binomial.clone(), Polynomial::var(n, i))
            } else {
                Ok(Fraction::var(n, j))
            }
        })
        .collect::<Result<_>>()?;
    let f = substitute(g, &assign)?;
    let all: Vec<usize> = (0..n).collect();
    fraction_is_laurent(&f, &all)
}

pub fn check_upper_containment(pr: &PresentedRing, seed: &Seed) -> Result<UpperContainment> {
    let pairs: Vec<(usize, usize)> = (0..pr.generators().len())
        .flat_map(|g| (0..seed.m()).map(move |i| (g, i)))
        .collect();
    let results: Vec<Option<(usize, usize)>> = pairs
        .par_iter()
        .map(|&(g, i)| match laurent_in_adjacent_cluster(seed, &pr.generators().get(g).expr, i) {
            Ok(_) => Ok(None),
            Err(Error::NotLaurent) => Ok(Some((g, i))),
            Err(e) => Err(e),
        })
        .collect::<Result<_>>()?;
    Ok(UpperContainment {
        failures: results.into_iter().flatten().collect(),
    })
}

/// A nonzero normal form `r` of `(S F : (S D_x)^∞)` modulo `S F`, and the
/// element `r / F` of the upper bound it represents.
#[derive(Clone, Debug)]
pub struct Candidate {
    pub normal_form: Polynomial,
    pub element: LaurentPolynomial,
}

#[derive(Clone, Debug)]
pub struct Criterion5 {
    pub equal: bool,
    /// Distinct candidates, simplest first.
    pub candidates: Vec<Candidate>,
    pub j_basis_size: usize,
    pub sat_generator_count: usize,
}

impl Criterion5 {
    pub fn new_elements(&self) -> Vec<LaurentPolynomial> {
        self.candidates.iter().map(|c| c.element.clone()).collect()
    }
}

/// Lifts the lower deep ideal generators into the ambient ring using the
/// lower-containment witnesses: `F` and `w_i ∏_{j≠i} x_j`.
pub fn lifted_lower_deep_ideal(pr: &PresentedRing, lower: &LowerContainment) -> Result<Vec<Polynomial>> {
    let n = pr.nvars();
    let m = pr.mutable_count();
    let mut out = vec![pr.mutable_product()];
    for (i, w) in lower.witnesses.iter().enumerate() {
        let w = w.as_ref().ok_or_else(|| {
            Error::Precondition(format!(
                "mutation at {} is not in the candidate ring; run lower containment first",
                i + 1
            ))
        })?;
        let others = (0..m).filter(|&j| j != i).fold(w.clone(), |acc, j| &acc * &Polynomial::var(n, j));
        out.push(others);
    }
    Ok(out)
}

pub fn criterion5(pr: &PresentedRing, seed: &Seed) -> Result<Criterion5> {
    let lower = check_lower_containment(pr, seed)?;
    criterion5_with(pr, &lower)
}

/// Tests `S F = (S F : (S D_x)^∞)` and collects the obstructions.
///
/// Works in `[x | y | f]`: with `J = (I₀ + (F)) : (f_1⋯f_k)^∞`, where `I₀` is
/// the reduced kernel, the test is `J = (J : D̂^∞)`. Localizing at the
/// frozen variables recovers the statement in `S`.
pub fn criterion5_with(pr: &PresentedRing, lower: &LowerContainment) -> Result<Criterion5> {
    let n = pr.nvars();
    let k = pr.frozen_count();
    let n0 = n - k;
    let f = pr.mutable_product();
    let mut j = pr.reduced_kernel().extended([f.truncate(n0)])?;
    if k > 0 {
        let frozen = pr
            .frozen_slots()
            .fold(Polynomial::one(n0), |acc, v| acc.mul_monomial(&Monomial::var(n0, v)));
        j = saturate_element(&j, &frozen)?;
    }
    let lifted: Vec<Polynomial> = lifted_lower_deep_ideal(pr, lower)?
        .iter()
        .map(|d| pr.without_frozen_inverses(d))
        .collect();
    let dhat = GroebnerIdeal::with_options(n0, lifted, pr.config().gb.clone())?;
    let sat = saturate_ideal(&j, &dhat)?;
    let jb = j.basis(pr.order())?;
    let f_image = pr.image_of(&f)?;
    let mut candidates: Vec<Candidate> = Vec::new();
    for g in sat.generators() {
        let r = normal_form(g, &jb, pr.order()).extend(k);
        if r.is_zero() {
            continue;
        }
        let img = pr.image_of(&r)?;
        let element = laurent_normalize(
            img.numerator().primitive_part(),
            img.denominator().mul(f_image.numerator().as_term().expect("monomial").0),
        );
        if !candidates.iter().any(|c| c.element == element) {
            candidates.push(Candidate {
                normal_form: r.primitive_part(),
                element,
            });
        }
    }
    let names = pr.seed_names().to_vec();
    candidates.sort_by_cached_key(|c| {
        (
            c.normal_form.total_degree(),
            c.normal_form.len(),
            c.element.to_expr_string(&names),
        )
    });
    Ok(Criterion5 {
        equal: candidates.is_empty(),
        candidates,
        j_basis_size: jb.len(),
        sat_generator_count: sat.generators().len(),
    })
}
