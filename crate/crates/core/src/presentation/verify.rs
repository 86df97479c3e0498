use std::time::Instant;

use serde::Serialize;

use super::checks::{check_lower_containment, check_upper_containment, criterion5_with};
use super::generators::GeneratorSet;
use super::ring::{build_presentation_with, EngineConfig, PresentedRing};
use crate::arith::Polynomial;
use crate::cli::parse_relation;
use crate::cluster::Seed;
use crate::error::{Error, Result};
use crate::groebner::{ideal_equality_in, GroebnerIdeal};

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u128,
}

/// The four checks on a claimed presentation.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    /// Every claimed relation vanishes in the Laurent ring.
    pub substitution: CheckOutcome,
    /// The claimed relations and `f f̄ - 1` generate the kernel.
    pub ideal_equality: CheckOutcome,
    /// Lower bound ⊆ S ⊆ upper bound.
    pub containments: CheckOutcome,
    /// `S F = (S F : (S D_x)^∞)`.
    pub criterion5: CheckOutcome,
    pub conditional: bool,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.substitution.passed && self.ideal_equality.passed && self.containments.passed && self.criterion5.passed
    }

    pub fn checks(&self) -> [(&'static str, &CheckOutcome); 4] {
        [
            ("substitution", &self.substitution),
            ("ideal_equality", &self.ideal_equality),
            ("containments", &self.containments),
            ("criterion5", &self.criterion5),
        ]
    }
}

/// Parses relation strings over the ambient names of `pr`. Frozen
/// variables may carry negative exponents; such denominators are cleared.
pub fn parse_claimed_relations(pr: &PresentedRing, relations: &[String]) -> Result<Vec<Polynomial>> {
    let names = pr.ambient_names();
    let frozen = pr.frozen_slots();
    let n = pr.nvars();
    let no_bindings = Default::default();
    relations
        .iter()
        .map(|text| {
            // Laurent in frozen variables is allowed: parse each side, clear.
            let sides: Vec<&str> = text.split('=').collect();
            if sides.len() > 2 {
                return parse_relation(text, names, &no_bindings);
            }
            let mut acc = crate::arith::LaurentPolynomial::zero(n);
            for (i, side) in sides.iter().enumerate() {
                let l = crate::cli::parse_expression(side, names).map_err(|e| match e {
                    Error::Parse { pos, msg } => Error::Parse {
                        pos: pos + if i == 1 { sides[0].len() + 1 } else { 0 },
                        msg,
                    },
                    other => other,
                })?;
                acc = if i == 0 { l } else { &acc - &l };
            }
            if acc.denominator().support().any(|v| !frozen.contains(&v)) {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!("relation {text:?} has a non-frozen denominator"),
                });
            }
            Ok(acc.numerator().clone())
        })
        .collect()
}

fn timed(f: impl FnOnce() -> Result<(bool, String)>) -> Result<CheckOutcome> {
    let t = Instant::now();
    let (passed, detail) = f()?;
    Ok(CheckOutcome {
        passed,
        detail,
        elapsed_ms: t.elapsed().as_millis(),
    })
}

/// Runs substitution, ideal equality, containment and saturation checks on
/// a claimed generating set and relation list.
pub fn verify_paper_presentation(
    seed: &Seed,
    gens: &GeneratorSet,
    relations: &[String],
    config: &EngineConfig,
) -> Result<VerifyReport> {
    let pr = build_presentation_with(seed, gens, config)?;
    let claimed = parse_claimed_relations(&pr, relations)?;
    verify_parsed(&pr, seed, &claimed)
}

pub fn verify_parsed(pr: &PresentedRing, seed: &Seed, claimed: &[Polynomial]) -> Result<VerifyReport> {
    let substitution = timed(|| {
        let mut bad = Vec::new();
        for (i, r) in claimed.iter().enumerate() {
            if !pr.image_of(r)?.is_zero() {
                bad.push(i + 1);
            }
        }
        Ok(if bad.is_empty() {
            (true, format!("{} relations vanish", claimed.len()))
        } else {
            (false, format!("relations {bad:?} do not vanish"))
        })
    })?;
    let ideal_equality = timed(|| {
        let mut gens = claimed.to_vec();
        gens.extend(pr.inverse_relations());
        let ideal = GroebnerIdeal::with_options(pr.nvars(), gens, pr.config().gb.clone())?;
        let eq = ideal_equality_in(&ideal, pr.kernel(), pr.order())?;
        let kb = pr.kernel().basis(pr.order())?.len();
        Ok((eq, format!("kernel basis has {kb} elements")))
    })?;
    let lower = check_lower_containment(pr, seed)?;
    let containments = timed(|| {
        let upper = check_upper_containment(pr, seed)?;
        let mut problems = Vec::new();
        if let Some(i) = lower.first_failure() {
            problems.push(format!("mutation at {} not in the ring", i + 1));
        }
        for (g, i) in &upper.failures {
            problems.push(format!("{} not Laurent after mutation at {}", pr.generators().get(*g).name, i + 1));
        }
        Ok(if problems.is_empty() {
            (true, "lower and upper containment hold".to_string())
        } else {
            (false, problems.join("; "))
        })
    })?;
    let criterion5 = timed(|| {
        if !lower.holds() {
            return Ok((false, "skipped: lower containment fails".to_string()));
        }
        let c5 = criterion5_with(pr, &lower)?;
        Ok(if c5.equal {
            (true, "saturation is a fixed point".to_string())
        } else {
            let first = c5.candidates[0].element.to_expr_string(pr.seed_names());
            (false, format!("{} new elements, e.g. {first}", c5.candidates.len()))
        })
    })?;
    Ok(VerifyReport {
        substitution,
        ideal_equality,
        containments,
        criterion5,
        conditional: pr.is_conditional(),
    })
}
