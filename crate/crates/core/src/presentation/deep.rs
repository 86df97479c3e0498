use serde::Serialize;

use super::checks::{check_lower_containment, lifted_lower_deep_ideal};
use super::ring::PresentedRing;
use crate::cluster::{MutationWord, Seed};
use crate::error::{Error, Result};
use crate::groebner::GroebnerIdeal;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "result")]
pub enum DeepIdealResult {
    /// `1` lies in the ideal generated by the lower deep ideal, after
    /// adding the clusters reached by `widened_by`.
    Trivial { widened_by: Vec<String> },
    /// `1` is not in the ideal even after trying every listed word.
    NontrivialForDx { tried: Vec<String> },
    Inconclusive { reason: String },
}

/// Reduced mutation words (no index repeated twice in a row) of length
/// `1..=depth`.
pub fn reduced_words(m: usize, depth: usize) -> Vec<MutationWord> {
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..depth {
        let mut next = Vec::new();
        for w in &frontier {
            for k in 0..m {
                if w.last() != Some(&k) {
                    let mut v = w.clone();
                    v.push(k);
                    next.push(v);
                }
            }
        }
        out.extend(next.iter().cloned().map(MutationWord::new));
        frontier = next;
    }
    out
}

/// Tests whether `S D_x` (optionally widened by the deep-ideal generators
/// of further clusters) is the unit ideal. Intended for rings already
/// verified to present the upper cluster algebra.
pub fn deep_ideal_triviality(pr: &PresentedRing, seed: &Seed, widening: &[MutationWord]) -> Result<DeepIdealResult> {
    match run(pr, seed, widening) {
        Err(Error::BudgetExceeded { budget }) => Ok(DeepIdealResult::Inconclusive {
            reason: format!("Groebner step budget {budget} exhausted"),
        }),
        other => other,
    }
}

fn run(pr: &PresentedRing, seed: &Seed, widening: &[MutationWord]) -> Result<DeepIdealResult> {
    let lower = check_lower_containment(pr, seed)?;
    if !lower.holds() {
        return Ok(DeepIdealResult::Inconclusive {
            reason: "lower containment fails".into(),
        });
    }
    let mut gens = pr.kernel().generators().to_vec();
    gens.extend(lifted_lower_deep_ideal(pr, &lower)?);
    let unit = |g: &[_]| -> Result<bool> {
        GroebnerIdeal::with_options(pr.nvars(), g.to_vec(), pr.config().gb.clone())?.is_unit()
    };
    if unit(&gens)? {
        return Ok(DeepIdealResult::Trivial { widened_by: Vec::new() });
    }
    let test = pr.membership()?;
    let mut used = Vec::new();
    for w in widening {
        used.push(w.to_string());
        let s = seed.apply_word(w)?;
        for d in s.lower_deep_ideal_generators()? {
            match test.test(&d)? {
                Some(lift) => gens.push(lift),
                None => {
                    return Ok(DeepIdealResult::Inconclusive {
                        reason: format!(
                            "a deep ideal generator of the cluster {w} is not in the ring: {}",
                            d.to_expr_string(pr.seed_names())
                        ),
                    })
                }
            }
        }
        if unit(&gens)? {
            return Ok(DeepIdealResult::Trivial { widened_by: used });
        }
    }
    Ok(DeepIdealResult::NontrivialForDx { tried: used })
}
