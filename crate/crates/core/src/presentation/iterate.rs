use std::time::Instant;

use serde::Serialize;

use super::checks::{check_lower_containment, check_upper_containment, criterion5_with, Criterion5};
use super::generators::GeneratorSet;
use super::output::{presentation_from_ring, Presentation, Status};
use super::ring::{build_presentation_with, EngineConfig};
use crate::cluster::Seed;
use crate::error::{Error, Result};
use crate::groebner::SubalgebraMembership;

/// Which obstructions to adopt after a failed saturation test.
#[derive(Clone, Debug)]
pub struct SelectionPolicy {
    /// At most this many elements per round; `None` adopts every element
    /// of minimal degree.
    pub cap: Option<usize>,
}

impl Default for SelectionPolicy {
    fn default() -> Self {
        Self { cap: Some(3) }
    }
}

impl SelectionPolicy {
    /// Candidates are sorted simplest first; keep those of minimal
    /// normal-form degree, up to the cap.
    pub fn select(&self, c5: &Criterion5) -> Vec<usize> {
        let Some(first) = c5.candidates.first() else {
            return Vec::new();
        };
        let d = first.normal_form.total_degree();
        let mut out: Vec<usize> = (0..c5.candidates.len())
            .take_while(|&i| c5.candidates[i].normal_form.total_degree() == d)
            .collect();
        if let Some(cap) = self.cap {
            out.truncate(cap.max(1));
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IterationStep {
    pub iteration: usize,
    pub generator_count: usize,
    pub kernel_generators: usize,
    pub j_basis_size: usize,
    pub saturation_generators: usize,
    /// Names and expressions of the elements adopted after this step.
    pub adopted: Vec<(String, String)>,
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct IterationReport {
    /// Missing exchanged variables added to the user's generators before
    /// the first step.
    pub completed_lower_bound: Vec<String>,
    pub steps: Vec<IterationStep>,
    /// Generators dropped after verification because the others already
    /// generate them.
    pub pruned: Vec<String>,
    pub total_ms: u128,
}

#[derive(Clone, Debug)]
pub struct IterateOptions {
    pub policy: SelectionPolicy,
    pub max_iters: usize,
    /// Drop redundant generators once verified.
    pub prune: bool,
    /// Reduce printed relations to an irredundant generating set.
    pub minimize_relations: bool,
}

impl Default for IterateOptions {
    fn default() -> Self {
        Self {
            policy: SelectionPolicy::default(),
            max_iters: 8,
            prune: true,
            minimize_relations: true,
        }
    }
}

/// Grows the generating set until the saturation test certifies equality
/// with the upper bound, or the iteration limit is hit. `max_iters` counts
/// saturation tests; with `0` the input is returned as a candidate.
pub fn iterate(
    seed: &Seed,
    initial: &GeneratorSet,
    config: &EngineConfig,
    options: &IterateOptions,
) -> Result<(Presentation, IterationReport)> {
    let start = Instant::now();
    let mut report = IterationReport::default();
    let mut gens = initial.clone();

    let mut pr = build_presentation_with(seed, &gens, config)?;
    let lower = check_lower_containment(&pr, seed)?;
    if !lower.holds() {
        for (i, w) in lower.witnesses.iter().enumerate() {
            if w.is_none() {
                let name = gens.fresh_name(&format!("{}p", seed.names()[i]), seed.names());
                gens.push(name.clone(), seed.mutated_variable(i)?)?;
                report.completed_lower_bound.push(name);
            }
        }
        pr = build_presentation_with(seed, &gens, config)?;
    }
    let upper = check_upper_containment(&pr, seed)?;
    if let Some(&(g, i)) = upper.failures.first() {
        return Err(Error::Precondition(format!(
            "generator {} is not Laurent after mutation at {}",
            gens.get(g).name,
            i + 1
        )));
    }

    let mut iteration = 0;
    let status = loop {
        if iteration >= options.max_iters {
            break if iteration == 0 { Status::Candidate } else { Status::MaxIterationsReached };
        }
        let step_start = Instant::now();
        let lower = check_lower_containment(&pr, seed)?;
        if !lower.holds() {
            return Err(Error::Internal("lower containment lost after adopting elements".into()));
        }
        let c5 = criterion5_with(&pr, &lower)?;
        let mut step = IterationStep {
            iteration,
            generator_count: seed.m() + gens.len(),
            kernel_generators: pr.kernel().generators().len(),
            j_basis_size: c5.j_basis_size,
            saturation_generators: c5.sat_generator_count,
            adopted: Vec::new(),
            elapsed_ms: 0,
        };
        iteration += 1;
        if c5.equal {
            step.elapsed_ms = step_start.elapsed().as_millis();
            report.steps.push(step);
            break Status::VerifiedEqualU;
        }
        for idx in options.policy.select(&c5) {
            let element = c5.candidates[idx].element.clone();
            let name = gens.fresh_name(&format!("g{}", gens.len() + 1), seed.names());
            step.adopted.push((name.clone(), element.to_expr_string(seed.names())));
            gens.push(name, element)?;
        }
        pr = build_presentation_with(seed, &gens, config)?;
        let upper = check_upper_containment(&pr, seed)?;
        if !upper.holds() {
            return Err(Error::Internal(format!(
                "adopted element fails upper containment: {:?}",
                upper.failures
            )));
        }
        step.elapsed_ms = step_start.elapsed().as_millis();
        report.steps.push(step);
    };

    if status == Status::VerifiedEqualU && options.prune {
        let (pruned_gens, dropped) = prune_generators(seed, &gens, config)?;
        if !dropped.is_empty() {
            report.pruned = dropped;
            gens = pruned_gens;
            pr = build_presentation_with(seed, &gens, config)?;
        }
    }
    let presentation = presentation_from_ring(&pr, status, options.minimize_relations)?;
    report.total_ms = start.elapsed().as_millis();
    Ok((presentation, report))
}

/// Drops, earliest first, every extra generator lying in the algebra
/// generated by the cluster variables and the remaining generators.
pub fn prune_generators(seed: &Seed, gens: &GeneratorSet, config: &EngineConfig) -> Result<(GeneratorSet, Vec<String>)> {
    let n = seed.n();
    let m = seed.m();
    let coeff: Vec<usize> = (m..n).collect();
    let mut alive = vec![true; gens.len()];
    let mut dropped = Vec::new();
    for i in 0..gens.len() {
        let mut others: Vec<_> = (0..m).map(|j| crate::arith::LaurentPolynomial::var(n, j)).collect();
        others.extend((0..gens.len()).filter(|&j| j != i && alive[j]).map(|j| gens.get(j).expr.clone()));
        let test = SubalgebraMembership::new(&others, &coeff, &config.gb)?;
        if test.test(&gens.get(i).expr)?.is_some() {
            alive[i] = false;
            dropped.push(gens.get(i).name.clone());
        }
    }
    Ok((gens.retain_indices(|i| alive[i]), dropped))
}

/// Convenience wrapper with default options.
pub fn iterate_default(seed: &Seed, initial: &GeneratorSet, max_iters: usize) -> Result<(Presentation, IterationReport)> {
    let options = IterateOptions {
        max_iters,
        ..IterateOptions::default()
    };
    iterate(seed, initial, &EngineConfig::default(), &options)
}

