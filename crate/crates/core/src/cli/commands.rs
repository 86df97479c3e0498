//! Subcommand drivers. Each returns a text report, a JSON report and an
//! exit code; the binary only chooses which report to print.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cluster::{
    cyclic_triple, rank3_classification, totally_coprime_certificate, CoprimeCertificate, MutationWord, Rank3Class,
    Seed,
};
use crate::error::{Error, Result};
use crate::groebner::MonomialOrder;
use crate::presentation::{
    iterate, verify_paper_presentation, EngineConfig, GeneratorSet, IterateOptions, SelectionPolicy, Status,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT_ERROR: i32 = 1;
pub const EXIT_INCOMPLETE: i32 = 2;

#[derive(Clone, Debug)]
pub struct CommandOutput {
    pub text: String,
    pub json: Value,
    pub exit_code: i32,
}

#[derive(Clone, Debug, Serialize)]
pub struct Rank3Info {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub class: Rank3Class,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub n: usize,
    pub m: usize,
    pub symmetrizer: Vec<u64>,
    pub skew_symmetric: bool,
    pub acyclic: bool,
    pub coprime: bool,
    pub rank: usize,
    pub full_rank: bool,
    pub rank3: Option<Rank3Info>,
    pub certificate: CoprimeCertificate,
}

pub fn cmd_check(seed: &Seed) -> CommandOutput {
    let b = seed.matrix();
    let rank = b.rank();
    let report = CheckReport {
        n: b.n(),
        m: b.m(),
        symmetrizer: b.symmetrizer().to_vec(),
        skew_symmetric: b.is_skew_symmetric(),
        acyclic: b.is_acyclic(),
        coprime: b.is_coprime(),
        rank,
        full_rank: rank == b.m(),
        rank3: cyclic_triple(b).map(|(a, bb, c)| Rank3Info {
            a,
            b: bb,
            c,
            class: rank3_classification(a, bb, c),
        }),
        certificate: totally_coprime_certificate(b),
    };
    let mut text = String::new();
    let _ = writeln!(text, "n = {}, m = {}", report.n, report.m);
    let _ = writeln!(text, "symmetrizer: {:?}", report.symmetrizer);
    let _ = writeln!(text, "skew_symmetric: {}", report.skew_symmetric);
    let _ = writeln!(text, "acyclic: {}", report.acyclic);
    let _ = writeln!(text, "coprime: {}", report.coprime);
    let _ = writeln!(text, "rank: {}", report.rank);
    let _ = writeln!(text, "full_rank: {}", report.full_rank);
    if let Some(r) = &report.rank3 {
        let class = match r.class {
            Rank3Class::Acyclic => "acyclic",
            Rank3Class::NonAcyclic => "non_acyclic",
        };
        let _ = writeln!(text, "rank3: ({}, {}, {}) {}", r.a, r.b, r.c, class);
    }
    let _ = writeln!(text, "certificate: {}", report.certificate.as_str());
    CommandOutput {
        text,
        json: serde_json::to_value(&report).expect("serializable"),
        exit_code: EXIT_OK,
    }
}

#[derive(Clone, Debug)]
pub struct PresentArgs {
    pub max_iters: usize,
    pub adopt_cap: Option<usize>,
    pub order: MonomialOrder,
    pub assume_totally_coprime: bool,
    pub prune: bool,
    pub minimize_relations: bool,
    pub timings: bool,
}

impl Default for PresentArgs {
    fn default() -> Self {
        Self {
            max_iters: 8,
            adopt_cap: Some(3),
            order: MonomialOrder::DegRevLex,
            assume_totally_coprime: false,
            prune: true,
            minimize_relations: true,
            timings: false,
        }
    }
}

impl PresentArgs {
    fn config(&self) -> EngineConfig {
        EngineConfig {
            order: self.order.clone(),
            assume_totally_coprime: self.assume_totally_coprime,
            ..EngineConfig::default()
        }
    }
}

fn conditional_note(certificate: CoprimeCertificate, assumed: bool) -> Option<&'static str> {
    match (certificate.is_certified(), assumed) {
        (true, _) => None,
        (false, true) => Some("total coprimality assumed (--assume-totally-coprime)"),
        (false, false) => Some(
            "no total-coprimality certificate: the ring equals the upper bound, \
             which equals the upper cluster algebra only if the algebra is totally coprime",
        ),
    }
}

/// Runs the generator-discovery loop from `gens`, or from the lower bound
/// when `gens` is `None`.
pub fn cmd_present(seed: &Seed, gens: Option<&GeneratorSet>, args: &PresentArgs) -> Result<CommandOutput> {
    let initial = match gens {
        Some(g) => g.clone(),
        None => GeneratorSet::lower_bound(seed)?,
    };
    let options = IterateOptions {
        policy: SelectionPolicy { cap: args.adopt_cap },
        max_iters: args.max_iters,
        prune: args.prune,
        minimize_relations: args.minimize_relations,
    };
    let (p, report) = iterate(seed, &initial, &args.config(), &options)?;
    let note = conditional_note(p.certificate, args.assume_totally_coprime);
    let exit_code = match p.status {
        Status::VerifiedEqualU if p.certificate.is_certified() || args.assume_totally_coprime => EXIT_OK,
        _ => EXIT_INCOMPLETE,
    };
    let mut text = String::new();
    let _ = writeln!(text, "status: {}", p.status.as_str());
    let _ = writeln!(text, "certificate: {}", p.certificate.as_str());
    if let Some(note) = note {
        let _ = writeln!(text, "note: {note}");
    }
    if !p.coefficient_names.is_empty() {
        let _ = writeln!(text, "coefficients: {} (inverted)", p.coefficient_names.join(", "));
    }
    let _ = writeln!(text, "generators ({}):", p.generator_names.len());
    for (name, expr) in p.generator_strings() {
        let _ = writeln!(text, "  {name} = {expr}");
    }
    let rels = p.relation_strings();
    let _ = writeln!(text, "relations ({}):", rels.len());
    for r in &rels {
        let _ = writeln!(text, "  {r} = 0");
    }
    if !report.completed_lower_bound.is_empty() {
        let _ = writeln!(text, "added exchanged variables: {}", report.completed_lower_bound.join(", "));
    }
    let _ = writeln!(text, "iterations:");
    for s in &report.steps {
        let _ = write!(
            text,
            "  {}: {} generators, kernel {} gens, J basis {}, saturation {} gens, adopted {}",
            s.iteration,
            s.generator_count,
            s.kernel_generators,
            s.j_basis_size,
            s.saturation_generators,
            s.adopted.len()
        );
        if args.timings {
            let _ = write!(text, " ({} ms)", s.elapsed_ms);
        }
        text.push('\n');
        for (name, expr) in &s.adopted {
            let _ = writeln!(text, "     {name} = {expr}");
        }
    }
    if !report.pruned.is_empty() {
        let _ = writeln!(text, "pruned: {}", report.pruned.join(", "));
    }
    if args.timings {
        let _ = writeln!(text, "total: {} ms", report.total_ms);
    }
    let mut steps = serde_json::to_value(&report.steps).expect("serializable");
    if !args.timings {
        if let Some(arr) = steps.as_array_mut() {
            for s in arr {
                s.as_object_mut().map(|o| o.remove("elapsed_ms"));
            }
        }
    }
    let mut js = json!({
        "status": p.status,
        "certificate": p.certificate,
        "conditional": note.is_some() && !args.assume_totally_coprime,
        "coefficients": p.coefficient_names,
        "generators": p.generator_strings().into_iter().map(|(n, e)| json!({"name": n, "expr": e})).collect::<Vec<_>>(),
        "relations": rels,
        "completed_lower_bound": report.completed_lower_bound,
        "iterations": steps,
        "pruned": report.pruned,
    });
    if args.timings {
        js["total_ms"] = json!(report.total_ms);
    }
    Ok(CommandOutput { text, json: js, exit_code })
}

/// Runs the four checks on a claimed presentation.
pub fn cmd_verify(
    seed: &Seed,
    gens: &GeneratorSet,
    relations: &[String],
    order: &MonomialOrder,
    assume_totally_coprime: bool,
    timings: bool,
) -> Result<CommandOutput> {
    let config = EngineConfig {
        order: order.clone(),
        assume_totally_coprime,
        ..EngineConfig::default()
    };
    let report = verify_paper_presentation(seed, gens, relations, &config)?;
    let certificate = totally_coprime_certificate(seed.matrix());
    let note = conditional_note(certificate, assume_totally_coprime);
    let all = report.all_passed();
    let exit_code = if all && (certificate.is_certified() || assume_totally_coprime) {
        EXIT_OK
    } else {
        EXIT_INCOMPLETE
    };
    let mut text = String::new();
    for (i, (name, c)) in report.checks().iter().enumerate() {
        let _ = write!(
            text,
            "({}) {name}: {} - {}",
            ["i", "ii", "iii", "iv"][i],
            if c.passed { "PASS" } else { "FAIL" },
            c.detail
        );
        if timings {
            let _ = write!(text, " ({} ms)", c.elapsed_ms);
        }
        text.push('\n');
    }
    let _ = writeln!(text, "certificate: {}", certificate.as_str());
    if let Some(note) = note {
        let _ = writeln!(text, "note: {note}");
    }
    let _ = writeln!(text, "result: {}", if all { "verified" } else { "failed" });
    let mut js = serde_json::to_value(&report).expect("serializable");
    if !timings {
        for key in ["substitution", "ideal_equality", "containments", "criterion5"] {
            js[key].as_object_mut().map(|o| o.remove("elapsed_ms"));
        }
    }
    js["certificate"] = json!(certificate);
    js["all_passed"] = json!(all);
    Ok(CommandOutput { text, json: js, exit_code })
}

/// Applies a mutation word and prints the resulting seed.
pub fn cmd_mutate(seed: &Seed, word: &MutationWord) -> Result<CommandOutput> {
    let s = seed.apply_word(word)?;
    let names = s.names();
    let mut text = String::new();
    let _ = writeln!(text, "word: {word}");
    let _ = writeln!(text, "matrix:");
    for line in s.matrix().to_string().lines() {
        let _ = writeln!(text, "  {line}");
    }
    let _ = writeln!(text, "cluster:");
    let mut cluster = Vec::new();
    for (i, x) in s.cluster().iter().enumerate() {
        let expr = x.to_expr_string(names);
        let changed = x != &seed.cluster()[i];
        let label = if changed { format!("{}'", names[i]) } else { names[i].clone() };
        let _ = writeln!(text, "  {label} = {expr}");
        cluster.push(json!({"name": names[i], "expr": expr, "changed": changed}));
    }
    let js = json!({
        "word": word.0.iter().map(|k| k + 1).collect::<Vec<_>>(),
        "matrix": s.matrix().rows(),
        "cluster": cluster,
    });
    Ok(CommandOutput {
        text,
        json: js,
        exit_code: EXIT_OK,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct FuzzReport {
    pub trials: usize,
    pub max_len: usize,
    pub rng_seed: u64,
    pub mutations: usize,
    pub violations: Vec<String>,
}

/// Mutates along random reduced words and counts cluster variables that
/// fail the Laurent certification.
pub fn cmd_laurent_fuzz(seed: &Seed, max_len: usize, trials: usize, rng_seed: u64) -> Result<CommandOutput> {
    if max_len == 0 {
        return Err(Error::Precondition("--max-len must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let m = seed.m();
    let words: Vec<MutationWord> = (0..trials)
        .map(|_| {
            let len = rng.gen_range(1..=max_len);
            let mut w: Vec<usize> = Vec::with_capacity(len);
            while w.len() < len {
                let k = rng.gen_range(0..m);
                if m == 1 || w.last() != Some(&k) {
                    w.push(k);
                }
            }
            MutationWord::new(w)
        })
        .collect();
    let outcomes: Vec<(usize, Option<String>)> = words
        .par_iter()
        .map(|w| {
            let mut s = seed.clone();
            for (step, &k) in w.0.iter().enumerate() {
                match s.mutate(k) {
                    Ok(next) => s = next,
                    Err(Error::LaurentViolation { detail, .. }) => {
                        return Ok((step + 1, Some(format!("{w}: {detail}"))));
                    }
                    Err(e) => return Err(e),
                }
            }
            Ok((w.len(), None))
        })
        .collect::<Result<_>>()?;
    let report = FuzzReport {
        trials,
        max_len,
        rng_seed,
        mutations: outcomes.iter().map(|o| o.0).sum(),
        violations: outcomes.into_iter().filter_map(|o| o.1).collect(),
    };
    let mut text = format!(
        "{} trials, {} mutations, max length {}, rng seed {}\nviolations: {}\n",
        report.trials,
        report.mutations,
        report.max_len,
        report.rng_seed,
        report.violations.len()
    );
    for v in &report.violations {
        let _ = writeln!(text, "  {v}");
    }
    let exit_code = if report.violations.is_empty() { EXIT_OK } else { EXIT_INCOMPLETE };
    Ok(CommandOutput {
        text,
        json: serde_json::to_value(&report).expect("serializable"),
        exit_code,
    })
}
