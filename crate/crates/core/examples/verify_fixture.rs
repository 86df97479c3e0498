//! Checks a claimed presentation read from the JSON fixtures.
//!
//! ```bash
//! cargo run --release --example verify_fixture -- b332
//! cargo run --release --example verify_fixture -- dreaded_torus
//! ```

use std::path::PathBuf;

use upper_cluster::cli::{GeneratorFile, RelationsFile, SeedFile};
use upper_cluster::presentation::{verify_paper_presentation, EngineConfig};

fn main() -> upper_cluster::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "b332".into());
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");

    let seed = SeedFile::load(&dir.join(format!("{name}.json")))?.to_seed()?;
    let gens = GeneratorFile::load(&dir.join(format!("{name}_gens.json")))?.to_generator_set(&seed)?;
    let rels = RelationsFile::load(&dir.join(format!("{name}_relations.json")))?;

    let report = verify_paper_presentation(&seed, &gens, &rels.relations, &EngineConfig::default())?;
    for (check, outcome) in report.checks() {
        println!(
            "{check:>15}: {} ({} ms) {}",
            if outcome.passed { "pass" } else { "FAIL" },
            outcome.elapsed_ms,
            outcome.detail
        );
    }
    println!("conditional on total coprimality: {}", report.conditional);
    Ok(())
}
