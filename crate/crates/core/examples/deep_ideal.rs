//! Whether the lower deep ideal generates the unit ideal in a presented ring,
//! widening by neighbouring clusters when it does not.
//!
//! ```bash
//! cargo run --release --example deep_ideal
//! ```

use std::path::PathBuf;

use upper_cluster::cli::{GeneratorFile, SeedFile};
use upper_cluster::presentation::{build_presentation, deep_ideal_triviality, reduced_words};

fn main() -> upper_cluster::Result<()> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    for name in ["dreaded_torus", "markov2"] {
        let seed = SeedFile::load(&dir.join(format!("{name}.json")))?.to_seed()?;
        let gens = GeneratorFile::load(&dir.join(format!("{name}_gens.json")))?.to_generator_set(&seed)?;
        let pr = build_presentation(&seed, &gens)?;

        let alone = deep_ideal_triviality(&pr, &seed, &[])?;
        println!("{name}, D_x alone: {alone:?}");
        let widened = deep_ideal_triviality(&pr, &seed, &reduced_words(seed.m(), 1))?;
        println!("{name}, widened by one mutation: {widened:?}");
    }
    Ok(())
}
