//! Finds a presentation of the Markov upper cluster algebra starting from the
//! lower bound, adopting new generators until the saturation test passes.
//!
//! ```bash
//! cargo run --release --example present_markov -- 3
//! ```

use upper_cluster::cluster::{rank3_matrix, Seed};
use upper_cluster::presentation::{iterate_default, GeneratorSet};

fn main() -> upper_cluster::Result<()> {
    let a: i64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let names: Vec<String> = ["x1", "x2", "x3"].iter().map(|s| s.to_string()).collect();
    let seed = Seed::initial(rank3_matrix(a, a, a), names)?;

    let initial = GeneratorSet::lower_bound(&seed)?;
    println!("starting from {} generators: {:?}", initial.len() + 3, initial.names());
    let (p, report) = iterate_default(&seed, &initial, 8)?;

    for step in &report.steps {
        println!(
            "iteration {}: {} generators, J basis {}, adopted {:?}",
            step.iteration, step.generator_count, step.j_basis_size, step.adopted
        );
    }
    println!("pruned {:?}", report.pruned);
    println!("status: {}", p.status.as_str());
    for (name, expr) in p.generator_strings() {
        println!("  {name} = {expr}");
    }
    for r in p.relation_strings() {
        println!("  {r} = 0");
    }
    Ok(())
}
