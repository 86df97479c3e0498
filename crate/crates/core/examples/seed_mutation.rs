//! Seeds, mutation and the diagnostics that decide whether the upper bound is
//! the upper cluster algebra.
//!
//! ```bash
//! cargo run --example seed_mutation
//! ```

use upper_cluster::cluster::{
    rank3_classification, rank3_matrix, totally_coprime_certificate, ExchangeMatrix, MutationWord, Seed,
};

fn main() -> upper_cluster::Result<()> {
    let names: Vec<String> = ["x1", "x2", "x3"].iter().map(|s| s.to_string()).collect();
    let markov = Seed::initial(rank3_matrix(2, 2, 2), names.clone())?;

    let word = MutationWord::parse_one_based("1 2 3 1", 3)?;
    let s = markov.apply_word(&word)?;
    println!("after {word}:");
    println!("{}", s.matrix());
    for (name, x) in names.iter().zip(s.cluster()) {
        println!("  {name} -> {}", x.to_expr_string(&names));
    }

    // Mutation is an involution on matrices and on seeds.
    let back = s.apply_word(&MutationWord::parse_one_based("1 3 2 1", 3)?)?;
    assert_eq!(back.cluster(), markov.cluster());

    // A non-square exchange matrix with one frozen row.
    let b = ExchangeMatrix::new(vec![vec![0, 3], vec![-3, 0], vec![2, -5]])?;
    println!(
        "acyclic {}, coprime {}, rank {}, certificate {}",
        b.is_acyclic(),
        b.is_coprime(),
        b.rank(),
        totally_coprime_certificate(&b).as_str()
    );

    for (a, bb, c) in [(2, 2, 2), (3, 3, 2), (2, 2, 1), (5, 1, 5)] {
        println!("({a},{bb},{c}): {:?}", rank3_classification(a, bb, c));
    }
    Ok(())
}
