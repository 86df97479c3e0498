//! Deciding whether a Laurent polynomial lies in the algebra generated by a
//! finite list, with an explicit polynomial witness.
//!
//! ```bash
//! cargo run --example subalgebra_membership
//! ```

use upper_cluster::cli::parse_expression;
use upper_cluster::groebner::{GbOptions, SubalgebraMembership};

fn main() -> upper_cluster::Result<()> {
    let names: Vec<String> = ["x1", "x2", "x3"].iter().map(|s| s.to_string()).collect();
    let l = |s: &str| parse_expression(s, &names);

    // Markov generators x1, x2, x3, M.
    let gens = vec![
        l("x1")?,
        l("x2")?,
        l("x3")?,
        l("(x1^2+x2^2+x3^2)*x1^-1*x2^-1*x3^-1")?,
    ];
    let test = SubalgebraMembership::new(&gens, &[], &GbOptions::default())?;
    let tags: Vec<String> = ["t1", "t2", "t3", "tM"].iter().map(|s| s.to_string()).collect();

    for target in ["(x2^2+x3^2)*x1^-1", "(x1^2+x3^2)*x2^-1", "x1^-1", "x1*x2*x3*(x1^2+x2^2+x3^2)*x1^-1*x2^-1*x3^-1"] {
        match test.test(&l(target)?)? {
            Some(w) => println!("{target} = {}", w.to_expr_string(&tags)),
            None => println!("{target} is not in the algebra"),
        }
    }
    Ok(())
}
