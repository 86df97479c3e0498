//! Groebner bases, ideal membership, elimination and saturation.
//!
//! ```bash
//! cargo run --example groebner_saturation
//! ```

use upper_cluster::cli::parse_polynomial;
use upper_cluster::groebner::{
    eliminate, ideal_equality, ideal_membership, saturate_element, saturate_ideal, GroebnerIdeal, MonomialOrder,
};

fn main() -> upper_cluster::Result<()> {
    let names: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
    let p = |s: &str| parse_polynomial(s, &names);

    // Twisted cubic.
    let cubic = GroebnerIdeal::new(3, vec![p("y - x^2")?, p("z - x^3")?])?;
    for order in [MonomialOrder::DegRevLex, MonomialOrder::Lex] {
        println!("{order:?} basis:");
        for g in cubic.basis(&order)?.iter() {
            println!("  {}", g.to_expr_string(&names));
        }
    }
    println!("x*z - y^2 in I: {}", ideal_membership(&p("x*z - y^2")?, &cubic)?);

    // Eliminating x leaves the implicit equation in y, z.
    let elim = eliminate(&cubic, &[0])?;
    for g in elim.generators() {
        println!("eliminated: {}", g.to_expr_string(&names));
    }

    // (x*y, x*z) : x^inf = (y, z)
    let i = GroebnerIdeal::new(3, vec![p("x*y")?, p("x*z")?])?;
    let sat = saturate_element(&i, &p("x")?)?;
    let yz = GroebnerIdeal::new(3, vec![p("y")?, p("z")?])?;
    println!("(xy, xz) : x^inf = (y, z): {}", ideal_equality(&sat, &yz)?);

    // Saturating by an ideal: (x) : (x, y)^inf stays (x).
    let ix = GroebnerIdeal::new(3, vec![p("x")?])?;
    let by = GroebnerIdeal::new(3, vec![p("x")?, p("y")?])?;
    println!(
        "(x) : (x, y)^inf = (x): {}",
        ideal_equality(&saturate_ideal(&ix, &by)?, &ix)?
    );
    Ok(())
}
