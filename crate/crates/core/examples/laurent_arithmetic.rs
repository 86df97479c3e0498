//! Parsing, printing and exact arithmetic on Laurent polynomials.
//!
//! ```bash
//! cargo run --example laurent_arithmetic
//! ```

use upper_cluster::arith::{fraction_is_laurent, substitute, Fraction};
use upper_cluster::cli::parse_expression;

fn main() -> upper_cluster::Result<()> {
    let names: Vec<String> = ["x1", "x2", "x3"].iter().map(|s| s.to_string()).collect();

    let m = parse_expression("(x1^2+x2^2+x3^2)*x1^-1*x2^-1*x3^-1", &names)?;
    println!("M        = {}", m.to_expr_string(&names));
    println!("M^2      = {}", m.pow(2)?.to_expr_string(&names));
    println!("M * x1x2 = {}", (&m * &parse_expression("x1*x2", &names)?).to_expr_string(&names));

    // Substituting x1 -> (x2^2 + x3^2)/x1 gives a rational function; it is
    // Laurent again.
    let x1p = parse_expression("(x2^2+x3^2)*x1^-1", &names)?;
    let images = vec![x1p.to_fraction(), Fraction::var(3, 1), Fraction::var(3, 2)];
    let m_after = substitute(&m, &images)?;
    println!(
        "M(x1', x2, x3) = ({}) / ({})",
        m_after.numerator().to_expr_string(&names),
        m_after.denominator().to_expr_string(&names)
    );
    let as_laurent = fraction_is_laurent(&m_after, &[0, 1, 2])?;
    println!("               = {}", as_laurent.to_expr_string(&names));

    // Numerator and denominator never share a monomial factor.
    let q = parse_expression("(x1^3*x2 + x1*x2^2)*x1^-2*x2^-1", &names)?;
    println!("normalized: {}", q.to_expr_string(&names));
    println!("is polynomial: {}", q.is_polynomial());

    // 1/x1' is not Laurent in x1, x2, x3.
    let inv = Fraction::new(
        upper_cluster::arith::Polynomial::monomial(x1p.denominator().clone()),
        x1p.numerator().clone(),
    )?;
    println!("1/x1' Laurent: {}", fraction_is_laurent(&inv, &[0, 1, 2]).is_ok());
    Ok(())
}
