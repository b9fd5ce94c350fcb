// The Nambu 4-bracket {F, Z0, Z3, Z1} on the one-dimensional model,
// compared against the Poisson time derivative without dividing by Z2.

use pseudomech::models::build_1d;
use pseudomech::nambu::{exact_quotient, graded_jacobian, nambu_defect, Quotient};
use pseudomech::suite::default_nambu_spec;
use pseudomech::SuperPolynomial;

fn main() -> pseudomech::Result<()> {
    let model = build_1d()?;
    let ctx = &model.context;
    let h = &model.hamiltonian;
    let spec = default_nambu_spec(&model)?;
    println!("divisor Z2 = {}, normalization {}", spec.divisor, spec.normalization);

    for v in ["P", "X", "theta", "pi"] {
        let f = ctx.var(v)?;
        let j = graded_jacobian(&f, &spec, ctx)?;
        println!("J({v}) = {j}   d{v}/dt = {}", ctx.time_derivative(&f, h)?);
    }

    let j = graded_jacobian(&ctx.var("P")?, &spec, ctx)?;
    if let Quotient::Exact(r) = exact_quotient(&j, &spec.divisor.scale_real(-2.0), 1e-12)? {
        println!("J(P) = R * (-2 Z2) with R = {r}");
    }

    let worst = SuperPolynomial::monomial_basis(ctx.table(), 2)
        .iter()
        .map(|f| nambu_defect(f, h, &spec, ctx).map(|d| d.max_abs()))
        .collect::<pseudomech::Result<Vec<_>>>()?
        .into_iter()
        .fold(0.0, f64::max);
    println!("largest defect over the degree <= 2 basis: {worst:.1e}");
    Ok(())
}
