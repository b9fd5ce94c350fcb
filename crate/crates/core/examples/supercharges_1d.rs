use num_complex::Complex64;
use pseudomech::models::build_1d;
use pseudomech::supercharge::{build_supercharges_1d, nilpotency_defects, susy_transform_table};

fn main() -> pseudomech::Result<()> {
    let model = build_1d()?;
    let ctx = &model.context;
    let pair = build_supercharges_1d(ctx, Complex64::new(2f64.sqrt(), 0.0), Complex64::default())?;
    println!("Q = {}\nQbar = {}", pair.q, pair.qbar);

    let nil = nilpotency_defects(&pair.q, &pair.qbar, ctx, 3)?;
    println!("nilpotency defect {:.1e}", nil.max_defect());
    let qq = ctx.bracket(&pair.q, &pair.qbar)?.scale(Complex64::new(0.0, 0.5));
    println!("(i/2){{Q, Qbar}} = {qq}   H = {}", model.hamiltonian);

    println!("{:>6} | {:>12} | {:>12}", "v", "{v, Q}", "{v, Qbar}");
    for row in susy_transform_table(&pair.q, &pair.qbar, ctx)? {
        println!("{:>6} | {:>12} | {:>12}", row.variable, row.with_q.to_string(), row.with_qbar.to_string());
    }

    match build_supercharges_1d(ctx, Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0)) {
        Err(e) => println!("alpha = 1, beta = i: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
