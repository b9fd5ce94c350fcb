// The generalized Poisson bracket on the one-dimensional oscillator, in the
// real and complex bases.

use pseudomech::models::build_1d;

fn main() -> pseudomech::Result<()> {
    let model = build_1d()?;
    let real = model.real.as_ref().expect("1d has a real basis");

    for (label, ctx) in [("real", &real.context), ("complex", &model.context)] {
        println!("{label} basis");
        let vars = ctx.variables();
        for a in &vars {
            let row: Vec<String> = vars.iter().map(|b| format!("{:>4}", ctx.bracket(a, b).unwrap().to_string())).collect();
            println!("  {{{a:>5}, .}} {}", row.join(" "));
        }
        println!("  canonical defect {:.1e}", ctx.canonical_table_defect(&vars)?);
    }

    let ctx = &model.context;
    println!("H = {}", model.hamiltonian);
    for v in ["X", "P", "theta", "pi"] {
        println!("d{v}/dt = {}", ctx.time_derivative(&ctx.var(v)?, &model.hamiltonian)?);
    }
    println!("H in the real basis: {}", real.hamiltonian);

    let (f, g, h) = (ctx.var("X")?, model.integral("Q")?, model.integral("Z2")?);
    println!("Jacobi defect on (X, Q, Z2): {:.1e}", ctx.jacobi_defect(&f, g, h)?.max_abs());
    Ok(())
}
