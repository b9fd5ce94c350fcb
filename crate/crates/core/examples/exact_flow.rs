// Exact time evolution of the linear Hamiltonian flow.

use pseudomech::dynamics::{conservation_over_time, linearize, substitute};
use pseudomech::models::build_1d;

fn main() -> pseudomech::Result<()> {
    let model = build_1d()?;
    let ctx = &model.context;
    let l = linearize(&model.hamiltonian, ctx)?;
    println!("generator diagonal: {}", l.is_diagonal());

    let real = model.real.as_ref().unwrap();
    let q = real.context.var("q")?;
    for t in [0.0, 0.5, std::f64::consts::FRAC_PI_2, std::f64::consts::PI] {
        let flow = l.flow_map(t)?;
        let qt = real.to_real(&substitute(&real.to_complex(&q)?, &flow)?)?;
        println!("q({t:.4}) = {}", qt.chop(1e-13));
    }

    let grid: Vec<f64> = (0..63).map(|k| 0.1 * k as f64).collect();
    for name in ["Z1", "Q"] {
        println!("{name} drift over the grid: {:.1e}", conservation_over_time(model.integral(name)?, &l, &grid)?);
    }
    Ok(())
}
