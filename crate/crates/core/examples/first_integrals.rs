// First integrals from the u(1,1) generators and their bracket algebra.

use pseudomech::models::build_1d;
use pseudomech::symmetry::{closure_check, invariance_defect, u11_generators};

fn main() -> pseudomech::Result<()> {
    let model = build_1d()?;
    let ctx = &model.context;
    let pv = &model.phase_vectors[0];
    for (mu, g) in u11_generators().iter().enumerate() {
        let f = g.first_integral(pv)?;
        let inv = invariance_defect(&g.matrix, pv, &model.hamiltonian, 1e-12)?;
        println!(
            "T{mu}: u(1,1) defect {:.1e}  integral {f}  {{F, H}} = {}  invariance {:.1e}",
            g.unn_defect(),
            ctx.bracket(&f, &model.hamiltonian)?,
            inv.max_abs()
        );
    }
    let z: Vec<_> = (0..4).map(|m| model.integral(&format!("Z{m}")).unwrap().clone()).collect();
    let report = closure_check(&z, ctx)?;
    println!("brackets of Z close on their span: residual {:.1e}", report.max_residual);
    for e in &report.entries {
        let b = ctx.bracket(&z[e.i], &z[e.j])?;
        if !b.is_zero() {
            println!("  {{Z{}, Z{}}} = {b}", e.i, e.j);
        }
    }
    Ok(())
}
