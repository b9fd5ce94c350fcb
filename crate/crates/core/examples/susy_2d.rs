use pseudomech::models::build_2d;
use pseudomech::supercharge::{build_supercharges_2d, r_symmetry_check, supercharge_algebra_2d};

fn main() -> pseudomech::Result<()> {
    let model = build_2d()?;
    let ctx = &model.context;
    println!("H = {}", model.hamiltonian);
    println!("{} first integrals", model.integrals.len());

    let charges = build_supercharges_2d(ctx)?;
    let alg = supercharge_algebra_2d(&charges, ctx, 1e-12)?;
    for i in 0..2 {
        for j in 0..2 {
            println!("{{Q{}, Qbar{}}} = {}", i + 1, j + 1, alg.anticommutators[i][j]);
        }
    }
    println!("H0 = {}\nH1 = {}", alg.h0, alg.h1);
    println!("{{H1, H}} = {}", ctx.bracket(&alg.h1, &model.hamiltonian)?);

    for (phi, psi) in [(0.3, -1.2), (std::f64::consts::FRAC_PI_2, 0.0)] {
        let r = r_symmetry_check(&charges, phi, psi, ctx, 1e-12)?;
        println!("R-phases ({phi:.3}, {psi:.3}): defect {:.1e}", r.max_defect());
    }
    Ok(())
}
