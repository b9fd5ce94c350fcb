// Two supersymmetrizations of a coupled (Pais-Uhlenbeck type) oscillator.

use pseudomech::models::{build_pu_scheme1, build_pu_scheme2, diagonalize_pu, verify_canonical};

fn main() -> pseudomech::Result<()> {
    let (mu1, mu2, rho) = (5.0, 2.0, 1.0);
    let d = diagonalize_pu(mu1, mu2, rho)?;
    println!("a = {:.6}, b = {:.6}, angle = {:.6}, reconstruction {:.1e}", d.a, d.b, d.angle, d.reconstruction_error);

    let (model, _) = build_pu_scheme1(mu1, mu2, rho)?;
    let real = model.real.as_ref().unwrap();
    println!("real H    = {}", real.hamiltonian);
    println!("complex H = {}", model.hamiltonian);
    for (name, map) in &model.maps {
        println!("map {name}: canonical defect {:.1e}", verify_canonical(map, 1e-12)?.max_defect);
    }
    for (name, d) in model.conservation_defects()? {
        println!("  {{{name}, H}} -> {d:.1e}");
    }

    let (_, scheme) = build_pu_scheme2(3.0, 0.5)?;
    for (i, (x, p)) in scheme.x_tilde.iter().zip(&scheme.p_tilde).enumerate() {
        println!("Xt{0} ~ X^{1} P^{2}, Pt{0} ~ X^{3} P^{4}", i + 1, x.x_exp, x.p_exp, p.x_exp, p.p_exp);
    }
    for c in scheme.checks() {
        println!("  {:<24} {:.1e}", c.name, c.defect);
    }

    match diagonalize_pu(1.0, 1.0, 2.0) {
        Err(e) => println!("mu1 = mu2 = 1, rho = 2: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
