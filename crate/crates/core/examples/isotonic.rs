use pseudomech::models::build_isotonic;

fn main() -> pseudomech::Result<()> {
    let (model, iso) = build_isotonic(4.0, 2.0, 1.0)?;
    println!("a = {}, b = {}, omega = {}", iso.a(), iso.b(), iso.omega());
    for (r, p) in [(0.5, 0.1), (1.0, -2.0), (3.0, 0.7)] {
        println!(
            "r = {r}, p = {p}: central force {:.6}, isotonic {:.6}",
            iso.central_force_energy(r, p),
            iso.isotonic_energy(r, p)
        );
    }
    println!("lifted H = {}", model.hamiltonian);
    let worst = model.conservation_defects()?.into_iter().map(|(_, d)| d).fold(0.0, f64::max);
    println!("{} integrals, largest bracket with H {worst:.1e}", model.integrals.len() + model.supercharges.len());
    Ok(())
}
