use pseudomech::suite::{run_suite, Config, ModelKind, Status, SuiteKind};

fn main() -> pseudomech::Result<()> {
    let cfg = Config::parse("tol = 1e-12\nmu1 = 5\nmu2 = 2\nrho = 1\n")?;
    for model in ["1d", "2d", "pu1", "nn2"] {
        let report = run_suite(model.parse::<ModelKind>()?, SuiteKind::All, &cfg)?;
        let failed: Vec<&str> =
            report.checks.iter().filter(|c| c.status != Status::Pass).map(|c| c.name.as_str()).collect();
        println!("{model}: {} checks, exit code {}", report.checks.len(), report.exit_code());
        for name in failed {
            println!("  not passing: {name}");
        }
    }
    let report = run_suite(ModelKind::OneD, SuiteKind::Nambu, &cfg)?;
    println!("{}", &report.to_json()[..300]);
    Ok(())
}
