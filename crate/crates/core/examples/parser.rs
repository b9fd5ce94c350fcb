use pseudomech::expr::{parse, parse_poly};
use pseudomech::models::{table_1d, table_1d_real};

fn main() -> pseudomech::Result<()> {
    let real = table_1d_real();
    for src in ["0.5*(p^2 + q^2) + i*pi*theta", "-(q - 2*p)^3", "theta*pi*q + pi*theta*q", "2*PI*q - -p"] {
        let e = parse(src)?;
        println!("{src:<28} => {e:<28} => {}", e.to_poly(&real)?);
    }
    let complex = table_1d();
    println!("{}", parse_poly("i*(P*X + pi*theta)", &complex)?);
    for bad in ["theta^2", "q +", "Y*q"] {
        match parse_poly(bad, &real) {
            Err(e) => println!("{bad:<10} {e}"),
            Ok(p) => println!("{bad:<10} unexpectedly parsed to {p}"),
        }
    }
    Ok(())
}
