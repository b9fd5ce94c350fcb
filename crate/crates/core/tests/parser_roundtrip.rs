mod common;

use pseudomech::expr::{parse, parse_poly};
use pseudomech::models::table_1d_real;
use rand::rngs::StdRng;
use rand::SeedableRng;

#[test]
fn print_parse_print_is_fixed_point() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..500 {
        let e = common::rand_expr(&mut rng, 5);
        let printed = e.to_string();
        let back = parse(&printed).unwrap_or_else(|err| panic!("{printed}: {err}"));
        assert_eq!(back, e, "{printed}");
        assert_eq!(back.to_string(), printed);
    }
}

#[test]
fn precedence_and_associativity() {
    let t = table_1d_real();
    let a = parse_poly("q - p - q", &t).unwrap();
    assert_eq!(a, parse_poly("-p", &t).unwrap());
    let b = parse_poly("-q^2", &t).unwrap();
    assert_eq!(b, parse_poly("-(q*q)", &t).unwrap());
    let c = parse_poly("2*q + 3*q*p", &t).unwrap();
    assert_eq!(c, parse_poly("q*(2 + 3*p)", &t).unwrap());
}

#[test]
fn odd_factor_order_sets_sign() {
    let t = table_1d_real();
    let a = parse_poly("theta*pi", &t).unwrap();
    let b = parse_poly("pi*theta", &t).unwrap();
    assert_eq!(a, b.scale_real(-1.0));
    assert!(parse_poly("(theta + q)^2", &t).is_ok());
    assert!(parse_poly("pi^3", &t).is_err());
}
