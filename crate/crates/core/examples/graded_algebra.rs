// Grassmann-graded polynomials: sign rules, parity, one-sided derivatives.

use num_complex::Complex64;
use pseudomech::superpoly::{Grade, VarTable};
use pseudomech::SuperPolynomial;

fn main() -> pseudomech::Result<()> {
    let t = VarTable::from_pairs(&[("q", "p", Grade::Even), ("theta", "pi", Grade::Odd)])?;
    let v = |n| SuperPolynomial::var(&t, n);
    let (q, p, theta, pi) = (v("q")?, v("p")?, v("theta")?, v("pi")?);

    println!("theta*pi + pi*theta = {}", &(&theta * &pi) + &(&pi * &theta));
    println!("theta^2             = {}", &theta * &theta);

    let f = &(&q * &theta) + &(&p * &pi);
    println!("f = {f}, parity {:?}", f.parity());
    let mixed = &f + &q;
    println!("f + q has parity {:?}", mixed.parity());

    let g = &(&theta * &pi) * &q;
    println!("g = {g}");
    println!("right d/dtheta g = {}", g.right_derivative_by("theta")?);
    println!("left  d/dtheta g = {}", g.left_derivative_by("theta")?);

    let h = SuperPolynomial::product_of(&t, Complex64::new(0.5, 0.0), &["p", "p"])?;
    println!("basis up to degree 2 has {} monomials; p^2/2 = {h}", SuperPolynomial::monomial_basis(&t, 2).len());
    Ok(())
}
