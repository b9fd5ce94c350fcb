//! Monomials `c X^a P^b` with rational exponents on one bosonic pair.
//!
//! Exponents are manipulated formally; fractional powers of phase-space
//! variables are never evaluated numerically.

use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::bracket::BracketContext;
use crate::error::{Error, Result};
use crate::superpoly::{Monomial, SuperPolynomial};

#[derive(Debug, Clone, PartialEq)]
pub struct PowerMonomial {
    pub coefficient: Complex64,
    /// Which bosonic pair the monomial lives on.
    pub pair: usize,
    pub x_exp: Rational64,
    pub p_exp: Rational64,
}

impl PowerMonomial {
    pub fn new(coefficient: Complex64, pair: usize, x_exp: Rational64, p_exp: Rational64) -> Self {
        PowerMonomial { coefficient, pair, x_exp, p_exp }
    }

    pub fn x(pair: usize) -> Self {
        Self::new(Complex64::new(1.0, 0.0), pair, Rational64::one(), Rational64::zero())
    }

    pub fn p(pair: usize) -> Self {
        Self::new(Complex64::new(1.0, 0.0), pair, Rational64::zero(), Rational64::one())
    }

    pub fn is_zero(&self) -> bool {
        self.coefficient.norm() == 0.0
    }

    /// Product on the same pair; `None` across pairs, where the product is not
    /// a single power monomial.
    pub fn mul(&self, other: &Self) -> Option<Self> {
        (self.pair == other.pair).then(|| {
            Self::new(self.coefficient * other.coefficient, self.pair, self.x_exp + other.x_exp, self.p_exp + other.p_exp)
        })
    }

    /// `{X^a P^b, X^c P^d} = (ad - bc) X^(a+c-1) P^(b+d-1)`; zero across pairs.
    pub fn bracket(&self, other: &Self) -> Self {
        if self.pair != other.pair {
            return Self::new(Complex64::default(), self.pair, Rational64::zero(), Rational64::zero());
        }
        let k = self.x_exp * other.p_exp - self.p_exp * other.x_exp;
        let k = k.to_f64().expect("finite rational");
        Self::new(
            self.coefficient * other.coefficient * k,
            self.pair,
            self.x_exp + other.x_exp - Rational64::one(),
            self.p_exp + other.p_exp - Rational64::one(),
        )
    }

    /// Coefficient distance to `other`, or infinity when a nonzero
    /// coefficient sits on different exponents.
    pub fn distance(&self, other: &Self) -> f64 {
        if self.is_zero() && other.is_zero() {
            return 0.0;
        }
        if self.pair == other.pair && self.x_exp == other.x_exp && self.p_exp == other.p_exp {
            return (self.coefficient - other.coefficient).norm();
        }
        if self.is_zero() {
            return other.coefficient.norm();
        }
        if other.is_zero() {
            return self.coefficient.norm();
        }
        f64::INFINITY
    }

    /// Ordinary polynomial when both exponents are nonnegative integers.
    pub fn to_superpoly(&self, ctx: &BracketContext, x: &str, p: &str) -> Result<SuperPolynomial> {
        let int = |r: Rational64| -> Option<u32> {
            (r.is_integer() && !r.is_negative()).then(|| r.to_integer() as u32)
        };
        let (a, b) = match (int(self.x_exp), int(self.p_exp)) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(Error::InvalidArgument("exponents are not nonnegative integers".into())),
        };
        let t = ctx.table();
        let mut exps = vec![0u32; t.len()];
        exps[t.index_of(x)?] = a;
        exps[t.index_of(p)?] = b;
        Ok(SuperPolynomial::from_term(t, Monomial::from_exponents(exps), self.coefficient))
    }
}

fn rational(v: f64) -> Result<Rational64> {
    Rational64::approximate_float(v)
        .filter(|r| (r.to_f64().unwrap_or(f64::NAN) - v).abs() <= 1e-12 * v.abs().max(1.0))
        .ok_or_else(|| Error::InvalidArgument(format!("{v} has no rational representation")))
}

/// `Xt = sqrt(w) X^((1+1/w)/2) P^((1-1/w)/2)`, `Pt = sqrt(w) X^((1-1/w)/2) P^((1+1/w)/2)`.
pub fn isotropizing_pair(w: f64, pair: usize) -> Result<(PowerMonomial, PowerMonomial)> {
    if w.is_nan() || w <= 0.0 {
        return Err(Error::InvalidArgument(format!("frequency must be positive, got {w}")));
    }
    let inv = Rational64::one() / rational(w)?;
    let half = Rational64::new(1, 2);
    let plus = half * (Rational64::one() + inv);
    let minus = half * (Rational64::one() - inv);
    let k = Complex64::new(w.sqrt(), 0.0);
    Ok((PowerMonomial::new(k, pair, plus, minus), PowerMonomial::new(k, pair, minus, plus)))
}

/// The second supersymmetrization scheme for the two-frequency oscillator:
/// the anisotropic bosonic Hamiltonian `i(a P1 X1 + b P2 X2)` becomes
/// isotropic in the tilde variables.
#[derive(Debug, Clone, PartialEq)]
pub struct PuScheme2 {
    pub a: f64,
    pub b: f64,
    pub x_tilde: [PowerMonomial; 2],
    pub p_tilde: [PowerMonomial; 2],
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PowerCheck {
    pub name: String,
    pub defect: f64,
}

impl PuScheme2 {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        let (x1, p1) = isotropizing_pair(a, 0)?;
        let (x2, p2) = isotropizing_pair(b, 1)?;
        Ok(PuScheme2 { a, b, x_tilde: [x1, x2], p_tilde: [p1, p2] })
    }

    /// Canonical brackets among the tilde variables and `Pt_k Xt_k = w_k P_k X_k`.
    pub fn checks(&self) -> Vec<PowerCheck> {
        let one = |pair| PowerMonomial::new(Complex64::new(1.0, 0.0), pair, Rational64::zero(), Rational64::zero());
        let zero = |pair| PowerMonomial::new(Complex64::default(), pair, Rational64::zero(), Rational64::zero());
        let mut out = Vec::new();
        let mut push = |name: String, d: f64| out.push(PowerCheck { name, defect: d });
        let w = [self.a, self.b];
        for (i, wi) in w.iter().enumerate() {
            for j in 0..2 {
                let (n, m) = (i + 1, j + 1);
                let want = if i == j { one(i) } else { zero(i) };
                push(format!("{{Xt{n},Pt{m}}}"), self.x_tilde[i].bracket(&self.p_tilde[j]).distance(&want));
                push(format!("{{Xt{n},Xt{m}}}"), self.x_tilde[i].bracket(&self.x_tilde[j]).distance(&zero(i)));
                push(format!("{{Pt{n},Pt{m}}}"), self.p_tilde[i].bracket(&self.p_tilde[j]).distance(&zero(i)));
            }
            let prod = self.p_tilde[i].mul(&self.x_tilde[i]).expect("same pair");
            let want = PowerMonomial::new(Complex64::new(*wi, 0.0), i, Rational64::one(), Rational64::one());
            push(format!("Pt{0}*Xt{0} = w{0}*P{0}*X{0}", i + 1), prod.distance(&want));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_frequency_is_identity() {
        let (x, p) = isotropizing_pair(1.0, 0).unwrap();
        assert_eq!(x.distance(&PowerMonomial::x(0)), 0.0);
        assert_eq!(p.distance(&PowerMonomial::p(0)), 0.0);
    }

    #[test]
    fn scheme_two_at_three() {
        let s = PuScheme2::new(3.0, 0.5).unwrap();
        for c in s.checks() {
            assert!(c.defect < 1e-12, "{c:?}");
        }
        assert_eq!(s.x_tilde[0].x_exp, Rational64::new(2, 3));
        assert_eq!(s.x_tilde[0].p_exp, Rational64::new(1, 3));
    }

    #[test]
    fn nonpositive_frequency_rejected() {
        assert!(PuScheme2::new(0.0, 1.0).is_err());
        assert!(PuScheme2::new(1.0, -2.0).is_err());
    }
}
