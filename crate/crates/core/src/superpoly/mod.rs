//! Graded polynomial algebra over commuting and anticommuting variables.
//!
//! A [`SuperPolynomial`] is a sparse map from canonical [`Monomial`]s to
//! complex coefficients. Odd variables square to zero and anticommute; every
//! sign in the algebra comes from counting transpositions of odd factors.

mod monomial;
mod vartable;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

pub use monomial::Monomial;
pub use vartable::{Grade, Role, VarEntry, VarTable};

/// Coefficients with magnitude below this are dropped after every operation.
pub const PRUNE_THRESHOLD: f64 = 1e-14;

/// Default tolerance for near-zero identity checks.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Parity classification of a whole polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Parity {
    Even,
    Odd,
    Mixed,
}

impl Parity {
    pub fn grade(self) -> Option<Grade> {
        match self {
            Parity::Even => Some(Grade::Even),
            Parity::Odd => Some(Grade::Odd),
            Parity::Mixed => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuperPolynomial {
    table: Arc<VarTable>,
    terms: BTreeMap<Monomial, Complex64>,
}

fn same_table(a: &Arc<VarTable>, b: &Arc<VarTable>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl SuperPolynomial {
    pub fn zero(table: &Arc<VarTable>) -> Self {
        SuperPolynomial { table: Arc::clone(table), terms: BTreeMap::new() }
    }

    pub fn constant(table: &Arc<VarTable>, c: Complex64) -> Self {
        let mut p = Self::zero(table);
        p.add_term(Monomial::one(table.len()), c);
        p
    }

    pub fn one(table: &Arc<VarTable>) -> Self {
        Self::constant(table, Complex64::new(1.0, 0.0))
    }

    /// The polynomial consisting of the single variable at `idx`.
    pub fn var_at(table: &Arc<VarTable>, idx: usize) -> Self {
        let mut p = Self::zero(table);
        p.add_term(Monomial::var(table.len(), idx), Complex64::new(1.0, 0.0));
        p
    }

    pub fn var(table: &Arc<VarTable>, name: &str) -> Result<Self> {
        Ok(Self::var_at(table, table.index_of(name)?))
    }

    /// Single term `c * m`; `m` must already be canonical.
    pub fn from_term(table: &Arc<VarTable>, m: Monomial, c: Complex64) -> Self {
        let mut p = Self::zero(table);
        p.add_term(m, c);
        p
    }

    /// Product of the named variables in the order given, with coefficient `c`.
    /// The transposition sign of the odd factors is folded into the coefficient.
    pub fn product_of(table: &Arc<VarTable>, c: Complex64, names: &[&str]) -> Result<Self> {
        let mut acc = Self::constant(table, c);
        for n in names {
            acc = acc.try_mul(&Self::var(table, n)?)?;
        }
        Ok(acc)
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Complex64)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Complex64 {
        self.terms.get(m).copied().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest coefficient magnitude, 0 for the zero polynomial.
    pub fn max_abs(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Drop coefficient parts (real or imaginary) smaller than `tol`.
    pub fn chop(&self, tol: f64) -> Self {
        let clean = |x: f64| if x.abs() < tol { 0.0 } else { x };
        let mut out = Self::zero(&self.table);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), Complex64::new(clean(c.re), clean(c.im)));
        }
        out.terms.retain(|_, c| *c != Complex64::default());
        out
    }

    pub fn is_zero_within(&self, tol: f64) -> bool {
        self.max_abs() < tol
    }

    pub fn max_total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    fn add_term(&mut self, m: Monomial, c: Complex64) {
        let entry = self.terms.entry(m).or_default();
        *entry += c;
    }

    fn prune(mut self) -> Self {
        self.terms.retain(|_, c| c.norm() >= PRUNE_THRESHOLD);
        self
    }

    fn check_table(&self, other: &Self) -> Result<()> {
        if same_table(&self.table, &other.table) {
            Ok(())
        } else {
            Err(Error::TableMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_table(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), *c);
        }
        Ok(out.prune())
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_table(other)?;
        let mut out = Self::zero(&self.table);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((m, sign)) = ma.mul(mb, &self.table) {
                    out.add_term(m, ca * cb * sign);
                }
            }
        }
        Ok(out.prune())
    }

    pub fn scale(&self, c: Complex64) -> Self {
        let terms = self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect();
        SuperPolynomial { table: Arc::clone(&self.table), terms }.prune()
    }

    pub fn scale_real(&self, c: f64) -> Self {
        self.scale(Complex64::new(c, 0.0))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.table);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Coefficient-wise complex conjugate (variables untouched).
    pub fn conj_coefficients(&self) -> Self {
        let terms = self.terms.iter().map(|(m, v)| (m.clone(), v.conj())).collect();
        SuperPolynomial { table: Arc::clone(&self.table), terms }
    }

    pub fn parity(&self) -> Parity {
        let mut has_even = false;
        let mut has_odd = false;
        for m in self.terms.keys() {
            match m.grade(&self.table) {
                Grade::Even => has_even = true,
                Grade::Odd => has_odd = true,
            }
        }
        match (has_even, has_odd) {
            (_, false) => Parity::Even,
            (false, true) => Parity::Odd,
            (true, true) => Parity::Mixed,
        }
    }

    /// Terms of the given grade only.
    pub fn part(&self, grade: Grade) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.grade(&self.table) == grade)
            .map(|(m, c)| (m.clone(), *c))
            .collect();
        SuperPolynomial { table: Arc::clone(&self.table), terms }
    }

    /// Split into `(grade, part)` homogeneous components, skipping empty ones.
    /// The zero polynomial yields a single even component.
    pub fn homogeneous_parts(&self) -> Vec<(Grade, Self)> {
        let parts: Vec<_> = [Grade::Even, Grade::Odd]
            .into_iter()
            .map(|g| (g, self.part(g)))
            .filter(|(_, p)| !p.is_zero())
            .collect();
        if parts.is_empty() {
            vec![(Grade::Even, self.clone())]
        } else {
            parts
        }
    }

    fn derivative(&self, idx: usize, right: bool) -> Self {
        let mut out = Self::zero(&self.table);
        for (m, c) in &self.terms {
            if let Some((dm, f)) = m.differentiate(idx, right, &self.table) {
                out.add_term(dm, c * f);
            }
        }
        out.prune()
    }

    /// Derivative with the variable first moved to the right end of each monomial.
    pub fn right_derivative(&self, idx: usize) -> Self {
        self.derivative(idx, true)
    }

    /// Derivative with the variable first moved to the left end of each monomial.
    pub fn left_derivative(&self, idx: usize) -> Self {
        self.derivative(idx, false)
    }

    pub fn right_derivative_by(&self, name: &str) -> Result<Self> {
        Ok(self.right_derivative(self.table.index_of(name)?))
    }

    pub fn left_derivative_by(&self, name: &str) -> Result<Self> {
        Ok(self.left_derivative(self.table.index_of(name)?))
    }

    /// Every monomial of total degree `<= max_deg` (coefficient 1), constants included.
    pub fn monomial_basis(table: &Arc<VarTable>, max_deg: u32) -> Vec<Self> {
        fn rec(table: &VarTable, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if i == table.len() {
                out.push(cur.clone());
                return;
            }
            let cap = if table.grade(i) == Grade::Odd { left.min(1) } else { left };
            for e in 0..=cap {
                cur[i] = e;
                rec(table, i + 1, left - e, cur, out);
            }
            cur[i] = 0;
        }
        let mut exps = Vec::new();
        rec(table, 0, max_deg, &mut vec![0; table.len()], &mut exps);
        exps.into_iter()
            .map(|e| Self::from_term(table, Monomial::from_exponents(e), Complex64::new(1.0, 0.0)))
            .collect()
    }

    /// Rebuild over another table with identical layout (e.g. after a rename).
    pub fn with_table(&self, table: &Arc<VarTable>) -> Result<Self> {
        if table.len() != self.table.len()
            || (0..table.len()).any(|i| table.grade(i) != self.table.grade(i))
        {
            return Err(Error::TableMismatch);
        }
        Ok(SuperPolynomial { table: Arc::clone(table), terms: self.terms.clone() })
    }
}

impl Add for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn add(self, rhs: &SuperPolynomial) -> SuperPolynomial {
        self.try_add(rhs).expect("polynomial addition over mismatched tables")
    }
}

impl Sub for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn sub(self, rhs: &SuperPolynomial) -> SuperPolynomial {
        self.try_sub(rhs).expect("polynomial subtraction over mismatched tables")
    }
}

impl Mul for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn mul(self, rhs: &SuperPolynomial) -> SuperPolynomial {
        self.try_mul(rhs).expect("polynomial product over mismatched tables")
    }
}

impl Neg for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn neg(self) -> SuperPolynomial {
        self.scale_real(-1.0)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for SuperPolynomial {
            type Output = SuperPolynomial;
            fn $f(self, rhs: SuperPolynomial) -> SuperPolynomial {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Render a real number without a trailing `.0` for integers.
pub(crate) fn fmt_real(x: f64) -> String {
    if x.fract() == 0.0 && x.abs() < 1e15 {
        format!("{}", x as i64)
    } else {
        format!("{x}")
    }
}

/// Format a coefficient so that the output is accepted by the expression parser.
pub(crate) fn fmt_coeff(c: Complex64) -> String {
    match (c.re == 0.0, c.im == 0.0) {
        (_, true) => fmt_real(c.re),
        (true, false) => {
            if c.im == 1.0 {
                "i".to_string()
            } else if c.im == -1.0 {
                "-i".to_string()
            } else {
                format!("{}*i", fmt_real(c.im))
            }
        }
        (false, false) => {
            let sign = if c.im < 0.0 { '-' } else { '+' };
            format!("({} {} {}*i)", fmt_real(c.re), sign, fmt_real(c.im.abs()))
        }
    }
}

impl fmt::Display for SuperPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let table = &self.table;
        for (n, (m, c)) in self.terms.iter().enumerate() {
            let mut factors = Vec::new();
            // even factors first, then odd factors in canonical order
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 || table.grade(i) == Grade::Odd {
                    continue;
                }
                if e == 1 {
                    factors.push(table.name(i).to_string());
                } else {
                    factors.push(format!("{}^{}", table.name(i), e));
                }
            }
            for i in m.odd_factors(table) {
                factors.push(table.name(i).to_string());
            }
            let negative_real = c.im == 0.0 && c.re < 0.0;
            let mag = if negative_real { -c } else { *c };
            if n > 0 {
                write!(f, "{}", if negative_real { " - " } else { " + " })?;
            } else if negative_real {
                write!(f, "-")?;
            }
            let coeff = fmt_coeff(mag);
            if factors.is_empty() {
                write!(f, "{coeff}")?;
            } else if coeff == "1" {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", coeff, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn table() -> Arc<VarTable> {
        VarTable::from_pairs(&[("q", "p", Grade::Even), ("theta", "pi", Grade::Odd)]).unwrap()
    }

    fn v(t: &Arc<VarTable>, n: &str) -> SuperPolynomial {
        SuperPolynomial::var(t, n).unwrap()
    }

    #[test]
    fn theta_squared_is_zero() {
        let t = table();
        assert!((&v(&t, "theta") * &v(&t, "theta")).is_zero());
    }

    #[test]
    fn anticommutation() {
        let t = table();
        let a = &v(&t, "theta") * &v(&t, "pi");
        let b = &v(&t, "pi") * &v(&t, "theta");
        assert!((&a + &b).is_zero());
        assert_eq!(a.to_string(), "theta*pi");
        assert_eq!(b.to_string(), "-theta*pi");
    }

    #[test]
    fn expand_mixed_product() {
        // (q + theta)(p + pi) = qp + q pi + theta p + theta pi
        let t = table();
        let lhs = &(&v(&t, "q") + &v(&t, "theta")) * &(&v(&t, "p") + &v(&t, "pi"));
        let qp = &v(&t, "q") * &v(&t, "p");
        let qpi = &v(&t, "q") * &v(&t, "pi");
        let thp = &v(&t, "p") * &v(&t, "theta");
        let thpi = &v(&t, "theta") * &v(&t, "pi");
        let rhs = &(&(&qp + &qpi) + &thp) + &thpi;
        assert!((&lhs - &rhs).is_zero());
        assert_eq!(lhs.num_terms(), 4);
    }

    #[test]
    fn parity_examples() {
        let t = table();
        assert_eq!(v(&t, "q").pow(2).parity(), Parity::Even);
        assert_eq!((&v(&t, "theta") * &v(&t, "pi")).parity(), Parity::Even);
        assert_eq!(v(&t, "theta").parity(), Parity::Odd);
        assert_eq!((&v(&t, "q") + &v(&t, "theta")).parity(), Parity::Mixed);
        assert_eq!(SuperPolynomial::zero(&t).parity(), Parity::Even);
    }

    #[test]
    fn derivative_examples() {
        let t = table();
        let thpi = &v(&t, "theta") * &v(&t, "pi");
        let r = thpi.right_derivative_by("theta").unwrap();
        let l = thpi.left_derivative_by("theta").unwrap();
        assert!((&r + &v(&t, "pi")).is_zero());
        assert!((&l - &v(&t, "pi")).is_zero());
        let q2 = v(&t, "q").pow(2);
        let d = q2.left_derivative_by("q").unwrap();
        assert!((&d - &v(&t, "q").scale_real(2.0)).is_zero());
        assert_eq!(
            thpi.left_derivative_by("nope").unwrap_err(),
            Error::UnknownVariable("nope".into())
        );
    }

    #[test]
    fn second_odd_derivative_vanishes() {
        let t = table();
        let f = &(&v(&t, "q") * &v(&t, "theta")) + &(&v(&t, "theta") * &v(&t, "pi"));
        let i = t.index_of("theta").unwrap();
        assert!(f.left_derivative(i).left_derivative(i).is_zero());
        assert!(f.right_derivative(i).right_derivative(i).is_zero());
    }

    #[test]
    fn table_mismatch_is_an_error() {
        let t1 = table();
        let t2 = VarTable::from_pairs(&[("X", "P", Grade::Even)]).unwrap();
        let a = SuperPolynomial::var(&t1, "q").unwrap();
        let b = SuperPolynomial::var(&t2, "X").unwrap();
        assert_eq!(a.try_mul(&b), Err(Error::TableMismatch));
        assert_eq!(a.try_add(&b), Err(Error::TableMismatch));
    }

    #[test]
    fn pruning_drops_noise() {
        let t = table();
        let a = v(&t, "q").scale_real(1.0 + 1e-16);
        let d = &a - &v(&t, "q");
        assert!(d.is_zero());
    }

    #[test]
    fn basis_size() {
        // q,p unrestricted; theta,pi at most once: degree <= 2 gives
        // 1 + 4 + (3 + 2*2 + 1) = 13 monomials
        let t = table();
        assert_eq!(SuperPolynomial::monomial_basis(&t, 2).len(), 13);
    }

    #[test]
    fn display_coefficients() {
        let t = table();
        let h = &(&v(&t, "p") * &v(&t, "q")).scale(c(0.0, 1.0))
            + &(&v(&t, "pi") * &v(&t, "theta")).scale(c(0.5, -2.0));
        assert_eq!(h.to_string(), "(-0.5 + 2*i)*theta*pi + i*q*p");
    }
}
