//! The generalized Poisson bracket on graded phase space.
//!
//! Coordinates are differentiated from the right and momenta from the left:
//!
//! `{F, G} = sum_i F_{,Q_i} d_{P_i} G - (-1)^{|F||G|} G_{,Q_i} d_{P_i} F`
//!
//! for parity-homogeneous `F`, `G`; mixed arguments are split into even and odd
//! parts and handled bilinearly. Restricted to an even `G` this is the
//! Hamiltonian vector field, and for each of the four parity combinations it
//! expands to the familiar coordinate formulas (with left derivatives on the
//! odd coordinates).

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::superpoly::{Grade, Parity, SuperPolynomial, VarTable};

/// Variable table together with its canonical `(coordinate, momentum)` pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct BracketContext {
    table: Arc<VarTable>,
    pairs: Vec<(usize, usize)>,
}

impl BracketContext {
    pub fn new(table: &Arc<VarTable>) -> Self {
        BracketContext { table: Arc::clone(table), pairs: table.pairs() }
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn var(&self, name: &str) -> Result<SuperPolynomial> {
        SuperPolynomial::var(&self.table, name)
    }

    pub fn var_at(&self, idx: usize) -> SuperPolynomial {
        SuperPolynomial::var_at(&self.table, idx)
    }

    /// All variables in declaration order.
    pub fn variables(&self) -> Vec<SuperPolynomial> {
        (0..self.table.len()).map(|i| self.var_at(i)).collect()
    }

    fn check(&self, f: &SuperPolynomial) -> Result<()> {
        if Arc::ptr_eq(f.table(), &self.table) || **f.table() == *self.table {
            Ok(())
        } else {
            Err(Error::TableMismatch)
        }
    }

    fn homogeneous(&self, f: &SuperPolynomial, gf: Grade, g: &SuperPolynomial, gg: Grade) -> SuperPolynomial {
        let sign = gf.sign_with(gg);
        let mut acc = SuperPolynomial::zero(&self.table);
        for &(q, p) in &self.pairs {
            let fq = f.right_derivative(q);
            let gp = g.left_derivative(p);
            if !fq.is_zero() && !gp.is_zero() {
                acc = &acc + &(&fq * &gp);
            }
            let gq = g.right_derivative(q);
            let fp = f.left_derivative(p);
            if !gq.is_zero() && !fp.is_zero() {
                acc = &acc - &(&gq * &fp).scale_real(sign);
            }
        }
        acc
    }

    /// Generalized Poisson bracket `{f, g}`.
    pub fn bracket(&self, f: &SuperPolynomial, g: &SuperPolynomial) -> Result<SuperPolynomial> {
        self.check(f)?;
        self.check(g)?;
        let mut acc = SuperPolynomial::zero(&self.table);
        for (gf, fpart) in f.homogeneous_parts() {
            for (gg, gpart) in g.homogeneous_parts() {
                acc = &acc + &self.homogeneous(&fpart, gf, &gpart, gg);
            }
        }
        Ok(acc)
    }

    /// `dF/dt = {F, H}` for an even Hamiltonian.
    pub fn time_derivative(&self, f: &SuperPolynomial, h: &SuperPolynomial) -> Result<SuperPolynomial> {
        if h.parity() != Parity::Even {
            return Err(Error::HamiltonianNotEven);
        }
        self.bracket(f, h)
    }

    /// Left-hand side of the generalized Jacobi identity
    /// `{f,{g,h}} + (-1)^{f(g+h)} {g,{h,f}} + (-1)^{h(f+g)} {h,{f,g}}`.
    pub fn jacobi_defect(
        &self,
        f: &SuperPolynomial,
        g: &SuperPolynomial,
        h: &SuperPolynomial,
    ) -> Result<SuperPolynomial> {
        let grade = |x: &SuperPolynomial, name: &str| {
            x.parity().grade().ok_or_else(|| Error::MixedParity(format!("jacobi argument {name}")))
        };
        let (df, dg, dh) = (grade(f, "f")?.deg(), grade(g, "g")?.deg(), grade(h, "h")?.deg());
        let s2 = if df * (dg + dh) % 2 == 0 { 1.0 } else { -1.0 };
        let s3 = if dh * (df + dg) % 2 == 0 { 1.0 } else { -1.0 };
        let t1 = self.bracket(f, &self.bracket(g, h)?)?;
        let t2 = self.bracket(g, &self.bracket(h, f)?)?;
        let t3 = self.bracket(h, &self.bracket(f, g)?)?;
        Ok(&(&t1 + &t2.scale_real(s2)) + &t3.scale_real(s3))
    }

    /// Max deviation of the variables from the canonical bracket table:
    /// `{Q_i, P_j} = delta_ij` and all other brackets zero (mirrored entries
    /// follow by graded symmetry and are checked too).
    pub fn canonical_table_defect(&self, images: &[SuperPolynomial]) -> Result<f64> {
        if images.len() != self.table.len() {
            return Err(Error::DimensionMismatch { expected: self.table.len(), found: images.len() });
        }
        let mut worst: f64 = 0.0;
        let pairs = self.table.pairs();
        for a in 0..images.len() {
            for b in 0..images.len() {
                let target = expected_canonical(&self.table, &pairs, a, b);
                let got = self.bracket(&images[a], &images[b])?;
                let want = SuperPolynomial::constant(got.table(), target.into());
                worst = worst.max((&got - &want).max_abs());
            }
        }
        Ok(worst)
    }
}

/// Canonical value of `{v_a, v_b}` for the variables of `table`.
pub(crate) fn expected_canonical(table: &VarTable, pairs: &[(usize, usize)], a: usize, b: usize) -> f64 {
    for &(q, p) in pairs {
        if a == q && b == p {
            return 1.0;
        }
        if a == p && b == q {
            // {P, Q} = -(-1)^{|Q||P|} {Q, P}
            return -table.grade(q).sign_with(table.grade(p));
        }
    }
    0.0
}

#[cfg(test)]
mod tests {
    use num_complex::Complex64;

    use super::*;

    fn ctx() -> BracketContext {
        let t = VarTable::from_pairs(&[("X", "P", Grade::Even), ("theta", "pi", Grade::Odd)]).unwrap();
        BracketContext::new(&t)
    }

    fn i() -> Complex64 {
        Complex64::new(0.0, 1.0)
    }

    fn h1d(c: &BracketContext) -> SuperPolynomial {
        let t = c.table();
        &SuperPolynomial::product_of(t, i(), &["P", "X"]).unwrap()
            + &SuperPolynomial::product_of(t, i(), &["pi", "theta"]).unwrap()
    }

    #[test]
    fn canonical_pairs() {
        let c = ctx();
        let one = |x: &str, y: &str| c.bracket(&c.var(x).unwrap(), &c.var(y).unwrap()).unwrap();
        assert_eq!(one("X", "P").to_string(), "1");
        assert_eq!(one("theta", "pi").to_string(), "1");
        assert_eq!(one("pi", "theta").to_string(), "1");
        assert_eq!(one("P", "X").to_string(), "-1");
        assert!(one("theta", "theta").is_zero());
        assert!(c.canonical_table_defect(&c.variables()).unwrap() == 0.0);
    }

    #[test]
    fn supercharge_bracket_gives_hamiltonian() {
        let c = ctx();
        let t = c.table();
        let r2 = Complex64::new(2f64.sqrt(), 0.0);
        let q = SuperPolynomial::product_of(t, r2, &["P", "theta"]).unwrap();
        let qb = SuperPolynomial::product_of(t, r2, &["X", "pi"]).unwrap();
        let b = c.bracket(&q, &qb).unwrap();
        let lhs = b.scale(i() * 0.5);
        assert!((&lhs - &h1d(&c)).max_abs() < 1e-14);
    }

    #[test]
    fn hamilton_equations() {
        let c = ctx();
        let h = h1d(&c);
        for (name, rate) in [("X", i()), ("P", -i()), ("theta", i()), ("pi", -i())] {
            let v = c.var(name).unwrap();
            let d = c.time_derivative(&v, &h).unwrap();
            assert!((&d - &v.scale(rate)).is_zero(), "{name}: {d}");
        }
        assert!(c.time_derivative(&h, &h).unwrap().is_zero());
    }

    #[test]
    fn odd_hamiltonian_rejected() {
        let c = ctx();
        let th = c.var("theta").unwrap();
        assert_eq!(c.time_derivative(&th, &th).unwrap_err(), Error::HamiltonianNotEven);
    }

    #[test]
    fn jacobi_small_cases() {
        let t = VarTable::from_pairs(&[("q", "p", Grade::Even), ("theta", "pi", Grade::Odd)]).unwrap();
        let c = BracketContext::new(&t);
        let q = c.var("q").unwrap();
        let p = c.var("p").unwrap();
        let th = c.var("theta").unwrap();
        let pi = c.var("pi").unwrap();
        let q2p = &(&q * &q) * &p;
        assert!(c.jacobi_defect(&q, &p, &q2p).unwrap().is_zero());
        let thpi = &th * &pi;
        assert!(c.jacobi_defect(&th, &pi, &thpi).unwrap().is_zero());
        let mixed = &q + &th;
        assert!(matches!(c.jacobi_defect(&mixed, &p, &q), Err(Error::MixedParity(_))));
    }

    #[test]
    fn mismatched_table() {
        let c = ctx();
        let other = VarTable::from_pairs(&[("q", "p", Grade::Even)]).unwrap();
        let q = SuperPolynomial::var(&other, "q").unwrap();
        assert_eq!(c.bracket(&q, &q).unwrap_err(), Error::TableMismatch);
    }
}
