#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use num_complex::Complex64;
use pseudomech::superpoly::Monomial;
use pseudomech::{Grade, SuperPolynomial, VarTable};
use rand::rngs::StdRng;
use rand::Rng;

pub fn qp_table() -> Arc<VarTable> {
    VarTable::from_pairs(&[("q", "p", Grade::Even), ("theta", "pi", Grade::Odd)]).unwrap()
}

pub fn wide_table() -> Arc<VarTable> {
    VarTable::from_pairs(&[
        ("q1", "p1", Grade::Even),
        ("theta1", "pi1", Grade::Odd),
        ("q2", "p2", Grade::Even),
        ("theta2", "pi2", Grade::Odd),
    ])
    .unwrap()
}

pub fn rand_c(rng: &mut StdRng) -> Complex64 {
    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

/// Random monomial exponent vector of total degree <= `max_deg` whose odd
/// degree has the requested parity (if any).
pub fn rand_exps(rng: &mut StdRng, table: &VarTable, max_deg: u32, grade: Option<Grade>) -> Vec<u32> {
    loop {
        let mut exps = vec![0u32; table.len()];
        let deg = rng.gen_range(0..=max_deg);
        for _ in 0..deg {
            let v = rng.gen_range(0..table.len());
            if table.grade(v) == Grade::Odd {
                exps[v] = 1;
            } else {
                exps[v] += 1;
            }
        }
        let odd: u32 = table.odd_indices().map(|i| exps[i]).sum();
        match grade {
            Some(g) if Grade::from_deg(odd) != g => continue,
            _ => return exps,
        }
    }
}

pub fn rand_poly(rng: &mut StdRng, table: &Arc<VarTable>, max_deg: u32, grade: Option<Grade>) -> SuperPolynomial {
    let n = rng.gen_range(1..=4);
    let mut acc = SuperPolynomial::zero(table);
    for _ in 0..n {
        let m = Monomial::from_exponents(rand_exps(rng, table, max_deg, grade));
        acc = &acc + &SuperPolynomial::from_term(table, m, rand_c(rng));
    }
    acc
}

/// Factor list of a canonical monomial: even variables (with repetition) then
/// odd variables in ascending order.
pub fn factor_list(table: &VarTable, exps: &[u32]) -> Vec<usize> {
    let mut out = Vec::new();
    for (i, &e) in exps.iter().enumerate() {
        if table.grade(i) == Grade::Even {
            out.extend(std::iter::repeat_n(i, e as usize));
        }
    }
    for (i, &e) in exps.iter().enumerate() {
        if table.grade(i) == Grade::Odd && e == 1 {
            out.push(i);
        }
    }
    out
}

/// Bubble-sort the odd factors of an explicit product, counting swaps.
/// Returns `None` when an odd factor repeats.
pub fn oracle_canonicalize(table: &VarTable, factors: &[usize]) -> Option<(Vec<u32>, f64)> {
    let mut odd: Vec<usize> = factors.iter().copied().filter(|&v| table.grade(v) == Grade::Odd).collect();
    let mut swaps = 0;
    for i in 0..odd.len() {
        for j in 0..odd.len() - 1 - i {
            if odd[j] > odd[j + 1] {
                odd.swap(j, j + 1);
                swaps += 1;
            } else if odd[j] == odd[j + 1] {
                return None;
            }
        }
    }
    if odd.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let mut exps = vec![0u32; table.len()];
    for &f in factors {
        exps[f] += 1;
    }
    Some((exps, if swaps % 2 == 0 { 1.0 } else { -1.0 }))
}

/// Product of two polynomials evaluated by explicit factor lists.
pub fn oracle_product(a: &SuperPolynomial, b: &SuperPolynomial) -> BTreeMap<Vec<u32>, Complex64> {
    let table = a.table();
    let mut out: BTreeMap<Vec<u32>, Complex64> = BTreeMap::new();
    for (ma, ca) in a.terms() {
        for (mb, cb) in b.terms() {
            let mut f = factor_list(table, ma.exponents());
            f.extend(factor_list(table, mb.exponents()));
            if let Some((exps, s)) = oracle_canonicalize(table, &f) {
                *out.entry(exps).or_default() += ca * cb * s;
            }
        }
    }
    out.retain(|_, c| c.norm() > 1e-14);
    out
}

pub fn max_diff(p: &SuperPolynomial, oracle: &BTreeMap<Vec<u32>, Complex64>) -> f64 {
    let mut worst: f64 = 0.0;
    for (m, c) in p.terms() {
        let o = oracle.get(m.exponents()).copied().unwrap_or_default();
        worst = worst.max((c - o).norm());
    }
    for (e, c) in oracle {
        let got = p.coefficient(&Monomial::from_exponents(e.clone()));
        worst = worst.max((got - c).norm());
    }
    worst
}

const IDENTS: [&str; 6] = ["q", "p", "X", "P", "theta", "pi"];

/// Random AST of the shape the parser produces: literals nonnegative, `^`
/// only on even variables or parenthesized sums.
pub fn rand_expr(rng: &mut StdRng, depth: u32) -> pseudomech::expr::Expr {
    use pseudomech::expr::Expr;
    if depth == 0 || rng.gen_bool(0.25) {
        return match rng.gen_range(0..5) {
            0 => Expr::Num(rng.gen_range(0..100) as f64),
            1 => Expr::Num((rng.gen_range(0.0..1000.0f64) * 1000.0).round() / 1000.0),
            2 => Expr::Imag,
            3 => Expr::Pi,
            _ => Expr::Var(IDENTS[rng.gen_range(0..IDENTS.len())].to_string()),
        };
    }
    let sub = |rng: &mut StdRng| Box::new(rand_expr(rng, depth - 1));
    match rng.gen_range(0..5) {
        0 => Expr::Neg(sub(rng)),
        1 => Expr::Add(sub(rng), sub(rng)),
        2 => Expr::Sub(sub(rng), sub(rng)),
        3 => Expr::Mul(sub(rng), sub(rng)),
        _ => Expr::Pow(sub(rng), rng.gen_range(0..4)),
    }
}
