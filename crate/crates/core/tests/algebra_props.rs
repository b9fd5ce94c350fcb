mod common;

use common::*;
use pseudomech::{BracketContext, Grade, SuperPolynomial};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn grade_of(p: &SuperPolynomial) -> Grade {
    p.parity().grade().unwrap()
}

#[test]
fn product_matches_bubble_sort_oracle() {
    let mut rng = StdRng::seed_from_u64(7);
    let t = wide_table();
    for _ in 0..1000 {
        let a = rand_poly(&mut rng, &t, 3, None);
        let b = rand_poly(&mut rng, &t, 3, None);
        let got = &a * &b;
        assert!(max_diff(&got, &oracle_product(&a, &b)) < 1e-12, "{a} * {b}");
    }
}

#[test]
fn jacobi_on_random_homogeneous_triples() {
    let mut rng = StdRng::seed_from_u64(11);
    let t = qp_table();
    let ctx = BracketContext::new(&t);
    for _ in 0..100 {
        let mut pick = || {
            let g = if rng.gen_bool(0.5) { Grade::Even } else { Grade::Odd };
            rand_poly(&mut rng, &t, 3, Some(g))
        };
        let (f, g, h) = (pick(), pick(), pick());
        let d = ctx.jacobi_defect(&f, &g, &h).unwrap();
        assert!(d.max_abs() < 1e-12, "defect {} for {f} | {g} | {h}", d.max_abs());
    }
}

fn seeds() -> impl Strategy<Value = u64> {
    any::<u64>()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graded_commutativity(seed in seeds()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let t = wide_table();
        let ga = if rng.gen_bool(0.5) { Grade::Even } else { Grade::Odd };
        let gb = if rng.gen_bool(0.5) { Grade::Even } else { Grade::Odd };
        let a = rand_poly(&mut rng, &t, 3, Some(ga));
        let b = rand_poly(&mut rng, &t, 3, Some(gb));
        let ab = &a * &b;
        let ba = (&b * &a).scale_real(ga.sign_with(gb));
        prop_assert!((&ab - &ba).max_abs() < 1e-12);
    }

    #[test]
    fn associativity(seed in seeds()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let t = wide_table();
        let a = rand_poly(&mut rng, &t, 2, None);
        let b = rand_poly(&mut rng, &t, 2, None);
        let c = rand_poly(&mut rng, &t, 2, None);
        let l = &(&a * &b) * &c;
        let r = &a * &(&b * &c);
        prop_assert!((&l - &r).max_abs() < 1e-12);
    }

    #[test]
    fn left_leibniz(seed in seeds()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let t = wide_table();
        let ga = if rng.gen_bool(0.5) { Grade::Even } else { Grade::Odd };
        let a = rand_poly(&mut rng, &t, 3, Some(ga));
        let b = rand_poly(&mut rng, &t, 3, None);
        let v = rng.gen_range(0..t.len());
        let lhs = (&a * &b).left_derivative(v);
        let rhs = &(&a.left_derivative(v) * &b)
            + &(&a * &b.left_derivative(v)).scale_real(t.grade(v).sign_with(ga));
        prop_assert!((&lhs - &rhs).max_abs() < 1e-12);
    }

    #[test]
    fn right_leibniz(seed in seeds()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let t = wide_table();
        let gb = if rng.gen_bool(0.5) { Grade::Even } else { Grade::Odd };
        let a = rand_poly(&mut rng, &t, 3, None);
        let b = rand_poly(&mut rng, &t, 3, Some(gb));
        let v = rng.gen_range(0..t.len());
        let lhs = (&a * &b).right_derivative(v);
        let rhs = &(&a * &b.right_derivative(v))
            + &(&a.right_derivative(v) * &b).scale_real(t.grade(v).sign_with(gb));
        prop_assert!((&lhs - &rhs).max_abs() < 1e-12);
    }

    #[test]
    fn left_right_conversion(seed in seeds()) {
        // d_v F = (-1)^{|v|(|v| + |F|)} F_{,v}
        let mut rng = StdRng::seed_from_u64(seed);
        let t = wide_table();
        let gf = if rng.gen_bool(0.5) { Grade::Even } else { Grade::Odd };
        let f = rand_poly(&mut rng, &t, 3, Some(gf));
        let v = rng.gen_range(0..t.len());
        let dv = t.grade(v).deg();
        let sign = if (dv * (dv + gf.deg())).is_multiple_of(2) { 1.0 } else { -1.0 };
        let diff = &f.left_derivative(v) - &f.right_derivative(v).scale_real(sign);
        prop_assert!(diff.max_abs() < 1e-12);
    }

    #[test]
    fn bracket_graded_symmetry(seed in seeds()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let t = wide_table();
        let ctx = BracketContext::new(&t);
        let pick = |rng: &mut StdRng| if rng.gen_bool(0.5) { Grade::Even } else { Grade::Odd };
        let (gf, gg) = (pick(&mut rng), pick(&mut rng));
        let f = rand_poly(&mut rng, &t, 3, Some(gf));
        let g = rand_poly(&mut rng, &t, 3, Some(gg));
        if f.is_zero() || g.is_zero() { return Ok(()); }
        let s = grade_of(&f).sign_with(grade_of(&g));
        let sum = &ctx.bracket(&f, &g).unwrap() + &ctx.bracket(&g, &f).unwrap().scale_real(s);
        prop_assert!(sum.max_abs() < 1e-12);
    }

    #[test]
    fn bracket_is_a_derivation(seed in seeds()) {
        // {f, gh} = {f, g} h + (-1)^{|f||g|} g {f, h}
        let mut rng = StdRng::seed_from_u64(seed);
        let t = qp_table();
        let ctx = BracketContext::new(&t);
        let pick = |rng: &mut StdRng| if rng.gen_bool(0.5) { Grade::Even } else { Grade::Odd };
        let (gf, gg) = (pick(&mut rng), pick(&mut rng));
        let f = rand_poly(&mut rng, &t, 3, Some(gf));
        let g = rand_poly(&mut rng, &t, 2, Some(gg));
        let h = rand_poly(&mut rng, &t, 2, None);
        let lhs = ctx.bracket(&f, &(&g * &h)).unwrap();
        let rhs = &(&ctx.bracket(&f, &g).unwrap() * &h)
            + &(&g * &ctx.bracket(&f, &h).unwrap()).scale_real(gf.sign_with(gg));
        prop_assert!((&lhs - &rhs).max_abs() < 1e-12);
    }
}
