mod common;

use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use zetarh::enumerator::{classify, complete_ad3, family, from_zeta, macwilliams, macwilliams_coeffs, moment_residual, WeightEnumerator};
use zetarh::exactnum::{binomial, int, quad_sign, rat, rational_to_f64, sqrt_embed, Field, QuadExt, Rational};
use zetarh::poly::{ExactPoly, Poly};
use zetarh::realroots::{all_roots_in_closed, count_roots_closed, discriminant, isolate_real_roots, numeric_roots, refine_root};
use zetarh::rh::{
    criterion_interval, cubic_in_interval_procedure, genus3_cubic, rh_direct_exact, rh_direct_numeric,
    rh_genus3,
};
use zetarh::scan::explicit_g_cubic;
use zetarh::zeta::{functional_equation_check, genus3_coeffs, reduced_cubic, symmetrize, zeta_polynomial};

fn rational(num: std::ops::Range<i64>, den: std::ops::Range<i64>) -> impl Strategy<Value = Rational> {
    (num, den).prop_map(|(n, d)| rat(n, d))
}

fn positive_q() -> impl Strategy<Value = Rational> {
    (1i64..400, 1i64..60)
        .prop_map(|(n, d)| rat(n, d))
        .prop_filter("q ≠ 1", |q| !q.is_one())
}

fn small_poly(max_degree: usize) -> impl Strategy<Value = ExactPoly> {
    prop::collection::vec(rational(-9..10, 1..5), 1..=max_degree + 1)
        .prop_map(Poly::new)
        .prop_filter("nonzero, nonconstant", |p| p.degree().unwrap_or(0) >= 1)
}

fn cubic() -> impl Strategy<Value = ExactPoly> {
    (rational(1..10, 1..4), prop::bool::ANY, rational(-30..31, 1..5), rational(-60..61, 1..5), rational(-60..61, 1..5))
        .prop_map(|(a, neg, b, c, d)| Poly::new(vec![d, c, b, if neg { -a } else { a }]))
}

fn sample_q() -> impl Strategy<Value = Rational> {
    prop::sample::select(vec![rat(2, 1), rat(3, 1), rat(1, 2), rat(21, 20), rat(9, 4)])
}

fn enumerator() -> impl Strategy<Value = WeightEnumerator> {
    (positive_q(), 2usize..10)
        .prop_flat_map(|(q, n)| {
            (Just(q), Just(n), prop::collection::vec(rational(-20..21, 1..4), n))
        })
        .prop_filter_map("needs a nonzero coefficient", |(q, n, tail)| {
            let mut a = vec![Rational::one()];
            a.extend(tail);
            WeightEnumerator::new(q, n, a).ok()
        })
}

/// Square-free part of a generated enumerator's field: sqrt_embed(q) must
/// succeed for the MacWilliams transform.
fn q_embeds(q: &Rational) -> bool {
    sqrt_embed(q).is_ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn quad_sign_is_antisymmetric(a in rational(-50..51, 1..20), b in rational(-50..51, 1..20), r in prop::sample::select(vec![2i64, 3, 5, 6, 7, 10, 609])) {
        let x = QuadExt::new(a, b, r.into());
        let s = quad_sign(&x);
        prop_assert_eq!(s * quad_sign(&x.neg()), -(s * s));
        let approx = x.to_f64();
        if approx.abs() > 1e-9 {
            prop_assert_eq!(s, if approx > 0.0 { 1 } else { -1 });
        }
    }

    #[test]
    fn sqrt_embed_squares_back(q in (1i64..100_000, 1i64..100_000).prop_map(|(n, d)| rat(n, d))) {
        let s = sqrt_embed(&q).unwrap();
        let sq = s.mul(&s);
        prop_assert_eq!(sq.as_rational(), Some(&q));
        prop_assert!(s.sign() > 0);
    }
}

#[test]
fn pascal_rule_up_to_200() {
    for n in 1..=200u64 {
        for k in 1..n as i64 {
            assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
        }
        assert!(binomial(n, 0).is_one() && binomial(n, n as i64).is_one());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn sturm_count_matches_numeric_roots(p in cubic(), lo in rational(-12..13, 1..4), width in rational(0..25, 1..4)) {
        let hi = &lo + &width;
        let roots = numeric_roots(&p);
        let real: Vec<f64> = roots.iter().filter(|z| z.im.abs() < 1e-7).map(|z| z.re).collect();
        let mut all: Vec<f64> = roots.iter().map(|z| z.re).collect();
        all.sort_by(f64::total_cmp);
        let separated = roots.iter().enumerate().all(|(i, a)| roots.iter().skip(i + 1).all(|b| (a - b).norm() > 1e-6));
        let (lo_f, hi_f) = (rational_to_f64(&lo), rational_to_f64(&hi));
        let near_edge = real.iter().any(|x| (x - lo_f).abs() < 1e-6 || (x - hi_f).abs() < 1e-6);
        prop_assume!(separated && !near_edge);
        let expected = real.iter().filter(|x| **x >= lo_f && **x <= hi_f).count();
        prop_assert_eq!(count_roots_closed(&p, &lo, &hi).unwrap(), expected);
    }

    #[test]
    fn widening_never_breaks_containment(p in cubic(), lo in rational(-12..13, 1..4), width in rational(0..25, 1..4), grow in rational(0..10, 1..4)) {
        let hi = &lo + &width;
        if all_roots_in_closed(&p, &lo, &hi).unwrap() {
            prop_assert!(all_roots_in_closed(&p, &(&lo - &grow), &(&hi + &grow)).unwrap());
        }
    }

    #[test]
    fn discriminant_vanishes_iff_repeated_root(p in small_poly(6), square in prop::bool::ANY) {
        // Half the cases get a forced repeated factor.
        let p = if square { p.mul(&Poly::linear_root(int(1))).mul(&Poly::linear_root(int(1))) } else { p };
        let repeated = !p.gcd(&p.derivative()).is_constant();
        prop_assert_eq!(discriminant(&p).unwrap().is_zero(), repeated);
    }

    #[test]
    fn refined_roots_bracket_sign_changes(p in small_poly(5)) {
        let eps = rat(1, 1000);
        let sf = p.squarefree_part();
        for iv in isolate_real_roots(&p).unwrap() {
            let x = refine_root(&p, &iv, &eps).unwrap();
            let left = sf.eval(&(&x - &eps)).signum();
            let right = sf.eval(&(&x + &eps)).signum();
            prop_assert!(sf.eval(&x).is_zero() || left != right);
        }
    }

    #[test]
    fn cubic_procedure_matches_sturm(p in cubic(), q in sample_q()) {
        let (lo, hi) = criterion_interval(&q).unwrap();
        let sturm = all_roots_in_closed(&p, &lo, &hi).unwrap();
        prop_assert_eq!(cubic_in_interval_procedure(&p, &q).unwrap().holds, sturm);
    }

    #[test]
    fn cubic_verdict_is_scale_invariant(p in cubic(), q in sample_q(), k in rational(1..50, 1..50)) {
        let (lo, hi) = criterion_interval(&q).unwrap();
        prop_assert_eq!(
            all_roots_in_closed(&p, &lo, &hi).unwrap(),
            all_roots_in_closed(&p.scale(&k), &lo, &hi).unwrap()
        );
        prop_assert_eq!(
            cubic_in_interval_procedure(&p, &q).unwrap().holds,
            cubic_in_interval_procedure(&p.scale(&k), &q).unwrap().holds
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn macwilliams_is_an_involution(w in enumerator()) {
        prop_assume!(q_embeds(w.q()));
        let once = macwilliams(&w).unwrap();
        let twice = macwilliams_coeffs(w.q(), &once).unwrap();
        for (a, b) in w.coeffs().iter().zip(&twice) {
            prop_assert_eq!(&QuadExt::rational(a.clone()), b);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn family_is_fixed_by_macwilliams(n in 1usize..=20, q in positive_q()) {
        prop_assume!(q_embeds(&q));
        let w = family(n, &q).unwrap();
        let image = macwilliams(&w).unwrap();
        for (a, b) in w.coeffs().iter().zip(&image) {
            prop_assert_eq!(&QuadExt::rational(a.clone()), b);
        }
    }
}

#[test]
fn self_dual_enumerators_satisfy_every_moment_identity() {
    let mut rng = common::rng(11);
    for g in 0..=4 {
        for _ in 0..40 {
            let c = common::random_self_dual(&mut rng, g, 2..=5);
            let class = classify(&c.w).unwrap();
            assert!(class.is_self_dual());
            for j in 0..=c.w.n() {
                assert!(moment_residual(&c.w, j).unwrap().is_zero(), "j = {j}");
            }
        }
    }
}

#[test]
fn complete_ad3_reproduces_genus3_coefficient() {
    let mut rng = common::rng(12);
    for _ in 0..200 {
        let c = common::random_self_dual(&mut rng, 3, 2..=6);
        let (w, d) = (&c.w, c.d);
        let predicted = complete_ad3(w.q(), d, &w.coeff(d), &w.coeff(d + 1), &w.coeff(d + 2)).unwrap();
        assert_eq!(predicted, w.coeff(d + 3));
    }
}

#[test]
fn zeta_round_trips_on_random_genus3() {
    let mut rng = common::rng(13);
    for _ in 0..200 {
        let c = common::random_self_dual(&mut rng, 3, 2..=6);
        let z = zeta_polynomial(&c.w).unwrap();
        assert_eq!(z.p(), &c.p);
        assert_eq!(z.p().degree(), Some(6));
        assert!(functional_equation_check(&z));
        assert_eq!(from_zeta(z.p(), c.w.n(), z.d(), c.w.q()).unwrap(), c.w);
        // symmetrize round trip
        let sym = symmetrize(&z).unwrap();
        assert_eq!(sym.expand(), c.p);
        assert_eq!(sym.h, c.h);
        // closed-form coefficients are the leading part of P
        let a = genus3_coeffs(&c.w).unwrap();
        for (i, ai) in a.iter().enumerate() {
            assert_eq!(ai, &z.p().coeff(i));
        }
        // reduced cubic at X = −qU is −h(U)
        let q = c.w.q();
        let reduced = reduced_cubic(&a, q);
        let sub = Poly::new(vec![Rational::zero(), -q.clone()]);
        let composed = reduced
            .coeffs()
            .iter()
            .enumerate()
            .fold(Poly::zero(), |acc, (k, coef)| acc.add(&sub.pow(k as u32).scale(coef)));
        assert_eq!(composed, sym.h.neg());
    }
}

#[test]
fn genus_and_degree_agree_for_self_dual() {
    let mut rng = common::rng(14);
    for g in 1..=5 {
        for _ in 0..20 {
            let c = common::random_self_dual(&mut rng, g, 2..=4);
            let z = zeta_polynomial(&c.w).unwrap();
            assert_eq!(z.genus(), Some(g));
            assert_eq!(z.p().degree(), Some(2 * g));
            assert!(functional_equation_check(&z));
        }
    }
}

#[test]
fn numeric_agrees_with_exact_away_from_the_circle() {
    let mut rng = common::rng(15);
    let tol = rat(1, 1_000_000_000);
    let tol_f = 1e-9;
    let mut compared = 0;
    for g in 1..=4 {
        for _ in 0..60 {
            let c = common::random_self_dual(&mut rng, g, 2..=4);
            let q = rational_to_f64(c.w.q());
            let devs: Vec<f64> = numeric_roots(&c.p)
                .iter()
                .map(|t| (t.norm() * q.sqrt() - 1.0).abs())
                .collect();
            let off: Vec<f64> = devs.iter().copied().filter(|d| *d > tol_f).collect();
            // Only compare when every off-circle root is clearly off.
            if off.iter().any(|d| *d <= 10.0 * tol_f) {
                continue;
            }
            let exact = rh_direct_exact(&c.w).unwrap().holds;
            // Roots on the circle with multiplicity lose accuracy numerically.
            if exact && devs.iter().any(|d| *d > 1e-12) && !c.h.squarefree_part().eq(&c.h) {
                continue;
            }
            let numeric = rh_direct_numeric(&c.w, &tol).unwrap().holds;
            assert_eq!(numeric, exact, "q = {}, n = {}", c.w.q(), c.w.n());
            compared += 1;
        }
    }
    assert!(compared > 100, "only {compared} comparable cases");
}

#[test]
fn explicit_cubic_matches_criterion_for_random_q() {
    let mut rng = common::rng(16);
    for _ in 0..20 {
        let q = loop {
            let q = common::random_rational(&mut rng, 0.3, 8.0, 50);
            if !q.is_one() {
                break q;
            }
        };
        let lhs = genus3_cubic(&family(4, &q).unwrap()).unwrap().to_poly().scale(&int(5));
        let rhs = explicit_g_cubic(&q).scale(&(int(4) * (&q - int(1))));
        assert_eq!(lhs, rhs, "q = {q}");
        let direct = rh_direct_exact(&family(4, &q).unwrap()).unwrap().holds;
        assert_eq!(rh_genus3(&family(4, &q).unwrap()).unwrap().holds, direct);
        assert!(q.is_positive());
    }
}
