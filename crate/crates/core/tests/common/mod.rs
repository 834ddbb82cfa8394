#![allow(dead_code)]

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use zetarh::enumerator::{from_zeta, WeightEnumerator};
use zetarh::exactnum::{int, rat, sqrt_embed, Rational};
use zetarh::poly::{ExactPoly, Poly};

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// Random rational in `(lo, hi)` with denominator up to `den`.
pub fn random_rational(rng: &mut ChaCha8Rng, lo: f64, hi: f64, den: i64) -> Rational {
    let d = rng.gen_range(1..=den);
    let lo_n = (lo * d as f64).ceil() as i64;
    let hi_n = (hi * d as f64).floor() as i64;
    rat(rng.gen_range(lo_n..=hi_n), d)
}

/// Random q > 0, q ≠ 1: mostly from values with interesting square roots,
/// sometimes a random fraction.
pub fn random_q(rng: &mut ChaCha8Rng) -> Rational {
    const FIXED: [(i64, i64); 8] = [(2, 1), (3, 1), (1, 2), (21, 20), (9, 4), (4, 1), (3, 2), (4, 5)];
    loop {
        let q = if rng.gen_bool(0.6) {
            let (n, d) = FIXED[rng.gen_range(0..FIXED.len())];
            rat(n, d)
        } else {
            random_rational(rng, 0.3, 8.0, 12)
        };
        if q > Rational::zero() && !q.is_one() {
            return q;
        }
    }
}

/// `T^g·h(T + 1/(qT))` for `deg h ≤ g`.
pub fn unsymmetrize(h: &ExactPoly, q: &Rational, g: usize) -> ExactPoly {
    // T^g·(T + 1/(qT))^k = T^{g−k}·(T² + 1/q)^k
    let base = Poly::new(vec![q.recip(), Rational::zero(), Rational::one()]);
    let mut out = Poly::zero();
    for (k, c) in h.coeffs().iter().enumerate() {
        let term = base.pow(k as u32).mul(&Poly::monomial(c.clone(), g - k));
        out = out.add(&term);
    }
    out
}

/// A degree-`g` polynomial `h` whose roots are a random mix of real values
/// inside, on the edge of, and outside `[−2/√q, 2/√q]`, plus complex pairs.
pub fn random_h(rng: &mut ChaCha8Rng, q: &Rational, g: usize) -> ExactPoly {
    let qf = zetarh::exactnum::rational_to_f64(q);
    let edge = 2.0 / qf.sqrt();
    let mut h = Poly::constant(random_rational(rng, 0.5, 3.0, 4));
    let mut left = g;
    while left > 0 {
        let choice = rng.gen_range(0..10);
        if choice == 0 && left >= 2 {
            // U² + bU + c with b² < 4c
            let b = random_rational(rng, -2.0, 2.0, 8);
            let c = &b * &b / int(4) + random_rational(rng, 0.01, 2.0, 16);
            h = h.mul(&Poly::new(vec![c, b, Rational::one()]));
            left -= 2;
            continue;
        }
        let u = if choice == 1 {
            // The edge itself when it is rational, e.g. q = 4 or 9/4.
            let e = match sqrt_embed(q).ok().and_then(|s| s.as_rational().cloned()) {
                Some(s) => int(2) / s,
                None => rat((edge * 1e6).round() as i64, 1_000_000),
            };
            if rng.gen_bool(0.5) { e } else { -e }
        } else if choice <= 6 {
            random_rational(rng, -0.99 * edge, 0.99 * edge, 32)
        } else {
            random_rational(rng, -1.6 * edge, 1.6 * edge, 32)
        };
        h = h.mul(&Poly::linear_root(u));
        left -= 1;
    }
    h
}

pub struct Generated {
    pub w: WeightEnumerator,
    pub p: ExactPoly,
    pub h: ExactPoly,
    pub g: usize,
    pub d: usize,
}

/// A self-dual enumerator of genus `g` built with `from_zeta` from a random
/// mirrored `P` normalized to `P(1) = 1`.
pub fn random_self_dual(rng: &mut ChaCha8Rng, g: usize, d_range: std::ops::RangeInclusive<usize>) -> Generated {
    loop {
        let q = random_q(rng);
        let d = rng.gen_range(d_range.clone());
        let n = 2 * g + 2 * d - 2;
        let h = random_h(rng, &q, g);
        let p = unsymmetrize(&h, &q, g);
        let at_one = p.eval(&Rational::one());
        if at_one.is_zero() {
            continue;
        }
        let scale = at_one.recip();
        let (p, h) = (p.scale(&scale), h.scale(&scale));
        if let Ok(w) = from_zeta(&p, n, d, &q) {
            return Generated { w, p, h, g, d };
        }
    }
}
