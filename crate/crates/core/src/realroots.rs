//! Real-root machinery: Sturm chains, closed-interval root counting,
//! discriminants, root isolation and refinement, and a floating-point
//! all-roots finder.

use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use crate::error::{domain, Result};
use crate::exactnum::{int, Field, Rational};
use crate::poly::{Embed, ExactPoly, Poly};

/// Sturm sequence of the square-free part of a polynomial: `p`, `p′`, then
/// negated remainders, each possibly divided by a positive constant.
#[derive(Debug, Clone, PartialEq)]
pub struct SturmChain<F: Field> {
    chain: Vec<Poly<F>>,
}

impl<F: Field> SturmChain<F> {
    pub fn polys(&self) -> &[Poly<F>] {
        &self.chain
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    /// The square-free polynomial the chain was built from.
    pub fn base(&self) -> &Poly<F> {
        &self.chain[0]
    }

    /// Number of sign changes (zeros skipped) of the chain evaluated at `x`.
    pub fn variations<E: Embed<F>>(&self, x: &E) -> usize {
        let mut count = 0;
        let mut last = 0;
        for p in &self.chain {
            let s = p.sign_at(x);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct roots in the half-open interval `(lo, hi]`.
    pub fn count_half_open<E: Embed<F>>(&self, lo: &E, hi: &E) -> usize {
        self.variations(lo).saturating_sub(self.variations(hi))
    }
}

pub fn sturm_chain<F: Field>(p: &Poly<F>) -> Result<SturmChain<F>> {
    if p.is_zero() {
        return domain("Sturm chain of the zero polynomial");
    }
    let chain = remainder_chain(p.clone());
    let last = chain.last().expect("chain starts with p");
    if chain.len() == 1 || last.is_constant() {
        return Ok(SturmChain { chain });
    }
    // The last entry is gcd(p, p′) up to a constant.
    let base = p.div_rem(last).0;
    Ok(SturmChain {
        chain: remainder_chain(base),
    })
}

fn remainder_chain<F: Field>(base: Poly<F>) -> Vec<Poly<F>> {
    let mut chain = vec![base.clone()];
    if base.is_constant() {
        return chain;
    }
    let mut prev = base;
    let mut cur = prev.derivative();
    while !cur.is_zero() {
        let next = F::sturm_remainder(&prev, &cur);
        chain.push(cur.clone());
        prev = cur;
        cur = next;
    }
    chain
}

fn check_interval<F: Field, E: Embed<F>>(p: &Poly<F>, lo: &E, hi: &E) -> Result<()> {
    lo.check_compatible(hi)?;
    for c in p.coeffs() {
        let c = E::embed(c);
        c.check_compatible(lo)?;
        c.check_compatible(hi)?;
    }
    if hi.sub(lo).sign() < 0 {
        return domain("interval with lo > hi");
    }
    Ok(())
}

/// Number of distinct real roots of `p` in the closed interval `[lo, hi]`.
pub fn count_roots_closed<F: Field, E: Embed<F>>(
    p: &Poly<F>,
    lo: &E,
    hi: &E,
) -> Result<usize> {
    check_interval(p, lo, hi)?;
    let chain = sturm_chain(p)?;
    Ok(count_with_chain(&chain, lo, hi))
}

fn count_with_chain<F: Field, E: Embed<F>>(chain: &SturmChain<F>, lo: &E, hi: &E) -> usize {
    let at_lo = usize::from(chain.base().sign_at(lo) == 0);
    chain.count_half_open(lo, hi) + at_lo
}

/// True iff every complex root of `p`, with multiplicity, is real and lies in
/// `[lo, hi]`. Constant polynomials satisfy this vacuously.
pub fn all_roots_in_closed<F: Field, E: Embed<F>>(
    p: &Poly<F>,
    lo: &E,
    hi: &E,
) -> Result<bool> {
    check_interval(p, lo, hi)?;
    if p.is_zero() {
        return domain("root location of the zero polynomial");
    }
    let chain = sturm_chain(p)?;
    let degree = chain.base().degree().unwrap_or(0);
    if degree == 0 {
        return Ok(true);
    }
    Ok(count_with_chain(&chain, lo, hi) == degree)
}

/// `Res(a, b)` by the Euclidean remainder sequence.
pub fn resultant<F: Field>(a: &Poly<F>, b: &Poly<F>) -> F {
    let (Some(mut m), Some(mut n)) = (a.degree(), b.degree()) else {
        return F::zero_elt();
    };
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut acc = F::one_elt();
    loop {
        if n == 0 {
            let mut r = acc;
            let lb = b.leading();
            for _ in 0..m {
                r = r.mul(&lb);
            }
            return r;
        }
        let r = a.rem(&b);
        let Some(k) = r.degree() else {
            return F::zero_elt();
        };
        // Res(a, b) = (-1)^{mn} lc(b)^{m-k} Res(b, r)
        if m * n % 2 == 1 {
            acc = acc.neg();
        }
        let lb = b.leading();
        for _ in 0..(m - k) {
            acc = acc.mul(&lb);
        }
        a = b;
        b = r;
        m = n;
        n = k;
    }
}

/// `(−1)^{d(d−1)/2} · Res(p, p′) / lc(p)`.
pub fn discriminant<F: Field>(p: &Poly<F>) -> Result<F> {
    let d = match p.degree() {
        Some(d) if d >= 1 => d,
        _ => return domain("discriminant of a constant polynomial"),
    };
    let res = resultant(p, &p.derivative()).div(&p.leading());
    Ok(if (d * (d - 1) / 2) % 2 == 1 {
        res.neg()
    } else {
        res
    })
}

/// A closed rational interval holding exactly one real root; `lo == hi`
/// means the root is exactly `lo`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RootInterval {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / int(2)
    }
}

/// Strict bound: every complex root satisfies `|z| < 1 + max |a_i / a_n|`.
pub fn cauchy_bound(p: &ExactPoly) -> Rational {
    let lc = p.leading();
    let max = p.coeffs()[..p.coeffs().len().saturating_sub(1)]
        .iter()
        .map(|c| (c / &lc).abs())
        .max()
        .unwrap_or_else(Rational::zero);
    max + Rational::one()
}

/// One interval per distinct real root, sorted and pairwise disjoint.
pub fn isolate_real_roots(p: &ExactPoly) -> Result<Vec<RootInterval>> {
    let chain = sturm_chain(p)?;
    let base = chain.base().clone();
    if base.is_constant() {
        return Ok(Vec::new());
    }
    let bound = cauchy_bound(&base);
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    // Endpoints pushed on the stack are never roots.
    while let Some((a, b)) = stack.pop() {
        let c = chain.count_half_open(&a, &b);
        if c == 0 {
            continue;
        }
        if c == 1 {
            out.push(RootInterval { lo: a, hi: b });
            continue;
        }
        let mid = (&a + &b) / int(2);
        if base.sign_at(&mid) == 0 {
            out.push(RootInterval {
                lo: mid.clone(),
                hi: mid.clone(),
            });
            let quarter = (&b - &a) / int(4);
            let mut delta = quarter;
            // Shrink the gap until neither side loses a root.
            loop {
                let left = &mid - &delta;
                let right = &mid + &delta;
                if chain.count_half_open(&left, &right) == 1
                    && base.sign_at(&left) != 0
                    && base.sign_at(&right) != 0
                {
                    stack.push((right, b));
                    stack.push((a, left));
                    break;
                }
                delta /= int(2);
            }
        } else {
            stack.push((mid.clone(), b));
            stack.push((a, mid));
        }
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    separate(&chain, &mut out);
    Ok(out)
}

/// Pulls apart neighbouring intervals that share an endpoint (never a root).
fn separate(chain: &SturmChain<Rational>, ivs: &mut [RootInterval]) {
    for i in 1..ivs.len() {
        if ivs[i - 1].hi != ivs[i].lo {
            continue;
        }
        let shared = ivs[i].lo.clone();
        let mut step = ivs[i - 1].width() / int(2);
        loop {
            let cut = &shared - &step;
            if chain.count_half_open(&cut, &shared) == 0 && cut > ivs[i - 1].lo {
                ivs[i - 1].hi = cut;
                break;
            }
            step /= int(2);
        }
    }
}

/// Rational within `eps` of the unique root in `iv`, by bisection on the sign
/// of the square-free part.
pub fn refine_root(p: &ExactPoly, iv: &RootInterval, eps: &Rational) -> Result<Rational> {
    if !eps.is_positive() {
        return domain("refinement tolerance must be positive");
    }
    let sf = p.squarefree_part();
    let (mut lo, mut hi) = (iv.lo.clone(), iv.hi.clone());
    let mut s_lo = sf.sign_at(&lo);
    let s_hi = sf.sign_at(&hi);
    if s_lo == 0 {
        return Ok(lo);
    }
    if s_hi == 0 {
        return Ok(hi);
    }
    if s_lo == s_hi {
        return domain(format!(
            "interval [{lo}, {hi}] does not bracket a sign change"
        ));
    }
    let two_eps = eps * int(2);
    while &hi - &lo > two_eps {
        let mid = (&lo + &hi) / int(2);
        let s = sf.sign_at(&mid);
        if s == 0 {
            return Ok(mid);
        }
        if s == s_lo {
            lo = mid;
            s_lo = s;
        } else {
            hi = mid;
        }
    }
    Ok((lo + hi) / int(2))
}

/// Narrows an isolating interval to width ≤ `eps`, keeping the root inside.
pub fn shrink_interval(p: &ExactPoly, iv: &RootInterval, eps: &Rational) -> Result<RootInterval> {
    let sf = p.squarefree_part();
    let (mut lo, mut hi) = (iv.lo.clone(), iv.hi.clone());
    let s_lo = sf.sign_at(&lo);
    if s_lo == 0 {
        return Ok(RootInterval { lo: lo.clone(), hi: lo });
    }
    if sf.sign_at(&hi) == 0 {
        return Ok(RootInterval { lo: hi.clone(), hi });
    }
    if s_lo == sf.sign_at(&hi) {
        return domain(format!("interval [{lo}, {hi}] does not bracket a sign change"));
    }
    while &hi - &lo > *eps {
        let mid = (&lo + &hi) / int(2);
        match sf.sign_at(&mid) {
            0 => return Ok(RootInterval { lo: mid.clone(), hi: mid }),
            s if s == s_lo => lo = mid,
            _ => hi = mid,
        }
    }
    Ok(RootInterval { lo, hi })
}

const ABERTH_MAX_ITERS: usize = 1000;

/// All complex roots with multiplicity, by Aberth–Ehrlich iteration in
/// double precision. Accuracy is advisory.
pub fn numeric_roots<F: Field>(p: &Poly<F>) -> Vec<Complex64> {
    let coeffs = p.to_f64();
    let Some(n) = p.degree() else {
        return Vec::new();
    };
    if n == 0 {
        return Vec::new();
    }
    let lc = coeffs[n];
    let monic: Vec<f64> = coeffs.iter().map(|c| c / lc).collect();
    // Fujiwara-style radius for the starting circle.
    let radius = (0..n)
        .map(|i| monic[i].abs().powf(1.0 / (n - i) as f64))
        .fold(0.0f64, f64::max)
        .max(1e-3);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4;
            Complex64::from_polar(radius, theta)
        })
        .collect();
    let eval = |x: Complex64| -> (Complex64, Complex64) {
        let mut v = Complex64::new(0.0, 0.0);
        let mut d = Complex64::new(0.0, 0.0);
        for c in monic.iter().rev() {
            d = d * x + v;
            v = v * x + c;
        }
        (v, d)
    };
    for _ in 0..ABERTH_MAX_ITERS {
        let mut max_step = 0.0f64;
        for i in 0..n {
            let (v, d) = eval(z[i]);
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = v / d;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| {
                    let diff = z[i] - z[j];
                    if diff.norm() == 0.0 {
                        Complex64::new(0.0, 0.0)
                    } else {
                        diff.inv()
                    }
                })
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[i] -= step;
                max_step = max_step.max(step.norm() / z[i].norm().max(1.0));
            }
        }
        if max_step < 1e-15 {
            break;
        }
    }
    z.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    z
}
