//! Riemann-hypothesis deciders.
//!
//! A self-dual enumerator satisfies the Riemann hypothesis when every zero
//! of its zeta polynomial has modulus `1/√q`. Because `P(T) = T^g·h(T +
//! 1/(qT))`, that holds exactly when every root of `h` is real and lies in
//! `[−2/√q, 2/√q]`, which the exact direct method decides with a Sturm
//! count over `ℚ(√r)`. The genus-one, -two and -three criteria reduce the
//! same question to a bound on `A_d`, a quadratic, or a cubic in
//! `[−2√q, 2√q]`. All intervals are closed: a root on the boundary counts as
//! satisfying the hypothesis.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use num_traits::Signed;
use serde_json::{Map, Value};

use crate::enumerator::{classify, Classification, SelfDuality, WeightEnumerator};
use crate::error::{domain, Error, Result};
use crate::exactnum::{format_f64, int, rat, sqrt_embed, Field, QuadExt, Rational};
use crate::poly::{ExactPoly, Poly};
use crate::realroots::{all_roots_in_closed, discriminant, numeric_roots};
use crate::zeta::{symmetrize, zeta_polynomial};

/// Default bound on `| |T|·√q − 1 |` for the numeric method.
pub fn default_tolerance() -> Rational {
    rat(1, 1_000_000_000)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    DirectExact,
    DirectNumeric,
    Genus1,
    Genus2,
    Genus3,
    CubicProcedure,
}

impl Method {
    pub const ALL: [Method; 6] = [
        Method::DirectExact,
        Method::DirectNumeric,
        Method::Genus1,
        Method::Genus2,
        Method::Genus3,
        Method::CubicProcedure,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::DirectExact => "direct-exact",
            Method::DirectNumeric => "direct-numeric",
            Method::Genus1 => "genus1",
            Method::Genus2 => "genus2",
            Method::Genus3 => "genus3",
            Method::CubicProcedure => "cubic-procedure",
        }
    }

    /// Whether the method applies to an enumerator of the given genus.
    pub fn applies_to_genus(self, genus: usize) -> bool {
        match self {
            Method::DirectExact | Method::DirectNumeric => true,
            Method::Genus1 => genus == 1,
            Method::Genus2 => genus == 2,
            Method::Genus3 | Method::CubicProcedure => genus == 3,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown method {s:?}")))
    }
}

/// Data sufficient to re-check a verdict independently.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Witness {
    /// The polynomial whose roots were located: `h(U)`, the genus-two
    /// quadratic, or the genus-three cubic.
    pub polynomial: Option<ExactPoly>,
    /// Closed interval the roots were required to lie in.
    pub interval: Option<(QuadExt, QuadExt)>,
    /// Genus-one bounds on `A_d`, in increasing order.
    pub bounds: Option<(QuadExt, QuadExt)>,
    /// Floating-point roots of `polynomial` (or of `P` for the numeric method).
    pub roots_approx: Vec<Complex64>,
    /// Largest `| |T|·√q − 1 |` over the numeric roots.
    pub max_deviation: Option<f64>,
    /// First failed condition, for negative verdicts that have one.
    pub violated: Option<String>,
    pub advisory: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RhVerdict {
    pub holds: bool,
    pub method: Method,
    pub witness: Witness,
}

impl RhVerdict {
    /// JSON report; approximations rendered with `digits` fractional digits.
    pub fn to_json(&self, digits: usize) -> Value {
        let mut obj = Map::new();
        obj.insert("method".into(), Value::String(self.method.as_str().into()));
        obj.insert("holds".into(), Value::Bool(self.holds));
        if let Some(p) = &self.witness.polynomial {
            let key = match self.method {
                Method::Genus3 | Method::CubicProcedure => "cubic",
                Method::Genus2 => "quadratic",
                _ => "h",
            };
            let coeffs = p
                .coeffs()
                .iter()
                .rev()
                .map(|c| Value::String(c.to_string()))
                .collect();
            obj.insert(key.into(), Value::Array(coeffs));
        }
        if let Some((lo, hi)) = &self.witness.bounds {
            let mut b = Map::new();
            b.insert("lo".into(), Value::String(lo.to_string()));
            b.insert("hi".into(), Value::String(hi.to_string()));
            obj.insert("bounds".into(), Value::Object(b));
        }
        if let Some((lo, hi)) = &self.witness.interval {
            let mut iv = Map::new();
            iv.insert("lo".into(), Value::String(lo.to_string()));
            iv.insert("hi".into(), Value::String(hi.to_string()));
            obj.insert("interval".into(), Value::Object(iv));
        }
        if !self.witness.roots_approx.is_empty() {
            let roots = self
                .witness
                .roots_approx
                .iter()
                .map(|z| root_json(z, digits))
                .collect();
            obj.insert("roots_approx".into(), Value::Array(roots));
        }
        if let Some(dev) = self.witness.max_deviation {
            obj.insert("max_deviation".into(), decimal_json(dev, digits.max(12)));
        }
        if let Some(v) = &self.witness.violated {
            obj.insert("violated".into(), Value::String(v.clone()));
        }
        if self.witness.advisory {
            obj.insert("advisory".into(), Value::Bool(true));
        }
        Value::Object(obj)
    }
}

fn decimal_json(x: f64, digits: usize) -> Value {
    let s = format_f64(x, digits);
    serde_json::from_str::<serde_json::Number>(&s)
        .map(Value::Number)
        .unwrap_or(Value::String(s))
}

fn root_json(z: &Complex64, digits: usize) -> Value {
    if z.im.abs() <= 1e-9 * z.norm().max(1.0) {
        decimal_json(z.re, digits)
    } else {
        Value::Array(vec![decimal_json(z.re, digits), decimal_json(z.im, digits)])
    }
}

/// Roots with tiny imaginary parts are reported as real.
fn real_sorted(mut roots: Vec<Complex64>) -> Vec<Complex64> {
    for z in roots.iter_mut() {
        if z.im.abs() <= 1e-9 * z.norm().max(1.0) {
            z.im = 0.0;
        }
    }
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    roots
}

/// Classification of an enumerator the deciders accept: `W^σ = +W`,
/// `d, d⊥ ≥ 2`, even degree.
pub fn require_self_dual(w: &WeightEnumerator) -> Result<(Classification, usize)> {
    let class = classify(w)?;
    if class.selfdual != Some(SelfDuality::Plus) {
        return domain("enumerator is not self-dual (W^σ ≠ W)");
    }
    if !class.admits_zeta() {
        return domain(format!(
            "Riemann hypothesis needs d, d⊥ ≥ 2 (d = {}, d⊥ = {:?})",
            class.d, class.d_perp
        ));
    }
    let genus = match class.genus {
        Some(g) if g >= 0 => g as usize,
        g => return domain(format!("invalid genus {g:?}")),
    };
    Ok((class, genus))
}

fn require_genus(w: &WeightEnumerator, want: usize) -> Result<Classification> {
    let (class, genus) = require_self_dual(w)?;
    if genus != want {
        return domain(format!("criterion needs genus {want}, enumerator has genus {genus}"));
    }
    Ok(class)
}

/// `[−2/√q, 2/√q]`
fn h_interval(q: &Rational) -> Result<(QuadExt, QuadExt)> {
    let c = sqrt_embed(q)?.inv().scale(&int(2));
    Ok((c.neg(), c))
}

/// `[−2√q, 2√q]`
pub fn criterion_interval(q: &Rational) -> Result<(QuadExt, QuadExt)> {
    let c = sqrt_embed(q)?.scale(&int(2));
    Ok((c.neg(), c))
}

pub fn rh_direct_exact(w: &WeightEnumerator) -> Result<RhVerdict> {
    require_self_dual(w)?;
    let z = zeta_polynomial(w)?;
    let h = symmetrize(&z)?.h;
    let (lo, hi) = h_interval(w.q())?;
    let holds = all_roots_in_closed(&h, &lo, &hi)?;
    Ok(RhVerdict {
        holds,
        method: Method::DirectExact,
        witness: Witness {
            roots_approx: real_sorted(numeric_roots(&h)),
            polynomial: Some(h),
            interval: Some((lo, hi)),
            ..Witness::default()
        },
    })
}

pub fn rh_direct_numeric(w: &WeightEnumerator, tol: &Rational) -> Result<RhVerdict> {
    require_self_dual(w)?;
    let z = zeta_polynomial(w)?;
    let roots = numeric_roots(z.p());
    let sqrt_q = crate::exactnum::rational_to_f64(w.q()).sqrt();
    let max_dev = roots
        .iter()
        .map(|t| (t.norm() * sqrt_q - 1.0).abs())
        .fold(0.0f64, f64::max);
    let holds = max_dev <= crate::exactnum::rational_to_f64(tol);
    Ok(RhVerdict {
        holds,
        method: Method::DirectNumeric,
        witness: Witness {
            roots_approx: real_sorted(roots),
            max_deviation: Some(max_dev),
            advisory: true,
            ..Witness::default()
        },
    })
}

/// `(√q − 1)/(√q + 1)·C(2d, d)` and `(√q + 1)/(√q − 1)·C(2d, d)`, ordered.
fn genus1_bounds(q: &Rational, d: usize) -> Result<(QuadExt, QuadExt)> {
    let s = sqrt_embed(q)?;
    let one = QuadExt::one_elt();
    let central = Rational::from_integer(crate::exactnum::binomial(2 * d as u64, d as i64));
    let low = s.sub(&one).div(&s.add(&one)).scale(&central);
    let high = s.add(&one).div(&s.sub(&one)).scale(&central);
    // For q < 1 the two bounds swap sides.
    if low.sub(&high).sign() <= 0 {
        Ok((low, high))
    } else {
        Ok((high, low))
    }
}

pub fn rh_genus1(w: &WeightEnumerator) -> Result<RhVerdict> {
    let class = require_genus(w, 1)?;
    let (lo, hi) = genus1_bounds(w.q(), class.d)?;
    let ad = QuadExt::rational(w.coeff(class.d));
    let above = ad.sub(&lo).sign() >= 0;
    let below = hi.sub(&ad).sign() >= 0;
    let violated = match (above, below) {
        (false, _) => Some(format!("A_{} < {lo}", class.d)),
        (_, false) => Some(format!("A_{} > {hi}", class.d)),
        _ => None,
    };
    Ok(RhVerdict {
        holds: above && below,
        method: Method::Genus1,
        witness: Witness {
            bounds: Some((lo, hi)),
            violated,
            ..Witness::default()
        },
    })
}

/// The genus-two quadratic
/// `A_d X² − ((d−q)A_d + (d+1)/(d+2)·A_{d+1}) X − (d+1)(q+1)(A_d + A_{d+1}/(d+2)) + (q−1)C(2d+2, d)`.
pub fn genus2_quadratic(w: &WeightEnumerator) -> Result<ExactPoly> {
    let class = require_genus(w, 2)?;
    let d = class.d;
    let q = w.q();
    let (ad, ad1) = (w.coeff(d), w.coeff(d + 1));
    let dd = int(d as i64);
    let d1 = &dd + int(1);
    let d2 = &dd + int(2);
    let linear = -((&dd - q) * &ad + &d1 / &d2 * &ad1);
    let constant = -(&d1 * (q + int(1)) * (&ad + &ad1 / &d2))
        + (q - int(1)) * Rational::from_integer(crate::exactnum::binomial(2 * d as u64 + 2, d as i64));
    Ok(Poly::new(vec![constant, linear, ad]))
}

pub fn rh_genus2(w: &WeightEnumerator) -> Result<RhVerdict> {
    let quad = genus2_quadratic(w)?;
    let (lo, hi) = criterion_interval(w.q())?;
    let holds = all_roots_in_closed(&quad, &lo, &hi)?;
    Ok(RhVerdict {
        holds,
        method: Method::Genus2,
        witness: Witness {
            roots_approx: real_sorted(numeric_roots(&quad)),
            polynomial: Some(quad),
            interval: Some((lo, hi)),
            ..Witness::default()
        },
    })
}

/// Coefficients of the genus-three criterion cubic `f_3X³ + f_2X² + f_1X + f_0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Genus3Cubic {
    pub f3: Rational,
    pub f2: Rational,
    pub f1: Rational,
    pub f0: Rational,
}

impl Genus3Cubic {
    pub fn to_poly(&self) -> ExactPoly {
        Poly::new(vec![self.f0.clone(), self.f1.clone(), self.f2.clone(), self.f3.clone()])
    }
}

pub fn genus3_cubic(w: &WeightEnumerator) -> Result<Genus3Cubic> {
    let class = require_genus(w, 3)?;
    let d = class.d;
    let q = w.q();
    let (ad, ad1, ad2) = (w.coeff(d), w.coeff(d + 1), w.coeff(d + 2));
    let dd = int(d as i64);
    let d1 = &dd + int(1);
    let d2 = &dd + int(2);
    let d3 = &dd + int(3);
    let d4 = &dd + int(4);
    let half = rat(1, 2);
    let q1 = q + int(1);
    let r1 = &d1 / &d4;
    let r2 = &d1 * &d2 / (&d3 * &d4);
    let f3 = ad.clone();
    let f2 = (q - &dd) * &ad - &r1 * &ad1;
    let f1 = &half * (&dd * &dd - int(2) * q * &dd + &dd - int(6) * q) * &ad
        + (&dd - q + int(1)) * &r1 * &ad1
        + &r2 * &ad2;
    let f0 = &half * &q1 * (&dd * &dd + int(3) * &dd - int(4) * q + int(2)) * &ad
        + &q1 * &d1 * &d2 * &ad1 / &d4
        + &q1 * &r2 * &ad2
        - (q - int(1)) * Rational::from_integer(crate::exactnum::binomial(2 * d as u64 + 4, d as i64 + 4));
    Ok(Genus3Cubic { f3, f2, f1, f0 })
}

pub fn rh_genus3(w: &WeightEnumerator) -> Result<RhVerdict> {
    let cubic = genus3_cubic(w)?.to_poly();
    let (lo, hi) = criterion_interval(w.q())?;
    let holds = all_roots_in_closed(&cubic, &lo, &hi)?;
    Ok(RhVerdict {
        holds,
        method: Method::Genus3,
        witness: Witness {
            roots_approx: real_sorted(numeric_roots(&cubic)),
            polynomial: Some(cubic),
            interval: Some((lo, hi)),
            ..Witness::default()
        },
    })
}

/// Outcome of the discriminant / critical-point / endpoint-sign test.
#[derive(Debug, Clone, PartialEq)]
pub struct CubicProcedure {
    pub holds: bool,
    pub discriminant: Rational,
    /// First failed condition.
    pub violated: Option<String>,
}

/// Decides whether all roots of a cubic lie in `[−2√q, 2√q]` without Sturm
/// sequences: with positive leading coefficient, the answer is yes iff the
/// discriminant is nonnegative, both critical points lie in the interval,
/// the value at `−2√q` is ≤ 0 and the value at `2√q` is ≥ 0.
pub fn cubic_in_interval_procedure(cubic: &ExactPoly, q: &Rational) -> Result<CubicProcedure> {
    if cubic.degree() != Some(3) {
        return domain(format!("expected a cubic, got degree {:?}", cubic.degree()));
    }
    let p = if cubic.leading().is_negative() {
        cubic.neg()
    } else {
        cubic.clone()
    };
    let (lo, hi) = criterion_interval(q)?;
    let disc = discriminant(&p)?;
    let fail = |why: &str| {
        Ok(CubicProcedure {
            holds: false,
            discriminant: disc.clone(),
            violated: Some(why.to_string()),
        })
    };
    if disc.is_negative() {
        return fail("D < 0");
    }
    let (a, b, c) = (p.coeff(3), p.coeff(2), p.coeff(1));
    // p′ = 3aX² + 2bX + c
    let deriv = p.derivative();
    let deriv_disc = int(4) * &b * &b - int(12) * &a * &c;
    if deriv_disc.is_negative() {
        // Monotone cubic: one real root and a complex pair, so D < 0 above
        // already rejected it. Kept for totality.
        return fail("critical points are not real");
    }
    let vertex = QuadExt::rational(-&b / (int(3) * &a));
    let vertex_inside = vertex.sub(&lo).sign() >= 0 && hi.sub(&vertex).sign() >= 0;
    let deriv_lo = deriv.sign_at(&lo);
    let deriv_hi = deriv.sign_at(&hi);
    if !(vertex_inside && deriv_lo >= 0 && deriv_hi >= 0) {
        return fail("critical points outside the interval");
    }
    if p.sign_at(&lo) > 0 {
        return fail("value at lower endpoint is positive");
    }
    if p.sign_at(&hi) < 0 {
        return fail("value at upper endpoint is negative");
    }
    Ok(CubicProcedure {
        holds: true,
        discriminant: disc,
        violated: None,
    })
}

pub fn rh_cubic_procedure(w: &WeightEnumerator) -> Result<RhVerdict> {
    let cubic = genus3_cubic(w)?.to_poly();
    let outcome = cubic_in_interval_procedure(&cubic, w.q())?;
    Ok(RhVerdict {
        holds: outcome.holds,
        method: Method::CubicProcedure,
        witness: Witness {
            roots_approx: real_sorted(numeric_roots(&cubic)),
            polynomial: Some(cubic),
            interval: Some(criterion_interval(w.q())?),
            violated: outcome.violated,
            ..Witness::default()
        },
    })
}

pub fn decide(w: &WeightEnumerator, method: Method, tol: &Rational) -> Result<RhVerdict> {
    match method {
        Method::DirectExact => rh_direct_exact(w),
        Method::DirectNumeric => rh_direct_numeric(w, tol),
        Method::Genus1 => rh_genus1(w),
        Method::Genus2 => rh_genus2(w),
        Method::Genus3 => rh_genus3(w),
        Method::CubicProcedure => rh_cubic_procedure(w),
    }
}

/// Every applicable method, exact direct first. Exact verdicts must agree
/// with the direct method; the numeric verdict is reported but advisory.
pub fn decide_all(w: &WeightEnumerator, tol: &Rational) -> Result<Vec<RhVerdict>> {
    let (_, genus) = require_self_dual(w)?;
    let mut out = Vec::new();
    for m in Method::ALL.into_iter().filter(|m| m.applies_to_genus(genus)) {
        out.push(decide(w, m, tol)?);
    }
    let reference = out[0].holds;
    if let Some(v) = out
        .iter()
        .find(|v| !v.witness.advisory && v.holds != reference)
    {
        return Err(Error::Inconsistent(format!(
            "{} says {} but direct-exact says {}",
            v.method, v.holds, reference
        )));
    }
    Ok(out)
}

/// Criterion verdict cross-checked against the direct method, for genus ≤ 3.
pub fn cross_checked(w: &WeightEnumerator) -> Result<RhVerdict> {
    let direct = rh_direct_exact(w)?;
    let (_, genus) = require_self_dual(w)?;
    let criterion = match genus {
        1 => Some(rh_genus1(w)?),
        2 => Some(rh_genus2(w)?),
        3 => Some(rh_genus3(w)?),
        _ => None,
    };
    if let Some(c) = criterion {
        if c.holds != direct.holds {
            return Err(Error::Inconsistent(format!(
                "{} says {} but direct-exact says {} at n = {}, q = {}",
                c.method,
                c.holds,
                direct.holds,
                w.n(),
                w.q()
            )));
        }
    }
    Ok(direct)
}
