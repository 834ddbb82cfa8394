//! Duursma zeta polynomials.
//!
//! For an enumerator `W` of degree `n` and minimum distance `d`, the zeta
//! polynomial is the unique `P(T)` of degree at most `n − d` with
//!
//! ```text
//! [T^{n−d}]  P(T) / ((1 − T)(1 − qT)) · (y(1 − T) + xT)^n  =  (W(x, y) − x^n) / (q − 1).
//! ```
//!
//! Writing `Z(T) = Σ z_k T^k` for the series on the left, matching the
//! coefficient of `x^{n−d−j} y^{d+j}` gives a lower-triangular system in
//! `z_0, z_1, …` whose diagonal entries are `C(n, d + j)`.

use num_traits::{One, Zero};
use serde_json::{Map, Value};

use crate::enumerator::{classify, SelfDuality, WeightEnumerator};
use crate::error::{domain, Error, Result};
use crate::exactnum::{int, BinomialTable, Rational};
use crate::poly::{ExactPoly, Poly};

#[derive(Debug, Clone, PartialEq)]
pub struct ZetaData {
    p: ExactPoly,
    q: Rational,
    n: usize,
    d: usize,
    /// Set only for self-dual input.
    genus: Option<usize>,
}

/// `h(U)` of degree `g` with `P(T) = T^g · h(T + 1/(qT))`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetrizedZeta {
    pub h: ExactPoly,
    pub q: Rational,
}

impl ZetaData {
    /// Wraps an explicit polynomial, e.g. one produced outside this crate.
    pub fn from_parts(p: ExactPoly, q: Rational, n: usize, d: usize, genus: Option<usize>) -> Self {
        ZetaData { p, q, n, d, genus }
    }

    pub fn p(&self) -> &ExactPoly {
        &self.p
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn genus(&self) -> Option<usize> {
        self.genus
    }

    /// Leading half `a_0..a_g` of the coefficients (self-dual input only).
    pub fn a(&self) -> Option<Vec<Rational>> {
        self.genus.map(|g| (0..=g).map(|i| self.p.coeff(i)).collect())
    }

    /// `{"P": [...], "g": 3, "q": "2"}`
    pub fn to_json(&self) -> Value {
        let width = match self.genus {
            Some(g) => 2 * g + 1,
            None => self.p.coeffs().len(),
        };
        let coeffs = (0..width)
            .map(|i| Value::String(self.p.coeff(i).to_string()))
            .collect();
        let mut obj = Map::new();
        obj.insert("P".into(), Value::Array(coeffs));
        obj.insert("g".into(), self.genus.map_or(Value::Null, Value::from));
        obj.insert("q".into(), Value::String(self.q.to_string()));
        Value::Object(obj)
    }
}

pub fn zeta_polynomial(w: &WeightEnumerator) -> Result<ZetaData> {
    let class = classify(w)?;
    if !class.admits_zeta() {
        return domain(format!(
            "zeta polynomial needs d, d⊥ ≥ 2 (d = {}, d⊥ = {})",
            class.d,
            class.d_perp.map_or("none".to_string(), |x| x.to_string())
        ));
    }
    let genus = match class.genus {
        // Only W^σ = +W carries the functional equation used downstream.
        Some(_) if class.selfdual != Some(SelfDuality::Plus) => None,
        Some(g) if g >= 0 => Some(g as usize),
        Some(g) => return domain(format!("negative genus {g}")),
        None => None,
    };
    let (n, d, q) = (w.n(), class.d, w.q().clone());
    let p = solve_triangular(w, d);
    if let Some(g) = genus {
        if p.degree().unwrap_or(0) != 2 * g {
            return Err(Error::Inconsistent(format!(
                "self-dual enumerator of genus {g} produced zeta polynomial of degree {:?}",
                p.degree()
            )));
        }
    }
    Ok(ZetaData { p, q, n, d, genus })
}

fn solve_triangular(w: &WeightEnumerator, d: usize) -> ExactPoly {
    let n = w.n();
    let q = w.q();
    let span = n - d;
    let table = BinomialTable::new(n);
    let qm1 = q - Rational::one();
    // weighted[k] = C(n, d + k) · z_k
    let mut weighted: Vec<Rational> = Vec::with_capacity(span + 1);
    let mut z: Vec<Rational> = Vec::with_capacity(span + 1);
    for j in 0..=span {
        let mut rhs = w.coeff(d + j) / &qm1;
        for (k, wk) in weighted.iter().enumerate() {
            let c = table.rational(span - k, (j - k) as i64);
            if (j - k) % 2 == 1 {
                rhs += c * wk;
            } else {
                rhs -= c * wk;
            }
        }
        let pivot = table.rational(n, (d + j) as i64);
        let zj = rhs / &pivot;
        weighted.push(&zj * pivot);
        z.push(zj);
    }
    // P = (1 − T)(1 − qT)·Z, truncated at T^{n−d}
    let one_plus_q = q + Rational::one();
    let coeffs = (0..=span)
        .map(|k| {
            let mut c = z[k].clone();
            if k >= 1 {
                c -= &one_plus_q * &z[k - 1];
            }
            if k >= 2 {
                c += q * &z[k - 2];
            }
            c
        })
        .collect();
    Poly::new(coeffs)
}

/// `P_i = q^{i−g} P_{2g−i}` for all `i`, with `deg P = 2g`.
pub fn mirror_holds(p: &ExactPoly, q: &Rational, g: usize) -> bool {
    if p.degree() != Some(2 * g) {
        return false;
    }
    (0..=2 * g).all(|i| {
        let e = i as i64 - g as i64;
        let pw = num_traits::pow(q.clone(), e.unsigned_abs() as usize);
        let pw = if e >= 0 { pw } else { pw.recip() };
        p.coeff(i) == pw * p.coeff(2 * g - i)
    })
}

pub fn functional_equation_check(z: &ZetaData) -> bool {
    z.genus.is_some_and(|g| mirror_holds(&z.p, &z.q, g))
}

pub fn symmetrize(z: &ZetaData) -> Result<SymmetrizedZeta> {
    let Some(g) = z.genus else {
        return domain("symmetrization needs a self-dual zeta polynomial");
    };
    if !functional_equation_check(z) {
        return domain("zeta polynomial fails the functional equation");
    }
    let q = &z.q;
    let q_inv = q.recip();
    let mut q_inv_pows = vec![Rational::one()];
    for _ in 0..g {
        let next = q_inv_pows.last().unwrap() * &q_inv;
        q_inv_pows.push(next);
    }
    let table = BinomialTable::new(g);
    let mut rest: Vec<Rational> = (0..=2 * g).map(|i| z.p.coeff(i)).collect();
    let mut h = vec![Rational::zero(); g + 1];
    // T^g·U^k = T^{g−k}(T² + 1/q)^k has top term T^{g+k}
    for k in (0..=g).rev() {
        let c = rest[g + k].clone();
        if !c.is_zero() {
            for t in 0..=k {
                rest[g - k + 2 * t] -= &c * table.rational(k, t as i64) * &q_inv_pows[k - t];
            }
        }
        h[k] = c;
    }
    if rest.iter().any(|c| !c.is_zero()) {
        return Err(Error::Inconsistent(
            "symmetrization left a nonzero remainder".into(),
        ));
    }
    Ok(SymmetrizedZeta {
        h: Poly::new(h),
        q: q.clone(),
    })
}

impl SymmetrizedZeta {
    /// `T^g · h(T + 1/(qT))` as a polynomial in `T`.
    pub fn expand(&self) -> ExactPoly {
        let g = self.h.degree().unwrap_or(0);
        let base = Poly::new(vec![self.q.recip(), int(0), int(1)]);
        let mut out = ExactPoly::zero();
        for k in 0..=g {
            let term = Poly::monomial(self.h.coeff(k), g - k).mul(&base.pow(k as u32));
            out = out.add(&term);
        }
        out
    }
}

/// `a_0..a_3` of a genus-three self-dual enumerator from `A_d, A_{d+1},
/// A_{d+2}`, with `α_{d+i} = A_{d+i} / ((q − 1)·C(n, d + i))`.
pub fn genus3_coeffs(w: &WeightEnumerator) -> Result<[Rational; 4]> {
    let class = classify(w)?;
    if class.selfdual != Some(SelfDuality::Plus) || class.genus != Some(3) {
        return domain(format!(
            "closed-form coefficients need a self-dual enumerator of genus 3, got genus {:?}",
            class.genus
        ));
    }
    let (n, d, q) = (w.n(), class.d, w.q());
    let qm1 = q - Rational::one();
    let alpha = |i: usize| w.coeff(d + i) / (&qm1 * Rational::from_integer(crate::exactnum::binomial(n as u64, (d + i) as i64)));
    let (al0, al1, al2) = (alpha(0), alpha(1), alpha(2));
    let dd = int(d as i64);
    let half = Rational::new(1.into(), 2.into());
    let a0 = al0.clone();
    let a1 = (&dd - q) * &al0 + &al1;
    let a2 = &half * &dd * (&dd - int(2) * q + int(1)) * &al0 + (&dd - q + int(1)) * &al1 + &al2;
    let a3 = -&half * (&dd + int(1)) * (&dd * q + &dd - int(2) * q + int(2)) * &al0
        - (q * &dd + &dd + int(2)) * &al1
        - (q + int(1)) * &al2
        + int(1);
    Ok([a0, a1, a2, a3])
}

/// `a_0X³ − a_1X² + (a_2 − 3a_0q)X − a_3 + 2a_1q`, whose roots are `q·b_i`.
pub fn reduced_cubic(a: &[Rational; 4], q: &Rational) -> ExactPoly {
    Poly::new(vec![
        -&a[3] + int(2) * &a[1] * q,
        &a[2] - int(3) * &a[0] * q,
        -&a[1],
        a[0].clone(),
    ])
}
