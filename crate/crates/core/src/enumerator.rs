//! Weight enumerators `W(x, y) = x^n + Σ A_i x^{n−i} y^i` with a base
//! parameter `q`, the MacWilliams transform, and the binomial-moment
//! identities.

use num_traits::{One, Signed, Zero};
use serde_json::{Map, Value};

use crate::error::{domain, Error, Result};
use crate::exactnum::{int, parse_rational, sqrt_embed, BinomialTable, Field, QuadExt, Rational};
use crate::poly::{ExactPoly, Poly};

/// A formal weight enumerator. Coefficients are arbitrary rationals: no
/// codeword-count positivity is assumed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightEnumerator {
    q: Rational,
    n: usize,
    a: Vec<Rational>,
}

/// Sign `s` in `W^{σ_q} = s·W`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SelfDuality {
    Plus,
    Minus,
}

impl SelfDuality {
    pub fn as_i32(self) -> i32 {
        match self {
            SelfDuality::Plus => 1,
            SelfDuality::Minus => -1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub selfdual: Option<SelfDuality>,
    /// Least positive index with `A_d ≠ 0`.
    pub d: usize,
    /// Least positive index with a nonzero coefficient in `W^{σ_q}`;
    /// `None` when the transform is a pure power of `x`.
    pub d_perp: Option<usize>,
    /// `n/2 + 1 − d`, set only for self-dual enumerators of even degree.
    pub genus: Option<i64>,
}

impl Classification {
    pub fn is_self_dual(&self) -> bool {
        self.selfdual.is_some()
    }

    /// The standing assumption `d, d⊥ ≥ 2` for zeta functions.
    pub fn admits_zeta(&self) -> bool {
        self.d >= 2 && self.d_perp.is_some_and(|dp| dp >= 2)
    }
}

fn check_q(q: &Rational) -> Result<()> {
    if !q.is_positive() {
        return domain(format!("q must be positive, got {q}"));
    }
    if q.is_one() {
        return domain("q must differ from 1");
    }
    Ok(())
}

impl WeightEnumerator {
    /// `a[i]` is the coefficient of `x^{n−i} y^i`; missing trailing entries
    /// are zero.
    pub fn new(q: Rational, n: usize, mut a: Vec<Rational>) -> Result<Self> {
        check_q(&q)?;
        if n == 0 {
            return domain("enumerator degree must be positive");
        }
        if a.len() > n + 1 {
            if a[n + 1..].iter().any(|c| !c.is_zero()) {
                return domain(format!("coefficient index beyond degree {n}"));
            }
            a.truncate(n + 1);
        }
        a.resize(n + 1, Rational::zero());
        if !a[0].is_one() {
            return domain(format!("A_0 must be 1, got {}", a[0]));
        }
        if a[1..].iter().all(Zero::is_zero) {
            return domain("enumerator has no nonzero A_i with i ≥ 1");
        }
        Ok(WeightEnumerator { q, n, a })
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.a
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.a.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn min_distance(&self) -> usize {
        self.a
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .expect("constructor guarantees a nonzero coefficient")
    }

    /// Parses the JSON enumerator format
    /// `{"q": "21/20", "n": 8, "A": {"0": "1", "2": "4", ...}}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("enumerator JSON: {e}")))?;
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Parse("enumerator JSON must be an object".into()))?;
        let q = json_rational(obj.get("q").ok_or_else(|| Error::Parse("missing \"q\"".into()))?)?;
        let n = obj
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("missing or invalid \"n\"".into()))? as usize;
        let coeffs = obj
            .get("A")
            .and_then(Value::as_object)
            .ok_or_else(|| Error::Parse("missing or invalid \"A\"".into()))?;
        let mut a = vec![Rational::zero(); n + 1];
        for (k, v) in coeffs {
            let i: usize = k
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient index {k:?}")))?;
            if i > n {
                return Err(Error::Parse(format!("coefficient index {i} exceeds n = {n}")));
            }
            a[i] = json_rational(v)?;
        }
        WeightEnumerator::new(q, n, a)
    }

    /// JSON form with nonzero coefficients only, keys in increasing index.
    pub fn to_json(&self) -> Value {
        let mut coeffs = Map::new();
        for (i, c) in self.a.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            coeffs.insert(i.to_string(), Value::String(c.to_string()));
        }
        let mut obj = Map::new();
        obj.insert("q".into(), Value::String(self.q.to_string()));
        obj.insert("n".into(), Value::from(self.n));
        obj.insert("A".into(), Value::Object(coeffs));
        Value::Object(obj)
    }

    /// `W` as a polynomial in `y` after setting `x = 1`.
    pub fn dehomogenized(&self) -> ExactPoly {
        Poly::new(self.a.clone())
    }
}

fn json_rational(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => parse_rational(&n.to_string()),
        _ => Err(Error::Parse(format!("expected a rational, got {v}"))),
    }
}

/// Coefficients of `W^{σ_q}(x, y) = W((x + (q−1)y)/√q, (x − y)/√q)`.
///
/// For even `n` every entry is rational; for odd `n` they share one factor
/// `1/√q` and live in `ℚ(√r)`.
pub fn macwilliams(w: &WeightEnumerator) -> Result<Vec<QuadExt>> {
    let coeffs: Vec<QuadExt> = w.a.iter().cloned().map(QuadExt::rational).collect();
    macwilliams_coeffs(&w.q, &coeffs)
}

/// The same transform on an arbitrary coefficient vector over `ℚ(√r)`,
/// index `i` holding the coefficient of `x^{n−i}y^i`.
pub fn macwilliams_coeffs(q: &Rational, coeffs: &[QuadExt]) -> Result<Vec<QuadExt>> {
    check_q(q)?;
    let Some(n) = coeffs.len().checked_sub(1) else {
        return domain("empty coefficient vector");
    };
    let x_sub: Poly<QuadExt> = Poly::new(vec![Rational::one(), q - Rational::one()]).lift();
    let y_sub: Poly<QuadExt> = Poly::new(vec![Rational::one(), -Rational::one()]).lift();
    // Homogeneous Horner: S_i = S_{i−1}·X + A_i·Y^i
    let mut acc = Poly::constant(coeffs[0].clone());
    let mut y_pow = Poly::constant(QuadExt::one_elt());
    for c in &coeffs[1..] {
        y_pow = y_pow.mul(&y_sub);
        acc = acc.mul(&x_sub).add(&y_pow.scale(c));
    }
    let half = n / 2;
    let rational_factor = Rational::one() / num_traits::pow(q.clone(), half);
    let factor = if n % 2 == 0 {
        QuadExt::rational(rational_factor)
    } else {
        sqrt_embed(q)?.inv().scale(&rational_factor)
    };
    Ok((0..=n).map(|j| acc.coeff(j).mul(&factor)).collect())
}

pub fn classify(w: &WeightEnumerator) -> Result<Classification> {
    let b = macwilliams(w)?;
    let a: Vec<QuadExt> = w.a.iter().cloned().map(QuadExt::rational).collect();
    let selfdual = if b == a {
        Some(SelfDuality::Plus)
    } else if b.iter().zip(&a).all(|(x, y)| *x == y.neg()) {
        Some(SelfDuality::Minus)
    } else {
        None
    };
    let d = w.min_distance();
    let d_perp = b
        .iter()
        .enumerate()
        .skip(1)
        .find(|(_, c)| !c.is_zero_elt())
        .map(|(i, _)| i);
    let genus = match selfdual {
        Some(_) if w.n.is_multiple_of(2) => Some((w.n / 2) as i64 + 1 - d as i64),
        _ => None,
    };
    Ok(Classification {
        selfdual,
        d,
        d_perp,
        genus,
    })
}

/// LHS − RHS of the binomial-moment identity
/// `Σ_{i≤n−j} C(n−i, j)A_i = q^{n/2−j} Σ_{i≤j} C(n−i, n−j)A_i`.
pub fn moment_residual(w: &WeightEnumerator, j: usize) -> Result<Rational> {
    let n = w.n;
    if n % 2 == 1 {
        return domain("binomial moments need even n");
    }
    if j > n {
        return domain(format!("moment index {j} exceeds n = {n}"));
    }
    let table = BinomialTable::new(n);
    let lhs: Rational = (0..=n - j)
        .map(|i| table.rational(n - i, j as i64) * &w.a[i])
        .sum();
    let inner: Rational = (0..=j)
        .map(|i| table.rational(n - i, (n - j) as i64) * &w.a[i])
        .sum();
    let exponent = n as i64 / 2 - j as i64;
    let power = num_traits::pow(w.q.clone(), exponent.unsigned_abs() as usize);
    let power = if exponent >= 0 { power } else { power.recip() };
    Ok(lhs - power * inner)
}

/// `A_{d+3}` of a genus-three self-dual enumerator, from the moment identity
/// with `n = 2d + 4`, `j = d + 1`.
pub fn complete_ad3(
    q: &Rational,
    d: usize,
    a_d: &Rational,
    a_d1: &Rational,
    a_d2: &Rational,
) -> Result<Rational> {
    if d < 2 {
        return domain(format!("minimum distance must be at least 2, got {d}"));
    }
    check_q(q)?;
    let c = |n: usize, k: usize| Rational::from_integer(crate::exactnum::binomial(n as u64, k as i64));
    let dq = int(d as i64);
    Ok((q - Rational::one()) * c(2 * d + 4, d + 1)
        + (q * (&dq + int(4)) - c(d + 4, 3)) * a_d
        + (q - c(d + 3, 2)) * a_d1
        - (dq + int(2)) * a_d2)
}

/// `W_{n,q} = (x² + (q−1)y²)^n`, of degree `2n`.
pub fn family(n: usize, q: &Rational) -> Result<WeightEnumerator> {
    check_q(q)?;
    if n == 0 {
        return domain("family index must be positive");
    }
    let c = q - Rational::one();
    let mut a = vec![Rational::zero(); 2 * n + 1];
    let mut pow = Rational::one();
    for (i, slot) in a.iter_mut().step_by(2).enumerate() {
        *slot = Rational::from_integer(crate::exactnum::binomial(n as u64, i as i64)) * &pow;
        pow *= &c;
    }
    WeightEnumerator::new(q.clone(), 2 * n, a)
}

/// Coefficients `z_0..z_len` of `P(T) / ((1 − T)(1 − qT))`.
pub(crate) fn zeta_series(p: &ExactPoly, q: &Rational, len: usize) -> Vec<Rational> {
    // 1/((1−T)(1−qT)) = Σ (1 + q + … + q^m) T^m
    let mut geometric = Vec::with_capacity(len + 1);
    let mut acc = Rational::zero();
    let mut pw = Rational::one();
    for _ in 0..=len {
        acc += &pw;
        geometric.push(acc.clone());
        pw *= q;
    }
    (0..=len)
        .map(|k| (0..=k).map(|j| p.coeff(j) * &geometric[k - j]).sum())
        .collect()
}

/// The enumerator whose zeta polynomial is `p`: `W = x^n + (q−1)·F` with `F`
/// the coefficient of `T^{n−d}` in `P(T)/((1−T)(1−qT))·(y(1−T) + xT)^n`.
pub fn from_zeta(p: &ExactPoly, n: usize, d: usize, q: &Rational) -> Result<WeightEnumerator> {
    check_q(q)?;
    if d < 1 || d > n {
        return domain(format!("minimum distance {d} outside 1..={n}"));
    }
    let span = n - d;
    if p.degree().is_some_and(|deg| deg > span) {
        return domain(format!("zeta polynomial degree exceeds n − d = {span}"));
    }
    let z = zeta_series(p, q, span);
    let table = BinomialTable::new(n);
    let qm1 = q - Rational::one();
    let mut a = vec![Rational::zero(); n + 1];
    a[0] = Rational::one();
    for (i, slot) in a.iter_mut().enumerate().skip(d) {
        // s = n − d − k ranges over n − i ..= n − d
        let mut sum = Rational::zero();
        for (k, zk) in z.iter().enumerate().take(i - d + 1) {
            let s = span - k;
            let mut term = Rational::from_integer(table.get(n, s as i64) * table.get(s, (n - i) as i64));
            if (s + i - n) % 2 == 1 {
                term = -term;
            }
            sum += term * zk;
        }
        *slot = sum * &qm1;
    }
    if a[d].is_zero() {
        return domain(format!("declared minimum distance {d} but A_{d} = 0"));
    }
    WeightEnumerator::new(q.clone(), n, a)
}

/// `C(n, k)` as a rational, for callers outside the hot loops.
pub fn binomial_rational(n: usize, k: i64) -> Rational {
    Rational::from_integer(crate::exactnum::binomial(n as u64, k))
}
