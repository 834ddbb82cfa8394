//! Exact scalars: arbitrary-precision rationals and elements `a + b·√r` of a
//! real quadratic field.
//!
//! [`Rational`] is `num_rational::BigRational`, which keeps every value
//! reduced with a positive denominator. [`QuadExt`] carries its radicand
//! explicitly; `r = 1` marks a purely rational value and is compatible with
//! every other radicand.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{domain, Error, Result};
use crate::poly::{integer_coeffs, Poly};

pub type Rational = BigRational;

/// Trial-division bound used when extracting square factors of a radicand.
const TRIAL_DIVISION_LIMIT: u64 = 1_000_000;

/// The exact scalar operations the polynomial machinery needs.
///
/// Both implementors are ordered fields, so `signum` is part of the
/// contract. Operations on [`QuadExt`] panic if radicands disagree; callers
/// that accept user input check compatibility first.
pub trait Field: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero_elt() -> Self;
    fn one_elt() -> Self;
    fn is_zero_elt(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;
    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }
    fn from_rational(q: &Rational) -> Self;
    /// Exact sign: -1, 0 or +1.
    fn sign(&self) -> i32;
    fn to_f64(&self) -> f64;
    /// A positive scalar that, divided out of `coeffs`, leaves a smaller
    /// representative of the same polynomial up to positive scaling.
    fn normalizer(_coeffs: &[Self]) -> Option<Self> {
        None
    }
    /// Errors if the two values cannot be combined.
    fn check_compatible(&self, _other: &Self) -> Result<()> {
        Ok(())
    }
    /// `−(prev mod cur)` up to a positive factor: the next Sturm chain entry.
    fn sturm_remainder(prev: &Poly<Self>, cur: &Poly<Self>) -> Poly<Self> {
        prev.rem(cur).neg().normalized()
    }
}

impl Field for Rational {
    fn zero_elt() -> Self {
        Zero::zero()
    }
    fn one_elt() -> Self {
        One::one()
    }
    fn is_zero_elt(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        self.recip()
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn sign(&self) -> i32 {
        sign_of(self)
    }
    fn to_f64(&self) -> f64 {
        rational_to_f64(self)
    }
    fn normalizer(coeffs: &[Self]) -> Option<Self> {
        let c = content(coeffs);
        if Zero::is_zero(&c) || One::is_one(&c) {
            None
        } else {
            Some(c)
        }
    }
    /// Integer pseudo-remainder with the content stripped.
    fn sturm_remainder(prev: &Poly<Self>, cur: &Poly<Self>) -> Poly<Self> {
        let b = integer_coeffs(cur.coeffs());
        let mut r = integer_coeffs(prev.coeffs());
        let n = b.len() - 1;
        let lc = &b[n];
        let mut steps = 0u32;
        while r.len() > n {
            let top = r.pop().expect("nonempty");
            let k = r.len() - n;
            for x in r.iter_mut() {
                *x *= lc;
            }
            for (j, bj) in b[..n].iter().enumerate() {
                if !Zero::is_zero(bj) {
                    r[k + j] -= &top * bj;
                }
            }
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
            steps += 1;
        }
        // r = lc^steps · (prev mod cur)
        let flip = !(lc.is_negative() && steps % 2 == 1);
        let mut g = BigInt::zero();
        for x in &r {
            g = g.gcd(x);
            if g.is_one() {
                break;
            }
        }
        Poly::new(
            r.into_iter()
                .map(|x| {
                    let x = if g.is_zero() || g.is_one() { x } else { x / &g };
                    Rational::from_integer(if flip { -x } else { x })
                })
                .collect(),
        )
    }
}

/// Positive rational `c` such that `coeffs / c` is a primitive integer vector.
pub fn content(coeffs: &[Rational]) -> Rational {
    let mut num_gcd = BigInt::zero();
    let mut den_lcm = BigInt::one();
    for c in coeffs.iter().filter(|c| !Zero::is_zero(*c)) {
        num_gcd = num_gcd.gcd(c.numer());
        den_lcm = den_lcm.lcm(c.denom());
    }
    if num_gcd.is_zero() {
        return Rational::zero();
    }
    Rational::new(num_gcd, den_lcm)
}

pub(crate) fn sign_of(q: &Rational) -> i32 {
    match q.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Nearest `f64`, robust to numerators and denominators beyond `f64` range.
pub fn rational_to_f64(q: &Rational) -> f64 {
    if let (Some(n), Some(d)) = (q.numer().to_f64(), q.denom().to_f64()) {
        if n.is_finite() && d.is_finite() {
            return n / d;
        }
    }
    let nb = q.numer().bits() as i64;
    let db = q.denom().bits() as i64;
    let shift = nb - db - 60;
    let scaled = if shift >= 0 {
        q.numer() / (q.denom() << shift as usize)
    } else {
        (q.numer() << (-shift) as usize) / q.denom()
    };
    scaled.to_f64().unwrap_or(f64::NAN) * 2f64.powi(shift as i32)
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"`, `"p"`, or a decimal such as `"1.05"` / `"1e-6"` into an
/// exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(Rational::new(n, d));
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (negative, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = BigInt::from_str(&format!("0{whole}{frac}")).map_err(|_| bad())?;
    let scale = exponent - frac.len() as i32;
    let ten = BigInt::from(10u32);
    let mut value = if scale >= 0 {
        Rational::from_integer(digits * num_traits::pow(ten, scale as usize))
    } else {
        Rational::new(digits, num_traits::pow(ten, (-scale) as usize))
    };
    if negative {
        value = -value;
    }
    Ok(value)
}

/// Decimal rendering with round-half-even to `digits` fractional places.
pub fn format_decimal(q: &Rational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10u32), digits);
    let scaled = q * Rational::from_integer(scale.clone());
    let floor = scaled.floor().to_integer();
    let frac = &scaled - Rational::from_integer(floor.clone());
    let half = rat(1, 2);
    let rounded = if frac > half || (frac == half && floor.is_odd()) {
        floor + 1
    } else {
        floor
    };
    let negative = rounded.is_negative();
    let abs = rounded.abs().to_string();
    let body = if digits == 0 {
        abs
    } else {
        let padded = format!("{abs:0>width$}", width = digits + 1);
        let (w, f) = padded.split_at(padded.len() - digits);
        format!("{w}.{f}")
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

pub fn format_f64(x: f64, digits: usize) -> String {
    match Rational::from_float(x) {
        Some(q) => format_decimal(&q, digits),
        None => x.to_string(),
    }
}

/// `a + b·√r` with `r` a positive square-free integer.
///
/// Canonical form: whenever `b = 0` the radicand is stored as 1, so derived
/// equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExt {
    a: Rational,
    b: Rational,
    r: BigInt,
}

impl QuadExt {
    /// Builds `a + b·√r`. `r` must be positive and square-free; `r = 1`
    /// folds `b` into the rational part.
    pub fn new(a: Rational, b: Rational, r: BigInt) -> Self {
        assert!(r.is_positive(), "radicand must be positive");
        if r.is_one() {
            return QuadExt::rational(a + b);
        }
        if Zero::is_zero(&b) {
            return QuadExt::rational(a);
        }
        QuadExt { a, b, r }
    }

    pub fn rational(a: Rational) -> Self {
        QuadExt {
            a,
            b: Rational::zero(),
            r: BigInt::one(),
        }
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn radicand(&self) -> &BigInt {
        &self.r
    }

    pub fn is_rational(&self) -> bool {
        self.r.is_one()
    }

    /// The rational value, if `b = 0`.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.a)
    }

    /// `a − b·√r`.
    pub fn conjugate(&self) -> Self {
        QuadExt {
            a: self.a.clone(),
            b: -&self.b,
            r: self.r.clone(),
        }
    }

    /// `a² − r·b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * Rational::from_integer(self.r.clone())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        QuadExt::new(&self.a * k, &self.b * k, self.r.clone())
    }

    /// Common radicand of two values, or an error if they live in different
    /// quadratic fields.
    pub fn common_radicand(&self, other: &QuadExt) -> Result<BigInt> {
        match (self.r.is_one(), other.r.is_one()) {
            (true, _) => Ok(other.r.clone()),
            (_, true) => Ok(self.r.clone()),
            _ if self.r == other.r => Ok(self.r.clone()),
            _ => Err(Error::IncompatibleRadicands(
                self.r.to_string(),
                other.r.to_string(),
            )),
        }
    }

    fn joint(&self, other: &QuadExt) -> BigInt {
        self.common_radicand(other)
            .unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Field for QuadExt {
    fn zero_elt() -> Self {
        QuadExt::rational(Rational::zero())
    }
    fn one_elt() -> Self {
        QuadExt::rational(Rational::one())
    }
    fn is_zero_elt(&self) -> bool {
        Zero::is_zero(&self.a) && Zero::is_zero(&self.b)
    }
    fn add(&self, other: &Self) -> Self {
        let r = self.joint(other);
        QuadExt::new(&self.a + &other.a, &self.b + &other.b, r)
    }
    fn sub(&self, other: &Self) -> Self {
        let r = self.joint(other);
        QuadExt::new(&self.a - &other.a, &self.b - &other.b, r)
    }
    fn mul(&self, other: &Self) -> Self {
        let r = self.joint(other);
        let rr = Rational::from_integer(r.clone());
        let a = &self.a * &other.a + &self.b * &other.b * rr;
        let b = &self.a * &other.b + &self.b * &other.a;
        QuadExt::new(a, b, r)
    }
    fn neg(&self) -> Self {
        QuadExt {
            a: -&self.a,
            b: -&self.b,
            r: self.r.clone(),
        }
    }
    fn inv(&self) -> Self {
        let n = self.norm();
        assert!(!Zero::is_zero(&n), "inverse of zero");
        self.conjugate().scale(&n.recip())
    }
    fn from_rational(q: &Rational) -> Self {
        QuadExt::rational(q.clone())
    }
    fn sign(&self) -> i32 {
        quad_sign(self)
    }
    fn check_compatible(&self, other: &Self) -> Result<()> {
        self.common_radicand(other).map(|_| ())
    }
    fn to_f64(&self) -> f64 {
        rational_to_f64(&self.a)
            + rational_to_f64(&self.b) * self.r.to_f64().unwrap_or(f64::NAN).sqrt()
    }
}

impl From<Rational> for QuadExt {
    fn from(q: Rational) -> Self {
        QuadExt::rational(q)
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadExt({self})")
    }
}

/// Renders as `a`, `b*sqrt(r)`, or `a+b*sqrt(r)`, e.g. `-2*sqrt(2)` or
/// `-23/5+1/5*sqrt(609)`.
impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.a);
        }
        let surd = if self.b.is_one() {
            format!("sqrt({})", self.r)
        } else if (-&self.b).is_one() {
            format!("-sqrt({})", self.r)
        } else {
            format!("{}*sqrt({})", self.b, self.r)
        };
        if Zero::is_zero(&self.a) {
            write!(f, "{surd}")
        } else if self.b.is_negative() {
            write!(f, "{}{surd}", self.a)
        } else {
            write!(f, "{}+{surd}", self.a)
        }
    }
}

/// Exact sign of `a + b·√r`.
pub fn quad_sign(x: &QuadExt) -> i32 {
    let sa = sign_of(&x.a);
    let sb = sign_of(&x.b);
    if sb == 0 || x.r.is_one() {
        return sign_of(&(&x.a + &x.b));
    }
    if sa == 0 || sa == sb {
        return sb;
    }
    // Opposite signs: the larger magnitude wins.
    let a2 = &x.a * &x.a;
    let b2r = &x.b * &x.b * Rational::from_integer(x.r.clone());
    match a2.cmp(&b2r) {
        std::cmp::Ordering::Greater => sa,
        std::cmp::Ordering::Less => sb,
        std::cmp::Ordering::Equal => 0,
    }
}

/// Splits a positive integer into `(c, r)` with `m = c²·r` and `r` square-free.
pub fn square_free_split(m: &BigInt) -> Result<(BigInt, BigInt)> {
    if !m.is_positive() {
        return domain(format!("square-free split of non-positive {m}"));
    }
    let mut rest = m.clone();
    let mut outside = BigInt::one();
    let mut radicand = BigInt::one();
    let mut p: u64 = 2;
    while p <= TRIAL_DIVISION_LIMIT {
        let bp = BigInt::from(p);
        if &bp * &bp > rest {
            break;
        }
        let mut exp = 0u32;
        while (&rest % &bp).is_zero() {
            rest /= &bp;
            exp += 1;
        }
        if exp > 0 {
            outside *= num_traits::pow(bp.clone(), (exp / 2) as usize);
            if exp % 2 == 1 {
                radicand *= &bp;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest.is_one() {
        return Ok((outside, radicand));
    }
    let root = rest.sqrt();
    if &root * &root == rest {
        return Ok((outside * root, radicand));
    }
    // With no prime factor below the limit, `rest` below limit³ has at most
    // two prime factors, and is not a perfect square, so it is square-free.
    let limit = BigInt::from(TRIAL_DIVISION_LIMIT);
    if rest < &limit * &limit * &limit {
        return Ok((outside, radicand * rest));
    }
    domain(format!(
        "cannot certify square-free part of {m}: cofactor {rest} has no small prime factors"
    ))
}

/// Exact `√q` as `c·√r` with square-free `r`.
pub fn sqrt_embed(q: &Rational) -> Result<QuadExt> {
    if !q.is_positive() {
        return domain(format!("square root of non-positive {q}"));
    }
    // √(p/s) = √(p·s) / s
    let m = q.numer() * q.denom();
    let (c, r) = square_free_split(&m)?;
    let coeff = Rational::new(c, q.denom().clone());
    Ok(QuadExt::new(Rational::zero(), coeff, r))
}

/// `C(n, k)`, zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Pascal's triangle up to a fixed row, for hot loops that need many
/// binomials.
#[derive(Debug, Clone)]
pub struct BinomialTable {
    rows: Vec<Vec<BigInt>>,
}

impl BinomialTable {
    pub fn new(max_n: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max_n + 1);
        rows.push(vec![BigInt::one()]);
        for n in 1..=max_n {
            let prev = &rows[n - 1];
            let mut row = Vec::with_capacity(n + 1);
            row.push(BigInt::one());
            for k in 1..n {
                row.push(&prev[k - 1] + &prev[k]);
            }
            row.push(BigInt::one());
            rows.push(row);
        }
        BinomialTable { rows }
    }

    pub fn get(&self, n: usize, k: i64) -> BigInt {
        if k < 0 || k as usize > n {
            return BigInt::zero();
        }
        match self.rows.get(n) {
            Some(row) => row[k as usize].clone(),
            None => binomial(n as u64, k),
        }
    }

    pub fn rational(&self, n: usize, k: i64) -> Rational {
        Rational::from_integer(self.get(n, k))
    }
}
