//! Dense univariate polynomials over an exact field.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactnum::{quad_sign, Field, QuadExt, Rational};

/// Scalars that can absorb values of another field, e.g. rational
/// coefficients evaluated at a point of `ℚ(√r)`.
pub trait Embed<F: Field>: Field {
    fn embed(x: &F) -> Self;

    /// Sign of the polynomial with coefficients `coeffs` (lowest first) at `x`.
    fn sign_at(coeffs: &[F], x: &Self) -> i32 {
        coeffs
            .iter()
            .rev()
            .fold(Self::zero_elt(), |acc, c| acc.mul(x).add(&Self::embed(c)))
            .sign()
    }
}

impl Embed<Rational> for Rational {
    fn embed(x: &Rational) -> Self {
        x.clone()
    }

    fn sign_at(coeffs: &[Rational], x: &Rational) -> i32 {
        let ints = integer_coeffs(coeffs);
        signum(&homogeneous_eval(&ints, x.numer(), x.denom()))
    }
}

impl Embed<Rational> for QuadExt {
    fn embed(x: &Rational) -> Self {
        QuadExt::rational(x.clone())
    }

    fn sign_at(coeffs: &[Rational], x: &QuadExt) -> i32 {
        if let Some(x) = x.as_rational() {
            return Rational::sign_at(coeffs, x);
        }
        if !x.a().is_zero() {
            return coeffs
                .iter()
                .rev()
                .fold(QuadExt::zero_elt(), |acc, c| acc.mul(x).add(&QuadExt::embed(c)))
                .sign();
        }
        // p(b√r) = E(b²r) + b√r·O(b²r) with E, O the even and odd parts.
        let ints = integer_coeffs(coeffs);
        let even: Vec<BigInt> = ints.iter().step_by(2).cloned().collect();
        let odd: Vec<BigInt> = ints.iter().skip(1).step_by(2).cloned().collect();
        let y = x.b() * x.b() * Rational::from_integer(x.radicand().clone());
        let eval = |part: &[BigInt]| {
            if part.is_empty() {
                return Rational::zero();
            }
            let v = homogeneous_eval(part, y.numer(), y.denom());
            Rational::new(v, y.denom().pow(part.len() as u32 - 1))
        };
        let e = eval(&even);
        let o = eval(&odd) * x.b();
        quad_sign(&QuadExt::new(e, o, x.radicand().clone()))
    }
}

fn signum(x: &BigInt) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Coefficients scaled by the (positive) lcm of their denominators.
pub(crate) fn integer_coeffs(coeffs: &[Rational]) -> Vec<BigInt> {
    let lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| if c.denom().is_one() { acc } else { acc.lcm(c.denom()) });
    if lcm.is_one() {
        return coeffs.iter().map(|c| c.numer().clone()).collect();
    }
    coeffs
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect()
}

/// `Σ c_i u^i v^{k−i}` for `k = len − 1`, i.e. `v^k·p(u/v)`.
pub(crate) fn homogeneous_eval(coeffs: &[BigInt], u: &BigInt, v: &BigInt) -> BigInt {
    let Some((last, rest)) = coeffs.split_last() else {
        return BigInt::zero();
    };
    let mut acc = last.clone();
    let mut vpow = BigInt::one();
    for c in rest.iter().rev() {
        vpow *= v;
        acc *= u;
        if !c.is_zero() {
            acc += c * &vpow;
        }
    }
    acc
}

impl Embed<QuadExt> for QuadExt {
    fn embed(x: &QuadExt) -> Self {
        x.clone()
    }
}

/// `coeffs[i]` is the coefficient of `X^i`; the highest stored coefficient
/// is nonzero unless the polynomial is zero (empty vector).
#[derive(Clone, PartialEq)]
pub struct Poly<F: Field> {
    coeffs: Vec<F>,
}

pub type ExactPoly = Poly<Rational>;

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero_elt()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: F) -> Self {
        Poly::new(vec![c])
    }

    /// `c·X^k`
    pub fn monomial(c: F, k: usize) -> Self {
        let mut coeffs = vec![F::zero_elt(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    /// `X − c`
    pub fn linear_root(c: F) -> Self {
        Poly::new(vec![c.neg(), F::one_elt()])
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero_elt)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(F::zero_elt)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i).add(&other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i).sub(&other.coeff(i))).collect())
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(F::neg).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![F::zero_elt(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero_elt() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, k: &F) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.mul(k)).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::constant(F::one_elt());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul(&F::from_rational(&Rational::from_integer(i.into()))))
                .collect(),
        )
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero_elt(), |acc, c| acc.mul(x).add(c))
    }

    /// Exact sign of the value at `x`.
    pub fn sign_at<E: Embed<F>>(&self, x: &E) -> i32 {
        E::sign_at(&self.coeffs, x)
    }

    /// Horner evaluation at a point of a field containing the coefficients.
    pub fn eval_in<E: Field + Embed<F>>(&self, x: &E) -> E {
        self.coeffs
            .iter()
            .rev()
            .fold(E::zero_elt(), |acc, c| acc.mul(x).add(&E::embed(c)))
    }

    pub fn lift<E: Field + Embed<F>>(&self) -> Poly<E> {
        Poly::new(self.coeffs.iter().map(E::embed).collect())
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lc_inv = divisor.leading().inv();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![F::zero_elt(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].mul(&lc_inv);
            if c.is_zero_elt() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].sub(&c.mul(dc));
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Divides by a positive scalar to keep coefficients small; sign and
    /// roots are unchanged.
    pub fn normalized(self) -> Self {
        match F::normalizer(&self.coeffs) {
            Some(c) => {
                let inv = c.inv();
                Poly::new(self.coeffs.iter().map(|x| x.mul(&inv)).collect())
            }
            None => self,
        }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(&self.leading().inv())
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).normalized();
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `p / gcd(p, p′)`, keeping the leading coefficient of `p`.
    pub fn squarefree_part(&self) -> Self {
        if self.is_constant() {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.is_constant() {
            return self.clone();
        }
        self.div_rem(&g).0
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(F::to_f64).collect()
    }
}

impl<F: Field + fmt::Display> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero_elt() {
                continue;
            }
            let term = match i {
                0 => format!("{c}"),
                1 => format!("({c})*X"),
                _ => format!("({c})*X^{i}"),
            };
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{term}")?;
            first = false;
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Poly").field(&self.coeffs).finish()
    }
}

/// Builds a rational polynomial from integer coefficients, lowest degree first.
pub fn int_poly(coeffs: &[i64]) -> ExactPoly {
    Poly::new(coeffs.iter().map(|&c| crate::exactnum::int(c)).collect())
}
