//! Coefficient rings: exact rationals and first-order jets over them.
//!
//! A [`Jet`] is `a + Σ bᵢ·εᵢ` with `εᵢ·εⱼ = 0`. Seeding `εᵢ` on an accessory
//! parameter and pushing the jet through a series pipeline yields the exact
//! partial derivative of every coefficient in the `εᵢ` slot.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Build a rational from a numerator/denominator pair.
///
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parse `p/q`, `p`, or `-p/q`. Whitespace around the parts is ignored.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// The ring operations every series coefficient type provides.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(r: Rational) -> Self;
    /// Multiply by a rational constant.
    fn scale(&self, r: &Rational) -> Self;
    /// Multiplicative inverse, `None` when the element is not a unit.
    fn try_inv(&self) -> Option<Self>;
    /// The underlying rational value (the jet base part, or the value itself).
    fn base(&self) -> &Rational;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(int(n))
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn try_inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn base(&self) -> &Rational {
        self
    }
}

/// First-order jet `base + Σ eps[i]·εᵢ`.
///
/// `eps` never carries trailing zeros, so structural equality is ring equality
/// regardless of how many directions each operand was built with.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Jet {
    base: Rational,
    eps: Vec<Rational>,
}

impl Jet {
    pub fn constant(base: Rational) -> Self {
        Jet { base, eps: Vec::new() }
    }

    pub fn new(base: Rational, eps: Vec<Rational>) -> Self {
        let mut j = Jet { base, eps };
        j.trim();
        j
    }

    /// `value + εᵢ`: the seed for differentiating with respect to direction `i`.
    pub fn variable(value: Rational, i: usize) -> Self {
        let mut eps = vec![<Rational as Zero>::zero(); i + 1];
        eps[i] = <Rational as One>::one();
        Jet { base: value, eps }
    }

    pub fn value(&self) -> &Rational {
        &self.base
    }

    /// Coefficient of `εᵢ` (zero for directions never touched).
    pub fn eps(&self, i: usize) -> Rational {
        self.eps.get(i).cloned().unwrap_or_else(<Rational as Zero>::zero)
    }

    /// Number of stored directions (after trimming).
    pub fn directions(&self) -> usize {
        self.eps.len()
    }

    fn trim(&mut self) {
        while self.eps.last().is_some_and(Zero::is_zero) {
            self.eps.pop();
        }
    }

    fn zip_eps(a: &[Rational], b: &[Rational], f: impl Fn(&Rational, &Rational) -> Rational) -> Vec<Rational> {
        let zero: Rational = Zero::zero();
        (0..a.len().max(b.len()))
            .map(|i| f(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero)))
            .collect()
    }
}

impl fmt::Display for Jet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.base)?;
        for (i, e) in self.eps.iter().enumerate() {
            if Zero::is_zero(e) {
                continue;
            }
            if e.is_negative() {
                write!(f, " - {}·ε{}", -e, i)?;
            } else {
                write!(f, " + {}·ε{}", e, i)?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a Jet> for Jet {
    type Output = Jet;
    fn add(self, rhs: &'a Jet) -> Jet {
        Jet::new(self.base + &rhs.base, Jet::zip_eps(&self.eps, &rhs.eps, |x, y| x + y))
    }
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, rhs: Jet) -> Jet {
        self + &rhs
    }
}

impl<'a> Sub<&'a Jet> for Jet {
    type Output = Jet;
    fn sub(self, rhs: &'a Jet) -> Jet {
        Jet::new(self.base - &rhs.base, Jet::zip_eps(&self.eps, &rhs.eps, |x, y| x - y))
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, rhs: Jet) -> Jet {
        self - &rhs
    }
}

impl<'a> Mul<&'a Jet> for Jet {
    type Output = Jet;
    fn mul(self, rhs: &'a Jet) -> Jet {
        let eps = Jet::zip_eps(&self.eps, &rhs.eps, |b, d| &self.base * d + b * &rhs.base);
        Jet::new(self.base * &rhs.base, eps)
    }
}

impl Mul for Jet {
    type Output = Jet;
    fn mul(self, rhs: Jet) -> Jet {
        self * &rhs
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        Jet { base: -self.base, eps: self.eps.into_iter().map(|e| -e).collect() }
    }
}

impl Div for Jet {
    type Output = Jet;
    /// Panics on a non-invertible divisor; use [`Scalar::try_inv`] to check first.
    fn div(self, rhs: Jet) -> Jet {
        self * rhs.try_inv().expect("jet division by an element with zero base part")
    }
}

impl Scalar for Jet {
    fn zero() -> Self {
        Jet::constant(<Rational as Zero>::zero())
    }
    fn one() -> Self {
        Jet::constant(<Rational as One>::one())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.base) && self.eps.is_empty()
    }
    fn from_rational(r: Rational) -> Self {
        Jet::constant(r)
    }
    fn scale(&self, r: &Rational) -> Self {
        Jet::new(&self.base * r, self.eps.iter().map(|e| e * r).collect())
    }
    fn try_inv(&self) -> Option<Self> {
        if Zero::is_zero(&self.base) {
            return None;
        }
        let inv = self.base.recip();
        let sq = &inv * &inv;
        Some(Jet::new(inv, self.eps.iter().map(|b| -(b * &sq)).collect()))
    }
    fn base(&self) -> &Rational {
        &self.base
    }
}
