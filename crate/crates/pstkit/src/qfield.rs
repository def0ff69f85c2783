//! Exact arithmetic over real quadratic fields.
//!
//! Everything downstream (spectral decompositions, transfer certificates)
//! manipulates numbers of the form `x + y*sqrt(delta)` with rational `x`, `y`
//! and squarefree `delta`, times of the form `(p/q)*pi/sqrt(delta)`, and
//! phases `exp(i*pi*p/q)`. All comparisons and equalities here are exact;
//! floating point never decides anything.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary-precision rational, always reduced with positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArithError {
    #[error("operands live in different quadratic fields: sqrt({0}) vs sqrt({1})")]
    DeltaMismatch(u64, u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("value out of range for exact time/phase bookkeeping: {0}")]
    Overflow(String),
}

/// Splits `m > 0` as `c^2 * d` with `d` squarefree; returns `(c, d)`.
///
/// Trial division; inputs here are tiny (discriminants of small graphs).
pub fn squarefree_split(m: u64) -> (u64, u64) {
    assert!(m > 0, "squarefree_split needs a positive integer");
    let mut c = 1u64;
    let mut d = m;
    let mut p = 2u64;
    while p * p <= d {
        while d % (p * p) == 0 {
            d /= p * p;
            c *= p;
        }
        p += 1;
    }
    (c, d)
}

/// Writes `sqrt(d1) * sqrt(d2)` as `c * sqrt(d)` with `d` squarefree.
pub fn combine_radicals(d1: u64, d2: u64) -> (u64, u64) {
    squarefree_split(d1 * d2)
}

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

fn rat_int(n: i64) -> Rational {
    Rational::from_integer(big(n))
}

/// Rational lower/upper bounds for `sqrt(d)` with `hi - lo <= 4^-k`.
fn sqrt_bounds(d: u64, k: u32) -> (Rational, Rational) {
    // isqrt(d * 4^k) / 2^k is a lower bound; one ulp up is an upper bound.
    let scaled = BigInt::from(d) << (2 * k);
    let root = scaled.sqrt();
    let den = BigInt::one() << k;
    let lo = Rational::new(root.clone(), den.clone());
    let hi = Rational::new(root + 1, den);
    (lo, hi)
}

/// An exact element `x + y*sqrt(delta)` of a real quadratic field.
///
/// Canonical form: `delta` squarefree, and `y == 0` forces `delta == 1`
/// (so plain rationals always carry `delta = 1` and mix freely with any
/// field). Two values are equal iff their canonical forms coincide.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadValue {
    x: Rational,
    y: Rational,
    delta: u64,
}

impl QuadValue {
    pub fn new(x: Rational, y: Rational, delta: u64) -> Self {
        assert!(delta >= 1, "delta must be positive");
        if y.is_zero() {
            return QuadValue { x, y, delta: 1 };
        }
        let (c, d) = squarefree_split(delta);
        let y = y * rat_int(c as i64);
        if d == 1 {
            QuadValue { x: x + y, y: Rational::zero(), delta: 1 }
        } else {
            QuadValue { x, y, delta: d }
        }
    }

    pub fn from_rational(x: Rational) -> Self {
        QuadValue { x, y: Rational::zero(), delta: 1 }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat_int(n))
    }

    pub fn from_bigint(n: &BigInt) -> Self {
        Self::from_rational(Rational::from_integer(n.clone()))
    }

    /// `sqrt(d)`, canonicalized.
    pub fn sqrt_of(d: u64) -> Self {
        Self::new(Rational::zero(), Rational::one(), d)
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.x
    }

    pub fn radical_part(&self) -> &Rational {
        &self.y
    }

    pub fn delta(&self) -> u64 {
        self.delta
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.delta == 1
    }

    /// The rational value when `delta == 1`.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.x)
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        let r = self.as_rational()?;
        r.is_integer().then(|| r.to_integer())
    }

    /// Galois conjugate `x - y*sqrt(delta)`.
    pub fn conjugate(&self) -> Self {
        QuadValue { x: self.x.clone(), y: -self.y.clone(), delta: self.delta }
    }

    /// Field norm `x^2 - y^2 * delta`.
    pub fn norm(&self) -> Rational {
        &self.x * &self.x - &self.y * &self.y * rat_int(self.delta as i64)
    }

    fn same_field(&self, rhs: &Self) -> Result<u64, ArithError> {
        match (self.delta, rhs.delta) {
            (a, b) if a == b => Ok(a),
            (1, b) => Ok(b),
            (a, 1) => Ok(a),
            (a, b) => Err(ArithError::DeltaMismatch(a, b)),
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, ArithError> {
        let delta = self.same_field(rhs)?;
        Ok(Self::new(&self.x + &rhs.x, &self.y + &rhs.y, delta))
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, ArithError> {
        let delta = self.same_field(rhs)?;
        Ok(Self::new(&self.x - &rhs.x, &self.y - &rhs.y, delta))
    }

    pub fn neg(&self) -> Self {
        QuadValue { x: -self.x.clone(), y: -self.y.clone(), delta: self.delta }
    }

    /// Product. Same-field products stay in the field; products of two pure
    /// radicals combine under `sqrt(d1)*sqrt(d2) = c*sqrt(d)`. Anything that
    /// would leave a single quadratic field is a `DeltaMismatch`.
    pub fn mul(&self, rhs: &Self) -> Result<Self, ArithError> {
        if let Ok(delta) = self.same_field(rhs) {
            let d = rat_int(delta as i64);
            let x = &self.x * &rhs.x + &self.y * &rhs.y * &d;
            let y = &self.x * &rhs.y + &self.y * &rhs.x;
            return Ok(Self::new(x, y, delta));
        }
        // Mixed radicals: only pure multiples of the radicals stay quadratic.
        if self.x.is_zero() && rhs.x.is_zero() {
            let (c, d) = combine_radicals(self.delta, rhs.delta);
            let coeff = &self.y * &rhs.y * rat_int(c as i64);
            return Ok(Self::new(Rational::zero(), coeff, d));
        }
        Err(ArithError::DeltaMismatch(self.delta, rhs.delta))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        QuadValue { x: &self.x * r, y: &self.y * r, delta: self.delta }
    }

    pub fn inverse(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let n = self.norm();
        // norm = 0 with value != 0 would mean sqrt(delta) rational.
        assert!(!n.is_zero(), "nonzero quadratic value with zero norm");
        Ok(self.conjugate().scale(&n.recip()))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, ArithError> {
        self.mul(&rhs.inverse()?)
    }

    /// Exact sign of `x + y*sqrt(delta)`.
    pub fn sign(&self) -> Ordering {
        if self.y.is_zero() {
            return self.x.cmp(&Rational::zero());
        }
        if self.x.is_zero() {
            return self.y.cmp(&Rational::zero());
        }
        let sx = self.x.is_positive();
        let sy = self.y.is_positive();
        if sx == sy {
            return if sx { Ordering::Greater } else { Ordering::Less };
        }
        // Signs differ: compare x^2 with y^2*delta; the bigger magnitude wins.
        let x2 = &self.x * &self.x;
        let y2d = &self.y * &self.y * rat_int(self.delta as i64);
        match x2.cmp(&y2d) {
            Ordering::Greater => self.x.cmp(&Rational::zero()),
            Ordering::Less => self.y.cmp(&Rational::zero()),
            Ordering::Equal => Ordering::Equal, // impossible for delta > 1
        }
    }

    /// Exact comparison, valid across different fields.
    pub fn cmp_exact(&self, rhs: &Self) -> Ordering {
        if self == rhs {
            return Ordering::Equal;
        }
        if self.same_field(rhs).is_ok() {
            let delta = if self.delta > 1 { self.delta } else { rhs.delta };
            let diff = QuadValue::new(&self.x - &rhs.x, &self.y - &rhs.y, delta);
            return diff.sign();
        }
        // Distinct fields: interval refinement. Distinct algebraic numbers
        // separate after finitely many steps.
        let mut k = 16u32;
        loop {
            let (alo, ahi) = self.bounds(k);
            let (blo, bhi) = rhs.bounds(k);
            if ahi < blo {
                return Ordering::Less;
            }
            if bhi < alo {
                return Ordering::Greater;
            }
            k *= 2;
            assert!(k <= 1 << 20, "interval comparison failed to separate values");
        }
    }

    /// Rational bounds `lo <= value <= hi` at roughly `k` bits of precision.
    fn bounds(&self, k: u32) -> (Rational, Rational) {
        if self.y.is_zero() {
            return (self.x.clone(), self.x.clone());
        }
        let (slo, shi) = sqrt_bounds(self.delta, k);
        let (t1, t2) = (&self.y * slo, &self.y * shi);
        if t1 <= t2 {
            (&self.x + t1, &self.x + t2)
        } else {
            (&self.x + t2, &self.x + t1)
        }
    }

    pub fn to_f64(&self) -> f64 {
        let x = self.x.to_f64().unwrap_or(f64::NAN);
        let y = self.y.to_f64().unwrap_or(f64::NAN);
        x + y * (self.delta as f64).sqrt()
    }
}

impl PartialOrd for QuadValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_exact(other))
    }
}

impl Ord for QuadValue {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_exact(other)
    }
}

impl fmt::Debug for QuadValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QuadValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.y.is_zero() {
            return write!(f, "{}", self.x);
        }
        if self.x.is_zero() {
            if self.y.is_one() {
                return write!(f, "sqrt({})", self.delta);
            }
            return write!(f, "{}*sqrt({})", self.y, self.delta);
        }
        if self.y.is_positive() {
            write!(f, "{}+{}*sqrt({})", self.x, self.y, self.delta)
        } else {
            write!(f, "{}{}*sqrt({})", self.x, self.y, self.delta)
        }
    }
}

/// An exact positive time `(num/den) * pi / sqrt(delta)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactTime {
    num: i64,
    den: i64,
    delta: u64,
}

impl ExactTime {
    pub fn new(num: i64, den: i64, delta: u64) -> Result<Self, ArithError> {
        if den == 0 {
            return Err(ArithError::DivisionByZero);
        }
        if num <= 0 || den < 0 {
            return Err(ArithError::Overflow(format!(
                "time must be positive: {num}/{den}*pi/sqrt({delta})"
            )));
        }
        let g = num.gcd(&den);
        let (c, d) = squarefree_split(delta);
        // (num/den)/sqrt(c^2 d) = num/(den*c*sqrt(d))
        let den = (den / g).checked_mul(c as i64).ok_or_else(|| {
            ArithError::Overflow("time denominator overflow".into())
        })?;
        let num = num / g;
        let g2 = num.gcd(&den);
        Ok(ExactTime { num: num / g2, den: den / g2, delta: d })
    }

    pub fn numerator(&self) -> i64 {
        self.num
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }

    pub fn delta(&self) -> u64 {
        self.delta
    }

    /// The coefficient of `pi/sqrt(delta)` as a rational.
    pub fn coefficient(&self) -> Rational {
        Rational::new(big(self.num), big(self.den))
    }

    pub fn scaled(&self, k: i64) -> Result<Self, ArithError> {
        let num = self.num.checked_mul(k).ok_or_else(|| {
            ArithError::Overflow("time numerator overflow".into())
        })?;
        Self::new(num, self.den, self.delta)
    }

    /// Halves the time; fails if the numerator is odd and doubling the
    /// denominator overflows.
    pub fn halved(&self) -> Result<Self, ArithError> {
        if self.num % 2 == 0 {
            Self::new(self.num / 2, self.den, self.delta)
        } else {
            let den = self.den.checked_mul(2).ok_or_else(|| {
                ArithError::Overflow("time denominator overflow".into())
            })?;
            Self::new(self.num, den, self.delta)
        }
    }

    /// Correctly-rounded double: `num/den * pi / sqrt(delta)` evaluated to
    /// ~40 decimal digits with exact rationals before the single final
    /// rounding.
    pub fn to_f64(&self) -> f64 {
        // pi to 50 digits.
        let pi_num = BigInt::from_str("31415926535897932384626433832795028841971693993751")
            .expect("pi literal");
        let pi = Rational::new(pi_num, BigInt::from(10u8).pow(49));
        let (slo, shi) = sqrt_bounds(self.delta, 200);
        let mid = (slo + shi) / rat_int(2);
        let v = self.coefficient() * pi / mid;
        v.to_f64().unwrap_or(f64::NAN)
    }

    /// Exact equality of the represented real times.
    pub fn eq_time(&self, other: &Self) -> bool {
        self == other
    }
}

impl fmt::Display for ExactTime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}*pi/sqrt({})", self.num, self.den, self.delta)
    }
}

impl fmt::Debug for ExactTime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for ExactTime {
    type Err = ArithError;

    /// Parses the CLI form `p/q*pi/sqrt(D)`; `p*pi/sqrt(D)`, `p/q*pi`, and
    /// `p*pi` are accepted shorthands.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ArithError::Overflow(format!("malformed exact time: {s}"));
        let s = s.trim();
        let (frac, delta) = match s.split_once("*pi") {
            Some((frac, rest)) => {
                let delta = if rest.is_empty() {
                    1
                } else {
                    let inner = rest
                        .strip_prefix("/sqrt(")
                        .and_then(|r| r.strip_suffix(')'))
                        .ok_or_else(bad)?;
                    inner.parse::<u64>().map_err(|_| bad())?
                };
                (frac, delta)
            }
            None => return Err(bad()),
        };
        let (p, q) = match frac.split_once('/') {
            Some((p, q)) => (
                p.parse::<i64>().map_err(|_| bad())?,
                q.parse::<i64>().map_err(|_| bad())?,
            ),
            None => (frac.parse::<i64>().map_err(|_| bad())?, 1),
        };
        ExactTime::new(p, q, delta)
    }
}

/// A root of unity `exp(i*pi*num/den)`, reduced, with `0 <= num < 2*den`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UnitPhase {
    num: i64,
    den: i64,
}

impl UnitPhase {
    pub fn new(num: i64, den: i64) -> Result<Self, ArithError> {
        if den == 0 {
            return Err(ArithError::DivisionByZero);
        }
        let (mut num, mut den) = if den < 0 { (-num, -den) } else { (num, den) };
        let g = num.gcd(&den);
        num /= g;
        den /= g;
        num = num.rem_euclid(2 * den);
        Ok(UnitPhase { num, den })
    }

    pub fn one() -> Self {
        UnitPhase { num: 0, den: 1 }
    }

    pub fn minus_one() -> Self {
        UnitPhase { num: 1, den: 1 }
    }

    pub fn i() -> Self {
        UnitPhase { num: 1, den: 2 }
    }

    /// Builds `exp(i*pi*r)` from an exact rational multiple of pi.
    pub fn from_pi_multiple(r: &Rational) -> Result<Self, ArithError> {
        let num = r.numer().to_i64().ok_or_else(|| {
            ArithError::Overflow(format!("phase numerator too large: {r}"))
        })?;
        let den = r.denom().to_i64().ok_or_else(|| {
            ArithError::Overflow(format!("phase denominator too large: {r}"))
        })?;
        Self::new(num, den)
    }

    pub fn numerator(&self) -> i64 {
        self.num
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }

    /// The angle as a rational multiple of pi in `[0, 2)`.
    pub fn pi_multiple(&self) -> Rational {
        Rational::new(big(self.num), big(self.den))
    }

    /// Smallest `n >= 1` with `phase^n = 1`.
    pub fn order(&self) -> u64 {
        if self.num == 0 {
            return 1;
        }
        if self.num % 2 == 0 {
            self.den as u64
        } else {
            2 * self.den as u64
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let num = self.num * rhs.den + rhs.num * self.den;
        Self::new(num, self.den * rhs.den).expect("phase product")
    }

    pub fn pow(&self, k: i64) -> Self {
        let num = (self.num as i128 * k as i128).rem_euclid(2 * self.den as i128);
        Self::new(num as i64, self.den).expect("phase power")
    }

    pub fn conj(&self) -> Self {
        Self::new(-self.num, self.den).expect("phase conjugate")
    }

    /// The phase multiplied by `-1 = exp(i*pi)`.
    pub fn negated(&self) -> Self {
        Self::new(self.num + self.den, self.den).expect("phase negation")
    }

    pub fn is_one(&self) -> bool {
        self.num == 0
    }

    pub fn to_complex(&self) -> num_complex::Complex64 {
        let angle = std::f64::consts::PI * self.num as f64 / self.den as f64;
        num_complex::Complex64::new(angle.cos(), angle.sin())
    }
}

impl fmt::Display for UnitPhase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "exp(i*pi*{}/{})", self.num, self.den)
    }
}

impl fmt::Debug for UnitPhase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for UnitPhase {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ArithError::Overflow(format!("malformed phase: {s}"));
        let inner = s
            .trim()
            .strip_prefix("exp(i*pi*")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (p, q) = match inner.split_once('/') {
            Some((p, q)) => (
                p.parse::<i64>().map_err(|_| bad())?,
                q.parse::<i64>().map_err(|_| bad())?,
            ),
            None => (inner.parse::<i64>().map_err(|_| bad())?, 1),
        };
        UnitPhase::new(p, q)
    }
}

/// An angle that is an exact rational multiple of `pi*sqrt(radical)`:
/// `coeff * pi * sqrt(radical)`, with `radical` squarefree and `radical = 1`
/// for plain rational multiples of pi.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiAngle {
    coeff: Rational,
    radical: u64,
}

impl PiAngle {
    pub fn rational(coeff: Rational) -> Self {
        PiAngle { coeff, radical: 1 }
    }

    pub fn new(coeff: Rational, radical: u64) -> Self {
        if coeff.is_zero() {
            return PiAngle { coeff, radical: 1 };
        }
        let (c, d) = squarefree_split(radical);
        PiAngle { coeff: coeff * rat_int(c as i64), radical: d }
    }

    pub fn is_rational(&self) -> bool {
        self.radical == 1
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    /// Whether `self - other` is an even integer multiple of pi, i.e. the
    /// phases `exp(i*angle)` coincide. Exact; distinct radicals never match.
    pub fn even_difference(&self, other: &Self) -> bool {
        if self.radical != other.radical {
            return false;
        }
        let diff = &self.coeff - &other.coeff;
        if self.radical == 1 {
            diff.is_integer() && diff.numer().is_even()
        } else {
            diff.is_zero()
        }
    }

    /// The phase `exp(i*pi*coeff)` when the angle is rational.
    pub fn phase(&self) -> Option<UnitPhase> {
        self.is_rational()
            .then(|| UnitPhase::from_pi_multiple(&self.coeff).ok())
            .flatten()
    }

    /// The angle `tau * theta` in units of pi, if it stays a single-radical
    /// quantity. `None` marks the two-term case `(a + b*sqrt(D))/sqrt(D')`
    /// with both parts nonzero, which leaves our calculus.
    pub fn of_time_eigenvalue(tau: &ExactTime, theta: &QuadValue) -> Option<PiAngle> {
        let frac = tau.coefficient();
        let dt = tau.delta();
        let x = theta.rational_part();
        let y = theta.radical_part();
        if !x.is_zero() && !y.is_zero() {
            return None;
        }
        if y.is_zero() {
            // (p/q) * x / sqrt(dt) = (p*x/(q*dt)) * sqrt(dt)
            let coeff = frac * x / rat_int(dt as i64);
            Some(PiAngle::new(coeff, dt))
        } else {
            // (p/q) * y * sqrt(d_theta) / sqrt(dt)
            let (c, d) = combine_radicals(theta.delta(), dt);
            let coeff = frac * y * rat_int(c as i64) / rat_int(dt as i64);
            Some(PiAngle::new(coeff, d))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rq(n: i64, d: i64) -> Rational {
        Rational::new(big(n), big(d))
    }

    fn qv(x: (i64, i64), y: (i64, i64), delta: u64) -> QuadValue {
        QuadValue::new(rq(x.0, x.1), rq(y.0, y.1), delta)
    }

    #[test]
    fn squarefree_splits() {
        assert_eq!(squarefree_split(1), (1, 1));
        assert_eq!(squarefree_split(12), (2, 3));
        assert_eq!(squarefree_split(49), (7, 1));
        assert_eq!(squarefree_split(50), (5, 2));
        assert_eq!(combine_radicals(2, 2), (2, 1));
        assert_eq!(combine_radicals(2, 3), (1, 6));
        assert_eq!(combine_radicals(6, 10), (2, 15));
    }

    #[test]
    fn norm_of_one_plus_sqrt2() {
        // (1+sqrt2)(1-sqrt2) = -1
        let a = qv((1, 1), (1, 1), 2);
        let b = a.conjugate();
        let p = a.mul(&b).unwrap();
        assert_eq!(p, QuadValue::from_int(-1));
    }

    #[test]
    fn sign_of_three_minus_two_sqrt2() {
        // 9 > 8, so 3 - 2*sqrt(2) > 0
        let v = qv((3, 1), (-2, 1), 2);
        assert_eq!(v.sign(), Ordering::Greater);
        let w = qv((-3, 1), (2, 1), 2);
        assert_eq!(w.sign(), Ordering::Less);
    }

    #[test]
    fn sqrt5_greater_than_two() {
        // 0 + 1*sqrt(5) vs 2: 5 > 4
        let a = QuadValue::sqrt_of(5);
        let b = QuadValue::from_int(2);
        assert_eq!(a.cmp_exact(&b), Ordering::Greater);
    }

    #[test]
    fn cross_field_compare() {
        // sqrt(2) < sqrt(3), sqrt(8) = 2*sqrt(2) > sqrt(7)
        assert!(QuadValue::sqrt_of(2) < QuadValue::sqrt_of(3));
        assert!(QuadValue::sqrt_of(8) > QuadValue::sqrt_of(7));
        // 1 + sqrt(2) vs sqrt(6): 2.414… > 2.449… is false
        let a = qv((1, 1), (1, 1), 2);
        assert!(a < QuadValue::sqrt_of(6));
    }

    #[test]
    fn canonicalization() {
        // sqrt(4) = 2 collapses to a rational with delta 1
        let v = QuadValue::sqrt_of(4);
        assert!(v.is_rational());
        assert_eq!(v, QuadValue::from_int(2));
        // sqrt(12) = 2*sqrt(3)
        let w = QuadValue::sqrt_of(12);
        assert_eq!(w.delta(), 3);
        assert_eq!(w.radical_part(), &rq(2, 1));
    }

    #[test]
    fn mixed_field_products() {
        // sqrt(2)*sqrt(3) = sqrt(6)
        let p = QuadValue::sqrt_of(2).mul(&QuadValue::sqrt_of(3)).unwrap();
        assert_eq!(p, QuadValue::sqrt_of(6));
        // (1+sqrt(2))*(1+sqrt(3)) does not stay quadratic
        let a = qv((1, 1), (1, 1), 2);
        let b = qv((1, 1), (1, 1), 3);
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn division() {
        let a = qv((1, 1), (1, 1), 5);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), QuadValue::one());
        assert_eq!(
            QuadValue::zero().inverse().unwrap_err(),
            ArithError::DivisionByZero
        );
    }

    #[test]
    fn phase_orders() {
        // -1 has order 2, i has order 4, 1 has order 1
        assert_eq!(UnitPhase::new(1, 1).unwrap().order(), 2);
        assert_eq!(UnitPhase::new(1, 2).unwrap().order(), 4);
        assert_eq!(UnitPhase::new(2, 1).unwrap().order(), 1);
        // exp(i*pi*3/2) = -i has order 4
        assert_eq!(UnitPhase::new(3, 2).unwrap().order(), 4);
        assert_eq!(UnitPhase::new(2, 3).unwrap().order(), 3);
    }

    #[test]
    fn phase_arithmetic() {
        let i = UnitPhase::i();
        assert_eq!(i.pow(2), UnitPhase::minus_one());
        assert_eq!(i.pow(-1), UnitPhase::new(3, 2).unwrap());
        assert_eq!(i.mul(&i.conj()), UnitPhase::one());
        assert_eq!(UnitPhase::minus_one().negated(), UnitPhase::one());
        // order * angle / pi is an even integer
        for (p, q) in [(1, 1), (1, 2), (3, 2), (2, 3), (5, 7), (0, 1)] {
            let ph = UnitPhase::new(p, q).unwrap();
            let total = ph.pi_multiple() * rq(ph.order() as i64, 1);
            assert!(total.is_integer() && total.numer().is_even());
        }
    }

    #[test]
    fn exact_time_parse_display() {
        let t = ExactTime::new(1, 2, 1).unwrap();
        assert_eq!(t.to_string(), "1/2*pi/sqrt(1)");
        assert_eq!("1/2*pi/sqrt(1)".parse::<ExactTime>().unwrap(), t);
        assert_eq!("1/2*pi".parse::<ExactTime>().unwrap(), t);
        let u = "1/1*pi/sqrt(2)".parse::<ExactTime>().unwrap();
        assert_eq!(u.delta(), 2);
        // sqrt(8) normalizes: pi/sqrt(8) = (1/2) pi/sqrt(2)
        let v = ExactTime::new(1, 1, 8).unwrap();
        assert_eq!(v, ExactTime::new(1, 2, 2).unwrap());
        assert!("nonsense".parse::<ExactTime>().is_err());
        assert!(ExactTime::new(-1, 2, 1).is_err());
    }

    #[test]
    fn exact_time_to_f64() {
        let t = ExactTime::new(1, 2, 1).unwrap();
        assert!((t.to_f64() - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
        let u = ExactTime::new(1, 1, 2).unwrap();
        assert!((u.to_f64() - std::f64::consts::PI / 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn angle_calculus() {
        // tau = pi/2 (delta 1), theta = 2: angle = pi
        let tau = ExactTime::new(1, 2, 1).unwrap();
        let th = QuadValue::from_int(2);
        let a = PiAngle::of_time_eigenvalue(&tau, &th).unwrap();
        assert_eq!(a, PiAngle::rational(rq(1, 1)));
        // tau = pi/sqrt(2), theta = sqrt(2): angle = pi
        let tau = ExactTime::new(1, 1, 2).unwrap();
        let th = QuadValue::sqrt_of(2);
        let a = PiAngle::of_time_eigenvalue(&tau, &th).unwrap();
        assert_eq!(a, PiAngle::rational(rq(1, 1)));
        // tau = pi (delta 1), theta = sqrt(3): irrational angle
        let tau = ExactTime::new(1, 1, 1).unwrap();
        let th = QuadValue::sqrt_of(3);
        let a = PiAngle::of_time_eigenvalue(&tau, &th).unwrap();
        assert!(!a.is_rational());
        // theta = 1 + sqrt(2) leaves the calculus
        let th = qv((1, 1), (1, 1), 2);
        assert!(PiAngle::of_time_eigenvalue(&tau, &th).is_none());
    }

    #[test]
    fn even_difference() {
        let a = PiAngle::rational(rq(5, 1));
        let b = PiAngle::rational(rq(1, 1));
        let c = PiAngle::rational(rq(1, 2));
        assert!(a.even_difference(&b));
        assert!(!a.even_difference(&c));
        let r = PiAngle::new(rq(1, 1), 2);
        let s = PiAngle::new(rq(1, 1), 2);
        let t = PiAngle::new(rq(3, 1), 2);
        assert!(r.even_difference(&s));
        assert!(!r.even_difference(&t));
        assert!(!r.even_difference(&a));
    }
}
