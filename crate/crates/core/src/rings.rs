//! Exact coefficient rings: rationals, prime fields and univariate polynomials in `q`.
//!
//! Everything here is exact. Rationals are `num`'s big rationals (always reduced,
//! positive denominator), prime-field elements carry their modulus, and [`QPoly`]
//! stores rational coefficients in ascending powers of `q`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Coefficient arithmetic used by the sparse polynomial types.
///
/// Method names avoid clashing with `std::ops` so that both can be in scope.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }
}

/// A ring with distinguished constants, i.e. one that does not need a runtime context
/// (such as a modulus) to produce `0`, `1` or the image of an integer.
pub trait UnitalRing: Ring {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_integer(n: &BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_integer(&BigInt::from(n))
    }
}

impl Ring for Rational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
}

impl UnitalRing for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_integer(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
}

pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Returns the integer value of `r` if its denominator is one.
pub fn as_integer(r: &Rational) -> Option<BigInt> {
    r.is_integer().then(|| r.to_integer())
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Element of the prime field `GF(p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeFieldElem {
    residue: u64,
    modulus: u64,
}

impl PrimeFieldElem {
    pub fn new(value: i64, p: u64) -> Result<Self> {
        Self::from_integer(&BigInt::from(value), p)
    }

    pub fn from_integer(value: &BigInt, p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let residue = value.mod_floor(&BigInt::from(p));
        Ok(Self {
            residue: residue.to_u64().expect("residue below modulus"),
            modulus: p,
        })
    }

    /// Reduces a rational number modulo `p`; the denominator must be a unit.
    pub fn from_rational(value: &Rational, p: u64) -> Result<Self> {
        let num = Self::from_integer(value.numer(), p)?;
        let den = Self::from_integer(value.denom(), p)?;
        let inv = den
            .inverse()
            .ok_or_else(|| Error::NotInvertible(value.denom().to_string(), p))?;
        Ok(num.times(&inv))
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::RingMismatch {
                left: format!("GF({})", self.modulus),
                right: format!("GF({})", other.modulus),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self {
            residue: (self.residue + other.residue) % self.modulus,
            modulus: self.modulus,
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let prod = (self.residue as u128 * other.residue as u128) % self.modulus as u128;
        Ok(Self {
            residue: prod as u64,
            modulus: self.modulus,
        })
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.residue == 0 {
            return None;
        }
        // Fermat: a^(p-2)
        let mut result = 1u128;
        let mut base = self.residue as u128;
        let m = self.modulus as u128;
        let mut e = self.modulus - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = result * base % m;
            }
            base = base * base % m;
            e >>= 1;
        }
        Some(Self {
            residue: result as u64,
            modulus: self.modulus,
        })
    }
}

impl fmt::Display for PrimeFieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

// Polynomials over GF(p) are only ever built by reducing a single rational result,
// so a modulus mismatch inside polynomial arithmetic is a programming error.
impl Ring for PrimeFieldElem {
    fn is_zero(&self) -> bool {
        self.residue == 0
    }
    fn plus(&self, other: &Self) -> Self {
        self.checked_add(other).expect("mixed prime fields")
    }
    fn times(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("mixed prime fields")
    }
    fn negated(&self) -> Self {
        Self {
            residue: (self.modulus - self.residue) % self.modulus,
            modulus: self.modulus,
        }
    }
}

/// Exact univariate polynomial in `q` with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    // ascending powers; the last entry is nonzero unless the vector is empty
    coeffs: Vec<Rational>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(rat(1))
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c * q^degree`
    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![rat(0); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// `q^degree`
    pub fn q_pow(degree: usize) -> Self {
        Self::monomial(rat(1), degree)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> Rational {
        self.coeffs.get(degree).cloned().unwrap_or_else(|| rat(0))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, q: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(rat(0), |acc, c| acc * q + c)
    }

    /// Substitutes `q -> q^k`.
    pub fn compose_power(&self, k: usize) -> Self {
        if k == 0 {
            return Self::constant(self.coeffs.iter().fold(rat(0), |a, c| a + c));
        }
        let mut coeffs = vec![rat(0); self.degree().map_or(0, |d| d * k + 1)];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self::new(coeffs)
    }

    /// Multiplies by `q^shift`.
    pub fn shift(&self, shift: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![rat(0); shift];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Long division by `divisor`, returning `(quotient, remainder)`.
    pub fn div_rem(&self, divisor: &QPoly) -> Result<(QPoly, QPoly)> {
        let dlead = divisor.leading().ok_or(Error::DivisionByZero)?.clone();
        let ddeg = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= ddeg {
            return Ok((QPoly::zero(), self.clone()));
        }
        let mut quot = vec![rat(0); rem.len() - ddeg];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + ddeg] / &dlead;
            if !Zero::is_zero(&c) {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * d;
                }
            }
            quot[i] = c;
        }
        Ok((QPoly::new(quot), QPoly::new(rem)))
    }

    /// Exact quotient `self / divisor`; a nonzero remainder is an error.
    pub fn exact_div(&self, divisor: &QPoly) -> Result<QPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::DivisionNotExact {
                dividend: self.to_string(),
                divisor: divisor.to_string(),
                remainder: r.to_string(),
            });
        }
        Ok(q)
    }
}

impl Ring for QPoly {
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
}

impl UnitalRing for QPoly {
    fn zero() -> Self {
        QPoly::zero()
    }
    fn one() -> Self {
        QPoly::one()
    }
    fn from_integer(n: &BigInt) -> Self {
        QPoly::constant(BigRational::from_integer(n.clone()))
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new(
            (0..n)
                .map(|i| self.coeff(i) + rhs.coeff(i))
                .collect(),
        )
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![rat(0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QPoly {
            type Output = QPoly;
            fn $m(self, rhs: QPoly) -> QPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(c) {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let unit = abs.is_one();
            match i {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !unit {
                        write!(f, "{abs}*")?;
                    }
                    if i == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl FromStr for QPoly {
    type Err = Error;

    /// Parses the format produced by `Display`, e.g. `1 + q - 3/2*q^2`.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms = Vec::new();
        let mut current = String::new();
        for (i, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 && !current.ends_with('^') {
                terms.push(std::mem::take(&mut current));
            }
            current.push(ch);
        }
        terms.push(current);
        let mut out = QPoly::zero();
        for term in terms {
            let (sign, body) = match term.strip_prefix('-') {
                Some(rest) => (-1, rest),
                None => (1, term.strip_prefix('+').unwrap_or(&term)),
            };
            let (coeff_str, power) = match body.find('q') {
                None => (body, 0usize),
                Some(pos) => {
                    let coeff_part = body[..pos].trim_end_matches('*');
                    let rest = &body[pos + 1..];
                    let power = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .and_then(|e| e.parse().ok())
                            .ok_or_else(|| Error::Parse(format!("bad exponent in {term}")))?
                    };
                    (coeff_part, power)
                }
            };
            let coeff = if coeff_str.is_empty() {
                rat(1)
            } else {
                parse_rational(coeff_str)?
            };
            out = &out + &QPoly::monomial(coeff * rat(sign), power);
        }
        Ok(out)
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| bad())?;
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// `(n)_q = 1 + q + ... + q^(n-1)`, with `(0)_q = 0`.
pub fn q_integer(n: usize) -> QPoly {
    q_integer_base(n, 1)
}

/// `(n)_{q^step} = 1 + q^step + ... + q^(step*(n-1))`.
pub fn q_integer_base(n: usize, step: usize) -> QPoly {
    let mut coeffs = vec![rat(0); if n == 0 { 0 } else { step * (n - 1) + 1 }];
    for i in 0..n {
        coeffs[i * step] += rat(1);
    }
    QPoly::new(coeffs)
}

/// `(n)_q! = (1)_q (2)_q ... (n)_q`.
pub fn q_factorial(n: usize) -> QPoly {
    q_factorial_base(n, 1)
}

/// `(n)_{q^step}!`.
pub fn q_factorial_base(n: usize, step: usize) -> QPoly {
    (1..=n).fold(QPoly::one(), |acc, k| &acc * &q_integer_base(k, step))
}

/// Gaussian binomial by the Pascal recursion
/// `[n,k] = [n-1,k-1] + q^k [n-1,k]`; zero when `k > n`.
pub fn q_binomial(n: usize, k: usize) -> QPoly {
    if k > n {
        return QPoly::zero();
    }
    let mut row = vec![QPoly::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        for j in 0..=m.min(k) {
            let left = if j == 0 { QPoly::zero() } else { row[j - 1].clone() };
            let right = row.get(j).map(|p| p.shift(j)).unwrap_or_default();
            next.push(&left + &right);
        }
        row = next;
    }
    row.swap_remove(k)
}

/// `n`-th cyclotomic polynomial, by dividing `q^n - 1` by the lower ones.
pub fn cyclotomic(n: usize) -> QPoly {
    assert!(n >= 1, "cyclotomic index must be positive");
    let mut num = QPoly::q_pow(n);
    num = &num - &QPoly::one();
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        num = num
            .exact_div(&cyclotomic(d))
            .expect("cyclotomic factors divide q^n - 1");
    }
    num
}

/// Tag for the coefficient rings selectable from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingKind {
    Rational,
    PrimeField(u64),
    QPoly,
}

impl FromStr for RingKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Q" => Ok(RingKind::Rational),
            "Q[q]" => Ok(RingKind::QPoly),
            _ => {
                let p = s
                    .strip_prefix("GF:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| Error::Parse(format!("unknown ring {s:?}")))?;
                if !is_prime(p) {
                    return Err(Error::NotPrime(p));
                }
                Ok(RingKind::PrimeField(p))
            }
        }
    }
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingKind::Rational => write!(f, "Q"),
            RingKind::PrimeField(p) => write!(f, "GF:{p}"),
            RingKind::QPoly => write!(f, "Q[q]"),
        }
    }
}

/// A coefficient tagged with its ring, for arithmetic across runtime-selected rings.
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Rational(Rational),
    Prime(PrimeFieldElem),
    Q(QPoly),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Mul,
    Neg,
    Eq,
}

impl Scalar {
    pub fn kind(&self) -> RingKind {
        match self {
            Scalar::Rational(_) => RingKind::Rational,
            Scalar::Prime(e) => RingKind::PrimeField(e.modulus()),
            Scalar::Q(_) => RingKind::QPoly,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Prime(e) => write!(f, "{e}"),
            Scalar::Q(p) => write!(f, "{p}"),
        }
    }
}

/// Exact arithmetic on two scalars of the same ring. `Neg` ignores `b`; `Eq`
/// returns `1` or `0` in the common ring.
pub fn ring_arith(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar> {
    if a.kind() != b.kind() {
        return Err(Error::RingMismatch {
            left: a.kind().to_string(),
            right: b.kind().to_string(),
        });
    }
    Ok(match (a, b) {
        (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(match op {
            ArithOp::Add => x + y,
            ArithOp::Mul => x * y,
            ArithOp::Neg => -x,
            ArithOp::Eq => rat((x == y) as i64),
        }),
        (Scalar::Prime(x), Scalar::Prime(y)) => Scalar::Prime(match op {
            ArithOp::Add => x.checked_add(y)?,
            ArithOp::Mul => x.checked_mul(y)?,
            ArithOp::Neg => x.negated(),
            ArithOp::Eq => PrimeFieldElem::new((x == y) as i64, x.modulus())?,
        }),
        (Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(match op {
            ArithOp::Add => x + y,
            ArithOp::Mul => x * y,
            ArithOp::Neg => -x,
            ArithOp::Eq => QPoly::from_ints(&[(x == y) as i64]),
        }),
        _ => unreachable!("kinds checked above"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn scalar_examples() {
        let a = Scalar::Rational(rat_frac(1, 2));
        let b = Scalar::Rational(rat_frac(1, 3));
        assert_eq!(
            ring_arith(&a, &b, ArithOp::Add).unwrap(),
            Scalar::Rational(rat_frac(5, 6))
        );
        let two = Scalar::Prime(PrimeFieldElem::new(2, 3).unwrap());
        assert_eq!(
            ring_arith(&two, &two, ArithOp::Mul).unwrap(),
            Scalar::Prime(PrimeFieldElem::new(1, 3).unwrap())
        );
        let onep = Scalar::Q(QPoly::from_ints(&[1, 1]));
        assert_eq!(
            ring_arith(&onep, &onep, ArithOp::Mul).unwrap(),
            Scalar::Q(QPoly::from_ints(&[1, 2, 1]))
        );
    }

    #[test]
    fn mixing_rings_fails() {
        let a = Scalar::Prime(PrimeFieldElem::new(1, 2).unwrap());
        let b = Scalar::Prime(PrimeFieldElem::new(1, 3).unwrap());
        assert!(matches!(
            ring_arith(&a, &b, ArithOp::Add),
            Err(Error::RingMismatch { .. })
        ));
        let c = Scalar::Rational(rat(1));
        assert!(ring_arith(&a, &c, ArithOp::Mul).is_err());
        assert!(matches!(PrimeFieldElem::new(1, 4), Err(Error::NotPrime(4))));
    }

    #[test]
    fn q_binomial_examples() {
        assert_eq!(q_binomial(5, 0), QPoly::one());
        assert_eq!(q_binomial(3, 1), QPoly::from_ints(&[1, 1, 1]));
        assert_eq!(q_binomial(4, 2), QPoly::from_ints(&[1, 1, 2, 1, 1]));
        assert_eq!(q_binomial(2, 3), QPoly::zero());
        assert_eq!(q_integer(0), QPoly::zero());
    }

    #[test]
    fn q_binomial_matches_factorial_quotient() {
        // independent route: (n)_q! / ((k)_q! (n-k)_q!) by long division
        for n in 0..=8 {
            for k in 0..=n {
                let den = &q_factorial(k) * &q_factorial(n - k);
                assert_eq!(q_factorial(n).exact_div(&den).unwrap(), q_binomial(n, k));
            }
        }
    }

    #[test]
    fn exact_division_examples() {
        let a = QPoly::from_ints(&[1, 2, 1]);
        let b = QPoly::from_ints(&[1, 1]);
        assert_eq!(a.exact_div(&b).unwrap(), b);
        let c = QPoly::from_ints(&[1, 0, 1]);
        match c.exact_div(&b) {
            Err(Error::DivisionNotExact { remainder, .. }) => assert_eq!(remainder, "2"),
            other => panic!("expected DivisionNotExact, got {other:?}"),
        }
        assert!(matches!(a.exact_div(&QPoly::zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(cyclotomic(1), QPoly::from_ints(&[-1, 1]));
        assert_eq!(cyclotomic(2), QPoly::from_ints(&[1, 1]));
        assert_eq!(cyclotomic(4), QPoly::from_ints(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), QPoly::from_ints(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), QPoly::from_ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn q_binomial_at_one_is_binomial() {
        for n in 0..=12usize {
            for k in 0..=n {
                assert_eq!(
                    q_binomial(n, k).eval(&rat(1)),
                    BigRational::from_integer(binomial(n as u64, k as u64))
                );
            }
        }
    }

    #[test]
    fn base_q_integer() {
        // (3)_{q^2} = 1 + q^2 + q^4
        assert_eq!(q_integer_base(3, 2), QPoly::from_ints(&[1, 0, 1, 0, 1]));
        assert_eq!(q_integer(3).compose_power(2), q_integer_base(3, 2));
    }

    #[test]
    fn qpoly_text_round_trip() {
        for s in ["0", "1 + q + 2*q^2", "-1 + q", "3/2 - q^3", "-q"] {
            let p: QPoly = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
    }

    #[test]
    fn rational_reduction_mod_p() {
        let x = PrimeFieldElem::from_rational(&rat_frac(1, 2), 5).unwrap();
        assert_eq!(x.residue(), 3);
        assert!(PrimeFieldElem::from_rational(&rat_frac(1, 5), 5).is_err());
    }

    fn small_rat() -> impl Strategy<Value = Rational> {
        (-20i64..20, 1i64..9).prop_map(|(n, d)| rat_frac(n, d))
    }

    fn small_qpoly() -> impl Strategy<Value = QPoly> {
        proptest::collection::vec(-5i64..5, 0..5).prop_map(|c| QPoly::from_ints(&c))
    }

    proptest! {
        #[test]
        fn rational_field_axioms(a in small_rat(), b in small_rat(), c in small_rat()) {
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            if !Zero::is_zero(&a) {
                prop_assert!((&a * a.recip()).is_one());
            }
        }

        #[test]
        fn prime_field_axioms(a in 0i64..7, b in 0i64..7, c in 0i64..7) {
            let (a, b, c) = (
                PrimeFieldElem::new(a, 7).unwrap(),
                PrimeFieldElem::new(b, 7).unwrap(),
                PrimeFieldElem::new(c, 7).unwrap(),
            );
            prop_assert_eq!(a.plus(&b).plus(&c), a.plus(&b.plus(&c)));
            prop_assert_eq!(a.times(&b.plus(&c)), a.times(&b).plus(&a.times(&c)));
            prop_assert!(a.plus(&a.negated()).is_zero());
            if let Some(inv) = a.inverse() {
                prop_assert_eq!(a.times(&inv).residue(), 1);
            }
        }

        #[test]
        fn exact_div_inverts_mul(a in small_qpoly(), b in small_qpoly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
        }
    }
}
