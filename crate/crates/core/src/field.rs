//! Coefficient fields: the rationals and prime fields `Z/p`.
//!
//! Field elements do not carry their field. Every operation goes through a
//! field object, in the same way polynomial rings are passed around
//! explicitly in the rest of the crate.

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default characteristic used for fast computations.
pub const DEFAULT_PRIME: u32 = 32003;
/// Second prime used to guard against unlucky reductions.
pub const CONFIRM_PRIME: u32 = 30011;

pub trait Field: Clone + Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync + 'static;

    fn characteristic(&self) -> u64;
    fn config(&self) -> FieldConfig;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    fn from_i64(&self, v: i64) -> Self::Elem;
    /// Image of `num/den`; fails when the denominator vanishes in the field.
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Self::Elem>;

    /// A random element. Over the rationals this is a small integer.
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    fn format(&self, a: &Self::Elem) -> String;

    /// Absolute value of the numerator over the rationals; `None` for
    /// finite fields. Used for pivot selection.
    fn magnitude(&self, _a: &Self::Elem) -> Option<BigInt> {
        None
    }

    /// Bytes identifying the element, used for hashing and sorting keys.
    fn key(&self, a: &Self::Elem) -> String {
        self.format(a)
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Enumerate all field elements when the field is finite and small.
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        None
    }
}

/// Runtime description of a coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldConfig {
    Rationals,
    Prime(u32),
}

impl FieldConfig {
    pub fn new(characteristic: u64) -> Result<Self> {
        if characteristic == 0 {
            return Ok(FieldConfig::Rationals);
        }
        if characteristic > u32::MAX as u64 || !is_prime(characteristic) {
            return Err(Error::Domain(format!(
                "characteristic {characteristic} is not 0 or a prime below 2^32"
            )));
        }
        Ok(FieldConfig::Prime(characteristic as u32))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldConfig::Rationals => 0,
            FieldConfig::Prime(p) => *p as u64,
        }
    }

    /// Parses `0`, `Q`, `QQ`, `32003`, `p32003`.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") || t.eq_ignore_ascii_case("qq") {
            return Ok(FieldConfig::Rationals);
        }
        let digits = t.strip_prefix('p').unwrap_or(t);
        let c: u64 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad field specification `{s}`")))?;
        FieldConfig::new(c)
    }
}

impl Default for FieldConfig {
    fn default() -> Self {
        FieldConfig::Prime(DEFAULT_PRIME)
    }
}

impl std::fmt::Display for FieldConfig {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldConfig::Rationals => write!(f, "QQ"),
            FieldConfig::Prime(p) => write!(f, "p{p}"),
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `Z/p` with `p` an odd prime below 2^32.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if p == 2 || !is_prime(p as u64) {
            return Err(Error::Domain(format!("{p} is not an odd prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    /// Symmetric representative in `(-p/2, p/2]`.
    pub fn signed(&self, a: u32) -> i64 {
        let a = a as i64;
        let p = self.p as i64;
        if a > p / 2 {
            a - p
        } else {
            a
        }
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn characteristic(&self) -> u64 {
        self.p as u64
    }
    fn config(&self) -> FieldConfig {
        FieldConfig::Prime(self.p)
    }
    #[inline]
    fn zero(&self) -> u32 {
        0
    }
    #[inline]
    fn one(&self) -> u32 {
        1
    }
    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    #[inline]
    fn is_one(&self, a: &u32) -> bool {
        *a == 1
    }
    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + *b as u64;
        let p = self.p as u64;
        (if s >= p { s - p } else { s }) as u32
    }
    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            (self.p - b) + a
        }
    }
    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u32) -> u32 {
        assert!(*a != 0, "inverse of zero in Z/{}", self.p);
        let (mut t, mut new_t) = (0i64, 1i64);
        let (mut r, mut new_r) = (self.p as i64, *a as i64);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        if t < 0 {
            t += self.p as i64;
        }
        t as u32
    }
    fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<u32> {
        let p = BigInt::from(self.p);
        let n = num.mod_floor(&p).to_u32().unwrap();
        let d = den.mod_floor(&p).to_u32().unwrap();
        if d == 0 {
            return Err(Error::Domain(format!(
                "denominator {den} vanishes modulo {}",
                self.p
            )));
        }
        Ok(self.div(&n, &d))
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u32 {
        rng.gen_range(0..self.p)
    }
    fn format(&self, a: &u32) -> String {
        self.signed(*a).to_string()
    }
    fn elements(&self) -> Option<Vec<u32>> {
        (self.p <= 1 << 20).then(|| (0..self.p).collect())
    }
}

/// The rational numbers with arbitrary precision.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Rationals;

/// Range of the integers returned by `Rationals::random`.
pub const RATIONAL_SAMPLE_BOUND: i64 = 30;

impl Field for Rationals {
    type Elem = BigRational;

    fn characteristic(&self) -> u64 {
        0
    }
    fn config(&self) -> FieldConfig {
        FieldConfig::Rationals
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero in QQ");
        a.recip()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<BigRational> {
        if den.is_zero() {
            return Err(Error::Domain("zero denominator".into()));
        }
        Ok(BigRational::new(num.clone(), den.clone()))
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        self.from_i64(rng.gen_range(-RATIONAL_SAMPLE_BOUND..=RATIONAL_SAMPLE_BOUND))
    }
    fn magnitude(&self, a: &BigRational) -> Option<BigInt> {
        Some(a.numer().abs())
    }
    fn format(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
}

/// Absolute size of a rational, used for pivot heuristics.
pub fn rational_height(a: &BigRational) -> BigInt {
    a.numer().abs().max(a.denom().clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_inverse() {
        let f = PrimeField::new(32003).unwrap();
        for a in [1u32, 2, 17, 32002, 12345] {
            assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        }
        assert_eq!(f.from_i64(-1), 32002);
        assert_eq!(f.format(&32002), "-1");
    }

    #[test]
    fn config_parsing() {
        assert_eq!(FieldConfig::parse("p32003").unwrap(), FieldConfig::Prime(32003));
        assert_eq!(FieldConfig::parse("0").unwrap(), FieldConfig::Rationals);
        assert_eq!(FieldConfig::parse("QQ").unwrap(), FieldConfig::Rationals);
        assert!(FieldConfig::parse("32004").is_err());
        assert!(PrimeField::new(2).is_err());
    }

    #[test]
    fn ratio_with_vanishing_denominator() {
        let f = PrimeField::new(7).unwrap();
        assert!(f.from_ratio(&BigInt::from(1), &BigInt::from(14)).is_err());
        assert_eq!(f.from_ratio(&BigInt::from(1), &BigInt::from(2)).unwrap(), 4);
    }
}
