//! Coefficient domains: the integers, the rationals and prime fields.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::PolyError;

/// Runtime tag naming a coefficient domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CoefficientDomain {
    IntegerRing,
    RationalField,
    PrimeField { p: u64 },
}

impl CoefficientDomain {
    /// Characteristic: 0 for the integers and rationals.
    pub fn characteristic(self) -> u64 {
        match self {
            CoefficientDomain::PrimeField { p } => p,
            _ => 0,
        }
    }
}

impl fmt::Display for CoefficientDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientDomain::IntegerRing => f.write_str("ZZ"),
            CoefficientDomain::RationalField => f.write_str("QQ"),
            CoefficientDomain::PrimeField { p } => write!(f, "GF({p})"),
        }
    }
}

/// A commutative coefficient ring with exact arithmetic.
pub trait Domain: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync;

    fn tag(&self) -> CoefficientDomain;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Image of an integer under the canonical map.
    fn from_integer(&self, n: &BigInt) -> Self::Elem;
    /// Sign used for rendering and for sign normalization; always false in a prime field.
    fn is_negative(&self, a: &Self::Elem) -> bool;
    /// Renders `a`, which is non-negative in the sense of [`Domain::is_negative`].
    fn render(&self, a: &Self::Elem) -> String;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_integer(&BigInt::from(n))
    }

    /// Whether `a` is invertible.
    fn is_unit(&self, a: &Self::Elem) -> bool;
}

/// A domain in which every nonzero element is invertible.
pub trait Field: Domain {
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Integers;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

/// `Z/pZ` for a prime `p < 2^32`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
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

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, PolyError> {
        if p >= 1 << 32 || !is_prime(p) {
            return Err(PolyError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a % self.p;
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        acc
    }
}

impl Domain for Integers {
    type Elem = BigInt;

    fn tag(&self) -> CoefficientDomain {
        CoefficientDomain::IntegerRing
    }
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigInt) -> bool {
        a.is_one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn from_integer(&self, n: &BigInt) -> BigInt {
        n.clone()
    }
    fn is_negative(&self, a: &BigInt) -> bool {
        a.is_negative()
    }
    fn render(&self, a: &BigInt) -> String {
        a.to_string()
    }
    fn is_unit(&self, a: &BigInt) -> bool {
        a.abs().is_one()
    }
}

impl Domain for Rationals {
    type Elem = BigRational;

    fn tag(&self) -> CoefficientDomain {
        CoefficientDomain::RationalField
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
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn from_integer(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn is_negative(&self, a: &BigRational) -> bool {
        a.is_negative()
    }
    fn render(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn is_unit(&self, a: &BigRational) -> bool {
        !a.is_zero()
    }
}

impl Field for Rationals {
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
}

impl Domain for PrimeField {
    type Elem = u64;

    fn tag(&self) -> CoefficientDomain {
        CoefficientDomain::PrimeField { p: self.p }
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn is_one(&self, a: &u64) -> bool {
        *a == 1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn from_integer(&self, n: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        n.mod_floor(&p).to_u64().expect("residue fits in u64")
    }
    fn is_negative(&self, _a: &u64) -> bool {
        false
    }
    fn render(&self, a: &u64) -> String {
        a.to_string()
    }
    fn is_unit(&self, a: &u64) -> bool {
        *a != 0
    }
}

impl Field for PrimeField {
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero in GF({})", self.p);
        self.pow(*a, self.p - 2)
    }
}
