//! Coefficient arithmetic as seen by the Buchberger engine.
//!
//! The engine never divides coefficients except through these hooks, which is
//! what lets the same completion loop run over a prime field, over the
//! rationals (fraction-free, on primitive integer polynomials) and over the
//! integers (strong bases).

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::{Field, Monomial, PrimeField};

pub type ETerm<C> = (C, Monomial);

pub trait Arith: Send + Sync {
    type C: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::C;
    fn one(&self) -> Self::C;
    fn is_zero(&self, a: &Self::C) -> bool;
    fn is_one(&self, a: &Self::C) -> bool;
    fn add(&self, a: &Self::C, b: &Self::C) -> Self::C;
    fn mul(&self, a: &Self::C, b: &Self::C) -> Self::C;
    fn neg(&self, a: &Self::C) -> Self::C;

    /// Multipliers `(u, v)` with `u*a == v*b`, so that `u*f - v*m*g` cancels a
    /// term of `f` with coefficient `a` against the leading coefficient `b` of `g`.
    /// `u` must be invertible in the coefficient domain of the ideal.
    /// `None` when `g` cannot reduce that term.
    fn elim(&self, a: &Self::C, b: &Self::C) -> Option<(Self::C, Self::C)>;

    /// Multipliers `(u, v)` with `u*a == v*b == lcm(a, b)`.
    fn s_mults(&self, a: &Self::C, b: &Self::C) -> (Self::C, Self::C);

    /// Bezout coefficients `(c, d)` with `c*a + d*b == gcd(a, b)` when the gcd
    /// properly divides both; only the integers ever need these.
    fn gcd_mults(&self, a: &Self::C, b: &Self::C) -> Option<(Self::C, Self::C)>;

    /// Whether `a` divides `b` (always, in a field).
    fn divides(&self, a: &Self::C, b: &Self::C) -> bool;

    /// Least common multiple of leading coefficients, for term-level chain tests.
    fn lcm(&self, a: &Self::C, b: &Self::C) -> Self::C;

    /// Whether `a` and `b` are coprime (always, in a field).
    fn coprime(&self, a: &Self::C, b: &Self::C) -> bool;

    fn is_unit(&self, a: &Self::C) -> bool;

    /// Canonical scaling of a new basis element. Returns the integer it was
    /// divided by, when that division must be recorded.
    fn normalize(&self, f: &mut [ETerm<Self::C>]) -> Option<BigInt>;

    /// Divides out the common content of the working polynomial and the
    /// remainder accumulated so far, when that is harmless.
    fn shrink(&self, _f: &mut [ETerm<Self::C>], _rem: &mut [ETerm<Self::C>]) {}

    fn bits(&self, a: &Self::C) -> u64;

    fn render(&self, a: &Self::C) -> String;
}

/// `GF(p)` with monic basis elements.
#[derive(Debug, Clone, Copy)]
pub struct FpArith(pub PrimeField);

impl Arith for FpArith {
    type C = u64;

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
        use crate::poly::Domain;
        self.0.add(a, b)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        use crate::poly::Domain;
        self.0.mul(a, b)
    }
    fn neg(&self, a: &u64) -> u64 {
        use crate::poly::Domain;
        self.0.neg(a)
    }
    fn elim(&self, a: &u64, b: &u64) -> Option<(u64, u64)> {
        Some((1, self.mul(a, &self.0.inv(b))))
    }
    fn s_mults(&self, a: &u64, b: &u64) -> (u64, u64) {
        (self.0.inv(a), self.0.inv(b))
    }
    fn gcd_mults(&self, _a: &u64, _b: &u64) -> Option<(u64, u64)> {
        None
    }
    fn divides(&self, _a: &u64, _b: &u64) -> bool {
        true
    }
    fn lcm(&self, _a: &u64, _b: &u64) -> u64 {
        1
    }
    fn coprime(&self, _a: &u64, _b: &u64) -> bool {
        true
    }
    fn is_unit(&self, a: &u64) -> bool {
        *a != 0
    }
    fn normalize(&self, f: &mut [ETerm<u64>]) -> Option<BigInt> {
        if let Some(lc) = f.first().map(|t| t.0) {
            if lc != 1 {
                let inv = self.0.inv(&lc);
                for t in f.iter_mut() {
                    t.0 = self.mul(&t.0, &inv);
                }
            }
        }
        None
    }
    fn bits(&self, _a: &u64) -> u64 {
        64 - self.0.modulus().leading_zeros() as u64
    }
    fn render(&self, a: &u64) -> String {
        a.to_string()
    }
}

fn content(f: &[ETerm<BigInt>]) -> BigInt {
    let mut g = BigInt::zero();
    for (c, _) in f {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn divide_all(f: &mut [ETerm<BigInt>], d: &BigInt) {
    for t in f.iter_mut() {
        t.0 = &t.0 / d;
    }
}

fn make_lc_positive(f: &mut [ETerm<BigInt>]) {
    if f.first().is_some_and(|t| t.0.is_negative()) {
        for t in f.iter_mut() {
            t.0 = -&t.0;
        }
    }
}

/// The rationals, computed fraction-free on primitive integer polynomials.
#[derive(Debug, Clone, Copy, Default)]
pub struct QArith;

impl Arith for QArith {
    type C = BigInt;

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
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn elim(&self, a: &BigInt, b: &BigInt) -> Option<(BigInt, BigInt)> {
        let g = a.gcd(b);
        let (mut u, mut v) = (b / &g, a / &g);
        if u.is_negative() {
            u = -u;
            v = -v;
        }
        Some((u, v))
    }
    fn s_mults(&self, a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
        let g = a.gcd(b);
        (b / &g, a / &g)
    }
    fn gcd_mults(&self, _a: &BigInt, _b: &BigInt) -> Option<(BigInt, BigInt)> {
        None
    }
    fn divides(&self, _a: &BigInt, _b: &BigInt) -> bool {
        true
    }
    fn lcm(&self, _a: &BigInt, _b: &BigInt) -> BigInt {
        BigInt::one()
    }
    fn coprime(&self, _a: &BigInt, _b: &BigInt) -> bool {
        true
    }
    fn is_unit(&self, a: &BigInt) -> bool {
        !a.is_zero()
    }
    fn normalize(&self, f: &mut [ETerm<BigInt>]) -> Option<BigInt> {
        let c = content(f);
        if !c.is_zero() && !c.is_one() {
            divide_all(f, &c);
        }
        make_lc_positive(f);
        None
    }
    fn shrink(&self, f: &mut [ETerm<BigInt>], rem: &mut [ETerm<BigInt>]) {
        let mut g = content(f);
        if !g.is_one() {
            g = g.gcd(&content(rem));
        }
        if !g.is_zero() && !g.is_one() {
            divide_all(f, &g);
            divide_all(rem, &g);
        }
    }
    fn bits(&self, a: &BigInt) -> u64 {
        a.bits()
    }
    fn render(&self, a: &BigInt) -> String {
        a.to_string()
    }
}

/// The integers: strong bases, with exact divisions only. Content is removed
/// and recorded unless `keep_content` is set, in which case the basis is exact
/// over the integers but coefficients grow faster.
#[derive(Debug, Clone, Copy, Default)]
pub struct ZArith {
    pub keep_content: bool,
}

impl Arith for ZArith {
    type C = BigInt;

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
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn elim(&self, a: &BigInt, b: &BigInt) -> Option<(BigInt, BigInt)> {
        let (q, r) = a.div_rem(b);
        r.is_zero().then(|| (BigInt::one(), q))
    }
    fn s_mults(&self, a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
        let l = a.lcm(b);
        (&l / a, &l / b)
    }
    fn gcd_mults(&self, a: &BigInt, b: &BigInt) -> Option<(BigInt, BigInt)> {
        let e = a.extended_gcd(b);
        if e.gcd == a.abs() || e.gcd == b.abs() {
            return None;
        }
        Some((e.x, e.y))
    }
    fn divides(&self, a: &BigInt, b: &BigInt) -> bool {
        (b % a).is_zero()
    }
    fn lcm(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a.lcm(b)
    }
    fn coprime(&self, a: &BigInt, b: &BigInt) -> bool {
        a.gcd(b).is_one()
    }
    fn is_unit(&self, a: &BigInt) -> bool {
        a.abs().is_one()
    }
    fn normalize(&self, f: &mut [ETerm<BigInt>]) -> Option<BigInt> {
        make_lc_positive(f);
        if self.keep_content || (f.len() == 1 && f[0].1.is_one()) {
            return None;
        }
        let c = content(f);
        if c > BigInt::one() {
            divide_all(f, &c);
            Some(c)
        } else {
            None
        }
    }
    fn bits(&self, a: &BigInt) -> u64 {
        a.bits()
    }
    fn render(&self, a: &BigInt) -> String {
        a.to_string()
    }
}
