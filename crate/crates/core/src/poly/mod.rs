//! Sparse distributed multivariate polynomials.
//!
//! A [`Polynomial`] is a list of `(coefficient, monomial)` terms kept strictly
//! decreasing under the monomial order of its [`PolyRing`], with no zero
//! coefficients.

mod det;
mod domain;
pub mod gf;
mod monomial;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use thiserror::Error;

pub use det::determinant;
pub use domain::{is_prime, CoefficientDomain, Domain, Field, Integers, PrimeField, Rationals};
pub use monomial::{Monomial, MonomialOrder, OrderKind};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("{0} is not a prime below 2^32")]
    NotPrime(u64),
    #[error("determinant of a non-square {rows}x{cols} grid")]
    NotSquare { rows: usize, cols: usize },
    #[error("no value assigned to variable {0}")]
    MissingAssignment(String),
    #[error("target ring has {target} variables, fewer than the source's {source_vars}")]
    TooFewVariables { target: usize, source_vars: usize },
}

/// Coefficient domain, variable names and monomial order.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyRing<D: Domain> {
    domain: D,
    vars: Vec<String>,
    order: MonomialOrder,
}

impl<D: Domain> PolyRing<D> {
    pub fn new(domain: D, vars: Vec<String>, order: MonomialOrder) -> Arc<Self> {
        Arc::new(PolyRing { domain, vars, order })
    }

    pub fn domain(&self) -> &D {
        &self.domain
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same domain and order with extra trailing variables.
    pub fn extended(&self, extra: &[String]) -> Arc<Self> {
        let mut vars = self.vars.clone();
        vars.extend(extra.iter().cloned());
        PolyRing::new(self.domain.clone(), vars, self.order)
    }

    /// Same variables and order over another domain.
    pub fn with_domain<D2: Domain>(&self, domain: D2) -> Arc<PolyRing<D2>> {
        PolyRing::new(domain, self.vars.clone(), self.order)
    }

    /// Same variables and domain under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Arc<Self> {
        PolyRing::new(self.domain.clone(), self.vars.clone(), order)
    }
}

/// Checks that two ring handles denote the same ring.
pub fn same_ring<D: Domain>(a: &Arc<PolyRing<D>>, b: &Arc<PolyRing<D>>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

pub type Term<E> = (E, Monomial);

#[derive(Clone)]
pub struct Polynomial<D: Domain> {
    ring: Arc<PolyRing<D>>,
    terms: Vec<Term<D::Elem>>,
}

impl<D: Domain> PartialEq for Polynomial<D> {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl<D: Domain> Eq for Polynomial<D> {}

impl<D: Domain> Polynomial<D> {
    pub fn zero(ring: &Arc<PolyRing<D>>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Arc<PolyRing<D>>, c: D::Elem) -> Self {
        Self::from_terms(ring, vec![(c, Monomial::one(ring.nvars()))])
    }

    pub fn one(ring: &Arc<PolyRing<D>>) -> Self {
        Self::constant(ring, ring.domain.one())
    }

    pub fn var(ring: &Arc<PolyRing<D>>, i: usize) -> Self {
        Polynomial { ring: ring.clone(), terms: vec![(ring.domain.one(), Monomial::var(ring.nvars(), i))] }
    }

    pub fn monomial(ring: &Arc<PolyRing<D>>, c: D::Elem, m: Monomial) -> Self {
        Self::from_terms(ring, vec![(c, m)])
    }

    /// Sorts, merges equal monomials and drops zero coefficients.
    pub fn from_terms(ring: &Arc<PolyRing<D>>, mut terms: Vec<Term<D::Elem>>) -> Self {
        let order = ring.order;
        let dom = &ring.domain;
        terms.sort_by(|a, b| order.cmp(&b.1, &a.1));
        let mut out: Vec<Term<D::Elem>> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            debug_assert_eq!(m.nvars(), ring.nvars());
            match out.last_mut() {
                Some(last) if last.1 == m => last.0 = dom.add(&last.0, &c),
                _ => out.push((c, m)),
            }
        }
        out.retain(|(c, _)| !dom.is_zero(c));
        Polynomial { ring: ring.clone(), terms: out }
    }

    /// Wraps terms already sorted decreasingly with nonzero coefficients.
    pub(crate) fn from_sorted_terms(ring: &Arc<PolyRing<D>>, terms: Vec<Term<D::Elem>>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.order.cmp(&w[0].1, &w[1].1) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(c, _)| !ring.domain.is_zero(c)));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Arc<PolyRing<D>> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term<D::Elem>] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term<D::Elem>> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading_term(&self) -> Option<&Term<D::Elem>> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn leading_coeff(&self) -> Option<&D::Elem> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.1.degree()).max()
    }

    /// A nonzero constant.
    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1.is_one()
    }

    /// A single term (including nonzero constants).
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Indices of variables that occur.
    pub fn support(&self) -> Vec<usize> {
        (0..self.ring.nvars()).filter(|&i| self.terms.iter().any(|t| t.1.exponent(i) > 0)).collect()
    }

    fn check(&self, other: &Self) -> Result<(), PolyError> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        Ok(self.product(other))
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let dom = &self.ring.domain;
        let order = self.ring.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let sign = |c: &D::Elem| if negate { dom.neg(c) } else { c.clone() };
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].1, &b[j].1) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((sign(&b[j].0), b[j].1.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { dom.sub(&a[i].0, &b[j].0) } else { dom.add(&a[i].0, &b[j].0) };
                    if !dom.is_zero(&c) {
                        out.push((c, a[i].1.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(c, m)| (sign(c), m.clone())));
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    fn product(&self, other: &Self) -> Self {
        let dom = &self.ring.domain;
        let mut acc = Polynomial::zero(&self.ring);
        // sum of term-multiples of the longer factor, merged one row at a time
        let (short, long) = if self.terms.len() <= other.terms.len() { (self, other) } else { (other, self) };
        for (c, m) in &short.terms {
            let row: Vec<_> = long
                .terms
                .iter()
                .filter_map(|(d, n)| {
                    let e = dom.mul(c, d);
                    (!dom.is_zero(&e)).then(|| (e, m.mul(n)))
                })
                .collect();
            acc = acc.merge(&Polynomial { ring: self.ring.clone(), terms: row }, false);
        }
        acc
    }

    pub fn scale(&self, c: &D::Elem) -> Self {
        let dom = &self.ring.domain;
        let terms = self
            .terms
            .iter()
            .filter_map(|(d, m)| {
                let e = dom.mul(c, d);
                (!dom.is_zero(&e)).then(|| (e, m.clone()))
            })
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        let terms = self.terms.iter().map(|(c, n)| (c.clone(), n.mul(m))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.product(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.product(&base);
            }
        }
        acc
    }

    /// Negates if needed so that the leading coefficient is not negative.
    pub fn normalize_sign(&self) -> Self {
        match self.leading_coeff() {
            Some(c) if self.ring.domain.is_negative(c) => -self,
            _ => self.clone(),
        }
    }

    /// Equality up to a global sign.
    pub fn eq_up_to_sign(&self, other: &Self) -> bool {
        self == other || *self == -other
    }

    /// Re-expresses in a ring with the same domain and at least as many variables;
    /// existing variables keep their positions.
    pub fn embed(&self, target: &Arc<PolyRing<D>>) -> Result<Self, PolyError> {
        if target.nvars() < self.ring.nvars() {
            return Err(PolyError::TooFewVariables { target: target.nvars(), source_vars: self.ring.nvars() });
        }
        let n = target.nvars();
        Ok(Polynomial::from_terms(
            target,
            self.terms.iter().map(|(c, m)| (c.clone(), m.extended(n))).collect(),
        ))
    }

    /// Stable text form: `x_2_3^2*x_3_5 - 2*x_2_4 + 1`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let dom = &self.ring.domain;
        let mut s = String::new();
        for (k, (c, m)) in self.terms.iter().enumerate() {
            let neg = dom.is_negative(c);
            let abs = if neg { dom.neg(c) } else { c.clone() };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = m.render(&self.ring.vars);
            if m.is_one() {
                s.push_str(&dom.render(&abs));
            } else if dom.is_one(&abs) {
                s.push_str(&mono);
            } else {
                s.push_str(&dom.render(&abs));
                s.push('*');
                s.push_str(&mono);
            }
        }
        s
    }
}

impl Polynomial<Integers> {
    /// Reduces or injects the coefficients into another domain; zero terms are pruned.
    /// The target ring may have extra trailing variables.
    pub fn map_domain<D2: Domain>(&self, target: &Arc<PolyRing<D2>>) -> Result<Polynomial<D2>, PolyError> {
        if target.nvars() < self.ring.nvars() {
            return Err(PolyError::TooFewVariables { target: target.nvars(), source_vars: self.ring.nvars() });
        }
        let n = target.nvars();
        let dom = target.domain();
        Ok(Polynomial::from_terms(
            target,
            self.terms.iter().map(|(c, m)| (dom.from_integer(c), m.extended(n))).collect(),
        ))
    }

    /// Evaluates at a point of a small finite field; integer coefficients pass
    /// through the prime subfield.
    pub fn evaluate(&self, field: &gf::GaloisField, point: &[Option<gf::Gf>]) -> Result<gf::Gf, PolyError> {
        let mut acc = field.zero();
        for (c, m) in &self.terms {
            let mut v = field.from_integer(c);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let x = point
                    .get(i)
                    .copied()
                    .flatten()
                    .ok_or_else(|| PolyError::MissingAssignment(self.ring.vars[i].clone()))?;
                v = field.mul(v, field.pow(x, e as u32));
            }
            acc = field.add(acc, v);
        }
        Ok(acc)
    }

    /// Greatest common divisor of the coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        use num_integer::Integer;
        self.terms.iter().fold(BigInt::from(0), |g, (c, _)| g.gcd(c))
    }
}

impl<D: Domain> fmt::Display for Polynomial<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<D: Domain> fmt::Debug for Polynomial<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({} over {})", self.render(), self.ring.domain.tag())
    }
}

impl<D: Domain> Neg for &Polynomial<D> {
    type Output = Polynomial<D>;
    fn neg(self) -> Polynomial<D> {
        let dom = &self.ring.domain;
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(c, m)| (dom.neg(c), m.clone())).collect() }
    }
}

impl<D: Domain> Neg for Polynomial<D> {
    type Output = Polynomial<D>;
    fn neg(self) -> Polynomial<D> {
        -&self
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl<D: Domain> $tr<&Polynomial<D>> for &Polynomial<D> {
            type Output = Polynomial<D>;
            fn $method(self, rhs: &Polynomial<D>) -> Polynomial<D> {
                self.$try(rhs).expect("polynomials from different rings")
            }
        }
        impl<D: Domain> $tr<Polynomial<D>> for Polynomial<D> {
            type Output = Polynomial<D>;
            fn $method(self, rhs: Polynomial<D>) -> Polynomial<D> {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn zring() -> Arc<PolyRing<Integers>> {
        PolyRing::new(Integers, names(&["x", "y", "z"]), MonomialOrder::DEGREVLEX)
    }

    #[test]
    fn square_of_binomial() {
        let r = zring();
        let s = Polynomial::var(&r, 0) + Polynomial::var(&r, 1);
        assert_eq!((&s * &s).render(), "x^2 + 2*x*y + y^2");
        let r2 = r.with_domain(PrimeField::new(2).unwrap());
        let s2 = s.map_domain(&r2).unwrap();
        assert_eq!((&s2 * &s2).render(), "x^2 + y^2");
        assert!((&s + &(-&s)).is_zero());
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = Polynomial::var(&zring(), 0);
        let other = PolyRing::new(Integers, names(&["u", "v", "w"]), MonomialOrder::DEGREVLEX);
        let b = Polynomial::var(&other, 0);
        assert_eq!(a.try_add(&b), Err(PolyError::RingMismatch));
        // structurally equal rings are the same ring
        assert!(a.try_add(&Polynomial::var(&zring(), 1)).is_ok());
    }

    #[test]
    fn map_domain_examples() {
        let r = zring();
        let x = Polynomial::var(&r, 0);
        let f = &x.scale(&BigInt::from(2)) + &Polynomial::constant(&r, BigInt::from(3));
        let f2 = f.map_domain(&r.with_domain(PrimeField::new(2).unwrap())).unwrap();
        assert_eq!(f2.render(), "1");
        let g = (&x * &Polynomial::var(&r, 1)).scale(&BigInt::from(6));
        assert!(g.map_domain(&r.with_domain(PrimeField::new(3).unwrap())).unwrap().is_zero());
        let fq = f.map_domain(&r.with_domain(Rationals)).unwrap();
        assert_eq!(fq.render(), "2*x + 3");
        assert_eq!(fq.leading_coeff(), Some(&BigRational::from_integer(BigInt::from(2))));
    }

    #[test]
    fn rendering_signs() {
        let r = zring();
        let f = Polynomial::from_terms(
            &r,
            vec![
                (BigInt::from(-1), Monomial::from_exponents(&[1, 0, 0])),
                (BigInt::from(-3), Monomial::from_exponents(&[0, 0, 0])),
                (BigInt::from(1), Monomial::from_exponents(&[0, 2, 0])),
            ],
        );
        assert_eq!(f.render(), "y^2 - x - 3");
        assert_eq!((-&f).render(), "-y^2 + x + 3");
        assert_eq!((-&f).normalize_sign(), f);
        assert_eq!(Polynomial::zero(&r).render(), "0");
    }

    #[test]
    fn no_overflow_in_long_products() {
        // product of 40 binomials (x + c_i) checked against the expansion by
        // repeated addition: f * (x + c) = x*f + f + ... + f (c times)
        let r = zring();
        let x = Polynomial::var(&r, 0);
        let mut prod = Polynomial::one(&r);
        let mut oracle = Polynomial::one(&r);
        let x1 = Monomial::var(3, 0);
        for i in 0..40u32 {
            let c = 1_000_003 + i as i64 * 7919;
            let b = &x + &Polynomial::constant(&r, BigInt::from(c));
            prod = &prod * &b;
            // oracle: x*f + c*f with c*f as doubling-and-add
            let mut cf = Polynomial::zero(&r);
            let mut pow2 = oracle.clone();
            let mut k = c;
            while k > 0 {
                if k & 1 == 1 {
                    cf = &cf + &pow2;
                }
                pow2 = &pow2 + &pow2;
                k >>= 1;
            }
            oracle = &oracle.mul_monomial(&x1) + &cf;
        }
        assert_eq!(prod, oracle);
        assert!(prod.terms().iter().any(|(c, _)| c.bits() > 64));
    }

    fn arb_poly(r: Arc<PolyRing<Integers>>) -> impl Strategy<Value = Polynomial<Integers>> {
        proptest::collection::vec((-5i64..=5, proptest::collection::vec(0u16..3, 3)), 0..5).prop_map(move |ts| {
            Polynomial::from_terms(
                &r,
                ts.into_iter().map(|(c, e)| (BigInt::from(c), Monomial::from_exponents(&e))).collect(),
            )
        })
    }

    proptest! {
        #[test]
        fn ring_axioms_over_three_domains(f in arb_poly(zring()), g in arb_poly(zring()), h in arb_poly(zring())) {
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
            prop_assert_eq!(&f * &g, &g * &f);
            prop_assert_eq!(&f + &g, &g + &f);
            let rq = zring().with_domain(Rationals);
            let r5 = zring().with_domain(PrimeField::new(5).unwrap());
            let (fq, gq, hq) = (f.map_domain(&rq).unwrap(), g.map_domain(&rq).unwrap(), h.map_domain(&rq).unwrap());
            prop_assert_eq!(&fq * &(&gq + &hq), &(&fq * &gq) + &(&fq * &hq));
            prop_assert_eq!(&(&fq * &gq) * &hq, &fq * &(&gq * &hq));
            let (f5, g5, h5) = (f.map_domain(&r5).unwrap(), g.map_domain(&r5).unwrap(), h.map_domain(&r5).unwrap());
            prop_assert_eq!(&f5 * &(&g5 + &h5), &(&f5 * &g5) + &(&f5 * &h5));
            prop_assert_eq!(&(&f5 * &g5) * &h5, &f5 * &(&g5 * &h5));
            prop_assert_eq!(&f5 * &g5, &g5 * &f5);
        }

        #[test]
        fn map_domain_is_a_homomorphism(f in arb_poly(zring()), g in arb_poly(zring())) {
            let r3 = zring().with_domain(PrimeField::new(3).unwrap());
            let m = |p: &Polynomial<Integers>| p.map_domain(&r3).unwrap();
            prop_assert_eq!(m(&(&f + &g)), &m(&f) + &m(&g));
            prop_assert_eq!(m(&(&f * &g)), &m(&f) * &m(&g));
            let rq = zring().with_domain(Rationals);
            let q = |p: &Polynomial<Integers>| p.map_domain(&rq).unwrap();
            prop_assert_eq!(q(&(&f * &g)), &q(&f) * &q(&g));
        }
    }
}
