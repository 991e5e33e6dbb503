//! Gröbner bases over prime fields, the rationals and the integers.

pub mod arith;
mod engine;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::poly::{Domain, Field, Integers, Monomial, PolyRing, Polynomial, PrimeField, Rationals, Term};
use arith::{Arith, FpArith, QArith, ZArith};
pub use engine::{EngineStats, LimitKind, Limits, PairKind, TraceEvent};
use engine::{lin_comb, reduce, EPoly, Engine};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("resource limit exceeded: {kind}")]
    ResourceLimit { kind: LimitKind, stats: EngineStats },
    #[error("polynomials live in different rings")]
    RingMismatch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GbConfig {
    pub limits: Limits,
    pub trace: bool,
    /// Over the integers, keep contents instead of dividing them out.
    pub keep_content: bool,
}

/// Coefficient domains the engine can run over.
#[doc(hidden)]
pub trait GroebnerDomain: Domain {
    type A: Arith;
    fn arith(&self) -> Self::A;
    fn arith_for(&self, _cfg: &GbConfig) -> Self::A {
        self.arith()
    }
    /// Engine form of `terms` together with the factor `s` such that the
    /// engine polynomial equals `s * terms`.
    fn to_engine(&self, terms: &[Term<Self::Elem>]) -> (EPoly<<Self::A as Arith>::C>, <Self::A as Arith>::C);
    /// Inverse of [`GroebnerDomain::to_engine`]: divides by `s`.
    fn from_engine(&self, terms: EPoly<<Self::A as Arith>::C>, s: &<Self::A as Arith>::C) -> Vec<Term<Self::Elem>>;
    /// Final scaling of a basis element.
    fn finish(&self, terms: EPoly<<Self::A as Arith>::C>) -> Vec<Term<Self::Elem>>;
}

impl GroebnerDomain for PrimeField {
    type A = FpArith;
    fn arith(&self) -> FpArith {
        FpArith(*self)
    }
    fn to_engine(&self, terms: &[Term<u64>]) -> (EPoly<u64>, u64) {
        (terms.to_vec(), 1)
    }
    fn from_engine(&self, mut terms: EPoly<u64>, s: &u64) -> Vec<Term<u64>> {
        if *s != 1 {
            let inv = self.inv(s);
            for t in terms.iter_mut() {
                t.0 = self.mul(&t.0, &inv);
            }
        }
        terms
    }
    fn finish(&self, terms: EPoly<u64>) -> Vec<Term<u64>> {
        let lc = terms[0].0;
        self.from_engine(terms, &lc)
    }
}

impl GroebnerDomain for Rationals {
    type A = QArith;
    fn arith(&self) -> QArith {
        QArith
    }
    fn to_engine(&self, terms: &[Term<BigRational>]) -> (EPoly<BigInt>, BigInt) {
        let d = terms.iter().fold(BigInt::one(), |acc, (c, _)| acc.lcm(c.denom()));
        let out = terms.iter().map(|(c, m)| (c.numer() * (&d / c.denom()), m.clone())).collect();
        (out, d)
    }
    fn from_engine(&self, terms: EPoly<BigInt>, s: &BigInt) -> Vec<Term<BigRational>> {
        terms.into_iter().map(|(c, m)| (BigRational::new(c, s.clone()), m)).collect()
    }
    fn finish(&self, terms: EPoly<BigInt>) -> Vec<Term<BigRational>> {
        let lc = terms[0].0.clone();
        self.from_engine(terms, &lc)
    }
}

impl GroebnerDomain for Integers {
    type A = ZArith;
    fn arith(&self) -> ZArith {
        ZArith::default()
    }
    fn arith_for(&self, cfg: &GbConfig) -> ZArith {
        ZArith { keep_content: cfg.keep_content }
    }
    fn to_engine(&self, terms: &[Term<BigInt>]) -> (EPoly<BigInt>, BigInt) {
        (terms.to_vec(), BigInt::one())
    }
    fn from_engine(&self, terms: EPoly<BigInt>, s: &BigInt) -> Vec<Term<BigInt>> {
        if s.is_one() {
            terms
        } else {
            terms.into_iter().map(|(c, m)| (c / s, m)).collect()
        }
    }
    fn finish(&self, terms: EPoly<BigInt>) -> Vec<Term<BigInt>> {
        terms
    }
}

type C<D> = <<D as GroebnerDomain>::A as Arith>::C;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct GbStats {
    pub pairs: usize,
    pub pairs_skipped: usize,
    pub zero_reductions: usize,
    pub reductions: usize,
    pub basis_peak: usize,
}

impl From<EngineStats> for GbStats {
    fn from(s: EngineStats) -> Self {
        GbStats {
            pairs: s.pairs,
            pairs_skipped: s.pairs_skipped,
            zero_reductions: s.zero_reductions,
            reductions: s.reductions,
            basis_peak: s.basis_peak,
        }
    }
}

pub struct GroebnerBasis<D: GroebnerDomain> {
    ring: Arc<PolyRing<D>>,
    elements: Vec<Polynomial<D>>,
    engine: Vec<EPoly<C<D>>>,
    division_record: Vec<BigInt>,
    stats: GbStats,
    trace: Vec<TraceEvent>,
}

impl<D: GroebnerDomain> Clone for GroebnerBasis<D> {
    fn clone(&self) -> Self {
        GroebnerBasis {
            ring: self.ring.clone(),
            elements: self.elements.clone(),
            engine: self.engine.clone(),
            division_record: self.division_record.clone(),
            stats: self.stats,
            trace: self.trace.clone(),
        }
    }
}

impl<D: GroebnerDomain> fmt::Debug for GroebnerBasis<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroebnerBasis")
            .field("elements", &self.elements.iter().map(|p| p.render()).collect::<Vec<_>>())
            .field("division_record", &self.division_record)
            .field("stats", &self.stats)
            .finish()
    }
}

impl<D: GroebnerDomain> GroebnerBasis<D> {
    pub fn ring(&self) -> &Arc<PolyRing<D>> {
        &self.ring
    }

    /// Basis elements, sorted by increasing leading monomial.
    pub fn elements(&self) -> &[Polynomial<D>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Integers divided out of intermediate polynomials; always empty over a field.
    pub fn division_record(&self) -> &[BigInt] {
        &self.division_record
    }

    pub fn stats(&self) -> GbStats {
        self.stats
    }

    pub fn trace(&self) -> &[TraceEvent] {
        &self.trace
    }

    /// One line per processed pair.
    pub fn trace_lines(&self) -> Vec<String> {
        self.trace
            .iter()
            .map(|e| {
                let kind = match e.kind {
                    PairKind::S => "S",
                    PairKind::G => "G",
                };
                let div = e.division.as_ref().map(|d| d.to_string()).unwrap_or_else(|| "-".into());
                format!(
                    "pair {} {}({},{}) lcm={} zero={} div={}",
                    e.pair,
                    kind,
                    e.first,
                    e.second,
                    e.lcm.render(self.ring.vars()),
                    e.reduced_to_zero,
                    div
                )
            })
            .collect()
    }

    pub fn contains_one(&self) -> bool {
        let a = self.ring.domain().arith();
        self.engine.iter().any(|f| f.len() == 1 && f[0].1.is_one() && a.is_unit(&f[0].0))
    }

    /// Remainder of `f` on division by the basis.
    pub fn normal_form(&self, f: &Polynomial<D>) -> Result<Polynomial<D>, GroebnerError> {
        if !crate::poly::same_ring(f.ring(), &self.ring) {
            return Err(GroebnerError::RingMismatch);
        }
        let dom = self.ring.domain();
        let a = dom.arith();
        let (e, s) = dom.to_engine(f.terms());
        let refs: Vec<&EPoly<C<D>>> = self.engine.iter().collect();
        let mut steps = 0;
        let (rem, u) = reduce(&a, self.ring.order(), e, &refs, false, &mut steps);
        let scale = a.mul(&u, &s);
        Ok(Polynomial::from_terms(&self.ring, dom.from_engine(rem, &scale)))
    }

    pub fn ideal_membership(&self, f: &Polynomial<D>) -> Result<bool, GroebnerError> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Checks that every S-polynomial (and G-polynomial over the integers) of the basis reduces to zero.
    pub fn criterion_holds(&self) -> bool {
        let a = self.ring.domain().arith();
        let order = self.ring.order();
        let refs: Vec<&EPoly<C<D>>> = self.engine.iter().collect();
        for i in 0..self.engine.len() {
            for j in i + 1..self.engine.len() {
                let (f, g) = (&self.engine[i], &self.engine[j]);
                let l = f[0].1.lcm(&g[0].1);
                let mf = f[0].1.quotient_of(&l).unwrap();
                let mg = g[0].1.quotient_of(&l).unwrap();
                let (u, v) = a.s_mults(&f[0].0, &g[0].0);
                let s = lin_comb(&a, order, &u, &mf, &f[1..], &v, &mg, &g[1..]);
                let mut steps = 0;
                if !reduce(&a, order, s, &refs, false, &mut steps).0.is_empty() {
                    return false;
                }
                if let Some((c, d)) = a.gcd_mults(&f[0].0, &g[0].0) {
                    let gp = lin_comb(&a, order, &c, &mf, f, &a.neg(&d), &mg, g);
                    if !reduce(&a, order, gp, &refs, false, &mut steps).0.is_empty() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Whether no term of any element is divisible by another element's leading monomial.
    pub fn is_reduced(&self) -> bool {
        let lms: Vec<&Monomial> = self.engine.iter().map(|f| &f[0].1).collect();
        self.engine.iter().enumerate().all(|(i, f)| {
            f.iter().all(|(_, m)| lms.iter().enumerate().all(|(j, l)| i == j || !l.divides(m)))
        })
    }
}

fn compute<D: GroebnerDomain>(
    ring: &Arc<PolyRing<D>>,
    gens: &[Polynomial<D>],
    cfg: &GbConfig,
    stop_on_unit: bool,
) -> Result<GroebnerBasis<D>, GroebnerError> {
    if gens.iter().any(|g| !crate::poly::same_ring(g.ring(), ring)) {
        return Err(GroebnerError::RingMismatch);
    }
    let dom = ring.domain();
    let a = dom.arith_for(cfg);
    let egens: Vec<EPoly<C<D>>> = gens.iter().filter(|g| !g.is_zero()).map(|g| dom.to_engine(g.terms()).0).collect();
    let eng = Engine::new(&a, ring.order(), ring.nvars(), cfg.limits, cfg.trace);
    let out = eng
        .run(egens, stop_on_unit)
        .map_err(|h| GroebnerError::ResourceLimit { kind: h.kind, stats: h.stats })?;
    let elements = out
        .basis
        .iter()
        .map(|f| Polynomial::from_sorted_terms(ring, dom.finish(f.clone())))
        .collect();
    Ok(GroebnerBasis {
        ring: ring.clone(),
        elements,
        engine: out.basis,
        division_record: out.division_record,
        stats: out.stats.into(),
        trace: out.trace,
    })
}

/// Reduced Gröbner basis over a prime field or the rationals, under the ring's order.
pub fn buchberger_field<D>(
    ring: &Arc<PolyRing<D>>,
    generators: &[Polynomial<D>],
    cfg: &GbConfig,
) -> Result<GroebnerBasis<D>, GroebnerError>
where
    D: GroebnerDomain + Field,
{
    compute(ring, generators, cfg, true)
}

/// Strong Gröbner basis over the integers. Stops early once `1` appears.
pub fn buchberger_integer(
    ring: &Arc<PolyRing<Integers>>,
    generators: &[Polynomial<Integers>],
    cfg: &GbConfig,
) -> Result<GroebnerBasis<Integers>, GroebnerError> {
    compute(ring, generators, cfg, true)
}

/// Whether `f` lies in the radical of the ideal generated by `generators`,
/// by testing `1` against the ideal with `1 - y*f` adjoined for a fresh `y`.
pub fn radical_membership<D>(
    f: &Polynomial<D>,
    generators: &[Polynomial<D>],
    cfg: &GbConfig,
) -> Result<bool, GroebnerError>
where
    D: GroebnerDomain + Field,
{
    radical_membership_all(std::slice::from_ref(f), generators, cfg)
}

/// Whether the product of `fs` lies in the radical of the generated ideal.
/// Uses one fresh variable per factor, `1 - y_i*f_i`, which has the same
/// variety as the single product form.
pub fn radical_membership_all<D>(
    fs: &[Polynomial<D>],
    generators: &[Polynomial<D>],
    cfg: &GbConfig,
) -> Result<bool, GroebnerError>
where
    D: GroebnerDomain + Field,
{
    let ring = match fs.first().or(generators.first()) {
        Some(p) => p.ring().clone(),
        None => return Ok(false),
    };
    if fs.iter().any(|f| f.is_zero()) {
        return Ok(true);
    }
    Ok(rabinowitsch_basis(&ring, fs, generators, cfg)?.contains_one())
}

/// Basis of `generators` together with `1 - y_i*f_i`, in `ring` extended by the `y_i`.
pub fn rabinowitsch_basis<D>(
    ring: &Arc<PolyRing<D>>,
    fs: &[Polynomial<D>],
    generators: &[Polynomial<D>],
    cfg: &GbConfig,
) -> Result<GroebnerBasis<D>, GroebnerError>
where
    D: GroebnerDomain + Field,
{
    if fs.iter().chain(generators).any(|p| !crate::poly::same_ring(p.ring(), ring)) {
        return Err(GroebnerError::RingMismatch);
    }
    let fresh = fresh_names(ring, fs.len());
    let big = ring.extended(&fresh);
    let n0 = ring.nvars();
    let mut gens: Vec<Polynomial<D>> = Vec::with_capacity(generators.len() + fs.len());
    for g in generators {
        gens.push(g.embed(&big).map_err(|_| GroebnerError::RingMismatch)?);
    }
    for (i, f) in fs.iter().enumerate() {
        let fe = f.embed(&big).map_err(|_| GroebnerError::RingMismatch)?;
        let y = Polynomial::var(&big, n0 + i);
        gens.push(&Polynomial::one(&big) - &(&y * &fe));
    }
    buchberger_field(&big, &gens, cfg)
}

fn fresh_names<D: Domain>(ring: &PolyRing<D>, k: usize) -> Vec<String> {
    let mut out = Vec::with_capacity(k);
    let mut i = 0;
    while out.len() < k {
        let name = if k == 1 && i == 0 { "y".to_string() } else { format!("y{i}") };
        i += 1;
        if ring.var_index(&name).is_none() {
            out.push(name);
        }
    }
    out
}

fn prime_factors(n: &BigInt, out: &mut BTreeSet<u64>) {
    let mut m = n.abs();
    if m <= BigInt::one() {
        return;
    }
    let mut p = 2u64;
    loop {
        let bp = BigInt::from(p);
        if &bp * &bp > m {
            break;
        }
        if (&m % &bp).is_zero() {
            out.insert(p);
            while (&m % &bp).is_zero() {
                m /= &bp;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > BigInt::one() {
        // Beyond u64 this cannot occur for any input we can finish computing.
        out.insert(m.to_u64().unwrap_or(u64::MAX));
    }
}

/// Primes dividing a recorded division or a pure-integer element of the basis.
pub fn candidate_characteristics(g: &GroebnerBasis<Integers>) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    for d in g.division_record() {
        prime_factors(d, &mut out);
    }
    for e in g.elements() {
        if e.is_constant() {
            prime_factors(&e.terms()[0].0, &mut out);
        }
    }
    out
}

/// Pure-integer elements of a basis over the integers.
pub fn integer_constants(g: &GroebnerBasis<Integers>) -> Vec<BigInt> {
    g.elements().iter().filter(|e| e.is_constant()).map(|e| e.terms()[0].0.clone()).collect()
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MonomialOrder;
    use proptest::prelude::*;

    fn fp(p: u64, vars: &[&str], order: MonomialOrder) -> Arc<PolyRing<PrimeField>> {
        PolyRing::new(PrimeField::new(p).unwrap(), vars.iter().map(|s| s.to_string()).collect(), order)
    }

    fn zr(vars: &[&str]) -> Arc<PolyRing<Integers>> {
        PolyRing::new(Integers, vars.iter().map(|s| s.to_string()).collect(), MonomialOrder::DEGREVLEX)
    }

    /// Builds a polynomial from `(coeff, exponents)` pairs.
    fn poly<D: Domain>(r: &Arc<PolyRing<D>>, terms: &[(i64, &[u16])]) -> Polynomial<D> {
        let d = r.domain().clone();
        Polynomial::from_terms(r, terms.iter().map(|(c, e)| (d.from_i64(*c), Monomial::from_exponents(e))).collect())
    }

    fn cfg() -> GbConfig {
        GbConfig::default()
    }

    #[test]
    fn field_examples() {
        let r = fp(3, &["x"], MonomialOrder::LEX);
        let g = buchberger_field(&r, &[poly(&r, &[(1, &[2]), (-1, &[0])]), poly(&r, &[(1, &[1]), (-1, &[0])])], &cfg())
            .unwrap();
        assert_eq!(g.elements(), &[poly(&r, &[(1, &[1]), (-1, &[0])])]);

        let g = buchberger_field(&r, &[Polynomial::one(&r)], &cfg()).unwrap();
        assert_eq!(g.elements(), &[Polynomial::one(&r)]);
        assert!(g.contains_one());

        let r = fp(5, &["x", "y"], MonomialOrder::DEGREVLEX);
        let g =
            buchberger_field(&r, &[poly(&r, &[(1, &[1, 0]), (1, &[0, 1])]), poly(&r, &[(1, &[1, 0]), (-1, &[0, 1])])], &cfg())
                .unwrap();
        assert_eq!(g.elements(), &[Polynomial::var(&r, 1), Polynomial::var(&r, 0)]);
    }

    #[test]
    fn normal_form_examples() {
        let r = fp(3, &["x"], MonomialOrder::LEX);
        let g = buchberger_field(&r, &[poly(&r, &[(1, &[1]), (-1, &[0])])], &cfg()).unwrap();
        let f = poly(&r, &[(1, &[2]), (-1, &[0])]);
        assert!(g.normal_form(&f).unwrap().is_zero());
        assert!(g.ideal_membership(&f).unwrap());
        assert!(g.ideal_membership(&Polynomial::zero(&r)).unwrap());

        let r = fp(7, &["x", "y"], MonomialOrder::DEGREVLEX);
        let g = buchberger_field(&r, &[Polynomial::var(&r, 0), Polynomial::var(&r, 1)], &cfg()).unwrap();
        assert_eq!(g.normal_form(&Polynomial::one(&r)).unwrap(), Polynomial::one(&r));
        assert!(!g.ideal_membership(&Polynomial::one(&r)).unwrap());
    }

    #[test]
    fn radical_examples() {
        let r = fp(7, &["x", "y"], MonomialOrder::DEGREVLEX);
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        assert!(radical_membership(&x, &[&x * &x], &cfg()).unwrap());
        assert!(!radical_membership(&x, std::slice::from_ref(&y), &cfg()).unwrap());

        let q = PolyRing::new(Rationals, vec!["x".into(), "y".into()], MonomialOrder::DEGREVLEX);
        let x = Polynomial::var(&q, 0);
        let y = Polynomial::var(&q, 1);
        let s = &x + &y;
        let gens = [&x * &x, &y * &y];
        assert!(radical_membership(&s, &gens, &cfg()).unwrap());
        // Division oracle: (x+y)^2 is not in the ideal, (x+y)^3 is.
        let g = buchberger_field(&q, &gens, &cfg()).unwrap();
        assert!(!g.ideal_membership(&s.pow(2)).unwrap());
        assert!(g.ideal_membership(&s.pow(3)).unwrap());
    }

    #[test]
    fn integer_examples() {
        let r = zr(&["x"]);
        let g = buchberger_integer(&r, &[poly(&r, &[(2, &[1])]), poly(&r, &[(3, &[1])])], &cfg()).unwrap();
        assert!(g.elements().contains(&Polynomial::var(&r, 0)), "{g:?}");
        assert!(g.criterion_holds());

        let g = buchberger_integer(&r, &[poly(&r, &[(2, &[0])])], &cfg()).unwrap();
        assert_eq!(integer_constants(&g), vec![BigInt::from(2)]);
        assert!(!g.contains_one());
        assert_eq!(candidate_characteristics(&g), BTreeSet::from([2]));

        let g = buchberger_integer(&r, &[poly(&r, &[(6, &[1]), (-6, &[0])])], &cfg()).unwrap();
        assert_eq!(candidate_characteristics(&g), BTreeSet::from([2, 3]));
        assert_eq!(g.elements(), &[poly(&r, &[(1, &[1]), (-1, &[0])])]);

        let g = buchberger_integer(&r, &[poly(&r, &[(1, &[1])]), poly(&r, &[(1, &[1]), (1, &[0])])], &cfg()).unwrap();
        assert!(g.contains_one());
        assert!(candidate_characteristics(&g).is_empty());

        let g = buchberger_integer(&r, &[Polynomial::var(&r, 0)], &cfg()).unwrap();
        assert!(!g.contains_one());
    }

    #[test]
    fn integer_mixed_coefficients() {
        // <2x, xy+1> meets Z in <2>. Removing the content of 2x inverts 2, so the
        // computed basis is {1} and the prime shows up in the record instead.
        let r = zr(&["x", "y"]);
        let g = buchberger_integer(&r, &[poly(&r, &[(2, &[1, 0])]), poly(&r, &[(1, &[1, 1]), (1, &[0, 0])])], &cfg())
            .unwrap();
        assert!(g.contains_one());
        assert_eq!(g.division_record(), &[BigInt::from(2)]);
        assert_eq!(candidate_characteristics(&g), BTreeSet::from([2]));

        // S(3x + 2y, xy) = 2y^2; its content is removed, so y^2 joins the basis and 2 is recorded.
        let g = buchberger_integer(&r, &[poly(&r, &[(3, &[1, 0]), (2, &[0, 1])]), poly(&r, &[(1, &[1, 1])])], &cfg())
            .unwrap();
        assert!(g.criterion_holds());
        assert_eq!(g.division_record(), &[BigInt::from(2)]);
        assert!(g.ideal_membership(&poly(&r, &[(2, &[0, 2])])).unwrap());
        assert!(!g.ideal_membership(&poly(&r, &[(1, &[0, 1])])).unwrap());
    }

    #[test]
    fn keeping_content_gives_the_strong_basis() {
        let r = zr(&["x", "y"]);
        let keep = GbConfig { keep_content: true, ..cfg() };
        let g = buchberger_integer(&r, &[poly(&r, &[(2, &[1, 0])]), poly(&r, &[(1, &[1, 1]), (1, &[0, 0])])], &keep)
            .unwrap();
        assert!(!g.contains_one());
        assert!(g.division_record().is_empty());
        assert_eq!(integer_constants(&g), vec![BigInt::from(2)]);
        assert_eq!(candidate_characteristics(&g), BTreeSet::from([2]));
        assert!(g.ideal_membership(&poly(&r, &[(1, &[1, 1]), (1, &[0, 0])])).unwrap());
        assert!(!g.ideal_membership(&poly(&r, &[(1, &[1, 0])])).unwrap());
    }

    #[test]
    fn limits_are_reported() {
        let r = fp(101, &["a", "b", "c", "d"], MonomialOrder::DEGREVLEX);
        let v: Vec<_> = (0..4).map(|i| Polynomial::var(&r, i)).collect();
        let gens = [
            &(&v[0] * &v[1]) - &(&v[2] * &v[2]),
            &(&v[1] * &v[2]) - &(&v[3] * &v[0]),
            &(&v[2] * &v[3]) - &(&v[0] * &v[0]),
        ];
        let tight = GbConfig { limits: Limits { max_basis: 3, ..Limits::default() }, ..cfg() };
        match buchberger_field(&r, &gens, &tight) {
            Err(GroebnerError::ResourceLimit { kind, .. }) => assert_eq!(kind, LimitKind::BasisSize),
            other => panic!("expected a limit, got {other:?}"),
        }
    }

    #[test]
    fn trace_has_one_line_per_pair() {
        let r = fp(5, &["x", "y"], MonomialOrder::DEGREVLEX);
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let gens = [&(&x * &x) - &y, &(&x * &y) - &Polynomial::one(&r)];
        let g = buchberger_field(&r, &gens, &GbConfig { trace: true, ..cfg() }).unwrap();
        let lines = g.trace_lines();
        assert_eq!(lines.len(), g.stats().pairs);
        assert!(lines[0].starts_with("pair 1 S("), "{lines:?}");
        assert!(g.criterion_holds());
        assert!(g.is_reduced());
    }

    /// Membership of an affine form in the ideal of affine forms over F_5, by row reduction.
    /// Rows are coefficients with the constant last.
    fn linear_span_contains(rows: &[Vec<u64>], target: &[u64]) -> bool {
        let p = 5u64;
        let n = target.len();
        let rank = |m: &mut Vec<Vec<u64>>| {
            let mut rk = 0;
            for c in 0..n {
                let Some(piv) = (rk..m.len()).find(|&i| m[i][c] != 0) else { continue };
                m.swap(rk, piv);
                let inv = (1..p).find(|&k| k * m[rk][c] % p == 1).unwrap();
                for x in m[rk].iter_mut() {
                    *x = *x * inv % p;
                }
                for i in 0..m.len() {
                    if i != rk && m[i][c] != 0 {
                        let f = m[i][c];
                        for k in 0..n {
                            m[i][k] = (m[i][k] + p * p - f * m[rk][k] % p) % p;
                        }
                    }
                }
                rk += 1;
            }
            rk
        };
        let spans = |t: &[u64]| {
            let mut a = rows.to_vec();
            let mut b = rows.to_vec();
            b.push(t.to_vec());
            rank(&mut a) == rank(&mut b)
        };
        // an inconsistent system generates the unit ideal
        let mut unit = vec![0; n];
        unit[n - 1] = 1;
        spans(&unit) || spans(target)
    }

    fn linear_poly(r: &Arc<PolyRing<PrimeField>>, row: &[u64]) -> Polynomial<PrimeField> {
        let n = r.nvars();
        let mut terms = Vec::new();
        for (i, &c) in row.iter().enumerate() {
            let mut e = vec![0u16; n];
            if i < n {
                e[i] = 1;
            }
            terms.push((c, Monomial::from_exponents(&e)));
        }
        Polynomial::from_terms(r, terms)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn membership_matches_linear_algebra(
            rows in prop::collection::vec(prop::collection::vec(0u64..5, 5), 1..4),
            target in prop::collection::vec(0u64..5, 5),
        ) {
            let r = fp(5, &["a", "b", "c", "d"], MonomialOrder::DEGREVLEX);
            let gens: Vec<_> = rows.iter().map(|row| linear_poly(&r, row)).collect();
            let g = buchberger_field(&r, &gens, &cfg()).unwrap();
            let f = linear_poly(&r, &target);
            prop_assert_eq!(g.ideal_membership(&f).unwrap(), linear_span_contains(&rows, &target));
        }

        #[test]
        fn member_implies_radical_member(
            a in prop::collection::vec((0i64..4, 0u16..3, 0u16..3), 1..4),
            b in prop::collection::vec((0i64..4, 0u16..3, 0u16..3), 1..4),
            m in prop::collection::vec((0i64..4, 0u16..2, 0u16..2), 1..3),
        ) {
            let r = fp(7, &["x", "y"], MonomialOrder::DEGREVLEX);
            let mk = |t: &[(i64, u16, u16)]| poly(&r, &t.iter().map(|&(c, i, j)| (c, vec![i, j])).collect::<Vec<_>>()
                .iter().map(|(c, e)| (*c, e.as_slice())).collect::<Vec<_>>());
            let gens = [mk(&a), mk(&b)];
            let g = buchberger_field(&r, &gens, &cfg()).unwrap();
            prop_assert!(g.criterion_holds());
            prop_assert!(g.is_reduced());
            let f = &mk(&m) * &gens[0];
            prop_assert!(g.ideal_membership(&f).unwrap());
            prop_assert!(radical_membership(&f, &gens, &cfg()).unwrap());
        }

        #[test]
        fn integer_basis_mod_p_matches_field_basis(
            a in prop::collection::vec((-4i64..5, 0u16..3, 0u16..2, 0u16..2), 1..4),
            b in prop::collection::vec((-4i64..5, 0u16..2, 0u16..3, 0u16..2), 1..4),
            p in prop::sample::select(vec![2u64, 3, 5, 7]),
        ) {
            let z = zr(&["x", "y", "z"]);
            let mk = |t: &[(i64, u16, u16, u16)]| {
                let d = Integers;
                Polynomial::from_terms(&z, t.iter().map(|&(c, i, j, k)| (d.from_i64(c), Monomial::from_exponents(&[i, j, k]))).collect())
            };
            let gens: Vec<_> = [mk(&a), mk(&b)].into_iter().filter(|g| !g.is_zero()).collect();
            prop_assume!(!gens.is_empty());
            let gz = buchberger_integer(&z, &gens, &cfg()).unwrap();
            prop_assert!(gz.criterion_holds());
            let pr = z.with_domain(PrimeField::new(p).unwrap());
            // Recorded divisions by p make the reduction mod p unfaithful; the bound only applies away from them.
            let bad = candidate_characteristics(&gz).contains(&p)
                || gz.elements().iter().any(|e| (e.leading_coeff().unwrap() % BigInt::from(p)).is_zero());
            prop_assume!(!bad);
            let reduced: Vec<_> = gz.elements().iter().map(|e| e.map_domain(&pr).unwrap()).collect();
            let direct: Vec<_> = gens.iter().map(|e| e.map_domain(&pr).unwrap()).collect();
            let g1 = buchberger_field(&pr, &reduced, &cfg()).unwrap();
            let g2 = buchberger_field(&pr, &direct, &cfg()).unwrap();
            prop_assert_eq!(g1.elements(), g2.elements());
        }

        #[test]
        fn deterministic(
            a in prop::collection::vec((1i64..4, 0u16..3, 0u16..3), 1..4),
            b in prop::collection::vec((1i64..4, 0u16..3, 0u16..3), 1..4),
        ) {
            let r = zr(&["x", "y"]);
            let mk = |t: &[(i64, u16, u16)]| {
                Polynomial::from_terms(&r, t.iter().map(|&(c, i, j)| (BigInt::from(c), Monomial::from_exponents(&[i, j]))).collect())
            };
            let gens = [mk(&a), mk(&b)];
            let g1 = buchberger_integer(&r, &gens, &cfg()).unwrap();
            let g2 = buchberger_integer(&r, &gens, &cfg()).unwrap();
            prop_assert_eq!(g1.elements(), g2.elements());
            prop_assert_eq!(g1.division_record(), g2.division_record());
        }
    }
}
