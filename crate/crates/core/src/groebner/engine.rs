//! Buchberger completion shared by all coefficient domains.
//!
//! Pairs are chosen by the normal strategy (smallest lcm first) and pruned by
//! the Gebauer-Moeller update, using term-level lcms so that the same
//! bookkeeping is valid over the integers. Over the integers every pair of
//! leading coefficients with a proper gcd also spawns a G-polynomial.

use std::cmp::Ordering;

use num_bigint::BigInt;
use serde::Serialize;

use super::arith::{Arith, ETerm};
use crate::poly::{Monomial, MonomialOrder};

pub type EPoly<C> = Vec<ETerm<C>>;

/// Caps on a single basis computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Limits {
    /// Elements ever added to the basis.
    pub max_basis: usize,
    /// Terms summed over all elements ever added.
    pub max_total_terms: usize,
    /// Bit length of any coefficient of a new element.
    pub max_coeff_bits: u64,
    /// Critical pairs processed.
    pub max_pairs: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_basis: 20_000, max_total_terms: 5_000_000, max_coeff_bits: 4096, max_pairs: 2_000_000 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LimitKind {
    BasisSize,
    TotalTerms,
    CoefficientBits,
    Pairs,
}

impl std::fmt::Display for LimitKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            LimitKind::BasisSize => "basis size",
            LimitKind::TotalTerms => "total terms",
            LimitKind::CoefficientBits => "coefficient bits",
            LimitKind::Pairs => "pairs",
        })
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct EngineStats {
    pub pairs: usize,
    pub pairs_skipped: usize,
    pub zero_reductions: usize,
    pub reductions: usize,
    pub basis_peak: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PairKind {
    S,
    G,
}

/// One processed critical pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEvent {
    pub pair: usize,
    pub first: usize,
    pub second: usize,
    pub kind: PairKind,
    pub lcm: Monomial,
    pub reduced_to_zero: bool,
    pub division: Option<BigInt>,
}

pub struct EngineOutput<C> {
    pub basis: Vec<EPoly<C>>,
    pub division_record: Vec<BigInt>,
    pub stats: EngineStats,
    pub trace: Vec<TraceEvent>,
}

pub struct LimitHit {
    pub kind: LimitKind,
    pub stats: EngineStats,
}

struct Pair<C> {
    i: usize,
    j: usize,
    kind: PairKind,
    lcm: Monomial,
    clcm: C,
}

pub struct Engine<'a, A: Arith> {
    a: &'a A,
    order: MonomialOrder,
    nvars: usize,
    limits: Limits,
    trace_on: bool,
    polys: Vec<EPoly<A::C>>,
    active: Vec<bool>,
    pairs: Vec<Pair<A::C>>,
    record: Vec<BigInt>,
    stats: EngineStats,
    trace: Vec<TraceEvent>,
    total_terms: usize,
}

/// `u*mf*f - v*mg*g`, merged; zero coefficients dropped.
pub fn lin_comb<A: Arith>(
    a: &A,
    order: MonomialOrder,
    u: &A::C,
    mf: &Monomial,
    f: &[ETerm<A::C>],
    v: &A::C,
    mg: &Monomial,
    g: &[ETerm<A::C>],
) -> EPoly<A::C> {
    let scale = |c: &A::C, s: &A::C| if a.is_one(s) { c.clone() } else { a.mul(c, s) };
    let shift = |m: &Monomial, s: &Monomial| if s.is_one() { m.clone() } else { m.mul(s) };
    let nv = a.neg(v);
    let mut out = Vec::with_capacity(f.len() + g.len());
    let (mut i, mut j) = (0, 0);
    let mut fi: Option<Monomial> = f.first().map(|t| shift(&t.1, mf));
    let mut gj: Option<Monomial> = g.first().map(|t| shift(&t.1, mg));
    loop {
        match (&fi, &gj) {
            (None, None) => break,
            (Some(_), None) => {
                let m = fi.take().unwrap();
                let c = scale(&f[i].0, u);
                if !a.is_zero(&c) {
                    out.push((c, m));
                }
                i += 1;
                fi = f.get(i).map(|t| shift(&t.1, mf));
            }
            (None, Some(_)) => {
                let m = gj.take().unwrap();
                let c = scale(&g[j].0, &nv);
                if !a.is_zero(&c) {
                    out.push((c, m));
                }
                j += 1;
                gj = g.get(j).map(|t| shift(&t.1, mg));
            }
            (Some(x), Some(y)) => match order.cmp(x, y) {
                Ordering::Greater => {
                    let m = fi.take().unwrap();
                    let c = scale(&f[i].0, u);
                    if !a.is_zero(&c) {
                        out.push((c, m));
                    }
                    i += 1;
                    fi = f.get(i).map(|t| shift(&t.1, mf));
                }
                Ordering::Less => {
                    let m = gj.take().unwrap();
                    let c = scale(&g[j].0, &nv);
                    if !a.is_zero(&c) {
                        out.push((c, m));
                    }
                    j += 1;
                    gj = g.get(j).map(|t| shift(&t.1, mg));
                }
                Ordering::Equal => {
                    let m = fi.take().unwrap();
                    let c = a.add(&scale(&f[i].0, u), &scale(&g[j].0, &nv));
                    if !a.is_zero(&c) {
                        out.push((c, m));
                    }
                    i += 1;
                    j += 1;
                    fi = f.get(i).map(|t| shift(&t.1, mf));
                    gj = g.get(j).map(|t| shift(&t.1, mg));
                }
            },
        }
    }
    out
}

/// Full reduction of `f` by `reducers`. Returns the remainder and the
/// multiplier `u` with `u*f - (combination of reducers) == remainder`; the
/// multiplier is only meaningful when `shrink` is off.
pub fn reduce<A: Arith>(
    a: &A,
    order: MonomialOrder,
    f: EPoly<A::C>,
    reducers: &[&EPoly<A::C>],
    shrink: bool,
    steps: &mut usize,
) -> (EPoly<A::C>, A::C) {
    let nvars = f.first().map(|t| t.1.nvars()).unwrap_or(0);
    let one_mono = Monomial::one(nvars);
    let mut work = f;
    let mut pos = 0;
    let mut rem: EPoly<A::C> = Vec::new();
    let mut mult = a.one();
    let mut local_steps = 0usize;
    while pos < work.len() {
        let (c, m) = (&work[pos].0, &work[pos].1);
        let mut best: Option<(usize, A::C, A::C)> = None;
        for (k, g) in reducers.iter().enumerate() {
            let (b, lm) = (&g[0].0, &g[0].1);
            if !lm.divides(m) {
                continue;
            }
            if best.as_ref().is_some_and(|(bk, _, _)| reducers[*bk].len() <= g.len()) {
                continue;
            }
            if let Some((u, v)) = a.elim(c, b) {
                best = Some((k, u, v));
            }
        }
        match best {
            None => {
                rem.push(work[pos].clone());
                pos += 1;
            }
            Some((k, u, v)) => {
                let g = reducers[k];
                let q = g[0].1.quotient_of(m).expect("divisible");
                work = lin_comb(a, order, &u, &one_mono, &work[pos + 1..], &v, &q, &g[1..]);
                pos = 0;
                if !a.is_one(&u) {
                    for t in rem.iter_mut() {
                        t.0 = a.mul(&t.0, &u);
                    }
                    mult = a.mul(&mult, &u);
                }
                *steps += 1;
                local_steps += 1;
                if shrink && local_steps.is_multiple_of(8) {
                    a.shrink(&mut work, &mut rem);
                }
            }
        }
    }
    if shrink {
        a.shrink(&mut [], &mut rem);
    }
    (rem, mult)
}

impl<'a, A: Arith> Engine<'a, A> {
    pub fn new(a: &'a A, order: MonomialOrder, nvars: usize, limits: Limits, trace: bool) -> Self {
        Engine {
            a,
            order,
            nvars,
            limits,
            trace_on: trace,
            polys: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
            record: Vec::new(),
            stats: EngineStats::default(),
            trace: Vec::new(),
            total_terms: 0,
        }
    }

    fn hit(&self, kind: LimitKind) -> LimitHit {
        LimitHit { kind, stats: self.stats }
    }

    fn active_refs(&self) -> Vec<&EPoly<A::C>> {
        self.polys.iter().zip(&self.active).filter(|(_, &on)| on).map(|(p, _)| p).collect()
    }

    fn is_unit_constant(&self, f: &EPoly<A::C>) -> bool {
        f.len() == 1 && f[0].1.is_one() && self.a.is_unit(&f[0].0)
    }

    /// Reduces and normalizes a candidate; returns the recorded division, if any.
    fn reduce_new(&mut self, f: EPoly<A::C>) -> (EPoly<A::C>, Option<BigInt>) {
        let reducers = self.active_refs();
        let mut steps = 0;
        let (mut r, _) = reduce(self.a, self.order, f, &reducers, true, &mut steps);
        self.stats.reductions += steps;
        if r.is_empty() {
            return (r, None);
        }
        let div = self.a.normalize(&mut r);
        (r, div)
    }

    fn make_pair(&self, i: usize, j: usize, kind: PairKind) -> Pair<A::C> {
        let (fi, fj) = (&self.polys[i][0], &self.polys[j][0]);
        Pair { i, j, kind, lcm: fi.1.lcm(&fj.1), clcm: self.a.lcm(&fi.0, &fj.0) }
    }

    fn lt_divides_pair(&self, k: usize, p: &Pair<A::C>) -> bool {
        let (c, m) = &self.polys[k][0];
        m.divides(&p.lcm) && self.a.divides(c, &p.clcm)
    }

    fn pair_divides(&self, p: &Pair<A::C>, q: &Pair<A::C>) -> bool {
        p.lcm.divides(&q.lcm) && self.a.divides(&p.clcm, &q.clcm)
    }

    fn disjoint(&self, p: &Pair<A::C>) -> bool {
        let (fi, fj) = (&self.polys[p.i][0], &self.polys[p.j][0]);
        fi.1.is_coprime(&fj.1) && self.a.coprime(&fi.0, &fj.0)
    }

    fn same_term(&self, i: usize, j: usize, p: &Pair<A::C>) -> bool {
        let (fi, fj) = (&self.polys[i][0], &self.polys[j][0]);
        fi.1.lcm(&fj.1) == p.lcm && self.a.lcm(&fi.0, &fj.0) == p.clcm
    }

    fn insert(&mut self, h: EPoly<A::C>) -> Result<usize, LimitHit> {
        self.total_terms += h.len();
        let hidx = self.polys.len();
        self.polys.push(h);
        self.active.push(false);
        if self.polys.len() > self.limits.max_basis {
            return Err(self.hit(LimitKind::BasisSize));
        }
        if self.total_terms > self.limits.max_total_terms {
            return Err(self.hit(LimitKind::TotalTerms));
        }
        if self.polys[hidx].iter().any(|t| self.a.bits(&t.0) > self.limits.max_coeff_bits) {
            return Err(self.hit(LimitKind::CoefficientBits));
        }

        let act: Vec<usize> = (0..hidx).filter(|&g| self.active[g]).collect();

        let mut cands: Vec<Pair<A::C>> = act.iter().map(|&g| self.make_pair(g, hidx, PairKind::S)).collect();
        let mut kept: Vec<Pair<A::C>> = Vec::new();
        cands.reverse();
        while let Some(p1) = cands.pop() {
            let keep = self.disjoint(&p1)
                || (!cands.iter().any(|p2| self.pair_divides(p2, &p1))
                    && !kept.iter().any(|p2| self.pair_divides(p2, &p1)));
            if keep {
                kept.push(p1);
            } else {
                self.stats.pairs_skipped += 1;
            }
        }
        let before = kept.len();
        kept.retain(|p| !self.disjoint(p));
        self.stats.pairs_skipped += before - kept.len();

        let old = std::mem::take(&mut self.pairs);
        let before = old.len();
        let mut retained: Vec<Pair<A::C>> = old
            .into_iter()
            .filter(|p| {
                p.kind == PairKind::G
                    || !self.lt_divides_pair(hidx, p)
                    || self.same_term(p.i, hidx, p)
                    || self.same_term(hidx, p.j, p)
            })
            .collect();
        self.stats.pairs_skipped += before - retained.len();
        retained.extend(kept);

        for &g in &act {
            if self.a.gcd_mults(&self.polys[g][0].0, &self.polys[hidx][0].0).is_some() {
                retained.push(self.make_pair(g, hidx, PairKind::G));
            }
        }
        self.pairs = retained;

        let (hc, hm) = (self.polys[hidx][0].0.clone(), self.polys[hidx][0].1.clone());
        for &g in &act {
            let (gc, gm) = &self.polys[g][0];
            if hm.divides(gm) && self.a.divides(&hc, gc) {
                self.active[g] = false;
            }
        }
        self.active[hidx] = true;
        let live = self.active.iter().filter(|&&x| x).count();
        self.stats.basis_peak = self.stats.basis_peak.max(live);
        Ok(hidx)
    }

    fn pair_poly(&self, p: &Pair<A::C>) -> EPoly<A::C> {
        let (f, g) = (&self.polys[p.i], &self.polys[p.j]);
        let (a, x) = (&f[0].0, &f[0].1);
        let (b, y) = (&g[0].0, &g[0].1);
        let mf = x.quotient_of(&p.lcm).expect("lcm multiple");
        let mg = y.quotient_of(&p.lcm).expect("lcm multiple");
        match p.kind {
            PairKind::S => {
                let (u, v) = self.a.s_mults(a, b);
                lin_comb(self.a, self.order, &u, &mf, &f[1..], &v, &mg, &g[1..])
            }
            PairKind::G => {
                let (c, d) = self.a.gcd_mults(a, b).expect("G-pair has a proper gcd");
                lin_comb(self.a, self.order, &c, &mf, f, &self.a.neg(&d), &mg, g)
            }
        }
    }

    fn select(&self) -> Option<usize> {
        let order = self.order;
        (0..self.pairs.len()).min_by(|&x, &y| {
            let (p, q) = (&self.pairs[x], &self.pairs[y]);
            p.lcm
                .degree()
                .cmp(&q.lcm.degree())
                .then_with(|| order.cmp(&p.lcm, &q.lcm))
                .then_with(|| (p.kind as u8).cmp(&(q.kind as u8)))
                .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
        })
    }

    /// Completes `gens` to a Gröbner basis. With `stop_on_unit`, a unit constant ends
    /// the run with the basis `{1}`.
    pub fn run(mut self, gens: Vec<EPoly<A::C>>, stop_on_unit: bool) -> Result<EngineOutput<A::C>, LimitHit> {
        let order = self.order;
        let mut gens: Vec<EPoly<A::C>> = gens.into_iter().filter(|g| !g.is_empty()).collect();
        gens.sort_by(|f, g| order.cmp(&f[0].1, &g[0].1).then_with(|| f.len().cmp(&g.len())));
        for g in gens {
            let (h, div) = self.reduce_new(g);
            if h.is_empty() {
                continue;
            }
            if let Some(d) = div {
                self.record.push(d);
            }
            let unit = self.is_unit_constant(&h);
            self.insert(h)?;
            if unit && stop_on_unit {
                return Ok(self.finish_unit());
            }
        }

        let mut counter = 0;
        while let Some(idx) = self.select() {
            let p = self.pairs.swap_remove(idx);
            counter += 1;
            self.stats.pairs += 1;
            if self.stats.pairs > self.limits.max_pairs {
                return Err(self.hit(LimitKind::Pairs));
            }
            let s = self.pair_poly(&p);
            let (h, div) = self.reduce_new(s);
            let zero = h.is_empty();
            if self.trace_on {
                self.trace.push(TraceEvent {
                    pair: counter,
                    first: p.i,
                    second: p.j,
                    kind: p.kind,
                    lcm: p.lcm.clone(),
                    reduced_to_zero: zero,
                    division: div.clone(),
                });
            }
            if zero {
                self.stats.zero_reductions += 1;
                continue;
            }
            if let Some(d) = div {
                self.record.push(d);
            }
            let unit = self.is_unit_constant(&h);
            self.insert(h)?;
            if unit && stop_on_unit {
                return Ok(self.finish_unit());
            }
        }
        Ok(self.finish())
    }

    fn finish_unit(self) -> EngineOutput<A::C> {
        EngineOutput {
            basis: vec![vec![(self.a.one(), Monomial::one(self.nvars))]],
            division_record: self.record,
            stats: self.stats,
            trace: self.trace,
        }
    }

    fn finish(mut self) -> EngineOutput<A::C> {
        let act: Vec<usize> = (0..self.polys.len()).filter(|&k| self.active[k]).collect();
        let mut out: Vec<EPoly<A::C>> = Vec::with_capacity(act.len());
        for &k in &act {
            let others: Vec<&EPoly<A::C>> = act.iter().filter(|&&j| j != k).map(|&j| &self.polys[j]).collect();
            let f = &self.polys[k];
            let mut steps = 0;
            let (tail, u) = reduce(self.a, self.order, f[1..].to_vec(), &others, false, &mut steps);
            self.stats.reductions += steps;
            let mut g = Vec::with_capacity(tail.len() + 1);
            g.push((self.a.mul(&f[0].0, &u), f[0].1.clone()));
            g.extend(tail);
            if let Some(d) = self.a.normalize(&mut g) {
                self.record.push(d);
            }
            out.push(g);
        }
        let order = self.order;
        out.sort_by(|f, g| order.cmp(&f[0].1, &g[0].1));
        EngineOutput { basis: out, division_record: self.record, stats: self.stats, trace: self.trace }
    }
}
