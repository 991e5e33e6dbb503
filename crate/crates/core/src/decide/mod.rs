//! Representability verdicts from the polynomial system of a matroid.
//!
//! Fast mode saturates the circuit ideal by the product of the variables and
//! looks for `1` or a basis determinant in it; this only ever proves
//! non-representability. Exact mode also tests whether the product of all
//! basis determinants lies in the radical of the circuit ideal, which settles
//! representability over the algebraic closure either way.

mod oracle;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::groebner::{
    buchberger_field, buchberger_integer, candidate_characteristics, integer_constants, rabinowitsch_basis, GbConfig,
    GbStats, GroebnerBasis, GroebnerDomain, GroebnerError, LimitKind, Limits,
};
use crate::matroid::{ElementSet, Matroid, MatroidError};
use crate::pattern::{
    basis_polynomials, build_pattern_with_labels, circuit_polynomials, saturation_polynomial, PatternError,
    SymbolicMatrix, Tagged,
};
use crate::poly::gf::GfError;
use crate::poly::{is_prime, Field, Integers, Monomial, MonomialOrder, PolyRing, Polynomial, PrimeField, Rationals};

pub use oracle::{brute_force_search, matroid_of_matrix, verify_representation, Discrepancy, RepresentationCheck};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecideError {
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Pattern(#[from] PatternError),
    #[error(transparent)]
    Field(#[from] GfError),
    #[error("matrix is {rows}x{cols}, expected {r}x{n}")]
    Dimension { rows: usize, cols: usize, r: usize, n: usize },
    #[error("matrix has rank {rank} but {rows} rows")]
    RankDeficient { rank: usize, rows: usize },
    #[error("{assignments} assignments exceed the search limit of {limit}")]
    SearchTooLarge { assignments: u64, limit: u64 },
    #[error("characteristic {0} is neither 0 nor a prime below 2^32")]
    BadCharacteristic(u64),
    #[error("matroid has rank zero")]
    RankZero,
}

/// What was done to the input before building the pattern.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Preprocessing {
    pub loops: Vec<usize>,
    /// `[element, representative]` for each deleted parallel element.
    pub parallel: Vec<[usize; 2]>,
    pub dualized: bool,
    /// Original label of each pattern column.
    pub column_order: Vec<usize>,
}

impl Preprocessing {
    pub fn notes(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.loops.is_empty() {
            out.push(format!("deleted loops {:?}", self.loops));
        }
        for [e, r] in &self.parallel {
            out.push(format!("element {e} is parallel to {r}, deleted"));
        }
        if self.dualized {
            out.push("rank exceeds half the order: working with the dual, witness sets refer to it".into());
        }
        let identity = self.column_order.iter().enumerate().all(|(i, &l)| l == i + 1);
        if !identity {
            let cols: Vec<String> = self.column_order.iter().map(|c| c.to_string()).collect();
            out.push(format!("columns reordered to {}", cols.join(" ")));
        }
        out
    }
}

/// A simple matroid whose first `r` elements form a basis, with the labels of its columns.
#[derive(Debug, Clone)]
pub struct Prepared {
    pub matroid: Matroid,
    pub labels: Vec<usize>,
    /// For each input element, the label of the column that stands for it
    /// (`None` for loops). Meaningless after dualization.
    pub representative: Vec<Option<usize>>,
    pub steps: Preprocessing,
}

fn simplify_step(
    cur: &mut Matroid,
    labels: &mut Vec<usize>,
    steps: &mut Preprocessing,
    rep: Option<&mut Vec<Option<usize>>>,
) -> Result<(), DecideError> {
    if cur.is_simple() {
        return Ok(());
    }
    let s = cur.simplify()?;
    for e in 1..=cur.order() {
        match s.representative[e - 1] {
            None => steps.loops.push(labels[e - 1]),
            Some(r) if r != e => steps.parallel.push([labels[e - 1], labels[r - 1]]),
            _ => {}
        }
    }
    if let Some(rep) = rep {
        for x in rep.iter_mut() {
            if let Some(l) = *x {
                let pos = labels.iter().position(|&y| y == l).expect("label present");
                *x = s.representative[pos].map(|r| labels[r - 1]);
            }
        }
    }
    let mut next = vec![0; s.matroid.order()];
    for (e, m) in s.mapping.iter().enumerate() {
        if let Some(k) = m {
            next[k - 1] = labels[e];
        }
    }
    *labels = next;
    *cur = s.matroid;
    Ok(())
}

/// Simplifies, optionally dualizes when the rank exceeds half the order, and
/// moves the lexicographically first basis to the front.
pub fn prepare(m: &Matroid, allow_dual: bool) -> Result<Prepared, DecideError> {
    if m.rank() == 0 {
        return Err(DecideError::RankZero);
    }
    let mut cur = m.clone();
    let mut labels: Vec<usize> = (1..=m.order()).collect();
    let mut rep: Vec<Option<usize>> = (1..=m.order()).map(Some).collect();
    let mut steps = Preprocessing::default();
    simplify_step(&mut cur, &mut labels, &mut steps, Some(&mut rep))?;
    if allow_dual && cur.rank() < cur.order() && 2 * cur.rank() > cur.order() {
        cur = cur.dual();
        steps.dualized = true;
        simplify_step(&mut cur, &mut labels, &mut steps, None)?;
    }
    let perm = cur.find_initial_basis()?;
    cur = cur.permuted(&perm)?;
    labels = perm.order().iter().map(|&k| labels[k - 1]).collect();
    steps.column_order = labels.clone();
    Ok(Prepared { matroid: cur, labels, representative: rep, steps })
}

/// Circuit equations, basis inequations and the saturation term over the integers.
#[derive(Debug, Clone)]
pub struct SaturatedSystem {
    pub pattern: SymbolicMatrix,
    pub ring: Arc<PolyRing<Integers>>,
    pub circuit_polys: Vec<Tagged>,
    pub basis_polys: Vec<Tagged>,
    pub saturation: Polynomial<Integers>,
}

impl SaturatedSystem {
    pub fn build(p: &Prepared, order: MonomialOrder) -> Result<Self, DecideError> {
        let pattern = build_pattern_with_labels(&p.matroid, &p.labels)?;
        let ring = pattern.ring(order);
        let circuit_polys = circuit_polynomials(&p.matroid, &pattern, &ring);
        let basis_polys = basis_polynomials(&p.matroid, &pattern, &ring);
        let saturation = saturation_polynomial(&pattern, &ring);
        Ok(SaturatedSystem { pattern, ring, circuit_polys, basis_polys, saturation })
    }

    /// Circuit polynomials followed by the saturation term.
    pub fn generators(&self) -> Vec<Polynomial<Integers>> {
        let mut out: Vec<_> = self.circuit_polys.iter().map(|t| t.poly.clone()).collect();
        out.push(self.saturation.clone());
        out
    }

    /// Product of all pattern variables, if there are any.
    pub fn var_product(&self) -> Option<Polynomial<Integers>> {
        let k = self.pattern.num_vars();
        if k == 0 {
            return None;
        }
        let mut e = vec![0u16; self.ring.nvars()];
        for x in e.iter_mut().take(k) {
            *x = 1;
        }
        Some(Polynomial::monomial(&self.ring, num_bigint::BigInt::from(1), Monomial::from_exponents(&e)))
    }

    /// Stable text form: pattern, variables, then every polynomial with its tag.
    pub fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "pattern {}x{}", self.pattern.rows(), self.pattern.cols());
        s.push_str(&self.pattern.render());
        let _ = writeln!(s, "variables: {}", self.ring.vars().join(" "));
        for t in &self.circuit_polys {
            let _ = writeln!(s, "circuit {}: {}", t.tag, t.poly.render());
        }
        for t in &self.basis_polys {
            let _ = writeln!(s, "basis {}: {}", t.tag, t.poly.render());
        }
        let _ = writeln!(s, "saturation: {}", self.saturation.render());
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    /// `1` lies in the ideal.
    UnitIdeal,
    /// A basis determinant lies in the ideal.
    BasisPolynomial,
    /// The product of the basis determinants lies in the radical.
    ProductInRadical,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdealKind {
    /// Circuit equations plus the saturation term, over a field.
    Saturated,
    /// Circuit equations alone, over a field.
    Circuit,
    /// Circuit equations plus the saturation term, over the integers.
    SaturatedIntegers,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub kind: WitnessKind,
    pub ideal: IdealKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<ElementSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polynomial: Option<String>,
}

impl Witness {
    fn unit(ideal: IdealKind) -> Self {
        Witness { kind: WitnessKind::UnitIdeal, ideal, basis: None, polynomial: None }
    }

    fn basis(t: &Tagged, ideal: IdealKind) -> Self {
        Witness { kind: WitnessKind::BasisPolynomial, ideal, basis: Some(t.tag), polynomial: Some(t.poly.render()) }
    }

    fn product() -> Self {
        Witness { kind: WitnessKind::ProductInRadical, ideal: IdealKind::Circuit, basis: None, polynomial: None }
    }

    pub fn describe(&self) -> String {
        match self.kind {
            WitnessKind::UnitIdeal => "1 ∈ I".into(),
            WitnessKind::BasisPolynomial => {
                format!("P{} ∈ I", self.basis.map(|b| b.to_string()).unwrap_or_default())
            }
            WitnessKind::ProductInRadical => "∏P ∈ Rad(I)".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict")]
pub enum Verdict {
    NonRepresentable { witness: Witness },
    Inconclusive { reason: String },
    RepresentableOverClosure,
    ResourceExceeded { limit: LimitKind },
}

impl Verdict {
    pub fn is_non_representable(&self) -> bool {
        matches!(self, Verdict::NonRepresentable { .. })
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::NonRepresentable { witness } => Some(witness),
            _ => None,
        }
    }

    pub fn label(&self) -> String {
        match self {
            Verdict::NonRepresentable { witness } => format!("non-representable ({})", witness.describe()),
            Verdict::Inconclusive { reason } => format!("inconclusive ({reason})"),
            Verdict::RepresentableOverClosure => "representable over the algebraic closure".into(),
            Verdict::ResourceExceeded { limit } => format!("resources exceeded ({limit})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Fast,
    Exact,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecideConfig {
    pub mode: Mode,
    pub order: MonomialOrder,
    pub limits: Limits,
    pub trace: bool,
    /// Divide out integer content in the integer stage. The basis is then one over
    /// `Z[1/N]` and the divided primes are kept as candidates instead.
    pub strip_content: bool,
}

impl Default for DecideConfig {
    fn default() -> Self {
        DecideConfig {
            mode: Mode::Fast,
            order: MonomialOrder::DEGREVLEX,
            limits: Limits::default(),
            trace: false,
            strip_content: false,
        }
    }
}

impl DecideConfig {
    fn gb(&self) -> GbConfig {
        GbConfig { limits: self.limits, trace: self.trace, keep_content: false }
    }

    fn integer_gb(&self) -> GbConfig {
        GbConfig { keep_content: !self.strip_content, ..self.gb() }
    }
}

#[derive(Debug, Clone)]
pub struct CharOutcome {
    pub verdict: Verdict,
    pub stats: GbStats,
    pub millis: f64,
    pub trace: Vec<String>,
}

fn check_char(p: u64) -> Result<(), DecideError> {
    if p == 0 || (p < (1 << 32) && is_prime(p)) {
        Ok(())
    } else {
        Err(DecideError::BadCharacteristic(p))
    }
}

fn add_stats(a: &mut GbStats, b: GbStats) {
    a.pairs += b.pairs;
    a.pairs_skipped += b.pairs_skipped;
    a.zero_reductions += b.zero_reductions;
    a.reductions += b.reductions;
    a.basis_peak = a.basis_peak.max(b.basis_peak);
}

/// Decides over the algebraic closure of `F_p`, or of the rationals for `p = 0`.
pub fn decide_over_char(sys: &SaturatedSystem, p: u64, cfg: &DecideConfig) -> Result<CharOutcome, DecideError> {
    check_char(p)?;
    let start = Instant::now();
    let mut out = if p == 0 {
        decide_in(sys, &sys.ring.with_domain(Rationals), cfg)
    } else {
        decide_in(sys, &sys.ring.with_domain(PrimeField::new(p).expect("checked prime")), cfg)
    };
    out.millis = start.elapsed().as_secs_f64() * 1e3;
    Ok(out)
}

fn mapped<D: GroebnerDomain>(ring: &Arc<PolyRing<D>>, f: &Polynomial<Integers>) -> Polynomial<D> {
    f.map_domain(ring).expect("same variables")
}

fn decide_in<D: GroebnerDomain + Field>(sys: &SaturatedSystem, ring: &Arc<PolyRing<D>>, cfg: &DecideConfig) -> CharOutcome {
    let mut stats = GbStats::default();
    let mut trace = Vec::new();
    let gens: Vec<Polynomial<D>> =
        sys.generators().iter().map(|f| mapped(ring, f)).filter(|f| !f.is_zero()).collect();
    let g = match buchberger_field(ring, &gens, &cfg.gb()) {
        Ok(g) => g,
        Err(e) => return exceeded(e, stats, trace),
    };
    add_stats(&mut stats, g.stats());
    trace.extend(g.trace_lines());
    let done = |verdict, stats, trace| CharOutcome { verdict, stats, millis: 0.0, trace };
    if g.contains_one() {
        return done(Verdict::NonRepresentable { witness: Witness::unit(IdealKind::Saturated) }, stats, trace);
    }
    let mut factors = Vec::new();
    for t in &sys.basis_polys {
        let pp = mapped(ring, &t.poly);
        if g.ideal_membership(&pp).expect("same ring") {
            return done(Verdict::NonRepresentable { witness: Witness::basis(t, IdealKind::Saturated) }, stats, trace);
        }
        factors.push(pp);
    }
    if cfg.mode == Mode::Fast {
        return done(Verdict::Inconclusive { reason: "sufficient test passed".into() }, stats, trace);
    }
    if let Some(x) = sys.var_product() {
        factors.push(mapped(ring, &x));
    }
    let qs: Vec<Polynomial<D>> =
        sys.circuit_polys.iter().map(|t| mapped(ring, &t.poly)).filter(|f| !f.is_zero()).collect();
    match rabinowitsch_basis(ring, &factors, &qs, &cfg.gb()) {
        Ok(h) => {
            add_stats(&mut stats, h.stats());
            trace.extend(h.trace_lines());
            let v = if h.contains_one() {
                Verdict::NonRepresentable { witness: Witness::product() }
            } else {
                Verdict::RepresentableOverClosure
            };
            done(v, stats, trace)
        }
        Err(e) => exceeded(e, stats, trace),
    }
}

fn exceeded(e: GroebnerError, mut stats: GbStats, trace: Vec<String>) -> CharOutcome {
    match e {
        GroebnerError::ResourceLimit { kind, stats: s } => {
            add_stats(&mut stats, s.into());
            CharOutcome { verdict: Verdict::ResourceExceeded { limit: kind }, stats, millis: 0.0, trace }
        }
        GroebnerError::RingMismatch => unreachable!("all polynomials share the system ring"),
    }
}

/// Whether the product of all basis determinants (times the variables) lies in the
/// radical of the circuit ideal over `F_p` (or the rationals for `p = 0`).
pub fn product_in_radical(sys: &SaturatedSystem, p: u64, cfg: &DecideConfig) -> Result<Option<bool>, DecideError> {
    check_char(p)?;
    fn go<D: GroebnerDomain + Field>(sys: &SaturatedSystem, ring: &Arc<PolyRing<D>>, cfg: &DecideConfig) -> Option<bool> {
        let mut fs: Vec<Polynomial<D>> = sys.basis_polys.iter().map(|t| mapped(ring, &t.poly)).collect();
        if fs.iter().any(|f| f.is_zero()) {
            return Some(true);
        }
        if let Some(x) = sys.var_product() {
            fs.push(mapped(ring, &x));
        }
        let qs: Vec<Polynomial<D>> =
            sys.circuit_polys.iter().map(|t| mapped(ring, &t.poly)).filter(|f| !f.is_zero()).collect();
        rabinowitsch_basis(ring, &fs, &qs, &cfg.gb()).ok().map(|h| h.contains_one())
    }
    Ok(if p == 0 {
        go(sys, &sys.ring.with_domain(Rationals), cfg)
    } else {
        go(sys, &sys.ring.with_domain(PrimeField::new(p).expect("checked prime")), cfg)
    })
}

/// Recomputes a witness from scratch. `None` when the recomputation hits a limit.
pub fn check_witness(
    sys: &SaturatedSystem,
    p: u64,
    w: &Witness,
    cfg: &DecideConfig,
) -> Result<Option<bool>, DecideError> {
    check_char(p)?;
    if w.kind == WitnessKind::ProductInRadical {
        return product_in_radical(sys, p, cfg);
    }
    fn member<D: GroebnerDomain>(g: &GroebnerBasis<D>, sys: &SaturatedSystem, w: &Witness) -> bool {
        match w.kind {
            WitnessKind::UnitIdeal => g.contains_one(),
            _ => sys
                .basis_polys
                .iter()
                .filter(|t| Some(t.tag) == w.basis)
                .any(|t| g.ideal_membership(&mapped(g.ring(), &t.poly)).expect("same ring")),
        }
    }
    fn field<D: GroebnerDomain + Field>(
        sys: &SaturatedSystem,
        ring: &Arc<PolyRing<D>>,
        w: &Witness,
        cfg: &DecideConfig,
    ) -> Option<bool> {
        let gens: Vec<Polynomial<D>> =
            sys.generators().iter().map(|f| mapped(ring, f)).filter(|f| !f.is_zero()).collect();
        buchberger_field(ring, &gens, &cfg.gb()).ok().map(|g| member(&g, sys, w))
    }
    Ok(match (w.ideal, p) {
        (IdealKind::SaturatedIntegers, _) => {
            buchberger_integer(&sys.ring, &sys.generators(), &cfg.integer_gb()).ok().map(|g| member(&g, sys, w))
        }
        (_, 0) => field(sys, &sys.ring.with_domain(Rationals), w, cfg),
        (_, p) => field(sys, &sys.ring.with_domain(PrimeField::new(p).expect("checked prime")), w, cfg),
    })
}

/// The computation over the integers.
#[derive(Debug, Clone, Serialize)]
pub struct IntegerStage {
    pub basis_size: usize,
    pub contains_one: bool,
    /// Pure integers in the basis.
    pub constants: Vec<String>,
    /// Distinct integers divided out during the computation.
    pub divisions: Vec<String>,
    pub candidates: Vec<u64>,
    pub witness: Option<Witness>,
    pub stats: GbStats,
    pub limit: Option<LimitKind>,
    #[serde(skip)]
    pub trace: Vec<String>,
    #[serde(skip)]
    pub millis: f64,
}

pub fn integer_stage(sys: &SaturatedSystem, cfg: &DecideConfig) -> IntegerStage {
    let start = Instant::now();
    let mut out = integer_stage_inner(sys, cfg);
    out.millis = start.elapsed().as_secs_f64() * 1e3;
    out
}

fn integer_stage_inner(sys: &SaturatedSystem, cfg: &DecideConfig) -> IntegerStage {
    match buchberger_integer(&sys.ring, &sys.generators(), &cfg.integer_gb()) {
        Err(GroebnerError::ResourceLimit { kind, stats }) => IntegerStage {
            basis_size: 0,
            contains_one: false,
            constants: Vec::new(),
            divisions: Vec::new(),
            candidates: Vec::new(),
            witness: None,
            stats: stats.into(),
            limit: Some(kind),
            trace: Vec::new(),
            millis: 0.0,
        },
        Err(GroebnerError::RingMismatch) => unreachable!("one ring throughout"),
        Ok(g) => {
            let contains_one = g.contains_one();
            let witness = if contains_one {
                Some(Witness::unit(IdealKind::SaturatedIntegers))
            } else {
                sys.basis_polys
                    .iter()
                    .find(|t| g.ideal_membership(&t.poly).expect("same ring"))
                    .map(|t| Witness::basis(t, IdealKind::SaturatedIntegers))
            };
            let divisions: BTreeSet<_> = g.division_record().iter().cloned().collect();
            IntegerStage {
                basis_size: g.len(),
                contains_one,
                constants: integer_constants(&g).iter().map(|c| c.to_string()).collect(),
                divisions: divisions.iter().map(|d| d.to_string()).collect(),
                candidates: candidate_characteristics(&g).into_iter().collect(),
                witness,
                stats: g.stats(),
                limit: None,
                trace: g.trace_lines(),
                millis: 0.0,
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct AllFieldsOutcome {
    pub integer: IntegerStage,
    pub per_char: BTreeMap<u64, CharOutcome>,
    /// Set when no field of any characteristic can represent the matroid.
    pub verdict: Option<Witness>,
    /// Characteristics still possible, when the integer basis bounds them.
    pub possible: Option<Vec<u64>>,
}

/// Integer basis, then every candidate characteristic, 0, and any `extra` ones.
pub fn decide_all_fields(
    sys: &SaturatedSystem,
    cfg: &DecideConfig,
    extra: &[u64],
) -> Result<AllFieldsOutcome, DecideError> {
    for &p in extra {
        check_char(p)?;
    }
    let integer = integer_stage(sys, cfg);
    let mut chars: BTreeSet<u64> = extra.iter().copied().collect();
    chars.insert(0);
    chars.extend(integer.candidates.iter().copied());
    let per_char = run_chars(sys, &chars, cfg)?;
    let required = std::iter::once(&0).chain(integer.candidates.iter());
    let all_nonrep = integer.limit.is_none() && required.clone().all(|p| per_char[p].verdict.is_non_representable());
    let verdict = if all_nonrep { integer.witness.clone() } else { None };
    let bounded = integer.limit.is_none() && (integer.contains_one || !integer.constants.is_empty());
    let possible = bounded.then(|| {
        integer.candidates.iter().copied().filter(|p| !per_char[p].verdict.is_non_representable()).collect()
    });
    Ok(AllFieldsOutcome { integer, per_char, verdict, possible })
}

fn run_chars(
    sys: &SaturatedSystem,
    chars: &BTreeSet<u64>,
    cfg: &DecideConfig,
) -> Result<BTreeMap<u64, CharOutcome>, DecideError> {
    let list: Vec<u64> = chars.iter().copied().collect();
    list.par_iter().map(|&p| decide_over_char(sys, p, cfg).map(|o| (p, o))).collect()
}

#[derive(Debug, Clone)]
pub struct AnalysisOptions {
    pub characteristics: Vec<u64>,
    pub all_fields: bool,
    pub config: DecideConfig,
    pub allow_dual: bool,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions { characteristics: vec![0, 2, 3, 5], all_fields: false, config: DecideConfig::default(), allow_dual: true }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MatroidSummary {
    pub n: usize,
    pub r: usize,
    pub circuits: Vec<ElementSet>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PatternSummary {
    pub vars: Vec<String>,
    /// `[row, column label]` of each zero outside the identity block.
    pub zeros: Vec<[usize; 2]>,
    pub columns: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict")]
pub enum AllFieldsVerdict {
    NonRepresentableAllFields { witness: Witness },
}

#[derive(Debug, Clone, Copy, Default, Serialize)]
pub struct EngineSummary {
    pub pairs: usize,
    pub reductions: usize,
    pub limits_hit: bool,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Timings {
    pub total_ms: f64,
    pub integer_ms: Option<f64>,
    pub characteristics_ms: BTreeMap<u64, f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DecisionReport {
    pub matroid: MatroidSummary,
    pub preprocessing: Preprocessing,
    pub pattern: PatternSummary,
    pub mode: Mode,
    pub characteristics: BTreeMap<u64, Verdict>,
    pub candidate_characteristics: Option<Vec<u64>>,
    pub possible_characteristics: Option<Vec<u64>>,
    pub integer_stage: Option<IntegerStage>,
    pub all_fields_verdict: Option<AllFieldsVerdict>,
    pub witness: Option<Witness>,
    pub notes: Vec<String>,
    pub engine: EngineSummary,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub trace: BTreeMap<String, Vec<String>>,
    pub timings: Timings,
}

impl DecisionReport {
    pub fn limits_hit(&self) -> bool {
        self.engine.limits_hit
    }

    /// JSON without the timing block, for comparisons.
    pub fn to_json_untimed(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("serializable");
        if let Some(o) = v.as_object_mut() {
            o.remove("timings");
        }
        v
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "matroid: order {}, rank {}, {} circuits", self.matroid.n, self.matroid.r, self.matroid.circuits.len());
        let _ = writeln!(s, "pattern: {} variables, mode {:?}", self.pattern.vars.len(), self.mode);
        for (p, v) in &self.characteristics {
            let _ = writeln!(s, "char {p}: {}", v.label());
        }
        if let Some(c) = &self.candidate_characteristics {
            let _ = writeln!(s, "candidate characteristics: {c:?}");
        }
        if let Some(c) = &self.possible_characteristics {
            let _ = writeln!(s, "possible characteristics: {c:?}");
        }
        if let Some(AllFieldsVerdict::NonRepresentableAllFields { witness }) = &self.all_fields_verdict {
            let _ = writeln!(s, "all fields: non-representable ({})", witness.describe());
        }
        if let Some(w) = &self.witness {
            if let Some(p) = &w.polynomial {
                let _ = writeln!(s, "witness polynomial: {p}");
            }
        }
        for n in &self.notes {
            let _ = writeln!(s, "note: {n}");
        }
        s
    }
}

fn plural(ps: &[u64]) -> String {
    let list: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
    if ps.len() == 1 {
        format!("characteristic {}", list[0])
    } else {
        format!("characteristics {}", list.join(", "))
    }
}

/// Full pipeline on a matroid as read from input.
pub fn analyze(m: &Matroid, opts: &AnalysisOptions) -> Result<DecisionReport, DecideError> {
    let start = Instant::now();
    let prep = prepare(m, opts.allow_dual)?;
    let sys = SaturatedSystem::build(&prep, opts.config.order)?;
    let cfg = &opts.config;

    let mut notes = prep.steps.notes();
    let mut timings = Timings::default();
    let mut trace = BTreeMap::new();
    let (per_char, integer, all_fields, possible) = if opts.all_fields {
        let out = decide_all_fields(&sys, cfg, &opts.characteristics)?;
        timings.integer_ms = Some(out.integer.millis);
        (out.per_char, Some(out.integer), out.verdict, out.possible)
    } else {
        for &p in &opts.characteristics {
            check_char(p)?;
        }
        let chars: BTreeSet<u64> = opts.characteristics.iter().copied().collect();
        (run_chars(&sys, &chars, cfg)?, None, None, None)
    };

    let mut engine = EngineSummary::default();
    if let Some(i) = &integer {
        engine.pairs += i.stats.pairs;
        engine.reductions += i.stats.reductions;
        engine.limits_hit |= i.limit.is_some();
        for c in i.constants.iter().filter(|c| c.as_str() != "1") {
            notes.push(format!("representation, if any, has characteristic dividing {c}"));
        }
        if i.limit.is_some() {
            notes.push("integer computation hit a resource limit; candidate characteristics unknown".into());
        }
        if cfg.trace {
            trace.insert("integers".to_string(), i.trace.clone());
        }
    }
    let mut characteristics = BTreeMap::new();
    for (p, o) in &per_char {
        engine.pairs += o.stats.pairs;
        engine.reductions += o.stats.reductions;
        engine.limits_hit |= matches!(o.verdict, Verdict::ResourceExceeded { .. });
        timings.characteristics_ms.insert(*p, o.millis);
        if cfg.trace {
            trace.insert(format!("char {p}"), o.trace.clone());
        }
        characteristics.insert(*p, o.verdict.clone());
    }
    if let Some(ps) = &possible {
        if ps.is_empty() {
            notes.push("no characteristic possible".into());
        } else {
            notes.push(format!("only {} possible", plural(ps)));
        }
    }
    if all_fields.is_some() {
        notes.push("not representable over any field".into());
    }
    let witness = all_fields
        .clone()
        .or_else(|| characteristics.values().find_map(|v| v.witness().cloned()));

    timings.total_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(DecisionReport {
        matroid: MatroidSummary { n: m.order(), r: m.rank(), circuits: m.circuits().to_vec() },
        preprocessing: prep.steps.clone(),
        pattern: PatternSummary {
            vars: sys.pattern.var_names(),
            zeros: sys.pattern.zeros().into_iter().map(|(i, j)| [i, j]).collect(),
            columns: sys.pattern.labels().to_vec(),
        },
        mode: cfg.mode,
        characteristics,
        candidate_characteristics: integer.as_ref().filter(|i| i.limit.is_none()).map(|i| i.candidates.clone()),
        possible_characteristics: possible,
        integer_stage: integer,
        all_fields_verdict: all_fields.map(|witness| AllFieldsVerdict::NonRepresentableAllFields { witness }),
        witness,
        notes,
        engine,
        trace,
        timings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> ElementSet {
        let mut s = ElementSet::EMPTY;
        for &x in xs {
            s.insert(x);
        }
        s
    }

    fn fano() -> Matroid {
        let c = [[3, 5, 6], [2, 5, 7], [1, 6, 7], [3, 4, 7], [2, 4, 6], [1, 4, 5], [1, 2, 3]];
        Matroid::new(7, 3, c.iter().map(|t| set(t)).collect()).unwrap()
    }

    fn system(m: &Matroid) -> SaturatedSystem {
        SaturatedSystem::build(&prepare(m, true).unwrap(), MonomialOrder::DEGREVLEX).unwrap()
    }

    fn exact() -> DecideConfig {
        DecideConfig { mode: Mode::Exact, ..Default::default() }
    }

    #[test]
    fn prepare_reports_loops_and_parallels() {
        let m = Matroid::new(4, 2, vec![set(&[1]), set(&[2, 3])]).unwrap();
        let p = prepare(&m, true).unwrap();
        assert_eq!(p.steps.loops, vec![1]);
        assert_eq!(p.steps.parallel, vec![[3, 2]]);
        assert_eq!(p.labels, vec![2, 4]);
        assert_eq!(p.representative, vec![None, Some(2), Some(2), Some(4)]);
        assert!(!p.steps.dualized);
        assert_eq!(p.steps.notes().len(), 3);
    }

    #[test]
    fn prepare_dualizes_high_rank() {
        let m = Matroid::uniform(4, 6).unwrap();
        let p = prepare(&m, true).unwrap();
        assert!(p.steps.dualized);
        assert_eq!(p.matroid.rank(), 2);
        assert!(!prepare(&m, false).unwrap().steps.dualized);
        assert_eq!(prepare(&Matroid::uniform(0, 3).unwrap(), true).unwrap_err(), DecideError::RankZero);
    }

    #[test]
    fn fano_reordering_puts_a_basis_first() {
        let p = prepare(&fano(), true).unwrap();
        assert_eq!(p.labels, vec![1, 2, 4, 3, 5, 6, 7]);
        assert!(p.matroid.is_basis(set(&[1, 2, 3])));
    }

    #[test]
    fn uniform_four_points_on_a_line() {
        let sys = system(&Matroid::uniform(2, 4).unwrap());
        for p in [0, 2, 3] {
            let fast = decide_over_char(&sys, p, &DecideConfig::default()).unwrap();
            assert!(matches!(fast.verdict, Verdict::Inconclusive { .. }), "{p}: {:?}", fast.verdict);
            let ex = decide_over_char(&sys, p, &exact()).unwrap();
            assert_eq!(ex.verdict, Verdict::RepresentableOverClosure, "{p}");
        }
    }

    #[test]
    fn fano_over_three_has_checkable_witness() {
        let sys = system(&fano());
        let cfg = DecideConfig::default();
        let out = decide_over_char(&sys, 3, &cfg).unwrap();
        let w = out.verdict.witness().expect("non-representable").clone();
        assert_eq!(check_witness(&sys, 3, &w, &cfg).unwrap(), Some(true));
        assert_eq!(product_in_radical(&sys, 3, &cfg).unwrap(), Some(true));
        assert_eq!(product_in_radical(&sys, 2, &cfg).unwrap(), Some(false));
    }

    #[test]
    fn bad_characteristics_are_rejected() {
        let sys = system(&fano());
        for p in [1, 4, 9] {
            assert_eq!(
                decide_over_char(&sys, p, &DecideConfig::default()).unwrap_err(),
                DecideError::BadCharacteristic(p)
            );
        }
    }

    #[test]
    fn integer_stage_keeps_the_prime() {
        let sys = system(&fano());
        let i = integer_stage(&sys, &DecideConfig::default());
        assert!(!i.contains_one);
        assert_eq!(i.constants, vec!["2".to_string()]);
        assert_eq!(i.candidates, vec![2]);
        let stripped = integer_stage(&sys, &DecideConfig { strip_content: true, ..Default::default() });
        assert!(stripped.contains_one);
        assert_eq!(stripped.divisions, vec!["2".to_string()]);
        assert_eq!(stripped.candidates, vec![2]);
    }

    #[test]
    fn tight_limits_give_resource_verdicts() {
        let sys = system(&fano());
        let cfg = DecideConfig { limits: Limits { max_basis: 1, ..Limits::default() }, ..Default::default() };
        let out = decide_over_char(&sys, 0, &cfg).unwrap();
        assert!(matches!(out.verdict, Verdict::ResourceExceeded { .. }), "{:?}", out.verdict);
        let all = decide_all_fields(&sys, &cfg, &[]).unwrap();
        assert!(all.integer.limit.is_some());
        assert!(all.verdict.is_none());
        assert!(all.possible.is_none());
    }

    #[test]
    fn verdict_json_is_tagged() {
        let v = Verdict::NonRepresentable { witness: Witness::unit(IdealKind::Saturated) };
        let j = serde_json::to_value(&v).unwrap();
        assert_eq!(j["verdict"], "NonRepresentable");
        assert_eq!(j["witness"]["kind"], "unit_ideal");
        assert_eq!(j["witness"]["ideal"], "saturated");
        assert_eq!(serde_json::to_value(Verdict::RepresentableOverClosure).unwrap()["verdict"], "RepresentableOverClosure");
    }
}
