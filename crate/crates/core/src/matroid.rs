//! Matroids given by their small circuits.
//!
//! A matroid of rank `r` is stored only through its circuits of size at most
//! `r`: every dependent `r`-set contains one of them, so bases, fundamental
//! circuits and the dual are all recoverable from this family.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported ground set.
pub const MAX_ELEMENTS: usize = 64;

/// A subset of the ground set `1..=n`, stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// The set `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(e: usize) -> Self {
        debug_assert!((1..=MAX_ELEMENTS).contains(&e));
        ElementSet(1u64 << (e - 1))
    }

    pub fn contains(self, e: usize) -> bool {
        (1..=MAX_ELEMENTS).contains(&e) && self.0 & (1u64 << (e - 1)) != 0
    }

    pub fn insert(&mut self, e: usize) {
        self.0 |= Self::singleton(e).0;
    }

    pub fn remove(&mut self, e: usize) {
        self.0 &= !Self::singleton(e).0;
    }

    pub fn with(self, e: usize) -> Self {
        ElementSet(self.0 | Self::singleton(e).0)
    }

    pub fn without(self, e: usize) -> Self {
        ElementSet(self.0 & !Self::singleton(e).0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: ElementSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: ElementSet) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ElementSet) -> Self {
        ElementSet(self.0 & other.0)
    }

    pub fn difference(self, other: ElementSet) -> Self {
        ElementSet(self.0 & !other.0)
    }

    /// Elements in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i + 1)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Key for lexicographic ordering by sorted element lists.
    fn lex_key(self) -> Vec<usize> {
        self.to_vec()
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElementSet::EMPTY;
        for e in iter {
            s.insert(e);
        }
        s
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, e) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for ElementSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for ElementSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        if let Some(&bad) = v.iter().find(|&&e| !(1..=MAX_ELEMENTS).contains(&e)) {
            return Err(serde::de::Error::custom(format!("element {bad} out of range")));
        }
        Ok(v.into_iter().collect())
    }
}

/// All `k`-subsets of `{1..n}` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<ElementSet> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (1..=k).collect();
    loop {
        out.push(idx.iter().copied().collect());
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] < n - (k - 1 - i) {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatroidError {
    #[error("ground set of {0} elements exceeds the supported maximum of {MAX_ELEMENTS}")]
    TooLarge(usize),
    #[error("rank {rank} exceeds ground set size {n}")]
    RankTooLarge { n: usize, rank: usize },
    #[error("circuit {circuit} has elements outside 1..={n}")]
    ElementOutOfRange { circuit: ElementSet, n: usize },
    #[error("set {set} of size {size} exceeds the rank {rank}")]
    SetExceedsRank { set: ElementSet, size: usize, rank: usize },
    #[error("{0} is not a basis")]
    NotABasis(ElementSet),
    #[error("element {0} lies in the basis")]
    ElementInBasis(usize),
    #[error("element {e} out of range 1..={n}")]
    BadElement { e: usize, n: usize },
    #[error("the matroid has no basis")]
    NoBasis,
    #[error("simplification leaves a matroid of rank 0")]
    RankZero,
    #[error("permutation is not a bijection of 1..={0}")]
    BadPermutation(usize),
}

/// A failed circuit axiom, with witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum Violation {
    EmptyCircuit,
    OversizedCircuit { circuit: ElementSet, rank: usize },
    Incomparability { smaller: ElementSet, larger: ElementSet },
    Elimination { first: ElementSet, second: ElementSet, element: usize },
    RankNotAchieved { rank: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyCircuit => write!(f, "empty circuit"),
            Violation::OversizedCircuit { circuit, rank } => {
                write!(f, "circuit {circuit} is larger than the rank {rank}")
            }
            Violation::Incomparability { smaller, larger } => {
                write!(f, "incomparability: circuit {smaller} is contained in circuit {larger}")
            }
            Violation::Elimination { first, second, element } => write!(
                f,
                "elimination: no circuit inside ({first} ∪ {second}) \\ {{{element}}}"
            ),
            Violation::RankNotAchieved { rank } => {
                write!(f, "rank {rank} not achieved: every {rank}-subset contains a circuit")
            }
        }
    }
}

/// Outcome of [`Matroid::validate_with_notes`].
#[derive(Debug, Clone, Default)]
pub struct Validation {
    pub violations: Vec<Violation>,
    /// Elimination instances whose witness would exceed the rank, hence is not stored.
    pub notes: Vec<String>,
}

/// A permutation of the ground set: position `k` (1-based) holds original element `order[k-1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    order: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { order: (1..=n).collect() }
    }

    pub fn from_order(order: Vec<usize>) -> Result<Self, MatroidError> {
        let n = order.len();
        let mut seen = vec![false; n + 1];
        for &e in &order {
            if e == 0 || e > n || seen[e] {
                return Err(MatroidError::BadPermutation(n));
            }
            seen[e] = true;
        }
        Ok(Permutation { order })
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Original element at new position `pos`.
    pub fn original(&self, pos: usize) -> usize {
        self.order[pos - 1]
    }

    /// New position of original element `e`.
    pub fn position(&self, e: usize) -> usize {
        self.order.iter().position(|&x| x == e).map(|p| p + 1).expect("element in range")
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn is_identity(&self) -> bool {
        self.order.iter().enumerate().all(|(i, &e)| e == i + 1)
    }

    /// Image of an original set in new positions.
    pub fn apply(&self, s: ElementSet) -> ElementSet {
        s.iter().map(|e| self.position(e)).collect()
    }

    /// Original elements at the given new positions.
    pub fn unapply(&self, s: ElementSet) -> ElementSet {
        s.iter().map(|p| self.original(p)).collect()
    }
}

/// Result of [`Matroid::simplify`].
#[derive(Debug, Clone)]
pub struct Simplification {
    pub matroid: Matroid,
    /// `mapping[e-1]` is the new index of original element `e`, if it survives.
    pub mapping: Vec<Option<usize>>,
    /// `representative[e-1]` is the surviving original element parallel to `e`
    /// (`None` for loops).
    pub representative: Vec<Option<usize>>,
}

impl Simplification {
    pub fn is_identity(&self) -> bool {
        self.mapping.iter().enumerate().all(|(i, m)| *m == Some(i + 1))
    }

    pub fn loops(&self) -> Vec<usize> {
        self.representative
            .iter()
            .enumerate()
            .filter(|(_, r)| r.is_none())
            .map(|(i, _)| i + 1)
            .collect()
    }
}

/// A matroid on `{1..n}` of rank `r`, stored through its circuits of size at most `r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Matroid {
    n: usize,
    r: usize,
    circuits: Vec<ElementSet>,
}

impl Matroid {
    /// Builds a matroid; circuits are deduplicated and sorted lexicographically.
    /// Axioms are not checked here, see [`Matroid::validate`].
    pub fn new(n: usize, r: usize, circuits: Vec<ElementSet>) -> Result<Self, MatroidError> {
        if n > MAX_ELEMENTS {
            return Err(MatroidError::TooLarge(n));
        }
        if r > n {
            return Err(MatroidError::RankTooLarge { n, rank: r });
        }
        let full = ElementSet::full(n);
        if let Some(&c) = circuits.iter().find(|c| !c.is_subset(full)) {
            return Err(MatroidError::ElementOutOfRange { circuit: c, n });
        }
        let mut circuits = circuits;
        circuits.sort_by_key(|c| (c.len(), c.lex_key()));
        circuits.dedup();
        Ok(Matroid { n, r, circuits })
    }

    /// The uniform matroid `U_{r,n}`: no circuits of size at most `r`.
    pub fn uniform(r: usize, n: usize) -> Result<Self, MatroidError> {
        Matroid::new(n, r, Vec::new())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn circuits(&self) -> &[ElementSet] {
        &self.circuits
    }

    pub fn ground_set(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    pub fn validate(&self) -> Vec<Violation> {
        self.validate_with_notes().violations
    }

    pub fn validate_with_notes(&self) -> Validation {
        let mut out = Validation::default();
        for &c in &self.circuits {
            if c.is_empty() {
                out.violations.push(Violation::EmptyCircuit);
            } else if c.len() > self.r {
                out.violations.push(Violation::OversizedCircuit { circuit: c, rank: self.r });
            }
        }
        for (i, &a) in self.circuits.iter().enumerate() {
            for &b in &self.circuits[i + 1..] {
                if a.is_subset(b) {
                    out.violations.push(Violation::Incomparability { smaller: a, larger: b });
                } else if b.is_subset(a) {
                    out.violations.push(Violation::Incomparability { smaller: b, larger: a });
                }
            }
        }
        for (i, &a) in self.circuits.iter().enumerate() {
            for &b in &self.circuits[i + 1..] {
                for e in a.intersection(b).iter() {
                    let rest = a.union(b).without(e);
                    if rest.len() > self.r {
                        out.notes.push(format!(
                            "elimination witness for {a}, {b} at {e} has more than {} elements and is not stored",
                            self.r
                        ));
                    } else if !self.circuits.iter().any(|c| !c.is_empty() && c.is_subset(rest)) {
                        out.violations.push(Violation::Elimination { first: a, second: b, element: e });
                    }
                }
            }
        }
        if self.r <= self.n && !k_subsets(self.n, self.r).into_iter().any(|s| !self.contains_circuit(s)) {
            out.violations.push(Violation::RankNotAchieved { rank: self.r });
        }
        out
    }

    fn contains_circuit(&self, x: ElementSet) -> bool {
        self.circuits.iter().any(|c| c.is_subset(x))
    }

    /// Whether `x` (of size at most the rank) contains a stored circuit.
    pub fn is_dependent(&self, x: ElementSet) -> Result<bool, MatroidError> {
        if x.len() > self.r {
            return Err(MatroidError::SetExceedsRank { set: x, size: x.len(), rank: self.r });
        }
        Ok(self.contains_circuit(x))
    }

    /// Independence for sets of any size: sets larger than the rank are dependent.
    pub fn is_independent(&self, x: ElementSet) -> bool {
        x.len() <= self.r && !self.contains_circuit(x)
    }

    /// All bases in lexicographic order.
    pub fn bases(&self) -> Vec<ElementSet> {
        k_subsets(self.n, self.r).into_iter().filter(|&s| !self.contains_circuit(s)).collect()
    }

    pub fn is_basis(&self, b: ElementSet) -> bool {
        b.len() == self.r && b.is_subset(self.ground_set()) && !self.contains_circuit(b)
    }

    /// The unique circuit inside `b ∪ {e}`; when no stored circuit fits, the
    /// circuit has `r + 1` elements and is `b ∪ {e}` itself.
    pub fn fundamental_circuit(&self, b: ElementSet, e: usize) -> Result<ElementSet, MatroidError> {
        if e == 0 || e > self.n {
            return Err(MatroidError::BadElement { e, n: self.n });
        }
        if b.contains(e) {
            return Err(MatroidError::ElementInBasis(e));
        }
        if !self.is_basis(b) {
            return Err(MatroidError::NotABasis(b));
        }
        let span = b.with(e);
        Ok(self
            .circuits
            .iter()
            .copied()
            .find(|c| c.contains(e) && c.is_subset(span))
            .unwrap_or(span))
    }

    /// The dual matroid: rank `n - r`, bases are complements of bases.
    pub fn dual(&self) -> Matroid {
        let full = self.ground_set();
        let dual_rank = self.n - self.r;
        let dual_bases: Vec<ElementSet> = self.bases().into_iter().map(|b| full.difference(b)).collect();
        let circuits = minimal_dependents(self.n, dual_rank, &dual_bases);
        Matroid { n: self.n, r: dual_rank, circuits }
    }

    /// Deletes loops and collapses parallel classes to their smallest element.
    pub fn simplify(&self) -> Result<Simplification, MatroidError> {
        let n = self.n;
        let mut parent: Vec<usize> = (0..=n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut loops = ElementSet::EMPTY;
        for c in &self.circuits {
            match c.len() {
                1 => loops = loops.union(*c),
                2 => {
                    let v = c.to_vec();
                    let (a, b) = (find(&mut parent, v[0]), find(&mut parent, v[1]));
                    // keep the smaller element as root
                    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                    parent[hi] = lo;
                }
                _ => {}
            }
        }
        let mut representative = vec![None; n];
        let mut kept = ElementSet::EMPTY;
        for e in 1..=n {
            if loops.contains(e) {
                continue;
            }
            let root = find(&mut parent, e);
            representative[e - 1] = Some(root);
            if root == e {
                kept.insert(e);
            }
        }
        let mut mapping = vec![None; n];
        for (new, e) in kept.iter().enumerate() {
            mapping[e - 1] = Some(new + 1);
        }
        let new_n = kept.len();
        let new_r = self.r.min(new_n);
        if new_r == 0 {
            return Err(MatroidError::RankZero);
        }
        let circuits = self
            .circuits
            .iter()
            .filter(|c| c.len() > 2 && c.is_subset(kept))
            .map(|c| c.iter().map(|e| mapping[e - 1].expect("kept element")).collect())
            .collect();
        let matroid = Matroid::new(new_n, new_r, circuits)?;
        Ok(Simplification { matroid, mapping, representative })
    }

    pub fn is_simple(&self) -> bool {
        self.circuits.iter().all(|c| c.len() > 2)
    }

    /// Permutation putting the lexicographically first basis in front, the
    /// remaining elements following in increasing order.
    pub fn find_initial_basis(&self) -> Result<Permutation, MatroidError> {
        let basis = k_subsets(self.n, self.r)
            .into_iter()
            .find(|&s| !self.contains_circuit(s))
            .ok_or(MatroidError::NoBasis)?;
        let mut order = basis.to_vec();
        order.extend(self.ground_set().difference(basis).iter());
        Permutation::from_order(order)
    }

    /// The isomorphic matroid whose element at position `k` is `perm.original(k)`.
    pub fn permuted(&self, perm: &Permutation) -> Result<Matroid, MatroidError> {
        if perm.len() != self.n {
            return Err(MatroidError::BadPermutation(self.n));
        }
        Matroid::new(self.n, self.r, self.circuits.iter().map(|&c| perm.apply(c)).collect())
    }
}

/// Minimal sets of size at most `rank` not contained in any of `bases`.
fn minimal_dependents(n: usize, rank: usize, bases: &[ElementSet]) -> Vec<ElementSet> {
    let mut circuits: Vec<ElementSet> = Vec::new();
    for k in 1..=rank {
        for s in k_subsets(n, k) {
            if circuits.iter().any(|c| c.is_subset(s)) {
                continue;
            }
            if !bases.iter().any(|b| s.is_subset(*b)) {
                circuits.push(s);
            }
        }
    }
    circuits
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> ElementSet {
        v.iter().copied().collect()
    }

    pub(crate) fn fano() -> Matroid {
        let c = [[3, 5, 6], [2, 5, 7], [1, 6, 7], [3, 4, 7], [2, 4, 6], [1, 4, 5], [1, 2, 3]];
        Matroid::new(7, 3, c.iter().map(|t| set(t)).collect()).unwrap()
    }

    fn non_pappus() -> Matroid {
        let c = [[1, 6, 8], [2, 5, 8], [1, 4, 9], [2, 3, 9], [3, 6, 7], [4, 5, 7], [2, 4, 6], [1, 3, 5]];
        Matroid::new(9, 3, c.iter().map(|t| set(t)).collect()).unwrap()
    }

    #[test]
    fn element_set_basics() {
        let s = set(&[1, 3, 64]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(64));
        assert!(!s.contains(2));
        assert_eq!(s.to_vec(), vec![1, 3, 64]);
        assert_eq!(format!("{}", set(&[2, 5])), "{2,5}");
        assert!(set(&[1]).is_subset(s));
        assert_eq!(s.difference(set(&[3])), set(&[1, 64]));
    }

    #[test]
    fn k_subsets_are_lexicographic() {
        let all = k_subsets(4, 2);
        let lists: Vec<Vec<usize>> = all.iter().map(|s| s.to_vec()).collect();
        assert_eq!(lists, vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4], vec![3, 4]]);
        assert_eq!(k_subsets(5, 0), vec![ElementSet::EMPTY]);
        assert!(k_subsets(2, 3).is_empty());
    }

    #[test]
    fn valid_examples_have_no_violations() {
        assert!(fano().validate().is_empty());
        assert!(non_pappus().validate().is_empty());
    }

    #[test]
    fn incomparability_is_reported() {
        let m = Matroid::new(3, 2, vec![set(&[1, 2]), set(&[1, 2, 3])]).unwrap();
        let v = m.validate();
        assert!(v.contains(&Violation::Incomparability { smaller: set(&[1, 2]), larger: set(&[1, 2, 3]) }));
    }

    #[test]
    fn elimination_and_rank_violations() {
        // {1,2} and {2,3} force a circuit inside {1,3}
        let m = Matroid::new(4, 3, vec![set(&[1, 2]), set(&[2, 3])]).unwrap();
        assert!(m
            .validate()
            .iter()
            .any(|v| matches!(v, Violation::Elimination { element: 2, .. })));
        let m = Matroid::new(2, 2, vec![set(&[1])]).unwrap();
        assert!(m.validate().contains(&Violation::RankNotAchieved { rank: 2 }));
    }

    #[test]
    fn oversized_witness_is_a_note() {
        let m = non_pappus();
        let v = m.validate_with_notes();
        assert!(v.violations.is_empty());
        assert!(!v.notes.is_empty());
    }

    #[test]
    fn dependence() {
        let f = fano();
        assert!(f.is_dependent(set(&[3, 5, 6])).unwrap());
        assert!(!f.is_dependent(set(&[1, 2, 4])).unwrap());
        assert!(!f.is_dependent(ElementSet::EMPTY).unwrap());
        assert!(matches!(f.is_dependent(set(&[1, 2, 3, 4])), Err(MatroidError::SetExceedsRank { .. })));
    }

    #[test]
    fn bases_counts() {
        assert_eq!(fano().bases().len(), 28);
        let u23 = Matroid::uniform(2, 3).unwrap();
        assert_eq!(u23.bases(), vec![set(&[1, 2]), set(&[1, 3]), set(&[2, 3])]);
        assert!(non_pappus().bases().contains(&set(&[7, 8, 9])));
    }

    #[test]
    fn fundamental_circuits() {
        let f = fano();
        assert_eq!(f.fundamental_circuit(set(&[1, 2, 4]), 5).unwrap(), set(&[1, 4, 5]));
        let np = non_pappus();
        let b = set(&[1, 2, 3]);
        assert_eq!(np.fundamental_circuit(b, 4).unwrap(), set(&[1, 2, 3, 4]));
        assert_eq!(np.fundamental_circuit(b, 5).unwrap(), set(&[1, 3, 5]));
        assert_eq!(np.fundamental_circuit(b, 1), Err(MatroidError::ElementInBasis(1)));
        assert_eq!(
            np.fundamental_circuit(set(&[1, 3, 5]), 2),
            Err(MatroidError::NotABasis(set(&[1, 3, 5])))
        );
    }

    #[test]
    fn dual_examples() {
        let f = fano();
        assert_eq!(f.dual().dual(), f);
        let u23 = Matroid::uniform(2, 3).unwrap();
        let d = u23.dual();
        assert_eq!(d.rank(), 1);
        // the pairs are circuits of size r + 1, hence not stored
        assert!(d.circuits().is_empty());
        assert_eq!(d.bases(), vec![set(&[1]), set(&[2]), set(&[3])]);
        for pair in k_subsets(3, 2) {
            assert!(!d.is_independent(pair));
        }
        assert_eq!(non_pappus().dual().rank(), 6);
    }

    #[test]
    fn simplify_examples() {
        let s = fano().simplify().unwrap();
        assert!(s.is_identity());
        assert_eq!(s.matroid, fano());

        let m = Matroid::new(3, 1, vec![set(&[1, 2]), set(&[1, 3]), set(&[2, 3])]).unwrap();
        let s = m.simplify().unwrap();
        assert_eq!(s.matroid.order(), 1);
        assert_eq!(s.mapping, vec![Some(1), None, None]);
        assert_eq!(s.representative, vec![Some(1), Some(1), Some(1)]);

        let m = Matroid::new(4, 2, vec![set(&[1]), set(&[2, 3])]).unwrap();
        let s = m.simplify().unwrap();
        assert_eq!(s.matroid.order(), 2);
        assert_eq!(s.mapping, vec![None, Some(1), None, Some(2)]);
        assert_eq!(s.loops(), vec![1]);
        // independent sets of the result: everything up to size 2
        assert_eq!(s.matroid.bases(), vec![set(&[1, 2])]);

        let m = Matroid::new(2, 1, vec![set(&[1]), set(&[2])]).unwrap();
        assert_eq!(m.simplify().unwrap_err(), MatroidError::RankZero);
    }

    #[test]
    fn initial_basis() {
        let p = fano().find_initial_basis().unwrap();
        assert_eq!(p.order(), &[1, 2, 4, 3, 5, 6, 7]);
        assert_eq!(p.apply(set(&[1, 2, 4])), set(&[1, 2, 3]));
        assert!(non_pappus().find_initial_basis().unwrap().is_identity());
        let permuted = fano().permuted(&p).unwrap();
        assert!(permuted.is_basis(set(&[1, 2, 3])));
        assert!(permuted.validate().is_empty());
        assert_eq!(permuted.bases().len(), 28);
    }
}
