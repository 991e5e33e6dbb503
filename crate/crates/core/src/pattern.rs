//! Symbolic candidate representation and its polynomial system.
//!
//! Columns `1..r` are the identity. A non-basis column `j` is nonzero exactly
//! on the rows of the basis elements in its fundamental circuit; the topmost
//! of those entries is scaled to one and the rest become variables.

use std::fmt::Write as _;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::matroid::{k_subsets, ElementSet, Matroid, MatroidError};
use crate::poly::gf::{GaloisField, Gf};
use crate::poly::{determinant, Domain, Integers, Monomial, MonomialOrder, PolyRing, Polynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Entry {
    Zero,
    One,
    Var(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PatternError {
    #[error("the first {0} elements are not a basis")]
    NotInitialBasis(usize),
    #[error("{0} column labels for {1} columns")]
    BadLabels(usize, usize),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicMatrix {
    r: usize,
    n: usize,
    /// Row-major, `entries[i][j]` for row `i+1`, column `j+1`.
    entries: Vec<Vec<Entry>>,
    /// `vartable[id] = (row, column)`, both 1-based.
    vartable: Vec<(usize, usize)>,
    /// Label printed for each column, usually the element before reordering.
    labels: Vec<usize>,
}

impl SymbolicMatrix {
    pub fn rows(&self) -> usize {
        self.r
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    /// Entry at 1-based `(row, col)`.
    pub fn entry(&self, row: usize, col: usize) -> Entry {
        self.entries[row - 1][col - 1]
    }

    pub fn entries(&self) -> &[Vec<Entry>] {
        &self.entries
    }

    pub fn num_vars(&self) -> usize {
        self.vartable.len()
    }

    pub fn var_position(&self, id: usize) -> (usize, usize) {
        self.vartable[id]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, col: usize) -> usize {
        self.labels[col - 1]
    }

    /// Column position carrying `label`.
    pub fn column_of(&self, label: usize) -> Option<usize> {
        self.labels.iter().position(|&l| l == label).map(|p| p + 1)
    }

    /// Entry addressed by row and column label.
    pub fn entry_at_label(&self, row: usize, label: usize) -> Option<Entry> {
        self.column_of(label).map(|c| self.entry(row, c))
    }

    pub fn var_name(&self, id: usize) -> String {
        let (i, j) = self.vartable[id];
        format!("x_{}_{}", i, self.labels[j - 1])
    }

    pub fn var_names(&self) -> Vec<String> {
        (0..self.num_vars()).map(|v| self.var_name(v)).collect()
    }

    /// Positions `(row, label)` of the zero entries outside the identity block.
    pub fn zeros(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for j in self.r..self.n {
            for i in 0..self.r {
                if self.entries[i][j] == Entry::Zero {
                    out.push((i + 1, self.labels[j]));
                }
            }
        }
        out
    }

    /// Integer ring on the pattern variables followed by `t`.
    pub fn ring(&self, order: MonomialOrder) -> Arc<PolyRing<Integers>> {
        let mut vars = self.var_names();
        vars.push("t".into());
        PolyRing::new(Integers, vars, order)
    }

    pub fn entry_poly(&self, ring: &Arc<PolyRing<Integers>>, row: usize, col: usize) -> Polynomial<Integers> {
        match self.entry(row, col) {
            Entry::Zero => Polynomial::zero(ring),
            Entry::One => Polynomial::one(ring),
            Entry::Var(v) => Polynomial::var(ring, v),
        }
    }

    /// Determinant of the submatrix on the given rows and columns (1-based).
    pub fn minor(&self, ring: &Arc<PolyRing<Integers>>, rows: &[usize], cols: &[usize]) -> Polynomial<Integers> {
        let grid: Vec<Vec<_>> =
            rows.iter().map(|&i| cols.iter().map(|&j| self.entry_poly(ring, i, j)).collect()).collect();
        determinant(ring, &grid).expect("square by construction")
    }

    /// Concrete matrix for an assignment of field values to the variables.
    pub fn substitute(&self, field: &GaloisField, values: &[Gf]) -> Vec<Vec<Gf>> {
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| match e {
                        Entry::Zero => field.zero(),
                        Entry::One => field.one(),
                        Entry::Var(v) => values[*v],
                    })
                    .collect()
            })
            .collect()
    }

    pub fn render(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| match e {
                        Entry::Zero => "0".to_string(),
                        Entry::One => "1".to_string(),
                        Entry::Var(v) => self.var_name(*v),
                    })
                    .collect()
            })
            .collect();
        let width: Vec<usize> = (0..self.n)
            .map(|j| cells.iter().map(|r| r[j].len()).chain([self.labels[j].to_string().len()]).max().unwrap_or(1))
            .collect();
        let mut s = String::new();
        let header: Vec<String> = (0..self.n).map(|j| format!("{:>w$}", self.labels[j], w = width[j])).collect();
        let _ = writeln!(s, "{}", header.join(" "));
        for row in &cells {
            let line: Vec<String> = row.iter().enumerate().map(|(j, c)| format!("{:>w$}", c, w = width[j])).collect();
            let _ = writeln!(s, "{}", line.join(" "));
        }
        s
    }
}

/// Pattern for a matroid whose first `r` elements form a basis, columns labelled `1..n`.
pub fn build_pattern(m: &Matroid) -> Result<SymbolicMatrix, PatternError> {
    build_pattern_with_labels(m, &(1..=m.order()).collect::<Vec<_>>())
}

/// As [`build_pattern`], printing column `k` as `labels[k-1]`.
pub fn build_pattern_with_labels(m: &Matroid, labels: &[usize]) -> Result<SymbolicMatrix, PatternError> {
    let (n, r) = (m.order(), m.rank());
    if labels.len() != n {
        return Err(PatternError::BadLabels(labels.len(), n));
    }
    let basis = ElementSet::full(r);
    if !m.is_basis(basis) {
        return Err(PatternError::NotInitialBasis(r));
    }
    let mut entries = vec![vec![Entry::Zero; n]; r];
    for (i, row) in entries.iter_mut().enumerate() {
        row[i] = Entry::One;
    }
    let mut vartable = Vec::new();
    for j in r + 1..=n {
        let c = m.fundamental_circuit(basis, j)?;
        let mut first = true;
        for i in c.without(j).iter() {
            if first {
                entries[i - 1][j - 1] = Entry::One;
                first = false;
            } else {
                entries[i - 1][j - 1] = Entry::Var(vartable.len());
                vartable.push((i, j));
            }
        }
    }
    Ok(SymbolicMatrix { r, n, entries, vartable, labels: labels.to_vec() })
}

/// A polynomial together with the set (circuit or basis) it came from, in column labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tagged {
    pub poly: Polynomial<Integers>,
    pub tag: ElementSet,
}

fn relabel(s: &SymbolicMatrix, set: ElementSet) -> ElementSet {
    set.iter().map(|c| s.label(c)).collect()
}

/// Every maximal minor of every circuit's columns, zero and repeated (up to sign) minors dropped.
pub fn circuit_polynomials(m: &Matroid, s: &SymbolicMatrix, ring: &Arc<PolyRing<Integers>>) -> Vec<Tagged> {
    let mut out: Vec<Tagged> = Vec::new();
    for &c in m.circuits() {
        let cols = c.to_vec();
        for rows in k_subsets(s.rows(), cols.len()) {
            let p = s.minor(ring, &rows.to_vec(), &cols);
            if p.is_zero() {
                continue;
            }
            let p = p.normalize_sign();
            if out.iter().any(|t| t.poly == p) {
                continue;
            }
            out.push(Tagged { poly: p, tag: relabel(s, c) });
        }
    }
    out
}

/// Determinant of every basis, except those equal to a single monomial with coefficient ±1.
/// Zero determinants are kept: they mean the pattern already forces the basis to be dependent.
pub fn basis_polynomials(m: &Matroid, s: &SymbolicMatrix, ring: &Arc<PolyRing<Integers>>) -> Vec<Tagged> {
    let rows: Vec<usize> = (1..=s.rows()).collect();
    let one = BigInt::from(1);
    m.bases()
        .into_iter()
        .filter_map(|b| {
            let p = s.minor(ring, &rows, &b.to_vec()).normalize_sign();
            let unit_monomial = p.num_terms() == 1 && p.terms()[0].0 == one;
            (!unit_monomial).then(|| Tagged { poly: p, tag: relabel(s, b) })
        })
        .collect()
}

/// `1 - t * (product of all pattern variables)`, sign-normalized.
pub fn saturation_polynomial(s: &SymbolicMatrix, ring: &Arc<PolyRing<Integers>>) -> Polynomial<Integers> {
    let nv = ring.nvars();
    let mut e = vec![1u16; nv];
    for x in e.iter_mut().skip(s.num_vars()) {
        *x = 0;
    }
    e[nv - 1] = 1;
    let d = Integers;
    Polynomial::from_terms(ring, vec![(d.one(), Monomial::one(nv)), (d.from_i64(-1), Monomial::from_exponents(&e))])
        .normalize_sign()
}
