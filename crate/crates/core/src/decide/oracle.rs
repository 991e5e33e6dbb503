//! Finite-field checks that do not go through Gröbner bases.

use serde::Serialize;

use super::{prepare, DecideError};
use crate::matroid::{k_subsets, ElementSet, Matroid};
use crate::pattern::build_pattern_with_labels;
use crate::poly::gf::{GaloisField, Gf};

/// A subset on which the matrix and the matroid disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub set: ElementSet,
    pub independent_in_matroid: bool,
    pub independent_columns: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepresentationCheck {
    pub valid: bool,
    pub discrepancies: Vec<Discrepancy>,
}

fn zero_based(s: ElementSet) -> Vec<usize> {
    s.iter().map(|e| e - 1).collect()
}

fn check_shape(m: &Matroid, matrix: &[Vec<Gf>]) -> Result<(), DecideError> {
    let cols = matrix.first().map(|r| r.len()).unwrap_or(0);
    if matrix.len() != m.rank() || cols != m.order() || matrix.iter().any(|r| r.len() != cols) {
        return Err(DecideError::Dimension { rows: matrix.len(), cols, r: m.rank(), n: m.order() });
    }
    Ok(())
}

/// Compares independence of every subset of size at most the rank.
pub fn verify_representation(
    field: &GaloisField,
    matrix: &[Vec<Gf>],
    m: &Matroid,
) -> Result<RepresentationCheck, DecideError> {
    check_shape(m, matrix)?;
    let mut discrepancies = Vec::new();
    for k in 1..=m.rank() {
        for s in k_subsets(m.order(), k) {
            let in_m = m.is_independent(s);
            let in_a = field.column_rank(matrix, &zero_based(s)) == k;
            if in_m != in_a {
                discrepancies.push(Discrepancy { set: s, independent_in_matroid: in_m, independent_columns: in_a });
            }
        }
    }
    Ok(RepresentationCheck { valid: discrepancies.is_empty(), discrepancies })
}

/// Matroid of the columns of a full-rank matrix.
pub fn matroid_of_matrix(field: &GaloisField, matrix: &[Vec<Gf>]) -> Result<Matroid, DecideError> {
    let r = matrix.len();
    let n = matrix.first().map(|row| row.len()).unwrap_or(0);
    if matrix.iter().any(|row| row.len() != n) {
        return Err(DecideError::Dimension { rows: r, cols: n, r, n });
    }
    let all: Vec<usize> = (0..n).collect();
    let rank = field.column_rank(matrix, &all);
    if rank != r {
        return Err(DecideError::RankDeficient { rank, rows: r });
    }
    let mut circuits: Vec<ElementSet> = Vec::new();
    for k in 1..=r {
        for s in k_subsets(n, k) {
            if circuits.iter().any(|c| c.is_subset(s)) {
                continue;
            }
            if field.column_rank(matrix, &zero_based(s)) < k {
                circuits.push(s);
            }
        }
    }
    Ok(Matroid::new(n, r, circuits)?)
}

/// First assignment of nonzero values to the pattern variables that represents `m`
/// over `GF(q)`, in the original column order. Loops come back as zero columns and
/// parallel elements copy their representative.
pub fn brute_force_search(m: &Matroid, q: u32, limit: u64) -> Result<Option<Vec<Vec<Gf>>>, DecideError> {
    let field = GaloisField::new(q)?;
    let prep = prepare(m, false)?;
    let pm = &prep.matroid;
    let s = build_pattern_with_labels(pm, &prep.labels)?;
    let nv = s.num_vars();
    let per = (q - 1) as u64;
    let count = per.checked_pow(nv as u32).unwrap_or(u64::MAX);
    if count > limit {
        return Err(DecideError::SearchTooLarge { assignments: count, limit });
    }
    let r = pm.rank();
    let bases: Vec<(Vec<usize>, bool)> =
        k_subsets(pm.order(), r).into_iter().map(|b| (zero_based(b), pm.is_basis(b))).collect();
    let nonzero: Vec<Gf> = field.nonzero_elements().collect();
    let mut digits = vec![0usize; nv];
    loop {
        let values: Vec<Gf> = digits.iter().map(|&d| nonzero[d]).collect();
        let a = s.substitute(&field, &values);
        if bases.iter().all(|(cols, is_b)| (field.column_rank(&a, cols) == r) == *is_b) {
            return Ok(Some(unprepare(&prep, &a, m, &field)));
        }
        let mut k = nv;
        loop {
            if k == 0 {
                return Ok(None);
            }
            k -= 1;
            digits[k] += 1;
            if digits[k] < nonzero.len() {
                break;
            }
            digits[k] = 0;
        }
    }
}

fn unprepare(prep: &super::Prepared, a: &[Vec<Gf>], original: &Matroid, field: &GaloisField) -> Vec<Vec<Gf>> {
    let r = a.len();
    let mut out = vec![vec![field.zero(); original.order()]; r];
    let column = |label: usize| prep.labels.iter().position(|&l| l == label);
    for e in 1..=original.order() {
        let src = prep.representative[e - 1].and_then(column);
        if let Some(c) = src {
            for i in 0..r {
                out[i][e - 1] = a[i][c];
            }
        }
    }
    out
}
