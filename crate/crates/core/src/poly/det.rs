use std::sync::Arc;

use super::{Domain, PolyError, PolyRing, Polynomial};

/// Determinant by cofactor expansion, always expanding along the row or
/// column with the most zero entries.
pub fn determinant<D: Domain>(
    ring: &Arc<PolyRing<D>>,
    grid: &[Vec<Polynomial<D>>],
) -> Result<Polynomial<D>, PolyError> {
    let n = grid.len();
    if let Some(row) = grid.iter().find(|row| row.len() != n) {
        return Err(PolyError::NotSquare { rows: n, cols: row.len() });
    }
    let rows: Vec<usize> = (0..n).collect();
    let cols: Vec<usize> = (0..n).collect();
    Ok(expand(ring, grid, &rows, &cols))
}

fn expand<D: Domain>(
    ring: &Arc<PolyRing<D>>,
    grid: &[Vec<Polynomial<D>>],
    rows: &[usize],
    cols: &[usize],
) -> Polynomial<D> {
    let k = rows.len();
    match k {
        0 => return Polynomial::one(ring),
        1 => return grid[rows[0]][cols[0]].clone(),
        2 => {
            let a = &grid[rows[0]][cols[0]] * &grid[rows[1]][cols[1]];
            let b = &grid[rows[0]][cols[1]] * &grid[rows[1]][cols[0]];
            return &a - &b;
        }
        _ => {}
    }

    let zeros_in_row = |r: usize| cols.iter().filter(|&&c| grid[r][c].is_zero()).count();
    let zeros_in_col = |c: usize| rows.iter().filter(|&&r| grid[r][c].is_zero()).count();
    let (best_row, row_zeros) = (0..k).map(|i| (i, zeros_in_row(rows[i]))).max_by_key(|&(i, z)| (z, std::cmp::Reverse(i))).unwrap();
    let (best_col, col_zeros) = (0..k).map(|j| (j, zeros_in_col(cols[j]))).max_by_key(|&(j, z)| (z, std::cmp::Reverse(j))).unwrap();

    if row_zeros == k || col_zeros == k {
        return Polynomial::zero(ring);
    }

    let mut acc = Polynomial::zero(ring);
    if row_zeros >= col_zeros {
        let r = rows[best_row];
        let sub_rows: Vec<usize> = rows.iter().copied().filter(|&x| x != r).collect();
        for (j, &c) in cols.iter().enumerate() {
            let entry = &grid[r][c];
            if entry.is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let minor = expand(ring, grid, &sub_rows, &sub_cols);
            let term = entry * &minor;
            acc = if (best_row + j) % 2 == 0 { &acc + &term } else { &acc - &term };
        }
    } else {
        let c = cols[best_col];
        let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        for (i, &r) in rows.iter().enumerate() {
            let entry = &grid[r][c];
            if entry.is_zero() {
                continue;
            }
            let sub_rows: Vec<usize> = rows.iter().copied().filter(|&x| x != r).collect();
            let minor = expand(ring, grid, &sub_rows, &sub_cols);
            let term = entry * &minor;
            acc = if (i + best_col) % 2 == 0 { &acc + &term } else { &acc - &term };
        }
    }
    acc
}
