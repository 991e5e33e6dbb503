//! Text formats for matroids and matrices.
//!
//! A matroid file starts with `n r` and then lists circuits, one per line,
//! either as 0/1 incidence strings (spaces allowed, an optional `k)` row label
//! in front) or as `c` followed by element numbers. `#` starts a comment.
//!
//! A matrix file starts with `r n q` and then has `r` rows of entries of
//! `GF(q)`, written as in [`GaloisField::parse`].

use std::fmt::Write as _;

use thiserror::Error;

use crate::matroid::{ElementSet, Matroid, MatroidError, Violation};
use crate::poly::gf::{GaloisField, GfError, Gf};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("no header line")]
    Empty,
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Field(#[from] GfError),
    #[error("circuit axioms violated: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Axioms(Vec<Violation>),
}

#[derive(Debug, Clone)]
pub struct ParsedMatroid {
    pub matroid: Matroid,
    pub warnings: Vec<String>,
    /// Axiom violations tolerated because of `force`.
    pub violations: Vec<Violation>,
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

fn line_err(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Line { line, msg: msg.into() }
}

fn parse_circuit(body: &str, n: usize, line: usize) -> Result<ElementSet, ParseError> {
    if let Some(rest) = body.strip_prefix('c') {
        let mut s = ElementSet::EMPTY;
        for tok in rest.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let e: usize = tok.parse().map_err(|_| line_err(line, format!("bad element `{tok}`")))?;
            if e == 0 || e > n {
                return Err(line_err(line, format!("element {e} outside 1..={n}")));
            }
            s.insert(e);
        }
        return Ok(s);
    }
    let body = match body.find(')') {
        Some(k) if body[..k].trim().chars().all(|c| c.is_ascii_digit()) => &body[k + 1..],
        _ => body,
    };
    let digits: Vec<char> = body.chars().filter(|c| !c.is_whitespace()).collect();
    if digits.len() != n {
        return Err(line_err(line, format!("incidence row has {} entries, expected {n}", digits.len())));
    }
    let mut s = ElementSet::EMPTY;
    for (i, ch) in digits.iter().enumerate() {
        match ch {
            '1' => s.insert(i + 1),
            '0' => {}
            _ => return Err(line_err(line, format!("unexpected character `{ch}`"))),
        }
    }
    Ok(s)
}

/// Reads a matroid. Circuits larger than the rank are dropped with a warning;
/// axiom violations are errors unless `force` is set.
pub fn parse_matroid(text: &str, force: bool) -> Result<ParsedMatroid, ParseError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, strip_comment(l))).filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or(ParseError::Empty)?;
    let nums: Vec<&str> = header.split_whitespace().collect();
    let (n, r) = match nums.as_slice() {
        [a, b] => (
            a.parse::<usize>().map_err(|_| line_err(hl, "header must be `n r`"))?,
            b.parse::<usize>().map_err(|_| line_err(hl, "header must be `n r`"))?,
        ),
        _ => return Err(line_err(hl, "header must be `n r`")),
    };
    let mut circuits = Vec::new();
    let mut warnings = Vec::new();
    for (ln, body) in lines {
        let c = parse_circuit(body, n, ln)?;
        if c.is_empty() {
            return Err(line_err(ln, "empty circuit"));
        }
        if c.len() > r {
            warnings.push(format!("line {ln}: circuit {c} has more than {r} elements, dropped"));
            continue;
        }
        circuits.push(c);
    }
    let matroid = Matroid::new(n, r, circuits)?;
    let violations = matroid.validate();
    if !violations.is_empty() && !force {
        return Err(ParseError::Axioms(violations));
    }
    Ok(ParsedMatroid { matroid, warnings, violations })
}

/// Header and incidence rows; [`parse_matroid`] reads it back unchanged.
pub fn render_matroid(m: &Matroid) -> String {
    let mut s = format!("{} {}\n", m.order(), m.rank());
    for c in m.circuits() {
        let row: String = (1..=m.order()).map(|e| if c.contains(e) { '1' } else { '0' }).collect();
        let _ = writeln!(s, "{row}");
    }
    s
}

/// Reads an `r n q` matrix over `GF(q)`.
pub fn parse_matrix(text: &str) -> Result<(GaloisField, Vec<Vec<Gf>>), ParseError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, strip_comment(l))).filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or(ParseError::Empty)?;
    let nums: Vec<u32> = header
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| line_err(hl, "header must be `r n q`")))
        .collect::<Result<_, _>>()?;
    let [r, n, q] = nums[..] else {
        return Err(line_err(hl, "header must be `r n q`"));
    };
    let field = GaloisField::new(q)?;
    let mut rows = Vec::with_capacity(r as usize);
    for (ln, body) in lines {
        let row: Vec<Gf> = body
            .split_whitespace()
            .map(|t| field.parse(t).map_err(|e| line_err(ln, e.to_string())))
            .collect::<Result<_, _>>()?;
        if row.len() != n as usize {
            return Err(line_err(ln, format!("row has {} entries, expected {n}", row.len())));
        }
        rows.push(row);
    }
    if rows.len() != r as usize {
        return Err(line_err(hl, format!("expected {r} rows, found {}", rows.len())));
    }
    Ok((field, rows))
}

/// Writes a matrix in the format read by [`parse_matrix`].
pub fn render_matrix(field: &GaloisField, rows: &[Vec<Gf>]) -> String {
    let n = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut s = format!("{} {} {}\n", rows.len(), n, field.order());
    for row in rows {
        let cells: Vec<String> = row.iter().map(|&x| field.render(x)).collect();
        let _ = writeln!(s, "{}", cells.join(" "));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const FANO: &str = "# Fano\n7 3\n0010110\n0100101\n1000011\n0011001\n0101010\n1001100\n1110000\n";

    #[test]
    fn fano_and_list_forms() {
        let p = parse_matroid(FANO, false).unwrap();
        assert_eq!(p.matroid.circuits().len(), 7);
        assert_eq!(p.matroid.bases().len(), 28);
        let q = parse_matroid("3 2\nc 1 2 3\n", false).unwrap();
        assert_eq!(q.matroid.circuits().len(), 0);
        assert_eq!(q.warnings.len(), 1);
        let t = parse_matroid("7 3\n1) 0 0 1 0 1 1 0  # labelled\nc 2,5,7\n", true).unwrap();
        assert_eq!(t.matroid.circuits().len(), 2);
    }

    #[test]
    fn errors_carry_line_numbers() {
        match parse_matroid("7 3\n0010110\n00101x0\n", false) {
            Err(ParseError::Line { line: 3, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_matroid("7 3\n001011\n", false) {
            Err(ParseError::Line { line: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_matroid("", false), Err(ParseError::Empty)));
        assert!(matches!(parse_matroid("x 3\n", false), Err(ParseError::Line { line: 1, .. })));
    }

    #[test]
    fn axiom_violations_need_force() {
        let text = "4 2\n1100\n0110\n";
        assert!(matches!(parse_matroid(text, false), Err(ParseError::Axioms(_))));
        let p = parse_matroid(text, true).unwrap();
        assert!(!p.violations.is_empty());
    }

    #[test]
    fn matrix_round_trip() {
        let text = "4 9 4\n1 0 0 1 0 0 1 1 0\ne 0 1 0 1 0 e e+1 0\n0 e 1 0 0 1 e 1 0\ne+1 e e+1 0 0 0 0 0 1\n";
        let (f, rows) = parse_matrix(text).unwrap();
        assert_eq!(f.order(), 4);
        assert_eq!(rows[1][7], f.add(f.generator(), f.one()));
        let again = parse_matrix(&render_matrix(&f, &rows)).unwrap();
        assert_eq!(again.1, rows);
        assert!(matches!(parse_matrix("2 2 6\n1 0\n0 1\n"), Err(ParseError::Field(_))));
        assert!(matches!(parse_matrix("2 2 2\n1 0\n"), Err(ParseError::Line { .. })));
    }

    proptest! {
        #[test]
        fn render_parse_round_trip(n in 3usize..9, r in 1usize..4, raw in prop::collection::vec(any::<u64>(), 0..6)) {
            let r = r.min(n);
            let circuits: Vec<ElementSet> = raw
                .iter()
                .map(|b| ElementSet::from_bits(b & ElementSet::full(n).bits()))
                .filter(|c| !c.is_empty() && c.len() <= r)
                .collect();
            let m = Matroid::new(n, r, circuits).unwrap();
            let back = parse_matroid(&render_matroid(&m), true).unwrap().matroid;
            prop_assert_eq!(back, m);
        }
    }
}
