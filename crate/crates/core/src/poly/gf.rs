//! Small finite fields `GF(q)`, `q = p^k <= 256`, by lookup tables.
//!
//! Elements of `GF(p^k)` are polynomials in a generator `e` of degree below `k`,
//! reduced modulo the first monic irreducible polynomial of degree `k` when the
//! lower coefficients are read as a base-`p` number. For `GF(4)` this is
//! `e^2 + e + 1`, for `GF(8)` `e^3 + e + 1` and for `GF(9)` `e^2 + 1`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use thiserror::Error;

use super::is_prime;

/// An element of a [`GaloisField`], encoded as `sum a_i p^i` for `a_0 + a_1 e + ...`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf(pub u8);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GfError {
    #[error("{0} is not a prime power in 2..=256")]
    BadOrder(u32),
    #[error("cannot parse `{0}` as a field element")]
    Parse(String),
}

#[derive(Clone)]
pub struct GaloisField {
    p: u32,
    k: u32,
    q: u32,
    add: Vec<u8>,
    mul: Vec<u8>,
    inv: Vec<u8>,
}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

impl fmt::Display for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q
    }
}

fn digits(mut x: u32, p: u32, k: u32) -> Vec<u32> {
    (0..k)
        .map(|_| {
            let d = x % p;
            x /= p;
            d
        })
        .collect()
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}

/// Whether the monic polynomial with lower coefficients `low` (degree `k`) has no
/// factor of degree `1..=k/2` over `GF(p)`; checked by trial division.
fn is_irreducible(low: &[u32], p: u32) -> bool {
    let k = low.len();
    let mut f: Vec<u32> = low.to_vec();
    f.push(1);
    for d in 1..=k / 2 {
        let count = p.pow(d as u32);
        for code in 0..count {
            let mut g = digits(code, p, d as u32);
            g.push(1);
            if poly_rem(&f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Remainder of `f` by monic `g` over `GF(p)`; coefficient vectors are low-to-high.
fn poly_rem(f: &[u32], g: &[u32], p: u32) -> Vec<u32> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    while r.len() > dg {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dg;
        for (i, &gc) in g.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - lead * gc % p) % p;
        }
        r.pop();
    }
    r
}

impl GaloisField {
    pub fn new(q: u32) -> Result<Self, GfError> {
        if !(2..=256).contains(&q) {
            return Err(GfError::BadOrder(q));
        }
        let p = (2..=q).find(|d| q.is_multiple_of(*d)).unwrap();
        if !is_prime(p as u64) {
            return Err(GfError::BadOrder(q));
        }
        let mut k = 0;
        let mut x = q;
        while x.is_multiple_of(p) {
            x /= p;
            k += 1;
        }
        if x != 1 {
            return Err(GfError::BadOrder(q));
        }
        let modulus: Vec<u32> = if k == 1 {
            vec![0, 1]
        } else {
            let low = (0..p.pow(k)).map(|c| digits(c, p, k)).find(|low| is_irreducible(low, p)).expect("irreducible exists");
            let mut m = low;
            m.push(1);
            m
        };
        let mut add = vec![0u8; (q * q) as usize];
        let mut mul = vec![0u8; (q * q) as usize];
        for a in 0..q {
            let da = digits(a, p, k);
            for b in 0..q {
                let db = digits(b, p, k);
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = undigits(&sum, p) as u8;
                let mut prod = vec![0u32; (2 * k - 1) as usize];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                let mut r = if k == 1 { prod } else { poly_rem(&prod, &modulus, p) };
                r.resize(k as usize, 0);
                mul[(a * q + b) as usize] = undigits(&r, p) as u8;
            }
        }
        let mut inv = vec![0u8; q as usize];
        for a in 1..q {
            let b = (1..q).find(|&b| mul[(a * q + b) as usize] == 1).expect("field has inverses");
            inv[a as usize] = b as u8;
        }
        Ok(GaloisField { p, k, q, add, mul, inv })
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn zero(&self) -> Gf {
        Gf(0)
    }

    pub fn one(&self) -> Gf {
        Gf(1)
    }

    /// The generator `e`; `1` in a prime field.
    pub fn generator(&self) -> Gf {
        if self.k == 1 {
            Gf(1)
        } else {
            Gf(self.p as u8)
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Gf> {
        (0..self.q).map(|x| Gf(x as u8))
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Gf> {
        (1..self.q).map(|x| Gf(x as u8))
    }

    pub fn add(&self, a: Gf, b: Gf) -> Gf {
        Gf(self.add[(a.0 as u32 * self.q + b.0 as u32) as usize])
    }

    pub fn neg(&self, a: Gf) -> Gf {
        let d: Vec<u32> = digits(a.0 as u32, self.p, self.k).into_iter().map(|x| (self.p - x) % self.p).collect();
        Gf(undigits(&d, self.p) as u8)
    }

    pub fn sub(&self, a: Gf, b: Gf) -> Gf {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Gf, b: Gf) -> Gf {
        Gf(self.mul[(a.0 as u32 * self.q + b.0 as u32) as usize])
    }

    /// Inverse of a nonzero element.
    pub fn inv(&self, a: Gf) -> Option<Gf> {
        (a.0 != 0).then(|| Gf(self.inv[a.0 as usize]))
    }

    pub fn pow(&self, a: Gf, mut e: u32) -> Gf {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Image of an integer in the prime subfield.
    pub fn from_integer(&self, n: &BigInt) -> Gf {
        Gf(n.mod_floor(&BigInt::from(self.p)).to_u8().expect("residue fits"))
    }

    pub fn from_i64(&self, n: i64) -> Gf {
        Gf(n.rem_euclid(self.p as i64) as u8)
    }

    /// Parses `0`, `1`, `e`, `e+1`, `2*e^2+e`, `2e+1`; integers are reduced mod `p`.
    pub fn parse(&self, s: &str) -> Result<Gf, GfError> {
        let err = || GfError::Parse(s.to_string());
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(err());
        }
        let mut acc = self.zero();
        let mut rest = text.as_str();
        let mut negative = false;
        if let Some(r) = rest.strip_prefix('-') {
            negative = true;
            rest = r;
        }
        loop {
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let (term, tail) = rest.split_at(end);
            let mut v = self.parse_term(term).ok_or_else(err)?;
            if negative {
                v = self.neg(v);
            }
            acc = self.add(acc, v);
            if tail.is_empty() {
                break;
            }
            negative = tail.starts_with('-');
            rest = &tail[1..];
            if rest.is_empty() {
                return Err(err());
            }
        }
        Ok(acc)
    }

    fn parse_term(&self, term: &str) -> Option<Gf> {
        if term.is_empty() {
            return None;
        }
        let (coef, power) = match term.find('e') {
            None => (term, None),
            Some(i) => {
                let coef = term[..i].trim_end_matches('*');
                let after = &term[i + 1..];
                let power = if after.is_empty() {
                    1
                } else {
                    after.strip_prefix('^')?.parse::<u32>().ok()?
                };
                (coef, Some(power))
            }
        };
        let c = if coef.is_empty() {
            self.one()
        } else {
            self.from_i64(coef.parse::<i64>().ok()?)
        };
        match power {
            None => Some(c),
            Some(_) if self.k == 1 => None,
            Some(k) => Some(self.mul(c, self.pow(self.generator(), k))),
        }
    }

    /// Text form accepted by [`GaloisField::parse`], highest power first: `e+1`, `2*e^2+e`.
    pub fn render(&self, a: Gf) -> String {
        let d = digits(a.0 as u32, self.p, self.k);
        let mut parts = Vec::new();
        for (i, &c) in d.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "e".to_string(),
                _ => format!("e^{i}"),
            };
            parts.push(match (c, mono.is_empty()) {
                (_, true) => c.to_string(),
                (1, false) => mono,
                (_, false) => format!("{c}*{mono}"),
            });
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }

    /// Rank of the given columns of a matrix (rows of field elements).
    pub fn column_rank(&self, rows: &[Vec<Gf>], cols: &[usize]) -> usize {
        // transpose so the chosen columns become rows, then eliminate
        let mut m: Vec<Vec<Gf>> = cols.iter().map(|&c| rows.iter().map(|r| r[c]).collect()).collect();
        let width = rows.len();
        let mut rank = 0;
        for col in 0..width {
            let Some(pivot) = (rank..m.len()).find(|&i| m[i][col].0 != 0) else {
                continue;
            };
            m.swap(rank, pivot);
            let inv = self.inv(m[rank][col]).unwrap();
            let pivot_row: Vec<Gf> = m[rank].iter().map(|&x| self.mul(x, inv)).collect();
            for (i, row) in m.iter_mut().enumerate() {
                if i != rank && row[col].0 != 0 {
                    let f = row[col];
                    for (x, &y) in row.iter_mut().zip(&pivot_row) {
                        *x = self.sub(*x, self.mul(f, y));
                    }
                }
            }
            m[rank] = pivot_row;
            rank += 1;
            if rank == m.len() {
                break;
            }
        }
        rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_generator_squares_to_one_plus_generator() {
        let f = GaloisField::new(4).unwrap();
        let e = f.parse("e").unwrap();
        let e1 = f.parse("e+1").unwrap();
        assert_eq!(f.mul(e, e), e1);
        // e^2 + e + 1 = 0
        assert_eq!(f.add(f.add(f.mul(e, e), e), f.one()), f.zero());
        assert_eq!(f.render(e1), "e+1");
        assert_eq!(f.parse("1+e").unwrap(), e1);
    }

    #[test]
    fn field_axioms_for_small_orders() {
        for q in [2, 3, 4, 5, 7, 8, 9, 16, 25, 27] {
            let f = GaloisField::new(q).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), f.zero());
                if a.0 != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one(), "GF({q})");
                }
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements().take(5) {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
                assert_eq!(f.parse(&f.render(a)).unwrap(), a);
            }
            // multiplicative group is cyclic of order q-1: a^(q-1) = 1
            for a in f.nonzero_elements() {
                assert_eq!(f.pow(a, q - 1), f.one());
            }
        }
        assert!(GaloisField::new(6).is_err());
        assert!(GaloisField::new(1).is_err());
    }

    #[test]
    fn rank_over_gf2() {
        let f = GaloisField::new(2).unwrap();
        let rows: Vec<Vec<Gf>> = [[1, 0, 1], [0, 1, 1]].iter().map(|r| r.iter().map(|&x| Gf(x)).collect()).collect();
        assert_eq!(f.column_rank(&rows, &[0, 1, 2]), 2);
        assert_eq!(f.column_rank(&rows, &[0, 1]), 2);
        assert_eq!(f.column_rank(&rows, &[2]), 1);
    }

    #[test]
    fn parse_rejects_garbage() {
        let f = GaloisField::new(4).unwrap();
        assert!(f.parse("x").is_err());
        assert!(f.parse("e+").is_err());
        assert!(GaloisField::new(3).unwrap().parse("e").is_err());
        assert_eq!(GaloisField::new(3).unwrap().parse("-1").unwrap(), Gf(2));
    }
}
