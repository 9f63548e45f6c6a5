//! Exact rank computations over the rationals and over prime fields.
//!
//! Ranks over Q use fraction-free (Bareiss) elimination: a fast machine-word
//! path with overflow checking, falling back to arbitrary-precision integers
//! when intermediate minors grow too large. Ranks over F_p use ordinary
//! Gaussian elimination on residues.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::{Error, Result};

/// Coefficient field for all homological computations: the rationals
/// (characteristic 0) or the prime field F_p. Dimensions over F_p equal
/// those over any infinite field of the same characteristic, so this
/// faithfully models the infinite-field hypotheses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

impl FieldSpec {
    /// Builds a field spec from a characteristic; 0 means the rationals.
    pub fn from_char(p: u64) -> Result<Self> {
        if p == 0 {
            return Ok(FieldSpec::Rational);
        }
        if !is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime(p) => *p,
        }
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::Rational
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense integer matrix given as rows; entries are small (boundary and
/// Koszul differentials have entries in {-1, 0, 1}).
pub fn rank(field: FieldSpec, rows: &[Vec<i64>]) -> usize {
    match field {
        FieldSpec::Rational => rank_rational(rows),
        FieldSpec::Prime(p) => rank_mod_p(rows, p),
    }
}

fn rank_rational(rows: &[Vec<i64>]) -> usize {
    match rank_bareiss_i128(rows) {
        Some(r) => r,
        None => rank_bareiss_big(rows),
    }
}

/// Fraction-free elimination on i128; returns None on overflow.
fn rank_bareiss_i128(rows: &[Vec<i64>]) -> Option<usize> {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let nrows = m.len();
    let ncols = if nrows == 0 { 0 } else { m[0].len() };
    let mut rank = 0usize;
    let mut prev: i128 = 1;
    let mut col = 0usize;
    while rank < nrows && col < ncols {
        // Pick the absolutely smallest nonzero pivot to slow entry growth.
        let mut pivot_row = None;
        for (r, row) in m.iter().enumerate().skip(rank) {
            if row[col] != 0 {
                match pivot_row {
                    None => pivot_row = Some(r),
                    Some(p) if row[col].abs() < m[p][col].abs() => pivot_row = Some(r),
                    _ => {}
                }
            }
        }
        let Some(p) = pivot_row else {
            col += 1;
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col];
        for r in rank + 1..nrows {
            let factor = m[r][col];
            for c in col..ncols {
                let a = pivot.checked_mul(m[r][c])?;
                let b = factor.checked_mul(m[rank][c])?;
                let diff = a.checked_sub(b)?;
                // Exact by the Bareiss identity.
                m[r][c] = diff / prev;
            }
        }
        prev = pivot;
        rank += 1;
        col += 1;
    }
    Some(rank)
}

fn rank_bareiss_big(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let nrows = m.len();
    let ncols = if nrows == 0 { 0 } else { m[0].len() };
    let mut rank = 0usize;
    let mut prev = BigInt::from(1);
    let mut col = 0usize;
    while rank < nrows && col < ncols {
        let mut pivot_row = None;
        for (r, row) in m.iter().enumerate().skip(rank) {
            if !row[col].is_zero() {
                match pivot_row {
                    None => pivot_row = Some(r),
                    Some(p) if row[col].abs() < m[p][col].abs() => pivot_row = Some(r),
                    _ => {}
                }
            }
        }
        let Some(p) = pivot_row else {
            col += 1;
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        for r in rank + 1..nrows {
            let factor = m[r][col].clone();
            for c in col..ncols {
                let v = (&pivot * &m[r][c] - &factor * &m[rank][c]) / &prev;
                m[r][c] = v;
            }
        }
        prev = pivot;
        rank += 1;
        col += 1;
    }
    rank
}

fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    let pi = p as i128;
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| ((x as i128).rem_euclid(pi)) as u64).collect())
        .collect();
    let nrows = m.len();
    let ncols = if nrows == 0 { 0 } else { m[0].len() };
    let mut rank = 0usize;
    let mut col = 0usize;
    while rank < nrows && col < ncols {
        let Some(pr) = (rank..nrows).find(|&r| m[r][col] != 0) else {
            col += 1;
            continue;
        };
        m.swap(rank, pr);
        let inv = mod_inverse(m[rank][col], p);
        for c in col..ncols {
            m[rank][c] = m[rank][c] * inv % p;
        }
        for r in 0..nrows {
            if r != rank && m[r][col] != 0 {
                let f = m[r][col];
                for c in col..ncols {
                    m[r][c] = (m[r][c] + (p - f) * m[rank][c] % p) % p;
                }
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and a != 0 mod p.
    mod_pow(a % p, p - 2, p)
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut b = base as u128;
    let pp = p as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % pp;
        }
        b = b * b % pp;
        exp >>= 1;
    }
    base = acc as u64;
    base
}

/// Smith normal form diagonal (invariant factors, nonnegative, divisibility
/// chain) of a small integer matrix. Used by tests to certify when rational
/// and mod-p ranks must agree.
pub fn smith_invariant_factors(rows: &[Vec<i64>]) -> Vec<BigInt> {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let nrows = m.len();
    let ncols = if nrows == 0 { 0 } else { m[0].len() };
    let mut factors = Vec::new();
    let mut top = 0usize;
    while top < nrows && top < ncols {
        // Find the entry of least nonzero absolute value in the working block.
        let mut best: Option<(usize, usize)> = None;
        for r in top..nrows {
            for c in top..ncols {
                if !m[r][c].is_zero() {
                    match best {
                        None => best = Some((r, c)),
                        Some((br, bc)) if m[r][c].abs() < m[br][bc].abs() => best = Some((r, c)),
                        _ => {}
                    }
                }
            }
        }
        let Some((br, bc)) = best else { break };
        m.swap(top, br);
        for row in m.iter_mut() {
            row.swap(top, bc);
        }
        loop {
            let mut clean = true;
            for r in top + 1..nrows {
                if !m[r][top].is_zero() {
                    let q = &m[r][top] / &m[top][top];
                    for c in top..ncols {
                        let v = &m[r][c] - &q * &m[top][c];
                        m[r][c] = v;
                    }
                    if !m[r][top].is_zero() {
                        m.swap(top, r);
                        clean = false;
                    }
                }
            }
            for c in top + 1..ncols {
                if !m[top][c].is_zero() {
                    let q = &m[top][c] / &m[top][top];
                    for row in m.iter_mut().take(nrows).skip(top) {
                        let v = &row[c] - &q * &row[top];
                        row[c] = v;
                    }
                    if !m[top][c].is_zero() {
                        for row in m.iter_mut() {
                            row.swap(top, c);
                        }
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }
        factors.push(m[top][top].abs());
        top += 1;
    }
    // Enforce the divisibility chain d1 | d2 | ... via pairwise gcd/lcm.
    for i in 0..factors.len() {
        for j in i + 1..factors.len() {
            let a = factors[i].clone();
            let b = factors[j].clone();
            let g = num_integer::Integer::gcd(&a, &b);
            if g.is_zero() {
                continue;
            }
            let l = &a * &b / &g;
            factors[i] = g;
            factors[j] = l;
        }
    }
    factors
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_small_matrices() {
        let m = vec![vec![1, 2], vec![2, 4]];
        assert_eq!(rank(FieldSpec::Rational, &m), 1);
        let m = vec![vec![1, 0, -1], vec![0, 1, -1]];
        assert_eq!(rank(FieldSpec::Rational, &m), 2);
        assert_eq!(rank(FieldSpec::Prime(2), &m), 2);
        assert_eq!(rank(FieldSpec::Rational, &[]), 0);
    }

    #[test]
    fn rank_mod_p_differs_when_p_divides_invariant_factor() {
        // Diagonal (1, 2): rank 2 over Q, rank 1 over F_2.
        let m = vec![vec![1, 0], vec![0, 2]];
        assert_eq!(rank(FieldSpec::Rational, &m), 2);
        assert_eq!(rank(FieldSpec::Prime(2), &m), 1);
        assert_eq!(rank(FieldSpec::Prime(3), &m), 2);
        let f = smith_invariant_factors(&m);
        assert_eq!(f, vec![BigInt::from(1), BigInt::from(2)]);
    }

    #[test]
    fn field_spec_validation() {
        assert!(FieldSpec::from_char(0).is_ok());
        assert!(FieldSpec::from_char(2).is_ok());
        assert!(FieldSpec::from_char(97).is_ok());
        assert!(FieldSpec::from_char(1).is_err());
        assert!(FieldSpec::from_char(6).is_err());
    }
}
