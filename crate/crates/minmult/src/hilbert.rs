//! Hilbert series of monomial quotients, computed exactly as integer
//! polynomials over powers of (1-t).
//!
//! The numerator comes from the pivot recursion
//! `N(I) = N(I + (z)) + t N(I : z)` (from the multiplication-by-z exact
//! sequence) with pure-variable-power ideals as the closed-form base case.
//! The reduced form (numerator coprime to 1-t) carries the Krull dimension
//! and the multiplicity.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::monomial::{Monomial, MonomialIdeal};

/// Dense integer polynomial in one variable t.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly(Vec<BigInt>);

impl Poly {
    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn one() -> Self {
        Poly(vec![BigInt::one()])
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = Poly(coeffs);
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.0.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let len = self.0.len().max(other.0.len());
        let mut out = vec![BigInt::zero(); len];
        for (k, item) in out.iter_mut().enumerate() {
            *item = self.coeff(k) + other.coeff(k);
        }
        Poly::from_coeffs(out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let len = self.0.len().max(other.0.len());
        let mut out = vec![BigInt::zero(); len];
        for (k, item) in out.iter_mut().enumerate() {
            *item = self.coeff(k) - other.coeff(k);
        }
        Poly::from_coeffs(out)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }

    /// Multiplication by t^k.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::zero(); k];
        out.extend(self.0.iter().cloned());
        Poly(out)
    }

    /// The polynomial `1 - t^k`.
    pub fn one_minus_t_pow(k: usize) -> Poly {
        let mut out = vec![BigInt::zero(); k + 1];
        out[0] = BigInt::one();
        out[k] = -BigInt::one();
        Poly::from_coeffs(out)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.0.iter().sum()
    }

    /// Exact division by (1 - t); `None` when 1 is not a root.
    pub fn div_one_minus_t(&self) -> Option<Poly> {
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if !self.eval_at_one().is_zero() {
            return None;
        }
        // N(t) = (1-t) Q(t): q_k = Σ_{i<=k} n_i.
        let mut acc = BigInt::zero();
        let mut out = Vec::with_capacity(self.0.len() - 1);
        for k in 0..self.0.len() - 1 {
            acc += &self.0[k];
            out.push(acc.clone());
        }
        Some(Poly::from_coeffs(out))
    }

    /// Exact division by (1 - t)^k; `None` when not divisible.
    pub fn div_one_minus_t_pow(&self, k: usize) -> Option<Poly> {
        let mut p = self.clone();
        for _ in 0..k {
            p = p.div_one_minus_t()?;
        }
        Some(p)
    }
}

/// Hilbert series `numerator / (1-t)^denom_pow`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    pub numerator: Poly,
    pub denom_pow: usize,
}

/// Reduced form `Q(t) / (1-t)^dim` with `Q(1) != 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedSeries {
    pub numerator: Poly,
    /// Krull dimension of the quotient.
    pub dim: usize,
    /// Multiplicity `Q(1)`; zero only for the zero ring.
    pub multiplicity: BigInt,
}

impl ReducedSeries {
    /// Degree of the series as a rational function, `deg Q - dim`; equals
    /// the a-invariant for Cohen-Macaulay quotients.
    pub fn rational_degree(&self) -> i64 {
        self.numerator.degree().map_or(0, |d| d as i64) - self.dim as i64
    }
}

impl HilbertSeries {
    pub fn reduced(&self) -> ReducedSeries {
        let mut num = self.numerator.clone();
        let mut pow = self.denom_pow;
        if num.is_zero() {
            return ReducedSeries {
                numerator: num,
                dim: 0,
                multiplicity: BigInt::zero(),
            };
        }
        while pow > 0 {
            match num.div_one_minus_t() {
                Some(q) => {
                    num = q;
                    pow -= 1;
                }
                None => break,
            }
        }
        let e = num.eval_at_one();
        assert!(!e.is_zero(), "reduced numerator must not vanish at 1");
        ReducedSeries {
            numerator: num,
            dim: pow,
            multiplicity: e,
        }
    }

    /// Series coefficients (graded dimensions) for degrees `0..=upto`.
    pub fn coefficients(&self, upto: usize) -> Vec<BigInt> {
        // 1/(1-t)^v has coefficients C(n+v-1, v-1); v = 0 contributes a
        // Kronecker delta.
        let v = self.denom_pow as i64;
        let mut out = vec![BigInt::zero(); upto + 1];
        for (i, c) in self.numerator.coeffs().iter().enumerate() {
            if i > upto || c.is_zero() {
                continue;
            }
            for (n, item) in out.iter_mut().enumerate().skip(i) {
                let k = (n - i) as i64;
                let binom = if v == 0 {
                    if k == 0 {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                } else {
                    crate::binomial(k + v - 1, v - 1)
                };
                *item += c * binom;
            }
        }
        out
    }

    /// Equality as rational functions: cross-multiply by powers of (1-t).
    pub fn equals_series(&self, other: &HilbertSeries) -> bool {
        let a = self.numerator.mul(&pow_one_minus_t(other.denom_pow));
        let b = other.numerator.mul(&pow_one_minus_t(self.denom_pow));
        a == b
    }
}

pub fn pow_one_minus_t(k: usize) -> Poly {
    let mut p = Poly::one();
    let lin = Poly::one_minus_t_pow(1);
    for _ in 0..k {
        p = p.mul(&lin);
    }
    p
}

/// Hilbert series of `S/I` by the pivot recursion; the pivot is the
/// variable occurring in the most generators (among variables dividing at
/// least one non-pure-power generator), ties broken by lowest index.
pub fn hilbert_series(ideal: &MonomialIdeal) -> HilbertSeries {
    HilbertSeries {
        numerator: numerator(ideal),
        denom_pow: ideal.vars(),
    }
}

fn numerator(ideal: &MonomialIdeal) -> Poly {
    if ideal.is_unit() {
        return Poly::zero();
    }
    let gens = ideal.gens();
    if gens.is_empty() {
        return Poly::one();
    }
    match pivot_variable(ideal) {
        Some(z) => {
            let plus = ideal.plus_variable(z);
            let colon = ideal.colon(&Monomial::variable(ideal.vars(), z));
            numerator(&plus).add(&numerator(&colon).shift(1))
        }
        None => {
            // All generators are pure powers of distinct variables.
            let mut p = Poly::one();
            for g in gens {
                p = p.mul(&Poly::one_minus_t_pow(g.degree() as usize));
            }
            p
        }
    }
}

/// Pivot for the recursion, or `None` when every generator is a pure
/// variable power (closed-form base case).
fn pivot_variable(ideal: &MonomialIdeal) -> Option<usize> {
    let v = ideal.vars();
    let mut eligible = vec![false; v];
    let mut any_mixed = false;
    for g in ideal.gens() {
        if !g.is_pure_power() {
            any_mixed = true;
            for (i, &e) in g.exps().iter().enumerate() {
                if e > 0 {
                    eligible[i] = true;
                }
            }
        }
    }
    if !any_mixed {
        return None;
    }
    let mut best: Option<(usize, usize)> = None; // (count, var)
    for z in 0..v {
        if !eligible[z] {
            continue;
        }
        let count = ideal.gens().iter().filter(|g| g.exps()[z] > 0).count();
        if best.is_none() || count > best.unwrap().0 {
            best = Some((count, z));
        }
    }
    best.map(|(_, z)| z)
}
