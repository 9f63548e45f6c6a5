//! Exact computational toolkit for Stanley-Reisner rings and monomial
//! quotient algebras: graded invariants (multiplicity, initial degree,
//! regularity, a-invariant, local cohomology, Betti tables), decision
//! procedures for the Cohen-Macaulay and Buchsbaum properties, verifiers
//! for the classical inequalities and equivalences they satisfy, golden
//! example families, and an exhaustive census of small pure complexes.
//!
//! All arithmetic is exact (arbitrary-precision integers and rationals);
//! there is no floating point anywhere in the pipeline.

pub mod complex;
pub mod families;
pub mod hilbert;
pub mod homology;
pub mod invariants;
pub mod io;
pub mod linalg;
pub mod monomial;
pub mod search;
pub mod verify;

pub use complex::{FVector, HVector, SimplicialComplex};
pub use homology::{BettiTable, LocalCohomologyTable};
pub use invariants::{CheckResult, InvariantReport, Verdict};
pub use linalg::FieldSpec;
pub use monomial::{Monomial, MonomialIdeal};

use std::fmt;

/// Errors produced by constructors and operations across the toolkit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Invalid input data (empty face list, vertex out of range, ...).
    InvalidInput(String),
    /// A configured cap (enumeration size, canonicalization size,
    /// Koszul degree) was exceeded.
    CapExceeded(String),
    /// Two routes that a theorem asserts are equivalent disagreed.
    /// This signals either an implementation bug or a genuine
    /// counterexample; it is never swallowed.
    EquivalenceViolation(String),
    /// An internal cross-check (two independent computations of the same
    /// invariant) disagreed. Always a bug, never data.
    InternalCrossCheck(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(m) => write!(f, "invalid input: {m}"),
            Error::CapExceeded(m) => write!(f, "cap exceeded: {m}"),
            Error::EquivalenceViolation(m) => write!(f, "equivalence violation: {m}"),
            Error::InternalCrossCheck(m) => write!(f, "internal cross-check failed: {m}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

/// Binomial coefficient with the convention `C(a, b) = 0` for `b < 0` or
/// `b > a`, and `C(a, 0) = 1`. This makes the empty sums in the small-`q`
/// and small-`d` edge cases of the multiplicity bounds well defined.
pub fn binomial(a: i64, b: i64) -> num_bigint::BigInt {
    use num_bigint::BigInt;
    use num_traits::{One, Zero};
    if b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..b {
        num *= a - i;
        den *= i + 1;
    }
    num / den
}
