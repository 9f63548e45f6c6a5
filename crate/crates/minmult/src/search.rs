//! Exhaustive census of small pure complexes: which (n, d, c, q, h)
//! combinations are realized by Buchsbaum complexes with linear
//! resolution, which attain the maximal cohomology bound, and whether any
//! Buchsbaum class attains Kamoi-Vogel equality without a linear
//! resolution (none is expected; any hit is preserved as data).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use crate::complex::{enumerate_pure_complexes, SimplicialComplex};
use crate::invariants::{analyze_sr, run_checks_sr, InvariantReport, Tri};
use crate::linalg::FieldSpec;
use crate::{binomial, Result};

/// One aggregated census row; classes are grouped by the full invariant
/// key and each row carries its first witness in enumeration order.
#[derive(Debug, Clone)]
pub struct CensusRow {
    /// Canonical encoding of the witness.
    pub canonical: String,
    pub n: usize,
    pub d: usize,
    pub c: usize,
    pub q: u64,
    pub e: BigInt,
    pub buchsbaum: bool,
    pub cohen_macaulay: bool,
    pub linear: bool,
    /// dim H^{q-1} when the resolution is q-linear and 2 <= q <= d.
    pub h: Option<BigInt>,
    pub h_max: Option<BigRational>,
    pub minimal_multiplicity: bool,
    /// Number of isomorphism classes sharing this key.
    pub class_count: u64,
    pub witness: SimplicialComplex,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CensusFilters {
    pub require_minimal: bool,
    pub fix_q: Option<u64>,
}

fn row_of(complex: &SimplicialComplex, report: &InvariantReport) -> Result<CensusRow> {
    let linear = report
        .linear_resolution_degree
        .is_some_and(|l| l == report.q as i64);
    let in_range = report.q >= 2 && report.q as usize <= report.d;
    let h = if linear && in_range {
        report.h_length(report.q as usize - 1)
    } else {
        None
    };
    let h_max = if in_range && report.c >= 1 {
        Some(crate::invariants::h_max(
            report.c as u64,
            report.d as u64,
            report.q,
        )?)
    } else {
        None
    };
    Ok(CensusRow {
        canonical: complex.canonical_form()?.encoding(),
        n: report.v,
        d: report.d,
        c: report.c,
        q: report.q,
        e: report.e.clone(),
        buchsbaum: report.buchsbaum == Tri::Yes,
        cohen_macaulay: report.cohen_macaulay,
        linear,
        h,
        h_max,
        minimal_multiplicity: report.minimal_multiplicity == Tri::Yes,
        class_count: 1,
        witness: complex.clone(),
    })
}

type RowKey = (
    usize,
    usize,
    u64,
    BigInt,
    bool,
    bool,
    bool,
    Option<BigInt>,
    bool,
);

fn key_of(row: &CensusRow) -> RowKey {
    (
        row.d,
        row.c,
        row.q,
        row.e.clone(),
        row.buchsbaum,
        row.cohen_macaulay,
        row.linear,
        row.h.clone(),
        row.minimal_multiplicity,
    )
}

/// Enumerates all pure `dim`-complexes on n vertices up to isomorphism,
/// analyzes each class with the full check suite (theorem-equivalence
/// violations abort), and aggregates by invariant key. Deterministic
/// regardless of thread count. Every row's `h` satisfies `h <= h_max`
/// for Buchsbaum linear rows (a violation would have aborted in the
/// checks).
pub fn census(
    n: usize,
    dim: usize,
    field: FieldSpec,
    filters: CensusFilters,
) -> Result<Vec<CensusRow>> {
    let classes = enumerate_pure_complexes(n, dim, true)?;
    let analyzed: Vec<Result<CensusRow>> = classes
        .par_iter()
        .map(|complex| {
            let report = analyze_sr(complex, field)?;
            // Runs every theorem check; disagreements surface as errors.
            run_checks_sr(complex, field, &report)?;
            row_of(complex, &report)
        })
        .collect();
    let mut rows: Vec<CensusRow> = Vec::new();
    for r in analyzed {
        let row = r?;
        if filters.require_minimal && !row.minimal_multiplicity {
            continue;
        }
        if let Some(q) = filters.fix_q {
            if row.q != q {
                continue;
            }
        }
        match rows.iter_mut().find(|existing| key_of(existing) == key_of(&row)) {
            Some(existing) => existing.class_count += 1,
            None => rows.push(row),
        }
    }
    rows.sort_by(|a, b| key_of(a).cmp(&key_of(b)));
    Ok(rows)
}

/// Buchsbaum isomorphism classes attaining Kamoi-Vogel equality WITHOUT a
/// q-linear resolution. Expected empty at these scales; any witness is a
/// research artifact and is returned verbatim.
pub fn hunt_kamoi_vogel_equality(
    n: usize,
    dim: usize,
    field: FieldSpec,
) -> Result<Vec<SimplicialComplex>> {
    let classes = enumerate_pure_complexes(n, dim, true)?;
    let hits: Vec<Result<Option<SimplicialComplex>>> = classes
        .par_iter()
        .map(|complex| {
            let report = analyze_sr(complex, field)?;
            if report.buchsbaum != Tri::Yes {
                return Ok(None);
            }
            let Some(h) = report.cohomology.h_lengths.as_ref() else {
                return Ok(None);
            };
            let d = report.d as i64;
            let c = report.c as i64;
            let mut lhs = BigInt::zero();
            for (i, hi) in h.iter().enumerate() {
                lhs += binomial(d, i as i64) * hi;
            }
            let rhs = binomial(report.reg + c - 1, c - 1);
            let linear = report
                .linear_resolution_degree
                .is_some_and(|l| l == report.q as i64);
            if lhs == rhs && !linear {
                Ok(Some(complex.clone()))
            } else {
                Ok(None)
            }
        })
        .collect();
    let mut out = Vec::new();
    for h in hits {
        if let Some(c) = h? {
            out.push(c);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::hanano_complex;

    #[test]
    fn census_4_1_has_expected_rows() {
        let rows = census(4, 1, FieldSpec::Rational, CensusFilters::default()).unwrap();
        // Two disjoint edges: d=2, c=2, q=2, minimal multiplicity, h=1.
        let mm_row = rows
            .iter()
            .find(|r| r.minimal_multiplicity && !r.cohen_macaulay)
            .expect("expected the disjoint-edges row");
        assert_eq!((mm_row.d, mm_row.c, mm_row.q), (2, 2, 2));
        assert_eq!(mm_row.h, Some(BigInt::from(1)));
        assert!(mm_row.buchsbaum);

        // The 4-cycle: Cohen-Macaulay, not minimal multiplicity.
        assert!(rows
            .iter()
            .any(|r| r.cohen_macaulay && !r.minimal_multiplicity && r.e == BigInt::from(4)));
    }

    #[test]
    fn census_3_1_has_no_non_cm_buchsbaum() {
        let rows = census(3, 1, FieldSpec::Rational, CensusFilters::default()).unwrap();
        assert!(rows.iter().all(|r| !r.buchsbaum || r.cohen_macaulay));
    }

    #[test]
    fn census_5_2_contains_hanano_class() {
        let rows = census(
            5,
            2,
            FieldSpec::Rational,
            CensusFilters {
                require_minimal: true,
                fix_q: None,
            },
        )
        .unwrap();
        assert!(!rows.is_empty());
        let key = hanano_complex().canonical_form().unwrap().encoding();
        assert!(rows.iter().any(|r| r.canonical == key));
    }

    #[test]
    fn census_deterministic_across_thread_counts() {
        let a = census(4, 1, FieldSpec::Rational, CensusFilters::default()).unwrap();
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        let b = pool
            .install(|| census(4, 1, FieldSpec::Rational, CensusFilters::default()))
            .unwrap();
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.canonical, y.canonical);
            assert_eq!(x.class_count, y.class_count);
        }
    }

    #[test]
    fn kamoi_vogel_hunt_small() {
        assert!(hunt_kamoi_vogel_equality(4, 1, FieldSpec::Rational)
            .unwrap()
            .is_empty());
        assert!(hunt_kamoi_vogel_equality(5, 2, FieldSpec::Rational)
            .unwrap()
            .is_empty());
    }
}
