//! Invariant reports and machine-checkable verdicts for the classical
//! results on Buchsbaum graded algebras: the multiplicity lower bound, the
//! minimal-multiplicity equivalences, the Hoa-Miyazaki regularity bound,
//! the Kamoi-Vogel inequality, the h-vector linearity criterion, the
//! Stanley-Reisner minimal-multiplicity equivalences, and the small-
//! multiplicity classification.
//!
//! Every verdict carries its numeric evidence as exact integers or
//! rationals. Statements that a theorem asserts to be equivalent are
//! evaluated independently; a disagreement aborts with a counterexample
//! dump rather than returning a silent verdict.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::complex::SimplicialComplex;
use crate::hilbert::{hilbert_series, HilbertSeries, Poly};
use crate::homology::{
    betti_table_sr, local_cohomology_sr, reduced_homology_dims, BettiTable, LocalCohomologyTable,
};
use crate::linalg::FieldSpec;
use crate::monomial::{
    format_monomial, graded_betti_koszul, h0_graded_dims, taylor_degree_bound, Monomial,
    MonomialIdeal,
};
use crate::{binomial, Error, Result};

/// Outcome of a single named check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    /// Holds with equality (for inequality checks).
    Equality,
    Fails,
    NotApplicable,
    Unknown,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Equality => "equality",
            Verdict::Fails => "fails",
            Verdict::NotApplicable => "not-applicable",
            Verdict::Unknown => "unknown",
        }
    }
}

/// A named check verdict with its exact numeric evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub verdict: Verdict,
    /// (label, exact value) pairs; values are decimal strings of integers
    /// or rationals.
    pub evidence: Vec<(String, String)>,
    pub note: Option<String>,
}

impl CheckResult {
    fn new(name: &str, verdict: Verdict) -> Self {
        CheckResult {
            name: name.to_string(),
            verdict,
            evidence: Vec::new(),
            note: None,
        }
    }

    fn with(mut self, label: &str, value: impl ToString) -> Self {
        self.evidence.push((label.to_string(), value.to_string()));
        self
    }

    fn noted(mut self, note: impl ToString) -> Self {
        self.note = Some(note.to_string());
        self
    }
}

/// Three-valued property flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tri {
    Yes,
    No,
    Unknown,
}

impl Tri {
    pub fn as_str(&self) -> &'static str {
        match self {
            Tri::Yes => "yes",
            Tri::No => "no",
            Tri::Unknown => "unknown",
        }
    }
}

/// What the report was computed from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SourceDesc {
    Complex {
        vertices: usize,
        /// 1-based facet lists.
        facets: Vec<Vec<usize>>,
    },
    Ideal {
        variables: Vec<String>,
        generators: Vec<String>,
    },
}

/// Local cohomology knowledge attached to a report. The Stanley-Reisner
/// route has the full graded table; the monomial route has the graded H^0
/// plus, when the saturation quotient is Cohen-Macaulay, the vanishing of
/// the intermediate modules and the a-invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyData {
    pub table: Option<LocalCohomologyTable>,
    /// Graded dimensions of H^0 (degree -> dim).
    pub h0_dims: BTreeMap<u64, BigInt>,
    /// Lengths h^0..h^{d-1} when every one is known.
    pub h_lengths: Option<Vec<BigInt>>,
}

/// Assembled invariants of a graded quotient, with derived flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub source: SourceDesc,
    pub characteristic: u64,
    /// Ambient polynomial-ring variables.
    pub v: usize,
    /// Krull dimension.
    pub d: usize,
    /// Codimension v - d.
    pub c: usize,
    /// Initial degree; 1 for the polynomial ring sentinel.
    pub q: u64,
    pub polynomial_ring: bool,
    pub e: BigInt,
    pub depth: usize,
    pub reg: i64,
    pub a_invariant: Option<i64>,
    pub f_vector: Option<Vec<u64>>,
    pub h_vector: Option<Vec<i128>>,
    /// Computed Hilbert series.
    pub hilbert: HilbertSeries,
    pub cohomology: CohomologyData,
    pub betti: BettiTable,
    /// Buchsbaum invariant I(A) = Σ C(d-1,i) h^i, when all h^i known.
    pub i_invariant: Option<BigInt>,
    pub cohen_macaulay: bool,
    pub buchsbaum: Tri,
    pub buchsbaum_reason: String,
    /// Whether A/H^0 is Cohen-Macaulay, when decidable.
    pub h0_quotient_cm: Option<bool>,
    pub linear_resolution_degree: Option<i64>,
    pub minimal_multiplicity: Tri,
    /// The degree q of minimal multiplicity when the flag is yes.
    pub minimal_multiplicity_degree: Option<u64>,
}

impl InvariantReport {
    /// h^i as BigInt, when known.
    pub fn h_length(&self, i: usize) -> Option<BigInt> {
        self.cohomology
            .h_lengths
            .as_ref()
            .and_then(|v| v.get(i).cloned())
    }

    pub fn h0_length(&self) -> BigInt {
        self.cohomology.h0_dims.values().sum()
    }
}

/// Reisner's criterion: k[Δ] is Cohen-Macaulay over the field iff every
/// link (including the link of ∅) has vanishing reduced homology below its
/// top dimension.
pub fn is_cohen_macaulay_sr(complex: &SimplicialComplex, field: FieldSpec) -> bool {
    for face in complex.all_faces() {
        let link = complex.link_unrelabeled(face).unwrap();
        let dims = reduced_homology_dims(&link, field);
        // dims[idx] = H̃_{idx-1}; top index corresponds to dim(link).
        for (idx, &h) in dims.iter().enumerate() {
            if (idx as i64 - 1) < link.dim() && h != 0 {
                return false;
            }
        }
    }
    true
}

/// k[Δ] is Buchsbaum iff Δ is pure and every vertex link is
/// Cohen-Macaulay.
pub fn is_buchsbaum_sr(complex: &SimplicialComplex, field: FieldSpec) -> bool {
    if !complex.is_pure() {
        return false;
    }
    for v in crate::complex::mask_to_vertices(complex.support_mask()) {
        let (link, _) = complex.link(1u64 << v).unwrap();
        if !is_cohen_macaulay_sr(&link, field) {
            return false;
        }
    }
    true
}

/// The maximal homology bound `h_{c,d,q} = c(c+1)...(c+q-2) /
/// (d(d-1)...(d-q+2))` as an exact rational; q-1 factors on each side.
pub fn h_max(c: u64, d: u64, q: u64) -> Result<BigRational> {
    if c < 1 || q < 2 || q > d {
        return Err(Error::InvalidInput(format!(
            "h_max needs c >= 1 and 2 <= q <= d (got c={c}, d={d}, q={q})"
        )));
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for t in 0..(q - 1) {
        num *= BigInt::from(c + t);
        den *= BigInt::from(d - t);
    }
    Ok(BigRational::new(num, den))
}

fn bigint_of_u64(x: u64) -> BigInt {
    BigInt::from(x)
}

/// Full invariant report for a Stanley-Reisner ring. Every derived
/// invariant with two independent routes (regularity, depth, initial
/// degree, multiplicity) is cross-checked; a mismatch is an internal
/// error, never data.
pub fn analyze_sr(complex: &SimplicialComplex, field: FieldSpec) -> Result<InvariantReport> {
    let v = complex.vertices();
    let fvec = complex.f_vector();
    let hvec = crate::complex::h_vector(&fvec);
    let d = complex.ring_dim();
    let c = v - d;
    let e = bigint_of_u64(fvec.top());

    let nonfaces = complex.minimal_nonfaces();
    let polynomial_ring = nonfaces.is_empty();
    let q: u64 = nonfaces.first().map_or(1, |f| f.count_ones() as u64);

    let lc = local_cohomology_sr(complex, field);
    let betti = betti_table_sr(complex, field)?;

    // Cross-checks between the Betti and local-cohomology routes.
    if betti.regularity() != lc.regularity() {
        return Err(Error::InternalCrossCheck(format!(
            "regularity disagrees: betti {} vs cohomology {}",
            betti.regularity(),
            lc.regularity()
        )));
    }
    if betti.depth() != lc.depth() {
        return Err(Error::InternalCrossCheck(format!(
            "depth disagrees: betti {} vs cohomology {}",
            betti.depth(),
            lc.depth()
        )));
    }
    let betti_indeg = betti.indeg();
    let indeg_from_nonfaces = if polynomial_ring { None } else { Some(q as i64) };
    if betti_indeg != indeg_from_nonfaces {
        return Err(Error::InternalCrossCheck(format!(
            "initial degree disagrees: betti {betti_indeg:?} vs non-faces {indeg_from_nonfaces:?}"
        )));
    }
    let hsum: i128 = hvec.sum();
    if hsum != fvec.top() as i128 {
        return Err(Error::InternalCrossCheck(
            "h-vector sum does not equal the facet count".into(),
        ));
    }

    let reg = betti.regularity();
    let depth = betti.depth();
    let a_invariant = lc.a_invariant();

    let cm_reisner = is_cohen_macaulay_sr(complex, field);
    if cm_reisner != (depth == d) {
        return Err(Error::InternalCrossCheck(
            "Reisner criterion disagrees with depth = dim".into(),
        ));
    }

    let buchsbaum = is_buchsbaum_sr(complex, field);
    let h_lengths = lc.lengths_below_top().map(|v| {
        v.into_iter().map(bigint_of_u64).collect::<Vec<BigInt>>()
    });
    if buchsbaum {
        // Every module below the top must be concentrated in degree 0 with
        // the dimension of the corresponding reduced homology of Δ
        // (hdims[i] = dim H̃_{i-1}).
        let hdims = reduced_homology_dims(complex, field);
        for i in 0..d {
            let row = lc.row(i);
            if !row.concentrated_in(0) {
                return Err(Error::InternalCrossCheck(format!(
                    "Buchsbaum complex with H^{i} not concentrated in degree 0"
                )));
            }
            let expected = hdims.get(i).copied().unwrap_or(0);
            if row.total() != Some(expected) {
                return Err(Error::InternalCrossCheck(format!(
                    "Buchsbaum complex with h^{i} != dim H̃_{}",
                    i as i64 - 1
                )));
            }
        }
    }

    let i_invariant = h_lengths.as_ref().map(|h| {
        let mut sum = BigInt::zero();
        for (i, hi) in h.iter().enumerate() {
            sum += binomial(d as i64 - 1, i as i64) * hi;
        }
        sum
    });
    if let Some(ia) = &i_invariant {
        if (depth == d) != ia.is_zero() {
            return Err(Error::InternalCrossCheck(
                "I(A) = 0 must coincide with Cohen-Macaulayness".into(),
            ));
        }
    }

    let h0_dims: BTreeMap<u64, BigInt> = if d == 0 {
        // k[{∅}] = k: H^0 = k in degree 0.
        [(0u64, BigInt::one())].into()
    } else {
        BTreeMap::new()
    };

    let hilbert = HilbertSeries {
        numerator: Poly::from_coeffs(hvec.entries().iter().map(|&x| BigInt::from(x)).collect()),
        denom_pow: d,
    };

    let buchsbaum_tri = if buchsbaum { Tri::Yes } else { Tri::No };
    let buchsbaum_reason = if buchsbaum {
        "pure with Cohen-Macaulay vertex links".to_string()
    } else if !complex.is_pure() {
        "not pure".to_string()
    } else {
        "some vertex link is not Cohen-Macaulay".to_string()
    };

    let mut report = InvariantReport {
        source: SourceDesc::Complex {
            vertices: v,
            facets: complex
                .facets()
                .iter()
                .map(|&f| {
                    crate::complex::mask_to_vertices(f)
                        .into_iter()
                        .map(|x| x + 1)
                        .collect()
                })
                .collect(),
        },
        characteristic: field.characteristic(),
        v,
        d,
        c,
        q,
        polynomial_ring,
        e,
        depth,
        reg,
        a_invariant: Some(a_invariant),
        f_vector: Some(fvec.entries().to_vec()),
        h_vector: Some(hvec.entries().to_vec()),
        hilbert,
        cohomology: CohomologyData {
            table: Some(lc),
            h0_dims,
            h_lengths,
        },
        betti,
        i_invariant,
        cohen_macaulay: depth == d,
        buchsbaum: buchsbaum_tri,
        buchsbaum_reason,
        h0_quotient_cm: if d == 0 { None } else { Some(depth == d) },
        linear_resolution_degree: None,
        minimal_multiplicity: Tri::Unknown,
        minimal_multiplicity_degree: None,
    };
    report.linear_resolution_degree = report.betti.linear_degree();
    fill_minimal_multiplicity(&mut report);
    guard_minimal_multiplicity_vs_cm(&report)?;
    Ok(report)
}

/// A non-polynomial minimal-multiplicity Buchsbaum algebra is never
/// Cohen-Macaulay; reaching that state means an arithmetic bug.
fn guard_minimal_multiplicity_vs_cm(report: &InvariantReport) -> Result<()> {
    if report.minimal_multiplicity == Tri::Yes
        && !report.polynomial_ring
        && report.cohen_macaulay
    {
        return Err(Error::InternalCrossCheck(
            "minimal multiplicity with Cohen-Macaulay on a non-polynomial ring".into(),
        ));
    }
    Ok(())
}

/// Full invariant report for a monomial quotient S/I, I != 0, via the
/// Hilbert series, Koszul Betti table and saturation.
pub fn analyze_monomial(
    ideal: &MonomialIdeal,
    field: FieldSpec,
    variable_names: Option<Vec<String>>,
) -> Result<InvariantReport> {
    if ideal.is_zero() {
        return Err(Error::InvalidInput(
            "the zero ideal is the polynomial ring; analyze it as the full simplex".into(),
        ));
    }
    if ideal.is_unit() {
        return Err(Error::InvalidInput("the unit ideal defines the zero ring".into()));
    }
    let v = ideal.vars();
    let names = variable_names.unwrap_or_else(|| (1..=v).map(|i| format!("X{i}")).collect());

    let series = hilbert_series(ideal);
    let reduced = series.reduced();
    let d = reduced.dim;
    let c = v - d;
    let e = reduced.multiplicity.clone();
    let q = ideal.initial_degree().expect("nonzero ideal has generators");

    // The analysis needs the complete table, so the Taylor bound is
    // passed explicitly (exploratory cap overrides do not apply here).
    let betti = graded_betti_koszul(ideal, field, Some(taylor_degree_bound(ideal)))?;
    // β_{1,j} must count minimal generators by degree.
    {
        let mut by_degree: BTreeMap<i64, u64> = BTreeMap::new();
        for g in ideal.gens() {
            *by_degree.entry(g.degree() as i64).or_insert(0) += 1;
        }
        for (&j, &count) in &by_degree {
            if betti.beta(1, j) != count {
                return Err(Error::InternalCrossCheck(format!(
                    "β_(1,{j}) = {} but the ideal has {count} generators of degree {j}",
                    betti.beta(1, j)
                )));
            }
        }
    }
    let reg = betti.regularity();
    let depth = betti.depth();

    let (sat, h0_dims_raw) = h0_graded_dims(ideal)?;
    let h0_dims: BTreeMap<u64, BigInt> = h0_dims_raw;
    let h0_len: BigInt = h0_dims.values().sum();
    if (depth == 0) != !h0_len.is_zero() {
        return Err(Error::InternalCrossCheck(
            "depth 0 must coincide with H^0 != 0".into(),
        ));
    }

    // A/H^0 = S/sat(I).
    let (h0_quotient_cm, a_invariant, h_lengths) = if sat.is_unit() {
        // d = 0: Artinian, H^0 is everything; a = top nonzero degree.
        let top = *h0_dims.keys().max().expect("Artinian ring has H^0 != 0") as i64;
        (None, Some(top), Some(Vec::new()))
    } else {
        let sat_series = hilbert_series(&sat).reduced();
        if sat_series.dim != d {
            return Err(Error::InternalCrossCheck(
                "saturation changed the Krull dimension".into(),
            ));
        }
        let sat_betti = graded_betti_koszul(&sat, field, Some(taylor_degree_bound(&sat)))?;
        let cm = sat_betti.depth() == d;
        if cm {
            // H^i(A) = H^i(A/H^0) = 0 for 1 <= i <= d-1, and a(A) =
            // a(A/H^0) = deg of the reduced series (Cohen-Macaulay case).
            let mut lengths = vec![BigInt::zero(); d];
            lengths[0] = h0_len.clone();
            (Some(true), Some(sat_series.rational_degree()), Some(lengths))
        } else {
            (Some(false), None, None)
        }
    };

    let buchsbaum;
    let buchsbaum_reason;
    if d == 0 {
        buchsbaum = Tri::Yes;
        buchsbaum_reason = "Artinian (Cohen-Macaulay)".to_string();
    } else {
        let nsat = sat.multiply_by_irrelevant();
        if !ideal.contains_ideal(&nsat) {
            buchsbaum = Tri::No;
            buchsbaum_reason = "𝔑·sat(I) ⊄ I, so the maximal ideal does not kill H^0".to_string();
        } else if h0_quotient_cm == Some(true) {
            buchsbaum = Tri::Yes;
            buchsbaum_reason =
                "𝔑·sat(I) ⊆ I and A/H^0 is Cohen-Macaulay of the same dimension".to_string();
        } else {
            buchsbaum = Tri::Unknown;
            buchsbaum_reason =
                "𝔑·sat(I) ⊆ I but A/H^0 is not Cohen-Macaulay; no criterion applies".to_string();
        }
    }

    let i_invariant = h_lengths.as_ref().map(|h| {
        let mut sum = BigInt::zero();
        for (i, hi) in h.iter().enumerate() {
            sum += binomial(d as i64 - 1, i as i64) * hi;
        }
        sum
    });

    let mut report = InvariantReport {
        source: SourceDesc::Ideal {
            variables: names.clone(),
            generators: ideal
                .gens()
                .iter()
                .map(|g| format_monomial(g, &names))
                .collect(),
        },
        characteristic: field.characteristic(),
        v,
        d,
        c,
        q,
        polynomial_ring: false,
        e,
        depth,
        reg,
        a_invariant,
        f_vector: None,
        h_vector: None,
        hilbert: series,
        cohomology: CohomologyData {
            table: None,
            h0_dims,
            h_lengths,
        },
        betti,
        i_invariant,
        cohen_macaulay: depth == d,
        buchsbaum,
        buchsbaum_reason,
        h0_quotient_cm,
        linear_resolution_degree: None,
        minimal_multiplicity: Tri::Unknown,
        minimal_multiplicity_degree: None,
    };
    report.linear_resolution_degree = report.betti.linear_degree();
    fill_minimal_multiplicity(&mut report);
    guard_minimal_multiplicity_vs_cm(&report)?;
    Ok(report)
}

/// The defining equality: `e = C(c+q-2, q-2) + Σ_{i=1}^{d-1} C(d-1, i-1)
/// h^i`. Polynomial rings count as minimal multiplicity of degree 1.
fn fill_minimal_multiplicity(report: &mut InvariantReport) {
    if report.polynomial_ring {
        report.minimal_multiplicity = Tri::Yes;
        report.minimal_multiplicity_degree = Some(1);
        return;
    }
    match report.buchsbaum {
        Tri::No => {
            report.minimal_multiplicity = Tri::No;
        }
        Tri::Unknown => {
            report.minimal_multiplicity = Tri::Unknown;
        }
        Tri::Yes => {
            if report.q < 2 {
                report.minimal_multiplicity = Tri::No;
                return;
            }
            match minimal_multiplicity_bound(report) {
                Some(bound) => {
                    if report.e == bound {
                        report.minimal_multiplicity = Tri::Yes;
                        report.minimal_multiplicity_degree = Some(report.q);
                    } else {
                        report.minimal_multiplicity = Tri::No;
                    }
                }
                None => report.minimal_multiplicity = Tri::Unknown,
            }
        }
    }
}

/// Right-hand side of the multiplicity lower bound, when all h^i are
/// known.
fn minimal_multiplicity_bound(report: &InvariantReport) -> Option<BigInt> {
    let h = report.cohomology.h_lengths.as_ref()?;
    let c = report.c as i64;
    let d = report.d as i64;
    let q = report.q as i64;
    let mut bound = binomial(c + q - 2, q - 2);
    for i in 1..d {
        bound += binomial(d - 1, i - 1) * &h[i as usize];
    }
    Some(bound)
}

/// Multiplicity lower bound for Buchsbaum algebras:
/// `e >= C(c+q-2, q-2) + Σ C(d-1, i-1) h^i`, with equality flagged, plus
/// the strict version at every smaller initial degree (`e > bound(q')`
/// for `2 <= q' < q`). For non-Buchsbaum inputs the evaluation is
/// informational only.
pub fn check_lower_bound(report: &InvariantReport) -> CheckResult {
    let applicable = report.buchsbaum == Tri::Yes
        && report.d >= 1
        && report.c >= 1
        && report.q >= 2
        && report.cohomology.h_lengths.is_some();
    match minimal_multiplicity_bound(report) {
        Some(bound) if applicable => {
            let mut verdict = match report.e.cmp(&bound) {
                std::cmp::Ordering::Equal => Verdict::Equality,
                std::cmp::Ordering::Greater => Verdict::Holds,
                std::cmp::Ordering::Less => Verdict::Fails,
            };
            let mut result = CheckResult::new("multiplicity-lower-bound", verdict)
                .with("e", &report.e)
                .with("bound", &bound);
            // Strictly above the bound for any smaller admissible degree.
            let h = report.cohomology.h_lengths.as_ref().unwrap();
            let (c, d) = (report.c as i64, report.d as i64);
            let cohomology_part: BigInt = (1..d)
                .map(|i| binomial(d - 1, i - 1) * &h[i as usize])
                .sum();
            for q_prime in 2..report.q as i64 {
                let smaller = binomial(c + q_prime - 2, q_prime - 2) + &cohomology_part;
                if report.e <= smaller {
                    verdict = Verdict::Fails;
                    result = result.with(
                        &format!("strict bound violated at degree {q_prime}"),
                        smaller,
                    );
                }
            }
            result.verdict = verdict;
            result
        }
        Some(bound) => CheckResult::new("multiplicity-lower-bound", Verdict::NotApplicable)
            .with("e", &report.e)
            .with("bound", bound)
            .noted("informational: preconditions not met (needs Buchsbaum, d,c >= 1, q >= 2)"),
        None => CheckResult::new("multiplicity-lower-bound", Verdict::NotApplicable)
            .noted("h^i lengths unknown"),
    }
}

/// Eisenbud-Goto linearity criterion for Buchsbaum algebras: a q-linear
/// resolution is equivalent to `H^i = [H^i]_{q-1-i}` for i < d together
/// with `[H^d]_n = 0` for n >= q-d (i.e. a <= q-d-1). Both sides are
/// computed independently and must agree.
pub fn check_eisenbud_goto(report: &InvariantReport) -> Result<CheckResult> {
    let name = "eisenbud-goto-linearity";
    if report.buchsbaum != Tri::Yes || report.polynomial_ring || report.q < 2 {
        return Ok(CheckResult::new(name, Verdict::NotApplicable)
            .noted("needs Buchsbaum with q >= 2"));
    }
    let q = report.q as i64;
    let d = report.d as i64;
    let side1 = report.betti.is_linear_of_degree(q);
    let side2 = match (&report.cohomology.table, report.a_invariant) {
        (Some(table), Some(a)) => {
            let mut ok = a <= q - d - 1;
            for i in 0..report.d {
                ok &= table.row(i).concentrated_in(q - 1 - i as i64);
            }
            Some(ok)
        }
        (None, Some(a)) => report.cohomology.h_lengths.as_ref().map(|_| {
            let h0_ok = report
                .cohomology
                .h0_dims
                .keys()
                .all(|&deg| deg as i64 == q - 1);
            h0_ok && a <= q - d - 1
        }),
        _ => None,
    };
    let Some(side2) = side2 else {
        return Ok(CheckResult::new(name, Verdict::Unknown).noted("cohomology not fully known"));
    };
    if side1 != side2 {
        return Err(Error::EquivalenceViolation(format!(
            "Eisenbud-Goto sides disagree: resolution-linear = {side1}, \
             cohomology-concentrated = {side2}; source {:?}, char {}",
            report.source, report.characteristic
        )));
    }
    Ok(CheckResult::new(name, if side1 { Verdict::Holds } else { Verdict::Fails })
        .with("q-linear resolution", side1)
        .with("concentrated cohomology with a <= q-d-1", side2))
}

/// Evaluates condition (3) of the minimal-multiplicity equivalences:
/// `H^i = [H^i]_{q-1-i}` for i < d and `[H^d]_n = 0` for n >= q-d-1.
fn condition_concentrated(report: &InvariantReport) -> Option<bool> {
    let q = report.q as i64;
    let d = report.d as i64;
    let a = report.a_invariant?;
    let top_ok = a <= q - d - 2;
    if let Some(table) = &report.cohomology.table {
        let mut ok = top_ok;
        for i in 0..report.d {
            if !table.row(i).concentrated_in(q - 1 - i as i64) {
                ok = false;
            }
        }
        Some(ok)
    } else {
        // Monomial route: needs all h^i known (A/H^0 Cohen-Macaulay), so
        // H^i = 0 for 1 <= i < d; H^0 must sit in degree q-1.
        report.cohomology.h_lengths.as_ref()?;
        let h0_ok = report
            .cohomology
            .h0_dims
            .keys()
            .all(|&deg| deg as i64 == q - 1);
        Some(top_ok && h0_ok)
    }
}

/// The four-way equivalence for minimal multiplicity of degree q:
/// (1) equality in the lower bound, (2) `a = q-d-2`, (3) concentrated
/// cohomology, (4) q-linear resolution with `Σ C(d,i) h^i =
/// C(reg+c-1, c-1)`. All four verdicts must be identical; when they hold,
/// `reg = q-1` is asserted as well.
pub fn check_main_equivalences(report: &InvariantReport) -> Result<CheckResult> {
    if report.buchsbaum != Tri::Yes || report.d < 1 || report.c < 1 || report.q < 2 {
        return Ok(
            CheckResult::new("minimal-multiplicity-equivalences", Verdict::NotApplicable)
                .noted("needs Buchsbaum with d, c >= 1 and q >= 2"),
        );
    }
    let q = report.q as i64;
    let d = report.d as i64;
    let c = report.c as i64;

    let cond1 = minimal_multiplicity_bound(report).map(|b| report.e == b);
    let cond2 = report.a_invariant.map(|a| a == q - d - 2);
    let cond3 = condition_concentrated(report);
    let cond4 = report.cohomology.h_lengths.as_ref().map(|h| {
        let linear = report.betti.is_linear_of_degree(q);
        let mut lhs = BigInt::zero();
        for (i, hi) in h.iter().enumerate() {
            lhs += binomial(d, i as i64) * hi;
        }
        let rhs = binomial(report.reg + c - 1, c - 1);
        linear && lhs == rhs
    });

    let (Some(c1), Some(c2), Some(c3), Some(c4)) = (cond1, cond2, cond3, cond4) else {
        return Ok(
            CheckResult::new("minimal-multiplicity-equivalences", Verdict::Unknown)
                .noted("not all invariants known for this route"),
        );
    };

    let mut result = CheckResult::new(
        "minimal-multiplicity-equivalences",
        if c1 { Verdict::Holds } else { Verdict::Fails },
    )
    .with("(1) bound equality", c1)
    .with("(2) a = q-d-2", c2)
    .with("a", report.a_invariant.unwrap())
    .with("q-d-2", q - d - 2)
    .with("(3) concentrated cohomology", c3)
    .with("(4) q-linear with Kamoi-Vogel equality", c4);

    if c1 != c2 || c1 != c3 || c1 != c4 {
        return Err(Error::EquivalenceViolation(format!(
            "minimal-multiplicity conditions disagree: (1)={c1} (2)={c2} (3)={c3} (4)={c4}; \
             source: {:?}, char {}",
            report.source, report.characteristic
        )));
    }
    if c1 {
        if report.reg != q - 1 {
            return Err(Error::EquivalenceViolation(format!(
                "minimal multiplicity holds but reg = {} != q-1 = {}",
                report.reg,
                q - 1
            )));
        }
        result = result.with("reg", report.reg).with("q-1", q - 1);
    }
    Ok(result)
}

/// Predicted Hilbert series of a minimal-multiplicity algebra (d >= 2)
/// from (c, d, q) and the lengths h^0..h^{d-1}.
pub fn predicted_hilbert_series(c: u64, d: u64, q: u64, h: &[BigInt]) -> Result<HilbertSeries> {
    if d < 2 {
        return Err(Error::InvalidInput(
            "the Hilbert-series formula needs d >= 2".into(),
        ));
    }
    let (ci, di, qi) = (c as i64, d as i64, q as i64);
    let mut coeffs = vec![BigInt::zero(); (q + d) as usize];
    for i in 0..qi {
        coeffs[i as usize] = binomial(ci + i - 1, i);
    }
    for i in qi..(qi + di) {
        let mut inner = BigInt::zero();
        for j in 0..=(qi + di - 1 - i) {
            let hj = h.get(j as usize).cloned().unwrap_or_else(BigInt::zero);
            inner += binomial(di, i + j - qi + 1) * hj;
        }
        let sign = if (i + qi - 1) % 2 == 0 { 1 } else { -1 };
        coeffs[i as usize] = BigInt::from(sign) * inner;
    }
    Ok(HilbertSeries {
        numerator: Poly::from_coeffs(coeffs),
        denom_pow: d as usize,
    })
}

/// Compares the predicted Hilbert series against the computed one for
/// minimal-multiplicity reports with d >= 2.
pub fn check_hilbert_prediction(report: &InvariantReport) -> CheckResult {
    if report.minimal_multiplicity != Tri::Yes || report.polynomial_ring {
        return CheckResult::new("hilbert-series-prediction", Verdict::NotApplicable)
            .noted("only evaluated on minimal-multiplicity instances");
    }
    if report.d < 2 {
        return CheckResult::new("hilbert-series-prediction", Verdict::NotApplicable)
            .noted("needs d >= 2");
    }
    let Some(h) = report.cohomology.h_lengths.as_ref() else {
        return CheckResult::new("hilbert-series-prediction", Verdict::Unknown)
            .noted("h^i lengths unknown");
    };
    let predicted =
        predicted_hilbert_series(report.c as u64, report.d as u64, report.q, h).unwrap();
    let agree = predicted.equals_series(&report.hilbert);
    CheckResult::new(
        "hilbert-series-prediction",
        if agree { Verdict::Equality } else { Verdict::Fails },
    )
    .with(
        "predicted numerator",
        format!("{:?}", predicted.numerator.coeffs()),
    )
    .with(
        "computed numerator",
        format!("{:?}", report.hilbert.numerator.coeffs()),
    )
}

/// Hoa-Miyazaki: `reg <= a + d + 1` for Buchsbaum algebras, i.e. reg is
/// `a+d` or `a+d+1`; the case is flagged. The corollary `a >= q-d-2` is
/// verified alongside.
pub fn check_hoa_miyazaki(report: &InvariantReport) -> CheckResult {
    if report.buchsbaum != Tri::Yes {
        return CheckResult::new("hoa-miyazaki", Verdict::NotApplicable).noted("needs Buchsbaum");
    }
    let Some(a) = report.a_invariant else {
        return CheckResult::new("hoa-miyazaki", Verdict::Unknown).noted("a-invariant unknown");
    };
    let diff = report.reg - a - report.d as i64;
    let a_floor = report.q as i64 - report.d as i64 - 2;
    let corollary_ok = a >= a_floor;
    // A minimal-multiplicity algebra (degree q >= 2) attains the upper
    // case: reg = a + d + 1.
    let minimal_case_ok = report.minimal_multiplicity != Tri::Yes
        || report.polynomial_ring
        || diff == 1;
    let verdict = if (diff == 0 || diff == 1) && corollary_ok && minimal_case_ok {
        Verdict::Holds
    } else {
        Verdict::Fails
    };
    CheckResult::new("hoa-miyazaki", verdict)
        .with("reg", report.reg)
        .with("a", a)
        .with("d", report.d)
        .with("reg - a - d", diff)
        .with("a >= q-d-2", corollary_ok)
        .noted(if diff == 1 { "+1 case" } else { "+0 case" })
}

/// Kamoi-Vogel: `Σ_{i=0}^{d-1} C(d,i) h^i <= C(reg+c-1, c-1)` for
/// Buchsbaum algebras; equality flagged.
pub fn check_kamoi_vogel(report: &InvariantReport) -> CheckResult {
    if report.buchsbaum != Tri::Yes {
        return CheckResult::new("kamoi-vogel", Verdict::NotApplicable).noted("needs Buchsbaum");
    }
    let Some(h) = report.cohomology.h_lengths.as_ref() else {
        return CheckResult::new("kamoi-vogel", Verdict::Unknown).noted("h^i lengths unknown");
    };
    let d = report.d as i64;
    let c = report.c as i64;
    let mut lhs = BigInt::zero();
    for (i, hi) in h.iter().enumerate() {
        lhs += binomial(d, i as i64) * hi;
    }
    let rhs = binomial(report.reg + c - 1, c - 1);
    let verdict = match lhs.cmp(&rhs) {
        std::cmp::Ordering::Equal => Verdict::Equality,
        std::cmp::Ordering::Less => Verdict::Holds,
        std::cmp::Ordering::Greater => Verdict::Fails,
    };
    CheckResult::new("kamoi-vogel", verdict)
        .with("Σ C(d,i) h^i", lhs)
        .with("C(reg+c-1, c-1)", rhs)
}

/// The h-vector linearity criterion for Buchsbaum Stanley-Reisner rings
/// with 2 <= q <= d, h := dim H^{q-1}: (1) q-linear resolution, (2) the
/// closed-form h-vector pattern, (3) `e = C(c+q-1,q-1) - h C(d-1,q-1)` and
/// `I(A) = h C(d-1,q-1)`. The three verdicts must agree; when they hold,
/// `0 <= h <= h_max` and vanishing outside {q-1, d} are asserted.
pub fn check_linear_sr(report: &InvariantReport) -> Result<CheckResult> {
    let name = "h-vector-linearity";
    let Some(hvec) = report.h_vector.as_ref() else {
        return Ok(CheckResult::new(name, Verdict::NotApplicable)
            .noted("only defined for Stanley-Reisner input"));
    };
    if report.buchsbaum != Tri::Yes || report.q < 2 || report.q as i64 > report.d as i64 {
        return Ok(CheckResult::new(name, Verdict::NotApplicable)
            .noted("needs Buchsbaum with 2 <= q <= d"));
    }
    let q = report.q as i64;
    let d = report.d as i64;
    let c = report.c as i64;
    let h = report
        .h_length(report.q as usize - 1)
        .expect("Buchsbaum SR report has all h^i");

    let cond1 = report.betti.is_linear_of_degree(q);

    let mut pattern = Vec::with_capacity(d as usize + 1);
    for k in 0..=d {
        if k <= q - 1 {
            pattern.push(binomial(c + k - 1, k));
        } else {
            let sign = if (k - q + 1) % 2 == 0 { 1 } else { -1 };
            pattern.push(BigInt::from(sign) * binomial(d, k) * &h);
        }
    }
    let actual: Vec<BigInt> = hvec.iter().map(|&x| BigInt::from(x)).collect();
    let cond2 = actual == pattern;

    let e_formula = binomial(c + q - 1, q - 1) - &h * binomial(d - 1, q - 1);
    let i_formula = &h * binomial(d - 1, q - 1);
    let cond3 = report.e == e_formula
        && report.i_invariant.as_ref() == Some(&i_formula);

    if cond1 != cond2 || cond1 != cond3 {
        return Err(Error::EquivalenceViolation(format!(
            "h-vector linearity conditions disagree: (1)={cond1} (2)={cond2} (3)={cond3}; \
             source: {:?}, char {}",
            report.source, report.characteristic
        )));
    }
    let mut result = CheckResult::new(name, if cond1 { Verdict::Holds } else { Verdict::Fails })
        .with("(1) q-linear", cond1)
        .with("(2) h-vector pattern", cond2)
        .with("(3) e and I(A) formulas", cond3)
        .with("h = dim H^{q-1}", &h)
        .with("e", &report.e)
        .with("e formula", e_formula)
        .with("I(A) formula", i_formula);
    if cond1 {
        let hm = h_max(report.c as u64, report.d as u64, report.q)?;
        let h_rat = BigRational::from(h.clone());
        if h_rat < BigRational::zero() || h_rat > hm {
            return Err(Error::EquivalenceViolation(format!(
                "h = {h} outside [0, h_max = {hm}]"
            )));
        }
        for i in 0..report.d {
            if i as i64 != q - 1 {
                let hi = report.h_length(i).unwrap();
                if !hi.is_zero() {
                    return Err(Error::EquivalenceViolation(format!(
                        "linear resolution with H^{i} != 0 (outside q-1, d)"
                    )));
                }
            }
        }
        result = result.with("h_max", hm);
    }
    Ok(result)
}

/// The Stanley-Reisner minimal-multiplicity equivalences: the multiplicity
/// bound `e >= (c+d)/d C(c+q-2, q-2)` always holds for Buchsbaum rings, and
/// six conditions are equivalent: (1) equality, (2) minimal multiplicity,
/// (3) q-linear with maximal cohomology h_max, (4) all vertex links with
/// (q-1)-linear resolution, (5) the h-vector pattern with h = h_max,
/// (6) the Alexander dual ring has a pure almost-linear resolution with
/// top Betti number h_max and a-invariant 0.
pub fn check_srmm(
    complex: &SimplicialComplex,
    field: FieldSpec,
    report: &InvariantReport,
) -> Result<CheckResult> {
    let name = "sr-minimal-multiplicity";
    if report.buchsbaum != Tri::Yes || report.q < 2 || report.q as i64 > report.d as i64 {
        return Ok(CheckResult::new(name, Verdict::NotApplicable)
            .noted("needs Buchsbaum with 2 <= q <= d"));
    }
    let q = report.q;
    let d = report.d as u64;
    let c = report.c as u64;
    let hm = h_max(c, d, q)?;

    let e_rat = BigRational::from(report.e.clone());
    let bound = BigRational::new(
        BigInt::from(c + d) * binomial(c as i64 + q as i64 - 2, q as i64 - 2),
        BigInt::from(d),
    );
    if e_rat < bound {
        return Err(Error::EquivalenceViolation(format!(
            "multiplicity bound fails on a Buchsbaum complex: e = {} < {bound}",
            report.e
        )));
    }

    let cond1 = e_rat == bound;
    let cond2 = report.minimal_multiplicity == Tri::Yes;
    let h_qm1 = report
        .h_length(q as usize - 1)
        .expect("Buchsbaum SR report has all h^i");
    let cond3 = report.betti.is_linear_of_degree(q as i64)
        && BigRational::from(h_qm1.clone()) == hm;

    // (4) every vertex link has a (q-1)-linear resolution.
    let mut cond4 = true;
    for v in crate::complex::mask_to_vertices(complex.support_mask()) {
        let (link, _) = complex.link(1u64 << v).unwrap();
        let link_betti = betti_table_sr(&link, field)?;
        if !link_betti.is_linear_of_degree(q as i64 - 1) {
            cond4 = false;
            break;
        }
    }

    // (5) h-vector pattern with h = h_max (so h_max must be an integer).
    let cond5 = if hm.is_integer() {
        let h = hm.to_integer();
        let hvec = report.h_vector.as_ref().unwrap();
        let mut ok = true;
        for (k, &actual) in hvec.iter().enumerate() {
            let k = k as i64;
            let expected = if k <= q as i64 - 1 {
                binomial(c as i64 + k - 1, k)
            } else {
                let sign = if (k - q as i64 + 1) % 2 == 0 { 1 } else { -1 };
                BigInt::from(sign) * binomial(d as i64, k) * &h
            };
            if BigInt::from(actual) != expected {
                ok = false;
                break;
            }
        }
        ok
    } else {
        false
    };

    // (6) pure almost-linear dual resolution with β*_q = h_max and
    // a(k[Δ*]) = 0. For small ground sets the dual is analyzed directly;
    // beyond that its Betti table comes from the primal link form (the
    // dual's face poset explodes long before the primal's does) and its
    // a-invariant from [H^{d*}]_0 = dim H̃_{d*-1}(Δ*), the only degree-0
    // contribution.
    let (dual_betti, dual_a_zero, dual_route) = if report.v <= 10 {
        let dual = complex.alexander_dual()?;
        let table = betti_table_sr(&dual, field)?;
        let d_star = dual.ring_dim();
        let dual_dims = reduced_homology_dims(&dual, field);
        let a_zero = dual_dims.get(d_star).copied().unwrap_or(0) != 0;
        (table, a_zero, "direct")
    } else {
        let table = crate::homology::dual_betti_via_links(complex, field);
        // Alexander duality: H̃_{d*-1}(Δ*) = H̃_{q-2}(Δ) with d* = v - q.
        let dims = reduced_homology_dims(complex, field);
        let idx = q as usize - 1; // H̃_{q-2}
        let a_zero = dims.get(idx).copied().unwrap_or(0) != 0;
        (table, a_zero, "via-links")
    };
    let cond6 = {
        let mut ok = dual_betti.projective_dimension() == q as usize;
        for i in 1..q {
            let row = dual_betti.row(i as usize);
            ok &= row.len() == 1 && row[0].0 == (c + i - 1) as i64;
        }
        let top_row = dual_betti.row(q as usize);
        ok &= top_row.len() == 1
            && top_row[0].0 == (c + d) as i64
            && BigRational::from(BigInt::from(top_row[0].1)) == hm;
        ok && dual_a_zero
    };

    let verdicts = [cond1, cond2, cond3, cond4, cond5, cond6];
    if verdicts.iter().any(|&x| x != cond1) {
        return Err(Error::EquivalenceViolation(format!(
            "Stanley-Reisner minimal-multiplicity conditions disagree: {verdicts:?}; \
             source: {:?}, char {}",
            report.source, report.characteristic
        )));
    }
    Ok(CheckResult::new(
        name,
        if cond1 { Verdict::Holds } else { Verdict::Fails },
    )
    .with("e", &report.e)
    .with("(c+d)/d · C(c+q-2, q-2)", bound)
    .with("h_max", hm)
    .with("(1) e equality", cond1)
    .with("(2) minimal multiplicity", cond2)
    .with("(3) q-linear with h = h_max", cond3)
    .with("(4) links (q-1)-linear", cond4)
    .with("(5) h-vector with h = h_max", cond5)
    .with("(6) dual pure almost-linear, a = 0", cond6)
    .with("(6) dual route", dual_route))
}

/// Small multiplicity: `q <= e+1` for Buchsbaum algebras; the boundary
/// case q = e+1 forces c = 1 and minimal multiplicity of degree e+1 with
/// vanishing intermediate cohomology; non-Cohen-Macaulay Buchsbaum
/// algebras with e <= 2 have minimal multiplicity of degree <= 3 in one of
/// three patterns.
pub fn check_small_multiplicity(report: &InvariantReport) -> CheckResult {
    let name = "small-multiplicity";
    if report.buchsbaum != Tri::Yes {
        return CheckResult::new(name, Verdict::NotApplicable).noted("needs Buchsbaum");
    }
    let e = &report.e;
    let q = BigInt::from(report.q);
    let mut ok = q <= e + BigInt::one();
    let mut result = CheckResult::new(name, Verdict::Holds)
        .with("q", &q)
        .with("e+1", e + BigInt::one());

    // The boundary case forces c = 1 only for e >= 2 (at e = 1 the ideal
    // 𝔑·(X_1..X_c) has q = e+1 = 2 with any codimension).
    if !report.polynomial_ring
        && q == e + BigInt::one()
        && *e >= BigInt::from(2)
        && !report.cohen_macaulay
        && report.d >= 2
    {
        let c_ok = report.c == 1;
        let mm_ok = report.minimal_multiplicity == Tri::Yes
            && report.minimal_multiplicity_degree == Some(report.q);
        let h_ok = match report.cohomology.h_lengths.as_ref() {
            Some(h) => h.iter().skip(1).all(Zero::is_zero),
            None => false,
        };
        ok &= c_ok && mm_ok && h_ok;
        result = result
            .with("q = e+1 case: c", report.c)
            .with("q = e+1 case: minimal multiplicity", mm_ok)
            .with("q = e+1 case: h^1..h^{d-1} = 0", h_ok);
    }

    if !report.cohen_macaulay && *e <= BigInt::from(2) {
        let mm_ok = report.minimal_multiplicity == Tri::Yes
            && report.minimal_multiplicity_degree.is_some_and(|m| m <= 3);
        let h1 = report.h_length(1);
        let case = if *e == BigInt::one() {
            // degree 2, depth 0
            let good = report.q == 2 && report.depth == 0;
            ("e=1: degree 2, depth 0", good)
        } else if report.q == 2 && report.depth > 0 {
            let good = report.c == report.d
                && (report.d < 2 || h1 == Some(BigInt::one()));
            ("e=2, q=2, depth>0: c=d and h^1=1", good)
        } else if report.q == 2 && report.depth == 0 {
            let good = report.d < 2 || h1 == Some(BigInt::one());
            ("e=2, q=2, depth=0: h^1=1", good)
        } else if report.q == 3 && report.depth == 0 {
            let good = report.c == 1 && report.h0_quotient_cm == Some(true);
            ("e=2, q=3, depth=0: c=1 and A/H^0 CM", good)
        } else {
            ("e<=2 outside the classified patterns", false)
        };
        ok &= mm_ok && case.1;
        result = result
            .with("e<=2 pattern", case.0)
            .with("pattern conditions", case.1)
            .with("minimal multiplicity of degree <= 3", mm_ok);
    }

    if !ok {
        result.verdict = Verdict::Fails;
    }
    result
}

/// Exercises the non-zero-divisor quotient biconditional on the monomial
/// route: when some variable z is a non-zero-divisor on a
/// minimal-multiplicity ring, A/zA has minimal multiplicity iff
/// `H^{d-1}(A) = 0`. The report's h^{d-1} is always recorded.
pub fn check_nzd_quotient(ideal: &MonomialIdeal, report: &InvariantReport) -> Result<CheckResult> {
    let name = "linear-nzd-quotient";
    let h_top = (report.d >= 1)
        .then(|| report.h_length(report.d - 1))
        .flatten();
    let mut result = CheckResult::new(name, Verdict::NotApplicable).with(
        "h^{d-1}",
        h_top
            .as_ref()
            .map_or("unknown".to_string(), |x| x.to_string()),
    );
    if report.minimal_multiplicity != Tri::Yes || report.polynomial_ring {
        return Ok(result.noted("only evaluated on minimal-multiplicity instances"));
    }
    let nzd = (0..ideal.vars()).find(|&z| {
        let m = Monomial::variable(ideal.vars(), z);
        ideal.colon(&m) == *ideal
    });
    let Some(z) = nzd else {
        return Ok(result.noted("no variable is a non-zero-divisor on this quotient"));
    };
    if report.d < 2 {
        return Ok(result.noted("quotient would be Artinian; needs d >= 2"));
    }
    // S/(I + (z)) as an ideal in one fewer variable.
    let reduced_gens: Vec<Monomial> = ideal
        .gens()
        .iter()
        .filter(|g| g.exps()[z] == 0)
        .map(|g| {
            let exps: Vec<u32> = g
                .exps()
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != z)
                .map(|(_, &e)| e)
                .collect();
            Monomial::new(exps)
        })
        .collect();
    let quotient = MonomialIdeal::from_gens(ideal.vars() - 1, reduced_gens)?;
    let field = FieldSpec::from_char(report.characteristic)?;
    let qreport = analyze_monomial(&quotient, field, None)?;
    let h_top = h_top.expect("minimal multiplicity implies h lengths known");
    let lhs = qreport.minimal_multiplicity == Tri::Yes;
    let rhs = h_top.is_zero();
    result = result
        .with("quotient minimal multiplicity", lhs)
        .with("H^{d-1}(A) = 0", rhs);
    if lhs != rhs {
        return Err(Error::EquivalenceViolation(format!(
            "non-zero-divisor quotient biconditional fails: quotient mm = {lhs}, \
             H^(d-1) vanishing = {rhs}; source {:?}",
            report.source
        )));
    }
    result.verdict = Verdict::Holds;
    Ok(result)
}

/// All checks applicable to a Stanley-Reisner report, in a fixed order.
pub fn run_checks_sr(
    complex: &SimplicialComplex,
    field: FieldSpec,
    report: &InvariantReport,
) -> Result<Vec<CheckResult>> {
    Ok(vec![
        check_lower_bound(report),
        check_main_equivalences(report)?,
        check_eisenbud_goto(report)?,
        check_hoa_miyazaki(report),
        check_kamoi_vogel(report),
        check_hilbert_prediction(report),
        check_small_multiplicity(report),
        check_linear_sr(report)?,
        check_srmm(complex, field, report)?,
    ])
}

/// All checks applicable to a monomial-quotient report, in a fixed order.
pub fn run_checks_monomial(
    ideal: &MonomialIdeal,
    report: &InvariantReport,
) -> Result<Vec<CheckResult>> {
    Ok(vec![
        check_lower_bound(report),
        check_main_equivalences(report)?,
        check_eisenbud_goto(report)?,
        check_hoa_miyazaki(report),
        check_kamoi_vogel(report),
        check_hilbert_prediction(report),
        check_small_multiplicity(report),
        check_nzd_quotient(ideal, report)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hanano() -> SimplicialComplex {
        SimplicialComplex::from_vertex_lists(
            5,
            &[
                vec![0, 1, 2],
                vec![0, 2, 3],
                vec![0, 3, 4],
                vec![1, 2, 4],
                vec![1, 3, 4],
            ],
        )
        .unwrap()
    }

    fn two_disjoint_edges() -> SimplicialComplex {
        SimplicialComplex::from_vertex_lists(4, &[vec![0, 2], vec![1, 3]]).unwrap()
    }

    fn four_cycle() -> SimplicialComplex {
        SimplicialComplex::from_vertex_lists(4, &[vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]])
            .unwrap()
    }

    fn goto_ideal(c: usize, d: usize, q: u32) -> MonomialIdeal {
        let v = c + d;
        let x = MonomialIdeal::from_gens(
            v,
            (0..c).map(|i| Monomial::variable(v, i)).collect(),
        )
        .unwrap();
        x.power(q - 1).multiply_by_irrelevant()
    }

    #[test]
    fn cm_and_buchsbaum_flags() {
        let f = FieldSpec::Rational;
        assert!(is_cohen_macaulay_sr(&four_cycle(), f));
        assert!(!is_cohen_macaulay_sr(&two_disjoint_edges(), f));
        let simplex = SimplicialComplex::from_vertex_lists(3, &[vec![0, 1, 2]]).unwrap();
        assert!(is_cohen_macaulay_sr(&simplex, f));

        assert!(is_buchsbaum_sr(&two_disjoint_edges(), f));
        assert!(is_buchsbaum_sr(&hanano(), f));
        let simplex2 = SimplicialComplex::from_vertex_lists(3, &[vec![0, 1, 2]]).unwrap();
        let point = SimplicialComplex::from_vertex_lists(1, &[vec![0]]).unwrap();
        let edge = SimplicialComplex::from_vertex_lists(2, &[vec![0, 1]]).unwrap();
        let nonpure = edge.disjoint_union(&point);
        assert!(!is_buchsbaum_sr(&nonpure, f));
        assert!(is_buchsbaum_sr(&simplex2.disjoint_union(&simplex2), f));
    }

    #[test]
    fn h_max_examples() {
        assert_eq!(h_max(2, 3, 3).unwrap(), BigRational::from(BigInt::from(1)));
        // q = 2: single factors c/d.
        assert_eq!(
            h_max(3, 4, 2).unwrap(),
            BigRational::new(BigInt::from(3), BigInt::from(4))
        );
        // c = d-q+2 telescopes to 1.
        for (d, q) in [(3u64, 2u64), (4, 3), (5, 4), (4, 2)] {
            let c = d - q + 2;
            assert_eq!(h_max(c, d, q).unwrap(), BigRational::from(BigInt::from(1)));
        }
        assert!(h_max(0, 3, 2).is_err());
        assert!(h_max(2, 3, 4).is_err());
    }

    #[test]
    fn hanano_report() {
        let r = analyze_sr(&hanano(), FieldSpec::Rational).unwrap();
        assert_eq!((r.v, r.d, r.c), (5, 3, 2));
        assert_eq!(r.q, 3);
        assert_eq!(r.e, BigInt::from(5));
        assert_eq!(r.depth, 2);
        assert_eq!(r.reg, 2);
        assert_eq!(r.a_invariant, Some(-2));
        assert_eq!(r.f_vector.as_deref(), Some(&[1, 5, 10, 5][..]));
        assert_eq!(r.h_vector.as_deref(), Some(&[1, 2, 3, -1][..]));
        assert_eq!(r.i_invariant, Some(BigInt::from(1)));
        assert!(!r.cohen_macaulay);
        assert_eq!(r.buchsbaum, Tri::Yes);
        assert_eq!(r.linear_resolution_degree, Some(3));
        assert_eq!(r.minimal_multiplicity, Tri::Yes);
        assert_eq!(r.minimal_multiplicity_degree, Some(3));
        assert_eq!(r.h_length(1), Some(BigInt::zero()));
        assert_eq!(r.h_length(2), Some(BigInt::one()));
    }

    #[test]
    fn hanano_checks() {
        let c = hanano();
        let r = analyze_sr(&c, FieldSpec::Rational).unwrap();
        let checks = run_checks_sr(&c, FieldSpec::Rational, &r).unwrap();
        let by_name = |n: &str| checks.iter().find(|c| c.name == n).unwrap().clone();

        // 5 = C(3,1) + C(2,1)·1: equality.
        assert_eq!(by_name("multiplicity-lower-bound").verdict, Verdict::Equality);
        assert_eq!(
            by_name("minimal-multiplicity-equivalences").verdict,
            Verdict::Holds
        );
        // 2 = (-2) + 3 + 1: the +1 case.
        let hm = by_name("hoa-miyazaki");
        assert_eq!(hm.verdict, Verdict::Holds);
        assert_eq!(hm.note.as_deref(), Some("+1 case"));
        // 3 = 3.
        assert_eq!(by_name("kamoi-vogel").verdict, Verdict::Equality);
        assert_eq!(by_name("hilbert-series-prediction").verdict, Verdict::Equality);
        assert_eq!(by_name("small-multiplicity").verdict, Verdict::Holds);
        assert_eq!(by_name("h-vector-linearity").verdict, Verdict::Holds);
        assert_eq!(by_name("sr-minimal-multiplicity").verdict, Verdict::Holds);
    }

    #[test]
    fn two_edges_report_and_checks() {
        let c = two_disjoint_edges();
        let r = analyze_sr(&c, FieldSpec::Rational).unwrap();
        assert_eq!((r.d, r.c, r.q), (2, 2, 2));
        assert_eq!(r.e, BigInt::from(2));
        assert_eq!(r.h_length(1), Some(BigInt::one()));
        assert_eq!(r.i_invariant, Some(BigInt::one()));
        assert_eq!(r.reg, 1);
        assert_eq!(r.minimal_multiplicity, Tri::Yes);
        assert_eq!(r.minimal_multiplicity_degree, Some(2));

        let checks = run_checks_sr(&c, FieldSpec::Rational, &r).unwrap();
        let by_name = |n: &str| checks.iter().find(|c| c.name == n).unwrap().clone();
        // 2 = C(2,0) + C(1,0)·1.
        assert_eq!(by_name("multiplicity-lower-bound").verdict, Verdict::Equality);
        assert_eq!(by_name("h-vector-linearity").verdict, Verdict::Holds);
        assert_eq!(by_name("sr-minimal-multiplicity").verdict, Verdict::Holds);
        assert_eq!(by_name("small-multiplicity").verdict, Verdict::Holds);
    }

    #[test]
    fn four_cycle_is_cm_not_minimal() {
        let c = four_cycle();
        let r = analyze_sr(&c, FieldSpec::Rational).unwrap();
        assert!(r.cohen_macaulay);
        assert_eq!(r.buchsbaum, Tri::Yes);
        assert_eq!(r.minimal_multiplicity, Tri::No);
        assert_eq!(r.a_invariant, Some(0));
        // Complete intersection of two quadrics: reg = a + d = 2.
        assert_eq!(r.reg, 2);

        let checks = run_checks_sr(&c, FieldSpec::Rational, &r).unwrap();
        let by_name = |n: &str| checks.iter().find(|c| c.name == n).unwrap().clone();
        // All four conditions fail consistently: a = 0 != q-d-2 = -2.
        assert_eq!(
            by_name("minimal-multiplicity-equivalences").verdict,
            Verdict::Fails
        );
        let hm = by_name("hoa-miyazaki");
        assert_eq!(hm.verdict, Verdict::Holds);
        assert_eq!(hm.note.as_deref(), Some("+0 case"));
        // CM: all h^i = 0, strict inequality.
        assert_eq!(by_name("kamoi-vogel").verdict, Verdict::Holds);
        assert_eq!(by_name("h-vector-linearity").verdict, Verdict::Fails);
        assert_eq!(by_name("sr-minimal-multiplicity").verdict, Verdict::Fails);
    }

    #[test]
    fn polynomial_ring_report() {
        let simplex = SimplicialComplex::from_vertex_lists(3, &[vec![0, 1, 2]]).unwrap();
        let r = analyze_sr(&simplex, FieldSpec::Rational).unwrap();
        assert!(r.polynomial_ring);
        assert_eq!(r.q, 1);
        assert_eq!(r.reg, 0);
        assert!(r.cohen_macaulay);
        assert_eq!(r.minimal_multiplicity, Tri::Yes);
        assert_eq!(r.minimal_multiplicity_degree, Some(1));
        assert_eq!(r.e, BigInt::one());
    }

    #[test]
    fn goto_family_report() {
        // 𝔑·(X1,X2)^2 with c=2, d=2, q=3: e = C(3,1) = 3, h^0 = C(3,2) = 3,
        // depth 0, Buchsbaum, minimal multiplicity of degree 3.
        let i = goto_ideal(2, 2, 3);
        let r = analyze_monomial(&i, FieldSpec::Rational, None).unwrap();
        assert_eq!((r.v, r.d, r.c, r.q), (4, 2, 2, 3));
        assert_eq!(r.e, BigInt::from(3));
        assert_eq!(r.h0_length(), BigInt::from(3));
        assert_eq!(r.depth, 0);
        assert_eq!(r.buchsbaum, Tri::Yes);
        assert_eq!(r.minimal_multiplicity, Tri::Yes);
        assert_eq!(r.minimal_multiplicity_degree, Some(3));
        assert_eq!(r.reg, 2);
        assert_eq!(r.a_invariant, Some(3 - 2 - 2));
        assert_eq!(r.linear_resolution_degree, Some(3));

        let checks = run_checks_monomial(&i, &r).unwrap();
        let by_name = |n: &str| checks.iter().find(|c| c.name == n).unwrap().clone();
        assert_eq!(
            by_name("minimal-multiplicity-equivalences").verdict,
            Verdict::Holds
        );
        // C(2,0)·3 = 3 = C(3,1).
        assert_eq!(by_name("kamoi-vogel").verdict, Verdict::Equality);
        assert_eq!(by_name("hilbert-series-prediction").verdict, Verdict::Equality);
        // No variable is a non-zero-divisor at depth 0.
        assert_eq!(by_name("linear-nzd-quotient").verdict, Verdict::NotApplicable);
    }

    #[test]
    fn non_buchsbaum_family_report() {
        // X0·(X0,X1,X2)^2 (d=2, q=3): Buchsbaum fails via 𝔑·sat ⊄ I; e=1.
        let v = 3;
        let x0 = MonomialIdeal::from_gens(v, vec![Monomial::variable(v, 0)]).unwrap();
        let i = x0.multiply(&MonomialIdeal::irrelevant(v).power(2));
        let r = analyze_monomial(&i, FieldSpec::Rational, None).unwrap();
        assert_eq!(r.buchsbaum, Tri::No);
        assert_eq!(r.e, BigInt::one());
        assert_eq!(r.minimal_multiplicity, Tri::No);
        assert_eq!((r.d, r.c, r.q), (2, 1, 3));
        // A/H^0 is a polynomial ring, so the h-table is known anyway.
        assert_eq!(r.h_length(1), Some(BigInt::zero()));

        // Informational bound evaluation: 1 < 2 (the Buchsbaum hypothesis
        // is necessary).
        let lb = check_lower_bound(&r);
        assert_eq!(lb.verdict, Verdict::NotApplicable);
        let e_val = lb.evidence.iter().find(|(l, _)| l == "e").unwrap();
        let b_val = lb.evidence.iter().find(|(l, _)| l == "bound").unwrap();
        assert_eq!(e_val.1, "1");
        assert_eq!(b_val.1, "2");
    }

    #[test]
    fn corrected_small_example_report() {
        // Y^2·𝔑 in k[X1, X2, Y] (d = 2): e = 2, q = 3, depth 0, Buchsbaum,
        // minimal multiplicity of degree 3 = e+1, c = 1.
        let v = 3;
        let y2 = MonomialIdeal::from_exponents(v, vec![vec![0, 0, 2]]).unwrap();
        let i = y2.multiply_by_irrelevant();
        let r = analyze_monomial(&i, FieldSpec::Rational, None).unwrap();
        assert_eq!((r.d, r.c, r.q), (2, 1, 3));
        assert_eq!(r.e, BigInt::from(2));
        assert_eq!(r.depth, 0);
        assert_eq!(r.buchsbaum, Tri::Yes);
        assert_eq!(r.minimal_multiplicity, Tri::Yes);
        assert_eq!(r.minimal_multiplicity_degree, Some(3));

        let sm = check_small_multiplicity(&r);
        assert_eq!(sm.verdict, Verdict::Holds);
        assert!(sm
            .evidence
            .iter()
            .any(|(l, v)| l == "e<=2 pattern" && v.contains("q=3")));
    }

    #[test]
    fn two_disjoint_triangles_hit_the_plus_one_case() {
        let triangle = SimplicialComplex::from_vertex_lists(3, &[vec![0, 1, 2]]).unwrap();
        let c = triangle.disjoint_union(&triangle);
        let r = analyze_sr(&c, FieldSpec::Rational).unwrap();
        assert_eq!(r.minimal_multiplicity, Tri::Yes);
        let hm = check_hoa_miyazaki(&r);
        assert_eq!(hm.verdict, Verdict::Holds);
        assert_eq!(hm.note.as_deref(), Some("+1 case"));
    }

    #[test]
    fn eisenbud_goto_verdicts() {
        let r = analyze_sr(&hanano(), FieldSpec::Rational).unwrap();
        let eg = check_eisenbud_goto(&r).unwrap();
        assert_eq!(eg.verdict, Verdict::Holds);

        let r = analyze_sr(&four_cycle(), FieldSpec::Rational).unwrap();
        let eg = check_eisenbud_goto(&r).unwrap();
        assert_eq!(eg.verdict, Verdict::Fails);

        // Monomial route: the depth-zero family is q-linear.
        let i = goto_ideal(2, 2, 3);
        let r = analyze_monomial(&i, FieldSpec::Rational, None).unwrap();
        let eg = check_eisenbud_goto(&r).unwrap();
        assert_eq!(eg.verdict, Verdict::Holds);
    }

    #[test]
    fn predicted_series_examples() {
        // hanano: c=2, d=3, q=3, h = (0,0,1) -> 1 + 2t + 3t^2 - t^3.
        let h = vec![BigInt::zero(), BigInt::zero(), BigInt::one()];
        let p = predicted_hilbert_series(2, 3, 3, &h).unwrap();
        assert_eq!(
            p.numerator.coeffs(),
            &[
                BigInt::from(1),
                BigInt::from(2),
                BigInt::from(3),
                BigInt::from(-1)
            ]
        );

        // two disjoint edges: c=2, d=2, q=2, h = (0,1) -> 1 + 2t - t^2.
        let h = vec![BigInt::zero(), BigInt::one()];
        let p = predicted_hilbert_series(2, 2, 2, &h).unwrap();
        assert_eq!(
            p.numerator.coeffs(),
            &[BigInt::from(1), BigInt::from(2), BigInt::from(-1)]
        );

        assert!(predicted_hilbert_series(2, 1, 2, &[BigInt::zero()]).is_err());
    }

    #[test]
    fn exmulti2_item1_report() {
        // (X1 Y, ..., Xd Y, Y^2) = 𝔑·(Y) at d = 2: e = 1, q = 2, depth 0.
        let v = 3;
        let y = MonomialIdeal::from_exponents(v, vec![vec![0, 0, 1]]).unwrap();
        let i = y.multiply_by_irrelevant();
        let r = analyze_monomial(&i, FieldSpec::Rational, None).unwrap();
        assert_eq!(r.e, BigInt::one());
        assert_eq!(r.q, 2);
        assert_eq!(r.depth, 0);
        assert_eq!(r.d, 2);
        assert_eq!(r.buchsbaum, Tri::Yes);
        assert_eq!(r.minimal_multiplicity_degree, Some(2));
        let sm = check_small_multiplicity(&r);
        assert_eq!(sm.verdict, Verdict::Holds);
        assert!(sm
            .evidence
            .iter()
            .any(|(l, v)| l == "e<=2 pattern" && v.contains("e=1")));
    }
}
