//! The golden verification suite: exercises the example families, the
//! exhaustive theorem sweeps on small pure complexes, the cross-oracle
//! equalities, the negative controls, the documented deviation in the
//! two-generator small-multiplicity example, and the census
//! reproduction. Each criterion reports pass/fail with exact evidence.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::One;

use crate::complex::{enumerate_pure_complexes, SimplicialComplex};
use crate::families::{self, FamilySpec, Generated};
use crate::hilbert::hilbert_series;
use crate::homology::{betti_table_sr, reduced_homology_dims};
use crate::invariants::{
    analyze_sr, check_hilbert_prediction, check_small_multiplicity, run_checks_sr, InvariantReport,
    Tri, Verdict,
};
use crate::io::{full_report, golden_mismatches, ParsedInput};
use crate::linalg::FieldSpec;
use crate::monomial::{complex_to_ideal, graded_betti_koszul, MonomialIdeal};
use crate::search::{census, hunt_kamoi_vogel_equality, CensusFilters};
use crate::{binomial, Result};

/// Outcome of one verification criterion.
#[derive(Debug, Clone)]
pub struct CriterionOutcome {
    pub id: usize,
    pub name: String,
    pub passed: bool,
    /// Set for the documented deviation (reported, not a failure).
    pub deviation: bool,
    pub detail: String,
    pub millis: u128,
}

impl CriterionOutcome {
    pub fn status(&self) -> &'static str {
        if !self.passed {
            "FAIL"
        } else if self.deviation {
            "PASS (documented deviation)"
        } else {
            "PASS"
        }
    }
}

#[derive(Default)]
struct SuiteState {
    /// Minimal-multiplicity reports collected from earlier criteria.
    minimal_instances: Vec<InvariantReport>,
    /// Non-CM Buchsbaum reports with e <= 2.
    small_e_instances: Vec<InvariantReport>,
}

impl SuiteState {
    fn collect(&mut self, report: &InvariantReport) {
        if report.minimal_multiplicity == Tri::Yes && !report.polynomial_ring {
            self.minimal_instances.push(report.clone());
        }
        if report.buchsbaum == Tri::Yes
            && !report.cohen_macaulay
            && report.e <= BigInt::from(2)
        {
            self.small_e_instances.push(report.clone());
        }
    }
}

/// Runs the whole suite in order. Criteria share collected instances
/// (minimal-multiplicity reports feed the Hilbert-series criterion, small
/// multiplicities feed the classification criterion).
pub fn run_verification(field: FieldSpec) -> Vec<CriterionOutcome> {
    let mut state = SuiteState::default();
    let runners: Vec<(
        &str,
        Box<dyn FnMut(&mut SuiteState) -> Result<(bool, bool, String)>>,
    )> = vec![
        ("golden 5-vertex example", Box::new(|s: &mut SuiteState| criterion_1(field, s))),
        ("exhaustive theorem sweep", Box::new(move |s| criterion_2(field, s))),
        ("cross-oracle equalities", Box::new(move |_| criterion_3(field))),
        ("family grid", Box::new(move |s| criterion_4(field, s))),
        ("Hilbert-series prediction", Box::new(move |s| criterion_5(s))),
        ("negative controls", Box::new(move |s| criterion_6(field, s))),
        ("small-multiplicity classification", Box::new(move |s| criterion_7(s))),
        ("two-generator example deviation", Box::new(move |_| criterion_8(field))),
        ("census reproduction", Box::new(move |_| criterion_9(field))),
        ("Kamoi-Vogel equality hunt", Box::new(move |_| criterion_10(field))),
    ];
    let mut outcomes = Vec::new();
    for (id, (name, mut run)) in runners.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = match run(&mut state) {
            Ok((passed, deviation, detail)) => CriterionOutcome {
                id: id + 1,
                name: name.to_string(),
                passed,
                deviation,
                detail,
                millis: start.elapsed().as_millis(),
            },
            Err(e) => CriterionOutcome {
                id: id + 1,
                name: name.to_string(),
                passed: false,
                deviation: false,
                detail: e.to_string(),
                millis: start.elapsed().as_millis(),
            },
        };
        outcomes.push(outcome);
    }
    outcomes
}

fn expect(cond: bool, what: &str, problems: &mut Vec<String>) {
    if !cond {
        problems.push(what.to_string());
    }
}

/// Criterion 1: the 5-vertex golden example, with the multiplicity
/// computed from both closed forms. Target runtime < 1 s.
fn criterion_1(field: FieldSpec, state: &mut SuiteState) -> Result<(bool, bool, String)> {
    let start = Instant::now();
    let complex = families::hanano_complex();
    let report = analyze_sr(&complex, field)?;
    run_checks_sr(&complex, field, &report)?;
    state.collect(&report);
    let mut problems = Vec::new();
    expect(report.d == 3 && report.c == 2 && report.q == 3, "d,c,q", &mut problems);
    expect(report.e == BigInt::from(5), "e = 5", &mut problems);
    expect(
        report.f_vector.as_deref() == Some(&[1, 5, 10, 5]),
        "f-vector",
        &mut problems,
    );
    expect(
        report.h_vector.as_deref() == Some(&[1, 2, 3, -1]),
        "h-vector",
        &mut problems,
    );
    expect(report.h_length(1) == Some(BigInt::from(0)), "h^1 = 0", &mut problems);
    expect(report.h_length(2) == Some(BigInt::from(1)), "h^2 = 1", &mut problems);
    let table = report.cohomology.table.as_ref().unwrap();
    expect(table.row(2).concentrated_in(0), "h^2 in degree 0", &mut problems);
    expect(report.a_invariant == Some(-2), "a = -2", &mut problems);
    expect(report.reg == 2, "reg = 2", &mut problems);
    expect(report.i_invariant == Some(BigInt::one()), "I(A) = 1", &mut problems);
    expect(report.buchsbaum == Tri::Yes, "Buchsbaum", &mut problems);
    expect(
        report.linear_resolution_degree == Some(3),
        "3-linear resolution",
        &mut problems,
    );
    expect(
        report.minimal_multiplicity == Tri::Yes
            && report.minimal_multiplicity_degree == Some(3),
        "minimal multiplicity of degree 3",
        &mut problems,
    );
    // e from both closed forms: C(4,2) - C(2,2) and (5/3)·C(3,1).
    let thm_58 = binomial(4, 2) - binomial(2, 2) * BigInt::one();
    expect(report.e == thm_58, "e = C(4,2) - C(2,2)", &mut problems);
    let thm_59_num = BigInt::from(5) * binomial(3, 1);
    expect(
        BigInt::from(3) * &report.e == thm_59_num,
        "e = (5/3)·C(3,1)",
        &mut problems,
    );
    let elapsed = start.elapsed();
    expect(elapsed.as_secs() < 1, "runtime < 1 s", &mut problems);
    Ok((
        problems.is_empty(),
        false,
        if problems.is_empty() {
            format!("all golden values match ({} ms)", elapsed.as_millis())
        } else {
            format!("mismatches: {}", problems.join(", "))
        },
    ))
}

/// Criterion 2: every Buchsbaum instance among all pure complexes on
/// n <= 5 vertices (all dimensions) plus all pure 2-complexes on 6
/// vertices, up to isomorphism, satisfies the bound, Hoa-Miyazaki,
/// Kamoi-Vogel, the minimal-multiplicity and Stanley-Reisner
/// equivalences (agreement enforced inside the checks), and q <= e+1.
fn criterion_2(field: FieldSpec, state: &mut SuiteState) -> Result<(bool, bool, String)> {
    let mut grid: Vec<(usize, usize)> = Vec::new();
    for n in 1..=5usize {
        for dim in 0..n {
            grid.push((n, dim));
        }
    }
    grid.push((6, 2));
    let mut classes = 0usize;
    let mut buchsbaum_count = 0usize;
    let mut problems = Vec::new();
    for (n, dim) in grid {
        for complex in enumerate_pure_complexes(n, dim, true)? {
            classes += 1;
            let report = analyze_sr(&complex, field)?;
            // Equivalence disagreements abort via the error path.
            let checks = run_checks_sr(&complex, field, &report)?;
            state.collect(&report);
            if report.buchsbaum != Tri::Yes || report.polynomial_ring {
                // The inequalities are stated for q >= 2; the polynomial
                // ring is the degree-1 sentinel.
                continue;
            }
            buchsbaum_count += 1;
            for check in &checks {
                let ok = match check.name.as_str() {
                    "multiplicity-lower-bound" | "kamoi-vogel" => {
                        matches!(check.verdict, Verdict::Holds | Verdict::Equality)
                    }
                    "hoa-miyazaki" | "small-multiplicity" => {
                        matches!(check.verdict, Verdict::Holds)
                    }
                    // Equivalence checks may hold or fail as a block; only
                    // disagreement (an error above) is a violation.
                    _ => true,
                };
                if !ok {
                    problems.push(format!(
                        "{} {} on n={n} dim={dim} {:?}",
                        check.name,
                        check.verdict.as_str(),
                        complex.facets()
                    ));
                }
            }
        }
    }
    Ok((
        problems.is_empty(),
        false,
        if problems.is_empty() {
            format!("{classes} classes analyzed, {buchsbaum_count} Buchsbaum, zero violations")
        } else {
            format!("violations: {}", problems.join("; "))
        },
    ))
}

/// All facet antichains (complexes) on exactly n labeled vertices, every
/// vertex covered.
pub fn covering_antichains(n: usize) -> Vec<SimplicialComplex> {
    let full: u64 = (1u64 << n) - 1;
    let subsets: Vec<u64> = (1..=full).collect();
    let mut out = Vec::new();
    let mut chosen: Vec<u64> = Vec::new();
    fn rec(
        subsets: &[u64],
        from: usize,
        chosen: &mut Vec<u64>,
        n: usize,
        full: u64,
        out: &mut Vec<SimplicialComplex>,
    ) {
        if !chosen.is_empty() {
            let cover = chosen.iter().fold(0u64, |a, &f| a | f);
            if cover == full {
                out.push(SimplicialComplex::build(n, chosen).unwrap());
            }
        }
        for idx in from..subsets.len() {
            let s = subsets[idx];
            if chosen
                .iter()
                .all(|&t| t & s != t && t & s != s)
            {
                chosen.push(s);
                rec(subsets, idx + 1, chosen, n, full, out);
                chosen.pop();
            }
        }
    }
    rec(&subsets, 0, &mut chosen, n, full, &mut out);
    out
}

/// Criterion 3: cross-oracle equality. The restriction-homology Betti
/// table equals the Koszul one on the squarefree ideal of every complex
/// on <= 5 vertices (exhaustive over facet antichains); the pivot
/// recursion equals the face-count Hilbert series on the same corpus;
/// homology dimensions satisfy Alexander duality for the v <= 5 corpus
/// plus all pure 6-vertex classes.
fn criterion_3(field: FieldSpec) -> Result<(bool, bool, String)> {
    let mut problems = Vec::new();
    let mut count = 0usize;
    for v in 1..=5usize {
        for complex in covering_antichains(v) {
            count += 1;
            let ideal = complex_to_ideal(&complex);
            let sr = betti_table_sr(&complex, field)?;
            let kz = graded_betti_koszul(&ideal, field, None)?;
            if sr != kz {
                problems.push(format!("betti mismatch on {:?}", complex.facets()));
            }
            let pivot = hilbert_series(&ideal);
            let facecount = crate::hilbert::HilbertSeries {
                numerator: crate::hilbert::Poly::from_coeffs(
                    crate::complex::h_vector(&complex.f_vector())
                        .entries()
                        .iter()
                        .map(|&x| BigInt::from(x))
                        .collect(),
                ),
                denom_pow: complex.ring_dim(),
            };
            if !pivot.equals_series(&facecount) {
                problems.push(format!("hilbert mismatch on {:?}", complex.facets()));
            }
            duality_check(&complex, field, &mut problems);
        }
    }
    let mut six_count = 0usize;
    for dim in 0..6usize {
        for complex in enumerate_pure_complexes(6, dim, true)? {
            six_count += 1;
            duality_check(&complex, field, &mut problems);
        }
    }
    Ok((
        problems.is_empty(),
        false,
        if problems.is_empty() {
            format!(
                "{count} complexes (v <= 5) cross-checked, {six_count} pure 6-vertex classes \
                 duality-checked, zero exceptions"
            )
        } else {
            format!("exceptions: {}", problems.join("; "))
        },
    ))
}

/// `dim H̃_i(Δ) = dim H̃_{v-i-3}(Δ*)` for non-simplex complexes.
fn duality_check(complex: &SimplicialComplex, field: FieldSpec, problems: &mut Vec<String>) {
    let Ok(dual) = complex.alexander_dual() else {
        return; // full simplex
    };
    let v = complex.vertices() as i64;
    let dims = reduced_homology_dims(complex, field);
    let dual_dims = reduced_homology_dims(&dual, field);
    let get = |d: &Vec<u64>, i: i64| -> u64 {
        let idx = i + 1;
        if idx < 0 || idx as usize >= d.len() {
            0
        } else {
            d[idx as usize]
        }
    };
    for i in -1..=v {
        if get(&dims, i) != get(&dual_dims, v - i - 3) {
            problems.push(format!(
                "duality mismatch at i={i} on {:?}",
                complex.facets()
            ));
        }
    }
}

fn check_family(
    spec: &FamilySpec,
    field: FieldSpec,
    state: &mut SuiteState,
    problems: &mut Vec<String>,
) -> Result<()> {
    let instance = families::generate_family(spec)?;
    let input = match &instance.object {
        Generated::Complex(c) => ParsedInput::Complex(c.clone()),
        Generated::Ideal(i) => {
            let names: Vec<String> = (1..=i.vars()).map(|k| format!("X{k}")).collect();
            ParsedInput::Ideal(i.clone(), names)
        }
    };
    let (report, _checks, _) = full_report(&input, field)?;
    state.collect(&report);
    for (f, expected, actual) in golden_mismatches(&report, &instance.golden) {
        problems.push(format!(
            "{}: {f} expected {expected}, got {actual}",
            instance.provenance
        ));
    }
    Ok(())
}

/// Criterion 4: the family grid with exact golden assertions.
fn criterion_4(field: FieldSpec, state: &mut SuiteState) -> Result<(bool, bool, String)> {
    let mut problems = Vec::new();
    let mut count = 0usize;
    for d in 1..=4u32 {
        for e in 1..=4u32 {
            count += 1;
            check_family(&FamilySpec::DisjointSimplices { d, e }, field, state, &mut problems)?;
        }
    }
    for c in 1..=3u32 {
        for d in 1..=3u32 {
            for q in 2..=4u32 {
                count += 1;
                check_family(&FamilySpec::GotoFamily { c, d, q }, field, state, &mut problems)?;
            }
        }
    }
    for d in 2..=4u32 {
        for q in 2..=d {
            count += 1;
            check_family(&FamilySpec::CyclicDual { q, d }, field, state, &mut problems)?;
        }
    }
    for d in 1..=3u32 {
        for q in 2..=4u32 {
            count += 1;
            check_family(
                &FamilySpec::FTimesIrrelevant { d, q, f: None },
                field,
                state,
                &mut problems,
            )?;
        }
    }
    Ok((
        problems.is_empty(),
        false,
        if problems.is_empty() {
            format!("{count} family instances match their golden assertions")
        } else {
            format!("golden mismatches: {}", problems.join("; "))
        },
    ))
}

/// Criterion 5: the predicted Hilbert series equals the computed one for
/// every minimal-multiplicity instance with d >= 2 collected so far.
fn criterion_5(state: &mut SuiteState) -> Result<(bool, bool, String)> {
    let mut problems = Vec::new();
    let mut count = 0usize;
    for report in &state.minimal_instances {
        if report.d < 2 {
            continue;
        }
        count += 1;
        let check = check_hilbert_prediction(report);
        if check.verdict != Verdict::Equality {
            problems.push(format!(
                "prediction {} on {:?}",
                check.verdict.as_str(),
                report.source
            ));
        }
    }
    Ok((
        problems.is_empty(),
        false,
        if problems.is_empty() {
            format!("{count} minimal-multiplicity instances with d >= 2, all series match")
        } else {
            format!("mismatches: {}", problems.join("; "))
        },
    ))
}

/// Criterion 6: negative controls. The non-Buchsbaum family fails the
/// Buchsbaum test via 𝔑·sat ⊄ I with e = 1 and an informational bound
/// evaluation 1 < q-1; the 4-cycle is CM, not minimal multiplicity, in
/// the Hoa-Miyazaki +0 case.
fn criterion_6(field: FieldSpec, state: &mut SuiteState) -> Result<(bool, bool, String)> {
    let mut problems = Vec::new();
    for d in 2..=3u32 {
        for q in 3..=4u32 {
            let instance = families::generate_family(&FamilySpec::NonBuchsbaum { d, q })?;
            let Generated::Ideal(ideal) = &instance.object else {
                unreachable!()
            };
            let names: Vec<String> = (1..=ideal.vars()).map(|k| format!("X{k}")).collect();
            let (report, checks, _) =
                full_report(&ParsedInput::Ideal(ideal.clone(), names), field)?;
            expect(
                report.buchsbaum == Tri::No,
                &format!("non_buchsbaum(d={d},q={q}) flagged Buchsbaum"),
                &mut problems,
            );
            expect(
                report.buchsbaum_reason.contains("⊄"),
                &format!("non_buchsbaum(d={d},q={q}) reason is the 𝔑·sat route"),
                &mut problems,
            );
            expect(
                report.e == BigInt::one(),
                &format!("non_buchsbaum(d={d},q={q}) has e = 1"),
                &mut problems,
            );
            let lb = checks
                .iter()
                .find(|c| c.name == "multiplicity-lower-bound")
                .unwrap();
            expect(
                lb.verdict == Verdict::NotApplicable,
                "bound check not-applicable without Buchsbaum",
                &mut problems,
            );
            let bound = lb
                .evidence
                .iter()
                .find(|(l, _)| l == "bound")
                .map(|(_, v)| v.clone())
                .unwrap_or_default();
            expect(
                bound == (q - 1).to_string(),
                &format!("informational bound = q-1 = {}", q - 1),
                &mut problems,
            );
        }
    }
    let four_cycle = SimplicialComplex::from_vertex_lists(
        4,
        &[vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]],
    )?;
    let report = analyze_sr(&four_cycle, field)?;
    let checks = run_checks_sr(&four_cycle, field, &report)?;
    state.collect(&report);
    expect(report.cohen_macaulay, "4-cycle is CM", &mut problems);
    expect(
        report.minimal_multiplicity == Tri::No,
        "4-cycle is not minimal multiplicity",
        &mut problems,
    );
    let hm = checks.iter().find(|c| c.name == "hoa-miyazaki").unwrap();
    expect(
        hm.note.as_deref() == Some("+0 case"),
        "4-cycle is the +0 case",
        &mut problems,
    );
    Ok((
        problems.is_empty(),
        false,
        if problems.is_empty() {
            "non-Buchsbaum controls and the 4-cycle behave as expected".to_string()
        } else {
            format!("failures: {}", problems.join("; "))
        },
    ))
}

/// Criterion 7: every collected non-CM Buchsbaum instance with e <= 2 is
/// flagged minimal multiplicity of degree <= 3 and matches exactly one
/// classification pattern.
fn criterion_7(state: &mut SuiteState) -> Result<(bool, bool, String)> {
    let mut problems = Vec::new();
    for report in &state.small_e_instances {
        let ok = report.minimal_multiplicity == Tri::Yes
            && report.minimal_multiplicity_degree.is_some_and(|d| d <= 3);
        if !ok {
            problems.push(format!("not flagged minimal <= 3: {:?}", report.source));
            continue;
        }
        let check = check_small_multiplicity(report);
        if check.verdict != Verdict::Holds {
            problems.push(format!(
                "pattern mismatch ({}) on {:?}",
                check.verdict.as_str(),
                report.source
            ));
        }
    }
    Ok((
        problems.is_empty(),
        false,
        if problems.is_empty() {
            format!(
                "{} non-CM Buchsbaum instances with e <= 2, all classified",
                state.small_e_instances.len()
            )
        } else {
            format!("exceptions: {}", problems.join("; "))
        },
    ))
}

/// Degreewise saturation-membership oracle: u lies in I : 𝔑^∞ iff
/// u·z^N ∈ I for every variable z and large N.
fn oracle_in_saturation(ideal: &MonomialIdeal, exps: &[u32], big_n: u32) -> bool {
    (0..ideal.vars()).all(|z| {
        let mut e = exps.to_vec();
        e[z] += big_n;
        ideal.contains_exponents(&e)
    })
}

/// Criterion 8: the two-generator variant of the small-multiplicity
/// example saturates to itself (depth >= 1) by both the colon route and
/// the degreewise oracle, contradicting its printed depth 0; the
/// corrected ideal Y^2·𝔑 reproduces every printed claim. Reported as a
/// documented deviation, not a failure.
fn criterion_8(field: FieldSpec) -> Result<(bool, bool, String)> {
    let mut problems = Vec::new();
    let d = 2u32;
    // Printed variant (X1 Y^2, X2 Y^2) in 3 variables.
    let printed_inst =
        families::generate_family(&FamilySpec::ExMulti2 { item: 4, d, c: 0, verbatim: true })?;
    let Generated::Ideal(printed) = &printed_inst.object else {
        unreachable!()
    };
    let sat = printed.saturation();
    expect(&sat == printed, "colon route: sat(I) = I", &mut problems);
    // Degreewise oracle up to degree 8: no monomial outside I saturates in.
    let mut oracle_agrees = true;
    for a in 0..=4u32 {
        for b in 0..=4u32 {
            for c in 0..=4u32 {
                let exps = [a, b, c];
                let in_sat = oracle_in_saturation(printed, &exps, 12);
                if in_sat != printed.contains_exponents(&exps) {
                    oracle_agrees = false;
                }
            }
        }
    }
    expect(oracle_agrees, "degreewise oracle: sat(I) = I", &mut problems);
    let names = vec!["X1".into(), "X2".into(), "Y".into()];
    let (printed_report, _, _) =
        full_report(&ParsedInput::Ideal(printed.clone(), names), field)?;
    expect(
        printed_report.depth >= 1,
        "printed variant has depth >= 1",
        &mut problems,
    );

    // Corrected variant Y^2·𝔑 reproduces the printed claims.
    let corrected_inst =
        families::generate_family(&FamilySpec::ExMulti2 { item: 4, d, c: 0, verbatim: false })?;
    let Generated::Ideal(corrected) = &corrected_inst.object else {
        unreachable!()
    };
    let names = vec!["X1".into(), "X2".into(), "Y".into()];
    let (report, _, _) = full_report(&ParsedInput::Ideal(corrected.clone(), names), field)?;
    for (f, expected, actual) in golden_mismatches(&report, &corrected_inst.golden) {
        problems.push(format!("corrected variant: {f} expected {expected}, got {actual}"));
    }
    Ok((
        problems.is_empty(),
        true,
        if problems.is_empty() {
            "printed two-generator variant saturates to itself (depth >= 1, contradicting its \
             stated depth 0) by both routes; the corrected Y^2·𝔑 reproduces all stated values"
                .to_string()
        } else {
            format!("failures: {}", problems.join("; "))
        },
    ))
}

/// Criterion 9: the census on (5, 2) with the minimal-multiplicity filter
/// contains the golden 5-vertex class. Target runtime < 1 minute.
fn criterion_9(field: FieldSpec) -> Result<(bool, bool, String)> {
    let start = Instant::now();
    let rows = census(
        5,
        2,
        field,
        CensusFilters {
            require_minimal: true,
            fix_q: None,
        },
    )?;
    let mut problems = Vec::new();
    expect(!rows.is_empty(), "census returned rows", &mut problems);
    let key = families::hanano_complex().canonical_form()?.encoding();
    expect(
        rows.iter().any(|r| r.canonical == key),
        "a witness matches the golden class",
        &mut problems,
    );
    let elapsed = start.elapsed();
    expect(elapsed.as_secs() < 60, "runtime < 1 minute", &mut problems);
    Ok((
        problems.is_empty(),
        false,
        if problems.is_empty() {
            format!("{} rows, golden class found ({} ms)", rows.len(), elapsed.as_millis())
        } else {
            format!("failures: {}", problems.join("; "))
        },
    ))
}

/// Criterion 10: the Kamoi-Vogel equality hunt over n <= 5 (all
/// dimensions) completes; any witness re-verifies from scratch. The
/// outcome (expected empty) is recorded either way.
fn criterion_10(field: FieldSpec) -> Result<(bool, bool, String)> {
    let mut witnesses = Vec::new();
    for n in 1..=5usize {
        for dim in 0..n {
            witnesses.extend(hunt_kamoi_vogel_equality(n, dim, field)?);
        }
    }
    let mut problems = Vec::new();
    for w in &witnesses {
        // Re-verify from scratch through the full analysis.
        let report = analyze_sr(w, field)?;
        if report.buchsbaum != Tri::Yes {
            problems.push(format!("witness fails re-verification: {:?}", w.facets()));
        }
    }
    Ok((
        problems.is_empty(),
        false,
        if witnesses.is_empty() {
            "no equality-without-linearity witness at this scale (recorded)".to_string()
        } else if problems.is_empty() {
            format!(
                "{} witnesses preserved and re-verified: {:?}",
                witnesses.len(),
                witnesses.iter().map(|w| w.facets()).collect::<Vec<_>>()
            )
        } else {
            format!("re-verification failures: {}", problems.join("; "))
        },
    ))
}
