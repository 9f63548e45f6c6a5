//! Homological invariants of Stanley-Reisner rings, computed exactly:
//! reduced simplicial homology via boundary-matrix ranks, graded local
//! cohomology via the Hochster link formula, and graded Betti numbers via
//! the Hochster restriction formula.
//!
//! All graded local cohomology of a Stanley-Reisner ring lives in degrees
//! <= 0. Rows below the top index are finite exactly when only the empty
//! face contributes; an infinite row decays toward -infinity and is stored
//! on a window together with its exact top degree.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::complex::{lex_cmp_masks, mask_to_vertices, SimplicialComplex};
use crate::linalg::{rank, FieldSpec};
use crate::{binomial, Error, Result};

/// Cap on 2^v restriction sums in [`betti_table_sr`].
pub const BETTI_SR_VERTEX_CAP: usize = 20;

/// Reduced homology dimensions `dim_k H̃_i(Δ; k)` for `i = -1 .. dim Δ`,
/// from exact ranks of the simplicial boundary matrices. Entry `j` of the
/// returned vector is the dimension at `i = j - 1`.
pub fn reduced_homology_dims(complex: &SimplicialComplex, field: FieldSpec) -> Vec<u64> {
    let levels = complex.faces_by_card();
    // levels[k] = faces with k vertices (dimension k-1)
    let n = levels.len();
    let mut ranks = vec![0usize; n + 1]; // ranks[k] = rank of the boundary map from card k to card k-1
    for k in 1..n {
        let m = boundary_matrix(&levels[k - 1], &levels[k]);
        ranks[k] = rank(field, &m);
    }
    let mut dims = Vec::with_capacity(n);
    for k in 0..n {
        let fk = levels[k].len();
        let hk = fk - ranks[k] - ranks[k + 1];
        dims.push(hk as u64);
    }
    // Alternating sum must equal the reduced Euler characteristic
    // −f_{-1} + f_0 − f_1 + ⋯ .
    let mut chi: i64 = 0;
    let mut chi_h: i64 = 0;
    for k in 0..n {
        let sign = if k % 2 == 0 { -1 } else { 1 };
        chi += sign * levels[k].len() as i64;
        chi_h += sign * dims[k] as i64;
    }
    assert_eq!(chi, chi_h, "homology does not match Euler characteristic (bug)");
    dims
}

/// Signed boundary matrix from faces of cardinality k (columns) to faces
/// of cardinality k-1 (rows); faces are listed in lexicographic order.
fn boundary_matrix(rows_faces: &[u64], cols_faces: &[u64]) -> Vec<Vec<i64>> {
    let row_index: BTreeMap<u64, usize> = rows_faces
        .iter()
        .enumerate()
        .map(|(i, &f)| (f, i))
        .collect();
    let mut m = vec![vec![0i64; cols_faces.len()]; rows_faces.len()];
    for (c, &f) in cols_faces.iter().enumerate() {
        for (pos, v) in mask_to_vertices(f).into_iter().enumerate() {
            let g = f & !(1u64 << v);
            if let Some(&r) = row_index.get(&g) {
                m[r][c] = if pos % 2 == 0 { 1 } else { -1 };
            }
        }
    }
    m
}

/// One graded row `H^i` of a local cohomology table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcRow {
    /// Nonzero dimensions on the window `[window_low, 0]`.
    pub dims: BTreeMap<i64, u64>,
    /// True when the row is a finite-length module. For Stanley-Reisner
    /// rings a finite row is concentrated in degree 0.
    pub finite: bool,
    /// Exact top degree of the support (not merely of the window), or
    /// `None` for the zero module.
    pub top_degree: Option<i64>,
}

impl LcRow {
    /// Total dimension (the length h^i) when finite.
    pub fn total(&self) -> Option<u64> {
        if self.finite {
            Some(self.dims.values().sum())
        } else {
            None
        }
    }

    pub fn is_zero(&self) -> bool {
        self.top_degree.is_none()
    }

    /// True when the support is exactly `{degree}` (or empty: the zero
    /// module is concentrated anywhere).
    pub fn concentrated_in(&self, degree: i64) -> bool {
        if self.is_zero() {
            return true;
        }
        self.finite && self.dims.keys().all(|&n| n == degree)
    }
}

/// Graded local cohomology `dim_k [H^i_M(k[Δ])]_n` for `0 <= i <= d`,
/// stored on the window `[-(v+1), 0]` together with each row's exact top
/// degree and the a-invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalCohomologyTable {
    pub d: usize,
    pub window_low: i64,
    rows: Vec<LcRow>,
}

impl LocalCohomologyTable {
    pub fn row(&self, i: usize) -> &LcRow {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[LcRow] {
        &self.rows
    }

    /// Length `h^i` of the i-th module when finite.
    pub fn h(&self, i: usize) -> Option<u64> {
        self.rows.get(i).and_then(|r| r.total())
    }

    /// All lengths `h^0..h^{d-1}` when every one is finite.
    pub fn lengths_below_top(&self) -> Option<Vec<u64>> {
        (0..self.d).map(|i| self.h(i)).collect()
    }

    /// `a(A) = max{n : [H^d]_n != 0}`.
    pub fn a_invariant(&self) -> i64 {
        self.rows[self.d]
            .top_degree
            .expect("H^d of a Stanley-Reisner ring is nonzero")
    }

    /// Regularity via vanishing: `min{n : [H^i]_j = 0 for all i + j > n}`.
    pub fn regularity(&self) -> i64 {
        self.rows
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.top_degree.map(|t| i as i64 + t))
            .max()
            .expect("H^d is nonzero")
    }

    /// `depth = min{i : H^i != 0}`.
    pub fn depth(&self) -> usize {
        self.rows
            .iter()
            .position(|r| !r.is_zero())
            .expect("H^d is nonzero")
    }
}

/// Hochster's formula: `dim [H^i_M(k[Δ])]_{-j} = Σ_{F ∈ Δ}
/// dim H̃_{i-|F|-1}(link_Δ F; k) · C(j-1, |F|-1)` for `j >= 1`, with the
/// `F = ∅` term contributing `dim H̃_{i-1}(Δ)` in degree 0.
pub fn local_cohomology_sr(
    complex: &SimplicialComplex,
    field: FieldSpec,
) -> LocalCohomologyTable {
    let d = complex.ring_dim();
    let v = complex.vertices();
    let window_low = -(v as i64 + 1);
    let mut rows = vec![
        LcRow {
            dims: BTreeMap::new(),
            finite: true,
            top_degree: None,
        };
        d + 1
    ];
    for face in complex.all_faces() {
        let link = complex.link_unrelabeled(face).unwrap();
        let hdims = reduced_homology_dims(&link, field);
        let fsize = face.count_ones() as i64;
        for (i, row) in rows.iter_mut().enumerate() {
            // index of H̃_{i - |F| - 1} in hdims (offset by one)
            let idx = i as i64 - fsize;
            if idx < 0 || idx as usize >= hdims.len() {
                continue;
            }
            let h = hdims[idx as usize];
            if h == 0 {
                continue;
            }
            if fsize == 0 {
                *row.dims.entry(0).or_insert(0) += h;
                row.top_degree = Some(row.top_degree.map_or(0, |t| t.max(0)));
            } else {
                // C(j-1, |F|-1) > 0 for all j >= |F|: infinite support.
                row.finite = false;
                for j in fsize..=-window_low {
                    let c: u64 = binomial(j - 1, fsize - 1).try_into().unwrap();
                    *row.dims.entry(-j).or_insert(0) += h * c;
                }
                let top = -fsize;
                row.top_degree = Some(row.top_degree.map_or(top, |t| t.max(top)));
            }
        }
    }
    LocalCohomologyTable {
        d,
        window_low,
        rows,
    }
}

/// A graded Betti table `(i, j) -> β_{i,j}` of a cyclic module, with the
/// derived invariants initial degree, regularity, projective dimension and
/// depth (Auslander-Buchsbaum).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    /// Number of ambient polynomial-ring variables.
    pub ambient_vars: usize,
    entries: BTreeMap<(usize, i64), u64>,
    /// Set when a user-imposed degree cap cut the table off below its
    /// natural support; derived invariants are then lower bounds.
    pub truncated: bool,
}

impl BettiTable {
    /// Table with β_{0,0} = 1 preset.
    pub fn new(ambient_vars: usize) -> Self {
        let mut t = Self::empty(ambient_vars);
        t.add(0, 0, 1);
        t
    }

    /// Table with no entries; the computation fills everything including
    /// β_{0,0}.
    pub fn empty(ambient_vars: usize) -> Self {
        BettiTable {
            ambient_vars,
            entries: BTreeMap::new(),
            truncated: false,
        }
    }

    pub fn add(&mut self, i: usize, j: i64, value: u64) {
        if value != 0 {
            *self.entries.entry((i, j)).or_insert(0) += value;
        }
    }

    pub fn beta(&self, i: usize, j: i64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, i64), &u64)> {
        self.entries.iter()
    }

    /// `indeg = min{j : β_{1,j} != 0}`; `None` for the polynomial ring.
    pub fn indeg(&self) -> Option<i64> {
        self.entries
            .iter()
            .filter(|((i, _), _)| *i == 1)
            .map(|((_, j), _)| *j)
            .min()
    }

    /// `reg = max{j - i : β_{i,j} != 0}`.
    pub fn regularity(&self) -> i64 {
        self.entries
            .keys()
            .map(|&(i, j)| j - i as i64)
            .max()
            .unwrap()
    }

    pub fn projective_dimension(&self) -> usize {
        *self.entries.keys().map(|(i, _)| i).max().unwrap()
    }

    /// `depth = v - pd` by Auslander-Buchsbaum.
    pub fn depth(&self) -> usize {
        self.ambient_vars - self.projective_dimension()
    }

    /// True when the resolution is q-linear: indeg q and every nonzero
    /// `β_{i,j}` with `i >= 1` has `j - i = q - 1`. The polynomial ring
    /// counts as 1-linear (sentinel indeg 1, reg 0).
    pub fn is_linear_of_degree(&self, q: i64) -> bool {
        match self.indeg() {
            None => q == 1,
            Some(indeg) => {
                indeg == q
                    && self
                        .entries
                        .keys()
                        .all(|&(i, j)| i == 0 || j - i as i64 == q - 1)
            }
        }
    }

    /// The degree q such that the table is q-linear, if any.
    pub fn linear_degree(&self) -> Option<i64> {
        match self.indeg() {
            None => Some(1),
            Some(q) => self.is_linear_of_degree(q).then_some(q),
        }
    }

    /// Row i as (j, β) pairs.
    pub fn row(&self, i: usize) -> Vec<(i64, u64)> {
        self.entries
            .iter()
            .filter(|((r, _), _)| *r == i)
            .map(|(&(_, j), &b)| (j, b))
            .collect()
    }
}

/// Hochster's restriction formula: `β_{i,j}(k[Δ]) = Σ_{|W| = j}
/// dim H̃_{j-i-1}(Δ|_W; k)` over the 2^v vertex subsets. Capped at 20
/// vertices.
pub fn betti_table_sr(complex: &SimplicialComplex, field: FieldSpec) -> Result<BettiTable> {
    let v = complex.vertices();
    if v > BETTI_SR_VERTEX_CAP {
        return Err(Error::CapExceeded(format!(
            "restriction-homology Betti table is capped at {BETTI_SR_VERTEX_CAP} vertices (got {v})"
        )));
    }
    let total: u64 = 1u64 << v;
    let partial: Vec<BTreeMap<(usize, i64), u64>> = (0..total)
        .into_par_iter()
        .fold(
            BTreeMap::new,
            |mut acc: BTreeMap<(usize, i64), u64>, w| {
                let j = w.count_ones() as i64;
                let restricted = complex.induced_subcomplex(w);
                let dims = reduced_homology_dims(&restricted, field);
                for (idx, &h) in dims.iter().enumerate() {
                    if h == 0 {
                        continue;
                    }
                    let hom_deg = idx as i64 - 1; // H̃_{hom_deg}
                    let i = j - hom_deg - 1;
                    if i >= 0 {
                        *acc.entry((i as usize, j)).or_insert(0) += h;
                    }
                }
                acc
            },
        )
        .collect();
    let mut table = BettiTable {
        ambient_vars: v,
        entries: BTreeMap::new(),
        truncated: false,
    };
    for part in partial {
        for ((i, j), b) in part {
            table.add(i, j, b);
        }
    }
    if table.beta(0, 0) != 1 {
        return Err(Error::InternalCrossCheck(
            "β_{0,0} of a Stanley-Reisner ring must be 1".into(),
        ));
    }
    Ok(table)
}

/// Betti table of the Alexander dual ring computed on the primal side:
/// restricting the dual to σ and dualizing within σ gives the link of
/// V∖σ, so `β_{i,j}(k[Δ*]) = Σ_{W ∈ Δ, |W| = v-j} dim H̃_{i-2}(link_Δ W)`
/// for i >= 1 (with β_{0,0} = 1). Avoids materializing duals whose face
/// posets are huge.
pub fn dual_betti_via_links(complex: &SimplicialComplex, field: FieldSpec) -> BettiTable {
    let v = complex.vertices();
    let mut table = BettiTable::new(v);
    for face in complex.all_faces() {
        let link = complex.link_unrelabeled(face).unwrap();
        let dims = reduced_homology_dims(&link, field);
        let j = v as i64 - face.count_ones() as i64;
        for (idx, &h) in dims.iter().enumerate() {
            // dims[idx] = H̃_{idx-1} = H̃_{i-2} for i = idx + 1.
            table.add(idx + 1, j, h);
        }
    }
    table
}

/// Deterministic listing order for faces: cardinality, then lexicographic.
pub fn face_order(a: u64, b: u64) -> std::cmp::Ordering {
    a.count_ones()
        .cmp(&b.count_ones())
        .then_with(|| lex_cmp_masks(a, b))
}
