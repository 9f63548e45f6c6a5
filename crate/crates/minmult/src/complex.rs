//! Finite simplicial complexes stored as facet antichains over a bitmask
//! ground set, together with the combinatorial operations the invariant
//! pipeline needs: f- and h-vectors, links, induced subcomplexes,
//! Alexander duals, minimal non-faces, disjoint unions, cyclic polytope
//! boundaries, canonical forms and exhaustive enumeration of pure
//! complexes.
//!
//! Faces are machine-word bitmasks (bit `i` = vertex `i`, 0-based), with
//! the ground set capped at 63 vertices. Complexes are identified by their
//! facet antichain; face membership is computed, not stored.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::{Error, Result};

pub const MAX_VERTICES: usize = 63;

fn canon_cap() -> usize {
    std::env::var("MINMULT_CANON_CAP")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(9)
}

fn enum_vertex_cap() -> usize {
    std::env::var("MINMULT_ENUM_CAP")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(7)
}

fn enum_budget() -> u64 {
    std::env::var("MINMULT_ENUM_BUDGET")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(1 << 26)
}

/// A finite simplicial complex on ground set `{0, .., vertices-1}`,
/// stored by its maximal faces only.
///
/// The complex `{∅}` (a single empty facet, `vertices == 0`) is a legal
/// sentinel; a complex with zero facets is rejected. Ground-set vertices
/// that lie in no facet ("ghost" vertices) are rejected by the strict
/// constructors but are retained by operations that naturally produce
/// them (Alexander duals, induced subcomplexes).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplicialComplex {
    vertices: usize,
    facets: Vec<u64>,
}

impl SimplicialComplex {
    /// Builds the complex generated by `faces` (bitmasks), stored by
    /// maximal faces. Rejects ground-set vertices that appear in no face.
    pub fn build(vertices: usize, faces: &[u64]) -> Result<Self> {
        let c = Self::build_allowing_ghosts(vertices, faces)?;
        let ghosts = c.ghost_vertices();
        if ghosts != 0 {
            return Err(Error::InvalidInput(format!(
                "vertices {:?} appear in no face (pass them in a face, or use the normalizing builder)",
                mask_to_vertices(ghosts)
            )));
        }
        Ok(c)
    }

    /// Like [`build`](Self::build) but relabels unused vertices away,
    /// returning the surviving original labels in order. Relabeling
    /// changes the codimension of the Stanley-Reisner ring, so this is
    /// opt-in.
    pub fn build_normalizing(vertices: usize, faces: &[u64]) -> Result<(Self, Vec<usize>)> {
        let c = Self::build_allowing_ghosts(vertices, faces)?;
        let support = c.support_mask();
        let kept = mask_to_vertices(support);
        let mut relabel = vec![usize::MAX; vertices];
        for (new, &old) in kept.iter().enumerate() {
            relabel[old] = new;
        }
        let facets = c
            .facets
            .iter()
            .map(|&f| {
                let mut g = 0u64;
                for v in mask_to_vertices(f) {
                    g |= 1 << relabel[v];
                }
                g
            })
            .collect();
        Ok((
            Self {
                vertices: kept.len(),
                facets: sort_masks(facets),
            },
            kept,
        ))
    }

    /// Builds without the coverage check. Used internally by duals and
    /// restrictions, and available for round-tripping their outputs.
    pub fn build_allowing_ghosts(vertices: usize, faces: &[u64]) -> Result<Self> {
        if vertices > MAX_VERTICES {
            return Err(Error::CapExceeded(format!(
                "ground set of {vertices} vertices exceeds the {MAX_VERTICES}-vertex cap"
            )));
        }
        if faces.is_empty() {
            return Err(Error::InvalidInput(
                "a complex needs at least one face (use a single empty face for {∅})".into(),
            ));
        }
        let range: u64 = if vertices == 64 { !0 } else { (1u64 << vertices) - 1 };
        for &f in faces {
            if f & !range != 0 {
                return Err(Error::InvalidInput(format!(
                    "face {:?} has a vertex out of range 0..{vertices}",
                    mask_to_vertices(f)
                )));
            }
        }
        let mut maximal: Vec<u64> = Vec::new();
        for &f in faces {
            if maximal.iter().any(|&g| f & g == f) {
                continue;
            }
            maximal.retain(|&g| g & f != g);
            maximal.push(f);
        }
        Ok(Self {
            vertices,
            facets: sort_masks(maximal),
        })
    }

    /// Builds from 0-based vertex lists.
    pub fn from_vertex_lists(vertices: usize, faces: &[Vec<usize>]) -> Result<Self> {
        let masks = faces
            .iter()
            .map(|f| vertices_to_mask(f, vertices))
            .collect::<Result<Vec<_>>>()?;
        Self::build(vertices, &masks)
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    /// Facets as sorted bitmasks.
    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    /// Dimension of the complex; `{∅}` has dimension -1.
    pub fn dim(&self) -> i64 {
        self.facets
            .iter()
            .map(|f| f.count_ones() as i64 - 1)
            .max()
            .unwrap()
    }

    /// Krull dimension of the Stanley-Reisner ring, `dim Δ + 1`.
    pub fn ring_dim(&self) -> usize {
        (self.dim() + 1) as usize
    }

    pub fn is_pure(&self) -> bool {
        let d = self.facets[0].count_ones();
        self.facets.iter().all(|f| f.count_ones() == d)
    }

    /// Union of all facets.
    pub fn support_mask(&self) -> u64 {
        self.facets.iter().fold(0, |a, &f| a | f)
    }

    /// Ground-set vertices lying in no face.
    pub fn ghost_vertices(&self) -> u64 {
        let range: u64 = if self.vertices == 0 {
            0
        } else {
            (1u64 << self.vertices) - 1
        };
        range & !self.support_mask()
    }

    /// Downward-closure membership test.
    pub fn contains_face(&self, face: u64) -> bool {
        self.facets.iter().any(|&f| face & f == face)
    }

    /// All faces including the empty face, sorted.
    pub fn all_faces(&self) -> BTreeSet<u64> {
        let mut set = BTreeSet::new();
        for &f in &self.facets {
            let mut s = f;
            loop {
                set.insert(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & f;
            }
        }
        set
    }

    /// Faces grouped by cardinality: entry `k` lists the faces with `k`
    /// vertices, in lexicographic vertex order.
    pub fn faces_by_card(&self) -> Vec<Vec<u64>> {
        let d1 = (self.dim() + 1) as usize;
        let mut by = vec![Vec::new(); d1 + 1];
        for f in self.all_faces() {
            by[f.count_ones() as usize].push(f);
        }
        for level in &mut by {
            level.sort_by(|a, b| lex_cmp_masks(*a, *b));
        }
        by
    }

    /// Face counts `(f_{-1}, f_0, ..., f_{d-1})` by subset enumeration
    /// below the facets.
    pub fn f_vector(&self) -> FVector {
        let mut counts = vec![0u64; (self.dim() + 2) as usize];
        for f in self.all_faces() {
            counts[f.count_ones() as usize] += 1;
        }
        FVector { entries: counts }
    }

    /// The link of a face `G`: `{F : F ∪ G ∈ Δ, F ∩ G = ∅}`, relabeled to
    /// the vertices actually appearing. Returns the complex and the
    /// original labels of its vertices. `link(Δ, ∅) = Δ`.
    pub fn link(&self, face: u64) -> Result<(SimplicialComplex, Vec<usize>)> {
        if !self.contains_face(face) {
            return Err(Error::InvalidInput(format!(
                "{:?} is not a face of the complex",
                mask_to_vertices(face)
            )));
        }
        let link_facets: Vec<u64> = self
            .facets
            .iter()
            .filter(|&&f| f & face == face)
            .map(|&f| f & !face)
            .collect();
        let support = link_facets.iter().fold(0u64, |a, &f| a | f);
        let labels = mask_to_vertices(support);
        let mut relabel = vec![usize::MAX; self.vertices.max(1)];
        for (new, &old) in labels.iter().enumerate() {
            relabel[old] = new;
        }
        let relabeled: Vec<u64> = link_facets
            .iter()
            .map(|&f| {
                mask_to_vertices(f)
                    .into_iter()
                    .fold(0u64, |a, v| a | (1 << relabel[v]))
            })
            .collect();
        Ok((
            SimplicialComplex {
                vertices: labels.len(),
                facets: sort_masks(relabeled),
            },
            labels,
        ))
    }

    /// Link without relabeling: facets keep their original vertex labels,
    /// on the same ground set. Used where homology is all that matters.
    pub fn link_unrelabeled(&self, face: u64) -> Result<SimplicialComplex> {
        if !self.contains_face(face) {
            return Err(Error::InvalidInput("not a face".into()));
        }
        let link_facets: Vec<u64> = self
            .facets
            .iter()
            .filter(|&&f| f & face == face)
            .map(|&f| f & !face)
            .collect();
        Ok(SimplicialComplex {
            vertices: self.vertices,
            facets: sort_masks(link_facets),
        })
    }

    /// Faces of the complex contained in `W`, on the same ground set
    /// (vertices outside `W` become ghosts).
    pub fn induced_subcomplex(&self, w: u64) -> SimplicialComplex {
        let mut maximal: Vec<u64> = Vec::new();
        for &f in &self.facets {
            let g = f & w;
            if maximal.iter().any(|&m| g & m == g) {
                continue;
            }
            maximal.retain(|&m| m & g != m);
            maximal.push(g);
        }
        SimplicialComplex {
            vertices: self.vertices,
            facets: sort_masks(maximal),
        }
    }

    /// Inclusion-minimal non-faces; their vertex sets are the exponents of
    /// the minimal squarefree generators of the Stanley-Reisner ideal.
    /// Empty for the full simplex (the polynomial-ring sentinel).
    ///
    /// A set is a non-face iff it is contained in no facet, i.e. iff it
    /// meets every facet complement, so the minimal non-faces are the
    /// minimal transversals of the facet complements.
    pub fn minimal_nonfaces(&self) -> Vec<u64> {
        let range: u64 = if self.vertices == 0 {
            0
        } else {
            (1u64 << self.vertices) - 1
        };
        let complements: Vec<u64> = self.facets.iter().map(|&f| range & !f).collect();
        let mut out = minimal_transversals(&complements);
        // The empty set survives only when there are no nonempty facet
        // complements (full simplex): no non-faces then.
        out.retain(|&t| t != 0);
        out.sort_by(|&a, &b| {
            a.count_ones()
                .cmp(&b.count_ones())
                .then_with(|| lex_cmp_masks(a, b))
        });
        out
    }

    /// Initial degree of the Stanley-Reisner ideal: the least cardinality
    /// of a non-face; `None` for the full simplex (polynomial ring, where
    /// the sentinel value 1 is used downstream).
    pub fn indeg(&self) -> Option<u32> {
        self.minimal_nonfaces().first().map(|f| f.count_ones())
    }

    /// Alexander dual `Δ* = {F ⊆ V : V∖F ∉ Δ}` on the same ground set.
    /// Its facets are the complements of the minimal non-faces. The dual
    /// may have ghost vertices, which are retained. Errors on the full
    /// simplex (the dual would have no faces).
    pub fn alexander_dual(&self) -> Result<SimplicialComplex> {
        let range: u64 = if self.vertices == 0 {
            0
        } else {
            (1u64 << self.vertices) - 1
        };
        let nonfaces = self.minimal_nonfaces();
        if nonfaces.is_empty() {
            return Err(Error::InvalidInput(
                "the full simplex has no Alexander dual (no non-faces)".into(),
            ));
        }
        let facets: Vec<u64> = nonfaces.iter().map(|&n| range & !n).collect();
        Ok(SimplicialComplex {
            vertices: self.vertices,
            facets: sort_masks(facets),
        })
    }

    /// Disjoint union, relabeled onto `v1 + v2` vertices.
    pub fn disjoint_union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let shift = self.vertices;
        let mut facets = self.facets.clone();
        facets.extend(other.facets.iter().map(|&f| f << shift));
        // An ∅ facet is absorbed by any nonempty one.
        if facets.iter().any(|&f| f != 0) {
            facets.retain(|&f| f != 0);
        }
        SimplicialComplex {
            vertices: self.vertices + other.vertices,
            facets: sort_masks(facets),
        }
    }

    /// Canonical facet encoding: the lexicographically least sorted facet
    /// list over all vertex relabelings. Equal encodings iff the
    /// complexes are isomorphic. Capped at 9 vertices by default
    /// (`MINMULT_CANON_CAP`).
    pub fn canonical_form(&self) -> Result<CanonicalForm> {
        let cap = canon_cap();
        if self.vertices > cap {
            return Err(Error::CapExceeded(format!(
                "canonical form is capped at {cap} vertices (got {})",
                self.vertices
            )));
        }
        let v = self.vertices;
        let mut best: Option<Vec<u64>> = None;
        let mut perm: Vec<usize> = (0..v).collect();
        permute_all(&mut perm, &mut |p| {
            let mut mapped: Vec<u64> = self
                .facets
                .iter()
                .map(|&f| apply_perm(f, p))
                .collect();
            mapped.sort_unstable();
            match &best {
                Some(b) if *b <= mapped => {}
                _ => best = Some(mapped),
            }
        });
        Ok(CanonicalForm {
            vertices: v,
            facets: best.unwrap(),
        })
    }

    /// The complex relabeled to its canonical form.
    pub fn canonicalized(&self) -> Result<SimplicialComplex> {
        let c = self.canonical_form()?;
        Ok(SimplicialComplex {
            vertices: c.vertices,
            facets: c.facets,
        })
    }
}

/// Canonical encoding of a complex: ground-set size and the
/// lexicographically least sorted facet-mask list over all relabelings.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub vertices: usize,
    pub facets: Vec<u64>,
}

impl CanonicalForm {
    pub fn encoding(&self) -> String {
        let parts: Vec<String> = self
            .facets
            .iter()
            .map(|&f| {
                mask_to_vertices(f)
                    .iter()
                    .map(|v| (v + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(".")
            })
            .collect();
        format!("v{}:{}", self.vertices, parts.join("|"))
    }
}

/// Face counts `(f_{-1}, f_0, ..., f_{d-1})`, with `f_{-1} = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FVector {
    entries: Vec<u64>,
}

impl FVector {
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        if entries.first() != Some(&1) {
            return Err(Error::InvalidInput("f_{-1} must be 1".into()));
        }
        Ok(Self { entries })
    }

    /// `f_i` for `i` from -1 to d-1.
    pub fn f(&self, i: i64) -> u64 {
        let idx = i + 1;
        if idx < 0 || idx as usize >= self.entries.len() {
            0
        } else {
            self.entries[idx as usize]
        }
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    /// Ring dimension d (= dim Δ + 1).
    pub fn d(&self) -> usize {
        self.entries.len() - 1
    }

    /// Number of top-dimensional faces, the multiplicity of k[Δ] when pure.
    pub fn top(&self) -> u64 {
        *self.entries.last().unwrap()
    }
}

/// Hilbert-series numerator coefficients `(h_0, ..., h_d)`; entries may be
/// negative for non-Cohen-Macaulay rings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HVector {
    entries: Vec<i128>,
}

impl HVector {
    pub fn entries(&self) -> &[i128] {
        &self.entries
    }

    pub fn h(&self, k: usize) -> i128 {
        self.entries.get(k).copied().unwrap_or(0)
    }

    pub fn sum(&self) -> i128 {
        self.entries.iter().sum()
    }
}

/// h-vector from the f-vector: `h_k = Σ_{i=0}^{k} (-1)^{k-i} C(d-i, k-i)
/// f_{i-1}`, cross-checked internally against the coefficient expansion
/// of `Σ f_{i-1} t^i (1-t)^{d-i}`.
pub fn h_vector(f: &FVector) -> HVector {
    let d = f.d() as i64;
    let mut entries = Vec::with_capacity(d as usize + 1);
    for k in 0..=d {
        let mut h: i128 = 0;
        for i in 0..=k {
            let c: i128 = crate::binomial(d - i, k - i)
                .try_into()
                .expect("binomial fits i128 at the 63-vertex cap");
            let term = c * f.f(i - 1) as i128;
            if (k - i) % 2 == 0 {
                h += term;
            } else {
                h -= term;
            }
        }
        entries.push(h);
    }
    // Independent route: expand Σ f_{i-1} t^i (1-t)^{d-i}.
    let mut poly = vec![0i128; d as usize + 1];
    for i in 0..=d {
        let fi = f.f(i - 1) as i128;
        if fi == 0 {
            continue;
        }
        for j in 0..=(d - i) {
            let c: i128 = crate::binomial(d - i, j).try_into().unwrap();
            let signed = if j % 2 == 0 { c } else { -c };
            poly[(i + j) as usize] += fi * signed;
        }
    }
    assert_eq!(entries, poly, "h-vector routes disagree (bug)");
    HVector { entries }
}

/// Boundary complex of the cyclic polytope C(n, f) for even f: facets are
/// the f-subsets satisfying Gale's evenness condition (every maximal run
/// of consecutive elements containing neither endpoint has even length).
/// Pure of dimension f-1 on n vertices.
pub fn cyclic_polytope_boundary(n: usize, f: usize) -> Result<SimplicialComplex> {
    if f < 2 || f % 2 != 0 {
        return Err(Error::InvalidInput(format!(
            "cyclic polytope needs even f >= 2, got {f}"
        )));
    }
    if n < f + 1 {
        return Err(Error::InvalidInput(format!(
            "cyclic polytope needs n >= f+1, got n={n}, f={f}"
        )));
    }
    if n > MAX_VERTICES {
        return Err(Error::CapExceeded(format!("n={n} exceeds the vertex cap")));
    }
    let mut facets = Vec::new();
    let mut subset: Vec<usize> = (0..f).collect();
    loop {
        if gale_even(&subset, n) {
            facets.push(subset.iter().fold(0u64, |a, &v| a | (1 << v)));
        }
        // next f-combination of 0..n
        let mut i = f;
        loop {
            if i == 0 {
                return SimplicialComplex::build(n, &facets);
            }
            i -= 1;
            if subset[i] != i + n - f {
                subset[i] += 1;
                for j in i + 1..f {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn gale_even(subset: &[usize], n: usize) -> bool {
    // Maximal runs of consecutive elements; runs touching vertex 0 or n-1
    // are exempt.
    let mut i = 0;
    while i < subset.len() {
        let start = i;
        while i + 1 < subset.len() && subset[i + 1] == subset[i] + 1 {
            i += 1;
        }
        let touches_end = subset[start] == 0 || subset[i] == n - 1;
        let len = i - start + 1;
        if !touches_end && len % 2 != 0 {
            return false;
        }
        i += 1;
    }
    true
}

/// Enumerates every pure `dim`-dimensional complex on exactly `n` vertices
/// (facets form a nonempty antichain of (dim+1)-subsets covering all
/// vertices), in a deterministic order. With `dedup`, yields one
/// representative per isomorphism class (the one whose facet-index code is
/// orbit-minimal), still deterministically.
pub fn enumerate_pure_complexes(
    n: usize,
    dim: usize,
    dedup: bool,
) -> Result<Vec<SimplicialComplex>> {
    let cap = enum_vertex_cap();
    if n > cap {
        return Err(Error::CapExceeded(format!(
            "enumeration is capped at {cap} vertices (got {n}); raise MINMULT_ENUM_CAP to override"
        )));
    }
    if dim >= n {
        return Err(Error::InvalidInput(format!(
            "dimension {dim} needs more than {n} vertices"
        )));
    }
    let k = dim + 1;
    let universe = combinations(n, k);
    let m = universe.len();
    if m > 63 || (1u64 << m) > enum_budget() {
        return Err(Error::CapExceeded(format!(
            "facet universe of size {m} exceeds the enumeration budget; raise MINMULT_ENUM_BUDGET"
        )));
    }
    let full: u64 = if n == 64 { !0 } else { (1u64 << n) - 1 };

    // Permutation action on facet indices, for isomorphism dedup.
    let perm_tables: Vec<Vec<u8>> = if dedup {
        let mut tables = Vec::new();
        let mut perm: Vec<usize> = (0..n).collect();
        let index_of: std::collections::HashMap<u64, u8> = universe
            .iter()
            .enumerate()
            .map(|(i, &f)| (f, i as u8))
            .collect();
        permute_all(&mut perm, &mut |p| {
            let table: Vec<u8> = universe
                .iter()
                .map(|&f| index_of[&apply_perm(f, p)])
                .collect();
            tables.push(table);
        });
        tables
    } else {
        Vec::new()
    };

    let total: u64 = 1u64 << m;
    let codes: Vec<u64> = (1..total)
        .into_par_iter()
        .filter(|&code| {
            let mut cover = 0u64;
            let mut bits = code;
            while bits != 0 {
                let i = bits.trailing_zeros() as usize;
                cover |= universe[i];
                bits &= bits - 1;
            }
            if cover != full {
                return false;
            }
            if !dedup {
                return true;
            }
            // Keep only orbit-minimal codes.
            for table in &perm_tables {
                let mut image = 0u64;
                let mut bits = code;
                while bits != 0 {
                    let i = bits.trailing_zeros() as usize;
                    image |= 1u64 << table[i];
                    bits &= bits - 1;
                }
                if image < code {
                    return false;
                }
            }
            true
        })
        .collect();
    let mut codes = codes;
    codes.sort_unstable();
    Ok(codes
        .into_iter()
        .map(|code| {
            let facets: Vec<u64> = (0..m)
                .filter(|i| code >> i & 1 == 1)
                .map(|i| universe[i])
                .collect();
            SimplicialComplex {
                vertices: n,
                facets: sort_masks(facets),
            }
        })
        .collect())
}

/// All k-subsets of 0..n as bitmasks, in lexicographic vertex order.
pub fn combinations(n: usize, k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    if k == 0 {
        out.push(0);
        return out;
    }
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        out.push(subset.iter().fold(0u64, |a, &v| a | (1 << v)));
        let mut i = k;
        loop {
            if i == 0 {
                out.sort_by(|&a, &b| lex_cmp_masks(a, b));
                return out;
            }
            i -= 1;
            if subset[i] != i + n - k {
                subset[i] += 1;
                for j in i + 1..k {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
}

pub fn mask_to_vertices(mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut bits = mask;
    while bits != 0 {
        out.push(bits.trailing_zeros() as usize);
        bits &= bits - 1;
    }
    out
}

pub fn vertices_to_mask(vertices: &[usize], ground: usize) -> Result<u64> {
    let mut mask = 0u64;
    for &v in vertices {
        if v >= ground {
            return Err(Error::InvalidInput(format!(
                "vertex {v} out of range 0..{ground}"
            )));
        }
        mask |= 1 << v;
    }
    Ok(mask)
}

/// Lexicographic order on faces viewed as sorted vertex lists.
pub fn lex_cmp_masks(a: u64, b: u64) -> std::cmp::Ordering {
    let va = mask_to_vertices(a);
    let vb = mask_to_vertices(b);
    va.cmp(&vb)
}

fn sort_masks(mut masks: Vec<u64>) -> Vec<u64> {
    masks.sort_unstable();
    masks.dedup();
    masks
}

/// Minimal transversals (hitting sets) of a family of vertex sets, by
/// Berge's incremental algorithm. The empty family has the single
/// transversal ∅. A family containing ∅ has no transversal at all.
pub fn minimal_transversals(sets: &[u64]) -> Vec<u64> {
    let mut transversals: Vec<u64> = vec![0];
    for &s in sets {
        let mut next: Vec<u64> = Vec::new();
        for &t in &transversals {
            if t & s != 0 {
                push_minimal(&mut next, t);
            } else {
                for v in mask_to_vertices(s) {
                    push_minimal(&mut next, t | (1 << v));
                }
            }
        }
        transversals = next;
    }
    transversals
}

fn push_minimal(set: &mut Vec<u64>, t: u64) {
    if set.iter().any(|&s| s & t == s) {
        return;
    }
    set.retain(|&s| s & t != t || s == t);
    set.push(t);
}

fn apply_perm(face: u64, perm: &[usize]) -> u64 {
    let mut out = 0u64;
    let mut bits = face;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        out |= 1 << perm[v];
        bits &= bits - 1;
    }
    out
}

/// Calls `f` on every permutation of the slice (Heap's algorithm).
fn permute_all(items: &mut [usize], f: &mut impl FnMut(&[usize])) {
    fn rec(k: usize, items: &mut [usize], f: &mut impl FnMut(&[usize])) {
        if k <= 1 {
            f(items);
            return;
        }
        for i in 0..k {
            rec(k - 1, items, f);
            if k % 2 == 0 {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    let n = items.len();
    if n == 0 {
        f(items);
        return;
    }
    rec(n, items, f);
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The 2-dimensional complex on [5] spanned by 123, 134, 145, 235, 245
    /// (1-based labels), written 0-based.
    pub fn hanano() -> SimplicialComplex {
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
        // Facets {1,3} and {2,4} 1-based -> {0,2},{1,3} 0-based.
        SimplicialComplex::from_vertex_lists(4, &[vec![0, 2], vec![1, 3]]).unwrap()
    }

    fn four_cycle() -> SimplicialComplex {
        SimplicialComplex::from_vertex_lists(4, &[vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]])
            .unwrap()
    }

    /// Brute-force face census: counts subsets of the ground set that are
    /// contained in some listed facet. Independent of the implementation's
    /// downward-closure bookkeeping.
    fn brute_force_f_vector(v: usize, facets: &[u64]) -> Vec<u64> {
        let mut counts = Vec::new();
        for s in 0..(1u64 << v) {
            if facets.iter().any(|&f| s & f == s) {
                let k = s.count_ones() as usize;
                if counts.len() <= k {
                    counts.resize(k + 1, 0);
                }
                counts[k] += 1;
            }
        }
        counts
    }

    #[test]
    fn build_examples() {
        let h = hanano();
        assert_eq!(h.facet_count(), 5);
        assert_eq!(h.dim(), 2);
        assert!(h.is_pure());

        let simplex = SimplicialComplex::from_vertex_lists(3, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(simplex.dim(), 2);
        assert!(simplex.is_pure());

        // {13},{24},{1}: the {1} is absorbed by downward closure.
        let c =
            SimplicialComplex::from_vertex_lists(4, &[vec![0, 2], vec![1, 3], vec![0]]).unwrap();
        assert_eq!(c.facet_count(), 2);
        assert_eq!(c.dim(), 1);
        assert!(c.is_pure());
    }

    #[test]
    fn build_errors() {
        assert!(SimplicialComplex::build(3, &[]).is_err());
        assert!(SimplicialComplex::from_vertex_lists(3, &[vec![0, 3]]).is_err());
        // Vertex 2 unused.
        assert!(SimplicialComplex::from_vertex_lists(3, &[vec![0, 1]]).is_err());
        let (c, kept) =
            SimplicialComplex::build_normalizing(3, &[0b011]).unwrap();
        assert_eq!(c.vertices(), 2);
        assert_eq!(kept, vec![0, 1]);
    }

    #[test]
    fn empty_complex_sentinel() {
        let e = SimplicialComplex::build(0, &[0]).unwrap();
        assert_eq!(e.dim(), -1);
        assert_eq!(e.f_vector().entries(), &[1]);
        assert_eq!(e.ring_dim(), 0);
    }

    #[test]
    fn f_vector_examples() {
        let h = hanano();
        assert_eq!(h.f_vector().entries(), &[1, 5, 10, 5]);
        assert_eq!(
            brute_force_f_vector(5, h.facets()),
            vec![1, 5, 10, 5]
        );

        let simplex = SimplicialComplex::from_vertex_lists(3, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(simplex.f_vector().entries(), &[1, 3, 3, 1]);

        let e2 = two_disjoint_edges();
        assert_eq!(e2.f_vector().entries(), &[1, 4, 2]);
        assert_eq!(brute_force_f_vector(4, e2.facets()), vec![1, 4, 2]);
    }

    /// Expand Σ f_{i-1} t^i (1-t)^{d-i} by explicit polynomial
    /// multiplication; independent oracle for the h-vector.
    fn h_by_expansion(f: &[u64]) -> Vec<i128> {
        let d = f.len() - 1;
        let mut acc = vec![0i128; d + 1];
        for (i, &fi) in f.iter().enumerate() {
            // term: f[i] * t^i * (1-t)^(d-i)
            let mut poly = vec![0i128; d + 1];
            poly[i] = fi as i128;
            for _ in 0..(d - i) {
                // multiply by (1 - t)
                let mut next = vec![0i128; d + 1];
                for (k, &c) in poly.iter().enumerate() {
                    next[k] += c;
                    if k + 1 <= d {
                        next[k + 1] -= c;
                    }
                }
                poly = next;
            }
            for k in 0..=d {
                acc[k] += poly[k];
            }
        }
        acc
    }

    #[test]
    fn h_vector_examples() {
        let f = FVector::new(vec![1, 5, 10, 5]).unwrap();
        let h = h_vector(&f);
        assert_eq!(h.entries(), &[1, 2, 3, -1]);
        assert_eq!(h_by_expansion(&[1, 5, 10, 5]), vec![1, 2, 3, -1]);

        let f = FVector::new(vec![1, 4, 2]).unwrap();
        assert_eq!(h_vector(&f).entries(), &[1, 2, -1]);

        let f = FVector::new(vec![1, 3, 3, 1]).unwrap();
        assert_eq!(h_vector(&f).entries(), &[1, 0, 0, 0]);
    }

    #[test]
    fn h_vector_sum_is_facet_count() {
        for c in [hanano(), two_disjoint_edges(), four_cycle()] {
            let f = c.f_vector();
            let h = h_vector(&f);
            assert_eq!(h.sum(), f.top() as i128);
        }
    }

    #[test]
    fn link_examples() {
        let h = hanano();
        // Link of vertex 1 (0-based 0): facets {23},{34},{45} 1-based.
        let (link, labels) = h.link(1).unwrap();
        assert_eq!(labels, vec![1, 2, 3, 4]);
        let expected =
            SimplicialComplex::from_vertex_lists(4, &[vec![0, 1], vec![1, 2], vec![2, 3]])
                .unwrap();
        assert_eq!(link, expected);

        let (same, _) = h.link(0b00000).unwrap();
        assert_eq!(same, h);

        let simplex = SimplicialComplex::from_vertex_lists(3, &[vec![0, 1, 2]]).unwrap();
        let (lk, labels) = simplex.link(0b011).unwrap();
        assert_eq!(labels, vec![2]);
        assert_eq!(lk.facets(), &[0b1]);

        assert!(h.link(0b11000).is_err() || h.contains_face(0b11000));
    }

    #[test]
    fn induced_subcomplex_examples() {
        let e2 = two_disjoint_edges();
        let w = 0b0101; // {1,3} 1-based
        let ind = e2.induced_subcomplex(w);
        assert_eq!(ind.facets(), &[0b0101]);

        let all = e2.induced_subcomplex(0b1111);
        assert_eq!(all, e2);

        let h = hanano();
        // W = {1,2,4} 1-based = bits 0,1,3: faces {12},{14},{24} (empty triangle)
        let ind = h.induced_subcomplex(0b01011);
        assert_eq!(ind.facets(), &[0b00011, 0b01001, 0b01010]);
    }

    /// Brute-force Alexander dual from the definition, over all 2^v
    /// subsets.
    fn brute_force_dual(c: &SimplicialComplex) -> Vec<u64> {
        let v = c.vertices();
        let range = (1u64 << v) - 1;
        let mut faces = Vec::new();
        for s in 0..=range {
            if !c.contains_face(range & !s) {
                faces.push(s);
            }
        }
        // maximal ones
        let mut maximal: Vec<u64> = Vec::new();
        for &f in &faces {
            if faces.iter().any(|&g| g != f && f & g == f) {
                continue;
            }
            maximal.push(f);
        }
        maximal.sort_unstable();
        maximal
    }

    #[test]
    fn alexander_dual_examples() {
        let dual = four_cycle().alexander_dual().unwrap();
        assert_eq!(dual, two_disjoint_edges());
        assert_eq!(dual.facets(), brute_force_dual(&four_cycle()).as_slice());

        let dd = two_disjoint_edges().alexander_dual().unwrap();
        assert_eq!(dd, four_cycle());

        // Boundary of the 2-simplex: every 2-subset is a face, so no
        // singleton survives in the dual; brute force over the 8 subsets
        // leaves only the empty face, with all three vertices ghosts.
        let bd =
            SimplicialComplex::from_vertex_lists(3, &[vec![0, 1], vec![0, 2], vec![1, 2]])
                .unwrap();
        let dual = bd.alexander_dual().unwrap();
        assert_eq!(dual.facets(), brute_force_dual(&bd).as_slice());
        assert_eq!(dual.facets(), &[0]);
        assert_eq!(dual.ghost_vertices(), 0b111);
        // Involution back to the boundary.
        assert_eq!(dual.alexander_dual().unwrap(), bd);

        let simplex = SimplicialComplex::from_vertex_lists(3, &[vec![0, 1, 2]]).unwrap();
        assert!(simplex.alexander_dual().is_err());
    }

    #[test]
    fn minimal_nonfaces_examples() {
        let h = hanano();
        let nf = h.minimal_nonfaces();
        // 1-based: {124},{125},{135},{234},{345}
        let expected: Vec<u64> = vec![
            vertices_to_mask(&[0, 1, 3], 5).unwrap(),
            vertices_to_mask(&[0, 1, 4], 5).unwrap(),
            vertices_to_mask(&[0, 2, 4], 5).unwrap(),
            vertices_to_mask(&[1, 2, 3], 5).unwrap(),
            vertices_to_mask(&[2, 3, 4], 5).unwrap(),
        ];
        let mut got = nf.clone();
        got.sort_unstable();
        let mut want = expected.clone();
        want.sort_unstable();
        assert_eq!(got, want);
        assert_eq!(h.indeg(), Some(3));

        let e2 = two_disjoint_edges();
        let mut nf = e2.minimal_nonfaces();
        nf.sort_unstable();
        assert_eq!(nf, vec![0b0011, 0b0110, 0b1001, 0b1100]);

        let simplex = SimplicialComplex::from_vertex_lists(3, &[vec![0, 1, 2]]).unwrap();
        assert!(simplex.minimal_nonfaces().is_empty());
        assert_eq!(simplex.indeg(), None);
    }

    #[test]
    fn minimal_nonfaces_match_brute_force() {
        // Brute force: minimal subsets that are not faces.
        for c in [hanano(), two_disjoint_edges(), four_cycle()] {
            let v = c.vertices();
            let mut brute = Vec::new();
            for s in 1u64..(1 << v) {
                if !c.contains_face(s) {
                    let minimal = mask_to_vertices(s)
                        .iter()
                        .all(|&x| c.contains_face(s & !(1 << x)));
                    if minimal {
                        brute.push(s);
                    }
                }
            }
            brute.sort_unstable();
            let mut got = c.minimal_nonfaces();
            got.sort_unstable();
            assert_eq!(got, brute);
        }
    }

    #[test]
    fn disjoint_union_examples() {
        let s = SimplicialComplex::from_vertex_lists(3, &[vec![0, 1, 2]]).unwrap();
        let u = s.disjoint_union(&s);
        assert_eq!(u.vertices(), 6);
        assert_eq!(u.facet_count(), 2);
        assert_eq!(u.dim(), 2);
        assert!(u.is_pure());

        // e copies of the (d-1)-simplex has f_{d-1} = e.
        let mut acc = s.clone();
        for _ in 1..4 {
            acc = acc.disjoint_union(&s);
        }
        assert_eq!(acc.f_vector().top(), 4);

        let edge = SimplicialComplex::from_vertex_lists(2, &[vec![0, 1]]).unwrap();
        let point = SimplicialComplex::from_vertex_lists(1, &[vec![0]]).unwrap();
        let np = edge.disjoint_union(&point);
        assert!(!np.is_pure());
    }

    #[test]
    fn cyclic_polytope_examples() {
        let c42 = cyclic_polytope_boundary(4, 2).unwrap();
        assert_eq!(c42, four_cycle());

        let c52 = cyclic_polytope_boundary(5, 2).unwrap();
        assert_eq!(c52.facet_count(), 5);
        assert!(c52.is_pure());
        assert_eq!(c52.dim(), 1);
        // every vertex has degree 2 => cycle
        for v in 0..5 {
            let deg = c52.facets().iter().filter(|&&f| f >> v & 1 == 1).count();
            assert_eq!(deg, 2);
        }

        let c64 = cyclic_polytope_boundary(6, 4).unwrap();
        assert!(c64.is_pure());
        assert_eq!(c64.dim(), 3);
        assert_eq!(c64.facet_count(), 9);

        assert!(cyclic_polytope_boundary(4, 3).is_err());
        assert!(cyclic_polytope_boundary(2, 2).is_err());
    }

    /// Facet-count formula for cyclic polytopes with f even:
    /// C(n - f/2, f/2) + C(n - f/2 - 1, f/2 - 1).
    #[test]
    fn cyclic_polytope_facet_count_formula() {
        for n in 4..=10usize {
            for f in [2usize, 4] {
                if n < f + 1 {
                    continue;
                }
                let c = cyclic_polytope_boundary(n, f).unwrap();
                let half = (f / 2) as i64;
                let expected = crate::binomial(n as i64 - half, half)
                    + crate::binomial(n as i64 - half - 1, half - 1);
                assert_eq!(
                    num_bigint::BigInt::from(c.facet_count()),
                    expected,
                    "C({n},{f})"
                );
            }
        }
    }

    #[test]
    fn canonical_form_invariance() {
        let h = hanano();
        let base = h.canonical_form().unwrap();
        // All 120 relabelings give the same encoding.
        let mut perm: Vec<usize> = (0..5).collect();
        let mut count = 0;
        permute_all(&mut perm, &mut |p| {
            let mapped: Vec<u64> = h.facets().iter().map(|&f| apply_perm(f, p)).collect();
            let relabeled = SimplicialComplex::build(5, &mapped).unwrap();
            assert_eq!(relabeled.canonical_form().unwrap(), base);
            count += 1;
        });
        assert_eq!(count, 120);

        let c4 = four_cycle().canonical_form().unwrap();
        let e2 = two_disjoint_edges().canonical_form().unwrap();
        assert_ne!(c4, e2);
    }

    #[test]
    fn canonical_form_cap() {
        let big = SimplicialComplex::from_vertex_lists(
            10,
            &[(0..10).collect::<Vec<_>>()],
        )
        .unwrap();
        assert!(big.canonical_form().is_err());
    }

    #[test]
    fn enumerate_small() {
        let raw = enumerate_pure_complexes(3, 1, false).unwrap();
        assert_eq!(raw.len(), 4);
        let classes = enumerate_pure_complexes(3, 1, true).unwrap();
        assert_eq!(classes.len(), 2);

        let raw = enumerate_pure_complexes(4, 2, false).unwrap();
        assert_eq!(raw.len(), 11);

        let classes = enumerate_pure_complexes(5, 2, true).unwrap();
        let hanano_key = hanano().canonical_form().unwrap();
        assert!(classes
            .iter()
            .any(|c| c.canonical_form().unwrap() == hanano_key));
    }

    #[test]
    fn enumerate_caps() {
        assert!(enumerate_pure_complexes(9, 3, false).is_err());
        assert!(enumerate_pure_complexes(7, 3, false).is_err()); // budget
    }

    #[test]
    fn enumeration_deduplicates_consistently() {
        // Every raw complex must be isomorphic to exactly one emitted class.
        let raw = enumerate_pure_complexes(4, 1, false).unwrap();
        let classes = enumerate_pure_complexes(4, 1, true).unwrap();
        let keys: Vec<_> = classes
            .iter()
            .map(|c| c.canonical_form().unwrap())
            .collect();
        for c in &raw {
            let k = c.canonical_form().unwrap();
            assert_eq!(keys.iter().filter(|&x| *x == k).count(), 1);
        }
    }
}
