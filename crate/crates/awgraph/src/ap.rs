//! Arithmetic progressions of vertices, rainbow detection, and the
//! structural constraints rainbow-free colorings impose on product graphs.
//!
//! A k-term arithmetic progression (k-AP) in a connected graph is a sequence
//! of k distinct vertices v_1, ..., v_k such that d(v_i, v_{i+1}) equals a
//! fixed common difference d >= 1 for all i. Progressions are identified
//! with their vertex sets; each set is represented by its canonical witness,
//! the lexicographically least realizing sequence whose first vertex is
//! smaller than its last (ruling out reversals).

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::product::ProductGraph;

/// A k-term arithmetic progression, stored as its canonical witness
/// sequence together with the common difference that sequence realizes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ArithmeticProgression {
    pub vertices: Vec<usize>,
    pub difference: u32,
}

impl ArithmeticProgression {
    /// Number of terms.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    /// True if the sequence is a valid k-AP of `self.difference` in g.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let vs = &self.vertices;
        if vs.len() < 2 || self.difference == 0 {
            return false;
        }
        let mut seen = BTreeSet::new();
        for &v in vs {
            if v == 0 || v > g.n() || !seen.insert(v) {
                return false;
            }
        }
        vs.windows(2).all(|w| g.dist(w[0], w[1]) == self.difference)
    }
}

/// Enumerates all k-APs of g, deduplicated by vertex set and sorted by
/// canonical witness sequence. Requires k >= 2; returns an empty list when
/// k exceeds the number of vertices.
pub fn enumerate_k_aps(g: &Graph, k: usize) -> Result<Vec<ArithmeticProgression>> {
    if k < 2 {
        return Err(Error::Precondition(
            "arithmetic progressions need at least 2 terms".into(),
        ));
    }
    if k > g.n() {
        return Ok(Vec::new());
    }
    let mut best: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    let mut seq = Vec::with_capacity(k);
    let mut used = vec![false; g.n() + 1];
    for d in 1..=g.diameter() {
        for start in g.vertices() {
            seq.push(start);
            used[start] = true;
            extend_ap(g, d, k, &mut seq, &mut used, &mut best);
            used[start] = false;
            seq.pop();
        }
    }
    let mut aps: Vec<ArithmeticProgression> = best
        .into_values()
        .map(|vertices| {
            let difference = g.dist(vertices[0], vertices[1]);
            ArithmeticProgression { vertices, difference }
        })
        .collect();
    aps.sort();
    Ok(aps)
}

fn extend_ap(
    g: &Graph,
    d: u32,
    k: usize,
    seq: &mut Vec<usize>,
    used: &mut [bool],
    best: &mut BTreeMap<Vec<usize>, Vec<usize>>,
) {
    if seq.len() == k {
        if seq[0] < seq[k - 1] {
            let mut key = seq.clone();
            key.sort_unstable();
            match best.get_mut(&key) {
                Some(existing) => {
                    if *seq < *existing {
                        existing.clone_from(seq);
                    }
                }
                None => {
                    best.insert(key, seq.clone());
                }
            }
        }
        return;
    }
    let last = *seq.last().unwrap();
    for v in g.vertices() {
        if !used[v] && g.dist(last, v) == d {
            seq.push(v);
            used[v] = true;
            extend_ap(g, d, k, seq, used, best);
            used[v] = false;
            seq.pop();
        }
    }
}

/// True if the progression's vertices receive pairwise distinct colors.
pub fn is_rainbow(ap: &ArithmeticProgression, c: &Coloring) -> bool {
    let vs = &ap.vertices;
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            if c.color(vs[i]) == c.color(vs[j]) {
                return false;
            }
        }
    }
    true
}

/// First rainbow progression of a canonically ordered list, if any.
pub fn first_rainbow<'a>(
    aps: &'a [ArithmeticProgression],
    c: &Coloring,
) -> Option<&'a ArithmeticProgression> {
    aps.iter().find(|ap| is_rainbow(ap, c))
}

/// Outcome of scanning all k-APs of a graph under a coloring.
#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub n: usize,
    pub color_count: u16,
    pub k: usize,
    pub ap_count: usize,
    /// First rainbow k-AP in canonical order, or None if the coloring is
    /// rainbow-free.
    pub rainbow: Option<ArithmeticProgression>,
}

impl ValidationReport {
    pub fn is_rainbow_free(&self) -> bool {
        self.rainbow.is_none()
    }
}

/// Checks a coloring of g against all k-APs, reporting the first rainbow
/// witness in canonical order or confirming none exists.
pub fn validate_coloring(g: &Graph, c: &Coloring, k: usize) -> Result<ValidationReport> {
    if c.n() != g.n() {
        return Err(Error::InvalidColoring(format!(
            "coloring covers {} vertices but the graph has {}",
            c.n(),
            g.n()
        )));
    }
    let aps = enumerate_k_aps(g, k)?;
    let rainbow = first_rainbow(&aps, c).cloned();
    Ok(ValidationReport {
        n: g.n(),
        color_count: c.color_count(),
        k,
        ap_count: aps.len(),
        rainbow,
    })
}

/// A short structure showing that three colors appear close together: an
/// isometric path or a triangle whose vertices carry at least three
/// distinct colors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ColorSpreadWitness {
    /// An isometric path (consecutive vertices adjacent, endpoint distance
    /// equal to its length) with >= 3 colors among its vertices.
    Path(Vec<usize>),
    /// A triangle on three distinct colors.
    Triangle([usize; 3]),
}

impl ColorSpreadWitness {
    /// Re-checks the witness against a graph and coloring.
    pub fn verify(&self, g: &Graph, c: &Coloring) -> bool {
        match self {
            ColorSpreadWitness::Triangle([a, b, x]) => {
                let distinct = a != b && b != x && a != x;
                distinct
                    && g.adjacent(*a, *b)
                    && g.adjacent(*b, *x)
                    && g.adjacent(*a, *x)
                    && color_spread(&[*a, *b, *x], c) == 3
            }
            ColorSpreadWitness::Path(p) => {
                if p.len() < 3 {
                    return false;
                }
                let mut seen = BTreeSet::new();
                if !p.iter().all(|&v| v >= 1 && v <= g.n() && seen.insert(v)) {
                    return false;
                }
                p.windows(2).all(|w| g.adjacent(w[0], w[1]))
                    && g.dist(p[0], p[p.len() - 1]) as usize == p.len() - 1
                    && color_spread(p, c) >= 3
            }
        }
    }
}

fn color_spread(vs: &[usize], c: &Coloring) -> usize {
    vs.iter().map(|&v| c.color(v)).collect::<BTreeSet<_>>().len()
}

/// Finds an isometric path or triangle carrying at least three colors.
///
/// Every coloring of a connected graph with at least three colors admits
/// one. Triangles are scanned first in lexicographic vertex order; then
/// geodesics are searched per ordered pair of endpoints, extending paths by
/// the smallest eligible vertex first, so the result is deterministic.
pub fn find_tricolored_geodesic_or_triangle(
    g: &Graph,
    c: &Coloring,
) -> Result<ColorSpreadWitness> {
    if c.n() != g.n() {
        return Err(Error::InvalidColoring(format!(
            "coloring covers {} vertices but the graph has {}",
            c.n(),
            g.n()
        )));
    }
    if c.color_count() < 3 {
        return Err(Error::Precondition(
            "a tricolored substructure needs a coloring with at least three colors".into(),
        ));
    }
    for a in g.vertices() {
        for &b in g.neighbors(a) {
            if b <= a {
                continue;
            }
            for &x in g.neighbors(b) {
                if x <= b || !g.adjacent(a, x) {
                    continue;
                }
                if color_spread(&[a, b, x], c) == 3 {
                    return Ok(ColorSpreadWitness::Triangle([a, b, x]));
                }
            }
        }
    }
    for s in g.vertices() {
        for t in g.vertices() {
            if s >= t {
                continue;
            }
            let mut path = vec![s];
            if let Some(found) = tricolored_geodesic(g, c, t, &mut path) {
                return Ok(ColorSpreadWitness::Path(found));
            }
        }
    }
    Err(Error::Internal(
        "no tricolored isometric path or triangle exists, contradicting that \
         any connected graph colored with three or more colors contains one"
            .into(),
    ))
}

fn tricolored_geodesic(
    g: &Graph,
    c: &Coloring,
    t: usize,
    path: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    let x = *path.last().unwrap();
    if x == t {
        if color_spread(path, c) >= 3 {
            return Some(path.clone());
        }
        return None;
    }
    let dx = g.dist(x, t);
    for &w in g.neighbors(x) {
        if g.dist(w, t) + 1 == dx {
            path.push(w);
            if let Some(found) = tricolored_geodesic(g, c, t, path) {
                return Some(found);
            }
            path.pop();
        }
    }
    None
}

/// Result of checking one copy-structure constraint.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum LemmaOutcome {
    /// The constraint held on every instance checked.
    Holds { checked: usize },
    /// A counterexample: the copy family ("left" or "right"), the indexing
    /// vertices of the offending copies, and the offending color set.
    Violated {
        family: String,
        indices: Vec<usize>,
        colors: Vec<u16>,
    },
    /// The constraint's hypotheses do not apply to this product.
    Skipped { reason: String },
}

impl LemmaOutcome {
    pub fn is_violated(&self) -> bool {
        matches!(self, LemmaOutcome::Violated { .. })
    }
}

/// How a rainbow-free coloring distributes colors over the factor copies of
/// a product graph.
///
/// For a rainbow-free exact coloring of G x H with at least three colors:
/// each copy of a factor sees at most 2 colors (when both factors have at
/// least 2 vertices); when the indexing factor has at least 3 vertices and
/// every copy in the family sees at most 2 colors, the union of two
/// adjacent copies also sees at most 2 colors; and for any ordered pair of
/// copies, the second sees at most 1 color absent from the first (no size
/// hypothesis).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructuralLemmaReport {
    pub copy_bound: LemmaOutcome,
    pub adjacent_union_bound: LemmaOutcome,
    pub difference_bound: LemmaOutcome,
}

impl StructuralLemmaReport {
    /// True if no constraint was violated (held or skipped).
    pub fn has_violation(&self) -> bool {
        self.copy_bound.is_violated()
            || self.adjacent_union_bound.is_violated()
            || self.difference_bound.is_violated()
    }
}

struct CopyFamily {
    name: &'static str,
    /// Adjacency and vertex set of the factor indexing the copies.
    indexer_edges: Vec<(usize, usize)>,
    /// colors[i - 1] = set of colors on copy i.
    colors: Vec<BTreeSet<u16>>,
    /// Number of vertices of the copied factor.
    copied_n: usize,
}

/// Checks the three copy-structure constraints for a rainbow-free exact
/// coloring of a product graph with at least three colors. A coloring that
/// contains a rainbow 3-AP is rejected as a precondition failure.
pub fn check_structural_lemmas(
    p: &ProductGraph,
    c: &Coloring,
) -> Result<StructuralLemmaReport> {
    let g = p.graph();
    if c.n() != g.n() {
        return Err(Error::InvalidColoring(format!(
            "coloring covers {} vertices but the product has {}",
            c.n(),
            g.n()
        )));
    }
    if c.color_count() < 3 {
        return Err(Error::Precondition(
            "copy-structure constraints apply to colorings with at least three colors".into(),
        ));
    }
    let aps = enumerate_k_aps(g, 3)?;
    if let Some(rb) = first_rainbow(&aps, c) {
        return Err(Error::Precondition(format!(
            "coloring is not rainbow-free: {:?} with difference {} is rainbow",
            rb.vertices, rb.difference
        )));
    }

    let mut families = Vec::new();
    for (name, indexer, copied_n) in [
        ("left", p.right(), p.left().n()),
        ("right", p.left(), p.right().n()),
    ] {
        let mut colors = Vec::with_capacity(indexer.n());
        for i in indexer.vertices() {
            let copy = if name == "left" { p.left_copy(i)? } else { p.right_copy(i)? };
            colors.push(copy.iter().map(|&v| c.color(v)).collect::<BTreeSet<u16>>());
        }
        families.push(CopyFamily {
            name,
            indexer_edges: indexer.edges(),
            colors,
            copied_n,
        });
    }

    Ok(StructuralLemmaReport {
        copy_bound: check_copy_bound(&families),
        adjacent_union_bound: check_union_bound(&families),
        difference_bound: check_difference_bound(&families),
    })
}

fn skipped(reason: &str) -> LemmaOutcome {
    LemmaOutcome::Skipped { reason: reason.into() }
}

fn check_copy_bound(families: &[CopyFamily]) -> LemmaOutcome {
    let mut checked = 0;
    let mut any = false;
    for fam in families {
        if fam.copied_n < 2 || fam.colors.len() < 2 {
            continue;
        }
        any = true;
        for (idx, colors) in fam.colors.iter().enumerate() {
            checked += 1;
            if colors.len() > 2 {
                return LemmaOutcome::Violated {
                    family: fam.name.into(),
                    indices: vec![idx + 1],
                    colors: colors.iter().copied().collect(),
                };
            }
        }
    }
    if any {
        LemmaOutcome::Holds { checked }
    } else {
        skipped("both factors must have at least 2 vertices")
    }
}

fn check_union_bound(families: &[CopyFamily]) -> LemmaOutcome {
    let mut checked = 0;
    let mut any = false;
    for fam in families {
        // Hypotheses: the indexing factor has at least 3 vertices and every
        // copy in this family already satisfies the 2-color bound.
        if fam.colors.len() < 3 || fam.colors.iter().any(|s| s.len() > 2) {
            continue;
        }
        any = true;
        for &(i, j) in &fam.indexer_edges {
            checked += 1;
            let union: BTreeSet<u16> =
                fam.colors[i - 1].union(&fam.colors[j - 1]).copied().collect();
            if union.len() > 2 {
                return LemmaOutcome::Violated {
                    family: fam.name.into(),
                    indices: vec![i, j],
                    colors: union.into_iter().collect(),
                };
            }
        }
    }
    if any {
        LemmaOutcome::Holds { checked }
    } else {
        skipped("no family has an indexing factor with at least 3 vertices and all copies 2-colored")
    }
}

fn check_difference_bound(families: &[CopyFamily]) -> LemmaOutcome {
    let mut checked = 0;
    for fam in families {
        let m = fam.colors.len();
        for i in 1..=m {
            for j in 1..=m {
                if i == j {
                    continue;
                }
                checked += 1;
                let diff: Vec<u16> = fam.colors[j - 1]
                    .difference(&fam.colors[i - 1])
                    .copied()
                    .collect();
                if diff.len() > 1 {
                    return LemmaOutcome::Violated {
                        family: fam.name.into(),
                        indices: vec![i, j],
                        colors: diff,
                    };
                }
            }
        }
    }
    LemmaOutcome::Holds { checked }
}
