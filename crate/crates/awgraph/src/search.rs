//! Exhaustive search for rainbow-free exact colorings and the anti-van der
//! Waerden number aw(G, k).
//!
//! aw(G, k) is the least r such that every exact r-coloring of G contains a
//! rainbow k-AP; if no such r exists among 1..=n, then aw(G, k) = n + 1
//! (for r > n there are no exact r-colorings at all, so the condition holds
//! vacuously). Merging two color classes of a rainbow-free exact r-coloring
//! yields a rainbow-free exact (r-1)-coloring, so the set of r admitting a
//! rainbow-free coloring is downward closed: aw is found by probing r
//! upward from k until the search proves infeasibility.
//!
//! Colorings are enumerated as restricted-growth strings over a fixed
//! vertex order (descending k-AP membership count, ties by ascending id):
//! the first vertex in order gets color 1, and each later vertex may reuse
//! any color seen so far or introduce the next unused one. This visits one
//! representative per color partition. Candidate colors are tried in
//! ascending order, so the first coloring found is the lexicographically
//! least feasible restricted-growth string; callers get a deterministic
//! certificate.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::ap::{enumerate_k_aps, is_rainbow, ArithmeticProgression};
use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Deterministic counters describing one search run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Search tree nodes visited (including the root and leaves).
    pub nodes: u64,
    /// Branches abandoned because propagation emptied a domain or
    /// completed a rainbow progression.
    pub domain_prunes: u64,
    /// Branches abandoned because too few unassigned vertices could still
    /// introduce a new color to reach exactness.
    pub capability_prunes: u64,
}

impl SearchStats {
    fn absorb(&mut self, other: SearchStats) {
        self.nodes += other.nodes;
        self.domain_prunes += other.domain_prunes;
        self.capability_prunes += other.capability_prunes;
    }
}

/// Result of computing aw(G, k).
#[derive(Debug, Clone, Serialize)]
pub struct AwResult {
    pub n: usize,
    pub k: usize,
    /// The anti-van der Waerden number; equals n + 1 when every exact
    /// coloring with at most n colors avoids rainbow k-APs.
    pub aw: u16,
    /// Largest color count admitting a rainbow-free exact coloring, i.e.
    /// aw - 1 (colorings with more than n colors do not exist, and merging
    /// color classes makes every smaller count feasible too).
    pub max_rainbow_free_r: u16,
    /// Number of k-APs in the graph.
    pub ap_count: usize,
    /// For each color count r below aw that was searched (k - 1 up to
    /// aw - 1, capped at n), the first rainbow-free exact r-coloring found.
    pub certificates: BTreeMap<u16, Coloring>,
    pub stats: SearchStats,
    /// Wall time of the whole probe sequence. Excluded from serialized
    /// output so that machine-readable results stay byte-identical across
    /// runs.
    #[serde(skip)]
    pub wall: Duration,
}

impl AwResult {
    /// The certificate for the largest feasible color count (aw - 1), if
    /// that count is positive.
    pub fn certificate(&self) -> Option<&Coloring> {
        self.certificates.get(&self.max_rainbow_free_r)
    }
}

/// Searches for a rainbow-free exact r-coloring of g with respect to
/// k-APs. Returns the deterministic first solution, or None if every exact
/// r-coloring contains a rainbow k-AP. r must be between 1 and 64; for
/// r > n there are no exact r-colorings, so the result is None.
pub fn find_rainbow_free_coloring(g: &Graph, k: usize, r: u16) -> Result<Option<Coloring>> {
    let (found, _) = find_rainbow_free_with_stats(g, k, r)?;
    Ok(found)
}

/// As [`find_rainbow_free_coloring`], also returning search counters.
pub fn find_rainbow_free_with_stats(
    g: &Graph,
    k: usize,
    r: u16,
) -> Result<(Option<Coloring>, SearchStats)> {
    let aps = enumerate_k_aps(g, k)?;
    search_with_aps(g, &aps, r)
}

/// Computes aw(G, k) by probing r upward from k, collecting a certificate
/// coloring for every feasible r along the way.
pub fn aw(g: &Graph, k: usize) -> Result<AwResult> {
    if k < 2 {
        return Err(Error::Precondition(
            "aw(G, k) is only computed for k >= 2".into(),
        ));
    }
    let start = Instant::now();
    let n = g.n();
    let aps = enumerate_k_aps(g, k)?;
    let mut certificates = BTreeMap::new();
    let mut stats = SearchStats::default();
    let mut aw_value = (n + 1) as u16;

    let trivial_r = (k - 1) as u16;
    if usize::from(trivial_r) <= n {
        let (found, s) = search_with_aps(g, &aps, trivial_r)?;
        stats.absorb(s);
        let cert = found.expect("fewer colors than terms cannot make a rainbow progression");
        certificates.insert(trivial_r, cert);
    }
    for r in k..=n {
        let (found, s) = search_with_aps(g, &aps, r as u16)?;
        stats.absorb(s);
        match found {
            Some(cert) => {
                certificates.insert(r as u16, cert);
            }
            None => {
                aw_value = r as u16;
                break;
            }
        }
    }
    Ok(AwResult {
        n,
        k,
        aw: aw_value,
        max_rainbow_free_r: aw_value - 1,
        ap_count: aps.len(),
        certificates,
        stats,
        wall: start.elapsed(),
    })
}

fn search_with_aps(
    g: &Graph,
    aps: &[ArithmeticProgression],
    r: u16,
) -> Result<(Option<Coloring>, SearchStats)> {
    if r == 0 {
        return Err(Error::Precondition("at least one color is required".into()));
    }
    if r > 64 {
        return Err(Error::Unsupported(format!(
            "searches over more than 64 colors are not supported (requested {r})"
        )));
    }
    if usize::from(r) > g.n() {
        return Ok((None, SearchStats::default()));
    }
    let mut solver = Solver::new(g, aps, r);
    let found = solver.run();
    let coloring = found.then(|| {
        Coloring::new(solver.color.clone()).expect("search yields total exact colorings")
    });
    if let Some(c) = &coloring {
        debug_assert!(aps.iter().all(|ap| !is_rainbow(ap, c)));
    }
    Ok((coloring, solver.stats))
}

struct Solver<'a> {
    g: &'a Graph,
    r: u16,
    /// Vertex lists of the progressions under guard.
    members: Vec<Vec<usize>>,
    /// For each vertex id - 1, indices into `members`.
    aps_of: Vec<Vec<u32>>,
    /// Static branching order: depth -> vertex id.
    order: Vec<usize>,
    /// vertex id - 1 -> assigned color, 0 while unassigned.
    color: Vec<u16>,
    /// vertex id - 1 -> bitmask of colors still allowed (bit c-1 = color c).
    dom: Vec<u64>,
    /// Undo log of domain overwrites: (vertex id - 1, previous mask).
    trail: Vec<(usize, u64)>,
    full_mask: u64,
    stats: SearchStats,
}

impl<'a> Solver<'a> {
    fn new(g: &'a Graph, aps: &[ArithmeticProgression], r: u16) -> Solver<'a> {
        let n = g.n();
        let members: Vec<Vec<usize>> = aps.iter().map(|ap| ap.vertices.clone()).collect();
        let mut aps_of = vec![Vec::new(); n];
        for (i, ap) in members.iter().enumerate() {
            for &v in ap {
                aps_of[v - 1].push(i as u32);
            }
        }
        let mut order: Vec<usize> = g.vertices().collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(aps_of[v - 1].len()), v));
        let full_mask = if r == 64 { u64::MAX } else { (1u64 << r) - 1 };
        Solver {
            g,
            r,
            members,
            aps_of,
            order,
            color: vec![0; n],
            dom: vec![full_mask; n],
            trail: Vec::new(),
            full_mask,
            stats: SearchStats::default(),
        }
    }

    fn run(&mut self) -> bool {
        self.solve(0, 0)
    }

    fn solve(&mut self, depth: usize, used: u16) -> bool {
        self.stats.nodes += 1;
        if depth == self.g.n() {
            return used == self.r;
        }
        let need = self.r - used;
        if need > 0 {
            let above = self.full_mask & (u64::MAX << used);
            let mut capable: u16 = 0;
            for i in depth..self.g.n() {
                if self.dom[self.order[i] - 1] & above != 0 {
                    capable += 1;
                    if capable >= need {
                        break;
                    }
                }
            }
            if capable < need {
                self.stats.capability_prunes += 1;
                return false;
            }
        }
        let v = self.order[depth];
        let max_c = (used + 1).min(self.r);
        let dom_v = self.dom[v - 1];
        for c in 1..=max_c {
            if dom_v & (1u64 << (c - 1)) == 0 {
                continue;
            }
            let mark = self.trail.len();
            self.color[v - 1] = c;
            if self.propagate(v) {
                if self.solve(depth + 1, used.max(c)) {
                    return true;
                }
            } else {
                self.stats.domain_prunes += 1;
            }
            self.color[v - 1] = 0;
            while self.trail.len() > mark {
                let (w, old) = self.trail.pop().unwrap();
                self.dom[w] = old;
            }
        }
        false
    }

    /// After assigning v, tightens domains along every progression through
    /// v: once all members but one hold pairwise distinct colors, the free
    /// member must repeat one of them. Returns false on a wipeout.
    fn propagate(&mut self, v: usize) -> bool {
        for idx in 0..self.aps_of[v - 1].len() {
            let ai = self.aps_of[v - 1][idx] as usize;
            let mut free: usize = 0;
            let mut free_count = 0;
            let mut seen: u64 = 0;
            let mut duplicate = false;
            for &w in &self.members[ai] {
                let col = self.color[w - 1];
                if col == 0 {
                    free = w;
                    free_count += 1;
                    if free_count > 1 {
                        break;
                    }
                } else {
                    let bit = 1u64 << (col - 1);
                    if seen & bit != 0 {
                        duplicate = true;
                        break;
                    }
                    seen |= bit;
                }
            }
            if duplicate || free_count > 1 {
                continue;
            }
            if free_count == 0 {
                debug_assert!(false, "a completed rainbow progression escaped propagation");
                return false;
            }
            let old = self.dom[free - 1];
            let new = old & seen;
            if new != old {
                if new == 0 {
                    return false;
                }
                self.trail.push((free - 1, old));
                self.dom[free - 1] = new;
            }
        }
        true
    }
}
