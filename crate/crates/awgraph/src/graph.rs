//! Simple connected graphs with 1-based vertex labels and an eagerly
//! computed all-pairs distance matrix.
//!
//! Connectivity is part of the type's contract: every constructor rejects
//! disconnected input with a witness pair, so distances are total.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// All-pairs distances of a connected graph, immutable once built.
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    n: usize,
    // Row-major (n+1) x (n+1); row and column 0 are unused padding so that
    // 1-based labels index directly.
    d: Vec<u32>,
}

impl DistanceMatrix {
    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        debug_assert!(u >= 1 && u <= self.n && v >= 1 && v <= self.n);
        self.d[u * (self.n + 1) + v]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Largest entry; the diameter of the underlying graph.
    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }
}

/// Per-vertex eccentricities with the derived diameter and peripheral set.
#[derive(Debug, Clone)]
pub struct Eccentricities {
    /// 1-based; `ecc[0]` is unused padding.
    pub ecc: Vec<u32>,
    pub diameter: u32,
    /// Vertices whose eccentricity equals the diameter, ascending.
    pub peripheral: Vec<usize>,
}

/// Result of 2-coloring a graph: the two classes, or an odd cycle showing
/// why none exists.
#[derive(Debug, Clone)]
pub enum Bipartition {
    /// `left` contains vertex 1; both sides are sorted ascending.
    Parts { left: Vec<usize>, right: Vec<usize> },
    /// Vertices of an odd cycle in order; consecutive entries (cyclically)
    /// are adjacent.
    OddCycle(Vec<usize>),
}

/// A simple connected graph. Vertices are labeled 1..=n.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    m: usize,
    // Sorted neighbor lists; index 0 unused.
    neighbors: Vec<Vec<usize>>,
    dist: DistanceMatrix,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse; labels
    /// must lie in 1..=n, self-loops are rejected, and the result must be
    /// connected.
    ///
    /// # Errors
    ///
    /// [`Error::VertexRange`], [`Error::InvalidEdge`] for malformed edges,
    /// [`Error::Disconnected`] with a witness pair otherwise.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::Input("graph must have at least one vertex".into()));
        }
        let mut adj = vec![false; (n + 1) * (n + 1)];
        let mut neighbors = vec![Vec::new(); n + 1];
        let mut m = 0;
        for &(u, v) in edges {
            if u < 1 || u > n {
                return Err(Error::VertexRange { v: u, n });
            }
            if v < 1 || v > n {
                return Err(Error::VertexRange { v, n });
            }
            if u == v {
                return Err(Error::InvalidEdge {
                    u,
                    v,
                    reason: "self-loop".into(),
                });
            }
            if !adj[u * (n + 1) + v] {
                adj[u * (n + 1) + v] = true;
                adj[v * (n + 1) + u] = true;
                neighbors[u].push(v);
                neighbors[v].push(u);
                m += 1;
            }
        }
        for list in neighbors.iter_mut() {
            list.sort_unstable();
        }
        let dist = bfs_all_pairs(n, &neighbors)?;
        Ok(Graph {
            n,
            m,
            neighbors,
            dist,
        })
    }

    /// The path u_1 - u_2 - ... - u_n.
    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges).expect("path is connected")
    }

    /// The cycle on n >= 3 vertices in label order.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        edges.push((n, 1));
        Graph::from_edges(n, &edges).expect("cycle is connected")
    }

    /// The star K_{1,leaves}: center 1, leaves 2..=leaves+1.
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (2..=leaves + 1).map(|v| (1, v)).collect();
        Graph::from_edges(leaves + 1, &edges).expect("star is connected")
    }

    /// The complete graph K_n.
    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).expect("complete graph is connected")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.n
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        debug_assert!(v >= 1 && v <= self.n);
        &self.neighbors[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Distance between two vertices; total because the graph is connected.
    ///
    /// # Panics
    ///
    /// If a label is outside 1..=n.
    #[inline]
    pub fn dist(&self, u: usize, v: usize) -> u32 {
        assert!(u >= 1 && u <= self.n && v >= 1 && v <= self.n, "vertex out of range");
        self.dist.get(u, v)
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.dist
    }

    #[inline]
    pub fn diameter(&self) -> u32 {
        self.dist.diameter()
    }

    /// Edges as (u, v) with u < v, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 1..=self.n {
            for &v in &self.neighbors[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Whether the graph is a tree (connected with n - 1 edges).
    pub fn is_tree(&self) -> bool {
        self.m + 1 == self.n
    }

    pub fn eccentricities(&self) -> Eccentricities {
        let mut ecc = vec![0u32; self.n + 1];
        for v in 1..=self.n {
            ecc[v] = (1..=self.n).map(|u| self.dist.get(v, u)).max().unwrap();
        }
        let diameter = ecc[1..].iter().copied().max().unwrap_or(0);
        let peripheral = (1..=self.n).filter(|&v| ecc[v] == diameter).collect();
        Eccentricities {
            ecc,
            diameter,
            peripheral,
        }
    }

    /// Lexicographically least shortest path from u to v, as a vertex
    /// sequence starting at u.
    pub fn lex_least_geodesic(&self, u: usize, v: usize) -> Vec<usize> {
        let mut path = vec![u];
        let mut cur = u;
        while cur != v {
            let step = self.dist.get(cur, v);
            let next = self
                .neighbors(cur)
                .iter()
                .copied()
                .find(|&w| self.dist.get(w, v) + 1 == step)
                .expect("connected graph has a decreasing neighbor");
            path.push(next);
            cur = next;
        }
        path
    }

    /// Splits the vertices into the two sides of a bipartition, or returns
    /// an odd cycle when the graph is not bipartite.
    pub fn bipartition(&self) -> Bipartition {
        // BFS 2-coloring from vertex 1; the graph is connected.
        let mut side = vec![u8::MAX; self.n + 1];
        let mut parent = vec![0usize; self.n + 1];
        side[1] = 0;
        let mut queue = VecDeque::from([1usize]);
        while let Some(u) = queue.pop_front() {
            for &w in self.neighbors(u) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[u];
                    parent[w] = u;
                    queue.push_back(w);
                } else if side[w] == side[u] {
                    return Bipartition::OddCycle(odd_cycle_witness(&parent, u, w));
                }
            }
        }
        let left = (1..=self.n).filter(|&v| side[v] == 0).collect();
        let right = (1..=self.n).filter(|&v| side[v] == 1).collect();
        Bipartition::Parts { left, right }
    }
}

/// Closed odd walk through the offending edge (u, w), shrunk to a simple
/// cycle by cutting both BFS-tree branches at their meeting point.
fn odd_cycle_witness(parent: &[usize], u: usize, w: usize) -> Vec<usize> {
    let root_path = |mut x: usize| {
        let mut p = vec![x];
        while parent[x] != 0 {
            x = parent[x];
            p.push(x);
        }
        p
    };
    let pu = root_path(u);
    let pw = root_path(w);
    // Last common vertex of both paths (first common ancestor from below).
    let common: std::collections::HashSet<_> = pw.iter().copied().collect();
    let meet = *pu.iter().find(|x| common.contains(x)).unwrap();
    let mut cycle: Vec<usize> = pu.iter().copied().take_while(|&x| x != meet).collect();
    cycle.push(meet);
    let tail: Vec<usize> = pw.iter().copied().take_while(|&x| x != meet).collect();
    cycle.extend(tail.into_iter().rev());
    cycle
}

fn bfs_all_pairs(n: usize, neighbors: &[Vec<usize>]) -> Result<DistanceMatrix> {
    let stride = n + 1;
    let mut d = vec![u32::MAX; stride * stride];
    for s in 1..=n {
        let row = &mut d[s * stride..(s + 1) * stride];
        row[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &neighbors[u] {
                if row[w] == u32::MAX {
                    row[w] = row[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if s == 1 {
            if let Some(missing) = (1..=n).find(|&v| row[v] == u32::MAX) {
                return Err(Error::Disconnected { u: 1, v: missing });
            }
        }
    }
    // Zero the unused row and column 0 so aggregate scans can ignore them.
    for v in 0..stride {
        d[v] = 0;
        d[v * stride] = 0;
    }
    Ok(DistanceMatrix { n, d })
}

/// Checks whether `map` embeds `sub` isometrically into `host`.
///
/// `map[i - 1]` is the host vertex for sub vertex i. The map must be
/// injective and carry edges to edges; violations are errors, not `false`.
/// The return value reports whether all pairwise distances are preserved.
pub fn is_isometric_embedding(sub: &Graph, host: &Graph, map: &[usize]) -> Result<bool> {
    if map.len() != sub.n() {
        return Err(Error::Precondition(format!(
            "map has {} entries for a {}-vertex graph",
            map.len(),
            sub.n()
        )));
    }
    for &img in map {
        if img < 1 || img > host.n() {
            return Err(Error::VertexRange { v: img, n: host.n() });
        }
    }
    let mut seen = vec![false; host.n() + 1];
    for &img in map {
        if seen[img] {
            return Err(Error::Precondition(format!(
                "map is not injective: host vertex {img} hit twice"
            )));
        }
        seen[img] = true;
    }
    for (u, v) in sub.edges() {
        if !host.adjacent(map[u - 1], map[v - 1]) {
            return Err(Error::Precondition(format!(
                "map is not a homomorphism: edge ({u}, {v}) has non-adjacent image"
            )));
        }
    }
    for u in 1..=sub.n() {
        for v in u + 1..=sub.n() {
            if sub.dist(u, v) != host.dist(map[u - 1], map[v - 1]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex_graph_is_valid() {
        let g = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.diameter(), 0);
        assert_eq!(g.eccentricities().peripheral, vec![1]);
    }

    #[test]
    fn disconnected_input_reports_witness_pair() {
        let err = Graph::from_edges(4, &[(1, 2), (3, 4)]).unwrap_err();
        match err {
            Error::Disconnected { u: 1, v } => assert!(v == 3 || v == 4),
            other => panic!("expected Disconnected, got {other:?}"),
        }
    }

    #[test]
    fn self_loop_rejected() {
        assert!(matches!(
            Graph::from_edges(2, &[(1, 1), (1, 2)]),
            Err(Error::InvalidEdge { .. })
        ));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(2, &[(1, 2), (2, 1), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn path_distances_and_diameter() {
        let g = Graph::path(5);
        assert_eq!(g.dist(1, 5), 4);
        assert_eq!(g.dist(2, 4), 2);
        assert_eq!(g.diameter(), 4);
        assert!(g.is_tree());
    }

    #[test]
    fn cycle_distances_wrap() {
        let g = Graph::cycle(6);
        assert_eq!(g.dist(1, 4), 3);
        assert_eq!(g.dist(1, 5), 2);
        assert_eq!(g.diameter(), 3);
        assert!(!g.is_tree());
    }

    #[test]
    fn spider_peripheral_set() {
        // Path 1-2-3 with extra leaves 4 and 5 on vertex 3.
        let g = Graph::from_edges(5, &[(1, 2), (2, 3), (3, 4), (3, 5)]).unwrap();
        let ecc = g.eccentricities();
        assert_eq!(ecc.diameter, 3);
        assert_eq!(ecc.peripheral, vec![1, 4, 5]);
    }

    #[test]
    fn even_cycle_bipartition_sides() {
        match Graph::cycle(6).bipartition() {
            Bipartition::Parts { left, right } => {
                assert_eq!(left, vec![1, 3, 5]);
                assert_eq!(right, vec![2, 4, 6]);
            }
            Bipartition::OddCycle(_) => panic!("C6 is bipartite"),
        }
    }

    #[test]
    fn odd_cycle_witness_is_an_odd_cycle() {
        let g = Graph::cycle(5);
        match g.bipartition() {
            Bipartition::Parts { .. } => panic!("C5 is not bipartite"),
            Bipartition::OddCycle(cyc) => {
                assert!(cyc.len() % 2 == 1 && cyc.len() >= 3);
                for i in 0..cyc.len() {
                    assert!(g.adjacent(cyc[i], cyc[(i + 1) % cyc.len()]));
                }
            }
        }
    }

    #[test]
    fn isometric_embedding_of_cycle_segments() {
        let c6 = Graph::cycle(6);
        // Four consecutive vertices form an isometric P4.
        let p4 = Graph::path(4);
        assert!(is_isometric_embedding(&p4, &c6, &[1, 2, 3, 4]).unwrap());
        // Five consecutive vertices do not: the ends are at distance 2.
        let p5 = Graph::path(5);
        assert!(!is_isometric_embedding(&p5, &c6, &[1, 2, 3, 4, 5]).unwrap());
    }

    #[test]
    fn embedding_map_validation_errors() {
        let p2 = Graph::path(2);
        let p3 = Graph::path(3);
        assert!(matches!(
            is_isometric_embedding(&p2, &p3, &[1]),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            is_isometric_embedding(&p2, &p3, &[2, 2]),
            Err(Error::Precondition(_))
        ));
        // 1 and 3 are not adjacent in P3: not a homomorphism.
        assert!(matches!(
            is_isometric_embedding(&p2, &p3, &[1, 3]),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn lex_least_geodesic_prefers_small_labels() {
        let c4 = Graph::cycle(4);
        // Both 1-2-3 and 1-4-3 are geodesics; the lex-least goes through 2.
        assert_eq!(c4.lex_least_geodesic(1, 3), vec![1, 2, 3]);
    }
}
