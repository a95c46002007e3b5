//! Tree structure relative to a spine: a fixed path realizing the diameter.
//!
//! Every vertex of a tree has a unique nearest spine vertex (its root), and
//! the branch B_v of a spine vertex v collects the vertices rooted at v.
//! A graph is k-peripheral when k vertices are pairwise at distance equal
//! to the diameter; 3-peripheral trees have even diameter and a unique
//! center equidistant from any such triple at distance diam/2.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A tree together with a chosen spine and the induced decomposition.
#[derive(Debug, Clone)]
pub struct TreeStructure {
    tree: Graph,
    spine: Vec<usize>,
    /// root[v] = nearest spine vertex to v; index 0 unused.
    root: Vec<usize>,
    branches: BTreeMap<usize, Vec<usize>>,
    peripheral: Vec<usize>,
    /// Lex-least pairwise-diametral k-set for each k that admits one.
    peripheral_witnesses: BTreeMap<usize, Vec<usize>>,
}

impl TreeStructure {
    /// Analyzes `tree` along its default spine (see [`spine`]).
    pub fn new(tree: Graph) -> Result<TreeStructure> {
        let s = spine(&tree)?;
        TreeStructure::with_spine(tree, s)
    }

    /// Analyzes `tree` along a caller-chosen spine, validated to be a
    /// diametral path.
    pub fn with_spine(tree: Graph, spine: Vec<usize>) -> Result<TreeStructure> {
        let decomposition = branch_decomposition(&tree, &spine)?;
        let ecc = tree.eccentricities();
        let mut peripheral_witnesses = BTreeMap::new();
        let mut k = 2;
        while let Some(witness) = is_k_peripheral(&tree, k)? {
            peripheral_witnesses.insert(k, witness);
            k += 1;
        }
        Ok(TreeStructure {
            tree,
            spine,
            root: decomposition.root,
            branches: decomposition.branches,
            peripheral: ecc.peripheral,
            peripheral_witnesses,
        })
    }

    pub fn tree(&self) -> &Graph {
        &self.tree
    }

    pub fn spine(&self) -> &[usize] {
        &self.spine
    }

    /// The nearest spine vertex to v.
    pub fn root_of(&self, v: usize) -> Result<usize> {
        if v < 1 || v > self.tree.n() {
            return Err(Error::VertexRange { v, n: self.tree.n() });
        }
        Ok(self.root[v])
    }

    /// The branch of a spine vertex (includes the spine vertex itself).
    pub fn branch(&self, spine_vertex: usize) -> Result<&[usize]> {
        self.branches
            .get(&spine_vertex)
            .map(Vec::as_slice)
            .ok_or_else(|| Error::Precondition(format!("{spine_vertex} is not a spine vertex")))
    }

    pub fn branches(&self) -> &BTreeMap<usize, Vec<usize>> {
        &self.branches
    }

    pub fn peripheral(&self) -> &[usize] {
        &self.peripheral
    }

    pub fn on_spine(&self, v: usize) -> bool {
        self.spine.contains(&v)
    }

    /// Lex-least pairwise-diametral k-set, if the tree has one.
    pub fn k_peripheral_witness(&self, k: usize) -> Option<&[usize]> {
        self.peripheral_witnesses.get(&k).map(Vec::as_slice)
    }

    pub fn is_3_peripheral(&self) -> bool {
        self.peripheral_witnesses.contains_key(&3)
    }
}

/// The decomposition of a tree along a spine.
#[derive(Debug, Clone)]
pub struct BranchDecomposition {
    /// root[v] = nearest spine vertex to v; index 0 unused.
    pub root: Vec<usize>,
    /// Spine vertex -> sorted members of its branch.
    pub branches: BTreeMap<usize, Vec<usize>>,
}

fn require_tree(t: &Graph) -> Result<()> {
    if !t.is_tree() {
        return Err(Error::NotATree(format!(
            "{} vertices with {} edges",
            t.n(),
            t.edge_count()
        )));
    }
    Ok(())
}

/// The unique path between two vertices of a tree, from u to v.
pub fn tree_path(t: &Graph, u: usize, v: usize) -> Vec<usize> {
    let mut parent = vec![0usize; t.n() + 1];
    let mut queue = std::collections::VecDeque::from([u]);
    parent[u] = u;
    while let Some(x) = queue.pop_front() {
        if x == v {
            break;
        }
        for &w in t.neighbors(x) {
            if parent[w] == 0 {
                parent[w] = x;
                queue.push_back(w);
            }
        }
    }
    let mut path = vec![v];
    let mut cur = v;
    while cur != u {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    path
}

/// The default spine of a tree: the path joining the lexicographically
/// least ordered diametral pair.
pub fn spine(t: &Graph) -> Result<Vec<usize>> {
    require_tree(t)?;
    let diam = t.diameter();
    let pair = (1..=t.n())
        .flat_map(|u| (1..=t.n()).map(move |v| (u, v)))
        .find(|&(u, v)| u != v && t.dist(u, v) == diam);
    match pair {
        Some((u, v)) => Ok(tree_path(t, u, v)),
        // Only the one-vertex tree has no distinct diametral pair.
        None => Ok(vec![1]),
    }
}

/// Roots every vertex at its nearest spine vertex and groups the branches.
///
/// # Errors
///
/// [`Error::NotATree`], and [`Error::Precondition`] if `spine` is not a
/// diametral path of `t`.
pub fn branch_decomposition(t: &Graph, spine: &[usize]) -> Result<BranchDecomposition> {
    require_tree(t)?;
    let n = t.n();
    if spine.is_empty() {
        return Err(Error::Precondition("empty spine".into()));
    }
    let mut seen = vec![false; n + 1];
    for &v in spine {
        if v < 1 || v > n {
            return Err(Error::VertexRange { v, n });
        }
        if seen[v] {
            return Err(Error::Precondition(format!("spine repeats vertex {v}")));
        }
        seen[v] = true;
    }
    for w in spine.windows(2) {
        if !t.adjacent(w[0], w[1]) {
            return Err(Error::Precondition(format!(
                "spine vertices {} and {} are not adjacent",
                w[0], w[1]
            )));
        }
    }
    if spine.len() as u32 != t.diameter() + 1 {
        return Err(Error::Precondition(format!(
            "spine has {} vertices but the diameter is {}",
            spine.len(),
            t.diameter()
        )));
    }
    let mut root = vec![0usize; n + 1];
    for v in 1..=n {
        let (mut best, mut best_d, mut ties) = (0usize, u32::MAX, 0usize);
        for &s in spine {
            let d = t.dist(v, s);
            if d < best_d {
                (best, best_d, ties) = (s, d, 1);
            } else if d == best_d {
                ties += 1;
            }
        }
        if ties != 1 {
            return Err(Error::Internal(format!(
                "vertex {v} has {ties} nearest spine vertices; spine projection must be unique in a tree"
            )));
        }
        root[v] = best;
    }
    let mut branches: BTreeMap<usize, Vec<usize>> =
        spine.iter().map(|&s| (s, Vec::new())).collect();
    for v in 1..=n {
        branches.get_mut(&root[v]).unwrap().push(v);
    }
    Ok(BranchDecomposition { root, branches })
}

/// Lex-least set of k vertices pairwise at distance diam(g), if one exists.
/// Such vertices are necessarily peripheral, so the search backtracks over
/// the peripheral set only.
pub fn is_k_peripheral(g: &Graph, k: usize) -> Result<Option<Vec<usize>>> {
    if k < 2 {
        return Err(Error::Precondition(format!("k-peripheral needs k >= 2, got {k}")));
    }
    let diam = g.diameter();
    let peripheral = g.eccentricities().peripheral;
    let mut chosen: Vec<usize> = Vec::with_capacity(k);

    fn extend(
        g: &Graph,
        diam: u32,
        peripheral: &[usize],
        from: usize,
        chosen: &mut Vec<usize>,
        k: usize,
    ) -> bool {
        if chosen.len() == k {
            return true;
        }
        for (idx, &cand) in peripheral.iter().enumerate().skip(from) {
            if chosen.iter().all(|&c| g.dist(c, cand) == diam) {
                chosen.push(cand);
                if extend(g, diam, peripheral, idx + 1, chosen, k) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    if extend(g, diam, &peripheral, 0, &mut chosen, k) {
        Ok(Some(chosen))
    } else {
        Ok(None)
    }
}

/// The unique vertex of a tree equidistant from three pairwise-diametral
/// vertices; it lies at distance diam/2 from each.
pub fn peripheral_center(t: &Graph, x: usize, y: usize, z: usize) -> Result<usize> {
    require_tree(t)?;
    let diam = t.diameter();
    for &(a, b) in &[(x, y), (x, z), (y, z)] {
        if a == b || t.dist(a, b) != diam {
            return Err(Error::Precondition(format!(
                "vertices {a} and {b} are not a diametral pair"
            )));
        }
    }
    if diam % 2 != 0 {
        return Err(Error::Internal(
            "three pairwise-diametral vertices in a tree force an even diameter".into(),
        ));
    }
    let half = diam / 2;
    let mid = tree_path(t, x, y)[half as usize];
    let equidistant: Vec<usize> = (1..=t.n())
        .filter(|&v| t.dist(v, x) == half && t.dist(v, y) == half && t.dist(v, z) == half)
        .collect();
    if equidistant != [mid] {
        return Err(Error::Internal(format!(
            "expected the x-y midpoint {mid} to be the unique equidistant vertex, found {equidistant:?}"
        )));
    }
    Ok(mid)
}

/// For u off the spine with root x, and v outside the branch B_x, returns a
/// spine vertex at the same distance from v as u (first in spine order).
pub fn equidistant_spine_vertex(ts: &TreeStructure, u: usize, v: usize) -> Result<usize> {
    let t = ts.tree();
    let n = t.n();
    for w in [u, v] {
        if w < 1 || w > n {
            return Err(Error::VertexRange { v: w, n });
        }
    }
    if ts.on_spine(u) {
        return Err(Error::Precondition(format!("{u} lies on the spine")));
    }
    let root = ts.root_of(u)?;
    if ts.branch(root)?.contains(&v) {
        return Err(Error::Precondition(format!(
            "{v} lies in the branch of {u}'s root {root}"
        )));
    }
    let target = t.dist(u, v);
    ts.spine()
        .iter()
        .copied()
        .find(|&s| t.dist(s, v) == target)
        .ok_or_else(|| {
            Error::Internal(format!(
                "no spine vertex at distance {target} from {v}; one must exist for off-spine {u}"
            ))
        })
}

/// For a non-peripheral u and any v, returns w with d(w, v) = d(u, v) + 1.
///
/// Follows the spine: an on-spine u steps to a spine neighbor, an off-spine
/// u is replaced by a spine vertex one step farther from v. When u and v
/// share a branch deeper than the target distance no spine vertex works,
/// and the walk from v toward its farthest vertex supplies w instead (it
/// passes through every distance up to ecc(v) > d(u, v)).
pub fn extend_distance_vertex(t: &Graph, u: usize, v: usize) -> Result<usize> {
    require_tree(t)?;
    let n = t.n();
    for w in [u, v] {
        if w < 1 || w > n {
            return Err(Error::VertexRange { v: w, n });
        }
    }
    let ecc = t.eccentricities();
    if ecc.ecc[u] == ecc.diameter {
        return Err(Error::Precondition(format!("{u} is a peripheral vertex")));
    }
    let target = t.dist(u, v) + 1;
    let s = spine(t)?;
    if let Some(i) = s.iter().position(|&x| x == u) {
        // Peripheral endpoints are excluded above, so u is interior.
        for w in [s[i - 1], s[i + 1]] {
            if t.dist(w, v) == target {
                return Ok(w);
            }
        }
        return Err(Error::Internal(
            "a spine neighbor must be one step farther from v".into(),
        ));
    }
    if let Some(&w) = s.iter().find(|&&x| t.dist(x, v) == target) {
        return Ok(w);
    }
    (1..=n)
        .find(|&w| t.dist(w, v) == target)
        .ok_or_else(|| Error::Internal(format!("no vertex at distance {target} from {v}")))
}
