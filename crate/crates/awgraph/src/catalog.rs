//! Catalogs of small graphs up to isomorphism: all trees on up to 12
//! vertices and all connected graphs on up to 7 vertices.
//!
//! Trees are generated by attaching a leaf to every vertex of every
//! smaller tree and deduplicating by a canonical code rooted at the tree
//! center. Connected graphs are generated by joining a new vertex to every
//! nonempty subset of every smaller graph and deduplicating by the minimum
//! adjacency bitstring over all vertex permutations. Both enumerations are
//! deterministic: results are sorted by canonical form.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::encode_graph6;
use crate::tree::is_k_peripheral;

/// Largest vertex count supported by [`enumerate_trees`].
pub const MAX_TREE_VERTICES: usize = 12;
/// Largest vertex count supported by [`enumerate_connected_graphs`].
pub const MAX_GRAPH_VERTICES: usize = 7;

/// All trees on exactly n vertices up to isomorphism, sorted by canonical
/// code. Supports n up to [`MAX_TREE_VERTICES`].
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::Input("a tree needs at least one vertex".into()));
    }
    if n > MAX_TREE_VERTICES {
        return Err(Error::Unsupported(format!(
            "tree enumeration is supported up to {MAX_TREE_VERTICES} vertices, requested {n}"
        )));
    }
    let mut level: BTreeMap<String, Graph> = BTreeMap::new();
    level.insert(
        tree_code(&Graph::path(1)),
        Graph::path(1),
    );
    for size in 2..=n {
        let mut next: BTreeMap<String, Graph> = BTreeMap::new();
        for tree in level.values() {
            for v in tree.vertices() {
                let mut edges = tree.edges();
                edges.push((v, size));
                let extended = Graph::from_edges(size, &edges)?;
                next.entry(tree_code(&extended)).or_insert(extended);
            }
        }
        level = next;
    }
    Ok(level.into_values().collect())
}

fn rooted_code(t: &Graph, root: usize, parent: usize) -> String {
    let mut children: Vec<String> = t
        .neighbors(root)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_code(t, w, root))
        .collect();
    children.sort();
    format!("({})", children.concat())
}

/// Canonical code of a free tree: the code rooted at its center, or at
/// both centers (sorted) when the center is an edge.
fn tree_code(t: &Graph) -> String {
    let ecc = t.eccentricities();
    let min_ecc = t.vertices().map(|v| ecc.ecc[v]).min().unwrap();
    let centers: Vec<usize> = t.vertices().filter(|&v| ecc.ecc[v] == min_ecc).collect();
    match centers.as_slice() {
        [c] => format!("C{}", rooted_code(t, *c, 0)),
        [a, b] => {
            let mut halves = [rooted_code(t, *a, *b), rooted_code(t, *b, *a)];
            halves.sort();
            format!("B{}{}", halves[0], halves[1])
        }
        _ => unreachable!("a tree has one or two centers"),
    }
}

/// All connected graphs on exactly n vertices up to isomorphism, sorted by
/// canonical adjacency bitstring. Supports n up to [`MAX_GRAPH_VERTICES`].
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::Input("a graph needs at least one vertex".into()));
    }
    if n > MAX_GRAPH_VERTICES {
        return Err(Error::Unsupported(format!(
            "connected graph enumeration is supported up to {MAX_GRAPH_VERTICES} vertices, \
             requested {n}"
        )));
    }
    let mut level: BTreeSet<u32> = BTreeSet::new();
    level.insert(0); // the single vertex, no edges
    for size in 2..=n {
        let perm_tables = pair_permutation_tables(size);
        let mut next: BTreeSet<u32> = BTreeSet::new();
        for &mask in &level {
            // Join vertex `size` to each nonempty subset of 1..size.
            for subset in 1u32..(1 << (size - 1)) {
                let mut extended = mask;
                for v in 0..size - 1 {
                    if subset & (1 << v) != 0 {
                        extended |= 1 << pair_index(v, size - 1);
                    }
                }
                next.insert(canonical_mask(extended, &perm_tables));
            }
        }
        level = next;
    }
    level.iter().map(|&mask| mask_to_graph(mask, n)).collect()
}

/// Index of the unordered pair {i, j} (0-based, i < j) in the fixed pair
/// order (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...: column-major by
/// the larger endpoint, so indices are stable as vertices are added.
fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

/// For every permutation of 0..n, the induced permutation of pair indices.
fn pair_permutation_tables(n: usize) -> Vec<Vec<u8>> {
    let mut perms = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    heap_permutations(&mut items, n, &mut perms);
    let pair_count = n * (n - 1) / 2;
    perms
        .iter()
        .map(|perm| {
            let mut table = vec![0u8; pair_count];
            for j in 1..n {
                for i in 0..j {
                    let (a, b) = (perm[i].min(perm[j]), perm[i].max(perm[j]));
                    table[pair_index(i, j)] = pair_index(a, b) as u8;
                }
            }
            table
        })
        .collect()
}

fn heap_permutations(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permutations(items, k - 1, out);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

fn canonical_mask(mask: u32, perm_tables: &[Vec<u8>]) -> u32 {
    let mut best = u32::MAX;
    for table in perm_tables {
        let mut image = 0u32;
        for (from, &to) in table.iter().enumerate() {
            if mask & (1 << from) != 0 {
                image |= 1 << to;
            }
        }
        best = best.min(image);
    }
    best
}

fn mask_to_graph(mask: u32, n: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if mask & (1 << pair_index(i, j)) != 0 {
                edges.push((i + 1, j + 1));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Summary row for one catalog graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub graph6: String,
    pub n: usize,
    pub edges: usize,
    pub diameter: u32,
    pub is_tree: bool,
    /// Whether the graph contains three pairwise-diametral vertices.
    pub is_3_peripheral: bool,
    pub peripheral_count: usize,
}

impl CatalogEntry {
    pub fn describe(g: &Graph) -> Result<CatalogEntry> {
        Ok(CatalogEntry {
            graph6: encode_graph6(g)?,
            n: g.n(),
            edges: g.edge_count(),
            diameter: g.diameter(),
            is_tree: g.is_tree(),
            is_3_peripheral: is_k_peripheral(g, 3)?.is_some(),
            peripheral_count: g.eccentricities().peripheral.len(),
        })
    }
}

/// A filter over catalog entries, parseable from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalogPredicate {
    ThreePeripheral,
    NotThreePeripheral,
    EvenDiameter,
    OddDiameter,
    MinVertices(usize),
    MaxVertices(usize),
}

impl CatalogPredicate {
    pub fn matches(&self, e: &CatalogEntry) -> bool {
        match *self {
            CatalogPredicate::ThreePeripheral => e.is_3_peripheral,
            CatalogPredicate::NotThreePeripheral => !e.is_3_peripheral,
            CatalogPredicate::EvenDiameter => e.diameter % 2 == 0,
            CatalogPredicate::OddDiameter => e.diameter % 2 == 1,
            CatalogPredicate::MinVertices(min) => e.n >= min,
            CatalogPredicate::MaxVertices(max) => e.n <= max,
        }
    }
}

impl std::str::FromStr for CatalogPredicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<CatalogPredicate> {
        if let Some(v) = s.strip_prefix("min-n=") {
            let min = v
                .parse()
                .map_err(|_| Error::Input(format!("invalid vertex bound in predicate: {s}")))?;
            return Ok(CatalogPredicate::MinVertices(min));
        }
        if let Some(v) = s.strip_prefix("max-n=") {
            let max = v
                .parse()
                .map_err(|_| Error::Input(format!("invalid vertex bound in predicate: {s}")))?;
            return Ok(CatalogPredicate::MaxVertices(max));
        }
        match s {
            "3-peripheral" => Ok(CatalogPredicate::ThreePeripheral),
            "not-3-peripheral" => Ok(CatalogPredicate::NotThreePeripheral),
            "even-diameter" => Ok(CatalogPredicate::EvenDiameter),
            "odd-diameter" => Ok(CatalogPredicate::OddDiameter),
            other => Err(Error::Input(format!(
                "unknown catalog predicate '{other}' (expected 3-peripheral, \
                 not-3-peripheral, even-diameter, odd-diameter, min-n=K, or max-n=K)"
            ))),
        }
    }
}

/// Keeps the entries matching the predicate, preserving order.
pub fn filter_catalog(entries: &[CatalogEntry], predicate: CatalogPredicate) -> Vec<CatalogEntry> {
    entries.iter().filter(|e| predicate.matches(e)).cloned().collect()
}
