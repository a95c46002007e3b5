//! Independent reference oracles for integration tests.
//!
//! Everything here works on raw `(n, edge list)` data with plain
//! exhaustive algorithms: Floyd-Warshall distances, set-partition
//! enumeration for anti-van der Waerden values, Prufer sequences plus AHU
//! canonical forms for tree counting, and permutation-minimal canonical
//! forms for connected graph counting. None of it calls into the library
//! under test, so agreement between the two is meaningful evidence.

#![allow(dead_code)]

use std::collections::BTreeSet;

pub const INF: u32 = u32::MAX / 2;

/// All-pairs shortest paths by Floyd-Warshall. Vertices are 1-based; the
/// returned matrix is 0-based with `INF` for unreachable pairs.
pub fn naive_distances(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<u32>> {
    let mut d = vec![vec![INF; n]; n];
    for v in 0..n {
        d[v][v] = 0;
    }
    for &(a, b) in edges {
        d[a - 1][b - 1] = 1;
        d[b - 1][a - 1] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k].saturating_add(d[k][j]);
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

pub fn naive_is_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let d = naive_distances(n, edges);
    d[0].iter().all(|&x| x < INF)
}

/// Every k-term arithmetic progression as a sorted vertex set: k distinct
/// vertices admitting an ordering with constant consecutive distance of at
/// least 1. Returned sets are deduplicated.
pub fn naive_k_ap_sets(dist: &[Vec<u32>], k: usize) -> Vec<Vec<usize>> {
    let n = dist.len();
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut seq: Vec<usize> = Vec::with_capacity(k);
    fn extend(
        dist: &[Vec<u32>],
        k: usize,
        gap: u32,
        seq: &mut Vec<usize>,
        found: &mut BTreeSet<Vec<usize>>,
    ) {
        let n = dist.len();
        if seq.len() == k {
            let mut s: Vec<usize> = seq.iter().map(|&v| v + 1).collect();
            s.sort_unstable();
            found.insert(s);
            return;
        }
        let last = *seq.last().unwrap();
        for next in 0..n {
            if seq.contains(&next) || dist[last][next] != gap {
                continue;
            }
            seq.push(next);
            extend(dist, k, gap, seq, found);
            seq.pop();
        }
    }
    for first in 0..n {
        for second in 0..n {
            if second == first {
                continue;
            }
            let gap = dist[first][second];
            if gap == 0 || gap >= INF {
                continue;
            }
            seq.clear();
            seq.push(first);
            seq.push(second);
            extend(dist, k, gap, &mut seq, &mut found);
        }
    }
    found.into_iter().collect()
}

/// Enumerates every partition of {1..n} as a restricted growth string
/// (block index per vertex, 0-based) and hands each to the callback along
/// with its block count.
fn for_each_partition(n: usize, f: &mut impl FnMut(&[usize], usize)) {
    fn rec(n: usize, blocks: &mut Vec<usize>, used: usize, f: &mut impl FnMut(&[usize], usize)) {
        if blocks.len() == n {
            f(blocks, used);
            return;
        }
        for b in 0..=used {
            blocks.push(b);
            rec(n, blocks, if b == used { used + 1 } else { used }, f);
            blocks.pop();
        }
    }
    let mut blocks = Vec::with_capacity(n);
    rec(n, &mut blocks, 0, f);
}

/// Anti-van der Waerden value by definition: the least r such that every
/// surjective r-coloring contains a k-AP whose vertices get k distinct
/// colors, or n + 1 if no r in 1..=n qualifies. Whether a coloring
/// contains a rainbow AP depends only on its partition into color classes,
/// so it suffices to enumerate set partitions.
pub fn naive_aw(n: usize, edges: &[(usize, usize)], k: usize) -> u16 {
    let dist = naive_distances(n, edges);
    let aps = naive_k_ap_sets(&dist, k);
    // rainbow_free[r] becomes true when some partition into exactly r
    // blocks has no rainbow AP.
    let mut rainbow_free = vec![false; n + 1];
    for_each_partition(n, &mut |blocks, count| {
        if rainbow_free[count] {
            return;
        }
        let rainbow = aps.iter().any(|ap| {
            let mut seen = [false; 16];
            ap.iter().all(|&v| {
                let b = blocks[v - 1];
                !std::mem::replace(&mut seen[b], true)
            })
        });
        if !rainbow {
            rainbow_free[count] = true;
        }
    });
    for r in 1..=n {
        if !rainbow_free[r] {
            return r as u16;
        }
    }
    (n + 1) as u16
}

/// True when the coloring (1-based colors, one entry per vertex) contains
/// a rainbow k-AP under the given distance matrix.
pub fn naive_has_rainbow(dist: &[Vec<u32>], colors: &[u16], k: usize) -> bool {
    naive_k_ap_sets(dist, k).iter().any(|ap| {
        let mut seen = BTreeSet::new();
        ap.iter().all(|&v| seen.insert(colors[v - 1]))
    })
}

/// Decodes a Prufer sequence into the labeled tree's edge list.
fn tree_from_prufer(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n + 1];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut seq = seq.to_vec();
    for i in 0..seq.len() {
        let leaf = (1..=n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf.min(seq[i]), leaf.max(seq[i])));
        degree[leaf] -= 1;
        degree[seq[i]] -= 1;
        seq[i] = 0;
    }
    let rest: Vec<usize> = (1..=n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// AHU canonical string of a tree, rooted at its center (or the smaller
/// canonical form of the two centers when the tree is bicentral).
fn ahu_canonical(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); n + 1];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    // Centers by repeated leaf stripping.
    let mut degree: Vec<usize> = (0..=n).map(|v| if v == 0 { 0 } else { adj[v].len() }).collect();
    let mut removed = vec![false; n + 1];
    let mut remaining = n;
    let mut layer: Vec<usize> = (1..=n).filter(|&v| degree[v] <= 1).collect();
    while remaining > 2 {
        let mut next = Vec::new();
        for &leaf in &layer {
            removed[leaf] = true;
            remaining -= 1;
            for &u in &adj[leaf] {
                if !removed[u] {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    let centers: Vec<usize> = (1..=n).filter(|&v| !removed[v]).collect();

    fn encode(v: usize, parent: usize, adj: &[Vec<usize>]) -> String {
        let mut parts: Vec<String> = adj[v]
            .iter()
            .filter(|&&u| u != parent)
            .map(|&u| encode(u, v, adj))
            .collect();
        parts.sort();
        format!("({})", parts.join(""))
    }
    centers
        .iter()
        .map(|&c| encode(c, 0, &adj))
        .min()
        .unwrap_or_else(|| "()".to_string())
}

/// Number of pairwise non-isomorphic trees on n vertices, by decoding all
/// n^(n-2) Prufer sequences and bucketing AHU canonical forms.
pub fn prufer_tree_count(n: usize) -> usize {
    if n <= 2 {
        return 1;
    }
    let mut canon = BTreeSet::new();
    let len = n - 2;
    let total = n.pow(len as u32);
    for code in 0..total {
        let mut seq = Vec::with_capacity(len);
        let mut c = code;
        for _ in 0..len {
            seq.push(c % n + 1);
            c /= n;
        }
        let edges = tree_from_prufer(n, &seq);
        canon.insert(ahu_canonical(n, &edges));
    }
    canon.len()
}

/// Canonical form of a graph on n vertices: the minimum adjacency bitmask
/// over all vertex permutations.
fn graph_canonical(n: usize, edges: &[(usize, usize)]) -> u64 {
    let bit = |i: usize, j: usize| {
        let (i, j) = (i.min(j), i.max(j));
        // Position of pair (i, j), 0-based vertices, in upper-triangle order.
        (0..i).map(|r| n - 1 - r).sum::<usize>() + (j - i - 1)
    };
    let mut adj = vec![vec![false; n]; n];
    for &(a, b) in edges {
        adj[a - 1][b - 1] = true;
        adj[b - 1][a - 1] = true;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    loop {
        let mut mask = 0u64;
        for i in 0..n {
            for j in i + 1..n {
                if adj[perm[i]][perm[j]] {
                    mask |= 1 << bit(i, j);
                }
            }
        }
        best = best.min(mask);
        // Next lexicographic permutation.
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    best
}

/// Number of pairwise non-isomorphic connected graphs on n vertices, by
/// enumerating all edge subsets and bucketing canonical forms.
pub fn connected_graph_count(n: usize) -> usize {
    if n == 1 {
        return 1;
    }
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
        .collect();
    let mut canon = BTreeSet::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        if edges.len() < n - 1 || !naive_is_connected(n, &edges) {
            continue;
        }
        canon.insert(graph_canonical(n, &edges));
    }
    canon.len()
}

#[cfg(test)]
mod oracle_self_tests {
    use super::*;

    #[test]
    fn distances_on_a_path() {
        let d = naive_distances(4, &[(1, 2), (2, 3), (3, 4)]);
        assert_eq!(d[0][3], 3);
        assert_eq!(d[1][3], 2);
        let disconnected = naive_distances(3, &[(1, 2)]);
        assert_eq!(disconnected[0][2], INF);
    }

    #[test]
    fn ap_sets_on_a_path() {
        let d = naive_distances(4, &[(1, 2), (2, 3), (3, 4)]);
        let aps = naive_k_ap_sets(&d, 3);
        assert!(aps.contains(&vec![1, 2, 3]));
        assert!(aps.contains(&vec![2, 3, 4]));
        assert!(!aps.contains(&vec![1, 2, 4]));
    }

    #[test]
    fn known_aw_values_on_tiny_graphs() {
        // Hand-checked: P1 and P2 have no 3-AP at all, so aw = n + 1. The
        // only exact 3-coloring of P3 is rainbow, so aw(P3) = 3. On P4 the
        // coloring (3,1,1,2) avoids both AP sets {1,2,3} and {2,3,4}, and
        // every exact 4-coloring is all-distinct, so aw(P4) = 4. In C4
        // every 3-subset is an AP, so every exact 3-coloring is rainbow.
        let path = |n: usize| -> Vec<(usize, usize)> { (1..n).map(|i| (i, i + 1)).collect() };
        assert_eq!(naive_aw(1, &path(1), 3), 2);
        assert_eq!(naive_aw(2, &path(2), 3), 3);
        assert_eq!(naive_aw(3, &path(3), 3), 3);
        assert_eq!(naive_aw(4, &path(4), 3), 4);
        assert_eq!(naive_aw(4, &[(1, 2), (2, 3), (3, 4), (4, 1)], 3), 3);
    }

    #[test]
    fn tree_and_graph_counts_match_the_literature() {
        assert_eq!(prufer_tree_count(1), 1);
        assert_eq!(prufer_tree_count(4), 2);
        assert_eq!(prufer_tree_count(5), 3);
        assert_eq!(prufer_tree_count(6), 6);
        assert_eq!(prufer_tree_count(7), 11);
        assert_eq!(connected_graph_count(1), 1);
        assert_eq!(connected_graph_count(2), 1);
        assert_eq!(connected_graph_count(3), 2);
        assert_eq!(connected_graph_count(4), 6);
        assert_eq!(connected_graph_count(5), 21);
    }
}
