//! Registry of machine-checkable claims about aw(G, 3) on Cartesian
//! products, each bound to a finite instance family and a checker.
//!
//! Claims are identified by stable registry ids (for example `THM_PMPN`).
//! Running a claim enumerates its instance family at the requested bounds,
//! evaluates the checker on every instance, and reports per-instance
//! records plus aggregate counts. Instances whose hypotheses fail are
//! skipped, never passed; the exploratory claim `CONJ_KPER` only observes
//! outcomes and never asserts them.
//!
//! Rainbow-free certificates discovered while running aw-based claims are
//! pooled, and the three copy-structure claims (`LEM_COPY_2`,
//! `LEM_UNION_2`, `LEM_DIFF_1`) are checked against every pooled
//! certificate rather than on synthetic colorings only.
//!
//! Reports are deterministic for fixed bounds: instance order follows
//! catalog order, random instances derive from a fixed seed, and parallel
//! evaluation merges results back in generation order.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::ap::{
    check_structural_lemmas, find_tricolored_geodesic_or_triangle, validate_coloring,
    LemmaOutcome,
};
use crate::catalog::{enumerate_connected_graphs, enumerate_trees, MAX_GRAPH_VERTICES, MAX_TREE_VERTICES};
use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::{is_isometric_embedding, Graph};
use crate::graph6::{encode_graph6, parse_graph6};
use crate::product::{cartesian_product, ProductGraph};
use crate::schemes::{
    enumerate_diametral_choices, example_p3c6_coloring, generalized_even_coloring,
    odd_diameter_coloring,
};
use crate::search::aw;
use crate::store::{ResultRecord, SCHEMA_VERSION};
use crate::tree::{
    equidistant_spine_vertex, extend_distance_vertex, is_k_peripheral, peripheral_center,
    TreeStructure,
};

/// Instance outcome labels used in [`ResultRecord::outcome`].
pub const OUTCOME_PASS: &str = "pass";
pub const OUTCOME_FAIL: &str = "fail";
pub const OUTCOME_SKIP: &str = "skip";
pub const OUTCOME_OBSERVED: &str = "observed";

/// Seed for the randomized claim when none is supplied.
pub const DEFAULT_SEED: u64 = 1729;

/// Bounds profile: `Quick` for smoke runs, `Full` for the complete desk
/// scale families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    Quick,
    Full,
}

impl std::str::FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Profile> {
        match s {
            "quick" => Ok(Profile::Quick),
            "full" => Ok(Profile::Full),
            other => Err(Error::Input(format!(
                "unknown profile '{other}' (expected quick or full)"
            ))),
        }
    }
}

/// Size parameters for a claim run. Unset fields fall back to the
/// profile's defaults; explicit values are validated against hard safety
/// limits so a typo cannot launch an unbounded search.
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub profile: Profile,
    /// Bound for the first (left) family dimension, claim-specific.
    pub max_m: Option<usize>,
    /// Bound for the second (right) family dimension, claim-specific.
    pub max_n: Option<usize>,
    /// Number of random instances for sampled claims.
    pub samples: Option<usize>,
    /// Seed for sampled claims.
    pub seed: Option<u64>,
    /// Progression length for the exploratory claim.
    pub k: Option<usize>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            profile: Profile::Quick,
            max_m: None,
            max_n: None,
            samples: None,
            seed: None,
            k: None,
        }
    }
}

impl VerifyOptions {
    pub fn full() -> Self {
        VerifyOptions { profile: Profile::Full, ..Default::default() }
    }

    fn pick(&self, explicit: Option<usize>, quick: usize, full: usize, cap: usize, what: &str) -> Result<usize> {
        let v = explicit.unwrap_or(match self.profile {
            Profile::Quick => quick,
            Profile::Full => full,
        });
        if v == 0 || v > cap {
            return Err(Error::Input(format!(
                "{what} bound {v} is outside the safe range 1..={cap}"
            )));
        }
        Ok(v)
    }

    fn m(&self, quick: usize, full: usize, cap: usize, what: &str) -> Result<usize> {
        self.pick(self.max_m, quick, full, cap, what)
    }

    fn n(&self, quick: usize, full: usize, cap: usize, what: &str) -> Result<usize> {
        self.pick(self.max_n, quick, full, cap, what)
    }

    fn sample_count(&self, quick: usize, full: usize) -> Result<usize> {
        self.pick(self.samples, quick, full, 100_000, "sample")
    }

    fn seed(&self) -> u64 {
        self.seed.unwrap_or(DEFAULT_SEED)
    }
}

/// A registered claim: stable id, human-readable statement, and whether
/// the claim is exploratory (reported but never asserted).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClaimInfo {
    pub id: &'static str,
    pub statement: &'static str,
    pub exploratory: bool,
}

/// All registered claims, in registry order.
pub const CLAIMS: &[ClaimInfo] = &[
    ClaimInfo {
        id: "PROP_DIST",
        statement: "Distances in a Cartesian product add coordinatewise: \
                    d(v_{i,j}, v_{h,k}) = d_G(u_i, u_h) + d_H(w_j, w_k).",
        exploratory: false,
    },
    ClaimInfo {
        id: "OBS_DIAM",
        statement: "diam(G x H) = diam(G) + diam(H).",
        exploratory: false,
    },
    ClaimInfo {
        id: "COR_ISO_SUBPROD",
        statement: "If G' is an isometric subgraph of G and H' of H, then G' x H' is an \
                    isometric subgraph of G x H.",
        exploratory: false,
    },
    ClaimInfo {
        id: "LEM_PATH_OR_C3",
        statement: "Every exact coloring of a connected graph on at least 3 vertices with \
                    at least 3 colors puts 3 distinct colors on an isometric path or on a \
                    triangle.",
        exploratory: false,
    },
    ClaimInfo {
        id: "THM_DIAM2_PROD",
        statement: "If G is connected with at least 3 vertices and diam(G) <= 2, and \
                    aw(P3 x H, 3) = 3, then aw(G x H, 3) = 3.",
        exploratory: false,
    },
    ClaimInfo {
        id: "LEM_UNION_2",
        statement: "For a rainbow-free exact coloring of G x H with at least 3 colors, if \
                    the indexing factor has at least 3 vertices and every copy uses at most \
                    2 colors, then two adjacent copies use at most 2 colors jointly.",
        exploratory: false,
    },
    ClaimInfo {
        id: "LEM_COPY_2",
        statement: "For a rainbow-free exact coloring of G x H with at least 3 colors and \
                    both factors on at least 2 vertices, every factor copy uses at most 2 \
                    colors.",
        exploratory: false,
    },
    ClaimInfo {
        id: "LEM_DIFF_1",
        statement: "For a rainbow-free exact coloring of a product, any copy of a factor \
                    uses at most 1 color that is missing from any other copy of it.",
        exploratory: false,
    },
    ClaimInfo {
        id: "THM_AW_LE_4",
        statement: "3 <= aw(G x H, 3) <= 4 for connected G and H with at least 2 vertices \
                    each.",
        exploratory: false,
    },
    ClaimInfo {
        id: "THM_PMPN",
        statement: "For m, n >= 2: aw(Pm x Pn, 3) = 3 if {m, n} pairs 2 with an even \
                    length or 3 with an odd length, and 4 otherwise.",
        exploratory: false,
    },
    ClaimInfo {
        id: "LEM_SPINE_EQUI",
        statement: "In a tree with spine S, if u is off the spine and v lies outside the \
                    branch of u's root, some spine vertex u' has d(u', v) = d(u, v).",
        exploratory: false,
    },
    ClaimInfo {
        id: "COR_DPLUS1",
        statement: "In a tree, if u is not peripheral then for every v some vertex w has \
                    d(w, v) = d(u, v) + 1.",
        exploratory: false,
    },
    ClaimInfo {
        id: "LEM_3PER_EVEN",
        statement: "A 3-peripheral tree has even diameter, and every three pairwise \
                    diametral vertices admit a vertex equidistant from all three.",
        exploratory: false,
    },
    ClaimInfo {
        id: "LEM_P2T",
        statement: "aw(P2 x T, 3) = 3 for every 3-peripheral tree T.",
        exploratory: false,
    },
    ClaimInfo {
        id: "LEM_PNT",
        statement: "aw(Pn x T, 3) = 3 for every n >= 2 and every 3-peripheral tree T.",
        exploratory: false,
    },
    ClaimInfo {
        id: "THM_3PER_G",
        statement: "aw(T x G, 3) = 3 for every 3-peripheral tree T and every connected G \
                    with at least 2 vertices.",
        exploratory: false,
    },
    ClaimInfo {
        id: "LEM_PROD_NOT3PER",
        statement: "The Cartesian product of two graphs that are not 3-peripheral is not \
                    3-peripheral.",
        exploratory: false,
    },
    ClaimInfo {
        id: "LEM_TREEDIAM",
        statement: "In a tree that is not 3-peripheral, if (ui, uj) is diametral, \
                    d(ux, uj) = diam, and d(ui, uy) = diam, then d(ux, uy) = diam.",
        exploratory: false,
    },
    ClaimInfo {
        id: "THM_ODD_4",
        statement: "aw(T x T', 3) = 4 for trees T, T' on at least 2 vertices that are not \
                    3-peripheral when diam(T x T') is odd; the diametral distance coloring \
                    is a rainbow-free exact 3-coloring for every diametral pair.",
        exploratory: false,
    },
    ClaimInfo {
        id: "FIG2_REPRO",
        statement: "On the pinned 5-vertex spider times P4 the even-diameter distance \
                    coloring is rainbow-free for at least one diametral choice and contains \
                    a rainbow 3-AP for another; on the pinned 6-vertex tree times P4 every \
                    choice contains a rainbow 3-AP.",
        exploratory: false,
    },
    ClaimInfo {
        id: "CONJ_KPER",
        statement: "Exploration only: for a k-peripheral tree T and a connected G on at \
                    least 2 vertices, is aw(T x G, k) = k? Outcomes are recorded as data, \
                    never asserted.",
        exploratory: true,
    },
];

/// Execution order for full runs: certificate-producing claims run before
/// the three copy-structure claims that consume the certificate pool.
/// Reports are re-sorted to registry order afterwards.
const RUN_ORDER: &[&str] = &[
    "PROP_DIST",
    "OBS_DIAM",
    "COR_ISO_SUBPROD",
    "LEM_PATH_OR_C3",
    "THM_DIAM2_PROD",
    "THM_AW_LE_4",
    "THM_PMPN",
    "LEM_SPINE_EQUI",
    "COR_DPLUS1",
    "LEM_3PER_EVEN",
    "LEM_P2T",
    "LEM_PNT",
    "THM_3PER_G",
    "LEM_PROD_NOT3PER",
    "LEM_TREEDIAM",
    "THM_ODD_4",
    "FIG2_REPRO",
    "LEM_UNION_2",
    "LEM_COPY_2",
    "LEM_DIFF_1",
];

const STRUCTURAL_CLAIMS: &[&str] = &["LEM_UNION_2", "LEM_COPY_2", "LEM_DIFF_1"];

/// Looks up a registered claim by id.
pub fn claim_info(id: &str) -> Option<&'static ClaimInfo> {
    CLAIMS.iter().find(|c| c.id == id)
}

fn registry_index(id: &str) -> usize {
    CLAIMS.iter().position(|c| c.id == id).unwrap_or(usize::MAX)
}

/// Aggregated result of running one claim.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub statement: String,
    pub attempted: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub observed: usize,
    /// One record per instance, in family order.
    pub records: Vec<ResultRecord>,
    /// Wall time; excluded from serialized output to keep machine output
    /// byte-identical across runs.
    #[serde(skip)]
    pub wall: Duration,
}

impl VerificationReport {
    fn new(info: &ClaimInfo, records: Vec<ResultRecord>, wall: Duration) -> VerificationReport {
        let count = |s: &str| records.iter().filter(|r| r.outcome == s).count();
        VerificationReport {
            claim: info.id.to_string(),
            statement: info.statement.to_string(),
            attempted: records.len(),
            passed: count(OUTCOME_PASS),
            failed: count(OUTCOME_FAIL),
            skipped: count(OUTCOME_SKIP),
            observed: count(OUTCOME_OBSERVED),
            records,
            wall,
        }
    }

    /// Records whose outcome is a failure.
    pub fn failures(&self) -> Vec<&ResultRecord> {
        self.records.iter().filter(|r| r.outcome == OUTCOME_FAIL).collect()
    }
}

type Params = BTreeMap<String, Value>;

fn param_map(kv: &[(&str, Value)]) -> Params {
    kv.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn g6(g: &Graph) -> String {
    encode_graph6(g).expect("family graphs stay within graph6 limits")
}

/// A rainbow-free certificate together with the product it colors.
struct PoolEntry {
    origin: String,
    lhs: String,
    rhs: String,
    product: ProductGraph,
    coloring: Coloring,
}

#[derive(Default)]
struct Pool {
    entries: Vec<PoolEntry>,
    seen: BTreeSet<String>,
}

impl Pool {
    fn add(&mut self, origin: &str, lhs: &str, rhs: &str, product: &ProductGraph, coloring: Coloring) {
        if coloring.color_count() < 3 {
            return;
        }
        let key = format!("{lhs}\u{1f}{rhs}\u{1f}{:?}", coloring.as_slice());
        if !self.seen.insert(key) {
            return;
        }
        self.entries.push(PoolEntry {
            origin: origin.to_string(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            product: product.clone(),
            coloring,
        });
    }

    /// Collects certificates advertised by records under the "pool" payload
    /// key, attributing each to the claim that produced it. Works both for
    /// freshly computed and for reloaded records, so resumed runs rebuild
    /// the same pool.
    fn harvest(&mut self, records: &[ResultRecord]) {
        for rec in records {
            let Some(arr) = rec.payload.get("pool").and_then(Value::as_array) else {
                continue;
            };
            if arr.is_empty() || rec.lhs.is_empty() || rec.rhs.is_empty() {
                continue;
            }
            let (Ok(left), Ok(right)) = (parse_graph6(&rec.lhs), parse_graph6(&rec.rhs)) else {
                continue;
            };
            let product = cartesian_product(&left, &right);
            for cv in arr {
                let Ok(colors) = serde_json::from_value::<Vec<u16>>(cv.clone()) else {
                    continue;
                };
                let Ok(coloring) = Coloring::new(colors) else {
                    continue;
                };
                self.add(&rec.claim, &rec.lhs, &rec.rhs, &product, coloring);
            }
        }
    }
}

/// Serializes the r >= 3 certificates of an aw run for pooling.
fn pool_value(certs: &BTreeMap<u16, Coloring>) -> Value {
    let arr: Vec<Value> = certs
        .iter()
        .filter(|(&r, _)| r >= 3)
        .map(|(_, c)| serde_json::to_value(c).expect("colorings serialize"))
        .collect();
    Value::Array(arr)
}

/// Evaluates a batch of instances, reusing stored outcomes where a record
/// with the same identity already exists. Evaluation runs in parallel;
/// output order equals input order.
fn drive<T: Sync>(
    existing: &BTreeMap<String, ResultRecord>,
    claim: &'static str,
    items: Vec<(String, String, Params, T)>,
    eval: impl Fn(&T) -> (&'static str, Value) + Sync,
) -> Vec<ResultRecord> {
    items
        .par_iter()
        .map(|(lhs, rhs, params, data)| {
            let mut record = ResultRecord {
                schema: SCHEMA_VERSION,
                claim: claim.to_string(),
                lhs: lhs.clone(),
                rhs: rhs.clone(),
                params: params.clone(),
                outcome: String::new(),
                payload: Value::Null,
            };
            if let Some(prev) = existing.get(&record.key()) {
                return prev.clone();
            }
            let (outcome, payload) = eval(data);
            record.outcome = outcome.to_string();
            record.payload = payload;
            record
        })
        .collect()
}

fn graph_family(lo: usize, hi: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in lo..=hi {
        out.extend(enumerate_connected_graphs(n)?);
    }
    Ok(out)
}

fn tree_family(lo: usize, hi: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in lo..=hi {
        out.extend(enumerate_trees(n)?);
    }
    Ok(out)
}

fn fail_err(e: &Error) -> (&'static str, Value) {
    (OUTCOME_FAIL, json!({ "error": e.to_string() }))
}

// ---------------------------------------------------------------------
// Claim runners
// ---------------------------------------------------------------------

fn product_pair_items(
    opts: &VerifyOptions,
    lo: usize,
) -> Result<Vec<(String, String, Params, (Graph, Graph))>> {
    let mb = opts.m(3, 4, MAX_GRAPH_VERTICES, "left graph")?;
    let nb = opts.n(3, 4, MAX_GRAPH_VERTICES, "right graph")?;
    let gs = graph_family(lo, mb)?;
    let hs = graph_family(lo, nb)?;
    let mut items = Vec::new();
    for g in &gs {
        for h in &hs {
            items.push((g6(g), g6(h), Params::new(), (g.clone(), h.clone())));
        }
    }
    Ok(items)
}

fn run_prop_dist(opts: &VerifyOptions, existing: &BTreeMap<String, ResultRecord>) -> Result<Vec<ResultRecord>> {
    let items = product_pair_items(opts, 1)?;
    Ok(drive(existing, "PROP_DIST", items, |(g, h)| {
        let p = cartesian_product(g, h);
        let pg = p.graph();
        let mut checked = 0u64;
        for i in g.vertices() {
            for j in h.vertices() {
                let a = p.flat_id(i, j).expect("in range");
                for x in g.vertices() {
                    for y in h.vertices() {
                        let b = p.flat_id(x, y).expect("in range");
                        let want = g.dist(i, x) + h.dist(j, y);
                        if pg.dist(a, b) != want {
                            return (
                                OUTCOME_FAIL,
                                json!({
                                    "left_pair": [i, x],
                                    "right_pair": [j, y],
                                    "product_distance": pg.dist(a, b),
                                    "coordinate_sum": want,
                                }),
                            );
                        }
                        checked += 1;
                    }
                }
            }
        }
        (OUTCOME_PASS, json!({ "distance_pairs": checked }))
    }))
}

fn run_obs_diam(opts: &VerifyOptions, existing: &BTreeMap<String, ResultRecord>) -> Result<Vec<ResultRecord>> {
    let items = product_pair_items(opts, 1)?;
    Ok(drive(existing, "OBS_DIAM", items, |(g, h)| {
        let p = cartesian_product(g, h);
        let got = p.graph().diameter();
        let want = g.diameter() + h.diameter();
        if got == want {
            (OUTCOME_PASS, json!({ "diameter": got }))
        } else {
            (OUTCOME_FAIL, json!({ "product_diameter": got, "factor_sum": want }))
        }
    }))
}

fn first_diametral_pair(g: &Graph) -> (usize, usize) {
    let diam = g.diameter();
    for u in g.vertices() {
        for v in g.vertices() {
            if g.dist(u, v) == diam {
                return (u, v);
            }
        }
    }
    (1, 1)
}

fn run_iso_subprod(opts: &VerifyOptions, existing: &BTreeMap<String, ResultRecord>) -> Result<Vec<ResultRecord>> {
    let items = product_pair_items(opts, 1)?;
    Ok(drive(existing, "COR_ISO_SUBPROD", items, |(g, h)| {
        let p = cartesian_product(g, h);
        // Isometric subgraphs: lex-least geodesics realizing each factor's
        // diameter (a geodesic is always isometric in its host).
        let (ga, gb) = first_diametral_pair(g);
        let (ha, hb) = first_diametral_pair(h);
        let gp = g.lex_least_geodesic(ga, gb);
        let hp = h.lex_least_geodesic(ha, hb);
        let sub = cartesian_product(&Graph::path(gp.len()), &Graph::path(hp.len()));
        let mut map = vec![0usize; sub.graph().n()];
        for (x, &gu) in gp.iter().enumerate() {
            for (y, &hw) in hp.iter().enumerate() {
                let s = sub.flat_id(x + 1, y + 1).expect("in range");
                map[s - 1] = p.flat_id(gu, hw).expect("in range");
            }
        }
        match is_isometric_embedding(sub.graph(), p.graph(), &map) {
            Ok(true) => (
                OUTCOME_PASS,
                json!({ "subgraph": format!("P{} x P{}", gp.len(), hp.len()) }),
            ),
            Ok(false) => (
                OUTCOME_FAIL,
                json!({ "subgraph": format!("P{} x P{}", gp.len(), hp.len()), "map": map }),
            ),
            Err(e) => fail_err(&e),
        }
    }))
}

/// Deterministic random connected graph and exact coloring with at least 3
/// colors, derived from the seed and instance index alone.
fn random_colored_graph(seed: u64, index: u64) -> (Graph, Coloring) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let n: usize = rng.gen_range(3..=10);
    let mut edges = BTreeSet::new();
    for v in 2..=n {
        let u = rng.gen_range(1..v);
        edges.insert((u, v));
    }
    for _ in 0..rng.gen_range(0..=n) {
        let a = rng.gen_range(1..=n);
        let b = rng.gen_range(1..=n);
        if a != b {
            edges.insert((a.min(b), a.max(b)));
        }
    }
    let edge_list: Vec<(usize, usize)> = edges.into_iter().collect();
    let g = Graph::from_edges(n, &edge_list).expect("random spanning tree keeps it connected");
    let r = rng.gen_range(3..=n.min(6));
    let mut ids: Vec<usize> = (1..=n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        ids.swap(i, j);
    }
    let mut colors = vec![0u16; n];
    for c in 1..=r {
        colors[ids[c - 1] - 1] = c as u16;
    }
    for slot in colors.iter_mut() {
        if *slot == 0 {
            *slot = rng.gen_range(1..=r) as u16;
        }
    }
    let coloring = Coloring::new(colors).expect("constructed coloring is exact");
    (g, coloring)
}

fn run_path_or_c3(opts: &VerifyOptions, existing: &BTreeMap<String, ResultRecord>) -> Result<Vec<ResultRecord>> {
    let samples = opts.sample_count(50, 200)?;
    let seed = opts.seed();
    let mut items = Vec::with_capacity(samples);
    for i in 0..samples as u64 {
        let (g, c) = random_colored_graph(seed, i);
        let params = param_map(&[("seed", json!(seed)), ("index", json!(i))]);
        items.push((g6(&g), String::new(), params, (g, c)));
    }
    Ok(drive(existing, "LEM_PATH_OR_C3", items, |(g, c)| {
        match find_tricolored_geodesic_or_triangle(g, c) {
            Ok(w) => {
                if w.verify(g, c) {
                    (
                        OUTCOME_PASS,
                        json!({ "witness": serde_json::to_value(&w).expect("serializable") }),
                    )
                } else {
                    (
                        OUTCOME_FAIL,
                        json!({
                            "witness": serde_json::to_value(&w).expect("serializable"),
                            "error": "witness failed re-verification",
                        }),
                    )
                }
            }
            Err(e) => fail_err(&e),
        }
    }))
}

fn run_diam2_prod(opts: &VerifyOptions, existing: &BTreeMap<String, ResultRecord>) -> Result<Vec<ResultRecord>> {
    let gb = opts.m(3, 4, MAX_GRAPH_VERTICES, "left graph")?;
    let tb = opts.n(4, 6, MAX_TREE_VERTICES, "tree")?;
    // Families for the second factor known to satisfy aw(P3 x H, 3) = 3:
    // odd paths, odd cycles, cycles of length 0 mod 4, 3-peripheral trees.
    // The hypothesis is still re-verified by full search for every H.
    let mut hs: Vec<Graph> = Vec::new();
    match opts.profile {
        Profile::Quick => {
            hs.push(Graph::path(3));
            hs.push(Graph::cycle(3));
            hs.push(Graph::cycle(4));
        }
        Profile::Full => {
            for len in [3usize, 5, 7] {
                hs.push(Graph::path(len));
            }
            for len in [3usize, 5, 7, 4, 8] {
                hs.push(Graph::cycle(len));
            }
        }
    }
    for t in tree_family(4, tb)? {
        if is_k_peripheral(&t, 3)?.is_some() {
            hs.push(t);
        }
    }
    let mut seen = BTreeSet::new();
    hs.retain(|h| seen.insert(g6(h)));

    // Hypothesis check, once per H: aw(P3 x H, 3) by full search.
    let p3 = Graph::path(3);
    let mut hyp = BTreeMap::new();
    for h in &hs {
        let res = aw(cartesian_product(&p3, h).graph(), 3)?;
        hyp.insert(g6(h), res.aw);
    }

    let mut gs = Vec::new();
    for g in graph_family(3, gb)? {
        if g.diameter() <= 2 {
            gs.push(g);
        }
    }

    let mut items = Vec::new();
    for g in &gs {
        for h in &hs {
            let h_aw = hyp[&g6(h)];
            items.push((g6(g), g6(h), Params::new(), (g.clone(), h.clone(), h_aw)));
        }
    }
    Ok(drive(existing, "THM_DIAM2_PROD", items, |(g, h, h_aw)| {
        if *h_aw != 3 {
            return (
                OUTCOME_SKIP,
                json!({ "reason": "aw(P3 x H, 3) != 3", "hypothesis_aw": h_aw }),
            );
        }
        match aw(cartesian_product(g, h).graph(), 3) {
            Ok(res) if res.aw == 3 => (OUTCOME_PASS, json!({ "aw": res.aw })),
            Ok(res) => (OUTCOME_FAIL, json!({ "aw": res.aw, "expected": 3 })),
            Err(e) => fail_err(&e),
        }
    }))
}

fn run_aw_le_4(opts: &VerifyOptions, existing: &BTreeMap<String, ResultRecord>) -> Result<Vec<ResultRecord>> {
    let mb = opts.m(3, 4, MAX_GRAPH_VERTICES, "left graph")?;
    let nb = opts.n(3, 4, MAX_GRAPH_VERTICES, "right graph")?;
    let gs = graph_family(2, mb)?;
    let hs = graph_family(2, nb)?;
    let mut items = Vec::new();
    for g in &gs {
        for h in &hs {
            items.push((g6(g), g6(h), Params::new(), (g.clone(), h.clone())));
        }
    }
    Ok(drive(existing, "THM_AW_LE_4", items, |(g, h)| {
        match aw(cartesian_product(g, h).graph(), 3) {
            Ok(res) if (3..=4).contains(&res.aw) => (
                OUTCOME_PASS,
                json!({ "aw": res.aw, "pool": pool_value(&res.certificates) }),
            ),
            Ok(res) => (OUTCOME_FAIL, json!({ "aw": res.aw, "expected_range": [3, 4] })),
            Err(e) => fail_err(&e),
        }
    }))
}

/// The closed-form value of aw(Pm x Pn, 3) for m, n >= 2.
pub fn pmpn_expected(m: usize, n: usize) -> u16 {
    let small = |a: usize, b: usize| (a == 2 && b % 2 == 0) || (a == 3 && b % 2 == 1);
    if small(m, n) || small(n, m) {
        3
    } else {
        4
    }
}

fn pmpn_identity(m: usize, n: usize) -> (String, String, Params) {
    (
        g6(&Graph::path(m)),
        g6(&Graph::path(n)),
        param_map(&[("m", json!(m)), ("n", json!(n))]),
    )
}

/// Checks one grid instance against the closed form. The product graph is
/// a parameter so a corrupted product (for example with a dropped edge)
/// demonstrably produces a failing record with a counterexample payload.
pub fn check_pmpn_instance(product: &Graph, m: usize, n: usize) -> Result<ResultRecord> {
    if m < 2 || n < 2 {
        return Err(Error::Precondition("grid sides must be at least 2".into()));
    }
    let (lhs, rhs, params) = pmpn_identity(m, n);
    let expected = pmpn_expected(m, n);
    let res = aw(product, 3)?;
    let outcome = if res.aw == expected { OUTCOME_PASS } else { OUTCOME_FAIL };
    Ok(ResultRecord {
        schema: SCHEMA_VERSION,
        claim: "THM_PMPN".to_string(),
        lhs,
        rhs,
        params,
        outcome: outcome.to_string(),
        payload: json!({
            "aw": res.aw,
            "expected": expected,
            "pool": pool_value(&res.certificates),
        }),
    })
}

fn run_pmpn(opts: &VerifyOptions, existing: &BTreeMap<String, ResultRecord>) -> Result<Vec<ResultRecord>> {
    let mb = opts.m(4, 5, 63, "grid side")?;
    let nb = opts.n(4, 5, 63, "grid side")?;
    let mut items = Vec::new();
    for m in 2..=mb {
        for n in 2..=nb {
            let (lhs, rhs, params) = pmpn_identity(m, n);
            items.push((lhs, rhs, params, (m, n)));
        }
    }
    Ok(drive(existing, "THM_PMPN", items, |&(m, n)| {
        let p = cartesian_product(&Graph::path(m), &Graph::path(n));
        match check_pmpn_instance(p.graph(), m, n) {
            Ok(rec) => {
                let outcome = if rec.outcome == OUTCOME_PASS { OUTCOME_PASS } else { OUTCOME_FAIL };
                (outcome, rec.payload)
            }
            Err(e) => fail_err(&e),
        }
    }))
}

fn tree_items(
    opts: &VerifyOptions,
    lo: usize,
    quick: usize,
    full: usize,
) -> Result<Vec<(String, String, Params, Graph)>> {
    let tb = opts.m(quick, full, MAX_TREE_VERTICES, "tree")?;
    Ok(tree_family(lo, tb)?
        .into_iter()
        .map(|t| (g6(&t), String::new(), Params::new(), t))
        .collect())
}

fn run_spine_equi(opts: &VerifyOptions, existing: &BTreeMap<String, ResultRecord>) -> Result<Vec<ResultRecord>> {
    let items = tree_items(opts, 1, 6, 8)?;
    Ok(drive(existing, "LEM_SPINE_EQUI", items, |t| {
        let ts = match TreeStructure::new(t.clone()) {
            Ok(ts) => ts,
            Err(e) => return fail_err(&e),
        };
        let mut pairs = 0u64;
        for u in t.vertices().filter(|&u| !ts.on_spine(u)) {
            let root = match ts.root_of(u) {
                Ok(r) => r,
                Err(e) => return fail_err(&e),
            };
            let branch = match ts.branch(root) {
                Ok(b) => b.to_vec(),
                Err(e) => return fail_err(&e),
            };
            for v in t.vertices().filter(|v| !branch.contains(v)) {
                match equidistant_spine_vertex(&ts, u, v) {
                    Ok(s) if ts.on_spine(s) && t.dist(s, v) == t.dist(u, v) => pairs += 1,
                    Ok(s) => {
                        return (
                            OUTCOME_FAIL,
                            json!({ "u": u, "v": v, "returned": s, "error": "not equidistant" }),
                        )
                    }
                    Err(e) => {
                        return (OUTCOME_FAIL, json!({ "u": u, "v": v, "error": e.to_string() }))
                    }
                }
            }
        }
        (OUTCOME_PASS, json!({ "pairs": pairs, "spine": ts.spine() }))
    }))
}

fn run_dplus1(opts: &VerifyOptions, existing: &BTreeMap<String, ResultRecord>) -> Result<Vec<ResultRecord>> {
    let items = tree_items(opts, 1, 6, 8)?;
    Ok(drive(existing, "COR_DPLUS1", items, |t| {
        let ecc = t.eccentricities();
        let mut pairs = 0u64;
        for u in t.vertices().filter(|&u| ecc.ecc[u] < ecc.diameter) {
            for v in t.vertices() {
                match extend_distance_vertex(t, u, v) {
                    Ok(w) if t.dist(w, v) == t.dist(u, v) + 1 => pairs += 1,
                    Ok(w) => {
                        return (
                            OUTCOME_FAIL,
                            json!({ "u": u, "v": v, "returned": w, "error": "wrong distance" }),
                        )
                    }
                    Err(e) => {
                        return (OUTCOME_FAIL, json!({ "u": u, "v": v, "error": e.to_string() }))
                    }
                }
            }
        }
        (OUTCOME_PASS, json!({ "pairs": pairs }))
    }))
}

fn run_3per_even(opts: &VerifyOptions, existing: &BTreeMap<String, ResultRecord>) -> Result<Vec<ResultRecord>> {
    let items = tree_items(opts, 1, 7, 9)?;
    Ok(drive(existing, "LEM_3PER_EVEN", items, |t| {
        match is_k_peripheral(t, 3) {
            Ok(Some(_)) => {}
            Ok(None) => return (OUTCOME_SKIP, json!({ "reason": "not 3-peripheral" })),
            Err(e) => return fail_err(&e),
        }
        let diam = t.diameter();
        if diam % 2 != 0 {
            return (OUTCOME_FAIL, json!({ "diameter": diam, "error": "odd diameter" }));
        }
        let ecc = t.eccentricities();
        let per = &ecc.peripheral;
        let mut triples = 0u64;
        for (a, &x) in per.iter().enumerate() {
            for (b, &y) in per.iter().enumerate().skip(a + 1) {
                if t.dist(x, y) != diam {
                    continue;
                }
                for &z in per.iter().skip(b + 1) {
                    if t.dist(x, z) != diam || t.dist(y, z) != diam {
                        continue;
                    }
                    match peripheral_center(t, x, y, z) {
                        Ok(c)
                            if t.dist(c, x) == diam / 2
                                && t.dist(c, y) == diam / 2
                                && t.dist(c, z) == diam / 2 =>
                        {
                            triples += 1
                        }
                        Ok(c) => {
                            return (
                                OUTCOME_FAIL,
                                json!({ "triple": [x, y, z], "center": c, "error": "not equidistant" }),
                            )
                        }
                        Err(e) => {
                            return (
                                OUTCOME_FAIL,
                                json!({ "triple": [x, y, z], "error": e.to_string() }),
                            )
                        }
                    }
                }
            }
        }
        (OUTCOME_PASS, json!({ "diameter": diam, "triples": triples }))
    }))
}

/// Shared shape for the aw(left x T, 3) = 3 claims over 3-peripheral
/// trees: skip trees failing the hypothesis, assert aw = 3 otherwise.
fn eval_aw3_product(left: &Graph, t: &Graph) -> (&'static str, Value) {
    match is_k_peripheral(t, 3) {
        Ok(Some(_)) => {}
        Ok(None) => return (OUTCOME_SKIP, json!({ "reason": "tree is not 3-peripheral" })),
        Err(e) => return fail_err(&e),
    }
    match aw(cartesian_product(left, t).graph(), 3) {
        Ok(res) if res.aw == 3 => (OUTCOME_PASS, json!({ "aw": res.aw })),
        Ok(res) => (
            OUTCOME_FAIL,
            json!({
                "aw": res.aw,
                "expected": 3,
                "pool": pool_value(&res.certificates),
            }),
        ),
        Err(e) => fail_err(&e),
    }
}

fn run_p2t(opts: &VerifyOptions, existing: &BTreeMap<String, ResultRecord>) -> Result<Vec<ResultRecord>> {
    let tb = opts.n(5, 6, MAX_TREE_VERTICES, "tree")?;
    let p2 = Graph::path(2);
    let items: Vec<_> = tree_family(2, tb)?
        .into_iter()
        .map(|t| (g6(&p2), g6(&t), Params::new(), (p2.clone(), t)))
        .collect();
    Ok(drive(existing, "LEM_P2T", items, |(p2, t)| eval_aw3_product(p2, t)))
}

fn run_pnt(opts: &VerifyOptions, existing: &BTreeMap<String, ResultRecord>) -> Result<Vec<ResultRecord>> {
    let pb = opts.m(3, 4, 63, "path length")?;
    let tb = opts.n(5, 6, MAX_TREE_VERTICES, "tree")?;
    let trees = tree_family(2, tb)?;
    let mut items = Vec::new();
    for len in 2..=pb {
        let p = Graph::path(len);
        for t in &trees {
            items.push((
                g6(&p),
                g6(t),
                param_map(&[("path_n", json!(len))]),
                (p.clone(), t.clone()),
            ));
        }
    }
    Ok(drive(existing, "LEM_PNT", items, |(p, t)| eval_aw3_product(p, t)))
}

fn run_3per_g(opts: &VerifyOptions, existing: &BTreeMap<String, ResultRecord>) -> Result<Vec<ResultRecord>> {
    let tb = opts.m(5, 6, MAX_TREE_VERTICES, "tree")?;
    let gb = opts.n(3, 4, MAX_GRAPH_VERTICES, "right graph")?;
    let trees = tree_family(2, tb)?;
    let gs = graph_family(2, gb)?;
    let mut items = Vec::new();
    for t in &trees {
        for g in &gs {
            items.push((g6(t), g6(g), Params::new(), (t.clone(), g.clone())));
        }
    }
    Ok(drive(existing, "THM_3PER_G", items, |(t, g)| {
        match is_k_peripheral(t, 3) {
            Ok(Some(_)) => {}
            Ok(None) => return (OUTCOME_SKIP, json!({ "reason": "tree is not 3-peripheral" })),
            Err(e) => return fail_err(&e),
        }
        match aw(cartesian_product(t, g).graph(), 3) {
            Ok(res) if res.aw == 3 => (OUTCOME_PASS, json!({ "aw": res.aw })),
            Ok(res) => (
                OUTCOME_FAIL,
                json!({ "aw": res.aw, "expected": 3, "pool": pool_value(&res.certificates) }),
            ),
            Err(e) => fail_err(&e),
        }
    }))
}

fn run_prod_not3per(opts: &VerifyOptions, existing: &BTreeMap<String, ResultRecord>) -> Result<Vec<ResultRecord>> {
    let tb = opts.m(5, 6, MAX_TREE_VERTICES, "tree")?;
    let trees = tree_family(1, tb)?;
    let mut items = Vec::new();
    for (i, t1) in trees.iter().enumerate() {
        for t2 in trees.iter().skip(i) {
            items.push((g6(t1), g6(t2), Params::new(), (t1.clone(), t2.clone())));
        }
    }
    Ok(drive(existing, "LEM_PROD_NOT3PER", items, |(t1, t2)| {
        for t in [t1, t2] {
            match is_k_peripheral(t, 3) {
                Ok(Some(_)) => {
                    return (OUTCOME_SKIP, json!({ "reason": "a factor is 3-peripheral" }))
                }
                Ok(None) => {}
                Err(e) => return fail_err(&e),
            }
        }
        let p = cartesian_product(t1, t2);
        match is_k_peripheral(p.graph(), 3) {
            Ok(None) => (OUTCOME_PASS, json!({ "product_n": p.graph().n() })),
            Ok(Some(w)) => (OUTCOME_FAIL, json!({ "witness": w })),
            Err(e) => fail_err(&e),
        }
    }))
}

fn run_treediam(opts: &VerifyOptions, existing: &BTreeMap<String, ResultRecord>) -> Result<Vec<ResultRecord>> {
    let items = tree_items(opts, 1, 7, 9)?;
    Ok(drive(existing, "LEM_TREEDIAM", items, |t| {
        match is_k_peripheral(t, 3) {
            Ok(Some(_)) => return (OUTCOME_SKIP, json!({ "reason": "3-peripheral" })),
            Ok(None) => {}
            Err(e) => return fail_err(&e),
        }
        let diam = t.diameter();
        let mut quads = 0u64;
        for ui in t.vertices() {
            for uj in t.vertices() {
                if t.dist(ui, uj) != diam {
                    continue;
                }
                for ux in t.vertices().filter(|&x| t.dist(x, uj) == diam) {
                    for uy in t.vertices().filter(|&y| t.dist(ui, y) == diam) {
                        if t.dist(ux, uy) != diam {
                            return (
                                OUTCOME_FAIL,
                                json!({
                                    "diametral_pair": [ui, uj],
                                    "partners": [ux, uy],
                                    "distance": t.dist(ux, uy),
                                    "diameter": diam,
                                }),
                            );
                        }
                        quads += 1;
                    }
                }
            }
        }
        (OUTCOME_PASS, json!({ "diameter": diam, "quadruples": quads }))
    }))
}

fn run_odd4(opts: &VerifyOptions, existing: &BTreeMap<String, ResultRecord>) -> Result<Vec<ResultRecord>> {
    let tb = opts.m(4, 6, MAX_TREE_VERTICES, "tree")?;
    let aw_cap = match opts.profile {
        Profile::Quick => 16,
        Profile::Full => 24,
    };
    let trees = tree_family(2, tb)?;
    let mut items = Vec::new();
    for (i, t1) in trees.iter().enumerate() {
        for t2 in trees.iter().skip(i) {
            items.push((g6(t1), g6(t2), Params::new(), (t1.clone(), t2.clone())));
        }
    }
    Ok(drive(existing, "THM_ODD_4", items, |(t1, t2)| {
        for t in [t1, t2] {
            match is_k_peripheral(t, 3) {
                Ok(Some(_)) => {
                    return (OUTCOME_SKIP, json!({ "reason": "a factor is 3-peripheral" }))
                }
                Ok(None) => {}
                Err(e) => return fail_err(&e),
            }
        }
        let p = cartesian_product(t1, t2);
        let diam = p.graph().diameter();
        if diam % 2 == 0 {
            return (
                OUTCOME_SKIP,
                json!({ "reason": "even product diameter", "diameter": diam }),
            );
        }
        let choices = enumerate_diametral_choices(p.graph());
        let mut pool = Vec::new();
        for ch in &choices {
            let coloring = match odd_diameter_coloring(&p, ch) {
                Ok(c) => c,
                Err(e) => {
                    return (
                        OUTCOME_FAIL,
                        json!({ "choice": [ch.source, ch.sink], "error": e.to_string() }),
                    )
                }
            };
            if coloring.color_count() != 3 {
                return (
                    OUTCOME_FAIL,
                    json!({ "choice": [ch.source, ch.sink], "colors": coloring.color_count() }),
                );
            }
            match validate_coloring(p.graph(), &coloring, 3) {
                Ok(rep) if rep.is_rainbow_free() => {
                    pool.push(serde_json::to_value(&coloring).expect("serializable"));
                }
                Ok(rep) => {
                    return (
                        OUTCOME_FAIL,
                        json!({
                            "choice": [ch.source, ch.sink],
                            "rainbow": serde_json::to_value(&rep.rainbow).expect("serializable"),
                        }),
                    )
                }
                Err(e) => {
                    return (
                        OUTCOME_FAIL,
                        json!({ "choice": [ch.source, ch.sink], "error": e.to_string() }),
                    )
                }
            }
        }
        // Cheap tier: every diametral coloring validated. Expensive tier:
        // full search confirming aw = 4 on products within the size cap.
        if p.graph().n() <= aw_cap {
            match aw(p.graph(), 3) {
                Ok(res) if res.aw == 4 => {
                    let mut arr = pool;
                    if let Value::Array(more) = pool_value(&res.certificates) {
                        arr.extend(more);
                    }
                    (
                        OUTCOME_PASS,
                        json!({
                            "tier": "full-search",
                            "aw": res.aw,
                            "choices": choices.len(),
                            "pool": arr,
                        }),
                    )
                }
                Ok(res) => (
                    OUTCOME_FAIL,
                    json!({ "tier": "full-search", "aw": res.aw, "expected": 4 }),
                ),
                Err(e) => fail_err(&e),
            }
        } else {
            (
                OUTCOME_PASS,
                json!({ "tier": "colorings-only", "choices": choices.len(), "pool": pool }),
            )
        }
    }))
}

/// The two pinned figure instances: a 5-vertex spider and a 6-vertex tree,
/// each crossed with P4.
pub fn figure_trees() -> (Graph, Graph) {
    let left = Graph::from_edges(5, &[(1, 2), (2, 3), (3, 4), (3, 5)])
        .expect("pinned 5-vertex tree");
    let right = Graph::from_edges(6, &[(1, 2), (2, 3), (3, 4), (3, 5), (2, 6)])
        .expect("pinned 6-vertex tree");
    (left, right)
}

fn run_fig2(_opts: &VerifyOptions, existing: &BTreeMap<String, ResultRecord>) -> Result<Vec<ResultRecord>> {
    let (spider, wide) = figure_trees();
    let p4 = Graph::path(4);
    let items = vec![
        (
            g6(&spider),
            g6(&p4),
            param_map(&[("instance", json!("choice-dependent"))]),
            (spider.clone(), true),
        ),
        (
            g6(&wide),
            g6(&p4),
            param_map(&[("instance", json!("always-rainbow"))]),
            (wide.clone(), false),
        ),
    ];
    Ok(drive(existing, "FIG2_REPRO", items, |(tree, expect_split)| {
        let p = cartesian_product(tree, &Graph::path(4));
        let choices = enumerate_diametral_choices(p.graph());
        let mut rainbow_free = 0usize;
        let mut with_rainbow = 0usize;
        let mut pool = Vec::new();
        for ch in &choices {
            let outcome = match generalized_even_coloring(&p, ch) {
                Ok(o) => o,
                Err(e) => {
                    return (
                        OUTCOME_FAIL,
                        json!({ "choice": [ch.source, ch.sink], "error": e.to_string() }),
                    )
                }
            };
            match validate_coloring(p.graph(), &outcome.coloring, 3) {
                Ok(rep) if rep.is_rainbow_free() => {
                    rainbow_free += 1;
                    pool.push(serde_json::to_value(&outcome.coloring).expect("serializable"));
                }
                Ok(_) => with_rainbow += 1,
                Err(e) => {
                    return (
                        OUTCOME_FAIL,
                        json!({ "choice": [ch.source, ch.sink], "error": e.to_string() }),
                    )
                }
            }
        }
        let ok = if *expect_split {
            rainbow_free >= 1 && with_rainbow >= 1
        } else {
            rainbow_free == 0 && with_rainbow == choices.len()
        };
        let payload = json!({
            "choices": choices.len(),
            "rainbow_free": rainbow_free,
            "with_rainbow": with_rainbow,
            "pool": pool,
        });
        (if ok { OUTCOME_PASS } else { OUTCOME_FAIL }, payload)
    }))
}

fn run_conj_kper(opts: &VerifyOptions, existing: &BTreeMap<String, ResultRecord>) -> Result<Vec<ResultRecord>> {
    let k = opts.k.unwrap_or(4);
    if !(2..=6).contains(&k) {
        return Err(Error::Input(format!(
            "exploration supports progression lengths 2..=6, got {k}"
        )));
    }
    let tb = opts.m(6, 7, MAX_TREE_VERTICES, "tree")?;
    let gb = opts.n(3, 3, MAX_GRAPH_VERTICES, "right graph")?;
    let trees = tree_family(2, tb)?;
    let gs = graph_family(2, gb)?;
    let mut items = Vec::new();
    for t in &trees {
        for g in &gs {
            items.push((
                g6(t),
                g6(g),
                param_map(&[("k", json!(k))]),
                (t.clone(), g.clone(), k),
            ));
        }
    }
    Ok(drive(existing, "CONJ_KPER", items, |(t, g, k)| {
        match is_k_peripheral(t, *k) {
            Ok(Some(_)) => {}
            Ok(None) => {
                return (OUTCOME_SKIP, json!({ "reason": format!("tree is not {k}-peripheral") }))
            }
            Err(e) => return fail_err(&e),
        }
        match aw(cartesian_product(t, g).graph(), *k) {
            Ok(res) => (
                OUTCOME_OBSERVED,
                json!({ "aw": res.aw, "matches_k": res.aw as usize == *k }),
            ),
            Err(e) => (OUTCOME_OBSERVED, json!({ "error": e.to_string() })),
        }
    }))
}

fn run_structural(
    claim: &'static str,
    pool: &Pool,
    existing: &BTreeMap<String, ResultRecord>,
) -> Vec<ResultRecord> {
    let items: Vec<(String, String, Params, usize)> = pool
        .entries
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let params = param_map(&[
                ("origin", json!(e.origin)),
                ("coloring", serde_json::to_value(&e.coloring).expect("serializable")),
            ]);
            (e.lhs.clone(), e.rhs.clone(), params, i)
        })
        .collect();
    drive(existing, claim, items, |&i| {
        let entry = &pool.entries[i];
        let report = match check_structural_lemmas(&entry.product, &entry.coloring) {
            Ok(r) => r,
            Err(e) => return fail_err(&e),
        };
        let outcome = match claim {
            "LEM_COPY_2" => &report.copy_bound,
            "LEM_UNION_2" => &report.adjacent_union_bound,
            _ => &report.difference_bound,
        };
        let payload = json!({
            "r": entry.coloring.color_count(),
            "result": serde_json::to_value(outcome).expect("serializable"),
        });
        match outcome {
            LemmaOutcome::Holds { .. } => (OUTCOME_PASS, payload),
            LemmaOutcome::Skipped { .. } => (OUTCOME_SKIP, payload),
            LemmaOutcome::Violated { .. } => (OUTCOME_FAIL, payload),
        }
    })
}

// ---------------------------------------------------------------------
// Orchestration
// ---------------------------------------------------------------------

fn index_records(existing: &[ResultRecord]) -> BTreeMap<String, ResultRecord> {
    existing.iter().map(|r| (r.key(), r.clone())).collect()
}

fn seed_pool_example(pool: &mut Pool) {
    let (p, c) = example_p3c6_coloring();
    pool.add("EXAMPLE_P3C6", &g6(p.left()), &g6(p.right()), &p, c);
}

fn run_one(
    info: &'static ClaimInfo,
    opts: &VerifyOptions,
    existing: &BTreeMap<String, ResultRecord>,
    pool: &mut Pool,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let records = match info.id {
        "PROP_DIST" => run_prop_dist(opts, existing)?,
        "OBS_DIAM" => run_obs_diam(opts, existing)?,
        "COR_ISO_SUBPROD" => run_iso_subprod(opts, existing)?,
        "LEM_PATH_OR_C3" => run_path_or_c3(opts, existing)?,
        "THM_DIAM2_PROD" => run_diam2_prod(opts, existing)?,
        "LEM_UNION_2" => run_structural("LEM_UNION_2", pool, existing),
        "LEM_COPY_2" => run_structural("LEM_COPY_2", pool, existing),
        "LEM_DIFF_1" => run_structural("LEM_DIFF_1", pool, existing),
        "THM_AW_LE_4" => run_aw_le_4(opts, existing)?,
        "THM_PMPN" => run_pmpn(opts, existing)?,
        "LEM_SPINE_EQUI" => run_spine_equi(opts, existing)?,
        "COR_DPLUS1" => run_dplus1(opts, existing)?,
        "LEM_3PER_EVEN" => run_3per_even(opts, existing)?,
        "LEM_P2T" => run_p2t(opts, existing)?,
        "LEM_PNT" => run_pnt(opts, existing)?,
        "THM_3PER_G" => run_3per_g(opts, existing)?,
        "LEM_PROD_NOT3PER" => run_prod_not3per(opts, existing)?,
        "LEM_TREEDIAM" => run_treediam(opts, existing)?,
        "THM_ODD_4" => run_odd4(opts, existing)?,
        "FIG2_REPRO" => run_fig2(opts, existing)?,
        "CONJ_KPER" => run_conj_kper(opts, existing)?,
        other => return Err(Error::UnknownClaim(other.to_string())),
    };
    pool.harvest(&records);
    Ok(VerificationReport::new(info, records, start.elapsed()))
}

/// Runs one of the copy-structure claims (`LEM_COPY_2`, `LEM_UNION_2`,
/// `LEM_DIFF_1`) against the certificate pool advertised by the given
/// producer records, plus the flagship example coloring. This is how the
/// copy-structure claims are checked against certificates computed at
/// arbitrary bounds without recomputing them.
pub fn check_certificates_with(
    claim: &str,
    producer_records: &[ResultRecord],
    existing: &[ResultRecord],
) -> Result<VerificationReport> {
    let info = claim_info(claim).ok_or_else(|| Error::UnknownClaim(claim.to_string()))?;
    if !STRUCTURAL_CLAIMS.contains(&info.id) {
        return Err(Error::Input(format!(
            "{claim} does not consume certificates; use verify_claim"
        )));
    }
    let start = Instant::now();
    let mut pool = Pool::default();
    seed_pool_example(&mut pool);
    pool.harvest(producer_records);
    let records = run_structural(info.id, &pool, &index_records(existing));
    Ok(VerificationReport::new(info, records, start.elapsed()))
}

/// Runs a single claim at the given bounds. The three copy-structure
/// claims first build their certificate pool from the flagship example
/// coloring plus the grid, bounded-product, and odd-diameter claims at the
/// same bounds.
pub fn verify_claim(id: &str, opts: &VerifyOptions) -> Result<VerificationReport> {
    verify_claim_with(id, opts, &[])
}

/// As [`verify_claim`], reusing outcomes from previously stored records:
/// an instance whose identity key matches a stored record is not
/// recomputed.
pub fn verify_claim_with(
    id: &str,
    opts: &VerifyOptions,
    existing: &[ResultRecord],
) -> Result<VerificationReport> {
    let info = claim_info(id).ok_or_else(|| Error::UnknownClaim(id.to_string()))?;
    let existing = index_records(existing);
    let mut pool = Pool::default();
    if STRUCTURAL_CLAIMS.contains(&info.id) {
        seed_pool_example(&mut pool);
        for producer in ["THM_PMPN", "THM_AW_LE_4", "THM_ODD_4", "FIG2_REPRO"] {
            let producer_info = claim_info(producer).expect("registered");
            run_one(producer_info, opts, &existing, &mut pool)?;
        }
    }
    run_one(info, opts, &existing, &mut pool)
}

/// Runs every non-exploratory claim at the profile's bounds and returns
/// reports in registry order. Certificate-producing claims run first so
/// the copy-structure claims see the full pool.
pub fn verify_all(opts: &VerifyOptions) -> Result<Vec<VerificationReport>> {
    verify_all_with(opts, &[])
}

/// As [`verify_all`], reusing stored records.
pub fn verify_all_with(
    opts: &VerifyOptions,
    existing: &[ResultRecord],
) -> Result<Vec<VerificationReport>> {
    let existing = index_records(existing);
    let mut pool = Pool::default();
    seed_pool_example(&mut pool);
    let mut reports = Vec::new();
    for id in RUN_ORDER {
        let info = claim_info(id).expect("run order lists registered claims");
        reports.push(run_one(info, opts, &existing, &mut pool)?);
    }
    reports.sort_by_key(|r| registry_index(&r.claim));
    Ok(reports)
}
