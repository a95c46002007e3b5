//! Black-box tests of the command-line binary: determinism of stdout and
//! machine output, exit codes, and output contracts.

mod common;

use std::path::Path;
use std::process::{Command, Output};

fn awgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_awgraph"))
        .args(args)
        .env_remove("AWGRAPH_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        vec!["aw", "--graph6", "Bg", "--k", "3"],
        vec!["verify", "--claim", "THM_PMPN"],
        vec!["trees", "--n", "6"],
        vec!["graphs", "--n", "4"],
        vec!["color", "--left", "Cq", "--right", "Bg", "--scheme", "odd-diametral", "--pair", "all"],
    ] {
        let first = awgraph(&args);
        let second = awgraph(&args);
        assert_eq!(first.status.code(), Some(0), "args {:?}: {}", args, stdout_of(&first));
        assert_eq!(first.stdout, second.stdout, "stdout differs for {args:?}");
    }
}

#[test]
fn machine_output_files_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let out1 = dir.path().join("a.ldjson");
    let out2 = dir.path().join("b.ldjson");
    for (path, _) in [(&out1, 0), (&out2, 1)] {
        let run = awgraph(&[
            "aw",
            "--left",
            "Cq",
            "--right",
            "Bg",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(run.status.code(), Some(0));
    }
    assert_eq!(
        std::fs::read(&out1).unwrap(),
        std::fs::read(&out2).unwrap(),
        "machine output differs between identical runs"
    );
    let line: serde_json::Value =
        serde_json::from_str(std::fs::read_to_string(&out1).unwrap().lines().next().unwrap())
            .unwrap();
    assert_eq!(line["k"], 3);
    assert!(line.get("wall").is_none(), "timing must not leak into machine output");
}

#[test]
fn exit_codes_follow_the_contract() {
    // Success.
    assert_eq!(awgraph(&["aw", "--graph6", "Bg"]).status.code(), Some(0));
    // Input errors exit 2.
    assert_eq!(awgraph(&["aw", "--graph6", "!!bogus!!"]).status.code(), Some(2));
    assert_eq!(awgraph(&["verify", "--claim", "NO_SUCH_CLAIM"]).status.code(), Some(2));
    assert_eq!(awgraph(&["trees", "--n", "99"]).status.code(), Some(2));
    // Usage errors exit 2 (clap).
    assert_eq!(awgraph(&["aw", "--graph6", "Bg", "--left", "Bg"]).status.code(), Some(2));
    assert_eq!(awgraph(&["no-such-subcommand"]).status.code(), Some(2));
}

#[test]
fn check_flag_reports_rainbow_with_exit_one() {
    // The pinned 6-vertex tree times P4: every diametral choice of the
    // even-diameter coloring contains a rainbow 3-AP.
    let (_, wide) = {
        let (a, b) = awgraph_figure_trees();
        (a, b)
    };
    let run = awgraph(&[
        "color",
        "--left",
        &wide,
        "--right",
        "Cq",
        "--scheme",
        "even-diametral",
        "--pair",
        "all",
        "--check",
    ]);
    assert_eq!(run.status.code(), Some(1), "{}", stdout_of(&run));
    assert!(stdout_of(&run).contains("rainbow 3-AP"));
}

fn awgraph_figure_trees() -> (String, String) {
    let (left, right) = awgraph::verify::figure_trees();
    (
        awgraph::encode_graph6(&left).unwrap(),
        awgraph::encode_graph6(&right).unwrap(),
    )
}

#[test]
fn pair_all_emits_one_line_per_diametral_choice() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("choices.ldjson");
    // Cq x Bg is a P4 x P3 product with odd diameter 5.
    let run = awgraph(&[
        "color",
        "--left",
        "Cq",
        "--right",
        "Bg",
        "--scheme",
        "odd-diametral",
        "--pair",
        "all",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(run.status.code(), Some(0), "{}", stdout_of(&run));
    let p = awgraph::cartesian_product(
        &awgraph::parse_graph6("Cq").unwrap(),
        &awgraph::parse_graph6("Bg").unwrap(),
    );
    let expected = awgraph::schemes::enumerate_diametral_choices(p.graph()).len();
    let lines = std::fs::read_to_string(&out).unwrap().lines().count();
    assert_eq!(lines, expected, "--pair all must cover every diametral choice");
}

#[test]
fn explicit_pair_coordinates_are_validated() {
    // In the catalog labeling of Cq the path runs 3-1-2-4, so (3,1) and
    // (4,3) sit at product distance 3 + 2 = 5 = diam.
    let good = awgraph(&[
        "color", "--left", "Cq", "--right", "Bg", "--scheme", "odd-diametral",
        "--pair", "3,1;4,3",
    ]);
    assert_eq!(good.status.code(), Some(0), "{}", stdout_of(&good));
    let bad = awgraph(&[
        "color", "--left", "Cq", "--right", "Bg", "--scheme", "odd-diametral",
        "--pair", "1,1;1,2",
    ]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn version_names_the_record_schema() {
    let out = stdout_of(&awgraph(&["--version"]));
    assert!(out.contains("record schema 1"), "{out}");
}

#[test]
fn verify_store_resumes_idempotently() {
    let dir = tempfile::tempdir().unwrap();
    let store = dir.path().join("store.ldjson");
    let first = awgraph(&[
        "verify", "--claim", "LEM_P2T", "--out", store.to_str().unwrap(),
    ]);
    assert_eq!(first.status.code(), Some(0), "{}", stdout_of(&first));
    let bytes_after_first = std::fs::read(&store).unwrap();
    let second = awgraph(&[
        "verify", "--claim", "LEM_P2T", "--out", store.to_str().unwrap(),
    ]);
    assert_eq!(second.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(
        bytes_after_first,
        std::fs::read(&store).unwrap(),
        "an identical rerun must not grow the store"
    );
}

#[test]
fn input_files_are_sniffed_by_format() {
    let dir = tempfile::tempdir().unwrap();
    let edges = dir.path().join("tree.edges");
    std::fs::write(&edges, "5\n1 2\n2 3\n3 4\n3 5\n").unwrap();
    let g6 = dir.path().join("tree.g6");
    std::fs::write(&g6, "DhG\n").unwrap();
    let from_edges = stdout_of(&awgraph(&[
        "analyze", "--input", edges.to_str().unwrap(),
    ]));
    let from_g6 = stdout_of(&awgraph(&["analyze", "--input", g6.to_str().unwrap()]));
    assert_eq!(from_edges, from_g6, "both formats describe the same tree");
    assert!(from_edges.contains("spine"));
}

#[test]
fn thread_count_does_not_change_output() {
    let single = awgraph(&["verify", "--claim", "THM_PMPN", "--threads", "1"]);
    let multi = awgraph(&["verify", "--claim", "THM_PMPN", "--threads", "4"]);
    assert_eq!(single.status.code(), Some(0));
    assert_eq!(single.stdout, multi.stdout);

    let via_env = Command::new(env!("CARGO_BIN_EXE_awgraph"))
        .args(["verify", "--claim", "THM_PMPN"])
        .env("AWGRAPH_THREADS", "3")
        .output()
        .expect("binary runs");
    assert_eq!(via_env.status.code(), Some(0));
    assert_eq!(single.stdout, via_env.stdout);
}

#[test]
fn catalog_filters_subset_the_listing() {
    let all = stdout_of(&awgraph(&["trees", "--n", "7"]));
    let three_per = stdout_of(&awgraph(&["trees", "--n", "7", "--filter", "3-peripheral"]));
    let not_three = stdout_of(&awgraph(&["trees", "--n", "7", "--filter", "not-3-peripheral"]));
    let count = |s: &str| s.lines().count().saturating_sub(2);
    assert_eq!(count(&all), 11);
    assert_eq!(count(&three_per) + count(&not_three), count(&all));
    assert_eq!(
        awgraph(&["trees", "--n", "7", "--filter", "bogus"]).status.code(),
        Some(2)
    );
}

#[test]
fn catalog_counts_match_the_counting_oracles() {
    for n in 1..=7 {
        let listing = stdout_of(&awgraph(&["trees", "--n", &n.to_string()]));
        let count = listing.lines().count().saturating_sub(2);
        assert_eq!(count, common::prufer_tree_count(n), "trees on {n} vertices");
    }
    for n in 1..=5 {
        let listing = stdout_of(&awgraph(&["graphs", "--n", &n.to_string()]));
        let count = listing.lines().count().saturating_sub(2);
        assert_eq!(count, common::connected_graph_count(n), "graphs on {n} vertices");
    }
}

#[test]
fn machine_output_path_is_created_fresh() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("nested.ldjson");
    assert!(!Path::new(&out).exists());
    let run = awgraph(&[
        "product", "--left", "Bg", "--right", "Bg", "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(run.status.code(), Some(0));
    let line: serde_json::Value =
        serde_json::from_str(std::fs::read_to_string(&out).unwrap().trim()).unwrap();
    assert_eq!(line["n"], 9);
    assert_eq!(line["diameter"], 4);
}
