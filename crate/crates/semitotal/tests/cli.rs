use std::process::Command;

use semitotal::{parse_graph, write_graph, Format};
use semitotal_core::generators::{generate, GeneratorSpec};
use semitotal_core::oracle::{solve_exact, DominationKind};
use semitotal_core::rules::reduce;
use serde_json::Value;

struct Run {
    code: u8,
    out: String,
    err: String,
}

fn run(args: &[&str], stdin: &str) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("semitotal").chain(args.iter().copied());
    let code = semitotal::run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    Run { code, out: String::from_utf8(out).unwrap(), err: String::from_utf8(err).unwrap() }
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).unwrap_or_else(|e| panic!("bad JSON ({e}):\n{text}"))
}

fn star(m: u32) -> String {
    (1..=m).map(|i| format!("0 {i}\n")).collect()
}

#[test]
fn kernelize_collapses_a_star() {
    let r = run(&["kernelize", "--json"], &star(9));
    assert_eq!(r.code, 0, "{}", r.err);
    let g = parse_graph(&r.out, Format::EdgeList).unwrap();
    assert_eq!(g.vertex_count(), 2);
    assert_eq!(g.edge_count(), 1);
    let report = json(&r.err);
    assert_eq!(report["schema_version"], 1);
    assert_eq!(report["command"], "kernelize");
    assert_eq!(report["reduction"]["output"]["vertices"], 2);
    assert!(report["reduction"]["applications"]["R1"].as_u64().unwrap() >= 1);
}

#[test]
fn kernelize_leaves_an_edge_alone() {
    let r = run(&["kernelize", "--json"], "0 1\n");
    assert_eq!(r.code, 0);
    assert_eq!(r.out, "0 1\n");
    let report = json(&r.err);
    assert!(report["reduction"]["applications"].as_object().unwrap().values().all(|v| v == 0));
}

#[test]
fn kernelize_reports_a_planar_no_instance() {
    let grid = generate(&GeneratorSpec::Grid { rows: 20, cols: 20 }).unwrap();
    assert!(reduce(&grid).0.vertex_count() > 358);
    let r = run(&["kernelize", "--k", "1", "--json"], &write_graph(&grid, Format::EdgeList));
    assert_eq!(r.code, 0);
    assert_eq!(r.out, "0\n");
    let report = json(&r.err);
    assert_eq!(report["no_instance"], true);
    assert_eq!(report["kernel_bound"]["bound"], 358);

    let r = run(&["kernelize", "--k", "2"], &write_graph(&grid, Format::EdgeList));
    assert!(parse_graph(&r.out, Format::EdgeList).unwrap().vertex_count() > 358);
    assert!(r.err.contains("kernel bound"), "{}", r.err);
}

#[test]
fn kernelize_skips_the_bound_on_nonplanar_input() {
    let k5 = "0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";
    let r = run(&["kernelize", "--k", "0", "--json"], k5);
    let report = json(&r.err);
    assert_eq!(report["planar"], false);
    assert_eq!(report["no_instance"], false);
    assert!(report["kernel_bound"].is_null());
}

#[test]
fn solve_examples() {
    let c5 = "0 1\n1 2\n2 3\n3 4\n4 0\n";
    let r = run(&["solve", "--kind", "sds"], c5);
    assert_eq!(r.out, "2\n0 2\n");
    let r = run(&["solve"], "0\n");
    assert_eq!((r.code, r.out.as_str()), (0, "infeasible\n"));
    let r = run(&["solve", "--kind", "tds"], &star(3));
    assert_eq!(r.out.lines().next(), Some("2"));
    let r = run(&["solve", "--kind", "ds", "--json"], &star(3));
    let report = json(&r.out);
    assert_eq!(report["result"]["status"], "optimal");
    assert_eq!(report["result"]["chosen"], serde_json::json!([0]));
}

#[test]
fn solve_uses_the_format_for_ids() {
    let r = run(&["solve", "--format", "dimacs"], "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
    assert_eq!(r.out, "2\n1 3\n");
}

#[test]
fn solve_refuses_graphs_over_the_oracle_bound() {
    let r = run(&["solve", "--oracle-bound", "4"], "0 1\n1 2\n2 3\n3 4\n4 0\n");
    assert_eq!(r.code, 1);
    assert!(r.err.contains("oracle bound"), "{}", r.err);
    let r = run(&["solve", "--oracle-bound", "65"], "0 1\n");
    assert_eq!(r.code, 1);
}

#[test]
fn solving_the_kernel_matches_solving_the_graph() {
    for seed in 0..40 {
        let g = generate(&GeneratorSpec::RandomGnp { n: 9 + (seed % 5) as u32, p_percent: 30, seed }).unwrap();
        let text = write_graph(&g, Format::EdgeList);
        let plain = run(&["solve"], &text);
        let via = run(&["solve", "--via-kernel"], &text);
        assert_eq!(via.code, 0, "{}", via.err);
        assert_eq!(plain.out.lines().next(), via.out.lines().next(), "seed {seed}");
        if let Some(set) = via.out.lines().nth(1) {
            let dir = tempfile::tempdir().unwrap();
            let path = dir.path().join("set");
            std::fs::write(&path, set).unwrap();
            assert_eq!(run(&["verify", "--set", path.to_str().unwrap()], &text).code, 0);
        }
    }
    let r = run(&["solve", "--via-kernel", "--kind", "ds"], "0 1\n");
    assert_eq!(r.code, 1);
}

#[test]
fn solving_a_large_star_needs_the_kernel() {
    let text = star(40);
    assert_eq!(run(&["solve"], &text).code, 1);
    let r = run(&["solve", "--via-kernel", "--json"], &text);
    assert_eq!(r.code, 0, "{}", r.err);
    let report = json(&r.out);
    assert_eq!(report["result"]["size"], 2);
    assert_eq!(report["kernel"]["vertices"], 2);
}

fn set_file(dir: &tempfile::TempDir, contents: &str) -> String {
    let path = dir.path().join(format!("set{}", contents.len()));
    std::fs::write(&path, contents).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn verify_examples() {
    let dir = tempfile::tempdir().unwrap();
    let both = set_file(&dir, "0 1\n");
    let one = set_file(&dir, "0");
    let unknown = set_file(&dir, "0 1 7");
    assert_eq!(run(&["verify", "--set", &both], "0 1\n").code, 0);
    let r = run(&["verify", "--set", &one], "0 1\n");
    assert_eq!(r.code, 3);
    assert!(r.out.contains("no witness for vertex"), "{}", r.out);
    assert_eq!(run(&["verify", "--set", &one, "--kind", "ds"], "0 1\n").code, 0);
    let r = run(&["verify", "--set", &one, "--kind", "tds", "--json"], "0 1\n");
    assert_eq!(r.code, 3);
    assert_eq!(json(&r.out)["violation"]["clause"], "no_total_neighbor");
    assert_eq!(run(&["verify", "--set", &unknown], "0 1\n").code, 1);
    let r = run(&["verify", "--set", &one], "0 1\n1 2\n");
    assert!(r.out.contains("undominated vertex 2"), "{}", r.out);
}

fn reduced_planar_with_large_solution() -> (String, usize) {
    for seed in 0.. {
        let g = generate(&GeneratorSpec::RandomPlanar { n: 16, attempts: 10, seed }).unwrap();
        let (reduced, _) = reduce(&g);
        if reduced.vertex_count() > 20 {
            continue;
        }
        let k = solve_exact(&reduced, DominationKind::Semitotal, None).unwrap().size().unwrap();
        if k >= 3 {
            return (write_graph(&reduced, Format::EdgeList), k);
        }
    }
    unreachable!()
}

#[test]
fn stats_pass_on_a_reduced_planar_graph() {
    let (text, k) = reduced_planar_with_large_solution();
    let r = run(&["stats", "--json"], &text);
    assert_eq!(r.code, 0, "{}\n{}", r.out, r.err);
    let report = json(&r.out);
    assert_eq!(report["reduced"], true);
    assert_eq!(report["all_pass"], true);
    assert_eq!(report["base_set"].as_array().unwrap().len(), k);
    assert_eq!(report["decomposition"]["handshake"]["pass"], true);
    let plain = run(&["stats"], &text);
    assert!(plain.out.ends_with("all bounds pass\n"), "{}", plain.out);
}

#[test]
fn stats_flag_unreduced_graphs() {
    let k2_6: String = (2..8).flat_map(|i| [format!("0 {i}\n"), format!("1 {i}\n")]).collect();
    let r = run(&["stats", "--json"], &k2_6);
    assert_eq!(r.code, 3);
    let report = json(&r.out);
    assert_eq!(report["reduced"], false);
    assert_eq!(report["simple_regions"]["value"], 6);
    assert!(report["decomposition"].is_null());
}

#[test]
fn stats_and_decompose_need_planar_graphs() {
    let k33 = "0 3\n0 4\n0 5\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n";
    assert_eq!(run(&["stats"], k33).code, 1);
    assert_eq!(run(&["decompose"], k33).code, 1);
}

#[test]
fn decompose_lists_regions() {
    let (text, _) = reduced_planar_with_large_solution();
    let r = run(&["decompose", "--json"], &text);
    assert_eq!(r.code, 0, "{}", r.err);
    let report = json(&r.out);
    let regions = report["regions"].as_array().unwrap().len();
    assert!(regions as u64 <= report["region_bound"].as_u64().unwrap());
    assert_eq!(report["multigraph"]["edges"].as_array().unwrap().len(), regions);
    let dir = tempfile::tempdir().unwrap();
    let small = set_file(&dir, "0 1");
    assert_eq!(run(&["decompose", "--set", &small], "0 1\n").code, 1);
}

#[test]
fn gadget_on_an_edge_has_eight_vertices() {
    let r = run(&["gadget", "--json"], "0 1\n");
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(parse_graph(&r.out, Format::EdgeList).unwrap().vertex_count(), 8);
    let report = json(&r.err);
    assert_eq!(report["output_vertices"], 8);
    assert_eq!(report["audit"]["gamma"], 1);
    assert!(report["audit"]["holds"].is_boolean());
    assert_eq!(run(&["gadget"], "0 1\n1 2\n2 0\n").code, 1);
}

#[test]
fn flip_turns_a_dominating_set_semitotal() {
    let dir = tempfile::tempdir().unwrap();
    let split = "0 1\n0 2\n1 2\n0 3\n1 4\n2 5\n";
    let r = run(&["flip", "--set", &set_file(&dir, "3 4 5")], split);
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(r.out, "3\n0 1 2\n");
    assert_eq!(run(&["flip", "--set", &set_file(&dir, "3")], split).code, 3);
    assert_eq!(run(&["flip", "--set", &set_file(&dir, "0")], "0 1\n1 2\n2 3\n3 0\n").code, 1);
}

#[test]
fn generate_examples() {
    let r = run(&["generate", "star", "3"], "");
    assert_eq!((r.code, r.out.as_str(), r.err.as_str()), (0, "0 1\n0 2\n0 3\n", ""));
    let r = run(&["generate", "double_star", "2", "--format", "dimacs"], "");
    assert_eq!(r.out, "p edge 6 4\ne 1 2\ne 1 3\ne 4 5\ne 4 6\n");
    let r = run(&["generate", "random_planar", "30", "60", "--seed", "7", "--json"], "");
    assert_eq!(json(&r.err)["spec"]["family"], "random_planar");
    assert_eq!(run(&["generate", "grid", "3"], "").code, 1);
    assert_eq!(run(&["generate", "cycle", "2"], "").code, 1);
}

#[test]
fn files_replace_the_standard_streams() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.txt");
    let output = dir.path().join("out.txt");
    let report = dir.path().join("report.json");
    std::fs::write(&input, star(5)).unwrap();
    let p = |x: &std::path::Path| x.to_str().unwrap().to_owned();
    let r = run(&["kernelize", "--input", &p(&input), "--output", &p(&output), "--report", &p(&report), "--json"], "");
    assert_eq!((r.code, r.out.as_str(), r.err.as_str()), (0, "", ""));
    assert_eq!(parse_graph(&std::fs::read_to_string(&output).unwrap(), Format::EdgeList).unwrap().vertex_count(), 2);
    assert_eq!(json(&std::fs::read_to_string(&report).unwrap())["command"], "kernelize");
    let missing = p(&dir.path().join("missing"));
    assert_eq!(run(&["solve", "--input", &missing], "").code, 1);
}

#[test]
fn usage_errors_exit_with_one() {
    assert_eq!(run(&[], "").code, 1);
    assert_eq!(run(&["solve", "--kind", "xds"], "").code, 1);
    assert_eq!(run(&["solve"], "0 1 2\n").code, 1);
    let help = run(&["--help"], "");
    assert_eq!(help.code, 0);
    assert!(help.out.contains("kernelize"));
}

#[test]
fn the_binary_reads_the_oracle_bound_from_the_environment() {
    let bin = env!("CARGO_BIN_EXE_semitotal");
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("c5");
    std::fs::write(&input, "0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
    let out = Command::new(bin).args(["solve", "--input"]).arg(&input).env("SDS_ORACLE_BOUND", "3").output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = Command::new(bin).args(["solve", "--input"]).arg(&input).env("SDS_ORACLE_BOUND", "5").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(out.stdout, b"2\n0 2\n");
    let out = Command::new(bin).args(["verify", "--set"]).arg(&input).arg("--input").arg(&input).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}
