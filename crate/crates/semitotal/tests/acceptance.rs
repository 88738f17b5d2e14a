//! Acceptance suite: runs every criterion and prints one PASS/FAIL line for
//! each. Built without the libtest harness so the lines always reach the
//! output; exits non-zero if any criterion fails.
//!
//! Exact values come from a bitmask oracle defined here, independent of the
//! library solver, wherever graphs are small enough for it.

use std::collections::BTreeMap;
use std::process::{Command as Process, ExitCode};
use std::time::{Duration, Instant};

use semitotal::{write_graph, write_vertex_set, Format};
use semitotal_core::gadgets::{bipartite_gadget, check_gadget_equivalence, recognize_split, split_flip};
use semitotal_core::generators::{generate, GeneratorSpec};
use semitotal_core::oracle::solve_exact_bounded;
use semitotal_core::planar::{
    build_decomposition, decomposition_stats, find_simple_regions, kernel_bound_check, simple_region_check,
    test_planarity, BoundReport, Planarity, KERNEL_FACTOR,
};
use semitotal_core::rules::{apply_rule1, apply_rule2, apply_rule3, reduce, RuleApplication, RuleKind};
use semitotal_core::{DominationKind, Graph, Vertex, VertexSet};

/// Largest graph the library solver is asked about in the planar corpus.
const SOLVER_BOUND: usize = 24;

/// Exhaustive search over vertex bitmasks.
struct Brute {
    ids: Vec<Vertex>,
    open: Vec<u32>,
    closed: Vec<u32>,
    /// Other vertices within distance two.
    near: Vec<u32>,
}

impl Brute {
    fn new(g: &Graph) -> Self {
        let ids: Vec<Vertex> = g.vertices().collect();
        assert!(ids.len() <= 22, "bitmask oracle is for small graphs");
        let index: BTreeMap<Vertex, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let open: Vec<u32> =
            ids.iter().map(|&v| g.neighbors(v).unwrap().iter().fold(0, |m, x| m | 1 << index[x])).collect();
        let closed = (0..ids.len()).map(|i| open[i] | 1 << i).collect();
        let near = (0..ids.len())
            .map(|i| {
                let two = (0..ids.len()).filter(|&j| open[i] >> j & 1 == 1).fold(open[i], |m, j| m | open[j]);
                two & !(1 << i)
            })
            .collect();
        Brute { ids, open, closed, near }
    }

    fn mask(&self, d: &VertexSet) -> u32 {
        self.ids.iter().enumerate().filter(|(_, v)| d.contains(v)).fold(0, |m, (i, _)| m | 1 << i)
    }

    fn set(&self, mask: u32) -> VertexSet {
        self.ids.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect()
    }

    fn is(&self, d: u32, kind: DominationKind) -> bool {
        let cover = if kind == DominationKind::Total { &self.open } else { &self.closed };
        if cover.iter().any(|c| c & d == 0) {
            return false;
        }
        kind != DominationKind::Semitotal || (0..self.ids.len()).all(|i| d >> i & 1 == 0 || self.near[i] & d != 0)
    }

    fn all_minimum(&self, kind: DominationKind) -> Vec<u32> {
        let mut best = u32::MAX;
        let mut all = Vec::new();
        for d in 0..1u32 << self.ids.len() {
            let size = d.count_ones();
            if size <= best && self.is(d, kind) {
                if size < best {
                    best = size;
                    all.clear();
                }
                all.push(d);
            }
        }
        all
    }

    fn minimum(&self, kind: DominationKind) -> Option<usize> {
        self.all_minimum(kind).first().map(|d| d.count_ones() as usize)
    }
}

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: String) -> Verdict {
    Verdict { pass, detail }
}

/// Random connected graphs on 4 to 12 vertices, alternating sparse planar,
/// dense general and sparse general draws.
fn small_corpus() -> Vec<Graph> {
    let mut out = Vec::new();
    let mut seed = 0u64;
    while out.len() < 600 {
        let n = 4 + (seed % 9) as u32;
        let spec = match seed % 3 {
            0 => GeneratorSpec::RandomPlanar { n, attempts: (seed % (2 * n as u64 + 1)) as u32, seed },
            1 => GeneratorSpec::RandomGnp { n, p_percent: 30 + (seed % 35) as u32, seed },
            _ => GeneratorSpec::RandomGnp { n, p_percent: 15 + (seed % 15) as u32, seed },
        };
        let g = generate(&spec).unwrap();
        if g.is_connected() {
            out.push(g);
        }
        seed += 1;
    }
    out
}

/// Random planar graphs on 12 to 22 vertices whose minimum semitotal
/// dominating set has at least three vertices.
fn planar_corpus() -> Vec<(Graph, usize)> {
    let mut out = Vec::new();
    let mut seed = 10_000u64;
    while out.len() < 120 {
        let n = 12 + (seed % 11) as u32;
        let attempts = n / 2 + (seed % (2 * n as u64)) as u32;
        let g = generate(&GeneratorSpec::RandomPlanar { n, attempts, seed }).unwrap();
        seed += 1;
        let k = solve_exact_bounded(&g, DominationKind::Semitotal, None, SOLVER_BOUND).unwrap().size().unwrap();
        if k >= 3 {
            out.push((g, k));
        }
    }
    out
}

fn single_applications(g: &Graph) -> Vec<(Graph, RuleApplication)> {
    let vs: Vec<Vertex> = g.vertices().collect();
    let mut out = Vec::new();
    for &v in &vs {
        out.push(apply_rule1(g, v).unwrap());
    }
    for (i, &v) in vs.iter().enumerate() {
        for &w in &vs[i + 1..] {
            out.push(apply_rule2(g, v, w).unwrap());
            for region in find_simple_regions(g, v, w).unwrap() {
                out.push(apply_rule3(g, &region).unwrap());
            }
        }
    }
    out.retain(|(_, app)| app.effective);
    out
}

fn criterion_1(corpus: &[Graph]) -> Verdict {
    let planar = corpus.iter().filter(|g| test_planarity(g).is_planar()).count();
    let mut failures = Vec::new();
    let mut kinds: BTreeMap<RuleKind, usize> = BTreeMap::new();
    let mut singles = 0;
    for (i, g) in corpus.iter().enumerate() {
        let target = Brute::new(g).minimum(DominationKind::Semitotal);
        let (reduced, _) = reduce(g);
        if Brute::new(&reduced).minimum(DominationKind::Semitotal) != target {
            failures.push(format!("reduce on instance {i}"));
        }
        for (h, app) in single_applications(g) {
            singles += 1;
            *kinds.entry(app.rule.expect("effective applications name their rule")).or_default() += 1;
            if Brute::new(&h).minimum(DominationKind::Semitotal) != target {
                failures.push(format!("{:?} at {:?} on instance {i}", app.rule, app.site));
            }
        }
    }
    verdict(
        failures.is_empty() && corpus.len() >= 500,
        format!(
            "{} graphs ({planar} planar), {singles} single applications {kinds:?}, {} mismatches{}",
            corpus.len(),
            failures.len(),
            failures.first().map(|f| format!(", first: {f}")).unwrap_or_default()
        ),
    )
}

struct Reduced {
    graph: Graph,
    k: usize,
    stats: Option<BoundReport>,
    problem: Option<String>,
}

fn reduce_planar(corpus: &[(Graph, usize)]) -> Vec<Reduced> {
    corpus
        .iter()
        .map(|(g, k)| {
            let (graph, _) = reduce(g);
            let mut r = Reduced { graph, k: *k, stats: None, problem: None };
            let Planarity::Planar(emb) = test_planarity(&r.graph) else {
                r.problem = Some("reduced graph is not planar".into());
                return r;
            };
            let d = solve_exact_bounded(&r.graph, DominationKind::Semitotal, None, SOLVER_BOUND).unwrap();
            let d = d.solution().unwrap().chosen.clone();
            if d.len() != r.k {
                r.problem = Some(format!("reduced optimum {} differs from {}", d.len(), r.k));
                return r;
            }
            match build_decomposition(&r.graph, &emb, &d).and_then(|dec| {
                dec.validate(&r.graph, &emb)?;
                Ok(decomposition_stats(&r.graph, &dec))
            }) {
                Ok(stats) => r.stats = Some(stats),
                Err(e) => r.problem = Some(e.to_string()),
            }
            r
        })
        .collect()
}

fn criterion_2(reduced: &[Reduced]) -> Verdict {
    let failing = reduced.iter().filter(|r| !kernel_bound_check(r.graph.vertex_count(), r.k).pass).count();
    let worst = reduced.iter().map(|r| r.graph.vertex_count() as f64 / r.k as f64).fold(0.0, f64::max);
    verdict(
        failing == 0 && reduced.len() >= 100,
        format!(
            "{} planar instances with k >= 3, largest n'/k = {worst:.2} against {KERNEL_FACTOR}, {failing} over",
            reduced.len()
        ),
    )
}

fn criterion_3(small: &[Graph], planar: &[(Graph, usize)]) -> Verdict {
    let graphs = small.iter().chain(planar.iter().map(|(g, _)| g));
    let checks: Vec<_> = graphs.map(|g| simple_region_check(&reduce(g).0)).collect();
    let failing = checks.iter().filter(|v| !v.pass).count();
    let largest = checks.iter().map(|v| v.value).max().unwrap_or(0);
    verdict(failing == 0, format!("{} reduced graphs, largest simple region {largest}, {failing} over 4", checks.len()))
}

fn criterion_4(reduced: &[Reduced]) -> Verdict {
    let mut bad = Vec::new();
    let mut regions = 0;
    for (i, r) in reduced.iter().enumerate() {
        match (&r.stats, &r.problem) {
            (Some(s), _) => {
                regions += s.regions.len();
                if !s.region_count.is_some_and(|v| v.pass) || !s.handshake.pass {
                    bad.push(format!("instance {i}: {} regions, degree sum {}", s.regions.len(), s.handshake.value));
                }
            }
            (None, p) => bad.push(format!("instance {i}: {}", p.as_deref().unwrap_or("no decomposition"))),
        }
    }
    verdict(
        bad.is_empty(),
        format!(
            "{} decompositions over optimal sets, {regions} regions, {} failures{}",
            reduced.len(),
            bad.len(),
            bad.first().map(|b| format!(", first: {b}")).unwrap_or_default()
        ),
    )
}

fn criterion_5(reduced: &[Reduced]) -> Verdict {
    let mut failing = 0;
    let (mut size, mut n1, mut outside_ratio) = (0, 0, 0.0f64);
    for r in reduced {
        let ok = match &r.stats {
            Some(s) => {
                size = s.regions.iter().map(|x| x.size.value).fold(size, usize::max);
                n1 = s.regions.iter().map(|x| x.n1.value).fold(n1, usize::max);
                outside_ratio = outside_ratio.max(s.outside.value as f64 / s.base_size as f64);
                s.all_pass && simple_region_check(&r.graph).pass && kernel_bound_check(r.graph.vertex_count(), r.k).pass
            }
            None => false,
        };
        failing += usize::from(!ok);
    }
    verdict(
        failing == 0,
        format!(
            "{} reduced planar instances, largest region {size}/87, most N1 in a region {n1}/4, \
             outside per base vertex {outside_ratio:.2}/97, {failing} failing",
            reduced.len()
        ),
    )
}

/// Distance-three proximity of every member of `d` in a connected graph.
fn proximity_holds(g: &Graph, d: &VertexSet) -> bool {
    d.len() < 2
        || d.iter().all(|&v| {
            let near = g.distances_from(v, Some(3)).unwrap();
            d.iter().any(|&u| u != v && near.contains_key(&u))
        })
}

fn criterion_6(small: &[Graph], planar: &[(Graph, usize)]) -> Verdict {
    let mut failures = 0;
    let mut sets = 0;
    for g in small {
        let b = Brute::new(g);
        let ds = b.all_minimum(DominationKind::Plain);
        let gamma = ds[0].count_ones() as usize;
        let chain = Some(gamma) <= b.minimum(DominationKind::Semitotal)
            && b.minimum(DominationKind::Semitotal) <= b.minimum(DominationKind::Total);
        sets += ds.len();
        let near = ds.iter().all(|&d| proximity_holds(g, &b.set(d)));
        failures += usize::from(!(chain && near));
    }
    for (g, k) in planar {
        let solve = |kind| solve_exact_bounded(g, kind, None, SOLVER_BOUND).unwrap();
        let plain = solve(DominationKind::Plain);
        let total = solve(DominationKind::Total).size().unwrap();
        let gamma = plain.size().unwrap();
        sets += 1;
        let ok = gamma <= *k && *k <= total && proximity_holds(g, &plain.solution().unwrap().chosen);
        failures += usize::from(!ok);
    }
    verdict(
        failures == 0,
        format!(
            "{} instances, {sets} minimum dominating sets checked for proximity, {failures} failing",
            small.len() + planar.len()
        ),
    )
}

fn criterion_7() -> Verdict {
    let mut instances: Vec<(String, Graph, VertexSet, VertexSet)> = Vec::new();
    for m in 1..=6u32 {
        let g = generate(&GeneratorSpec::Star { m }).unwrap();
        instances.push((format!("star {m}"), g, VertexSet::from([0]), (1..=m).collect()));
    }
    let mut seed = 500u64;
    while instances.len() < 6 + 60 {
        let a = 1 + (seed % 4) as u32;
        let b = 1 + (seed / 4 % 4) as u32;
        let spec = GeneratorSpec::RandomBipartite { a, b, p_percent: 30 + (seed % 50) as u32, seed };
        let g = generate(&spec).unwrap();
        instances.push((format!("bipartite seed {seed}"), g, (0..a).collect(), (a..a + b).collect()));
        seed += 1;
    }
    let mut incomplete = Vec::new();
    let mut holds = 0;
    for (name, g, x, y) in &instances {
        let out = bipartite_gadget(g, x, y).unwrap();
        let report = check_gadget_equivalence(g, &out, SOLVER_BOUND).unwrap();
        let again = check_gadget_equivalence(g, &bipartite_gadget(g, x, y).unwrap(), SOLVER_BOUND).unwrap();
        let (bg, bo) = (Brute::new(g), Brute::new(&out.graph));
        let forward_ok = bo.is(bo.mask(&report.forward_candidate), DominationKind::Semitotal);
        let complete = report == again
            && report.output_vertices == 2 * g.vertex_count() + 4
            && Some(report.gamma) == bg.minimum(DominationKind::Plain)
            && Some(report.gamma_t2_output) == bo.minimum(DominationKind::Semitotal)
            && report.min_dominating_set.len() == report.gamma
            && bg.is(bg.mask(&report.min_dominating_set), DominationKind::Plain)
            && report.min_semitotal_set.len() == report.gamma_t2_output
            && bo.is(bo.mask(&report.min_semitotal_set), DominationKind::Semitotal)
            && report.expected == report.gamma + 2
            && report.holds == (report.gamma_t2_output == report.expected)
            && report.forward_violation.is_none() == forward_ok;
        if !complete {
            incomplete.push(name.clone());
        }
        holds += usize::from(report.holds);
    }
    verdict(
        incomplete.is_empty(),
        format!(
            "{} reports (6 stars, {} random bipartite), complete and reproducible; \
             gamma_t2(G') = gamma(G) + 2 on {holds}, differs on {}{}",
            instances.len(),
            instances.len() - 6,
            instances.len() - holds,
            incomplete.first().map(|n| format!("; incomplete: {n}")).unwrap_or_default()
        ),
    )
}

fn criterion_8() -> Verdict {
    let mut graphs = 0;
    let mut sets = 0;
    let mut failures = Vec::new();
    let mut seed = 900u64;
    while graphs < 120 {
        let clique = 1 + (seed % 5) as u32;
        let independent = 1 + (seed / 5 % 6) as u32;
        let spec = GeneratorSpec::RandomSplit { clique, independent, p_percent: 20 + (seed % 60) as u32, seed };
        seed += 1;
        let g = generate(&spec).unwrap();
        let Some(part) = recognize_split(&g) else {
            failures.push(format!("seed {} not recognized", seed - 1));
            continue;
        };
        graphs += 1;
        let b = Brute::new(&g);
        for d in b.all_minimum(DominationKind::Plain) {
            sets += 1;
            let d = b.set(d);
            match split_flip(&g, &part, &d) {
                Ok(f) if f.len() <= d.len() + 1 && b.is(b.mask(&f), DominationKind::Semitotal) => {}
                other => failures.push(format!("seed {}: {d:?} -> {other:?}", seed - 1)),
            }
        }
    }
    verdict(
        failures.is_empty(),
        format!(
            "{graphs} split graphs, {sets} minimum dominating sets flipped, {} failures{}",
            failures.len(),
            failures.first().map(|f| format!(", first: {f}")).unwrap_or_default()
        ),
    )
}

fn criterion_9() -> Verdict {
    let sizes = [250u32, 500, 1000, 2000];
    let mut points = Vec::new();
    let mut notes = Vec::new();
    for &n in &sizes {
        let g = generate(&GeneratorSpec::RandomPlanar { n, attempts: 3 * n, seed: 1 }).unwrap();
        let runs = if n < 2000 { 3 } else { 1 };
        let mut best = Duration::MAX;
        let mut percent = 0.0;
        for _ in 0..runs {
            let t = Instant::now();
            let (_, report) = reduce(&g);
            best = best.min(t.elapsed());
            percent = report.reduction_percent;
        }
        notes.push(format!("n={n}: {:.3}s, {percent:.1}% removed", best.as_secs_f64()));
        points.push(((n as f64).ln(), best.as_secs_f64().max(1e-6).ln()));
    }
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / points.len() as f64;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / points.len() as f64;
    let slope = points.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum::<f64>()
        / points.iter().map(|p| (p.0 - mean_x).powi(2)).sum::<f64>();
    let largest = points.last().unwrap().1.exp();
    verdict(largest < 60.0 && slope <= 3.3, format!("{}; log-log slope {slope:.2}", notes.join(", ")))
}

fn run_cli(args: &[String], stdin: &str) -> (u8, Vec<u8>, Vec<u8>) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("semitotal".to_owned()).chain(args.iter().cloned());
    let code = semitotal::run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    (code, out, err)
}

fn criterion_10() -> Verdict {
    let dir = tempfile::tempdir().unwrap();
    let file = |name: &str, text: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        p.to_str().unwrap().to_owned()
    };
    let planar = generate(&GeneratorSpec::RandomPlanar { n: 18, attempts: 30, seed: 3 }).unwrap();
    let (kernel, _) = reduce(&planar);
    let small = generate(&GeneratorSpec::RandomGnp { n: 11, p_percent: 35, seed: 4 }).unwrap();
    let split = generate(&GeneratorSpec::RandomSplit { clique: 4, independent: 5, p_percent: 40, seed: 5 }).unwrap();
    let bip = generate(&GeneratorSpec::RandomBipartite { a: 3, b: 3, p_percent: 50, seed: 6 }).unwrap();
    let edge_list = |g: &Graph| write_graph(g, Format::EdgeList);
    let inputs = [
        ("planar", file("planar", &edge_list(&planar))),
        ("kernel", file("kernel", &edge_list(&kernel))),
        ("small", file("small", &edge_list(&small))),
        ("small.dimacs", file("small.dimacs", &write_graph(&small, Format::Dimacs))),
        ("split", file("split", &edge_list(&split))),
        ("bip", file("bip", &edge_list(&bip))),
    ];
    let input: BTreeMap<&str, String> = inputs.into_iter().collect();
    let split_ds = solve_exact_bounded(&split, DominationKind::Plain, None, 20).unwrap();
    let split_set = file("split.set", &write_vertex_set(&split_ds.solution().unwrap().chosen, Format::EdgeList));
    let small_set = file("small.set", "0 1 2");

    let mut commands: Vec<Vec<String>> = Vec::new();
    let families: [&[&str]; 11] = [
        &["path", "5"],
        &["cycle", "6"],
        &["star", "3"],
        &["double_star", "2"],
        &["complete", "4"],
        &["complete_bipartite", "2", "3"],
        &["grid", "3", "4"],
        &["random_gnp", "12", "30"],
        &["random_planar", "30", "60"],
        &["random_bipartite", "4", "5", "40"],
        &["random_split", "3", "6", "50"],
    ];
    for family in families {
        for format in ["edgelist", "dimacs"] {
            let mut c: Vec<&str> = vec!["generate"];
            c.extend(family);
            c.extend(["--seed", "11", "--json", "--format", format]);
            commands.push(c.into_iter().map(String::from).collect());
        }
    }
    let specs: [(&[&str], &str); 14] = [
        (&["kernelize"], "planar"),
        (&["kernelize", "--k", "1"], "planar"),
        (&["kernelize", "--k", "5"], "small"),
        (&["kernelize"], "small.dimacs"),
        (&["solve"], "small"),
        (&["solve", "--kind", "ds"], "small.dimacs"),
        (&["solve", "--kind", "tds"], "small"),
        (&["solve", "--via-kernel"], "planar"),
        (&["verify", "--set", &small_set], "small"),
        (&["verify", "--set", &small_set, "--kind", "ds"], "small.dimacs"),
        (&["stats"], "kernel"),
        (&["decompose"], "kernel"),
        (&["gadget"], "bip"),
        (&["flip", "--set", &split_set], "split"),
    ];
    for json in [false, true] {
        for (args, which) in specs {
            let mut c: Vec<String> = args.iter().map(|s| s.to_string()).collect();
            c.extend(["--input".into(), input[which].clone()]);
            if which.ends_with(".dimacs") {
                c.extend(["--format".into(), "dimacs".into()]);
            }
            if json {
                c.push("--json".into());
            }
            commands.push(c);
        }
    }

    let mut differing = Vec::new();
    let mut codes: BTreeMap<u8, usize> = BTreeMap::new();
    for args in &commands {
        let first = run_cli(args, "");
        let second = run_cli(args, "");
        *codes.entry(first.0).or_default() += 1;
        if first != second || (first.1.is_empty() && first.2.is_empty()) {
            differing.push(args.join(" "));
        }
    }
    // The binary itself, with files on both ends.
    let bin = env!("CARGO_BIN_EXE_semitotal");
    let binary_run = |tag: &str| {
        let out = dir.path().join(format!("out-{tag}"));
        let report = dir.path().join(format!("report-{tag}"));
        let status = Process::new(bin)
            .args(["kernelize", "--json", "--k", "3", "--input", &input["planar"]])
            .arg("--output")
            .arg(&out)
            .arg("--report")
            .arg(&report)
            .status()
            .unwrap();
        (status.code(), std::fs::read(out).unwrap(), std::fs::read(report).unwrap())
    };
    if binary_run("a") != binary_run("b") {
        differing.push("binary kernelize".into());
    }
    verdict(
        differing.is_empty(),
        format!(
            "{} invocations run twice plus the binary, exit codes {codes:?}, {} differing{}",
            commands.len(),
            differing.len(),
            differing.first().map(|d| format!(", first: {d}")).unwrap_or_default()
        ),
    )
}

fn main() -> ExitCode {
    let mut all = true;
    let mut report = |n: usize, name: &str, run: &mut dyn FnMut() -> Verdict| {
        let started = Instant::now();
        let v = run();
        all &= v.pass;
        println!(
            "criterion {n:>2} {name}: {} ({}; {:.1}s)",
            if v.pass { "PASS" } else { "FAIL" },
            v.detail,
            started.elapsed().as_secs_f64()
        );
    };
    let small = small_corpus();
    let planar = planar_corpus();
    let reduced = reduce_planar(&planar);
    report(1, "rule soundness", &mut || criterion_1(&small));
    report(2, "kernel bound", &mut || criterion_2(&reduced));
    report(3, "simple-region bound", &mut || criterion_3(&small, &planar));
    report(4, "decomposition bound and handshake", &mut || criterion_4(&reduced));
    report(5, "region bounds", &mut || criterion_5(&reduced));
    report(6, "domination chain and proximity", &mut || criterion_6(&small, &planar));
    report(7, "gadget audit", &mut criterion_7);
    report(8, "split flip", &mut criterion_8);
    report(9, "scalability", &mut criterion_9);
    report(10, "determinism", &mut criterion_10);
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
