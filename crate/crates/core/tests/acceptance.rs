//! Acceptance run: one PASS/FAIL line per criterion. Counts are exact
//! (tolerance 0); each criterion also has a wall-clock budget. Random
//! samples use seed 7.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use ncfact_core::export::{hasse_dot, render_ncs_svg};
use ncfact_core::ncs::{complementary_regions, NcsPartition};
use ncfact_core::session::{complex_kinds, poset_kinds, GroupSpec, Listing, Session};
use ncfact_core::verify::{run_suite, VerifyConfig};
use ncfact_core::Limits;

const SEED: u64 = 7;

fn suites(names: &[&str]) -> (bool, String) {
    suites_with(names, false)
}

/// With `details`, every check's own report is appended.
fn suites_with(names: &[&str], details: bool) -> (bool, String) {
    let config = VerifyConfig {
        seed: SEED,
        ..VerifyConfig::default()
    };
    let mut total = 0;
    let mut failed = Vec::new();
    let mut notes = Vec::new();
    for name in names {
        for check in run_suite(name, &config).expect("registered suite") {
            total += 1;
            if details {
                notes.push(format!("{}: {}", check.name, check.detail));
            }
            if !check.passed {
                failed.push(check.to_string());
            }
        }
    }
    let notes = if notes.is_empty() { String::new() } else { format!(" ({})", notes.join("; ")) };
    if failed.is_empty() {
        (true, format!("{total} checks{notes}"))
    } else {
        (false, format!("{} of {total} checks failed: {}", failed.len(), failed.join("; ")))
    }
}

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(golden_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn listing(group: &str, kind: &str) -> Listing {
    let spec: GroupSpec = group.parse().unwrap();
    let session = Session::new(spec, None, "letters", Limits::default()).unwrap();
    poset_kinds().get(kind).unwrap().build(&session).unwrap()
}

fn cover_texts(l: &Listing) -> BTreeSet<(String, String)> {
    l.covers
        .iter()
        .map(|&[lo, hi]| (l.elements[hi].text.clone(), l.elements[lo].text.clone()))
        .collect()
}

fn edges(pairs: &[(&str, &str)]) -> BTreeSet<(String, String)> {
    pairs.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
}

/// Hasse diagrams written out by hand, as
/// `(upper, lower)` label pairs.
fn drawn_diagrams() -> Vec<(&'static str, &'static str, &'static str, BTreeSet<(String, String)>)> {
    vec![
        (
            "interval_sym3.dot",
            "sym:3",
            "interval",
            edges(&[("δ", "a"), ("δ", "b"), ("δ", "c"), ("a", "1"), ("b", "1"), ("c", "1")]),
        ),
        (
            "fact_linear_sym3.dot",
            "sym:3",
            "fact-linear",
            edges(&[
                ("[1 a b 1]", "[a b 1]"),
                ("[1 a b 1]", "[1 δ 1]"),
                ("[1 a b 1]", "[1 a b]"),
                ("[1 c a 1]", "[c a 1]"),
                ("[1 c a 1]", "[1 δ 1]"),
                ("[1 c a 1]", "[1 c a]"),
                ("[1 b c 1]", "[b c 1]"),
                ("[1 b c 1]", "[1 δ 1]"),
                ("[1 b c 1]", "[1 b c]"),
                ("[a b 1]", "[δ 1]"),
                ("[a b 1]", "[a b]"),
                ("[c a 1]", "[δ 1]"),
                ("[c a 1]", "[c a]"),
                ("[b c 1]", "[δ 1]"),
                ("[b c 1]", "[b c]"),
                ("[1 δ 1]", "[δ 1]"),
                ("[1 δ 1]", "[1 δ]"),
                ("[1 a b]", "[a b]"),
                ("[1 a b]", "[1 δ]"),
                ("[1 c a]", "[c a]"),
                ("[1 c a]", "[1 δ]"),
                ("[1 b c]", "[b c]"),
                ("[1 b c]", "[1 δ]"),
            ]),
        ),
        (
            "comp_linear_2.dot",
            "int:2",
            "comp-linear",
            edges(&[
                ("[0 1 1 0]", "[1 1 0]"),
                ("[0 1 1 0]", "[0 2 0]"),
                ("[0 1 1 0]", "[0 1 1]"),
                ("[1 1 0]", "[2 0]"),
                ("[1 1 0]", "[1 1]"),
                ("[0 2 0]", "[2 0]"),
                ("[0 2 0]", "[0 2]"),
                ("[0 1 1]", "[1 1]"),
                ("[0 1 1]", "[0 2]"),
            ]),
        ),
        (
            "fact_circular_sym3.dot",
            "sym:3",
            "fact-circular",
            edges(&[
                ("[1 | a b | 1]", "[1 | δ | 1]"),
                ("[1 | a b | 1]", "[c | a | 1]"),
                ("[1 | a b | 1]", "[a | b | 1]"),
                ("[1 | c a | 1]", "[1 | δ | 1]"),
                ("[1 | c a | 1]", "[c | a | 1]"),
                ("[1 | c a | 1]", "[b | c | 1]"),
                ("[1 | b c | 1]", "[1 | δ | 1]"),
                ("[1 | b c | 1]", "[a | b | 1]"),
                ("[1 | b c | 1]", "[b | c | 1]"),
                ("[1 | δ | 1]", "[δ || 1]"),
                ("[c | a | 1]", "[δ || 1]"),
                ("[a | b | 1]", "[δ || 1]"),
                ("[b | c | 1]", "[δ || 1]"),
            ]),
        ),
        (
            "comp_circular_2.dot",
            "int:2",
            "comp-circular",
            edges(&[
                ("[0 | 1 1 | 0]", "[1 | 1 | 0]"),
                ("[0 | 1 1 | 0]", "[0 | 2 | 0]"),
                ("[1 | 1 | 0]", "[2 || 0]"),
                ("[0 | 2 | 0]", "[2 || 0]"),
            ]),
        ),
    ]
}

fn golden_outputs() -> (bool, String) {
    let mut problems = Vec::new();
    let mut compared = 0;
    for (file, group, kind, drawn) in drawn_diagrams() {
        let l = listing(group, kind);
        if cover_texts(&l) != drawn {
            problems.push(format!("{file}: covers differ from the hand-written edges"));
        }
        if hasse_dot(&l) != golden(file) {
            problems.push(format!("{file}: bytes differ"));
        }
        compared += 1;
    }

    let session = Session::new(GroupSpec::Sym(3), None, "letters", Limits::default()).unwrap();
    let k = complex_kinds().get("interval").unwrap().build(&session, None).unwrap();
    let mut json = serde_json::to_string(&k).unwrap();
    json.push('\n');
    if json != golden("interval_complex_sym3.json") {
        problems.push("interval_complex_sym3.json: bytes differ".into());
    }
    let mut json = serde_json::to_string(&listing("sym:3", "fact-linear")).unwrap();
    json.push('\n');
    if json != golden("fact_linear_sym3.json") {
        problems.push("fact_linear_sym3.json: bytes differ".into());
    }
    compared += 2;

    for (input, svg, panel) in [
        ("sample_partition.json", "sample_partition.svg", true),
        ("maximal_d3.json", "maximal_d3.svg", false),
    ] {
        let text = golden(input);
        let p = NcsPartition::from_json(&text).unwrap();
        if format!("{}\n", p.to_json()) != text {
            problems.push(format!("{input}: does not round-trip byte for byte"));
        }
        if render_ncs_svg(&p, panel) != golden(svg) {
            problems.push(format!("{svg}: bytes differ"));
        }
        compared += 2;
    }
    let sample = NcsPartition::from_json(&golden("sample_partition.json")).unwrap();
    let hulls = golden("sample_partition.svg").matches("<polygon").count();
    if hulls != 5 || sample.total_criticality() != 9 {
        problems.push(format!("sample partition draws {hulls} hulls"));
    }
    let maximal = NcsPartition::from_json(&golden("maximal_d3.json")).unwrap();
    if !maximal.is_maximal() || complementary_regions(&maximal).unwrap().count != 3 {
        problems.push("maximal_d3.json is not a maximal element with 3 regions".into());
    }

    if problems.is_empty() {
        (true, format!("{compared} fixtures byte-identical, 5 diagrams match the hand-written edges"))
    } else {
        (false, problems.join("; "))
    }
}

fn main() -> ExitCode {
    let criteria: Vec<(&str, Duration, Box<dyn Fn() -> (bool, String)>)> = vec![
        ("1 paper counts", Duration::from_secs(1), Box::new(|| suites(&["paper-counts"]))),
        ("2 catalan regression", Duration::from_secs(30), Box::new(|| suites(&["catalan"]))),
        ("3 armstrong equivalence", Duration::from_secs(10), Box::new(|| suites_with(&["armstrong"], true))),
        ("4 topological posets", Duration::from_secs(60), Box::new(|| suites(&["top-poset"]))),
        ("5 noncrossing partitions", Duration::from_secs(60), Box::new(|| suites(&["ncs", "psi"]))),
        ("6 golden outputs", Duration::from_secs(60), Box::new(golden_outputs)),
    ];
    let mut all = true;
    for (name, budget, run) in criteria {
        let start = Instant::now();
        let (ok, detail) = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= budget;
        let passed = ok && in_time;
        all &= passed;
        println!(
            "{} criterion {name}: {detail}; {:.2} s of {} s budget{}",
            if passed { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            budget.as_secs(),
            if in_time { "" } else { " (over budget)" }
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
