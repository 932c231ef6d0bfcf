//! Acceptance run: one PASS/FAIL line per criterion, with timings. Exits
//! nonzero when any criterion fails.

mod common;

use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::Rng;

use qcontract::connectivity::{
    brute_force_connectivity, enumerate_cuts, is_quasi_k_connected, vertex_connectivity, CutClass,
};
use qcontract::contraction::classify_contraction;
use qcontract::families::*;
use qcontract::generators::{
    enumerate_forbidden_free, enumerate_matchable_cubic, enumerate_small_graphs, generate_ccc4,
};
use qcontract::graph6;
use qcontract::harness::{self, check_report, CampaignReport, Status};
use qcontract::patterns::{canonical_form, contains_subgraph, is_isomorphic, MatchKind};
use qcontract::{Edge, Graph};

use common::*;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

/// Report passes, every claim re-validates, and it is non-empty.
fn sound(r: &CampaignReport) -> Result<(), String> {
    let check = check_report(r, 1);
    if !check.is_valid() {
        return Err(format!(
            "{}: witness problems {:?}",
            r.campaign, check.problems
        ));
    }
    if !r.all_passed() {
        let first = r
            .failures()
            .next()
            .map(|f| f.graph6.clone())
            .unwrap_or_default();
        return Err(format!(
            "{}: {} failed records, first {first}",
            r.campaign, r.summary.failed
        ));
    }
    Ok(())
}

fn ingest(dir: &Path, name: &str, graphs: &[Graph]) -> Vec<Graph> {
    let path = dir.join(name);
    harness::write_corpus(&path, graphs).expect("write corpus");
    harness::read_corpus(&path).expect("read corpus")
}

fn four_connected_up_to_8() -> Vec<Graph> {
    (5..=8)
        .flat_map(|n| enumerate_small_graphs(n, |g| vertex_connectivity(g) >= 4).unwrap())
        .collect()
}

fn c1() -> Outcome {
    let g = circulant_11();
    let regular = g.n() == 11 && g.is_regular(4);
    let quasi = is_quasi_k_connected(&g, 5);
    let diagonals: Vec<Edge> = (0..11).map(|i| Edge::new(i, (i + 4) % 11)).collect();
    let contractible = diagonals
        .iter()
        .filter(|&&e| {
            classify_contraction(&g, e, 5).ok()
                == Some(qcontract::contraction::ContractionVerdict::QuasiK)
        })
        .count();
    let report = harness::circulant_check();
    let ok = regular && quasi && contractible == 11 && sound(&report).is_ok();
    outcome(ok, format!("4-regular on 11: {regular}, quasi 5-connected: {quasi}, quasi 5-contractible diagonals: {contractible}/11"))
}

fn c2() -> Outcome {
    let mut detail = Vec::new();
    let mut ok = true;
    for n in 8..=12 {
        let g = cycle_square(n).unwrap();
        let cut = enumerate_cuts(&g, 4)
            .into_iter()
            .find(|c| c.class == CutClass::Nontrivial);
        let witnessed = cut.is_some_and(|c| {
            c.separation.is_valid_in(&g)
                && c.separation.side_a.len() >= 2
                && c.separation.side_b.len() >= 2
        });
        ok &= !is_quasi_k_connected(&g, 5) && witnessed;
        if let Some(c) = cut {
            detail.push(format!("n={n} cut {:?}", c.cut.iter().collect::<Vec<_>>()));
        }
    }
    for n in 5..=7 {
        let m = contains_subgraph(
            &cycle_square(n).unwrap(),
            &p5_complement(),
            MatchKind::Subgraph,
        )
        .unwrap();
        ok &= m.is_some_and(|m| m.is_valid(&cycle_square(n).unwrap(), &p5_complement(), false));
    }
    let facts = harness::forbidden_pair_facts(12).unwrap();
    ok &= sound(&facts).is_ok();
    outcome(
        ok,
        format!("{}; P5-complement found in C5^2..C7^2", detail.join(", ")),
    )
}

fn c3() -> Outcome {
    let h = c4_plus();
    let ok = h.n() == 5
        && h.edge_count() == 5
        && is_isomorphic(&h.line_graph().unwrap(), &p5_complement());
    // the derivation: among 5-vertex 5-edge graphs containing C4, exactly one
    // class has line graph isomorphic to the complement of P5
    let matches: Vec<Graph> = enumerate_small_graphs(5, |g| {
        g.edge_count() == 5
            && contains_subgraph(g, &cycle(4).unwrap(), MatchKind::Subgraph)
                .unwrap()
                .is_some()
            && is_isomorphic(&g.line_graph().unwrap(), &p5_complement())
    })
    .unwrap();
    let unique = matches.len() == 1 && is_isomorphic(&matches[0], &h);
    outcome(
        ok && unique,
        format!("L(C4+) isomorphic to P5-complement: {ok}, derivation unique: {unique}"),
    )
}

fn c4() -> Outcome {
    let corpus = four_connected_up_to_8();
    let r = harness::critical_degree(&corpus, 1);
    let s = r.summary;
    let ok = sound(&r).is_ok() && s.qualifying == corpus.len() && s.qualifying > 0;
    outcome(
        ok,
        format!(
            "{} four-connected graphs, {} agree, {} discrepancies",
            s.qualifying, s.passed, s.failed
        ),
    )
}

fn c5() -> Outcome {
    let corpus = four_connected_up_to_8();
    let r = harness::critical_families(12, &corpus, 1).unwrap();
    let family = r
        .records
        .iter()
        .filter(|r| r.label.as_deref() != Some("corpus"))
        .count();
    let critical = r
        .records
        .iter()
        .filter(|r| r.label.as_deref() == Some("corpus") && r.status == Status::Passed)
        .count();
    let res = sound(&r);
    outcome(
        res.is_ok(),
        format!(
            "{family} family members critical ({} passed); {critical} critical graphs with n <= 8, all identified{}",
            r.records.iter().filter(|r| r.label.as_deref() != Some("corpus") && r.status == Status::Passed).count(),
            res.err().map(|e| format!("; {e}")).unwrap_or_default()
        ),
    )
}

fn c6(dir: &Path) -> Outcome {
    let mut cubic = Vec::new();
    for n in (4..=14).step_by(2) {
        cubic.extend(enumerate_matchable_cubic(n).unwrap());
    }
    let corpus = ingest(dir, "cubic14.g6", &cubic);
    let r = harness::cyclic_cubic(14, &corpus, 1).unwrap();
    let generated = generate_ccc4(14).unwrap().len();
    let found = r
        .records
        .iter()
        .filter(|r| r.label.as_deref() == Some("corpus") && r.status == Status::Passed)
        .count();
    let res = sound(&r);
    outcome(
        res.is_ok() && found == generated,
        format!(
            "{generated} generated all pass; {} cubic corpus graphs, {found} cyclically 4-connected, all generated{}",
            corpus.len(),
            res.err().map(|e| format!("; {e}")).unwrap_or_default()
        ),
    )
}

fn c7(pair_corpus: &[Graph]) -> Outcome {
    let mut corpus: Vec<Graph> = pair_corpus.to_vec();
    corpus.push(circulant_11());
    corpus.push(complete(6).unwrap());
    corpus.extend(
        (5..=8).flat_map(|n| enumerate_small_graphs(n, |g| is_quasi_k_connected(g, 5)).unwrap()),
    );
    let mut rng = rng(0x6c34);
    corpus.extend((0..300).map(|_| {
        let n = rng.gen_range(8..=12);
        random_graph(&mut rng, n, 0.55..0.85)
    }));
    let r = harness::degree_bound(&corpus, 1);
    let checked: usize = r
        .records
        .iter()
        .filter_map(|r| r.edge_counts)
        .map(|c| c.checked)
        .sum();
    let skipped: usize = r
        .records
        .iter()
        .filter_map(|r| r.edge_counts)
        .map(|c| c.skipped)
        .sum();
    let res = sound(&r);
    outcome(
        res.is_ok() && r.summary.qualifying > 0,
        format!(
            "{} quasi 5-connected graphs, {checked} edges checked, {skipped} below the degree pretest, {} violations",
            r.summary.qualifying, r.summary.failed
        ),
    )
}

/// Forbidden-pair-free graphs with minimum degree at least 4, read back from
/// graph6 files: the n <= 10 slice and an extended n <= 12 slice.
struct Corpora {
    slice: Vec<Graph>,
    extended: Vec<Graph>,
}

impl Corpora {
    fn build(dir: &Path) -> Self {
        Corpora {
            slice: ingest(
                dir,
                "min_degree_4_n10.g6",
                &enumerate_forbidden_free(10, 4).unwrap(),
            ),
            extended: ingest(
                dir,
                "min_degree_4_n12.g6",
                &enumerate_forbidden_free(12, 4).unwrap(),
            ),
        }
    }
}

fn c8(corpora: &Corpora) -> Outcome {
    let (corpus, extended) = (&corpora.slice, &corpora.extended);
    let k55 = complete_bipartite(5, 5).unwrap();
    let has_k55 = corpus.iter().any(|g| is_isomorphic(g, &k55));
    let r = harness::forbidden_pair(corpus, 1);
    let res = sound(&r);
    let k55_passed = r.records.iter().any(|rec| {
        rec.status == Status::Passed && is_isomorphic(&graph6::decode(&rec.graph6).unwrap(), &k55)
    });
    let rx = harness::forbidden_pair(extended, 1);
    let resx = sound(&rx);
    // Unfiltered slice for n <= 8: the graphs containing a forbidden pattern
    // are skipped, so the qualifying graphs coincide with the filtered slice.
    let full: Vec<Graph> = (5..=8)
        .flat_map(|n| enumerate_small_graphs(n, |g| g.min_degree() >= 4).unwrap())
        .collect();
    let rf = harness::forbidden_pair(&full, 1);
    let qualifying_forms = |r: &CampaignReport| -> Vec<String> {
        let mut v: Vec<String> = r
            .records
            .iter()
            .filter(|rec| rec.status != Status::Skipped)
            .map(|rec| {
                canonical_form(&graph6::decode(&rec.graph6).unwrap())
                    .as_str()
                    .to_owned()
            })
            .collect();
        v.sort();
        v
    };
    let small_filtered: Vec<Graph> = extended.iter().filter(|g| g.n() <= 8).cloned().collect();
    let same =
        qualifying_forms(&rf) == qualifying_forms(&harness::forbidden_pair(&small_filtered, 1));
    let ok = res.is_ok()
        && resx.is_ok()
        && sound(&rf).is_ok()
        && same
        && has_k55
        && k55_passed
        && r.summary.qualifying > 0;
    let detail = format!(
        "n <= 10: {} forbidden-pair-free graphs with min degree >= 4, {} qualifying, {} failed, K5,5 passed: {k55_passed}; \
         extended n <= 12: {} graphs, {} qualifying, {} failed; \
         unfiltered n <= 8: {} graphs, {} qualifying, same qualifying set: {same}",
        r.summary.tested,
        r.summary.qualifying,
        r.summary.failed,
        rx.summary.tested,
        rx.summary.qualifying,
        rx.summary.failed,
        rf.summary.tested,
        rf.summary.qualifying
    );
    outcome(ok, detail)
}

fn c9() -> Outcome {
    let mut exhaustive = 0;
    let mut bad = 0;
    for n in 1..=8 {
        for g in enumerate_small_graphs(n, |_| true).unwrap() {
            exhaustive += 1;
            bad += (vertex_connectivity(&g) != brute_force_connectivity(&g).unwrap()) as usize;
        }
    }
    let mut rng = rng(0x0a11);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=10);
        let g = random_graph(&mut rng, n, 0.2..0.95);
        bad += (vertex_connectivity(&g) != brute_force_connectivity(&g).unwrap()) as usize;
        bad += (vertex_connectivity(&g) != min_separator_size(&matrix(&g))) as usize;
    }
    let mut sub_bad = 0;
    for _ in 0..1000 {
        let pn = rng.gen_range(1..=5);
        let hn = rng.gen_range(pn..=8);
        let p = random_graph(&mut rng, pn, 0.3..0.9);
        let h = random_graph(&mut rng, hn, 0.2..0.9);
        for (kind, induced) in [(MatchKind::Subgraph, false), (MatchKind::Induced, true)] {
            let got = contains_subgraph(&h, &p, kind).unwrap().is_some();
            sub_bad += (got != embeds_brute(&matrix(&h), &matrix(&p), induced)) as usize;
        }
    }
    let mut canon_bad = 0;
    for _ in 0..1000 {
        let n = rng.gen_range(1..=12);
        let g = random_graph(&mut rng, n, 0.1..0.9);
        let h = g.permute(&random_permutation(&mut rng, n)).unwrap();
        canon_bad += (canonical_form(&g) != canonical_form(&h)) as usize;
    }
    outcome(
        bad + sub_bad + canon_bad == 0 && exhaustive == 13598,
        format!(
            "connectivity: {exhaustive} graphs n <= 8 + 1000 random, {bad} mismatches; subgraph: 1000 pairs, {sub_bad} mismatches; canonical form: 1000 trials, {canon_bad} mismatches"
        ),
    )
}

fn c10(dir: &Path, pair_corpus: &[Graph]) -> Outcome {
    let four = four_connected_up_to_8();
    let cubic: Vec<Graph> = (4..=10)
        .step_by(2)
        .flat_map(|n| enumerate_matchable_cubic(n).unwrap())
        .collect();
    type Run<'a> = (&'a str, Box<dyn Fn(usize) -> CampaignReport + 'a>);
    let runs: Vec<Run> = vec![
        (
            "forbidden_pair",
            Box::new(|j| harness::forbidden_pair(pair_corpus, j)),
        ),
        (
            "critical_degree",
            Box::new(|j| harness::critical_degree(&four, j)),
        ),
        (
            "critical_families",
            Box::new(|j| harness::critical_families(10, &four, j).unwrap()),
        ),
        (
            "cyclic_cubic",
            Box::new(|j| harness::cyclic_cubic(10, &cubic, j).unwrap()),
        ),
        (
            "degree_bound",
            Box::new(|j| harness::degree_bound(pair_corpus, j)),
        ),
        (
            "triangle_free",
            Box::new(|j| harness::triangle_free(&four, 4, j).unwrap()),
        ),
        ("handles", Box::new(|j| harness::handles(12, j).unwrap())),
    ];
    let mut differing: Vec<&str> = runs
        .iter()
        .filter(|(_, f)| f(1).to_json() != f(8).to_json())
        .map(|(n, _)| *n)
        .collect();
    // the same through the binary, twice per worker count
    let corpus = dir.join("determinism.g6");
    harness::write_corpus(&corpus, pair_corpus).unwrap();
    let mut outputs = Vec::new();
    for jobs in ["1", "8", "1", "8"] {
        let out = Command::new(env!("CARGO_BIN_EXE_qcontract"))
            .args(["verify", "forbidden-pair", "--jobs", jobs, "--corpus"])
            .arg(&corpus)
            .output()
            .expect("run binary");
        outputs.push(out.stdout);
    }
    if outputs.windows(2).any(|w| w[0] != w[1]) || outputs[0].is_empty() {
        differing.push("cli forbidden_pair");
    }
    outcome(
        differing.is_empty(),
        format!(
            "{} campaigns + CLI compared at --jobs 1 and 8; differing: {differing:?}",
            runs.len()
        ),
    )
}

fn main() -> ExitCode {
    let dir = tempfile::tempdir().expect("temp dir");
    let mut failed = 0;
    let mut run =
        |id: usize, title: &str, budget: Option<Duration>, f: &mut dyn FnMut() -> Outcome| {
            let start = Instant::now();
            let o = f();
            let took = start.elapsed();
            let in_time = budget.is_none_or(|b| took <= b);
            let pass = o.pass && in_time;
            failed += !pass as usize;
            let budget = budget
                .map(|b| format!(" / budget {b:.0?}"))
                .unwrap_or_default();
            let late = if in_time {
                String::new()
            } else {
                " OVER BUDGET;".into()
            };
            println!(
                "{} {id:>2} {title} [{took:.2?}{budget}]{late} {}",
                if pass { "PASS" } else { "FAIL" },
                o.detail
            );
        };
    let secs = |s: u64| Some(Duration::from_secs(s));
    run(1, "circulant C11(1,4) suite", secs(5), &mut c1);
    run(2, "squares of cycles", secs(5), &mut c2);
    run(3, "line graph of C4+", secs(1), &mut c3);
    run(
        4,
        "contraction-critical 4-connected characterization (n <= 8)",
        secs(600),
        &mut c4,
    );
    run(
        5,
        "contraction-critical families (n <= 12; enumeration n <= 8)",
        secs(900),
        &mut c5,
    );
    run(
        6,
        "cubic cyclically 4-connected generation, both directions (n <= 14)",
        secs(600),
        &mut || c6(dir.path()),
    );
    let start = Instant::now();
    let corpora = Corpora::build(dir.path());
    println!(
        "     corpora: {} + {} forbidden-pair-free graphs with min degree >= 4 (n <= 10, n <= 12) [{:.2?}]",
        corpora.slice.len(),
        corpora.extended.len(),
        start.elapsed()
    );
    run(
        7,
        "degree pretest implies 4-connected contraction",
        None,
        &mut || c7(&corpora.extended),
    );
    run(
        8,
        "forbidden pair campaign (min degree >= 4)",
        None,
        &mut || c8(&corpora),
    );
    run(9, "oracle suites", None, &mut c9);
    run(10, "determinism across worker counts", None, &mut || {
        c10(dir.path(), &corpora.extended)
    });
    println!("{} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
