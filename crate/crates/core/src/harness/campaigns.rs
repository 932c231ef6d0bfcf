//! Verification campaigns. Each one evaluates every input graph, records a
//! verdict with supporting claims, and never stops at a failure.

use std::collections::HashSet;

use rayon::prelude::*;

use super::claims::{cycle_order, small_separator, Claim};
use super::report::{CampaignReport, EdgeCounts, EdgeVerdict, GraphRecord, SkipReason, Status};
use crate::connectivity::{
    cyclic_4_obstruction, enumerate_cuts, is_cyclically_4_edge_connected, quasi_k_obstruction,
    vertex_connectivity, ClassifiedCut, QuasiObstruction,
};
use crate::contraction::{
    classify_contraction, contract_edge, first_quasi_contractible_edge, ContractionVerdict,
};
use crate::error::{GraphError, Result};
use crate::families::{c4_plus, circulant_11, complete, cycle_square, p5_complement, Family};
use crate::generators::{add_handle, generate_ccc4, handle_sites};
use crate::graph::{Edge, Graph};
use crate::graph6;
use crate::patterns::{
    canonical_form, contains_subgraph, forbidden_witness, is_isomorphic, ForbiddenPattern,
    MatchKind,
};

/// Evaluates `f` over `items` on `jobs` worker threads, keeping input order.
pub fn run_ordered<T, R, F>(items: &[T], jobs: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(usize, &T) -> R + Sync + Send,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| items.par_iter().enumerate().map(|(i, t)| f(i, t)).collect())
}

fn cut_claim(c: &ClassifiedCut) -> Claim {
    let s = c.separation;
    Claim::Cut {
        cut: s.cut,
        side_a: s.side_a,
        side_b: s.side_b,
    }
}

fn contraction_cut_claim(edge: Edge, c: &ClassifiedCut) -> Claim {
    let s = c.separation;
    Claim::ContractionCut {
        edge,
        cut: s.cut,
        side_a: s.side_a,
        side_b: s.side_b,
    }
}

/// Lexicographically first minimum vertex cut; `None` for complete graphs.
fn minimum_cut(g: &Graph) -> Option<ClassifiedCut> {
    let kappa = vertex_connectivity(g);
    enumerate_cuts(g, kappa).into_iter().next()
}

/// Claims explaining why `g` is not quasi k-connected.
fn quasi_obstruction_claims(obstruction: &QuasiObstruction) -> Vec<Claim> {
    match obstruction {
        QuasiObstruction::LowConnectivity(kappa) => vec![Claim::Connectivity { value: *kappa }],
        QuasiObstruction::NontrivialCut(c) => vec![cut_claim(c)],
    }
}

/// A minimum cut of `G/e`, or its connectivity when it is complete.
fn small_contraction_cut(g: &Graph, e: Edge) -> Option<Claim> {
    let h = contract_edge(g, e).ok()?.graph;
    Some(match minimum_cut(&h) {
        Some(c) => contraction_cut_claim(e, &c),
        None => Claim::ContractionConnectivity {
            edge: e,
            value: vertex_connectivity(&h),
        },
    })
}

/// Certificate that `G/e` is not quasi k-connected.
fn quasi_failure_claim(g: &Graph, e: Edge, k: usize) -> Option<Claim> {
    let h = contract_edge(g, e).ok()?.graph;
    match quasi_k_obstruction(&h, k)? {
        QuasiObstruction::NontrivialCut(c) => Some(contraction_cut_claim(e, &c)),
        QuasiObstruction::LowConnectivity(_) => small_contraction_cut(g, e),
    }
}

fn pattern_claim(g: &Graph, family: Family) -> Option<Claim> {
    let p = family.build().ok()?;
    contains_subgraph(g, &p, MatchKind::Subgraph)
        .ok()
        .flatten()
        .map(|m| Claim::ContainsSubgraph {
            pattern: family.to_string(),
            mapping: m.mapping,
        })
}

fn forbidden_family(p: ForbiddenPattern) -> Family {
    match p {
        ForbiddenPattern::K4Minus => Family::K4Minus,
        ForbiddenPattern::P5Complement => Family::P5Complement,
    }
}

/// Every quasi 5-connected graph without `K4⁻` or `P̄5` must have a quasi
/// 5-contractible edge.
pub fn forbidden_pair(corpus: &[Graph], jobs: usize) -> CampaignReport {
    let records = run_ordered(corpus, jobs, |i, g| {
        let g6 = graph6::encode(g);
        if let Some(obstruction) = quasi_k_obstruction(g, 5) {
            return GraphRecord::skipped(i, g6, SkipReason::NotQuasiConnected { k: 5 })
                .with_claims(quasi_obstruction_claims(&obstruction));
        }
        if let Some((p, m)) = forbidden_witness(g) {
            let family = forbidden_family(p).to_string();
            return GraphRecord::skipped(
                i,
                g6,
                SkipReason::ContainsPattern {
                    pattern: family.clone(),
                },
            )
            .with_claims(vec![Claim::ContainsSubgraph {
                pattern: family,
                mapping: m.mapping,
            }]);
        }
        match first_quasi_contractible_edge(g, 5).expect("quasi 5-connected") {
            Some(edge) => GraphRecord::new(i, g6, Status::Passed).with_claims(vec![
                Claim::QuasiConnected { k: 5 },
                Claim::QuasiContractible { edge, k: 5 },
            ]),
            None => {
                let mut claims = vec![Claim::QuasiConnected { k: 5 }];
                claims.extend(g.edges().filter_map(|e| quasi_failure_claim(g, e, 5)));
                GraphRecord::new(i, g6, Status::Failed).with_claims(claims)
            }
        }
    });
    CampaignReport::new("forbidden_pair", vec!["k=5".into()], records)
}

/// A 4-connected graph is contraction critical iff it is 4-regular and every
/// edge lies in a triangle.
pub fn critical_degree(corpus: &[Graph], jobs: usize) -> CampaignReport {
    let records = run_ordered(corpus, jobs, |i, g| {
        let g6 = graph6::encode(g);
        let kappa = vertex_connectivity(g);
        if kappa < 4 {
            return GraphRecord::skipped(
                i,
                g6,
                SkipReason::LowConnectivity {
                    connectivity: kappa,
                    required: 4,
                },
            )
            .with_claims(vec![Claim::Connectivity { value: kappa }]);
        }
        let mut claims = Vec::new();
        let contractible = g
            .edges()
            .find(|&e| vertex_connectivity(&contract_edge(g, e).expect("edge of g").graph) >= 4);
        let critical = contractible.is_none();
        match contractible {
            Some(edge) => claims.push(Claim::Contractible { edge, k: 4 }),
            None => claims.extend(g.edges().filter_map(|e| small_contraction_cut(g, e))),
        }
        let irregular = (0..g.n()).find(|&v| g.degree(v).ok() != Some(4));
        let lonely = g.edges().find(|&e| !g.edge_in_triangle(e));
        if let Some(vertex) = irregular {
            claims.push(Claim::Degree {
                vertex,
                degree: g.degree(vertex).expect("in range"),
            });
        }
        if let Some(edge) = lonely {
            claims.push(Claim::EdgeOutsideTriangles { edge });
        }
        let structural = irregular.is_none() && lonely.is_none();
        let status = if critical == structural {
            Status::Passed
        } else {
            Status::Failed
        };
        let mut r = GraphRecord::new(i, g6, status).with_claims(claims);
        if status == Status::Failed {
            r.note = Some(format!("contraction critical: {critical}, 4-regular with every edge in a triangle: {structural}"));
        }
        r
    });
    CampaignReport::new("critical_degree", vec!["k=4".into()], records)
}

/// Per-edge certificates that a 4-connected graph is contraction critical,
/// or the first contractible edge.
fn criticality(g: &Graph) -> (bool, Vec<Claim>) {
    let kappa = vertex_connectivity(g);
    if kappa < 4 {
        return (false, vec![Claim::Connectivity { value: kappa }]);
    }
    if let Some(edge) = g
        .edges()
        .find(|&e| vertex_connectivity(&contract_edge(g, e).expect("edge of g").graph) >= 4)
    {
        return (false, vec![Claim::Contractible { edge, k: 4 }]);
    }
    (
        true,
        g.edges()
            .filter_map(|e| small_contraction_cut(g, e))
            .collect(),
    )
}

/// Squares of cycles and line graphs of cyclically 4-connected cubic graphs
/// are contraction critical 4-connected, and the corpus has no other such
/// graphs.
pub fn critical_families(max_n: usize, corpus: &[Graph], jobs: usize) -> Result<CampaignReport> {
    if !(5..=14).contains(&max_n) {
        return Err(GraphError::InvalidParameter(format!(
            "max_n must be in 5..=14, got {max_n}"
        )));
    }
    let even = max_n - max_n % 2;
    let roots = if even >= 6 {
        generate_ccc4(even)?
    } else {
        Vec::new()
    };
    let mut members: Vec<(Graph, String, Claim)> = Vec::new();
    for n in 5..=max_n {
        let family = Family::CycleSquare(n).to_string();
        members.push((
            cycle_square(n)?,
            family.clone(),
            Claim::IsomorphicToFamily { family },
        ));
    }
    for r in &roots {
        let g6 = graph6::encode(r);
        members.push((
            r.line_graph()?,
            format!("line_graph:{g6}"),
            Claim::LineGraphOf { graph6: g6 },
        ));
    }
    let mut records = run_ordered(&members, jobs, |i, (g, label, identity)| {
        let (critical, mut claims) = criticality(g);
        claims.insert(0, identity.clone());
        let status = if critical {
            Status::Passed
        } else {
            Status::Failed
        };
        GraphRecord::new(i, graph6::encode(g), status)
            .with_claims(claims)
            .with_label(label.as_str())
    });
    // Family members indexed by canonical form, for identifying corpus graphs.
    let known: Vec<(crate::patterns::CanonicalForm, Claim)> = members
        .iter()
        .map(|(g, _, c)| (canonical_form(g), c.clone()))
        .collect();
    let offset = records.len();
    let k4_line = complete(4)?.line_graph()?;
    let corpus_records = run_ordered(corpus, jobs, |i, g| {
        let g6 = graph6::encode(g);
        let kappa = vertex_connectivity(g);
        if kappa < 4 {
            return GraphRecord::skipped(
                offset + i,
                g6,
                SkipReason::LowConnectivity {
                    connectivity: kappa,
                    required: 4,
                },
            )
            .with_claims(vec![Claim::Connectivity { value: kappa }])
            .with_label("corpus");
        }
        let (critical, mut claims) = criticality(g);
        if !critical {
            return GraphRecord::skipped(offset + i, g6, SkipReason::NotContractionCritical)
                .with_claims(claims)
                .with_label("corpus");
        }
        let form = canonical_form(g);
        let identity = known
            .iter()
            .find(|(f, _)| *f == form)
            .map(|(_, c)| c.clone())
            .or_else(|| {
                (g.n() >= 5 && is_isomorphic(g, &cycle_square(g.n()).ok()?)).then(|| {
                    Claim::IsomorphicToFamily {
                        family: Family::CycleSquare(g.n()).to_string(),
                    }
                })
            })
            .or_else(|| {
                is_isomorphic(g, &k4_line).then(|| Claim::LineGraphOf {
                    graph6: graph6::encode(&complete(4).expect("K4")),
                })
            });
        match identity {
            Some(c) => {
                claims.insert(0, c);
                GraphRecord::new(offset + i, g6, Status::Passed)
                    .with_claims(claims)
                    .with_label("corpus")
            }
            None => {
                claims.insert(0, Claim::OutsideCriticalFamilies);
                GraphRecord::new(offset + i, g6, Status::Failed)
                    .with_claims(claims)
                    .with_label("corpus")
            }
        }
    });
    records.extend(corpus_records);
    Ok(CampaignReport::new(
        "critical_families",
        vec![format!("max_n={max_n}")],
        records,
    ))
}

fn cycle_pair_claim(g: &Graph) -> Option<Claim> {
    let w = cyclic_4_obstruction(g).ok()??;
    let separator = small_separator(g, w.cycle_a, w.cycle_b)?;
    Some(Claim::CyclePair {
        cycle_a: cycle_order(g, w.cycle_a)?,
        cycle_b: cycle_order(g, w.cycle_b)?,
        separator,
    })
}

/// Handle additions from `K_{3,3}` and the cube give exactly the cyclically
/// 4-connected cubic graphs: every generated graph passes the independent
/// test, and every such graph in the corpus is generated.
pub fn cyclic_cubic(max_n: usize, corpus: &[Graph], jobs: usize) -> Result<CampaignReport> {
    let generated = generate_ccc4(max_n)?;
    let mut records = run_ordered(&generated, jobs, |i, g| {
        let g6 = graph6::encode(g);
        let vertex_form = cyclic_4_obstruction(g)
            .expect("generated graphs are cubic")
            .is_none();
        let edge_form = is_cyclically_4_edge_connected(g);
        let mut r = if vertex_form {
            GraphRecord::new(i, g6, Status::Passed)
                .with_claims(vec![Claim::CyclicallyFourConnected])
        } else {
            GraphRecord::new(i, g6, Status::Failed)
                .with_claims(cycle_pair_claim(g).into_iter().collect())
        };
        if vertex_form != edge_form {
            r.status = Status::Failed;
            r.note = Some(format!(
                "disjoint-path test: {vertex_form}, cyclic edge cut test: {edge_form}"
            ));
        }
        r.with_label("generated")
    });
    let forms: HashSet<_> = generated.iter().map(canonical_form).collect();
    let offset = records.len();
    let corpus_records = run_ordered(corpus, jobs, |i, g| {
        let idx = offset + i;
        let g6 = graph6::encode(g);
        let r = if !g.is_cubic() {
            GraphRecord::skipped(idx, g6, SkipReason::NotCubic)
        } else if g.n() > max_n {
            GraphRecord::skipped(
                idx,
                g6,
                SkipReason::TooLarge {
                    n: g.n(),
                    max: max_n,
                },
            )
        } else if g.n() < 6 {
            GraphRecord::skipped(idx, g6, SkipReason::BelowSeedOrder { n: g.n() })
        } else if let Some(claim) = cycle_pair_claim(g) {
            GraphRecord::skipped(idx, g6, SkipReason::NotCyclicallyFourConnected)
                .with_claims(vec![claim])
        } else if forms.contains(&canonical_form(g)) {
            GraphRecord::new(idx, g6, Status::Passed)
                .with_claims(vec![Claim::CyclicallyFourConnected])
        } else {
            GraphRecord::new(idx, g6, Status::Failed).with_claims(vec![
                Claim::CyclicallyFourConnected,
                Claim::NotGenerated { max_n },
            ])
        };
        r.with_label("corpus")
    });
    records.extend(corpus_records);
    Ok(CampaignReport::new(
        "cyclic_cubic",
        vec![format!("max_n={max_n}")],
        records,
    ))
}

/// In a quasi 5-connected graph, `δ(G/e) ≥ 4` forces `G/e` to be 4-connected.
pub fn degree_bound(corpus: &[Graph], jobs: usize) -> CampaignReport {
    let records = run_ordered(corpus, jobs, |i, g| {
        let g6 = graph6::encode(g);
        if let Some(obstruction) = quasi_k_obstruction(g, 5) {
            return GraphRecord::skipped(i, g6, SkipReason::NotQuasiConnected { k: 5 })
                .with_claims(quasi_obstruction_claims(&obstruction));
        }
        let mut counts = EdgeCounts::default();
        let mut claims = vec![Claim::QuasiConnected { k: 5 }];
        let mut violated = false;
        for e in g.edges() {
            let h = contract_edge(g, e).expect("edge of g").graph;
            if h.min_degree() < 4 {
                counts.skipped += 1;
                continue;
            }
            counts.checked += 1;
            if vertex_connectivity(&h) < 4 {
                violated = true;
                claims.push(Claim::ContractionMinDegree { edge: e });
                claims.extend(small_contraction_cut(g, e));
            }
        }
        let status = if violated {
            Status::Failed
        } else {
            Status::Passed
        };
        let mut r = GraphRecord::new(i, g6, status).with_claims(claims);
        r.edge_counts = Some(counts);
        r
    });
    CampaignReport::new("degree_bound", vec!["k=5".into()], records)
}

/// Every k-connected triangle-free graph has a k-contractible edge.
pub fn triangle_free(corpus: &[Graph], k: usize, jobs: usize) -> Result<CampaignReport> {
    if k < 2 {
        return Err(GraphError::InvalidParameter(format!(
            "k must be at least 2, got {k}"
        )));
    }
    let records = run_ordered(corpus, jobs, |i, g| {
        let g6 = graph6::encode(g);
        let kappa = vertex_connectivity(g);
        if kappa < k {
            return GraphRecord::skipped(
                i,
                g6,
                SkipReason::LowConnectivity {
                    connectivity: kappa,
                    required: k,
                },
            )
            .with_claims(vec![Claim::Connectivity { value: kappa }]);
        }
        if g.has_triangle() {
            return GraphRecord::skipped(i, g6, SkipReason::HasTriangle)
                .with_claims(pattern_claim(g, Family::Complete(3)).into_iter().collect());
        }
        let found = g
            .edges()
            .find(|&e| vertex_connectivity(&contract_edge(g, e).expect("edge of g").graph) >= k);
        match found {
            Some(edge) => GraphRecord::new(i, g6, Status::Passed)
                .with_claims(vec![Claim::Contractible { edge, k }]),
            None => GraphRecord::new(i, g6, Status::Failed).with_claims(
                g.edges()
                    .filter_map(|e| small_contraction_cut(g, e))
                    .collect(),
            ),
        }
    });
    Ok(CampaignReport::new(
        "triangle_free",
        vec![format!("k={k}")],
        records,
    ))
}

/// The circulant on 11 vertices with connections 1 and 4: 4-regular, quasi
/// 5-connected, and every edge `i ~ i + 4` is quasi 5-contractible. The
/// remaining edges are reported without assertion.
pub fn circulant_check() -> CampaignReport {
    let g = circulant_11();
    let g6 = graph6::encode(&g);
    let mut claims = Vec::new();
    let mut ok = g.n() == 11 && g.is_regular(4);
    for v in 0..g.n() {
        if g.degree(v).ok() != Some(4) {
            claims.push(Claim::Degree {
                vertex: v,
                degree: g.degree(v).expect("in range"),
            });
        }
    }
    match quasi_k_obstruction(&g, 5) {
        None => claims.push(Claim::QuasiConnected { k: 5 }),
        Some(o) => {
            ok = false;
            claims.extend(quasi_obstruction_claims(&o));
        }
    }
    let mut verdicts = Vec::new();
    for e in g.edges() {
        let diagonal = (e.u() + 4) % 11 == e.v() || (e.v() + 4) % 11 == e.u();
        let verdict = classify_contraction(&g, e, 5).expect("edge of g");
        if verdict == ContractionVerdict::QuasiK {
            if diagonal {
                claims.push(Claim::QuasiContractible { edge: e, k: 5 });
            }
        } else {
            ok &= !diagonal;
            claims.extend(quasi_failure_claim(&g, e, 5));
        }
        verdicts.push(EdgeVerdict {
            edge: e,
            verdict,
            asserted: diagonal,
        });
    }
    let mut r = GraphRecord::new(0, g6, if ok { Status::Passed } else { Status::Failed })
        .with_claims(claims)
        .with_label(Family::Circulant(11, vec![1, 4]).to_string());
    r.edge_verdicts = verdicts;
    CampaignReport::new("circulant", Vec::new(), vec![r])
}

/// `C_n^2` has a nontrivial 4-cut for `n ≥ 8` and contains `P̄5` for
/// `n = 5, 6, 7`; the line graph of `C4⁺` is `P̄5`.
pub fn forbidden_pair_facts(max_n: usize) -> Result<CampaignReport> {
    if max_n < 5 {
        return Err(GraphError::InvalidParameter(format!(
            "max_n must be at least 5, got {max_n}"
        )));
    }
    let mut records = Vec::new();
    for n in 5..=max_n {
        let g = cycle_square(n)?;
        let label = Family::CycleSquare(n).to_string();
        let claim = if n >= 8 {
            crate::connectivity::first_nontrivial_cut(&g, 4).map(|c| cut_claim(&c))
        } else {
            pattern_claim(&g, Family::P5Complement)
        };
        let status = if claim.is_some() {
            Status::Passed
        } else {
            Status::Failed
        };
        let mut r = GraphRecord::new(records.len(), graph6::encode(&g), status)
            .with_claims(claim.into_iter().collect())
            .with_label(label);
        if status == Status::Failed {
            r.note = Some(if n >= 8 {
                "no nontrivial 4-cut".into()
            } else {
                "no copy of P5-complement".into()
            });
        }
        records.push(r);
    }
    let line = c4_plus().line_graph()?;
    let same = is_isomorphic(&line, &p5_complement());
    let mut r = GraphRecord::new(
        records.len(),
        graph6::encode(&line),
        if same { Status::Passed } else { Status::Failed },
    )
    .with_claims(vec![Claim::IsomorphicToFamily {
        family: Family::P5Complement.to_string(),
    }])
    .with_label("line_graph:c4_plus");
    if !same {
        r.note = Some("line graph of C4+ differs from P5-complement".into());
    }
    records.push(r);
    Ok(CampaignReport::new(
        "forbidden_pair_facts",
        vec![format!("max_n={max_n}")],
        records,
    ))
}

/// Adding a handle to a generated graph containing `C4⁺` gives a graph that
/// still contains `C4⁺`.
pub fn handles(max_n: usize, jobs: usize) -> Result<CampaignReport> {
    let generated = generate_ccc4(max_n)?;
    let hosts: Vec<Graph> = generated
        .into_iter()
        .filter(|g| g.n() + 2 <= max_n)
        .collect();
    let pattern = c4_plus();
    let records = run_ordered(&hosts, jobs, |i, g| {
        let g6 = graph6::encode(g);
        let Some(claim) = pattern_claim(g, Family::C4Plus) else {
            return GraphRecord::skipped(
                i,
                g6,
                SkipReason::LacksPattern {
                    pattern: Family::C4Plus.to_string(),
                },
            );
        };
        let mut claims = vec![claim];
        let mut counts = EdgeCounts::default();
        for site in handle_sites(g) {
            counts.checked += 1;
            let h = add_handle(g, site).expect("valid site");
            if contains_subgraph(&h, &pattern, MatchKind::Subgraph)
                .expect("small pattern")
                .is_none()
            {
                let (e1, e2) = site.edges();
                claims.push(Claim::HandleWithoutSubgraph {
                    e1,
                    e2,
                    pattern: Family::C4Plus.to_string(),
                });
            }
        }
        let status = if claims.len() == 1 {
            Status::Passed
        } else {
            Status::Failed
        };
        let mut r = GraphRecord::new(i, g6, status).with_claims(claims);
        r.edge_counts = Some(counts);
        r
    });
    Ok(CampaignReport::new(
        "handles",
        vec![format!("max_n={max_n}")],
        records,
    ))
}
