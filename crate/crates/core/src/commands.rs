//! Experiment commands behind the `fsk` binary. Each returns an
//! [`ExperimentReport`] whose counts are recomputed from the artifacts it
//! writes; callers map [`ExperimentReport::all_passed`] to the exit status.

use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::biclique::{build_uvt_partition, max_induced_complete_bipartite};
use crate::construction::{
    build_min_member, certify_structure, edge_bound, plan_layout, specified_edge_count, Alpha,
    ConstructionLayout, ConstructionResult,
};
use crate::freeness::{Detector, FreenessError};
use crate::graph::{decode_graph6, encode_graph6, parse_edge_list, Graph, VertexSet};
use crate::pattern::{build_fsk, chromatic_number};
use crate::report::{ExperimentReport, Parameters};
use crate::stability::{bound_report, deletion_pipeline};

/// Failing non-edges listed in a report before truncation.
const MAX_LISTED: usize = 20;

#[derive(Debug, Error)]
pub enum CommandError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("i/o: {0}")]
    Io(String),
}

impl From<FreenessError> for CommandError {
    fn from(e: FreenessError) -> Self {
        CommandError::Usage(e.to_string())
    }
}

/// Parses a count written as an integer or as `base^exp` (e.g. `10^7`).
pub fn parse_count(text: &str) -> Result<u64, String> {
    let text = text.trim();
    let parse = |s: &str| s.trim().parse::<u64>().map_err(|e| format!("bad count {text:?}: {e}"));
    match text.split_once('^') {
        Some((b, e)) => {
            let (b, e) = (parse(b)?, parse(e)?);
            u32::try_from(e)
                .ok()
                .and_then(|e| b.checked_pow(e))
                .ok_or_else(|| format!("count {text:?} overflows"))
        }
        None => parse(text),
    }
}

/// Reads a graph in graph6 or edge-list form; a leading digit marks an
/// edge list, since digits never start a graph6 string.
pub fn read_graph(path: &Path) -> Result<Graph, CommandError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CommandError::Io(format!("{}: {e}", path.display())))?;
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .and_then(|l| l.chars().next());
    let parsed = if first.is_some_and(|c| c.is_ascii_digit()) {
        parse_edge_list(&text)
    } else {
        decode_graph6(&text)
    };
    parsed.map_err(|e| CommandError::Io(format!("{}: {e}", path.display())))
}

struct Artifacts<'a> {
    dir: Option<&'a Path>,
}

impl Artifacts<'_> {
    fn create(dir: Option<&Path>) -> Result<Artifacts<'_>, CommandError> {
        if let Some(d) = dir {
            fs::create_dir_all(d).map_err(|e| CommandError::Io(format!("{}: {e}", d.display())))?;
        }
        Ok(Artifacts { dir })
    }

    fn write(&self, report: &mut ExperimentReport, name: &str, file: &str, contents: &str) -> Result<(), CommandError> {
        let Some(dir) = self.dir else { return Ok(()) };
        let path: PathBuf = dir.join(file);
        fs::write(&path, contents).map_err(|e| CommandError::Io(format!("{}: {e}", path.display())))?;
        report.artifacts.insert(name.to_string(), path.display().to_string());
        Ok(())
    }

    fn write_json<T: Serialize>(&self, report: &mut ExperimentReport, name: &str, file: &str, value: &T) -> Result<(), CommandError> {
        let doc = serde_json::to_string_pretty(value).expect("serializable artifact");
        self.write(report, name, file, &doc)
    }

    fn write_graph(&self, report: &mut ExperimentReport, name: &str, file: &str, g: &Graph) -> Result<(), CommandError> {
        let doc = encode_graph6(g).map_err(|e| CommandError::Io(e.to_string()))?;
        self.write(report, name, file, &format!("{doc}\n"))
    }

    fn finish(&self, report: &mut ExperimentReport) -> Result<(), CommandError> {
        if let Some(dir) = self.dir {
            report.artifacts.insert("report".into(), dir.join("report.json").display().to_string());
            let snapshot = report.clone();
            self.write_json(report, "report", "report.json", &snapshot)?;
        }
        Ok(())
    }
}

fn millis(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

fn listed(pairs: &[(usize, usize)]) -> Value {
    json!({
        "total": pairs.len(),
        "first": pairs.iter().take(MAX_LISTED).collect::<Vec<_>>(),
    })
}

/// Writes `F_{s,k}` and checks its order, size and chromatic numbers.
pub fn cmd_pattern(s: usize, k: usize, out: Option<&Path>) -> Result<ExperimentReport, CommandError> {
    let p = build_fsk(s, k).map_err(|e| CommandError::Usage(e.to_string()))?;
    let mut report = ExperimentReport::new(
        "pattern",
        Parameters {
            s: Some(s),
            k: Some(k),
            ..Default::default()
        },
    );
    let files = Artifacts::create(out)?;
    files.write_graph(&mut report, "pattern", "pattern.g6", &p.graph)?;

    let (order, size) = (p.graph.order(), p.graph.edge_count());
    report.count("vertices", order);
    report.count("edges", size);
    report.check("order", order == s * (2 * k - 1) + 2, json!({"value": order}));
    report.check("size", size == 2 * k * s + 1, json!({"value": size}));
    for (name, g, want) in [
        ("chromatic_number", &p.graph, 3),
        ("chromatic_number_without_hub_edge", &p.without_hub_edge(), 2),
    ] {
        match chromatic_number(g) {
            Ok(chi) => report.check(name, chi == want, json!({"value": chi, "expected": want})),
            Err(e) => report.check(name, false, json!({"error": e.to_string()})),
        };
    }
    files.finish(&mut report)?;
    Ok(report)
}

#[derive(Clone, Copy, Debug)]
pub struct ConstructArgs {
    pub n: usize,
    pub s: usize,
    pub k: usize,
    pub alpha: Alpha,
    pub saturate: bool,
}

/// Plans the layout, builds and certifies the minimum member, and with
/// `saturate` also saturates it and checks the saturated member.
pub fn cmd_construct(args: ConstructArgs, out: Option<&Path>) -> Result<ExperimentReport, CommandError> {
    let ConstructArgs { n, s, k, alpha, saturate } = args;
    let layout = plan_layout(n, s, k, alpha).map_err(|e| CommandError::Usage(e.to_string()))?;
    let mut report = ExperimentReport::new(
        "construct",
        Parameters {
            n: Some(n),
            s: Some(s),
            k: Some(k),
            alpha: Some(alpha),
            ..Default::default()
        },
    );
    let files = Artifacts::create(out)?;
    files.write_json(&mut report, "layout", "layout.json", &layout)?;

    let clock = Instant::now();
    let member = build_min_member(&layout);
    let g = &member.graph;
    files.write_graph(&mut report, "min_member", "min_member.g6", g)?;
    report.timings_ms.insert("build".into(), millis(clock));

    let edges = g.edge_count();
    let specified = specified_edge_count(&layout);
    report.count("vertices", n);
    report.count("t", layout.t);
    report.count("m", layout.m);
    report.count("blocks", layout.blocks);
    report.count("z_vertices", layout.z_vertices().len());
    report.count("edges", edges);
    report.count("specified_edges", specified as usize);
    report.count("biclique_ceiling", layout.biclique_ceiling());
    report.check("edge_count", edges as u64 == specified, json!({"built": edges, "specified": specified}));

    let cert = certify_structure(&member);
    files.write_json(&mut report, "certificate", "certificate.json", &cert)?;
    report.check(
        "certificate",
        cert.passed(),
        json!({"failed": cert.failures().map(|f| f.fact).collect::<Vec<_>>()}),
    );

    let bound = edge_bound(edges as u64, n as u64, s as u32, k as u32, alpha);
    let detail = serde_json::to_value(&bound).unwrap();
    if bound.theorem_scale {
        report.check("edge_bound", bound.holds, detail);
    } else {
        report.note("edge_bound", bound.holds, detail);
    }

    let det = Detector::new(s, k)?;
    let clock = Instant::now();
    match det.find_copy(g) {
        Ok(w) => {
            report.check("freeness", w.is_none(), json!({"witness": w}));
        }
        Err(FreenessError::TooLarge { order, limit }) => {
            report.note("freeness", false, json!({"skipped": format!("order {order} exceeds {limit}")}));
        }
        Err(e) => return Err(e.into()),
    }
    report.timings_ms.insert("freeness".into(), millis(clock));

    if saturate {
        let clock = Instant::now();
        let sat = det.saturate(g)?;
        report.timings_ms.insert("saturate".into(), millis(clock));
        files.write_graph(&mut report, "saturated", "saturated.g6", &sat.graph)?;
        report.count("saturated_edges", sat.graph.edge_count());
        report.count("added_edges", sat.added.len());

        let clock = Instant::now();
        let maximal = det.check_maximal(&sat.graph)?;
        report.timings_ms.insert("maximality".into(), millis(clock));
        report.check("maximality", maximal.maximal, listed(&maximal.failing));

        let h = &sat.graph;
        let x = VertexSet::from_vertices(n, layout.x_vertices());
        let y = VertexSet::from_vertices(n, layout.y_vertices());
        let inside: Vec<(usize, usize)> = [&x, &y].iter().filter_map(|s| h.edge_inside(s)).collect();
        report.check("x_y_independent", inside.is_empty(), json!({"edges": inside}));
        let diagonal: Vec<(usize, usize)> = (0..layout.blocks)
            .flat_map(|i| {
                let yi = VertexSet::from_vertices(n, layout.y_block(i));
                layout
                    .x_block(i)
                    .flat_map(move |u| h.neighbors(u).intersection(&yi).to_vec().into_iter().map(move |v| (u, v)))
                    .collect::<Vec<_>>()
            })
            .collect();
        report.check("diagonal_pairs_empty", diagonal.is_empty(), listed(&diagonal));
        report.note(
            "theorem_scale",
            layout.is_theorem_scale(),
            json!({"n_alpha_at_least_8k2s2": layout.is_theorem_scale()}),
        );
    }
    files.finish(&mut report)?;
    Ok(report)
}

#[derive(Clone, Copy, Debug)]
pub struct StabilityArgs {
    pub s: usize,
    pub k: usize,
    pub seed: u64,
    /// Enables the deletion bound report.
    pub alpha: Option<Alpha>,
    /// Gating upper limit on the core size.
    pub ceiling: Option<usize>,
}

/// Partitions a maximal `F_{s,k}`-free graph and extracts its complete
/// bipartite core.
pub fn cmd_stability(g: &Graph, args: StabilityArgs, out: Option<&Path>) -> Result<ExperimentReport, CommandError> {
    let StabilityArgs { s, k, seed, alpha, ceiling } = args;
    let det = Detector::new(s, k)?;
    let n = g.order();
    let mut report = ExperimentReport::new(
        "stability",
        Parameters {
            n: Some(n),
            s: Some(s),
            k: Some(k),
            alpha,
            seed: Some(seed),
            ..Default::default()
        },
    );
    let files = Artifacts::create(out)?;
    report.count("vertices", n);
    report.count("edges", g.edge_count());

    let clock = Instant::now();
    if let Some(w) = det.find_copy(g)? {
        report.check("input_maximal_free", false, json!({"witness": w}));
        files.finish(&mut report)?;
        return Ok(report);
    }
    let maximal = det.check_maximal(g)?;
    report.timings_ms.insert("maximality".into(), millis(clock));
    if !report.check("input_maximal_free", maximal.maximal, listed(&maximal.failing)) {
        files.finish(&mut report)?;
        return Ok(report);
    }

    let clock = Instant::now();
    let (part, uvt) = build_uvt_partition(g, det.params().order(), seed);
    report.timings_ms.insert("partition".into(), millis(clock));
    files.write_json(&mut report, "partition", "partition.json", &json!({"partition": part, "trace": uvt}))?;
    report.count("u", part.u.len());
    report.count("v", part.v.len());
    report.count("t", part.t.len());
    report.check("partition", part.validate(g).is_ok(), json!({"error": part.validate(g).err()}));
    report.note(
        "core_min_degree",
        true,
        json!({"min_degree": uvt.min_core_degree}),
    );

    let clock = Instant::now();
    let outcome = deletion_pipeline(g, &part, s, k).map_err(|e| CommandError::Usage(e.to_string()))?;
    report.timings_ms.insert("pipeline".into(), millis(clock));
    files.write_json(&mut report, "core", "core.json", &outcome.core)?;
    files.write_json(&mut report, "trace", "trace.json", &outcome.trace)?;

    let core = &outcome.core;
    let trace = &outcome.trace;
    report.count("core_size", core.size());
    report.count("deleted_total", trace.deleted_total);
    report.count("steps", trace.steps.len());
    report.count("omega", trace.omega_size);
    report.check("core_complete_bipartite", core.validate(g).is_ok(), json!({"error": core.validate(g).err()}));
    let keep = core.vertices().union(&part.t);
    report.check(
        "trace_disjoint",
        trace.is_disjoint_from(&keep) && trace.deleted_total + core.size() + part.t.len() == n,
        Value::Null,
    );
    report.check("steps_at_most_n", trace.steps.len() <= n, Value::Null);
    report.note(
        "endpoints_touch_t",
        trace.t_contact_violations == 0,
        json!({"violations": trace.t_contact_violations, "class_counts": trace.class_counts}),
    );
    if let Some(c) = ceiling {
        report.check("core_within_ceiling", core.size() <= c, json!({"core": core.size(), "ceiling": c}));
    }
    if let Some(a) = alpha {
        let b = bound_report(trace, n, s, k, a);
        report.note("deletion_bound", b.within_bound, serde_json::to_value(&b).unwrap());
    }
    files.finish(&mut report)?;
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyCheck {
    Freeness,
    Maximality,
    Biclique,
    Certificate,
}

impl FromStr for VerifyCheck {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "freeness" => Ok(VerifyCheck::Freeness),
            "maximality" => Ok(VerifyCheck::Maximality),
            "biclique" => Ok(VerifyCheck::Biclique),
            "certificate" => Ok(VerifyCheck::Certificate),
            other => Err(format!(
                "unknown check {other:?} (expected freeness, maximality, biclique or certificate)"
            )),
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyArgs {
    pub checks: Vec<VerifyCheck>,
    pub s: usize,
    pub k: usize,
    pub budget: u64,
    pub ceiling: Option<usize>,
    /// Required by the certificate check.
    pub layout: Option<ConstructionLayout>,
}

pub fn cmd_verify(g: &Graph, args: &VerifyArgs, out: Option<&Path>) -> Result<ExperimentReport, CommandError> {
    if args.checks.contains(&VerifyCheck::Certificate) && args.layout.is_none() {
        return Err(CommandError::Usage("the certificate check needs --layout".into()));
    }
    let needs_pattern = args
        .checks
        .iter()
        .any(|c| matches!(c, VerifyCheck::Freeness | VerifyCheck::Maximality));
    let det = if needs_pattern { Some(Detector::new(args.s, args.k)?) } else { None };
    let mut report = ExperimentReport::new(
        "verify",
        Parameters {
            n: Some(g.order()),
            s: Some(args.s),
            k: Some(args.k),
            budget: Some(args.budget),
            ..Default::default()
        },
    );
    let files = Artifacts::create(out)?;
    report.count("vertices", g.order());
    report.count("edges", g.edge_count());

    for check in &args.checks {
        let clock = Instant::now();
        match check {
            VerifyCheck::Freeness => {
                let w = det.unwrap().find_copy(g)?;
                report.check("freeness", w.is_none(), json!({"witness": w}));
            }
            VerifyCheck::Maximality => match det.unwrap().check_maximal(g) {
                Ok(m) => {
                    report.check("maximality", m.maximal, listed(&m.failing));
                }
                Err(FreenessError::NotFree(w)) => {
                    report.check("maximality", false, json!({"not_free": w}));
                }
                Err(e) => return Err(e.into()),
            },
            VerifyCheck::Biclique => {
                let r = max_induced_complete_bipartite(g, args.budget);
                report.count("biclique_size", r.best.size());
                report.count("biclique_upper_bound", r.upper_bound);
                let within = args.ceiling.is_none_or(|c| r.upper_bound <= c);
                report.check(
                    "biclique",
                    (r.optimal || args.ceiling.is_some()) && within && r.best.validate(g).is_ok(),
                    serde_json::to_value(&r).unwrap(),
                );
                files.write_json(&mut report, "biclique", "biclique.json", &r)?;
            }
            VerifyCheck::Certificate => {
                let layout = args.layout.clone().unwrap();
                if layout.n != g.order() {
                    return Err(CommandError::Usage(format!(
                        "layout has {} vertices, graph has {}",
                        layout.n,
                        g.order()
                    )));
                }
                let specified = specified_edge_count(&layout);
                let cert = certify_structure(&ConstructionResult {
                    graph: g.clone(),
                    layout,
                    specified_edge_count: specified,
                });
                report.check("certificate", cert.passed(), serde_json::to_value(&cert).unwrap());
            }
        }
        report.timings_ms.insert(format!("{check:?}").to_lowercase(), millis(clock));
    }
    files.finish(&mut report)?;
    Ok(report)
}

/// Exact maximum induced complete bipartite subgraph. Passes when the
/// search closes, or, given a ceiling, when the proven bound respects it.
pub fn cmd_max_bipartite(
    g: &Graph,
    budget: u64,
    ceiling: Option<usize>,
    out: Option<&Path>,
) -> Result<ExperimentReport, CommandError> {
    let mut report = ExperimentReport::new(
        "max-bipartite",
        Parameters {
            n: Some(g.order()),
            budget: Some(budget),
            ..Default::default()
        },
    );
    let files = Artifacts::create(out)?;
    let clock = Instant::now();
    let r = max_induced_complete_bipartite(g, budget);
    report.timings_ms.insert("search".into(), millis(clock));
    files.write_json(&mut report, "biclique", "biclique.json", &r)?;
    report.count("vertices", g.order());
    report.count("edges", g.edge_count());
    report.count("size", r.best.size());
    report.count("upper_bound", r.upper_bound);
    report.count("nodes", r.nodes as usize);
    report.check("valid", r.best.validate(g).is_ok(), Value::Null);
    match ceiling {
        Some(c) => report.check("within_ceiling", r.upper_bound <= c, json!({"optimal": r.optimal, "ceiling": c})),
        None => report.check("search_closed", r.optimal, Value::Null),
    };
    files.finish(&mut report)?;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(parse_count("10^7"), Ok(10_000_000));
        assert_eq!(parse_count("1234"), Ok(1234));
        assert!(parse_count("10^99").is_err());
        assert!(parse_count("ten").is_err());
    }

    #[test]
    fn pattern_reports() {
        let r = cmd_pattern(2, 2, None).unwrap();
        assert!(r.all_passed());
        assert_eq!(r.counts["vertices"], 8);
        assert_eq!(r.verdict("chromatic_number").unwrap().detail["value"], 3);
        assert!(matches!(cmd_pattern(0, 2, None), Err(CommandError::Usage(_))));
    }

    #[test]
    fn construct_n64() {
        let r = cmd_construct(
            ConstructArgs { n: 64, s: 2, k: 2, alpha: Alpha::half(), saturate: false },
            None,
        )
        .unwrap();
        assert!(r.all_passed(), "{r:#?}");
        assert_eq!(r.counts["specified_edges"], 684);
        let err = cmd_construct(
            ConstructArgs { n: 10, s: 2, k: 2, alpha: Alpha::half(), saturate: false },
            None,
        )
        .unwrap_err();
        assert!(err.to_string().contains("infeasible"), "{err}");
    }

    #[test]
    fn verify_examples() {
        let args = |checks: Vec<VerifyCheck>| VerifyArgs {
            checks,
            s: 2,
            k: 2,
            budget: 10_000_000,
            ceiling: None,
            layout: None,
        };
        assert!(cmd_verify(&Graph::cycle(5), &args(vec![VerifyCheck::Freeness]), None).unwrap().all_passed());
        let r = cmd_verify(&Graph::complete_bipartite(3, 3), &args(vec![VerifyCheck::Biclique]), None).unwrap();
        assert!(r.all_passed());
        assert_eq!(r.counts["biclique_size"], 6);
        let r = cmd_verify(&Graph::new(5), &args(vec![VerifyCheck::Maximality]), None).unwrap();
        assert!(!r.all_passed());
        assert_eq!(r.verdict("maximality").unwrap().detail["total"], 10);
        assert!("colour".parse::<VerifyCheck>().is_err());
        assert!(cmd_verify(&Graph::new(5), &args(vec![VerifyCheck::Certificate]), None).is_err());
    }

    #[test]
    fn stability_on_complete_bipartite() {
        let g = Graph::complete_bipartite(9, 9);
        let args = StabilityArgs { s: 2, k: 2, seed: 0, alpha: Some(Alpha::half()), ceiling: None };
        let r = cmd_stability(&g, args, None).unwrap();
        assert!(r.all_passed(), "{r:#?}");
        assert_eq!((r.counts["core_size"], r.counts["deleted_total"]), (18, 0));

        let mut h = g.clone();
        h.delete_edge(0, 9).unwrap();
        let r = cmd_stability(&h, args, None).unwrap();
        assert!(!r.all_passed());
        assert_eq!(r.verdict("input_maximal_free").unwrap().detail["first"][0], json!([0, 9]));
    }
}
