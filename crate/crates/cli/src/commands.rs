// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeSet;
use std::io::Write;

use itertools::Itertools;
use rayon::prelude::*;
use serde_json::{json, Value};

use pxk::characterize::{classify, summarize, survey, PxClaim, SurveyOptions, SurveyRecord};
use pxk::coloring::{proper_edge_color_tree, verify_k_proper, Verification};
use pxk::constructions::{build, color_snpp, color_traceable, color_unicyclic, unicyclic_broom_variants, FamilySpec};
use pxk::graph::encode_graph6;
use pxk::solver::{
    bounds_for, check_certificate, recheck_exhaustion, reproduces, solve, BoundsReport, PxCertificate, SOLVE_MAX_N,
};
use pxk::{EdgeColoring, Graph, TreeKind};

use crate::io::{open_output, read_graphs, read_text};
use crate::{Cli, Command, ConstructArgs, Failure, Format, Strategy, EXIT_INVALID, EXIT_SIZE_CAP, EXIT_USAGE};

/// Data lines and diagnostics for one input graph.
#[derive(Default)]
struct Outcome {
    data: Vec<String>,
    diagnostics: Vec<String>,
    code: u8,
}

impl Outcome {
    fn fail(&mut self, line: usize, f: Failure) {
        self.diagnostics.push(format!("line {line}: {}", f.message));
        self.code = self.code.max(f.code);
    }
}

pub fn run(cli: &Cli) -> Result<u8, Failure> {
    let c = &cli.common;
    match &cli.command {
        Command::Compute => per_graph(cli, |line, g, k| solve_one(cli, line, g, k, TreeKind::Proper)),
        Command::Rainbow => per_graph(cli, |line, g, k| solve_one(cli, line, g, k, TreeKind::Rainbow)),
        Command::Bounds => per_graph(cli, |_, g, k| {
            let r = bounds_for(g, k, TreeKind::Proper)?;
            Ok(render_bounds(c.format, g, &r, false))
        }),
        Command::Classify => per_graph(cli, |_, g, k| {
            let cl = classify(g, k)?;
            Ok(match c.format {
                Format::Json => json!({ "graph6": encode_graph6(g), "k": k, "classification": cl }).to_string(),
                Format::Text => {
                    let px = match cl.px {
                        PxClaim::Exact(v) => format!("px={v}"),
                        PxClaim::AtMost(v) => format!("px<={v}"),
                    };
                    let verdict = serde_json::to_value(cl.verdict).unwrap();
                    format!("{} k={k} verdict={} {px} basis: {}", encode_graph6(g), verdict.as_str().unwrap(), cl.basis)
                }
            })
        }),
        Command::Color { strategy } => color(cli, *strategy),
        Command::Verify { certificate, skip_exhaustion } => verify(cli, certificate, *skip_exhaustion),
        Command::Construct(args) => construct(cli, args),
        Command::Survey { rainbow, recheck, resume } => run_survey(cli, *rainbow, *recheck, *resume),
    }
}

/// Runs `f` for every input graph and every selected k, graphs in parallel,
/// output in input order. The exit code is the largest one met.
fn per_graph<F>(cli: &Cli, f: F) -> Result<u8, Failure>
where
    F: Fn(usize, &Graph, usize) -> Result<String, Failure> + Sync,
{
    let inputs = read_graphs(&cli.common.input)?;
    let sel = cli.common.k.0;
    let outcomes: Vec<Outcome> = inputs
        .par_iter()
        .map(|(line, parsed)| {
            let mut out = Outcome::default();
            let g = match parsed {
                Ok(g) => g,
                Err(e) => {
                    out.fail(*line, Failure::new(EXIT_INVALID, e.to_string()));
                    return out;
                }
            };
            let ks = sel.ks(g.n());
            if ks.is_empty() {
                let e = pxk::Error::InvalidK { k: sel.from, min: 2, n: g.n() };
                out.fail(*line, e.into());
            }
            for k in ks {
                match f(*line, g, k) {
                    Ok(s) => out.data.push(s),
                    Err(e) => out.fail(*line, e),
                }
            }
            out
        })
        .collect();
    emit(cli, outcomes)
}

fn emit(cli: &Cli, outcomes: Vec<Outcome>) -> Result<u8, Failure> {
    let mut w = open_output(cli.common.output.as_deref(), false)?;
    let mut code = 0;
    for o in outcomes {
        for d in o.data {
            writeln!(w, "{d}")?;
        }
        for d in o.diagnostics {
            eprintln!("{d}");
        }
        code = code.max(o.code);
    }
    w.flush()?;
    Ok(code)
}

fn solve_one(cli: &Cli, _line: usize, g: &Graph, k: usize, kind: TreeKind) -> Result<String, Failure> {
    if g.n() > SOLVE_MAX_N && cli.common.force_heuristic_bounds {
        let r = bounds_for(g, k, kind)?;
        return Ok(render_bounds(cli.common.format, g, &r, true));
    }
    let cert = solve(g, k, kind)?;
    Ok(match cli.common.format {
        Format::Json => cert.to_json_line(),
        Format::Text => {
            let name = if kind == TreeKind::Proper { "px" } else { "rx" };
            let ev = &cert.lower_evidence;
            let exhausted = ev.exhausted.iter().map(|x| format!("{}:{}", x.palette, x.colorings_examined)).join(",");
            format!(
                "{} k={k} {name}={} lower={}:{} exhausted=[{exhausted}] colors={}",
                encode_graph6(g),
                cert.value,
                ev.bound.provenance,
                ev.bound.value,
                cert.coloring.colors().iter().join(",")
            )
        }
    })
}

fn render_bounds(format: Format, g: &Graph, r: &BoundsReport, bounds_only: bool) -> String {
    match format {
        Format::Json => {
            let mut v = json!({ "graph6": encode_graph6(g), "bounds": r });
            if bounds_only {
                v["bounds_only"] = Value::Bool(true);
            }
            v.to_string()
        }
        Format::Text => {
            let show = |list: &[pxk::solver::Bound]| {
                list.iter()
                    .map(|b| {
                        let tag = if b.exact == Some(false) { "(heuristic)" } else { "" };
                        format!("{}={}{tag}", b.provenance, b.value)
                    })
                    .join(" ")
            };
            format!(
                "{} k={} lower: {} | upper: {} | bracket [{}, {}]{}",
                encode_graph6(g),
                r.k,
                show(&r.lower),
                show(&r.upper),
                r.best_lower,
                r.best_upper,
                if bounds_only { " (bounds only)" } else { "" }
            )
        }
    }
}

fn color(cli: &Cli, strategy: Strategy) -> Result<u8, Failure> {
    let inputs = read_graphs(&cli.common.input)?;
    let sel = cli.common.k.0;
    let format = cli.common.format;
    let outcomes = inputs
        .par_iter()
        .map(|(line, parsed)| {
            let mut out = Outcome::default();
            let result = parsed.clone().map_err(Failure::from).and_then(|g| {
                let (col, extra) = build_coloring(&g, strategy)?;
                let mut checks = Vec::new();
                let mut all_valid = true;
                for k in sel.ks(g.n()) {
                    let v = verify_k_proper(&g, &col, k)?;
                    let failing = match v {
                        Verification::Valid { .. } => None,
                        Verification::Invalid { failing } => Some(failing),
                    };
                    all_valid &= failing.is_none();
                    checks.push((k, failing));
                }
                Ok((g, col, extra, checks, all_valid))
            });
            match result {
                Err(f) => out.fail(*line, f),
                Ok((g, col, extra, checks, all_valid)) => {
                    out.data.push(render_coloring(format, &g, strategy, &col, extra, &checks));
                    if !all_valid {
                        let bad = checks.iter().find_map(|(k, f)| f.as_ref().map(|s| (k, s))).unwrap();
                        out.fail(
                            *line,
                            Failure::new(
                                EXIT_INVALID,
                                format!("k={}: no proper tree for S = {}", bad.0, bad.1.iter().join(",")),
                            ),
                        );
                    }
                }
            }
            out
        })
        .collect();
    emit(cli, outcomes)
}

/// Extra facts a strategy reports alongside the coloring.
type Extra = Option<(usize, String)>;

fn build_coloring(g: &Graph, strategy: Strategy) -> Result<(EdgeColoring, Extra), Failure> {
    Ok(match strategy {
        Strategy::Traceable => (color_traceable(g)?, None),
        Strategy::Tree => (proper_edge_color_tree(g)?, None),
        Strategy::Snpp => (color_snpp(g)?, None),
        Strategy::Unicyclic => {
            let u = color_unicyclic(g)?;
            let case = serde_json::to_value(u.case).unwrap().as_str().unwrap().to_string();
            (u.coloring, Some((u.value, case)))
        }
    })
}

fn render_coloring(
    format: Format,
    g: &Graph,
    strategy: Strategy,
    col: &EdgeColoring,
    extra: Extra,
    checks: &[(usize, Option<Vec<usize>>)],
) -> String {
    let strategy = match strategy {
        Strategy::Traceable => "traceable",
        Strategy::Tree => "tree",
        Strategy::Unicyclic => "unicyclic",
        Strategy::Snpp => "snpp",
    };
    match format {
        Format::Json => {
            let mut v = json!({
                "graph6": encode_graph6(g),
                "strategy": strategy,
                "colors": col.colors(),
                "palette": col.palette(),
                "used_colors": col.used_colors(),
                "verification": checks.iter().map(|(k, f)| json!({ "k": k, "valid": f.is_none(), "failing": f })).collect::<Vec<_>>(),
            });
            if let Some((value, case)) = extra {
                v["claimed_value"] = json!(value);
                v["case"] = json!(case);
            }
            v.to_string()
        }
        Format::Text => {
            let mut s = format!(
                "{} strategy={strategy} colors={} used={}",
                encode_graph6(g),
                col.colors().iter().join(","),
                col.used_colors()
            );
            if let Some((value, case)) = extra {
                s += &format!(" value={value} case={case}");
            }
            for (k, f) in checks {
                match f {
                    None => s += &format!(" k={k}:valid"),
                    Some(f) => s += &format!(" k={k}:invalid({})", f.iter().join(",")),
                }
            }
            s
        }
    }
}

fn verify(cli: &Cli, path: &str, skip_exhaustion: bool) -> Result<u8, Failure> {
    let text = read_text(path)?;
    let mut w = open_output(cli.common.output.as_deref(), false)?;
    let mut code = 0;
    let mut count = 0;
    for value in serde_json::Deserializer::from_str(&text).into_iter::<Value>() {
        count += 1;
        let value = value.map_err(|e| Failure::new(EXIT_INVALID, format!("certificate {count}: {e}")))?;
        let cert = PxCertificate::from_json(&value.to_string())
            .map_err(|e| Failure::new(EXIT_INVALID, format!("certificate {count}: {e}")))?;
        let mut failure = check_certificate(&cert)?;
        if failure.is_none() && !skip_exhaustion {
            failure = recheck_exhaustion(&cert)?;
            if failure.is_none() {
                failure = reproduces(&cert)?;
            }
        }
        let index = if cert.index == TreeKind::Proper { "px" } else { "rx" };
        let g6 = encode_graph6(&cert.graph);
        match &failure {
            None => match cli.common.format {
                Format::Json => writeln!(
                    w,
                    "{}",
                    json!({ "valid": true, "graph6": g6, "index": cert.index, "k": cert.k, "value": cert.value })
                )?,
                Format::Text => writeln!(w, "valid {g6} k={} {index}={}", cert.k, cert.value)?,
            },
            Some(f) => {
                code = EXIT_INVALID;
                eprintln!("certificate {count}: invalid: {f}");
                match cli.common.format {
                    Format::Json => writeln!(
                        w,
                        "{}",
                        json!({ "valid": false, "graph6": g6, "index": cert.index, "k": cert.k, "value": cert.value,
                                "failure": f.to_string(), "subset": f.subset() })
                    )?,
                    Format::Text => writeln!(w, "invalid {g6} k={} {index}={}: {f}", cert.k, cert.value)?,
                }
            }
        }
    }
    w.flush()?;
    if count == 0 {
        return Err(Failure::new(EXIT_INVALID, "no certificate found"));
    }
    Ok(code)
}

fn construct(cli: &Cli, args: &ConstructArgs) -> Result<u8, Failure> {
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| Failure::new(EXIT_USAGE, format!("--family {} requires --{flag}", args.family)))
    };
    let graphs: Vec<Graph> = match args.family.as_str() {
        "independence-tree" => {
            vec![build(&FamilySpec::IndependenceTree { a: need(args.a, "a")?, b: need(args.b, "b")? })?]
        }
        "unicyclic-broom-variant" => {
            let n = need(args.n, "n")?;
            match args.index {
                Some(index) => vec![build(&FamilySpec::UnicyclicBroomVariant { n, index })?],
                None => unicyclic_broom_variants(n)?,
            }
        }
        "star-plus-plus" => {
            let variant =
                args.variant.ok_or_else(|| Failure::new(EXIT_USAGE, "--family star-plus-plus requires --variant"))?;
            vec![build(&FamilySpec::StarPlusPlus { n: need(args.n, "n")?, variant: variant.into() })?]
        }
        tag => {
            let n = need(args.n, "n")?;
            let spec = match tag {
                "path" => FamilySpec::Path { n },
                "cycle" => FamilySpec::Cycle { n },
                "star" => FamilySpec::Star { n },
                "wheel" => FamilySpec::Wheel { n },
                "complete" => FamilySpec::Complete { n },
                "star-plus" => FamilySpec::StarPlus { n },
                "broom" => FamilySpec::Broom { n },
                _ => unreachable!("clap restricts --family"),
            };
            vec![build(&spec)?]
        }
    };
    let mut w = open_output(cli.common.output.as_deref(), false)?;
    for g in &graphs {
        match cli.common.format {
            Format::Text => writeln!(w, "{}", encode_graph6(g))?,
            Format::Json => writeln!(
                w,
                "{}",
                json!({ "family": args.family, "graph6": encode_graph6(g), "n": g.n(), "m": g.m(), "edges": g.edges() })
            )?,
        }
    }
    w.flush()?;
    Ok(0)
}

const SURVEY_CHUNK: usize = 32;

fn run_survey(cli: &Cli, rainbow: bool, recheck: bool, resume: bool) -> Result<u8, Failure> {
    let c = &cli.common;
    if resume && (c.output.is_none() || c.format != Format::Json) {
        return Err(Failure::new(EXIT_USAGE, "--resume needs --output and --format json"));
    }
    let inputs = read_graphs(&c.input)?;
    let opts = SurveyOptions { ks: c.k.0, rainbow, recheck };

    let mut done: Vec<SurveyRecord> = Vec::new();
    if resume {
        let path = c.output.as_deref().unwrap();
        if let Ok(text) = std::fs::read_to_string(path) {
            for line in text.lines().filter(|l| !l.trim().is_empty()) {
                let v: Value = serde_json::from_str(line)
                    .map_err(|e| Failure::new(EXIT_INVALID, format!("{path}: cannot resume: {e}")))?;
                if v.get("summary").is_none() {
                    let r: SurveyRecord = serde_json::from_value(v)
                        .map_err(|e| Failure::new(EXIT_INVALID, format!("{path}: cannot resume: {e}")))?;
                    done.push(r);
                }
            }
        }
    }
    let done_lines: BTreeSet<usize> = done.iter().map(|r| r.line).collect();

    let mut code = 0;
    let mut pending = Vec::new();
    let mut parse_errors = Vec::new();
    for (line, parsed) in inputs {
        match parsed {
            Err(e) => {
                eprintln!("line {line}: {e}");
                parse_errors.push(format!("line {line}: {e}"));
            }
            Ok(_) if done_lines.contains(&line) => {}
            Ok(g) if g.n() > SOLVE_MAX_N => {
                eprintln!("line {line}: exact solve is limited to n <= {SOLVE_MAX_N}, got n = {}", g.n());
                code = code.max(EXIT_SIZE_CAP);
            }
            Ok(g) => pending.push((line, Ok(g))),
        }
    }

    // Rewrite kept records without the old footer, then append chunk by chunk.
    let mut w = open_output(c.output.as_deref(), false)?;
    for r in &done {
        write_record(&mut w, c.format, r)?;
    }
    w.flush()?;
    let mut all = done;
    for chunk in pending.chunks(SURVEY_CHUNK) {
        let report = survey(chunk, &opts);
        for r in &report.records {
            write_record(&mut w, c.format, r)?;
            if let Some(e) = &r.error {
                eprintln!("line {}: {e}", r.line);
                code = code.max(EXIT_INVALID);
            } else if !r.ok {
                let failed = r.checks.iter().filter(|x| !x.pass).map(|x| x.claim.as_str()).join(",");
                eprintln!("line {}: failed checks {failed}", r.line);
                code = code.max(EXIT_INVALID);
            }
        }
        w.flush()?;
        all.extend(report.records);
    }
    all.sort_by_key(|r| r.line);
    let mut summary = summarize(&all);
    summary.parse_errors = parse_errors;
    match c.format {
        Format::Json => writeln!(w, "{}", json!({ "summary": summary }))?,
        Format::Text => {
            let claims = summary.claims.iter().map(|(k, t)| format!("{k}={}/{}", t.passed, t.checked)).join(" ");
            let hist = summary.px_histogram.iter().map(|(k, v)| format!("[{k}]={v}")).join(" ");
            writeln!(
                w,
                "summary graphs={} failed={} unsolved={} parse_errors={} px2_graphs={} k_dependent={} claims: {claims} histogram: {hist}",
                summary.graphs,
                summary.failed_graphs,
                summary.unsolved_graphs,
                summary.parse_errors.len(),
                summary.px2_graphs,
                summary.k_dependent.len()
            )?;
        }
    }
    w.flush()?;
    Ok(code)
}

fn write_record(w: &mut dyn Write, format: Format, r: &SurveyRecord) -> std::io::Result<()> {
    match format {
        Format::Json => writeln!(w, "{}", serde_json::to_string(r).expect("record serializes")),
        Format::Text => {
            let vals = r
                .results
                .iter()
                .map(|x| match x.rx {
                    Some(rx) => format!("k{}:px={},rx={rx}", x.k, x.px),
                    None => format!("k{}:px={}", x.k, x.px),
                })
                .join(" ");
            let status = if r.error.is_some() {
                "ERROR".to_string()
            } else if r.ok {
                "ok".to_string()
            } else {
                format!("FAIL({})", r.checks.iter().filter(|x| !x.pass).map(|x| x.claim.as_str()).join(","))
            };
            writeln!(w, "line {} {} {vals} {status}", r.line, r.graph6)
        }
    }
}
