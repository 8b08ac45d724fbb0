//! The `dpcolor` command line. Exit codes: 0 when the verdict is positive
//! (member, good, found, colourable, safe), 1 when it is negative, 2 on bad
//! input. With `--json` every output line is a JSON object; otherwise lines
//! read `key: value`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use sha2::{Digest, Sha256};

use crate::coloring::{extend_boundary, is_dp_k_colorable, solve, verify_theorem, Coloring, ColoringError};
use crate::cycles::{enumerate_cycles, outer_cycle, Cycle};
use crate::discharging::{audit_claims, discharge, meta_audit, DischargeError};
use crate::format::{parse_pg, parse_plan, parse_precoloring, parse_sig, write_pg, write_sig};
use crate::generate::{generate, GenConfig};
use crate::labelling::LabelledGraph;
use crate::plane_graph::{classify, PlaneGraph};
use crate::structure::{
    all_strings, bad_3_faces, check_string_lemma, classify_bad_cycle, find_biclaws, find_claws, is_good_cycle_on,
    lemma_predicates, light_faces, special_subgraphs, Side,
};
use crate::surgery::{apply, check_safety};

#[derive(Debug, Parser)]
#[command(name = "dpcolor", version, about = "DP-colouring toolkit for plane graphs without 4-, 7- and 9-cycles")]
pub struct Cli {
    /// Line-delimited JSON output.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SideArg {
    Interior,
    Exterior,
    Both,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Interior => Side::Interior,
            SideArg::Exterior => Side::Exterior,
            SideArg::Both => Side::Both,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sizes, faces and connectivity.
    Info { graph: PathBuf },
    /// Membership in the class (connected, no 4-, 7- or 9-cycles).
    Member { graph: PathBuf },
    /// Cycles up to a given length.
    Cycles {
        graph: PathBuf,
        #[arg(long, default_value_t = 9)]
        max: usize,
    },
    /// Whether a cycle is good; bad cycles list their claw and biclaw cells.
    Goodcycle {
        graph: PathBuf,
        /// 1-based vertex ids in cyclic order, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        cycle: Vec<usize>,
        #[arg(long, value_enum, default_value = "interior")]
        side: SideArg,
    },
    /// Full structural report.
    Report {
        graph: PathBuf,
        #[arg(long)]
        sig: Option<PathBuf>,
    },
    /// Colours one labelling, optionally extending a precolouring.
    Solve {
        graph: PathBuf,
        #[arg(long)]
        sig: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long)]
        precolor: Option<PathBuf>,
    },
    /// DP-k-colourability over every signature class.
    Dpcheck {
        graph: PathBuf,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// DP-3-colourability of a class member; non-members are input errors.
    Verify {
        graph: PathBuf,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Extends a colouring of the outer boundary.
    Extend {
        graph: PathBuf,
        #[arg(long)]
        precolor: PathBuf,
        #[arg(long)]
        sig: Option<PathBuf>,
    },
    /// The discharging ledger.
    Discharge {
        graph: PathBuf,
        #[arg(long)]
        sig: Option<PathBuf>,
    },
    /// Bound audits and the predicate meta-check.
    Audit {
        graph: PathBuf,
        #[arg(long)]
        sig: Option<PathBuf>,
        #[arg(long)]
        precolor: Option<PathBuf>,
    },
    /// Applies a surgery plan and checks its safety.
    Surgery {
        graph: PathBuf,
        #[arg(long)]
        plan: PathBuf,
        #[arg(long)]
        sig: Option<PathBuf>,
        /// Where to write the resulting `.pg`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generates a random class member.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_delimiter = ',', default_values_t = [4, 7, 9])]
        forbidden: Vec<usize>,
        #[arg(long, default_value_t = 10_000)]
        max_attempts: usize,
        #[arg(long, default_value_t = 2)]
        chords: usize,
        #[arg(long, default_value_t = 0.0)]
        pendant_rate: f64,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Info { .. } => "info",
            Command::Member { .. } => "member",
            Command::Cycles { .. } => "cycles",
            Command::Goodcycle { .. } => "goodcycle",
            Command::Report { .. } => "report",
            Command::Solve { .. } => "solve",
            Command::Dpcheck { .. } => "dpcheck",
            Command::Verify { .. } => "verify",
            Command::Extend { .. } => "extend",
            Command::Discharge { .. } => "discharge",
            Command::Audit { .. } => "audit",
            Command::Surgery { .. } => "surgery",
            Command::Gen { .. } => "gen",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    True,
    False,
    Error,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::True => 0,
            Verdict::False => 1,
            Verdict::Error => 2,
        }
    }

    fn from_bool(b: bool) -> Self {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }
}

/// Summary of one invocation. Everything but `elapsed_ms` is determined by
/// the inputs.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub input_digest: String,
    pub verdict: Verdict,
    pub elapsed_ms: u128,
}

struct Out<'a> {
    json: bool,
    w: &'a mut dyn Write,
}

impl Out<'_> {
    fn kv<T: Serialize + ?Sized>(&mut self, key: &str, v: &T) {
        let value = serde_json::to_value(v).expect("serialisable");
        let _ = if self.json {
            writeln!(self.w, "{}", json!({ key: value }))
        } else {
            match value {
                serde_json::Value::String(s) => writeln!(self.w, "{key}: {s}"),
                other => writeln!(self.w, "{key}: {other}"),
            }
        };
    }

    fn text(&mut self, s: &str) {
        let _ = self.w.write_all(s.as_bytes());
    }
}

struct Inputs {
    bytes: Vec<u8>,
}

impl Inputs {
    fn read(&mut self, p: &Path) -> Result<String, String> {
        let s = fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?;
        self.bytes.extend_from_slice(s.as_bytes());
        self.bytes.push(0);
        Ok(s)
    }

    fn graph(&mut self, p: &Path) -> Result<PlaneGraph, String> {
        let text = self.read(p)?;
        parse_pg(&text).map_err(|e| format!("{}: {e}", p.display()))
    }

    fn labelled(&mut self, g: PlaneGraph, sig: Option<&Path>, k: usize) -> Result<LabelledGraph, String> {
        match sig {
            None => LabelledGraph::identity(g, k).map_err(|e| e.to_string()),
            Some(p) => {
                let text = self.read(p)?;
                parse_sig(&g, k, &text).map_err(|e| format!("{}: {e}", p.display()))
            }
        }
    }

    fn coloring(&mut self, p: &Path, n: usize, k: usize) -> Result<Coloring, String> {
        let text = self.read(p)?;
        parse_precoloring(&text, n, k).map_err(|e| format!("{}: {e}", p.display()))
    }

    fn digest(&self) -> String {
        hex::encode(Sha256::digest(&self.bytes))
    }
}

fn one_based(vs: &[usize]) -> Vec<usize> {
    vs.iter().map(|v| v + 1).collect()
}

fn cycle_1b(c: &Cycle) -> Vec<usize> {
    one_based(c.vertices())
}

/// Parses arguments and runs one command, writing to `w`. Returns the run
/// report; its verdict gives the exit code.
pub fn run<I, T>(args: I, w: &mut dyn Write) -> RunReport
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let start = Instant::now();
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = write!(w, "{}", e.render());
            return RunReport {
                command: String::new(),
                input_digest: String::new(),
                verdict: if code == 0 { Verdict::True } else { Verdict::Error },
                elapsed_ms: 0,
            };
        }
    };
    let mut out = Out { json: cli.json, w };
    let mut inputs = Inputs { bytes: Vec::new() };
    let verdict = match execute(&cli.command, &mut out, &mut inputs) {
        Ok(v) => v,
        Err(msg) => {
            out.kv("error", &msg);
            Verdict::Error
        }
    };
    let report = RunReport {
        command: cli.command.name().to_string(),
        input_digest: inputs.digest(),
        verdict,
        elapsed_ms: start.elapsed().as_millis(),
    };
    if out.json {
        out.kv("run", &report);
    } else {
        out.kv("verdict", &report.verdict);
    }
    report
}

fn execute(cmd: &Command, out: &mut Out, inp: &mut Inputs) -> Result<Verdict, String> {
    match cmd {
        Command::Info { graph } => {
            let g = inp.graph(graph)?;
            out.kv("vertices", &g.n_vertices());
            out.kv("edges", &g.n_edges());
            out.kv("faces", &g.n_faces());
            out.kv("face_sizes", &g.face_sizes());
            out.kv("outer_face", &one_based(&g.face_vertices(0)));
            out.kv("connected", &g.is_connected());
            out.kv("two_connected", &g.is_two_connected());
            out.kv("cycle_space_dimension", &g.cycle_space_dimension());
            Ok(Verdict::True)
        }
        Command::Member { graph } => {
            let g = inp.graph(graph)?;
            let r = classify(&g);
            out.kv("connected", &r.is_connected);
            out.kv("two_connected", &r.is_two_connected);
            let cycles: Vec<Vec<usize>> = r.forbidden_cycles_found.iter().map(cycle_1b).collect();
            out.kv("forbidden_cycles", &cycles);
            out.kv("in_class", &r.in_class_g);
            Ok(Verdict::from_bool(r.in_class_g))
        }
        Command::Cycles { graph, max } => {
            let g = inp.graph(graph)?;
            let cycles = enumerate_cycles(&g, *max);
            for c in &cycles {
                out.kv("cycle", &cycle_1b(c));
            }
            out.kv("count", &cycles.len());
            Ok(Verdict::True)
        }
        Command::Goodcycle { graph, cycle, side } => {
            let g = inp.graph(graph)?;
            let vs = cycle
                .iter()
                .map(|&v| v.checked_sub(1).ok_or("vertex ids are 1-based"))
                .collect::<Result<Vec<_>, _>>()?;
            let c = Cycle::in_graph(&g, vs).map_err(|e| e.to_string())?;
            let side = Side::from(*side);
            let good = is_good_cycle_on(&g, &c, side).map_err(|e| e.to_string())?;
            out.kv("length", &c.len());
            out.kv("good", &good);
            if !good {
                for f in find_claws(&g, &c, side).map_err(|e| e.to_string())? {
                    out.kv("claw", &json!({"center": f.center + 1, "attachments": one_based(&f.attachments), "cells": f.cells}));
                }
                for f in find_biclaws(&g, &c, side).map_err(|e| e.to_string())? {
                    out.kv(
                        "biclaw",
                        &json!({"centers": [f.centers.0 + 1, f.centers.1 + 1], "cells": f.cells}),
                    );
                }
            }
            Ok(Verdict::from_bool(good))
        }
        Command::Report { graph, sig } => {
            let g = inp.graph(graph)?;
            let lg = inp.labelled(g, sig.as_deref(), 3)?;
            let g = lg.graph();
            let r = classify(g);
            out.kv("in_class", &r.in_class_g);
            out.kv("face_sizes", &g.face_sizes());
            for s in special_subgraphs(g) {
                out.kv(
                    "special_subgraph",
                    &json!({"triangle": s.triangle_face, "pentagon": s.five_face, "vertices": one_based(&s.vertices)}),
                );
            }
            for s in all_strings(g) {
                out.kv("string", &json!({"face": s.face, "vertices": one_based(&s.path)}));
            }
            out.kv("long_strings", &check_string_lemma(g).len());
            out.kv("light_faces", &light_faces(g));
            out.kv("bad_3_faces", &bad_3_faces(&lg));
            match outer_cycle(g) {
                None => out.kv("boundary", "not a cycle"),
                Some(u) => {
                    out.kv("boundary", &cycle_1b(&u));
                    if u.len() <= 13 {
                        match classify_bad_cycle(g, &u) {
                            Ok(shape) => out.kv("boundary_shape", &shape),
                            Err(_) => out.kv("boundary_good", &true),
                        }
                    }
                }
            }
            match lemma_predicates(&lg) {
                Ok(p) => {
                    for (q, v) in &p.values {
                        out.kv(q.name(), v);
                    }
                }
                Err(e) => out.kv("predicates", &e.to_string()),
            }
            Ok(Verdict::True)
        }
        Command::Solve { graph, sig, k, precolor } => {
            let g = inp.graph(graph)?;
            let n = g.n_vertices();
            let lg = inp.labelled(g, sig.as_deref(), *k)?;
            let pre = match precolor {
                Some(p) => inp.coloring(p, n, *k)?,
                None => Coloring::empty(n, *k),
            };
            let r = solve(&lg, &pre).map_err(|e| e.to_string())?;
            out.kv("found", &r.found());
            out.kv("nodes", &r.nodes);
            if let Some(w) = &r.witness {
                let colours: Vec<u8> = (0..n).map(|v| w.get(v).map_or(0, |c| c + 1)).collect();
                out.kv("coloring", &colours);
            }
            Ok(Verdict::from_bool(r.found()))
        }
        Command::Dpcheck { graph, k, jobs } => {
            let g = inp.graph(graph)?;
            let r = is_dp_k_colorable(Arc::new(g), *k, *jobs).map_err(|e| e.to_string())?;
            out.kv("k", k);
            out.kv("classes", &r.classes);
            out.kv("colorable", &r.colorable);
            if let Some(w) = &r.witness {
                out.kv("witness", &write_sig(w));
            }
            Ok(Verdict::from_bool(r.colorable))
        }
        Command::Verify { graph, jobs } => {
            let g = inp.graph(graph)?;
            match verify_theorem(g, *jobs) {
                Ok(r) => {
                    out.kv("classes", &r.classes);
                    out.kv("colorable", &r.colorable);
                    out.kv("failing_class", &r.failing_class);
                    Ok(Verdict::from_bool(r.colorable))
                }
                Err(ColoringError::NotInClassG(cs)) => {
                    let cs: Vec<Vec<usize>> = cs.iter().map(|c| one_based(c)).collect();
                    Err(format!("not in the class; forbidden cycles {cs:?}"))
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Command::Extend { graph, precolor, sig } => {
            let g = inp.graph(graph)?;
            let n = g.n_vertices();
            let lg = inp.labelled(g, sig.as_deref(), 3)?;
            let phi = inp.coloring(precolor, n, 3)?;
            let r = extend_boundary(&lg, &phi).map_err(|e| e.to_string())?;
            out.kv("found", &r.found());
            if let Some(w) = &r.witness {
                let colours: Vec<u8> = (0..n).map(|v| w.get(v).map_or(0, |c| c + 1)).collect();
                out.kv("coloring", &colours);
            }
            Ok(Verdict::from_bool(r.found()))
        }
        Command::Discharge { graph, sig } => {
            let g = inp.graph(graph)?;
            let lg = inp.labelled(g, sig.as_deref(), 3)?;
            let led = discharge(&lg).map_err(|e| e.to_string())?;
            if out.json {
                for e in led.elements() {
                    out.kv("element", &json!({"id": e.to_string(), "initial": led.ch(e), "final": led.ch_star(e)}));
                }
                for t in &led.transfers {
                    out.kv(
                        "transfer",
                        &json!({"rule": t.rule, "from": t.from.to_string(), "to": t.to.to_string(), "amount": t.amount}),
                    );
                }
                out.kv("totals", &json!({"initial": led.total_initial(), "final": led.total_final()}));
            } else {
                out.text(&led.to_text());
            }
            Ok(Verdict::from_bool(led.total_final().is_zero()))
        }
        Command::Audit { graph, sig, precolor } => {
            let g = inp.graph(graph)?;
            let n = g.n_vertices();
            let lg = inp.labelled(g, sig.as_deref(), 3)?;
            let led = discharge(&lg).map_err(|e| e.to_string())?;
            let report = audit_claims(&lg, &led).map_err(|e| e.to_string())?;
            for c in report.violations() {
                out.kv(
                    "violation",
                    &format!("{:?} {}: {} {} {}", c.bound, c.subject, c.lhs, c.relation, c.rhs),
                );
            }
            out.kv("checks", &report.checks.len());
            out.kv("violations", &report.violations().count());
            match &report.predicates {
                Some(p) => {
                    let failed: Vec<&str> = p.failed().iter().map(|q| q.name()).collect();
                    out.kv("failed_predicates", &failed);
                }
                None => out.kv("predicates", &report.predicate_error),
            }
            let unexplained = report.unexplained().len();
            out.kv("unexplained", &unexplained);
            let phi = match precolor {
                Some(p) => Some(inp.coloring(p, n, 3)?),
                None => None,
            };
            let meta_ok = match meta_audit(&lg, phi.as_ref()) {
                Ok(v) => {
                    let failed: Vec<&str> = v.failed.iter().map(|q| q.name()).collect();
                    out.kv("meta_failed", &failed);
                    out.kv("meta_consistent", &v.consistent());
                    if let Some(x) = v.extends {
                        out.kv("extends", &x);
                    }
                    v.consistent()
                }
                Err(DischargeError::PreconditionFailed(why)) => {
                    out.kv("meta", &format!("not applicable: {why}"));
                    true
                }
                Err(e) => return Err(e.to_string()),
            };
            Ok(Verdict::from_bool(unexplained == 0 && meta_ok))
        }
        Command::Surgery { graph, plan, sig, out: dest } => {
            let g = inp.graph(graph)?;
            let n = g.n_vertices();
            let lg = inp.labelled(g, sig.as_deref(), 3)?;
            let text = inp.read(plan)?;
            let plan = parse_plan(&text, n).map_err(|e| format!("{}: {e}", plan.display()))?;
            let res = apply(&lg, &plan).map_err(|e| e.to_string())?;
            let safety = check_safety(&lg, &plan).map_err(|e| e.to_string())?;
            out.kv("condition_a", &safety.condition_a);
            out.kv("condition_b", &safety.condition_b);
            out.kv("new_cycle_lengths", &safety.new_cycle_lengths);
            out.kv("result_in_class", &safety.result_in_class_g);
            let pg = write_pg(res.graph.graph());
            match dest {
                Some(p) => fs::write(p, &pg).map_err(|e| format!("{}: {e}", p.display()))?,
                None => out.kv("result", &pg),
            }
            Ok(Verdict::from_bool(safety.passes()))
        }
        Command::Gen {
            n,
            seed,
            forbidden,
            max_attempts,
            chords,
            pendant_rate,
        } => {
            let cfg = GenConfig {
                target_vertices: *n,
                forbidden_lengths: forbidden.iter().copied().collect(),
                seed: *seed,
                max_attempts: *max_attempts,
                extra_chords: *chords,
                pendant_rate: *pendant_rate,
            };
            let g = generate(&cfg).map_err(|e| e.to_string())?;
            if out.json {
                out.kv("graph", &write_pg(&g));
            } else {
                out.text(&write_pg(&g));
            }
            Ok(Verdict::True)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tmp(name: &str, body: &str) -> PathBuf {
        let dir = std::env::temp_dir().join(format!("dpcolor-cli-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let p = dir.join(name);
        fs::write(&p, body).unwrap();
        p
    }

    fn go(args: &[&str]) -> (i32, String) {
        let mut buf = Vec::new();
        let mut all = vec!["dpcolor"];
        all.extend_from_slice(args);
        let r = run(all, &mut buf);
        (r.verdict.exit_code(), String::from_utf8(buf).unwrap())
    }

    #[test]
    fn member_and_verify() {
        let h = tmp("h.pg", &write_pg(&crate::fixtures::special_h()));
        let c4 = tmp("c4.pg", &write_pg(&crate::fixtures::c4()));
        assert_eq!(go(&["member", h.to_str().unwrap()]).0, 0);
        assert_eq!(go(&["member", c4.to_str().unwrap()]).0, 1);
        assert_eq!(go(&["verify", c4.to_str().unwrap()]).0, 2);
        assert_eq!(go(&["dpcheck", "--k", "3", c4.to_str().unwrap()]).0, 0);
        assert_eq!(go(&["dpcheck", "--k", "2", c4.to_str().unwrap()]).0, 1);
    }

    #[test]
    fn discharge_totals_line() {
        let h = tmp("h2.pg", &write_pg(&crate::fixtures::special_h()));
        let (code, text) = go(&["discharge", h.to_str().unwrap()]);
        assert_eq!(code, 0);
        assert!(text.contains("totals: 0/1 0/1"), "{text}");
    }

    #[test]
    fn bad_input_exits_2() {
        let bad = tmp("bad.pg", "vertices: 2\n1: 9\n");
        assert_eq!(go(&["info", bad.to_str().unwrap()]).0, 2);
        assert_eq!(go(&["info", "/nonexistent/x.pg"]).0, 2);
        assert_eq!(go(&["frobnicate"]).0, 2);
    }

    #[test]
    fn json_lines_parse() {
        let h = tmp("h3.pg", &write_pg(&crate::fixtures::special_h()));
        let (_, text) = go(&["--json", "info", h.to_str().unwrap()]);
        for line in text.lines() {
            serde_json::from_str::<serde_json::Value>(line).unwrap();
        }
    }
}
