//! Text formats. All vertex ids in files are 1-based.
//!
//! `.pg`:
//! ```text
//! vertices: 3
//! 1: 2 3        # clockwise neighbours of vertex 1
//! 2: 3 1
//! 3: 1 2
//! outer: 2 1    # the face walked by dart 2 -> 1 is the outer face
//! ```
//!
//! `.sig`: lines `u v WORD`, the permutation carried by the arc `u -> v` as a
//! 1-based image word. Unlisted edges carry the identity on `min -> max`.
//!
//! Precolouring: lines `v c` with 1-based colours.
//!
//! Surgery plans: `delete v ...`, then at most one of `identify u w` or
//! `insert u w WORD [after a c]`.

use std::fmt::Write as _;

use thiserror::Error;

use crate::coloring::Coloring;
use crate::labelling::{LabelledGraph, LabellingError};
use crate::perm::Perm;
use crate::plane_graph::{GraphError, PlaneGraph, VertexId};
use crate::surgery::{Action, Slot, SurgeryPlan};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Labelling(#[from] LabellingError),
}

fn parse_err(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        msg: msg.into(),
    }
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn vertex(tok: &str, n: usize, line: usize) -> Result<VertexId, FormatError> {
    let v: usize = tok
        .parse()
        .map_err(|_| parse_err(line, format!("`{tok}` is not a vertex id")))?;
    if v == 0 || v > n {
        return Err(parse_err(line, format!("vertex {v} out of range 1..={n}")));
    }
    Ok(v - 1)
}

pub fn write_pg(g: &PlaneGraph) -> String {
    let mut s = format!("vertices: {}\n", g.n_vertices());
    for v in g.vertices() {
        let _ = write!(s, "{}:", v + 1);
        for &w in g.rotation(v) {
            let _ = write!(s, " {}", w + 1);
        }
        s.push('\n');
    }
    let d = g.dart_info(g.outer_dart());
    let _ = writeln!(s, "outer: {} {}", d.tail + 1, d.head + 1);
    s
}

pub fn parse_pg(text: &str) -> Result<PlaneGraph, FormatError> {
    let mut n: Option<usize> = None;
    let mut rotation: Vec<Option<Vec<VertexId>>> = Vec::new();
    let mut outer = None;
    for (line, l) in content_lines(text) {
        let (key, rest) = l
            .split_once(':')
            .ok_or_else(|| parse_err(line, "expected `key: values`"))?;
        let key = key.trim();
        let toks: Vec<&str> = rest.split_whitespace().collect();
        match key {
            "vertices" => {
                if n.is_some() {
                    return Err(parse_err(line, "duplicate `vertices` line"));
                }
                let count: usize = match toks.as_slice() {
                    [t] => t.parse().map_err(|_| parse_err(line, "bad vertex count"))?,
                    _ => return Err(parse_err(line, "expected one vertex count")),
                };
                n = Some(count);
                rotation = vec![None; count];
            }
            "outer" => {
                let n = n.ok_or_else(|| parse_err(line, "`outer` before `vertices`"))?;
                match toks.as_slice() {
                    [a, b] => outer = Some((vertex(a, n, line)?, vertex(b, n, line)?)),
                    _ => return Err(parse_err(line, "expected `outer: i j`")),
                }
            }
            _ => {
                let n = n.ok_or_else(|| parse_err(line, "vertex line before `vertices`"))?;
                let v = vertex(key, n, line)?;
                if rotation[v].is_some() {
                    return Err(parse_err(line, format!("vertex {} listed twice", v + 1)));
                }
                let nbrs = toks
                    .iter()
                    .map(|t| vertex(t, n, line))
                    .collect::<Result<Vec<_>, _>>()?;
                rotation[v] = Some(nbrs);
            }
        }
    }
    let n = n.ok_or_else(|| parse_err(0, "missing `vertices` line"))?;
    let rotation: Vec<Vec<VertexId>> = rotation.into_iter().map(Option::unwrap_or_default).collect();
    match outer {
        Some(o) => Ok(PlaneGraph::build(rotation, o)?),
        None if n == 1 && rotation[0].is_empty() => Ok(PlaneGraph::path(1)),
        None => Err(parse_err(0, "missing `outer` line")),
    }
}

/// Every edge with its stored orientation, so the output round-trips
/// exactly.
pub fn write_sig(lg: &LabelledGraph) -> String {
    let mut s = String::new();
    for a in lg.arcs() {
        let _ = writeln!(s, "{} {} {}", a.tail + 1, a.head + 1, a.perm);
    }
    s
}

pub fn parse_sig(g: &PlaneGraph, k: usize, text: &str) -> Result<LabelledGraph, FormatError> {
    let n = g.n_vertices();
    let mut arcs = Vec::new();
    for (line, l) in content_lines(text) {
        let toks: Vec<&str> = l.split_whitespace().collect();
        let [u, v, w] = toks.as_slice() else {
            return Err(parse_err(line, "expected `u v WORD`"));
        };
        let (u, v) = (vertex(u, n, line)?, vertex(v, n, line)?);
        let perm: Perm = w.parse().map_err(|e| parse_err(line, format!("{e}")))?;
        if perm.k() != k {
            return Err(parse_err(line, format!("word `{w}` is not over [{k}]")));
        }
        arcs.push((u, v, perm));
    }
    Ok(LabelledGraph::from_arcs(g.clone(), k, arcs)?)
}

pub fn write_precoloring(c: &Coloring) -> String {
    let mut s = String::new();
    for (v, col) in c.assigned() {
        let _ = writeln!(s, "{} {}", v + 1, col + 1);
    }
    s
}

pub fn parse_precoloring(text: &str, n: usize, k: usize) -> Result<Coloring, FormatError> {
    let mut c = Coloring::empty(n, k);
    for (line, l) in content_lines(text) {
        let toks: Vec<&str> = l.split_whitespace().collect();
        let [v, col] = toks.as_slice() else {
            return Err(parse_err(line, "expected `v c`"));
        };
        let v = vertex(v, n, line)?;
        let col: usize = col
            .parse()
            .map_err(|_| parse_err(line, format!("`{col}` is not a colour")))?;
        if col == 0 || col > k {
            return Err(parse_err(line, format!("colour {col} out of range 1..={k}")));
        }
        if c.get(v).is_some() {
            return Err(parse_err(line, format!("vertex {} coloured twice", v + 1)));
        }
        c.set(v, (col - 1) as u8);
    }
    Ok(c)
}

pub fn parse_plan(text: &str, n: usize) -> Result<SurgeryPlan, FormatError> {
    let mut plan = SurgeryPlan::default();
    let mut have_action = false;
    for (line, l) in content_lines(text) {
        let toks: Vec<&str> = l.split_whitespace().collect();
        let (cmd, args) = toks.split_first().expect("non-empty line");
        let vs = |ts: &[&str]| ts.iter().map(|t| vertex(t, n, line)).collect::<Result<Vec<_>, _>>();
        let action = match *cmd {
            "delete" => {
                plan.deletions.extend(vs(args)?);
                continue;
            }
            "identify" => match vs(args)?.as_slice() {
                [u, w] => Action::Identify(*u, *w),
                _ => return Err(parse_err(line, "expected `identify u w`")),
            },
            "insert" => {
                let (ends, rest) = args.split_at(args.len().min(2));
                let [u, w] = vs(ends)?[..] else {
                    return Err(parse_err(line, "expected `insert u w WORD [after a c]`"));
                };
                let (word, rest) = rest
                    .split_first()
                    .ok_or_else(|| parse_err(line, "missing permutation word"))?;
                let perm: Perm = word.parse().map_err(|e| parse_err(line, format!("{e}")))?;
                let slot = match rest {
                    [] => Slot::Auto,
                    ["after", a, c] => Slot::After {
                        at_u: vertex(a, n, line)?,
                        at_w: vertex(c, n, line)?,
                    },
                    _ => return Err(parse_err(line, "expected `after a c`")),
                };
                Action::InsertArc { u, w, perm, slot }
            }
            other => return Err(parse_err(line, format!("unknown plan command `{other}`"))),
        };
        if have_action {
            return Err(parse_err(line, "a plan has at most one identify/insert"));
        }
        have_action = true;
        plan.action = action;
    }
    Ok(plan)
}

pub fn write_plan(plan: &SurgeryPlan) -> String {
    let mut s = String::new();
    if !plan.deletions.is_empty() {
        s.push_str("delete");
        for v in &plan.deletions {
            let _ = write!(s, " {}", v + 1);
        }
        s.push('\n');
    }
    match &plan.action {
        Action::None => {}
        Action::Identify(u, w) => {
            let _ = writeln!(s, "identify {} {}", u + 1, w + 1);
        }
        Action::InsertArc { u, w, perm, slot } => {
            let _ = write!(s, "insert {} {} {}", u + 1, w + 1, perm);
            if let Slot::After { at_u, at_w } = slot {
                let _ = write!(s, " after {} {}", at_u + 1, at_w + 1);
            }
            s.push('\n');
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn pg_round_trip_on_corpus() {
        for (name, g) in fixtures::corpus() {
            let text = write_pg(&g);
            let back = parse_pg(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(back, g, "{name}");
        }
    }

    #[test]
    fn pg_comments_and_whitespace() {
        let text = "# triangle\nvertices:3\n 1 : 2 3 \n2: 3 1\n3: 1 2 # last\nouter: 2 1\n";
        let g = parse_pg(text).unwrap();
        assert_eq!(g.face_sizes(), vec![3, 3]);
    }

    #[test]
    fn pg_errors_name_the_line() {
        let text = "vertices: 3\n1: 2 3\n2: 3 1 1\n3: 1 2\nouter: 2 1\n";
        assert!(matches!(parse_pg(text), Err(FormatError::Graph(_))));
        let text = "vertices: 2\n1: 5\n";
        assert!(matches!(parse_pg(text), Err(FormatError::Parse { line: 2, .. })));
    }

    #[test]
    fn sig_round_trip() {
        let g = fixtures::k4();
        let lg = parse_sig(&g, 3, "1 2 231\n4 3 213\n").unwrap();
        assert_eq!(lg.perm_along(0, 1).to_string(), "231");
        assert_eq!(lg.perm_along(2, 3).to_string(), "213");
        assert!(lg.perm_along(1, 2).is_identity());
        let again = parse_sig(&g, 3, &write_sig(&lg)).unwrap();
        assert_eq!(again, lg);
    }

    #[test]
    fn plan_round_trip() {
        let text = "delete 3 4\ninsert 1 2 213 after 5 6\n";
        let plan = parse_plan(text, 6).unwrap();
        assert_eq!(plan.deletions, vec![2, 3]);
        assert_eq!(write_plan(&plan), text);
        assert!(parse_plan("identify 1 2\nidentify 3 4\n", 4).is_err());
    }
}
