//! Short cycles: enumeration, sides, chords and splitting paths.

use std::collections::HashSet;

use serde::Serialize;
use thiserror::Error;

use crate::plane_graph::{FaceId, PlaneGraph, VertexId, OUTER_FACE};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycleError {
    #[error("not a cycle: {0}")]
    NotACycle(String),
}

/// A simple cycle in canonical form: the least rotation of the
/// lexicographically smaller orientation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Cycle {
    vertices: Vec<VertexId>,
}

impl Cycle {
    pub fn new(vertices: Vec<VertexId>) -> Self {
        Cycle {
            vertices: canonical(vertices),
        }
    }

    /// Validates `vertices` as a cycle of `g` before canonicalising.
    pub fn in_graph(g: &PlaneGraph, vertices: Vec<VertexId>) -> Result<Self, CycleError> {
        let c = Cycle::new(vertices);
        c.validate(g)?;
        Ok(c)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    /// Consecutive pairs, closing pair last.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    pub fn position(&self, v: VertexId) -> Option<usize> {
        self.vertices.iter().position(|&x| x == v)
    }

    pub fn validate(&self, g: &PlaneGraph) -> Result<(), CycleError> {
        let vs = &self.vertices;
        if vs.len() < 3 {
            return Err(CycleError::NotACycle(format!("length {} < 3", vs.len())));
        }
        if let Some(&v) = vs.iter().find(|&&v| v >= g.n_vertices()) {
            return Err(CycleError::NotACycle(format!("unknown vertex {v}")));
        }
        let distinct: HashSet<_> = vs.iter().collect();
        if distinct.len() != vs.len() {
            return Err(CycleError::NotACycle("repeated vertex".into()));
        }
        if let Some((u, v)) = self.edges().find(|&(u, v)| !g.has_edge(u, v)) {
            return Err(CycleError::NotACycle(format!("{u} and {v} are not adjacent")));
        }
        Ok(())
    }
}

fn canonical(mut vs: Vec<VertexId>) -> Vec<VertexId> {
    let n = vs.len();
    if n < 3 {
        return vs;
    }
    let (pos, _) = vs.iter().enumerate().min_by_key(|&(_, &v)| v).expect("nonempty");
    vs.rotate_left(pos);
    if vs[n - 1] < vs[1] {
        vs[1..].reverse();
    }
    vs
}

/// All simple cycles of length at most `max_len`, each once, sorted by
/// length and then lexicographically.
pub fn enumerate_cycles(g: &PlaneGraph, max_len: usize) -> Vec<Cycle> {
    let n = g.n_vertices();
    let mut out = Vec::new();
    let mut on_path = vec![false; n];
    let mut path = Vec::with_capacity(max_len);
    for s in 0..n {
        path.push(s);
        on_path[s] = true;
        extend_cycles(g, s, max_len, &mut path, &mut on_path, &mut out);
        on_path[s] = false;
        path.pop();
    }
    out.sort_by(|a: &Cycle, b: &Cycle| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

fn extend_cycles(
    g: &PlaneGraph,
    start: VertexId,
    max_len: usize,
    path: &mut Vec<VertexId>,
    on_path: &mut [bool],
    out: &mut Vec<Cycle>,
) {
    let last = *path.last().expect("path starts at start");
    for &w in g.rotation(last) {
        if w == start && path.len() >= 3 && path[1] < last {
            out.push(Cycle {
                vertices: path.clone(),
            });
        }
        if w > start && !on_path[w] && path.len() < max_len {
            path.push(w);
            on_path[w] = true;
            extend_cycles(g, start, max_len, path, on_path, out);
            on_path[w] = false;
            path.pop();
        }
    }
}

/// Lengths `L <= max_len` of simple paths from `a` to `b` (bit `L` set).
/// Vertices in `avoid` are not used as inner vertices.
pub fn path_lengths_between(
    g: &PlaneGraph,
    a: VertexId,
    b: VertexId,
    max_len: usize,
    avoid: &[bool],
) -> u64 {
    fn rec(
        g: &PlaneGraph,
        x: VertexId,
        b: VertexId,
        len: usize,
        max_len: usize,
        seen: &mut [bool],
        avoid: &[bool],
        mask: &mut u64,
    ) {
        for &w in g.rotation(x) {
            if w == b {
                *mask |= 1 << (len + 1);
                continue;
            }
            if len + 1 < max_len && !seen[w] && !avoid.get(w).copied().unwrap_or(false) {
                seen[w] = true;
                rec(g, w, b, len + 1, max_len, seen, avoid, mask);
                seen[w] = false;
            }
        }
    }
    assert!(max_len < 64);
    let mut mask = 0;
    if a == b || max_len == 0 {
        return mask;
    }
    let mut seen = vec![false; g.n_vertices()];
    seen[a] = true;
    rec(g, a, b, 0, max_len, &mut seen, avoid, &mut mask);
    mask
}

/// Vertices strictly on each side of a cycle. The interior is the side
/// whose region does not contain the outer face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sides {
    pub interior: Vec<VertexId>,
    pub exterior: Vec<VertexId>,
    pub interior_faces: Vec<FaceId>,
    pub exterior_faces: Vec<FaceId>,
}

pub fn sides(g: &PlaneGraph, c: &Cycle) -> Result<Sides, CycleError> {
    c.validate(g)?;
    let on_cycle: HashSet<(VertexId, VertexId)> = c
        .edges()
        .flat_map(|(u, v)| [(u, v), (v, u)])
        .collect();
    let flood = |seeds: Vec<FaceId>| -> Vec<bool> {
        let mut seen = vec![false; g.n_faces()];
        let mut stack = Vec::new();
        for f in seeds {
            if !seen[f] {
                seen[f] = true;
                stack.push(f);
            }
        }
        while let Some(f) = stack.pop() {
            for &d in g.face_walk(f) {
                let dart = g.dart_info(d);
                if on_cycle.contains(&(dart.tail, dart.head)) {
                    continue;
                }
                let nf = g.face_of(dart.twin);
                if !seen[nf] {
                    seen[nf] = true;
                    stack.push(nf);
                }
            }
        }
        seen
    };
    let forward: Vec<FaceId> = c
        .edges()
        .map(|(u, v)| g.face_of(g.dart(u, v).expect("validated")))
        .collect();
    let region = flood(forward);
    let region_contains_outer = region[OUTER_FACE];
    let inside = |f: FaceId| region[f] != region_contains_outer;

    let mut interior = Vec::new();
    let mut exterior = Vec::new();
    for v in g.vertices() {
        if c.contains(v) {
            continue;
        }
        match g.faces_at(v).first() {
            Some(&f) if inside(f) => interior.push(v),
            _ => exterior.push(v),
        }
    }
    let (interior_faces, exterior_faces) = (0..g.n_faces()).partition(|&f| inside(f));
    Ok(Sides {
        interior,
        exterior,
        interior_faces,
        exterior_faces,
    })
}

pub fn interior(g: &PlaneGraph, c: &Cycle) -> Result<Vec<VertexId>, CycleError> {
    Ok(sides(g, c)?.interior)
}

pub fn exterior(g: &PlaneGraph, c: &Cycle) -> Result<Vec<VertexId>, CycleError> {
    Ok(sides(g, c)?.exterior)
}

pub fn is_separating(g: &PlaneGraph, c: &Cycle) -> Result<bool, CycleError> {
    let s = sides(g, c)?;
    Ok(!s.interior.is_empty() && !s.exterior.is_empty())
}

/// Edges joining two non-consecutive vertices of `c`, as `(min, max)`.
pub fn chords(g: &PlaneGraph, c: &Cycle) -> Result<Vec<(VertexId, VertexId)>, CycleError> {
    c.validate(g)?;
    let cycle_edges: HashSet<(VertexId, VertexId)> =
        c.edges().map(|(u, v)| (u.min(v), u.max(v))).collect();
    let mut out: Vec<_> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| c.contains(u) && c.contains(v) && !cycle_edges.contains(&(u, v)))
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// A path meeting the reference cycle exactly in its two ends, with the two
/// cycles it cuts the reference cycle into.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitReport {
    pub path: Vec<VertexId>,
    pub cycles: (Cycle, Cycle),
    pub lengths: (usize, usize),
}

impl SplitReport {
    /// Number of edges of the path.
    pub fn path_len(&self) -> usize {
        self.path.len() - 1
    }
}

/// All splitting paths of `c` with `1 <= |P| <= max_len` (chords are the
/// paths of length one).
pub fn splitting_paths(
    g: &PlaneGraph,
    c: &Cycle,
    max_len: usize,
) -> Result<Vec<SplitReport>, CycleError> {
    c.validate(g)?;
    let n = g.n_vertices();
    let mut on_cycle = vec![false; n];
    for &v in c.vertices() {
        on_cycle[v] = true;
    }
    let mut found = Vec::new();
    for &start in c.vertices() {
        let mut path = vec![start];
        let mut seen = vec![false; n];
        seen[start] = true;
        walk_splitting(g, c, &on_cycle, max_len, &mut path, &mut seen, &mut found);
    }
    found.sort();
    let reports = found
        .into_iter()
        .map(|path| split_report(c, path))
        .collect();
    Ok(reports)
}

fn walk_splitting(
    g: &PlaneGraph,
    c: &Cycle,
    on_cycle: &[bool],
    max_len: usize,
    path: &mut Vec<VertexId>,
    seen: &mut [bool],
    found: &mut Vec<Vec<VertexId>>,
) {
    let last = *path.last().expect("nonempty");
    let start = path[0];
    for &w in g.rotation(last) {
        if seen[w] {
            continue;
        }
        if on_cycle[w] {
            let is_cycle_edge = path.len() == 1 && {
                let (i, j) = (c.position(start).unwrap(), c.position(w).unwrap());
                let d = i.abs_diff(j);
                d == 1 || d == c.len() - 1
            };
            if !is_cycle_edge && start < w {
                let mut p = path.clone();
                p.push(w);
                found.push(p);
            }
        } else if path.len() < max_len {
            seen[w] = true;
            path.push(w);
            walk_splitting(g, c, on_cycle, max_len, path, seen, found);
            path.pop();
            seen[w] = false;
        }
    }
}

fn split_report(c: &Cycle, path: Vec<VertexId>) -> SplitReport {
    let n = c.len();
    let i = c.position(path[0]).expect("end on cycle");
    let j = c.position(*path.last().unwrap()).expect("end on cycle");
    let inner = &path[1..path.len() - 1];
    // arc from vs[j] forward to vs[i], then the path back from vs[i] to vs[j]
    let arc = |from: usize, to: usize| -> Vec<VertexId> {
        let mut out = vec![c.vertices()[from]];
        let mut k = from;
        while k != to {
            k = (k + 1) % n;
            out.push(c.vertices()[k]);
        }
        out
    };
    let mut first = arc(j, i);
    first.extend(inner.iter().copied());
    let mut second = arc(i, j);
    second.extend(inner.iter().rev().copied());
    let (a, b) = (Cycle::new(first), Cycle::new(second));
    let lengths = (a.len(), b.len());
    SplitReport {
        path,
        cycles: (a, b),
        lengths,
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SplittingLemmaReport {
    pub satisfied: Vec<SplitReport>,
    pub violated: Vec<SplitReport>,
}

impl SplittingLemmaReport {
    pub fn holds(&self) -> bool {
        self.violated.is_empty()
    }
}

/// For every splitting path with `2 <= |P| <= 5`, checks that one side has
/// length in `[|P| + 1, 2|P| - 1]`.
pub fn check_splitting_lemma(g: &PlaneGraph, u: &Cycle) -> Result<SplittingLemmaReport, CycleError> {
    let mut report = SplittingLemmaReport::default();
    for s in splitting_paths(g, u, 5)? {
        let p = s.path_len();
        if p < 2 {
            continue;
        }
        let ok = |len: usize| (p + 1..=2 * p - 1).contains(&len);
        if ok(s.lengths.0) || ok(s.lengths.1) {
            report.satisfied.push(s);
        } else {
            report.violated.push(s);
        }
    }
    Ok(report)
}

/// The outer face walk as a cycle, when it is one.
pub fn outer_cycle(g: &PlaneGraph) -> Option<Cycle> {
    if !g.face_is_cycle(OUTER_FACE) {
        return None;
    }
    Some(Cycle::new(g.face_vertices(OUTER_FACE)))
}
