//! Plane graphs as rotation systems.
//!
//! A [`PlaneGraph`] stores, for every vertex, its neighbours in clockwise
//! order. Each neighbour entry is a dart `v -> w`; darts are numbered
//! vertex by vertex in rotation order. Faces are the orbits of
//! `next(d) = rot_cw(twin(d))`, i.e. leave the head of `d` by the dart that
//! follows the twin of `d` clockwise. Face 0 is always the outer face `f0`,
//! the walk containing the designated outer dart.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::cycles::{enumerate_cycles, Cycle};

pub type VertexId = usize;
pub type DartId = usize;
pub type EdgeId = usize;
pub type FaceId = usize;

/// The outer face always has id 0.
pub const OUTER_FACE: FaceId = 0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dart {
    pub tail: VertexId,
    pub head: VertexId,
    pub twin: DartId,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("inconsistent rotation: {0}")]
    InconsistentRotation(String),
    #[error("loop or multi-edge at vertex {0}")]
    LoopOrMultiEdge(VertexId),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("rotation system is not planar (a component has Euler characteristic {0})")]
    NotPlanar(i64),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("no dart {0} -> {1}")]
    UnknownDart(VertexId, VertexId),
    #[error("bad slot: {0}")]
    BadSlot(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    rotation: Vec<Vec<VertexId>>,
    first_dart: Vec<DartId>,
    darts: Vec<Dart>,
    dart_edge: Vec<EdgeId>,
    edges: Vec<(VertexId, VertexId)>,
    face_of: Vec<FaceId>,
    faces: Vec<Vec<DartId>>,
    outer_dart: DartId,
}

impl PlaneGraph {
    /// Builds a plane graph from clockwise neighbour lists and the dart
    /// `outer.0 -> outer.1` whose face walk is the outer face.
    ///
    /// Disconnected inputs are accepted as long as every component is a
    /// sphere embedding; callers that need connectivity check
    /// [`PlaneGraph::is_connected`] or use [`PlaneGraph::build_connected`].
    pub fn build(
        rotation: Vec<Vec<VertexId>>,
        outer: (VertexId, VertexId),
    ) -> Result<Self, GraphError> {
        let n = rotation.len();
        let mut first_dart = Vec::with_capacity(n);
        let mut darts = Vec::new();
        let mut index: HashMap<(VertexId, VertexId), DartId> = HashMap::new();
        for (v, nbrs) in rotation.iter().enumerate() {
            first_dart.push(darts.len());
            for &w in nbrs {
                if w >= n {
                    return Err(GraphError::UnknownVertex(w));
                }
                if w == v {
                    return Err(GraphError::LoopOrMultiEdge(v));
                }
                if index.insert((v, w), darts.len()).is_some() {
                    return Err(GraphError::InconsistentRotation(format!(
                        "dart {v} -> {w} listed twice"
                    )));
                }
                darts.push(Dart {
                    tail: v,
                    head: w,
                    twin: usize::MAX,
                });
            }
        }
        for d in 0..darts.len() {
            let Dart { tail, head, .. } = darts[d];
            match index.get(&(head, tail)) {
                Some(&t) => darts[d].twin = t,
                None => {
                    return Err(GraphError::InconsistentRotation(format!(
                        "dart {tail} -> {head} has no twin"
                    )))
                }
            }
        }
        let outer_dart = *index
            .get(&outer)
            .ok_or(GraphError::UnknownDart(outer.0, outer.1))?;

        let mut dart_edge = vec![0; darts.len()];
        let mut edges = Vec::with_capacity(darts.len() / 2);
        for d in 0..darts.len() {
            let Dart { tail, head, twin } = darts[d];
            if tail < head {
                dart_edge[d] = edges.len();
                dart_edge[twin] = edges.len();
                edges.push((tail, head));
            }
        }

        let mut g = PlaneGraph {
            rotation,
            first_dart,
            darts,
            dart_edge,
            edges,
            face_of: Vec::new(),
            faces: Vec::new(),
            outer_dart,
        };
        g.trace_faces();
        g.check_euler()?;
        Ok(g)
    }

    pub fn build_connected(
        rotation: Vec<Vec<VertexId>>,
        outer: (VertexId, VertexId),
    ) -> Result<Self, GraphError> {
        let g = Self::build(rotation, outer)?;
        if !g.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(g)
    }

    /// The cycle `0 1 .. n-1`. The face walked by the dart `0 -> 1` is the
    /// bounded one; the outer dart is `1 -> 0`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let rotation = (0..n).map(|i| vec![(i + 1) % n, (i + n - 1) % n]).collect();
        Self::build(rotation, (1, 0)).expect("cycle rotation is valid")
    }

    /// The path `0 1 .. n-1` (a single vertex when `n == 1`).
    pub fn path(n: usize) -> Self {
        assert!(n >= 1);
        let rotation: Vec<Vec<VertexId>> = (0..n)
            .map(|i| {
                let mut r = Vec::new();
                if i + 1 < n {
                    r.push(i + 1);
                }
                if i > 0 {
                    r.push(i - 1);
                }
                r
            })
            .collect();
        if n == 1 {
            // no darts: represent the outer face as empty
            return PlaneGraph {
                rotation,
                first_dart: vec![0],
                darts: Vec::new(),
                dart_edge: Vec::new(),
                edges: Vec::new(),
                face_of: Vec::new(),
                faces: vec![Vec::new()],
                outer_dart: usize::MAX,
            };
        }
        Self::build(rotation, (0, 1)).expect("path rotation is valid")
    }

    fn trace_faces(&mut self) {
        let m = self.darts.len();
        self.face_of = vec![usize::MAX; m];
        self.faces.clear();
        let starts = std::iter::once(self.outer_dart).chain(0..m);
        for start in starts {
            if self.face_of[start] != usize::MAX {
                continue;
            }
            let id = self.faces.len();
            let mut walk = Vec::new();
            let mut d = start;
            loop {
                self.face_of[d] = id;
                walk.push(d);
                d = self.next_in_face(d);
                if d == start {
                    break;
                }
            }
            self.faces.push(walk);
        }
    }

    fn check_euler(&self) -> Result<(), GraphError> {
        let comp = self.components();
        let ncomp = comp.iter().copied().max().map_or(0, |c| c + 1);
        let mut v = vec![0i64; ncomp];
        let mut e = vec![0i64; ncomp];
        let mut f = vec![0i64; ncomp];
        for x in 0..self.n_vertices() {
            if self.degree(x) > 0 {
                v[comp[x]] += 1;
            }
        }
        for &(a, _) in &self.edges {
            e[comp[a]] += 1;
        }
        for walk in &self.faces {
            f[comp[self.darts[walk[0]].tail]] += 1;
        }
        for c in 0..ncomp {
            if e[c] == 0 {
                continue;
            }
            let chi = v[c] - e[c] + f[c];
            if chi != 2 {
                return Err(GraphError::NotPlanar(chi));
            }
        }
        Ok(())
    }

    fn components(&self) -> Vec<usize> {
        let n = self.n_vertices();
        let mut comp = vec![usize::MAX; n];
        let mut next = 0;
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for &y in &self.rotation[x] {
                    if comp[y] == usize::MAX {
                        comp[y] = next;
                        stack.push(y);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    /// Same embedding, different outer face.
    pub fn with_outer(&self, u: VertexId, v: VertexId) -> Result<Self, GraphError> {
        Self::build(self.rotation.clone(), (u, v))
    }

    pub fn n_vertices(&self) -> usize {
        self.rotation.len()
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn n_darts(&self) -> usize {
        self.darts.len()
    }

    pub fn n_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.n_vertices()
    }

    pub fn rotation(&self, v: VertexId) -> &[VertexId] {
        &self.rotation[v]
    }

    pub fn rotation_lists(&self) -> &[Vec<VertexId>] {
        &self.rotation
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotation[v].len()
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v < self.n_vertices() {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(v))
        }
    }

    pub fn dart_info(&self, d: DartId) -> Dart {
        self.darts[d]
    }

    pub fn darts_from(&self, v: VertexId) -> std::ops::Range<DartId> {
        let s = self.first_dart[v];
        s..s + self.rotation[v].len()
    }

    pub fn dart(&self, u: VertexId, v: VertexId) -> Option<DartId> {
        let pos = self.rotation.get(u)?.iter().position(|&w| w == v)?;
        Some(self.first_dart[u] + pos)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.dart(u, v).is_some()
    }

    pub fn twin(&self, d: DartId) -> DartId {
        self.darts[d].twin
    }

    pub fn rot_cw(&self, d: DartId) -> DartId {
        let t = self.darts[d].tail;
        let s = self.first_dart[t];
        s + (d - s + 1) % self.rotation[t].len()
    }

    pub fn rot_ccw(&self, d: DartId) -> DartId {
        let t = self.darts[d].tail;
        let s = self.first_dart[t];
        let deg = self.rotation[t].len();
        s + (d - s + deg - 1) % deg
    }

    pub fn next_in_face(&self, d: DartId) -> DartId {
        self.rot_cw(self.darts[d].twin)
    }

    pub fn edge_of(&self, d: DartId) -> EdgeId {
        self.dart_edge[d]
    }

    /// Edges as `(min, max)` vertex pairs, indexed by [`EdgeId`].
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn edge_id(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.dart(u, v).map(|d| self.dart_edge[d])
    }

    pub fn outer_dart(&self) -> DartId {
        self.outer_dart
    }

    pub fn face_of(&self, d: DartId) -> FaceId {
        self.face_of[d]
    }

    pub fn face_walk(&self, f: FaceId) -> &[DartId] {
        &self.faces[f]
    }

    /// Vertices met along the walk of `f` (with repetitions at cut vertices).
    pub fn face_vertices(&self, f: FaceId) -> Vec<VertexId> {
        self.faces[f].iter().map(|&d| self.darts[d].tail).collect()
    }

    pub fn face_size(&self, f: FaceId) -> usize {
        self.faces[f].len()
    }

    pub fn face_sizes(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    /// True when the face walk visits every vertex at most once.
    pub fn face_is_cycle(&self, f: FaceId) -> bool {
        let vs = self.face_vertices(f);
        let set: HashSet<_> = vs.iter().collect();
        vs.len() >= 3 && set.len() == vs.len()
    }

    /// Faces at the corners of `v`, one entry per corner, in clockwise order.
    pub fn faces_at(&self, v: VertexId) -> Vec<FaceId> {
        self.darts_from(v)
            .map(|d| self.face_of[self.darts[d].twin])
            .collect()
    }

    pub fn face_sizes_at(&self, v: VertexId) -> Result<Vec<usize>, GraphError> {
        self.check_vertex(v)?;
        let mut s: Vec<usize> = self
            .faces_at(v)
            .into_iter()
            .map(|f| self.face_size(f))
            .collect();
        s.sort_unstable();
        Ok(s)
    }

    pub fn is_external(&self, v: VertexId) -> Result<bool, GraphError> {
        self.check_vertex(v)?;
        Ok(self.external_mask()[v])
    }

    /// `mask[v]` is true when `v` lies on the outer face walk.
    pub fn external_mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.n_vertices()];
        for &d in &self.faces[OUTER_FACE] {
            mask[self.darts[d].tail] = true;
        }
        if self.darts.is_empty() && self.n_vertices() == 1 {
            mask[0] = true;
        }
        mask
    }

    pub fn is_connected(&self) -> bool {
        self.n_vertices() == 0 || self.components().iter().all(|&c| c == 0)
    }

    fn connected_without(&self, removed: VertexId) -> bool {
        let n = self.n_vertices();
        let Some(start) = (0..n).find(|&v| v != removed) else {
            return true;
        };
        let mut seen = vec![false; n];
        seen[removed] = true;
        seen[start] = true;
        let mut stack = vec![start];
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &y in &self.rotation[x] {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == n - 1
    }

    pub fn cut_vertices(&self) -> Vec<VertexId> {
        self.vertices()
            .filter(|&v| !self.connected_without(v))
            .collect()
    }

    pub fn is_two_connected(&self) -> bool {
        self.n_vertices() >= 3 && self.is_connected() && self.cut_vertices().is_empty()
    }

    /// `|E| - |V| + 1` for a connected graph.
    pub fn cycle_space_dimension(&self) -> usize {
        let comps = self.components().iter().copied().max().map_or(0, |c| c + 1);
        self.n_edges() + comps - self.n_vertices()
    }

    /// Inserts a path with `internal` new vertices from `a` to `b` inside the
    /// face that contains the dart `face_dart.0 -> face_dart.1`. Both ends
    /// must occur exactly once on that face walk. New vertices get ids
    /// `n, n+1, ..` in path order from `a`; they are returned.
    pub fn insert_path(
        &self,
        face_dart: (VertexId, VertexId),
        a: VertexId,
        b: VertexId,
        internal: usize,
    ) -> Result<(PlaneGraph, Vec<VertexId>), GraphError> {
        let d = self
            .dart(face_dart.0, face_dart.1)
            .ok_or(GraphError::UnknownDart(face_dart.0, face_dart.1))?;
        let f = self.face_of[d];
        let ca = self.unique_corner(f, a)?;
        let cb = self.unique_corner(f, b)?;
        self.insert_path_at_corners(ca, cb, internal)
    }

    /// The dart entering `v` along the walk of `f`, if `v` occurs exactly once.
    pub fn unique_corner(&self, f: FaceId, v: VertexId) -> Result<DartId, GraphError> {
        self.check_vertex(v)?;
        let entering: Vec<DartId> = self.faces[f]
            .iter()
            .copied()
            .filter(|&d| self.darts[d].head == v)
            .collect();
        match entering.as_slice() {
            [d] => Ok(*d),
            [] => Err(GraphError::BadSlot(format!("vertex {v} is not on face {f}"))),
            _ => Err(GraphError::BadSlot(format!(
                "vertex {v} occurs more than once on face {f}"
            ))),
        }
    }

    /// Inserts a path between the corners following the entering darts
    /// `corner_a` and `corner_b` (both on the same face).
    pub fn insert_path_at_corners(
        &self,
        corner_a: DartId,
        corner_b: DartId,
        internal: usize,
    ) -> Result<(PlaneGraph, Vec<VertexId>), GraphError> {
        if self.face_of[corner_a] != self.face_of[corner_b] {
            return Err(GraphError::BadSlot("corners lie on different faces".into()));
        }
        let Dart { tail: pa, head: a, .. } = self.darts[corner_a];
        let Dart { tail: pb, head: b, .. } = self.darts[corner_b];
        if a == b {
            return Err(GraphError::LoopOrMultiEdge(a));
        }
        if internal == 0 && self.has_edge(a, b) {
            return Err(GraphError::LoopOrMultiEdge(a));
        }
        let n = self.n_vertices();
        let new: Vec<VertexId> = (n..n + internal).collect();
        let mut chain = vec![a];
        chain.extend(&new);
        chain.push(b);
        let mut rotation = self.rotation.clone();
        for _ in 0..internal {
            rotation.push(Vec::new());
        }
        let insert_after = |rot: &mut Vec<VertexId>, after: VertexId, x: VertexId| {
            let pos = rot.iter().position(|&w| w == after).expect("corner neighbour");
            rot.insert(pos + 1, x);
        };
        insert_after(&mut rotation[a], pa, chain[1]);
        insert_after(&mut rotation[b], pb, chain[chain.len() - 2]);
        for i in 1..chain.len() - 1 {
            rotation[chain[i]] = vec![chain[i + 1], chain[i - 1]];
        }
        let outer = self.darts[self.outer_dart];
        let g = PlaneGraph::build(rotation, (outer.tail, outer.head))?;
        Ok((g, new))
    }

    /// Hangs a new path of `len` vertices off `a`, inside the face that
    /// contains the dart `face_dart.0 -> face_dart.1`.
    pub fn attach_path(
        &self,
        face_dart: (VertexId, VertexId),
        a: VertexId,
        len: usize,
    ) -> Result<(PlaneGraph, Vec<VertexId>), GraphError> {
        let d = self
            .dart(face_dart.0, face_dart.1)
            .ok_or(GraphError::UnknownDart(face_dart.0, face_dart.1))?;
        let corner = self.unique_corner(self.face_of[d], a)?;
        let pa = self.darts[corner].tail;
        let n = self.n_vertices();
        let new: Vec<VertexId> = (n..n + len).collect();
        let mut rotation = self.rotation.clone();
        if let Some(&first) = new.first() {
            let pos = rotation[a].iter().position(|&w| w == pa).expect("corner");
            rotation[a].insert(pos + 1, first);
        }
        for (i, &v) in new.iter().enumerate() {
            let prev = if i == 0 { a } else { new[i - 1] };
            let mut r = Vec::with_capacity(2);
            if let Some(&next) = new.get(i + 1) {
                r.push(next);
            }
            r.push(prev);
            rotation.push(r);
            debug_assert_eq!(rotation.len() - 1, v);
        }
        let outer = self.darts[self.outer_dart];
        let g = PlaneGraph::build(rotation, (outer.tail, outer.head))?;
        Ok((g, new))
    }

    /// The sub-embedding on the given edges: rotations are restricted to the
    /// kept edges and vertex ids are unchanged (unused vertices are
    /// isolated).
    pub fn sub_embedding(&self, keep: &[(VertexId, VertexId)]) -> Result<PlaneGraph, GraphError> {
        let mut kept: HashSet<(VertexId, VertexId)> = HashSet::new();
        for &(u, v) in keep {
            if !self.has_edge(u, v) {
                return Err(GraphError::UnknownDart(u, v));
            }
            kept.insert((u, v));
            kept.insert((v, u));
        }
        let rotation: Vec<Vec<VertexId>> = self
            .rotation
            .iter()
            .enumerate()
            .map(|(v, r)| r.iter().copied().filter(|&w| kept.contains(&(v, w))).collect())
            .collect();
        let (u, v) = *keep.first().ok_or(GraphError::Disconnected)?;
        PlaneGraph::build(rotation, (u, v))
    }

    /// Orientation-preserving canonical code: equal codes iff the two plane
    /// graphs are isomorphic by a map preserving rotations and the outer
    /// face.
    pub fn canonical_code(&self) -> Vec<usize> {
        let mut best: Option<Vec<usize>> = None;
        for root in self.faces[OUTER_FACE].iter().copied() {
            let code = self.code_from(root);
            if best.as_ref().is_none_or(|b| code < *b) {
                best = Some(code);
            }
        }
        let mut code = best.unwrap_or_default();
        let isolated = self.vertices().filter(|&v| self.degree(v) == 0).count();
        code.push(usize::MAX);
        code.push(isolated);
        code
    }

    fn code_from(&self, root: DartId) -> Vec<usize> {
        let n = self.n_vertices();
        let mut label = vec![usize::MAX; n];
        let mut entry = vec![usize::MAX; n];
        let r = self.darts[root].tail;
        label[r] = 0;
        entry[r] = root;
        let mut next = 1;
        let mut queue = VecDeque::from([r]);
        let mut code = Vec::new();
        while let Some(x) = queue.pop_front() {
            code.push(self.degree(x));
            let mut d = entry[x];
            for _ in 0..self.degree(x) {
                let y = self.darts[d].head;
                if label[y] == usize::MAX {
                    label[y] = next;
                    next += 1;
                    entry[y] = self.darts[d].twin;
                    queue.push_back(y);
                }
                code.push(label[y]);
                d = self.rot_cw(d);
            }
        }
        code
    }

    pub fn to_pg(&self) -> String {
        crate::format::write_pg(self)
    }
}

impl fmt::Display for PlaneGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pg())
    }
}

/// Membership in the class of connected plane graphs without 4-, 7- and
/// 9-cycles. Simplicity is guaranteed by construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphClassReport {
    pub is_simple: bool,
    pub is_connected: bool,
    pub is_two_connected: bool,
    pub forbidden_cycles_found: Vec<Cycle>,
    pub in_class_g: bool,
}

pub const FORBIDDEN_LENGTHS: [usize; 3] = [4, 7, 9];

pub fn classify(g: &PlaneGraph) -> GraphClassReport {
    let forbidden: Vec<Cycle> = enumerate_cycles(g, 9)
        .into_iter()
        .filter(|c| FORBIDDEN_LENGTHS.contains(&c.len()))
        .collect();
    let is_connected = g.is_connected();
    GraphClassReport {
        is_simple: true,
        is_connected,
        is_two_connected: g.is_two_connected(),
        in_class_g: is_connected && forbidden.is_empty(),
        forbidden_cycles_found: forbidden,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn triangle_has_two_triangular_faces() {
        let g = PlaneGraph::cycle(3);
        assert_eq!(g.n_faces(), 2);
        assert_eq!(g.face_sizes(), vec![3, 3]);
    }

    #[test]
    fn special_subgraph_faces() {
        let h = fixtures::special_h();
        let mut sizes = h.face_sizes();
        assert_eq!(sizes[0], 6, "outer face is the 6-walk");
        sizes.sort();
        assert_eq!(sizes, vec![3, 5, 6]);
        assert_eq!(h.degree(0), 2);
        assert_eq!(h.degree(1), 3);
        assert!(h.vertices().all(|v| h.is_external(v).unwrap()));
    }

    #[test]
    fn dart_listed_twice_is_rejected() {
        let rot = vec![vec![1, 2, 1], vec![0, 2], vec![0, 1]];
        assert!(matches!(
            PlaneGraph::build(rot, (0, 1)),
            Err(GraphError::InconsistentRotation(_))
        ));
    }

    #[test]
    fn missing_twin_and_loop_are_rejected() {
        let rot = vec![vec![1, 2], vec![2], vec![0, 1]];
        assert!(matches!(
            PlaneGraph::build(rot, (0, 1)),
            Err(GraphError::InconsistentRotation(_))
        ));
        let rot = vec![vec![0, 1], vec![0]];
        assert_eq!(
            PlaneGraph::build(rot, (0, 1)),
            Err(GraphError::LoopOrMultiEdge(0))
        );
    }

    #[test]
    fn non_planar_rotation_is_rejected() {
        let planar = vec![vec![1, 2, 3], vec![0, 3, 2], vec![3, 0, 1], vec![1, 0, 2]];
        assert_eq!(PlaneGraph::build(planar, (0, 1)).unwrap().n_faces(), 4);
        // reversing one rotation of K4 gives a toroidal embedding
        let torus = vec![vec![1, 3, 2], vec![0, 3, 2], vec![3, 0, 1], vec![1, 0, 2]];
        assert!(matches!(
            PlaneGraph::build(torus, (0, 1)),
            Err(GraphError::NotPlanar(_))
        ));
    }

    #[test]
    fn disconnected_when_required() {
        let rot = vec![vec![1], vec![0], vec![3], vec![2]];
        assert!(PlaneGraph::build(rot.clone(), (0, 1)).is_ok());
        assert_eq!(
            PlaneGraph::build_connected(rot, (0, 1)),
            Err(GraphError::Disconnected)
        );
    }

    #[test]
    fn wheel_hub_is_internal() {
        let w = fixtures::wheel(5);
        assert!(!w.is_external(5).unwrap());
        assert_eq!(w.degree(5), 5);
        assert!((0..5).all(|v| w.is_external(v).unwrap()));
        assert_eq!(w.is_external(9), Err(GraphError::UnknownVertex(9)));
    }

    #[test]
    fn euler_and_handshake_on_fixtures() {
        for (name, g) in fixtures::corpus() {
            let total: usize = g.face_sizes().iter().sum();
            assert_eq!(total, 2 * g.n_edges(), "{name}");
            if g.is_connected() {
                let chi = g.n_vertices() as i64 - g.n_edges() as i64 + g.n_faces() as i64;
                assert_eq!(chi, 2, "{name}");
            }
        }
    }

    #[test]
    fn faces_at_match_degree_without_cut_vertices() {
        for (name, g) in fixtures::corpus() {
            let cuts: HashSet<_> = g.cut_vertices().into_iter().collect();
            for v in g.vertices().filter(|v| !cuts.contains(v)) {
                assert_eq!(g.faces_at(v).len(), g.degree(v), "{name} vertex {v}");
            }
        }
    }

    #[test]
    fn insert_path_splits_a_face() {
        let c = PlaneGraph::cycle(6);
        let (g, new) = c.insert_path((0, 1), 0, 3, 1).unwrap();
        assert_eq!(new, vec![6]);
        let mut sizes = g.face_sizes();
        assert_eq!(sizes[0], 6);
        sizes.sort();
        assert_eq!(sizes, vec![5, 5, 6]);
        assert!(matches!(
            c.insert_path((0, 1), 0, 1, 0),
            Err(GraphError::LoopOrMultiEdge(_))
        ));
    }

    #[test]
    fn canonical_code_ignores_labels() {
        let a = fixtures::special_h();
        let perm = [3, 0, 5, 1, 4, 2];
        let rot: Vec<Vec<usize>> = {
            let mut r = vec![Vec::new(); 6];
            for v in 0..6 {
                r[perm[v]] = a.rotation(v).iter().map(|&w| perm[w]).collect();
            }
            r
        };
        let od = a.dart_info(a.outer_dart());
        let b = PlaneGraph::build(rot, (perm[od.tail], perm[od.head])).unwrap();
        assert_eq!(a.canonical_code(), b.canonical_code());
        let c = a.with_outer(1, 5).unwrap();
        assert_ne!(a.canonical_code(), c.canonical_code());
    }
}
