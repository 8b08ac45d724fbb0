//! Graph surgery on labelled plane graphs: delete internal vertices, then
//! either identify two survivors across a face or insert a new arc.

use serde::Serialize;
use thiserror::Error;

use crate::cycles::{outer_cycle, path_lengths_between, Cycle};
use crate::labelling::{LabelledGraph, LabellingError};
use crate::perm::Perm;
use crate::plane_graph::{classify, GraphError, PlaneGraph, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurgeryError {
    #[error("identifying {0} and {1} would merge edges")]
    WouldMergeEdges(VertexId, VertexId),
    #[error("operation on {0} and {1} would create a loop")]
    WouldCreateLoop(VertexId, VertexId),
    #[error("vertex {0} is external and cannot be deleted")]
    NotInternal(VertexId),
    #[error("vertex {0} is deleted by the plan but also used by its action")]
    DeletedEndpoint(VertexId),
    #[error("bad slot: {0}")]
    BadSlot(String),
    #[error("the result is disconnected")]
    Disconnected,
    #[error("the outer face boundary is not a cycle")]
    BoundaryNotCycle,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Labelling(#[from] LabellingError),
}

/// Where a new arc goes: the new neighbour is placed right after `at_u` in
/// the clockwise list of `u`, and after `at_w` in that of `w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum Slot {
    /// The unique face containing both ends, each exactly once.
    #[default]
    Auto,
    After { at_u: VertexId, at_w: VertexId },
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum Action {
    #[default]
    None,
    Identify(VertexId, VertexId),
    /// A new arc `u -> w` carrying `perm`.
    InsertArc {
        u: VertexId,
        w: VertexId,
        perm: Perm,
        slot: Slot,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SurgeryPlan {
    pub deletions: Vec<VertexId>,
    pub action: Action,
}

/// The result of a surgery. `map[v]` is the new id of the old vertex `v`,
/// or `None` if it was deleted.
#[derive(Debug, Clone)]
pub struct SurgeryOutcome {
    pub graph: LabelledGraph,
    pub map: Vec<Option<VertexId>>,
}

struct Deleted {
    rotation: Vec<Vec<VertexId>>,
    map: Vec<Option<VertexId>>,
}

fn delete(g: &PlaneGraph, dels: &[VertexId]) -> Result<Deleted, SurgeryError> {
    let ext = g.external_mask();
    let mut gone = vec![false; g.n_vertices()];
    for &v in dels {
        g.check_vertex(v)?;
        if ext[v] {
            return Err(SurgeryError::NotInternal(v));
        }
        gone[v] = true;
    }
    let mut map = vec![None; g.n_vertices()];
    let mut next = 0;
    for v in g.vertices() {
        if !gone[v] {
            map[v] = Some(next);
            next += 1;
        }
    }
    let rotation = g
        .vertices()
        .filter(|&v| !gone[v])
        .map(|v| g.rotation(v).iter().filter_map(|&w| map[w]).collect())
        .collect();
    Ok(Deleted { rotation, map })
}

fn outer_pair(g: &PlaneGraph) -> (VertexId, VertexId) {
    let d = g.dart_info(g.outer_dart());
    (d.tail, d.head)
}

/// Builds the post-deletion graph. Deleted vertices are internal, so the
/// outer dart survives.
fn after_deletion(lg: &LabelledGraph, dels: &[VertexId]) -> Result<(PlaneGraph, Vec<Option<VertexId>>), SurgeryError> {
    let g = lg.graph();
    let Deleted { rotation, map } = delete(g, dels)?;
    let (a, b) = outer_pair(g);
    let h = PlaneGraph::build(rotation, (map[a].expect("external"), map[b].expect("external")))?;
    Ok((h, map))
}

fn survivor(map: &[Option<VertexId>], v: VertexId) -> Result<VertexId, SurgeryError> {
    match map.get(v) {
        None => Err(GraphError::UnknownVertex(v).into()),
        Some(None) => Err(SurgeryError::DeletedEndpoint(v)),
        Some(Some(x)) => Ok(*x),
    }
}

/// The entering darts of the corners of `u` and `w` on the one face that
/// contains both of them exactly once.
fn common_face_corners(h: &PlaneGraph, u: VertexId, w: VertexId) -> Result<(VertexId, VertexId), SurgeryError> {
    let mut found = Vec::new();
    for f in 0..h.n_faces() {
        if let (Ok(cu), Ok(cw)) = (h.unique_corner(f, u), h.unique_corner(f, w)) {
            found.push((h.dart_info(cu).tail, h.dart_info(cw).tail));
        }
    }
    match found.as_slice() {
        [one] => Ok(*one),
        [] => Err(SurgeryError::BadSlot(format!("no face contains {u} and {w} once each"))),
        _ => Err(SurgeryError::BadSlot(format!("several faces contain {u} and {w}"))),
    }
}

/// `rot` rotated to start right after `p`.
fn fan_after(rot: &[VertexId], p: VertexId) -> Vec<VertexId> {
    let i = rot.iter().position(|&x| x == p).expect("corner neighbour");
    rot[i + 1..].iter().chain(&rot[..=i]).copied().collect()
}

pub fn apply(lg: &LabelledGraph, plan: &SurgeryPlan) -> Result<SurgeryOutcome, SurgeryError> {
    let (h, map) = after_deletion(lg, &plan.deletions)?;
    let outer = outer_pair(&h);
    let carry = |map: &[Option<VertexId>]| {
        lg.arcs()
            .iter()
            .filter_map(|a| Some((map[a.tail]?, map[a.head]?, a.perm)))
            .collect::<Vec<_>>()
    };

    let (g, map, extra) = match plan.action {
        Action::None => (h, map, None),
        Action::Identify(u0, w0) => {
            let (u, w) = (survivor(&map, u0)?, survivor(&map, w0)?);
            if u == w || h.has_edge(u, w) {
                return Err(SurgeryError::WouldCreateLoop(u0, w0));
            }
            if h.rotation(u).iter().any(|x| h.rotation(w).contains(x)) {
                return Err(SurgeryError::WouldMergeEdges(u0, w0));
            }
            let (p, q) = common_face_corners(&h, u, w)?;
            let mut rotation: Vec<Vec<VertexId>> = h.rotation_lists().to_vec();
            let mut merged = fan_after(&rotation[u], p);
            merged.extend(fan_after(&rotation[w], q));
            rotation[u] = merged;
            for &x in h.rotation(w) {
                for y in rotation[x].iter_mut() {
                    if *y == w {
                        *y = u;
                    }
                }
            }
            rotation.remove(w);
            let su = if u > w { u - 1 } else { u };
            let shift = |x: VertexId| if x == w { su } else if x > w { x - 1 } else { x };
            for r in rotation.iter_mut() {
                for y in r.iter_mut() {
                    *y = shift(*y);
                }
            }
            let g = PlaneGraph::build(rotation, (shift(outer.0), shift(outer.1)))?;
            let map = map.iter().map(|m| m.map(shift)).collect();
            (g, map, None)
        }
        Action::InsertArc { u: u0, w: w0, perm, slot } => {
            let (u, w) = (survivor(&map, u0)?, survivor(&map, w0)?);
            if u == w {
                return Err(SurgeryError::WouldCreateLoop(u0, w0));
            }
            if h.has_edge(u, w) {
                return Err(SurgeryError::WouldMergeEdges(u0, w0));
            }
            let (p, q) = match slot {
                Slot::Auto => common_face_corners(&h, u, w)?,
                Slot::After { at_u, at_w } => (survivor(&map, at_u)?, survivor(&map, at_w)?),
            };
            let (cu, cw) = match (h.dart(p, u), h.dart(q, w)) {
                (Some(a), Some(b)) => (a, b),
                _ => return Err(SurgeryError::BadSlot("slot vertices are not neighbours of the ends".into())),
            };
            let (g, _) = h
                .insert_path_at_corners(cu, cw, 0)
                .map_err(|e| SurgeryError::BadSlot(e.to_string()))?;
            (g, map, Some((u, w, perm)))
        }
    };
    if !g.is_connected() {
        return Err(SurgeryError::Disconnected);
    }
    let mut arcs = carry(&map);
    arcs.extend(extra);
    let graph = LabelledGraph::from_arcs(g, lg.k(), arcs)?;
    Ok(SurgeryOutcome { graph, map })
}

/// The two conditions a safe reduction must meet, evaluated on the result
/// of [`apply`]: (a) no two boundary vertices are identified and no new
/// edge joins two boundary vertices; (b) no new cycle of length at most 9.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SafetyReport {
    pub condition_a: bool,
    pub condition_b: bool,
    /// Boundary vertex pairs (old ids) that get identified or newly joined.
    pub boundary_conflicts: Vec<(VertexId, VertexId)>,
    /// Lengths of the new short cycles through the merged vertex or new arc.
    pub new_cycle_lengths: Vec<usize>,
    pub result_in_class_g: bool,
}

impl SafetyReport {
    pub fn passes(&self) -> bool {
        self.condition_a && self.condition_b
    }
}

pub fn check_safety(lg: &LabelledGraph, plan: &SurgeryPlan) -> Result<SafetyReport, SurgeryError> {
    let g = lg.graph();
    let boundary: Cycle = outer_cycle(g).ok_or(SurgeryError::BoundaryNotCycle)?;
    let outcome = apply(lg, plan)?;
    let (h, map) = after_deletion(lg, &plan.deletions)?;
    let on_u = |v: VertexId| boundary.contains(v);
    let mut conflicts = Vec::new();
    let lengths = match plan.action {
        Action::None => 0,
        Action::Identify(u, w) => {
            if on_u(u) && on_u(w) {
                conflicts.push((u, w));
            }
            // the merged vertex sees the neighbours of both
            for (a, b) in [(u, w), (w, u)] {
                if on_u(a) {
                    for &x in g.rotation(b) {
                        if map[x].is_some() && on_u(x) && !g.has_edge(a, x) {
                            conflicts.push((a, x));
                        }
                    }
                }
            }
            let (hu, hw) = (map[u].expect("survivor"), map[w].expect("survivor"));
            path_lengths_between(&h, hu, hw, 9, &[])
        }
        Action::InsertArc { u, w, .. } => {
            if on_u(u) && on_u(w) {
                conflicts.push((u, w));
            }
            let (hu, hw) = (map[u].expect("survivor"), map[w].expect("survivor"));
            // a path of length L closes into a cycle of length L + 1
            path_lengths_between(&h, hu, hw, 8, &[]) << 1
        }
    };
    let new_cycle_lengths: Vec<usize> = (0..64).filter(|&l| lengths >> l & 1 == 1).collect();
    Ok(SafetyReport {
        condition_a: conflicts.is_empty(),
        condition_b: new_cycle_lengths.is_empty(),
        boundary_conflicts: conflicts,
        new_cycle_lengths,
        result_in_class_g: classify(outcome.graph.graph()).in_class_g,
    })
}
