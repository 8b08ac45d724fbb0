//! Detectors for claws, biclaws, good and bad cycles, special subgraphs,
//! strings, light faces and bad 3-faces, and the structural predicates a
//! minimal non-extendable configuration would satisfy.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::cycles::{check_splitting_lemma, chords, enumerate_cycles, outer_cycle, sides, Cycle, CycleError};
use crate::labelling::LabelledGraph;
use crate::plane_graph::{FaceId, GraphError, PlaneGraph, VertexId, OUTER_FACE};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error(transparent)]
    Cycle(#[from] CycleError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("cycle of length {0} is longer than 13")]
    CycleTooLong(usize),
    #[error("the cycle is good")]
    CycleIsGood,
    #[error("the outer face boundary is not a cycle")]
    BoundaryNotCycle,
    #[error("the outer face boundary is not a good cycle")]
    BoundaryNotGood,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Interior,
    Exterior,
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClawFinding {
    pub center: VertexId,
    pub attachments: [VertexId; 3],
    /// Sorted cell lengths.
    pub cells: [usize; 3],
    pub side: Side,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BiclawFinding {
    pub centers: (VertexId, VertexId),
    pub attachments: ([VertexId; 2], [VertexId; 2]),
    /// Sorted cell lengths.
    pub cells: [usize; 4],
    pub side: Side,
}

/// Vertices off `c` on the requested side, each tagged with its side.
fn candidates(g: &PlaneGraph, c: &Cycle, side: Side) -> Result<Vec<(VertexId, Side)>, StructureError> {
    let s = sides(g, c)?;
    let mut out = Vec::new();
    if side != Side::Exterior {
        out.extend(s.interior.iter().map(|&v| (v, Side::Interior)));
    }
    if side != Side::Interior {
        out.extend(s.exterior.iter().map(|&v| (v, Side::Exterior)));
    }
    out.sort_unstable();
    Ok(out)
}

/// Lengths of the faces of `C + extra` that touch one of `centers`.
fn cells(g: &PlaneGraph, c: &Cycle, extra: &[(VertexId, VertexId)], centers: &[VertexId]) -> Vec<usize> {
    let mut keep: Vec<(VertexId, VertexId)> = c.edges().collect();
    keep.extend_from_slice(extra);
    let sub = g.sub_embedding(&keep).expect("sub-embedding of existing edges");
    let faces: BTreeSet<FaceId> = centers.iter().flat_map(|&x| sub.faces_at(x)).collect();
    let mut sizes: Vec<usize> = faces.into_iter().map(|f| sub.face_size(f)).collect();
    sizes.sort_unstable();
    sizes
}

fn cycle_neighbours(g: &PlaneGraph, c: &Cycle, v: VertexId) -> Vec<VertexId> {
    let mut out: Vec<VertexId> = g.rotation(v).iter().copied().filter(|&w| c.contains(w)).collect();
    out.sort_unstable();
    out
}

fn pairs<T: Copy>(xs: &[T]) -> impl Iterator<Item = [T; 2]> + '_ {
    (0..xs.len()).flat_map(move |i| (i + 1..xs.len()).map(move |j| [xs[i], xs[j]]))
}

pub fn find_claws(g: &PlaneGraph, c: &Cycle, side: Side) -> Result<Vec<ClawFinding>, StructureError> {
    let mut out = Vec::new();
    for (v, s) in candidates(g, c, side)? {
        let att = cycle_neighbours(g, c, v);
        for i in 0..att.len() {
            for j in i + 1..att.len() {
                for k in j + 1..att.len() {
                    let a = [att[i], att[j], att[k]];
                    let spokes: Vec<_> = a.iter().map(|&x| (v, x)).collect();
                    let cl = cells(g, c, &spokes, &[v]);
                    out.push(ClawFinding {
                        center: v,
                        attachments: a,
                        cells: [cl[0], cl[1], cl[2]],
                        side: s,
                    });
                }
            }
        }
    }
    Ok(out)
}

pub fn find_biclaws(g: &PlaneGraph, c: &Cycle, side: Side) -> Result<Vec<BiclawFinding>, StructureError> {
    let cand = candidates(g, c, side)?;
    let side_of: std::collections::HashMap<VertexId, Side> = cand.iter().copied().collect();
    let mut out = Vec::new();
    for &(u1, s) in &cand {
        let a1 = cycle_neighbours(g, c, u1);
        if a1.len() < 2 {
            continue;
        }
        for &u2 in g.rotation(u1) {
            if u2 <= u1 || !side_of.contains_key(&u2) {
                continue;
            }
            let a2 = cycle_neighbours(g, c, u2);
            for p1 in pairs(&a1) {
                for p2 in pairs(&a2) {
                    let extra = [(u1, u2), (u1, p1[0]), (u1, p1[1]), (u2, p2[0]), (u2, p2[1])];
                    let cl = cells(g, c, &extra, &[u1, u2]);
                    if cl.len() != 4 {
                        continue;
                    }
                    out.push(BiclawFinding {
                        centers: (u1, u2),
                        attachments: (p1, p2),
                        cells: [cl[0], cl[1], cl[2], cl[3]],
                        side: s,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// A cycle of length at most 13 is good when no claw or biclaw sits on the
/// requested side.
pub fn is_good_cycle_on(g: &PlaneGraph, c: &Cycle, side: Side) -> Result<bool, StructureError> {
    c.validate(g)?;
    if c.len() > 13 {
        return Err(StructureError::CycleTooLong(c.len()));
    }
    Ok(find_claws(g, c, side)?.is_empty() && find_biclaws(g, c, side)?.is_empty())
}

/// Goodness judged on the interior side (the side away from the outer face).
pub fn is_good_cycle(g: &PlaneGraph, c: &Cycle) -> Result<bool, StructureError> {
    is_good_cycle_on(g, c, Side::Interior)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct BadShape {
    pub claws: Vec<[usize; 3]>,
    pub biclaws: Vec<[usize; 4]>,
}

pub fn classify_bad_cycle(g: &PlaneGraph, c: &Cycle) -> Result<BadShape, StructureError> {
    if is_good_cycle(g, c)? {
        return Err(StructureError::CycleIsGood);
    }
    let claws: BTreeSet<[usize; 3]> = find_claws(g, c, Side::Interior)?.into_iter().map(|f| f.cells).collect();
    let biclaws: BTreeSet<[usize; 4]> = find_biclaws(g, c, Side::Interior)?.into_iter().map(|f| f.cells).collect();
    Ok(BadShape {
        claws: claws.into_iter().collect(),
        biclaws: biclaws.into_iter().collect(),
    })
}

/// An adjacent 3-face and 5-face on six distinct vertices: the 5-face is
/// `v2 v3 v4 v5 v6` and the triangle `v2 v1 v6` (index `i` holds `v_{i+1}`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecialSubgraph {
    pub triangle_face: FaceId,
    pub five_face: FaceId,
    pub vertices: [VertexId; 6],
    pub shared_edge: (VertexId, VertexId),
}

impl SpecialSubgraph {
    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }
}

fn bounded_cycle_face(g: &PlaneGraph, f: FaceId, size: usize) -> bool {
    f != OUTER_FACE && g.face_size(f) == size && g.face_is_cycle(f)
}

pub fn special_subgraphs(g: &PlaneGraph) -> Vec<SpecialSubgraph> {
    let mut out = Vec::new();
    for f3 in 0..g.n_faces() {
        if !bounded_cycle_face(g, f3, 3) {
            continue;
        }
        let tri = g.face_vertices(f3);
        let mut seen = BTreeSet::new();
        for &d in g.face_walk(f3) {
            let f5 = g.face_of(g.twin(d));
            if f5 == f3 || !bounded_cycle_face(g, f5, 5) || !seen.insert(f5) {
                continue;
            }
            let five = g.face_vertices(f5);
            let apex: Vec<VertexId> = tri.iter().copied().filter(|v| !five.contains(v)).collect();
            let [v1] = apex[..] else {
                continue;
            };
            let dart = g.dart_info(d);
            let i = (0..5)
                .find(|&i| {
                    let (a, b) = (five[i], five[(i + 1) % 5]);
                    (a, b) == (dart.tail, dart.head) || (b, a) == (dart.tail, dart.head)
                })
                .expect("shared edge on the 5-face");
            let at = |j: usize| five[(i + j) % 5];
            out.push(SpecialSubgraph {
                triangle_face: f3,
                five_face: f5,
                vertices: [v1, at(1), at(2), at(3), at(4), at(0)],
                shared_edge: (at(1), at(0)),
            });
        }
    }
    out
}

/// `mask[f]` is true for faces belonging to some special subgraph.
pub fn special_face_mask(g: &PlaneGraph, specials: &[SpecialSubgraph]) -> Vec<bool> {
    let mut mask = vec![false; g.n_faces()];
    for s in specials {
        mask[s.triangle_face] = true;
        mask[s.five_face] = true;
    }
    mask
}

/// `h[v]`: the number of special subgraphs containing `v`.
pub fn h_counts(g: &PlaneGraph, specials: &[SpecialSubgraph]) -> Vec<usize> {
    let mut h = vec![0; g.n_vertices()];
    for s in specials {
        for &v in &s.vertices {
            h[v] += 1;
        }
    }
    h
}

pub fn is_internal_3_vertex(g: &PlaneGraph, ext: &[bool], v: VertexId) -> bool {
    !ext[v] && g.degree(v) == 3
}

/// Bounded faces whose every vertex is an internal 3-vertex.
pub fn light_faces(g: &PlaneGraph) -> Vec<FaceId> {
    let ext = g.external_mask();
    (0..g.n_faces())
        .filter(|&f| f != OUTER_FACE)
        .filter(|&f| g.face_vertices(f).iter().all(|&v| is_internal_3_vertex(g, &ext, v)))
        .collect()
}

/// Positive, light, non-special 3-faces.
pub fn bad_3_faces(lg: &LabelledGraph) -> Vec<FaceId> {
    let g = lg.graph();
    let specials = special_subgraphs(g);
    let special = special_face_mask(g, &specials);
    light_faces(g)
        .into_iter()
        .filter(|&f| bounded_cycle_face(g, f, 3) && !special[f])
        .filter(|&f| {
            let c = Cycle::new(g.face_vertices(f));
            lg.is_positive(&c).expect("face boundary is a cycle")
        })
        .collect()
}

/// `mask[v]` is true for vertices of bad 3-faces.
pub fn bad_vertex_mask(lg: &LabelledGraph) -> Vec<bool> {
    let g = lg.graph();
    let mut mask = vec![false; g.n_vertices()];
    for f in bad_3_faces(lg) {
        for v in g.face_vertices(f) {
            mask[v] = true;
        }
    }
    mask
}

/// A maximal run of 2-vertices along a face walk, with the walk vertices
/// on either side of it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StringFinding {
    pub face: FaceId,
    pub path: Vec<VertexId>,
    pub k: usize,
    pub anchors: (VertexId, VertexId),
}

pub fn strings(g: &PlaneGraph, f: FaceId) -> Vec<StringFinding> {
    let walk = g.face_vertices(f);
    let n = walk.len();
    let two = |i: usize| g.degree(walk[i % n]) == 2;
    let Some(start) = (0..n).find(|&i| !two(i)) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let pos = start + i;
        if two(pos) {
            let mut path = Vec::new();
            let mut j = pos;
            while two(j) {
                path.push(walk[j % n]);
                j += 1;
            }
            out.push(StringFinding {
                face: f,
                k: path.len(),
                anchors: (walk[(pos + n - 1) % n], walk[j % n]),
                path,
            });
            i = j - start;
        } else {
            i += 1;
        }
    }
    out
}

pub fn all_strings(g: &PlaneGraph) -> Vec<StringFinding> {
    (0..g.n_faces()).flat_map(|f| strings(g, f)).collect()
}

/// Strings that are too long for their face: a bounded `k`-face with
/// `3 <= k <= 12` carrying a `t`-string with `t >= (k - 1) / 2`.
pub fn check_string_lemma(g: &PlaneGraph) -> Vec<StringFinding> {
    (0..g.n_faces())
        .filter(|&f| f != OUTER_FACE && (3..=12).contains(&g.face_size(f)))
        .flat_map(|f| strings(g, f))
        .filter(|s| s.k >= (g.face_size(s.face) - 1) / 2)
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Predicate {
    BoundaryChordless,
    NoSeparatingGoodCycle,
    TwoConnected,
    InternalMinDegree,
    SplittingPaths,
    NoLongStrings,
    NoNegativeLightTriangle,
    NoLightPentagon,
    BadPathRule,
    /// Not a reducibility conclusion: the global fact that some boundary
    /// vertex has degree at least 3, without which a cycle alone would do.
    ExternalMajorVertex,
}

impl Predicate {
    pub const ALL: [Predicate; 10] = [
        Predicate::BoundaryChordless,
        Predicate::NoSeparatingGoodCycle,
        Predicate::TwoConnected,
        Predicate::InternalMinDegree,
        Predicate::SplittingPaths,
        Predicate::NoLongStrings,
        Predicate::NoNegativeLightTriangle,
        Predicate::NoLightPentagon,
        Predicate::BadPathRule,
        Predicate::ExternalMajorVertex,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::BoundaryChordless => "boundary_chordless",
            Predicate::NoSeparatingGoodCycle => "no_separating_good_cycle",
            Predicate::TwoConnected => "two_connected",
            Predicate::InternalMinDegree => "internal_min_degree",
            Predicate::SplittingPaths => "splitting_paths",
            Predicate::NoLongStrings => "no_long_strings",
            Predicate::NoNegativeLightTriangle => "no_negative_light_triangle",
            Predicate::NoLightPentagon => "no_light_pentagon",
            Predicate::BadPathRule => "bad_path_rule",
            Predicate::ExternalMajorVertex => "external_major_vertex",
        }
    }
}

/// Each structural conclusion evaluated independently on a labelled graph
/// whose outer boundary is a good cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaPredicates {
    pub values: Vec<(Predicate, bool)>,
}

impl LemmaPredicates {
    pub fn get(&self, p: Predicate) -> bool {
        self.values.iter().find(|(q, _)| *q == p).map(|&(_, v)| v).expect("every predicate evaluated")
    }

    pub fn all_hold(&self) -> bool {
        self.values.iter().all(|&(_, v)| v)
    }

    pub fn failed(&self) -> Vec<Predicate> {
        self.values.iter().filter(|(_, v)| !v).map(|&(p, _)| p).collect()
    }
}

pub fn lemma_predicates(lg: &LabelledGraph) -> Result<LemmaPredicates, StructureError> {
    let g = lg.graph();
    let u = outer_cycle(g).ok_or(StructureError::BoundaryNotCycle)?;
    if !is_good_cycle(g, &u)? {
        return Err(StructureError::BoundaryNotGood);
    }
    let values = Predicate::ALL
        .iter()
        .map(|&p| {
            let v = match p {
                Predicate::BoundaryChordless => chords(g, &u)?.is_empty(),
                Predicate::NoSeparatingGoodCycle => no_separating_good_cycle(g)?,
                Predicate::TwoConnected => g.is_two_connected(),
                Predicate::InternalMinDegree => internal_min_degree(g),
                Predicate::SplittingPaths => check_splitting_lemma(g, &u)?.holds(),
                Predicate::NoLongStrings => check_string_lemma(g).is_empty(),
                Predicate::NoNegativeLightTriangle => light_faces(g)
                    .into_iter()
                    .filter(|&f| bounded_cycle_face(g, f, 3))
                    .all(|f| lg.is_positive(&Cycle::new(g.face_vertices(f))).expect("face cycle")),
                Predicate::NoLightPentagon => light_faces(g).into_iter().all(|f| g.face_size(f) != 5),
                Predicate::BadPathRule => bad_path_violations(lg).is_empty(),
                Predicate::ExternalMajorVertex => has_external_major_vertex(g),
            };
            Ok((p, v))
        })
        .collect::<Result<Vec<_>, StructureError>>()?;
    Ok(LemmaPredicates { values })
}

/// Every vertex off the outer face has degree at least 3.
pub fn internal_min_degree(g: &PlaneGraph) -> bool {
    let ext = g.external_mask();
    g.vertices().all(|v| ext[v] || g.degree(v) >= 3)
}

pub fn has_external_major_vertex(g: &PlaneGraph) -> bool {
    let ext = g.external_mask();
    g.vertices().any(|v| ext[v] && g.degree(v) >= 3)
}

fn no_separating_good_cycle(g: &PlaneGraph) -> Result<bool, StructureError> {
    for c in enumerate_cycles(g, 13) {
        let s = sides(g, &c)?;
        if !s.interior.is_empty() && !s.exterior.is_empty() && is_good_cycle(g, &c)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Paths `u v x y z` with `uv` on a bad 3-face and `x`, `y` internal
/// 3-vertices, where `z` is an internal 3-vertex or a neighbour of `x`
/// whose triangle `x y z` is not a special face; also bad vertices whose
/// outer neighbour is bad.
pub fn bad_path_violations(lg: &LabelledGraph) -> Vec<Vec<VertexId>> {
    let g = lg.graph();
    let ext = g.external_mask();
    let specials = special_subgraphs(g);
    let special = special_face_mask(g, &specials);
    let bad = bad_vertex_mask(lg);
    let int3 = |v: VertexId| is_internal_3_vertex(g, &ext, v);
    let special_triangle = |a: VertexId, b: VertexId, c: VertexId| {
        (0..g.n_faces()).any(|f| {
            special[f] && g.face_size(f) == 3 && {
                let vs = g.face_vertices(f);
                vs.contains(&a) && vs.contains(&b) && vs.contains(&c)
            }
        })
    };
    let mut out = Vec::new();
    for f in bad_3_faces(lg) {
        let tri = g.face_vertices(f);
        for &u in &tri {
            for &v in &tri {
                if u == v {
                    continue;
                }
                for &x in g.rotation(v) {
                    if tri.contains(&x) {
                        continue;
                    }
                    if bad[x] {
                        out.push(vec![v, x]);
                    }
                    if !int3(x) {
                        continue;
                    }
                    for &y in g.rotation(x) {
                        if y == v || tri.contains(&y) || !int3(y) {
                            continue;
                        }
                        for &z in g.rotation(y) {
                            if z == x || z == v || tri.contains(&z) {
                                continue;
                            }
                            let hit = int3(z) || (g.has_edge(x, z) && !special_triangle(x, y, z));
                            if hit {
                                out.push(vec![u, v, x, y, z]);
                            }
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}
