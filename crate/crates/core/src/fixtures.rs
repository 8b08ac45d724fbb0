//! Hand-built plane graphs used by tests, examples and the CLI corpus.
//!
//! Every fixture is assembled from a cycle by path insertions inside named
//! faces (a face is named by one of its darts), so the embeddings are exact
//! and need no coordinates.

use crate::plane_graph::{PlaneGraph, VertexId};

fn ins(g: PlaneGraph, face: (VertexId, VertexId), a: VertexId, b: VertexId, k: usize) -> (PlaneGraph, Vec<VertexId>) {
    g.insert_path(face, a, b, k).expect("fixture construction")
}

fn hang(g: PlaneGraph, face: (VertexId, VertexId), a: VertexId, k: usize) -> (PlaneGraph, Vec<VertexId>) {
    g.attach_path(face, a, k).expect("fixture construction")
}

pub fn k3() -> PlaneGraph {
    PlaneGraph::cycle(3)
}

pub fn c4() -> PlaneGraph {
    PlaneGraph::cycle(4)
}

pub fn k4() -> PlaneGraph {
    let rot = vec![vec![1, 2, 3], vec![0, 3, 2], vec![3, 0, 1], vec![1, 0, 2]];
    PlaneGraph::build(rot, (1, 2)).expect("K4 rotation")
}

/// The union of a 5-face and an adjacent 3-face: the 6-cycle `0..5` with
/// chord `1-5`. Vertex `i` plays the role of `v_{i+1}`; the outer face is
/// the 6-walk.
pub fn special_h() -> PlaneGraph {
    ins(PlaneGraph::cycle(6), (0, 1), 1, 5, 0).0
}

/// Rim `0..n-1`, hub `n`; the outer face is the rim.
pub fn wheel(n: usize) -> PlaneGraph {
    let (mut g, hub) = ins(PlaneGraph::cycle(n), (0, 1), 0, 1, 1);
    let hub = hub[0];
    for i in 2..n {
        g = ins(g, (i - 1, i), hub, i, 0).0;
    }
    g
}

/// Triangular prism: outer triangle `0 1 2`, inner triangle `3 4 5`, spokes
/// `i - i+3`.
pub fn prism() -> PlaneGraph {
    let (g, _) = ins(PlaneGraph::cycle(3), (0, 1), 0, 1, 2);
    let (g, _) = ins(g, (1, 2), 4, 2, 1);
    ins(g, (2, 0), 3, 5, 0).0
}

pub fn dodecahedron() -> PlaneGraph {
    let g = PlaneGraph::cycle(5);
    let (g, _) = ins(g, (0, 1), 0, 1, 3); // b0 b1 b2 = 5 6 7
    let (g, _) = ins(g, (1, 2), 7, 2, 2); // b3 b4 = 8 9
    let (g, _) = ins(g, (2, 3), 9, 3, 2); // b5 b6 = 10 11
    let (g, _) = ins(g, (3, 4), 11, 4, 2); // b7 b8 = 12 13
    let (g, _) = ins(g, (4, 0), 13, 5, 1); // b9 = 14
    let (g, _) = ins(g, (6, 7), 6, 8, 2); // c0 c1 = 15 16
    let (g, _) = ins(g, (8, 9), 16, 10, 1); // c2 = 17
    let (g, _) = ins(g, (10, 11), 17, 12, 1); // c3 = 18
    let (g, _) = ins(g, (12, 13), 18, 14, 1); // c4 = 19
    ins(g, (14, 5), 19, 15, 0).0
}

/// A cycle of length `a0 + a1 + a2` with one inner vertex (id = cycle
/// length) joined to cycle vertices `0`, `a0`, `a0 + a1`. Its cells have
/// lengths `a_i + 2`.
pub fn claw(arcs: [usize; 3]) -> PlaneGraph {
    let len: usize = arcs.iter().sum();
    let (g, c) = ins(PlaneGraph::cycle(len), (0, 1), 0, arcs[0], 1);
    ins(g, (arcs[0], arcs[0] + 1), c[0], arcs[0] + arcs[1], 0).0
}

/// The three 12-cycle claws and the 13-cycle claw: `(3,5,10)`, `(5,5,8)`,
/// `(6,6,6)` and `(3,5,11)`.
pub fn claw_3_5_10() -> PlaneGraph {
    claw([1, 3, 8])
}

pub fn claw_5_5_8() -> PlaneGraph {
    claw([3, 3, 6])
}

pub fn claw_6_6_6() -> PlaneGraph {
    claw([4, 4, 4])
}

pub fn claw_3_5_11() -> PlaneGraph {
    claw([1, 3, 9])
}

/// 13-cycle with adjacent inner vertices `13` (on `0`, `3`) and `14` (on
/// `5`, `8`): cells 5, 5, 5, 8.
pub fn biclaw_5_5_5_8() -> PlaneGraph {
    let (g, u) = ins(PlaneGraph::cycle(13), (0, 1), 0, 8, 2);
    let (g, _) = ins(g, (0, 1), u[0], 3, 0);
    ins(g, (3, 4), u[1], 5, 0).0
}

/// 12-cycle with a 3-edge path from `0` to `4` through the inside.
pub fn c12_with_three_path() -> PlaneGraph {
    ins(PlaneGraph::cycle(12), (0, 1), 0, 4, 2).0
}

/// The 5-face `0..4` whose vertex `0` is a 2-vertex shared with the outer
/// 5-face `1 0 4 6 5`; a 6-face closes the other side.
pub fn pentagon_with_outer_two_vertex() -> PlaneGraph {
    ins(PlaneGraph::cycle(5), (1, 0), 4, 1, 2).0
}

/// A bounded `k`-face `0..k-1` carrying exactly one string `1..t` (anchored
/// at `0` and `t+1`). Every other vertex of the face gets a pendant edge in
/// the outer face, so the face is the only cycle.
pub fn string_face(k: usize, t: usize) -> PlaneGraph {
    assert!(k >= 3 && t + 2 <= k);
    let mut g = PlaneGraph::cycle(k);
    for j in std::iter::once(0).chain(t + 1..k) {
        g = hang(g, (1, 0), j, 1).0;
    }
    g
}

/// Vertex roles in the light 5-face fixture.
#[derive(Debug, Clone)]
pub struct LightPentagon {
    pub graph: PlaneGraph,
    /// `v1..v5` around the light face.
    pub ring: [VertexId; 5],
    /// The remaining neighbour `v_i'` of each ring vertex.
    pub outer: [VertexId; 5],
}

const SPOKE: usize = 5;

/// A 12-cycle boundary with a light 5-face inside, joined to the boundary by
/// five 5-edge spokes landing on boundary vertices 0, 2, 5, 7, 10.
pub fn light_pentagon() -> LightPentagon {
    let land = [0, 2, 5, 7, 10];
    let g = PlaneGraph::cycle(12);
    // c0 ~ v1' v1 v2 v2' ~ c2
    let (g, p) = ins(g, (0, 1), land[0], land[1], 2 * SPOKE + 2);
    let v1 = p[SPOKE];
    let v2 = p[SPOKE + 1];
    let (v1p, v2p) = (p[SPOKE - 1], p[SPOKE + 2]);
    // v2 v3 v3' ~ c5
    let (g, p) = ins(g, (2, 3), v2, land[2], SPOKE + 1);
    let (v3, v3p) = (p[0], p[1]);
    let (g, p) = ins(g, (5, 6), v3, land[3], SPOKE + 1);
    let (v4, v4p) = (p[0], p[1]);
    let (g, p) = ins(g, (7, 8), v4, land[4], SPOKE + 1);
    let (v5, v5p) = (p[0], p[1]);
    let (g, _) = ins(g, (10, 11), v5, v1, 0);
    LightPentagon {
        graph: g,
        ring: [v1, v2, v3, v4, v5],
        outer: [v1p, v2p, v3p, v4p, v5p],
    }
}

/// What the light-pentagon fixture should become after deleting the ring
/// and joining `v2'` to `v5'`, built independently.
pub fn light_pentagon_reduced() -> PlaneGraph {
    let g = PlaneGraph::cycle(12);
    let (g, _) = ins(g, (0, 1), 2, 10, 2 * SPOKE);
    let (g, _) = hang(g, (11, 0), 0, SPOKE);
    let (g, _) = hang(g, (4, 5), 5, SPOKE);
    hang(g, (6, 7), 7, SPOKE).0
}

/// Vertex roles in the bad-path fixture.
#[derive(Debug, Clone)]
pub struct BadPath {
    pub graph: PlaneGraph,
    /// The path `u v x y z`; `[u v w]` is a bad 3-face.
    pub u: VertexId,
    pub v: VertexId,
    pub w: VertexId,
    pub x: VertexId,
    pub y: VertexId,
    pub z: VertexId,
    /// Remaining neighbours of `u` and `x`.
    pub u_out: VertexId,
    pub x_out: VertexId,
}

/// A 12-cycle boundary around a bad triangle `[u v w]` followed by the
/// internal 3-vertices `x`, `y`, `z`; six 5-edge spokes join the structure
/// to boundary vertices 0, 2, 4, 6, 8, 10.
pub fn bad_path() -> BadPath {
    let g = PlaneGraph::cycle(12);
    // c0 ~ u' u v x x' ~ c2
    let (g, p) = ins(g, (0, 1), 0, 2, 2 * SPOKE + 3);
    let u_out = p[SPOKE - 1];
    let (u, v, x) = (p[SPOKE], p[SPOKE + 1], p[SPOKE + 2]);
    let x_out = p[SPOKE + 3];
    let (g, p) = ins(g, (2, 3), x, 4, SPOKE + 1);
    let y = p[0];
    let (g, p) = ins(g, (4, 5), y, 6, SPOKE + 1);
    let z = p[0];
    let (g, _) = ins(g, (6, 7), z, 8, SPOKE);
    let (g, p) = ins(g, (8, 9), u, v, 1);
    let w = p[0];
    let (g, _) = ins(g, (9, 10), w, 10, SPOKE);
    BadPath {
        graph: g,
        u,
        v,
        w,
        x,
        y,
        z,
        u_out,
        x_out,
    }
}

/// Every named fixture.
pub fn corpus() -> Vec<(String, PlaneGraph)> {
    let mut out: Vec<(String, PlaneGraph)> = vec![
        ("k3".into(), k3()),
        ("c4".into(), c4()),
        ("c5".into(), PlaneGraph::cycle(5)),
        ("k4".into(), k4()),
        ("h".into(), special_h()),
        ("w5".into(), wheel(5)),
        ("prism".into(), prism()),
        ("dodecahedron".into(), dodecahedron()),
        ("claw_3_5_10".into(), claw_3_5_10()),
        ("claw_5_5_8".into(), claw_5_5_8()),
        ("claw_6_6_6".into(), claw_6_6_6()),
        ("claw_3_5_11".into(), claw_3_5_11()),
        ("biclaw_5_5_5_8".into(), biclaw_5_5_5_8()),
        ("c12_three_path".into(), c12_with_three_path()),
        ("pentagon_outer_2vertex".into(), pentagon_with_outer_two_vertex()),
        ("light_pentagon".into(), light_pentagon().graph),
        ("light_pentagon_reduced".into(), light_pentagon_reduced()),
        ("bad_path".into(), bad_path().graph),
    ];
    for k in 5..=12 {
        let t = (k - 1) / 2;
        out.push((format!("string_face_{k}_{t}"), string_face(k, t)));
        out.push((format!("string_face_{k}_1"), string_face(k, 1)));
    }
    out
}
