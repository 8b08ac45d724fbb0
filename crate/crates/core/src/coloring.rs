//! Exhaustive DP-colouring: single labellings, precolouring extension and
//! the sweep over all signature classes.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::cycles::{outer_cycle, Cycle};
use crate::labelling::{signature_classes, LabelledGraph, LabellingError};
use crate::perm::{Perm, MAX_K};
use crate::plane_graph::{classify, PlaneGraph, VertexId};
use crate::structure::{is_good_cycle, StructureError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("precolouring violates the arc {0} -> {1}")]
    PrecoloringConflict(VertexId, VertexId),
    #[error("k = {0} is not supported or does not match the labelling")]
    BadK(usize),
    #[error("the outer face boundary is not a cycle")]
    BoundaryNotCycle,
    #[error("the outer face boundary is not a good cycle")]
    BoundaryNotGood,
    #[error("bad boundary precolouring: {0}")]
    BadPrecoloring(String),
    #[error("graph is not in the class (forbidden cycles: {0:?})")]
    NotInClassG(Vec<Vec<VertexId>>),
    #[error(transparent)]
    Labelling(#[from] LabellingError),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

/// A partial map from vertices to 0-based colours.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coloring {
    k: usize,
    colors: Vec<Option<u8>>,
}

impl Coloring {
    pub fn empty(n: usize, k: usize) -> Self {
        Coloring {
            k,
            colors: vec![None; n],
        }
    }

    pub fn from_total(colors: &[u8], k: usize) -> Self {
        Coloring {
            k,
            colors: colors.iter().map(|&c| Some(c)).collect(),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn get(&self, v: VertexId) -> Option<u8> {
        self.colors[v]
    }

    pub fn set(&mut self, v: VertexId, c: u8) {
        assert!((c as usize) < self.k, "colour out of range");
        self.colors[v] = Some(c);
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    pub fn assigned(&self) -> impl Iterator<Item = (VertexId, u8)> + '_ {
        self.colors
            .iter()
            .enumerate()
            .filter_map(|(v, c)| c.map(|c| (v, c)))
    }

    /// The first dart `x -> y` between two coloured vertices that is
    /// violated.
    pub fn conflict(&self, lg: &LabelledGraph) -> Option<(VertexId, VertexId)> {
        let g = lg.graph();
        for &(x, y) in g.edges() {
            if let (Some(cx), Some(cy)) = (self.colors[x], self.colors[y]) {
                if lg.perm_along(x, y).apply(cx) == cy {
                    return Some((x, y));
                }
            }
        }
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SolveStatus {
    Found,
    Exhausted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub status: SolveStatus,
    pub witness: Option<Coloring>,
    pub nodes: u64,
}

impl SolveResult {
    pub fn found(&self) -> bool {
        self.status == SolveStatus::Found
    }
}

/// Backtracking solver with forward checking over colour bitmasks. The
/// vertex order is fixed (degree descending, then id) so node counts are
/// reproducible. Dart permutations can be updated in place, which the
/// signature sweep uses.
#[derive(Debug, Clone)]
pub struct DpSolver {
    k: usize,
    order: Vec<VertexId>,
    /// Per vertex: `(neighbour, dart index)`.
    adj: Vec<Vec<(VertexId, usize)>>,
    /// Per dart, the images of the dart permutation.
    dart_images: Vec<[u8; MAX_K]>,
    /// Per edge, the dart indices for `(min -> max, max -> min)`.
    edge_darts: Vec<(usize, usize)>,
}

impl DpSolver {
    pub fn new(lg: &LabelledGraph) -> Self {
        let g = lg.graph();
        let n = g.n_vertices();
        let mut order: Vec<VertexId> = g.vertices().collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let mut adj = vec![Vec::new(); n];
        let mut edge_darts = Vec::with_capacity(g.n_edges());
        for &(u, v) in g.edges() {
            let d_uv = g.dart(u, v).expect("edge darts");
            let d_vu = g.dart(v, u).expect("edge darts");
            adj[u].push((v, d_uv));
            adj[v].push((u, d_vu));
            edge_darts.push((d_uv, d_vu));
        }
        let mut s = DpSolver {
            k: lg.k(),
            order,
            adj,
            dart_images: vec![[0u8; MAX_K]; g.n_darts()],
            edge_darts,
        };
        for (e, a) in lg.arcs().iter().enumerate() {
            let (u, _) = g.edges()[e];
            let p = if a.tail == u { a.perm } else { a.perm.inverse() };
            s.set_edge(e, &p);
        }
        s
    }

    /// Sets edge `e` to carry `p` on its `min -> max` orientation.
    pub fn set_edge(&mut self, e: usize, p: &Perm) {
        let (fwd, bwd) = self.edge_darts[e];
        let inv = p.inverse();
        self.dart_images[fwd][..self.k].copy_from_slice(p.images());
        self.dart_images[bwd][..self.k].copy_from_slice(inv.images());
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn solve(&self, pre: &Coloring) -> Result<SolveResult, ColoringError> {
        let n = self.adj.len();
        if pre.k() != self.k || pre.len() != n {
            return Err(ColoringError::BadK(pre.k()));
        }
        let full: u8 = ((1u16 << self.k) - 1) as u8;
        let mut domain = vec![full; n];
        let mut colour = vec![u8::MAX; n];
        for (v, c) in pre.assigned() {
            colour[v] = c;
            domain[v] = 1 << c;
        }
        for (v, c) in pre.assigned() {
            for &(w, d) in &self.adj[v] {
                let banned = self.dart_images[d][c as usize];
                if colour[w] != u8::MAX {
                    if colour[w] == banned {
                        return Err(ColoringError::PrecoloringConflict(v, w));
                    }
                } else {
                    domain[w] &= !(1 << banned);
                }
            }
        }
        let free: Vec<VertexId> = self.order.iter().copied().filter(|&v| colour[v] == u8::MAX).collect();
        if free.iter().any(|&v| domain[v] == 0) {
            return Ok(SolveResult {
                status: SolveStatus::Exhausted,
                witness: None,
                nodes: 0,
            });
        }
        let mut nodes = 0u64;
        let mut trail = Vec::new();
        let ok = self.search(&free, 0, &mut domain, &mut colour, &mut trail, &mut nodes);
        Ok(if ok {
            SolveResult {
                status: SolveStatus::Found,
                witness: Some(Coloring::from_total(&colour, self.k)),
                nodes,
            }
        } else {
            SolveResult {
                status: SolveStatus::Exhausted,
                witness: None,
                nodes,
            }
        })
    }

    fn search(
        &self,
        free: &[VertexId],
        depth: usize,
        domain: &mut [u8],
        colour: &mut [u8],
        trail: &mut Vec<(VertexId, u8)>,
        nodes: &mut u64,
    ) -> bool {
        let Some(&v) = free.get(depth) else {
            return true;
        };
        let options = domain[v];
        for c in 0..self.k as u8 {
            if options >> c & 1 == 0 {
                continue;
            }
            *nodes += 1;
            colour[v] = c;
            let mark = trail.len();
            let mut wiped = false;
            for &(w, d) in &self.adj[v] {
                if colour[w] != u8::MAX {
                    continue;
                }
                let bit = 1u8 << self.dart_images[d][c as usize];
                if domain[w] & bit != 0 {
                    trail.push((w, domain[w]));
                    domain[w] &= !bit;
                    if domain[w] == 0 {
                        wiped = true;
                        break;
                    }
                }
            }
            if !wiped && self.search(free, depth + 1, domain, colour, trail, nodes) {
                return true;
            }
            while trail.len() > mark {
                let (w, old) = trail.pop().expect("trail entry");
                domain[w] = old;
            }
            colour[v] = u8::MAX;
        }
        false
    }
}

/// Extends `precoloring` to a proper colouring of `lg`, or proves that none
/// exists.
pub fn solve(lg: &LabelledGraph, precoloring: &Coloring) -> Result<SolveResult, ColoringError> {
    if precoloring.k() != lg.k() {
        return Err(ColoringError::BadK(precoloring.k()));
    }
    DpSolver::new(lg).solve(precoloring)
}

/// Outcome of a sweep over all signature classes of a graph.
#[derive(Debug, Clone, Serialize)]
pub struct DpReport {
    pub k: usize,
    pub colorable: bool,
    pub classes: u64,
    /// Smallest class index whose labelling is not colourable.
    pub failing_class: Option<u64>,
    #[serde(skip)]
    pub witness: Option<LabelledGraph>,
    pub nodes: u64,
    pub elapsed: Duration,
}

const BLOCK: u64 = 256;

/// Decides DP-`k`-colourability by solving every tree-identity labelling.
/// The verdict and the reported failing class do not depend on `jobs`.
pub fn is_dp_k_colorable(
    g: impl Into<Arc<PlaneGraph>>,
    k: usize,
    jobs: usize,
) -> Result<DpReport, ColoringError> {
    let start = Instant::now();
    let g = g.into();
    let classes = signature_classes(Arc::clone(&g), k)?;
    let base = LabelledGraph::identity(Arc::clone(&g), k)?;
    let template = DpSolver::new(&base);
    let free = classes.free_edges().to_vec();
    let n = g.n_vertices();
    let total = classes.len();
    let best = AtomicU64::new(u64::MAX);
    let next_block = AtomicU64::new(0);
    let nodes = AtomicU64::new(0);

    let worker = || {
        let mut solver = template.clone();
        let empty = Coloring::empty(n, k);
        let mut local_nodes = 0u64;
        loop {
            let b = next_block.fetch_add(1, Ordering::Relaxed);
            let lo = b.saturating_mul(BLOCK);
            if lo >= total || lo >= best.load(Ordering::Relaxed) {
                break;
            }
            let hi = (lo + BLOCK).min(total);
            for i in lo..hi {
                if i >= best.load(Ordering::Relaxed) {
                    break;
                }
                for (&e, p) in free.iter().zip(classes.free_perms(i)) {
                    solver.set_edge(e, &p);
                }
                let r = solver.solve(&empty).expect("empty precolouring");
                local_nodes += r.nodes;
                if !r.found() {
                    best.fetch_min(i, Ordering::Relaxed);
                    break;
                }
            }
        }
        nodes.fetch_add(local_nodes, Ordering::Relaxed);
    };
    let jobs = jobs.max(1);
    if jobs == 1 {
        worker();
    } else {
        std::thread::scope(|s| {
            for _ in 0..jobs {
                s.spawn(worker);
            }
        });
    }
    let failing = best.load(Ordering::Relaxed);
    let failing_class = (failing != u64::MAX).then_some(failing);
    Ok(DpReport {
        k,
        colorable: failing_class.is_none(),
        classes: total,
        failing_class,
        witness: failing_class.map(|i| classes.get(i)),
        nodes: nodes.load(Ordering::Relaxed),
        elapsed: start.elapsed(),
    })
}

/// Extends a colouring of the outer boundary to the whole graph. Under the
/// hypotheses (class membership, good boundary cycle) an `Exhausted`
/// result would contradict the extension theorem.
pub fn extend_boundary(lg: &LabelledGraph, phi0: &Coloring) -> Result<SolveResult, ColoringError> {
    let g = lg.graph();
    if lg.k() != 3 || phi0.k() != 3 {
        return Err(ColoringError::BadK(phi0.k()));
    }
    let u = outer_cycle(g).ok_or(ColoringError::BoundaryNotCycle)?;
    let report = classify(g);
    if !report.in_class_g {
        return Err(not_in_class(&report.forbidden_cycles_found));
    }
    if !is_good_cycle(g, &u)? {
        return Err(ColoringError::BoundaryNotGood);
    }
    check_boundary_coloring(lg, &u, phi0)?;
    solve(lg, phi0)
}

fn check_boundary_coloring(lg: &LabelledGraph, u: &Cycle, phi0: &Coloring) -> Result<(), ColoringError> {
    if phi0.len() != lg.graph().n_vertices() {
        return Err(ColoringError::BadPrecoloring("wrong number of vertices".into()));
    }
    for (v, _) in phi0.assigned() {
        if !u.contains(v) {
            return Err(ColoringError::BadPrecoloring(format!("vertex {v} is not on the boundary")));
        }
    }
    if let Some(&v) = u.vertices().iter().find(|&&v| phi0.get(v).is_none()) {
        return Err(ColoringError::BadPrecoloring(format!("boundary vertex {v} is uncoloured")));
    }
    if let Some((x, y)) = phi0.conflict(lg) {
        return Err(ColoringError::BadPrecoloring(format!("arc {x} -> {y} is violated")));
    }
    Ok(())
}

fn not_in_class(forbidden: &[Cycle]) -> ColoringError {
    ColoringError::NotInClassG(forbidden.iter().map(|c| c.vertices().to_vec()).collect())
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub classes: u64,
    pub colorable: bool,
    pub failing_class: Option<u64>,
    pub nodes: u64,
    pub elapsed: Duration,
}

/// Checks DP-3-colourability of a graph in the class by a full sweep.
pub fn verify_theorem(g: impl Into<Arc<PlaneGraph>>, jobs: usize) -> Result<TheoremReport, ColoringError> {
    let g = g.into();
    let report = classify(&g);
    if !report.in_class_g {
        return Err(not_in_class(&report.forbidden_cycles_found));
    }
    let r = is_dp_k_colorable(g, 3, jobs)?;
    Ok(TheoremReport {
        classes: r.classes,
        colorable: r.colorable,
        failing_class: r.failing_class,
        nodes: r.nodes,
        elapsed: r.elapsed,
    })
}
