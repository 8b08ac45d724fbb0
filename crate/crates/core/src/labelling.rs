//! Permutation labellings of plane graphs, switching and cycle positivity.
//!
//! Each edge carries an orientation and a permutation `σ_e`; the permutation
//! seen along a dart is `σ_e` with the orientation and `σ_e⁻¹` against it.
//! A colouring `f` is proper when `π(x→y)(f(x)) != f(y)` for every dart.

use std::collections::VecDeque;
use std::sync::Arc;

use thiserror::Error;

use crate::cycles::Cycle;
use crate::perm::{Perm, MAX_K};
use crate::plane_graph::{EdgeId, PlaneGraph, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LabellingError {
    #[error("permutation over [{got}] used in a labelling over [{want}]")]
    WrongArity { want: usize, got: usize },
    #[error("not a cycle: {0}")]
    NotACycle(String),
    #[error("basepoint {0} is not on the cycle")]
    BasepointNotOnCycle(VertexId),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("k = {0} is not supported")]
    BadK(usize),
    #[error("{0} and {1} are not adjacent")]
    NotAnEdge(VertexId, VertexId),
    #[error("too many signature classes to index")]
    TooManyClasses,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LabelledArc {
    pub tail: VertexId,
    pub head: VertexId,
    pub perm: Perm,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelledGraph {
    graph: Arc<PlaneGraph>,
    k: usize,
    /// Indexed by edge id.
    arcs: Vec<LabelledArc>,
}

impl LabelledGraph {
    /// All edges positive, oriented from the smaller id.
    pub fn identity(graph: impl Into<Arc<PlaneGraph>>, k: usize) -> Result<Self, LabellingError> {
        if !(1..=MAX_K).contains(&k) {
            return Err(LabellingError::BadK(k));
        }
        let graph = graph.into();
        let arcs = graph
            .edges()
            .iter()
            .map(|&(u, v)| LabelledArc {
                tail: u,
                head: v,
                perm: Perm::identity(k),
            })
            .collect();
        Ok(LabelledGraph { graph, k, arcs })
    }

    /// Identity everywhere except the listed arcs.
    pub fn from_arcs(
        graph: impl Into<Arc<PlaneGraph>>,
        k: usize,
        arcs: impl IntoIterator<Item = (VertexId, VertexId, Perm)>,
    ) -> Result<Self, LabellingError> {
        let mut lg = Self::identity(graph, k)?;
        for (u, v, p) in arcs {
            lg.set_arc(u, v, p)?;
        }
        Ok(lg)
    }

    pub fn graph(&self) -> &PlaneGraph {
        &self.graph
    }

    pub fn graph_arc(&self) -> Arc<PlaneGraph> {
        Arc::clone(&self.graph)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn arcs(&self) -> &[LabelledArc] {
        &self.arcs
    }

    pub fn arc(&self, e: EdgeId) -> LabelledArc {
        self.arcs[e]
    }

    /// Re-orients the edge as `u -> v` carrying `perm`.
    pub fn set_arc(&mut self, u: VertexId, v: VertexId, perm: Perm) -> Result<(), LabellingError> {
        if perm.k() != self.k {
            return Err(LabellingError::WrongArity {
                want: self.k,
                got: perm.k(),
            });
        }
        let e = self
            .graph
            .edge_id(u, v)
            .ok_or(LabellingError::NotAnEdge(u, v))?;
        self.arcs[e] = LabelledArc { tail: u, head: v, perm };
        Ok(())
    }

    /// The permutation seen along the dart `u -> v`.
    pub fn perm_along(&self, u: VertexId, v: VertexId) -> Perm {
        let e = self.graph.edge_id(u, v).expect("adjacent vertices");
        let a = self.arcs[e];
        if a.tail == u {
            a.perm
        } else {
            a.perm.inverse()
        }
    }

    /// Switches `u` by `s`: a colouring `f` of the old labelling maps to the
    /// colouring equal to `s ∘ f` at `u` and to `f` elsewhere. Arcs leaving
    /// `u` become `σ ∘ s⁻¹`, arcs entering `u` become `s ∘ σ`.
    pub fn switch(&self, u: VertexId, s: &Perm) -> Result<Self, LabellingError> {
        if s.k() != self.k {
            return Err(LabellingError::WrongArity {
                want: self.k,
                got: s.k(),
            });
        }
        let mut out = self.clone();
        let s_inv = s.inverse();
        for a in &mut out.arcs {
            if a.tail == u {
                a.perm = a.perm.compose(&s_inv);
            } else if a.head == u {
                a.perm = s.compose(&a.perm);
            }
        }
        Ok(out)
    }

    /// Applies a recorded sequence of switches in order.
    pub fn replay(&self, switches: &[(VertexId, Perm)]) -> Result<Self, LabellingError> {
        let mut lg = self.clone();
        for (u, s) in switches {
            lg = lg.switch(*u, s)?;
        }
        Ok(lg)
    }

    /// Product of the dart permutations once around `c` starting at
    /// `basepoint`, following the cycle's stored direction. The first dart
    /// is applied first.
    pub fn monodromy(&self, c: &Cycle, basepoint: VertexId) -> Result<Perm, LabellingError> {
        c.validate(&self.graph)
            .map_err(|e| LabellingError::NotACycle(e.to_string()))?;
        let start = c
            .position(basepoint)
            .ok_or(LabellingError::BasepointNotOnCycle(basepoint))?;
        let vs = c.vertices();
        let n = vs.len();
        let mut m = Perm::identity(self.k);
        for i in 0..n {
            let x = vs[(start + i) % n];
            let y = vs[(start + i + 1) % n];
            m = self.perm_along(x, y).compose(&m);
        }
        Ok(m)
    }

    pub fn is_positive(&self, c: &Cycle) -> Result<bool, LabellingError> {
        let base = *c.vertices().first().ok_or_else(|| LabellingError::NotACycle("empty".into()))?;
        Ok(self.monodromy(c, base)?.is_identity())
    }

    /// A switch-equivalent labelling with identity on every edge of the BFS
    /// spanning tree rooted at vertex 0, together with the switches that
    /// produce it.
    pub fn normalize(&self) -> Result<(Self, Vec<(VertexId, Perm)>), LabellingError> {
        let tree = SpanningTree::bfs(&self.graph)?;
        let mut lg = self.clone();
        let mut switches = Vec::new();
        for &(p, v) in &tree.order {
            let along = lg.perm_along(p, v);
            if !along.is_identity() {
                let s = along.inverse();
                lg = lg.switch(v, &s)?;
                switches.push((v, s));
            }
        }
        Ok((lg, switches))
    }
}

/// BFS spanning tree from vertex 0. `order` lists tree edges as
/// `(parent, child)` in discovery order.
#[derive(Debug, Clone)]
pub struct SpanningTree {
    pub order: Vec<(VertexId, VertexId)>,
    pub is_tree_edge: Vec<bool>,
}

impl SpanningTree {
    pub fn bfs(g: &PlaneGraph) -> Result<Self, LabellingError> {
        let n = g.n_vertices();
        let mut is_tree_edge = vec![false; g.n_edges()];
        let mut order = Vec::with_capacity(n.saturating_sub(1));
        if n == 0 {
            return Ok(SpanningTree { order, is_tree_edge });
        }
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &y in g.rotation(x) {
                if !seen[y] {
                    seen[y] = true;
                    is_tree_edge[g.edge_id(x, y).expect("adjacent")] = true;
                    order.push((x, y));
                    queue.push_back(y);
                }
            }
        }
        if order.len() + 1 != n {
            return Err(LabellingError::Disconnected);
        }
        Ok(SpanningTree { order, is_tree_edge })
    }
}

/// Every labelling that is the identity on the BFS spanning tree, indexed
/// `0..len()` in mixed radix `k!` (first free edge least significant).
/// Every labelling is switch-equivalent to one of these.
#[derive(Debug, Clone)]
pub struct SignatureClasses {
    graph: Arc<PlaneGraph>,
    k: usize,
    free_edges: Vec<EdgeId>,
    perms: Vec<Perm>,
    len: u64,
}

pub fn signature_classes(
    graph: impl Into<Arc<PlaneGraph>>,
    k: usize,
) -> Result<SignatureClasses, LabellingError> {
    if !(1..=MAX_K).contains(&k) {
        return Err(LabellingError::BadK(k));
    }
    let graph = graph.into();
    let tree = SpanningTree::bfs(&graph)?;
    let free_edges: Vec<EdgeId> = (0..graph.n_edges()).filter(|&e| !tree.is_tree_edge[e]).collect();
    let perms = Perm::all(k);
    let len = (perms.len() as u64)
        .checked_pow(free_edges.len() as u32)
        .ok_or(LabellingError::TooManyClasses)?;
    Ok(SignatureClasses {
        graph,
        k,
        free_edges,
        perms,
        len,
    })
}

impl SignatureClasses {
    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Non-tree edge ids, in increasing order.
    pub fn free_edges(&self) -> &[EdgeId] {
        &self.free_edges
    }

    /// The permutations placed on the free edges (oriented `min -> max`)
    /// for class `index`.
    pub fn free_perms(&self, index: u64) -> Vec<Perm> {
        let base = self.perms.len() as u64;
        let mut rest = index;
        self.free_edges
            .iter()
            .map(|_| {
                let p = self.perms[(rest % base) as usize];
                rest /= base;
                p
            })
            .collect()
    }

    pub fn get(&self, index: u64) -> LabelledGraph {
        assert!(index < self.len, "class index out of range");
        let mut lg = LabelledGraph::identity(Arc::clone(&self.graph), self.k).expect("k checked");
        for (&e, p) in self.free_edges.iter().zip(self.free_perms(index)) {
            lg.arcs[e].perm = p;
        }
        lg
    }

    pub fn iter(&self) -> impl Iterator<Item = LabelledGraph> + '_ {
        (0..self.len).map(|i| self.get(i))
    }

    /// Splits `0..len()` into at most `parts` contiguous blocks.
    pub fn split(&self, parts: usize) -> Vec<std::ops::Range<u64>> {
        let parts = parts.max(1) as u64;
        let step = self.len.div_ceil(parts).max(1);
        (0..self.len)
            .step_by(step as usize)
            .map(|s| s..(s + step).min(self.len))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::enumerate_cycles;
    use crate::fixtures;

    fn p(w: &str) -> Perm {
        w.parse().unwrap()
    }

    fn triangle(words: [&str; 3]) -> LabelledGraph {
        let g = PlaneGraph::cycle(3);
        LabelledGraph::from_arcs(g, words[0].len(), [(0, 1, p(words[0])), (1, 2, p(words[1])), (2, 0, p(words[2]))])
            .unwrap()
    }

    #[test]
    fn switch_by_identity_is_noop() {
        let lg = triangle(["213", "231", "123"]);
        assert_eq!(lg.switch(1, &Perm::identity(3)).unwrap(), lg);
    }

    #[test]
    fn switch_cancels_single_transposition() {
        let g = PlaneGraph::path(2);
        let lg = LabelledGraph::from_arcs(g, 2, [(0, 1, p("21"))]).unwrap();
        let s = lg.switch(0, &p("21")).unwrap();
        assert!(s.perm_along(0, 1).is_identity());
    }

    #[test]
    fn switch_then_inverse_restores() {
        let lg = triangle(["213", "231", "132"]);
        let s = p("312");
        let back = lg.switch(2, &s).unwrap().switch(2, &s.inverse()).unwrap();
        assert_eq!(back, lg);
        assert!(matches!(lg.switch(0, &p("21")), Err(LabellingError::WrongArity { .. })));
    }

    #[test]
    fn triangle_positivity() {
        let c = Cycle::new(vec![0, 1, 2]);
        assert!(triangle(["123", "123", "123"]).is_positive(&c).unwrap());
        assert!(triangle(["213", "213", "123"]).is_positive(&c).unwrap());
        let neg = triangle(["213", "123", "123"]);
        assert!(!neg.is_positive(&c).unwrap());
        assert_eq!(neg.monodromy(&c, 0).unwrap(), p("213"));
    }

    #[test]
    fn monodromy_conjugate_across_basepoints() {
        let lg = triangle(["231", "213", "132"]);
        let c = Cycle::new(vec![0, 1, 2]);
        let m0 = lg.monodromy(&c, 0).unwrap();
        let m1 = lg.monodromy(&c, 1).unwrap();
        let along = lg.perm_along(0, 1);
        assert_eq!(m1, m0.conjugate_by(&along));
        assert!(matches!(lg.monodromy(&c, 7), Err(LabellingError::BasepointNotOnCycle(7))));
    }

    #[test]
    fn normalize_clears_tree_and_replays() {
        let g = PlaneGraph::path(5);
        let lg = LabelledGraph::from_arcs(g, 3, [(0, 1, p("231")), (3, 2, p("213"))]).unwrap();
        let (nf, sw) = lg.normalize().unwrap();
        assert!(nf.arcs().iter().all(|a| a.perm.is_identity()));
        assert_eq!(lg.replay(&sw).unwrap(), nf);

        let c4 = fixtures::c4();
        let lg = LabelledGraph::from_arcs(c4, 3, [(1, 2, p("231"))]).unwrap();
        let (nf, _) = lg.normalize().unwrap();
        let non_id: Vec<_> = nf.arcs().iter().filter(|a| !a.perm.is_identity()).collect();
        assert_eq!(non_id.len(), 1);
        let c = Cycle::new(vec![0, 1, 2, 3]);
        let m = nf.monodromy(&c, 0).unwrap();
        // conjugate of a 3-cycle is a 3-cycle
        assert!(!m.is_identity() && m.compose(&m).compose(&m).is_identity());
    }

    #[test]
    fn class_counts() {
        assert_eq!(signature_classes(PlaneGraph::path(4), 3).unwrap().len(), 1);
        assert_eq!(signature_classes(fixtures::c4(), 3).unwrap().len(), 6);
        assert_eq!(signature_classes(fixtures::k4(), 3).unwrap().len(), 216);
    }

    #[test]
    fn every_labelling_normalizes_into_the_class_list() {
        let g = Arc::new(fixtures::k4());
        let classes = signature_classes(Arc::clone(&g), 2).unwrap();
        let listed: Vec<LabelledGraph> = classes.iter().collect();
        let all = Perm::all(2);
        for mask in 0..(1u32 << g.n_edges()) {
            let arcs = g
                .edges()
                .iter()
                .enumerate()
                .map(|(e, &(u, v))| (u, v, all[(mask >> e & 1) as usize]));
            let lg = LabelledGraph::from_arcs(Arc::clone(&g), 2, arcs).unwrap();
            let (nf, _) = lg.normalize().unwrap();
            assert!(listed.contains(&nf));
        }
    }

    #[test]
    fn split_covers_range() {
        let classes = signature_classes(fixtures::k4(), 3).unwrap();
        let blocks = classes.split(5);
        assert_eq!(blocks.first().unwrap().start, 0);
        assert_eq!(blocks.last().unwrap().end, 216);
        assert!(blocks.windows(2).all(|w| w[0].end == w[1].start));
    }

    #[test]
    fn positivity_is_switch_invariant_on_prism() {
        let g = Arc::new(fixtures::prism());
        let lg = LabelledGraph::from_arcs(Arc::clone(&g), 3, [(0, 1, p("231")), (3, 4, p("213")), (2, 5, p("132"))])
            .unwrap();
        let cycles = enumerate_cycles(&g, 8);
        let s = lg.switch(0, &p("312")).unwrap().switch(4, &p("213")).unwrap();
        for c in &cycles {
            assert_eq!(lg.is_positive(c).unwrap(), s.is_positive(c).unwrap());
        }
    }
}
