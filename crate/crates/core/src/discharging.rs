//! Exact-rational discharging: initial charges, the eight transfer rules,
//! aggregation over special subgraphs, and audits of the resulting bounds.
//!
//! Every face rule skips the outer face `f0` except the rule in which `f0`
//! itself gives charge. Face incidences are counted per walk occurrence.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::coloring::{extend_boundary, Coloring, ColoringError};
use crate::cycles::{outer_cycle, Cycle};
use crate::labelling::LabelledGraph;
use crate::plane_graph::{classify, FaceId, PlaneGraph, VertexId, OUTER_FACE};
use crate::structure::{
    bad_vertex_mask, h_counts, is_good_cycle, lemma_predicates, special_face_mask, special_subgraphs, strings,
    LemmaPredicates, Predicate, SpecialSubgraph, StructureError,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DischargeError {
    #[error("graph is not in the class (forbidden cycles: {0:?})")]
    NotInClassG(Vec<Cycle>),
    #[error("g(k) is undefined for k = {0}")]
    OutOfDomain(usize),
    #[error("the ledger does not belong to this graph")]
    LedgerMismatch,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

/// An exact rational charge, always in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Charge(Ratio<i64>);

impl Charge {
    pub fn new(numer: i64, denom: i64) -> Self {
        Charge(Ratio::new(numer, denom))
    }

    pub fn int(n: i64) -> Self {
        Charge(Ratio::from_integer(n))
    }

    pub fn zero() -> Self {
        Charge(Ratio::zero())
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
}

impl fmt::Display for Charge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl Serialize for Charge {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Add for Charge {
    type Output = Charge;
    fn add(self, o: Charge) -> Charge {
        Charge(self.0 + o.0)
    }
}

impl Sub for Charge {
    type Output = Charge;
    fn sub(self, o: Charge) -> Charge {
        Charge(self.0 - o.0)
    }
}

impl Neg for Charge {
    type Output = Charge;
    fn neg(self) -> Charge {
        Charge(-self.0)
    }
}

impl Mul<i64> for Charge {
    type Output = Charge;
    fn mul(self, k: i64) -> Charge {
        Charge(self.0 * k)
    }
}

impl Div<i64> for Charge {
    type Output = Charge;
    fn div(self, k: i64) -> Charge {
        Charge(self.0 / k)
    }
}

impl AddAssign for Charge {
    fn add_assign(&mut self, o: Charge) {
        self.0 += o.0;
    }
}

impl SubAssign for Charge {
    fn sub_assign(&mut self, o: Charge) {
        self.0 -= o.0;
    }
}

impl Sum for Charge {
    fn sum<I: Iterator<Item = Charge>>(iter: I) -> Charge {
        iter.fold(Charge::zero(), Add::add)
    }
}

fn c(n: i64, d: i64) -> Charge {
    Charge::new(n, d)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Element {
    Vertex(VertexId),
    Face(FaceId),
}

impl fmt::Display for Element {
    /// Vertices print 1-based as in the file formats; faces print as face
    /// ids, so the outer face is `f0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vertex(v) => write!(f, "v{}", v + 1),
            Element::Face(x) => write!(f, "f{x}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Rule {
    /// The outer face feeds every vertex on it.
    R1,
    /// Non-special triangles collect from their vertices.
    R2,
    /// Inside a non-special triangle, vertices that are not internal
    /// 3-vertices support those that are.
    R3,
    /// The 5-face of a special subgraph pays its triangle.
    R4,
    /// Non-special 5-faces feed internal 3-vertices and 2-vertices.
    R5,
    /// Bounded faces of length at least 6 share out their excess.
    R6,
    /// Non-bad vertices support adjacent bad vertices.
    R7,
    /// Anchors of a string feed its vertices on medium faces.
    R8,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Transfer {
    pub rule: Rule,
    pub from: Element,
    pub to: Element,
    pub amount: Charge,
}

/// Per-vertex counts. Faces are counted per walk occurrence and the outer
/// face is never counted.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct VertexCounters {
    /// Non-special triangles.
    pub r1: usize,
    /// 8-faces.
    pub r2: usize,
    /// Faces of length at least 10.
    pub r3: usize,
    /// Adjacent bad vertices.
    pub b: usize,
    /// Special subgraphs containing the vertex.
    pub h: usize,
    /// Non-special 5-faces and 6+-faces sharing an edge with the outer face.
    pub t: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecialCharge {
    pub subgraph: SpecialSubgraph,
    pub ch: Charge,
    pub ch_star: Charge,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChargeLedger {
    pub n_vertices: usize,
    pub n_faces: usize,
    /// Indexed by [`ChargeLedger::index`]: vertices first, then faces.
    pub initial: Vec<Charge>,
    pub final_charge: Vec<Charge>,
    pub transfers: Vec<Transfer>,
    pub counters: Vec<VertexCounters>,
    pub specials: Vec<SpecialCharge>,
}

impl ChargeLedger {
    pub fn index(&self, e: Element) -> usize {
        match e {
            Element::Vertex(v) => v,
            Element::Face(f) => self.n_vertices + f,
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> {
        let (n, f) = (self.n_vertices, self.n_faces);
        (0..n).map(Element::Vertex).chain((0..f).map(Element::Face))
    }

    pub fn ch(&self, e: Element) -> Charge {
        self.initial[self.index(e)]
    }

    pub fn ch_star(&self, e: Element) -> Charge {
        self.final_charge[self.index(e)]
    }

    pub fn total_initial(&self) -> Charge {
        self.initial.iter().copied().sum()
    }

    pub fn total_final(&self) -> Charge {
        self.final_charge.iter().copied().sum()
    }

    /// Final charges recomputed from the initial charges and the transfers.
    pub fn replay(&self) -> Vec<Charge> {
        let mut out = self.initial.clone();
        for t in &self.transfers {
            out[self.index(t.from)] -= t.amount;
            out[self.index(t.to)] += t.amount;
        }
        out
    }

    /// Total sent from `from` to `to` under `rule`.
    pub fn sent(&self, rule: Rule, from: Element, to: Element) -> Charge {
        self.transfers
            .iter()
            .filter(|t| t.rule == rule && t.from == from && t.to == to)
            .map(|t| t.amount)
            .sum()
    }

    /// One line per element (`element initial transfers... final`), then
    /// the totals line. Transfers print signed from the element's side.
    pub fn to_text(&self) -> String {
        let mut lines: Vec<Vec<String>> = self.elements().map(|e| vec![e.to_string(), self.ch(e).to_string()]).collect();
        for t in &self.transfers {
            lines[self.index(t.from)].push(format!("{}:-{}>{}", t.rule, t.amount, t.to));
            lines[self.index(t.to)].push(format!("{}:+{}<{}", t.rule, t.amount, t.from));
        }
        let mut s = String::new();
        for (e, mut line) in self.elements().zip(lines) {
            line.push(format!("= {}", self.ch_star(e)));
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s.push_str(&format!("totals: {} {}\n", self.total_initial(), self.total_final()));
        s
    }
}

fn base_ledger(g: &PlaneGraph) -> ChargeLedger {
    let initial: Vec<Charge> = g
        .vertices()
        .map(|v| Charge::int(g.degree(v) as i64 - 4))
        .chain((0..g.n_faces()).map(|f| {
            let d = g.face_size(f) as i64;
            Charge::int(if f == OUTER_FACE { d + 4 } else { d - 4 })
        }))
        .collect();
    ChargeLedger {
        n_vertices: g.n_vertices(),
        n_faces: g.n_faces(),
        final_charge: initial.clone(),
        initial,
        transfers: Vec::new(),
        counters: vec![VertexCounters::default(); g.n_vertices()],
        specials: Vec::new(),
    }
}

/// Initial charges only: `d + 4` for the outer face, `d - 4` for every
/// other vertex and face.
pub fn initial_charges(g: &PlaneGraph) -> ChargeLedger {
    base_ledger(g)
}

/// The rate an anchor pays each vertex of a string on a face of length
/// `d`, or zero when the face does not take part.
pub fn string_rate(d: usize, special: bool) -> Charge {
    match d {
        5 if !special => c(5, 52),
        6..=12 => c(2, d as i64) - c(2, 13),
        _ => Charge::zero(),
    }
}

/// Everything the rules look at, computed once.
struct Context<'a> {
    g: &'a PlaneGraph,
    ext: Vec<bool>,
    specials: Vec<SpecialSubgraph>,
    special_face: Vec<bool>,
    h: Vec<usize>,
    bad: Vec<bool>,
}

impl<'a> Context<'a> {
    fn new(lg: &'a LabelledGraph) -> Self {
        let g = lg.graph();
        let specials = special_subgraphs(g);
        Context {
            g,
            ext: g.external_mask(),
            special_face: special_face_mask(g, &specials),
            h: h_counts(g, &specials),
            bad: bad_vertex_mask(lg),
            specials,
        }
    }

    fn int3(&self, v: VertexId) -> bool {
        !self.ext[v] && self.g.degree(v) == 3
    }

    fn bounded(&self) -> impl Iterator<Item = FaceId> {
        (0..self.g.n_faces()).filter(|&f| f != OUTER_FACE)
    }

    fn shares_edge_with_outer(&self, f: FaceId) -> bool {
        let g = self.g;
        g.face_walk(f).iter().any(|&d| g.face_of(g.twin(d)) == OUTER_FACE)
    }
}

/// Runs the eight rules simultaneously off the initial charges. Transfers
/// are recorded grouped by rule in rule order.
pub fn discharge(lg: &LabelledGraph) -> Result<ChargeLedger, DischargeError> {
    let g = lg.graph();
    let report = classify(g);
    if !report.in_class_g {
        return Err(DischargeError::NotInClassG(report.forbidden_cycles_found));
    }
    let cx = Context::new(lg);
    let mut led = base_ledger(g);
    let mut tr = Vec::new();
    let mut push = |rule, from, to, amount: Charge| {
        if !amount.is_zero() {
            tr.push(Transfer { rule, from, to, amount });
        }
    };
    let fe = Element::Face;
    let ve = Element::Vertex;

    for v in g.face_vertices(OUTER_FACE) {
        push(Rule::R1, fe(OUTER_FACE), ve(v), c(17, 13));
    }
    let nonspecial_triangles: Vec<FaceId> = cx
        .bounded()
        .filter(|&f| g.face_size(f) == 3 && !cx.special_face[f])
        .collect();
    for &f in &nonspecial_triangles {
        for v in g.face_vertices(f) {
            push(Rule::R2, ve(v), fe(f), c(1, 3));
        }
    }
    for &f in &nonspecial_triangles {
        let vs = g.face_vertices(f);
        for &u in &vs {
            for &v in &vs {
                if u != v && cx.int3(u) && !cx.int3(v) {
                    push(Rule::R3, ve(v), ve(u), c(2, 15));
                }
            }
        }
    }
    for s in &cx.specials {
        push(Rule::R4, fe(s.five_face), fe(s.triangle_face), Charge::int(1));
    }
    for f in cx.bounded().filter(|&f| g.face_size(f) == 5 && !cx.special_face[f]) {
        for v in g.face_vertices(f) {
            if cx.int3(v) {
                push(Rule::R5, fe(f), ve(v), c(1, 4));
            } else if g.degree(v) == 2 {
                push(Rule::R5, fe(f), ve(v), c(1, 2));
            }
        }
    }
    for f in cx.bounded().filter(|&f| g.face_size(f) >= 6) {
        let d = g.face_size(f) as i64;
        for v in g.face_vertices(f) {
            push(Rule::R6, fe(f), ve(v), c(d - 4, d));
        }
    }
    for &(a, b) in g.edges() {
        for (x, y) in [(a, b), (b, a)] {
            if cx.bad[x] && !cx.bad[y] {
                push(Rule::R7, ve(y), ve(x), c(2, 15));
            }
        }
    }
    for f in cx.bounded() {
        let rate = string_rate(g.face_size(f), cx.special_face[f]);
        if rate.is_zero() {
            continue;
        }
        for s in strings(g, f) {
            for anchor in [s.anchors.0, s.anchors.1] {
                for &x in &s.path {
                    push(Rule::R8, ve(anchor), ve(x), rate);
                }
            }
        }
    }

    led.transfers = tr;
    led.final_charge = led.replay();
    led.counters = counters(&cx);
    led.specials = cx
        .specials
        .iter()
        .map(|s| SpecialCharge {
            subgraph: s.clone(),
            ch: special_sum(&cx.h, s, |v| led.initial[v]),
            ch_star: special_sum(&cx.h, s, |v| led.final_charge[v]),
        })
        .collect();
    Ok(led)
}

fn special_sum(h: &[usize], s: &SpecialSubgraph, ch: impl Fn(VertexId) -> Charge) -> Charge {
    s.vertices.iter().map(|&v| ch(v) / h[v] as i64).sum()
}

fn counters(cx: &Context) -> Vec<VertexCounters> {
    let g = cx.g;
    g.vertices()
        .map(|u| {
            let mut k = VertexCounters {
                h: cx.h[u],
                b: g.rotation(u).iter().filter(|&&w| cx.bad[w]).count(),
                ..Default::default()
            };
            for f in g.faces_at(u) {
                if f == OUTER_FACE {
                    continue;
                }
                let d = g.face_size(f);
                match d {
                    3 if !cx.special_face[f] => k.r1 += 1,
                    8 => k.r2 += 1,
                    10.. => k.r3 += 1,
                    _ => {}
                }
                let big = d >= 6 || (d == 5 && !cx.special_face[f]);
                if big && cx.shares_edge_with_outer(f) {
                    k.t += 1;
                }
            }
            k
        })
        .collect()
}

/// The lower bound on what a vertex keeps from a face of length `k` after
/// paying the strings it anchors there.
pub fn g_bound(k: usize) -> Result<Charge, DischargeError> {
    let k64 = k as i64;
    match k {
        6 | 8 | 10 | 12 => Ok(c(k64 - 4, 13)),
        11 => Ok(c(k64 - 4, 13) - (c(1, k64) - c(1, 13))),
        13.. => Ok(c(k64 - 4, k64)),
        _ => Err(DischargeError::OutOfDomain(k)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = ">")]
    Gt,
    #[serde(rename = "<=")]
    Le,
}

impl Relation {
    fn eval(self, l: Charge, r: Charge) -> bool {
        match self {
            Relation::Ge => l >= r,
            Relation::Gt => l > r,
            Relation::Le => l <= r,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Ge => ">=",
            Relation::Gt => ">",
            Relation::Le => "<=",
        })
    }
}

/// The inequalities the discharging argument relies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    /// An anchor pays a string at most 7/26.
    StringCap,
    /// What an anchor keeps from a face after paying its string is at least
    /// `g(d)`.
    StringResidual,
    /// A 4+-vertex ends with at least `h/2` (internal) or more than
    /// `11h/15` (external).
    MajorVertex,
    /// Triangles and bad neighbours are outnumbered by 10+-faces.
    TriangleBalance,
    /// Triangles, bad neighbours and special subgraphs are outnumbered by
    /// 8-faces and 10+-faces.
    FaceBalance,
    /// Triangles and special subgraphs use disjoint pairs of edges.
    EdgeDisjointness,
    /// The final charge of a 4+-vertex is at least the rule-by-rule
    /// estimate from its counters.
    MajorVertexEstimate,
    /// Each special subgraph ends nonnegative, positive if it touches the
    /// boundary.
    SpecialSubgraph,
    /// 3+-vertices outside special subgraphs end nonnegative, positive on
    /// the boundary.
    MinorVertex,
    /// 2-vertices outside special subgraphs end nonnegative.
    TwoVertex,
    /// Every face ends nonnegative.
    Face,
}

impl Bound {
    /// The structural predicates the bound's derivation relies on.
    pub fn cites(self) -> &'static [Predicate] {
        use Predicate::*;
        match self {
            Bound::StringCap | Bound::StringResidual => &[NoLongStrings],
            Bound::MajorVertex => &[TwoConnected, InternalMinDegree, NoLongStrings],
            Bound::TriangleBalance | Bound::FaceBalance | Bound::EdgeDisjointness => &[TwoConnected],
            Bound::MajorVertexEstimate => &[InternalMinDegree, NoLongStrings],
            Bound::SpecialSubgraph => &[SplittingPaths, NoLightPentagon, BadPathRule, NoLongStrings],
            Bound::MinorVertex => &[NoNegativeLightTriangle, BadPathRule, NoLongStrings],
            Bound::TwoVertex => &[InternalMinDegree, NoLongStrings, ExternalMajorVertex],
            Bound::Face => &[NoLightPentagon, NoLongStrings],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Subject {
    Element(Element),
    Special(usize),
    /// An anchor occurrence of the string starting at `first` on `face`.
    Anchor { face: FaceId, first: VertexId, anchor: VertexId },
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subject::Element(e) => write!(f, "{e}"),
            Subject::Special(i) => write!(f, "H{i}"),
            Subject::Anchor { face, first, anchor } => write!(f, "f{face}:v{}@v{}", first + 1, anchor + 1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub bound: Bound,
    pub subject: Subject,
    pub lhs: Charge,
    pub relation: Relation,
    pub rhs: Charge,
    pub holds: bool,
    /// Whether every cited predicate holds; `None` when the predicates
    /// could not be evaluated.
    pub cited_hold: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimReport {
    pub checks: Vec<Check>,
    pub predicates: Option<LemmaPredicates>,
    /// Why the predicates are missing, if they are.
    pub predicate_error: Option<String>,
}

impl ClaimReport {
    pub fn all_predicates_hold(&self) -> bool {
        self.predicates.as_ref().is_some_and(LemmaPredicates::all_hold)
    }

    pub fn violations(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.holds)
    }

    /// Violations not accounted for by a failed predicate. The argument
    /// predicts this is always empty.
    pub fn unexplained(&self) -> Vec<&Check> {
        if self.all_predicates_hold() {
            self.violations().collect()
        } else {
            Vec::new()
        }
    }
}

struct Audit<'a> {
    preds: Option<&'a LemmaPredicates>,
    checks: Vec<Check>,
}

impl Audit<'_> {
    fn check(&mut self, bound: Bound, subject: Subject, lhs: Charge, relation: Relation, rhs: Charge) {
        let cited_hold = self.preds.map(|p| bound.cites().iter().all(|&q| p.get(q)));
        self.checks.push(Check {
            bound,
            subject,
            lhs,
            relation,
            rhs,
            holds: relation.eval(lhs, rhs),
            cited_hold,
        });
    }
}

fn n(x: usize) -> Charge {
    Charge::int(x as i64)
}

/// Evaluates every bound on the ledger, alongside the structural
/// predicates.
pub fn audit_claims(lg: &LabelledGraph, led: &ChargeLedger) -> Result<ClaimReport, DischargeError> {
    let g = lg.graph();
    if led.n_vertices != g.n_vertices() || led.n_faces != g.n_faces() {
        return Err(DischargeError::LedgerMismatch);
    }
    let (predicates, predicate_error) = match lemma_predicates(lg) {
        Ok(p) => (Some(p), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let cx = Context::new(lg);
    let mut a = Audit {
        preds: predicates.as_ref(),
        checks: Vec::new(),
    };
    let ve = Element::Vertex;

    for f in cx.bounded().filter(|&f| g.face_size(f) >= 5) {
        let d = g.face_size(f);
        let rate = string_rate(d, cx.special_face[f]);
        for s in strings(g, f) {
            for anchor in [s.anchors.0, s.anchors.1] {
                let subject = Subject::Anchor {
                    face: f,
                    first: s.path[0],
                    anchor,
                };
                let paid = rate * s.k as i64;
                a.check(Bound::StringCap, subject, paid, Relation::Le, c(7, 26));
                if let Ok(gk) = g_bound(d) {
                    let got = c(d as i64 - 4, d as i64);
                    a.check(Bound::StringResidual, subject, got - paid, Relation::Ge, gk);
                }
            }
        }
    }

    for u in g.vertices() {
        let d = g.degree(u);
        let k = led.counters[u];
        let (ch, star) = (led.ch(ve(u)), led.ch_star(ve(u)));
        let h = n(k.h);
        let s = Subject::Element(ve(u));
        if d >= 4 {
            let (r1, r2, r3, b, t) = (n(k.r1), n(k.r2), n(k.r3), n(k.b), n(k.t));
            let common = ch - r1 * 3 / 5 - b * 2 / 15;
            if cx.ext[u] {
                a.check(Bound::MajorVertex, s, star, Relation::Gt, h * 11 / 15);
                a.check(Bound::FaceBalance, s, r1 + h + b, Relation::Le, r2 + r3 + Charge::int(1) - t);
                a.check(Bound::EdgeDisjointness, s, r1 * 2 + h * 2, Relation::Le, n(d));
                let est = common + (r2 + r3) / 2 - t * 7 / 26 + c(17, 13);
                a.check(Bound::MajorVertexEstimate, s, star, Relation::Ge, est);
            } else {
                a.check(Bound::MajorVertex, s, star, Relation::Ge, h / 2);
                a.check(Bound::TriangleBalance, s, r1 + b, Relation::Le, r3);
                a.check(Bound::FaceBalance, s, r1 + b + h, Relation::Le, r2 + r3);
                let est = common + r2 / 2 + r3 * 3 / 5;
                a.check(Bound::MajorVertexEstimate, s, star, Relation::Ge, est);
            }
        }
        if k.h == 0 && d >= 3 {
            let rel = if cx.ext[u] { Relation::Gt } else { Relation::Ge };
            a.check(Bound::MinorVertex, s, star, rel, Charge::zero());
        }
        if k.h == 0 && d == 2 {
            a.check(Bound::TwoVertex, s, star, Relation::Ge, Charge::zero());
        }
    }

    for (i, sc) in led.specials.iter().enumerate() {
        let touches = sc.subgraph.vertices.iter().any(|&v| cx.ext[v]);
        let rel = if touches { Relation::Gt } else { Relation::Ge };
        a.check(Bound::SpecialSubgraph, Subject::Special(i), sc.ch_star, rel, Charge::zero());
    }

    for f in 0..g.n_faces() {
        let e = Element::Face(f);
        a.check(Bound::Face, Subject::Element(e), led.ch_star(e), Relation::Ge, Charge::zero());
    }

    let checks = a.checks;
    Ok(ClaimReport {
        checks,
        predicates,
        predicate_error,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MetaVerdict {
    /// Predicates that fail; the argument says this is never empty.
    pub failed: Vec<Predicate>,
    pub total_final: Charge,
    /// Whether the given boundary colouring extends, if one was given.
    pub extends: Option<bool>,
}

impl MetaVerdict {
    pub fn consistent(&self) -> bool {
        !self.failed.is_empty() && self.total_final.is_zero()
    }
}

/// If every predicate held, the bounds would force a positive total charge
/// while conservation keeps it at zero. So on any graph meeting the
/// preconditions some predicate must fail; this reports which.
pub fn meta_audit(lg: &LabelledGraph, phi0: Option<&Coloring>) -> Result<MetaVerdict, DischargeError> {
    let g = lg.graph();
    let report = classify(g);
    if !report.in_class_g {
        return Err(DischargeError::NotInClassG(report.forbidden_cycles_found));
    }
    let u = outer_cycle(g).ok_or_else(|| DischargeError::PreconditionFailed("the outer boundary is not a cycle".into()))?;
    if u.len() > 13 || !is_good_cycle(g, &u)? {
        return Err(DischargeError::PreconditionFailed("the outer boundary is not a good cycle".into()));
    }
    let ext = g.external_mask();
    if !g.vertices().any(|v| ext[v] && g.degree(v) >= 3) {
        return Err(DischargeError::PreconditionFailed("no external vertex of degree at least 3".into()));
    }
    let preds = lemma_predicates(lg)?;
    let led = discharge(lg)?;
    let extends = match phi0 {
        Some(phi) => Some(extend_boundary(lg, phi)?.found()),
        None => None,
    };
    Ok(MetaVerdict {
        failed: preds.failed(),
        total_final: led.total_final(),
        extends,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::perm::Perm;

    fn id(g: PlaneGraph) -> LabelledGraph {
        LabelledGraph::identity(g, 3).unwrap()
    }

    #[test]
    fn charge_display_and_arithmetic() {
        assert_eq!(c(2, 4).to_string(), "1/2");
        assert_eq!(Charge::zero().to_string(), "0/1");
        assert_eq!((c(1, 3) + c(1, 6)).to_string(), "1/2");
        assert_eq!((c(17, 13) * 13 - Charge::int(17)), Charge::zero());
        assert!(c(-1, 5).is_negative());
    }

    #[test]
    fn initial_charges_of_h_and_k3() {
        let g = fixtures::special_h();
        let led = initial_charges(&g);
        assert_eq!(led.ch(Element::Face(OUTER_FACE)), Charge::int(10));
        let mut faces: Vec<Charge> = (1..g.n_faces()).map(|f| led.ch(Element::Face(f))).collect();
        faces.sort();
        assert_eq!(faces, vec![Charge::int(-1), Charge::int(1)]);
        let verts: Vec<i64> = g.vertices().map(|v| led.ch(Element::Vertex(v)).numer()).collect();
        assert_eq!(verts, vec![-2, -1, -2, -2, -2, -1]);
        assert!(led.total_initial().is_zero());

        let led = initial_charges(&fixtures::k3());
        assert_eq!(led.ch(Element::Face(0)), Charge::int(7));
        assert_eq!(led.ch(Element::Face(1)), Charge::int(-1));
        assert!(led.total_initial().is_zero());
    }

    #[test]
    fn g_table() {
        let want = [(6, c(2, 13)), (8, c(4, 13)), (10, c(6, 13)), (11, c(75, 143)), (12, c(8, 13)), (13, c(9, 13))];
        for (k, v) in want {
            assert_eq!(g_bound(k).unwrap(), v, "g({k})");
        }
        for k in [0, 3, 5, 7, 9] {
            assert!(matches!(g_bound(k), Err(DischargeError::OutOfDomain(_))));
        }
        let valid: Vec<usize> = (6..=40).filter(|k| g_bound(*k).is_ok()).collect();
        for w in valid.windows(2) {
            assert!(g_bound(w[0]).unwrap() < g_bound(w[1]).unwrap());
        }
    }

    #[test]
    fn conservation_on_corpus() {
        for (name, g) in fixtures::corpus() {
            if !classify(&g).in_class_g {
                continue;
            }
            let led = discharge(&id(g)).unwrap();
            assert!(led.total_initial().is_zero(), "{name}");
            assert!(led.total_final().is_zero(), "{name}");
            assert_eq!(led.replay(), led.final_charge, "{name}");
        }
    }

    #[test]
    fn c4_rejected() {
        assert!(matches!(discharge(&id(fixtures::c4())), Err(DischargeError::NotInClassG(_))));
    }

    #[test]
    fn special_aggregation_matches_vertex_sum() {
        let g = fixtures::special_h();
        let led = discharge(&id(g.clone())).unwrap();
        assert_eq!(led.specials.len(), 1);
        let h = h_counts(&g, &special_subgraphs(&g));
        let direct: Charge = g.vertices().filter(|&v| h[v] > 0).map(|v| led.initial[v]).sum();
        assert_eq!(led.specials[0].ch, direct);
        let direct: Charge = g.vertices().filter(|&v| h[v] > 0).map(|v| led.final_charge[v]).sum();
        assert_eq!(led.specials[0].ch_star, direct);
    }

    #[test]
    fn string_rate_on_six_face() {
        assert_eq!(string_rate(6, false), c(7, 39));
        assert!(string_rate(6, false) <= c(7, 26));
        assert_eq!(string_rate(5, true), Charge::zero());
        assert_eq!(string_rate(13, false), Charge::zero());
    }

    #[test]
    fn bad_triangle_sign_changes_r7() {
        let b = fixtures::bad_path();
        let lg = id(b.graph.clone());
        let led = discharge(&lg).unwrap();
        assert!(led.transfers.iter().any(|t| t.rule == Rule::R7));
        let mut neg = lg.clone();
        neg.set_arc(b.u, b.v, "213".parse::<Perm>().unwrap()).unwrap();
        let led = discharge(&neg).unwrap();
        assert!(led.transfers.iter().all(|t| t.rule != Rule::R7));
        assert!(led.total_final().is_zero());
    }

    #[test]
    fn meta_audit_needs_a_failed_predicate() {
        let v = meta_audit(&id(fixtures::special_h()), None).unwrap();
        assert!(v.failed.contains(&Predicate::BoundaryChordless));
        assert!(!v.failed.is_empty());
        assert!(v.consistent());
        let r = meta_audit(&id(PlaneGraph::cycle(5)), None);
        assert!(matches!(r, Err(DischargeError::PreconditionFailed(_))));
        let r = meta_audit(&id(fixtures::dodecahedron()), None);
        assert!(matches!(r, Err(DischargeError::NotInClassG(_))));
    }

    #[test]
    fn light_pentagon_flags_predicate() {
        let lg = id(fixtures::light_pentagon().graph);
        let led = discharge(&lg).unwrap();
        let report = audit_claims(&lg, &led).unwrap();
        assert!(!report.predicates.as_ref().unwrap().get(Predicate::NoLightPentagon));
        assert!(report.unexplained().is_empty());
    }
}
