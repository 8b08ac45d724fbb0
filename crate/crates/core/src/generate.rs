//! Random plane graphs avoiding given cycle lengths, grown by splitting
//! faces with paths. The distribution is not uniform; it is meant for
//! coverage.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::cycles::path_lengths_between;
use crate::plane_graph::{PlaneGraph, FORBIDDEN_LENGTHS};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("no admissible split found in {0} attempts")]
    AttemptsExhausted(usize),
    #[error("forbidden lengths must lie in 3..=13, got {0}")]
    BadForbidden(usize),
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenConfig {
    pub target_vertices: usize,
    pub forbidden_lengths: BTreeSet<usize>,
    pub seed: u64,
    pub max_attempts: usize,
    /// Extra chords tried once the vertex target is reached.
    pub extra_chords: usize,
    /// Chance of hanging a pendant vertex instead of splitting a face.
    pub pendant_rate: f64,
}

impl GenConfig {
    pub fn new(target_vertices: usize, seed: u64) -> Self {
        GenConfig {
            target_vertices,
            forbidden_lengths: FORBIDDEN_LENGTHS.into_iter().collect(),
            seed,
            max_attempts: 10_000,
            extra_chords: 2,
            pendant_rate: 0.0,
        }
    }
}

const MAX_PATH: usize = 5;
/// Failed splits in a row before a pendant vertex is hung instead.
const STALL_LIMIT: usize = 500;

/// Grows a connected plane graph on exactly `target_vertices` vertices with
/// no cycle of a forbidden length. Deterministic in the config.
pub fn generate(cfg: &GenConfig) -> Result<PlaneGraph, GenError> {
    if let Some(&bad) = cfg.forbidden_lengths.iter().find(|&&l| !(3..=13).contains(&l)) {
        return Err(GenError::BadForbidden(bad));
    }
    let n = cfg.target_vertices.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let allowed = |l: usize| !cfg.forbidden_lengths.contains(&l);
    let max_forbidden = cfg.forbidden_lengths.iter().copied().max().unwrap_or(0);
    let creates_forbidden = |g: &PlaneGraph, a, b, added: usize| {
        if max_forbidden < added {
            return false;
        }
        let mask = path_lengths_between(g, a, b, max_forbidden - added, &[]);
        cfg.forbidden_lengths.iter().any(|&l| l > added && mask >> (l - added) & 1 == 1)
    };

    let mut g = match (3..=n).find(|&l| allowed(l) || l > 13) {
        Some(l) => PlaneGraph::cycle(l),
        None => PlaneGraph::path(n),
    };
    let mut attempts = 0;
    let mut stalled = 0;
    while g.n_vertices() < n {
        if attempts >= cfg.max_attempts {
            return Err(GenError::AttemptsExhausted(attempts));
        }
        attempts += 1;
        let remaining = n - g.n_vertices();
        if g.n_edges() == 0 {
            g = PlaneGraph::path(2);
            continue;
        }
        if stalled >= STALL_LIMIT || rng.gen_bool(cfg.pendant_rate) {
            let v = rng.gen_range(0..g.n_vertices());
            let w = g.rotation(v)[0];
            if let Ok((h, _)) = g.attach_path((w, v), v, 1) {
                g = h;
                stalled = 0;
            }
            continue;
        }
        let k = rng.gen_range(1..=remaining.min(MAX_PATH));
        match try_split(&g, &mut rng, k, &creates_forbidden) {
            Some(h) => {
                g = h;
                stalled = 0;
            }
            None => stalled += 1,
        }
    }
    let mut tries = 0;
    let mut added = 0;
    while added < cfg.extra_chords && tries < cfg.max_attempts.min(200) {
        tries += 1;
        if let Some(h) = try_split(&g, &mut rng, 0, &creates_forbidden) {
            g = h;
            added += 1;
        }
    }
    if g.n_edges() > 0 {
        let d = rng.gen_range(0..g.n_darts());
        let info = g.dart_info(d);
        g = g.with_outer(info.tail, info.head).expect("existing dart");
    }
    Ok(g)
}

/// Inserts a path with `k` new vertices between two corners of one face,
/// unless it would close a forbidden cycle.
fn try_split(
    g: &PlaneGraph,
    rng: &mut ChaCha8Rng,
    k: usize,
    creates_forbidden: &impl Fn(&PlaneGraph, usize, usize, usize) -> bool,
) -> Option<PlaneGraph> {
    let f = rng.gen_range(0..g.n_faces());
    let walk = g.face_walk(f);
    if walk.len() < 2 {
        return None;
    }
    let mut corners: Vec<usize> = walk.to_vec();
    corners.shuffle(rng);
    let (ca, cb) = (corners[0], *corners.get(1)?);
    let (a, b) = (g.dart_info(ca).head, g.dart_info(cb).head);
    if a == b || (k == 0 && g.has_edge(a, b)) {
        return None;
    }
    if creates_forbidden(g, a, b, k + 1) {
        return None;
    }
    g.insert_path_at_corners(ca, cb, k).ok().map(|(h, _)| h)
}
