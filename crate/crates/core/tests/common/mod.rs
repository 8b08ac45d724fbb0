#![allow(dead_code)]

use dpcolor::generate::{generate, GenConfig};
use dpcolor::labelling::LabelledGraph;
use dpcolor::perm::Perm;
use dpcolor::PlaneGraph;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Tries every one of the k^n colourings.
pub fn brute_force_colorable(lg: &LabelledGraph) -> bool {
    let g = lg.graph();
    let (n, k) = (g.n_vertices(), lg.k() as u8);
    let arcs: Vec<(usize, usize, Perm)> = g.edges().iter().map(|&(x, y)| (x, y, lg.perm_along(x, y))).collect();
    let mut c = vec![0u8; n];
    loop {
        if arcs.iter().all(|(x, y, p)| p.apply(c[*x]) != c[*y]) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            c[i] += 1;
            if c[i] < k {
                break;
            }
            c[i] = 0;
            i += 1;
        }
    }
}

pub fn random_perm(k: usize, rng: &mut ChaCha8Rng) -> Perm {
    let mut images: Vec<u8> = (0..k as u8).collect();
    images.shuffle(rng);
    Perm::from_images(&images).unwrap()
}

pub fn random_labelling(g: &PlaneGraph, k: usize, rng: &mut ChaCha8Rng) -> LabelledGraph {
    let arcs: Vec<_> = g.edges().iter().map(|&(x, y)| (x, y, random_perm(k, rng))).collect();
    LabelledGraph::from_arcs(g.clone(), k, arcs).unwrap()
}

/// A generated graph with `lo..=hi` vertices. With `any_cycles` nothing is
/// forbidden and extra chords are added, so the graph need not be in the
/// class.
pub fn random_graph(seed: u64, lo: usize, hi: usize, any_cycles: bool, rng: &mut ChaCha8Rng) -> PlaneGraph {
    let mut cfg = GenConfig::new(rng.gen_range(lo..=hi), seed);
    if any_cycles {
        cfg.forbidden_lengths.clear();
        cfg.extra_chords = rng.gen_range(0..6);
    }
    cfg.pendant_rate = if rng.gen_bool(0.3) { 0.2 } else { 0.0 };
    generate(&cfg).unwrap()
}
