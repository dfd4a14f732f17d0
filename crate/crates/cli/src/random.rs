//! Deterministic random graphs for the structural identity suite.
//!
//! Every graph is simple, connected, and twin-free (no two vertices share
//! the same open neighborhood). Twins produce equal blocks, which the
//! distinct-block linear dimension deliberately ignores, so the linearity
//! criterion is stated for twin-free inputs. About a third of the sample
//! is bipartite.

use nbgeom_core::graphs::{connected_components, is_bipartite, Multigraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use std::collections::BTreeSet;

fn is_twin_free(g: &Multigraph) -> bool {
    let mut seen = BTreeSet::new();
    (0..g.vertex_count()).all(|v| seen.insert(g.neighbors(v)))
}

/// Joins components with random edges. Once every vertex has positive
/// degree, every component contains both sides, so a cross-side join is
/// always available in the bipartite case.
fn connect(g: &mut Multigraph, rng: &mut ChaCha8Rng, side: Option<&[u8]>) {
    loop {
        let comps = connected_components(g);
        if comps.len() <= 1 {
            return;
        }
        let pick = |rng: &mut ChaCha8Rng, comp: &[usize], want: Option<u8>| -> usize {
            let pool: Vec<usize> = comp
                .iter()
                .copied()
                .filter(|&v| want.map_or(true, |s| side.unwrap()[v] == s))
                .collect();
            pool[rng.gen_range(0..pool.len())]
        };
        let (u, w) = match side {
            None => (pick(rng, &comps[0], None), pick(rng, &comps[1], None)),
            Some(_) => (pick(rng, &comps[0], Some(0)), pick(rng, &comps[1], Some(1))),
        };
        g.add_edge(u, w);
    }
}

fn random_connected(rng: &mut ChaCha8Rng, bipartite: bool) -> Option<Multigraph> {
    let n = rng.gen_range(5..=24);
    let density = [0.12, 0.2, 0.35][rng.gen_range(0..3)];
    let mut g = Multigraph::new(n);
    let sides: Vec<u8> = if bipartite {
        let a = rng.gen_range(2..=(n - 2));
        (0..n).map(|v| u8::from(v >= a)).collect()
    } else {
        vec![0; n]
    };
    for u in 0..n {
        for w in (u + 1)..n {
            if bipartite && sides[u] == sides[w] {
                continue;
            }
            if rng.gen_bool(density) {
                g.add_edge(u, w);
            }
        }
    }
    for v in 0..n {
        if g.degree(v) == 0 {
            let w = loop {
                let w = rng.gen_range(0..n);
                if w != v && (!bipartite || sides[w] != sides[v]) {
                    break w;
                }
            };
            g.add_edge(v, w);
        }
    }
    connect(&mut g, rng, bipartite.then_some(sides.as_slice()));
    if !is_twin_free(&g) {
        return None;
    }
    if bipartite != is_bipartite(&g).is_some() {
        return None;
    }
    Some(g)
}

/// The i-th structural test graph. Deterministic in i.
pub fn structural_graph(i: usize) -> Multigraph {
    let bipartite = i % 3 == 0;
    for attempt in 0..1000u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(0x6E62_6700 + (i as u64) * 1009 + attempt);
        if let Some(g) = random_connected(&mut rng, bipartite) {
            return g;
        }
    }
    unreachable!("no twin-free sample after 1000 attempts");
}

/// The full deterministic sample for the structural suite.
pub fn structural_graphs(count: usize) -> Vec<(String, Multigraph)> {
    (0..count)
        .map(|i| (format!("random-{i:02}"), structural_graph(i)))
        .collect()
}
