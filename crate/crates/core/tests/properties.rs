//! Property tests over randomly generated permutations, graphs, and disk
//! points.

use nbgeom_core::configs::{
    dual, is_isomorphic, levi_graph, natural_polarity_holds, neighborhood_geometry, summarize,
};
use nbgeom_core::graphs::{
    automorphism_group, connected_components, graph_isomorphic, has_four_cycle, is_bipartite,
    kronecker_cover, relabel, Multigraph,
};
use nbgeom_core::hyperbolic::{geodesic_arc, hyperbolic_distance};
use nbgeom_core::perm::{closure, orbits, Perm, StabChain};
use proptest::prelude::*;

/// Fisher–Yates driven by a splitmix-style generator, so strategies need
/// only a u64 seed.
fn perm_from_seed(n: usize, seed: u64) -> Perm {
    let mut state = seed;
    let mut next = move || {
        state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    };
    let mut images: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        images.swap(i, (next() % (i as u64 + 1)) as usize);
    }
    Perm::from_images(images).unwrap()
}

fn arb_perm(n: usize) -> impl Strategy<Value = Perm> {
    any::<u64>().prop_map(move |seed| perm_from_seed(n, seed))
}

fn arb_gens(n: usize, count: usize) -> impl Strategy<Value = Vec<Perm>> {
    proptest::collection::vec(arb_perm(n), 1..=count)
}

/// Random multigraph on 1..=10 vertices with possible loops and parallel
/// edges.
fn arb_multigraph() -> impl Strategy<Value = Multigraph> {
    (1usize..=10).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..=18)
            .prop_map(move |pairs| Multigraph::from_edge_list(n, &pairs))
    })
}

/// Random simple graph on 2..=9 vertices with no isolated vertex.
fn arb_simple_covered() -> impl Strategy<Value = Multigraph> {
    (2usize..=9)
        .prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n), 1..=16).prop_map(move |pairs| {
                let mut g = Multigraph::new(n);
                for (u, w) in pairs {
                    if u != w && !g.adjacent(u, w) {
                        g.add_edge(u, w);
                    }
                }
                for v in 0..n {
                    if g.degree(v) == 0 {
                        g.add_edge(v, (v + 1) % n);
                    }
                }
                g
            })
        })
        .prop_filter("needs an edge", |g| g.edge_count() > 0)
}

fn is_twin_free(g: &Multigraph) -> bool {
    let n = g.vertex_count();
    for u in 0..n {
        for w in (u + 1)..n {
            if g.neighbors(u) == g.neighbors(w) {
                return false;
            }
        }
    }
    true
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn orbits_partition_the_domain(gens in arb_gens(7, 3)) {
        let parts = orbits(&gens, 7);
        let mut seen = vec![false; 7];
        for part in &parts {
            for &x in part {
                prop_assert!(!seen[x]);
                seen[x] = true;
            }
        }
        prop_assert!(seen.iter().all(|&s| s));
        for part in &parts {
            for g in &gens {
                for &x in part {
                    prop_assert!(part.contains(&g.apply(x)));
                }
            }
        }
    }

    #[test]
    fn chain_order_matches_closure_count(gens in arb_gens(5, 2)) {
        let chain = StabChain::new(5, &gens);
        let all = closure(&gens, 5, 1000).unwrap();
        prop_assert_eq!(chain.order(), all.len() as u128);
        for g in &all {
            prop_assert!(chain.contains(g));
        }
    }

    #[test]
    fn kronecker_cover_is_bipartite(g in arb_multigraph()) {
        let cover = kronecker_cover(&g);
        prop_assert!(is_bipartite(&cover).is_some());
        prop_assert_eq!(cover.vertex_count(), 2 * g.vertex_count());
    }

    #[test]
    fn kronecker_cover_connectivity(g in arb_multigraph()) {
        let cover = kronecker_cover(&g);
        let connected = connected_components(&g).len() == 1;
        let cover_connected = connected_components(&cover).len() == 1;
        let expected = connected && is_bipartite(&g).is_none();
        prop_assert_eq!(cover_connected, expected);
    }

    #[test]
    fn isomorphism_is_reflexive_under_relabeling(
        g in arb_multigraph(),
        seed in any::<u64>(),
    ) {
        let p = perm_from_seed(g.vertex_count(), seed);
        let h = relabel(&g, &p);
        prop_assert!(graph_isomorphic(&g, &h).is_some());
        prop_assert!(graph_isomorphic(&h, &g).is_some());
    }

    #[test]
    fn isomorphism_mapping_preserves_multiplicity(g in arb_multigraph()) {
        match graph_isomorphic(&g, &g) {
            Some(m) => {
                for (u, w, mult) in g.edges() {
                    prop_assert_eq!(g.multiplicity(m[u], m[w]), mult);
                }
            }
            None => prop_assert!(false, "a graph is isomorphic to itself"),
        }
    }

    #[test]
    fn automorphism_order_is_relabel_invariant(
        g in arb_multigraph(),
        seed in any::<u64>(),
    ) {
        let p = perm_from_seed(g.vertex_count(), seed);
        let report = automorphism_group(&g).unwrap();
        let relabeled = automorphism_group(&relabel(&g, &p)).unwrap();
        prop_assert_eq!(report.order, relabeled.order);
        let mut degrees = g.degree_sequence();
        degrees.sort_unstable();
        for a in &report.generators {
            let mut permuted: Vec<usize> =
                (0..g.vertex_count()).map(|v| g.degree(a.apply(v))).collect();
            permuted.sort_unstable();
            prop_assert_eq!(&permuted, &degrees);
        }
    }

    #[test]
    fn neighborhood_geometry_always_naturally_polar(g in arb_simple_covered()) {
        let c = neighborhood_geometry(&g).unwrap();
        prop_assert!(natural_polarity_holds(&c).unwrap());
    }

    #[test]
    fn levi_graph_is_the_kronecker_cover(g in arb_simple_covered()) {
        let c = neighborhood_geometry(&g).unwrap();
        prop_assert!(graph_isomorphic(&levi_graph(&c), &kronecker_cover(&g)).is_some());
    }

    #[test]
    fn linearity_matches_four_cycle_freeness(
        g in arb_simple_covered().prop_filter("twin-free", is_twin_free),
    ) {
        let c = neighborhood_geometry(&g).unwrap();
        let s = summarize(&c);
        prop_assert_eq!(s.linear, !has_four_cycle(&g));
    }

    #[test]
    fn dual_of_dual_is_isomorphic(g in arb_simple_covered()) {
        let c = neighborhood_geometry(&g).unwrap();
        prop_assert!(is_isomorphic(&dual(&dual(&c)), &c).is_some());
    }

    #[test]
    fn geodesic_arcs_orthogonal_to_boundary(
        ax in -0.8f64..0.8, ay in -0.8f64..0.8,
        bx in -0.8f64..0.8, by in -0.8f64..0.8,
    ) {
        prop_assume!(ax * ax + ay * ay < 0.81);
        prop_assume!(bx * bx + by * by < 0.81);
        prop_assume!((ax - bx).abs() + (ay - by).abs() > 1e-6);
        if let Some(circle) = geodesic_arc((ax, ay), (bx, by)) {
            let c2 = circle.center.0 * circle.center.0 + circle.center.1 * circle.center.1;
            prop_assert!((c2 - circle.radius * circle.radius - 1.0).abs() < 1e-6);
        }
    }

    #[test]
    fn hyperbolic_distance_is_a_metric_sample(
        ax in -0.8f64..0.8, ay in -0.8f64..0.8,
        bx in -0.8f64..0.8, by in -0.8f64..0.8,
    ) {
        prop_assume!(ax * ax + ay * ay < 0.81);
        prop_assume!(bx * bx + by * by < 0.81);
        let d_ab = hyperbolic_distance((ax, ay), (bx, by));
        let d_ba = hyperbolic_distance((bx, by), (ax, ay));
        prop_assert!((d_ab - d_ba).abs() < 1e-12);
        prop_assert!(d_ab >= 0.0);
        let through_origin = hyperbolic_distance((ax, ay), (0.0, 0.0))
            + hyperbolic_distance((0.0, 0.0), (bx, by));
        prop_assert!(d_ab <= through_origin + 1e-12);
    }
}
