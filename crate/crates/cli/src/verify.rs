//! The verification suite: every published claim about the catalog
//! objects, checked from scratch. Shared between `nbgeom verify` and the
//! acceptance tests.

use std::time::Instant;

use nbgeom_core::configs::{
    automorphism_order, concurrence_counts, deficiency_graph, find_polarity,
    generalized_pentagonal_check, is_isomorphic, levi_graph, moore_graph_check,
    natural_polarity_holds, neighborhood_geometry, pentagonal_check, remove_point_and_opposite,
    split_components, summarize, Configuration,
};
use nbgeom_core::graphs::{
    automorphism_group, cycle, generalized_petersen, girth, graph_isomorphic, has_four_cycle,
    hoffman_singleton, is_bipartite, kronecker_cover, paley, rook, Multigraph,
};
use nbgeom_core::hyperbolic::{
    build_patch, edge_length, hyperbolic_distance, neighbor_circle, render_svg, RenderOptions,
    TilingSpec,
};
use nbgeom_core::maps::{
    build_yp_map, dual_map, pgonal_elements, pgonal_quotient, underlying_graph, RegularMap,
};

use crate::catalog::{build_bolza_map, build_bring_map, build_klein_map, catalog_graphs};
use crate::fmt_sig;
use crate::random::structural_graphs;

#[derive(Debug, Clone)]
pub struct Claim {
    pub id: String,
    pub anchor: String,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
    pub millis: u128,
}

/// Runs one claim: pass ⟺ the observed report matches the expected one
/// exactly. Numeric claims fold their tolerance into the report text.
fn claim(
    out: &mut Vec<Claim>,
    id: &str,
    anchor: &str,
    expected: &str,
    check: impl FnOnce() -> String,
) {
    let start = Instant::now();
    let observed = check();
    out.push(Claim {
        id: id.to_string(),
        anchor: anchor.to_string(),
        expected: expected.to_string(),
        observed: observed.clone(),
        pass: observed == expected,
        millis: start.elapsed().as_millis(),
    });
}

fn map_counts(m: &RegularMap) -> String {
    format!(
        "V={} E={} F={} genus={}",
        m.vertex_count(),
        m.edge_count(),
        m.face_count(),
        m.genus()
    )
}

/// Short signature of a balanced configuration: v_r with the linear
/// dimension, e.g. "56_3 d=1".
fn config_signature(c: &Configuration) -> String {
    let s = summarize(c);
    let r = s
        .r
        .uniform()
        .map_or_else(|| String::from("?"), |r| r.to_string());
    let k = s
        .k
        .uniform()
        .map_or_else(|| String::from("?"), |k| k.to_string());
    let d = s
        .linear_dimension
        .value()
        .map_or_else(|| String::from("degenerate"), |d| format!("d={d}"));
    if s.balanced_vr {
        format!("{}_{} {}", s.v, r, d)
    } else {
        format!("v={} b={} r={} k={} {}", s.v, s.b, r, k, d)
    }
}

fn geometry_of(m: &RegularMap) -> Configuration {
    neighborhood_geometry(&underlying_graph(m)).unwrap()
}

/// Klein suite: the genus-3 type {3,7} map and its 56_3 and 24_7
/// geometries.
pub fn suite_klein() -> Vec<Claim> {
    let mut out = Vec::new();
    let m = build_klein_map().unwrap();
    claim(
        &mut out,
        "1.01-klein-counts",
        "Klein map: 56 vertices of valency 3, 84 edges, 24 heptagonal faces, genus 3",
        "V=56 E=84 F=24 genus=3",
        || map_counts(&m),
    );
    let c = geometry_of(&m);
    claim(
        &mut out,
        "1.02-klein-geometry",
        "its neighborhood geometry is a linear 56_3 configuration",
        "56_3 d=1 linear",
        || {
            let s = summarize(&c);
            format!(
                "{}{}",
                config_signature(&c),
                if s.linear { " linear" } else { " not linear" }
            )
        },
    );
    claim(
        &mut out,
        "1.03-klein-natural-polarity",
        "the identity correspondence point i <-> block i is a polarity",
        "natural polarity holds",
        || {
            if natural_polarity_holds(&c).unwrap() {
                String::from("natural polarity holds")
            } else {
                String::from("natural polarity fails")
            }
        },
    );
    let dual = dual_map(&m).unwrap();
    let dc = geometry_of(&dual);
    claim(
        &mut out,
        "1.04-klein-dual-geometry",
        "the dual 24_7 geometry has linear dimension 2",
        "24_7 d=2",
        || config_signature(&dc),
    );
    claim(
        &mut out,
        "1.05-klein-dual-concurrence",
        "in the 24_7 geometry every point has exactly 2 zero-concurrence points and 21 of concurrence exactly 2",
        "every point: 2 zeros, 21 twos",
        || {
            for x in 0..dc.point_count() {
                let counts = concurrence_counts(&dc, x).unwrap();
                let zeros = counts
                    .iter()
                    .enumerate()
                    .filter(|&(j, &c)| j != x && c == 0)
                    .count();
                let twos = counts.iter().filter(|&&c| c == 2).count();
                if zeros != 2 || twos != 21 {
                    return format!("point {x}: {zeros} zeros, {twos} twos");
                }
            }
            String::from("every point: 2 zeros, 21 twos")
        },
    );
    out
}

/// Bring suite: the genus-4 type {4,5} map, its 30_4 geometry, and the
/// 12_5 dual components.
pub fn suite_bring() -> Vec<Claim> {
    let mut out = Vec::new();
    let m = build_bring_map().unwrap();
    claim(
        &mut out,
        "2.01-bring-counts",
        "Bring map: 30 vertices of valency 4, 60 edges, 24 pentagonal faces, genus 4",
        "V=30 E=60 F=24 genus=4",
        || map_counts(&m),
    );
    let c = geometry_of(&m);
    claim(
        &mut out,
        "2.02-bring-geometry",
        "its neighborhood geometry is a linear 30_4 configuration",
        "30_4 d=1 linear",
        || {
            let s = summarize(&c);
            format!(
                "{}{}",
                config_signature(&c),
                if s.linear { " linear" } else { " not linear" }
            )
        },
    );
    let dual = dual_map(&m).unwrap();
    let comps = split_components(&geometry_of(&dual));
    claim(
        &mut out,
        "2.03-bring-dual-components",
        "the dual geometry splits into two 12_5 components of linear dimension 2",
        "2 components: 12_5 d=2, 12_5 d=2",
        || {
            let sigs: Vec<String> = comps.iter().map(config_signature).collect();
            format!("{} components: {}", comps.len(), sigs.join(", "))
        },
    );
    claim(
        &mut out,
        "2.04-bring-dual-matching",
        "in each 12_5 component every point has exactly one zero-concurrence point and the relation is a perfect matching",
        "both components: zero-concurrence is a perfect matching",
        || {
            for (i, comp) in comps.iter().enumerate() {
                let def = deficiency_graph(comp).unwrap();
                if def.is_regular() != Some(1) {
                    return format!("component {i}: deficiency graph not 1-regular");
                }
            }
            String::from("both components: zero-concurrence is a perfect matching")
        },
    );
    out
}

/// The Moebius-Kantor 8_3 configuration: blocks {i, i+1, i+3} mod 8.
fn moebius_kantor_config() -> Configuration {
    let blocks = (0..8).map(|i| vec![i, (i + 1) % 8, (i + 3) % 8]).collect();
    Configuration::new(8, blocks, None).unwrap()
}

/// Bolza suite: the genus-2 type {3,8} map, its Moebius-Kantor halves,
/// and the doubled-octahedron dual.
pub fn suite_bolza() -> Vec<Claim> {
    let mut out = Vec::new();
    let m = build_bolza_map().unwrap();
    claim(
        &mut out,
        "3.01-bolza-counts",
        "Bolza map: 16 vertices of valency 3, 24 edges, 6 octagonal faces, genus 2",
        "V=16 E=24 F=6 genus=2",
        || map_counts(&m),
    );
    let comps = split_components(&geometry_of(&m));
    claim(
        &mut out,
        "3.02-bolza-components",
        "the geometry splits into two components isomorphic to the Moebius-Kantor 8_3 configuration",
        "2 components, both isomorphic to Moebius-Kantor 8_3",
        || {
            if comps.len() != 2 {
                return format!("{} components", comps.len());
            }
            let mk = moebius_kantor_config();
            for (i, comp) in comps.iter().enumerate() {
                if is_isomorphic(comp, &mk).is_none() {
                    return format!("component {i} is not Moebius-Kantor");
                }
            }
            String::from("2 components, both isomorphic to Moebius-Kantor 8_3")
        },
    );
    claim(
        &mut out,
        "3.03-bolza-levi",
        "each component's Levi graph is the generalized Petersen graph GP(8,3)",
        "both Levi graphs isomorphic to GP(8,3)",
        || {
            let gp = generalized_petersen(8, 3).unwrap();
            for (i, comp) in comps.iter().enumerate() {
                if graph_isomorphic(&levi_graph(comp), &gp).is_none() {
                    return format!("component {i} Levi graph is not GP(8,3)");
                }
            }
            String::from("both Levi graphs isomorphic to GP(8,3)")
        },
    );
    claim(
        &mut out,
        "3.04-bolza-antipodal",
        "zero-concurrence pairs form a perfect matching, pairing antipodal points i and i+4 in the Moebius-Kantor labeling",
        "perfect matching; model pairs are {i, i+4}",
        || {
            for (i, comp) in comps.iter().enumerate() {
                let def = deficiency_graph(comp).unwrap();
                if def.is_regular() != Some(1) {
                    return format!("component {i}: not a perfect matching");
                }
            }
            let model = deficiency_graph(&moebius_kantor_config()).unwrap();
            let ok = (0..8).all(|i| model.adjacent(i, (i + 4) % 8));
            if ok {
                String::from("perfect matching; model pairs are {i, i+4}")
            } else {
                String::from("model pairs are not antipodal")
            }
        },
    );
    let dual = dual_map(&m).unwrap();
    let dc = geometry_of(&dual);
    claim(
        &mut out,
        "3.05-bolza-dual",
        "the dual geometry has 6 points and 6 blocks of size 4: 3 distinct blocks each twice, distinct pairs meeting in exactly 2 points",
        "6 points, 6 blocks of size 4, 3 distinct twice over, pairwise meets of 2",
        || {
            let s = summarize(&dc);
            if (s.v, s.b) != (6, 6) || s.k.uniform() != Some(4) {
                return format!("v={} b={} k={:?}", s.v, s.b, s.k.uniform());
            }
            let mut distinct: Vec<Vec<usize>> = dc.blocks().to_vec();
            distinct.sort();
            distinct.dedup();
            if distinct.len() != 3 {
                return format!("{} distinct blocks", distinct.len());
            }
            for b in &distinct {
                if dc.blocks().iter().filter(|x| *x == b).count() != 2 {
                    return String::from("a distinct block does not repeat twice");
                }
            }
            for i in 0..distinct.len() {
                for j in (i + 1)..distinct.len() {
                    let meet = distinct[i]
                        .iter()
                        .filter(|x| distinct[j].contains(x))
                        .count();
                    if meet != 2 {
                        return format!("blocks {i},{j} meet in {meet} points");
                    }
                }
            }
            String::from("6 points, 6 blocks of size 4, 3 distinct twice over, pairwise meets of 2")
        },
    );
    out
}

/// Pentagonal suite: the three known diameter-2 Moore graphs and their
/// pentagonal geometries.
pub fn suite_pentagonal() -> Vec<Claim> {
    let mut out = Vec::new();
    let trio: Vec<(&str, Multigraph, usize)> = vec![
        ("cycle(5)", cycle(5).unwrap(), 2),
        ("GP(5,2)", generalized_petersen(5, 2).unwrap(), 3),
        ("Hoffman-Singleton", hoffman_singleton(), 7),
    ];
    claim(
        &mut out,
        "4.01-moore-check",
        "cycle(5), the Petersen graph, and the Hoffman-Singleton graph are diameter-2 Moore graphs",
        "all three pass the Moore graph check",
        || {
            for (name, g, _) in &trio {
                if !moore_graph_check(g) {
                    return format!("{name} fails the Moore graph check");
                }
            }
            String::from("all three pass the Moore graph check")
        },
    );
    claim(
        &mut out,
        "4.02-pentagonal-geometries",
        "their neighborhood geometries are pentagonal with (r,k) = (2,2), (3,3), (7,7); the last has 50 points and 50 lines",
        "5_2, 10_3, 50_7: all pentagonal",
        || {
            let mut sigs = Vec::new();
            for (name, g, r) in &trio {
                let c = neighborhood_geometry(g).unwrap();
                let s = summarize(&c);
                if !s.balanced_vr || s.r.uniform() != Some(*r) || s.v != r * r + 1 {
                    return format!("{name}: unexpected parameters");
                }
                if !pentagonal_check(&c).holds {
                    return format!("{name}: not pentagonal");
                }
                sigs.push(format!("{}_{}", s.v, r));
            }
            format!("{}: all pentagonal", sigs.join(", "))
        },
    );
    claim(
        &mut out,
        "4.03-deficiency-recovery",
        "the deficiency graph of each geometry recovers the Moore graph",
        "all three deficiency graphs isomorphic to their source",
        || {
            for (name, g, _) in &trio {
                let c = neighborhood_geometry(g).unwrap();
                let def = deficiency_graph(&c).unwrap();
                if graph_isomorphic(&def, g).is_none() {
                    return format!("{name}: deficiency graph differs from the source");
                }
            }
            String::from("all three deficiency graphs isomorphic to their source")
        },
    );
    claim(
        &mut out,
        "4.04-hosi-removal",
        "removing a point of the 50_7 geometry together with its opposite line leaves a pentagonal geometry with 42 points, lines of size 6, and 7 lines per point",
        "42 points, r=7, k=6, pentagonal",
        || {
            let c = neighborhood_geometry(&hoffman_singleton()).unwrap();
            let removed = remove_point_and_opposite(&c, 0).unwrap();
            let s = summarize(&removed);
            let pent = pentagonal_check(&removed).holds;
            format!(
                "{} points, r={}, k={}, {}",
                s.v,
                s.r.uniform().map_or(-1i64, |r| r as i64),
                s.k.uniform().map_or(-1i64, |k| k as i64),
                if pent { "pentagonal" } else { "not pentagonal" }
            )
        },
    );
    out
}

fn yp_suite_for(p: usize, base: usize, out: &mut Vec<Claim>) {
    let m = build_yp_map(p).unwrap();
    let tag = format!("Y_{p}");
    claim(
        out,
        &format!("5.{:02}-y{}-counts", base, p),
        &format!("{tag}: map of type {{4,{}}} with 2p^2 vertices, 4p^2 edges, 4p faces, genus (p-1)^2", 2 * p),
        &format!(
            "V={} E={} F={} genus={}",
            2 * p * p,
            4 * p * p,
            4 * p,
            (p - 1) * (p - 1)
        ),
        || map_counts(&m),
    );
    let g = underlying_graph(&m);
    claim(
        out,
        &format!("5.{:02}-y{}-graph", base + 1, p),
        &format!("{tag}: underlying graph bipartite, 4-regular, girth 4"),
        "bipartite 4-regular girth 4",
        || {
            format!(
                "{} {}-regular girth {}",
                if is_bipartite(&g).is_some() {
                    "bipartite"
                } else {
                    "not bipartite"
                },
                g.is_regular().map_or(0, |d| d),
                girth(&g).map_or(0, |x| x)
            )
        },
    );
    let comps = split_components(&neighborhood_geometry(&g).unwrap());
    claim(
        out,
        &format!("5.{:02}-y{}-component", base + 2, p),
        &format!("{tag}: each geometry component is a self-polar (p^2)_4 configuration with d=2 and automorphism order divisible by 8p^2"),
        "2 components, (p^2)_4 d=2, self-polar, aut order divisible by 8p^2",
        || {
            if comps.len() != 2 {
                return format!("{} components", comps.len());
            }
            for (i, comp) in comps.iter().enumerate() {
                if config_signature(comp) != format!("{}_4 d=2", p * p) {
                    return format!("component {i}: {}", config_signature(comp));
                }
                if find_polarity(comp).unwrap().is_none() {
                    return format!("component {i}: no polarity");
                }
                let aut = automorphism_order(comp).unwrap();
                if aut % (8 * p * p) as u128 != 0 {
                    return format!("component {i}: aut order {aut}");
                }
            }
            String::from("2 components, (p^2)_4 d=2, self-polar, aut order divisible by 8p^2")
        },
    );
    claim(
        out,
        &format!("5.{:02}-y{}-quotients", base + 3, p),
        &format!("{tag}: the two p-gonal automorphisms give quotient graphs isomorphic to cycle(2p) whose geometry components are p_2 configurations with 2p-cycle Levi graphs"),
        "both quotients: cycle(2p); components p_2 with cycle(2p) Levi graphs",
        || {
            let (h1, h2) = pgonal_elements(&m).unwrap();
            let target = cycle(2 * p).unwrap();
            for (i, h) in [h1, h2].iter().enumerate() {
                let q = pgonal_quotient(&m, h).unwrap();
                if graph_isomorphic(&q, &target).is_none() {
                    return format!("quotient {i} is not cycle({})", 2 * p);
                }
                let qcomps = split_components(&neighborhood_geometry(&q).unwrap());
                if qcomps.len() != 2 {
                    return format!("quotient {i}: {} components", qcomps.len());
                }
                for comp in &qcomps {
                    let s = summarize(comp);
                    if (s.v, s.b, s.r.uniform()) != (p, p, Some(2)) {
                        return format!("quotient {i}: component is not p_2");
                    }
                    if graph_isomorphic(&levi_graph(comp), &target).is_none() {
                        return format!("quotient {i}: Levi graph is not cycle({})", 2 * p);
                    }
                }
            }
            String::from("both quotients: cycle(2p); components p_2 with cycle(2p) Levi graphs")
        },
    );
    if p == 3 {
        let comp = comps[0].clone();
        claim(
            out,
            &format!("5.{:02}-y3-concurrence", base + 4),
            "Y_3: every pair of distinct points of the 9_4 component has concurrence 1 or 2",
            "all pairwise concurrences in {1, 2}",
            || {
                for x in 0..comp.point_count() {
                    let counts = concurrence_counts(&comp, x).unwrap();
                    for (j, &c) in counts.iter().enumerate() {
                        if j != x && c != 1 && c != 2 {
                            return format!("points {x},{j}: concurrence {c}");
                        }
                    }
                }
                String::from("all pairwise concurrences in {1, 2}")
            },
        );
        claim(
            out,
            &format!("5.{:02}-y3-generalized", base + 5),
            "Y_3: the 9_4 component satisfies the generalized pentagonal property with d=2 and the count identity 9 = 1 + 16/2",
            "generalized pentagonal d=2; 9 = 1 + 16/2",
            || {
                let rep = generalized_pentagonal_check(&comp, 2).unwrap();
                if !rep.holds {
                    return String::from("generalized pentagonal check fails");
                }
                if rep.count_identity != Some(true) {
                    return format!("count identity: {:?}", rep.count_identity);
                }
                String::from("generalized pentagonal d=2; 9 = 1 + 16/2")
            },
        );
        claim(
            out,
            &format!("5.{:02}-y3-rook", base + 6),
            "Y_3: the component is isomorphic to the neighborhood geometry of the 3x3 rook's graph",
            "component isomorphic to the rook(3,3) geometry",
            || {
                let rg = neighborhood_geometry(&rook(3, 3).unwrap()).unwrap();
                if is_isomorphic(&comp, &rg).is_some() {
                    String::from("component isomorphic to the rook(3,3) geometry")
                } else {
                    String::from("component differs from the rook(3,3) geometry")
                }
            },
        );
    }
}

/// Y_p suite for p in {3, 5, 7}: counts, geometry components, p-gonal
/// quotients, and the rook identification at p = 3.
pub fn suite_yp() -> Vec<Claim> {
    let mut out = Vec::new();
    yp_suite_for(3, 1, &mut out);
    yp_suite_for(5, 8, &mut out);
    yp_suite_for(7, 12, &mut out);
    out
}

/// Kronecker cover of Paley(13): a candidate match for a d=3 generalized
/// pentagonal geometry, not an identification with a census entry.
pub fn suite_cover_candidate() -> Vec<Claim> {
    let mut out = Vec::new();
    let g = kronecker_cover(&paley(13).unwrap());
    claim(
        &mut out,
        "6.01-cover-counts",
        "the Kronecker cover of Paley(13) has 26 vertices and is 6-regular",
        "26 vertices, 6-regular",
        || {
            format!(
                "{} vertices, {}-regular",
                g.vertex_count(),
                g.is_regular().map_or(0, |d| d)
            )
        },
    );
    claim(
        &mut out,
        "6.02-cover-symmetry",
        "the cover is arc-transitive with automorphism group of order 156",
        "arc-transitive, aut order 156",
        || {
            let rep = automorphism_group(&g).unwrap();
            format!(
                "{}, aut order {}",
                if rep.arc_transitive {
                    "arc-transitive"
                } else {
                    "not arc-transitive"
                },
                rep.order
            )
        },
    );
    let comps = split_components(&neighborhood_geometry(&g).unwrap());
    claim(
        &mut out,
        "6.03-cover-generalized",
        "each 13-point component passes the generalized pentagonal check with d=3 (candidate match, not a census identity)",
        "2 components of 13 points, both generalized pentagonal with d=3",
        || {
            if comps.len() != 2 {
                return format!("{} components", comps.len());
            }
            for (i, comp) in comps.iter().enumerate() {
                if comp.point_count() != 13 {
                    return format!("component {i}: {} points", comp.point_count());
                }
                if !generalized_pentagonal_check(comp, 3).unwrap().holds {
                    return format!("component {i}: check fails");
                }
            }
            String::from("2 components of 13 points, both generalized pentagonal with d=3")
        },
    );
    claim(
        &mut out,
        "6.04-cover-count-identity",
        "the components satisfy the count identity 13 = 1 + 36/3",
        "count identity holds in both components",
        || {
            for (i, comp) in comps.iter().enumerate() {
                let rep = generalized_pentagonal_check(comp, 3).unwrap();
                if rep.count_identity != Some(true) {
                    return format!("component {i}: {:?}", rep.count_identity);
                }
            }
            String::from("count identity holds in both components")
        },
    );
    out
}

/// Structural identities over the catalog graphs and 50 deterministic
/// random graphs: linearity vs 4-cycles, the Levi/Kronecker identity,
/// natural polarity, and bipartite component duality.
pub fn suite_structural() -> Vec<Claim> {
    let mut out = Vec::new();
    let mut inputs: Vec<(String, Multigraph)> = catalog_graphs()
        .into_iter()
        .map(|(n, g)| (n.to_string(), g))
        .collect();
    inputs.extend(structural_graphs(50));
    let total = inputs.len();
    claim(
        &mut out,
        "7.01-linearity-criterion",
        "a twin-free graph's neighborhood geometry is linear exactly when the graph has no 4-cycle",
        &format!("{total}/{total} graphs"),
        || {
            let mut ok = 0;
            let mut witness = None;
            for (name, g) in &inputs {
                let linear = summarize(&neighborhood_geometry(g).unwrap()).linear;
                if linear == !has_four_cycle(g) {
                    ok += 1;
                } else {
                    witness.get_or_insert_with(|| name.clone());
                }
            }
            match witness {
                None => format!("{ok}/{total} graphs"),
                Some(w) => format!("{ok}/{total} graphs (first failure: {w})"),
            }
        },
    );
    claim(
        &mut out,
        "7.02-levi-kronecker",
        "the Levi graph of a neighborhood geometry is the Kronecker cover of the graph",
        &format!("{total}/{total} graphs"),
        || {
            let mut ok = 0;
            let mut witness = None;
            for (name, g) in &inputs {
                let levi = levi_graph(&neighborhood_geometry(g).unwrap());
                if graph_isomorphic(&levi, &kronecker_cover(g)).is_some() {
                    ok += 1;
                } else {
                    witness.get_or_insert_with(|| name.clone());
                }
            }
            match witness {
                None => format!("{ok}/{total} graphs"),
                Some(w) => format!("{ok}/{total} graphs (first failure: {w})"),
            }
        },
    );
    claim(
        &mut out,
        "7.03-natural-polarity",
        "the identity correspondence is a polarity of every neighborhood geometry",
        &format!("{total}/{total} graphs"),
        || {
            let mut ok = 0;
            let mut witness = None;
            for (name, g) in &inputs {
                if natural_polarity_holds(&neighborhood_geometry(g).unwrap()).unwrap() {
                    ok += 1;
                } else {
                    witness.get_or_insert_with(|| name.clone());
                }
            }
            match witness {
                None => format!("{ok}/{total} graphs"),
                Some(w) => format!("{ok}/{total} graphs (first failure: {w})"),
            }
        },
    );
    claim(
        &mut out,
        "7.04-bipartite-duality",
        "a connected bipartite graph's geometry splits into two mutually dual components",
        "all bipartite inputs split into dual pairs",
        || {
            let mut bipartite_seen = 0;
            for (name, g) in &inputs {
                if is_bipartite(g).is_none() {
                    continue;
                }
                bipartite_seen += 1;
                let comps = split_components(&neighborhood_geometry(g).unwrap());
                if comps.len() != 2 {
                    return format!("{name}: {} components", comps.len());
                }
                let dual0 = nbgeom_core::configs::dual(&comps[0]);
                if is_isomorphic(&dual0, &comps[1]).is_none() {
                    return format!("{name}: components are not dual");
                }
            }
            if bipartite_seen < 10 {
                return format!("only {bipartite_seen} bipartite inputs");
            }
            String::from("all bipartite inputs split into dual pairs")
        },
    );
    out
}

fn hyperbolic_claims_for(p: usize, q: usize, depth: usize, base: usize, out: &mut Vec<Claim>) {
    let spec = TilingSpec::new(p, q).unwrap();
    let l = edge_length(spec);
    let patch = build_patch(spec, depth).unwrap();
    let tag = format!("({p},{q}) depth {depth}");
    claim(
        out,
        &format!("8.{:02}-edges-{}-{}", base, p, q),
        &format!("{tag}: every edge has hyperbolic length edge_length = {} within 1e-9", fmt_sig(l)),
        "all edges within 1e-9 of the common length",
        || {
            let mut worst: f64 = 0.0;
            for &(u, w) in &patch.edges {
                let d = hyperbolic_distance(patch.vertex_positions[u], patch.vertex_positions[w]);
                worst = worst.max((d - l).abs());
            }
            if worst < 1e-9 {
                String::from("all edges within 1e-9 of the common length")
            } else {
                format!("max deviation {}", fmt_sig(worst))
            }
        },
    );
    claim(
        out,
        &format!("8.{:02}-circles-{}-{}", base + 1, p, q),
        &format!("{tag}: interior neighbor sets are concyclic within 1e-6 and all circles share one hyperbolic radius within 1e-9"),
        "concyclic within 1e-6; common hyperbolic radius within 1e-9",
        || {
            let mut radii = Vec::new();
            for v in 0..patch.vertex_positions.len() {
                if !patch.interior_mask[v] {
                    continue;
                }
                let circle = neighbor_circle(&patch, v).unwrap();
                for &w in &patch.adjacency[v] {
                    let (x, y) = patch.vertex_positions[w];
                    let dist = (x - circle.center.0).hypot(y - circle.center.1);
                    if (dist - circle.radius).abs() >= 1e-6 {
                        return format!("vertex {v}: concyclic residual {}", fmt_sig((dist - circle.radius).abs()));
                    }
                }
                radii.push(hyperbolic_distance(
                    patch.vertex_positions[v],
                    patch.vertex_positions[patch.adjacency[v][0]],
                ));
            }
            if radii.len() < 2 {
                return format!("only {} interior vertices", radii.len());
            }
            let spread = radii.iter().fold((f64::MAX, f64::MIN), |(lo, hi), &r| {
                (lo.min(r), hi.max(r))
            });
            if spread.1 - spread.0 < 1e-9 {
                String::from("concyclic within 1e-6; common hyperbolic radius within 1e-9")
            } else {
                format!("radius spread {}", fmt_sig(spread.1 - spread.0))
            }
        },
    );
    claim(
        out,
        &format!("8.{:02}-svg-{}-{}", base + 2, p, q),
        &format!("{tag}: the SVG output parses as XML with one path per edge and one circle per interior vertex plus the boundary"),
        "well-formed XML with the expected element counts",
        || {
            let svg = render_svg(&patch, &RenderOptions::default());
            let doc = match roxmltree::Document::parse(&svg) {
                Ok(d) => d,
                Err(e) => return format!("XML parse error: {e}"),
            };
            let paths = doc
                .descendants()
                .filter(|n| n.has_tag_name("path"))
                .count();
            let circles = doc
                .descendants()
                .filter(|n| n.has_tag_name("circle"))
                .count();
            let interior = patch.interior_mask.iter().filter(|&&b| b).count();
            if paths == patch.edges.len() && circles == interior + 1 {
                String::from("well-formed XML with the expected element counts")
            } else {
                format!(
                    "{paths} paths for {} edges, {circles} circles for {interior} interior vertices",
                    patch.edges.len()
                )
            }
        },
    );
}

/// Hyperbolic suite: isometric edges and neighbor circles for the (7,3)
/// and (4,6) tilings at depth 3, plus the SVG structure.
pub fn suite_hyperbolic() -> Vec<Claim> {
    let mut out = Vec::new();
    hyperbolic_claims_for(7, 3, 3, 1, &mut out);
    hyperbolic_claims_for(4, 6, 3, 4, &mut out);
    out
}

pub const SUITE_NAMES: [&str; 8] = [
    "klein",
    "bring",
    "bolza",
    "pentagonal",
    "yp",
    "cover-candidate",
    "structural",
    "hyperbolic",
];

pub fn run_suite(name: &str) -> Option<Vec<Claim>> {
    match name {
        "klein" => Some(suite_klein()),
        "bring" => Some(suite_bring()),
        "bolza" => Some(suite_bolza()),
        "pentagonal" => Some(suite_pentagonal()),
        "yp" => Some(suite_yp()),
        "cover-candidate" => Some(suite_cover_candidate()),
        "structural" => Some(suite_structural()),
        "hyperbolic" => Some(suite_hyperbolic()),
        _ => None,
    }
}

/// The full suite, ordered by claim id.
pub fn full_suite() -> Vec<Claim> {
    let mut claims: Vec<Claim> = SUITE_NAMES
        .iter()
        .flat_map(|name| run_suite(name).unwrap())
        .collect();
    claims.sort_by(|a, b| a.id.cmp(&b.id));
    claims
}

pub fn all_pass(claims: &[Claim]) -> bool {
    claims.iter().all(|c| c.pass)
}

/// Aligned plain-text report, one row per claim.
pub fn render_table(claims: &[Claim]) -> String {
    let id_w = claims.iter().map(|c| c.id.len()).max().unwrap_or(2).max(2);
    let exp_w = claims
        .iter()
        .map(|c| c.expected.len())
        .max()
        .unwrap_or(8)
        .max(8);
    let mut out = format!(
        "{:<id_w$}  {:<4}  {:>8}  {:<exp_w$}  {}\n",
        "id", "pass", "ms", "expected", "observed"
    );
    for c in claims {
        out.push_str(&format!(
            "{:<id_w$}  {:<4}  {:>8}  {:<exp_w$}  {}\n",
            c.id,
            if c.pass { "ok" } else { "FAIL" },
            c.millis,
            c.expected,
            if c.observed == c.expected {
                String::from("=")
            } else {
                c.observed.clone()
            }
        ));
    }
    let passed = claims.iter().filter(|c| c.pass).count();
    out.push_str(&format!("{passed}/{} claims pass\n", claims.len()));
    out
}

/// JSON report: a list of claim records plus the aggregate verdict.
pub fn render_json(claims: &[Claim]) -> String {
    let rows: Vec<serde_json::Value> = claims
        .iter()
        .map(|c| {
            serde_json::json!({
                "id": c.id,
                "anchor": c.anchor,
                "expected": c.expected,
                "observed": c.observed,
                "pass": c.pass,
                "ms": c.millis,
            })
        })
        .collect();
    serde_json::to_string_pretty(&serde_json::json!({
        "claims": rows,
        "pass": all_pass(claims),
    }))
    .unwrap()
}
