//! Regular maps on orientable surfaces as coset geometries.
//!
//! A rotary pair (x, y) in a finite group — x of order 2, y of order p,
//! z = (x·y)⁻¹ of order q, with ⟨x, y⟩ the whole group — determines a map
//! of type {p, q}: vertices are the left cosets of ⟨y⟩, edges of ⟨x⟩,
//! faces of ⟨z⟩, and incidence is nonempty intersection. Throughout, p is
//! the vertex valency and q the face size.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graphs::{quotient_by_partition, Multigraph};
use crate::perm::{
    build_yp_group, is_odd_prime, orbits, Group, Perm, PermError, StabChain, YpGroupHandle,
};

/// Exhaustive rotary-pair search works on the full element list; groups
/// beyond this order are rejected.
pub const PAIR_SEARCH_CAP: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MapError {
    /// The (x, y) data violate the rotary-pair invariants.
    NotARotaryPair(String),
    /// Group too large for exhaustive coset enumeration.
    SearchCapExceeded { cap: usize },
    /// No rotary pair of the requested type exists in the group.
    NoPairFound { p: usize, q: usize },
    /// The supplied permutation is not a group element.
    ElementNotInGroup,
    /// Parameter must be an odd prime.
    NotAnOddPrime(usize),
}

impl fmt::Display for MapError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapError::NotARotaryPair(msg) => write!(f, "not a rotary pair: {msg}"),
            MapError::SearchCapExceeded { cap } => {
                write!(f, "group order exceeds the search cap {cap}")
            }
            MapError::NoPairFound { p, q } => {
                write!(f, "no rotary pair of type ({p},{q}) in this group")
            }
            MapError::ElementNotInGroup => write!(f, "element is not in the map's group"),
            MapError::NotAnOddPrime(p) => write!(f, "{p} is not an odd prime"),
        }
    }
}

impl From<PermError> for MapError {
    fn from(e: PermError) -> Self {
        match e {
            PermError::CapExceeded { .. } => MapError::SearchCapExceeded { cap: PAIR_SEARCH_CAP },
            PermError::NotAnOddPrime(p) => MapError::NotAnOddPrime(p),
            PermError::NotInGroup => MapError::ElementNotInGroup,
            PermError::NotABijection => {
                MapError::NotARotaryPair(String::from("images not a bijection"))
            }
        }
    }
}

/// Generating pair of a regular map: x (order 2), y (order p = valency),
/// and z = (x·y)⁻¹ (order q = face size), with x·y·z = identity.
#[derive(Debug, Clone)]
pub struct RotaryPair {
    pub group: Group,
    pub x: Perm,
    pub y: Perm,
    pub z: Perm,
}

impl RotaryPair {
    /// Validates orders, the product relation, and that ⟨x, y⟩ is the whole
    /// group.
    pub fn new(group: Group, x: Perm, y: Perm) -> Result<Self, MapError> {
        if x.order() != 2 {
            return Err(MapError::NotARotaryPair(String::from("x must have order 2")));
        }
        let z = x.compose(&y).inverse();
        if !x.compose(&y).compose(&z).is_identity() {
            return Err(MapError::NotARotaryPair(String::from("x·y·z is not the identity")));
        }
        let generated = StabChain::new(group.domain_size(), &[x.clone(), y.clone()]).order();
        if generated != group.order() {
            return Err(MapError::NotARotaryPair(String::from(
                "x and y do not generate the group",
            )));
        }
        Ok(RotaryPair { group, x, y, z })
    }

    /// Map type {p, q}: p = order of y, q = order of z.
    pub fn type_pq(&self) -> (usize, usize) {
        (self.y.order() as usize, self.z.order() as usize)
    }
}

/// All rotary pairs of type (p, q), in lexicographic order of
/// (x images, y images). Empty when the group carries no such map.
pub fn find_rotary_pairs(g: &Group, p: usize, q: usize) -> Result<Vec<RotaryPair>, MapError> {
    if g.order() > PAIR_SEARCH_CAP as u128 {
        return Err(MapError::SearchCapExceeded { cap: PAIR_SEARCH_CAP });
    }
    let elements = g.elements(PAIR_SEARCH_CAP)?;
    let involutions: Vec<&Perm> = elements.iter().filter(|e| e.order() == 2).collect();
    let rotations: Vec<&Perm> = elements.iter().filter(|e| e.order() == p as u64).collect();
    let mut pairs = Vec::new();
    for &x in &involutions {
        for &y in &rotations {
            let xy = x.compose(y);
            if xy.order() != q as u64 {
                continue;
            }
            let generated =
                StabChain::new(g.domain_size(), &[x.clone(), y.clone()]).order();
            if generated != g.order() {
                continue;
            }
            pairs.push(RotaryPair {
                group: g.clone(),
                x: x.clone(),
                y: y.clone(),
                z: xy.inverse(),
            });
        }
    }
    Ok(pairs)
}

/// A finite map: flags are grouped into cosets, incidence is nonempty
/// intersection. This coset construction always yields an orientable
/// surface.
#[derive(Debug, Clone)]
pub struct RegularMap {
    pair: RotaryPair,
    elements: Vec<Perm>,
    element_index: BTreeMap<Perm, usize>,
    vertices: Vec<Vec<usize>>,
    edges: Vec<Vec<usize>>,
    faces: Vec<Vec<usize>>,
    vertex_of_element: Vec<usize>,
    vertex_edge: Vec<(usize, usize)>,
    edge_face: Vec<(usize, usize)>,
    vertex_face: Vec<(usize, usize)>,
    type_pq: (usize, usize),
    genus: usize,
}

/// Left cosets of the cyclic subgroup ⟨h⟩, enumerated in order of their
/// least member; each coset is a sorted list of element indices.
fn left_cosets(elements: &[Perm], index: &BTreeMap<Perm, usize>, h: &Perm) -> Vec<Vec<usize>> {
    let ord = h.order() as usize;
    let mut powers = Vec::with_capacity(ord);
    let mut acc = Perm::identity(h.domain_size());
    for _ in 0..ord {
        powers.push(acc.clone());
        acc = h.compose(&acc);
    }
    let mut coset_of = vec![usize::MAX; elements.len()];
    let mut cosets = Vec::new();
    for (i, g) in elements.iter().enumerate() {
        if coset_of[i] != usize::MAX {
            continue;
        }
        let id = cosets.len();
        let mut members: Vec<usize> = powers.iter().map(|pw| index[&g.compose(pw)]).collect();
        members.sort_unstable();
        for &m in &members {
            coset_of[m] = id;
        }
        cosets.push(members);
    }
    cosets
}

fn meets(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => return true,
        }
    }
    false
}

fn incidence(left: &[Vec<usize>], right: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, a) in left.iter().enumerate() {
        for (j, b) in right.iter().enumerate() {
            if meets(a, b) {
                out.push((i, j));
            }
        }
    }
    out
}

/// Builds the coset map of a rotary pair. Vertex, edge, and face numbering
/// follows coset enumeration order over the lexicographic element list.
pub fn build_map(pair: RotaryPair) -> Result<RegularMap, MapError> {
    let pair = RotaryPair::new(pair.group, pair.x, pair.y)?;
    let elements = pair.group.elements(PAIR_SEARCH_CAP)?;
    let element_index: BTreeMap<Perm, usize> =
        elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let vertices = left_cosets(&elements, &element_index, &pair.y);
    let edges = left_cosets(&elements, &element_index, &pair.x);
    let faces = left_cosets(&elements, &element_index, &pair.z);
    let mut vertex_of_element = vec![usize::MAX; elements.len()];
    for (v, coset) in vertices.iter().enumerate() {
        for &e in coset {
            vertex_of_element[e] = v;
        }
    }
    let vertex_edge = incidence(&vertices, &edges);
    let edge_face = incidence(&edges, &faces);
    let vertex_face = incidence(&vertices, &faces);
    let type_pq = pair.type_pq();
    let chi = vertices.len() as i64 - edges.len() as i64 + faces.len() as i64;
    assert!(chi <= 2 && chi % 2 == 0, "odd or positive-excess Euler characteristic");
    let genus = ((2 - chi) / 2) as usize;
    Ok(RegularMap {
        pair,
        elements,
        element_index,
        vertices,
        edges,
        faces,
        vertex_of_element,
        vertex_edge,
        edge_face,
        vertex_face,
        type_pq,
        genus,
    })
}

impl RegularMap {
    pub fn pair(&self) -> &RotaryPair {
        &self.pair
    }

    pub fn group(&self) -> &Group {
        &self.pair.group
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn vertices(&self) -> &[Vec<usize>] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn vertex_edge_incidence(&self) -> &[(usize, usize)] {
        &self.vertex_edge
    }

    pub fn edge_face_incidence(&self) -> &[(usize, usize)] {
        &self.edge_face
    }

    pub fn vertex_face_incidence(&self) -> &[(usize, usize)] {
        &self.vertex_face
    }

    /// Type {p, q}: p = vertex valency, q = face size.
    pub fn type_pq(&self) -> (usize, usize) {
        self.type_pq
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn orientable(&self) -> bool {
        true
    }
}

/// One graph edge per edge coset, joining the vertex cosets it meets; a
/// loop when only one vertex coset meets it. Vertex order = coset order.
pub fn underlying_graph(m: &RegularMap) -> Multigraph {
    let mut ends: Vec<Vec<usize>> = vec![Vec::new(); m.edge_count()];
    for &(v, e) in &m.vertex_edge {
        ends[e].push(v);
    }
    let mut g = Multigraph::new(m.vertex_count());
    for e in ends {
        match e.as_slice() {
            [v] => g.add_edge(*v, *v),
            [v, w] => g.add_edge(*v, *w),
            _ => unreachable!("an edge coset meets one or two vertex cosets"),
        }
    }
    g
}

/// The dual map: roles of vertices and faces exchanged via the pair
/// (x, z), whose type is (q, p). Dual vertices are exactly the faces of
/// the original map.
pub fn dual_map(m: &RegularMap) -> Result<RegularMap, MapError> {
    let pair = &m.pair;
    build_map(RotaryPair {
        group: pair.group.clone(),
        x: pair.x.clone(),
        y: pair.z.clone(),
        z: pair.x.compose(&pair.z).inverse(),
    })
}

/// Action of a group element on the map's vertices by left multiplication
/// of cosets.
pub fn vertex_action(m: &RegularMap, h: &Perm) -> Result<Perm, MapError> {
    if h.domain_size() != m.pair.group.domain_size() || !m.element_index.contains_key(h) {
        return Err(MapError::ElementNotInGroup);
    }
    let images: Vec<usize> = m
        .vertices
        .iter()
        .map(|coset| {
            let rep = &m.elements[coset[0]];
            m.vertex_of_element[m.element_index[&h.compose(rep)]]
        })
        .collect();
    Ok(Perm::from_images(images).expect("left multiplication permutes cosets"))
}

/// Simple quotient of the underlying graph by the ⟨h⟩-orbits on vertices.
pub fn pgonal_quotient(m: &RegularMap, h: &Perm) -> Result<Multigraph, MapError> {
    let action = vertex_action(m, h)?;
    let parts = orbits(&[action], m.vertex_count());
    Ok(quotient_by_partition(&underlying_graph(m), &parts)
        .expect("orbits partition the vertex set"))
}

/// The lexicographically least rotary pair of type (4, 2p) in
/// (C_p × C_p) ⋊ D_4, together with the named-generator handle used to
/// form the p-gonal elements a·b and a·b⁻¹.
pub fn yp_map_with_handle(p: usize) -> Result<(RegularMap, YpGroupHandle), MapError> {
    let handle = build_yp_group(p)?;
    let pairs = find_rotary_pairs(&handle.group, 4, 2 * p)?;
    let pair = pairs.into_iter().next().ok_or(MapError::NoPairFound { p: 4, q: 2 * p })?;
    Ok((build_map(pair)?, handle))
}

/// The regular {4, 2p} map on the genus-(p−1)² surface with automorphism
/// group (C_p × C_p) ⋊ D_4 of order 8p².
pub fn build_yp_map(p: usize) -> Result<RegularMap, MapError> {
    Ok(yp_map_with_handle(p)?.0)
}

/// The two commuting p-gonal deck transformations of a {4, 2p} map,
/// recovered from the map itself: the square of the face rotation z and
/// its conjugate by the vertex rotation y. They generate the two diagonal
/// directions of the normal translation subgroup of order p², so the
/// result does not depend on which rotary pair the search returned.
pub fn pgonal_elements(m: &RegularMap) -> Result<(Perm, Perm), MapError> {
    let (p, q) = m.type_pq();
    if p != 4 || q % 2 != 0 || !is_odd_prime(q / 2) {
        return Err(MapError::NotARotaryPair(String::from(
            "p-gonal elements exist only for maps of type (4, 2p) with p an odd prime",
        )));
    }
    let z2 = m.pair.z.compose(&m.pair.z);
    let other = m.pair.y.compose(&z2).compose(&m.pair.y.inverse());
    Ok((z2, other))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs;
    use crate::perm::{build_gl23, build_psl27, build_s5};

    fn first_pair(g: &Group, p: usize, q: usize) -> RotaryPair {
        find_rotary_pairs(g, p, q)
            .unwrap()
            .into_iter()
            .next()
            .expect("rotary pair exists")
    }

    fn check_flag_counts(m: &RegularMap) {
        let (p, q) = m.type_pq();
        let n = m.group().order() as usize;
        assert_eq!(p * m.vertex_count(), n);
        assert_eq!(2 * m.edge_count(), n);
        assert_eq!(q * m.face_count(), n);
        for v in 0..m.vertex_count() {
            let meets = m
                .vertex_edge_incidence()
                .iter()
                .filter(|&&(vv, _)| vv == v)
                .count();
            assert_eq!(meets, p, "vertex coset must meet p edge cosets");
        }
    }

    #[test]
    fn klein_map_counts() {
        let m = build_map(first_pair(&build_psl27(), 3, 7)).unwrap();
        assert_eq!(
            (m.vertex_count(), m.edge_count(), m.face_count(), m.genus()),
            (56, 84, 24, 3)
        );
        check_flag_counts(&m);
        let g = underlying_graph(&m);
        assert_eq!(g.is_regular(), Some(3));
        assert!(graphs::is_bipartite(&g).is_none());
        assert_eq!(graphs::connected_components(&g).len(), 1);
    }

    #[test]
    fn klein_dual_counts() {
        let m = build_map(first_pair(&build_psl27(), 3, 7)).unwrap();
        let d = dual_map(&m).unwrap();
        assert_eq!(
            (d.vertex_count(), d.edge_count(), d.face_count(), d.genus()),
            (24, 84, 56, 3)
        );
        assert_eq!(d.type_pq(), (7, 3));
        assert_eq!(d.vertices(), m.faces());
        let dd = dual_map(&d).unwrap();
        assert!(graphs::graph_isomorphic(&underlying_graph(&dd), &underlying_graph(&m))
            .is_some());
    }

    #[test]
    fn bring_map_counts() {
        let m = build_map(first_pair(&build_s5(), 4, 5)).unwrap();
        assert_eq!(
            (m.vertex_count(), m.edge_count(), m.face_count(), m.genus()),
            (30, 60, 24, 4)
        );
        check_flag_counts(&m);
        let d = dual_map(&m).unwrap();
        assert_eq!((d.vertex_count(), d.face_count()), (24, 30));
        assert_eq!(d.type_pq(), (5, 4));
    }

    #[test]
    fn bolza_map_counts() {
        let m = build_map(first_pair(&build_gl23(), 3, 8)).unwrap();
        assert_eq!(
            (m.vertex_count(), m.edge_count(), m.face_count(), m.genus()),
            (16, 24, 6, 2)
        );
        let g = underlying_graph(&m);
        assert!(graphs::is_bipartite(&g).is_some());
        let mk = graphs::generalized_petersen(8, 3).unwrap();
        assert!(graphs::graph_isomorphic(&g, &mk).is_some());
    }

    #[test]
    fn bolza_dual_is_doubled_octahedron() {
        let m = build_map(first_pair(&build_gl23(), 3, 8)).unwrap();
        let d = dual_map(&m).unwrap();
        assert_eq!((d.vertex_count(), d.edge_count()), (6, 24));
        let g = underlying_graph(&d);
        assert_eq!(g.is_regular(), Some(8));
        for v in 0..6 {
            assert_eq!(g.neighbors(v).len(), 4);
            assert!(g.neighbors(v).iter().all(|&w| g.multiplicity(v, w) == 2));
        }
    }

    #[test]
    fn s5_has_no_33_pair() {
        assert!(find_rotary_pairs(&build_s5(), 3, 3).unwrap().is_empty());
    }

    #[test]
    fn rotary_pair_rejects_bad_data() {
        let g = build_s5();
        let y = g.generators()[1].clone();
        let err = RotaryPair::new(g.clone(), y.clone(), y).unwrap_err();
        assert!(matches!(err, MapError::NotARotaryPair(_)));
    }

    #[test]
    fn yp3_map_and_quotients() {
        let (m, handle) = yp_map_with_handle(3).unwrap();
        assert_eq!(
            (m.vertex_count(), m.edge_count(), m.face_count(), m.genus()),
            (18, 36, 12, 4)
        );
        check_flag_counts(&m);
        let g = underlying_graph(&m);
        assert_eq!(g.is_regular(), Some(4));
        assert!(graphs::is_bipartite(&g).is_some());
        assert_eq!(graphs::girth(&g), Some(4));

        let (h1, h2) = pgonal_elements(&m).unwrap();
        let action = vertex_action(&m, &h1).unwrap();
        let parts = orbits(&[action], 18);
        assert_eq!(parts.len(), 6);
        assert!(parts.iter().all(|o| o.len() == 3));

        let c6 = graphs::cycle(6).unwrap();
        for h in [&h1, &h2] {
            let q = pgonal_quotient(&m, h).unwrap();
            assert_eq!(q.vertex_count(), 6);
            assert_eq!(q.is_regular(), Some(2));
            assert!(graphs::is_bipartite(&q).is_some());
            assert!(graphs::graph_isomorphic(&q, &c6).is_some());
        }

        let subgroup = |g: &Perm| crate::perm::closure(&[g.clone()], 9, 100).unwrap();
        let ab = subgroup(&handle.a.compose(&handle.b));
        let ab_inv = subgroup(&handle.a.compose(&handle.b.inverse()));
        let (s1, s2) = (subgroup(&h1), subgroup(&h2));
        assert_ne!(s1, s2);
        assert!(s1 == ab || s1 == ab_inv);
        assert!(s2 == ab || s2 == ab_inv);
    }

    #[test]
    fn yp_genus_formula() {
        for p in [3usize, 5] {
            let m = build_yp_map(p).unwrap();
            assert_eq!(m.vertex_count(), 2 * p * p);
            assert_eq!(m.edge_count(), 4 * p * p);
            assert_eq!(m.face_count(), 4 * p);
            assert_eq!(m.genus(), (p - 1) * (p - 1));
        }
    }

    #[test]
    fn quotient_by_identity_simplifies() {
        let m = build_yp_map(3).unwrap();
        let id = m.group().identity();
        let q = pgonal_quotient(&m, &id).unwrap();
        let g = underlying_graph(&m);
        assert_eq!(q.vertex_count(), g.vertex_count());
        assert!(q.is_simple());
    }

    #[test]
    fn quotient_rejects_foreign_elements() {
        let m = build_yp_map(3).unwrap();
        let stranger = Perm::from_cycles(9, &[&[0, 1]]).unwrap();
        assert_eq!(
            pgonal_quotient(&m, &stranger).unwrap_err(),
            MapError::ElementNotInGroup
        );
    }

    #[test]
    fn translations_form_the_normal_sylow_subgroup() {
        let handle = build_yp_group(3).unwrap();
        let translations =
            crate::perm::closure(&[handle.a.clone(), handle.b.clone()], 9, 100).unwrap();
        assert_eq!(translations.len(), 9);
        let all = handle.group.elements(100).unwrap();
        for g in &all {
            for t in &translations {
                let conj = g.compose(t).compose(&g.inverse());
                assert!(translations.contains(&conj));
            }
        }
    }
}
