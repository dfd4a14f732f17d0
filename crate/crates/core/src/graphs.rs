//! Finite undirected multigraphs: named constructions, Kronecker covers,
//! quotients, and isomorphism/automorphism search by color refinement with
//! lexicographic backtracking.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::perm::{orbits, Perm, StabChain};

/// Vertex-count bound for automorphism and polarity searches.
pub const AUT_VERTEX_BOUND: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    InvalidParameter(String),
    NotAPartition,
    SizeBoundExceeded { bound: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            GraphError::NotAPartition => write!(f, "parts do not partition the vertex set"),
            GraphError::SizeBoundExceeded { bound } => {
                write!(f, "vertex count exceeds the search bound {bound}")
            }
        }
    }
}

/// Undirected multigraph on vertices `0..n`. Parallel edges and loops are
/// allowed; a loop contributes 2 to its vertex's degree and puts the vertex
/// in its own neighborhood.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    adj: Vec<BTreeMap<usize, u32>>,
    labels: Option<Vec<String>>,
}

impl Multigraph {
    pub fn new(n: usize) -> Self {
        Multigraph { n, adj: vec![BTreeMap::new(); n], labels: None }
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Multigraph::new(n);
        for &(u, w) in edges {
            g.add_edge(u, w);
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, w: usize) {
        assert!(u < self.n && w < self.n, "edge endpoint out of range");
        *self.adj[u].entry(w).or_insert(0) += 1;
        if u != w {
            *self.adj[w].entry(u).or_insert(0) += 1;
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of edges; a loop counts once, parallel edges by multiplicity.
    pub fn edge_count(&self) -> usize {
        let mut total = 0usize;
        for u in 0..self.n {
            for (&w, &m) in &self.adj[u] {
                if w >= u {
                    total += m as usize;
                }
            }
        }
        total
    }

    pub fn multiplicity(&self, u: usize, w: usize) -> u32 {
        self.adj[u].get(&w).copied().unwrap_or(0)
    }

    pub fn adjacent(&self, u: usize, w: usize) -> bool {
        self.multiplicity(u, w) > 0
    }

    /// Distinct neighbors in ascending order; includes `v` itself when a
    /// loop is present.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.adj[v].keys().copied().collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        let mut d = 0usize;
        for (&w, &m) in &self.adj[v] {
            d += if w == v { 2 * m as usize } else { m as usize };
        }
        d
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        ds.sort_unstable();
        ds
    }

    pub fn is_regular(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let d = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    pub fn is_simple(&self) -> bool {
        (0..self.n).all(|u| {
            self.adj[u]
                .iter()
                .all(|(&w, &m)| w != u && m == 1)
        })
    }

    /// Edges as (u, w, multiplicity) with u ≤ w, ascending.
    pub fn edges(&self) -> Vec<(usize, usize, u32)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for (&w, &m) in &self.adj[u] {
                if w >= u {
                    out.push((u, w, m));
                }
            }
        }
        out
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.n, "one label per vertex");
        self.labels = Some(labels);
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn has_loop(&self) -> bool {
        (0..self.n).any(|v| self.multiplicity(v, v) > 0)
    }
}

fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn cycle(n: usize) -> Result<Multigraph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameter(String::from(
            "cycle needs at least 3 vertices",
        )));
    }
    let mut g = Multigraph::new(n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n);
    }
    Ok(g)
}

/// Generalized Petersen graph GP(n,k): outer cycle 0..n, inner vertices
/// n..2n stepping by k, spokes i — n+i.
pub fn generalized_petersen(n: usize, k: usize) -> Result<Multigraph, GraphError> {
    if n < 3 || k == 0 || 2 * k >= n {
        return Err(GraphError::InvalidParameter(String::from(
            "generalized Petersen graph needs n >= 3 and 0 < k < n/2",
        )));
    }
    let mut g = Multigraph::new(2 * n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n);
        g.add_edge(i, n + i);
        g.add_edge(n + i, n + (i + k) % n);
    }
    Ok(g)
}

/// Rook's graph on an m x n board: vertex i*n+j, edges within rows and
/// columns.
pub fn rook(m: usize, n: usize) -> Result<Multigraph, GraphError> {
    if m == 0 || n == 0 {
        return Err(GraphError::InvalidParameter(String::from(
            "rook board must be nonempty",
        )));
    }
    let mut g = Multigraph::new(m * n);
    for i in 0..m {
        for j in 0..n {
            for j2 in j + 1..n {
                g.add_edge(i * n + j, i * n + j2);
            }
            for i2 in i + 1..m {
                g.add_edge(i * n + j, i2 * n + j);
            }
        }
    }
    Ok(g)
}

/// Circulant graph on Z_n with the given connectors: i ~ i±s for s in S.
pub fn circulant(n: usize, connectors: &[usize]) -> Result<Multigraph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameter(String::from(
            "circulant needs at least 3 vertices",
        )));
    }
    let mut steps = BTreeSet::new();
    for &s in connectors {
        let s = s % n;
        if s == 0 {
            return Err(GraphError::InvalidParameter(String::from(
                "circulant connector is 0 mod n",
            )));
        }
        steps.insert(s.min(n - s));
    }
    let mut g = Multigraph::new(n);
    for &s in &steps {
        if 2 * s == n {
            for i in 0..n / 2 {
                g.add_edge(i, i + s);
            }
        } else {
            for i in 0..n {
                g.add_edge(i, (i + s) % n);
            }
        }
    }
    Ok(g)
}

/// Bipartite circulant with parts u_0..u_{n-1} (indices 0..n) and
/// w_0..w_{n-1} (indices n..2n); u_i ~ w_j iff j−i ∈ S mod n.
pub fn bipartite_circulant(n: usize, connectors: &[usize]) -> Result<Multigraph, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidParameter(String::from(
            "bipartite circulant needs n >= 1",
        )));
    }
    let steps: BTreeSet<usize> = connectors.iter().map(|&s| s % n).collect();
    let mut g = Multigraph::new(2 * n);
    for i in 0..n {
        for &s in &steps {
            g.add_edge(i, n + (i + s) % n);
        }
    }
    Ok(g)
}

/// Paley graph on a prime q ≡ 1 mod 4: i ~ j iff i−j is a nonzero square.
pub fn paley(q: usize) -> Result<Multigraph, GraphError> {
    if !is_prime(q) || q % 4 != 1 {
        return Err(GraphError::InvalidParameter(String::from(
            "Paley graph needs a prime q with q = 1 mod 4",
        )));
    }
    let squares: BTreeSet<usize> = (1..q).map(|x| x * x % q).collect();
    let mut g = Multigraph::new(q);
    for i in 0..q {
        for j in i + 1..q {
            if squares.contains(&(j - i)) {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// Hoffman-Singleton graph in the pentagons-and-pentagrams model: pentagons
/// P_h (vertices 5h+j, j ~ j±1), pentagrams Q_i (vertices 25+5i+j, j ~ j±2),
/// and P_{h,j} ~ Q_{i, h·i+j mod 5}.
pub fn hoffman_singleton() -> Multigraph {
    let mut g = Multigraph::new(50);
    for h in 0..5 {
        for j in 0..5 {
            g.add_edge(5 * h + j, 5 * h + (j + 1) % 5);
            g.add_edge(25 + 5 * h + j, 25 + 5 * h + (j + 2) % 5);
        }
    }
    for h in 0..5 {
        for i in 0..5 {
            for j in 0..5 {
                g.add_edge(5 * h + j, 25 + 5 * i + (h * i + j) % 5);
            }
        }
    }
    g
}

/// Kronecker double cover: vertices (v,0) = v and (v,1) = n+v; each edge
/// u—w lifts to (u,0)—(w,1) and (w,0)—(u,1). A loop lifts to a doubled
/// cross edge.
pub fn kronecker_cover(g: &Multigraph) -> Multigraph {
    let n = g.vertex_count();
    let mut cover = Multigraph::new(2 * n);
    for (u, w, m) in g.edges() {
        for _ in 0..m {
            if u == w {
                cover.add_edge(u, n + u);
                cover.add_edge(u, n + u);
            } else {
                cover.add_edge(u, n + w);
                cover.add_edge(w, n + u);
            }
        }
    }
    cover
}

/// True iff the graph contains a cycle on 4 distinct vertices, i.e. some
/// vertex pair has two common neighbors. Loops and multiplicities are
/// irrelevant here.
pub fn has_four_cycle(g: &Multigraph) -> bool {
    let n = g.vertex_count();
    for u in 0..n {
        for w in u + 1..n {
            let mut common = 0;
            for x in g.neighbors(u) {
                if x != u && x != w && g.adjacent(w, x) {
                    common += 1;
                    if common >= 2 {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Length of a shortest cycle; None for forests. A loop gives 1, a parallel
/// pair gives 2.
pub fn girth(g: &Multigraph) -> Option<usize> {
    let n = g.vertex_count();
    if g.has_loop() {
        return Some(1);
    }
    if (0..n).any(|u| g.adj[u].iter().any(|(&w, &m)| w != u && m >= 2)) {
        return Some(2);
    }
    let mut best: Option<usize> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = alloc::collections::VecDeque::new();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let cand = dist[u] + dist[w] + 1;
                    if best.is_none_or(|b| cand < b) {
                        best = Some(cand);
                    }
                }
            }
        }
    }
    best
}

/// Two-coloring by side, or None when an odd closed walk (or loop) exists.
pub fn is_bipartite(g: &Multigraph) -> Option<Vec<u8>> {
    let n = g.vertex_count();
    if g.has_loop() {
        return None;
    }
    let mut side = vec![u8::MAX; n];
    for s in 0..n {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut queue = alloc::collections::VecDeque::new();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[u];
                    queue.push_back(w);
                } else if side[w] == side[u] {
                    return None;
                }
            }
        }
    }
    Some(side)
}

/// Connected components as a partition, ordered by least vertex.
pub fn connected_components(g: &Multigraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut parts = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = Vec::new();
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(u) = stack.pop() {
            comp.push(u);
            for w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        parts.push(comp);
    }
    parts
}

/// Largest BFS eccentricity; None when empty or disconnected.
pub fn diameter(g: &Multigraph) -> Option<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return None;
    }
    let mut diam = 0usize;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = alloc::collections::VecDeque::new();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        for &d in &dist {
            if d == usize::MAX {
                return None;
            }
            diam = diam.max(d);
        }
    }
    Some(diam)
}

/// Simple quotient: one vertex per part, an edge between two parts iff some
/// cross edge exists, a loop on a part iff it contains an internal edge.
pub fn quotient_by_partition(
    g: &Multigraph,
    parts: &[Vec<usize>],
) -> Result<Multigraph, GraphError> {
    let n = g.vertex_count();
    let mut part_of = vec![usize::MAX; n];
    let mut covered = 0usize;
    for (idx, part) in parts.iter().enumerate() {
        for &v in part {
            if v >= n || part_of[v] != usize::MAX {
                return Err(GraphError::NotAPartition);
            }
            part_of[v] = idx;
            covered += 1;
        }
    }
    if covered != n {
        return Err(GraphError::NotAPartition);
    }
    let mut pairs = BTreeSet::new();
    for (u, w, _) in g.edges() {
        let (a, b) = (part_of[u], part_of[w]);
        pairs.insert((a.min(b), a.max(b)));
    }
    let mut q = Multigraph::new(parts.len());
    for (a, b) in pairs {
        q.add_edge(a, b);
    }
    Ok(q)
}

/// Relabels vertices: vertex v of `g` becomes `p(v)`.
pub fn relabel(g: &Multigraph, p: &Perm) -> Multigraph {
    assert_eq!(p.domain_size(), g.vertex_count(), "relabel: domain mismatch");
    let mut out = Multigraph::new(g.vertex_count());
    for (u, w, m) in g.edges() {
        for _ in 0..m {
            out.add_edge(p.apply(u), p.apply(w));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Isomorphism and automorphism search.
// ---------------------------------------------------------------------------

/// Automorphism group of a graph: generators, exact order, and transitivity
/// flags on vertices and on ordered adjacent pairs.
#[derive(Debug, Clone)]
pub struct AutGroupReport {
    pub generators: Vec<Perm>,
    pub order: u128,
    pub vertex_transitive: bool,
    pub arc_transitive: bool,
}

/// Flattened adjacency with multiplicities, loops kept separate.
struct SearchGraph {
    n: usize,
    adj: Vec<Vec<(usize, u32)>>,
    loops: Vec<u32>,
}

impl SearchGraph {
    fn build(g: &Multigraph) -> Self {
        let n = g.vertex_count();
        let mut adj = vec![Vec::new(); n];
        let mut loops = vec![0u32; n];
        for u in 0..n {
            for (&w, &m) in &g.adj[u] {
                if w == u {
                    loops[u] = m;
                } else {
                    adj[u].push((w, m));
                }
            }
        }
        SearchGraph { n, adj, loops }
    }
}

type Coloring = Vec<u32>;

/// One refinement round over both graphs with a shared signature table.
/// Returns None when the color class sizes disagree.
fn refine_pair(
    g1: &SearchGraph,
    c1: &Coloring,
    g2: &SearchGraph,
    c2: &Coloring,
) -> Option<(Coloring, Coloring)> {
    let mut c1 = c1.clone();
    let mut c2 = c2.clone();
    let mut color_count = 0u32;
    loop {
        let sig = |g: &SearchGraph, c: &Coloring, v: usize| {
            let mut nb: Vec<(u32, u32)> =
                g.adj[v].iter().map(|&(w, m)| (c[w], m)).collect();
            nb.sort_unstable();
            (c[v], g.loops[v], nb)
        };
        let mut table: BTreeMap<(u32, u32, Vec<(u32, u32)>), u32> = BTreeMap::new();
        for v in 0..g1.n {
            table.entry(sig(g1, &c1, v)).or_insert(0);
        }
        for v in 0..g2.n {
            table.entry(sig(g2, &c2, v)).or_insert(0);
        }
        for (i, (_, id)) in table.iter_mut().enumerate() {
            *id = i as u32;
        }
        let next1: Coloring = (0..g1.n).map(|v| table[&sig(g1, &c1, v)]).collect();
        let next2: Coloring = (0..g2.n).map(|v| table[&sig(g2, &c2, v)]).collect();
        let mut count1: BTreeMap<u32, usize> = BTreeMap::new();
        let mut count2: BTreeMap<u32, usize> = BTreeMap::new();
        for &c in &next1 {
            *count1.entry(c).or_insert(0) += 1;
        }
        for &c in &next2 {
            *count2.entry(c).or_insert(0) += 1;
        }
        if count1 != count2 {
            return None;
        }
        let new_count = count1.len() as u32;
        c1 = next1;
        c2 = next2;
        if new_count == color_count {
            return Some((c1, c2));
        }
        color_count = new_count;
    }
}

/// Smallest color class of size > 1, ties broken by color id. None when the
/// coloring is discrete.
fn target_cell(c: &Coloring) -> Option<u32> {
    let mut sizes: BTreeMap<u32, usize> = BTreeMap::new();
    for &col in c {
        *sizes.entry(col).or_insert(0) += 1;
    }
    sizes
        .iter()
        .filter(|(_, &s)| s > 1)
        .min_by_key(|(&col, &s)| (s, col))
        .map(|(&col, _)| col)
}

fn fresh_color(c1: &Coloring, c2: &Coloring) -> u32 {
    c1.iter().chain(c2.iter()).copied().max().unwrap_or(0) + 1
}

/// Reads the vertex map off a pair of discrete colorings.
fn discrete_mapping(c1: &Coloring, c2: &Coloring) -> Vec<usize> {
    let mut by_color: BTreeMap<u32, usize> = BTreeMap::new();
    for (v, &col) in c2.iter().enumerate() {
        by_color.insert(col, v);
    }
    c1.iter().map(|col| by_color[col]).collect()
}

fn is_edge_preserving(g1: &SearchGraph, g2: &SearchGraph, map: &[usize]) -> bool {
    if g1.n != g2.n {
        return false;
    }
    for v in 0..g1.n {
        if g1.loops[v] != g2.loops[map[v]] {
            return false;
        }
        if g1.adj[v].len() != g2.adj[map[v]].len() {
            return false;
        }
        for &(w, m) in &g1.adj[v] {
            let img = map[w];
            if g2.adj[map[v]]
                .iter()
                .find(|&&(x, _)| x == img)
                .map(|&(_, m2)| m2)
                != Some(m)
            {
                return false;
            }
        }
    }
    true
}

fn iso_search(
    g1: &SearchGraph,
    g2: &SearchGraph,
    c1: &Coloring,
    c2: &Coloring,
) -> Option<Vec<usize>> {
    let (c1, c2) = refine_pair(g1, c1, g2, c2)?;
    match target_cell(&c1) {
        None => {
            let map = discrete_mapping(&c1, &c2);
            is_edge_preserving(g1, g2, &map).then_some(map)
        }
        Some(cell) => {
            let v = (0..g1.n).find(|&v| c1[v] == cell).unwrap();
            let fresh = fresh_color(&c1, &c2);
            for w in 0..g2.n {
                if c2[w] != cell {
                    continue;
                }
                let mut d1 = c1.clone();
                let mut d2 = c2.clone();
                d1[v] = fresh;
                d2[w] = fresh;
                if let Some(map) = iso_search(g1, g2, &d1, &d2) {
                    return Some(map);
                }
            }
            None
        }
    }
}

/// Isomorphism respecting vertex colors: map[v] has c2[map[v]] = c1[v].
pub fn graph_isomorphic_colored(
    g1: &Multigraph,
    c1: &[u32],
    g2: &Multigraph,
    c2: &[u32],
) -> Option<Vec<usize>> {
    if g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return None;
    }
    assert_eq!(c1.len(), g1.vertex_count());
    assert_eq!(c2.len(), g2.vertex_count());
    let s1 = SearchGraph::build(g1);
    let s2 = SearchGraph::build(g2);
    iso_search(&s1, &s2, &c1.to_vec(), &c2.to_vec())
}

/// Vertex bijection carrying the edge multiset of g1 onto g2, or None.
/// Deterministic: the lexicographically first mapping found by the
/// refinement backtracking is returned.
pub fn graph_isomorphic(g1: &Multigraph, g2: &Multigraph) -> Option<Vec<usize>> {
    let c1 = vec![0u32; g1.vertex_count()];
    let c2 = vec![0u32; g2.vertex_count()];
    graph_isomorphic_colored(g1, &c1, g2, &c2)
}

/// Automorphism search: individualization-refinement with first-path orbit
/// pruning and backjumps to the deepest first-path ancestor.
struct AutSearch<'a> {
    g: &'a SearchGraph,
    base: Vec<usize>,
    base_fixed: bool,
    chain: Option<StabChain>,
    gens: Vec<Perm>,
}

enum Walk {
    Exhausted,
    Backjump(usize),
}

impl<'a> AutSearch<'a> {
    fn run(g: &'a SearchGraph, colors: &Coloring) -> (Vec<Perm>, Vec<usize>) {
        let mut s = AutSearch { g, base: Vec::new(), base_fixed: false, chain: None, gens: Vec::new() };
        s.walk(colors, colors, 0, 0);
        let base = s.base.clone();
        (s.gens, base)
    }

    fn stabilizer_orbit_ids(&self, level: usize) -> Option<Vec<usize>> {
        let chain = self.chain.as_ref()?;
        let gens = chain.stabilizer_gens(level);
        if gens.is_empty() {
            return None;
        }
        let parts = orbits(&gens, self.g.n);
        let mut id = vec![0usize; self.g.n];
        for (i, part) in parts.iter().enumerate() {
            for &v in part {
                id[v] = i;
            }
        }
        Some(id)
    }

    fn record(&mut self, map: Vec<usize>) {
        let p = Perm::from_images(map).expect("leaf mapping is a bijection");
        if self.chain.is_none() {
            self.chain = Some(StabChain::with_base_hint(self.g.n, &[], &self.base));
        }
        self.gens.push(p.clone());
        self.chain.as_mut().unwrap().insert(p);
    }

    /// Explores one node. `level` counts individualized vertices on the
    /// current path; `fp_len` is the length of the path's leftmost prefix,
    /// so the node lies on the first path exactly when fp_len = level. A
    /// leaf that yields a new automorphism backjumps to its deepest
    /// first-path ancestor: siblings abandoned on the way are products of
    /// that automorphism with elements found under the leftmost child.
    fn walk(&mut self, c1: &Coloring, c2: &Coloring, level: usize, fp_len: usize) -> Walk {
        let Some((c1, c2)) = refine_pair(self.g, c1, self.g, c2) else {
            return Walk::Exhausted;
        };
        let Some(cell) = target_cell(&c1) else {
            let map = discrete_mapping(&c1, &c2);
            let identity = map.iter().enumerate().all(|(i, &w)| i == w);
            if identity {
                self.base_fixed = true;
            } else if is_edge_preserving(self.g, self.g, &map) {
                self.record(map);
                return Walk::Backjump(fp_len);
            }
            return Walk::Exhausted;
        };
        let on_first_path = fp_len == level;
        debug_assert!(!on_first_path || c1 == c2);
        let v = (0..self.g.n).find(|&v| c1[v] == cell).unwrap();
        if on_first_path && !self.base_fixed {
            debug_assert_eq!(self.base.len(), level);
            self.base.push(v);
        }
        let fresh = fresh_color(&c1, &c2);
        let mut explored: Vec<usize> = Vec::new();
        for w in 0..self.g.n {
            if c2[w] != cell {
                continue;
            }
            if on_first_path && w != v {
                if let Some(orbit_id) = self.stabilizer_orbit_ids(level) {
                    if explored.iter().any(|&e| orbit_id[e] == orbit_id[w]) {
                        continue;
                    }
                }
            }
            explored.push(w);
            let child_fp = if on_first_path && w == v { fp_len + 1 } else { fp_len };
            let mut d1 = c1.clone();
            let mut d2 = c2.clone();
            d1[v] = fresh;
            d2[w] = fresh;
            match self.walk(&d1, &d2, level + 1, child_fp) {
                Walk::Exhausted => {}
                Walk::Backjump(target) => {
                    if target < level {
                        return Walk::Backjump(target);
                    }
                }
            }
        }
        Walk::Exhausted
    }
}

fn automorphism_generators(g: &Multigraph, colors: &[u32]) -> (Vec<Perm>, u128) {
    let sg = SearchGraph::build(g);
    if sg.n == 0 {
        return (Vec::new(), 1);
    }
    let (gens, base) = AutSearch::run(&sg, &colors.to_vec());
    if gens.is_empty() {
        return (gens, 1);
    }
    let chain = StabChain::with_base_hint(sg.n, &gens, &base);
    let order = chain.order();
    (gens, order)
}

/// Automorphism group of a vertex-colored graph (colors must be preserved).
pub fn automorphism_group_colored(
    g: &Multigraph,
    colors: &[u32],
) -> Result<AutGroupReport, GraphError> {
    let n = g.vertex_count();
    if n > AUT_VERTEX_BOUND {
        return Err(GraphError::SizeBoundExceeded { bound: AUT_VERTEX_BOUND });
    }
    assert_eq!(colors.len(), n);
    let (generators, order) = automorphism_generators(g, colors);
    let vertex_transitive = n <= 1
        || (colors.iter().all(|&c| c == colors[0])
            && orbits(&generators, n).len() == 1
            && !generators.is_empty());
    let arc_transitive = vertex_transitive && arc_orbit_count(g, &generators) <= 1;
    Ok(AutGroupReport { generators, order, vertex_transitive, arc_transitive })
}

pub fn automorphism_group(g: &Multigraph) -> Result<AutGroupReport, GraphError> {
    let colors = vec![0u32; g.vertex_count()];
    automorphism_group_colored(g, &colors)
}

/// Orbit count of the generated group on ordered adjacent pairs (u, w),
/// u ≠ w.
fn arc_orbit_count(g: &Multigraph, gens: &[Perm]) -> usize {
    let mut arcs: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (u, w, _) in g.edges() {
        if u != w {
            let next = arcs.len();
            arcs.entry((u, w)).or_insert(next);
            let next = arcs.len();
            arcs.entry((w, u)).or_insert(next);
        }
    }
    if arcs.is_empty() {
        return 0;
    }
    let keys: Vec<(usize, usize)> = arcs.keys().copied().collect();
    let mut seen = vec![false; keys.len()];
    let mut orbit_count = 0;
    for start in 0..keys.len() {
        if seen[start] {
            continue;
        }
        orbit_count += 1;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(i) = stack.pop() {
            let (u, w) = keys[i];
            for p in gens {
                let j = arcs[&(p.apply(u), p.apply(w))];
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
    }
    orbit_count
}

/// Searches for an order-2 automorphism exchanging the two sides of a
/// bipartitioned vertex set (sides need not be connected-bipartite sides;
/// any 0/1 split works). Pair-forced backtracking: assigning v ↦ w also
/// assigns w ↦ v.
pub fn find_side_swapping_involution(
    g: &Multigraph,
    side: &[u8],
) -> Result<Option<Perm>, GraphError> {
    let n = g.vertex_count();
    if n > AUT_VERTEX_BOUND {
        return Err(GraphError::SizeBoundExceeded { bound: AUT_VERTEX_BOUND });
    }
    assert_eq!(side.len(), n);
    if side.iter().filter(|&&s| s == 0).count() != side.iter().filter(|&&s| s == 1).count() {
        return Ok(None);
    }
    let sg = SearchGraph::build(g);
    let c1: Coloring = side.iter().map(|&s| s as u32).collect();
    let c2: Coloring = side.iter().map(|&s| 1 - s as u32).collect();
    Ok(swap_involution_search(&sg, &c1, &c2)
        .map(|m| Perm::from_images(m).expect("involution mapping is a bijection")))
}

fn swap_involution_search(
    g: &SearchGraph,
    c1: &Coloring,
    c2: &Coloring,
) -> Option<Vec<usize>> {
    let (c1, c2) = refine_pair(g, c1, g, c2)?;
    match target_cell(&c1) {
        None => {
            let map = discrete_mapping(&c1, &c2);
            let involutory = (0..g.n).all(|v| map[map[v]] == v);
            (involutory && is_edge_preserving(g, g, &map)).then_some(map)
        }
        Some(cell) => {
            let v = (0..g.n).find(|&v| c1[v] == cell).unwrap();
            let f1 = fresh_color(&c1, &c2);
            let f2 = f1 + 1;
            for w in 0..g.n {
                if c2[w] != cell || w == v {
                    continue;
                }
                let mut d1 = c1.clone();
                let mut d2 = c2.clone();
                d1[v] = f1;
                d2[w] = f1;
                d1[w] = f2;
                d2[v] = f2;
                if let Some(map) = swap_involution_search(g, &d1, &d2) {
                    return Some(map);
                }
            }
            None
        }
    }
}
