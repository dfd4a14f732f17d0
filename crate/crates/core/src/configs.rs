//! Point-block configurations and their neighborhood-geometry analytics.
//!
//! The central construction takes a graph to its neighborhood geometry:
//! points are the vertices and the blocks are the (distinct-neighbor)
//! neighborhoods, one block per vertex and kept in vertex order. Blocks
//! form a list, not a set: repeated point-sets are counted with
//! multiplicity. On top of that sit the parameter summary, concurrence
//! and deficiency analysis, polarity and duality, the pentagonal and
//! generalized pentagonal properties, and Moore-graph checks.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graphs::{
    self, automorphism_group_colored, connected_components, find_side_swapping_involution,
    graph_isomorphic_colored, GraphError, Multigraph,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConfigError {
    /// A vertex with no neighbors has no block.
    EmptyNeighborhood(usize),
    /// A block is empty or mentions a point outside the point range.
    InvalidBlock(String),
    /// The operation needs equally many points and blocks.
    NotSquare { points: usize, blocks: usize },
    /// The configuration fails the pentagonal property.
    NotPentagonal { point: usize, reason: String },
    InvalidParameter(String),
    /// Search bound from the graph engine exceeded.
    SizeBoundExceeded { bound: usize },
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigError::EmptyNeighborhood(v) => {
                write!(f, "vertex {v} has an empty neighborhood")
            }
            ConfigError::InvalidBlock(msg) => write!(f, "invalid block: {msg}"),
            ConfigError::NotSquare { points, blocks } => {
                write!(f, "needs points = blocks, got {points} points and {blocks} blocks")
            }
            ConfigError::NotPentagonal { point, reason } => {
                write!(f, "not pentagonal at point {point}: {reason}")
            }
            ConfigError::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            ConfigError::SizeBoundExceeded { bound } => {
                write!(f, "size exceeds the search bound {bound}")
            }
        }
    }
}

impl From<GraphError> for ConfigError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::SizeBoundExceeded { bound } => ConfigError::SizeBoundExceeded { bound },
            GraphError::InvalidParameter(msg) => ConfigError::InvalidParameter(msg),
            GraphError::NotAPartition => {
                ConfigError::InvalidParameter(String::from("not a partition"))
            }
        }
    }
}

/// A configuration of points and blocks. Blocks are stored as sorted
/// point-sets; the block list keeps repeats.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    point_count: usize,
    blocks: Vec<Vec<usize>>,
    point_labels: Option<Vec<String>>,
}

impl Configuration {
    /// Validates that every block is a nonempty subset of the point range.
    /// Blocks are normalized to sorted distinct-point form.
    pub fn new(
        point_count: usize,
        blocks: Vec<Vec<usize>>,
        point_labels: Option<Vec<String>>,
    ) -> Result<Self, ConfigError> {
        if let Some(ref labels) = point_labels {
            if labels.len() != point_count {
                return Err(ConfigError::InvalidParameter(String::from(
                    "one label per point",
                )));
            }
        }
        let mut normalized = Vec::with_capacity(blocks.len());
        for (i, block) in blocks.into_iter().enumerate() {
            let mut b = block;
            b.sort_unstable();
            b.dedup();
            if b.is_empty() {
                return Err(ConfigError::InvalidBlock(alloc::format!("block {i} is empty")));
            }
            if *b.last().unwrap() >= point_count {
                return Err(ConfigError::InvalidBlock(alloc::format!(
                    "block {i} mentions a point outside 0..{point_count}"
                )));
            }
            normalized.push(b);
        }
        Ok(Configuration { point_count, blocks: normalized, point_labels })
    }

    pub fn point_count(&self) -> usize {
        self.point_count
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Blocks as sorted point lists, in block order.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn point_labels(&self) -> Option<&[String]> {
        self.point_labels.as_deref()
    }

    /// Indices of the block entries containing x, in block order.
    pub fn blocks_through(&self, x: usize) -> Vec<usize> {
        self.blocks
            .iter()
            .enumerate()
            .filter(|(_, b)| b.binary_search(&x).is_ok())
            .map(|(i, _)| i)
            .collect()
    }
}

/// Number of blocks per point or points per block: a single value when
/// constant, the full profile otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Counts {
    Uniform(usize),
    PerElement(Vec<usize>),
}

impl Counts {
    fn of(values: Vec<usize>) -> Counts {
        match values.first() {
            Some(&first) if values.iter().all(|&x| x == first) => Counts::Uniform(first),
            _ => Counts::PerElement(values),
        }
    }

    pub fn uniform(&self) -> Option<usize> {
        match self {
            Counts::Uniform(x) => Some(*x),
            Counts::PerElement(_) => None,
        }
    }
}

/// Combinatorial linear dimension: the largest intersection of two blocks
/// with distinct point-sets. Degenerate when no such pair exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinearDimension {
    Degenerate,
    Finite(usize),
}

impl LinearDimension {
    pub fn value(&self) -> Option<usize> {
        match self {
            LinearDimension::Degenerate => None,
            LinearDimension::Finite(d) => Some(*d),
        }
    }
}

impl fmt::Display for LinearDimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinearDimension::Degenerate => write!(f, "degenerate"),
            LinearDimension::Finite(d) => write!(f, "{d}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigSummary {
    pub v: usize,
    pub b: usize,
    pub r: Counts,
    pub k: Counts,
    /// v = b with constant r = k: a v_r configuration.
    pub balanced_vr: bool,
    pub linear_dimension: LinearDimension,
    /// d ≤ 1; false when the dimension is degenerate.
    pub linear: bool,
    pub distinct_block_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PentagonalReport {
    pub holds: bool,
    /// For each point, the index of a block equal to its non-collinear
    /// set. Present exactly when the property holds.
    pub opposite_line: Option<Vec<usize>>,
    pub failure_witness: Option<(usize, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedPentagonalReport {
    pub d: usize,
    pub holds: bool,
    /// For each point, the index of a block equal to its count-(d−1) set.
    pub opposite_line: Option<Vec<usize>>,
    pub failure_witness: Option<(usize, String)>,
    /// For balanced self-polar inputs: whether v = 1 + r²/d. None
    /// otherwise.
    pub count_identity: Option<bool>,
}

/// The neighborhood geometry of a graph: point i is vertex i, block i is
/// the distinct-neighbor set of vertex i. Fails on isolated vertices.
pub fn neighborhood_geometry(g: &Multigraph) -> Result<Configuration, ConfigError> {
    let n = g.vertex_count();
    let mut blocks = Vec::with_capacity(n);
    for v in 0..n {
        let nb = g.neighbors(v);
        if nb.is_empty() {
            return Err(ConfigError::EmptyNeighborhood(v));
        }
        blocks.push(nb);
    }
    Configuration::new(n, blocks, g.labels().map(|l| l.to_vec()))
}

/// Bipartite incidence graph: vertices 0..v are the points, v..v+b the
/// block entries.
pub fn levi_graph(c: &Configuration) -> Multigraph {
    let v = c.point_count();
    let mut g = Multigraph::new(v + c.block_count());
    for (j, block) in c.blocks().iter().enumerate() {
        for &p in block {
            g.add_edge(p, v + j);
        }
    }
    g
}

/// Splits along the connected components of the Levi graph, re-indexing
/// points and blocks in ascending original order.
pub fn split_components(c: &Configuration) -> Vec<Configuration> {
    let v = c.point_count();
    let levi = levi_graph(c);
    let mut out = Vec::new();
    for comp in connected_components(&levi) {
        let points: Vec<usize> = comp.iter().copied().filter(|&u| u < v).collect();
        let block_ids: Vec<usize> = comp.iter().copied().filter(|&u| u >= v).map(|u| u - v).collect();
        let mut new_index = vec![usize::MAX; v];
        for (ni, &p) in points.iter().enumerate() {
            new_index[p] = ni;
        }
        let blocks: Vec<Vec<usize>> = block_ids
            .iter()
            .map(|&j| c.blocks()[j].iter().map(|&p| new_index[p]).collect())
            .collect();
        let labels = c
            .point_labels()
            .map(|l| points.iter().map(|&p| l[p].clone()).collect());
        out.push(
            Configuration::new(points.len(), blocks, labels)
                .expect("component blocks stay valid"),
        );
    }
    out
}

/// Parameter summary. The linear dimension ranges over pairs of blocks
/// with distinct point-sets and is degenerate when fewer than two
/// distinct point-sets occur.
pub fn summarize(c: &Configuration) -> ConfigSummary {
    let v = c.point_count();
    let b = c.block_count();
    let mut r = vec![0usize; v];
    for block in c.blocks() {
        for &p in block {
            r[p] += 1;
        }
    }
    let k: Vec<usize> = c.blocks().iter().map(|b| b.len()).collect();
    let distinct: BTreeSet<&Vec<usize>> = c.blocks().iter().collect();
    let distinct_block_count = distinct.len();
    let linear_dimension = if distinct_block_count < 2 {
        LinearDimension::Degenerate
    } else {
        let mut d = 0usize;
        for i in 0..b {
            for j in (i + 1)..b {
                let (bi, bj) = (&c.blocks()[i], &c.blocks()[j]);
                if bi == bj {
                    continue;
                }
                let meet = bi.iter().filter(|p| bj.binary_search(p).is_ok()).count();
                d = d.max(meet);
            }
        }
        LinearDimension::Finite(d)
    };
    let r = Counts::of(r);
    let k = Counts::of(k);
    let balanced_vr = v == b
        && matches!((&r, &k), (Counts::Uniform(rr), Counts::Uniform(kk)) if rr == kk);
    ConfigSummary {
        v,
        b,
        balanced_vr,
        linear: matches!(linear_dimension, LinearDimension::Finite(d) if d <= 1),
        linear_dimension,
        distinct_block_count,
        r,
        k,
    }
}

/// For each point y, the number of block entries containing both x and y.
/// The entry at x itself is 0: a point is not collinear with itself.
pub fn concurrence_counts(c: &Configuration, x: usize) -> Result<Vec<usize>, ConfigError> {
    if x >= c.point_count() {
        return Err(ConfigError::InvalidParameter(alloc::format!("point {x} out of range")));
    }
    let mut counts = vec![0usize; c.point_count()];
    for block in c.blocks() {
        if block.binary_search(&x).is_err() {
            continue;
        }
        for &y in block {
            counts[y] += 1;
        }
    }
    counts[x] = 0;
    Ok(counts)
}

/// Whether the incidence matrix is symmetric under the identity indexing:
/// point i ∈ block j ⟺ point j ∈ block i.
pub fn natural_polarity_holds(c: &Configuration) -> Result<bool, ConfigError> {
    let (v, b) = (c.point_count(), c.block_count());
    if v != b {
        return Err(ConfigError::NotSquare { points: v, blocks: b });
    }
    for (j, block) in c.blocks().iter().enumerate() {
        for &i in block {
            if c.blocks()[i].binary_search(&j).is_err() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Searches for a polarity: an incidence-preserving involution exchanging
/// points and blocks, found as a side-swapping automorphism of the Levi
/// graph. Returns the point → block half of the involution.
pub fn find_polarity(c: &Configuration) -> Result<Option<Vec<usize>>, ConfigError> {
    let v = c.point_count();
    let levi = levi_graph(c);
    let mut side = vec![0u8; levi.vertex_count()];
    for s in side.iter_mut().skip(v) {
        *s = 1;
    }
    let found = find_side_swapping_involution(&levi, &side)?;
    Ok(found.map(|perm| (0..v).map(|i| perm.apply(i) - v).collect()))
}

/// Isomorphism respecting block multiplicities, as (point map, block map)
/// from c1 to c2. Found through the side-colored Levi graphs.
pub fn is_isomorphic(
    c1: &Configuration,
    c2: &Configuration,
) -> Option<(Vec<usize>, Vec<usize>)> {
    let (v1, v2) = (c1.point_count(), c2.point_count());
    if v1 != v2 || c1.block_count() != c2.block_count() {
        return None;
    }
    let (l1, l2) = (levi_graph(c1), levi_graph(c2));
    let color = |v: usize, total: usize| -> Vec<u32> {
        (0..total).map(|u| u32::from(u >= v)).collect()
    };
    let m = graph_isomorphic_colored(
        &l1,
        &color(v1, l1.vertex_count()),
        &l2,
        &color(v2, l2.vertex_count()),
    )?;
    let point_map = m[..v1].to_vec();
    let block_map = m[v1..].iter().map(|&u| u - v2).collect();
    Some((point_map, block_map))
}

/// Swaps the roles of points and blocks: dual point j = block entry j,
/// dual block i = the set of block entries containing point i.
pub fn dual(c: &Configuration) -> Configuration {
    let blocks: Vec<Vec<usize>> = (0..c.point_count()).map(|i| c.blocks_through(i)).collect();
    Configuration::new(c.block_count(), blocks, None)
        .expect("dual blocks of a valid configuration are valid")
}

/// Order of the automorphism group: incidence-preserving permutations
/// fixing the sides, counted on the side-colored Levi graph.
pub fn automorphism_order(c: &Configuration) -> Result<u128, ConfigError> {
    let v = c.point_count();
    let levi = levi_graph(c);
    let colors: Vec<u32> = (0..levi.vertex_count()).map(|u| u32::from(u >= v)).collect();
    Ok(automorphism_group_colored(&levi, &colors)?.order)
}

/// Graph on the points with an edge where the concurrence count is zero.
pub fn deficiency_graph(c: &Configuration) -> Result<Multigraph, ConfigError> {
    let v = c.point_count();
    let mut g = Multigraph::new(v);
    for x in 0..v {
        let counts = concurrence_counts(c, x)?;
        for (y, &cnt) in counts.iter().enumerate().skip(x + 1) {
            if cnt == 0 {
                g.add_edge(x, y);
            }
        }
    }
    if let Some(labels) = c.point_labels() {
        g.set_labels(labels.to_vec());
    }
    Ok(g)
}

/// The pentagonal property: for every point x, the points not collinear
/// with x are nonempty and are exactly the points of a single block, which
/// does not contain x.
pub fn pentagonal_check(c: &Configuration) -> PentagonalReport {
    let v = c.point_count();
    let mut opposite = Vec::with_capacity(v);
    for x in 0..v {
        let counts = concurrence_counts(c, x).expect("x ranges over the points");
        let zero_set: Vec<usize> =
            (0..v).filter(|&y| y != x && counts[y] == 0).collect();
        if zero_set.is_empty() {
            return PentagonalReport {
                holds: false,
                opposite_line: None,
                failure_witness: Some((x, String::from("every other point is collinear with it"))),
            };
        }
        match c.blocks().iter().position(|b| *b == zero_set) {
            Some(j) => opposite.push(j),
            None => {
                return PentagonalReport {
                    holds: false,
                    opposite_line: None,
                    failure_witness: Some((
                        x,
                        String::from("its non-collinear points do not form a block"),
                    )),
                }
            }
        }
    }
    PentagonalReport { holds: true, opposite_line: Some(opposite), failure_witness: None }
}

/// The generalized pentagonal property for a given d ≥ 1: every
/// concurrence count lies in {d−1, d} and the count-(d−1) points of each
/// point form a single block. For balanced self-polar inputs the report
/// also states whether v = 1 + r²/d.
pub fn generalized_pentagonal_check(
    c: &Configuration,
    d: usize,
) -> Result<GeneralizedPentagonalReport, ConfigError> {
    if d == 0 {
        return Err(ConfigError::InvalidParameter(String::from("d must be at least 1")));
    }
    let v = c.point_count();
    let mut holds = true;
    let mut opposite = Vec::with_capacity(v);
    let mut witness = None;
    'points: for x in 0..v {
        let counts = concurrence_counts(c, x)?;
        let mut low_set = Vec::new();
        for y in 0..v {
            if y == x {
                continue;
            }
            if counts[y] == d - 1 {
                low_set.push(y);
            } else if counts[y] != d {
                holds = false;
                witness = Some((
                    x,
                    alloc::format!("point {y} has concurrence {} outside {{{}, {d}}}", counts[y], d - 1),
                ));
                break 'points;
            }
        }
        match c.blocks().iter().position(|b| *b == low_set) {
            Some(j) => opposite.push(j),
            None => {
                holds = false;
                witness = Some((
                    x,
                    alloc::format!("its count-{} points do not form a block", d - 1),
                ));
                break 'points;
            }
        }
    }
    let summary = summarize(c);
    let count_identity = if summary.balanced_vr && find_polarity(c)?.is_some() {
        let r = summary.r.uniform().expect("balanced summary has uniform r");
        Some(r * r % d == 0 && summary.v == 1 + r * r / d)
    } else {
        None
    };
    Ok(GeneralizedPentagonalReport {
        d,
        holds,
        opposite_line: if holds { Some(opposite) } else { None },
        failure_witness: witness,
        count_identity,
    })
}

/// Removes point x, its opposite line, and every point on that line;
/// removed points are deleted from the remaining blocks and emptied
/// blocks are dropped. Requires the pentagonal property.
pub fn remove_point_and_opposite(
    c: &Configuration,
    x: usize,
) -> Result<Configuration, ConfigError> {
    if x >= c.point_count() {
        return Err(ConfigError::InvalidParameter(alloc::format!("point {x} out of range")));
    }
    let report = pentagonal_check(c);
    let Some(opposite) = report.opposite_line else {
        let (point, reason) =
            report.failure_witness.unwrap_or((x, String::from("property fails")));
        return Err(ConfigError::NotPentagonal { point, reason });
    };
    let line = opposite[x];
    let mut removed = vec![false; c.point_count()];
    removed[x] = true;
    for &p in &c.blocks()[line] {
        removed[p] = true;
    }
    let survivors: Vec<usize> = (0..c.point_count()).filter(|&p| !removed[p]).collect();
    let mut new_index = vec![usize::MAX; c.point_count()];
    for (ni, &p) in survivors.iter().enumerate() {
        new_index[p] = ni;
    }
    let blocks: Vec<Vec<usize>> = c
        .blocks()
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != line)
        .map(|(_, b)| b.iter().filter(|&&p| !removed[p]).map(|&p| new_index[p]).collect())
        .filter(|b: &Vec<usize>| !b.is_empty())
        .collect();
    let labels = c
        .point_labels()
        .map(|l| survivors.iter().map(|&p| l[p].clone()).collect());
    Configuration::new(survivors.len(), blocks, labels)
}

/// Whether g is a Moore graph of diameter two: r-regular with girth 5,
/// diameter 2, and exactly r² + 1 vertices.
pub fn moore_graph_check(g: &Multigraph) -> bool {
    let Some(r) = g.is_regular() else {
        return false;
    };
    g.vertex_count() == r * r + 1
        && graphs::girth(g) == Some(5)
        && graphs::diameter(g) == Some(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{
        cycle, generalized_petersen, graph_isomorphic, hoffman_singleton, kronecker_cover, paley,
        rook,
    };
    use crate::maps::{build_map, build_yp_map, dual_map, find_rotary_pairs, underlying_graph};
    use crate::perm::{build_gl23, build_psl27, build_s5, Group};

    fn geometry(g: &Multigraph) -> Configuration {
        neighborhood_geometry(g).unwrap()
    }

    fn map_graph(group: &Group, p: usize, q: usize) -> Multigraph {
        let pair = find_rotary_pairs(group, p, q).unwrap().into_iter().next().unwrap();
        underlying_graph(&build_map(pair).unwrap())
    }

    fn dual_graph(group: &Group, p: usize, q: usize) -> Multigraph {
        let pair = find_rotary_pairs(group, p, q).unwrap().into_iter().next().unwrap();
        underlying_graph(&dual_map(&build_map(pair).unwrap()).unwrap())
    }

    #[test]
    fn pentagon_blocks_and_summary() {
        let c = geometry(&cycle(5).unwrap());
        assert_eq!(
            c.blocks(),
            &[vec![1, 4], vec![0, 2], vec![1, 3], vec![2, 4], vec![0, 3]]
        );
        let s = summarize(&c);
        assert_eq!((s.v, s.b), (5, 5));
        assert_eq!(s.r, Counts::Uniform(2));
        assert_eq!(s.k, Counts::Uniform(2));
        assert!(s.balanced_vr && s.linear);
        assert_eq!(s.linear_dimension, LinearDimension::Finite(1));
        assert!(natural_polarity_holds(&c).unwrap());
        assert_eq!(split_components(&c).len(), 1);
        assert!(graph_isomorphic(&levi_graph(&c), &cycle(10).unwrap()).is_some());
    }

    #[test]
    fn pentagon_is_pentagonal() {
        let c = geometry(&cycle(5).unwrap());
        let report = pentagonal_check(&c);
        assert!(report.holds);
        assert_eq!(report.opposite_line, Some(vec![0, 1, 2, 3, 4]));
        let removed = remove_point_and_opposite(&c, 0).unwrap();
        assert_eq!(removed.point_count(), 2);
        assert_eq!(removed.block_count(), 4);
        assert!(removed.blocks().iter().all(|b| b.len() == 1));
    }

    #[test]
    fn pentagon_generalized_d1() {
        let c = geometry(&cycle(5).unwrap());
        let report = generalized_pentagonal_check(&c, 1).unwrap();
        assert!(report.holds);
        assert_eq!(report.count_identity, Some(true));
        assert!(generalized_pentagonal_check(&c, 0).is_err());
    }

    #[test]
    fn concurrence_counts_exclude_the_point() {
        let c = geometry(&cycle(5).unwrap());
        assert_eq!(concurrence_counts(&c, 0).unwrap(), vec![0, 0, 1, 1, 0]);
    }

    #[test]
    fn desargues_configuration_suite() {
        let m = generalized_petersen(5, 2).unwrap();
        assert!(moore_graph_check(&m));
        let c = geometry(&m);
        let s = summarize(&c);
        assert_eq!((s.v, s.b), (10, 10));
        assert_eq!(s.r, Counts::Uniform(3));
        assert!(s.balanced_vr && s.linear);
        assert!(pentagonal_check(&c).holds);
        assert!(graph_isomorphic(&deficiency_graph(&c).unwrap(), &m).is_some());
        assert_eq!(automorphism_order(&c).unwrap(), 120);
        let removed = remove_point_and_opposite(&c, 0).unwrap();
        assert_eq!(removed.point_count(), 6);
    }

    #[test]
    fn moore_recovery_identity() {
        for m in [cycle(5).unwrap(), generalized_petersen(5, 2).unwrap(), hoffman_singleton()] {
            let c = geometry(&m);
            let recovered = geometry(&deficiency_graph(&c).unwrap());
            assert!(is_isomorphic(&recovered, &c).is_some());
        }
    }

    #[test]
    fn hoffman_singleton_pentagonal_suite() {
        let m = hoffman_singleton();
        assert!(moore_graph_check(&m));
        let c = geometry(&m);
        let s = summarize(&c);
        assert_eq!((s.v, s.b), (50, 50));
        assert_eq!(s.r, Counts::Uniform(7));
        assert!(s.linear);
        assert!(pentagonal_check(&c).holds);
        assert!(graph_isomorphic(&deficiency_graph(&c).unwrap(), &m).is_some());
        let removed = remove_point_and_opposite(&c, 0).unwrap();
        let rs = summarize(&removed);
        assert_eq!(rs.v, 42);
        assert_eq!(rs.r, Counts::Uniform(7));
        assert_eq!(rs.k, Counts::Uniform(6));
        assert!(pentagonal_check(&removed).holds);
    }

    #[test]
    fn klein_56_3_is_linear_and_autopolar() {
        let g = map_graph(&build_psl27(), 3, 7);
        let c = geometry(&g);
        let s = summarize(&c);
        assert_eq!((s.v, s.b), (56, 56));
        assert_eq!(s.r, Counts::Uniform(3));
        assert!(s.balanced_vr && s.linear);
        assert!(natural_polarity_holds(&c).unwrap());
        assert!(!pentagonal_check(&c).holds);
    }

    #[test]
    fn klein_dual_24_7_concurrences() {
        let g = dual_graph(&build_psl27(), 3, 7);
        let c = geometry(&g);
        let s = summarize(&c);
        assert_eq!((s.v, s.b), (24, 24));
        assert_eq!(s.r, Counts::Uniform(7));
        assert_eq!(s.linear_dimension, LinearDimension::Finite(2));
        for x in 0..24 {
            let counts = concurrence_counts(&c, x).unwrap();
            let zeros = (0..24).filter(|&y| y != x && counts[y] == 0).count();
            let twos = (0..24).filter(|&y| y != x && counts[y] == 2).count();
            assert_eq!((zeros, twos), (2, 21));
        }
    }

    #[test]
    fn bring_dual_12_5_antipodal() {
        let g = dual_graph(&build_s5(), 4, 5);
        let comps = split_components(&geometry(&g));
        assert_eq!(comps.len(), 2);
        for c in &comps {
            let s = summarize(c);
            assert_eq!((s.v, s.b), (12, 12));
            assert_eq!(s.r, Counts::Uniform(5));
            assert_eq!(s.linear_dimension, LinearDimension::Finite(2));
            let mut matched = vec![false; 12];
            for x in 0..12 {
                let counts = concurrence_counts(c, x).unwrap();
                let zeros: Vec<usize> = (0..12).filter(|&y| y != x && counts[y] == 0).collect();
                let twos = (0..12).filter(|&y| y != x && counts[y] == 2).count();
                assert_eq!((zeros.len(), twos), (1, 10));
                matched[zeros[0]] = true;
            }
            assert!(matched.iter().all(|&m| m), "zero-concurrence is a perfect matching");
            assert!(find_polarity(c).unwrap().is_some());
        }
    }

    #[test]
    fn bolza_components_are_moebius_kantor() {
        let g = map_graph(&build_gl23(), 3, 8);
        let c = geometry(&g);
        let comps = split_components(&c);
        assert_eq!(comps.len(), 2);
        let mk = generalized_petersen(8, 3).unwrap();
        for comp in &comps {
            let s = summarize(comp);
            assert_eq!((s.v, s.b), (8, 8));
            assert_eq!(s.r, Counts::Uniform(3));
            assert!(s.linear);
            assert!(graph_isomorphic(&levi_graph(comp), &mk).is_some());
            let mut matched = vec![false; 8];
            for x in 0..8 {
                let counts = concurrence_counts(comp, x).unwrap();
                let zeros: Vec<usize> = (0..8).filter(|&y| y != x && counts[y] == 0).collect();
                assert_eq!(zeros.len(), 1);
                matched[zeros[0]] = true;
            }
            assert!(matched.iter().all(|&m| m));
        }
        assert!(is_isomorphic(&comps[0], &comps[1]).is_some());
        assert!(is_isomorphic(&dual(&comps[0]), &comps[1]).is_some());
    }

    #[test]
    fn bolza_dual_is_doubled_config() {
        let g = dual_graph(&build_gl23(), 3, 8);
        let c = geometry(&g);
        let s = summarize(&c);
        assert_eq!((s.v, s.b), (6, 6));
        assert_eq!(s.r, Counts::Uniform(4));
        assert_eq!(s.k, Counts::Uniform(4));
        assert_eq!(s.distinct_block_count, 3);
        assert_eq!(s.linear_dimension, LinearDimension::Finite(2));
    }

    #[test]
    fn yp3_geometry_components() {
        let m = build_yp_map(3).unwrap();
        let c = geometry(&underlying_graph(&m));
        let comps = split_components(&c);
        assert_eq!(comps.len(), 2);
        let rook_geom = split_components(&geometry(&rook(3, 3).unwrap()));
        assert_eq!(rook_geom.len(), 1);
        for comp in &comps {
            let s = summarize(comp);
            assert_eq!((s.v, s.b), (9, 9));
            assert_eq!(s.r, Counts::Uniform(4));
            assert_eq!(s.linear_dimension, LinearDimension::Finite(2));
            assert!(find_polarity(comp).unwrap().is_some());
            assert_eq!(automorphism_order(comp).unwrap() % 72, 0);
            for x in 0..9 {
                let counts = concurrence_counts(comp, x).unwrap();
                assert!((0..9).all(|y| y == x || (1..=2).contains(&counts[y])));
            }
            let report = generalized_pentagonal_check(comp, 2).unwrap();
            assert!(report.holds);
            assert_eq!(report.count_identity, Some(true));
            assert!(is_isomorphic(comp, &rook_geom[0]).is_some());
        }
        assert!(is_isomorphic(&comps[0], &comps[1]).is_some());
        assert!(is_isomorphic(&dual(&comps[0]), &comps[1]).is_some());
    }

    #[test]
    fn rook_graph_is_not_moore() {
        assert!(!moore_graph_check(&rook(3, 3).unwrap()));
    }

    #[test]
    fn paley_cover_component_is_generalized_pentagonal_d3() {
        let cover = kronecker_cover(&paley(13).unwrap());
        let comps = split_components(&geometry(&cover));
        assert_eq!(comps.len(), 2);
        for comp in &comps {
            let s = summarize(comp);
            assert_eq!((s.v, s.b), (13, 13));
            assert_eq!(s.r, Counts::Uniform(6));
            let report = generalized_pentagonal_check(comp, 3).unwrap();
            assert!(report.holds);
            assert_eq!(report.count_identity, Some(true));
        }
    }

    #[test]
    fn natural_polarity_counterexample() {
        let c = Configuration::new(2, vec![vec![1], vec![1]], None).unwrap();
        assert!(!natural_polarity_holds(&c).unwrap());
        let odd = Configuration::new(2, vec![vec![0]], None).unwrap();
        assert_eq!(
            natural_polarity_holds(&odd).unwrap_err(),
            ConfigError::NotSquare { points: 2, blocks: 1 }
        );
    }

    #[test]
    fn dual_of_dual_roundtrip() {
        for g in [cycle(5).unwrap(), generalized_petersen(5, 2).unwrap()] {
            let c = geometry(&g);
            assert!(is_isomorphic(&dual(&dual(&c)), &c).is_some());
        }
        let doubled = geometry(&dual_graph(&build_gl23(), 3, 8));
        let dd = dual(&doubled);
        assert_eq!(dd.point_count(), 6);
        assert_eq!(dd.block_count(), 6);
    }

    #[test]
    fn degenerate_dimension_flag() {
        let c = Configuration::new(2, vec![vec![0, 1], vec![0, 1]], None).unwrap();
        let s = summarize(&c);
        assert_eq!(s.linear_dimension, LinearDimension::Degenerate);
        assert!(!s.linear);
        assert_eq!(s.distinct_block_count, 1);
    }

    #[test]
    fn isolated_vertex_has_no_block() {
        let mut g = Multigraph::new(2);
        g.add_edge(0, 0);
        assert_eq!(neighborhood_geometry(&g).unwrap_err(), ConfigError::EmptyNeighborhood(1));
    }

    #[test]
    fn levi_kronecker_identity() {
        for g in [generalized_petersen(5, 2).unwrap(), rook(3, 3).unwrap()] {
            let c = geometry(&g);
            assert!(graph_isomorphic(&levi_graph(&c), &kronecker_cover(&g)).is_some());
        }
    }

    #[test]
    fn configuration_validation() {
        assert!(matches!(
            Configuration::new(2, vec![vec![]], None),
            Err(ConfigError::InvalidBlock(_))
        ));
        assert!(matches!(
            Configuration::new(2, vec![vec![2]], None),
            Err(ConfigError::InvalidBlock(_))
        ));
        let c = Configuration::new(3, vec![vec![2, 0, 2]], None).unwrap();
        assert_eq!(c.blocks(), &[vec![0, 2]]);
    }
}
