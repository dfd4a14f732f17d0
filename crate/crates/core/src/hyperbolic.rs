//! Poincaré-disk patches of uniform hyperbolic tilings and the isometric
//! circles through the neighbors of each vertex.
//!
//! A tiling of type {p, q} here means p faces of size q around every
//! vertex, matching the (valency, face size) convention of the maps
//! module. Patches are grown breadth-first from a vertex at the origin;
//! every position stays in the open unit disk, every edge has the one
//! tiling edge length, and the neighbors of each interior vertex lie on
//! a common circle whose hyperbolic radius is that same length.

use alloc::collections::BTreeMap;
use alloc::collections::BTreeSet;
use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;
use core::fmt::Write as _;

/// Positions closer than this are the same vertex.
pub const DEDUP_TOL: f64 = 1e-9;
/// Edge lengths must match the tiling's common length this closely.
pub const EDGE_LENGTH_TOL: f64 = 1e-9;
/// Neighbors must sit on their circle this closely.
pub const CONCYCLIC_TOL: f64 = 1e-6;
/// All neighbor circles share one hyperbolic radius this closely.
pub const ISOMETRIC_TOL: f64 = 1e-9;
/// The two closed forms for the triangle sides must agree this closely.
pub const TRIANGLE_IDENTITY_TOL: f64 = 1e-12;
/// Patch growth is capped at this expansion depth.
pub const MAX_DEPTH: usize = 6;

#[derive(Debug, Clone, PartialEq)]
pub enum HyperbolicError {
    /// (p−2)(q−2) must exceed 4.
    NotHyperbolic { p: usize, q: usize },
    DepthBoundExceeded { depth: usize, max: usize },
    NotInterior(usize),
    InvalidParameter(String),
}

impl fmt::Display for HyperbolicError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HyperbolicError::NotHyperbolic { p, q } => {
                write!(f, "type ({p},{q}) is not hyperbolic: (p-2)(q-2) must exceed 4")
            }
            HyperbolicError::DepthBoundExceeded { depth, max } => {
                write!(f, "depth {depth} exceeds the bound {max}")
            }
            HyperbolicError::NotInterior(v) => {
                write!(f, "vertex {v} does not have its full neighborhood")
            }
            HyperbolicError::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
        }
    }
}

/// Tiling type {p, q}: p = vertex valency, q = face size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TilingSpec {
    pub p: usize,
    pub q: usize,
}

impl TilingSpec {
    /// Accepts hyperbolic types only: (p−2)(q−2) > 4.
    pub fn new(p: usize, q: usize) -> Result<TilingSpec, HyperbolicError> {
        if p < 3 || q < 3 || (p - 2) * (q - 2) <= 4 {
            return Err(HyperbolicError::NotHyperbolic { p, q });
        }
        Ok(TilingSpec { p, q })
    }
}

/// A Euclidean circle in disk coordinates. Hyperbolic circles inside the
/// unit disk appear exactly as such circles, with displaced centers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EuclideanCircle {
    pub center: (f64, f64),
    pub radius: f64,
}

/// A finite simply-connected piece of the tiling.
#[derive(Debug, Clone)]
pub struct TilingPatch {
    pub spec: TilingSpec,
    /// Unit-disk coordinates, |z| < 1; vertex 0 is the origin.
    pub vertex_positions: Vec<(f64, f64)>,
    /// Index pairs (u, w) with u < w.
    pub edges: Vec<(usize, usize)>,
    /// Ascending neighbor lists.
    pub adjacency: Vec<Vec<usize>>,
    /// True where all p neighbors are present in the patch.
    pub interior_mask: Vec<bool>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Cpx {
    re: f64,
    im: f64,
}

impl Cpx {
    const ZERO: Cpx = Cpx { re: 0.0, im: 0.0 };

    fn new(re: f64, im: f64) -> Cpx {
        Cpx { re, im }
    }

    fn conj(self) -> Cpx {
        Cpx::new(self.re, -self.im)
    }

    fn add(self, o: Cpx) -> Cpx {
        Cpx::new(self.re + o.re, self.im + o.im)
    }

    fn sub(self, o: Cpx) -> Cpx {
        Cpx::new(self.re - o.re, self.im - o.im)
    }

    fn mul(self, o: Cpx) -> Cpx {
        Cpx::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }

    fn div(self, o: Cpx) -> Cpx {
        let d = o.abs2();
        let n = self.mul(o.conj());
        Cpx::new(n.re / d, n.im / d)
    }

    fn abs2(self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    fn abs(self) -> f64 {
        libm::hypot(self.re, self.im)
    }

    fn arg(self) -> f64 {
        libm::atan2(self.im, self.re)
    }

    fn polar(r: f64, theta: f64) -> Cpx {
        Cpx::new(r * libm::cos(theta), r * libm::sin(theta))
    }
}

/// Disk isometry sending the origin to v.
fn mobius_from_origin(v: Cpx, z: Cpx) -> Cpx {
    z.add(v).div(Cpx::new(1.0, 0.0).add(v.conj().mul(z)))
}

/// Disk isometry sending v to the origin.
fn mobius_to_origin(v: Cpx, z: Cpx) -> Cpx {
    z.sub(v).div(Cpx::new(1.0, 0.0).sub(v.conj().mul(z)))
}

/// Distance in the disk model: 2·atanh of the Möbius displacement.
pub fn hyperbolic_distance(a: (f64, f64), b: (f64, f64)) -> f64 {
    let za = Cpx::new(a.0, a.1);
    let zb = Cpx::new(b.0, b.1);
    let disp = za.sub(zb).div(Cpx::new(1.0, 0.0).sub(za.conj().mul(zb)));
    2.0 * libm::atanh(disp.abs())
}

/// The common edge length L of the tiling, from the right triangle with
/// angles π/2, π/p, π/q: cosh(L/2) = cos(π/q) / sin(π/p). The hypotenuse
/// identity cosh(h) = cot(π/p)·cot(π/q) is checked as well.
pub fn edge_length(spec: TilingSpec) -> f64 {
    let ap = PI / spec.p as f64;
    let aq = PI / spec.q as f64;
    let half = libm::acosh(libm::cos(aq) / libm::sin(ap));
    let other = libm::acosh(libm::cos(ap) / libm::sin(aq));
    let hyp = (libm::cos(ap) / libm::sin(ap)) * (libm::cos(aq) / libm::sin(aq));
    let residual = hyp - libm::cosh(half) * libm::cosh(other);
    assert!(
        libm::fabs(residual) < TRIANGLE_IDENTITY_TOL,
        "triangle identity residual {residual}"
    );
    2.0 * half
}

/// Vertex store with grid-bucketed deduplication at DEDUP_TOL.
struct VertexStore {
    positions: Vec<Cpx>,
    grid: BTreeMap<(i64, i64), Vec<usize>>,
}

const GRID_CELL: f64 = 1e-3;

impl VertexStore {
    fn new() -> VertexStore {
        VertexStore { positions: Vec::new(), grid: BTreeMap::new() }
    }

    fn cell(z: Cpx) -> (i64, i64) {
        (libm::floor(z.re / GRID_CELL) as i64, libm::floor(z.im / GRID_CELL) as i64)
    }

    /// Returns (index, freshly inserted).
    fn find_or_insert(&mut self, z: Cpx) -> (usize, bool) {
        let (cx, cy) = Self::cell(z);
        for dx in -1..=1 {
            for dy in -1..=1 {
                if let Some(bucket) = self.grid.get(&(cx + dx, cy + dy)) {
                    for &i in bucket {
                        if self.positions[i].sub(z).abs() < DEDUP_TOL {
                            return (i, false);
                        }
                    }
                }
            }
        }
        let i = self.positions.len();
        self.positions.push(z);
        self.grid.entry((cx, cy)).or_default().push(i);
        (i, true)
    }
}

/// Grows the patch breadth-first from the origin: every vertex reached at
/// BFS depth below `depth` is expanded by placing its p neighbors at
/// equal angles 2π/p, anchored at an already-known neighbor direction.
pub fn build_patch(spec: TilingSpec, depth: usize) -> Result<TilingPatch, HyperbolicError> {
    if depth > MAX_DEPTH {
        return Err(HyperbolicError::DepthBoundExceeded { depth, max: MAX_DEPTH });
    }
    let spec = TilingSpec::new(spec.p, spec.q)?;
    let rho = libm::tanh(edge_length(spec) / 2.0);
    let mut store = VertexStore::new();
    let (root, _) = store.find_or_insert(Cpx::ZERO);
    let mut adjacency: Vec<BTreeSet<usize>> = vec![BTreeSet::new()];
    let mut queue = VecDeque::new();
    queue.push_back((root, 0usize));
    while let Some((v, d)) = queue.pop_front() {
        if d == depth {
            continue;
        }
        let pos_v = store.positions[v];
        let theta0 = match adjacency[v].iter().next() {
            Some(&anchor) => mobius_to_origin(pos_v, store.positions[anchor]).arg(),
            None => 0.0,
        };
        for k in 0..spec.p {
            let local = Cpx::polar(rho, theta0 + 2.0 * PI * k as f64 / spec.p as f64);
            let w_pos = mobius_from_origin(pos_v, local);
            let (w, fresh) = store.find_or_insert(w_pos);
            if fresh {
                adjacency.push(BTreeSet::new());
                queue.push_back((w, d + 1));
            }
            adjacency[v].insert(w);
            adjacency[w].insert(v);
        }
    }
    let adjacency: Vec<Vec<usize>> =
        adjacency.into_iter().map(|s| s.into_iter().collect()).collect();
    let mut edges = Vec::new();
    for (u, nbs) in adjacency.iter().enumerate() {
        for &w in nbs {
            if u < w {
                edges.push((u, w));
            }
        }
    }
    let interior_mask = adjacency.iter().map(|nbs| nbs.len() == spec.p).collect();
    Ok(TilingPatch {
        spec,
        vertex_positions: store.positions.iter().map(|z| (z.re, z.im)).collect(),
        edges,
        adjacency,
        interior_mask,
    })
}

fn circumcircle(a: Cpx, b: Cpx, c: Cpx) -> EuclideanCircle {
    let d = 2.0 * (a.re * (b.im - c.im) + b.re * (c.im - a.im) + c.re * (a.im - b.im));
    assert!(libm::fabs(d) > 1e-14, "circumcircle of collinear points");
    let ux = (a.abs2() * (b.im - c.im) + b.abs2() * (c.im - a.im) + c.abs2() * (a.im - b.im)) / d;
    let uy = (a.abs2() * (c.re - b.re) + b.abs2() * (a.re - c.re) + c.abs2() * (b.re - a.re)) / d;
    let center = Cpx::new(ux, uy);
    EuclideanCircle { center: (ux, uy), radius: a.sub(center).abs() }
}

/// The circle through the p neighbors of an interior vertex, as the
/// Euclidean circumcircle of three of them. Its hyperbolic center is the
/// vertex itself; its hyperbolic radius is the edge length.
pub fn neighbor_circle(patch: &TilingPatch, v: usize) -> Result<EuclideanCircle, HyperbolicError> {
    if v >= patch.vertex_positions.len() {
        return Err(HyperbolicError::InvalidParameter(alloc::format!("vertex {v} out of range")));
    }
    if !patch.interior_mask[v] {
        return Err(HyperbolicError::NotInterior(v));
    }
    let at = |i: usize| {
        let (x, y) = patch.vertex_positions[patch.adjacency[v][i]];
        Cpx::new(x, y)
    };
    Ok(circumcircle(at(0), at(1), at(2)))
}

/// The circle containing the geodesic through two disk points: orthogonal
/// to the unit circle, so |center|² = radius² + 1. None when the two
/// points are collinear with the origin and the geodesic is a diameter.
pub fn geodesic_arc(a: (f64, f64), b: (f64, f64)) -> Option<EuclideanCircle> {
    let cross = a.0 * b.1 - a.1 * b.0;
    let det = 4.0 * cross;
    if libm::fabs(det) < 1e-12 {
        return None;
    }
    let ra = a.0 * a.0 + a.1 * a.1 + 1.0;
    let rb = b.0 * b.0 + b.1 * b.1 + 1.0;
    let cx = (ra * (2.0 * b.1) - rb * (2.0 * a.1)) / det;
    let cy = (rb * (2.0 * a.0) - ra * (2.0 * b.0)) / det;
    let radius = libm::sqrt(cx * cx + cy * cy - 1.0);
    Some(EuclideanCircle { center: (cx, cy), radius })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RenderOptions {
    pub show_edges: bool,
    pub show_circles: bool,
    /// Output width and height in pixels.
    pub size: f64,
    pub edge_stroke: f64,
    pub circle_stroke: f64,
}

impl Default for RenderOptions {
    fn default() -> RenderOptions {
        RenderOptions {
            show_edges: true,
            show_circles: true,
            size: 800.0,
            edge_stroke: 1.2,
            circle_stroke: 0.8,
        }
    }
}

/// Margin factor around the unit disk in the viewport.
const EXTENT: f64 = 1.05;

struct Viewport {
    size: f64,
}

impl Viewport {
    fn px(&self, z: (f64, f64)) -> (f64, f64) {
        (
            (z.0 + EXTENT) / (2.0 * EXTENT) * self.size,
            (EXTENT - z.1) / (2.0 * EXTENT) * self.size,
        )
    }

    fn scale(&self, r: f64) -> f64 {
        r * self.size / (2.0 * EXTENT)
    }
}

/// Renders the patch as an SVG 1.1 document: the unit-circle boundary,
/// geodesic edges as circular arcs orthogonal to the boundary (straight
/// diameters when collinear with the origin), and one neighbor circle per
/// interior vertex.
pub fn render_svg(patch: &TilingPatch, options: &RenderOptions) -> String {
    let vp = Viewport { size: options.size };
    let mut svg = String::new();
    let s = options.size;
    let _ = write!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"{s:.0}\" height=\"{s:.0}\" viewBox=\"0 0 {s:.0} {s:.0}\">\n"
    );
    let (bx, by) = vp.px((0.0, 0.0));
    let _ = write!(
        svg,
        "  <circle class=\"disk-boundary\" cx=\"{bx:.4}\" cy=\"{by:.4}\" r=\"{:.4}\" \
         fill=\"none\" stroke=\"#202020\" stroke-width=\"1\"/>\n",
        vp.scale(1.0)
    );
    if options.show_edges {
        let _ = write!(
            svg,
            "  <g class=\"edges\" fill=\"none\" stroke=\"#28407a\" stroke-width=\"{:.3}\">\n",
            options.edge_stroke
        );
        for &(u, w) in &patch.edges {
            let a = patch.vertex_positions[u];
            let b = patch.vertex_positions[w];
            let (ax, ay) = vp.px(a);
            let (bx2, by2) = vp.px(b);
            match geodesic_arc(a, b) {
                None => {
                    let _ = write!(
                        svg,
                        "    <path d=\"M {ax:.4} {ay:.4} L {bx2:.4} {by2:.4}\"/>\n"
                    );
                }
                Some(circle) => {
                    let r = vp.scale(circle.radius);
                    let c = circle.center;
                    let cross = (a.0 - c.0) * (b.1 - c.1) - (a.1 - c.1) * (b.0 - c.0);
                    let sweep = if cross > 0.0 { 0 } else { 1 };
                    let _ = write!(
                        svg,
                        "    <path d=\"M {ax:.4} {ay:.4} A {r:.4} {r:.4} 0 0 {sweep} \
                         {bx2:.4} {by2:.4}\"/>\n"
                    );
                }
            }
        }
        svg.push_str("  </g>\n");
    }
    if options.show_circles {
        let _ = write!(
            svg,
            "  <g class=\"neighbor-circles\" fill=\"none\" stroke=\"#0a7a4f\" \
             stroke-width=\"{:.3}\">\n",
            options.circle_stroke
        );
        for v in 0..patch.vertex_positions.len() {
            if !patch.interior_mask[v] {
                continue;
            }
            let circle = neighbor_circle(patch, v).expect("interior vertex");
            let (cx, cy) = vp.px(circle.center);
            let _ = write!(
                svg,
                "    <circle class=\"neighbor-circle\" cx=\"{cx:.4}\" cy=\"{cy:.4}\" \
                 r=\"{:.4}\"/>\n",
                vp.scale(circle.radius)
            );
        }
        svg.push_str("  </g>\n");
    }
    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(p: usize, q: usize) -> TilingSpec {
        TilingSpec::new(p, q).unwrap()
    }

    #[test]
    fn edge_length_frozen_values() {
        assert!((edge_length(spec(7, 3)) - 1.090549663507087).abs() < 1e-12);
        assert!((edge_length(spec(4, 6)) - 1.316957896924817).abs() < 1e-12);
        assert!((edge_length(spec(3, 7)) - 0.566256306735315).abs() < 1e-12);
    }

    #[test]
    fn euclidean_and_spherical_types_rejected() {
        assert_eq!(
            TilingSpec::new(4, 4).unwrap_err(),
            HyperbolicError::NotHyperbolic { p: 4, q: 4 }
        );
        assert!(TilingSpec::new(3, 6).is_err());
        assert!(TilingSpec::new(5, 3).is_err());
        assert!(TilingSpec::new(2, 9).is_err());
    }

    #[test]
    fn depth_zero_and_star() {
        let p0 = build_patch(spec(7, 3), 0).unwrap();
        assert_eq!(p0.vertex_positions.len(), 1);
        assert!(p0.edges.is_empty());
        assert!(!p0.interior_mask[0]);

        let p1 = build_patch(spec(7, 3), 1).unwrap();
        assert_eq!(p1.vertex_positions.len(), 8);
        assert_eq!(p1.edges.len(), 7);
        assert!(p1.interior_mask[0]);
        assert!(p1.interior_mask[1..].iter().all(|&m| !m));

        assert!(matches!(
            build_patch(spec(7, 3), 7),
            Err(HyperbolicError::DepthBoundExceeded { .. })
        ));
    }

    #[test]
    fn heptagonal_depth_two_counts() {
        let p2 = build_patch(spec(7, 3), 2).unwrap();
        assert_eq!(p2.vertex_positions.len(), 29);
        assert_eq!(p2.edges.len(), 42);
        assert_eq!(p2.interior_mask.iter().filter(|&&m| m).count(), 8);
    }

    #[test]
    fn all_edges_have_the_spec_length() {
        for (sp, depth) in [(spec(7, 3), 2), (spec(4, 6), 3), (spec(3, 7), 3)] {
            let l = edge_length(sp);
            let patch = build_patch(sp, depth).unwrap();
            assert!(patch
                .vertex_positions
                .iter()
                .all(|&(x, y)| x * x + y * y < 1.0));
            for &(u, w) in &patch.edges {
                let d = hyperbolic_distance(patch.vertex_positions[u], patch.vertex_positions[w]);
                assert!((d - l).abs() < EDGE_LENGTH_TOL, "edge ({u},{w}) length {d}");
            }
        }
    }

    #[test]
    fn neighbors_concyclic_and_circles_isometric() {
        for (sp, depth) in [(spec(7, 3), 2), (spec(4, 6), 3)] {
            let l = edge_length(sp);
            let patch = build_patch(sp, depth).unwrap();
            let mut radii = Vec::new();
            for v in 0..patch.vertex_positions.len() {
                if !patch.interior_mask[v] {
                    continue;
                }
                let circle = neighbor_circle(&patch, v).unwrap();
                for &w in &patch.adjacency[v] {
                    let (x, y) = patch.vertex_positions[w];
                    let dist = libm::hypot(x - circle.center.0, y - circle.center.1);
                    assert!((dist - circle.radius).abs() < CONCYCLIC_TOL);
                }
                let hyp_radius = hyperbolic_distance(
                    patch.vertex_positions[v],
                    patch.vertex_positions[patch.adjacency[v][0]],
                );
                assert!((hyp_radius - l).abs() < 1e-6);
                radii.push(hyp_radius);
            }
            assert!(radii.len() >= 2);
            for r in &radii {
                assert!((r - radii[0]).abs() < ISOMETRIC_TOL);
            }
        }
    }

    #[test]
    fn center_circle_sits_at_origin() {
        let sp = spec(7, 3);
        let patch = build_patch(sp, 1).unwrap();
        let circle = neighbor_circle(&patch, 0).unwrap();
        assert!(libm::hypot(circle.center.0, circle.center.1) < 1e-12);
        let rho = libm::tanh(edge_length(sp) / 2.0);
        assert!((circle.radius - rho).abs() < 1e-9);
        for &w in &patch.adjacency[0] {
            let (x, y) = patch.vertex_positions[w];
            assert!((libm::hypot(x, y) - circle.radius).abs() < 1e-9);
        }
        assert_eq!(neighbor_circle(&patch, 1).unwrap_err(), HyperbolicError::NotInterior(1));
    }

    #[test]
    fn patches_are_deterministic() {
        let a = build_patch(spec(4, 6), 3).unwrap();
        let b = build_patch(spec(4, 6), 3).unwrap();
        assert_eq!(a.vertex_positions, b.vertex_positions);
        assert_eq!(a.edges, b.edges);
        assert_eq!(a.interior_mask, b.interior_mask);
    }

    #[test]
    fn geodesic_arcs_are_orthogonal_to_the_boundary() {
        let a = (0.31, 0.12);
        let b = (-0.05, 0.44);
        let circle = geodesic_arc(a, b).unwrap();
        let c2 = circle.center.0 * circle.center.0 + circle.center.1 * circle.center.1;
        assert!((c2 - (circle.radius * circle.radius + 1.0)).abs() < 1e-9);
        for z in [a, b] {
            let d = libm::hypot(z.0 - circle.center.0, z.1 - circle.center.1);
            assert!((d - circle.radius).abs() < 1e-12);
        }
        assert!(geodesic_arc((0.3, 0.0), (-0.15, 0.0)).is_none());
        assert!(geodesic_arc((0.2, 0.2), (0.4, 0.4)).is_none());
    }

    #[test]
    fn svg_structure() {
        let patch = build_patch(spec(7, 3), 2).unwrap();
        let svg = render_svg(&patch, &RenderOptions::default());
        assert!(svg.starts_with("<svg "));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert!(svg.contains("disk-boundary"));
        let interior = patch.interior_mask.iter().filter(|&&m| m).count();
        assert_eq!(svg.matches("class=\"neighbor-circle\"").count(), interior);
        assert_eq!(svg.matches("<path ").count(), patch.edges.len());

        let empty = build_patch(spec(7, 3), 0).unwrap();
        let svg0 = render_svg(&empty, &RenderOptions::default());
        assert!(svg0.contains("disk-boundary"));
        assert!(!svg0.contains("<path "));
        assert!(!svg0.contains("class=\"neighbor-circle\""));
    }

    /// Recovers the arc center from SVG endpoint parameterization and
    /// checks it matches the geodesic circle mapped to pixels.
    #[test]
    fn svg_arc_flags_encode_the_right_center() {
        let patch = build_patch(spec(7, 3), 2).unwrap();
        let options = RenderOptions::default();
        let vp = Viewport { size: options.size };
        let svg = render_svg(&patch, &options);
        let mut checked = 0;
        for (i, &(u, w)) in patch.edges.iter().enumerate() {
            let a = patch.vertex_positions[u];
            let b = patch.vertex_positions[w];
            let Some(circle) = geodesic_arc(a, b) else { continue };
            let line = svg.lines().filter(|l| l.contains("<path ")).nth(i).unwrap();
            let d_attr = line.split("d=\"").nth(1).unwrap().split('"').next().unwrap();
            let nums: Vec<f64> = d_attr
                .split(|c: char| !c.is_ascii_digit() && c != '.' && c != '-')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().unwrap())
                .collect();
            let (x1, y1, r, large, sweep, x2, y2) =
                (nums[0], nums[1], nums[2], nums[5], nums[6], nums[7], nums[8]);
            assert_eq!(large, 0.0);
            let (mx, my) = ((x1 - x2) / 2.0, (y1 - y2) / 2.0);
            let disc = (r * r - mx * mx - my * my) / (mx * mx + my * my);
            assert!(disc >= -1e-9);
            let factor = disc.max(0.0).sqrt();
            let sign = if large != sweep { 1.0 } else { -1.0 };
            let cx = sign * factor * my + (x1 + x2) / 2.0;
            let cy = -sign * factor * mx + (y1 + y2) / 2.0;
            let (ex, ey) = vp.px(circle.center);
            assert!(
                libm::hypot(cx - ex, cy - ey) < 1e-3,
                "edge {i}: implied center ({cx},{cy}) vs expected ({ex},{ey})"
            );
            checked += 1;
        }
        assert!(checked > 10);
    }
}
