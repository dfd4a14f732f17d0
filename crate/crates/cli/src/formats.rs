//! File formats: graph text, DOT export, map JSON, configuration JSON,
//! and the analysis summary JSON.

use nbgeom_core::configs::{
    find_polarity, generalized_pentagonal_check, natural_polarity_holds, pentagonal_check,
    split_components, summarize, Configuration, Counts, LinearDimension,
};
use nbgeom_core::graphs::Multigraph;
use nbgeom_core::maps::{underlying_graph, RegularMap};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::CliError;

/// Graph text format: first line `vertices N`, then one `u v` pair per
/// edge line. Repeated lines are parallel edges, `u u` is a loop.
pub fn write_graph_text(g: &Multigraph) -> String {
    let mut out = format!("vertices {}\n", g.vertex_count());
    for (u, w, m) in g.edges() {
        for _ in 0..m {
            out.push_str(&format!("{u} {w}\n"));
        }
    }
    out
}

pub fn read_graph_text(text: &str) -> Result<Multigraph, CliError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| CliError::Data(String::from("empty graph file")))?;
    let n: usize = header
        .strip_prefix("vertices ")
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| CliError::Data(format!("bad header line '{header}'")))?;
    let mut g = Multigraph::new(n);
    for line in lines {
        let mut it = line.split_whitespace();
        let (u, w) = match (it.next(), it.next(), it.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => return Err(CliError::Data(format!("bad edge line '{line}'"))),
        };
        let u: usize = u
            .parse()
            .map_err(|_| CliError::Data(format!("bad vertex '{u}'")))?;
        let w: usize = w
            .parse()
            .map_err(|_| CliError::Data(format!("bad vertex '{w}'")))?;
        if u >= n || w >= n {
            return Err(CliError::Data(format!("edge {u} {w} out of range 0..{n}")));
        }
        g.add_edge(u, w);
    }
    Ok(g)
}

/// DOT export of an undirected multigraph; labels become node attributes.
pub fn write_dot(g: &Multigraph) -> String {
    let mut out = String::from("graph G {\n");
    if let Some(labels) = g.labels() {
        for (v, label) in labels.iter().enumerate() {
            out.push_str(&format!("  {v} [label=\"{}\"];\n", label.replace('"', "\\\"")));
        }
    }
    for (u, w, m) in g.edges() {
        for _ in 0..m {
            out.push_str(&format!("  {u} -- {w};\n"));
        }
    }
    out.push_str("}\n");
    out
}

/// Map JSON: group name, type, counts, genus, and the vertex adjacency
/// list of the underlying graph. In `adjacency[v]`, a neighbor appears
/// once per connecting edge and a loop contributes one entry of `v`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MapJson {
    pub group: String,
    pub p: usize,
    pub q: usize,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub genus: usize,
    pub adjacency: Vec<Vec<usize>>,
}

pub fn map_to_json(m: &RegularMap) -> MapJson {
    let g = underlying_graph(m);
    let mut adjacency = vec![Vec::new(); g.vertex_count()];
    for (u, w, mult) in g.edges() {
        for _ in 0..mult {
            if u == w {
                adjacency[u].push(u);
            } else {
                adjacency[u].push(w);
                adjacency[w].push(u);
            }
        }
    }
    for row in &mut adjacency {
        row.sort_unstable();
    }
    let (p, q) = m.type_pq();
    MapJson {
        group: m.group().name().to_string(),
        p,
        q,
        vertices: m.vertex_count(),
        edges: m.edge_count(),
        faces: m.face_count(),
        genus: m.genus(),
        adjacency,
    }
}

pub fn write_map_json(m: &RegularMap) -> String {
    serde_json::to_string_pretty(&map_to_json(m)).unwrap()
}

pub fn read_map_json(text: &str) -> Result<MapJson, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Data(format!("bad map JSON: {e}")))
}

/// Rebuilds the underlying graph from the adjacency list of a map file.
pub fn graph_from_map_json(mj: &MapJson) -> Result<Multigraph, CliError> {
    let n = mj.adjacency.len();
    if n != mj.vertices {
        return Err(CliError::Data(format!(
            "adjacency rows {n} disagree with vertex count {}",
            mj.vertices
        )));
    }
    let mut g = Multigraph::new(n);
    for (u, row) in mj.adjacency.iter().enumerate() {
        for &w in row {
            if w >= n {
                return Err(CliError::Data(format!("neighbor {w} out of range 0..{n}")));
            }
            if w == u {
                g.add_edge(u, u);
            } else if w > u {
                g.add_edge(u, w);
            } else if mj.adjacency[w].iter().filter(|&&x| x == u).count()
                != mj.adjacency[u].iter().filter(|&&x| x == w).count()
            {
                return Err(CliError::Data(format!("asymmetric adjacency at {u}, {w}")));
            }
        }
    }
    Ok(g)
}

/// Configuration JSON: `{"points": N, "labels": [...], "blocks": [[...]]}`
/// with `labels` optional.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConfigJson {
    pub points: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub blocks: Vec<Vec<usize>>,
}

pub fn config_to_json(c: &Configuration) -> ConfigJson {
    ConfigJson {
        points: c.point_count(),
        labels: c.point_labels().map(|l| l.to_vec()),
        blocks: c.blocks().to_vec(),
    }
}

pub fn write_config_json(c: &Configuration) -> String {
    serde_json::to_string_pretty(&config_to_json(c)).unwrap()
}

pub fn read_config_json(text: &str) -> Result<Configuration, CliError> {
    let cj: ConfigJson =
        serde_json::from_str(text).map_err(|e| CliError::Data(format!("bad config JSON: {e}")))?;
    Configuration::new(cj.points, cj.blocks, cj.labels)
        .map_err(|e| CliError::Data(format!("invalid configuration: {e}")))
}

fn counts_value(c: &Counts) -> Value {
    match c.uniform() {
        Some(r) => json!(r),
        None => match c {
            Counts::PerElement(v) => json!(v),
            Counts::Uniform(r) => json!(r),
        },
    }
}

/// Analysis summary as a JSON record. Combinatorial data stays integral;
/// isomorphism and polarity witnesses are explicit index mappings.
pub fn summary_json(c: &Configuration) -> Value {
    let s = summarize(c);
    let pent = pentagonal_check(c);
    let natural = if s.v == s.b {
        json!(natural_polarity_holds(c).unwrap_or(false))
    } else {
        Value::Null
    };
    let (self_polar, witness) = if s.v == s.b {
        match find_polarity(c) {
            Ok(Some(w)) => (json!(true), json!(w)),
            Ok(None) => (json!(false), Value::Null),
            Err(_) => (Value::Null, Value::Null),
        }
    } else {
        (json!(false), Value::Null)
    };
    let generalized = match s.linear_dimension {
        LinearDimension::Finite(d) if d >= 1 => {
            let rep = generalized_pentagonal_check(c, d).unwrap();
            json!({
                "d": d,
                "holds": rep.holds,
                "count_identity": rep.count_identity,
            })
        }
        _ => Value::Null,
    };
    json!({
        "v": s.v,
        "b": s.b,
        "r": counts_value(&s.r),
        "k": counts_value(&s.k),
        "balanced": s.balanced_vr,
        "distinct_blocks": s.distinct_block_count,
        "linear_dimension": match s.linear_dimension {
            LinearDimension::Degenerate => json!("degenerate"),
            LinearDimension::Finite(d) => json!(d),
        },
        "linear": s.linear,
        "components": split_components(c).len(),
        "natural_polarity": natural,
        "self_polar": self_polar,
        "polarity_witness": witness,
        "pentagonal": {
            "holds": pent.holds,
            "opposite_line": pent.opposite_line,
        },
        "generalized_pentagonal": generalized,
    })
}
