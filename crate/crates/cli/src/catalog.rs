//! Named objects constructible offline: fixed graph constructions and
//! regular maps found as rotary pairs in the named groups.

use nbgeom_core::graphs::{
    generalized_petersen, hoffman_singleton, kronecker_cover, paley, rook, Multigraph,
};
use nbgeom_core::maps::{build_yp_map, find_rotary_pairs, RegularMap, MapError};
use nbgeom_core::perm::{build_gl23, build_psl27, build_s5, is_odd_prime};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Graph,
    Map,
    Configuration,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Graph => "graph",
            Kind::Map => "map",
            Kind::Configuration => "configuration",
        }
    }
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub kind: Kind,
    pub provenance: &'static str,
}

/// The fixed catalog. `yp-map:p` stands for the parametric family; any odd
/// prime p with 8p² within the rotary-pair search cap is accepted.
pub fn catalog() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            name: "klein-map",
            kind: Kind::Map,
            provenance: "genus-3 regular map of type {3,7} on the Klein quartic, from PSL(2,7)",
        },
        CatalogEntry {
            name: "bring-map",
            kind: Kind::Map,
            provenance: "genus-4 regular map of type {4,5} on Bring's curve, from S5",
        },
        CatalogEntry {
            name: "bolza-map",
            kind: Kind::Map,
            provenance: "genus-2 regular map of type {3,8} on the Bolza surface, from GL(2,3)",
        },
        CatalogEntry {
            name: "yp-map:p",
            kind: Kind::Map,
            provenance: "genus-(p-1)^2 regular map of type {4,2p} on Y_p, from (Cp x Cp) : D4",
        },
        CatalogEntry {
            name: "petersen",
            kind: Kind::Graph,
            provenance: "generalized Petersen graph GP(5,2), the valency-3 Moore graph",
        },
        CatalogEntry {
            name: "desargues-graph",
            kind: Kind::Graph,
            provenance: "generalized Petersen graph GP(10,3), Kronecker cover of the Petersen graph",
        },
        CatalogEntry {
            name: "hoffman-singleton",
            kind: Kind::Graph,
            provenance: "the valency-7 Moore graph on 50 vertices",
        },
        CatalogEntry {
            name: "rook-3x3",
            kind: Kind::Graph,
            provenance: "rook's graph of the 3x3 board",
        },
        CatalogEntry {
            name: "paley-13-cover",
            kind: Kind::Graph,
            provenance: "Kronecker cover of the Paley graph on 13 vertices",
        },
    ]
}

#[derive(Debug, Clone)]
pub enum BuiltObject {
    Graph(Multigraph),
    Map(Box<RegularMap>),
}

fn map_error(e: MapError) -> CliError {
    match e {
        MapError::SearchCapExceeded { cap } => {
            CliError::Bound(format!("rotary pair search cap {cap} exceeded"))
        }
        other => CliError::Usage(format!("{other}")),
    }
}

/// Builds the canonical map of the given type: the lexicographically first
/// rotary pair the search returns.
fn canonical_map(
    group: nbgeom_core::perm::Group,
    p: usize,
    q: usize,
) -> Result<RegularMap, CliError> {
    let pairs = find_rotary_pairs(&group, p, q).map_err(map_error)?;
    let pair = pairs
        .into_iter()
        .next()
        .ok_or_else(|| CliError::Usage(format!("no rotary pair of type ({p}, {q})")))?;
    nbgeom_core::maps::build_map(pair).map_err(map_error)
}

pub fn build_klein_map() -> Result<RegularMap, CliError> {
    canonical_map(build_psl27(), 3, 7)
}

pub fn build_bring_map() -> Result<RegularMap, CliError> {
    canonical_map(build_s5(), 4, 5)
}

pub fn build_bolza_map() -> Result<RegularMap, CliError> {
    canonical_map(build_gl23(), 3, 8)
}

/// All kind = graph entries of the catalog with their built graphs, in
/// catalog order.
pub fn catalog_graphs() -> Vec<(&'static str, Multigraph)> {
    vec![
        ("petersen", generalized_petersen(5, 2).unwrap()),
        ("desargues-graph", generalized_petersen(10, 3).unwrap()),
        ("hoffman-singleton", hoffman_singleton()),
        ("rook-3x3", rook(3, 3).unwrap()),
        ("paley-13-cover", kronecker_cover(&paley(13).unwrap())),
    ]
}

/// Resolves a catalog name, including the parametric `yp-map:p` form.
pub fn build(name: &str) -> Result<BuiltObject, CliError> {
    if let Some(rest) = name.strip_prefix("yp-map:") {
        let p: usize = rest
            .parse()
            .map_err(|_| CliError::Usage(format!("bad parameter in '{name}'")))?;
        if !is_odd_prime(p) {
            return Err(CliError::Usage(format!(
                "yp-map parameter must be an odd prime, got {p}"
            )));
        }
        return build_yp_map(p)
            .map(|m| BuiltObject::Map(Box::new(m)))
            .map_err(map_error);
    }
    match name {
        "klein-map" => build_klein_map().map(|m| BuiltObject::Map(Box::new(m))),
        "bring-map" => build_bring_map().map(|m| BuiltObject::Map(Box::new(m))),
        "bolza-map" => build_bolza_map().map(|m| BuiltObject::Map(Box::new(m))),
        _ => catalog_graphs()
            .into_iter()
            .find(|(n, _)| *n == name)
            .map(|(_, g)| BuiltObject::Graph(g))
            .ok_or_else(|| CliError::Usage(format!("unknown catalog name '{name}'"))),
    }
}
