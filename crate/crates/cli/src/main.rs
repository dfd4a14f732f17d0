use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use nbgeom_cli::catalog::{build, catalog, BuiltObject};
use nbgeom_cli::formats::{
    read_config_json, summary_json, write_config_json, write_dot, write_graph_text,
    write_map_json,
};
use nbgeom_cli::verify::{all_pass, full_suite, render_json, render_table, run_suite};
use nbgeom_cli::CliError;

use nbgeom_core::configs::neighborhood_geometry;
use nbgeom_core::hyperbolic::{build_patch, render_svg, HyperbolicError, RenderOptions, TilingSpec};
use nbgeom_core::maps::{pgonal_elements, pgonal_quotient, underlying_graph};

#[derive(Parser)]
#[command(
    name = "nbgeom",
    version,
    about = "Neighborhood geometries of graphs and regular maps on surfaces"
)]
struct Cli {
    /// Accepted for interface stability; every computation is
    /// deterministic, so the value is ignored.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the named catalog objects.
    Catalog,
    /// Build a catalog object and write it out (graphs as text or DOT,
    /// maps as JSON).
    Build {
        /// Catalog name, e.g. klein-map or yp-map:5.
        name: String,
        /// text | dot | json | geometry (graphs); json | text | dot |
        /// geometry (maps).
        #[arg(long)]
        format: Option<String>,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Summarize a configuration JSON file.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Quotient a type {4,2p} catalog map by a p-gonal automorphism and
    /// write the quotient graph.
    Quotient {
        /// Catalog name of the map, e.g. yp-map:3.
        name: String,
        /// ab | ab-inverse | identity.
        element: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render a hyperbolic tiling patch with neighbor circles to SVG.
    Render {
        /// Vertex valency p of the {p,q} tiling.
        #[arg(long)]
        p: usize,
        /// Face size q of the {p,q} tiling.
        #[arg(long)]
        q: usize,
        /// Expansion depth from the central vertex.
        #[arg(long, default_value_t = 2)]
        depth: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Image width and height in pixels.
        #[arg(long, default_value_t = 800.0)]
        size: f64,
        /// Skip the geodesic edges.
        #[arg(long)]
        no_edges: bool,
        /// Skip the neighbor circles.
        #[arg(long)]
        no_circles: bool,
    },
    /// Run the verification suite and print the report as an aligned
    /// table followed by JSON.
    Verify {
        /// all | klein | bring | bolza | pentagonal | yp |
        /// cover-candidate | structural | hyperbolic.
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

fn emit(out: Option<&PathBuf>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, content)
            .map_err(|e| CliError::Data(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn cmd_catalog() -> Result<(), CliError> {
    let entries = catalog();
    let name_w = entries.iter().map(|e| e.name.len()).max().unwrap();
    let kind_w = entries.iter().map(|e| e.kind.as_str().len()).max().unwrap();
    for e in entries {
        println!(
            "{:<name_w$}  {:<kind_w$}  {}",
            e.name,
            e.kind.as_str(),
            e.provenance
        );
    }
    Ok(())
}

fn cmd_build(name: &str, format: Option<&str>, out: Option<&PathBuf>) -> Result<(), CliError> {
    let object = build(name)?;
    let content = match (&object, format) {
        (BuiltObject::Graph(g), None | Some("text")) => write_graph_text(g),
        (BuiltObject::Graph(g), Some("dot")) => write_dot(g),
        (BuiltObject::Graph(g), Some("geometry")) => {
            let c = neighborhood_geometry(g)
                .map_err(|e| CliError::Usage(format!("no geometry: {e}")))?;
            write_config_json(&c)
        }
        (BuiltObject::Map(m), None | Some("json")) => write_map_json(m),
        (BuiltObject::Map(m), Some("text")) => write_graph_text(&underlying_graph(m)),
        (BuiltObject::Map(m), Some("dot")) => write_dot(&underlying_graph(m)),
        (BuiltObject::Map(m), Some("geometry")) => {
            let c = neighborhood_geometry(&underlying_graph(m))
                .map_err(|e| CliError::Usage(format!("no geometry: {e}")))?;
            write_config_json(&c)
        }
        (_, Some(other)) => {
            return Err(CliError::Usage(format!(
                "format '{other}' is not available for this object"
            )))
        }
    };
    emit(out, &content)
}

fn cmd_analyze(file: &PathBuf, out: Option<&PathBuf>) -> Result<(), CliError> {
    let text = fs::read_to_string(file)
        .map_err(|e| CliError::Data(format!("cannot read {}: {e}", file.display())))?;
    let config = read_config_json(&text)?;
    let summary = serde_json::to_string_pretty(&summary_json(&config)).unwrap();
    emit(out, &format!("{summary}\n"))
}

fn cmd_quotient(name: &str, element: &str, out: Option<&PathBuf>) -> Result<(), CliError> {
    let BuiltObject::Map(m) = build(name)? else {
        return Err(CliError::Usage(format!("'{name}' is not a map")));
    };
    let h = match element {
        "identity" => m.group().identity(),
        "ab" | "ab-inverse" => {
            let (h1, h2) =
                pgonal_elements(&m).map_err(|e| CliError::Usage(format!("{e}")))?;
            if element == "ab" {
                h1
            } else {
                h2
            }
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown element '{other}' (expected ab, ab-inverse, or identity)"
            )))
        }
    };
    let q = pgonal_quotient(&m, &h).map_err(|e| CliError::Usage(format!("{e}")))?;
    emit(out, &write_graph_text(&q))
}

fn cmd_render(
    p: usize,
    q: usize,
    depth: usize,
    out: Option<&PathBuf>,
    size: f64,
    no_edges: bool,
    no_circles: bool,
) -> Result<(), CliError> {
    let spec = TilingSpec::new(p, q).map_err(|e| CliError::Usage(format!("{e}")))?;
    let patch = build_patch(spec, depth).map_err(|e| match e {
        HyperbolicError::DepthBoundExceeded { .. } => CliError::Bound(format!("{e}")),
        other => CliError::Usage(format!("{other}")),
    })?;
    let options = RenderOptions {
        show_edges: !no_edges,
        show_circles: !no_circles,
        size,
        ..RenderOptions::default()
    };
    emit(out, &render_svg(&patch, &options))
}

fn cmd_verify(suite: &str) -> Result<bool, CliError> {
    let claims = if suite == "all" {
        full_suite()
    } else {
        run_suite(suite).ok_or_else(|| CliError::Usage(format!("unknown suite '{suite}'")))?
    };
    print!("{}", render_table(&claims));
    println!("{}", render_json(&claims));
    Ok(all_pass(&claims))
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Catalog => cmd_catalog().map(|()| true),
        Command::Build { name, format, out } => {
            cmd_build(&name, format.as_deref(), out.as_ref()).map(|()| true)
        }
        Command::Analyze { file, out } => cmd_analyze(&file, out.as_ref()).map(|()| true),
        Command::Quotient { name, element, out } => {
            cmd_quotient(&name, &element, out.as_ref()).map(|()| true)
        }
        Command::Render {
            p,
            q,
            depth,
            out,
            size,
            no_edges,
            no_circles,
        } => cmd_render(p, q, depth, out.as_ref(), size, no_edges, no_circles).map(|()| true),
        Command::Verify { suite } => cmd_verify(&suite),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
