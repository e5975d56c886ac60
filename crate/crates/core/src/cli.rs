//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on usage or
//! input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::asym::{build_f, family_checks};
use crate::aut::{automorphisms, brute_force_automorphisms, hasse_automorphisms, hasse_digraph, verify_realization, AutGroup};
use crate::blocks::build_realization;
use crate::digraph::ColoredDigraph;
use crate::dot::{digraph_to_dot, poset_to_dot};
use crate::error::{Error, Result};
use crate::group::{cayley_graph, parse_group_spec};
use crate::poset::Poset;

#[derive(Parser, Debug)]
#[command(name = "finspace", version, about = "Finite spaces with prescribed automorphism groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Summary,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit the asymmetric block F_k.
    BuildFk {
        k: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Emit the colored Cayley graph of a group.
    BuildCayley {
        group: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Emit the realization space X(G, S); the block inventory goes to stderr.
    BuildSpace {
        group: String,
        #[arg(long, value_enum, default_value_t = Format::Summary)]
        format: Format,
    },
    /// Automorphism group of a poset or colored digraph JSON file.
    Aut {
        path: PathBuf,
        /// Keep edge colors of a digraph file (otherwise all edges count alike).
        #[arg(long)]
        color_edges: bool,
        /// Use exhaustive enumeration (at most 10 vertices).
        #[arg(long)]
        oracle: bool,
    },
    /// Check that Aut(X(G, S)) has the order of G and contains its translations.
    Verify { group: String },
    /// Check minimality and asymmetry of F_0 ..= F_kmax.
    FamilyCheck { k_max: usize },
}

enum Outcome {
    Ok,
    Failed,
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::Failed) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome> {
    match cmd {
        Command::BuildFk { k, format } => {
            let f = build_f(k);
            let name = format!("F_{k}");
            match format {
                Format::Json => writeln!(out, "{}", f.to_json())?,
                Format::Dot => write!(out, "{}", poset_to_dot(&f, &name))?,
                Format::Summary => writeln!(
                    out,
                    "{name}: {} points, {} covers, {} levels, minimal: {}",
                    f.len(),
                    f.cover_count(),
                    f.height(),
                    if f.is_minimal() { "yes" } else { "no" }
                )?,
            }
        }
        Command::BuildCayley { group, format } => {
            let g = parse_group_spec(&group)?;
            let c = cayley_graph(&g);
            match format {
                Format::Json => writeln!(out, "{}", c.to_json())?,
                Format::Dot => write!(out, "{}", digraph_to_dot(&c, &format!("Cayley({group})")))?,
                Format::Summary => writeln!(
                    out,
                    "|G| = {}, |S| = {}, {} vertices, {} edges",
                    g.order(),
                    g.generators().len(),
                    c.vertex_count(),
                    c.edge_count()
                )?,
            }
        }
        Command::BuildSpace { group, format } => {
            let g = parse_group_spec(&group)?;
            let x = build_realization(&g)?;
            match format {
                Format::Json => {
                    writeln!(out, "{}", x.poset.to_json())?;
                    writeln!(err, "{x}")?;
                }
                Format::Dot => {
                    write!(out, "{}", poset_to_dot(&x.poset, &format!("X({group})")))?;
                    writeln!(err, "{x}")?;
                }
                Format::Summary => writeln!(out, "{x}")?,
            }
        }
        Command::Aut {
            path,
            color_edges,
            oracle,
        } => {
            let text = std::fs::read_to_string(&path)?;
            let (d, aut) = load_and_compute(&text, color_edges, oracle)?;
            writeln!(out, "vertices: {}", d.vertex_count())?;
            writeln!(out, "order: {}", aut.order)?;
            writeln!(out, "generators: {}", aut.generators.len())?;
            for g in &aut.generators {
                writeln!(out, "  {}", g.cycle_string(d.vertices()))?;
            }
        }
        Command::Verify { group } => {
            let g = parse_group_spec(&group)?;
            let report = verify_realization(&g)?;
            writeln!(out, "{report}")?;
            if !report.passed() {
                return Ok(Outcome::Failed);
            }
        }
        Command::FamilyCheck { k_max } => {
            let report = family_checks(k_max);
            for r in &report.rows {
                writeln!(
                    out,
                    "F_{}: points {}, minimal {}, |Aut| {}, connected {} : {}",
                    r.k,
                    r.points,
                    r.minimal,
                    r.aut_order,
                    r.connected,
                    if r.passed() { "PASS" } else { "FAIL" }
                )?;
            }
            writeln!(
                out,
                "pairwise distinct sizes: {} : {}",
                report.sizes_distinct,
                if report.passed() { "PASS" } else { "FAIL" }
            )?;
            if !report.passed() {
                return Ok(Outcome::Failed);
            }
        }
    }
    Ok(Outcome::Ok)
}

/// Reads a poset (`points`/`covers`) or digraph (`vertices`/`edges`) file.
fn load_and_compute(text: &str, color_edges: bool, oracle: bool) -> Result<(ColoredDigraph, AutGroup)> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    if value.get("points").is_some() {
        let p: Poset = serde_json::from_value(value)?;
        let d = hasse_digraph(&p);
        let aut = if oracle {
            brute_force_automorphisms(&d)?
        } else {
            hasse_automorphisms(&p)
        };
        return Ok((d, aut));
    }
    if value.get("vertices").is_some() {
        let mut d: ColoredDigraph = serde_json::from_value(value)?;
        if !color_edges {
            d = d.uncolored();
        }
        let aut = if oracle {
            brute_force_automorphisms(&d)?
        } else {
            automorphisms(&d)
        };
        return Ok((d, aut));
    }
    Err(Error::InvalidParameter(
        "expected a poset {\"points\", \"covers\"} or digraph {\"vertices\", \"edges\"}".into(),
    ))
}
