//! Command-line front end for the `bieberbach` library.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bieberbach::calabi::Decomposition;
use bieberbach::format::{int_list_json, matrix_json, parse_rational, rat_vector_json};
use bieberbach::report::{
    certificate_json, connectivity_json, coprime_tree_json, fixed_torus_json, group_json, h1_json,
    render_connectivity, render_coprime, render_fixed_torus,
};
use bieberbach::{
    abelianization, analyze, catalog, export_group, fixed_lattice, fixed_torus, is_connective,
    orbit_data, parse_group, Character, CrystalGroup, FiniteGroup, RatVector,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "bieberbach",
    version,
    about = "Exact analysis of Bieberbach groups"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a group file.
    Validate { file: PathBuf },
    /// Full report: homology, center, fixed torus, connectivity, holonomy.
    Analyze { file: PathBuf },
    /// First homology group.
    H1 { file: PathBuf },
    /// Rank and basis of the center (the fixed lattice).
    Center { file: PathBuf },
    /// Fixed subgroup of the dual torus.
    FixedTorus { file: PathBuf },
    /// Connectivity verdict.
    Connective {
        file: PathBuf,
        /// Include every reduction step.
        #[arg(long)]
        certificate: bool,
    },
    /// Repeated reduction by surjections onto Z.
    Decompose { file: PathBuf },
    /// The holonomy group.
    Holonomy {
        file: PathBuf,
        #[arg(long)]
        primitivity: bool,
        #[arg(long = "coprime-class")]
        coprime_class: bool,
    },
    /// Orbit and stabilizer of a rational character.
    Orbits {
        file: PathBuf,
        /// Comma-separated entries such as `1/2,0,1/3`.
        #[arg(long = "char", value_name = "P/Q,...")]
        character: String,
    },
    /// Built-in example groups.
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Subcommand)]
enum CatalogCommand {
    List,
    Show {
        key: String,
    },
    /// Print the group file for an entry.
    Export {
        key: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &Path) -> Result<CrystalGroup, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_group(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn s<T: ToString>(x: T) -> Value {
    Value::String(x.to_string())
}

fn emit(format: Format, text: String, value: impl FnOnce() -> Value) -> String {
    match format {
        Format::Text => text,
        Format::Json => {
            let mut out = serde_json::to_string_pretty(&value()).expect("serializable");
            out.push('\n');
            out
        }
    }
}

fn run(cli: &Cli) -> Result<String, String> {
    let f = cli.format;
    match &cli.command {
        Command::Validate { file } => {
            let g = load(file)?;
            let text = format!(
                "valid: {} (dimension {}, holonomy order {}, torsion-free: {})\n",
                g.name(),
                g.dim(),
                g.holonomy_order(),
                if g.is_torsion_free() { "yes" } else { "no" }
            );
            Ok(emit(f, text, || {
                json!({
                    "valid": true,
                    "name": g.name(),
                    "dimension": s(g.dim()),
                    "holonomy_order": s(g.holonomy_order()),
                    "torsion_free": g.is_torsion_free(),
                })
            }))
        }
        Command::Analyze { file } => {
            let r = analyze(&load(file)?);
            Ok(emit(f, r.render_text(), || r.to_json()))
        }
        Command::H1 { file } => {
            let h = abelianization(&load(file)?);
            Ok(emit(f, format!("H1 = {h}\n"), || h1_json(&h)))
        }
        Command::Center { file } => {
            let l = fixed_lattice(&load(file)?);
            let mut text = format!("center rank: {}\n", l.rank());
            for b in &l.basis {
                let entries: Vec<String> = b.iter().map(ToString::to_string).collect();
                let _ = writeln!(text, "  ({})", entries.join(", "));
            }
            Ok(emit(f, text, || {
                json!({
                    "rank": s(l.rank()),
                    "basis": l.basis.iter().map(|b| int_list_json(b)).collect::<Vec<_>>(),
                })
            }))
        }
        Command::FixedTorus { file } => {
            let t = fixed_torus(&load(file)?);
            Ok(emit(f, render_fixed_torus(&t), || fixed_torus_json(&t)))
        }
        Command::Connective { file, certificate } => {
            let g = load(file)?;
            let result = is_connective(&g);
            let r = result.as_ref().map_err(ToString::to_string)?;
            let mut text = render_connectivity(&result);
            text.push('\n');
            if *certificate {
                text.push_str(&render_steps(&g, &r.decomposition));
            }
            Ok(emit(f, text, || {
                if *certificate {
                    certificate_json(&g, r)
                } else {
                    connectivity_json(&result)
                }
            }))
        }
        Command::Decompose { file } => {
            let g = load(file)?;
            let r = is_connective(&g).map_err(|e| e.to_string())?;
            Ok(emit(f, render_steps(&g, &r.decomposition), || {
                certificate_json(&g, &r)
            }))
        }
        Command::Holonomy {
            file,
            primitivity,
            coprime_class,
        } => holonomy(f, &load(file)?, *primitivity, *coprime_class),
        Command::Orbits { file, character } => {
            let g = load(file)?;
            let entries = character
                .split(',')
                .map(|x| parse_rational(x.trim()))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| e.to_string())?;
            let chi = Character::new(RatVector::new(entries));
            let r = orbit_data(&g, &chi).map_err(|e| e.to_string())?;
            let mut text = format!(
                "character {}\norbit length {} (index of stabilizer)\nstabilizer: {:?}\n",
                r.character, r.index, r.stabilizer
            );
            for psi in &r.orbit {
                let _ = writeln!(text, "  {psi}");
            }
            Ok(emit(f, text, || {
                json!({
                    "character": rat_vector_json(r.character.vector()),
                    "orbit": r.orbit.iter().map(|c| rat_vector_json(c.vector())).collect::<Vec<_>>(),
                    "stabilizer": r.stabilizer.iter().map(s).collect::<Vec<_>>(),
                    "index": s(r.index),
                })
            }))
        }
        Command::Catalog(c) => catalog_command(f, c),
    }
}

fn render_steps(g: &CrystalGroup, d: &Decomposition) -> String {
    let mut out = String::new();
    let mut dim = g.dim();
    for (i, st) in d.steps().iter().enumerate() {
        let fs: Vec<String> = st.surjection.f.iter().map(ToString::to_string).collect();
        let _ = writeln!(
            out,
            "step {}: dimension {} -> {}, f = ({}), d = {}, |D0| = {}, kernel holonomy order {}",
            i + 1,
            dim,
            st.kernel_group.dim(),
            fs.join(", "),
            st.surjection.d,
            st.d0.len(),
            st.kernel_group.holonomy_order()
        );
        dim = st.kernel_group.dim();
    }
    match d {
        Decomposition::PolyZ(_) => {
            let _ = writeln!(out, "reached the trivial group");
        }
        Decomposition::Core { core, .. } => {
            let _ = writeln!(
                out,
                "stopped at a dimension-{} group with H1 = {}",
                core.dim(),
                abelianization(core)
            );
        }
    }
    out
}

fn holonomy(
    f: Format,
    g: &CrystalGroup,
    primitivity: bool,
    coprime: bool,
) -> Result<String, String> {
    let d = FiniteGroup::from_holonomy(g);
    let mut text = format!("holonomy order {}, {}\n", d.order(), d.structure_id());
    for h in g.holonomy() {
        let rows: Vec<String> = (0..h.matrix.rows())
            .map(|i| {
                let r: Vec<String> = h.matrix.row(i).iter().map(ToString::to_string).collect();
                format!("[{}]", r.join(" "))
            })
            .collect();
        let _ = writeln!(
            text,
            "  {}: order {}, matrix {}, translation {}",
            h.index,
            h.order,
            rows.join(""),
            h.translation
        );
    }
    let witness = if primitivity {
        Some(d.primitivity_witness().map_err(|e| e.to_string())?)
    } else {
        None
    };
    if let Some(w) = &witness {
        match w {
            None => text.push_str("primitive: yes\n"),
            Some(w) => {
                let _ = writeln!(
                    text,
                    "primitive: no (cyclic Sylow {}-subgroup of order {} has a normal complement of order {})",
                    w.prime,
                    w.sylow.order(),
                    w.complement.order()
                );
            }
        }
    }
    let tree = if coprime {
        Some(d.in_coprime_class().map_err(|e| e.to_string())?)
    } else {
        None
    };
    if let Some(t) = &tree {
        text.push_str(&render_coprime(&Ok(t.clone())));
        text.push('\n');
    }
    Ok(emit(f, text, || {
        let mut v = json!({
            "order": s(d.order()),
            "structure": d.structure_id(),
            "elements": g.holonomy().iter().map(|h| json!({
                "index": s(h.index),
                "order": s(h.order),
                "matrix": matrix_json(&h.matrix),
                "translation": rat_vector_json(&h.translation),
            })).collect::<Vec<_>>(),
        });
        if let Some(w) = &witness {
            v["primitive"] = Value::Bool(w.is_none());
            v["primitivity_witness"] = match w {
                None => Value::Null,
                Some(w) => json!({
                    "prime": s(w.prime),
                    "sylow": w.sylow.elements().iter().map(s).collect::<Vec<_>>(),
                    "complement": w.complement.elements().iter().map(s).collect::<Vec<_>>(),
                }),
            };
        }
        if let Some(t) = &tree {
            v["coprime_class"] = coprime_tree_json(t);
        }
        v
    }))
}

fn catalog_command(f: Format, c: &CatalogCommand) -> Result<String, String> {
    match c {
        CatalogCommand::List => {
            let entries = catalog::list();
            let mut text = String::new();
            for e in &entries {
                let _ = writeln!(text, "{:<22} {}", e.key, e.description);
            }
            Ok(emit(f, text, || {
                Value::Array(
                    entries
                        .iter()
                        .map(|e| {
                            json!({
                                "key": e.key,
                                "description": e.description,
                                "dimension": s(e.group.dim()),
                            })
                        })
                        .collect(),
                )
            }))
        }
        CatalogCommand::Show { key } => {
            let e = catalog::get(key).map_err(|e| e.to_string())?;
            let r = analyze(&e.group);
            let text = format!("{}: {}\n{}", e.key, e.description, r.render_text());
            Ok(emit(f, text, || {
                json!({
                    "key": e.key,
                    "description": e.description,
                    "group": group_json(&e.group),
                    "analysis": r.to_json(),
                })
            }))
        }
        CatalogCommand::Export { key } => {
            let e = catalog::get(key).map_err(|e| e.to_string())?;
            let mut out =
                serde_json::to_string_pretty(&export_group(&e.group)).expect("serializable");
            out.push('\n');
            Ok(out)
        }
    }
}
