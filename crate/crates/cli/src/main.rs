//! `qcrystal`: crystals of tableaux, their quasicrystal decomposition and related checks.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qcrystal::export::{crystal_to_dot, crystal_to_json, dual_equivalence_to_dot, skeleton_to_dot};
use qcrystal::verify::{run_checks, CheckConfig, Which};
use qcrystal::{
    build_skeleton, count_bm, count_ssyt_formula, decompose_with, dual_equivalence_graph, evacuate,
    generate_crystal, generate_crystal_par, kostka_weight, plethysm_monomial_count, rsk, schurify,
    skeleton_stable, word_crystal_component, Decomposition, FExpansion, Partition, Tableau,
    WeightVector, Word,
};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "qcrystal",
    version,
    about = "Crystals of tableaux and their quasicrystals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum WhichArg {
    Theorems,
    Conjectures,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Generate the crystal B(λ)_n.
    Crystal {
        #[arg(long)]
        shape: Partition,
        #[arg(long)]
        max_entry: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Colour (dot) or list (text, json) the quasicrystal subcomponents.
        #[arg(long)]
        decompose: bool,
        #[arg(long)]
        parallel: bool,
    },
    /// List the subcomponents of B(λ)_n.
    Decompose {
        #[arg(long)]
        shape: Partition,
        #[arg(long)]
        max_entry: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        parallel: bool,
    },
    /// Skeleton of B(λ)_n, or the stable skeleton when no bound is given.
    Skeleton {
        #[arg(long)]
        shape: Partition,
        #[arg(long)]
        max_entry: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Dual equivalence graph on standard tableaux of shape λ.
    DualEquivalence {
        #[arg(long)]
        shape: Partition,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Rewrite a symmetric F-expansion in the Schur basis.
    Schurify {
        /// File holding the expansion, or `-` for stdin.
        #[arg(long)]
        input: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Counting formulas.
    Count {
        #[command(subcommand)]
        what: CountCommand,
    },
    /// Run the theorem and conjecture suites.
    Check {
        #[arg(long, default_value_t = 6)]
        max_size: usize,
        #[arg(long, default_value_t = 4)]
        max_entry: u32,
        #[arg(long, value_enum, default_value = "all")]
        which: WhichArg,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        parallel: bool,
    },
    /// Generalized evacuation of a tableau with entries at most n.
    Evac {
        /// Rows as JSON, e.g. "[[1,1,2],[2]]".
        #[arg(long)]
        tableau: Tableau,
        #[arg(long)]
        max_entry: u32,
    },
    /// RSK insertion and recording tableaux of a word.
    Rsk {
        #[arg(long)]
        word: Word,
    },
    /// Write DOT files for a fixed set of small example graphs into a directory.
    Figures {
        #[arg(long)]
        out_dir: PathBuf,
    },
}

#[derive(Subcommand)]
enum CountCommand {
    /// |SSYT(λ)_n| via the descent-composition formula.
    Ssyt {
        #[arg(long)]
        shape: Partition,
        #[arg(long)]
        max_entry: u32,
    },
    /// |B(m)_k|, the number of weakly increasing words of length m on k letters.
    Bm {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
    },
    /// Kostka number K^λ_μ.
    Kostka {
        #[arg(long)]
        shape: Partition,
        #[arg(long)]
        weight: WeightVector,
    },
    /// Number of monic monomials of s_μ[s_λ(x_1..x_n)].
    PlethysmMonomials {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        max_entry: u32,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<qcrystal::Error> for Failure {
    fn from(e: qcrystal::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn pretty(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Crystal {
            shape,
            max_entry,
            format,
            decompose,
            parallel,
        } => {
            let g = if parallel {
                generate_crystal_par(&shape, max_entry)
            } else {
                generate_crystal(&shape, max_entry)
            };
            let d = decompose.then(|| decompose_with(&g, parallel));
            Ok(match format {
                Format::Dot => crystal_to_dot(&g, d.as_ref()),
                Format::Json => {
                    let mut v = serde_json::to_value(crystal_to_json(&g)).expect("serializable");
                    if let Some(d) = &d {
                        v["subcomponents"] = subcomponents_json(d);
                    }
                    pretty(&v)
                }
                Format::Text => {
                    let mut out = format!(
                        "B{shape}_{max_entry}: {} vertices, {} edges\n",
                        g.len(),
                        g.edges().len()
                    );
                    for (k, t) in g.vertices().iter().enumerate() {
                        let _ = writeln!(out, "{k} {t}");
                    }
                    for (u, v, i) in g.edges() {
                        let _ = writeln!(out, "{u} -{i}-> {v}");
                    }
                    if let Some(d) = &d {
                        out.push_str(&subcomponents_text(d));
                    }
                    out
                }
            })
        }
        Command::Decompose {
            shape,
            max_entry,
            format,
            parallel,
        } => {
            let g = generate_crystal(&shape, max_entry);
            let d = decompose_with(&g, parallel);
            Ok(match format {
                Format::Json => pretty(&json!({
                    "shape": shape,
                    "max_entry": max_entry,
                    "vertex_count": g.len(),
                    "subcomponents": subcomponents_json(&d),
                })),
                Format::Text => format!(
                    "B{shape}_{max_entry}: {} vertices, {} subcomponents\n{}",
                    g.len(),
                    d.subcomponents.len(),
                    subcomponents_text(&d)
                ),
                Format::Dot => crystal_to_dot(&g, Some(&d)),
            })
        }
        Command::Skeleton {
            shape,
            max_entry,
            format,
        } => {
            let s = match max_entry {
                Some(n) => build_skeleton(&shape, n),
                None => skeleton_stable(&shape)?,
            };
            Ok(match format {
                Format::Dot => skeleton_to_dot(&s),
                Format::Json => pretty(&s),
                Format::Text => {
                    let mut out = format!(
                        "Skeleton{shape}: {} vertices, {} edges\n",
                        s.vertices.len(),
                        s.edges.len()
                    );
                    for (k, t) in s.vertices.iter().enumerate() {
                        let _ = writeln!(out, "{k} {t} descents={}", s.descents(k));
                    }
                    for (u, v, i) in &s.edges {
                        let _ = writeln!(out, "{u} -{i}-> {v}");
                    }
                    out
                }
            })
        }
        Command::DualEquivalence { shape, format } => {
            let d = dual_equivalence_graph(&shape);
            Ok(match format {
                Format::Dot => dual_equivalence_to_dot(&d),
                Format::Json => pretty(&d),
                Format::Text => {
                    let mut out = format!(
                        "dual equivalence graph of {shape}: {} vertices, {} edges\n",
                        d.vertices.len(),
                        d.edges.len()
                    );
                    for (k, t) in d.vertices.iter().enumerate() {
                        let _ = writeln!(out, "{k} {t}");
                    }
                    for (a, b, i) in &d.edges {
                        let _ = writeln!(out, "{a} -{i}- {b}");
                    }
                    out
                }
            })
        }
        Command::Schurify { input, format } => {
            let text = read_input(&input)?;
            let f = parse_expansion(&text)?;
            let s = schurify(&f)?;
            Ok(match format {
                Format::Json => pretty(&s),
                _ => format!("{s}\n"),
            })
        }
        Command::Count { what } => Ok(match what {
            CountCommand::Ssyt { shape, max_entry } => {
                format!("{}\n", count_ssyt_formula(&shape, max_entry))
            }
            CountCommand::Bm { m, k } => format!("{}\n", count_bm(m, k)),
            CountCommand::Kostka { shape, weight } => {
                format!("{}\n", kostka_weight(&shape, &weight)?)
            }
            CountCommand::PlethysmMonomials {
                mu,
                lambda,
                max_entry,
            } => format!("{}\n", plethysm_monomial_count(&mu, &lambda, max_entry)),
        }),
        Command::Check {
            max_size,
            max_entry,
            which,
            json,
            parallel,
        } => {
            let which = match which {
                WhichArg::Theorems => Which::Theorems,
                WhichArg::Conjectures => Which::Conjectures,
                WhichArg::All => Which::All,
            };
            let cfg = CheckConfig {
                max_size,
                max_entry,
                parallel,
            };
            let report = run_checks(&cfg, which);
            eprintln!("wall time: {:.3} s", report.wall_time.as_secs_f64());
            let out = if json {
                pretty(&report)
            } else {
                let mut out = String::new();
                let params: Vec<String> = report
                    .parameters
                    .iter()
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect();
                let _ = writeln!(out, "check {}", params.join(" "));
                for s in &report.sections {
                    let _ = writeln!(out, "{:<30} {:<14} checked {}", s.name, s.status, s.checked);
                    for f in &s.failures {
                        let _ = writeln!(out, "    {f}");
                    }
                }
                out
            };
            if report.theorems_pass {
                Ok(out)
            } else {
                print!("{out}");
                Err(Failure::Domain("theorem checks failed".into()))
            }
        }
        Command::Evac { tableau, max_entry } => {
            let e = evacuate(&tableau, max_entry)?;
            Ok(format!(
                "{}\n",
                serde_json::to_string(&e).expect("serializable")
            ))
        }
        Command::Rsk { word } => {
            let pair = rsk(&word)?;
            Ok(format!(
                "{}\n",
                serde_json::to_string(&pair).expect("serializable")
            ))
        }
        Command::Figures { out_dir } => figures(&out_dir),
    }
}

fn subcomponents_json(d: &Decomposition) -> serde_json::Value {
    d.subcomponents
        .iter()
        .map(|s| {
            json!({
                "alpha": s.alpha,
                "source": s.source,
                "source_index": s.source_index,
                "standard": s.standard,
                "vertices": s.vertex_indices,
            })
        })
        .collect()
}

fn subcomponents_text(d: &Decomposition) -> String {
    let mut out = String::new();
    for s in &d.subcomponents {
        let _ = writeln!(
            out,
            "F{} source={} std={} size={}",
            s.alpha,
            s.source,
            s.standard,
            s.len()
        );
    }
    out
}

fn read_input(path: &str) -> Result<String, Failure> {
    let mut text = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))?;
    Ok(text)
}

/// Accepts the text grammar or the JSON term list.
fn parse_expansion(text: &str) -> Result<FExpansion, Failure> {
    let t = text.trim();
    let parsed = if t.starts_with('[') && !t.starts_with("[F") {
        serde_json::from_str(t).map_err(|e| e.to_string())
    } else {
        t.parse::<FExpansion>().map_err(|e| e.to_string())
    };
    parsed.map_err(Failure::Usage)
}

fn figures(dir: &std::path::Path) -> Outcome {
    let io = |e: std::io::Error| Failure::Domain(format!("{}: {e}", dir.display()));
    std::fs::create_dir_all(dir).map_err(io)?;
    let shape = |s: &str| s.parse::<Partition>().expect("literal shape");
    let word: Word = "213".parse().expect("literal word");
    let w = word_crystal_component(&word.with_alphabet_bound(3)?);
    let mut words = String::from("digraph words {\n");
    for (k, v) in w.vertices().iter().enumerate() {
        let _ = writeln!(words, "  {k} [label=\"{v}\"];");
    }
    for (u, v, i) in w.edges() {
        let _ = writeln!(words, "  {u} -> {v} [label=\"{i}\"];");
    }
    words.push_str("}\n");

    let b43 = generate_crystal(&shape("4,3"), 4);
    let d43 = decompose_with(&b43, false);
    let files = [
        ("words_213_n3.dot", words),
        (
            "crystal_21_n3.dot",
            crystal_to_dot(&generate_crystal(&shape("2,1"), 3), None),
        ),
        ("decomposition_43_n4.dot", crystal_to_dot(&b43, Some(&d43))),
        (
            "skeleton_43_n4.dot",
            skeleton_to_dot(&build_skeleton(&shape("4,3"), 4)),
        ),
        (
            "skeleton_411.dot",
            skeleton_to_dot(&skeleton_stable(&shape("4,1,1"))?),
        ),
        (
            "skeleton_321.dot",
            skeleton_to_dot(&skeleton_stable(&shape("3,2,1"))?),
        ),
        (
            "dual_equivalence_43.dot",
            dual_equivalence_to_dot(&dual_equivalence_graph(&shape("4,3"))),
        ),
    ];
    let mut out = String::new();
    for (name, body) in files {
        let path = dir.join(name);
        std::fs::write(&path, body).map_err(io)?;
        let _ = writeln!(out, "{}", path.display());
    }
    Ok(out)
}
