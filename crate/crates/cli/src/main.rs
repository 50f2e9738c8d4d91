use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use hyperspec::json::{fmt_f64, Obj};
use hyperspec::{hg, report, verify};
use hyperspec_core::spectra::{self, AdjacencyMatrix, DEFAULT_EIGEN_TOL, DEFAULT_EXACT_CAP};
use hyperspec_core::{bounds, constructions, surgery};
use hyperspec_core::{EdgeDivision, Hypergraph, Mode};

/// Adjacency energy of hypergraphs: spectra, surgery, bounds, verification.
#[derive(Parser)]
#[command(name = "hyperspec", version, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FileArgs {
    /// Input .hg file
    file: PathBuf,
    /// Parse as a multi-hypergraph (repeated edges, sizes 0-1 allowed)
    #[arg(long)]
    multi: bool,
    /// Human-readable output instead of JSON
    #[arg(long)]
    pretty: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Structural summary: sizes, degrees, rank, connectivity
    Info(FileArgs),
    /// Eigenvalues, optionally with exact integer annotations
    Spectrum {
        #[command(flatten)]
        common: FileArgs,
        /// Run the exact characteristic-polynomial path
        #[arg(long)]
        exact: bool,
        /// Dump eigenvalues as CSV for external plotting
        #[arg(long)]
        csv: bool,
    },
    /// Energy report with positive-part decomposition and parity
    Energy(FileArgs),
    /// Evaluate every energy bound and comparison
    Bounds(FileArgs),
    /// Parity certificate via exact integer arithmetic
    Parity(FileArgs),
    /// Generate hypergraphs as .hg files
    Gen {
        #[command(subcommand)]
        kind: GenCommand,
    },
    /// Surgery: deletion and division with gap reports
    Op {
        #[command(subcommand)]
        kind: OpCommand,
    },
    /// Binary operations on two hypergraphs
    Binop {
        #[command(subcommand)]
        kind: BinopCommand,
    },
    /// Run seeded theorem verification suites
    Verify {
        /// Theorem id (repeatable); default runs all
        #[arg(long = "theorem")]
        theorems: Vec<String>,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long = "n-max", default_value_t = 10)]
        n_max: usize,
        #[arg(long = "m-max", default_value_t = 8)]
        m_max: usize,
        /// Edge size range lo:hi for generated instances
        #[arg(long, default_value = "2:4")]
        sizes: String,
        /// Uniformity for the product suite (4 switches to scaling report)
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        pretty: bool,
    },
}

#[derive(Subcommand)]
enum GenCommand {
    /// Hyperstar: the k-th power of the star on n vertices
    Star {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Complete k-graph on n vertices
    Complete {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// k-th power of a 2-graph read from a file
    Power {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Seeded random hypergraph with distinct edges
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Edge size range lo:hi
        #[arg(long, default_value = "2:3")]
        sizes: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum OpCommand {
    /// Delete a vertex (by label); prints the monotonicity gap report
    DeleteVertex {
        file: PathBuf,
        vertex: String,
        #[arg(long)]
        multi: bool,
        /// Write the resulting .hg here
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Delete an edge (by index); prints the 2|e|-2 gap report
    DeleteEdge {
        file: PathBuf,
        index: usize,
        #[arg(long)]
        multi: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Divide an edge; --left lists the labels of one half
    Divide {
        file: PathBuf,
        index: usize,
        /// Comma-separated labels forming the left half
        #[arg(long)]
        left: String,
        #[arg(long)]
        multi: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum BinopCommand {
    /// Sum: spectra add
    Sum {
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Product: spectra multiply (for uniformity up to 3)
    Product {
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Data(String),
}

fn exact_cap() -> usize {
    std::env::var("HYPERSPEC_EXACT_CAP")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_EXACT_CAP)
}

fn read_hypergraph(path: &Path, multi: bool) -> Result<Hypergraph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Data(format!("{}: {e}", path.display())))?;
    let mode = if multi { Mode::Multi } else { Mode::Strict };
    hg::parse(&text, mode).map_err(|e| Failure::Data(format!("{}: {e}", path.display())))
}

fn emit_hg(h: &Hypergraph, comments: &[String], out: Option<&PathBuf>) -> Result<(), Failure> {
    let text = hg::serialize_with_comments(h, comments);
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Data(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_sizes(s: &str) -> Result<(usize, usize), Failure> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| Failure::Usage(format!("sizes must be lo:hi, got {s:?}")))?;
    let lo = a
        .parse()
        .map_err(|_| Failure::Usage(format!("bad size {a:?}")))?;
    let hi = b
        .parse()
        .map_err(|_| Failure::Usage(format!("bad size {b:?}")))?;
    Ok((lo, hi))
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Info(args) => {
            let h = read_hypergraph(&args.file, args.multi)?;
            if args.pretty {
                print_info_pretty(&h);
            } else {
                println!("{}", report::info_json(&h));
            }
            Ok(0)
        }
        Command::Spectrum { common, exact, csv } => {
            let h = read_hypergraph(&common.file, common.multi)?;
            let a = AdjacencyMatrix::from_hypergraph(&h)
                .map_err(|e| Failure::Data(e.to_string()))?;
            let cap = exact_cap();
            let spectrum = if exact {
                spectra::spectrum_with_exact(&a, DEFAULT_EIGEN_TOL, cap)
            } else {
                spectra::spectrum_numeric(&a, DEFAULT_EIGEN_TOL)
            }
            .map_err(|e| Failure::Data(e.to_string()))?;
            let parity = if exact {
                spectra::parity_certificate_capped(&h, cap)
                    .map_err(|e| Failure::Data(e.to_string()))?
            } else {
                spectra::Parity::Undetermined
            };
            if csv {
                println!("index,eigenvalue");
                for (i, v) in spectrum.values.iter().enumerate() {
                    println!("{i},{}", fmt_f64(*v));
                }
            } else if common.pretty {
                for v in &spectrum.values {
                    println!("{}", fmt_f64(*v));
                }
            } else {
                println!("{}", report::spectrum_json(h.n(), &spectrum, &parity));
            }
            Ok(0)
        }
        Command::Energy(args) => {
            let h = read_hypergraph(&args.file, args.multi)?;
            let r = spectra::energy_capped(&h, exact_cap())
                .map_err(|e| Failure::Data(e.to_string()))?;
            if args.pretty {
                println!("energy          {}", fmt_f64(r.energy));
                println!("positive sum    {}", fmt_f64(r.positive_sum));
                println!("spectral radius {}", fmt_f64(r.spectral_radius));
                println!("parity          {}", report::parity_str(&r.parity));
            } else {
                println!("{}", report::energy_json(&r));
            }
            Ok(0)
        }
        Command::Bounds(args) => {
            let h = read_hypergraph(&args.file, args.multi)?;
            let r = bounds::full_report_capped(&h, exact_cap())
                .map_err(|e| Failure::Data(e.to_string()))?;
            if args.pretty {
                print_bounds_pretty(&r);
            } else {
                println!("{}", report::bounds_json(&r));
            }
            Ok(0)
        }
        Command::Parity(args) => {
            let h = read_hypergraph(&args.file, args.multi)?;
            let parity = spectra::parity_certificate_capped(&h, exact_cap())
                .map_err(|e| Failure::Data(e.to_string()))?;
            let mut obj = Obj::new().str("parity", report::parity_str(&parity));
            if let spectra::Parity::EvenInteger(e) = parity {
                obj = obj.u64("exact_energy", e);
            }
            println!("{}", obj.finish());
            Ok(0)
        }
        Command::Gen { kind } => run_gen(kind),
        Command::Op { kind } => run_op(kind),
        Command::Binop { kind } => run_binop(kind),
        Command::Verify {
            theorems,
            trials,
            seed,
            n_max,
            m_max,
            sizes,
            k,
            pretty,
        } => {
            for t in &theorems {
                if !verify::ALL_THEOREMS.contains(&t.as_str()) {
                    return Err(Failure::Usage(format!(
                        "unknown theorem {t:?}; known: {}",
                        verify::ALL_THEOREMS.join(", ")
                    )));
                }
            }
            let cfg = verify::VerifyConfig {
                theorems,
                trials,
                seed,
                n_max,
                m_max,
                sizes: parse_sizes(&sizes)?,
                k,
                exact_cap: exact_cap(),
            };
            let outcomes = verify::run(&cfg);
            let mut failed = false;
            for o in &outcomes {
                failed |= o.failures > 0;
                if pretty {
                    println!(
                        "{:<20} {:>6} checks {:>4} failures{}",
                        o.theorem,
                        o.checks,
                        o.failures,
                        if o.notes.is_empty() {
                            String::new()
                        } else {
                            format!("  [{}]", o.notes.join("; "))
                        }
                    );
                } else {
                    let notes =
                        hyperspec::json::array(o.notes.iter().map(|n| hyperspec::json::escape(n)));
                    let counterexamples = hyperspec::json::array(
                        o.counterexamples
                            .iter()
                            .map(|c| hyperspec::json::escape(c)),
                    );
                    println!(
                        "{}",
                        Obj::new()
                            .str("theorem", &o.theorem)
                            .usize("checks", o.checks)
                            .usize("failures", o.failures)
                            .raw("notes", notes)
                            .raw("counterexamples", counterexamples)
                            .finish()
                    );
                }
            }
            Ok(if failed { 3 } else { 0 })
        }
    }
}

fn run_gen(kind: GenCommand) -> Result<u8, Failure> {
    let (h, comments, out) = match kind {
        GenCommand::Star { n, k, out } => {
            let h = constructions::hyperstar(n, k)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            (h, vec![format!("gen star --n {n} --k {k}")], out)
        }
        GenCommand::Complete { n, k, out } => {
            let h = constructions::complete_kgraph(n, k)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            (h, vec![format!("gen complete --n {n} --k {k}")], out)
        }
        GenCommand::Power { file, k, out } => {
            let base = read_hypergraph(&file, false)?;
            let h = constructions::power_graph(&base, k)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            (
                h,
                vec![format!("gen power {} --k {k}", file.display())],
                out,
            )
        }
        GenCommand::Random {
            n,
            m,
            sizes,
            seed,
            out,
        } => {
            let range = parse_sizes(&sizes)?;
            let h = constructions::random_hypergraph(n, m, range, seed)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            (
                h,
                vec![format!(
                    "gen random --n {n} --m {m} --sizes {}:{} --seed {seed}",
                    range.0, range.1
                )],
                out,
            )
        }
    };
    emit_hg(&h, &comments, out.as_ref())?;
    Ok(0)
}

fn run_op(kind: OpCommand) -> Result<u8, Failure> {
    match kind {
        OpCommand::DeleteVertex {
            file,
            vertex,
            multi,
            out,
        } => {
            let h = read_hypergraph(&file, multi)?;
            let v = h
                .vertex(&vertex)
                .ok_or_else(|| Failure::Data(format!("unknown vertex {vertex:?}")))?;
            let report = surgery::vertex_deletion_check(&h, v)
                .map_err(|e| Failure::Data(e.to_string()))?;
            let result = surgery::delete_vertex(&h, v).map_err(|e| Failure::Data(e.to_string()))?;
            if let Some(path) = out.as_ref() {
                emit_hg(
                    &result,
                    &[format!("op delete-vertex {vertex}")],
                    Some(path),
                )?;
            }
            println!("{}", report::gap_json(&report));
            Ok(0)
        }
        OpCommand::DeleteEdge {
            file,
            index,
            multi,
            out,
        } => {
            let h = read_hypergraph(&file, multi)?;
            let report = surgery::edge_deletion_check(&h, index)
                .map_err(|e| Failure::Data(e.to_string()))?;
            let result =
                surgery::delete_edge(&h, index).map_err(|e| Failure::Data(e.to_string()))?;
            if let Some(path) = out.as_ref() {
                emit_hg(&result, &[format!("op delete-edge {index}")], Some(path))?;
            }
            println!("{}", report::gap_json(&report));
            Ok(0)
        }
        OpCommand::Divide {
            file,
            index,
            left,
            multi,
            out,
        } => {
            let h = read_hypergraph(&file, multi)?;
            let edge = h
                .edge(index)
                .map_err(|e| Failure::Data(e.to_string()))?
                .clone();
            let mut left_ids = Vec::new();
            for label in left.split(',').filter(|s| !s.is_empty()) {
                let v = h
                    .vertex(label)
                    .ok_or_else(|| Failure::Data(format!("unknown vertex {label:?}")))?;
                left_ids.push(v);
            }
            let right: Vec<_> = edge
                .members()
                .filter(|v| !left_ids.contains(v))
                .collect();
            let spec = EdgeDivision {
                edge: index,
                left: left_ids,
                right,
            };
            let report =
                surgery::division_check(&h, &spec).map_err(|e| Failure::Data(e.to_string()))?;
            let result = surgery::divide_edges(&h, std::slice::from_ref(&spec))
                .map_err(|e| Failure::Data(e.to_string()))?;
            if let Some(path) = out.as_ref() {
                emit_hg(
                    &result,
                    &[format!("op divide {index} --left {left}")],
                    Some(path),
                )?;
            }
            println!("{}", report::gap_json(&report));
            Ok(0)
        }
    }
}

fn run_binop(kind: BinopCommand) -> Result<u8, Failure> {
    let (h, comments, out) = match kind {
        BinopCommand::Sum { a, b, out } => {
            let ha = read_hypergraph(&a, false)?;
            let hb = read_hypergraph(&b, false)?;
            let h = constructions::direct_sum(&ha, &hb)
                .map_err(|e| Failure::Data(e.to_string()))?;
            (
                h,
                vec![format!("binop sum {} {}", a.display(), b.display())],
                out,
            )
        }
        BinopCommand::Product { a, b, out } => {
            let ha = read_hypergraph(&a, false)?;
            let hb = read_hypergraph(&b, false)?;
            let h = constructions::tensor_product(&ha, &hb)
                .map_err(|e| Failure::Data(e.to_string()))?;
            (
                h,
                vec![format!("binop product {} {}", a.display(), b.display())],
                out,
            )
        }
    };
    emit_hg(&h, &comments, out.as_ref())?;
    Ok(0)
}

fn print_info_pretty(h: &Hypergraph) {
    println!("vertices   {}", h.n());
    println!("edges      {}", h.m());
    if let Ok((r, s)) = h.rank_corank() {
        println!("rank       {r}");
        println!("corank     {s}");
    }
    if let Ok(stats) = h.degree_stats() {
        println!("degrees    max {} min {} avg {}", stats.max, stats.min, stats.avg);
    }
    println!("linear     {}", h.is_linear());
    println!("connected  {}", h.is_connected());
    println!("hypertree  {}", h.is_hypertree());
}

fn print_bounds_pretty(r: &hyperspec_core::bounds::BoundsReport) {
    println!(
        "n {}  m {}  rank {}  corank {}  zagreb {}  lambda1 {}  energy {}",
        r.n,
        r.m,
        r.rank,
        r.corank,
        r.zagreb,
        fmt_f64(r.lambda1),
        fmt_f64(r.energy)
    );
    for e in &r.entries {
        println!(
            "{:<18} {:<5} {:>16}  holds {}  slack {}",
            e.name,
            match e.side {
                hyperspec_core::bounds::Side::Upper => "upper",
                hyperspec_core::bounds::Side::Lower => "lower",
            },
            fmt_f64(e.value),
            e.holds,
            fmt_f64(e.slack)
        );
    }
    println!(
        "b {}  B {}  case {}  lemma comparison {}",
        fmt_f64(r.comparison.b),
        fmt_f64(r.comparison.big_b),
        r.comparison.case.as_str(),
        r.lemma_comparison.as_str()
    );
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprintln!(
                "{}",
                Obj::new().str("error", &e.to_string()).finish()
            );
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("{}", Obj::new().str("error", &msg).finish());
            ExitCode::from(1)
        }
        Err(Failure::Data(msg)) => {
            eprintln!("{}", Obj::new().str("error", &msg).finish());
            ExitCode::from(2)
        }
    }
}
