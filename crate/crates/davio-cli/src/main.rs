//! Command-line front end: synthesis, mapping, verification, sweep tables,
//! and artifact re-serialization.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 level budget exceeded.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use davio_core::circuit::DecompositionStyle;
use davio_core::lattice::OrderingStrategy;
use davio_core::layout::LayoutKind;
use davio_core::mapper::{map_onto, route_swat, sweep_csv, sweep_rows};
use davio_core::{
    build_lattice, default_max_levels, synthesize_from_lattice, EsopFunction, Error, VarSet,
};

#[derive(Parser)]
#[command(name = "davio", version, about = "Positive Davio lattice synthesis and layout mapping")]
struct Cli {
    /// Load the whole run configuration from a JSON file instead of flags.
    #[arg(long, global = true)]
    config: Option<std::path::PathBuf>,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand, Clone, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "command")]
enum Command {
    /// Build a lattice for a function and synthesize its SWAT circuit.
    Synth(SynthArgs),
    /// Place a synthesized circuit on a layout and report SWAP costs.
    Map(MapArgs),
    /// Check the synthesized circuit against the function on all inputs.
    Verify(FunctionArgs),
    /// Reproduce the additional-SWAP table over a range of level counts.
    Sweep(SweepArgs),
    /// Re-serialize a JSON artifact (circuit, lattice, layout) to another format.
    Export(ExportArgs),
}

#[derive(Args, Clone, Serialize, Deserialize)]
struct FunctionArgs {
    /// ESOP expression, e.g. "a b ^ b c ^ a !c".
    #[arg(short = 'f', long = "function")]
    function_text: String,
    /// Comma-separated variable order, e.g. a,b,c.
    #[arg(long, value_delimiter = ',')]
    vars: Vec<String>,
    /// Lattice construction strategy.
    #[arg(long, value_enum, default_value_t = Strategy::MinLevels)]
    #[serde(default)]
    strategy: Strategy,
    /// Level budget (default: 3 × variable count).
    #[arg(long)]
    #[serde(default)]
    max_levels: Option<usize>,
    /// Seed for randomized corpora (reserved; accepted for reproducible configs).
    #[arg(long, default_value_t = 0)]
    #[serde(default)]
    seed: u64,
}

#[derive(Args, Clone, Serialize, Deserialize)]
struct SynthArgs {
    #[command(flatten)]
    #[serde(flatten)]
    function: FunctionArgs,
    /// Flatten SWAT blocks with this Toffoli decomposition.
    #[arg(long, value_enum)]
    #[serde(default)]
    style: Option<Style>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    #[serde(default)]
    format: OutputFormat,
}

#[derive(Args, Clone, Serialize, Deserialize)]
struct MapArgs {
    #[command(flatten)]
    #[serde(flatten)]
    function: FunctionArgs,
    /// Target layout.
    #[arg(long, value_enum)]
    layout: Layout,
    /// Also emit the routed circuit with inserted SWAPs.
    #[arg(long, default_value_t = false)]
    #[serde(default)]
    emit_routed: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    #[serde(default)]
    format: OutputFormat,
}

#[derive(Args, Clone, Serialize, Deserialize)]
struct SweepArgs {
    /// Level-count range, e.g. 1..7 (inclusive) or a single number.
    #[arg(long, default_value = "1..10")]
    n: String,
    /// Layout columns to include.
    #[arg(long, value_enum, value_delimiter = ',',
          default_values_t = vec![Layout::Square, Layout::HeavyHex, Layout::Triangular])]
    #[serde(default = "all_layouts")]
    layouts: Vec<Layout>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    #[serde(default = "csv_format")]
    format: OutputFormat,
}

fn all_layouts() -> Vec<Layout> {
    vec![Layout::Square, Layout::HeavyHex, Layout::Triangular]
}

fn csv_format() -> OutputFormat {
    OutputFormat::Csv
}

#[derive(Args, Clone, Serialize, Deserialize)]
struct ExportArgs {
    /// JSON artifact produced by synth or map ("-" for stdin).
    #[arg(long)]
    input: String,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    #[serde(default)]
    format: OutputFormat,
}

#[derive(Clone, Copy, Default, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
enum Strategy {
    FixedOrder,
    RoundRobin,
    #[default]
    MinLevels,
}

impl From<Strategy> for OrderingStrategy {
    fn from(s: Strategy) -> Self {
        match s {
            Strategy::FixedOrder => OrderingStrategy::FixedOrder,
            Strategy::RoundRobin => OrderingStrategy::RoundRobin,
            Strategy::MinLevels => OrderingStrategy::ExhaustiveMinLevels,
        }
    }
}

#[derive(Clone, Copy, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
enum Style {
    QiskitStandard,
    Barenco,
    Amy,
    LinearNn,
}

impl From<Style> for DecompositionStyle {
    fn from(s: Style) -> Self {
        match s {
            Style::QiskitStandard => DecompositionStyle::QiskitStandard,
            Style::Barenco => DecompositionStyle::Barenco,
            Style::Amy => DecompositionStyle::Amy,
            Style::LinearNn => DecompositionStyle::LinearNn,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
enum Layout {
    Square,
    HeavyHex,
    Triangular,
}

impl std::fmt::Display for Layout {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Layout::Square => "square",
            Layout::HeavyHex => "heavy-hex",
            Layout::Triangular => "triangular",
        })
    }
}

impl From<Layout> for LayoutKind {
    fn from(l: Layout) -> Self {
        match l {
            Layout::Square => LayoutKind::Square,
            Layout::HeavyHex => LayoutKind::HeavyHex,
            Layout::Triangular => LayoutKind::Triangular,
        }
    }
}

#[derive(Clone, Copy, Default, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
enum OutputFormat {
    #[default]
    Json,
    Dot,
    Qasm,
    Csv,
    Text,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = match &cli.config {
        Some(path) => match load_config(path) {
            Ok(c) => c,
            Err(msg) => {
                eprintln!("error: {msg}");
                return ExitCode::from(2);
            }
        },
        None => match cli.command {
            Some(c) => c,
            None => {
                eprintln!("error: a subcommand or --config is required");
                return ExitCode::from(2);
            }
        },
    };
    match run(command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::LevelBudgetExceeded { .. } | Error::QubitBudgetExceeded { .. } => 3,
                _ => 2,
            };
            ExitCode::from(code)
        }
    }
}

fn load_config(path: &std::path::Path) -> Result<Command, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("bad config: {e}"))
}

fn build(args: &FunctionArgs) -> davio_core::Result<(EsopFunction, davio_core::DavioLattice)> {
    let vars = VarSet::new(args.vars.iter().cloned())?;
    let f = EsopFunction::parse(&args.function_text, &vars)?;
    let max_levels = args.max_levels.unwrap_or_else(|| default_max_levels(vars.len()));
    let lattice = build_lattice(&f, args.strategy.into(), max_levels)?;
    Ok((f, lattice))
}

fn run(command: Command) -> davio_core::Result<u8> {
    match command {
        Command::Synth(args) => {
            let (_, lattice) = build(&args.function)?;
            let synth = synthesize_from_lattice(&lattice)?;
            let circuit = match args.style {
                Some(style) => synth.flattened(style.into()),
                None => synth.circuit.clone(),
            };
            match args.format {
                OutputFormat::Json => {
                    let out = serde_json::json!({
                        "lattice": lattice.to_json(),
                        "circuit": circuit.to_json(),
                        "n_levels": synth.n_levels,
                        "swat_blocks": synth.blocks.len(),
                        "output_line": synth.output_line,
                    });
                    println!("{}", serde_json::to_string_pretty(&out).unwrap());
                }
                OutputFormat::Dot => print!("{}", lattice.to_dot()),
                OutputFormat::Qasm => print!("{}", circuit.to_qasm()),
                OutputFormat::Text => {
                    println!(
                        "{} levels, {} SWAT blocks, {} qubits, output on d0",
                        synth.n_levels,
                        synth.blocks.len(),
                        synth.circuit.n_qubits
                    );
                }
                OutputFormat::Csv => {
                    return Err(Error::InconsistentReport("synth has no CSV form".into()))
                }
            }
            Ok(0)
        }
        Command::Map(args) => {
            let (_, lattice) = build(&args.function)?;
            let synth = synthesize_from_lattice(&lattice)?;
            let mapping = map_onto(&synth, args.layout.into())?;
            match args.format {
                OutputFormat::Json => {
                    let mut out = serde_json::json!({
                        "report": mapping.report.to_json(),
                        "layout_graph": mapping.layout.to_json(),
                    });
                    if args.emit_routed {
                        let routed = route_swat(&synth, &mapping.report)?;
                        out["routed_circuit"] = routed.to_json();
                    }
                    println!("{}", serde_json::to_string_pretty(&out).unwrap());
                }
                OutputFormat::Text => {
                    println!(
                        "{} onto {}: {} additional SWAPs, {} extra CNOTs{}",
                        args.function.function_text,
                        args.layout,
                        mapping.report.total_swaps,
                        mapping.report.total_extra_cnots,
                        if mapping.report.bound_only { " (upper bound)" } else { "" }
                    );
                }
                _ => return Err(Error::InconsistentReport("map emits json or text".into())),
            }
            Ok(0)
        }
        Command::Verify(args) => {
            let (f, lattice) = build(&args)?;
            let synth = synthesize_from_lattice(&lattice)?;
            if synth.verify(&f)? {
                println!(
                    "PASS: circuit matches the function on all {} inputs",
                    1u64 << f.vars().len()
                );
                Ok(0)
            } else {
                println!("FAIL: circuit differs from the function");
                Ok(1)
            }
        }
        Command::Sweep(args) => {
            let (lo, hi) = parse_range(&args.n)?;
            let rows = sweep_parallel(lo, hi)?;
            match args.format {
                OutputFormat::Csv => print!("{}", sweep_table(&rows, &args.layouts)),
                OutputFormat::Json => {
                    let out: Vec<_> = rows
                        .iter()
                        .map(|&(n, sq, hh, tri)| {
                            serde_json::json!({
                                "n": n, "square": sq, "heavy_hex": hh, "triangular": tri
                            })
                        })
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&out).unwrap());
                }
                _ => return Err(Error::InconsistentReport("sweep emits csv or json".into())),
            }
            Ok(0)
        }
        Command::Export(args) => {
            let text = if args.input == "-" {
                let mut buf = String::new();
                std::io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| Error::InconsistentReport(format!("stdin: {e}")))?;
                buf
            } else {
                std::fs::read_to_string(&args.input)
                    .map_err(|e| Error::InconsistentReport(format!("{}: {e}", args.input)))?
            };
            let value: serde_json::Value = serde_json::from_str(&text)
                .map_err(|e| Error::InconsistentReport(format!("bad JSON: {e}")))?;
            print!("{}", export_artifact(&value, args.format)?);
            Ok(0)
        }
    }
}

fn sweep_table(rows: &[(usize, usize, usize, usize)], layouts: &[Layout]) -> String {
    if layouts.len() == 3
        && layouts[0] == Layout::Square
        && layouts[1] == Layout::HeavyHex
        && layouts[2] == Layout::Triangular
    {
        return sweep_csv(rows);
    }
    let mut out = String::from("n");
    for l in layouts {
        out.push(',');
        out.push_str(match l {
            Layout::Square => "square",
            Layout::HeavyHex => "heavy_hex",
            Layout::Triangular => "triangular",
        });
    }
    out.push('\n');
    for &(n, sq, hh, tri) in rows {
        out.push_str(&n.to_string());
        for l in layouts {
            out.push(',');
            let v = match l {
                Layout::Square => sq,
                Layout::HeavyHex => hh,
                Layout::Triangular => tri,
            };
            out.push_str(&v.to_string());
        }
        out.push('\n');
    }
    out
}

/// Parallel sweep honoring the DAVIO_SYNTH_THREADS cap.
fn sweep_parallel(lo: usize, hi: usize) -> davio_core::Result<Vec<(usize, usize, usize, usize)>> {
    let ns: Vec<usize> = (lo..=hi).collect();
    let threads: usize = std::env::var("DAVIO_SYNTH_THREADS")
        .ok()
        .and_then(|s| s.parse().ok())
        .filter(|&t| t >= 1)
        .unwrap_or(1)
        .min(ns.len().max(1));
    if threads <= 1 {
        return sweep_rows(ns);
    }
    let chunks: Vec<Vec<usize>> =
        ns.chunks(ns.len().div_ceil(threads)).map(<[usize]>::to_vec).collect();
    let results: Vec<davio_core::Result<Vec<_>>> = std::thread::scope(|scope| {
        let handles: Vec<_> =
            chunks.into_iter().map(|chunk| scope.spawn(move || sweep_rows(chunk))).collect();
        handles.into_iter().map(|h| h.join().expect("sweep worker panicked")).collect()
    });
    let mut rows = Vec::new();
    for r in results {
        rows.extend(r?);
    }
    rows.sort_unstable();
    Ok(rows)
}

fn parse_range(text: &str) -> davio_core::Result<(usize, usize)> {
    let bad = || Error::InconsistentReport(format!("bad range `{text}`, expected e.g. 1..7"));
    if let Some((lo, hi)) = text.split_once("..") {
        let lo: usize = lo.parse().map_err(|_| bad())?;
        let hi: usize = hi.parse().map_err(|_| bad())?;
        if lo < 1 || hi < lo {
            return Err(bad());
        }
        Ok((lo, hi))
    } else {
        let n: usize = text.parse().map_err(|_| bad())?;
        if n < 1 {
            return Err(bad());
        }
        Ok((n, n))
    }
}

/// Re-serialize a prior JSON artifact; the artifact type is recognized by
/// its fields (possibly nested under synth/map output).
fn export_artifact(value: &serde_json::Value, format: OutputFormat) -> davio_core::Result<String> {
    if format == OutputFormat::Json {
        return Ok(format!("{}\n", serde_json::to_string_pretty(value).unwrap()));
    }
    let candidates = [
        value.clone(),
        value["circuit"].clone(),
        value["routed_circuit"].clone(),
        value["lattice"].clone(),
        value["layout_graph"].clone(),
    ];
    for v in &candidates {
        if v.is_null() {
            continue;
        }
        match format {
            OutputFormat::Qasm if v.get("gates").is_some() => {
                return Ok(davio_core::Circuit::from_json(v)?.to_qasm());
            }
            OutputFormat::Dot if v.get("levels").is_some() => {
                return lattice_json_to_dot(v);
            }
            OutputFormat::Dot if v.get("nodes").is_some() => {
                return layout_json_to_dot(v);
            }
            _ => {}
        }
    }
    Err(Error::InconsistentReport(
        "no artifact in the input supports this export format".into(),
    ))
}

fn lattice_json_to_dot(v: &serde_json::Value) -> davio_core::Result<String> {
    let bad = |m: &str| Error::InconsistentReport(format!("bad lattice artifact: {m}"));
    let levels = v["levels"].as_array().ok_or_else(|| bad("levels"))?;
    let level_vars = v["level_vars"].as_array().ok_or_else(|| bad("level_vars"))?;
    let mut out = String::from("digraph lattice {\n  rankdir=TB;\n  node [shape=box];\n");
    for (k, row) in levels.iter().enumerate() {
        let row = row.as_array().ok_or_else(|| bad("level row"))?;
        for (i, label) in row.iter().enumerate() {
            out.push_str(&format!(
                "  n{k}_{i} [label=\"{}\"];\n",
                label.as_str().unwrap_or_default()
            ));
        }
        let ids: Vec<String> = (0..row.len()).map(|i| format!("n{k}_{i}")).collect();
        out.push_str(&format!("  {{ rank=same; {} }}\n", ids.join("; ")));
    }
    for (k, var) in level_vars.iter().enumerate() {
        let var = var.as_str().unwrap_or_default();
        let width = levels[k].as_array().map(|r| r.len()).unwrap_or(0);
        for i in 0..width {
            out.push_str(&format!("  n{k}_{i} -> n{}_{} [label=\"1\"];\n", k + 1, i));
            out.push_str(&format!("  n{k}_{i} -> n{}_{} [label=\"{var}\"];\n", k + 1, i + 1));
        }
    }
    out.push_str("}\n");
    Ok(out)
}

fn layout_json_to_dot(v: &serde_json::Value) -> davio_core::Result<String> {
    let bad = |m: &str| Error::InconsistentReport(format!("bad layout artifact: {m}"));
    let kind = v["kind"].as_str().unwrap_or("layout").replace('-', "_");
    let nodes = v["nodes"].as_array().ok_or_else(|| bad("nodes"))?;
    let edges = v["edges"].as_array().ok_or_else(|| bad("edges"))?;
    let mut out = format!("graph {kind} {{\n  node [shape=circle];\n");
    for n in nodes {
        out.push_str(&format!("  q{} [pos=\"{},{}!\"];\n", n["id"], n["x"], n["y"]));
    }
    for e in edges {
        let pair = e.as_array().ok_or_else(|| bad("edge"))?;
        out.push_str(&format!("  q{} -- q{};\n", pair[0], pair[1]));
    }
    out.push_str("}\n");
    Ok(out)
}
