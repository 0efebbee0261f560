//! Command-line driver. Everything is routed through [`run`] so tests can capture output and
//! exit codes without spawning a process.
//!
//! Exit codes: 0 success, 1 a discrepancy or violation exceeded the tolerance, 2 bad input,
//! 3 non-bipartite graph, 4 quadrature or eigensolver failure, 5 unequal orders after
//! padding, 6 tree count too large to enumerate, 7 exponent not an even integer.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::charpoly::{b_coefficients, char_poly, quasi_compare, CharPoly, QuasiOrder};
use crate::energy::{
    energy_coulson_with, energy_difference_cj_with, EnergyOptions, EnergyReport, P_GUARD,
};
use crate::error::Error;
use crate::graph::{path_graph, star_graph, Graph};
use crate::graph6::{parse_graph6, write_graph6};
use crate::quadrature::{QuadratureDiagnostics, DEFAULT_MAX_EVALS};
use crate::spectrum::energy_spectral;
use crate::trees::{enumerate_trees, sample_trees, tree_from_pruefer, ENUMERATION_CAP};
use crate::verify::{
    check_csikvari_direction_over, is_even_exponent, verify_tree_bounds_over, CsikvariReport,
    TreeBoundsReport,
};

pub const SCHEMA_VERSION: u32 = 1;
pub const MAX_EVALS_ENV: &str = "SCHATTEN_MAX_EVALS";

pub mod exit {
    pub const OK: i32 = 0;
    pub const TOLERANCE: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const NOT_BIPARTITE: i32 = 3;
    pub const QUADRATURE: i32 = 4;
    pub const ORDER_MISMATCH: i32 = 5;
    pub const TOO_LARGE: i32 = 6;
    pub const BAD_EXPONENT: i32 = 7;
}

#[derive(Debug, Parser)]
#[command(
    name = "schatten",
    version,
    about = "p-Schatten energy of bipartite graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Spectral and Coulson-integral energy of one graph.
    Energy(EnergyArgs),
    /// Quasi-order verdict and Coulson–Jacobs energy difference of two graphs.
    Compare(CompareArgs),
    /// Energy over a grid of exponents, one CSV row per p.
    Sweep(SweepArgs),
    /// Check S_n ⪯ T ⪯ P_n and E_p(S_n) ≤ E_p(T) ≤ E_p(P_n) over all trees on n vertices.
    Verify(VerifyArgs),
    /// Check the reversed chain E_p(S_n) ≥ E_p(T) ≥ E_p(P_n) for even p.
    Csikvari(CsikvariArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct GraphArgs {
    /// Graph in graph6 format.
    #[arg(long)]
    graph6: Option<String>,
    /// Edge-list file: first line "n m", then m lines "u v".
    #[arg(long)]
    edges: Option<PathBuf>,
    /// Path on N vertices.
    #[arg(long, value_name = "N")]
    path: Option<usize>,
    /// Star on N vertices.
    #[arg(long, value_name = "N")]
    star: Option<usize>,
    /// Tree from a comma-separated Prüfer sequence.
    #[arg(long, value_name = "SEQ", allow_hyphen_values = true)]
    pruefer: Option<String>,
}

#[derive(Debug, Args)]
struct QuadArgs {
    /// Absolute tolerance for the integral and the spectral cross-check.
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    /// Allow integral formulas for p outside [0.05, 1.95].
    #[arg(long)]
    allow_extreme_p: bool,
}

#[derive(Debug, Args)]
struct EnergyArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[arg(long)]
    p: f64,
    #[command(flatten)]
    quad: QuadArgs,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Args)]
struct CompareArgs {
    /// First graph: graph6 text, or one of path:N, star:N, pruefer:SEQ, graph6:TEXT, edges:FILE.
    #[arg(long)]
    g1: String,
    /// Second graph, same syntax as --g1.
    #[arg(long)]
    g2: String,
    #[arg(long)]
    p: f64,
    #[command(flatten)]
    quad: QuadArgs,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Exponents: "start:stop:step" or a comma-separated list; empty for none.
    #[arg(long, allow_hyphen_values = true)]
    grid: String,
    #[command(flatten)]
    quad: QuadArgs,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value = "0.2:1.8:0.2")]
    grid: String,
    /// Tolerance on the spectral comparisons.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Check trees from this many random Prüfer sequences instead of all trees.
    #[arg(long)]
    sample: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Args)]
struct CsikvariArgs {
    #[arg(long)]
    n: usize,
    /// Even exponents, comma-separated or "start:stop:step".
    #[arg(long, default_value = "4,6")]
    p: String,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    #[arg(long)]
    sample: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

/// A failure carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::NotBipartite { .. } | Error::NotBipartitePolynomial(_) => exit::NOT_BIPARTITE,
            Error::Quadrature { .. } | Error::NoConvergence { .. } | Error::PsiVanishes(_) => {
                exit::QUADRATURE
            }
            Error::OrderMismatch(..) => exit::ORDER_MISMATCH,
            Error::EnumerationCap { .. } => exit::TOO_LARGE,
            _ => exit::PARSE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: exit::PARSE,
            message: e.to_string(),
        }
    }
}

fn fail(code: i32, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Parses `args` (including the program name), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                exit::PARSE
            } else {
                exit::OK
            };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    let result = match cli.command {
        Command::Energy(a) => cmd_energy(a, out),
        Command::Compare(a) => cmd_compare(a, out),
        Command::Sweep(a) => cmd_sweep(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Csikvari(a) => cmd_csikvari(a, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn energy_options(quad: &QuadArgs) -> std::result::Result<EnergyOptions, Failure> {
    if !(quad.tol > 0.0) {
        return Err(fail(
            exit::PARSE,
            format!("--tol must be positive, got {}", quad.tol),
        ));
    }
    let max_evals = match std::env::var(MAX_EVALS_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| fail(exit::PARSE, format!("{MAX_EVALS_ENV}={v:?} is not a count")))?,
        Err(_) => DEFAULT_MAX_EVALS,
    };
    Ok(EnergyOptions {
        tol: quad.tol,
        max_evals,
        allow_extreme_p: quad.allow_extreme_p,
    })
}

fn parse_pruefer(text: &str) -> std::result::Result<Graph, Failure> {
    let seq = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| fail(exit::PARSE, format!("bad Prüfer entry {s:?}")))
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(tree_from_pruefer(&seq)?)
}

fn read_edges(path: &PathBuf) -> std::result::Result<Graph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| fail(exit::PARSE, format!("{}: {e}", path.display())))?;
    Ok(Graph::parse_edge_list(&text)?)
}

impl GraphArgs {
    fn load(&self) -> std::result::Result<Graph, Failure> {
        if let Some(s) = &self.graph6 {
            return Ok(parse_graph6(s)?);
        }
        if let Some(p) = &self.edges {
            return read_edges(p);
        }
        if let Some(n) = self.path {
            return Ok(path_graph(n)?);
        }
        if let Some(n) = self.star {
            return Ok(star_graph(n)?);
        }
        if let Some(seq) = &self.pruefer {
            return parse_pruefer(seq);
        }
        Err(fail(exit::PARSE, "no graph given"))
    }
}

/// Parses a graph spec: `path:N`, `star:N`, `pruefer:SEQ`, `graph6:TEXT`, `edges:FILE`, or
/// bare graph6 text (graph6 never contains ':').
fn load_spec(spec: &str) -> std::result::Result<Graph, Failure> {
    let Some((kind, value)) = spec.split_once(':') else {
        return Ok(parse_graph6(spec)?);
    };
    let count = || {
        value
            .trim()
            .parse::<usize>()
            .map_err(|_| fail(exit::PARSE, format!("bad vertex count in {spec:?}")))
    };
    match kind {
        "path" => Ok(path_graph(count()?)?),
        "star" => Ok(star_graph(count()?)?),
        "pruefer" => parse_pruefer(value),
        "graph6" => Ok(parse_graph6(value)?),
        "edges" => read_edges(&PathBuf::from(value)),
        _ => Err(fail(
            exit::PARSE,
            format!("unknown graph kind {kind:?} in {spec:?}"),
        )),
    }
}

/// Parses "start:stop:step" or a comma-separated list. Range points are rounded to 12
/// decimals so that 0.1-steps print cleanly.
pub fn parse_grid(text: &str) -> std::result::Result<Vec<f64>, String> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    let num = |s: &str| {
        s.trim()
            .parse::<f64>()
            .ok()
            .filter(|x| x.is_finite())
            .ok_or_else(|| format!("bad number {s:?} in grid"))
    };
    if text.contains(':') {
        let parts: Vec<_> = text.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("range grid must be start:stop:step, got {text:?}"));
        }
        let (start, stop, step) = (num(parts[0])?, num(parts[1])?, num(parts[2])?);
        if !(step > 0.0) || stop < start {
            return Err(format!("empty or unbounded range {text:?}"));
        }
        let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
        Ok((0..count)
            .map(|i| ((start + i as f64 * step) * 1e12).round() / 1e12)
            .collect())
    } else {
        text.split(',').map(num).collect()
    }
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema: u32,
    command: &'a str,
    #[serde(flatten)]
    body: T,
}

fn emit_json<T: Serialize>(out: &mut dyn Write, command: &str, body: T) -> std::io::Result<()> {
    let env = Envelope {
        schema: SCHEMA_VERSION,
        command,
        body,
    };
    let text = serde_json::to_string_pretty(&env).expect("reports serialize");
    writeln!(out, "{text}")
}

#[derive(Serialize)]
struct GraphInfo {
    graph6: String,
    n: usize,
    m: usize,
    char_poly: Option<CharPoly>,
    b: Option<Vec<String>>,
}

fn graph_info(g: &Graph) -> GraphInfo {
    let poly = char_poly(g);
    let b = b_coefficients(&poly).ok().map(|b| b.to_strings());
    GraphInfo {
        graph6: write_graph6(g),
        n: g.n(),
        m: g.m(),
        char_poly: Some(poly),
        b,
    }
}

const CSV_HEADER: [&str; 5] = ["graph_id", "p", "spectral", "integral", "discrepancy"];

fn opt_field(x: Option<f64>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn csv_rows(out: &mut dyn Write, id: &str, reports: &[EnergyReport]) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in reports {
        w.write_record([
            id.to_string(),
            r.p.to_string(),
            r.spectral.to_string(),
            opt_field(r.integral),
            opt_field(r.discrepancy),
        ])?;
    }
    w.flush()
}

fn in_integral_range(p: f64, opts: &EnergyOptions) -> bool {
    p > 0.0 && p < 2.0 && (opts.allow_extreme_p || (P_GUARD.0..=P_GUARD.1).contains(&p))
}

fn energy_report(
    g: &Graph,
    p: f64,
    opts: &EnergyOptions,
) -> std::result::Result<EnergyReport, Failure> {
    if in_integral_range(p, opts) {
        Ok(energy_coulson_with(g, p, opts)?)
    } else {
        Ok(EnergyReport::spectral_only(p, energy_spectral(g, p)?))
    }
}

fn within(r: &EnergyReport, tol: f64) -> bool {
    r.discrepancy.is_none_or(|d| d <= tol)
}

fn cmd_energy(a: EnergyArgs, out: &mut dyn Write) -> CmdResult {
    let g = a.graph.load()?;
    let opts = energy_options(&a.quad)?;
    if guarded_out(a.p, &opts) {
        return Err(fail(
            exit::PARSE,
            format!(
                "p = {} lies outside [{}, {}]; pass --allow-extreme-p to integrate there",
                a.p, P_GUARD.0, P_GUARD.1
            ),
        ));
    }
    let report = energy_report(&g, a.p, &opts)?;
    match a.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Body<'a> {
                graph: GraphInfo,
                tol: f64,
                #[serde(flatten)]
                report: &'a EnergyReport,
            }
            emit_json(
                out,
                "energy",
                Body {
                    graph: graph_info(&g),
                    tol: opts.tol,
                    report: &report,
                },
            )?;
        }
        Format::Csv => csv_rows(out, &write_graph6(&g), std::slice::from_ref(&report))?,
    }
    Ok(if within(&report, opts.tol) {
        exit::OK
    } else {
        exit::TOLERANCE
    })
}

fn guarded_out(p: f64, opts: &EnergyOptions) -> bool {
    p > 0.0 && p < 2.0 && !in_integral_range(p, opts)
}

fn cmd_compare(a: CompareArgs, out: &mut dyn Write) -> CmdResult {
    let g1 = load_spec(&a.g1)?;
    let g2 = load_spec(&a.g2)?;
    let opts = energy_options(&a.quad)?;
    let b1 = b_coefficients(&char_poly(&g1))?;
    let b2 = b_coefficients(&char_poly(&g2))?;
    let verdict: QuasiOrder = quasi_compare(&b1, &b2)?;
    let report = energy_difference_cj_with(&g1, &g2, a.p, &opts)?;

    #[derive(Serialize)]
    struct Body {
        g1: GraphInfo,
        g2: GraphInfo,
        p: f64,
        tol: f64,
        verdict: QuasiOrder,
        cj_difference: Option<f64>,
        spectral_difference: f64,
        discrepancy: Option<f64>,
        diagnostics: Option<QuadratureDiagnostics>,
    }
    emit_json(
        out,
        "compare",
        Body {
            g1: graph_info(&g1),
            g2: graph_info(&g2),
            p: a.p,
            tol: opts.tol,
            verdict,
            cj_difference: report.integral,
            spectral_difference: report.spectral,
            discrepancy: report.discrepancy,
            diagnostics: report.diagnostics,
        },
    )?;
    Ok(if within(&report, opts.tol) {
        exit::OK
    } else {
        exit::TOLERANCE
    })
}

fn cmd_sweep(a: SweepArgs, out: &mut dyn Write) -> CmdResult {
    let g = a.graph.load()?;
    let opts = energy_options(&a.quad)?;
    let grid = parse_grid(&a.grid).map_err(|m| fail(exit::PARSE, m))?;
    let reports = grid
        .iter()
        .map(|&p| energy_report(&g, p, &opts))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let id = write_graph6(&g);
    match a.format {
        Format::Csv => csv_rows(out, &id, &reports)?,
        Format::Json => {
            #[derive(Serialize)]
            struct Body<'a> {
                graph: GraphInfo,
                tol: f64,
                rows: &'a [EnergyReport],
            }
            emit_json(
                out,
                "sweep",
                Body {
                    graph: graph_info(&g),
                    tol: opts.tol,
                    rows: &reports,
                },
            )?;
        }
    }
    Ok(if reports.iter().all(|r| within(r, opts.tol)) {
        exit::OK
    } else {
        exit::TOLERANCE
    })
}

fn trees_for(
    n: usize,
    sample: Option<usize>,
    seed: u64,
) -> std::result::Result<Vec<crate::trees::CanonicalTree>, Failure> {
    match sample {
        Some(k) => Ok(sample_trees(n, k, seed)?),
        None if n > ENUMERATION_CAP => Err(fail(
            exit::TOO_LARGE,
            format!(
                "n = {n} exceeds the enumeration cap {ENUMERATION_CAP}; use --sample K --seed S"
            ),
        )),
        None => Ok(enumerate_trees(n)?),
    }
}

#[derive(Serialize)]
struct Sampling {
    sampled: bool,
    samples: Option<usize>,
    seed: Option<u64>,
}

impl Sampling {
    fn new(sample: Option<usize>, seed: u64) -> Self {
        Sampling {
            sampled: sample.is_some(),
            samples: sample,
            seed: sample.map(|_| seed),
        }
    }
}

fn cmd_verify(a: VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let grid = parse_grid(&a.grid).map_err(|m| fail(exit::PARSE, m))?;
    if !(a.tol > 0.0) {
        return Err(fail(exit::PARSE, "--tol must be positive"));
    }
    let trees = trees_for(a.n, a.sample, a.seed)?;
    let report = verify_tree_bounds_over(a.n, &trees, &grid, a.tol)?;

    #[derive(Serialize)]
    struct Body<'a> {
        #[serde(flatten)]
        sampling: Sampling,
        violation_count: usize,
        passed: bool,
        #[serde(flatten)]
        report: &'a TreeBoundsReport,
    }
    emit_json(
        out,
        "verify",
        Body {
            sampling: Sampling::new(a.sample, a.seed),
            violation_count: report.violation_count(),
            passed: report.passed(),
            report: &report,
        },
    )?;
    Ok(if report.passed() {
        exit::OK
    } else {
        exit::TOLERANCE
    })
}

fn cmd_csikvari(a: CsikvariArgs, out: &mut dyn Write) -> CmdResult {
    let grid = parse_grid(&a.p).map_err(|m| fail(exit::BAD_EXPONENT, m))?;
    if let Some(p) = grid.iter().find(|&&p| !is_even_exponent(p)) {
        return Err(fail(
            exit::BAD_EXPONENT,
            format!("p = {p} is not an even integer >= 2"),
        ));
    }
    if !(a.tol > 0.0) {
        return Err(fail(exit::PARSE, "--tol must be positive"));
    }
    let trees = trees_for(a.n, a.sample, a.seed)?;
    let report = check_csikvari_direction_over(a.n, &trees, &grid, a.tol)?;

    #[derive(Serialize)]
    struct Body<'a> {
        #[serde(flatten)]
        sampling: Sampling,
        violation_count: usize,
        passed: bool,
        #[serde(flatten)]
        report: &'a CsikvariReport,
    }
    emit_json(
        out,
        "csikvari",
        Body {
            sampling: Sampling::new(a.sample, a.seed),
            violation_count: report.violations.len(),
            passed: report.passed(),
            report: &report,
        },
    )?;
    Ok(if report.passed() {
        exit::OK
    } else {
        exit::TOLERANCE
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids() {
        assert_eq!(parse_grid("").unwrap(), Vec::<f64>::new());
        assert_eq!(parse_grid("0.5, 1,1.5").unwrap(), vec![0.5, 1.0, 1.5]);
        let g = parse_grid("0.1:1.9:0.1").unwrap();
        assert_eq!(g.len(), 19);
        assert_eq!(g[2], 0.3);
        assert_eq!(g[18], 1.9);
        assert_eq!(parse_grid("0.2:1.8:0.2").unwrap().len(), 9);
        assert!(parse_grid("1:0:0.1").is_err());
        assert!(parse_grid("a,b").is_err());
        assert!(parse_grid("0:1").is_err());
    }

    #[test]
    fn specs() {
        assert_eq!(load_spec("path:4").unwrap(), path_graph(4).unwrap());
        assert_eq!(load_spec("star:4").unwrap(), star_graph(4).unwrap());
        assert_eq!(load_spec("A_").unwrap(), path_graph(2).unwrap());
        assert_eq!(load_spec("graph6:A_").unwrap(), path_graph(2).unwrap());
        assert_eq!(load_spec("pruefer:1,2").unwrap(), path_graph(4).unwrap());
        assert_eq!(load_spec("pruefer:").unwrap(), path_graph(2).unwrap());
        assert_eq!(load_spec("cycle:5").unwrap_err().code, exit::PARSE);
        assert_eq!(load_spec("path:x").unwrap_err().code, exit::PARSE);
    }

    #[test]
    fn error_codes() {
        let f: Failure = Error::NotBipartite {
            cycle: vec![0, 1, 2],
        }
        .into();
        assert_eq!(f.code, exit::NOT_BIPARTITE);
        let f: Failure = Error::OrderMismatch(4, 6).into();
        assert_eq!(f.code, exit::ORDER_MISMATCH);
        let f: Failure = Error::EnumerationCap { n: 12, cap: 10 }.into();
        assert_eq!(f.code, exit::TOO_LARGE);
        let f: Failure = Error::Quadrature {
            tol: 1e-8,
            estimate: 1.0,
            evaluations: 10,
        }
        .into();
        assert_eq!(f.code, exit::QUADRATURE);
        let f: Failure = Error::Graph6 {
            offset: 0,
            reason: "x".into(),
        }
        .into();
        assert_eq!(f.code, exit::PARSE);
    }
}
