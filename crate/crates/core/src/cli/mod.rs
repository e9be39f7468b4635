//! Command-line surface: `analyze`, `harmonic`, `quadratic`, `verify`,
//! `plot` and `batch`, with table/JSON/CSV output and SVG plots. Output is
//! deterministic for identical argv: no timestamps, no ambient state.
//!
//! Exit codes: 0 success or finding, 1 verification failure, 2 usage or
//! parse error.

pub mod document;
pub mod svg;

use crate::expr::{self, parse_function};
use crate::fixpoint::{self, Tolerances};
use crate::harmonic::{self, HarmonicMap};
use crate::poly::RationalMap;
use crate::corpus;
use clap::{Args, Parser, Subcommand, ValueEnum};
use document::{
    AnalysisDocument, ConjectureJson, InputEcho, InputOptions, PolynomialSumsJson, QuadraticJson,
    RemarkJson,
};
use num_complex::Complex64;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Captured result of one CLI invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub exit_code: i32,
    pub stdout: Vec<u8>,
    pub stderr: Vec<u8>,
}

impl CommandOutput {
    fn ok(stdout: Vec<u8>) -> Self {
        CommandOutput {
            exit_code: EXIT_OK,
            stdout,
            stderr: Vec::new(),
        }
    }

    fn with_code(exit_code: i32, stdout: Vec<u8>) -> Self {
        CommandOutput {
            exit_code,
            stdout,
            stderr: Vec::new(),
        }
    }

    fn usage(message: String) -> Self {
        CommandOutput {
            exit_code: EXIT_USAGE,
            stdout: Vec::new(),
            stderr: format!("error: {message}\n").into_bytes(),
        }
    }

    pub fn stdout_str(&self) -> std::borrow::Cow<'_, str> {
        String::from_utf8_lossy(&self.stdout)
    }

    pub fn stderr_str(&self) -> std::borrow::Cow<'_, str> {
        String::from_utf8_lossy(&self.stderr)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Json,
    Csv,
}

impl OutputFormat {
    fn as_str(self) -> &'static str {
        match self {
            OutputFormat::Table => "table",
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    /// Enumerate points only.
    None,
    Conjecture,
    Remark,
    All,
}

impl CheckKind {
    fn as_str(self) -> &'static str {
        match self {
            CheckKind::None => "none",
            CheckKind::Conjecture => "conjecture",
            CheckKind::Remark => "remark",
            CheckKind::All => "all",
        }
    }

    fn wants_conjecture(self) -> bool {
        matches!(self, CheckKind::Conjecture | CheckKind::All)
    }

    fn wants_remark(self) -> bool {
        matches!(self, CheckKind::Remark | CheckKind::All)
    }
}

#[derive(Debug, Args, Clone, Copy, Default)]
struct ToleranceArgs {
    /// Root-finder convergence tolerance (default 1e-12)
    #[arg(long = "tol-root")]
    tol_root: Option<f64>,
    /// Cluster width base, scaled by 1 + max |root| (default 1e-6)
    #[arg(long = "tol-cluster")]
    tol_cluster: Option<f64>,
    /// Band |lambda - 1| treated as multiplier one (default 1e-8)
    #[arg(long = "tol-one")]
    tol_one: Option<f64>,
}

impl ToleranceArgs {
    fn resolve(&self) -> Tolerances {
        let mut tol = Tolerances::default();
        if let Some(v) = self.tol_root {
            tol.root_tol = v;
        }
        if let Some(v) = self.tol_cluster {
            tol.cluster_eps = v;
        }
        if let Some(v) = self.tol_one {
            tol.multiplier_one_band = v;
        }
        tol
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "hfix",
    version,
    about = "Fixed-point analysis for rational maps and harmonic maps h + conj(g)",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Fixed points, multipliers, multiplicities and residue indices of a map
    Analyze(AnalyzeArgs),
    /// Induced h-fixed points of f = h + conj(g) and witness checks
    Harmonic(HarmonicArgs),
    /// Closed-form analysis of z^2 + c + conj(z^2 + c)
    Quadratic(QuadraticArgs),
    /// Verify the index-sum identity and the polynomial identities
    Verify(VerifyArgs),
    /// Render an SVG plot from a prior JSON document
    Plot(PlotArgs),
    /// Analyze newline-delimited expressions or a seeded random corpus
    Batch(BatchArgs),
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    /// Map expression, e.g. "z^2 + 0.25" or "(2*z)/(z^2 + z + 1)"
    #[arg(long = "f")]
    f: String,
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,
    #[command(flatten)]
    tolerances: ToleranceArgs,
}

#[derive(Debug, Args)]
struct HarmonicArgs {
    /// Analytic part h
    #[arg(long = "h")]
    h: String,
    /// Analytic part g (f = h + conj(g))
    #[arg(long = "g")]
    g: String,
    /// Which witness checks to run
    #[arg(long, value_enum, default_value_t = CheckKind::All)]
    check: CheckKind,
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,
    #[command(flatten)]
    tolerances: ToleranceArgs,
}

#[derive(Debug, Args)]
struct QuadraticArgs {
    /// Parameter c as "a", "a+bi" or "a-bi"
    #[arg(long = "c", allow_hyphen_values = true)]
    c: String,
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,
    #[command(flatten)]
    tolerances: ToleranceArgs,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Map expression to verify
    #[arg(long = "f")]
    f: String,
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,
    #[command(flatten)]
    tolerances: ToleranceArgs,
}

#[derive(Debug, Args)]
struct PlotArgs {
    /// JSON document produced by analyze/harmonic --format json ("-" = stdin)
    #[arg(long = "input")]
    input: String,
    /// Output SVG file (stdout when omitted)
    #[arg(long = "out")]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct BatchArgs {
    /// File of newline-delimited expressions ("-" = stdin)
    #[arg(long = "input")]
    input: Option<String>,
    /// Generate N random rational maps instead of reading input
    #[arg(long = "random")]
    random: Option<usize>,
    /// Seed for --random
    #[arg(long = "seed", default_value_t = 0)]
    seed: u64,
    /// Degree for --random
    #[arg(long = "degree", default_value_t = 3)]
    degree: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,
    #[command(flatten)]
    tolerances: ToleranceArgs,
}

/// Run one CLI invocation. `argv` includes the program name. All output is
/// captured; nothing ambient is consulted, so identical argv yields
/// identical bytes.
pub fn run_command<I, T>(argv: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let rendered = err.render().to_string();
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    CommandOutput::ok(rendered.into_bytes())
                }
                _ => CommandOutput {
                    exit_code: EXIT_USAGE,
                    stdout: Vec::new(),
                    stderr: rendered.into_bytes(),
                },
            };
        }
    };

    match cli.command {
        Command::Analyze(args) => run_analyze(&args),
        Command::Harmonic(args) => run_harmonic(&args),
        Command::Quadratic(args) => run_quadratic(&args),
        Command::Verify(args) => run_verify(&args),
        Command::Plot(args) => run_plot(&args),
        Command::Batch(args) => run_batch(&args),
    }
}

// ---------------------------------------------------------------- analyze

fn run_analyze(args: &AnalyzeArgs) -> CommandOutput {
    let tol = args.tolerances.resolve();
    let map = match parse_function(&args.f) {
        Ok(map) => map,
        Err(e) => return CommandOutput::usage(e.to_string()),
    };
    let report = match fixpoint::fixed_points(&map, &tol) {
        Ok(report) => report,
        Err(e) => return CommandOutput::usage(e.to_string()),
    };
    let doc = AnalysisDocument::new(
        InputEcho {
            f: Some(args.f.clone()),
            options: Some(InputOptions {
                format: args.format.as_str().to_owned(),
                check: None,
            }),
            ..Default::default()
        },
        &tol,
    )
    .with_fixed_point_report(&report, &tol);

    let pass = doc.verdicts.index_sum_pass.unwrap_or(false);
    let stdout = match args.format {
        OutputFormat::Json => format!("{}\n", doc.to_json()),
        OutputFormat::Csv => fixed_points_csv(&doc),
        OutputFormat::Table => analyze_table(&args.f, &map, &doc),
    };
    CommandOutput::with_code(
        if pass { EXIT_OK } else { EXIT_VERIFICATION_FAILURE },
        stdout.into_bytes(),
    )
}

// ---------------------------------------------------------------- harmonic

fn run_harmonic(args: &HarmonicArgs) -> CommandOutput {
    let tol = args.tolerances.resolve();
    let h = match parse_function(&args.h) {
        Ok(m) => m,
        Err(e) => return CommandOutput::usage(format!("--h: {e}")),
    };
    let g = match parse_function(&args.g) {
        Ok(m) => m,
        Err(e) => return CommandOutput::usage(format!("--g: {e}")),
    };
    let f = HarmonicMap::new(h, g);

    if args.check.wants_conjecture() {
        for (name, map) in [("h", &f.h), ("g", &f.g)] {
            if map.degree() < 2 {
                return CommandOutput::usage(format!(
                    "component {name} has degree {} but the witness checks need degree >= 2",
                    map.degree()
                ));
            }
        }
    }

    let analysis = match harmonic::induced_h_fixed_points(&f, &tol) {
        Ok(a) => a,
        Err(e) => return CommandOutput::usage(e.to_string()),
    };

    let mut doc = AnalysisDocument::new(
        InputEcho {
            h: Some(args.h.clone()),
            g: Some(args.g.clone()),
            options: Some(InputOptions {
                format: args.format.as_str().to_owned(),
                check: Some(args.check.as_str().to_owned()),
            }),
            ..Default::default()
        },
        &tol,
    )
    .with_harmonic_analysis(&analysis);

    let mut pass = true;
    if args.check.wants_conjecture() {
        let report = harmonic::conjecture_witness_from(&analysis, &tol);
        pass &= report.pass;
        doc.verdicts.conjecture = Some(ConjectureJson::from(&report));
    }
    if args.check.wants_remark() {
        let report = harmonic::remark_witnesses_from(&analysis, &tol);
        doc.verdicts.remark = Some(RemarkJson::from(&report));
    }

    let stdout = match args.format {
        OutputFormat::Json => format!("{}\n", doc.to_json()),
        OutputFormat::Csv => h_fixed_points_csv(&doc),
        OutputFormat::Table => harmonic_table(args, &doc),
    };
    CommandOutput::with_code(
        if pass { EXIT_OK } else { EXIT_VERIFICATION_FAILURE },
        stdout.into_bytes(),
    )
}

// ---------------------------------------------------------------- quadratic

fn run_quadratic(args: &QuadraticArgs) -> CommandOutput {
    let tol = args.tolerances.resolve();
    let c = match expr::parse_constant(&args.c) {
        Ok(c) => c,
        Err(e) => return CommandOutput::usage(format!("--c: {e}")),
    };
    let report = harmonic::quadratic_family_analyze(c, &tol);
    let mut doc = AnalysisDocument::new(
        InputEcho {
            c: Some(c.into()),
            options: Some(InputOptions {
                format: args.format.as_str().to_owned(),
                check: None,
            }),
            ..Default::default()
        },
        &tol,
    );
    doc.verdicts.quadratic = Some(QuadraticJson::from(&report));

    let pass = report.equivalence_holds != Some(false);
    let stdout = match args.format {
        OutputFormat::Json => format!("{}\n", doc.to_json()),
        OutputFormat::Csv => quadratic_csv(&report),
        OutputFormat::Table => quadratic_table(&report),
    };
    CommandOutput::with_code(
        if pass { EXIT_OK } else { EXIT_VERIFICATION_FAILURE },
        stdout.into_bytes(),
    )
}

// ---------------------------------------------------------------- verify

fn run_verify(args: &VerifyArgs) -> CommandOutput {
    let tol = args.tolerances.resolve();
    let map = match parse_function(&args.f) {
        Ok(map) => map,
        Err(e) => return CommandOutput::usage(e.to_string()),
    };
    let report = match fixpoint::fixed_points(&map, &tol) {
        Ok(report) => report,
        Err(e) => return CommandOutput::usage(e.to_string()),
    };
    let mut doc = AnalysisDocument::new(
        InputEcho {
            f: Some(args.f.clone()),
            options: Some(InputOptions {
                format: args.format.as_str().to_owned(),
                check: None,
            }),
            ..Default::default()
        },
        &tol,
    )
    .with_fixed_point_report(&report, &tol);

    let mut pass = doc.verdicts.index_sum_pass.unwrap_or(false);
    if map.is_polynomial() && map.degree() >= 2 {
        match fixpoint::verify_polynomial_sums(map.num(), &tol) {
            Ok(sums) => {
                let json = PolynomialSumsJson::from_sums(&sums, tol.index_agreement);
                // a multiple fixed point skips the sums; that is a finding
                if let Some(ok) = json.e3_pass {
                    pass &= ok;
                }
                doc.verdicts.polynomial_sums = Some(json);
            }
            Err(e) => return CommandOutput::usage(e.to_string()),
        }
    }

    let stdout = match args.format {
        OutputFormat::Json => format!("{}\n", doc.to_json()),
        OutputFormat::Csv => fixed_points_csv(&doc),
        OutputFormat::Table => verify_table(&args.f, &doc),
    };
    CommandOutput::with_code(
        if pass { EXIT_OK } else { EXIT_VERIFICATION_FAILURE },
        stdout.into_bytes(),
    )
}

// ---------------------------------------------------------------- plot

fn run_plot(args: &PlotArgs) -> CommandOutput {
    let text = if args.input == "-" {
        let mut buf = String::new();
        if let Err(e) = std::io::stdin().read_to_string(&mut buf) {
            return CommandOutput::usage(format!("reading stdin: {e}"));
        }
        buf
    } else {
        match std::fs::read_to_string(&args.input) {
            Ok(t) => t,
            Err(e) => return CommandOutput::usage(format!("reading {}: {e}", args.input)),
        }
    };
    let doc = match AnalysisDocument::from_json(&text) {
        Ok(doc) => doc,
        Err(e) => return CommandOutput::usage(format!("parsing document: {e}")),
    };
    let bytes = match svg::render_plot(&doc, &svg::PlotOptions::default()) {
        Ok(bytes) => bytes,
        Err(e) => return CommandOutput::usage(e.to_string()),
    };
    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &bytes) {
                return CommandOutput::usage(format!("writing {}: {e}", path.display()));
            }
            CommandOutput::ok(format!("wrote {}\n", path.display()).into_bytes())
        }
        None => CommandOutput::ok(bytes),
    }
}

// ---------------------------------------------------------------- batch

fn run_batch(args: &BatchArgs) -> CommandOutput {
    let tol = args.tolerances.resolve();
    let expressions: Vec<String> = match (&args.input, args.random) {
        (Some(_), Some(_)) => {
            return CommandOutput::usage("--input and --random are mutually exclusive".to_owned())
        }
        (None, None) => {
            return CommandOutput::usage("batch needs --input FILE or --random N".to_owned())
        }
        (Some(path), None) => {
            let text = if path == "-" {
                let mut buf = String::new();
                if let Err(e) = std::io::stdin().read_to_string(&mut buf) {
                    return CommandOutput::usage(format!("reading stdin: {e}"));
                }
                buf
            } else {
                match std::fs::read_to_string(path) {
                    Ok(t) => t,
                    Err(e) => return CommandOutput::usage(format!("reading {path}: {e}")),
                }
            };
            text.lines()
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .map(str::to_owned)
                .collect()
        }
        (None, Some(n)) => {
            if args.degree < 1 {
                return CommandOutput::usage("--degree must be at least 1".to_owned());
            }
            let mut rng = corpus::rng_from_seed(args.seed);
            (0..n)
                .map(|_| expr::format_function(&corpus::random_rational_map(&mut rng, args.degree)))
                .collect()
        }
    };

    let mut stdout = String::new();
    let mut all_pass = true;
    let mut table_rows: Vec<Vec<String>> = Vec::new();

    for text in &expressions {
        let outcome = parse_function(text)
            .map_err(|e| e.to_string())
            .and_then(|map| {
                fixpoint::fixed_points(&map, &tol).map_err(|e| e.to_string())
            });
        match outcome {
            Ok(report) => {
                let doc = AnalysisDocument::new(
                    InputEcho {
                        f: Some(text.clone()),
                        options: Some(InputOptions {
                            format: args.format.as_str().to_owned(),
                            check: None,
                        }),
                        ..Default::default()
                    },
                    &tol,
                )
                .with_fixed_point_report(&report, &tol);
                let pass = doc.verdicts.index_sum_pass.unwrap_or(false);
                all_pass &= pass;
                match args.format {
                    OutputFormat::Json => {
                        let _ = writeln!(stdout, "{}", doc.to_json_compact());
                    }
                    OutputFormat::Csv | OutputFormat::Table => {
                        table_rows.push(vec![
                            text.clone(),
                            fmt_complex_human(report.index_sum),
                            format!("{:.3e}", report.index_sum_deviation),
                            if pass { "pass".to_owned() } else { "FAIL".to_owned() },
                        ]);
                    }
                }
            }
            Err(message) => {
                all_pass = false;
                match args.format {
                    OutputFormat::Json => {
                        let line = serde_json::json!({
                            "schema_version": document::SCHEMA_VERSION,
                            "input": { "f": text },
                            "error": message,
                        });
                        let _ = writeln!(stdout, "{line}");
                    }
                    OutputFormat::Csv | OutputFormat::Table => {
                        table_rows.push(vec![
                            text.clone(),
                            "-".to_owned(),
                            "-".to_owned(),
                            format!("error: {message}"),
                        ]);
                    }
                }
            }
        }
    }

    match args.format {
        OutputFormat::Json => {}
        OutputFormat::Csv => {
            let mut csv = String::from("expression,index_sum,deviation,verdict\n");
            for row in &table_rows {
                let _ = writeln!(csv, "{},{},{},{}", row[0], row[1], row[2], row[3]);
            }
            stdout = csv;
        }
        OutputFormat::Table => {
            let mut table = Table::new(vec!["expression", "index sum", "deviation", "verdict"]);
            for row in table_rows {
                table.push(row);
            }
            stdout = table.render();
        }
    }

    CommandOutput::with_code(
        if all_pass { EXIT_OK } else { EXIT_VERIFICATION_FAILURE },
        stdout.into_bytes(),
    )
}

// ---------------------------------------------------------------- rendering

/// Human-facing complex formatting, rounded to 10 decimal digits.
pub fn fmt_complex_human(z: Complex64) -> String {
    let round = |x: f64| {
        let r = (x * 1e10).round() / 1e10;
        if r == 0.0 {
            0.0
        } else {
            r
        }
    };
    let re = round(z.re);
    let im = round(z.im);
    if im < 0.0 {
        format!("{re}{im}i")
    } else {
        format!("{re}+{im}i")
    }
}

fn fmt_location_human(loc: &document::LocationJson) -> String {
    match loc.finite() {
        Some(z) => fmt_complex_human(z),
        None => "inf".to_owned(),
    }
}

struct Table {
    headers: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn new(headers: Vec<&str>) -> Self {
        Table {
            headers: headers.into_iter().map(str::to_owned).collect(),
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    fn render(&self) -> String {
        let cols = self.headers.len();
        let mut widths: Vec<usize> = self.headers.iter().map(String::len).collect();
        for row in &self.rows {
            for (i, cell) in row.iter().enumerate().take(cols) {
                widths[i] = widths[i].max(cell.len());
            }
        }
        let mut out = String::new();
        let write_row = |cells: &[String], out: &mut String| {
            for (i, cell) in cells.iter().enumerate().take(cols) {
                if i > 0 {
                    out.push_str("  ");
                }
                out.push_str(cell);
                if i + 1 < cols {
                    for _ in cell.len()..widths[i] {
                        out.push(' ');
                    }
                }
            }
            out.push('\n');
        };
        write_row(&self.headers, &mut out);
        let sep: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
        write_row(&sep, &mut out);
        for row in &self.rows {
            write_row(row, &mut out);
        }
        out
    }
}

fn fixed_point_rows(doc: &AnalysisDocument) -> Table {
    let mut table = Table::new(vec![
        "location",
        "multiplier",
        "mult",
        "index",
        "class",
        "flags",
    ]);
    for fp in &doc.fixed_points {
        let mut flags = Vec::new();
        if fp.simple {
            flags.push("simple".to_owned());
        }
        if fp.weakly_repelling {
            flags.push("weakly-repelling".to_owned());
        }
        if fp.multiplier_one {
            flags.push("multiplier-one".to_owned());
        }
        if let Some(k) = fp.rationally_indifferent {
            flags.push(format!("rationally-indifferent(k={k})"));
        }
        table.push(vec![
            fmt_location_human(&fp.location),
            fmt_complex_human(fp.multiplier.into()),
            fp.multiplicity.to_string(),
            fmt_complex_human(fp.index.into()),
            fp.class.clone(),
            flags.join(","),
        ]);
    }
    table
}

fn analyze_table(input: &str, map: &RationalMap, doc: &AnalysisDocument) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "map: {} (degree {}, {})",
        input,
        map.degree(),
        if map.is_polynomial() {
            "polynomial"
        } else {
            "rational"
        }
    );
    out.push('\n');
    out.push_str(&fixed_point_rows(doc).render());
    out.push('\n');
    let sum: Complex64 = doc.verdicts.index_sum.unwrap().into();
    let _ = writeln!(
        out,
        "index sum = {} (|sum - 1| = {:.3e}) -> {}",
        fmt_complex_human(sum),
        doc.verdicts.index_sum_deviation.unwrap(),
        if doc.verdicts.index_sum_pass.unwrap() {
            "pass"
        } else {
            "FAIL"
        }
    );
    for warning in &doc.diagnostics.warnings {
        let _ = writeln!(out, "warning: {warning}");
    }
    out
}

fn verify_table(input: &str, doc: &AnalysisDocument) -> String {
    let mut out = analyze_table(input, &parse_function(input).unwrap(), doc);
    if let Some(sums) = &doc.verdicts.polynomial_sums {
        out.push('\n');
        match (&sums.e3_sum, sums.e4_sum, sums.im_sum) {
            (Some(e3), Some(e4), Some(im)) => {
                let _ = writeln!(
                    out,
                    "finite-index sum = {} (expected 0)",
                    fmt_complex_human((*e3).into())
                );
                let _ = writeln!(out, "real-part sum = {e4:.3e} (expected 0)");
                let _ = writeln!(out, "imag-part sum = {im:.3e} (expected 0)");
                let _ = writeln!(
                    out,
                    "polynomial identities -> {}",
                    if sums.e3_pass == Some(true) {
                        "pass"
                    } else {
                        "FAIL"
                    }
                );
                let _ = writeln!(
                    out,
                    "witnesses: Re>=1 {:?}, Re<=1 {:?}, Im>=0 {:?}",
                    sums.witnesses_re_ge1, sums.witnesses_re_le1, sums.witnesses_im_nonneg
                );
            }
            _ => {
                let _ = writeln!(
                    out,
                    "multiple fixed point at row {}: identity sums skipped",
                    sums.multiple_fixed_point.unwrap_or(0)
                );
            }
        }
    }
    out
}

fn harmonic_table(args: &HarmonicArgs, doc: &AnalysisDocument) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "f = ({}) + conj({})", args.h, args.g);
    out.push('\n');
    let mut table = Table::new(vec![
        "kind",
        "mu",
        "omega",
        "zeta",
        "lambda",
        "theta",
        "m_mu",
        "m_omega",
    ]);
    for p in &doc.h_fixed_points {
        table.push(vec![
            p.kind.clone(),
            fmt_location_human(&p.mu),
            fmt_location_human(&p.omega),
            fmt_location_human(&p.zeta),
            fmt_complex_human(p.lambda.into()),
            fmt_complex_human(p.theta.into()),
            p.multiplicity_mu.to_string(),
            p.multiplicity_omega.to_string(),
        ]);
    }
    out.push_str(&table.render());

    if let Some(conj) = &doc.verdicts.conjecture {
        out.push('\n');
        let _ = writeln!(
            out,
            "hypothesis: {}",
            match conj.hypothesis.as_str() {
                "not_met" => "not met".to_owned(),
                other => format!("met ({other})"),
            }
        );
        if conj.witnesses.is_empty() {
            let _ = writeln!(out, "witnesses with Re(lambda) >= 1 and Re(theta) >= 1: none");
        } else {
            let zetas: Vec<String> = conj
                .witnesses
                .iter()
                .map(|w| fmt_location_human(&w.zeta))
                .collect();
            let _ = writeln!(
                out,
                "witnesses with Re(lambda) >= 1 and Re(theta) >= 1: zeta in {{{}}}",
                zetas.join(", ")
            );
        }
        let _ = writeln!(
            out,
            "conjecture -> {}",
            if conj.pass { "pass" } else { "FAIL" }
        );
    }
    if let Some(remark) = &doc.verdicts.remark {
        out.push('\n');
        let zetas: Vec<String> = remark
            .le1
            .iter()
            .map(|w| fmt_location_human(&w.zeta))
            .collect();
        let _ = writeln!(
            out,
            "points with Re(lambda) <= 1 and Re(theta) <= 1: zeta in {{{}}}",
            zetas.join(", ")
        );
        let _ = writeln!(
            out,
            "component points with Im(multiplier) >= 0: {}",
            remark.im_nonneg.len()
        );
    }
    for warning in &doc.diagnostics.warnings {
        let _ = writeln!(out, "warning: {warning}");
    }
    out
}

fn quadratic_table(report: &harmonic::QuadraticReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "family: z^2 + c + conj(z^2 + c), c = {}", fmt_complex_human(report.c));
    out.push('\n');
    if report.single_point {
        let _ = writeln!(
            out,
            "single h-fixed point: zeta = {} (component fixed point {}, multiplier {}, multiplicity {})",
            fmt_complex_human(report.single_zeta.unwrap()),
            fmt_complex_human(report.fixed_points[0]),
            fmt_complex_human(report.multipliers[0]),
            report.multiplicity
        );
    } else {
        let mut table = Table::new(vec!["fixed point", "multiplier"]);
        for (z, m) in report.fixed_points.iter().zip(&report.multipliers) {
            table.push(vec![fmt_complex_human(*z), fmt_complex_human(*m)]);
        }
        out.push_str(&table.render());
    }
    out.push('\n');
    let _ = writeln!(
        out,
        "all multipliers have real part exactly 1: {}",
        report.re_exactly_one
    );
    let _ = writeln!(
        out,
        "predicate (c real and c >= 1/4): {}",
        report.predicate_real_c_ge_quarter
    );
    if let Some(equiv) = report.equivalence_holds {
        let _ = writeln!(
            out,
            "equivalence for real c -> {}",
            if equiv { "pass" } else { "FAIL" }
        );
    }
    out
}

fn csv_f64(x: f64) -> String {
    format!("{x}")
}

fn csv_location(loc: &document::LocationJson) -> (String, String) {
    match loc.finite() {
        Some(z) => (csv_f64(z.re), csv_f64(z.im)),
        None => ("inf".to_owned(), "inf".to_owned()),
    }
}

fn fixed_points_csv(doc: &AnalysisDocument) -> String {
    let mut out = String::from(
        "location_re,location_im,multiplier_re,multiplier_im,multiplicity,index_re,index_im,class,weakly_repelling,simple,multiplier_one,rationally_indifferent\n",
    );
    for fp in &doc.fixed_points {
        let (lre, lim) = csv_location(&fp.location);
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            lre,
            lim,
            csv_f64(fp.multiplier.re),
            csv_f64(fp.multiplier.im),
            fp.multiplicity,
            csv_f64(fp.index.re),
            csv_f64(fp.index.im),
            fp.class,
            fp.weakly_repelling,
            fp.simple,
            fp.multiplier_one,
            fp.rationally_indifferent
                .map(|k| k.to_string())
                .unwrap_or_default(),
        );
    }
    out
}

fn h_fixed_points_csv(doc: &AnalysisDocument) -> String {
    let mut out = String::from(
        "kind,mu_re,mu_im,omega_re,omega_im,zeta_re,zeta_im,lambda_re,lambda_im,theta_re,theta_im,multiplicity_mu,multiplicity_omega\n",
    );
    for p in &doc.h_fixed_points {
        let (mre, mim) = csv_location(&p.mu);
        let (ore, oim) = csv_location(&p.omega);
        let (zre, zim) = csv_location(&p.zeta);
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            p.kind,
            mre,
            mim,
            ore,
            oim,
            zre,
            zim,
            csv_f64(p.lambda.re),
            csv_f64(p.lambda.im),
            csv_f64(p.theta.re),
            csv_f64(p.theta.im),
            p.multiplicity_mu,
            p.multiplicity_omega,
        );
    }
    out
}

fn quadratic_csv(report: &harmonic::QuadraticReport) -> String {
    let mut out = String::from("fixed_point_re,fixed_point_im,multiplier_re,multiplier_im\n");
    for (z, m) in report.fixed_points.iter().zip(&report.multipliers) {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            csv_f64(z.re),
            csv_f64(z.im),
            csv_f64(m.re),
            csv_f64(m.im)
        );
    }
    out
}

