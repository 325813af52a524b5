//! Command implementations behind the `qdrg` binary.
//!
//! Exit codes: 0 affirmative, 1 negative but valid, 2 input error,
//! 3 internal equivalence violation.

mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

pub use report::{
    exit_code_for, CheckRow, ClassicalRow, ClassifyReport, ClassifyRow, CliqueSummary, Exact,
    GraphEcho, InputEcho, KreinSummary, NearPolygonOrder, Report, SpectrumRow, TheoremRow,
    VerdictRow, VerifyReport,
};

use crate::constructions::{Construction, OUT_OF_SCOPE_GH28};
use crate::error::Error;
use crate::exact_math::{parse_rational, Rational};
use crate::graphs::{intersection_numbers, theorem_conditions_graph, Graph};
use crate::params::{spectrum, IntersectionArray};
use crate::theorem::classify;

pub const EXIT_AFFIRMATIVE: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "qdrg", version, about = "Exact analysis of Q-polynomial distance-regular graphs")]
pub struct Cli {
    /// Emit a single JSON document instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parameter-level report for an intersection array.
    Analyze {
        /// b_0,...,b_{D-1}
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        b: Vec<i64>,
        /// c_1,...,c_D
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        c: Vec<i64>,
    },
    /// Candidate arrays with b = -2 and a_1 = 1 at one diameter.
    Classify {
        #[arg(long)]
        diameter: usize,
    },
    /// Build a graph and write it in the edge-list format.
    Construct {
        name: String,
        /// Output file; the graph goes to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify a graph file and evaluate all six conditions.
    Verify {
        file: PathBuf,
        /// `min` or a rational `p/q`.
        #[arg(long, allow_hyphen_values = true)]
        eigenvalue: String,
    },
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_AFFIRMATIVE };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    let json = cli.json;
    let result = match cli.command {
        Command::Analyze { b, c } => cmd_analyze(&b, &c, json, out),
        Command::Classify { diameter } => cmd_classify(diameter, json, out),
        Command::Construct { name, out: path } => cmd_construct(&name, path, json, out, err),
        Command::Verify { file, eigenvalue } => cmd_verify(&file, &eigenvalue, json, out),
    };
    match result {
        Ok(code) => code,
        Err(CliError { code, message }) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

#[derive(Debug)]
struct CliError {
    code: i32,
    message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        Self { code: exit_code_for(&e), message: e.to_string() }
    }
}

fn input_error(message: impl Into<String>) -> CliError {
    CliError { code: EXIT_INPUT, message: message.into() }
}

fn emit<T: serde::Serialize>(out: &mut dyn Write, json: bool, value: &T, plain: String) -> Result<(), CliError> {
    let text = if json {
        serde_json::to_string_pretty(value).map_err(|e| CliError { code: EXIT_INTERNAL, message: e.to_string() })? + "\n"
    } else {
        plain
    };
    out.write_all(text.as_bytes()).map_err(|e| CliError { code: EXIT_INPUT, message: e.to_string() })
}

fn cmd_analyze(b: &[i64], c: &[i64], json: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let arr = IntersectionArray::validate(b, c)?;
    let report = Report::analyze(&arr)?;
    emit(out, json, &report, report.render())?;
    if let Some(row) = report.inconsistent_rows().first() {
        return Err(CliError {
            code: EXIT_INTERNAL,
            message: format!("conditions disagree at theta = {}", row.theta.0),
        });
    }
    Ok(EXIT_AFFIRMATIVE)
}

fn cmd_classify(diameter: usize, json: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let entries = classify(diameter)?;
    let report = ClassifyReport::new(diameter, &entries);
    emit(out, json, &report, report.render())?;
    Ok(EXIT_AFFIRMATIVE)
}

fn cmd_construct(
    name: &str,
    path: Option<PathBuf>,
    json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    if name == OUT_OF_SCOPE_GH28 {
        return Err(input_error(format!(
            "{name}: construction out of scope; parameter-verified only (see `analyze --b 18,16,16 --c 1,1,9`)"
        )));
    }
    let which: Construction = name.parse().map_err(|e: String| {
        let names: Vec<&str> = Construction::ALL.iter().map(|c| c.name()).collect();
        input_error(format!("{e}; expected one of {}", names.join(", ")))
    })?;
    let g = which.build()?;
    let arr = intersection_numbers(&g)?;
    if arr != which.expected_array() {
        return Err(CliError {
            code: EXIT_INTERNAL,
            message: format!("{name} produced {arr}, expected {}", which.expected_array()),
        });
    }
    let summary = serde_json::json!({
        "name": name,
        "n": g.n(),
        "edges": g.edge_count(),
        "array": arr.to_string(),
        "file": path.as_ref().map(|p| p.display().to_string()),
    });
    let plain = format!("{name}: n={} edges={} verified array {arr}\n", g.n(), g.edge_count());
    match path {
        Some(p) => {
            std::fs::write(&p, g.to_text()).map_err(|e| input_error(format!("{}: {e}", p.display())))?;
            emit(out, json, &summary, plain)?;
        }
        None => {
            out.write_all(g.to_text().as_bytes()).map_err(|e| input_error(e.to_string()))?;
            let _ = err.write_all(plain.as_bytes());
        }
    }
    Ok(EXIT_AFFIRMATIVE)
}

fn resolve_theta(arr: &IntersectionArray, spec: &str) -> Result<Rational, CliError> {
    if spec == "min" {
        let sd = spectrum(arr)?;
        return sd
            .min_eigenvalue()
            .exact()
            .cloned()
            .ok_or_else(|| input_error(format!("minimal eigenvalue {} is irrational", sd.min_eigenvalue())));
    }
    parse_rational(spec).ok_or_else(|| input_error(format!("bad eigenvalue {spec:?}; expected `min` or p/q")))
}

fn cmd_verify(file: &std::path::Path, eigenvalue: &str, json: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let text = std::fs::read_to_string(file).map_err(|e| input_error(format!("{}: {e}", file.display())))?;
    let g = Graph::parse(&text)?;
    let arr = intersection_numbers(&g)?;
    let theta = resolve_theta(&arr, eigenvalue)?;
    let report = theorem_conditions_graph(&g, &theta)?;
    let vr = VerifyReport::new(&file.display().to_string(), &g, &report);
    emit(out, json, &vr, vr.render())?;
    Ok(match vr.unanimous {
        Some(true) => EXIT_AFFIRMATIVE,
        Some(false) => EXIT_NEGATIVE,
        None => EXIT_INTERNAL,
    })
}
