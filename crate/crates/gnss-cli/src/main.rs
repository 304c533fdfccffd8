//! Command-line front end for the gnss-core table algebra.
//!
//! Exit codes: 0 success, 1 domain or validation failure, 2 parse or I/O
//! failure, 3 usage error. Data goes to stdout (or `--out`); messages go to
//! stderr.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gnss_core::decision::{comparison_matrix, decide, ComparisonMatrix, Ranking, ScoreVector};
use gnss_core::tabio::diff::{diff_matrices, diff_scores, diff_tables, DiffReport};
use gnss_core::tabio::fixtures::{self, Fixture, KNOWN_ERRATA};
use gnss_core::tabio::{self, TableDocument, TableFormat};
use gnss_core::{ConstraintMode, GnSoftSet, GnssError, ParamKey, ParseError};

#[derive(Parser)]
#[command(name = "gnss", version, about = "Exact-arithmetic soft-set tables: validate, combine, rank")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// Require min(T, I, F) <= 0.5 in every cell.
    Min,
    /// Require T + I + F <= 0.5 in every cell.
    SumLiteral,
    /// Accept any cell.
    None,
}

impl From<Mode> for ConstraintMode {
    fn from(mode: Mode) -> ConstraintMode {
        match mode {
            Mode::Min => ConstraintMode::GnsMin,
            Mode::SumLiteral => ConstraintMode::GnsSumLiteral,
            Mode::None => ConstraintMode::NeutrosophicOnly,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

impl From<Format> for TableFormat {
    fn from(format: Format) -> TableFormat {
        match format {
            Format::Csv => TableFormat::Csv,
            Format::Json => TableFormat::Structured,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum OpKind {
    Union,
    Intersect,
    And,
    Or,
    Complement,
    Not,
}

impl OpKind {
    fn arity(self) -> usize {
        match self {
            OpKind::Complement | OpKind::Not => 1,
            _ => 2,
        }
    }

    fn name(self) -> &'static str {
        match self {
            OpKind::Union => "union",
            OpKind::Intersect => "intersect",
            OpKind::And => "and",
            OpKind::Or => "or",
            OpKind::Complement => "complement",
            OpKind::Not => "not",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check every cell of a table against a constraint mode.
    Validate {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Min)]
        mode: Mode,
    },
    /// Apply a set operation to one table (complement, not) or two.
    Op {
        #[arg(value_enum)]
        kind: OpKind,
        /// Input tables; `.json` files use the structured format.
        #[arg(num_args = 1..=2, required = true)]
        inputs: Vec<PathBuf>,
        /// Output format; defaults to the first input's format.
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Write here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Mode::Min)]
        mode: Mode,
    },
    /// Score and rank a table's objects by pairwise comparison.
    Rank {
        file: PathBuf,
        /// Comma-separated ordered parameter keys; defaults to all of them.
        #[arg(long, value_delimiter = ',')]
        params: Option<Vec<String>>,
        /// Also print the comparison matrix.
        #[arg(long)]
        matrix: bool,
        #[arg(long, value_enum, default_value_t = Mode::Min)]
        mode: Mode,
        /// Write here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the comparison matrix for a table.
    Matrix {
        file: PathBuf,
        /// Comma-separated ordered parameter keys; defaults to all of them.
        #[arg(long, value_delimiter = ',')]
        params: Option<Vec<String>>,
        #[arg(long, value_enum, default_value_t = Mode::Min)]
        mode: Mode,
        /// Write here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a bundled table: table1..table11, ex3_11, ex3_13, ex3_20_F,
    /// ex3_20_G, ex3_20_K, or scores.
    Fixture {
        name: String,
        /// Output format for soft-set tables.
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Write here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recompute every derivable bundled table and diff it against the
    /// printed one; succeeds only if the differences are the known errata.
    VerifyPaper,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn domain(err: GnssError) -> Failure {
        Failure { code: 1, message: err.to_string() }
    }

    fn parse(err: ParseError) -> Failure {
        Failure { code: 2, message: err.to_string() }
    }

    fn io(path: &Path, err: std::io::Error) -> Failure {
        Failure { code: 2, message: format!("{}: {err}", path.display()) }
    }

    fn usage(message: String) -> Failure {
        Failure { code: 3, message }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() { ExitCode::from(3) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Validate { file, mode } => cmd_validate(&file, mode),
        Command::Op { kind, inputs, format, out, mode } => {
            cmd_op(kind, &inputs, format, out.as_deref(), mode)
        }
        Command::Rank { file, params, matrix, mode, out } => {
            cmd_rank(&file, params.as_deref(), matrix, mode, out.as_deref())
        }
        Command::Matrix { file, params, mode, out } => {
            cmd_matrix(&file, params.as_deref(), mode, out.as_deref())
        }
        Command::Fixture { name, format, out } => cmd_fixture(&name, format, out.as_deref()),
        Command::VerifyPaper => cmd_verify_paper(),
    }
}

fn load(path: &Path, mode: ConstraintMode) -> Result<(GnSoftSet, TableFormat), Failure> {
    let format = TableFormat::detect(&path.to_string_lossy());
    let text = fs::read_to_string(path).map_err(|err| Failure::io(path, err))?;
    let set = tabio::parse_str(&text, format, mode).map_err(Failure::parse)?;
    Ok((set, format))
}

fn emit(text: &str, out: Option<&Path>) -> Result<ExitCode, Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|err| Failure::io(path, err))?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_param_list(raw: &[String]) -> Result<Vec<ParamKey>, Failure> {
    raw.iter()
        .map(|item| {
            item.trim()
                .parse::<ParamKey>()
                .map_err(|err| Failure::usage(format!("--params: {err}")))
        })
        .collect()
}

fn chosen_keys(set: &GnSoftSet, params: Option<&[String]>) -> Result<Vec<ParamKey>, Failure> {
    match params {
        Some(raw) => parse_param_list(raw),
        None => Ok(set.params().to_vec()),
    }
}

fn cmd_validate(file: &Path, mode: Mode) -> Result<ExitCode, Failure> {
    let (set, _) = load(file, ConstraintMode::NeutrosophicOnly)?;
    let mode = ConstraintMode::from(mode);
    let mut report = String::new();
    let mut count = 0usize;
    for (i, id) in set.universe().iter().enumerate() {
        for (j, key) in set.params().iter().enumerate() {
            let cell = set.tables()[j].values()[i];
            if let Some(violation) = cell.violation(mode) {
                let _ = writeln!(report, "row {}, col {} ({id}, {key}): {violation}", i + 2, j + 2);
                count += 1;
            }
        }
    }
    if count == 0 {
        println!("valid: {} cells", set.universe().len() * set.params().len());
        Ok(ExitCode::SUCCESS)
    } else {
        let _ = writeln!(report, "{count} violations");
        print!("{report}");
        Ok(ExitCode::from(1))
    }
}

fn cmd_op(
    kind: OpKind,
    inputs: &[PathBuf],
    format: Option<Format>,
    out: Option<&Path>,
    mode: Mode,
) -> Result<ExitCode, Failure> {
    if inputs.len() != kind.arity() {
        return Err(Failure::usage(format!(
            "op {} takes exactly {} input(s), got {}",
            kind.name(),
            kind.arity(),
            inputs.len()
        )));
    }
    let mode = ConstraintMode::from(mode);
    let (first, first_format) = load(&inputs[0], mode)?;
    let result = match kind {
        OpKind::Complement => first.complement(),
        OpKind::Not => first.not_params(),
        _ => {
            let (second, _) = load(&inputs[1], mode)?;
            match kind {
                OpKind::Union => first.union(&second),
                OpKind::Intersect => first.intersection(&second),
                OpKind::And => first.and(&second),
                OpKind::Or => first.or(&second),
                _ => unreachable!(),
            }
            .map_err(Failure::domain)?
        }
    };
    let format = format.map(TableFormat::from).unwrap_or(first_format);
    emit(&tabio::serialize(&result, format), out)
}

fn matrix_csv(matrix: &ComparisonMatrix) -> String {
    let mut text = String::from("U");
    for key in matrix.params() {
        let _ = write!(text, ",{key}");
    }
    text.push('\n');
    for (id, row) in matrix.universe().iter().zip(matrix.rows()) {
        let _ = write!(text, "{id}");
        for cell in row {
            let _ = write!(text, ",{cell}");
        }
        text.push('\n');
    }
    text
}

fn scores_csv(scores: &ScoreVector) -> String {
    let mut text = String::from("object,score\n");
    for (id, score) in scores.iter() {
        let _ = writeln!(text, "{id},{score}");
    }
    text
}

fn ranking_lines(ranking: &Ranking) -> String {
    let mut order = String::new();
    for (pos, (id, score)) in ranking.entries().iter().enumerate() {
        if pos > 0 {
            let previous = ranking.entries()[pos - 1].1;
            order.push_str(if *score == previous { " = " } else { " > " });
        }
        let _ = write!(order, "{id}");
    }
    let winners: Vec<&str> = ranking.winners().iter().map(|id| id.as_str()).collect();
    let mut text = format!("ranking: {order}\nwinners: {}\n", winners.join(", "));
    if let Some(choice) = ranking.choice() {
        let _ = writeln!(text, "choice: {choice}");
    }
    text
}

fn cmd_rank(
    file: &Path,
    params: Option<&[String]>,
    matrix: bool,
    mode: Mode,
    out: Option<&Path>,
) -> Result<ExitCode, Failure> {
    let (set, _) = load(file, ConstraintMode::from(mode))?;
    let keys = chosen_keys(&set, params)?;
    let decision = decide(&set, &keys).map_err(Failure::domain)?;
    let mut text = String::new();
    if matrix {
        text.push_str(&matrix_csv(&decision.matrix));
        text.push('\n');
    }
    text.push_str(&scores_csv(&decision.scores));
    text.push('\n');
    text.push_str(&ranking_lines(&decision.ranking));
    emit(&text, out)
}

fn cmd_matrix(
    file: &Path,
    params: Option<&[String]>,
    mode: Mode,
    out: Option<&Path>,
) -> Result<ExitCode, Failure> {
    let (set, _) = load(file, ConstraintMode::from(mode))?;
    let keys = chosen_keys(&set, params)?;
    let narrowed = set.restrict(&keys).map_err(Failure::domain)?;
    let matrix = comparison_matrix(&narrowed).map_err(Failure::domain)?;
    emit(&matrix_csv(&matrix), out)
}

fn cmd_fixture(name: &str, format: Option<Format>, out: Option<&Path>) -> Result<ExitCode, Failure> {
    let text = match fixtures::fixture(name).map_err(Failure::domain)? {
        Fixture::Table(TableDocument { set, .. }) => {
            let format = format.map(TableFormat::from).unwrap_or(TableFormat::Csv);
            tabio::serialize(&set, format)
        }
        Fixture::Matrix(matrix) => {
            reject_json(format, name)?;
            matrix_csv(&matrix)
        }
        Fixture::Scores(scores) => {
            reject_json(format, name)?;
            scores_csv(&scores)
        }
    };
    emit(&text, out)
}

fn reject_json(format: Option<Format>, name: &str) -> Result<(), Failure> {
    if format == Some(Format::Json) {
        return Err(Failure::domain(GnssError::ShapeMismatch {
            detail: format!("fixture {name} is not a soft-set table; only csv output is available"),
        }));
    }
    Ok(())
}

/// One verification step: which bundled table was diffed, where the
/// differences sit, and the printable summary line.
struct Check {
    fixture: &'static str,
    positions: Vec<(String, Option<String>)>,
    line: String,
}

fn describe<V: std::fmt::Display>(
    label: &'static str,
    fixture: &'static str,
    report: &DiffReport<V>,
) -> Check {
    let mut positions = Vec::new();
    let mut line = format!("{label}: {} diffs", report.entries.len());
    for (pos, entry) in report.entries.iter().enumerate() {
        line.push_str(if pos == 0 { " at " } else { ", " });
        match &entry.param {
            Some(param) => {
                let _ = write!(line, "({}, {param})", entry.object);
                positions.push((entry.object.to_string(), Some(param.to_string())));
            }
            None => {
                let _ = write!(line, "{}", entry.object);
                positions.push((entry.object.to_string(), None));
            }
        }
    }
    Check { fixture, positions, line }
}

fn table_check(
    label: &'static str,
    fixture_name: &'static str,
    actual: &GnSoftSet,
) -> Result<Check, Failure> {
    let expected = fixtures::table(fixture_name).map_err(Failure::domain)?;
    let report = diff_tables(&expected, actual).map_err(Failure::domain)?;
    Ok(describe(label, fixture_name, &report))
}

fn cmd_verify_paper() -> Result<ExitCode, Failure> {
    let table = |name: &str| fixtures::table(name).map_err(Failure::domain);
    let (table1, table4, table5) =
        (table("table1")?, table("table4")?, table("table5")?);
    let joined = table4.union(&table5).map_err(Failure::domain)?;
    let met = table4.intersection(&table5).map_err(Failure::domain)?;
    let and_grid = table4.and(&table5).map_err(Failure::domain)?;
    let or_grid = table4.or(&table5).map_err(Failure::domain)?;
    let complemented = table1.complement();
    let derived_matrix = comparison_matrix(&table("table10")?).map_err(Failure::domain)?;
    let derived_scores = derived_matrix.scores();

    let matrix_report =
        diff_matrices(&fixtures::printed_matrix(), &derived_matrix).map_err(Failure::domain)?;
    let scores_report =
        diff_scores(&fixtures::printed_scores(), &derived_scores).map_err(Failure::domain)?;

    let checks = vec![
        table_check("Table 6", "table6", &joined)?,
        table_check("Table 7", "table7", &met)?,
        table_check("Table 8", "table8", &and_grid)?,
        table_check("Table 9", "table9", &or_grid)?,
        table_check("Example 3.11", "ex3_11", &complemented)?,
        describe("Table 11", "table11", &matrix_report),
        describe("Scores", "scores", &scores_report),
    ];

    let mut found: Vec<(&'static str, String, Option<String>)> = Vec::new();
    for check in &checks {
        println!("{}", check.line);
        for (object, param) in &check.positions {
            found.push((check.fixture, object.clone(), param.clone()));
        }
    }

    let expected: Vec<(&'static str, String, Option<String>)> = KNOWN_ERRATA
        .iter()
        .map(|cell| (cell.fixture, cell.object.to_string(), cell.param.map(str::to_string)))
        .collect();
    if found == expected {
        println!("verify-paper: OK, all differences are the known published errata");
        Ok(ExitCode::SUCCESS)
    } else {
        Err(Failure {
            code: 1,
            message: "verify-paper: differences do not match the known published errata".into(),
        })
    }
}
