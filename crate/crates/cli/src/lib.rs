//! Front end: parses a job, dispatches to the engines and renders a
//! [`ResultDocument`]. Exit codes: 0 success, 1 computation error,
//! 2 usage error, 3 verification failure.

pub mod args;
pub mod custom;
pub mod doc;
pub mod verify;

use std::ffi::OsString;
use std::path::Path;
use std::sync::Arc;

use clap::Parser;
use thom_engine::{shipped_table, tp_quotient, working_dims, ThomPolynomial};
use thom_euler::{AlgebraId, EntryValue, EulerTable, Family, Provenance};
use thom_residue::{iterated_residue, kq_catalog, residue_tp};
use thom_schur::rho;

pub use args::{Basis, Cli, Command, Format, Suite};
pub use custom::{ingest_custom_table, ingest_str, Ingested};
pub use doc::{ReportDoc, ResultDocument, RowDoc, TermDoc};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("invalid table: {0}")]
    Invalid(String),
    #[error(transparent)]
    Engine(#[from] thom_engine::EngineError),
    #[error(transparent)]
    Euler(#[from] thom_euler::EulerError),
    #[error(transparent)]
    Phi(#[from] thom_phi::PhiError),
    #[error(transparent)]
    Residue(#[from] thom_residue::ResidueError),
    #[error(transparent)]
    Schur(#[from] thom_schur::SchurError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(&cli) {
        Ok(doc) => {
            let failed = doc.failed_checks();
            let stdout = match cli.format {
                Format::Text => doc.to_text(),
                Format::Json => doc.to_json() + "\n",
            };
            if failed > 0 {
                Outcome { code: 3, stdout, stderr: format!("{failed} check(s) failed\n") }
            } else {
                Outcome { code: 0, stdout, stderr: String::new() }
            }
        }
        Err(e) => Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

pub fn execute(cli: &Cli) -> Result<ResultDocument, CliError> {
    match &cli.command {
        Command::Tp { algebra, n, p, l, basis, table } => tp_job(algebra, *n, *p, *l, *basis, table.as_deref()),
        Command::Series { algebra, index_bound, table } => series_job(algebra, *index_bound, table.as_deref()),
        Command::Euler { algebra, table } => euler_job(algebra, table.as_deref()),
        Command::Residue { algebra, l, n, p, basis } => residue_job(algebra, *l, *n, *p, *basis),
        Command::Verify { suite } => Ok(ResultDocument {
            command: "verify".into(),
            report: verify::run_suite(*suite),
            ..Default::default()
        }),
    }
}

/// Accepts the table syntax (`I_{2,3}`) and the compact one (`I23`, `A2`).
pub fn parse_algebra(s: &str) -> Result<AlgebraId, CliError> {
    let usage = |e: thom_euler::EulerError| CliError::Usage(e.to_string());
    if let Ok(q) = s.parse::<AlgebraId>() {
        return Ok(q);
    }
    let t = s.trim();
    let split = t.find(|c: char| c.is_ascii_digit()).ok_or_else(|| usage(thom_euler::EulerError::BadAlgebra(s.into())))?;
    let (head, digits) = t.split_at(split);
    if !digits.chars().all(|c| c.is_ascii_digit()) {
        return Err(usage(thom_euler::EulerError::BadAlgebra(s.into())));
    }
    let spelled = match head {
        "A" => format!("A_{digits}"),
        "Sigma" | "Σ" if digits.len() == 1 => format!("Sigma^{digits}"),
        "Sigma" | "Σ" if digits == "21" => "Sigma^{2,1}".to_string(),
        "I" | "III" | "Phi" | "Φ" if digits.len() == 2 => {
            let d: Vec<char> = digits.chars().collect();
            format!("{head}_{{{},{}}}", d[0], d[1])
        }
        _ => return Err(usage(thom_euler::EulerError::BadAlgebra(s.into()))),
    };
    spelled.parse().map_err(|_| usage(thom_euler::EulerError::BadAlgebra(s.into())))
}

/// `(n, p, l)` from any consistent subset of the three flags.
fn dims(n: Option<usize>, p: Option<usize>, l: Option<usize>) -> Result<(Option<(usize, usize)>, usize), CliError> {
    match (n, p, l) {
        (Some(n), Some(p), l) => {
            if p < n {
                return Err(CliError::Usage(format!("--p {p} is smaller than --n {n}")));
            }
            if n == 0 {
                return Err(CliError::Usage("--n must be positive".into()));
            }
            if l.is_some_and(|l| l != p - n) {
                return Err(CliError::Usage("--l must equal p - n".into()));
            }
            Ok((Some((n, p)), p - n))
        }
        (None, None, Some(l)) => Ok((None, l)),
        _ => Err(CliError::Usage("give --l, or both --n and --p".into())),
    }
}

struct Data {
    table: Arc<EulerTable>,
    notes: Vec<String>,
}

fn euler_data(table: Option<&Path>) -> Result<Data, CliError> {
    match table {
        None => Ok(Data { table: shipped_table(), notes: vec!["table: shipped".into()] }),
        Some(path) => {
            let ing = ingest_custom_table(path)?;
            let mut notes = vec![format!("table: {}", path.display())];
            notes.extend(ing.notes);
            Ok(Data { table: Arc::new(ing.table), notes })
        }
    }
}

fn require_data(q: &AlgebraId, data: &Data) -> Result<(), CliError> {
    if data.table.has_algebra(q) {
        Ok(())
    } else {
        Err(CliError::Usage(format!("no Euler data for {q}")))
    }
}

fn render(tp: &ThomPolynomial, basis: Basis, np: Option<(usize, usize)>) -> Result<String, CliError> {
    let qf = tp.quotient()?;
    Ok(match basis {
        Basis::Schur => qf.expansion.to_string(),
        Basis::Chern => qf.c_poly().to_string(),
        Basis::Roots => {
            let (n, p) = np.ok_or_else(|| CliError::Usage("--basis roots needs --n and --p".into()))?;
            rho(n, p, &qf.c_poly()).to_string()
        }
    })
}

fn tp_job(
    algebra: &str,
    n: Option<usize>,
    p: Option<usize>,
    l: Option<usize>,
    basis: Basis,
    table: Option<&Path>,
) -> Result<ResultDocument, CliError> {
    let q = parse_algebra(algebra)?;
    let (np, l) = dims(n, p, l)?;
    if basis == Basis::Roots && np.is_none() {
        return Err(CliError::Usage("--basis roots needs --n and --p".into()));
    }
    let (tp, provenance) = if q.family == Family::Phi {
        if table.is_some() {
            return Err(CliError::Usage(format!("{q} takes no Euler table")));
        }
        let (m, r) = (q.params[0] as usize, q.params[1] as usize);
        (thom_phi::phi_tp_schur(m as u32, (m - r) as u32, l as u32)?, vec!["closed Schur formula".to_string()])
    } else {
        let data = euler_data(table)?;
        require_data(&q, &data)?;
        let (wn, wp) = working_dims(&q, l)?;
        let mut notes = data.notes;
        notes.push(format!("localization at (n, p) = ({wn}, {wp})"));
        (tp_quotient(&q, l, data.table)?, notes)
    };
    Ok(ResultDocument {
        command: "tp".into(),
        algebra: Some(q.to_string()),
        n: np.map(|x| x.0),
        p: np.map(|x| x.1),
        l: Some(l as i64),
        codim: Some(tp.codim),
        basis: Some(basis.name().into()),
        terms: doc::schur_terms(tp.expansion()?),
        display: Some(render(&tp, basis, np)?),
        provenance,
        ..Default::default()
    })
}

fn series_job(algebra: &str, index_bound: i64, table: Option<&Path>) -> Result<ResultDocument, CliError> {
    let q = parse_algebra(algebra)?;
    let data = euler_data(table)?;
    require_data(&q, &data)?;
    let s = thom_engine::thom_series(&q, data.table, index_bound)?;
    let terms = s
        .terms
        .iter()
        .map(|(k, c)| TermDoc {
            partition: k.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
            coeff: c.to_string(),
        })
        .collect();
    Ok(ResultDocument {
        command: "series".into(),
        algebra: Some(q.to_string()),
        terms,
        display: Some(s.to_string()),
        provenance: data.notes,
        ..Default::default()
    })
}

fn provenance_name(p: Provenance) -> &'static str {
    match p {
        Provenance::Shipped => "given",
        Provenance::Extrapolated => "extrapolated",
        Provenance::Reciprocity => "reciprocity",
        Provenance::Synthetic => "synthetic",
    }
}

fn euler_job(algebra: &str, table: Option<&Path>) -> Result<ResultDocument, CliError> {
    let q = parse_algebra(algebra)?;
    let data = euler_data(table)?;
    require_data(&q, &data)?;
    let mut rows = Vec::new();
    for (idx, rep) in data.table.representatives(&q).iter().enumerate() {
        let value = match data.table.lookup(&q, &rep.ideal)? {
            EntryValue::Exact(f) => f.to_string(),
            EntryValue::Pointwise => "pointwise".to_string(),
        };
        let provenance = match data.table.entry(&q, idx) {
            Some(e) => provenance_name(e.provenance),
            None => "synthetic",
        };
        rows.push(RowDoc { ideal: rep.ideal.to_string(), value, provenance: provenance.into() });
    }
    Ok(ResultDocument {
        command: "euler".into(),
        algebra: Some(q.to_string()),
        rows,
        provenance: data.notes,
        ..Default::default()
    })
}

fn residue_job(
    algebra: &str,
    l: usize,
    n: Option<usize>,
    p: Option<usize>,
    basis: Basis,
) -> Result<ResultDocument, CliError> {
    let q = parse_algebra(algebra)?;
    let (np, l) = match (n, p) {
        (None, None) => (None, l),
        _ => dims(n, p, Some(l))?,
    };
    if basis == Basis::Roots && np.is_none() {
        return Err(CliError::Usage("--basis roots needs --n and --p".into()));
    }
    let k = kq_catalog().remove(&q).ok_or_else(|| CliError::Usage(format!("no generating function for {q}")))?;
    let display = match basis {
        Basis::Chern => iterated_residue(&k, l)?.to_string(),
        _ => String::new(),
    };
    let tp = residue_tp(&k, l)?;
    let display = if basis == Basis::Chern { display } else { render(&tp, basis, np)? };
    Ok(ResultDocument {
        command: "residue".into(),
        algebra: Some(q.to_string()),
        n: np.map(|x| x.0),
        p: np.map(|x| x.1),
        l: Some(l as i64),
        codim: Some(tp.codim),
        basis: Some(basis.name().into()),
        terms: doc::schur_terms(tp.expansion()?),
        display: Some(display),
        provenance: vec![format!("k = {k}")],
        ..Default::default()
    })
}
