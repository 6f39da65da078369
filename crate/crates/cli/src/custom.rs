//! User-supplied Euler data.

use std::collections::BTreeSet;
use std::path::Path;

use thom_algebra::parse::parse_ratfn_with;
use thom_algebra::Q;
use thom_euler::{load_table, macros, reciprocity_sum_at, sample_points, AlgebraId, EulerTable, Provenance};
use thom_ideals::{parse_ideal, MonomialIdeal};

use crate::CliError;

/// A validated table and what was checked or filled in.
#[derive(Debug, Clone)]
pub struct Ingested {
    pub table: EulerTable,
    pub notes: Vec<String>,
}

pub fn ingest_custom_table(path: &Path) -> Result<Ingested, CliError> {
    let src = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    ingest_str(&src).map_err(|e| match e {
        CliError::Invalid(m) => CliError::Invalid(format!("{}: {m}", path.display())),
        other => other,
    })
}

/// Parses, checks homogeneity row by row, completes missing `M_μ²` rows
/// by reciprocity and checks reciprocity where it is not automatic.
pub fn ingest_str(src: &str) -> Result<Ingested, CliError> {
    let mut table = load_table(src).map_err(|e| CliError::Invalid(e.to_string()))?;
    let env = macros();
    let mut rows = 0;
    for (ln, raw) in src.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        // load_table has accepted every field already
        let f: Vec<&str> = line.split('|').map(str::trim).collect();
        let alg: AlgebraId = f[0].parse().map_err(|e| CliError::Invalid(format!("line {}: {e}", ln + 1)))?;
        let ideal = parse_ideal(f[1]).map_err(|e| CliError::Invalid(format!("line {}: {e}", ln + 1)))?;
        let value = parse_ratfn_with(f[2], &env).map_err(|e| CliError::Invalid(format!("line {}: {e}", ln + 1)))?;
        if value.is_infinite() {
            continue;
        }
        let gamma = alg.gamma().ok_or_else(|| CliError::Invalid(format!("line {}: no degree data for {alg}", ln + 1)))?;
        let want = (ideal.n() * alg.mu()) as i64 - gamma as i64;
        match value.degree() {
            Some(d) if d == want => rows += 1,
            got => {
                return Err(CliError::Invalid(format!(
                    "line {}: e({alg}, {ideal}) has degree {}, expected {want}",
                    ln + 1,
                    got.map_or("undefined".to_string(), |d| d.to_string())
                )))
            }
        }
    }
    let mut notes = vec![format!("homogeneity: {rows} finite rows checked")];
    let before: BTreeSet<AlgebraId> = completed(&table);
    table.complete().map_err(|e| CliError::Invalid(e.to_string()))?;
    for alg in completed(&table).difference(&before) {
        notes.push(format!("reciprocity: e({alg}, M_{}^2) completed", alg.mu()));
    }
    let algs: Vec<AlgebraId> = table.algebras().cloned().collect();
    for alg in &algs {
        if alg.mu() < 2 || completed(&table).contains(alg) {
            continue;
        }
        if !has_max_square(&table, alg) {
            notes.push(format!("{alg}: incomplete, some fixed points have no row"));
            continue;
        }
        // M² given explicitly; μ ≤ 3 was checked by complete()
        if alg.mu() >= 4 {
            for pt in sample_points(alg.mu(), 6, 5) {
                let v = reciprocity_sum_at(&table, alg, &pt).map_err(|e| CliError::Invalid(e.to_string()))?;
                if v.is_some_and(|v| v != Q::from_integer(0.into())) {
                    return Err(CliError::Invalid(format!("{alg}: reciprocity sum is nonzero")));
                }
            }
        }
        notes.push(format!("reciprocity: {alg} checked"));
    }
    Ok(Ingested { table, notes })
}

fn sq_index(table: &EulerTable, alg: &AlgebraId) -> usize {
    let sq = MonomialIdeal::max_square(alg.mu());
    table.representatives(alg).iter().position(|r| r.ideal == sq).expect("M² is a representative")
}

fn has_max_square(table: &EulerTable, alg: &AlgebraId) -> bool {
    alg.mu() < 2 || table.entry(alg, sq_index(table, alg)).is_some()
}

fn completed(table: &EulerTable) -> BTreeSet<AlgebraId> {
    table
        .algebras()
        .filter(|a| a.mu() >= 2)
        .filter(|a| table.entry(a, sq_index(table, a)).is_some_and(|e| e.provenance == Provenance::Reciprocity))
        .cloned()
        .collect()
}
