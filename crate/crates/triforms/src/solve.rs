//! Exact rational linear algebra: express a target q-series in a catalogued
//! basis, verified through the Sturm bound, and render the resulting
//! coefficient vector as a divisor-sum formula.

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::basis::{
    basis_for, sturm_bound, table_columns, tag_char, Basis, BasisElement, BasisError, BasisSource,
    SpaceId,
};
use crate::descriptor::parse_form;
use crate::eisenstein::EisensteinSpec;
use crate::qseries::{Series24, SeriesError};
use crate::{int, rat, Rat};

/// Coordinates of a form in a catalogued basis.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientVector {
    pub space: SpaceId,
    pub values: Vec<Rat>,
    /// Every integer exponent up to this bound was verified.
    pub verified_through: i64,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SolveError {
    #[error(transparent)]
    UnknownSpace(#[from] BasisError),
    #[error("target has exponents off the integer grid (e24 = {0})")]
    NonIntegerGrid(i64),
    #[error(transparent)]
    Precision(#[from] SeriesError),
    #[error("target is not in the span: residual {residual} at q^{exponent}")]
    InconsistentSystem { exponent: i64, residual: Rat },
    #[error("basis matrix is rank-deficient over the Sturm range")]
    UnderdeterminedSystem,
}

/// Rank of a list of column vectors (all the same length) over Q.
pub fn column_rank(cols: &[Vec<Rat>]) -> usize {
    if cols.is_empty() {
        return 0;
    }
    let rows = cols[0].len();
    let mut m: Vec<Vec<Rat>> = (0..rows)
        .map(|i| cols.iter().map(|c| c[i].clone()).collect())
        .collect();
    let mut rank = 0;
    for col in 0..cols.len() {
        let pivot = (rank..rows).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot else { continue };
        m.swap(rank, p);
        let inv = Rat::one() / m[rank][col].clone();
        for c in col..cols.len() {
            m[rank][c] = &m[rank][c] * &inv;
        }
        for r in 0..rows {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..cols.len() {
                    m[r][c] = &m[r][c] - &f * &m[rank][c];
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Row-reduce the augmented system [cols | rhs] with pivoting over every
/// supplied row, so unfortunate leading zeros never fail the solve. The
/// residual check (which identifies the inconsistent exponent) is left to
/// the caller.
fn eliminate(cols: &[Vec<Rat>], rhs: &[Rat]) -> Result<Vec<Rat>, SolveError> {
    let rows = rhs.len();
    let dim = cols.len();
    let mut m: Vec<Vec<Rat>> = (0..rows)
        .map(|i| {
            let mut row: Vec<Rat> = cols.iter().map(|c| c[i].clone()).collect();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    let mut pivot_row_of_col: Vec<Option<usize>> = vec![None; dim];
    let mut rank = 0usize;
    for col in 0..dim {
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = Rat::one() / m[rank][col].clone();
        for c in col..=dim {
            m[rank][c] = &m[rank][c] * &inv;
        }
        for r in 0..rows {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=dim {
                    m[r][c] = &m[r][c] - &f * &m[rank][c];
                }
            }
        }
        pivot_row_of_col[col] = Some(rank);
        rank += 1;
    }
    if pivot_row_of_col.iter().any(|p| p.is_none()) {
        return Err(SolveError::UnderdeterminedSystem);
    }
    let mut values = vec![Rat::zero(); dim];
    for (col, p) in pivot_row_of_col.iter().enumerate() {
        values[col] = m[p.unwrap()][dim].clone();
    }
    Ok(values)
}

/// Solve basis coordinates for `target`, then verify on every integer
/// exponent through the Sturm bound.
pub fn express_in_basis(target: &Series24, space: &SpaceId) -> Result<CoefficientVector, SolveError> {
    let b = basis_for(space)?;
    for (e24, _) in target.terms() {
        if e24 % 24 != 0 {
            return Err(SolveError::NonIntegerGrid(e24));
        }
    }
    let bound = sturm_bound(space.weight, space.level);
    let prec24 = 24 * (bound + 1);
    let cols: Vec<Vec<Rat>> = b
        .elements
        .iter()
        .map(|el| {
            let s = el.expand(prec24);
            (0..=bound).map(|n| s.coeff_q(n).unwrap()).collect()
        })
        .collect();
    let mut rhs: Vec<Rat> = Vec::with_capacity(bound as usize + 1);
    for n in 0..=bound {
        rhs.push(target.coeff_q(n)?);
    }
    let values = eliminate(&cols, &rhs)?;
    // Residual check on every row of the Sturm range.
    verify_combination(&b, &values, target, bound)?;
    Ok(CoefficientVector {
        space: space.clone(),
        values,
        verified_through: bound,
    })
}

/// Solve coordinates of `target` over the printed-table column set of its
/// space: the catalogued basis, except that weight-2 principal-character
/// spaces use the E_2(d tau) dilation columns the published tables are
/// written in. Returns the column labels alongside the values and the
/// exponent bound the combination was verified through.
pub fn express_in_table_columns(
    target: &Series24,
    space: &SpaceId,
) -> Result<(Vec<String>, Vec<Rat>, i64), SolveError> {
    let elements = table_columns(space)?;
    for (e24, _) in target.terms() {
        if e24 % 24 != 0 {
            return Err(SolveError::NonIntegerGrid(e24));
        }
    }
    // The quasi-modular E_2 columns are not covered by the Sturm bound, so
    // compare on enough extra exponents to pin down every coordinate.
    let bound = sturm_bound(space.weight, space.level) + elements.len() as i64;
    let prec24 = 24 * (bound + 1);
    let cols: Vec<Vec<Rat>> = elements
        .iter()
        .map(|el| {
            let s = el.expand(prec24);
            (0..=bound).map(|n| s.coeff_q(n).unwrap()).collect()
        })
        .collect();
    let mut rhs: Vec<Rat> = Vec::with_capacity(bound as usize + 1);
    for n in 0..=bound {
        rhs.push(target.coeff_q(n)?);
    }
    let values = eliminate(&cols, &rhs)?;
    for (n, want) in rhs.iter().enumerate() {
        let mut got = Rat::zero();
        for (v, c) in values.iter().zip(&cols) {
            got += v * &c[n];
        }
        if &got != want {
            return Err(SolveError::InconsistentSystem {
                exponent: n as i64,
                residual: want - &got,
            });
        }
    }
    let labels = elements.iter().map(|el| el.label.clone()).collect();
    Ok((labels, values, bound))
}

/// Check sum t_i f_i = target on integer exponents 0..=bound.
pub fn verify_combination(
    basis: &Basis,
    values: &[Rat],
    target: &Series24,
    bound: i64,
) -> Result<(), SolveError> {
    let prec24 = 24 * (bound + 1);
    let mut acc = Series24::zero(prec24);
    for (t, el) in values.iter().zip(&basis.elements) {
        if !t.is_zero() {
            acc = acc.add(&el.expand(prec24).scale(t));
        }
    }
    for n in 0..=bound {
        let lhs = acc.coeff_q(n)?;
        let rhs = target.coeff_q(n)?;
        if lhs != rhs {
            return Err(SolveError::InconsistentSystem {
                exponent: n,
                residual: rhs - lhs,
            });
        }
    }
    Ok(())
}

fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn push_term(out: &mut Vec<String>, coeff: &Rat, body: &str) {
    if coeff.is_zero() {
        return;
    }
    if coeff == &int(1) {
        out.push(body.to_string());
    } else if coeff == &int(-1) {
        out.push(format!("-{body}"));
    } else {
        out.push(format!("{}*{}", fmt_rat(coeff), body));
    }
}

fn arg_str(d: i64) -> String {
    if d == 1 {
        "n".to_string()
    } else {
        format!("n/{d}")
    }
}

fn char_name(c: &crate::arith::KroneckerChar) -> String {
    if c.modulus <= 1 {
        "1".into()
    } else {
        format!("chi{}", c.top)
    }
}

/// Peel dilations off an Eisenstein spec.
fn peel(spec: &EisensteinSpec) -> (&EisensteinSpec, i64) {
    match spec {
        EisensteinSpec::Dilated(inner, d) => {
            let (s, d2) = peel(inner);
            (s, d * d2)
        }
        other => (other, 1),
    }
}

/// Render the n >= 1 part of the combination as divisor sums and named
/// cusp-form coefficients.
pub fn formula_as_divisor_sums(vec: &CoefficientVector) -> String {
    let b = basis_for(&vec.space).expect("vector carries a catalogued space");
    formula_for_columns(&b.elements, &vec.values)
}

/// Same rendering over an explicit column list.
pub fn formula_for_columns(elements: &[BasisElement], values: &[Rat]) -> String {
    let mut terms: Vec<String> = Vec::new();
    for (t, el) in values.iter().zip(elements) {
        if t.is_zero() {
            continue;
        }
        match &el.source {
            BasisSource::Eisenstein(spec) => match peel(spec) {
                (EisensteinSpec::Phi(1, bb), d) => {
                    // phi_{1,b} has q^n coefficient (24 sigma(n) - 24 b sigma(n/b)) / (b - 1).
                    let c1 = t * rat(24, bb - 1);
                    let c2 = t * rat(-24 * bb, bb - 1);
                    push_term(&mut terms, &c1, &format!("sigma({})", arg_str(d)));
                    push_term(&mut terms, &c2, &format!("sigma({})", arg_str(d * bb)));
                }
                (EisensteinSpec::Classical(k), d) => {
                    let factor = -int(2 * *k as i64) / crate::arith::bernoulli(*k);
                    push_term(
                        &mut terms,
                        &(t * factor),
                        &format!("sigma_{}({})", k - 1, arg_str(d)),
                    );
                }
                (EisensteinSpec::QuasiE2, d) => {
                    // E_2(d tau) contributes -24 sigma(n/d) for n >= 1.
                    push_term(&mut terms, &(t * int(-24)), &format!("sigma({})", arg_str(d)));
                }
                (EisensteinSpec::Twisted { k, chi, psi }, d) => {
                    push_term(
                        &mut terms,
                        t,
                        &format!(
                            "sigma_{};{},{}({})",
                            k - 1,
                            char_name(chi),
                            char_name(psi),
                            arg_str(d)
                        ),
                    );
                }
                _ => push_term(&mut terms, t, &format!("[{}](n)", el.label)),
            },
            BasisSource::Eta(_) => {
                let (body, d) = match el.label.rsplit_once("_at_") {
                    Some((base, d)) => (base.to_string(), d.parse::<i64>().unwrap_or(1)),
                    None => (el.label.clone(), 1),
                };
                let named = match body.as_str() {
                    "f_4_6" => "a_{4,6}".to_string(),
                    "f_4_12" => "a_{4,12}".to_string(),
                    _ => {
                        // Delta_k_N_chi[_j] -> tau_{k,N,chi[;j]}.
                        let parts: Vec<&str> = body.trim_start_matches("Delta_").split('_').collect();
                        match parts.as_slice() {
                            [k, n, chi] => format!("tau_{{{k},{n},{chi}}}"),
                            [k, n, chi, j] => format!("tau_{{{k},{n},{chi};{j}}}"),
                            _ => format!("[{body}]"),
                        }
                    }
                };
                push_term(&mut terms, t, &format!("{named}({})", arg_str(d)));
            }
        }
    }
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, term) in terms.iter().enumerate() {
        if i == 0 {
            out.push_str(term);
        } else if let Some(rest) = term.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(term);
        }
    }
    out
}

/// One row of a printed coefficient table as stored in the JSON fixtures:
/// the form descriptor, the space tag, the shift p in "n - p" as printed,
/// and the coefficient vector as exact rational strings.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FixtureRow {
    pub form: String,
    pub space: FixtureSpace,
    pub shift: i64,
    pub t: Vec<String>,
    /// Printed column order relative to the catalogued basis order, when
    /// the source table deviates from it: printed column i holds the
    /// coordinate of basis element perm[i].
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub perm: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FixtureSpace {
    pub weight: u32,
    pub level: i64,
    pub character: String,
}

/// Tables shipped as fixtures: the 21-form table plus the appendix tables.
pub const TABLE_IDS: [u32; 13] = [1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14];

#[derive(Debug, thiserror::Error)]
pub enum FixtureError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("cannot parse {path}: {source}")]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
}

/// Fixture directory: the TRIFORMS_FIXTURES environment variable when set,
/// otherwise the fixtures/ directory shipped with the crate.
pub fn fixture_dir() -> PathBuf {
    match std::env::var_os("TRIFORMS_FIXTURES") {
        Some(dir) => PathBuf::from(dir),
        None => Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures"),
    }
}

fn fixture_path(table: u32, dir: &Path) -> PathBuf {
    dir.join(format!("table{table}.json"))
}

/// Load the fixture rows for one table.
pub fn load_fixture(table: u32, dir: &Path) -> Result<Vec<FixtureRow>, FixtureError> {
    let path = fixture_path(table, dir);
    let text = fs::read_to_string(&path).map_err(|source| FixtureError::Io {
        path: path.clone(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| FixtureError::Json { path, source })
}

/// How one fixture row compared against the freshly solved coordinates.
#[derive(Debug, Clone, PartialEq)]
pub enum RowOutcome {
    Match,
    /// Solved cleanly but disagrees with the stored vector at `index`.
    Mismatch { index: usize, stored: Rat, solved: Rat },
    /// The row could not be solved at all.
    Failed(String),
}

#[derive(Debug, Clone)]
pub struct RowReport {
    pub form: String,
    pub outcome: RowOutcome,
    /// Solved coordinates when the solve succeeded.
    pub solved: Option<Vec<Rat>>,
}

#[derive(Debug, Clone)]
pub struct TableReport {
    pub table: u32,
    pub rows: Vec<RowReport>,
}

impl TableReport {
    pub fn matched(&self) -> usize {
        self.rows
            .iter()
            .filter(|r| r.outcome == RowOutcome::Match)
            .count()
    }

    pub fn total(&self) -> usize {
        self.rows.len()
    }
}

/// Per-space solve context shared by all rows of a table: the column
/// expansions through the comparison bound.
struct TableContext {
    space: SpaceId,
    bound: i64,
    cols: Vec<Vec<Rat>>,
}

fn table_context(space: SpaceId) -> Result<TableContext, String> {
    let elements = table_columns(&space).map_err(|e| e.to_string())?;
    // The quasi-modular E_2 columns of the principal-character tables are
    // not covered by the Sturm bound, so compare on enough extra exponents
    // to pin down every coordinate regardless.
    let bound = sturm_bound(space.weight, space.level) + elements.len() as i64;
    let prec24 = 24 * (bound + 1);
    let cols = elements
        .iter()
        .map(|el| {
            let s = el.expand(prec24);
            (0..=bound).map(|n| s.coeff_q(n).unwrap()).collect()
        })
        .collect();
    Ok(TableContext { space, bound, cols })
}

/// Solve one fixture row's form in its table column set.
fn solve_fixture_row(
    row: &FixtureRow,
    cache: &mut HashMap<(u32, i64, String), TableContext>,
) -> Result<Vec<Rat>, String> {
    let (_, form) = parse_form(&row.form).map_err(|e| e.to_string())?;
    let cls = form.classify().map_err(|e| e.to_string())?;
    if !cls.modular {
        return Err(format!("form is not modular (h = {})", form.h()));
    }
    // A row may classify to a proper divisor of its table's level (the form
    // then lives in the bigger space by inclusion), so only require the
    // classified level to divide the stored one.
    let stored_char = tag_char(&row.space.character, row.space.level);
    if cls.weight != i64::from(row.space.weight)
        || row.space.level % cls.level != 0
        || !cls.character.eq_mod(&stored_char, row.space.level)
    {
        return Err(format!(
            "classified space M_{}(Gamma_0({})) does not match the stored tag {}",
            cls.weight, cls.level, row.space.character
        ));
    }
    let key = (
        row.space.weight,
        row.space.level,
        row.space.character.clone(),
    );
    if !cache.contains_key(&key) {
        let space = SpaceId::new(row.space.weight, row.space.level, stored_char);
        cache.insert(key.clone(), table_context(space)?);
    }
    let ctx = &cache[&key];
    let target = form
        .gen_series(24 * (ctx.bound + 1))
        .shift24(cls.q_prefactor24);
    let mut rhs = Vec::with_capacity(ctx.bound as usize + 1);
    for n in 0..=ctx.bound {
        rhs.push(target.coeff_q(n).map_err(|e| e.to_string())?);
    }
    let values = eliminate(&ctx.cols, &rhs).map_err(|e| e.to_string())?;
    // Residual check on every compared exponent; `eliminate` does not
    // detect an inconsistent overdetermined system on its own.
    for (n, want) in rhs.iter().enumerate() {
        let mut got = Rat::zero();
        for (v, c) in values.iter().zip(&ctx.cols) {
            got += v * &c[n];
        }
        if &got != want {
            return Err(format!(
                "target is not in the span of {}: residual {} at q^{}",
                ctx.space,
                want - &got,
                n
            ));
        }
    }
    Ok(values)
}

fn parse_fixture_rat(s: &str) -> Result<Rat, String> {
    s.parse::<Rat>().map_err(|e| format!("bad rational {s:?}: {e}"))
}

/// Re-derive every row of a fixture table from scratch and compare against
/// the stored coefficient vectors, reporting the first differing index for
/// each mismatching row.
pub fn reproduce_table(table: u32, dir: &Path) -> Result<TableReport, FixtureError> {
    let rows = load_fixture(table, dir)?;
    let mut cache = HashMap::new();
    let mut reports = Vec::with_capacity(rows.len());
    for row in &rows {
        let report = match solve_fixture_row(row, &mut cache) {
            Err(msg) => RowReport {
                form: row.form.clone(),
                outcome: RowOutcome::Failed(msg),
                solved: None,
            },
            Ok(values) => {
                let mut outcome = RowOutcome::Match;
                if row.t.len() != values.len() {
                    outcome = RowOutcome::Failed(format!(
                        "stored vector has {} entries, solved {}",
                        row.t.len(),
                        values.len()
                    ));
                } else {
                    for (i, s) in row.t.iter().enumerate() {
                        let j = match &row.perm {
                            Some(p) => p[i],
                            None => i,
                        };
                        match parse_fixture_rat(s) {
                            Err(msg) => {
                                outcome = RowOutcome::Failed(msg);
                                break;
                            }
                            Ok(stored) if stored != values[j] => {
                                outcome = RowOutcome::Mismatch {
                                    index: i,
                                    stored,
                                    solved: values[j].clone(),
                                };
                                break;
                            }
                            Ok(_) => {}
                        }
                    }
                }
                RowReport {
                    form: row.form.clone(),
                    outcome,
                    solved: Some(values),
                }
            }
        };
        reports.push(report);
    }
    Ok(TableReport {
        table,
        rows: reports,
    })
}

/// Rewrite a fixture file from scratch: every row that solves cleanly gets
/// the freshly derived vector and the shift h/8 implied by its form; rows
/// that fail to solve are left untouched. Returns the comparison report
/// from before the rewrite.
pub fn regenerate_fixture(table: u32, dir: &Path) -> Result<TableReport, FixtureError> {
    let mut rows = load_fixture(table, dir)?;
    let report = reproduce_table(table, dir)?;
    for (row, rep) in rows.iter_mut().zip(&report.rows) {
        if let Some(values) = &rep.solved {
            row.t = (0..values.len())
                .map(|i| {
                    let j = match &row.perm {
                        Some(p) => p[i],
                        None => i,
                    };
                    fmt_rat(&values[j])
                })
                .collect();
            if let Ok((_, form)) = parse_form(&row.form) {
                row.shift = form.h() / 8;
            }
        }
    }
    let path = fixture_path(table, dir);
    let text = serde_json::to_string_pretty(&rows)
        .map_err(|source| FixtureError::Json {
            path: path.clone(),
            source,
        })?;
    fs::write(&path, text + "\n").map_err(|source| FixtureError::Io { path, source })?;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::KroneckerChar;
    use crate::etaq::named_cusp_form;

    #[test]
    fn unit_vector_round_trip() {
        let space = SpaceId::new(2, 6, KroneckerChar::principal(6));
        let b = basis_for(&space).unwrap();
        let bound = sturm_bound(2, 6);
        let target = b.elements[0].expand(24 * (bound + 1));
        let v = express_in_basis(&target, &space).unwrap();
        assert_eq!(v.values, vec![int(1), int(0), int(0)]);
    }

    #[test]
    fn random_round_trip() {
        use rand::Rng;
        let mut rng = rand::rng();
        for space in crate::basis::catalogued_spaces() {
            let b = basis_for(&space).unwrap();
            let bound = sturm_bound(space.weight, space.level);
            let prec = 24 * (bound + 1);
            let t: Vec<Rat> = (0..b.dimension())
                .map(|_| rat(rng.random_range(-9..=9), rng.random_range(1..=4)))
                .collect();
            let mut target = Series24::zero(prec);
            for (ti, el) in t.iter().zip(&b.elements) {
                target = target.add(&el.expand(prec).scale(ti));
            }
            let v = express_in_basis(&target, &space).unwrap();
            assert_eq!(v.values, t, "{space}");
        }
    }

    #[test]
    fn gh_vectors() {
        let space = SpaceId::new(4, 12, KroneckerChar::principal(12));
        let bound = sturm_bound(4, 12);
        let prec = 24 * (bound + 1);
        let g = named_cusp_form("G").unwrap().expand(prec);
        let v = express_in_basis(&g, &space).unwrap();
        let mut expected = vec![int(0); 6];
        expected.extend([rat(-1, 6), rat(-1, 3), rat(1, 6)]);
        assert_eq!(v.values, expected);
        let h = named_cusp_form("H").unwrap().expand(prec);
        let v = express_in_basis(&h, &space).unwrap();
        let mut expected = vec![int(0); 6];
        expected.extend([rat(1, 2), int(1), rat(1, 2)]);
        assert_eq!(v.values, expected);
    }

    #[test]
    fn inconsistent_target_reports_residual() {
        let space = SpaceId::new(2, 6, KroneckerChar::principal(6));
        let bound = sturm_bound(2, 6);
        // theta^4 is weight 2 level 4, not in M_2(Gamma_0(6)).
        let target = crate::qseries::theta_series(24 * (bound + 2)).pow(4).unwrap();
        let err = express_in_basis(&target, &space).unwrap_err();
        assert!(matches!(err, SolveError::InconsistentSystem { .. }));
    }

    #[test]
    fn non_integer_grid_rejected() {
        let space = SpaceId::new(2, 6, KroneckerChar::principal(6));
        let target = crate::qseries::psi_series(24 * 10).shift24(3);
        assert!(matches!(
            express_in_basis(&target, &space),
            Err(SolveError::NonIntegerGrid(_))
        ));
    }

    #[test]
    fn table_column_solve_example() {
        // First row of the level-12 principal-character table, written over
        // the E_2(d tau) columns.
        let (_, form) = crate::descriptor::parse_form("st:1^1 3^1 ; 2^1 6^1").unwrap();
        let cls = form.classify().unwrap();
        let space = SpaceId::new(cls.weight as u32, cls.level, cls.character.clone());
        let target = form.gen_series(24 * 12).shift24(cls.q_prefactor24);
        let (labels, values, _) = express_in_table_columns(&target, &space).unwrap();
        assert_eq!(labels[0], "E2");
        assert_eq!(
            values,
            vec![rat(-1, 24), rat(1, 24), rat(1, 8), int(0), rat(-1, 8), int(0)]
        );
    }

    #[test]
    fn table1_fixture_reproduces() {
        let rep = reproduce_table(1, &fixture_dir()).unwrap();
        assert_eq!(rep.total(), 21);
        for r in &rep.rows {
            assert_eq!(r.outcome, RowOutcome::Match, "{}: {:?}", r.form, r.outcome);
        }
    }

    #[test]
    fn table3_fixture_reproduces() {
        // Exercises the quasi-modular E_2(d tau) column path.
        let rep = reproduce_table(3, &fixture_dir()).unwrap();
        assert_eq!(rep.total(), 6);
        for r in &rep.rows {
            assert_eq!(r.outcome, RowOutcome::Match, "{}: {:?}", r.form, r.outcome);
        }
    }

    #[test]
    fn formula_rendering() {
        let space = SpaceId::new(2, 8, KroneckerChar::principal(8));
        let v = CoefficientVector {
            space,
            values: vec![int(1), int(0), int(0)],
            verified_through: 0,
        };
        // phi_{1,2}: 24/(2-1) sigma(n) - 48 sigma(n/2).
        assert_eq!(
            formula_as_divisor_sums(&v),
            "24*sigma(n) - 48*sigma(n/2)"
        );
        let v = CoefficientVector {
            space: SpaceId::new(2, 8, KroneckerChar::principal(8)),
            values: vec![int(0); 3],
            verified_through: 0,
        };
        assert_eq!(formula_as_divisor_sums(&v), "0");
    }
}
