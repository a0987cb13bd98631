//! Command-line front end: counting, series expansion, eta-quotient checks,
//! basis listings, coefficient solving, table reproduction and identity
//! verification, with JSON (default) or TSV output.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on usage errors.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use triforms::basis::{basis_for, catalogued_spaces, sturm_bound, table_columns, SpaceId};
use triforms::descriptor::parse_form;
use triforms::etaq::EtaQuotient;
use triforms::forms::MixedForm;
use triforms::identities::{
    verify_21_formulas, verify_ellipsoid, verify_odd_square, verify_pk_each, verify_psi_theta,
    verify_relations, verify_relations1, verify_sample_formulas, VerificationReport,
};
use triforms::solve::{
    express_in_table_columns, fixture_dir, formula_for_columns, regenerate_fixture,
    reproduce_table, RowOutcome, TableReport, TABLE_IDS,
};
use triforms::Rat;

#[derive(Parser)]
#[command(
    name = "triforms",
    about = "Representation numbers of triangular/square/hexagonal forms and their modular-form coefficient formulas",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print representation numbers of a form for a range of n.
    Count {
        /// Form descriptor, e.g. "tri:1^2 3^2" or "mixed:2^1 ; 1^2 ; 2^1 6^1".
        #[arg(long)]
        form: String,
        /// Range of n: "a..b" (half-open), "a..=b" (inclusive) or a single value.
        #[arg(long, default_value = "0..=20")]
        n: String,
        /// Tab-separated output instead of JSON.
        #[arg(long)]
        tsv: bool,
    },
    /// Print the q-expansion of a form's generating function.
    Series {
        #[arg(long)]
        form: String,
        /// Precision in integer powers of q.
        #[arg(long, default_value_t = 20)]
        prec: i64,
        #[arg(long)]
        tsv: bool,
    },
    /// Check the eta-quotient holomorphy criterion for "delta^r" tokens,
    /// e.g. "2^4 1^-2". Exits 1 when the conditions fail.
    EtaCheck {
        /// Eta-quotient exponent string: whitespace-separated delta^r tokens.
        #[arg(long)]
        form: String,
    },
    /// List the catalogued basis of the space a form classifies into, or
    /// the whole catalog when no form is given.
    Basis {
        #[arg(long)]
        form: Option<String>,
        #[arg(long)]
        tsv: bool,
    },
    /// Express a modular form's generating function in its table column set
    /// and print the coefficient vector with a divisor-sum rendering.
    Solve {
        #[arg(long)]
        form: String,
        #[arg(long)]
        tsv: bool,
    },
    /// Reproduce the printed coefficient tables from their JSON fixtures.
    /// Exits 1 when any row fails to reproduce.
    Tables {
        /// Single table number (default: all of 1, 3..=14).
        #[arg(long)]
        n: Option<u32>,
        /// Rewrite the fixture files from freshly solved vectors.
        #[arg(long)]
        regen: bool,
        #[arg(long)]
        tsv: bool,
    },
    /// Run an identity verification suite. Exits 1 when any check fails.
    Verify {
        /// One of: psi-theta, odd-square, relations, relations1, table1,
        /// pk, ellipsoid, samples, all.
        #[arg(long)]
        suite: String,
        /// Bound on n for count-based suites.
        #[arg(long)]
        nmax: Option<i64>,
        /// Precision in integer powers of q for series-based suites.
        #[arg(long)]
        prec: Option<i64>,
    },
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse "a..b", "a..=b" or a single integer into an inclusive range.
fn parse_range(text: &str) -> Option<(i64, i64)> {
    if let Some((a, b)) = text.split_once("..=") {
        return Some((a.parse().ok()?, b.parse().ok()?));
    }
    if let Some((a, b)) = text.split_once("..") {
        let hi: i64 = b.parse().ok()?;
        return Some((a.parse().ok()?, hi - 1));
    }
    let n: i64 = text.parse().ok()?;
    Some((n, n))
}

fn parsed_form(text: &str) -> Result<MixedForm, String> {
    parse_form(text).map(|(_, f)| f).map_err(|e| e.to_string())
}

fn space_json(space: &SpaceId) -> Value {
    json!({
        "weight": space.weight,
        "level": space.level,
        "character_top": space.character.top,
        "character_modulus": space.character.modulus,
    })
}

fn run_count(form: &str, n: &str, tsv: bool) -> Result<ExitCode, String> {
    let f = parsed_form(form)?;
    let (lo, hi) = parse_range(n).ok_or_else(|| format!("cannot parse range {n:?}"))?;
    if lo < 0 || hi < lo {
        return Err(format!("range {n:?} must be nonnegative and nonempty"));
    }
    let profile = f.count_profile(hi);
    let values: Vec<(i64, u64)> = (lo..=hi).map(|k| (k, profile[k as usize])).collect();
    if tsv {
        for (k, c) in &values {
            println!("{k}\t{c}");
        }
    } else {
        let rows: Vec<Value> = values
            .iter()
            .map(|(k, c)| json!({"n": k, "count": c}))
            .collect();
        println!("{}", json!({"form": form, "values": rows}));
    }
    Ok(ExitCode::SUCCESS)
}

fn run_series(form: &str, prec: i64, tsv: bool) -> Result<ExitCode, String> {
    if prec <= 0 {
        return Err("--prec must be positive".into());
    }
    let f = parsed_form(form)?;
    let s = f.gen_series(24 * prec);
    if tsv {
        for (e24, c) in s.terms() {
            println!("{e24}\t{}", fmt_rat(&c));
        }
    } else {
        let terms: Vec<Value> = s
            .terms()
            .map(|(e24, c)| json!({"e24": e24, "c": fmt_rat(&c)}))
            .collect();
        println!(
            "{}",
            json!({"form": form, "prec": prec, "offset24": s.offset24(), "terms": terms})
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn run_eta_check(form: &str) -> Result<ExitCode, String> {
    let q = EtaQuotient::parse(form).map_err(|e| e.to_string())?;
    let v = q.check_theorem_a();
    println!(
        "{}",
        json!({
            "form": form,
            "level": q.level(),
            "weight": fmt_rat(&v.weight),
            "conditions_hold": v.conditions_hold,
            "is_cusp": v.is_cusp,
            "character_top": v.character.top,
            "character_modulus": v.character.modulus,
        })
    );
    Ok(if v.conditions_hold {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn classify_space(form: &str) -> Result<(MixedForm, SpaceId, i64), String> {
    let f = parsed_form(form)?;
    let cls = f.classify().map_err(|e| e.to_string())?;
    if !cls.modular {
        return Err(format!(
            "form is not modular: h = {} is not divisible by 8",
            f.h()
        ));
    }
    let space = SpaceId::new(cls.weight as u32, cls.level, cls.character);
    Ok((f, space, cls.q_prefactor24))
}

fn run_basis(form: Option<&str>, tsv: bool) -> Result<ExitCode, String> {
    match form {
        Some(text) => {
            let (_, space, _) = classify_space(text)?;
            let b = basis_for(&space).map_err(|e| e.to_string())?;
            let labels: Vec<&str> = b.elements.iter().map(|el| el.label.as_str()).collect();
            if tsv {
                for l in &labels {
                    println!("{l}");
                }
            } else {
                println!(
                    "{}",
                    json!({
                        "form": text,
                        "space": space_json(&space),
                        "eisenstein_dim": b.eisenstein_dim,
                        "cusp_dim": b.dimension() - b.eisenstein_dim,
                        "sturm_bound": sturm_bound(space.weight, space.level),
                        "elements": labels,
                    })
                );
            }
        }
        None => {
            let mut rows = Vec::new();
            for space in catalogued_spaces() {
                let b = basis_for(&space).expect("catalogued space has a basis");
                if tsv {
                    println!(
                        "{}\t{}\t{}\t{}\t{}",
                        space.weight,
                        space.level,
                        space.character.top,
                        b.eisenstein_dim,
                        b.dimension() - b.eisenstein_dim
                    );
                } else {
                    rows.push(json!({
                        "space": space_json(&space),
                        "eisenstein_dim": b.eisenstein_dim,
                        "cusp_dim": b.dimension() - b.eisenstein_dim,
                    }));
                }
            }
            if !tsv {
                println!("{}", json!({"spaces": rows}));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_solve(form: &str, tsv: bool) -> Result<ExitCode, String> {
    let (f, space, prefactor24) = classify_space(form)?;
    let bound = sturm_bound(space.weight, space.level) + 32;
    let target = f.gen_series(24 * (bound + 1)).shift24(prefactor24);
    let (labels, values, verified) =
        express_in_table_columns(&target, &space).map_err(|e| e.to_string())?;
    let elements = table_columns(&space).map_err(|e| e.to_string())?;
    let formula = formula_for_columns(&elements, &values);
    if tsv {
        for (l, v) in labels.iter().zip(&values) {
            println!("{l}\t{}", fmt_rat(v));
        }
    } else {
        let t: Vec<String> = values.iter().map(fmt_rat).collect();
        println!(
            "{}",
            json!({
                "form": form,
                "space": space_json(&space),
                "shift": f.h() / 8,
                "labels": labels,
                "t": t,
                "verified_through": verified,
                "formula": formula,
            })
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn table_report_json(rep: &TableReport) -> Value {
    let mismatches: Vec<Value> = rep
        .rows
        .iter()
        .filter_map(|r| match &r.outcome {
            RowOutcome::Match => None,
            RowOutcome::Mismatch {
                index,
                stored,
                solved,
            } => Some(json!({
                "form": r.form,
                "index": index,
                "stored": fmt_rat(stored),
                "solved": fmt_rat(solved),
            })),
            RowOutcome::Failed(msg) => Some(json!({"form": r.form, "error": msg})),
        })
        .collect();
    json!({
        "table": rep.table,
        "matched": rep.matched(),
        "total": rep.total(),
        "mismatches": mismatches,
    })
}

fn run_tables(n: Option<u32>, regen: bool, tsv: bool) -> Result<ExitCode, String> {
    let ids: Vec<u32> = match n {
        Some(id) if TABLE_IDS.contains(&id) => vec![id],
        Some(id) => return Err(format!("no fixture table {id}")),
        None => TABLE_IDS.to_vec(),
    };
    let dir = fixture_dir();
    let mut all_matched = true;
    let mut reports = Vec::new();
    for id in ids {
        let rep = if regen {
            regenerate_fixture(id, &dir).map_err(|e| e.to_string())?
        } else {
            reproduce_table(id, &dir).map_err(|e| e.to_string())?
        };
        all_matched &= rep.matched() == rep.total();
        if tsv {
            println!("{}\t{}\t{}", rep.table, rep.matched(), rep.total());
        } else {
            reports.push(table_report_json(&rep));
        }
    }
    if !tsv {
        println!("{}", json!({"regen": regen, "tables": reports}));
    }
    Ok(if all_matched || regen {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn suite_reports(suite: &str, nmax: Option<i64>, prec: Option<i64>) -> Option<Vec<VerificationReport>> {
    let nm = |d| nmax.unwrap_or(d);
    let pr = |d| prec.unwrap_or(d);
    Some(match suite {
        "psi-theta" => vec![verify_psi_theta(pr(200))],
        "odd-square" => vec![verify_odd_square(6, nm(50))],
        "relations" => vec![verify_relations(4, nm(40))],
        "relations1" => vec![verify_relations1(nm(40))],
        "table1" => vec![verify_21_formulas(nm(60))],
        "pk" => verify_pk_each(pr(100)),
        "ellipsoid" => vec![verify_ellipsoid(
            &[vec![1, 1], vec![1, 3], vec![1, 2, 3]],
            nm(30),
        )],
        "samples" => vec![verify_sample_formulas(nm(60))],
        "all" => {
            let mut all = Vec::new();
            for s in [
                "psi-theta",
                "odd-square",
                "relations",
                "relations1",
                "table1",
                "pk",
                "ellipsoid",
                "samples",
            ] {
                all.extend(suite_reports(s, nmax, prec).expect("known suite"));
            }
            all
        }
        _ => return None,
    })
}

fn run_verify(suite: &str, nmax: Option<i64>, prec: Option<i64>) -> Result<ExitCode, String> {
    let reports = suite_reports(suite, nmax, prec)
        .ok_or_else(|| format!("unknown suite {suite:?} (see --help for the list)"))?;
    let mut all_passed = true;
    let rows: Vec<Value> = reports
        .iter()
        .map(|r| {
            all_passed &= r.passed;
            let failure = r.first_failure.as_ref().map(|f| {
                json!({"index": f.index, "lhs": f.lhs, "rhs": f.rhs})
            });
            json!({
                "name": r.name,
                "passed": r.passed,
                "checked_through": r.checked_through,
                "failure": failure,
            })
        })
        .collect();
    println!("{}", json!({"suite": suite, "passed": all_passed, "reports": rows}));
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::Count { form, n, tsv } => run_count(form, n, *tsv),
        Cmd::Series { form, prec, tsv } => run_series(form, *prec, *tsv),
        Cmd::EtaCheck { form } => run_eta_check(form),
        Cmd::Basis { form, tsv } => run_basis(form.as_deref(), *tsv),
        Cmd::Solve { form, tsv } => run_solve(form, *tsv),
        Cmd::Tables { n, regen, tsv } => run_tables(*n, *regen, *tsv),
        Cmd::Verify { suite, nmax, prec } => run_verify(suite, *nmax, *prec),
    };
    match result {
        Ok(code) => code,
        Err(msg) => usage_error(&msg),
    }
}
