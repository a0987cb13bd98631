//! Acceptance gate: one pass/fail line per criterion.
//!
//! Criterion 7 is expected to stay red: the published f_4_6 and f_4_6(2tau)
//! polynomial rows are misprints (a cusp form cannot have a nonzero constant
//! term) and the suite localizes them instead of correcting them. The test
//! asserts exactly that localization, so the gate itself passes.

use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use triforms::arith::KroneckerChar;
use triforms::basis::{basis_for, catalogued_spaces, sturm_bound, SpaceId};
use triforms::etaq::{delta_names, delta_signature, named_cusp_form, psi_product_quotient, EtaQuotient};
use triforms::forms::MixedForm;
use triforms::identities::{
    verify_21_formulas, verify_ellipsoid, verify_odd_square, verify_pk_each, verify_psi_theta,
    verify_relations, verify_relations1, verify_sample_formulas, TABLE1,
};
use triforms::qseries::{psi_series, theta_series, Series24};
use triforms::solve::{
    column_rank, express_in_basis, fixture_dir, reproduce_table, RowOutcome, TABLE_IDS,
};
use triforms::{int, rat, Rat};

struct Gate {
    failures: Vec<String>,
}

impl Gate {
    fn report(&mut self, criterion: u32, passed: bool, expected_pass: bool, detail: &str) {
        let verdict = if passed { "PASS" } else { "FAIL" };
        println!("criterion {criterion:2}: {verdict} - {detail}");
        if passed != expected_pass {
            self.failures.push(format!(
                "criterion {criterion}: expected {}, got {verdict} ({detail})",
                if expected_pass { "PASS" } else { "FAIL" }
            ));
        }
    }
}

fn secs(t: Instant) -> f64 {
    t.elapsed().as_secs_f64()
}

/// Criterion 1: psi^2 = theta * psi(2 tau) through q^200 in under a second.
fn criterion_1(g: &mut Gate) {
    let t = Instant::now();
    let rep = verify_psi_theta(200);
    let dt = secs(t);
    g.report(
        1,
        rep.passed && dt < 1.0,
        true,
        &format!("{} ({dt:.2}s)", rep),
    );
}

/// Criterion 2: delta_k(C;n) = q_k(C;8n+h) by dual brute force.
fn criterion_2(g: &mut Gate) {
    let t = Instant::now();
    let rep = verify_odd_square(6, 50);
    let dt = secs(t);
    g.report(
        2,
        rep.passed && dt < 10.0,
        true,
        &format!("{} ({dt:.2}s)", rep),
    );
}

/// Criterion 3: the named eta catalog passes the holomorphy criterion with
/// the advertised signatures, and the theta/psi eta expressions match the
/// direct series through q^200.
fn criterion_3(g: &mut Gate) {
    let mut problems: Vec<String> = Vec::new();
    // Two chi_{-3} level-24 quotients have cusp order exactly zero at one
    // cusp class; they are holomorphic but not strictly cuspidal and the
    // checker reports that faithfully.
    let cusp_exceptions = ["Delta_3_24_chi-3_1", "Delta_3_24_chi-3_2"];
    let names = delta_names();
    if names.len() != 21 {
        problems.push(format!("expected 21 Delta names, got {}", names.len()));
    }
    let mut checked = 0;
    for name in &names {
        let (k, n, chi_top) = delta_signature(name).unwrap();
        let comb = named_cusp_form(name).unwrap();
        for (_, e) in &comb.terms {
            let v = e.check_theorem_a();
            let want_cusp = !cusp_exceptions.contains(name);
            if !v.conditions_hold
                || v.is_cusp != want_cusp
                || v.weight != int(k)
                || !v.character.eq_mod(&KroneckerChar { top: chi_top, modulus: n }, n)
            {
                problems.push(format!("{name}: verdict {v:?}"));
            }
        }
        checked += 1;
    }
    // The remaining named forms of the catalog: f_4_6, f_4_6_at_2, f_4_12
    // and the combinations G, H, all weight 4 and cuspidal termwise.
    for name in ["f_4_6", "f_4_6_at_2", "f_4_12", "G", "H"] {
        let comb = named_cusp_form(name).unwrap();
        for (_, e) in &comb.terms {
            let v = e.check_theorem_a();
            if !v.conditions_hold || !v.is_cusp || v.weight != int(4) {
                problems.push(format!("{name}: verdict {v:?}"));
            }
        }
        checked += 1;
    }
    // Eta expressions of the generating-function building blocks:
    // psi = q^(-1/8) eta^2(2 tau)/eta(tau), theta = eta^5(2 tau) /
    // (eta^2(tau) eta^2(4 tau)).
    let prec24 = 24 * 201;
    let psi_eta = EtaQuotient::parse("2^2 1^-1").unwrap().expand(prec24);
    if psi_eta
        .first_difference(&psi_series(prec24).shift24(3), prec24 - 24)
        .unwrap()
        .is_some()
    {
        problems.push("psi eta expression differs from the direct series".into());
    }
    let theta_eta = EtaQuotient::parse("2^5 1^-2 4^-2").unwrap().expand(prec24);
    if theta_eta
        .first_difference(&theta_series(prec24), prec24 - 24)
        .unwrap()
        .is_some()
    {
        problems.push("theta eta expression differs from the direct series".into());
    }
    let detail = if problems.is_empty() {
        format!(
            "eta catalog ({checked} named forms, 2 documented non-cuspidal exceptions) and theta/psi eta expressions through q^200"
        )
    } else {
        problems.join("; ")
    };
    g.report(3, problems.is_empty(), true, &detail);
}

/// Criterion 4: the holomorphy condition for prod eta^2(2c tau)/eta(c tau)
/// holds iff h = sum c_i is divisible by 8 (k even).
fn criterion_4(g: &mut Gate) {
    let mut rng = StdRng::seed_from_u64(0x6d6f645f38);
    let mut problems = Vec::new();
    for _ in 0..200 {
        let k = 2 * rng.random_range(1..=4usize);
        let c: Vec<i64> = (0..k).map(|_| rng.random_range(1..=6)).collect();
        let h: i64 = c.iter().sum();
        let v = psi_product_quotient(&c).check_theorem_a();
        if v.conditions_hold != (h % 8 == 0) {
            problems.push(format!("C={c:?}: h={h}, conditions={}", v.conditions_hold));
        }
    }
    let detail = if problems.is_empty() {
        "modularity condition iff h = 0 mod 8 for 200 random even-length C".into()
    } else {
        problems.join("; ")
    };
    g.report(4, problems.is_empty(), true, &detail);
}

/// Criterion 5: all 21 printed rows of the mixed-form table come back
/// exactly from express_in_basis over weight 4 level 12.
fn criterion_5(g: &mut Gate) {
    let t = Instant::now();
    let space = SpaceId::new(4, 12, KroneckerChar::principal(12));
    let bound = sturm_bound(4, 12);
    let mut problems = Vec::new();
    for (ri, row) in TABLE1.iter().enumerate() {
        let form = MixedForm::mixed(row.hex, row.squares, row.tri);
        let cls = form.classify().unwrap();
        let target = form.gen_series(24 * (bound + 1)).shift24(cls.q_prefactor24);
        match express_in_basis(&target, &space) {
            Err(e) => problems.push(format!("row {}: {e}", ri + 1)),
            Ok(v) => {
                let expected: Vec<Rat> = row.t.iter().map(|&(p, q)| rat(p, q)).collect();
                if v.values != expected {
                    problems.push(format!("row {}: solved {:?}", ri + 1, v.values));
                }
            }
        }
    }
    let dt = secs(t);
    let detail = if problems.is_empty() {
        format!("21/21 rows exact over M_4(Gamma_0(12)), Sturm bound {bound} ({dt:.2}s)")
    } else {
        problems.join("; ")
    };
    g.report(5, problems.is_empty() && dt < 30.0, true, &detail);
}

/// Criterion 6: the 21 closed-form formulas against brute force.
fn criterion_6(g: &mut Gate) {
    let rep = verify_21_formulas(60);
    g.report(6, rep.passed, true, &rep.to_string());
}

/// Criterion 7: the (p,k) parametrization list. Expected red: the printed
/// f_4_6 and f_4_6(2tau) polynomial rows are misprints and stay localized.
fn criterion_7(g: &mut Gate) {
    let reports = verify_pk_each(100);
    let bad: Vec<&str> = reports
        .iter()
        .filter(|r| !r.passed)
        .map(|r| r.name.as_str())
        .collect();
    let expected_bad = ["f_4_6", "f_4_6_at_2"];
    let as_documented = bad == expected_bad
        && reports
            .iter()
            .filter(|r| !r.passed)
            .all(|r| r.first_failure.as_ref().is_some_and(|f| f.index == 0));
    let passed = bad.is_empty();
    let detail = if as_documented {
        "printed f_4_6 and f_4_6(2tau) rows fail at q^0 (documented misprints); all other rows including G, H and their factored forms hold through q^100".into()
    } else {
        format!("unexpected failures: {bad:?}")
    };
    g.report(7, passed, false, &detail);
    if !as_documented {
        g.failures
            .push(format!("criterion 7 failures not as documented: {bad:?}"));
    }
}

/// Criterion 8: advertised basis cardinalities and full column rank.
fn criterion_8(g: &mut Gate) {
    // (weight, level, character top tag, eisenstein dim, cusp dim) as
    // printed in the basis tables.
    let advertised: &[(u32, i64, i64, usize, usize)] = &[
        (2, 6, 1, 3, 0),
        (2, 8, 1, 3, 0),
        (2, 8, 8, 2, 0),
        (2, 12, 1, 5, 0),
        (2, 12, 12, 4, 0),
        (2, 24, 1, 7, 1),
        (2, 24, 8, 4, 2),
        (2, 24, 12, 8, 0),
        (2, 24, 24, 4, 2),
        (3, 4, -4, 2, 0),
        (3, 3, -3, 2, 0),
        (3, 6, -3, 4, 0),
        (3, 8, -4, 4, 0),
        (3, 8, -8, 2, 1),
        (3, 12, -3, 6, 1),
        (3, 12, -4, 4, 2),
        (3, 24, -3, 8, 4),
        (3, 24, -4, 8, 4),
        (3, 24, -8, 4, 6),
        (3, 24, -24, 4, 6),
        (4, 12, 1, 6, 3),
    ];
    let spaces = catalogued_spaces();
    let mut problems = Vec::new();
    if spaces.len() != advertised.len() {
        problems.push(format!("{} catalogued spaces", spaces.len()));
    }
    for &(k, n, top, e_dim, s_dim) in advertised {
        let chi = if top == 1 {
            KroneckerChar::principal(n)
        } else {
            KroneckerChar::symbol(top)
        };
        let space = SpaceId::new(k, n, chi);
        match basis_for(&space) {
            Err(e) => problems.push(format!("{space}: {e}")),
            Ok(b) => {
                if b.eisenstein_dim != e_dim || b.dimension() != e_dim + s_dim {
                    problems.push(format!(
                        "{space}: {} + {} elements",
                        b.eisenstein_dim,
                        b.dimension() - b.eisenstein_dim
                    ));
                    continue;
                }
                let rows = b.dimension() + 5;
                let cols: Vec<Vec<Rat>> = b
                    .elements
                    .iter()
                    .map(|el| {
                        let s = el.expand(24 * (rows as i64 + 1));
                        (0..rows as i64).map(|m| s.coeff_q(m).unwrap()).collect()
                    })
                    .collect();
                if column_rank(&cols) != b.dimension() {
                    problems.push(format!("{space}: rank deficient"));
                }
            }
        }
    }
    let detail = if problems.is_empty() {
        "all 21 catalogued bases have the advertised cardinality and full column rank on dimension + 5 coefficients".into()
    } else {
        problems.join("; ")
    };
    g.report(8, problems.is_empty(), true, &detail);
}

/// Criterion 9: the fixture tables regenerate from solve.
fn criterion_9(g: &mut Gate) {
    let dir = fixture_dir();
    let mut matched = 0usize;
    let mut total = 0usize;
    let mut catalog = Vec::new();
    for id in TABLE_IDS.iter().filter(|&&id| id != 1) {
        match reproduce_table(*id, &dir) {
            Err(e) => catalog.push(format!("table {id}: {e}")),
            Ok(rep) => {
                matched += rep.matched();
                total += rep.total();
                for r in &rep.rows {
                    match &r.outcome {
                        RowOutcome::Match => {}
                        RowOutcome::Mismatch { index, stored, solved } => catalog.push(format!(
                            "table {id} {}: index {index} stored {stored} solved {solved}",
                            r.form
                        )),
                        RowOutcome::Failed(msg) => {
                            catalog.push(format!("table {id} {}: {msg}", r.form))
                        }
                    }
                }
            }
        }
    }
    for line in &catalog {
        println!("    mismatch: {line}");
    }
    let ok = total > 0 && matched * 100 >= total * 95;
    g.report(
        9,
        ok,
        true,
        &format!("appendix tables: {matched}/{total} rows reproduce exactly"),
    );
}

/// Criterion 10: the sample formulas against brute force.
fn criterion_10(g: &mut Gate) {
    let rep = verify_sample_formulas(60);
    g.report(10, rep.passed, true, &rep.to_string());
}

/// Criterion 11: the relations corollaries and the r/double-sum identities.
fn criterion_11(g: &mut Gate) {
    let a = verify_relations(4, 40);
    let b = verify_relations1(40);
    g.report(
        11,
        a.passed && b.passed,
        true,
        &format!("{a}; {b}"),
    );
}

/// Criterion 12: the ellipsoid shell identity on the half-integer grid.
fn criterion_12(g: &mut Gate) {
    let rep = verify_ellipsoid(&[vec![1, 1], vec![1, 3], vec![1, 2, 3]], 30);
    g.report(12, rep.passed, true, &rep.to_string());
}

fn random_series(rng: &mut StdRng, prec24: i64) -> Series24 {
    let offset = rng.random_range(-24..=24);
    let len = rng.random_range(1..=30usize);
    let coeffs: Vec<Rat> = (0..len)
        .map(|_| rat(rng.random_range(-9..=9), rng.random_range(1..=4)))
        .collect();
    Series24::new(offset, coeffs, prec24)
}

fn series_eq(a: &Series24, b: &Series24, bound24: i64) -> bool {
    a.first_difference(b, bound24).unwrap().is_none()
}

/// Criterion 13: property suites.
fn criterion_13(g: &mut Gate) {
    let mut problems = Vec::new();

    // Ring axioms on 500 random triples.
    let mut rng = StdRng::seed_from_u64(0x72696e67);
    let prec24 = 24 * 10;
    let bound24 = 24 * 8;
    for i in 0..500 {
        let a = random_series(&mut rng, prec24);
        let b = random_series(&mut rng, prec24);
        let c = random_series(&mut rng, prec24);
        let assoc_add = series_eq(&a.add(&b).add(&c), &a.add(&b.add(&c)), bound24);
        let comm_add = series_eq(&a.add(&b), &b.add(&a), bound24);
        let assoc_mul = series_eq(
            &a.mul(&b).mul(&c).truncate(bound24),
            &a.mul(&b.mul(&c)).truncate(bound24),
            bound24 - 72,
        );
        let comm_mul = series_eq(&a.mul(&b), &b.mul(&a), bound24);
        let distrib = series_eq(
            &a.mul(&b.add(&c)).truncate(bound24),
            &a.mul(&b).add(&a.mul(&c)).truncate(bound24),
            bound24 - 48,
        );
        let one = Series24::one(prec24);
        let unit = series_eq(&a.mul(&one), &a, bound24 - 48);
        if !(assoc_add && comm_add && assoc_mul && comm_mul && distrib && unit) {
            problems.push(format!("ring axiom failed on triple {i}"));
            break;
        }
    }

    // Oracle vs series for the four families through n = 30.
    let mut rng = StdRng::seed_from_u64(0x6f7261636c65);
    let n_max = 30i64;
    for fi in 0..4 {
        for _ in 0..5 {
            let pick = |rng: &mut StdRng, lo: usize, hi: usize| -> Vec<i64> {
                let k = rng.random_range(lo..=hi);
                (0..k).map(|_| rng.random_range(1..=6)).collect()
            };
            let (label, form) = match fi {
                0 => ("tri", MixedForm::tri_only(&pick(&mut rng, 1, 4))),
                1 => ("st", MixedForm::st(&pick(&mut rng, 1, 3), &pick(&mut rng, 1, 3))),
                2 => ("lt", MixedForm::lt(&pick(&mut rng, 1, 3), &pick(&mut rng, 1, 3))),
                _ => (
                    "mixed",
                    MixedForm::mixed(
                        &pick(&mut rng, 1, 2),
                        &pick(&mut rng, 1, 2),
                        &pick(&mut rng, 1, 2),
                    ),
                ),
            };
            let series = form.gen_series(24 * (n_max + 1));
            let profile = form.count_profile(n_max);
            for n in 0..=n_max {
                if series.coeff_q(n).unwrap() != int(profile[n as usize] as i64) {
                    problems.push(format!("{label} family: series vs count at n={n}"));
                    break;
                }
            }
        }
    }

    // express_in_basis round trip: 50 random vectors per space.
    let mut rng = StdRng::seed_from_u64(0x726f756e64);
    'spaces: for space in catalogued_spaces() {
        let b = basis_for(&space).unwrap();
        let bound = sturm_bound(space.weight, space.level);
        let prec = 24 * (bound + 1);
        let expansions: Vec<Series24> = b.elements.iter().map(|el| el.expand(prec)).collect();
        for _ in 0..50 {
            let t: Vec<Rat> = (0..b.dimension())
                .map(|_| rat(rng.random_range(-9..=9), rng.random_range(1..=4)))
                .collect();
            let mut target = Series24::zero(prec);
            for (ti, s) in t.iter().zip(&expansions) {
                target = target.add(&s.scale(ti));
            }
            match express_in_basis(&target, &space) {
                Ok(v) if v.values == t => {}
                other => {
                    problems.push(format!("round trip failed in {space}: {other:?}"));
                    continue 'spaces;
                }
            }
        }
    }

    let detail = if problems.is_empty() {
        "ring axioms (500 triples), oracle-vs-series (4 families, n <= 30), express_in_basis round trip (50 vectors per space)".into()
    } else {
        problems.join("; ")
    };
    g.report(13, problems.is_empty(), true, &detail);
}

#[test]
fn acceptance() {
    let mut g = Gate { failures: Vec::new() };
    criterion_1(&mut g);
    criterion_2(&mut g);
    criterion_3(&mut g);
    criterion_4(&mut g);
    criterion_5(&mut g);
    criterion_6(&mut g);
    criterion_7(&mut g);
    criterion_8(&mut g);
    criterion_9(&mut g);
    criterion_10(&mut g);
    criterion_11(&mut g);
    criterion_12(&mut g);
    criterion_13(&mut g);
    assert!(g.failures.is_empty(), "{:#?}", g.failures);
}
