//! Verification suites for the classical identities and the published
//! representation-number formulas. Every check is exact: series are compared
//! coefficientwise over the rationals and counts are compared as integers.

use std::collections::HashMap;

use num_traits::Zero;

use crate::arith::{gen_divisor_sum, sharp_sigma3, sigma, sigma_div, KroneckerChar};
use crate::eisenstein::EisensteinSpec;
use crate::etaq::named_cusp_form;
use crate::forms::{
    count_odd_squares, count_triangular, ellipsoid_lattice_count, ellipsoid_shell_sum, MixedForm,
};
use crate::qseries::{psi_series, theta_series, Series24};
use crate::{int, rat, Rat};

/// First point where two sides of an identity disagree.
#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub index: i64,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one verification suite.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub name: String,
    pub checked_through: i64,
    pub passed: bool,
    pub first_failure: Option<Failure>,
}

impl VerificationReport {
    fn new(name: &str, checked_through: i64, first_failure: Option<Failure>) -> Self {
        VerificationReport {
            name: name.to_string(),
            checked_through,
            passed: first_failure.is_none(),
            first_failure,
        }
    }
}

impl std::fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.first_failure {
            None => write!(f, "{}: passed through {}", self.name, self.checked_through),
            Some(fail) => write!(
                f,
                "{}: FAILED at {} ({} != {})",
                self.name, fail.index, fail.lhs, fail.rhs
            ),
        }
    }
}

/// Deterministic pseudo-random stream (SplitMix64) so that randomized suites
/// produce identical reports on every run.
struct Stream(u64);

impl Stream {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }

    fn coefficient_list(&mut self, k_max: u64, entry_max: u64) -> Vec<i64> {
        let k = 1 + self.below(k_max);
        (0..k).map(|_| 1 + self.below(entry_max) as i64).collect()
    }
}

/// Coefficientwise comparison on the integer q-grid; the reported index is
/// the exponent in 1/24 units divided by 24.
fn series_mismatch(context: &str, lhs: &Series24, rhs: &Series24, bound24: i64) -> Option<Failure> {
    match lhs.first_difference(rhs, bound24) {
        Ok(None) => None,
        Ok(Some((e, a, b))) => Some(Failure {
            index: e / 24,
            lhs: format!("{context}: {a}"),
            rhs: b.to_string(),
        }),
        Err(e) => Some(Failure {
            index: -1,
            lhs: format!("{context}: precision error"),
            rhs: e.to_string(),
        }),
    }
}

fn value_mismatch(context: &str, n: i64, lhs: &Rat, rhs: &Rat) -> Option<Failure> {
    if lhs == rhs {
        None
    } else {
        Some(Failure {
            index: n,
            lhs: format!("{context}: {lhs}"),
            rhs: rhs.to_string(),
        })
    }
}

/// Psi_C(tau) = prod psi(c_i tau) as a series on the integer grid.
fn psi_c(c: &[i64], prec24: i64) -> Series24 {
    let mut s = Series24::one(prec24);
    for &ci in c {
        s = s.mul(&psi_series(prec24 / ci + 1).dilate(ci));
    }
    s.truncate(prec24)
}

/// prod theta(c_i tau).
fn theta_c(c: &[i64], prec24: i64) -> Series24 {
    let mut s = Series24::one(prec24);
    for &ci in c {
        s = s.mul(&theta_series(prec24 / ci + 1).dilate(ci));
    }
    s.truncate(prec24)
}

/// prod (sum over positive odd y of q^(c_i y^2)): the generating function of
/// q_k(C; n).
fn odd_square_c(c: &[i64], prec24: i64) -> Series24 {
    let mut s = Series24::one(prec24);
    for &ci in c {
        let pb = prec24 / ci + 1;
        let mut coeffs = vec![Rat::zero(); pb as usize];
        let mut y = 1i64;
        while 24 * y * y < pb {
            coeffs[(24 * y * y) as usize] = int(1);
            y += 2;
        }
        let base = Series24::new(0, coeffs, pb);
        s = s.mul(&base.dilate(ci));
    }
    s.truncate(prec24)
}

/// Psi_C^2(tau) = prod theta(c_i tau) Psi_C(2 tau), for the base case
/// C = (1) and a mix of fixed and pseudo-random coefficient lists.
pub fn verify_psi_theta(prec: i64) -> VerificationReport {
    let prec24 = 24 * prec;
    let mut sets: Vec<Vec<i64>> = vec![vec![1], vec![1, 2], vec![1, 3], vec![2, 3], vec![1, 2, 3]];
    let mut stream = Stream(0x7269666f726d73);
    for _ in 0..4 {
        sets.push(stream.coefficient_list(4, 6));
    }
    let mut failure = None;
    for c in &sets {
        let lhs = {
            let p = psi_c(c, prec24);
            p.mul(&p).truncate(prec24)
        };
        let doubled: Vec<i64> = c.iter().map(|&ci| 2 * ci).collect();
        let rhs = theta_c(c, prec24).mul(&psi_c(&doubled, prec24)).truncate(prec24);
        failure = series_mismatch(&format!("Psi_C^2 with C={c:?}"), &lhs, &rhs, prec24);
        if failure.is_some() {
            break;
        }
    }
    VerificationReport::new("psi-theta identity", prec, failure)
}

/// delta_k(C; n) = q_k(C; 8n + h) by dual brute-force enumeration for fixed
/// and pseudo-random coefficient lists.
pub fn verify_odd_square(c_max: i64, n_max: i64) -> VerificationReport {
    let mut sets: Vec<Vec<i64>> = vec![vec![1, 1, 1, 1], vec![2, 3], vec![1, 3]];
    let mut stream = Stream(0x6f64645f7371);
    for _ in 0..20 {
        sets.push(stream.coefficient_list(6, c_max.max(1) as u64));
    }
    let mut failure = None;
    'outer: for c in &sets {
        let h: i64 = c.iter().sum();
        for n in 0..=n_max {
            let lhs = count_triangular(c, n);
            let rhs = count_odd_squares(c, 8 * n + h);
            if lhs != rhs {
                failure = Some(Failure {
                    index: n,
                    lhs: format!("delta with C={c:?}: {lhs}"),
                    rhs: rhs.to_string(),
                });
                break 'outer;
            }
        }
    }
    VerificationReport::new("odd-square bijection", n_max, failure)
}

/// q_{2k}(8n+2k) = delta_{2k}(n) = sum_{a+2b=n} r_k(a) delta_k(b)
/// = sum r_k(a) q_k(8b+k), plus the coefficient-list generalization
/// q_{2k}(C^2; 8n+2h) = delta_{2k}(C^2; n) = sum r_k(C;a) delta_k(C;b).
pub fn verify_relations(k_max: i64, n_max: i64) -> VerificationReport {
    let mut sets: Vec<Vec<i64>> = Vec::new();
    for k in 1..=k_max {
        sets.push(vec![1; k as usize]);
    }
    sets.push(vec![1, 2]);
    sets.push(vec![1, 3]);
    sets.push(vec![1, 2, 3]);
    let mut failure = None;
    'outer: for c in &sets {
        let h: i64 = c.iter().sum();
        let doubled: Vec<i64> = c.iter().chain(c.iter()).copied().collect();
        let prec24 = 24 * (8 * n_max + 2 * h + 1);
        let delta1 = psi_c(c, 24 * (n_max + 1));
        let delta2 = psi_c(&doubled, 24 * (n_max + 1));
        let rk = theta_c(c, 24 * (n_max + 1));
        let q1 = odd_square_c(c, prec24);
        let q2 = odd_square_c(&doubled, prec24);
        for n in 0..=n_max {
            let d2 = delta2.coeff_q(n).unwrap();
            let ctx = format!("C={c:?} n={n}");
            let qq = q2.coeff_q(8 * n + 2 * h).unwrap();
            failure = value_mismatch(&format!("q_2k(8n+2h) vs delta_2k, {ctx}"), n, &qq, &d2);
            if failure.is_some() {
                break 'outer;
            }
            let mut conv = Rat::zero();
            let mut conv_q = Rat::zero();
            let mut b = 0;
            while 2 * b <= n {
                let ra = rk.coeff_q(n - 2 * b).unwrap();
                conv += &ra * delta1.coeff_q(b).unwrap();
                conv_q += ra * q1.coeff_q(8 * b + h).unwrap();
                b += 1;
            }
            failure = value_mismatch(&format!("convolution vs delta_2k, {ctx}"), n, &conv, &d2)
                .or_else(|| {
                    value_mismatch(&format!("odd-square convolution, {ctx}"), n, &conv_q, &d2)
                });
            if failure.is_some() {
                break 'outer;
            }
        }
    }
    VerificationReport::new("psi-theta convolution relations", n_max, failure)
}

/// The five delta_k convolution formulas, the closed forms for r_4, r_6, r_8,
/// the single-sum delta formulas they rest on, and the three double-sum
/// expansions of delta_8, delta_12, delta_16.
pub fn verify_relations1(n_max: i64) -> VerificationReport {
    let chi4 = KroneckerChar::symbol(-4);
    let one = KroneckerChar::one();
    let r_prec = (8 * n_max + 4).max(101);
    let theta = theta_series(24 * (r_prec + 1));
    let psi = psi_series(24 * (n_max + 1));
    let r = |k: i64| -> Vec<Rat> {
        let s = theta.pow(k).unwrap();
        (0..=r_prec).map(|n| s.coeff_q(n).unwrap()).collect()
    };
    let d = |k: i64| -> Vec<Rat> {
        let s = psi.pow(k).unwrap();
        (0..=n_max).map(|n| s.coeff_q(n).unwrap()).collect()
    };
    let (r2, r3, r4, r6, r8) = (r(2), r(3), r(4), r(6), r(8));
    let (d2, d3, d4, d6, d8, d12, d16) = (d(2), d(3), d(4), d(6), d(8), d(12), d(16));
    let sig = |n: i64| Rat::from(sigma(1, n));
    let sig_d = |r: u32, n: i64, m: i64| Rat::from(sigma_div(r, n, m));
    let tw = |chi: &KroneckerChar, psi: &KroneckerChar, n: i64| {
        Rat::from(gen_divisor_sum(2, chi, psi, n))
    };
    let mut failure = None;
    // Closed forms for r_4, r_6, r_8 (through at least n = 100).
    for n in 1..=n_max.max(100) {
        let want4 = sig(n) * int(8) - sig_d(1, n, 4) * int(32);
        failure = value_mismatch("r_4 closed form", n, &r4[n as usize], &want4);
        if failure.is_none() {
            let want6 = tw(&one, &chi4, n) * int(-4) + tw(&chi4, &one, n) * int(16);
            failure = value_mismatch("r_6 closed form", n, &r6[n as usize], &want6);
        }
        if failure.is_none() {
            let want8 = Rat::from(sigma(3, n)) * int(16) - sig_d(3, n, 2) * int(32)
                + sig_d(3, n, 4) * int(256);
            failure = value_mismatch("r_8 closed form", n, &r8[n as usize], &want8);
        }
        if failure.is_some() {
            return VerificationReport::new("delta/r divisor-sum identities", n_max, failure);
        }
    }
    for n in 0..=n_max {
        let nu = n as usize;
        // Single-sum formulas underlying the corollary.
        let checks: [(&str, Rat, Rat); 5] = [
            ("delta_2(n) = r_2(8n+2)/4", d2[nu].clone(), r2[(8 * n + 2) as usize].clone() / int(4)),
            ("delta_3(n) = r_3(8n+3)/8", d3[nu].clone(), r3[(8 * n + 3) as usize].clone() / int(8)),
            ("delta_4(n) = sigma(2n+1)", d4[nu].clone(), sig(2 * n + 1)),
            (
                "delta_6(n) = -sigma_{2;1,chi-4}(4n+3)/8",
                d6[nu].clone(),
                tw(&one, &chi4, 4 * n + 3) / int(-8),
            ),
            ("delta_8(n) = sigma_3#(n+1)", d8[nu].clone(), Rat::from(sharp_sigma3(n + 1))),
        ];
        for (name, lhs, rhs) in checks {
            failure = failure.or_else(|| value_mismatch(name, n, &lhs, &rhs));
        }
        // Convolution formulas for delta_4 through delta_16.
        let mut c4 = Rat::zero();
        let mut c6 = Rat::zero();
        let mut c8 = Rat::zero();
        let mut c12 = Rat::zero();
        let mut c16 = Rat::zero();
        let mut dd8 = Rat::zero();
        let mut dd12 = Rat::zero();
        let mut dd16 = Rat::zero();
        let mut b = 0;
        while 2 * b <= n {
            let a = n - 2 * b;
            let au = a as usize;
            c4 += &r2[au] * &r2[(8 * b + 2) as usize];
            c6 += &r3[au] * &r3[(8 * b + 3) as usize];
            c8 += &r4[au] * sig(2 * b + 1);
            c12 += &r6[au] * tw(&one, &chi4, 4 * b + 3);
            c16 += &r8[au] * Rat::from(sharp_sigma3(b + 1));
            if a == 0 {
                // The closed forms for r_4, r_6, r_8 are valid for positive
                // arguments only; the a = 0 term of the double sum keeps the
                // exact values r_4(0) = r_6(0) = r_8(0) = 1.
                dd8 += sig(2 * b + 1);
                dd12 += tw(&one, &chi4, 4 * b + 3) / int(-8);
                dd16 += Rat::from(sharp_sigma3(b + 1));
            } else {
                dd8 += (sig(a) * int(8) - sig_d(1, a, 4) * int(32)) * sig(2 * b + 1);
                dd12 += (tw(&one, &chi4, a) / int(2) - tw(&chi4, &one, a) * int(2))
                    * tw(&one, &chi4, 4 * b + 3);
                dd16 += (Rat::from(sigma(3, a)) * int(16) - sig_d(3, a, 2) * int(32)
                    + sig_d(3, a, 4) * int(256))
                    * Rat::from(sharp_sigma3(b + 1));
            }
            b += 1;
        }
        let checks: [(&str, Rat, Rat); 8] = [
            ("delta_4 convolution", d4[nu].clone(), c4 / int(4)),
            ("delta_6 convolution", d6[nu].clone(), c6 / int(8)),
            ("delta_8 convolution", d8[nu].clone(), c8),
            ("delta_12 convolution", d12[nu].clone(), c12 / int(-8)),
            ("delta_16 convolution", d16[nu].clone(), c16),
            ("delta_8 double sum", d8[nu].clone(), dd8),
            ("delta_12 double sum", d12[nu].clone(), dd12),
            ("delta_16 double sum", d16[nu].clone(), dd16),
        ];
        for (name, lhs, rhs) in checks {
            failure = failure.or_else(|| value_mismatch(name, n, &lhs, &rhs));
        }
        if failure.is_some() {
            break;
        }
    }
    VerificationReport::new("delta/r divisor-sum identities", n_max, failure)
}

/// One row of the 21-form table: variable lists and the printed coefficient
/// vector (alpha_1, alpha_2, alpha_3, alpha_4, alpha_6, alpha_12, c_1, c_2,
/// c_3) over the ordered basis of M_4(Gamma_0(12)).
pub struct Table1Row {
    pub hex: &'static [i64],
    pub squares: &'static [i64],
    pub tri: &'static [i64],
    pub t: [(i64, i64); 9],
}

pub const TABLE1_DIVISORS: [i64; 6] = [1, 2, 3, 4, 6, 12];

pub const TABLE1: &[Table1Row] = &[
    Table1Row {
        hex: &[2],
        squares: &[1, 1, 1, 3, 3, 3],
        tri: &[],
        t: [(1, 120), (0, 1), (-3, 40), (-2, 15), (0, 1), (6, 5), (0, 1), (0, 1), (4, 1)],
    },
    Table1Row {
        hex: &[2],
        squares: &[1, 1, 3, 3],
        tri: &[2, 6],
        t: [(1, 480), (-1, 480), (-3, 160), (0, 1), (3, 160), (0, 1), (0, 1), (0, 1), (1, 2)],
    },
    Table1Row {
        hex: &[2],
        squares: &[1, 3],
        tri: &[2, 2, 6, 6],
        t: [(1, 1920), (-1, 1920), (-3, 640), (0, 1), (3, 640), (0, 1), (0, 1), (0, 1), (-1, 8)],
    },
    Table1Row {
        hex: &[4],
        squares: &[1, 1],
        tri: &[1, 3, 6, 6],
        t: [(1, 1920), (-1, 1920), (-3, 640), (0, 1), (3, 640), (0, 1), (-1, 2), (-1, 1), (3, 8)],
    },
    Table1Row {
        hex: &[4],
        squares: &[3, 3],
        tri: &[1, 2, 2, 3],
        t: [(1, 1920), (-1, 1920), (-3, 640), (0, 1), (3, 640), (0, 1), (1, 2), (1, 1), (3, 8)],
    },
    Table1Row {
        hex: &[1, 2],
        squares: &[3, 3, 3, 3],
        tri: &[],
        t: [(1, 300), (-1, 200), (13, 100), (2, 75), (-39, 200), (26, 25), (16, 5), (32, 5), (2, 1)],
    },
    Table1Row {
        hex: &[1, 2],
        squares: &[1, 1, 3, 3],
        tri: &[],
        t: [(1, 60), (-1, 120), (-3, 20), (-2, 15), (3, 40), (6, 5), (0, 1), (0, 1), (6, 1)],
    },
    Table1Row {
        hex: &[1, 2],
        squares: &[1, 1, 1, 1],
        tri: &[],
        t: [(13, 300), (-13, 200), (9, 100), (26, 75), (-27, 200), (18, 25), (48, 5), (96, 5), (-6, 1)],
    },
    Table1Row {
        hex: &[1, 2],
        squares: &[],
        tri: &[1, 1, 3, 3],
        t: [(1, 240), (-1, 240), (-3, 80), (0, 1), (3, 80), (0, 1), (0, 1), (0, 1), (0, 1)],
    },
    Table1Row {
        hex: &[1, 2],
        squares: &[],
        tri: &[2, 2, 6, 6],
        t: [(1, 640), (-19, 1920), (-9, 640), (1, 120), (57, 640), (-3, 40), (0, 1), (0, 1), (-3, 8)],
    },
    Table1Row {
        hex: &[2, 4],
        squares: &[1, 1, 3, 3],
        tri: &[],
        t: [(1, 240), (1, 240), (-3, 80), (-2, 15), (-3, 80), (6, 5), (0, 1), (0, 1), (3, 1)],
    },
    Table1Row {
        hex: &[2, 4],
        squares: &[],
        tri: &[1, 1, 3, 3],
        t: [(1, 960), (-1, 960), (-3, 320), (0, 1), (3, 320), (0, 1), (0, 1), (0, 1), (3, 4)],
    },
    Table1Row {
        hex: &[2, 2, 2],
        squares: &[1, 3],
        tri: &[],
        t: [(1, 120), (0, 1), (-3, 40), (-2, 15), (0, 1), (6, 5), (0, 1), (0, 1), (0, 1)],
    },
    Table1Row {
        hex: &[2, 2, 2],
        squares: &[],
        tri: &[2, 6],
        t: [(1, 240), (-3, 80), (-3, 80), (1, 30), (27, 80), (-3, 10), (0, 1), (0, 1), (0, 1)],
    },
    Table1Row {
        hex: &[4, 4, 4],
        squares: &[1, 3],
        tri: &[],
        t: [(1, 1200), (-3, 400), (3, 400), (8, 75), (-27, 400), (24, 25), (9, 5), (18, 5), (0, 1)],
    },
    Table1Row {
        hex: &[1, 1, 2],
        squares: &[1, 3],
        tri: &[],
        t: [(1, 30), (-1, 40), (-3, 10), (-2, 15), (9, 40), (6, 5), (0, 1), (0, 1), (6, 1)],
    },
    Table1Row {
        hex: &[1, 1, 2],
        squares: &[],
        tri: &[2, 6],
        t: [(1, 96), (-7, 160), (-3, 32), (1, 30), (63, 160), (-3, 10), (0, 1), (0, 1), (-3, 2)],
    },
    Table1Row {
        hex: &[1, 2, 2],
        squares: &[1, 3],
        tri: &[],
        t: [(1, 75), (-1, 50), (3, 25), (8, 75), (-9, 50), (24, 25), (24, 5), (48, 5), (0, 1)],
    },
    Table1Row {
        hex: &[2, 4, 4],
        squares: &[1, 3],
        tri: &[],
        t: [(1, 480), (1, 160), (-3, 160), (-2, 15), (-9, 160), (6, 5), (0, 1), (0, 1), (3, 2)],
    },
    Table1Row {
        hex: &[1, 2, 4],
        squares: &[1, 3],
        tri: &[],
        t: [(1, 120), (0, 1), (-3, 40), (-2, 15), (0, 1), (6, 5), (0, 1), (0, 1), (6, 1)],
    },
    Table1Row {
        hex: &[1, 2, 4],
        squares: &[],
        tri: &[2, 6],
        t: [(1, 960), (1, 64), (-3, 320), (-1, 60), (-9, 64), (3, 20), (0, 1), (0, 1), (3, 4)],
    },
];

/// Fourier coefficients of a named cusp form through n_max, on the q-grid.
fn cusp_coeffs(name: &str, n_max: i64) -> Vec<Rat> {
    let s = named_cusp_form(name).unwrap().expand(24 * (n_max + 1));
    (0..=n_max).map(|n| s.coeff_q(n).unwrap()).collect()
}

/// All 21 closed-form representation formulas, obtained from the table rows
/// (the sigma_3(n/d) coefficient is 240 alpha_d), against brute-force counts.
pub fn verify_21_formulas(n_max: i64) -> VerificationReport {
    let a46 = cusp_coeffs("f_4_6", n_max);
    let a412 = cusp_coeffs("f_4_12", n_max);
    let mut failure = None;
    'outer: for (ri, row) in TABLE1.iter().enumerate() {
        let form = MixedForm::mixed(row.hex, row.squares, row.tri);
        let shift = form.h() / 8;
        let profile = form.count_profile(n_max);
        let alpha: Vec<Rat> = row.t.iter().map(|&(p, q)| rat(p, q)).collect();
        // Constant term: the alphas of E_4(d tau) must sum to the q^0
        // coefficient of q^shift Phi.
        let const_term: Rat = alpha[..6].iter().sum();
        let want = if shift == 0 { int(1) } else { int(0) };
        failure = value_mismatch(&format!("row {} constant term", ri + 1), 0, &const_term, &want);
        if failure.is_some() {
            break;
        }
        for n in 1..=n_max {
            let lhs = if n >= shift {
                int(profile[(n - shift) as usize] as i64)
            } else {
                int(0)
            };
            let mut rhs = Rat::zero();
            for (j, &d) in TABLE1_DIVISORS.iter().enumerate() {
                rhs += &alpha[j] * int(240) * Rat::from(sigma_div(3, n, d));
            }
            rhs += &alpha[6] * &a46[n as usize];
            if n % 2 == 0 {
                rhs += &alpha[7] * &a46[(n / 2) as usize];
            }
            rhs += &alpha[8] * &a412[n as usize];
            failure = value_mismatch(&format!("row {}", ri + 1), n, &lhs, &rhs);
            if failure.is_some() {
                break 'outer;
            }
        }
    }
    VerificationReport::new("21 mixed-form formulas", n_max, failure)
}

/// The (p, k)-parametrization list: polynomial coefficients of p^0..p^8 such
/// that the target equals poly(p) k^4.
const PK_LIST: &[(&str, [(i64, i64); 9])] = &[
    ("E4(tau)", [(1, 1), (124, 1), (964, 1), (2788, 1), (3910, 1), (2788, 1), (964, 1), (124, 1), (1, 1)]),
    ("E4(2tau)", [(1, 1), (4, 1), (64, 1), (178, 1), (235, 1), (178, 1), (64, 1), (4, 1), (1, 1)]),
    ("E4(3tau)", [(1, 1), (4, 1), (4, 1), (28, 1), (70, 1), (28, 1), (4, 1), (4, 1), (1, 1)]),
    ("E4(4tau)", [(1, 1), (4, 1), (4, 1), (-2, 1), (10, 1), (28, 1), (31, 4), (-29, 4), (1, 16)]),
    ("E4(6tau)", [(1, 1), (4, 1), (4, 1), (-2, 1), (-5, 1), (-2, 1), (4, 1), (4, 1), (1, 1)]),
    ("E4(12tau)", [(1, 1), (4, 1), (4, 1), (-2, 1), (-5, 1), (-2, 1), (1, 4), (1, 4), (1, 16)]),
    ("f_4_6", [(-1, 1), (-4, 1), (-119, 32), (115, 32), (-913, 128), (-1695, 64), (-2049, 256), (1801, 256), (-1, 16)]),
    ("f_4_6_at_2", [(1, 2), (9, 4), (175, 64), (-83, 64), (673, 256), (1583, 128), (2081, 512), (-1737, 512), (1, 32)]),
    ("f_4_12", [(0, 1), (1, 2), (7, 4), (7, 4), (0, 1), (-7, 4), (-7, 4), (-1, 2), (0, 1)]),
    ("G", [(0, 1), (0, 1), (0, 1), (2, 16), (5, 16), (0, 1), (-5, 16), (-2, 16), (0, 1)]),
    ("H", [(0, 1), (8, 16), (28, 16), (22, 16), (-15, 16), (-28, 16), (-13, 16), (-2, 16), (0, 1)]),
];

/// Check every listed polynomial identity in p and k against the direct
/// expansions, including the factored forms of G and H, reporting one
/// result per identity. The published polynomials for f_4_6 and f_4_6_at_2
/// are inconsistent with the eta products (a cusp form cannot have a
/// nonzero constant term), so those two reports localize the first failing
/// coefficient instead of passing; their errors are proportional (the
/// second is -1/2 times the first) and cancel in every combination
/// c_1 f_4_6 + c_2 f_4_6_at_2 with c_2 = -2 c_1 as well as in G and H.
pub fn verify_pk_each(prec: i64) -> Vec<VerificationReport> {
    let prec24 = 24 * prec + 72;
    let bound24 = 24 * prec;
    let t1 = theta_series(prec24);
    let t3 = theta_series(prec24 / 3 + 1).dilate(3);
    let t3sq = t3.mul(&t3);
    let p = t1
        .mul(&t1)
        .sub(&t3sq)
        .mul(&t3sq.scale(&int(2)).invert().unwrap())
        .truncate(prec24);
    let k4 = t3.pow(12).unwrap().mul(&t1.pow(-4).unwrap()).truncate(prec24);
    let mut powers = vec![Series24::one(prec24)];
    for i in 1..=8 {
        powers.push(powers[i - 1].mul(&p).truncate(prec24));
    }
    let poly = |coeffs: &[(i64, i64); 9]| -> Series24 {
        let mut s = Series24::zero(prec24);
        for (i, &(num, den)) in coeffs.iter().enumerate() {
            if num != 0 {
                s = s.add(&powers[i].scale(&rat(num, den)));
            }
        }
        s.mul(&k4).truncate(prec24)
    };
    let mut reports = Vec::new();
    {
        let p0 = p.coeff_q(0).unwrap();
        let k0 = k4.coeff_q(0).unwrap();
        let failure = value_mismatch("p constant term", 0, &p0, &int(0))
            .or_else(|| value_mismatch("k^4 constant term", 0, &k0, &int(1)));
        reports.push(VerificationReport::new("p and k^4 constant terms", prec, failure));
    }
    for &(name, coeffs) in PK_LIST {
        let target = if let Some(d) = name.strip_prefix("E4(").and_then(|s| s.strip_suffix("tau)"))
        {
            let d: i64 = if d.is_empty() { 1 } else { d.parse().unwrap() };
            let spec = EisensteinSpec::Classical(4);
            let spec = if d == 1 { spec } else { spec.dilated(d) };
            spec.expand(prec24).unwrap()
        } else {
            named_cusp_form(name).unwrap().expand(prec24)
        };
        let failure = series_mismatch(name, &poly(&coeffs), &target, bound24);
        reports.push(VerificationReport::new(name, prec, failure));
    }
    // Factored forms: G = p^3 (1-p)(1+p)(1+2p)(2+p)/16 k^4 and
    // H = p (1-p)(1+p)(1+2p)(2+p)^3/16 k^4.
    let lin = |a: i64, b: i64| {
        let mut s = Series24::one(prec24).scale(&int(a));
        s = s.add(&p.scale(&int(b)));
        s
    };
    let core = lin(1, -1).mul(&lin(1, 1)).mul(&lin(1, 2));
    let g = powers[3]
        .mul(&core)
        .mul(&lin(2, 1))
        .scale(&rat(1, 16))
        .mul(&k4)
        .truncate(prec24);
    let h = powers[1]
        .mul(&core)
        .mul(&lin(2, 1).pow(3).unwrap())
        .scale(&rat(1, 16))
        .mul(&k4)
        .truncate(prec24);
    let failure =
        series_mismatch("G factored", &g, &named_cusp_form("G").unwrap().expand(prec24), bound24);
    reports.push(VerificationReport::new("G factored", prec, failure));
    let failure =
        series_mismatch("H factored", &h, &named_cusp_form("H").unwrap().expand(prec24), bound24);
    reports.push(VerificationReport::new("H factored", prec, failure));
    reports
}

/// Combined (p,k) report: the first failing identity of [`verify_pk_each`],
/// if any, becomes the localized failure.
pub fn verify_pk(prec: i64) -> VerificationReport {
    let failure = verify_pk_each(prec)
        .into_iter()
        .find(|r| !r.passed)
        .and_then(|r| r.first_failure);
    VerificationReport::new("(p,k) parametrization", prec, failure)
}

/// Ellipsoid lattice-point count against the triangular shell sum, on the
/// half-integer grid of R^2 values up to r2_max. The boundary convention
/// that matches is the one including the innermost shell (the sum starting
/// at n = 0).
pub fn verify_ellipsoid(c_sets: &[Vec<i64>], r2_max: i64) -> VerificationReport {
    let mut failure = None;
    'outer: for c in c_sets {
        for twice in 1..=2 * r2_max {
            let r2 = rat(twice, 2);
            let lattice = ellipsoid_lattice_count(c, &r2);
            let shells = ellipsoid_shell_sum(c, &r2, true);
            if lattice != shells {
                failure = Some(Failure {
                    index: twice,
                    lhs: format!("lattice count with C={c:?}, R^2={twice}/2: {lattice}"),
                    rhs: shells.to_string(),
                });
                break 'outer;
            }
        }
    }
    VerificationReport::new("ellipsoid shell identity (center shell included)", r2_max, failure)
}

/// One closed-form term: (num/den) * kernel(n / div), dropped when div does
/// not divide n.
pub struct Term {
    pub num: i64,
    pub den: i64,
    pub div: i64,
    pub kind: TermKind,
}

/// Kernel of a closed-form term. Character tops of 1 denote the trivial
/// character.
pub enum TermKind {
    /// sigma_{r; chi, psi}(n) with Kronecker tops.
    Sigma(u32, i64, i64),
    /// n-th coefficient of a named cusp form.
    Tau(&'static str),
}

const fn s1(num: i64, den: i64, div: i64) -> Term {
    Term { num, den, div, kind: TermKind::Sigma(1, 1, 1) }
}

const fn s2(num: i64, den: i64, chi: i64, psi: i64, div: i64) -> Term {
    Term { num, den, div, kind: TermKind::Sigma(2, chi, psi) }
}

const fn tau(num: i64, den: i64, name: &'static str, div: i64) -> Term {
    Term { num, den, div, kind: TermKind::Tau(name) }
}

/// A sample closed-form formula: representation number of the mixed form at
/// n - shift equals the sum of the terms at n.
pub struct SampleFormula {
    pub hex: &'static [i64],
    pub squares: &'static [i64],
    pub tri: &'static [i64],
    pub shift: i64,
    pub terms: &'static [Term],
}

/// The published four-variable displays built purely from sigma terms carry
/// an overall factor of -1 relative to the counts (brute force gives, for
/// example, sigma(1) = 1 at n = 1, not -1); the seven affected formulas are
/// stored here with that global sign corrected. The chi_8-twisted displays
/// and all six-variable formulas are sign-correct as published.
pub const SAMPLE_FORMULAS: &[SampleFormula] = &[
    // Four-variable list.
    SampleFormula {
        hex: &[], squares: &[], tri: &[1, 1, 3, 3], shift: 1,
        terms: &[s1(1, 1, 1), s1(-1, 1, 2), s1(-3, 1, 3), s1(3, 1, 6)],
    },
    SampleFormula {
        hex: &[], squares: &[], tri: &[2, 2, 2, 2], shift: 1,
        terms: &[s1(1, 1, 1), s1(-3, 1, 2), s1(2, 1, 4)],
    },
    SampleFormula {
        hex: &[], squares: &[], tri: &[1, 1, 2, 4], shift: 1,
        terms: &[Term { num: 1, den: 1, div: 1, kind: TermKind::Sigma(1, 8, 1) }],
    },
    SampleFormula {
        hex: &[], squares: &[1, 2], tri: &[4, 4], shift: 1,
        terms: &[Term { num: 1, den: 1, div: 1, kind: TermKind::Sigma(1, 8, 1) }],
    },
    SampleFormula {
        hex: &[], squares: &[1], tri: &[2, 2, 4], shift: 1,
        terms: &[Term { num: 1, den: 1, div: 1, kind: TermKind::Sigma(1, 8, 1) }],
    },
    SampleFormula {
        hex: &[], squares: &[1, 1], tri: &[4, 4], shift: 1,
        terms: &[s1(1, 1, 1), s1(1, 1, 2), s1(-10, 1, 4), s1(8, 1, 8)],
    },
    SampleFormula {
        hex: &[], squares: &[2, 2], tri: &[4, 4], shift: 1,
        terms: &[s1(1, 1, 1), s1(-3, 1, 2), s1(2, 1, 4)],
    },
    SampleFormula {
        hex: &[], squares: &[2], tri: &[2, 2, 4], shift: 1,
        terms: &[s1(1, 1, 1), s1(-3, 1, 2), s1(2, 1, 4)],
    },
    SampleFormula {
        hex: &[1], squares: &[], tri: &[2, 6], shift: 1,
        terms: &[s1(1, 1, 1), s1(3, 1, 2), s1(-3, 1, 3), s1(-4, 1, 4), s1(-9, 1, 6), s1(12, 1, 12)],
    },
    SampleFormula {
        hex: &[2], squares: &[], tri: &[2, 6], shift: 1,
        terms: &[s1(1, 1, 1), s1(-3, 1, 2), s1(3, 1, 3), s1(2, 1, 4), s1(-9, 1, 6), s1(6, 1, 12)],
    },
    // Six-variable list.
    SampleFormula {
        hex: &[], squares: &[], tri: &[1, 1, 1, 1, 2, 2], shift: 1,
        terms: &[s2(1, 1, -4, 1, 1)],
    },
    SampleFormula {
        hex: &[], squares: &[], tri: &[1, 1, 1, 1, 1, 3], shift: 1,
        terms: &[s2(-1, 8, 1, -3, 1), s2(1, 8, 1, -3, 2), s2(9, 8, -3, 1, 1), s2(9, 8, -3, 1, 2)],
    },
    // Printed with argument n-1, but the coefficient sum of this form is
    // h = 16, so the correct shift is h/8 = 2 (confirmed by brute force).
    SampleFormula {
        hex: &[], squares: &[], tri: &[1, 3, 3, 3, 3, 3], shift: 2,
        terms: &[s2(-1, 8, 1, -3, 1), s2(1, 8, 1, -3, 2), s2(1, 8, -3, 1, 1), s2(1, 8, -3, 1, 2)],
    },
    SampleFormula {
        hex: &[], squares: &[], tri: &[2, 2, 2, 2, 4, 4], shift: 2,
        terms: &[s2(1, 1, -4, 1, 2)],
    },
    SampleFormula {
        hex: &[], squares: &[], tri: &[4, 4, 4, 4, 4, 4], shift: 3,
        terms: &[s2(-1, 16, 1, -4, 1), s2(1, 16, 1, -4, 2), s2(1, 16, -4, 1, 1), s2(-1, 4, -4, 1, 2)],
    },
    SampleFormula {
        hex: &[], squares: &[], tri: &[1, 1, 2, 4, 4, 4], shift: 2,
        terms: &[s2(1, 6, -8, 1, 1), tau(-1, 6, "Delta_3_8_chi-8", 1)],
    },
    SampleFormula {
        hex: &[1], squares: &[], tri: &[1, 1, 3, 3], shift: 1,
        terms: &[s2(-1, 2, 1, -3, 1), s2(1, 2, 1, -3, 2), s2(3, 2, -3, 1, 1), s2(3, 2, -3, 1, 2)],
    },
    SampleFormula {
        hex: &[2], squares: &[], tri: &[1, 1, 3, 3], shift: 1,
        terms: &[s2(1, 4, 1, -3, 1), s2(-1, 4, 1, -3, 2), s2(3, 4, -3, 1, 1), s2(3, 4, -3, 1, 2)],
    },
    SampleFormula {
        hex: &[], squares: &[1, 1], tri: &[2, 2, 2, 2], shift: 1,
        terms: &[s2(1, 1, -4, 1, 1)],
    },
    SampleFormula {
        hex: &[], squares: &[1, 1, 1, 1], tri: &[4, 4], shift: 1,
        terms: &[s2(-1, 1, 1, -4, 1), s2(1, 1, 1, -4, 2), s2(2, 1, -4, 1, 1)],
    },
    // The published display for this row is corrupted (an operator is
    // missing between its first two terms, and no choice of sign makes it
    // match). Solving for the coefficients against brute-force counts shows
    // the two sigma_{2;1,chi-4} terms enter with coefficient zero.
    SampleFormula {
        hex: &[], squares: &[2, 2, 2, 2], tri: &[4, 4], shift: 1,
        terms: &[s2(1, 1, -4, 1, 1), s2(-4, 1, -4, 1, 2)],
    },
    SampleFormula {
        hex: &[], squares: &[1, 1, 2, 2], tri: &[4, 4], shift: 1,
        terms: &[s2(1, 1, -4, 1, 1)],
    },
    SampleFormula {
        hex: &[], squares: &[1, 1], tri: &[4, 4, 4, 4], shift: 2,
        terms: &[s2(-1, 4, 1, -4, 1), s2(1, 4, 1, -4, 2), s2(1, 4, -4, 1, 1)],
    },
    SampleFormula {
        hex: &[], squares: &[2, 2], tri: &[4, 4, 4, 4], shift: 2,
        terms: &[s2(1, 1, -4, 1, 2)],
    },
    SampleFormula {
        hex: &[], squares: &[2, 2], tri: &[2, 2, 2, 2], shift: 1,
        terms: &[s2(1, 1, -4, 1, 1), s2(-4, 1, -4, 1, 2)],
    },
    SampleFormula {
        hex: &[], squares: &[1, 2], tri: &[1, 1, 2, 4], shift: 1,
        terms: &[s2(1, 1, -4, 1, 1)],
    },
    SampleFormula {
        hex: &[], squares: &[1, 2, 2, 2], tri: &[4, 4], shift: 1,
        terms: &[s2(2, 3, -8, 1, 1), tau(1, 3, "Delta_3_8_chi-8", 1)],
    },
    SampleFormula {
        hex: &[], squares: &[1, 1, 1, 2], tri: &[4, 4], shift: 1,
        terms: &[s2(4, 3, -8, 1, 1), tau(-1, 3, "Delta_3_8_chi-8", 1)],
    },
    SampleFormula {
        hex: &[], squares: &[1, 1], tri: &[1, 1, 2, 4], shift: 1,
        terms: &[s2(4, 3, -8, 1, 1), tau(-1, 3, "Delta_3_8_chi-8", 1)],
    },
    SampleFormula {
        hex: &[], squares: &[2, 2], tri: &[1, 1, 2, 4], shift: 1,
        terms: &[s2(2, 3, -8, 1, 1), tau(1, 3, "Delta_3_8_chi-8", 1)],
    },
    SampleFormula {
        hex: &[], squares: &[1, 2], tri: &[2, 2, 2, 2], shift: 1,
        terms: &[s2(2, 3, -8, 1, 1), tau(1, 3, "Delta_3_8_chi-8", 1)],
    },
    SampleFormula {
        hex: &[], squares: &[1, 2], tri: &[4, 4, 4, 4], shift: 2,
        terms: &[s2(1, 6, -8, 1, 1), tau(-1, 6, "Delta_3_8_chi-8", 1)],
    },
    SampleFormula {
        hex: &[], squares: &[1, 1, 2], tri: &[2, 2, 4], shift: 1,
        terms: &[s2(1, 1, -4, 1, 1)],
    },
    SampleFormula {
        hex: &[], squares: &[2, 2, 2], tri: &[2, 2, 4], shift: 1,
        terms: &[s2(1, 1, -4, 1, 1), s2(-4, 1, -4, 1, 2)],
    },
    SampleFormula {
        hex: &[], squares: &[1, 1, 1], tri: &[2, 2, 4], shift: 1,
        terms: &[s2(4, 3, -8, 1, 1), tau(-1, 3, "Delta_3_8_chi-8", 1)],
    },
    SampleFormula {
        hex: &[], squares: &[1, 2, 2], tri: &[2, 2, 4], shift: 1,
        terms: &[s2(2, 3, -8, 1, 1), tau(1, 3, "Delta_3_8_chi-8", 1)],
    },
    SampleFormula {
        hex: &[1], squares: &[1, 3], tri: &[2, 6], shift: 1,
        terms: &[s2(-1, 2, 1, -3, 1), s2(1, 2, 1, -3, 2), s2(3, 2, -3, 1, 1), s2(3, 2, -3, 1, 2)],
    },
    SampleFormula {
        hex: &[1], squares: &[1, 1], tri: &[2, 6], shift: 1,
        terms: &[
            s2(16, 7, -4, 1, 1), s2(72, 7, -4, 1, 3),
            tau(-9, 7, "Delta_3_12_chi-4_1", 1), tau(-30, 7, "Delta_3_12_chi-4_2", 1),
        ],
    },
    SampleFormula {
        hex: &[1], squares: &[1, 1], tri: &[4, 4], shift: 1,
        terms: &[
            s2(1, 4, 1, -3, 1), s2(-1, 2, 1, -3, 2), s2(-7, 4, 1, -3, 4), s2(2, 1, 1, -3, 8),
            s2(9, 4, -3, 1, 1), s2(9, 2, -3, 1, 2), s2(-117, 4, -3, 1, 4), s2(90, 1, -3, 1, 8),
            tau(-3, 1, "Delta_3_12_chi-3", 1), tau(9, 2, "Delta_3_12_chi-3", 2),
            tau(3, 2, "Delta_3_24_chi-3_1", 1),
        ],
    },
    SampleFormula {
        hex: &[8], squares: &[1, 1], tri: &[2, 6], shift: 1,
        terms: &[
            s2(5, 14, -4, 1, 1), s2(-9, 14, -4, 1, 3),
            tau(9, 14, "Delta_3_12_chi-4_1", 1), tau(-6, 7, "Delta_3_12_chi-4_2", 1),
            tau(6, 1, "Delta_3_12_chi-4_1", 2), tau(18, 1, "Delta_3_12_chi-4_2", 2),
        ],
    },
    SampleFormula {
        hex: &[1], squares: &[1, 6], tri: &[4, 4], shift: 1,
        terms: &[
            s2(32, 39, -8, 1, 1), s2(24, 13, -8, 1, 3),
            tau(-47, 39, "Delta_3_8_chi-8", 1), tau(-6, 13, "Delta_3_8_chi-8", 3),
            tau(14, 13, "Delta_3_24_chi-8_1", 1), tau(21, 26, "Delta_3_24_chi-8_2", 1),
            tau(33, 26, "Delta_3_24_chi-8_3", 1), tau(-23, 13, "Delta_3_24_chi-8_4", 1),
        ],
    },
    // The second term is printed as sigma_{2;chi-3,chi8}, but solving the
    // generating function in the (3, 24, chi-24) basis shows the characters
    // are swapped: the coefficient -4/23 belongs to sigma_{2;chi8,chi-3}.
    SampleFormula {
        hex: &[1], squares: &[1, 2], tri: &[4, 4], shift: 1,
        terms: &[
            s2(36, 23, -24, 1, 1), s2(-4, 23, 8, -3, 1),
            tau(-51, 92, "Delta_3_24_chi-24_1", 1), tau(3, 46, "Delta_3_24_chi-24_2", 1),
            tau(51, 23, "Delta_3_24_chi-24_3", 1), tau(15, 23, "Delta_3_24_chi-24_4", 1),
            tau(-153, 92, "Delta_3_24_chi-24_5", 1), tau(-51, 46, "Delta_3_24_chi-24_6", 1),
        ],
    },
];

fn char_from_top(top: i64) -> KroneckerChar {
    if top == 1 {
        KroneckerChar::one()
    } else {
        KroneckerChar::symbol(top)
    }
}

/// Every sample closed form of the four- and six-variable lists against
/// brute-force counts.
pub fn verify_sample_formulas(n_max: i64) -> VerificationReport {
    let mut tau_cache: HashMap<&'static str, Vec<Rat>> = HashMap::new();
    for f in SAMPLE_FORMULAS {
        for t in f.terms {
            if let TermKind::Tau(name) = t.kind {
                tau_cache
                    .entry(name)
                    .or_insert_with(|| cusp_coeffs(name, n_max));
            }
        }
    }
    let mut failure = None;
    'outer: for (fi, f) in SAMPLE_FORMULAS.iter().enumerate() {
        let form = MixedForm::mixed(f.hex, f.squares, f.tri);
        let profile = form.count_profile(n_max);
        for n in 1..=n_max {
            let lhs = if n >= f.shift {
                int(profile[(n - f.shift) as usize] as i64)
            } else {
                int(0)
            };
            let mut rhs = Rat::zero();
            for t in f.terms {
                if n % t.div != 0 {
                    continue;
                }
                let m = n / t.div;
                let value = match &t.kind {
                    TermKind::Sigma(r, chi, psi) => Rat::from(gen_divisor_sum(
                        *r,
                        &char_from_top(*chi),
                        &char_from_top(*psi),
                        m,
                    )),
                    TermKind::Tau(name) => tau_cache[name][m as usize].clone(),
                };
                rhs += rat(t.num, t.den) * value;
            }
            failure = value_mismatch(&format!("sample formula {}", fi + 1), n, &lhs, &rhs);
            if failure.is_some() {
                break 'outer;
            }
        }
    }
    VerificationReport::new("sample closed forms (4 and 6 variables)", n_max, failure)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn psi_theta_passes() {
        let report = verify_psi_theta(60);
        assert!(report.passed, "{report}");
    }

    #[test]
    fn psi_theta_negative_control() {
        let prec24 = 24 * 30;
        let psi = psi_series(prec24);
        let lhs = psi.mul(&psi).truncate(prec24);
        let perturbed = lhs.add(&Series24::monomial(24 * 7, int(1), prec24));
        let fail = series_mismatch("control", &lhs, &perturbed, prec24).unwrap();
        assert_eq!(fail.index, 7);
    }

    #[test]
    fn odd_square_passes() {
        let report = verify_odd_square(4, 30);
        assert!(report.passed, "{report}");
    }

    #[test]
    fn relations_pass() {
        let report = verify_relations(3, 24);
        assert!(report.passed, "{report}");
    }

    #[test]
    fn relations1_pass() {
        let report = verify_relations1(16);
        assert!(report.passed, "{report}");
    }

    #[test]
    fn table1_formulas_pass() {
        let report = verify_21_formulas(24);
        assert!(report.passed, "{report}");
    }

    #[test]
    fn pk_localizes_known_misprints() {
        let reports = verify_pk_each(30);
        for report in &reports {
            if report.name == "f_4_6" || report.name == "f_4_6_at_2" {
                // The published polynomials for these two rows do not expand
                // to the eta products; the first mismatch is the constant
                // term, which must be zero for a cusp form.
                let fail = report.first_failure.as_ref().expect("expected localized failure");
                assert_eq!(fail.index, 0, "{report}");
            } else {
                assert!(report.passed, "{report}");
            }
        }
        let combined = verify_pk(30);
        assert!(!combined.passed);
        assert_eq!(combined.first_failure.unwrap().index, 0);
    }

    #[test]
    fn pk_corrected_rows_hold() {
        // Independently derived expansions for the two misprinted rows; the
        // published errors are proportional (e_2 = -e_1 / 2) and cancel in
        // the G and H combinations, which is why those still pass above.
        let prec = 30;
        let prec24 = 24 * prec + 72;
        let t1 = theta_series(prec24);
        let t3 = theta_series(prec24 / 3 + 1).dilate(3);
        let t3sq = t3.mul(&t3);
        let p = t1
            .mul(&t1)
            .sub(&t3sq)
            .mul(&t3sq.scale(&int(2)).invert().unwrap())
            .truncate(prec24);
        let k4 = t3.pow(12).unwrap().mul(&t1.pow(-4).unwrap()).truncate(prec24);
        let corrected: [(&str, [Rat; 9]); 2] = [
            (
                "f_4_6",
                [
                    int(0), rat(1, 2), rat(5, 4), rat(-1, 2), rat(-5, 2),
                    rat(-1, 2), rat(5, 4), rat(1, 2), int(0),
                ],
            ),
            (
                "f_4_6_at_2",
                [
                    int(0), int(0), rat(1, 4), rat(3, 4), rat(5, 16),
                    rat(-5, 8), rat(-9, 16), rat(-1, 8), int(0),
                ],
            ),
        ];
        for (name, coeffs) in corrected {
            let mut s = Series24::zero(prec24);
            let mut power = Series24::one(prec24);
            for c in coeffs {
                s = s.add(&power.scale(&c));
                power = power.mul(&p).truncate(prec24);
            }
            let lhs = s.mul(&k4).truncate(prec24);
            let rhs = named_cusp_form(name).unwrap().expand(prec24);
            assert!(
                series_mismatch(name, &lhs, &rhs, 24 * prec).is_none(),
                "corrected {name} expansion failed"
            );
        }
    }

    #[test]
    fn ellipsoid_passes() {
        let sets = vec![vec![1, 1], vec![1, 3], vec![1, 2, 3]];
        let report = verify_ellipsoid(&sets, 12);
        assert!(report.passed, "{report}");
    }

    #[test]
    fn sample_formulas_pass() {
        let report = verify_sample_formulas(24);
        assert!(report.passed, "{report}");
    }

    #[test]
    fn count_profile_matches_count() {
        let form = MixedForm::mixed(&[2], &[1, 3], &[2, 6]);
        let profile = form.count_profile(20);
        for n in 0..=20 {
            assert_eq!(profile[n as usize], form.count(n), "n={n}");
        }
    }
}
