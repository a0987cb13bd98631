//! The four form families (triangular, hex+triangular, square+triangular,
//! full mixed), their modular classification, and independent brute-force
//! representation-number oracles. The oracles enumerate solution vectors
//! directly; no series are involved.

use crate::arith::KroneckerChar;
use crate::qseries::{hex_theta_series, psi_series, theta_series, Series24};
use crate::Rat;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

/// Coefficient lists (a_i | b_i | c_i) for a mixed form
/// sum a_i (x^2+xy+y^2) + sum b_i y^2 + sum c_i T_z.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MixedForm {
    pub hex: Vec<i64>,
    pub squares: Vec<i64>,
    pub tri: Vec<i64>,
}

/// Modularity verdict for q^(h/8) * generating function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularClassification {
    /// Integral weight m, with 2m = 2u + v + k.
    pub weight: i64,
    pub level: i64,
    pub character: KroneckerChar,
    /// 3h: the prefactor q^(h/8) in units of 1/24.
    pub q_prefactor24: i64,
    /// Whether the prefactored series is a modular form (h = 0 mod 8).
    pub modular: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormError {
    #[error("parity violation: {0}")]
    ParityViolation(String),
}

fn lcm_all(xs: &[i64]) -> i64 {
    xs.iter().fold(1i64, |a, b| a.lcm(b))
}

impl MixedForm {
    pub fn tri_only(c: &[i64]) -> Self {
        MixedForm {
            hex: vec![],
            squares: vec![],
            tri: c.to_vec(),
        }
    }

    pub fn st(b: &[i64], c: &[i64]) -> Self {
        MixedForm {
            hex: vec![],
            squares: b.to_vec(),
            tri: c.to_vec(),
        }
    }

    pub fn lt(a: &[i64], c: &[i64]) -> Self {
        MixedForm {
            hex: a.to_vec(),
            squares: vec![],
            tri: c.to_vec(),
        }
    }

    pub fn mixed(a: &[i64], b: &[i64], c: &[i64]) -> Self {
        MixedForm {
            hex: a.to_vec(),
            squares: b.to_vec(),
            tri: c.to_vec(),
        }
    }

    /// h = sum of the triangular coefficients.
    pub fn h(&self) -> i64 {
        self.tri.iter().sum()
    }

    /// Weight, level, character and modularity of q^(h/8) times the
    /// generating function.
    pub fn classify(&self) -> Result<ModularClassification, FormError> {
        let u = self.hex.len() as i64;
        let v = self.squares.len() as i64;
        let k = self.tri.len() as i64;
        if (v + k) % 2 != 0 {
            return Err(FormError::ParityViolation(format!(
                "v + k = {} must be even",
                v + k
            )));
        }
        if u > 0 && v == 0 && k % 2 != 0 {
            return Err(FormError::ParityViolation(format!("k = {k} must be even")));
        }
        let weight = u + (v + k) / 2;
        let mut level = 1i64;
        if u > 0 {
            level = level.lcm(&(3 * lcm_all(&self.hex)));
        }
        if v > 0 {
            level = level.lcm(&(4 * lcm_all(&self.squares)));
        }
        if k > 0 {
            level = level.lcm(&(2 * lcm_all(&self.tri)));
        }
        // Character: ((-1)^((v+k)/2) * 4 prod(b) prod(c) / .), with 8 in place
        // of 4 when v and k are both odd, times (./3) when u is odd.
        let mut top: i64 = 1;
        if v + k > 0 {
            let four_or_eight = if v % 2 == 1 && k % 2 == 1 { 8 } else { 4 };
            let prod: i64 = self.squares.iter().product::<i64>() * self.tri.iter().product::<i64>();
            top = four_or_eight * prod;
            if ((v + k) / 2) % 2 == 1 {
                top = -top;
            }
        }
        if u % 2 == 1 {
            top *= -3;
        }
        Ok(ModularClassification {
            weight,
            level,
            character: KroneckerChar { top, modulus: level },
            q_prefactor24: 3 * self.h(),
            modular: self.h() % 8 == 0,
        })
    }

    /// Generating function as a series on the integer grid: coefficient of
    /// q^n is the representation number of n.
    pub fn gen_series(&self, prec24: i64) -> Series24 {
        let mut s = Series24::one(prec24);
        for &a in &self.hex {
            s = s.mul(&hex_theta_series(prec24 / a + 1).dilate(a));
        }
        for &b in &self.squares {
            s = s.mul(&theta_series(prec24 / b + 1).dilate(b));
        }
        for &c in &self.tri {
            s = s.mul(&psi_series(prec24 / c + 1).dilate(c));
        }
        s.truncate(prec24)
    }

    /// Brute-force representation count by nested enumeration over all
    /// variables.
    pub fn count(&self, n: i64) -> u64 {
        count_hex_part(&self.hex, &self.squares, &self.tri, n)
    }

    /// Representation counts for every n in 0..=n_max at once. Each variable
    /// is enumerated into its own integer count histogram and the histograms
    /// are convolved, which agrees with `count` term by term but avoids
    /// re-enumerating the full product for every n.
    pub fn count_profile(&self, n_max: i64) -> Vec<u64> {
        let len = (n_max + 1).max(1) as usize;
        let mut acc = vec![0u64; len];
        acc[0] = 1;
        let mut fold = |hist: Vec<u64>| {
            let mut next = vec![0u64; len];
            for (i, &x) in acc.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (j, &y) in hist.iter().enumerate() {
                    if i + j < len {
                        next[i + j] += x * y;
                    }
                }
            }
            acc = next;
        };
        for &a in &self.hex {
            let mut hist = vec![0u64; len];
            let mut bound = 1i64;
            while a * (bound * bound) < 2 * n_max {
                bound += 1;
            }
            for m in -bound..=bound {
                for l in -bound..=bound {
                    let v = a * (m * m + m * l + l * l);
                    if (0..=n_max).contains(&v) {
                        hist[v as usize] += 1;
                    }
                }
            }
            fold(hist);
        }
        for &b in &self.squares {
            let mut hist = vec![0u64; len];
            let mut y = 0i64;
            while b * y * y <= n_max {
                hist[(b * y * y) as usize] += if y == 0 { 1 } else { 2 };
                y += 1;
            }
            fold(hist);
        }
        for &c in &self.tri {
            let mut hist = vec![0u64; len];
            let mut z = 0i64;
            while c * z * (z + 1) / 2 <= n_max {
                hist[(c * z * (z + 1) / 2) as usize] += 1;
                z += 1;
            }
            fold(hist);
        }
        acc
    }
}

/// delta_k(C; n): representations of n by sum c_i T_{z_i}, z_i >= 0.
pub fn count_triangular(c: &[i64], n: i64) -> u64 {
    if n < 0 {
        return 0;
    }
    match c.split_first() {
        None => (n == 0) as u64,
        Some((&c0, rest)) => {
            let mut total = 0;
            let mut z = 0i64;
            loop {
                let t = c0 * z * (z + 1) / 2;
                if t > n {
                    break;
                }
                total += count_triangular(rest, n - t);
                z += 1;
            }
            total
        }
    }
}

/// r_v(B; n): representations of n by sum b_i y_i^2 over signed integers.
pub fn count_squares_signed(b: &[i64], n: i64) -> u64 {
    if n < 0 {
        return 0;
    }
    match b.split_first() {
        None => (n == 0) as u64,
        Some((&b0, rest)) => {
            let mut total = count_squares_signed(rest, n);
            let mut y = 1i64;
            while b0 * y * y <= n {
                total += 2 * count_squares_signed(rest, n - b0 * y * y);
                y += 1;
            }
            total
        }
    }
}

/// q_k(C; n): representations of n by sum c_i y_i^2 with y_i positive odd.
pub fn count_odd_squares(c: &[i64], n: i64) -> u64 {
    if n < 0 {
        return 0;
    }
    match c.split_first() {
        None => (n == 0) as u64,
        Some((&c0, rest)) => {
            let mut total = 0;
            let mut y = 1i64;
            while c0 * y * y <= n {
                total += count_odd_squares(rest, n - c0 * y * y);
                y += 2;
            }
            total
        }
    }
}

/// Number of (m, l) pairs with m^2 + ml + l^2 = n.
///
/// Box bound: m^2 + ml + l^2 >= (m^2 + l^2)/2, so |m|, |l| <= sqrt(2n).
pub fn count_hex_pairs(n: i64) -> u64 {
    if n < 0 {
        return 0;
    }
    if n == 0 {
        return 1;
    }
    let mut bound = 1i64;
    while bound * bound < 2 * n {
        bound += 1;
    }
    let mut total = 0;
    for m in -bound..=bound {
        for l in -bound..=bound {
            if m * m + m * l + l * l == n {
                total += 1;
            }
        }
    }
    total
}

fn count_hex_part(a: &[i64], b: &[i64], c: &[i64], n: i64) -> u64 {
    if n < 0 {
        return 0;
    }
    match a.split_first() {
        None => count_square_part(b, c, n),
        Some((&a0, rest)) => {
            let mut total = 0;
            let mut w = 0i64;
            while a0 * w <= n {
                let pairs = count_hex_pairs(w);
                if pairs > 0 {
                    total += pairs * count_hex_part(rest, b, c, n - a0 * w);
                }
                w += 1;
            }
            total
        }
    }
}

fn count_square_part(b: &[i64], c: &[i64], n: i64) -> u64 {
    match b.split_first() {
        None => count_triangular(c, n),
        Some((&b0, rest)) => {
            let mut total = count_square_part(rest, c, n);
            let mut y = 1i64;
            while b0 * y * y <= n {
                total += 2 * count_square_part(rest, c, n - b0 * y * y);
                y += 1;
            }
            total
        }
    }
}

/// Lattice points of Z^k inside the ellipsoid sum c_i (z_i - 1/2)^2 <= R^2
/// (boundary included), by direct enumeration. Scaling by 4 turns the
/// condition into sum c_i w_i^2 <= 4 R^2 over odd integers w_i = 2 z_i - 1.
pub fn ellipsoid_lattice_count(c: &[i64], r2: &Rat) -> u64 {
    let four_r2 = r2 * crate::int(4);
    fn rec(c: &[i64], budget: &Rat) -> u64 {
        if budget.is_negative() {
            return 0;
        }
        match c.split_first() {
            None => 1,
            Some((&c0, rest)) => {
                let mut total = 0;
                let mut w = 1i64;
                loop {
                    let used = crate::int(c0 * w * w);
                    if &used > budget {
                        break;
                    }
                    // w and -w (i.e. z and 1-z) give the same value.
                    total += 2 * rec(rest, &(budget - used));
                    w += 2;
                }
                total
            }
        }
    }
    rec(c, &four_r2)
}

/// Closed-form side of the ellipsoid count: 2^k sum_{n=n0}^{floor(R^2/2 - h/8)}
/// delta_k(C; n). The published statement starts the sum at n = 1; starting at
/// n = 0 includes the innermost shell (the 2^k points nearest the center).
pub fn ellipsoid_shell_sum(c: &[i64], r2: &Rat, include_center: bool) -> u64 {
    let h = c.iter().sum::<i64>();
    let bound = r2 / crate::int(2) - Rat::new(h.into(), 8.into());
    let nmax = bound.floor().to_integer().to_i64().unwrap_or(-1);
    if nmax < 0 {
        return 0;
    }
    let start = if include_center { 0 } else { 1 };
    let mut total: u64 = 0;
    for n in start..=nmax {
        total += count_triangular(c, n);
    }
    total << c.len()
}
