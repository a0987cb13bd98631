//! Truncated formal power series on the q^(1/24) exponent grid, plus the core
//! generating-function expansions theta, Psi, the hexagonal theta F, and eta.
//!
//! Precision semantics: `prec24` is an exclusive bound. Coefficients of
//! q^(e/24) with e >= prec24 are unknown, never silently zero; asking for one
//! is an error. Precision propagates pessimistically (min for addition, min
//! over cross terms for multiplication).

use crate::Rat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Errors raised by series operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("coefficient of q^({0}/24) requested but series is only known below q^({1}/24)")]
    InsufficientPrecision(i64, i64),
    #[error("cannot invert a series that is zero through its precision")]
    ZeroLeadingCoefficient,
}

/// A truncated series sum c_i q^((offset24+i)/24) with exact rational
/// coefficients.
///
/// Canonical form: the first stored coefficient is nonzero, or the series is
/// zero through prec24 (stored with empty `coeffs` and `offset24 == prec24`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series24 {
    offset24: i64,
    prec24: i64,
    coeffs: Vec<Rat>,
}

impl Series24 {
    /// Build a series from a dense coefficient list starting at `offset24`.
    /// Trailing coefficients beyond `prec24` are truncated; leading zeros are
    /// trimmed into the offset.
    pub fn new(offset24: i64, coeffs: Vec<Rat>, prec24: i64) -> Self {
        if offset24 >= prec24 {
            return Self::zero(prec24);
        }
        let mut s = Series24 {
            offset24,
            prec24,
            coeffs,
        };
        s.coeffs.truncate((s.prec24 - s.offset24) as usize);
        s.normalize();
        s
    }

    /// The zero series, known through `prec24`.
    pub fn zero(prec24: i64) -> Self {
        Series24 {
            offset24: prec24,
            prec24,
            coeffs: Vec::new(),
        }
    }

    /// The constant series 1, known through `prec24`.
    pub fn one(prec24: i64) -> Self {
        Self::monomial(0, Rat::one(), prec24)
    }

    /// c q^(e24/24), known through `prec24`.
    pub fn monomial(e24: i64, c: Rat, prec24: i64) -> Self {
        if c.is_zero() || e24 >= prec24 {
            return Self::zero(prec24);
        }
        Series24 {
            offset24: e24,
            prec24,
            coeffs: vec![c],
        }
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().position(|c| !c.is_zero());
        match lead {
            Some(k) => {
                if k > 0 {
                    self.coeffs.drain(..k);
                    self.offset24 += k as i64;
                }
            }
            None => {
                self.coeffs.clear();
                self.offset24 = self.prec24;
            }
        }
    }

    pub fn offset24(&self) -> i64 {
        self.offset24
    }

    pub fn prec24(&self) -> i64 {
        self.prec24
    }

    /// True when every known coefficient is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of q^(e24/24). Exponents below the stored range are known
    /// zeros; exponents at or beyond prec24 are an error.
    pub fn coeff24(&self, e24: i64) -> Result<Rat, SeriesError> {
        if e24 >= self.prec24 {
            return Err(SeriesError::InsufficientPrecision(e24, self.prec24));
        }
        if e24 < self.offset24 {
            return Ok(Rat::zero());
        }
        // Trailing zeros between the stored range and prec24 may be elided.
        Ok(self
            .coeffs
            .get((e24 - self.offset24) as usize)
            .cloned()
            .unwrap_or_else(Rat::zero))
    }

    /// Coefficient of the integer power q^n.
    pub fn coeff_q(&self, n: i64) -> Result<Rat, SeriesError> {
        self.coeff24(24 * n)
    }

    /// Known nonzero terms as (exponent24, coefficient) pairs.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rat)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.offset24 + i as i64, c))
    }

    /// Multiply by q^(e24/24): shifts every exponent and the precision bound.
    pub fn shift24(&self, e24: i64) -> Self {
        Series24 {
            offset24: self.offset24 + e24,
            prec24: self.prec24 + e24,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Restrict the known range to `prec24` (no-op if already tighter).
    pub fn truncate(&self, prec24: i64) -> Self {
        if prec24 >= self.prec24 {
            return self.clone();
        }
        Series24::new(self.offset24, self.coeffs.clone(), prec24)
    }

    pub fn add(&self, other: &Series24) -> Self {
        let prec = self.prec24.min(other.prec24);
        if self.is_zero() {
            return other.truncate(prec);
        }
        if other.is_zero() {
            return self.truncate(prec);
        }
        let off = self.offset24.min(other.offset24);
        let len = (prec - off).max(0) as usize;
        let mut coeffs = vec![Rat::zero(); len];
        for (e, c) in self.terms() {
            if e < prec {
                coeffs[(e - off) as usize] += c;
            }
        }
        for (e, c) in other.terms() {
            if e < prec {
                coeffs[(e - off) as usize] += c;
            }
        }
        Series24::new(off, coeffs, prec)
    }

    pub fn neg(&self) -> Self {
        Series24 {
            offset24: self.offset24,
            prec24: self.prec24,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Series24) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.prec24);
        }
        Series24 {
            offset24: self.offset24,
            prec24: self.prec24,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Cauchy product. The result is known below min(prec_a + off_b,
    /// prec_b + off_a): the unknown tail of one factor first contaminates the
    /// product at its precision bound plus the other factor's leading
    /// exponent.
    pub fn mul(&self, other: &Series24) -> Self {
        let prec = (self.prec24 + other.offset24).min(other.prec24 + self.offset24);
        if self.is_zero() || other.is_zero() {
            return Self::zero(prec);
        }
        let off = self.offset24 + other.offset24;
        let len = (prec - off).max(0) as usize;
        let mut coeffs = vec![Rat::zero(); len];
        let a: Vec<(i64, &Rat)> = self.terms().collect();
        let b: Vec<(i64, &Rat)> = other.terms().collect();
        for &(ea, ca) in &a {
            for &(eb, cb) in &b {
                let e = ea + eb;
                if e >= prec {
                    break;
                }
                coeffs[(e - off) as usize] += ca * cb;
            }
        }
        Series24::new(off, coeffs, prec)
    }

    /// Multiplicative inverse. The leading coefficient must be nonzero; the
    /// result keeps the same number of known terms (relative precision).
    pub fn invert(&self) -> Result<Self, SeriesError> {
        if self.is_zero() {
            return Err(SeriesError::ZeroLeadingCoefficient);
        }
        let n = (self.prec24 - self.offset24) as usize;
        // Support stride of the unit part: the inverse lives on the same
        // subgrid, so the recurrence runs on the decimated sequence.
        let mut g: i64 = 0;
        for (e, _) in self.terms() {
            g = g.gcd(&(e - self.offset24));
        }
        let lead = self.coeffs[0].clone();
        let out_off = -self.offset24;
        let out_prec = out_off + n as i64;
        if g == 0 {
            // Pure monomial.
            return Ok(Series24::new(out_off, vec![lead.recip()], out_prec));
        }
        let m = n as i64 / g + if n as i64 % g != 0 { 1 } else { 0 };
        let u: Vec<Rat> = (0..m)
            .map(|i| {
                let idx = (i * g) as usize;
                if idx < self.coeffs.len() {
                    self.coeffs[idx].clone()
                } else {
                    Rat::zero()
                }
            })
            .collect();
        let mut inv = vec![Rat::zero(); m as usize];
        inv[0] = lead.recip();
        for k in 1..m as usize {
            let mut acc = Rat::zero();
            for j in 1..=k {
                if !u[j].is_zero() && !inv[k - j].is_zero() {
                    acc += &u[j] * &inv[k - j];
                }
            }
            inv[k] = -(acc * &inv[0]);
        }
        let mut coeffs = vec![Rat::zero(); n];
        for (k, c) in inv.into_iter().enumerate() {
            let idx = k as i64 * g;
            if idx < n as i64 {
                coeffs[idx as usize] = c;
            }
        }
        Ok(Series24::new(out_off, coeffs, out_prec))
    }

    /// Substitute q -> q^d: every exponent and the precision bound scale by d.
    /// The gaps introduced are exact zeros, so the result is known through
    /// d * prec24.
    pub fn dilate(&self, d: i64) -> Self {
        assert!(d >= 1, "dilation factor must be positive");
        if d == 1 {
            return self.clone();
        }
        let prec = self.prec24 * d;
        if self.is_zero() {
            return Self::zero(prec);
        }
        let off = self.offset24 * d;
        let len = (prec - off) as usize;
        let mut coeffs = vec![Rat::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * d as usize] = c.clone();
        }
        Series24::new(off, coeffs, prec)
    }

    /// Integer power; negative exponents go through `invert`.
    pub fn pow(&self, e: i64) -> Result<Self, SeriesError> {
        if e < 0 {
            return self.invert()?.pow(-e);
        }
        if e == 0 {
            return Ok(Series24::one(self.prec24 - self.offset24));
        }
        // mul's min-rule tracks precision; start from an effectively exact 1.
        let mut acc = Series24::one(i64::MAX / 8);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        Ok(acc)
    }

    /// Exact coefficient agreement for all exponents e24 < bound24.
    pub fn equal_through(&self, other: &Series24, bound24: i64) -> Result<bool, SeriesError> {
        if self.prec24 < bound24 {
            return Err(SeriesError::InsufficientPrecision(bound24, self.prec24));
        }
        if other.prec24 < bound24 {
            return Err(SeriesError::InsufficientPrecision(bound24, other.prec24));
        }
        for e in self.offset24.min(other.offset24)..bound24 {
            if self.coeff24(e)? != other.coeff24(e)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// First exponent where the two series disagree (below bound24), if any.
    pub fn first_difference(
        &self,
        other: &Series24,
        bound24: i64,
    ) -> Result<Option<(i64, Rat, Rat)>, SeriesError> {
        if self.prec24 < bound24 {
            return Err(SeriesError::InsufficientPrecision(bound24, self.prec24));
        }
        if other.prec24 < bound24 {
            return Err(SeriesError::InsufficientPrecision(bound24, other.prec24));
        }
        for e in self.offset24.min(other.offset24)..bound24 {
            let a = self.coeff24(e)?;
            let b = other.coeff24(e)?;
            if a != b {
                return Ok(Some((e, a, b)));
            }
        }
        Ok(None)
    }
}

/// JSON shape: {"offset24": int, "prec24": int, "coeffs": ["p/q", ...]}.
#[derive(Serialize, Deserialize)]
struct SeriesJson {
    offset24: i64,
    prec24: i64,
    coeffs: Vec<String>,
}

/// Canonical lowest-terms string for a rational: "p" when integral, "p/q"
/// otherwise.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse "p" or "p/q" into a rational.
pub fn rat_from_string(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rat::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().ok()?;
            Some(Rat::from_integer(p))
        }
    }
}

impl Series24 {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(SeriesJson {
            offset24: self.offset24,
            prec24: self.prec24,
            coeffs: self.coeffs.iter().map(rat_to_string).collect(),
        })
        .expect("series serialization cannot fail")
    }

    pub fn from_json(v: &serde_json::Value) -> Option<Self> {
        let j: SeriesJson = serde_json::from_value(v.clone()).ok()?;
        let coeffs = j
            .coeffs
            .iter()
            .map(|s| rat_from_string(s))
            .collect::<Option<Vec<_>>>()?;
        Some(Series24::new(j.offset24, coeffs, j.prec24))
    }
}

impl fmt::Display for Series24 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms().take(12) {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if e == 0 {
                write!(f, "{}", rat_to_string(c))?;
            } else if e % 24 == 0 {
                write!(f, "{}*q^{}", rat_to_string(c), e / 24)?;
            } else {
                write!(f, "{}*q^({}/24)", rat_to_string(c), e)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^({}/24))", self.prec24)
    }
}

fn isqrt(n: i64) -> i64 {
    if n < 0 {
        return -1;
    }
    let mut r = (n as f64).sqrt() as i64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// eta(tau) = q^(1/24) prod (1 - q^n), by Euler's pentagonal number theorem.
pub fn eta_series(prec24: i64) -> Series24 {
    assert!(prec24 > 1);
    let n = (prec24 - 1) as usize;
    let mut coeffs = vec![Rat::zero(); n];
    // Pentagonal numbers k(3k-1)/2 for k in Z carry coefficient (-1)^k.
    let mut k: i64 = 0;
    loop {
        let mut hit = false;
        for kk in [k, -k] {
            let g = kk * (3 * kk - 1) / 2;
            let e = 24 * g;
            if e < n as i64 {
                hit = true;
                let sign = if kk.rem_euclid(2) == 0 {
                    Rat::one()
                } else {
                    -Rat::one()
                };
                coeffs[e as usize] = sign;
            }
            if kk == 0 {
                break;
            }
        }
        if !hit && k > 0 {
            break;
        }
        k += 1;
    }
    Series24::new(1, coeffs, prec24)
}

/// theta(tau) = sum_{n in Z} q^(n^2).
pub fn theta_series(prec24: i64) -> Series24 {
    assert!(prec24 > 0);
    let mut coeffs = vec![Rat::zero(); prec24 as usize];
    coeffs[0] = Rat::one();
    let mut n: i64 = 1;
    while 24 * n * n < prec24 {
        coeffs[(24 * n * n) as usize] = crate::int(2);
        n += 1;
    }
    Series24::new(0, coeffs, prec24)
}

/// Psi(tau) = sum_{n >= 0} q^(T_n), T_n = n(n+1)/2.
pub fn psi_series(prec24: i64) -> Series24 {
    assert!(prec24 > 0);
    let mut coeffs = vec![Rat::zero(); prec24 as usize];
    let mut n: i64 = 0;
    loop {
        let t = 24 * n * (n + 1) / 2;
        if t >= prec24 {
            break;
        }
        coeffs[t as usize] = Rat::one();
        n += 1;
    }
    Series24::new(0, coeffs, prec24)
}

/// F(tau) = sum_{m,n in Z} q^(m^2 + mn + n^2).
///
/// Box bound: m^2 + mn + n^2 >= (m^2 + n^2)/2, so any pair representing a
/// value <= N has |m|, |n| <= sqrt(2N).
pub fn hex_theta_series(prec24: i64) -> Series24 {
    assert!(prec24 > 0);
    let nmax = (prec24 - 1) / 24;
    let bound = isqrt(2 * nmax);
    let mut coeffs = vec![Rat::zero(); prec24 as usize];
    for m in -bound..=bound {
        for n in -bound..=bound {
            let v = m * m + m * n + n * n;
            if 24 * v < prec24 {
                coeffs[(24 * v) as usize] += Rat::one();
            }
        }
    }
    Series24::new(0, coeffs, prec24)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{int, rat};

    fn series_q(coeffs: &[i64], prec_q: i64) -> Series24 {
        let mut c = vec![Rat::zero(); (24 * prec_q) as usize];
        for (i, &x) in coeffs.iter().enumerate() {
            c[24 * i] = int(x);
        }
        Series24::new(0, c, 24 * prec_q)
    }

    #[test]
    fn add_identity_and_inverse() {
        let f = series_q(&[1, 1], 10);
        let z = Series24::zero(240);
        assert_eq!(f.add(&z), f);
        assert!(f.add(&f.neg()).is_zero());
    }

    #[test]
    fn add_takes_min_precision() {
        let a = series_q(&[1, 1], 10);
        let b = series_q(&[1], 5);
        let s = a.add(&b);
        assert_eq!(s.prec24(), 120);
        assert_eq!(s.coeff_q(0).unwrap(), int(2));
        assert_eq!(s.coeff_q(1).unwrap(), int(1));
        assert!(s.coeff_q(5).is_err());
    }

    #[test]
    fn mul_exponent_cancellation() {
        let a = Series24::monomial(-3, Rat::one(), 240);
        let b = Series24::monomial(3, Rat::one(), 240);
        let p = a.mul(&b);
        assert_eq!(p.coeff24(0).unwrap(), Rat::one());
        assert_eq!(p.offset24(), 0);
    }

    #[test]
    fn psi_squared_coefficient() {
        let psi = psi_series(240);
        let p = psi.mul(&psi);
        // T_a + T_b = 2 only via (1,1).
        assert_eq!(p.coeff_q(2).unwrap(), int(1));
    }

    #[test]
    fn psi_theta_identity_short() {
        let prec = 24 * 60;
        let psi = psi_series(prec);
        let theta = theta_series(prec);
        let lhs = psi.mul(&psi);
        let rhs = theta.mul(&psi_series(prec / 2 + 24).dilate(2));
        assert!(lhs.equal_through(&rhs, 24 * 50).unwrap());
    }

    #[test]
    fn dilate_basics() {
        let f = series_q(&[1, 1], 10);
        let g = f.dilate(2);
        assert_eq!(g.coeff_q(0).unwrap(), int(1));
        assert_eq!(g.coeff_q(1).unwrap(), int(0));
        assert_eq!(g.coeff_q(2).unwrap(), int(1));
        assert_eq!(f.dilate(1), f);
        let eta = eta_series(240);
        assert_eq!(eta.dilate(2).offset24(), 2);
    }

    #[test]
    fn invert_geometric() {
        let one_minus_q = series_q(&[1, -1], 10);
        let inv = one_minus_q.invert().unwrap();
        for n in 0..8 {
            assert_eq!(inv.coeff_q(n).unwrap(), int(1));
        }
        let p = one_minus_q.mul(&inv);
        assert!(p.equal_through(&Series24::one(120), 120).unwrap());
    }

    #[test]
    fn invert_with_offset() {
        let f = series_q(&[1, -1], 10).shift24(1);
        let inv = f.invert().unwrap();
        assert_eq!(inv.offset24(), -1);
        assert_eq!(inv.coeff24(-1 + 24).unwrap(), int(1));
    }

    #[test]
    fn invert_theta_roundtrip() {
        let theta = theta_series(240);
        let p = theta.mul(&theta.invert().unwrap());
        assert!(p.equal_through(&Series24::one(240), 240).unwrap());
    }

    #[test]
    fn eta_pentagonal() {
        let eta = eta_series(24 * 30);
        assert_eq!(eta.coeff24(1).unwrap(), int(1));
        // prod(1-q^n) coefficients sit at 1 + 24k.
        assert_eq!(eta.coeff24(1 + 24).unwrap(), int(-1));
        assert_eq!(eta.coeff24(1 + 24 * 5).unwrap(), int(1));
        assert_eq!(eta.coeff24(1 + 24 * 3).unwrap(), int(0));
        assert_eq!(eta.coeff24(1 + 24 * 7).unwrap(), int(1));
    }

    #[test]
    fn theta_psi_hex_leading_terms() {
        let theta = theta_series(240);
        let want = [1, 2, 0, 0, 2];
        for (n, w) in want.iter().enumerate() {
            assert_eq!(theta.coeff_q(n as i64).unwrap(), int(*w));
        }
        let psi = psi_series(24 * 7);
        let want = [1, 1, 0, 1, 0, 0, 1];
        for (n, w) in want.iter().enumerate() {
            assert_eq!(psi.coeff_q(n as i64).unwrap(), int(*w));
        }
        let hex = hex_theta_series(240);
        assert_eq!(hex.coeff_q(0).unwrap(), int(1));
        assert_eq!(hex.coeff_q(1).unwrap(), int(6));
        assert_eq!(hex.coeff_q(3).unwrap(), int(6));
        assert_eq!(hex.coeff_q(4).unwrap(), int(6));
    }

    #[test]
    fn equal_through_contract() {
        let theta = theta_series(48);
        let psi = psi_series(48);
        assert!(!theta.equal_through(&psi, 48).unwrap());
        assert!(theta.equal_through(&theta, 48).unwrap());
        assert!(theta.equal_through(&psi, 100).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let mut f = series_q(&[3, 0, -2], 4);
        f = f.scale(&rat(1, 6)).shift24(-5);
        let j = f.to_json();
        let g = Series24::from_json(&j).unwrap();
        assert_eq!(f, g);
    }
}
