//! Eisenstein series expansions: the classical E_k, the quasimodular E_2,
//! the weight-2 combinations phi_{a,b}, and generalized Eisenstein series
//! attached to a pair of real primitive characters.

use num_traits::One;

use crate::arith::{bernoulli, gen_bernoulli, gen_divisor_sum, sigma, KroneckerChar};
use crate::qseries::Series24;
use crate::{int, Rat};

/// Recipe for one Eisenstein-type series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EisensteinSpec {
    /// Normalized E_k for the full modular group, k >= 4 even.
    Classical(u32),
    /// E_2 = 1 - 24 sum sigma(n) q^n; quasimodular, only useful inside phi.
    QuasiE2,
    /// phi_{a,b} = (b E_2(b tau) - a E_2(a tau)) / (b - a), a < b.
    Phi(i64, i64),
    /// E_{k,chi,psi}: constant term -B_{k,psi}/2k present only when chi is
    /// the modulus-1 character; q^n coefficient sigma_{k-1;chi,psi}(n).
    Twisted {
        k: u32,
        chi: KroneckerChar,
        psi: KroneckerChar,
    },
    /// inner(d tau).
    Dilated(Box<EisensteinSpec>, i64),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EisensteinError {
    #[error("classical E_k needs even k >= 4, got {0}")]
    BadWeight(u32),
    #[error("phi needs 0 < a < b, got ({0}, {1})")]
    InvalidPair(i64, i64),
    #[error("parity violation: chi(-1) psi(-1) != (-1)^k for k = {0}")]
    ParityViolation(u32),
    #[error("dilation factor must be positive, got {0}")]
    BadDilation(i64),
}

fn e2_series(prec24: i64) -> Series24 {
    let nmax = prec24 / 24;
    let mut coeffs = vec![int(1)];
    for n in 1..=nmax {
        coeffs.push(Rat::from_integer(sigma(1, n) * (-24)));
    }
    Series24::new(0, coeffs_spread(coeffs), prec24)
}

/// Lay integer-grid coefficients onto the 1/24 grid.
fn coeffs_spread(by_n: Vec<Rat>) -> Vec<Rat> {
    let mut out = Vec::with_capacity(by_n.len() * 24);
    for (i, c) in by_n.into_iter().enumerate() {
        if i > 0 {
            for _ in 0..23 {
                out.push(Rat::from_integer(0.into()));
            }
        }
        out.push(c);
    }
    out
}

impl EisensteinSpec {
    pub fn twisted(k: u32, chi: KroneckerChar, psi: KroneckerChar) -> Self {
        EisensteinSpec::Twisted { k, chi, psi }
    }

    pub fn dilated(self, d: i64) -> Self {
        EisensteinSpec::Dilated(Box::new(self), d)
    }

    /// Exact q-expansion through prec24 on the 1/24 grid.
    pub fn expand(&self, prec24: i64) -> Result<Series24, EisensteinError> {
        match self {
            EisensteinSpec::Classical(k) => {
                if *k < 4 || k % 2 != 0 {
                    return Err(EisensteinError::BadWeight(*k));
                }
                let factor = -int(2 * *k as i64) / bernoulli(*k);
                let nmax = prec24 / 24;
                let mut by_n = vec![int(1)];
                for n in 1..=nmax {
                    by_n.push(&factor * Rat::from_integer(sigma(*k - 1, n)));
                }
                Ok(Series24::new(0, coeffs_spread(by_n), prec24))
            }
            EisensteinSpec::QuasiE2 => Ok(e2_series(prec24)),
            EisensteinSpec::Phi(a, b) => {
                if !(0 < *a && a < b) {
                    return Err(EisensteinError::InvalidPair(*a, *b));
                }
                let ea = e2_series(prec24 / a + 1).dilate(*a).scale(&int(*a));
                let eb = e2_series(prec24 / b + 1).dilate(*b).scale(&int(*b));
                let denom = int(b - a);
                Ok(eb.sub(&ea).scale(&(Rat::one() / denom)).truncate(prec24))
            }
            EisensteinSpec::Twisted { k, chi, psi } => {
                if chi.parity() * psi.parity() != if k % 2 == 0 { 1 } else { -1 } {
                    return Err(EisensteinError::ParityViolation(*k));
                }
                let nmax = prec24 / 24;
                let constant = if chi.modulus <= 1 {
                    -gen_bernoulli(*k, psi) / int(2 * *k as i64)
                } else {
                    int(0)
                };
                let mut by_n = vec![constant];
                for n in 1..=nmax {
                    by_n.push(Rat::from_integer(gen_divisor_sum(*k - 1, chi, psi, n)));
                }
                Ok(Series24::new(0, coeffs_spread(by_n), prec24))
            }
            EisensteinSpec::Dilated(inner, d) => {
                if *d <= 0 {
                    return Err(EisensteinError::BadDilation(*d));
                }
                Ok(inner.expand(prec24 / d + 1)?.dilate(*d).truncate(prec24))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_e4_e6() {
        let e4 = EisensteinSpec::Classical(4).expand(24 * 3).unwrap();
        assert_eq!(e4.coeff_q(0).unwrap(), int(1));
        assert_eq!(e4.coeff_q(1).unwrap(), int(240));
        assert_eq!(e4.coeff_q(2).unwrap(), int(2160));
        let e6 = EisensteinSpec::Classical(6).expand(24 * 3).unwrap();
        assert_eq!(e6.coeff_q(1).unwrap(), int(-504));
        assert!(EisensteinSpec::Classical(3).expand(24).is_err());
    }

    #[test]
    fn phi_1_2() {
        let phi = EisensteinSpec::Phi(1, 2).expand(24 * 3).unwrap();
        assert_eq!(phi.coeff_q(0).unwrap(), int(1));
        assert_eq!(phi.coeff_q(1).unwrap(), int(24));
        assert_eq!(phi.coeff_q(2).unwrap(), int(24));
        assert!(EisensteinSpec::Phi(2, 2).expand(24).is_err());
    }

    #[test]
    fn twisted_constant_and_coeffs() {
        // E_{3,1,chi_{-4}}: constant -B_{3,chi_{-4}}/6.
        let chi4 = KroneckerChar::symbol(-4);
        let spec = EisensteinSpec::twisted(3, KroneckerChar::one(), chi4.clone());
        let s = spec.expand(24 * 6).unwrap();
        let expected = -gen_bernoulli(3, &chi4) / int(6);
        assert_eq!(s.coeff_q(0).unwrap(), expected);
        for n in 1..=5 {
            assert_eq!(
                s.coeff_q(n).unwrap(),
                Rat::from_integer(gen_divisor_sum(2, &KroneckerChar::one(), &chi4, n))
            );
        }
        // Nontrivial chi kills the constant term.
        let spec = EisensteinSpec::twisted(3, chi4.clone(), KroneckerChar::one());
        assert_eq!(spec.expand(24).unwrap().coeff_q(0).unwrap(), int(0));
        // Parity violation: chi_{-4} odd, psi trivial, k even.
        assert!(
            EisensteinSpec::twisted(2, chi4, KroneckerChar::one())
                .expand(24)
                .is_err()
        );
    }

    #[test]
    fn twisted_trivial_reduces_to_classical() {
        // E_{k,1,1} = -(B_k / 2k) E_k for even k >= 4.
        for k in [4u32, 6, 8] {
            let twisted = EisensteinSpec::twisted(k, KroneckerChar::one(), KroneckerChar::one())
                .expand(24 * 30)
                .unwrap();
            let scale = -bernoulli(k) / int(2 * k as i64);
            let classical = EisensteinSpec::Classical(k)
                .expand(24 * 30)
                .unwrap()
                .scale(&scale);
            assert!(twisted.equal_through(&classical, 24 * 29).unwrap());
        }
    }

    #[test]
    fn dilation() {
        let e4d3 = EisensteinSpec::Classical(4).dilated(3).expand(24 * 7).unwrap();
        assert_eq!(e4d3.coeff_q(0).unwrap(), int(1));
        assert_eq!(e4d3.coeff_q(1).unwrap(), int(0));
        assert_eq!(e4d3.coeff_q(3).unwrap(), int(240));
        assert_eq!(e4d3.coeff_q(6).unwrap(), int(2160));
    }

    #[test]
    fn twisted_matches_divisor_loop() {
        // Independent divisor loop against the expansion, through n = 200.
        let chi8 = KroneckerChar::symbol(8);
        let chi_m8 = KroneckerChar::symbol(-8);
        let spec = EisensteinSpec::twisted(3, chi8.clone(), chi_m8.clone());
        let s = spec.expand(24 * 201).unwrap();
        for n in 1..=200i64 {
            let mut acc = num_bigint::BigInt::from(0);
            for d in 1..=n {
                if n % d == 0 {
                    acc += chi_m8.eval(d) * chi8.eval(n / d) * d * d;
                }
            }
            assert_eq!(s.coeff_q(n).unwrap(), Rat::from_integer(acc), "n = {n}");
        }
    }
}
