//! Eta-quotients: the data type, the modularity/cuspidality criterion for
//! holomorphic eta-quotients on Gamma_0(M), series expansion, and the catalog
//! of named cusp forms used by the explicit bases.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::arith::KroneckerChar;
use crate::qseries::{eta_series, Series24};
use crate::{int, Rat};

/// prod_{delta | M} eta(delta tau)^{r_delta}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaQuotient {
    level: i64,
    exps: BTreeMap<i64, i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EtaError {
    #[error("delta {0} does not divide level {1}")]
    BadDivisor(i64, i64),
    #[error("cannot parse eta-quotient token {0:?}")]
    BadToken(String),
    #[error("unknown named form {0:?}")]
    UnknownName(String),
}

/// Verdict of the holomorphy criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremAVerdict {
    pub conditions_hold: bool,
    pub is_cusp: bool,
    pub weight: Rat,
    pub character: KroneckerChar,
}

impl EtaQuotient {
    /// Build from (delta, r_delta) pairs with an explicit level.
    pub fn new(level: i64, pairs: &[(i64, i64)]) -> Result<Self, EtaError> {
        let mut exps = BTreeMap::new();
        for &(delta, r) in pairs {
            if delta <= 0 || level % delta != 0 {
                return Err(EtaError::BadDivisor(delta, level));
            }
            if r != 0 {
                *exps.entry(delta).or_insert(0) += r;
            }
        }
        exps.retain(|_, r| *r != 0);
        Ok(EtaQuotient { level, exps })
    }

    /// Build with level = lcm of the deltas that occur.
    pub fn from_exps(pairs: &[(i64, i64)]) -> Self {
        let level = pairs
            .iter()
            .filter(|(_, r)| *r != 0)
            .fold(1i64, |a, (d, _)| a.lcm(d));
        EtaQuotient::new(level, pairs).expect("deltas divide their own lcm")
    }

    /// Parse the shorthand "1^2 2^-1 4^3" (whitespace-separated delta^r
    /// tokens; a bare "4" means 4^1).
    pub fn parse(text: &str) -> Result<Self, EtaError> {
        let mut pairs = Vec::new();
        for tok in text.split_whitespace() {
            let (d, r) = match tok.split_once('^') {
                Some((d, r)) => (
                    d.parse::<i64>().map_err(|_| EtaError::BadToken(tok.into()))?,
                    r.parse::<i64>().map_err(|_| EtaError::BadToken(tok.into()))?,
                ),
                None => (
                    tok.parse::<i64>().map_err(|_| EtaError::BadToken(tok.into()))?,
                    1,
                ),
            };
            if d <= 0 {
                return Err(EtaError::BadToken(tok.into()));
            }
            pairs.push((d, r));
        }
        Ok(EtaQuotient::from_exps(&pairs))
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn exps(&self) -> &BTreeMap<i64, i64> {
        &self.exps
    }

    /// Same quotient viewed on a (larger) level. The verdict of
    /// check_theorem_a depends on the level through both congruences and the
    /// cusp list, so the catalog pins it explicitly.
    pub fn with_level(&self, level: i64) -> Result<Self, EtaError> {
        let pairs: Vec<(i64, i64)> = self.exps.iter().map(|(&d, &r)| (d, r)).collect();
        EtaQuotient::new(level, &pairs)
    }

    /// Replace tau by d*tau: every delta is multiplied by d.
    pub fn dilate(&self, d: i64) -> Self {
        let pairs: Vec<(i64, i64)> = self.exps.iter().map(|(&k, &r)| (d * k, r)).collect();
        EtaQuotient::new(self.level * d, &pairs).expect("scaled deltas divide scaled level")
    }

    /// Weight as a rational: (1/2) sum r_delta.
    pub fn weight(&self) -> Rat {
        Rat::new(self.exps.values().sum::<i64>().into(), 2.into())
    }

    /// Leading exponent on the 1/24 grid: sum delta * r_delta.
    pub fn offset24(&self) -> i64 {
        self.exps.iter().map(|(&d, &r)| d * r).sum()
    }

    /// Holomorphy criterion: weight a positive integer, both congruences
    /// mod 24, and nonnegative order at every cusp. The order at the cusp
    /// class of d is proportional to sum gcd(d, delta)^2 r_delta / delta,
    /// which depends on d only through gcd(d, M), so checking d | M is
    /// exhaustive. The character is ((-1)^k s / .), s = prod delta^{|r_delta|}.
    pub fn check_theorem_a(&self) -> TheoremAVerdict {
        let m = self.level;
        let weight = self.weight();
        // s matters only modulo squares; fold each delta in by the parity of
        // its exponent to keep the product small.
        let mut s: i64 = 1;
        for (&d, &r) in &self.exps {
            if r.abs() % 2 == 1 {
                s *= d;
            }
        }
        let k_is_pos_int = weight.is_integer() && weight.numer().is_positive();
        let mut top = s;
        if k_is_pos_int && weight.numer().is_odd() {
            top = -top;
        }
        let character = KroneckerChar { top, modulus: m };

        let mut conditions_hold = k_is_pos_int;
        let sum_dr: i64 = self.exps.iter().map(|(&d, &r)| d * r).sum();
        let sum_mdr: i64 = self.exps.iter().map(|(&d, &r)| (m / d) * r).sum();
        if sum_dr.rem_euclid(24) != 0 || sum_mdr.rem_euclid(24) != 0 {
            conditions_hold = false;
        }
        let mut is_cusp = conditions_hold;
        if conditions_hold {
            for d in 1..=m {
                if m % d != 0 {
                    continue;
                }
                let order: Rat = self
                    .exps
                    .iter()
                    .map(|(&delta, &r)| {
                        let g = d.gcd(&delta);
                        Rat::new((g * g * r).into(), delta.into())
                    })
                    .sum();
                if order.is_negative() {
                    conditions_hold = false;
                    is_cusp = false;
                    break;
                }
                if order.is_zero() {
                    is_cusp = false;
                }
            }
        }
        TheoremAVerdict {
            conditions_hold,
            is_cusp,
            weight,
            character,
        }
    }

    /// Expand to a Series24 with precision prec24 on the 1/24 grid.
    pub fn expand(&self, prec24: i64) -> Series24 {
        // Work with enough slack that inversions (which cost twice the
        // factor's offset) cannot eat into the requested precision.
        let slack: i64 = self.exps.iter().map(|(&d, &r)| d * r.abs()).sum();
        let p = prec24.max(1) + slack + 24;
        let mut acc = Series24::one(p);
        for (&d, &r) in &self.exps {
            let base = eta_series(p / d + 2).dilate(d);
            let factor = base.pow(r).expect("eta leads with 1");
            acc = acc.mul(&factor);
        }
        acc.truncate(prec24)
    }
}

impl std::fmt::Display for EtaQuotient {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (&d, &r) in &self.exps {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{d}^{r}")?;
        }
        Ok(())
    }
}

/// A formal Q-linear combination of eta-quotients, enough to house the
/// two-term cusp form f_{4,12} and the combinations G, H.
#[derive(Debug, Clone, PartialEq)]
pub struct EtaCombination {
    pub terms: Vec<(Rat, EtaQuotient)>,
}

impl EtaCombination {
    pub fn single(e: EtaQuotient) -> Self {
        EtaCombination {
            terms: vec![(int(1), e)],
        }
    }

    pub fn expand(&self, prec24: i64) -> Series24 {
        let mut acc = Series24::zero(prec24);
        for (coeff, e) in &self.terms {
            acc = acc.add(&e.expand(prec24).scale(coeff));
        }
        acc
    }

    /// Scaled sum of combinations.
    pub fn linear(parts: &[(Rat, &EtaCombination)]) -> Self {
        let mut terms = Vec::new();
        for (c, comb) in parts {
            for (c2, e) in &comb.terms {
                terms.push((c * c2, e.clone()));
            }
        }
        EtaCombination { terms }
    }
}

/// Shorthand catalog entries for the named weight-2 and weight-3 cusp forms.
const DELTA_CATALOG: &[(&str, &str)] = &[
    ("Delta_2_24_chi0", "2^1 4^1 6^1 12^1"),
    ("Delta_2_24_chi8_1", "1^1 2^-1 3^-1 6^4 8^2 12^-1"),
    ("Delta_2_24_chi8_2", "1^2 4^-1 6^-1 8^1 12^4 24^-1"),
    ("Delta_2_24_chi24_1", "1^1 2^-1 3^-1 4^1 6^4 12^-2 24^2"),
    ("Delta_2_24_chi24_2", "1^2 2^-2 4^4 6^1 8^-1 12^-1 24^1"),
    ("Delta_3_8_chi-8", "1^2 2^1 4^1 8^2"),
    ("Delta_3_12_chi-3", "2^3 6^3"),
    ("Delta_3_12_chi-4_1", "1^4 2^-1 4^1 6^1 12^1"),
    ("Delta_3_12_chi-4_2", "1^1 2^1 3^1 6^-1 12^4"),
    ("Delta_3_24_chi-3_1", "1^3 2^1 3^-1 4^4 6^1 8^-3 24^1"),
    ("Delta_3_24_chi-3_2", "1^-3 2^4 3^1 4^1 8^3 12^1 24^-1"),
    ("Delta_3_24_chi-8_1", "1^-2 2^4 4^4 6^1 8^-2 12^1"),
    ("Delta_3_24_chi-8_2", "1^2 4^3 6^3 8^-1 12^-2 24^1"),
    ("Delta_3_24_chi-8_3", "2^3 3^2 4^-2 8^1 12^3 24^-1"),
    ("Delta_3_24_chi-8_4", "1^1 2^1 3^-1 4^1 6^2 8^1 12^2 24^-1"),
    ("Delta_3_24_chi-24_1", "1^-3 2^9 3^-1 4^-3 6^4 12^-2 24^2"),
    ("Delta_3_24_chi-24_2", "1^-2 2^8 6^1 8^-1 12^-1 24^1"),
    ("Delta_3_24_chi-24_3", "1^1 2^-5 3^-1 4^11 6^4 8^-4 12^-2 24^2"),
    ("Delta_3_24_chi-24_4", "1^2 2^-6 4^14 6^1 8^-5 12^-1 24^1"),
    ("Delta_3_24_chi-24_5", "1^1 2^-1 3^-5 4^1 6^14 12^-6 24^2"),
    ("Delta_3_24_chi-24_6", "1^2 2^-2 3^-4 4^4 6^11 8^-1 12^-5 24^1"),
];

/// The (weight, level, character top) triple encoded in a Delta name.
pub fn delta_signature(name: &str) -> Option<(i64, i64, i64)> {
    let rest = name.strip_prefix("Delta_")?;
    let mut it = rest.split('_');
    let k = it.next()?.parse().ok()?;
    let n = it.next()?.parse().ok()?;
    let chi = it.next()?.strip_prefix("chi")?;
    let top = if chi == "0" { 1 } else { chi.parse().ok()? };
    Some((k, n, top))
}

/// All Delta names of the catalog, in listing order.
pub fn delta_names() -> Vec<&'static str> {
    DELTA_CATALOG.iter().map(|(n, _)| *n).collect()
}

/// Look up a named cusp form (any Delta, f_4_6, f_4_6_at_2, f_4_12, G, H).
pub fn named_cusp_form(name: &str) -> Result<EtaCombination, EtaError> {
    if let Some((_, text)) = DELTA_CATALOG.iter().find(|(n, _)| *n == name) {
        let (_, level, _) = delta_signature(name).expect("catalog names are well formed");
        let e = EtaQuotient::parse(text).unwrap().with_level(level).unwrap();
        return Ok(EtaCombination::single(e));
    }
    let f46 = || EtaQuotient::parse("1^2 2^2 3^2 6^2").unwrap();
    let f412 = || EtaCombination {
        terms: vec![
            (int(1), EtaQuotient::parse("1^-1 2^2 3^3 4^3 6^2 12^-1").unwrap()),
            (int(-1), EtaQuotient::parse("1^3 2^2 3^-1 4^-1 6^2 12^3").unwrap()),
        ],
    };
    match name {
        "f_4_6" => Ok(EtaCombination::single(f46())),
        "f_4_6_at_2" => Ok(EtaCombination::single(f46().dilate(2))),
        "f_4_12" => Ok(f412()),
        "G" => Ok(EtaCombination::linear(&[
            (crate::rat(-1, 6), &EtaCombination::single(f46())),
            (crate::rat(-1, 3), &EtaCombination::single(f46().dilate(2))),
            (crate::rat(1, 6), &f412()),
        ])),
        "H" => Ok(EtaCombination::linear(&[
            (crate::rat(1, 2), &EtaCombination::single(f46())),
            (int(1), &EtaCombination::single(f46().dilate(2))),
            (crate::rat(1, 2), &f412()),
        ])),
        _ => Err(EtaError::UnknownName(name.into())),
    }
}

/// q^(h/8) Psi_C as an eta-quotient: prod eta^2(2 c_i tau) / eta(c_i tau).
pub fn psi_product_quotient(c: &[i64]) -> EtaQuotient {
    let mut pairs = Vec::new();
    for &ci in c {
        pairs.push((2 * ci, 2));
        pairs.push((ci, -1));
    }
    EtaQuotient::from_exps(&pairs)
}

/// q^(h/8) psi_{s,t} for squares b and triangles c:
/// prod eta^5(2 b_i tau) / (eta^2(b_i tau) eta^2(4 b_i tau)) times the
/// triangular product.
pub fn st_product_quotient(b: &[i64], c: &[i64]) -> EtaQuotient {
    let mut pairs = Vec::new();
    for &bi in b {
        pairs.push((2 * bi, 5));
        pairs.push((bi, -2));
        pairs.push((4 * bi, -2));
    }
    for &ci in c {
        pairs.push((2 * ci, 2));
        pairs.push((ci, -1));
    }
    EtaQuotient::from_exps(&pairs)
}
