//! Explicit ordered bases for the catalogued spaces of modular forms:
//! weight 2 and 3 at the levels used by the representation-number formulas,
//! plus weight 4 level 12. Elements are Eisenstein specs or eta combinations,
//! listed Eisenstein block first, then cusp block, in table order.

use crate::arith::KroneckerChar;
use crate::eisenstein::EisensteinSpec;
use crate::etaq::{named_cusp_form, EtaCombination};
use crate::qseries::Series24;

/// A catalogued space (k, N, chi).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceId {
    pub weight: u32,
    pub level: i64,
    pub character: KroneckerChar,
}

impl SpaceId {
    pub fn new(weight: u32, level: i64, character: KroneckerChar) -> Self {
        SpaceId {
            weight,
            level,
            character,
        }
    }
}

impl std::fmt::Display for SpaceId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "M_{}(Gamma_0({}), ({}/.) mod {})",
            self.weight, self.level, self.character.top, self.character.modulus
        )
    }
}

/// Where a basis element's expansion comes from.
#[derive(Debug, Clone, PartialEq)]
pub enum BasisSource {
    Eisenstein(EisensteinSpec),
    Eta(EtaCombination),
}

#[derive(Debug, Clone, PartialEq)]
pub struct BasisElement {
    pub label: String,
    pub source: BasisSource,
}

impl BasisElement {
    pub fn expand(&self, prec24: i64) -> Series24 {
        match &self.source {
            BasisSource::Eisenstein(spec) => spec
                .expand(prec24)
                .expect("catalogued Eisenstein specs are valid"),
            BasisSource::Eta(comb) => comb.expand(prec24),
        }
    }
}

/// An ordered basis with the Eisenstein/cusp split recorded.
#[derive(Debug, Clone, PartialEq)]
pub struct Basis {
    pub space: SpaceId,
    pub elements: Vec<BasisElement>,
    /// Length of the Eisenstein block; the cusp block is the rest.
    pub eisenstein_dim: usize,
}

impl Basis {
    pub fn dimension(&self) -> usize {
        self.elements.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BasisError {
    #[error("no catalogued basis for {0}")]
    UnknownSpace(String),
}

/// Character for a catalog tag at a given level.
pub(crate) fn tag_char(tag: &str, level: i64) -> KroneckerChar {
    match tag {
        "1" => KroneckerChar::one(),
        "chi0" => KroneckerChar::principal(level),
        _ => {
            let m: i64 = tag.strip_prefix("chi").unwrap().parse().unwrap();
            KroneckerChar::symbol(m)
        }
    }
}

fn phi_block(divisors: &[i64]) -> Vec<BasisElement> {
    divisors
        .iter()
        .map(|&b| BasisElement {
            label: format!("phi_1_{b}"),
            source: BasisSource::Eisenstein(EisensteinSpec::Phi(1, b)),
        })
        .collect()
}

/// One twisted-pair block "E_{k,chi,psi}(az), a in dils" per (chi, psi).
fn twisted_block(k: u32, pairs: &[(&str, &str)], dils: &[i64]) -> Vec<BasisElement> {
    let mut out = Vec::new();
    for &(chi, psi) in pairs {
        for &a in dils {
            let spec = EisensteinSpec::twisted(k, tag_char(chi, 0), tag_char(psi, 0));
            let (spec, suffix) = if a == 1 {
                (spec, String::new())
            } else {
                (spec.dilated(a), format!("_at_{a}"))
            };
            out.push(BasisElement {
                label: format!("E{k}_{chi}_{psi}{suffix}"),
                source: BasisSource::Eisenstein(spec),
            });
        }
    }
    out
}

fn eta_block(names_and_dils: &[(&str, i64)]) -> Vec<BasisElement> {
    names_and_dils
        .iter()
        .map(|&(name, a)| {
            let comb = named_cusp_form(name).expect("catalog names resolve");
            if a == 1 {
                BasisElement {
                    label: name.to_string(),
                    source: BasisSource::Eta(comb),
                }
            } else {
                let terms = comb
                    .terms
                    .into_iter()
                    .map(|(c, e)| (c, e.dilate(a)))
                    .collect();
                BasisElement {
                    label: format!("{name}_at_{a}"),
                    source: BasisSource::Eta(EtaCombination { terms }),
                }
            }
        })
        .collect()
}

/// The catalog tags with their expected (eisenstein, cusp) dimensions.
const CATALOG: &[(u32, i64, &str, usize, usize)] = &[
    (2, 6, "chi0", 3, 0),
    (2, 8, "chi0", 3, 0),
    (2, 8, "chi8", 2, 0),
    (2, 12, "chi0", 5, 0),
    (2, 12, "chi12", 4, 0),
    (2, 24, "chi0", 7, 1),
    (2, 24, "chi8", 4, 2),
    (2, 24, "chi12", 8, 0),
    (2, 24, "chi24", 4, 2),
    (3, 4, "chi-4", 2, 0),
    (3, 3, "chi-3", 2, 0),
    (3, 6, "chi-3", 4, 0),
    (3, 8, "chi-4", 4, 0),
    (3, 8, "chi-8", 2, 1),
    (3, 12, "chi-3", 6, 1),
    (3, 12, "chi-4", 4, 2),
    (3, 24, "chi-3", 8, 4),
    (3, 24, "chi-4", 8, 4),
    (3, 24, "chi-8", 4, 6),
    (3, 24, "chi-24", 4, 6),
    (4, 12, "chi0", 6, 3),
];

/// All catalogued spaces.
pub fn catalogued_spaces() -> Vec<SpaceId> {
    CATALOG
        .iter()
        .map(|&(k, n, tag, _, _)| SpaceId::new(k, n, tag_char(tag, n)))
        .collect()
}

fn build_blocks(k: u32, n: i64, tag: &str) -> (Vec<BasisElement>, Vec<BasisElement>) {
    match (k, n, tag) {
        (2, 6, "chi0") => (phi_block(&[2, 3, 6]), vec![]),
        (2, 8, "chi0") => (phi_block(&[2, 4, 8]), vec![]),
        (2, 8, "chi8") => (twisted_block(2, &[("1", "chi8"), ("chi8", "1")], &[1]), vec![]),
        (2, 12, "chi0") => (phi_block(&[2, 3, 4, 6, 12]), vec![]),
        (2, 12, "chi12") => (
            twisted_block(
                2,
                &[("1", "chi12"), ("chi12", "1"), ("chi-4", "chi-3"), ("chi-3", "chi-4")],
                &[1],
            ),
            vec![],
        ),
        (2, 24, "chi0") => (
            phi_block(&[2, 3, 4, 6, 8, 12, 24]),
            eta_block(&[("Delta_2_24_chi0", 1)]),
        ),
        (2, 24, "chi8") => (
            twisted_block(2, &[("1", "chi8"), ("chi8", "1")], &[1, 3]),
            eta_block(&[("Delta_2_24_chi8_1", 1), ("Delta_2_24_chi8_2", 1)]),
        ),
        (2, 24, "chi12") => (
            twisted_block(
                2,
                &[("1", "chi12"), ("chi12", "1"), ("chi-4", "chi-3"), ("chi-3", "chi-4")],
                &[1, 2],
            ),
            vec![],
        ),
        (2, 24, "chi24") => (
            twisted_block(
                2,
                &[("1", "chi24"), ("chi24", "1"), ("chi-8", "chi-3"), ("chi-3", "chi-8")],
                &[1],
            ),
            eta_block(&[("Delta_2_24_chi24_1", 1), ("Delta_2_24_chi24_2", 1)]),
        ),
        (3, 4, "chi-4") => (twisted_block(3, &[("1", "chi-4"), ("chi-4", "1")], &[1]), vec![]),
        (3, 3, "chi-3") => (twisted_block(3, &[("1", "chi-3"), ("chi-3", "1")], &[1]), vec![]),
        (3, 6, "chi-3") => (
            twisted_block(3, &[("1", "chi-3"), ("chi-3", "1")], &[1, 2]),
            vec![],
        ),
        (3, 8, "chi-4") => (
            twisted_block(3, &[("1", "chi-4"), ("chi-4", "1")], &[1, 2]),
            vec![],
        ),
        (3, 8, "chi-8") => (
            twisted_block(3, &[("1", "chi-8"), ("chi-8", "1")], &[1]),
            eta_block(&[("Delta_3_8_chi-8", 1)]),
        ),
        (3, 12, "chi-3") => (
            twisted_block(3, &[("1", "chi-3"), ("chi-3", "1")], &[1, 2, 4]),
            eta_block(&[("Delta_3_12_chi-3", 1)]),
        ),
        (3, 12, "chi-4") => (
            twisted_block(3, &[("1", "chi-4"), ("chi-4", "1")], &[1, 3]),
            eta_block(&[("Delta_3_12_chi-4_1", 1), ("Delta_3_12_chi-4_2", 1)]),
        ),
        (3, 24, "chi-3") => (
            twisted_block(3, &[("1", "chi-3"), ("chi-3", "1")], &[1, 2, 4, 8]),
            eta_block(&[
                ("Delta_3_12_chi-3", 1),
                ("Delta_3_12_chi-3", 2),
                ("Delta_3_24_chi-3_1", 1),
                ("Delta_3_24_chi-3_2", 1),
            ]),
        ),
        (3, 24, "chi-4") => (
            twisted_block(3, &[("1", "chi-4"), ("chi-4", "1")], &[1, 2, 3, 6]),
            eta_block(&[
                ("Delta_3_12_chi-4_1", 1),
                ("Delta_3_12_chi-4_1", 2),
                ("Delta_3_12_chi-4_2", 1),
                ("Delta_3_12_chi-4_2", 2),
            ]),
        ),
        (3, 24, "chi-8") => (
            twisted_block(3, &[("1", "chi-8"), ("chi-8", "1")], &[1, 3]),
            eta_block(&[
                ("Delta_3_8_chi-8", 1),
                ("Delta_3_8_chi-8", 3),
                ("Delta_3_24_chi-8_1", 1),
                ("Delta_3_24_chi-8_2", 1),
                ("Delta_3_24_chi-8_3", 1),
                ("Delta_3_24_chi-8_4", 1),
            ]),
        ),
        (3, 24, "chi-24") => (
            twisted_block(
                3,
                &[("1", "chi-24"), ("chi-24", "1"), ("chi-3", "chi8"), ("chi8", "chi-3")],
                &[1],
            ),
            eta_block(&[
                ("Delta_3_24_chi-24_1", 1),
                ("Delta_3_24_chi-24_2", 1),
                ("Delta_3_24_chi-24_3", 1),
                ("Delta_3_24_chi-24_4", 1),
                ("Delta_3_24_chi-24_5", 1),
                ("Delta_3_24_chi-24_6", 1),
            ]),
        ),
        (4, 12, "chi0") => {
            let eis = [1i64, 2, 3, 4, 6, 12]
                .iter()
                .map(|&d| {
                    let spec = EisensteinSpec::Classical(4);
                    let (spec, suffix) = if d == 1 {
                        (spec, String::new())
                    } else {
                        (spec.dilated(d), format!("_at_{d}"))
                    };
                    BasisElement {
                        label: format!("E4{suffix}"),
                        source: BasisSource::Eisenstein(spec),
                    }
                })
                .collect();
            (
                eis,
                eta_block(&[("f_4_6", 1), ("f_4_6_at_2", 1), ("f_4_12", 1)]),
            )
        }
        _ => unreachable!("catalog and build_blocks cover the same keys"),
    }
}

/// Ordered basis for a catalogued space.
pub fn basis_for(space: &SpaceId) -> Result<Basis, BasisError> {
    for &(k, n, tag, e_dim, s_dim) in CATALOG {
        if space.weight == k
            && space.level == n
            && space.character.eq_mod(&tag_char(tag, n), n)
        {
            let (eis, cusp) = build_blocks(k, n, tag);
            assert_eq!(eis.len(), e_dim);
            assert_eq!(cusp.len(), s_dim);
            let mut elements = eis;
            elements.extend(cusp);
            return Ok(Basis {
                space: space.clone(),
                elements,
                eisenstein_dim: e_dim,
            });
        }
    }
    Err(BasisError::UnknownSpace(space.to_string()))
}

/// Positive divisors of n in increasing order.
fn divisors(n: i64) -> Vec<i64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Column set used by the printed coefficient tables for a space.
///
/// The weight-2 principal-character tables are written over the spanning set
/// {E_2(d tau) : d | N} followed by the cusp block, not over the phi basis:
/// E_2 itself is only quasi-modular, and membership of each row in the
/// modular subspace shows up as the linear constraint sum_d t_d / d = 0 on
/// the printed vectors. The dilations E_2(d tau) are linearly independent as
/// q-series, so coordinates over this set are still unique. Every other
/// table uses the catalogued basis order directly.
pub fn table_columns(space: &SpaceId) -> Result<Vec<BasisElement>, BasisError> {
    let b = basis_for(space)?;
    let principal = space
        .character
        .eq_mod(&KroneckerChar::principal(space.level), space.level);
    if space.weight != 2 || !principal {
        return Ok(b.elements);
    }
    let mut cols: Vec<BasisElement> = divisors(space.level)
        .into_iter()
        .map(|d| {
            let spec = EisensteinSpec::QuasiE2;
            let (spec, suffix) = if d == 1 {
                (spec, String::new())
            } else {
                (spec.dilated(d), format!("_at_{d}"))
            };
            BasisElement {
                label: format!("E2{suffix}"),
                source: BasisSource::Eisenstein(spec),
            }
        })
        .collect();
    cols.extend_from_slice(&b.elements[b.eisenstein_dim..]);
    Ok(cols)
}

/// Sturm equality bound (with a safety margin of 1): two forms of this
/// weight/level agreeing on q^0..q^bound agree identically.
pub fn sturm_bound(weight: u32, level: i64) -> i64 {
    // index of Gamma_0(N) in SL_2(Z): N prod_{p | N} (1 + 1/p).
    let mut num = level;
    let mut den = 1i64;
    let mut n = level;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            num *= p + 1;
            den *= p;
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        num *= n + 1;
        den *= n;
    }
    let index = num / den;
    let k_index = weight as i64 * index;
    (k_index + 11).div_euclid(12) + 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::gen_divisor_sum;
    use crate::int;
    use crate::Rat;

    #[test]
    fn sturm_examples() {
        assert_eq!(sturm_bound(4, 12), 9);
        assert_eq!(sturm_bound(3, 24), 13);
        assert_eq!(sturm_bound(2, 6), 3);
    }

    #[test]
    fn catalog_shapes() {
        let b = basis_for(&SpaceId::new(2, 6, KroneckerChar::principal(6))).unwrap();
        let labels: Vec<&str> = b.elements.iter().map(|e| e.label.as_str()).collect();
        assert_eq!(labels, ["phi_1_2", "phi_1_3", "phi_1_6"]);

        let b = basis_for(&SpaceId::new(3, 24, KroneckerChar::symbol(-24))).unwrap();
        assert_eq!(b.dimension(), 10);
        assert_eq!(b.eisenstein_dim, 4);

        let b = basis_for(&SpaceId::new(4, 12, KroneckerChar::principal(12))).unwrap();
        assert_eq!(b.dimension(), 9);

        assert!(basis_for(&SpaceId::new(5, 7, KroneckerChar::one())).is_err());
    }

    #[test]
    fn all_spaces_expand() {
        for space in catalogued_spaces() {
            let b = basis_for(&space).unwrap();
            for el in &b.elements {
                let s = el.expand(24 * 5);
                // Expansions exist and live on the integer grid.
                assert!(s.offset24() % 24 == 0 || s.is_zero(), "{}", el.label);
            }
        }
    }

    #[test]
    fn eisenstein_coeffs_match_divisor_sums() {
        let b = basis_for(&SpaceId::new(2, 8, KroneckerChar::symbol(8))).unwrap();
        let s = b.elements[0].expand(24 * 10);
        let one = KroneckerChar::one();
        let chi8 = KroneckerChar::symbol(8);
        for n in 1..=9 {
            assert_eq!(
                s.coeff_q(n).unwrap(),
                Rat::from_integer(gen_divisor_sum(1, &one, &chi8, n))
            );
        }
    }

    #[test]
    fn bases_linearly_independent() {
        // Full column rank of the first (dim + 5) q-coefficients.
        for space in catalogued_spaces() {
            let b = basis_for(&space).unwrap();
            let rows = b.dimension() + 5;
            let cols: Vec<Vec<Rat>> = b
                .elements
                .iter()
                .map(|el| {
                    let s = el.expand(24 * (rows as i64 + 1));
                    (0..rows as i64).map(|n| s.coeff_q(n).unwrap()).collect()
                })
                .collect();
            let rank = crate::solve::column_rank(&cols);
            assert_eq!(rank, b.dimension(), "{space}");
        }
    }

    #[test]
    fn gh_cuspidal() {
        // G and H have vanishing constant terms and leading term q^1.
        for name in ["G", "H"] {
            let s = crate::etaq::named_cusp_form(name).unwrap().expand(24 * 3);
            assert_eq!(s.coeff_q(0).unwrap(), int(0), "{name}");
        }
    }
}
