//! Textual form descriptors: "tri:1^2 3^2", "st:1^1 3^1 ; 2^1 6^1",
//! "lt:2^1 ; 1^3 3^3", "mixed:2^1 ; 1^2 ; 2^1 6^1". Each component lists
//! base^multiplicity tokens; multiplicity 0 drops the base.

use crate::forms::MixedForm;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Triangular only: coefficients c.
    Tri,
    /// Squares and triangles: b ; c.
    St,
    /// Hexagonal and triangles: a ; c.
    Lt,
    /// All three: a ; b ; c.
    Mixed,
}

impl Family {
    pub fn tag(&self) -> &'static str {
        match self {
            Family::Tri => "tri",
            Family::St => "st",
            Family::Lt => "lt",
            Family::Mixed => "mixed",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DescriptorError {
    #[error("descriptor must look like family:components, got {0:?}")]
    MissingFamily(String),
    #[error("unknown family {0:?} (expected tri, st, lt or mixed)")]
    UnknownFamily(String),
    #[error("family {family} expects {expected} ';'-separated component lists, got {got}")]
    WrongComponentCount {
        family: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("cannot parse token {0:?} (expected base or base^multiplicity)")]
    BadToken(String),
    #[error("base must be positive in token {0:?}")]
    BadBase(String),
}

/// One component list "1^2 3^1" to an expanded coefficient list (1,1,3).
fn parse_component(text: &str) -> Result<Vec<i64>, DescriptorError> {
    let mut out = Vec::new();
    for tok in text.split_whitespace() {
        let (base, mult) = match tok.split_once('^') {
            Some((b, m)) => (
                b.parse::<i64>().map_err(|_| DescriptorError::BadToken(tok.into()))?,
                m.parse::<u32>().map_err(|_| DescriptorError::BadToken(tok.into()))?,
            ),
            None => (
                tok.parse::<i64>().map_err(|_| DescriptorError::BadToken(tok.into()))?,
                1,
            ),
        };
        if base <= 0 {
            return Err(DescriptorError::BadBase(tok.into()));
        }
        for _ in 0..mult {
            out.push(base);
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Parse a full descriptor into its family and form.
pub fn parse_form(text: &str) -> Result<(Family, MixedForm), DescriptorError> {
    let (family_tag, rest) = text
        .split_once(':')
        .ok_or_else(|| DescriptorError::MissingFamily(text.into()))?;
    let family = match family_tag.trim() {
        "tri" => Family::Tri,
        "st" => Family::St,
        "lt" => Family::Lt,
        "mixed" => Family::Mixed,
        other => return Err(DescriptorError::UnknownFamily(other.into())),
    };
    let parts: Vec<Vec<i64>> = rest
        .split(';')
        .map(parse_component)
        .collect::<Result<_, _>>()?;
    let expected = match family {
        Family::Tri => 1,
        Family::St | Family::Lt => 2,
        Family::Mixed => 3,
    };
    if parts.len() != expected {
        return Err(DescriptorError::WrongComponentCount {
            family: family.tag(),
            expected,
            got: parts.len(),
        });
    }
    let form = match family {
        Family::Tri => MixedForm::tri_only(&parts[0]),
        Family::St => MixedForm::st(&parts[0], &parts[1]),
        Family::Lt => MixedForm::lt(&parts[0], &parts[1]),
        Family::Mixed => MixedForm::mixed(&parts[0], &parts[1], &parts[2]),
    };
    Ok((family, form))
}

/// Collapse a sorted coefficient list back to base^multiplicity tokens.
fn render_component(coeffs: &[i64]) -> String {
    let mut out: Vec<String> = Vec::new();
    let mut i = 0;
    while i < coeffs.len() {
        let base = coeffs[i];
        let mut mult = 0;
        while i < coeffs.len() && coeffs[i] == base {
            mult += 1;
            i += 1;
        }
        out.push(format!("{base}^{mult}"));
    }
    out.join(" ")
}

/// Canonical descriptor text for a form in a given family.
pub fn render_form(family: Family, form: &MixedForm) -> String {
    let mut parts = Vec::new();
    match family {
        Family::Tri => parts.push(render_component(&form.tri)),
        Family::St => {
            parts.push(render_component(&form.squares));
            parts.push(render_component(&form.tri));
        }
        Family::Lt => {
            parts.push(render_component(&form.hex));
            parts.push(render_component(&form.tri));
        }
        Family::Mixed => {
            parts.push(render_component(&form.hex));
            parts.push(render_component(&form.squares));
            parts.push(render_component(&form.tri));
        }
    }
    format!("{}:{}", family.tag(), parts.join(" ; "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_families() {
        let (f, form) = parse_form("tri:1^2 3^2").unwrap();
        assert_eq!(f, Family::Tri);
        assert_eq!(form, MixedForm::tri_only(&[1, 1, 3, 3]));

        let (f, form) = parse_form("st:1^1 3^1 ; 2^1 6^1").unwrap();
        assert_eq!(f, Family::St);
        assert_eq!(form, MixedForm::st(&[1, 3], &[2, 6]));

        let (f, form) = parse_form("lt:2^1 ; 1^3 3^3").unwrap();
        assert_eq!(f, Family::Lt);
        assert_eq!(form, MixedForm::lt(&[2], &[1, 1, 1, 3, 3, 3]));

        let (f, form) = parse_form("mixed:2^1 ; 1^2 ; 2^1 6^1").unwrap();
        assert_eq!(f, Family::Mixed);
        assert_eq!(form, MixedForm::mixed(&[2], &[1, 1], &[2, 6]));
    }

    #[test]
    fn zero_multiplicity_drops_base() {
        let (_, form) = parse_form("tri:1^2 5^0 3^2").unwrap();
        assert_eq!(form, MixedForm::tri_only(&[1, 1, 3, 3]));
    }

    #[test]
    fn bare_base_means_multiplicity_one() {
        let (_, form) = parse_form("st:2 ; 1 3").unwrap();
        assert_eq!(form, MixedForm::st(&[2], &[1, 3]));
    }

    #[test]
    fn errors() {
        assert!(parse_form("1^2").is_err());
        assert!(parse_form("quad:1^2").is_err());
        assert!(parse_form("st:1^2").is_err());
        assert!(parse_form("tri:0^2").is_err());
        assert!(parse_form("tri:x^2").is_err());
    }

    #[test]
    fn round_trip() {
        for text in ["tri:1^2 3^2", "st:1^1 3^1 ; 2^1 6^1", "mixed:2^1 ; 1^2 ; 2^1 6^1"] {
            let (family, form) = parse_form(text).unwrap();
            assert_eq!(render_form(family, &form), text);
        }
    }
}
