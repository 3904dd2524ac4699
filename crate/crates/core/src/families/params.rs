use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::Rational;
use crate::error::{Error, Result};

/// The eight determinant families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyId {
    SylvesterD,
    SylvesterB,
    SylvesterA,
    Krawtchouk,
    DualHahn,
    Hahn,
    Racah,
    QRacah,
}

impl FamilyId {
    pub const ALL: [FamilyId; 8] = [
        FamilyId::SylvesterD,
        FamilyId::SylvesterB,
        FamilyId::SylvesterA,
        FamilyId::Krawtchouk,
        FamilyId::DualHahn,
        FamilyId::Hahn,
        FamilyId::Racah,
        FamilyId::QRacah,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::SylvesterD => "sylvester-d",
            FamilyId::SylvesterB => "sylvester-b",
            FamilyId::SylvesterA => "sylvester-a",
            FamilyId::Krawtchouk => "krawtchouk",
            FamilyId::DualHahn => "dual-hahn",
            FamilyId::Hahn => "hahn",
            FamilyId::Racah => "racah",
            FamilyId::QRacah => "q-racah",
        }
    }

    /// Families whose diagonal obeys `b_n = -a_n - c_n`.
    pub fn is_ansatz(self) -> bool {
        matches!(
            self,
            FamilyId::Krawtchouk
                | FamilyId::DualHahn
                | FamilyId::Hahn
                | FamilyId::Racah
                | FamilyId::QRacah
        )
    }

    /// Parameter names accepted on the command line, in canonical order.
    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            FamilyId::SylvesterD | FamilyId::SylvesterA => &[],
            FamilyId::SylvesterB => &["a"],
            FamilyId::Krawtchouk => &["p"],
            FamilyId::DualHahn => &["gamma", "delta"],
            FamilyId::Hahn => &["alpha", "beta"],
            FamilyId::Racah => &["alpha", "beta", "gamma"],
            FamilyId::QRacah => &["q", "a", "b", "c"],
        }
    }

    /// Whether a block reduction is defined for this family.
    pub fn has_reduction(self) -> bool {
        matches!(
            self,
            FamilyId::SylvesterD
                | FamilyId::SylvesterB
                | FamilyId::Krawtchouk
                | FamilyId::DualHahn
                | FamilyId::QRacah
        )
    }

    /// Smallest dimension at which the induction step applies.
    pub fn min_step_dim(self) -> usize {
        match self {
            FamilyId::SylvesterD => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyId::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// Parameters of one family member. Derived quantities (the Racah `delta`,
/// the q-Racah `d`) depend on the dimension and are computed on demand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilyParams {
    SylvesterD,
    SylvesterB { a: Rational },
    SylvesterA,
    Krawtchouk { p: Rational },
    DualHahn { gamma: Rational, delta: Rational },
    Hahn { alpha: Rational, beta: Rational },
    Racah { alpha: Rational, beta: Rational, gamma: Rational },
    QRacah { q: Rational, a: Rational, b: Rational, c: Rational },
}

impl FamilyParams {
    pub fn family(&self) -> FamilyId {
        match self {
            FamilyParams::SylvesterD => FamilyId::SylvesterD,
            FamilyParams::SylvesterB { .. } => FamilyId::SylvesterB,
            FamilyParams::SylvesterA => FamilyId::SylvesterA,
            FamilyParams::Krawtchouk { .. } => FamilyId::Krawtchouk,
            FamilyParams::DualHahn { .. } => FamilyId::DualHahn,
            FamilyParams::Hahn { .. } => FamilyId::Hahn,
            FamilyParams::Racah { .. } => FamilyId::Racah,
            FamilyParams::QRacah { .. } => FamilyId::QRacah,
        }
    }

    /// Values in the order of [`FamilyId::param_names`].
    pub fn values(&self) -> Vec<&Rational> {
        match self {
            FamilyParams::SylvesterD | FamilyParams::SylvesterA => vec![],
            FamilyParams::SylvesterB { a } => vec![a],
            FamilyParams::Krawtchouk { p } => vec![p],
            FamilyParams::DualHahn { gamma, delta } => vec![gamma, delta],
            FamilyParams::Hahn { alpha, beta } => vec![alpha, beta],
            FamilyParams::Racah { alpha, beta, gamma } => vec![alpha, beta, gamma],
            FamilyParams::QRacah { q, a, b, c } => vec![q, a, b, c],
        }
    }

    /// Assemble parameters from `name=value` pairs; every name the family
    /// needs must be present exactly once.
    pub fn from_pairs(family: FamilyId, pairs: &[(String, Rational)]) -> Result<Self> {
        let names = family.param_names();
        for (i, (name, _)) in pairs.iter().enumerate() {
            if !names.contains(&name.as_str()) {
                return Err(Error::UnknownParam { family, name: name.clone() });
            }
            if pairs[..i].iter().any(|(n, _)| n == name) {
                return Err(Error::DuplicateParam(name.clone()));
            }
        }
        let get = |name: &'static str| -> Result<Rational> {
            pairs
                .iter()
                .find(|(n, _)| n == name)
                .map(|(_, v)| v.clone())
                .ok_or(Error::MissingParam { family, name })
        };
        Ok(match family {
            FamilyId::SylvesterD => FamilyParams::SylvesterD,
            FamilyId::SylvesterA => FamilyParams::SylvesterA,
            FamilyId::SylvesterB => FamilyParams::SylvesterB { a: get("a")? },
            FamilyId::Krawtchouk => FamilyParams::Krawtchouk { p: get("p")? },
            FamilyId::DualHahn => FamilyParams::DualHahn {
                gamma: get("gamma")?,
                delta: get("delta")?,
            },
            FamilyId::Hahn => FamilyParams::Hahn { alpha: get("alpha")?, beta: get("beta")? },
            FamilyId::Racah => FamilyParams::Racah {
                alpha: get("alpha")?,
                beta: get("beta")?,
                gamma: get("gamma")?,
            },
            FamilyId::QRacah => FamilyParams::QRacah {
                q: get("q")?,
                a: get("a")?,
                b: get("b")?,
                c: get("c")?,
            },
        })
    }

    /// Build from values in canonical order; panics on a length mismatch.
    pub(crate) fn from_values(family: FamilyId, v: Vec<Rational>) -> Self {
        let names = family.param_names();
        assert_eq!(names.len(), v.len());
        let pairs: Vec<(String, Rational)> =
            names.iter().map(|n| n.to_string()).zip(v).collect();
        Self::from_pairs(family, &pairs).expect("canonical parameter list")
    }

    /// Racah `delta`, derived from `beta + delta + 1 = -N`.
    pub fn racah_delta(&self, dim: usize) -> Option<Rational> {
        match self {
            FamilyParams::Racah { beta, .. } => {
                Some(-(beta + Rational::from(dim as i64)))
            }
            _ => None,
        }
    }
}

impl fmt::Display for FamilyParams {
    /// `name=value` pairs separated by spaces, or `-` when there are none.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.family().param_names();
        if names.is_empty() {
            return f.write_str("-");
        }
        let parts: Vec<String> = names
            .iter()
            .zip(self.values())
            .map(|(n, v)| format!("{n}={v}"))
            .collect();
        f.write_str(&parts.join(" "))
    }
}
