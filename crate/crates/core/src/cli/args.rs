use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{ArgGroup, Parser, ValueEnum};
use serde::Serialize;

use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::families::FamilyId;
use crate::reduction::IdentityVariant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Characteristic polynomial and closed form of one family member.
    Eval,
    /// Closed-form, oracle and induction checks over a sweep.
    Verify,
    /// Replay the block reduction of a family matrix.
    Reduce,
    /// Randomized exact check of the q-Racah diagonal identity.
    Identity,
    /// One row per dimension with the factored closed form.
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Parser)]
#[command(name = "sylvdet", version, about = "Exact checks of Sylvester-type tridiagonal determinants")]
#[command(group(ArgGroup::new("dims_group").args(["dim", "dims", "max_dim"])))]
pub struct Cli {
    #[arg(value_enum)]
    pub command: Command,

    /// Family name, or `all`.
    #[arg(long)]
    pub family: Option<String>,

    /// A single dimension.
    #[arg(long)]
    pub dim: Option<usize>,

    /// Inclusive dimension range `A..B`.
    #[arg(long)]
    pub dims: Option<String>,

    /// Dimensions `1..=K` (starting at the smallest valid dimension).
    #[arg(long)]
    pub max_dim: Option<usize>,

    /// Explicit parameter `name=value`, repeatable.
    #[arg(long = "param", value_name = "NAME=RAT")]
    pub params: Vec<String>,

    /// Sampled parameter sets per (family, dim).
    #[arg(long, default_value_t = 1)]
    pub samples: usize,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Random points per scalar identity check.
    #[arg(long, default_value_t = 20)]
    pub trials: usize,

    /// `N` for the scalar identity; checks `n = 0..N-1`.
    #[arg(long, default_value_t = 8)]
    pub max_n: usize,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Print every intermediate matrix of a reduction.
    #[arg(long)]
    pub trace: bool,

    /// Use the printed forms instead of the corrected ones.
    #[arg(long)]
    pub paper_literal: bool,

    /// Scalar identity subscript reading: `cn1` or `cN1`.
    #[arg(long, value_parser = parse_variant)]
    pub variant: Option<IdentityVariant>,

    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_variant(s: &str) -> std::result::Result<IdentityVariant, String> {
    IdentityVariant::parse(s).ok_or_else(|| format!("unknown variant `{s}` (expected cn1 or cN1)"))
}

/// Family selection after resolving `all`.
pub fn resolve_families(cli: &Cli) -> Result<Vec<FamilyId>> {
    let name = match (&cli.family, cli.command) {
        (Some(name), _) => name.as_str(),
        (None, Command::Verify) => "all",
        (None, Command::Identity) => "q-racah",
        (None, _) => return Err(Error::Shape(format!("{:?} needs --family", cli.command).to_lowercase())),
    };
    if name != "all" {
        let family: FamilyId = name.parse()?;
        if cli.command == Command::Identity && family != FamilyId::QRacah {
            return Err(Error::Unsupported("the scalar identity is defined for q-racah only".into()));
        }
        return Ok(vec![family]);
    }
    match cli.command {
        Command::Eval | Command::Identity => Err(Error::Shape(
            "--family all is not accepted by this command".into(),
        )),
        Command::Reduce => Ok(FamilyId::ALL.into_iter().filter(|f| f.has_reduction()).collect()),
        Command::Verify | Command::Table => Ok(FamilyId::ALL.to_vec()),
    }
}

/// Requested dimensions for one family. `--max-dim` starts at `floor`.
pub fn resolve_dims(cli: &Cli, floor: usize) -> Result<RangeInclusive<usize>> {
    let range = if let Some(d) = cli.dim {
        d..=d
    } else if let Some(spec) = &cli.dims {
        parse_range(spec)?
    } else if let Some(k) = cli.max_dim {
        floor..=k
    } else if cli.command == Command::Verify {
        floor..=10
    } else {
        return Err(Error::Shape("a dimension is required (--dim, --dims or --max-dim)".into()));
    };
    if *range.start() == 0 {
        return Err(Error::BadDimension { dim: 0, context: "dimensions start at 1".into() });
    }
    Ok(range)
}

pub fn parse_range(spec: &str) -> Result<RangeInclusive<usize>> {
    let bad = || Error::Shape(format!("bad range `{spec}` (expected A..B)"));
    let (lo, hi) = spec.split_once("..").ok_or_else(bad)?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

pub fn parse_param_pairs(raw: &[String]) -> Result<Vec<(String, Rational)>> {
    raw.iter()
        .map(|p| {
            let (name, value) = p
                .split_once('=')
                .ok_or_else(|| Error::Shape(format!("bad --param `{p}` (expected name=value)")))?;
            Ok((name.trim().to_string(), value.trim().parse()?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("sylvdet").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("1..6").unwrap(), 1..=6);
        assert_eq!(parse_range("2..=3").unwrap(), 2..=3);
        assert!(parse_range("4..2").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn dims_are_exclusive() {
        assert!(Cli::try_parse_from(["sylvdet", "eval", "--dim", "2", "--max-dim", "3"]).is_err());
    }

    #[test]
    fn family_defaults() {
        let cli = parse(&["verify"]);
        assert_eq!(resolve_families(&cli).unwrap().len(), FamilyId::ALL.len());
        assert_eq!(resolve_dims(&cli, 1).unwrap(), 1..=10);
        let cli = parse(&["reduce", "--family", "all", "--dim", "3"]);
        assert_eq!(resolve_families(&cli).unwrap().len(), 5);
        assert!(resolve_families(&parse(&["eval", "--dim", "2"])).is_err());
        assert!(resolve_families(&parse(&["eval", "--family", "all", "--dim", "2"])).is_err());
    }

    #[test]
    fn variants() {
        assert_eq!(parse(&["identity", "--variant", "cN1"]).variant, Some(IdentityVariant::CapitalN));
        assert!(Cli::try_parse_from(["sylvdet", "identity", "--variant", "cn2"]).is_err());
    }

    #[test]
    fn params() {
        let p = parse_param_pairs(&["p=1/3".into()]).unwrap();
        assert_eq!(p[0].0, "p");
        assert!(parse_param_pairs(&["p".into()]).is_err());
        assert!(parse_param_pairs(&["p=1/0".into()]).is_err());
    }
}
