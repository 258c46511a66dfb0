//! Run configuration: defaults, a flat `key = value` file, and command-line
//! overrides, merged in that order.
//!
//! ```text
//! # comment
//! claims = EQ_DNSQUARE, THM51
//! n_max = 12
//! primes = 3,5,7
//! format = jsonl
//! no_timing = true
//! ```
//!
//! Recognized keys: `claims`, `n_max`, `m_max`, `r_max`, `x_min`, `x_max`,
//! `primes`, `format`, `output`, `parallelism`, `no_timing`, `seed`,
//! `thm51_samples`.

use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use thiserror::Error;

use crate::exact::is_prime;
use crate::verifier::{Bounds, ClaimId, UnknownClaim};

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error(transparent)]
    UnknownClaim(#[from] UnknownClaim),
    #[error("cannot read config file {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}:{line}: expected `key = value`")]
    Syntax { path: PathBuf, line: usize },
    #[error("unknown config key `{0}`")]
    UnknownKey(String),
    #[error("invalid value `{value}` for `{key}`")]
    BadValue { key: String, value: String },
    #[error("{0} must be at least 1")]
    NotPositive(&'static str),
    #[error("x_min ({0}) exceeds x_max ({1})")]
    EmptyXRange(i64, i64),
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("no primes given")]
    NoPrimes,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Jsonl,
}

impl FromStr for OutputFormat {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "text" => Ok(OutputFormat::Text),
            "jsonl" => Ok(OutputFormat::Jsonl),
            _ => Err(()),
        }
    }
}

/// Claim selection: everything, or an explicit list.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum ClaimSelection {
    #[default]
    All,
    List(Vec<ClaimId>),
}

impl ClaimSelection {
    pub fn parse(s: &str) -> Result<Self, UnknownClaim> {
        let items: Vec<&str> = s
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .collect();
        if items.iter().any(|t| t.eq_ignore_ascii_case("all")) {
            return Ok(ClaimSelection::All);
        }
        items
            .into_iter()
            .map(str::parse)
            .collect::<Result<Vec<_>, _>>()
            .map(ClaimSelection::List)
    }

    pub fn claims(&self) -> Vec<ClaimId> {
        match self {
            ClaimSelection::All => ClaimId::ALL.to_vec(),
            ClaimSelection::List(v) => v.clone(),
        }
    }
}

/// Partial settings from one source; `None` means "not set here".
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Overrides {
    pub claims: Option<String>,
    pub n_max: Option<u32>,
    pub m_max: Option<u32>,
    pub r_max: Option<u32>,
    pub x_min: Option<i64>,
    pub x_max: Option<i64>,
    pub primes: Option<String>,
    pub format: Option<String>,
    pub output: Option<PathBuf>,
    pub parallelism: Option<usize>,
    pub no_timing: Option<bool>,
    pub seed: Option<u64>,
    pub thm51_samples: Option<usize>,
}

fn parse_value<T: FromStr>(key: &str, value: &str) -> Result<T, ConfigError> {
    value.trim().parse().map_err(|_| ConfigError::BadValue {
        key: key.to_string(),
        value: value.to_string(),
    })
}

fn parse_bool(key: &str, value: &str) -> Result<bool, ConfigError> {
    match value.trim().to_ascii_lowercase().as_str() {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        _ => Err(ConfigError::BadValue {
            key: key.to_string(),
            value: value.to_string(),
        }),
    }
}

impl Overrides {
    pub fn from_file(path: &Path) -> Result<Self, ConfigError> {
        let text = fs::read_to_string(path).map_err(|source| ConfigError::Read {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse_str(&text, path)
    }

    pub fn parse_str(text: &str, path: &Path) -> Result<Self, ConfigError> {
        let mut o = Overrides::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| ConfigError::Syntax {
                path: path.to_path_buf(),
                line: i + 1,
            })?;
            let key = key.trim().replace('-', "_");
            let value = value.trim();
            match key.as_str() {
                "claims" => o.claims = Some(value.to_string()),
                "n_max" => o.n_max = Some(parse_value(&key, value)?),
                "m_max" => o.m_max = Some(parse_value(&key, value)?),
                "r_max" => o.r_max = Some(parse_value(&key, value)?),
                "x_min" => o.x_min = Some(parse_value(&key, value)?),
                "x_max" => o.x_max = Some(parse_value(&key, value)?),
                "primes" => o.primes = Some(value.to_string()),
                "format" => o.format = Some(value.to_string()),
                "output" => o.output = Some(PathBuf::from(value)),
                "parallelism" => o.parallelism = Some(parse_value(&key, value)?),
                "no_timing" => o.no_timing = Some(parse_bool(&key, value)?),
                "seed" => o.seed = Some(parse_value(&key, value)?),
                "thm51_samples" => o.thm51_samples = Some(parse_value(&key, value)?),
                _ => return Err(ConfigError::UnknownKey(key)),
            }
        }
        Ok(o)
    }

    /// Fields set in `self` win over those in `lower`.
    pub fn over(self, lower: Overrides) -> Overrides {
        Overrides {
            claims: self.claims.or(lower.claims),
            n_max: self.n_max.or(lower.n_max),
            m_max: self.m_max.or(lower.m_max),
            r_max: self.r_max.or(lower.r_max),
            x_min: self.x_min.or(lower.x_min),
            x_max: self.x_max.or(lower.x_max),
            primes: self.primes.or(lower.primes),
            format: self.format.or(lower.format),
            output: self.output.or(lower.output),
            parallelism: self.parallelism.or(lower.parallelism),
            no_timing: self.no_timing.or(lower.no_timing),
            seed: self.seed.or(lower.seed),
            thm51_samples: self.thm51_samples.or(lower.thm51_samples),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub claims: ClaimSelection,
    pub bounds: Bounds,
    pub format: OutputFormat,
    pub output: Option<PathBuf>,
    /// Worker threads; 0 means one per core.
    pub parallelism: usize,
    pub timing: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            claims: ClaimSelection::All,
            bounds: Bounds::default(),
            format: OutputFormat::Text,
            output: None,
            parallelism: 0,
            timing: true,
        }
    }
}

fn parse_primes(s: &str) -> Result<Vec<u64>, ConfigError> {
    let mut primes = Vec::new();
    for t in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let p: u64 = parse_value("primes", t)?;
        if p % 2 == 0 || !is_prime(p) {
            return Err(ConfigError::NotOddPrime(p));
        }
        primes.push(p);
    }
    if primes.is_empty() {
        return Err(ConfigError::NoPrimes);
    }
    primes.sort_unstable();
    primes.dedup();
    Ok(primes)
}

impl RunConfig {
    /// Validates merged settings on top of the defaults.
    pub fn resolve(o: Overrides) -> Result<Self, ConfigError> {
        let mut cfg = RunConfig::default();
        if let Some(c) = &o.claims {
            cfg.claims = ClaimSelection::parse(c)?;
        }
        for (name, v) in [("n_max", o.n_max), ("m_max", o.m_max), ("r_max", o.r_max)] {
            if v == Some(0) {
                return Err(ConfigError::NotPositive(name));
            }
        }
        if o.thm51_samples == Some(0) {
            return Err(ConfigError::NotPositive("thm51_samples"));
        }
        cfg.bounds.n_max = o.n_max;
        cfg.bounds.m_max = o.m_max;
        cfg.bounds.r_max = o.r_max;
        cfg.bounds.x_min = o.x_min;
        cfg.bounds.x_max = o.x_max;
        let (lo, hi) = (o.x_min.unwrap_or(-12), o.x_max.unwrap_or(12));
        if lo > hi {
            return Err(ConfigError::EmptyXRange(lo, hi));
        }
        if let Some(p) = &o.primes {
            cfg.bounds.primes = parse_primes(p)?;
        }
        if let Some(s) = o.seed {
            cfg.bounds.seed = s;
        }
        if let Some(s) = o.thm51_samples {
            cfg.bounds.thm51_samples = s;
        }
        if let Some(f) = &o.format {
            cfg.format = f.parse().map_err(|_| ConfigError::BadValue {
                key: "format".into(),
                value: f.clone(),
            })?;
        }
        cfg.output = o.output;
        cfg.parallelism = o.parallelism.unwrap_or(0);
        cfg.timing = !o.no_timing.unwrap_or(false);
        Ok(cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_then_cli_precedence() {
        let file = Overrides::parse_str(
            "# grid\nclaims = EQ_DNSQUARE, thm51\nn_max = 7\nprimes = 5,3\nformat = jsonl\n",
            Path::new("cfg"),
        )
        .unwrap();
        let cli = Overrides {
            n_max: Some(4),
            ..Overrides::default()
        };
        let cfg = RunConfig::resolve(cli.over(file)).unwrap();
        assert_eq!(cfg.bounds.n_max, Some(4));
        assert_eq!(cfg.bounds.primes, vec![3, 5]);
        assert_eq!(cfg.format, OutputFormat::Jsonl);
        assert_eq!(
            cfg.claims,
            ClaimSelection::List(vec![ClaimId::EqDnSquare, ClaimId::Thm51])
        );
    }

    #[test]
    fn rejects_bad_settings() {
        let bad = |o: Overrides| RunConfig::resolve(o).is_err();
        assert!(bad(Overrides {
            claims: Some("BOGUS".into()),
            ..Default::default()
        }));
        assert!(bad(Overrides {
            n_max: Some(0),
            ..Default::default()
        }));
        assert!(bad(Overrides {
            primes: Some("3,9".into()),
            ..Default::default()
        }));
        assert!(bad(Overrides {
            primes: Some("2".into()),
            ..Default::default()
        }));
        assert!(bad(Overrides {
            x_min: Some(5),
            x_max: Some(1),
            ..Default::default()
        }));
        assert!(bad(Overrides {
            format: Some("xml".into()),
            ..Default::default()
        }));
        assert!(Overrides::parse_str("n_max 3", Path::new("c")).is_err());
        assert!(Overrides::parse_str("colour = red", Path::new("c")).is_err());
    }

    #[test]
    fn all_keyword() {
        assert_eq!(ClaimSelection::parse("all").unwrap(), ClaimSelection::All);
        assert_eq!(ClaimSelection::All.claims().len(), ClaimId::ALL.len());
    }
}
