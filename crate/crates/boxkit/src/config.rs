//! Experiment configuration as flat `key = value` lines.
//!
//! ```text
//! model = gnp
//! n = 12, 16, 20
//! p = 1/2
//! seeds = 20
//! master_seed = 42
//! bounds = cv
//! ```

use boxkit_core::random::Model;
use boxkit_core::Rational;
use thiserror::Error;

use crate::bounds::{parse_selection, BoundKind, BoundOptions};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("line {0}: expected `key = value`")]
    Syntax(usize),
    #[error("unknown key `{0}`")]
    UnknownKey(String),
    #[error("missing key `{0}`")]
    Missing(&'static str),
    #[error("bad value for `{key}`: {message}")]
    Value { key: &'static str, message: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelKind {
    Gnp,
    Gnm,
    Regular,
    BipartiteGnp,
    BipartiteGnm,
}

impl ModelKind {
    pub fn parse(s: &str) -> Option<ModelKind> {
        Some(match s {
            "gnp" => ModelKind::Gnp,
            "gnm" => ModelKind::Gnm,
            "regular" => ModelKind::Regular,
            "bipartite_gnp" => ModelKind::BipartiteGnp,
            "bipartite_gnm" => ModelKind::BipartiteGnm,
            _ => return None,
        })
    }

    /// Name of the parameter the model takes besides `n`.
    pub fn param_key(self) -> &'static str {
        match self {
            ModelKind::Gnp | ModelKind::BipartiteGnp => "p",
            ModelKind::Gnm | ModelKind::BipartiteGnm => "m",
            ModelKind::Regular => "k",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamValue {
    P(Rational),
    Count(usize),
}

pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let bad = || format!("`{s}` is not a rational number");
    match s.split_once('/') {
        Some((a, b)) => {
            let (a, b): (i64, i64) = (
                a.trim().parse().map_err(|_| bad())?,
                b.trim().parse().map_err(|_| bad())?,
            );
            if b == 0 {
                return Err(bad());
            }
            Ok(Rational::new(a, b))
        }
        None => {
            if let Ok(a) = s.parse::<i64>() {
                return Ok(Rational::from_integer(a));
            }
            // decimal literal such as 0.25
            let (int, frac) = s.split_once('.').ok_or_else(bad)?;
            if frac.len() > 12 || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let den = 10i64.pow(frac.len() as u32);
            let int: i64 = if int.is_empty() {
                0
            } else {
                int.parse().map_err(|_| bad())?
            };
            let frac: i64 = if frac.is_empty() {
                0
            } else {
                frac.parse().map_err(|_| bad())?
            };
            Ok(Rational::new(int * den + frac, den))
        }
    }
}

pub fn build_model(kind: ModelKind, n: usize, param: ParamValue) -> Result<Model, String> {
    let model = match (kind, param) {
        (ModelKind::Gnp, ParamValue::P(p)) => Model::Gnp { n, p },
        (ModelKind::BipartiteGnp, ParamValue::P(p)) => Model::BipartiteGnp { n, p },
        (ModelKind::Gnm, ParamValue::Count(m)) => Model::Gnm { n, m },
        (ModelKind::BipartiteGnm, ParamValue::Count(m)) => Model::BipartiteGnm { n, m },
        (ModelKind::Regular, ParamValue::Count(k)) => Model::Regular { n, k },
        _ => return Err(format!("model needs parameter `{}`", kind.param_key())),
    };
    model.validate().map_err(|e| e.to_string())?;
    Ok(model)
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentConfig {
    pub model: ModelKind,
    pub ns: Vec<usize>,
    pub params: Vec<ParamValue>,
    pub seeds: u64,
    pub master_seed: u64,
    pub bounds: Vec<BoundKind>,
    pub options: BoundOptions,
    /// Record wall-clock time per bound; off by default so that output is
    /// reproducible byte for byte.
    pub timing: bool,
}

fn list<T>(
    key: &'static str,
    raw: &str,
    f: impl Fn(&str) -> Result<T, String>,
) -> Result<Vec<T>, ConfigError> {
    let items = raw
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| f(s).map_err(|message| ConfigError::Value { key, message }))
        .collect::<Result<Vec<_>, _>>()?;
    if items.is_empty() {
        return Err(ConfigError::Value {
            key,
            message: "empty list".into(),
        });
    }
    Ok(items)
}

fn int<T: std::str::FromStr>(s: &str) -> Result<T, String> {
    s.parse()
        .map_err(|_| format!("`{s}` is not a non-negative integer"))
}

impl ExperimentConfig {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut entries: Vec<(String, String)> = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or(ConfigError::Syntax(i + 1))?;
            entries.push((k.trim().to_string(), v.trim().to_string()));
        }
        let get = |key: &str| {
            entries
                .iter()
                .rev()
                .find(|(k, _)| k == key)
                .map(|(_, v)| v.as_str())
        };
        for (k, _) in &entries {
            if ![
                "model",
                "n",
                "p",
                "m",
                "k",
                "seeds",
                "master_seed",
                "bounds",
                "t_max",
                "timing",
            ]
            .contains(&k.as_str())
            {
                return Err(ConfigError::UnknownKey(k.clone()));
            }
        }
        let model_raw = get("model").ok_or(ConfigError::Missing("model"))?;
        let model = ModelKind::parse(model_raw).ok_or_else(|| ConfigError::Value {
            key: "model",
            message: format!("unknown model `{model_raw}`"),
        })?;
        let ns = list("n", get("n").ok_or(ConfigError::Missing("n"))?, int)?;
        let params = match model.param_key() {
            "p" => list("p", get("p").ok_or(ConfigError::Missing("p"))?, |s| {
                parse_rational(s).map(ParamValue::P)
            })?,
            "m" => list("m", get("m").ok_or(ConfigError::Missing("m"))?, |s| {
                int(s).map(ParamValue::Count)
            })?,
            _ => list("k", get("k").ok_or(ConfigError::Missing("k"))?, |s| {
                int(s).map(ParamValue::Count)
            })?,
        };
        let seeds: u64 =
            int(get("seeds").unwrap_or("1")).map_err(|message| ConfigError::Value {
                key: "seeds",
                message,
            })?;
        if seeds == 0 {
            return Err(ConfigError::Value {
                key: "seeds",
                message: "must be at least 1".into(),
            });
        }
        let master_seed =
            int(get("master_seed").unwrap_or("0")).map_err(|message| ConfigError::Value {
                key: "master_seed",
                message,
            })?;
        let bounds = parse_selection(get("bounds").unwrap_or("all")).map_err(|message| {
            ConfigError::Value {
                key: "bounds",
                message,
            }
        })?;
        let t_max = int(get("t_max").unwrap_or("2")).map_err(|message| ConfigError::Value {
            key: "t_max",
            message,
        })?;
        let timing = match get("timing").unwrap_or("false") {
            "true" => true,
            "false" => false,
            other => {
                return Err(ConfigError::Value {
                    key: "timing",
                    message: format!("`{other}` is not true or false"),
                })
            }
        };
        let cfg = ExperimentConfig {
            model,
            ns,
            params,
            seeds,
            master_seed,
            bounds,
            options: BoundOptions { t_max },
            timing,
        };
        for n in &cfg.ns {
            for p in &cfg.params {
                build_model(cfg.model, *n, *p).map_err(|message| ConfigError::Value {
                    key: "model",
                    message,
                })?;
            }
        }
        Ok(cfg)
    }

    /// Grid cells in emission order: `n` outer, parameter inner.
    pub fn cells(&self) -> Vec<Model> {
        self.ns
            .iter()
            .flat_map(|&n| {
                self.params
                    .iter()
                    .map(move |&p| build_model(self.model, n, p).expect("validated in parse"))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("1/2"), Ok(Rational::new(1, 2)));
        assert_eq!(parse_rational("0.25"), Ok(Rational::new(1, 4)));
        assert_eq!(parse_rational("1"), Ok(Rational::from_integer(1)));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn parses_config() {
        let cfg = ExperimentConfig::parse(
            "# trend\nmodel = gnp\nn = 12, 16,20\np = 1/2\nseeds = 20\nmaster_seed = 42\nbounds = cv\n",
        )
        .unwrap();
        assert_eq!(cfg.ns, [12, 16, 20]);
        assert_eq!(cfg.params, [ParamValue::P(Rational::new(1, 2))]);
        assert_eq!(cfg.bounds, [BoundKind::Cv]);
        assert_eq!(cfg.cells().len(), 3);
        assert!(!cfg.timing);
    }

    #[test]
    fn rejects_bad_config() {
        assert_eq!(
            ExperimentConfig::parse("model gnp"),
            Err(ConfigError::Syntax(1))
        );
        assert_eq!(
            ExperimentConfig::parse("n = 4"),
            Err(ConfigError::Missing("model"))
        );
        assert_eq!(
            ExperimentConfig::parse("model = gnp\nn = 4"),
            Err(ConfigError::Missing("p"))
        );
        assert!(matches!(
            ExperimentConfig::parse("model = gnp\nn = 4\np = 1/2\nseeds = 0"),
            Err(ConfigError::Value { key: "seeds", .. })
        ));
        assert!(matches!(
            ExperimentConfig::parse("model = regular\nn = 5\nk = 3"),
            Err(ConfigError::Value { key: "model", .. })
        ));
        assert_eq!(
            ExperimentConfig::parse("model = gnp\ncolour = red"),
            Err(ConfigError::UnknownKey("colour".into()))
        );
    }
}
