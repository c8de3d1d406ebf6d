//! Run configuration: flags layered over an optional `key=value` file.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use qaffine::charseries::TruncProfile;
use qaffine::EvalPoint;

/// Environment variable naming a config file when `--config` is absent.
pub const CONFIG_ENV: &str = "QAFFINE_CONFIG";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
    Tsv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "tsv" => Ok(Format::Tsv),
            _ => Err(format!("unknown format {s:?}")),
        }
    }
}

/// Values given on the command line; `None` means "not given".
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub affine_type: Option<String>,
    pub delta_cap: Option<u32>,
    pub height_cap: Option<u32>,
    pub adaptive: Option<bool>,
    pub t_order: Option<usize>,
    pub format: Option<Format>,
    pub word: Option<String>,
    pub lambda: Option<String>,
    pub eval: Vec<String>,
    pub jobs: Option<usize>,
    pub large: Option<bool>,
}

/// Everything that determines a run's output. Echoed into JSON headers.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunConfig {
    #[serde(rename = "type")]
    pub affine_type: String,
    pub delta_cap: u32,
    pub height_cap: u32,
    pub adaptive: bool,
    pub t_order: usize,
    pub format: Format,
    pub word: Option<Vec<usize>>,
    pub lambda: Option<Vec<i64>>,
    pub eval: Vec<String>,
    pub jobs: Option<usize>,
    pub large: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            affine_type: "A1~1".to_string(),
            delta_cap: 4,
            height_cap: 8,
            adaptive: false,
            t_order: 20,
            format: Format::Text,
            word: None,
            lambda: None,
            eval: Vec::new(),
            jobs: None,
            large: false,
        }
    }
}

#[derive(Debug)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

fn bad(msg: impl Into<String>) -> ConfigError {
    ConfigError(msg.into())
}

fn parse_list<T: FromStr>(s: &str, what: &str) -> Result<Vec<T>, ConfigError> {
    s.split(',')
        .map(|x| x.trim().parse::<T>().map_err(|_| bad(format!("bad {what}: {s:?}"))))
        .collect()
}

fn parse_bool(s: &str, key: &str) -> Result<bool, ConfigError> {
    match s {
        "true" | "1" | "yes" => Ok(true),
        "false" | "0" | "no" => Ok(false),
        _ => Err(bad(format!("{key} must be true or false, got {s:?}"))),
    }
}

fn parse_num<T: FromStr>(s: &str, key: &str) -> Result<T, ConfigError> {
    s.trim().parse().map_err(|_| bad(format!("bad value for {key}: {s:?}")))
}

/// `u=<rational>`, or one of the named limits `q=inf`, `q=1`, `q=-1`.
pub fn parse_eval(s: &str) -> Result<EvalPoint, ConfigError> {
    let (var, val) = s
        .split_once('=')
        .ok_or_else(|| bad(format!("--eval expects u=<rational>, got {s:?}")))?;
    match (var.trim(), val.trim()) {
        ("q", "inf") => Ok(EvalPoint::QInfinity),
        ("q", "1") => Ok(EvalPoint::QOne),
        ("q", "-1") => Ok(EvalPoint::QMinusOne),
        ("u", v) => {
            let r = if let Some((n, d)) = v.split_once('/') {
                let n: BigInt = parse_num(n, "--eval")?;
                let d: BigInt = parse_num(d, "--eval")?;
                if d == BigInt::from(0) {
                    return Err(bad("--eval denominator is zero"));
                }
                BigRational::new(n, d)
            } else {
                BigRational::from_integer(parse_num(v, "--eval")?)
            };
            Ok(EvalPoint::Rational(r))
        }
        _ => Err(bad(format!("--eval expects u=<rational>, got {s:?}"))),
    }
}

/// Parses `key=value` lines; `#` starts a comment.
pub fn parse_file(text: &str) -> Result<BTreeMap<String, String>, ConfigError> {
    let mut out = BTreeMap::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| bad(format!("config line {}: expected key=value", no + 1)))?;
        out.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(out)
}

impl RunConfig {
    fn apply_file(&mut self, entries: &BTreeMap<String, String>) -> Result<(), ConfigError> {
        for (k, v) in entries {
            match k.as_str() {
                "type" => self.affine_type = v.clone(),
                "delta_cap" => self.delta_cap = parse_num(v, k)?,
                "height_cap" => self.height_cap = parse_num(v, k)?,
                "adaptive" => self.adaptive = parse_bool(v, k)?,
                "t_order" => self.t_order = parse_num(v, k)?,
                "format" => self.format = v.parse().map_err(bad)?,
                "word" => self.word = Some(parse_list(v, "word")?),
                "lambda" => self.lambda = Some(parse_list(v, "lambda")?),
                "eval" => self.eval = v.split(',').map(|s| s.trim().to_string()).collect(),
                "jobs" => self.jobs = Some(parse_num(v, k)?),
                "large" => self.large = parse_bool(v, k)?,
                _ => return Err(bad(format!("unknown config key {k:?}"))),
            }
        }
        Ok(())
    }

    fn apply_flags(&mut self, o: &Overrides) -> Result<(), ConfigError> {
        if let Some(t) = &o.affine_type {
            self.affine_type = t.clone();
        }
        if let Some(d) = o.delta_cap {
            self.delta_cap = d;
        }
        if let Some(c) = o.height_cap {
            self.height_cap = c;
        }
        if let Some(a) = o.adaptive {
            self.adaptive = a;
        }
        if let Some(t) = o.t_order {
            self.t_order = t;
        }
        if let Some(f) = o.format {
            self.format = f;
        }
        if let Some(w) = &o.word {
            self.word = Some(parse_list(w, "word")?);
        }
        if let Some(l) = &o.lambda {
            self.lambda = Some(parse_list(l, "lambda")?);
        }
        if !o.eval.is_empty() {
            self.eval = o.eval.clone();
        }
        if let Some(j) = o.jobs {
            self.jobs = Some(j);
        }
        if let Some(l) = o.large {
            self.large = l;
        }
        Ok(())
    }

    /// Defaults, then the config file (if any), then flags.
    pub fn resolve(o: &Overrides, config_path: Option<&Path>) -> Result<Self, ConfigError> {
        let mut cfg = RunConfig::default();
        if let Some(p) = config_path {
            let text = std::fs::read_to_string(p)
                .map_err(|e| bad(format!("cannot read config {}: {e}", p.display())))?;
            cfg.apply_file(&parse_file(&text)?)?;
        }
        cfg.apply_flags(o)?;
        for e in &cfg.eval {
            parse_eval(e)?;
        }
        Ok(cfg)
    }

    pub fn profile(&self) -> TruncProfile {
        let p = TruncProfile::new(self.delta_cap, self.height_cap);
        if self.adaptive {
            p.adaptive()
        } else {
            p
        }
    }

    pub fn eval_points(&self) -> Vec<(String, EvalPoint)> {
        self.eval
            .iter()
            .map(|e| (e.clone(), parse_eval(e).expect("validated in resolve")))
            .collect()
    }
}
