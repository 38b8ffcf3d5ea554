use std::path::PathBuf;
use std::str::FromStr;

use crate::rootdata::{CartanType, RootDatum, Window};
use crate::scalars::QParams;

use super::CliError;

pub const DEFAULT_SEED: u64 = 20_240_917;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// combinatorial prediction only
    Predict,
    /// prediction plus the module computations that check it
    Verify,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub cartan_type: CartanType,
    pub ell: u32,
    pub window: String,
    pub suite: Suite,
    pub out: Option<PathBuf>,
    pub format: OutputFormat,
    pub seed: u64,
    pub timing: bool,
    /// replace one catalog module by a copy with a damaged matrix entry
    pub corrupt: bool,
    pub group_file: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            cartan_type: CartanType::A1,
            ell: 4,
            window: "0..7".into(),
            suite: Suite::Verify,
            out: None,
            format: OutputFormat::Json,
            seed: DEFAULT_SEED,
            timing: false,
            corrupt: false,
            group_file: None,
        }
    }
}

fn parse_bool(key: &str, v: &str) -> Result<bool, CliError> {
    match v {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        _ => Err(CliError::Config(format!("{} expects true or false, got `{}`", key, v))),
    }
}

impl RunConfig {
    /// Sets one option by the name used in config files and on the command line.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), CliError> {
        let v = value.trim();
        match key.trim() {
            "type" | "cartan_type" => {
                self.cartan_type = CartanType::from_str(v).map_err(|e| CliError::Config(e.to_string()))?;
            }
            "ell" => self.ell = v.parse().map_err(|_| CliError::Config(format!("ell must be a positive integer, got `{}`", v)))?,
            "window" => self.window = v.to_string(),
            "suite" => {
                self.suite = match v {
                    "predict" => Suite::Predict,
                    "verify" => Suite::Verify,
                    _ => return Err(CliError::Config(format!("suite must be predict or verify, got `{}`", v))),
                }
            }
            "out" => self.out = Some(PathBuf::from(v)),
            "format" => {
                self.format = match v {
                    "json" => OutputFormat::Json,
                    "text" => OutputFormat::Text,
                    _ => return Err(CliError::Config(format!("format must be json or text, got `{}`", v))),
                }
            }
            "seed" => self.seed = v.parse().map_err(|_| CliError::Config(format!("seed must be an integer, got `{}`", v)))?,
            "timing" => self.timing = parse_bool(key, v)?,
            "corrupt" => self.corrupt = parse_bool(key, v)?,
            "group" => self.group_file = Some(PathBuf::from(v)),
            other => return Err(CliError::Config(format!("unknown key `{}`", other))),
        }
        Ok(())
    }

    /// Reads `key = value` lines on top of the defaults; `#` starts a comment.
    pub fn from_kv(text: &str) -> Result<Self, CliError> {
        let mut cfg = RunConfig::default();
        cfg.apply_kv(text)?;
        Ok(cfg)
    }

    pub fn apply_kv(&mut self, text: &str) -> Result<(), CliError> {
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| CliError::Config(format!("line {}: expected key = value", n + 1)))?;
            self.set(k, v)?;
        }
        Ok(())
    }

    pub fn datum(&self) -> RootDatum {
        RootDatum::build(self.cartan_type)
    }

    pub fn params(&self) -> Result<QParams, CliError> {
        self.datum().params(self.ell).map_err(|e| CliError::Config(e.to_string()))
    }

    pub fn window_box(&self) -> Result<Window, CliError> {
        Window::parse(&self.window, self.datum().rank(), self.ell).map_err(|e| CliError::Config(e.to_string()))
    }

    /// Checks that ell is admissible for the type and the window parses.
    pub fn validate(&self) -> Result<(), CliError> {
        self.params()?;
        self.window_box()?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kv_parsing() {
        let cfg = RunConfig::from_kv("# run\ntype = A2\nell = 6 # even\nwindow = box\nformat=text\nseed = 9\n").unwrap();
        assert_eq!(cfg.cartan_type, CartanType::A2);
        assert_eq!((cfg.ell, cfg.seed, cfg.format), (6, 9, OutputFormat::Text));
        assert_eq!(cfg.window_box().unwrap().hi, vec![11, 11]);
        assert!(cfg.validate().is_ok());
        assert!(RunConfig::from_kv("colour = blue").is_err());
        assert!(RunConfig::from_kv("ell").is_err());
        assert!(RunConfig::from_kv("timing = maybe").is_err());
    }

    #[test]
    fn validation() {
        let mut cfg = RunConfig::default();
        cfg.set("ell", "5").unwrap();
        assert!(cfg.validate().is_err());
        let mut cfg = RunConfig::default();
        cfg.set("type", "G2").unwrap();
        cfg.set("ell", "4").unwrap();
        assert!(cfg.validate().is_err());
        cfg.set("ell", "6").unwrap();
        cfg.set("window", "0..3").unwrap();
        assert!(cfg.validate().is_ok());
        cfg.set("window", "0..3,1").unwrap();
        assert!(cfg.validate().is_err());
    }
}
