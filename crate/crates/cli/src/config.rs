//! `key = value` configuration files. Keys are the long flag names; `_`
//! and `-` are interchangeable. Blank lines and `#` comments are skipped.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::path::Path;
use std::str::FromStr;

use crate::error::{usage, CliError, Result};

pub const KNOWN_KEYS: &[&str] = &[
    "n", "r", "alpha", "beta", "gamma", "seed", "trials", "degree", "delta", "out", "format",
    "model", "stat", "input", "motif", "records", "mode", "alpha-grid", "gamma-grid", "n-grid",
];

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Config {
    values: BTreeMap<String, String>,
}

fn normalize(key: &str) -> String {
    key.trim().to_ascii_lowercase().replace('_', "-")
}

impl Config {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut values = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| usage(format!("line {}: expected key = value", i + 1)))?;
            let key = normalize(k);
            if !KNOWN_KEYS.contains(&key.as_str()) {
                return Err(usage(format!("line {}: unknown key {key:?}", i + 1)));
            }
            values.insert(key, v.trim().to_string());
        }
        Ok(Config { values })
    }

    pub fn raw(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    pub fn get<T>(&self, key: &str) -> Result<Option<T>>
    where
        T: FromStr,
        T::Err: Display,
    {
        self.raw(key)
            .map(|v| v.parse::<T>().map_err(|e| usage(format!("config key {key}: {e}"))))
            .transpose()
    }

    /// A comma-separated list.
    pub fn get_list<T>(&self, key: &str) -> Result<Option<Vec<T>>>
    where
        T: FromStr,
        T::Err: Display,
    {
        self.raw(key)
            .map(|v| {
                v.split(',')
                    .map(|t| t.trim().parse::<T>().map_err(|e| usage(format!("config key {key}: {e}"))))
                    .collect()
            })
            .transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_normalizes() {
        let c = Config::parse("# comment\nalpha = 0.3\n\nn_grid=10, 20\nSEED=7\n").unwrap();
        assert_eq!(c.get::<f64>("alpha").unwrap(), Some(0.3));
        assert_eq!(c.get::<u64>("seed").unwrap(), Some(7));
        assert_eq!(c.get_list::<u64>("n-grid").unwrap(), Some(vec![10, 20]));
        assert_eq!(c.get::<f64>("beta").unwrap(), None);
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(Config::parse("alpha 0.3").is_err());
        assert!(Config::parse("alpah = 0.3").is_err());
        assert!(Config::parse("alpha = x").unwrap().get::<f64>("alpha").is_err());
    }
}
