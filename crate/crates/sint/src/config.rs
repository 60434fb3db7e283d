//! Flat key-value configuration with dotted keys.
//!
//! The on-disk format is one `key = value` per line, `#` comments, keys like
//! `sampler.radial_divisions`. The same format carries architecture files and
//! tracker configs; the CLI layers flag overrides on top.

use std::collections::BTreeMap;
use std::path::Path;

use crate::error::{Result, SintError};

#[derive(Debug, Clone, Default, PartialEq)]
pub struct KvConfig {
    map: BTreeMap<String, String>,
}

impl KvConfig {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn parse_str(text: &str, origin: &str) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(SintError::parse(
                    origin,
                    format!("line {}: expected `key = value`, got `{line}`", lineno + 1),
                ));
            };
            map.insert(key.trim().to_string(), value.trim().to_string());
        }
        Ok(KvConfig { map })
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| SintError::io(path.display().to_string(), e))?;
        Self::parse_str(&text, &path.display().to_string())
    }

    pub fn set(&mut self, key: impl Into<String>, value: impl ToString) {
        self.map.insert(key.into(), value.to_string());
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.map.get(key).map(String::as_str)
    }

    pub fn contains(&self, key: &str) -> bool {
        self.map.contains_key(key)
    }

    /// Later values win.
    pub fn merge_from(&mut self, other: &KvConfig) {
        for (k, v) in &other.map {
            self.map.insert(k.clone(), v.clone());
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.map.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }

    pub fn get_f64(&self, key: &str, default: f64) -> Result<f64> {
        match self.map.get(key) {
            None => Ok(default),
            Some(v) => v
                .parse()
                .map_err(|_| SintError::InvalidConfig(format!("{key}: not a number: `{v}`"))),
        }
    }

    pub fn get_usize(&self, key: &str, default: usize) -> Result<usize> {
        match self.map.get(key) {
            None => Ok(default),
            Some(v) => v
                .parse()
                .map_err(|_| SintError::InvalidConfig(format!("{key}: not an integer: `{v}`"))),
        }
    }

    pub fn get_u64(&self, key: &str, default: u64) -> Result<u64> {
        match self.map.get(key) {
            None => Ok(default),
            Some(v) => v
                .parse()
                .map_err(|_| SintError::InvalidConfig(format!("{key}: not an integer: `{v}`"))),
        }
    }

    pub fn get_bool(&self, key: &str, default: bool) -> Result<bool> {
        match self.map.get(key).map(String::as_str) {
            None => Ok(default),
            Some("true") | Some("1") | Some("yes") => Ok(true),
            Some("false") | Some("0") | Some("no") => Ok(false),
            Some(v) => Err(SintError::InvalidConfig(format!("{key}: not a bool: `{v}`"))),
        }
    }

    /// Comma-separated list of numbers.
    pub fn get_f64_list(&self, key: &str, default: &[f64]) -> Result<Vec<f64>> {
        match self.map.get(key) {
            None => Ok(default.to_vec()),
            Some(v) => v
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse()
                        .map_err(|_| SintError::InvalidConfig(format!("{key}: bad list item `{s}`")))
                })
                .collect(),
        }
    }

    /// Serializes back to the line format, keys sorted.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.map {
            out.push_str(k);
            out.push_str(" = ");
            out.push_str(v);
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_lines_and_comments() {
        let cfg = KvConfig::parse_str("# c\nsampler.radius = 16\n\nflag=true\n", "test").unwrap();
        assert_eq!(cfg.get_f64("sampler.radius", 0.0).unwrap(), 16.0);
        assert!(cfg.get_bool("flag", false).unwrap());
        assert_eq!(cfg.get_usize("missing", 7).unwrap(), 7);
    }

    #[test]
    fn rejects_malformed_line() {
        assert!(KvConfig::parse_str("no equals sign", "test").is_err());
    }

    #[test]
    fn text_round_trip() {
        let mut cfg = KvConfig::new();
        cfg.set("b.key", 2);
        cfg.set("a.key", "x");
        let again = KvConfig::parse_str(&cfg.to_text(), "rt").unwrap();
        assert_eq!(cfg, again);
    }

    #[test]
    fn list_values() {
        let cfg = KvConfig::parse_str("scales = 0.5, 1, 2\n", "test").unwrap();
        assert_eq!(cfg.get_f64_list("scales", &[]).unwrap(), vec![0.5, 1.0, 2.0]);
    }
}
