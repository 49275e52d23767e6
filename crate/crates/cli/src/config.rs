//! `key = value` configuration files. Flags given on the command line win.

use std::collections::BTreeMap;
use std::path::Path;

use crate::error::CliError;

pub const KEYS: [&str; 14] = [
    "preset", "steps", "t_max", "party", "out", "scenario", "pt", "alpha", "sweep", "fixed_r", "fixed_t",
    "measures", "start", "end",
];

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Config {
    values: BTreeMap<String, String>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Self::parse(&text).map_err(|msg| CliError::usage(format!("{}: {msg}", path.display())))
    }

    /// Blank lines and `#` comments are ignored; keys may use `-` or `_`.
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut values = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(format!("line {}: expected `key = value`", lineno + 1));
            };
            let key = key.trim().replace('-', "_");
            if !KEYS.contains(&key.as_str()) {
                return Err(format!("line {}: unknown key `{key}`", lineno + 1));
            }
            let value = value.trim();
            if value.is_empty() {
                return Err(format!("line {}: `{key}` has no value", lineno + 1));
            }
            if values.insert(key.clone(), value.to_string()).is_some() {
                return Err(format!("line {}: duplicate key `{key}`", lineno + 1));
            }
        }
        Ok(Self { values })
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_dashes() {
        let c = Config::parse("# grid\nsteps = 50  # coarse\n\nt-max=4\n").unwrap();
        assert_eq!(c.get("steps"), Some("50"));
        assert_eq!(c.get("t_max"), Some("4"));
        assert_eq!(c.get("out"), None);
    }

    #[test]
    fn rejects_unknown_and_malformed_lines() {
        assert!(Config::parse("stpes = 5")
            .unwrap_err()
            .contains("unknown key `stpes`"));
        assert!(Config::parse("steps 5").is_err());
        assert!(Config::parse("steps =").is_err());
        assert!(Config::parse("steps = 1\nsteps = 2")
            .unwrap_err()
            .contains("duplicate"));
    }
}
