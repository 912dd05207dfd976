//! Persistence for the coefficient memo tables.
//!
//! Format: a single newline-delimited file `coefficients.tsv` in the cache
//! directory. The first line carries the format version; each record is
//! `kind <TAB> lambda <TAB> mu <TAB> nu <TAB> value` with partitions
//! serialized as comma-joined part lists (empty field for the empty
//! partition). Records are written in the canonical partition order, so a
//! save is byte-deterministic for a given table.
//!
//! The cache is a pure memo: a missing, stale, or corrupt file is treated as
//! empty, never as an error.

use crate::partition::Partition;
use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

const HEADER: &str = "charvar coefficient cache v1";
const FILE_NAME: &str = "coefficients.tsv";

type Key = (Partition, Partition, Partition);

#[derive(Default)]
pub struct CoefficientCache {
    pub lr: HashMap<Key, u64>,
    pub nl: HashMap<Key, u64>,
}

impl CoefficientCache {
    pub fn file_path(dir: &Path) -> PathBuf {
        dir.join(FILE_NAME)
    }

    /// Load from `dir`; anything unreadable or unparsable yields an empty
    /// cache.
    pub fn load(dir: &Path) -> Self {
        let mut cache = CoefficientCache::default();
        let Ok(text) = fs::read_to_string(Self::file_path(dir)) else {
            return cache;
        };
        let mut lines = text.lines();
        if lines.next() != Some(HEADER) {
            return cache;
        }
        for line in lines {
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 5 {
                continue;
            }
            let parse = || -> Option<(Key, u64)> {
                let lam: Partition = fields[1].parse().ok()?;
                let mu: Partition = fields[2].parse().ok()?;
                let nu: Partition = fields[3].parse().ok()?;
                let value: u64 = fields[4].parse().ok()?;
                Some(((lam, mu, nu), value))
            };
            match (fields[0], parse()) {
                ("LR", Some((key, value))) => {
                    cache.lr.insert(key, value);
                }
                ("NL", Some((key, value))) => {
                    cache.nl.insert(key, value);
                }
                _ => {}
            }
        }
        cache
    }

    /// Write to `dir`, creating it if needed. Keys are sorted canonically.
    pub fn save(&self, dir: &Path) -> std::io::Result<()> {
        fs::create_dir_all(dir)?;
        let mut out = String::from(HEADER);
        out.push('\n');
        for (tag, map) in [("LR", &self.lr), ("NL", &self.nl)] {
            let mut keys: Vec<&Key> = map.keys().collect();
            keys.sort();
            for key in keys {
                let (lam, mu, nu) = key;
                out.push_str(&format!(
                    "{tag}\t{}\t{}\t{}\t{}\n",
                    lam.to_cache_field(),
                    mu.to_cache_field(),
                    nu.to_cache_field(),
                    map[key]
                ));
            }
        }
        let mut file = fs::File::create(Self::file_path(dir))?;
        file.write_all(out.as_bytes())
    }
}

/// Resolve the cache directory: explicit flag first, then the
/// `CHARVAR_CACHE_DIR` environment variable, then the platform default
/// (`$XDG_CACHE_HOME/charvar` or `$HOME/.cache/charvar`). `None` disables
/// persistence entirely.
pub fn resolve_cache_dir(flag: Option<PathBuf>, disabled: bool) -> Option<PathBuf> {
    if disabled {
        return None;
    }
    if let Some(dir) = flag {
        return Some(dir);
    }
    if let Ok(dir) = std::env::var("CHARVAR_CACHE_DIR") {
        if !dir.is_empty() {
            return Some(PathBuf::from(dir));
        }
    }
    if let Ok(xdg) = std::env::var("XDG_CACHE_HOME") {
        if !xdg.is_empty() {
            return Some(PathBuf::from(xdg).join("charvar"));
        }
    }
    std::env::var("HOME")
        .ok()
        .filter(|h| !h.is_empty())
        .map(|h| PathBuf::from(h).join(".cache").join("charvar"))
}
