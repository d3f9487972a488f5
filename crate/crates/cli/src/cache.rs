//! Triangle cache: a single JSON file mapping keys (name, parameters,
//! crate version) to stored results. Version-mismatched keys never match,
//! so stale entries are simply recomputed and overwritten. A corrupt file
//! is reported on stderr and treated as empty.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use hdpart_core::triangle::Triangle;

pub struct Cache {
    path: PathBuf,
    entries: BTreeMap<String, serde_json::Value>,
    dirty: bool,
}

impl Cache {
    pub fn open(path: &Path) -> Cache {
        let entries = match std::fs::read_to_string(path) {
            Ok(text) => match serde_json::from_str(&text) {
                Ok(map) => map,
                Err(e) => {
                    eprintln!(
                        "warning: cache {} is corrupt ({e}); recomputing",
                        path.display()
                    );
                    BTreeMap::new()
                }
            },
            Err(_) => BTreeMap::new(), // absent: start fresh
        };
        Cache {
            path: path.to_path_buf(),
            entries,
            dirty: false,
        }
    }

    pub fn key(parts: &[(&str, String)]) -> String {
        let mut key = String::new();
        for (k, v) in parts {
            key.push_str(k);
            key.push('=');
            key.push_str(v);
            key.push(';');
        }
        key.push_str("v=");
        key.push_str(env!("CARGO_PKG_VERSION"));
        key
    }

    pub fn get_triangle(&self, key: &str) -> Option<Triangle> {
        let value = self.entries.get(key)?;
        match Triangle::from_json(&value.to_string()) {
            Ok(t) => Some(t),
            Err(e) => {
                eprintln!("warning: cache entry {key} unusable ({e}); recomputing");
                None
            }
        }
    }

    pub fn put_triangle(&mut self, key: &str, t: &Triangle) {
        if let Ok(v) = serde_json::from_str(&t.to_json()) {
            self.entries.insert(key.to_string(), v);
            self.dirty = true;
        }
    }

    pub fn get_strings(&self, key: &str) -> Option<Vec<String>> {
        serde_json::from_value(self.entries.get(key)?.clone()).ok()
    }

    pub fn put_strings(&mut self, key: &str, values: &[String]) {
        if let Ok(v) = serde_json::to_value(values) {
            self.entries.insert(key.to_string(), v);
            self.dirty = true;
        }
    }

    pub fn save(&self) -> std::io::Result<()> {
        if !self.dirty {
            return Ok(());
        }
        let text = serde_json::to_string_pretty(&self.entries).expect("cache serializes");
        std::fs::write(&self.path, text)
    }
}

/// The --cache flag wins; otherwise HDPART_CACHE; otherwise no caching.
pub fn resolve(flag: Option<PathBuf>) -> Option<PathBuf> {
    flag.or_else(|| std::env::var_os("HDPART_CACHE").map(PathBuf::from))
}
