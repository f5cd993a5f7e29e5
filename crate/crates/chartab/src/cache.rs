//! Append-only on-disk copy of the engine's memo table.
//!
//! The first line is a version header; every other line is a JSON object
//! `{"key": "<memo key>", "value": {"num": [...], "den": [...]}}`.

use std::collections::HashSet;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, ErrorKind, Write};
use std::path::{Path, PathBuf};

use chartab_core::{Engine, MemoKey, RationalFunctionQ};
use serde::{Deserialize, Serialize};

pub const HEADER: &str = "chartab-cache v1";

#[derive(Serialize, Deserialize)]
struct Line {
    key: String,
    value: RationalFunctionQ,
}

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct LoadReport {
    pub loaded: usize,
    pub skipped: usize,
    pub warnings: Vec<String>,
}

pub struct Cache {
    path: PathBuf,
    writable: bool,
    stored: HashSet<String>,
}

fn parse_line(text: &str) -> Option<(MemoKey, RationalFunctionQ)> {
    let line: Line = serde_json::from_str(text).ok()?;
    let key: MemoKey = line.key.parse().ok()?;
    Some((key, line.value))
}

impl Cache {
    /// Reads `path` into `engine`. Problems never abort: they are reported and
    /// the engine starts cold for whatever could not be read.
    pub fn open(path: &Path, engine: &Engine) -> (Cache, LoadReport) {
        let mut cache = Cache {
            path: path.to_path_buf(),
            writable: true,
            stored: HashSet::new(),
        };
        let mut report = LoadReport::default();
        let file = match File::open(path) {
            Ok(f) => f,
            Err(e) if e.kind() == ErrorKind::NotFound => return (cache, report),
            Err(e) => {
                report
                    .warnings
                    .push(format!("cannot read cache {}: {e}; starting cold", path.display()));
                cache.writable = false;
                return (cache, report);
            }
        };
        let mut lines = BufReader::new(file).lines();
        match lines.next() {
            None => return (cache, report),
            Some(Ok(h)) if h.trim_end() == HEADER => {}
            Some(Ok(h)) => {
                report.warnings.push(format!(
                    "cache {} has header {h:?}, expected {HEADER:?}; ignoring it",
                    path.display()
                ));
                cache.writable = false;
                return (cache, report);
            }
            Some(Err(e)) => {
                report
                    .warnings
                    .push(format!("cannot read cache {}: {e}; starting cold", path.display()));
                cache.writable = false;
                return (cache, report);
            }
        }
        let mut entries = Vec::new();
        for (i, line) in lines.enumerate() {
            let parsed = line.ok().and_then(|l| parse_line(&l));
            match parsed {
                Some((key, value)) => {
                    cache.stored.insert(key.to_string());
                    entries.push((key, value));
                }
                None => {
                    report.skipped += 1;
                    report
                        .warnings
                        .push(format!("skipping corrupt cache line {}", i + 2));
                }
            }
        }
        report.loaded = entries.len();
        engine.preload(entries);
        (cache, report)
    }

    /// Appends every memo entry not yet in the file. Returns how many were
    /// written; a cache that was ignored on load is left untouched.
    pub fn save(&mut self, engine: &Engine) -> std::io::Result<usize> {
        if !self.writable {
            return Ok(0);
        }
        let fresh = !self.path.exists();
        let mut file = OpenOptions::new().create(true).append(true).open(&self.path)?;
        if fresh {
            writeln!(file, "{HEADER}")?;
        }
        let mut written = 0;
        for (key, value) in engine.snapshot() {
            let key = key.to_string();
            if self.stored.contains(&key) {
                continue;
            }
            let line = Line {
                key: key.clone(),
                value,
            };
            serde_json::to_writer(&mut file, &line)?;
            writeln!(file)?;
            self.stored.insert(key);
            written += 1;
        }
        Ok(written)
    }
}
