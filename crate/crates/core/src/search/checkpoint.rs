//! Append-only progress log for long permutation searches.
//!
//! The file holds one JSON object per line. The first line is a header that
//! fixes the unit decomposition; every further line records one work unit
//! that ran to completion. A run can be killed at any time: a torn final
//! line is discarded on resume and that unit is simply searched again.

use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const CHECKPOINT_SCHEMA_VERSION: u32 = 1;

/// Everything that determines the set and order of work units.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckpointHeader {
    pub schema_version: u32,
    pub modulus: usize,
    pub order: Vec<usize>,
    pub fix_first: bool,
    pub split_depth: usize,
}

/// A work unit (a fixed assignment of the first positions) that finished.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitRecord {
    pub prefix: Vec<usize>,
    pub found: Option<Vec<usize>>,
    pub nodes: u64,
    pub prunes_by_size: Vec<u64>,
    pub late_rejections: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CheckpointLine {
    Header(CheckpointHeader),
    Unit(UnitRecord),
}

fn io_err(path: &Path, e: impl std::fmt::Display) -> Error {
    Error::Checkpoint(format!("{}: {e}", path.display()))
}

/// Reads a checkpoint file, dropping a torn final line.
pub fn read_checkpoint(path: &Path) -> Result<Option<(CheckpointHeader, Vec<UnitRecord>)>> {
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(io_err(path, e)),
    };
    let mut lines = Vec::new();
    for line in BufReader::new(file).lines() {
        lines.push(line.map_err(|e| io_err(path, e))?);
    }
    while lines.last().is_some_and(|l| l.trim().is_empty()) {
        lines.pop();
    }
    if lines.is_empty() {
        return Ok(None);
    }
    let last = lines.len() - 1;
    let mut header = None;
    let mut units = Vec::new();
    for (i, line) in lines.iter().enumerate() {
        let parsed: CheckpointLine = match serde_json::from_str(line) {
            Ok(p) => p,
            Err(_) if i == last && i > 0 => break,
            Err(e) => return Err(io_err(path, format!("line {}: {e}", i + 1))),
        };
        match (i, parsed) {
            (0, CheckpointLine::Header(h)) => header = Some(h),
            (0, _) => return Err(io_err(path, "missing header line")),
            (_, CheckpointLine::Unit(u)) => units.push(u),
            (_, CheckpointLine::Header(_)) => return Err(io_err(path, format!("line {}: second header", i + 1))),
        }
    }
    Ok(header.map(|h| (h, units)))
}

pub(crate) struct CheckpointLog {
    path: std::path::PathBuf,
    file: File,
}

impl CheckpointLog {
    /// Opens `path` for appending, creating it with `header` if needed.
    /// Returns the units already completed.
    pub(crate) fn open(path: &Path, header: &CheckpointHeader) -> Result<(CheckpointLog, Vec<UnitRecord>)> {
        let existing = read_checkpoint(path)?;
        let units = match existing {
            Some((found, units)) => {
                if &found != header {
                    return Err(io_err(
                        path,
                        format!("written for a different search (modulus {}, order {:?})", found.modulus, found.order),
                    ));
                }
                units
            }
            None => Vec::new(),
        };
        // Rewrite so that a torn tail never precedes new records.
        let mut file = File::create(path).map_err(|e| io_err(path, e))?;
        let mut body = line(&CheckpointLine::Header(header.clone()))?;
        for u in &units {
            body.push_str(&line(&CheckpointLine::Unit(u.clone()))?);
        }
        file.write_all(body.as_bytes()).map_err(|e| io_err(path, e))?;
        file.sync_data().map_err(|e| io_err(path, e))?;
        drop(file);
        let file = OpenOptions::new().append(true).open(path).map_err(|e| io_err(path, e))?;
        Ok((
            CheckpointLog {
                path: path.to_path_buf(),
                file,
            },
            units,
        ))
    }

    pub(crate) fn append(&mut self, record: &UnitRecord) -> Result<()> {
        let text = line(&CheckpointLine::Unit(record.clone()))?;
        self.file.write_all(text.as_bytes()).map_err(|e| io_err(&self.path, e))?;
        self.file.flush().map_err(|e| io_err(&self.path, e))
    }
}

fn line(l: &CheckpointLine) -> Result<String> {
    let mut s = serde_json::to_string(l).map_err(|e| Error::Checkpoint(e.to_string()))?;
    s.push('\n');
    Ok(s)
}
