//! Resumable progress files for partitioned searches.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::arith::FieldDescriptor;
use crate::error::{Error, Result};

pub const CHECKPOINT_SCHEMA_VERSION: u32 = 1;

/// Header plus a bitmap of completed blocks and the hits found in them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub schema_version: u32,
    pub degree: usize,
    pub field: FieldDescriptor,
    pub block_size: u64,
    pub range: [u64; 2],
    pub total_blocks: u64,
    /// Bit `b % 8` of byte `b / 8` is set when block `b` is done; lowercase hex.
    pub completed: String,
    pub candidates_tested: u64,
    pub hits: Vec<u64>,
}

impl Checkpoint {
    pub fn new(
        degree: usize,
        field: FieldDescriptor,
        block_size: u64,
        range: [u64; 2],
        total_blocks: u64,
    ) -> Self {
        let bytes = total_blocks.div_ceil(8) as usize;
        Checkpoint {
            schema_version: CHECKPOINT_SCHEMA_VERSION,
            degree,
            field,
            block_size,
            range,
            total_blocks,
            completed: "00".repeat(bytes),
            candidates_tested: 0,
            hits: Vec::new(),
        }
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::Checkpoint(format!("cannot read {}: {e}", path.display())))?;
        let cp: Checkpoint = serde_json::from_str(&text)
            .map_err(|e| Error::Checkpoint(format!("malformed {}: {e}", path.display())))?;
        if cp.schema_version != CHECKPOINT_SCHEMA_VERSION {
            return Err(Error::Checkpoint(format!(
                "unsupported schema version {}",
                cp.schema_version
            )));
        }
        if cp.completed.len() != 2 * cp.total_blocks.div_ceil(8) as usize {
            return Err(Error::Checkpoint(
                "bitmap length does not match block count".into(),
            ));
        }
        cp.bitmap()?;
        Ok(cp)
    }

    /// Writes to a sibling temporary file, then renames over `path`.
    pub fn store(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string_pretty(self).expect("checkpoint serializes");
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, text)
            .and_then(|_| fs::rename(&tmp, path))
            .map_err(|e| Error::Checkpoint(format!("cannot write {}: {e}", path.display())))
    }

    /// Errors unless this checkpoint describes the same run.
    pub fn ensure_matches(&self, other: &Checkpoint) -> Result<()> {
        let same = self.degree == other.degree
            && self.field == other.field
            && self.block_size == other.block_size
            && self.range == other.range
            && self.total_blocks == other.total_blocks;
        if same {
            Ok(())
        } else {
            Err(Error::Checkpoint(
                "checkpoint header does not match this search".into(),
            ))
        }
    }

    fn bitmap(&self) -> Result<Vec<u8>> {
        (0..self.completed.len())
            .step_by(2)
            .map(|k| {
                u8::from_str_radix(&self.completed[k..k + 2], 16)
                    .map_err(|_| Error::Checkpoint("bitmap is not hex".into()))
            })
            .collect()
    }

    pub fn is_done(&self, block: u64) -> bool {
        let k = 2 * (block / 8) as usize;
        let byte = u8::from_str_radix(&self.completed[k..k + 2], 16).unwrap_or(0);
        byte & (1 << (block % 8)) != 0
    }

    pub fn mark_done(&mut self, block: u64, tested: u64, hits: &[u64]) {
        if self.is_done(block) {
            return;
        }
        let k = 2 * (block / 8) as usize;
        let byte =
            u8::from_str_radix(&self.completed[k..k + 2], 16).unwrap_or(0) | (1 << (block % 8));
        self.completed
            .replace_range(k..k + 2, &format!("{byte:02x}"));
        self.candidates_tested += tested;
        self.hits.extend_from_slice(hits);
        self.hits.sort_unstable();
    }

    pub fn completed_blocks(&self) -> u64 {
        self.bitmap()
            .map_or(0, |b| b.iter().map(|x| x.count_ones() as u64).sum())
    }
}
