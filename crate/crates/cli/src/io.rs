//! The JSON tensor file format.
//!
//! ```json
//! {"format_version": 1, "comment": "optional", "row_dims": [2, 2], "col_dims": [2, 2],
//!  "entries": [[re, im], ...]}
//! ```
//!
//! Entries follow the canonical order of [`DenseTensor`]. Values are written
//! in shortest round-trip form, so `load(save(t)) == t` bit for bit.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use ginv_core::{DenseTensor, GroupedShape, Scalar};
use serde::Deserialize;
use sha2::{Digest, Sha256};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("shape mismatch: shape needs {expected} entries, file has {found}")]
    ShapeMismatch { expected: usize, found: usize },
    #[error("entry {index} is not finite")]
    NonFiniteEntry { index: usize },
    #[error("unsupported format_version {0}")]
    UnsupportedVersion(u32),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TensorFile {
    format_version: u32,
    #[serde(default)]
    #[allow(dead_code)]
    comment: Option<String>,
    row_dims: Vec<usize>,
    col_dims: Vec<usize>,
    entries: Vec<[f64; 2]>,
}

pub fn parse_tensor(text: &str) -> Result<DenseTensor, IoError> {
    let file: TensorFile = serde_json::from_str(text).map_err(|e| IoError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if file.format_version != FORMAT_VERSION {
        return Err(IoError::UnsupportedVersion(file.format_version));
    }
    let shape = GroupedShape::new(file.row_dims, file.col_dims)
        .map_err(|e| IoError::InvalidShape(e.to_string()))?;
    if file.entries.len() != shape.len() {
        return Err(IoError::ShapeMismatch {
            expected: shape.len(),
            found: file.entries.len(),
        });
    }
    let mut entries = Vec::with_capacity(shape.len());
    for (index, [re, im]) in file.entries.into_iter().enumerate() {
        if !re.is_finite() || !im.is_finite() {
            return Err(IoError::NonFiniteEntry { index });
        }
        entries.push(Scalar::new(re, im));
    }
    DenseTensor::new(shape, entries).map_err(|e| IoError::InvalidShape(e.to_string()))
}

fn number(x: f64) -> String {
    // serde_json prints the shortest representation that parses back exactly
    serde_json::to_string(&x).expect("finite")
}

/// Text of a tensor file, one entry per line.
pub fn render_tensor(t: &DenseTensor, comment: Option<&str>) -> String {
    let dims = |d: &[usize]| serde_json::to_string(d).expect("dims");
    let mut out = format!("{{\"format_version\": {FORMAT_VERSION}, ");
    if let Some(c) = comment {
        let _ = write!(
            out,
            "\"comment\": {}, ",
            serde_json::to_string(c).expect("str")
        );
    }
    let _ = write!(
        out,
        "\"row_dims\": {}, \"col_dims\": {}, \"entries\": [",
        dims(t.shape().row_dims()),
        dims(t.shape().col_dims())
    );
    for (k, z) in t.entries().iter().enumerate() {
        let sep = if k == 0 { "" } else { "," };
        let _ = write!(out, "{sep}\n  [{}, {}]", number(z.re), number(z.im));
    }
    out.push_str("]}\n");
    out
}

pub fn load_tensor(path: &Path) -> Result<DenseTensor, IoError> {
    parse_tensor(&read(path)?)
}

pub fn save_tensor(t: &DenseTensor, path: &Path, comment: Option<&str>) -> Result<(), IoError> {
    fs::write(path, render_tensor(t, comment)).map_err(|source| IoError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub(crate) fn read(path: &Path) -> Result<String, IoError> {
    fs::read_to_string(path).map_err(|source| IoError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Hex SHA-256 of a file's bytes.
pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}
