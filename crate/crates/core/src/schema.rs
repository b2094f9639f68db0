//! Line-delimited JSON artifacts with a schema header on line 1.
//!
//! Every file written by the toolkit starts with
//! `{"schema":"<name>","version":<n>, ...}` followed by one record per line.
//! Readers reject files whose schema name or version they do not know.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

pub const MANIFEST: &str = "codescope.manifest";
pub const DATASET: &str = "codescope.dataset";
pub const GOLD: &str = "codescope.gold";
pub const LINK_PREDICTIONS: &str = "codescope.link_predictions";
pub const SUMMARY_PREDICTIONS: &str = "codescope.summary_predictions";
pub const CLASS_PREDICTIONS: &str = "codescope.class_predictions";
pub const REPORT: &str = "codescope.report";
pub const FOREST_MODEL: &str = "codescope.forest";
pub const COMMENTS: &str = "codescope.comments";
pub const STATS: &str = "codescope.stats";

pub const VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Header {
    pub schema: String,
    pub version: u32,
    #[serde(flatten)]
    pub meta: Map<String, Value>,
}

impl Header {
    pub fn new(schema: &str) -> Self {
        Self {
            schema: schema.to_string(),
            version: VERSION,
            meta: Map::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl Serialize) -> Self {
        self.meta.insert(
            key.to_string(),
            serde_json::to_value(value).expect("metadata serializes"),
        );
        self
    }

    pub fn get<T: DeserializeOwned>(&self, key: &str) -> Option<T> {
        self.meta
            .get(key)
            .and_then(|v| serde_json::from_value(v.clone()).ok())
    }
}

#[derive(Debug, thiserror::Error)]
pub enum DataError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}:{line}: {source}")]
    Json {
        path: String,
        line: usize,
        source: serde_json::Error,
    },
    #[error("{path}: missing schema header")]
    MissingHeader { path: String },
    #[error("{path}: expected schema {expected}, found {found}")]
    WrongSchema {
        path: String,
        expected: String,
        found: String,
    },
    #[error("{path}: unsupported {schema} version {found} (expected {expected})")]
    Version {
        path: String,
        schema: String,
        expected: u32,
        found: u32,
    },
}

impl DataError {
    /// Schema and version mismatches, as opposed to I/O or syntax problems.
    pub fn is_schema_mismatch(&self) -> bool {
        matches!(
            self,
            DataError::MissingHeader { .. }
                | DataError::WrongSchema { .. }
                | DataError::Version { .. }
        )
    }
}

pub fn write_jsonl<T: Serialize>(
    path: &Path,
    header: &Header,
    records: &[T],
) -> Result<(), DataError> {
    let io = |source| DataError::Io {
        path: path.display().to_string(),
        source,
    };
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(io)?;
    }
    let mut w = BufWriter::new(File::create(path).map_err(io)?);
    write_to(&mut w, header, records).map_err(io)?;
    w.flush().map_err(io)
}

pub fn write_to<W: Write, T: Serialize>(
    w: &mut W,
    header: &Header,
    records: &[T],
) -> std::io::Result<()> {
    serde_json::to_writer(&mut *w, header)?;
    w.write_all(b"\n")?;
    for r in records {
        serde_json::to_writer(&mut *w, r)?;
        w.write_all(b"\n")?;
    }
    Ok(())
}

pub fn read_jsonl<T: DeserializeOwned>(
    path: &Path,
    schema: &str,
) -> Result<(Header, Vec<T>), DataError> {
    let name = path.display().to_string();
    let file = File::open(path).map_err(|source| DataError::Io {
        path: name.clone(),
        source,
    })?;
    read_from(BufReader::new(file), schema, &name)
}

pub fn read_from<R: BufRead, T: DeserializeOwned>(
    reader: R,
    schema: &str,
    name: &str,
) -> Result<(Header, Vec<T>), DataError> {
    let mut lines = reader.lines().enumerate();
    let header: Header = loop {
        match lines.next() {
            None => {
                return Err(DataError::MissingHeader {
                    path: name.to_string(),
                })
            }
            Some((_, line)) => {
                let line = line.map_err(|source| DataError::Io {
                    path: name.to_string(),
                    source,
                })?;
                if line.trim().is_empty() {
                    continue;
                }
                break serde_json::from_str(&line).map_err(|_| DataError::MissingHeader {
                    path: name.to_string(),
                })?;
            }
        }
    };
    if header.schema != schema {
        return Err(DataError::WrongSchema {
            path: name.to_string(),
            expected: schema.to_string(),
            found: header.schema,
        });
    }
    if header.version != VERSION {
        return Err(DataError::Version {
            path: name.to_string(),
            schema: schema.to_string(),
            expected: VERSION,
            found: header.version,
        });
    }
    let mut records = Vec::new();
    for (i, line) in lines {
        let line = line.map_err(|source| DataError::Io {
            path: name.to_string(),
            source,
        })?;
        if line.trim().is_empty() {
            continue;
        }
        records.push(
            serde_json::from_str(&line).map_err(|source| DataError::Json {
                path: name.to_string(),
                line: i + 1,
                source,
            })?,
        );
    }
    Ok((header, records))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_with_header() {
        let mut buf = Vec::new();
        let header = Header::new(DATASET).with("task", "linking");
        write_to(&mut buf, &header, &[1u32, 2, 3]).unwrap();
        let (h, recs): (_, Vec<u32>) = read_from(&buf[..], DATASET, "mem").unwrap();
        assert_eq!(h, header);
        assert_eq!(h.get::<String>("task").as_deref(), Some("linking"));
        assert_eq!(recs, [1, 2, 3]);
    }

    #[test]
    fn rejects_other_schema_and_version() {
        let mut buf = Vec::new();
        write_to(&mut buf, &Header::new(GOLD), &[0u8]).unwrap();
        let err = read_from::<_, u8>(&buf[..], DATASET, "mem").unwrap_err();
        assert!(matches!(err, DataError::WrongSchema { .. }));
        assert!(err.is_schema_mismatch());

        let text = "{\"schema\":\"codescope.dataset\",\"version\":7}\n";
        let err = read_from::<_, u8>(text.as_bytes(), DATASET, "mem").unwrap_err();
        assert!(matches!(err, DataError::Version { found: 7, .. }));

        let err = read_from::<_, u8>("1\n2\n".as_bytes(), DATASET, "mem").unwrap_err();
        assert!(matches!(err, DataError::MissingHeader { .. }));
    }

    #[test]
    fn bad_record_reports_line() {
        let text = "{\"schema\":\"codescope.dataset\",\"version\":1}\n1\nx\n";
        let err = read_from::<_, u8>(text.as_bytes(), DATASET, "mem").unwrap_err();
        assert!(matches!(err, DataError::Json { line: 3, .. }));
        assert!(!err.is_schema_mismatch());
    }
}
