//! A content-addressed store of computed results.
//!
//! Entries are JSON files named by the SHA-256 of their canonical parameter
//! string, so a given parameter set has exactly one slot. Writes go to a
//! temporary file in the same directory and are renamed into place; readers
//! never see a partial entry.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

pub const CATALOG_ENV: &str = "MLA_CATALOG_DIR";
pub const DEFAULT_CATALOG_DIR: &str = "catalog";

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Parameters as sorted `key=value` lines.
pub fn canonical_params(params: &BTreeMap<String, String>) -> String {
    params.iter().map(|(k, v)| format!("{k}={v}\n")).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub params: BTreeMap<String, String>,
    /// SHA-256 of [`canonical_params`].
    pub params_hash: String,
    /// SHA-256 of `document`.
    pub content_hash: String,
    /// A canonical `mla-kit v1` document.
    pub document: String,
    pub tool_version: String,
    /// Seconds since the Unix epoch.
    pub timestamp: u64,
}

impl CatalogEntry {
    pub fn new(params: BTreeMap<String, String>, document: String) -> Self {
        let timestamp = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        CatalogEntry {
            params_hash: sha256_hex(canonical_params(&params).as_bytes()),
            content_hash: sha256_hex(document.as_bytes()),
            params,
            document,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp,
        }
    }

    /// Both hashes agree with the stored parameters and document.
    pub fn is_consistent(&self) -> bool {
        self.params_hash == sha256_hex(canonical_params(&self.params).as_bytes())
            && self.content_hash == sha256_hex(self.document.as_bytes())
    }
}

#[derive(Clone, Debug)]
pub struct Catalog {
    dir: PathBuf,
}

impl Catalog {
    pub fn open(dir: impl Into<PathBuf>) -> Self {
        Catalog { dir: dir.into() }
    }

    /// `$MLA_CATALOG_DIR`, or `./catalog`.
    pub fn from_env() -> Self {
        Self::open(std::env::var_os(CATALOG_ENV).unwrap_or_else(|| DEFAULT_CATALOG_DIR.into()))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path_for(&self, params_hash: &str) -> PathBuf {
        self.dir.join(format!("{params_hash}.json"))
    }

    /// Stores an entry atomically and returns its path.
    pub fn put(&self, entry: &CatalogEntry) -> Result<PathBuf> {
        if !entry.is_consistent() {
            return Err(Error::Precondition("catalog entry hashes do not match".into()));
        }
        fs::create_dir_all(&self.dir).map_err(|e| Error::io(&self.dir, e))?;
        let path = self.path_for(&entry.params_hash);
        let json = serde_json::to_string_pretty(entry).expect("entries serialize");
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir).map_err(|e| Error::io(&self.dir, e))?;
        tmp.write_all(json.as_bytes())
            .and_then(|_| tmp.as_file().sync_all())
            .map_err(|e| Error::io(tmp.path(), e))?;
        tmp.persist(&path).map_err(|e| Error::io(&path, e.error))?;
        Ok(path)
    }

    pub fn get(&self, params: &BTreeMap<String, String>) -> Result<Option<CatalogEntry>> {
        let path = self.path_for(&sha256_hex(canonical_params(params).as_bytes()));
        match fs::read_to_string(&path) {
            Ok(text) => Ok(Some(read_entry(&path, &text)?)),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
            Err(e) => Err(Error::io(&path, e)),
        }
    }

    /// All entries, sorted by parameter hash.
    pub fn entries(&self) -> Result<Vec<CatalogEntry>> {
        let dir = match fs::read_dir(&self.dir) {
            Ok(d) => d,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(Error::io(&self.dir, e)),
        };
        let mut out = Vec::new();
        for item in dir {
            let path = item.map_err(|e| Error::io(&self.dir, e))?.path();
            if path.extension().is_some_and(|x| x == "json") {
                let text = fs::read_to_string(&path).map_err(|e| Error::io(&path, e))?;
                out.push(read_entry(&path, &text)?);
            }
        }
        out.sort_by(|a, b| a.params_hash.cmp(&b.params_hash));
        Ok(out)
    }
}

fn read_entry(path: &Path, text: &str) -> Result<CatalogEntry> {
    let entry: CatalogEntry = serde_json::from_str(text)
        .map_err(|e| Error::Structural(format!("{}: unreadable catalog entry: {e}", path.display())))?;
    if !entry.is_consistent() {
        return Err(Error::Structural(format!(
            "{}: catalog entry hash does not match its content",
            path.display()
        )));
    }
    Ok(entry)
}
