//! On-disk row cache.
//!
//! One text file per `n`:
//!
//! ```text
//! orbits-row v1 n=<n>
//! 0 <T(n,0)>
//! …
//! <n!> <T(n,n!)>
//! sha256=<hex digest of every preceding byte>
//! ```
//!
//! Writes go to a temporary file in the cache directory followed by an
//! atomic rename; the digest and the row identities are checked on load.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::orbit_count::{t_row_with, RowCache, RowOptions};
use crate::ExactInt;

pub const FORMAT_VERSION: u32 = 1;

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "ORBITS_CACHE";
pub const DEFAULT_CACHE_DIR: &str = ".orbits-cache";

fn header(n: u32) -> String {
    format!("orbits-row v{FORMAT_VERSION} n={n}\n")
}

/// Header and value lines, without the digest line.
pub fn serialize_body(n: u32, row: &[ExactInt]) -> String {
    let mut out = header(n);
    for (k, v) in row.iter().enumerate() {
        writeln!(out, "{k} {v}").expect("write to String");
    }
    out
}

/// Leading 64 bits of the SHA-256 digest of [`serialize_body`].
pub fn row_checksum(n: u32, row: &[ExactInt]) -> u64 {
    let digest = Sha256::digest(serialize_body(n, row).as_bytes());
    u64::from_be_bytes(digest[..8].try_into().expect("digest has 32 bytes"))
}

/// Complete file contents for a row.
pub fn encode(cache: &RowCache) -> Vec<u8> {
    let mut body = serialize_body(cache.n, &cache.row);
    let digest = Sha256::digest(body.as_bytes());
    writeln!(body, "sha256={}", hex::encode(digest)).expect("write to String");
    body.into_bytes()
}

/// Parses and verifies file contents produced by [`encode`].
pub fn decode(bytes: &[u8], path: &Path) -> Result<RowCache> {
    let bad = |reason: String| Error::Cache {
        path: path.to_path_buf(),
        reason,
    };
    let text = std::str::from_utf8(bytes).map_err(|_| bad("not UTF-8".into()))?;
    let body_end = text
        .trim_end_matches('\n')
        .rfind('\n')
        .map(|i| i + 1)
        .ok_or_else(|| bad("truncated".into()))?;
    let (body, trailer) = text.split_at(body_end);
    let want = trailer
        .trim_end_matches('\n')
        .strip_prefix("sha256=")
        .ok_or_else(|| bad("missing sha256 line".into()))?;
    let have = hex::encode(Sha256::digest(body.as_bytes()));
    if want != have {
        return Err(bad("checksum mismatch".into()));
    }

    let mut lines = body.lines();
    let head = lines.next().ok_or_else(|| bad("empty file".into()))?;
    let n: u32 = head
        .strip_prefix(&format!("orbits-row v{FORMAT_VERSION} n="))
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| bad(format!("unrecognized header {head:?}")))?;
    let mut row = Vec::new();
    for (idx, line) in lines.enumerate() {
        let (k, v) = line.split_once(' ').ok_or_else(|| bad(format!("malformed line {line:?}")))?;
        if k.parse::<usize>().ok() != Some(idx) {
            return Err(bad(format!("expected index {idx}, found {k:?}")));
        }
        let v = v.parse::<ExactInt>().map_err(|_| bad(format!("bad value on line {idx}")))?;
        row.push(v);
    }
    let cache = RowCache::new(n, row);
    cache.validate().map_err(bad)?;
    Ok(cache)
}

/// A directory of cached rows.
#[derive(Clone, Debug)]
pub struct RowStore {
    dir: PathBuf,
}

impl RowStore {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        RowStore { dir: dir.into() }
    }

    /// `$ORBITS_CACHE`, or `./.orbits-cache`.
    pub fn from_env() -> Self {
        let dir = std::env::var_os(CACHE_ENV)
            .map(PathBuf::from)
            .unwrap_or_else(|| PathBuf::from(DEFAULT_CACHE_DIR));
        RowStore::new(dir)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, n: u32) -> PathBuf {
        self.dir.join(format!("row-n{n}.txt"))
    }

    pub fn load(&self, n: u32) -> Result<Option<RowCache>> {
        let path = self.path(n);
        let bytes = match fs::read(&path) {
            Ok(b) => b,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let cache = decode(&bytes, &path)?;
        if cache.n != n {
            return Err(Error::Cache {
                path,
                reason: format!("holds n={}, expected n={n}", cache.n),
            });
        }
        Ok(Some(cache))
    }

    pub fn save(&self, cache: &RowCache) -> Result<PathBuf> {
        fs::create_dir_all(&self.dir)?;
        let path = self.path(cache.n);
        let tmp = self.dir.join(format!(".row-n{}.{}.tmp", cache.n, std::process::id()));
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(&encode(cache))?;
            f.sync_all()?;
        }
        fs::rename(&tmp, &path)?;
        Ok(path)
    }

    /// Cached row if present and valid, otherwise computed and stored.
    pub fn get_or_compute(&self, n: u32, opts: &RowOptions) -> Result<RowCache> {
        if let Some(cache) = self.load(n)? {
            return Ok(cache);
        }
        let cache = t_row_with(n, opts)?;
        self.save(&cache)?;
        Ok(cache)
    }
}
