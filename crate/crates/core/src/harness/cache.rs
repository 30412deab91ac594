use std::fs;
use std::io::ErrorKind;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use super::export::{export_series, import_series, Format};
use crate::arith::Series;
use crate::error::Result;

/// Advisory on-disk cache of computed series, one JSON file per key.
/// Entries can be deleted at any time.
#[derive(Clone, Debug)]
pub struct SeriesCache {
    dir: PathBuf,
}

/// Hex SHA-256 of the canonical `module|operation|k=v;…|order` string;
/// parameters are sorted by name.
pub fn cache_key(module: &str, operation: &str, params: &[(&str, String)], order: usize) -> String {
    let mut p: Vec<_> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    p.sort();
    let canonical = format!("{module}|{operation}|{}|{order}", p.join(";"));
    hex::encode(Sha256::digest(canonical.as_bytes()))
}

impl SeriesCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        SeriesCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    pub fn put(&self, key: &str, s: &Series) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let tmp = self.dir.join(format!("{key}.json.tmp"));
        fs::write(&tmp, export_series(s, Format::Json))?;
        fs::rename(tmp, self.path(key))?;
        Ok(())
    }

    /// `Ok(None)` on a miss.
    pub fn get(&self, key: &str) -> Result<Option<Series>> {
        match fs::read(self.path(key)) {
            Ok(b) => Ok(Some(import_series(&b, Format::Json)?)),
            Err(e) if e.kind() == ErrorKind::NotFound => Ok(None),
            Err(e) => Err(e.into()),
        }
    }

    /// Cached value, or `compute` stored under `key`.
    pub fn get_or_compute(
        &self,
        key: &str,
        compute: impl FnOnce() -> Result<Series>,
    ) -> Result<Series> {
        if let Some(s) = self.get(key)? {
            return Ok(s);
        }
        let s = compute()?;
        self.put(key, &s)?;
        Ok(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binary::{binary_T, BinaryWeights};

    #[test]
    fn keys_are_canonical() {
        let a = cache_key(
            "binary",
            "T",
            &[("w", "0,0,1,0,0".into()), ("j", "2".into())],
            10,
        );
        let b = cache_key(
            "binary",
            "T",
            &[("j", "2".into()), ("w", "0,0,1,0,0".into())],
            10,
        );
        assert_eq!(a, b);
        assert_eq!(a.len(), 64);
        assert_ne!(a, cache_key("binary", "T", &[("j", "2".into())], 10));
        assert_ne!(
            a,
            cache_key(
                "binary",
                "T",
                &[("w", "0,0,1,0,0".into()), ("j", "2".into())],
                11
            )
        );
    }

    #[test]
    fn miss_then_hit() {
        let dir = tempfile::tempdir().unwrap();
        let c = SeriesCache::new(dir.path().join("cache"));
        let k = cache_key("binary", "T", &[], 12);
        assert_eq!(c.get(&k).unwrap(), None);
        let fresh = binary_T(&BinaryWeights::ints([1, 0, 1, 0, 1]), 12);
        let got = c.get_or_compute(&k, || Ok(fresh.clone())).unwrap();
        assert_eq!(got, fresh);
        assert_eq!(c.get(&k).unwrap(), Some(fresh));
    }
}
