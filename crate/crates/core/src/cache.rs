//! Optional on-disk matrix cache, keyed by content.
//!
//! Pointed at a directory via `HOPFCORAD_CACHE_DIR`, expensive matrices
//! (filtration stages, functor evaluations) persist across runs. The file
//! name is the SHA-256 of a caller-built key that must describe the
//! computation completely — same key, same matrix, so hits behave exactly
//! like recomputation (pure memoization). Writes go through a temporary
//! file and an atomic rename; concurrent writers race benignly to identical
//! content. Unreadable or corrupt entries are treated as misses.
//!
//! If the environment variable is unset, or the directory it names does not
//! exist, the cache is disabled and every lookup recomputes. The cache
//! never creates the directory: making it is the user's opt-in.

use std::fs;
use std::path::PathBuf;

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::error::Result;
use crate::json::{field_from_json, field_to_json};
use crate::matrix::Matrix;

/// The environment variable naming the cache directory.
pub const CACHE_DIR_ENV: &str = "HOPFCORAD_CACHE_DIR";

/// A content-addressed matrix store; disabled unless its directory exists.
#[derive(Debug, Clone)]
pub struct DiskCache {
    dir: Option<PathBuf>,
}

impl DiskCache {
    /// A cache that never hits and never writes.
    pub fn disabled() -> Self {
        DiskCache { dir: None }
    }

    /// Reads [`CACHE_DIR_ENV`]; unset or pointing at a non-directory means
    /// disabled.
    pub fn from_env() -> Self {
        match std::env::var_os(CACHE_DIR_ENV) {
            Some(dir) => DiskCache::at(PathBuf::from(dir)),
            None => DiskCache::disabled(),
        }
    }

    /// A cache rooted at `dir`, subject to the same existence rule.
    pub fn at(dir: impl Into<PathBuf>) -> Self {
        let dir = dir.into();
        if dir.is_dir() {
            DiskCache { dir: Some(dir) }
        } else {
            DiskCache::disabled()
        }
    }

    pub fn enabled(&self) -> bool {
        self.dir.is_some()
    }

    fn path_for(&self, key: &str) -> Option<PathBuf> {
        let dir = self.dir.as_ref()?;
        let digest = Sha256::digest(key.as_bytes());
        let mut name = String::with_capacity(69);
        for b in digest {
            name.push_str(&format!("{b:02x}"));
        }
        name.push_str(".json");
        Some(dir.join(name))
    }

    /// The stored matrix for `key`, if present and well-formed.
    pub fn get(&self, key: &str) -> Option<Matrix> {
        let path = self.path_for(key)?;
        let text = fs::read_to_string(path).ok()?;
        let v: Value = serde_json::from_str(&text).ok()?;
        matrix_from_json(&v).ok()
    }

    /// Stores `m` under `key`. Best effort: a full disk or permission
    /// problem costs the cache entry, not the computation.
    pub fn put(&self, key: &str, m: &Matrix) {
        let Some(path) = self.path_for(key) else {
            return;
        };
        let Some(dir) = path.parent() else { return };
        let text = matrix_to_json(m).to_string();
        let tmp = dir.join(format!(
            ".tmp-{}-{}",
            std::process::id(),
            path.file_name().and_then(|n| n.to_str()).unwrap_or("x")
        ));
        if fs::write(&tmp, text).is_ok() && fs::rename(&tmp, &path).is_err() {
            let _ = fs::remove_file(&tmp);
        }
    }

    /// `get` or compute-and-`put`.
    pub fn get_or_compute(
        &self,
        key: &str,
        compute: impl FnOnce() -> Result<Matrix>,
    ) -> Result<Matrix> {
        if let Some(hit) = self.get(key) {
            return Ok(hit);
        }
        let m = compute()?;
        self.put(key, &m);
        Ok(m)
    }
}

/// Sparse row-major matrix serialization; scalars in their text form.
pub fn matrix_to_json(m: &Matrix) -> Value {
    let entries: Vec<Value> = m
        .iter_entries()
        .map(|(r, c, s)| json!([r, c, s.to_text()]))
        .collect();
    json!({
        "field": field_to_json(m.field()),
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": entries,
    })
}

/// Inverse of [`matrix_to_json`], with shape and scalar parsing checked.
pub fn matrix_from_json(v: &Value) -> Result<Matrix> {
    let bad = |msg: &str| crate::error::Error::InvalidInput(format!("matrix json: {msg}"));
    let obj = v.as_object().ok_or_else(|| bad("not an object"))?;
    let field = field_from_json(obj.get("field").ok_or_else(|| bad("missing field"))?)?;
    let rows = obj
        .get("rows")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("missing rows"))? as usize;
    let cols = obj
        .get("cols")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("missing cols"))? as usize;
    let mut m = Matrix::zero(field, rows, cols);
    for e in obj
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing entries"))?
    {
        let t = e.as_array().ok_or_else(|| bad("entry not an array"))?;
        if t.len() != 3 {
            return Err(bad("entries are [row, col, scalar]"));
        }
        let r = t[0].as_u64().ok_or_else(|| bad("bad row index"))? as usize;
        let c = t[1].as_u64().ok_or_else(|| bad("bad col index"))? as usize;
        if r >= rows || c >= cols {
            return Err(bad("entry out of shape"));
        }
        let s = field.parse_scalar(t[2].as_str().ok_or_else(|| bad("scalar not a string"))?)?;
        m.set(r, c, s);
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::truncated_polynomial_hopf;
    use crate::field::FieldSpec;

    fn sample() -> Matrix {
        truncated_polynomial_hopf(3, 1).unwrap().bialgebra.mul.clone()
    }

    #[test]
    fn matrix_json_round_trips() {
        let m = sample();
        assert_eq!(matrix_from_json(&matrix_to_json(&m)).unwrap(), m);
        let mut q = Matrix::zero(FieldSpec::rationals(), 2, 2);
        q.set(0, 1, FieldSpec::rationals().parse_scalar("-7/3").unwrap());
        assert_eq!(matrix_from_json(&matrix_to_json(&q)).unwrap(), q);
    }

    #[test]
    fn missing_directory_disables_the_cache() {
        let cache = DiskCache::at("/definitely/not/here");
        assert!(!cache.enabled());
        assert!(cache.get("k").is_none());
        cache.put("k", &sample()); // no-op, must not create anything
        let mut calls = 0;
        let m = cache
            .get_or_compute("k", || {
                calls += 1;
                Ok(sample())
            })
            .unwrap();
        assert_eq!(m, sample());
        assert_eq!(calls, 1);
    }

    #[test]
    fn hits_skip_recomputation_and_miss_on_other_keys() {
        let dir = tempfile::tempdir().unwrap();
        let cache = DiskCache::at(dir.path());
        assert!(cache.enabled());
        let m = sample();
        cache.put("alpha", &m);
        assert_eq!(cache.get("alpha"), Some(m.clone()));
        assert!(cache.get("beta").is_none());
        let got = cache
            .get_or_compute("alpha", || panic!("must not recompute"))
            .unwrap();
        assert_eq!(got, m);
        // Exactly one content-addressed file, stable across a second put.
        cache.put("alpha", &m);
        assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 1);
    }

    #[test]
    fn corrupt_entries_degrade_to_misses() {
        let dir = tempfile::tempdir().unwrap();
        let cache = DiskCache::at(dir.path());
        cache.put("key", &sample());
        // Clobber the single stored file with junk.
        let entry = fs::read_dir(dir.path()).unwrap().next().unwrap().unwrap();
        fs::write(entry.path(), b"{ not json").unwrap();
        assert!(cache.get("key").is_none());
        let recovered = cache.get_or_compute("key", || Ok(sample())).unwrap();
        assert_eq!(recovered, sample());
        assert_eq!(cache.get("key"), Some(sample()));
    }

    #[test]
    fn from_env_respects_the_variable() {
        // Env mutation is process-global; this test owns the variable.
        let dir = tempfile::tempdir().unwrap();
        std::env::set_var(CACHE_DIR_ENV, dir.path());
        assert!(DiskCache::from_env().enabled());
        std::env::set_var(CACHE_DIR_ENV, dir.path().join("missing"));
        assert!(!DiskCache::from_env().enabled());
        std::env::remove_var(CACHE_DIR_ENV);
        assert!(!DiskCache::from_env().enabled());
    }
}
