//! Content-addressed file cache for Gröbner bases and campaign results.
//!
//! The cache is off unless a directory is configured, either with
//! [`set_cache_dir`] or through the `QPLAB_CACHE_DIR` environment variable
//! via [`init_from_env`].

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::RwLock;

use sha2::{Digest, Sha256};

pub const ENV_VAR: &str = "QPLAB_CACHE_DIR";

static DIR: RwLock<Option<PathBuf>> = RwLock::new(None);
static HITS: AtomicU64 = AtomicU64::new(0);
static MISSES: AtomicU64 = AtomicU64::new(0);
static TMP_COUNTER: AtomicU64 = AtomicU64::new(0);

pub fn set_cache_dir(dir: Option<PathBuf>) {
    *DIR.write().unwrap() = dir;
}

pub fn cache_dir() -> Option<PathBuf> {
    DIR.read().unwrap().clone()
}

pub fn init_from_env() {
    if let Ok(d) = std::env::var(ENV_VAR) {
        if !d.is_empty() {
            set_cache_dir(Some(PathBuf::from(d)));
        }
    }
}

/// `(hits, misses)` since process start.
pub fn stats() -> (u64, u64) {
    (HITS.load(Ordering::Relaxed), MISSES.load(Ordering::Relaxed))
}

pub fn digest(parts: &[&str]) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update(p.as_bytes());
        h.update([0u8]);
    }
    hex::encode(h.finalize())
}

fn path_in(dir: &Path, kind: &str, key: &str) -> PathBuf {
    dir.join(kind).join(format!("{key}.txt"))
}

pub fn load_from(dir: &Path, kind: &str, key: &str) -> Option<String> {
    match fs::read_to_string(path_in(dir, kind, key)) {
        Ok(s) => {
            HITS.fetch_add(1, Ordering::Relaxed);
            Some(s)
        }
        Err(_) => {
            MISSES.fetch_add(1, Ordering::Relaxed);
            None
        }
    }
}

/// Writes atomically: a reader sees either no file or the full contents.
pub fn store_in(dir: &Path, kind: &str, key: &str, contents: &str) {
    let path = path_in(dir, kind, key);
    let Some(parent) = path.parent() else { return };
    if fs::create_dir_all(parent).is_err() {
        return;
    }
    let n = TMP_COUNTER.fetch_add(1, Ordering::Relaxed);
    let tmp = parent.join(format!(".{key}.{}.{n}.tmp", std::process::id()));
    if fs::write(&tmp, contents).is_ok() {
        let _ = fs::rename(&tmp, &path);
    }
}

pub fn load(kind: &str, key: &str) -> Option<String> {
    cache_dir().and_then(|d| load_from(&d, kind, key))
}

pub fn store(kind: &str, key: &str, contents: &str) {
    if let Some(d) = cache_dir() {
        store_in(&d, kind, key, contents);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_in_dir() {
        let dir = tempfile::tempdir().unwrap();
        let key = digest(&["a", "b"]);
        assert!(load_from(dir.path(), "gb", &key).is_none());
        store_in(dir.path(), "gb", &key, "x0\n");
        assert_eq!(load_from(dir.path(), "gb", &key).unwrap(), "x0\n");
        assert_ne!(digest(&["ab"]), digest(&["a", "b"]));
    }
}
