//! Shared database access for the integration suites. The lexical
//! database directory comes from `WNDB` or falls back to the copy
//! shipped in the repository; it is loaded once per test binary.
#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::OnceLock;

use proxilog::WordNetStore;

pub fn db_dir() -> PathBuf {
    match std::env::var_os("WNDB") {
        Some(dir) => PathBuf::from(dir),
        None => PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/wnprolog-3.0"),
    }
}

pub fn store() -> &'static WordNetStore {
    static STORE: OnceLock<WordNetStore> = OnceLock::new();
    STORE.get_or_init(|| {
        WordNetStore::load(db_dir())
            .expect("lexical database should load; point WNDB at its directory")
    })
}
