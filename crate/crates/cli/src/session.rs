//! Shared state behind the global flags: engine defaults and the lazily
//! loaded lexical database.

use std::cell::OnceCell;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{anyhow, Result};
use proxilog::{ClosureKind, EngineConfig, SimilarityContext, TNorm, WordNetStore};

use crate::Globals;

/// One bundle of everything a subcommand may need: where the lexical
/// database lives and the engine settings a program starts from. The
/// database is loaded at most once, the first time a command asks for it.
pub struct Session {
    wndb: Option<PathBuf>,
    pub lambda: f64,
    pub tnorm: TNorm,
    pub closure: ClosureKind,
    pub ic_epsilon: f64,
    pub dedup_max: bool,
    pub emit_tpl: bool,
    pub occurs_check: bool,
    pub depth_limit: Option<usize>,
    store: OnceCell<WordNetStore>,
}

impl Session {
    pub fn new(globals: &Globals) -> Session {
        Session {
            wndb: globals.wndb.clone(),
            lambda: globals.lambda,
            tnorm: globals.tnorm,
            closure: globals.closure,
            ic_epsilon: globals.ic_epsilon,
            dedup_max: globals.dedup_max,
            emit_tpl: globals.emit_tpl,
            occurs_check: !globals.no_occurs_check,
            depth_limit: globals.depth_limit,
            store: OnceCell::new(),
        }
    }

    pub fn engine_config(&self) -> EngineConfig {
        EngineConfig {
            lambda: self.lambda,
            tnorm: self.tnorm,
            closure: self.closure,
            occurs_check: self.occurs_check,
            depth_limit: self.depth_limit,
        }
    }

    /// The lexical database, loading it on first use.
    pub fn store(&self) -> Result<&WordNetStore> {
        if let Some(store) = self.store.get() {
            return Ok(store);
        }
        let dir = self
            .wndb
            .clone()
            .or_else(|| std::env::var_os("WNDB").map(PathBuf::from))
            .ok_or_else(|| anyhow!("no lexical database: pass --wndb <dir> or set WNDB"))?;
        let started = Instant::now();
        let store = WordNetStore::load(&dir)?;
        eprintln!(
            "loaded {} synsets from {} in {:.1}s",
            store.synset_count(),
            dir.display(),
            started.elapsed().as_secs_f64()
        );
        Ok(self.store.get_or_init(|| store))
    }

    /// A similarity context over the loaded database.
    pub fn context(&self) -> Result<SimilarityContext<'_>> {
        Ok(SimilarityContext::new(self.store()?, self.ic_epsilon)?)
    }
}
