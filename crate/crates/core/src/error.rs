//! Crate-wide error type shared by the store, taxonomy, measures and engine.

use std::path::PathBuf;

use thiserror::Error;

use crate::store::{PartOfSpeech, SynsetId};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{file}:{line}: malformed fact: {text}")]
    MalformedFact {
        file: String,
        line: usize,
        text: String,
    },

    #[error("duplicate sense key {word}:{pos}:{sense} (synsets {first} and {second})")]
    DuplicateSense {
        word: String,
        pos: PartOfSpeech,
        sense: u32,
        first: SynsetId,
        second: SynsetId,
    },

    #[error("corrupt database: {0}")]
    CorruptDb(String),

    #[error("unknown word '{0}'")]
    UnknownWord(String),

    #[error("no such sense: {word}:{pos}:{sense}")]
    UnknownSense {
        word: String,
        pos: PartOfSpeech,
        sense: u32,
    },

    #[error("unknown synset {0}")]
    UnknownSynset(SynsetId),

    #[error("part of speech '{0}' has no hypernym hierarchy")]
    NotHierarchical(PartOfSpeech),

    #[error("parts of speech differ: '{0}' vs '{1}'")]
    PosMismatch(PartOfSpeech, PartOfSpeech),

    #[error("{0}")]
    InvalidArgument(String),

    #[error("syntax error at {line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
}

impl Error {
    /// Distinguishes broken input data (unreadable or inconsistent database
    /// files) from errors caused by how the library was called. The CLI maps
    /// the former to exit code 2 and everything else to exit code 1.
    pub fn is_data_error(&self) -> bool {
        matches!(
            self,
            Error::Io { .. }
                | Error::MalformedFact { .. }
                | Error::DuplicateSense { .. }
                | Error::CorruptDb(_)
        )
    }
}
