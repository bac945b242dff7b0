//! Proximity-based logic programming with lexical similarity relations.
//!
//! This crate bundles three layers that build on each other:
//!
//! * a reader for the Prolog-fact export of the WordNet 3.0 lexical
//!   database ([`store`]), with taxonomy walks ([`taxonomy`]),
//!   corpus-free information content ([`infocontent`]) and six synset
//!   similarity measures ([`measures`]);
//! * proximity relations over program symbols ([`proximity`]), weak
//!   unification ([`unify`]) and a resolution engine whose answers carry
//!   approximation degrees ([`engine`]);
//! * generators that turn lexical similarity into proximity equations for
//!   programs ([`eqgen`]) and a small text classifier driven by the
//!   taxonomy ([`textclass`]).

pub mod engine;
pub mod eqgen;
pub mod error;
pub mod infocontent;
pub mod measures;
pub mod proximity;
pub mod store;
pub mod taxonomy;
pub mod textclass;
pub mod unify;

pub use engine::{
    dedup_max, load_program, parse_pattern_lists, parse_program, parse_query, Answer,
    EngineConfig, GradedRule, ParsedProgram, Program, Solver, TranslatedClause,
};
pub use error::{Error, Result};
pub use infocontent::{InfoContent, DEFAULT_EPSILON};
pub use measures::{Measure, MeasureKind, SimilarityContext, SimilarityResult};
pub use proximity::{
    build_relation, ClosureKind, FuzzyRelation, ProximityEquation, TNorm,
};
pub use store::{PartOfSpeech, Pattern, Synset, SynsetId, WordInfo, WordNetStore, WordTerm};
pub use taxonomy::{LcsEntry, NOUN_ROOT, VERB_ROOT};
pub use unify::{
    apply_bindings, compose, Bindings, FailureReason, Term, Unifier, UnifyOutcome,
};
