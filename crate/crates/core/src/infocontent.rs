//! Frequency of use and information content of concepts.
//!
//! The frequency of a concept is the sum of the corpus tag counts of every
//! synset it subsumes, itself included. Concepts reachable through several
//! hypernym paths are counted once. Information content is the negative log
//! probability of the concept against the root frequency of its hierarchy,
//! with unobserved concepts smoothed by a small pseudo-count so every IC
//! value stays finite.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::store::{PartOfSpeech, SynsetId, WordNetStore};
use crate::taxonomy::{self, global_root, is_global_root};

/// Default smoothing pseudo-count for zero-frequency concepts. Small enough
/// to keep every smoothed concept strictly less probable than any concept
/// observed once.
pub const DEFAULT_EPSILON: f64 = 0.1;

struct FrequencyTable {
    by_synset: HashMap<SynsetId, u64>,
    root_frequency: u64,
}

/// Lazily computed per-hierarchy frequency tables plus the smoothing
/// policy. Construction of a table happens at most once per part of speech;
/// afterwards reads are lock-free.
pub struct InfoContent<'a> {
    store: &'a WordNetStore,
    epsilon: f64,
    nouns: OnceLock<FrequencyTable>,
    verbs: OnceLock<FrequencyTable>,
}

impl<'a> InfoContent<'a> {
    pub fn new(store: &'a WordNetStore, epsilon: f64) -> Result<Self> {
        if !(epsilon > 0.0 && epsilon < 1.0) {
            return Err(Error::InvalidArgument(format!(
                "smoothing epsilon must lie in (0,1), got {epsilon}"
            )));
        }
        Ok(InfoContent {
            store,
            epsilon,
            nouns: OnceLock::new(),
            verbs: OnceLock::new(),
        })
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    fn pos_of(&self, concept: SynsetId) -> Result<PartOfSpeech> {
        if is_global_root(concept) {
            return Ok(if concept == taxonomy::NOUN_ROOT {
                PartOfSpeech::Noun
            } else {
                PartOfSpeech::Verb
            });
        }
        let pos = self.store.synset(concept)?.pos;
        if pos.is_hierarchical() {
            Ok(pos)
        } else {
            Err(Error::NotHierarchical(pos))
        }
    }

    fn table(&self, pos: PartOfSpeech) -> &FrequencyTable {
        let cell = match pos {
            PartOfSpeech::Noun => &self.nouns,
            PartOfSpeech::Verb => &self.verbs,
            _ => unreachable!("frequency tables exist only for hierarchical POS"),
        };
        cell.get_or_init(|| build_table(self.store, pos))
    }

    /// Subtree-summed tag count of a concept (set semantics over the
    /// subsumed synsets).
    pub fn frequency(&self, concept: SynsetId) -> Result<u64> {
        let pos = self.pos_of(concept)?;
        let table = self.table(pos);
        if is_global_root(concept) {
            return Ok(table.root_frequency);
        }
        Ok(table.by_synset.get(&concept).copied().unwrap_or(0))
    }

    pub fn root_frequency(&self, pos: PartOfSpeech) -> Result<u64> {
        global_root(pos)?;
        Ok(self.table(pos).root_frequency)
    }

    /// Information content `-ln(max(freq, epsilon) / root_freq)`. Zero for
    /// the root, at most [`Self::ic_max`] for unobserved concepts.
    pub fn ic(&self, concept: SynsetId) -> Result<f64> {
        let pos = self.pos_of(concept)?;
        let freq = self.frequency(concept)?;
        let root = self.table(pos).root_frequency;
        if root == 0 {
            return Err(Error::CorruptDb(format!(
                "zero total tag count in the '{pos}' hierarchy"
            )));
        }
        let smoothed = (freq as f64).max(self.epsilon);
        Ok(-(smoothed / root as f64).ln())
    }

    /// The largest attainable IC in the hierarchy: that of a zero-frequency
    /// concept.
    pub fn ic_max(&self, pos: PartOfSpeech) -> Result<f64> {
        global_root(pos)?;
        let root = self.table(pos).root_frequency;
        if root == 0 {
            return Err(Error::CorruptDb(format!(
                "zero total tag count in the '{pos}' hierarchy"
            )));
        }
        Ok(-(self.epsilon / root as f64).ln())
    }
}

/// Computes the whole frequency table for one hierarchy. Every concept's
/// subtree is walked separately with a visited set, which makes the
/// deduplicated (set-semantics) sum explicit; the total work is the sum of
/// ancestor counts over all synsets, well within interactive budgets.
fn build_table(store: &WordNetStore, pos: PartOfSpeech) -> FrequencyTable {
    let mut tag_sums: HashMap<SynsetId, u64> = HashMap::new();
    let mut concepts: Vec<SynsetId> = Vec::new();
    for synset in store.synsets() {
        if synset.pos == pos {
            tag_sums.insert(synset.synset_id, synset.tag_sum());
            concepts.push(synset.synset_id);
        }
    }
    let mut by_synset = HashMap::with_capacity(concepts.len());
    let mut visited: HashMap<SynsetId, u32> = HashMap::new();
    let mut stack: Vec<SynsetId> = Vec::new();
    for (stamp, &concept) in (1u32..).zip(concepts.iter()) {
        let mut total = 0u64;
        stack.push(concept);
        visited.insert(concept, stamp);
        while let Some(node) = stack.pop() {
            total += tag_sums.get(&node).copied().unwrap_or(0);
            for &child in store.hyponyms_of(node) {
                if visited.insert(child, stamp) != Some(stamp) {
                    stack.push(child);
                }
            }
        }
        by_synset.insert(concept, total);
    }
    let root_frequency = tag_sums.values().sum();
    FrequencyTable { by_synset, root_frequency }
}
