//! Training-free text classification driven by the lexical taxonomy.
//!
//! The method runs in four steps. First, each category grows a small
//! ontology: proximity equations relating nearby words to the category,
//! drawn either from some levels of its hyponyms or from the words of its
//! gloss. Second, a document is scanned for those words, recording counts
//! and approximation degrees. Third, a compatibility score per category
//! condenses the occurrences. Fourth, every category whose score reaches
//! 90% of the document's best score is assigned. No training corpus is
//! involved anywhere.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::measures::{Measure, SimilarityContext};
use crate::proximity::ProximityEquation;
use crate::store::{PartOfSpeech, WordTerm};
use crate::taxonomy;

/// Words ignored by the tokenizer: a fixed list of English function
/// words, chosen for reproducibility rather than linguistic completeness.
pub const STOPWORDS: &[&str] = &[
    "a", "about", "above", "after", "again", "against", "all", "am", "an", "and", "any", "are",
    "as", "at", "be", "because", "been", "before", "being", "below", "between", "both", "but",
    "by", "can", "cannot", "could", "did", "do", "does", "doing", "down", "during", "each",
    "etc", "few", "for", "from", "further", "had", "has", "have", "having", "he", "her", "here",
    "hers", "herself", "him", "himself", "his", "how", "i", "if", "in", "into", "is", "it",
    "its", "itself", "just", "me", "more", "most", "my", "myself", "no", "nor", "not", "now",
    "of", "off", "on", "once", "only", "or", "other", "our", "ours", "ourselves", "out", "over",
    "own", "same", "she", "should", "so", "some", "such", "than", "that", "the", "their",
    "theirs", "them", "themselves", "then", "there", "these", "they", "this", "those",
    "through", "to", "too", "under", "until", "up", "usually", "very", "was", "we", "were",
    "what", "when", "where", "which", "while", "who", "whom", "why", "will", "with", "would",
    "you", "your", "yours", "yourself", "yourselves",
];

fn is_stopword(w: &str) -> bool {
    STOPWORDS.binary_search(&w).is_ok()
}

/// Lowercased runs of letters, with stopwords removed.
pub fn tokenize(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut current = String::new();
    for c in text.chars() {
        if c.is_alphabetic() {
            current.extend(c.to_lowercase());
        } else if !current.is_empty() {
            if !is_stopword(&current) {
                out.push(std::mem::take(&mut current));
            } else {
                current.clear();
            }
        }
    }
    if !current.is_empty() && !is_stopword(&current) {
        out.push(current);
    }
    out
}

/// Proximity equations relating words to one category.
#[derive(Clone, Debug)]
pub struct CategoryOntology {
    pub category: String,
    pub equations: Vec<ProximityEquation>,
}

impl CategoryOntology {
    /// The degree attached to a word, if the ontology mentions it.
    pub fn degree_of(&self, word: &str) -> Option<f64> {
        self.equations
            .iter()
            .find(|eq| eq.sym_a == word || eq.sym_b == word)
            .map(|eq| eq.degree)
    }
}

/// How a category ontology is grown.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OntologySource {
    Hyponyms(u32),
    Gloss,
}

impl FromStr for OntologySource {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "gloss" {
            return Ok(OntologySource::Gloss);
        }
        if let Some(level) = s.strip_prefix("hyponyms:") {
            let level: u32 = level.parse().map_err(|_| {
                Error::InvalidArgument(format!("bad hyponym level in '{s}'"))
            })?;
            if level < 1 {
                return Err(Error::InvalidArgument("hyponym level must be >= 1".into()));
            }
            return Ok(OntologySource::Hyponyms(level));
        }
        Err(Error::InvalidArgument(format!(
            "unknown ontology source '{s}' (expected hyponyms:LEVEL or gloss)"
        )))
    }
}

impl fmt::Display for OntologySource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OntologySource::Hyponyms(l) => write!(f, "hyponyms:{l}"),
            OntologySource::Gloss => f.write_str("gloss"),
        }
    }
}

/// Grows an ontology from the hyponyms of the category, `level` layers
/// deep: every member word of every reached synset is related to the
/// category at their normalized similarity. Words reached twice keep the
/// best degree; equations below `lambda` (or at zero) are dropped.
pub fn build_ontology_hyponyms(
    ctx: &SimilarityContext<'_>,
    category: &WordTerm,
    level: u32,
    measure: Measure,
    lambda: f64,
) -> Result<CategoryOntology> {
    let concept = ctx.store().resolve(category)?;
    let mut best: HashMap<String, f64> = HashMap::new();
    let mut order: Vec<String> = Vec::new();
    for synset in taxonomy::hyponyms_upto_level(ctx.store(), concept, level)? {
        let degree = ctx.similarity_synsets(measure, synset, concept)?.normalized;
        if !(degree > 0.0 && degree > lambda) {
            continue;
        }
        for member in ctx.store().synset_components(synset)? {
            if member.word == category.word {
                continue;
            }
            match best.get_mut(&member.word) {
                Some(existing) => *existing = existing.max(degree),
                None => {
                    best.insert(member.word.clone(), degree);
                    order.push(member.word);
                }
            }
        }
    }
    Ok(assemble(category, best, order))
}

/// Grows an ontology from the category's gloss: its word tokens that
/// exist as nouns are related to the category at their normalized
/// similarity (noun sense 1).
pub fn build_ontology_gloss(
    ctx: &SimilarityContext<'_>,
    category: &WordTerm,
    measure: Measure,
    lambda: f64,
) -> Result<CategoryOntology> {
    let concept = ctx.store().resolve(category)?;
    let gloss = ctx.store().synset(concept)?.gloss.clone();
    let mut best: HashMap<String, f64> = HashMap::new();
    let mut order: Vec<String> = Vec::new();
    for token in tokenize(&gloss) {
        if token == category.word || best.contains_key(&token) {
            continue;
        }
        if !ctx.store().has_word_pos(&token, PartOfSpeech::Noun) {
            continue;
        }
        let term = WordTerm::new(token.clone(), PartOfSpeech::Noun, 1);
        let Ok(token_concept) = ctx.store().resolve(&term) else { continue };
        let Ok(sim) = ctx.similarity_synsets(measure, token_concept, concept) else {
            continue; // e.g. a noun token against a verb category
        };
        let degree = sim.normalized;
        if !(degree > 0.0 && degree > lambda) {
            continue;
        }
        best.insert(token.clone(), degree);
        order.push(token);
    }
    Ok(assemble(category, best, order))
}

fn assemble(
    category: &WordTerm,
    best: HashMap<String, f64>,
    order: Vec<String>,
) -> CategoryOntology {
    let equations = order
        .into_iter()
        .map(|word| {
            let degree = best[&word];
            ProximityEquation::new(word, category.word.clone(), 0, degree)
        })
        .collect();
    CategoryOntology { category: category.word.clone(), equations }
}

/// How often an ontology word occurs in a document and how much it
/// counts toward the category.
#[derive(Clone, Debug, PartialEq)]
pub struct OccurrenceDegree {
    pub word: String,
    pub count: usize,
    pub approx_degree: f64,
    pub value: f64,
}

/// Finds the ontology's words in a token list. The category word itself
/// counts at degree 1.
pub fn occurrence_degrees(doc: &[String], ontology: &CategoryOntology) -> Vec<OccurrenceDegree> {
    let mut counts: HashMap<&str, usize> = HashMap::new();
    for token in doc {
        *counts.entry(token.as_str()).or_insert(0) += 1;
    }
    let mut out = Vec::new();
    let mut record = |word: &str, degree: f64| {
        if let Some(&count) = counts.get(word) {
            out.push(OccurrenceDegree {
                word: word.to_string(),
                count,
                approx_degree: degree,
                value: count as f64 * degree,
            });
        }
    };
    record(&ontology.category, 1.0);
    for eq in &ontology.equations {
        let word = if eq.sym_b == ontology.category { &eq.sym_a } else { &eq.sym_b };
        record(word, eq.degree);
    }
    out
}

/// The two built-in compatibility measures.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Compatibility {
    /// Best single approximation degree among matched words.
    Max,
    /// Occurrence values summed and normalized by document length.
    #[default]
    WSum,
}

impl FromStr for Compatibility {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "max" => Ok(Compatibility::Max),
            "wsum" => Ok(Compatibility::WSum),
            other => Err(Error::InvalidArgument(format!(
                "unknown compatibility measure '{other}' (expected wsum or max)"
            ))),
        }
    }
}

impl fmt::Display for Compatibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Compatibility::Max => "max",
            Compatibility::WSum => "wsum",
        })
    }
}

/// One score per ontology, in ontology order.
pub fn compatibility(
    doc: &[String],
    ontologies: &[CategoryOntology],
    measure: Compatibility,
) -> Vec<f64> {
    ontologies
        .iter()
        .map(|ontology| {
            let occurrences = occurrence_degrees(doc, ontology);
            match measure {
                Compatibility::Max => occurrences
                    .iter()
                    .map(|o| o.approx_degree)
                    .fold(0.0, f64::max),
                Compatibility::WSum => {
                    if doc.is_empty() {
                        0.0
                    } else {
                        let total: f64 = occurrences.iter().map(|o| o.value).sum();
                        (total / doc.len() as f64).clamp(0.0, 1.0)
                    }
                }
            }
        })
        .collect()
}

/// Assigns every category scoring within 90% of the document's best
/// score; nothing is assigned when every score is zero.
pub fn classify(scores: &[f64]) -> Vec<bool> {
    let max = scores.iter().copied().fold(0.0, f64::max);
    if max <= 0.0 {
        return vec![false; scores.len()];
    }
    scores.iter().map(|&s| s >= 0.9 * max).collect()
}

/// Micro-averaged precision, recall and F1 over per-document assignment
/// vectors, for users who supply their own labels.
pub fn precision_recall(predicted: &[Vec<bool>], gold: &[Vec<bool>]) -> (f64, f64, f64) {
    let mut tp = 0usize;
    let mut fp = 0usize;
    let mut fn_ = 0usize;
    for (p_row, g_row) in predicted.iter().zip(gold) {
        for (&p, &g) in p_row.iter().zip(g_row) {
            match (p, g) {
                (true, true) => tp += 1,
                (true, false) => fp += 1,
                (false, true) => fn_ += 1,
                (false, false) => {}
            }
        }
    }
    let precision = if tp + fp == 0 { 0.0 } else { tp as f64 / (tp + fp) as f64 };
    let recall = if tp + fn_ == 0 { 0.0 } else { tp as f64 / (tp + fn_) as f64 };
    let f1 = if precision + recall == 0.0 {
        0.0
    } else {
        2.0 * precision * recall / (precision + recall)
    };
    (precision, recall, f1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ont(category: &str, pairs: &[(&str, f64)]) -> CategoryOntology {
        CategoryOntology {
            category: category.into(),
            equations: pairs
                .iter()
                .map(|&(w, d)| ProximityEquation::new(w, category, 0, d))
                .collect(),
        }
    }

    fn toks(words: &[&str]) -> Vec<String> {
        words.iter().map(|w| w.to_string()).collect()
    }

    #[test]
    fn stopword_list_is_sorted_for_binary_search() {
        let mut sorted = STOPWORDS.to_vec();
        sorted.sort_unstable();
        assert_eq!(sorted, STOPWORDS);
    }

    #[test]
    fn tokenizer_lowercases_and_drops_stopwords() {
        assert_eq!(
            tokenize("The cat, usually a hunter, sleeps."),
            toks(&["cat", "hunter", "sleeps"])
        );
        assert_eq!(tokenize("of the and"), Vec::<String>::new());
        assert_eq!(tokenize("don't stop-words here"), toks(&["don", "t", "stop", "words"]));
    }

    #[test]
    fn occurrences_count_times_degree() {
        let ontology = ont("pet", &[("cat", 0.75)]);
        let occ = occurrence_degrees(&toks(&["cat", "dog", "cat"]), &ontology);
        assert_eq!(occ.len(), 1);
        assert_eq!(occ[0].count, 2);
        assert_eq!(occ[0].value, 1.5);

        let empty = occurrence_degrees(&toks(&["fish"]), &ontology);
        assert!(empty.is_empty());
    }

    #[test]
    fn category_word_counts_at_degree_one() {
        let ontology = ont("pet", &[]);
        let scores = compatibility(&toks(&["pet", "pet"]), &[ontology], Compatibility::WSum);
        assert_eq!(scores, vec![1.0]);
    }

    #[test]
    fn wsum_and_max_scores() {
        let ontology = ont("pet", &[("cat", 0.5), ("dog", 0.8)]);
        let doc = toks(&["cat", "dog", "tree", "dog"]);
        let wsum = compatibility(&doc, &[ontology.clone()], Compatibility::WSum);
        assert!((wsum[0] - (0.5 + 1.6) / 4.0).abs() < 1e-12);
        let max = compatibility(&doc, &[ontology], Compatibility::Max);
        assert_eq!(max, vec![0.8]);
        assert_eq!(compatibility(&[], &[ont("pet", &[])], Compatibility::WSum), vec![0.0]);
    }

    #[test]
    fn classify_takes_the_ninety_percent_band() {
        assert_eq!(classify(&[0.8, 0.73, 0.5]), vec![true, true, false]);
        assert_eq!(classify(&[0.0, 0.0]), vec![false, false]);
        assert_eq!(classify(&[0.4]), vec![true]);
    }

    #[test]
    fn classify_is_scale_invariant() {
        // Values sitting exactly on the 0.9 * max boundary can flip under
        // float rounding, so keep the samples away from it.
        let scores = [0.8, 0.73, 0.5, 0.71];
        let scaled: Vec<f64> = scores.iter().map(|s| s * 0.35).collect();
        assert_eq!(classify(&scores), classify(&scaled));
    }

    #[test]
    fn precision_recall_micro_average() {
        let predicted = vec![vec![true, false], vec![true, true]];
        let gold = vec![vec![true, true], vec![false, true]];
        let (p, r, f1) = precision_recall(&predicted, &gold);
        assert!((p - 2.0 / 3.0).abs() < 1e-12);
        assert!((r - 2.0 / 3.0).abs() < 1e-12);
        assert!((f1 - 2.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn ontology_source_parsing() {
        assert_eq!("hyponyms:2".parse::<OntologySource>().unwrap(), OntologySource::Hyponyms(2));
        assert_eq!("gloss".parse::<OntologySource>().unwrap(), OntologySource::Gloss);
        assert!("hyponyms:0".parse::<OntologySource>().is_err());
        assert!("leaves".parse::<OntologySource>().is_err());
    }
}
