//! Generation of proximity equations from lexical similarity.
//!
//! A program can ask for an ontology to be built over chosen words: every
//! pair of distinct words inside one pattern list is related by an
//! equation whose degree is the normalized similarity of the two word
//! senses. Lists are kept apart — words of different lists never share an
//! equation — and each list is tagged with a block number, counted so that
//! the last list is block 0 and numbers grow toward the first.
//!
//! Auto mode does the same over the symbols of a loaded program, split
//! into three fixed blocks: constants (block 2), functors (block 1) and
//! predicates (block 0).

use crate::error::{Error, Result};
use crate::measures::{Measure, SimilarityContext};
use crate::proximity::ProximityEquation;
use crate::store::{PartOfSpeech, Pattern, WordNetStore, WordTerm};

/// Completes a pattern list into fully specified word senses: plain words
/// get sense 1 and a part of speech agreeing with the explicitly typed
/// members, or, when the list carries no type at all, the first of noun
/// then verb under which every plain word resolves.
pub fn default_patterns(store: &WordNetStore, items: &[Pattern]) -> Result<Vec<WordTerm>> {
    if items.is_empty() {
        return Err(Error::InvalidArgument("empty pattern list".into()));
    }
    let mut explicit: Option<PartOfSpeech> = None;
    for item in items {
        let Some(pos) = item.pos else { continue };
        if !matches!(pos, PartOfSpeech::Noun | PartOfSpeech::Verb) {
            return Err(Error::InvalidArgument(format!(
                "pattern '{}': only nouns (n) and verbs (v) can be related",
                item.word
            )));
        }
        match explicit {
            None => explicit = Some(pos),
            Some(p) if p != pos => {
                return Err(Error::InvalidArgument(format!(
                    "mixed parts of speech in one pattern list ({} vs {})",
                    p.code(),
                    pos.code()
                )));
            }
            Some(_) => {}
        }
    }
    let default_pos = match explicit {
        Some(p) => p,
        None => {
            let plain: Vec<&str> = items
                .iter()
                .filter(|i| i.pos.is_none())
                .map(|i| i.word.as_str())
                .collect();
            if plain.iter().all(|w| store.has_word_pos(w, PartOfSpeech::Noun)) {
                PartOfSpeech::Noun
            } else if plain.iter().all(|w| store.has_word_pos(w, PartOfSpeech::Verb)) {
                PartOfSpeech::Verb
            } else {
                return Err(Error::InvalidArgument(format!(
                    "no common part of speech for pattern list [{}]",
                    plain.join(", ")
                )));
            }
        }
    };
    Ok(items
        .iter()
        .map(|i| WordTerm::new(i.word.clone(), i.pos.unwrap_or(default_pos), i.sense.unwrap_or(1)))
        .collect())
}

/// Generates the equations for explicit pattern lists. The list at index
/// `i` of `n` lists becomes block `n - 1 - i`.
pub fn generate(
    ctx: &SimilarityContext<'_>,
    measure: Measure,
    lists: &[Vec<Pattern>],
    lambda: f64,
) -> Result<Vec<ProximityEquation>> {
    let mut out = Vec::new();
    let n = lists.len();
    for (i, list) in lists.iter().enumerate() {
        let block = (n - 1 - i) as u32;
        let terms = default_patterns(ctx.store(), list)?;
        pair_equations(ctx, measure, &terms, block, lambda, &mut out)?;
    }
    Ok(out)
}

/// Generates the equations for a program's symbols: constants and functors
/// resolve as noun sense 1, predicates as verb sense 1 falling back to
/// noun. Symbols absent from the database are skipped, as are pairs whose
/// parts of speech ended up different.
pub fn auto_generate(
    ctx: &SimilarityContext<'_>,
    measure: Measure,
    constants: &[String],
    functors: &[String],
    predicates: &[String],
    lambda: f64,
) -> Result<Vec<ProximityEquation>> {
    let mut out = Vec::new();
    let noun_first = [PartOfSpeech::Noun];
    let verb_first = [PartOfSpeech::Verb, PartOfSpeech::Noun];
    for (tokens, preference, block) in [
        (constants, &noun_first[..], 2),
        (functors, &noun_first[..], 1),
        (predicates, &verb_first[..], 0),
    ] {
        let terms: Vec<WordTerm> = tokens
            .iter()
            .filter_map(|t| {
                preference
                    .iter()
                    .find(|&&pos| ctx.store().has_word_pos(t, pos))
                    .map(|&pos| WordTerm::new(t.clone(), pos, 1))
            })
            .collect();
        pair_equations(ctx, measure, &terms, block, lambda, &mut out)?;
    }
    Ok(out)
}

/// One equation per unordered pair of distinct resolvable words of equal
/// part of speech, kept when the normalized degree exceeds both zero and
/// the lambda cut.
fn pair_equations(
    ctx: &SimilarityContext<'_>,
    measure: Measure,
    terms: &[WordTerm],
    block: u32,
    lambda: f64,
    out: &mut Vec<ProximityEquation>,
) -> Result<()> {
    for i in 0..terms.len() {
        for j in i + 1..terms.len() {
            let (a, b) = (&terms[i], &terms[j]);
            if a.word == b.word || a.pos != b.pos {
                continue;
            }
            let (Ok(c1), Ok(c2)) = (ctx.store().resolve(a), ctx.store().resolve(b)) else {
                continue;
            };
            let degree = ctx.similarity_synsets(measure, c1, c2)?.normalized;
            if degree > 0.0 && degree > lambda {
                out.push(ProximityEquation::new(&a.word, &b.word, block, degree));
            }
        }
    }
    Ok(())
}
