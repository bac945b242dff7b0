//! WordNet database store.
//!
//! Parses the WNprolog fact files (`wn_s.pl`, `wn_hyp.pl`, `wn_g.pl`) into
//! indexed in-memory tables and answers synset and word-sense lookups. The
//! store is immutable once loaded and safe to share across threads.

use std::collections::HashMap;
use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Synset identifier: a part-of-speech digit followed by the 8-digit file
/// offset, e.g. 102121620 for the first noun sense of "cat". The virtual
/// taxonomy roots live outside this 9-digit space.
pub type SynsetId = u64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PartOfSpeech {
    Noun,
    Verb,
    Adjective,
    SatelliteAdjective,
    Adverb,
}

impl PartOfSpeech {
    pub fn code(self) -> char {
        match self {
            PartOfSpeech::Noun => 'n',
            PartOfSpeech::Verb => 'v',
            PartOfSpeech::Adjective => 'a',
            PartOfSpeech::SatelliteAdjective => 's',
            PartOfSpeech::Adverb => 'r',
        }
    }

    pub fn from_code(c: char) -> Option<Self> {
        match c {
            'n' => Some(PartOfSpeech::Noun),
            'v' => Some(PartOfSpeech::Verb),
            'a' => Some(PartOfSpeech::Adjective),
            's' => Some(PartOfSpeech::SatelliteAdjective),
            'r' => Some(PartOfSpeech::Adverb),
            _ => None,
        }
    }

    /// Nouns and verbs are the only parts of speech organized in IS-A
    /// hierarchies; similarity measures are restricted to them.
    pub fn is_hierarchical(self) -> bool {
        matches!(self, PartOfSpeech::Noun | PartOfSpeech::Verb)
    }

    /// Leading digit of synset ids of this part of speech. Adjectives and
    /// satellite adjectives share the digit 3.
    pub fn id_prefix(self) -> u64 {
        match self {
            PartOfSpeech::Noun => 1,
            PartOfSpeech::Verb => 2,
            PartOfSpeech::Adjective | PartOfSpeech::SatelliteAdjective => 3,
            PartOfSpeech::Adverb => 4,
        }
    }
}

impl fmt::Display for PartOfSpeech {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code())
    }
}

impl FromStr for PartOfSpeech {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => PartOfSpeech::from_code(c)
                .ok_or_else(|| Error::InvalidArgument(format!("bad part of speech '{s}'"))),
            _ => Err(Error::InvalidArgument(format!("bad part of speech '{s}'"))),
        }
    }
}

/// A fully specified word sense, written `word:pos:sense`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WordTerm {
    pub word: String,
    pub pos: PartOfSpeech,
    pub sense: u32,
}

impl WordTerm {
    pub fn new(word: impl Into<String>, pos: PartOfSpeech, sense: u32) -> Self {
        WordTerm { word: word.into(), pos, sense }
    }
}

impl fmt::Display for WordTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.word, self.pos, self.sense)
    }
}

/// A possibly under-specified word pattern as written by users: a plain
/// word, `word:pos`, or `word:pos:sense`. Defaulting of the missing parts
/// depends on context (see the equation generator).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    pub word: String,
    pub pos: Option<PartOfSpeech>,
    pub sense: Option<u32>,
}

impl Pattern {
    pub fn plain(word: impl Into<String>) -> Self {
        Pattern { word: word.into(), pos: None, sense: None }
    }

    /// Fills in the missing parts: sense defaults to 1, the part of speech
    /// to `pos`.
    pub fn complete(&self, pos: PartOfSpeech) -> WordTerm {
        WordTerm {
            word: self.word.clone(),
            pos: self.pos.unwrap_or(pos),
            sense: self.sense.unwrap_or(1),
        }
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let bad = || Error::InvalidArgument(format!("bad word pattern '{s}'"));
        match parts.as_slice() {
            [word] if !word.is_empty() => Ok(Pattern::plain(*word)),
            [word, pos] if !word.is_empty() => Ok(Pattern {
                word: (*word).into(),
                pos: Some(pos.parse()?),
                sense: None,
            }),
            [word, pos, sense] if !word.is_empty() => Ok(Pattern {
                word: (*word).into(),
                pos: Some(pos.parse()?),
                sense: Some(sense.parse().map_err(|_| bad())?),
            }),
            _ => Err(bad()),
        }
    }
}

/// One row of the `s/6` table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordSenseEntry {
    pub synset_id: SynsetId,
    pub w_num: u32,
    pub word: String,
    pub pos: PartOfSpeech,
    pub sense_number: u32,
    pub tag_count: u32,
}

/// A concept: the set of synonymous word senses sharing one synset id,
/// plus its gloss.
#[derive(Clone, Debug)]
pub struct Synset {
    pub synset_id: SynsetId,
    pub pos: PartOfSpeech,
    /// Members ordered by `w_num`.
    pub members: Vec<WordSenseEntry>,
    pub gloss: String,
}

impl Synset {
    /// Sum of the members' corpus tag counts; the base quantity of the
    /// frequency-of-use computation.
    pub fn tag_sum(&self) -> u64 {
        self.members.iter().map(|m| m.tag_count as u64).sum()
    }

    /// The member with `w_num` 1, used to label the synset in graph output.
    pub fn representative_word(&self) -> &str {
        &self.members[0].word
    }
}

/// One record of the per-word information stream: a sense of the word
/// together with its synset and gloss.
#[derive(Clone, Copy, Debug)]
pub struct WordInfo<'a> {
    pub synset: &'a Synset,
    pub w_num: u32,
    pub sense_number: u32,
    pub tag_count: u32,
    pub gloss: &'a str,
}

/// The loaded database. All lookup structures are built once by
/// [`WordNetStore::load`] and never mutated afterwards.
pub struct WordNetStore {
    synsets: HashMap<SynsetId, Synset>,
    /// word -> (synset_id, w_num), ordered by part of speech then sense
    /// number; lookups are case-sensitive.
    word_index: HashMap<String, Vec<(SynsetId, u32)>>,
    sense_index: HashMap<(String, PartOfSpeech, u32), SynsetId>,
    hypernym_index: HashMap<SynsetId, Vec<SynsetId>>,
    hyponym_index: HashMap<SynsetId, Vec<SynsetId>>,
}

pub fn load_db(db_dir: impl AsRef<Path>) -> Result<WordNetStore> {
    WordNetStore::load(db_dir)
}

impl WordNetStore {
    /// Loads `wn_s.pl`, `wn_hyp.pl` and `wn_g.pl` from `db_dir`. Other
    /// relation files in the directory are ignored.
    pub fn load(db_dir: impl AsRef<Path>) -> Result<Self> {
        let db_dir = db_dir.as_ref();
        let mut store = WordNetStore {
            synsets: HashMap::new(),
            word_index: HashMap::new(),
            sense_index: HashMap::new(),
            hypernym_index: HashMap::new(),
            hyponym_index: HashMap::new(),
        };
        store.load_s_file(db_dir.join("wn_s.pl").as_path())?;
        store.load_hyp_file(db_dir.join("wn_hyp.pl").as_path())?;
        store.load_g_file(db_dir.join("wn_g.pl").as_path())?;
        store.finish_indexes()?;
        Ok(store)
    }

    fn load_s_file(&mut self, path: &Path) -> Result<()> {
        for_each_fact(path, |line_no, line| {
            let entry = parse_s_fact(line).ok_or_else(|| malformed(path, line_no, line))?;
            let key = (entry.word.clone(), entry.pos, entry.sense_number);
            if let Some(&prev) = self.sense_index.get(&key) {
                return Err(Error::DuplicateSense {
                    word: key.0,
                    pos: key.1,
                    sense: key.2,
                    first: prev,
                    second: entry.synset_id,
                });
            }
            self.sense_index.insert(key, entry.synset_id);
            self.word_index
                .entry(entry.word.clone())
                .or_default()
                .push((entry.synset_id, entry.w_num));
            let synset = self.synsets.entry(entry.synset_id).or_insert_with(|| Synset {
                synset_id: entry.synset_id,
                pos: entry.pos,
                members: Vec::new(),
                gloss: String::new(),
            });
            if synset.pos != entry.pos {
                return Err(Error::CorruptDb(format!(
                    "synset {} mixes parts of speech '{}' and '{}'",
                    entry.synset_id, synset.pos, entry.pos
                )));
            }
            synset.members.push(entry);
            Ok(())
        })
    }

    fn load_hyp_file(&mut self, path: &Path) -> Result<()> {
        for_each_fact(path, |line_no, line| {
            let (hypo, hyper) =
                parse_hyp_fact(line).ok_or_else(|| malformed(path, line_no, line))?;
            let hypo_pos = self.synset_pos(hypo)?;
            let hyper_pos = self.synset_pos(hyper)?;
            if hypo == hyper || hypo_pos != hyper_pos || !hypo_pos.is_hierarchical() {
                return Err(Error::CorruptDb(format!(
                    "invalid hypernym link {hypo} -> {hyper}"
                )));
            }
            self.hypernym_index.entry(hypo).or_default().push(hyper);
            self.hyponym_index.entry(hyper).or_default().push(hypo);
            Ok(())
        })
    }

    fn load_g_file(&mut self, path: &Path) -> Result<()> {
        for_each_fact(path, |line_no, line| {
            let (id, gloss) = parse_g_fact(line).ok_or_else(|| malformed(path, line_no, line))?;
            let synset = self
                .synsets
                .get_mut(&id)
                .ok_or_else(|| Error::CorruptDb(format!("gloss for unknown synset {id}")))?;
            synset.gloss = gloss;
            Ok(())
        })
    }

    fn finish_indexes(&mut self) -> Result<()> {
        for synset in self.synsets.values_mut() {
            synset.members.sort_by_key(|m| m.w_num);
            for pair in synset.members.windows(2) {
                if pair[0].w_num == pair[1].w_num {
                    return Err(Error::CorruptDb(format!(
                        "synset {} repeats w_num {}",
                        synset.synset_id, pair[0].w_num
                    )));
                }
            }
        }
        let synsets = &self.synsets;
        for entries in self.word_index.values_mut() {
            entries.sort_by_key(|&(id, w_num)| {
                let synset = &synsets[&id];
                let member = synset
                    .members
                    .iter()
                    .find(|m| m.w_num == w_num)
                    .expect("member indexed by w_num");
                (synset.pos, member.sense_number, id)
            });
        }
        for targets in self.hypernym_index.values_mut() {
            targets.sort_unstable();
            targets.dedup();
        }
        for targets in self.hyponym_index.values_mut() {
            targets.sort_unstable();
            targets.dedup();
        }
        Ok(())
    }

    fn synset_pos(&self, id: SynsetId) -> Result<PartOfSpeech> {
        self.synsets
            .get(&id)
            .map(|s| s.pos)
            .ok_or(Error::UnknownSynset(id))
    }

    /// The synset containing the given word sense.
    pub fn resolve(&self, term: &WordTerm) -> Result<SynsetId> {
        let key = (term.word.clone(), term.pos, term.sense);
        match self.sense_index.get(&key) {
            Some(&id) => Ok(id),
            None if self.word_index.contains_key(&term.word) => Err(Error::UnknownSense {
                word: term.word.clone(),
                pos: term.pos,
                sense: term.sense,
            }),
            None => Err(Error::UnknownWord(term.word.clone())),
        }
    }

    /// The synset a bare word resolves to: its first record in fact-file
    /// order, i.e. the lowest synset id containing the word.  This is how
    /// a sequential fact-base lookup finds an unqualified word, and it is
    /// not always the word's sense number 1 ("leopard" finds the animal,
    /// whose sense number is 2, because the pelt synset has a higher id).
    pub fn first_sense(&self, word: &str) -> Result<SynsetId> {
        self.word_index
            .get(word)
            .and_then(|entries| entries.iter().map(|&(id, _)| id).min())
            .ok_or_else(|| Error::UnknownWord(word.to_string()))
    }

    /// All senses of a word with their synsets and glosses, ordered by part
    /// of speech then sense number. Unknown words yield an empty list.
    pub fn word_info(&self, word: &str) -> Vec<WordInfo<'_>> {
        let Some(entries) = self.word_index.get(word) else {
            return Vec::new();
        };
        entries
            .iter()
            .map(|&(id, w_num)| {
                let synset = &self.synsets[&id];
                let member = synset
                    .members
                    .iter()
                    .find(|m| m.w_num == w_num)
                    .expect("member indexed by w_num");
                WordInfo {
                    synset,
                    w_num,
                    sense_number: member.sense_number,
                    tag_count: member.tag_count,
                    gloss: &synset.gloss,
                }
            })
            .collect()
    }

    /// The members of a synset as `word:pos:sense` terms, in `w_num` order.
    pub fn synset_components(&self, id: SynsetId) -> Result<Vec<WordTerm>> {
        let synset = self.synset(id)?;
        Ok(synset
            .members
            .iter()
            .map(|m| WordTerm::new(m.word.clone(), m.pos, m.sense_number))
            .collect())
    }

    pub fn synset(&self, id: SynsetId) -> Result<&Synset> {
        self.synsets.get(&id).ok_or(Error::UnknownSynset(id))
    }

    pub fn contains_synset(&self, id: SynsetId) -> bool {
        self.synsets.contains_key(&id)
    }

    /// Whether the word exists with at least one sense of the given part of
    /// speech.
    pub fn has_word_pos(&self, word: &str, pos: PartOfSpeech) -> bool {
        self.word_index
            .get(word)
            .is_some_and(|entries| entries.iter().any(|&(id, _)| self.synsets[&id].pos == pos))
    }

    /// Direct hypernyms (more general concepts), sorted by id.
    pub fn hypernyms_of(&self, id: SynsetId) -> &[SynsetId] {
        self.hypernym_index.get(&id).map_or(&[], Vec::as_slice)
    }

    /// Direct hyponyms (more specific concepts), sorted by id.
    pub fn hyponyms_of(&self, id: SynsetId) -> &[SynsetId] {
        self.hyponym_index.get(&id).map_or(&[], Vec::as_slice)
    }

    pub fn synsets(&self) -> impl Iterator<Item = &Synset> {
        self.synsets.values()
    }

    pub fn synset_count(&self) -> usize {
        self.synsets.len()
    }

    pub fn hyp_link_count(&self) -> usize {
        self.hypernym_index.values().map(Vec::len).sum()
    }

    /// Distinct words with at least one sense of the given part of speech,
    /// paired with their sense count there. Sorted for determinism.
    pub fn words_by_pos(&self, pos: PartOfSpeech) -> Vec<(&str, usize)> {
        let mut words: Vec<(&str, usize)> = self
            .word_index
            .iter()
            .filter_map(|(word, entries)| {
                let n = entries
                    .iter()
                    .filter(|&&(id, _)| self.synsets[&id].pos == pos)
                    .count();
                (n > 0).then_some((word.as_str(), n))
            })
            .collect();
        words.sort_unstable();
        words
    }
}

fn malformed(path: &Path, line_no: usize, line: &str) -> Error {
    Error::MalformedFact {
        file: path.display().to_string(),
        line: line_no,
        text: line.to_string(),
    }
}

fn for_each_fact(
    path: &Path,
    mut handle: impl FnMut(usize, &str) -> Result<()>,
) -> Result<()> {
    let contents = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    for (idx, raw) in contents.lines().enumerate() {
        let line = raw.trim_end_matches('\r');
        if line.trim().is_empty() || line.starts_with('%') {
            continue;
        }
        handle(idx + 1, line)?;
    }
    Ok(())
}

/// Cursor over the bytes of one fact line. The format is too rigid to need
/// a real tokenizer: every combinator returns `None` on the first byte that
/// does not fit, and the caller reports the whole line as malformed.
struct FactCursor<'a> {
    bytes: &'a [u8],
    at: usize,
}

impl<'a> FactCursor<'a> {
    fn new(line: &'a str) -> Self {
        FactCursor { bytes: line.as_bytes(), at: 0 }
    }

    fn tag(&mut self, t: &str) -> Option<()> {
        if self.bytes[self.at..].starts_with(t.as_bytes()) {
            self.at += t.len();
            Some(())
        } else {
            None
        }
    }

    fn unsigned(&mut self) -> Option<u64> {
        let start = self.at;
        while self.at < self.bytes.len() && self.bytes[self.at].is_ascii_digit() {
            self.at += 1;
        }
        if self.at == start {
            return None;
        }
        std::str::from_utf8(&self.bytes[start..self.at]).ok()?.parse().ok()
    }

    fn unsigned32(&mut self) -> Option<u32> {
        self.unsigned()?.try_into().ok()
    }

    /// A single-quoted atom; an embedded quote is written as `''`.
    fn quoted(&mut self) -> Option<String> {
        self.tag("'")?;
        let mut out = Vec::new();
        loop {
            let b = *self.bytes.get(self.at)?;
            self.at += 1;
            if b != b'\'' {
                out.push(b);
                continue;
            }
            if self.bytes.get(self.at) == Some(&b'\'') {
                out.push(b'\'');
                self.at += 1;
            } else {
                return String::from_utf8(out).ok();
            }
        }
    }

    fn pos_code(&mut self) -> Option<PartOfSpeech> {
        let b = *self.bytes.get(self.at)?;
        let pos = PartOfSpeech::from_code(b as char)?;
        self.at += 1;
        Some(pos)
    }

    fn end(&mut self) -> Option<()> {
        self.tag(".")?;
        if self.bytes[self.at..].iter().all(u8::is_ascii_whitespace) {
            Some(())
        } else {
            None
        }
    }
}

fn parse_s_fact(line: &str) -> Option<WordSenseEntry> {
    let mut c = FactCursor::new(line);
    c.tag("s(")?;
    let synset_id = c.unsigned()?;
    c.tag(",")?;
    let w_num = c.unsigned32()?;
    c.tag(",")?;
    let word = c.quoted()?;
    c.tag(",")?;
    let pos = c.pos_code()?;
    c.tag(",")?;
    let sense_number = c.unsigned32()?;
    c.tag(",")?;
    let tag_count = c.unsigned32()?;
    c.tag(")")?;
    c.end()?;
    (w_num >= 1 && sense_number >= 1 && synset_id / 100_000_000 == pos.id_prefix()).then_some(
        WordSenseEntry { synset_id, w_num, word, pos, sense_number, tag_count },
    )
}

fn parse_hyp_fact(line: &str) -> Option<(SynsetId, SynsetId)> {
    let mut c = FactCursor::new(line);
    c.tag("hyp(")?;
    let hypo = c.unsigned()?;
    c.tag(",")?;
    let hyper = c.unsigned()?;
    c.tag(")")?;
    c.end()?;
    Some((hypo, hyper))
}

fn parse_g_fact(line: &str) -> Option<(SynsetId, String)> {
    let mut c = FactCursor::new(line);
    c.tag("g(")?;
    let id = c.unsigned()?;
    c.tag(",")?;
    let gloss = c.quoted()?;
    c.tag(")")?;
    c.end()?;
    Some((id, gloss))
}
