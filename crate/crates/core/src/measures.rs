//! Lexical similarity measures over the IS-A hierarchy.
//!
//! Six measures are provided: three edge-based (path, wup, lch) and three
//! based on information content (res, jcn, lin). A measure is evaluated on
//! every pair of hypernym chains of the two concepts and the best degree
//! wins, so two concepts related through any shared ancestor line get their
//! most favorable score. Raw values are mapped into `[0,1]` by a
//! per-measure normalization so they can serve as proximity degrees.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::infocontent::InfoContent;
use crate::store::{PartOfSpeech, SynsetId, WordNetStore, WordTerm};
use crate::taxonomy::{self, hypernym_chains, is_global_root};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Measure {
    Path,
    Wup,
    Lch,
    Res,
    Jcn,
    Lin,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MeasureKind {
    EdgeBased,
    IcBased,
}

impl Measure {
    pub const ALL: [Measure; 6] = [
        Measure::Path,
        Measure::Wup,
        Measure::Lch,
        Measure::Res,
        Measure::Jcn,
        Measure::Lin,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Measure::Path => "path",
            Measure::Wup => "wup",
            Measure::Lch => "lch",
            Measure::Res => "res",
            Measure::Jcn => "jcn",
            Measure::Lin => "lin",
        }
    }

    pub fn kind(self) -> MeasureKind {
        match self {
            Measure::Path | Measure::Wup | Measure::Lch => MeasureKind::EdgeBased,
            Measure::Res | Measure::Jcn | Measure::Lin => MeasureKind::IcBased,
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "path" => Ok(Measure::Path),
            "wup" => Ok(Measure::Wup),
            "lch" => Ok(Measure::Lch),
            "res" => Ok(Measure::Res),
            "jcn" => Ok(Measure::Jcn),
            "lin" => Ok(Measure::Lin),
            _ => Err(Error::InvalidArgument(format!(
                "unknown measure '{s}' (expected path, wup, lch, res, jcn or lin)"
            ))),
        }
    }
}

/// A measure evaluation: the raw degree as defined by the measure and its
/// normalized form in `[0,1]`.
#[derive(Clone, Copy, Debug)]
pub struct SimilarityResult {
    pub raw: f64,
    pub normalized: f64,
}

/// Shared evaluation state: the database, the information-content tables
/// and the per-hierarchy maximum depth needed by lch normalization.
pub struct SimilarityContext<'a> {
    store: &'a WordNetStore,
    ic: InfoContent<'a>,
    noun_depth: OnceLock<u32>,
    verb_depth: OnceLock<u32>,
}

impl<'a> SimilarityContext<'a> {
    pub fn new(store: &'a WordNetStore, epsilon: f64) -> Result<Self> {
        Ok(SimilarityContext {
            store,
            ic: InfoContent::new(store, epsilon)?,
            noun_depth: OnceLock::new(),
            verb_depth: OnceLock::new(),
        })
    }

    pub fn store(&self) -> &'a WordNetStore {
        self.store
    }

    pub fn info_content(&self) -> &InfoContent<'a> {
        &self.ic
    }

    /// Maximum node-counted depth of the hierarchy, cached per part of
    /// speech.
    pub fn max_depth(&self, pos: PartOfSpeech) -> Result<u32> {
        let cell = match pos {
            PartOfSpeech::Noun => &self.noun_depth,
            PartOfSpeech::Verb => &self.verb_depth,
            other => return Err(Error::NotHierarchical(other)),
        };
        if let Some(&d) = cell.get() {
            return Ok(d);
        }
        let d = taxonomy::max_depth(self.store, pos)?;
        Ok(*cell.get_or_init(|| d))
    }

    /// Measure between two word senses; resolves both and evaluates over
    /// their synsets.
    pub fn similarity(&self, measure: Measure, a: &WordTerm, b: &WordTerm) -> Result<SimilarityResult> {
        let c1 = self.store.resolve(a)?;
        let c2 = self.store.resolve(b)?;
        self.similarity_synsets(measure, c1, c2)
    }

    /// Measure between two concepts of the same hierarchy: the formula is
    /// evaluated on every chain pair and the maximum raw degree is kept.
    pub fn similarity_synsets(
        &self,
        measure: Measure,
        c1: SynsetId,
        c2: SynsetId,
    ) -> Result<SimilarityResult> {
        let pos = self.check_pair(c1, c2)?;
        let t1 = hypernym_chains(self.store, c1)?;
        let t2 = hypernym_chains(self.store, c2)?;

        let (ic1, ic2) = match measure.kind() {
            MeasureKind::IcBased => (self.ic.ic(c1)?, self.ic.ic(c2)?),
            MeasureKind::EdgeBased => (0.0, 0.0),
        };
        let max_depth = match measure {
            Measure::Lch => self.max_depth(pos)? as f64,
            _ => 0.0,
        };

        let mut best = f64::NEG_INFINITY;
        for chain1 in &t1.chains {
            for chain2 in &t2.chains {
                let mut common = 0;
                while common < chain1.len()
                    && common < chain2.len()
                    && chain1[common] == chain2[common]
                {
                    common += 1;
                }
                let depth_lcs = common as f64;
                let len1 = chain1.len() as f64;
                let len2 = chain2.len() as f64;
                // Node count of the path c1 .. lcs .. c2 along this pair.
                let len = len1 + len2 - 2.0 * depth_lcs + 1.0;
                let raw = match measure {
                    Measure::Path => 1.0 / len,
                    Measure::Wup => 2.0 * depth_lcs / (len1 + len2),
                    Measure::Lch => -(len / (2.0 * max_depth)).ln(),
                    Measure::Res | Measure::Jcn | Measure::Lin => {
                        let ic_lcs = self.ic.ic(chain1[common - 1])?;
                        match measure {
                            Measure::Res => ic_lcs,
                            Measure::Jcn => {
                                let dist = ic1 + ic2 - 2.0 * ic_lcs;
                                if dist <= 0.0 {
                                    f64::INFINITY
                                } else {
                                    1.0 / dist
                                }
                            }
                            Measure::Lin => {
                                if ic1 + ic2 <= 0.0 {
                                    0.0
                                } else {
                                    2.0 * ic_lcs / (ic1 + ic2)
                                }
                            }
                            _ => unreachable!(),
                        }
                    }
                };
                if raw > best {
                    best = raw;
                }
            }
        }
        Ok(SimilarityResult {
            raw: best,
            normalized: self.normalize(measure, best, pos)?,
        })
    }

    fn check_pair(&self, c1: SynsetId, c2: SynsetId) -> Result<PartOfSpeech> {
        let pos1 = self.concept_pos(c1)?;
        let pos2 = self.concept_pos(c2)?;
        if pos1 != pos2 {
            return Err(Error::PosMismatch(pos1, pos2));
        }
        Ok(pos1)
    }

    fn concept_pos(&self, c: SynsetId) -> Result<PartOfSpeech> {
        if is_global_root(c) {
            return Ok(if c == taxonomy::NOUN_ROOT {
                PartOfSpeech::Noun
            } else {
                PartOfSpeech::Verb
            });
        }
        let pos = self.store.synset(c)?.pos;
        if pos.is_hierarchical() {
            Ok(pos)
        } else {
            Err(Error::NotHierarchical(pos))
        }
    }

    /// Maps a raw degree into `[0,1]`. path, wup and lin are already in
    /// range and pass through unchanged; lch and res are divided by their
    /// theoretical maxima; jcn's unbounded range is mapped smoothly with
    /// infinity landing on 1.
    pub fn normalize(&self, measure: Measure, raw: f64, pos: PartOfSpeech) -> Result<f64> {
        if raw < 0.0 {
            return Err(Error::InvalidArgument(format!(
                "raw {measure} degree must be non-negative, got {raw}"
            )));
        }
        Ok(match measure {
            Measure::Path | Measure::Wup | Measure::Lin => raw,
            Measure::Lch => {
                let max = (2.0 * self.max_depth(pos)? as f64).ln();
                (raw / max).min(1.0)
            }
            Measure::Res => {
                let max = self.ic.ic_max(pos)?;
                (raw / max).min(1.0)
            }
            Measure::Jcn => {
                if raw.is_infinite() {
                    1.0
                } else {
                    raw / (1.0 + raw)
                }
            }
        })
    }
}
