//! Latency measurement for the similarity measures.
//!
//! Two experiment shapes: `senses` takes the twelve nouns with the most
//! senses, pairs them off, and walks the Cartesian product of their
//! sense combinations; `random` samples word-sense pairs uniformly, each
//! pair drawn within one part of speech (noun or verb). Both report the
//! elapsed time, latency in ms/pair and throughput in pairs/s.

use std::str::FromStr;
use std::time::Instant;

use anyhow::{anyhow, Result};
use clap::Args;
use proxilog::{Measure, MeasureKind, PartOfSpeech, SimilarityContext, WordTerm};
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::session::Session;

#[derive(Args)]
pub struct BenchArgs {
    /// Pair source: random word senses, or sense products of the twelve
    /// most polysemous nouns
    #[arg(long, default_value = "random")]
    mode: Mode,

    /// A measure name, or a group: edge, ic, all
    #[arg(long, default_value = "edge")]
    measure: Selection,

    /// Pair count in random mode (default 10000 edge-based, 250 IC-based)
    #[arg(long, value_name = "N")]
    pairs: Option<usize>,

    /// Seed for the pair sampler
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Clone, Copy)]
enum Mode {
    Random,
    Senses,
}

impl FromStr for Mode {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "random" => Ok(Mode::Random),
            "senses" => Ok(Mode::Senses),
            other => Err(anyhow!("unknown mode '{other}' (expected random or senses)")),
        }
    }
}

#[derive(Clone, Copy)]
enum Selection {
    One(Measure),
    Edge,
    Ic,
    All,
}

impl Selection {
    fn measures(self) -> Vec<Measure> {
        let group = |kind: MeasureKind| {
            Measure::ALL.iter().copied().filter(|m| m.kind() == kind).collect()
        };
        match self {
            Selection::One(m) => vec![m],
            Selection::Edge => group(MeasureKind::EdgeBased),
            Selection::Ic => group(MeasureKind::IcBased),
            Selection::All => Measure::ALL.to_vec(),
        }
    }
}

impl FromStr for Selection {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge" => Ok(Selection::Edge),
            "ic" => Ok(Selection::Ic),
            "all" => Ok(Selection::All),
            other => Ok(Selection::One(other.parse()?)),
        }
    }
}

/// The default pair counts mirror the published experiment sizes: IC
/// measures are two to three orders of magnitude slower, so they get a
/// far smaller sample.
fn default_pairs(kind: MeasureKind) -> usize {
    match kind {
        MeasureKind::EdgeBased => 10_000,
        MeasureKind::IcBased => 250,
    }
}

pub fn run(session: &Session, args: &BenchArgs) -> Result<()> {
    let ctx = session.context()?;
    let measures = args.measure.measures();
    let max_pairs = measures
        .iter()
        .map(|m| args.pairs.unwrap_or_else(|| default_pairs(m.kind())))
        .max()
        .unwrap_or(0);

    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let pool = match args.mode {
        Mode::Random => random_pairs(&ctx, &mut rng, max_pairs)?,
        Mode::Senses => sense_pairs(&ctx)?,
    };
    eprintln!("{} candidate pairs", pool.len());
    warm_caches(&ctx, &measures)?;

    println!(
        "{:<8} {:>8} {:>12} {:>10} {:>12}",
        "measure", "pairs", "time(ms)", "ms/pair", "pairs/s"
    );
    let mut latencies: Vec<(MeasureKind, f64)> = Vec::new();
    for &measure in &measures {
        let n = match args.mode {
            Mode::Random => args
                .pairs
                .unwrap_or_else(|| default_pairs(measure.kind()))
                .min(pool.len()),
            Mode::Senses => pool.len(),
        };
        let slice = &pool[..n];
        let started = Instant::now();
        let mut acc = 0.0;
        for (a, b) in slice {
            acc += ctx.similarity(measure, a, b)?.normalized;
        }
        let ms = started.elapsed().as_secs_f64() * 1e3;
        let per_pair = ms / n as f64;
        println!(
            "{:<8} {:>8} {:>12.1} {:>10.4} {:>12.0}",
            measure.name(),
            n,
            ms,
            per_pair,
            n as f64 / (ms / 1e3)
        );
        eprintln!("  mean degree {:.4}", acc / n as f64);
        latencies.push((measure.kind(), per_pair));
    }

    let avg = |kind: MeasureKind| {
        let group: Vec<f64> = latencies
            .iter()
            .filter(|(k, _)| *k == kind)
            .map(|(_, l)| *l)
            .collect();
        (!group.is_empty()).then(|| group.iter().sum::<f64>() / group.len() as f64)
    };
    if let (Some(edge), Some(ic)) = (avg(MeasureKind::EdgeBased), avg(MeasureKind::IcBased)) {
        println!("ic/edge latency ratio: {:.1}", ic / edge);
    }
    Ok(())
}

/// Forces the lazy depth and frequency tables to build outside the timed
/// loops, so the first measure is not charged for them.
fn warm_caches(ctx: &SimilarityContext<'_>, measures: &[Measure]) -> Result<()> {
    let started = Instant::now();
    for pos in [PartOfSpeech::Noun, PartOfSpeech::Verb] {
        ctx.max_depth(pos)?;
    }
    if measures.iter().any(|m| m.kind() == MeasureKind::IcBased) {
        for pos in [PartOfSpeech::Noun, PartOfSpeech::Verb] {
            if let Some(synset) = ctx.store().synsets().find(|s| s.pos == pos) {
                ctx.info_content().ic(synset.synset_id)?;
            }
        }
    }
    eprintln!("caches warmed in {:.1}s", started.elapsed().as_secs_f64());
    Ok(())
}

/// Uniform word-sense pairs: each pair picks noun or verb, then two
/// random senses of random words of that part of speech.
fn random_pairs(
    ctx: &SimilarityContext<'_>,
    rng: &mut ChaCha8Rng,
    count: usize,
) -> Result<Vec<(WordTerm, WordTerm)>> {
    let store = ctx.store();
    let nouns = store.words_by_pos(PartOfSpeech::Noun);
    let verbs = store.words_by_pos(PartOfSpeech::Verb);
    let sample = |rng: &mut ChaCha8Rng, pos: PartOfSpeech| -> WordTerm {
        let pool = if pos == PartOfSpeech::Noun { &nouns } else { &verbs };
        let &(word, _) = pool.choose(rng).expect("nonempty word list");
        let senses: Vec<u32> = store
            .word_info(word)
            .iter()
            .filter(|r| r.synset.pos == pos)
            .map(|r| r.sense_number)
            .collect();
        WordTerm::new(word, pos, *senses.choose(rng).expect("word has senses"))
    };
    Ok((0..count)
        .map(|_| {
            let pos = if rng.random_bool(0.5) { PartOfSpeech::Noun } else { PartOfSpeech::Verb };
            (sample(rng, pos), sample(rng, pos))
        })
        .collect())
}

/// The twelve nouns with the most senses, paired off in order, expanded
/// to the Cartesian product of their sense combinations.
fn sense_pairs(ctx: &SimilarityContext<'_>) -> Result<Vec<(WordTerm, WordTerm)>> {
    let store = ctx.store();
    let mut words = store.words_by_pos(PartOfSpeech::Noun);
    words.sort_by(|(wa, na), (wb, nb)| nb.cmp(na).then_with(|| wa.cmp(wb)));
    words.truncate(12);
    let senses: Vec<(&str, Vec<u32>)> = words
        .iter()
        .map(|&(word, _)| {
            let list: Vec<u32> = store
                .word_info(word)
                .iter()
                .filter(|r| r.synset.pos == PartOfSpeech::Noun)
                .map(|r| r.sense_number)
                .collect();
            (word, list)
        })
        .collect();
    let mut pairs = Vec::new();
    for chunk in senses.chunks(2) {
        let [(wa, sa), (wb, sb)] = chunk else { continue };
        eprintln!("pair {wa} ({} senses) x {wb} ({} senses)", sa.len(), sb.len());
        for &s1 in sa {
            for &s2 in sb {
                pairs.push((
                    WordTerm::new(*wa, PartOfSpeech::Noun, s1),
                    WordTerm::new(*wb, PartOfSpeech::Noun, s2),
                ));
            }
        }
    }
    Ok(pairs)
}
