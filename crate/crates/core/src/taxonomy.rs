//! IS-A hierarchy traversal: hypernym chains, depths, least common
//! subsumers and bounded hyponym enumeration.
//!
//! Chains are node lists running from a virtual per-part-of-speech root down
//! to the concept. Depth and path length count nodes, so the root has depth
//! 1 and `len(c, c)` is 1; this is the convention under which the published
//! Wu-Palmer degrees for the WNprolog database are reproduced exactly.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::store::{PartOfSpeech, SynsetId, WordNetStore};

/// Virtual root above all noun synsets.
pub const NOUN_ROOT: SynsetId = 100_000_000_000;
/// Virtual root above all verb synsets.
pub const VERB_ROOT: SynsetId = 200_000_000_000;

/// The virtual root of the hierarchy for the given part of speech, if it
/// has one.
pub fn global_root(pos: PartOfSpeech) -> Result<SynsetId> {
    match pos {
        PartOfSpeech::Noun => Ok(NOUN_ROOT),
        PartOfSpeech::Verb => Ok(VERB_ROOT),
        other => Err(Error::NotHierarchical(other)),
    }
}

pub fn is_global_root(id: SynsetId) -> bool {
    id == NOUN_ROOT || id == VERB_ROOT
}

/// All root-to-concept paths of one concept. "Tree" is a misnomer kept from
/// the literature: concepts with multiple hypernyms have converging paths.
#[derive(Clone, Debug)]
pub struct HyperTree {
    pub concept: SynsetId,
    /// Each chain starts at the virtual root and ends at `concept`; chains
    /// are sorted lexicographically by their node sequence.
    pub chains: Vec<Vec<SynsetId>>,
}

/// One least-common-subsumer candidate from comparing a single pair of
/// chains. Depths are node counts within the two compared chains.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LcsEntry {
    pub lcs: SynsetId,
    pub depth_lcs: u32,
    pub depth_c1: u32,
    pub depth_c2: u32,
}

fn require_hierarchical(store: &WordNetStore, concept: SynsetId) -> Result<PartOfSpeech> {
    if is_global_root(concept) {
        return Ok(if concept == NOUN_ROOT {
            PartOfSpeech::Noun
        } else {
            PartOfSpeech::Verb
        });
    }
    let pos = store.synset(concept)?.pos;
    if pos.is_hierarchical() {
        Ok(pos)
    } else {
        Err(Error::NotHierarchical(pos))
    }
}

/// All hypernym chains of a concept, each prefixed with the virtual root.
pub fn hypernym_chains(store: &WordNetStore, concept: SynsetId) -> Result<HyperTree> {
    let pos = require_hierarchical(store, concept)?;
    let root = global_root(pos)?;
    if concept == root {
        return Ok(HyperTree { concept, chains: vec![vec![root]] });
    }
    let mut chains = Vec::new();
    // Iterative depth-first walk upwards; `path` holds the concept-to-root
    // prefix built so far, innermost concept first. Each frame tracks the
    // next parent to try and whether any parent was followed from there.
    let mut path = vec![concept];
    let mut frames = vec![(0usize, false)];
    loop {
        let current = *path.last().expect("nonempty path");
        let parents = store.hypernyms_of(current);
        let (cursor, followed) = frames.last_mut().expect("frame per path node");
        if *cursor >= parents.len() {
            // A node from which no parent was followed tops its chain:
            // either it has none, or every parent already sits on the path.
            // The latter happens in the one hypernym cycle the database
            // ships with (restrain/inhibit, each the other's only parent);
            // dropping the repeated edge breaks the loop and keeps every
            // concept below it reachable from the root.
            if !*followed {
                let mut chain: Vec<SynsetId> = path.iter().rev().copied().collect();
                chain.insert(0, root);
                chains.push(chain);
            }
            path.pop();
            frames.pop();
            if path.is_empty() {
                break;
            }
            continue;
        }
        let parent = parents[*cursor];
        *cursor += 1;
        if path.contains(&parent) {
            continue;
        }
        *followed = true;
        path.push(parent);
        frames.push((0, false));
    }
    chains.sort_unstable();
    Ok(HyperTree { concept, chains })
}

/// Compares every pair of chains of the two concepts and reports, per pair,
/// the last common node before the first mismatch along with the node-count
/// depths involved.
pub fn lcs(store: &WordNetStore, c1: SynsetId, c2: SynsetId) -> Result<Vec<LcsEntry>> {
    let p1 = require_hierarchical(store, c1)?;
    let p2 = require_hierarchical(store, c2)?;
    if p1 != p2 {
        return Err(Error::PosMismatch(p1, p2));
    }
    let t1 = hypernym_chains(store, c1)?;
    let t2 = hypernym_chains(store, c2)?;
    let mut out = Vec::with_capacity(t1.chains.len() * t2.chains.len());
    for chain1 in &t1.chains {
        for chain2 in &t2.chains {
            let mut common = 0;
            while common < chain1.len()
                && common < chain2.len()
                && chain1[common] == chain2[common]
            {
                common += 1;
            }
            debug_assert!(common >= 1, "chains of one part of speech share the root");
            out.push(LcsEntry {
                lcs: chain1[common - 1],
                depth_lcs: common as u32,
                depth_c1: chain1.len() as u32,
                depth_c2: chain2.len() as u32,
            });
        }
    }
    Ok(out)
}

/// The deepest least common subsumer of a pair, preferring the first entry
/// on ties for determinism.
pub fn deepest_lcs(store: &WordNetStore, c1: SynsetId, c2: SynsetId) -> Result<LcsEntry> {
    let entries = lcs(store, c1, c2)?;
    Ok(entries
        .iter()
        .copied()
        .max_by_key(|e| e.depth_lcs)
        .expect("chain pairs always exist"))
}

/// Folds pairwise over the list, at each step keeping the deepest subsumer
/// candidate. A singleton list is its own subsumer.
pub fn lcs_of_set(store: &WordNetStore, concepts: &[SynsetId]) -> Result<SynsetId> {
    let Some((&first, rest)) = concepts.split_first() else {
        return Err(Error::InvalidArgument(
            "least common subsumer of an empty set".into(),
        ));
    };
    require_hierarchical(store, first)?;
    let mut acc = first;
    for &next in rest {
        acc = deepest_lcs(store, acc, next)?.lcs;
    }
    Ok(acc)
}

/// All synsets reachable by at most `level` hyponym steps, excluding the
/// concept itself.
pub fn hyponyms_upto_level(
    store: &WordNetStore,
    concept: SynsetId,
    level: u32,
) -> Result<HashSet<SynsetId>> {
    if level < 1 {
        return Err(Error::InvalidArgument("hyponym level must be at least 1".into()));
    }
    collect_hyponyms(store, concept, Some(level))
}

/// The full transitive closure of the hyponym relation below a concept.
pub fn all_hyponyms(store: &WordNetStore, concept: SynsetId) -> Result<HashSet<SynsetId>> {
    collect_hyponyms(store, concept, None)
}

fn collect_hyponyms(
    store: &WordNetStore,
    concept: SynsetId,
    level: Option<u32>,
) -> Result<HashSet<SynsetId>> {
    let pos = require_hierarchical(store, concept)?;
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    queue.push_back((concept, 0u32));
    while let Some((node, dist)) = queue.pop_front() {
        if level.is_some_and(|l| dist >= l) {
            continue;
        }
        let below: Vec<SynsetId> = if is_global_root(node) {
            top_synsets(store, pos)
        } else {
            store.hyponyms_of(node).to_vec()
        };
        for child in below {
            if child != concept && seen.insert(child) {
                queue.push_back((child, dist + 1));
            }
        }
    }
    Ok(seen)
}

/// Synsets of the part of speech with no hypernym: the direct children of
/// the virtual root.
pub fn top_synsets(store: &WordNetStore, pos: PartOfSpeech) -> Vec<SynsetId> {
    let mut tops: Vec<SynsetId> = store
        .synsets()
        .filter(|s| s.pos == pos && store.hypernyms_of(s.synset_id).is_empty())
        .map(|s| s.synset_id)
        .collect();
    tops.sort_unstable();
    tops
}

/// The maximum node-counted depth (virtual root included) reached by any
/// synset of the part of speech.
pub fn max_depth(store: &WordNetStore, pos: PartOfSpeech) -> Result<u32> {
    global_root(pos)?;
    let mut memo: HashMap<SynsetId, u32> = HashMap::new();
    let mut deepest = 1;
    for synset in store.synsets() {
        if synset.pos == pos {
            deepest = deepest.max(depth_from_root(store, synset.synset_id, &mut memo));
        }
    }
    Ok(deepest)
}

/// Longest chain length from the virtual root down to `id`, memoized.
fn depth_from_root(
    store: &WordNetStore,
    id: SynsetId,
    memo: &mut HashMap<SynsetId, u32>,
) -> u32 {
    if let Some(&d) = memo.get(&id) {
        return d;
    }
    // Break potential cycles by claiming a provisional depth first.
    memo.insert(id, 1);
    let parents = store.hypernyms_of(id);
    let d = if parents.is_empty() {
        2
    } else {
        1 + parents
            .iter()
            .map(|&p| depth_from_root(store, p, memo))
            .max()
            .expect("nonempty parents")
    };
    memo.insert(id, d);
    d
}

/// DOT digraph over the union of the hypernym trees of every noun and verb
/// sense of a word. Nodes are labeled with the representative word of the
/// synset; edges point from hyponym to hypernym.
pub fn export_hypernym_graph(store: &WordNetStore, word: &str) -> Result<String> {
    let senses: Vec<SynsetId> = store
        .word_info(word)
        .iter()
        .filter(|info| info.synset.pos.is_hierarchical())
        .map(|info| info.synset.synset_id)
        .collect();
    if senses.is_empty() {
        if store.word_info(word).is_empty() {
            return Err(Error::UnknownWord(word.to_string()));
        }
        return Err(Error::InvalidArgument(format!(
            "'{word}' has no noun or verb senses"
        )));
    }
    let mut edges = HashSet::new();
    for &sense in &senses {
        let tree = hypernym_chains(store, sense)?;
        for chain in &tree.chains {
            for pair in chain.windows(2) {
                edges.insert((pair[1], pair[0]));
            }
        }
    }
    let mut nodes: Vec<SynsetId> = edges
        .iter()
        .flat_map(|&(a, b)| [a, b])
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    nodes.sort_unstable();
    let mut edges: Vec<(SynsetId, SynsetId)> = edges.into_iter().collect();
    edges.sort_unstable();

    let label = |id: SynsetId| -> String {
        if is_global_root(id) {
            "*root*".to_string()
        } else {
            store
                .synset(id)
                .map(|s| s.representative_word().to_string())
                .unwrap_or_else(|_| id.to_string())
        }
    };
    let node_id = |id: SynsetId| format!("{}_{}", label(id).replace([' ', '"'], "_"), id);

    let mut dot = String::from("digraph hypernyms {\n");
    for &n in &nodes {
        writeln!(
            dot,
            "  \"{}\" [label=\"{}\" tooltip=\"{}\"];",
            node_id(n),
            label(n).replace('"', "\\\""),
            n
        )
        .expect("write to string");
    }
    for &(from, to) in &edges {
        writeln!(dot, "  \"{}\" -> \"{}\";", node_id(from), node_id(to)).expect("write to string");
    }
    dot.push_str("}\n");
    Ok(dot)
}
