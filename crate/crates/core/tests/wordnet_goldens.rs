//! Database-backed golden tests: fixed record contents, taxonomy
//! landmarks and the similarity degrees of the well-known word groups.

mod common;

use proxilog::eqgen;
use proxilog::store::Pattern;
use proxilog::taxonomy::{self, NOUN_ROOT};
use proxilog::{Measure, PartOfSpeech, SimilarityContext, WordTerm};
use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::store;

#[test]
fn first_cat_record_matches_reference() {
    let infos = store().word_info("cat");
    assert_eq!(infos.len(), 9, "cat has seven noun and two verb senses");
    let first = &infos[0];
    assert_eq!(first.synset.synset_id, 102_121_620);
    assert_eq!(first.w_num, 1);
    assert_eq!(first.synset.pos, PartOfSpeech::Noun);
    assert_eq!(first.sense_number, 1);
    assert_eq!(first.tag_count, 18);
    assert!(first
        .gloss
        .starts_with("feline mammal usually having thick soft fur and no ability to roar"));
}

#[test]
fn unknown_word_is_an_error() {
    let term = WordTerm::new("zzzq", PartOfSpeech::Noun, 1);
    assert!(store().resolve(&term).is_err());
}

#[test]
fn word_senses_resolve_back_to_their_synset() {
    let store = store();
    let mut ids: Vec<_> = store.synsets().map(|s| s.synset_id).collect();
    ids.sort_unstable();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for &id in ids.choose_multiple(&mut rng, 100) {
        for member in store.synset_components(id).unwrap() {
            assert_eq!(store.resolve(&member).unwrap(), id, "round trip for {member}");
        }
    }
}

#[test]
fn lcs_of_the_feline_set() {
    let store = store();
    // Bare words resolve in fact-file order; for "leopard" that is the
    // animal (sense 2), not the pelt (sense 1), which is what makes the
    // common ancestor feline rather than a near-root concept.
    let ids: Vec<_> = ["lion", "leopard", "cougar", "cat"]
        .iter()
        .map(|w| store.first_sense(w).unwrap())
        .collect();
    assert_eq!(ids[1], 102_128_385, "bare leopard is the animal sense");
    let lcs = taxonomy::lcs_of_set(store, &ids).unwrap();
    assert_eq!(lcs, 102_120_997);
    let words: Vec<String> = store
        .synset_components(lcs)
        .unwrap()
        .iter()
        .map(|t| t.to_string())
        .collect();
    assert_eq!(words, ["feline:n:1", "felid:n:1"]);
}

/// Every chain starts at the virtual root, enters the hierarchy at a
/// top synset, ends in the queried concept, and replays edge by edge
/// against the stored hypernym links.
#[test]
fn hypernym_chains_replay_against_stored_links() {
    let store = store();
    let mut ids: Vec<_> = store
        .synsets()
        .filter(|s| s.pos.is_hierarchical())
        .map(|s| s.synset_id)
        .collect();
    ids.sort_unstable();
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for &id in ids.choose_multiple(&mut rng, 50) {
        let tree = taxonomy::hypernym_chains(store, id).unwrap();
        assert_eq!(tree.concept, id);
        assert!(!tree.chains.is_empty());
        for chain in &tree.chains {
            assert!(taxonomy::is_global_root(chain[0]));
            // The entry synset is a genuine top, or — inside the one cycle
            // the database ships with — its parents all lie on the chain.
            assert!(
                store.hypernyms_of(chain[1]).iter().all(|p| chain[1..].contains(p)),
                "chain enters at an effective top synset"
            );
            assert_eq!(*chain.last().unwrap(), id);
            for pair in chain[1..].windows(2) {
                assert!(
                    store.hypernyms_of(pair[1]).contains(&pair[0]),
                    "edge {} -> {} must be a stored link",
                    pair[1],
                    pair[0]
                );
            }
        }
    }
}

#[test]
fn golden_wup_degrees_for_the_published_word_groups() {
    let ctx = SimilarityContext::new(store(), proxilog::DEFAULT_EPSILON).unwrap();
    let lists = vec![
        vec![
            Pattern::plain("man"),
            Pattern::plain("human"),
            Pattern::plain("person"),
        ],
        vec![
            "grain:n:8".parse::<Pattern>().unwrap(),
            "wheat:n:2".parse::<Pattern>().unwrap(),
        ],
    ];
    let equations = eqgen::generate(&ctx, Measure::Wup, &lists, 0.0).unwrap();
    let got: Vec<(&str, &str, u32, f64)> = equations
        .iter()
        .map(|eq| (eq.sym_a.as_str(), eq.sym_b.as_str(), eq.block, eq.degree))
        .collect();
    let want = [
        ("man", "human", 1, 0.56),
        ("man", "person", 1, 0.8888888888888888),
        ("human", "person", 1, 0.6086956521739131),
        ("grain", "wheat", 0, 0.2608695652173913),
    ];
    assert_eq!(got.len(), want.len());
    for ((sa, sb, block, degree), (wa, wb, wblock, wdegree)) in got.iter().zip(want) {
        assert_eq!((*sa, *sb, *block), (wa, wb, wblock));
        assert!(
            (degree - wdegree).abs() < 1e-9,
            "{sa} ~ {sb}: got {degree}, want {wdegree}"
        );
    }
}

/// With every word resolvable as a noun, one equation per unordered
/// pair of distinct words is produced.
#[test]
fn equation_count_is_pairwise_over_resolvable_words() {
    let store = store();
    let ctx = SimilarityContext::new(store, proxilog::DEFAULT_EPSILON).unwrap();
    let mut words: Vec<&str> = store
        .words_by_pos(PartOfSpeech::Noun)
        .into_iter()
        .map(|(w, _)| w)
        .filter(|w| w.chars().all(|c| c.is_ascii_lowercase()))
        .collect();
    words.sort_unstable();
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    for k in [3usize, 4, 5] {
        let sample: Vec<Pattern> = words
            .choose_multiple(&mut rng, k)
            .map(|w| Pattern::plain(*w))
            .collect();
        let equations = eqgen::generate(&ctx, Measure::Wup, &[sample.clone()], 0.0).unwrap();
        assert_eq!(
            equations.len(),
            k * (k - 1) / 2,
            "C({k},2) equations for {sample:?}"
        );
    }
}

/// Program symbols split by the part of speech they resolve under:
/// father/mother land in the verb class, the ancestor words in the noun
/// class, and no equation crosses the two.
#[test]
fn family_predicates_pair_within_their_class() {
    let ctx = SimilarityContext::new(store(), proxilog::DEFAULT_EPSILON).unwrap();
    let predicates: Vec<String> = ["progenitor", "father", "mother", "ancestor", "ascendant"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let equations = eqgen::auto_generate(&ctx, Measure::Wup, &[], &[], &predicates, 0.0).unwrap();
    assert!(!equations.is_empty());
    let verbs = ["father", "mother"];
    let mut saw_verb_pair = false;
    let mut saw_noun_pair = false;
    for eq in &equations {
        let a_verb = verbs.contains(&eq.sym_a.as_str());
        let b_verb = verbs.contains(&eq.sym_b.as_str());
        assert_eq!(a_verb, b_verb, "no cross-class pair: {} ~ {}", eq.sym_a, eq.sym_b);
        saw_verb_pair |= a_verb && b_verb;
        saw_noun_pair |= !a_verb && !b_verb;
    }
    assert!(saw_verb_pair && saw_noun_pair);
}

/// Level-bounded hyponym sets agree with a plain breadth-first walk
/// over the stored links and nest as the level grows.
#[test]
fn hyponym_levels_match_a_breadth_first_walk() {
    use std::collections::{HashSet, VecDeque};

    let store = store();
    let feline = 102_120_997;
    let mut frontier = VecDeque::from([(feline, 0u32)]);
    let mut reached: HashSet<u64> = HashSet::new();
    let mut by_level: Vec<HashSet<u64>> = Vec::new();
    for level in 1..=3u32 {
        while let Some(&(node, dist)) = frontier.front() {
            if dist >= level {
                break;
            }
            frontier.pop_front();
            for &child in store.hyponyms_of(node) {
                if child != feline && reached.insert(child) {
                    frontier.push_back((child, dist + 1));
                }
            }
        }
        by_level.push(reached.clone());
        assert_eq!(
            taxonomy::hyponyms_upto_level(store, feline, level).unwrap(),
            by_level[level as usize - 1]
        );
    }
    assert!(by_level[0].len() < by_level[2].len());
    assert!(by_level[0].is_subset(&by_level[1]) && by_level[1].is_subset(&by_level[2]));
    let all = taxonomy::all_hyponyms(store, feline).unwrap();
    assert!(by_level[2].is_subset(&all));
}

/// The verb database contains one hypernym cycle: restrain and inhibit
/// list each other as their only parent. Chain extraction must break the
/// loop instead of coming back empty, and every measure over the pair
/// must stay finite.
#[test]
fn hypernym_cycle_is_broken_not_fatal() {
    let store = store();
    let restrain = WordTerm::new("restrain", PartOfSpeech::Verb, 1);
    let inhibit = WordTerm::new("inhibit", PartOfSpeech::Verb, 4);
    let (r, i) = (store.resolve(&restrain).unwrap(), store.resolve(&inhibit).unwrap());
    assert!(store.hypernyms_of(r).contains(&i) && store.hypernyms_of(i).contains(&r));
    for id in [r, i] {
        let tree = taxonomy::hypernym_chains(store, id).unwrap();
        assert!(!tree.chains.is_empty(), "cycle member {id} keeps a chain");
    }
    let ctx = SimilarityContext::new(store, proxilog::DEFAULT_EPSILON).unwrap();
    for measure in Measure::ALL {
        let got = ctx.similarity(measure, &restrain, &inhibit).unwrap();
        assert!(
            got.normalized.is_finite() && (0.0..=1.0).contains(&got.normalized),
            "{measure}: {got:?}"
        );
    }
    // With the back-edge dropped the pair meet only at the root; their
    // chains have three nodes each, so the connecting path has five.
    let path = ctx.similarity(Measure::Path, &restrain, &inhibit).unwrap();
    assert!((path.raw - 0.2).abs() < 1e-9, "got {}", path.raw);
}

#[test]
fn noun_root_spans_the_hierarchy() {
    let store = store();
    let tops = taxonomy::top_synsets(store, PartOfSpeech::Noun);
    assert!(tops.contains(&100_001_740), "entity heads the noun hierarchy");
    let depth = taxonomy::max_depth(store, PartOfSpeech::Noun).unwrap();
    assert!(depth >= 10, "noun hierarchy is deep, got {depth}");
    assert!(taxonomy::is_global_root(NOUN_ROOT));
}
