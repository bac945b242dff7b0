//! Lexical database subcommands and batch equation generation.

use std::fs;
use std::path::Path;

use anyhow::{anyhow, Result};
use proxilog::unify::atom_string;
use proxilog::{
    eqgen, parse_pattern_lists, taxonomy, Measure, Pattern, SynsetId, WordNetStore, WordTerm,
};

use crate::session::Session;

/// Prints every sense of a word in the layout of the reference system:
/// a header, then per sense the synset id, word order number, synset
/// type, sense number, tag count and gloss.
pub fn info(session: &Session, word: &str) -> Result<()> {
    let store = session.store()?;
    let records = store.word_info(word);
    if records.is_empty() {
        eprintln!("no entry for '{word}'");
        return Ok(());
    }
    println!("INFORMATION ABOUT THE WORD '{word}' : ");
    for record in &records {
        println!(" Synset_id = {}", record.synset.synset_id);
        println!(" Word Order num. = {}", record.w_num);
        println!(
            " Synset type (n:NOUN, v:VERB, a:ADJ., s:ADJ. SAT., r:ADV.) = {}",
            record.synset.pos
        );
        println!(" Sense number = {}", record.sense_number);
        println!(" Tag_count = {}", record.tag_count);
        println!(" -----------");
        println!(" Gloss: ");
        println!(" {}", record.gloss);
        println!(" -----------");
    }
    Ok(())
}

pub fn sim(session: &Session, measure: Measure, a: &Pattern, b: &Pattern) -> Result<()> {
    let store = session.store()?;
    let terms = eqgen::default_patterns(store, &[a.clone(), b.clone()])?;
    let ctx = session.context()?;
    let result = ctx.similarity(measure, &terms[0], &terms[1])?;
    println!("{}({}, {})", measure.name(), terms[0], terms[1]);
    println!("raw = {}", result.raw);
    println!("normalized = {}", result.normalized);
    Ok(())
}

/// A full `word:pos:sense` resolves exactly, `word:pos` takes sense 1,
/// and a bare word takes its first sense in fact-file order — the way a
/// sequential fact-base lookup finds it.
fn resolve_pattern(store: &WordNetStore, pattern: &Pattern) -> Result<SynsetId> {
    match pattern.pos {
        Some(pos) => Ok(store.resolve(&WordTerm::new(
            pattern.word.clone(),
            pos,
            pattern.sense.unwrap_or(1),
        ))?),
        None => Ok(store.first_sense(&pattern.word)?),
    }
}

pub fn lcs(session: &Session, words: &[Pattern]) -> Result<()> {
    let store = session.store()?;
    let ids: Vec<SynsetId> = words
        .iter()
        .map(|p| resolve_pattern(store, p))
        .collect::<Result<_>>()?;
    let lcs = taxonomy::lcs_of_set(store, &ids)?;
    let components: Vec<String> = store
        .synset_components(lcs)?
        .iter()
        .map(ToString::to_string)
        .collect();
    println!("LCS_SS_ID = {lcs}, Words_LCS_SS_ID = [{}].", components.join(", "));
    Ok(())
}

pub fn hypernyms(session: &Session, word: &str, dot: Option<&Path>) -> Result<()> {
    let store = session.store()?;
    if let Some(path) = dot {
        let text = taxonomy::export_hypernym_graph(store, word)?;
        fs::write(path, text).map_err(|e| anyhow!("cannot write {}: {e}", path.display()))?;
        eprintln!("wrote {}", path.display());
        return Ok(());
    }
    let mut shown = false;
    for record in store.word_info(word) {
        if !record.synset.pos.is_hierarchical() {
            continue;
        }
        shown = true;
        let term = WordTerm::new(word, record.synset.pos, record.sense_number);
        println!("{term} (synset {})", record.synset.synset_id);
        let tree = taxonomy::hypernym_chains(store, record.synset.synset_id)?;
        for chain in &tree.chains {
            let labels: Vec<String> = chain.iter().map(|&id| node_label(store, id)).collect();
            println!("  {}", labels.join(" > "));
        }
    }
    if !shown {
        return Err(anyhow!("'{word}' has no noun or verb senses"));
    }
    Ok(())
}

fn node_label(store: &WordNetStore, id: SynsetId) -> String {
    if taxonomy::is_global_root(id) {
        return "root".into();
    }
    match store.synset(id) {
        Ok(synset) => format!("{} ({id})", synset.representative_word()),
        Err(_) => id.to_string(),
    }
}

pub fn hyponyms(session: &Session, pattern: &Pattern, level: u32) -> Result<()> {
    let store = session.store()?;
    let term = eqgen::default_patterns(store, std::slice::from_ref(pattern))?.remove(0);
    let concept = store.resolve(&term)?;
    let mut ids: Vec<SynsetId> =
        taxonomy::hyponyms_upto_level(store, concept, level)?.into_iter().collect();
    ids.sort_unstable();
    for id in &ids {
        let member = &store.synset(*id)?.members[0];
        println!(
            "{id} {}",
            WordTerm::new(member.word.clone(), member.pos, member.sense_number)
        );
    }
    eprintln!("{} hyponyms of {term} within {level} levels", ids.len());
    Ok(())
}

/// Reads pattern lists from a file and writes the generated equations as
/// `sim(Word1, Word2, Block, Degree).` facts, which load back with their
/// block structure intact.
pub fn gen_equations(
    session: &Session,
    measure: Measure,
    lists_file: &Path,
    out: Option<&Path>,
) -> Result<()> {
    let text = fs::read_to_string(lists_file)
        .map_err(|e| anyhow!("cannot read {}: {e}", lists_file.display()))?;
    let lists = parse_pattern_lists(&text)?;
    let ctx = session.context()?;
    let equations = eqgen::generate(&ctx, measure, &lists, session.lambda)?;
    let mut body = String::new();
    for eq in &equations {
        body.push_str(&format!(
            "sim({}, {}, {}, {}).\n",
            atom_string(&eq.sym_a),
            atom_string(&eq.sym_b),
            eq.block,
            eq.degree
        ));
    }
    match out {
        Some(path) => {
            fs::write(path, &body).map_err(|e| anyhow!("cannot write {}: {e}", path.display()))?;
            eprintln!("wrote {} equations to {}", equations.len(), path.display());
        }
        None => print!("{body}"),
    }
    Ok(())
}
