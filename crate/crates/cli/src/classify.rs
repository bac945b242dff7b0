//! Text classification against word-category ontologies.

use std::fs;
use std::path::PathBuf;

use anyhow::{anyhow, Result};
use clap::Args;
use proxilog::textclass::{
    build_ontology_gloss, build_ontology_hyponyms, classify, compatibility, tokenize,
    CategoryOntology, Compatibility, OntologySource,
};
use proxilog::{eqgen, Measure, Pattern};

use crate::session::Session;

#[derive(Args)]
pub struct ClassifyArgs {
    /// Comma-separated category words (patterns allowed, default noun sense 1)
    #[arg(long, required = true, value_delimiter = ',', value_name = "WORDS")]
    categories: Vec<Pattern>,

    /// Directory of plain-text documents; every regular file is one document
    #[arg(long, value_name = "DIR")]
    docs: PathBuf,

    /// Where category words come from: hyponyms:LEVEL or gloss
    #[arg(long, default_value = "hyponyms:2")]
    ontology: OntologySource,

    /// Similarity measure grading the ontology words
    #[arg(long, default_value = "wup")]
    measure: Measure,

    /// Document compatibility measure: wsum or max
    #[arg(long, default_value = "wsum")]
    compat: Compatibility,

    /// CSV output file (stdout when absent)
    #[arg(short, long, value_name = "FILE")]
    out: Option<PathBuf>,
}

/// Builds one ontology per category, scores every document against every
/// category, and writes `doc_id,category,score,assigned` CSV rows. A
/// document is assigned every category scoring within 90% of its best.
pub fn run(session: &Session, args: &ClassifyArgs) -> Result<()> {
    let ctx = session.context()?;
    let mut ontologies: Vec<CategoryOntology> = Vec::new();
    for pattern in &args.categories {
        let term = eqgen::default_patterns(ctx.store(), std::slice::from_ref(pattern))?.remove(0);
        let ontology = match args.ontology {
            OntologySource::Hyponyms(level) => {
                build_ontology_hyponyms(&ctx, &term, level, args.measure, session.lambda)?
            }
            OntologySource::Gloss => {
                build_ontology_gloss(&ctx, &term, args.measure, session.lambda)?
            }
        };
        eprintln!(
            "ontology {} ({}, {}): {} words",
            ontology.category,
            args.ontology,
            args.measure,
            ontology.equations.len()
        );
        ontologies.push(ontology);
    }

    let mut paths: Vec<PathBuf> = fs::read_dir(&args.docs)
        .map_err(|e| anyhow!("cannot read {}: {e}", args.docs.display()))?
        .filter_map(|entry| entry.ok())
        .filter(|entry| entry.file_type().is_ok_and(|t| t.is_file()))
        .map(|entry| entry.path())
        .collect();
    paths.sort();
    if paths.is_empty() {
        return Err(anyhow!("no documents in {}", args.docs.display()));
    }

    let mut csv = String::from("doc_id,category,score,assigned\n");
    for path in &paths {
        let text =
            fs::read_to_string(path).map_err(|e| anyhow!("cannot read {}: {e}", path.display()))?;
        let doc_id = path.file_name().unwrap_or_default().to_string_lossy().into_owned();
        let tokens = tokenize(&text);
        let scores = compatibility(&tokens, &ontologies, args.compat);
        let assigned = classify(&scores);
        for (i, ontology) in ontologies.iter().enumerate() {
            csv.push_str(&format!(
                "{},{},{},{}\n",
                csv_field(&doc_id),
                csv_field(&ontology.category),
                scores[i],
                u8::from(assigned[i])
            ));
        }
    }
    match &args.out {
        Some(path) => {
            fs::write(path, &csv).map_err(|e| anyhow!("cannot write {}: {e}", path.display()))?;
            eprintln!("wrote {} ({} documents)", path.display(), paths.len());
        }
        None => print!("{csv}"),
    }
    Ok(())
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
