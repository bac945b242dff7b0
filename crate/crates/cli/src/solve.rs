//! Loading program files and answering queries.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use anyhow::{anyhow, Result};
use proxilog::{dedup_max, parse_program, parse_query, Program};

use crate::session::Session;

/// Appends the default `.bpl` extension when the path has none.
fn with_default_ext(path: &Path) -> PathBuf {
    if path.extension().is_none() {
        path.with_extension("bpl")
    } else {
        path.to_path_buf()
    }
}

/// Parses and finishes a program file. The lexical database is only
/// loaded when a directive needs it; duplicate-equation warnings go to
/// stderr, and the translated dump is written next to the source when
/// the session asks for it.
pub fn load_file(session: &Session, path: &Path) -> Result<(Program, PathBuf)> {
    let path = with_default_ext(path);
    let source = fs::read_to_string(&path)
        .map_err(|e| anyhow!("cannot read {}: {e}", path.display()))?;
    let parsed = parse_program(&source)?;
    let cfg = session.engine_config();
    let program = if parsed.needs_wordnet() {
        let ctx = session.context()?;
        parsed.finish(&cfg, Some(&ctx))?
    } else {
        parsed.finish(&cfg, None)?
    };
    for warning in program.relation().warnings() {
        eprintln!("warning: {warning}");
    }
    if session.emit_tpl {
        let tpl_path = path.with_extension("tpl");
        let dump = program.tpl_dump(&program.translate());
        fs::write(&tpl_path, dump)
            .map_err(|e| anyhow!("cannot write {}: {e}", tpl_path.display()))?;
        eprintln!("wrote {}", tpl_path.display());
    }
    Ok((program, path))
}

pub fn ld(session: &Session, file: &Path) -> Result<()> {
    let (program, path) = load_file(session, file)?;
    println!(
        "loaded {}: {} rules, {} equations (lambda {}, {} t-norm)",
        path.display(),
        program.rules().len(),
        program.equations().len(),
        program.lambda(),
        program.tnorm(),
    );
    Ok(())
}

pub fn solve(session: &Session, program: Option<&Path>, query: &str) -> Result<()> {
    let Some(path) = program else {
        return Err(anyhow!("no program loaded: pass --program <file>"));
    };
    let (program, _) = load_file(session, path)?;
    print_answers(&program, query, session.dedup_max, &mut io::stdout().lock())?;
    Ok(())
}

/// Prints one answer per line, or `no.` when there are none, and returns
/// the number of answers.
pub fn print_answers(
    program: &Program,
    query: &str,
    dedup: bool,
    out: &mut impl Write,
) -> Result<usize> {
    let goals = parse_query(query)?;
    let mut count = 0;
    if dedup {
        let answers = dedup_max(program.solve(&goals).collect());
        for answer in &answers {
            writeln!(out, "{answer}")?;
        }
        count = answers.len();
    } else {
        for answer in program.solve(&goals) {
            writeln!(out, "{answer}")?;
            count += 1;
        }
    }
    if count == 0 {
        writeln!(out, "no.")?;
    }
    Ok(count)
}
