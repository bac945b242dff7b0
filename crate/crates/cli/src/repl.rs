//! The interactive shell.

use std::io::{self, BufRead, Write};
use std::path::Path;

use anyhow::Result;
use proxilog::Program;

use crate::session::Session;
use crate::solve::{load_file, print_answers};

/// Reads commands from stdin until `:quit` or end of input. A failing
/// load or query reports its error and leaves the session running.
pub fn run(session: &Session) -> Result<()> {
    println!("proximity logic shell: `ld <file>` loads a program, queries end with '.', `:quit` leaves");
    let mut program: Option<(Program, String)> = None;
    let stdin = io::stdin();
    let mut lines = stdin.lock().lines();
    loop {
        print!("?- ");
        io::stdout().flush()?;
        let Some(line) = lines.next() else { break };
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if line == ":quit" {
            break;
        }
        if let Some(rest) = line.strip_prefix(':') {
            eprintln!("unknown command :{rest} (only :quit)");
            continue;
        }
        if let Some(file) = line.strip_prefix("ld ") {
            match load_file(session, Path::new(file.trim())) {
                Ok((loaded, path)) => {
                    println!(
                        "loaded {}: {} rules, {} equations",
                        path.display(),
                        loaded.rules().len(),
                        loaded.equations().len()
                    );
                    program = Some((loaded, path.display().to_string()));
                }
                Err(err) => eprintln!("error: {err:#}"),
            }
            continue;
        }
        match &program {
            None => eprintln!("no program loaded; use `ld <file>`"),
            Some((loaded, _)) => {
                if let Err(err) =
                    print_answers(loaded, line, session.dedup_max, &mut io::stdout().lock())
                {
                    eprintln!("error: {err:#}");
                }
            }
        }
    }
    Ok(())
}
