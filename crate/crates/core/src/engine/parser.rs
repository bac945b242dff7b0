//! Parser for programs, queries and directive arguments.
//!
//! A program is a sequence of clauses, proximity equations and
//! directives:
//!
//! ```text
//! program    := (clause | equation | directive)* ;
//! clause     := atom ( ":-" body )? ( "with" float )? "." ;
//! body       := conj (";" conj)* ;  conj := atom ("," atom)* ;
//! equation   := symbol "~" symbol "=" float "." ;
//! directive  := ":-" name ( "(" args ")" )? "." ;
//! ```
//!
//! Ground facts of the form `sim(A, B, Block, Degree).` (or without the
//! block) are read back as proximity equations, so a generated ontology
//! file loads the same way as handwritten `~` equations.

use crate::error::{Error, Result};
use crate::measures::Measure;
use crate::proximity::{ProximityEquation, TNorm};
use crate::store::{PartOfSpeech, Pattern};
use crate::unify::Term;

use super::lexer::{lex, Lexed, Tok};
use super::{Directive, GradedRule, TransitivityArg};

#[derive(Debug, Default)]
pub struct ParsedProgram {
    pub rules: Vec<GradedRule>,
    pub equations: Vec<ProximityEquation>,
    pub directives: Vec<Directive>,
}

impl ParsedProgram {
    /// True when any directive needs the lexical database.
    pub fn needs_wordnet(&self) -> bool {
        self.directives
            .iter()
            .any(|d| matches!(d, Directive::WnConnect | Directive::GenEquations { .. }))
    }
}

pub fn parse_program(src: &str) -> Result<ParsedProgram> {
    let mut p = Parser::new(src)?;
    let mut out = ParsedProgram::default();
    while !p.at_end() {
        if p.peek_is(&Tok::Arrow) {
            out.directives.push(p.directive()?);
        } else {
            p.clause_or_equation(&mut out)?;
        }
    }
    Ok(out)
}

/// A query is a conjunction of atoms, with or without the final period.
pub fn parse_query(src: &str) -> Result<Vec<Term>> {
    let mut p = Parser::new(src)?;
    let mut goals = vec![p.atom()?];
    while p.eat(&Tok::Comma) {
        goals.push(p.atom()?);
    }
    p.eat(&Tok::Dot);
    if !p.at_end() {
        return Err(p.error("unexpected input after query"));
    }
    Ok(goals)
}

/// Parses a `[[pattern, ...], ...]` list-of-lists, as used by the
/// equation-generation directive and its batch command.
pub fn parse_pattern_lists(src: &str) -> Result<Vec<Vec<Pattern>>> {
    let mut p = Parser::new(src)?;
    let lists = p.pattern_lists()?;
    p.eat(&Tok::Dot);
    if !p.at_end() {
        return Err(p.error("unexpected input after pattern lists"));
    }
    Ok(lists)
}

struct Parser {
    toks: Vec<Lexed>,
    pos: usize,
}

impl Parser {
    fn new(src: &str) -> Result<Self> {
        Ok(Parser { toks: lex(src)?, pos: 0 })
    }

    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|l| &l.tok)
    }

    fn peek_is(&self, tok: &Tok) -> bool {
        self.peek() == Some(tok)
    }

    fn next(&mut self) -> Result<&Lexed> {
        let lexed = self
            .toks
            .get(self.pos)
            .ok_or_else(|| self.eof_error("unexpected end of input"))?;
        self.pos += 1;
        Ok(lexed)
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek_is(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        if self.eat(&tok) {
            Ok(())
        } else {
            Err(self.error(format!(
                "expected {}, found {}",
                tok.describe(),
                self.describe_here()
            )))
        }
    }

    fn describe_here(&self) -> String {
        match self.peek() {
            Some(t) => t.describe(),
            None => "end of input".into(),
        }
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        let (line, col) = self
            .toks
            .get(self.pos.min(self.toks.len().saturating_sub(1)))
            .map(|l| (l.line, l.col))
            .unwrap_or((1, 1));
        Error::Syntax { line, col, msg: msg.into() }
    }

    fn eof_error(&self, msg: impl Into<String>) -> Error {
        let (line, col) = self.toks.last().map(|l| (l.line, l.col)).unwrap_or((1, 1));
        Error::Syntax { line, col, msg: msg.into() }
    }

    fn atom_name(&mut self) -> Result<String> {
        match self.peek() {
            Some(Tok::Atom(_)) => {
                let Tok::Atom(name) = self.next()?.tok.clone() else { unreachable!() };
                Ok(name)
            }
            _ => Err(self.error(format!("expected an atom, found {}", self.describe_here()))),
        }
    }

    fn number(&mut self) -> Result<f64> {
        match self.peek() {
            Some(Tok::Float(_)) | Some(Tok::Int(_)) => match self.next()?.tok {
                Tok::Float(x) => Ok(x),
                Tok::Int(n) => Ok(n as f64),
                _ => unreachable!(),
            },
            _ => Err(self.error(format!("expected a number, found {}", self.describe_here()))),
        }
    }

    fn term(&mut self) -> Result<Term> {
        match self.peek() {
            Some(Tok::Var(_)) => {
                let Tok::Var(name) = self.next()?.tok.clone() else { unreachable!() };
                Ok(Term::Var(name))
            }
            Some(Tok::Int(_)) => {
                let Tok::Int(n) = self.next()?.tok else { unreachable!() };
                Ok(Term::Const(n.to_string()))
            }
            Some(Tok::Float(_)) => {
                let Tok::Float(x) = self.next()?.tok else { unreachable!() };
                Ok(Term::Const(format!("{x}")))
            }
            Some(Tok::Atom(_)) => {
                let name = self.atom_name()?;
                if self.eat(&Tok::LParen) {
                    let mut args = vec![self.term()?];
                    while self.eat(&Tok::Comma) {
                        args.push(self.term()?);
                    }
                    self.expect(Tok::RParen)?;
                    Ok(Term::Compound(name, args))
                } else {
                    Ok(Term::Const(name))
                }
            }
            _ => Err(self.error(format!("expected a term, found {}", self.describe_here()))),
        }
    }

    fn atom(&mut self) -> Result<Term> {
        match self.term()? {
            Term::Var(v) => Err(self.error(format!("expected an atom, found variable '{v}'"))),
            atom => Ok(atom),
        }
    }

    fn body(&mut self) -> Result<Vec<Vec<Term>>> {
        let mut branches = vec![self.conj()?];
        while self.eat(&Tok::Semi) {
            branches.push(self.conj()?);
        }
        Ok(branches)
    }

    fn conj(&mut self) -> Result<Vec<Term>> {
        let mut atoms = vec![self.atom()?];
        while self.eat(&Tok::Comma) {
            atoms.push(self.atom()?);
        }
        Ok(atoms)
    }

    fn clause_or_equation(&mut self, out: &mut ParsedProgram) -> Result<()> {
        let head = self.atom()?;
        // `a ~ b = 0.9.` — only a bare symbol can open an equation.
        if self.peek_is(&Tok::Tilde) {
            let Term::Const(a) = head else {
                return Err(self.error("a proximity equation must relate two symbols"));
            };
            self.expect(Tok::Tilde)?;
            let b = self.atom_name()?;
            self.expect(Tok::Equals)?;
            let degree = self.number()?;
            self.check_degree(degree)?;
            self.expect(Tok::Dot)?;
            out.equations.push(ProximityEquation::new(a, b, 0, degree));
            return Ok(());
        }

        let mut body = Vec::new();
        if self.eat(&Tok::Arrow) {
            body = self.body()?;
        }
        let mut delta = 1.0;
        if self.peek_is(&Tok::Atom("with".into())) {
            self.pos += 1;
            delta = self.number()?;
            if !(delta > 0.0 && delta <= 1.0) {
                return Err(self.error(format!("rule degree {delta} outside (0,1]")));
            }
        }
        self.expect(Tok::Dot)?;

        if body.is_empty() && delta == 1.0 {
            if let Some(eq) = as_sim_fact(&head) {
                self.check_degree(eq.degree)?;
                out.equations.push(eq);
                return Ok(());
            }
        }
        out.rules.push(GradedRule { head, body, delta });
        Ok(())
    }

    fn check_degree(&self, degree: f64) -> Result<()> {
        if degree > 0.0 && degree <= 1.0 {
            Ok(())
        } else {
            Err(self.error(format!("proximity degree {degree} outside (0,1]")))
        }
    }

    fn directive(&mut self) -> Result<Directive> {
        self.expect(Tok::Arrow)?;
        let name = self.atom_name()?;
        let directive = match name.as_str() {
            "lambda_cut" => {
                self.expect(Tok::LParen)?;
                let cut = self.number()?;
                if !(0.0..=1.0).contains(&cut) {
                    return Err(self.error(format!("lambda cut {cut} outside [0,1]")));
                }
                self.expect(Tok::RParen)?;
                Directive::LambdaCut(cut)
            }
            "transitivity" => {
                self.expect(Tok::LParen)?;
                let arg = self.atom_name()?;
                self.expect(Tok::RParen)?;
                let arg = match arg.as_str() {
                    "no" => TransitivityArg::No,
                    "yes" => TransitivityArg::Yes,
                    other => match other.parse::<TNorm>() {
                        Ok(t) => TransitivityArg::Norm(t),
                        Err(_) => {
                            return Err(self.error(format!(
                                "unknown transitivity setting '{other}' \
                                 (expected no, yes, min, product or lukasiewicz)"
                            )));
                        }
                    },
                };
                Directive::Transitivity(arg)
            }
            "wn_connect" => Directive::WnConnect,
            "wn_gen_prox_equations" => {
                self.expect(Tok::LParen)?;
                let measure_name = self.atom_name()?;
                let measure: Measure = measure_name
                    .parse()
                    .map_err(|e: Error| self.error(e.to_string()))?;
                self.expect(Tok::Comma)?;
                let lists = if self.peek_is(&Tok::Atom("auto".into())) {
                    self.pos += 1;
                    None
                } else {
                    Some(self.pattern_lists()?)
                };
                self.expect(Tok::RParen)?;
                Directive::GenEquations { measure, lists }
            }
            other => return Err(self.error(format!("unknown directive '{other}'"))),
        };
        self.expect(Tok::Dot)?;
        Ok(directive)
    }

    fn pattern_lists(&mut self) -> Result<Vec<Vec<Pattern>>> {
        self.expect(Tok::LBracket)?;
        let mut lists = vec![self.pattern_list()?];
        while self.eat(&Tok::Comma) {
            lists.push(self.pattern_list()?);
        }
        self.expect(Tok::RBracket)?;
        Ok(lists)
    }

    fn pattern_list(&mut self) -> Result<Vec<Pattern>> {
        self.expect(Tok::LBracket)?;
        let mut items = vec![self.pattern()?];
        while self.eat(&Tok::Comma) {
            items.push(self.pattern()?);
        }
        self.expect(Tok::RBracket)?;
        Ok(items)
    }

    fn pattern(&mut self) -> Result<Pattern> {
        let word = self.atom_name()?;
        if !self.eat(&Tok::Colon) {
            return Ok(Pattern::plain(word));
        }
        let pos_name = self.atom_name()?;
        let pos = match pos_name.as_str() {
            code if code.len() == 1 => PartOfSpeech::from_code(code.chars().next().unwrap()),
            _ => None,
        }
        .ok_or_else(|| self.error(format!("unknown part of speech '{pos_name}'")))?;
        if !self.eat(&Tok::Colon) {
            return Ok(Pattern { word, pos: Some(pos), sense: None });
        }
        let sense = match self.peek() {
            Some(Tok::Int(n)) if *n >= 1 => {
                let n = *n as u32;
                self.pos += 1;
                n
            }
            _ => return Err(self.error("a sense number must be a positive integer")),
        };
        Ok(Pattern { word, pos: Some(pos), sense: Some(sense) })
    }
}

/// Reads a ground `sim/3` or `sim/4` fact as a proximity equation.
fn as_sim_fact(head: &Term) -> Option<ProximityEquation> {
    let Term::Compound(f, args) = head else { return None };
    if f != "sim" || !(args.len() == 3 || args.len() == 4) {
        return None;
    }
    let sym = |t: &Term| match t {
        Term::Const(c) => Some(c.clone()),
        _ => None,
    };
    let a = sym(&args[0])?;
    let b = sym(&args[1])?;
    let (block, degree_term) = if args.len() == 4 {
        let block: u32 = sym(&args[2])?.parse().ok()?;
        (block, &args[3])
    } else {
        (0, &args[2])
    };
    let degree: f64 = sym(degree_term)?.parse().ok()?;
    Some(ProximityEquation::new(a, b, block, degree))
}

#[cfg(test)]
mod tests {
    use super::*;

    const FAMILY: &str = r#"
        ancestor~ascendant=1.0.    ancestor~progenitor=0.9.

        father(abraham,isaac).     father(isaac,esau).     father(isaac,jacob).
        mother(sara,isaac).        mother(rebeca,jacob).   mother(rebeca,esau).

        direct_ancestor(X,Y) :- father(X,Y); mother(X,Y).

        ancestor(X,Z) :- direct_ancestor(X,Z).
        ancestor(X,Z) :- direct_ancestor(X,Y), ancestor(Y,Z).
    "#;

    #[test]
    fn parses_the_family_program() {
        let p = parse_program(FAMILY).unwrap();
        assert_eq!(p.equations.len(), 2);
        assert_eq!(p.rules.len(), 9);
        assert_eq!(p.rules.iter().filter(|r| r.body.is_empty()).count(), 6);
        let disj = &p.rules[6];
        assert_eq!(disj.body.len(), 2, "one rule with a ';' body");
        assert_eq!(p.equations[0].sym_a, "ancestor");
        assert_eq!(p.equations[1].degree, 0.9);
    }

    #[test]
    fn empty_source_is_an_empty_program() {
        let p = parse_program("").unwrap();
        assert!(p.rules.is_empty() && p.equations.is_empty() && p.directives.is_empty());
    }

    #[test]
    fn rule_degrees_parse() {
        let p = parse_program("p(X) :- q(X) with 0.9.").unwrap();
        assert_eq!(p.rules[0].delta, 0.9);
        assert!(parse_program("p(X) :- q(X) with 1.5.").is_err());
    }

    #[test]
    fn sim_facts_become_equations() {
        let p = parse_program("sim(man, person, 1, 0.8888888888888888).\nsim(a,b,0.5).").unwrap();
        assert!(p.rules.is_empty());
        assert_eq!(p.equations.len(), 2);
        assert_eq!(p.equations[0].block, 1);
        assert_eq!(p.equations[1].block, 0);
    }

    #[test]
    fn directives_parse_and_validate() {
        let p = parse_program(
            ":- lambda_cut(0.5).\n:- transitivity(yes).\n:- wn_connect.\n\
             :- wn_gen_prox_equations(wup,[[man,human,person],[grain:n:8,wheat:n:2]]).",
        )
        .unwrap();
        assert_eq!(p.directives.len(), 4);
        assert!(p.needs_wordnet());
        match &p.directives[3] {
            Directive::GenEquations { lists: Some(lists), .. } => {
                assert_eq!(lists.len(), 2);
                assert_eq!(lists[1][0].sense, Some(8));
            }
            other => panic!("unexpected directive {other:?}"),
        }
        assert!(parse_program(":- lambda_cut(1.5).").is_err());
        assert!(parse_program(":- wn_gen_prox_equations(nope, auto).").is_err());
        assert!(parse_program(":- no_such_directive.").is_err());
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse_program("p(X) :-\n  q(X)\n").unwrap_err();
        match err {
            Error::Syntax { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn queries_parse_as_conjunctions() {
        let goals = parse_query("progenitor(X, isaac).").unwrap();
        assert_eq!(goals.len(), 1);
        let goals = parse_query("p(X), q(X)").unwrap();
        assert_eq!(goals.len(), 2);
        assert!(parse_query("p(X); q(X)").is_err());
    }
}
