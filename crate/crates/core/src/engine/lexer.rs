//! Tokenizer for the program source language.
//!
//! The surface is small: atoms (bare lowercase identifiers or
//! single-quoted strings with `''` escaping), variables (uppercase or `_`
//! start), unsigned numbers, and the punctuation `. , ; ( ) [ ] : = ~`
//! plus the rule arrow `:-`. `%` starts a comment running to end of line.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum Tok {
    Atom(String),
    Var(String),
    Int(i64),
    Float(f64),
    Dot,
    Comma,
    Semi,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Arrow,
    Tilde,
    Equals,
    Colon,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Atom(a) => format!("atom '{a}'"),
            Tok::Var(v) => format!("variable '{v}'"),
            Tok::Int(n) => format!("number {n}"),
            Tok::Float(x) => format!("number {x}"),
            Tok::Dot => "'.'".into(),
            Tok::Comma => "','".into(),
            Tok::Semi => "';'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::LBracket => "'['".into(),
            Tok::RBracket => "']'".into(),
            Tok::Arrow => "':-'".into(),
            Tok::Tilde => "'~'".into(),
            Tok::Equals => "'='".into(),
            Tok::Colon => "':'".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Lexed {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
}

struct Scanner<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    col: usize,
}

impl<'a> Scanner<'a> {
    fn new(src: &'a str) -> Self {
        Scanner { chars: src.chars().peekable(), line: 1, col: 1 }
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Syntax { line: self.line, col: self.col, msg: msg.into() }
    }
}

pub fn lex(src: &str) -> Result<Vec<Lexed>> {
    let mut s = Scanner::new(src);
    let mut out = Vec::new();
    while let Some(c) = s.peek() {
        let (line, col) = (s.line, s.col);
        let push = |out: &mut Vec<Lexed>, tok| out.push(Lexed { tok, line, col });
        match c {
            ' ' | '\t' | '\r' | '\n' => {
                s.bump();
            }
            '%' => {
                while let Some(c) = s.peek() {
                    if c == '\n' {
                        break;
                    }
                    s.bump();
                }
            }
            '.' => {
                s.bump();
                push(&mut out, Tok::Dot);
            }
            ',' => {
                s.bump();
                push(&mut out, Tok::Comma);
            }
            ';' => {
                s.bump();
                push(&mut out, Tok::Semi);
            }
            '(' => {
                s.bump();
                push(&mut out, Tok::LParen);
            }
            ')' => {
                s.bump();
                push(&mut out, Tok::RParen);
            }
            '[' => {
                s.bump();
                push(&mut out, Tok::LBracket);
            }
            ']' => {
                s.bump();
                push(&mut out, Tok::RBracket);
            }
            '~' => {
                s.bump();
                push(&mut out, Tok::Tilde);
            }
            '=' => {
                s.bump();
                push(&mut out, Tok::Equals);
            }
            ':' => {
                s.bump();
                if s.peek() == Some('-') {
                    s.bump();
                    push(&mut out, Tok::Arrow);
                } else {
                    push(&mut out, Tok::Colon);
                }
            }
            '\'' => {
                s.bump();
                let mut text = String::new();
                loop {
                    match s.bump() {
                        None | Some('\n') => {
                            return Err(Error::Syntax {
                                line,
                                col,
                                msg: "unterminated quoted atom".into(),
                            });
                        }
                        Some('\'') => {
                            if s.peek() == Some('\'') {
                                s.bump();
                                text.push('\'');
                            } else {
                                break;
                            }
                        }
                        Some(other) => text.push(other),
                    }
                }
                push(&mut out, Tok::Atom(text));
            }
            '0'..='9' => {
                let mut text = String::new();
                while let Some(d) = s.peek() {
                    if d.is_ascii_digit() {
                        text.push(d);
                        s.bump();
                    } else {
                        break;
                    }
                }
                // A dot continues the number only when a digit follows;
                // otherwise it terminates the clause.
                let mut is_float = false;
                if s.peek() == Some('.') {
                    let mut ahead = s.chars.clone();
                    ahead.next();
                    if ahead.peek().is_some_and(|d| d.is_ascii_digit()) {
                        is_float = true;
                        text.push('.');
                        s.bump();
                        while let Some(d) = s.peek() {
                            if d.is_ascii_digit() {
                                text.push(d);
                                s.bump();
                            } else {
                                break;
                            }
                        }
                    }
                }
                if is_float {
                    let value: f64 = text
                        .parse()
                        .map_err(|_| s.error(format!("invalid number '{text}'")))?;
                    push(&mut out, Tok::Float(value));
                } else {
                    let value: i64 = text
                        .parse()
                        .map_err(|_| s.error(format!("number '{text}' out of range")))?;
                    push(&mut out, Tok::Int(value));
                }
            }
            c if c.is_ascii_lowercase() => {
                let mut text = String::new();
                while let Some(ch) = s.peek() {
                    if ch.is_ascii_alphanumeric() || ch == '_' {
                        text.push(ch);
                        s.bump();
                    } else {
                        break;
                    }
                }
                push(&mut out, Tok::Atom(text));
            }
            c if c.is_ascii_uppercase() || c == '_' => {
                let mut text = String::new();
                while let Some(ch) = s.peek() {
                    if ch.is_ascii_alphanumeric() || ch == '_' {
                        text.push(ch);
                        s.bump();
                    } else {
                        break;
                    }
                }
                push(&mut out, Tok::Var(text));
            }
            other => {
                return Err(s.error(format!("unexpected character '{other}'")));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexes_clause_tokens() {
        let toks = lex("ancestor(X,Z) :- father(X,Z). % comment").unwrap();
        let kinds: Vec<Tok> = toks.into_iter().map(|l| l.tok).collect();
        assert_eq!(
            kinds,
            vec![
                Tok::Atom("ancestor".into()),
                Tok::LParen,
                Tok::Var("X".into()),
                Tok::Comma,
                Tok::Var("Z".into()),
                Tok::RParen,
                Tok::Arrow,
                Tok::Atom("father".into()),
                Tok::LParen,
                Tok::Var("X".into()),
                Tok::Comma,
                Tok::Var("Z".into()),
                Tok::RParen,
                Tok::Dot,
            ]
        );
    }

    #[test]
    fn floats_do_not_swallow_the_clause_dot() {
        let toks = lex("a~b=0.9.").unwrap();
        let kinds: Vec<Tok> = toks.into_iter().map(|l| l.tok).collect();
        assert_eq!(
            kinds,
            vec![
                Tok::Atom("a".into()),
                Tok::Tilde,
                Tok::Atom("b".into()),
                Tok::Equals,
                Tok::Float(0.9),
                Tok::Dot,
            ]
        );
        let toks = lex("p(3).").unwrap();
        assert_eq!(toks[2].tok, Tok::Int(3));
    }

    #[test]
    fn quoted_atoms_escape_quotes() {
        let toks = lex("'o''clock'").unwrap();
        assert_eq!(toks[0].tok, Tok::Atom("o'clock".into()));
        assert!(lex("'open").is_err());
    }

    #[test]
    fn tracks_positions() {
        let toks = lex("a.\n  b.").unwrap();
        assert_eq!((toks[2].line, toks[2].col), (2, 3));
    }
}
