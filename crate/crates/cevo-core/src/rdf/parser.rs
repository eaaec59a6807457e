//! Reader for the Turtle subset this crate emits and consumes: `@prefix`
//! directives, prefixed names, absolute `<IRI>` references, `a`, plain
//! string literals, bare integers, `;`/`,` continuations, `.` terminators,
//! and `#` comments.
//!
//! Constructs outside the subset (blank nodes, collections, typed or
//! language-tagged literals, multi-line strings) are rejected with a
//! dedicated error so callers can tell "malformed" from "unsupported".

use thiserror::Error;

use super::{Graph, Iri, Literal, Term, Triple};
use crate::vocab;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TurtleError {
    #[error("syntax error at {line}:{col}: {message}")]
    Syntax {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("unsupported construct at {line}:{col}: {construct}")]
    Unsupported {
        line: usize,
        col: usize,
        construct: String,
    },
}

pub(super) fn parse_turtle(text: &str) -> Result<Graph, TurtleError> {
    Parser::new(lex(text)?).parse()
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    PrefixDecl,
    PName { prefix: String, local: String },
    IriRef(String),
    Str(String),
    Int(String),
    A,
    Semi,
    Comma,
    Dot,
    Eof,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn syntax(line: usize, col: usize, message: impl Into<String>) -> TurtleError {
    TurtleError::Syntax {
        line,
        col,
        message: message.into(),
    }
}

fn unsupported(line: usize, col: usize, construct: impl Into<String>) -> TurtleError {
    TurtleError::Unsupported {
        line,
        col,
        construct: construct.into(),
    }
}

struct Lexer {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col: usize,
}

impl Lexer {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn peek2(&self) -> Option<char> {
        self.chars.get(self.pos + 1).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn take_word(&mut self) -> String {
        let mut word = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == '_' || c == '-' {
                word.push(c);
                self.bump();
            } else {
                break;
            }
        }
        word
    }
}

fn lex(text: &str) -> Result<Vec<Spanned>, TurtleError> {
    let mut lx = Lexer {
        chars: text.chars().collect(),
        pos: 0,
        line: 1,
        col: 1,
    };
    let mut toks = Vec::new();
    loop {
        while let Some(c) = lx.peek() {
            if c.is_whitespace() {
                lx.bump();
            } else if c == '#' {
                while let Some(c) = lx.peek() {
                    if c == '\n' {
                        break;
                    }
                    lx.bump();
                }
            } else {
                break;
            }
        }
        let (line, col) = (lx.line, lx.col);
        let Some(c) = lx.peek() else {
            toks.push(Spanned {
                tok: Tok::Eof,
                line,
                col,
            });
            return Ok(toks);
        };
        let tok = match c {
            '<' => {
                lx.bump();
                let mut iri = String::new();
                loop {
                    match lx.bump() {
                        None | Some('\n') => {
                            return Err(syntax(line, col, "unterminated IRI reference"))
                        }
                        Some('>') => break,
                        Some(c) if c.is_whitespace() || c.is_control() || c == '<' => {
                            return Err(syntax(
                                line,
                                col,
                                format!("invalid character {c:?} in IRI reference"),
                            ))
                        }
                        Some(c) => iri.push(c),
                    }
                }
                if Iri::new(&iri).is_err() {
                    return Err(syntax(line, col, format!("relative IRI <{iri}>")));
                }
                Tok::IriRef(iri)
            }
            '"' => {
                lx.bump();
                if lx.peek() == Some('"') && lx.peek2() == Some('"') {
                    return Err(unsupported(line, col, "triple-quoted string literal"));
                }
                let mut s = String::new();
                loop {
                    match lx.bump() {
                        None | Some('\n') => {
                            return Err(syntax(line, col, "unterminated string literal"))
                        }
                        Some('"') => break,
                        Some('\\') => match lx.bump() {
                            Some('"') => s.push('"'),
                            Some('\\') => s.push('\\'),
                            Some('n') => s.push('\n'),
                            Some('r') => s.push('\r'),
                            Some('t') => s.push('\t'),
                            Some(c) => {
                                return Err(syntax(
                                    line,
                                    col,
                                    format!("unsupported escape sequence \\{c}"),
                                ))
                            }
                            None => return Err(syntax(line, col, "unterminated string literal")),
                        },
                        Some(c) => s.push(c),
                    }
                }
                Tok::Str(s)
            }
            '0'..='9' | '-' => {
                lx.bump();
                let mut s = String::new();
                s.push(c);
                while let Some(d) = lx.peek() {
                    if d.is_ascii_digit() {
                        s.push(d);
                        lx.bump();
                    } else {
                        break;
                    }
                }
                if s == "-" {
                    return Err(syntax(line, col, "expected digits after '-'"));
                }
                if lx.peek() == Some('.') && lx.peek2().is_some_and(|d| d.is_ascii_digit()) {
                    return Err(unsupported(line, col, "decimal literal"));
                }
                Tok::Int(s)
            }
            '@' => {
                lx.bump();
                let word = lx.take_word();
                match word.as_str() {
                    "prefix" => Tok::PrefixDecl,
                    "base" => return Err(unsupported(line, col, "@base directive")),
                    _ => return Err(unsupported(line, col, format!("language tag @{word}"))),
                }
            }
            ';' => {
                lx.bump();
                Tok::Semi
            }
            ',' => {
                lx.bump();
                Tok::Comma
            }
            '.' => {
                lx.bump();
                Tok::Dot
            }
            '^' => {
                if lx.peek2() == Some('^') {
                    return Err(unsupported(line, col, "typed literal (^^)"));
                }
                return Err(syntax(line, col, "unexpected character '^'"));
            }
            '[' | ']' => return Err(unsupported(line, col, "blank node")),
            '(' | ')' => return Err(unsupported(line, col, "RDF collection")),
            '_' if lx.peek2() == Some(':') => {
                return Err(unsupported(line, col, "blank node label"))
            }
            c if c.is_ascii_alphabetic() => {
                let word = lx.take_word();
                if lx.peek() == Some(':') {
                    lx.bump();
                    let mut local = String::new();
                    while let Some(d) = lx.peek() {
                        if d.is_ascii_alphanumeric() || d == '_' || d == '-' {
                            local.push(d);
                            lx.bump();
                        } else {
                            break;
                        }
                    }
                    Tok::PName {
                        prefix: word,
                        local,
                    }
                } else if word == "a" {
                    Tok::A
                } else if word == "true" || word == "false" {
                    return Err(unsupported(line, col, "boolean literal"));
                } else {
                    return Err(syntax(
                        line,
                        col,
                        format!("expected ':' after {word:?} (prefixed name)"),
                    ));
                }
            }
            c => return Err(syntax(line, col, format!("unexpected character {c:?}"))),
        };
        toks.push(Spanned { tok, line, col });
    }
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    graph: Graph,
}

impl Parser {
    fn new(toks: Vec<Spanned>) -> Self {
        Parser {
            toks,
            pos: 0,
            graph: Graph::new(),
        }
    }

    fn current(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn advance(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err_here(&self, message: impl Into<String>) -> TurtleError {
        let t = self.current();
        let message = message.into();
        if t.tok == Tok::Eof {
            syntax(t.line, t.col, format!("unexpected end of input: {message}"))
        } else {
            syntax(t.line, t.col, message)
        }
    }

    fn parse(mut self) -> Result<Graph, TurtleError> {
        loop {
            match &self.current().tok {
                Tok::Eof => return Ok(self.graph),
                Tok::PrefixDecl => self.parse_prefix_decl()?,
                _ => self.parse_triples_block()?,
            }
        }
    }

    fn parse_prefix_decl(&mut self) -> Result<(), TurtleError> {
        self.advance();
        let label = match self.advance() {
            Spanned {
                tok: Tok::PName { prefix, local },
                line,
                col,
            } => {
                if !local.is_empty() {
                    return Err(syntax(line, col, "expected a bare prefix label"));
                }
                (prefix, line, col)
            }
            t => return Err(syntax(t.line, t.col, "expected prefix label after @prefix")),
        };
        let ns = match self.advance() {
            Spanned {
                tok: Tok::IriRef(iri),
                ..
            } => iri,
            t => return Err(syntax(t.line, t.col, "expected namespace IRI in @prefix")),
        };
        match self.advance() {
            Spanned { tok: Tok::Dot, .. } => {}
            t => return Err(syntax(t.line, t.col, "expected '.' after @prefix directive")),
        }
        self.graph
            .add_prefix(&label.0, &ns)
            .map_err(|e| syntax(label.1, label.2, e.to_string()))
    }

    fn parse_iri(&mut self) -> Result<Iri, TurtleError> {
        match self.advance() {
            Spanned {
                tok: Tok::IriRef(iri),
                ..
            } => Ok(Iri::trusted(iri)),
            Spanned {
                tok: Tok::PName { prefix, local },
                line,
                col,
            } => match self.graph.prefixes().get(&prefix) {
                Some(ns) => Ok(Iri::trusted(format!("{ns}{local}"))),
                None => Err(syntax(line, col, format!("undefined prefix '{prefix}:'"))),
            },
            t => Err(syntax(
                t.line,
                t.col,
                if t.tok == Tok::Eof {
                    "unexpected end of input: expected an IRI".to_string()
                } else {
                    "expected an IRI".to_string()
                },
            )),
        }
    }

    fn parse_triples_block(&mut self) -> Result<(), TurtleError> {
        let subject = self.parse_iri()?;
        loop {
            let predicate = if self.current().tok == Tok::A {
                self.advance();
                vocab::iri(vocab::RDF_TYPE)
            } else {
                self.parse_iri()?
            };
            loop {
                let object = self.parse_object()?;
                self.graph
                    .insert(Triple::new(subject.clone(), predicate.clone(), object));
                if self.current().tok == Tok::Comma {
                    self.advance();
                } else {
                    break;
                }
            }
            match self.current().tok {
                Tok::Semi => {
                    self.advance();
                    // Turtle allows a dangling ';' before the terminator.
                    if self.current().tok == Tok::Dot {
                        self.advance();
                        return Ok(());
                    }
                }
                Tok::Dot => {
                    self.advance();
                    return Ok(());
                }
                _ => return Err(self.err_here("expected ';', ',' or '.' to continue statement")),
            }
        }
    }

    fn parse_object(&mut self) -> Result<Term, TurtleError> {
        match &self.current().tok {
            Tok::Str(_) => {
                let Spanned {
                    tok: Tok::Str(s), ..
                } = self.advance()
                else {
                    unreachable!()
                };
                Ok(Term::Literal(Literal::String(s)))
            }
            Tok::Int(_) => {
                let Spanned {
                    tok: Tok::Int(s), ..
                } = self.advance()
                else {
                    unreachable!()
                };
                Ok(Term::Literal(Literal::Integer(s)))
            }
            Tok::IriRef(_) | Tok::PName { .. } => Ok(Term::Iri(self.parse_iri()?)),
            _ => Err(self.err_here("expected object (IRI, string, or integer)")),
        }
    }
}
