//! Minimal RDF statement model with a deterministic Turtle writer and a
//! Turtle-subset reader.
//!
//! The model is deliberately small: IRIs, plain string literals, and integer
//! literals. No blank nodes, no language tags, no named graphs — the parser
//! rejects those explicitly instead of guessing. Graphs are value types with
//! set semantics over triples, so equal graphs serialize byte-identically.

mod parser;
mod writer;

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

pub use parser::TurtleError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RdfError {
    /// IRIs must be absolute (carry a scheme) and contain no whitespace,
    /// quotes, or angle brackets.
    #[error("not an absolute IRI: {0:?}")]
    InvalidIri(String),
    /// Prefix labels must match `[A-Za-z][A-Za-z0-9_-]*`.
    #[error("invalid prefix label: {0:?}")]
    InvalidPrefixLabel(String),
    /// Integer literals must match `-?[0-9]+`.
    #[error("not an integer lexical form: {0:?}")]
    InvalidInteger(String),
}

/// An absolute IRI.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Iri(String);

impl Iri {
    pub fn new(s: impl Into<String>) -> Result<Self, RdfError> {
        let s = s.into();
        if !is_absolute_iri(&s) {
            return Err(RdfError::InvalidIri(s));
        }
        Ok(Iri(s))
    }

    /// For IRIs known valid by construction (vocabulary constants, IRIs
    /// assembled from already-validated parts). Panics otherwise.
    pub(crate) fn trusted(s: impl Into<String>) -> Self {
        let s = s.into();
        debug_assert!(is_absolute_iri(&s), "trusted IRI is not absolute: {s}");
        Iri(s)
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }
}

impl fmt::Display for Iri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Iri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.0)
    }
}

impl AsRef<str> for Iri {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

/// Scheme per RFC 3986 (`ALPHA *( ALPHA / DIGIT / "+" / "-" / "." ) ":"`),
/// followed by anything printable that cannot break the angle-bracket
/// serialization.
fn is_absolute_iri(s: &str) -> bool {
    let Some(colon) = s.find(':') else {
        return false;
    };
    let scheme = &s[..colon];
    let mut chars = scheme.chars();
    let Some(first) = chars.next() else {
        return false;
    };
    if !first.is_ascii_alphabetic() {
        return false;
    }
    if !chars.all(|c| c.is_ascii_alphanumeric() || matches!(c, '+' | '-' | '.')) {
        return false;
    }
    !s.chars()
        .any(|c| c.is_whitespace() || c.is_control() || matches!(c, '<' | '>' | '"'))
}

/// A literal value: a plain string, or an integer kept in its original
/// lexical form (`0026` and `26` are distinct literals — no numeric
/// canonicalization).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Literal {
    String(String),
    Integer(String),
}

impl Literal {
    pub fn string(s: impl Into<String>) -> Self {
        Literal::String(s.into())
    }

    pub fn integer(n: i64) -> Self {
        Literal::Integer(n.to_string())
    }

    /// An integer literal from an explicit lexical form.
    pub fn integer_lexical(s: impl Into<String>) -> Result<Self, RdfError> {
        let s = s.into();
        let digits = s.strip_prefix('-').unwrap_or(&s);
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(RdfError::InvalidInteger(s));
        }
        Ok(Literal::Integer(s))
    }

    pub fn lexical_form(&self) -> &str {
        match self {
            Literal::String(s) | Literal::Integer(s) => s,
        }
    }

    /// Datatype IRI: `None` for plain strings, `xsd:integer` for integers.
    pub fn datatype(&self) -> Option<&'static str> {
        match self {
            Literal::String(_) => None,
            Literal::Integer(_) => Some(crate::vocab::XSD_INTEGER),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Iri(Iri),
    Literal(Literal),
}

impl Term {
    pub fn iri(&self) -> Option<&Iri> {
        match self {
            Term::Iri(iri) => Some(iri),
            Term::Literal(_) => None,
        }
    }

    pub fn literal(&self) -> Option<&Literal> {
        match self {
            Term::Iri(_) => None,
            Term::Literal(lit) => Some(lit),
        }
    }
}

impl From<Iri> for Term {
    fn from(iri: Iri) -> Self {
        Term::Iri(iri)
    }
}

impl From<Literal> for Term {
    fn from(lit: Literal) -> Self {
        Term::Literal(lit)
    }
}

/// A single statement. Subject and predicate are IRIs by construction.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    pub subject: Iri,
    pub predicate: Iri,
    pub object: Term,
}

impl Triple {
    pub fn new(subject: Iri, predicate: Iri, object: impl Into<Term>) -> Self {
        Triple {
            subject,
            predicate,
            object: object.into(),
        }
    }
}

/// A set of triples plus a prefix map used for serialization.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    triples: BTreeSet<Triple>,
    prefixes: BTreeMap<String, String>,
}

impl Graph {
    pub fn new() -> Self {
        Graph::default()
    }

    /// An empty graph carrying the built-in prefix table.
    pub fn with_default_prefixes() -> Self {
        Graph {
            triples: BTreeSet::new(),
            prefixes: crate::vocab::default_prefixes(),
        }
    }

    /// Returns `true` when the triple was not already present.
    pub fn insert(&mut self, triple: Triple) -> bool {
        self.triples.insert(triple)
    }

    pub fn contains(&self, triple: &Triple) -> bool {
        self.triples.contains(triple)
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    /// Triples in deterministic (subject, predicate, object) order.
    pub fn iter(&self) -> impl Iterator<Item = &Triple> {
        self.triples.iter()
    }

    /// Set union of triples and prefix maps (right-hand prefixes win on
    /// label clashes).
    pub fn merge(&mut self, other: Graph) {
        self.triples.extend(other.triples);
        self.prefixes.extend(other.prefixes);
    }

    pub fn add_prefix(&mut self, label: &str, namespace: &str) -> Result<(), RdfError> {
        if !is_valid_prefix_label(label) {
            return Err(RdfError::InvalidPrefixLabel(label.to_string()));
        }
        self.prefixes.insert(label.to_string(), namespace.to_string());
        Ok(())
    }

    pub fn prefixes(&self) -> &BTreeMap<String, String> {
        &self.prefixes
    }

    /// Distinct subjects, sorted.
    pub fn subjects(&self) -> Vec<&Iri> {
        let mut out: Vec<&Iri> = Vec::new();
        for t in &self.triples {
            if out.last() != Some(&&t.subject) {
                out.push(&t.subject);
            }
        }
        out
    }

    /// Objects of all `(subject, predicate, _)` triples, in term order.
    pub fn objects(&self, subject: &Iri, predicate: &Iri) -> Vec<&Term> {
        self.triples
            .iter()
            .filter(|t| &t.subject == subject && &t.predicate == predicate)
            .map(|t| &t.object)
            .collect()
    }

    /// Subjects of all `(_, predicate, object)` triples, sorted and deduplicated.
    pub fn subjects_with(&self, predicate: &Iri, object: &Term) -> Vec<&Iri> {
        let mut out: Vec<&Iri> = self
            .triples
            .iter()
            .filter(|t| &t.predicate == predicate && &t.object == object)
            .map(|t| &t.subject)
            .collect();
        out.dedup();
        out
    }

    /// Deterministic Turtle serialization: byte-identical for equal graphs.
    pub fn to_turtle(&self) -> String {
        writer::write_turtle(self)
    }

    /// Parse the supported Turtle subset.
    pub fn from_turtle(text: &str) -> Result<Graph, TurtleError> {
        parser::parse_turtle(text)
    }
}

impl Extend<Triple> for Graph {
    fn extend<T: IntoIterator<Item = Triple>>(&mut self, iter: T) {
        self.triples.extend(iter);
    }
}

impl<'a> IntoIterator for &'a Graph {
    type Item = &'a Triple;
    type IntoIter = std::collections::btree_set::Iter<'a, Triple>;

    fn into_iter(self) -> Self::IntoIter {
        self.triples.iter()
    }
}

fn is_valid_prefix_label(label: &str) -> bool {
    let mut chars = label.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
}
