//! The lexicon file format and the Turtle exporters.
//!
//! The file format is line-oriented so lexicons stay hand-editable and
//! diff-friendly:
//!
//! ```text
//! # comment
//! base <IRI>
//! class <Id> parents=<Id,Id,...> label="..." comment="..." props="p1|p2"
//! verb <lemma> classes=<Id,Id,...>
//! ```
//!
//! `label` defaults to the id with underscores as spaces, lowercased. The
//! root `Event` class is injected automatically when absent. Parsing runs
//! validation: [`parse_lexicon`] never returns an invalid lexicon.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::ontology::{
    ClassId, EventClass, Lexicon, LexiconBuilder, OntologyError, ValidationReport, VerbEntry,
};
use crate::rdf::{Graph, Iri, Literal, Triple};
use crate::vocab;

/// The bundled seed lexicon, in the format above.
pub const SEED_LEXICON: &str = include_str!("../data/seed.cevo");

/// Parse the bundled seed lexicon.
pub fn seed_lexicon() -> Lexicon {
    parse_lexicon(SEED_LEXICON).expect("bundled seed lexicon is valid")
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LexiconIoError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid lexicon:\n{0}")]
    Invalid(ValidationReport),
}

impl LexiconIoError {
    fn at(line: usize, message: impl Into<String>) -> Self {
        LexiconIoError::Parse {
            line,
            message: message.into(),
        }
    }
}

impl From<OntologyError> for LexiconIoError {
    fn from(e: OntologyError) -> Self {
        match e {
            OntologyError::Invalid(report) => LexiconIoError::Invalid(report),
            other => LexiconIoError::Parse {
                line: 0,
                message: other.to_string(),
            },
        }
    }
}

/// Parse into candidate form without validating. `cevo validate` uses this
/// so it can report violations instead of refusing the file.
pub fn parse_candidate(text: &str) -> Result<LexiconBuilder, LexiconIoError> {
    let mut builder = LexiconBuilder::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = strip_comment(raw);
        let fields = split_fields(line).map_err(|m| LexiconIoError::at(line_no, m))?;
        let Some((directive, rest)) = fields.split_first() else {
            continue;
        };
        match directive.text.as_str() {
            "base" => {
                let iri = single_positional(rest, line_no, "base <IRI>")?;
                builder.base_iri = iri.text.clone();
            }
            "class" => {
                let (id_field, kvs) = positional_then_keys(rest, line_no, "class <Id> ...")?;
                let id = ClassId::new(&id_field.text)
                    .map_err(|e| LexiconIoError::at(line_no, e.to_string()))?;
                let mut class = EventClass::new(id.clone(), default_label(&id));
                if id.is_root() {
                    class = EventClass::root();
                }
                for kv in kvs {
                    let key = kv.key.as_deref().expect("positional_then_keys");
                    match key {
                        "parents" => {
                            class.parents = parse_id_list(&kv.text, line_no)?;
                        }
                        "label" => class.label = kv.text.clone(),
                        "comment" => class.comment = Some(kv.text.clone()),
                        "props" => {
                            class.meaning_properties = kv
                                .text
                                .split('|')
                                .filter(|p| !p.is_empty())
                                .map(str::to_string)
                                .collect();
                        }
                        other => {
                            return Err(LexiconIoError::at(
                                line_no,
                                format!("unknown key '{other}' in class directive"),
                            ))
                        }
                    }
                }
                builder.classes.push(class);
            }
            "verb" => {
                let (lemma_field, kvs) = positional_then_keys(rest, line_no, "verb <lemma> ...")?;
                let mut classes: Option<BTreeSet<ClassId>> = None;
                for kv in kvs {
                    match kv.key.as_deref().expect("positional_then_keys") {
                        "classes" => classes = Some(parse_id_list(&kv.text, line_no)?),
                        other => {
                            return Err(LexiconIoError::at(
                                line_no,
                                format!("unknown key '{other}' in verb directive"),
                            ))
                        }
                    }
                }
                let classes = classes.ok_or_else(|| {
                    LexiconIoError::at(line_no, "verb directive requires classes=<Id,Id,...>")
                })?;
                builder.verbs.push(VerbEntry {
                    lemma: lemma_field.text.clone(),
                    classes,
                });
            }
            other => {
                return Err(LexiconIoError::at(
                    line_no,
                    format!("unknown directive '{other}' (expected base, class, or verb)"),
                ))
            }
        }
    }
    Ok(builder.ensure_root())
}

/// Parse and validate. The returned lexicon always passes validation.
pub fn parse_lexicon(text: &str) -> Result<Lexicon, LexiconIoError> {
    Ok(parse_candidate(text)?.build()?)
}

/// Inverse of [`parse_lexicon`]: a dump that parses back to an equal lexicon.
pub fn write_lexicon(lexicon: &Lexicon) -> String {
    let mut out = String::new();
    out.push_str(&format!("base {}\n", lexicon.base_iri()));
    for class in lexicon.classes() {
        out.push_str(&format!("class {}", class.id));
        if !class.parents.is_empty() {
            let parents: Vec<&str> = class.parents.iter().map(ClassId::as_str).collect();
            out.push_str(&format!(" parents={}", parents.join(",")));
        }
        out.push_str(&format!(" label={}", quote(&class.label)));
        if let Some(comment) = &class.comment {
            out.push_str(&format!(" comment={}", quote(comment)));
        }
        if !class.meaning_properties.is_empty() {
            out.push_str(&format!(" props={}", quote(&class.meaning_properties.join("|"))));
        }
        out.push('\n');
    }
    for verb in lexicon.verbs() {
        let classes: Vec<&str> = verb.classes.iter().map(ClassId::as_str).collect();
        out.push_str(&format!("verb {} classes={}\n", verb.lemma, classes.join(",")));
    }
    out
}

/// Schema-level export: one `owl:Class` per event class with label, comment,
/// and `rdfs:subClassOf` edges, plus the `MainVerb` class declared
/// equivalent to the OLiA one.
pub fn export_schema_turtle(lexicon: &Lexicon) -> Graph {
    let mut g = lexicon_graph(lexicon);
    let rdf_type = vocab::iri(vocab::RDF_TYPE);
    let owl_class = vocab::iri(vocab::OWL_CLASS);
    let label = vocab::iri(vocab::RDFS_LABEL);
    let comment = vocab::iri(vocab::RDFS_COMMENT);
    let subclass_of = vocab::iri(vocab::RDFS_SUBCLASS_OF);

    for class in lexicon.classes() {
        let subject = Iri::trusted(lexicon.class_iri(&class.id));
        g.insert(Triple::new(subject.clone(), rdf_type.clone(), owl_class.clone()));
        g.insert(Triple::new(
            subject.clone(),
            label.clone(),
            Literal::string(&class.label),
        ));
        if let Some(text) = &class.comment {
            g.insert(Triple::new(
                subject.clone(),
                comment.clone(),
                Literal::string(text),
            ));
        }
        for parent in &class.parents {
            g.insert(Triple::new(
                subject.clone(),
                subclass_of.clone(),
                Iri::trusted(lexicon.class_iri(parent)),
            ));
        }
    }

    let main_verb = Iri::trusted(format!("{}MainVerb", lexicon.namespace()));
    g.insert(Triple::new(main_verb.clone(), rdf_type, owl_class));
    g.insert(Triple::new(
        main_verb,
        vocab::iri(vocab::OWL_EQUIVALENT_CLASS),
        vocab::iri(vocab::OLIA_MAIN_VERB),
    ));
    g
}

/// Instance-level export: each verb typed `cevo:MainVerb` plus one type
/// triple per member class — exactly `1 + |classes|` triples per verb.
/// Ancestor closure is a query-time concern and is not materialized.
pub fn export_instances_turtle(lexicon: &Lexicon) -> Graph {
    let mut g = lexicon_graph(lexicon);
    let rdf_type = vocab::iri(vocab::RDF_TYPE);
    let main_verb = Iri::trusted(format!("{}MainVerb", lexicon.namespace()));
    for verb in lexicon.verbs() {
        let subject = Iri::trusted(lexicon.verb_iri(&verb.lemma));
        g.insert(Triple::new(subject.clone(), rdf_type.clone(), main_verb.clone()));
        for class in &verb.classes {
            g.insert(Triple::new(
                subject.clone(),
                rdf_type.clone(),
                Iri::trusted(lexicon.class_iri(class)),
            ));
        }
    }
    g
}

/// Built-in prefixes with `cevo` rebound to the lexicon's own namespace.
pub fn lexicon_graph(lexicon: &Lexicon) -> Graph {
    let mut g = Graph::with_default_prefixes();
    g.add_prefix("cevo", &lexicon.namespace())
        .expect("'cevo' is a valid prefix label");
    g
}

fn default_label(id: &ClassId) -> String {
    id.as_str().replace('_', " ").to_lowercase()
}

fn parse_id_list(text: &str, line_no: usize) -> Result<BTreeSet<ClassId>, LexiconIoError> {
    text.split(',')
        .filter(|s| !s.is_empty())
        .map(|s| ClassId::new(s).map_err(|e| LexiconIoError::at(line_no, e.to_string())))
        .collect()
}

fn quote(text: &str) -> String {
    let mut out = String::with_capacity(text.len() + 2);
    out.push('"');
    for c in text.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            _ => out.push(c),
        }
    }
    out.push('"');
    out
}

/// A parsed field: optional `key=` part and the (unquoted) value.
#[derive(Debug, Clone)]
struct Field {
    key: Option<String>,
    text: String,
}

/// Truncate at the first `#` that is not inside a quoted value.
fn strip_comment(line: &str) -> &str {
    let mut in_quotes = false;
    let mut escaped = false;
    for (i, c) in line.char_indices() {
        match c {
            _ if escaped => escaped = false,
            '\\' if in_quotes => escaped = true,
            '"' => in_quotes = !in_quotes,
            '#' if !in_quotes => return &line[..i],
            _ => {}
        }
    }
    line
}

/// Split a directive line into whitespace-separated fields. A field is
/// `value`, `key=value`, or `key="quoted value"` with `\"` and `\\`
/// escapes.
fn split_fields(line: &str) -> Result<Vec<Field>, String> {
    let mut fields = Vec::new();
    let mut chars = line.chars().peekable();
    loop {
        while chars.next_if(|c| c.is_whitespace()).is_some() {}
        if chars.peek().is_none() {
            return Ok(fields);
        }
        let mut head = String::new();
        let mut key = None;
        let mut text = None;
        while let Some(&c) = chars.peek() {
            match c {
                c if c.is_whitespace() => break,
                '=' if key.is_none() => {
                    chars.next();
                    key = Some(std::mem::take(&mut head));
                }
                '"' => {
                    chars.next();
                    if !head.is_empty() {
                        return Err("unexpected '\"' inside an unquoted value".to_string());
                    }
                    let mut quoted = String::new();
                    loop {
                        match chars.next() {
                            None => return Err("unterminated quoted value".to_string()),
                            Some('"') => break,
                            Some('\\') => match chars.next() {
                                Some('"') => quoted.push('"'),
                                Some('\\') => quoted.push('\\'),
                                Some(c) => {
                                    return Err(format!("unsupported escape sequence \\{c}"))
                                }
                                None => return Err("unterminated quoted value".to_string()),
                            },
                            Some(c) => quoted.push(c),
                        }
                    }
                    text = Some(quoted);
                    break;
                }
                _ => {
                    head.push(c);
                    chars.next();
                }
            }
        }
        let text = text.unwrap_or(head);
        if key.is_none() && text.is_empty() {
            continue;
        }
        fields.push(Field { key, text });
    }
}

fn single_positional<'a>(
    fields: &'a [Field],
    line_no: usize,
    usage: &str,
) -> Result<&'a Field, LexiconIoError> {
    match fields {
        [f] if f.key.is_none() => Ok(f),
        _ => Err(LexiconIoError::at(line_no, format!("expected: {usage}"))),
    }
}

fn positional_then_keys<'a>(
    fields: &'a [Field],
    line_no: usize,
    usage: &str,
) -> Result<(&'a Field, Vec<&'a Field>), LexiconIoError> {
    let Some((first, rest)) = fields.split_first() else {
        return Err(LexiconIoError::at(line_no, format!("expected: {usage}")));
    };
    if first.key.is_some() {
        return Err(LexiconIoError::at(line_no, format!("expected: {usage}")));
    }
    let mut seen: BTreeSet<&str> = BTreeSet::new();
    for field in rest {
        match &field.key {
            None => {
                return Err(LexiconIoError::at(
                    line_no,
                    format!("unexpected bare value {:?} (expected key=value)", field.text),
                ))
            }
            Some(key) => {
                if !seen.insert(key) {
                    return Err(LexiconIoError::at(line_no, format!("duplicate key '{key}'")));
                }
            }
        }
    }
    Ok((first, rest.iter().collect()))
}
