//! Web-annotation bindings from external ontology properties to event
//! classes.
//!
//! The bindings file format is one whitespace-separated line per binding:
//!
//! ```text
//! <property-IRI> <ClassId> [annotation-IRI]
//! ```
//!
//! When the annotation IRI is omitted it is generated as
//! `<base>annotation/<n>`, numbering bindings from 1 in input order.

use thiserror::Error;

use crate::ontology::{ClassId, Lexicon};
use crate::rdf::{Graph, Iri, Triple};
use crate::{lexicon_io, vocab};

/// A property-to-class binding, rendered as one WADM annotation whose
/// target is the property and whose body is the event class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyBinding {
    pub annotation_iri: Iri,
    pub property_iri: Iri,
    pub class: ClassId,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BindError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: unknown class {class:?}")]
    UnknownClass { line: usize, class: String },
}

/// Parse a bindings file against a lexicon. Every referenced class must
/// exist.
pub fn parse_bindings(
    text: &str,
    lexicon: &Lexicon,
    base_iri: &str,
) -> Result<Vec<PropertyBinding>, BindError> {
    let mut bindings = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        let (property, class, annotation) = match parts.as_slice() {
            [p, c] => (*p, *c, None),
            [p, c, a] => (*p, *c, Some(*a)),
            _ => {
                return Err(BindError::Parse {
                    line: line_no,
                    message: format!(
                        "expected '<property-IRI> <ClassId> [annotation-IRI]', found {line:?}"
                    ),
                })
            }
        };
        let property_iri = Iri::new(property).map_err(|e| BindError::Parse {
            line: line_no,
            message: e.to_string(),
        })?;
        let class = ClassId::new(class).map_err(|e| BindError::Parse {
            line: line_no,
            message: e.to_string(),
        })?;
        if !lexicon.contains_class(&class) {
            return Err(BindError::UnknownClass {
                line: line_no,
                class: class.to_string(),
            });
        }
        let annotation_iri = match annotation {
            Some(a) => Iri::new(a).map_err(|e| BindError::Parse {
                line: line_no,
                message: e.to_string(),
            })?,
            None => generated_annotation_iri(base_iri, bindings.len() + 1),
        };
        bindings.push(PropertyBinding {
            annotation_iri,
            property_iri,
            class,
        });
    }
    Ok(bindings)
}

pub(crate) fn generated_annotation_iri(base_iri: &str, n: usize) -> Iri {
    Iri::trusted(format!("{base_iri}annotation/{n}"))
}

/// Inverse of [`parse_bindings`] for the `(property, class)` payload.
pub fn write_bindings(bindings: &[PropertyBinding]) -> String {
    let mut out = String::new();
    for b in bindings {
        out.push_str(&format!(
            "{} {} {}\n",
            b.property_iri, b.class, b.annotation_iri
        ));
    }
    out
}

/// Exactly three triples per binding: annotation type, target property,
/// body class.
pub fn export_bindings_turtle(lexicon: &Lexicon, bindings: &[PropertyBinding]) -> Graph {
    let mut g = lexicon_io::lexicon_graph(lexicon);
    let rdf_type = vocab::iri(vocab::RDF_TYPE);
    let oa_annotation = vocab::iri(vocab::OA_ANNOTATION);
    let has_target = vocab::iri(vocab::OA_HAS_TARGET);
    let has_body = vocab::iri(vocab::OA_HAS_BODY);
    for b in bindings {
        g.insert(Triple::new(
            b.annotation_iri.clone(),
            rdf_type.clone(),
            oa_annotation.clone(),
        ));
        g.insert(Triple::new(
            b.annotation_iri.clone(),
            has_target.clone(),
            b.property_iri.clone(),
        ));
        g.insert(Triple::new(
            b.annotation_iri.clone(),
            has_body.clone(),
            Iri::trusted(lexicon.class_iri(&b.class)),
        ));
    }
    g
}
