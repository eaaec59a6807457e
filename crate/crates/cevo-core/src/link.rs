//! Linking annotated verb occurrences to ontology properties through shared
//! event classes.
//!
//! The join rule: an occurrence links to a property via class `c` when some
//! binding pairs the property with `c`, and `c` is a direct class of the
//! occurrence or (unless `strict`) an ancestor of one. The root `Event`
//! never matches — it would link everything to everything. Specificity is
//! the class's depth, so deeper (more specific) shared classes rank above
//! general ones.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::ontology::{ClassId, Lexicon};
use crate::rdf::{Graph, Iri, Term, Triple};
use crate::{bind, vocab};

/// One join result: the occurrence, the property it links to, the shared
/// class that justified the link, and that class's depth.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationLink {
    pub occurrence_iri: Iri,
    pub property_iri: Iri,
    pub via_class: ClassId,
    pub specificity: usize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LinkOptions {
    /// Keep only the most specific link(s) per occurrence.
    pub best_only: bool,
    /// Match direct classes only, no ancestor expansion.
    pub strict: bool,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinkError {
    #[error("malformed graph at subject <{subject}>: {reason}")]
    MalformedGraph { subject: String, reason: String },
}

impl LinkError {
    fn at(subject: &Iri, reason: impl Into<String>) -> Self {
        LinkError::MalformedGraph {
            subject: subject.to_string(),
            reason: reason.into(),
        }
    }
}

/// Join text annotations against property bindings. Output is sorted by
/// (occurrence, property, class) and identical across runs.
pub fn link(
    lexicon: &Lexicon,
    text_annotations: &Graph,
    bindings: &Graph,
    options: LinkOptions,
) -> Result<Vec<RelationLink>, LinkError> {
    let occurrences = extract_occurrences(lexicon, text_annotations)?;
    let pairs = extract_binding_pairs(lexicon, bindings)?;

    let mut links = Vec::new();
    for (occurrence, direct) in &occurrences {
        let mut candidates: BTreeSet<ClassId> = direct.clone();
        if !options.strict {
            for class in direct {
                let ancestors = lexicon
                    .ancestors(class)
                    .expect("occurrence classes were checked against the lexicon");
                candidates.extend(ancestors);
            }
        }
        candidates.remove(&ClassId::root());

        let mut matched: Vec<RelationLink> = Vec::new();
        for (property, class) in &pairs {
            if candidates.contains(class) {
                matched.push(RelationLink {
                    occurrence_iri: occurrence.clone(),
                    property_iri: property.clone(),
                    via_class: class.clone(),
                    specificity: lexicon
                        .depth(class)
                        .expect("binding classes were checked against the lexicon"),
                });
            }
        }
        if options.best_only {
            if let Some(max) = matched.iter().map(|l| l.specificity).max() {
                matched.retain(|l| l.specificity == max);
            }
        }
        links.extend(matched);
    }
    Ok(links)
}

/// Occurrence subjects (typed `nif:String`) with their direct event
/// classes, keyed and ordered by IRI.
fn extract_occurrences(
    lexicon: &Lexicon,
    graph: &Graph,
) -> Result<BTreeMap<Iri, BTreeSet<ClassId>>, LinkError> {
    let rdf_type = vocab::iri(vocab::RDF_TYPE);
    let nif_string = Term::Iri(vocab::iri(vocab::NIF_STRING));
    let namespace = lexicon.namespace();

    let mut out = BTreeMap::new();
    for subject in graph.subjects_with(&rdf_type, &nif_string) {
        let mut classes = BTreeSet::new();
        for object in graph.objects(subject, &rdf_type) {
            let Term::Iri(iri) = object else {
                return Err(LinkError::at(subject, "rdf:type object is not an IRI"));
            };
            let Some(local) = iri.as_str().strip_prefix(&namespace) else {
                continue; // nif:String itself, or typing from another vocabulary
            };
            let class = ClassId::new(local).map_err(|_| {
                LinkError::at(subject, format!("invalid event class IRI <{iri}>"))
            })?;
            if !lexicon.contains_class(&class) {
                return Err(LinkError::at(
                    subject,
                    format!("unknown event class '{class}'"),
                ));
            }
            classes.insert(class);
        }
        out.insert(subject.clone(), classes);
    }
    Ok(out)
}

/// Distinct (property, class) pairs from WADM binding annotations.
fn extract_binding_pairs(
    lexicon: &Lexicon,
    graph: &Graph,
) -> Result<BTreeSet<(Iri, ClassId)>, LinkError> {
    let rdf_type = vocab::iri(vocab::RDF_TYPE);
    let oa_annotation = Term::Iri(vocab::iri(vocab::OA_ANNOTATION));
    let has_target = vocab::iri(vocab::OA_HAS_TARGET);
    let has_body = vocab::iri(vocab::OA_HAS_BODY);
    let namespace = lexicon.namespace();

    let mut pairs = BTreeSet::new();
    for subject in graph.subjects_with(&rdf_type, &oa_annotation) {
        let property = match graph.objects(subject, &has_target).as_slice() {
            [Term::Iri(iri)] => (*iri).clone(),
            [] => return Err(LinkError::at(subject, "annotation has no oa:hasTarget")),
            [_] => return Err(LinkError::at(subject, "oa:hasTarget is not an IRI")),
            _ => return Err(LinkError::at(subject, "annotation has multiple oa:hasTarget")),
        };
        let body = match graph.objects(subject, &has_body).as_slice() {
            [Term::Iri(iri)] => (*iri).clone(),
            [] => return Err(LinkError::at(subject, "annotation has no oa:hasBody")),
            [_] => return Err(LinkError::at(subject, "oa:hasBody is not an IRI")),
            _ => return Err(LinkError::at(subject, "annotation has multiple oa:hasBody")),
        };
        let Some(local) = body.as_str().strip_prefix(&namespace) else {
            return Err(LinkError::at(
                subject,
                format!("annotation body <{body}> is not an event class"),
            ));
        };
        let class = ClassId::new(local)
            .map_err(|_| LinkError::at(subject, format!("invalid event class IRI <{body}>")))?;
        if !lexicon.contains_class(&class) {
            return Err(LinkError::at(
                subject,
                format!("unknown event class '{class}'"),
            ));
        }
        pairs.insert((property, class));
    }
    Ok(pairs)
}

/// One `itsrdf:taIdentRef` triple per link. With `wadm`, also a
/// web-annotation record per distinct (occurrence, property) pair, with
/// generated annotation IRIs numbered from 1 under `base_iri`.
pub fn export_links_turtle(links: &[RelationLink], wadm: bool, base_iri: &str) -> Graph {
    let mut g = Graph::with_default_prefixes();
    let ta_ident_ref = vocab::iri(vocab::ITSRDF_TA_IDENT_REF);
    for l in links {
        g.insert(Triple::new(
            l.occurrence_iri.clone(),
            ta_ident_ref.clone(),
            l.property_iri.clone(),
        ));
    }
    if wadm {
        let rdf_type = vocab::iri(vocab::RDF_TYPE);
        let oa_annotation = vocab::iri(vocab::OA_ANNOTATION);
        let has_target = vocab::iri(vocab::OA_HAS_TARGET);
        let has_body = vocab::iri(vocab::OA_HAS_BODY);
        let mut seen: BTreeSet<(&Iri, &Iri)> = BTreeSet::new();
        for l in links {
            if !seen.insert((&l.occurrence_iri, &l.property_iri)) {
                continue;
            }
            let annotation = bind::generated_annotation_iri(base_iri, seen.len());
            g.insert(Triple::new(
                annotation.clone(),
                rdf_type.clone(),
                oa_annotation.clone(),
            ));
            g.insert(Triple::new(
                annotation.clone(),
                has_target.clone(),
                l.occurrence_iri.clone(),
            ));
            g.insert(Triple::new(annotation, has_body.clone(), l.property_iri.clone()));
        }
    }
    g
}
