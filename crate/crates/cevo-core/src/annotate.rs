//! Stand-off annotation of main verbs in plain text.
//!
//! Each detected verb becomes a NIF-style annotation node addressed as
//! `<document>#char=begin,end` (begin inclusive, end exclusive, counted in
//! Unicode code points) and typed with its event classes. A
//! `nif:referenceContext` triple back to the document is emitted as well so
//! the stand-off node stays resolvable on its own.

use thiserror::Error;

use crate::normalize::{apply_pos_hints, detect_verbs, tokenize, PosHint, VerbOccurrence};
use crate::ontology::Lexicon;
use crate::rdf::{Graph, Iri, Literal, Triple};
use crate::{lexicon_io, vocab};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnnotateError {
    #[error("document IRI {0:?} is not an absolute IRI")]
    RelativeDocumentIri(String),
}

/// The annotation node IRI for a span of a document.
pub fn occurrence_iri(document_iri: &Iri, begin: usize, end: usize) -> Iri {
    Iri::trusted(format!("{}#char={},{}", document_iri, begin, end))
}

/// Tokenize, detect main verbs, and emit one annotation block per
/// occurrence: `6 + |classes|` triples (type, begin, end, anchor, olia
/// category, reference context, plus one event-class type each).
pub fn annotate_document(
    lexicon: &Lexicon,
    document_iri: &str,
    text: &str,
    pos_hints: Option<&[(usize, usize, PosHint)]>,
) -> Result<Graph, AnnotateError> {
    let document_iri = Iri::new(document_iri)
        .map_err(|_| AnnotateError::RelativeDocumentIri(document_iri.to_string()))?;
    let mut tokens = tokenize(text);
    if let Some(hints) = pos_hints {
        apply_pos_hints(&mut tokens, hints);
    }
    let occurrences = detect_verbs(lexicon, &tokens);
    Ok(annotate_occurrences(lexicon, &document_iri, &occurrences))
}

/// Render already-detected occurrences as an annotation graph.
pub fn annotate_occurrences(
    lexicon: &Lexicon,
    document_iri: &Iri,
    occurrences: &[VerbOccurrence],
) -> Graph {
    let mut g = lexicon_io::lexicon_graph(lexicon);
    let rdf_type = vocab::iri(vocab::RDF_TYPE);
    for occ in occurrences {
        let node = occurrence_iri(document_iri, occ.begin, occ.end);
        g.insert(Triple::new(
            node.clone(),
            rdf_type.clone(),
            vocab::iri(vocab::NIF_STRING),
        ));
        g.insert(Triple::new(
            node.clone(),
            vocab::iri(vocab::NIF_BEGIN_INDEX),
            Literal::integer(occ.begin as i64),
        ));
        g.insert(Triple::new(
            node.clone(),
            vocab::iri(vocab::NIF_END_INDEX),
            Literal::integer(occ.end as i64),
        ));
        g.insert(Triple::new(
            node.clone(),
            vocab::iri(vocab::NIF_ANCHOR_OF),
            Literal::string(&occ.anchor),
        ));
        g.insert(Triple::new(
            node.clone(),
            vocab::iri(vocab::NIF_OLIA_CATEGORY),
            vocab::iri(vocab::OLIA_MAIN_VERB),
        ));
        g.insert(Triple::new(
            node.clone(),
            vocab::iri(vocab::NIF_REFERENCE_CONTEXT),
            document_iri.clone(),
        ));
        for class in &occ.classes {
            g.insert(Triple::new(
                node.clone(),
                rdf_type.clone(),
                Iri::trusted(lexicon.class_iri(class)),
            ));
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon_io::seed_lexicon;
    use crate::rdf::Term;

    const DOC: &str = "http://example.org/tweet2";

    #[test]
    fn says_annotation_shape() {
        let seed = seed_lexicon();
        let g = annotate_document(&seed, DOC, "BBC says hello", None).unwrap();

        let node = Iri::new(format!("{DOC}#char=4,8")).unwrap();
        let anchor = g.objects(&node, &vocab::iri(vocab::NIF_ANCHOR_OF));
        assert_eq!(anchor, vec![&Term::Literal(Literal::string("says"))]);

        let types = g.objects(&node, &vocab::iri(vocab::RDF_TYPE));
        assert!(types.contains(&&Term::Iri(vocab::iri(vocab::NIF_STRING))));
        assert!(types.contains(&&Term::Iri(Iri::new("http://eventontology.org/#Communication").unwrap())));

        let begin = g.objects(&node, &vocab::iri(vocab::NIF_BEGIN_INDEX));
        assert_eq!(begin, vec![&Term::Literal(Literal::integer(4))]);
        let end = g.objects(&node, &vocab::iri(vocab::NIF_END_INDEX));
        assert_eq!(end, vec![&Term::Literal(Literal::integer(8))]);

        let olia = g.objects(&node, &vocab::iri(vocab::NIF_OLIA_CATEGORY));
        assert_eq!(olia, vec![&Term::Iri(vocab::iri(vocab::OLIA_MAIN_VERB))]);

        let ctx = g.objects(&node, &vocab::iri(vocab::NIF_REFERENCE_CONTEXT));
        assert_eq!(ctx, vec![&Term::Iri(Iri::new(DOC).unwrap())]);

        // 6 fixed triples + 1 class type.
        assert_eq!(g.len(), 7);
    }

    #[test]
    fn empty_text_yields_empty_graph() {
        let seed = seed_lexicon();
        let g = annotate_document(&seed, DOC, "", None).unwrap();
        assert!(g.is_empty());
    }

    #[test]
    fn cook_occurrence_carries_four_class_types() {
        let seed = seed_lexicon();
        let g = annotate_document(&seed, DOC, "They cook rice", None).unwrap();
        assert_eq!(g.len(), 10); // 6 + 4 classes
        let node = Iri::new(format!("{DOC}#char=5,9")).unwrap();
        let types = g.objects(&node, &vocab::iri(vocab::RDF_TYPE));
        assert_eq!(types.len(), 5); // nif:String + 4 event classes
    }

    #[test]
    fn relative_document_iri_is_rejected() {
        let seed = seed_lexicon();
        let err = annotate_document(&seed, "tweets/1", "BBC says hello", None).unwrap_err();
        assert_eq!(err, AnnotateError::RelativeDocumentIri("tweets/1".into()));
    }

    #[test]
    fn annotation_graph_reserializes_byte_identically() {
        let seed = seed_lexicon();
        let g = annotate_document(&seed, DOC, "Rupert Murdoch and Jerry Hall marry", None).unwrap();
        let text = g.to_turtle();
        let reparsed = Graph::from_turtle(&text).unwrap();
        assert_eq!(reparsed, g);
        assert_eq!(reparsed.to_turtle(), text);
    }

    #[test]
    fn anchor_equals_code_point_slice() {
        let seed = seed_lexicon();
        let text = "Café staff say hello";
        let g = annotate_document(&seed, DOC, text, None).unwrap();
        let node = Iri::new(format!("{DOC}#char=11,14")).unwrap();
        let anchor = g.objects(&node, &vocab::iri(vocab::NIF_ANCHOR_OF));
        let slice: String = text.chars().skip(11).take(3).collect();
        assert_eq!(anchor, vec![&Term::Literal(Literal::string(slice))]);
    }
}
