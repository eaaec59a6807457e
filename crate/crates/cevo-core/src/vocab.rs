//! Namespace IRIs, well-known term IRIs, and the built-in prefix table.
//!
//! Every graph produced by this crate starts from [`default_prefixes`], so
//! output Turtle always abbreviates the same way. The `cevo` prefix is bound
//! to the default ontology namespace; exporters rebind it when a lexicon uses
//! a non-default base IRI.

use std::collections::BTreeMap;

use crate::rdf::Iri;

/// Default base IRI of the event ontology. Class and verb IRIs attach their
/// local name with `#`.
pub const DEFAULT_BASE_IRI: &str = "http://eventontology.org/";

pub const CEVO_NS: &str = "http://eventontology.org/#";
pub const RDF_NS: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
pub const RDFS_NS: &str = "http://www.w3.org/2000/01/rdf-schema#";
pub const OWL_NS: &str = "http://www.w3.org/2002/07/owl#";
pub const NIF_NS: &str = "http://persistence.uni-leipzig.org/nlp2rdf/ontologies/nif-core#";
pub const OA_NS: &str = "http://www.w3.org/ns/oa#";
pub const OLIA_NS: &str = "http://nachhalt.sfb632.uni-potsdam.de/owl/olia.owl#";
pub const ITSRDF_NS: &str = "http://www.w3.org/2005/11/its/rdf#";
pub const DBO_NS: &str = "http://dbpedia.org/ontology/";
pub const EXAMPLE_NS: &str = "http://www.example.org/";
pub const EXAM_NS: &str = "http://example.org/";
pub const XSD_NS: &str = "http://www.w3.org/2001/XMLSchema#";

pub const RDF_TYPE: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
pub const RDFS_LABEL: &str = "http://www.w3.org/2000/01/rdf-schema#label";
pub const RDFS_COMMENT: &str = "http://www.w3.org/2000/01/rdf-schema#comment";
pub const RDFS_SUBCLASS_OF: &str = "http://www.w3.org/2000/01/rdf-schema#subClassOf";
pub const OWL_CLASS: &str = "http://www.w3.org/2002/07/owl#Class";
pub const OWL_EQUIVALENT_CLASS: &str = "http://www.w3.org/2002/07/owl#equivalentClass";

pub const NIF_STRING: &str =
    "http://persistence.uni-leipzig.org/nlp2rdf/ontologies/nif-core#String";
pub const NIF_BEGIN_INDEX: &str =
    "http://persistence.uni-leipzig.org/nlp2rdf/ontologies/nif-core#beginIndex";
pub const NIF_END_INDEX: &str =
    "http://persistence.uni-leipzig.org/nlp2rdf/ontologies/nif-core#endIndex";
pub const NIF_ANCHOR_OF: &str =
    "http://persistence.uni-leipzig.org/nlp2rdf/ontologies/nif-core#anchorOf";
pub const NIF_OLIA_CATEGORY: &str =
    "http://persistence.uni-leipzig.org/nlp2rdf/ontologies/nif-core#oliaCategory";
pub const NIF_REFERENCE_CONTEXT: &str =
    "http://persistence.uni-leipzig.org/nlp2rdf/ontologies/nif-core#referenceContext";

pub const OA_ANNOTATION: &str = "http://www.w3.org/ns/oa#Annotation";
pub const OA_HAS_TARGET: &str = "http://www.w3.org/ns/oa#hasTarget";
pub const OA_HAS_BODY: &str = "http://www.w3.org/ns/oa#hasBody";

pub const ITSRDF_TA_IDENT_REF: &str = "http://www.w3.org/2005/11/its/rdf#taIdentRef";

pub const OLIA_MAIN_VERB: &str = "http://nachhalt.sfb632.uni-potsdam.de/owl/olia.owl#MainVerb";

pub const XSD_INTEGER: &str = "http://www.w3.org/2001/XMLSchema#integer";

/// The built-in prefix table. `example` is the canonical prefix for example
/// documents; `exam` is registered as well so files using either label parse.
pub fn default_prefixes() -> BTreeMap<String, String> {
    [
        ("cevo", CEVO_NS),
        ("rdf", RDF_NS),
        ("rdfs", RDFS_NS),
        ("owl", OWL_NS),
        ("nif", NIF_NS),
        ("oa", OA_NS),
        ("olia", OLIA_NS),
        ("itsrdf", ITSRDF_NS),
        ("dbo", DBO_NS),
        ("example", EXAMPLE_NS),
        ("exam", EXAM_NS),
    ]
    .into_iter()
    .map(|(p, ns)| (p.to_string(), ns.to_string()))
    .collect()
}

/// Build an [`Iri`] from one of the constants above.
///
/// Panics if the string is not an absolute IRI, which cannot happen for the
/// vocabulary constants this function is meant for.
pub fn iri(s: &str) -> Iri {
    Iri::new(s).expect("vocabulary IRI is absolute")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_constants_are_absolute_iris() {
        for s in [
            CEVO_NS,
            RDF_NS,
            RDFS_NS,
            OWL_NS,
            NIF_NS,
            OA_NS,
            OLIA_NS,
            ITSRDF_NS,
            DBO_NS,
            EXAMPLE_NS,
            EXAM_NS,
            RDF_TYPE,
            RDFS_LABEL,
            RDFS_COMMENT,
            RDFS_SUBCLASS_OF,
            OWL_CLASS,
            OWL_EQUIVALENT_CLASS,
            NIF_STRING,
            NIF_BEGIN_INDEX,
            NIF_END_INDEX,
            NIF_ANCHOR_OF,
            NIF_OLIA_CATEGORY,
            NIF_REFERENCE_CONTEXT,
            OA_ANNOTATION,
            OA_HAS_TARGET,
            OA_HAS_BODY,
            ITSRDF_TA_IDENT_REF,
            OLIA_MAIN_VERB,
            XSD_INTEGER,
        ] {
            assert!(Iri::new(s).is_ok(), "not an absolute IRI: {s}");
        }
    }

    #[test]
    fn prefix_table_has_the_documented_entries() {
        let p = default_prefixes();
        assert_eq!(p.len(), 11);
        assert_eq!(p["cevo"], CEVO_NS);
        assert_eq!(p["example"], EXAMPLE_NS);
        assert_eq!(p["exam"], EXAM_NS);
        assert_ne!(p["example"], p["exam"]);
    }
}
