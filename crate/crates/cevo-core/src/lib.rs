//! Core library for the CEVO event-ontology toolkit.
//!
//! What lives here:
//!
//! - [`ontology`] — the validated verb-class hierarchy (a rooted DAG) and
//!   lexicon, with query operations (class membership, ancestors, deepest
//!   common class).
//! - [`rdf`] — a minimal triple model with a deterministic Turtle writer
//!   and a Turtle-subset reader.
//! - [`lexicon_io`] — the line-oriented lexicon file format and the
//!   schema/instance Turtle exporters.
//! - [`normalize`] — tokenization, rule-based lemmatization, and
//!   lexicon-guided main-verb detection.
//! - [`annotate`] — NIF stand-off annotations for detected verbs, typed
//!   with their event classes.
//! - [`bind`] — web annotations pairing external ontology properties with
//!   event classes.
//! - [`link`] — the join that connects annotated verbs to bound properties
//!   through shared classes.
//!
//! Everything is deterministic by construction: list outputs are sorted,
//! graphs have set semantics, and serialization is byte-stable, so whole
//! pipelines reproduce exactly.
//!
//! The whole pipeline, end to end:
//!
//! ```
//! use cevo_core::{annotate_document, link, parse_bindings, seed_lexicon};
//! use cevo_core::{export_bindings_turtle, export_links_turtle, LinkOptions};
//!
//! let lexicon = seed_lexicon();
//! let annotations = annotate_document(
//!     &lexicon,
//!     "http://example.org/tweet3",
//!     "Rupert Murdoch and Jerry Hall marry",
//!     None,
//! )
//! .unwrap();
//!
//! let bindings = parse_bindings(
//!     "http://dbpedia.org/ontology/spouse Amalgamate\n",
//!     &lexicon,
//!     lexicon.base_iri(),
//! )
//! .unwrap();
//! let bindings = export_bindings_turtle(&lexicon, &bindings);
//!
//! let links = link(&lexicon, &annotations, &bindings, LinkOptions::default()).unwrap();
//! let turtle = export_links_turtle(&links, false, lexicon.base_iri()).to_turtle();
//! assert!(turtle.contains(
//!     "<http://example.org/tweet3#char=30,35> itsrdf:taIdentRef dbo:spouse ."
//! ));
//! ```

pub mod annotate;
pub mod bind;
pub mod lexicon_io;
pub mod link;
pub mod normalize;
pub mod ontology;
pub mod rdf;
pub mod vocab;

pub use annotate::{annotate_document, AnnotateError};
pub use bind::{export_bindings_turtle, parse_bindings, BindError, PropertyBinding};
pub use lexicon_io::{
    export_instances_turtle, export_schema_turtle, parse_lexicon, seed_lexicon, write_lexicon,
    LexiconIoError,
};
pub use link::{export_links_turtle, link, LinkError, LinkOptions, RelationLink};
pub use normalize::{
    detect_verbs, lemma_candidates, tokenize, PosHint, Token, VerbOccurrence,
};
pub use ontology::{
    ClassId, EventClass, Lexicon, LexiconBuilder, OntologyError, ValidationReport, VerbEntry,
    Violation,
};
pub use rdf::{Graph, Iri, Literal, RdfError, Term, Triple, TurtleError};
