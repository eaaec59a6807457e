//! A hand-built corpus of Turtle files with independently counted triples.
//! The parser must agree with every reference count and reject the
//! malformed files.

use std::collections::HashSet;

use cevo_core::rdf::{Graph, TurtleError};
use rio_api::parser::TriplesParser;
use rio_turtle::TurtleParser;

/// (name, text, reference triple count). Counts were tallied by hand while
/// writing each file: one triple per subject-predicate-object combination,
/// after set deduplication.
const CORPUS: &[(&str, &str, usize)] = &[
    (
        "single_full_iri_triple",
        "<http://a.test/s> <http://a.test/p> <http://a.test/o> .\n",
        1,
    ),
    (
        "prefixed_type",
        "@prefix ex: <http://e.test/> .\nex:s a ex:Class .\n",
        1,
    ),
    (
        "two_predicates",
        "@prefix ex: <http://e.test/> .\nex:s ex:p1 ex:o1 ;\n    ex:p2 ex:o2 .\n",
        2,
    ),
    (
        "object_list_of_three",
        "@prefix ex: <http://e.test/> .\nex:s ex:p ex:a , ex:b , ex:c .\n",
        3,
    ),
    (
        "duplicate_statement_deduplicates",
        "@prefix ex: <http://e.test/> .\nex:s ex:p ex:o .\nex:s ex:p ex:o .\n",
        1,
    ),
    (
        "same_subject_two_objects",
        "@prefix ex: <http://e.test/> .\nex:s ex:p 1 .\nex:s ex:p 2 .\n",
        2,
    ),
    (
        "escaped_string",
        "<http://a.test/s> <http://a.test/p> \"a \\\"quote\\\" and \\\\ slash\" .\n",
        1,
    ),
    (
        "comment_heavy",
        "# leading comment\n@prefix ex: <http://e.test/> . # trailing\n# another\nex:s ex:p \"x # y\" . # end\n",
        1,
    ),
    ("empty_file", "", 0),
    (
        "prefixes_only",
        "@prefix ex: <http://e.test/> .\n@prefix ex2: <http://e2.test/> .\n",
        0,
    ),
    (
        "property_annotation_block",
        "@prefix example: <http://www.example.org/> .\n\
         @prefix oa: <http://www.w3.org/ns/oa#> .\n\
         @prefix dbo: <http://dbpedia.org/ontology/> .\n\
         @prefix cevo: <http://eventontology.org/#> .\n\
         example:annotation1 a oa:Annotation ;\n\
             oa:hasTarget dbo:spouse ;\n\
             oa:hasBody cevo:Amalgamate .\n",
        3,
    ),
    (
        "nif_annotation_block",
        "@prefix nif: <http://persistence.uni-leipzig.org/nlp2rdf/ontologies/nif-core#> .\n\
         @prefix olia: <http://nachhalt.sfb632.uni-potsdam.de/owl/olia.owl#> .\n\
         @prefix cevo: <http://eventontology.org/#> .\n\
         <http://example.org/tweet2#char=71,74> a nif:String ;\n\
             nif:beginIndex 71 ;\n\
             nif:endIndex 74 ;\n\
             nif:anchorOf \"says\" ;\n\
             nif:oliaCategory olia:MainVerb .\n\
         <http://example.org/tweet2#char=71,74> a cevo:Communication .\n",
        6,
    ),
    (
        "list_then_semicolon",
        "@prefix ex: <http://e.test/> .\nex:s a ex:C1 , ex:C2 ;\n    ex:p ex:o .\n",
        3,
    ),
    (
        "dangling_semicolon",
        "@prefix ex: <http://e.test/> .\nex:s ex:p ex:o ;\n.\n",
        1,
    ),
    (
        "three_subjects",
        "@prefix ex: <http://e.test/> .\nex:a ex:p 1 .\nex:b ex:p 2 .\nex:c ex:p 3 .\n",
        3,
    ),
    (
        "subject_split_across_statements",
        "@prefix ex: <http://e.test/> .\nex:s ex:p ex:o .\nex:s ex:q ex:o .\n",
        2,
    ),
    (
        "integer_lexical_forms",
        "@prefix ex: <http://e.test/> .\nex:s ex:p 0042 .\nex:s ex:q -7 .\n",
        2,
    ),
    (
        "fragment_offset_iri",
        "<exam:tweet#1#char=26,33> <http://a.test/p> \"announce\" .\n",
        1,
    ),
    (
        "unicode_literal",
        "<http://a.test/s> <http://a.test/p> \"caf\u{e9} ünïcödé ↦\" .\n",
        1,
    ),
    (
        "schema_block",
        "@prefix cevo: <http://eventontology.org/#> .\n\
         @prefix owl: <http://www.w3.org/2002/07/owl#> .\n\
         @prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n\
         cevo:Event a owl:Class ;\n\
             rdfs:label \"generic event\" ;\n\
             rdfs:comment \"something that happens\" .\n\
         cevo:Communication a owl:Class ;\n\
             rdfs:subClassOf cevo:Event ;\n\
             rdfs:label \"communication\" ;\n\
             rdfs:comment \"communication and transfer of idea\" .\n",
        7,
    ),
];

#[test]
fn corpus_counts_match_reference() {
    assert_eq!(CORPUS.len(), 20);
    for (name, text, expected) in CORPUS {
        let graph = Graph::from_turtle(text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(graph.len(), *expected, "wrong triple count for {name}");
    }
}

#[test]
fn corpus_files_round_trip() {
    for (name, text, _) in CORPUS {
        let graph = Graph::from_turtle(text).unwrap();
        let rewritten = graph.to_turtle();
        let reparsed = Graph::from_turtle(&rewritten).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(reparsed, graph, "round trip changed {name}");
    }
}

/// An independent Turtle implementation agrees with every reference count.
/// One corpus file is excluded: stand-off offsets attached to a document
/// IRI that itself carries a fragment produce a second `#`, which strict
/// RFC 3986 parsers reject while this crate accepts.
#[test]
fn corpus_counts_confirmed_by_independent_parser() {
    for (name, text, expected) in CORPUS {
        if *name == "fragment_offset_iri" {
            continue;
        }
        let mut set: HashSet<String> = HashSet::new();
        TurtleParser::new(text.as_bytes(), None)
            .parse_all(&mut |t| {
                set.insert(t.to_string());
                Ok(()) as Result<(), rio_turtle::TurtleError>
            })
            .unwrap_or_else(|e| panic!("{name}: independent parser rejected: {e}"));
        assert_eq!(set.len(), *expected, "independent count differs for {name}");
    }
}

#[test]
fn malformed_files_are_rejected() {
    let syntax_cases = [
        ("missing_dot", "@prefix x: <http://x.test/> .\nx:a x:b"),
        ("bad_escape", "<http://a.test/s> <http://a.test/p> \"bad \\q\" ."),
        ("undefined_prefix", "y:a y:b y:c ."),
        ("relative_iri", "<s> <http://a.test/p> 1 ."),
        ("lone_word", "prefix x: <http://x.test/> ."),
        ("unterminated_string", "<http://a.test/s> <http://a.test/p> \"open .\n"),
    ];
    for (name, text) in syntax_cases {
        match Graph::from_turtle(text) {
            Err(TurtleError::Syntax { .. }) => {}
            other => panic!("{name}: expected syntax error, got {other:?}"),
        }
    }

    let unsupported_cases = [
        ("blank_node", "@prefix x: <http://x.test/> .\nx:a x:b [ ] ."),
        ("language_tag", "@prefix x: <http://x.test/> .\nx:a x:b \"v\"@en ."),
        (
            "typed_literal",
            "@prefix x: <http://x.test/> .\nx:a x:b \"v\"^^x:t .",
        ),
        ("collection", "@prefix x: <http://x.test/> .\nx:a x:b (1) ."),
        ("base_directive", "@base <http://x.test/> ."),
    ];
    for (name, text) in unsupported_cases {
        match Graph::from_turtle(text) {
            Err(TurtleError::Unsupported { .. }) => {}
            other => panic!("{name}: expected unsupported error, got {other:?}"),
        }
    }
}
