//! Shared generators for the property and acceptance suites.

#![allow(dead_code)]

use std::collections::BTreeSet;

use cevo_core::ontology::{ClassId, EventClass, Lexicon, VerbEntry};
use cevo_core::rdf::{Graph, Iri, Literal, Term, Triple};
use cevo_core::vocab;
use proptest::prelude::*;

/// Random lexicons: a rooted DAG of `C0..Cn` classes (each picking parents
/// among the root and earlier classes, so validity holds by construction)
/// plus verbs `v0..vm` with arbitrary memberships.
pub fn lexicon_strategy(
    max_classes: usize,
    max_verbs: usize,
) -> impl Strategy<Value = Lexicon> {
    let classes = prop::collection::vec(prop::collection::vec(any::<usize>(), 1..=3), 0..max_classes);
    let verbs = prop::collection::vec(prop::collection::vec(any::<usize>(), 1..=3), 0..=max_verbs);
    (classes, verbs).prop_map(|(class_choices, verb_choices)| {
        build_lexicon(&class_choices, &verb_choices)
    })
}

pub fn build_lexicon(class_choices: &[Vec<usize>], verb_choices: &[Vec<usize>]) -> Lexicon {
    let mut names: Vec<ClassId> = vec![ClassId::root()];
    let mut builder = Lexicon::builder().class(EventClass::root());
    for (i, raws) in class_choices.iter().enumerate() {
        let id = ClassId::new(format!("C{i}")).unwrap();
        let mut class = EventClass::new(id.clone(), format!("class {i}"));
        for &raw in raws {
            class.parents.insert(names[raw % names.len()].clone());
        }
        builder = builder.class(class);
        names.push(id);
    }
    for (j, raws) in verb_choices.iter().enumerate() {
        let classes: BTreeSet<ClassId> = raws
            .iter()
            .map(|&raw| names[raw % names.len()].clone())
            .collect();
        builder = builder.verb(VerbEntry::new(format!("v{j}"), classes));
    }
    builder.build().expect("generated lexicon is valid by construction")
}

/// IRIs drawn from the built-in namespaces with identifier-like locals,
/// plus free-form absolute IRIs with fragment/query punctuation.
pub fn iri_strategy() -> impl Strategy<Value = Iri> {
    let namespaces: Vec<String> = vocab::default_prefixes().into_values().collect();
    prop_oneof![
        (prop::sample::select(namespaces), "[A-Za-z_][A-Za-z0-9_-]{0,8}")
            .prop_map(|(ns, local)| Iri::new(format!("{ns}{local}")).unwrap()),
        "[a-z][a-z0-9+.-]{0,5}:[A-Za-z0-9/._~:#=,?&%-]{0,20}"
            .prop_map(|s| Iri::new(s).unwrap()),
    ]
}

pub fn literal_strategy() -> impl Strategy<Value = Literal> {
    prop_oneof![
        prop::collection::vec(any::<char>(), 0..30)
            .prop_map(|cs| Literal::string(cs.into_iter().collect::<String>())),
        any::<i64>().prop_map(Literal::integer),
        // Lexical forms with leading zeros survive round trips unchanged.
        "-?0[0-9]{0,4}".prop_map(|s| Literal::integer_lexical(s).unwrap()),
    ]
}

pub fn term_strategy() -> impl Strategy<Value = Term> {
    prop_oneof![
        iri_strategy().prop_map(Term::Iri),
        literal_strategy().prop_map(Term::Literal),
    ]
}

/// Graphs of up to `max_triples` random triples over the built-in prefix
/// table.
pub fn graph_strategy(max_triples: usize) -> impl Strategy<Value = Graph> {
    prop::collection::vec(
        (iri_strategy(), iri_strategy(), term_strategy()),
        0..=max_triples,
    )
    .prop_map(|triples| {
        let mut g = Graph::with_default_prefixes();
        for (s, p, o) in triples {
            g.insert(Triple::new(s, p, o));
        }
        g
    })
}

/// Inflected and capitalized variants of the seed verbs, mixed with noise,
/// for random-document generation.
pub fn word_strategy() -> impl Strategy<Value = String> {
    prop_oneof![
        prop::sample::select(vec![
            "say", "says", "saying", "announce", "announced", "mention", "mentioning",
            "cook", "cooks", "cooked", "cooking", "boil", "boiling", "marry",
            "marries", "married", "complain", "complained", "visit", "visits",
            "consult", "consulted", "Says", "COOKED", "Marrying",
        ])
        .prop_map(str::to_string),
        "[A-Za-z]{1,10}",
        "[a-zA-Zéüñ]{1,8}",
    ]
}

pub fn document_strategy() -> impl Strategy<Value = String> {
    prop::collection::vec(word_strategy(), 0..30).prop_map(|ws| ws.join(" "))
}
