//! Deterministic Turtle serialization.
//!
//! Output is a pure function of the graph value: prefixes sorted by label,
//! subjects sorted by IRI, `rdf:type` first within a subject block (rendered
//! as `a`), remaining predicates sorted by IRI, objects sorted by term order
//! and joined with `,`.

use std::collections::BTreeMap;

use super::{Graph, Iri, Literal, Term};
use crate::vocab;

pub(super) fn write_turtle(graph: &Graph) -> String {
    let mut out = String::new();
    for (label, ns) in graph.prefixes() {
        out.push_str("@prefix ");
        out.push_str(label);
        out.push_str(": <");
        out.push_str(ns);
        out.push_str("> .\n");
    }
    if graph.is_empty() {
        return out;
    }
    if !graph.prefixes().is_empty() {
        out.push('\n');
    }

    // Triples iterate in (subject, predicate, object) order, so objects are
    // already sorted within each predicate group.
    let mut blocks: Vec<(&Iri, BTreeMap<&Iri, Vec<&Term>>)> = Vec::new();
    for t in graph.iter() {
        match blocks.last_mut() {
            Some((s, preds)) if *s == &t.subject => {
                preds.entry(&t.predicate).or_default().push(&t.object);
            }
            _ => {
                let mut preds: BTreeMap<&Iri, Vec<&Term>> = BTreeMap::new();
                preds.insert(&t.predicate, vec![&t.object]);
                blocks.push((&t.subject, preds));
            }
        }
    }

    let rdf_type = vocab::iri(vocab::RDF_TYPE);
    for (subject, preds) in blocks {
        let mut entries: Vec<(&Iri, &Vec<&Term>)> = Vec::with_capacity(preds.len());
        if let Some(objs) = preds.get(&rdf_type) {
            entries.push((&rdf_type, objs));
        }
        entries.extend(preds.iter().filter(|(p, _)| ***p != rdf_type).map(|(p, o)| (*p, o)));

        let last = entries.len() - 1;
        for (i, (predicate, objects)) in entries.into_iter().enumerate() {
            if i == 0 {
                out.push_str(&render_iri(subject, graph.prefixes()));
            } else {
                out.push_str("   ");
            }
            out.push(' ');
            if *predicate == rdf_type {
                out.push('a');
            } else {
                out.push_str(&render_iri(predicate, graph.prefixes()));
            }
            out.push(' ');
            for (j, object) in objects.iter().enumerate() {
                if j > 0 {
                    out.push_str(" , ");
                }
                out.push_str(&render_term(object, graph.prefixes()));
            }
            out.push_str(if i == last { " .\n" } else { " ;\n" });
        }
    }
    out
}

fn render_term(term: &Term, prefixes: &BTreeMap<String, String>) -> String {
    match term {
        Term::Iri(iri) => render_iri(iri, prefixes),
        Term::Literal(Literal::Integer(lexical)) => lexical.clone(),
        Term::Literal(Literal::String(s)) => {
            let mut out = String::with_capacity(s.len() + 2);
            out.push('"');
            for c in s.chars() {
                match c {
                    '\\' => out.push_str("\\\\"),
                    '"' => out.push_str("\\\""),
                    '\n' => out.push_str("\\n"),
                    '\r' => out.push_str("\\r"),
                    '\t' => out.push_str("\\t"),
                    _ => out.push(c),
                }
            }
            out.push('"');
            out
        }
    }
}

fn render_iri(iri: &Iri, prefixes: &BTreeMap<String, String>) -> String {
    // Longest matching namespace wins; label order breaks ties between
    // labels bound to the same namespace.
    let mut best: Option<(&str, &str)> = None;
    for (label, ns) in prefixes {
        if let Some(local) = iri.as_str().strip_prefix(ns.as_str()) {
            if is_safe_local(local) && best.is_none_or(|(_, b)| ns.len() > b.len()) {
                best = Some((label, ns));
            }
        }
    }
    match best {
        Some((label, ns)) => format!("{label}:{}", &iri.as_str()[ns.len()..]),
        None => format!("<{}>", iri.as_str()),
    }
}

/// Conservative PNAME local part: empty, or an identifier-like token. IRIs
/// whose local part carries `/`, `=`, `,` or similar (annotation IRIs, NIF
/// `#char=b,e` offsets) fall back to angle brackets.
fn is_safe_local(local: &str) -> bool {
    let mut chars = local.chars();
    match chars.next() {
        None => true,
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {
            chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
        }
        Some(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rdf::Triple;

    fn iri(s: &str) -> Iri {
        Iri::new(s).unwrap()
    }

    #[test]
    fn single_type_triple_renders_on_one_line() {
        let mut g = Graph::with_default_prefixes();
        g.insert(Triple::new(
            iri("http://eventontology.org/#Event"),
            vocab::iri(vocab::RDF_TYPE),
            vocab::iri(vocab::OWL_CLASS),
        ));
        let text = g.to_turtle();
        assert!(text.contains("@prefix cevo: <http://eventontology.org/#> ."));
        assert!(text.contains("cevo:Event a owl:Class .\n"));
    }

    #[test]
    fn empty_graph_is_headers_only() {
        let g = Graph::with_default_prefixes();
        let text = g.to_turtle();
        assert_eq!(text.lines().count(), g.prefixes().len());
        assert!(text.lines().all(|l| l.starts_with("@prefix ")));
    }

    #[test]
    fn two_types_share_one_statement() {
        let mut g = Graph::with_default_prefixes();
        let s = iri("http://eventontology.org/#cook");
        g.insert(Triple::new(
            s.clone(),
            vocab::iri(vocab::RDF_TYPE),
            iri("http://eventontology.org/#Build"),
        ));
        g.insert(Triple::new(
            s,
            vocab::iri(vocab::RDF_TYPE),
            iri("http://eventontology.org/#Cooking"),
        ));
        let text = g.to_turtle();
        assert!(text.contains("cevo:cook a cevo:Build , cevo:Cooking .\n"));
    }

    #[test]
    fn offset_iris_fall_back_to_angle_brackets() {
        let mut g = Graph::with_default_prefixes();
        g.insert(Triple::new(
            iri("http://example.org/tweet1#char=26,33"),
            vocab::iri(vocab::NIF_ANCHOR_OF),
            Literal::string("announce"),
        ));
        let text = g.to_turtle();
        assert!(text.contains("<http://example.org/tweet1#char=26,33> nif:anchorOf \"announce\" .\n"));
    }

    #[test]
    fn string_escapes() {
        let mut g = Graph::new();
        g.insert(Triple::new(
            iri("http://x.test/s"),
            iri("http://x.test/p"),
            Literal::string("a \"b\" \\ c\nd"),
        ));
        let text = g.to_turtle();
        assert!(text.contains(r#""a \"b\" \\ c\nd""#));
    }

    #[test]
    fn writing_is_pure() {
        let mut a = Graph::with_default_prefixes();
        let mut b = Graph::with_default_prefixes();
        let t1 = Triple::new(
            iri("http://x.test/s1"),
            iri("http://x.test/p"),
            Literal::integer(1),
        );
        let t2 = Triple::new(
            iri("http://x.test/s2"),
            iri("http://x.test/p"),
            Literal::integer(2),
        );
        a.insert(t1.clone());
        a.insert(t2.clone());
        b.insert(t2);
        b.insert(t1);
        assert_eq!(a.to_turtle(), b.to_turtle());
    }
}
