//! In-memory model of the event-class hierarchy and verb lexicon.
//!
//! The hierarchy is a rooted DAG: classes may have several parents and verbs
//! may belong to several classes. The distinguished root `Event` dominates
//! everything. A [`LexiconBuilder`] holds a possibly-invalid candidate and
//! can be validated; a [`Lexicon`] is immutable, guaranteed valid, and
//! precomputes child edges and depths (longest path from the root) so query
//! operations are cheap and deterministic.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::vocab;

/// Local name of the root class.
pub const ROOT_NAME: &str = "Event";
/// Label the root must carry.
pub const ROOT_LABEL: &str = "generic event";
/// Comment the root must carry.
pub const ROOT_COMMENT: &str = "something that happens";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OntologyError {
    #[error("invalid class id {0:?}: expected [A-Za-z_][A-Za-z0-9_]*")]
    InvalidClassId(String),
    #[error("unknown class {0:?}")]
    UnknownClass(String),
    #[error("unknown lemma {0:?}")]
    UnknownLemma(String),
    #[error("invalid lexicon:\n{0}")]
    Invalid(ValidationReport),
}

/// Identifier of an event class: `[A-Za-z_][A-Za-z0-9_]*`, case-sensitive.
/// Resolves to `<base>#<local_name>` under a lexicon's base IRI.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassId(String);

impl ClassId {
    pub fn new(name: impl Into<String>) -> Result<Self, OntologyError> {
        let name = name.into();
        let mut chars = name.chars();
        let valid = match chars.next() {
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
            }
            _ => false,
        };
        if valid {
            Ok(ClassId(name))
        } else {
            Err(OntologyError::InvalidClassId(name))
        }
    }

    pub fn root() -> Self {
        ClassId(ROOT_NAME.to_string())
    }

    pub fn is_root(&self) -> bool {
        self.0 == ROOT_NAME
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl FromStr for ClassId {
    type Err = OntologyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClassId::new(s)
    }
}

/// A node in the event hierarchy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EventClass {
    pub id: ClassId,
    pub label: String,
    pub comment: Option<String>,
    pub parents: BTreeSet<ClassId>,
    /// Alternation names shared by the class's verbs. Opaque strings.
    pub meaning_properties: Vec<String>,
}

impl EventClass {
    pub fn new(id: ClassId, label: impl Into<String>) -> Self {
        EventClass {
            id,
            label: label.into(),
            comment: None,
            parents: BTreeSet::new(),
            meaning_properties: Vec::new(),
        }
    }

    /// The canonical root class.
    pub fn root() -> Self {
        EventClass {
            id: ClassId::root(),
            label: ROOT_LABEL.to_string(),
            comment: Some(ROOT_COMMENT.to_string()),
            parents: BTreeSet::new(),
            meaning_properties: Vec::new(),
        }
    }

    pub fn with_parent(mut self, parent: ClassId) -> Self {
        self.parents.insert(parent);
        self
    }

    pub fn with_comment(mut self, comment: impl Into<String>) -> Self {
        self.comment = Some(comment.into());
        self
    }

    pub fn with_meaning_properties<I, S>(mut self, props: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.meaning_properties = props.into_iter().map(Into::into).collect();
        self
    }
}

/// A lexicon verb: base-form lemma plus its class memberships.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerbEntry {
    pub lemma: String,
    pub classes: BTreeSet<ClassId>,
}

impl VerbEntry {
    pub fn new<I>(lemma: impl Into<String>, classes: I) -> Self
    where
        I: IntoIterator<Item = ClassId>,
    {
        VerbEntry {
            lemma: lemma.into(),
            classes: classes.into_iter().collect(),
        }
    }
}

/// One violated invariant, naming the offending id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    InvalidBaseIri { found: String },
    MissingRoot,
    RootHasParents { parents: Vec<ClassId> },
    RootLabel { found: String },
    RootComment { found: Option<String> },
    DuplicateClass { id: ClassId },
    NoParents { class: ClassId },
    DanglingParent { class: ClassId, parent: ClassId },
    ParentCycle { cycle: Vec<ClassId> },
    UnreachableClass { class: ClassId },
    InvalidLemma { lemma: String, reason: String },
    DuplicateVerb { lemma: String },
    EmptyVerbClasses { lemma: String },
    DanglingVerbClass { lemma: String, class: ClassId },
}

impl Violation {
    /// The id of the entity the violation is about.
    pub fn offender(&self) -> &str {
        match self {
            Violation::InvalidBaseIri { found } => found,
            Violation::MissingRoot => ROOT_NAME,
            Violation::RootHasParents { .. }
            | Violation::RootLabel { .. }
            | Violation::RootComment { .. } => ROOT_NAME,
            Violation::DuplicateClass { id } => id.as_str(),
            Violation::NoParents { class }
            | Violation::DanglingParent { class, .. }
            | Violation::UnreachableClass { class } => class.as_str(),
            Violation::ParentCycle { cycle } => cycle[0].as_str(),
            Violation::InvalidLemma { lemma, .. }
            | Violation::DuplicateVerb { lemma }
            | Violation::EmptyVerbClasses { lemma }
            | Violation::DanglingVerbClass { lemma, .. } => lemma,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::InvalidBaseIri { found } => {
                write!(f, "base IRI {found:?} is not an absolute IRI")
            }
            Violation::MissingRoot => {
                write!(f, "missing root class '{ROOT_NAME}'")
            }
            Violation::RootHasParents { parents } => {
                write!(f, "root class '{ROOT_NAME}' must not have parents, found ")?;
                write_ids(f, parents)
            }
            Violation::RootLabel { found } => write!(
                f,
                "root class '{ROOT_NAME}' must be labelled {ROOT_LABEL:?}, found {found:?}"
            ),
            Violation::RootComment { found } => match found {
                Some(found) => write!(
                    f,
                    "root class '{ROOT_NAME}' must carry comment {ROOT_COMMENT:?}, found {found:?}"
                ),
                None => write!(
                    f,
                    "root class '{ROOT_NAME}' must carry comment {ROOT_COMMENT:?}, found none"
                ),
            },
            Violation::DuplicateClass { id } => write!(f, "duplicate class id '{id}'"),
            Violation::NoParents { class } => {
                write!(f, "class '{class}' has no parents (only '{ROOT_NAME}' may)")
            }
            Violation::DanglingParent { class, parent } => {
                write!(f, "class '{class}' references undeclared parent '{parent}'")
            }
            Violation::ParentCycle { cycle } => {
                write!(f, "parent cycle: ")?;
                for id in cycle {
                    write!(f, "{id} -> ")?;
                }
                write!(f, "{}", cycle[0])
            }
            Violation::UnreachableClass { class } => {
                write!(f, "class '{class}' is not reachable from root '{ROOT_NAME}'")
            }
            Violation::InvalidLemma { lemma, reason } => {
                write!(f, "invalid lemma {lemma:?}: {reason}")
            }
            Violation::DuplicateVerb { lemma } => write!(f, "duplicate verb lemma '{lemma}'"),
            Violation::EmptyVerbClasses { lemma } => {
                write!(f, "verb '{lemma}' has an empty class set")
            }
            Violation::DanglingVerbClass { lemma, class } => {
                write!(f, "verb '{lemma}' references undeclared class '{class}'")
            }
        }
    }
}

fn write_ids(f: &mut fmt::Formatter<'_>, ids: &[ClassId]) -> fmt::Result {
    for (i, id) in ids.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{id}")?;
    }
    Ok(())
}

/// Every violated invariant of a candidate lexicon. Empty means valid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn len(&self) -> usize {
        self.violations.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Violation> {
        self.violations.iter()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// A candidate lexicon. May hold anything — duplicates, cycles, dangling
/// references — which is what [`LexiconBuilder::validate`] reports on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LexiconBuilder {
    pub base_iri: String,
    pub classes: Vec<EventClass>,
    pub verbs: Vec<VerbEntry>,
}

impl Default for LexiconBuilder {
    fn default() -> Self {
        LexiconBuilder {
            base_iri: vocab::DEFAULT_BASE_IRI.to_string(),
            classes: Vec::new(),
            verbs: Vec::new(),
        }
    }
}

impl LexiconBuilder {
    pub fn new() -> Self {
        LexiconBuilder::default()
    }

    pub fn base_iri(mut self, iri: impl Into<String>) -> Self {
        self.base_iri = iri.into();
        self
    }

    pub fn class(mut self, class: EventClass) -> Self {
        self.classes.push(class);
        self
    }

    pub fn verb(mut self, verb: VerbEntry) -> Self {
        self.verbs.push(verb);
        self
    }

    /// Insert the canonical root class unless one is already declared.
    pub fn ensure_root(mut self) -> Self {
        if !self.classes.iter().any(|c| c.id.is_root()) {
            self.classes.insert(0, EventClass::root());
        }
        self
    }

    /// Check every invariant and report all violations found.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();

        // Class and verb IRIs all hang off the base IRI.
        if crate::rdf::Iri::new(&self.base_iri).is_err() {
            report.push(Violation::InvalidBaseIri {
                found: self.base_iri.clone(),
            });
        }

        // Class index (first declaration wins) and duplicate detection.
        let mut index: BTreeMap<&ClassId, &EventClass> = BTreeMap::new();
        for class in &self.classes {
            if index.contains_key(&class.id) {
                report.push(Violation::DuplicateClass {
                    id: class.id.clone(),
                });
            } else {
                index.insert(&class.id, class);
            }
        }

        // Root shape.
        let root_id = ClassId::root();
        match index.get(&root_id) {
            None => report.push(Violation::MissingRoot),
            Some(root) => {
                if !root.parents.is_empty() {
                    report.push(Violation::RootHasParents {
                        parents: root.parents.iter().cloned().collect(),
                    });
                }
                if root.label != ROOT_LABEL {
                    report.push(Violation::RootLabel {
                        found: root.label.clone(),
                    });
                }
                if root.comment.as_deref() != Some(ROOT_COMMENT) {
                    report.push(Violation::RootComment {
                        found: root.comment.clone(),
                    });
                }
            }
        }

        // Parent integrity.
        for class in index.values() {
            if !class.id.is_root() && class.parents.is_empty() {
                report.push(Violation::NoParents {
                    class: class.id.clone(),
                });
            }
            for parent in &class.parents {
                if !index.contains_key(parent) {
                    report.push(Violation::DanglingParent {
                        class: class.id.clone(),
                        parent: parent.clone(),
                    });
                }
            }
        }

        // Cycles over the parent digraph, one violation per back edge.
        find_cycles(&index, &mut report);

        // Reachability from the root by child edges. Skipped when the root
        // is missing — everything would be noise on top of MissingRoot.
        if index.contains_key(&root_id) {
            let mut children: BTreeMap<&ClassId, Vec<&ClassId>> = BTreeMap::new();
            for class in index.values() {
                for parent in &class.parents {
                    if index.contains_key(parent) {
                        children.entry(parent).or_default().push(&class.id);
                    }
                }
            }
            let mut reachable: BTreeSet<&ClassId> = BTreeSet::new();
            let mut queue = VecDeque::from([&root_id]);
            reachable.insert(&root_id);
            while let Some(id) = queue.pop_front() {
                for &child in children.get(id).into_iter().flatten() {
                    if reachable.insert(child) {
                        queue.push_back(child);
                    }
                }
            }
            for id in index.keys() {
                if !reachable.contains(id) {
                    report.push(Violation::UnreachableClass { class: (*id).clone() });
                }
            }
        }

        // Verbs.
        let mut seen: BTreeSet<&str> = BTreeSet::new();
        for verb in &self.verbs {
            if let Some(reason) = lemma_problem(&verb.lemma) {
                report.push(Violation::InvalidLemma {
                    lemma: verb.lemma.clone(),
                    reason: reason.to_string(),
                });
            }
            if !seen.insert(&verb.lemma) {
                report.push(Violation::DuplicateVerb {
                    lemma: verb.lemma.clone(),
                });
            }
            if verb.classes.is_empty() {
                report.push(Violation::EmptyVerbClasses {
                    lemma: verb.lemma.clone(),
                });
            }
            for class in &verb.classes {
                if !index.contains_key(class) {
                    report.push(Violation::DanglingVerbClass {
                        lemma: verb.lemma.clone(),
                        class: class.clone(),
                    });
                }
            }
        }

        report
    }

    /// Validate and freeze into an immutable [`Lexicon`].
    pub fn build(self) -> Result<Lexicon, OntologyError> {
        let report = self.validate();
        if !report.is_empty() {
            return Err(OntologyError::Invalid(report));
        }
        let classes: BTreeMap<ClassId, EventClass> = self
            .classes
            .into_iter()
            .map(|c| (c.id.clone(), c))
            .collect();
        let verbs: BTreeMap<String, VerbEntry> = self
            .verbs
            .into_iter()
            .map(|v| (v.lemma.clone(), v))
            .collect();

        let mut children: BTreeMap<ClassId, BTreeSet<ClassId>> = BTreeMap::new();
        for class in classes.values() {
            for parent in &class.parents {
                children
                    .entry(parent.clone())
                    .or_default()
                    .insert(class.id.clone());
            }
        }

        let depths = longest_path_depths(&classes);

        Ok(Lexicon {
            base_iri: self.base_iri,
            classes,
            verbs,
            children,
            depths,
        })
    }
}

fn lemma_problem(lemma: &str) -> Option<&'static str> {
    if lemma.is_empty() {
        return Some("empty");
    }
    if lemma.chars().any(char::is_whitespace) {
        return Some("contains whitespace");
    }
    if lemma.chars().any(char::is_uppercase) {
        return Some("not lowercase");
    }
    None
}

/// Iterative DFS over `class -> parent` edges restricted to declared
/// classes. Emits one violation per back edge, carrying the cycle path.
fn find_cycles(index: &BTreeMap<&ClassId, &EventClass>, report: &mut ValidationReport) {
    #[derive(Clone, Copy, PartialEq)]
    enum Color {
        White,
        Gray,
        Black,
    }
    let mut color: BTreeMap<&ClassId, Color> =
        index.keys().map(|id| (*id, Color::White)).collect();

    for &start in index.keys() {
        if color[start] != Color::White {
            continue;
        }
        // Stack of (node, parent edges not yet followed).
        let mut stack: Vec<(&ClassId, Vec<&ClassId>)> = Vec::new();
        color.insert(start, Color::Gray);
        stack.push((start, declared_parents(index, start)));
        while let Some(top) = stack.last_mut() {
            let node = top.0;
            match top.1.pop() {
                None => {
                    color.insert(node, Color::Black);
                    stack.pop();
                }
                Some(parent) => match color[parent] {
                    Color::White => {
                        color.insert(parent, Color::Gray);
                        let next = declared_parents(index, parent);
                        stack.push((parent, next));
                    }
                    Color::Gray => {
                        // Back edge: the cycle runs from `parent` down the
                        // stack to the current node.
                        let from = stack
                            .iter()
                            .position(|(n, _)| *n == parent)
                            .expect("gray node is on the stack");
                        let cycle: Vec<ClassId> =
                            stack[from..].iter().map(|(n, _)| (*n).clone()).collect();
                        report.push(Violation::ParentCycle { cycle });
                    }
                    Color::Black => {}
                },
            }
        }
    }
}

fn declared_parents<'a>(
    index: &BTreeMap<&'a ClassId, &'a EventClass>,
    id: &ClassId,
) -> Vec<&'a ClassId> {
    index
        .get(id)
        .map(|c| c.parents.iter().filter_map(|p| index.get_key_value(p).map(|(k, _)| *k)).collect())
        .unwrap_or_default()
}

/// Longest path from the root, computed in topological order. Only called
/// on validated data (acyclic, rooted).
fn longest_path_depths(classes: &BTreeMap<ClassId, EventClass>) -> BTreeMap<ClassId, usize> {
    let mut children: BTreeMap<&ClassId, Vec<&ClassId>> = BTreeMap::new();
    let mut remaining: BTreeMap<&ClassId, usize> = BTreeMap::new();
    for class in classes.values() {
        remaining.insert(&class.id, class.parents.len());
        for parent in &class.parents {
            children.entry(parent).or_default().push(&class.id);
        }
    }
    let mut depths: BTreeMap<ClassId, usize> = BTreeMap::new();
    let mut queue: VecDeque<&ClassId> = remaining
        .iter()
        .filter(|(_, n)| **n == 0)
        .map(|(id, _)| *id)
        .collect();
    for id in &queue {
        depths.insert((*id).clone(), 0);
    }
    while let Some(id) = queue.pop_front() {
        let depth = depths[id];
        for &child in children.get(id).into_iter().flatten() {
            let d = depths.entry(child.clone()).or_insert(0);
            *d = (*d).max(depth + 1);
            let n = remaining.get_mut(child).expect("child is declared");
            *n -= 1;
            if *n == 0 {
                queue.push_back(child);
            }
        }
    }
    depths
}

/// An immutable, validated lexicon. Shareable across threads.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lexicon {
    base_iri: String,
    classes: BTreeMap<ClassId, EventClass>,
    verbs: BTreeMap<String, VerbEntry>,
    children: BTreeMap<ClassId, BTreeSet<ClassId>>,
    depths: BTreeMap<ClassId, usize>,
}

impl Lexicon {
    pub fn builder() -> LexiconBuilder {
        LexiconBuilder::new()
    }

    /// Back to candidate form, e.g. to modify and re-validate.
    pub fn to_builder(&self) -> LexiconBuilder {
        LexiconBuilder {
            base_iri: self.base_iri.clone(),
            classes: self.classes.values().cloned().collect(),
            verbs: self.verbs.values().cloned().collect(),
        }
    }

    pub fn base_iri(&self) -> &str {
        &self.base_iri
    }

    /// The namespace classes and verbs live in: `<base>#`.
    pub fn namespace(&self) -> String {
        format!("{}#", self.base_iri)
    }

    pub fn class_iri(&self, id: &ClassId) -> String {
        format!("{}#{}", self.base_iri, id)
    }

    pub fn verb_iri(&self, lemma: &str) -> String {
        format!("{}#{}", self.base_iri, lemma)
    }

    pub fn class(&self, id: &ClassId) -> Option<&EventClass> {
        self.classes.get(id)
    }

    pub fn verb(&self, lemma: &str) -> Option<&VerbEntry> {
        self.verbs.get(lemma)
    }

    pub fn contains_class(&self, id: &ClassId) -> bool {
        self.classes.contains_key(id)
    }

    pub fn classes(&self) -> impl Iterator<Item = &EventClass> {
        self.classes.values()
    }

    pub fn verbs(&self) -> impl Iterator<Item = &VerbEntry> {
        self.verbs.values()
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn verb_count(&self) -> usize {
        self.verbs.len()
    }

    /// Longest-path depth from the root (`Event` is 0). More specific
    /// classes are always deeper than every ancestor.
    pub fn depth(&self, id: &ClassId) -> Result<usize, OntologyError> {
        self.depths
            .get(id)
            .copied()
            .ok_or_else(|| OntologyError::UnknownClass(id.to_string()))
    }

    /// All classes reachable by parent edges, excluding `id` itself and
    /// including the root. Ordered deepest first, ties lexicographic.
    pub fn ancestors(&self, id: &ClassId) -> Result<Vec<ClassId>, OntologyError> {
        let class = self
            .classes
            .get(id)
            .ok_or_else(|| OntologyError::UnknownClass(id.to_string()))?;
        let mut seen: BTreeSet<ClassId> = BTreeSet::new();
        let mut queue: VecDeque<&ClassId> = class.parents.iter().collect();
        while let Some(p) = queue.pop_front() {
            if seen.insert(p.clone()) {
                queue.extend(self.classes[p].parents.iter());
            }
        }
        Ok(self.sort_topological(seen))
    }

    /// All classes reachable by child edges, excluding `id` itself.
    /// Ordered deepest first, ties lexicographic.
    pub fn descendants(&self, id: &ClassId) -> Result<Vec<ClassId>, OntologyError> {
        if !self.classes.contains_key(id) {
            return Err(OntologyError::UnknownClass(id.to_string()));
        }
        let mut seen: BTreeSet<ClassId> = BTreeSet::new();
        let mut queue: VecDeque<&ClassId> = self.children.get(id).into_iter().flatten().collect();
        while let Some(c) = queue.pop_front() {
            if seen.insert(c.clone()) {
                queue.extend(self.children.get(c).into_iter().flatten());
            }
        }
        Ok(self.sort_topological(seen))
    }

    fn sort_topological(&self, set: BTreeSet<ClassId>) -> Vec<ClassId> {
        let mut out: Vec<ClassId> = set.into_iter().collect();
        out.sort_by(|a, b| {
            self.depths[b]
                .cmp(&self.depths[a])
                .then_with(|| a.cmp(b))
        });
        out
    }

    /// Classes a verb belongs to, sorted lexicographically. With
    /// `transitive`, the union with every member class's ancestors, the
    /// root excluded.
    pub fn classes_of_verb(
        &self,
        lemma: &str,
        transitive: bool,
    ) -> Result<Vec<ClassId>, OntologyError> {
        let entry = self
            .verbs
            .get(lemma)
            .ok_or_else(|| OntologyError::UnknownLemma(lemma.to_string()))?;
        let mut result: BTreeSet<ClassId> = entry.classes.clone();
        if transitive {
            for class in &entry.classes {
                for ancestor in self.ancestors(class)? {
                    if !ancestor.is_root() {
                        result.insert(ancestor);
                    }
                }
            }
        }
        Ok(result.into_iter().collect())
    }

    /// Lemmas whose membership contains `id` (or, when flagged, any
    /// descendant of it), sorted lexicographically.
    pub fn verbs_of_class(
        &self,
        id: &ClassId,
        include_subclasses: bool,
    ) -> Result<Vec<String>, OntologyError> {
        let mut targets: BTreeSet<ClassId> = BTreeSet::new();
        targets.insert(id.clone());
        if include_subclasses {
            targets.extend(self.descendants(id)?);
        } else if !self.classes.contains_key(id) {
            return Err(OntologyError::UnknownClass(id.to_string()));
        }
        Ok(self
            .verbs
            .values()
            .filter(|v| !v.classes.is_disjoint(&targets))
            .map(|v| v.lemma.clone())
            .collect())
    }

    /// The deepest class that is an ancestor-or-self of both arguments.
    /// Ties break lexicographically; always defined because the root is a
    /// common ancestor.
    pub fn deepest_common_class(
        &self,
        a: &ClassId,
        b: &ClassId,
    ) -> Result<ClassId, OntologyError> {
        let up_a = self.ancestors_or_self(a)?;
        let up_b = self.ancestors_or_self(b)?;
        let mut best: Option<&ClassId> = None;
        for id in up_a.intersection(&up_b) {
            match best {
                Some(current) if self.depths[id] <= self.depths[current] => {}
                _ => best = Some(id),
            }
        }
        Ok(best.expect("root is always a common ancestor").clone())
    }

    fn ancestors_or_self(&self, id: &ClassId) -> Result<BTreeSet<ClassId>, OntologyError> {
        let mut set: BTreeSet<ClassId> = self.ancestors(id)?.into_iter().collect();
        set.insert(id.clone());
        Ok(set)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon_io::seed_lexicon;

    fn id(s: &str) -> ClassId {
        ClassId::new(s).unwrap()
    }

    #[test]
    fn class_id_shape() {
        assert!(ClassId::new("Event").is_ok());
        assert!(ClassId::new("_private").is_ok());
        assert!(ClassId::new("Change_of_the_state").is_ok());
        assert!(ClassId::new("").is_err());
        assert!(ClassId::new("9lives").is_err());
        assert!(ClassId::new("has space").is_err());
        assert!(ClassId::new("hy-phen").is_err());
    }

    #[test]
    fn seed_validates_clean() {
        let seed = seed_lexicon();
        assert!(seed.to_builder().validate().is_empty());
    }

    #[test]
    fn self_parent_is_one_cycle_violation() {
        let builder = LexiconBuilder::new()
            .class(EventClass::root())
            .class(
                EventClass::new(id("Communication"), "communication")
                    .with_parent(id("Communication")),
            );
        let report = builder.validate();
        let cycles: Vec<_> = report
            .iter()
            .filter(|v| matches!(v, Violation::ParentCycle { .. }))
            .collect();
        assert_eq!(cycles.len(), 1);
        // The self loop leaves Communication unreachable from the root too.
        assert!(report
            .iter()
            .any(|v| matches!(v, Violation::UnreachableClass { class } if class == &id("Communication"))));
    }

    #[test]
    fn relative_base_iri_is_reported() {
        let builder = LexiconBuilder::new()
            .base_iri("ontology/events")
            .class(EventClass::root());
        let report = builder.validate();
        assert_eq!(report.len(), 1);
        assert_eq!(report.violations()[0].offender(), "ontology/events");
    }

    #[test]
    fn dangling_verb_class_is_reported() {
        let builder = LexiconBuilder::new()
            .class(EventClass::root())
            .verb(VerbEntry::new("say", [id("Speech")]));
        let report = builder.validate();
        assert_eq!(
            report.violations(),
            &[Violation::DanglingVerbClass {
                lemma: "say".into(),
                class: id("Speech"),
            }]
        );
    }

    #[test]
    fn two_node_cycle_is_reported_once() {
        let builder = LexiconBuilder::new()
            .class(EventClass::root())
            .class(EventClass::new(id("A"), "a").with_parent(id("B")))
            .class(EventClass::new(id("B"), "b").with_parent(id("A")));
        let report = builder.validate();
        let cycles: Vec<_> = report
            .iter()
            .filter(|v| matches!(v, Violation::ParentCycle { .. }))
            .collect();
        assert_eq!(cycles.len(), 1);
    }

    #[test]
    fn say_belongs_to_communication() {
        let seed = seed_lexicon();
        assert_eq!(
            seed.classes_of_verb("say", false).unwrap(),
            vec![id("Communication")]
        );
    }

    #[test]
    fn cook_has_four_classes_and_closure_adds_nothing() {
        let seed = seed_lexicon();
        let direct = seed.classes_of_verb("cook", false).unwrap();
        assert_eq!(
            direct,
            vec![
                id("Build"),
                id("Change_of_the_state"),
                id("Cooking"),
                id("Creation_Transformation"),
            ]
        );
        // All four of cook's non-root ancestors are already direct members.
        assert_eq!(seed.classes_of_verb("cook", true).unwrap(), direct);
    }

    #[test]
    fn verbs_of_class_queries() {
        let seed = seed_lexicon();
        assert_eq!(
            seed.verbs_of_class(&id("Communication"), false).unwrap(),
            vec!["announce", "mention", "say"]
        );
        assert_eq!(
            seed.verbs_of_class(&id("Amalgamate"), false).unwrap(),
            vec!["marry"]
        );
        let all = seed.verbs_of_class(&ClassId::root(), true).unwrap();
        assert_eq!(all.len(), seed.verb_count());
    }

    #[test]
    fn ancestor_queries() {
        let seed = seed_lexicon();
        assert_eq!(
            seed.ancestors(&id("Complain")).unwrap(),
            vec![id("Communication"), ClassId::root()]
        );
        assert_eq!(seed.ancestors(&ClassId::root()).unwrap(), vec![]);
        assert_eq!(
            seed.ancestors(&id("Build")).unwrap(),
            vec![id("Creation_Transformation"), ClassId::root()]
        );
    }

    #[test]
    fn deepest_common_class_cases() {
        let seed = seed_lexicon();
        assert_eq!(
            seed.deepest_common_class(&id("Complain"), &id("Complain"))
                .unwrap(),
            id("Complain")
        );
        assert_eq!(
            seed.deepest_common_class(&id("Complain"), &id("Transfer_Message"))
                .unwrap(),
            id("Communication")
        );
        assert_eq!(
            seed.deepest_common_class(&id("Build"), &id("Amalgamate"))
                .unwrap(),
            ClassId::root()
        );
    }

    #[test]
    fn unknown_ids_are_named_in_errors() {
        let seed = seed_lexicon();
        assert_eq!(
            seed.classes_of_verb("fly", false),
            Err(OntologyError::UnknownLemma("fly".into()))
        );
        assert_eq!(
            seed.verbs_of_class(&id("Motion"), false),
            Err(OntologyError::UnknownClass("Motion".into()))
        );
    }

    #[test]
    fn lexicon_is_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Lexicon>();
        assert_send_sync::<crate::rdf::Graph>();
    }

    #[test]
    fn depth_is_longest_path() {
        // Diamond: Deep has parents Mid (depth 1) and Event, so the longest
        // path through Mid wins.
        let lexicon = LexiconBuilder::new()
            .class(EventClass::root())
            .class(EventClass::new(id("Mid"), "mid").with_parent(ClassId::root()))
            .class(
                EventClass::new(id("Deep"), "deep")
                    .with_parent(ClassId::root())
                    .with_parent(id("Mid")),
            )
            .verb(VerbEntry::new("x", [id("Deep")]))
            .build()
            .unwrap();
        assert_eq!(lexicon.depth(&ClassId::root()).unwrap(), 0);
        assert_eq!(lexicon.depth(&id("Mid")).unwrap(), 1);
        assert_eq!(lexicon.depth(&id("Deep")).unwrap(), 2);
    }
}
