//! `cevo` — the event-ontology pipeline as composable subcommands.
//!
//! Every subcommand writes to standard output by default (`--out` writes a
//! file instead), so stages chain through the shell. Exit codes are stable
//! across subcommands: 0 success, 1 data-level failure (validation
//! violations, unknown ids, malformed annotation graphs), 2 environment or
//! parse failure (missing files, syntax errors, bad usage).

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cevo_core::annotate::annotate_document;
use cevo_core::bind::{export_bindings_turtle, parse_bindings, BindError};
use cevo_core::lexicon_io::{
    export_instances_turtle, export_schema_turtle, parse_candidate, LexiconIoError, SEED_LEXICON,
};
use cevo_core::link::{export_links_turtle, link, LinkOptions};
use cevo_core::normalize::{parse_pos_sidecar, PosHint};
use cevo_core::ontology::{ClassId, Lexicon, OntologyError};
use cevo_core::rdf::Graph;

#[derive(Parser)]
#[command(
    name = "cevo",
    version,
    about = "Event-ontology toolkit: validate and export a verb-class lexicon, annotate main \
             verbs in text, bind ontology properties to event classes, and link the two"
)]
struct Cli {
    /// Lexicon file in the line-oriented lexicon format.
    #[arg(long, global = true, value_name = "PATH", conflicts_with = "seed_lexicon")]
    lexicon: Option<PathBuf>,

    /// Use the bundled seed lexicon instead of a file.
    #[arg(long, global = true)]
    seed_lexicon: bool,

    /// Write output to a file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Override the lexicon base IRI (ontology namespace and generated
    /// annotation IRIs derive from it).
    #[arg(long, global = true, value_name = "IRI")]
    base_iri: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the lexicon and report every invariant violation.
    Validate,
    /// Export the lexicon as Turtle.
    Export {
        /// What to export: the class schema, the verb individuals, or both.
        #[arg(value_enum, default_value_t = ExportKind::All)]
        which: ExportKind,
    },
    /// Annotate main verbs in a text document (NIF stand-off output).
    Annotate {
        /// UTF-8 text document to annotate.
        #[arg(long, value_name = "PATH")]
        doc: PathBuf,
        /// Absolute IRI identifying the document.
        #[arg(long, value_name = "IRI")]
        doc_iri: String,
        /// Optional POS sidecar: one "begin end TAG" line per token.
        #[arg(long, value_name = "PATH")]
        pos: Option<PathBuf>,
    },
    /// Turn a property-bindings file into web annotations.
    Bind {
        /// Bindings file: "<property-IRI> <ClassId> [annotation-IRI]" lines.
        #[arg(long, value_name = "PATH")]
        bindings: PathBuf,
    },
    /// Link annotated verbs to bound properties via shared event classes.
    Link {
        /// Turtle file of text annotations (from `annotate`).
        #[arg(long, value_name = "PATH")]
        annotations: PathBuf,
        /// Turtle file of property bindings (from `bind`).
        #[arg(long, value_name = "PATH")]
        bindings: PathBuf,
        /// Keep only the most specific link(s) per occurrence.
        #[arg(long)]
        best_only: bool,
        /// Match direct classes only (no ancestor expansion).
        #[arg(long)]
        strict: bool,
        /// Also emit a web-annotation record per link.
        #[arg(long)]
        wadm: bool,
    },
    /// Query the lexicon (one result per line).
    Query {
        #[command(subcommand)]
        query: QueryCmd,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportKind {
    Schema,
    Instances,
    All,
}

#[derive(Subcommand)]
enum QueryCmd {
    /// Event classes a verb belongs to.
    ClassesOf {
        lemma: String,
        /// Include ancestors of member classes (root excluded).
        #[arg(long)]
        transitive: bool,
    },
    /// Verbs belonging to an event class.
    VerbsOf {
        class: String,
        /// Also count membership in any descendant class.
        #[arg(long)]
        include_subclasses: bool,
    },
    /// Ancestors of a class, deepest first.
    Ancestors { class: String },
    /// Deepest common ancestor-or-self of two classes.
    Lca { a: String, b: String },
}

/// Command output plus the exit code it should carry (validate reports
/// violations as regular output with exit code 1).
struct Outcome {
    text: String,
    code: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }
}

enum Failure {
    /// Exit 1: the inputs parsed but the data is wrong.
    Data(String),
    /// Exit 2: missing files, syntax errors, bad usage.
    Env(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Data(_) => 1,
            Failure::Env(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Data(m) | Failure::Env(m) => m,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out_path = cli.out.clone();
    match run(cli) {
        Ok(outcome) => {
            if let Err(e) = write_output(out_path.as_deref(), &outcome.text) {
                eprintln!("cevo: {}", e.message());
                return ExitCode::from(e.code());
            }
            ExitCode::from(outcome.code)
        }
        Err(failure) => {
            eprintln!("cevo: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Validate => cmd_validate(&cli),
        Command::Export { which } => cmd_export(&cli, *which),
        Command::Annotate { doc, doc_iri, pos } => cmd_annotate(&cli, doc, doc_iri, pos.as_deref()),
        Command::Bind { bindings } => cmd_bind(&cli, bindings),
        Command::Link {
            annotations,
            bindings,
            best_only,
            strict,
            wadm,
        } => cmd_link(
            &cli,
            annotations,
            bindings,
            LinkOptions {
                best_only: *best_only,
                strict: *strict,
            },
            *wadm,
        ),
        Command::Query { query } => cmd_query(&cli, query),
    }
}

fn cmd_validate(cli: &Cli) -> Result<Outcome, Failure> {
    let text = lexicon_text(cli)?;
    let candidate = parse_candidate(&text).map_err(io_error_to_env)?;
    let report = candidate.validate();
    if report.is_empty() {
        Ok(Outcome::ok("OK\n".to_string()))
    } else {
        Ok(Outcome {
            text: format!("{report}\n"),
            code: 1,
        })
    }
}

fn cmd_export(cli: &Cli, which: ExportKind) -> Result<Outcome, Failure> {
    let lexicon = load_lexicon(cli)?;
    let graph = match which {
        ExportKind::Schema => export_schema_turtle(&lexicon),
        ExportKind::Instances => export_instances_turtle(&lexicon),
        ExportKind::All => {
            let mut g = export_schema_turtle(&lexicon);
            g.merge(export_instances_turtle(&lexicon));
            g
        }
    };
    Ok(Outcome::ok(graph.to_turtle()))
}

fn cmd_annotate(
    cli: &Cli,
    doc: &Path,
    doc_iri: &str,
    pos: Option<&Path>,
) -> Result<Outcome, Failure> {
    let lexicon = load_lexicon(cli)?;
    let text = read_file(doc)?;
    let hints: Option<Vec<(usize, usize, PosHint)>> = match pos {
        Some(path) => Some(
            parse_pos_sidecar(&read_file(path)?)
                .map_err(|e| Failure::Env(format!("{}: {e}", path.display())))?,
        ),
        None => None,
    };
    let graph = annotate_document(&lexicon, doc_iri, &text, hints.as_deref())
        .map_err(|e| Failure::Env(e.to_string()))?;
    Ok(Outcome::ok(graph.to_turtle()))
}

fn cmd_bind(cli: &Cli, bindings: &Path) -> Result<Outcome, Failure> {
    let lexicon = load_lexicon(cli)?;
    let text = read_file(bindings)?;
    let parsed = parse_bindings(&text, &lexicon, lexicon.base_iri()).map_err(|e| {
        match e {
            BindError::UnknownClass { .. } => Failure::Data(e.to_string()),
            BindError::Parse { .. } => Failure::Env(format!("{}: {e}", bindings.display())),
        }
    })?;
    Ok(Outcome::ok(export_bindings_turtle(&lexicon, &parsed).to_turtle()))
}

fn cmd_link(
    cli: &Cli,
    annotations: &Path,
    bindings: &Path,
    options: LinkOptions,
    wadm: bool,
) -> Result<Outcome, Failure> {
    let lexicon = load_lexicon(cli)?;
    let annotations = read_turtle(annotations)?;
    let bindings = read_turtle(bindings)?;
    let links = link(&lexicon, &annotations, &bindings, options)
        .map_err(|e| Failure::Data(e.to_string()))?;
    let graph = export_links_turtle(&links, wadm, lexicon.base_iri());
    Ok(Outcome::ok(graph.to_turtle()))
}

fn cmd_query(cli: &Cli, query: &QueryCmd) -> Result<Outcome, Failure> {
    let lexicon = load_lexicon(cli)?;
    let lines: Vec<String> = match query {
        QueryCmd::ClassesOf { lemma, transitive } => lexicon
            .classes_of_verb(lemma, *transitive)
            .map_err(data_error)?
            .into_iter()
            .map(|c| c.to_string())
            .collect(),
        QueryCmd::VerbsOf {
            class,
            include_subclasses,
        } => lexicon
            .verbs_of_class(&class_id(class)?, *include_subclasses)
            .map_err(data_error)?,
        QueryCmd::Ancestors { class } => lexicon
            .ancestors(&class_id(class)?)
            .map_err(data_error)?
            .into_iter()
            .map(|c| c.to_string())
            .collect(),
        QueryCmd::Lca { a, b } => {
            vec![lexicon
                .deepest_common_class(&class_id(a)?, &class_id(b)?)
                .map_err(data_error)?
                .to_string()]
        }
    };
    let mut text = lines.join("\n");
    if !text.is_empty() {
        text.push('\n');
    }
    Ok(Outcome::ok(text))
}

fn class_id(s: &str) -> Result<ClassId, Failure> {
    ClassId::new(s).map_err(data_error)
}

fn data_error(e: OntologyError) -> Failure {
    Failure::Data(e.to_string())
}

fn io_error_to_env(e: LexiconIoError) -> Failure {
    Failure::Env(format!("lexicon: {e}"))
}

fn lexicon_text(cli: &Cli) -> Result<String, Failure> {
    if cli.seed_lexicon {
        return Ok(SEED_LEXICON.to_string());
    }
    match &cli.lexicon {
        Some(path) => read_file(path),
        None => Err(Failure::Env(
            "no lexicon given; pass --lexicon <PATH> or --seed-lexicon".to_string(),
        )),
    }
}

/// Load and validate the lexicon, applying `--base-iri` when given. Both
/// parse errors and validation failures abort with exit 2 here: the other
/// subcommands need a usable lexicon before their own data is judged.
fn load_lexicon(cli: &Cli) -> Result<Lexicon, Failure> {
    let text = lexicon_text(cli)?;
    let mut candidate = parse_candidate(&text).map_err(io_error_to_env)?;
    if let Some(base) = &cli.base_iri {
        candidate.base_iri = base.clone();
    }
    candidate
        .build()
        .map_err(|e| Failure::Env(format!("lexicon: {e}")))
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Env(format!("{}: {e}", path.display())))
}

fn read_turtle(path: &Path) -> Result<Graph, Failure> {
    let text = read_file(path)?;
    Graph::from_turtle(&text).map_err(|e| Failure::Env(format!("{}: {e}", path.display())))
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::Env(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
