//! Tokenization, rule-based lemmatization, and main-verb detection.
//!
//! Detection is lexicon-guided: every candidate base form a token's surface
//! could reduce to is looked up in the lexicon, and the first hit wins. That
//! trades a POS tagger dependency for determinism, at the cost of flagging
//! noun/verb homographs ("the cook") — callers needing precision supply POS
//! hints through the sidecar format.

use thiserror::Error;

use crate::ontology::{ClassId, Lexicon};

/// Optional part-of-speech hint for a token.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PosHint {
    Verb,
    Other,
}

/// A token with code-point offsets into its document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub surface: String,
    /// Inclusive start, in Unicode code points.
    pub begin: usize,
    /// Exclusive end, in Unicode code points.
    pub end: usize,
    pub pos_hint: Option<PosHint>,
}

/// A detected main verb: anchor text, normalized lemma, offsets, and the
/// lemma's direct event classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerbOccurrence {
    pub anchor: String,
    pub lemma: String,
    pub begin: usize,
    pub end: usize,
    pub classes: Vec<ClassId>,
}

/// Maximal runs of letters, digits, and apostrophes; everything else
/// separates. Offsets count Unicode code points, not bytes.
pub fn tokenize(document: &str) -> Vec<Token> {
    let mut tokens = Vec::new();
    let mut current = String::new();
    let mut start = 0;
    for (i, c) in document.chars().enumerate() {
        if is_word_char(c) {
            if current.is_empty() {
                start = i;
            }
            current.push(c);
        } else if !current.is_empty() {
            tokens.push(Token {
                surface: std::mem::take(&mut current),
                begin: start,
                end: i,
                pos_hint: None,
            });
        }
    }
    if !current.is_empty() {
        let end = document.chars().count();
        tokens.push(Token {
            surface: current,
            begin: start,
            end,
            pos_hint: None,
        });
    }
    tokens
}

fn is_word_char(c: char) -> bool {
    c.is_alphanumeric() || c == '\'' || c == '\u{2019}'
}

/// Candidate base forms for a surface, most specific first:
/// the lowercased surface itself, then English inflection reversals
/// (`-ies`→`y`, `-es`→∅/`-e`, `-s`→∅, `-ied`→`y`, `-ed`→∅/`-e`,
/// doubled-consonant undoubling for `-ed`/`-ing`, `-ing`→∅/`-e`).
/// Duplicates removed, order preserved. Purely rule-based: irregular
/// forms ("said", "went") only yield themselves.
pub fn lemma_candidates(surface: &str) -> Vec<String> {
    let lower = surface.to_lowercase();
    let mut out: Vec<String> = Vec::new();
    let mut push = |s: String| {
        if !s.is_empty() && !out.contains(&s) {
            out.push(s);
        }
    };
    push(lower.clone());
    if let Some(stem) = lower.strip_suffix("ies") {
        push(format!("{stem}y"));
    }
    if let Some(stem) = lower.strip_suffix("es") {
        push(stem.to_string());
        push(format!("{stem}e"));
    }
    if let Some(stem) = lower.strip_suffix('s') {
        push(stem.to_string());
    }
    if let Some(stem) = lower.strip_suffix("ied") {
        push(format!("{stem}y"));
    }
    if let Some(stem) = lower.strip_suffix("ed") {
        push(stem.to_string());
        push(format!("{stem}e"));
        push_undoubled(stem, &mut push);
    }
    if let Some(stem) = lower.strip_suffix("ing") {
        push_undoubled(stem, &mut push);
        push(stem.to_string());
        push(format!("{stem}e"));
    }
    out
}

/// "stopp" -> "stop", "runn" -> "run": drop one of two identical trailing
/// consonants.
fn push_undoubled(stem: &str, push: &mut impl FnMut(String)) {
    let chars: Vec<char> = stem.chars().collect();
    if let [.., a, b] = chars.as_slice() {
        if a == b && b.is_ascii_alphabetic() && !matches!(b, 'a' | 'e' | 'i' | 'o' | 'u') {
            push(chars[..chars.len() - 1].iter().collect());
        }
    }
}

/// Resolve tokens against the lexicon. Tokens hinted as non-verbs are
/// skipped; for the rest, the first lemma candidate present in the lexicon
/// wins. Tokens with no hit produce nothing — detection is best-effort.
pub fn detect_verbs(lexicon: &Lexicon, tokens: &[Token]) -> Vec<VerbOccurrence> {
    let mut out = Vec::new();
    for token in tokens {
        if matches!(token.pos_hint, Some(PosHint::Other)) {
            continue;
        }
        for candidate in lemma_candidates(&token.surface) {
            if lexicon.verb(&candidate).is_some() {
                let classes = lexicon
                    .classes_of_verb(&candidate, false)
                    .expect("candidate was just found in the lexicon");
                out.push(VerbOccurrence {
                    anchor: token.surface.clone(),
                    lemma: candidate,
                    begin: token.begin,
                    end: token.end,
                    classes,
                });
                break;
            }
        }
    }
    out
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosSidecarError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Parse the sidecar POS format: one `begin end TAG` line per token, where
/// TAG is `VERB` or `OTHER`. `#` starts a comment.
pub fn parse_pos_sidecar(text: &str) -> Result<Vec<(usize, usize, PosHint)>, PosSidecarError> {
    let mut hints = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        let [begin, end, tag] = parts.as_slice() else {
            return Err(PosSidecarError::Parse {
                line: line_no,
                message: format!("expected 'begin end TAG', found {line:?}"),
            });
        };
        let begin: usize = begin.parse().map_err(|_| PosSidecarError::Parse {
            line: line_no,
            message: format!("invalid begin offset {begin:?}"),
        })?;
        let end: usize = end.parse().map_err(|_| PosSidecarError::Parse {
            line: line_no,
            message: format!("invalid end offset {end:?}"),
        })?;
        let hint = match *tag {
            "VERB" => PosHint::Verb,
            "OTHER" => PosHint::Other,
            other => {
                return Err(PosSidecarError::Parse {
                    line: line_no,
                    message: format!("unknown tag {other:?} (expected VERB or OTHER)"),
                })
            }
        };
        hints.push((begin, end, hint));
    }
    Ok(hints)
}

/// Merge sidecar hints onto tokens by exact offset match. Hints matching no
/// token are ignored.
pub fn apply_pos_hints(tokens: &mut [Token], hints: &[(usize, usize, PosHint)]) {
    for &(begin, end, hint) in hints {
        for token in tokens.iter_mut() {
            if token.begin == begin && token.end == end {
                token.pos_hint = Some(hint);
            }
        }
    }
}
