//! Excerpt-level co-occurrence counting.
//!
//! Two words co-occur when they appear in the same excerpt, however far apart.
//! Counts are raw excerpt counts.

use std::collections::HashSet;
use std::fs;
use std::path::Path;
use std::sync::Arc;

use thiserror::Error;

use super::{Lexicon, LexiconError, Sense};
use crate::tensor::{Signature, Space, Tensor, TensorError};
use crate::types::{DSType, TypeSpaceMap};

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("corpus has no excerpts")]
    EmptyCorpus,
    #[error(transparent)]
    Space(#[from] TensorError),
    #[error("sentence space must have exactly two basis vectors (true, false), found {0}")]
    SentenceSpace(usize),
    #[error("cannot build type {ty} for {word:?} from co-occurrence counts")]
    UnsupportedType { word: String, ty: DSType },
    #[error("{path}: {source}")]
    Io {
        path: std::path::PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Lexicon(#[from] LexiconError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusExcerpt {
    pub id: String,
    pub tokens: Vec<String>,
}

impl CorpusExcerpt {
    pub fn new<S: Into<String>>(
        id: impl Into<String>,
        tokens: impl IntoIterator<Item = S>,
    ) -> CorpusExcerpt {
        CorpusExcerpt {
            id: id.into(),
            tokens: tokens.into_iter().map(Into::into).collect(),
        }
    }

    fn vocabulary(&self) -> HashSet<&str> {
        self.tokens.iter().map(String::as_str).collect()
    }
}

/// Lowercases, strips punctuation and splits on whitespace.
///
/// Characters other than letters, digits, `#`, `'` and `-` are treated as
/// separators, so `"mary, who"` and `"mary who"` tokenize the same.
pub fn tokenize(text: &str) -> Vec<String> {
    text.split(|c: char| !(c.is_alphanumeric() || c == '#' || c == '\'' || c == '-'))
        .map(|t| t.trim_matches(|c| c == '\'' || c == '-'))
        .filter(|t| !t.is_empty())
        .map(str::to_lowercase)
        .collect()
}

/// Splits text into excerpts on blank lines. Empty excerpts are skipped.
pub fn split_excerpts(text: &str, id_prefix: &str) -> Vec<CorpusExcerpt> {
    let mut out = Vec::new();
    let mut current = String::new();
    let flush = |buf: &mut String, out: &mut Vec<CorpusExcerpt>| {
        let tokens = tokenize(buf);
        if !tokens.is_empty() {
            let id = format!("{id_prefix}#{}", out.len());
            out.push(CorpusExcerpt { id, tokens });
        }
        buf.clear();
    };
    for line in text.lines() {
        if line.trim().is_empty() {
            flush(&mut current, &mut out);
        } else {
            current.push_str(line);
            current.push('\n');
        }
    }
    flush(&mut current, &mut out);
    out
}

/// Reads every regular file in `dir` (sorted by name) as a corpus file.
pub fn read_corpus_dir(dir: impl AsRef<Path>) -> Result<Vec<CorpusExcerpt>, CorpusError> {
    let dir = dir.as_ref();
    let io = |source| CorpusError::Io {
        path: dir.to_path_buf(),
        source,
    };
    let mut paths: Vec<_> = fs::read_dir(dir)
        .map_err(io)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    paths.sort();
    let mut excerpts = Vec::new();
    for p in paths {
        let text = fs::read_to_string(&p).map_err(|source| CorpusError::Io {
            path: p.clone(),
            source,
        })?;
        let stem = p
            .file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .unwrap_or_default();
        excerpts.extend(split_excerpts(&text, &stem));
    }
    Ok(excerpts)
}

/// `targets × contexts` matrix of excerpt co-occurrence counts.
///
/// The row space is a fresh space named `targets`; the column space is
/// `contexts`.
pub fn build_cooccurrence(
    excerpts: &[CorpusExcerpt],
    targets: &[&str],
    contexts: &Arc<Space>,
) -> Result<Tensor, CorpusError> {
    if excerpts.is_empty() {
        return Err(CorpusError::EmptyCorpus);
    }
    let rows = Space::new("targets", targets.iter().copied())?;
    let n_ctx = contexts.dim();
    let mut counts = vec![0i64; targets.len() * n_ctx];
    for ex in excerpts {
        let vocab = ex.vocabulary();
        for (t, target) in targets.iter().enumerate() {
            if !vocab.contains(target) {
                continue;
            }
            for (c, ctx) in contexts.labels().iter().enumerate() {
                if vocab.contains(ctx.as_str()) {
                    counts[t * n_ctx + c] += 1;
                }
            }
        }
    }
    Ok(Tensor::from_ints(
        Signature::new(vec![rows, contexts.clone()]),
        counts,
    )?)
}

/// Intransitive verb matrix in `W ⊗ S`.
///
/// `⟨p, true⟩` counts excerpts holding both the verb and property `p`;
/// `⟨p, false⟩` counts excerpts holding the verb without `p`.
pub fn build_verb_matrix(
    excerpts: &[CorpusExcerpt],
    verb: &str,
    map: &TypeSpaceMap,
) -> Result<Tensor, CorpusError> {
    if excerpts.is_empty() {
        return Err(CorpusError::EmptyCorpus);
    }
    if map.sentence.dim() != 2 {
        return Err(CorpusError::SentenceSpace(map.sentence.dim()));
    }
    let props = map.entity.labels();
    let mut counts = vec![0i64; props.len() * 2];
    for ex in excerpts {
        let vocab = ex.vocabulary();
        if !vocab.contains(verb) {
            continue;
        }
        for (p, prop) in props.iter().enumerate() {
            let slot = if vocab.contains(prop.as_str()) { 0 } else { 1 };
            counts[p * 2 + slot] += 1;
        }
    }
    Ok(Tensor::from_ints(
        Signature::new(vec![map.entity.clone(), map.sentence.clone()]),
        counts,
    )?)
}

/// A word to put in a corpus-built lexicon, with its type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexiconTarget {
    pub word: String,
    pub ds_type: DSType,
}

impl LexiconTarget {
    /// Parses `word` or `word type` (e.g. `vomit et`). The type defaults to `e`.
    pub fn parse_line(line: &str) -> Option<Result<LexiconTarget, String>> {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            return None;
        }
        let mut parts = line.split_whitespace();
        let word = parts.next()?.to_lowercase();
        let ds_type = match parts.next() {
            None => DSType::E,
            Some(t) => match t.parse() {
                Ok(t) => t,
                Err(e) => return Some(Err(format!("{e}"))),
            },
        };
        if parts.next().is_some() {
            return Some(Err(format!("trailing fields in {line:?}")));
        }
        Some(Ok(LexiconTarget { word, ds_type }))
    }
}

/// Builds nouns (`e`) from co-occurrence rows and intransitive verbs (`⟨e,t⟩`)
/// from verb/property counts. Other types are rejected.
pub fn build_lexicon(
    excerpts: &[CorpusExcerpt],
    targets: &[LexiconTarget],
    map: &TypeSpaceMap,
) -> Result<Lexicon, CorpusError> {
    let nouns: Vec<&str> = targets
        .iter()
        .filter(|t| t.ds_type == DSType::E)
        .map(|t| t.word.as_str())
        .collect();
    let noun_rows = if nouns.is_empty() {
        None
    } else {
        Some(build_cooccurrence(excerpts, &nouns, &map.entity)?)
    };
    let w_sig = Signature::new(vec![map.entity.clone()]);
    let mut senses = Vec::with_capacity(targets.len());
    let mut noun_index = 0;
    for t in targets {
        let tensor = if t.ds_type == DSType::E {
            let rows = noun_rows.as_ref().expect("nouns present");
            let d = map.entity.dim();
            let row = rows.as_ints().expect("counts are exact")
                [noun_index * d..(noun_index + 1) * d]
                .to_vec();
            noun_index += 1;
            Tensor::from_ints(w_sig.clone(), row)?
        } else if t.ds_type == DSType::predicate() {
            build_verb_matrix(excerpts, &t.word, map)?
        } else {
            return Err(CorpusError::UnsupportedType {
                word: t.word.clone(),
                ty: t.ds_type.clone(),
            });
        };
        senses.push(Sense::content(
            t.word.clone(),
            t.word.clone(),
            t.ds_type.clone(),
            tensor,
        ));
    }
    let mut spaces = vec![map.entity.clone()];
    if map.sentence != map.entity {
        spaces.push(map.sentence.clone());
    }
    Ok(Lexicon::new(spaces, map.clone(), senses)?)
}
