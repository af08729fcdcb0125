//! Word senses and their tensors.

mod corpus;
mod file;

use std::collections::HashSet;
use std::fmt;
use std::path::PathBuf;
use std::sync::Arc;

use thiserror::Error;

use crate::tensor::{Space, Tensor};
use crate::types::{DSType, TypeSpaceMap};

pub use corpus::{
    build_cooccurrence, build_lexicon, build_verb_matrix, read_corpus_dir, split_excerpts,
    tokenize, CorpusError, CorpusExcerpt, LexiconTarget,
};
pub use file::{load_lexicon, parse_lexicon, save_lexicon, to_json_string};

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("parse error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid field {field}: {message}")]
    Field { field: String, message: String },
    #[error("invalid sense {sense_id}: {message}")]
    Validation { sense_id: String, message: String },
    #[error("invalid lexicon: {0}")]
    Empty(String),
}

/// What a sense does to the tree when its word is parsed.
#[derive(Debug, Clone, PartialEq)]
pub enum LexicalAction {
    /// Decorates (and where the type requires it, builds) a node with a tensor.
    Content { ds_type: DSType, tensor: Tensor },
    /// Relative pronoun: opens a LINKed clause sharing the head entity.
    LinkRelative,
}

/// Entry-weighting applied to corpus counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Weighting {
    #[default]
    Raw,
}

impl Weighting {
    pub fn as_str(self) -> &'static str {
        match self {
            Weighting::Raw => "raw",
        }
    }

    pub fn parse(s: &str) -> Option<Weighting> {
        match s {
            "raw" => Some(Weighting::Raw),
            _ => None,
        }
    }
}

/// One reading of a word form.
#[derive(Debug, Clone, PartialEq)]
pub struct Sense {
    pub id: String,
    pub word: String,
    /// Inflected forms that select this sense as well (e.g. plurals).
    pub forms: Vec<String>,
    pub gloss: Option<String>,
    pub action: LexicalAction,
}

impl Sense {
    pub fn content(
        id: impl Into<String>,
        word: impl Into<String>,
        ds_type: DSType,
        tensor: Tensor,
    ) -> Sense {
        Sense {
            id: id.into(),
            word: word.into(),
            forms: Vec::new(),
            gloss: None,
            action: LexicalAction::Content { ds_type, tensor },
        }
    }

    pub fn link_relative(id: impl Into<String>, word: impl Into<String>) -> Sense {
        Sense {
            id: id.into(),
            word: word.into(),
            forms: Vec::new(),
            gloss: None,
            action: LexicalAction::LinkRelative,
        }
    }

    pub fn with_forms<S: Into<String>>(mut self, forms: impl IntoIterator<Item = S>) -> Sense {
        self.forms = forms.into_iter().map(Into::into).collect();
        self
    }

    pub fn with_gloss(mut self, gloss: impl Into<String>) -> Sense {
        self.gloss = Some(gloss.into());
        self
    }

    pub fn ds_type(&self) -> Option<&DSType> {
        match &self.action {
            LexicalAction::Content { ds_type, .. } => Some(ds_type),
            LexicalAction::LinkRelative => None,
        }
    }

    pub fn tensor(&self) -> Option<&Tensor> {
        match &self.action {
            LexicalAction::Content { tensor, .. } => Some(tensor),
            LexicalAction::LinkRelative => None,
        }
    }

    pub fn matches(&self, form: &str) -> bool {
        self.word == form || self.forms.iter().any(|f| f == form)
    }
}

impl fmt::Display for Sense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.action {
            LexicalAction::Content { ds_type, .. } => write!(f, "{} : {}", self.id, ds_type),
            LexicalAction::LinkRelative => write!(f, "{} : LINK", self.id),
        }
    }
}

/// Validated, immutable sense inventory.
#[derive(Debug, Clone, PartialEq)]
pub struct Lexicon {
    spaces: Vec<Arc<Space>>,
    map: TypeSpaceMap,
    weighting: Weighting,
    senses: Vec<Sense>,
}

impl Lexicon {
    pub fn new(
        spaces: Vec<Arc<Space>>,
        map: TypeSpaceMap,
        senses: Vec<Sense>,
    ) -> Result<Lexicon, LexiconError> {
        if senses.is_empty() {
            return Err(LexiconError::Empty("no senses declared".into()));
        }
        for needed in [&map.entity, &map.sentence] {
            if !spaces.iter().any(|s| s == needed) {
                return Err(LexiconError::Empty(format!(
                    "space {} is mapped but not declared",
                    needed.name()
                )));
            }
        }
        let mut seen = HashSet::new();
        for sense in &senses {
            if !seen.insert(sense.id.as_str()) {
                return Err(LexiconError::Validation {
                    sense_id: sense.id.clone(),
                    message: "duplicate sense id".into(),
                });
            }
            if sense.word.is_empty() {
                return Err(LexiconError::Validation {
                    sense_id: sense.id.clone(),
                    message: "empty word form".into(),
                });
            }
            if let LexicalAction::Content { ds_type, tensor } = &sense.action {
                if !map.check_formula(ds_type, tensor) {
                    return Err(LexiconError::Validation {
                        sense_id: sense.id.clone(),
                        message: format!(
                            "tensor signature {} does not match type {} (expected {})",
                            tensor.signature(),
                            ds_type,
                            map.signature_of(ds_type)
                        ),
                    });
                }
            }
        }
        Ok(Lexicon {
            spaces,
            map,
            weighting: Weighting::Raw,
            senses,
        })
    }

    pub fn with_weighting(mut self, weighting: Weighting) -> Lexicon {
        self.weighting = weighting;
        self
    }

    pub fn spaces(&self) -> &[Arc<Space>] {
        &self.spaces
    }

    pub fn space(&self, name: &str) -> Option<&Arc<Space>> {
        self.spaces.iter().find(|s| s.name() == name)
    }

    pub fn type_space_map(&self) -> &TypeSpaceMap {
        &self.map
    }

    pub fn weighting(&self) -> Weighting {
        self.weighting
    }

    pub fn senses(&self) -> &[Sense] {
        &self.senses
    }

    pub fn sense(&self, id: &str) -> Option<&Sense> {
        self.senses.iter().find(|s| s.id == id)
    }

    /// All senses of a word form, in declaration order.
    pub fn lookup(&self, word: &str) -> Vec<&Sense> {
        self.senses.iter().filter(|s| s.matches(word)).collect()
    }

    /// Like [`lookup`](Self::lookup), but a token spelled as a sense id
    /// (`dribble#control`) selects exactly that sense.
    pub fn lookup_token(&self, token: &str) -> Vec<&Sense> {
        if token.contains('#') {
            return self.sense(token).into_iter().collect();
        }
        self.lookup(token)
    }

    pub fn contains(&self, token: &str) -> bool {
        !self.lookup_token(token).is_empty()
    }
}

/// Free-function form of [`Lexicon::lookup`].
pub fn lookup<'a>(lex: &'a Lexicon, word: &str) -> Vec<&'a Sense> {
    lex.lookup(word)
}
