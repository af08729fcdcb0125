//! Machine-readable output, `--format json`.
//!
//! Every document carries `schema_version`; bump it on any breaking change
//! and update `docs/json-output.md`.

use dsvs::interpreter::{Expectation, Outcome, Reading, Scored};
use dsvs::PlausibilityScore;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Score {
    pub top: f64,
    pub bottom: f64,
    pub ratio: f64,
}

impl From<&PlausibilityScore> for Score {
    fn from(s: &PlausibilityScore) -> Score {
        Score {
            top: s.top,
            bottom: s.bottom,
            ratio: s.ratio,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CandidateOut {
    /// Sense id chosen for each consumed word.
    pub senses: Vec<String>,
    pub complete: bool,
    pub tree: String,
    pub score: Score,
    /// Per-component scores under `direct_sum`; empty otherwise.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub components: Vec<Score>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraceEvent {
    pub word_index: usize,
    pub word: String,
    pub candidate_count: usize,
    pub candidates: Vec<CandidateOut>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorOut {
    /// `lexicon_miss` or `dead_end`.
    pub kind: String,
    pub word: String,
    pub word_index: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParseOut {
    pub schema_version: u32,
    pub command: String,
    pub strategy: String,
    pub words: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<TraceEvent>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub candidates: Option<Vec<CandidateOut>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorOut>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankedReading {
    pub rank: usize,
    pub candidate: usize,
    pub senses: Vec<String>,
    pub score: Score,
}

impl RankedReading {
    pub fn new(rank: usize, r: &Reading) -> RankedReading {
        RankedReading {
            rank,
            candidate: r.candidate,
            senses: r.history.clone(),
            score: Score::from(&r.scored.score),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DisambiguateOut {
    pub schema_version: u32,
    pub command: String,
    pub strategy: String,
    pub words: Vec<String>,
    pub readings: Vec<RankedReading>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorOut>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankedContinuation {
    pub rank: usize,
    pub word: String,
    pub sense: String,
    /// `scored` or `dead_end`.
    pub outcome: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub senses: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub score: Option<Score>,
}

impl RankedContinuation {
    pub fn new(rank: usize, e: &Expectation) -> RankedContinuation {
        let (outcome, senses, score) = match &e.outcome {
            Outcome::Scored { history, scored } => {
                ("scored", Some(history.clone()), Some(score_of(scored)))
            }
            Outcome::DeadEnd => ("dead_end", None, None),
        };
        RankedContinuation {
            rank,
            word: e.word.clone(),
            sense: e.sense_id.clone(),
            outcome: outcome.into(),
            senses,
            score,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExpectOut {
    pub schema_version: u32,
    pub command: String,
    pub strategy: String,
    pub after: Vec<String>,
    pub continuations: Vec<RankedContinuation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorOut>,
}

pub(crate) fn score_of(s: &Scored) -> Score {
    Score::from(&s.score)
}
