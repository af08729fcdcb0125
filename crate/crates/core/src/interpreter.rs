//! Compiling partial trees to sentence-space tensors, and scoring them.
//!
//! Outstanding requirements are filled by an underspecified tensor of the
//! required signature. Three choices are available:
//!
//! * [`UnderspecStrategy::Unit`]: the all-ones tensor, which carries no
//!   information.
//! * [`UnderspecStrategy::Sum`]: the sum of everything the lexicon knows in that
//!   signature: every sense tensor of the signature plus every functor sense
//!   applied once to every argument sense when the result lands there.
//! * [`UnderspecStrategy::DirectSum`]: the same inventory kept apart as a
//!   tuple. Contraction and `μ` distribute over tuples, so a tree compiles to
//!   one sentence vector per combination of choices.
//!
//! Because contraction is bilinear the tuple components of a direct-sum
//! compilation always add up to the sum-strategy result.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::lexicon::{LexicalAction, Lexicon};
use crate::parser::{parse_word_with_sense, Candidate, ParseError, ParseState};
use crate::tensor::{
    contract, direct_sum, mu, sum_tensors, unit_tensor, Signature, Tensor, TensorError, TensorTuple,
};
use crate::tree::{DSTree, NodeId};
use crate::types::DSType;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum InterpretError {
    #[error("no lexicon entry inhabits {signature}")]
    NoInhabitants { signature: String },
    #[error("tree root has type {0}, expected t")]
    NotPropositional(DSType),
    #[error("expected a vector in a two-dimensional sentence space, got {0}")]
    NotSentenceVector(String),
    #[error(transparent)]
    Tensor(#[from] TensorError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum UnderspecStrategy {
    Unit,
    #[default]
    Sum,
    DirectSum,
}

impl UnderspecStrategy {
    pub const ALL: [UnderspecStrategy; 3] = [
        UnderspecStrategy::Unit,
        UnderspecStrategy::Sum,
        UnderspecStrategy::DirectSum,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            UnderspecStrategy::Unit => "unit",
            UnderspecStrategy::Sum => "sum",
            UnderspecStrategy::DirectSum => "direct_sum",
        }
    }
}

impl fmt::Display for UnderspecStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for UnderspecStrategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "unit" => Ok(UnderspecStrategy::Unit),
            "sum" => Ok(UnderspecStrategy::Sum),
            "direct_sum" | "direct-sum" => Ok(UnderspecStrategy::DirectSum),
            _ => Err(format!(
                "unknown strategy {s:?} (expected unit, sum or direct_sum)"
            )),
        }
    }
}

/// A compiled formula: one tensor, or a tuple of alternatives.
#[derive(Debug, Clone, PartialEq)]
pub enum Compiled {
    Single(Tensor),
    Tuple(TensorTuple),
}

impl Compiled {
    pub fn components(&self) -> &[Tensor] {
        match self {
            Compiled::Single(t) => std::slice::from_ref(t),
            Compiled::Tuple(t) => t.components(),
        }
    }

    pub fn signature(&self) -> &Signature {
        self.components()[0].signature()
    }

    /// Sums tuple components; a single tensor is returned as is.
    pub fn collapse(&self) -> Tensor {
        match self {
            Compiled::Single(t) => t.clone(),
            Compiled::Tuple(t) => t.sum(),
        }
    }

    fn zip_with(
        &self,
        other: &Compiled,
        op: impl Fn(&Tensor, &Tensor) -> Result<Tensor, TensorError>,
    ) -> Result<Compiled, TensorError> {
        if let (Compiled::Single(a), Compiled::Single(b)) = (self, other) {
            return Ok(Compiled::Single(op(a, b)?));
        }
        let mut out = Vec::with_capacity(self.components().len() * other.components().len());
        for a in self.components() {
            for b in other.components() {
                out.push(op(a, b)?);
            }
        }
        Ok(Compiled::Tuple(TensorTuple::new(out)?))
    }
}

/// One element of an underspecification inventory.
#[derive(Debug, Clone, PartialEq)]
pub struct InventoryItem {
    /// Sense id, or `functor·argument` for a saturated phrase.
    pub label: String,
    pub tensor: Tensor,
}

/// Everything the lexicon knows that lives in `signature`, in declaration
/// order: plain sense tensors first, then single applications of functor
/// senses to argument senses (functor-major).
pub fn inventory(signature: &Signature, lex: &Lexicon) -> Result<Vec<InventoryItem>, TensorError> {
    let map = lex.type_space_map();
    let content: Vec<(&str, &DSType, &Tensor)> = lex
        .senses()
        .iter()
        .filter_map(|s| match &s.action {
            LexicalAction::Content { ds_type, tensor } => Some((s.id.as_str(), ds_type, tensor)),
            LexicalAction::LinkRelative => None,
        })
        .collect();
    let mut items: Vec<InventoryItem> = content
        .iter()
        .filter(|(_, _, t)| t.signature() == signature)
        .map(|(id, _, t)| InventoryItem {
            label: id.to_string(),
            tensor: (*t).clone(),
        })
        .collect();
    for (fid, fty, ftensor) in &content {
        let DSType::Fn(arg_ty, res_ty) = fty else {
            continue;
        };
        if map.signature_of(res_ty) != *signature {
            continue;
        }
        let pairs = map.application_pairs(fty).expect("function type");
        for (aid, aty, atensor) in &content {
            if *aty == &**arg_ty {
                items.push(InventoryItem {
                    label: format!("{fid}·{aid}"),
                    tensor: contract(ftensor, atensor, &pairs)?,
                });
            }
        }
    }
    Ok(items)
}

/// Stand-in for an outstanding requirement of the given signature.
pub fn underspec_tensor(
    signature: &Signature,
    strategy: UnderspecStrategy,
    lex: &Lexicon,
) -> Result<Compiled, InterpretError> {
    if strategy == UnderspecStrategy::Unit {
        return Ok(Compiled::Single(unit_tensor(signature)?));
    }
    let items: Vec<Tensor> = inventory(signature, lex)?
        .into_iter()
        .map(|i| i.tensor)
        .collect();
    if items.is_empty() {
        return Err(InterpretError::NoInhabitants {
            signature: signature.to_string(),
        });
    }
    Ok(match strategy {
        UnderspecStrategy::Sum => Compiled::Single(sum_tensors(&items)?),
        _ => Compiled::Tuple(direct_sum(&items)?),
    })
}

/// Compiles the whole tree to its root formula in `S`.
///
/// Decorated nodes contribute their formula; outstanding nodes with daughters
/// combine them by contraction (missing daughters are underspecified);
/// childless requirement nodes are underspecified outright. Completed LINKed
/// clauses are folded in with `μ` at propositional nodes.
pub fn compile_root(
    tree: &DSTree,
    strategy: UnderspecStrategy,
    lex: &Lexicon,
) -> Result<Compiled, InterpretError> {
    let root = tree.root_node();
    if root.ds_type != DSType::T {
        return Err(InterpretError::NotPropositional(root.ds_type.clone()));
    }
    compile_node(tree, tree.root(), strategy, lex)
}

fn compile_node(
    tree: &DSTree,
    id: NodeId,
    strategy: UnderspecStrategy,
    lex: &Lexicon,
) -> Result<Compiled, InterpretError> {
    let map = lex.type_space_map();
    let node = tree.node(id);
    if let Some(f) = &node.formula {
        return Ok(Compiled::Single(f.clone()));
    }
    let under = |ty: &DSType| underspec_tensor(&map.signature_of(ty), strategy, lex);
    let mut value = match (node.argument, node.functor) {
        (None, None) => under(&node.ds_type)?,
        (arg, fun) => {
            let arg_ty = match (arg, fun) {
                (Some(a), _) => tree.node(a).ds_type.clone(),
                (None, Some(f)) => tree.node(f).ds_type.arg().expect("functor type").clone(),
                (None, None) => unreachable!(),
            };
            let fun_ty = match fun {
                Some(f) => tree.node(f).ds_type.clone(),
                None => DSType::func(arg_ty.clone(), node.ds_type.clone()),
            };
            let av = match arg {
                Some(a) => compile_node(tree, a, strategy, lex)?,
                None => under(&arg_ty)?,
            };
            let fv = match fun {
                Some(f) => compile_node(tree, f, strategy, lex)?,
                None => under(&fun_ty)?,
            };
            let pairs = map.application_pairs(&fun_ty).expect("function type");
            fv.zip_with(&av, |f, a| contract(f, a, &pairs))?
        }
    };
    if node.ds_type == DSType::T {
        for l in tree.links_under(id) {
            if let Some(lf) = &tree.node(l).formula {
                value = Compiled::Single(lf.clone()).zip_with(&value, mu)?;
            }
        }
    }
    Ok(value)
}

/// ⊤ and ⊥ mass of a sentence vector, with the normalized ratio
/// `⊤ / (⊤ + ⊥)` (0.5 when both are zero).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PlausibilityScore {
    pub top: f64,
    pub bottom: f64,
    pub ratio: f64,
}

impl PlausibilityScore {
    pub fn new(top: f64, bottom: f64) -> PlausibilityScore {
        let total = top + bottom;
        let ratio = if total == 0.0 { 0.5 } else { top / total };
        PlausibilityScore { top, bottom, ratio }
    }
}

impl fmt::Display for PlausibilityScore {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(⊤ {}, ⊥ {}) ratio {:.4}",
            self.top, self.bottom, self.ratio
        )
    }
}

/// Reads a sentence vector: basis vector 0 is ⊤, basis vector 1 is ⊥.
pub fn plausibility(s: &Tensor) -> Result<PlausibilityScore, InterpretError> {
    let sig = s.signature();
    if sig.rank() != 1 || sig.spaces()[0].dim() != 2 {
        return Err(InterpretError::NotSentenceVector(sig.to_string()));
    }
    let v = s.to_f64_vec();
    Ok(PlausibilityScore::new(v[0], v[1]))
}

/// A compiled and scored root.
#[derive(Debug, Clone, PartialEq)]
pub struct Scored {
    /// Collapsed root vector.
    pub root: Tensor,
    pub score: PlausibilityScore,
    /// Per-component scores when the root compiled to a tuple.
    pub components: Vec<PlausibilityScore>,
}

pub fn score_tree(
    tree: &DSTree,
    strategy: UnderspecStrategy,
    lex: &Lexicon,
) -> Result<Scored, InterpretError> {
    let compiled = compile_root(tree, strategy, lex)?;
    let root = compiled.collapse();
    let score = plausibility(&root)?;
    let components = match &compiled {
        Compiled::Single(_) => Vec::new(),
        Compiled::Tuple(t) => t
            .components()
            .iter()
            .map(plausibility)
            .collect::<Result<_, _>>()?,
    };
    Ok(Scored {
        root,
        score,
        components,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Reading {
    pub candidate: usize,
    pub history: Vec<String>,
    pub scored: Scored,
}

fn by_ratio_desc(a: f64, b: f64) -> Ordering {
    b.partial_cmp(&a).unwrap_or(Ordering::Equal)
}

/// Scores every candidate and ranks them by ratio, best first. Ties keep
/// candidate order.
pub fn disambiguate(
    state: &ParseState,
    strategy: UnderspecStrategy,
    lex: &Lexicon,
) -> Result<Vec<Reading>, InterpretError> {
    let mut out = state
        .candidates
        .iter()
        .enumerate()
        .map(|(i, Candidate { tree, history })| {
            Ok(Reading {
                candidate: i,
                history: history.clone(),
                scored: score_tree(tree, strategy, lex)?,
            })
        })
        .collect::<Result<Vec<_>, InterpretError>>()?;
    out.sort_by(|a, b| by_ratio_desc(a.scored.score.ratio, b.scored.score.ratio));
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    /// Best-scoring continuation for this sense.
    Scored {
        history: Vec<String>,
        scored: Scored,
    },
    DeadEnd,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Expectation {
    pub word: String,
    pub sense_id: String,
    pub outcome: Outcome,
}

impl Expectation {
    pub fn score(&self) -> Option<&PlausibilityScore> {
        match &self.outcome {
            Outcome::Scored { scored, .. } => Some(&scored.score),
            Outcome::DeadEnd => None,
        }
    }
}

/// Speculatively parses each sense of each candidate word and ranks the
/// continuations by ratio, best first; dead ends go last in input order.
pub fn expect<S: AsRef<str>>(
    state: &ParseState,
    candidate_words: &[S],
    strategy: UnderspecStrategy,
    lex: &Lexicon,
) -> Result<Vec<Expectation>, InterpretError> {
    let index = state.consumed.len();
    let mut out = Vec::new();
    for word in candidate_words {
        let word = word.as_ref();
        let senses = lex.lookup_token(word);
        if senses.is_empty() {
            return Err(ParseError::LexiconMiss {
                word: word.to_string(),
                index,
            }
            .into());
        }
        for sense in senses {
            let outcome = match parse_word_with_sense(state, word, sense, lex) {
                Ok(next) => {
                    let mut best: Option<(Vec<String>, Scored)> = None;
                    for c in &next.candidates {
                        let s = score_tree(&c.tree, strategy, lex)?;
                        if best
                            .as_ref()
                            .is_none_or(|(_, b)| s.score.ratio > b.score.ratio)
                        {
                            best = Some((c.history.clone(), s));
                        }
                    }
                    let (history, scored) = best.expect("parse states are non-empty");
                    Outcome::Scored { history, scored }
                }
                Err(ParseError::DeadEnd { .. }) => Outcome::DeadEnd,
                Err(e) => return Err(e.into()),
            };
            out.push(Expectation {
                word: word.to_string(),
                sense_id: sense.id.clone(),
                outcome,
            });
        }
    }
    out.sort_by(|a, b| match (a.score(), b.score()) {
        (Some(x), Some(y)) => by_ratio_desc(x.ratio, y.ratio),
        (Some(_), None) => Ordering::Less,
        (None, Some(_)) => Ordering::Greater,
        (None, None) => Ordering::Equal,
    });
    Ok(out)
}
