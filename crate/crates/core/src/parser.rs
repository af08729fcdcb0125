//! Word-by-word tree growth.
//!
//! The rule set is deliberately small:
//!
//! * **Prediction** — a pointed, childless `?Ty(t)` grows a `?Ty(e)` argument
//!   and a `?Ty(⟨e,t⟩)` functor daughter and the pointer moves to the argument.
//!   A `?Ty(t)` that already has its argument (a LINKed clause opened by a
//!   relative pronoun) only grows the functor.
//! * **Completion** — the pointer leaves a complete node for its mother, or for
//!   its host when the node is the root of a LINKed tree.
//! * **Anticipation** — from a requirement node the pointer descends to the
//!   first outstanding daughter (argument first).
//! * **Elimination** — a requirement node whose daughters are both complete is
//!   decorated with the contraction of the functor formula and the argument
//!   formula; see [`DSTree::eliminate`].
//! * **LINK adjunction** — a relative pronoun opens a `?Ty(t)` tree LINKed from
//!   the entity node just parsed, whose subject is a copy of that entity.
//!
//! Lexical actions decorate the pointed requirement node, or for verbs whose
//! type takes more arguments than the node, build the argument and functor
//! daughters first. Several senses of a word are followed in parallel: a parse
//! state holds one candidate per surviving sense choice.

use thiserror::Error;

use crate::lexicon::{LexicalAction, Lexicon, Sense};
use crate::tensor::TensorError;
use crate::tree::{DSTree, NodeId};
use crate::types::{DSType, TypeSpaceMap};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ParseError {
    #[error("unknown word {word:?} at position {index}")]
    LexiconMiss { word: String, index: usize },
    #[error("no parse continues with {word:?} at position {index}")]
    DeadEnd { word: String, index: usize },
    #[error("LINK needs the pointer on a completed entity node")]
    LinkUnavailable,
    #[error(transparent)]
    Tensor(#[from] TensorError),
}

impl ParseError {
    /// Position of the offending word, for word-level errors.
    pub fn index(&self) -> Option<usize> {
        match self {
            ParseError::LexiconMiss { index, .. } | ParseError::DeadEnd { index, .. } => {
                Some(*index)
            }
            _ => None,
        }
    }
}

/// A live analysis of the prefix together with the senses chosen on the way.
#[derive(Debug, Clone, PartialEq)]
pub struct Candidate {
    pub tree: DSTree,
    pub history: Vec<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParseState {
    pub candidates: Vec<Candidate>,
    pub consumed: Vec<String>,
}

impl ParseState {
    pub fn len(&self) -> usize {
        self.candidates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.candidates.is_empty()
    }
}

/// The starting state: a single `?Ty(t)` node under the pointer.
pub fn axiom() -> ParseState {
    ParseState {
        candidates: vec![Candidate {
            tree: DSTree::axiom(),
            history: Vec::new(),
        }],
        consumed: Vec::new(),
    }
}

/// Runs the non-lexical rules to a fixpoint in place.
pub fn settle(tree: &mut DSTree, map: &TypeSpaceMap) -> Result<(), TensorError> {
    loop {
        let p = tree.pointer();
        let node = tree.node(p).clone();
        if node.is_complete() {
            match (node.mother, node.link_host) {
                (Some(m), _) | (None, Some(m)) => tree.set_pointer(m),
                (None, None) => return Ok(()),
            }
            continue;
        }
        let complete = |id: Option<NodeId>| id.is_some_and(|i| tree.node(i).is_complete());
        match (node.argument, node.functor) {
            (None, None) if node.ds_type == DSType::T => {
                let a = tree.add_argument(p, DSType::E);
                tree.add_functor(p, DSType::predicate());
                tree.set_pointer(a);
            }
            (Some(a), None) if node.ds_type == DSType::T && complete(Some(a)) => {
                let arg_ty = tree.node(a).ds_type.clone();
                let f = tree.add_functor(p, DSType::func(arg_ty, DSType::T));
                tree.set_pointer(f);
            }
            (Some(a), Some(f)) if complete(Some(a)) && complete(Some(f)) => {
                tree.eliminate(p, map)?;
            }
            (a, f) => {
                let next = [a, f]
                    .into_iter()
                    .flatten()
                    .find(|&d| !tree.node(d).is_complete());
                match next {
                    Some(d) => tree.set_pointer(d),
                    None => return Ok(()),
                }
            }
        }
    }
}

/// Trees reachable from `tree` by non-lexical actions that a word may attach
/// to: the settled tree, plus (when LINK adjunction is possible) a variant
/// with the pointer back on the entity node just parsed.
pub fn apply_computational(tree: &DSTree, map: &TypeSpaceMap) -> Result<Vec<DSTree>, TensorError> {
    let mut settled = tree.clone();
    settle(&mut settled, map)?;
    let variant = settled.last_decorated().and_then(|e| {
        let node = settled.node(e);
        let linkable = node.ds_type == DSType::E
            && node.is_complete()
            && node.formula.is_some()
            && node.link.is_none()
            && !settled.node(settled.enclosing_proposition(e)).is_complete()
            && settled.pointer() != e;
        linkable.then(|| {
            let mut v = settled.clone();
            v.set_pointer(e);
            v
        })
    });
    let mut out = vec![settled];
    out.extend(variant);
    Ok(out)
}

/// Applies one sense at the pointer. `None` when the sense cannot apply there.
pub fn apply_lexical(tree: &DSTree, sense: &Sense) -> Option<DSTree> {
    match &sense.action {
        LexicalAction::LinkRelative => apply_link(tree, true).ok()?.into_iter().next(),
        LexicalAction::Content { ds_type, tensor } => {
            let pointed = tree.pointed();
            if !pointed.requirement || pointed.has_children() {
                return None;
            }
            let term = format!("T^{}", sense.id);
            let target = pointed.ds_type.clone();
            if *ds_type == target {
                let mut t = tree.clone();
                t.decorate(t.pointer(), tensor.clone(), term);
                return Some(t);
            }
            // ds_type = ⟨a1, ⟨a2, … ⟨ak, target⟩⟩⟩ ?
            let mut args = Vec::new();
            let mut rest = ds_type;
            while let DSType::Fn(a, r) = rest {
                args.push((**a).clone());
                rest = r;
                if *rest == target {
                    break;
                }
            }
            if *rest != target || args.is_empty() {
                return None;
            }
            let mut t = tree.clone();
            let mut at = t.pointer();
            let mut first_arg = None;
            let mut mother_ty = target;
            while let Some(a) = args.pop() {
                let arg = t.add_argument(at, a.clone());
                first_arg.get_or_insert(arg);
                let fun_ty = DSType::func(a, mother_ty);
                let fun = t.add_functor(at, fun_ty.clone());
                if args.is_empty() {
                    t.decorate(fun, tensor.clone(), term.clone());
                }
                at = fun;
                mother_ty = fun_ty;
            }
            t.set_pointer(first_arg.expect("at least one argument"));
            Some(t)
        }
    }
}

/// LINK adjunction from the pointed entity node.
///
/// With `relative_pronoun`, the new `?Ty(t)` tree gets a subject daughter
/// carrying a copy of the host formula and the pointer moves onto it;
/// otherwise the pointer moves to the bare LINKed root.
pub fn apply_link(tree: &DSTree, relative_pronoun: bool) -> Result<Vec<DSTree>, ParseError> {
    let host = tree.pointed();
    let (Some(formula), false, DSType::E, None) = (
        host.formula.clone(),
        host.requirement,
        &host.ds_type,
        host.link,
    ) else {
        return Err(ParseError::LinkUnavailable);
    };
    let term = host.term.clone().unwrap_or_default();
    let mut t = tree.clone();
    let root = t.add_link(t.pointer());
    if relative_pronoun {
        let subject = t.add_argument(root, DSType::E);
        t.decorate(subject, formula, term);
        t.set_pointer(subject);
    } else {
        t.set_pointer(root);
    }
    Ok(vec![t])
}

fn extend(
    state: &ParseState,
    word: &str,
    senses: &[&Sense],
    map: &TypeSpaceMap,
) -> Result<ParseState, ParseError> {
    let index = state.consumed.len();
    let mut candidates = Vec::new();
    for cand in &state.candidates {
        let variants = apply_computational(&cand.tree, map)?;
        for sense in senses {
            if let Some(mut grown) = variants.iter().find_map(|v| apply_lexical(v, sense)) {
                settle(&mut grown, map)?;
                let mut history = cand.history.clone();
                history.push(sense.id.clone());
                candidates.push(Candidate {
                    tree: grown,
                    history,
                });
            }
        }
    }
    if candidates.is_empty() {
        return Err(ParseError::DeadEnd {
            word: word.to_string(),
            index,
        });
    }
    let mut consumed = state.consumed.clone();
    consumed.push(word.to_string());
    Ok(ParseState {
        candidates,
        consumed,
    })
}

/// Consumes one word. Candidates are ordered by (previous candidate, sense).
pub fn parse_word(state: &ParseState, word: &str, lex: &Lexicon) -> Result<ParseState, ParseError> {
    let senses = lex.lookup_token(word);
    if senses.is_empty() {
        return Err(ParseError::LexiconMiss {
            word: word.to_string(),
            index: state.consumed.len(),
        });
    }
    extend(state, word, &senses, lex.type_space_map())
}

/// Consumes one word restricted to a single sense.
pub fn parse_word_with_sense(
    state: &ParseState,
    word: &str,
    sense: &Sense,
    lex: &Lexicon,
) -> Result<ParseState, ParseError> {
    extend(state, word, &[sense], lex.type_space_map())
}

/// Left fold of [`parse_word`] from [`axiom`].
pub fn parse_sequence<S: AsRef<str>>(words: &[S], lex: &Lexicon) -> Result<ParseState, ParseError> {
    words
        .iter()
        .try_fold(axiom(), |state, w| parse_word(&state, w.as_ref(), lex))
}

pub fn is_complete(tree: &DSTree) -> bool {
    tree.is_complete()
}
