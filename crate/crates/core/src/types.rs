//! Semantic types and the spaces they denote.
//!
//! `e` maps to the entity space `W`, `t` to the sentence space `S`. Function
//! types map to the tensor product of their parts: a predicate `⟨e,t⟩` is a
//! `W ⊗ S` matrix and a transitive verb `⟨e,⟨e,t⟩⟩` is a `W ⊗ S ⊗ W` cube
//! with the subject slot first and the object slot last.
//!
//! The general rule puts the first-consumed argument outermost: for
//! `⟨a, t⟩` the argument slots lead, and for `⟨a, r⟩` with `r` itself a
//! function type the argument slots trail those of `r`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

use crate::tensor::{Signature, Space, Tensor};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum DSType {
    E,
    T,
    Fn(Box<DSType>, Box<DSType>),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("cannot parse type {input:?}: {reason}")]
pub struct TypeParseError {
    pub input: String,
    pub reason: String,
}

impl DSType {
    pub fn func(arg: DSType, res: DSType) -> DSType {
        DSType::Fn(Box::new(arg), Box::new(res))
    }

    /// `⟨e,t⟩`
    pub fn predicate() -> DSType {
        DSType::func(DSType::E, DSType::T)
    }

    /// `⟨e,⟨e,t⟩⟩`
    pub fn transitive() -> DSType {
        DSType::func(DSType::E, DSType::predicate())
    }

    pub fn is_function(&self) -> bool {
        matches!(self, DSType::Fn(..))
    }

    pub fn arg(&self) -> Option<&DSType> {
        match self {
            DSType::Fn(a, _) => Some(a),
            _ => None,
        }
    }

    pub fn result(&self) -> Option<&DSType> {
        match self {
            DSType::Fn(_, r) => Some(r),
            _ => None,
        }
    }

    /// Compact spelling used in lexicon files (`e`, `t`, `et`, `eet`), when the
    /// type is a right-nested chain over atomic arguments.
    pub fn compact(&self) -> Option<String> {
        match self {
            DSType::E => Some("e".into()),
            DSType::T => Some("t".into()),
            DSType::Fn(a, r) => {
                let head = match **a {
                    DSType::E => "e",
                    DSType::T => "t",
                    DSType::Fn(..) => return None,
                };
                r.compact().map(|rest| format!("{head}{rest}"))
            }
        }
    }

    /// ASCII angle-bracket spelling, e.g. `<e,<e,t>>`.
    pub fn ascii(&self) -> String {
        match self {
            DSType::E => "e".into(),
            DSType::T => "t".into(),
            DSType::Fn(a, r) => format!("<{},{}>", a.ascii(), r.ascii()),
        }
    }
}

impl fmt::Display for DSType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DSType::E => f.write_str("e"),
            DSType::T => f.write_str("t"),
            DSType::Fn(a, r) => write!(f, "⟨{a},{r}⟩"),
        }
    }
}

impl FromStr for DSType {
    type Err = TypeParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| TypeParseError {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let cleaned: Vec<char> = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '⟨' => '<',
                '⟩' => '>',
                c => c,
            })
            .collect();
        if cleaned.is_empty() {
            return Err(err("empty"));
        }
        if cleaned[0] == '<' {
            let mut pos = 0;
            let ty = parse_bracketed(&cleaned, &mut pos).map_err(|r| err(&r))?;
            if pos != cleaned.len() {
                return Err(err("trailing input"));
            }
            return Ok(ty);
        }
        let mut atoms = Vec::with_capacity(cleaned.len());
        for c in &cleaned {
            atoms.push(match c {
                'e' => DSType::E,
                't' => DSType::T,
                _ => return Err(err("expected only 'e' and 't'")),
            });
        }
        let mut ty = atoms.pop().expect("non-empty");
        while let Some(a) = atoms.pop() {
            ty = DSType::func(a, ty);
        }
        Ok(ty)
    }
}

fn parse_bracketed(c: &[char], pos: &mut usize) -> Result<DSType, String> {
    match c.get(*pos) {
        Some('e') => {
            *pos += 1;
            Ok(DSType::E)
        }
        Some('t') => {
            *pos += 1;
            Ok(DSType::T)
        }
        Some('<') => {
            *pos += 1;
            let a = parse_bracketed(c, pos)?;
            if c.get(*pos) != Some(&',') {
                return Err(format!("expected ',' at {pos}"));
            }
            *pos += 1;
            let r = parse_bracketed(c, pos)?;
            if c.get(*pos) != Some(&'>') {
                return Err(format!("expected '>' at {pos}"));
            }
            *pos += 1;
            Ok(DSType::func(a, r))
        }
        Some(other) => Err(format!("unexpected {other:?} at {pos}")),
        None => Err("unexpected end".into()),
    }
}

/// Which spaces interpret `e` and `t`. The two may coincide.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeSpaceMap {
    pub entity: Arc<Space>,
    pub sentence: Arc<Space>,
}

impl TypeSpaceMap {
    pub fn new(entity: Arc<Space>, sentence: Arc<Space>) -> Self {
        TypeSpaceMap { entity, sentence }
    }

    pub fn signature_of(&self, ty: &DSType) -> Signature {
        Signature::new(self.slots(ty))
    }

    fn slots(&self, ty: &DSType) -> Vec<Arc<Space>> {
        match ty {
            DSType::E => vec![self.entity.clone()],
            DSType::T => vec![self.sentence.clone()],
            DSType::Fn(a, r) if **r == DSType::T => {
                let mut v = self.slots(a);
                v.push(self.sentence.clone());
                v
            }
            DSType::Fn(a, r) => {
                let mut v = self.slots(r);
                v.extend(self.slots(a));
                v
            }
        }
    }

    /// Slot pairs `(functor slot, argument slot)` used when a functor of type
    /// `functor` is applied to its argument.
    pub fn application_pairs(&self, functor: &DSType) -> Option<Vec<(usize, usize)>> {
        let DSType::Fn(a, r) = functor else {
            return None;
        };
        let arg_rank = self.slots(a).len();
        let total = self.slots(functor).len();
        let start = if **r == DSType::T {
            0
        } else {
            total - arg_rank
        };
        Some((0..arg_rank).map(|i| (start + i, i)).collect())
    }

    /// True iff `formula` has the signature `node_type` denotes.
    pub fn check_formula(&self, node_type: &DSType, formula: &Tensor) -> bool {
        formula.signature() == &self.signature_of(node_type)
    }
}

/// Free-function form of [`TypeSpaceMap::signature_of`].
pub fn signature_of(ty: &DSType, map: &TypeSpaceMap) -> Signature {
    map.signature_of(ty)
}

/// Free-function form of [`TypeSpaceMap::check_formula`].
pub fn check_formula(node_type: &DSType, formula: &Tensor, map: &TypeSpaceMap) -> bool {
    map.check_formula(node_type, formula)
}
