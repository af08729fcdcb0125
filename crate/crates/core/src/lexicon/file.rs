//! JSON lexicon files.
//!
//! ```text
//! {
//!   "version": 1,
//!   "spaces": { "W": ["infant", ...], "S": ["true", "false"] },
//!   "map": { "entity": "W", "sentence": "S" },
//!   "weighting": "raw",
//!   "senses": [
//!     { "id": "baby", "word": "baby", "forms": ["babies"], "type": "e",
//!       "tensor": [34, 10, 0, 0] },
//!     { "id": "who", "word": "who", "action": "link" }
//!   ]
//! }
//! ```
//!
//! Tensors are nested arrays with the first signature slot outermost. A tensor
//! whose numbers are all integers loads on the exact path.

use std::fs;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Number, Value};

use super::{LexicalAction, Lexicon, LexiconError, Sense, Weighting};
use crate::tensor::{Entries, Signature, Space, Tensor};
use crate::types::{DSType, TypeSpaceMap};

const FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLexicon {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    version: Option<u32>,
    spaces: Map<String, Value>,
    map: RawMap,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weighting: Option<String>,
    senses: Vec<RawSense>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMap {
    entity: String,
    sentence: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSense {
    id: String,
    word: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    forms: Vec<String>,
    #[serde(rename = "type", default, skip_serializing_if = "Option::is_none")]
    ty: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    action: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    tensor: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    gloss: Option<String>,
}

fn field(field: impl Into<String>, message: impl Into<String>) -> LexiconError {
    LexiconError::Field {
        field: field.into(),
        message: message.into(),
    }
}

pub fn load_lexicon(path: impl AsRef<Path>) -> Result<Lexicon, LexiconError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| LexiconError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_lexicon(&text)
}

pub fn parse_lexicon(text: &str) -> Result<Lexicon, LexiconError> {
    let raw: RawLexicon = serde_json::from_str(text).map_err(|e| LexiconError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if let Some(v) = raw.version {
        if v != FORMAT_VERSION {
            return Err(field("version", format!("unsupported version {v}")));
        }
    }

    let mut spaces = Vec::with_capacity(raw.spaces.len());
    for (name, labels) in &raw.spaces {
        let where_ = format!("spaces.{name}");
        let labels = labels
            .as_array()
            .ok_or_else(|| field(&where_, "expected an array of basis labels"))?
            .iter()
            .map(|l| {
                l.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| field(&where_, "basis labels must be strings"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        spaces.push(Space::new(name.clone(), labels).map_err(|e| field(&where_, e.to_string()))?);
    }
    let find = |name: &str, f: &str| -> Result<Arc<Space>, LexiconError> {
        spaces
            .iter()
            .find(|s| s.name() == name)
            .cloned()
            .ok_or_else(|| field(f, format!("unknown space {name:?}")))
    };
    let map = TypeSpaceMap::new(
        find(&raw.map.entity, "map.entity")?,
        find(&raw.map.sentence, "map.sentence")?,
    );

    let weighting = match raw.weighting.as_deref() {
        None => Weighting::Raw,
        Some(w) => Weighting::parse(w)
            .ok_or_else(|| field("weighting", format!("unknown weighting {w:?}")))?,
    };

    let mut senses = Vec::with_capacity(raw.senses.len());
    for (i, s) in raw.senses.into_iter().enumerate() {
        let at = |f: &str| format!("senses[{i}].{f}");
        let action = match s.action.as_deref() {
            Some("link") => {
                if s.tensor.is_some() {
                    return Err(field(at("tensor"), "link senses carry no tensor"));
                }
                LexicalAction::LinkRelative
            }
            None | Some("content") => {
                let ty_str =
                    s.ty.as_deref()
                        .ok_or_else(|| field(at("type"), "missing"))?;
                let ds_type: DSType = ty_str
                    .parse()
                    .map_err(|e: crate::types::TypeParseError| field(at("type"), e.to_string()))?;
                let value = s
                    .tensor
                    .as_ref()
                    .ok_or_else(|| field(at("tensor"), "missing"))?;
                let signature = map.signature_of(&ds_type);
                let tensor =
                    tensor_from_json(value, &signature).map_err(|m| field(at("tensor"), m))?;
                LexicalAction::Content { ds_type, tensor }
            }
            Some(other) => return Err(field(at("action"), format!("unknown action {other:?}"))),
        };
        senses.push(Sense {
            id: s.id,
            word: s.word,
            forms: s.forms,
            gloss: s.gloss,
            action,
        });
    }

    Ok(Lexicon::new(spaces, map, senses)?.with_weighting(weighting))
}

pub fn to_json_string(lex: &Lexicon) -> Result<String, LexiconError> {
    let mut spaces = Map::new();
    for s in lex.spaces() {
        spaces.insert(
            s.name().to_string(),
            Value::Array(s.labels().iter().cloned().map(Value::String).collect()),
        );
    }
    let mut senses = Vec::with_capacity(lex.senses().len());
    for s in lex.senses() {
        let (ty, action, tensor) = match &s.action {
            LexicalAction::Content { ds_type, tensor } => (
                Some(ds_type.compact().unwrap_or_else(|| ds_type.ascii())),
                None,
                Some(
                    tensor_to_json(tensor).map_err(|m| LexiconError::Validation {
                        sense_id: s.id.clone(),
                        message: m,
                    })?,
                ),
            ),
            LexicalAction::LinkRelative => (None, Some("link".to_string()), None),
        };
        senses.push(RawSense {
            id: s.id.clone(),
            word: s.word.clone(),
            forms: s.forms.clone(),
            ty,
            action,
            tensor,
            gloss: s.gloss.clone(),
        });
    }
    let map = lex.type_space_map();
    let raw = RawLexicon {
        version: Some(FORMAT_VERSION),
        spaces,
        map: RawMap {
            entity: map.entity.name().to_string(),
            sentence: map.sentence.name().to_string(),
        },
        weighting: Some(lex.weighting().as_str().to_string()),
        senses,
    };
    let mut out = serde_json::to_string_pretty(&raw).expect("lexicon values serialize");
    out.push('\n');
    Ok(out)
}

pub fn save_lexicon(lex: &Lexicon, path: impl AsRef<Path>) -> Result<(), LexiconError> {
    let path = path.as_ref();
    let text = to_json_string(lex)?;
    fs::write(path, text).map_err(|source| LexiconError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn tensor_from_json(value: &Value, signature: &Signature) -> Result<Tensor, String> {
    let dims = signature.dims();
    let mut numbers = Vec::with_capacity(signature.len());
    flatten(value, &dims, &mut numbers, &mut Vec::new())?;
    let entries = if numbers.iter().all(|n| n.is_i64()) {
        Entries::Int(
            numbers
                .iter()
                .map(|n| n.as_i64().expect("checked"))
                .collect(),
        )
    } else {
        Entries::Float(
            numbers
                .iter()
                .map(|n| n.as_f64().ok_or_else(|| format!("number {n} out of range")))
                .collect::<Result<_, _>>()?,
        )
    };
    Tensor::from_entries(signature.clone(), entries).map_err(|e| e.to_string())
}

fn flatten(
    value: &Value,
    dims: &[usize],
    out: &mut Vec<Number>,
    path: &mut Vec<usize>,
) -> Result<(), String> {
    let loc = || path.iter().map(|i| format!("[{i}]")).collect::<String>();
    match dims.split_first() {
        None => match value {
            Value::Number(n) => {
                out.push(n.clone());
                Ok(())
            }
            _ => Err(format!("expected a number at {}", loc())),
        },
        Some((&d, rest)) => {
            let arr = value
                .as_array()
                .ok_or_else(|| format!("expected an array of length {d} at {}", loc()))?;
            if arr.len() != d {
                return Err(format!(
                    "expected length {d} at {}, found {}",
                    loc(),
                    arr.len()
                ));
            }
            for (i, v) in arr.iter().enumerate() {
                path.push(i);
                flatten(v, rest, out, path)?;
                path.pop();
            }
            Ok(())
        }
    }
}

fn tensor_to_json(t: &Tensor) -> Result<Value, String> {
    let leaves: Vec<Value> = match t.entries() {
        Entries::Int(v) => v.iter().map(|&i| Value::from(i)).collect(),
        Entries::Float(v) => v
            .iter()
            .map(|&x| {
                Number::from_f64(x)
                    .map(Value::Number)
                    .ok_or_else(|| format!("non-finite entry {x}"))
            })
            .collect::<Result<_, _>>()?,
    };
    Ok(nest(&leaves, &t.signature().dims()))
}

fn nest(leaves: &[Value], dims: &[usize]) -> Value {
    match dims.split_first() {
        None => leaves[0].clone(),
        Some((&d, rest)) => {
            let chunk = leaves.len() / d;
            Value::Array(
                (0..d)
                    .map(|i| nest(&leaves[i * chunk..(i + 1) * chunk], rest))
                    .collect(),
            )
        }
    }
}
