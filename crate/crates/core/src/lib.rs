//! Incremental Dynamic Syntax parsing with tensor semantics.
//!
//! Words are consumed one at a time, growing a partial semantic tree. Node
//! formulae are tensors over labelled spaces: entities live in a word space
//! `W`, propositions in a sentence space `S`, and functors in products of the
//! two. Composition is tensor contraction. Any partial tree can be compiled to
//! a vector in `S` by filling its open requirements with an underspecified
//! tensor, which lets a two-dimensional plausibility space (⊤/⊥) score
//! prefixes, pick word senses before the sentence ends, and rank candidate
//! continuations.
//!
//! ```
//! use dsvs::{lexicon::parse_lexicon, parser::parse_sequence};
//! use dsvs::interpreter::{compile_root, plausibility, UnderspecStrategy};
//!
//! let lex = parse_lexicon(r#"{
//!   "spaces": {"W": ["infant", "nappy", "pitch", "goal"], "S": ["true", "false"]},
//!   "map": {"entity": "W", "sentence": "S"},
//!   "senses": [
//!     {"id": "baby", "word": "baby", "forms": ["babies"], "type": "e", "tensor": [34, 10, 0, 0]},
//!     {"id": "vomit", "word": "vomit", "type": "et",
//!      "tensor": [[10, 2], [9, 3], [3, 9], [0, 12]]}
//!   ]
//! }"#).unwrap();
//! let state = parse_sequence(&["babies", "vomit"], &lex).unwrap();
//! let root = compile_root(&state.candidates[0].tree, UnderspecStrategy::Sum, &lex).unwrap();
//! let score = plausibility(&root.collapse()).unwrap();
//! assert_eq!((score.top, score.bottom), (430.0, 98.0));
//! ```

pub mod interpreter;
pub mod lexicon;
pub mod parser;
pub mod tensor;
pub mod tree;
pub mod types;

pub use interpreter::{
    compile_root, disambiguate, expect, plausibility, underspec_tensor, Compiled,
    PlausibilityScore, UnderspecStrategy,
};
pub use lexicon::{load_lexicon, save_lexicon, Lexicon, Sense};
pub use parser::{axiom, parse_sequence, parse_word, ParseError, ParseState};
pub use tensor::{
    contract, direct_sum, mu, sum_tensors, unit_tensor, Signature, Space, Tensor, TensorTuple,
};
pub use tree::{DSNode, DSTree};
pub use types::{DSType, TypeSpaceMap};
