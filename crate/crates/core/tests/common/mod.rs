#![allow(dead_code)]

use std::path::PathBuf;

use dsvs::lexicon::{load_lexicon, Lexicon};
use dsvs::tensor::{Signature, Tensor};

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

/// Merged-sense plausibility lexicon (4 nouns, vomit/score/dribble, control).
pub fn plausibility() -> Lexicon {
    load_lexicon(fixture("plausibility.lexicon")).expect("fixture loads")
}

/// Same inventory with dribble split into #drip and #control.
pub fn dribble_senses() -> Lexicon {
    load_lexicon(fixture("dribble_senses.lexicon")).expect("fixture loads")
}

/// mary, john, likes, sleeps, snores, who.
pub fn mary_john() -> Lexicon {
    load_lexicon(fixture("mary_john.lexicon")).expect("fixture loads")
}

pub fn words(s: &str) -> Vec<&str> {
    s.split_whitespace().collect()
}

pub fn tensor_of(lex: &Lexicon, id: &str) -> Tensor {
    lex.sense(id)
        .and_then(|s| s.tensor())
        .unwrap_or_else(|| panic!("no tensor for {id}"))
        .clone()
}

pub fn ints(t: &Tensor) -> Vec<i64> {
    t.as_ints().expect("exact tensor").to_vec()
}

/// Independent nested-loop contraction: walks every joint index of `a` and
/// `b`, keeps those that agree on the paired slots, and accumulates the
/// product into the output position built from the free indices.
pub fn naive_contract(a: &Tensor, b: &Tensor, pairs: &[(usize, usize)]) -> (Signature, Vec<f64>) {
    let da = a.signature().dims();
    let db = b.signature().dims();
    let free_a: Vec<usize> = (0..da.len())
        .filter(|s| !pairs.iter().any(|p| p.0 == *s))
        .collect();
    let free_b: Vec<usize> = (0..db.len())
        .filter(|s| !pairs.iter().any(|p| p.1 == *s))
        .collect();
    let out_dims: Vec<usize> = free_a
        .iter()
        .map(|&s| da[s])
        .chain(free_b.iter().map(|&s| db[s]))
        .collect();
    let out_len: usize = out_dims.iter().product();
    let mut out = vec![0.0; out_len];
    let av = a.to_f64_vec();
    let bv = b.to_f64_vec();
    for (ia, &x) in av.iter().enumerate() {
        let idx_a = unflatten(ia, &da);
        for (ib, &y) in bv.iter().enumerate() {
            let idx_b = unflatten(ib, &db);
            if pairs.iter().any(|&(p, q)| idx_a[p] != idx_b[q]) {
                continue;
            }
            let mut flat = 0;
            for (k, &i) in free_a
                .iter()
                .map(|&s| &idx_a[s])
                .chain(free_b.iter().map(|&s| &idx_b[s]))
                .enumerate()
            {
                flat = flat * out_dims[k] + i;
            }
            out[flat] += x * y;
        }
    }
    let spaces = free_a
        .iter()
        .map(|&s| a.signature().spaces()[s].clone())
        .chain(free_b.iter().map(|&s| b.signature().spaces()[s].clone()))
        .collect();
    (Signature::new(spaces), out)
}

fn unflatten(mut flat: usize, dims: &[usize]) -> Vec<usize> {
    let mut idx = vec![0; dims.len()];
    for k in (0..dims.len()).rev() {
        idx[k] = flat % dims[k];
        flat /= dims[k];
    }
    idx
}

/// Entrywise sum computed label by label, independent of `sum_tensors`.
pub fn naive_sum(ts: &[Tensor]) -> Vec<i64> {
    let mut out = vec![0i64; ts[0].len()];
    for t in ts {
        for (o, v) in out.iter_mut().zip(t.as_ints().unwrap()) {
            *o += v;
        }
    }
    out
}
