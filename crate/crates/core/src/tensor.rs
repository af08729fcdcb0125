//! Dense tensors over labelled finite-dimensional spaces.
//!
//! Every tensor carries a [`Signature`], the ordered list of spaces its slots
//! range over. Entries are stored row-major with slot 0 outermost, so a
//! `W ⊗ S` matrix is laid out as one `S` row per `W` basis vector.
//!
//! Storage is always dense. Every operation costs `O(∏ dims)` of its operands
//! (contraction costs the product of the free extents times the paired
//! extents), which is fine for the handful of small spaces this crate is meant
//! for and would not be for wide embedding spaces.
//!
//! Integer entries are kept exact. Operations on two integer tensors produce an
//! integer tensor unless an intermediate overflows `i64`, in which case the
//! result is recomputed in `f64`. Any float operand forces the float path.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TensorError {
    #[error("space mismatch on contracted pair ({left_slot}, {right_slot}): {left} vs {right}")]
    SpaceMismatch {
        left_slot: usize,
        right_slot: usize,
        left: String,
        right: String,
    },
    #[error("slot {slot} out of range for tensor of rank {rank}")]
    SlotOutOfRange { slot: usize, rank: usize },
    #[error("slot {slot} used more than once in contraction pairs")]
    DuplicateSlot { slot: usize },
    #[error("signature mismatch: {expected} vs {found}")]
    SignatureMismatch { expected: String, found: String },
    #[error("empty tensor list")]
    EmptyList,
    #[error("empty signature has no unit tensor")]
    EmptySignature,
    #[error("expected {expected} entries for signature {signature}, got {found}")]
    ShapeMismatch {
        signature: String,
        expected: usize,
        found: usize,
    },
    #[error("invalid space {name:?}: {reason}")]
    InvalidSpace { name: String, reason: String },
}

/// A named vector space with an ordered, labelled basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Space {
    name: String,
    labels: Vec<String>,
}

impl Space {
    pub fn new<S: Into<String>>(
        name: impl Into<String>,
        labels: impl IntoIterator<Item = S>,
    ) -> Result<Arc<Space>, TensorError> {
        let name = name.into();
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(TensorError::InvalidSpace {
                name,
                reason: "dimension must be at least 1".into(),
            });
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(TensorError::InvalidSpace {
                    name,
                    reason: format!("duplicate basis label {l:?}"),
                });
            }
        }
        Ok(Arc::new(Space { name, labels }))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// Ordered list of spaces. The empty signature is the scalar signature.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Signature(Vec<Arc<Space>>);

impl Signature {
    pub fn new(spaces: Vec<Arc<Space>>) -> Self {
        Signature(spaces)
    }

    pub fn scalar() -> Self {
        Signature(Vec::new())
    }

    pub fn spaces(&self) -> &[Arc<Space>] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.0.iter().map(|s| s.dim()).collect()
    }

    /// Number of entries a dense tensor of this signature holds.
    pub fn len(&self) -> usize {
        self.0.iter().map(|s| s.dim()).product()
    }

    pub fn concat(&self, other: &Signature) -> Signature {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Signature(v)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let names: Vec<&str> = self.0.iter().map(|s| s.name()).collect();
        f.write_str(&names.join(" ⊗ "))
    }
}

impl From<Vec<Arc<Space>>> for Signature {
    fn from(v: Vec<Arc<Space>>) -> Self {
        Signature(v)
    }
}

/// A single tensor entry, exact or floating.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Scalar {
    Int(i64),
    Float(f64),
}

impl Scalar {
    pub fn as_f64(self) -> f64 {
        match self {
            Scalar::Int(i) => i as f64,
            Scalar::Float(x) => x,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Int(i) => write!(f, "{i}"),
            Scalar::Float(x) => write!(f, "{x}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Entries {
    Int(Vec<i64>),
    Float(Vec<f64>),
}

impl Entries {
    fn len(&self) -> usize {
        match self {
            Entries::Int(v) => v.len(),
            Entries::Float(v) => v.len(),
        }
    }

    fn to_f64(&self) -> Vec<f64> {
        match self {
            Entries::Int(v) => v.iter().map(|&i| i as f64).collect(),
            Entries::Float(v) => v.clone(),
        }
    }
}

/// Arithmetic used by the shared kernels. Integer ops report overflow.
trait Element: Copy {
    const ZERO: Self;
    fn add(self, o: Self) -> Option<Self>;
    fn mul(self, o: Self) -> Option<Self>;
}

impl Element for i64 {
    const ZERO: Self = 0;
    fn add(self, o: Self) -> Option<Self> {
        self.checked_add(o)
    }
    fn mul(self, o: Self) -> Option<Self> {
        self.checked_mul(o)
    }
}

impl Element for f64 {
    const ZERO: Self = 0.0;
    fn add(self, o: Self) -> Option<Self> {
        Some(self + o)
    }
    fn mul(self, o: Self) -> Option<Self> {
        Some(self * o)
    }
}

/// Dense tensor with a space signature.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor {
    signature: Signature,
    entries: Entries,
}

impl Tensor {
    pub fn from_ints(signature: Signature, entries: Vec<i64>) -> Result<Tensor, TensorError> {
        Self::checked(signature, Entries::Int(entries))
    }

    pub fn from_floats(signature: Signature, entries: Vec<f64>) -> Result<Tensor, TensorError> {
        Self::checked(signature, Entries::Float(entries))
    }

    pub fn from_entries(signature: Signature, entries: Entries) -> Result<Tensor, TensorError> {
        Self::checked(signature, entries)
    }

    fn checked(signature: Signature, entries: Entries) -> Result<Tensor, TensorError> {
        let expected = signature.len();
        if entries.len() != expected {
            return Err(TensorError::ShapeMismatch {
                signature: signature.to_string(),
                expected,
                found: entries.len(),
            });
        }
        Ok(Tensor { signature, entries })
    }

    pub fn zeros(signature: Signature) -> Tensor {
        let n = signature.len();
        Tensor {
            signature,
            entries: Entries::Int(vec![0; n]),
        }
    }

    pub fn scalar(value: i64) -> Tensor {
        Tensor {
            signature: Signature::scalar(),
            entries: Entries::Int(vec![value]),
        }
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn rank(&self) -> usize {
        self.signature.rank()
    }

    pub fn entries(&self) -> &Entries {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.len() == 0
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.entries, Entries::Int(_))
    }

    /// Integer entries, when the tensor is on the exact path.
    pub fn as_ints(&self) -> Option<&[i64]> {
        match &self.entries {
            Entries::Int(v) => Some(v),
            Entries::Float(_) => None,
        }
    }

    pub fn to_f64_vec(&self) -> Vec<f64> {
        self.entries.to_f64()
    }

    pub fn at(&self, flat: usize) -> Scalar {
        match &self.entries {
            Entries::Int(v) => Scalar::Int(v[flat]),
            Entries::Float(v) => Scalar::Float(v[flat]),
        }
    }

    pub fn get(&self, index: &[usize]) -> Option<Scalar> {
        let dims = self.signature.dims();
        if index.len() != dims.len() {
            return None;
        }
        let mut flat = 0;
        for (&i, &d) in index.iter().zip(&dims) {
            if i >= d {
                return None;
            }
            flat = flat * d + i;
        }
        Some(self.at(flat))
    }

    /// Entry addressed by basis labels, one per slot.
    pub fn get_labelled(&self, labels: &[&str]) -> Option<Scalar> {
        let idx: Option<Vec<usize>> = self
            .signature
            .spaces()
            .iter()
            .zip(labels)
            .map(|(s, l)| s.index_of(l))
            .collect();
        idx.and_then(|i| self.get(&i))
    }

    /// Same entries viewed as floats.
    pub fn to_float(&self) -> Tensor {
        Tensor {
            signature: self.signature.clone(),
            entries: Entries::Float(self.entries.to_f64()),
        }
    }

    pub fn scaled(&self, factor: Scalar) -> Tensor {
        let entries = match (&self.entries, factor) {
            (Entries::Int(v), Scalar::Int(k)) => {
                let exact: Option<Vec<i64>> = v.iter().map(|&x| x.checked_mul(k)).collect();
                match exact {
                    Some(v) => Entries::Int(v),
                    None => Entries::Float(v.iter().map(|&x| x as f64 * k as f64).collect()),
                }
            }
            (e, k) => {
                let k = k.as_f64();
                Entries::Float(e.to_f64().into_iter().map(|x| x * k).collect())
            }
        };
        Tensor {
            signature: self.signature.clone(),
            entries,
        }
    }
}

impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.signature)?;
        f.write_str(" [")?;
        for i in 0..self.len() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", self.at(i))?;
        }
        f.write_str("]")
    }
}

/// Ordered tuple of same-signature tensors, the direct sum of its components.
#[derive(Debug, Clone, PartialEq)]
pub struct TensorTuple {
    components: Vec<Tensor>,
}

impl TensorTuple {
    pub fn new(components: Vec<Tensor>) -> Result<TensorTuple, TensorError> {
        let first = components.first().ok_or(TensorError::EmptyList)?;
        check_same_signature(first.signature(), &components)?;
        Ok(TensorTuple { components })
    }

    pub fn components(&self) -> &[Tensor] {
        &self.components
    }

    pub fn into_components(self) -> Vec<Tensor> {
        self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn signature(&self) -> &Signature {
        self.components[0].signature()
    }

    /// Collapses the tuple to the entrywise sum of its components.
    pub fn sum(&self) -> Tensor {
        sum_tensors(&self.components).expect("tuple components share a signature")
    }
}

fn check_same_signature(expected: &Signature, ts: &[Tensor]) -> Result<(), TensorError> {
    for t in ts {
        if t.signature() != expected {
            return Err(TensorError::SignatureMismatch {
                expected: expected.to_string(),
                found: t.signature().to_string(),
            });
        }
    }
    Ok(())
}

fn strides(dims: &[usize]) -> Vec<usize> {
    let mut s = vec![1; dims.len()];
    for i in (0..dims.len().saturating_sub(1)).rev() {
        s[i] = s[i + 1] * dims[i + 1];
    }
    s
}

/// Precomputed index bookkeeping for one contraction.
struct ContractionPlan {
    out_len: usize,
    paired_len: usize,
    // per output entry
    a_base: Vec<usize>,
    b_base: Vec<usize>,
    // per paired index combination
    a_pair: Vec<usize>,
    b_pair: Vec<usize>,
}

fn offsets(dims: &[usize], slots: &[usize], str_: &[usize]) -> Vec<usize> {
    let sub_dims: Vec<usize> = slots.iter().map(|&s| dims[s]).collect();
    let n: usize = sub_dims.iter().product();
    let mut out = Vec::with_capacity(n);
    let mut idx = vec![0usize; slots.len()];
    for _ in 0..n {
        out.push(idx.iter().zip(slots).map(|(&i, &s)| i * str_[s]).sum());
        for k in (0..idx.len()).rev() {
            idx[k] += 1;
            if idx[k] < sub_dims[k] {
                break;
            }
            idx[k] = 0;
        }
    }
    out
}

fn contract_kernel<T: Element>(a: &[T], b: &[T], plan: &ContractionPlan) -> Option<Vec<T>> {
    let mut out = Vec::with_capacity(plan.out_len);
    for o in 0..plan.out_len {
        let (ab, bb) = (plan.a_base[o], plan.b_base[o]);
        let mut acc = T::ZERO;
        for p in 0..plan.paired_len {
            let prod = a[ab + plan.a_pair[p]].mul(b[bb + plan.b_pair[p]])?;
            acc = acc.add(prod)?;
        }
        out.push(acc);
    }
    Some(out)
}

/// Contracts `a` with `b` over the given `(slot in a, slot in b)` pairs.
///
/// The result signature is the unpaired slots of `a` in order followed by the
/// unpaired slots of `b` in order. An empty pair list gives the outer product.
pub fn contract(a: &Tensor, b: &Tensor, pairs: &[(usize, usize)]) -> Result<Tensor, TensorError> {
    let (ra, rb) = (a.rank(), b.rank());
    let mut used_a = vec![false; ra];
    let mut used_b = vec![false; rb];
    for &(sa, sb) in pairs {
        if sa >= ra {
            return Err(TensorError::SlotOutOfRange { slot: sa, rank: ra });
        }
        if sb >= rb {
            return Err(TensorError::SlotOutOfRange { slot: sb, rank: rb });
        }
        if used_a[sa] {
            return Err(TensorError::DuplicateSlot { slot: sa });
        }
        if used_b[sb] {
            return Err(TensorError::DuplicateSlot { slot: sb });
        }
        used_a[sa] = true;
        used_b[sb] = true;
        let (left, right) = (&a.signature.spaces()[sa], &b.signature.spaces()[sb]);
        if left != right {
            return Err(TensorError::SpaceMismatch {
                left_slot: sa,
                right_slot: sb,
                left: left.name().to_string(),
                right: right.name().to_string(),
            });
        }
    }

    let free_a: Vec<usize> = (0..ra).filter(|&s| !used_a[s]).collect();
    let free_b: Vec<usize> = (0..rb).filter(|&s| !used_b[s]).collect();
    let pa: Vec<usize> = pairs.iter().map(|p| p.0).collect();
    let pb: Vec<usize> = pairs.iter().map(|p| p.1).collect();

    let (da, db) = (a.signature.dims(), b.signature.dims());
    let (sa, sb) = (strides(&da), strides(&db));

    let fa = offsets(&da, &free_a, &sa);
    let fb = offsets(&db, &free_b, &sb);
    let mut a_base = Vec::with_capacity(fa.len() * fb.len());
    let mut b_base = Vec::with_capacity(fa.len() * fb.len());
    for &x in &fa {
        for &y in &fb {
            a_base.push(x);
            b_base.push(y);
        }
    }
    let a_pair = offsets(&da, &pa, &sa);
    let b_pair = offsets(&db, &pb, &sb);
    let plan = ContractionPlan {
        out_len: a_base.len(),
        paired_len: a_pair.len(),
        a_base,
        b_base,
        a_pair,
        b_pair,
    };

    let signature = Signature::new(
        free_a
            .iter()
            .map(|&s| a.signature.spaces()[s].clone())
            .chain(free_b.iter().map(|&s| b.signature.spaces()[s].clone()))
            .collect(),
    );

    let entries = match (&a.entries, &b.entries) {
        (Entries::Int(x), Entries::Int(y)) => match contract_kernel(x, y, &plan) {
            Some(v) => Entries::Int(v),
            None => Entries::Float(
                contract_kernel(&a.entries.to_f64(), &b.entries.to_f64(), &plan)
                    .expect("float kernel is total"),
            ),
        },
        _ => Entries::Float(
            contract_kernel(&a.entries.to_f64(), &b.entries.to_f64(), &plan)
                .expect("float kernel is total"),
        ),
    };
    Ok(Tensor { signature, entries })
}

fn zip_entries(
    a: &Entries,
    b: &Entries,
    int_op: fn(i64, i64) -> Option<i64>,
    float_op: fn(f64, f64) -> f64,
) -> Entries {
    if let (Entries::Int(x), Entries::Int(y)) = (a, b) {
        let exact: Option<Vec<i64>> = x.iter().zip(y).map(|(&p, &q)| int_op(p, q)).collect();
        if let Some(v) = exact {
            return Entries::Int(v);
        }
    }
    let (x, y) = (a.to_f64(), b.to_f64());
    Entries::Float(x.iter().zip(&y).map(|(&p, &q)| float_op(p, q)).collect())
}

/// Entrywise sum of same-signature tensors.
pub fn sum_tensors(ts: &[Tensor]) -> Result<Tensor, TensorError> {
    let first = ts.first().ok_or(TensorError::EmptyList)?;
    check_same_signature(first.signature(), ts)?;
    let mut entries = first.entries.clone();
    for t in &ts[1..] {
        entries = zip_entries(&entries, &t.entries, i64::checked_add, |p, q| p + q);
    }
    Ok(Tensor {
        signature: first.signature.clone(),
        entries,
    })
}

/// Keeps the tensors apart as an ordered tuple. No arithmetic is performed.
pub fn direct_sum(ts: &[Tensor]) -> Result<TensorTuple, TensorError> {
    TensorTuple::new(ts.to_vec())
}

/// The all-ones tensor of a non-empty signature.
pub fn unit_tensor(signature: &Signature) -> Result<Tensor, TensorError> {
    if signature.is_empty() {
        return Err(TensorError::EmptySignature);
    }
    let n = signature.len();
    Ok(Tensor {
        signature: signature.clone(),
        entries: Entries::Int(vec![1; n]),
    })
}

/// Frobenius multiplication: entrywise product in the distinguished basis.
pub fn mu(a: &Tensor, b: &Tensor) -> Result<Tensor, TensorError> {
    if a.signature != b.signature {
        return Err(TensorError::SignatureMismatch {
            expected: a.signature.to_string(),
            found: b.signature.to_string(),
        });
    }
    Ok(Tensor {
        signature: a.signature.clone(),
        entries: zip_entries(&a.entries, &b.entries, i64::checked_mul, |p, q| p * q),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w() -> Arc<Space> {
        Space::new("W", ["infant", "nappy", "pitch", "goal"]).unwrap()
    }

    fn s() -> Arc<Space> {
        Space::new("S", ["true", "false"]).unwrap()
    }

    fn vomit() -> Tensor {
        Tensor::from_ints(
            Signature::new(vec![w(), s()]),
            vec![10, 2, 9, 3, 3, 9, 0, 12],
        )
        .unwrap()
    }

    fn vec_w(v: [i64; 4]) -> Tensor {
        Tensor::from_ints(Signature::new(vec![w()]), v.to_vec()).unwrap()
    }

    fn control_cube() -> Tensor {
        let sig = Signature::new(vec![w(), s(), w()]);
        let mut e = vec![0i64; sig.len()];
        for i in [2usize, 3] {
            for k in [2usize, 3] {
                e[i * 8 + k] = 1;
            }
        }
        Tensor::from_ints(sig, e).unwrap()
    }

    #[test]
    fn space_rejects_duplicates_and_empty() {
        assert!(Space::new("X", ["a", "a"]).is_err());
        assert!(Space::new("X", Vec::<String>::new()).is_err());
    }

    #[test]
    fn babies_vomit() {
        let r = contract(&vec_w([34, 10, 0, 0]), &vomit(), &[(0, 0)]).unwrap();
        assert_eq!(r.signature(), &Signature::new(vec![s()]));
        assert_eq!(r.as_ints(), Some(&[430, 98][..]));
    }

    #[test]
    fn identity_contraction() {
        let sig = Signature::new(vec![w(), w()]);
        let mut e = vec![0; 16];
        for i in 0..4 {
            e[i * 5] = 1;
        }
        let id = Tensor::from_ints(sig, e).unwrap();
        let v = vec_w([3, -1, 7, 2]);
        assert_eq!(contract(&v, &id, &[(0, 0)]).unwrap(), v);
    }

    #[test]
    fn control_footballer_ball() {
        let cube = control_cube();
        let obj = contract(&cube, &vec_w([0, 1, 27, 49]), &[(2, 0)]).unwrap();
        let r = contract(&vec_w([0, 0, 11, 52]), &obj, &[(0, 0)]).unwrap();
        assert_eq!(r.as_ints(), Some(&[4788, 0][..]));
    }

    #[test]
    fn contract_errors() {
        let v = vec_w([1, 0, 0, 0]);
        assert!(matches!(
            contract(&v, &vomit(), &[(0, 1)]),
            Err(TensorError::SpaceMismatch { .. })
        ));
        assert!(matches!(
            contract(&v, &vomit(), &[(1, 0)]),
            Err(TensorError::SlotOutOfRange { slot: 1, rank: 1 })
        ));
        assert!(matches!(
            contract(&control_cube(), &control_cube(), &[(0, 0), (0, 2)]),
            Err(TensorError::DuplicateSlot { slot: 0 })
        ));
    }

    #[test]
    fn outer_product_when_no_pairs() {
        let a = Tensor::from_ints(Signature::new(vec![s()]), vec![2, 3]).unwrap();
        let r = contract(&a, &a, &[]).unwrap();
        assert_eq!(r.as_ints(), Some(&[4, 6, 6, 9][..]));
        assert_eq!(r.rank(), 2);
    }

    #[test]
    fn overflow_falls_back_to_float() {
        let a = Tensor::from_ints(Signature::new(vec![s()]), vec![i64::MAX, 1]).unwrap();
        let r = contract(&a, &a, &[(0, 0)]).unwrap();
        assert!(!r.is_exact());
        let f = r.to_f64_vec()[0];
        assert!((f - (i64::MAX as f64).powi(2)).abs() / f < 1e-12);
    }

    #[test]
    fn sum_and_direct_sum() {
        let score =
            Tensor::from_ints(vomit().signature().clone(), vec![1, 7, 0, 8, 7, 1, 8, 0]).unwrap();
        let dribble = Tensor::from_ints(
            vomit().signature().clone(),
            vec![22, 2, 21, 3, 14, 10, 16, 8],
        )
        .unwrap();
        let total = sum_tensors(&[vomit(), score.clone(), dribble.clone()]).unwrap();
        assert_eq!(
            total.get_labelled(&["infant", "true"]),
            Some(Scalar::Int(33))
        );
        let z = Tensor::zeros(vomit().signature().clone());
        assert_eq!(sum_tensors(&[vomit(), z]).unwrap(), vomit());

        let tup = direct_sum(&[vomit(), score]).unwrap();
        assert_eq!(tup.len(), 2);
        assert_eq!(tup.components()[0], vomit());
        assert_eq!(direct_sum(&[dribble]).unwrap().len(), 1);

        assert_eq!(sum_tensors(&[]), Err(TensorError::EmptyList));
        assert!(direct_sum(&[]).is_err());
        assert!(matches!(
            sum_tensors(&[vomit(), vec_w([0; 4])]),
            Err(TensorError::SignatureMismatch { .. })
        ));
    }

    #[test]
    fn unit_tensors() {
        assert_eq!(
            unit_tensor(&Signature::new(vec![s()])).unwrap().as_ints(),
            Some(&[1, 1][..])
        );
        let u = unit_tensor(&Signature::new(vec![w(), s()])).unwrap();
        assert_eq!(u.as_ints().unwrap(), &[1; 8]);
        let r = contract(&vec_w([34, 10, 0, 0]), &u, &[(0, 0)]).unwrap();
        assert_eq!(r.as_ints(), Some(&[44, 44][..]));
        assert_eq!(
            unit_tensor(&Signature::scalar()),
            Err(TensorError::EmptySignature)
        );
    }

    #[test]
    fn mu_entrywise() {
        let sig = Signature::new(vec![s()]);
        let a = Tensor::from_ints(sig.clone(), vec![2, 3]).unwrap();
        let b = Tensor::from_ints(sig.clone(), vec![5, 7]).unwrap();
        assert_eq!(mu(&a, &b).unwrap().as_ints(), Some(&[10, 21][..]));
        assert_eq!(mu(&a, &unit_tensor(&sig).unwrap()).unwrap(), a);
        assert!(mu(&a, &vec_w([0; 4])).is_err());
    }

    #[test]
    fn shape_is_checked() {
        assert!(matches!(
            Tensor::from_ints(Signature::new(vec![w()]), vec![1, 2]),
            Err(TensorError::ShapeMismatch {
                expected: 4,
                found: 2,
                ..
            })
        ));
    }
}
