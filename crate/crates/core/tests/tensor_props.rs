mod common;

use std::sync::Arc;

use common::*;
use dsvs::tensor::{
    contract, direct_sum, mu, sum_tensors, unit_tensor, Scalar, Signature, Space, Tensor,
};
use proptest::prelude::*;

fn pool() -> Vec<Arc<Space>> {
    vec![
        Space::new("A", ["a0", "a1"]).unwrap(),
        Space::new("B", ["b0", "b1", "b2"]).unwrap(),
        Space::new("C", ["c0"]).unwrap(),
        Space::new("D", ["d0", "d1", "d2", "d3"]).unwrap(),
    ]
}

fn signature(picks: &[usize]) -> Signature {
    let p = pool();
    Signature::new(picks.iter().map(|&i| p[i].clone()).collect())
}

fn tensor_on(sig: Signature) -> impl Strategy<Value = Tensor> {
    let n = sig.len();
    prop::collection::vec(-40i64..40, n)
        .prop_map(move |v| Tensor::from_ints(sig.clone(), v).unwrap())
}

fn any_signature() -> impl Strategy<Value = Signature> {
    prop::collection::vec(0usize..4, 1..=3).prop_map(|p| signature(&p))
}

/// Two tensors with `a`'s last slot and `b`'s first slot on the same space,
/// plus a third tensor shaped like `b`.
fn contractible() -> impl Strategy<Value = (Tensor, Tensor, Tensor)> {
    (
        prop::collection::vec(0usize..4, 0..=2),
        0usize..4,
        prop::collection::vec(0usize..4, 0..=2),
    )
        .prop_flat_map(|(pre, shared, post)| {
            let mut a = pre;
            a.push(shared);
            let mut b = vec![shared];
            b.extend(post);
            let (sa, sb) = (signature(&a), signature(&b));
            (tensor_on(sa), tensor_on(sb.clone()), tensor_on(sb))
        })
}

fn same_shape(k: usize) -> impl Strategy<Value = Vec<Tensor>> {
    any_signature().prop_flat_map(move |s| prop::collection::vec(tensor_on(s), k))
}

fn last_first(a: &Tensor) -> Vec<(usize, usize)> {
    vec![(a.rank() - 1, 0)]
}

proptest! {
    #[test]
    fn contraction_matches_nested_loops((a, b, _) in contractible()) {
        let got = contract(&a, &b, &last_first(&a)).unwrap();
        let (sig, want) = naive_contract(&a, &b, &last_first(&a));
        prop_assert_eq!(got.signature(), &sig);
        prop_assert_eq!(got.to_f64_vec(), want);
        prop_assert!(got.is_exact());
    }

    #[test]
    fn contraction_is_bilinear((a, b, c) in contractible(), k in -5i64..5) {
        let pairs = last_first(&a);
        let bc = sum_tensors(&[b.clone(), c.clone()]).unwrap();
        let lhs = contract(&a, &bc, &pairs).unwrap();
        let rhs = sum_tensors(&[contract(&a, &b, &pairs).unwrap(), contract(&a, &c, &pairs).unwrap()]).unwrap();
        prop_assert_eq!(lhs, rhs);
        let scaled = contract(&a, &b.scaled(Scalar::Int(k)), &pairs).unwrap();
        prop_assert_eq!(scaled, contract(&a, &b, &pairs).unwrap().scaled(Scalar::Int(k)));
    }

    #[test]
    fn sum_commutes_and_associates(ts in same_shape(3)) {
        let ab = sum_tensors(&ts[..2]).unwrap();
        let ba = sum_tensors(&[ts[1].clone(), ts[0].clone()]).unwrap();
        prop_assert_eq!(&ab, &ba);
        let left = sum_tensors(&[ab, ts[2].clone()]).unwrap();
        let right = sum_tensors(&[ts[0].clone(), sum_tensors(&ts[1..]).unwrap()]).unwrap();
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(left.as_ints().unwrap().to_vec(), naive_sum(&ts));
    }

    #[test]
    fn mu_commutes_associates_and_has_unit(ts in same_shape(3)) {
        let (a, b, c) = (&ts[0], &ts[1], &ts[2]);
        prop_assert_eq!(mu(a, b).unwrap(), mu(b, a).unwrap());
        prop_assert_eq!(
            mu(&mu(a, b).unwrap(), c).unwrap(),
            mu(a, &mu(b, c).unwrap()).unwrap()
        );
        let one = unit_tensor(a.signature()).unwrap();
        prop_assert_eq!(&mu(a, &one).unwrap(), a);
        let prod: Vec<i64> = a.as_ints().unwrap().iter().zip(b.as_ints().unwrap()).map(|(x, y)| x * y).collect();
        prop_assert_eq!(mu(a, b).unwrap().as_ints().unwrap().to_vec(), prod);
    }

    #[test]
    fn direct_sum_keeps_every_entry(ts in same_shape(4)) {
        let tup = direct_sum(&ts).unwrap();
        prop_assert_eq!(tup.components(), ts.as_slice());
        prop_assert_eq!(tup.sum(), sum_tensors(&ts).unwrap());
    }

    #[test]
    fn unit_is_all_ones(sig in any_signature()) {
        let u = unit_tensor(&sig).unwrap();
        prop_assert_eq!(u.len(), sig.len());
        prop_assert!(u.as_ints().unwrap().iter().all(|&x| x == 1));
    }
}

#[test]
fn mismatched_spaces_are_rejected() {
    let p = pool();
    let a = Tensor::zeros(Signature::new(vec![p[0].clone()]));
    let b = Tensor::zeros(Signature::new(vec![p[1].clone()]));
    assert!(contract(&a, &b, &[(0, 0)]).is_err());
    assert!(mu(&a, &b).is_err());
    assert!(sum_tensors(&[a.clone(), b.clone()]).is_err());
    assert!(sum_tensors(&[]).is_err());
    assert!(direct_sum(&[a, b]).is_err());
}
