mod common;

use common::*;
use dsvs::interpreter::{
    compile_root, disambiguate, expect, inventory, plausibility as score_of, score_tree,
    underspec_tensor, Compiled, InterpretError, Outcome, PlausibilityScore, UnderspecStrategy,
};
use dsvs::parser::{axiom, parse_sequence};
use dsvs::tensor::{Signature, Tensor};
use dsvs::types::DSType;
use dsvs::Lexicon;

use UnderspecStrategy::{DirectSum, Sum, Unit};

fn sig(lex: &Lexicon, ty: DSType) -> Signature {
    lex.type_space_map().signature_of(&ty)
}

fn root(lex: &Lexicon, sentence: &str, strategy: UnderspecStrategy) -> Compiled {
    let state = parse_sequence(&words(sentence), lex).unwrap();
    assert_eq!(state.candidates.len(), 1, "{sentence}");
    compile_root(&state.candidates[0].tree, strategy, lex).unwrap()
}

/// Control cube applied to an object, by nested loops.
fn control_on(lex: &Lexicon, noun: &str) -> Tensor {
    let (s, v) = naive_contract(&tensor_of(lex, "control"), &tensor_of(lex, noun), &[(2, 0)]);
    Tensor::from_ints(s, v.into_iter().map(|x| x as i64).collect()).unwrap()
}

fn seven_terms(lex: &Lexicon) -> Vec<Tensor> {
    vec![
        tensor_of(lex, "vomit"),
        tensor_of(lex, "score"),
        tensor_of(lex, "dribble"),
        control_on(lex, "baby"),
        control_on(lex, "milk"),
        control_on(lex, "footballer"),
        control_on(lex, "ball"),
    ]
}

#[test]
fn sum_underspec_is_the_seven_term_sum() {
    let lex = plausibility();
    let ws = sig(&lex, DSType::predicate());
    let Compiled::Single(t) = underspec_tensor(&ws, Sum, &lex).unwrap() else {
        panic!("sum gives one tensor");
    };
    let expected = naive_sum(&seven_terms(&lex));
    assert_eq!(ints(&t), expected);
    // rows infant, nappy, pitch, goal
    assert_eq!(expected, vec![33, 11, 30, 14, 163, 20, 163, 20]);
    let labels: Vec<String> = inventory(&ws, &lex)
        .unwrap()
        .into_iter()
        .map(|i| i.label)
        .collect();
    assert_eq!(
        labels,
        [
            "vomit",
            "score",
            "dribble",
            "control·baby",
            "control·milk",
            "control·footballer",
            "control·ball"
        ]
    );
}

#[test]
fn direct_sum_underspec_keeps_components() {
    let lex = plausibility();
    let ws = sig(&lex, DSType::predicate());
    let Compiled::Tuple(tup) = underspec_tensor(&ws, DirectSum, &lex).unwrap() else {
        panic!("direct sum gives a tuple");
    };
    assert_eq!(tup.components(), seven_terms(&lex).as_slice());
    let Compiled::Single(sum) = underspec_tensor(&ws, Sum, &lex).unwrap() else {
        unreachable!()
    };
    assert_eq!(tup.sum(), sum);
}

#[test]
fn unit_underspec() {
    let lex = plausibility();
    let s = sig(&lex, DSType::T);
    assert_eq!(
        underspec_tensor(&s, Unit, &lex)
            .unwrap()
            .collapse()
            .as_ints(),
        Some(&[1, 1][..])
    );
}

#[test]
fn uninhabited_signature() {
    let lex = plausibility();
    let w = lex.type_space_map().entity.clone();
    let ww = Signature::new(vec![w.clone(), w]);
    assert!(matches!(
        underspec_tensor(&ww, Sum, &lex),
        Err(InterpretError::NoInhabitants { .. })
    ));
    assert!(matches!(
        underspec_tensor(&ww, DirectSum, &lex),
        Err(InterpretError::NoInhabitants { .. })
    ));
    assert!(underspec_tensor(&ww, Unit, &lex).is_ok());
}

#[test]
fn complete_sentence_ignores_strategy() {
    let lex = plausibility();
    for strategy in UnderspecStrategy::ALL {
        assert_eq!(
            ints(&root(&lex, "babies vomit", strategy).collapse()),
            vec![430, 98]
        );
    }
}

#[test]
fn partial_babies_under_sum() {
    let lex = plausibility();
    let partial = root(&lex, "babies", Sum).collapse();
    // 34·(33, 11) + 10·(30, 14)
    assert_eq!(ints(&partial), vec![1422, 514]);
    let (_, oracle) = naive_contract(
        &tensor_of(&lex, "baby"),
        &Tensor::from_ints(
            sig(&lex, DSType::predicate()),
            naive_sum(&seven_terms(&lex)),
        )
        .unwrap(),
        &[(0, 0)],
    );
    assert_eq!(oracle, vec![1422.0, 514.0]);
}

#[test]
fn axiom_compiles_under_every_strategy() {
    let lex = plausibility();
    let tree = &axiom().candidates[0].tree;
    assert_eq!(
        ints(&compile_root(tree, Unit, &lex).unwrap().collapse()),
        vec![1, 1]
    );
    // ?t alone: every intransitive verb applied to every noun
    let mut expected = [0i64; 2];
    for v in ["vomit", "score", "dribble"] {
        for n in ["baby", "milk", "footballer", "ball"] {
            let (_, r) = naive_contract(&tensor_of(&lex, n), &tensor_of(&lex, v), &[(0, 0)]);
            expected[0] += r[0] as i64;
            expected[1] += r[1] as i64;
        }
    }
    assert_eq!(
        ints(&compile_root(tree, Sum, &lex).unwrap().collapse()),
        expected.to_vec()
    );
    let tup = compile_root(tree, DirectSum, &lex).unwrap();
    assert_eq!(tup.components().len(), 12);
    assert_eq!(ints(&tup.collapse()), expected.to_vec());
}

#[test]
fn plausibility_readings() {
    let s = |a: i64, b: i64| {
        let lex = plausibility();
        Tensor::from_ints(sig(&lex, DSType::T), vec![a, b]).unwrap()
    };
    let p = score_of(&s(430, 98)).unwrap();
    assert_eq!((p.top, p.bottom), (430.0, 98.0));
    assert!((p.ratio - 430.0 / 528.0).abs() < 1e-15);
    assert!((p.ratio - 0.8144).abs() < 5e-5);
    let q = score_of(&s(34, 318)).unwrap();
    assert!((q.ratio - 0.0966).abs() < 5e-5);
    assert_eq!(score_of(&s(0, 0)).unwrap().ratio, 0.5);
    let lex = plausibility();
    assert!(matches!(
        score_of(&tensor_of(&lex, "baby")),
        Err(InterpretError::NotSentenceVector(_))
    ));
    assert_eq!(PlausibilityScore::new(0.0, 0.0).ratio, 0.5);
}

#[test]
fn babies_control_balls_is_zero() {
    let lex = plausibility();
    let r = root(&lex, "babies control balls", Sum).collapse();
    assert_eq!(ints(&r), vec![0, 0]);
    assert_eq!(score_of(&r).unwrap().ratio, 0.5);
}

#[test]
fn footballers_control_balls_matches_nested_loops() {
    let lex = plausibility();
    let r = root(&lex, "footballers control balls", Sum).collapse();
    let (_, vp) = naive_contract(
        &tensor_of(&lex, "control"),
        &tensor_of(&lex, "ball"),
        &[(2, 0)],
    );
    let vp = Tensor::from_floats(sig(&lex, DSType::predicate()), vp).unwrap();
    let (_, oracle) = naive_contract(&tensor_of(&lex, "footballer"), &vp, &[(0, 0)]);
    assert_eq!(r.to_f64_vec(), oracle);
    assert_eq!(ints(&r), vec![4788, 0]);
}

#[test]
fn sum_root_equals_direct_sum_components_on_every_prefix() {
    for (lex, sentences) in [
        (
            plausibility(),
            vec!["babies control balls", "footballers dribble", "milk score"],
        ),
        (
            dribble_senses(),
            vec!["footballers dribble ball", "babies dribble milk"],
        ),
        (
            mary_john(),
            vec![
                "mary who sleeps snores",
                "john likes mary",
                "mary who snores likes john",
            ],
        ),
    ] {
        for s in sentences {
            let ws = words(s);
            for k in 0..=ws.len() {
                let state = parse_sequence(&ws[..k], &lex).unwrap();
                for c in &state.candidates {
                    let sum = compile_root(&c.tree, Sum, &lex).unwrap();
                    let tup = compile_root(&c.tree, DirectSum, &lex).unwrap();
                    assert_eq!(sum.collapse(), tup.collapse(), "{s} / {k}");
                    if c.tree.is_complete() {
                        let unit = compile_root(&c.tree, Unit, &lex).unwrap();
                        assert_eq!(unit, sum);
                        assert_eq!(tup, sum);
                    }
                }
            }
        }
    }
}

#[test]
fn partial_score_is_a_weighted_average_of_completions() {
    let lex = plausibility();
    let partial = root(&lex, "babies", Sum).collapse();
    let terms = seven_terms(&lex);
    let per_term: Vec<Tensor> = terms
        .iter()
        .map(|t| {
            let (s, v) = naive_contract(&tensor_of(&lex, "baby"), t, &[(0, 0)]);
            Tensor::from_ints(s, v.into_iter().map(|x| x as i64).collect()).unwrap()
        })
        .collect();
    assert_eq!(ints(&partial), naive_sum(&per_term));
    let r = score_of(&partial).unwrap().ratio;
    let vomit = score_of(&root(&lex, "babies vomit", Sum).collapse())
        .unwrap()
        .ratio;
    let score = score_of(&root(&lex, "babies score", Sum).collapse())
        .unwrap()
        .ratio;
    assert!(score < r && r < vomit, "{score} < {r} < {vomit}");
}

#[test]
fn direct_sum_component_scores_are_reported() {
    let lex = plausibility();
    let state = parse_sequence(&words("babies"), &lex).unwrap();
    let s = score_tree(&state.candidates[0].tree, DirectSum, &lex).unwrap();
    assert_eq!(s.components.len(), 7);
    assert_eq!((s.components[0].top, s.components[0].bottom), (430.0, 98.0));
    assert_eq!((s.components[1].top, s.components[1].bottom), (34.0, 318.0));
    assert_eq!(ints(&s.root), vec![1422, 514]);
}

fn ranking(lex: &Lexicon, sentence: &str) -> Vec<String> {
    let state = parse_sequence(&words(sentence), lex).unwrap();
    disambiguate(&state, Sum, lex)
        .unwrap()
        .into_iter()
        .map(|r| r.history.last().unwrap().clone())
        .collect()
}

#[test]
fn dribble_is_disambiguated_by_its_subject() {
    let lex = dribble_senses();
    assert_eq!(
        ranking(&lex, "footballers dribble"),
        ["dribble#control", "dribble#drip"]
    );
    assert_eq!(
        ranking(&lex, "babies dribble"),
        ["dribble#drip", "dribble#control"]
    );
    assert_eq!(ranking(&lex, "babies vomit"), ["vomit"]);
}

#[test]
fn disambiguation_holds_under_every_strategy() {
    let lex = dribble_senses();
    for strategy in UnderspecStrategy::ALL {
        let state = parse_sequence(&words("footballers dribble"), &lex).unwrap();
        let r = disambiguate(&state, strategy, &lex).unwrap();
        assert_eq!(r[0].history[1], "dribble#control", "{strategy}");
        let state = parse_sequence(&words("babies dribble"), &lex).unwrap();
        let r = disambiguate(&state, strategy, &lex).unwrap();
        assert_eq!(r[0].history[1], "dribble#drip", "{strategy}");
    }
}

#[test]
fn expected_continuations() {
    let lex = dribble_senses();
    let state = parse_sequence(&words("footballers dribble#control"), &lex).unwrap();
    let ranked = expect(&state, &["milk", "ball"], Sum, &lex).unwrap();
    let order: Vec<&str> = ranked.iter().map(|e| e.word.as_str()).collect();
    assert_eq!(order, ["ball", "milk"]);
    assert_eq!(ranked[0].score().unwrap().top, 4788.0);

    let lex = plausibility();
    let state = parse_sequence(&words("babies"), &lex).unwrap();
    let ranked = expect(&state, &["score", "vomit"], Sum, &lex).unwrap();
    assert_eq!(ranked[0].word, "vomit");
    assert_eq!(ranked[0].score().unwrap().ratio, 430.0 / 528.0);
    assert_eq!(ranked[1].score().unwrap().ratio, 34.0 / 352.0);

    assert!(expect::<&str>(&state, &[], Sum, &lex).unwrap().is_empty());
}

#[test]
fn expect_marks_dead_ends_and_rejects_unknown_words() {
    let lex = plausibility();
    let state = parse_sequence(&words("babies"), &lex).unwrap();
    let ranked = expect(&state, &["milk", "vomit"], Sum, &lex).unwrap();
    assert_eq!(ranked[0].word, "vomit");
    assert_eq!(ranked[1].outcome, Outcome::DeadEnd);
    assert!(matches!(
        expect(&state, &["zebra"], Sum, &lex),
        Err(InterpretError::Parse(dsvs::ParseError::LexiconMiss { .. }))
    ));
}

#[test]
fn expect_over_both_dribble_readings() {
    let lex = dribble_senses();
    let state = parse_sequence(&words("footballers dribble"), &lex).unwrap();
    // only the transitive reading can take an object
    let ranked = expect(&state, &["ball", "milk"], Sum, &lex).unwrap();
    assert_eq!(ranked[0].word, "ball");
    for e in &ranked {
        let Outcome::Scored { history, .. } = &e.outcome else {
            panic!("both continue");
        };
        assert_eq!(history[1], "dribble#control");
    }
}
