//! Randomized invariants over the library API.

use proptest::prelude::*;

use indicmt::eval::bleu_corpus;
use indicmt::preorder::{read_tree, reorder};
use indicmt::scripts::lookup;
use indicmt::similarity::{lcs_length, lcsr};
use indicmt::subword::{bpe_apply, bpe_learn, desegment, segment_corpus, SegmentUnit};

fn word() -> impl Strategy<Value = String> {
    // marker-free, whitespace-free words over a mixed Latin/Devanagari pool
    proptest::collection::vec(
        prop_oneof![
            proptest::char::range('a', 'z'),
            proptest::char::range('0', '9'),
            proptest::char::range('\u{915}', '\u{928}'),
        ],
        1..8,
    )
    .prop_map(|cs| cs.into_iter().collect())
}

fn sentence() -> impl Strategy<Value = String> {
    proptest::collection::vec(word(), 1..8).prop_map(|ws| ws.join(" "))
}

proptest! {
    #[test]
    fn segment_roundtrips_for_every_unit(corpus in proptest::collection::vec(sentence(), 1..10)) {
        let script = lookup("hin").unwrap();
        let table = bpe_learn(&corpus, 10).unwrap();
        for unit in [SegmentUnit::Os, SegmentUnit::Bpe(&table), SegmentUnit::Char] {
            let segged = segment_corpus(&corpus, &unit, &script).unwrap();
            for (orig, seg) in corpus.iter().zip(&segged) {
                prop_assert_eq!(&desegment(seg).unwrap(), orig);
            }
        }
    }

    #[test]
    fn bpe_apply_concatenation_is_identity(corpus in proptest::collection::vec(sentence(), 1..6), w in word()) {
        let table = bpe_learn(&corpus, 20).unwrap();
        let pieces = bpe_apply(&w, &table).unwrap();
        prop_assert_eq!(pieces.concat(), w);
        prop_assert!(pieces.iter().all(|p| !p.is_empty()));
    }

    #[test]
    fn lcsr_is_symmetric_and_bounded(a in word(), b in word()) {
        let ab = lcsr(&a, &b).unwrap();
        let ba = lcsr(&b, &a).unwrap();
        prop_assert_eq!(ab, ba);
        prop_assert!((0.0..=1.0).contains(&ab));
        prop_assert_eq!(lcsr(&a, &a).unwrap(), 1.0);
    }

    #[test]
    fn lcs_length_bounded_by_shorter_string(a in word(), b in word()) {
        let l = lcs_length(&a, &b);
        prop_assert!(l <= a.chars().count().min(b.chars().count()));
    }

    #[test]
    fn bleu_identity_is_one_and_bounded(corpus in proptest::collection::vec(sentence(), 1..8)) {
        let identity = bleu_corpus(&corpus, &corpus, 4).unwrap();
        prop_assert_eq!(identity.bleu, 1.0);
        let reversed: Vec<String> = corpus
            .iter()
            .map(|s| s.split_whitespace().rev().collect::<Vec<_>>().join(" "))
            .collect();
        let score = bleu_corpus(&corpus, &reversed, 4).unwrap();
        prop_assert!((0.0..=1.0).contains(&score.bleu));
    }

    #[test]
    fn reorder_is_a_permutation_of_the_leaves(words in proptest::collection::vec("[a-z]{1,5}", 1..6)) {
        let labels = ["S", "O", "V", "X", "V_m"];
        let body: Vec<String> = words
            .iter()
            .enumerate()
            .map(|(i, w)| format!("({} {})", labels[i % labels.len()], w))
            .collect();
        let tree = read_tree(&format!("(ROOT {})", body.join(" "))).unwrap();
        let mut input = tree.tokens();
        let mut output = reorder(&tree);
        input.sort();
        output.sort();
        prop_assert_eq!(input, output);
    }
}
