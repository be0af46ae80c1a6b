//! Script conversion between Brahmi-derived scripts and a trainable
//! statistical character-level transliterator.
//!
//! Rule-based conversion exploits the offset alignment of the Unicode blocks:
//! a character is mapped to the character at the same offset in the target
//! block. The statistical path is a monotone stochastic edit-distance channel
//! trained by EM and decoded by beam search with a character n-gram LM, for
//! the spelling variations and sound shifts that pure offset mapping cannot
//! capture.

mod decode;
mod lm;
mod model;
mod train;

pub use decode::transliterate_statistical;
pub use lm::CharLm;
pub use model::{TransliterationModel, WordPairList, MODEL_VERSION};

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::scripts::{from_offset, normalize, offset_of, ScriptSpec, BRAHMI_SCRIPTS, DEVANAGARI};
use crate::similarity::lcsr;

/// Default LM order for statistical transliteration.
pub const DEFAULT_LM_ORDER: usize = 3;
/// Default EM iterations.
pub const DEFAULT_EM_ITERS: usize = 10;
/// Default beam width.
pub const DEFAULT_BEAM: usize = 8;
/// Default candidate count.
pub const DEFAULT_TOPK: usize = 5;

/// Convert `text` from `src` to `tgt` by offset arithmetic on the aligned
/// block. Characters outside the aligned block pass through unchanged and
/// count as warnings; with `strict` set, an in-block-but-unaligned or
/// foreign-Brahmi character is an error instead.
pub fn convert_script(
    text: &str,
    src: &ScriptSpec,
    tgt: &ScriptSpec,
    strict: bool,
) -> Result<(String, usize)> {
    if !src.is_brahmi() {
        return Err(Error::NotBrahmi(src.name.to_string()));
    }
    if !tgt.is_brahmi() {
        return Err(Error::NotBrahmi(tgt.name.to_string()));
    }
    let text = normalize(text);
    let mut out = String::with_capacity(text.len());
    let mut warnings = 0usize;
    for (pos, ch) in text.chars().enumerate() {
        match offset_of(ch, src) {
            Some(off) if off < src.aligned_len => {
                out.push(from_offset(off, tgt).expect("aligned offset maps to a char"));
            }
            in_block => {
                if strict {
                    let foreign_brahmi = BRAHMI_SCRIPTS.iter().any(|s| offset_of(ch, s).is_some());
                    if in_block.is_some() || foreign_brahmi {
                        return Err(Error::UnalignedChar {
                            ch,
                            pos,
                            script: src.name.to_string(),
                        });
                    }
                }
                out.push(ch);
                warnings += 1;
            }
        }
    }
    Ok((out, warnings))
}

/// Train the statistical transliteration channel on word pairs. Deterministic
/// for a given seed.
pub fn train_translit(
    pairs: &WordPairList,
    n: usize,
    em_iters: usize,
    seed: u64,
    src_lang: &str,
    tgt_lang: &str,
) -> Result<TransliterationModel> {
    if pairs.pairs.is_empty() {
        return Err(Error::EmptyPairList);
    }
    for (i, (s, t)) in pairs.pairs.iter().enumerate() {
        if s.is_empty() || t.is_empty() {
            return Err(Error::EmptyPairSide { index: i });
        }
    }
    if n < 2 {
        return Err(Error::InvalidArgument("lm order must be >= 2".into()));
    }
    if em_iters < 1 {
        return Err(Error::InvalidArgument("em_iters must be >= 1".into()));
    }
    let char_pairs: Vec<(Vec<char>, Vec<char>)> = pairs
        .pairs
        .iter()
        .map(|(s, t)| (normalize(s).chars().collect(), normalize(t).chars().collect()))
        .collect();
    let mut params = train::init_params(&char_pairs, seed);
    for _ in 0..em_iters {
        params = train::em_step(&params, &char_pairs);
    }
    let targets: Vec<String> = pairs.pairs.iter().map(|(_, t)| normalize(t)).collect();
    let target_refs: Vec<&str> = targets.iter().map(|s| s.as_str()).collect();
    let lm = CharLm::train(&target_refs, n);
    let sub_weights = params
        .sub
        .into_iter()
        .map(|(c, m)| (c, m.into_iter().map(|(e, p)| (e, p.ln())).collect()))
        .collect();
    let ins_weights = params.ins.into_iter().map(|(c, p)| (c, p.ln())).collect();
    Ok(TransliterationModel {
        version: MODEL_VERSION,
        src_lang: src_lang.to_string(),
        tgt_lang: tgt_lang.to_string(),
        n,
        sub_weights,
        ins_weights,
        lm,
    })
}

/// Mine transliteration candidates from a sentence-aligned corpus: every
/// word pair within an aligned sentence pair whose LCSR, after converting
/// both words to Devanagari, reaches `threshold`. Deduplicated, order-stable.
pub fn mine_candidate_pairs(
    src_sents: &[String],
    tgt_sents: &[String],
    src: &ScriptSpec,
    tgt: &ScriptSpec,
    threshold: f64,
) -> Result<WordPairList> {
    if src_sents.len() != tgt_sents.len() {
        return Err(Error::SentenceCountMismatch {
            left: src_sents.len(),
            right: tgt_sents.len(),
        });
    }
    if !(threshold > 0.0 && threshold <= 1.0) {
        return Err(Error::BadThreshold(threshold));
    }
    let to_deva = |w: &str, script: &ScriptSpec| -> String {
        if script.is_brahmi() {
            convert_script(w, script, &DEVANAGARI, false)
                .expect("non-strict conversion cannot fail")
                .0
        } else {
            normalize(w)
        }
    };
    let mut seen = HashSet::new();
    let mut pairs = Vec::new();
    for (s_sent, t_sent) in src_sents.iter().zip(tgt_sents) {
        for sw in s_sent.split_whitespace() {
            let sd = to_deva(sw, src);
            for tw in t_sent.split_whitespace() {
                let td = to_deva(tw, tgt);
                if sd.is_empty() && td.is_empty() {
                    continue;
                }
                if lcsr(&sd, &td)? >= threshold {
                    let pair = (sw.to_string(), tw.to_string());
                    if seen.insert(pair.clone()) {
                        pairs.push(pair);
                    }
                }
            }
        }
    }
    WordPairList::new(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scripts::{BENGALI, LATIN, MALAYALAM};

    #[test]
    fn convert_aligned_chars() {
        assert_eq!(
            convert_script("क", &DEVANAGARI, &MALAYALAM, false).unwrap(),
            ("ക".to_string(), 0)
        );
        assert_eq!(
            convert_script("दस", &DEVANAGARI, &DEVANAGARI, false).unwrap(),
            ("दस".to_string(), 0)
        );
        assert_eq!(
            convert_script("दस", &DEVANAGARI, &BENGALI, false).unwrap(),
            ("দস".to_string(), 0)
        );
    }

    #[test]
    fn convert_counts_passthrough_as_warnings() {
        let (out, warnings) = convert_script("दस x", &DEVANAGARI, &BENGALI, false).unwrap();
        assert_eq!(out, "দস x");
        assert_eq!(warnings, 2); // space and 'x'
        assert_eq!(out.chars().count(), "दस x".chars().count());
    }

    #[test]
    fn strict_rejects_foreign_brahmi() {
        // Bengali character fed into a Devanagari->Malayalam conversion
        let err = convert_script("দ", &DEVANAGARI, &MALAYALAM, true).unwrap_err();
        assert!(matches!(err, Error::UnalignedChar { pos: 0, .. }));
        // plain ASCII passes even under strict
        let (out, w) = convert_script("x", &DEVANAGARI, &MALAYALAM, true).unwrap();
        assert_eq!((out.as_str(), w), ("x", 1));
    }

    #[test]
    fn strict_rejects_unaligned_block_offset() {
        let ch = from_offset(0x70, &DEVANAGARI).unwrap();
        assert!(convert_script(&ch.to_string(), &DEVANAGARI, &BENGALI, true).is_err());
        let (out, w) = convert_script(&ch.to_string(), &DEVANAGARI, &BENGALI, false).unwrap();
        assert_eq!(out.chars().next(), Some(ch));
        assert_eq!(w, 1);
    }

    #[test]
    fn convert_rejects_non_brahmi_scripts() {
        assert!(convert_script("abc", &LATIN, &DEVANAGARI, false).is_err());
        assert!(convert_script("दस", &DEVANAGARI, &LATIN, false).is_err());
    }

    #[test]
    fn roundtrip_on_aligned_text() {
        let text = "अन्धापन दस क";
        for tgt in &BRAHMI_SCRIPTS {
            let (fwd, _) = convert_script(text, &DEVANAGARI, tgt, false).unwrap();
            let (back, _) = convert_script(&fwd, tgt, &DEVANAGARI, false).unwrap();
            assert_eq!(back, text, "via {}", tgt.name);
        }
    }

    fn identity_corpus() -> WordPairList {
        let words = [
            "कमल", "नगर", "जल", "फल", "घर", "वन", "मन", "तन", "धन", "पवन", "गगन", "मगन",
            "सरल", "तरल", "नयन", "रतन", "कलम", "बादल", "महल", "पहल", "कसरत", "बचपन",
            "अमर", "अजर", "सफल", "विफल", "चरण", "मरण", "हवन", "भवन", "गरम", "नरम",
            "करम", "धरम", "शरम", "परम", "चमन", "अमन", "लगन", "मनन", "जतन", "रमन",
            "समय", "विनय", "पराग", "अनाज", "समाज", "आकार", "विचार", "प्रकार",
        ];
        WordPairList::new(words.iter().map(|w| (w.to_string(), w.to_string())).collect()).unwrap()
    }

    #[test]
    fn identity_corpus_yields_identity_channel() {
        let pairs = identity_corpus();
        let model = train_translit(&pairs, 2, 5, 13, "hin", "hin").unwrap();
        for (s, _) in &pairs.pairs {
            let out = transliterate_statistical(&model, s, 8, 1).unwrap();
            assert_eq!(&out[0].0, s, "top-1 for {s}");
        }
    }

    #[test]
    fn model_sub_weights_normalized() {
        let model = train_translit(&identity_corpus(), 3, 5, 13, "hin", "hin").unwrap();
        for (c, targets) in &model.sub_weights {
            let total: f64 = targets.values().map(|p| p.exp()).sum();
            assert!((total - 1.0).abs() < 1e-6, "char {c}: {total}");
        }
        assert!(model.n >= 2);
    }

    #[test]
    fn scores_non_increasing_and_unseen_chars_pass_through() {
        let model = train_translit(&identity_corpus(), 3, 5, 13, "hin", "hin").unwrap();
        let out = transliterate_statistical(&model, "कqल", 8, 5).unwrap();
        for w in out.windows(2) {
            assert!(w[0].1 >= w[1].1);
        }
        assert!(out[0].0.contains('q'));
    }

    #[test]
    fn train_errors() {
        assert!(matches!(
            train_translit(&WordPairList::default(), 3, 5, 0, "a", "b"),
            Err(Error::EmptyPairList)
        ));
        let pairs = WordPairList {
            pairs: vec![("x".into(), "".into())],
        };
        assert!(matches!(
            train_translit(&pairs, 3, 5, 0, "a", "b"),
            Err(Error::EmptyPairSide { index: 0 })
        ));
    }

    #[test]
    fn training_is_deterministic_for_a_seed() {
        let pairs = identity_corpus();
        let a = train_translit(&pairs, 3, 3, 99, "hin", "hin").unwrap();
        let b = train_translit(&pairs, 3, 3, 99, "hin", "hin").unwrap();
        assert_eq!(a.to_json().unwrap(), b.to_json().unwrap());
    }

    #[test]
    fn model_json_roundtrip() {
        let model = train_translit(&identity_corpus(), 3, 3, 5, "hin", "hin").unwrap();
        let json = model.to_json().unwrap();
        let back = TransliterationModel::from_json(&json).unwrap();
        let a = transliterate_statistical(&model, "कमल", 8, 3).unwrap();
        let b = transliterate_statistical(&back, "कमल", 8, 3).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn mine_pairs_threshold_and_dedup() {
        let src = vec!["दस आदमी".to_string()];
        let tgt = vec!["দশ মানুষ".to_string()];
        let mined = mine_candidate_pairs(&src, &tgt, &DEVANAGARI, &BENGALI, 0.5).unwrap();
        assert!(mined.pairs.contains(&("दस".to_string(), "দশ".to_string())));
        assert!(!mined.pairs.iter().any(|(s, t)| s == "दस" && t == "মানুষ"));
    }

    #[test]
    fn mine_pairs_identical_corpora() {
        let c = vec!["दस आदमी".to_string(), "दस".to_string()];
        let mined = mine_candidate_pairs(&c, &c, &DEVANAGARI, &DEVANAGARI, 1.0).unwrap();
        assert!(mined.pairs.contains(&("दस".to_string(), "दस".to_string())));
        assert!(mined.pairs.contains(&("आदमी".to_string(), "आदमी".to_string())));
        // deduplicated: दस appears in two sentences but once in the list
        let count = mined.pairs.iter().filter(|(s, _)| s == "दस").count();
        assert_eq!(count, 1);
    }

    #[test]
    fn mine_pairs_rejects_bad_inputs() {
        let a = vec!["x".to_string()];
        assert!(matches!(
            mine_candidate_pairs(&a, &[], &DEVANAGARI, &DEVANAGARI, 0.5),
            Err(Error::SentenceCountMismatch { left: 1, right: 0 })
        ));
        assert!(matches!(
            mine_candidate_pairs(&a, &a, &DEVANAGARI, &DEVANAGARI, 0.0),
            Err(Error::BadThreshold(_))
        ));
    }
}
