//! Subword segmentation of corpora with boundary-marker encoding, and word
//! reconstruction after decoding.
//!
//! Segmented text keeps track of word boundaries with a standalone marker
//! token `_` between consecutive words:
//!
//! ```text
//! word:    Childhood means simplicity .
//! subword: Chi ldhoo d _ mea ns _ si mpli ci ty _ .
//! ```

mod bpe;
mod syllable;

pub use bpe::{bpe_apply, bpe_learn, bpe_learn_tagged, MergeTable};
pub use syllable::syllabify_word;

use crate::error::{Error, Result};
use crate::scripts::ScriptSpec;

/// The boundary marker token.
pub const MARKER: &str = "_";

/// Subword unit choice for segmentation.
#[derive(Debug, Clone)]
pub enum SegmentUnit<'a> {
    /// Orthographic syllables.
    Os,
    /// BPE with a learned merge table.
    Bpe(&'a MergeTable),
    /// Single characters.
    Char,
}

/// One segmented sentence: subword tokens interleaved with marker tokens.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubwordSentence {
    pub tokens: Vec<String>,
}

impl SubwordSentence {
    pub fn to_line(&self) -> String {
        self.tokens.join(" ")
    }

    pub fn from_line(line: &str) -> SubwordSentence {
        SubwordSentence {
            tokens: line.split_whitespace().map(|t| t.to_string()).collect(),
        }
    }
}

fn segment_word(word: &str, unit: &SegmentUnit, script: &ScriptSpec) -> Result<Vec<String>> {
    match unit {
        SegmentUnit::Os => syllabify_word(word, script),
        SegmentUnit::Bpe(table) => bpe_apply(word, table),
        SegmentUnit::Char => Ok(word.chars().map(|c| c.to_string()).collect()),
    }
}

/// Segment every sentence of a corpus with the chosen unit, inserting the
/// marker between consecutive words. Words containing the marker character
/// are rejected (there is no escaping convention).
pub fn segment_corpus(
    corpus: &[String],
    unit: &SegmentUnit,
    script: &ScriptSpec,
) -> Result<Vec<SubwordSentence>> {
    let mut out = Vec::with_capacity(corpus.len());
    for (lineno, sent) in corpus.iter().enumerate() {
        let mut tokens = Vec::new();
        for (wi, word) in sent.split_whitespace().enumerate() {
            if word.contains(MARKER) {
                return Err(Error::MarkerInWord { line: lineno + 1 });
            }
            if wi > 0 {
                tokens.push(MARKER.to_string());
            }
            tokens.extend(segment_word(word, unit, script)?);
        }
        out.push(SubwordSentence { tokens });
    }
    Ok(out)
}

/// Reconstruct the word-level sentence: concatenate subwords between
/// consecutive markers, join words with single spaces. Malformed marker
/// placement (leading, trailing or doubled) is reported, not repaired.
pub fn desegment(sent: &SubwordSentence) -> Result<String> {
    if sent.tokens.is_empty() {
        return Ok(String::new());
    }
    if sent.tokens.first().map(String::as_str) == Some(MARKER) {
        return Err(Error::MalformedSubwords("leading boundary marker".into()));
    }
    if sent.tokens.last().map(String::as_str) == Some(MARKER) {
        return Err(Error::MalformedSubwords("trailing boundary marker".into()));
    }
    let mut words = Vec::new();
    let mut current = String::new();
    let mut prev_marker = false;
    for tok in &sent.tokens {
        if tok == MARKER {
            if prev_marker {
                return Err(Error::MalformedSubwords(
                    "consecutive boundary markers".into(),
                ));
            }
            words.push(std::mem::take(&mut current));
            prev_marker = true;
        } else {
            current.push_str(tok);
            prev_marker = false;
        }
    }
    words.push(current);
    Ok(words.join(" "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scripts::{DEVANAGARI, LATIN};

    fn corpus(lines: &[&str]) -> Vec<String> {
        lines.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn worked_example_os_segmentation() {
        let segged = segment_corpus(
            &corpus(&["Childhood means simplicity ."]),
            &SegmentUnit::Os,
            &LATIN,
        )
        .unwrap();
        assert_eq!(
            segged[0].to_line(),
            "Chi ldhoo d _ mea ns _ si mpli ci ty _ ."
        );
    }

    #[test]
    fn single_word_sentence_has_no_marker() {
        let segged = segment_corpus(&corpus(&["hello"]), &SegmentUnit::Char, &LATIN).unwrap();
        assert_eq!(segged[0].to_line(), "h e l l o");
    }

    #[test]
    fn char_unit_marker_rule() {
        let segged = segment_corpus(&corpus(&["ab cd"]), &SegmentUnit::Char, &LATIN).unwrap();
        assert_eq!(segged[0].to_line(), "a b _ c d");
    }

    #[test]
    fn marker_in_input_rejected_with_line_number() {
        let err = segment_corpus(&corpus(&["ok", "bad_word"]), &SegmentUnit::Char, &LATIN)
            .unwrap_err();
        assert!(matches!(err, Error::MarkerInWord { line: 2 }));
    }

    #[test]
    fn desegment_worked_example() {
        let sent = SubwordSentence::from_line("Chi ldhoo d _ mea ns _ si mpli ci ty _ .");
        assert_eq!(desegment(&sent).unwrap(), "Childhood means simplicity .");
    }

    #[test]
    fn desegment_single_token() {
        let sent = SubwordSentence::from_line("x");
        assert_eq!(desegment(&sent).unwrap(), "x");
    }

    #[test]
    fn desegment_rejects_malformed_markers() {
        for bad in ["_ a", "a _", "a _ _ b"] {
            let sent = SubwordSentence::from_line(bad);
            assert!(desegment(&sent).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn roundtrip_all_units() {
        let c = corpus(&["Childhood means simplicity .", "दस आदमी अन्धापन"]);
        let scripts = [&LATIN, &DEVANAGARI];
        let table = bpe_learn(&c, 10).unwrap();
        for (sent, script) in c.iter().zip(scripts) {
            for unit in [SegmentUnit::Os, SegmentUnit::Bpe(&table), SegmentUnit::Char] {
                let segged = segment_corpus(std::slice::from_ref(sent), &unit, script).unwrap();
                assert_eq!(desegment(&segged[0]).unwrap(), *sent);
            }
        }
    }

    #[test]
    fn no_subword_token_contains_marker() {
        let segged =
            segment_corpus(&corpus(&["ab cd ef"]), &SegmentUnit::Char, &LATIN).unwrap();
        let markers = segged[0].tokens.iter().filter(|t| *t == MARKER).count();
        assert_eq!(markers, 2);
        assert!(segged[0]
            .tokens
            .iter()
            .filter(|t| *t != MARKER)
            .all(|t| !t.contains(MARKER)));
    }
}
