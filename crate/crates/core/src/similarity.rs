//! LCSR-based lexical similarity between language pairs over parallel corpora.
//!
//! For a pair of languages the similarity is the average, over aligned
//! sentence pairs, of the character-level Longest Common Subsequence Ratio,
//! computed after mapping both sides to Devanagari so different scripts
//! become comparable.

use crate::error::{Error, Result};
use crate::scripts::{normalize, ScriptSpec, DEVANAGARI};
use crate::translit::convert_script;

/// Per-language-pair average LCSR over an n-way parallel corpus.
#[derive(Debug, Clone)]
pub struct SimilarityMatrix {
    pub langs: Vec<String>,
    pub values: Vec<Vec<f64>>,
    pub corpus_id: String,
    pub sentence_count: usize,
}

impl SimilarityMatrix {
    /// Plot-ready TSV: header row of language codes, then one row per
    /// language with 4-decimal fixed-point values.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        out.push_str("lang");
        for l in &self.langs {
            out.push('\t');
            out.push_str(l);
        }
        out.push('\n');
        for (i, l) in self.langs.iter().enumerate() {
            out.push_str(l);
            for v in &self.values[i] {
                out.push_str(&format!("\t{v:.4}"));
            }
            out.push('\n');
        }
        out
    }
}

/// Character-level longest common subsequence length, two-row DP.
pub fn lcs_length(a: &str, b: &str) -> usize {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    if a.is_empty() || b.is_empty() {
        return 0;
    }
    let mut prev = vec![0usize; b.len() + 1];
    let mut cur = vec![0usize; b.len() + 1];
    for ca in &a {
        for (j, cb) in b.iter().enumerate() {
            cur[j + 1] = if ca == cb {
                prev[j] + 1
            } else {
                prev[j + 1].max(cur[j])
            };
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

/// Longest Common Subsequence Ratio: |LCS(a,b)| / max(|a|,|b|).
pub fn lcsr(a: &str, b: &str) -> Result<f64> {
    let la = a.chars().count();
    let lb = b.chars().count();
    if la == 0 && lb == 0 {
        return Err(Error::BothEmpty);
    }
    Ok(lcs_length(a, b) as f64 / la.max(lb) as f64)
}

fn collapse_ws(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// Map a sentence to Devanagari (Brahmi scripts only; others pass through)
/// and collapse whitespace.
fn normalize_sentence(s: &str, script: &ScriptSpec) -> String {
    let s = collapse_ws(&normalize(s));
    if script.is_brahmi() {
        convert_script(&s, script, &DEVANAGARI, false)
            .expect("non-strict conversion cannot fail")
            .0
    } else {
        s
    }
}

/// Average LCSR over aligned sentence pairs, both sides normalized to
/// Devanagari first.
pub fn corpus_lcsr(
    src: &[String],
    tgt: &[String],
    src_script: &ScriptSpec,
    tgt_script: &ScriptSpec,
) -> Result<f64> {
    if src.len() != tgt.len() {
        return Err(Error::SentenceCountMismatch {
            left: src.len(),
            right: tgt.len(),
        });
    }
    if src.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    let mut sum = 0.0;
    for (s, t) in src.iter().zip(tgt) {
        let s = normalize_sentence(s, src_script);
        let t = normalize_sentence(t, tgt_script);
        sum += lcsr(&s, &t)?;
    }
    Ok(sum / src.len() as f64)
}

/// Build the full pairwise similarity matrix over an n-way parallel corpus.
/// Languages are ordered as given; the diagonal is exactly 1.0.
pub fn similarity_matrix(
    corpora: &[(String, Vec<String>)],
    scripts: &[(String, ScriptSpec)],
    corpus_id: &str,
) -> Result<SimilarityMatrix> {
    if corpora.len() < 2 {
        return Err(Error::InvalidArgument(
            "similarity matrix needs at least 2 languages".into(),
        ));
    }
    let len0 = corpora[0].1.len();
    for (lang, c) in corpora {
        if c.len() != len0 {
            return Err(Error::CorpusLengthMismatch {
                lang_a: corpora[0].0.clone(),
                lang_b: lang.clone(),
                len_a: len0,
                len_b: c.len(),
            });
        }
    }
    let script_for = |lang: &str| -> Result<ScriptSpec> {
        scripts
            .iter()
            .find(|(l, _)| l == lang)
            .map(|(_, s)| *s)
            .ok_or_else(|| Error::UnknownScript(lang.to_string()))
    };
    let n = corpora.len();
    let mut values = vec![vec![0.0; n]; n];
    for i in 0..n {
        values[i][i] = 1.0;
        for j in (i + 1)..n {
            let si = script_for(&corpora[i].0)?;
            let sj = script_for(&corpora[j].0)?;
            let v = corpus_lcsr(&corpora[i].1, &corpora[j].1, &si, &sj)?;
            values[i][j] = v;
            // LCSR is symmetric; computing once keeps the matrix exactly so.
            values[j][i] = v;
        }
    }
    Ok(SimilarityMatrix {
        langs: corpora.iter().map(|(l, _)| l.clone()).collect(),
        values,
        corpus_id: corpus_id.to_string(),
        sentence_count: len0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scripts::{LATIN, MALAYALAM};

    #[test]
    fn lcs_length_examples() {
        assert_eq!(lcs_length("abcd", "abd"), 3);
        assert_eq!(lcs_length("x", "x"), 1);
        assert_eq!(lcs_length("abc", "xyz"), 0);
        assert_eq!(lcs_length("abc", ""), 0);
        assert_eq!(lcs_length("abcd", "abcd"), 4);
    }

    #[test]
    fn lcsr_examples() {
        assert_eq!(lcsr("abcd", "abd").unwrap(), 0.75);
        assert_eq!(lcsr("hello", "hello").unwrap(), 1.0);
        assert_eq!(lcsr("ab", "").unwrap(), 0.0);
        assert!(matches!(lcsr("", ""), Err(Error::BothEmpty)));
    }

    #[test]
    fn corpus_lcsr_cross_script() {
        let src = vec!["क".to_string()];
        let tgt = vec!["ക".to_string()];
        let v = corpus_lcsr(&src, &tgt, &DEVANAGARI, &MALAYALAM).unwrap();
        assert_eq!(v, 1.0);
    }

    #[test]
    fn corpus_lcsr_latin_passthrough() {
        let src = vec!["ab".to_string(), "ab".to_string()];
        let tgt = vec!["abd".to_string(), "ab".to_string()];
        let v = corpus_lcsr(&src, &tgt, &LATIN, &LATIN).unwrap();
        assert!((v - (2.0 / 3.0 + 1.0) / 2.0).abs() < 1e-12);
    }

    #[test]
    fn corpus_lcsr_errors() {
        let a = vec!["x".to_string()];
        assert!(corpus_lcsr(&a, &[], &LATIN, &LATIN).is_err());
        assert!(corpus_lcsr(&[], &[], &LATIN, &LATIN).is_err());
    }

    #[test]
    fn matrix_identical_corpora() {
        let c = vec!["a b".to_string(), "c d".to_string()];
        let corpora = vec![("l1".to_string(), c.clone()), ("l2".to_string(), c)];
        let scripts = vec![("l1".to_string(), LATIN), ("l2".to_string(), LATIN)];
        let m = similarity_matrix(&corpora, &scripts, "test").unwrap();
        assert_eq!(m.values, vec![vec![1.0, 1.0], vec![1.0, 1.0]]);
    }

    #[test]
    fn matrix_offdiagonal_below_one_when_corpora_differ() {
        let corpora = vec![
            ("l1".to_string(), vec!["abcd".to_string(), "ef".to_string()]),
            ("l2".to_string(), vec!["abcd".to_string(), "eg".to_string()]),
        ];
        let scripts = vec![("l1".to_string(), LATIN), ("l2".to_string(), LATIN)];
        let m = similarity_matrix(&corpora, &scripts, "test").unwrap();
        assert!(m.values[0][1] < 1.0);
        assert_eq!(m.values[0][0], 1.0);
    }

    #[test]
    fn tsv_format() {
        let m = SimilarityMatrix {
            langs: vec!["a".into(), "b".into()],
            values: vec![vec![1.0, 0.5], vec![0.5, 1.0]],
            corpus_id: "t".into(),
            sentence_count: 1,
        };
        let tsv = m.to_tsv();
        assert_eq!(tsv, "lang\ta\tb\na\t1.0000\t0.5000\nb\t0.5000\t1.0000\n");
    }
}
