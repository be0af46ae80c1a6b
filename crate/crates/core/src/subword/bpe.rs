//! Byte Pair Encoding: learning a merge table from a corpus and applying it.
//!
//! Learning repeatedly merges the most frequent adjacent symbol pair, counting
//! occurrences weighted by word frequency and never across word boundaries.
//! Ties break lexicographically by (left, right) so learning is deterministic.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scripts::normalize;

/// Ordered list of learned merge rules plus learning metadata.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergeTable {
    /// Merges in the order they were learned and must be applied.
    pub merges: Vec<(String, String)>,
    /// Initial symbol inventory (distinct characters of the corpus).
    pub alphabet: std::collections::BTreeSet<String>,
    /// Number of merges requested at learning time.
    pub num_merges: usize,
    /// Corpus sides the table was learned from.
    pub source_langs: Vec<String>,
}

impl MergeTable {
    /// Serialize to the merge file format: a `#bpe v1 merges=<n>` header,
    /// then one `left<SPACE>right` rule per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("#bpe v1 merges={}\n", self.merges.len());
        for (l, r) in &self.merges {
            out.push_str(l);
            out.push(' ');
            out.push_str(r);
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<MergeTable> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::InvalidArgument("empty merge file".into()))?;
        if !header.starts_with("#bpe v1 ") {
            return Err(Error::InvalidArgument(format!(
                "bad merge file header: {header:?}"
            )));
        }
        let mut merges = Vec::new();
        for (i, line) in lines.enumerate() {
            if line.is_empty() {
                continue;
            }
            let (l, r) = line.split_once(' ').ok_or_else(|| {
                Error::InvalidArgument(format!("merge line {} lacks a space", i + 2))
            })?;
            merges.push((l.to_string(), r.to_string()));
        }
        let num_merges = merges.len();
        Ok(MergeTable {
            merges,
            alphabet: Default::default(),
            num_merges,
            source_langs: Vec::new(),
        })
    }
}

fn count_pairs(words: &BTreeMap<Vec<String>, u64>) -> BTreeMap<(String, String), u64> {
    let mut counts = BTreeMap::new();
    for (syms, freq) in words {
        for w in syms.windows(2) {
            *counts
                .entry((w[0].clone(), w[1].clone()))
                .or_insert(0) += freq;
        }
    }
    counts
}

fn merge_word(syms: &[String], left: &str, right: &str) -> Vec<String> {
    let mut out = Vec::with_capacity(syms.len());
    let mut i = 0;
    while i < syms.len() {
        if i + 1 < syms.len() && syms[i] == left && syms[i + 1] == right {
            out.push(format!("{left}{right}"));
            i += 2;
        } else {
            out.push(syms[i].clone());
            i += 1;
        }
    }
    out
}

/// Learn a merge table from a corpus. Learning stops early once no adjacent
/// pair occurs more than once.
pub fn bpe_learn(corpus: &[String], num_merges: usize) -> Result<MergeTable> {
    bpe_learn_tagged(corpus, num_merges, &[])
}

/// Like [`bpe_learn`] but records the corpus language codes in the table.
pub fn bpe_learn_tagged(
    corpus: &[String],
    num_merges: usize,
    source_langs: &[String],
) -> Result<MergeTable> {
    if corpus.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    let mut words: BTreeMap<Vec<String>, u64> = BTreeMap::new();
    let mut alphabet = std::collections::BTreeSet::new();
    for sent in corpus {
        for word in normalize(sent).split_whitespace() {
            let syms: Vec<String> = word.chars().map(|c| c.to_string()).collect();
            for s in &syms {
                alphabet.insert(s.clone());
            }
            *words.entry(syms).or_insert(0) += 1;
        }
    }
    let mut merges = Vec::new();
    for _ in 0..num_merges {
        let counts = count_pairs(&words);
        // most frequent pair, ties broken by lexicographically smallest
        let best = counts
            .iter()
            .max_by(|a, b| a.1.cmp(b.1).then_with(|| b.0.cmp(a.0)))
            .map(|(pair, _)| pair.clone());
        let Some(pair) = best else { break };
        let mut next: BTreeMap<Vec<String>, u64> = BTreeMap::new();
        for (syms, freq) in &words {
            *next.entry(merge_word(syms, &pair.0, &pair.1)).or_insert(0) += freq;
        }
        words = next;
        merges.push(pair);
        // stop early once no remaining pair occurs more than once
        if count_pairs(&words).values().all(|&c| c <= 1) {
            break;
        }
    }
    Ok(MergeTable {
        merges,
        alphabet,
        num_merges,
        source_langs: source_langs.to_vec(),
    })
}

/// Apply a merge table to one word: start from its character sequence and
/// apply the merges greedily in table order.
pub fn bpe_apply(word: &str, table: &MergeTable) -> Result<Vec<String>> {
    if word.is_empty() {
        return Err(Error::EmptyWord);
    }
    let word = normalize(word);
    let mut syms: Vec<String> = word.chars().map(|c| c.to_string()).collect();
    for (l, r) in &table.merges {
        if syms.len() < 2 {
            break;
        }
        syms = merge_word(&syms, l, r);
    }
    Ok(syms)
}
