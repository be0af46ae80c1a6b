//! Word-level corpus BLEU and out-of-vocabulary diagnostics.
//!
//! Single-reference BLEU with clipped modified n-gram precisions, geometric
//! mean over orders 1..max_n and the standard brevity penalty. No smoothing
//! by default; an add-one variant exists for sentence-level diagnostics and
//! is non-standard.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};

/// Corpus BLEU result.
#[derive(Debug, Clone, PartialEq)]
pub struct BleuScore {
    pub bleu: f64,
    pub precisions: Vec<f64>,
    pub brevity_penalty: f64,
    pub hyp_len: usize,
    pub ref_len: usize,
}

impl BleuScore {
    /// Length ratio hyp/ref used in the report line.
    pub fn ratio(&self) -> f64 {
        if self.ref_len == 0 {
            0.0
        } else {
            self.hyp_len as f64 / self.ref_len as f64
        }
    }

    /// The CLI report line: `BLEU = <4dp> (p1/p2/...) BP=<4dp> ratio=<4dp>`.
    pub fn report(&self) -> String {
        let ps = self
            .precisions
            .iter()
            .map(|p| format!("{p:.4}"))
            .collect::<Vec<_>>()
            .join("/");
        format!(
            "BLEU = {:.4} ({ps}) BP={:.4} ratio={:.4}",
            self.bleu,
            self.brevity_penalty,
            self.ratio()
        )
    }
}

fn ngram_counts(tokens: &[&str], n: usize) -> HashMap<Vec<String>, usize> {
    let mut counts = HashMap::new();
    if tokens.len() >= n {
        for w in tokens.windows(n) {
            *counts
                .entry(w.iter().map(|t| t.to_string()).collect::<Vec<_>>())
                .or_insert(0) += 1;
        }
    }
    counts
}

/// Corpus-level word BLEU over whitespace-tokenized sentences, one reference
/// per hypothesis. With `smooth` set, add-one smoothing is applied to every
/// precision (non-standard, diagnostics only).
pub fn bleu_corpus_with_options(
    hyps: &[String],
    refs: &[String],
    max_n: usize,
    smooth: bool,
) -> Result<BleuScore> {
    if hyps.len() != refs.len() {
        return Err(Error::SentenceCountMismatch {
            left: hyps.len(),
            right: refs.len(),
        });
    }
    if hyps.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    if !(1..=4).contains(&max_n) {
        return Err(Error::InvalidArgument(format!(
            "max_n must be in 1..=4, got {max_n}"
        )));
    }
    let mut matched = vec![0usize; max_n];
    let mut total = vec![0usize; max_n];
    let mut hyp_len = 0usize;
    let mut ref_len = 0usize;
    for (hyp, rf) in hyps.iter().zip(refs) {
        let h: Vec<&str> = hyp.split_whitespace().collect();
        let r: Vec<&str> = rf.split_whitespace().collect();
        hyp_len += h.len();
        ref_len += r.len();
        for n in 1..=max_n {
            let hc = ngram_counts(&h, n);
            let rc = ngram_counts(&r, n);
            for (gram, count) in &hc {
                matched[n - 1] += (*count).min(rc.get(gram).copied().unwrap_or(0));
                total[n - 1] += count;
            }
        }
    }
    let precisions: Vec<f64> = (0..max_n)
        .map(|i| {
            if smooth {
                (matched[i] + 1) as f64 / (total[i] + 1) as f64
            } else if total[i] == 0 {
                0.0
            } else {
                matched[i] as f64 / total[i] as f64
            }
        })
        .collect();
    let brevity_penalty = if hyp_len == 0 {
        0.0
    } else if hyp_len >= ref_len {
        1.0
    } else {
        (1.0 - ref_len as f64 / hyp_len as f64).exp()
    };
    // orders with no n-grams at all (corpus shorter than n) carry no
    // evidence and are left out of the geometric mean
    let scored: Vec<f64> = (0..max_n)
        .filter(|&i| smooth || total[i] > 0)
        .map(|i| precisions[i])
        .collect();
    let bleu = if scored.is_empty() || scored.contains(&0.0) {
        0.0
    } else {
        let log_mean = scored.iter().map(|p| p.ln()).sum::<f64>() / scored.len() as f64;
        brevity_penalty * log_mean.exp()
    };
    Ok(BleuScore {
        bleu,
        precisions,
        brevity_penalty,
        hyp_len,
        ref_len,
    })
}

/// Corpus BLEU without smoothing.
pub fn bleu_corpus(hyps: &[String], refs: &[String], max_n: usize) -> Result<BleuScore> {
    bleu_corpus_with_options(hyps, refs, max_n, false)
}

/// Fraction of test word tokens absent from the training vocabulary.
pub fn oov_rate(test: &[String], train_vocab: &HashSet<String>) -> Result<f64> {
    if test.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    let mut tokens = 0usize;
    let mut oov = 0usize;
    for sent in test {
        for tok in sent.split_whitespace() {
            tokens += 1;
            if !train_vocab.contains(tok) {
                oov += 1;
            }
        }
    }
    if tokens == 0 {
        return Err(Error::EmptyCorpus);
    }
    Ok(oov as f64 / tokens as f64)
}
