//! Character n-gram language model over target-side words.
//!
//! Smoothing is absolute discounting with a fixed discount, backed off in a
//! single step to a uniform distribution over the observed target alphabet
//! (plus the end-of-word symbol). Probabilities are precomputed at build time
//! so a trained model serializes as a flat list of (context, char, logp)
//! entries plus per-context backoff mass.

use std::collections::HashMap;

/// Start-of-word sentinel used to pad n-gram contexts.
pub const BOS: char = '\u{2}';
/// End-of-word symbol scored at the end of every word.
pub const EOS: char = '\u{3}';

const DISCOUNT: f64 = 0.1;

#[derive(Debug, Clone, PartialEq)]
pub struct CharLm {
    pub order: usize,
    /// Smoothed log P(char | context) for every observed (context, char).
    probs: HashMap<(String, char), f64>,
    /// Log of the leftover mass (per unseen char) for each observed context.
    backoff: HashMap<String, f64>,
    /// log(1 / |alphabet|): probability of any char given an unseen context.
    default_logp: f64,
}

impl CharLm {
    /// Estimate the model from target-side words. `order` must be >= 2.
    pub fn train(words: &[&str], order: usize) -> CharLm {
        assert!(order >= 2, "lm order must be >= 2");
        let mut counts: HashMap<(String, char), u64> = HashMap::new();
        let mut ctx_totals: HashMap<String, u64> = HashMap::new();
        let mut alphabet: std::collections::BTreeSet<char> = std::collections::BTreeSet::new();
        alphabet.insert(EOS);
        for w in words {
            let mut syms: Vec<char> = vec![BOS; order - 1];
            syms.extend(w.chars());
            syms.push(EOS);
            alphabet.extend(w.chars());
            for i in (order - 1)..syms.len() {
                let ctx: String = syms[i - (order - 1)..i].iter().collect();
                *counts.entry((ctx.clone(), syms[i])).or_insert(0) += 1;
                *ctx_totals.entry(ctx).or_insert(0) += 1;
            }
        }
        let uniform = 1.0 / alphabet.len() as f64;
        let mut distinct: HashMap<String, u64> = HashMap::new();
        for (ctx, _) in counts.keys() {
            *distinct.entry(ctx.clone()).or_insert(0) += 1;
        }
        let mut probs = HashMap::new();
        let mut backoff = HashMap::new();
        for ((ctx, ch), c) in &counts {
            let total = ctx_totals[ctx] as f64;
            let d = distinct[ctx] as f64;
            let p = (*c as f64 - DISCOUNT).max(0.0) / total + DISCOUNT * d / total * uniform;
            probs.insert((ctx.clone(), *ch), p.ln());
        }
        for (ctx, total) in &ctx_totals {
            let d = distinct[ctx] as f64;
            let mass = DISCOUNT * d / *total as f64 * uniform;
            backoff.insert(ctx.clone(), mass.ln());
        }
        CharLm {
            order,
            probs,
            backoff,
            default_logp: uniform.ln(),
        }
    }

    /// Log P(ch | context), where `context` is the last `order-1` symbols
    /// (BOS-padded).
    pub fn logp(&self, context: &str, ch: char) -> f64 {
        if let Some(p) = self.probs.get(&(context.to_string(), ch)) {
            *p
        } else if let Some(b) = self.backoff.get(context) {
            *b
        } else {
            self.default_logp
        }
    }

    /// Total log-probability of a word, including the EOS transition.
    pub fn logp_word(&self, word: &str) -> f64 {
        let mut ctx: Vec<char> = vec![BOS; self.order - 1];
        let mut total = 0.0;
        for ch in word.chars().chain(std::iter::once(EOS)) {
            let c: String = ctx.iter().collect();
            total += self.logp(&c, ch);
            ctx.remove(0);
            ctx.push(ch);
        }
        total
    }

    /// Flatten to (context, char-or-empty, logp) rows for persistence.
    /// An empty char marks the per-context backoff entry; the ("", "") row
    /// carries the unseen-context uniform log-probability.
    pub fn to_rows(&self) -> Vec<(String, String, f64)> {
        let mut rows: Vec<(String, String, f64)> = self
            .probs
            .iter()
            .map(|((ctx, ch), p)| (ctx.clone(), ch.to_string(), *p))
            .collect();
        for (ctx, b) in &self.backoff {
            rows.push((ctx.clone(), String::new(), *b));
        }
        rows.push((String::new(), String::new(), self.default_logp));
        rows.sort_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)));
        rows
    }

    pub fn from_rows(order: usize, rows: &[(String, String, f64)]) -> CharLm {
        let mut probs = HashMap::new();
        let mut backoff = HashMap::new();
        let mut default_logp = f64::NEG_INFINITY;
        for (ctx, ch, p) in rows {
            match ch.chars().next() {
                Some(c) => {
                    probs.insert((ctx.clone(), c), *p);
                }
                None if ctx.is_empty() => default_logp = *p,
                None => {
                    backoff.insert(ctx.clone(), *p);
                }
            }
        }
        CharLm {
            order,
            probs,
            backoff,
            default_logp,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn probabilities_sum_to_one_per_context() {
        let words = ["abab", "abba", "ba"];
        let lm = CharLm::train(&words, 2);
        // alphabet = {a, b, EOS}
        for ctx in ["a", "b", &BOS.to_string()] {
            let seen: f64 = ['a', 'b', EOS]
                .iter()
                .map(|&c| lm.logp(ctx, c).exp())
                .sum();
            assert!((seen - 1.0).abs() < 1e-9, "ctx {ctx:?}: sum {seen}");
        }
    }

    #[test]
    fn frequent_continuation_scores_higher() {
        let words = ["ab", "ab", "ab", "ac"];
        let lm = CharLm::train(&words, 2);
        assert!(lm.logp("a", 'b') > lm.logp("a", 'c'));
    }

    #[test]
    fn unseen_context_uses_uniform() {
        let words = ["ab"];
        let lm = CharLm::train(&words, 3);
        // alphabet {a, b, EOS} -> uniform 1/3
        assert!((lm.logp("zz", 'a').exp() - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn row_roundtrip() {
        let words = ["abc", "abd", "xy"];
        let lm = CharLm::train(&words, 3);
        let rows = lm.to_rows();
        let back = CharLm::from_rows(3, &rows);
        for w in ["abc", "xy", "zq", "abdx"] {
            assert!((lm.logp_word(w) - back.logp_word(w)).abs() < 1e-12);
        }
    }
}
