//! Monotone left-to-right beam decoding for the character channel model.

use crate::error::{Error, Result};
use crate::scripts::normalize;
use crate::translit::lm::{BOS, EOS};
use crate::translit::model::{TransliterationModel, INSERT_PRIOR};

/// Insertions allowed per hypothesis; keeps the search bounded while still
/// letting outputs exceed the source length.
const MAX_INSERTS: usize = 2;

#[derive(Debug, Clone)]
struct Hyp {
    out: String,
    ctx: Vec<char>,
    chan: f64,
    lm: f64,
    inserts: usize,
}

impl Hyp {
    fn score(&self) -> f64 {
        self.chan + self.lm
    }

    fn emit(&mut self, model: &TransliterationModel, ch: char) {
        let ctx: String = self.ctx.iter().collect();
        self.lm += model.lm.logp(&ctx, ch);
        self.out.push(ch);
        self.ctx.remove(0);
        self.ctx.push(ch);
    }
}

fn prune(mut hyps: Vec<Hyp>, beam: usize) -> Vec<Hyp> {
    hyps.sort_by(|a, b| {
        b.score()
            .partial_cmp(&a.score())
            .unwrap_or(std::cmp::Ordering::Equal)
            .then_with(|| a.out.cmp(&b.out))
    });
    // keep the best-scoring hypothesis per output string
    let mut seen = std::collections::HashSet::new();
    hyps.retain(|h| seen.insert(h.out.clone()));
    hyps.truncate(beam);
    hyps
}

fn expand_insertions(model: &TransliterationModel, hyps: Vec<Hyp>, beam: usize) -> Vec<Hyp> {
    let mut all = hyps;
    for round in 0..MAX_INSERTS {
        let mut new = Vec::new();
        for h in all.iter().filter(|h| h.inserts == round) {
            for (&tch, &logp) in &model.ins_weights {
                if logp == f64::NEG_INFINITY {
                    continue;
                }
                let mut nh = h.clone();
                nh.chan += INSERT_PRIOR.ln() + logp;
                nh.inserts += 1;
                nh.emit(model, tch);
                new.push(nh);
            }
        }
        if new.is_empty() {
            break;
        }
        all.extend(new);
        all = prune(all, beam);
    }
    all
}

/// Top-k transliterations of `word`, ranked by channel + LM log-probability.
/// Source characters absent from the model pass through verbatim.
pub fn transliterate_statistical(
    model: &TransliterationModel,
    word: &str,
    beam: usize,
    k: usize,
) -> Result<Vec<(String, f64)>> {
    if word.is_empty() {
        return Err(Error::EmptyWord);
    }
    if beam < 1 || k < 1 {
        return Err(Error::InvalidArgument(
            "beam and k must be at least 1".into(),
        ));
    }
    let word = normalize(word);
    let p_cons = (1.0 - INSERT_PRIOR).ln();
    let mut hyps = vec![Hyp {
        out: String::new(),
        ctx: vec![BOS; model.n - 1],
        chan: 0.0,
        lm: 0.0,
        inserts: 0,
    }];
    for c in word.chars() {
        hyps = expand_insertions(model, hyps, beam);
        let mut next = Vec::new();
        match model.sub_weights.get(&c) {
            Some(targets) => {
                for (e, &logp) in targets {
                    if logp == f64::NEG_INFINITY {
                        continue;
                    }
                    for h in &hyps {
                        let mut nh = h.clone();
                        nh.chan += p_cons + logp;
                        for ch in e.chars() {
                            nh.emit(model, ch);
                        }
                        next.push(nh);
                    }
                }
            }
            None => {
                // unseen source character: verbatim passthrough
                for h in &hyps {
                    let mut nh = h.clone();
                    nh.chan += p_cons;
                    nh.emit(model, c);
                    next.push(nh);
                }
            }
        }
        hyps = prune(next, beam);
    }
    hyps = expand_insertions(model, hyps, beam);
    for h in &mut hyps {
        let ctx: String = h.ctx.iter().collect();
        h.lm += model.lm.logp(&ctx, EOS);
    }
    hyps = prune(hyps, beam.max(k));
    Ok(hyps
        .into_iter()
        .take(k)
        .map(|h| (h.out.clone(), h.score()))
        .collect())
}
