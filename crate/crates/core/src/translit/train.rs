//! EM training of the monotone stochastic edit-distance channel.
//!
//! The generative story for a pair (s, t): walk left to right over s; before
//! each consume step an insertion (emit one target char) may fire with fixed
//! prior probability; consuming a source char emits a target string of length
//! 0 (deletion), 1 or 2. Expected operation counts are computed with a
//! forward-backward pass over the alignment lattice and re-normalized each
//! iteration.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::translit::model::INSERT_PRIOR;

/// Channel parameters in probability space (not log).
#[derive(Debug, Clone)]
pub(crate) struct ChannelParams {
    /// P(target string | source char); "" is deletion.
    pub sub: BTreeMap<char, BTreeMap<String, f64>>,
    /// P(target char | insertion).
    pub ins: BTreeMap<char, f64>,
}

pub(crate) type Counts = (BTreeMap<char, BTreeMap<String, f64>>, BTreeMap<char, f64>);

/// Uniform initialization over the events reachable in some training pair,
/// with a small seeded jitter to break ties deterministically.
pub(crate) fn init_params(pairs: &[(Vec<char>, Vec<char>)], seed: u64) -> ChannelParams {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sub: BTreeMap<char, BTreeMap<String, f64>> = BTreeMap::new();
    let mut ins: BTreeMap<char, f64> = BTreeMap::new();
    for (s, t) in pairs {
        for &c in s {
            let entry = sub.entry(c).or_default();
            entry.entry(String::new()).or_insert(0.0);
            for j in 0..t.len() {
                entry.entry(t[j].to_string()).or_insert(0.0);
                if j + 1 < t.len() {
                    entry.entry(t[j..j + 2].iter().collect()).or_insert(0.0);
                }
            }
        }
        for &c in t {
            ins.entry(c).or_insert(0.0);
        }
    }
    for targets in sub.values_mut() {
        for p in targets.values_mut() {
            *p = 1.0 + 0.01 * rng.gen::<f64>();
        }
        let total: f64 = targets.values().sum();
        for p in targets.values_mut() {
            *p /= total;
        }
    }
    if ins.is_empty() {
        // degenerate corpus with empty target alphabet cannot occur (pairs
        // have non-empty sides) but keep normalization total-safe anyway
        ins.insert('\u{0}', 1.0);
    }
    for p in ins.values_mut() {
        *p = 1.0 + 0.01 * rng.gen::<f64>();
    }
    let total: f64 = ins.values().sum();
    for p in ins.values_mut() {
        *p /= total;
    }
    ChannelParams { sub, ins }
}

fn sub_prob(params: &ChannelParams, c: char, e: &str) -> f64 {
    params
        .sub
        .get(&c)
        .and_then(|m| m.get(e))
        .copied()
        .unwrap_or(0.0)
}

/// Expected operation counts over all monotone alignments of all pairs,
/// via forward-backward on the (source position, target position) lattice.
pub(crate) fn expected_counts(params: &ChannelParams, pairs: &[(Vec<char>, Vec<char>)]) -> Counts {
    let p_cons = 1.0 - INSERT_PRIOR;
    let mut sub_counts: BTreeMap<char, BTreeMap<String, f64>> = BTreeMap::new();
    let mut ins_counts: BTreeMap<char, f64> = BTreeMap::new();
    for (s, t) in pairs {
        let (m, n) = (s.len(), t.len());
        let mut alpha = vec![vec![0.0f64; n + 1]; m + 1];
        alpha[0][0] = 1.0;
        for i in 0..=m {
            for j in 0..=n {
                let a = alpha[i][j];
                if a == 0.0 {
                    continue;
                }
                if i < m {
                    let c = s[i];
                    alpha[i + 1][j] += a * p_cons * sub_prob(params, c, "");
                    if j < n {
                        alpha[i + 1][j + 1] += a * p_cons * sub_prob(params, c, &t[j].to_string());
                    }
                    if j + 1 < n {
                        let e: String = t[j..j + 2].iter().collect();
                        alpha[i + 1][j + 2] += a * p_cons * sub_prob(params, c, &e);
                    }
                }
                if j < n {
                    alpha[i][j + 1] += a * INSERT_PRIOR * params.ins.get(&t[j]).copied().unwrap_or(0.0);
                }
            }
        }
        let z = alpha[m][n];
        if z <= 0.0 {
            continue;
        }
        let mut beta = vec![vec![0.0f64; n + 1]; m + 1];
        beta[m][n] = 1.0;
        for i in (0..=m).rev() {
            for j in (0..=n).rev() {
                if i == m && j == n {
                    continue;
                }
                let mut b = 0.0;
                if i < m {
                    let c = s[i];
                    b += p_cons * sub_prob(params, c, "") * beta[i + 1][j];
                    if j < n {
                        b += p_cons * sub_prob(params, c, &t[j].to_string()) * beta[i + 1][j + 1];
                    }
                    if j + 1 < n {
                        let e: String = t[j..j + 2].iter().collect();
                        b += p_cons * sub_prob(params, c, &e) * beta[i + 1][j + 2];
                    }
                }
                if j < n {
                    b += INSERT_PRIOR * params.ins.get(&t[j]).copied().unwrap_or(0.0) * beta[i][j + 1];
                }
                beta[i][j] = b;
            }
        }
        for i in 0..=m {
            for j in 0..=n {
                let a = alpha[i][j];
                if a == 0.0 {
                    continue;
                }
                if i < m {
                    let c = s[i];
                    let gamma_del = a * p_cons * sub_prob(params, c, "") * beta[i + 1][j] / z;
                    if gamma_del > 0.0 {
                        *sub_counts.entry(c).or_default().entry(String::new()).or_insert(0.0) +=
                            gamma_del;
                    }
                    if j < n {
                        let e = t[j].to_string();
                        let g = a * p_cons * sub_prob(params, c, &e) * beta[i + 1][j + 1] / z;
                        if g > 0.0 {
                            *sub_counts.entry(c).or_default().entry(e).or_insert(0.0) += g;
                        }
                    }
                    if j + 1 < n {
                        let e: String = t[j..j + 2].iter().collect();
                        let g = a * p_cons * sub_prob(params, c, &e) * beta[i + 1][j + 2] / z;
                        if g > 0.0 {
                            *sub_counts.entry(c).or_default().entry(e).or_insert(0.0) += g;
                        }
                    }
                }
                if j < n {
                    let g = a
                        * INSERT_PRIOR
                        * params.ins.get(&t[j]).copied().unwrap_or(0.0)
                        * beta[i][j + 1]
                        / z;
                    if g > 0.0 {
                        *ins_counts.entry(t[j]).or_insert(0.0) += g;
                    }
                }
            }
        }
    }
    (sub_counts, ins_counts)
}

/// One EM iteration: E over all pairs, then per-source-char normalization.
pub(crate) fn em_step(params: &ChannelParams, pairs: &[(Vec<char>, Vec<char>)]) -> ChannelParams {
    let (sub_counts, ins_counts) = expected_counts(params, pairs);
    let mut next = params.clone();
    for (c, targets) in next.sub.iter_mut() {
        let counts = sub_counts.get(c);
        let total: f64 = counts.map(|m| m.values().sum()).unwrap_or(0.0);
        if total <= 0.0 {
            continue; // char never aligned this round; keep previous weights
        }
        for (e, p) in targets.iter_mut() {
            *p = counts.and_then(|m| m.get(e)).copied().unwrap_or(0.0) / total;
        }
    }
    let ins_total: f64 = ins_counts.values().sum();
    if ins_total > 0.0 {
        for (c, p) in next.ins.iter_mut() {
            *p = ins_counts.get(c).copied().unwrap_or(0.0) / ins_total;
        }
    }
    next
}
