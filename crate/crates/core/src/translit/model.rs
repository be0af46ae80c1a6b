//! Trained transliteration model and its on-disk JSON format.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::translit::lm::CharLm;

pub const MODEL_VERSION: u32 = 1;

/// Probability of choosing an insertion over consuming the next source
/// character. Fixed structural prior of the channel model.
pub const INSERT_PRIOR: f64 = 0.02;

/// Character channel model: per-source-character substitution weights
/// (targets of length 0..=2, empty meaning deletion), insertion weights and
/// a target character n-gram LM.
#[derive(Debug, Clone)]
pub struct TransliterationModel {
    pub version: u32,
    pub src_lang: String,
    pub tgt_lang: String,
    /// LM order (>= 2).
    pub n: usize,
    /// log P(target string | source char); targets per char sum to 1.
    pub sub_weights: BTreeMap<char, BTreeMap<String, f64>>,
    /// log P(target char | insertion); sums to 1 over the alphabet.
    pub ins_weights: BTreeMap<char, f64>,
    pub lm: CharLm,
}

#[derive(Serialize, Deserialize)]
struct ModelFile {
    version: u32,
    src_lang: String,
    tgt_lang: String,
    n: usize,
    sub_weights: Vec<(String, String, f64)>,
    ins_weights: Vec<(String, f64)>,
    lm: LmFile,
}

#[derive(Serialize, Deserialize)]
struct LmFile {
    order: usize,
    ngrams: Vec<(String, String, f64)>,
}

impl TransliterationModel {
    pub fn to_json(&self) -> Result<String> {
        let file = ModelFile {
            version: self.version,
            src_lang: self.src_lang.clone(),
            tgt_lang: self.tgt_lang.clone(),
            n: self.n,
            sub_weights: self
                .sub_weights
                .iter()
                .flat_map(|(c, targets)| {
                    targets
                        .iter()
                        .map(move |(t, p)| (c.to_string(), t.clone(), *p))
                })
                .collect(),
            ins_weights: self
                .ins_weights
                .iter()
                .map(|(c, p)| (c.to_string(), *p))
                .collect(),
            lm: LmFile {
                order: self.lm.order,
                ngrams: self.lm.to_rows(),
            },
        };
        Ok(serde_json::to_string_pretty(&file)?)
    }

    pub fn from_json(text: &str) -> Result<TransliterationModel> {
        let file: ModelFile = serde_json::from_str(text)?;
        if file.version != MODEL_VERSION {
            return Err(Error::BadModel(format!(
                "unsupported model version {}",
                file.version
            )));
        }
        if file.n < 2 {
            return Err(Error::BadModel(format!("lm order {} < 2", file.n)));
        }
        let mut sub_weights: BTreeMap<char, BTreeMap<String, f64>> = BTreeMap::new();
        for (src, tgt, p) in &file.sub_weights {
            let mut it = src.chars();
            let c = it
                .next()
                .ok_or_else(|| Error::BadModel("empty source character".into()))?;
            if it.next().is_some() {
                return Err(Error::BadModel(format!(
                    "multi-character source symbol {src:?}"
                )));
            }
            sub_weights.entry(c).or_default().insert(tgt.clone(), *p);
        }
        let mut ins_weights = BTreeMap::new();
        for (ch, p) in &file.ins_weights {
            let c = ch
                .chars()
                .next()
                .ok_or_else(|| Error::BadModel("empty insertion character".into()))?;
            ins_weights.insert(c, *p);
        }
        Ok(TransliterationModel {
            version: file.version,
            src_lang: file.src_lang,
            tgt_lang: file.tgt_lang,
            n: file.n,
            sub_weights,
            ins_weights,
            lm: CharLm::from_rows(file.lm.order, &file.lm.ngrams),
        })
    }
}

/// Parallel list of (source word, target word) transliteration pairs.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WordPairList {
    pub pairs: Vec<(String, String)>,
}

impl WordPairList {
    pub fn new(pairs: Vec<(String, String)>) -> Result<WordPairList> {
        for (i, (s, t)) in pairs.iter().enumerate() {
            if s.is_empty() || t.is_empty() {
                return Err(Error::EmptyPairSide { index: i });
            }
        }
        Ok(WordPairList { pairs })
    }

    /// Parse the tab-separated one-pair-per-line format.
    pub fn parse(text: &str) -> Result<WordPairList> {
        let mut pairs = Vec::new();
        for (i, line) in text.lines().enumerate() {
            if line.is_empty() {
                continue;
            }
            let mut it = line.splitn(2, '\t');
            let s = it.next().unwrap_or("");
            let t = it.next().ok_or_else(|| {
                Error::InvalidArgument(format!("line {}: expected two tab-separated words", i + 1))
            })?;
            if s.is_empty() || t.is_empty() {
                return Err(Error::EmptyPairSide { index: i });
            }
            pairs.push((s.to_string(), t.to_string()));
        }
        Ok(WordPairList { pairs })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (s, t) in &self.pairs {
            out.push_str(s);
            out.push('\t');
            out.push_str(t);
            out.push('\n');
        }
        out
    }
}
