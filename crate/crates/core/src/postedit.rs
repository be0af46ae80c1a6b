//! Post-editing of decoder output: detect untranslated source-script words
//! and replace them by rule-based or statistical transliteration.

use crate::error::{Error, Result};
use crate::scripts::{is_in_script, offset_of, ScriptSpec};
use crate::translit::{convert_script, transliterate_statistical, TransliterationModel};

/// How detected tokens are replaced.
pub enum PosteditMode<'a> {
    /// Offset-based script conversion.
    Rule,
    /// Top-1 of the statistical transliterator.
    Statistical {
        model: &'a TransliterationModel,
        beam: usize,
    },
}

/// Substitution summary emitted after a post-editing pass.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PosteditStats {
    /// Tokens replaced by transliteration.
    pub replaced: usize,
    /// Mixed-script tokens left untouched.
    pub skipped: usize,
}

/// Indices of tokens that are in the source script but not the target script.
pub fn detect_untranslated(
    sentence: &[String],
    src: &ScriptSpec,
    tgt: &ScriptSpec,
) -> Vec<usize> {
    sentence
        .iter()
        .enumerate()
        .filter(|(_, tok)| {
            !tok.is_empty()
                && is_in_script(tok, src).unwrap_or(false)
                && !is_in_script(tok, tgt).unwrap_or(true)
        })
        .map(|(i, _)| i)
        .collect()
}

/// A token drawing letters from both scripts' blocks; the paper does not
/// address these, so they are skipped and counted separately.
fn is_mixed_script(tok: &str, src: &ScriptSpec, tgt: &ScriptSpec) -> bool {
    let has_src = tok.chars().any(|c| offset_of(c, src).is_some());
    let has_tgt = tok.chars().any(|c| offset_of(c, tgt).is_some());
    has_src && has_tgt
}

/// Replace every detected untranslated token in every sentence. Token count
/// and order are preserved; tokens already in the target script are
/// untouched.
pub fn postedit_translate(
    sentences: &[Vec<String>],
    src: &ScriptSpec,
    tgt: &ScriptSpec,
    mode: &PosteditMode,
) -> Result<(Vec<Vec<String>>, PosteditStats)> {
    if src == tgt {
        return Err(Error::InvalidArgument(
            "post-editing needs distinct source and target scripts".into(),
        ));
    }
    if let PosteditMode::Statistical { model, .. } = mode {
        if model.src_lang != src.lang || model.tgt_lang != tgt.lang {
            return Err(Error::ModelLangMismatch {
                model_src: model.src_lang.clone(),
                model_tgt: model.tgt_lang.clone(),
                src: src.lang.to_string(),
                tgt: tgt.lang.to_string(),
            });
        }
    }
    let mut stats = PosteditStats::default();
    let mut out = Vec::with_capacity(sentences.len());
    for sent in sentences {
        let detected: std::collections::HashSet<usize> =
            detect_untranslated(sent, src, tgt).into_iter().collect();
        let mut edited = Vec::with_capacity(sent.len());
        for (i, tok) in sent.iter().enumerate() {
            if detected.contains(&i) {
                let replacement = match mode {
                    PosteditMode::Rule => convert_script(tok, src, tgt, false)?.0,
                    PosteditMode::Statistical { model, beam } => {
                        transliterate_statistical(model, tok, *beam, 1)?
                            .into_iter()
                            .next()
                            .map(|(cand, _)| cand)
                            .unwrap_or_else(|| tok.clone())
                    }
                };
                edited.push(replacement);
                stats.replaced += 1;
            } else {
                if is_mixed_script(tok, src, tgt) {
                    stats.skipped += 1;
                }
                edited.push(tok.clone());
            }
        }
        out.push(edited);
    }
    Ok((out, stats))
}
