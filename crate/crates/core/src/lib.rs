//! Preprocessing, transliteration and evaluation toolkit for statistical MT
//! between related languages written in Brahmi-derived scripts.
//!
//! The pieces compose into a corpus pipeline: script conversion and lexical
//! similarity measurement, orthographic-syllable / BPE / character
//! segmentation with boundary markers, rule-based and statistical
//! transliteration, untranslated-word post-editing, source-side pre-ordering
//! of role trees and word-level BLEU scoring. Everything is also exposed
//! through the `indicmt` command-line tool.

pub mod cli;
pub mod error;
pub mod eval;
pub mod postedit;
pub mod preorder;
pub mod scripts;
pub mod similarity;
pub mod subword;
pub mod translit;

pub use error::{Error, Result};
