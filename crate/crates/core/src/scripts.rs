//! Registry of writing systems with codepoint-offset arithmetic and character
//! classification.
//!
//! The Unicode standard assigns each major Brahmi-derived script a block of
//! 128 codepoints, with the first 112 characters aligned across scripts at a
//! common offset from the block start. That alignment is what makes rule-based
//! script conversion, shared syllabification rules and cross-script similarity
//! measurement possible, so everything else in this crate leans on this module.

use crate::error::{Error, Result};
use unicode_normalization::UnicodeNormalization;

/// Number of offset-aligned codepoints at the start of every Brahmi block.
pub const ALIGNED_LEN: u32 = 112;

/// Width of a Brahmi script's Unicode block.
pub const BLOCK_LEN: u32 = 128;

/// A writing system known to the registry.
///
/// Brahmi-derived scripts carry their Unicode block origin; Latin has no
/// aligned block and is registered only for syllabification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScriptSpec {
    /// Primary language code written in this script (e.g. "hin", "mal").
    pub lang: &'static str,
    /// Script display name.
    pub name: &'static str,
    /// Unicode block origin, `None` for non-Brahmi scripts.
    pub range_start: Option<u32>,
    /// Count of offset-aligned codepoints (112 for every Brahmi script).
    pub aligned_len: u32,
}

impl ScriptSpec {
    pub fn is_brahmi(&self) -> bool {
        self.range_start.is_some()
    }
}

/// Character classes over the aligned block, defined once in Devanagari
/// offsets and shared by all Brahmi scripts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CharClass {
    ConsonantLetter,
    IndependentVowel,
    VowelSign,
    Virama,
    Nukta,
    CombiningSign,
    Digit,
    Punctuation,
    Other,
}

pub const DEVANAGARI: ScriptSpec = ScriptSpec {
    lang: "hin",
    name: "Devanagari",
    range_start: Some(0x0900),
    aligned_len: ALIGNED_LEN,
};

pub const BENGALI: ScriptSpec = ScriptSpec {
    lang: "ben",
    name: "Bengali",
    range_start: Some(0x0980),
    aligned_len: ALIGNED_LEN,
};

pub const GURMUKHI: ScriptSpec = ScriptSpec {
    lang: "pan",
    name: "Gurmukhi",
    range_start: Some(0x0A00),
    aligned_len: ALIGNED_LEN,
};

pub const GUJARATI: ScriptSpec = ScriptSpec {
    lang: "guj",
    name: "Gujarati",
    range_start: Some(0x0A80),
    aligned_len: ALIGNED_LEN,
};

pub const ORIYA: ScriptSpec = ScriptSpec {
    lang: "ori",
    name: "Oriya",
    range_start: Some(0x0B00),
    aligned_len: ALIGNED_LEN,
};

pub const TAMIL: ScriptSpec = ScriptSpec {
    lang: "tam",
    name: "Tamil",
    range_start: Some(0x0B80),
    aligned_len: ALIGNED_LEN,
};

pub const TELUGU: ScriptSpec = ScriptSpec {
    lang: "tel",
    name: "Telugu",
    range_start: Some(0x0C00),
    aligned_len: ALIGNED_LEN,
};

pub const KANNADA: ScriptSpec = ScriptSpec {
    lang: "kan",
    name: "Kannada",
    range_start: Some(0x0C80),
    aligned_len: ALIGNED_LEN,
};

pub const MALAYALAM: ScriptSpec = ScriptSpec {
    lang: "mal",
    name: "Malayalam",
    range_start: Some(0x0D00),
    aligned_len: ALIGNED_LEN,
};

pub const LATIN: ScriptSpec = ScriptSpec {
    lang: "eng",
    name: "Latin",
    range_start: None,
    aligned_len: 0,
};

/// All registered Brahmi-derived scripts.
pub const BRAHMI_SCRIPTS: [ScriptSpec; 9] = [
    DEVANAGARI, BENGALI, GURMUKHI, GUJARATI, ORIYA, TAMIL, TELUGU, KANNADA, MALAYALAM,
];

/// Resolve a script by language code or script name (case-insensitive).
pub fn lookup(key: &str) -> Result<ScriptSpec> {
    let k = key.to_ascii_lowercase();
    let spec = match k.as_str() {
        "hin" | "mar" | "kok" | "devanagari" => DEVANAGARI,
        "ben" | "bengali" => BENGALI,
        "pan" | "gurmukhi" => GURMUKHI,
        "guj" | "gujarati" => GUJARATI,
        "ori" | "oriya" => ORIYA,
        "tam" | "tamil" => TAMIL,
        "tel" | "telugu" => TELUGU,
        "kan" | "kannada" => KANNADA,
        "mal" | "malayalam" => MALAYALAM,
        "eng" | "lat" | "latin" => LATIN,
        _ => return Err(Error::UnknownScript(key.to_string())),
    };
    Ok(spec)
}

/// Canonical normalization applied at module boundaries (NFC) so offsets and
/// classification are deterministic.
pub fn normalize(text: &str) -> String {
    text.nfc().collect()
}

/// Offset of `ch` within `script`'s 128-codepoint block, if it lies there.
pub fn offset_of(ch: char, script: &ScriptSpec) -> Option<u32> {
    let start = script.range_start?;
    let cp = ch as u32;
    if (start..start + BLOCK_LEN).contains(&cp) {
        Some(cp - start)
    } else {
        None
    }
}

/// Inverse of [`offset_of`]: character at `offset` in `script`'s block.
pub fn from_offset(offset: u32, script: &ScriptSpec) -> Option<char> {
    let start = script.range_start?;
    if offset < BLOCK_LEN {
        char::from_u32(start + offset)
    } else {
        None
    }
}

/// Class of an aligned-block offset, in Devanagari reference offsets.
///
/// Offsets 0x70..0x7F lie outside the aligned region and are unaligned across
/// scripts, so they classify as `Other`.
pub fn class_of_offset(offset: u32) -> CharClass {
    use CharClass::*;
    match offset {
        0x01..=0x03 => CombiningSign,
        0x05..=0x14 => IndependentVowel,
        0x15..=0x39 => ConsonantLetter,
        0x3C => Nukta,
        0x3E..=0x4C => VowelSign,
        0x4D => Virama,
        0x58..=0x5F => ConsonantLetter,
        0x60..=0x61 => IndependentVowel,
        0x62..=0x63 => VowelSign,
        0x64..=0x65 => Punctuation,
        0x66..=0x6F => Digit,
        _ => Other,
    }
}

/// Classify `ch` with respect to `script`. Total: characters outside the
/// script's block classify as `Other`, except ASCII digits and punctuation.
pub fn classify_char(ch: char, script: &ScriptSpec) -> CharClass {
    if script.is_brahmi() {
        if let Some(off) = offset_of(ch, script) {
            return if off < script.aligned_len {
                class_of_offset(off)
            } else {
                CharClass::Other
            };
        }
    } else {
        // Latin: vowel set {a,e,i,o,u}, case-insensitive; 'y' is a consonant.
        if ch.is_ascii_alphabetic() {
            return if matches!(ch.to_ascii_lowercase(), 'a' | 'e' | 'i' | 'o' | 'u') {
                CharClass::IndependentVowel
            } else {
                CharClass::ConsonantLetter
            };
        }
    }
    if ch.is_ascii_digit() {
        CharClass::Digit
    } else if ch.is_ascii_punctuation() {
        CharClass::Punctuation
    } else {
        CharClass::Other
    }
}

/// Script-independent digit/punctuation test: ASCII digits and punctuation,
/// plus the digit and danda offsets of any registered Brahmi block.
fn is_digit_or_punct(ch: char) -> bool {
    if ch.is_ascii_digit() || ch.is_ascii_punctuation() {
        return true;
    }
    BRAHMI_SCRIPTS.iter().any(|s| {
        offset_of(ch, s)
            .map(|off| matches!(class_of_offset(off), CharClass::Digit | CharClass::Punctuation))
            .unwrap_or(false)
    })
}

/// True iff every non-punctuation, non-digit character of `word` lies in
/// `script`'s block.
pub fn is_in_script(word: &str, script: &ScriptSpec) -> Result<bool> {
    if word.is_empty() {
        return Err(Error::EmptyWord);
    }
    let word = normalize(word);
    Ok(word.chars().filter(|c| !is_digit_or_punct(*c)).all(|c| {
        if script.is_brahmi() {
            offset_of(c, script).is_some()
        } else {
            c.is_ascii_alphabetic()
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn offset_of_aligned_chars() {
        assert_eq!(offset_of('क', &DEVANAGARI), Some(0x15));
        assert_eq!(offset_of('ക', &MALAYALAM), Some(0x15));
        assert_eq!(offset_of('a', &DEVANAGARI), None);
    }

    #[test]
    fn offset_roundtrip_is_bijection() {
        for off in 0..BLOCK_LEN {
            let ch = from_offset(off, &DEVANAGARI).unwrap();
            assert_eq!(offset_of(ch, &DEVANAGARI), Some(off));
        }
    }

    #[test]
    fn classify_reference_chars() {
        assert_eq!(classify_char('क', &DEVANAGARI), CharClass::ConsonantLetter);
        assert_eq!(classify_char('\u{093E}', &DEVANAGARI), CharClass::VowelSign);
        assert_eq!(classify_char('.', &DEVANAGARI), CharClass::Punctuation);
        assert_eq!(classify_char('.', &LATIN), CharClass::Punctuation);
        assert_eq!(classify_char('\u{094D}', &DEVANAGARI), CharClass::Virama);
    }

    #[test]
    fn classes_agree_across_scripts_at_equal_offsets() {
        for off in 0..ALIGNED_LEN {
            let reference = class_of_offset(off);
            for s in &BRAHMI_SCRIPTS {
                let ch = from_offset(off, s).unwrap();
                assert_eq!(classify_char(ch, s), reference, "offset {off:#x} in {}", s.name);
            }
        }
    }

    #[test]
    fn range_starts_distinct_and_pinned() {
        let mut starts: Vec<u32> = BRAHMI_SCRIPTS.iter().map(|s| s.range_start.unwrap()).collect();
        starts.sort_unstable();
        starts.dedup();
        assert_eq!(starts.len(), BRAHMI_SCRIPTS.len());
        assert_eq!(DEVANAGARI.range_start, Some(0x0900));
        assert_eq!(MALAYALAM.range_start, Some(0x0D00));
        for s in &BRAHMI_SCRIPTS {
            assert_eq!(s.aligned_len, 112);
        }
    }

    #[test]
    fn is_in_script_basic() {
        assert!(is_in_script("दस", &DEVANAGARI).unwrap());
        assert!(!is_in_script("दस", &MALAYALAM).unwrap());
        assert!(is_in_script("दस.", &DEVANAGARI).unwrap());
        assert!(is_in_script("hello", &LATIN).unwrap());
        assert!(is_in_script("12.3", &DEVANAGARI).unwrap());
        assert!(matches!(is_in_script("", &DEVANAGARI), Err(Error::EmptyWord)));
    }

    #[test]
    fn latin_vowels() {
        assert_eq!(classify_char('a', &LATIN), CharClass::IndependentVowel);
        assert_eq!(classify_char('A', &LATIN), CharClass::IndependentVowel);
        assert_eq!(classify_char('y', &LATIN), CharClass::ConsonantLetter);
    }

    #[test]
    fn lookup_by_lang_and_name() {
        assert_eq!(lookup("mar").unwrap(), DEVANAGARI);
        assert_eq!(lookup("Malayalam").unwrap(), MALAYALAM);
        assert!(lookup("urd").is_err());
    }
}
