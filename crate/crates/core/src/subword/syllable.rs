//! Rule-based orthographic syllabification.
//!
//! An orthographic syllable is a sequence of one or more consonants followed
//! by a vowel (C+V, onset and nucleus, no coda). For alphabetic scripts a
//! maximal vowel run forms one nucleus; for abugidas a consonant carries an
//! implicit vowel unless a virama binds it into the following cluster.

use crate::error::{Error, Result};
use crate::scripts::{classify_char, normalize, CharClass, ScriptSpec};

/// Split a single word into orthographic syllables. Concatenation of the
/// result equals the (normalized) word.
pub fn syllabify_word(word: &str, script: &ScriptSpec) -> Result<Vec<String>> {
    if word.is_empty() {
        return Err(Error::EmptyWord);
    }
    let word = normalize(word);
    if script.is_brahmi() {
        Ok(syllabify_abugida(&word, script))
    } else {
        Ok(syllabify_alphabetic(&word, script))
    }
}

/// C*V+ groups, with a possible trailing all-consonant syllable.
fn syllabify_alphabetic(word: &str, script: &ScriptSpec) -> Vec<String> {
    let chars: Vec<char> = word.chars().collect();
    let mut syllables = Vec::new();
    let mut current = String::new();
    let mut in_nucleus = false;
    for &ch in &chars {
        match classify_char(ch, script) {
            CharClass::IndependentVowel => {
                current.push(ch);
                in_nucleus = true;
            }
            CharClass::ConsonantLetter => {
                if in_nucleus {
                    syllables.push(std::mem::take(&mut current));
                    in_nucleus = false;
                }
                current.push(ch);
            }
            _ => {
                // digits, punctuation and anything else stand alone
                if !current.is_empty() {
                    syllables.push(std::mem::take(&mut current));
                    in_nucleus = false;
                }
                syllables.push(ch.to_string());
            }
        }
    }
    if !current.is_empty() {
        syllables.push(current);
    }
    syllables
}

/// Abugida rule: a syllable closes after an implicit-vowel consonant, a vowel
/// sign or an independent vowel; a virama binds the consonant cluster to the
/// following consonant; combining signs and nukta attach to the preceding
/// syllable.
fn syllabify_abugida(word: &str, script: &ScriptSpec) -> Vec<String> {
    let chars: Vec<char> = word.chars().collect();
    let classes: Vec<CharClass> = chars.iter().map(|&c| classify_char(c, script)).collect();
    let mut syllables: Vec<String> = Vec::new();
    let mut current = String::new();
    let mut i = 0;
    let close = |current: &mut String, syllables: &mut Vec<String>| {
        if !current.is_empty() {
            syllables.push(std::mem::take(current));
        }
    };
    while i < chars.len() {
        match classes[i] {
            CharClass::ConsonantLetter => {
                current.push(chars[i]);
                i += 1;
                // optional nukta on the consonant
                while i < chars.len() && classes[i] == CharClass::Nukta {
                    current.push(chars[i]);
                    i += 1;
                }
                match classes.get(i) {
                    Some(CharClass::Virama) => {
                        current.push(chars[i]);
                        i += 1;
                        if i >= chars.len() || classes[i] != CharClass::ConsonantLetter {
                            // word-final virama attaches to the preceding syllable
                            close(&mut current, &mut syllables);
                        }
                        // otherwise the cluster continues into the next consonant
                    }
                    Some(CharClass::VowelSign) => {
                        current.push(chars[i]);
                        i += 1;
                        while i < chars.len() && classes[i] == CharClass::CombiningSign {
                            current.push(chars[i]);
                            i += 1;
                        }
                        close(&mut current, &mut syllables);
                    }
                    Some(CharClass::CombiningSign) => {
                        // implicit vowel plus anusvara-style sign
                        while i < chars.len() && classes[i] == CharClass::CombiningSign {
                            current.push(chars[i]);
                            i += 1;
                        }
                        close(&mut current, &mut syllables);
                    }
                    _ => {
                        // implicit vowel: syllable closes after the consonant
                        close(&mut current, &mut syllables);
                    }
                }
            }
            CharClass::IndependentVowel => {
                close(&mut current, &mut syllables);
                current.push(chars[i]);
                i += 1;
                while i < chars.len()
                    && matches!(classes[i], CharClass::CombiningSign | CharClass::Nukta)
                {
                    current.push(chars[i]);
                    i += 1;
                }
                close(&mut current, &mut syllables);
            }
            CharClass::CombiningSign | CharClass::Nukta | CharClass::VowelSign
            | CharClass::Virama => {
                // stray marks attach to the preceding syllable when one exists
                if let Some(last) = syllables.last_mut() {
                    last.push(chars[i]);
                } else {
                    syllables.push(chars[i].to_string());
                }
                i += 1;
            }
            CharClass::Digit | CharClass::Punctuation | CharClass::Other => {
                close(&mut current, &mut syllables);
                syllables.push(chars[i].to_string());
                i += 1;
            }
        }
    }
    if !current.is_empty() {
        syllables.push(current);
    }
    syllables
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scripts::{DEVANAGARI, LATIN, MALAYALAM};

    fn syl(word: &str, script: &ScriptSpec) -> Vec<String> {
        syllabify_word(word, script).unwrap()
    }

    #[test]
    fn latin_examples() {
        assert_eq!(syl("spacious", &LATIN), vec!["spa", "ciou", "s"]);
        assert_eq!(syl("a", &LATIN), vec!["a"]);
        assert_eq!(syl("Childhood", &LATIN), vec!["Chi", "ldhoo", "d"]);
        assert_eq!(syl("simplicity", &LATIN), vec!["si", "mpli", "ci", "ty"]);
        assert_eq!(syl("means", &LATIN), vec!["mea", "ns"]);
        assert_eq!(syl("rhythm", &LATIN), vec!["rhythm"]);
    }

    #[test]
    fn devanagari_virama_binds_cluster() {
        assert_eq!(syl("अन्धापन", &DEVANAGARI), vec!["अ", "न्धा", "प", "न"]);
    }

    #[test]
    fn devanagari_vowel_signs_and_independents() {
        assert_eq!(syl("आदमी", &DEVANAGARI), vec!["आ", "द", "मी"]);
        assert_eq!(syl("क", &DEVANAGARI), vec!["क"]);
    }

    #[test]
    fn word_final_virama_attaches_to_preceding_syllable() {
        assert_eq!(syl("जल्", &DEVANAGARI), vec!["ज", "ल्"]);
    }

    #[test]
    fn combining_sign_attaches_to_preceding_syllable() {
        // anusvara after implicit-vowel consonant
        assert_eq!(syl("रंग", &DEVANAGARI), vec!["रं", "ग"]);
    }

    #[test]
    fn digits_and_punctuation_are_single_syllables() {
        assert_eq!(syl("क1.", &DEVANAGARI), vec!["क", "1", "."]);
        assert_eq!(syl("ab.c", &LATIN), vec!["a", "b", ".", "c"]);
    }

    #[test]
    fn concatenation_reproduces_word() {
        for (w, script) in [
            ("spacious", &LATIN),
            ("अन्धापन", &DEVANAGARI),
            ("ജലം", &MALAYALAM),
            ("प्रकार", &DEVANAGARI),
        ] {
            let joined: String = syl(w, script).concat();
            assert_eq!(joined, w);
            assert!(syl(w, script).iter().all(|s| !s.is_empty()));
        }
    }

    #[test]
    fn empty_word_rejected() {
        assert!(syllabify_word("", &LATIN).is_err());
    }
}
