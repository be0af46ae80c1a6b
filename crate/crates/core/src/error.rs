use thiserror::Error;

/// Errors raised by library operations. Data problems (bad corpora, malformed
/// trees, mismatched models) are all reported through this type; usage errors
/// are the CLI's business.
#[derive(Debug, Error)]
pub enum Error {
    #[error("empty word")]
    EmptyWord,

    #[error("empty corpus")]
    EmptyCorpus,

    #[error("sentence counts differ: {left} vs {right}")]
    SentenceCountMismatch { left: usize, right: usize },

    #[error("corpus length mismatch between languages {lang_a} ({len_a}) and {lang_b} ({len_b})")]
    CorpusLengthMismatch {
        lang_a: String,
        lang_b: String,
        len_a: usize,
        len_b: usize,
    },

    #[error("cannot convert {ch:?} at position {pos}: not in the aligned block of {script}")]
    UnalignedChar { ch: char, pos: usize, script: String },

    #[error("script {0} is not a Brahmi-derived script")]
    NotBrahmi(String),

    #[error("unknown script or language: {0}")]
    UnknownScript(String),

    #[error("both strings empty")]
    BothEmpty,

    #[error("pair {index} has an empty side")]
    EmptyPairSide { index: usize },

    #[error("empty pair list")]
    EmptyPairList,

    #[error("threshold must be in (0, 1], got {0}")]
    BadThreshold(f64),

    #[error("word on line {line} contains the boundary marker character '_'")]
    MarkerInWord { line: usize },

    #[error("malformed subword sequence: {0}")]
    MalformedSubwords(String),

    #[error("parse error at position {pos}: {msg}")]
    TreeParse { pos: usize, msg: String },

    #[error("model languages ({model_src}->{model_tgt}) do not match requested ({src}->{tgt})")]
    ModelLangMismatch {
        model_src: String,
        model_tgt: String,
        src: String,
        tgt: String,
    },

    #[error("invalid model file: {0}")]
    BadModel(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
