//! Command-line front-end: pipeline-composable subcommands over line-oriented
//! UTF-8 corpora. Exit status 0 on success, 1 on usage errors, 2 on data
//! errors; diagnostics go to stderr.

use std::collections::{HashMap, HashSet};
use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::error::Result;
use crate::eval::{bleu_corpus_with_options, oov_rate};
use crate::postedit::{postedit_translate, PosteditMode};
use crate::preorder::{read_tree, reorder_with, ClauseOrder};
use crate::scripts::{lookup, ScriptSpec};
use crate::similarity::similarity_matrix;
use crate::subword::{
    bpe_apply, bpe_learn_tagged, desegment, segment_corpus, syllabify_word, MergeTable,
    SegmentUnit, SubwordSentence,
};
use crate::translit::{
    convert_script, mine_candidate_pairs, train_translit, transliterate_statistical,
    TransliterationModel, WordPairList, DEFAULT_BEAM, DEFAULT_EM_ITERS, DEFAULT_LM_ORDER,
    DEFAULT_TOPK,
};

#[derive(Parser)]
#[command(
    name = "indicmt",
    about = "Corpus preprocessing, transliteration and evaluation for MT between related languages",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Default)]
struct IoArgs {
    /// Input file (default: stdin)
    #[arg(long)]
    input: Option<PathBuf>,
    /// Output file (default: stdout)
    #[arg(long)]
    output: Option<PathBuf>,
    /// Config file with key=value lines, overridden by flags
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Convert text between Brahmi-derived scripts by offset mapping
    ConvertScript {
        #[command(flatten)]
        io: IoArgs,
        #[arg(long)]
        src_lang: Option<String>,
        #[arg(long)]
        tgt_lang: Option<String>,
        /// Fail on unaligned or foreign-Brahmi characters instead of passing them through
        #[arg(long)]
        strict: bool,
    },
    /// Pairwise average-LCSR matrix over an n-way parallel corpus (TSV)
    SimilarityMatrix {
        #[command(flatten)]
        io: IoArgs,
        /// Corpus side as lang=path; repeat for every language
        #[arg(long = "corpus", required = true, num_args = 1..)]
        corpora: Vec<String>,
        /// Provenance string recorded in the output metadata
        #[arg(long, default_value = "cli")]
        corpus_id: String,
    },
    /// Split words into orthographic syllables
    Syllabify {
        #[command(flatten)]
        io: IoArgs,
        #[arg(long)]
        script: Option<String>,
    },
    /// Learn a BPE merge table from a corpus
    BpeLearn {
        #[command(flatten)]
        io: IoArgs,
        /// Number of merge operations
        #[arg(long)]
        merges: Option<usize>,
        /// Language codes recorded in the table metadata
        #[arg(long)]
        lang: Vec<String>,
    },
    /// Apply a learned merge table to words
    BpeApply {
        #[command(flatten)]
        io: IoArgs,
        /// Merge table file produced by bpe-learn
        #[arg(long)]
        merges_file: PathBuf,
    },
    /// Segment a corpus into subwords with boundary markers
    Segment {
        #[command(flatten)]
        io: IoArgs,
        /// Subword unit: os, bpe or char
        #[arg(long)]
        unit: Option<String>,
        #[arg(long)]
        script: Option<String>,
        /// Merge table file, required for --unit bpe
        #[arg(long)]
        merges_file: Option<PathBuf>,
    },
    /// Reconstruct words from boundary-marked subword output
    Desegment {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Train the statistical transliteration model from word pairs
    TranslitTrain {
        #[command(flatten)]
        io: IoArgs,
        /// Tab-separated word-pair file (default: --input)
        #[arg(long)]
        pairs: Option<PathBuf>,
        #[arg(long)]
        src_lang: String,
        #[arg(long)]
        tgt_lang: String,
        /// Character LM order
        #[arg(long)]
        order: Option<usize>,
        #[arg(long)]
        em_iters: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Transliterate words (one per line) with a trained model
    Translit {
        #[command(flatten)]
        io: IoArgs,
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        beam: Option<usize>,
        #[arg(long)]
        topk: Option<usize>,
    },
    /// Mine transliteration candidate pairs from a parallel corpus by LCSR
    MinePairs {
        #[command(flatten)]
        io: IoArgs,
        /// Source-side corpus file
        #[arg(long)]
        src: PathBuf,
        /// Target-side corpus file
        #[arg(long)]
        tgt: PathBuf,
        #[arg(long)]
        src_lang: Option<String>,
        #[arg(long)]
        tgt_lang: Option<String>,
        /// Minimum LCSR after mapping both words to Devanagari
        #[arg(long)]
        threshold: Option<f64>,
    },
    /// Replace untranslated source-script tokens in decoder output
    Postedit {
        #[command(flatten)]
        io: IoArgs,
        #[arg(long)]
        src_lang: Option<String>,
        #[arg(long)]
        tgt_lang: Option<String>,
        /// rule or statistical
        #[arg(long, default_value = "rule")]
        mode: String,
        /// Model file for --mode statistical
        #[arg(long)]
        model: Option<PathBuf>,
        #[arg(long)]
        beam: Option<usize>,
    },
    /// Reorder role-annotated constituency trees (one bracketed tree per line)
    Preorder {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Word-level corpus BLEU
    Bleu {
        #[command(flatten)]
        io: IoArgs,
        /// Hypothesis file
        #[arg(long)]
        hyp: PathBuf,
        /// Reference file
        #[arg(long = "ref")]
        reference: PathBuf,
        #[arg(long)]
        max_n: Option<usize>,
        /// Add-one smoothing (non-standard, diagnostics only)
        #[arg(long)]
        smooth: bool,
    },
    /// Fraction of test tokens missing from a training vocabulary
    OovRate {
        #[command(flatten)]
        io: IoArgs,
        /// Training corpus whose words form the vocabulary
        #[arg(long)]
        train: PathBuf,
    },
}

/// key=value config file; flag values take precedence via `or_config`.
struct Config(HashMap<String, String>);

impl Config {
    fn load(path: Option<&Path>) -> Result<Config> {
        let mut map = HashMap::new();
        if let Some(path) = path {
            for line in fs::read_to_string(path)?.lines() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                if let Some((k, v)) = line.split_once('=') {
                    map.insert(k.trim().to_string(), v.trim().to_string());
                }
            }
        }
        Ok(Config(map))
    }

    fn get(&self, key: &str) -> Option<&str> {
        self.0.get(key).map(String::as_str)
    }
}

fn or_config<T, F>(flag: Option<T>, config: &Config, key: &str, parse: F) -> Result<Option<T>>
where
    F: Fn(&str) -> Result<T>,
{
    match flag {
        Some(v) => Ok(Some(v)),
        None => config.get(key).map(parse).transpose(),
    }
}

fn parse_usize(s: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| crate::Error::InvalidArgument(format!("not a count: {s:?}")))
}

fn parse_f64(s: &str) -> Result<f64> {
    s.parse()
        .map_err(|_| crate::Error::InvalidArgument(format!("not a number: {s:?}")))
}

fn read_input(input: Option<&Path>) -> Result<String> {
    match input {
        Some(path) => Ok(fs::read_to_string(path)?),
        None => {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf)?;
            Ok(buf)
        }
    }
}

fn read_lines(input: Option<&Path>) -> Result<Vec<String>> {
    Ok(read_input(input)?.lines().map(|l| l.to_string()).collect())
}

fn read_file_lines(path: &Path) -> Result<Vec<String>> {
    Ok(fs::read_to_string(path)?
        .lines()
        .map(|l| l.to_string())
        .collect())
}

fn open_output(output: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match output {
        Some(path) => Box::new(BufWriter::new(fs::File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

fn script_arg(flag: Option<String>, config: &Config, key: &str) -> Result<ScriptSpec> {
    let name = or_config(flag, config, key, |s| Ok(s.to_string()))?
        .ok_or_else(|| crate::Error::InvalidArgument(format!("missing --{key}")))?;
    lookup(&name)
}

/// Run the CLI; returns the process exit status.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version as "errors" with successful exit
            if e.use_stderr() {
                eprintln!("{e}");
                return 1;
            }
            print!("{e}");
            return 0;
        }
    };
    match dispatch(cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(cmd: Command) -> Result<()> {
    match cmd {
        Command::ConvertScript {
            io,
            src_lang,
            tgt_lang,
            strict,
        } => {
            let config = Config::load(io.config.as_deref())?;
            let src = script_arg(src_lang, &config, "src-lang")?;
            let tgt = script_arg(tgt_lang, &config, "tgt-lang")?;
            let mut out = open_output(io.output.as_deref())?;
            let mut warnings = 0usize;
            for line in read_lines(io.input.as_deref())? {
                let (converted, w) = convert_script(&line, &src, &tgt, strict)?;
                warnings += w;
                writeln!(out, "{converted}")?;
            }
            out.flush()?;
            eprintln!("warnings={warnings}");
            Ok(())
        }
        Command::SimilarityMatrix {
            io,
            corpora,
            corpus_id,
        } => {
            let mut sides = Vec::new();
            let mut scripts = Vec::new();
            for spec in &corpora {
                let (lang, path) = spec.split_once('=').ok_or_else(|| {
                    crate::Error::InvalidArgument(format!("--corpus wants lang=path, got {spec:?}"))
                })?;
                sides.push((lang.to_string(), read_file_lines(Path::new(path))?));
                scripts.push((lang.to_string(), lookup(lang)?));
            }
            let matrix = similarity_matrix(&sides, &scripts, &corpus_id)?;
            let mut out = open_output(io.output.as_deref())?;
            write!(out, "{}", matrix.to_tsv())?;
            out.flush()?;
            eprintln!(
                "corpus={} sentences={} normalization=whitespace-collapse-only",
                matrix.corpus_id, matrix.sentence_count
            );
            Ok(())
        }
        Command::Syllabify { io, script } => {
            let config = Config::load(io.config.as_deref())?;
            let script = script_arg(script, &config, "script")?;
            let mut out = open_output(io.output.as_deref())?;
            for line in read_lines(io.input.as_deref())? {
                let mut pieces = Vec::new();
                for word in line.split_whitespace() {
                    pieces.extend(syllabify_word(word, &script)?);
                }
                writeln!(out, "{}", pieces.join(" "))?;
            }
            out.flush()?;
            Ok(())
        }
        Command::BpeLearn { io, merges, lang } => {
            let config = Config::load(io.config.as_deref())?;
            // 1000 merge operations by default
            let merges = or_config(merges, &config, "merges", parse_usize)?.unwrap_or(1000);
            let corpus = read_lines(io.input.as_deref())?;
            let table = bpe_learn_tagged(&corpus, merges, &lang)?;
            let mut out = open_output(io.output.as_deref())?;
            write!(out, "{}", table.to_text())?;
            out.flush()?;
            Ok(())
        }
        Command::BpeApply { io, merges_file } => {
            let table = MergeTable::parse(&fs::read_to_string(merges_file)?)?;
            let mut out = open_output(io.output.as_deref())?;
            for line in read_lines(io.input.as_deref())? {
                let mut pieces = Vec::new();
                for word in line.split_whitespace() {
                    pieces.extend(bpe_apply(word, &table)?);
                }
                writeln!(out, "{}", pieces.join(" "))?;
            }
            out.flush()?;
            Ok(())
        }
        Command::Segment {
            io,
            unit,
            script,
            merges_file,
        } => {
            let config = Config::load(io.config.as_deref())?;
            let unit_name = or_config(unit, &config, "unit", |s| Ok(s.to_string()))?
                .ok_or_else(|| crate::Error::InvalidArgument("missing --unit".into()))?;
            let script = script_arg(script, &config, "script")?;
            let table;
            let unit = match unit_name.as_str() {
                "os" => SegmentUnit::Os,
                "char" => SegmentUnit::Char,
                "bpe" => {
                    let path = merges_file.ok_or_else(|| {
                        crate::Error::InvalidArgument("--unit bpe needs --merges-file".into())
                    })?;
                    table = MergeTable::parse(&fs::read_to_string(path)?)?;
                    SegmentUnit::Bpe(&table)
                }
                other => {
                    return Err(crate::Error::InvalidArgument(format!(
                        "unknown unit {other:?} (expected os, bpe or char)"
                    )))
                }
            };
            let corpus = read_lines(io.input.as_deref())?;
            let segged = segment_corpus(&corpus, &unit, &script)?;
            let mut out = open_output(io.output.as_deref())?;
            for sent in &segged {
                writeln!(out, "{}", sent.to_line())?;
            }
            out.flush()?;
            Ok(())
        }
        Command::Desegment { io } => {
            let mut out = open_output(io.output.as_deref())?;
            for line in read_lines(io.input.as_deref())? {
                let sent = SubwordSentence::from_line(&line);
                writeln!(out, "{}", desegment(&sent)?)?;
            }
            out.flush()?;
            Ok(())
        }
        Command::TranslitTrain {
            io,
            pairs,
            src_lang,
            tgt_lang,
            order,
            em_iters,
            seed,
        } => {
            let config = Config::load(io.config.as_deref())?;
            let order =
                or_config(order, &config, "order", parse_usize)?.unwrap_or(DEFAULT_LM_ORDER);
            let em_iters = or_config(em_iters, &config, "em-iters", parse_usize)?
                .unwrap_or(DEFAULT_EM_ITERS);
            let text = match pairs {
                Some(path) => fs::read_to_string(path)?,
                None => read_input(io.input.as_deref())?,
            };
            let pairs = WordPairList::parse(&text)?;
            let model = train_translit(&pairs, order, em_iters, seed, &src_lang, &tgt_lang)?;
            let mut out = open_output(io.output.as_deref())?;
            writeln!(out, "{}", model.to_json()?)?;
            out.flush()?;
            eprintln!("trained on {} pairs", pairs.pairs.len());
            Ok(())
        }
        Command::Translit {
            io,
            model,
            beam,
            topk,
        } => {
            let config = Config::load(io.config.as_deref())?;
            let beam = or_config(beam, &config, "beam", parse_usize)?.unwrap_or(DEFAULT_BEAM);
            let topk = or_config(topk, &config, "topk", parse_usize)?.unwrap_or(DEFAULT_TOPK);
            let model = TransliterationModel::from_json(&fs::read_to_string(model)?)?;
            let mut out = open_output(io.output.as_deref())?;
            for line in read_lines(io.input.as_deref())? {
                let word = line.trim();
                if word.is_empty() {
                    writeln!(out)?;
                    continue;
                }
                let cands = transliterate_statistical(&model, word, beam, topk)?;
                let fields: Vec<String> = cands
                    .iter()
                    .map(|(c, s)| format!("{c}\t{s:.4}"))
                    .collect();
                writeln!(out, "{}", fields.join("\t"))?;
            }
            out.flush()?;
            Ok(())
        }
        Command::MinePairs {
            io,
            src,
            tgt,
            src_lang,
            tgt_lang,
            threshold,
        } => {
            let config = Config::load(io.config.as_deref())?;
            let src_script = script_arg(src_lang, &config, "src-lang")?;
            let tgt_script = script_arg(tgt_lang, &config, "tgt-lang")?;
            let threshold =
                or_config(threshold, &config, "threshold", parse_f64)?.unwrap_or(0.8);
            let src_sents = read_file_lines(&src)?;
            let tgt_sents = read_file_lines(&tgt)?;
            let mined =
                mine_candidate_pairs(&src_sents, &tgt_sents, &src_script, &tgt_script, threshold)?;
            let mut out = open_output(io.output.as_deref())?;
            write!(out, "{}", mined.to_text())?;
            out.flush()?;
            eprintln!("mined={}", mined.pairs.len());
            Ok(())
        }
        Command::Postedit {
            io,
            src_lang,
            tgt_lang,
            mode,
            model,
            beam,
        } => {
            let config = Config::load(io.config.as_deref())?;
            let src = script_arg(src_lang, &config, "src-lang")?;
            let tgt = script_arg(tgt_lang, &config, "tgt-lang")?;
            let beam = or_config(beam, &config, "beam", parse_usize)?.unwrap_or(DEFAULT_BEAM);
            let sentences: Vec<Vec<String>> = read_lines(io.input.as_deref())?
                .iter()
                .map(|l| l.split_whitespace().map(|t| t.to_string()).collect())
                .collect();
            let loaded;
            let mode = match mode.as_str() {
                "rule" => PosteditMode::Rule,
                "statistical" => {
                    let path = model.ok_or_else(|| {
                        crate::Error::InvalidArgument("--mode statistical needs --model".into())
                    })?;
                    loaded = TransliterationModel::from_json(&fs::read_to_string(path)?)?;
                    PosteditMode::Statistical {
                        model: &loaded,
                        beam,
                    }
                }
                other => {
                    return Err(crate::Error::InvalidArgument(format!(
                        "unknown mode {other:?} (expected rule or statistical)"
                    )))
                }
            };
            let (edited, stats) = postedit_translate(&sentences, &src, &tgt, &mode)?;
            let mut out = open_output(io.output.as_deref())?;
            for sent in &edited {
                writeln!(out, "{}", sent.join(" "))?;
            }
            out.flush()?;
            eprintln!("replaced={} skipped={}", stats.replaced, stats.skipped);
            Ok(())
        }
        Command::Preorder { io } => {
            let config = Config::load(io.config.as_deref())?;
            let order = match config.get("clause_order") {
                Some(spec) => ClauseOrder::parse(spec)?,
                None => ClauseOrder::default(),
            };
            let mut out = open_output(io.output.as_deref())?;
            for line in read_lines(io.input.as_deref())? {
                if line.trim().is_empty() {
                    writeln!(out)?;
                    continue;
                }
                let tree = read_tree(&line)?;
                writeln!(out, "{}", reorder_with(&tree, &order).join(" "))?;
            }
            out.flush()?;
            Ok(())
        }
        Command::Bleu {
            io,
            hyp,
            reference,
            max_n,
            smooth,
        } => {
            let config = Config::load(io.config.as_deref())?;
            let max_n = or_config(max_n, &config, "max-n", parse_usize)?.unwrap_or(4);
            let hyps = read_file_lines(&hyp)?;
            let refs = read_file_lines(&reference)?;
            let score = bleu_corpus_with_options(&hyps, &refs, max_n, smooth)?;
            let mut out = open_output(io.output.as_deref())?;
            writeln!(out, "{}", score.report())?;
            out.flush()?;
            Ok(())
        }
        Command::OovRate { io, train } => {
            let vocab: HashSet<String> = read_file_lines(&train)?
                .iter()
                .flat_map(|l| l.split_whitespace().map(|t| t.to_string()))
                .collect();
            let test = read_lines(io.input.as_deref())?;
            let rate = oov_rate(&test, &vocab)?;
            let mut out = open_output(io.output.as_deref())?;
            writeln!(out, "oov_rate={rate:.4}")?;
            out.flush()?;
            Ok(())
        }
    }
}
