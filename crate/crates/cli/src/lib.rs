//! The `dsvs` command line: build lexicons from corpora, trace incremental
//! parses, rank sense readings and rank continuations.
//!
//! [`run`] holds the whole program so it can be driven from tests with
//! in-memory streams. Exit codes: 0 on success, 1 when the input cannot be
//! parsed (unknown word or dead end), 2 on usage, file or lexicon errors.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use dsvs::interpreter::{
    disambiguate, expect, score_tree, InterpretError, Scored, UnderspecStrategy,
};
use dsvs::lexicon::{
    build_lexicon, read_corpus_dir, tokenize, CorpusError, LexiconError, LexiconTarget,
};
use dsvs::parser::{axiom, parse_sequence, parse_word, Candidate, ParseError, ParseState};
use dsvs::tensor::{Space, TensorError};
use dsvs::{load_lexicon, save_lexicon, Lexicon, TypeSpaceMap};
use thiserror::Error;

pub mod json;

use json::{
    CandidateOut, DisambiguateOut, ErrorOut, ExpectOut, ParseOut, RankedContinuation,
    RankedReading, Score, TraceEvent, SCHEMA_VERSION,
};

#[derive(Parser, Debug)]
#[command(
    name = "dsvs",
    version,
    about = "Incremental parsing with tensor semantics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Lexicon maintenance.
    Lexicon {
        #[command(subcommand)]
        action: LexiconCommand,
    },
    /// Parse a word sequence, optionally printing the tree after every word.
    Parse(ParseArgs),
    /// Rank the readings of a (possibly partial) sentence by plausibility.
    Disambiguate(ScoreArgs),
    /// Rank candidate next words after a prefix.
    Expect(ExpectArgs),
}

#[derive(Subcommand, Debug)]
enum LexiconCommand {
    /// Build nouns and intransitive verbs from excerpt co-occurrence counts.
    Build(BuildArgs),
}

#[derive(Args, Debug)]
struct BuildArgs {
    /// Directory of text files; blank lines separate excerpts.
    #[arg(long)]
    corpus: PathBuf,
    /// One `word [type]` per line; type is `e` (default) or `et`.
    #[arg(long)]
    targets: PathBuf,
    /// Context words spanning the entity space, one per line.
    #[arg(long)]
    contexts: PathBuf,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args, Debug)]
struct Common {
    /// Lexicon file.
    #[arg(long, env = "DSVS_LEXICON")]
    lexicon: PathBuf,
    /// How open requirements are filled before scoring.
    #[arg(long, default_value = "sum", value_parser = parse_strategy)]
    strategy: UnderspecStrategy,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct ParseArgs {
    #[command(flatten)]
    common: Common,
    /// Print every candidate tree after each word.
    #[arg(long)]
    trace: bool,
    /// Words to parse; punctuation is ignored and case folded.
    words: Vec<String>,
}

#[derive(Args, Debug)]
struct ScoreArgs {
    #[command(flatten)]
    common: Common,
    words: Vec<String>,
}

#[derive(Args, Debug)]
struct ExpectArgs {
    #[command(flatten)]
    common: Common,
    /// Prefix already heard.
    #[arg(long, default_value = "")]
    after: String,
    /// Comma-separated candidate next words.
    #[arg(long, value_delimiter = ',', required = true)]
    candidates: Vec<String>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

fn parse_strategy(s: &str) -> Result<UnderspecStrategy, String> {
    s.parse()
}

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Lexicon(#[from] LexiconError),
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error(transparent)]
    Tensor(#[from] TensorError),
    #[error("{path}: {source}")]
    Read { path: PathBuf, source: io::Error },
    #[error("{path}:{line}: {message}")]
    Targets {
        path: PathBuf,
        line: usize,
        message: String,
    },
    #[error("{0}")]
    Input(#[from] ParseError),
    #[error(transparent)]
    Interpret(InterpretError),
    #[error(transparent)]
    Output(#[from] io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl From<InterpretError> for CliError {
    fn from(e: InterpretError) -> CliError {
        match e {
            InterpretError::Parse(p) => CliError::Input(p),
            other => CliError::Interpret(other),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(ParseError::LexiconMiss { .. } | ParseError::DeadEnd { .. }) => 1,
            _ => 2,
        }
    }
}

/// Runs the program on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    let result = match cli.command {
        Command::Lexicon {
            action: LexiconCommand::Build(a),
        } => build(&a, out),
        Command::Parse(a) => parse(&a, out),
        Command::Disambiguate(a) => rank_readings(&a, out),
        Command::Expect(a) => rank_continuations(&a, out),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {}", describe(&e));
            e.exit_code()
        }
    }
}

/// Human-readable message; words are numbered from 1 here, while JSON
/// `word_index` fields count from 0.
fn describe(e: &CliError) -> String {
    match e {
        CliError::Input(ParseError::DeadEnd { word, index }) => {
            format!(
                "dead end at word {} ({word:?}): no parse continues",
                index + 1
            )
        }
        CliError::Input(ParseError::LexiconMiss { word, index }) => {
            format!(
                "lexicon miss at word {}: {word:?} is not in the lexicon",
                index + 1
            )
        }
        other => other.to_string(),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })
}

fn words_of(parts: &[String]) -> Vec<String> {
    tokenize(&parts.join(" "))
}

fn build(a: &BuildArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let excerpts = read_corpus_dir(&a.corpus)?;
    let mut targets = Vec::new();
    for (n, line) in read(&a.targets)?.lines().enumerate() {
        match LexiconTarget::parse_line(line) {
            None => {}
            Some(Ok(t)) => targets.push(t),
            Some(Err(message)) => {
                return Err(CliError::Targets {
                    path: a.targets.clone(),
                    line: n + 1,
                    message,
                })
            }
        }
    }
    let contexts: Vec<String> = read(&a.contexts)?
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim().to_lowercase())
        .filter(|l| !l.is_empty())
        .collect();
    let map = TypeSpaceMap::new(
        Space::new("W", contexts)?,
        Space::new("S", ["true", "false"])?,
    );
    let lex = build_lexicon(&excerpts, &targets, &map)?;
    save_lexicon(&lex, &a.out)?;
    writeln!(
        out,
        "wrote {} senses over {} excerpts to {}",
        lex.senses().len(),
        excerpts.len(),
        a.out.display()
    )?;
    Ok(())
}

fn input_error(e: &CliError) -> Option<ErrorOut> {
    let CliError::Input(p) = e else { return None };
    let (kind, word, index) = match p {
        ParseError::LexiconMiss { word, index } => ("lexicon_miss", word, *index),
        ParseError::DeadEnd { word, index } => ("dead_end", word, *index),
        _ => return None,
    };
    Some(ErrorOut {
        kind: kind.into(),
        word: word.clone(),
        word_index: index,
        message: describe(e),
    })
}

fn score_line(s: &Score) -> String {
    format!("root ({}, {}) ratio {:.4}", s.top, s.bottom, s.ratio)
}

fn describe_candidate(
    c: &Candidate,
    lex: &Lexicon,
    strategy: UnderspecStrategy,
) -> Result<CandidateOut, CliError> {
    let Scored {
        score, components, ..
    } = score_tree(&c.tree, strategy, lex)?;
    Ok(CandidateOut {
        senses: c.history.clone(),
        complete: c.tree.is_complete(),
        tree: c.tree.render(lex.type_space_map()),
        score: Score::from(&score),
        components: components.iter().map(Score::from).collect(),
    })
}

fn describe_state(
    state: &ParseState,
    lex: &Lexicon,
    strategy: UnderspecStrategy,
) -> Result<Vec<CandidateOut>, CliError> {
    state
        .candidates
        .iter()
        .map(|c| describe_candidate(c, lex, strategy))
        .collect()
}

fn write_candidates(out: &mut dyn Write, cands: &[CandidateOut], indent: &str) -> io::Result<()> {
    for (i, c) in cands.iter().enumerate() {
        let senses = if c.senses.is_empty() {
            "(axiom)".to_string()
        } else {
            c.senses.join(" ")
        };
        writeln!(out, "{indent}#{} {senses}", i + 1)?;
        for line in c.tree.lines() {
            writeln!(out, "{indent}  {line}")?;
        }
        if !c.components.is_empty() {
            let parts: Vec<String> = c
                .components
                .iter()
                .map(|s| format!("({}, {})", s.top, s.bottom))
                .collect();
            writeln!(out, "{indent}components {}", parts.join(" "))?;
        }
        writeln!(out, "{indent}{}", score_line(&c.score))?;
    }
    Ok(())
}

fn emit_json<T: serde::Serialize>(out: &mut dyn Write, doc: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, doc)?;
    writeln!(out)?;
    Ok(())
}

fn parse(a: &ParseArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let lex = load_lexicon(&a.common.lexicon)?;
    let strategy = a.common.strategy;
    let words = words_of(&a.words);
    let mut doc = ParseOut {
        schema_version: SCHEMA_VERSION,
        command: "parse".into(),
        strategy: strategy.to_string(),
        words: words.clone(),
        trace: a.trace.then(Vec::new),
        candidates: None,
        error: None,
    };
    let json = a.common.format == Format::Json;

    let mut state = axiom();
    let mut outcome = Ok(());
    for (i, w) in words.iter().enumerate() {
        state = match parse_word(&state, w, &lex) {
            Ok(s) => s,
            Err(e) => {
                outcome = Err(CliError::from(e));
                break;
            }
        };
        if let Some(trace) = doc.trace.as_mut() {
            let event = TraceEvent {
                word_index: i,
                word: w.clone(),
                candidate_count: state.candidates.len(),
                candidates: describe_state(&state, &lex, strategy)?,
            };
            if !json {
                let noun = if event.candidate_count == 1 {
                    "candidate"
                } else {
                    "candidates"
                };
                writeln!(out, "[{i}] {w}: {} {noun}", event.candidate_count)?;
                write_candidates(out, &event.candidates, "  ")?;
            }
            trace.push(event);
        }
    }

    match outcome {
        Ok(()) => {
            let cands = describe_state(&state, &lex, strategy)?;
            if !json && (doc.trace.is_none() || words.is_empty()) {
                write_candidates(out, &cands, "")?;
            }
            doc.candidates = Some(cands);
            if json {
                emit_json(out, &doc)?;
            }
            Ok(())
        }
        Err(e) => {
            if json {
                doc.error = input_error(&e);
                emit_json(out, &doc)?;
            }
            Err(e)
        }
    }
}

fn rank_readings(a: &ScoreArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let lex = load_lexicon(&a.common.lexicon)?;
    let strategy = a.common.strategy;
    let words = words_of(&a.words);
    let mut doc = DisambiguateOut {
        schema_version: SCHEMA_VERSION,
        command: "disambiguate".into(),
        strategy: strategy.to_string(),
        words: words.clone(),
        readings: Vec::new(),
        error: None,
    };
    let ranked = parse_sequence(&words, &lex)
        .map_err(CliError::from)
        .and_then(|state| Ok(disambiguate(&state, strategy, &lex)?));
    let ranked = match ranked {
        Ok(r) => r,
        Err(e) => {
            if a.common.format == Format::Json {
                doc.error = input_error(&e);
                emit_json(out, &doc)?;
            }
            return Err(e);
        }
    };
    doc.readings = ranked
        .iter()
        .enumerate()
        .map(|(i, r)| RankedReading::new(i + 1, r))
        .collect();
    match a.common.format {
        Format::Json => emit_json(out, &doc)?,
        Format::Text => {
            for r in &doc.readings {
                writeln!(
                    out,
                    "{}. {}  {}",
                    r.rank,
                    r.senses.join(" "),
                    score_line(&r.score)
                )?;
            }
        }
    }
    Ok(())
}

fn rank_continuations(a: &ExpectArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let lex = load_lexicon(&a.common.lexicon)?;
    let strategy = a.common.strategy;
    let after = tokenize(&a.after);
    let candidates: Vec<String> = a.candidates.iter().flat_map(|c| tokenize(c)).collect();
    let mut doc = ExpectOut {
        schema_version: SCHEMA_VERSION,
        command: "expect".into(),
        strategy: strategy.to_string(),
        after: after.clone(),
        continuations: Vec::new(),
        error: None,
    };
    let ranked = parse_sequence(&after, &lex)
        .map_err(CliError::from)
        .and_then(|state| Ok(expect(&state, &candidates, strategy, &lex)?));
    let ranked = match ranked {
        Ok(r) => r,
        Err(e) => {
            if a.common.format == Format::Json {
                doc.error = input_error(&e);
                emit_json(out, &doc)?;
            }
            return Err(e);
        }
    };
    doc.continuations = ranked
        .iter()
        .enumerate()
        .map(|(i, e)| RankedContinuation::new(i + 1, e))
        .collect();
    match a.common.format {
        Format::Json => emit_json(out, &doc)?,
        Format::Text => {
            for c in &doc.continuations {
                let tail = match &c.score {
                    Some(s) => score_line(s),
                    None => "dead end".into(),
                };
                writeln!(out, "{}. {} ({})  {tail}", c.rank, c.word, c.sense)?;
            }
        }
    }
    Ok(())
}
