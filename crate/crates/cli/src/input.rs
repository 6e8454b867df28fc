use std::fmt;
use std::fs;
use std::io::{self, BufRead};
use std::path::PathBuf;

use clap::Args;
use w6free::{parse_graph6, parse_named, Error, Graph};

/// Exactly one graph source.
#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Graph in graph6 format.
    pub graph6: Option<String>,
    /// Read graph6 lines from a file.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// A named graph, e.g. petersen, C2_7, dw_5, k3,4.
    #[arg(long)]
    pub named: Option<String>,
    /// Read graph6 lines from standard input.
    #[arg(long)]
    pub stdin: bool,
}

/// A malformed input line.
#[derive(Debug)]
pub struct InputError {
    pub line: usize,
    pub error: Error,
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.error {
            Error::Graph6 { offset, reason } => {
                write!(f, "line {}, byte {offset}: {reason}", self.line)
            }
            other => write!(f, "line {}: {other}", self.line),
        }
    }
}

pub type Parsed = Result<Graph, InputError>;

impl Source {
    /// Whether the source may hold many graphs.
    pub fn is_batch(&self) -> bool {
        self.file.is_some() || self.stdin
    }

    /// The graphs in input order; blank lines are skipped.
    pub fn read(&self) -> io::Result<Vec<Parsed>> {
        if let Some(text) = &self.graph6 {
            return Ok(vec![parse_line(1, text)]);
        }
        if let Some(name) = &self.named {
            return Ok(vec![
                parse_named(name).map_err(|error| InputError { line: 1, error })
            ]);
        }
        let lines: Vec<String> = match &self.file {
            Some(path) => fs::read_to_string(path)?
                .lines()
                .map(str::to_owned)
                .collect(),
            None => io::stdin().lock().lines().collect::<io::Result<_>>()?,
        };
        Ok(lines
            .iter()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| parse_line(i + 1, l))
            .collect())
    }
}

fn parse_line(line: usize, text: &str) -> Parsed {
    parse_graph6(text.trim_end_matches(['\r', '\n'])).map_err(|error| InputError { line, error })
}

/// A pattern given by name or as graph6.
pub fn parse_pattern(text: &str) -> Result<Graph, Error> {
    parse_named(text).or_else(|_| parse_graph6(text))
}
