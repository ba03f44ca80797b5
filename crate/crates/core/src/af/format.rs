//! APX and TGF readers and writers.
//!
//! APX is a sequence of `arg(x).` and `att(x,y).` facts; several facts may share
//! a line and `#` starts a comment that runs to the end of the line. TGF lists
//! one argument per line, then a line holding only `#`, then one `x y` attack
//! per line.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use thiserror::Error;

use super::{AfError, ArgumentId, ArgumentationFramework};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AfFormat {
    Apx,
    Tgf,
}

impl AfFormat {
    /// `.tgf` selects TGF, anything else APX.
    pub fn from_path(path: &Path) -> AfFormat {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("tgf") => AfFormat::Tgf,
            _ => AfFormat::Apx,
        }
    }
}

impl FromStr for AfFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "apx" => Ok(AfFormat::Apx),
            "tgf" => Ok(AfFormat::Tgf),
            other => Err(format!("unknown framework format `{other}` (expected apx or tgf)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: attack references undeclared argument `{name}`")]
    UndeclaredArgument { line: usize, name: String },
    #[error("line {line}: argument name `0` is reserved")]
    ReservedName { line: usize },
    #[error("line {line}: invalid argument name {name:?}")]
    InvalidName { line: usize, name: String },
}

impl ParseError {
    pub fn line(&self) -> usize {
        match self {
            ParseError::Syntax { line, .. }
            | ParseError::UndeclaredArgument { line, .. }
            | ParseError::ReservedName { line }
            | ParseError::InvalidName { line, .. } => *line,
        }
    }
}

pub fn parse_af(text: &str, format: AfFormat) -> Result<ArgumentationFramework, ParseError> {
    let raw = match format {
        AfFormat::Apx => parse_apx(text)?,
        AfFormat::Tgf => parse_tgf(text)?,
    };
    raw.into_framework()
}

/// Canonical serialization: arguments in name order, then attacks in
/// `(attacker, target)` order.
pub fn write_af(af: &ArgumentationFramework, format: AfFormat) -> String {
    let mut out = String::new();
    match format {
        AfFormat::Apx => {
            for a in af.arguments() {
                let _ = writeln!(out, "arg({a}).");
            }
            for (a, b) in af.attacks() {
                let _ = writeln!(out, "att({a},{b}).");
            }
        }
        AfFormat::Tgf => {
            for a in af.arguments() {
                let _ = writeln!(out, "{a}");
            }
            out.push_str("#\n");
            for (a, b) in af.attacks() {
                let _ = writeln!(out, "{a} {b}");
            }
        }
    }
    out
}

struct RawFramework {
    arguments: Vec<(usize, String)>,
    attacks: Vec<(usize, String, String)>,
}

impl RawFramework {
    fn into_framework(self) -> Result<ArgumentationFramework, ParseError> {
        let name = |line: usize, raw: &str| {
            ArgumentId::new(raw).map_err(|e| match e {
                AfError::ReservedName => ParseError::ReservedName { line },
                _ => ParseError::InvalidName {
                    line,
                    name: raw.to_string(),
                },
            })
        };
        let mut arguments = Vec::with_capacity(self.arguments.len());
        for (line, raw) in &self.arguments {
            arguments.push(name(*line, raw)?);
        }
        arguments.sort();
        arguments.dedup();
        let mut attacks = Vec::with_capacity(self.attacks.len());
        for (line, a, b) in &self.attacks {
            let a = name(*line, a)?;
            let b = name(*line, b)?;
            for endpoint in [&a, &b] {
                if arguments.binary_search(endpoint).is_err() {
                    return Err(ParseError::UndeclaredArgument {
                        line: *line,
                        name: endpoint.to_string(),
                    });
                }
            }
            attacks.push((a, b));
        }
        Ok(ArgumentationFramework::new(arguments, attacks)
            .expect("endpoints were checked against the declared arguments"))
    }
}

fn parse_apx(text: &str) -> Result<RawFramework, ParseError> {
    let mut raw = RawFramework {
        arguments: Vec::new(),
        attacks: Vec::new(),
    };
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let content = line.split('#').next().unwrap_or("");
        let mut rest = content.trim();
        while !rest.is_empty() {
            let (fact, tail) = next_fact(rest, line_no)?;
            match fact {
                Fact::Arg(name) => raw.arguments.push((line_no, name)),
                Fact::Att(a, b) => raw.attacks.push((line_no, a, b)),
            }
            rest = tail.trim_start();
        }
    }
    Ok(raw)
}

enum Fact {
    Arg(String),
    Att(String, String),
}

/// Parses one `pred(args).` fact from the start of `input`.
fn next_fact(input: &str, line: usize) -> Result<(Fact, &str), ParseError> {
    let syntax = |message: String| ParseError::Syntax { line, message };
    let open = input
        .find('(')
        .ok_or_else(|| syntax(format!("expected `arg(..).` or `att(..).`, found {input:?}")))?;
    let predicate = input[..open].trim();
    let close = input[open..]
        .find(')')
        .map(|p| p + open)
        .ok_or_else(|| syntax("missing `)`".to_string()))?;
    let after = input[close + 1..].trim_start();
    let tail = after
        .strip_prefix('.')
        .ok_or_else(|| syntax("missing `.` after fact".to_string()))?;
    let args: Vec<&str> = input[open + 1..close].split(',').map(str::trim).collect();
    let fact = match (predicate, args.as_slice()) {
        ("arg", [a]) => Fact::Arg(a.to_string()),
        ("att", [a, b]) => Fact::Att(a.to_string(), b.to_string()),
        ("arg", _) => return Err(syntax("`arg` takes exactly one argument".to_string())),
        ("att", _) => return Err(syntax("`att` takes exactly two arguments".to_string())),
        (other, _) => return Err(syntax(format!("unknown predicate `{other}`"))),
    };
    Ok((fact, tail))
}

fn parse_tgf(text: &str) -> Result<RawFramework, ParseError> {
    let mut raw = RawFramework {
        arguments: Vec::new(),
        attacks: Vec::new(),
    };
    let mut in_attacks = false;
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if trimmed == "#" {
            if in_attacks {
                return Err(ParseError::Syntax {
                    line: line_no,
                    message: "second `#` separator".to_string(),
                });
            }
            in_attacks = true;
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        match (in_attacks, tokens.as_slice()) {
            (false, [a]) => raw.arguments.push((line_no, a.to_string())),
            (true, [a, b]) => raw.attacks.push((line_no, a.to_string(), b.to_string())),
            (false, _) => {
                return Err(ParseError::Syntax {
                    line: line_no,
                    message: format!("expected a single argument id, found {trimmed:?}"),
                })
            }
            (true, _) => {
                return Err(ParseError::Syntax {
                    line: line_no,
                    message: format!("expected `<attacker> <target>`, found {trimmed:?}"),
                })
            }
        }
    }
    Ok(raw)
}
