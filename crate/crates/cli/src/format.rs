//! Text formats.
//!
//! Every format is whitespace separated, `#` starts a comment, and blank
//! lines are ignored. Rationals are `p/q` or integers.
//!
//! - matrix: `n`, then `n` rows of `n` entries
//! - subset vector / weight: `n`, then `2^n - 1` entries in ascending bitmask order
//! - embedding: `linear|points n=<n> N=<N> m=<m|-> k=<k|->`, then `n` bit
//!   words of length `N` (`-` for the empty word)
//! - set family: one `n`-wide binary mask per ground element, set `n` leftmost

use std::fmt::Write;

use chanmetric::embedding::{AffineScale, CubeWord, LinearEmbedding, PointEmbedding};
use chanmetric::rational::{format_rat, parse_rat};
use chanmetric::{Channel, DistanceMatrix, Error as CoreError, Rat, SetFamily, SquareMatrix, SubsetVector, WeightVector};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    line: usize,
    column: usize,
    text: &'a str,
}

impl Token<'_> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }

    fn rational(&self) -> Result<Rat, ParseError> {
        parse_rat(self.text).ok_or_else(|| self.error(format!("malformed rational {:?}", self.text)))
    }

    fn size(&self, what: &str) -> Result<usize, ParseError> {
        self.text
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| self.error(format!("expected a positive {what}, found {:?}", self.text)))
    }
}

/// Nonempty lines, each a list of tokens with 1-based positions.
fn lines(text: &str) -> Vec<Vec<Token<'_>>> {
    text.lines()
        .enumerate()
        .map(|(i, line)| {
            let line_no = i + 1;
            let content = line.split('#').next().unwrap_or("");
            let mut tokens = Vec::new();
            let mut start = None;
            for (pos, ch) in content.char_indices().chain(std::iter::once((content.len(), ' '))) {
                match (ch.is_whitespace(), start) {
                    (false, None) => start = Some(pos),
                    (true, Some(s)) => {
                        tokens.push(Token {
                            line: line_no,
                            column: content[..s].chars().count() + 1,
                            text: &content[s..pos],
                        });
                        start = None;
                    }
                    _ => {}
                }
            }
            tokens
        })
        .filter(|t| !t.is_empty())
        .collect()
}

fn end_of_input(text: &str) -> ParseError {
    ParseError {
        line: text.lines().count().max(1),
        column: 1,
        message: "unexpected end of input".into(),
    }
}

fn header_size<'a>(text: &str, lines: &[Vec<Token<'a>>]) -> Result<(usize, Token<'a>), ParseError> {
    let first = lines.first().ok_or_else(|| end_of_input(text))?;
    if let Some(extra) = first.get(1) {
        return Err(extra.error("expected only the size on the first line"));
    }
    Ok((first[0].size("size")?, first[0]))
}

/// A square matrix with the token of every entry, for locating validation errors.
struct Located<'a> {
    rows: Vec<Vec<Rat>>,
    tokens: Vec<Vec<Token<'a>>>,
}

fn matrix_tokens<'a>(text: &'a str) -> Result<Located<'a>, ParseError> {
    let lines = lines(text);
    let (n, _) = header_size(text, &lines)?;
    let body = &lines[1..];
    if body.len() < n {
        return Err(end_of_input(text));
    }
    if let Some(extra) = body.get(n) {
        return Err(extra[0].error(format!("expected {n} rows, found more")));
    }
    let mut rows = Vec::with_capacity(n);
    for line in body {
        if line.len() != n {
            let at = line.get(n).unwrap_or(&line[line.len() - 1]);
            return Err(at.error(format!("expected {n} entries, found {}", line.len())));
        }
        rows.push(line.iter().map(Token::rational).collect::<Result<Vec<_>, _>>()?);
    }
    Ok(Located {
        rows,
        tokens: body.to_vec(),
    })
}

pub fn parse_matrix(text: &str) -> Result<SquareMatrix, ParseError> {
    let located = matrix_tokens(text)?;
    Ok(SquareMatrix::from_rows(located.rows).expect("shape checked"))
}

pub fn parse_channel(text: &str) -> Result<Channel, ParseError> {
    let located = matrix_tokens(text)?;
    let tokens = located.tokens.clone();
    Channel::from_rows(located.rows).map_err(|e| match &e {
        CoreError::ProbabilityOutOfRange { row, col, .. } => tokens[*row][*col].error(e.to_string()),
        CoreError::RowSum { row, sum } => tokens[*row][0].error(format!("row sums to {sum}, expected 1")),
        _ => tokens[0][0].error(e.to_string()),
    })
}

pub fn parse_distance(text: &str) -> Result<DistanceMatrix, ParseError> {
    let located = matrix_tokens(text)?;
    let tokens = located.tokens.clone();
    DistanceMatrix::from_rows(located.rows).map_err(|e| match &e {
        CoreError::NonZeroDiagonal { index, value } => {
            tokens[*index][*index].error(format!("diagonal entry is {value}, expected 0"))
        }
        CoreError::NegativeDistance { row, col, value } => {
            tokens[*row][*col].error(format!("negative distance {value}"))
        }
        CoreError::Asymmetric { row, col } => tokens[*col][*row].error(format!(
            "not symmetric: d({},{}) differs from d({},{})",
            col + 1,
            row + 1,
            row + 1,
            col + 1
        )),
        _ => tokens[0][0].error(e.to_string()),
    })
}

pub fn parse_subset_vector(text: &str) -> Result<SubsetVector, ParseError> {
    let lines = lines(text);
    let (n, header) = header_size(text, &lines)?;
    if n > chanmetric::subsets::MAX_SUBSET_N {
        return Err(header.error(format!("n = {n} exceeds {}", chanmetric::subsets::MAX_SUBSET_N)));
    }
    let expected = (1usize << n) - 1;
    let tokens: Vec<Token> = lines[1..].iter().flatten().copied().collect();
    if tokens.len() < expected {
        return Err(end_of_input(text));
    }
    if let Some(extra) = tokens.get(expected) {
        return Err(extra.error(format!("expected {expected} entries, found more")));
    }
    let values = tokens.iter().map(Token::rational).collect::<Result<Vec<_>, _>>()?;
    Ok(SubsetVector::new(n, values).expect("length checked"))
}

pub fn parse_weight(text: &str) -> Result<WeightVector, ParseError> {
    let values = parse_subset_vector(text)?;
    let lines = lines(text);
    let tokens: Vec<Token> = lines[1..].iter().flatten().copied().collect();
    WeightVector::new(values).map_err(|e| match &e {
        CoreError::NegativeWeight { mask } => tokens[mask - 1].error(e.to_string()),
        _ => tokens[0].error(e.to_string()),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Embedding {
    Linear(LinearEmbedding),
    Points(PointEmbedding),
}

impl Embedding {
    pub fn scale(&self) -> Option<&AffineScale> {
        match self {
            Embedding::Linear(e) => e.scale(),
            Embedding::Points(e) => e.scale(),
        }
    }

    pub fn words(&self) -> &[CubeWord] {
        match self {
            Embedding::Linear(e) => e.generators(),
            Embedding::Points(e) => e.images(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Embedding::Linear(_) => "linear",
            Embedding::Points(_) => "points",
        }
    }
}

fn header_field<'a>(token: &Token<'a>, key: &str) -> Result<&'a str, ParseError> {
    token
        .text
        .strip_prefix(key)
        .and_then(|rest| rest.strip_prefix('='))
        .ok_or_else(|| token.error(format!("expected {key}=…, found {:?}", token.text)))
}

fn optional_rational(token: &Token, key: &str) -> Result<Option<Rat>, ParseError> {
    match header_field(token, key)? {
        "-" => Ok(None),
        value => parse_rat(value)
            .map(Some)
            .ok_or_else(|| token.error(format!("malformed rational {value:?}"))),
    }
}

pub fn parse_embedding(text: &str) -> Result<Embedding, ParseError> {
    let lines = lines(text);
    let header = lines.first().ok_or_else(|| end_of_input(text))?;
    if header.len() != 5 {
        return Err(header[0].error("expected header `linear|points n=… N=… m=… k=…`"));
    }
    let kind = header[0];
    if kind.text != "linear" && kind.text != "points" {
        return Err(kind.error(format!("unknown embedding kind {:?}", kind.text)));
    }
    let count = |t: &Token, key: &str| -> Result<usize, ParseError> {
        header_field(t, key)?
            .parse::<usize>()
            .map_err(|_| t.error(format!("{key} must be a nonnegative integer")))
    };
    let n = count(&header[1], "n")?;
    if n == 0 {
        return Err(header[1].error("n must be positive"));
    }
    let len = count(&header[2], "N")?;
    let m = optional_rational(&header[3], "m")?;
    let k = optional_rational(&header[4], "k")?;
    let scale = match (m, k) {
        (Some(m), Some(k)) => Some(AffineScale::new(m, k)),
        (None, None) => None,
        _ => return Err(header[3].error("m and k must both be given or both be -")),
    };
    let body = &lines[1..];
    if body.len() < n {
        return Err(end_of_input(text));
    }
    if let Some(extra) = body.get(n) {
        return Err(extra[0].error(format!("expected {n} words, found more")));
    }
    let mut words = Vec::with_capacity(n);
    for line in body {
        if let Some(extra) = line.get(1) {
            return Err(extra.error("expected one word per line"));
        }
        let token = line[0];
        let word: CubeWord = if token.text == "-" {
            CubeWord::zero(0)
        } else {
            token.text.parse().map_err(|e: String| token.error(e))?
        };
        if word.len() != len {
            return Err(token.error(format!("word has length {}, expected N = {len}", word.len())));
        }
        words.push(word);
    }
    let built = if kind.text == "linear" {
        LinearEmbedding::new(words, scale).map(Embedding::Linear)
    } else {
        PointEmbedding::new(words, scale).map(Embedding::Points)
    };
    built.map_err(|e| kind.error(e.to_string()))
}

fn optional(value: Option<&Rat>) -> String {
    value.map_or_else(|| "-".into(), format_rat)
}

pub fn format_embedding(e: &Embedding) -> String {
    let words = e.words();
    let mut out = format!(
        "{} n={} N={} m={} k={}\n",
        e.kind(),
        words.len(),
        words.first().map_or(0, CubeWord::len),
        optional(e.scale().map(|s| &s.m)),
        optional(e.scale().map(|s| &s.k)),
    );
    for w in words {
        let text = w.to_string();
        out.push_str(if text.is_empty() { "-" } else { &text });
        out.push('\n');
    }
    out
}

pub fn format_rows<T: std::fmt::Display>(rows: &[Vec<T>]) -> String {
    let mut out = format!("{}\n", rows.len());
    for row in rows {
        let line: Vec<String> = row.iter().map(T::to_string).collect();
        writeln!(out, "{}", line.join(" ")).expect("write to string");
    }
    out
}

pub fn format_matrix(m: &SquareMatrix) -> String {
    let rows: Vec<Vec<String>> = m.rows().map(|r| r.iter().map(format_rat).collect()).collect();
    format_rows(&rows)
}

pub fn format_subset_vector(v: &SubsetVector) -> String {
    let values: Vec<String> = v.values().iter().map(format_rat).collect();
    format!("{}\n{}\n", v.n(), values.join(" "))
}

/// `n`-wide binary strings, set `n` leftmost.
pub fn format_family(f: &SetFamily) -> String {
    f.membership()
        .iter()
        .map(|&m| format!("{:0width$b}\n", m, width = f.n()))
        .collect()
}
