//! Text format for precubical sets.
//!
//! ```text
//! # the torus
//! dims:
//!   0: o
//!   1: t1 t2
//!   2: v
//! faces:
//!   t1 = [[o, o]]
//!   t2 = [[o, o]]
//!   v = [[t1, t1], [t2, t2]]
//! ```
//!
//! `dims` lists the labels of each dimension in cube order. Every cube of
//! dimension `n >= 1` gets one `faces` line holding `n` pairs; pair `i` is
//! `[∂_i^0, ∂_i^1]` given by labels of dimension `n - 1`. The dimension of a
//! `faces` line is the number of pairs, so a label may be reused across
//! dimensions. Labels are nonempty and contain no whitespace and none of
//! `[ ] , = : #`. Blank lines and `#` comments are ignored.
//!
//! [`serialize`] writes the canonical form shown above (two-space indent,
//! every dimension from 0 to the top listed, cubes in declaration order) and
//! `serialize(parse(doc)) == doc` for every canonical document.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::cubical::{CubeId, PrecubicalSet, Side, MAX_DIM};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    DuplicateDimension(usize),
    DimensionCap(usize),
    DuplicateLabel { label: String, dim: usize },
    InvalidLabel(String),
    UnknownCube(String),
    UnknownFace { label: String, dim: usize },
    ArityMismatch { label: String, expected: usize, found: usize },
    DuplicateFaces(String),
    MissingFaces { label: String, dim: usize },
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Syntax(msg) => f.write_str(msg),
            ParseErrorKind::DuplicateDimension(d) => write!(f, "dimension {d} is listed twice"),
            ParseErrorKind::DimensionCap(d) => {
                write!(f, "dimension {d} exceeds the supported maximum {MAX_DIM}")
            }
            ParseErrorKind::DuplicateLabel { label, dim } => {
                write!(f, "label '{label}' appears twice in dimension {dim}")
            }
            ParseErrorKind::InvalidLabel(l) => write!(f, "'{l}' is not a valid label"),
            ParseErrorKind::UnknownCube(l) => {
                write!(f, "faces given for '{l}', which is not a cube of positive dimension")
            }
            ParseErrorKind::UnknownFace { label, dim } => {
                write!(f, "face refers to missing label '{label}' in dimension {dim}")
            }
            ParseErrorKind::ArityMismatch { label, expected, found } => write!(
                f,
                "'{label}' is a {expected}-cube and needs {expected} face pairs, found {found}"
            ),
            ParseErrorKind::DuplicateFaces(l) => write!(f, "faces of '{l}' are given twice"),
            ParseErrorKind::MissingFaces { label, dim } => {
                write!(f, "no faces given for the {dim}-cube '{label}'")
            }
        }
    }
}

pub fn is_valid_label(label: &str) -> bool {
    !label.is_empty()
        && !label
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, '[' | ']' | ',' | '=' | ':' | '#'))
}

fn err(line: usize, column: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, column, kind }
}

#[derive(Clone, Copy, PartialEq)]
enum Section {
    Preamble,
    Dims,
    Faces,
}

struct FaceLine {
    line: usize,
    column: usize,
    label: String,
    pairs: Vec<[(String, usize); 2]>,
}

#[derive(Debug, PartialEq)]
enum Token<'a> {
    Open,
    Close,
    Comma,
    Word(&'a str),
}

// (token, 1-based column)
fn tokenize(text: &str, offset: usize) -> Vec<(Token<'_>, usize)> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        let column = offset + text[..i].chars().count() + 1;
        match c {
            '[' => {
                out.push((Token::Open, column));
                chars.next();
            }
            ']' => {
                out.push((Token::Close, column));
                chars.next();
            }
            ',' => {
                out.push((Token::Comma, column));
                chars.next();
            }
            c if c.is_whitespace() => {
                chars.next();
            }
            _ => {
                let start = i;
                let mut end = text.len();
                while let Some(&(j, d)) = chars.peek() {
                    if d.is_whitespace() || matches!(d, '[' | ']' | ',') {
                        end = j;
                        break;
                    }
                    chars.next();
                }
                out.push((Token::Word(&text[start..end]), column));
            }
        }
    }
    out
}

fn parse_pairs(
    text: &str,
    offset: usize,
    line: usize,
    end_column: usize,
) -> Result<Vec<[(String, usize); 2]>, ParseError> {
    let tokens = tokenize(text, offset);
    let mut pos = 0;
    let next_col = |pos: usize| tokens.get(pos).map_or(end_column, |t| t.1);
    let expect = |pos: usize, want: Token<'_>, what: &str| -> Result<(), ParseError> {
        match tokens.get(pos) {
            Some((t, _)) if *t == want => Ok(()),
            _ => Err(err(line, next_col(pos), ParseErrorKind::Syntax(format!("expected {what}")))),
        }
    };
    expect(pos, Token::Open, "'['")?;
    pos += 1;
    let mut pairs = Vec::new();
    if matches!(tokens.get(pos), Some((Token::Close, _))) {
        pos += 1;
    } else {
        loop {
            expect(pos, Token::Open, "'[' starting a face pair")?;
            pos += 1;
            let mut pair: Vec<(String, usize)> = Vec::with_capacity(2);
            for k in 0..2 {
                match tokens.get(pos) {
                    Some((Token::Word(w), col)) => {
                        if !is_valid_label(w) {
                            return Err(err(line, *col, ParseErrorKind::InvalidLabel(w.to_string())));
                        }
                        pair.push((w.to_string(), *col));
                    }
                    _ => {
                        return Err(err(line, next_col(pos), ParseErrorKind::Syntax("expected a label".into())))
                    }
                }
                pos += 1;
                if k == 0 {
                    expect(pos, Token::Comma, "',' between the two faces of a pair")?;
                    pos += 1;
                }
            }
            expect(pos, Token::Close, "']' closing a face pair")?;
            pos += 1;
            let second = pair.pop().expect("two labels");
            let first = pair.pop().expect("two labels");
            pairs.push([first, second]);
            match tokens.get(pos) {
                Some((Token::Comma, _)) => pos += 1,
                Some((Token::Close, _)) => {
                    pos += 1;
                    break;
                }
                _ => {
                    return Err(err(line, next_col(pos), ParseErrorKind::Syntax("expected ',' or ']'".into())))
                }
            }
        }
    }
    if pos != tokens.len() {
        return Err(err(line, next_col(pos), ParseErrorKind::Syntax("unexpected text after the face list".into())));
    }
    Ok(pairs)
}

/// Parses a document into a precubical set. The result has a complete face
/// table but is not checked against the cubical identities; see
/// [`PrecubicalSet::validate`].
pub fn parse(doc: &str) -> Result<PrecubicalSet, ParseError> {
    let mut section = Section::Preamble;
    let mut dims: Vec<Option<Vec<String>>> = Vec::new();
    let mut dim_lines: Vec<usize> = Vec::new();
    let mut face_lines: Vec<FaceLine> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in doc.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim();
        if trimmed.is_empty() {
            continue;
        }
        let indent = content.len() - content.trim_start().len();
        let base_col = content[..indent].chars().count() + 1;
        match trimmed {
            "dims:" | "dims" => {
                if section != Section::Preamble {
                    return Err(err(line, base_col, ParseErrorKind::Syntax("'dims:' must be the first section".into())));
                }
                section = Section::Dims;
                continue;
            }
            "faces:" | "faces" => {
                if section != Section::Dims {
                    return Err(err(line, base_col, ParseErrorKind::Syntax("'faces:' must follow 'dims:'".into())));
                }
                section = Section::Faces;
                continue;
            }
            _ => {}
        }
        match section {
            Section::Preamble => {
                return Err(err(line, base_col, ParseErrorKind::Syntax("expected 'dims:'".into())));
            }
            Section::Dims => {
                let Some((head, rest)) = trimmed.split_once(':') else {
                    return Err(err(line, base_col, ParseErrorKind::Syntax("expected '<dimension>: <labels>'".into())));
                };
                let dim: usize = head.trim().parse().map_err(|_| {
                    err(line, base_col, ParseErrorKind::Syntax(format!("'{}' is not a dimension", head.trim())))
                })?;
                if dim > MAX_DIM {
                    return Err(err(line, base_col, ParseErrorKind::DimensionCap(dim)));
                }
                if dims.len() <= dim {
                    dims.resize(dim + 1, None);
                    dim_lines.resize(dim + 1, 0);
                }
                if dims[dim].is_some() {
                    return Err(err(line, base_col, ParseErrorKind::DuplicateDimension(dim)));
                }
                let rest_offset = indent + head.len() + 1;
                let mut labels: Vec<String> = Vec::new();
                let mut search_from = 0;
                for word in rest.split_whitespace() {
                    let at = rest[search_from..].find(word).expect("word is in rest") + search_from;
                    search_from = at + word.len();
                    let column = content[..rest_offset + at].chars().count() + 1;
                    if !is_valid_label(word) {
                        return Err(err(line, column, ParseErrorKind::InvalidLabel(word.to_string())));
                    }
                    if labels.iter().any(|l| l == word) {
                        return Err(err(line, column, ParseErrorKind::DuplicateLabel { label: word.to_string(), dim }));
                    }
                    labels.push(word.to_string());
                }
                dims[dim] = Some(labels);
                dim_lines[dim] = line;
            }
            Section::Faces => {
                let Some((head, rest)) = trimmed.split_once('=') else {
                    return Err(err(line, base_col, ParseErrorKind::Syntax("expected '<label> = [[..., ...], ...]'".into())));
                };
                let label = head.trim();
                if !is_valid_label(label) {
                    return Err(err(line, base_col, ParseErrorKind::InvalidLabel(label.to_string())));
                }
                let rest_offset = content[..indent + head.len() + 1].chars().count();
                let end_column = content.chars().count() + 1;
                let pairs = parse_pairs(rest, rest_offset, line, end_column)?;
                face_lines.push(FaceLine { line, column: base_col, label: label.to_string(), pairs });
            }
        }
    }
    if section == Section::Preamble {
        return Err(err(last_line.max(1), 1, ParseErrorKind::Syntax("missing 'dims:' section".into())));
    }

    let labels: Vec<Vec<String>> = dims.into_iter().map(Option::unwrap_or_default).collect();
    let index: Vec<HashMap<&str, usize>> = labels
        .iter()
        .map(|ls| ls.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect())
        .collect();

    let mut faces: Vec<Vec<Option<Vec<CubeId>>>> = labels.iter().map(|l| vec![None; l.len()]).collect();
    for fl in &face_lines {
        let found = fl.pairs.len();
        let owners: Vec<usize> = (1..labels.len()).filter(|&d| index[d].contains_key(fl.label.as_str())).collect();
        let dim = if owners.contains(&found) {
            found
        } else if let Some(&d) = owners.first() {
            return Err(err(fl.line, fl.column, ParseErrorKind::ArityMismatch { label: fl.label.clone(), expected: d, found }));
        } else {
            return Err(err(fl.line, fl.column, ParseErrorKind::UnknownCube(fl.label.clone())));
        };
        let cube = index[dim][fl.label.as_str()];
        if faces[dim][cube].is_some() {
            return Err(err(fl.line, fl.column, ParseErrorKind::DuplicateFaces(fl.label.clone())));
        }
        let mut row = Vec::with_capacity(2 * dim);
        for pair in &fl.pairs {
            for (name, col) in pair {
                let Some(&target) = index[dim - 1].get(name.as_str()) else {
                    return Err(err(fl.line, *col, ParseErrorKind::UnknownFace { label: name.clone(), dim: dim - 1 }));
                };
                row.push(CubeId::new(dim - 1, target));
            }
        }
        faces[dim][cube] = Some(row);
    }

    let mut table: Vec<Vec<CubeId>> = vec![Vec::new(); labels.len()];
    for dim in 1..labels.len() {
        for (cube, entry) in faces[dim].iter_mut().enumerate() {
            match entry.take() {
                Some(row) => table[dim].extend(row),
                None => {
                    return Err(err(
                        dim_lines[dim],
                        1,
                        ParseErrorKind::MissingFaces { label: labels[dim][cube].clone(), dim },
                    ))
                }
            }
        }
    }
    Ok(PrecubicalSet::from_parts_unchecked(labels, table))
}

/// Canonical document for `x`. Labels are written verbatim, so they must
/// satisfy [`is_valid_label`] for the output to parse back.
pub fn serialize(x: &PrecubicalSet) -> String {
    let mut out = String::from("dims:\n");
    let top = x.max_dim();
    for dim in top.into_iter().flat_map(|t| 0..=t) {
        out.push_str(&format!("  {dim}:"));
        for l in x.labels(dim) {
            out.push(' ');
            out.push_str(l);
        }
        out.push('\n');
    }
    out.push_str("faces:\n");
    for dim in top.into_iter().flat_map(|t| 1..=t) {
        for u in x.cubes(dim) {
            let pairs: Vec<String> = (1..=dim)
                .map(|i| {
                    format!(
                        "[{}, {}]",
                        x.label(x.face(u, i, Side::Zero)),
                        x.label(x.face(u, i, Side::One))
                    )
                })
                .collect();
            out.push_str(&format!("  {} = [{}]\n", x.label(u), pairs.join(", ")));
        }
    }
    out
}
