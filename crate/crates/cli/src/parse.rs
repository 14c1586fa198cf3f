//! Readers for the complex, map and ideal text formats.
//!
//! ```text
//! # complex
//! vertices: a b x y r
//! facets: {a x y} {b x y} {r x} {r y}
//!
//! # map
//! domain: 1 2 3
//! codomain: a b
//! map: 1->a 2->a 3->b
//!
//! # ideal
//! ring: a b c
//! I = (x_a*x_b, x_c)
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. `facets: -` is the
//! void complex and `facets: {}` the complex `{∅}`.

use std::collections::HashMap;
use std::fmt;

use srcx::{SetMap, SimplicialComplex, SqfIdeal, Subset, VertexSet};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

/// A word of input and where it starts (1-based).
#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

impl<'a> Token<'a> {
    fn error(&self, message: impl fmt::Display) -> ParseError {
        ParseError {
            line: self.line,
            column: self.column,
            message: message.to_string(),
        }
    }

    /// The sub-token starting `offset` bytes in.
    fn slice(&self, offset: usize, len: usize) -> Token<'a> {
        Token {
            text: &self.text[offset..offset + len],
            line: self.line,
            column: self.column + self.text[..offset].chars().count(),
        }
    }
}

/// The `key: value` lines of a file, with the value as a token.
struct Fields<'a> {
    lines: Vec<(Token<'a>, Token<'a>)>,
    end: usize,
}

impl<'a> Fields<'a> {
    fn read(text: &'a str, keys: &[&str]) -> Result<Self, ParseError> {
        let mut lines: Vec<(Token<'a>, Token<'a>)> = Vec::new();
        let mut end = 1;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            end = line + 1;
            let body = raw.trim_start();
            if body.is_empty() || body.starts_with('#') {
                continue;
            }
            let column = raw.len() - body.len() + 1;
            let whole = Token {
                text: body.trim_end(),
                line,
                column,
            };
            let Some(colon) = whole.text.find([':', '=']) else {
                return Err(whole.error(format!("expected one of {}", key_list(keys))));
            };
            let key = whole.slice(0, colon);
            let key = key.slice(0, key.text.trim_end().len());
            if !keys.contains(&key.text) {
                return Err(key.error(format!(
                    "unknown key {:?}; expected one of {}",
                    key.text,
                    key_list(keys)
                )));
            }
            if let Some((seen, _)) = lines.iter().find(|(k, _)| k.text == key.text) {
                return Err(key.error(format!(
                    "`{}:` already given on line {}",
                    key.text, seen.line
                )));
            }
            let rest = &whole.text[colon + 1..];
            let lead = rest.len() - rest.trim_start().len();
            let value = whole.slice(colon + 1 + lead, rest.len() - lead);
            lines.push((key, value));
        }
        Ok(Fields { lines, end })
    }

    fn get(&self, key: &str) -> Result<Token<'a>, ParseError> {
        self.lines
            .iter()
            .find(|(k, _)| k.text == key)
            .map(|&(_, v)| v)
            .ok_or_else(|| ParseError {
                line: self.end,
                column: 1,
                message: format!("missing `{key}:` line"),
            })
    }
}

fn key_list(keys: &[&str]) -> String {
    keys.iter()
        .map(|k| format!("`{k}:`"))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Splits on whitespace, keeping positions.
fn words(t: Token<'_>) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in t.text.char_indices().chain([(t.text.len(), ' ')]) {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push(t.slice(s, i - s));
                start = None;
            }
            _ => {}
        }
    }
    out
}

fn vertex_set(value: Token<'_>) -> Result<VertexSet, ParseError> {
    let labels = words(value);
    let mut seen: HashMap<&str, usize> = HashMap::new();
    for w in &labels {
        if seen.insert(w.text, w.column).is_some() {
            return Err(w.error(format!("duplicate vertex label {:?}", w.text)));
        }
        VertexSet::new([w.text]).map_err(|e| w.error(e))?;
    }
    VertexSet::new(labels.iter().map(|w| w.text)).map_err(|e| value.error(e))
}

fn label_in<'a>(v: &VertexSet, w: Token<'a>, role: &str) -> Result<&'a str, ParseError> {
    if v.contains(w.text) {
        Ok(w.text)
    } else {
        Err(w.error(format!("unknown {role} label {:?}", w.text)))
    }
}

/// Parses a complex; `facets: -` is the void complex.
pub fn parse_complex(text: &str) -> Result<SimplicialComplex, ParseError> {
    let fields = Fields::read(text, &["vertices", "facets"])?;
    let vertices = vertex_set(fields.get("vertices")?)?;
    let value = fields.get("facets")?;
    if value.text == "-" {
        return Ok(SimplicialComplex::void(&vertices));
    }
    if value.text.is_empty() {
        return Err(
            value.error("expected a list of facets `{a b} {c}` or `-` for the void complex")
        );
    }
    let mut facets = Vec::new();
    let mut rest = value;
    loop {
        let trimmed = rest.text.trim_start();
        if trimmed.is_empty() {
            break;
        }
        let at = rest.text.len() - trimmed.len();
        rest = rest.slice(at, trimmed.len());
        if !rest.text.starts_with('{') {
            return Err(rest.slice(0, 0).error("expected `{` to open a facet"));
        }
        let Some(close) = rest.text.find('}') else {
            return Err(rest.slice(0, 0).error("unclosed `{`"));
        };
        let inner = rest.slice(1, close - 1);
        if let Some(open) = inner.text.find('{') {
            return Err(inner.slice(open, 1).error("nested `{`"));
        }
        let labels = words(inner)
            .into_iter()
            .map(|w| label_in(&vertices, w, "vertex"))
            .collect::<Result<Vec<_>, _>>()?;
        let face = vertices.subset(labels).map_err(|e| inner.error(e))?;
        facets.push(face);
        rest = rest.slice(close + 1, rest.text.len() - close - 1);
    }
    SimplicialComplex::from_facets(&vertices, &facets).map_err(|e| value.error(e))
}

/// Parses a total map between explicitly listed domain and codomain.
pub fn parse_map(text: &str) -> Result<SetMap, ParseError> {
    let fields = Fields::read(text, &["domain", "codomain", "map"])?;
    let domain = vertex_set(fields.get("domain")?)?;
    let codomain = vertex_set(fields.get("codomain")?)?;
    let value = fields.get("map")?;
    let mut pairs: Vec<(&str, &str)> = Vec::new();
    for w in words(value) {
        let Some(arrow) = w.text.find("->") else {
            return Err(w.error(format!("expected `label->label`, found {:?}", w.text)));
        };
        let from = label_in(&domain, w.slice(0, arrow), "domain")?;
        let to = label_in(
            &codomain,
            w.slice(arrow + 2, w.text.len() - arrow - 2),
            "codomain",
        )?;
        if pairs.iter().any(|&(a, _)| a == from) {
            return Err(w.error(format!("{from:?} is assigned twice")));
        }
        pairs.push((from, to));
    }
    if let Some(missing) = domain
        .labels()
        .iter()
        .find(|a| !pairs.iter().any(|&(p, _)| p == a.as_str()))
    {
        return Err(value.error(format!("map does not assign an image to {missing:?}")));
    }
    SetMap::new(&domain, &codomain, pairs).map_err(|e| value.error(e))
}

/// Parses `I = (x_a*x_b, x_c)` over the listed ring. Any variable prefix is
/// accepted as long as it is used throughout; `(0)` and `(1)` are the zero
/// and unit ideals.
pub fn parse_ideal(text: &str) -> Result<SqfIdeal, ParseError> {
    let fields = Fields::read(text, &["ring", "I"])?;
    let ring = vertex_set(fields.get("ring")?)?;
    let value = fields.get("I")?;
    let body = value.text;
    if !body.starts_with('(') || !body.ends_with(')') || body.len() < 2 {
        return Err(value.error("expected `(generators)`"));
    }
    let inner = value.slice(1, body.len() - 2);
    match inner.text.trim() {
        "0" => return Ok(SqfIdeal::zero(&ring)),
        "1" => return Ok(SqfIdeal::unit(&ring)),
        "" => return Err(inner.error("empty generator list; write (0) for the zero ideal")),
        _ => {}
    }
    let mut gens: Vec<Token<'_>> = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in inner.text.char_indices().chain([(inner.text.len(), ',')]) {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                gens.push(inner.slice(start, i - start));
                start = i + 1;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(inner.slice(i, 1).error("unbalanced `)`"));
        }
    }
    let mut prefix: Option<&str> = None;
    let mut supports = Vec::new();
    for g in gens {
        let lead = g.text.len() - g.text.trim_start().len();
        let g = g.slice(lead, g.text.trim().len());
        if g.text.is_empty() {
            return Err(g.error("empty generator"));
        }
        let mut labels = Vec::new();
        let mut offset = 0;
        for var in g.text.split('*') {
            let v = g.slice(offset, var.len());
            offset += var.len() + 1;
            let Some(us) = v.text.find('_') else {
                return Err(v.error(format!(
                    "expected a variable like `x_a`, found {:?}",
                    v.text
                )));
            };
            let p = &v.text[..us];
            if p.is_empty() || !p.chars().all(|c| c.is_ascii_alphabetic()) {
                return Err(v.error(format!("bad variable prefix {p:?}")));
            }
            match prefix {
                None => prefix = Some(p),
                Some(q) if q != p => {
                    return Err(v.error(format!("variable prefix {p:?} differs from {q:?}")));
                }
                _ => {}
            }
            let label = v.slice(us + 1, v.text.len() - us - 1);
            labels.push(label_in(&ring, label, "ring")?);
        }
        let s: Subset = ring.subset(labels).map_err(|e| g.error(e))?;
        supports.push(s);
    }
    SqfIdeal::new(&ring, &supports).map_err(|e| value.error(e))
}
