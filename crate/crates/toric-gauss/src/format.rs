//! Plain-text input formats.
//!
//! Algebra files start with `dim <d>` followed by one monomial per line,
//! either as `d` exponents (`2 0 1`) or as a product (`x1^2*x3`). Graph files
//! start with `vertices <d>` followed by `edge <i> <j>` and `loop <i>` lines
//! with 1-based vertices. In both, `#` starts a comment and blank lines are
//! ignored.

use std::fmt;

use toric_gauss_core::graphs::{Edge, LoopedGraph};
use toric_gauss_core::{Monomial, MonomialAlgebra, MonomialSet};

/// A malformed input line. `line` is 1-based; 0 refers to the file as a
/// whole.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{}", self.describe())]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }

    fn describe(&self) -> String {
        if self.line == 0 {
            self.message.clone()
        } else {
            format!("line {}: {}", self.line, self.message)
        }
    }
}

/// Non-empty lines with comments stripped, paired with 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(k, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((k + 1, line))
    })
}

fn header(lines: &mut impl Iterator<Item = (usize, impl AsRef<str>)>, keyword: &str) -> Result<usize, ParseError> {
    let Some((n, line)) = lines.next() else {
        return Err(ParseError::new(0, format!("empty input, expected `{} <n>`", keyword)));
    };
    let mut words = line.as_ref().split_whitespace();
    match (words.next(), words.next().map(str::parse::<usize>), words.next()) {
        (Some(k), Some(Ok(d)), None) if k == keyword && d > 0 => Ok(d),
        _ => Err(ParseError::new(
            n,
            format!("expected `{} <n>` with n >= 1, found `{}`", keyword, line.as_ref()),
        )),
    }
}

/// The contents of an algebra file, in file order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraFile {
    pub dim: usize,
    pub monomials: Vec<Monomial>,
    /// Source line of each monomial.
    pub lines: Vec<usize>,
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lines = content_lines(text);
        let dim = header(&mut lines, "dim")?;
        let mut monomials = Vec::new();
        let mut numbers = Vec::new();
        for (n, line) in lines {
            let m = parse_monomial_line(dim, line).map_err(|msg| ParseError::new(n, msg))?;
            if let Some(first) = monomials.first().map(Monomial::degree) {
                if m.degree() != first {
                    return Err(ParseError::new(
                        n,
                        format!(
                            "`{}` has degree {}, earlier generators have degree {}",
                            line,
                            m.degree(),
                            first
                        ),
                    ));
                }
            }
            monomials.push(m);
            numbers.push(n);
        }
        if monomials.is_empty() {
            return Err(ParseError::new(0, "no generators given"));
        }
        if monomials[0].degree() == 0 {
            return Err(ParseError::new(numbers[0], "generators must have positive degree"));
        }
        Ok(AlgebraFile {
            dim,
            monomials,
            lines: numbers,
        })
    }

    /// The algebra generated by the listed monomials, with duplicates
    /// dropped.
    pub fn algebra(&self) -> MonomialAlgebra {
        MonomialAlgebra::new(self.dim, self.monomials.clone()).expect("validated while parsing")
    }

    pub fn set(&self) -> MonomialSet {
        MonomialSet::new(self.dim, self.monomials.iter().cloned()).expect("validated while parsing")
    }
}

fn parse_monomial_line(dim: usize, line: &str) -> Result<Monomial, String> {
    let words: Vec<&str> = line.split_whitespace().collect();
    if words.iter().all(|w| w.bytes().all(|b| b.is_ascii_digit())) {
        if words.len() != dim {
            return Err(format!("expected {} exponents, found {}", dim, words.len()));
        }
        let exps = words
            .iter()
            .map(|w| w.parse::<u32>().map_err(|_| format!("exponent `{}` out of range", w)))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(Monomial::new(exps));
    }
    let joined: String = words.concat();
    Monomial::parse_product(dim, &joined).map_err(|e| e.to_string())
}

/// Parses a graph file into a graph on 0-based vertices.
pub fn parse_graph(text: &str) -> Result<LoopedGraph, ParseError> {
    let mut lines = content_lines(text);
    let d = header(&mut lines, "vertices")?;
    let mut edges: Vec<Edge> = Vec::new();
    let mut loops = Vec::new();
    let vertex = |n: usize, w: &str| -> Result<usize, ParseError> {
        match w.parse::<usize>() {
            Ok(v) if (1..=d).contains(&v) => Ok(v - 1),
            _ => Err(ParseError::new(n, format!("vertex `{}` is not in 1..{}", w, d))),
        }
    };
    for (n, line) in lines {
        let words: Vec<&str> = line.split_whitespace().collect();
        match words.as_slice() {
            ["edge", a, b] => {
                let (a, b) = (vertex(n, a)?, vertex(n, b)?);
                if a == b {
                    return Err(ParseError::new(
                        n,
                        format!(
                            "edge {} {} joins a vertex to itself; use `loop {}`",
                            a + 1,
                            b + 1,
                            a + 1
                        ),
                    ));
                }
                let e = (a.min(b), a.max(b));
                if edges.contains(&e) {
                    return Err(ParseError::new(n, format!("duplicate edge {} {}", e.0 + 1, e.1 + 1)));
                }
                edges.push(e);
            }
            ["loop", a] => loops.push(vertex(n, a)?),
            _ => {
                return Err(ParseError::new(
                    n,
                    format!("expected `edge <i> <j>` or `loop <i>`, found `{}`", line),
                ))
            }
        }
    }
    LoopedGraph::new(d, edges, loops).map_err(|e| ParseError::new(0, e.to_string()))
}

/// How monomials are printed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MonomialStyle {
    /// Space-separated exponents.
    Expvec,
    /// `x1^2*x2`.
    #[default]
    Product,
}

pub struct Styled<'a>(pub &'a Monomial, pub MonomialStyle);

impl fmt::Display for Styled<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.1 {
            MonomialStyle::Product => write!(f, "{}", self.0),
            MonomialStyle::Expvec => {
                for (k, e) in self.0.exps().iter().enumerate() {
                    if k > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{}", e)?;
                }
                Ok(())
            }
        }
    }
}

/// An algebra file listing `set`, readable by [`AlgebraFile::parse`].
pub fn write_algebra(set: &MonomialSet, style: MonomialStyle) -> String {
    let mut out = format!("dim {}\n", set.dim());
    for m in set {
        out.push_str(&Styled(m, style).to_string());
        out.push('\n');
    }
    out
}
