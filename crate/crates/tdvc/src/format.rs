//! Text formats for trees and construction certificates.
//!
//! A tree file has a header line `n <count>` followed by one `e <u> <v>` line
//! per edge, vertices numbered from 0. Lines starting with `#` and blank lines
//! are ignored. Several trees may share a stream, separated by a line `--`.
//!
//! A certificate file starts with `base P4` and has one `O<k> <vertex>` line
//! per construction step.

use std::fmt::Write as _;

use tdvc_core::family::Certificate;
use tdvc_core::ops::OpKind;
use tdvc_core::Tree;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Tree { line: usize, source: tdvc_core::Error },
    #[error("no tree in input")]
    Empty,
    #[error("expected one tree, found {0}")]
    NotSingle(usize),
}

fn syntax(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, msg: msg.into() }
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize, FormatError> {
    let tok = tok.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| syntax(line, format!("bad {what} `{tok}`")))
}

/// Lines that carry content, with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

struct Pending {
    header_line: usize,
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Pending {
    fn finish(self) -> Result<Tree, FormatError> {
        Tree::from_edge_list(self.n, &self.edges).map_err(|source| FormatError::Tree { line: self.header_line, source })
    }
}

/// Parses every tree in `text`.
pub fn parse_trees(text: &str) -> Result<Vec<Tree>, FormatError> {
    let mut trees = Vec::new();
    let mut cur: Option<Pending> = None;
    for (line, l) in content_lines(text) {
        if l == "--" {
            match cur.take() {
                Some(p) => trees.push(p.finish()?),
                None => return Err(syntax(line, "separator without a tree before it")),
            }
            continue;
        }
        let mut toks = l.split_whitespace();
        match toks.next() {
            Some("n") => {
                if cur.is_some() {
                    return Err(syntax(line, "second header without `--` separator"));
                }
                let n = number(toks.next(), line, "vertex count")?;
                cur = Some(Pending { header_line: line, n, edges: Vec::new() });
            }
            Some("e") => {
                let p = cur.as_mut().ok_or_else(|| syntax(line, "edge before the `n` header"))?;
                let u = number(toks.next(), line, "vertex")?;
                let v = number(toks.next(), line, "vertex")?;
                p.edges.push((u, v));
            }
            Some(other) => return Err(syntax(line, format!("unknown record `{other}`"))),
            None => unreachable!("blank lines are skipped"),
        }
        if toks.next().is_some() {
            return Err(syntax(line, "trailing tokens"));
        }
    }
    if let Some(p) = cur {
        trees.push(p.finish()?);
    }
    if trees.is_empty() {
        return Err(FormatError::Empty);
    }
    Ok(trees)
}

pub fn parse_tree(text: &str) -> Result<Tree, FormatError> {
    let mut trees = parse_trees(text)?;
    if trees.len() != 1 {
        return Err(FormatError::NotSingle(trees.len()));
    }
    Ok(trees.pop().unwrap())
}

/// Writes `tree` with its edges as sorted `u < v` pairs.
pub fn write_tree(tree: &Tree) -> String {
    let mut edges: Vec<(usize, usize)> = tree.edges().iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    edges.sort_unstable();
    let mut out = format!("n {}\n", tree.order());
    for (u, v) in edges {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

/// Writes several trees separated by `--` lines.
pub fn write_trees<'a>(trees: impl IntoIterator<Item = &'a Tree>) -> String {
    let parts: Vec<String> = trees.into_iter().map(write_tree).collect();
    parts.join("--\n")
}

pub fn parse_certificate(text: &str) -> Result<Certificate, FormatError> {
    let mut lines = content_lines(text);
    match lines.next() {
        Some((_, "base P4")) => {}
        Some((line, _)) => return Err(syntax(line, "expected `base P4`")),
        None => return Err(syntax(0, "empty certificate")),
    }
    let mut steps = Vec::new();
    let mut last = 1;
    for (line, l) in lines {
        let mut toks = l.split_whitespace();
        let name = toks.next().unwrap();
        let op: OpKind = name.parse().map_err(|_| syntax(line, format!("unknown operation `{name}`")))?;
        if !op.is_construction() {
            return Err(syntax(line, format!("{op} cannot appear in a certificate")));
        }
        let at = number(toks.next(), line, "vertex")?;
        if toks.next().is_some() {
            return Err(syntax(line, "trailing tokens"));
        }
        steps.push((op, at));
        last = line;
    }
    Certificate::from_steps(&steps).map_err(|source| FormatError::Tree { line: last, source })
}

pub fn write_certificate(cert: &Certificate) -> String {
    let mut out = String::from("base P4\n");
    for s in &cert.steps {
        writeln!(out, "{} {}", s.op, s.attach_vertex).unwrap();
    }
    out
}
