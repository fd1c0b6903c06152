use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context, Result};
use twofactor::io::{parse_edge_list, parse_graph6};
use twofactor::Graph;

fn read_source(path: Option<&Path>) -> Result<String> {
    let mut text = String::new();
    match path {
        Some(p) => {
            text = std::fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))?;
        }
        None => {
            std::io::stdin().read_to_string(&mut text).context("cannot read standard input")?;
        }
    }
    Ok(text)
}

fn looks_like_edge_list(text: &str) -> bool {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.starts_with("n ") || l == "n")
}

fn graph6_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim_end())).filter(|(_, l)| !l.is_empty())
}

/// One graph from `--in FILE` (`.g6` or `.el`) or standard input.
pub fn read_graph(path: Option<&Path>) -> Result<Graph> {
    let text = read_source(path)?;
    let edge_list = match path.and_then(|p| p.extension()).and_then(|e| e.to_str()) {
        Some("el") => true,
        Some("g6") => false,
        _ => looks_like_edge_list(&text),
    };
    if edge_list {
        return Ok(parse_edge_list(&text)?);
    }
    let mut lines = graph6_lines(&text);
    let Some((_, line)) = lines.next() else { bail!("no graph in input") };
    if lines.next().is_some() {
        bail!("expected a single graph; use verify-corpus for streams");
    }
    Ok(parse_graph6(line.as_bytes())?)
}

/// Every graph of a graph6 stream.
pub fn read_graph6_stream(path: Option<&Path>) -> Result<Vec<Graph>> {
    let text = read_source(path)?;
    graph6_lines(&text)
        .map(|(no, line)| parse_graph6(line.as_bytes()).with_context(|| format!("line {no}")))
        .collect()
}
