//! Plain-text instance format.
//!
//! ```text
//! # comment lines start with '#'
//! n m            header for an undirected instance
//! k v1 ... vk    m edge lines, k = edge cardinality
//! ```
//!
//! A leading `D` token on the header marks a directed instance whose
//! edge lines are `u v` pairs. Serialization writes edges in stored
//! order with ascending vertices inside undirected edges, so
//! `parse(serialize(g)) == g` bit-exactly.

use super::{Hypergraph, VertexId};
use crate::error::{Error, Result};
use std::collections::HashSet;
use std::fmt::Write as _;

pub fn parse(text: &str) -> Result<Hypergraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| Error::Parse { line: 1, msg: "missing header line".into() })?;
    let err = |line: usize, msg: String| Error::Parse { line, msg };
    let mut tokens: Vec<&str> = header.split_whitespace().collect();
    let directed = tokens.first() == Some(&"D");
    if directed {
        tokens.remove(0);
    }
    if tokens.len() != 2 {
        return Err(err(header_line, format!("header must be `[D] n m`, got `{header}`")));
    }
    let n: usize = parse_num(tokens[0], header_line, "vertex count")?;
    let m: usize = parse_num(tokens[1], header_line, "edge count")?;

    let mut undirected_edges: Vec<Vec<VertexId>> = Vec::with_capacity(m);
    let mut arcs: Vec<(VertexId, VertexId)> = Vec::with_capacity(m);
    let mut seen: HashSet<Vec<VertexId>> = HashSet::new();
    let mut read = 0usize;
    for (line_no, line) in lines {
        if read == m {
            return Err(err(line_no, format!("expected {m} edge lines, found more")));
        }
        let nums: Vec<usize> = line
            .split_whitespace()
            .map(|t| parse_num(t, line_no, "vertex id"))
            .collect::<Result<_>>()?;
        let raw: Vec<VertexId> = if directed {
            if nums.len() != 2 {
                return Err(err(line_no, "directed edge line must be `u v`".into()));
            }
            if nums[0] == nums[1] {
                return Err(err(line_no, format!("self-loop at vertex {}", nums[0])));
            }
            nums
        } else {
            if nums.is_empty() || nums.len() != nums[0] + 1 {
                return Err(err(line_no, "edge line must be `k v1 ... vk`".into()));
            }
            if nums[0] == 0 {
                return Err(err(line_no, "empty edge".into()));
            }
            nums[1..].to_vec()
        };
        if let Some(&v) = raw.iter().find(|&&v| v >= n) {
            return Err(err(line_no, format!("vertex id {v} out of range (n = {n})")));
        }
        let mut key = raw.clone();
        if !directed {
            key.sort_unstable();
            if key.windows(2).any(|w| w[0] == w[1]) {
                return Err(err(line_no, "edge repeats a vertex".into()));
            }
        }
        if !seen.insert(key) {
            return Err(err(line_no, "duplicate edge".into()));
        }
        if directed {
            arcs.push((raw[0], raw[1]));
        } else {
            undirected_edges.push(raw);
        }
        read += 1;
    }
    if read != m {
        return Err(err(header_line, format!("header promises {m} edges but {read} were found")));
    }

    let built = if directed {
        Hypergraph::new_directed(n, arcs)
    } else {
        Hypergraph::new(n, undirected_edges)
    };
    built.map_err(|e| err(header_line, e.to_string()))
}

pub fn serialize(g: &Hypergraph) -> String {
    let mut out = String::new();
    if g.is_directed() {
        let _ = writeln!(out, "D {} {}", g.n(), g.edge_count());
        for e in g.edges() {
            let _ = writeln!(out, "{} {}", e[0], e[1]);
        }
    } else {
        let _ = writeln!(out, "{} {}", g.n(), g.edge_count());
        for e in g.edges() {
            let ids: Vec<String> = e.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "{} {}", e.len(), ids.join(" "));
        }
    }
    out
}

fn parse_num(token: &str, line: usize, what: &str) -> Result<usize> {
    token
        .parse()
        .map_err(|_| Error::Parse { line, msg: format!("bad {what} `{token}`") })
}
