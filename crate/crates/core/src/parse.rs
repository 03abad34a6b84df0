//! Textual instance specs, as accepted on the command line.
//!
//! Every error is reported at a 1-based `(line, column)`; specs are single
//! lines, so the line is always 1.

use std::ops::RangeInclusive;
use std::sync::Arc;

use crate::dynamics::VertexMap;
use crate::error::{Error, Result};
use crate::sweep::OrientationMode;
use crate::tree::{decode_prufer, Orientation, Tree};

/// Comma-separated tokens with the column where each starts.
fn tokens(s: &str, sep: char) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut col = 1;
    for tok in s.split(sep) {
        let lead = tok.len() - tok.trim_start().len();
        out.push((col + lead, tok.trim()));
        col += tok.len() + 1;
    }
    out
}

fn number(tok: &str, col: usize, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(1, col, format!("expected {what}, found {tok:?}")))
}

/// An edge list `1-2,2-3,2-4` (edge `E_k` is the `k`-th pair) or a Prüfer
/// code `2,2` (labels `1..=len+2`).
pub fn parse_tree(spec: &str) -> Result<Tree> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Err(Error::parse(1, 1, "empty tree spec"));
    }
    if spec.contains('-') {
        let mut edges = Vec::new();
        for (col, tok) in tokens(spec, ',') {
            let (a, b) = tok
                .split_once('-')
                .ok_or_else(|| Error::parse(1, col, format!("expected an edge `u-v`, found {tok:?}")))?;
            let u = number(a.trim(), col, "a vertex label")?;
            let v = number(b.trim(), col + a.len() + 1, "a vertex label")?;
            edges.push((u, v));
        }
        Tree::new(edges.len() + 1, edges)
    } else {
        let code = tokens(spec, ',')
            .into_iter()
            .map(|(col, tok)| number(tok, col, "a Prüfer entry"))
            .collect::<Result<Vec<_>>>()?;
        decode_prufer(&code, code.len() + 2)
    }
}

/// An image list `2,3,1` (`f(1), f(2), ...`) or cycle notation `(1 2 3)`.
pub fn parse_map(tree: Arc<Tree>, spec: &str) -> Result<VertexMap> {
    let spec = spec.trim();
    if let Some(inner) = spec.strip_prefix('(') {
        let inner = inner
            .strip_suffix(')')
            .ok_or_else(|| Error::parse(1, spec.len(), "unclosed cycle"))?;
        let cycle = tokens(inner, ' ')
            .into_iter()
            .filter(|(_, t)| !t.is_empty())
            .map(|(col, tok)| number(tok.trim_matches(','), col + 1, "a vertex label"))
            .collect::<Result<Vec<_>>>()?;
        VertexMap::from_cycle(tree, &cycle)
    } else {
        let image = tokens(spec, ',')
            .into_iter()
            .map(|(col, tok)| number(tok, col, "a vertex label"))
            .collect::<Result<Vec<_>>>()?;
        VertexMap::new(tree, image)
    }
}

/// One `0`/`1` per edge; `1` reverses the canonical direction.
pub fn parse_orientation(tree: &Tree, spec: &str) -> Result<Orientation> {
    let o = Orientation::from_bits(spec.trim())?;
    if o.len() != tree.edge_count() {
        return Err(Error::parse(
            1,
            o.len().min(tree.edge_count()) + 1,
            format!(
                "orientation has {} bits but the tree has {} edges",
                o.len(),
                tree.edge_count()
            ),
        ));
    }
    Ok(o)
}

/// `5` or `2..5` (inclusive).
pub fn parse_n_range(spec: &str) -> Result<RangeInclusive<usize>> {
    let spec = spec.trim();
    match spec.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            let lo = number(a, 1, "a number")?;
            let hi = number(b, a.len() + 3, "a number")?;
            if lo > hi {
                return Err(Error::parse(1, 1, format!("empty range {spec}")));
            }
            Ok(lo..=hi)
        }
        None => {
            let n = number(spec, 1, "a number")?;
            Ok(n..=n)
        }
    }
}

/// `all`, `canonical`, or `sample:<k>`.
pub fn parse_orientation_mode(spec: &str) -> Result<OrientationMode> {
    match spec.trim() {
        "all" => Ok(OrientationMode::All),
        "canonical" => Ok(OrientationMode::Canonical),
        s => match s.strip_prefix("sample:") {
            Some(k) => Ok(OrientationMode::Sample(number(k, 8, "a sample count")?)),
            None => Err(Error::parse(
                1,
                1,
                format!("expected all, canonical or sample:<k>, found {s:?}"),
            )),
        },
    }
}

/// `2,3,5`; each entry must be prime.
pub fn parse_primes(spec: &str) -> Result<Vec<u64>> {
    tokens(spec, ',')
        .into_iter()
        .map(|(col, tok)| {
            let p = number(tok, col, "a prime")? as u64;
            if crate::algebra::is_prime(p) {
                Ok(p)
            } else {
                Err(Error::NotPrime(p))
            }
        })
        .collect()
}
