//! Golden matrix fixtures, and their checks.
//!
//! A fixture is plain text:
//!
//! ```text
//! figure 1a
//! n 5
//! edge_order 1 2 3 4 5        (optional)
//! matrix                      (oriented matrix, n rows)
//! 0 -1 0 0 0
//! ...
//! operator                    (optional, n rows)
//! unoriented                  (optional, n rows)
//! unoriented_charpoly 1 -3 1 1 -3 1   (constant term first)
//! ```
//!
//! Blank lines and lines starting with `#` are ignored.
//!
//! Only the matrices are recorded, not the trees and maps behind them, so
//! fixtures are matrix-level. [`reconstruct`] searches for labeled
//! instances that reproduce a fixture matrix exactly (up to edge order),
//! which enables the checks that need a tree.

use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{charpoly, determinant, Matrix, Modulus, Polynomial};
use crate::dynamics::{all_cycles, oriented_matrix, unoriented_matrix, VertexMap};
use crate::error::{Error, Result};
use crate::report::{MatrixJson, PolyJson};
use crate::theorems::{
    basis_witness, coprime_pairs, geometric_sum_check, odd_coefficients_check, prop1_case2_check,
    z2_similarity_to_companion, Prop1Outcome,
};
use crate::tree::{canonical_form, enumerate_trees, Orientation, Tree};

/// Every shipped figure panel; `a`/`b` are the left/right panels of
/// figures 2 and 3.
pub const FIGURE_IDS: [&str; 11] = [
    "1a", "1b", "1c", "1d", "1e", "1f", "2a", "2b", "3a", "3b", "4",
];

const BUILTIN: [(&str, &str); 11] = [
    ("1a", include_str!("../fixtures/fig1a.txt")),
    ("1b", include_str!("../fixtures/fig1b.txt")),
    ("1c", include_str!("../fixtures/fig1c.txt")),
    ("1d", include_str!("../fixtures/fig1d.txt")),
    ("1e", include_str!("../fixtures/fig1e.txt")),
    ("1f", include_str!("../fixtures/fig1f.txt")),
    ("2a", include_str!("../fixtures/fig2a.txt")),
    ("2b", include_str!("../fixtures/fig2b.txt")),
    ("3a", include_str!("../fixtures/fig3a.txt")),
    ("3b", include_str!("../fixtures/fig3b.txt")),
    ("4", include_str!("../fixtures/fig4.txt")),
];

/// Largest `n` for which [`reconstruct`] runs.
pub const RECONSTRUCTION_MAX_N: usize = 7;

#[derive(Clone, Debug, PartialEq)]
pub struct Fixture {
    pub figure: String,
    pub n: usize,
    pub edge_order: Option<Vec<usize>>,
    pub oriented: Matrix<i64>,
    pub operator: Option<Matrix<i64>>,
    pub unoriented: Option<Matrix<i64>>,
    pub caption_charpoly: Polynomial<i64>,
}

/// Accepts `1a`, `fig1a`, `2left`, `2-right` and the like.
pub fn normalize_id(id: &str) -> String {
    let s = id.trim().to_ascii_lowercase();
    let s = s.strip_prefix("fig").unwrap_or(&s);
    let s = s.strip_prefix("ure").unwrap_or(s);
    let s: String = s.chars().filter(|c| !matches!(c, '-' | '_' | ' ' | '(' | ')')).collect();
    s.replace("left", "a").replace("right", "b")
}

/// The fixture compiled into the crate.
pub fn builtin(id: &str) -> Result<Fixture> {
    let id = normalize_id(id);
    let text = BUILTIN
        .iter()
        .find(|(k, _)| *k == id)
        .map(|(_, t)| *t)
        .ok_or_else(|| Error::FixtureMissing(id.clone()))?;
    parse_fixture(text)
}

/// The raw text of a built-in fixture.
pub fn builtin_text(id: &str) -> Option<&'static str> {
    let id = normalize_id(id);
    BUILTIN.iter().find(|(k, _)| *k == id).map(|(_, t)| *t)
}

/// Loads `fig<id>.txt` from `dir`.
pub fn load(dir: &Path, id: &str) -> Result<Fixture> {
    let id = normalize_id(id);
    let path = dir.join(format!("fig{id}.txt"));
    let text = std::fs::read_to_string(&path)
        .map_err(|_| Error::FixtureMissing(path.display().to_string()))?;
    parse_fixture(&text)
}

fn parse_ints(line: &str, lineno: usize, first_col: usize) -> Result<Vec<i64>> {
    let mut out = Vec::new();
    let mut col = first_col;
    for tok in line.split(' ') {
        if !tok.is_empty() {
            out.push(tok.parse().map_err(|_| {
                Error::parse(lineno, col, format!("expected an integer, found {tok:?}"))
            })?);
        }
        col += tok.len() + 1;
    }
    Ok(out)
}

pub fn parse_fixture(text: &str) -> Result<Fixture> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end()))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .collect();
    let mut figure = None;
    let mut n = None;
    let mut edge_order: Option<Vec<usize>> = None;
    let mut blocks: [Option<Matrix<i64>>; 3] = [None, None, None];
    let mut caption = None;
    let mut k = 0;
    while k < lines.len() {
        let (lineno, line) = lines[k];
        let (key, rest) = line.split_once(' ').unwrap_or((line, ""));
        let value_col = key.len() + 2;
        k += 1;
        match key {
            "figure" => figure = Some(normalize_id(rest)),
            "n" => {
                n = Some(rest.trim().parse::<usize>().map_err(|_| {
                    Error::parse(lineno, value_col, format!("bad dimension {rest:?}"))
                })?)
            }
            "edge_order" => {
                let v = parse_ints(rest, lineno, value_col)?;
                if v.iter().any(|&e| e < 1) {
                    return Err(Error::parse(lineno, value_col, "edge labels start at 1"));
                }
                edge_order = Some(v.into_iter().map(|e| e as usize).collect())
            }
            "matrix" | "operator" | "unoriented" => {
                let n = n.ok_or_else(|| Error::parse(lineno, 1, "`n` must precede matrices"))?;
                let mut rows = Vec::with_capacity(n);
                for _ in 0..n {
                    let (ln, l) = *lines.get(k).ok_or_else(|| {
                        Error::parse(lineno, 1, format!("{key} block needs {n} rows"))
                    })?;
                    let row = parse_ints(l, ln, 1)?;
                    if row.len() != n {
                        return Err(Error::parse(
                            ln,
                            1,
                            format!("expected {n} entries, found {}", row.len()),
                        ));
                    }
                    rows.push(row);
                    k += 1;
                }
                let slot = match key {
                    "matrix" => 0,
                    "operator" => 1,
                    _ => 2,
                };
                blocks[slot] = Some(Matrix::from_i64_rows((), &rows)?);
            }
            "unoriented_charpoly" => {
                caption = Some(Polynomial::from_i64((), &parse_ints(rest, lineno, value_col)?));
            }
            other => {
                return Err(Error::parse(lineno, 1, format!("unknown key {other:?}")));
            }
        }
    }
    let need = |what: &str| Error::parse(lines.last().map_or(1, |l| l.0), 1, format!("missing `{what}`"));
    let [oriented, operator, unoriented] = blocks;
    let n = n.ok_or_else(|| need("n"))?;
    if let Some(order) = &edge_order {
        if order.len() != n {
            return Err(need("edge_order with n entries"));
        }
    }
    Ok(Fixture {
        figure: figure.ok_or_else(|| need("figure"))?,
        n,
        edge_order,
        oriented: oriented.ok_or_else(|| need("matrix"))?,
        operator,
        unoriented,
        caption_charpoly: caption.ok_or_else(|| need("unoriented_charpoly"))?,
    })
}

fn write_block(out: &mut String, key: &str, m: &Matrix<i64>) {
    out.push_str(key);
    out.push('\n');
    for row in m.to_i64_rows() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
}

impl Fixture {
    /// Canonical text form; parsing it gives back the same fixture.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "figure {}", self.figure);
        let _ = writeln!(out, "n {}", self.n);
        if let Some(order) = &self.edge_order {
            let s: Vec<String> = order.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "edge_order {}", s.join(" "));
        }
        write_block(&mut out, "matrix", &self.oriented);
        if let Some(r) = &self.operator {
            write_block(&mut out, "operator", r);
        }
        if let Some(b) = &self.unoriented {
            write_block(&mut out, "unoriented", b);
        }
        out.push_str("# constant term first\n");
        let c: Vec<String> = self.caption_charpoly.to_i64_vec().iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "unoriented_charpoly {}", c.join(" "));
        out
    }
}

// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProductIdentity {
    /// `operator · unoriented == matrix`, entrywise.
    pub holds: bool,
    /// The printed unoriented matrix is `|matrix|`.
    pub unoriented_is_abs: bool,
    pub product: MatrixJson,
    pub operator_charpoly: PolyJson,
    pub operator_det: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Reproduction {
    pub command: &'static str,
    pub figure: String,
    pub n: String,
    pub oriented: MatrixJson,
    pub unoriented: MatrixJson,
    pub oriented_charpoly: PolyJson,
    pub oriented_charpoly_geometric: bool,
    pub det_oriented: String,
    pub det_oriented_is_sign: bool,
    pub geometric_sum_vanishes: bool,
    pub unoriented_charpoly: PolyJson,
    pub caption_charpoly: PolyJson,
    pub caption_match: bool,
    pub det_unoriented: String,
    pub unoriented_coefficients_odd: bool,
    pub unoriented_z2_similar_to_companion: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub product_identity: Option<ProductIdentity>,
    pub all_match: bool,
}

impl Reproduction {
    /// Turns a mismatch into [`Error::MismatchAgainstCaption`].
    pub fn require_match(&self) -> Result<()> {
        if self.all_match {
            return Ok(());
        }
        let mut bad = Vec::new();
        let checks = [
            ("oriented charpoly", self.oriented_charpoly_geometric),
            ("oriented determinant", self.det_oriented_is_sign),
            ("geometric sum", self.geometric_sum_vanishes),
            ("caption polynomial", self.caption_match),
            ("odd coefficients", self.unoriented_coefficients_odd),
            ("Z_2 invariant factors", self.unoriented_z2_similar_to_companion),
            (
                "product identity",
                self.product_identity.as_ref().map_or(true, |p| p.holds && p.unoriented_is_abs),
            ),
        ];
        for (what, ok) in checks {
            if !ok {
                bad.push(what);
            }
        }
        Err(Error::MismatchAgainstCaption {
            figure: self.figure.clone(),
            detail: bad.join(", "),
        })
    }
}

/// Recomputes everything a fixture's matrices determine and compares it with
/// the caption. Mismatches are reported in the result, not as an error.
pub fn reproduce(fx: &Fixture) -> Result<Reproduction> {
    let a = &fx.oriented;
    let b = a.abs();
    let n = fx.n;
    let cp_a = charpoly(a)?;
    let cp_b = charpoly(&b)?;
    let det_a = determinant(a)?;
    let det_b = determinant(&b)?;
    let geometric = Polynomial::geometric((), n);
    let sign = if n % 2 == 0 { 1 } else { -1 };

    let product_identity = match (&fx.operator, &fx.unoriented) {
        (Some(r), Some(bp)) => {
            let product = r.mul(bp)?;
            Some(ProductIdentity {
                holds: &product == a,
                unoriented_is_abs: *bp == b,
                product: MatrixJson::from(&product),
                operator_charpoly: PolyJson::from(&charpoly(r)?),
                operator_det: determinant(r)?.to_string(),
            })
        }
        _ => None,
    };

    let mut rep = Reproduction {
        command: "reproduce",
        figure: fx.figure.clone(),
        n: n.to_string(),
        oriented: MatrixJson::from(a),
        unoriented: MatrixJson::from(&b),
        oriented_charpoly_geometric: cp_a == geometric,
        oriented_charpoly: PolyJson::from(&cp_a),
        det_oriented: det_a.to_string(),
        det_oriented_is_sign: det_a == sign,
        geometric_sum_vanishes: geometric_sum_check(a)?,
        caption_match: cp_b == fx.caption_charpoly,
        unoriented_charpoly: PolyJson::from(&cp_b),
        caption_charpoly: PolyJson::from(&fx.caption_charpoly),
        det_unoriented: det_b.to_string(),
        unoriented_coefficients_odd: odd_coefficients_check(&b)?,
        unoriented_z2_similar_to_companion: z2_similarity_to_companion(&b)?,
        product_identity,
        all_match: false,
    };
    rep.all_match = rep.oriented_charpoly_geometric
        && rep.det_oriented_is_sign
        && rep.geometric_sum_vanishes
        && rep.caption_match
        && rep.unoriented_coefficients_odd
        && rep.unoriented_z2_similar_to_companion
        && rep
            .product_identity
            .as_ref()
            .map_or(true, |p| p.holds && p.unoriented_is_abs);
    Ok(rep)
}

// ---------------------------------------------------------------------------
// Reconstruction

/// A labeled instance whose oriented matrix, with its edges listed in the
/// tree's order, is exactly the fixture matrix.
#[derive(Clone, Debug)]
pub struct Reconstruction {
    pub map: VertexMap,
    pub orientation: Orientation,
}

impl Reconstruction {
    pub fn tree(&self) -> &Tree {
        self.map.tree()
    }
}

/// Edge permutations `p` with `target[r][c] == m[p[r]][p[c]]`.
fn matching_permutations(target: &Matrix<i64>, m: &Matrix<i64>) -> Vec<Vec<usize>> {
    fn go(
        target: &Matrix<i64>,
        m: &Matrix<i64>,
        perm: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let r = perm.len();
        let n = target.rows();
        if r == n {
            out.push(perm.clone());
            return;
        }
        for cand in 0..n {
            if used[cand] {
                continue;
            }
            perm.push(cand);
            let ok = (0..=r).all(|s| {
                *target.get(r, s) == *m.get(cand, perm[s])
                    && *target.get(s, r) == *m.get(perm[s], cand)
            });
            if ok {
                used[cand] = true;
                go(target, m, perm, used, out);
                used[cand] = false;
            }
            perm.pop();
        }
    }
    let mut out = Vec::new();
    let mut used = vec![false; target.rows()];
    go(target, m, &mut Vec::new(), &mut used, &mut out);
    out
}

/// Every labeled instance (tree representative of each isomorphism class,
/// any cycle, any orientation, any edge order) that reproduces the fixture's
/// oriented matrix exactly, up to `limit` results. Vertex labels are only
/// meaningful up to relabeling, since each tree class is visited once.
pub fn reconstruct(fx: &Fixture, limit: usize) -> Result<Vec<Reconstruction>> {
    let n = fx.n;
    if n > RECONSTRUCTION_MAX_N {
        return Err(Error::CapExceeded {
            what: "reconstruction n",
            value: n,
            cap: RECONSTRUCTION_MAX_N,
        });
    }
    let target_abs = fx.oriented.abs();
    let target_cp = charpoly(&target_abs)?;
    let mut out = Vec::new();
    for tree in enumerate_trees(n + 1)? {
        let tree = Arc::new(tree);
        for image in all_cycles(n + 1) {
            let f = VertexMap::new(Arc::clone(&tree), image)?;
            let b = unoriented_matrix(&f)?;
            if charpoly(&b)? != target_cp {
                continue;
            }
            for perm in matching_permutations(&target_abs, &b) {
                let t2 = Arc::new(tree.reorder_edges(&perm)?);
                let f2 = f.with_tree(t2)?;
                for o in Orientation::all(n) {
                    if oriented_matrix(&f2, &o)?.oriented == fx.oriented {
                        out.push(Reconstruction {
                            map: f2.clone(),
                            orientation: o,
                        });
                        if out.len() >= limit {
                            return Ok(out);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReconstructedInstance {
    pub tree: String,
    pub edges: String,
    pub map: String,
    pub orientation: String,
}

impl From<&Reconstruction> for ReconstructedInstance {
    fn from(r: &Reconstruction) -> Self {
        ReconstructedInstance {
            tree: canonical_form(r.tree()),
            edges: r.tree().edge_list_string(),
            map: r.map.image_string(),
            orientation: r.orientation.to_bits(),
        }
    }
}

/// A basis matrix found on some reconstruction with a prescribed
/// characteristic polynomial.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MfMatch {
    pub instance: ReconstructedInstance,
    pub start: String,
    pub j: String,
    pub end: String,
    pub mf: MatrixJson,
    pub mf_charpoly: PolyJson,
}

/// Searches all reconstructions of `fx` and all `J = [V, f^j(V)]` with
/// `gcd(j, n+1) = 1` for a basis matrix whose characteristic polynomial is
/// `want`. Columns follow the fixture's edge order.
pub fn find_mf_with_charpoly(
    recs: &[Reconstruction],
    want: &Polynomial<i64>,
) -> Result<Option<MfMatch>> {
    for r in recs {
        let n = r.tree().edge_count();
        for (start, j) in (1..=n + 1).flat_map(|s| coprime_pairs(n).into_iter().map(move |(_, j)| (s, j))) {
            let w = basis_witness(&r.map, &r.orientation, start, j)?;
            let cp = charpoly(&w.mf)?;
            if &cp == want {
                return Ok(Some(MfMatch {
                    instance: r.into(),
                    start: start.to_string(),
                    j: j.to_string(),
                    end: r.map.iterate(start, j).to_string(),
                    mf: MatrixJson::from(&w.mf),
                    mf_charpoly: PolyJson::from(&cp),
                }));
            }
        }
    }
    Ok(None)
}

/// Whether the single-sign-change row reduction, applied to a reconstructed
/// instance, yields an operator taking `|A|` to `A`. Returns the operator
/// when it does.
pub fn prop1_operator(r: &Reconstruction) -> Result<Option<Matrix<i64>>> {
    Ok(match prop1_case2_check(&r.map, &r.orientation)? {
        Prop1Outcome::Derived(d) => Some(d.operator),
        Prop1Outcome::NotApplicable(_) => None,
    })
}

/// Whether two fixtures' unoriented matrices are similar over `Z_p`.
pub fn unoriented_similar_mod(a: &Fixture, b: &Fixture, p: u64) -> Result<bool> {
    Modulus::new(p)?;
    crate::theorems::zp_similarity(&a.oriented.abs(), &b.oriented.abs(), p)
}
