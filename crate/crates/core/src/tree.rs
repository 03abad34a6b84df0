//! Labeled trees, edge orientations and signed paths.
//!
//! Vertices carry the labels `1..=n+1`; edge `E_i` is the `i`-th pair of the
//! edge list (0-based in code). An edge's canonical direction runs from its
//! smaller label to its larger one.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Default upper bound on the vertex count for isomorphism-class enumeration.
pub const DEFAULT_VERTEX_CAP: usize = 10;

#[derive(Clone, PartialEq, Eq)]
pub struct Tree {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    // hop[(u-1) * v + (w-1)] = (next vertex on the path u -> w, edge index)
    hop: Vec<(u16, u16)>,
}

impl Tree {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if vertex_count < 3 {
            return Err(Error::TooFewVertices(vertex_count));
        }
        if edges.len() != vertex_count - 1 {
            return Err(Error::InvalidTree(format!(
                "{} vertices need {} edges, got {}",
                vertex_count,
                vertex_count - 1,
                edges.len()
            )));
        }
        let mut adj = vec![Vec::new(); vertex_count];
        let mut seen = BTreeSet::new();
        for (i, &(a, b)) in edges.iter().enumerate() {
            for x in [a, b] {
                if x == 0 || x > vertex_count {
                    return Err(Error::OutOfRangeLabel {
                        label: x,
                        max: vertex_count,
                    });
                }
            }
            if a == b {
                return Err(Error::InvalidTree(format!("loop at vertex {a}")));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(Error::InvalidTree(format!("repeated edge {a}-{b}")));
            }
            adj[a - 1].push((b, i));
            adj[b - 1].push((a, i));
        }
        let v = vertex_count;
        let mut hop = vec![(0u16, 0u16); v * v];
        // BFS from every target w; parent pointers give the first hop toward w
        for w in 1..=v {
            let mut visited = vec![false; v];
            visited[w - 1] = true;
            let mut queue = VecDeque::from([w]);
            let mut reached = 1;
            while let Some(x) = queue.pop_front() {
                for &(y, e) in &adj[x - 1] {
                    if !visited[y - 1] {
                        visited[y - 1] = true;
                        reached += 1;
                        hop[(y - 1) * v + (w - 1)] = (x as u16, e as u16);
                        queue.push_back(y);
                    }
                }
            }
            if reached != v {
                return Err(Error::InvalidTree("graph is disconnected".into()));
            }
        }
        Ok(Tree {
            vertex_count,
            edges,
            hop,
        })
    }

    /// Path `1 - 2 - ... - v` with edges `[k, k+1]` in order.
    pub fn path(vertex_count: usize) -> Result<Self> {
        Tree::new(vertex_count, (1..vertex_count).map(|k| (k, k + 1)).collect())
    }

    /// Star with center `1` and edges `[1, k]`, `k = 2..=v`.
    pub fn star(vertex_count: usize) -> Result<Self> {
        Tree::new(vertex_count, (2..=vertex_count).map(|k| (1, k)).collect())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, u: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == u || b == u)
            .count()
    }

    pub fn neighbors(&self, u: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == u {
                    Some(b)
                } else if b == u {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    /// True when the tree is a path (an interval in the real line).
    pub fn is_path_graph(&self) -> bool {
        (1..=self.vertex_count).all(|u| self.degree(u) <= 2)
    }

    fn check_vertex(&self, u: usize) -> Result<()> {
        if u == 0 || u > self.vertex_count {
            Err(Error::UnknownVertex(u))
        } else {
            Ok(())
        }
    }

    /// The unique simple path from `u` to `v`, endpoints included.
    pub fn path_vertices(&self, u: usize, v: usize) -> Result<Vec<usize>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut out = vec![u];
        let mut x = u;
        while x != v {
            x = self.hop[(x - 1) * self.vertex_count + (v - 1)].0 as usize;
            out.push(x);
        }
        Ok(out)
    }

    /// Edges along the path `u -> v`, each with `true` when traversed in
    /// canonical direction (smaller label to larger).
    pub fn path_edges(&self, u: usize, v: usize) -> Result<Vec<(usize, bool)>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut out = Vec::new();
        let mut x = u;
        while x != v {
            let (y, e) = self.hop[(x - 1) * self.vertex_count + (v - 1)];
            out.push((e as usize, (y as usize) > x));
            x = y as usize;
        }
        Ok(out)
    }

    /// Endpoints of edge `i` in the direction chosen by `o`: `(tail, head)`.
    pub fn oriented_edge(&self, o: &Orientation, i: usize) -> (usize, usize) {
        let (a, b) = self.edges[i];
        let (lo, hi) = (a.min(b), a.max(b));
        if o.is_reversed(i) {
            (hi, lo)
        } else {
            (lo, hi)
        }
    }

    /// Coordinates of the path `u -> v` in the oriented edge basis: `+1` for
    /// an edge crossed along its orientation, `-1` against it.
    pub fn signed_path_vector(
        &self,
        o: &Orientation,
        u: usize,
        v: usize,
    ) -> Result<SignedEdgeVector> {
        self.check_orientation(o)?;
        let mut coords = vec![0i64; self.edge_count()];
        for (e, canonical) in self.path_edges(u, v)? {
            coords[e] = if canonical != o.is_reversed(e) { 1 } else { -1 };
        }
        Ok(SignedEdgeVector(coords))
    }

    pub fn check_orientation(&self, o: &Orientation) -> Result<()> {
        if o.len() != self.edge_count() {
            return Err(Error::DimensionMismatch {
                expected: self.edge_count(),
                got: o.len(),
            });
        }
        Ok(())
    }

    /// Same tree with edges listed in a new order: edge `k` of the result is
    /// edge `order[k]` of `self`.
    pub fn reorder_edges(&self, order: &[usize]) -> Result<Tree> {
        Tree::new(
            self.vertex_count,
            order.iter().map(|&k| self.edges[k]).collect(),
        )
    }

    /// `"1-2,2-3,3-4"`
    pub fn edge_list_string(&self) -> String {
        self.edges
            .iter()
            .map(|(a, b)| format!("{a}-{b}"))
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tree({}; {})", self.vertex_count, self.edge_list_string())
    }
}

// ---------------------------------------------------------------------------

/// One direction bit per edge; `false` is the canonical direction.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Orientation {
    reversed: Vec<bool>,
}

impl Orientation {
    pub fn canonical(edge_count: usize) -> Self {
        Orientation {
            reversed: vec![false; edge_count],
        }
    }

    pub fn new(reversed: Vec<bool>) -> Self {
        Orientation { reversed }
    }

    /// Bit `i` of `mask` is the direction of edge `i`.
    pub fn from_mask(edge_count: usize, mask: u64) -> Self {
        Orientation {
            reversed: (0..edge_count).map(|i| mask >> i & 1 == 1).collect(),
        }
    }

    pub fn mask(&self) -> u64 {
        self.reversed
            .iter()
            .enumerate()
            .fold(0, |m, (i, &r)| m | (r as u64) << i)
    }

    pub fn len(&self) -> usize {
        self.reversed.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reversed.is_empty()
    }

    pub fn is_reversed(&self, i: usize) -> bool {
        self.reversed[i]
    }

    pub fn flipped(&self, i: usize) -> Self {
        let mut r = self.reversed.clone();
        r[i] = !r[i];
        Orientation { reversed: r }
    }

    /// All `2^n` orientations, in mask order.
    pub fn all(edge_count: usize) -> impl Iterator<Item = Orientation> {
        (0..1u64 << edge_count).map(move |m| Orientation::from_mask(edge_count, m))
    }

    /// `'0'`/`'1'` per edge, edge 1 first.
    pub fn to_bits(&self) -> String {
        self.reversed.iter().map(|&r| if r { '1' } else { '0' }).collect()
    }

    pub fn from_bits(bits: &str) -> Result<Self> {
        let mut reversed = Vec::with_capacity(bits.len());
        for (i, ch) in bits.chars().enumerate() {
            match ch {
                '0' => reversed.push(false),
                '1' => reversed.push(true),
                other => {
                    return Err(Error::parse(
                        1,
                        i + 1,
                        format!("orientation bit must be 0 or 1, found {other:?}"),
                    ))
                }
            }
        }
        Ok(Orientation { reversed })
    }

    pub fn reorder(&self, order: &[usize]) -> Self {
        Orientation {
            reversed: order.iter().map(|&k| self.reversed[k]).collect(),
        }
    }
}

// ---------------------------------------------------------------------------

/// Integer coordinates in the oriented edge basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SignedEdgeVector(pub Vec<i64>);

impl SignedEdgeVector {
    pub fn zero(n: usize) -> Self {
        SignedEdgeVector(vec![0; n])
    }

    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        SignedEdgeVector(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        SignedEdgeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> Self {
        SignedEdgeVector(self.0.iter().map(|a| -a).collect())
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] != 0).collect()
    }
}

// ---------------------------------------------------------------------------
// Prüfer codes

pub fn decode_prufer(code: &[usize], vertex_count: usize) -> Result<Tree> {
    if vertex_count < 3 {
        return Err(Error::TooFewVertices(vertex_count));
    }
    if code.len() != vertex_count - 2 {
        return Err(Error::DimensionMismatch {
            expected: vertex_count - 2,
            got: code.len(),
        });
    }
    if let Some(&bad) = code.iter().find(|&&c| c == 0 || c > vertex_count) {
        return Err(Error::OutOfRangeLabel {
            label: bad,
            max: vertex_count,
        });
    }
    let mut degree = vec![1usize; vertex_count + 1];
    for &c in code {
        degree[c] += 1;
    }
    let mut leaves: BTreeSet<usize> = (1..=vertex_count).filter(|&u| degree[u] == 1).collect();
    let mut edges = Vec::with_capacity(vertex_count - 1);
    for &c in code {
        let leaf = leaves.pop_first().expect("a leaf always exists");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.insert(c);
        }
    }
    let a = leaves.pop_first().unwrap();
    let b = leaves.pop_first().unwrap();
    edges.push((a, b));
    Tree::new(vertex_count, edges)
}

pub fn encode_prufer(t: &Tree) -> Vec<usize> {
    let v = t.vertex_count();
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); v + 1];
    for &(a, b) in t.edges() {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    let mut leaves: BTreeSet<usize> = (1..=v).filter(|&u| adj[u].len() == 1).collect();
    let mut code = Vec::with_capacity(v - 2);
    for _ in 0..v - 2 {
        let leaf = leaves.pop_first().unwrap();
        let nb = *adj[leaf].iter().next().unwrap();
        code.push(nb);
        adj[nb].remove(&leaf);
        adj[leaf].clear();
        if adj[nb].len() == 1 {
            leaves.insert(nb);
        }
    }
    code
}

// ---------------------------------------------------------------------------
// Isomorphism classes

fn rooted_code(t: &Tree, root: usize) -> String {
    fn go(t: &Tree, u: usize, parent: usize, out: &mut String) {
        let mut kids: Vec<String> = t
            .neighbors(u)
            .into_iter()
            .filter(|&w| w != parent)
            .map(|w| {
                let mut s = String::new();
                go(t, w, u, &mut s);
                s
            })
            .collect();
        kids.sort();
        out.push('(');
        for k in kids {
            out.push_str(&k);
        }
        out.push(')');
    }
    let mut s = String::with_capacity(2 * t.vertex_count());
    go(t, root, 0, &mut s);
    s
}

/// One or two central vertices, by repeated leaf stripping.
pub fn centers(t: &Tree) -> Vec<usize> {
    let v = t.vertex_count();
    let mut deg: Vec<usize> = (0..=v).map(|u| if u == 0 { 0 } else { t.degree(u) }).collect();
    let mut layer: Vec<usize> = (1..=v).filter(|&u| deg[u] == 1).collect();
    let mut remaining = v;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            deg[leaf] = 0;
            for w in t.neighbors(leaf) {
                if deg[w] > 0 {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    let mut c: Vec<usize> = (1..=v).filter(|&u| deg[u] > 0).collect();
    if c.is_empty() {
        c = layer;
    }
    c.sort_unstable();
    c
}

/// Isomorphism invariant: the parenthesized AHU code of the tree rooted at
/// its center, minimized over the (at most two) centers.
pub fn canonical_form(t: &Tree) -> String {
    centers(t)
        .into_iter()
        .map(|c| rooted_code(t, c))
        .min()
        .expect("trees have a center")
}

/// Rebuilds a tree from a rooted parenthesized code. Vertices are labeled in
/// preorder; edge `k` joins vertex `k + 2` to its parent.
pub fn tree_from_code(code: &str) -> Result<Tree> {
    let mut stack: Vec<usize> = Vec::new();
    let mut edges = Vec::new();
    let mut next = 0usize;
    for (i, ch) in code.chars().enumerate() {
        match ch {
            '(' => {
                next += 1;
                if let Some(&p) = stack.last() {
                    edges.push((p, next));
                } else if next != 1 {
                    return Err(Error::parse(1, i + 1, "code has more than one root"));
                }
                stack.push(next);
            }
            ')' => {
                stack
                    .pop()
                    .ok_or_else(|| Error::parse(1, i + 1, "unbalanced ')'"))?;
            }
            other => return Err(Error::parse(1, i + 1, format!("unexpected {other:?}"))),
        }
    }
    if !stack.is_empty() {
        return Err(Error::parse(1, code.len(), "unbalanced '('"));
    }
    Tree::new(next, edges)
}

/// One representative per isomorphism class of trees on `v` vertices, in
/// ascending order of canonical code.
///
/// Classes on `v` vertices are grown from those on `v - 1` by attaching a
/// leaf at every vertex and deduplicating; every tree arises this way since
/// deleting any leaf leaves a tree.
pub fn enumerate_trees(v: usize) -> Result<Vec<Tree>> {
    enumerate_trees_capped(v, DEFAULT_VERTEX_CAP)
}

pub fn enumerate_trees_capped(v: usize, cap: usize) -> Result<Vec<Tree>> {
    if v < 3 {
        return Err(Error::TooFewVertices(v));
    }
    if v > cap {
        return Err(Error::CapExceeded {
            what: "vertex count",
            value: v,
            cap,
        });
    }
    // the single tree on 2 vertices
    let mut level: BTreeSet<String> = BTreeSet::from(["(())".to_string()]);
    for size in 3..=v {
        let mut next = BTreeSet::new();
        for code in &level {
            let t = parse_loose(code, size - 1);
            for u in 1..size {
                let mut edges = t.clone();
                edges.push((u, size));
                let grown = Tree::new(size, edges)?;
                next.insert(canonical_form(&grown));
            }
        }
        level = next;
    }
    level.iter().map(|c| tree_from_code(c)).collect()
}

// edge list of a rooted code, without the 3-vertex floor of `Tree::new`
fn parse_loose(code: &str, expect: usize) -> Vec<(usize, usize)> {
    let mut stack = Vec::new();
    let mut edges = Vec::new();
    let mut next = 0;
    for ch in code.chars() {
        if ch == '(' {
            next += 1;
            if let Some(&p) = stack.last() {
                edges.push((p, next));
            }
            stack.push(next);
        } else {
            stack.pop();
        }
    }
    debug_assert_eq!(next, expect);
    edges
}
