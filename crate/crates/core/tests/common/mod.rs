//! Independent reference implementations. Nothing here calls into the
//! crate's algebra or tree code; the point is to disagree loudly if either
//! side is wrong.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

// ---------------------------------------------------------------------------
// Determinants and characteristic polynomials over Z

/// Fraction-free Gaussian elimination.
pub fn bareiss_det(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    a[n - 1][n - 1].clone() * sign
}

/// `det(xI - M)` by evaluating at `x = 0..=n` and interpolating (Newton
/// form, expanded). Constant term first.
pub fn charpoly_by_interpolation(m: &[Vec<i64>]) -> Vec<BigInt> {
    let n = m.len();
    let xs: Vec<i64> = (0..=n as i64).collect();
    let ys: Vec<BigRational> = xs
        .iter()
        .map(|&x| {
            let shifted: Vec<Vec<i64>> = (0..n)
                .map(|i| (0..n).map(|j| if i == j { x - m[i][j] } else { -m[i][j] }).collect())
                .collect();
            BigRational::from_integer(bareiss_det(&shifted))
        })
        .collect();
    // divided differences
    let mut coef = ys.clone();
    for level in 1..=n {
        for i in (level..=n).rev() {
            let dx = BigRational::from_integer(BigInt::from(xs[i] - xs[i - level]));
            coef[i] = (&coef[i] - &coef[i - 1]) / dx;
        }
    }
    // expand c0 + c1 (x - x0) + c2 (x - x0)(x - x1) + ...
    let mut poly = vec![BigRational::zero(); n + 1];
    let mut basis = vec![BigRational::one()];
    for (k, c) in coef.iter().enumerate() {
        for (d, b) in basis.iter().enumerate() {
            poly[d] += c * b;
        }
        let mut next = vec![BigRational::zero(); basis.len() + 1];
        for (d, b) in basis.iter().enumerate() {
            next[d + 1] += b;
            next[d] -= b * BigRational::from_integer(BigInt::from(xs[k]));
        }
        basis = next;
    }
    poly.into_iter()
        .map(|c| {
            assert!(c.is_integer(), "charpoly of an integer matrix has integer coefficients");
            c.to_integer()
        })
        .collect()
}

pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let m = b[0].len();
    (0..n)
        .map(|i| (0..m).map(|j| (0..b.len()).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

// ---------------------------------------------------------------------------
// Linear algebra over Z_p

pub fn rank_mod(rows: &[Vec<i64>], p: i64) -> usize {
    let mut a: Vec<Vec<i64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(p)).collect())
        .collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..a.len()).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = inv_mod(a[rank][c], p);
        for x in a[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..a.len() {
            if r != rank && a[r][c] != 0 {
                let f = a[r][c];
                for k in 0..cols {
                    a[r][k] = (a[r][k] - f * a[rank][k]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn inv_mod(x: i64, p: i64) -> i64 {
    // Fermat
    let mut base = x.rem_euclid(p);
    let mut e = p - 2;
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// Dimension of `{X : XM = MX}` over `Z_p`.
pub fn commutant_dimension(m: &[Vec<i64>], p: i64) -> usize {
    let n = m.len();
    // unknown X[a][b] at column a*n+b; equation (i,j): Σ_k X[i][k] M[k][j] - M[i][k] X[k][j]
    let mut eqs = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut row = vec![0i64; n * n];
            for k in 0..n {
                row[i * n + k] += m[k][j];
                row[k * n + j] -= m[i][k];
            }
            eqs.push(row);
        }
    }
    n * n - rank_mod(&eqs, p)
}

/// Commutant dimension predicted by invariant-factor degrees listed in
/// divisibility order (smallest first).
pub fn commutant_dimension_from_degrees(degrees: &[usize]) -> usize {
    let k = degrees.len();
    degrees
        .iter()
        .enumerate()
        .map(|(i, d)| (2 * (k - 1 - i) + 1) * d)
        .sum()
}

/// Monic minimal polynomial over `Z_p` by linear dependence among
/// `I, M, M^2, ...`. Constant term first.
pub fn minimal_polynomial_mod(m: &[Vec<i64>], p: i64) -> Vec<i64> {
    let n = m.len();
    let flat = |x: &Vec<Vec<i64>>| -> Vec<i64> { x.iter().flatten().map(|v| v.rem_euclid(p)).collect() };
    let mut powers = vec![flat(&(0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect())];
    let mut cur: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect();
    for d in 1..=n {
        cur = mat_mul(&cur, m)
            .into_iter()
            .map(|r| r.into_iter().map(|v| v.rem_euclid(p)).collect())
            .collect();
        let target = flat(&cur);
        // solve Σ c_k P_k = target for k < d
        if let Some(c) = solve_mod(&powers, &target, p) {
            let mut poly: Vec<i64> = c.iter().map(|v| (-v).rem_euclid(p)).collect();
            poly.push(1);
            return poly;
        }
        powers.push(target);
        let _ = d;
    }
    unreachable!("Cayley-Hamilton bounds the degree by n")
}

/// Solves `Σ c_k v_k = t` over `Z_p`, if possible.
fn solve_mod(vs: &[Vec<i64>], t: &[i64], p: i64) -> Option<Vec<i64>> {
    let k = vs.len();
    let len = t.len();
    // augmented matrix with one row per coordinate
    let mut a: Vec<Vec<i64>> = (0..len)
        .map(|r| {
            let mut row: Vec<i64> = vs.iter().map(|v| v[r]).collect();
            row.push(t[r]);
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..k {
        let Some(piv) = (rank..len).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = inv_mod(a[rank][c], p);
        for x in a[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..len {
            if r != rank && a[r][c] != 0 {
                let f = a[r][c];
                for q in 0..=k {
                    a[r][q] = (a[r][q] - f * a[rank][q]).rem_euclid(p);
                }
            }
        }
        pivots.push(c);
        rank += 1;
    }
    if (rank..len).any(|r| a[r][k] != 0) {
        return None;
    }
    let mut sol = vec![0; k];
    for (r, &c) in pivots.iter().enumerate() {
        sol[c] = a[r][k];
    }
    Some(sol)
}

pub fn poly_mod(coeffs: &[BigInt], p: i64) -> Vec<i64> {
    let pb = BigInt::from(p);
    let mut v: Vec<i64> = coeffs
        .iter()
        .map(|c| {
            let r = ((c % &pb) + &pb) % &pb;
            i64::try_from(r).unwrap()
        })
        .collect();
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
    v
}

// ---------------------------------------------------------------------------
// Trees, from scratch

/// Path `u = x_0, x_1, ..., x_k = v` by BFS over the edge list.
pub fn bfs_path(vertex_count: usize, edges: &[(usize, usize)], u: usize, v: usize) -> Vec<usize> {
    let mut adj = vec![Vec::new(); vertex_count + 1];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut prev = vec![0; vertex_count + 1];
    let mut seen = vec![false; vertex_count + 1];
    let mut q = VecDeque::from([u]);
    seen[u] = true;
    while let Some(x) = q.pop_front() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                prev[y] = x;
                q.push_back(y);
            }
        }
    }
    let mut path = vec![v];
    let mut x = v;
    while x != u {
        x = prev[x];
        path.push(x);
    }
    path.reverse();
    path
}

/// Oriented edge `i` as `(tail, head)`; `reversed[i]` flips smaller→larger.
pub fn oriented(edges: &[(usize, usize)], reversed: &[bool], i: usize) -> (usize, usize) {
    let (a, b) = edges[i];
    let (lo, hi) = (a.min(b), a.max(b));
    if reversed[i] {
        (hi, lo)
    } else {
        (lo, hi)
    }
}

/// Signed coordinates of the path from `u` to `v`.
pub fn signed_path(
    vertex_count: usize,
    edges: &[(usize, usize)],
    reversed: &[bool],
    u: usize,
    v: usize,
) -> Vec<i64> {
    let mut w = vec![0; edges.len()];
    let path = bfs_path(vertex_count, edges, u, v);
    for step in path.windows(2) {
        let (x, y) = (step[0], step[1]);
        let k = (0..edges.len())
            .find(|&k| {
                let (a, b) = edges[k];
                (a, b) == (x, y) || (a, b) == (y, x)
            })
            .expect("consecutive path vertices are adjacent");
        let (t, _) = oriented(edges, reversed, k);
        w[k] += if t == x { 1 } else { -1 };
    }
    w
}

/// Oriented transition matrix straight from the definition; `image[u-1] = f(u)`.
pub fn oriented_matrix_oracle(
    vertex_count: usize,
    edges: &[(usize, usize)],
    reversed: &[bool],
    image: &[usize],
) -> Vec<Vec<i64>> {
    (0..edges.len())
        .map(|i| {
            let (t, h) = oriented(edges, reversed, i);
            signed_path(vertex_count, edges, reversed, image[t - 1], image[h - 1])
        })
        .collect()
}

/// Textbook Prüfer decoding with a linear scan for the smallest leaf.
pub fn prufer_decode(code: &[usize], v: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; v + 1];
    for &c in code {
        degree[c] += 1;
    }
    let mut edges = Vec::new();
    for &c in code {
        let leaf = (1..=v).find(|&x| degree[x] == 1).unwrap();
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (1..=v).filter(|&x| degree[x] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// All Prüfer codes of length `v - 2`.
pub fn all_prufer_codes(v: usize) -> Vec<Vec<usize>> {
    let len = v - 2;
    let total = v.pow(len as u32);
    (0..total)
        .map(|mut k| {
            let mut code = vec![0; len];
            for c in code.iter_mut() {
                *c = k % v + 1;
                k /= v;
            }
            code
        })
        .collect()
}

fn adjacency(v: usize, edges: &[(usize, usize)]) -> Vec<BTreeSet<usize>> {
    let mut adj = vec![BTreeSet::new(); v + 1];
    for &(a, b) in edges {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    adj
}

/// Backtracking isomorphism test: vertex 1 of the first tree is sent to
/// every candidate, then vertices follow in BFS order, each constrained to
/// a neighbour of its parent's image with equal degree.
pub fn isomorphic(v: usize, e1: &[(usize, usize)], e2: &[(usize, usize)]) -> bool {
    let a1 = adjacency(v, e1);
    let a2 = adjacency(v, e2);
    let mut d1: Vec<usize> = (1..=v).map(|x| a1[x].len()).collect();
    let mut d2: Vec<usize> = (1..=v).map(|x| a2[x].len()).collect();
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return false;
    }
    // BFS order with parents
    let mut order = vec![1];
    let mut parent = BTreeMap::new();
    let mut k = 0;
    while k < order.len() {
        let x = order[k];
        for &y in &a1[x] {
            if y != 1 && !parent.contains_key(&y) {
                parent.insert(y, x);
                order.push(y);
            }
        }
        k += 1;
    }
    fn go(
        k: usize,
        order: &[usize],
        parent: &BTreeMap<usize, usize>,
        a1: &[BTreeSet<usize>],
        a2: &[BTreeSet<usize>],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let x = order[k];
        let candidates: Vec<usize> = match parent.get(&x) {
            Some(&px) => a2[map[px]].iter().copied().collect(),
            None => (1..a2.len()).collect(),
        };
        for y in candidates {
            if used[y] || a2[y].len() != a1[x].len() {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if go(k + 1, order, parent, a1, a2, map, used) {
                return true;
            }
            used[y] = false;
        }
        false
    }
    let mut map = vec![0; v + 1];
    let mut used = vec![false; v + 1];
    go(0, &order, &parent, &a1, &a2, &mut map, &mut used)
}

/// Number of isomorphism classes among all labeled trees on `v` vertices.
pub fn brute_force_tree_classes(v: usize) -> Vec<Vec<(usize, usize)>> {
    let mut reps: Vec<Vec<(usize, usize)>> = Vec::new();
    for code in all_prufer_codes(v) {
        let e = prufer_decode(&code, v);
        if !reps.iter().any(|r| isomorphic(v, r, &e)) {
            reps.push(e);
        }
    }
    reps
}

/// Residues of `j, 2j, 3j, ...` mod `m`, stepping until `0` recurs.
pub fn orbit_residues(j: usize, m: usize) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    let mut x = j % m;
    while x != 0 {
        out.insert(x);
        x = (x + j) % m;
    }
    out
}

pub fn is_odd(x: &BigInt) -> bool {
    (x % 2i32).abs() == BigInt::one()
}
