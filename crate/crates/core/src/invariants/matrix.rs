//! Integer matrices of plumbing graphs: ranks, determinants, Smith normal form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::PlumbGraph;

pub type Matrix = Vec<Vec<BigInt>>;

pub fn to_big(rows: &[Vec<i64>]) -> Matrix {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

/// Fraction-free elimination; returns (rank, eliminated matrix, row swaps).
fn bareiss(m: &Matrix) -> (usize, Matrix, usize) {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut swaps = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        if p != r {
            a.swap(p, r);
            swaps += 1;
        }
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    (r, a, swaps)
}

pub fn rank(m: &Matrix) -> usize {
    bareiss(m).0
}

/// Determinant of a square matrix (1 for the empty matrix).
pub fn det(m: &Matrix) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let (r, a, swaps) = bareiss(m);
    if r < n {
        return BigInt::zero();
    }
    let d = a[n - 1][n - 1].clone();
    if swaps % 2 == 1 {
        -d
    } else {
        d
    }
}

/// Non-zero invariant factors d₁ | d₂ | … (all positive).
pub fn smith_diagonal(m: &Matrix) -> Vec<BigInt> {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut out = Vec::new();
    for t in 0..rows.min(cols) {
        // smallest non-zero entry of the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        'search: for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero() && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                    if a[i][j].abs().is_one() {
                        break 'search;
                    }
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        for row in a.iter_mut() {
            row.swap(t, bj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..cols {
                    if a[t][j].is_zero() {
                        continue;
                    }
                    let v = &q * &a[t][j];
                    a[i][j] -= v;
                }
                if !a[i][t].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    if row[t].is_zero() {
                        continue;
                    }
                    let v = &q * &row[t];
                    row[j] -= v;
                }
                if !a[t][j].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // move the smallest remainder in row/column t to the pivot
                let mut bi = t;
                let mut bj = t;
                for i in t + 1..rows {
                    if !a[i][t].is_zero() && a[i][t].abs() < a[bi][bj].abs() {
                        (bi, bj) = (i, t);
                    }
                }
                for j in t + 1..cols {
                    if !a[t][j].is_zero() && a[t][j].abs() < a[bi][bj].abs() {
                        (bi, bj) = (t, j);
                    }
                }
                a.swap(t, bi);
                for row in a.iter_mut() {
                    row.swap(t, bj);
                }
                continue;
            }
            if a[t][t].abs().is_one() {
                break;
            }
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&a[i][j] % &a[t][t]).is_zero()));
            match bad {
                Some(i) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        out.push(a[t][t].abs());
    }
    out
}

/// Intersection matrix A over the non-arrowheads and incidence matrix I of the
/// arrows (ordinary arrows first, then dash-arrows).
///
/// Dash-arrows are boundary tori: the "closed" part of the homology is read off
/// A_eff = (A | I_dash), so `corank_a` and `snf` refer to A_eff. Without
/// dash-arrows A_eff = A. The euler number of a dash vertex is taken as 0; it
/// never affects ranks or cokernels of A_eff.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionData {
    pub vertices: Vec<usize>,
    pub n_arrows: usize,
    pub n_dashes: usize,
    pub a: Vec<Vec<i64>>,
    pub i: Vec<Vec<i64>>,
    pub corank_a: usize,
    pub corank_ai: usize,
    /// Non-zero invariant factors of A_eff.
    pub snf: Vec<BigInt>,
    /// |det A| when there are no dash-arrows, otherwise None.
    pub det_abs: Option<BigInt>,
}

impl IntersectionData {
    /// Invariant factors > 1: the torsion of coker A_eff.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.snf.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

pub fn intersection_data(g: &PlumbGraph) -> Result<IntersectionData> {
    let vertices: Vec<usize> = g.vertices().collect();
    let mut pos = vec![usize::MAX; g.nodes.len()];
    for (k, &v) in vertices.iter().enumerate() {
        pos[v] = k;
    }
    let n = vertices.len();
    let mut a = vec![vec![0i64; n]; n];
    for (k, &v) in vertices.iter().enumerate() {
        a[k][k] = match g.euler(v) {
            Some(e) => e,
            None if g.dash_count(v) > 0 => 0,
            None => return Err(Error::pre(format!("missing euler number on {}", g.nodes[v].id))),
        };
    }
    let mut arrow_cols = Vec::new();
    for e in &g.edges {
        let (ia, ib) = (g.is_arrow(e.a), g.is_arrow(e.b));
        match (ia, ib) {
            (false, false) if e.is_loop() => a[pos[e.a]][pos[e.a]] += 2 * e.sign.value(),
            (false, false) => {
                a[pos[e.a]][pos[e.b]] += e.sign.value();
                a[pos[e.b]][pos[e.a]] += e.sign.value();
            }
            (true, true) => return Err(Error::pre("arrow joined directly to an arrow has no supporting vertex")),
            (true, false) => arrow_cols.push(pos[e.b]),
            (false, true) => arrow_cols.push(pos[e.a]),
        }
    }
    let n_arrows = arrow_cols.len();
    let dash_cols: Vec<usize> = g.dashes.iter().map(|d| pos[d.at]).collect();
    let n_dashes = dash_cols.len();
    let cols: Vec<usize> = arrow_cols.iter().chain(&dash_cols).copied().collect();
    let i: Vec<Vec<i64>> = (0..n).map(|r| cols.iter().map(|&c| (c == r) as i64).collect()).collect();

    let with = |extra: &[usize]| -> Matrix {
        (0..n)
            .map(|r| {
                a[r].iter()
                    .copied()
                    .chain(extra.iter().map(|&c| (c == r) as i64))
                    .map(BigInt::from)
                    .collect()
            })
            .collect()
    };
    let a_eff = with(&dash_cols);
    let a_i = with(&cols);
    // ranks read off the invariant factors: elimination with unit pivots is far
    // cheaper than fraction-free elimination on these sparse matrices
    let snf = smith_diagonal(&a_eff);
    let corank_a = n + n_dashes - snf.len();
    let corank_ai = n + cols.len() - smith_diagonal(&a_i).len();
    let det_abs = (n_dashes == 0).then(|| if snf.len() < n { BigInt::zero() } else { snf.iter().product() });
    Ok(IntersectionData { vertices, n_arrows, n_dashes, a, i, corank_a, corank_ai, snf, det_abs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign;

    fn chain(eulers: &[i64]) -> PlumbGraph {
        let mut g = PlumbGraph::new();
        let mut prev = None;
        for (k, &e) in eulers.iter().enumerate() {
            let v = g.add_vertex(format!("v{k}"), Some(e), 0, None);
            if let Some(p) = prev {
                g.add_edge(p, v, Sign::Plus);
            }
            prev = Some(v);
        }
        g
    }

    #[test]
    fn lens_string() {
        let d = intersection_data(&chain(&[-2, -8, -2])).unwrap();
        assert_eq!(d.det_abs, Some(BigInt::from(28)));
        assert_eq!(d.torsion(), vec![BigInt::from(28)]);
        assert_eq!(d.corank_a, 0);
    }

    #[test]
    fn snf_chain_divides() {
        let m = to_big(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let s = smith_diagonal(&m);
        assert_eq!(s, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
        assert_eq!(det(&m).abs(), BigInt::from(144));
    }

    #[test]
    fn loop_counts_twice() {
        let mut g = chain(&[-4]);
        g.add_edge(0, 0, Sign::Minus);
        let d = intersection_data(&g).unwrap();
        assert_eq!(d.a, vec![vec![-6]]);
    }

    #[test]
    fn zero_vertex_has_corank_one() {
        let d = intersection_data(&chain(&[0])).unwrap();
        assert_eq!((d.corank_a, d.snf.len()), (1, 0));
    }
}
