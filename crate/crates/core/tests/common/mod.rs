//! Shared test oracles. Everything here is deliberately independent of the
//! library's computation paths: determinants by cofactor expansion,
//! positive definiteness by explicit leading minors, and short vectors by
//! plain box search.

#![allow(dead_code, clippy::needless_range_loop)] // shared by several test targets

use cubic_lattice::IntMatrix;
use num_bigint::BigInt;
use rand::Rng;

/// Determinant by recursive cofactor expansion along the first row.
pub fn det_cofactor(m: &IntMatrix) -> BigInt {
    let n = m.rows();
    assert_eq!(n, m.cols());
    if n == 0 {
        return BigInt::from(1);
    }
    if n == 1 {
        return m[(0, 0)].clone();
    }
    let mut acc = BigInt::from(0);
    for j in 0..n {
        if m[(0, j)] == BigInt::from(0) {
            continue;
        }
        let minor = minor_matrix(m, 0, j);
        let term = &m[(0, j)] * det_cofactor(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn minor_matrix(m: &IntMatrix, skip_row: usize, skip_col: usize) -> IntMatrix {
    let rows: Vec<Vec<BigInt>> = (0..m.rows())
        .filter(|&i| i != skip_row)
        .map(|i| {
            (0..m.cols())
                .filter(|&j| j != skip_col)
                .map(|j| m[(i, j)].clone())
                .collect()
        })
        .collect();
    IntMatrix::from_rows(rows)
}

/// Sylvester's criterion spelled out: every leading principal minor positive,
/// each minor computed by cofactor expansion.
pub fn posdef_by_minors(g: &[Vec<i64>]) -> bool {
    let n = g.len();
    for k in 1..=n {
        let sub: Vec<Vec<BigInt>> = (0..k)
            .map(|i| (0..k).map(|j| BigInt::from(g[i][j])).collect())
            .collect();
        if det_cofactor(&IntMatrix::from_rows(sub)) <= BigInt::from(0) {
            return false;
        }
    }
    true
}

fn det_i64(g: &[Vec<i64>]) -> i64 {
    let rows: Vec<Vec<BigInt>> = g
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let d = det_cofactor(&IntMatrix::from_rows(rows));
    i64::try_from(&d).expect("test-scale determinant fits i64")
}

fn adjugate_diag(g: &[Vec<i64>], i: usize) -> i64 {
    let n = g.len();
    let rows: Vec<Vec<i64>> = (0..n)
        .filter(|&r| r != i)
        .map(|r| (0..n).filter(|&c| c != i).map(|c| g[r][c]).collect())
        .collect();
    if rows.is_empty() {
        1
    } else {
        det_i64(&rows)
    }
}

/// Per-coordinate box bounds for `Q(x) ≤ bound`: `x_i² ≤ bound · (G⁻¹)_ii`,
/// i.e. the largest `k` with `k² · det ≤ bound · adj_ii`.
pub fn box_bounds(g: &[Vec<i64>], bound: i64) -> Vec<i64> {
    let det = det_i64(g);
    assert!(det > 0, "oracle needs a positive definite form");
    (0..g.len())
        .map(|i| {
            let adj = adjugate_diag(g, i);
            let mut k = 0i64;
            while (k + 1) * (k + 1) * det <= bound * adj {
                k += 1;
            }
            k
        })
        .collect()
}

pub fn box_volume(bounds: &[i64]) -> u64 {
    bounds.iter().map(|&k| (2 * k + 1) as u64).product()
}

fn quad_value(g: &[Vec<i64>], x: &[i64]) -> i64 {
    let n = g.len();
    let mut q = 0i64;
    for i in 0..n {
        for j in 0..n {
            q += g[i][j] * x[i] * x[j];
        }
    }
    q
}

/// Complete box-search enumeration of `{x ≠ 0 : 0 < Q(x) ≤ bound}`, one
/// representative per antipodal pair (first nonzero coordinate positive),
/// sorted by (norm, coordinates). Matches the library's output convention
/// so the comparison is exact set equality.
pub fn brute_force_short_vectors(g: &[Vec<i64>], bound: i64) -> Vec<(Vec<i64>, i64)> {
    let n = g.len();
    let bounds = box_bounds(g, bound);
    let mut out = Vec::new();
    let mut x = vec![0i64; n];
    for i in 0..n {
        x[i] = -bounds[i];
    }
    'outer: loop {
        if let Some(first) = x.iter().find(|&&c| c != 0) {
            if *first > 0 {
                let q = quad_value(g, &x);
                if q > 0 && q <= bound {
                    out.push((x.clone(), q));
                }
            }
        }
        // odometer step
        for i in 0..n {
            if x[i] < bounds[i] {
                x[i] += 1;
                continue 'outer;
            }
            x[i] = -bounds[i];
        }
        break;
    }
    out.sort_by(|(xa, qa), (xb, qb)| (qa, xa).cmp(&(qb, xb)));
    out
}

/// Random positive-definite integer Gram matrix with |entries| ≤ 10,
/// rejection-sampled against the independent minor test, and with a
/// feasible oracle box.
pub fn random_pos_def<R: Rng>(
    rng: &mut R,
    dim: usize,
    bound: i64,
    max_volume: u64,
) -> Vec<Vec<i64>> {
    loop {
        let mut g = vec![vec![0i64; dim]; dim];
        for i in 0..dim {
            g[i][i] = rng.gen_range(1..=10);
            for j in 0..i {
                let v = rng.gen_range(-3..=3);
                g[i][j] = v;
                g[j][i] = v;
            }
        }
        if !posdef_by_minors(&g) {
            continue;
        }
        if box_volume(&box_bounds(&g, bound)) > max_volume {
            continue;
        }
        return g;
    }
}

/// Random integer matrix with entries in [lo, hi].
pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, lo: i64, hi: i64) -> IntMatrix {
    IntMatrix::from_rows(
        (0..rows)
            .map(|_| {
                (0..cols)
                    .map(|_| BigInt::from(rng.gen_range(lo..=hi)))
                    .collect()
            })
            .collect(),
    )
}
