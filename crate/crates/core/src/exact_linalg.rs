//! Exact integer and rational linear algebra.
//!
//! Every routine here is exact: matrices hold arbitrary-precision integers,
//! determinants use Bareiss fraction-free elimination, and the signature
//! routine diagonalizes over the rationals. Gram determinants of the
//! sublattices handled elsewhere in the crate grow multiplicatively, so
//! fixed-width arithmetic is not an option.

#![allow(clippy::needless_range_loop)] // mirrored row/column index math

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

/// Errors from the exact linear algebra routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("expected a symmetric matrix")]
    NotSymmetric,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("rows are linearly dependent (rank {rank} < {rows})")]
    RankDeficient { rank: usize, rows: usize },
}

/// Dense integer matrix with arbitrary-precision entries, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Build from rows. Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in rows {
            assert_eq!(row.len(), ncols, "ragged rows");
            entries.extend(row);
        }
        Self {
            rows: nrows,
            cols: ncols,
            entries,
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in 0..i {
                if self[(i, j)] != self[(j, i)] {
                    return false;
                }
            }
        }
        true
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    /// Rank over the rationals, read off the Smith normal form.
    pub fn rank(&self) -> usize {
        smith_normal_form(self).rank()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] -= q * row[src]
    fn row_sub(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let delta = q * &self[(src, j)];
            self[(dst, j)] -= delta;
        }
    }

    /// col[dst] -= q * col[src]
    fn col_sub(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let delta = q * &self[(i, src)];
            self[(i, dst)] -= delta;
        }
    }

    /// row[dst] += row[src]
    fn row_add(&mut self, dst: usize, src: usize) {
        for j in 0..self.cols {
            let v = self[(src, j)].clone();
            self[(dst, j)] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -self[(r, j)].clone();
            self[(r, j)] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (r, c): (usize, usize)) -> &BigInt {
        &self.entries[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut BigInt {
        &mut self.entries[r * self.cols + c]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self[(i, j)])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Symmetric integer matrix wrapping [`IntMatrix`]; the Gram matrix of a
/// bilinear form on a free module of rank `dim`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GramMatrix(IntMatrix);

impl GramMatrix {
    pub fn new(m: IntMatrix) -> Result<Self, LinalgError> {
        if !m.is_square() {
            return Err(LinalgError::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        if !m.is_symmetric() {
            return Err(LinalgError::NotSymmetric);
        }
        Ok(Self(m))
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self, LinalgError> {
        Self::new(IntMatrix::from_i64_rows(rows))
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    /// Bilinear evaluation xᵀ G y.
    pub fn evaluate(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        assert_eq!(x.len(), self.dim(), "dimension mismatch");
        assert_eq!(y.len(), self.dim(), "dimension mismatch");
        let mut acc = BigInt::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                acc += xi * yj * &self.0[(i, j)];
            }
        }
        acc
    }

    /// Quadratic form value xᵀ G x.
    pub fn norm(&self, x: &[BigInt]) -> BigInt {
        self.evaluate(x, x)
    }

    pub fn det(&self) -> BigInt {
        det_exact(&self.0).expect("Gram matrix is square")
    }

    pub fn signature(&self) -> (usize, usize, usize) {
        signature(&self.0).expect("Gram matrix is symmetric")
    }

    pub fn is_positive_definite(&self) -> bool {
        is_positive_definite(&self.0).expect("Gram matrix is symmetric")
    }

    /// Restrict the form to the sublattice spanned by the rows of `basis`
    /// (coordinates in this form's basis): returns `basis · G · basisᵀ`.
    pub fn restrict(&self, basis: &IntMatrix) -> Result<Self, LinalgError> {
        if basis.cols() != self.dim() {
            return Err(LinalgError::DimensionMismatch {
                expected: self.dim(),
                got: basis.cols(),
            });
        }
        Self::new(basis.mul(&self.0).mul(&basis.transpose()))
    }
}

/// Exact determinant via Bareiss fraction-free elimination.
///
/// Every intermediate division is exact, so the whole computation stays in
/// the integers.
pub fn det_exact(m: &IntMatrix) -> Result<BigInt, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[(r, k)].is_zero()) else {
                return Ok(BigInt::zero());
            };
            a.swap_rows(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                a[(i, j)] = num / &prev;
            }
        }
        prev = a[(k, k)].clone();
    }
    Ok(sign * a[(n - 1, n - 1)].clone())
}

/// Smith normal form `u · a · v = d` with unimodular `u`, `v`.
#[derive(Clone, Debug)]
pub struct SnfResult {
    /// Diagonal matrix of invariant factors (nonnegative, divisibility chain).
    pub d: IntMatrix,
    /// Left transform, |det u| = 1.
    pub u: IntMatrix,
    /// Right transform, |det v| = 1.
    pub v: IntMatrix,
}

impl SnfResult {
    /// Number of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        let n = self.d.rows().min(self.d.cols());
        (0..n).take_while(|&i| !self.d[(i, i)].is_zero()).count()
    }

    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.rank()).map(|i| self.d[(i, i)].clone()).collect()
    }

    /// True when every invariant factor is 1, i.e. the row lattice is
    /// saturated of full row rank.
    pub fn all_invariant_factors_one(&self, expected_rank: usize) -> bool {
        let facs = self.invariant_factors();
        facs.len() == expected_rank && facs.iter().all(|f| f.is_one())
    }
}

/// Quotient of `a / b` rounded to the nearest integer (ties may go either
/// way; all we need is |a - q b| ≤ |b| / 2).
pub(crate) fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = num_integer::Integer::div_rem(a, b);
    if (BigInt::from(2) * &r).magnitude() > b.magnitude() {
        if r.sign() == b.sign() {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

fn smallest_nonzero_entry(a: &IntMatrix, from: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in from..a.rows() {
        for j in from..a.cols() {
            if a[(i, j)].is_zero() {
                continue;
            }
            match best {
                None => best = Some((i, j)),
                Some((bi, bj)) => {
                    if a[(i, j)].magnitude() < a[(bi, bj)].magnitude() {
                        best = Some((i, j));
                    }
                }
            }
        }
    }
    best
}

/// Smith normal form by elementary row/column reduction with pivot-size
/// control: the smallest remaining entry is moved to the pivot position
/// before each round.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let (rows, cols) = (m.rows(), m.cols());
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let n = rows.min(cols);
    let mut t = 0;
    while t < n {
        let Some((pi, pj)) = smallest_nonzero_entry(&d, t) else {
            break;
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        // Clear the pivot row and column; any nonzero remainder becomes a
        // strictly smaller pivot, so this loop terminates.
        loop {
            for i in t + 1..rows {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = div_round(&d[(i, t)], &d[(t, t)]);
                if !q.is_zero() {
                    d.row_sub(i, t, &q);
                    u.row_sub(i, t, &q);
                }
            }
            if let Some(i) = (t + 1..rows).find(|&i| !d[(i, t)].is_zero()) {
                d.swap_rows(t, i);
                u.swap_rows(t, i);
                continue;
            }
            for j in t + 1..cols {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = div_round(&d[(t, j)], &d[(t, t)]);
                if !q.is_zero() {
                    d.col_sub(j, t, &q);
                    v.col_sub(j, t, &q);
                }
            }
            if let Some(j) = (t + 1..cols).find(|&j| !d[(t, j)].is_zero()) {
                d.swap_cols(t, j);
                v.swap_cols(t, j);
                continue;
            }
            break;
        }

        // Enforce the divisibility chain: fold any non-multiple into the
        // pivot row and redo this pivot.
        let mut redo = false;
        'scan: for i in t + 1..rows {
            for j in t + 1..cols {
                if !(&d[(i, j)] % &d[(t, t)]).is_zero() {
                    d.row_add(t, i);
                    u.row_add(t, i);
                    redo = true;
                    break 'scan;
                }
            }
        }
        if !redo {
            t += 1;
        }
    }
    for i in 0..n {
        if d[(i, i)].is_negative() {
            d.negate_row(i);
            u.negate_row(i);
        }
    }
    SnfResult { d, u, v }
}

/// Basis of the integer kernel `{x : m · x = 0}`.
///
/// The returned basis is saturated: every integer kernel element is an
/// integer combination of the basis vectors. The vectors are the trailing
/// columns of the right Smith transform, hence columns of a unimodular
/// matrix.
pub fn integer_kernel(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(m);
    let rank = snf.rank();
    let cols = m.cols();
    (rank..cols)
        .map(|j| (0..cols).map(|i| snf.v[(i, j)].clone()).collect())
        .collect()
}

/// Signature (positives, negatives, zeros) of a symmetric integer matrix by
/// exact rational congruence diagonalization.
pub fn signature(g: &IntMatrix) -> Result<(usize, usize, usize), LinalgError> {
    if !g.is_square() {
        return Err(LinalgError::NotSquare {
            rows: g.rows(),
            cols: g.cols(),
        });
    }
    if !g.is_symmetric() {
        return Err(LinalgError::NotSymmetric);
    }
    let n = g.rows();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigRational::from_integer(g[(i, j)].clone()))
                .collect()
        })
        .collect();
    let (mut pos, mut neg, mut zeros) = (0usize, 0usize, 0usize);
    let mut k = 0;
    while k < n {
        if a[k][k].is_zero() {
            if let Some(l) = (k + 1..n).find(|&l| !a[l][l].is_zero()) {
                swap_sym(&mut a, k, l);
            } else if let Some((i, j)) = first_offdiag_nonzero(&a, k) {
                // All remaining diagonal entries vanish; fold one leg of the
                // hyperbolic pair onto the diagonal: row/col i += row/col j
                // makes a[i][i] = 2·a[i][j] ≠ 0.
                swap_sym(&mut a, k, i);
                let j = if j == k { i } else { j };
                for c in 0..n {
                    let t = a[j][c].clone();
                    a[k][c] += t;
                }
                for r in 0..n {
                    let t = a[r][j].clone();
                    a[r][k] += t;
                }
            } else {
                zeros += n - k;
                break;
            }
        }
        let pivot = a[k][k].clone();
        if pivot.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &pivot;
            for c in k..n {
                let t = &f * &a[k][c];
                a[i][c] -= t;
            }
            for r in k..n {
                let t = &f * &a[r][k];
                a[r][i] -= t;
            }
        }
        k += 1;
    }
    Ok((pos, neg, zeros))
}

fn swap_sym(a: &mut [Vec<BigRational>], i: usize, j: usize) {
    if i == j {
        return;
    }
    a.swap(i, j);
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

fn first_offdiag_nonzero(a: &[Vec<BigRational>], from: usize) -> Option<(usize, usize)> {
    let n = a.len();
    for i in from..n {
        for j in i + 1..n {
            if !a[i][j].is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}

/// Sylvester's criterion, fraction-free: a symmetric matrix is positive
/// definite iff all leading principal minors are positive. In Bareiss
/// elimination without row swaps the k-th pivot equals the k-th leading
/// principal minor, so one elimination pass reads off all of them.
pub fn is_positive_definite(g: &IntMatrix) -> Result<bool, LinalgError> {
    if !g.is_square() {
        return Err(LinalgError::NotSquare {
            rows: g.rows(),
            cols: g.cols(),
        });
    }
    if !g.is_symmetric() {
        return Err(LinalgError::NotSymmetric);
    }
    let n = g.rows();
    if n == 0 {
        return Ok(true);
    }
    let mut a = g.clone();
    let mut prev = BigInt::one();
    for k in 0..n {
        if !a[(k, k)].is_positive() {
            return Ok(false);
        }
        if k == n - 1 {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                a[(i, j)] = num / &prev;
            }
        }
        prev = a[(k, k)].clone();
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn det_diagonal() {
        let m = IntMatrix::from_i64_rows(&[&[3, 0, 0], &[0, 4, 0], &[0, 0, 6]]);
        assert_eq!(det_exact(&m).unwrap(), bi(72));
    }

    #[test]
    fn det_k14_block() {
        let m = IntMatrix::from_i64_rows(&[&[3, 4], &[4, 10]]);
        assert_eq!(det_exact(&m).unwrap(), bi(14));
    }

    #[test]
    fn det_case3_witness() {
        // cofactor expansion by hand: 3(45-0) - 1(9-0) + 1(0-5) = 121
        let m = IntMatrix::from_i64_rows(&[&[3, 1, 1], &[1, 5, 0], &[1, 0, 9]]);
        assert_eq!(det_exact(&m).unwrap(), bi(121));
    }

    #[test]
    fn det_rejects_non_square() {
        let m = IntMatrix::from_i64_rows(&[&[1, 2, 3]]);
        assert!(matches!(
            det_exact(&m),
            Err(LinalgError::NotSquare { rows: 1, cols: 3 })
        ));
    }

    #[test]
    fn det_with_zero_pivot() {
        let m = IntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(det_exact(&m).unwrap(), bi(-1));
        let singular = IntMatrix::from_i64_rows(&[&[0, 0], &[1, 1]]);
        assert_eq!(det_exact(&singular).unwrap(), bi(0));
    }

    fn assert_snf_consistent(a: &IntMatrix) {
        let snf = smith_normal_form(a);
        assert_eq!(snf.u.mul(a).mul(&snf.v), snf.d, "u·a·v != d");
        assert_eq!(det_exact(&snf.u).unwrap().magnitude(), bi(1).magnitude());
        assert_eq!(det_exact(&snf.v).unwrap().magnitude(), bi(1).magnitude());
        let facs = snf.invariant_factors();
        for w in facs.windows(2) {
            assert!((&w[1] % &w[0]).is_zero(), "divisibility chain broken");
        }
        for f in &facs {
            assert!(f.is_positive());
        }
    }

    #[test]
    fn snf_identity() {
        let m = IntMatrix::identity(3);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.d, IntMatrix::identity(3));
        assert_snf_consistent(&m);
    }

    #[test]
    fn snf_already_diagonal() {
        let m = IntMatrix::from_i64_rows(&[&[2, 0], &[0, 4]]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.d, IntMatrix::from_i64_rows(&[&[2, 0], &[0, 4]]));
        assert_snf_consistent(&m);
    }

    #[test]
    fn snf_reduction_by_hand() {
        // row/column reduce by hand: invariant factors 2, 4; |det| preserved
        let m = IntMatrix::from_i64_rows(&[&[2, 4], &[6, 8]]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.invariant_factors(), vec![bi(2), bi(4)]);
        assert_snf_consistent(&m);
        assert_eq!(
            det_exact(&snf.d).unwrap().magnitude(),
            det_exact(&m).unwrap().magnitude()
        );
    }

    #[test]
    fn snf_rectangular_and_zero() {
        assert_snf_consistent(&IntMatrix::from_i64_rows(&[&[1, 1, 1]]));
        assert_snf_consistent(&IntMatrix::zeros(2, 3));
        assert_snf_consistent(&IntMatrix::from_i64_rows(&[&[6, 10], &[15, 4], &[0, 7]]));
    }

    #[test]
    fn kernel_of_sum_map() {
        let m = IntMatrix::from_i64_rows(&[&[1, 1, 1]]);
        let ker = integer_kernel(&m);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            let s: BigInt = v.iter().sum();
            assert!(s.is_zero());
        }
        // saturation: stacked kernel basis has unit invariant factors
        let stacked = IntMatrix::from_rows(ker);
        assert!(smith_normal_form(&stacked).all_invariant_factors_one(2));
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        assert!(integer_kernel(&IntMatrix::identity(4)).is_empty());
    }

    #[test]
    fn kernel_is_saturated_not_just_independent() {
        // x + y even-sum map: kernel of [[2,2]] is spanned by (1,-1), not (2,-2)
        let m = IntMatrix::from_i64_rows(&[&[2, 2]]);
        let ker = integer_kernel(&m);
        assert_eq!(ker.len(), 1);
        let g = num_integer::gcd(ker[0][0].clone(), ker[0][1].clone());
        assert!(g.is_one());
    }

    #[test]
    fn signature_positive_diagonal() {
        let m = IntMatrix::from_i64_rows(&[&[3, 0], &[0, 2]]);
        assert_eq!(signature(&m).unwrap(), (2, 0, 0));
    }

    #[test]
    fn signature_hyperbolic_plane() {
        let m = IntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(signature(&m).unwrap(), (1, 1, 0));
    }

    #[test]
    fn signature_with_zeros_and_mixed() {
        let m = IntMatrix::from_i64_rows(&[&[1, 0, 0], &[0, -2, 0], &[0, 0, 0]]);
        assert_eq!(signature(&m).unwrap(), (1, 1, 1));
        let zero = IntMatrix::zeros(3, 3);
        assert_eq!(signature(&zero).unwrap(), (0, 0, 3));
    }

    #[test]
    fn signature_rejects_non_symmetric() {
        let m = IntMatrix::from_i64_rows(&[&[1, 2], &[3, 4]]);
        assert_eq!(signature(&m), Err(LinalgError::NotSymmetric));
    }

    #[test]
    fn positive_definite_cases() {
        let k2 = IntMatrix::from_i64_rows(&[&[3, 1], &[1, 1]]);
        assert!(is_positive_definite(&k2).unwrap());
        let u = IntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert!(!is_positive_definite(&u).unwrap());
        let case1 = IntMatrix::from_i64_rows(&[&[3, 0, 0], &[0, 4, 0], &[0, 0, 6]]);
        assert!(is_positive_definite(&case1).unwrap());
        let semidefinite = IntMatrix::from_i64_rows(&[&[1, 1], &[1, 1]]);
        assert!(!is_positive_definite(&semidefinite).unwrap());
    }

    #[test]
    fn gram_matrix_rejects_asymmetry() {
        assert!(GramMatrix::from_i64_rows(&[&[1, 2], &[3, 1]]).is_err());
    }

    #[test]
    fn gram_evaluate_matches_matrix_product() {
        let g = GramMatrix::from_i64_rows(&[&[2, 1], &[1, 2]]).unwrap();
        let x = [bi(1), bi(-1)];
        assert_eq!(g.norm(&x), bi(2));
        let y = [bi(3), bi(0)];
        assert_eq!(g.evaluate(&x, &y), bi(3));
    }

    #[test]
    fn div_round_is_nearest() {
        assert_eq!(div_round(&bi(7), &bi(3)), bi(2));
        assert_eq!(div_round(&bi(8), &bi(3)), bi(3));
        assert_eq!(div_round(&bi(-8), &bi(3)), bi(-3));
        assert_eq!(div_round(&bi(8), &bi(-3)), bi(-3));
        for a in -20i64..=20 {
            for b in [-7i64, -3, -2, -1, 1, 2, 3, 7] {
                let q = div_round(&bi(a), &bi(b));
                let r = bi(a) - &q * bi(b);
                assert!((bi(2) * &r).magnitude() <= bi(b).magnitude(), "{a}/{b}");
            }
        }
    }
}
