//! Positive-definite quadratic form analysis: complete short-vector
//! enumeration, representation tests, Lagrange reduction of binary forms,
//! and the search for the two excluded rank-2 forms
//! `K2 = [[3,1],[1,1]]` and `K6 = [[3,0],[0,2]]` through `h²`.
//!
//! The enumeration is Fincke–Pohst over an exact rational
//! completion-of-squares decomposition. All interval endpoints are computed
//! with integer predicates, never floating point, so the "no vector of norm
//! ≤ 2" certificates are exact.

#![allow(clippy::needless_range_loop)] // mirrored row/column index math

use crate::exact_linalg::{div_round, GramMatrix};
use crate::lattice_core::EmbeddedSublattice;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuadFormError {
    #[error("form is not positive definite")]
    NotPositiveDefinite,
    #[error("form has rank zero")]
    ZeroRank,
    #[error("expected a binary (2x2) form, got dimension {dim}")]
    NotBinary { dim: usize },
    #[error("h² is not contained in the sublattice")]
    HSquaredAbsent,
}

/// A short vector: coordinates in the form's basis plus its norm. Only one
/// representative per antipodal pair `{v, -v}` is kept, normalized so the
/// first nonzero coordinate is positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortVector {
    pub coords: Vec<BigInt>,
    pub norm: BigInt,
}

/// Complete list of the nonzero vectors `v` with `0 < vᵀGv ≤ bound`, one per
/// antipodal pair, sorted by (norm, coordinates).
#[derive(Clone, Debug)]
pub struct ShortVectorList {
    pub bound: BigInt,
    pub vectors: Vec<ShortVector>,
}

impl ShortVectorList {
    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn min_norm(&self) -> Option<&BigInt> {
        self.vectors.iter().map(|v| &v.norm).min()
    }

    pub fn contains_norm(&self, n: &BigInt) -> bool {
        self.vectors.iter().any(|v| &v.norm == n)
    }
}

/// Rational completion of squares of a positive-definite form:
/// `Q(x) = Σ_i c_i (x_i + Σ_{j>i} u_ij x_j)²` with all `c_i > 0`.
struct Completion {
    c: Vec<BigRational>,
    u: Vec<Vec<BigRational>>,
}

fn complete_squares(g: &GramMatrix) -> Completion {
    let n = g.dim();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigRational::from_integer(g.matrix()[(i, j)].clone()))
                .collect()
        })
        .collect();
    let mut c = Vec::with_capacity(n);
    let mut u = vec![vec![BigRational::zero(); n]; n];
    for i in 0..n {
        let ci = a[i][i].clone();
        for j in i + 1..n {
            u[i][j] = &a[i][j] / &ci;
        }
        for k in i + 1..n {
            for l in i + 1..n {
                let t = &u[i][k] * &a[i][l];
                a[k][l] -= t;
            }
        }
        c.push(ci);
    }
    Completion { c, u }
}

/// Floor of the integer square root of a nonnegative rational.
fn isqrt_floor(rho: &BigRational) -> BigInt {
    debug_assert!(!rho.is_negative());
    rho.numer().div_floor(rho.denom()).sqrt()
}

/// Largest integer `x` with `x ≤ m + √ρ`, `ρ ≥ 0`, computed exactly.
fn floor_plus_sqrt(m: &BigRational, rho: &BigRational) -> BigInt {
    let holds = |x: &BigInt| {
        let t = BigRational::from_integer(x.clone()) - m;
        !t.is_positive() || &(&t * &t) <= rho
    };
    // upper start: m + √ρ < floor(m) + isqrt(ρ) + 2
    let mut x = m.floor().to_integer() + isqrt_floor(rho) + 1;
    while !holds(&x) {
        x -= 1;
    }
    x
}

/// Smallest integer `x` with `x ≥ m - √ρ`, `ρ ≥ 0`, computed exactly.
fn ceil_minus_sqrt(m: &BigRational, rho: &BigRational) -> BigInt {
    let holds = |x: &BigInt| {
        let t = m - BigRational::from_integer(x.clone());
        !t.is_positive() || &(&t * &t) <= rho
    };
    let mut x = m.ceil().to_integer() - isqrt_floor(rho) - 1;
    while !holds(&x) {
        x += 1;
    }
    x
}

fn enumerate_level(
    comp: &Completion,
    level: usize,
    coords: &mut Vec<BigInt>,
    used: &BigRational,
    bound: &BigRational,
    out: &mut Vec<Vec<BigInt>>,
) {
    let s: BigRational = (level + 1..coords.len())
        .map(|j| &comp.u[level][j] * BigRational::from_integer(coords[j].clone()))
        .sum();
    let budget = bound - used;
    let rho = &budget / &comp.c[level];
    let center = -&s;
    let lo = ceil_minus_sqrt(&center, &rho);
    let hi = floor_plus_sqrt(&center, &rho);
    let mut xi = lo;
    while xi <= hi {
        coords[level] = xi.clone();
        let t = BigRational::from_integer(xi.clone()) + &s;
        let term = &comp.c[level] * &t * &t;
        let next_used = used + term;
        if level == 0 {
            out.push(coords.clone());
        } else {
            enumerate_level(comp, level - 1, coords, &next_used, bound, out);
        }
        xi += 1;
    }
}

fn first_nonzero_is_negative(v: &[BigInt]) -> bool {
    v.iter()
        .find(|c| !c.is_zero())
        .is_some_and(|c| c.is_negative())
}

/// Complete Fincke–Pohst enumeration of `{v ≠ 0 : vᵀGv ≤ bound}` up to sign.
pub fn short_vectors(g: &GramMatrix, bound: &BigInt) -> Result<ShortVectorList, QuadFormError> {
    if !g.is_positive_definite() {
        return Err(QuadFormError::NotPositiveDefinite);
    }
    let n = g.dim();
    let mut vectors = Vec::new();
    if n > 0 && bound.is_positive() {
        let comp = complete_squares(g);
        let mut coords = vec![BigInt::zero(); n];
        let mut raw = Vec::new();
        enumerate_level(
            &comp,
            n - 1,
            &mut coords,
            &BigRational::zero(),
            &BigRational::from_integer(bound.clone()),
            &mut raw,
        );
        for v in raw {
            if v.iter().all(Zero::is_zero) {
                continue;
            }
            // one representative per antipodal pair
            if first_nonzero_is_negative(&v) {
                continue;
            }
            let norm = g.norm(&v);
            debug_assert!(norm.is_positive() && &norm <= bound);
            vectors.push(ShortVector { coords: v, norm });
        }
        vectors.sort_by(|a, b| (&a.norm, &a.coords).cmp(&(&b.norm, &b.coords)));
    }
    Ok(ShortVectorList {
        bound: bound.clone(),
        vectors,
    })
}

/// Minimum of `vᵀGv` over nonzero integer vectors. A unit vector attains the
/// smallest diagonal entry, so enumerating up to that bound is complete.
pub fn min_norm(g: &GramMatrix) -> Result<BigInt, QuadFormError> {
    if g.dim() == 0 {
        return Err(QuadFormError::ZeroRank);
    }
    if !g.is_positive_definite() {
        return Err(QuadFormError::NotPositiveDefinite);
    }
    let smallest_diag = (0..g.dim())
        .map(|i| g.matrix()[(i, i)].clone())
        .min()
        .expect("dimension is positive");
    let list = short_vectors(g, &smallest_diag)?;
    Ok(list
        .min_norm()
        .expect("a unit vector attains the smallest diagonal entry")
        .clone())
}

/// True iff some nonzero vector has `vᵀGv = n` exactly.
pub fn represents(g: &GramMatrix, n: &BigInt) -> Result<bool, QuadFormError> {
    if !g.is_positive_definite() {
        return Err(QuadFormError::NotPositiveDefinite);
    }
    Ok(short_vectors(g, n)?.contains_norm(n))
}

/// Lagrange reduction of a positive-definite binary form to the canonical
/// representative with `0 ≤ 2b ≤ a ≤ c`. Two positive-definite binary forms
/// are isometric iff they reduce to the same matrix.
pub fn reduce_binary(g: &GramMatrix) -> Result<GramMatrix, QuadFormError> {
    if g.dim() != 2 {
        return Err(QuadFormError::NotBinary { dim: g.dim() });
    }
    if !g.is_positive_definite() {
        return Err(QuadFormError::NotPositiveDefinite);
    }
    let mut a = g.matrix()[(0, 0)].clone();
    let mut b = g.matrix()[(0, 1)].clone();
    let mut c = g.matrix()[(1, 1)].clone();
    loop {
        if c < a {
            std::mem::swap(&mut a, &mut c);
        }
        if (BigInt::from(2) * b.abs()) > a {
            // translate the second basis vector by -m times the first
            let m = div_round(&b, &a);
            let new_c = &c - BigInt::from(2) * &m * &b + &m * &m * &a;
            b -= &m * &a;
            c = new_c;
            continue;
        }
        break;
    }
    b = b.abs();
    let rows = vec![vec![a.clone(), b.clone()], vec![b, c]];
    Ok(GramMatrix::new(crate::exact_linalg::IntMatrix::from_rows(rows)).expect("symmetric"))
}

/// The excluded form `K2`.
pub fn k2_gram() -> GramMatrix {
    GramMatrix::from_i64_rows(&[&[3, 1], &[1, 1]]).expect("constant")
}

/// The excluded form `K6`.
pub fn k6_gram() -> GramMatrix {
    GramMatrix::from_i64_rows(&[&[3, 0], &[0, 2]]).expect("constant")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ObstructionKind {
    K2,
    K6,
}

impl ObstructionKind {
    pub fn name(self) -> &'static str {
        match self {
            ObstructionKind::K2 => "K2",
            ObstructionKind::K6 => "K6",
        }
    }
}

/// A rank-2 sublattice `⟨h², r⟩ ⊂ M` isometric to `K2` or `K6`.
#[derive(Clone, Debug)]
pub struct Obstruction {
    pub kind: ObstructionKind,
    /// Coordinates of `r` in the basis of `M`, normalized so `(h² . r) ≥ 0`.
    pub r_coords: Vec<BigInt>,
    /// Gram matrix of `⟨h², r⟩` in the basis `(h², r)`.
    pub gram: GramMatrix,
}

/// Literal search for a sublattice `h² ∈ K ⊂ M` with `K ≅ K2` or `K ≅ K6`.
///
/// Both excluded forms contain `h²` together with a vector of norm ≤ 2 that
/// completes it to a basis, so it suffices to scan the short vectors of `M`
/// up to norm 2, form `⟨h², r⟩` for each, and compare Lagrange-reduced
/// forms. This deliberately does not use the represents-2 shortcut; the two
/// routes cross-check each other in the tests.
pub fn find_k2_or_k6(m: &EmbeddedSublattice) -> Result<Option<Obstruction>, QuadFormError> {
    let h = m.h_coords().ok_or(QuadFormError::HSquaredAbsent)?;
    let g = m.gram();
    if !g.is_positive_definite() {
        return Err(QuadFormError::NotPositiveDefinite);
    }
    let k2_reduced = reduce_binary(&k2_gram())?;
    let k6_reduced = reduce_binary(&k6_gram())?;
    let two = BigInt::from(2);
    for sv in &short_vectors(g, &two)?.vectors {
        let mut r = sv.coords.clone();
        let mut a = g.evaluate(h, &r);
        if a.is_negative() {
            for c in &mut r {
                *c = -c.clone();
            }
            a = -a;
        }
        let hh = g.norm(h);
        let rr = g.norm(&r);
        let k = GramMatrix::new(crate::exact_linalg::IntMatrix::from_rows(vec![
            vec![hh, a.clone()],
            vec![a, rr],
        ]))
        .expect("symmetric");
        if !k.is_positive_definite() {
            // degenerate ⟨h², r⟩ cannot be an excluded form
            continue;
        }
        let reduced = reduce_binary(&k)?;
        let kind = if reduced == k2_reduced {
            Some(ObstructionKind::K2)
        } else if reduced == k6_reduced {
            Some(ObstructionKind::K6)
        } else {
            None
        };
        if let Some(kind) = kind {
            return Ok(Some(Obstruction {
                kind,
                r_coords: r,
                gram: k,
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice_core::{build_ambient, sublattice_from_basis, LatticeVector};

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn coords(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| bi(x)).collect()
    }

    #[test]
    fn short_vectors_of_diag_3_2() {
        // 3x² + 2y² ≤ 2 forces x = 0, |y| ≤ 1
        let g = GramMatrix::from_i64_rows(&[&[3, 0], &[0, 2]]).unwrap();
        let list = short_vectors(&g, &bi(2)).unwrap();
        assert_eq!(list.len(), 1);
        assert_eq!(list.vectors[0].coords, coords(&[0, 1]));
        assert_eq!(list.vectors[0].norm, bi(2));
    }

    #[test]
    fn short_vectors_of_k2() {
        // 3x² + 2xy + y² = 2x² + (x+y)²: exactly ±(0,1) and ±(1,-1)
        let list = short_vectors(&k2_gram(), &bi(2)).unwrap();
        let got: Vec<(Vec<BigInt>, BigInt)> = list
            .vectors
            .iter()
            .map(|v| (v.coords.clone(), v.norm.clone()))
            .collect();
        assert_eq!(
            got,
            vec![(coords(&[0, 1]), bi(1)), (coords(&[1, -1]), bi(2))]
        );
    }

    #[test]
    fn short_vectors_rejects_indefinite() {
        let u = GramMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(
            short_vectors(&u, &bi(2)).unwrap_err(),
            QuadFormError::NotPositiveDefinite
        );
    }

    #[test]
    fn min_norm_examples() {
        assert_eq!(
            min_norm(&GramMatrix::from_i64_rows(&[&[3]]).unwrap()).unwrap(),
            bi(3)
        );
        assert_eq!(min_norm(&k2_gram()).unwrap(), bi(1));
        let case1 = GramMatrix::from_i64_rows(&[&[3, 0, 0], &[0, 4, 0], &[0, 0, 6]]).unwrap();
        assert_eq!(min_norm(&case1).unwrap(), bi(3));
    }

    #[test]
    fn represents_examples() {
        assert!(represents(&k2_gram(), &bi(2)).unwrap());
        assert!(represents(&k6_gram(), &bi(2)).unwrap());
        // A2 represents 2 but not 1
        let a2 = GramMatrix::from_i64_rows(&[&[2, 1], &[1, 2]]).unwrap();
        assert!(represents(&a2, &bi(2)).unwrap());
        assert!(!represents(&a2, &bi(1)).unwrap());
    }

    #[test]
    fn reduce_binary_examples() {
        let r = reduce_binary(&k2_gram()).unwrap();
        assert_eq!(
            r.matrix(),
            GramMatrix::from_i64_rows(&[&[1, 0], &[0, 2]])
                .unwrap()
                .matrix()
        );
        let r = reduce_binary(&k6_gram()).unwrap();
        assert_eq!(
            r.matrix(),
            GramMatrix::from_i64_rows(&[&[2, 0], &[0, 3]])
                .unwrap()
                .matrix()
        );
        let a2 = GramMatrix::from_i64_rows(&[&[2, 1], &[1, 2]]).unwrap();
        assert_eq!(reduce_binary(&a2).unwrap().matrix(), a2.matrix());
    }

    #[test]
    fn reduce_binary_preserves_det_and_min() {
        for rows in [
            [[7i64, 3], [3, 2]],
            [[10, -7], [-7, 5]],
            [[3, 2], [2, 2]],
            [[6, 3], [3, 2]],
        ] {
            let g = GramMatrix::from_i64_rows(&[&rows[0], &rows[1]]).unwrap();
            let r = reduce_binary(&g).unwrap();
            assert_eq!(g.det(), r.det());
            assert_eq!(min_norm(&g).unwrap(), min_norm(&r).unwrap());
            // reduced shape: 0 ≤ 2b ≤ a ≤ c
            let (a, b, c) = (
                r.matrix()[(0, 0)].clone(),
                r.matrix()[(0, 1)].clone(),
                r.matrix()[(1, 1)].clone(),
            );
            assert!(!b.is_negative() && bi(2) * b <= a && a <= c);
        }
    }

    #[test]
    fn finds_k6_through_e8_root() {
        // ⟨h², r⟩ with r an E8 simple root: Gram diag(3,2) = K6 itself
        let l = build_ambient();
        let m =
            sublattice_from_basis(&l, &[l.h_squared().clone(), LatticeVector::unit(0)]).unwrap();
        let found = find_k2_or_k6(&m).unwrap().expect("K6 present");
        assert_eq!(found.kind, ObstructionKind::K6);
    }

    #[test]
    fn finds_k2_through_i3_unit() {
        // r = (1,0,0) in I3: (r.r) = 1, (h².r) = 1 gives the K2 Gram
        let l = build_ambient();
        let m = sublattice_from_basis(&l, &[l.h_squared().clone(), l.i3_unit(0).clone()]).unwrap();
        let found = find_k2_or_k6(&m).unwrap().expect("K2 present");
        assert_eq!(found.kind, ObstructionKind::K2);
        assert_eq!(found.gram.matrix(), k2_gram().matrix());
    }

    #[test]
    fn clean_witness_has_no_obstruction() {
        let l = build_ambient();
        let alpha1 = &l.e1().clone() + &l.f1().scaled(2);
        let alpha2 = &l.e2().clone() + &l.f2().scaled(3);
        let m = sublattice_from_basis(&l, &[l.h_squared().clone(), alpha1, alpha2]).unwrap();
        assert!(find_k2_or_k6(&m).unwrap().is_none());
    }

    #[test]
    fn obstruction_requires_h_squared() {
        let l = build_ambient();
        let m = sublattice_from_basis(&l, &[LatticeVector::unit(0)]).unwrap();
        assert_eq!(
            find_k2_or_k6(&m).unwrap_err(),
            QuadFormError::HSquaredAbsent
        );
    }

    #[test]
    fn exact_sqrt_interval_endpoints() {
        let r = |n: i64, d: i64| BigRational::new(bi(n), bi(d));
        // m = 0, ρ = 2: interval [-√2, √2] → [-1, 1]
        assert_eq!(floor_plus_sqrt(&r(0, 1), &r(2, 1)), bi(1));
        assert_eq!(ceil_minus_sqrt(&r(0, 1), &r(2, 1)), bi(-1));
        // m = 1/2, ρ = 1/4: interval [0, 1]
        assert_eq!(floor_plus_sqrt(&r(1, 2), &r(1, 4)), bi(1));
        assert_eq!(ceil_minus_sqrt(&r(1, 2), &r(1, 4)), bi(0));
        // exact square endpoint: m = 0, ρ = 4 → [-2, 2]
        assert_eq!(floor_plus_sqrt(&r(0, 1), &r(4, 1)), bi(2));
        assert_eq!(ceil_minus_sqrt(&r(0, 1), &r(4, 1)), bi(-2));
        // ρ = 0 collapses to the rounded center
        assert_eq!(floor_plus_sqrt(&r(7, 3), &r(0, 1)), bi(2));
        assert_eq!(ceil_minus_sqrt(&r(7, 3), &r(0, 1)), bi(3));
    }
}
