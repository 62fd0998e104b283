//! The fixed ambient lattice `L = E8 ⊕ E8 ⊕ U ⊕ U ⊕ I(3,0)` and embedded
//! sublattices.
//!
//! The basis of `L` is frozen once and for all so that every witness
//! construction, report and file format is bit-reproducible:
//!
//! * indices 0–7: first E8 copy (Cartan Gram matrix, Bourbaki node order),
//! * indices 8–15: second E8 copy,
//! * indices 16–17: hyperbolic plane `U1` with basis `(e1, f1)`,
//! * indices 18–19: hyperbolic plane `U2` with basis `(e2, f2)`,
//! * indices 20–22: `I(3,0)` standard basis.
//!
//! The distinguished vectors are `h² = (1,1,1)` and `ν = (3,1,0)`, both in
//! the `I(3,0)` block.

use crate::exact_linalg::{
    det_exact, integer_kernel, smith_normal_form, GramMatrix, IntMatrix, LinalgError,
};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Rank of the ambient lattice.
pub const AMBIENT_RANK: usize = 23;

/// Identifier for the frozen basis convention above; embedded in every
/// report so that coordinate data is unambiguous.
pub const AMBIENT_CONVENTION: &str =
    "E8(cartan,bourbaki)^2 + U^2 + I(3,0); indices 0-7,8-15 E8; 16-17 (e1,f1); 18-19 (e2,f2); 20-22 I3; h2=(1,1,1), nu=(3,1,0) in I3; layout v1";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("lattice vector must have {AMBIENT_RANK} coordinates, got {got}")]
    WrongLength { got: usize },
    #[error("basis vectors are linearly dependent (rank {rank} of {vectors})")]
    DependentBasis { rank: usize, vectors: usize },
    #[error("basis must be nonempty")]
    EmptyBasis,
    #[error("sublattice coordinates must have {expected} columns, got {got}")]
    CoordinateWidth { expected: usize, got: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Integer coordinate vector in the fixed basis of `L`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatticeVector {
    coords: Vec<BigInt>,
}

impl LatticeVector {
    pub fn new(coords: Vec<BigInt>) -> Result<Self, LatticeError> {
        if coords.len() != AMBIENT_RANK {
            return Err(LatticeError::WrongLength { got: coords.len() });
        }
        Ok(Self { coords })
    }

    pub fn from_i64(coords: &[i64]) -> Result<Self, LatticeError> {
        Self::new(coords.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero() -> Self {
        Self {
            coords: vec![BigInt::zero(); AMBIENT_RANK],
        }
    }

    /// Standard basis vector of `L`.
    pub fn unit(i: usize) -> Self {
        assert!(i < AMBIENT_RANK);
        let mut v = Self::zero();
        v.coords[i] = BigInt::one();
        v
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scaled(&self, k: i64) -> Self {
        Self {
            coords: self.coords.iter().map(|c| c * BigInt::from(k)).collect(),
        }
    }
}

impl std::ops::Add for &LatticeVector {
    type Output = LatticeVector;
    fn add(self, rhs: &LatticeVector) -> LatticeVector {
        LatticeVector {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl std::ops::Sub for &LatticeVector {
    type Output = LatticeVector;
    fn sub(self, rhs: &LatticeVector) -> LatticeVector {
        LatticeVector {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

/// The ambient lattice: the frozen 23×23 Gram matrix plus its distinguished
/// vectors.
#[derive(Clone, Debug)]
pub struct AmbientLattice {
    gram: GramMatrix,
    h_squared: LatticeVector,
    e1: LatticeVector,
    f1: LatticeVector,
    e2: LatticeVector,
    f2: LatticeVector,
    i3_units: [LatticeVector; 3],
    nu: LatticeVector,
}

/// Gram matrix of E8 in the simple-root basis (Bourbaki numbering): the
/// Cartan matrix, positive definite, even, determinant 1.
const E8_ADJACENCY: [(usize, usize); 7] = [(0, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)];

/// Build the ambient lattice in the fixed index layout.
pub fn build_ambient() -> AmbientLattice {
    let mut g = IntMatrix::zeros(AMBIENT_RANK, AMBIENT_RANK);
    for block in [0usize, 8] {
        for i in 0..8 {
            g[(block + i, block + i)] = BigInt::from(2);
        }
        for &(i, j) in &E8_ADJACENCY {
            g[(block + i, block + j)] = BigInt::from(-1);
            g[(block + j, block + i)] = BigInt::from(-1);
        }
    }
    for base in [16usize, 18] {
        g[(base, base + 1)] = BigInt::one();
        g[(base + 1, base)] = BigInt::one();
    }
    for i in 20..23 {
        g[(i, i)] = BigInt::one();
    }
    let gram = GramMatrix::new(g).expect("ambient Gram is symmetric by construction");

    let h_squared = {
        let mut v = LatticeVector::zero();
        for i in 20..23 {
            v.coords[i] = BigInt::one();
        }
        v
    };
    let nu = {
        let mut v = LatticeVector::zero();
        v.coords[20] = BigInt::from(3);
        v.coords[21] = BigInt::one();
        v
    };
    AmbientLattice {
        gram,
        h_squared,
        e1: LatticeVector::unit(16),
        f1: LatticeVector::unit(17),
        e2: LatticeVector::unit(18),
        f2: LatticeVector::unit(19),
        i3_units: [
            LatticeVector::unit(20),
            LatticeVector::unit(21),
            LatticeVector::unit(22),
        ],
        nu,
    }
}

impl AmbientLattice {
    pub fn gram(&self) -> &GramMatrix {
        &self.gram
    }

    pub fn h_squared(&self) -> &LatticeVector {
        &self.h_squared
    }

    pub fn e1(&self) -> &LatticeVector {
        &self.e1
    }

    pub fn f1(&self) -> &LatticeVector {
        &self.f1
    }

    pub fn e2(&self) -> &LatticeVector {
        &self.e2
    }

    pub fn f2(&self) -> &LatticeVector {
        &self.f2
    }

    /// Standard basis vector of the `I(3,0)` block, `k < 3`.
    pub fn i3_unit(&self, k: usize) -> &LatticeVector {
        &self.i3_units[k]
    }

    pub fn nu(&self) -> &LatticeVector {
        &self.nu
    }

    /// Intersection form `(u . v)` on `L`.
    pub fn inner_product(&self, u: &LatticeVector, v: &LatticeVector) -> BigInt {
        self.gram.evaluate(u.coords(), v.coords())
    }

    pub fn norm(&self, v: &LatticeVector) -> BigInt {
        self.inner_product(v, v)
    }
}

/// Ordered basis of a sublattice `M ⊂ L` with its cached Gram matrix and,
/// when `h²` lies in the integer span, the coordinates of `h²` in the basis.
#[derive(Clone, Debug)]
pub struct EmbeddedSublattice {
    basis: Vec<LatticeVector>,
    gram: GramMatrix,
    h_coords: Option<Vec<BigInt>>,
}

impl EmbeddedSublattice {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[LatticeVector] {
        &self.basis
    }

    pub fn gram(&self) -> &GramMatrix {
        &self.gram
    }

    /// Coordinates of `h²` in this basis, when `h²` is in the sublattice.
    pub fn h_coords(&self) -> Option<&[BigInt]> {
        self.h_coords.as_deref()
    }

    pub fn contains_h_squared(&self) -> bool {
        self.h_coords.is_some()
    }

    /// The `rank × 23` matrix whose rows are the basis coordinates.
    pub fn coordinate_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(self.basis.iter().map(|v| v.coords().to_vec()).collect())
    }
}

/// Build the sublattice spanned by `vs`, caching the Gram matrix and solving
/// for `h²` in the integer span (absence is not an error: general
/// sublattices need not contain `h²`).
pub fn sublattice_from_basis(
    ambient: &AmbientLattice,
    vs: &[LatticeVector],
) -> Result<EmbeddedSublattice, LatticeError> {
    if vs.is_empty() {
        return Err(LatticeError::EmptyBasis);
    }
    let coords = IntMatrix::from_rows(vs.iter().map(|v| v.coords().to_vec()).collect());
    let rank = coords.rank();
    if rank != vs.len() {
        return Err(LatticeError::DependentBasis {
            rank,
            vectors: vs.len(),
        });
    }
    let gram = ambient.gram().restrict(&coords)?;
    let h_coords = solve_integer_linear(&coords.transpose(), ambient.h_squared().coords());
    Ok(EmbeddedSublattice {
        basis: vs.to_vec(),
        gram,
        h_coords,
    })
}

/// Internal constructor for bases already known to be independent (possibly
/// empty: the orthogonal complement of a full-rank sublattice).
fn sublattice_unchecked(ambient: &AmbientLattice, vs: Vec<LatticeVector>) -> EmbeddedSublattice {
    let coords = if vs.is_empty() {
        IntMatrix::zeros(0, AMBIENT_RANK)
    } else {
        IntMatrix::from_rows(vs.iter().map(|v| v.coords().to_vec()).collect())
    };
    let gram = ambient
        .gram()
        .restrict(&coords)
        .expect("coordinate width is fixed");
    let h_coords = if vs.is_empty() {
        None
    } else {
        solve_integer_linear(&coords.transpose(), ambient.h_squared().coords())
    };
    EmbeddedSublattice {
        basis: vs,
        gram,
        h_coords,
    }
}

/// Solve `A x = b` over the integers via the Smith normal form of `A`.
/// Returns `None` when there is no integer solution.
fn solve_integer_linear(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(a.rows(), b.len());
    let snf = smith_normal_form(a);
    let (rows, cols) = (a.rows(), a.cols());
    // u·A·v = d, so A x = b becomes d y = u b with x = v y.
    let mut c = vec![BigInt::zero(); rows];
    for (i, ci) in c.iter_mut().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            *ci += &snf.u[(i, j)] * bj;
        }
    }
    let mut y = vec![BigInt::zero(); cols];
    for (i, ci) in c.iter().enumerate() {
        if i < cols && !snf.d[(i, i)].is_zero() {
            let (q, r) = num_integer::Integer::div_rem(ci, &snf.d[(i, i)]);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        } else if !ci.is_zero() {
            return None;
        }
    }
    let mut x = vec![BigInt::zero(); cols];
    for (i, xi) in x.iter_mut().enumerate() {
        for (j, yj) in y.iter().enumerate() {
            *xi += &snf.v[(i, j)] * yj;
        }
    }
    Some(x)
}

/// True iff `M` is saturated in `L`, i.e. `L/M` is torsion-free. Detected by
/// the invariant factors of the coordinate matrix: all must be 1.
pub fn is_saturated_in_l(m: &EmbeddedSublattice) -> bool {
    if m.rank() == 0 {
        return true;
    }
    smith_normal_form(&m.coordinate_matrix()).all_invariant_factors_one(m.rank())
}

/// True iff the sublattice `K ⊂ M`, given by coordinate rows in the basis of
/// `M`, is saturated in `M`.
pub fn is_saturated_in(m: &EmbeddedSublattice, k_coords: &IntMatrix) -> Result<bool, LatticeError> {
    if k_coords.cols() != m.rank() {
        return Err(LatticeError::CoordinateWidth {
            expected: m.rank(),
            got: k_coords.cols(),
        });
    }
    let snf = smith_normal_form(k_coords);
    if snf.rank() != k_coords.rows() {
        return Err(LatticeError::DependentBasis {
            rank: snf.rank(),
            vectors: k_coords.rows(),
        });
    }
    Ok(snf.all_invariant_factors_one(k_coords.rows()))
}

/// Saturated basis of `{v ∈ L : (v . b) = 0 for every basis vector b of M}`,
/// computed as the integer kernel of the map `v ↦ ((b_i . v))_i`.
pub fn orthogonal_complement(
    ambient: &AmbientLattice,
    m: &EmbeddedSublattice,
) -> EmbeddedSublattice {
    // Rows of B·G are the functionals v ↦ (b_i . v).
    let map = m.coordinate_matrix().mul(ambient.gram().matrix());
    let kernel = integer_kernel(&map);
    let basis = kernel
        .into_iter()
        .map(|coords| LatticeVector::new(coords).expect("kernel vectors have width 23"))
        .collect();
    sublattice_unchecked(ambient, basis)
}

/// A Gram matrix is even iff every diagonal entry is even; for integral
/// symmetric matrices this is equivalent to all norms being even.
pub fn is_even(g: &GramMatrix) -> bool {
    (0..g.dim()).all(|i| (&g.matrix()[(i, i)] % BigInt::from(2)).is_zero())
}

/// |det| of the sublattice Gram matrix.
pub fn gram_det_abs(m: &EmbeddedSublattice) -> BigInt {
    det_exact(m.gram().matrix())
        .expect("Gram matrix is square")
        .abs()
}
