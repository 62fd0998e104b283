//! Witness constructions for intersections of Hassett divisors, and the
//! verification pipeline that certifies them.
//!
//! A divisor label `d` is *valid* when it satisfies (★): `d > 6` and
//! `d ≡ 0, 2 (mod 6)`. For any two valid labels the builders produce an
//! explicit rank-3 sublattice `h² ∈ M ⊂ L` (and a rank-4 one through the
//! norm-10 vector ν) whose verified properties — positive definite,
//! saturated in `L`, containing `h²`, minimum norm ≥ 3, prescribed
//! determinants of the labelled rank-2 sublattices — certify that the
//! corresponding divisors intersect. The constructions split into three
//! congruence cases according to `(d1 mod 6, d2 mod 6)`, each with its own
//! correction vectors in the `I(3,0)` block.

use crate::exact_linalg::{det_exact, GramMatrix, IntMatrix};
use crate::lattice_core::{
    build_ambient, is_saturated_in, is_saturated_in_l, AmbientLattice, EmbeddedSublattice,
    LatticeVector,
};
use crate::quadform::{min_norm, represents};
use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HassettError {
    #[error("d = {0} does not satisfy (★): need d > 6 and d ≡ 0, 2 (mod 6)")]
    NotStar(i64),
    #[error("sweep bound must be at least {min}, got {max}")]
    MaxTooSmall { max: i64, min: i64 },
}

/// (★): `d > 6` and `d ≡ 0, 2 (mod 6)`.
pub fn satisfies_star(d: i64) -> bool {
    d > 6 && (d % 6 == 0 || d % 6 == 2)
}

/// Admissible labels: (★) together with `4 ∤ d`, `9 ∤ d`, and `p ∤ d` for
/// every odd prime `p ≡ 2 (mod 3)`. Trial division; labels live at desk
/// scale.
pub fn is_admissible(d: i64) -> bool {
    if !satisfies_star(d) || d % 4 == 0 || d % 9 == 0 {
        return false;
    }
    let mut m = d;
    while m % 2 == 0 {
        m /= 2;
    }
    let mut p = 3i64;
    while p * p <= m {
        if m % p == 0 {
            if p % 3 == 2 {
                return false;
            }
            while m % p == 0 {
                m /= p;
            }
        }
        p += 2;
    }
    if m > 1 && m % 3 == 2 {
        return false;
    }
    true
}

/// A divisor label with its sieve flags.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DivisorLabel {
    pub d: i64,
    pub satisfies_star: bool,
    pub admissible: bool,
}

pub fn label(d: i64) -> DivisorLabel {
    DivisorLabel {
        d,
        satisfies_star: satisfies_star(d),
        admissible: is_admissible(d),
    }
}

/// All (★) values up to and including `max`.
pub fn star_values(max: i64) -> Vec<i64> {
    (7..=max).filter(|&d| satisfies_star(d)).collect()
}

/// All admissible values up to and including `max`.
pub fn admissible_values(max: i64) -> Vec<i64> {
    (7..=max).filter(|&d| is_admissible(d)).collect()
}

/// Congruence case of a normalized pair `(d1 mod 6, d2 mod 6)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CongruenceCase {
    /// d1 ≡ 0, d2 ≡ 0 (mod 6)
    ZeroZero,
    /// d1 ≡ 0, d2 ≡ 2 (mod 6)
    ZeroTwo,
    /// d1 ≡ 2, d2 ≡ 2 (mod 6)
    TwoTwo,
}

impl CongruenceCase {
    pub fn number(self) -> u8 {
        match self {
            CongruenceCase::ZeroZero => 1,
            CongruenceCase::ZeroTwo => 2,
            CongruenceCase::TwoTwo => 3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessKind {
    Pair,
    Triple,
    RationalLoci,
    UserSupplied,
}

impl WitnessKind {
    pub fn name(self) -> &'static str {
        match self {
            WitnessKind::Pair => "pair-witness",
            WitnessKind::Triple => "triple-witness",
            WitnessKind::RationalLoci => "rational-loci",
            WitnessKind::UserSupplied => "user-supplied",
        }
    }
}

/// A named sublattice `K ⊂ M` given by coordinate rows in the basis of `M`,
/// together with the determinant it must have.
#[derive(Clone, Debug)]
pub struct LabelledSublattice {
    pub name: String,
    pub rows_in_parent: IntMatrix,
    pub expected_det: BigInt,
}

/// An embedded sublattice with its labelled sublattices, ready for
/// verification.
#[derive(Clone, Debug)]
pub struct Witness {
    pub kind: WitnessKind,
    pub d1: i64,
    pub d2: i64,
    pub case: CongruenceCase,
    pub sublattice: EmbeddedSublattice,
    pub labelled: Vec<LabelledSublattice>,
}

/// Normalize so that the multiple of 6, when exactly one value is, comes
/// first; this fixes the orientation of the mixed congruence case and makes
/// the construction independent of argument order.
fn normalize_pair(d1: i64, d2: i64) -> (i64, i64) {
    if d1 % 6 == 2 && d2 % 6 == 0 {
        (d2, d1)
    } else {
        (d1, d2)
    }
}

fn case_of(d1: i64, d2: i64) -> CongruenceCase {
    match (d1 % 6, d2 % 6) {
        (0, 0) => CongruenceCase::ZeroZero,
        (0, 2) => CongruenceCase::ZeroTwo,
        (2, 2) => CongruenceCase::TwoTwo,
        _ => unreachable!("pair is normalized and (★)-checked"),
    }
}

/// The two case-corrected generators `v1, v2`: `αᵢ = eᵢ + nᵢ fᵢ` plus the
/// `I(3,0)` correction the case requires.
fn corrected_generators(
    l: &AmbientLattice,
    case: CongruenceCase,
    d1: i64,
    d2: i64,
) -> (LatticeVector, LatticeVector) {
    let alpha = |e: &LatticeVector, f: &LatticeVector, n: i64| -> LatticeVector {
        &e.clone() + &f.scaled(n)
    };
    match case {
        CongruenceCase::ZeroZero => {
            let (n1, n2) = (d1 / 6, d2 / 6);
            (alpha(l.e1(), l.f1(), n1), alpha(l.e2(), l.f2(), n2))
        }
        CongruenceCase::ZeroTwo => {
            let (n1, n2) = (d1 / 6, (d2 - 2) / 6);
            (
                alpha(l.e1(), l.f1(), n1),
                &alpha(l.e2(), l.f2(), n2) + l.i3_unit(2),
            )
        }
        CongruenceCase::TwoTwo => {
            let (n1, n2) = ((d1 - 2) / 6, (d2 - 2) / 6);
            (
                &alpha(l.e1(), l.f1(), n1) + l.i3_unit(1),
                &alpha(l.e2(), l.f2(), n2) + l.i3_unit(2),
            )
        }
    }
}

fn unit_rows(rank: usize, picks: &[usize]) -> IntMatrix {
    let mut m = IntMatrix::zeros(picks.len(), rank);
    for (r, &c) in picks.iter().enumerate() {
        m[(r, c)] = BigInt::from(1);
    }
    m
}

/// Rank-3 witness `M = ⟨h², v1, v2⟩` for the pair `(d1, d2)`, with the
/// labelled rank-2 sublattices `K_d1 = ⟨h², v1⟩` and `K_d2 = ⟨h², v2⟩`.
pub fn pair_witness(d1: i64, d2: i64) -> Result<Witness, HassettError> {
    for d in [d1, d2] {
        if !satisfies_star(d) {
            return Err(HassettError::NotStar(d));
        }
    }
    let (d1, d2) = normalize_pair(d1, d2);
    let case = case_of(d1, d2);
    let l = build_ambient();
    let (v1, v2) = corrected_generators(&l, case, d1, d2);
    let basis = [l.h_squared().clone(), v1, v2];
    let sublattice = crate::lattice_core::sublattice_from_basis(&l, &basis)
        .expect("generators use disjoint U blocks");
    let labelled = vec![
        LabelledSublattice {
            name: "K_d1".to_string(),
            rows_in_parent: unit_rows(3, &[0, 1]),
            expected_det: BigInt::from(d1),
        },
        LabelledSublattice {
            name: "K_d2".to_string(),
            rows_in_parent: unit_rows(3, &[0, 2]),
            expected_det: BigInt::from(d2),
        },
    ];
    Ok(Witness {
        kind: WitnessKind::Pair,
        d1,
        d2,
        case,
        sublattice,
        labelled,
    })
}

/// The determinant the rank-3 pair witness must have:
/// `(d1·d2 − 1)/3` when both are ≡ 2 (mod 6), `d1·d2/3` otherwise.
pub fn expected_pair_det(d1: i64, d2: i64) -> Result<BigInt, HassettError> {
    for d in [d1, d2] {
        if !satisfies_star(d) {
            return Err(HassettError::NotStar(d));
        }
    }
    let prod = BigInt::from(d1) * BigInt::from(d2);
    let numerator = if d1 % 6 == 2 && d2 % 6 == 2 {
        prod - 1
    } else {
        prod
    };
    let (q, r) = num_integer::Integer::div_rem(&numerator, &BigInt::from(3));
    assert!(
        r.is_zero(),
        "pair determinant numerator must be divisible by 3"
    );
    Ok(q)
}

/// Rank-4 witness `M = ⟨h², ν, v1, v2⟩`, with labelled sublattices
/// `K_14 = ⟨h², ν⟩`, `K_d1` and `K_d2`. The rank-4 determinant has no
/// prescribed value; the certificate is the verification itself.
pub fn triple_witness(d1: i64, d2: i64) -> Result<Witness, HassettError> {
    for d in [d1, d2] {
        if !satisfies_star(d) {
            return Err(HassettError::NotStar(d));
        }
    }
    let (d1, d2) = normalize_pair(d1, d2);
    let case = case_of(d1, d2);
    let l = build_ambient();
    let (v1, v2) = corrected_generators(&l, case, d1, d2);
    let basis = [l.h_squared().clone(), l.nu().clone(), v1, v2];
    let sublattice = crate::lattice_core::sublattice_from_basis(&l, &basis)
        .expect("generators use disjoint U blocks");
    let labelled = vec![
        LabelledSublattice {
            name: "K_14".to_string(),
            rows_in_parent: unit_rows(4, &[0, 1]),
            expected_det: BigInt::from(14),
        },
        LabelledSublattice {
            name: "K_d1".to_string(),
            rows_in_parent: unit_rows(4, &[0, 2]),
            expected_det: BigInt::from(d1),
        },
        LabelledSublattice {
            name: "K_d2".to_string(),
            rows_in_parent: unit_rows(4, &[0, 3]),
            expected_det: BigInt::from(d2),
        },
    ];
    Ok(Witness {
        kind: WitnessKind::Triple,
        d1,
        d2,
        case,
        sublattice,
        labelled,
    })
}

/// Verification record for one labelled sublattice.
#[derive(Clone, Debug)]
pub struct SubReport {
    pub name: String,
    pub gram: GramMatrix,
    pub det: BigInt,
    pub expected_det: BigInt,
    pub saturated_in_parent: bool,
    pub ok: bool,
}

/// Full verification record for one witness lattice.
#[derive(Clone, Debug)]
pub struct WitnessReport {
    pub kind: WitnessKind,
    pub d1: Option<i64>,
    pub d2: Option<i64>,
    pub basis: Vec<LatticeVector>,
    pub gram: GramMatrix,
    pub positive_definite: bool,
    pub saturated_in_l: bool,
    pub contains_h2: bool,
    /// `None` when the Gram matrix is not positive definite (the
    /// enumeration behind the check is only defined for definite forms);
    /// `None` never passes.
    pub represents_two: Option<bool>,
    pub min_norm: Option<BigInt>,
    pub det_m: BigInt,
    pub expected_det: Option<BigInt>,
    /// rank − 1, the codimension the embedding certifies.
    pub codimension: usize,
    pub sub_reports: Vec<SubReport>,
    pub pass: bool,
}

impl WitnessReport {
    /// Names of the checks that failed, in report order.
    pub fn failed_checks(&self) -> Vec<String> {
        let mut fails = Vec::new();
        if !self.positive_definite {
            fails.push("positive_definite".to_string());
        }
        if !self.saturated_in_l {
            fails.push("saturated_in_L".to_string());
        }
        if !self.contains_h2 {
            fails.push("contains_h2".to_string());
        }
        if self.represents_two != Some(false) {
            fails.push("represents_two".to_string());
        }
        if !self
            .min_norm
            .as_ref()
            .is_some_and(|n| n >= &BigInt::from(3))
        {
            fails.push("min_norm".to_string());
        }
        if let Some(expected) = &self.expected_det {
            if &self.det_m != expected {
                fails.push("det_m".to_string());
            }
        }
        for sub in &self.sub_reports {
            if !sub.ok {
                fails.push(format!("sublattice {}", sub.name));
            }
        }
        fails
    }
}

/// Run every check on a witness and assemble the report. Failures are
/// report fields, never errors.
pub fn verify(w: &Witness, expected_det: Option<&BigInt>) -> WitnessReport {
    let m = &w.sublattice;
    let gram = m.gram().clone();
    let positive_definite = gram.is_positive_definite();
    let saturated_in_l = is_saturated_in_l(m);
    let contains_h2 = m.contains_h_squared();
    let (represents_two, min_norm_val) = if positive_definite && m.rank() > 0 {
        (
            Some(represents(&gram, &BigInt::from(2)).expect("form is positive definite")),
            Some(min_norm(&gram).expect("form is positive definite")),
        )
    } else {
        (None, None)
    };
    let det_m = det_exact(gram.matrix()).expect("Gram matrix is square");
    let mut sub_reports = Vec::with_capacity(w.labelled.len());
    for lab in &w.labelled {
        let k_gram = gram
            .restrict(&lab.rows_in_parent)
            .expect("labelled rows match the parent rank");
        let det = k_gram.det();
        let saturated_in_parent =
            is_saturated_in(m, &lab.rows_in_parent).expect("labelled rows are independent");
        let ok = saturated_in_parent && det == lab.expected_det;
        sub_reports.push(SubReport {
            name: lab.name.clone(),
            gram: k_gram,
            det,
            expected_det: lab.expected_det.clone(),
            saturated_in_parent,
            ok,
        });
    }
    let pass = positive_definite
        && saturated_in_l
        && contains_h2
        && represents_two == Some(false)
        && min_norm_val.as_ref().is_some_and(|n| n >= &BigInt::from(3))
        && expected_det.is_none_or(|e| &det_m == e)
        && sub_reports.iter().all(|s| s.ok);
    WitnessReport {
        kind: w.kind,
        d1: (w.kind != WitnessKind::UserSupplied).then_some(w.d1),
        d2: (w.kind != WitnessKind::UserSupplied).then_some(w.d2),
        basis: m.basis().to_vec(),
        gram,
        positive_definite,
        saturated_in_l,
        contains_h2,
        represents_two,
        min_norm: min_norm_val,
        det_m,
        expected_det: expected_det.cloned(),
        codimension: m.rank().saturating_sub(1),
        sub_reports,
        pass,
    }
}

/// Wrap a user-supplied sublattice (no labelled sublattices, no expected
/// determinant) and verify it.
pub fn verify_sublattice(sublattice: EmbeddedSublattice) -> WitnessReport {
    let w = Witness {
        kind: WitnessKind::UserSupplied,
        d1: 0,
        d2: 0,
        case: CongruenceCase::ZeroZero,
        sublattice,
        labelled: Vec::new(),
    };
    verify(&w, None)
}

/// The three verified witnesses placing a given divisor against the three
/// rational ones (labels 14, 26, 38), plus the pairwise-distinctness check
/// on their determinants.
#[derive(Clone, Debug)]
pub struct RationalLociReport {
    pub d: i64,
    pub reports: Vec<WitnessReport>,
    pub dets: Vec<BigInt>,
    pub dets_distinct: bool,
    pub pass: bool,
}

pub const RATIONAL_LABELS: [i64; 3] = [14, 26, 38];

pub fn rational_loci(d: i64) -> Result<RationalLociReport, HassettError> {
    if !satisfies_star(d) {
        return Err(HassettError::NotStar(d));
    }
    let mut reports = Vec::with_capacity(3);
    for k in RATIONAL_LABELS {
        let mut w = pair_witness(d, k)?;
        w.kind = WitnessKind::RationalLoci;
        let expected = expected_pair_det(d, k)?;
        reports.push(verify(&w, Some(&expected)));
    }
    let dets: Vec<BigInt> = reports.iter().map(|r| r.det_m.clone()).collect();
    let dets_distinct = dets[0] != dets[1] && dets[0] != dets[2] && dets[1] != dets[2];
    let pass = dets_distinct && reports.iter().all(|r| r.pass);
    Ok(RationalLociReport {
        d,
        reports,
        dets,
        dets_distinct,
        pass,
    })
}

#[derive(Clone, Debug)]
pub struct SweepFailure {
    pub d1: i64,
    pub d2: i64,
    pub kind: WitnessKind,
    pub failed_checks: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct SweepSummary {
    pub max_d: i64,
    pub star_values: Vec<i64>,
    pub pairs_checked: usize,
    /// Pairs per congruence case (1, 2, 3).
    pub case_tallies: [usize; 3],
    pub failures: Vec<SweepFailure>,
}

impl SweepSummary {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Verify the pair and triple witnesses for every unordered pair of (★)
/// values up to `max_d`. Pairs may be checked concurrently; results are
/// merged back in canonical `(d1, d2)` order, so the summary is independent
/// of scheduling.
pub fn sweep(max_d: i64) -> Result<SweepSummary, HassettError> {
    if max_d < 8 {
        return Err(HassettError::MaxTooSmall { max: max_d, min: 8 });
    }
    let values = star_values(max_d);
    let mut pairs = Vec::new();
    for (i, &a) in values.iter().enumerate() {
        for &b in &values[i..] {
            pairs.push((a, b));
        }
    }
    let per_pair: Vec<(CongruenceCase, Vec<SweepFailure>)> = pairs
        .par_iter()
        .map(|&(a, b)| {
            let mut fails = Vec::new();
            let w = pair_witness(a, b).expect("values satisfy (★)");
            let case = w.case;
            let expected = expected_pair_det(a, b).expect("values satisfy (★)");
            let report = verify(&w, Some(&expected));
            if !report.pass {
                fails.push(SweepFailure {
                    d1: w.d1,
                    d2: w.d2,
                    kind: WitnessKind::Pair,
                    failed_checks: report.failed_checks(),
                });
            }
            let t = triple_witness(a, b).expect("values satisfy (★)");
            let report = verify(&t, None);
            if !report.pass {
                fails.push(SweepFailure {
                    d1: t.d1,
                    d2: t.d2,
                    kind: WitnessKind::Triple,
                    failed_checks: report.failed_checks(),
                });
            }
            (case, fails)
        })
        .collect();
    let mut case_tallies = [0usize; 3];
    let mut failures = Vec::new();
    for (case, fails) in per_pair {
        case_tallies[(case.number() - 1) as usize] += 1;
        failures.extend(fails);
    }
    Ok(SweepSummary {
        max_d,
        star_values: values,
        pairs_checked: pairs.len(),
        case_tallies,
        failures,
    })
}
