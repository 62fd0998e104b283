//! Shared fixtures for the criterion benches.

use cubic_lattice::hassett::{pair_witness, triple_witness, Witness};
use cubic_lattice::GramMatrix;

/// The largest-label pair witnesses, one per congruence case.
pub fn pair_fixtures() -> Vec<Witness> {
    [(96, 96), (96, 98), (98, 98)]
        .into_iter()
        .map(|(a, b)| pair_witness(a, b).expect("fixture labels satisfy (★)"))
        .collect()
}

pub fn triple_fixture() -> Witness {
    triple_witness(98, 98).expect("fixture labels satisfy (★)")
}

/// A rank-4 positive-definite Gram matrix with off-diagonal coupling.
pub fn rank4_gram() -> GramMatrix {
    triple_fixture().sublattice.gram().clone()
}
