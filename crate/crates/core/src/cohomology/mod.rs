//! Second multiplicative-Lie cohomology by exhaustive enumeration.
//!
//! `Z²` is the set of pairs `(f, h)` passing the displayed equations for a
//! fixed twist, `B²` the image of `χ: MAP(K,H) → Z²`, and `H² = Z²/B²`.

mod classify;
mod cocycles;
mod group;
mod search;

pub use classify::{
    classify_extensions, cocycles_equivalent, enumerate_twists, eta_map, ClassEntry,
    Classification, EtaEntry,
};
pub use cocycles::{group_2cocycles, group_cocycle_estimate, mla_2cocycles, mla_cocycle_estimate};
pub use group::{
    coboundary, verify_exact_sequence, CohomologyGroup, CohomologyReport, ExactSequenceReport,
};

use crate::factor_systems::L6Reading;

/// Default ceiling on the up-front candidate estimate.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Largest candidate estimate a search will accept.
    pub budget: u128,
    pub l6: L6Reading,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: DEFAULT_BUDGET,
            l6: L6Reading::Derived,
        }
    }
}

#[cfg(test)]
mod tests;
