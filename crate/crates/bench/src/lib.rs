//! Shared inputs for the criterion benchmarks.

use cqsres_core::CyclicQuotient;

/// Singularities with long continued fractions on either side.
pub fn sample_singularities() -> Vec<CyclicQuotient> {
    [(19, 7), (60, 1), (97, 35), (233, 89), (1001, 400)]
        .iter()
        .map(|&(n, q)| CyclicQuotient::new(n, q).expect("sample parameters are coprime"))
        .collect()
}
