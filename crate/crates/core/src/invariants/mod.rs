//! Closed forms for the `G_{r,d}` family and the oracles that check them.

mod formulas;
mod hilbert;
mod homological;
mod oracles;

pub use formulas::{
    betti_formula_grd, betti_formula_k2d, binomial, family_initial_generators, hilbert_formula_grd,
    k2d_initial_generators, lower_bounds_from_induced,
};
pub use hilbert::{hilbert_from_betti, hvector_extract, k_polynomial, HVector, HilbertSeries};
pub use homological::{reg_pdim, strand_transfer, CertifiedBetti, HomologicalSummary, RegPdim};
pub use oracles::{
    hilbert_enumeration_oracle, krull_dim, minimal_generators_oracle, EnumerationBudget, DEFAULT_ENUMERATION_BUDGET,
};
