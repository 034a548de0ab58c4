//! Colon ideals of ordered monomial generators, linear quotients and Betti tables.

mod betti;
mod colon;
mod taylor;

pub use betti::{betti_from_linear_quotients, BettiTable};
pub use colon::{colon_with_monomial, quotient_profile, sort_ascending, OrderedGenerators, QuotientProfile};
pub use taylor::{betti_taylor_oracle, betti_taylor_oracle_with_cap, DEFAULT_TAYLOR_CAP};
