//! Monomials, the graded reverse lexicographic order, pure-difference binomials
//! and Buchberger's algorithm over them.

mod binomial;
mod buchberger;
mod ideal;
mod monomial;
mod order;

pub use binomial::{parse_monomial, Binomial};
pub use buchberger::{
    buchberger, initial_ideal, is_groebner_basis, is_reduced, reduce, s_binomial, same_binomials_up_to_sign,
    BuchbergerConfig,
};
pub use ideal::MonomialIdeal;
pub use monomial::Monomial;
pub use order::MonomialOrder;
