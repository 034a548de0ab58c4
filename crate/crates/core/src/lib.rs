//! Toric ideals of finite simple graphs.
//!
//! The crate builds the toric ideal `I_G = ker(e -> x_i x_j)` of a graph from its
//! primitive closed even walks, computes reduced Gröbner bases of pure-difference
//! binomial ideals, analyses the initial ideal through its colon ideals, and
//! derives graded Betti numbers, Hilbert series and related invariants.
//!
//! Closed forms for the family `G_{r,d}` (the complete bipartite graph `K_{2,d}`
//! with an even path of length `2r - 2` joining its two degree-`d` vertices) live
//! next to brute-force oracles that check them: a Taylor-complex Betti oracle,
//! Hilbert-function enumeration through the edge map, and minimal-generator counts
//! by exact linear algebra on graded pieces.

pub mod error;
pub mod graph;
pub mod grobner;
pub mod invariants;
pub mod linalg;
pub mod quotients;
pub mod walks;

pub use error::{Error, Result};
pub use graph::{Edge, Family, SimpleGraph, VertexId};
pub use grobner::{Binomial, MonomialIdeal, MonomialOrder, Monomial};
pub use quotients::BettiTable;
