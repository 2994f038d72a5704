//! Exact computation of Castelnuovo-Mumford regularity for monomial ideals,
//! with a focus on ordinary and symbolic powers of edge ideals.
//!
//! Regularity is computed combinatorially from degree complexes
//! ([`regularity`]) and cross-checked against multigraded Betti numbers from
//! upper Koszul complexes ([`betti`]). All arithmetic is exact.

pub mod betti;
pub mod bits;
pub mod error;
pub mod generate;
pub mod graph;
pub mod homology;
pub mod io;
pub mod linalg;
pub mod monomial;
pub mod power;
pub mod regularity;
pub mod simplicial;

pub use betti::{betti_oracle, reg_from_betti, BettiTable};
pub use error::{Error, Result};
pub use graph::Graph;
pub use homology::HomologyProfile;
pub use linalg::Field;
pub use monomial::{ExponentBox, ExponentVector, MonomialIdeal};
pub use power::{symbolic_power, symbolic_power_of_graph, PowerPair, Selector};
pub use regularity::{regularity, RegularityCertificate, ScanOptions};
pub use simplicial::{complex_of_ideal, ideal_of_complex, ComplexKind, SimplicialComplex};
