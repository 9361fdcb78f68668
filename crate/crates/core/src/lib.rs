//! Depth of powers of edge ideals of weighted paths.
//!
//! [`monomial`] holds exponent-vector monomials and monomial ideals,
//! [`path`] the combinatorial depth formula, [`witness`] the witness
//! monomials and their colon ideals, and [`oracle`] an independent depth
//! computation through multigraded Koszul homology. [`campaign`] runs
//! seeded or exhaustive verification sweeps and [`table`] renders depth
//! tables.

pub mod campaign;
pub mod error;
pub mod monomial;
pub mod oracle;
pub mod path;
pub mod table;
pub mod witness;

pub use error::{Error, Result};
pub use monomial::{Monomial, MonomialIdeal};
pub use oracle::{depth_oracle, Backend, DepthReport, OracleOptions};
pub use path::{depth_formula, path_ideal, DeltaProfile, WeightVector};
