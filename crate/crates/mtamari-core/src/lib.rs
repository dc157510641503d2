//! Exact combinatorics of the m-Tamari lattices on m-Dyck paths.
//!
//! The crate provides three independent routes to the interval counts of the
//! m-Tamari lattice and the machinery to cross-validate them:
//!
//! - [`paths`]: m-ballot and m-Dyck paths with their structural primitives
//!   (excursions, matching, contacts, distance vectors, m-reduction).
//! - [`lattice`]: the Tamari order, explicit Hasse diagrams, interval
//!   enumeration with statistics, and the (m+1)-ary tree view.
//! - [`series`]: a truncated power-series engine over exact rationals that
//!   solves the catalytic functional equation and checks the algebraic
//!   parametrization of its solution.
//! - [`formulas`]: closed-form counts with integrality assertions.
//! - [`identities`]: machine verification of the Lambda-operator identities
//!   behind the parametrization proof.
//! - [`checks`]: named verification suites tying the routes together.
//!
//! All arithmetic is exact (arbitrary-precision integers and rationals);
//! there is no floating point anywhere. The crate is `no_std` + `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod checks;
pub mod formulas;
pub mod identities;
pub mod lattice;
pub mod paths;
pub mod series;

pub use num_bigint;
pub use num_rational;
pub use num_traits;
