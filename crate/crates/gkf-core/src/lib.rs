//! Exact computation of the relative Gel'fand-Kalinin-Fuks cohomology of
//! formal Hamiltonian vector fields on R^(2n), n = 1, 2, split by weight.
//!
//! The pipeline enumerates fixed-weight slices of the cochain complex of the
//! subalgebra generated by cubic-and-higher potentials, extracts the
//! Sp(2n,R)-invariant part of each slice by highest-weight linear algebra,
//! restricts the coboundary there and reads off Betti numbers — everything
//! in exact rational arithmetic. A combinatorial character layer
//! (Littlewood-Richardson, King modification, Freudenthal, Klimyk) provides
//! independent cross-checks of every irreducible decomposition.

pub mod cache;
pub mod characters;
pub mod cochain;
pub mod cohomology;
pub mod invariants;
pub mod linalg;
pub mod par;
pub mod partitions;
pub mod poisson;

pub use cohomology::{betti, build_relative_complex, CohomologyReport, RelativeComplex};
