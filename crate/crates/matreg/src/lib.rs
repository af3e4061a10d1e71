//! Exact computations around matroids: arboricity and the intersection
//! number γ, Stanley-Reisner symbolic powers, degree complexes, reduced
//! homology over prime fields, and Castelnuovo-Mumford regularity via
//! Takayama's formula and a multigraded Betti oracle — together with
//! exhaustive verification sweeps over all small labeled matroids.

pub mod arboricity;
pub mod error;
pub mod families;
pub mod graph;
pub mod ideal;
pub mod io;
pub mod matroid;
pub mod par;
pub mod regularity;
pub mod report;
pub mod simplicial;
pub mod subsets;
pub mod suites;

pub use error::{Error, Result};
pub use matroid::Matroid;
pub use simplicial::SimplicialComplex;
