//! Exact solvers for geometric discrepancy, largest empty box and
//! bichromatic separation problems, together with builders for the
//! Clique-reduction instances that make them hard in the dimension.

pub mod cli;
pub mod error;
pub mod gadgets;
pub mod geometry;
pub mod io;
pub mod numerics;
pub mod oracles;
pub mod solvers;

pub use error::{Error, Result};
pub use gadgets::{Graph, Problem};
pub use geometry::{Closure, Color, Point, PointSet, Range, WeightedPoint};
pub use numerics::Rational;
pub use solvers::Solver;
