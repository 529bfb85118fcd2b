//! Colouring quasi-line graphs with at most `floor(chi_f + 3 sqrt(chi_f))` colours.
//!
//! The crate is organised around the stages of the colouring algorithm:
//!
//! * [`graph`]: graphs, multigraphs, colourings, file formats and the exact
//!   brute-force oracles (chromatic number, clique number, quasi-line test).
//! * [`interval`]: linear and circular interval graphs.
//! * [`composition`]: compositions of linear interval strips and line-graph
//!   recognition.
//! * [`fractional`]: exact fractional colouring by column generation.
//! * [`rounding`]: making strip overlaps integral at bounded extra weight.
//! * [`stripcolour`]: integral strip colourings with a prescribed overlap.
//! * [`hubcolour`]: the contracted line graph and colourings of the hub graph.
//! * [`pipeline`]: reductions, dispatch, generators.

pub mod composition;
pub mod error;
pub mod fractional;
pub mod graph;
pub mod hubcolour;
pub mod interval;
pub mod pipeline;
pub mod rounding;
pub mod stripcolour;

pub use error::{Error, Result};
pub use graph::{Bounds, Colouring, Graph, Multigraph, SearchLimits};

/// Exact rational type used throughout.
pub type Rational = num_rational::BigRational;
