//! Graph energy toolkit: adjacency spectra and energy, the graph6 codec,
//! two-value completion of partial spectra, canonical labelling and
//! isomorph-free searches for extremal-energy graphs.

pub mod canon;
pub mod completion;
pub mod construct;
pub mod graph;
pub mod graph6;
pub mod search;
pub mod spectrum;

pub use completion::{
    best_candidates, complete_spectrum, derive_constants, third_moment_test, CandidateFilter,
    CompletionCandidate, CompletionError, KnownFamily, Objective,
};
pub use graph::{Graph, GraphError};
pub use graph6::{Graph6Code, Graph6Error};
pub use search::{SearchError, SearchResult, SearchSpec};
pub use spectrum::{eigenvalues, EnergyReport, Spectrum};
