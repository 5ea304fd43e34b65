//! Path extendability in tournaments.
//!
//! Tournaments up to 24 vertices are stored as out-neighbourhood bit rows.
//! On top of that sit the 2-path invariants ([`metrics`]), the tournament
//! families ([`construct`]), an exact extendability decision ([`extend`]),
//! executable checks of the known bounds ([`verify`]) and random-digraph
//! experiments ([`montecarlo`]).

pub mod cli;
pub mod construct;
pub mod error;
pub mod extend;
pub mod iso;
pub mod metrics;
pub mod montecarlo;
pub mod tournament;
pub mod verify;

pub use error::{Error, Result};
pub use extend::{extend_path, is_path_extendable, nonextendable_paths, ExtendabilityVerdict, FixedEndpointHpTable};
pub use metrics::{irregularity, p2, pi2, PathContext, SurplusReport};
pub use tournament::{DirectedPath, Tournament, VertexSet, MAX_VERTICES};
