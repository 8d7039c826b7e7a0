//! Monogamy certificates for entropic non-contextuality inequalities.
//!
//! A certificate is a nonnegative rational combination of oriented
//! triangle inequalities whose exact symbolic sum equals a target sum of
//! entropic expressions. Because every triangle of a commutation graph
//! carries a genuine joint distribution, each triangle inequality holds on
//! any state, so a verified certificate proves the target sum can never be
//! positive: at most one of the combined inequalities can be violated.

mod certificate;
mod derive;
mod scenarios;
mod simplex;

pub use certificate::{verify, verify_detailed, MonogamyCertificate, OrientedTriangle, VerifyError};
pub use derive::{derive_monogamy, derive_monogamy_with_budget, SearchOutcome, DEFAULT_BUDGET};
pub use scenarios::{
    chord_elimination_example, chord_elimination_scenario, chsh_tripartite_example,
    tripartite_joint_graph, tripartite_targets,
};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum DeriveError {
    #[error("target term H({x}|{y}) is not an edge of the joint graph")]
    TargetPairNotAnEdge { x: String, y: String },
    #[error(transparent)]
    Graph(#[from] graph_core::GraphError),
}
