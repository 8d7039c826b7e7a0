//! Built-in scenarios: the tripartite CHSH monogamy and the two-triangle
//! chord elimination that motivates the construction.

use enc_inequality::{chain_inequality, combine, entropic_chsh, rat, ChshForm, EntropicExpression};
use graph_core::{make_graph, CommutationGraph};

use crate::certificate::MonogamyCertificate;
use crate::derive::derive_monogamy;

/// The six-observable joint commutation graph of the Alice-Bob-Charlie
/// CHSH scenario: observables of different parties commute, observables of
/// one party do not, giving the twelve cross-party edges.
pub fn tripartite_joint_graph() -> CommutationGraph {
    let parties: [[&str; 2]; 3] = [["A0", "A1"], ["B0", "B1"], ["E0", "E1"]];
    let mut edges = Vec::new();
    for (i, p) in parties.iter().enumerate() {
        for q in parties.iter().skip(i + 1) {
            for u in p {
                for v in q {
                    edges.push((*u, *v));
                }
            }
        }
    }
    let vertices: Vec<String> = ["A0", "A1", "B0", "B1", "E0", "E1"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    make_graph(&vertices, &edges).expect("fixed scenario graph is valid")
}

/// The Alice-Bob and Alice-Charlie entropic CHSH targets.
pub fn tripartite_targets() -> Vec<EntropicExpression> {
    vec![
        entropic_chsh("A0", "A1", "B0", "B1", ChshForm::Sec2b).expect("distinct labels"),
        entropic_chsh("A0", "A1", "E0", "E1", ChshForm::Sec2b).expect("distinct labels"),
    ]
}

/// Derives and returns the tripartite CHSH monogamy: the joint graph, the
/// two CHSH targets, and a verified four-triangle certificate showing
/// their sum can never be positive.
pub fn chsh_tripartite_example() -> (
    CommutationGraph,
    Vec<EntropicExpression>,
    MonogamyCertificate,
) {
    let joint = tripartite_joint_graph();
    let targets = tripartite_targets();
    let cert = derive_monogamy(&joint, &targets)
        .expect("targets live on the joint graph")
        .found()
        .expect("the tripartite scenario admits a certificate");
    (joint, targets, cert)
}

/// The two oriented triangle inequalities around a shared chord and their
/// sum, in which the chord term cancels exactly:
///
/// ```text
/// H(X1|X4) - H(X1|X2) - H(X2|X4) <= 0        (cyclic)
/// H(X2|X4) - H(X2|X3) - H(X3|X4) <= 0        (anti-cyclic)
/// ------------------------------------------ +
/// H(X1|X4) - H(X1|X2) - H(X2|X3) - H(X3|X4) <= 0
/// ```
pub fn chord_elimination_example() -> (
    EntropicExpression,
    EntropicExpression,
    EntropicExpression,
) {
    let cyclic = chain_inequality(&["X1", "X2", "X4"]).expect("distinct labels");
    let anti = chain_inequality(&["X2", "X3", "X4"]).expect("distinct labels");
    let sum = combine(&cyclic, &anti, &rat(1), &rat(1));
    (cyclic, anti, sum)
}

/// The commutation graph and single target of the chord-elimination
/// scenario: a four-cycle with one chord, targeting the four-term chain
/// inequality that omits the chord.
pub fn chord_elimination_scenario() -> (CommutationGraph, Vec<EntropicExpression>) {
    let vertices: Vec<String> = ["X1", "X2", "X3", "X4"].iter().map(|s| s.to_string()).collect();
    let joint = make_graph(
        &vertices,
        &[("X1", "X2"), ("X2", "X3"), ("X3", "X4"), ("X1", "X4"), ("X2", "X4")],
    )
    .expect("fixed scenario graph is valid");
    let target = chain_inequality(&["X1", "X2", "X3", "X4"]).expect("distinct labels");
    (joint, vec![target])
}
