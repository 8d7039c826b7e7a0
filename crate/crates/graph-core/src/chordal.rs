//! Chordality recognition: maximum cardinality search followed by a
//! perfect elimination ordering check.

use std::collections::BTreeSet;

use crate::CommutationGraph;

/// True iff every cycle of length four or more has a chord.
///
/// Maximum cardinality search yields a vertex order that is a perfect
/// elimination ordering exactly when the graph is chordal, so producing a
/// candidate order and verifying it decides chordality. Empty and
/// three-vertex graphs are trivially chordal.
pub fn is_chordal(g: &CommutationGraph) -> bool {
    let n = g.vertex_count();
    if n <= 3 {
        return true;
    }
    let adj = g.adjacency();
    let order = maximum_cardinality_search(&adj);
    is_perfect_elimination_ordering(&adj, &order)
}

/// Visits vertices by descending count of already-visited neighbors,
/// breaking ties toward the smaller vertex index. Returns the visit order
/// reversed, which is the candidate elimination ordering.
fn maximum_cardinality_search(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut visit_order = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best = usize::MAX;
        for v in 0..n {
            if !visited[v] && (best == usize::MAX || weight[v] > weight[best]) {
                best = v;
            }
        }
        visited[best] = true;
        visit_order.push(best);
        for &u in &adj[best] {
            if !visited[u] {
                weight[u] += 1;
            }
        }
    }
    visit_order.reverse();
    visit_order
}

/// Checks that eliminating vertices in `order` always removes a vertex
/// whose not-yet-eliminated neighbors form a clique. The standard shortcut
/// suffices: the later neighbors of v, minus the earliest of them, must all
/// be adjacent to that earliest neighbor.
fn is_perfect_elimination_ordering(adj: &[Vec<usize>], order: &[usize]) -> bool {
    let n = adj.len();
    let mut position = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let neighbor_sets: Vec<BTreeSet<usize>> = adj
        .iter()
        .map(|nbrs| nbrs.iter().copied().collect())
        .collect();
    for (i, &v) in order.iter().enumerate() {
        let later: Vec<usize> = adj[v]
            .iter()
            .copied()
            .filter(|&u| position[u] > i)
            .collect();
        let Some(&first) = later.iter().min_by_key(|&&u| position[u]) else {
            continue;
        };
        for &u in &later {
            if u != first && !neighbor_sets[first].contains(&u) {
                return false;
            }
        }
    }
    true
}
