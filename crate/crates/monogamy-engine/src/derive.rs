//! Certificate search over chordal decompositions.

use std::collections::{BTreeMap, BTreeSet};

use enc_inequality::{combine, rat, EntropicExpression, Rational};
use graph_core::{chordal_edge_decompositions, ChordalDecomposition, CommutationGraph};
use num_traits::Zero;

use crate::certificate::{verify, MonogamyCertificate, OrientedTriangle};
use crate::simplex::solve_nonnegative;
use crate::DeriveError;

/// Decompositions examined before the search gives up.
pub const DEFAULT_BUDGET: usize = 10_000;

/// Result of a certificate search.
#[derive(Debug, Clone)]
pub enum SearchOutcome {
    Found(MonogamyCertificate),
    /// The decomposition stream ran dry: no certificate exists along this
    /// search route.
    Exhausted,
    /// The examination budget ran out before the stream did; existence is
    /// undecided.
    BudgetExceeded,
}

impl SearchOutcome {
    pub fn found(self) -> Option<MonogamyCertificate> {
        match self {
            SearchOutcome::Found(c) => Some(c),
            _ => None,
        }
    }
}

/// Searches for a monogamy certificate for the sum of `targets` with the
/// default budget.
pub fn derive_monogamy(
    joint: &CommutationGraph,
    targets: &[EntropicExpression],
) -> Result<SearchOutcome, DeriveError> {
    derive_monogamy_with_budget(joint, targets, DEFAULT_BUDGET)
}

/// Searches decompositions of the joint graph for triangle orientations
/// and nonnegative rational multipliers whose exact sum is the sum of the
/// targets.
///
/// Every decomposition is tried in stream order. Unit multipliers with one
/// orientation per triangle are attempted first, recovering the direct
/// telescoping construction; failing that, exact linear solving over the
/// full six-orientation basis takes over. The first certificate found
/// wins, so repeated runs return identical certificates.
pub fn derive_monogamy_with_budget(
    joint: &CommutationGraph,
    targets: &[EntropicExpression],
    budget: usize,
) -> Result<SearchOutcome, DeriveError> {
    let mut target = EntropicExpression::new();
    let mut required: BTreeSet<(String, String)> = BTreeSet::new();
    for t in targets {
        for (x, y) in t.undirected_pairs() {
            if !joint.has_edge(&x, &y) {
                return Err(DeriveError::TargetPairNotAnEdge { x, y });
            }
            required.insert((x, y));
        }
        target = combine(&target, t, &rat(1), &rat(1));
    }
    let required: Vec<(String, String)> = required.into_iter().collect();
    let m = targets.len().max(1);

    let mut stream = chordal_edge_decompositions(joint, &required, m)?;
    let mut examined = 0usize;
    loop {
        let Some(decomposition) = stream.next() else {
            return Ok(SearchOutcome::Exhausted);
        };
        if examined >= budget {
            return Ok(SearchOutcome::BudgetExceeded);
        }
        examined += 1;
        if let Some(cert) = certificate_for(&decomposition, &target) {
            debug_assert!(verify(&cert));
            return Ok(SearchOutcome::Found(cert));
        }
    }
}

/// The six oriented chain inequalities of an unordered triangle, in a
/// fixed canonical order.
fn orientations(tri: &(String, String, String)) -> [(String, String, String); 6] {
    let (a, b, c) = tri;
    [
        (a.clone(), b.clone(), c.clone()),
        (a.clone(), c.clone(), b.clone()),
        (b.clone(), a.clone(), c.clone()),
        (b.clone(), c.clone(), a.clone()),
        (c.clone(), a.clone(), b.clone()),
        (c.clone(), b.clone(), a.clone()),
    ]
}

fn chain_expr(x: &str, y: &str, z: &str) -> EntropicExpression {
    let mut e = EntropicExpression::new();
    e.add_term(x, z, rat(1));
    e.add_term(x, y, rat(-1));
    e.add_term(y, z, rat(-1));
    e
}

fn edge_key(u: &str, v: &str) -> (String, String) {
    if u <= v {
        (u.to_string(), v.to_string())
    } else {
        (v.to_string(), u.to_string())
    }
}

fn certificate_for(
    decomposition: &ChordalDecomposition,
    target: &EntropicExpression,
) -> Option<MonogamyCertificate> {
    let mut triangles: BTreeSet<(String, String, String)> = BTreeSet::new();
    for g in decomposition.subgraphs() {
        triangles.extend(g.triangles());
    }
    let triangles: Vec<(String, String, String)> = triangles.into_iter().collect();
    if triangles.is_empty() {
        return target.is_empty().then(|| {
            MonogamyCertificate::new(Vec::new(), target.clone(), decomposition.clone())
        });
    }

    if let Some(chosen) = unit_assignment(&triangles, target) {
        let oriented = chosen
            .into_iter()
            .map(|(x, y, z)| OrientedTriangle::new(&x, &y, &z, rat(1)))
            .collect();
        return Some(MonogamyCertificate::new(
            oriented,
            target.clone(),
            decomposition.clone(),
        ));
    }
    rational_assignment(&triangles, target).map(|oriented| {
        MonogamyCertificate::new(oriented, target.clone(), decomposition.clone())
    })
}

/// Depth-first search for one orientation per triangle (or none), all with
/// multiplier one, telescoping exactly to the target.
fn unit_assignment(
    triangles: &[(String, String, String)],
    target: &EntropicExpression,
) -> Option<Vec<(String, String, String)>> {
    // last triangle index that can still touch each edge
    let mut last_touch: BTreeMap<(String, String), usize> = BTreeMap::new();
    for (i, (a, b, c)) in triangles.iter().enumerate() {
        for (u, v) in [(a, b), (a, c), (b, c)] {
            last_touch.insert(edge_key(u, v), i);
        }
    }
    let residual = target.scaled(&rat(-1));
    let mut chosen = Vec::new();
    fn settled_terms_are_zero(
        residual: &EntropicExpression,
        last_touch: &BTreeMap<(String, String), usize>,
        next: usize,
    ) -> bool {
        residual.terms().all(|((x, y), c)| {
            c.is_zero() || last_touch.get(&edge_key(x, y)).is_some_and(|&l| l >= next)
        })
    }
    fn dfs(
        triangles: &[(String, String, String)],
        i: usize,
        residual: &EntropicExpression,
        last_touch: &BTreeMap<(String, String), usize>,
        chosen: &mut Vec<(String, String, String)>,
    ) -> bool {
        if i == triangles.len() {
            return residual.is_empty();
        }
        for (x, y, z) in orientations(&triangles[i]) {
            // choosing this orientation means the residual must absorb it
            let next = combine(residual, &chain_expr(&x, &y, &z), &rat(1), &rat(1));
            if settled_terms_are_zero(&next, last_touch, i + 1) {
                chosen.push((x.clone(), y.clone(), z.clone()));
                if dfs(triangles, i + 1, &next, last_touch, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        // skipping the triangle is allowed when nothing forces its edges
        if settled_terms_are_zero(residual, last_touch, i + 1)
            && dfs(triangles, i + 1, residual, last_touch, chosen) {
                return true;
            }
        false
    }
    // residual carries -(target) + chosen so far; success when it is empty
    if dfs(triangles, 0, &residual, &last_touch, &mut chosen) {
        Some(chosen)
    } else {
        None
    }
}

/// Exact linear solve for nonnegative rational multipliers over all six
/// orientations of every triangle.
fn rational_assignment(
    triangles: &[(String, String, String)],
    target: &EntropicExpression,
) -> Option<Vec<OrientedTriangle>> {
    let mut oriented: Vec<(String, String, String)> = Vec::new();
    for tri in triangles {
        oriented.extend(orientations(tri));
    }
    // row space: every directed pair seen in a column or in the target
    let mut pairs: BTreeSet<(String, String)> = target
        .terms()
        .map(|((x, y), _)| (x.clone(), y.clone()))
        .collect();
    for (x, y, z) in &oriented {
        for ((u, v), _) in chain_expr(x, y, z).terms() {
            pairs.insert((u.clone(), v.clone()));
        }
    }
    let pair_index: BTreeMap<(String, String), usize> = pairs
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let m = pair_index.len();
    let columns: Vec<Vec<Rational>> = oriented
        .iter()
        .map(|(x, y, z)| {
            let mut col = vec![Rational::zero(); m];
            for ((u, v), c) in chain_expr(x, y, z).terms() {
                col[pair_index[&(u.clone(), v.clone())]] = c.clone();
            }
            col
        })
        .collect();
    let mut rhs = vec![Rational::zero(); m];
    for ((x, y), c) in target.terms() {
        rhs[pair_index[&(x.clone(), y.clone())]] = c.clone();
    }
    let q = solve_nonnegative(&columns, &rhs)?;
    let result: Vec<OrientedTriangle> = oriented
        .into_iter()
        .zip(q)
        .filter(|(_, w)| !w.is_zero())
        .map(|((x, y, z), w)| OrientedTriangle::new(&x, &y, &z, w))
        .collect();
    Some(result)
}
