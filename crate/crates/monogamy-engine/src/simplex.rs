//! Exact phase-one simplex over rationals.
//!
//! Decides feasibility of `A q = b, q >= 0` by minimizing the sum of
//! artificial variables with Bland's rule, which cannot cycle. All
//! arithmetic is exact, so a feasible system yields exact multipliers.

use enc_inequality::Rational;
use num_traits::{One, Signed, Zero};

/// Returns `q >= 0` with `sum_j q_j * columns[j] = rhs`, or `None` when no
/// such vector exists. Deterministic for a fixed column order.
pub(crate) fn solve_nonnegative(columns: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let m = rhs.len();
    let n = columns.len();
    for col in columns {
        assert_eq!(col.len(), m, "column length mismatch");
    }

    // tableau rows: [structural | artificial | rhs], rhs made nonnegative
    let width = n + m + 1;
    let mut t: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for i in 0..m {
        let flip = rhs[i].is_negative();
        let mut row: Vec<Rational> = Vec::with_capacity(width);
        for col in columns {
            row.push(if flip { -col[i].clone() } else { col[i].clone() });
        }
        for k in 0..m {
            row.push(if k == i { Rational::one() } else { Rational::zero() });
        }
        row.push(if flip { -rhs[i].clone() } else { rhs[i].clone() });
        t.push(row);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // reduced costs for minimizing the artificial sum: r_j = c_j - sum_i T[i][j]
    let mut reduced: Vec<Rational> = (0..width - 1)
        .map(|j| {
            let cost = if j >= n { Rational::one() } else { Rational::zero() };
            let mut r = cost;
            for row in &t {
                r -= row[j].clone();
            }
            r
        })
        .collect();

    // Bland: the lowest-index column with negative reduced cost enters
    while let Some(entering) = (0..width - 1).find(|&j| reduced[j].is_negative()) {
        // ratio test, ties broken toward the lowest basis index
        let mut pivot_row: Option<usize> = None;
        let mut best: Option<Rational> = None;
        for i in 0..m {
            if t[i][entering].is_positive() {
                let ratio = &t[i][width - 1] / &t[i][entering];
                let better = match &best {
                    None => true,
                    Some(b) => &ratio < b || (&ratio == b && basis[i] < basis[pivot_row.unwrap()]),
                };
                if better {
                    best = Some(ratio);
                    pivot_row = Some(i);
                }
            }
        }
        let p = pivot_row?; // phase 1 is bounded; None would mean a bug
        let pivot = t[p][entering].clone();
        for v in t[p].iter_mut() {
            *v /= pivot.clone();
        }
        let pivot_row_vals = t[p].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != p && !row[entering].is_zero() {
                let factor = row[entering].clone();
                for (cell, pv) in row.iter_mut().zip(&pivot_row_vals) {
                    *cell -= &factor * pv;
                }
            }
        }
        if !reduced[entering].is_zero() {
            let factor = reduced[entering].clone();
            for (r, pv) in reduced.iter_mut().zip(&pivot_row_vals) {
                *r -= &factor * pv;
            }
        }
        basis[p] = entering;
    }

    // feasible iff every artificial variable ended at zero
    for (i, &b) in basis.iter().enumerate() {
        if b >= n && !t[i][width - 1].is_zero() {
            return None;
        }
    }
    let mut q = vec![Rational::zero(); n];
    for (i, &b) in basis.iter().enumerate() {
        if b < n {
            q[b] = t[i][width - 1].clone();
        }
    }
    Some(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use enc_inequality::rat;

    fn r(n: i64) -> Rational {
        rat(n)
    }

    #[test]
    fn solves_a_simple_system() {
        // q0 * (1, 0) + q1 * (1, 1) = (3, 2)  ->  q = (1, 2)
        let cols = vec![vec![r(1), r(0)], vec![r(1), r(1)]];
        let q = solve_nonnegative(&cols, &[r(3), r(2)]).unwrap();
        assert_eq!(q, vec![r(1), r(2)]);
    }

    #[test]
    fn detects_infeasibility() {
        // q0 * (1, 0) = (1, 1) has no solution
        let cols = vec![vec![r(1), r(0)]];
        assert!(solve_nonnegative(&cols, &[r(1), r(1)]).is_none());
    }

    #[test]
    fn respects_nonnegativity() {
        // (1) * q0 = (-1) is only solvable with q0 = -1 < 0
        let cols = vec![vec![r(1)]];
        assert!(solve_nonnegative(&cols, &[r(-1)]).is_none());
        // but negating the column makes it feasible
        let cols = vec![vec![r(-1)]];
        assert_eq!(solve_nonnegative(&cols, &[r(-1)]).unwrap(), vec![r(1)]);
    }

    #[test]
    fn finds_fractional_solutions() {
        // 2 q0 = 1 -> q0 = 1/2
        let cols = vec![vec![r(2)]];
        let q = solve_nonnegative(&cols, &[r(1)]).unwrap();
        assert_eq!(q[0], Rational::new(1.into(), 2.into()));
    }

    #[test]
    fn handles_redundant_rows() {
        let cols = vec![vec![r(1), r(2)], vec![r(0), r(0)]];
        let q = solve_nonnegative(&cols, &[r(2), r(4)]).unwrap();
        assert_eq!(q[0], r(2));
    }
}
