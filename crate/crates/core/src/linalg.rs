//! Small dense exact-rational linear algebra: row reduction, a reusable
//! linear solver, and an LP feasibility check (used by the nice-pair test).

use crate::ratio::{q0, q1, Q};
use num::Zero;

pub type Matrix = Vec<Vec<Q>>;

/// Solver for `M x = v` with a fixed matrix `M` (columns = basis vectors),
/// prepared once and reused for many right-hand sides.
pub struct LinSolver {
    rows: usize,
    cols: usize,
    /// Row-reduced form of M.
    red: Matrix,
    /// Transform with `trans * M = red`.
    trans: Matrix,
    /// pivot column of each leading row (row-echelon, in order).
    pivots: Vec<usize>,
}

impl LinSolver {
    pub fn new(m: &Matrix) -> LinSolver {
        let rows = m.len();
        let cols = if rows == 0 { 0 } else { m[0].len() };
        let mut red = m.clone();
        let mut trans: Matrix = (0..rows)
            .map(|i| (0..rows).map(|j| if i == j { q1() } else { q0() }).collect())
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..cols {
            let Some(p) = (r..rows).find(|&i| !red[i][c].is_zero()) else {
                continue;
            };
            red.swap(r, p);
            trans.swap(r, p);
            let inv = q1() / red[r][c].clone();
            for x in red[r].iter_mut() {
                *x *= inv.clone();
            }
            for x in trans[r].iter_mut() {
                *x *= inv.clone();
            }
            for i in 0..rows {
                if i != r && !red[i][c].is_zero() {
                    let f = red[i][c].clone();
                    for j in 0..cols {
                        let t = red[r][j].clone() * f.clone();
                        red[i][j] -= t;
                    }
                    for j in 0..rows {
                        let t = trans[r][j].clone() * f.clone();
                        trans[i][j] -= t;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows {
                break;
            }
        }
        LinSolver { rows, cols, red, trans, pivots }
    }

    /// Solves `M x = v`. Returns `None` when inconsistent. Free coordinates
    /// (non-pivot columns) are set to zero, so the answer is deterministic.
    ///
    /// With free coordinates forced to zero the residual `M x - v` vanishes
    /// exactly when `v` lies in the span of the pivot columns, which is the
    /// column space; the non-pivot rows of `trans * v` detect the rest.
    pub fn solve(&self, v: &[Q]) -> Option<Vec<Q>> {
        assert_eq!(v.len(), self.rows, "rhs dimension mismatch");
        let w: Vec<Q> = (0..self.rows)
            .map(|i| {
                (0..self.rows)
                    .map(|j| self.trans[i][j].clone() * v[j].clone())
                    .fold(q0(), |a, b| a + b)
            })
            .collect();
        for i in self.pivots.len()..self.rows {
            if !w[i].is_zero() {
                return None;
            }
        }
        let mut x = vec![q0(); self.cols];
        for (row, &col) in self.pivots.iter().enumerate() {
            x[col] = w[row].clone();
        }
        Some(x)
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Rank of a set of row vectors.
pub fn rank_of(rows: &[Vec<Q>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut m: Matrix = rows.to_vec();
    let cols = m[0].len();
    let mut rank = 0usize;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = q1() / m[rank][c].clone();
        for x in m[rank].iter_mut() {
            *x *= inv.clone();
        }
        for i in 0..m.len() {
            if i != rank && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let t = m[rank][j].clone() * f.clone();
                    m[i][j] -= t;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Exact feasibility of `A x = b`, `x >= 0` (phase-I simplex with Bland's
/// rule; rationals, so no tolerance games).
pub fn lp_feasible(a: &Matrix, b: &[Q]) -> bool {
    let m = a.len();
    if m == 0 {
        return true;
    }
    let n = a[0].len();
    // Tableau with artificial variables; minimize their sum.
    let mut t: Matrix = Vec::with_capacity(m + 1);
    for i in 0..m {
        let mut row: Vec<Q> = Vec::with_capacity(n + m + 1);
        let flip = b[i] < q0();
        for j in 0..n {
            row.push(if flip { -a[i][j].clone() } else { a[i][j].clone() });
        }
        for j in 0..m {
            row.push(if i == j { q1() } else { q0() });
        }
        row.push(if flip { -b[i].clone() } else { b[i].clone() });
        t.push(row);
    }
    // Objective row: sum of artificial rows (so reduced costs start consistent).
    let mut obj = vec![q0(); n + m + 1];
    for i in 0..m {
        for j in 0..n + m + 1 {
            let v = t[i][j].clone();
            obj[j] += v;
        }
    }
    let mut basis: Vec<usize> = (n..n + m).collect();
    let width = n + m;
    loop {
        // Entering: first column with positive reduced cost (Bland).
        let Some(enter) = (0..width).find(|&j| obj[j] > q0() && !basis.contains(&j)) else {
            break;
        };
        // Leaving: min ratio, tie-break by smallest basis index (Bland).
        let mut leave: Option<usize> = None;
        let mut best: Option<Q> = None;
        for i in 0..m {
            if t[i][enter] > q0() {
                let ratio = t[i][width].clone() / t[i][enter].clone();
                let better = match &best {
                    None => true,
                    Some(b) => ratio < *b || (ratio == *b && basis[i] < basis[leave.unwrap()]),
                };
                if better {
                    best = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        let Some(li) = leave else {
            // Unbounded phase-I objective cannot happen, but bail safely.
            return false;
        };
        let piv = t[li][enter].clone();
        for x in t[li].iter_mut() {
            *x /= piv.clone();
        }
        for i in 0..m {
            if i != li && !t[i][enter].is_zero() {
                let f = t[i][enter].clone();
                for j in 0..=width {
                    let v = t[li][j].clone() * f.clone();
                    t[i][j] -= v;
                }
            }
        }
        if !obj[enter].is_zero() {
            let f = obj[enter].clone();
            for j in 0..=width {
                let v = t[li][j].clone() * f.clone();
                obj[j] -= v;
            }
        }
        basis[li] = enter;
    }
    obj[width].is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::qi;

    #[test]
    fn solves_square() {
        let m = vec![vec![qi(2), qi(1)], vec![qi(1), qi(3)]];
        let s = LinSolver::new(&m);
        let x = s.solve(&[qi(5), qi(10)]).unwrap();
        assert_eq!(x, vec![qi(1), qi(3)]);
        assert_eq!(s.rank(), 2);
    }

    #[test]
    fn detects_inconsistency() {
        // Columns are dependent; rhs outside the column space.
        let m = vec![vec![qi(1)], vec![qi(2)]];
        let s = LinSolver::new(&m);
        assert!(s.solve(&[qi(1), qi(3)]).is_none());
        assert_eq!(s.solve(&[qi(2), qi(4)]).unwrap(), vec![qi(2)]);
    }

    #[test]
    fn lp_feasibility() {
        // x1 + x2 = 1, x >= 0: feasible.
        assert!(lp_feasible(&vec![vec![qi(1), qi(1)]], &[qi(1)]));
        // x1 + x2 = -1, x >= 0: infeasible.
        assert!(!lp_feasible(&vec![vec![qi(1), qi(1)]], &[qi(-1)]));
        // x1 - x2 = 3 with x1 <= ... plain equality feasible.
        assert!(lp_feasible(&vec![vec![qi(1), qi(-1)]], &[qi(3)]));
        // Two contradictory equations.
        assert!(!lp_feasible(
            &vec![vec![qi(1), qi(0)], vec![qi(1), qi(0)]],
            &[qi(1), qi(2)]
        ));
    }
}
