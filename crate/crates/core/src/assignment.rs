//! Exact minimum-cost perfect assignment with forbidden edges.
//!
//! Shortest-augmenting-path formulation with dual potentials, run on
//! arbitrary-precision rationals. Forbidden edges are `None` and are
//! handled structurally: a stuck alternating tree means no perfect
//! matching avoids them, never a surrogate large cost.

use num::{BigRational, Zero};

/// Returns the row -> column assignment of minimum total cost, or `None`
/// when no perfect matching uses only allowed edges.
pub(crate) fn min_cost_assignment(cost: &[Vec<Option<BigRational>>]) -> Option<Vec<usize>> {
    let n = cost.len();
    if n == 0 {
        return Some(Vec::new());
    }
    debug_assert!(cost.iter().all(|row| row.len() == n));

    // 1-indexed columns with a virtual column 0, as in the classical
    // formulation. p[j] = row currently matched to column j (0 = none yet).
    let mut u = vec![BigRational::zero(); n + 1];
    let mut v = vec![BigRational::zero(); n + 1];
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];

    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0usize;
        let mut minv: Vec<Option<BigRational>> = vec![None; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut j1: Option<usize> = None;
            let mut delta: Option<BigRational> = None;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                if let Some(c) = &cost[i0 - 1][j - 1] {
                    let cur = c - &u[i0] - &v[j];
                    if minv[j].as_ref().map_or(true, |m| cur < *m) {
                        minv[j] = Some(cur);
                        way[j] = j0;
                    }
                }
                if let Some(m) = &minv[j] {
                    if delta.as_ref().map_or(true, |d| m < d) {
                        delta = Some(m.clone());
                        j1 = Some(j);
                    }
                }
            }
            let (j1, delta) = match (j1, delta) {
                (Some(j1), Some(delta)) => (j1, delta),
                // The alternating tree cannot reach any unused column
                // through allowed edges: no perfect matching exists.
                _ => return None,
            };
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += &delta;
                    v[j] -= &delta;
                } else if let Some(m) = minv[j].take() {
                    minv[j] = Some(m - &delta);
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        // Unwind the augmenting path.
        while j0 != 0 {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        }
    }

    let mut row_to_col = vec![0usize; n];
    for j in 1..=n {
        row_to_col[p[j] - 1] = j - 1;
    }
    Some(row_to_col)
}
