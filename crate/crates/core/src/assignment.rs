//! Square integer assignment problems: Hungarian method with dual
//! potentials, plus extraction of the lexicographically smallest optimum.

use alloc::vec;
use alloc::vec::Vec;

/// An optimal assignment of a square cost matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    pub cost: i64,
    /// `row_to_col[i]` is the column assigned to row `i`.
    pub row_to_col: Vec<usize>,
}

struct Solved {
    cost: i64,
    row_to_col: Vec<usize>,
    u: Vec<i64>,
    v: Vec<i64>,
}

fn hungarian(cost: &[Vec<i64>]) -> Solved {
    let n = cost.len();
    // 1-based arrays; index 0 is the virtual root.
    let mut u = vec![0i64; n + 1];
    let mut v = vec![0i64; n + 1];
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0;
        let mut minv = vec![i64::MAX; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta = i64::MAX;
            let mut j1 = 0;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if cur < minv[j] {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if minv[j] < delta {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut row_to_col = vec![0; n];
    for j in 1..=n {
        row_to_col[p[j] - 1] = j - 1;
    }
    Solved { cost: -v[0], row_to_col, u: u[1..].to_vec(), v: v[1..].to_vec() }
}

/// Minimum-cost perfect assignment of a square matrix.
///
/// # Panics
/// If the matrix is not square.
pub fn min_cost_assignment(cost: &[Vec<i64>]) -> Assignment {
    assert!(cost.iter().all(|r| r.len() == cost.len()), "cost matrix must be square");
    let s = hungarian(cost);
    Assignment { cost: s.cost, row_to_col: s.row_to_col }
}

/// Among all optimal assignments, the one whose `row_to_col` vector is
/// lexicographically smallest.
///
/// With optimal duals, an assignment is optimal iff it only uses tight
/// entries, so the search runs on the tight-entry graph: rows are fixed in
/// order to the smallest column that still admits a perfect matching.
pub fn lex_min_assignment(cost: &[Vec<i64>]) -> Assignment {
    assert!(cost.iter().all(|r| r.len() == cost.len()), "cost matrix must be square");
    let n = cost.len();
    let s = hungarian(cost);
    let tight: Vec<Vec<bool>> = (0..n)
        .map(|i| (0..n).map(|j| cost[i][j] == s.u[i] + s.v[j]).collect())
        .collect();
    let mut row_to_col = s.row_to_col;
    let mut col_to_row = vec![0; n];
    for (i, &j) in row_to_col.iter().enumerate() {
        col_to_row[j] = i;
    }
    let mut fixed_col = vec![false; n];
    for i in 0..n {
        for j in 0..n {
            if !tight[i][j] || fixed_col[j] {
                continue;
            }
            if row_to_col[i] == j {
                break;
            }
            // Give j to i; its current row r must reach i's old column c
            // through an alternating path that avoids fixed columns (and hence
            // the rows holding them).
            let c = row_to_col[i];
            let r = col_to_row[j];
            fixed_col[j] = true;
            let mut seen = vec![false; n];
            let mut path = Vec::new();
            if alternating_path(r, c, &tight, &col_to_row, &fixed_col, &mut seen, &mut path) {
                // path lists (row, new column) pairs starting at r and ending at c.
                for &(row, col) in &path {
                    row_to_col[row] = col;
                    col_to_row[col] = row;
                }
                row_to_col[i] = j;
                col_to_row[j] = i;
                break;
            }
            fixed_col[j] = false;
        }
        fixed_col[row_to_col[i]] = true;
    }
    Assignment { cost: s.cost, row_to_col }
}

fn alternating_path(
    row: usize,
    target: usize,
    tight: &[Vec<bool>],
    col_to_row: &[usize],
    fixed_col: &[bool],
    seen: &mut [bool],
    path: &mut Vec<(usize, usize)>,
) -> bool {
    for col in 0..tight.len() {
        if !tight[row][col] || fixed_col[col] || seen[col] {
            continue;
        }
        seen[col] = true;
        path.push((row, col));
        if col == target || alternating_path(col_to_row[col], target, tight, col_to_row, fixed_col, seen, path) {
            return true;
        }
        path.pop();
    }
    false
}
