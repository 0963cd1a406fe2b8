//! Maximum-weight bipartite assignment (Hungarian algorithm).
//!
//! Weights are non-negative; absent edges are weight 0 and never appear in
//! the returned assignment. Ties between optimal assignments are broken
//! deterministically toward the lexicographically smallest row->column
//! vector, so equal inputs always produce the identical matching.

/// A maximum-weight assignment. `pairs` is sorted by row and contains only
/// positive-weight pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct Assignment {
    pub pairs: Vec<(usize, usize)>,
    pub total: f64,
}

const EPS: f64 = 1e-9;

/// Solves the assignment problem for a rectangular non-negative matrix,
/// maximizing total weight.
pub fn maximum_weight_matching(weights: &[Vec<f64>]) -> Assignment {
    let n = weights.len();
    let m = weights.first().map(|r| r.len()).unwrap_or(0);
    if n == 0 || m == 0 {
        return Assignment { pairs: Vec::new(), total: 0.0 };
    }
    debug_assert!(weights.iter().all(|r| r.len() == m), "irregular matrix");
    debug_assert!(
        weights.iter().flatten().all(|w| w.is_finite() && *w >= 0.0),
        "weights must be finite and non-negative"
    );

    let best = optimal_total(weights, n, m);
    let tol = EPS * best.abs().max(1.0);

    // Fix rows in order to the smallest column that still completes to an
    // optimal total; usize::MAX marks "unassigned".
    let mut chosen: Vec<usize> = Vec::with_capacity(n);
    let mut fixed_total = 0.0;
    for row in 0..n {
        let mut taken = vec![false; m];
        for &c in &chosen {
            if c != usize::MAX {
                taken[c] = true;
            }
        }
        let mut picked = usize::MAX;
        for col in 0..m {
            if taken[col] || weights[row][col] <= 0.0 {
                continue;
            }
            let rest = residual_total(weights, n, m, &chosen, row, Some(col));
            if fixed_total + weights[row][col] + rest + tol >= best {
                picked = col;
                break;
            }
        }
        if picked == usize::MAX {
            let rest = residual_total(weights, n, m, &chosen, row, None);
            debug_assert!(
                fixed_total + rest + tol >= best,
                "no completion reaches the optimum"
            );
        } else {
            fixed_total += weights[row][picked];
        }
        chosen.push(picked);
    }

    let pairs: Vec<(usize, usize)> = chosen
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != usize::MAX)
        .map(|(r, c)| (r, *c))
        .collect();
    let total = pairs.iter().map(|(r, c)| weights[*r][*c]).sum();
    Assignment { pairs, total }
}

/// Optimal total for the rows after `row` with `chosen` and `this` excluded.
fn residual_total(
    weights: &[Vec<f64>],
    n: usize,
    m: usize,
    chosen: &[usize],
    row: usize,
    this: Option<usize>,
) -> f64 {
    let mut blocked = vec![false; m];
    for &c in chosen {
        if c != usize::MAX {
            blocked[c] = true;
        }
    }
    if let Some(c) = this {
        blocked[c] = true;
    }
    let rows: Vec<usize> = (row + 1..n).collect();
    let cols: Vec<usize> = (0..m).filter(|c| !blocked[*c]).collect();
    if rows.is_empty() || cols.is_empty() {
        return 0.0;
    }
    let sub: Vec<Vec<f64>> = rows
        .iter()
        .map(|r| cols.iter().map(|c| weights[*r][*c]).collect())
        .collect();
    optimal_total(&sub, rows.len(), cols.len())
}

/// O(n^3) Hungarian on the cost form; returns the maximum total weight.
fn optimal_total(weights: &[Vec<f64>], n: usize, m: usize) -> f64 {
    // The algorithm wants rows <= cols; transpose if needed.
    if n > m {
        let t: Vec<Vec<f64>> = (0..m).map(|j| (0..n).map(|i| weights[i][j]).collect()).collect();
        return optimal_total(&t, m, n);
    }
    let inf = f64::INFINITY;
    let mut u = vec![0.0; n + 1];
    let mut v = vec![0.0; m + 1];
    let mut matched_row = vec![0usize; m + 1];
    let mut way = vec![0usize; m + 1];

    for i in 1..=n {
        matched_row[0] = i;
        let mut j0 = 0usize;
        let mut minv = vec![inf; m + 1];
        let mut used = vec![false; m + 1];
        loop {
            used[j0] = true;
            let i0 = matched_row[j0];
            let mut delta = inf;
            let mut j1 = 0usize;
            for j in 1..=m {
                if used[j] {
                    continue;
                }
                // Minimize negated weight.
                let cur = -weights[i0 - 1][j - 1] - u[i0] - v[j];
                if cur < minv[j] {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if minv[j] < delta {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for j in 0..=m {
                if used[j] {
                    u[matched_row[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if matched_row[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            matched_row[j0] = matched_row[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }

    let mut total = 0.0;
    for j in 1..=m {
        let i = matched_row[j];
        if i > 0 {
            let w = weights[i - 1][j - 1];
            if w > 0.0 {
                total += w;
            }
        }
    }
    total
}

/// Exhaustive assignment search; exponential, test oracle only.
pub fn brute_force_matching(weights: &[Vec<f64>]) -> Assignment {
    let n = weights.len();
    let m = weights.first().map(|r| r.len()).unwrap_or(0);
    let mut best_vec: Vec<usize> = vec![usize::MAX; n];
    let mut best_total = 0.0;
    let mut cur: Vec<usize> = Vec::with_capacity(n);
    let mut taken = vec![false; m];

    fn rec(
        weights: &[Vec<f64>],
        n: usize,
        m: usize,
        row: usize,
        cur: &mut Vec<usize>,
        taken: &mut Vec<bool>,
        total: f64,
        best_vec: &mut Vec<usize>,
        best_total: &mut f64,
    ) {
        if row == n {
            let better = total > *best_total + EPS
                || ((total - *best_total).abs() <= EPS && cur[..] < best_vec[..]);
            if better {
                *best_total = total;
                best_vec.clear();
                best_vec.extend_from_slice(cur);
            }
            return;
        }
        for col in 0..m {
            if taken[col] || weights[row][col] <= 0.0 {
                continue;
            }
            taken[col] = true;
            cur.push(col);
            rec(weights, n, m, row + 1, cur, taken, total + weights[row][col], best_vec, best_total);
            cur.pop();
            taken[col] = false;
        }
        cur.push(usize::MAX);
        rec(weights, n, m, row + 1, cur, taken, total, best_vec, best_total);
        cur.pop();
    }

    rec(weights, n, m, 0, &mut cur, &mut taken, 0.0, &mut best_vec, &mut best_total);
    let pairs: Vec<(usize, usize)> = best_vec
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != usize::MAX)
        .map(|(r, c)| (r, *c))
        .collect();
    Assignment { pairs, total: best_total }
}
