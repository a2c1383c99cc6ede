//! Decomposition of a doubly stochastic ranking into crisp rankings.
//!
//! Every doubly stochastic matrix is a convex combination of permutation
//! matrices. The procedure here is the classical greedy one: force a perfect
//! matching through the smallest positive entry of the residual, peel that
//! permutation off with the smallest matched value as coefficient, repeat.
//! Each round zeroes the entry it was forced through, so the support shrinks
//! every time and at most (n-1)^2 + 1 terms are produced.

use crate::crisp::CrispRanking;
use crate::error::{Error, Result};
use crate::fuzzy::{FuzzyRanking, Mode};
use crate::matrix::SquareMatrix;
use crate::tolerance::ToleranceConfig;

/// Entries at or below this are treated as zero when building the support.
const SUPPORT_EPS: f64 = 1e-12;
/// Subtraction dust below this snaps to exact zero.
const SNAP_EPS: f64 = 1e-15;

/// Writes `f` as positive coefficients with crisp rankings, in extraction
/// order. Coefficients sum to 1 and the combination reproduces the input
/// entrywise, both up to the accumulated tolerance.
///
/// The input must have been validated in strict mode. `NoPerfectMatching`
/// signals an input too far from doubly stochastic to decompose cleanly,
/// which validation normally rules out.
pub fn decompose(f: &FuzzyRanking, tol: &ToleranceConfig) -> Result<Vec<(f64, CrispRanking)>> {
    if f.mode() != Mode::Strict {
        return Err(Error::NotDoublyStochastic);
    }
    let n = f.n();
    let mut residual = f.entries().clone();
    let mut terms = Vec::new();
    for _ in 0..n * n + 1 {
        let Some((fi, fj)) = min_supported_cell(&residual) else {
            break;
        };
        let perm = matching(&residual, Some((fi, fj))).or_else(|| matching(&residual, None));
        let Some(perm) = perm else {
            break; // the residual check below reports this honestly
        };
        let theta = (0..n)
            .map(|i| residual.get(i, perm[i]))
            .fold(f64::INFINITY, f64::min);
        for (i, &c) in perm.iter().enumerate() {
            let v = residual.get(i, c) - theta;
            residual.set(i, c, if v.abs() <= SNAP_EPS { 0.0 } else { v });
        }
        let positions: Vec<usize> = perm.iter().map(|&c| c + 1).collect();
        let ranking = CrispRanking::from_positions(f.labels().clone(), &positions)
            .expect("a perfect matching is a bijection");
        terms.push((theta, ranking));
    }
    let worst = residual.max_entry();
    let allowed = tol.eps_val().max(n as f64 * tol.eps_sum());
    if worst > allowed {
        return Err(Error::NoPerfectMatching { residual: worst });
    }
    Ok(terms)
}

/// Smallest supported entry, first in row-major order among equals.
fn min_supported_cell(m: &SquareMatrix) -> Option<(usize, usize)> {
    let n = m.n();
    let mut best: Option<(usize, usize, f64)> = None;
    for i in 0..n {
        for j in 0..n {
            let v = m.get(i, j);
            if v > SUPPORT_EPS && best.is_none_or(|(_, _, bv)| v < bv) {
                best = Some((i, j, v));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// Perfect matching on the support of `m` (Kuhn's augmenting paths), rows
/// processed in order, columns scanned ascending, so ties break the same way
/// every run. With `force`, that cell is fixed and the rest are matched on
/// the subgraph without its row and column. Returns the column per row.
fn matching(m: &SquareMatrix, force: Option<(usize, usize)>) -> Option<Vec<usize>> {
    let n = m.n();
    let mut match_col = vec![usize::MAX; n];
    let (skip_row, skip_col) = match force {
        Some((r, c)) => {
            match_col[c] = r;
            (Some(r), Some(c))
        }
        None => (None, None),
    };
    for r in 0..n {
        if Some(r) == skip_row {
            continue;
        }
        let mut seen = vec![false; n];
        if !augment(m, r, skip_col, &mut seen, &mut match_col) {
            return None;
        }
    }
    let mut perm = vec![usize::MAX; n];
    for (c, &r) in match_col.iter().enumerate() {
        if r != usize::MAX {
            perm[r] = c;
        }
    }
    Some(perm)
}

fn augment(
    m: &SquareMatrix,
    r: usize,
    skip_col: Option<usize>,
    seen: &mut [bool],
    match_col: &mut [usize],
) -> bool {
    for c in 0..m.n() {
        if Some(c) == skip_col || seen[c] || m.get(r, c) <= SUPPORT_EPS {
            continue;
        }
        seen[c] = true;
        if match_col[c] == usize::MAX || augment(m, match_col[c], skip_col, seen, match_col) {
            match_col[c] = r;
            return true;
        }
    }
    false
}
