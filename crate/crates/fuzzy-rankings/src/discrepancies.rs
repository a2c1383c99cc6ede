//! Known divergences from the source worked example.
//!
//! The similarity and indecisiveness definitions, applied literally to the
//! matrices of the source worked example, give different numbers than that
//! example states. This crate sides with the definitions; when a command is
//! run on exactly those matrices it attaches a note saying so, so nobody
//! burns an afternoon reconciling the two by hand.
//!
//! Detection is by exact entrywise equality with the flagged matrices (same
//! decimal literals parse to the same floats, so file inputs match bitwise).
//! Labels play no part in it.

use crate::fuzzy::FuzzyRanking;
use crate::penalty::PenaltyMatrix;

const REFERENCE_A: [[f64; 4]; 4] = [
    [0.60, 0.30, 0.10, 0.0],
    [0.30, 0.30, 0.20, 0.20],
    [0.10, 0.30, 0.40, 0.20],
    [0.0, 0.10, 0.30, 0.60],
];

const REFERENCE_B: [[f64; 4]; 4] = [
    [0.40, 0.30, 0.20, 0.10],
    [0.30, 0.25, 0.25, 0.20],
    [0.20, 0.25, 0.30, 0.25],
    [0.10, 0.20, 0.25, 0.45],
];

const REFERENCE_PENALTY: [[f64; 4]; 4] = [
    [0.0, 0.5, 0.8, 1.0],
    [0.5, 0.0, 0.3, 0.5],
    [0.8, 0.3, 0.0, 0.2],
    [1.0, 0.5, 0.2, 0.0],
];

fn rows_match(mat: &crate::matrix::SquareMatrix, reference: &[[f64; 4]; 4]) -> bool {
    mat.n() == 4
        && (0..4).all(|i| (0..4).all(|j| mat.get(i, j) == reference[i][j]))
}

/// Note attached to similarity runs on the flagged ranking pair (either
/// order) with the flagged penalty matrix.
pub fn similarity_note(a: &FuzzyRanking, b: &FuzzyRanking, p: &PenaltyMatrix) -> Option<String> {
    let pair_matches = (rows_match(a.entries(), &REFERENCE_A) && rows_match(b.entries(), &REFERENCE_B))
        || (rows_match(a.entries(), &REFERENCE_B) && rows_match(b.entries(), &REFERENCE_A));
    if pair_matches && rows_match(p.entries(), &REFERENCE_PENALTY) {
        Some(
            "the source worked example states dis = 0.275, dis_max = 2.3 and sim = 0.880 \
             for these inputs; the definitions computed here give dis = 0.23, \
             dis_max = 1.65 and sim = 0.860606"
                .to_string(),
        )
    } else {
        None
    }
}

/// Note attached to indecisiveness runs on the flagged ranking.
pub fn indecisiveness_note(f: &FuzzyRanking) -> Option<String> {
    if rows_match(f.entries(), &REFERENCE_B) {
        Some(
            "the source worked example states an indecisiveness index of 0.871 for this \
             matrix; the definition computed here gives 0.954046"
                .to_string(),
        )
    } else {
        None
    }
}
