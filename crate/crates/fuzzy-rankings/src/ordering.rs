//! Ordering fuzzy rankings by cumulative dominance.
//!
//! The cumulative matrix accumulates each row left to right: entry (i, j) is
//! the membership of object i in positions 1..=j+1. One object dominates
//! another when its cumulative row is pointwise at least as large and
//! strictly larger somewhere: it reaches every prefix of positions with at
//! least as much mass. Comparisons use an absolute tolerance so float noise
//! in the prefix sums cannot manufacture spurious strict dominance.

use crate::error::{Error, Result};
use crate::fuzzy::FuzzyRanking;
use crate::labels::ObjectLabels;
use crate::matrix::SquareMatrix;
use crate::tolerance::ToleranceConfig;

/// Row-wise prefix sums of a fuzzy ranking. The last column is the row sum,
/// 1 within tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct CumulativeMatrix {
    labels: ObjectLabels,
    entries: SquareMatrix,
}

impl CumulativeMatrix {
    pub fn labels(&self) -> &ObjectLabels {
        &self.labels
    }

    pub fn entries(&self) -> &SquareMatrix {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.entries.get(row, col)
    }

    pub fn row(&self, row: usize) -> &[f64] {
        self.entries.row(row)
    }
}

pub fn cumulative(f: &FuzzyRanking) -> CumulativeMatrix {
    CumulativeMatrix {
        labels: f.labels().clone(),
        entries: f.entries().cumulative_rows(),
    }
}

/// How one object's cumulative row compares to another's.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DominanceOutcome {
    Dominates,
    DominatedBy,
    /// Rows agree everywhere within tolerance.
    Tied,
    /// Each row is strictly ahead somewhere: the pair has no order.
    Incomparable,
}

impl DominanceOutcome {
    pub fn flipped(self) -> Self {
        match self {
            DominanceOutcome::Dominates => DominanceOutcome::DominatedBy,
            DominanceOutcome::DominatedBy => DominanceOutcome::Dominates,
            other => other,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            DominanceOutcome::Dominates => "dominates",
            DominanceOutcome::DominatedBy => "dominated-by",
            DominanceOutcome::Tied => "tied",
            DominanceOutcome::Incomparable => "incomparable",
        }
    }
}

fn compare_rows(hr: &[f64], hs: &[f64], eps: f64) -> DominanceOutcome {
    let mut ahead = false;
    let mut behind = false;
    for (&a, &b) in hr.iter().zip(hs) {
        if a > b + eps {
            ahead = true;
        } else if b > a + eps {
            behind = true;
        }
    }
    match (ahead, behind) {
        (true, false) => DominanceOutcome::Dominates,
        (false, true) => DominanceOutcome::DominatedBy,
        (false, false) => DominanceOutcome::Tied,
        (true, true) => DominanceOutcome::Incomparable,
    }
}

/// Compares objects `r` and `s` of `f` by cumulative dominance.
pub fn dominates(f: &FuzzyRanking, r: &str, s: &str, tol: &ToleranceConfig) -> Result<DominanceOutcome> {
    let ri = f.labels().index_of(r).ok_or_else(|| Error::UnknownLabel(r.to_string()))?;
    let si = f.labels().index_of(s).ok_or_else(|| Error::UnknownLabel(s.to_string()))?;
    if ri == si {
        return Err(Error::SameObject(r.to_string()));
    }
    let h = f.entries().cumulative_rows();
    Ok(compare_rows(h.row(ri), h.row(si), tol.eps_val()))
}

/// Full pairwise dominance analysis of a ranking.
#[derive(Debug, Clone, PartialEq)]
pub struct DominanceReport {
    labels: ObjectLabels,
    cumulative: CumulativeMatrix,
    /// outcome[r][s]: how object r compares to object s; the diagonal is Tied.
    outcomes: Vec<Vec<DominanceOutcome>>,
    /// 1-based rank per object: 1 + the number of objects strictly dominating it.
    ranks: Vec<usize>,
    /// Index pairs (r, s), r < s, with no order between them.
    incomparable: Vec<(usize, usize)>,
    /// Groups of mutually tied objects (size at least 2), each sorted.
    tie_groups: Vec<Vec<usize>>,
}

impl DominanceReport {
    pub fn labels(&self) -> &ObjectLabels {
        &self.labels
    }

    pub fn cumulative(&self) -> &CumulativeMatrix {
        &self.cumulative
    }

    pub fn outcome(&self, r: usize, s: usize) -> DominanceOutcome {
        self.outcomes[r][s]
    }

    pub fn rank(&self, object: usize) -> usize {
        self.ranks[object]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn incomparable_pairs(&self) -> &[(usize, usize)] {
        &self.incomparable
    }

    pub fn tie_groups(&self) -> &[Vec<usize>] {
        &self.tie_groups
    }

    /// Object indices sorted by rank, alphabetical within equal ranks.
    pub fn order(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.labels.len()).collect();
        idx.sort_by(|&a, &b| {
            self.ranks[a]
                .cmp(&self.ranks[b])
                .then_with(|| self.labels.get(a).cmp(self.labels.get(b)))
        });
        idx
    }
}

#[allow(clippy::needless_range_loop)] // triangular pair loops; iterators read worse
pub fn dominance_report(f: &FuzzyRanking, tol: &ToleranceConfig) -> DominanceReport {
    let n = f.n();
    let cumulative = cumulative(f);
    let eps = tol.eps_val();
    let mut outcomes = vec![vec![DominanceOutcome::Tied; n]; n];
    for r in 0..n {
        for s in r + 1..n {
            let o = compare_rows(cumulative.row(r), cumulative.row(s), eps);
            outcomes[r][s] = o;
            outcomes[s][r] = o.flipped();
        }
    }
    let ranks: Vec<usize> = (0..n)
        .map(|r| {
            1 + (0..n)
                .filter(|&s| s != r && outcomes[s][r] == DominanceOutcome::Dominates)
                .count()
        })
        .collect();
    let mut incomparable = Vec::new();
    for r in 0..n {
        for s in r + 1..n {
            if outcomes[r][s] == DominanceOutcome::Incomparable {
                incomparable.push((r, s));
            }
        }
    }
    // tie groups: connected components of the tie relation
    let mut group_of: Vec<Option<usize>> = vec![None; n];
    let mut tie_groups: Vec<Vec<usize>> = Vec::new();
    for r in 0..n {
        if group_of[r].is_some() {
            continue;
        }
        let mut members = vec![r];
        let mut queue = vec![r];
        group_of[r] = Some(tie_groups.len());
        while let Some(u) = queue.pop() {
            for v in 0..n {
                if v != u && group_of[v].is_none() && outcomes[u][v] == DominanceOutcome::Tied {
                    group_of[v] = Some(tie_groups.len());
                    members.push(v);
                    queue.push(v);
                }
            }
        }
        if members.len() > 1 {
            members.sort_unstable();
            tie_groups.push(members);
        }
    }
    DominanceReport {
        labels: f.labels().clone(),
        cumulative,
        outcomes,
        ranks,
        incomparable,
        tie_groups,
    }
}
