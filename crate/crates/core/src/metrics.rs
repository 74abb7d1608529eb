//! Rank-quality metrics: Kendall's tau-b and the monotonicity index.
//!
//! Centrality scores are floating-point sums, so two scores are considered
//! tied when their relative difference is at most [`TIE_REL_TOL`] (absolute
//! [`TIE_ABS_TOL`] near zero). Tie classes are formed by chaining adjacent
//! values in sorted order; both metrics operate on the resulting classes.

use thiserror::Error;

/// Relative tolerance under which two scores count as tied.
pub const TIE_REL_TOL: f64 = 1e-9;
/// Absolute tolerance for scores near zero.
pub const TIE_ABS_TOL: f64 = 1e-12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MetricsError {
    #[error("score vectors have different lengths: {x} vs {y}")]
    LengthMismatch { x: usize, y: usize },
    #[error("need at least 2 scores, got {0}")]
    TooShort(usize),
    #[error("tau-b is undefined: all values tied in one of the vectors")]
    AllTied,
}

/// Partition of score indices into tie classes, ordered by ascending score.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankGroups {
    /// Class id per input element; ids follow ascending score order.
    pub class_of: Vec<usize>,
    /// Number of elements in each class.
    pub sizes: Vec<usize>,
}

impl RankGroups {
    pub fn class_count(&self) -> usize {
        self.sizes.len()
    }
}

fn tied(a: f64, b: f64) -> bool {
    let diff = (a - b).abs();
    diff <= TIE_ABS_TOL || diff <= TIE_REL_TOL * a.abs().max(b.abs())
}

/// Groups scores into tie classes by sorted-order chaining.
pub fn rank_groups(scores: &[f64]) -> RankGroups {
    let n = scores.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_unstable_by(|&a, &b| scores[a].total_cmp(&scores[b]));

    let mut class_of = vec![0usize; n];
    let mut sizes = Vec::new();
    let mut current = 0usize;
    for (k, &i) in order.iter().enumerate() {
        if k == 0 {
            sizes.push(0);
        } else {
            let prev = order[k - 1];
            if !tied(scores[prev], scores[i]) {
                current += 1;
                sizes.push(0);
            }
        }
        class_of[i] = current;
        sizes[current] += 1;
    }
    RankGroups { class_of, sizes }
}

/// Kendall's tau-b between two score vectors, with full pair bookkeeping.
#[derive(Debug, Clone, PartialEq)]
pub struct TauResult {
    pub tau: f64,
    pub concordant: u64,
    pub discordant: u64,
    /// Pairs tied in the first vector (pairs tied in both are included).
    pub tied_x: u64,
    /// Pairs tied in the second vector (pairs tied in both are included).
    pub tied_y: u64,
    pub pairs: u64,
}

/// tau-b = (n_con − n_dis) / sqrt((N − n_t1)(N − n_t2)) over all n(n−1)/2
/// pairs, computed in O(n log n) with a merge-sort discordance count.
pub fn kendall_tau_b(x: &[f64], y: &[f64]) -> Result<TauResult, MetricsError> {
    if x.len() != y.len() {
        return Err(MetricsError::LengthMismatch { x: x.len(), y: y.len() });
    }
    let n = x.len();
    if n < 2 {
        return Err(MetricsError::TooShort(n));
    }

    let cx = rank_groups(x).class_of;
    let cy = rank_groups(y).class_of;

    // Sort by (x class, y class); within an x-tie block y is ascending, so
    // the later inversion count sees no spurious discordance inside blocks.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_unstable_by_key(|&i| (cx[i], cy[i]));

    let run_pairs = |key: &dyn Fn(usize) -> (usize, usize), seq: &[usize]| -> u64 {
        let mut total = 0u64;
        let mut run = 1u64;
        for k in 1..seq.len() {
            if key(seq[k]) == key(seq[k - 1]) {
                run += 1;
            } else {
                total += run * (run - 1) / 2;
                run = 1;
            }
        }
        total + run * (run - 1) / 2
    };
    let tied_x = run_pairs(&|i| (cx[i], 0), &order);
    let tied_both = run_pairs(&|i| (cx[i], cy[i]), &order);

    let mut ys: Vec<usize> = order.iter().map(|&i| cy[i]).collect();
    let discordant = merge_count_inversions(&mut ys);

    let mut y_sorted: Vec<usize> = cy.clone();
    y_sorted.sort_unstable();
    let tied_y = {
        let mut total = 0u64;
        let mut run = 1u64;
        for k in 1..n {
            if y_sorted[k] == y_sorted[k - 1] {
                run += 1;
            } else {
                total += run * (run - 1) / 2;
                run = 1;
            }
        }
        total + run * (run - 1) / 2
    };

    let pairs = (n as u64) * (n as u64 - 1) / 2;
    let dx = pairs - tied_x;
    let dy = pairs - tied_y;
    if dx == 0 || dy == 0 {
        return Err(MetricsError::AllTied);
    }
    let concordant = pairs - tied_x - tied_y + tied_both - discordant;
    let tau = (concordant as f64 - discordant as f64) / ((dx as f64) * (dy as f64)).sqrt();

    Ok(TauResult {
        tau: tau.clamp(-1.0, 1.0),
        concordant,
        discordant,
        tied_x,
        tied_y,
        pairs,
    })
}

/// Counts pairs (i < j) with v[i] > v[j]; ties are not counted.
fn merge_count_inversions(v: &mut [usize]) -> u64 {
    let n = v.len();
    let mut buf = vec![0usize; n];
    let mut inversions = 0u64;
    let mut width = 1;
    while width < n {
        let mut lo = 0;
        while lo + width < n {
            let mid = lo + width;
            let hi = (mid + width).min(n);
            let (mut i, mut j, mut k) = (lo, mid, lo);
            while i < mid && j < hi {
                if v[i] <= v[j] {
                    buf[k] = v[i];
                    i += 1;
                } else {
                    buf[k] = v[j];
                    j += 1;
                    inversions += (mid - i) as u64;
                }
                k += 1;
            }
            buf[k..hi].copy_from_slice(if i < mid { &v[i..mid] } else { &v[j..hi] });
            v[lo..hi].copy_from_slice(&buf[lo..hi]);
            lo = hi;
        }
        width *= 2;
    }
    inversions
}

/// Monotonicity index `M = (1 − Σ N_r(N_r−1) / (N(N−1)))²`: 1 when every
/// score is distinct, 0 when all scores tie.
pub fn monotonicity(scores: &[f64]) -> Result<f64, MetricsError> {
    let n = scores.len() as u64;
    if n < 2 {
        return Err(MetricsError::TooShort(scores.len()));
    }
    let groups = rank_groups(scores);
    let tied: u64 = groups.sizes.iter().map(|&s| (s as u64) * (s as u64 - 1)).sum();
    let frac = tied as f64 / (n * (n - 1)) as f64;
    Ok((1.0 - frac) * (1.0 - frac))
}
