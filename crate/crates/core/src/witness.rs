//! Lower-bound instances: anchor sequences that no cycle in a given power of
//! a path or cycle can visit in order.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::{power, Graph};
use crate::oracle::oracle_cycle;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathWitness {
    pub n: usize,
    /// 1-indexed labels along the path.
    pub anchors: Vec<usize>,
    pub power: usize,
}

/// Path instance for `k >= 4`: odd-indexed anchors first, a block of
/// `2m - 1` spacers, then the even-indexed anchors (`k = 2m` or `2m + 1`).
/// Odd `k` gets one trailing spacer so that `n = 2k - 1`.
pub fn witness_path_lower(k: usize) -> Result<PathWitness> {
    if k < 4 {
        return Err(Error::InvalidInput(format!("path witnesses need k >= 4, got {k}")));
    }
    let m = k / 2;
    let odd_count = k - m; // v1, v3, ...
    let mut label = vec![0usize; k];
    for j in 0..odd_count {
        label[2 * j] = j + 1;
    }
    let evens_start = odd_count + (2 * m - 1);
    for j in 0..m {
        label[2 * j + 1] = evens_start + j + 1;
    }
    Ok(PathWitness {
        n: 2 * k - 1,
        anchors: label,
        power: 3 * k / 2 - 3,
    })
}

/// Cycle layout for `m >= 3` on `C_n`: `v1, v3, ..., v_{2m-1}`, a block of
/// `n - 3m + 1` spacers, `v2, v4, ..., v_{2m-4}, v_{2m}, v_{2m-2}`, and a
/// block of `m - 1` spacers. Returns 0-indexed anchor positions; the power
/// is `m`.
pub fn witness_cycle_lower(m: usize, n: usize) -> Result<Vec<usize>> {
    if m < 3 {
        return Err(Error::InvalidInput(format!("cycle witnesses need m >= 3, got {m}")));
    }
    if n < 3 * m + 2 {
        return Err(Error::TooFewVertices {
            needed: 3 * m + 2,
            found: n,
        });
    }
    let mut anchors = vec![0usize; 2 * m];
    for j in 0..m {
        anchors[2 * j] = j;
    }
    let base = m + (n - 3 * m + 1);
    let mut evens: Vec<usize> = (1..=m - 2).map(|j| 2 * j).collect();
    evens.push(2 * m);
    evens.push(2 * m - 2);
    for (offset, v) in evens.into_iter().enumerate() {
        anchors[v - 1] = base + offset;
    }
    Ok(anchors)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleWitnessSearch {
    /// Smallest `n` where no ordered cycle exists, if found within the cap.
    pub n: Option<usize>,
    pub anchors: Vec<usize>,
    /// Sizes tried, with whether an ordered cycle was found.
    pub tried: Vec<(usize, bool)>,
    pub elapsed: Duration,
}

/// Tries `n = 3m + 2, 3m + 3, ...` up to `max_n` and stops at the first `n`
/// for which the oracle proves `(C_n)^m` has no cycle through the layout.
pub fn find_cycle_lower(m: usize, max_n: usize) -> Result<CycleWitnessSearch> {
    let started = Instant::now();
    let mut tried = Vec::new();
    for n in 3 * m + 2..=max_n {
        let anchors = witness_cycle_lower(m, n)?;
        let h = power(&Graph::cycle(n), m)?;
        let found = oracle_cycle(&h, &anchors, false, max_n)?.is_some();
        tried.push((n, found));
        if !found {
            return Ok(CycleWitnessSearch {
                n: Some(n),
                anchors,
                tried,
                elapsed: started.elapsed(),
            });
        }
    }
    Ok(CycleWitnessSearch {
        n: None,
        anchors: Vec::new(),
        tried,
        elapsed: started.elapsed(),
    })
}
