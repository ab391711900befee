//! Griesmer bound `n >= sum_{i<k} ceil(d / q^i)` and the verdicts for the
//! simplex codes.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::simplex::{alpha_length, beta_length, CodeFamily};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GriesmerReport {
    pub n: u64,
    pub k: u32,
    pub d: u64,
    pub bound: u64,
    pub optimal: bool,
    /// `n - bound`; negative only for parameters no linear code can have.
    pub slack: i128,
}

impl fmt::Display for GriesmerReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} k={} d={} bound={} slack={} {}",
            self.n,
            self.k,
            self.d,
            self.bound,
            self.slack,
            if self.optimal { "optimal" } else { "not optimal" }
        )
    }
}

/// The bound for a code of rank `k` and minimum Hamming distance `d` over a
/// ring with residue field size `q`.
pub fn griesmer_report(n: u64, k: u32, d: u64, q: u64) -> GriesmerReport {
    let mut bound = 0u64;
    let mut qi = 1u64;
    for _ in 0..k {
        bound += d.div_ceil(qi);
        qi = qi.saturating_mul(q);
    }
    let slack = n as i128 - bound as i128;
    GriesmerReport { n, k, d, bound, optimal: slack == 0, slack }
}

/// Report for `S_k^alpha` or `S_k^beta` using their proven minimum distances
/// `(q-1) q^{sk-1}` and `q^{s(k-1)}`.
pub fn simplex_griesmer(family: CodeFamily, q: u64, s: u32, k: u32) -> Result<GriesmerReport> {
    if k == 0 {
        return Err(Error::UnsupportedK(0));
    }
    let overflow = || Error::Overflow("griesmer parameters");
    let (n, d) = match family {
        CodeFamily::Alpha => {
            let n = alpha_length(q, s, k).ok_or_else(overflow)?;
            (n, (q - 1) * (n / q))
        }
        CodeFamily::Beta => {
            let n = beta_length(q, s, k).ok_or_else(overflow)?;
            (n, q.checked_pow(s * (k - 1)).ok_or_else(overflow)?)
        }
    };
    Ok(griesmer_report(n, k, d, q))
}
