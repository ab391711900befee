//! The `A^{t_1, .., t_s}` matrices over `Z_{p^s}` whose trimmed forms give
//! the alpha simplex generators.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ring::{Family, Ring, RingSpec};
use crate::simplex::{GeneratorMatrix, MatrixKind};
use crate::Limits;

/// Builds `A^{t_1, .., t_s}` over `Z_{p^s}` from `A^{1,0,..,0} = (1)`.
///
/// Step `A_i` prepends the row `(0, p^{i-1}, 2 p^{i-1}, .., (p^{s-i+1} - 1) p^{i-1})`,
/// each value spanning one copy of the current matrix, and places
/// `p^{s-i+1}` copies of the current matrix below it. The `t_1 - 1` steps of
/// `A_1` run first, then the `t_2` steps of `A_2`, and so on.
pub fn gh_a_matrix(p: u32, s: u32, t: &[u32], limits: &Limits) -> Result<GeneratorMatrix> {
    if t.len() != s as usize || t.first().is_none_or(|&t1| t1 < 1) {
        return Err(Error::InvalidTypeVector(t.to_vec()));
    }
    let ring = Arc::new(Ring::with_cap(RingSpec::zps(p, s), limits.max_elements)?);
    let mut needed: u128 = 1;
    for (i, &ti) in t.iter().enumerate() {
        let steps = if i == 0 { ti - 1 } else { ti };
        let width = (p as u128).pow(s - i as u32);
        for _ in 0..steps {
            needed = needed.saturating_mul(width);
        }
    }
    if needed > limits.max_columns as u128 {
        return Err(Error::SizeCapExceeded { needed, cap: limits.max_columns });
    }
    let mut rows: Vec<Vec<u32>> = vec![vec![1]];
    for (i, &ti) in t.iter().enumerate() {
        let steps = if i == 0 { ti - 1 } else { ti };
        let step = p.pow(i as u32);
        let values = p.pow(s - i as u32);
        for _ in 0..steps {
            let width = rows[0].len();
            let mut top = Vec::with_capacity(width * values as usize);
            for v in 0..values {
                top.extend(std::iter::repeat_n(v * step, width));
            }
            let mut next = vec![top];
            next.extend(rows.iter().map(|r| r.repeat(values as usize)));
            rows = next;
        }
    }
    Ok(GeneratorMatrix::from_raw(&ring, MatrixKind::GhA, rows))
}

/// Whether `G_k^alpha` equals `A^{k+1,0,..,0}` with its all-one last row removed.
pub fn alpha_equals_trimmed_a(ring: &Arc<Ring>, k: u32, limits: &Limits) -> Result<bool> {
    if ring.family() != Family::Zps {
        return Err(Error::NotZps);
    }
    let mut t = vec![0; ring.s() as usize];
    t[0] = k + 1;
    let a = gh_a_matrix(ring.p(), ring.s(), &t, limits)?;
    let alpha = GeneratorMatrix::alpha(ring, k, limits)?;
    Ok(a.without_last_row().raw_rows() == alpha.raw_rows())
}
