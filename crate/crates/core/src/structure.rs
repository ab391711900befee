//! Exhaustive checks of the structural facts about the simplex generator
//! matrices and their codewords.
//!
//! Each check returns `Ok(Ok(()))` when the property holds, `Ok(Err(detail))`
//! with the first violation when it does not, and `Err` only when the input
//! is out of reach (caps, bad `k`).

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::gray::hamming_weight;
use crate::ring::Ring;
use crate::simplex::{beta_length, GeneratorMatrix, SimplexCode};
use crate::valuation::Valuation;
use crate::Limits;

pub type Outcome = std::result::Result<(), String>;

fn tally(ring: &Ring, word: &[u32]) -> Vec<u64> {
    let mut counts = vec![0u64; ring.size() as usize];
    for &x in word {
        counts[x as usize] += 1;
    }
    counts
}

fn ideal_ranks(ring: &Ring, j: u32) -> Vec<u32> {
    if j >= ring.s() {
        return vec![0];
    }
    ring.ideal_elements(j).expect("j < s").into_iter().map(|x| x.rank()).collect()
}

/// Row `i` (1-based) of `G_k^alpha` is `(rho_0 .. rho_{q^s-1})`, each repeated
/// `q^{s(k-i)}` times, and the whole block repeated `q^{s(i-1)}` times.
pub fn alpha_row_closed_form(matrix: &GeneratorMatrix) -> Outcome {
    let ring = matrix.ring();
    let size = ring.size() as usize;
    let k = matrix.k();
    for (i, row) in matrix.raw_rows().iter().enumerate() {
        let inner = size.pow((k - 1 - i) as u32);
        let outer = size.pow(i as u32);
        let expected: Vec<u32> = (0..size as u32).flat_map(|x| std::iter::repeat_n(x, inner)).collect();
        if row.len() != expected.len() * outer {
            return Err(format!("row {} has length {}, want {}", i + 1, row.len(), expected.len() * outer));
        }
        if let Some(pos) = row.chunks(expected.len()).position(|c| c != expected) {
            return Err(format!("row {} differs in block {pos}", i + 1));
        }
    }
    Ok(())
}

/// For each row `s_i` of `G_k^alpha` and each `j < s`, `gamma^j s_i` holds every
/// element of `<gamma^j>` exactly `q^{j+s(k-1)}` times, so its Hamming weight
/// is `q^{sk} - q^{j+s(k-1)}`.
pub fn gamma_multiple_rows(matrix: &GeneratorMatrix) -> Outcome {
    let ring = matrix.ring();
    let (q, s, k) = (ring.q() as u64, ring.s(), matrix.k() as u32);
    for (i, row) in matrix.raw_rows().iter().enumerate() {
        for j in 0..s {
            let g = ring.gamma_pow(j).rank();
            let scaled: Vec<u32> = row.iter().map(|&x| ring.mul_raw(g, x)).collect();
            let counts = tally(ring, &scaled);
            let want = q.pow(j + s * (k - 1));
            let ideal = ideal_ranks(ring, j);
            if let Some(&bad) = ideal.iter().find(|&&a| counts[a as usize] != want) {
                return Err(format!("row {}, j={j}: element {bad} appears {} times, want {want}", i + 1, counts[bad as usize]));
            }
            if ideal.len() as u64 * want != scaled.len() as u64 {
                return Err(format!("row {}, j={j}: entries outside <gamma^{j}>", i + 1));
            }
            let w = hamming_weight(&scaled) as u64;
            if w != q.pow(s * k) - want {
                return Err(format!("row {}, j={j}: weight {w}, want {}", i + 1, q.pow(s * k) - want));
            }
        }
    }
    Ok(())
}

/// Every row of `G_k^beta` with `k >= 2` holds each element of `<gamma>` exactly
/// `L(k-1)` times and units in its other `q^{s(k-1)}` positions.
pub fn beta_row_content(matrix: &GeneratorMatrix) -> Result<Outcome> {
    let ring = matrix.ring();
    let (q, s, k) = (ring.q() as u64, ring.s(), matrix.k() as u32);
    if k < 2 {
        return Err(Error::UnsupportedK(k));
    }
    let prev = beta_length(q, s, k - 1).ok_or(Error::Overflow("beta length"))?;
    let units = q.pow(s * (k - 1));
    for (i, row) in matrix.raw_rows().iter().enumerate() {
        let counts = tally(ring, row);
        for a in ideal_ranks(ring, 1) {
            if counts[a as usize] != prev {
                return Ok(Err(format!("row {}: element {a} appears {} times, want {prev}", i + 1, counts[a as usize])));
            }
        }
        let found = row.iter().filter(|&&x| ring.valuation_raw(x) == Valuation::Finite(0)).count() as u64;
        if found != units {
            return Ok(Err(format!("row {}: {found} units, want {units}", i + 1)));
        }
    }
    Ok(Ok(()))
}

/// Every nonzero codeword `c` of the alpha code is a permutation of
/// `gamma^{nu(c)} s_1`, compared as multisets.
pub fn alpha_codeword_content(code: &SimplexCode, limits: &Limits) -> Result<Outcome> {
    let g = code.generator();
    let ring = g.ring();
    let total = g.codeword_count(limits)?;
    let first = &g.raw_rows()[0];
    let reference: Vec<Vec<u64>> = (0..ring.s())
        .map(|v| {
            let gv = ring.gamma_pow(v).rank();
            tally(ring, &first.iter().map(|&x| ring.mul_raw(gv, x)).collect::<Vec<_>>())
        })
        .collect();
    let mut failure = None;
    g.for_each_raw(0..total, |coeffs, word| {
        if failure.is_some() {
            return;
        }
        let nu = word.iter().map(|&x| ring.valuation_raw(x)).min().unwrap_or(Valuation::Infinity);
        if let Valuation::Finite(v) = nu {
            if tally(ring, word) != reference[v as usize] {
                failure = Some(format!("codeword with coefficients {coeffs:?} is not a permutation of gamma^{v} s_1"));
            }
        }
    });
    Ok(failure.map_or(Ok(()), Err))
}

/// Every nonzero codeword `c` of the beta code repeats each element of
/// `<gamma^{nu+1}>` exactly `q^nu L(k-1)` times and has its other
/// `q^{s(k-1)}` coordinates of valuation exactly `nu`.
pub fn beta_codeword_content(code: &SimplexCode, limits: &Limits) -> Result<Outcome> {
    let g = code.generator();
    let ring = g.ring();
    let (q, s, k) = (ring.q() as u64, ring.s(), code.k());
    let total = g.codeword_count(limits)?;
    let prev = beta_length(q, s, k - 1).ok_or(Error::Overflow("beta length"))?;
    let rest = q.pow(s * (k - 1));
    let ideals: Vec<Vec<u32>> = (1..=s).map(|j| ideal_ranks(ring, j)).collect();
    let mut failure = None;
    g.for_each_raw(0..total, |coeffs, word| {
        if failure.is_some() {
            return;
        }
        let nu = word.iter().map(|&x| ring.valuation_raw(x)).min().unwrap_or(Valuation::Infinity);
        let Valuation::Finite(v) = nu else { return };
        let counts = tally(ring, word);
        let want = q.pow(v) * prev;
        if let Some(&a) = ideals[v as usize].iter().find(|&&a| counts[a as usize] != want) {
            failure = Some(format!("coefficients {coeffs:?}: element {a} appears {} times, want {want}", counts[a as usize]));
            return;
        }
        let exact = word.iter().filter(|&&x| ring.valuation_raw(x) == nu).count() as u64;
        if exact != rest {
            failure = Some(format!("coefficients {coeffs:?}: {exact} coordinates of valuation {v}, want {rest}"));
        }
    });
    Ok(failure.map_or(Ok(()), Err))
}

/// Number of codewords of each valuation `j < s`, in order, followed by the
/// count of the zero codeword.
pub fn valuation_census(matrix: &GeneratorMatrix, limits: &Limits) -> Result<Vec<u64>> {
    let ring = matrix.ring();
    let s = ring.s() as usize;
    let total = matrix.codeword_count(limits)?;
    let mut census = vec![0u64; s + 1];
    matrix.for_each_raw(0..total, |_, word| {
        match word.iter().map(|&x| ring.valuation_raw(x)).min().unwrap_or(Valuation::Infinity) {
            Valuation::Finite(v) => census[v as usize] += 1,
            Valuation::Infinity => census[s] += 1,
        }
    });
    Ok(census)
}

/// `q^{k(s-j)} - q^{k(s-j-1)}` codewords of valuation `j`, one of valuation infinity.
pub fn predicted_census(q: u64, s: u32, k: u32) -> Vec<u64> {
    let mut out: Vec<u64> = (0..s).map(|j| q.pow(k * (s - j)) - q.pow(k * (s - j - 1))).collect();
    out.push(1);
    out
}

pub fn check_valuation_census(matrix: &GeneratorMatrix, limits: &Limits) -> Result<Outcome> {
    let ring = matrix.ring();
    let found = valuation_census(matrix, limits)?;
    let want = predicted_census(ring.q() as u64, ring.s(), matrix.k() as u32);
    Ok(if found == want { Ok(()) } else { Err(format!("census {found:?}, want {want:?}")) })
}

/// The code has `|R|^k` distinct codewords and its generator contains every
/// column of the `k x k` identity.
pub fn check_free(matrix: &GeneratorMatrix, limits: &Limits) -> Result<Outcome> {
    let total = matrix.codeword_count(limits)?;
    let mut seen = HashSet::with_capacity(total as usize);
    matrix.for_each_raw(0..total, |_, word| {
        seen.insert(word.to_vec());
    });
    if seen.len() as u64 != total {
        return Ok(Err(format!("{} distinct codewords, want {total}", seen.len())));
    }
    let k = matrix.k();
    let columns: HashSet<Vec<u32>> = (0..matrix.n()).map(|j| matrix.raw_rows().iter().map(|r| r[j]).collect()).collect();
    for i in 0..k {
        let e: Vec<u32> = (0..k).map(|r| u32::from(r == i)).collect();
        if !columns.contains(&e) {
            return Ok(Err(format!("identity column e_{} missing", i + 1)));
        }
    }
    Ok(Ok(()))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::ring::RingSpec;
    use crate::simplex::CodeFamily;

    fn code(spec: RingSpec, family: CodeFamily, k: u32) -> SimplexCode {
        SimplexCode::new(Arc::new(Ring::new(spec).unwrap()), family, k, &Limits::default()).unwrap()
    }

    fn specs() -> Vec<RingSpec> {
        vec![RingSpec::zps(2, 2), RingSpec::zps(3, 2), RingSpec::galois(2, 2, 2), RingSpec::fqu(2, 1, 3), RingSpec::zps(3, 1)]
    }

    #[test]
    fn alpha_rows() {
        for spec in specs() {
            for k in 1..=2 {
                let c = code(spec.clone(), CodeFamily::Alpha, k);
                assert_eq!(alpha_row_closed_form(c.generator()), Ok(()));
                assert_eq!(gamma_multiple_rows(c.generator()), Ok(()), "{spec} k={k}");
            }
        }
    }

    #[test]
    fn beta_rows() {
        for spec in specs() {
            let c = code(spec.clone(), CodeFamily::Beta, 2);
            assert_eq!(beta_row_content(c.generator()).unwrap(), Ok(()), "{spec}");
        }
        let c = code(RingSpec::zps(2, 2), CodeFamily::Beta, 1);
        assert_eq!(beta_row_content(c.generator()), Err(Error::UnsupportedK(1)));
    }

    #[test]
    fn codeword_contents() {
        let l = Limits::default();
        for spec in specs() {
            for k in 1..=2 {
                let a = code(spec.clone(), CodeFamily::Alpha, k);
                assert_eq!(alpha_codeword_content(&a, &l).unwrap(), Ok(()), "{spec} k={k}");
                let b = code(spec.clone(), CodeFamily::Beta, k);
                assert_eq!(beta_codeword_content(&b, &l).unwrap(), Ok(()), "{spec} k={k}");
            }
        }
    }

    #[test]
    fn census() {
        let l = Limits::default();
        assert_eq!(predicted_census(3, 2, 2), vec![72, 8, 1]);
        assert_eq!(predicted_census(2, 2, 1), vec![2, 1, 1]);
        for spec in specs() {
            for family in [CodeFamily::Alpha, CodeFamily::Beta] {
                let c = code(spec.clone(), family, 2);
                assert_eq!(check_valuation_census(c.generator(), &l).unwrap(), Ok(()));
                assert_eq!(check_free(c.generator(), &l).unwrap(), Ok(()));
            }
        }
    }

    #[test]
    fn detects_a_broken_matrix() {
        let ring = Arc::new(Ring::new(RingSpec::zps(2, 2)).unwrap());
        let bad = GeneratorMatrix::from_raw(&ring, crate::simplex::MatrixKind::Custom, vec![vec![0, 2, 2, 0]]);
        assert!(alpha_row_closed_form(&bad).is_err());
        assert!(check_free(&bad, &Limits::default()).unwrap().is_err());
    }
}
