//! Generator matrices of the simplex codes and exhaustive enumeration of the
//! codes they generate.

use std::collections::HashMap;
use std::fmt;
use std::ops::Range;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{Ring, RingElement};
use crate::valuation::Valuation;
use crate::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CodeFamily {
    Alpha,
    Beta,
}

impl CodeFamily {
    pub fn name(self) -> &'static str {
        match self {
            CodeFamily::Alpha => "alpha",
            CodeFamily::Beta => "beta",
        }
    }
}

impl fmt::Display for CodeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for CodeFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "alpha" => Ok(CodeFamily::Alpha),
            "beta" => Ok(CodeFamily::Beta),
            other => Err(Error::Parse(format!("unknown code family {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MatrixKind {
    #[serde(rename = "alpha")]
    Alpha,
    #[serde(rename = "beta")]
    Beta,
    #[serde(rename = "gh_a")]
    GhA,
    #[serde(rename = "custom")]
    Custom,
}

impl MatrixKind {
    pub fn name(self) -> &'static str {
        match self {
            MatrixKind::Alpha => "alpha",
            MatrixKind::Beta => "beta",
            MatrixKind::GhA => "gh_a",
            MatrixKind::Custom => "custom",
        }
    }
}

impl std::str::FromStr for MatrixKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "alpha" => Ok(MatrixKind::Alpha),
            "beta" => Ok(MatrixKind::Beta),
            "gh_a" => Ok(MatrixKind::GhA),
            "custom" => Ok(MatrixKind::Custom),
            other => Err(Error::Parse(format!("unknown matrix kind {other:?}"))),
        }
    }
}

fn checked_pow(base: u64, exp: u64) -> Option<u64> {
    base.checked_pow(u32::try_from(exp).ok()?)
}

/// `q^{sk}`, the length of the alpha code and the size of both codes.
pub fn alpha_length(q: u64, s: u32, k: u32) -> Option<u64> {
    checked_pow(q, s as u64 * k as u64)
}

/// `q^{(s-1)(k-1)} (q^k - 1)/(q - 1)`, the length of the beta code.
pub fn beta_length(q: u64, s: u32, k: u32) -> Option<u64> {
    if k == 0 {
        return Some(0);
    }
    let head = checked_pow(q, (s as u64 - 1) * (k as u64 - 1))?;
    let geometric = (checked_pow(q, k as u64)? - 1) / (q - 1);
    head.checked_mul(geometric)
}

/// A `k x n` matrix over a chain ring.
#[derive(Debug, Clone)]
pub struct GeneratorMatrix {
    ring: Arc<Ring>,
    kind: MatrixKind,
    rows: Vec<Vec<u32>>,
}

impl PartialEq for GeneratorMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.ring.spec().to_string() == other.ring.spec().to_string() && self.rows == other.rows
    }
}

impl Eq for GeneratorMatrix {}

/// A witness that two columns are ring multiples: `g_i = lambda * g_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColumnMultiple {
    pub i: usize,
    pub j: usize,
    pub lambda: RingElement,
}

impl GeneratorMatrix {
    /// `G_k^alpha`: the top row lists `rho_0, rho_1, ..` each repeated
    /// `q^{s(k-1)}` times, above `q^s` side-by-side copies of `G_{k-1}^alpha`.
    pub fn alpha(ring: &Arc<Ring>, k: u32, limits: &Limits) -> Result<Self> {
        if k == 0 {
            return Err(Error::UnsupportedK(0));
        }
        let n = ring.size() as u128;
        let needed = n.checked_pow(k).unwrap_or(u128::MAX);
        if needed > limits.max_columns as u128 {
            return Err(Error::SizeCapExceeded { needed, cap: limits.max_columns });
        }
        Ok(GeneratorMatrix { ring: ring.clone(), kind: MatrixKind::Alpha, rows: alpha_rows(ring.size(), k) })
    }

    /// `G_k^beta`: `G_1 = (1)`, and for `k > 1`
    /// `[ 1..1 | a_0 gamma .. | a_1 gamma .. | .. ; G_{k-1}^alpha | G_{k-1}^beta | G_{k-1}^beta | .. ]`
    /// where `a_0 gamma < a_1 gamma < ..` are the elements of `<gamma>`.
    pub fn beta(ring: &Arc<Ring>, k: u32, limits: &Limits) -> Result<Self> {
        if k == 0 {
            return Err(Error::UnsupportedK(0));
        }
        let needed = beta_length(ring.q() as u64, ring.s(), k).map(u128::from).unwrap_or(u128::MAX);
        if needed > limits.max_columns as u128 {
            return Err(Error::SizeCapExceeded { needed, cap: limits.max_columns });
        }
        let gamma_ideal: Vec<u32> = ring.ideal_elements(1)?.into_iter().map(RingElement::rank).collect();
        let mut rows = vec![vec![1u32]];
        for level in 2..=k {
            let alpha = alpha_rows(ring.size(), level - 1);
            let prev_len = rows[0].len();
            let mut top = vec![1u32; alpha[0].len()];
            for &a in &gamma_ideal {
                top.extend(std::iter::repeat_n(a, prev_len));
            }
            let mut next = vec![top];
            for (alpha_row, beta_row) in alpha.iter().zip(&rows) {
                let mut row = alpha_row.clone();
                for _ in 0..gamma_ideal.len() {
                    row.extend_from_slice(beta_row);
                }
                next.push(row);
            }
            rows = next;
        }
        Ok(GeneratorMatrix { ring: ring.clone(), kind: MatrixKind::Beta, rows })
    }

    pub fn from_rows(ring: &Arc<Ring>, kind: MatrixKind, rows: Vec<Vec<RingElement>>) -> Result<Self> {
        let n = rows.first().map(Vec::len).ok_or(Error::EmptyVector)?;
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Parse("rows must be nonempty and of equal length".into()));
        }
        if rows.iter().flatten().any(|&x| !ring.contains(x)) {
            return Err(Error::MixedRings);
        }
        let rows = rows.into_iter().map(|r| r.into_iter().map(RingElement::rank).collect()).collect();
        Ok(GeneratorMatrix { ring: ring.clone(), kind, rows })
    }

    pub(crate) fn from_raw(ring: &Arc<Ring>, kind: MatrixKind, rows: Vec<Vec<u32>>) -> Self {
        GeneratorMatrix { ring: ring.clone(), kind, rows }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn entry(&self, i: usize, j: usize) -> RingElement {
        self.ring.element(self.rows[i][j]).expect("entries lie in the ring")
    }

    pub fn row(&self, i: usize) -> Vec<RingElement> {
        self.rows[i].iter().map(|&x| self.entry_of(x)).collect()
    }

    pub fn column(&self, j: usize) -> Vec<RingElement> {
        self.rows.iter().map(|r| self.entry_of(r[j])).collect()
    }

    /// Entries as ranks, row by row.
    pub fn raw_rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    fn entry_of(&self, rank: u32) -> RingElement {
        self.ring.element(rank).expect("entries lie in the ring")
    }

    /// The same matrix with its last row removed.
    pub fn without_last_row(&self) -> GeneratorMatrix {
        let mut rows = self.rows.clone();
        rows.pop();
        GeneratorMatrix { ring: self.ring.clone(), kind: self.kind, rows }
    }

    /// Looks for columns with `g_i = lambda g_j` other than the trivial
    /// `lambda = 1, i = j`. Scans `j`, then `lambda` in ascending order, then `i`.
    pub fn first_column_multiple(&self) -> Option<ColumnMultiple> {
        let n = self.n();
        let columns: Vec<Vec<u32>> = (0..n).map(|j| self.rows.iter().map(|r| r[j]).collect()).collect();
        let mut index: HashMap<&[u32], Vec<usize>> = HashMap::new();
        for (i, c) in columns.iter().enumerate() {
            index.entry(c.as_slice()).or_default().push(i);
        }
        let mut scaled = vec![0u32; self.k()];
        for (j, col) in columns.iter().enumerate() {
            for lambda in 0..self.ring.size() {
                for (dst, &x) in scaled.iter_mut().zip(col) {
                    *dst = self.ring.mul_raw(lambda, x);
                }
                if let Some(hits) = index.get(scaled.as_slice()) {
                    if let Some(&i) = hits.iter().find(|&&i| !(lambda == 1 && i == j)) {
                        return Some(ColumnMultiple { i, j, lambda: self.entry_of(lambda) });
                    }
                }
            }
        }
        None
    }

    pub fn columns_distinct(&self) -> bool {
        self.first_column_multiple().is_none()
    }

    /// Number of codewords, `|R|^k`, if it fits the enumeration cap.
    pub fn codeword_count(&self, limits: &Limits) -> Result<u64> {
        let needed = (self.ring.size() as u128).checked_pow(self.k() as u32).unwrap_or(u128::MAX);
        if needed > limits.max_codewords as u128 {
            return Err(Error::EnumerationCapExceeded { needed, cap: limits.max_codewords });
        }
        Ok(needed as u64)
    }

    /// All codewords `sum_i alpha_i u_i`, coefficient vectors in ascending
    /// rank order of `R^k` with the rightmost coordinate fastest.
    pub fn codewords(&self, limits: &Limits) -> Result<Codewords<'_>> {
        let total = self.codeword_count(limits)?;
        Ok(Codewords::new(self, 0..total))
    }

    /// The codewords whose coefficient ranks fall in `range`.
    pub fn codewords_in(&self, range: Range<u64>, limits: &Limits) -> Result<Codewords<'_>> {
        let total = self.codeword_count(limits)?;
        Ok(Codewords::new(self, range.start.min(total)..range.end.min(total)))
    }

    /// Calls `f(coefficients, word)` on raw ranks for every codeword in
    /// `range`, reusing buffers.
    pub(crate) fn for_each_raw(&self, range: Range<u64>, mut f: impl FnMut(&[u32], &[u32])) {
        let mut coeffs = self.coefficients_at(range.start);
        let mut word = vec![0u32; self.n()];
        for _ in range {
            self.combine(&coeffs, &mut word);
            f(&coeffs, &word);
            self.increment(&mut coeffs);
        }
    }

    fn coefficients_at(&self, mut rank: u64) -> Vec<u32> {
        let size = self.ring.size() as u64;
        let mut coeffs = vec![0u32; self.k()];
        for c in coeffs.iter_mut().rev() {
            *c = (rank % size) as u32;
            rank /= size;
        }
        coeffs
    }

    fn increment(&self, coeffs: &mut [u32]) {
        for c in coeffs.iter_mut().rev() {
            *c += 1;
            if *c < self.ring.size() {
                return;
            }
            *c = 0;
        }
    }

    fn combine(&self, coeffs: &[u32], word: &mut [u32]) {
        word.iter_mut().for_each(|w| *w = 0);
        for (&c, row) in coeffs.iter().zip(&self.rows) {
            match c {
                0 => {}
                1 => {
                    for (w, &x) in word.iter_mut().zip(row) {
                        *w = self.ring.add_raw(*w, x);
                    }
                }
                _ => {
                    for (w, &x) in word.iter_mut().zip(row) {
                        *w = self.ring.add_raw(*w, self.ring.mul_raw(c, x));
                    }
                }
            }
        }
    }
}

/// Rows of `G_k^alpha` for a ring with `size` elements, via the recursion.
fn alpha_rows(size: u32, k: u32) -> Vec<Vec<u32>> {
    let mut rows = vec![(0..size).collect::<Vec<u32>>()];
    for _ in 2..=k {
        let block = rows[0].len();
        let mut top = Vec::with_capacity(block * size as usize);
        for rho in 0..size {
            top.extend(std::iter::repeat_n(rho, block));
        }
        let mut next = vec![top];
        for row in &rows {
            next.push(row.repeat(size as usize));
        }
        rows = next;
    }
    rows
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Codeword {
    pub coefficients: Vec<RingElement>,
    pub word: Vec<RingElement>,
}

pub struct Codewords<'a> {
    matrix: &'a GeneratorMatrix,
    coeffs: Vec<u32>,
    remaining: u64,
}

impl<'a> Codewords<'a> {
    fn new(matrix: &'a GeneratorMatrix, range: Range<u64>) -> Self {
        Codewords { matrix, coeffs: matrix.coefficients_at(range.start), remaining: range.end.saturating_sub(range.start) }
    }
}

impl Iterator for Codewords<'_> {
    type Item = Codeword;

    fn next(&mut self) -> Option<Codeword> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let mut word = vec![0u32; self.matrix.n()];
        self.matrix.combine(&self.coeffs, &mut word);
        let ring = &self.matrix.ring;
        let lift = |v: &[u32]| v.iter().map(|&x| ring.element(x).unwrap()).collect();
        let out = Codeword { coefficients: lift(&self.coeffs), word: lift(&word) };
        self.matrix.increment(&mut self.coeffs);
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = usize::try_from(self.remaining).unwrap_or(usize::MAX);
        (n, Some(n))
    }
}

/// A simplex code of type alpha or beta with `k` generators.
#[derive(Debug, Clone)]
pub struct SimplexCode {
    generator: GeneratorMatrix,
    family: CodeFamily,
    k: u32,
}

impl SimplexCode {
    pub fn new(ring: Arc<Ring>, family: CodeFamily, k: u32, limits: &Limits) -> Result<Self> {
        let generator = match family {
            CodeFamily::Alpha => GeneratorMatrix::alpha(&ring, k, limits)?,
            CodeFamily::Beta => GeneratorMatrix::beta(&ring, k, limits)?,
        };
        Ok(SimplexCode { generator, family, k })
    }

    pub fn generator(&self) -> &GeneratorMatrix {
        &self.generator
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.generator.ring()
    }

    pub fn family(&self) -> CodeFamily {
        self.family
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> usize {
        self.generator.n()
    }

    pub fn q(&self) -> u32 {
        self.ring().q()
    }

    pub fn s(&self) -> u32 {
        self.ring().s()
    }

    /// The type line `(n; k, 0, .., 0)`.
    pub fn type_string(&self) -> String {
        let mut t = vec![self.k.to_string()];
        t.extend((1..self.s()).map(|_| "0".to_string()));
        format!("({}; {})", self.n(), t.join(", "))
    }

    pub fn codewords(&self, limits: &Limits) -> Result<Codewords<'_>> {
        self.generator.codewords(limits)
    }
}

impl AsRef<GeneratorMatrix> for SimplexCode {
    fn as_ref(&self) -> &GeneratorMatrix {
        &self.generator
    }
}

impl AsRef<GeneratorMatrix> for GeneratorMatrix {
    fn as_ref(&self) -> &GeneratorMatrix {
        self
    }
}

/// For a free code, `nu(c) = min_i nu(alpha_i)` for every codeword.
pub fn codeword_valuation_check(matrix: &GeneratorMatrix, limits: &Limits) -> Result<bool> {
    let total = matrix.codeword_count(limits)?;
    let ring = matrix.ring();
    let mut ok = true;
    matrix.for_each_raw(0..total, |coeffs, word| {
        let lhs = word.iter().map(|&x| ring.valuation_raw(x)).min().unwrap_or(Valuation::Infinity);
        let rhs = coeffs.iter().map(|&x| ring.valuation_raw(x)).min().unwrap_or(Valuation::Infinity);
        ok &= lhs == rhs;
    });
    Ok(ok)
}
