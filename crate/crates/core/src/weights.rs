//! Weight distributions: exhaustive counts, closed forms, Gray-image
//! parameters and the order form of the Hamming weight over `Z_{p^s}`.

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gray::{hamming_weight, GrayMap};
use crate::ring::{Family, Ring, RingElement};
use crate::simplex::{alpha_length, beta_length, CodeFamily, GeneratorMatrix, SimplexCode};
use crate::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WeightKind {
    Hamming,
    Homogeneous,
}

impl WeightKind {
    pub fn name(self) -> &'static str {
        match self {
            WeightKind::Hamming => "hamming",
            WeightKind::Homogeneous => "homogeneous",
        }
    }
}

impl fmt::Display for WeightKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WeightKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hamming" => Ok(WeightKind::Hamming),
            "homogeneous" | "hom" => Ok(WeightKind::Homogeneous),
            other => Err(Error::Parse(format!("unknown weight kind {other:?}"))),
        }
    }
}

/// Weight -> number of codewords, for a code of length `length`.
///
/// `degree` is the largest weight a word can have: `length` for the Hamming
/// weight, `length * q^{s-1}` for the homogeneous one. It is the total degree
/// of the enumerator.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightDistribution {
    pub kind: WeightKind,
    pub length: u64,
    pub degree: u64,
    pub counts: BTreeMap<u64, u64>,
}

#[derive(Serialize)]
struct CountRecord {
    weight: u64,
    count: u64,
}

#[derive(Serialize)]
struct DistributionRecord<'a> {
    ring: String,
    family: CodeFamily,
    k: u32,
    kind: WeightKind,
    length: u64,
    counts: Vec<CountRecord>,
    min_distance: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'a str>,
}

impl WeightDistribution {
    pub fn new(kind: WeightKind, length: u64, degree: u64) -> Self {
        WeightDistribution { kind, length, degree, counts: BTreeMap::new() }
    }

    /// Adds `count` words of weight `weight`; zero counts are dropped.
    pub fn add(&mut self, weight: u64, count: u64) {
        if count > 0 {
            *self.counts.entry(weight).or_insert(0) += count;
        }
    }

    pub fn merge(&mut self, other: &WeightDistribution) {
        for (&w, &c) in &other.counts {
            self.add(w, c);
        }
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn count(&self, weight: u64) -> u64 {
        self.counts.get(&weight).copied().unwrap_or(0)
    }

    /// Smallest weight present after `0`.
    pub fn min_distance(&self) -> Result<u64> {
        min_distance(self)
    }

    /// First weight where the two distributions disagree.
    pub fn first_difference(&self, other: &WeightDistribution) -> Option<(u64, u64, u64)> {
        let weights: std::collections::BTreeSet<u64> = self.counts.keys().chain(other.counts.keys()).copied().collect();
        weights.into_iter().map(|w| (w, self.count(w), other.count(w))).find(|(_, a, b)| a != b)
    }

    /// `W(X, Y) = sum A_i X^{n-i} Y^i`, terms sorted by the power of `Y`.
    pub fn enumerator(&self) -> String {
        let terms: Vec<String> = self
            .counts
            .iter()
            .map(|(&w, &c)| {
                let mut t = if c == 1 { String::new() } else { c.to_string() };
                let x = self.degree - w;
                let mut factors = Vec::new();
                if x > 0 {
                    factors.push(if x == 1 { "X".to_string() } else { format!("X^{x}") });
                }
                if w > 0 {
                    factors.push(if w == 1 { "Y".to_string() } else { format!("Y^{w}") });
                }
                if factors.is_empty() {
                    return if c == 1 { "1".into() } else { t };
                }
                if !t.is_empty() {
                    t.push(' ');
                }
                t + &factors.join(" ")
            })
            .collect();
        terms.join(" + ")
    }

    /// `weight,count` lines under a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("weight,count\n");
        for (w, c) in &self.counts {
            out.push_str(&format!("{w},{c}\n"));
        }
        out
    }

    /// Structured record with the ring spec, family, `k` and minimum distance.
    pub fn to_json(&self, ring: &str, family: CodeFamily, k: u32, note: Option<&str>) -> String {
        let record = DistributionRecord {
            ring: ring.to_string(),
            family,
            k,
            kind: self.kind,
            length: self.length,
            counts: self.counts.iter().map(|(&weight, &count)| CountRecord { weight, count }).collect(),
            min_distance: self.min_distance().ok(),
            note,
        };
        serde_json::to_string_pretty(&record).expect("record serializes")
    }
}

impl fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.counts.iter().map(|(w, c)| format!("{w}:{c}")).collect();
        write!(f, "{{{}}}", body.join(", "))
    }
}

pub fn min_distance(dist: &WeightDistribution) -> Result<u64> {
    dist.counts.iter().find(|(&w, &c)| w > 0 && c > 0).map(|(&w, _)| w).ok_or(Error::DegenerateDistribution)
}

fn weight_table(ring: &Ring, kind: WeightKind) -> Vec<u64> {
    ring.elements()
        .map(|x| match kind {
            WeightKind::Hamming => u64::from(!x.is_zero()),
            WeightKind::Homogeneous => ring.homogeneous_weight(x),
        })
        .collect()
}

fn empty_for(matrix: &GeneratorMatrix, kind: WeightKind) -> WeightDistribution {
    let n = matrix.n() as u64;
    let degree = match kind {
        WeightKind::Hamming => n,
        WeightKind::Homogeneous => n * matrix.ring().q_pow(matrix.ring().s() - 1) as u64,
    };
    WeightDistribution::new(kind, n, degree)
}

fn count_range(matrix: &GeneratorMatrix, kind: WeightKind, range: std::ops::Range<u64>) -> WeightDistribution {
    let table = weight_table(matrix.ring(), kind);
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    matrix.for_each_raw(range, |_, word| {
        let w: u64 = word.iter().map(|&x| table[x as usize]).sum();
        *counts.entry(w).or_insert(0) += 1;
    });
    let mut dist = empty_for(matrix, kind);
    dist.counts = counts;
    dist
}

/// Exact weight distribution by enumerating every codeword.
pub fn empirical_distribution(code: &impl AsRef<GeneratorMatrix>, kind: WeightKind, limits: &Limits) -> Result<WeightDistribution> {
    let matrix = code.as_ref();
    let total = matrix.codeword_count(limits)?;
    Ok(count_range(matrix, kind, 0..total))
}

/// Same counts as [`empirical_distribution`], split over `workers` threads by
/// coefficient-rank ranges and merged.
pub fn empirical_distribution_parallel(
    code: &impl AsRef<GeneratorMatrix>,
    kind: WeightKind,
    limits: &Limits,
    workers: usize,
) -> Result<WeightDistribution> {
    let matrix = code.as_ref();
    let total = matrix.codeword_count(limits)?;
    let workers = workers.max(1) as u64;
    let chunk = total.div_ceil(workers).max(1);
    let parts: Vec<WeightDistribution> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..total)
            .step_by(chunk as usize)
            .map(|start| {
                let end = (start + chunk).min(total);
                scope.spawn(move || count_range(matrix, kind, start..end))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let mut dist = empty_for(matrix, kind);
    for part in &parts {
        dist.merge(part);
    }
    Ok(dist)
}

fn pow(q: u64, e: u64) -> Result<u64> {
    u32::try_from(e).ok().and_then(|e| q.checked_pow(e)).ok_or(Error::Overflow("q^e"))
}

/// Whether the closed forms degenerate to the weights of `R` itself (beta, `k = 1`).
pub fn is_trivial(family: CodeFamily, k: u32) -> bool {
    family == CodeFamily::Beta && k == 1
}

/// The closed-form distribution of `S_k^alpha` or `S_k^beta` over any chain
/// ring with residue field size `q` and nilpotency index `s`.
///
/// Equal weights are merged and zero counts dropped; for beta with `k = 1`
/// this is the weight distribution of `R`.
pub fn predicted_distribution(family: CodeFamily, kind: WeightKind, q: u64, s: u32, k: u32) -> Result<WeightDistribution> {
    if k == 0 {
        return Err(Error::UnsupportedK(0));
    }
    if q < 2 || s == 0 {
        return Err(Error::InvalidSpec(format!("q={q}, s={s}")));
    }
    let (s64, k64) = (s as u64, k as u64);
    let n = match family {
        CodeFamily::Alpha => alpha_length(q, s, k),
        CodeFamily::Beta => beta_length(q, s, k),
    }
    .ok_or(Error::Overflow("code length"))?;
    let degree = match kind {
        WeightKind::Hamming => n,
        WeightKind::Homogeneous => n.checked_mul(pow(q, s64 - 1)?).ok_or(Error::Overflow("degree"))?,
    };
    let mut dist = WeightDistribution::new(kind, n, degree);
    dist.add(0, 1);
    let size = pow(q, s64 * k64)?;
    match (family, kind) {
        (_, WeightKind::Hamming) => {
            let prev = match family {
                CodeFamily::Alpha => pow(q, s64 * (k64 - 1))?,
                CodeFamily::Beta => beta_length(q, s, k - 1).ok_or(Error::Overflow("beta length"))?,
            };
            for j in 0..s64 {
                let w = n - pow(q, j)? * prev;
                let count = pow(q, k64 * (s64 - j))? - pow(q, k64 * (s64 - j - 1))?;
                dist.add(w, count);
            }
        }
        (CodeFamily::Alpha, WeightKind::Homogeneous) => {
            let w = pow(q, s64 * (k64 + 1) - 2)?.checked_mul(q - 1).ok_or(Error::Overflow("weight"))?;
            dist.add(w, size - 1);
        }
        (CodeFamily::Beta, WeightKind::Homogeneous) => {
            let qk = pow(q, k64)?;
            dist.add(pow(q, s64 * k64 - 1)?, qk - 1);
            // At s = 1 this class is empty and its weight is not an integer.
            let count = size - qk;
            if count > 0 {
                let w = pow(q, s64 * k64 - k64 - 1)?.checked_mul(qk - 1).ok_or(Error::Overflow("weight"))?;
                dist.add(w, count);
            }
        }
    }
    Ok(dist)
}

/// Parameters `(n', M, d)` of the Gray image of a simplex code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrayParameters {
    pub length: u64,
    pub size: u64,
    pub distance: u64,
}

impl fmt::Display for GrayParameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.length, self.size, self.distance)
    }
}

/// Closed-form Gray-image parameters; beta needs `k >= 2`.
pub fn predicted_gray_parameters(family: CodeFamily, q: u64, s: u32, k: u32) -> Result<GrayParameters> {
    if k == 0 || (family == CodeFamily::Beta && k < 2) {
        return Err(Error::UnsupportedK(k));
    }
    let hom = predicted_distribution(family, WeightKind::Homogeneous, q, s, k)?;
    Ok(GrayParameters { length: hom.degree, size: hom.total(), distance: hom.min_distance()? })
}

fn fingerprint(word: &[u32]) -> u128 {
    let mut lo = DefaultHasher::new();
    word.hash(&mut lo);
    let mut hi = DefaultHasher::new();
    0x9e37_79b9_u32.hash(&mut hi);
    word.hash(&mut hi);
    (u128::from(hi.finish()) << 64) | u128::from(lo.finish())
}

/// Closed-form `(n', M, d)` for the Gray image of `S_k` over `ring`. With
/// `verify`, every codeword is mapped and the image's length, number of
/// distinct words and Hamming distribution are compared with the closed
/// forms.
///
/// Distinct words are counted by 128-bit fingerprints; a collision can only
/// lower the count and so report a mismatch, never hide one.
pub fn gray_image_parameters(
    family: CodeFamily,
    ring: &std::sync::Arc<Ring>,
    k: u32,
    verify: bool,
    limits: &Limits,
) -> Result<GrayParameters> {
    let params = predicted_gray_parameters(family, ring.q() as u64, ring.s(), k)?;
    if !verify {
        return Ok(params);
    }
    let code = SimplexCode::new(ring.clone(), family, k, limits)?;
    let found = gray_image_distribution(&code, limits)?;
    let expected = predicted_distribution(family, WeightKind::Homogeneous, ring.q() as u64, ring.s(), k)?;
    if found.distribution.degree != params.length {
        return Err(Error::ParameterMismatch { what: "image length", expected: params.length, found: found.distribution.degree });
    }
    if found.distinct != params.size {
        return Err(Error::ParameterMismatch { what: "image size", expected: params.size, found: found.distinct });
    }
    if let Some((weight, want, got)) = expected.first_difference(&found.distribution) {
        return Err(Error::VerificationMismatch { weight, expected: want, found: got });
    }
    Ok(params)
}

/// Hamming distribution of the Gray image together with its number of
/// distinct words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayImageSummary {
    pub distribution: WeightDistribution,
    pub distinct: u64,
}

pub fn gray_image_distribution(code: &impl AsRef<GeneratorMatrix>, limits: &Limits) -> Result<GrayImageSummary> {
    let matrix = code.as_ref();
    let ring = matrix.ring();
    let total = matrix.codeword_count(limits)?;
    let gray = GrayMap::new(ring);
    let images: Vec<Vec<u32>> = (0..ring.size())
        .map(|x| gray.map(ring.element(x).unwrap()).into_iter().map(|f| f.index()).collect())
        .collect();
    let len = matrix.n() as u64 * gray.block_len() as u64;
    let mut dist = WeightDistribution::new(WeightKind::Hamming, len, len);
    let mut seen = HashSet::with_capacity(total as usize);
    let mut buf = Vec::with_capacity(len as usize);
    matrix.for_each_raw(0..total, |_, word| {
        buf.clear();
        for &x in word {
            buf.extend_from_slice(&images[x as usize]);
        }
        dist.add(hamming_weight(&buf) as u64, 1);
        seen.insert(fingerprint(&buf));
    });
    Ok(GrayImageSummary { distribution: dist, distinct: seen.len() as u64 })
}

/// Additive order of `c` and its Hamming weight from the order form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderForm {
    pub order: u64,
    pub weight: u64,
}

/// Over `Z_{p^s}`: `ord(c)`, found as the least `m > 0` with `m c = 0`, and the
/// Hamming weight `p^{sk} - (p^s/ord) p^{s(k-1)}` (alpha) or
/// `L(k) - (p^s/ord) L(k-1)` (beta). Both are checked against
/// `p^{s - nu(c)}` and the actual weight of `c`.
pub fn order_form_weights(code: &SimplexCode, c: &[RingElement]) -> Result<OrderForm> {
    let ring = code.ring();
    if ring.family() != Family::Zps {
        return Err(Error::NotZps);
    }
    if c.len() != code.n() {
        return Err(Error::Parse(format!("codeword has length {}, code has {}", c.len(), code.n())));
    }
    let nu = ring.vector_valuation(c)?;
    let Some(v) = nu.finite() else { return Err(Error::ZeroCodeword) };
    let (p, s, k) = (ring.p() as u64, ring.s(), code.k());
    let order = (1..=ring.size() as u64)
        .find(|&m| c.iter().all(|&x| ring.scale(m, x).is_zero()))
        .expect("p^s annihilates every element");
    let expected_order = p.pow(s - v);
    if order != expected_order {
        return Err(Error::ParameterMismatch { what: "additive order", expected: expected_order, found: order });
    }
    let factor = p.pow(s) / order;
    let q = ring.q() as u64;
    let weight = match code.family() {
        CodeFamily::Alpha => q.pow(s * k) - factor * q.pow(s * (k - 1)),
        CodeFamily::Beta => {
            beta_length(q, s, k).ok_or(Error::Overflow("beta length"))?
                - factor * beta_length(q, s, k - 1).ok_or(Error::Overflow("beta length"))?
        }
    };
    let actual = hamming_weight(c) as u64;
    if actual != weight {
        return Err(Error::ParameterMismatch { what: "order-form weight", expected: weight, found: actual });
    }
    Ok(OrderForm { order, weight })
}
