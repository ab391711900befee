//! Concrete finite chain rings: `Z_{p^s}`, Galois rings `GR(p^s, r)` and
//! truncated polynomial rings `F_q[u]/(u^s)`.
//!
//! Every element is stored as its rank in the ascending order
//! `rho_0 < rho_1 < ..`: writing `x = sum_i t_i gamma^i` with digits `t_i`
//! from the representative set `T`, the rank is `sum_i idx(t_i) q^i`. The
//! digit alphabet is the "natural" one for each family (integers `0..p`,
//! polynomials of degree `< r` with coefficients in `0..p`, or the constants
//! `F_q`), indexed like the residue field, so `rank mod q` is the residue.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{is_prime, ResidueField};
use crate::valuation::Valuation;
use crate::Limits;

const TABLE_LIMIT: u32 = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "zps")]
    Zps,
    #[serde(rename = "gr")]
    GaloisRing,
    #[serde(rename = "fqu")]
    FqU,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Zps => "zps",
            Family::GaloisRing => "gr",
            Family::FqU => "fqu",
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "zps" | "z" => Ok(Family::Zps),
            "gr" | "galois" => Ok(Family::GaloisRing),
            "fqu" | "fq[u]" => Ok(Family::FqU),
            other => Err(Error::InvalidSpec(format!("unknown family {other:?}"))),
        }
    }
}

fn default_r() -> u32 {
    1
}

/// Description of a chain ring, as read from flags or a spec file.
///
/// `modulus` lists coefficients low-to-high of a monic degree-`r`
/// polynomial over `0..p`. When absent a shipped default is used for
/// `(p, r)` in `{(2,2), (3,2), (2,3)}` and `r = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingSpec {
    pub family: Family,
    pub p: u32,
    #[serde(default = "default_r")]
    pub r: u32,
    pub s: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

pub fn default_modulus(p: u32, r: u32) -> Option<Vec<u32>> {
    match (p, r) {
        (_, 1) => Some(vec![0, 1]),
        (2, 2) => Some(vec![1, 1, 1]),
        (3, 2) => Some(vec![2, 1, 1]),
        (2, 3) => Some(vec![1, 1, 0, 1]),
        _ => None,
    }
}

impl RingSpec {
    pub fn zps(p: u32, s: u32) -> Self {
        RingSpec { family: Family::Zps, p, r: 1, s, modulus: None }
    }

    pub fn galois(p: u32, r: u32, s: u32) -> Self {
        RingSpec { family: Family::GaloisRing, p, r, s, modulus: None }
    }

    pub fn fqu(p: u32, r: u32, s: u32) -> Self {
        RingSpec { family: Family::FqU, p, r, s, modulus: None }
    }

    pub fn with_modulus(mut self, modulus: Vec<u32>) -> Self {
        self.modulus = Some(modulus);
        self
    }

    /// Reads a spec from TOML, e.g. `family = "gr"`, `p = 2`, `r = 2`, `s = 2`,
    /// `modulus = [1, 1, 1]`.
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::InvalidSpec(e.to_string()))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("ring spec serializes")
    }

    /// The modulus actually used for the residue field.
    pub fn resolved_modulus(&self) -> Result<Vec<u32>> {
        if self.family == Family::Zps {
            return Ok(vec![0, 1]);
        }
        match &self.modulus {
            Some(m) => Ok(m.clone()),
            None => default_modulus(self.p, self.r).ok_or_else(|| {
                Error::InvalidSpec(format!("no default modulus for p={} r={}; supply one", self.p, self.r))
            }),
        }
    }
}

impl fmt::Display for RingSpec {
    /// Canonical one-token form, e.g. `zps:p=3:s=2` or `gr:p=2:r=2:s=2:f=1,1,1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:p={}", self.family.name(), self.p)?;
        if self.family != Family::Zps {
            write!(f, ":r={}", self.r)?;
        }
        write!(f, ":s={}", self.s)?;
        if self.family != Family::Zps && self.r > 1 {
            if let Ok(m) = self.resolved_modulus() {
                let coeffs: Vec<String> = m.iter().map(u32::to_string).collect();
                write!(f, ":f={}", coeffs.join(","))?;
            }
        }
        Ok(())
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut parts = text.trim().split(':');
        let family: Family = parts.next().unwrap_or_default().parse()?;
        let mut spec = RingSpec { family, p: 0, r: 1, s: 0, modulus: None };
        for part in parts {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::InvalidSpec(format!("expected key=value, got {part:?}")))?;
            let num = |v: &str| v.parse::<u32>().map_err(|e| Error::InvalidSpec(format!("{key}: {e}")));
            match key {
                "p" => spec.p = num(value)?,
                "r" => spec.r = num(value)?,
                "s" => spec.s = num(value)?,
                "f" => spec.modulus = Some(value.split(',').map(num).collect::<Result<_>>()?),
                _ => return Err(Error::InvalidSpec(format!("unknown key {key:?}"))),
            }
        }
        Ok(spec)
    }
}

/// A ring element, identified by its rank in the ascending order and tagged
/// with the ring it belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RingElement {
    rank: u32,
    tag: u32,
}

impl RingElement {
    pub fn rank(self) -> u32 {
        self.rank
    }

    pub fn is_zero(self) -> bool {
        self.rank == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Add,
    Sub,
    Mul,
}

#[derive(Debug, Clone)]
struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
}

#[derive(Debug, Clone)]
pub struct Ring {
    spec: RingSpec,
    field: ResidueField,
    q: u32,
    s: u32,
    size: u32,
    tag: u32,
    /// `q^0, .., q^s`.
    q_pows: Vec<u32>,
    /// `p^s`, the coefficient modulus for `Z_{p^s}` and Galois rings.
    char_mod: u64,
    tables: Option<Tables>,
}

fn fnv1a(text: &str) -> u32 {
    text.bytes().fold(0x811c_9dc5u32, |h, b| (h ^ b as u32).wrapping_mul(0x0100_0193))
}

impl Ring {
    pub fn new(spec: RingSpec) -> Result<Self> {
        Self::with_cap(spec, Limits::default().max_elements)
    }

    pub fn with_cap(spec: RingSpec, max_elements: u64) -> Result<Self> {
        if !is_prime(spec.p as u64) {
            return Err(Error::NonPrimeP(spec.p as u64));
        }
        if spec.s == 0 {
            return Err(Error::InvalidSpec("s must be at least 1".into()));
        }
        if spec.r == 0 {
            return Err(Error::InvalidSpec("r must be at least 1".into()));
        }
        if spec.family == Family::Zps && spec.r != 1 {
            return Err(Error::InvalidSpec("Z_(p^s) has r = 1".into()));
        }
        let modulus = spec.resolved_modulus()?;
        if modulus.len() != spec.r as usize + 1 {
            return Err(Error::InvalidSpec(format!(
                "modulus {modulus:?} does not have degree r = {}",
                spec.r
            )));
        }
        let size = (spec.p as u128)
            .checked_pow(spec.r * spec.s)
            .ok_or(Error::UnsupportedSize { size: u128::MAX, cap: max_elements })?;
        if size > max_elements as u128 || size > u32::MAX as u128 {
            return Err(Error::UnsupportedSize { size, cap: max_elements });
        }
        let field = ResidueField::new(spec.p, modulus)?;
        let q = field.q();
        let q_pows = (0..=spec.s).map(|i| q.pow(i)).collect();
        let char_mod = (spec.p as u64).pow(spec.s);
        let tag = fnv1a(&spec.to_string());
        let s = spec.s;
        let mut ring = Ring { spec, field, q, s, size: size as u32, tag, q_pows, char_mod, tables: None };
        if ring.size <= TABLE_LIMIT {
            let n = ring.size as usize;
            let mut add = vec![0; n * n];
            let mut mul = vec![0; n * n];
            for a in 0..ring.size {
                for b in 0..ring.size {
                    add[a as usize * n + b as usize] = ring.add_direct(a, b);
                    mul[a as usize * n + b as usize] = ring.mul_direct(a, b);
                }
            }
            let neg = (0..ring.size).map(|a| ring.neg_direct(a)).collect();
            ring.tables = Some(Tables { add, mul, neg });
        }
        Ok(ring)
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn family(&self) -> Family {
        self.spec.family
    }

    pub fn field(&self) -> &ResidueField {
        &self.field
    }

    pub fn p(&self) -> u32 {
        self.spec.p
    }

    pub fn r(&self) -> u32 {
        self.spec.r
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    /// `q^e` for `e <= s`.
    pub fn q_pow(&self, e: u32) -> u32 {
        self.q_pows[e as usize]
    }

    pub fn element(&self, rank: u32) -> Result<RingElement> {
        if rank < self.size {
            Ok(self.elem(rank))
        } else {
            Err(Error::IndexOutOfRange { index: rank as u64, max: self.size as u64 - 1 })
        }
    }

    pub(crate) fn elem(&self, rank: u32) -> RingElement {
        debug_assert!(rank < self.size);
        RingElement { rank, tag: self.tag }
    }

    pub fn contains(&self, x: RingElement) -> bool {
        x.tag == self.tag && x.rank < self.size
    }

    pub fn zero(&self) -> RingElement {
        self.elem(0)
    }

    pub fn one(&self) -> RingElement {
        self.elem(1)
    }

    /// The fixed generator of the maximal ideal: `p` or `u`. Its digit
    /// vector is `(0, 1, 0, ..)`, so it is zero when `s = 1`.
    pub fn gamma(&self) -> RingElement {
        self.elem(if self.s >= 2 { self.q } else { 0 })
    }

    /// `gamma^j` for any `j`; zero once `j >= s`.
    pub fn gamma_pow(&self, j: u32) -> RingElement {
        if j < self.s {
            self.elem(self.q_pows[j as usize])
        } else {
            self.zero()
        }
    }

    /// All elements in ascending order `rho_0, rho_1, ..`.
    pub fn elements(&self) -> impl Iterator<Item = RingElement> + '_ {
        (0..self.size).map(move |r| self.elem(r))
    }

    /// Digit indices `(idx(t_0), .., idx(t_{s-1}))` of the gamma-adic expansion.
    pub fn digits(&self, x: RingElement) -> Vec<u32> {
        let mut rank = x.rank;
        (0..self.s)
            .map(|_| {
                let d = rank % self.q;
                rank /= self.q;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u32]) -> Result<RingElement> {
        if digits.len() != self.s as usize {
            return Err(Error::ParseElement(format!("expected {} digits, got {}", self.s, digits.len())));
        }
        if let Some(&d) = digits.iter().find(|&&d| d >= self.q) {
            return Err(Error::ParseElement(format!("digit {d} out of range 0..{}", self.q)));
        }
        Ok(self.elem(digits.iter().rev().fold(0, |acc, &d| acc * self.q + d)))
    }

    /// Order `>=_gamma`: compare digits at the highest index where they differ.
    pub fn cmp_gamma(&self, x: RingElement, y: RingElement) -> Ordering {
        let (dx, dy) = (self.digits(x), self.digits(y));
        for i in (0..self.s as usize).rev() {
            if dx[i] != dy[i] {
                return dx[i].cmp(&dy[i]);
            }
        }
        Ordering::Equal
    }

    pub fn add(&self, a: RingElement, b: RingElement) -> RingElement {
        debug_assert!(self.contains(a) && self.contains(b));
        self.elem(self.add_raw(a.rank, b.rank))
    }

    pub fn sub(&self, a: RingElement, b: RingElement) -> RingElement {
        debug_assert!(self.contains(a) && self.contains(b));
        self.elem(self.add_raw(a.rank, self.neg_raw(b.rank)))
    }

    pub fn mul(&self, a: RingElement, b: RingElement) -> RingElement {
        debug_assert!(self.contains(a) && self.contains(b));
        self.elem(self.mul_raw(a.rank, b.rank))
    }

    pub fn neg(&self, a: RingElement) -> RingElement {
        self.elem(self.neg_raw(a.rank))
    }

    /// Checked arithmetic: both operands must come from this ring.
    pub fn arithmetic(&self, a: RingElement, b: RingElement, op: Op) -> Result<RingElement> {
        if !self.contains(a) || !self.contains(b) {
            return Err(Error::MixedRings);
        }
        Ok(match op {
            Op::Add => self.add(a, b),
            Op::Sub => self.sub(a, b),
            Op::Mul => self.mul(a, b),
        })
    }

    pub fn pow(&self, x: RingElement, e: u32) -> RingElement {
        (0..e).fold(self.one(), |acc, _| self.mul(acc, x))
    }

    /// `m * x` for a natural number `m` (repeated addition).
    pub fn scale(&self, m: u64, x: RingElement) -> RingElement {
        (0..m).fold(self.zero(), |acc, _| self.add(acc, x))
    }

    pub fn is_unit(&self, x: RingElement) -> bool {
        !x.rank.is_multiple_of(self.q)
    }

    /// Index of the lowest nonzero digit, or `Infinity` for zero.
    pub fn valuation(&self, x: RingElement) -> Valuation {
        self.valuation_raw(x.rank)
    }

    pub(crate) fn valuation_raw(&self, mut rank: u32) -> Valuation {
        if rank == 0 {
            return Valuation::Infinity;
        }
        let mut v = 0;
        while rank.is_multiple_of(self.q) {
            rank /= self.q;
            v += 1;
        }
        Valuation::Finite(v)
    }

    pub fn vector_valuation(&self, v: &[RingElement]) -> Result<Valuation> {
        v.iter().map(|&x| self.valuation(x)).min().ok_or(Error::EmptyVector)
    }

    /// Elements of `<gamma^j>` (valuation `>= j`) in ascending order.
    pub fn ideal_elements(&self, j: u32) -> Result<Vec<RingElement>> {
        if j > self.s {
            return Err(Error::IndexOutOfRange { index: j as u64, max: self.s as u64 });
        }
        let step = self.q_pows[j as usize];
        Ok((0..self.q_pows[(self.s - j) as usize]).map(|i| self.elem(i * step)).collect())
    }

    pub fn in_ideal(&self, x: RingElement, j: u32) -> bool {
        match self.valuation(x) {
            Valuation::Infinity => true,
            Valuation::Finite(v) => v >= j,
        }
    }

    pub fn homogeneous_weight(&self, x: RingElement) -> u64 {
        self.homogeneous_weight_raw(x.rank)
    }

    pub(crate) fn homogeneous_weight_raw(&self, rank: u32) -> u64 {
        let q = self.q as u64;
        match self.valuation_raw(rank) {
            Valuation::Infinity => 0,
            Valuation::Finite(v) if v == self.s - 1 => q.pow(self.s - 1),
            Valuation::Finite(_) => (q - 1) * q.pow(self.s - 2),
        }
    }

    pub fn homogeneous_weight_vec(&self, v: &[RingElement]) -> u64 {
        v.iter().map(|&x| self.homogeneous_weight(x)).sum()
    }

    /// Canonical text form: the integer for `Z_{p^s}`, otherwise the
    /// colon-separated digit indices `d0:d1:..`.
    pub fn serialize_element(&self, x: RingElement) -> String {
        match self.family() {
            Family::Zps => x.rank.to_string(),
            _ => {
                let d: Vec<String> = self.digits(x).iter().map(u32::to_string).collect();
                d.join(":")
            }
        }
    }

    pub fn parse_element(&self, text: &str) -> Result<RingElement> {
        let bad = || Error::ParseElement(text.to_string());
        match self.family() {
            Family::Zps => {
                let n: u32 = text.trim().parse().map_err(|_| bad())?;
                self.element(n).map_err(|_| bad())
            }
            _ => {
                let digits: Vec<u32> =
                    text.trim().split(':').map(|d| d.parse().map_err(|_| bad())).collect::<Result<_>>()?;
                self.from_digits(&digits)
            }
        }
    }

    /// Human-readable polynomial form: `3w+1` in a Galois ring, `2u+1` in
    /// `F_q[u]/(u^s)` (coefficients as field indices), the integer otherwise.
    pub fn pretty(&self, x: RingElement) -> String {
        let (var, coeffs): (&str, Vec<u64>) = match self.family() {
            Family::Zps => return x.rank.to_string(),
            Family::GaloisRing => ("w", self.gr_coeffs(x.rank)),
            Family::FqU => ("u", self.digits(x).into_iter().map(u64::from).collect()),
        };
        let mut terms = Vec::new();
        for (deg, &c) in coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let c_str = if c == 1 && deg > 0 { String::new() } else { c.to_string() };
            terms.push(match deg {
                0 => c_str,
                1 => format!("{c_str}{var}"),
                _ => format!("{c_str}{var}^{deg}"),
            });
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }

    pub(crate) fn add_raw(&self, a: u32, b: u32) -> u32 {
        match &self.tables {
            Some(t) => t.add[a as usize * self.size as usize + b as usize],
            None => self.add_direct(a, b),
        }
    }

    pub(crate) fn mul_raw(&self, a: u32, b: u32) -> u32 {
        match &self.tables {
            Some(t) => t.mul[a as usize * self.size as usize + b as usize],
            None => self.mul_direct(a, b),
        }
    }

    pub(crate) fn neg_raw(&self, a: u32) -> u32 {
        match &self.tables {
            Some(t) => t.neg[a as usize],
            None => self.neg_direct(a),
        }
    }

    /// Coefficients in `Z_{p^s}` of a Galois ring element, low-to-high in `w`.
    fn gr_coeffs(&self, rank: u32) -> Vec<u64> {
        let (p, r) = (self.spec.p as u64, self.spec.r as usize);
        let mut coeffs = vec![0u64; r];
        let mut rest = rank as u64;
        let mut place = 1u64;
        for _ in 0..self.s {
            let mut d = rest % self.q as u64;
            rest /= self.q as u64;
            for c in coeffs.iter_mut() {
                *c += (d % p) * place;
                d /= p;
            }
            place *= p;
        }
        coeffs
    }

    fn gr_rank(&self, coeffs: &[u64]) -> u32 {
        let p = self.spec.p as u64;
        let mut rank = 0u64;
        for i in (0..self.s).rev() {
            let pi = p.pow(i);
            let digit = coeffs.iter().rev().fold(0u64, |acc, &c| acc * p + (c / pi) % p);
            rank = rank * self.q as u64 + digit;
        }
        rank as u32
    }

    fn add_direct(&self, a: u32, b: u32) -> u32 {
        match self.family() {
            Family::Zps => ((a as u64 + b as u64) % self.char_mod) as u32,
            Family::GaloisRing => {
                let m = self.char_mod;
                let sum: Vec<u64> =
                    self.gr_coeffs(a).iter().zip(self.gr_coeffs(b)).map(|(x, y)| (x + y) % m).collect();
                self.gr_rank(&sum)
            }
            Family::FqU => {
                let (mut a, mut b) = (a, b);
                let mut out = 0;
                for i in 0..self.s as usize {
                    out += self.field.add_idx(a % self.q, b % self.q) * self.q_pows[i];
                    a /= self.q;
                    b /= self.q;
                }
                out
            }
        }
    }

    fn neg_direct(&self, a: u32) -> u32 {
        match self.family() {
            Family::Zps => ((self.char_mod - a as u64) % self.char_mod) as u32,
            Family::GaloisRing => {
                let m = self.char_mod;
                let neg: Vec<u64> = self.gr_coeffs(a).iter().map(|x| (m - x) % m).collect();
                self.gr_rank(&neg)
            }
            Family::FqU => {
                let mut a = a;
                let mut out = 0;
                for i in 0..self.s as usize {
                    out += self.field.neg_idx(a % self.q) * self.q_pows[i];
                    a /= self.q;
                }
                out
            }
        }
    }

    fn mul_direct(&self, a: u32, b: u32) -> u32 {
        match self.family() {
            Family::Zps => ((a as u64 * b as u64) % self.char_mod) as u32,
            Family::GaloisRing => {
                let m = self.char_mod;
                let r = self.spec.r as usize;
                let (ca, cb) = (self.gr_coeffs(a), self.gr_coeffs(b));
                let mut prod = vec![0u64; 2 * r - 1];
                for (i, x) in ca.iter().enumerate() {
                    for (j, y) in cb.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % m;
                    }
                }
                // Reduce by the monic lift of the modulus: w^r = -sum f_j w^j.
                let f: Vec<u64> = self.field.modulus().iter().map(|&c| c as u64).collect();
                for top in (r..prod.len()).rev() {
                    let c = prod[top];
                    if c == 0 {
                        continue;
                    }
                    prod[top] = 0;
                    for (j, &fj) in f.iter().take(r).enumerate() {
                        let idx = top - r + j;
                        prod[idx] = (prod[idx] + (m - c) * fj % m) % m;
                    }
                }
                prod.truncate(r);
                self.gr_rank(&prod)
            }
            Family::FqU => {
                let s = self.s as usize;
                let da: Vec<u32> = (0..s).map(|i| (a / self.q_pows[i]) % self.q).collect();
                let db: Vec<u32> = (0..s).map(|i| (b / self.q_pows[i]) % self.q).collect();
                let mut out = vec![0u32; s];
                for i in 0..s {
                    for j in 0..s - i {
                        let t = self.field.mul_idx(da[i], db[j]);
                        out[i + j] = self.field.add_idx(out[i + j], t);
                    }
                }
                out.iter().rev().fold(0, |acc, &d| acc * self.q + d)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Valuation::{Finite, Infinity};

    fn z(p: u32, s: u32) -> Ring {
        Ring::new(RingSpec::zps(p, s)).unwrap()
    }

    fn gr42() -> Ring {
        Ring::new(RingSpec::galois(2, 2, 2)).unwrap()
    }

    #[test]
    fn z9_order_is_integer_order() {
        let r = z(3, 2);
        assert_eq!(r.size(), 9);
        let listed: Vec<String> = r.elements().map(|x| r.pretty(x)).collect();
        assert_eq!(listed, ["0", "1", "2", "3", "4", "5", "6", "7", "8"]);
        assert_eq!(r.zero().rank(), 0);
        assert_eq!(r.one().rank(), 1);
    }

    #[test]
    fn f2_is_degenerate_chain_ring() {
        let r = z(2, 1);
        assert_eq!((r.q(), r.s(), r.size()), (2, 1, 2));
        assert_eq!(r.gamma(), r.zero());
        assert_eq!(r.valuation(r.one()), Finite(0));
        assert_eq!(r.valuation(r.zero()), Infinity);
    }

    #[test]
    fn gr42_ascending_order() {
        let r = gr42();
        assert_eq!(r.size(), 16);
        let listed: Vec<String> = r.elements().map(|x| r.pretty(x)).collect();
        let expected = [
            "0", "1", "w", "w+1", "2", "3", "w+2", "w+3", "2w", "2w+1", "3w", "3w+1", "2w+2", "2w+3", "3w+2",
            "3w+3",
        ];
        assert_eq!(listed, expected);
    }

    #[test]
    fn z9_arithmetic() {
        let r = z(3, 2);
        let (a, b) = (r.element(4).unwrap(), r.element(7).unwrap());
        assert_eq!(r.add(a, b).rank(), 2);
        assert_eq!(r.mul(a, b).rank(), 1);
        assert_eq!(r.sub(a, b).rank(), 6);
    }

    #[test]
    fn gr42_omega_squared() {
        let r = gr42();
        let w = r.element(2).unwrap();
        // w^2 = -w - 1 = 3w + 3 over Z_4.
        assert_eq!(r.pretty(r.mul(w, w)), "3w+3");
        assert_eq!(r.add(r.mul(w, w), r.add(w, r.one())), r.zero());
    }

    #[test]
    fn mixed_rings_rejected() {
        let (a, b) = (z(2, 2), z(3, 2));
        let x = a.one();
        let y = b.one();
        assert_eq!(a.arithmetic(x, y, Op::Add), Err(Error::MixedRings));
        assert_eq!(a.arithmetic(x, x, Op::Mul), Ok(x));
    }

    #[test]
    fn valuations() {
        let r4 = z(2, 2);
        assert_eq!(r4.valuation(r4.element(2).unwrap()), Finite(1));
        assert_eq!(r4.valuation(r4.element(3).unwrap()), Finite(0));
        let r9 = z(3, 2);
        assert_eq!(r9.valuation(r9.element(6).unwrap()), Finite(1));
        assert_eq!(r9.valuation(r9.zero()), Infinity);
        let v = |r: &Ring, xs: &[u32]| {
            let xs: Vec<_> = xs.iter().map(|&x| r.element(x).unwrap()).collect();
            r.vector_valuation(&xs)
        };
        assert_eq!(v(&r4, &[2, 0, 2]), Ok(Finite(1)));
        assert_eq!(v(&r4, &[0, 0, 0]), Ok(Infinity));
        assert_eq!(v(&r9, &[3, 1, 6]), Ok(Finite(0)));
        assert_eq!(v(&r9, &[]), Err(Error::EmptyVector));
    }

    #[test]
    fn ideals() {
        let r9 = z(3, 2);
        let ranks = |xs: Vec<RingElement>| xs.into_iter().map(RingElement::rank).collect::<Vec<_>>();
        assert_eq!(ranks(r9.ideal_elements(1).unwrap()), vec![0, 3, 6]);
        assert_eq!(ranks(r9.ideal_elements(0).unwrap()), (0..9).collect::<Vec<_>>());
        assert_eq!(ranks(r9.ideal_elements(2).unwrap()), vec![0]);
        assert!(matches!(r9.ideal_elements(3), Err(Error::IndexOutOfRange { .. })));
        let g = gr42();
        let listed: Vec<String> = g.ideal_elements(1).unwrap().into_iter().map(|x| g.pretty(x)).collect();
        assert_eq!(listed, ["0", "2", "2w", "2w+2"]);
    }

    #[test]
    fn homogeneous_weights() {
        let r4 = z(2, 2);
        let w: Vec<u64> = r4.elements().map(|x| r4.homogeneous_weight(x)).collect();
        assert_eq!(w, vec![0, 1, 2, 1]);
        let r9 = z(3, 2);
        assert_eq!(r9.homogeneous_weight(r9.element(3).unwrap()), 3);
        assert_eq!(r9.homogeneous_weight(r9.element(2).unwrap()), 2);
        let f5 = z(5, 1);
        assert!(f5.elements().skip(1).all(|x| f5.homogeneous_weight(x) == 1));
    }

    #[test]
    fn serialization() {
        let g = gr42();
        let x = g.element(11).unwrap(); // 3w+1: digits (w+1, w) = (3, 2)
        assert_eq!(g.serialize_element(x), "3:2");
        assert_eq!(g.parse_element("3:2").unwrap(), x);
        assert!(g.parse_element("4:0").is_err());
        assert!(g.parse_element("1").is_err());
        let r9 = z(3, 2);
        assert_eq!(r9.serialize_element(r9.element(7).unwrap()), "7");
        assert!(r9.parse_element("9").is_err());
    }

    #[test]
    fn spec_text_forms() {
        let spec = RingSpec::galois(2, 2, 2);
        assert_eq!(spec.to_string(), "gr:p=2:r=2:s=2:f=1,1,1");
        assert_eq!(RingSpec::zps(3, 2).to_string(), "zps:p=3:s=2");
        let back: RingSpec = "gr:p=2:r=2:s=2:f=1,1,1".parse().unwrap();
        assert_eq!(back, spec.clone().with_modulus(vec![1, 1, 1]));
        let toml = "family = \"fqu\"\np = 3\nr = 2\ns = 2\nmodulus = [2, 1, 1]\n";
        let spec = RingSpec::from_toml(toml).unwrap();
        assert_eq!(spec, RingSpec::fqu(3, 2, 2).with_modulus(vec![2, 1, 1]));
        assert_eq!(RingSpec::from_toml(&spec.to_toml()).unwrap(), spec);
        assert_eq!(RingSpec::from_toml("family = \"zps\"\np = 2\ns = 3\n").unwrap(), RingSpec::zps(2, 3));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Ring::new(RingSpec::zps(4, 2)).unwrap_err(), Error::NonPrimeP(4));
        let reducible = RingSpec::galois(2, 2, 2).with_modulus(vec![1, 0, 1]);
        assert!(matches!(Ring::new(reducible), Err(Error::ReduciblePolynomial(_))));
        assert!(matches!(Ring::new(RingSpec::zps(2, 17)), Err(Error::UnsupportedSize { .. })));
        assert!(matches!(Ring::with_cap(RingSpec::zps(3, 3), 10), Err(Error::UnsupportedSize { .. })));
        assert!(matches!(Ring::new(RingSpec::galois(5, 2, 2)), Err(Error::InvalidSpec(_))));
        assert!(matches!(Ring::new(RingSpec::zps(2, 0)), Err(Error::InvalidSpec(_))));
    }

    /// Rings past the table limit use direct arithmetic; compare it with tables built on request.
    #[test]
    fn direct_arithmetic_matches_tables() {
        for spec in [RingSpec::galois(2, 2, 3), RingSpec::fqu(2, 2, 3), RingSpec::zps(3, 4)] {
            let r = Ring::new(spec).unwrap();
            assert!(r.tables.is_some());
            for a in 0..r.size() {
                for b in 0..r.size() {
                    assert_eq!(r.add_raw(a, b), r.add_direct(a, b));
                    assert_eq!(r.mul_raw(a, b), r.mul_direct(a, b));
                }
            }
        }
    }
}
