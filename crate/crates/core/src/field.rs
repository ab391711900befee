//! The residue field `F_q = F_p[x]/(g)` of a chain ring.
//!
//! Field elements are addressed by index: the coefficient vector
//! `(c_0, .., c_{r-1})` of the canonical polynomial representative maps to
//! `sum c_i p^i`. Index 0 is zero and index 1 is one, and the same indexing
//! is used for the digit alphabet `T` of every ring family.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tables are precomputed for fields up to this many elements.
const TABLE_LIMIT: u32 = 256;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of the residue field, by index in the canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FieldElement(pub u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

pub type FieldVector = Vec<FieldElement>;

/// Remainder of `a` modulo the monic polynomial `m` over `F_p`, coefficients
/// low-to-high. The result has length `deg m`.
fn poly_rem(mut a: Vec<u64>, m: &[u64], p: u64) -> Vec<u64> {
    let deg = m.len() - 1;
    if a.len() > deg {
        for top in (deg..a.len()).rev() {
            let c = a[top] % p;
            if c == 0 {
                continue;
            }
            for (j, &mj) in m.iter().enumerate() {
                let idx = top - deg + j;
                a[idx] = (a[idx] + (p - c) * mj) % p;
            }
        }
    }
    a.resize(deg, 0);
    a.iter_mut().for_each(|c| *c %= p);
    a
}

/// Exhaustive irreducibility test for a monic polynomial over `F_p`:
/// no monic polynomial of degree `1..=deg/2` divides it.
pub fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let Some(&lead) = modulus.last() else {
        return false;
    };
    if lead != 1 || modulus.iter().any(|&c| c >= p) {
        return false;
    }
    let deg = modulus.len() - 1;
    if deg == 0 {
        return false;
    }
    let f: Vec<u64> = modulus.iter().map(|&c| c as u64).collect();
    let p = p as u64;
    for d in 1..=deg / 2 {
        // Every monic polynomial of degree d: p^d choices of lower coefficients.
        let count = p.pow(d as u32);
        for code in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                g.push(c % p);
                c /= p;
            }
            g.push(1);
            // f mod g, with g monic of degree d.
            let rem = poly_rem(f.clone(), &g, p);
            if rem.iter().all(|&x| x == 0) {
                return false;
            }
        }
    }
    true
}

/// The finite field `F_q`, `q = p^r`.
#[derive(Debug, Clone)]
pub struct ResidueField {
    p: u32,
    r: u32,
    q: u32,
    modulus: Vec<u32>,
    tables: Option<FieldTables>,
}

#[derive(Debug, Clone)]
struct FieldTables {
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
}

impl ResidueField {
    /// Builds `F_p[x]/(g)`. For `r = 1` the modulus only fixes the degree.
    pub fn new(p: u32, modulus: Vec<u32>) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NonPrimeP(p as u64));
        }
        if modulus.len() < 2 || !is_irreducible(&modulus, p) {
            return Err(Error::ReduciblePolynomial(modulus));
        }
        let r = (modulus.len() - 1) as u32;
        let q = (p as u64)
            .checked_pow(r)
            .filter(|&q| q <= u32::MAX as u64)
            .ok_or(Error::Overflow("field size"))? as u32;
        let mut field = ResidueField { p, r, q, modulus, tables: None };
        if q <= TABLE_LIMIT {
            let n = q as usize;
            let mut add = vec![0; n * n];
            let mut mul = vec![0; n * n];
            for a in 0..q {
                for b in 0..q {
                    add[a as usize * n + b as usize] = field.add_direct(a, b);
                    mul[a as usize * n + b as usize] = field.mul_direct(a, b);
                }
            }
            let neg = (0..q).map(|a| field.neg_direct(a)).collect();
            field.tables = Some(FieldTables { add, mul, neg });
        }
        Ok(field)
    }

    /// The prime field `F_p`.
    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, vec![0, 1])
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        let mut v = Vec::with_capacity(self.r as usize);
        let mut x = a.0;
        for _ in 0..self.r {
            v.push(x % self.p);
            x /= self.p;
        }
        v
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> FieldElement {
        FieldElement(coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c % self.p))
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(FieldElement)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.add_idx(a.0, b.0))
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.add_idx(a.0, self.neg_idx(b.0)))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.mul_idx(a.0, b.0))
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.neg_idx(a.0))
    }

    pub(crate) fn add_idx(&self, a: u32, b: u32) -> u32 {
        match &self.tables {
            Some(t) => t.add[a as usize * self.q as usize + b as usize],
            None => self.add_direct(a, b),
        }
    }

    pub(crate) fn mul_idx(&self, a: u32, b: u32) -> u32 {
        match &self.tables {
            Some(t) => t.mul[a as usize * self.q as usize + b as usize],
            None => self.mul_direct(a, b),
        }
    }

    pub(crate) fn neg_idx(&self, a: u32) -> u32 {
        match &self.tables {
            Some(t) => t.neg[a as usize],
            None => self.neg_direct(a),
        }
    }

    fn add_direct(&self, mut a: u32, mut b: u32) -> u32 {
        let (mut out, mut place) = (0, 1);
        for _ in 0..self.r {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    fn neg_direct(&self, mut a: u32) -> u32 {
        let (mut out, mut place) = (0, 1);
        for _ in 0..self.r {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    fn mul_direct(&self, a: u32, b: u32) -> u32 {
        let p = self.p as u64;
        let ca = self.coeffs(FieldElement(a));
        let cb = self.coeffs(FieldElement(b));
        let mut prod = vec![0u64; 2 * self.r as usize];
        for (i, &x) in ca.iter().enumerate() {
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        let m: Vec<u64> = self.modulus.iter().map(|&c| c as u64).collect();
        let rem = poly_rem(prod, &m, p);
        rem.iter().rev().fold(0u32, |acc, &c| acc * self.p + c as u32)
    }
}
