//! Residue map, the first-order Reed-Muller matrix and the generalized Gray
//! map `R -> F_q^{q^{s-1}}`.
//!
//! Column `y` of the Gray matrix is the point `(y_0, .., y_{s-2})` of
//! `F_q^{s-1}` with `y_0` least significant. Rows `0..s-1` evaluate the
//! coordinates, the last row is all ones, so
//! `Phi(x)(y) = t_{s-1} + sum_{i <= s-2} t_i y_i` for the digits `t_i` of `x`.

use crate::field::{FieldElement, FieldVector};
use crate::ring::{Ring, RingElement};

/// Something with a distinguished zero, for Hamming weights.
pub trait Symbol {
    fn is_zero_symbol(&self) -> bool;
}

impl Symbol for RingElement {
    fn is_zero_symbol(&self) -> bool {
        self.is_zero()
    }
}

impl Symbol for FieldElement {
    fn is_zero_symbol(&self) -> bool {
        self.is_zero()
    }
}

impl Symbol for u32 {
    fn is_zero_symbol(&self) -> bool {
        *self == 0
    }
}

pub fn hamming_weight<T: Symbol>(v: &[T]) -> usize {
    v.iter().filter(|x| !x.is_zero_symbol()).count()
}

pub fn hamming_distance<T: PartialEq>(a: &[T], b: &[T]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// The projection onto the residue field: the class of the lowest digit.
pub fn residue(ring: &Ring, x: RingElement) -> FieldElement {
    FieldElement(x.rank() % ring.q())
}

/// Generator matrix of `RM(s-1, 1)` over `F_q`, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayMatrix {
    rows: Vec<FieldVector>,
}

impl GrayMatrix {
    pub fn new(ring: &Ring) -> Self {
        let (q, s) = (ring.q(), ring.s());
        let len = ring.q_pow(s - 1);
        let mut rows: Vec<FieldVector> = (0..s - 1)
            .map(|i| (0..len).map(|y| FieldElement((y / ring.q_pow(i)) % q)).collect())
            .collect();
        rows.push(vec![FieldElement::ONE; len as usize]);
        GrayMatrix { rows }
    }

    pub fn rows(&self) -> &[FieldVector] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows[0].len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows[0].is_empty()
    }
}

/// Gray-maps single elements and vectors. Holds the matrix so repeated calls
/// do not rebuild it.
#[derive(Debug, Clone)]
pub struct GrayMap<'r> {
    ring: &'r Ring,
    matrix: GrayMatrix,
}

impl<'r> GrayMap<'r> {
    pub fn new(ring: &'r Ring) -> Self {
        GrayMap { ring, matrix: GrayMatrix::new(ring) }
    }

    pub fn matrix(&self) -> &GrayMatrix {
        &self.matrix
    }

    /// Length of the image of one ring coordinate, `q^{s-1}`.
    pub fn block_len(&self) -> usize {
        self.matrix.len()
    }

    pub fn map(&self, x: RingElement) -> FieldVector {
        let mut out = Vec::with_capacity(self.block_len());
        self.map_into(x.rank(), &mut out);
        out
    }

    pub fn map_vector(&self, v: &[RingElement]) -> FieldVector {
        let mut out = Vec::with_capacity(v.len() * self.block_len());
        for x in v {
            self.map_into(x.rank(), &mut out);
        }
        out
    }

    /// Digit vector times the matrix.
    pub(crate) fn map_into(&self, rank: u32, out: &mut FieldVector) {
        let field = self.ring.field();
        let q = self.ring.q();
        let s = self.ring.s() as usize;
        let digits: Vec<u32> = (0..s).map(|i| (rank / self.ring.q_pow(i as u32)) % q).collect();
        for col in 0..self.block_len() {
            let mut acc = 0u32;
            for (d, row) in digits.iter().zip(&self.matrix.rows) {
                if *d != 0 {
                    acc = field.add_idx(acc, field.mul_idx(*d, row[col].index()));
                }
            }
            out.push(FieldElement(acc));
        }
    }
}

pub fn gray_map(ring: &Ring, x: RingElement) -> FieldVector {
    GrayMap::new(ring).map(x)
}

pub fn gray_map_vector(ring: &Ring, v: &[RingElement]) -> FieldVector {
    GrayMap::new(ring).map_vector(v)
}

/// Checks that the Gray images of `R` form a generalized Hadamard code built
/// from `H(q, q^{s-2})`: the images of elements with top digit zero are the
/// rows of a `q^{s-1} x q^{s-1}` matrix whose row differences take every
/// field value exactly `q^{s-2}` times, and `Phi(R)` is the union of that row
/// set's translates by constant vectors. Needs `s >= 2`.
pub fn check_generalized_hadamard(ring: &Ring) -> Result<(), String> {
    let s = ring.s();
    if s < 2 {
        return Err("generalized Hadamard check needs s >= 2".into());
    }
    let gray = GrayMap::new(ring);
    let field = ring.field();
    let order = ring.q_pow(s - 1);
    let lambda = ring.q_pow(s - 2) as usize;
    // Elements with top digit zero have rank < q^{s-1}.
    let rows: Vec<FieldVector> = (0..order).map(|rank| gray.map(ring.element(rank).unwrap())).collect();
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            let mut tally = vec![0usize; ring.q() as usize];
            for (a, b) in rows[i].iter().zip(&rows[j]) {
                tally[field.sub(*a, *b).index() as usize] += 1;
            }
            if let Some(bad) = tally.iter().position(|&c| c != lambda) {
                return Err(format!("rows {i},{j}: value {bad} appears {} times, want {lambda}", tally[bad]));
            }
        }
    }
    let mut union: Vec<FieldVector> = Vec::with_capacity(ring.size() as usize);
    for a in field.elements() {
        for row in &rows {
            union.push(row.iter().map(|&x| field.add(x, a)).collect());
        }
    }
    let mut images: Vec<FieldVector> = ring.elements().map(|x| gray.map(x)).collect();
    union.sort();
    images.sort();
    if union != images {
        return Err("Phi(R) differs from the union of translates of the GH rows".into());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingSpec;

    fn fe(v: &[u32]) -> FieldVector {
        v.iter().map(|&x| FieldElement(x)).collect()
    }

    #[test]
    fn residues() {
        let r9 = Ring::new(RingSpec::zps(3, 2)).unwrap();
        assert_eq!(residue(&r9, r9.element(7).unwrap()), FieldElement(1));
        assert_eq!(residue(&r9, r9.zero()), FieldElement::ZERO);
        assert_eq!(residue(&r9, r9.one()), FieldElement::ONE);
        let g = Ring::new(RingSpec::galois(2, 2, 2)).unwrap();
        // 2 + w has rank 6; its residue is w, index 2 in F_4.
        let x = g.element(6).unwrap();
        assert_eq!(g.pretty(x), "w+2");
        assert_eq!(residue(&g, x), FieldElement(2));
    }

    #[test]
    fn matrices() {
        let r4 = Ring::new(RingSpec::zps(2, 2)).unwrap();
        assert_eq!(GrayMatrix::new(&r4).rows(), &[fe(&[0, 1]), fe(&[1, 1])]);
        let r8 = Ring::new(RingSpec::zps(2, 3)).unwrap();
        assert_eq!(GrayMatrix::new(&r8).rows(), &[fe(&[0, 1, 0, 1]), fe(&[0, 0, 1, 1]), fe(&[1, 1, 1, 1])]);
        for spec in [RingSpec::zps(5, 1), RingSpec::fqu(2, 2, 1)] {
            let r = Ring::new(spec).unwrap();
            assert_eq!(GrayMatrix::new(&r).rows(), &[fe(&[1])]);
        }
    }

    #[test]
    fn z4_gray_map() {
        let r4 = Ring::new(RingSpec::zps(2, 2)).unwrap();
        let images: Vec<FieldVector> = r4.elements().map(|x| gray_map(&r4, x)).collect();
        assert_eq!(images, vec![fe(&[0, 0]), fe(&[0, 1]), fe(&[1, 1]), fe(&[1, 0])]);
    }

    #[test]
    fn z9_gray_of_three() {
        let r9 = Ring::new(RingSpec::zps(3, 2)).unwrap();
        let img = gray_map(&r9, r9.element(3).unwrap());
        assert_eq!(img, fe(&[1, 1, 1]));
        assert_eq!(hamming_weight(&img), 3);
    }

    #[test]
    fn zero_maps_to_zero() {
        for spec in [RingSpec::galois(2, 2, 2), RingSpec::fqu(3, 1, 3), RingSpec::zps(2, 4)] {
            let r = Ring::new(spec).unwrap();
            assert!(gray_map(&r, r.zero()).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn hamming_weights() {
        let r4 = Ring::new(RingSpec::zps(2, 2)).unwrap();
        let v = |xs: &[u32]| xs.iter().map(|&x| r4.element(x).unwrap()).collect::<Vec<_>>();
        assert_eq!(hamming_weight(&v(&[0, 1, 2, 3])), 3);
        assert_eq!(hamming_weight(&v(&[0, 0])), 0);
        assert_eq!(hamming_weight(&v(&[1, 1, 1, 1, 0, 2])), 5);
        assert_eq!(hamming_weight(&fe(&[0, 2, 0, 1])), 2);
    }

    #[test]
    fn isometry_and_injectivity() {
        let specs = [
            RingSpec::zps(2, 2),
            RingSpec::zps(2, 3),
            RingSpec::zps(3, 2),
            RingSpec::zps(3, 3),
            RingSpec::galois(2, 2, 2),
            RingSpec::galois(3, 2, 2),
            RingSpec::galois(2, 3, 2),
            RingSpec::fqu(2, 1, 2),
            RingSpec::fqu(2, 2, 2),
            RingSpec::fqu(3, 1, 3),
        ];
        for spec in specs {
            let r = Ring::new(spec.clone()).unwrap();
            let gray = GrayMap::new(&r);
            let images: Vec<FieldVector> = r.elements().map(|x| gray.map(x)).collect();
            for x in r.elements() {
                let img = &images[x.rank() as usize];
                assert_eq!(hamming_weight(img) as u64, r.homogeneous_weight(x), "{spec} {x:?}");
                for y in r.elements() {
                    let d = hamming_distance(img, &images[y.rank() as usize]) as u64;
                    assert_eq!(d, r.homogeneous_weight(r.sub(x, y)), "{spec}");
                }
            }
            let mut sorted = images.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), r.size() as usize);
        }
    }

    #[test]
    fn generalized_hadamard() {
        for spec in [RingSpec::zps(2, 2), RingSpec::zps(3, 3), RingSpec::galois(2, 2, 2), RingSpec::fqu(2, 2, 3)] {
            let r = Ring::new(spec).unwrap();
            assert_eq!(check_generalized_hadamard(&r), Ok(()));
        }
        let f3 = Ring::new(RingSpec::zps(3, 1)).unwrap();
        assert!(check_generalized_hadamard(&f3).is_err());
    }
}
