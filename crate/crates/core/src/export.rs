//! Text formats for generator matrices, Gray images and codeword dumps.
//!
//! Matrix file: a header `family k n ring-spec`, then `k` lines of
//! space-separated serialized elements.

use std::io::Write;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gray::GrayMap;
use crate::ring::{Ring, RingSpec};
use crate::simplex::{GeneratorMatrix, MatrixKind};
use crate::Limits;

pub fn matrix_to_text(matrix: &GeneratorMatrix) -> String {
    let ring = matrix.ring();
    let mut out = format!("{} {} {} {}\n", matrix.kind().name(), matrix.k(), matrix.n(), ring.spec());
    for i in 0..matrix.k() {
        let row: Vec<String> = matrix.row(i).into_iter().map(|x| ring.serialize_element(x)).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Reads a matrix written by [`matrix_to_text`].
pub fn parse_matrix(text: &str, limits: &Limits) -> Result<GeneratorMatrix> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty matrix file".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [kind, k, n, spec] = fields[..] else {
        return Err(Error::Parse(format!("bad header {header:?}")));
    };
    let kind: MatrixKind = kind.parse()?;
    let k: usize = k.parse().map_err(|_| Error::Parse(format!("bad k {k:?}")))?;
    let n: usize = n.parse().map_err(|_| Error::Parse(format!("bad n {n:?}")))?;
    let spec: RingSpec = spec.parse()?;
    let ring = Arc::new(Ring::with_cap(spec, limits.max_elements)?);
    let rows = lines
        .map(|l| l.split_whitespace().map(|t| ring.parse_element(t)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    if rows.len() != k || rows.iter().any(|r| r.len() != n) {
        return Err(Error::Parse(format!("expected {k} rows of {n} entries")));
    }
    GeneratorMatrix::from_rows(&ring, kind, rows)
}

/// Writes the Gray image of every codeword, one line of field indices each,
/// in enumeration order.
pub fn write_gray_image(matrix: &GeneratorMatrix, limits: &Limits, out: &mut impl Write) -> Result<()> {
    let ring = matrix.ring();
    let total = matrix.codeword_count(limits)?;
    let gray = GrayMap::new(ring);
    let images: Vec<String> = ring
        .elements()
        .map(|x| gray.map(x).iter().map(|f| f.index().to_string()).collect::<Vec<_>>().join(" "))
        .collect();
    let mut result = Ok(());
    matrix.for_each_raw(0..total, |_, word| {
        if result.is_err() {
            return;
        }
        let line: Vec<&str> = word.iter().map(|&x| images[x as usize].as_str()).collect();
        result = writeln!(out, "{}", line.join(" "));
    });
    Ok(result?)
}

/// Writes `coefficients | codeword` lines in enumeration order.
pub fn write_codewords(matrix: &GeneratorMatrix, limits: &Limits, out: &mut impl Write) -> Result<()> {
    let ring = matrix.ring();
    let total = matrix.codeword_count(limits)?;
    let names: Vec<String> = ring.elements().map(|x| ring.serialize_element(x)).collect();
    let join = |v: &[u32]| v.iter().map(|&x| names[x as usize].as_str()).collect::<Vec<_>>().join(" ");
    let mut result = Ok(());
    matrix.for_each_raw(0..total, |coeffs, word| {
        if result.is_ok() {
            result = writeln!(out, "{} | {}", join(coeffs), join(word));
        }
    });
    Ok(result?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplex::{CodeFamily, SimplexCode};

    #[test]
    fn matrix_round_trip() {
        let l = Limits::default();
        for spec in [RingSpec::zps(3, 2), RingSpec::galois(2, 2, 2), RingSpec::fqu(3, 1, 2)] {
            let ring = Arc::new(Ring::new(spec).unwrap());
            let g = GeneratorMatrix::beta(&ring, 2, &l).unwrap();
            let text = matrix_to_text(&g);
            let back = parse_matrix(&text, &l).unwrap();
            assert_eq!(back, g);
            assert_eq!(back.kind(), MatrixKind::Beta);
        }
    }

    #[test]
    fn z9_beta_text() {
        let ring = Arc::new(Ring::new(RingSpec::zps(3, 2)).unwrap());
        let g = GeneratorMatrix::beta(&ring, 2, &Limits::default()).unwrap();
        assert_eq!(
            matrix_to_text(&g),
            "beta 2 12 zps:p=3:s=2\n1 1 1 1 1 1 1 1 1 0 3 6\n0 1 2 3 4 5 6 7 8 1 1 1\n"
        );
    }

    #[test]
    fn malformed_matrices() {
        let l = Limits::default();
        assert!(parse_matrix("", &l).is_err());
        assert!(parse_matrix("beta 2 3 zps:p=2:s=2\n1 1 1\n", &l).is_err());
        assert!(parse_matrix("beta 1 2 zps:p=2:s=2\n1 9\n", &l).is_err());
        assert!(parse_matrix("beta 1 2\n1 1\n", &l).is_err());
    }

    #[test]
    fn gray_image_lines() {
        let l = Limits::default();
        let code = SimplexCode::new(Arc::new(Ring::new(RingSpec::zps(2, 2)).unwrap()), CodeFamily::Alpha, 1, &l).unwrap();
        let mut buf = Vec::new();
        write_gray_image(code.generator(), &l, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines, ["0 0 0 0 0 0 0 0", "0 0 0 1 1 1 1 0", "0 0 1 1 0 0 1 1", "0 0 1 0 1 1 0 1"]);
    }

    #[test]
    fn codeword_dump() {
        let l = Limits::default();
        let code = SimplexCode::new(Arc::new(Ring::new(RingSpec::zps(2, 2)).unwrap()), CodeFamily::Beta, 2, &l).unwrap();
        let mut buf = Vec::new();
        write_codewords(code.generator(), &l, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 16);
        assert_eq!(text.lines().nth(1), Some("0 1 | 0 1 2 3 1 1"));
    }
}
