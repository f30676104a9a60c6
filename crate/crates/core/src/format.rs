//! Text formats for arrangements and explicit Varchenko matrices.
//!
//! Arrangement files start with `dim n`; every further line holds `n + 1`
//! rationals `a1 … an b` for the hyperplane `a·x = b`. Matrix files start with
//! `vmatrix <size> <num_hyperplanes>` followed by `size²` polynomials, one per
//! line, row-major. In both, `#` starts a comment.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::geometry::{Arrangement, Hyperplane, Rational};
use crate::polyring::Polynomial;
use crate::varchenko::VMatrix;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((i + 1, body))
    })
}

fn parse_rational(token: &str, line: usize) -> Result<Rational> {
    let value: Rational = token.parse().map_err(|_| Error::parse(line, format!("not a rational: `{token}`")))?;
    Ok(value)
}

fn header_value(body: &str, line: usize, keyword: &str) -> Result<Vec<usize>> {
    let mut tokens = body.split_whitespace();
    if tokens.next() != Some(keyword) {
        return Err(Error::parse(line, format!("expected `{keyword}` header")));
    }
    tokens
        .map(|t| t.parse::<usize>().map_err(|_| Error::parse(line, format!("not a count: `{t}`"))))
        .collect()
}

pub fn parse_arrangement(text: &str) -> Result<Arrangement> {
    let mut lines = content_lines(text);
    let (first, body) = lines.next().ok_or(Error::parse(1, "missing `dim n` header"))?;
    let dims = header_value(body, first, "dim")?;
    let [dim] = dims[..] else {
        return Err(Error::parse(first, "header must be `dim n`"));
    };
    if dim == 0 {
        return Err(Error::parse(first, "dimension must be positive"));
    }
    let mut hyperplanes: Vec<Hyperplane> = Vec::new();
    for (line, body) in lines {
        let values: Vec<Rational> =
            body.split_whitespace().map(|t| parse_rational(t, line)).collect::<Result<_>>()?;
        if values.len() != dim + 1 {
            return Err(Error::parse(line, format!("expected {} numbers, found {}", dim + 1, values.len())));
        }
        let offset = values[dim].clone();
        let h = Hyperplane::new(values[..dim].to_vec(), offset).map_err(|e| Error::parse(line, e.to_string()))?;
        if let Some(k) = hyperplanes.iter().position(|g| g.same_subspace(&h)) {
            return Err(Error::parse(line, format!("duplicate of hyperplane {}", k + 1)));
        }
        hyperplanes.push(h);
    }
    Arrangement::new(dim, hyperplanes)
}

pub fn write_arrangement(arr: &Arrangement) -> String {
    let mut out = format!("dim {}\n", arr.dim());
    for h in arr.hyperplanes() {
        let parts: Vec<String> = h.normal().iter().chain(std::iter::once(h.offset())).map(|x| x.to_string()).collect();
        writeln!(out, "{}", parts.join(" ")).unwrap();
    }
    out
}

pub fn parse_vmatrix(text: &str) -> Result<VMatrix> {
    let mut lines = content_lines(text);
    let (first, body) = lines.next().ok_or(Error::parse(1, "missing `vmatrix` header"))?;
    let counts = header_value(body, first, "vmatrix")?;
    let [size, num_hyperplanes] = counts[..] else {
        return Err(Error::parse(first, "header must be `vmatrix <size> <num_hyperplanes>`"));
    };
    let mut entries = Vec::with_capacity(size * size);
    let mut last = first;
    for (line, body) in lines {
        let p = Polynomial::parse(body).map_err(|e| Error::parse(line, e))?;
        if let Some(v) = p.variables().iter().find(|v| v.hyperplane >= num_hyperplanes) {
            return Err(Error::parse(line, format!("variable {v} exceeds {num_hyperplanes} hyperplanes")));
        }
        entries.push(p);
        last = line;
    }
    if entries.len() != size * size {
        return Err(Error::parse(last, format!("expected {} entries, found {}", size * size, entries.len())));
    }
    VMatrix::from_entries(size, num_hyperplanes, entries)
}

pub fn write_vmatrix(m: &VMatrix) -> String {
    let mut out = format!("vmatrix {} {}\n", m.size(), m.num_hyperplanes());
    for p in m.entries() {
        writeln!(out, "{p}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arrangement_round_trip() {
        let text = "# two lines\ndim 2\n1 0 0\n0 1/2 3  # y = 6\n";
        let arr = parse_arrangement(text).unwrap();
        assert_eq!(arr.len(), 2);
        let written = write_arrangement(&arr);
        assert_eq!(written, "dim 2\n1 0 0\n0 1/2 3\n");
        assert_eq!(parse_arrangement(&written).unwrap(), arr);
    }

    #[test]
    fn arrangement_errors_carry_lines() {
        assert_eq!(parse_arrangement("dim 2\n1 0 0\n2 0 0\n").unwrap_err(), Error::parse(3, "duplicate of hyperplane 1"));
        assert!(matches!(parse_arrangement("dim 2\n1 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_arrangement("dim 2\n0 0 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_arrangement("dim 1\nx 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_arrangement("2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_arrangement(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn empty_arrangement() {
        let arr = parse_arrangement("dim 2\n").unwrap();
        assert!(arr.is_empty());
    }

    #[test]
    fn matrix_round_trip() {
        let text = "vmatrix 2 1\n1\n1 * h1^-^1\n1 * h1^+^1\n1\n";
        let m = parse_vmatrix(text).unwrap();
        assert_eq!(m.size(), 2);
        m.check_shape().unwrap();
        let written = write_vmatrix(&m);
        assert_eq!(written, text);
        assert_eq!(parse_vmatrix(&written).unwrap(), m);
    }

    #[test]
    fn matrix_errors() {
        assert!(matches!(parse_vmatrix("vmatrix 2 1\n1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_vmatrix("vmatrix 1 1\n1 * h2^+\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_vmatrix("matrix 1 1\n1\n"), Err(Error::Parse { line: 1, .. })));
    }
}
