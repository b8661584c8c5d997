//! Polynomial and matrix identities over `F_3` behind the order-351 case:
//! the factorization of `(X^13 - 1)/(X - 1)`, the minimal polynomial of
//! the action matrix, and the conjugacy classes of its powers.

use crate::algebra::W_MATRIX;
use std::fmt;
use thiserror::Error;

/// Dense coefficient vector over `F_3`, constant term first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly3(Vec<u8>);

impl Poly3 {
    /// Coefficients are reduced mod 3 and trailing zeros trimmed.
    pub fn new(coeffs: &[i64]) -> Poly3 {
        let mut c: Vec<u8> = coeffs.iter().map(|&v| v.rem_euclid(3) as u8).collect();
        while c.last() == Some(&0) {
            c.pop();
        }
        Poly3(c)
    }

    pub fn x_power_minus_one(n: usize) -> Poly3 {
        let mut c = vec![0i64; n + 1];
        c[0] = -1;
        c[n] = 1;
        Poly3::new(&c)
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn mul(&self, other: &Poly3) -> Poly3 {
        if self.0.is_empty() || other.0.is_empty() {
            return Poly3(Vec::new());
        }
        let mut out = vec![0u16; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in other.0.iter().enumerate() {
                out[i + j] += a as u16 * b as u16;
            }
        }
        Poly3::new(&out.iter().map(|&v| v as i64).collect::<Vec<i64>>())
    }
}

impl fmt::Display for Poly3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "X")?,
                (1, c) => write!(f, "{c}X")?,
                (i, 1) => write!(f, "X^{i}")?,
                (i, c) => write!(f, "{c}X^{i}")?,
            }
        }
        Ok(())
    }
}

/// The four cubic factors of `(X^13 - 1)/(X - 1)` over `F_3`, in catalog
/// order: `X^3 - X - 1`, `X^3 + X^2 - 1`, `X^3 + X^2 + X - 1`,
/// `X^3 - X^2 - X - 1`.
pub fn cubic_factors() -> [Poly3; 4] {
    [
        Poly3::new(&[-1, -1, 0, 1]),
        Poly3::new(&[-1, 0, 1, 1]),
        Poly3::new(&[-1, 1, 1, 1]),
        Poly3::new(&[-1, -1, -1, 1]),
    ]
}

type Mat3 = [[u8; 3]; 3];

fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut out = [[0u8; 3]; 3];
    for r in 0..3 {
        for c in 0..3 {
            let mut acc = 0u16;
            for k in 0..3 {
                acc += a[r][k] as u16 * b[k][c] as u16;
            }
            out[r][c] = (acc % 3) as u8;
        }
    }
    out
}

fn mat_identity() -> Mat3 {
    [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
}

fn mat_power(m: &Mat3, k: usize) -> Mat3 {
    let mut out = mat_identity();
    for _ in 0..k {
        out = mat_mul(&out, m);
    }
    out
}

/// Minimal polynomial by kernel search over `I, M, M^2, M^3`: the lowest
/// degree monic combination that kills the matrix, found by trying all
/// coefficient vectors over `F_3`.
pub fn minimal_polynomial(m: &Mat3) -> Poly3 {
    let powers = [mat_identity(), *m, mat_power(m, 2), mat_power(m, 3)];
    for degree in 1..=3usize {
        let mut coeffs = vec![0u8; degree];
        loop {
            // check M^degree + sum c_i M^i = 0
            let mut ok = true;
            'cells: for r in 0..3 {
                for c in 0..3 {
                    let mut acc = powers[degree][r][c] as u16;
                    for (i, &ci) in coeffs.iter().enumerate() {
                        acc += ci as u16 * powers[i][r][c] as u16;
                    }
                    if acc % 3 != 0 {
                        ok = false;
                        break 'cells;
                    }
                }
            }
            if ok {
                let mut full: Vec<i64> = coeffs.iter().map(|&c| c as i64).collect();
                full.push(1);
                return Poly3::new(&full);
            }
            // next coefficient vector
            let mut i = 0;
            loop {
                if i == degree {
                    break;
                }
                coeffs[i] += 1;
                if coeffs[i] < 3 {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
            if i == degree {
                break;
            }
        }
    }
    unreachable!("a 3x3 matrix satisfies a monic cubic")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum F3Error {
    #[error("factorization mismatch: product is {got}, want {want}")]
    Factorization { got: String, want: String },
    #[error("minimal polynomial of the action matrix is {0}, want X^3 + 2X + 2")]
    WrongMinimalPolynomial(String),
    #[error("conjugacy rows mismatch: got {0:?}")]
    WrongRows(Vec<Vec<usize>>),
}

/// Outcome of the identity suite: the minimal polynomial of each power of
/// the action matrix and the induced partition of `k = 1..12`.
#[derive(Debug, Clone)]
pub struct F3Report {
    pub minpoly_of_power: Vec<(usize, Poly3)>,
    pub rows: [Vec<usize>; 4],
}

/// Checks, in order: the product of `(X - 1)` with the four cubics equals
/// `X^13 - 1`; the action matrix has minimal polynomial `X^3 - X - 1`; and
/// powers of the matrix share minimal polynomials exactly along the rows
/// `{1,3,9}, {2,5,6}, {4,12,10}, {7,8,11}`, one distinct cubic per row.
pub fn verify_f3_identities() -> Result<F3Report, F3Error> {
    let cubics = cubic_factors();
    let mut product = Poly3::new(&[-1, 1]); // X - 1
    for c in &cubics {
        product = product.mul(c);
    }
    let want = Poly3::x_power_minus_one(13);
    if product != want {
        return Err(F3Error::Factorization {
            got: product.to_string(),
            want: want.to_string(),
        });
    }

    let w = W_MATRIX;
    let minpoly_w = minimal_polynomial(&w);
    if minpoly_w != cubics[0] {
        return Err(F3Error::WrongMinimalPolynomial(minpoly_w.to_string()));
    }

    let minpolys: Vec<(usize, Poly3)> =
        (1..=12).map(|k| (k, minimal_polynomial(&mat_power(&w, k)))).collect();
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for c in &cubics {
        rows.push(minpolys.iter().filter(|(_, m)| m == c).map(|(k, _)| *k).collect());
    }
    let expected: [Vec<usize>; 4] =
        [vec![1, 3, 9], vec![2, 5, 6], vec![4, 10, 12], vec![7, 8, 11]];
    let mut sorted = rows.clone();
    for r in &mut sorted {
        r.sort_unstable();
    }
    if sorted != expected {
        return Err(F3Error::WrongRows(rows));
    }
    Ok(F3Report {
        minpoly_of_power: minpolys,
        rows: expected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_suite_passes() {
        let report = verify_f3_identities().unwrap();
        assert_eq!(report.rows[0], vec![1, 3, 9]);
        assert_eq!(report.rows[2], vec![4, 10, 12]);
    }

    #[test]
    fn minpoly_of_w_is_first_cubic() {
        assert_eq!(minimal_polynomial(&W_MATRIX), Poly3::new(&[-1, -1, 0, 1]));
    }

    #[test]
    fn shared_minpolys_within_a_row() {
        let m2 = mat_power(&W_MATRIX, 2);
        let m5 = mat_power(&W_MATRIX, 5);
        let m6 = mat_power(&W_MATRIX, 6);
        assert_eq!(minimal_polynomial(&m2), minimal_polynomial(&m5));
        assert_eq!(minimal_polynomial(&m5), minimal_polynomial(&m6));
        assert_ne!(minimal_polynomial(&m2), minimal_polynomial(&W_MATRIX));
    }

    #[test]
    fn poly_multiplication() {
        let a = Poly3::new(&[1, 1]); // 1 + X
        let b = Poly3::new(&[2, 1]); // 2 + X
        assert_eq!(a.mul(&b), Poly3::new(&[2, 0, 1])); // 2 + X^2 over F_3
    }
}
