//! Exact characteristic polynomials over the integers.
//!
//! Berkowitz's algorithm builds the polynomial of each leading principal
//! submatrix from the previous one through a lower-triangular Toeplitz
//! product. It uses only ring operations, so every intermediate stays an
//! integer.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::graph::SymIntMatrix;

/// Integer polynomial `x^n + c_1 x^(n-1) + … + c_n`, coefficients stored
/// highest degree first (`coeffs[k] = c_k`, `coeffs[0] = 1` when monic).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        CharPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        CharPoly {
            coeffs: coeffs.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    pub fn one() -> Self {
        CharPoly::from_i64(&[1])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        CharPoly::from_i64(&[1, 0])
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `c_k`, the coefficient of `x^(n-k)`.
    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    /// `(-1)^n c_n`.
    pub fn determinant(&self) -> BigInt {
        let cn = self.coeffs.last().cloned().unwrap_or_else(BigInt::one);
        if self.degree() % 2 == 1 {
            -cn
        } else {
            cn
        }
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> CharPoly {
        let mut coeffs = self.coeffs.clone();
        coeffs.extend(std::iter::repeat_with(BigInt::zero).take(k));
        CharPoly { coeffs }
    }

    pub fn scale(&self, k: &BigInt) -> CharPoly {
        CharPoly {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Sum with constant terms aligned.
    pub fn add(&self, other: &CharPoly) -> CharPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let pad = |p: &CharPoly| {
            let mut v = vec![BigInt::zero(); len - p.coeffs.len()];
            v.extend(p.coeffs.iter().cloned());
            v
        };
        let (a, b) = (pad(self), pad(other));
        let mut coeffs: Vec<BigInt> = a.into_iter().zip(b).map(|(x, y)| x + y).collect();
        while coeffs.len() > 1 && coeffs[0].is_zero() {
            coeffs.remove(0);
        }
        CharPoly { coeffs }
    }

    pub fn sub(&self, other: &CharPoly) -> CharPoly {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn add_constant(&self, c: i64) -> CharPoly {
        self.add(&CharPoly::from_i64(&[c]))
    }

    pub fn mul(&self, other: &CharPoly) -> CharPoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        CharPoly { coeffs }
    }

    /// Horner evaluation in floating point.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// `Σ |c_k|` as a float.
    pub fn l1_norm(&self) -> f64 {
        self.coeffs
            .iter()
            .map(|c| c.abs().to_f64().unwrap_or(f64::INFINITY))
            .sum()
    }

    /// Whether every `c_k` with odd `k` vanishes.
    pub fn odd_coefficients_vanish(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let pow = n - k;
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let show_mag = !mag.is_one() || pow == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match pow {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{pow}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Serialize for CharPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for CharPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        let coeffs = strings
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CharPoly { coeffs })
    }
}

/// Characteristic polynomial `det(xI − M)` by Berkowitz's algorithm.
pub fn char_poly_exact(m: &SymIntMatrix) -> CharPoly {
    let n = m.n();
    let entry = |i: usize, j: usize| BigInt::from(m.get(i, j));
    let mut poly = vec![BigInt::one()];
    for k in 0..n {
        // Toeplitz column: 1, -a_kk, -R C, -R M C, …, -R M^(k-1) C where
        // M is the leading k×k block, R the row and C the column next to it.
        let mut col = Vec::with_capacity(k + 2);
        col.push(BigInt::one());
        col.push(-entry(k, k));
        let mut v: Vec<BigInt> = (0..k).map(|i| entry(i, k)).collect();
        for _ in 0..k {
            let rv: BigInt = (0..k).map(|j| entry(k, j) * &v[j]).sum();
            col.push(-rv);
            v = (0..k)
                .map(|i| (0..k).map(|j| entry(i, j) * &v[j]).sum())
                .collect();
        }
        let next: Vec<BigInt> = (0..k + 2)
            .map(|i| {
                (0..=i.min(k))
                    .map(|j| &col[i - j] * &poly[j])
                    .sum::<BigInt>()
            })
            .collect();
        poly = next;
    }
    CharPoly { coeffs: poly }
}

/// `det(M)` read off the constant term of the characteristic polynomial.
pub fn determinant_exact(m: &SymIntMatrix) -> BigInt {
    char_poly_exact(m).determinant()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{ad_matrix, Family};

    fn ad(f: Family) -> SymIntMatrix {
        ad_matrix(&f.build().unwrap()).unwrap()
    }

    /// Leibniz determinant over all permutations.
    fn leibniz(m: &SymIntMatrix, idx: &[usize]) -> i128 {
        fn rec(
            m: &SymIntMatrix,
            idx: &[usize],
            row: usize,
            used: &mut Vec<bool>,
            perm: &mut Vec<usize>,
            acc: &mut i128,
        ) {
            let k = idx.len();
            if row == k {
                let mut inversions = 0;
                for a in 0..k {
                    for b in (a + 1)..k {
                        if perm[a] > perm[b] {
                            inversions += 1;
                        }
                    }
                }
                let prod: i128 = (0..k)
                    .map(|r| m.get(idx[r], idx[perm[r]]) as i128)
                    .product();
                *acc += if inversions % 2 == 0 { prod } else { -prod };
                return;
            }
            for c in 0..k {
                if !used[c] {
                    used[c] = true;
                    perm.push(c);
                    rec(m, idx, row + 1, used, perm, acc);
                    perm.pop();
                    used[c] = false;
                }
            }
        }
        let mut acc = 0;
        rec(
            m,
            idx,
            0,
            &mut vec![false; idx.len()],
            &mut Vec::new(),
            &mut acc,
        );
        acc
    }

    /// `c_k = (-1)^k Σ (principal k-minors)`.
    fn brute_char_poly(m: &SymIntMatrix) -> Vec<i128> {
        let n = m.n();
        let mut coeffs = vec![0i128; n + 1];
        for mask in 0u32..(1 << n) {
            let idx: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            let k = idx.len();
            let minor = if k == 0 { 1 } else { leibniz(m, &idx) };
            coeffs[k] += if k.is_multiple_of(2) { minor } else { -minor };
        }
        coeffs
    }

    fn as_i128(p: &CharPoly) -> Vec<i128> {
        p.coeffs().iter().map(|c| c.to_i128().unwrap()).collect()
    }

    #[test]
    fn frozen_examples() {
        assert_eq!(
            char_poly_exact(&ad(Family::Path(2))),
            CharPoly::from_i64(&[1, 0, -1])
        );
        assert_eq!(
            char_poly_exact(&ad(Family::Path(4))),
            CharPoly::from_i64(&[1, 0, -12, 0, 4])
        );
        assert_eq!(
            char_poly_exact(&ad(Family::Complete(3))),
            CharPoly::from_i64(&[1, 0, -3, -2])
        );
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant_exact(&ad(Family::Star(4))), BigInt::from(-12));
        assert_eq!(determinant_exact(&ad(Family::Path(2))), BigInt::from(-1));
        assert_eq!(determinant_exact(&ad(Family::Path(6))), BigInt::from(-36));
    }

    #[test]
    fn agrees_with_principal_minor_expansion() {
        for f in [
            Family::Path(4),
            Family::Path(5),
            Family::Star(5),
            Family::Cycle(5),
            Family::Cycle(6),
            Family::DoubleStar(2, 3),
            Family::Complete(4),
            Family::CompleteBipartite(2, 3),
        ] {
            let m = ad(f);
            assert_eq!(as_i128(&char_poly_exact(&m)), brute_char_poly(&m), "{f}");
        }
    }

    #[test]
    fn non_graph_matrix() {
        let m =
            SymIntMatrix::from_rows(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]).unwrap();
        assert_eq!(as_i128(&char_poly_exact(&m)), brute_char_poly(&m));
        assert_eq!(determinant_exact(&m), BigInt::from(4));
    }

    #[test]
    fn display_and_json() {
        let p = CharPoly::from_i64(&[1, 0, -12, 0, 4]);
        assert_eq!(p.to_string(), "x^4 - 12x^2 + 4");
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"["1","0","-12","0","4"]"#);
        assert_eq!(serde_json::from_str::<CharPoly>(&json).unwrap(), p);
        assert_eq!(CharPoly::from_i64(&[1, -1, 0]).to_string(), "x^2 - x");
    }
}
