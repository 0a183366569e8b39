//! Closed-form AD characteristic polynomials and spectra for paths,
//! cycles and double stars.

use std::f64::consts::PI;

use num_bigint::BigInt;

use super::{CharPoly, Spectrum};
use crate::error::{Error, Result};

/// `Φ_n`, the characteristic polynomial of the path adjacency matrix:
/// `Φ_0 = 1`, `Φ_1 = x`, `Φ_n = x Φ_(n-1) − Φ_(n-2)`.
pub fn chebyshev_phi(n: usize) -> CharPoly {
    let mut prev = CharPoly::one();
    if n == 0 {
        return prev;
    }
    let mut cur = CharPoly::x();
    for _ in 2..=n {
        let next = cur.shift(1).sub(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// AD characteristic polynomial of `P_n`:
/// `Φ_n − (n−1)² Φ_(n−2) + 2(1−n)` for `n ≥ 3`.
pub fn path_charpoly_closed(n: usize) -> Result<CharPoly> {
    if n < 3 {
        return Err(Error::InvalidParameter(
            "closed form needs n >= 3; AD(P_2) has x^2 - 1".into(),
        ));
    }
    let k = (n - 1) as i64;
    Ok(chebyshev_phi(n)
        .sub(&chebyshev_phi(n - 2).scale(&BigInt::from(k * k)))
        .add_constant(-2 * k))
}

/// AD spectrum of `C_n`, `n ≥ 4`, evaluated at `k = 1..=n`.
///
/// `C_3` is rejected: its diameter is 1, where the AD matrix is the plain
/// adjacency matrix and the cycle formula no longer applies.
pub fn cycle_spectrum_closed(n: usize) -> Result<Spectrum> {
    match n {
        0..=2 => return Err(Error::InvalidParameter("cycle needs n >= 3".into())),
        3 => {
            return Err(Error::DiameterOne(
                "C_3 = K_3 has AD(C_3) = A(C_3); the cycle formula would give spectral radius 4 instead of 2"
                    .into(),
            ))
        }
        _ => {}
    }
    let nf = n as f64;
    let values = (1..=n)
        .map(|k| {
            let kf = k as f64;
            let base = 2.0 * (2.0 * PI * kf / nf).cos();
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            if n.is_multiple_of(2) {
                base + nf / 2.0 * sign
            } else {
                base + (nf - 1.0) * sign * (PI * kf / nf).cos()
            }
        })
        .collect();
    Ok(Spectrum::from_values(values))
}

/// AD characteristic polynomial of the double star `S_(n1,n2)`:
/// `x^(n1+n2−4) (x⁴ − (9n1n2 − 8n1 − 8n2 + 8) x² + 4(n1n2 − n1 − n2 + 1))`.
pub fn double_star_charpoly_closed(n1: usize, n2: usize) -> Result<CharPoly> {
    if n1 < 2 || n2 < 2 {
        return Err(Error::InvalidParameter(
            "double star needs n1, n2 >= 2".into(),
        ));
    }
    let (a, b) = (n1 as i64, n2 as i64);
    let quadratic = 9 * a * b - 8 * a - 8 * b + 8;
    let constant = 4 * (a * b - a - b + 1);
    Ok(CharPoly::from_i64(&[1, 0, -quadratic, 0, constant]).shift(n1 + n2 - 4))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chebyshev_values() {
        assert_eq!(chebyshev_phi(0), CharPoly::one());
        assert_eq!(chebyshev_phi(2), CharPoly::from_i64(&[1, 0, -1]));
        assert_eq!(chebyshev_phi(3), CharPoly::from_i64(&[1, 0, -2, 0]));
        assert_eq!(chebyshev_phi(4), CharPoly::from_i64(&[1, 0, -3, 0, 1]));
    }

    #[test]
    fn path_closed_values() {
        assert_eq!(
            path_charpoly_closed(4).unwrap(),
            CharPoly::from_i64(&[1, 0, -12, 0, 4])
        );
        assert_eq!(
            path_charpoly_closed(3).unwrap(),
            CharPoly::from_i64(&[1, 0, -6, -4])
        );
        assert!(path_charpoly_closed(2).is_err());
    }

    #[test]
    fn cycle_closed_c4() {
        let s = cycle_spectrum_closed(4).unwrap();
        assert!(s.matches(&Spectrum::from_values(vec![4.0, 0.0, -2.0, -2.0]), 1e-12));
        let c5 = cycle_spectrum_closed(5).unwrap();
        assert!((c5.largest() - 6.0).abs() < 1e-12);
        assert!(matches!(
            cycle_spectrum_closed(3),
            Err(Error::DiameterOne(_))
        ));
    }

    #[test]
    fn double_star_values() {
        assert_eq!(
            double_star_charpoly_closed(2, 2).unwrap(),
            CharPoly::from_i64(&[1, 0, -12, 0, 4])
        );
        assert_eq!(
            double_star_charpoly_closed(3, 3).unwrap(),
            CharPoly::from_i64(&[1, 0, -41, 0, 16, 0, 0])
        );
        assert_eq!(
            double_star_charpoly_closed(2, 3).unwrap(),
            CharPoly::from_i64(&[1, 0, -22, 0, 8, 0])
        );
        assert!(double_star_charpoly_closed(1, 4).is_err());
    }
}
