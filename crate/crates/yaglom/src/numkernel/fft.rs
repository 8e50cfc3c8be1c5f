//! Discrete Fourier transforms with the convention used throughout the
//! solver: for node values `v_j = q(ω^j)` with `ω = exp(2πi/n)` and a
//! polynomial `q` of degree < n, `ifft(v)` returns the coefficients of `q`:
//!
//!   c_k = (1/n) Σ_j v_j · exp(−2πi·jk/n)
//!
//! The forward evaluation (coefficients → values at the counterclockwise
//! roots of unity) is `eval_at_unit_roots`.

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{Error, Result};
use crate::par;

use super::matrix::ComplexMatrix;

fn require_power_of_two(n: usize) -> Result<()> {
    if n == 0 || !n.is_power_of_two() {
        return Err(Error::Config(format!(
            "transform length {n} must be a power of two"
        )));
    }
    Ok(())
}

/// Inverse transform recovering polynomial coefficients from values at the
/// n-th roots of unity in counterclockwise order (ξ_0 = 1).
pub fn ifft(values: &[Complex64]) -> Result<Vec<Complex64>> {
    let n = values.len();
    require_power_of_two(n)?;
    let mut buf = values.to_vec();
    let fft = FftPlanner::new().plan_fft_forward(n);
    fft.process(&mut buf);
    let scale = 1.0 / n as f64;
    for z in &mut buf {
        *z *= scale;
    }
    Ok(buf)
}

/// Evaluates the polynomial with the given coefficients at all n-th roots of
/// unity, `out_j = Σ_k c_k ω^{jk}`. Any length is accepted; this is the
/// exact inverse of `ifft` up to roundoff when n is a power of two.
pub fn eval_at_unit_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len();
    if n == 0 {
        return Vec::new();
    }
    let mut buf = coeffs.to_vec();
    let fft = FftPlanner::new().plan_fft_inverse(n);
    fft.process(&mut buf);
    buf
}

/// 2D inverse transform: `ifft` applied along both axes of a square matrix.
/// Recovers bivariate coefficients from evaluations on the tensor grid of
/// roots of unity, `c_{h,k} = (1/n²) Σ_{s,t} v_{s,t} ω^{−sh} ω^{−tk}`.
pub fn ifft2(values: &ComplexMatrix) -> Result<ComplexMatrix> {
    if !values.is_square() {
        return Err(Error::Config(format!(
            "2D transform requires a square matrix, got {}x{}",
            values.rows(),
            values.cols()
        )));
    }
    let n = values.rows();
    require_power_of_two(n)?;
    let fft = FftPlanner::new().plan_fft_forward(n);
    let scale = 1.0 / n as f64;

    // Transform along the second index (contiguous rows), transpose,
    // transform again, transpose back.
    let mut a = values.clone();
    for pass in 0..2 {
        let mut data = a;
        {
            let buf = unsafe {
                // rows are disjoint slices of the backing storage
                std::slice::from_raw_parts_mut(
                    data.row_mut(0).as_mut_ptr(),
                    n * n,
                )
            };
            par::for_each_chunk_mut(buf, n, |_i, row| {
                fft.process(row);
                for z in row.iter_mut() {
                    *z *= scale;
                }
            });
        }
        a = if pass == 0 { data.transpose() } else { data.transpose() };
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn constant_polynomial() {
        let values = vec![c(1.0, 0.0); 4];
        let coeffs = ifft(&values).unwrap();
        assert!((coeffs[0] - c(1.0, 0.0)).norm() < 1e-15);
        for k in 1..4 {
            assert!(coeffs[k].norm() < 1e-15);
        }
    }

    #[test]
    fn identity_polynomial() {
        // values_j = ω^j for n = 4 → q(z) = z
        let n = 4;
        let values: Vec<Complex64> = (0..n)
            .map(|j| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * j as f64 / n as f64))
            .collect();
        let coeffs = ifft(&values).unwrap();
        for (k, z) in coeffs.iter().enumerate() {
            let expect = if k == 1 { 1.0 } else { 0.0 };
            assert!((z - c(expect, 0.0)).norm() < 1e-15, "k={k} got {z}");
        }
    }

    #[test]
    fn rejects_non_power_of_two() {
        let values = vec![c(0.0, 0.0); 6];
        assert!(ifft(&values).is_err());
    }

    #[test]
    fn round_trip_degree_seven() {
        // Oracle: evaluate a random degree-7 polynomial at the 8th roots of
        // unity by Horner, then invert.
        let coeffs: Vec<Complex64> = (0..8)
            .map(|k| c(((k * 7 + 3) % 11) as f64 / 11.0, ((k * 5 + 1) % 13) as f64 / 13.0))
            .collect();
        let n = coeffs.len();
        let values: Vec<Complex64> = (0..n)
            .map(|j| {
                let z = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * j as f64 / n as f64);
                coeffs.iter().rev().fold(c(0.0, 0.0), |acc, &ck| acc * z + ck)
            })
            .collect();
        let recovered = ifft(&values).unwrap();
        for (a, b) in recovered.iter().zip(coeffs.iter()) {
            assert!((a - b).norm() < 1e-14);
        }
    }

    #[test]
    fn ifft2_all_ones() {
        let v = ComplexMatrix::from_fn(4, 4, |_, _| c(1.0, 0.0));
        let g = ifft2(&v).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let expect = if i == 0 && j == 0 { 1.0 } else { 0.0 };
                assert!((g[(i, j)] - c(expect, 0.0)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn ifft2_bilinear() {
        // values from q(x, y) = x·y on the 4×4 grid → only c_{1,1} = 1
        let n = 4;
        let w = |j: usize| {
            Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * j as f64 / n as f64)
        };
        let v = ComplexMatrix::from_fn(n, n, |s, t| w(s) * w(t));
        let g = ifft2(&v).unwrap();
        for h in 0..n {
            for k in 0..n {
                let expect = if h == 1 && k == 1 { 1.0 } else { 0.0 };
                assert!((g[(h, k)] - c(expect, 0.0)).norm() < 1e-14, "h={h} k={k}");
            }
        }
    }

    #[test]
    fn ifft2_round_trip() {
        // evaluate-then-invert oracle on a random 8×8 coefficient grid
        let n = 8;
        let coeffs = ComplexMatrix::from_fn(n, n, |h, k| {
            c(((h * 3 + k * 5) % 17) as f64 / 17.0, ((h + 2 * k) % 7) as f64 / 7.0)
        });
        let w = |j: usize| {
            Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * j as f64 / n as f64)
        };
        let values = ComplexMatrix::from_fn(n, n, |s, t| {
            let mut acc = c(0.0, 0.0);
            for h in 0..n {
                for k in 0..n {
                    let phase = w((s * h + t * k) % n);
                    acc += coeffs[(h, k)] * phase;
                }
            }
            acc
        });
        let got = ifft2(&values).unwrap();
        for h in 0..n {
            for k in 0..n {
                assert!((got[(h, k)] - coeffs[(h, k)]).norm() < 1e-13);
            }
        }
    }
}
