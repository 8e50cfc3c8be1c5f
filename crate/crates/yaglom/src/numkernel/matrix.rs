use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::par;

/// Dense complex matrix, row-major: entry `(i, j)` lives at `data[i * cols + j]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    /// Builds the matrix entry by entry; rows are filled in parallel.
    pub fn from_fn<F>(rows: usize, cols: usize, f: F) -> Self
    where
        F: Fn(usize, usize) -> Complex64 + Sync,
    {
        let mut m = Self::zeros(rows, cols);
        par::for_each_chunk_mut(&mut m.data, cols.max(1), |i, row| {
            for (j, slot) in row.iter_mut().enumerate() {
                *slot = f(i, j);
            }
        });
        m
    }

    pub fn from_row_major(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Config(format!(
                "matrix data length {} does not match {}x{}",
                data.len(),
                rows,
                cols
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [Complex64] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub(crate) fn data_mut(&mut self) -> &mut [Complex64] {
        &mut self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn frobenius_norm(&self) -> f64 {
        let n = self.data.len();
        let data = &self.data;
        par::block_fold(
            n,
            8192,
            |range| data[range].iter().map(|z| z.norm_sqr()).sum::<f64>(),
            |a, b| a + b,
        )
        .unwrap_or(0.0)
        .sqrt()
    }

    /// `self * x`, computed row by row in parallel.
    pub fn matvec(&self, x: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(x.len(), self.cols);
        let cols = self.cols;
        let data = &self.data;
        par::map_collect(self.rows, |i| {
            let row = &data[i * cols..(i + 1) * cols];
            let mut acc = Complex64::new(0.0, 0.0);
            for (a, b) in row.iter().zip(x.iter()) {
                acc += a * b;
            }
            acc
        })
    }
}

impl std::ops::Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Euclidean norm guarded against overflow for entries near 1e300.
pub(crate) fn norm2_scaled(v: &[Complex64]) -> f64 {
    let mut peak = 0.0f64;
    for z in v {
        peak = peak.max(z.re.abs()).max(z.im.abs());
    }
    if peak == 0.0 || !peak.is_finite() {
        return if peak.is_finite() { 0.0 } else { f64::INFINITY };
    }
    let inv = 1.0 / peak;
    let mut acc = 0.0f64;
    for z in v {
        let re = z.re * inv;
        let im = z.im * inv;
        acc += re * re + im * im;
    }
    peak * acc.sqrt()
}
