use std::path::Path as FsPath;

use crate::error::{PciaError, Result};

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn from_row_major(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(PciaError::DimensionMismatch {
                expected: rows * cols,
                actual: data.len(),
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            data[i * n + i] = 1.0;
        }
        Self {
            rows: n,
            cols: n,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.cols + col]
    }

    /// `self * x`.
    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        debug_assert_eq!(x.len(), self.cols);
        self.data
            .chunks_exact(self.cols)
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }
}

/// Whitespace-separated finite reals, in file order.
fn read_reals(path: &FsPath) -> Result<Vec<f64>> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| PciaError::Io {
        path: shown.clone(),
        source,
    })?;
    let mut values = Vec::new();
    for (row, line) in text.lines().enumerate() {
        for (column, token) in line.split_whitespace().enumerate() {
            match token.parse::<f64>() {
                Ok(v) if v.is_finite() => values.push(v),
                _ => {
                    return Err(PciaError::MatrixParse {
                        path: shown,
                        row: row + 1,
                        column: column + 1,
                        token: token.to_string(),
                    })
                }
            }
        }
    }
    Ok(values)
}

/// Read a `dim x dim` row-major matrix from a whitespace-separated text file.
pub fn load_matrix(path: impl AsRef<FsPath>, dim: usize) -> Result<Matrix> {
    let path = path.as_ref();
    let values = read_reals(path)?;
    if values.len() != dim * dim {
        return Err(PciaError::MatrixElementCount {
            path: path.display().to_string(),
            expected: dim * dim,
            found: values.len(),
        });
    }
    Matrix::from_row_major(dim, dim, values)
}

/// Read a length-`dim` vector (e.g. a shift) in the same format.
pub fn load_vector(path: impl AsRef<FsPath>, dim: usize) -> Result<Vec<f64>> {
    let path = path.as_ref();
    let values = read_reals(path)?;
    if values.len() != dim {
        return Err(PciaError::MatrixElementCount {
            path: path.display().to_string(),
            expected: dim,
            found: values.len(),
        });
    }
    Ok(values)
}
