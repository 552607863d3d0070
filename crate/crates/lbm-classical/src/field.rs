//! Scalar grid fields with CSV import/export.

use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum LbmError {
    #[error("field shape {got_nx}x{got_ny} does not match expected {nx}x{ny}")]
    ShapeMismatch {
        nx: usize,
        ny: usize,
        got_nx: usize,
        got_ny: usize,
    },
    #[error("non-finite value at node ({x},{y})")]
    NonFinite { x: usize, y: usize },
    #[error("csv parse error at line {line}: {reason}")]
    CsvParse { line: usize, reason: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// What a field holds; used for output naming.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldRole {
    Omega,
    Psi,
    U,
    V,
    Source,
}

impl FieldRole {
    pub fn name(&self) -> &'static str {
        match self {
            FieldRole::Omega => "omega",
            FieldRole::Psi => "psi",
            FieldRole::U => "u",
            FieldRole::V => "v",
            FieldRole::Source => "source",
        }
    }
}

/// An `nx × ny` grid of reals, row-major with x fastest.
#[derive(Debug, Clone, PartialEq)]
pub struct Field {
    nx: usize,
    ny: usize,
    data: Vec<f64>,
}

impl Field {
    pub fn zeros(nx: usize, ny: usize) -> Self {
        Self {
            nx,
            ny,
            data: vec![0.0; nx * ny],
        }
    }

    pub fn from_fn(nx: usize, ny: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut field = Self::zeros(nx, ny);
        for y in 0..ny {
            for x in 0..nx {
                field.set(x, y, f(x, y));
            }
        }
        field
    }

    pub fn from_data(nx: usize, ny: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), nx * ny);
        Self { nx, ny, data }
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    pub fn get(&self, x: usize, y: usize) -> f64 {
        self.data[y * self.nx + x]
    }

    pub fn set(&mut self, x: usize, y: usize, v: f64) {
        self.data[y * self.nx + x] = v;
    }

    /// Row-major data slice, x fastest.
    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn same_shape(&self, other: &Field) -> Result<(), LbmError> {
        if self.nx != other.nx || self.ny != other.ny {
            return Err(LbmError::ShapeMismatch {
                nx: self.nx,
                ny: self.ny,
                got_nx: other.nx,
                got_ny: other.ny,
            });
        }
        Ok(())
    }

    pub fn validate_finite(&self) -> Result<(), LbmError> {
        for y in 0..self.ny {
            for x in 0..self.nx {
                if !self.get(x, y).is_finite() {
                    return Err(LbmError::NonFinite { x, y });
                }
            }
        }
        Ok(())
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// CSV text, one row per y line (y outer, x inner), 17 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for y in 0..self.ny {
            for x in 0..self.nx {
                if x > 0 {
                    out.push(',');
                }
                let _ = write!(out, "{:.16e}", self.get(x, y));
            }
            out.push('\n');
        }
        out
    }

    pub fn write_csv(&self, path: &Path) -> Result<(), LbmError> {
        std::fs::write(path, self.to_csv())?;
        Ok(())
    }

    pub fn from_csv(text: &str) -> Result<Self, LbmError> {
        let mut rows: Vec<Vec<f64>> = Vec::new();
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let row: Result<Vec<f64>, _> = line
                .split(',')
                .map(|cell| cell.trim().parse::<f64>())
                .collect();
            let row = row.map_err(|e| LbmError::CsvParse {
                line: i + 1,
                reason: e.to_string(),
            })?;
            if let Some(first) = rows.first() {
                if row.len() != first.len() {
                    return Err(LbmError::CsvParse {
                        line: i + 1,
                        reason: format!("expected {} columns, got {}", first.len(), row.len()),
                    });
                }
            }
            rows.push(row);
        }
        if rows.is_empty() {
            return Err(LbmError::CsvParse {
                line: 0,
                reason: "empty file".to_string(),
            });
        }
        let ny = rows.len();
        let nx = rows[0].len();
        Ok(Self {
            nx,
            ny,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn read_csv(path: &Path) -> Result<Self, LbmError> {
        Self::from_csv(&std::fs::read_to_string(path)?)
    }
}
