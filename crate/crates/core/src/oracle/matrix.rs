use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::field::{Field, Scalar};
use crate::linalg::SparseVec;

/// Square matrix over a field, stored by rows without zero entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    field: Field,
    rows: Vec<BTreeMap<usize, Scalar>>,
}

impl ExactMatrix {
    pub fn zero(field: Field, size: usize) -> ExactMatrix {
        ExactMatrix {
            field,
            rows: alloc::vec![BTreeMap::new(); size],
        }
    }

    pub fn identity(field: Field, size: usize) -> ExactMatrix {
        let mut m = ExactMatrix::zero(field, size);
        for i in 0..size {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.rows[i].get(&j).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        if v.is_zero() {
            self.rows[i].remove(&j);
        } else {
            self.rows[i].insert(j, v);
        }
    }

    fn add_entry(row: &mut BTreeMap<usize, Scalar>, j: usize, v: Scalar) {
        if v.is_zero() {
            return;
        }
        match row.get_mut(&j) {
            Some(e) => {
                *e += &v;
                if e.is_zero() {
                    row.remove(&j);
                }
            }
            None => {
                row.insert(j, v);
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &ExactMatrix, c: &Scalar) {
        for (i, row) in other.rows.iter().enumerate() {
            for (j, v) in row {
                ExactMatrix::add_entry(&mut self.rows[i], *j, v * c);
            }
        }
    }

    pub fn add(&self, other: &ExactMatrix) -> ExactMatrix {
        let mut out = self.clone();
        out.add_scaled(other, &self.field.one());
        out
    }

    pub fn sub(&self, other: &ExactMatrix) -> ExactMatrix {
        let mut out = self.clone();
        out.add_scaled(other, &self.field.from_i64(-1));
        out
    }

    pub fn scale(&self, c: &Scalar) -> ExactMatrix {
        let mut out = ExactMatrix::zero(self.field, self.size());
        out.add_scaled(self, c);
        out
    }

    pub fn mul(&self, other: &ExactMatrix) -> ExactMatrix {
        let mut out = ExactMatrix::zero(self.field, self.size());
        for (i, row) in self.rows.iter().enumerate() {
            let acc = &mut out.rows[i];
            for (k, a) in row {
                for (j, b) in &other.rows[*k] {
                    ExactMatrix::add_entry(acc, *j, a * b);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut out = ExactMatrix::zero(self.field, self.size());
        for (i, row) in self.rows.iter().enumerate() {
            for (j, v) in row {
                out.rows[*j].insert(i, v.clone());
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BTreeMap::is_empty)
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(BTreeMap::len).sum()
    }

    /// Row-major flattening, entry `(i, j)` at index `i * size + j`.
    pub fn to_sparse(&self) -> SparseVec {
        let n = self.size();
        let mut out = Vec::with_capacity(self.nnz());
        for (i, row) in self.rows.iter().enumerate() {
            for (j, v) in row {
                out.push((i * n + j, v.clone()));
            }
        }
        out
    }

    pub fn rows(&self) -> &[BTreeMap<usize, Scalar>] {
        &self.rows
    }
}
