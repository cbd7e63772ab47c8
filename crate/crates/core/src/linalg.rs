//! Exact row echelon bases over a [`Field`], on sparse vectors.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::field::{Field, Scalar};

/// A sparse vector: strictly increasing indices, no zero entries.
pub type SparseVec = Vec<(usize, Scalar)>;

/// Builds a [`SparseVec`] from a map, dropping zeros.
pub fn sparse_from_map(map: BTreeMap<usize, Scalar>) -> SparseVec {
    map.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// Incrementally grown echelon basis. Each stored row has leading
/// coefficient one at a distinct pivot column.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: Field,
    rows: BTreeMap<usize, SparseVec>,
}

impl EchelonBasis {
    pub fn new(field: Field) -> EchelonBasis {
        EchelonBasis {
            field,
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// The residual of `v` after elimination against the stored rows.
    pub fn reduce(&self, v: &[(usize, Scalar)]) -> SparseVec {
        let mut work: BTreeMap<usize, Scalar> = v.iter().cloned().collect();
        let mut cursor = 0usize;
        loop {
            let next = work
                .range(cursor..)
                .find(|(k, val)| !val.is_zero() && self.rows.contains_key(k))
                .map(|(k, val)| (*k, val.clone()));
            let Some((col, coeff)) = next else { break };
            for (k, r) in &self.rows[&col] {
                let delta = &coeff * r;
                match work.get_mut(k) {
                    Some(e) => *e -= &delta,
                    None => {
                        work.insert(*k, -delta);
                    }
                }
            }
            work.remove(&col);
            cursor = col + 1;
        }
        sparse_from_map(work)
    }

    pub fn contains(&self, v: &[(usize, Scalar)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: &[(usize, Scalar)]) -> bool {
        let r = self.reduce(v);
        let Some((pivot, lead)) = r.first().cloned() else {
            return false;
        };
        let inv = lead.inverse().expect("nonzero leading entry");
        let row: SparseVec = r.into_iter().map(|(k, x)| (k, &x * &inv)).collect();
        self.rows.insert(pivot, row);
        true
    }
}

/// Rank of a family of sparse vectors.
pub fn rank<'a, I>(field: Field, vectors: I) -> usize
where
    I: IntoIterator<Item = &'a SparseVec>,
{
    let mut b = EchelonBasis::new(field);
    for v in vectors {
        b.insert(v);
    }
    b.rank()
}
