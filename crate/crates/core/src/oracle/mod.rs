//! Brute-force ground truth: the vertex set, its relations, explicit
//! matrices, and linear-algebra checks of the closed forms.

mod closure;
mod matrix;
pub mod verify;

pub use closure::{stabilizer_generators, OrbitModel};
pub use matrix::ExactMatrix;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::ToPrimitive;

use crate::algebra::{AlgebraElement, B1Label, B2Label};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::scheme::{Color, GdParams};
use crate::triple;

/// Default bound on `|X|`.
pub const DEFAULT_VERTEX_CAP: usize = 256;

/// The vertex set `X = prod [0, l_i m_i)` with a base point.
/// Coordinate value `v` lies in group `v / m` at position `v % m`.
#[derive(Clone, Debug)]
pub struct VertexSpace {
    params: GdParams,
    radix: Vec<u64>,
    coords: Vec<Vec<u64>>,
    base: usize,
    colors: Vec<Color>,
    // relation table, row-major, as indices into `colors`
    rel: Vec<u16>,
    sphere: Vec<Color>,
    by_sphere: BTreeMap<Color, Vec<usize>>,
}

impl VertexSpace {
    /// Base point at the all-zeros vertex.
    pub fn new(params: &GdParams, cap: usize) -> Result<VertexSpace> {
        let zeros = alloc::vec![0u64; params.n()];
        VertexSpace::with_base_point(params, &zeros, cap)
    }

    pub fn with_base_point(params: &GdParams, base: &[u64], cap: usize) -> Result<VertexSpace> {
        let count = params.vertex_count();
        let size = match count.to_usize() {
            Some(s) if s <= cap => s,
            _ => {
                return Err(Error::ResourceCap {
                    count: count.to_u128().unwrap_or(u128::MAX),
                    cap,
                })
            }
        };
        let radix: Vec<u64> = params.factors().iter().map(|&(l, m)| l * m).collect();
        if base.len() != params.n() || base.iter().zip(&radix).any(|(b, r)| b >= r) {
            return Err(Error::BadBasePoint);
        }
        let mut coords = Vec::with_capacity(size);
        for v in 0..size {
            let mut rest = v as u64;
            let mut c = alloc::vec![0u64; params.n()];
            for i in (0..params.n()).rev() {
                c[i] = rest % radix[i];
                rest /= radix[i];
            }
            coords.push(c);
        }
        let mut space = VertexSpace {
            params: params.clone(),
            radix,
            coords,
            base: 0,
            colors: params.colors(),
            rel: Vec::with_capacity(size * size),
            sphere: Vec::new(),
            by_sphere: BTreeMap::new(),
        };
        space.base = space.index_of(base);
        for y in 0..size {
            for z in 0..size {
                let c = space.compute_relation(y, z);
                let idx = space.colors.binary_search(&c).expect("color listed");
                space.rel.push(idx as u16);
            }
        }
        let sphere: Vec<Color> = (0..size).map(|y| space.relation_of(space.base, y)).collect();
        for (y, s) in sphere.iter().enumerate() {
            space.by_sphere.entry(*s).or_insert_with(Vec::new).push(y);
        }
        space.sphere = sphere;
        Ok(space)
    }

    pub fn params(&self) -> &GdParams {
        &self.params
    }

    pub fn field(&self) -> Field {
        self.params.field()
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn coords(&self, v: usize) -> &[u64] {
        &self.coords[v]
    }

    pub fn radix(&self) -> &[u64] {
        &self.radix
    }

    pub fn index_of(&self, c: &[u64]) -> usize {
        c.iter().zip(&self.radix).fold(0u64, |acc, (x, r)| acc * r + x) as usize
    }

    /// Per coordinate: 0 if equal, 1 if distinct in one group, 2 otherwise.
    pub fn relation_of(&self, y: usize, z: usize) -> Color {
        self.colors[self.relation_index(y, z)]
    }

    /// Position of `relation_of(y, z)` in [`VertexSpace::colors`].
    pub fn relation_index(&self, y: usize, z: usize) -> usize {
        self.rel[y * self.len() + z] as usize
    }

    /// All colors in lexicographic order.
    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color_index(&self, c: &Color) -> usize {
        self.colors.binary_search(c).expect("color of this scheme")
    }

    fn compute_relation(&self, y: usize, z: usize) -> Color {
        let (cy, cz) = (&self.coords[y], &self.coords[z]);
        let mut entries = alloc::vec![0u8; self.params.n()];
        for i in 0..self.params.n() {
            let m = self.params.m(i);
            entries[i] = if cy[i] == cz[i] {
                0
            } else if cy[i] / m == cz[i] / m {
                1
            } else {
                2
            };
        }
        Color::new(&entries).expect("entries in range")
    }

    /// The relation between the base point and `y`.
    pub fn sphere(&self, y: usize) -> Color {
        self.sphere[y]
    }

    /// `x R_g`, in increasing order.
    pub fn sphere_members(&self, g: &Color) -> &[usize] {
        self.by_sphere.get(g).map(Vec::as_slice).unwrap_or(&[])
    }

    /// The same vertex set over a different field.
    pub fn with_field(&self, characteristic: u64) -> Result<VertexSpace> {
        let mut out = self.clone();
        out.params = self.params.with_characteristic(characteristic)?;
        Ok(out)
    }
}

/// `A_g`.
pub fn adjacency_matrix(space: &VertexSpace, g: &Color) -> ExactMatrix {
    let mut m = ExactMatrix::zero(space.field(), space.len());
    let one = space.field().one();
    for y in 0..space.len() {
        for z in 0..space.len() {
            if space.relation_of(y, z) == *g {
                m.set(y, z, one.clone());
            }
        }
    }
    m
}

/// `E*_g`.
pub fn dual_idempotent(space: &VertexSpace, g: &Color) -> ExactMatrix {
    let mut m = ExactMatrix::zero(space.field(), space.len());
    for &y in space.sphere_members(g) {
        m.set(y, y, space.field().one());
    }
    m
}

/// `E*_g A_i E*_h`.
pub fn realize_b1(space: &VertexSpace, b: &B1Label) -> ExactMatrix {
    let mut m = ExactMatrix::zero(space.field(), space.len());
    for &y in space.sphere_members(&b.g) {
        for &z in space.sphere_members(&b.h) {
            if space.relation_of(y, z) == b.i {
                m.set(y, z, space.field().one());
            }
        }
    }
    m
}

/// `B_{g,h,t}` as a 0/1 matrix, built from its member relations.
pub fn realize_b2(space: &VertexSpace, l: &B2Label) -> ExactMatrix {
    let params = space.params();
    let mut m = ExactMatrix::zero(space.field(), space.len());
    for &y in space.sphere_members(&l.g) {
        for &z in space.sphere_members(&l.h) {
            let r = space.relation_of(y, z);
            if params.support_nonzero(&l.g, &l.h, &r) && triple::is_member(params, &l.g, &l.h, &l.t, &r) {
                m.set(y, z, space.field().one());
            }
        }
    }
    m
}

/// Realization of a symbolic element.
pub fn realize(space: &VertexSpace, x: &AlgebraElement) -> ExactMatrix {
    let mut out = ExactMatrix::zero(space.field(), space.len());
    for (l, c) in x.terms() {
        out.add_scaled(&realize_b2(space, l), c);
    }
    out
}

/// Caches realized basis elements for repeated use.
pub struct Realizer<'a> {
    space: &'a VertexSpace,
    cache: BTreeMap<B2Label, ExactMatrix>,
}

impl<'a> Realizer<'a> {
    pub fn new(space: &'a VertexSpace) -> Realizer<'a> {
        Realizer {
            space,
            cache: BTreeMap::new(),
        }
    }

    pub fn space(&self) -> &VertexSpace {
        self.space
    }

    pub fn basis(&mut self, l: &B2Label) -> &ExactMatrix {
        let space = self.space;
        self.cache.entry(*l).or_insert_with(|| realize_b2(space, l))
    }

    pub fn element(&mut self, x: &AlgebraElement) -> ExactMatrix {
        let mut out = ExactMatrix::zero(self.space.field(), self.space.len());
        for (l, c) in x.terms() {
            let b = self.basis(l).clone();
            out.add_scaled(&b, c);
        }
        out
    }
}

/// `|y R_h ∩ x R_i ∩ z R_j|` with `x` the base point.
pub fn triple_intersection(space: &VertexSpace, y: usize, z: usize, h: &Color, i: &Color, j: &Color) -> usize {
    space
        .sphere_members(i)
        .iter()
        .filter(|&&w| space.relation_of(y, w) == *h && space.relation_of(z, w) == *j)
        .count()
}

/// Dimension of the algebra generated by all `A_g` and `E*_g`.
pub fn generated_algebra_dimension(space: &VertexSpace) -> Result<usize> {
    Ok(OrbitModel::new(space)?.generated_dimension(space.field()))
}
