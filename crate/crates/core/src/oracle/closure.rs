//! Span closure of `{A_g, E*_g}` computed on orbits of the base-point
//! stabilizer acting on pairs. Every element of `T` is constant on these
//! orbits, so products can be evaluated at one representative per orbit.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use super::VertexSpace;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{EchelonBasis, SparseVec};
use crate::scheme::Color;

/// Vertex permutations fixing the base point and every relation.
/// Per coordinate: transposition and cycle on the other points of the
/// base group, on one other group, and on the other groups as blocks.
pub fn stabilizer_generators(space: &VertexSpace) -> Vec<Vec<usize>> {
    let params = space.params();
    let base = space.coords(space.base()).to_vec();
    let mut out = Vec::new();
    for i in 0..params.n() {
        let (l, m) = (params.ell(i), params.m(i));
        let b = base[i];
        let gb = b / m;
        let mut coord_perms: Vec<Vec<u64>> = Vec::new();
        let own: Vec<u64> = (0..m).map(|q| gb * m + q).filter(|&v| v != b).collect();
        push_swap_and_cycle(&mut coord_perms, l * m, &[own]);
        let others: Vec<u64> = (0..l).filter(|&g| g != gb).collect();
        if let Some(&g0) = others.first() {
            let pts: Vec<u64> = (0..m).map(|q| g0 * m + q).collect();
            push_swap_and_cycle(&mut coord_perms, l * m, &[pts]);
        }
        let blocks: Vec<Vec<u64>> = (0..m)
            .map(|q| others.iter().map(|g| g * m + q).collect())
            .collect();
        push_swap_and_cycle(&mut coord_perms, l * m, &blocks);
        for sigma in coord_perms {
            let perm: Vec<usize> = (0..space.len())
                .map(|v| {
                    let mut c = space.coords(v).to_vec();
                    c[i] = sigma[c[i] as usize];
                    space.index_of(&c)
                })
                .collect();
            out.push(perm);
        }
    }
    out
}

/// Applies the same swap and cycle to each orbit list in parallel.
fn push_swap_and_cycle(out: &mut Vec<Vec<u64>>, radix: u64, lists: &[Vec<u64>]) {
    let len = lists.first().map_or(0, Vec::len);
    if len < 2 {
        return;
    }
    let mut swap: Vec<u64> = (0..radix).collect();
    for list in lists {
        swap[list[0] as usize] = list[1];
        swap[list[1] as usize] = list[0];
    }
    out.push(swap);
    if len >= 3 {
        let mut cycle: Vec<u64> = (0..radix).collect();
        for list in lists {
            for k in 0..len {
                cycle[list[k] as usize] = list[(k + 1) % len];
            }
        }
        out.push(cycle);
    }
}

fn find(parent: &mut [u32], mut x: u32) -> u32 {
    while parent[x as usize] != x {
        let up = parent[parent[x as usize] as usize];
        parent[x as usize] = up;
        x = up;
    }
    x
}

/// Pair orbits under [`stabilizer_generators`] plus the incidence data
/// needed to multiply orbit-constant matrices.
pub struct OrbitModel {
    size: usize,
    orbit_of: Vec<u32>,
    reps: Vec<(usize, usize)>,
    // neighbors[y][c]: vertices w with relation_of(y, w) = colors[c].
    neighbors: Vec<Vec<Vec<usize>>>,
    colors: Vec<Color>,
    sphere_index: Vec<usize>,
    generator_count: usize,
}

impl OrbitModel {
    pub fn new(space: &VertexSpace) -> Result<OrbitModel> {
        let n = space.len();
        let gens = stabilizer_generators(space);
        for perm in &gens {
            if perm[space.base()] != space.base() {
                return Err(Error::BadBasePoint);
            }
            for y in 0..n {
                for z in 0..n {
                    assert_eq!(
                        space.relation_index(y, z),
                        space.relation_index(perm[y], perm[z]),
                        "generator does not preserve relations"
                    );
                }
            }
        }
        let mut parent: Vec<u32> = (0..(n * n) as u32).collect();
        for perm in &gens {
            for y in 0..n {
                for z in 0..n {
                    let a = find(&mut parent, (y * n + z) as u32);
                    let b = find(&mut parent, (perm[y] * n + perm[z]) as u32);
                    if a != b {
                        parent[a.max(b) as usize] = a.min(b);
                    }
                }
            }
        }
        let mut orbit_of = alloc::vec![u32::MAX; n * n];
        let mut reps = Vec::new();
        let mut root_label = alloc::vec![u32::MAX; n * n];
        for p in 0..n * n {
            let r = find(&mut parent, p as u32) as usize;
            if root_label[r] == u32::MAX {
                root_label[r] = reps.len() as u32;
                reps.push((p / n, p % n));
            }
            orbit_of[p] = root_label[r];
        }
        let colors = space.colors().to_vec();
        let neighbors = (0..n)
            .map(|y| {
                let mut by = alloc::vec![Vec::new(); colors.len()];
                for w in 0..n {
                    by[space.relation_index(y, w)].push(w);
                }
                by
            })
            .collect();
        let sphere_index = (0..n).map(|y| space.relation_index(space.base(), y)).collect();
        Ok(OrbitModel {
            size: n,
            orbit_of,
            reps,
            neighbors,
            colors,
            sphere_index,
            generator_count: gens.len(),
        })
    }

    pub fn orbit_count(&self) -> usize {
        self.reps.len()
    }

    pub fn generator_count(&self) -> usize {
        self.generator_count
    }

    fn orbit(&self, y: usize, z: usize) -> usize {
        self.orbit_of[y * self.size + z] as usize
    }

    fn identity(&self, f: Field) -> SparseVec {
        self.collect(|y, z| if y == z { Some(f.one()) } else { None })
    }

    fn collect<F: Fn(usize, usize) -> Option<Scalar>>(&self, entry: F) -> SparseVec {
        self.reps
            .iter()
            .enumerate()
            .filter_map(|(o, &(y, z))| entry(y, z).filter(|v| !v.is_zero()).map(|v| (o, v)))
            .collect()
    }

    fn dense(&self, f: Field, v: &SparseVec) -> Vec<Scalar> {
        let mut out = alloc::vec![f.zero(); self.orbit_count()];
        for (o, x) in v {
            out[*o] = x.clone();
        }
        out
    }

    fn mask(&self, v: &SparseVec, c: usize, left: bool) -> SparseVec {
        v.iter()
            .filter(|(o, _)| {
                let (y, z) = self.reps[*o];
                self.sphere_index[if left { y } else { z }] == c
            })
            .cloned()
            .collect()
    }

    fn adjacency_product(&self, f: Field, v: &SparseVec, c: usize, left: bool) -> SparseVec {
        let dense = self.dense(f, v);
        self.collect(|y, z| {
            let mut acc = f.zero();
            if left {
                // (A_c M)[y,z] = sum over w in y R_c of M[w,z]
                for &w in &self.neighbors[y][c] {
                    acc += &dense[self.orbit(w, z)];
                }
            } else {
                // relations are symmetric, so z R_c lists w with rel(w,z) = c
                for &w in &self.neighbors[z][c] {
                    acc += &dense[self.orbit(y, w)];
                }
            }
            Some(acc)
        })
    }

    /// Dimension over `f` of the algebra generated by the `A_g` and `E*_g`.
    pub fn generated_dimension(&self, f: Field) -> usize {
        let ambient = self.orbit_count();
        let mut span = Frontier {
            basis: EchelonBasis::new(f),
            found: Vec::new(),
            cheap: VecDeque::new(),
            costly: VecDeque::new(),
        };
        span.admit(self.identity(f));
        // Masking by E* is cheap; multiplying by A is not, so exhaust masks first.
        while span.basis.rank() < ambient {
            let (k, costly) = match span.cheap.pop_front() {
                Some(k) => (k, false),
                None => match span.costly.pop_front() {
                    Some(k) => (k, true),
                    None => break,
                },
            };
            for c in 0..self.colors.len() {
                for left in [true, false] {
                    let v = if costly {
                        self.adjacency_product(f, &span.found[k], c, left)
                    } else {
                        self.mask(&span.found[k], c, left)
                    };
                    span.admit(v);
                }
            }
        }
        span.basis.rank()
    }
}

struct Frontier {
    basis: EchelonBasis,
    found: Vec<SparseVec>,
    cheap: VecDeque<usize>,
    costly: VecDeque<usize>,
}

impl Frontier {
    fn admit(&mut self, v: SparseVec) {
        if !v.is_empty() && self.basis.insert(&v) {
            self.found.push(v);
            self.cheap.push_back(self.found.len() - 1);
            self.costly.push_back(self.found.len() - 1);
        }
    }
}
