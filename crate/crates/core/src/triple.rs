//! Triple-set calculus: the label sets `U_{g,h}`, the order `⪯`, k-weights,
//! composition, ceilings and layers, and the divisibility index sets.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::scheme::{Color, GdParams};
use crate::subset::Subset;

/// `(s1, s2, s3)`. Validity is relative to an anchor pair `(g, h)`; see
/// [`is_anchored`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct TripleSet {
    pub s1: Subset,
    pub s2: Subset,
    pub s3: Subset,
}

impl TripleSet {
    /// `𝔬 = (∅, ∅, ∅)`.
    pub const EMPTY: TripleSet = TripleSet {
        s1: Subset::EMPTY,
        s2: Subset::EMPTY,
        s3: Subset::EMPTY,
    };

    pub fn new(s1: Subset, s2: Subset, s3: Subset) -> TripleSet {
        TripleSet { s1, s2, s3 }
    }

    /// `|s1| + |s2| + |s3|`.
    pub fn size(&self) -> usize {
        self.s1.len() + self.s2.len() + self.s3.len()
    }

    /// `self ⪯ other`, componentwise inclusion.
    pub fn precedes(&self, other: &TripleSet) -> bool {
        self.s1.is_subset(other.s1) && self.s2.is_subset(other.s2) && self.s3.is_subset(other.s3)
    }

    pub fn intersect(&self, other: &TripleSet) -> TripleSet {
        TripleSet::new(self.s1 & other.s1, self.s2 & other.s2, self.s3 & other.s3)
    }

    pub fn union(&self, other: &TripleSet) -> TripleSet {
        TripleSet::new(self.s1 | other.s1, self.s2 | other.s2, self.s3 | other.s3)
    }

    /// `𝔧∖i = (s1∖i_1, s2∖i_2, s3∖i_2)`.
    pub fn minus_color(&self, i: &Color) -> TripleSet {
        TripleSet::new(self.s1 - i.ones(), self.s2 - i.twos(), self.s3 - i.twos())
    }

    /// `i∩𝔧 = (i_1∩s1, i_2∩s2, i_2∩s3)`.
    pub fn cap_color(&self, i: &Color) -> TripleSet {
        TripleSet::new(self.s1 & i.ones(), self.s2 & i.twos(), self.s3 & i.twos())
    }

    /// Graded enumeration key: size first, then the masks.
    pub fn graded_key(&self) -> (usize, u64, u64, u64) {
        (self.size(), self.s1.0, self.s2.0, self.s3.0)
    }
}

impl fmt::Debug for TripleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?}, {:?})", self.s1, self.s2, self.s3)
    }
}

/// The three anchor sets `((g_1∩h_1)∘, (g_2∩h_2)•, g_2∩h_2)`.
pub fn anchor_sets(params: &GdParams, g: &Color, h: &Color) -> (Subset, Subset, Subset) {
    let c = g.twos() & h.twos();
    (params.circ(g.ones() & h.ones()), params.bullet(c), c)
}

/// Whether `t ∈ U_{g,h}`.
pub fn is_anchored(params: &GdParams, g: &Color, h: &Color, t: &TripleSet) -> bool {
    let (a1, a2, a3) = anchor_sets(params, g, h);
    t.s1.is_subset(a1) && t.s2.is_subset(a2) && t.s2.is_subset(t.s3) && t.s3.is_subset(a3)
}

fn require_anchored(params: &GdParams, g: &Color, h: &Color, t: &TripleSet) -> Result<()> {
    if is_anchored(params, g, h, t) {
        Ok(())
    } else {
        Err(Error::NotAnchored)
    }
}

/// `U_{g,h}` in graded order.
pub fn enumerate_u(params: &GdParams, g: &Color, h: &Color) -> Vec<TripleSet> {
    let (a1, a2, a3) = anchor_sets(params, g, h);
    let mut out = Vec::new();
    for s1 in a1.subsets() {
        for s3 in a3.subsets() {
            for s2 in (s3 & a2).subsets() {
                out.push(TripleSet::new(s1, s2, s3));
            }
        }
    }
    out.sort_by_key(TripleSet::graded_key);
    out
}

/// `|U_{g,h}| = 2^{i-j+k} 3^j`.
pub fn count_u(params: &GdParams, g: &Color, h: &Color) -> BigUint {
    let (a1, a2, a3) = anchor_sets(params, g, h);
    let (i, j, k) = (a1.len(), a2.len(), a3.len());
    BigUint::from(2u32).pow((i + k - j) as u32) * BigUint::from(3u32).pow(j as u32)
}

/// Whether `a ∈ U_{g,h,t}` given `a ∈ P_{g,h}`.
pub fn is_member(params: &GdParams, g: &Color, h: &Color, t: &TripleSet, a: &Color) -> bool {
    let (a1, a2, a3) = anchor_sets(params, g, h);
    (a.ones() & a1).is_subset(t.s1) && (a.twos() & a2).is_subset(t.s2) && (a.ones() & a3).is_subset(t.s3)
}

/// `U_{g,h,t}`: the colors aggregated into `B_{g,h,t}`.
pub fn members_u(params: &GdParams, g: &Color, h: &Color, t: &TripleSet) -> Result<Vec<Color>> {
    require_anchored(params, g, h, t)?;
    Ok(params
        .enumerate_p(g, h)
        .into_iter()
        .filter(|a| is_member(params, g, h, t, a))
        .collect())
}

/// The member of `U_{g,h,t}` with the fewest ones and twos.
pub fn minimal_member(params: &GdParams, g: &Color, h: &Color, t: &TripleSet) -> Color {
    let ones = (g.zeros() & h.ones()) | (g.ones() & h.zeros()) | t.s1 | (t.s3 - t.s2);
    let twos = (g.twos() ^ h.twos()) | t.s2;
    Color::from_sets_unchecked(params.n(), ones, twos)
}

/// The anchored triple whose minimal member is `a`, for `a ∈ P_{g,h}`.
pub fn label_of_member(params: &GdParams, g: &Color, h: &Color, a: &Color) -> TripleSet {
    let (a1, a2, a3) = anchor_sets(params, g, h);
    let s2 = a.twos() & a2;
    TripleSet::new(a.ones() & a1, s2, (a.ones() & a3) | s2)
}

/// `k_{(U,V,W)} = prod_U (m-1) prod_V (l-1)m prod_{W∖V} m`.
pub fn k_weight(params: &GdParams, u: Subset, v: Subset, w: Subset) -> BigUint {
    let mut acc = BigUint::one();
    for a in u.iter() {
        acc *= BigUint::from(params.m(a) - 1);
    }
    for a in v.iter() {
        acc *= BigUint::from(params.ell(a) - 1) * BigUint::from(params.m(a));
    }
    for a in (w - v).iter() {
        acc *= BigUint::from(params.m(a));
    }
    acc
}

/// `k_t`.
pub fn k_triple(params: &GdParams, t: &TripleSet) -> BigUint {
    k_weight(params, t.s1, t.s2, t.s3)
}

/// `k_{(g,h,i)}`.
pub fn k_round(params: &GdParams, g: &Color, h: &Color, i: &Color) -> BigUint {
    let u = (g.ones() & i.ones()) - h.ones();
    let v = (g.twos() & i.twos()) - h.twos();
    k_weight(params, u, v, v)
}

/// `k_{[g,h,i]}`.
pub fn k_square(params: &GdParams, g: &Color, h: &Color, i: &Color) -> BigUint {
    let u = h.ones() - (g.ones() | i.ones());
    let v = h.twos() - (g.twos() | i.twos());
    k_weight(params, u, v, v)
}

/// The field image of a k-weight.
pub fn k_bar(params: &GdParams, k: &BigUint) -> Scalar {
    params.field().from_biguint(k)
}

/// `(g,h,i,𝔧,𝔨)`: the label of the product `B_{g,h,𝔧} B_{h,i,𝔨}`.
pub fn compose(
    params: &GdParams,
    g: &Color,
    h: &Color,
    i: &Color,
    j: &TripleSet,
    k: &TripleSet,
) -> Result<TripleSet> {
    require_anchored(params, g, h, j)?;
    require_anchored(params, h, i, k)?;
    Ok(compose_unchecked(params, g, h, i, j, k))
}

pub(crate) fn compose_unchecked(
    params: &GdParams,
    g: &Color,
    h: &Color,
    i: &Color,
    j: &TripleSet,
    k: &TripleSet,
) -> TripleSet {
    let gi1 = g.ones() & i.ones();
    let gi2 = g.twos() & i.twos();
    let l1 = (params.circ(gi1) - h.ones()) | (gi1 & (j.s1 | k.s1));
    let l2 = (params.bullet(gi2) - h.twos()) | (gi2 & (j.s2 | k.s2));
    let l3 = (gi2 - h.twos()) | (gi2 & (j.s3 | k.s3));
    TripleSet::new(l1, l2, l3)
}

/// `(g,h;t) = ((g_1∩h_1)∘, t_3•, g_2∩h_2)`.
pub fn ceiling(params: &GdParams, g: &Color, h: &Color, t: &TripleSet) -> TripleSet {
    let (a1, _, a3) = anchor_sets(params, g, h);
    TripleSet::new(a1, params.bullet(t.s3), a3)
}

/// `n_{g,h,t} = |(g,h;t)| - |t|`.
pub fn layer_depth(params: &GdParams, g: &Color, h: &Color, t: &TripleSet) -> usize {
    ceiling(params, g, h, t).size() - t.size()
}

/// Every triple between `t` and its ceiling, each tagged with its layer
/// `|a| - |t|`, keeping those with `p ∤ k_a`. Graded order.
pub fn layers(params: &GdParams, g: &Color, h: &Color, t: &TripleSet) -> Result<Vec<(usize, TripleSet)>> {
    require_anchored(params, g, h, t)?;
    let top = ceiling(params, g, h, t);
    let mut out = Vec::new();
    for e1 in (top.s1 - t.s1).subsets() {
        for e2 in (top.s2 - t.s2).subsets() {
            for e3 in (top.s3 - t.s3).subsets() {
                let a = TripleSet::new(t.s1 | e1, t.s2 | e2, t.s3 | e3);
                debug_assert!(is_anchored(params, g, h, &a));
                if !params.field().divides(&k_triple(params, &a)) {
                    out.push((a.size() - t.size(), a));
                }
            }
        }
    }
    out.sort_by_key(|(_, a)| a.graded_key());
    Ok(out)
}

/// `U_{g,h,t,j}`.
pub fn layer(params: &GdParams, g: &Color, h: &Color, t: &TripleSet, j: usize) -> Result<Vec<TripleSet>> {
    require_anchored(params, g, h, t)?;
    let max = layer_depth(params, g, h, t);
    if j > max {
        return Err(Error::LayerOutOfRange { j, max });
    }
    Ok(layers(params, g, h, t)?
        .into_iter()
        .filter(|(d, _)| *d == j)
        .map(|(_, a)| a)
        .collect())
}

fn divisible_by_char(params: &GdParams, v: u128) -> bool {
    params.field().divides_u128(v)
}

/// `U_t`: the indices whose factor of `k_t` is divisible by the characteristic.
pub fn bad_indices(params: &GdParams, t: &TripleSet) -> Subset {
    let mut out = Subset::EMPTY;
    for a in t.s1.iter() {
        if divisible_by_char(params, params.m(a) as u128 - 1) {
            out |= Subset::singleton(a);
        }
    }
    for a in t.s2.iter() {
        if divisible_by_char(params, (params.ell(a) as u128 - 1) * params.m(a) as u128) {
            out |= Subset::singleton(a);
        }
    }
    for a in (t.s3 - t.s2).iter() {
        if divisible_by_char(params, params.m(a) as u128) {
            out |= Subset::singleton(a);
        }
    }
    out
}

/// `V_{g,h,t}`; nonempty exactly for the radical labels.
pub fn v_set(params: &GdParams, g: &Color, h: &Color, t: &TripleSet) -> Subset {
    let mut out = bad_indices(params, t);
    for a in (g.ones() ^ h.ones()).iter() {
        if divisible_by_char(params, params.m(a) as u128 - 1) {
            out |= Subset::singleton(a);
        }
    }
    for a in (g.twos() ^ h.twos()).iter() {
        if divisible_by_char(params, (params.ell(a) as u128 - 1) * params.m(a) as u128) {
            out |= Subset::singleton(a);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(e: &[u8]) -> Color {
        Color::new(e).unwrap()
    }

    fn s(ix: &[usize]) -> Subset {
        Subset::from_indices(ix.iter().copied())
    }

    #[test]
    fn notation_instance() {
        // [(2,3),(3,3)], g=(0,2), h=(1,2); coordinates are 0-based.
        let p = GdParams::new(&[(2, 3), (3, 3)], 0).unwrap();
        let (g, h) = (c(&[0, 2]), c(&[1, 2]));
        let u = enumerate_u(&p, &g, &h);
        assert_eq!(
            u,
            [
                TripleSet::EMPTY,
                TripleSet::new(s(&[]), s(&[]), s(&[1])),
                TripleSet::new(s(&[]), s(&[1]), s(&[1])),
            ]
        );
        assert_eq!(members_u(&p, &g, &h, &TripleSet::EMPTY).unwrap(), [c(&[1, 0])]);
        assert_eq!(k_round(&p, &g, &h, &g), BigUint::one());
        assert_eq!(k_square(&p, &g, &h, &g), BigUint::from(2u32));
    }
}
