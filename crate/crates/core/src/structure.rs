//! Corner algebras, the radical, the semisimple quotient and its
//! decomposition into full matrix algebras.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use crate::algebra::{self, AlgebraElement, B2Label};
use crate::error::{Error, Result};
use crate::scheme::{Color, GdParams};
use crate::subset::Subset;
use crate::triple::{self, TripleSet};

/// `D_{g,h,t}`; the quotient basis consists of these labels.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DLabel {
    pub g: Color,
    pub h: Color,
    pub t: TripleSet,
}

impl DLabel {
    pub fn new(g: Color, h: Color, t: TripleSet) -> DLabel {
        DLabel { g, h, t }
    }

    pub fn as_b2(&self) -> B2Label {
        B2Label::new(self.g, self.h, self.t)
    }
}

impl From<B2Label> for DLabel {
    fn from(b: B2Label) -> DLabel {
        DLabel::new(b.g, b.h, b.t)
    }
}

impl fmt::Debug for DLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D[{:?},{:?},{:?}]", self.g, self.h, self.t)
    }
}

fn divides(params: &GdParams, k: &BigUint) -> bool {
    params.field().divides(k)
}

/// `I_g`: the `B_{g,g,a}` with `p | k_a`.
pub fn corner_radical_basis(params: &GdParams, g: &Color) -> Vec<B2Label> {
    triple::enumerate_u(params, g, g)
        .into_iter()
        .filter(|a| divides(params, &triple::k_triple(params, a)))
        .map(|a| B2Label::new(*g, *g, a))
        .collect()
}

/// The exponents `(n_{g,1}, n_{g,2}, n_{g,3})`.
pub fn corner_counts(params: &GdParams, g: &Color) -> (usize, usize, usize) {
    let f = params.field();
    let n1 = params
        .circ(g.ones())
        .iter()
        .filter(|&a| !f.divides_u128(params.m(a) as u128 - 1))
        .count();
    let n2 = params
        .bullet(g.twos())
        .iter()
        .filter(|&a| !f.divides_u128((params.ell(a) as u128 - 1) * params.m(a) as u128))
        .count();
    let n3 = (g.twos() - params.bullet(g.twos()))
        .iter()
        .filter(|&a| !f.divides_u128(params.m(a) as u128))
        .count();
    (n1, n2, n3)
}

/// `dim E*_g T E*_g / I_g`, the number of `a` in `U_{g,g}` with `p ∤ k_a`.
/// Per coordinate: `a` in `g_1∘` contributes 2 if `p ∤ m_a - 1`, `a` in
/// `g_2∖g_2•` contributes 2 if `p ∤ m_a`, and `a` in `g_2•` contributes
/// `1 + [p ∤ m_a] + [p ∤ (l_a-1)m_a]`.
pub fn corner_quotient_dim(params: &GdParams, g: &Color) -> BigUint {
    let f = params.field();
    let (n1, _, n3) = corner_counts(params, g);
    let mut acc = BigUint::from(2u32).pow((n1 + n3) as u32);
    for a in params.bullet(g.twos()).iter() {
        let (l, m) = (params.ell(a) as u128, params.m(a) as u128);
        let units = 1 + u32::from(!f.divides_u128(m)) + u32::from(!f.divides_u128((l - 1) * m));
        acc *= units;
    }
    acc
}

/// `2^{n_{g,1}+n_{g,3}} 3^{n_{g,2}}`. Agrees with [`corner_quotient_dim`]
/// unless `p | l_a - 1` and `p ∤ m_a` for some `a` in `g_2•`, where it
/// undercounts.
pub fn corner_quotient_dim_by_exponents(params: &GdParams, g: &Color) -> BigUint {
    let (n1, n2, n3) = corner_counts(params, g);
    BigUint::from(2u32).pow((n1 + n3) as u32) * BigUint::from(3u32).pow(n2 as u32)
}

/// Nilpotency index of `I_g`.
pub fn corner_nilpotency_index(params: &GdParams, g: &Color) -> usize {
    let f = params.field();
    let a = g
        .ones()
        .iter()
        .filter(|&a| f.divides_u128(params.m(a) as u128 - 1))
        .count();
    let b = g
        .twos()
        .iter()
        .filter(|&a| f.divides_u128((params.ell(a) as u128 - 1) * params.m(a) as u128))
        .count();
    a + b + 1
}

/// Whether `E*_g T E*_g` is semisimple, i.e. `p ∤ k_g`.
pub fn corner_is_semisimple(params: &GdParams, g: &Color) -> bool {
    !divides(params, &params.valency(g))
}

/// The alternating layered sum defining `D_{g,h,t}`.
pub fn d_element(params: &GdParams, g: &Color, h: &Color, t: &TripleSet) -> Result<AlgebraElement> {
    let f = params.field();
    let kghg = f.from_biguint(&triple::k_square(params, g, h, g));
    let kinv = kghg.inverse().ok_or(Error::NotInvertible)?;
    let mut out = AlgebraElement::zero();
    for (j, a) in triple::layers(params, g, h, t)? {
        let ka = f.from_biguint(&triple::k_triple(params, &a)).inverse().expect("layer weights are units");
        let sign = if j % 2 == 0 { f.one() } else { f.from_i64(-1) };
        out.add_term(B2Label::new(*g, *h, a), &(&sign * &kinv) * &ka);
    }
    Ok(out)
}

/// Whether `B_{g,h,t}` lies in the radical: `V_{g,h,t} != ∅`.
pub fn is_radical_label(params: &GdParams, l: &B2Label) -> bool {
    !triple::v_set(params, &l.g, &l.h, &l.t).is_empty()
}

pub fn radical_basis(params: &GdParams) -> Vec<B2Label> {
    algebra::b2_labels(params)
        .into_iter()
        .filter(|l| is_radical_label(params, l))
        .collect()
}

/// `2 |{a : p | (l_a-1)(m_a-1)m_a}| + 1`.
pub fn radical_nilpotency_index(params: &GdParams) -> usize {
    let f = params.field();
    let bad = params
        .factors()
        .iter()
        .filter(|&&(l, m)| f.divides_u128((l as u128 - 1) * (m as u128 - 1) * m as u128))
        .count();
    2 * bad + 1
}

pub fn is_semisimple(params: &GdParams) -> bool {
    params.is_p_prime_valenced()
}

/// Whether every coefficient of `x` sits on a radical label.
pub fn in_radical_span(params: &GdParams, x: &AlgebraElement) -> bool {
    x.terms().all(|(l, _)| is_radical_label(params, l))
}

/// `𝔻`: the labels with `p ∤ k_{[g,h,g]} k_{[h,g,h]} k_t`.
pub fn quotient_basis(params: &GdParams) -> Vec<DLabel> {
    algebra::b2_labels(params)
        .into_iter()
        .filter(|l| {
            let k = triple::k_square(params, &l.g, &l.h, &l.g)
                * triple::k_square(params, &l.h, &l.g, &l.h)
                * triple::k_triple(params, &l.t);
            !divides(params, &k)
        })
        .map(DLabel::from)
        .collect()
}

/// The class invariant `((g_1∩h_1)∘∖t_1, (g_2∩h_2)•∖t_2, (g_2∩h_2)∖t_3)`.
pub fn class_signature(params: &GdParams, d: &DLabel) -> (Subset, Subset, Subset) {
    let (a1, a2, a3) = triple::anchor_sets(params, &d.g, &d.h);
    (a1 - d.t.s1, a2 - d.t.s2, a3 - d.t.s3)
}

/// Product in `T / Rad(T)` of two quotient basis elements.
pub fn quotient_multiply(params: &GdParams, a: &DLabel, b: &DLabel) -> Option<DLabel> {
    if a.h != b.g {
        return None;
    }
    let (ga1, ga2, ga3) = triple::anchor_sets(params, &a.g, &a.h);
    let (gb1, gb2, gb3) = triple::anchor_sets(params, &b.g, &b.h);
    if ga1 - a.t.s1 != gb1 - b.t.s1 || ga2 - a.t.s2 != gb2 - b.t.s2 || ga3 - a.t.s3 != gb3 - b.t.s3 {
        return None;
    }
    let t = triple::compose_unchecked(params, &a.g, &a.h, &b.h, &a.t, &b.t);
    Some(DLabel::new(a.g, b.h, t))
}

/// One Wedderburn block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedderburnClass {
    /// Least label of the class.
    pub representative: DLabel,
    /// `𝔻(m)`, in color order.
    pub colors: Vec<Color>,
    pub block_size: usize,
    pub members: Vec<DLabel>,
}

impl WedderburnClass {
    /// `D_{h,i}(m)`: the member anchored at `(h, i)`.
    pub fn unit(&self, h: &Color, i: &Color) -> Option<DLabel> {
        self.members.iter().copied().find(|d| d.g == *h && d.h == *i)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedderburnReport {
    pub classes: Vec<WedderburnClass>,
    /// `(size, multiplicity)`, sizes descending.
    pub blocks: Vec<(usize, usize)>,
    pub n_classes: usize,
    pub quotient_dim: usize,
    pub radical_dim: usize,
    pub nilpotency_index: usize,
}

impl WedderburnReport {
    /// Block sizes with repetition, descending.
    pub fn block_sizes(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for &(s, m) in &self.blocks {
            out.extend(core::iter::repeat(s).take(m));
        }
        out
    }
}

/// Partitions `𝔻` into classes and reads off the block sizes.
pub fn wedderburn(params: &GdParams) -> WedderburnReport {
    let basis = quotient_basis(params);
    let total = algebra::b2_labels(params).len();
    let mut groups: BTreeMap<(Subset, Subset, Subset), Vec<DLabel>> = BTreeMap::new();
    for d in &basis {
        groups.entry(class_signature(params, d)).or_default().push(*d);
    }
    let mut classes: Vec<WedderburnClass> = groups
        .into_values()
        .map(|mut members| {
            members.sort();
            let mut colors: Vec<Color> = members.iter().filter(|d| d.g == d.h).map(|d| d.g).collect();
            colors.sort();
            colors.dedup();
            WedderburnClass {
                representative: members[0],
                block_size: colors.len(),
                colors,
                members,
            }
        })
        .collect();
    classes.sort_by_key(|c| c.representative);
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for c in &classes {
        *counts.entry(c.block_size).or_default() += 1;
    }
    let blocks: Vec<(usize, usize)> = counts.into_iter().rev().collect();
    WedderburnReport {
        n_classes: classes.len(),
        classes,
        blocks,
        quotient_dim: basis.len(),
        radical_dim: total - basis.len(),
        nilpotency_index: radical_nilpotency_index(params),
    }
}

pub fn irreducible_module_count(params: &GdParams) -> usize {
    wedderburn(params).n_classes
}

/// `|{C_a : p ∤ k_a}|`, reported next to the class count.
pub fn central_unit_count(params: &GdParams) -> usize {
    algebra::center_labels(params)
        .iter()
        .filter(|a| !divides(params, &triple::k_triple(params, a)))
        .count()
}
