//! The symbolic Terwilliger algebra in the aggregated basis `B_{g,h,t}`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::scheme::{Color, GdParams};
use crate::triple::{self, TripleSet};

/// `B_{g,h,t}`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct B2Label {
    pub g: Color,
    pub h: Color,
    pub t: TripleSet,
}

impl B2Label {
    pub fn new(g: Color, h: Color, t: TripleSet) -> B2Label {
        B2Label { g, h, t }
    }

    pub fn is_valid(&self, params: &GdParams) -> bool {
        self.g.len() == params.n() && self.h.len() == params.n() && triple::is_anchored(params, &self.g, &self.h, &self.t)
    }

    pub fn transpose(&self) -> B2Label {
        B2Label::new(self.h, self.g, self.t)
    }
}

impl fmt::Debug for B2Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B[{:?},{:?},{:?}]", self.g, self.h, self.t)
    }
}

/// `E*_g A_i E*_h`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct B1Label {
    pub g: Color,
    pub i: Color,
    pub h: Color,
}

impl B1Label {
    pub fn new(g: Color, i: Color, h: Color) -> B1Label {
        B1Label { g, i, h }
    }

    pub fn is_valid(&self, params: &GdParams) -> bool {
        params.support_nonzero(&self.g, &self.h, &self.i)
    }
}

impl fmt::Debug for B1Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E*{:?} A{:?} E*{:?}", self.g, self.i, self.h)
    }
}

/// A finite linear combination of `B_{g,h,t}` with nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<B2Label, Scalar>,
}

impl AlgebraElement {
    pub fn zero() -> AlgebraElement {
        AlgebraElement::default()
    }

    pub fn basis(field: Field, label: B2Label) -> AlgebraElement {
        AlgebraElement::term(label, field.one())
    }

    pub fn term(label: B2Label, coeff: Scalar) -> AlgebraElement {
        let mut x = AlgebraElement::zero();
        x.add_term(label, coeff);
        x
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&B2Label, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, label: &B2Label) -> Option<&Scalar> {
        self.terms.get(label)
    }

    /// Adds `coeff * label`, dropping the entry if it cancels.
    pub fn add_term(&mut self, label: B2Label, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&label) {
            Some(c) => {
                *c += &coeff;
                if c.is_zero() {
                    self.terms.remove(&label);
                }
            }
            None => {
                self.terms.insert(label, coeff);
            }
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(*l, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(*l, -c);
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (l, c) in &self.terms {
            out.add_term(*l, c * s);
        }
        out
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (l, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c}){l:?}")?;
        }
        Ok(())
    }
}

/// Every `B_{g,h,t}`, ordered by `g`, `h`, then graded `t`.
pub fn b2_labels(params: &GdParams) -> Vec<B2Label> {
    let colors = params.colors();
    let mut out = Vec::new();
    for g in &colors {
        for h in &colors {
            for t in triple::enumerate_u(params, g, h) {
                out.push(B2Label::new(*g, *h, t));
            }
        }
    }
    out
}

/// Every `E*_g A_i E*_h` with `p_{g,h}^i != 0`.
pub fn b1_labels(params: &GdParams) -> Vec<B1Label> {
    let colors = params.colors();
    let mut out = Vec::new();
    for g in &colors {
        for h in &colors {
            for i in params.enumerate_p(g, h) {
                out.push(B1Label::new(*g, i, *h));
            }
        }
    }
    out
}

/// `2^{n1+2n4} 3^{n4} 5^{n1} 11^{n2+n3}`.
pub fn dim_t(params: &GdParams) -> BigUint {
    let c = params.shape_counts();
    BigUint::from(2u32).pow((c.n1 + 2 * c.n4) as u32)
        * BigUint::from(3u32).pow(c.n4 as u32)
        * BigUint::from(5u32).pow(c.n1 as u32)
        * BigUint::from(11u32).pow((c.n2 + c.n3) as u32)
}

/// The scalar of the product `B_{g,h,j} B_{h,i,k}` as an integer.
pub fn product_weight(params: &GdParams, g: &Color, h: &Color, i: &Color, j: &TripleSet, k: &TripleSet) -> BigUint {
    triple::k_square(params, g, h, i)
        * triple::k_triple(params, &j.minus_color(i))
        * triple::k_triple(params, &k.minus_color(g))
        * triple::k_triple(params, &j.intersect(k))
}

/// Product of two basis elements.
pub fn multiply_b2(params: &GdParams, a: &B2Label, b: &B2Label) -> AlgebraElement {
    if a.h != b.g {
        return AlgebraElement::zero();
    }
    let (g, h, i) = (&a.g, &a.h, &b.h);
    let w = product_weight(params, g, h, i, &a.t, &b.t);
    let label = B2Label::new(*g, *i, triple::compose_unchecked(params, g, h, i, &a.t, &b.t));
    AlgebraElement::term(label, params.field().from_biguint(&w))
}

/// Bilinear extension of [`multiply_b2`].
pub fn multiply(params: &GdParams, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
    let mut by_left: BTreeMap<Color, Vec<(&B2Label, &Scalar)>> = BTreeMap::new();
    for (l, c) in y.terms() {
        by_left.entry(l.g).or_default().push((l, c));
    }
    let mut out = AlgebraElement::zero();
    for (a, ca) in x.terms() {
        let Some(right) = by_left.get(&a.h) else { continue };
        for (b, cb) in right {
            let w = product_weight(params, &a.g, &a.h, &b.h, &a.t, &b.t);
            let coeff = &(ca * *cb) * &params.field().from_biguint(&w);
            let t = triple::compose_unchecked(params, &a.g, &a.h, &b.h, &a.t, &b.t);
            out.add_term(B2Label::new(a.g, b.h, t), coeff);
        }
    }
    out
}

/// `I = sum_g B_{g,g,𝔬}`.
pub fn identity(params: &GdParams) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for g in params.colors() {
        out.add_term(B2Label::new(g, g, TripleSet::EMPTY), params.field().one());
    }
    out
}

/// `E*_g = B_{g,g,𝔬}`.
pub fn dual_idempotent_element(params: &GdParams, g: &Color) -> AlgebraElement {
    AlgebraElement::basis(params.field(), B2Label::new(*g, *g, TripleSet::EMPTY))
}

/// `A_i = sum_{g,h} E*_g A_i E*_h` in B2 coordinates.
pub fn adjacency_element(params: &GdParams, i: &Color) -> AlgebraElement {
    let colors = params.colors();
    let mut out = AlgebraElement::zero();
    for g in &colors {
        for h in &colors {
            if params.support_nonzero(g, h, i) {
                out = out.add(&b1_expand_in_b2(params, &B1Label::new(*g, *i, *h)).expect("valid label"));
            }
        }
    }
    out
}

pub fn transpose(x: &AlgebraElement) -> AlgebraElement {
    AlgebraElement {
        terms: x.terms.iter().map(|(l, c)| (l.transpose(), c.clone())).collect(),
    }
}

/// `B_{g,h,t} = sum_{a in U_{g,h,t}} E*_g A_a E*_h`.
pub fn b2_expand_in_b1(params: &GdParams, a: &B2Label) -> Result<BTreeMap<B1Label, Scalar>> {
    let members = triple::members_u(params, &a.g, &a.h, &a.t)?;
    Ok(members
        .into_iter()
        .map(|i| (B1Label::new(a.g, i, a.h), params.field().one()))
        .collect())
}

/// Inverts [`b2_expand_in_b1`] on a single `E*_g A_i E*_h`.
pub fn b1_expand_in_b2(params: &GdParams, b: &B1Label) -> Result<AlgebraElement> {
    if b.g.len() != params.n() || b.i.len() != params.n() || b.h.len() != params.n() {
        return Err(Error::LengthMismatch {
            expected: params.n(),
            got: b.i.len(),
        });
    }
    if !b.is_valid(params) {
        return Err(Error::NotAnchored);
    }
    let (g, h) = (&b.g, &b.h);
    let labels = triple::enumerate_u(params, g, h);
    let field = params.field();
    // Row s of the system is indexed by the minimal member of U_{g,h,s};
    // row s touches column t exactly when that member lies in U_{g,h,t}.
    let mut coeffs: BTreeMap<TripleSet, Scalar> = BTreeMap::new();
    for s in labels.iter().rev() {
        let row = triple::minimal_member(params, g, h, s);
        let mut c = if row == b.i { field.one() } else { field.zero() };
        for (t, ct) in &coeffs {
            if triple::is_member(params, g, h, t, &row) {
                c -= ct;
            }
        }
        coeffs.insert(*s, c);
    }
    let mut out = AlgebraElement::zero();
    for (t, c) in coeffs {
        out.add_term(B2Label::new(*g, *h, t), c);
    }
    Ok(out)
}

/// The distinct triples lying in some `U_{g,g}`, graded order.
pub fn center_labels(params: &GdParams) -> Vec<TripleSet> {
    let mut set = BTreeSet::new();
    for g in params.colors() {
        set.extend(triple::enumerate_u(params, &g, &g));
    }
    let mut out: Vec<TripleSet> = set.into_iter().collect();
    out.sort_by_key(TripleSet::graded_key);
    out
}

/// `C_h = sum_i k_{h∖i} B_{i,i,i∩h}`.
pub fn center_element(params: &GdParams, h: &TripleSet) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for i in params.colors() {
        let k = triple::k_triple(params, &h.minus_color(&i));
        out.add_term(B2Label::new(i, i, h.cap_color(&i)), params.field().from_biguint(&k));
    }
    out
}

pub fn center_basis(params: &GdParams) -> Vec<(TripleSet, AlgebraElement)> {
    center_labels(params)
        .into_iter()
        .map(|h| (h, center_element(params, &h)))
        .collect()
}

/// `2^{n1+2n4} 3^{n2+n3}`.
pub fn center_dim(params: &GdParams) -> BigUint {
    let c = params.shape_counts();
    BigUint::from(2u32).pow((c.n1 + 2 * c.n4) as u32) * BigUint::from(3u32).pow((c.n2 + c.n3) as u32)
}

/// The generators `A_g` and `E*_g` in B2 coordinates.
pub fn generators(params: &GdParams) -> Vec<AlgebraElement> {
    let colors = params.colors();
    let mut out: Vec<AlgebraElement> = colors.iter().map(|g| adjacency_element(params, g)).collect();
    out.extend(colors.iter().map(|g| dual_idempotent_element(params, g)));
    out
}

/// Whether `x` commutes with every generator.
pub fn is_central(params: &GdParams, x: &AlgebraElement) -> bool {
    generators(params)
        .iter()
        .all(|y| multiply(params, x, y) == multiply(params, y, x))
}
