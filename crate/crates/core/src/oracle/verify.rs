//! Checks comparing the closed forms against explicit matrices.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::{
    adjacency_matrix, dual_idempotent, realize_b1, ExactMatrix, OrbitModel, Realizer, VertexSpace,
    DEFAULT_VERTEX_CAP,
};
use crate::algebra::{self, AlgebraElement, B2Label};
use crate::linalg::EchelonBasis;
use crate::scheme::Color;
use crate::structure::{self, DLabel};
use crate::triple;

/// Outcome of one check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckReport {
    fn new(name: &str, passed: bool, detail: String) -> CheckReport {
        CheckReport {
            name: name.to_string(),
            passed,
            detail,
        }
    }

    fn from_failure(name: &str, failure: Option<String>, ok: String) -> CheckReport {
        match failure {
            Some(d) => CheckReport::new(name, false, d),
            None => CheckReport::new(name, true, ok),
        }
    }
}

/// Span of realized matrices with membership by exact elimination.
pub struct MatrixSpan {
    basis: EchelonBasis,
    members: Vec<ExactMatrix>,
}

impl MatrixSpan {
    pub fn new(space: &VertexSpace) -> MatrixSpan {
        MatrixSpan {
            basis: EchelonBasis::new(space.field()),
            members: Vec::new(),
        }
    }

    pub fn from_iter<I: IntoIterator<Item = ExactMatrix>>(space: &VertexSpace, it: I) -> MatrixSpan {
        let mut s = MatrixSpan::new(space);
        for m in it {
            s.insert(m);
        }
        s
    }

    pub fn insert(&mut self, m: ExactMatrix) -> bool {
        let grew = self.basis.insert(&m.to_sparse());
        if grew {
            self.members.push(m);
        }
        grew
    }

    pub fn contains(&self, m: &ExactMatrix) -> bool {
        self.basis.contains(&m.to_sparse())
    }

    pub fn dim(&self) -> usize {
        self.basis.rank()
    }

    /// An independent spanning family.
    pub fn members(&self) -> &[ExactMatrix] {
        &self.members
    }
}

fn realized_generators(space: &VertexSpace) -> Vec<ExactMatrix> {
    let mut out: Vec<ExactMatrix> = space.colors().iter().map(|g| adjacency_matrix(space, g)).collect();
    out.extend(space.colors().iter().map(|g| dual_idempotent(space, g)));
    out
}

/// (S1) to (S3) by counting, with intersection numbers from the closed form.
pub fn verify_axioms(space: &VertexSpace) -> CheckReport {
    let name = "scheme axioms";
    let params = space.params();
    let n = space.len();
    let colors = space.colors();
    let c = colors.len();
    let mut failure = None;
    let zero = space.color_index(&Color::zero(params.n()));
    'outer: for y in 0..n {
        for z in 0..n {
            let r = space.relation_index(y, z);
            if (r == zero) != (y == z) {
                failure = Some(format!("diagonal relation wrong at ({y},{z})"));
                break 'outer;
            }
            if r != space.relation_index(z, y) {
                failure = Some(format!("relation not symmetric at ({y},{z})"));
                break 'outer;
            }
        }
    }
    for g in colors {
        let k = params.valency(g).to_usize().unwrap_or(usize::MAX);
        let row = (0..n).filter(|&z| space.relation_of(0, z) == *g).count();
        if failure.is_none() && (row == 0 || row != k) {
            failure = Some(format!("valency of {g:?}: counted {row}, closed form {k}"));
        }
    }
    // nonzero p^k_{i,j} per k, as (i * c + j, value)
    let mut table: Vec<Vec<(usize, usize)>> = alloc::vec![Vec::new(); c];
    for (k, kc) in colors.iter().enumerate() {
        for (i, ic) in colors.iter().enumerate() {
            for (j, jc) in colors.iter().enumerate() {
                let p = params.intersection_number(ic, jc, kc).expect("valid colors");
                let p = p.to_usize().unwrap_or(usize::MAX);
                if p > 0 {
                    table[k].push((i * c + j, p));
                }
            }
        }
    }
    let mut hist = alloc::vec![0usize; c * c];
    'pairs: for y in 0..n {
        if failure.is_some() {
            break;
        }
        for z in 0..n {
            let k = space.relation_index(y, z);
            hist.iter_mut().for_each(|h| *h = 0);
            for w in 0..n {
                hist[space.relation_index(y, w) * c + space.relation_index(w, z)] += 1;
            }
            let total: usize = table[k].iter().map(|&(_, p)| p).sum();
            let bad = table[k].iter().find(|&&(ij, p)| hist[ij] != p);
            if total != n || bad.is_some() {
                let (i, j) = bad.map_or((0, 0), |&(ij, _)| (ij / c, ij % c));
                failure = Some(format!(
                    "p^{:?}_{{{:?},{:?}}} differs from the count at ({y},{z})",
                    colors[k], colors[i], colors[j]
                ));
                break 'pairs;
            }
        }
    }
    CheckReport::from_failure(name, failure, format!("{n} vertices, {c} relations"))
}

/// Counts `|xR_a ∩ yR_b ∩ zR_c|` for every triple and checks they depend
/// only on the relations among `x`, `y`, `z`.
pub fn verify_triple_regularity(space: &VertexSpace) -> CheckReport {
    let name = "triple regularity";
    let n = space.len();
    let c = space.colors().len();
    let mut seen: BTreeMap<(usize, usize, usize), Vec<u32>> = BTreeMap::new();
    let mut hist = alloc::vec![0u32; c * c * c];
    let mut failure = None;
    'outer: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let key = (space.relation_index(x, y), space.relation_index(x, z), space.relation_index(y, z));
                hist.iter_mut().for_each(|h| *h = 0);
                for w in 0..n {
                    let idx = (space.relation_index(x, w) * c + space.relation_index(y, w)) * c + space.relation_index(z, w);
                    hist[idx] += 1;
                }
                match seen.get(&key) {
                    Some(h) if *h != hist => {
                        failure = Some(format!("counts differ for the triple ({x},{y},{z})"));
                        break 'outer;
                    }
                    Some(_) => {}
                    None => {
                        seen.insert(key, hist.clone());
                    }
                }
            }
        }
    }
    CheckReport::from_failure(name, failure, format!("{} triple types", seen.len()))
}

/// Span closure of the generators against `dim_T`.
pub fn verify_dimension(space: &VertexSpace) -> CheckReport {
    let name = "generated dimension";
    let expected = algebra::dim_t(space.params());
    match OrbitModel::new(space) {
        Ok(model) => {
            let got = model.generated_dimension(space.field());
            CheckReport::new(
                name,
                BigUint::from(got) == expected,
                format!("closure {got}, closed form {expected}, {} pair orbits", model.orbit_count()),
            )
        }
        Err(e) => CheckReport::new(name, false, format!("{e}")),
    }
}

/// The generated dimension at other base points.
pub fn verify_base_points(space: &VertexSpace, bases: &[usize]) -> CheckReport {
    let name = "base point independence";
    let expected = algebra::dim_t(space.params());
    let mut dims = Vec::new();
    for &b in bases {
        let coords = space.coords(b).to_vec();
        let moved = match VertexSpace::with_base_point(space.params(), &coords, space.len().max(DEFAULT_VERTEX_CAP)) {
            Ok(s) => s,
            Err(e) => return CheckReport::new(name, false, format!("{e}")),
        };
        let d = match OrbitModel::new(&moved) {
            Ok(m) => m.generated_dimension(space.field()),
            Err(e) => return CheckReport::new(name, false, format!("{e}")),
        };
        dims.push((b, d));
    }
    let passed = dims.iter().all(|(_, d)| BigUint::from(*d) == expected);
    CheckReport::new(name, passed, format!("base points and dimensions {dims:?}"))
}

/// The realized basis is independent and has `dim_T` elements.
pub fn verify_basis_rank(space: &VertexSpace) -> CheckReport {
    let name = "basis realization rank";
    let labels = algebra::b2_labels(space.params());
    let span = MatrixSpan::from_iter(space, labels.iter().map(|l| super::realize_b2(space, l)));
    CheckReport::new(
        name,
        span.dim() == labels.len() && BigUint::from(labels.len()) == algebra::dim_t(space.params()),
        format!("rank {} of {} labels", span.dim(), labels.len()),
    )
}

/// Symbolic generators realize to `A_g` and `E*_g`, with the basic identities.
pub fn verify_generators(space: &VertexSpace) -> CheckReport {
    let name = "generators";
    let params = space.params();
    let f = space.field();
    let n = space.len();
    let mut r = Realizer::new(space);
    let mut failure = None;
    let mut sum_a = ExactMatrix::zero(f, n);
    let mut sum_e = ExactMatrix::zero(f, n);
    let es: Vec<ExactMatrix> = space.colors().iter().map(|g| dual_idempotent(space, g)).collect();
    for (gi, g) in space.colors().iter().enumerate() {
        let a = adjacency_matrix(space, g);
        if r.element(&algebra::adjacency_element(params, g)) != a {
            failure.get_or_insert(format!("A_{g:?} differs from its expansion"));
        }
        if r.element(&algebra::dual_idempotent_element(params, g)) != es[gi] {
            failure.get_or_insert(format!("E*_{g:?} differs from its expansion"));
        }
        if a.transpose() != a {
            failure.get_or_insert(format!("A_{g:?} not symmetric"));
        }
        for (hi, e) in es.iter().enumerate() {
            let prod = es[gi].mul(e);
            let ok = if gi == hi { prod == es[gi] } else { prod.is_zero() };
            if !ok {
                failure.get_or_insert(format!("E* products fail at {g:?}"));
            }
        }
        sum_a = sum_a.add(&a);
        sum_e = sum_e.add(&es[gi]);
    }
    if sum_e != ExactMatrix::identity(f, n) {
        failure.get_or_insert("dual idempotents do not sum to I".to_string());
    }
    if sum_a.nnz() != n * n || sum_a.rows().iter().flat_map(|r| r.values()).any(|v| !v.is_one()) {
        failure.get_or_insert("adjacency matrices do not sum to J".to_string());
    }
    if r.element(&algebra::identity(params)) != ExactMatrix::identity(f, n) {
        failure.get_or_insert("symbolic identity differs from I".to_string());
    }
    CheckReport::from_failure(name, failure, format!("{} colors", space.colors().len()))
}

/// `realize(a * b) = realize(a) realize(b)` on the given pairs.
pub fn verify_products(space: &VertexSpace, pairs: &[(B2Label, B2Label)]) -> CheckReport {
    let name = "structure constants";
    let params = space.params();
    let mut r = Realizer::new(space);
    let mut failure = None;
    let mut nonzero = 0usize;
    for (a, b) in pairs {
        let sym = algebra::multiply_b2(params, a, b);
        let lhs = r.element(&sym);
        let rhs = r.basis(a).clone().mul(r.basis(b));
        if !sym.is_zero() {
            nonzero += 1;
        }
        if lhs != rhs {
            failure = Some(format!("{a:?} * {b:?} gives {sym:?}"));
            break;
        }
    }
    CheckReport::from_failure(name, failure, format!("{} pairs, {nonzero} nonzero products", pairs.len()))
}

/// Every basis pair.
pub fn all_pairs(space: &VertexSpace) -> Vec<(B2Label, B2Label)> {
    let labels = algebra::b2_labels(space.params());
    let mut out = Vec::with_capacity(labels.len() * labels.len());
    for a in &labels {
        for b in &labels {
            out.push((*a, *b));
        }
    }
    out
}

/// Basis changes between `B1` and `B2` agree with the realized matrices.
pub fn verify_round_trip(space: &VertexSpace) -> CheckReport {
    let name = "B1/B2 round trip";
    let params = space.params();
    let mut r = Realizer::new(space);
    let mut failure = None;
    let b1 = algebra::b1_labels(params);
    for b in &b1 {
        match algebra::b1_expand_in_b2(params, b) {
            Ok(x) => {
                if r.element(&x) != realize_b1(space, b) {
                    failure.get_or_insert(format!("{b:?} expands incorrectly"));
                }
            }
            Err(e) => {
                failure.get_or_insert(format!("{b:?}: {e}"));
            }
        }
    }
    let labels = algebra::b2_labels(params);
    for l in &labels {
        let Ok(parts) = algebra::b2_expand_in_b1(params, l) else {
            failure.get_or_insert(format!("{l:?} has no B1 expansion"));
            continue;
        };
        let mut m = ExactMatrix::zero(space.field(), space.len());
        let mut back = AlgebraElement::zero();
        for (b, c) in &parts {
            m.add_scaled(&realize_b1(space, b), c);
            back = back.add(&algebra::b1_expand_in_b2(params, b).unwrap_or_default().scale(c));
        }
        if &m != r.basis(l) || back != AlgebraElement::basis(space.field(), *l) {
            failure.get_or_insert(format!("{l:?} does not round trip"));
        }
    }
    CheckReport::from_failure(name, failure, format!("{} B1 and {} B2 labels", b1.len(), labels.len()))
}

/// The symbolic transpose matches the matrix transpose.
pub fn verify_transpose(space: &VertexSpace) -> CheckReport {
    let name = "transpose";
    let mut r = Realizer::new(space);
    let mut failure = None;
    for l in algebra::b2_labels(space.params()) {
        let t = algebra::transpose(&AlgebraElement::basis(space.field(), l));
        if r.element(&t) != r.basis(&l).transpose() {
            failure.get_or_insert(format!("{l:?}"));
        }
    }
    CheckReport::from_failure(name, failure, String::from("all basis elements"))
}

/// Center basis: size, centrality in the matrix algebra, `C_h C_h = k_h C_h`.
pub fn verify_center(space: &VertexSpace) -> CheckReport {
    let name = "center";
    let params = space.params();
    let f = space.field();
    let gens = realized_generators(space);
    let mut r = Realizer::new(space);
    let mut failure = None;
    let basis = algebra::center_basis(params);
    let mut span = MatrixSpan::new(space);
    for (h, c) in &basis {
        let m = r.element(c);
        if gens.iter().any(|g| g.mul(&m) != m.mul(g)) {
            failure.get_or_insert(format!("C_{h:?} is not central"));
        }
        let k = f.from_biguint(&triple::k_triple(params, h));
        if m.mul(&m) != m.scale(&k) {
            failure.get_or_insert(format!("C_{h:?} squared is not k C_{h:?}"));
        }
        span.insert(m);
    }
    if BigUint::from(span.dim()) != algebra::center_dim(params) || span.dim() != basis.len() {
        failure.get_or_insert(format!(
            "rank {} of {} elements, closed form {}",
            span.dim(),
            basis.len(),
            algebra::center_dim(params)
        ));
    }
    CheckReport::from_failure(name, failure, format!("dimension {}", basis.len()))
}

fn realized_radical(space: &VertexSpace, r: &mut Realizer<'_>) -> MatrixSpan {
    let labels = structure::radical_basis(space.params());
    MatrixSpan::from_iter(space, labels.iter().map(|l| r.basis(l).clone()))
}

/// The radical span is a two-sided ideal.
pub fn verify_ideal(space: &VertexSpace) -> CheckReport {
    let name = "radical ideal";
    let gens = realized_generators(space);
    let mut r = Realizer::new(space);
    let span = realized_radical(space, &mut r);
    let mut failure = None;
    'outer: for x in span.members() {
        for g in &gens {
            if !span.contains(&g.mul(x)) || !span.contains(&x.mul(g)) {
                failure = Some("product with a generator leaves the span".to_string());
                break 'outer;
            }
        }
    }
    CheckReport::from_failure(name, failure, format!("dimension {}", span.dim()))
}

/// Smallest `t` with `S^t = 0`, or `None` if `S^cap` is still nonzero.
pub fn nilpotency_index(space: &VertexSpace, span: &MatrixSpan, cap: usize) -> Option<usize> {
    if span.dim() == 0 {
        return Some(1);
    }
    let mut power = MatrixSpan::from_iter(space, span.members().iter().cloned());
    for t in 2..=cap {
        let mut next = MatrixSpan::new(space);
        for a in power.members() {
            for b in span.members() {
                next.insert(a.mul(b));
            }
        }
        if next.dim() == 0 {
            return Some(t);
        }
        power = next;
    }
    None
}

/// The radical span is nilpotent with the predicted index.
pub fn verify_nilpotency(space: &VertexSpace) -> CheckReport {
    let name = "radical nilpotency";
    let expected = structure::radical_nilpotency_index(space.params());
    let mut r = Realizer::new(space);
    let span = realized_radical(space, &mut r);
    let got = nilpotency_index(space, &span, expected + 1);
    CheckReport::new(
        name,
        got == Some(expected),
        format!("index {got:?}, predicted {expected}"),
    )
}

/// Radical emptiness agrees with the semisimplicity predicate.
pub fn verify_semisimplicity(space: &VertexSpace) -> CheckReport {
    let name = "semisimplicity";
    let params = space.params();
    let empty = structure::radical_basis(params).is_empty();
    let predicate = structure::is_semisimple(params);
    CheckReport::new(
        name,
        empty == predicate,
        format!("radical empty: {empty}, predicate: {predicate}"),
    )
}

fn realize_d(r: &mut Realizer<'_>, d: &DLabel) -> Option<ExactMatrix> {
    let params = r.space().params().clone();
    structure::d_element(&params, &d.g, &d.h, &d.t).ok().map(|x| r.element(&x))
}

/// For every color: the radical of the corner is a nilpotent ideal of the
/// predicted index, and the `D_{g,g,h}` are orthogonal idempotents that
/// complete it to a basis of the corner.
pub fn verify_corners(space: &VertexSpace) -> CheckReport {
    let name = "corner algebras";
    let params = space.params();
    let f = space.field();
    let mut r = Realizer::new(space);
    let mut failure: Option<String> = None;
    for g in space.colors() {
        let corner: Vec<B2Label> = triple::enumerate_u(params, g, g)
            .into_iter()
            .map(|a| B2Label::new(*g, *g, a))
            .collect();
        let rad_labels = structure::corner_radical_basis(params, g);
        let rad = MatrixSpan::from_iter(space, rad_labels.iter().map(|l| r.basis(l).clone()));
        for b in &corner {
            let bm = r.basis(b).clone();
            if rad.members().iter().any(|x| !rad.contains(&bm.mul(x)) || !rad.contains(&x.mul(&bm))) {
                failure.get_or_insert(format!("I_{g:?} is not an ideal"));
            }
        }
        let expected = structure::corner_nilpotency_index(params, g);
        let got = nilpotency_index(space, &rad, expected + 1);
        if got != Some(expected) {
            failure.get_or_insert(format!("I_{g:?} has index {got:?}, predicted {expected}"));
        }
        let units: Vec<DLabel> = corner
            .iter()
            .filter(|l| !f.divides(&triple::k_triple(params, &l.t)))
            .map(|l| DLabel::from(*l))
            .collect();
        if BigUint::from(units.len()) != structure::corner_quotient_dim(params, g) {
            failure.get_or_insert(format!("{} idempotents at {g:?}", units.len()));
        }
        let mut ds = Vec::new();
        for d in &units {
            match realize_d(&mut r, d) {
                Some(m) => ds.push(m),
                None => {
                    failure.get_or_insert(format!("{d:?} undefined"));
                }
            }
        }
        for (i, a) in ds.iter().enumerate() {
            for (j, b) in ds.iter().enumerate() {
                let prod = a.mul(b);
                let ok = if i == j { &prod == a } else { prod.is_zero() };
                if !ok {
                    failure.get_or_insert(format!("{:?} {:?} is not δ-idempotent", units[i], units[j]));
                }
            }
            for b in corner.iter().filter(|b| !f.divides(&triple::k_triple(params, &b.t))) {
                let bm = r.basis(b).clone();
                let expected = if b.t.precedes(&units[i].t) {
                    a.scale(&f.from_biguint(&triple::k_triple(params, &b.t)))
                } else {
                    ExactMatrix::zero(f, space.len())
                };
                if bm.mul(a) != expected || a.mul(&bm) != expected {
                    failure.get_or_insert(format!("{b:?} acts wrongly on {:?}", units[i]));
                }
            }
        }
        let mut full = MatrixSpan::from_iter(space, rad.members().iter().cloned());
        for d in ds {
            full.insert(d);
        }
        if full.dim() != corner.len() {
            failure.get_or_insert(format!("corner at {g:?}: rank {} of {}", full.dim(), corner.len()));
        }
        if failure.is_some() {
            break;
        }
    }
    CheckReport::from_failure(name, failure, format!("{} colors", space.colors().len()))
}

/// Realized `D` products match the quotient table modulo the realized
/// radical, and the `D`s complete the radical to all of `T`.
pub fn verify_matrix_units(space: &VertexSpace) -> CheckReport {
    let name = "matrix units";
    let params = space.params();
    let f = space.field();
    let mut r = Realizer::new(space);
    let rad = realized_radical(space, &mut r);
    let basis = structure::quotient_basis(params);
    let mut failure: Option<String> = None;
    let mut realized: BTreeMap<DLabel, ExactMatrix> = BTreeMap::new();
    for d in &basis {
        match realize_d(&mut r, d) {
            Some(m) => {
                realized.insert(*d, m);
            }
            None => {
                failure.get_or_insert(format!("{d:?} undefined"));
            }
        }
    }
    let mut full = MatrixSpan::from_iter(space, rad.members().iter().cloned());
    for m in realized.values() {
        full.insert(m.clone());
    }
    let dim = algebra::dim_t(params);
    if BigUint::from(full.dim()) != dim {
        failure.get_or_insert(format!("radical plus units has rank {}, expected {dim}", full.dim()));
    }
    let report = structure::wedderburn(params);
    let squares: usize = report.classes.iter().map(|c| c.block_size * c.block_size).sum();
    if squares != basis.len() || report.classes.iter().any(|c| c.members.len() != c.block_size * c.block_size) {
        failure.get_or_insert(format!("block sizes square to {squares}, quotient has {}", basis.len()));
    }
    let zero = ExactMatrix::zero(f, space.len());
    'outer: for (a, ma) in &realized {
        for (b, mb) in &realized {
            let target = structure::quotient_multiply(params, a, b)
                .map(|c| realized.get(&c).cloned().unwrap_or_else(|| zero.clone()))
                .unwrap_or_else(|| zero.clone());
            let diff = ma.mul(mb).sub(&target);
            if !rad.contains(&diff) {
                failure.get_or_insert(format!("{a:?} {b:?} off the table modulo the radical"));
                break 'outer;
            }
        }
    }
    CheckReport::from_failure(
        name,
        failure,
        format!("{} units in {} blocks", basis.len(), report.n_classes),
    )
}

/// Deterministic alternative base points: last, middle and a third of the way.
pub fn alternative_base_points(space: &VertexSpace) -> Vec<usize> {
    let n = space.len();
    let mut out: Vec<usize> = [n - 1, n / 2, n / 3]
        .into_iter()
        .filter(|&v| v != space.base())
        .collect();
    out.dedup();
    out
}

/// Runs every check. `pairs` selects the structure-constant sample;
/// the quartic triple-regularity count is skipped above `count_limit`
/// vertices.
pub fn verify_all(space: &VertexSpace, pairs: &[(B2Label, B2Label)], count_limit: usize) -> Vec<CheckReport> {
    let mut out = alloc::vec![verify_axioms(space)];
    if space.len() <= count_limit {
        out.push(verify_triple_regularity(space));
    }
    out.push(verify_generators(space));
    out.push(verify_dimension(space));
    out.push(verify_base_points(space, &alternative_base_points(space)));
    out.push(verify_basis_rank(space));
    out.push(verify_products(space, pairs));
    out.push(verify_round_trip(space));
    out.push(verify_transpose(space));
    out.push(verify_center(space));
    out.push(verify_semisimplicity(space));
    out.push(verify_ideal(space));
    out.push(verify_nilpotency(space));
    out.push(verify_corners(space));
    out.push(verify_matrix_units(space));
    out
}
