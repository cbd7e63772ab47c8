//! Worked examples with published values. Coordinate indices are 0-based
//! here, so the second coordinate is index 1.

use std::collections::BTreeSet;

use gdterwilliger::algebra::{self, AlgebraElement};
use gdterwilliger::scheme::gd_intersection_number;
use gdterwilliger::structure;
use gdterwilliger::triple;
use gdterwilliger::{B2Label, Color, GdParams, Subset, TripleSet};

fn c(e: &[u8]) -> Color {
    Color::new(e).unwrap()
}

fn s(ix: &[usize]) -> Subset {
    Subset::from_indices(ix.iter().copied())
}

fn ts(a: &[usize], b: &[usize], d: &[usize]) -> TripleSet {
    TripleSet::new(s(a), s(b), s(d))
}

fn o() -> TripleSet {
    TripleSet::EMPTY
}

const N1: [(u64, u64, usize); 4] = [(2, 2, 10), (3, 2, 11), (2, 3, 11), (3, 3, 12)];

#[test]
fn gd_intersection_numbers() {
    assert_eq!(gd_intersection_number(2, 2, 1, 1, 0).unwrap(), 1);
    assert_eq!(gd_intersection_number(2, 2, 1, 1, 1).unwrap(), 0);
    assert_eq!(gd_intersection_number(3, 3, 0, 0, 0).unwrap(), 1);
    let p = GdParams::new(&[(2, 2)], 0).unwrap();
    assert_eq!(p.intersection_number(&c(&[1]), &c(&[1]), &c(&[0])).unwrap(), 1u32.into());
    assert!(!p.support_nonzero(&c(&[1]), &c(&[1]), &c(&[1])));
}

#[test]
fn color_count() {
    let p = GdParams::parse("2x3,3x3", 0).unwrap();
    assert_eq!(p.colors().len(), 9);
}

#[test]
fn p_prime_valenced() {
    assert!(!GdParams::new(&[(2, 2)], 2).unwrap().is_p_prime_valenced());
    assert!(GdParams::parse("2x3,3x3", 5).unwrap().is_p_prime_valenced());
}

#[test]
fn dimension_formula() {
    for (l, m, d) in N1 {
        for p in [0, 2, 3, 5, 7] {
            let params = GdParams::new(&[(l, m)], p).unwrap();
            assert_eq!(algebra::dim_t(&params), d.into());
            assert_eq!(algebra::b2_labels(&params).len(), d);
            assert_eq!(algebra::b1_labels(&params).len(), d);
        }
    }
    let params = GdParams::parse("2x3,3x3", 0).unwrap();
    assert_eq!(algebra::dim_t(&params), 132u32.into());
    assert_eq!(algebra::b2_labels(&params).len(), 132);
}

#[test]
fn u_set_of_the_notation_instance() {
    let params = GdParams::parse("2x3,3x3", 0).unwrap();
    let (g, h) = (c(&[0, 2]), c(&[1, 2]));
    let got: BTreeSet<TripleSet> = triple::enumerate_u(&params, &g, &h).into_iter().collect();
    let want: BTreeSet<TripleSet> = [o(), ts(&[], &[], &[1]), ts(&[], &[1], &[1])].into_iter().collect();
    assert_eq!(got, want);
    assert_eq!(triple::members_u(&params, &g, &h, &o()).unwrap(), vec![c(&[1, 0])]);
    for g in params.colors() {
        assert_eq!(triple::members_u(&params, &g, &g, &o()).unwrap(), vec![Color::zero(2)]);
    }
}

/// Single-factor basis. The published list for min{l,m} > 2 swaps the
/// triples on colors 1 and 2; the anchored labels are B_{1,1,i}, B_{2,2,h}.
#[test]
fn single_factor_bases() {
    let g = ts(&[], &[], &[0]);
    let h = ts(&[], &[0], &[0]);
    let i = ts(&[0], &[], &[]);
    let mut base: BTreeSet<B2Label> = BTreeSet::new();
    for a in 0..3u8 {
        for b in 0..3u8 {
            base.insert(B2Label::new(c(&[a]), c(&[b]), o()));
        }
    }
    base.insert(B2Label::new(c(&[2]), c(&[2]), g));
    let extra = |list: &[(u8, TripleSet)]| {
        let mut out = base.clone();
        out.extend(list.iter().map(|&(k, t)| B2Label::new(c(&[k]), c(&[k]), t)));
        out
    };
    let cases = [
        ((2, 2), extra(&[])),
        ((3, 2), extra(&[(2, h)])),
        ((2, 3), extra(&[(1, i)])),
        ((3, 3), extra(&[(1, i), (2, h)])),
    ];
    for ((l, m), want) in cases {
        let params = GdParams::new(&[(l, m)], 0).unwrap();
        let got: BTreeSet<B2Label> = algebra::b2_labels(&params).into_iter().collect();
        assert_eq!(got, want, "{l}x{m}");
    }
}

#[test]
fn structure_constant_example() {
    let (k, l) = (c(&[0, 2]), c(&[1, 2]));
    let g = ts(&[], &[], &[1]);
    let h = ts(&[], &[1], &[1]);
    for p in [0u64, 2, 3, 5, 7] {
        let params = GdParams::parse("2x3,3x3", p).unwrap();
        let f = params.field();
        let prod = algebra::multiply_b2(&params, &B2Label::new(k, l, g), &B2Label::new(l, k, h));
        let want = AlgebraElement::term(B2Label::new(k, k, h), f.from_u64(6));
        assert_eq!(prod, want, "p = {p}");
    }
    let p5 = GdParams::parse("2x3,3x3", 5).unwrap();
    let prod = algebra::multiply_b2(&p5, &B2Label::new(k, l, g), &B2Label::new(l, k, h));
    assert!(prod.coefficient(&B2Label::new(k, k, h)).unwrap().is_one());
    for p in [2, 3] {
        let params = GdParams::parse("2x3,3x3", p).unwrap();
        assert!(algebra::multiply_b2(&params, &B2Label::new(k, l, g), &B2Label::new(l, k, h)).is_zero());
    }
}

#[test]
fn product_rules() {
    for spec in ["3x3", "2x3,3x3"] {
        for p in [0, 2, 3] {
            let params = GdParams::parse(spec, p).unwrap();
            let f = params.field();
            let colors = params.colors();
            for g in &colors {
                for h in &colors {
                    for t in triple::enumerate_u(&params, h, h) {
                        let lhs = algebra::multiply_b2(
                            &params,
                            &B2Label::new(*g, *h, o()),
                            &B2Label::new(*h, *h, t),
                        );
                        let rhs = algebra::multiply_b2(
                            &params,
                            &B2Label::new(*g, *g, t),
                            &B2Label::new(*g, *h, o()),
                        );
                        if triple::is_anchored(&params, g, h, &t) {
                            assert_eq!(lhs, AlgebraElement::basis(f, B2Label::new(*g, *h, t)));
                            assert_eq!(rhs, lhs);
                        }
                    }
                    for i in &colors {
                        if h != i {
                            let a = B2Label::new(*g, *h, o());
                            let b = B2Label::new(*i, *g, o());
                            assert!(algebra::multiply_b2(&params, &a, &b).is_zero());
                        }
                    }
                }
                let u = triple::enumerate_u(&params, g, g);
                for a in &u {
                    for b in &u {
                        let got = algebra::multiply_b2(&params, &B2Label::new(*g, *g, *a), &B2Label::new(*g, *g, *b));
                        let k = f.from_biguint(&triple::k_triple(&params, &a.intersect(b)));
                        assert_eq!(got, AlgebraElement::term(B2Label::new(*g, *g, a.union(b)), k));
                    }
                }
            }
        }
    }
}

#[test]
fn center_examples() {
    let g = ts(&[], &[], &[0]);
    let h = ts(&[], &[0], &[0]);
    let i = ts(&[0], &[], &[]);
    let cases: [((u64, u64), Vec<TripleSet>); 4] = [
        ((2, 2), vec![o(), g]),
        ((3, 2), vec![o(), g, h]),
        ((2, 3), vec![o(), g, i]),
        ((3, 3), vec![o(), g, h, i]),
    ];
    for ((l, m), want) in cases {
        let params = GdParams::new(&[(l, m)], 0).unwrap();
        let got: BTreeSet<TripleSet> = algebra::center_labels(&params).into_iter().collect();
        assert_eq!(got, want.into_iter().collect(), "{l}x{m}");
        assert_eq!(algebra::center_dim(&params), got.len().into());
        assert_eq!(algebra::center_element(&params, &o()), algebra::identity(&params));
    }
    for p in [0, 2, 3, 5] {
        let params = GdParams::parse("2x3,3x3", p).unwrap();
        let cg = algebra::center_element(&params, &ts(&[], &[], &[1]));
        assert!(triple::enumerate_u(&params, &c(&[0, 2]), &c(&[0, 2])).contains(&ts(&[], &[], &[1])));
        assert_eq!(algebra::multiply(&params, &cg, &cg), cg.scale(&params.field().from_u64(3)));
    }
}

#[test]
fn semisimplicity_examples() {
    for p in [0, 2, 3, 5, 7, 11, 13] {
        let params = GdParams::parse("2x3,3x3", p).unwrap();
        assert_eq!(structure::is_semisimple(&params), p != 2 && p != 3, "p = {p}");
    }
    assert!(!structure::is_semisimple(&GdParams::new(&[(2, 2)], 2).unwrap()));
    assert!(structure::is_semisimple(&GdParams::new(&[(2, 2)], 0).unwrap()));
    // single factor: semisimple iff p ∤ (l-1)(m-1)m, corners per color
    for (l, m) in [(2, 2), (3, 2), (4, 2), (2, 3), (2, 4), (3, 3), (3, 4), (4, 3), (5, 5)] {
        for p in [2, 3, 5, 7] {
            let params = GdParams::new(&[(l, m)], p).unwrap();
            let bad = ((l - 1) * (m - 1) * m) % p == 0;
            assert_eq!(structure::is_semisimple(&params), !bad);
            assert!(structure::corner_is_semisimple(&params, &c(&[0])));
            assert_eq!(structure::corner_is_semisimple(&params, &c(&[1])), (m - 1) % p != 0);
            assert_eq!(structure::corner_is_semisimple(&params, &c(&[2])), ((l - 1) * m) % p != 0);
        }
    }
}

#[test]
fn nilpotency_examples() {
    for (l, m) in [(2, 2), (3, 2), (4, 2), (2, 3), (2, 4), (3, 3), (3, 4), (4, 3)] {
        for p in [2, 3, 5, 7] {
            let params = GdParams::new(&[(l, m)], p).unwrap();
            let want = if ((l - 1) * (m - 1) * m) % p == 0 { 3 } else { 1 };
            assert_eq!(structure::radical_nilpotency_index(&params), want);
        }
    }
    for p in [2, 3, 5, 7] {
        let params = GdParams::parse("2x3,3x3", p).unwrap();
        let want = if p <= 3 { 5 } else { 1 };
        assert_eq!(structure::radical_nilpotency_index(&params), want);
    }
}

fn blocks(spec: &str, p: u64) -> (Vec<(usize, usize)>, usize) {
    let w = structure::wedderburn(&GdParams::parse(spec, p).unwrap());
    (w.blocks, w.n_classes)
}

#[test]
fn wedderburn_single_factor() {
    // l = m = 2
    assert_eq!(blocks("2x2", 2), (vec![(2, 1), (1, 1)], 2));
    for p in [0, 3, 5, 7] {
        assert_eq!(blocks("2x2", p), (vec![(3, 1), (1, 1)], 2));
    }
    // l > m = 2
    for l in [3, 4, 5, 7] {
        let spec = format!("{l}x2");
        assert_eq!(blocks(&spec, 2), (vec![(2, 1), (1, 1)], 2));
        for p in [3u64, 5, 7] {
            let want = if (l - 1) % p == 0 { vec![(2, 1), (1, 2)] } else { vec![(3, 1), (1, 2)] };
            assert_eq!(blocks(&spec, p), (want, 3), "{spec} p={p}");
        }
    }
    // m > l = 2
    for m in [3u64, 4, 5, 6] {
        let spec = format!("2x{m}");
        for p in [2u64, 3, 5, 7] {
            let want = if ((m - 1) * m) % p == 0 { vec![(2, 1), (1, 2)] } else { vec![(3, 1), (1, 2)] };
            assert_eq!(blocks(&spec, p), (want, 3), "{spec} p={p}");
        }
    }
    // min > 2
    for (l, m) in [(3u64, 3u64), (3, 4), (4, 3), (5, 5), (4, 4), (3, 5), (6, 4)] {
        let spec = format!("{l}x{m}");
        for p in [2u64, 3, 5, 7] {
            let want = if m % p == 0 {
                (vec![(2, 1), (1, 2)], 3)
            } else if (l - 1) % p == 0 && (m - 1) % p == 0 {
                (vec![(1, 4)], 4)
            } else if ((l - 1) * (m - 1) * m) % p != 0 {
                (vec![(3, 1), (1, 3)], 4)
            } else {
                (vec![(2, 1), (1, 3)], 4)
            };
            assert_eq!(blocks(&spec, p), want, "{spec} p={p}");
        }
    }
}

#[test]
fn wedderburn_two_factors() {
    assert_eq!(blocks("2x3,3x3", 2), (vec![(2, 4), (1, 8)], 12));
    assert_eq!(blocks("2x3,3x3", 3), (vec![(4, 1), (2, 4), (1, 4)], 9));
    for p in [0, 5, 7, 11] {
        assert_eq!(blocks("2x3,3x3", p), (vec![(9, 1), (3, 5), (1, 6)], 12));
    }
}

#[test]
fn radical_dimension_of_smallest_case() {
    let params = GdParams::new(&[(2, 2)], 2).unwrap();
    assert_eq!(structure::radical_basis(&params).len(), 5);
    assert_eq!(structure::quotient_basis(&params).len(), 5);
}

#[test]
fn corner_orthogonality_and_absorption() {
    for spec in ["2x2", "3x3", "4x2", "2x3,3x3"] {
        for p in [0, 2, 3, 5] {
            let params = GdParams::parse(spec, p).unwrap();
            let f = params.field();
            for g in params.colors() {
                let units: Vec<TripleSet> = triple::enumerate_u(&params, &g, &g)
                    .into_iter()
                    .filter(|a| !f.divides(&triple::k_triple(&params, a)))
                    .collect();
                let ds: Vec<AlgebraElement> = units
                    .iter()
                    .map(|a| structure::d_element(&params, &g, &g, a).unwrap())
                    .collect();
                for (i, a) in ds.iter().enumerate() {
                    assert!(!a.is_zero());
                    for (j, b) in ds.iter().enumerate() {
                        let prod = algebra::multiply(&params, a, b);
                        if i == j {
                            assert_eq!(&prod, a);
                        } else {
                            assert!(prod.is_zero());
                        }
                    }
                    for (hi, h) in units.iter().enumerate() {
                        let bh = AlgebraElement::basis(f, B2Label::new(g, g, *h));
                        let want = if h.precedes(&units[i]) {
                            a.scale(&f.from_biguint(&triple::k_triple(&params, h)))
                        } else {
                            AlgebraElement::zero()
                        };
                        assert_eq!(algebra::multiply(&params, &bh, a), want, "{spec} p={p} {hi}");
                        assert_eq!(algebra::multiply(&params, a, &bh), want);
                    }
                }
            }
        }
    }
}

#[test]
fn transpose_scaling_of_d_elements() {
    for spec in ["3x3", "2x3,3x3"] {
        for p in [0, 2, 3, 5] {
            let params = GdParams::parse(spec, p).unwrap();
            let f = params.field();
            for g in params.colors() {
                for h in params.colors() {
                    let kg = triple::k_square(&params, &g, &h, &g);
                    let kh = triple::k_square(&params, &h, &g, &h);
                    if f.divides(&kg) || f.divides(&kh) {
                        continue;
                    }
                    for t in triple::enumerate_u(&params, &g, &h) {
                        let d = structure::d_element(&params, &g, &h, &t).unwrap();
                        let dt = structure::d_element(&params, &h, &g, &t).unwrap();
                        assert_eq!(
                            algebra::transpose(&d).scale(&f.from_biguint(&kg)),
                            dt.scale(&f.from_biguint(&kh))
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn radical_of_the_center() {
    for spec in ["3x3", "4x2", "2x3,3x3"] {
        for p in [2, 3] {
            let params = GdParams::parse(spec, p).unwrap();
            let f = params.field();
            for (a, ca) in algebra::center_basis(&params) {
                let nil = algebra::multiply(&params, &ca, &ca).is_zero();
                assert_eq!(nil, f.divides(&triple::k_triple(&params, &a)));
                if nil {
                    assert!(structure::in_radical_span(&params, &ca));
                }
            }
        }
    }
}
