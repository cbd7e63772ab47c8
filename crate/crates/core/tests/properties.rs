use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use proptest::prelude::*;

use gdterwilliger::algebra::{self, AlgebraElement};
use gdterwilliger::structure::{self, DLabel};
use gdterwilliger::triple;
use gdterwilliger::{B2Label, Color, Error, GdParams, Subset, TripleSet};

const SMALL: &[&str] = &["2x2", "3x2", "2x3", "3x3", "4x3", "2x2,2x2", "2x3,3x2", "2x3,3x3", "3x4,4x3"];
const CHARS: &[u64] = &[0, 2, 3, 5];

fn c(e: &[u8]) -> Color {
    Color::new(e).unwrap()
}

fn s(ix: &[usize]) -> Subset {
    Subset::from_indices(ix.iter().copied())
}

fn ts(a: &[usize], b: &[usize], d: &[usize]) -> TripleSet {
    TripleSet::new(s(a), s(b), s(d))
}

fn each_params(mut f: impl FnMut(&GdParams)) {
    for spec in SMALL {
        for &p in CHARS {
            f(&GdParams::parse(spec, p).unwrap());
        }
    }
}

#[test]
fn spec_examples() {
    let p = GdParams::parse("2x3,3x3", 0).unwrap();
    assert_eq!(p.intersection_number(&c(&[1, 2]), &c(&[0, 2]), &c(&[1, 2])).unwrap(), 3u32.into());
    let q = GdParams::parse("2x3", 0).unwrap();
    assert_eq!(q.valency(&c(&[1])), 2u32.into());
    assert_eq!(q.valency(&c(&[2])), 3u32.into());
    assert_eq!(triple::k_weight(&q, s(&[0]), s(&[]), s(&[])), 2u32.into());
}

#[test]
fn support_matches_intersection_numbers() {
    for spec in SMALL {
        let p = GdParams::parse(spec, 0).unwrap();
        let colors = p.colors();
        for g in &colors {
            for h in &colors {
                for i in &colors {
                    let n = p.intersection_number(g, h, i).unwrap();
                    assert_eq!(p.support_nonzero(g, h, i), n > BigUint::from(0u32), "{spec} {g:?} {h:?} {i:?}");
                }
            }
        }
    }
}

#[test]
fn valencies_and_row_sums() {
    for spec in SMALL {
        let p = GdParams::parse(spec, 0).unwrap();
        let colors = p.colors();
        let total: BigUint = colors.iter().map(|g| p.valency(g)).sum();
        assert_eq!(total, p.vertex_count());
        for i in &colors {
            for k in &colors {
                let row: BigUint = colors.iter().map(|j| p.intersection_number(i, j, k).unwrap()).sum();
                assert_eq!(row, p.valency(i));
            }
        }
    }
}

#[test]
fn u_and_p_sizes() {
    for spec in SMALL {
        let p = GdParams::parse(spec, 0).unwrap();
        for g in p.colors() {
            for h in p.colors() {
                let i = p.circ(g.ones() & h.ones()).len();
                let j = p.bullet(g.twos() & h.twos()).len();
                let k = (g.twos() & h.twos()).len();
                let want = BigUint::from(2u32).pow((i + k - j) as u32) * BigUint::from(3u32).pow(j as u32);
                let u = triple::enumerate_u(&p, &g, &h);
                assert_eq!(BigUint::from(u.len()), want);
                assert_eq!(BigUint::from(p.enumerate_p(&g, &h).len()), want);
                assert_eq!(triple::count_u(&p, &g, &h), want);
                // minimal members biject U_{g,h} onto P_{g,h}; members form down-sets
                let all: BTreeSet<Color> = p.enumerate_p(&g, &h).into_iter().collect();
                let mins: BTreeSet<Color> = u.iter().map(|t| triple::minimal_member(&p, &g, &h, t)).collect();
                assert_eq!(mins, all);
                for t in &u {
                    let min = triple::minimal_member(&p, &g, &h, t);
                    assert_eq!(triple::label_of_member(&p, &g, &h, &min), *t);
                    let members: BTreeSet<Color> = triple::members_u(&p, &g, &h, t).unwrap().into_iter().collect();
                    let below: BTreeSet<Color> = all
                        .iter()
                        .filter(|a| triple::label_of_member(&p, &g, &h, a).precedes(t))
                        .copied()
                        .collect();
                    assert_eq!(members, below);
                }
            }
        }
    }
}

#[test]
fn k_weight_identities() {
    for spec in SMALL {
        let p = GdParams::parse(spec, 0).unwrap();
        let all = p.all();
        for u in all.subsets() {
            assert_eq!(triple::k_weight(&p, u, Subset::EMPTY, Subset::EMPTY), triple::k_weight(&p, p.circ(u), Subset::EMPTY, Subset::EMPTY));
            for w in all.subsets() {
                for v in w.subsets() {
                    let k = triple::k_weight(&p, u, v, w);
                    assert_eq!(k, triple::k_weight(&p, p.circ(u), v, w));
                    assert_eq!(k, triple::k_weight(&p, u, p.bullet(v), w));
                }
            }
        }
        for g in p.colors() {
            for h in p.colors() {
                for j in triple::enumerate_u(&p, &g, &h) {
                    for i in p.colors() {
                        let split = triple::k_triple(&p, &j.minus_color(&i)) * triple::k_triple(&p, &j.cap_color(&i));
                        assert_eq!(split, triple::k_triple(&p, &j));
                    }
                }
            }
        }
    }
}

#[test]
fn notation_instances() {
    let p = GdParams::parse("2x3,3x3", 2).unwrap();
    let (g, h) = (c(&[0, 2]), c(&[1, 2]));
    let i = ts(&[], &[], &[1]);
    assert_eq!(triple::compose(&p, &g, &h, &g, &i, &i).unwrap(), i);
    let hh = ts(&[], &[1], &[1]);
    assert_eq!(triple::compose(&p, &g, &h, &g, &i, &hh).unwrap(), hh);
    assert_eq!(triple::k_round(&p, &g, &g, &h), 1u32.into());
    assert_eq!(triple::k_square(&p, &g, &g, &h), 1u32.into());
    assert_eq!(triple::ceiling(&p, &g, &h, &i), ts(&[], &[1], &[1]));
    assert_eq!(triple::layer_depth(&p, &g, &h, &i), 1);
    assert_eq!(triple::layer(&p, &g, &h, &i, 0).unwrap(), vec![i]);
    assert!(triple::layer(&p, &g, &h, &i, 1).unwrap().is_empty());
    assert!(matches!(triple::layer(&p, &g, &h, &i, 2), Err(Error::LayerOutOfRange { j: 2, max: 1 })));
}

#[test]
fn compose_rules() {
    each_params(|p| {
        let colors = p.colors();
        for g in &colors {
            let u = triple::enumerate_u(p, g, g);
            for a in &u {
                for b in &u {
                    assert_eq!(triple::compose(p, g, g, g, a, b).unwrap(), a.union(b));
                }
            }
            for h in &colors {
                let uj = triple::enumerate_u(p, g, h);
                let images: BTreeSet<TripleSet> = uj
                    .iter()
                    .map(|j| triple::compose(p, g, h, g, j, &TripleSet::EMPTY).unwrap())
                    .collect();
                assert_eq!(images.len(), uj.len());
                for i in &colors {
                    for j in &uj {
                        for k in triple::enumerate_u(p, h, i) {
                            let l = triple::compose(p, g, h, i, j, &k).unwrap();
                            assert!(triple::is_anchored(p, g, i, &l));
                        }
                    }
                }
            }
        }
    });
    let p = GdParams::parse("2x3,3x3", 0).unwrap();
    let (g, h) = (c(&[0, 2]), c(&[1, 2]));
    let bad = ts(&[0], &[], &[]);
    assert!(triple::compose(&p, &g, &h, &g, &bad, &TripleSet::EMPTY).is_err());
}

#[test]
fn layers_and_bad_indices() {
    for spec in SMALL {
        for p in [2u64, 3, 5] {
            let params = GdParams::parse(spec, p).unwrap();
            let f = params.field();
            for g in params.colors() {
                for h in params.colors() {
                    for t in triple::enumerate_u(&params, &g, &h) {
                        let divides = f.divides(&triple::k_triple(&params, &t));
                        assert_eq!(!triple::bad_indices(&params, &t).is_empty(), divides);
                        assert_eq!(triple::v_set(&params, &g, &h, &t), triple::v_set(&params, &h, &g, &t));
                        let depth = triple::layer_depth(&params, &g, &h, &t);
                        let mut seen = BTreeSet::new();
                        for j in 0..=depth {
                            for a in triple::layer(&params, &g, &h, &t, j).unwrap() {
                                assert!(seen.insert(a), "layers overlap");
                                assert!(t.precedes(&a));
                            }
                        }
                        if !divides {
                            assert_eq!(triple::layer(&params, &g, &h, &t, 0).unwrap(), vec![t]);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn radical_label_criterion() {
    each_params(|p| {
        let f = p.field();
        for l in algebra::b2_labels(p) {
            let k = triple::k_square(p, &l.g, &l.h, &l.g) * triple::k_square(p, &l.h, &l.g, &l.h) * triple::k_triple(p, &l.t);
            assert_eq!(structure::is_radical_label(p, &l), f.divides(&k), "{l:?}");
        }
        let w = structure::wedderburn(p);
        assert_eq!(w.radical_dim + w.quotient_dim, algebra::b2_labels(p).len());
        let squares: usize = w.block_sizes().iter().map(|s| s * s).sum();
        assert_eq!(squares, w.quotient_dim);
    });
}

#[test]
fn corner_examples() {
    let q2 = GdParams::parse("2x3", 2).unwrap();
    assert_eq!(structure::corner_quotient_dim(&q2, &c(&[2])), 2u32.into());
    assert_eq!(structure::corner_radical_basis(&q2, &c(&[1])).len(), 1);
    let q3 = GdParams::parse("2x3", 3).unwrap();
    assert_eq!(structure::corner_nilpotency_index(&q3, &c(&[2])), 2);
    assert!(structure::corner_radical_basis(&GdParams::parse("3x3", 0).unwrap(), &c(&[2])).is_empty());
    // direct count against both closed forms
    each_params(|p| {
        let f = p.field();
        for g in p.colors() {
            let units = triple::enumerate_u(p, &g, &g)
                .into_iter()
                .filter(|a| !f.divides(&triple::k_triple(p, a)))
                .count();
            assert_eq!(structure::corner_quotient_dim(p, &g), units.into());
            let quot = triple::enumerate_u(p, &g, &g).len() - structure::corner_radical_basis(p, &g).len();
            assert_eq!(quot, units);
        }
    });
    // the exponent form undercounts exactly when p | l-1, p ∤ m on g_2•
    let p = GdParams::parse("4x2", 3).unwrap();
    assert_eq!(structure::corner_quotient_dim(&p, &c(&[2])), 2u32.into());
    assert_eq!(structure::corner_quotient_dim_by_exponents(&p, &c(&[2])), 1u32.into());
}

#[test]
fn round_trip_between_bases() {
    each_params(|p| {
        for b in algebra::b1_labels(p) {
            let x = algebra::b1_expand_in_b2(p, &b).unwrap();
            let mut back: BTreeMap<_, _> = BTreeMap::new();
            for (l, c) in x.terms() {
                for (b1, v) in algebra::b2_expand_in_b1(p, l).unwrap() {
                    let e = back.entry(b1).or_insert_with(|| p.field().zero());
                    *e += &(&v * c);
                }
            }
            back.retain(|_, v: &mut gdterwilliger::Scalar| !v.is_zero());
            assert_eq!(back.len(), 1);
            assert!(back[&b].is_one());
            if p.n() == 1 {
                for (_, c) in x.terms() {
                    let one = p.field().one();
                    assert!(c.is_one() || (c + &one).is_zero(), "{c}");
                }
            }
        }
    });
}

#[test]
fn quotient_matrix_unit_law() {
    each_params(|p| {
        let w = structure::wedderburn(p);
        let class_of: BTreeMap<DLabel, usize> = w
            .classes
            .iter()
            .enumerate()
            .flat_map(|(i, c)| c.members.iter().map(move |d| (*d, i)))
            .collect();
        for (ci, cls) in w.classes.iter().enumerate() {
            for h in &cls.colors {
                for i in &cls.colors {
                    let d = cls.unit(h, i).expect("unit for every pair");
                    assert_eq!(class_of[&d], ci);
                }
            }
        }
        let basis = structure::quotient_basis(p);
        for a in &basis {
            for b in &basis {
                let got = structure::quotient_multiply(p, a, b);
                let same = class_of[a] == class_of[b] && a.h == b.g;
                match got {
                    Some(d) => {
                        assert!(same);
                        let cls = &w.classes[class_of[a]];
                        assert_eq!(Some(d), cls.unit(&a.g, &b.h));
                    }
                    None => assert!(!same),
                }
            }
        }
    });
}

#[test]
fn errors() {
    assert!(matches!(GdParams::parse("2x", 0), Err(Error::MalformedParams(_))));
    assert!(matches!(GdParams::parse("1x3", 0), Err(Error::FactorTooSmall { .. })));
    assert!(matches!(GdParams::parse("2x3", 4), Err(Error::NotPrime(4))));
    assert!(Color::new(&[3]).is_err());
    let p = GdParams::parse("2x2", 2).unwrap();
    let k = c(&[2]);
    let z = c(&[0]);
    // k_[g,h,g] = 2 here
    assert!(matches!(structure::d_element(&p, &z, &k, &TripleSet::EMPTY), Err(Error::NotInvertible)));
}

fn arb_case() -> impl Strategy<Value = (GdParams, Vec<B2Label>)> {
    (0..SMALL.len(), 0..CHARS.len()).prop_map(|(i, j)| {
        let p = GdParams::parse(SMALL[i], CHARS[j]).unwrap();
        let labels = algebra::b2_labels(&p);
        (p, labels)
    })
}

fn element(p: &GdParams, labels: &[B2Label], picks: &[(usize, i64)]) -> AlgebraElement {
    let mut x = AlgebraElement::zero();
    for &(i, c) in picks {
        x.add_term(labels[i % labels.len()], p.field().from_i64(c));
    }
    x
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn associativity((p, labels) in arb_case(), a in any::<usize>(), b in any::<usize>(), d in any::<usize>()) {
        let n = labels.len();
        let (x, y, z) = (labels[a % n], labels[b % n], labels[d % n]);
        let f = p.field();
        let (x, y, z) = (AlgebraElement::basis(f, x), AlgebraElement::basis(f, y), AlgebraElement::basis(f, z));
        let left = algebra::multiply(&p, &algebra::multiply(&p, &x, &y), &z);
        let right = algebra::multiply(&p, &x, &algebra::multiply(&p, &y, &z));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn transpose_reverses_products(
        (p, labels) in arb_case(),
        xs in prop::collection::vec((any::<usize>(), -3i64..4), 1..4),
        ys in prop::collection::vec((any::<usize>(), -3i64..4), 1..4),
    ) {
        let x = element(&p, &labels, &xs);
        let y = element(&p, &labels, &ys);
        let lhs = algebra::transpose(&algebra::multiply(&p, &x, &y));
        let rhs = algebra::multiply(&p, &algebra::transpose(&y), &algebra::transpose(&x));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn identity_is_neutral((p, labels) in arb_case(), xs in prop::collection::vec((any::<usize>(), -3i64..4), 1..5)) {
        let x = element(&p, &labels, &xs);
        let one = algebra::identity(&p);
        prop_assert_eq!(algebra::multiply(&p, &one, &x), x.clone());
        prop_assert_eq!(algebra::multiply(&p, &x, &one), x);
    }

    #[test]
    fn center_is_central((p, _labels) in arb_case(), pick in any::<usize>()) {
        let basis = algebra::center_basis(&p);
        let (_, c) = &basis[pick % basis.len()];
        prop_assert!(algebra::is_central(&p, c));
    }
}
