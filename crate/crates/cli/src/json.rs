//! JSON shapes for labels and scalars. Coordinate indices are 1-based;
//! scalars are strings so residues and fractions survive unchanged.

use gdterwilliger::{AlgebraElement, B2Label, Color, DLabel, Scalar, Subset, TripleSet};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleJson {
    pub s1: Vec<usize>,
    pub s2: Vec<usize>,
    pub s3: Vec<usize>,
}

fn one_based(s: Subset) -> Vec<usize> {
    s.iter().map(|i| i + 1).collect()
}

impl From<&TripleSet> for TripleJson {
    fn from(t: &TripleSet) -> TripleJson {
        TripleJson {
            s1: one_based(t.s1),
            s2: one_based(t.s2),
            s3: one_based(t.s3),
        }
    }
}

/// Color entries (values in 0..=2, not indices).
pub fn color(c: &Color) -> Vec<u8> {
    c.entries()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelJson {
    pub g: Vec<u8>,
    pub h: Vec<u8>,
    pub t: TripleJson,
}

impl From<&B2Label> for LabelJson {
    fn from(l: &B2Label) -> LabelJson {
        LabelJson {
            g: color(&l.g),
            h: color(&l.h),
            t: (&l.t).into(),
        }
    }
}

impl From<&DLabel> for LabelJson {
    fn from(d: &DLabel) -> LabelJson {
        (&d.as_b2()).into()
    }
}

/// Decimal form: residues as their representative in `0..p`, rationals as
/// `a` or `a/b`.
pub fn scalar(s: &Scalar) -> String {
    match s {
        Scalar::Rational(r) => r.to_string(),
        Scalar::Residue { value, .. } => value.to_string(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub label: LabelJson,
    pub coefficient: String,
}

pub fn element(x: &AlgebraElement) -> Vec<TermJson> {
    x.terms()
        .map(|(l, c)| TermJson {
            label: l.into(),
            coefficient: scalar(c),
        })
        .collect()
}
