//! Parameters, colors and intersection numbers of a direct product of
//! group divisible schemes `GD(l_1, m_1) x ... x GD(l_n, m_n)`.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::subset::{Subset, MAX_FACTORS};

/// `(l, m)`: `l` groups of size `m`.
pub type Factor = (u64, u64);

/// The scheme parameters together with the characteristic of the field.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GdParams {
    factors: Vec<Factor>,
    field: Field,
    bullet: Subset,
    circ: Subset,
}

/// `(n1, n2, n3, n4)`: factors with `l=m=2`, `l>m=2`, `m>l=2`, `min(l,m)>2`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct ShapeCounts {
    pub n1: usize,
    pub n2: usize,
    pub n3: usize,
    pub n4: usize,
}

impl GdParams {
    pub fn new(factors: &[Factor], characteristic: u64) -> Result<GdParams> {
        if factors.is_empty() {
            return Err(Error::MalformedParams("no factors".into()));
        }
        if factors.len() > MAX_FACTORS {
            return Err(Error::TooManyFactors {
                max: MAX_FACTORS,
                got: factors.len(),
            });
        }
        for &(ell, m) in factors {
            if ell < 2 || m < 2 {
                return Err(Error::FactorTooSmall { ell, m });
            }
        }
        let field = Field::new(characteristic)?;
        let bullet = Subset::from_indices((0..factors.len()).filter(|&i| factors[i].0 > 2));
        let circ = Subset::from_indices((0..factors.len()).filter(|&i| factors[i].1 > 2));
        Ok(GdParams {
            factors: factors.to_vec(),
            field,
            bullet,
            circ,
        })
    }

    /// Parses `"2x2,3x3"` and attaches the characteristic.
    pub fn parse(spec: &str, characteristic: u64) -> Result<GdParams> {
        GdParams::new(&parse_factors(spec)?, characteristic)
    }

    /// Same factors over another field.
    pub fn with_characteristic(&self, characteristic: u64) -> Result<GdParams> {
        let mut out = self.clone();
        out.field = Field::new(characteristic)?;
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn ell(&self, i: usize) -> u64 {
        self.factors[i].0
    }

    pub fn m(&self, i: usize) -> u64 {
        self.factors[i].1
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn characteristic(&self) -> u64 {
        self.field.characteristic()
    }

    pub fn all(&self) -> Subset {
        Subset::full(self.n())
    }

    /// `V•`: the coordinates of `v` with `l > 2`.
    pub fn bullet(&self, v: Subset) -> Subset {
        v & self.bullet
    }

    /// `V∘`: the coordinates of `v` with `m > 2`.
    pub fn circ(&self, v: Subset) -> Subset {
        v & self.circ
    }

    pub fn shape_counts(&self) -> ShapeCounts {
        let mut c = ShapeCounts::default();
        for &(ell, m) in &self.factors {
            match (ell == 2, m == 2) {
                (true, true) => c.n1 += 1,
                (false, true) => c.n2 += 1,
                (true, false) => c.n3 += 1,
                (false, false) => c.n4 += 1,
            }
        }
        c
    }

    /// `|X| = prod l_i m_i`.
    pub fn vertex_count(&self) -> BigUint {
        self.factors
            .iter()
            .fold(BigUint::one(), |acc, &(l, m)| acc * BigUint::from(l) * BigUint::from(m))
    }

    /// All `3^n` colors in lexicographic order.
    pub fn colors(&self) -> Vec<Color> {
        let n = self.n();
        let mut out = Vec::new();
        let mut entries = alloc::vec![0u8; n];
        loop {
            out.push(Color::from_entries_unchecked(&entries));
            let mut i = n;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if entries[i] < 2 {
                    entries[i] += 1;
                    break;
                }
                entries[i] = 0;
            }
        }
    }

    fn check(&self, c: &Color) -> Result<()> {
        if c.len() != self.n() {
            Err(Error::LengthMismatch {
                expected: self.n(),
                got: c.len(),
            })
        } else {
            Ok(())
        }
    }

    /// `p_{i,j}^k` of the product scheme.
    pub fn intersection_number(&self, i: &Color, j: &Color, k: &Color) -> Result<BigUint> {
        self.check(i)?;
        self.check(j)?;
        self.check(k)?;
        let mut acc = BigUint::one();
        for a in 0..self.n() {
            let (ell, m) = self.factors[a];
            let v = gd_intersection_number(ell, m, i.entry(a), j.entry(a), k.entry(a))?;
            if v == 0 {
                return Ok(BigUint::zero());
            }
            acc *= BigUint::from(v);
        }
        Ok(acc)
    }

    /// `k_g = prod_{g_1}(m-1) prod_{g_2}(l-1)m`.
    pub fn valency(&self, g: &Color) -> BigUint {
        let mut acc = BigUint::one();
        for a in g.ones().iter() {
            acc *= BigUint::from(self.m(a) - 1);
        }
        for a in g.twos().iter() {
            acc *= BigUint::from(self.ell(a) - 1) * BigUint::from(self.m(a));
        }
        acc
    }

    /// Whether the characteristic divides no `(l_i - 1)(m_i - 1)m_i`.
    pub fn is_p_prime_valenced(&self) -> bool {
        self.factors.iter().all(|&(ell, m)| {
            !self.field.divides_u128((ell as u128 - 1) * (m as u128 - 1) * m as u128)
        })
    }

    /// The chains (5) and (6): decides `p_{g,h}^i != 0` from index sets.
    pub fn support_nonzero(&self, g: &Color, h: &Color, i: &Color) -> bool {
        let (g0, g1, g2) = (g.zeros(), g.ones(), g.twos());
        let (h0, h1, h2) = (h.zeros(), h.ones(), h.twos());
        let lower1 = (g0 & h1) | (g1 & h0);
        let upper1 = lower1 | self.circ(g1 & h1) | (g2 & h2);
        let lower2 = g2 ^ h2;
        let upper2 = lower2 | self.bullet(g2 & h2);
        let i1 = i.ones();
        let i2 = i.twos();
        lower1.is_subset(i1) && i1.is_subset(upper1) && lower2.is_subset(i2) && i2.is_subset(upper2)
    }

    /// `P_{g,h} = {a : p_{g,h}^a != 0}` in color order.
    pub fn enumerate_p(&self, g: &Color, h: &Color) -> Vec<Color> {
        // i_1 and i_2 range over intervals; enumerate them directly.
        let (g0, g1, g2) = (g.zeros(), g.ones(), g.twos());
        let (h0, h1, h2) = (h.zeros(), h.ones(), h.twos());
        let lower1 = (g0 & h1) | (g1 & h0);
        let free1 = self.circ(g1 & h1) | (g2 & h2);
        let lower2 = g2 ^ h2;
        let free2 = self.bullet(g2 & h2);
        let mut out = Vec::new();
        for e1 in free1.subsets() {
            for e2 in free2.subsets() {
                let ones = lower1 | e1;
                let twos = lower2 | e2;
                if ones.is_disjoint(twos) {
                    out.push(Color::from_sets_unchecked(self.n(), ones, twos));
                }
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for GdParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (l, m)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}x{m}")?;
        }
        Ok(())
    }
}

/// Parses the `2x2,3x3` literal into factors.
pub fn parse_factors(spec: &str) -> Result<Vec<Factor>> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Err(Error::MalformedParams("empty".into()));
    }
    spec.split(',')
        .map(|part| {
            let part = part.trim();
            let (l, m) = part
                .split_once(['x', 'X'])
                .ok_or_else(|| Error::MalformedParams(part.to_string()))?;
            let l = u64::from_str(l.trim()).map_err(|_| Error::MalformedParams(part.to_string()))?;
            let m = u64::from_str(m.trim()).map_err(|_| Error::MalformedParams(part.to_string()))?;
            Ok((l, m))
        })
        .collect()
}

/// Intersection numbers `p_{i,j}^k` of a single factor `GD(l, m)`.
pub fn gd_intersection_number(ell: u64, m: u64, i: u8, j: u8, k: u8) -> Result<u128> {
    if ell < 2 || m < 2 {
        return Err(Error::FactorTooSmall { ell, m });
    }
    for e in [i, j, k] {
        if e > 2 {
            return Err(Error::BadColorEntry(e));
        }
    }
    let (l, m) = (ell as u128, m as u128);
    Ok(match (i, j, k) {
        (0, 0, 0) | (0, 1, 1) | (0, 2, 2) | (1, 0, 1) | (2, 0, 2) => 1,
        (1, 1, 0) | (1, 2, 2) | (2, 1, 2) => m - 1,
        (1, 1, 1) => m - 2,
        (2, 2, 0) | (2, 2, 1) => (l - 1) * m,
        (2, 2, 2) => (l - 2) * m,
        _ => 0,
    })
}

/// A relation of the product scheme: an `n`-tuple over `{0,1,2}`, stored by
/// its index profile `(g_1, g_2)`; `g_0` is the complement.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Color {
    len: u8,
    ones: Subset,
    twos: Subset,
}

impl Color {
    pub fn new(entries: &[u8]) -> Result<Color> {
        if entries.len() > MAX_FACTORS {
            return Err(Error::TooManyFactors {
                max: MAX_FACTORS,
                got: entries.len(),
            });
        }
        if let Some(&e) = entries.iter().find(|&&e| e > 2) {
            return Err(Error::BadColorEntry(e));
        }
        Ok(Color::from_entries_unchecked(entries))
    }

    fn from_entries_unchecked(entries: &[u8]) -> Color {
        let mut ones = Subset::EMPTY;
        let mut twos = Subset::EMPTY;
        for (i, &e) in entries.iter().enumerate() {
            match e {
                1 => ones |= Subset::singleton(i),
                2 => twos |= Subset::singleton(i),
                _ => {}
            }
        }
        Color {
            len: entries.len() as u8,
            ones,
            twos,
        }
    }

    /// Builds a color from disjoint `g_1` and `g_2`.
    pub fn from_sets(n: usize, ones: Subset, twos: Subset) -> Result<Color> {
        if n > MAX_FACTORS {
            return Err(Error::TooManyFactors {
                max: MAX_FACTORS,
                got: n,
            });
        }
        let all = Subset::full(n);
        if !ones.is_disjoint(twos) || !(ones | twos).is_subset(all) {
            return Err(Error::MalformedParams("color index sets overlap".into()));
        }
        Ok(Color::from_sets_unchecked(n, ones, twos))
    }

    pub(crate) fn from_sets_unchecked(n: usize, ones: Subset, twos: Subset) -> Color {
        Color {
            len: n as u8,
            ones,
            twos,
        }
    }

    /// The all-zero color `0_S`.
    pub fn zero(n: usize) -> Color {
        Color::from_sets_unchecked(n, Subset::EMPTY, Subset::EMPTY)
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn entry(&self, i: usize) -> u8 {
        if self.ones.contains(i) {
            1
        } else if self.twos.contains(i) {
            2
        } else {
            0
        }
    }

    pub fn entries(&self) -> Vec<u8> {
        (0..self.len()).map(|i| self.entry(i)).collect()
    }

    pub fn zeros(&self) -> Subset {
        Subset::full(self.len()) - self.ones - self.twos
    }

    pub fn ones(&self) -> Subset {
        self.ones
    }

    pub fn twos(&self) -> Subset {
        self.twos
    }

    pub fn is_zero(&self) -> bool {
        self.ones.is_empty() && self.twos.is_empty()
    }
}

impl Ord for Color {
    fn cmp(&self, other: &Color) -> Ordering {
        self.len.cmp(&other.len).then_with(|| {
            let diff = (self.ones ^ other.ones) | (self.twos ^ other.twos);
            match diff.iter().next() {
                None => Ordering::Equal,
                Some(i) => self.entry(i).cmp(&other.entry(i)),
            }
        })
    }
}

impl PartialOrd for Color {
    fn partial_cmp(&self, other: &Color) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for i in 0..self.len() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", self.entry(i))?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
