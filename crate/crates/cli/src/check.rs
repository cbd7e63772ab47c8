//! The `verify` subcommand: closed forms against the matrix oracle.

use gdterwilliger::algebra::{self, B2Label};
use gdterwilliger::oracle::verify::{self, CheckReport};
use gdterwilliger::oracle::VertexSpace;
use gdterwilliger::GdParams;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::CliResult;

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub max_vertices: usize,
    pub seed: u64,
    /// Product pairs to check; every pair is used when there are no more
    /// than this many.
    pub pairs: usize,
    /// Vertex count above which triple regularity is skipped.
    pub count_limit: usize,
}

impl Default for VerifyOptions {
    fn default() -> VerifyOptions {
        VerifyOptions {
            max_vertices: gdterwilliger::oracle::DEFAULT_VERTEX_CAP,
            seed: 0,
            pairs: 10_000,
            count_limit: 64,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckJson {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub params: String,
    pub char: u64,
    pub vertices: usize,
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<CheckJson>,
}

impl VerifyReport {
    pub fn failures(&self) -> Vec<&CheckJson> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "verify {} char {} ({} vertices, seed {})\n",
            self.params, self.char, self.vertices, self.seed
        );
        for c in &self.checks {
            let tag = if c.passed { "ok  " } else { "FAIL" };
            s.push_str(&format!("  {tag} {:<24} {}\n", c.name, c.detail));
        }
        s.push_str(if self.passed { "all checks passed\n" } else { "some checks failed\n" });
        s
    }
}

/// `count` pairs drawn with `rng`. Three quarters have `a.h == b.g`, so
/// most products are nonzero; the rest are unconstrained.
pub fn sample_pairs<R: Rng>(labels: &[B2Label], count: usize, rng: &mut R) -> Vec<(B2Label, B2Label)> {
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let a = *labels.choose(rng).expect("nonempty basis");
        let b = if i % 4 == 3 {
            *labels.choose(rng).expect("nonempty basis")
        } else {
            let start = labels.partition_point(|l| l.g < a.h);
            let end = labels.partition_point(|l| l.g <= a.h);
            labels[rng.gen_range(start..end)]
        };
        out.push((a, b));
    }
    out
}

/// All pairs when they fit in `limit`, otherwise a seeded sample.
pub fn product_pairs(params: &GdParams, limit: usize, seed: u64) -> Vec<(B2Label, B2Label)> {
    let mut labels = algebra::b2_labels(params);
    labels.sort();
    let total = labels.len() * labels.len();
    if total <= limit {
        labels
            .iter()
            .flat_map(|a| labels.iter().map(move |b| (*a, *b)))
            .collect()
    } else {
        sample_pairs(&labels, limit, &mut ChaCha8Rng::seed_from_u64(seed))
    }
}

fn to_json(c: CheckReport) -> CheckJson {
    CheckJson {
        name: c.name,
        passed: c.passed,
        detail: c.detail,
    }
}

pub fn run(params: &GdParams, opts: &VerifyOptions) -> CliResult<VerifyReport> {
    let space = VertexSpace::new(params, opts.max_vertices)?;
    let pairs = product_pairs(params, opts.pairs, opts.seed);
    let checks: Vec<CheckJson> = verify::verify_all(&space, &pairs, opts.count_limit)
        .into_iter()
        .map(to_json)
        .collect();
    Ok(VerifyReport {
        params: params.to_string(),
        char: params.characteristic(),
        vertices: space.len(),
        seed: opts.seed,
        passed: checks.iter().all(|c| c.passed),
        checks,
    })
}
