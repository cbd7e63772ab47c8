//! Matrix dumps as CSV.
//!
//! ```text
//! # params=2x2,char=2,vertices=4
//! # matrix=A 1
//! 0,1,0,0
//! ...
//! ```
//!
//! Each `# matrix=` line is followed by `vertices` rows, row-major, scalars in
//! decimal (residues in `0..p`, rationals as `a` or `a/b`). Vertices are
//! numbered in mixed radix with the last coordinate fastest and vertex 0 as
//! base point. Colors are written as digit strings.

use std::fmt::Write as _;

use gdterwilliger::algebra;
use gdterwilliger::oracle::{self, ExactMatrix, VertexSpace};
use gdterwilliger::{Color, GdParams};

use crate::error::CliResult;
use crate::json;

fn digits(c: &Color) -> String {
    c.entries().iter().map(|d| char::from(b'0' + d)).collect()
}

fn subset(s: gdterwilliger::Subset) -> String {
    let parts: Vec<String> = s.iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", parts.join(" "))
}

fn write_matrix(out: &mut String, name: &str, m: &ExactMatrix) {
    let _ = writeln!(out, "# matrix={name}");
    let n = m.size();
    for i in 0..n {
        let row: Vec<String> = (0..n).map(|j| json::scalar(&m.get(i, j))).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
}

/// Adjacency matrices `A g`, dual idempotents `E g`, and with `basis` the
/// realization of every `B2` basis element.
pub fn dump(params: &GdParams, max_vertices: usize, basis: bool) -> CliResult<String> {
    let space = VertexSpace::new(params, max_vertices)?;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# params={},char={},vertices={}",
        params,
        params.characteristic(),
        space.len()
    );
    for g in space.colors() {
        write_matrix(&mut out, &format!("A {}", digits(g)), &oracle::adjacency_matrix(&space, g));
    }
    for g in space.colors() {
        write_matrix(&mut out, &format!("E {}", digits(g)), &oracle::dual_idempotent(&space, g));
    }
    if basis {
        let mut labels = algebra::b2_labels(params);
        labels.sort();
        for l in &labels {
            let name = format!(
                "B {} {} {} {} {}",
                digits(&l.g),
                digits(&l.h),
                subset(l.t.s1),
                subset(l.t.s2),
                subset(l.t.s3)
            );
            write_matrix(&mut out, &name, &oracle::realize_b2(&space, l));
        }
    }
    Ok(out)
}
