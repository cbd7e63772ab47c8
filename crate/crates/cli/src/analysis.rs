//! `AnalysisReport`: every closed-form structural quantity for one
//! `(params, char)` cell, plus its JSON, CSV and text renderings.

use std::fmt::Write as _;
use std::time::Instant;

use gdterwilliger::{algebra, structure, triple, GdParams};
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};
use crate::json::{self, LabelJson};

/// Largest dim_T analyzed unless overridden.
pub const DEFAULT_MAX_DIM: u64 = 50_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CornerRow {
    pub color: Vec<u8>,
    pub dim: u64,
    pub radical_dim: u64,
    pub quotient_dim: u64,
    pub nilpotency_index: usize,
    pub semisimple: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockJson {
    pub size: usize,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassJson {
    pub block_size: usize,
    pub representative: LabelJson,
    pub colors: Vec<Vec<u8>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WedderburnJson {
    pub blocks: Vec<BlockJson>,
    pub block_sizes: Vec<usize>,
    pub n_classes: usize,
    pub quotient_dim: usize,
    pub radical_dim: usize,
    pub nilpotency_index: usize,
    pub central_unit_count: usize,
    pub classes: Vec<ClassJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub total_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub params: String,
    pub factors: Vec<[u64; 2]>,
    pub char: u64,
    /// `|X|` in decimal; it can exceed 64 bits.
    pub vertices: String,
    pub dim_t: u64,
    pub center_dim: u64,
    pub is_semisimple: bool,
    pub radical_dim: u64,
    pub nilpotency_index: usize,
    pub corners: Vec<CornerRow>,
    pub wedderburn: WedderburnJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

fn small(v: impl ToPrimitive) -> u64 {
    v.to_u64().expect("guarded by max_dim")
}

/// Computes the report. Fails with a resource error when dim_T exceeds
/// `max_dim`.
pub fn analyze(params: &GdParams, max_dim: u64, timing: bool) -> CliResult<AnalysisReport> {
    let start = Instant::now();
    let dim = algebra::dim_t(params);
    if dim > max_dim.into() {
        return Err(CliError::Resource(format!(
            "dim_T = {dim} exceeds the analysis cap {max_dim} (raise --max-dim)"
        )));
    }
    let dim_t = small(dim);

    let corners = params
        .colors()
        .iter()
        .map(|g| {
            let radical = structure::corner_radical_basis(params, g).len() as u64;
            CornerRow {
                color: json::color(g),
                dim: small(triple::count_u(params, g, g)),
                radical_dim: radical,
                quotient_dim: small(structure::corner_quotient_dim(params, g)),
                nilpotency_index: structure::corner_nilpotency_index(params, g),
                semisimple: radical == 0,
            }
        })
        .collect();

    let w = structure::wedderburn(params);
    let wedderburn = WedderburnJson {
        blocks: w
            .blocks
            .iter()
            .map(|&(size, multiplicity)| BlockJson { size, multiplicity })
            .collect(),
        block_sizes: w.block_sizes(),
        n_classes: w.n_classes,
        quotient_dim: w.quotient_dim,
        radical_dim: w.radical_dim,
        nilpotency_index: w.nilpotency_index,
        central_unit_count: structure::central_unit_count(params),
        classes: w
            .classes
            .iter()
            .map(|c| ClassJson {
                block_size: c.block_size,
                representative: (&c.representative).into(),
                colors: c.colors.iter().map(json::color).collect(),
            })
            .collect(),
    };

    let report = AnalysisReport {
        params: params.to_string(),
        factors: params.factors().iter().map(|&(l, m)| [l, m]).collect(),
        char: params.characteristic(),
        vertices: params.vertex_count().to_string(),
        dim_t,
        center_dim: small(algebra::center_dim(params)),
        is_semisimple: structure::is_semisimple(params),
        radical_dim: w.radical_dim as u64,
        nilpotency_index: w.nilpotency_index,
        corners,
        wedderburn,
        timing: timing.then(|| Timing {
            total_ms: start.elapsed().as_secs_f64() * 1e3,
        }),
    };
    report.check_consistency()?;
    Ok(report)
}

impl AnalysisReport {
    /// `radical_dim + sum of squared block sizes = dim_T`.
    pub fn check_consistency(&self) -> CliResult<()> {
        let blocks: u64 = self
            .wedderburn
            .blocks
            .iter()
            .map(|b| (b.size * b.size * b.multiplicity) as u64)
            .sum();
        if self.radical_dim + blocks != self.dim_t {
            return Err(CliError::Verification(format!(
                "{}: radical_dim {} + block squares {} != dim_T {}",
                self.params, self.radical_dim, blocks, self.dim_t
            )));
        }
        Ok(())
    }

    /// `s×m;s×m`, sizes descending.
    pub fn blocks_compact(&self) -> String {
        self.wedderburn
            .blocks
            .iter()
            .map(|b| format!("{}×{}", b.size, b.multiplicity))
            .collect::<Vec<_>>()
            .join(";")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub const CSV_HEADER: &str = "params,char,vertices,dim_t,center_dim,is_semisimple,radical_dim,nilpotency_index,n_classes,central_unit_count,blocks";

pub fn csv_row(r: &AnalysisReport) -> String {
    format!(
        "\"{}\",{},{},{},{},{},{},{},{},{},{}",
        r.params,
        r.char,
        r.vertices,
        r.dim_t,
        r.center_dim,
        r.is_semisimple,
        r.radical_dim,
        r.nilpotency_index,
        r.wedderburn.n_classes,
        r.wedderburn.central_unit_count,
        r.blocks_compact()
    )
}

pub fn to_json(r: &AnalysisReport) -> String {
    serde_json::to_string_pretty(r).expect("report serializes")
}

pub fn to_text(r: &AnalysisReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "params            {}", r.params);
    let _ = writeln!(s, "char              {}", r.char);
    let _ = writeln!(s, "vertices          {}", r.vertices);
    let _ = writeln!(s, "dim_T             {}", r.dim_t);
    let _ = writeln!(s, "center_dim        {}", r.center_dim);
    let _ = writeln!(s, "semisimple        {}", r.is_semisimple);
    let _ = writeln!(s, "radical_dim       {}", r.radical_dim);
    let _ = writeln!(s, "nilpotency_index  {}", r.nilpotency_index);
    let _ = writeln!(s, "blocks            {}", r.blocks_compact());
    let _ = writeln!(s, "n_classes         {}", r.wedderburn.n_classes);
    let _ = writeln!(s, "central units     {}", r.wedderburn.central_unit_count);
    let _ = writeln!(s, "corners");
    let _ = writeln!(s, "  color      dim  radical  quotient  index");
    for c in &r.corners {
        let color: String = c.color.iter().map(|d| char::from(b'0' + d)).collect();
        let _ = writeln!(
            s,
            "  {:<8} {:>5} {:>8} {:>9} {:>6}",
            color, c.dim, c.radical_dim, c.quotient_dim, c.nilpotency_index
        );
    }
    if let Some(t) = &r.timing {
        let _ = writeln!(s, "time_ms           {:.3}", t.total_ms);
    }
    s
}

pub fn render(r: &AnalysisReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = to_json(r);
            s.push('\n');
            s
        }
        Format::Csv => format!("{CSV_HEADER}\n{}\n", csv_row(r)),
        Format::Text => to_text(r),
    }
}
