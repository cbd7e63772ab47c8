//! Grid sweeps with a content-addressed cache of finished cells.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use gdterwilliger::GdParams;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::analysis::{self, AnalysisReport, Format};
use crate::error::{CliError, CliResult};

pub const CACHE_ENV: &str = "GDTERWILLIGER_CACHE_DIR";
/// Bumped whenever the report layout or its contents change.
pub const CACHE_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grid {
    pub params: Vec<String>,
    pub chars: Vec<u64>,
}

impl Grid {
    pub fn load(path: &Path) -> CliResult<Grid> {
        let text = fs::read_to_string(path).map_err(|e| CliError::io(format!("reading {}", path.display()), e))?;
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("grid {}: {e}", path.display())))
    }

    /// Cells in grid order: params outer, chars inner.
    pub fn cells(&self) -> CliResult<Vec<GdParams>> {
        let mut out = Vec::new();
        for p in &self.params {
            for &c in &self.chars {
                out.push(GdParams::parse(p, c)?);
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Debug)]
pub struct SweepOptions {
    pub jobs: usize,
    pub max_dim: u64,
    pub cache_dir: Option<PathBuf>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepSummary {
    pub cells: usize,
    pub cached: usize,
    pub computed: usize,
}

/// `--cache-dir`, then the environment, then a directory beside the output.
pub fn resolve_cache_dir(flag: Option<PathBuf>, out: &Path) -> PathBuf {
    if let Some(dir) = flag {
        return dir;
    }
    if let Some(dir) = std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()) {
        return PathBuf::from(dir);
    }
    let parent = out.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    parent.join(".gdterwilliger-cache")
}

/// The output's directory must already exist; sweeps do not create it.
pub fn check_output_path(out: &Path) -> CliResult<()> {
    let parent = out.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    if parent.is_dir() && !out.is_dir() {
        Ok(())
    } else {
        Err(CliError::Usage(format!("output path {} is not writable", out.display())))
    }
}

pub fn cache_key(params: &GdParams) -> String {
    let canonical = serde_json::json!({
        "char": params.characteristic(),
        "params": params.to_string(),
        "version": CACHE_VERSION,
    });
    hex::encode(Sha256::digest(canonical.to_string().as_bytes()))
}

fn load_cached(path: &Path, params: &GdParams) -> Option<AnalysisReport> {
    let text = fs::read_to_string(path).ok()?;
    let report: AnalysisReport = serde_json::from_str(&text).ok()?;
    let matches = report.params == params.to_string() && report.char == params.characteristic();
    (matches && report.check_consistency().is_ok()).then_some(report)
}

fn store(dir: &Path, key: &str, report: &AnalysisReport) -> CliResult<()> {
    let path = dir.join(format!("{key}.json"));
    let tmp = dir.join(format!("{key}.json.tmp{}", std::process::id()));
    let write = || -> std::io::Result<()> {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(analysis::to_json(report).as_bytes())?;
        f.sync_all()?;
        fs::rename(&tmp, &path)
    };
    write().map_err(|e| CliError::io(format!("writing cache entry {}", path.display()), e))
}

fn run_cell(params: &GdParams, opts: &SweepOptions) -> CliResult<(AnalysisReport, bool)> {
    let key = cache_key(params);
    if let Some(dir) = &opts.cache_dir {
        if let Some(r) = load_cached(&dir.join(format!("{key}.json")), params) {
            return Ok((r, true));
        }
    }
    let report = analysis::analyze(params, opts.max_dim, false)?;
    if let Some(dir) = &opts.cache_dir {
        store(dir, &key, &report)?;
    }
    Ok((report, false))
}

/// Analyzes every cell on `opts.jobs` workers. Results keep grid order.
pub fn run(grid: &Grid, opts: &SweepOptions) -> CliResult<(Vec<AnalysisReport>, SweepSummary)> {
    let cells = grid.cells()?;
    if let Some(dir) = &opts.cache_dir {
        fs::create_dir_all(dir).map_err(|e| CliError::io(format!("creating cache dir {}", dir.display()), e))?;
    }
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<CliResult<(AnalysisReport, bool)>>>> =
        Mutex::new((0..cells.len()).map(|_| None).collect());
    let jobs = opts.jobs.clamp(1, cells.len().max(1));
    std::thread::scope(|s| {
        for _ in 0..jobs {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= cells.len() {
                    break;
                }
                let r = run_cell(&cells[i], opts);
                results.lock().expect("worker panicked")[i] = Some(r);
            });
        }
    });
    let mut summary = SweepSummary {
        cells: cells.len(),
        ..SweepSummary::default()
    };
    let mut reports = Vec::with_capacity(cells.len());
    for r in results.into_inner().expect("worker panicked") {
        let (report, hit) = r.expect("every cell ran")?;
        if hit {
            summary.cached += 1;
        } else {
            summary.computed += 1;
        }
        reports.push(report);
    }
    Ok((reports, summary))
}

pub fn render(reports: &[AnalysisReport], format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(reports).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = format!("{}\n", analysis::CSV_HEADER);
            for r in reports {
                s.push_str(&analysis::csv_row(r));
                s.push('\n');
            }
            s
        }
        Format::Text => reports.iter().map(analysis::to_text).collect::<Vec<_>>().join("\n"),
    }
}
