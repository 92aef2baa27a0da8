//! The `generate`, `reduce`, `alpha`, `decide` and `stats` commands.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::Serialize;

use tfkernel::corpus::grid;
use tfkernel::kernelize::{tube_census, tw_reduce, ReductionReport};
use tfkernel::plane_graph::PlaneGraph;
use tfkernel::plr;
use tfkernel::solver::{alpha_exact, decide_excess_report, AlphaResult, DecideReport};
use tfkernel::tw_family::{default_patched, reduced_thomas_walls, steinberg_tovey, thomas_walls};

use crate::error::CliError;

pub fn read_graph(path: &Path) -> Result<PlaneGraph, CliError> {
    let shown = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: shown.clone(),
        source,
    })?;
    plr::parse(&text).map_err(|source| CliError::Parse { path: shown, source })
}

pub fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

#[derive(Debug, Serialize)]
pub struct GenerateReport {
    pub family: String,
    pub k: usize,
    pub n: usize,
    pub edges: usize,
    pub face_census: BTreeMap<usize, usize>,
}

pub fn build_family(family: &str, k: usize) -> Result<PlaneGraph, CliError> {
    Ok(match family {
        "tw" => thomas_walls(k)?.graph,
        "rtw" => reduced_thomas_walls(k)?.graph,
        "st" => steinberg_tovey(k)?,
        "patched" => default_patched(k)?.graph,
        "grid" if k >= 1 => grid(k, k),
        "grid" => return Err(CliError::Family(tfkernel::tw_family::TwError::BadIndex)),
        other => return Err(CliError::BadFamily(other.to_string())),
    })
}

/// Returns the graph in `plr` form together with its census.
pub fn generate(family: &str, k: usize) -> Result<(String, GenerateReport), CliError> {
    let g = build_family(family, k)?;
    let report = GenerateReport {
        family: family.to_string(),
        k,
        n: g.n(),
        edges: g.edge_count(),
        face_census: g.face_census(),
    };
    Ok((plr::write(&g), report))
}

#[derive(Debug, Serialize)]
pub struct ReduceOutput {
    #[serde(flatten)]
    pub report: ReductionReport,
    pub kernel_face_census: BTreeMap<usize, usize>,
}

pub fn reduce(g: &PlaneGraph) -> Result<(PlaneGraph, ReduceOutput), CliError> {
    let (kernel, report) = tw_reduce(g)?;
    let out = ReduceOutput {
        report,
        kernel_face_census: kernel.face_census(),
    };
    Ok((kernel, out))
}

pub fn alpha(g: &PlaneGraph) -> Result<AlphaResult, CliError> {
    let r = alpha_exact(g);
    if !g.is_independent(&r.witness) || r.witness.len() != r.value {
        return Err(CliError::Violation("solver witness failed re-verification".into()));
    }
    Ok(r)
}

pub fn decide(g: &PlaneGraph, a: i64) -> Result<DecideReport, CliError> {
    Ok(decide_excess_report(g, a)?)
}

#[derive(Debug, Serialize)]
pub struct StatsReport {
    pub n: usize,
    pub edges: usize,
    pub face_census: BTreeMap<usize, usize>,
    /// `degree_histogram[d]` vertices have degree `d`.
    pub degree_histogram: Vec<usize>,
    pub low_degree_fraction: f64,
    pub triangle_free: bool,
    /// Every `k` with a clean `k`-tube; absent for graphs with a triangle.
    pub tube_census: Option<Vec<usize>>,
}

pub fn stats(g: &PlaneGraph) -> Result<StatsReport, CliError> {
    let hist = g.degree_histogram();
    let low: usize = hist.iter().take(5).sum();
    let fraction = if g.n() == 0 { 1.0 } else { low as f64 / g.n() as f64 };
    let triangle_free = g.is_triangle_free();
    Ok(StatsReport {
        n: g.n(),
        edges: g.edge_count(),
        face_census: g.face_census(),
        degree_histogram: hist,
        low_degree_fraction: fraction,
        triangle_free,
        tube_census: if triangle_free { Some(tube_census(g)?) } else { None },
    })
}
