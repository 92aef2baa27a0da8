//! Randomized and exhaustive invariant suites behind `tfk verify`.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use tfkernel::corpus::{quadrangulation_corpus, random_corpus, tube_corpus, CorpusGraph};
use tfkernel::kernelize::tw_reduce;
use tfkernel::plane_graph::PlaneGraph;
use tfkernel::plr;
use tfkernel::set_colouring::{
    decompose_sets, extend_3colouring, face_margins, margin_colouring, ColourSet, SetColouring,
};
use tfkernel::solver::{alpha_brute, alpha_exact, BRUTE_FORCE_CAP};
use tfkernel::tw_family::{four_colourings, pivot, reduced_thomas_walls, steinberg_tovey};

use crate::error::CliError;

pub const SUITES: [&str; 8] = [
    "euler",
    "deltagood",
    "margin",
    "coltw",
    "extend",
    "kernel",
    "alpha",
    "tightness",
];

#[derive(Debug, Serialize)]
pub struct Instance {
    pub index: usize,
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub seed: u64,
    pub count: usize,
    pub passed: usize,
    pub failed: usize,
    pub instances: Vec<Instance>,
}

type Check = Result<String, String>;

fn run_all<T>(items: impl IntoIterator<Item = (String, T)>, check: impl Fn(&T) -> Check) -> Vec<Instance> {
    items
        .into_iter()
        .enumerate()
        .map(|(index, (name, item))| {
            let (ok, detail) = match check(&item) {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            Instance {
                index,
                name,
                ok,
                detail,
            }
        })
        .collect()
}

fn named(c: Vec<CorpusGraph>) -> Vec<(String, PlaneGraph)> {
    c.into_iter().map(|c| (c.name, c.graph)).collect()
}

fn euler(g: &PlaneGraph) -> Check {
    let expected: i64 = g.components().iter().map(|c| if c.len() == 1 { 1 } else { 2 }).sum();
    let got = g.n() as i64 - g.edge_count() as i64 + g.faces().len() as i64;
    if got != expected {
        return Err(format!("V - E + F = {got}, expected {expected}"));
    }
    let mut darts = HashSet::new();
    for f in g.faces() {
        if !f.darts().iter().all(|&d| darts.insert(d)) {
            return Err("a dart lies on two faces".into());
        }
    }
    if darts.len() != 2 * g.edge_count() {
        return Err("faces miss some darts".into());
    }
    let text = plr::write(g);
    match plr::parse(&text) {
        Ok(h) if plr::write(&h) == text => Ok(format!("n={} faces={}", g.n(), g.faces().len())),
        _ => Err("plr round trip differs".into()),
    }
}

fn subsets(universe: &[u32], size: usize) -> Vec<ColourSet> {
    fn rec(u: &[u32], size: usize, start: usize, pick: &mut Vec<u32>, out: &mut Vec<ColourSet>) {
        if pick.len() == size {
            out.push(pick.iter().copied().collect());
            return;
        }
        for i in start..u.len() {
            pick.push(u[i]);
            rec(u, size, i + 1, pick, out);
            pick.pop();
        }
    }
    let mut out = Vec::new();
    rec(universe, size, 0, &mut Vec::new(), &mut out);
    out
}

/// Every proper `(3m:m)`-colouring of a 4-cycle with `φ(v1) = {1..m}`.
fn deltagood(m: &usize) -> Check {
    let m = *m;
    let c = 3 * m as u32;
    let all: Vec<u32> = (1..=c).collect();
    let phi1: ColourSet = (1..=m as u32).collect();
    let outside = |s: &[&ColourSet]| -> Vec<u32> {
        all.iter()
            .copied()
            .filter(|x| s.iter().all(|t| !t.contains(x)))
            .collect()
    };
    let mut n = 0;
    for phi2 in subsets(&outside(&[&phi1]), m) {
        for phi3 in subsets(&outside(&[&phi2]), m) {
            for phi4 in subsets(&outside(&[&phi1, &phi3]), m) {
                let sets = [&phi1, &phi2, &phi3, &phi4];
                let union: BTreeSet<u32> = sets.iter().flat_map(|s| s.iter().copied()).collect();
                let margin = phi1
                    .difference(&phi3)
                    .count()
                    .min(phi2.difference(&phi4).count())
                    .min(c as usize - union.len());
                decompose_sets(sets, c)
                    .verify(sets, margin)
                    .map_err(|e| format!("{sets:?}: {e}"))?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} colourings"))
}

fn margin(g: &PlaneGraph) -> Check {
    let classes: Vec<u8> = g
        .two_colouring()
        .ok_or("not bipartite")?
        .iter()
        .map(|&x| x + 1)
        .collect();
    let input = SetColouring::replicate(2, &classes, 24).map_err(|e| e.to_string())?;
    let out = margin_colouring(g, &input, 16, 1).map_err(|e| e.to_string())?;
    let phi = &out.colouring;
    phi.check(g, Some(16)).map_err(|e| e.to_string())?;
    if (0..g.n()).any(|v| !phi.set(v).is_subset(input.set(v))) {
        return Err("output not contained in the input".into());
    }
    let margins = face_margins(g, phi).map_err(|e| e.to_string())?;
    if margins.iter().any(|&m| m < 1) {
        return Err("a 4-face has margin 0".into());
    }
    let back = out.back_degree.iter().max().copied().unwrap_or(0);
    if back > 7 {
        return Err(format!("back-degree {back}"));
    }
    Ok(format!("n={} faces={} max back-degree {back}", g.n(), margins.len()))
}

fn coltw(k: &usize) -> Check {
    let t = reduced_thomas_walls(*k).map_err(|e| e.to_string())?;
    let cols = four_colourings(&t).map_err(|e| e.to_string())?;
    for (i, col) in cols.iter().enumerate() {
        if t.graph.edges().iter().any(|&(u, v)| col[u] == col[v]) {
            return Err(format!("colouring {i} is not proper"));
        }
    }
    let mut faces = 0;
    for f in t.graph.faces().iter().filter(|f| f.is_k_face(5)) {
        let w = f.vertices();
        let mut hit = [false; 5];
        for col in &cols {
            let p = pivot([0, 1, 2, 3, 4].map(|j| col[w[j]])).ok_or("5-face without pivot")?;
            hit[p] = true;
        }
        let never = hit.iter().filter(|&&h| !h).count();
        if never != 1 {
            return Err(format!("face {w:?} has {never} never-pivot vertices"));
        }
        faces += 1;
    }
    Ok(format!("{faces} 5-faces"))
}

fn short_faces(g: &PlaneGraph) -> Vec<Vec<usize>> {
    g.faces()
        .iter()
        .filter(|f| f.is_k_face(4) || f.is_k_face(5))
        .map(|f| f.vertices())
        .collect()
}

fn cycle_colourings(k: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for i in 0..k {
        out = out
            .into_iter()
            .flat_map(|p: Vec<u8>| {
                (1..=3u8)
                    .filter(|&c| i == 0 || p[i - 1] != c)
                    .map(|c| [p.as_slice(), &[c]].concat())
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    out.retain(|p| p[k - 1] != p[0]);
    out
}

fn extend(g: &PlaneGraph) -> Check {
    let mut n = 0;
    for face in short_faces(g) {
        for colours in cycle_colourings(face.len()) {
            match extend_3colouring(g, &face, &colours) {
                Ok(Some(_)) => n += 1,
                Ok(None) => return Err(format!("{face:?} coloured {colours:?} does not extend")),
                Err(e) => return Err(e.to_string()),
            }
        }
    }
    Ok(format!("{n} boundary colourings"))
}

fn kernel(g: &PlaneGraph) -> Check {
    let (k, report) = tw_reduce(g).map_err(|e| e.to_string())?;
    let before = 3 * alpha_brute(g).map_err(|e| e.to_string())?.value as i64 - g.n() as i64;
    let after = 3 * alpha_brute(&k).map_err(|e| e.to_string())?.value as i64 - k.n() as i64;
    if before != after {
        return Err(format!("excess {before} -> {after}"));
    }
    Ok(format!(
        "n {} -> {} in {} steps, excess {before}",
        g.n(),
        k.n(),
        report.steps.len()
    ))
}

fn alpha(g: &PlaneGraph) -> Check {
    let brute = alpha_brute(g).map_err(|e| e.to_string())?;
    let exact = alpha_exact(g);
    if brute.value != exact.value {
        return Err(format!("brute {} vs branch and bound {}", brute.value, exact.value));
    }
    if !g.is_independent(&exact.witness) || exact.witness.len() != exact.value {
        return Err("bad witness".into());
    }
    if 3 * exact.value < g.n() + 1 {
        return Err(format!("alpha {} below (n+1)/3", exact.value));
    }
    Ok(format!("n={} alpha={}", g.n(), exact.value))
}

fn tightness(k: &usize) -> Check {
    let g = steinberg_tovey(*k).map_err(|e| e.to_string())?;
    let a = alpha_exact(&g).value;
    if 3 * a != g.n() + 1 {
        return Err(format!("n={} alpha={a}", g.n()));
    }
    Ok(format!("n={} alpha={a}", g.n()))
}

fn indices(name: &str, range: std::ops::RangeInclusive<usize>) -> Vec<(String, usize)> {
    range.map(|k| (format!("{name}{k}"), k)).collect()
}

/// Default instance count of each suite.
pub fn default_count(suite: &str) -> usize {
    match suite {
        "deltagood" => 3,
        "coltw" => 10,
        "tightness" => 8,
        _ => 100,
    }
}

/// Runs `suite`. For `deltagood`, `coltw` and `tightness` the count is the
/// largest `m` or `k` checked and the seed is unused.
pub fn run(suite: &str, seed: u64, count: usize) -> Result<VerifyReport, CliError> {
    let instances = match suite {
        "euler" => run_all(named(random_corpus(seed, count, 40)), euler),
        "deltagood" => run_all(indices("m", 1..=count), deltagood),
        "margin" => run_all(named(quadrangulation_corpus(seed, count, 100)), margin),
        "coltw" => run_all(indices("k", 1..=count), coltw),
        "extend" => {
            let graphs: Vec<CorpusGraph> = random_corpus(seed, 3 * count, 14)
                .into_iter()
                .filter(|c| !short_faces(&c.graph).is_empty())
                .take(count)
                .collect();
            run_all(named(graphs), extend)
        }
        "kernel" => run_all(named(tube_corpus(seed, count, BRUTE_FORCE_CAP)), kernel),
        "alpha" => run_all(named(random_corpus(seed, count, 20)), alpha),
        "tightness" => run_all(indices("st", 1..=count), tightness),
        other => return Err(CliError::UnknownSuite(other.to_string())),
    };
    let passed = instances.iter().filter(|i| i.ok).count();
    Ok(VerifyReport {
        suite: suite.to_string(),
        seed,
        count,
        passed,
        failed: instances.len() - passed,
        instances,
    })
}
