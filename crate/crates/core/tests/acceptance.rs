//! Acceptance criteria 1-10. Runs as a plain binary and prints one
//! PASS/FAIL line per criterion together with its runtime and bound.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use tfkernel::corpus::{base_graphs, quadrangulation_corpus, random_corpus, tube_corpus, CorpusGraph};
use tfkernel::kernelize::tw_reduce;
use tfkernel::plane_graph::PlaneGraph;
use tfkernel::set_colouring::{
    decompose_sets, extend_3colouring, face_margins, margin_colouring, ColourSet, SetColouring,
};
use tfkernel::solver::{alpha_brute, alpha_exact, decide_excess, decide_excess_direct, excess, BRUTE_FORCE_CAP};
use tfkernel::tw_family::{four_colourings, pivot, reduced_thomas_walls, steinberg_tovey};

/// Minimum corpus sizes.
const EXCESS_GRAPHS: usize = 100;
const MARGIN_GRAPHS: usize = 50;
const EXTENSION_GRAPHS: usize = 200;

type Outcome = Result<String, String>;
type Criterion = (usize, fn() -> Outcome, Duration);

fn criterion_1() -> Outcome {
    for k in 5..=9 {
        let t = reduced_thomas_walls(k).map_err(|e| e.to_string())?;
        let (kernel, report) = tw_reduce(&t.graph).map_err(|e| e.to_string())?;
        if kernel.n() != 13 {
            return Err(format!("k={k}: kernel has {} vertices", kernel.n()));
        }
        let census = kernel.face_census();
        if census.get(&4) != Some(&2) || census.get(&5) != Some(&6) || census.values().sum::<usize>() != 8 {
            return Err(format!("k={k}: kernel face census {census:?}"));
        }
        if let Some(s) = report.steps.iter().find(|s| s.n_before != s.n_after + 3) {
            return Err(format!("k={k}: step {} -> {}", s.n_before, s.n_after));
        }
        if report.steps.len() != k - 4 {
            return Err(format!("k={k}: {} steps", report.steps.len()));
        }
    }
    Ok("k = 5..9 reduce to 13 vertices, census {4:2, 5:6}".into())
}

fn criterion_2() -> Outcome {
    let corpus = tube_corpus(2, EXCESS_GRAPHS, 40);
    if corpus.len() < EXCESS_GRAPHS {
        return Err(format!("only {} tube graphs", corpus.len()));
    }
    let mut steps = 0;
    for c in &corpus {
        let (kernel, report) = tw_reduce(&c.graph).map_err(|e| e.to_string())?;
        if report.steps.is_empty() {
            return Err(format!("{}: no reduction step", c.name));
        }
        steps += report.steps.len();
        let (before, after) = (excess(&c.graph), excess(&kernel));
        if before != after {
            return Err(format!("{}: excess {before} -> {after}", c.name));
        }
    }
    Ok(format!("{} graphs, {steps} reduction steps", corpus.len()))
}

fn criterion_3() -> Outcome {
    for k in 1..=8 {
        let g = steinberg_tovey(k).map_err(|e| e.to_string())?;
        let a = alpha_exact(&g).value;
        if 3 * a != g.n() + 1 {
            return Err(format!("k={k}: n={} alpha={a}", g.n()));
        }
    }
    Ok("alpha(ST_k) = (n+1)/3 for k = 1..8".into())
}

fn criterion_4() -> Outcome {
    let mut values = Vec::new();
    for k in 1..=8 {
        let t = reduced_thomas_walls(k).map_err(|e| e.to_string())?;
        let a = alpha_exact(&t.graph).value;
        if a > k + 2 {
            return Err(format!("k={k}: alpha={a}"));
        }
        values.push(a);
    }
    Ok(format!("alpha(T'_k), k = 1..8: {values:?}"))
}

fn lower_bound_corpus() -> Vec<CorpusGraph> {
    let mut c = base_graphs(40);
    c.extend(random_corpus(5, 300, 40));
    c
}

fn criterion_5() -> Outcome {
    let corpus = lower_bound_corpus();
    for c in &corpus {
        if !c.graph.is_triangle_free() {
            return Err(format!("{}: not triangle-free", c.name));
        }
        let a = alpha_exact(&c.graph).value;
        if 3 * a < c.graph.n() + 1 {
            return Err(format!("{}: n={} alpha={a}", c.name, c.graph.n()));
        }
    }
    Ok(format!("{} graphs", corpus.len()))
}

fn subsets(universe: &[u32], size: usize) -> Vec<ColourSet> {
    let mut out = Vec::new();
    let mut pick = Vec::with_capacity(size);
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
    rec(universe, size, 0, &mut pick, &mut out);
    out
}

fn criterion_6() -> Outcome {
    let mut checked = 0;
    for m in 1..=3usize {
        let c = 3 * m as u32;
        let all: Vec<u32> = (1..=c).collect();
        let phi1: ColourSet = (1..=m as u32).collect();
        let outside = |s: &[&ColourSet]| -> Vec<u32> {
            all.iter()
                .copied()
                .filter(|x| s.iter().all(|t| !t.contains(x)))
                .collect()
        };
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
                    let d = decompose_sets(sets, c);
                    d.verify(sets, margin).map_err(|e| format!("m={m} {sets:?}: {e}"))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} colourings of the 4-cycle, m <= 3"))
}

fn criterion_7() -> Outcome {
    let corpus = quadrangulation_corpus(7, MARGIN_GRAPHS + 10, 100);
    for c in &corpus {
        let g = &c.graph;
        if g.n() > 100 || !g.faces().iter().all(|f| f.is_k_face(4)) {
            return Err(format!("{}: not a quadrangulation on <= 100 vertices", c.name));
        }
        let classes: Vec<u8> = g
            .two_colouring()
            .ok_or("not bipartite")?
            .iter()
            .map(|&x| x + 1)
            .collect();
        let input = SetColouring::replicate(2, &classes, 24).map_err(|e| e.to_string())?;
        input.check(g, Some(24)).map_err(|e| e.to_string())?;
        let out = margin_colouring(g, &input, 16, 1).map_err(|e| format!("{}: {e}", c.name))?;
        let phi = &out.colouring;
        phi.check(g, Some(16)).map_err(|e| format!("{}: {e}", c.name))?;
        if (0..g.n()).any(|v| !phi.set(v).is_subset(input.set(v))) {
            return Err(format!("{}: not contained in the input", c.name));
        }
        let margins = face_margins(g, phi).map_err(|e| e.to_string())?;
        if margins.iter().any(|&x| x < 1) {
            return Err(format!("{}: a 4-face has margin 0", c.name));
        }
        if let Some(&d) = out.back_degree.iter().find(|&&d| d > 7) {
            return Err(format!("{}: back-degree {d}", c.name));
        }
    }
    Ok(format!("{} quadrangulations", corpus.len()))
}

/// All proper 3-colourings of a cycle of length `k`.
fn cycle_colourings(k: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur = vec![0u8; k];
    fn rec(i: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        let k = cur.len();
        if i == k {
            if cur[k - 1] != cur[0] {
                out.push(cur.clone());
            }
            return;
        }
        for c in 1..=3 {
            if i == 0 || cur[i - 1] != c {
                cur[i] = c;
                rec(i + 1, cur, out);
            }
        }
    }
    rec(0, &mut cur, &mut out);
    out
}

fn short_faces(g: &PlaneGraph) -> Vec<Vec<usize>> {
    g.faces()
        .iter()
        .filter(|f| f.is_k_face(4) || f.is_k_face(5))
        .map(|f| f.vertices())
        .collect()
}

fn criterion_8() -> Outcome {
    let corpus: Vec<CorpusGraph> = random_corpus(8, 2 * EXTENSION_GRAPHS, 14)
        .into_iter()
        .filter(|c| !short_faces(&c.graph).is_empty())
        .collect();
    if corpus.len() < EXTENSION_GRAPHS {
        return Err(format!(
            "only {} graphs with a facial cycle of length <= 5",
            corpus.len()
        ));
    }
    let mut checked = 0;
    for c in &corpus {
        for face in short_faces(&c.graph) {
            for colours in cycle_colourings(face.len()) {
                match extend_3colouring(&c.graph, &face, &colours) {
                    Ok(Some(_)) => checked += 1,
                    Ok(None) => return Err(format!("{}: {face:?} coloured {colours:?} does not extend", c.name)),
                    Err(e) => return Err(format!("{}: {e}", c.name)),
                }
            }
        }
    }
    Ok(format!("{} graphs, {checked} boundary colourings", corpus.len()))
}

fn criterion_9() -> Outcome {
    let mut faces_checked = 0;
    for k in 1..=10 {
        let t = reduced_thomas_walls(k).map_err(|e| e.to_string())?;
        let cols = four_colourings(&t).map_err(|e| e.to_string())?;
        for (i, col) in cols.iter().enumerate() {
            if t.graph.edges().iter().any(|&(u, v)| col[u] == col[v]) || col.iter().any(|c| !(1..=3).contains(c)) {
                return Err(format!("k={k}: colouring {i} is not proper"));
            }
        }
        for f in t.graph.faces().iter().filter(|f| f.is_k_face(5)) {
            let w = f.vertices();
            let mut pivots = [false; 5];
            for col in &cols {
                let i = pivot([0, 1, 2, 3, 4].map(|j| col[w[j]])).ok_or("5-face not properly coloured")?;
                pivots[i] = true;
            }
            let never = pivots.iter().filter(|&&p| !p).count();
            if never != 1 {
                return Err(format!("k={k}: face {w:?} has {never} never-pivot vertices"));
            }
            faces_checked += 1;
        }
    }
    Ok(format!("k = 1..10, {faces_checked} 5-faces"))
}

fn criterion_10() -> Outcome {
    let mut corpus = random_corpus(10, 250, BRUTE_FORCE_CAP);
    corpus.extend(tube_corpus(10, 50, BRUTE_FORCE_CAP));
    let mut compared = 0;
    for c in &corpus {
        let g = &c.graph;
        let brute = alpha_brute(g).map_err(|e| e.to_string())?.value as i64;
        let ex = 3 * brute - g.n() as i64;
        for a in ex - 2..=ex + 2 {
            let kernel = decide_excess(g, a).map_err(|e| e.to_string())?;
            let direct = decide_excess_direct(g, a).map_err(|e| e.to_string())?;
            if kernel != direct || kernel != (ex >= a) {
                return Err(format!(
                    "{}: a={a} kernel={kernel} direct={direct} brute excess={ex}",
                    c.name
                ));
            }
            compared += 1;
        }
    }
    for k in 1..=6 {
        let g = steinberg_tovey(k).map_err(|e| e.to_string())?;
        let one = decide_excess(&g, 1).map_err(|e| e.to_string())?;
        let two = decide_excess(&g, 2).map_err(|e| e.to_string())?;
        if !one || two {
            return Err(format!("ST_{k}: decide(1)={one} decide(2)={two}"));
        }
    }
    Ok(format!(
        "{} graphs, {compared} decisions; ST_1..6 give true/false",
        corpus.len()
    ))
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria: [Criterion; 10] = [
        (1, criterion_1, secs(1)),
        (2, criterion_2, secs(300)),
        (3, criterion_3, secs(60)),
        (4, criterion_4, secs(60)),
        (5, criterion_5, secs(120)),
        (6, criterion_6, secs(60)),
        (7, criterion_7, secs(60)),
        (8, criterion_8, secs(300)),
        (9, criterion_9, secs(10)),
        (10, criterion_10, secs(120)),
    ];
    let mut failed = 0;
    for (id, run, bound) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let within = elapsed <= bound;
        let (status, detail) = match (&outcome, within) {
            (Ok(d), true) => ("PASS", d.clone()),
            (Ok(d), false) => ("FAIL", format!("{d}; runtime over bound")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {id:>2}: {status}  [{:.2}s / {}s]  {detail}",
            elapsed.as_secs_f64(),
            bound.as_secs()
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
