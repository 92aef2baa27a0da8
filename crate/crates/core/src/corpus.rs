//! Seeded generators of triangle-free plane graphs for the property checks:
//! grids, quadrangulations grown by face splitting, the Thomas-Walls
//! families, and random local edits of all of these.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::kernelize::find_clean_tube;
use crate::plane_graph::{Dart, EmbeddingBuilder, PlaneGraph};
use crate::tw_family::{default_patched, reduced_thomas_walls, steinberg_tovey};

#[derive(Clone, Debug)]
pub struct CorpusGraph {
    pub name: String,
    pub graph: PlaneGraph,
}

/// The `w × h` grid; vertex `(r, c)` has id `r·w + c`.
pub fn grid(w: usize, h: usize) -> PlaneGraph {
    let id = |r: usize, c: usize| r * w + c;
    let mut rotation = vec![Vec::new(); w * h];
    for r in 0..h {
        for c in 0..w {
            let rot = &mut rotation[id(r, c)];
            if r > 0 {
                rot.push(id(r - 1, c));
            }
            if c + 1 < w {
                rot.push(id(r, c + 1));
            }
            if r + 1 < h {
                rot.push(id(r + 1, c));
            }
            if c > 0 {
                rot.push(id(r, c - 1));
            }
        }
    }
    PlaneGraph::from_rotation(rotation).expect("grids are plane")
}

/// A dart on the outer face of [`grid`] (for `w, h >= 2`).
pub fn grid_outer_dart() -> Dart {
    (0, 1)
}

/// The grid plus one vertex joined to every other vertex of the outer
/// boundary cycle: a bipartite quadrangulation of the sphere.
pub fn grid_with_apex(w: usize, h: usize) -> PlaneGraph {
    let g = grid(w, h);
    let outer = g.face_containing(grid_outer_dart()).expect("grid has an outer face");
    let mut b = g.builder();
    let apex = b.add_vertex();
    let darts = outer.darts();
    let mut rot = Vec::new();
    for d in darts.iter().step_by(2) {
        // d = (x, u) enters u along the outer face; the new edge goes in that corner
        b.insert_after(d.1, d.0, apex);
        rot.push(d.1);
    }
    rot.reverse();
    b.set_rotation(apex, rot);
    b.build().expect("apex over the outer face is plane")
}

/// Splits a 4-face `v0 v1 v2 v3` (given by its darts) by a vertex adjacent to `v_i` and `v_{i+2}`.
fn split_diagonal(b: &mut EmbeddingBuilder, walk: &[Dart], i: usize) {
    b.add_path(walk[(i + 3) % 4], walk[(i + 1) % 4], 1);
}

/// Draws a 4-cycle inside a 4-face and joins it to the face corners.
fn nest_square(b: &mut EmbeddingBuilder, walk: &[Dart]) {
    let v: Vec<usize> = walk.iter().map(|d| d.0).collect();
    let w: Vec<usize> = (0..4).map(|_| b.add_vertex()).collect();
    for j in 0..4 {
        b.insert_after(v[j], v[(j + 3) % 4], w[j]);
        b.set_rotation(w[j], vec![v[j], w[(j + 3) % 4], w[(j + 1) % 4]]);
    }
}

/// A random bipartite quadrangulation with at least `target` vertices,
/// grown from a 4-cycle by face splitting.
pub fn random_quadrangulation<R: Rng>(rng: &mut R, target: usize) -> PlaneGraph {
    let mut g = PlaneGraph::from_rotation(vec![vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]]).unwrap();
    while g.n() < target {
        let faces = g.faces();
        let f = faces.choose(rng).expect("a quadrangulation has faces");
        let mut b = g.builder();
        if rng.gen_bool(0.7) {
            split_diagonal(&mut b, f.darts(), rng.gen_range(0..4));
        } else {
            nest_square(&mut b, f.darts());
        }
        g = b.build().expect("face splitting keeps the graph plane");
    }
    g
}

fn random_edit<R: Rng>(g: &PlaneGraph, rng: &mut R) -> Option<PlaneGraph> {
    let edges = g.edges();
    match rng.gen_range(0..5) {
        0 if !edges.is_empty() => {
            let (u, v) = *edges.choose(rng)?;
            let mut b = g.builder();
            b.add_pendant(if rng.gen_bool(0.5) { (u, v) } else { (v, u) });
            b.build().ok()
        }
        1 | 2 => {
            let faces = g.faces();
            let f = faces.choose(rng)?;
            let walk = f.darts();
            if walk.len() < 2 {
                return None;
            }
            let i = rng.gen_range(0..walk.len());
            let j = rng.gen_range(0..walk.len());
            let (u, w) = (walk[i].1, walk[j].1);
            if u == w {
                return None;
            }
            let internal = rng.gen_range(0..=3);
            let common = g.neighbours(u).iter().any(|x| g.has_edge(*x, w));
            let adjacent = g.has_edge(u, w);
            let ok = match internal {
                0 => !adjacent && !common,
                1 => !adjacent,
                _ => true,
            };
            if !ok {
                return None;
            }
            let mut b = g.builder();
            b.add_path(walk[i], walk[j], internal);
            b.build().ok()
        }
        3 if !edges.is_empty() => {
            let e = *edges.choose(rng)?;
            Some(g.remove_edges(&[e]))
        }
        4 if g.n() > 1 => {
            let mut gone = vec![false; g.n()];
            gone[rng.gen_range(0..g.n())] = true;
            Some(g.remove_vertices(&gone).0)
        }
        _ => None,
    }
}

/// Applies `edits` random local edits (pendant vertices, paths drawn inside
/// a face, edge and vertex deletions), each keeping the graph triangle-free.
pub fn random_modify<R: Rng>(g: &PlaneGraph, rng: &mut R, edits: usize) -> PlaneGraph {
    let mut cur = g.clone();
    let mut done = 0;
    let mut attempts = 0;
    while done < edits && attempts < 50 * (edits + 1) {
        attempts += 1;
        if let Some(next) = random_edit(&cur, rng) {
            if next.is_triangle_free() {
                cur = next;
                done += 1;
            }
        }
    }
    cur
}

/// Deterministic base graphs with at most `max_n` vertices.
pub fn base_graphs(max_n: usize) -> Vec<CorpusGraph> {
    let mut out = Vec::new();
    let mut push = |name: String, graph: PlaneGraph| {
        if graph.n() <= max_n {
            out.push(CorpusGraph { name, graph });
        }
    };
    for k in 1..=max_n / 3 {
        push(format!("rtw{k}"), reduced_thomas_walls(k).unwrap().graph);
        push(format!("st{k}"), steinberg_tovey(k).unwrap());
        if let Ok(t) = default_patched(k) {
            push(format!("patched{k}"), t.graph);
        }
    }
    for w in 2..=10 {
        for h in 2..=w {
            push(format!("grid{w}x{h}"), grid(w, h));
            push(format!("apex{w}x{h}"), grid_with_apex(w, h));
        }
    }
    out
}

fn rotation_key(g: &PlaneGraph) -> Vec<Vec<usize>> {
    g.rotation().to_vec()
}

/// `count` distinct triangle-free plane graphs with at most `max_n` vertices:
/// base graphs and random quadrangulations, each randomly edited.
pub fn random_corpus(seed: u64, count: usize, max_n: usize) -> Vec<CorpusGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bases = base_graphs(max_n);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < 100 * count + 100 {
        attempts += 1;
        let (name, base) = if bases.is_empty() || rng.gen_bool(0.4) {
            let target = rng.gen_range(4..=max_n.max(4));
            (format!("quad{target}"), random_quadrangulation(&mut rng, target))
        } else {
            let b = bases.choose(&mut rng).unwrap();
            (b.name.clone(), b.graph.clone())
        };
        let edits = rng.gen_range(0..=4);
        let g = random_modify(&base, &mut rng, edits);
        if g.n() == 0 || g.n() > max_n || !g.is_triangle_free() || !seen.insert(rotation_key(&g)) {
            continue;
        }
        out.push(CorpusGraph {
            name: format!("{name}+{edits}#{}", out.len()),
            graph: g,
        });
    }
    out
}

/// `count` distinct corpus graphs with at most `max_n` vertices that
/// contain a clean 5-tube: edited reduced Thomas-Walls, Steinberg-Tovey
/// and patched graphs.
pub fn tube_corpus(seed: u64, count: usize, max_n: usize) -> Vec<CorpusGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bases: Vec<CorpusGraph> = base_graphs(max_n)
        .into_iter()
        .filter(|b| b.graph.n() >= 16 && !b.name.starts_with("grid") && !b.name.starts_with("apex"))
        .collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < 100 * count + 100 && !bases.is_empty() {
        attempts += 1;
        let b = bases.choose(&mut rng).unwrap();
        let edits = rng.gen_range(0..=5);
        let g = random_modify(&b.graph, &mut rng, edits);
        if g.n() > max_n || !seen.insert(rotation_key(&g)) {
            continue;
        }
        if matches!(find_clean_tube(&g, 5), Ok(Some(_))) {
            out.push(CorpusGraph {
                name: format!("{}+{edits}#{}", b.name, out.len()),
                graph: g,
            });
        }
    }
    out
}

/// Bipartite quadrangulations of the sphere with at most `max_n` vertices.
pub fn quadrangulation_corpus(seed: u64, count: usize, max_n: usize) -> Vec<CorpusGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for w in 2..=6 {
        for h in 2..=w {
            let g = grid_with_apex(w, h);
            if out.len() < count / 4 && g.n() <= max_n {
                out.push(CorpusGraph {
                    name: format!("apex{w}x{h}"),
                    graph: g,
                });
            }
        }
    }
    while out.len() < count {
        let target = rng.gen_range(4..=max_n);
        let g = random_quadrangulation(&mut rng, target);
        if g.n() <= max_n {
            out.push(CorpusGraph {
                name: format!("quad{}#{}", g.n(), out.len()),
                graph: g,
            });
        }
    }
    out
}
