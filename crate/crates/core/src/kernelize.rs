//! Clean Thomas-Walls tubes: detection, the single-step reduction that
//! replaces the interior of a clean 5-tube by the interior of `T'_4`, and
//! the reduction fixpoint.
//!
//! Detection is driven by faces. A clean `k`-tube has every template 5-face
//! realized as a host face, so an occurrence is fixed by the image of one
//! template 5-face and a rotation of it; the rest follows by walking across
//! shared edges.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;
use thiserror::Error;

use crate::plane_graph::{Dart, Face, FaceMap, PlaneGraph};
use crate::tw_family::{reduced_thomas_walls, TwGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("graph contains the triangle {0:?}")]
    NotTriangleFree([usize; 3]),
    #[error("invalid tube occurrence: {0}")]
    InvalidOccurrence(String),
    #[error("the 5-cycle {0:?} does not bound a face of the host")]
    FullFiveFace(Vec<usize>),
}

/// An occurrence of `T'_k` in a host graph whose template 5-faces are host faces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TubeOccurrence {
    pub k: usize,
    /// `vertex_map[t]` is the host image of template vertex `t`.
    pub vertex_map: Vec<usize>,
    pub end_cycles: [[usize; 4]; 2],
    pub five_faces: Vec<Vec<usize>>,
    /// True when the tube appears in the host as the mirror image of the template drawing.
    pub mirrored: bool,
}

struct Template {
    tw: TwGraph,
    drawings: [(PlaneGraph, FaceMap); 2],
    // index of the first 5-face in each drawing
    anchor: [usize; 2],
}

impl Template {
    fn new(k: usize) -> Template {
        let tw = reduced_thomas_walls(k).expect("k >= 1");
        let plain = tw.graph.clone();
        let mirror = plain.mirrored();
        let drawings = [(plain.clone(), plain.face_map()), (mirror.clone(), mirror.face_map())];
        let anchor = [0, 1].map(|o| drawings[o].1.faces.iter().position(|f| f.len() == 5).unwrap_or(0));
        Template { tw, drawings, anchor }
    }

    fn five_faces(&self, orientation: usize) -> impl Iterator<Item = &Face> {
        self.drawings[orientation].1.faces.iter().filter(|f| f.len() == 5)
    }
}

fn check_triangle_free(g: &PlaneGraph) -> Result<(), KernelError> {
    match g.triangle() {
        Some(t) => Err(KernelError::NotTriangleFree(t)),
        None => Ok(()),
    }
}

/// Host 5-faces in the fixed scan order: by minimum vertex, then by canonical walk.
fn scan_faces(fm: &FaceMap) -> Vec<&Face> {
    let mut faces: Vec<&Face> = fm.faces.iter().filter(|f| f.is_k_face(5)).collect();
    faces.sort_by_key(|f| (f.min_vertex(), f.canonical()));
    faces
}

/// Extends the anchor assignment across shared edges of template 5-faces.
fn try_match(t: &Template, orientation: usize, host: &FaceMap, anchor: &[Dart], shift: usize) -> Option<Vec<usize>> {
    let (tg, tfm) = &t.drawings[orientation];
    let tn = tg.n();
    let mut map = vec![usize::MAX; tn];
    let mut used = HashSet::new();
    let mut assign = |map: &mut Vec<usize>, v: usize, h: usize| -> bool {
        if map[v] == usize::MAX {
            if !used.insert(h) {
                return false;
            }
            map[v] = h;
            true
        } else {
            map[v] == h
        }
    };
    let tfaces = &tfm.faces;
    let mut done = vec![false; tfaces.len()];
    let start = &tfaces[t.anchor[orientation]];
    for (i, d) in start.darts().iter().enumerate() {
        if !assign(&mut map, d.0, anchor[(i + shift) % 5].0) {
            return None;
        }
    }
    done[t.anchor[orientation]] = true;
    let mut queue = vec![t.anchor[orientation]];
    while let Some(fi) = queue.pop() {
        for &(a, b) in tfaces[fi].darts() {
            let other = tfm.of_dart[&(b, a)];
            if done[other] || tfaces[other].len() != 5 {
                continue;
            }
            let hf = host.face_of((map[b], map[a]))?;
            if !hf.is_k_face(5) {
                return None;
            }
            let tw = tfaces[other].darts();
            let ti = tw.iter().position(|&d| d == (b, a)).unwrap();
            let hw = hf.darts();
            let hi = hw.iter().position(|&d| d == (map[b], map[a])).unwrap();
            for j in 0..5 {
                if !assign(&mut map, tw[(ti + j) % 5].0, hw[(hi + j) % 5].0) {
                    return None;
                }
            }
            done[other] = true;
            queue.push(other);
        }
    }
    if map.contains(&usize::MAX) {
        return None;
    }
    Some(map)
}

fn occurrence(t: &Template, map: Vec<usize>, orientation: usize) -> TubeOccurrence {
    let five_faces = t
        .five_faces(0)
        .map(|f| f.vertices().into_iter().map(|v| map[v]).collect())
        .collect();
    TubeOccurrence {
        k: t.tw.k,
        end_cycles: t.tw.end_cycles.map(|c| c.map(|v| map[v])),
        vertex_map: map,
        five_faces,
        mirrored: orientation == 1,
    }
}

fn edges_present(g: &PlaneGraph, t: &Template, map: &[usize]) -> bool {
    t.tw.graph.edges().iter().all(|&(u, v)| g.has_edge(map[u], map[v]))
}

fn find_four_cycle(g: &PlaneGraph) -> Option<TubeOccurrence> {
    for a in 0..g.n() {
        for &b in g.neighbours(a) {
            for &d in g.neighbours(a) {
                if d == b {
                    continue;
                }
                if let Some(&c) = g.neighbours(b).iter().find(|&&c| c != a && c != d && g.has_edge(c, d)) {
                    return Some(TubeOccurrence {
                        k: 1,
                        vertex_map: vec![a, b, c, d],
                        end_cycles: [[a, b, c, d], [b, c, d, a]],
                        five_faces: Vec::new(),
                        mirrored: false,
                    });
                }
            }
        }
    }
    None
}

/// Reorders the candidate anchor faces.
type FaceOrder<'o> = &'o mut dyn FnMut(&mut Vec<&Face>);

fn search(g: &PlaneGraph, k: usize, order: Option<FaceOrder>) -> Option<TubeOccurrence> {
    if k == 0 || g.n() < 3 * k + 1 {
        return None;
    }
    if k == 1 {
        return find_four_cycle(g);
    }
    let t = Template::new(k);
    let fm = g.face_map();
    let mut faces = scan_faces(&fm);
    if let Some(shuffle) = order {
        shuffle(&mut faces);
    }
    for f in faces {
        for orientation in 0..2 {
            for shift in 0..5 {
                if let Some(map) = try_match(&t, orientation, &fm, f.darts(), shift) {
                    if edges_present(g, &t, &map) {
                        return Some(occurrence(&t, map, orientation));
                    }
                }
            }
        }
    }
    None
}

/// The first clean `k`-tube in the fixed scan order, if any.
pub fn find_clean_tube(g: &PlaneGraph, k: usize) -> Result<Option<TubeOccurrence>, KernelError> {
    check_triangle_free(g)?;
    Ok(search(g, k, None))
}

/// As [`find_clean_tube`], scanning the anchor faces in a random order.
pub fn find_clean_tube_shuffled<R: Rng>(
    g: &PlaneGraph,
    k: usize,
    rng: &mut R,
) -> Result<Option<TubeOccurrence>, KernelError> {
    check_triangle_free(g)?;
    let mut shuffle = |faces: &mut Vec<&Face>| faces.shuffle(rng);
    Ok(search(g, k, Some(&mut shuffle)))
}

/// All `k` for which `g` contains a clean `k`-tube.
pub fn tube_census(g: &PlaneGraph) -> Result<Vec<usize>, KernelError> {
    check_triangle_free(g)?;
    let mut out = Vec::new();
    for k in 1..=g.n().saturating_sub(1) / 3 {
        if search(g, k, None).is_some() {
            out.push(k);
        } else if k >= 2 {
            // a clean k-tube contains a clean (k-1)-tube
            break;
        }
    }
    Ok(out)
}

/// Outcome of one single-step reduction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionStep {
    /// Host ids (before the step) of the tube, indexed by template vertex.
    pub tube_vertices: Vec<usize>,
    /// Host ids (before the step) of the removed interior vertices.
    pub removed: Vec<usize>,
    /// Ids (after the step) of the vertices of the new interior.
    pub added: Vec<usize>,
    pub n_before: usize,
    pub n_after: usize,
    pub edges_before: usize,
    pub edges_after: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionReport {
    pub steps: Vec<ReductionStep>,
    pub initial_n: usize,
    pub final_n: usize,
    pub initial_edges: usize,
    pub final_edges: usize,
}

fn interior(tw: &TwGraph) -> Vec<bool> {
    let mut inner = vec![true; tw.graph.n()];
    for c in &tw.end_cycles {
        for &v in c {
            inner[v] = false;
        }
    }
    inner
}

/// The interior neighbours of `v` as one cyclic block of its rotation, or
/// `None` if they are not contiguous.
fn interior_block(rot: &[usize], inner: &[bool]) -> Option<Vec<usize>> {
    let d = rot.len();
    let count = rot.iter().filter(|&&u| inner[u]).count();
    if count == 0 {
        return Some(Vec::new());
    }
    if count == d {
        return Some(rot.to_vec());
    }
    let start = (0..d).find(|&i| inner[rot[i]] && !inner[rot[(i + d - 1) % d]])?;
    let block: Vec<usize> = (0..count).map(|j| rot[(start + j) % d]).collect();
    block.iter().all(|&u| inner[u]).then_some(block)
}

fn validate(g: &PlaneGraph, tube: &TubeOccurrence, t: &Template) -> Result<FaceMap, KernelError> {
    let bad = |m: &str| KernelError::InvalidOccurrence(m.to_string());
    if tube.k != 5 {
        return Err(bad("only 5-tubes are reduced"));
    }
    let map = &tube.vertex_map;
    if map.len() != t.tw.graph.n() {
        return Err(bad("vertex map has the wrong length"));
    }
    if map.iter().any(|&v| v >= g.n()) {
        return Err(bad("vertex map leaves the host"));
    }
    if map.iter().collect::<HashSet<_>>().len() != map.len() {
        return Err(bad("vertex map is not injective"));
    }
    if !edges_present(g, t, map) {
        return Err(bad("a template edge is missing from the host"));
    }
    let expected: Vec<Vec<usize>> = t
        .five_faces(0)
        .map(|f| f.vertices().into_iter().map(|v| map[v]).collect())
        .collect();
    if expected != tube.five_faces || tube.end_cycles != t.tw.end_cycles.map(|c| c.map(|v| map[v])) {
        return Err(bad("listed faces do not match the vertex map"));
    }
    let fm = g.face_map();
    for f in &tube.five_faces {
        if !fm.is_face_cycle(f) {
            return Err(KernelError::FullFiveFace(f.clone()));
        }
    }
    Ok(fm)
}

/// Replaces the eight interior vertices of a clean 5-tube by the five
/// interior vertices of `T'_4`, keeping both end 4-cycles and interface
/// pairs. The result has three vertices fewer and the same `3α - n`.
pub fn single_step_reduce(g: &PlaneGraph, tube: &TubeOccurrence) -> Result<(PlaneGraph, ReductionStep), KernelError> {
    let t5 = Template::new(5);
    validate(g, tube, &t5)?;
    let t4 = reduced_thomas_walls(4).expect("k >= 1");
    let in5 = interior(&t5.tw);
    let in4 = interior(&t4);
    let map = &tube.vertex_map;

    // work in the drawing where the tube has the template orientation
    let host = if tube.mirrored { g.mirrored() } else { g.clone() };
    let template5 = &t5.tw.graph;
    for (tv, &hv) in map.iter().enumerate() {
        if in5[tv] && host.degree(hv) != template5.degree(tv) {
            return Err(KernelError::InvalidOccurrence(format!(
                "interior vertex {hv} has neighbours outside the tube"
            )));
        }
    }

    // boundary role in T'_4 of each boundary vertex of T'_5, and back
    let mut role = vec![usize::MAX; template5.n()];
    for (c5, c4) in t5.tw.end_cycles.iter().zip(t4.end_cycles.iter()) {
        for (&a, &b) in c5.iter().zip(c4.iter()) {
            role[a] = b;
        }
    }
    let mut b = host.builder();
    let mut new_id = vec![usize::MAX; t4.graph.n()];
    for (t5v, r) in role.iter().enumerate().filter(|(_, r)| **r != usize::MAX) {
        new_id[*r] = map[t5v];
    }
    for v in 0..t4.graph.n() {
        if in4[v] {
            new_id[v] = b.add_vertex();
        }
    }
    for tv in (0..template5.n()).filter(|&v| !in5[v]) {
        let hv = map[tv];
        let old_block = interior_block(template5.neighbours(tv), &in5).expect("template blocks are contiguous");
        let new_block = interior_block(t4.graph.neighbours(role[tv]), &in4).expect("template blocks are contiguous");
        if old_block.is_empty() {
            continue;
        }
        let rot = host.neighbours(hv);
        let d = rot.len();
        let first = host.position(hv, map[old_block[0]]).expect("tube edges are host edges");
        for (j, &u) in old_block.iter().enumerate() {
            if rot[(first + j) % d] != map[u] {
                return Err(KernelError::InvalidOccurrence(format!(
                    "host rotation at {hv} does not match the tube drawing"
                )));
            }
        }
        let mut new_rot: Vec<usize> = new_block.iter().map(|&u| new_id[u]).collect();
        new_rot.extend((old_block.len()..d).map(|j| rot[(first + j) % d]));
        b.set_rotation(hv, new_rot);
    }
    for v in (0..t4.graph.n()).filter(|&v| in4[v]) {
        b.set_rotation(new_id[v], t4.graph.neighbours(v).iter().map(|&u| new_id[u]).collect());
    }
    let mut removed: Vec<usize> = (0..template5.n()).filter(|&v| in5[v]).map(|v| map[v]).collect();
    for &v in &removed {
        b.set_rotation(v, Vec::new());
    }
    let built = b
        .build()
        .map_err(|e| KernelError::InvalidOccurrence(format!("replacement is not plane: {e}")))?;
    let mut gone = vec![false; built.n()];
    for &v in &removed {
        gone[v] = true;
    }
    let (mut out, remap) = built.remove_vertices(&gone);
    if tube.mirrored {
        out = out.mirrored();
    }
    let added = (0..t4.graph.n())
        .filter(|&v| in4[v])
        .map(|v| remap[new_id[v]].expect("new vertices survive"))
        .collect();
    removed.sort_unstable();
    let step = ReductionStep {
        tube_vertices: map.clone(),
        removed,
        added,
        n_before: g.n(),
        n_after: out.n(),
        edges_before: g.edge_count(),
        edges_after: out.edge_count(),
    };
    Ok((out, step))
}

fn reduce_with(
    g: &PlaneGraph,
    mut find: impl FnMut(&PlaneGraph) -> Option<TubeOccurrence>,
) -> Result<(PlaneGraph, ReductionReport), KernelError> {
    check_triangle_free(g)?;
    let mut cur = g.clone();
    let mut steps = Vec::new();
    while let Some(tube) = find(&cur) {
        let (next, step) = single_step_reduce(&cur, &tube)?;
        steps.push(step);
        cur = next;
    }
    let report = ReductionReport {
        steps,
        initial_n: g.n(),
        final_n: cur.n(),
        initial_edges: g.edge_count(),
        final_edges: cur.edge_count(),
    };
    Ok((cur, report))
}

/// Applies single-step reductions until no clean 5-tube remains.
pub fn tw_reduce(g: &PlaneGraph) -> Result<(PlaneGraph, ReductionReport), KernelError> {
    reduce_with(g, |h| search(h, 5, None))
}

/// As [`tw_reduce`], picking each tube with a randomized scan order.
pub fn tw_reduce_shuffled<R: Rng>(g: &PlaneGraph, rng: &mut R) -> Result<(PlaneGraph, ReductionReport), KernelError> {
    reduce_with(g, |h| {
        let mut shuffle = |faces: &mut Vec<&Face>| faces.shuffle(rng);
        search(h, 5, Some(&mut shuffle))
    })
}
