//! Thomas-Walls graphs, their reduced and patched variants, the tight
//! Steinberg-Tovey graphs, and the four canonical 3-colourings of reduced
//! Thomas-Walls graphs.
//!
//! Vertex layout of the canonical drawing: `K_4` is `a=0, b=1, c=2, d=3`;
//! step `i >= 1` adds `x = 3i+1`, `y = 3i+2`, `z = 3i+3`. Step `i` splits the
//! active edge `pq`, whose two triangles are `pqr` and `pqs`; the new active
//! edge is `yz` with triangles `yzx` and `yzq`.

use std::collections::HashSet;

use thiserror::Error;

use crate::plane_graph::{Dart, EmbeddingBuilder, GraphError, PlaneGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwError {
    #[error("family index must be at least 1")]
    BadIndex,
    #[error("expected a reduced Thomas-Walls graph")]
    WrongKind,
    #[error("vertices {0} and {1} of the patching set are adjacent")]
    NotIndependent(usize, usize),
    #[error("vertex {vertex} has degree {degree}, patching needs degree 3")]
    WrongDegree { vertex: usize, degree: usize },
    #[error("patch #{0} is not a valid patch")]
    InvalidPatch(usize),
    #[error("vertex {0} lies on an end 4-cycle and cannot be patched")]
    EndCycleVertex(usize),
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwKind {
    ThomasWalls,
    Reduced,
    Patched,
}

/// One inductive step: the active edge `pq` (triangles `pqr`, `pqs`) is
/// replaced by the new vertices `x ~ p` and `y, z ~ q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TubeStep {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub s: usize,
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

/// A Thomas-Walls graph together with its interface pairs and end 4-cycles.
/// Each end cycle is listed as `u1 u2 u3 u4` with `(u1, u3)` the interface pair.
#[derive(Clone, Debug)]
pub struct TwGraph {
    pub graph: PlaneGraph,
    pub k: usize,
    pub interface_pairs: [(usize, usize); 2],
    pub end_cycles: [[usize; 4]; 2],
    pub kind: TwKind,
    pub steps: Vec<TubeStep>,
}

struct Construction {
    builder: EmbeddingBuilder,
    steps: Vec<TubeStep>,
    // current active edge (p, q) and its triangle apexes (r, s)
    active: (usize, usize, usize, usize),
}

fn construct(k: usize) -> Construction {
    // rotation invariant for the active edge: at p the order is r, q, s and
    // at q it is s, p, r
    let builder = EmbeddingBuilder::from_rotation(vec![vec![1, 2, 3], vec![2, 0, 3], vec![3, 0, 1], vec![0, 2, 1]]);
    let mut c = Construction {
        builder,
        steps: Vec::new(),
        active: (0, 2, 1, 3),
    };
    for _ in 1..k {
        let (p, q, r, s) = c.active;
        let x = c.builder.add_vertex();
        let y = c.builder.add_vertex();
        let z = c.builder.add_vertex();
        c.builder.replace(p, q, &[x]);
        c.builder.replace(q, p, &[z, y]);
        c.builder.set_rotation(x, vec![p, y, z]);
        c.builder.set_rotation(y, vec![x, q, z]);
        c.builder.set_rotation(z, vec![q, x, y]);
        c.steps.push(TubeStep { p, q, r, s, x, y, z });
        c.active = (y, z, q, x);
    }
    c
}

/// The Thomas-Walls graph `T_k` (`T_1 = K_4`), with `3k+1` vertices and `5k+1` edges.
pub fn thomas_walls(k: usize) -> Result<TwGraph, TwError> {
    if k == 0 {
        return Err(TwError::BadIndex);
    }
    let c = construct(k);
    let (p, q, r, s) = c.active;
    let (interface_pairs, end_cycles) = if k == 1 {
        ([(0, 2), (1, 3)], [[0, 1, 2, 3], [1, 2, 3, 0]])
    } else {
        ([(1, 3), (p, q)], [[1, 0, 3, 2], [p, r, q, s]])
    };
    Ok(TwGraph {
        graph: c.builder.build()?,
        k,
        interface_pairs,
        end_cycles,
        kind: TwKind::ThomasWalls,
        steps: c.steps,
    })
}

/// The reduced Thomas-Walls graph `T'_k`: `T_k` minus both interface-pair edges.
/// `T'_1` is the 4-cycle `a b c d` whose two diagonals are the interface pairs.
pub fn reduced_thomas_walls(k: usize) -> Result<TwGraph, TwError> {
    let mut t = thomas_walls(k)?;
    let mut b = t.graph.builder();
    for &(u, v) in &t.interface_pairs {
        b.remove_edge(u, v);
    }
    t.graph = b.build()?;
    t.kind = TwKind::Reduced;
    Ok(t)
}

fn corner_into(walk: &[Dart], v: usize) -> Option<Dart> {
    walk.iter().copied().find(|d| d.1 == v)
}

/// The Steinberg-Tovey graph: `T'_k` with each interface pair joined by a
/// path of three edges, drawn inside the end 4-face of that pair. Has
/// `3k + 5` vertices.
pub fn steinberg_tovey(k: usize) -> Result<PlaneGraph, TwError> {
    let t = reduced_thomas_walls(k)?;
    let mut g = t.graph;
    for &(u, w) in &t.interface_pairs {
        let face = g
            .faces()
            .into_iter()
            .find(|f| {
                let vs = f.vertices();
                f.is_k_face(4) && vs.contains(&u) && vs.contains(&w)
            })
            .expect("interface pair lies on an end 4-face");
        let cu = corner_into(face.darts(), u).unwrap();
        let cw = corner_into(face.darts(), w).unwrap();
        let mut b = g.builder();
        b.add_path(cu, cw, 2);
        g = b.build()?;
    }
    Ok(g)
}

/// A patch: a plane graph whose outer face is the induced 6-cycle
/// `a a' b b' c c'` (listed in `outer`), all other faces 4-faces, and no
/// vertex adjacent to all of the interface vertices `a, b, c`.
#[derive(Clone, Debug)]
pub struct Patch {
    pub graph: PlaneGraph,
    pub outer: [usize; 6],
    pub interface: [usize; 3],
}

/// 6-cycle `0..6` plus a centre `6` adjacent to `a' = 1`, `b' = 3`, `c' = 5`.
pub fn minimal_patch() -> Patch {
    let rotation = vec![
        vec![5, 1],
        vec![0, 6, 2],
        vec![1, 3],
        vec![2, 6, 4],
        vec![3, 5],
        vec![4, 6, 0],
        vec![1, 5, 3],
    ];
    Patch {
        graph: PlaneGraph::from_rotation(rotation).expect("minimal patch is plane"),
        outer: [0, 1, 2, 3, 4, 5],
        interface: [0, 2, 4],
    }
}

/// The minimal patch with each of its three 4-faces split by a vertex joined
/// to the centre and to the opposite interface vertex.
pub fn ten_vertex_patch() -> Patch {
    let base = minimal_patch();
    let mut b = base.graph.builder();
    for (iface, prev, centre_after) in [(2usize, 1usize, 3usize), (4, 3, 5), (0, 5, 1)] {
        // the face a'-b-b'-o is entered at b from a' and at o from b'
        let w = b.add_vertex();
        b.insert_after(iface, prev, w);
        b.insert_after(6, centre_after, w);
        b.set_rotation(w, vec![iface, 6]);
    }
    Patch {
        graph: b.build().expect("ten-vertex patch is plane"),
        outer: base.outer,
        interface: base.interface,
    }
}

pub fn patch_library() -> Vec<Patch> {
    vec![minimal_patch(), ten_vertex_patch()]
}

pub fn validate_patch(p: &Patch) -> bool {
    let g = &p.graph;
    let n = g.n();
    if p.outer.iter().any(|&v| v >= n) {
        return false;
    }
    let outer_set: HashSet<usize> = p.outer.iter().copied().collect();
    if outer_set.len() != 6 || p.interface != [p.outer[0], p.outer[2], p.outer[4]] {
        return false;
    }
    // induced 6-cycle
    for i in 0..6 {
        for j in i + 1..6 {
            let consecutive = j == i + 1 || (i == 0 && j == 5);
            if g.has_edge(p.outer[i], p.outer[j]) != consecutive {
                return false;
            }
        }
    }
    if !g.is_triangle_free() {
        return false;
    }
    let faces = g.face_map();
    if !faces.is_face_cycle(&p.outer) {
        return false;
    }
    let mut outer_seen = false;
    for f in &faces.faces {
        let vs: HashSet<usize> = f.vertices().into_iter().collect();
        if f.len() == 6 && vs == outer_set && !outer_seen {
            outer_seen = true;
            continue;
        }
        if !f.is_k_face(4) {
            return false;
        }
    }
    let [a, b, c] = p.interface;
    (0..n).all(|v| !(g.has_edge(v, a) && g.has_edge(v, b) && g.has_edge(v, c)))
}

/// Result of patching: the new graph and where the old vertices went
/// (patched vertices map to `None`).
#[derive(Clone, Debug)]
pub struct Patching {
    pub graph: PlaneGraph,
    pub old_to_new: Vec<Option<usize>>,
}

/// Replaces every vertex `v` of the (independent, degree-3) set by a 6-cycle
/// through its neighbours with the assigned patch drawn inside.
pub fn apply_patching(g: &PlaneGraph, assignments: &[(usize, &Patch)]) -> Result<Patching, TwError> {
    let set: HashSet<usize> = assignments.iter().map(|(v, _)| *v).collect();
    for (i, &(v, patch)) in assignments.iter().enumerate() {
        if v >= g.n() {
            return Err(TwError::VertexOutOfRange(v));
        }
        if g.degree(v) != 3 {
            return Err(TwError::WrongDegree {
                vertex: v,
                degree: g.degree(v),
            });
        }
        if let Some(&u) = g.neighbours(v).iter().find(|u| set.contains(u)) {
            return Err(TwError::NotIndependent(v.min(u), v.max(u)));
        }
        if !validate_patch(patch) {
            return Err(TwError::InvalidPatch(i));
        }
    }
    let mut b = g.builder();
    for &(v, patch) in assignments {
        let [pa, pa2, pb, pb2, pc, pc2] = patch.outer;
        let pg = if patch.graph.succ(pa2, pa) == pb {
            patch.graph.clone()
        } else {
            patch.graph.mirrored()
        };
        let host_nbrs = g.neighbours(v).to_vec();
        let mut map = vec![usize::MAX; pg.n()];
        map[pa] = host_nbrs[0];
        map[pb] = host_nbrs[1];
        map[pc] = host_nbrs[2];
        for slot in map.iter_mut() {
            if *slot == usize::MAX {
                *slot = b.add_vertex();
            }
        }
        for t in 0..pg.n() {
            if t == pa || t == pb || t == pc {
                continue;
            }
            b.set_rotation(map[t], pg.neighbours(t).iter().map(|&u| map[u]).collect());
        }
        for (iface, first) in [(pa, pa2), (pb, pb2), (pc, pc2)] {
            let rot = pg.neighbours(iface);
            let start = rot.iter().position(|&u| u == first).unwrap();
            let seq: Vec<usize> = (0..rot.len()).map(|i| map[rot[(start + i) % rot.len()]]).collect();
            b.replace(map[iface], v, &seq);
        }
        b.set_rotation(v, Vec::new());
    }
    let built = b.build()?;
    let mut remove = vec![false; built.n()];
    for &(v, _) in assignments {
        remove[v] = true;
    }
    let (graph, full_map) = built.remove_vertices(&remove);
    let old_to_new = full_map[..g.n()].to_vec();
    Ok(Patching { graph, old_to_new })
}

/// `T'_k` with the given vertices patched. Interface pairs and end cycles
/// are carried over; end-cycle vertices cannot be patched.
pub fn patched_thomas_walls(k: usize, assignments: &[(usize, &Patch)]) -> Result<TwGraph, TwError> {
    let t = reduced_thomas_walls(k)?;
    for &(v, _) in assignments {
        if t.end_cycles.iter().any(|c| c.contains(&v)) {
            return Err(TwError::EndCycleVertex(v));
        }
    }
    let patched = apply_patching(&t.graph, assignments)?;
    let m = |v: usize| patched.old_to_new[v].expect("end-cycle vertices survive patching");
    Ok(TwGraph {
        graph: patched.graph,
        k,
        interface_pairs: t.interface_pairs.map(|(u, v)| (m(u), m(v))),
        end_cycles: t.end_cycles.map(|c| c.map(m)),
        kind: TwKind::Patched,
        steps: Vec::new(),
    })
}

/// The default member of the patched family: `T'_k` (`k >= 3`) with its
/// lowest-numbered interior degree-3 vertex patched by the minimal patch.
pub fn default_patched(k: usize) -> Result<TwGraph, TwError> {
    let t = reduced_thomas_walls(k)?;
    let v = (0..t.graph.n())
        .find(|&v| t.graph.degree(v) == 3 && !t.end_cycles.iter().any(|c| c.contains(&v)))
        .ok_or(TwError::BadIndex)?;
    let patch = minimal_patch();
    patched_thomas_walls(k, &[(v, &patch)])
}

/// In a 3-colouring of a 5-cycle, the index of the unique vertex whose
/// colour appears exactly once, or `None` if the colouring is not proper.
pub fn pivot(colours: [u8; 5]) -> Option<usize> {
    for i in 0..5 {
        if colours[i] == colours[(i + 1) % 5] {
            return None;
        }
    }
    let once: Vec<usize> = (0..5)
        .filter(|&i| colours.iter().filter(|&&c| c == colours[i]).count() == 1)
        .collect();
    (once.len() == 1).then(|| once[0])
}

/// Four 3-colourings (colours `1..=3`) of a reduced Thomas-Walls graph such
/// that in every 5-face exactly one vertex is never the pivot, and every
/// degree-3 vertex sees each pair of its neighbours monochromatic (with the
/// third neighbour different) in at least one of them.
///
/// Built inductively: colourings 1 and 2 separate the active pair `p, q`,
/// colourings 3 and 4 separate the opposite pair `r, s`.
pub fn four_colourings(t: &TwGraph) -> Result<[Vec<u8>; 4], TwError> {
    if t.kind != TwKind::Reduced || t.steps.len() + 1 != t.k {
        return Err(TwError::WrongKind);
    }
    let n = t.graph.n();
    let mut cols = [vec![0u8; n], vec![0u8; n], vec![0u8; n], vec![0u8; n]];
    // base 4-cycle a b c d: a, c differ in 1 and 2; b, d differ in 3 and 4
    let base: [[u8; 4]; 4] = [[1, 2, 3, 2], [1, 2, 3, 2], [1, 2, 1, 3], [1, 2, 1, 3]];
    for (col, b) in cols.iter_mut().zip(base) {
        col[..4].copy_from_slice(&b);
    }
    for st in &t.steps {
        let TubeStep { p, q, r, s, x, y, z } = *st;
        let c = &mut cols[0];
        (c[x], c[y], c[z]) = (c[q], c[p], c[r]);
        let c = &mut cols[1];
        (c[x], c[y], c[z]) = (c[q], c[r], c[p]);
        let c = &mut cols[2];
        (c[x], c[y], c[z]) = (c[r], c[s], c[s]);
        let c = &mut cols[3];
        (c[x], c[y], c[z]) = (c[s], c[r], c[r]);
    }
    Ok(cols)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_proper(g: &PlaneGraph, col: &[u8]) -> bool {
        g.edges().iter().all(|&(u, v)| col[u] != col[v]) && col.iter().all(|&c| (1..=3).contains(&c))
    }

    #[test]
    fn small_thomas_walls_counts() {
        let t1 = thomas_walls(1).unwrap();
        assert_eq!((t1.graph.n(), t1.graph.edge_count()), (4, 6));
        assert_eq!(t1.graph.face_census().get(&3), Some(&4));
        let t2 = thomas_walls(2).unwrap();
        assert_eq!((t2.graph.n(), t2.graph.edge_count()), (7, 11));
        let t4 = thomas_walls(4).unwrap();
        assert_eq!((t4.graph.n(), t4.graph.edge_count()), (13, 21));
    }

    #[test]
    fn interface_edges_lie_in_two_triangles() {
        for k in 1..6 {
            let t = thomas_walls(k).unwrap();
            for &(u, v) in &t.interface_pairs {
                assert!(t.graph.has_edge(u, v));
                let common = t
                    .graph
                    .neighbours(u)
                    .iter()
                    .filter(|w| t.graph.has_edge(v, **w))
                    .count();
                assert_eq!(common, 2, "k={k} edge {u}{v}");
            }
            for st in &t.steps {
                // the edge split at each step had its two triangles in place
                assert!(t.graph.has_edge(st.p, st.r) || st.r == st.q);
            }
        }
    }

    #[test]
    fn reduced_one_is_the_four_cycle() {
        let t = reduced_thomas_walls(1).unwrap();
        assert_eq!(t.graph.edges(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert_eq!(t.interface_pairs, [(0, 2), (1, 3)]);
        assert_eq!(t.graph.face_census().get(&4), Some(&2));
    }

    #[test]
    fn reduced_five_census() {
        let t = reduced_thomas_walls(5).unwrap();
        assert_eq!((t.graph.n(), t.graph.edge_count()), (16, 24));
        let census = t.graph.face_census();
        assert_eq!(census.get(&4), Some(&2));
        assert_eq!(census.get(&5), Some(&8));
        assert!(t.graph.is_triangle_free());
    }

    #[test]
    fn steinberg_tovey_sizes() {
        assert_eq!(steinberg_tovey(1).unwrap().n(), 8);
        assert_eq!(steinberg_tovey(2).unwrap().n(), 11);
        assert_eq!(steinberg_tovey(3).unwrap().n(), 14);
        for k in 1..8 {
            let g = steinberg_tovey(k).unwrap();
            assert!(g.is_triangle_free(), "k={k}");
        }
    }

    #[test]
    fn patch_library_is_valid() {
        for p in patch_library() {
            assert!(validate_patch(&p));
        }
        assert_eq!(minimal_patch().graph.n(), 7);
        assert_eq!(ten_vertex_patch().graph.n(), 10);
        assert_eq!(ten_vertex_patch().graph.face_census().get(&4), Some(&6));
    }

    #[test]
    fn bare_hexagon_is_not_a_patch() {
        let rotation = (0..6).map(|i| vec![(i + 5) % 6, (i + 1) % 6]).collect();
        let p = Patch {
            graph: PlaneGraph::from_rotation(rotation).unwrap(),
            outer: [0, 1, 2, 3, 4, 5],
            interface: [0, 2, 4],
        };
        assert!(!validate_patch(&p));
    }

    #[test]
    fn patch_with_common_neighbour_of_interface_is_rejected() {
        // centre adjacent to a, b, c instead of a', b', c'
        let rotation = vec![
            vec![5, 6, 1],
            vec![0, 2],
            vec![1, 6, 3],
            vec![2, 4],
            vec![3, 6, 5],
            vec![4, 0],
            vec![0, 4, 2],
        ];
        let p = Patch {
            graph: PlaneGraph::from_rotation(rotation).unwrap(),
            outer: [0, 1, 2, 3, 4, 5],
            interface: [0, 2, 4],
        };
        assert!(!validate_patch(&p));
    }

    #[test]
    fn patching_grows_by_patch_interior_plus_two() {
        let t = reduced_thomas_walls(4).unwrap();
        let v = 4; // x_1, interior degree 3
        assert_eq!(t.graph.degree(v), 3);
        for (patch, growth) in [(minimal_patch(), 3), (ten_vertex_patch(), 6)] {
            let out = apply_patching(&t.graph, &[(v, &patch)]).unwrap();
            assert_eq!(out.graph.n(), t.graph.n() + growth);
            assert!(out.graph.is_triangle_free());
            assert_eq!(out.old_to_new[v], None);
        }
    }

    #[test]
    fn empty_patching_is_identity() {
        let t = reduced_thomas_walls(3).unwrap();
        let out = apply_patching(&t.graph, &[]).unwrap();
        assert_eq!(out.graph, t.graph);
    }

    #[test]
    fn patching_errors() {
        let t = reduced_thomas_walls(4).unwrap();
        let p = minimal_patch();
        assert_eq!(
            apply_patching(&t.graph, &[(1, &p)]).unwrap_err(),
            TwError::WrongDegree { vertex: 1, degree: 2 }
        );
        // x_1 = 4 and y_1 = 5 are adjacent; y_1 has degree 3 for k >= 3
        assert_eq!(t.graph.degree(5), 3);
        assert_eq!(
            apply_patching(&t.graph, &[(4, &p), (5, &p)]).unwrap_err(),
            TwError::NotIndependent(4, 5)
        );
        let mut bad = minimal_patch();
        bad.interface = [1, 3, 5];
        assert_eq!(
            apply_patching(&t.graph, &[(4, &bad)]).unwrap_err(),
            TwError::InvalidPatch(0)
        );
    }

    #[test]
    fn patched_graph_keeps_interface_pairs() {
        let t = default_patched(4).unwrap();
        assert!(t.graph.is_triangle_free());
        for &(u, v) in &t.interface_pairs {
            assert_eq!(t.graph.degree(u), 2);
            assert_eq!(t.graph.degree(v), 2);
        }
        assert_eq!(t.graph.n(), 13 + 3);
    }

    #[test]
    fn pivot_of_five_cycle() {
        assert_eq!(pivot([1, 2, 1, 2, 3]), Some(4));
        assert_eq!(pivot([1, 2, 3, 1, 2]), Some(2));
        assert_eq!(pivot([1, 1, 2, 3, 2]), None);
    }

    #[test]
    fn four_colourings_base_case() {
        let t = reduced_thomas_walls(1).unwrap();
        let cols = four_colourings(&t).unwrap();
        for (i, c) in cols.iter().enumerate() {
            assert!(is_proper(&t.graph, c));
            if i < 2 {
                assert_ne!(c[0], c[2]);
            } else {
                assert_ne!(c[1], c[3]);
            }
        }
    }

    #[test]
    fn four_colourings_separate_end_pairs() {
        for k in 2..10 {
            let t = reduced_thomas_walls(k).unwrap();
            let cols = four_colourings(&t).unwrap();
            let (p, q) = t.interface_pairs[1];
            let [_, r, _, s] = t.end_cycles[1];
            for (i, c) in cols.iter().enumerate() {
                assert!(is_proper(&t.graph, c), "k={k} colouring {i}");
                if i < 2 {
                    assert_ne!(c[p], c[q]);
                } else {
                    assert_ne!(c[r], c[s]);
                }
            }
        }
    }

    #[test]
    fn four_colourings_reject_other_kinds() {
        let t = thomas_walls(3).unwrap();
        assert_eq!(four_colourings(&t).unwrap_err(), TwError::WrongKind);
    }
}
