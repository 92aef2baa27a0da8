//! Colourings by subsets of `[c]`: validation, the margin of a colouring of
//! a 4-cycle and its nine-set decomposition, the greedy colouring with large
//! margins on 4-faces, and conversion to independent sets.
//!
//! Colours are the integers `1..=c`.

mod bound;
mod extension;

use std::collections::BTreeSet;

use thiserror::Error;

use crate::plane_graph::{GraphError, PlaneGraph, Subgraph};

pub use bound::{indep_bound_bipartite, IndepBound};
pub use extension::{extend_3colouring, extend_precolouring, mono_extend, ExtensionError, EXTENSION_VERTEX_CAP};

pub type ColourSet = BTreeSet<u32>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColouringError {
    #[error("vertex {vertex} has colour {colour}, outside 1..={c}")]
    ColourOutOfRange { vertex: usize, colour: u32, c: u32 },
    #[error("colouring covers {got} vertices, the graph has {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("vertex {vertex} has {size} colours, expected {expected}")]
    NotUniform {
        vertex: usize,
        size: usize,
        expected: usize,
    },
    #[error("{c} colours cannot form a (3m:m)-colouring")]
    NotThreeM { c: u32 },
    #[error("adjacent vertices {u} and {v} share a colour")]
    NotProper { u: usize, v: usize },
    #[error("vertex {vertex} has {back_degree} earlier neighbours in the augmented graph, more than 7")]
    DegeneracyViolation { vertex: usize, back_degree: usize },
    #[error("subgraph is not bipartite")]
    NotBipartite,
    #[error("face of length {len} where a 4-face is required")]
    NotQuadrangulated { len: usize },
    #[error("the designated outer face is not a face of the subgraph or is full")]
    BadOuterFace,
    #[error("a 3-colouring of a 4-face boundary does not extend into the face")]
    ExtensionFailed,
    #[error("independent set of size {got} is below the bound {need}")]
    BoundNotMet { got: usize, need: usize },
    #[error("set is not independent in the expected graph")]
    NotIndependent,
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Extension(#[from] ExtensionError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A colouring of the vertices `0..n` by subsets of `[c]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetColouring {
    c: u32,
    sets: Vec<ColourSet>,
}

fn lowest(set: &ColourSet, k: usize) -> ColourSet {
    set.iter().take(k).copied().collect()
}

impl SetColouring {
    pub fn new(c: u32, sets: Vec<ColourSet>) -> Result<SetColouring, ColouringError> {
        for (vertex, s) in sets.iter().enumerate() {
            if let Some(&colour) = s.iter().find(|&&x| x == 0 || x > c) {
                return Err(ColouringError::ColourOutOfRange { vertex, colour, c });
            }
        }
        Ok(SetColouring { c, sets })
    }

    /// Singleton sets from an ordinary colouring with colours `1..=c`.
    pub fn from_colouring(c: u32, colours: &[u8]) -> Result<SetColouring, ColouringError> {
        SetColouring::new(c, colours.iter().map(|&x| ColourSet::from([x as u32])).collect())
    }

    /// Replaces colour `i` of an ordinary colouring by the block
    /// `{(i-1)a + 1, ..., ia}`, giving a `(ca : a)`-colouring.
    pub fn replicate(c: u32, colours: &[u8], a: u32) -> Result<SetColouring, ColouringError> {
        let sets = colours
            .iter()
            .map(|&x| ((x as u32 - 1) * a + 1..=x as u32 * a).collect())
            .collect();
        SetColouring::new(c * a, sets)
    }

    pub fn c(&self) -> u32 {
        self.c
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn set(&self, v: usize) -> &ColourSet {
        &self.sets[v]
    }

    pub fn sets(&self) -> &[ColourSet] {
        &self.sets
    }

    /// `Σ_v |φ(v)|`.
    pub fn total(&self) -> usize {
        self.sets.iter().map(|s| s.len()).sum()
    }

    /// The common set size, if all sets have the same size.
    pub fn uniform_size(&self) -> Option<usize> {
        let first = self.sets.first()?.len();
        self.sets.iter().all(|s| s.len() == first).then_some(first)
    }

    /// First violation of coverage, properness or (when requested) uniformity.
    pub fn check(&self, g: &PlaneGraph, uniform: Option<usize>) -> Result<(), ColouringError> {
        if self.sets.len() != g.n() {
            return Err(ColouringError::WrongLength {
                expected: g.n(),
                got: self.sets.len(),
            });
        }
        if let Some(a) = uniform {
            if let Some(v) = (0..g.n()).find(|&v| self.sets[v].len() != a) {
                return Err(ColouringError::NotUniform {
                    vertex: v,
                    size: self.sets[v].len(),
                    expected: a,
                });
            }
        }
        for (u, v) in g.edges() {
            if !self.sets[u].is_disjoint(&self.sets[v]) {
                return Err(ColouringError::NotProper { u, v });
            }
        }
        Ok(())
    }

    pub fn validate(&self, g: &PlaneGraph, uniform: Option<usize>) -> bool {
        self.check(g, uniform).is_ok()
    }

    /// Text form: `cols <c>` then `<v>: <sorted colours>` per vertex.
    pub fn to_text(&self) -> String {
        let mut out = format!("cols {}\n", self.c);
        for (v, s) in self.sets.iter().enumerate() {
            out.push_str(&format!("{v}:"));
            for x in s {
                out.push_str(&format!(" {x}"));
            }
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<SetColouring, ColouringError> {
        let syntax = |line: usize, m: &str| ColouringError::Syntax {
            line,
            message: m.to_string(),
        };
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| syntax(1, "empty input"))?;
        let c: u32 = header
            .strip_prefix("cols ")
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| syntax(1, "expected `cols <c>`"))?;
        let mut sets = Vec::new();
        for (i, raw) in lines.enumerate() {
            let line = i + 2;
            let (id, rest) = raw
                .split_once(':')
                .ok_or_else(|| syntax(line, "expected `<v>: <colours>`"))?;
            if id.parse::<usize>().ok() != Some(i) {
                return Err(syntax(line, "vertex ids must run 0, 1, 2, ..."));
            }
            let colours: Vec<u32> = rest
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| syntax(line, "bad colour")))
                .collect::<Result<_, _>>()?;
            if colours.windows(2).any(|w| w[0] >= w[1]) {
                return Err(syntax(line, "colours must be strictly increasing"));
            }
            sets.push(colours.into_iter().collect());
        }
        SetColouring::new(c, sets)
    }
}

fn three_m(c: u32) -> Result<usize, ColouringError> {
    if c == 0 || !c.is_multiple_of(3) {
        return Err(ColouringError::NotThreeM { c });
    }
    Ok((c / 3) as usize)
}

fn cycle_sets(col: &SetColouring, cycle: [usize; 4]) -> Result<([&ColourSet; 4], usize), ColouringError> {
    let m = three_m(col.c)?;
    let sets = cycle.map(|v| col.set(v));
    for (i, s) in sets.iter().enumerate() {
        if s.len() != m {
            return Err(ColouringError::NotUniform {
                vertex: cycle[i],
                size: s.len(),
                expected: m,
            });
        }
    }
    for i in 0..4 {
        let j = (i + 1) % 4;
        if !sets[i].is_disjoint(sets[j]) {
            return Err(ColouringError::NotProper {
                u: cycle[i],
                v: cycle[j],
            });
        }
    }
    Ok((sets, m))
}

fn margin_of(sets: [&ColourSet; 4], c: u32) -> usize {
    let union: ColourSet = sets.iter().flat_map(|s| s.iter().copied()).collect();
    let d13 = sets[0].difference(sets[2]).count();
    let d24 = sets[1].difference(sets[3]).count();
    d13.min(d24).min(c as usize - union.len())
}

/// The margin `min(|φ(v1)∖φ(v3)|, |φ(v2)∖φ(v4)|, 3m - |∪ φ(v_i)|)` of a
/// `(3m:m)`-colouring on the 4-cycle `v1 v2 v3 v4`.
pub fn margin(col: &SetColouring, cycle: [usize; 4]) -> Result<usize, ColouringError> {
    let (sets, _) = cycle_sets(col, cycle)?;
    Ok(margin_of(sets, col.c))
}

/// Nine pairwise disjoint colour sets expressing a `(3m:m)`-colouring of a
/// 4-cycle as a union of the 3-colourings `(A1,A2,A1,A3)`, `(B1,B2,B3,B2)`
/// and `(C1,C2,C1,C2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourCycleDecomposition {
    pub a: [ColourSet; 3],
    pub b: [ColourSet; 3],
    pub c: [ColourSet; 3],
}

impl FourCycleDecomposition {
    /// `class[i]` for the classes `A`, `B`, `C` (`class` in `0..3`) and colour `i` in `1..=3`.
    pub fn class(&self, class: usize, colour: u8) -> &ColourSet {
        let sets = [&self.a, &self.b, &self.c][class];
        &sets[colour as usize - 1]
    }

    /// Sizes of the three classes.
    pub fn class_sizes(&self) -> [usize; 3] {
        [self.a[0].len(), self.b[0].len(), self.c[0].len()]
    }

    /// Checks disjointness, equal sizes within each class, the four union
    /// equations and that every class has at least `min_size` colours.
    pub fn verify(&self, sets: [&ColourSet; 4], min_size: usize) -> Result<(), String> {
        let all: Vec<&ColourSet> = self.a.iter().chain(&self.b).chain(&self.c).collect();
        for i in 0..9 {
            for j in i + 1..9 {
                if !all[i].is_disjoint(all[j]) {
                    return Err(format!("sets {i} and {j} intersect"));
                }
            }
        }
        for (name, class) in [("A", &self.a), ("B", &self.b), ("C", &self.c)] {
            if class.iter().any(|s| s.len() != class[0].len()) {
                return Err(format!("class {name} has unequal sizes"));
            }
            if class[0].len() < min_size {
                return Err(format!("class {name} is smaller than {min_size}"));
            }
        }
        let u = |x: &ColourSet, y: &ColourSet, z: &ColourSet| -> ColourSet { x | &(y | z) };
        let expected = [
            u(&self.a[0], &self.b[0], &self.c[0]),
            u(&self.a[1], &self.b[1], &self.c[1]),
            u(&self.a[0], &self.b[2], &self.c[0]),
            u(&self.a[2], &self.b[1], &self.c[1]),
        ];
        for i in 0..4 {
            if &expected[i] != sets[i] {
                return Err(format!("union equation for v{} fails", i + 1));
            }
        }
        Ok(())
    }
}

/// The decomposition of a proper `(3m:m)`-colouring of a 4-cycle given by
/// its four colour sets. `A1` takes the lowest colours of `φ(v1) ∩ φ(v3)`,
/// `B2` the lowest colours of `φ(v2) ∩ φ(v4)`.
pub fn decompose_sets(sets: [&ColourSet; 4], c: u32) -> FourCycleDecomposition {
    let all: ColourSet = (1..=c).collect();
    let union: ColourSet = sets.iter().flat_map(|s| s.iter().copied()).collect();
    let a2: ColourSet = sets[1] - sets[3];
    let a3: ColourSet = sets[3] - sets[1];
    let b1: ColourSet = sets[0] - sets[2];
    let b3: ColourSet = sets[2] - sets[0];
    let c3: ColourSet = &all - &union;
    let common13: ColourSet = sets[0] & sets[2];
    let common24: ColourSet = sets[1] & sets[3];
    let a1 = lowest(&common13, a3.len());
    let c1: ColourSet = &common13 - &a1;
    let b2 = lowest(&common24, b3.len());
    let c2: ColourSet = &common24 - &b2;
    FourCycleDecomposition {
        a: [a1, a2, a3],
        b: [b1, b2, b3],
        c: [c1, c2, c3],
    }
}

pub fn decompose_4cycle(col: &SetColouring, cycle: [usize; 4]) -> Result<FourCycleDecomposition, ColouringError> {
    let (sets, _) = cycle_sets(col, cycle)?;
    Ok(decompose_sets(sets, col.c))
}

/// Output of [`margin_colouring`] with the data of the degeneracy ordering.
#[derive(Clone, Debug)]
pub struct MarginColouring {
    pub colouring: SetColouring,
    /// Vertices in colouring order.
    pub order: Vec<usize>,
    /// Earlier neighbours of each vertex in the augmented graph.
    pub back_degree: Vec<usize>,
}

/// The graph plus both diagonals of every 4-face, as sorted adjacency sets.
pub fn diagonal_augmentation(g: &PlaneGraph) -> Vec<BTreeSet<usize>> {
    let mut adj: Vec<BTreeSet<usize>> = (0..g.n()).map(|v| g.neighbours(v).iter().copied().collect()).collect();
    for f in g.faces() {
        if f.is_k_face(4) {
            let w = f.vertices();
            for (x, y) in [(w[0], w[2]), (w[1], w[3])] {
                adj[x].insert(y);
                adj[y].insert(x);
            }
        }
    }
    adj
}

/// Repeated removal of a minimum-degree vertex (lowest id on ties); returns
/// the reversed removal order and each vertex's degree when removed.
fn degeneracy_order(adj: &[BTreeSet<usize>]) -> (Vec<usize>, Vec<usize>) {
    let n = adj.len();
    let mut deg: Vec<usize> = adj.iter().map(|s| s.len()).collect();
    let mut gone = vec![false; n];
    let mut back = vec![0; n];
    let mut removal = Vec::with_capacity(n);
    let mut queue: BTreeSet<(usize, usize)> = (0..n).map(|v| (deg[v], v)).collect();
    while let Some((d, v)) = queue.pop_first() {
        gone[v] = true;
        back[v] = d;
        removal.push(v);
        for &u in &adj[v] {
            if !gone[u] {
                queue.remove(&(deg[u], u));
                deg[u] -= 1;
                queue.insert((deg[u], u));
            }
        }
    }
    removal.reverse();
    (removal, back)
}

/// From a `(3m : m+8b)`-colouring of a triangle-free plane graph, a
/// `(3m:m)`-colouring contained in it pointwise whose restriction to every
/// 4-face has margin at least `b`.
pub fn margin_colouring(
    g: &PlaneGraph,
    col: &SetColouring,
    m: usize,
    b: usize,
) -> Result<MarginColouring, ColouringError> {
    if col.c as usize != 3 * m {
        return Err(ColouringError::NotThreeM { c: col.c });
    }
    col.check(g, Some(m + 8 * b))?;
    let adj = diagonal_augmentation(g);
    let (order, back_degree) = degeneracy_order(&adj);
    if let Some(v) = (0..g.n()).find(|&v| back_degree[v] > 7) {
        return Err(ColouringError::DegeneracyViolation {
            vertex: v,
            back_degree: back_degree[v],
        });
    }
    let s0: ColourSet = (1..=b as u32).collect();
    let mut reserved: Vec<Option<ColourSet>> = vec![None; g.n()];
    let mut sets = vec![ColourSet::new(); g.n()];
    for &v in &order {
        let mut avail: ColourSet = col.set(v) - &s0;
        for u in &adj[v] {
            if let Some(s) = &reserved[*u] {
                avail = &avail - s;
            }
        }
        let si = lowest(&avail, b);
        let rest: ColourSet = &avail - &si;
        let mut chosen = lowest(&rest, m - b);
        chosen.extend(&si);
        debug_assert_eq!(chosen.len(), m);
        sets[v] = chosen;
        reserved[v] = Some(si);
    }
    let colouring = SetColouring { c: col.c, sets };
    Ok(MarginColouring {
        colouring,
        order,
        back_degree,
    })
}

/// Margins of a `(3m:m)`-colouring on every 4-face of `g`.
pub fn face_margins(g: &PlaneGraph, col: &SetColouring) -> Result<Vec<usize>, ColouringError> {
    g.faces()
        .iter()
        .filter(|f| f.is_k_face(4))
        .map(|f| {
            let w = f.vertices();
            margin(col, [w[0], w[1], w[2], w[3]])
        })
        .collect()
}

/// The largest colour class `{v : i ∈ φ(v)}` (lowest colour on ties), as
/// sorted vertex ids together with the colour.
pub fn independent_from_colouring(g: &PlaneGraph, col: &SetColouring) -> (Vec<usize>, u32) {
    let mut best = (Vec::new(), 1);
    for i in 1..=col.c {
        let class: Vec<usize> = (0..g.n()).filter(|&v| col.set(v).contains(&i)).collect();
        if class.len() > best.0.len() {
            best = (class, i);
        }
    }
    best
}

/// `(I ∖ V(F)) ∪ J`, where `F` is the set of vertices of `h` incident with
/// full faces, `I` is independent in `h` and `J` independent in `G - V(h)`.
/// All ids are host ids; the result is sorted.
pub fn glue_independent(h: &Subgraph, i_h: &[usize], j: &[usize]) -> Result<Vec<usize>, ColouringError> {
    let g = h.host();
    let local: Option<Vec<usize>> = i_h.iter().map(|&v| h.to_local(v)).collect();
    match local {
        Some(l) if h.graph().is_independent(&l) => {}
        _ => return Err(ColouringError::NotIndependent),
    }
    if j.iter().any(|&v| v >= g.n() || h.contains_vertex(v)) || !g.is_independent(j) {
        return Err(ColouringError::NotIndependent);
    }
    let f = h.full_face_vertices();
    let mut out: Vec<usize> = i_h
        .iter()
        .copied()
        .filter(|v| !f.contains(v))
        .chain(j.iter().copied())
        .collect();
    out.sort_unstable();
    out.dedup();
    if !g.is_independent(&out) {
        return Err(ColouringError::NotIndependent);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(lists: &[&[u32]]) -> Vec<ColourSet> {
        lists.iter().map(|l| l.iter().copied().collect()).collect()
    }

    fn c4() -> PlaneGraph {
        PlaneGraph::from_rotation(vec![vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]]).unwrap()
    }

    #[test]
    fn validity_examples() {
        let g = c4();
        assert!(SetColouring::from_colouring(3, &[1, 2, 1, 2])
            .unwrap()
            .validate(&g, Some(1)));
        let col = SetColouring::new(6, sets(&[&[1, 2], &[3, 4], &[1, 2], &[3, 4]])).unwrap();
        assert!(col.validate(&g, Some(2)));
        let edge = PlaneGraph::from_rotation(vec![vec![1], vec![0]]).unwrap();
        let col = SetColouring::new(3, sets(&[&[1, 2], &[2, 3]])).unwrap();
        assert!(!col.validate(&edge, None));
    }

    #[test]
    fn margin_examples() {
        let col = SetColouring::new(3, sets(&[&[1], &[2], &[1], &[3]])).unwrap();
        assert_eq!(margin(&col, [0, 1, 2, 3]).unwrap(), 0);
        let col = SetColouring::new(9, sets(&[&[1, 2, 3], &[4, 5, 6], &[1, 2, 7], &[4, 5, 8]])).unwrap();
        assert_eq!(margin(&col, [0, 1, 2, 3]).unwrap(), 1);
        let col = SetColouring::new(6, sets(&[&[1, 2], &[3, 4], &[1, 2], &[3, 4]])).unwrap();
        assert_eq!(margin(&col, [0, 1, 2, 3]).unwrap(), 0);
        let bad = SetColouring::new(6, sets(&[&[1], &[3, 4], &[1, 2], &[3, 4]])).unwrap();
        assert!(matches!(
            margin(&bad, [0, 1, 2, 3]),
            Err(ColouringError::NotUniform { .. })
        ));
    }

    #[test]
    fn decomposition_examples() {
        let col = SetColouring::new(3, sets(&[&[1], &[2], &[1], &[3]])).unwrap();
        let d = decompose_4cycle(&col, [0, 1, 2, 3]).unwrap();
        assert_eq!(d.a, [ColourSet::from([1]), ColourSet::from([2]), ColourSet::from([3])]);
        assert_eq!(d.class_sizes(), [1, 0, 0]);

        let col = SetColouring::new(6, sets(&[&[1, 2], &[3, 4], &[1, 5], &[3, 6]])).unwrap();
        let d = decompose_4cycle(&col, [0, 1, 2, 3]).unwrap();
        assert_eq!(d.a, [ColourSet::from([1]), ColourSet::from([4]), ColourSet::from([6])]);
        assert_eq!(d.b, [ColourSet::from([2]), ColourSet::from([3]), ColourSet::from([5])]);
        assert!(d.c.iter().all(|s| s.is_empty()));

        let col = SetColouring::new(9, sets(&[&[1, 2, 3], &[4, 5, 6], &[1, 2, 7], &[4, 5, 8]])).unwrap();
        let d = decompose_4cycle(&col, [0, 1, 2, 3]).unwrap();
        let s = [0, 1, 2, 3].map(|v| col.set(v));
        d.verify(s, 1).unwrap();
    }

    #[test]
    fn decomposition_rejects_improper() {
        let col = SetColouring::new(3, sets(&[&[1], &[1], &[2], &[3]])).unwrap();
        assert!(matches!(
            decompose_4cycle(&col, [0, 1, 2, 3]),
            Err(ColouringError::NotProper { .. })
        ));
    }

    #[test]
    fn margin_colouring_with_zero_reserve() {
        let g = c4();
        let col = SetColouring::new(6, sets(&[&[1, 2], &[3, 4], &[1, 2], &[3, 4]])).unwrap();
        let out = margin_colouring(&g, &col, 2, 0).unwrap();
        assert!(out.colouring.validate(&g, Some(2)));
        assert_eq!(out.colouring, col);
    }

    #[test]
    fn margin_colouring_rejects_wrong_sizes() {
        let g = c4();
        let col = SetColouring::from_colouring(3, &[1, 2, 1, 2]).unwrap();
        assert!(matches!(
            margin_colouring(&g, &col, 1, 1),
            Err(ColouringError::NotUniform { .. })
        ));
    }

    #[test]
    fn largest_colour_class_of_a_path() {
        let p3 = PlaneGraph::from_rotation(vec![vec![1], vec![0, 2], vec![1]]).unwrap();
        let col = SetColouring::from_colouring(3, &[1, 2, 1]).unwrap();
        assert_eq!(independent_from_colouring(&p3, &col), (vec![0, 2], 1));
    }

    #[test]
    fn text_round_trip() {
        let col = SetColouring::new(6, sets(&[&[1, 2], &[], &[5]])).unwrap();
        let text = col.to_text();
        assert_eq!(text, "cols 6\n0: 1 2\n1:\n2: 5\n");
        assert_eq!(SetColouring::parse(&text).unwrap(), col);
        assert!(matches!(
            SetColouring::parse("cols 6\n0: 2 1\n"),
            Err(ColouringError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            SetColouring::parse("cols 2\n0: 3\n"),
            Err(ColouringError::ColourOutOfRange { .. })
        ));
    }

    #[test]
    fn glue_with_whole_graph_keeps_the_set() {
        let g = c4();
        let h = Subgraph::whole(&g);
        assert_eq!(glue_independent(&h, &[0, 2], &[]).unwrap(), vec![0, 2]);
    }

    #[test]
    fn glue_into_a_full_face() {
        // 4-cycle 0 1 2 3 with vertex 4 inside, adjacent to 0 and 2
        let g =
            PlaneGraph::from_rotation(vec![vec![1, 4, 3], vec![2, 0], vec![3, 4, 1], vec![0, 2], vec![2, 0]]).unwrap();
        let h = Subgraph::new(&g, &[0, 1, 2, 3], &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(h.fullness().iter().filter(|&&f| f).count(), 1);
        assert_eq!(glue_independent(&h, &[1, 3], &[4]).unwrap(), vec![4]);
        assert!(glue_independent(&h, &[0, 1], &[]).is_err());
    }
}
