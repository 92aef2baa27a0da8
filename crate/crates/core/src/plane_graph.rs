//! Plane graphs stored as rotation systems.
//!
//! A [`PlaneGraph`] records, for every vertex, its neighbours in clockwise
//! order. Faces are never stored; they are recovered by the usual face
//! traversal: the dart `u -> v` is followed by `v -> w`, where `w` is the
//! neighbour that comes right after `u` in the rotation at `v`.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use thiserror::Error;

/// A directed edge `(tail, head)`.
pub type Dart = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} lists neighbour {neighbour}, which is out of range (n = {n})")]
    IdOutOfRange { vertex: usize, neighbour: usize, n: usize },
    #[error("vertex {0} lists itself as a neighbour")]
    SelfLoop(usize),
    #[error("vertex {vertex} lists neighbour {neighbour} more than once")]
    DuplicateNeighbour { vertex: usize, neighbour: usize },
    #[error("vertex {u} lists {v}, but {v} does not list {u}")]
    AsymmetricAdjacency { u: usize, v: usize },
    #[error("rotation system is not plane: component of vertex {vertex} has Euler characteristic {chi}")]
    NotPlane { vertex: usize, chi: i64 },
    #[error("edge {0}-{1} is not an edge of the host graph")]
    EdgeNotInHost(usize, usize),
    #[error("vertex {0} is not a vertex of the host graph")]
    VertexNotInHost(usize),
    #[error("edge {0}-{1} has an endpoint outside the vertex subset")]
    EndpointNotInSubset(usize, usize),
}

/// Boundary walk of a face, as a cyclic sequence of darts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Face {
    darts: Vec<Dart>,
}

impl Face {
    pub fn darts(&self) -> &[Dart] {
        &self.darts
    }

    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// Vertices in walk order (tails of the darts).
    pub fn vertices(&self) -> Vec<usize> {
        self.darts.iter().map(|d| d.0).collect()
    }

    /// True when the walk visits no vertex twice, i.e. the face is bounded by a cycle.
    pub fn is_cycle_bounded(&self) -> bool {
        let mut seen = HashSet::with_capacity(self.darts.len());
        self.darts.iter().all(|d| seen.insert(d.0))
    }

    /// A k-face: bounded by a cycle of length k.
    pub fn is_k_face(&self, k: usize) -> bool {
        self.len() == k && self.is_cycle_bounded()
    }

    /// The walk rotated so that its smallest dart comes first.
    pub fn canonical(&self) -> Vec<Dart> {
        let start = self
            .darts
            .iter()
            .enumerate()
            .min_by_key(|(_, d)| **d)
            .map(|(i, _)| i)
            .unwrap_or(0);
        let mut out = self.darts[start..].to_vec();
        out.extend_from_slice(&self.darts[..start]);
        out
    }

    pub fn min_vertex(&self) -> usize {
        self.darts.iter().map(|d| d.0).min().unwrap_or(usize::MAX)
    }
}

/// A simple plane graph given by its rotation system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneGraph {
    rotation: Vec<Vec<usize>>,
    // twin[v][i]: position of v in the rotation of rotation[v][i]
    twin: Vec<Vec<usize>>,
}

impl PlaneGraph {
    /// Validates a rotation system: ids in range, no loops, no repeated
    /// neighbours, symmetric adjacency, and every component of Euler
    /// characteristic 2.
    pub fn from_rotation(rotation: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let n = rotation.len();
        let mut index: HashMap<Dart, usize> = HashMap::new();
        for (v, nbrs) in rotation.iter().enumerate() {
            for (i, &u) in nbrs.iter().enumerate() {
                if u >= n {
                    return Err(GraphError::IdOutOfRange {
                        vertex: v,
                        neighbour: u,
                        n,
                    });
                }
                if u == v {
                    return Err(GraphError::SelfLoop(v));
                }
                if index.insert((v, u), i).is_some() {
                    return Err(GraphError::DuplicateNeighbour {
                        vertex: v,
                        neighbour: u,
                    });
                }
            }
        }
        let mut twin = Vec::with_capacity(n);
        for (v, nbrs) in rotation.iter().enumerate() {
            let mut row = Vec::with_capacity(nbrs.len());
            for &u in nbrs {
                match index.get(&(u, v)) {
                    Some(&j) => row.push(j),
                    None => return Err(GraphError::AsymmetricAdjacency { u: v, v: u }),
                }
            }
            twin.push(row);
        }
        let g = PlaneGraph { rotation, twin };
        g.check_euler()?;
        Ok(g)
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        PlaneGraph {
            rotation: vec![Vec::new(); n],
            twin: vec![Vec::new(); n],
        }
    }

    fn check_euler(&self) -> Result<(), GraphError> {
        let comp = self.component_ids();
        let count = comp.iter().copied().max().map_or(0, |c| c + 1);
        let mut chi = vec![0i64; count];
        for v in 0..self.n() {
            chi[comp[v]] += 1;
        }
        for (u, _) in self.edges() {
            chi[comp[u]] -= 1;
        }
        for f in self.faces() {
            chi[comp[f.darts[0].0]] += 1;
        }
        for v in 0..self.n() {
            if self.degree(v) == 0 {
                // an isolated vertex is a sphere with one empty face
                chi[comp[v]] += 1;
            }
        }
        for v in 0..self.n() {
            let c = chi[comp[v]];
            if c != 2 {
                return Err(GraphError::NotPlane { vertex: v, chi: c });
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rotation.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    /// Neighbours of `v` in clockwise order.
    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn into_rotation(self) -> Vec<Vec<usize>> {
        self.rotation
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.rotation[u].contains(&v)
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .rotation
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect();
        out.sort_unstable();
        out
    }

    /// Position of `u` in the rotation at `v`.
    pub fn position(&self, v: usize, u: usize) -> Option<usize> {
        self.rotation[v].iter().position(|&w| w == u)
    }

    /// The neighbour following `u` in clockwise order around `v`.
    pub fn succ(&self, v: usize, u: usize) -> usize {
        let nbrs = &self.rotation[v];
        let i = self.position(v, u).expect("succ: not a neighbour");
        nbrs[(i + 1) % nbrs.len()]
    }

    /// The neighbour preceding `u` in clockwise order around `v`.
    pub fn pred(&self, v: usize, u: usize) -> usize {
        let nbrs = &self.rotation[v];
        let i = self.position(v, u).expect("pred: not a neighbour");
        nbrs[(i + nbrs.len() - 1) % nbrs.len()]
    }

    pub fn next_dart(&self, (u, v): Dart) -> Dart {
        (v, self.succ(v, u))
    }

    fn walk_from(&self, v: usize, i: usize, visited: Option<&mut Vec<Vec<bool>>>) -> Face {
        let mut darts = Vec::new();
        let (mut cv, mut ci) = (v, i);
        let mut visited = visited;
        loop {
            if let Some(vis) = visited.as_deref_mut() {
                vis[cv][ci] = true;
            }
            let w = self.rotation[cv][ci];
            darts.push((cv, w));
            let j = self.twin[cv][ci];
            let ni = (j + 1) % self.rotation[w].len();
            cv = w;
            ci = ni;
            if cv == v && ci == i {
                break;
            }
        }
        Face { darts }
    }

    /// All faces, in order of their first dart `(v, rotation[v][i])` by `(v, i)`.
    pub fn faces(&self) -> Vec<Face> {
        let mut visited: Vec<Vec<bool>> = self.rotation.iter().map(|r| vec![false; r.len()]).collect();
        let mut out = Vec::new();
        for v in 0..self.n() {
            for i in 0..self.rotation[v].len() {
                if !visited[v][i] {
                    out.push(self.walk_from(v, i, Some(&mut visited)));
                }
            }
        }
        out
    }

    /// The face whose walk contains `dart`.
    pub fn face_containing(&self, (u, v): Dart) -> Option<Face> {
        let i = self.position(u, v)?;
        Some(self.walk_from(u, i, None))
    }

    /// Faces plus the face id of every dart.
    pub fn face_map(&self) -> FaceMap {
        let faces = self.faces();
        let mut of_dart = HashMap::with_capacity(2 * self.edge_count());
        for (fi, f) in faces.iter().enumerate() {
            for &d in &f.darts {
                of_dart.insert(d, fi);
            }
        }
        FaceMap { faces, of_dart }
    }

    /// Number of faces of each length.
    pub fn face_census(&self) -> BTreeMap<usize, usize> {
        let mut census = BTreeMap::new();
        for f in self.faces() {
            *census.entry(f.len()).or_insert(0) += 1;
        }
        census
    }

    fn component_ids(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n()];
        let mut next = 0;
        for s in 0..self.n() {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &u in &self.rotation[v] {
                    if comp[u] == usize::MAX {
                        comp[u] = next;
                        stack.push(u);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let comp = self.component_ids();
        let count = comp.iter().copied().max().map_or(0, |c| c + 1);
        let mut out = vec![Vec::new(); count];
        for (v, &c) in comp.iter().enumerate() {
            out[c].push(v);
        }
        out
    }

    /// Some triangle, lexicographically smallest, if one exists.
    pub fn triangle(&self) -> Option<[usize; 3]> {
        for (u, v) in self.edges() {
            let mut common: Vec<usize> = self.rotation[u]
                .iter()
                .copied()
                .filter(|&w| w > v && self.rotation[v].contains(&w))
                .collect();
            common.sort_unstable();
            if let Some(&w) = common.first() {
                return Some([u, v, w]);
            }
        }
        None
    }

    pub fn is_triangle_free(&self) -> bool {
        self.triangle().is_none()
    }

    /// A proper 2-colouring with colours 0/1 (each component starts at its
    /// smallest vertex with colour 0), or `None` if the graph has an odd cycle.
    pub fn two_colouring(&self) -> Option<Vec<u8>> {
        let mut col = vec![u8::MAX; self.n()];
        for s in 0..self.n() {
            if col[s] != u8::MAX {
                continue;
            }
            col[s] = 0;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &u in &self.rotation[v] {
                    if col[u] == u8::MAX {
                        col[u] = 1 - col[v];
                        stack.push(u);
                    } else if col[u] == col[v] {
                        return None;
                    }
                }
            }
        }
        Some(col)
    }

    /// The same graph drawn in the mirror: every rotation reversed.
    pub fn mirrored(&self) -> PlaneGraph {
        let rotation = self
            .rotation
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        PlaneGraph::from_rotation(rotation).expect("mirror of a plane graph is plane")
    }

    /// Deletes the marked vertices and renumbers the rest in order.
    /// Returns the new graph and the old-to-new id map.
    pub fn remove_vertices(&self, remove: &[bool]) -> (PlaneGraph, Vec<Option<usize>>) {
        let mut map = vec![None; self.n()];
        let mut next = 0;
        for v in 0..self.n() {
            if !remove[v] {
                map[v] = Some(next);
                next += 1;
            }
        }
        let rotation = (0..self.n())
            .filter(|&v| !remove[v])
            .map(|v| self.rotation[v].iter().filter_map(|&u| map[u]).collect())
            .collect();
        let g = PlaneGraph::from_rotation(rotation).expect("vertex deletion keeps a plane graph plane");
        (g, map)
    }

    /// Deletes the given edges; vertex ids are unchanged.
    pub fn remove_edges(&self, edges: &[(usize, usize)]) -> PlaneGraph {
        let gone: HashSet<(usize, usize)> = edges.iter().flat_map(|&(u, v)| [(u, v), (v, u)]).collect();
        let rotation = self
            .rotation
            .iter()
            .enumerate()
            .map(|(v, r)| r.iter().copied().filter(|&u| !gone.contains(&(v, u))).collect())
            .collect();
        PlaneGraph::from_rotation(rotation).expect("edge deletion keeps a plane graph plane")
    }

    /// The subgraph induced by `keep`, renumbered in increasing order.
    pub fn induced(&self, keep: &[usize]) -> (PlaneGraph, Vec<usize>) {
        let mut remove = vec![true; self.n()];
        for &v in keep {
            remove[v] = false;
        }
        let (g, map) = self.remove_vertices(&remove);
        let mut back = vec![0; g.n()];
        for (old, new) in map.iter().enumerate() {
            if let Some(new) = new {
                back[*new] = old;
            }
        }
        (g, back)
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        let members: HashSet<usize> = set.iter().copied().collect();
        members.len() == set.len()
            && set
                .iter()
                .all(|&v| v < self.n() && self.rotation[v].iter().all(|u| !members.contains(u)))
    }

    /// Degree histogram: `hist[d]` vertices of degree `d`.
    pub fn degree_histogram(&self) -> Vec<usize> {
        let max = (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0);
        let mut hist = vec![0; max + 1];
        for v in 0..self.n() {
            hist[self.degree(v)] += 1;
        }
        hist
    }

    pub fn builder(&self) -> EmbeddingBuilder {
        EmbeddingBuilder {
            rotation: self.rotation.clone(),
        }
    }
}

/// Faces of a graph with a dart-to-face lookup.
#[derive(Clone, Debug)]
pub struct FaceMap {
    pub faces: Vec<Face>,
    pub of_dart: HashMap<Dart, usize>,
}

impl FaceMap {
    pub fn face_of(&self, d: Dart) -> Option<&Face> {
        self.of_dart.get(&d).map(|&i| &self.faces[i])
    }

    /// True iff the closed vertex sequence `cycle` (in either direction) is a face walk.
    pub fn is_face_cycle(&self, cycle: &[usize]) -> bool {
        let k = cycle.len();
        if k < 3 {
            return false;
        }
        let check = |forward: bool| -> bool {
            let dart = |i: usize| {
                let (a, b) = (cycle[i % k], cycle[(i + 1) % k]);
                if forward {
                    (a, b)
                } else {
                    (b, a)
                }
            };
            let Some(&fi) = self.of_dart.get(&dart(0)) else {
                return false;
            };
            self.faces[fi].len() == k && (0..k).all(|i| self.of_dart.get(&dart(i)) == Some(&fi))
        };
        check(true) || check(false)
    }
}

/// Mutable rotation system used while constructing drawings. Nothing is
/// validated until [`EmbeddingBuilder::build`].
#[derive(Clone, Debug, Default)]
pub struct EmbeddingBuilder {
    rotation: Vec<Vec<usize>>,
}

impl EmbeddingBuilder {
    pub fn new(n: usize) -> Self {
        EmbeddingBuilder {
            rotation: vec![Vec::new(); n],
        }
    }

    pub fn from_rotation(rotation: Vec<Vec<usize>>) -> Self {
        EmbeddingBuilder { rotation }
    }

    pub fn n(&self) -> usize {
        self.rotation.len()
    }

    pub fn add_vertex(&mut self) -> usize {
        self.rotation.push(Vec::new());
        self.rotation.len() - 1
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn set_rotation(&mut self, v: usize, nbrs: Vec<usize>) {
        self.rotation[v] = nbrs;
    }

    /// Puts `new` right after `after` in the rotation at `v`.
    pub fn insert_after(&mut self, v: usize, after: usize, new: usize) {
        let i = self.rotation[v]
            .iter()
            .position(|&u| u == after)
            .expect("insert_after: anchor is not a neighbour");
        self.rotation[v].insert(i + 1, new);
    }

    /// Replaces neighbour `old` of `v` by the sequence `new`, in place.
    pub fn replace(&mut self, v: usize, old: usize, new: &[usize]) {
        let i = self.rotation[v]
            .iter()
            .position(|&u| u == old)
            .expect("replace: not a neighbour");
        self.rotation[v].splice(i..=i, new.iter().copied());
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rotation[u].retain(|&w| w != v);
        self.rotation[v].retain(|&w| w != u);
    }

    /// Adds a pendant vertex at `u` inside the face corner entered by the dart `(x, u)`.
    pub fn add_pendant(&mut self, (x, u): Dart) -> usize {
        let p = self.add_vertex();
        self.insert_after(u, x, p);
        self.rotation[p].push(u);
        p
    }

    /// Joins `u` and `w` by a path with `internal` new vertices, drawn in the
    /// face whose walk contains the darts `(x, u)` and `(z, w)`. With
    /// `internal == 0` this adds the edge `uw`.
    pub fn add_path(&mut self, (x, u): Dart, (z, w): Dart, internal: usize) -> Vec<usize> {
        let mids: Vec<usize> = (0..internal).map(|_| self.add_vertex()).collect();
        let mut chain = vec![u];
        chain.extend(&mids);
        chain.push(w);
        self.insert_after(u, x, chain[1]);
        self.insert_after(w, z, chain[chain.len() - 2]);
        for i in 1..chain.len() - 1 {
            self.rotation[chain[i]] = vec![chain[i - 1], chain[i + 1]];
        }
        mids
    }

    pub fn build(self) -> Result<PlaneGraph, GraphError> {
        PlaneGraph::from_rotation(self.rotation)
    }
}

/// A subgraph `H` of a plane graph `G` with the drawing inherited from `G`.
///
/// `H` is stored over compact local ids; a face of `H` is full iff its dart
/// walk is not a face walk of the host.
#[derive(Clone, Debug)]
pub struct Subgraph<'a> {
    host: &'a PlaneGraph,
    local_to_host: Vec<usize>,
    host_to_local: Vec<Option<usize>>,
    graph: PlaneGraph,
    faces: Vec<Face>,
    full: Vec<bool>,
}

/// The part of the host drawn inside one face of a subgraph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FaceContent {
    /// Host vertices not in the subgraph.
    pub vertices: BTreeSet<usize>,
    /// Host edges not in the subgraph, as `(u, v)` with `u < v`.
    pub edges: BTreeSet<(usize, usize)>,
}

impl<'a> Subgraph<'a> {
    pub fn new(host: &'a PlaneGraph, vertices: &[usize], edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut host_to_local = vec![None; host.n()];
        let mut local_to_host: Vec<usize> = vertices.to_vec();
        local_to_host.sort_unstable();
        local_to_host.dedup();
        for (i, &v) in local_to_host.iter().enumerate() {
            if v >= host.n() {
                return Err(GraphError::VertexNotInHost(v));
            }
            host_to_local[v] = Some(i);
        }
        let mut edge_set = HashSet::new();
        for &(u, v) in edges {
            if u >= host.n() || v >= host.n() || !host.has_edge(u, v) {
                return Err(GraphError::EdgeNotInHost(u, v));
            }
            if host_to_local[u].is_none() || host_to_local[v].is_none() {
                return Err(GraphError::EndpointNotInSubset(u, v));
            }
            edge_set.insert((u, v));
            edge_set.insert((v, u));
        }
        let rotation = local_to_host
            .iter()
            .map(|&v| {
                host.neighbours(v)
                    .iter()
                    .filter(|&&u| edge_set.contains(&(v, u)))
                    .map(|&u| host_to_local[u].unwrap())
                    .collect()
            })
            .collect();
        let graph = PlaneGraph::from_rotation(rotation).expect("subgraph of a plane graph is plane");
        let faces = graph.faces();
        let host_faces = host.face_map();
        let full = faces
            .iter()
            .map(|f| {
                let darts: Vec<Dart> = f
                    .darts
                    .iter()
                    .map(|&(a, b)| (local_to_host[a], local_to_host[b]))
                    .collect();
                let fi = host_faces.of_dart[&darts[0]];
                !(host_faces.faces[fi].len() == darts.len() && darts.iter().all(|d| host_faces.of_dart[d] == fi))
            })
            .collect();
        Ok(Subgraph {
            host,
            local_to_host,
            host_to_local,
            graph,
            faces,
            full,
        })
    }

    /// Induced subgraph on `vertices`.
    pub fn induced(host: &'a PlaneGraph, vertices: &[usize]) -> Result<Self, GraphError> {
        let set: HashSet<usize> = vertices.iter().copied().collect();
        let edges: Vec<(usize, usize)> = host
            .edges()
            .into_iter()
            .filter(|(u, v)| set.contains(u) && set.contains(v))
            .collect();
        Subgraph::new(host, vertices, &edges)
    }

    pub fn whole(host: &'a PlaneGraph) -> Self {
        let vertices: Vec<usize> = (0..host.n()).collect();
        Subgraph::new(host, &vertices, &host.edges()).expect("whole graph is a subgraph")
    }

    pub fn host(&self) -> &'a PlaneGraph {
        self.host
    }

    /// The subgraph over local ids `0..|H|`.
    pub fn graph(&self) -> &PlaneGraph {
        &self.graph
    }

    /// Host ids of the vertices, sorted; local id `i` is `vertices()[i]`.
    pub fn vertices(&self) -> &[usize] {
        &self.local_to_host
    }

    pub fn to_host(&self, local: usize) -> usize {
        self.local_to_host[local]
    }

    pub fn to_local(&self, host: usize) -> Option<usize> {
        self.host_to_local.get(host).copied().flatten()
    }

    pub fn contains_vertex(&self, host: usize) -> bool {
        self.to_local(host).is_some()
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        match (self.to_local(u), self.to_local(v)) {
            (Some(a), Some(b)) => self.graph.has_edge(a, b),
            _ => false,
        }
    }

    pub fn len(&self) -> usize {
        self.local_to_host.len()
    }

    pub fn is_empty(&self) -> bool {
        self.local_to_host.is_empty()
    }

    /// Faces of the subgraph over local ids.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// Face walk `i` translated to host vertex ids.
    pub fn face_host_vertices(&self, i: usize) -> Vec<usize> {
        self.faces[i].darts.iter().map(|d| self.local_to_host[d.0]).collect()
    }

    pub fn is_full(&self, i: usize) -> bool {
        self.full[i]
    }

    pub fn fullness(&self) -> &[bool] {
        &self.full
    }

    /// Host ids of vertices incident with at least one full face.
    pub fn full_face_vertices(&self) -> BTreeSet<usize> {
        self.faces
            .iter()
            .zip(&self.full)
            .filter(|(_, &full)| full)
            .flat_map(|(f, _)| f.darts.iter().map(|d| self.local_to_host[d.0]))
            .collect()
    }

    /// The face of the subgraph in which the host edge `u x` leaves `u`
    /// (`u` must be a vertex of the subgraph with at least one subgraph edge).
    pub fn face_at_corner(&self, u: usize, x: usize) -> Option<usize> {
        let lu = self.to_local(u)?;
        if self.graph.degree(lu) == 0 {
            return None;
        }
        let mut w = x;
        loop {
            w = self.host.pred(u, w);
            if let Some(lw) = self.to_local(w) {
                if self.graph.has_edge(lu, lw) {
                    return self.face_index_of_dart((lw, lu));
                }
            }
            if w == x {
                return None;
            }
        }
    }

    fn face_index_of_dart(&self, d: Dart) -> Option<usize> {
        self.faces.iter().position(|f| f.darts.contains(&d))
    }

    /// For every face: the host vertices and edges drawn inside it. Parts of
    /// the host that touch no vertex of the subgraph cannot be located and are
    /// returned separately as the second component.
    pub fn face_contents(&self) -> (Vec<FaceContent>, FaceContent) {
        let mut contents = vec![FaceContent::default(); self.faces.len()];
        let mut detached = FaceContent::default();
        let host = self.host;
        // components of host vertices outside the subgraph
        let mut comp = vec![usize::MAX; host.n()];
        let mut comps: Vec<Vec<usize>> = Vec::new();
        for s in 0..host.n() {
            if self.contains_vertex(s) || comp[s] != usize::MAX {
                continue;
            }
            let id = comps.len();
            comp[s] = id;
            let mut members = vec![s];
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &u in host.neighbours(v) {
                    if !self.contains_vertex(u) && comp[u] == usize::MAX {
                        comp[u] = id;
                        members.push(u);
                        stack.push(u);
                    }
                }
            }
            comps.push(members);
        }
        let mut comp_face: Vec<Option<usize>> = vec![None; comps.len()];
        for (u, x) in host.edges() {
            for (a, b) in [(u, x), (x, u)] {
                if self.contains_vertex(a) && !self.contains_vertex(b) {
                    if let Some(fi) = self.face_at_corner(a, b) {
                        comp_face[comp[b]] = Some(fi);
                        contents[fi].edges.insert((u, x));
                    }
                }
            }
            if self.contains_vertex(u) && self.contains_vertex(x) && !self.contains_edge(u, x) {
                if let Some(fi) = self.face_at_corner(u, x) {
                    contents[fi].edges.insert((u, x));
                } else {
                    detached.edges.insert((u, x));
                }
            }
        }
        for (ci, members) in comps.iter().enumerate() {
            let target = match comp_face[ci] {
                Some(fi) => &mut contents[fi],
                None => &mut detached,
            };
            for &v in members {
                target.vertices.insert(v);
                for &u in host.neighbours(v) {
                    // edges to the subgraph were placed with the attachments above
                    if !self.contains_vertex(u) {
                        target.edges.insert((v.min(u), v.max(u)));
                    }
                }
            }
        }
        (contents, detached)
    }
}
