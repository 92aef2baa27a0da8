//! Large independent sets around a bipartite subgraph all of whose faces
//! are 4-faces: a `(48:24)`-colouring from the 2-colouring, reduced to a
//! `(48:16)`-colouring with margin 1 on 4-faces, extended into every full
//! 4-face with one vertex per face receiving 17 colours.

use std::collections::BTreeSet;

use super::extension::extend_precolouring;
use super::{
    decompose_4cycle, glue_independent, independent_from_colouring, margin_colouring, ColourSet, ColouringError,
    SetColouring,
};
use crate::plane_graph::{Dart, PlaneGraph, Subgraph};
use crate::solver::alpha_exact;

const M: usize = 16;
const B: usize = 1;

/// Canonical 3-colourings of a 4-cycle matching the decomposition classes
/// `(A1,A2,A1,A3)`, `(B1,B2,B3,B2)` and `(C1,C2,C1,C2)`.
const PSI: [[u8; 4]; 3] = [[1, 2, 1, 3], [1, 2, 3, 2], [1, 2, 1, 2]];

#[derive(Clone, Debug)]
pub struct IndepBound {
    /// Independent set of the host, sorted.
    pub set: Vec<usize>,
    /// `⌈(|G| + |H|/64) / 3⌉`.
    pub bound: usize,
    pub full_faces: usize,
    /// Interior vertices that received `m + b` colours, one per full face where one exists.
    pub boosted: Vec<usize>,
    /// `Σ_v |φ(v)|` over the covered part of the host.
    pub colour_total: usize,
}

/// A 3-colouring extension of `region` (a disk bounded by `cycle`) with the
/// boundary coloured by `psi`, and `double` doubly coloured if given.
fn extend_region(
    region: &PlaneGraph,
    cycle: [usize; 4],
    psi: [u8; 4],
    double: Option<usize>,
) -> Result<Option<Vec<u8>>, ColouringError> {
    let mut pre = vec![None; region.n()];
    for (&v, &c) in cycle.iter().zip(&psi) {
        pre[v] = Some(c);
    }
    Ok(extend_precolouring(region, &pre, double)?)
}

/// An independent set of size at least `(|G| + |H|/64)/3` built from the
/// set-colouring pipeline. Every face of `h` must be a 4-face except the
/// face containing the host dart `outer`, which must not be full.
pub fn indep_bound_bipartite(g: &PlaneGraph, h: &Subgraph, outer: Option<Dart>) -> Result<IndepBound, ColouringError> {
    let hg = h.graph();
    let classes = hg.two_colouring().ok_or(ColouringError::NotBipartite)?;
    let outer_face = match outer {
        Some((u, v)) => {
            let (lu, lv) = (h.to_local(u), h.to_local(v));
            let fi = match (lu, lv) {
                (Some(a), Some(b)) if hg.has_edge(a, b) => h.faces().iter().position(|f| f.darts().contains(&(a, b))),
                _ => None,
            };
            match fi {
                Some(fi) if !h.is_full(fi) => Some(fi),
                _ => return Err(ColouringError::BadOuterFace),
            }
        }
        None => None,
    };
    for (fi, f) in h.faces().iter().enumerate() {
        if Some(fi) != outer_face && !f.is_k_face(4) {
            return Err(ColouringError::NotQuadrangulated { len: f.len() });
        }
    }

    let psi = SetColouring::replicate(
        2,
        &classes.iter().map(|&c| c + 1).collect::<Vec<_>>(),
        (M + 8 * B) as u32,
    )?;
    let phi0 = margin_colouring(hg, &psi, M, B)?.colouring;

    // colours of the covered host vertices: H plus the inside of its full faces
    let mut colours: Vec<Option<ColourSet>> = vec![None; g.n()];
    let full_vertices = h.full_face_vertices();
    for local in 0..hg.n() {
        let v = h.to_host(local);
        let set = if full_vertices.contains(&v) {
            phi0.set(local)
        } else {
            psi.set(local)
        };
        colours[v] = Some(set.clone());
    }
    let (contents, _) = h.face_contents();
    let mut boosted = Vec::new();
    let mut full_faces = 0;
    for (fi, content) in contents.iter().enumerate() {
        if !h.is_full(fi) {
            continue;
        }
        full_faces += 1;
        let boundary = h.face_host_vertices(fi);
        let mut edges: Vec<(usize, usize)> = content.edges.iter().copied().collect();
        for i in 0..4 {
            edges.push((boundary[i], boundary[(i + 1) % 4]));
        }
        let vertices: Vec<usize> = boundary
            .iter()
            .copied()
            .chain(content.vertices.iter().copied())
            .collect();
        let region = Subgraph::new(g, &vertices, &edges)?;
        let rg = region.graph();
        let cycle = [0, 1, 2, 3].map(|i| region.to_local(boundary[i]).expect("boundary is in the region"));
        let local_phi0 = SetColouring::new(
            phi0.c(),
            (0..rg.n())
                .map(|lv| {
                    let hv = region.to_host(lv);
                    h.to_local(hv).map(|x| phi0.set(x).clone()).unwrap_or_default()
                })
                .collect(),
        )?;
        let parts = decompose_4cycle(&local_phi0, cycle)?;

        let inner: BTreeSet<usize> = content.vertices.iter().filter_map(|&v| region.to_local(v)).collect();
        let mono = inner.iter().copied().find(|&v| rg.degree(v) <= 3);
        let mut ext: Vec<Vec<u8>> = Vec::with_capacity(3);
        let mut doubled: Option<(usize, usize)> = None;
        for (i, p) in PSI.iter().enumerate() {
            let mut found = None;
            if let (Some(z), None) = (mono, doubled) {
                found = extend_region(rg, cycle, *p, Some(z))?;
                if found.is_some() {
                    doubled = Some((i, z));
                }
            }
            if found.is_none() {
                found = extend_region(rg, cycle, *p, None)?;
            }
            ext.push(found.ok_or(ColouringError::ExtensionFailed)?);
        }
        for &lv in &inner {
            let mut set = ColourSet::new();
            for (class, colouring) in ext.iter().enumerate() {
                let value = colouring[lv];
                match doubled {
                    Some((i, z)) if i == class && z == lv => {
                        for c in (1..=3u8).filter(|&c| c != value) {
                            set.extend(parts.class(class, c));
                        }
                    }
                    _ => set.extend(parts.class(class, value)),
                }
            }
            colours[region.to_host(lv)] = Some(set);
        }
        if let Some((_, z)) = doubled {
            boosted.push(region.to_host(z));
        }
    }

    // the covered part H' and the rest
    let covered: Vec<usize> = (0..g.n()).filter(|&v| colours[v].is_some()).collect();
    let h_prime = Subgraph::induced(g, &covered)?;
    let sets: Vec<ColourSet> = covered.iter().map(|&v| colours[v].clone().unwrap()).collect();
    let phi = SetColouring::new(phi0.c(), sets)?;
    let hpg = h_prime.graph();
    phi.check(hpg, None)?;
    let (local_set, _) = independent_from_colouring(hpg, &phi);
    let i_h: Vec<usize> = local_set.iter().map(|&v| h_prime.to_host(v)).collect();

    let rest: Vec<usize> = (0..g.n()).filter(|&v| colours[v].is_none()).collect();
    let (rest_graph, rest_ids) = g.induced(&rest);
    let j: Vec<usize> = alpha_exact(&rest_graph).witness.iter().map(|&v| rest_ids[v]).collect();
    let set = glue_independent(&h_prime, &i_h, &j)?;

    // 3|I| >= |G| + |H|/64
    let need_num = 64 * g.n() + h.len();
    let bound = need_num.div_ceil(192);
    if 192 * set.len() < need_num {
        return Err(ColouringError::BoundNotMet {
            got: set.len(),
            need: bound,
        });
    }
    Ok(IndepBound {
        set,
        bound,
        full_faces,
        boosted,
        colour_total: phi.total(),
    })
}
