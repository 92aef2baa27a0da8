//! Exhaustive precolouring extension for 3-colourings, used as an oracle
//! for the extension theorems on small graphs.

use thiserror::Error;

use super::{ColourSet, SetColouring};
use crate::plane_graph::PlaneGraph;

/// Largest graph the exhaustive search accepts.
pub const EXTENSION_VERTEX_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtensionError {
    #[error("graph has {n} vertices, the exhaustive search accepts at most {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("vertex {vertex} has degree {degree}, at most 4 is allowed")]
    DegreeTooHigh { vertex: usize, degree: usize },
    #[error("bad boundary: {0}")]
    BadBoundary(String),
}

struct Search<'a> {
    g: &'a PlaneGraph,
    double: Option<usize>,
    colour: Vec<u8>,
}

impl Search<'_> {
    // adjacent to the double vertex means "equal value", otherwise "different"
    fn allowed(&self, v: usize, c: u8) -> bool {
        self.g.neighbours(v).iter().all(|&u| {
            let cu = self.colour[u];
            cu == 0
                || (if Some(u) == self.double || Some(v) == self.double {
                    cu == c
                } else {
                    cu != c
                })
        })
    }

    fn domain(&self, v: usize) -> Vec<u8> {
        (1..=3).filter(|&c| self.allowed(v, c)).collect()
    }

    fn run(&mut self) -> bool {
        // most constrained uncoloured vertex, lowest id on ties
        let mut pick: Option<(usize, Vec<u8>)> = None;
        for v in 0..self.g.n() {
            if self.colour[v] != 0 {
                continue;
            }
            let d = self.domain(v);
            if d.is_empty() {
                return false;
            }
            if pick.as_ref().is_none_or(|(_, best)| d.len() < best.len()) {
                pick = Some((v, d));
            }
        }
        let Some((v, dom)) = pick else { return true };
        for c in dom {
            self.colour[v] = c;
            if self.run() {
                return true;
            }
        }
        self.colour[v] = 0;
        false
    }
}

/// Complete search for a 3-colouring (colours `1..=3`) agreeing with `pre`.
/// If `double` is set, that vertex stands for a pair of colours: its value
/// `e` means the set `[3] ∖ {e}`, so each of its neighbours must get `e`.
pub fn extend_precolouring(
    g: &PlaneGraph,
    pre: &[Option<u8>],
    double: Option<usize>,
) -> Result<Option<Vec<u8>>, ExtensionError> {
    if g.n() > EXTENSION_VERTEX_CAP {
        return Err(ExtensionError::TooLarge {
            n: g.n(),
            cap: EXTENSION_VERTEX_CAP,
        });
    }
    if pre.len() != g.n() {
        return Err(ExtensionError::BadBoundary(
            "precolouring length differs from vertex count".into(),
        ));
    }
    if let Some(v) = double {
        if v >= g.n() || pre[v].is_some() {
            return Err(ExtensionError::BadBoundary("double vertex must be uncoloured".into()));
        }
    }
    let mut s = Search {
        g,
        double,
        colour: vec![0; g.n()],
    };
    for (v, c) in pre.iter().enumerate() {
        if let Some(c) = *c {
            if !(1..=3).contains(&c) {
                return Err(ExtensionError::BadBoundary(format!("colour {c} outside 1..=3")));
            }
            if !s.allowed(v, c) {
                return Ok(None);
            }
            s.colour[v] = c;
        }
    }
    Ok(s.run().then_some(s.colour))
}

/// Extends a proper 3-colouring of a facial cycle to the whole graph, or
/// reports that no extension exists.
pub fn extend_3colouring(
    g: &PlaneGraph,
    boundary: &[usize],
    colours: &[u8],
) -> Result<Option<Vec<u8>>, ExtensionError> {
    if boundary.len() != colours.len() {
        return Err(ExtensionError::BadBoundary(
            "boundary and colours differ in length".into(),
        ));
    }
    if boundary.iter().any(|&v| v >= g.n()) {
        return Err(ExtensionError::BadBoundary("boundary vertex out of range".into()));
    }
    let k = boundary.len();
    let cycle_ok = if k >= 3 {
        g.face_map().is_face_cycle(boundary)
    } else {
        k <= 1 || g.has_edge(boundary[0], boundary[1])
    };
    if !cycle_ok {
        return Err(ExtensionError::BadBoundary("boundary is not a facial cycle".into()));
    }
    if k >= 2 && (0..k).any(|i| colours[i] == colours[(i + 1) % k]) {
        return Err(ExtensionError::BadBoundary("precolouring is not proper".into()));
    }
    let mut pre = vec![None; g.n()];
    for (&v, &c) in boundary.iter().zip(colours) {
        pre[v] = Some(c);
    }
    extend_precolouring(g, &pre, None)
}

/// A colouring by subsets of `[3]` in which `v` gets two colours and every
/// other vertex one.
pub fn mono_extend(g: &PlaneGraph, v: usize) -> Result<Option<SetColouring>, ExtensionError> {
    if g.n() > EXTENSION_VERTEX_CAP {
        return Err(ExtensionError::TooLarge {
            n: g.n(),
            cap: EXTENSION_VERTEX_CAP,
        });
    }
    if g.degree(v) > 4 {
        return Err(ExtensionError::DegreeTooHigh {
            vertex: v,
            degree: g.degree(v),
        });
    }
    let Some(colours) = extend_precolouring(g, &vec![None; g.n()], Some(v))? else {
        return Ok(None);
    };
    let sets = colours
        .iter()
        .enumerate()
        .map(|(u, &c)| {
            if u == v {
                (1..=3u32).filter(|&x| x != c as u32).collect()
            } else {
                ColourSet::from([c as u32])
            }
        })
        .collect();
    Ok(Some(SetColouring::new(3, sets).expect("colours lie in 1..=3")))
}
