//! Maximum independent sets: an exhaustive oracle for small graphs, an exact
//! branch and bound, and the kernel-then-solve decision procedure for the
//! excess `3α(G) - |G|`.

use serde::Serialize;
use thiserror::Error;

use crate::kernelize::{tw_reduce, KernelError};
use crate::plane_graph::PlaneGraph;

/// Largest graph accepted by [`alpha_brute`].
pub const BRUTE_FORCE_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("graph has {n} vertices, the exhaustive oracle accepts at most {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Brute,
    BranchBound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaResult {
    pub value: usize,
    /// The lexicographically least maximum independent set, sorted.
    pub witness: Vec<usize>,
    pub method: Method,
    pub nodes: u64,
}

/// Exact α by include-first enumeration in id order; the first maximum set
/// found is the lexicographically least one.
pub fn alpha_brute(g: &PlaneGraph) -> Result<AlphaResult, SolverError> {
    let n = g.n();
    if n > BRUTE_FORCE_CAP {
        return Err(SolverError::TooLarge {
            n,
            cap: BRUTE_FORCE_CAP,
        });
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbours(v).iter().fold(0u32, |m, &u| m | 1 << u))
        .collect();
    struct Search<'a> {
        adj: &'a [u32],
        best: u32,
        best_size: u32,
        nodes: u64,
    }
    fn rec(s: &mut Search, cand: u32, chosen: u32, size: u32) {
        s.nodes += 1;
        if cand == 0 {
            if size > s.best_size {
                s.best_size = size;
                s.best = chosen;
            }
            return;
        }
        if size + cand.count_ones() <= s.best_size {
            return;
        }
        let v = cand.trailing_zeros();
        let bit = 1u32 << v;
        rec(s, cand & !bit & !s.adj[v as usize], chosen | bit, size + 1);
        rec(s, cand & !bit, chosen, size);
    }
    let mut s = Search {
        adj: &adj,
        best: 0,
        best_size: 0,
        nodes: 0,
    };
    let all = (1u32 << n) - 1;
    rec(&mut s, all, 0, 0);
    let witness: Vec<usize> = (0..n).filter(|&v| s.best >> v & 1 == 1).collect();
    debug_assert!(g.is_independent(&witness));
    Ok(AlphaResult {
        value: witness.len(),
        witness,
        method: Method::Brute,
        nodes: s.nodes,
    })
}

#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(n: usize) -> Bits {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn full(n: usize) -> Bits {
        let mut b = Bits::empty(n);
        for v in 0..n {
            b.insert(v);
        }
        b
    }

    fn insert(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }

    fn remove(&mut self, v: usize) {
        self.0[v / 64] &= !(1 << (v % 64));
    }

    fn contains(&self, v: usize) -> bool {
        self.0[v / 64] >> (v % 64) & 1 == 1
    }

    fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn and_len(&self, other: &Bits) -> usize {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    fn minus(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & !b).collect())
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }
}

struct BranchBound {
    adj: Vec<Bits>,
    nodes: u64,
}

impl BranchBound {
    fn new(g: &PlaneGraph) -> BranchBound {
        let n = g.n();
        let adj = (0..n)
            .map(|v| {
                let mut b = Bits::empty(n);
                for &u in g.neighbours(v) {
                    b.insert(u);
                }
                b
            })
            .collect();
        BranchBound { adj, nodes: 0 }
    }

    fn closed(&self, v: usize) -> Bits {
        let mut b = self.adj[v].clone();
        b.insert(v);
        b
    }

    fn component(&self, p: &Bits, start: usize) -> Bits {
        let mut comp = Bits::empty(p.0.len() * 64);
        comp.insert(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for u in self.adj[v].and(p).iter() {
                if !comp.contains(u) {
                    comp.insert(u);
                    stack.push(u);
                }
            }
        }
        comp
    }

    /// |P| minus a greedy maximal matching: an upper bound on α(G[P]).
    fn matching_bound(&self, p: &Bits) -> usize {
        let mut free = p.clone();
        let mut matched = 0;
        for v in p.iter() {
            if !free.contains(v) {
                continue;
            }
            if let Some(u) = self.adj[v].and(&free).iter().next() {
                free.remove(v);
                free.remove(u);
                matched += 1;
            }
        }
        p.len() - matched
    }

    /// α(G[P]) exactly when it exceeds `lo`; otherwise some value `<= lo`.
    fn mis(&mut self, p: &Bits, lo: usize) -> usize {
        self.nodes += 1;
        let mut p = p.clone();
        let mut taken = 0;
        // vertices of degree at most one belong to some maximum independent set
        loop {
            let low = p.iter().find(|&v| self.adj[v].and_len(&p) <= 1);
            let Some(v) = low else { break };
            p = p.minus(&self.closed(v));
            taken += 1;
        }
        if p.is_empty() {
            return taken;
        }
        let lo = lo.saturating_sub(taken);
        let first = p.iter().next().unwrap();
        let comp = self.component(&p, first);
        if comp.len() < p.len() {
            let rest = p.minus(&comp);
            return taken + self.mis(&comp, 0) + self.mis(&rest, 0);
        }
        let (v, deg) = p
            .iter()
            .map(|v| (v, self.adj[v].and_len(&p)))
            .max_by_key(|&(v, d)| (d, std::cmp::Reverse(v)))
            .unwrap();
        if deg == 2 {
            // a single cycle
            return taken + p.len() / 2;
        }
        let ub = self.matching_bound(&p);
        if ub <= lo {
            return taken + ub;
        }
        let with = 1 + self.mis(&p.minus(&self.closed(v)), lo.saturating_sub(1));
        let mut without_p = p.clone();
        without_p.remove(v);
        let without = self.mis(&without_p, lo.max(with));
        taken + with.max(without)
    }
}

/// Exact α by branch and bound on a maximum-degree vertex, with
/// low-degree reductions, component splitting and a matching upper bound.
pub fn alpha_exact(g: &PlaneGraph) -> AlphaResult {
    let n = g.n();
    let mut bb = BranchBound::new(g);
    let all = Bits::full(n);
    let value = bb.mis(&all, 0);
    // lexicographically least witness, one vertex at a time
    let mut p = all;
    let mut need = value;
    let mut witness = Vec::with_capacity(value);
    for v in 0..n {
        if need == 0 {
            break;
        }
        if !p.contains(v) {
            continue;
        }
        let rest = p.minus(&bb.closed(v));
        if 1 + bb.mis(&rest, need.saturating_sub(2)) >= need {
            witness.push(v);
            p = rest;
            need -= 1;
        } else {
            p.remove(v);
        }
    }
    assert_eq!(witness.len(), value, "witness reconstruction is exact");
    assert!(g.is_independent(&witness));
    AlphaResult {
        value,
        witness,
        method: Method::BranchBound,
        nodes: bb.nodes,
    }
}

/// `3α(G) - |G|`.
pub fn excess(g: &PlaneGraph) -> i64 {
    3 * alpha_exact(g).value as i64 - g.n() as i64
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecideReport {
    pub a: i64,
    pub n: usize,
    pub kernel_n: usize,
    pub reduction_steps: usize,
    pub kernel_alpha: usize,
    /// `3α - n` of the kernel, equal to that of the input.
    pub excess: i64,
    pub answer: bool,
}

/// Decides `3α(G) >= |G| + a` on the kernel left by the tube reduction.
pub fn decide_excess_report(g: &PlaneGraph, a: i64) -> Result<DecideReport, SolverError> {
    let (kernel, report) = tw_reduce(g)?;
    let alpha = alpha_exact(&kernel).value;
    let excess = 3 * alpha as i64 - kernel.n() as i64;
    Ok(DecideReport {
        a,
        n: g.n(),
        kernel_n: kernel.n(),
        reduction_steps: report.steps.len(),
        kernel_alpha: alpha,
        excess,
        answer: excess >= a,
    })
}

pub fn decide_excess(g: &PlaneGraph, a: i64) -> Result<bool, SolverError> {
    Ok(decide_excess_report(g, a)?.answer)
}

/// The same decision computed on the input itself, without kernelization.
pub fn decide_excess_direct(g: &PlaneGraph, a: i64) -> Result<bool, SolverError> {
    if let Some(t) = g.triangle() {
        return Err(KernelError::NotTriangleFree(t).into());
    }
    Ok(excess(g) >= a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tw_family::{reduced_thomas_walls, steinberg_tovey};

    fn cycle(n: usize) -> PlaneGraph {
        PlaneGraph::from_rotation((0..n).map(|i| vec![(i + n - 1) % n, (i + 1) % n]).collect()).unwrap()
    }

    #[test]
    fn five_cycle() {
        let r = alpha_brute(&cycle(5)).unwrap();
        assert_eq!((r.value, r.witness.clone()), (2, vec![0, 2]));
        assert_eq!(alpha_exact(&cycle(5)).witness, vec![0, 2]);
    }

    #[test]
    fn brute_force_cap() {
        let g = PlaneGraph::empty(25);
        assert_eq!(alpha_brute(&g).unwrap_err(), SolverError::TooLarge { n: 25, cap: 24 });
        assert_eq!(alpha_exact(&g).value, 25);
    }

    #[test]
    fn exact_matches_brute_on_families() {
        for k in 1..7 {
            let g = reduced_thomas_walls(k).unwrap().graph;
            let (b, e) = (alpha_brute(&g).unwrap(), alpha_exact(&g));
            assert_eq!((b.value, &b.witness), (e.value, &e.witness), "T'_{k}");
            let g = steinberg_tovey(k).unwrap();
            if g.n() <= BRUTE_FORCE_CAP {
                let (b, e) = (alpha_brute(&g).unwrap(), alpha_exact(&g));
                assert_eq!((b.value, &b.witness), (e.value, &e.witness), "ST_{k}");
            }
        }
    }

    #[test]
    fn steinberg_tovey_small_values() {
        assert_eq!(alpha_brute(&steinberg_tovey(1).unwrap()).unwrap().value, 3);
        assert_eq!(alpha_brute(&steinberg_tovey(2).unwrap()).unwrap().value, 4);
        assert_eq!(alpha_brute(&steinberg_tovey(3).unwrap()).unwrap().value, 5);
        assert_eq!(alpha_brute(&steinberg_tovey(6).unwrap()).unwrap().value, 8);
    }

    #[test]
    fn decide_on_small_graphs() {
        let st3 = steinberg_tovey(3).unwrap();
        assert!(decide_excess(&st3, 1).unwrap());
        assert!(!decide_excess(&st3, 2).unwrap());
        assert!(decide_excess(&cycle(4), 2).unwrap());
        assert!(!decide_excess(&cycle(4), 3).unwrap());
    }

    #[test]
    fn decide_uses_the_kernel() {
        let g = reduced_thomas_walls(9).unwrap().graph;
        let r = decide_excess_report(&g, 0).unwrap();
        assert_eq!((r.n, r.kernel_n, r.reduction_steps), (28, 13, 5));
    }

    #[test]
    fn decide_rejects_triangles() {
        let k4 = crate::tw_family::thomas_walls(1).unwrap().graph;
        assert!(matches!(
            decide_excess(&k4, 0),
            Err(SolverError::Kernel(KernelError::NotTriangleFree(_)))
        ));
        assert!(decide_excess_direct(&k4, 0).is_err());
    }
}
