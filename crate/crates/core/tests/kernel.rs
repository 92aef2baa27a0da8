use petgraph::algo::is_isomorphic;
use petgraph::graph::UnGraph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tfkernel::corpus::tube_corpus;
use tfkernel::kernelize::{
    find_clean_tube, find_clean_tube_shuffled, single_step_reduce, tube_census, tw_reduce, tw_reduce_shuffled,
    KernelError,
};
use tfkernel::plane_graph::PlaneGraph;
use tfkernel::solver::{alpha_exact, excess};
use tfkernel::tw_family::{reduced_thomas_walls, steinberg_tovey, thomas_walls};

fn to_petgraph(g: &PlaneGraph) -> UnGraph<(), ()> {
    let mut p = UnGraph::with_capacity(g.n(), g.edge_count());
    let nodes: Vec<_> = (0..g.n()).map(|_| p.add_node(())).collect();
    for (u, v) in g.edges() {
        p.add_edge(nodes[u], nodes[v], ());
    }
    p
}

#[test]
fn reduced_thomas_walls_shrink_to_t4() {
    let t4 = to_petgraph(&reduced_thomas_walls(4).unwrap().graph);
    for k in 5..=12 {
        let (kernel, report) = tw_reduce(&reduced_thomas_walls(k).unwrap().graph).unwrap();
        assert_eq!(report.steps.len(), k - 4);
        assert_eq!(report.final_n, 13);
        assert!(is_isomorphic(&to_petgraph(&kernel), &t4), "k={k}");
    }
}

#[test]
fn nine_reduces_in_five_steps() {
    let (_, report) = tw_reduce(&reduced_thomas_walls(9).unwrap().graph).unwrap();
    assert_eq!(report.steps.len(), 5);
    let sizes: Vec<usize> = report.steps.iter().map(|s| s.n_after).collect();
    assert_eq!(sizes, vec![25, 22, 19, 16, 13]);
    for s in &report.steps {
        assert_eq!(s.edges_before - s.edges_after, 5);
        assert_eq!(s.removed.len(), 8);
        assert_eq!(s.added.len(), 5);
    }
}

#[test]
fn steinberg_tovey_kernels() {
    let g5 = steinberg_tovey(5).unwrap();
    let (k5, _) = tw_reduce(&g5).unwrap();
    assert_eq!((g5.n(), k5.n()), (20, 17));
    assert_eq!((alpha_exact(&g5).value, alpha_exact(&k5).value), (7, 6));

    let g8 = steinberg_tovey(8).unwrap();
    let (k8, report) = tw_reduce(&g8).unwrap();
    assert_eq!((g8.n(), k8.n()), (29, 17));
    assert_eq!(report.steps.len(), 4);
    assert!(find_clean_tube(&k8, 5).unwrap().is_none());
    assert!(is_isomorphic(&to_petgraph(&k8), &to_petgraph(&k5)));
}

#[test]
fn tube_census_of_reduced_graphs() {
    let t6 = reduced_thomas_walls(6).unwrap().graph;
    let census = t6.face_census();
    assert_eq!((census[&4], census[&5]), (2, 10));
    assert_eq!(tube_census(&t6).unwrap().iter().max(), Some(&6));
    assert!(find_clean_tube(&t6, 7).unwrap().is_none());
    let t2 = reduced_thomas_walls(2).unwrap().graph.face_census();
    assert_eq!((t2[&4], t2[&5]), (2, 2));
}

#[test]
fn triangles_are_rejected() {
    let t = thomas_walls(5).unwrap().graph;
    assert!(matches!(tw_reduce(&t), Err(KernelError::NotTriangleFree(_))));
    assert!(matches!(find_clean_tube(&t, 5), Err(KernelError::NotTriangleFree(_))));
}

#[test]
fn occurrence_respects_the_host() {
    let g = reduced_thomas_walls(7).unwrap().graph;
    let tube = find_clean_tube(&g, 5).unwrap().unwrap();
    let fm = g.face_map();
    for f in &tube.five_faces {
        assert!(fm.is_face_cycle(f));
    }
    for c in &tube.end_cycles {
        assert!(c.iter().all(|&v| v < g.n()));
    }
    let t5 = reduced_thomas_walls(5).unwrap().graph;
    for (u, v) in t5.edges() {
        assert!(g.has_edge(tube.vertex_map[u], tube.vertex_map[v]));
    }
    let (h, step) = single_step_reduce(&g, &tube).unwrap();
    assert_eq!(h.n(), g.n() - 3);
    assert_eq!(step.n_before, g.n());
    assert!(h.is_triangle_free());
}

#[test]
fn mirrored_hosts_reduce_alike() {
    let g = reduced_thomas_walls(8).unwrap().graph.mirrored();
    let (k, report) = tw_reduce(&g).unwrap();
    assert_eq!((k.n(), report.steps.len()), (13, 4));
}

#[test]
fn scan_order_does_not_change_the_outcome() {
    let corpus = tube_corpus(21, 30, 34);
    for c in &corpus {
        let (kernel, _) = tw_reduce(&c.graph).unwrap();
        let ex = excess(&c.graph);
        for seed in 0..3 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            assert!(find_clean_tube_shuffled(&c.graph, 5, &mut rng).unwrap().is_some());
            let (other, _) = tw_reduce_shuffled(&c.graph, &mut rng).unwrap();
            assert_eq!(other.n(), kernel.n(), "{}", c.name);
            assert_eq!(excess(&other), ex, "{}", c.name);
        }
    }
}

#[test]
fn kernels_have_no_clean_five_tube() {
    for c in tube_corpus(4, 30, 40) {
        let (kernel, report) = tw_reduce(&c.graph).unwrap();
        assert!(find_clean_tube(&kernel, 5).unwrap().is_none(), "{}", c.name);
        assert_eq!(report.initial_n - report.final_n, 3 * report.steps.len());
        assert!(kernel.is_triangle_free());
    }
}
