//! Automorphism groups of colored digraphs, hence of Hasse diagrams and
//! Cayley graphs.

mod iso;
mod oracle;
mod refine;
mod search;
mod verify;

use num_bigint::BigUint;

use crate::digraph::ColoredDigraph;
use crate::perm::Permutation;
use crate::poset::Poset;

pub use iso::find_isomorphism;
pub use oracle::{brute_force_automorphisms, ORACLE_LIMIT};
pub use verify::{preserves_blocks, verify_realization, verify_realization_with_budget, VerificationReport, DEFAULT_BUDGET};

/// An automorphism group given by generators and its order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutGroup {
    pub generators: Vec<Permutation>,
    pub order: BigUint,
}

impl AutGroup {
    pub fn order_u64(&self) -> Option<u64> {
        u64::try_from(&self.order).ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.order == BigUint::from(1u32)
    }
}

/// A stable coloring: `vertex_class[v]` is the class of vertex `v`. Class
/// numbers follow the sorted order of class signatures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Refinement {
    pub vertex_class: Vec<usize>,
}

impl Refinement {
    pub fn class_count(&self) -> usize {
        refine::class_count(&self.vertex_class)
    }

    pub fn is_discrete(&self) -> bool {
        self.class_count() == self.vertex_class.len()
    }

    /// Members of each class, by class number.
    pub fn cells(&self) -> Vec<Vec<usize>> {
        let mut cells = vec![Vec::new(); self.class_count()];
        for (v, &c) in self.vertex_class.iter().enumerate() {
            cells[c].push(v);
        }
        cells
    }
}

/// Hasse diagram as a digraph: one color-1 edge per covering pair, directed
/// upward.
pub fn hasse_digraph(p: &Poset) -> ColoredDigraph {
    let edges = p.cover_indices().iter().map(|&(x, y)| (x, y, 1)).collect();
    ColoredDigraph::from_indexed(p.points().to_vec(), edges).expect("covers form a simple digraph")
}

/// `(level, in-degree, out-degree)` of every point, packed into one value.
/// Any Hasse automorphism preserves all three.
pub fn hasse_seed(p: &Poset) -> Vec<u64> {
    p.levels()
        .iter()
        .enumerate()
        .map(|(i, &l)| ((l as u64) << 42) | ((p.lower_covers(i).len() as u64) << 21) | p.upper_covers(i).len() as u64)
        .collect()
}

/// Coarsest equitable refinement of `seed` (all vertices alike if absent).
pub fn refine(d: &ColoredDigraph, seed: Option<&[u64]>) -> Refinement {
    let adj = refine::Adjacency::new(d);
    let mut colors = match seed {
        Some(s) => {
            assert_eq!(s.len(), d.vertex_count(), "seed colors every vertex");
            refine::normalize(s)
        }
        None => vec![0; d.vertex_count()],
    };
    refine::refine_colors(&adj, &mut colors);
    Refinement { vertex_class: colors }
}

pub fn automorphisms(d: &ColoredDigraph) -> AutGroup {
    automorphisms_seeded(d, None)
}

/// Automorphisms that also preserve the seed coloring.
pub fn automorphisms_seeded(d: &ColoredDigraph, seed: Option<&[u64]>) -> AutGroup {
    let adj = refine::Adjacency::new(d);
    let root = refine(d, seed).vertex_class;
    let mut search = search::Search::new(&adj, root);
    let (generators, order) = search.run();
    AutGroup { generators, order }
}

/// Automorphism group of the Hasse diagram of `p`, seeded by level and
/// degrees.
pub fn hasse_automorphisms(p: &Poset) -> AutGroup {
    automorphisms_seeded(&hasse_digraph(p), Some(&hasse_seed(p)))
}

/// A cover-preserving bijection `p -> q` as a map of point indices.
pub(crate) fn poset_isomorphism(p: &Poset, q: &Poset) -> Option<Vec<usize>> {
    if p.len() != q.len() || p.cover_count() != q.cover_count() {
        return None;
    }
    find_isomorphism(
        &hasse_digraph(p),
        Some(&hasse_seed(p)),
        &hasse_digraph(q),
        Some(&hasse_seed(q)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asym::build_f;

    fn cycle(n: usize) -> ColoredDigraph {
        ColoredDigraph::with_vertex_count(n, (0..n).map(|i| (i, (i + 1) % n, 1)).collect()).unwrap()
    }

    #[test]
    fn directed_cycle() {
        let a = automorphisms(&cycle(3));
        assert_eq!(a.order_u64(), Some(3));
        assert!(refine(&cycle(3), None).class_count() == 1);
    }

    #[test]
    fn two_disjoint_cycles_stay_one_class() {
        let mut edges: Vec<_> = (0..3).map(|i| (i, (i + 1) % 3, 1)).collect();
        edges.extend((0..3).map(|i| (3 + i, 3 + (i + 1) % 3, 1)));
        let d = ColoredDigraph::with_vertex_count(6, edges).unwrap();
        assert_eq!(refine(&d, None).class_count(), 1);
        // C3 wr S2 has order 3 * 3 * 2
        assert_eq!(automorphisms(&d).order_u64(), Some(18));
        assert_eq!(brute_force_automorphisms(&d).unwrap().order_u64(), Some(18));
    }

    #[test]
    fn hasse_digraph_shapes() {
        let single = hasse_digraph(&Poset::chain(&["x"]));
        assert_eq!((single.vertex_count(), single.edge_count()), (1, 0));
        let f0 = hasse_digraph(&build_f(0));
        // enumerated from build_f(0)
        assert_eq!((f0.vertex_count(), f0.edge_count()), (8, 11));
        let chain = hasse_digraph(&Poset::chain(&["a", "b", "c"]));
        assert_eq!(chain.edges(), &[(0, 1, 1), (1, 2, 1)]);
    }

    #[test]
    fn f3_refines_to_discrete() {
        let f = build_f(3);
        assert!(refine(&hasse_digraph(&f), None).is_discrete());
    }

    #[test]
    fn oracle_small_cases() {
        let edge = ColoredDigraph::with_vertex_count(2, vec![(0, 1, 1)]).unwrap();
        assert_eq!(brute_force_automorphisms(&edge).unwrap().order_u64(), Some(1));
        let two = ColoredDigraph::with_vertex_count(2, vec![]).unwrap();
        assert_eq!(brute_force_automorphisms(&two).unwrap().order_u64(), Some(2));
        let f0 = hasse_digraph(&build_f(0));
        let brute = brute_force_automorphisms(&f0).unwrap();
        assert_eq!(brute.order_u64(), Some(1));
        assert_eq!(brute, automorphisms(&f0));
        let big = ColoredDigraph::with_vertex_count(11, vec![]).unwrap();
        assert!(matches!(
            brute_force_automorphisms(&big),
            Err(crate::Error::OracleLimit(11, 10))
        ));
    }

    #[test]
    fn empty_graph_gives_full_symmetric_group() {
        let d = ColoredDigraph::with_vertex_count(7, vec![]).unwrap();
        assert_eq!(automorphisms(&d).order_u64(), Some(5040));
        let d = ColoredDigraph::with_vertex_count(0, vec![]).unwrap();
        assert_eq!(automorphisms(&d).order_u64(), Some(1));
    }

    #[test]
    fn poset_isomorphism_small() {
        let p = Poset::chain(&["a", "b", "c"]);
        let q = Poset::chain(&["z", "y", "x"]);
        let m = p.isomorphic(&q).unwrap();
        assert_eq!(m["a"], "z");
        assert!(build_f(2).isomorphic(&build_f(3)).is_none());
        let f = build_f(1);
        assert!(f.isomorphic(&f).is_some());
    }
}
