//! Individualization-refinement search for the automorphism group.
//!
//! A first path individualizes the smallest vertex of the first non-singleton
//! cell until the partition is discrete, giving base points `v_0, v_1, ...`.
//! Working from the deepest level up, for each level `i` every vertex `w` in
//! the target cell that is not yet in the orbit of `v_i` under the
//! generators found so far is tested: the search individualizes `w` and
//! descends with matching traces to a discrete leaf, which fixes a candidate
//! bijection. The group order is the product of the orbit lengths of `v_i`
//! in the successive point stabilizers.

use std::collections::HashSet;

use num_bigint::BigUint;

use super::refine::{class_count, first_nonsingleton, individualize, refine_colors, Adjacency};
use crate::perm::{orbit, Permutation};

struct Level {
    /// Partition before individualizing `chosen`.
    colors: Vec<usize>,
    cell: usize,
    chosen: usize,
    /// Trace of the refinement after individualizing `chosen`.
    trace: u64,
}

pub(crate) struct Search<'a> {
    adj: &'a Adjacency,
    edges: HashSet<(usize, usize, u32)>,
    root: Vec<usize>,
    levels: Vec<Level>,
    /// Vertex of the left leaf in each class.
    leaf_vertex: Vec<usize>,
    pub nodes: usize,
}

fn cell_members(colors: &[usize], cell: usize) -> Vec<usize> {
    (0..colors.len()).filter(|&u| colors[u] == cell).collect()
}

impl<'a> Search<'a> {
    /// `root` must already be refined.
    pub fn new(adj: &'a Adjacency, root: Vec<usize>) -> Self {
        let mut edges = HashSet::new();
        for (s, out) in adj.out.iter().enumerate() {
            for &(t, c) in out {
                edges.insert((s, t, c));
            }
        }
        let mut levels = Vec::new();
        let mut colors = root.clone();
        while let Some(cell) = first_nonsingleton(&colors) {
            let chosen = cell_members(&colors, cell)[0];
            let mut next = individualize(&colors, chosen);
            let trace = refine_colors(adj, &mut next);
            levels.push(Level {
                colors,
                cell,
                chosen,
                trace,
            });
            colors = next;
        }
        let mut leaf_vertex = vec![0; adj.n];
        for (v, &c) in colors.iter().enumerate() {
            leaf_vertex[c] = v;
        }
        Search {
            adj,
            edges,
            root,
            levels,
            leaf_vertex,
            nodes: 0,
        }
    }

    pub fn run(&mut self) -> (Vec<Permutation>, BigUint) {
        let mut gens: Vec<Permutation> = Vec::new();
        let mut order = BigUint::from(1u32);
        for i in (0..self.levels.len()).rev() {
            let chosen = self.levels[i].chosen;
            let colors = self.levels[i].colors.clone();
            let members = cell_members(&colors, self.levels[i].cell);
            let mut orb: HashSet<usize> = orbit(chosen, &gens).into_iter().collect();
            for w in members {
                if orb.contains(&w) {
                    continue;
                }
                if let Some(p) = self.try_map(i, &colors, w) {
                    debug_assert!((0..self.adj.n).all(|v| self.root[p.apply(v)] == self.root[v]));
                    gens.push(p);
                    orb = orbit(chosen, &gens).into_iter().collect();
                }
            }
            order *= BigUint::from(orb.len());
        }
        gens.sort();
        gens.dedup();
        (gens, order)
    }

    /// Looks for an automorphism that agrees with the left path above level
    /// `i` and maps `v_i` to `w`.
    fn try_map(&mut self, i: usize, colors: &[usize], w: usize) -> Option<Permutation> {
        self.nodes += 1;
        let mut c = individualize(colors, w);
        if refine_colors(self.adj, &mut c) != self.levels[i].trace {
            return None;
        }
        if i + 1 == self.levels.len() {
            if class_count(&c) != self.adj.n {
                return None;
            }
            let mut images = vec![0; self.adj.n];
            for (u, &cls) in c.iter().enumerate() {
                images[self.leaf_vertex[cls]] = u;
            }
            let p = Permutation::from_images(images).ok()?;
            return self.is_automorphism(&p).then_some(p);
        }
        let cell = self.levels[i + 1].cell;
        for u in cell_members(&c, cell) {
            if let Some(p) = self.try_map(i + 1, &c, u) {
                return Some(p);
            }
        }
        None
    }

    fn is_automorphism(&self, p: &Permutation) -> bool {
        self.edges
            .iter()
            .all(|&(s, t, c)| self.edges.contains(&(p.apply(s), p.apply(t), c)))
    }
}
