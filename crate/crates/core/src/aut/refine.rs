//! Color refinement (1-dimensional Weisfeiler-Leman) on colored digraphs.
//!
//! Colorings are dense ranks `0..k`. A refinement round recolors each vertex
//! by its old color and the sorted multiset of `(direction, edge color,
//! neighbor color)` over its edges; new colors are the ranks of those
//! signatures, so cell order depends only on the structure and never on
//! vertex numbering.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use crate::digraph::ColoredDigraph;

pub(crate) struct Adjacency {
    pub n: usize,
    pub out: Vec<Vec<(usize, u32)>>,
    pub inn: Vec<Vec<(usize, u32)>>,
}

impl Adjacency {
    pub fn new(d: &ColoredDigraph) -> Self {
        let n = d.vertex_count();
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for &(s, t, c) in d.edges() {
            out[s].push((t, c));
            inn[t].push((s, c));
        }
        Adjacency { n, out, inn }
    }

    /// Disjoint union; vertices of `b` are shifted by `a.n`.
    pub fn union(a: &Adjacency, b: &Adjacency) -> Self {
        let shift = |v: &Vec<(usize, u32)>| v.iter().map(|&(w, c)| (w + a.n, c)).collect::<Vec<_>>();
        let mut out = a.out.clone();
        out.extend(b.out.iter().map(shift));
        let mut inn = a.inn.clone();
        inn.extend(b.inn.iter().map(shift));
        Adjacency {
            n: a.n + b.n,
            out,
            inn,
        }
    }
}

/// Dense ranks of arbitrary seed values, preserving their order.
pub(crate) fn normalize<T: Ord + Copy>(seed: &[T]) -> Vec<usize> {
    let mut distinct: Vec<T> = seed.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    seed.iter()
        .map(|x| distinct.binary_search(x).expect("value present"))
        .collect()
}

pub(crate) fn class_count(colors: &[usize]) -> usize {
    colors.iter().copied().max().map_or(0, |m| m + 1)
}

/// Refines `colors` in place to the coarsest equitable partition below it.
/// Returns a hash of the refinement trace; isomorphic inputs produce equal
/// traces.
pub(crate) fn refine_colors(adj: &Adjacency, colors: &mut [usize]) -> u64 {
    let n = adj.n;
    let mut hasher = DefaultHasher::new();
    let mut classes = class_count(colors);
    let mut order: Vec<usize> = (0..n).collect();
    loop {
        let sigs: Vec<Vec<(u8, u32, usize)>> = (0..n)
            .map(|v| {
                let mut s: Vec<(u8, u32, usize)> = adj.out[v]
                    .iter()
                    .map(|&(w, c)| (0, c, colors[w]))
                    .chain(adj.inn[v].iter().map(|&(w, c)| (1, c, colors[w])))
                    .collect();
                s.sort_unstable();
                s
            })
            .collect();
        order.sort_by(|&a, &b| (colors[a], &sigs[a]).cmp(&(colors[b], &sigs[b])));

        let mut next = vec![0usize; n];
        let mut rank = 0;
        let mut run = 0usize;
        for (pos, &v) in order.iter().enumerate() {
            if pos > 0 {
                let u = order[pos - 1];
                if (colors[u], &sigs[u]) != (colors[v], &sigs[v]) {
                    (colors[u], &sigs[u], run).hash(&mut hasher);
                    rank += 1;
                    run = 0;
                }
            }
            next[v] = rank;
            run += 1;
        }
        if let Some(&last) = order.last() {
            (colors[last], &sigs[last], run).hash(&mut hasher);
        }
        let new_classes = if n == 0 { 0 } else { rank + 1 };
        colors.copy_from_slice(&next);
        if new_classes == classes {
            break;
        }
        classes = new_classes;
    }
    classes.hash(&mut hasher);
    hasher.finish()
}

/// Gives `v` its own color, placed just before the rest of its cell.
pub(crate) fn individualize(colors: &[usize], v: usize) -> Vec<usize> {
    let cv = colors[v];
    colors
        .iter()
        .enumerate()
        .map(|(u, &c)| if c > cv || (c == cv && u != v) { c + 1 } else { c })
        .collect()
}

/// Smallest color whose cell has more than one vertex.
pub(crate) fn first_nonsingleton(colors: &[usize]) -> Option<usize> {
    let mut sizes = vec![0usize; class_count(colors)];
    for &c in colors {
        sizes[c] += 1;
    }
    sizes.iter().position(|&s| s > 1)
}
