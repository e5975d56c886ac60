//! Isomorphism search between two colored digraphs.
//!
//! Both graphs are refined together as one disjoint union. A cell is
//! balanced when it holds as many vertices of the first graph as of the
//! second; unbalanced cells rule out an isomorphism. The search pairs the
//! first left vertex of a cell with each right vertex in turn.

use std::collections::HashSet;

use super::refine::{individualize, normalize, refine_colors, Adjacency};
use crate::digraph::ColoredDigraph;

fn balanced(colors: &[usize], split: usize) -> bool {
    let k = colors.iter().copied().max().map_or(0, |m| m + 1);
    let mut diff = vec![0isize; k];
    for (v, &c) in colors.iter().enumerate() {
        diff[c] += if v < split { 1 } else { -1 };
    }
    diff.iter().all(|&d| d == 0)
}

/// A vertex map `a -> b` preserving colored edges and the seeds, if one
/// exists. Seeds are compared as values, so both must use one encoding.
pub fn find_isomorphism(
    a: &ColoredDigraph,
    seed_a: Option<&[u64]>,
    b: &ColoredDigraph,
    seed_b: Option<&[u64]>,
) -> Option<Vec<usize>> {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return None;
    }
    let adj = Adjacency::union(&Adjacency::new(a), &Adjacency::new(b));
    let mut raw: Vec<u64> = Vec::with_capacity(2 * n);
    raw.extend(seed_a.map_or_else(|| vec![0; n], <[u64]>::to_vec));
    raw.extend(seed_b.map_or_else(|| vec![0; n], <[u64]>::to_vec));
    let mut colors = normalize(&raw);
    refine_colors(&adj, &mut colors);
    let target: HashSet<(usize, usize, u32)> = b.edges().iter().copied().collect();
    descend(&adj, &colors, n, a, &target)
}

fn descend(
    adj: &Adjacency,
    colors: &[usize],
    n: usize,
    a: &ColoredDigraph,
    target: &HashSet<(usize, usize, u32)>,
) -> Option<Vec<usize>> {
    if !balanced(colors, n) {
        return None;
    }
    let k = colors.iter().copied().max().map_or(0, |m| m + 1);
    let mut sizes = vec![0usize; k];
    for &c in colors {
        sizes[c] += 1;
    }
    match sizes.iter().position(|&s| s > 2) {
        None => {
            let mut left = vec![usize::MAX; k];
            let mut map = vec![usize::MAX; n];
            for (v, &c) in colors.iter().enumerate().take(n) {
                left[c] = v;
            }
            for (v, &c) in colors.iter().enumerate().skip(n) {
                map[left[c]] = v - n;
            }
            let ok = a
                .edges()
                .iter()
                .all(|&(s, t, c)| target.contains(&(map[s], map[t], c)));
            ok.then_some(map)
        }
        Some(cell) => {
            let v = (0..n).find(|&u| colors[u] == cell)?;
            let first = individualize(colors, v);
            for w in (n..2 * n).filter(|&u| colors[u] == cell) {
                // v and w share the color colors[v] after individualizing both
                let mut next: Vec<usize> = first
                    .iter()
                    .enumerate()
                    .map(|(u, &c)| if u == w { first[v] } else { c })
                    .collect();
                refine_colors(adj, &mut next);
                if let Some(map) = descend(adj, &next, n, a, target) {
                    return Some(map);
                }
            }
            None
        }
    }
}
