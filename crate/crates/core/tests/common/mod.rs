#![allow(dead_code)]

use finspace::{ColoredDigraph, Poset};
use rand::seq::SliceRandom;
use rand::Rng;

/// A random strict order on `n` points: the raw relation (before reduction),
/// its transitive closure computed independently by Warshall's algorithm,
/// and the poset built from it. Point names are shuffled so that point order
/// is unrelated to the order relation.
pub struct RandomOrder {
    pub names: Vec<String>,
    pub closure: Vec<Vec<bool>>,
    pub poset: Poset,
}

pub fn random_order<R: Rng>(rng: &mut R, n: usize, density: f64) -> RandomOrder {
    let names: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
    let mut closure = vec![vec![false; n]; n];
    let mut relation = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                closure[i][j] = true;
                relation.push((names[i].clone(), names[j].clone()));
            }
        }
    }
    for k in 0..n {
        let through = closure[k].clone();
        for row in closure.iter_mut().filter(|row| row[k]) {
            for (j, &reach) in through.iter().enumerate() {
                row[j] |= reach;
            }
        }
    }
    let mut points = names.clone();
    points.shuffle(rng);
    let poset = Poset::from_relation(points, relation).expect("forward edges are acyclic");
    RandomOrder { names, closure, poset }
}

/// Order-theoretic beat points: `x` is up-beat when `{z : x < z}` has a
/// minimum, down-beat when `{z : z < x}` has a maximum.
pub fn beat_oracle(order: &RandomOrder) -> (Vec<String>, Vec<String>) {
    let c = &order.closure;
    let n = c.len();
    let mut up = Vec::new();
    let mut down = Vec::new();
    for x in 0..n {
        let above: Vec<usize> = (0..n).filter(|&z| c[x][z]).collect();
        if above.iter().any(|&y| above.iter().all(|&z| z == y || c[y][z])) {
            up.push(order.names[x].clone());
        }
        let below: Vec<usize> = (0..n).filter(|&z| c[z][x]).collect();
        if below.iter().any(|&y| below.iter().all(|&z| z == y || c[z][y])) {
            down.push(order.names[x].clone());
        }
    }
    up.sort();
    down.sort();
    (up, down)
}

/// Random colored digraphs on at most `max_n` vertices. Some are built with
/// repeated components or rotational structure so that non-trivial
/// automorphism groups are common.
pub fn random_digraph<R: Rng>(rng: &mut R, max_n: usize) -> ColoredDigraph {
    let n = rng.gen_range(0..=max_n);
    let colors = rng.gen_range(1..=3u32);
    let mut edges = Vec::new();
    match rng.gen_range(0..4) {
        0 => {
            let p = rng.gen_range(0.1..0.7);
            for s in 0..n {
                for t in 0..n {
                    if s != t && rng.gen_bool(p) {
                        edges.push((s, t, rng.gen_range(1..=colors)));
                    }
                }
            }
        }
        1 if n >= 2 => {
            // copies of one small random piece
            let piece = rng.gen_range(1..=n / 2);
            let copies = n / piece;
            let mut local = Vec::new();
            for s in 0..piece {
                for t in 0..piece {
                    if s != t && rng.gen_bool(0.4) {
                        local.push((s, t, rng.gen_range(1..=colors)));
                    }
                }
            }
            for c in 0..copies {
                edges.extend(local.iter().map(|&(s, t, col)| (c * piece + s, c * piece + t, col)));
            }
        }
        2 if n >= 1 => {
            // circulant: s -> s + d for a random set of offsets
            for d in 1..n {
                if rng.gen_bool(0.35) {
                    let col = rng.gen_range(1..=colors);
                    for s in 0..n {
                        edges.push((s, (s + d) % n, col));
                    }
                }
            }
        }
        _ => {
            // sparse, often with isolated vertices
            for s in 0..n {
                for t in 0..n {
                    if s != t && rng.gen_bool(0.12) {
                        edges.push((s, t, 1));
                    }
                }
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    ColoredDigraph::with_vertex_count(n, edges).expect("valid digraph")
}

/// Every group element generated by `gens`, by breadth-first closure.
pub fn closure_size(gens: &[finspace::Permutation], degree: usize) -> usize {
    use std::collections::HashSet;
    let id = finspace::Permutation::identity(degree);
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = vec![id];
    while let Some(p) = queue.pop() {
        for g in gens {
            let q = g.compose(&p);
            if seen.insert(q.clone()) {
                queue.push(q);
            }
        }
    }
    seen.len()
}
