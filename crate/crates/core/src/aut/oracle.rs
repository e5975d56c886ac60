//! Exhaustive automorphism enumeration for small digraphs.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use super::AutGroup;
use crate::digraph::ColoredDigraph;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Largest vertex count the oracle accepts.
pub const ORACLE_LIMIT: usize = 10;

/// Enumerates every vertex bijection (in lexicographic order of image tuples,
/// skipping prefixes that already break an edge) and keeps those preserving
/// all colored edges.
///
/// The reported generators are, for each `i` and `j != i`, the first
/// automorphism found that fixes `0..i` and sends `i` to `j`; together they
/// generate the whole group.
pub fn brute_force_automorphisms(d: &ColoredDigraph) -> Result<AutGroup> {
    let n = d.vertex_count();
    if n > ORACLE_LIMIT {
        return Err(Error::OracleLimit(n, ORACLE_LIMIT));
    }
    let mut colors: Vec<Vec<Vec<u32>>> = vec![vec![Vec::new(); n]; n];
    for &(s, t, c) in d.edges() {
        colors[s][t].push(c);
    }

    let mut images = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut count: u64 = 0;
    let mut transversal: BTreeMap<(usize, usize), Permutation> = BTreeMap::new();
    enumerate(0, n, &colors, &mut images, &mut used, &mut |img| {
        count += 1;
        let p = Permutation::from_images(img.to_vec()).expect("bijection");
        debug_assert!(d.is_automorphism(&p));
        if let Some(i) = (0..n).find(|&i| img[i] != i) {
            transversal.entry((i, img[i])).or_insert(p);
        }
    });
    let mut generators: Vec<Permutation> = transversal.into_values().collect();
    generators.sort();
    Ok(AutGroup {
        generators,
        order: BigUint::from(count),
    })
}

fn enumerate(
    i: usize,
    n: usize,
    colors: &[Vec<Vec<u32>>],
    images: &mut Vec<usize>,
    used: &mut Vec<bool>,
    found: &mut dyn FnMut(&[usize]),
) {
    if i == n {
        found(images);
        return;
    }
    for j in 0..n {
        if used[j] {
            continue;
        }
        let consistent = (0..i).all(|u| {
            let ju = images[u];
            colors[u][i] == colors[ju][j] && colors[i][u] == colors[j][ju]
        });
        if !consistent {
            continue;
        }
        used[j] = true;
        images[i] = j;
        enumerate(i + 1, n, colors, images, used, found);
        used[j] = false;
        images[i] = usize::MAX;
    }
}
