//! The family `F_k` of asymmetric minimal finite spaces.
//!
//! `F_k` has two levels of `n = k + 4` points each, named `a`, `b`,
//! `t3`, ..., `tn` and suffixed `/bot` or `/top`. On each level `a` and `b`
//! have Hasse degree 2 and `ti` has degree `i`:
//!
//! * `a/bot` is covered by `a/top` and `tn/top`; `a/top` covers `tn/bot`.
//! * `b/bot` is covered by `tn/top` and `t(n-1)/top`; `b/top` covers
//!   `tn/bot` and `t(n-1)/bot`.
//! * `ti/bot` is covered by `tj/top` exactly when `i + j >= n + 1`.
//!
//! The degree sequence makes every point of degree > 2 fixed by any
//! automorphism, and the two degree-2 points on a level have neighbor
//! degrees `{2, n}` and `{n - 1, n}`, so the space is asymmetric.

use crate::aut::hasse_automorphisms;
use crate::poset::Poset;

/// Index `k` of a block `F_k` and its per-level size `n = k + 4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockSpec {
    pub k: usize,
    pub n: usize,
}

impl BlockSpec {
    pub fn new(k: usize) -> Self {
        BlockSpec { k, n: k + 4 }
    }

    pub fn point_count(&self) -> usize {
        2 * self.n
    }

    /// `3 + 4 + #{(i, j) : 3 <= i, j <= n, i + j >= n + 1}`.
    pub fn cover_count(&self) -> usize {
        let n = self.n;
        let pairs = (3..=n)
            .flat_map(|i| (3..=n).map(move |j| (i, j)))
            .filter(|&(i, j)| i + j > n)
            .count();
        7 + pairs
    }

    fn level_names(&self) -> Vec<String> {
        let mut names = vec!["a".to_string(), "b".to_string()];
        names.extend((3..=self.n).map(|i| format!("t{i}")));
        names
    }
}

/// Builds `F_k`. Bottom row first, then top row; each row is
/// `a, b, t3, ..., tn`.
pub fn build_f(k: usize) -> Poset {
    let spec = BlockSpec::new(k);
    let n = spec.n;
    let names = spec.level_names();
    let mut points: Vec<String> = names.iter().map(|s| format!("{s}/bot")).collect();
    points.extend(names.iter().map(|s| format!("{s}/top")));

    let bot = |s: &str| format!("{s}/bot");
    let top = |s: &str| format!("{s}/top");
    let tn = format!("t{n}");
    let tn1 = format!("t{}", n - 1);
    let mut covers = vec![
        (bot("a"), top("a")),
        (bot("a"), top(&tn)),
        (bot(&tn), top("a")),
        (bot("b"), top(&tn)),
        (bot("b"), top(&tn1)),
        (bot(&tn), top("b")),
        (bot(&tn1), top("b")),
    ];
    for i in 3..=n {
        for j in 3..=n {
            if i + j > n {
                covers.push((bot(&format!("t{i}")), top(&format!("t{j}"))));
            }
        }
    }
    Poset::new(points, covers).expect("F_k is a two-level poset")
}

/// Outcome of checking one member of the family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyRow {
    pub k: usize,
    pub points: usize,
    pub minimal: bool,
    pub aut_order: u64,
    pub connected: bool,
}

impl FamilyRow {
    pub fn passed(&self) -> bool {
        self.points == BlockSpec::new(self.k).point_count()
            && self.minimal
            && self.aut_order == 1
            && self.connected
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyReport {
    pub rows: Vec<FamilyRow>,
    /// Point counts pairwise distinct, so no two members are homeomorphic.
    pub sizes_distinct: bool,
}

impl FamilyReport {
    pub fn passed(&self) -> bool {
        self.sizes_distinct && self.rows.iter().all(FamilyRow::passed)
    }
}

/// Checks minimality, asymmetry and connectivity of `F_0 ..= F_{k_max}`.
pub fn family_checks(k_max: usize) -> FamilyReport {
    let rows: Vec<FamilyRow> = (0..=k_max)
        .map(|k| {
            let f = build_f(k);
            let aut = hasse_automorphisms(&f);
            FamilyRow {
                k,
                points: f.len(),
                minimal: f.is_minimal(),
                aut_order: aut.order_u64().unwrap_or(u64::MAX),
                connected: f.is_connected(),
            }
        })
        .collect();
    let mut sizes: Vec<usize> = rows.iter().map(|r| r.points).collect();
    sizes.sort_unstable();
    let sizes_distinct = sizes.windows(2).all(|w| w[0] < w[1]);
    FamilyReport { rows, sizes_distinct }
}
