//! Construction by blocks: splicing posets into a Hasse diagram, and the
//! realization space `X(G, S)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use indexmap::IndexMap;

use crate::asym::build_f;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::perm::Permutation;
use crate::poset::Poset;

/// Replaces point `x` of `space` by the block `block`.
///
/// The block's points are inserted in place of `x`, renamed `"{x}/{point}"`.
/// Every former lower cover of `x` becomes covered by each level-1 point of
/// the block, and every former upper cover of `x` covers each point on the
/// block's highest level.
pub fn block_replace(space: &Poset, x: &str, block: &Poset) -> Result<Poset> {
    let xi = space.index_of(x).ok_or_else(|| Error::NoSuchPoint(x.to_string()))?;
    if block.is_empty() {
        return Err(Error::EmptyBlock);
    }
    let renamed = block.prefixed(x);
    let mut points = Vec::with_capacity(space.len() + block.len() - 1);
    for (i, p) in space.points().iter().enumerate() {
        if i == xi {
            points.extend(renamed.points().iter().cloned());
        } else {
            points.push(p.clone());
        }
    }
    for p in renamed.points() {
        if space.index_of(p).is_some() {
            return Err(Error::PointCollision(p.clone()));
        }
    }

    let name = |i: usize| space.points()[i].clone();
    let inner = |i: usize| renamed.points()[i].clone();
    let mut covers: Vec<(String, String)> = space
        .cover_indices()
        .iter()
        .filter(|&&(a, b)| a != xi && b != xi)
        .map(|&(a, b)| (name(a), name(b)))
        .collect();
    covers.extend(renamed.covers().map(|(a, b)| (a.to_string(), b.to_string())));
    let first = renamed.first_level();
    let last = renamed.last_level();
    for &y in space.lower_covers(xi) {
        covers.extend(first.iter().map(|&b| (name(y), inner(b))));
    }
    for &z in space.upper_covers(xi) {
        covers.extend(last.iter().map(|&t| (inner(t), name(z))));
    }
    Poset::new(points, covers)
}

/// Named blocks plus directed connections `(lower, upper)` between them.
#[derive(Clone, Debug, Default)]
pub struct BlockPlan {
    blocks: IndexMap<String, Poset>,
    connections: Vec<(String, String)>,
}

impl BlockPlan {
    pub fn new() -> Self {
        BlockPlan::default()
    }

    /// Adds a block; a block with the same name is replaced.
    pub fn add_block(&mut self, name: impl Into<String>, block: Poset) {
        self.blocks.insert(name.into(), block);
    }

    /// Connects the last level of `lower` to the first level of `upper`.
    pub fn connect(&mut self, lower: &str, upper: &str) -> Result<()> {
        for b in [lower, upper] {
            if !self.blocks.contains_key(b) {
                return Err(Error::UnknownBlock(b.to_string()));
            }
        }
        let pair = (lower.to_string(), upper.to_string());
        if !self.connections.contains(&pair) {
            self.connections.push(pair);
        }
        Ok(())
    }

    pub fn blocks(&self) -> &IndexMap<String, Poset> {
        &self.blocks
    }

    pub fn connections(&self) -> &[(String, String)] {
        &self.connections
    }
}

/// Disjoint union of the blocks (points prefixed by block name) joined by a
/// complete bipartite set of covers for each connection.
pub fn assemble(plan: &BlockPlan) -> Result<Poset> {
    let nb = plan.blocks.len();
    let mut block_succ = vec![Vec::new(); nb];
    for (lo, hi) in &plan.connections {
        let a = plan.blocks.get_index_of(lo).ok_or_else(|| Error::UnknownBlock(lo.clone()))?;
        let b = plan.blocks.get_index_of(hi).ok_or_else(|| Error::UnknownBlock(hi.clone()))?;
        if a == b {
            return Err(Error::CyclicPlan(lo.clone()));
        }
        block_succ[a].push(b);
    }
    check_block_dag(plan, &block_succ)?;

    let mut points = Vec::new();
    let mut offsets = Vec::with_capacity(nb);
    let mut relation = Vec::new();
    let mut firsts = Vec::with_capacity(nb);
    let mut lasts = Vec::with_capacity(nb);
    for (name, block) in &plan.blocks {
        let off = points.len();
        offsets.push(off);
        points.extend(block.points().iter().map(|p| format!("{name}/{p}")));
        relation.extend(block.cover_indices().iter().map(|&(x, y)| (x + off, y + off)));
        firsts.push(block.first_level());
        lasts.push(block.last_level());
    }
    for (a, succ) in block_succ.iter().enumerate() {
        for &b in succ {
            for &t in &lasts[a] {
                for &s in &firsts[b] {
                    relation.push((t + offsets[a], s + offsets[b]));
                }
            }
        }
    }
    let mut index = HashMap::with_capacity(points.len());
    for (i, p) in points.iter().enumerate() {
        if index.insert(p.clone(), i).is_some() {
            return Err(Error::DuplicatePoint(p.clone()));
        }
    }
    Poset::from_index_relation(points, index, &relation)
}

fn check_block_dag(plan: &BlockPlan, succ: &[Vec<usize>]) -> Result<()> {
    // 0 = unvisited, 1 = on stack, 2 = done
    let mut state = vec![0u8; succ.len()];
    for root in 0..succ.len() {
        if state[root] != 0 {
            continue;
        }
        let mut stack = vec![(root, 0usize)];
        state[root] = 1;
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            if *next < succ[v].len() {
                let w = succ[v][*next];
                *next += 1;
                match state[w] {
                    0 => {
                        state[w] = 1;
                        stack.push((w, 0));
                    }
                    1 => {
                        let name = plan.blocks.get_index(w).expect("index in range").0;
                        return Err(Error::CyclicPlan(name.clone()));
                    }
                    _ => {}
                }
            } else {
                state[v] = 2;
                stack.pop();
            }
        }
    }
    Ok(())
}

/// What a block of `X(G, S)` stands for. `g` is an element index and
/// `color` the 1-based generator index of the Cayley edge `(g, g_color * g)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BlockRole {
    Vertex { g: usize },
    Edge { g: usize, color: usize },
    Start { g: usize, color: usize },
    End { g: usize, color: usize },
}

impl BlockRole {
    /// Index `i` of the block type `F_i`, for `n` generators.
    pub fn f_index(&self, n: usize) -> usize {
        match *self {
            BlockRole::Vertex { .. } => 0,
            BlockRole::Edge { color, .. } => color,
            BlockRole::Start { color, .. } => n + color,
            BlockRole::End { color, .. } => 2 * n + color,
        }
    }

    pub fn element(&self) -> usize {
        match *self {
            BlockRole::Vertex { g }
            | BlockRole::Edge { g, .. }
            | BlockRole::Start { g, .. }
            | BlockRole::End { g, .. } => g,
        }
    }

    fn with_element(&self, g: usize) -> BlockRole {
        match *self {
            BlockRole::Vertex { .. } => BlockRole::Vertex { g },
            BlockRole::Edge { color, .. } => BlockRole::Edge { g, color },
            BlockRole::Start { color, .. } => BlockRole::Start { g, color },
            BlockRole::End { color, .. } => BlockRole::End { g, color },
        }
    }

    fn block_name(&self, group: &FiniteGroup) -> String {
        let n = group.generators().len();
        let f = self.f_index(n);
        let el = &group.elements()[self.element()];
        match *self {
            BlockRole::Vertex { .. } => format!("vertex({el})/F{f}"),
            BlockRole::Edge { color, .. } => format!("edge({el},{color})/F{f}"),
            BlockRole::Start { color, .. } => format!("start({el},{color})/F{f}"),
            BlockRole::End { color, .. } => format!("end({el},{color})/F{f}"),
        }
    }
}

/// Where a point of `X(G, S)` came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointOrigin {
    pub block: String,
    pub role: BlockRole,
    pub f_index: usize,
    /// Name of the point inside its `F` block, e.g. `t3/top`.
    pub local: String,
}

/// The assembled space `X(G, S)` together with the block each point came
/// from.
#[derive(Clone, Debug)]
pub struct RealizationSpace {
    pub poset: Poset,
    /// Indexed like `poset.points()`.
    pub provenance: Vec<PointOrigin>,
    pub group_order: usize,
    pub generator_count: usize,
}

/// `8|G| + |G| * sum_{k=1..n} (6k + 6n + 24)`.
pub fn realization_size(group_order: usize, n: usize) -> usize {
    8 * group_order + group_order * (1..=n).map(|k| 6 * k + 6 * n + 24).sum::<usize>()
}

/// Builds `X(G, S)`: an `F_0` block per element; per colored edge
/// `(g, g_k g)` an `F_k` edge block on the first block level, an `F_{n+k}`
/// block above the edge block and the block of `g`, and an `F_{2n+k}` block
/// above the edge block and the block of `g_k g`.
pub fn build_realization(group: &FiniteGroup) -> Result<RealizationSpace> {
    let n = group.generators().len();
    if n == 0 {
        return Err(Error::NoGenerators);
    }
    let order = group.order();
    let fblocks: Vec<Poset> = (0..=3 * n).map(build_f).collect();

    let mut roles = Vec::new();
    roles.extend((0..order).map(|g| BlockRole::Vertex { g }));
    for make in [
        (|g, color| BlockRole::Edge { g, color }) as fn(usize, usize) -> BlockRole,
        |g, color| BlockRole::Start { g, color },
        |g, color| BlockRole::End { g, color },
    ] {
        for g in 0..order {
            for color in 1..=n {
                roles.push(make(g, color));
            }
        }
    }

    let mut plan = BlockPlan::new();
    let names: Vec<String> = roles.iter().map(|r| r.block_name(group)).collect();
    for (role, name) in roles.iter().zip(&names) {
        plan.add_block(name.clone(), fblocks[role.f_index(n)].clone());
    }
    let name_of = |role: BlockRole| role.block_name(group);
    for g in 0..order {
        for color in 1..=n {
            let target = group.mul(group.generators()[color - 1], g);
            let edge = name_of(BlockRole::Edge { g, color });
            let start = name_of(BlockRole::Start { g, color });
            let end = name_of(BlockRole::End { g, color });
            plan.connect(&name_of(BlockRole::Vertex { g }), &start)?;
            plan.connect(&edge, &start)?;
            plan.connect(&name_of(BlockRole::Vertex { g: target }), &end)?;
            plan.connect(&edge, &end)?;
        }
    }

    let poset = assemble(&plan)?;
    let mut provenance = Vec::with_capacity(poset.len());
    for (role, name) in roles.iter().zip(&names) {
        let f = role.f_index(n);
        for local in fblocks[f].points() {
            provenance.push(PointOrigin {
                block: name.clone(),
                role: *role,
                f_index: f,
                local: local.clone(),
            });
        }
    }
    debug_assert_eq!(provenance.len(), poset.len());
    Ok(RealizationSpace {
        poset,
        provenance,
        group_order: order,
        generator_count: n,
    })
}

impl RealizationSpace {
    pub fn origin(&self, point: &str) -> Option<&PointOrigin> {
        self.poset.index_of(point).map(|i| &self.provenance[i])
    }

    /// Number of blocks of each type `F_i`.
    pub fn inventory(&self) -> BTreeMap<usize, usize> {
        let mut counts = BTreeMap::new();
        for (role, _) in self.blocks() {
            *counts.entry(role.f_index(self.generator_count)).or_insert(0) += 1;
        }
        counts
    }

    /// Point indices of each block, in block order.
    pub fn blocks(&self) -> Vec<(BlockRole, Vec<usize>)> {
        let mut out: Vec<(BlockRole, Vec<usize>)> = Vec::new();
        for (i, o) in self.provenance.iter().enumerate() {
            match out.last_mut() {
                Some((role, pts)) if *role == o.role => pts.push(i),
                _ => out.push((o.role, vec![i])),
            }
        }
        out
    }

    /// Points per Hasse level, lowest first.
    pub fn level_sizes(&self) -> Vec<usize> {
        let levels = self.poset.levels();
        let mut sizes = vec![0; levels.iter().copied().max().unwrap_or(0)];
        for l in levels {
            sizes[l - 1] += 1;
        }
        sizes
    }

    /// The map on points induced by the right translation `g -> g h` of the
    /// Cayley graph: each block moves to the block of the same kind at the
    /// translated element, identically on block interiors.
    pub fn induced_map(&self, group: &FiniteGroup, h: usize) -> Permutation {
        let lookup: HashMap<(BlockRole, &str), usize> = self
            .provenance
            .iter()
            .enumerate()
            .map(|(i, o)| ((o.role, o.local.as_str()), i))
            .collect();
        let images = self
            .provenance
            .iter()
            .map(|o| {
                let moved = o.role.with_element(group.mul(o.role.element(), h));
                lookup[&(moved, o.local.as_str())]
            })
            .collect();
        Permutation::from_images(images).expect("translation permutes blocks")
    }
}

impl fmt::Display for RealizationSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "|G| = {}, |S| = {}", self.group_order, self.generator_count)?;
        writeln!(f, "points: {}", self.poset.len())?;
        writeln!(f, "covers: {}", self.poset.cover_count())?;
        let inv: Vec<String> = self
            .inventory()
            .iter()
            .map(|(i, c)| format!("{c}xF_{i}"))
            .collect();
        writeln!(f, "blocks: {}", inv.join(", "))?;
        let sizes: Vec<String> = self.level_sizes().iter().map(|s| s.to_string()).collect();
        write!(f, "level sizes: [{}]", sizes.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, dihedral};

    #[test]
    fn singleton_block_is_neutral() {
        let x = Poset::chain(&["a", "x", "c"]);
        let r = block_replace(&x, "x", &Poset::chain(&["s"])).unwrap();
        assert!(r.isomorphic(&x).is_some());
        assert_eq!(r.points(), &["a", "x/s", "c"]);
    }

    #[test]
    fn splice_f0_into_chain() {
        let x = Poset::chain(&["a", "x", "c"]);
        let r = block_replace(&x, "x", &build_f(0)).unwrap();
        assert_eq!(r.len(), 10);
        let a = r.index_of("a").unwrap();
        let c = r.index_of("c").unwrap();
        assert_eq!(r.upper_covers(a).len(), 4);
        assert_eq!(r.lower_covers(c).len(), 4);
        assert_eq!(r.height(), 4);
    }

    #[test]
    fn splice_isolated_point() {
        let x = Poset::new(vec!["p".into(), "q".into()], Vec::<(&str, &str)>::new()).unwrap();
        let r = block_replace(&x, "q", &build_f(3)).unwrap();
        assert_eq!(r.len(), 15);
        assert_eq!(r.cover_count(), build_f(3).cover_count());
        assert!(!r.is_connected());
    }

    #[test]
    fn splice_errors() {
        let x = Poset::chain(&["a", "b"]);
        assert!(matches!(block_replace(&x, "z", &build_f(0)), Err(Error::NoSuchPoint(_))));
        assert!(matches!(block_replace(&x, "a", &Poset::empty()), Err(Error::EmptyBlock)));
        let y = Poset::new(vec!["a".into(), "a/s".into()], Vec::<(&str, &str)>::new()).unwrap();
        assert!(matches!(
            block_replace(&y, "a", &Poset::chain(&["s"])),
            Err(Error::PointCollision(_))
        ));
    }

    #[test]
    fn assemble_two_blocks() {
        let mut plan = BlockPlan::new();
        plan.add_block("lo", build_f(0));
        plan.add_block("hi", build_f(0));
        plan.connect("lo", "hi").unwrap();
        let p = assemble(&plan).unwrap();
        assert_eq!(p.len(), 16);
        assert_eq!(p.cover_count(), 2 * 11 + 16);
        assert_eq!(p.height(), 4);
    }

    #[test]
    fn assemble_single_block_renames() {
        let mut plan = BlockPlan::new();
        plan.add_block("B", Poset::chain(&["u", "v"]));
        let p = assemble(&plan).unwrap();
        assert_eq!(p.points(), &["B/u", "B/v"]);
        assert_eq!(p.cover_count(), 1);
    }

    #[test]
    fn assemble_rejects_cycles() {
        let mut plan = BlockPlan::new();
        for b in ["a", "b", "c"] {
            plan.add_block(b, Poset::chain(&["p"]));
        }
        plan.connect("a", "b").unwrap();
        plan.connect("b", "c").unwrap();
        plan.connect("c", "a").unwrap();
        assert!(matches!(assemble(&plan), Err(Error::CyclicPlan(_))));
        assert!(matches!(plan.connect("a", "nope"), Err(Error::UnknownBlock(_))));
    }

    #[test]
    fn realization_of_z3() {
        let g = cyclic(3).unwrap();
        let x = build_realization(&g).unwrap();
        assert_eq!(x.poset.len(), 132);
        assert_eq!(realization_size(3, 1), 132);
        assert_eq!(x.inventory(), BTreeMap::from([(0, 3), (1, 3), (2, 3), (3, 3)]));
        assert!(x.poset.is_minimal());
        assert_eq!(x.level_sizes().len(), 4);
        assert_eq!(x.origin("vertex(e)/F0/a/bot").unwrap().f_index, 0);
        assert!(matches!(
            build_realization(&cyclic(1).unwrap()),
            Err(Error::NoGenerators)
        ));
    }

    #[test]
    fn realization_of_d6() {
        let g = dihedral(6).unwrap();
        let x = build_realization(&g).unwrap();
        assert_eq!(x.poset.len(), 588);
        let inv = x.inventory();
        assert_eq!(inv.len(), 7);
        assert!(inv.values().all(|&c| c == 6));
    }

    #[test]
    fn induced_identity() {
        let g = cyclic(3).unwrap();
        let x = build_realization(&g).unwrap();
        assert!(x.induced_map(&g, g.identity()).is_identity());
    }
}
