//! Finite T0 spaces as posets, stored through their covering relation.
//!
//! A point `x` is below `y` in the specialization order when the minimal open
//! set of `x` is contained in that of `y`; the down-set of `x` is exactly that
//! minimal open set. Only covering pairs are stored, so the Hasse diagram is
//! the primary representation.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite poset given by its points and covering pairs `(x, y)`, meaning
/// `x` is covered by `y`.
///
/// Covers are kept sorted by point index, so two posets with the same point
/// order and the same covering relation compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PosetRepr", into = "PosetRepr")]
pub struct Poset {
    points: Vec<String>,
    index: HashMap<String, usize>,
    covers: Vec<(usize, usize)>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BeatReport {
    pub up_beats: BTreeSet<String>,
    pub down_beats: BTreeSet<String>,
}

impl BeatReport {
    pub fn is_empty(&self) -> bool {
        self.up_beats.is_empty() && self.down_beats.is_empty()
    }
}

#[derive(Serialize, Deserialize)]
struct PosetRepr {
    points: Vec<String>,
    covers: Vec<(String, String)>,
}

impl TryFrom<PosetRepr> for Poset {
    type Error = Error;

    fn try_from(r: PosetRepr) -> Result<Self> {
        Poset::new(r.points, r.covers)
    }
}

impl From<Poset> for PosetRepr {
    fn from(p: Poset) -> Self {
        let covers = p
            .covers()
            .map(|(x, y)| (x.to_string(), y.to_string()))
            .collect();
        PosetRepr {
            points: p.points,
            covers,
        }
    }
}

fn index_points(points: &[String]) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(points.len());
    for (i, p) in points.iter().enumerate() {
        if index.insert(p.clone(), i).is_some() {
            return Err(Error::DuplicatePoint(p.clone()));
        }
    }
    Ok(index)
}

fn lookup(index: &HashMap<String, usize>, name: &str) -> Result<usize> {
    index
        .get(name)
        .copied()
        .ok_or_else(|| Error::NoSuchPoint(name.to_string()))
}

/// Dense bit rows, one row of `n` bits per point.
struct BitRows {
    words: usize,
    data: Vec<u64>,
}

impl BitRows {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        BitRows {
            words,
            data: vec![0; words * n],
        }
    }

    fn set(&mut self, row: usize, bit: usize) {
        self.data[row * self.words + bit / 64] |= 1 << (bit % 64);
    }

    fn get(&self, row: usize, bit: usize) -> bool {
        self.data[row * self.words + bit / 64] & (1 << (bit % 64)) != 0
    }

    fn or_into(&mut self, dst: usize, src: usize) {
        if dst == src {
            return;
        }
        let w = self.words;
        for k in 0..w {
            let v = self.data[src * w + k];
            self.data[dst * w + k] |= v;
        }
    }
}

/// Topological order of the digraph, or a vertex lying on a cycle.
fn topo_order(n: usize, succ: &[Vec<usize>]) -> std::result::Result<Vec<usize>, usize> {
    let mut indeg = vec![0usize; n];
    for s in succ {
        for &t in s {
            indeg[t] += 1;
        }
    }
    let mut order: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &t in &succ[v] {
            indeg[t] -= 1;
            if indeg[t] == 0 {
                order.push(t);
            }
        }
    }
    if order.len() == n {
        Ok(order)
    } else {
        Err((0..n).find(|&v| indeg[v] > 0).unwrap_or(0))
    }
}

/// Transitive reduction of an acyclic relation. Returns the sorted covering
/// pairs, or the index of a point on a cycle.
fn reduce(n: usize, relation: &[(usize, usize)]) -> std::result::Result<Vec<(usize, usize)>, usize> {
    let mut succ = vec![Vec::new(); n];
    for &(x, y) in relation {
        if x == y {
            return Err(x);
        }
        succ[x].push(y);
    }
    for s in &mut succ {
        s.sort_unstable();
        s.dedup();
    }
    let order = topo_order(n, &succ)?;

    // above[v] = points strictly above v
    let mut above = BitRows::new(n);
    for &v in order.iter().rev() {
        for &w in &succ[v] {
            above.set(v, w);
            above.or_into(v, w);
        }
    }
    let mut covers = Vec::new();
    for (v, next) in succ.iter().enumerate() {
        for &w in next {
            let shortcut = next.iter().any(|&u| u != w && above.get(u, w));
            if !shortcut {
                covers.push((v, w));
            }
        }
    }
    covers.sort_unstable();
    Ok(covers)
}

impl Poset {
    /// The empty space.
    pub fn empty() -> Self {
        Poset::from_parts(Vec::new(), HashMap::new(), Vec::new())
    }

    /// A poset from its points and covering pairs. Fails unless `covers` is
    /// irreflexive, acyclic and contains only covering pairs.
    pub fn new<S: Into<String>>(points: Vec<String>, covers: Vec<(S, S)>) -> Result<Self> {
        let index = index_points(&points)?;
        let mut pairs = Vec::with_capacity(covers.len());
        for (x, y) in covers {
            let (x, y) = (x.into(), y.into());
            let xi = lookup(&index, &x)?;
            let yi = lookup(&index, &y)?;
            if xi == yi {
                return Err(Error::ReflexiveCover(x));
            }
            pairs.push((xi, yi));
        }
        pairs.sort_unstable();
        pairs.dedup();
        let reduced = reduce(points.len(), &pairs).map_err(|v| Error::Cycle(points[v].clone()))?;
        if reduced.len() != pairs.len() {
            let (x, y) = pairs
                .iter()
                .find(|p| reduced.binary_search(p).is_err())
                .copied()
                .expect("reduction drops a pair");
            return Err(Error::NotCovering(points[x].clone(), points[y].clone()));
        }
        Ok(Poset::from_parts(points, index, reduced))
    }

    /// The poset generated by an arbitrary acyclic relation `x < y`; only
    /// its covering pairs are kept.
    pub fn from_relation<S: Into<String>>(points: Vec<String>, relation: Vec<(S, S)>) -> Result<Self> {
        let index = index_points(&points)?;
        let mut pairs = Vec::with_capacity(relation.len());
        for (x, y) in relation {
            let (x, y) = (x.into(), y.into());
            pairs.push((lookup(&index, &x)?, lookup(&index, &y)?));
        }
        Poset::from_index_relation(points, index, &pairs)
    }

    pub(crate) fn from_index_relation(
        points: Vec<String>,
        index: HashMap<String, usize>,
        relation: &[(usize, usize)],
    ) -> Result<Self> {
        let covers = reduce(points.len(), relation).map_err(|v| Error::Cycle(points[v].clone()))?;
        Ok(Poset::from_parts(points, index, covers))
    }

    fn from_parts(points: Vec<String>, index: HashMap<String, usize>, covers: Vec<(usize, usize)>) -> Self {
        let n = points.len();
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for &(x, y) in &covers {
            up[x].push(y);
            down[y].push(x);
        }
        for d in &mut down {
            d.sort_unstable();
        }
        Poset {
            points,
            index,
            covers,
            up,
            down,
        }
    }

    /// The chain `names[0] < names[1] < ...`.
    pub fn chain<S: AsRef<str>>(names: &[S]) -> Self {
        let points: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let index = index_points(&points).expect("chain names must be distinct");
        let covers = (1..points.len()).map(|i| (i - 1, i)).collect();
        Poset::from_parts(points, index, covers)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    fn require(&self, name: &str) -> Result<usize> {
        lookup(&self.index, name)
    }

    /// Covering pairs as index pairs, sorted.
    pub fn cover_indices(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn covers(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.covers
            .iter()
            .map(|&(x, y)| (self.points[x].as_str(), self.points[y].as_str()))
    }

    pub fn cover_count(&self) -> usize {
        self.covers.len()
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.up[i]
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.down[i]
    }

    /// Number of covering pairs incident to point `i`.
    pub fn degree(&self, i: usize) -> usize {
        self.up[i].len() + self.down[i].len()
    }

    pub fn hasse_degree(&self, name: &str) -> Result<usize> {
        Ok(self.degree(self.require(name)?))
    }

    /// Level of every point: the length of the longest chain ending there.
    pub fn levels(&self) -> Vec<usize> {
        let order = topo_order(self.len(), &self.up).expect("poset is acyclic");
        let mut level = vec![1usize; self.len()];
        for &v in &order {
            for &w in &self.up[v] {
                level[w] = level[w].max(level[v] + 1);
            }
        }
        level
    }

    pub fn level_of(&self, name: &str) -> Result<usize> {
        let i = self.require(name)?;
        Ok(self.levels()[i])
    }

    /// Number of levels of the Hasse diagram (0 for the empty space).
    pub fn height(&self) -> usize {
        self.levels().into_iter().max().unwrap_or(0)
    }

    /// Points of level 1.
    pub fn first_level(&self) -> Vec<usize> {
        let levels = self.levels();
        (0..self.len()).filter(|&i| levels[i] == 1).collect()
    }

    /// Points on the highest level.
    pub fn last_level(&self) -> Vec<usize> {
        let levels = self.levels();
        let top = levels.iter().copied().max().unwrap_or(0);
        (0..self.len()).filter(|&i| levels[i] == top).collect()
    }

    /// Up-beat points have exactly one upper cover, down-beat points exactly
    /// one lower cover.
    pub fn beat_points(&self) -> BeatReport {
        let mut report = BeatReport::default();
        for i in 0..self.len() {
            if self.up[i].len() == 1 {
                report.up_beats.insert(self.points[i].clone());
            }
            if self.down[i].len() == 1 {
                report.down_beats.insert(self.points[i].clone());
            }
        }
        report
    }

    fn first_beat(&self) -> Option<usize> {
        (0..self.len()).find(|&i| self.up[i].len() == 1 || self.down[i].len() == 1)
    }

    pub fn is_minimal(&self) -> bool {
        self.first_beat().is_none()
    }

    /// The subposet on all points except `i`, with the order restricted.
    pub fn remove_point(&self, i: usize) -> Poset {
        let keep: Vec<usize> = (0..self.len()).filter(|&j| j != i).collect();
        let mut new_index = vec![usize::MAX; self.len()];
        for (k, &j) in keep.iter().enumerate() {
            new_index[j] = k;
        }
        let mut relation: Vec<(usize, usize)> = self
            .covers
            .iter()
            .filter(|&&(x, y)| x != i && y != i)
            .map(|&(x, y)| (new_index[x], new_index[y]))
            .collect();
        for &z in &self.down[i] {
            for &y in &self.up[i] {
                relation.push((new_index[z], new_index[y]));
            }
        }
        let points: Vec<String> = keep.iter().map(|&j| self.points[j].clone()).collect();
        let index = index_points(&points).expect("subset of distinct names");
        Poset::from_index_relation(points, index, &relation).expect("subposet stays acyclic")
    }

    /// Removes beat points, earliest in point order first, until none remain.
    pub fn core(&self) -> Poset {
        let mut cur = self.clone();
        while let Some(i) = cur.first_beat() {
            cur = cur.remove_point(i);
        }
        cur
    }

    /// Whether the Hasse diagram is connected as an undirected graph. The
    /// empty space counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.len()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in self.up[v].iter().chain(&self.down[v]) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.len()
    }

    /// Same poset with every point renamed `"{prefix}/{point}"`.
    pub fn prefixed(&self, prefix: &str) -> Poset {
        let points: Vec<String> = self.points.iter().map(|p| format!("{prefix}/{p}")).collect();
        let index = index_points(&points).expect("prefixing keeps names distinct");
        Poset::from_parts(points, index, self.covers.clone())
    }

    /// A level- and cover-preserving bijection onto `other`, if one exists.
    pub fn isomorphic(&self, other: &Poset) -> Option<BTreeMap<String, String>> {
        let map = crate::aut::poset_isomorphism(self, other)?;
        Some(
            map.iter()
                .enumerate()
                .map(|(i, &j)| (self.points[i].clone(), other.points[j].clone()))
                .collect(),
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("poset serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn vee() -> Poset {
        Poset::new(names(&["a", "b", "c"]), vec![("a", "c"), ("b", "c")]).unwrap()
    }

    #[test]
    fn rejects_malformed_covers() {
        let pts = names(&["a", "b", "c"]);
        assert!(matches!(
            Poset::new(pts.clone(), vec![("a", "a")]),
            Err(Error::ReflexiveCover(_))
        ));
        assert!(matches!(
            Poset::new(pts.clone(), vec![("a", "b"), ("b", "a")]),
            Err(Error::Cycle(_))
        ));
        assert!(matches!(
            Poset::new(pts.clone(), vec![("a", "b"), ("b", "c"), ("a", "c")]),
            Err(Error::NotCovering(x, y)) if x == "a" && y == "c"
        ));
        assert!(matches!(
            Poset::new(pts.clone(), vec![("a", "z")]),
            Err(Error::NoSuchPoint(_))
        ));
        assert!(matches!(
            Poset::new(names(&["a", "a"]), Vec::<(&str, &str)>::new()),
            Err(Error::DuplicatePoint(_))
        ));
    }

    #[test]
    fn from_relation_reduces() {
        let p = Poset::from_relation(names(&["a", "b", "c"]), vec![("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
        assert_eq!(p, Poset::chain(&["a", "b", "c"]));
    }

    #[test]
    fn levels() {
        let single = Poset::chain(&["x"]);
        assert_eq!(single.level_of("x").unwrap(), 1);
        let c = Poset::chain(&["a", "b", "c"]);
        assert_eq!(c.level_of("c").unwrap(), 3);
        assert!(matches!(c.level_of("q"), Err(Error::NoSuchPoint(_))));
        assert_eq!(c.height(), 3);
        assert_eq!(Poset::empty().height(), 0);
    }

    #[test]
    fn beat_points_small() {
        let two = Poset::chain(&["a", "b"]);
        let r = two.beat_points();
        assert_eq!(r.up_beats, BTreeSet::from(["a".to_string()]));
        assert_eq!(r.down_beats, BTreeSet::from(["b".to_string()]));

        let r = vee().beat_points();
        assert_eq!(r.up_beats, BTreeSet::from(["a".to_string(), "b".to_string()]));
        assert!(r.down_beats.is_empty());

        // middle of a 3-chain is both up- and down-beat
        let r = Poset::chain(&["a", "b", "c"]).beat_points();
        assert!(r.up_beats.contains("b") && r.down_beats.contains("b"));
    }

    #[test]
    fn minimality() {
        assert!(Poset::chain(&["x"]).is_minimal());
        assert!(!Poset::chain(&["a", "b"]).is_minimal());
        assert!(Poset::empty().is_minimal());
        assert_eq!(Poset::empty().core(), Poset::empty());
    }

    #[test]
    fn chains_collapse_to_a_point() {
        for n in 1..8 {
            let names: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
            let c = Poset::chain(&names).core();
            assert_eq!(c.len(), 1);
        }
    }

    #[test]
    fn core_rewires_through_removed_point() {
        // a < x < {c, d}; b < {c, d}. x is down-beat (only a below it) and
        // not up-beat. Removing a first (up-beat: only x above) leaves x.
        let p = Poset::new(
            names(&["a", "b", "x", "c", "d"]),
            vec![("a", "x"), ("x", "c"), ("x", "d"), ("b", "c"), ("b", "d")],
        )
        .unwrap();
        let q = p.remove_point(2);
        assert_eq!(q.cover_count(), 4);
        assert!(q.covers().any(|c| c == ("a", "c")));
        assert!(q.covers().any(|c| c == ("a", "d")));
        // crown on a, b, c, d is minimal
        assert!(q.is_minimal());
    }

    #[test]
    fn degree() {
        assert_eq!(Poset::chain(&["x"]).hasse_degree("x").unwrap(), 0);
        assert_eq!(vee().hasse_degree("c").unwrap(), 2);
        assert!(vee().hasse_degree("nope").is_err());
    }

    #[test]
    fn json_round_trip() {
        let p = vee();
        let q = Poset::from_json(&p.to_json()).unwrap();
        assert_eq!(p, q);
        assert!(Poset::from_json(r#"{"points":["a"],"covers":[["a","b"]]}"#).is_err());
    }

    #[test]
    fn first_and_last_levels() {
        let p = vee();
        assert_eq!(p.first_level(), vec![0, 1]);
        assert_eq!(p.last_level(), vec![2]);
    }
}
