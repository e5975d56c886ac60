//! Finite groups given by a multiplication table and a generating list, and
//! their colored Cayley graphs.

use std::collections::HashMap;

use serde::Deserialize;

use crate::digraph::ColoredDigraph;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default bound on the order of a group enumerated from generators.
pub const DEFAULT_ORDER_CAP: usize = 10_000;

/// A finite group `G` with a distinguished generating list `S = {g_1, ..., g_n}`.
///
/// `table[i][j]` is the index of `elements[i] * elements[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    elements: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    generators: Vec<usize>,
}

impl FiniteGroup {
    /// Validates and wraps a multiplication table.
    pub fn from_table(
        elements: Vec<String>,
        table: Vec<Vec<usize>>,
        identity: usize,
        generators: Vec<usize>,
    ) -> Result<Self> {
        let g = FiniteGroup {
            elements,
            table,
            identity,
            generators,
        };
        g.validate()?;
        Ok(g)
    }

    /// Checks every group invariant. Associativity uses Light's test: it
    /// suffices that `(x g) y = x (g y)` for all `x, y` and each generator
    /// `g`, because elements satisfying it are closed under products.
    pub fn validate(&self) -> Result<()> {
        let n = self.elements.len();
        let bad = |msg: String| Err(Error::InvalidGroup(msg));
        if n == 0 {
            return bad("no elements".into());
        }
        let mut names = HashMap::new();
        for (i, e) in self.elements.iter().enumerate() {
            if names.insert(e.as_str(), i).is_some() {
                return bad(format!("duplicate element name {e}"));
            }
        }
        if self.table.len() != n || self.table.iter().any(|r| r.len() != n) {
            return bad("table is not |G| x |G|".into());
        }
        if self.table.iter().flatten().any(|&x| x >= n) {
            return bad("table entry out of range".into());
        }
        if self.identity >= n {
            return bad("identity out of range".into());
        }
        let e = self.identity;
        for a in 0..n {
            if self.table[e][a] != a || self.table[a][e] != a {
                return bad(format!("identity law fails at {}", self.elements[a]));
            }
        }
        for a in 0..n {
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for b in 0..n {
                row[self.table[a][b]] = true;
                col[self.table[b][a]] = true;
            }
            if row.contains(&false) || col.contains(&false) {
                return bad(format!("row or column of {} is not a permutation", self.elements[a]));
            }
        }
        for (pos, &g) in self.generators.iter().enumerate() {
            if g >= n {
                return bad("generator out of range".into());
            }
            if g == e {
                return Err(Error::IdentityGenerator(pos));
            }
            if let Some(first) = self.generators[..pos].iter().position(|&h| h == g) {
                return Err(Error::DuplicateGenerator(first, pos));
            }
        }
        for &g in &self.generators {
            for x in 0..n {
                let xg = self.table[x][g];
                for y in 0..n {
                    if self.table[xg][y] != self.table[x][self.table[g][y]] {
                        return bad("multiplication is not associative".into());
                    }
                }
            }
        }
        if self.closure_of_generators() != n {
            return bad("generators do not generate the group".into());
        }
        Ok(())
    }

    fn closure_of_generators(&self) -> usize {
        let mut seen = vec![false; self.order()];
        seen[self.identity] = true;
        let mut queue = vec![self.identity];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &g in &self.generators {
                let y = self.table[g][x];
                if !seen[y] {
                    seen[y] = true;
                    queue.push(y);
                }
            }
        }
        queue.len()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == name)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order())
            .find(|&b| self.table[a][b] == self.identity)
            .expect("every element is invertible")
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.table[x][a];
            k += 1;
        }
        k
    }

    /// Same group with a different generating list.
    pub fn with_generators(&self, generators: Vec<usize>) -> Result<Self> {
        FiniteGroup::from_table(self.elements.clone(), self.table.clone(), self.identity, generators)
    }

    pub fn cayley_graph(&self) -> ColoredDigraph {
        cayley_graph(self)
    }
}

fn word_name(word: &[usize], names: &[String]) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < word.len() {
        let mut j = i;
        while j < word.len() && word[j] == word[i] {
            j += 1;
        }
        let run = j - i;
        if run == 1 {
            parts.push(names[word[i]].clone());
        } else {
            parts.push(format!("{}^{run}", names[word[i]]));
        }
        i = j;
    }
    parts.join(".")
}

/// Enumerates the permutation group generated by `gens` (one-line image
/// notation), naming generators `g1, g2, ...`.
pub fn group_from_permutations(gens: &[Vec<usize>]) -> Result<FiniteGroup> {
    let names: Vec<String> = (1..=gens.len()).map(|i| format!("g{i}")).collect();
    group_from_permutations_with(gens, &names, DEFAULT_ORDER_CAP)
}

/// Breadth-first closure under left multiplication by the generators.
/// Elements are named by their shortlex-least word `g_{k1} g_{k2} ...`,
/// with runs written as powers.
pub fn group_from_permutations_with(gens: &[Vec<usize>], names: &[String], cap: usize) -> Result<FiniteGroup> {
    if gens.is_empty() {
        return Err(Error::NoGenerators);
    }
    assert_eq!(gens.len(), names.len(), "one name per generator");
    let perms: Vec<Permutation> = gens
        .iter()
        .map(|g| Permutation::from_images(g.clone()))
        .collect::<Result<_>>()?;
    let degree = perms[0].degree();
    for p in &perms {
        if p.degree() != degree {
            return Err(Error::DegreeMismatch(degree, p.degree()));
        }
    }
    for (i, p) in perms.iter().enumerate() {
        if p.is_identity() {
            return Err(Error::IdentityGenerator(i));
        }
        if let Some(j) = perms[..i].iter().position(|q| q == p) {
            return Err(Error::DuplicateGenerator(j, i));
        }
    }

    let mut elems = vec![Permutation::identity(degree)];
    let mut words: Vec<Vec<usize>> = vec![Vec::new()];
    let mut index: HashMap<Permutation, usize> = HashMap::new();
    index.insert(elems[0].clone(), 0);
    let mut layer = vec![0usize];
    while !layer.is_empty() {
        let mut next = Vec::new();
        for (k, g) in perms.iter().enumerate() {
            for &p in &layer {
                let q = g.compose(&elems[p]);
                if index.contains_key(&q) {
                    continue;
                }
                if elems.len() >= cap {
                    return Err(Error::GroupTooLarge(cap));
                }
                let mut w = vec![k];
                w.extend_from_slice(&words[p]);
                index.insert(q.clone(), elems.len());
                next.push(elems.len());
                elems.push(q);
                words.push(w);
            }
        }
        layer = next;
    }

    let table: Vec<Vec<usize>> = elems
        .iter()
        .map(|a| elems.iter().map(|b| index[&a.compose(b)]).collect())
        .collect();
    let generators = perms.iter().map(|p| index[p]).collect();
    let elements = words.iter().map(|w| word_name(w, names)).collect();
    Ok(FiniteGroup {
        elements,
        table,
        identity: 0,
        generators,
    })
}

fn trivial() -> FiniteGroup {
    FiniteGroup {
        elements: vec!["e".into()],
        table: vec![vec![0]],
        identity: 0,
        generators: Vec::new(),
    }
}

fn cycle_perm(m: usize) -> Vec<usize> {
    (0..m).map(|i| (i + 1) % m).collect()
}

/// `Z/m` with `S = {x}`; `m = 1` gives the trivial group with no generators.
pub fn cyclic(m: usize) -> Result<FiniteGroup> {
    match m {
        0 => Err(Error::InvalidParameter("cyclic group needs m >= 1".into())),
        1 => Ok(trivial()),
        _ => group_from_permutations_with(&[cycle_perm(m)], &["x".to_string()], usize::MAX),
    }
}

/// Dihedral group of the given order `2m` (`m >= 3`) with `S = {tau, sigma}`,
/// `tau` a rotation of order `m` and `sigma` a reflection.
pub fn dihedral(order: usize) -> Result<FiniteGroup> {
    if !order.is_multiple_of(2) || order < 6 {
        return Err(Error::InvalidParameter(format!(
            "dihedral group order must be even and at least 6, got {order}"
        )));
    }
    let m = order / 2;
    let tau = cycle_perm(m);
    let sigma: Vec<usize> = (0..m).map(|i| (m - i) % m).collect();
    group_from_permutations_with(&[tau, sigma], &["tau".to_string(), "sigma".to_string()], usize::MAX)
}

/// `S_m` generated by the long cycle `c = (0 1 ... m-1)` and the
/// transposition `t = (0 1)`.
pub fn symmetric(m: usize) -> Result<FiniteGroup> {
    match m {
        0 => Err(Error::InvalidParameter("symmetric group needs m >= 1".into())),
        1 => Ok(trivial()),
        2 => group_from_permutations_with(&[vec![1, 0]], &["t".to_string()], DEFAULT_ORDER_CAP),
        _ => {
            let mut t: Vec<usize> = (0..m).collect();
            t.swap(0, 1);
            group_from_permutations_with(
                &[cycle_perm(m), t],
                &["c".to_string(), "t".to_string()],
                DEFAULT_ORDER_CAP,
            )
        }
    }
}

/// `G x H` with generators `(g_i, e)` followed by `(e, h_j)`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    let (ng, nh) = (g.order(), h.order());
    let pair = |a: usize, b: usize| a * nh + b;
    let mut elements = Vec::with_capacity(ng * nh);
    for a in g.elements() {
        for b in h.elements() {
            elements.push(format!("({a},{b})"));
        }
    }
    let mut table = vec![vec![0; ng * nh]; ng * nh];
    for a1 in 0..ng {
        for b1 in 0..nh {
            for a2 in 0..ng {
                for b2 in 0..nh {
                    table[pair(a1, b1)][pair(a2, b2)] = pair(g.mul(a1, a2), h.mul(b1, b2));
                }
            }
        }
    }
    let mut generators: Vec<usize> = g.generators().iter().map(|&a| pair(a, h.identity())).collect();
    generators.extend(h.generators().iter().map(|&b| pair(g.identity(), b)));
    FiniteGroup::from_table(elements, table, pair(g.identity(), h.identity()), generators)
}

/// `Z/2 x Z/2`.
pub fn klein() -> FiniteGroup {
    let c2 = cyclic(2).expect("Z/2");
    direct_product(&c2, &c2).expect("Klein four-group")
}

/// The colored Cayley graph: for each element `g` and generator index `k`
/// (colors are 1-based) an edge `(g, g_k * g)` of color `k`.
pub fn cayley_graph(g: &FiniteGroup) -> ColoredDigraph {
    let mut edges = Vec::with_capacity(g.order() * g.generators().len());
    for x in 0..g.order() {
        for (k, &s) in g.generators().iter().enumerate() {
            edges.push((x, g.mul(s, x), k as u32 + 1));
        }
    }
    ColoredDigraph::from_indexed(g.elements().to_vec(), edges).expect("Cayley graph is loopless")
}

/// The vertex map `x -> x * h` of the Cayley graph.
pub fn right_translation(g: &FiniteGroup, h: usize) -> Permutation {
    Permutation::from_images((0..g.order()).map(|x| g.mul(x, h)).collect()).expect("translations are bijective")
}

#[derive(Deserialize)]
#[serde(untagged)]
enum GroupFile {
    Gens(Vec<Vec<usize>>),
    Named {
        generators: Vec<Vec<usize>>,
        #[serde(default)]
        names: Option<Vec<String>>,
    },
}

fn group_from_json(text: &str) -> Result<FiniteGroup> {
    match serde_json::from_str::<GroupFile>(text)? {
        GroupFile::Gens(gens) => group_from_permutations(&gens),
        GroupFile::Named { generators, names } => match names {
            Some(names) if names.len() == generators.len() => {
                group_from_permutations_with(&generators, &names, DEFAULT_ORDER_CAP)
            }
            Some(_) => Err(Error::InvalidParameter("one name per generator".into())),
            None => group_from_permutations(&generators),
        },
    }
}

fn parse_count(spec: &str, value: &str) -> Result<usize> {
    value
        .trim()
        .parse()
        .map_err(|_| Error::UnknownGroupSpec(spec.to_string()))
}

/// Parses `cyclic:N`, `dihedral:2N`, `symmetric:N`, `klein`,
/// `perm:[[...],...]` or `@file.json`.
pub fn parse_group_spec(spec: &str) -> Result<FiniteGroup> {
    let spec = spec.trim();
    if let Some(path) = spec.strip_prefix('@') {
        return group_from_json(&std::fs::read_to_string(path)?);
    }
    if spec == "klein" {
        return Ok(klein());
    }
    let (family, arg) = spec
        .split_once(':')
        .ok_or_else(|| Error::UnknownGroupSpec(spec.to_string()))?;
    match family {
        "cyclic" => cyclic(parse_count(spec, arg)?),
        "dihedral" => dihedral(parse_count(spec, arg)?),
        "symmetric" => symmetric(parse_count(spec, arg)?),
        "perm" => group_from_json(arg),
        _ => Err(Error::UnknownGroupSpec(spec.to_string())),
    }
}
