//! End-to-end check that `Aut(X(G, S))` is isomorphic to `G`.

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_bigint::BigUint;

use super::{hasse_automorphisms, hasse_digraph, AutGroup};
use crate::blocks::{build_realization, realization_size, RealizationSpace};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::perm::Permutation;

/// Largest space the verifier builds by default.
pub const DEFAULT_BUDGET: usize = 2_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub group_order: usize,
    pub generator_count: usize,
    pub points: usize,
    pub levels: usize,
    pub minimal: bool,
    /// Right translations whose induced map is an automorphism of the Hasse
    /// diagram.
    pub induced_verified: usize,
    pub induced_distinct: bool,
    /// Every engine generator sends each block onto a block of the same type.
    pub blocks_preserved: bool,
    pub engine_order: BigUint,
    pub engine_generators: usize,
}

impl VerificationReport {
    pub fn order_matches(&self) -> bool {
        self.engine_order == BigUint::from(self.group_order)
    }

    pub fn induced_ok(&self) -> bool {
        self.induced_verified == self.group_order && self.induced_distinct
    }

    /// Minimality, `|G|` distinct induced automorphisms and engine order
    /// `|G|` together give an injective homomorphism `G -> Aut(X)` between
    /// groups of equal finite order.
    pub fn passed(&self) -> bool {
        self.minimal && self.induced_ok() && self.order_matches()
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "group: |G| = {}, |S| = {}", self.group_order, self.generator_count)?;
        writeln!(f, "space: {} points on {} levels", self.points, self.levels)?;
        writeln!(f, "minimal (no beat points): {}", yes_no(self.minimal))?;
        writeln!(
            f,
            "induced automorphisms: {} of {} verified, pairwise distinct: {}",
            self.induced_verified,
            self.group_order,
            yes_no(self.induced_distinct)
        )?;
        writeln!(
            f,
            "engine generators: {}, block types preserved: {}",
            self.engine_generators,
            yes_no(self.blocks_preserved)
        )?;
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        if self.order_matches() {
            write!(f, "order(Aut) = {} = |G| : {verdict}", self.engine_order)
        } else {
            write!(f, "order(Aut) = {} != |G| = {} : {verdict}", self.engine_order, self.group_order)
        }
    }
}

/// Whether each generator maps every block's point set onto the point set
/// of a block of the same `F` type.
pub fn preserves_blocks(space: &RealizationSpace, aut: &AutGroup) -> bool {
    let blocks = space.blocks();
    let block_of: HashMap<usize, usize> = blocks
        .iter()
        .enumerate()
        .flat_map(|(b, (_, pts))| pts.iter().map(move |&p| (p, b)))
        .collect();
    aut.generators.iter().all(|g| {
        blocks.iter().all(|(_, pts)| {
            let target = block_of[&g.apply(pts[0])];
            let same_type = space.provenance[blocks[target].1[0]].f_index == space.provenance[pts[0]].f_index;
            same_type
                && blocks[target].1.len() == pts.len()
                && pts.iter().all(|&p| block_of[&g.apply(p)] == target)
        })
    })
}

pub fn verify_realization(group: &FiniteGroup) -> Result<VerificationReport> {
    verify_realization_with_budget(group, DEFAULT_BUDGET)
}

pub fn verify_realization_with_budget(group: &FiniteGroup, budget: usize) -> Result<VerificationReport> {
    let n = group.generators().len();
    if n == 0 {
        return Err(Error::NoGenerators);
    }
    let expected = realization_size(group.order(), n);
    if expected > budget {
        return Err(Error::BudgetExceeded {
            points: expected,
            budget,
        });
    }
    let space = build_realization(group)?;
    let hasse = hasse_digraph(&space.poset);

    let induced: Vec<Permutation> = (0..group.order())
        .map(|h| space.induced_map(group, h))
        .collect();
    let induced_verified = induced.iter().filter(|p| hasse.is_automorphism(p)).count();
    let induced_distinct = induced.iter().collect::<HashSet<_>>().len() == induced.len();

    let aut = hasse_automorphisms(&space.poset);
    Ok(VerificationReport {
        group_order: group.order(),
        generator_count: n,
        points: space.poset.len(),
        levels: space.poset.height(),
        minimal: space.poset.is_minimal(),
        induced_verified,
        induced_distinct,
        blocks_preserved: preserves_blocks(&space, &aut),
        engine_order: aut.order,
        engine_generators: aut.generators.len(),
    })
}
