//! Brute-force matroid checks over explicit basis lists.
//!
//! Everything here works directly on the set of bases, with no reference
//! to graphs or set families, so it can serve as an independent witness
//! for the routing-based operations.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::planted::VertexId;

/// A matroid given by its ground set and the explicit list of bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisSet {
    ground: BTreeSet<VertexId>,
    bases: BTreeSet<BTreeSet<VertexId>>,
}

impl BasisSet {
    /// Builds a basis set, checking that the collection is nonempty, that
    /// all bases have the same size, and that they live in the ground set.
    pub fn new(
        ground: BTreeSet<VertexId>,
        bases: impl IntoIterator<Item = BTreeSet<VertexId>>,
    ) -> Result<Self> {
        let bases: BTreeSet<BTreeSet<VertexId>> = bases.into_iter().collect();
        let Some(first) = bases.iter().next() else {
            return Err(Error::Input("basis collection is empty".to_string()));
        };
        let rank = first.len();
        for b in &bases {
            if b.len() != rank {
                return Err(Error::Input(format!(
                    "bases of unequal size: {} and {}",
                    rank,
                    b.len()
                )));
            }
            if let Some(x) = b.iter().find(|x| !ground.contains(*x)) {
                return Err(Error::Input(format!("basis element {x} not in ground set")));
            }
        }
        Ok(BasisSet { ground, bases })
    }

    pub(crate) fn from_parts(
        ground: BTreeSet<VertexId>,
        bases: BTreeSet<BTreeSet<VertexId>>,
    ) -> Self {
        BasisSet { ground, bases }
    }

    pub fn ground(&self) -> &BTreeSet<VertexId> {
        &self.ground
    }

    pub fn bases(&self) -> &BTreeSet<BTreeSet<VertexId>> {
        &self.bases
    }

    pub fn rank(&self) -> usize {
        self.bases.iter().next().map_or(0, |b| b.len())
    }
}

/// Does the collection satisfy the basis exchange axiom?  Checked by brute
/// force over every ordered pair of bases and every element of their
/// difference.
pub fn check_exchange_axiom(m: &BasisSet) -> bool {
    for ba in &m.bases {
        for bb in &m.bases {
            for x in ba.difference(bb) {
                let found = bb.difference(ba).any(|y| {
                    let mut candidate = ba.clone();
                    candidate.remove(x);
                    candidate.insert(y.clone());
                    m.bases.contains(&candidate)
                });
                if !found {
                    return false;
                }
            }
        }
    }
    true
}

/// The dual matroid: complements of bases in the ground set.
pub fn dual(m: &BasisSet) -> BasisSet {
    let bases = m
        .bases
        .iter()
        .map(|b| m.ground.difference(b).cloned().collect())
        .collect();
    BasisSet::from_parts(m.ground.clone(), bases)
}

/// Is `a` contained in some basis?
pub fn is_independent(m: &BasisSet, a: &BTreeSet<VertexId>) -> bool {
    m.bases.iter().any(|b| a.is_subset(b))
}

/// Rank of `k`: the largest intersection of `k` with a basis.
pub fn rank_of(m: &BasisSet, k: &BTreeSet<VertexId>) -> usize {
    m.bases
        .iter()
        .map(|b| b.intersection(k).count())
        .max()
        .unwrap_or(0)
}

fn greedy_basis_of(m: &BasisSet, k: &BTreeSet<VertexId>) -> BTreeSet<VertexId> {
    let mut picked = BTreeSet::new();
    for x in k {
        picked.insert(x.clone());
        if !is_independent(m, &picked) {
            picked.remove(x);
        }
    }
    picked
}

/// Contraction by `k` (intersected with the ground set), using the
/// canonically smallest maximum independent subset of `k`.
pub fn contract(m: &BasisSet, k: &BTreeSet<VertexId>) -> BasisSet {
    let k: BTreeSet<VertexId> = k.intersection(&m.ground).cloned().collect();
    let bk = greedy_basis_of(m, &k);
    contract_with_basis(m, &k, &bk)
}

/// Contraction by `k` using a chosen maximum independent subset `bk` of
/// `k`.  Exposed so the choice-independence of [`contract`] can be checked
/// directly.
pub fn contract_with_basis(
    m: &BasisSet,
    k: &BTreeSet<VertexId>,
    bk: &BTreeSet<VertexId>,
) -> BasisSet {
    let ground: BTreeSet<VertexId> = m.ground.difference(k).cloned().collect();
    let mut bases: BTreeSet<BTreeSet<VertexId>> = BTreeSet::new();
    for b in &m.bases {
        let in_k: BTreeSet<VertexId> = b.intersection(k).cloned().collect();
        if in_k == *bk {
            bases.insert(b.difference(bk).cloned().collect());
        }
    }
    if bases.is_empty() {
        bases.insert(BTreeSet::new());
    }
    BasisSet::from_parts(ground, bases)
}

/// Every maximum independent subset of `k`, for exercising
/// [`contract_with_basis`] under all admissible choices.
pub fn maximum_independent_subsets(
    m: &BasisSet,
    k: &BTreeSet<VertexId>,
) -> Vec<BTreeSet<VertexId>> {
    let k: BTreeSet<VertexId> = k.intersection(&m.ground).cloned().collect();
    let r = rank_of(m, &k);
    k.iter()
        .combinations(r)
        .map(|c| c.into_iter().cloned().collect::<BTreeSet<VertexId>>())
        .filter(|c| is_independent(m, c))
        .collect()
}

/// Loops (in no basis) and coloops (in every basis).
pub fn loops_and_coloops(m: &BasisSet) -> (BTreeSet<VertexId>, BTreeSet<VertexId>) {
    let mut loops = BTreeSet::new();
    let mut coloops = BTreeSet::new();
    for x in &m.ground {
        let count = m.bases.iter().filter(|b| b.contains(x)).count();
        if count == 0 {
            loops.insert(x.clone());
        } else if count == m.bases.len() {
            coloops.insert(x.clone());
        }
    }
    (loops, coloops)
}

/// Same ground set and identical basis collections.
pub fn equal(m1: &BasisSet, m2: &BasisSet) -> bool {
    m1.ground == m2.ground && m1.bases == m2.bases
}
