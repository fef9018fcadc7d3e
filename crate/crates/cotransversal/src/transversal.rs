//! Set families, their transversals, and systems of distinct
//! representatives.
//!
//! A family `A_0..A_{r-1}` over a ground set presents a transversal
//! matroid whose bases are the transversals.  Planted graphs are dual to
//! such families: [`dualize`] reads a family plus SDR off a planted graph
//! and [`undualize`] rebuilds the graph, and the two round-trip.
//!
//! When every union of `k` sets has at least `k + 1` elements (the dragon
//! marriage condition), any two SDRs are connected by exchanges that move
//! a single representative at a time.  [`sdr_exchange_path`] finds such a
//! path by search; [`sdr_exchange_step`] takes one constructive step that
//! strictly decreases the number of disagreeing positions, so iterating it
//! meets in the middle without any search.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::oracle::BasisSet;
use crate::planted::{ensure_valid, PlantedGraph, VertexId, DEFAULT_SIZE_LIMIT};

/// A family of subsets of a ground set, in a fixed list order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransversalPresentation {
    ground: BTreeSet<VertexId>,
    sets: Vec<BTreeSet<VertexId>>,
}

impl TransversalPresentation {
    pub fn new(ground: BTreeSet<VertexId>, sets: Vec<BTreeSet<VertexId>>) -> Result<Self> {
        for (i, a) in sets.iter().enumerate() {
            if let Some(x) = a.iter().find(|x| !ground.contains(*x)) {
                return Err(Error::Input(format!(
                    "set at position {i} contains {x}, which is not in the ground set"
                )));
            }
        }
        Ok(TransversalPresentation { ground, sets })
    }

    pub fn ground(&self) -> &BTreeSet<VertexId> {
        &self.ground
    }

    pub fn sets(&self) -> &[BTreeSet<VertexId>] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// The sets as a multiset, for comparisons that ignore list order.
    pub fn sets_multiset(&self) -> Vec<BTreeSet<VertexId>> {
        let mut sets = self.sets.clone();
        sets.sort();
        sets
    }
}

/// A system of distinct representatives: position `i` holds the
/// representative of set `i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Sdr {
    reps: Vec<VertexId>,
}

impl Sdr {
    pub fn new(reps: Vec<VertexId>) -> Self {
        Sdr { reps }
    }

    pub fn reps(&self) -> &[VertexId] {
        &self.reps
    }

    pub fn rep_set(&self) -> BTreeSet<VertexId> {
        self.reps.iter().cloned().collect()
    }

    /// Checks length, membership, and distinctness against `p`.
    pub fn validate_for(&self, p: &TransversalPresentation) -> Result<()> {
        if self.reps.len() != p.len() {
            return Err(Error::InvalidSdr(format!(
                "{} representatives for {} sets",
                self.reps.len(),
                p.len()
            )));
        }
        for (i, rep) in self.reps.iter().enumerate() {
            if !p.sets[i].contains(rep) {
                return Err(Error::InvalidSdr(format!(
                    "representative {rep} is not in the set at position {i}"
                )));
            }
        }
        if self.rep_set().len() != self.reps.len() {
            return Err(Error::InvalidSdr("representatives are not distinct".to_string()));
        }
        Ok(())
    }
}

/// Maximum matching of set positions to elements, augmenting from each
/// position in order and scanning candidates canonically.  Returns the
/// matched element per position.
fn kuhn_matching(candidates: &[Vec<usize>], n_elems: usize) -> Vec<Option<usize>> {
    let mut owner: Vec<Option<usize>> = vec![None; n_elems];

    fn try_augment(
        i: usize,
        candidates: &[Vec<usize>],
        owner: &mut Vec<Option<usize>>,
        visited: &mut Vec<bool>,
    ) -> bool {
        for &x in &candidates[i] {
            if !visited[x] {
                visited[x] = true;
                let free = match owner[x] {
                    None => true,
                    Some(j) => try_augment(j, candidates, owner, visited),
                };
                if free {
                    owner[x] = Some(i);
                    return true;
                }
            }
        }
        false
    }

    for i in 0..candidates.len() {
        let mut visited = vec![false; n_elems];
        try_augment(i, candidates, &mut owner, &mut visited);
    }

    let mut rep = vec![None; candidates.len()];
    for (x, o) in owner.iter().enumerate() {
        if let Some(i) = *o {
            rep[i] = Some(x);
        }
    }
    rep
}

fn indexed_candidates(
    p: &TransversalPresentation,
    elems: &[VertexId],
) -> Vec<Vec<usize>> {
    let index: BTreeMap<&VertexId, usize> =
        elems.iter().enumerate().map(|(i, v)| (v, i)).collect();
    p.sets
        .iter()
        .map(|a| a.iter().filter_map(|x| index.get(x).copied()).collect())
        .collect()
}

/// One SDR if any exists, found deterministically (positions augmented in
/// order, candidates scanned canonically).
pub fn find_sdr(p: &TransversalPresentation) -> Option<Sdr> {
    let elems: Vec<VertexId> = p.ground.iter().cloned().collect();
    let rep = kuhn_matching(&indexed_candidates(p, &elems), elems.len());
    let reps: Option<Vec<VertexId>> =
        rep.into_iter().map(|r| r.map(|x| elems[x].clone())).collect();
    reps.map(Sdr::new)
}

/// Smallest (then lexicographically first) position set violating Hall's
/// condition, or `None` when every union of k sets has at least k
/// elements — that is, when an SDR exists.
pub fn hall_violator(p: &TransversalPresentation) -> Option<Vec<usize>> {
    for k in 1..=p.len() {
        for combo in (0..p.len()).combinations(k) {
            let union: BTreeSet<&VertexId> =
                combo.iter().flat_map(|&i| p.sets[i].iter()).collect();
            if union.len() < k {
                return Some(combo);
            }
        }
    }
    None
}

/// All transversals of the family, as the basis set of the presented
/// transversal matroid.
pub fn enumerate_transversals(p: &TransversalPresentation) -> Result<BasisSet> {
    enumerate_transversals_with_limit(p, DEFAULT_SIZE_LIMIT)
}

/// As [`enumerate_transversals`], refusing ground sets larger than `limit`.
pub fn enumerate_transversals_with_limit(
    p: &TransversalPresentation,
    limit: usize,
) -> Result<BasisSet> {
    if p.ground.len() > limit {
        return Err(Error::TooLarge { size: p.ground.len(), limit });
    }
    if p.is_empty() {
        let bases = BTreeSet::from([BTreeSet::new()]);
        return Ok(BasisSet::from_parts(p.ground.clone(), bases));
    }
    if find_sdr(p).is_none() {
        let violator = hall_violator(p)
            .expect("families without an SDR violate Hall's condition somewhere");
        return Err(Error::NoTransversal(violator));
    }
    let mut bases = BTreeSet::new();
    for combo in p.ground.iter().combinations(p.len()) {
        let t: Vec<VertexId> = combo.into_iter().cloned().collect();
        let tset: BTreeSet<VertexId> = t.iter().cloned().collect();
        let restricted: Vec<Vec<usize>> = {
            let index: BTreeMap<&VertexId, usize> =
                t.iter().enumerate().map(|(i, v)| (v, i)).collect();
            p.sets
                .iter()
                .map(|a| a.iter().filter_map(|x| index.get(x).copied()).collect())
                .collect()
        };
        let matched = kuhn_matching(&restricted, t.len())
            .iter()
            .filter(|r| r.is_some())
            .count();
        if matched == p.len() {
            bases.insert(tset);
        }
    }
    Ok(BasisSet::from_parts(p.ground.clone(), bases))
}

/// Does every union of `k` of the sets have at least `k + 1` elements?
pub fn dragon_condition(p: &TransversalPresentation) -> bool {
    for k in 1..=p.len() {
        for combo in (0..p.len()).combinations(k) {
            let union: BTreeSet<&VertexId> =
                combo.iter().flat_map(|&i| p.sets[i].iter()).collect();
            if union.len() < k + 1 {
                return false;
            }
        }
    }
    true
}

/// Reads the dual transversal presentation off a planted graph: one set
/// `{v} ∪ out-neighbors(v)` per non-sink `v` in canonical order, with `v`
/// itself as representative.
pub fn dualize(g: &PlantedGraph) -> Result<(TransversalPresentation, Sdr)> {
    ensure_valid(g)?;
    let mut sets = Vec::new();
    let mut reps = Vec::new();
    for v in g.vertices() {
        if g.is_sink(v) {
            continue;
        }
        let mut a = g.out_neighbors(v);
        a.insert(v.clone());
        sets.push(a);
        reps.push(v.clone());
    }
    let p = TransversalPresentation::new(g.vertices().clone(), sets)?;
    Ok((p, Sdr::new(reps)))
}

/// Rebuilds the planted graph of a presentation with a chosen SDR: each
/// representative points at the rest of its set, and the unrepresented
/// elements become the sinks.
pub fn undualize(p: &TransversalPresentation, m: &Sdr) -> Result<PlantedGraph> {
    m.validate_for(p)?;
    let mut edges = BTreeSet::new();
    for (i, a) in p.sets.iter().enumerate() {
        let rep = &m.reps[i];
        for x in a {
            if x != rep {
                edges.insert((rep.clone(), x.clone()));
            }
        }
    }
    let sinks: BTreeSet<VertexId> = p.ground.difference(&m.rep_set()).cloned().collect();
    let g = PlantedGraph::new(p.ground.clone(), edges, sinks);
    debug_assert!(crate::planted::validate(&g).is_empty());
    Ok(g)
}

fn sdr_neighbors(p: &TransversalPresentation, reps: &[VertexId]) -> Vec<Vec<VertexId>> {
    let taken: BTreeSet<&VertexId> = reps.iter().collect();
    let mut out = Vec::new();
    for (i, a) in p.sets.iter().enumerate() {
        for d in a {
            if !taken.contains(d) {
                let mut next = reps.to_vec();
                next[i] = d.clone();
                out.push(next);
            }
        }
    }
    out
}

/// Shortest path from `m1` to `m2` in the exchange graph of SDRs (edges
/// join SDRs differing in exactly one position), by breadth-first search.
/// Requires the dragon marriage condition, which guarantees connectivity.
pub fn sdr_exchange_path(
    p: &TransversalPresentation,
    m1: &Sdr,
    m2: &Sdr,
) -> Result<Vec<Sdr>> {
    m1.validate_for(p)?;
    m2.validate_for(p)?;
    if !dragon_condition(p) {
        return Err(Error::Input(
            "family does not satisfy the dragon marriage condition".to_string(),
        ));
    }
    if m1 == m2 {
        return Ok(vec![m1.clone()]);
    }
    let start = m1.reps().to_vec();
    let goal = m2.reps().to_vec();
    let mut parent: BTreeMap<Vec<VertexId>, Vec<VertexId>> = BTreeMap::new();
    let mut queue = VecDeque::from([start.clone()]);
    parent.insert(start.clone(), start.clone());
    while let Some(reps) = queue.pop_front() {
        for next in sdr_neighbors(p, &reps) {
            if parent.contains_key(&next) {
                continue;
            }
            parent.insert(next.clone(), reps.clone());
            if next == goal {
                let mut path = vec![next.clone()];
                let mut at = next;
                while at != start {
                    at = parent[&at].clone();
                    path.push(at.clone());
                }
                path.reverse();
                return Ok(path.into_iter().map(Sdr::new).collect());
            }
            queue.push_back(next);
        }
    }
    Err(Error::Internal(
        "SDR exchange graph is disconnected despite the dragon condition".to_string(),
    ))
}

/// One constructive exchange step together with the single-position moves
/// realising it on each side (in application order; every intermediate
/// list is a valid SDR).
#[derive(Clone, Debug)]
pub struct ExchangeStep {
    pub mb: Sdr,
    pub mc: Sdr,
    pub mb_moves: Vec<(usize, VertexId)>,
    pub mc_moves: Vec<(usize, VertexId)>,
}

fn hamming(a: &Sdr, b: &Sdr) -> usize {
    a.reps().iter().zip(b.reps()).filter(|(x, y)| x != y).count()
}

/// One step of the constructive SDR exchange: returns `(mb', mc')` with
/// strictly fewer disagreeing positions.  Case split:
///
/// * rep sets differ: copy an unused `b`-representative into `mc`;
/// * rep sets equal, some disagreeing set has an element unused by both:
///   move both sides onto it;
/// * otherwise rematch both sides along a zigzag path that alternates
///   common matching edges and ends at an unused element.
pub fn sdr_exchange_step(
    p: &TransversalPresentation,
    mb: &Sdr,
    mc: &Sdr,
) -> Result<(Sdr, Sdr)> {
    sdr_exchange_step_detailed(p, mb, mc).map(|step| (step.mb, step.mc))
}

pub fn sdr_exchange_step_detailed(
    p: &TransversalPresentation,
    mb: &Sdr,
    mc: &Sdr,
) -> Result<ExchangeStep> {
    mb.validate_for(p)?;
    mc.validate_for(p)?;
    if !dragon_condition(p) {
        return Err(Error::Input(
            "family does not satisfy the dragon marriage condition".to_string(),
        ));
    }
    if mb == mc {
        return Err(Error::Input("the SDRs are already equal".to_string()));
    }

    let before = hamming(mb, mc);
    let step = exchange_step_inner(p, mb, mc)?;
    let after = hamming(&step.mb, &step.mc);
    if after >= before {
        return Err(Error::Internal(format!(
            "exchange step failed to make progress ({before} -> {after} disagreements)"
        )));
    }
    debug_assert!(step.mb.validate_for(p).is_ok() && step.mc.validate_for(p).is_ok());
    Ok(step)
}

fn exchange_step_inner(
    p: &TransversalPresentation,
    mb: &Sdr,
    mc: &Sdr,
) -> Result<ExchangeStep> {
    let b_reps = mb.rep_set();
    let c_reps = mc.rep_set();

    // Case (i): some b-representative is unused in mc; copy it across.
    if b_reps != c_reps {
        let i = mb
            .reps()
            .iter()
            .position(|b| !c_reps.contains(b))
            .expect("unequal rep sets of equal size must differ somewhere");
        let mut reps = mc.reps().to_vec();
        reps[i] = mb.reps()[i].clone();
        return Ok(ExchangeStep {
            mb: mb.clone(),
            mc: Sdr::new(reps.clone()),
            mb_moves: vec![],
            mc_moves: vec![(i, mb.reps()[i].clone())],
        });
    }

    let disagreeing: Vec<usize> = (0..p.len())
        .filter(|&i| mb.reps()[i] != mc.reps()[i])
        .collect();

    // Case (ii)(a): a disagreeing set holds an element unused by both.
    for &i in &disagreeing {
        if let Some(d) = p.sets[i].iter().find(|d| !b_reps.contains(*d)) {
            let mut nb = mb.reps().to_vec();
            let mut nc = mc.reps().to_vec();
            nb[i] = d.clone();
            nc[i] = d.clone();
            return Ok(ExchangeStep {
                mb: Sdr::new(nb),
                mc: Sdr::new(nc),
                mb_moves: vec![(i, d.clone())],
                mc_moves: vec![(i, d.clone())],
            });
        }
    }

    // Case (ii)(b): every disagreeing set is contained in the common rep
    // set.  Walk a zigzag path: from a disagreeing position, through
    // elements matched identically on both sides, to an unused element.
    zigzag_step(p, mb, mc, &disagreeing)
}

fn zigzag_step(
    p: &TransversalPresentation,
    mb: &Sdr,
    mc: &Sdr,
    disagreeing: &[usize],
) -> Result<ExchangeStep> {
    let reps = mb.rep_set();
    let agreed_owner: BTreeMap<&VertexId, usize> = (0..p.len())
        .filter(|&i| mb.reps()[i] == mc.reps()[i])
        .map(|i| (&mb.reps()[i], i))
        .collect();
    let disagreeing_elems: BTreeSet<&VertexId> =
        disagreeing.iter().map(|&i| &mb.reps()[i]).collect();

    // Breadth-first search over positions; an edge follows an element of
    // the position's set that is matched identically on both sides.  The
    // first unused element reached finishes the path.
    let mut parent: BTreeMap<usize, (usize, VertexId)> = BTreeMap::new();
    let mut seen_pos: BTreeSet<usize> = disagreeing.iter().copied().collect();
    let mut seen_elem: BTreeSet<&VertexId> = BTreeSet::new();
    let mut queue: VecDeque<usize> = disagreeing.iter().copied().collect();
    let mut terminal: Option<(usize, VertexId)> = None;

    'outer: while let Some(i) = queue.pop_front() {
        for d in &p.sets[i] {
            if disagreeing_elems.contains(d) || seen_elem.contains(d) {
                continue;
            }
            if !reps.contains(d) {
                terminal = Some((i, d.clone()));
                break 'outer;
            }
            seen_elem.insert(d);
            let j = agreed_owner[d];
            if seen_pos.insert(j) {
                parent.insert(j, (i, d.clone()));
                queue.push_back(j);
            }
        }
    }

    let Some((last_pos, free_elem)) = terminal else {
        return Err(Error::Internal(
            "no zigzag path reaches an unused element under the dragon condition".to_string(),
        ));
    };

    // Reconstruct the path back to its disagreeing start, then rematch
    // every position along it, from the free end backwards so each
    // intermediate list stays an SDR.
    let mut moves = vec![(last_pos, free_elem)];
    let mut at = last_pos;
    while let Some((prev, elem)) = parent.get(&at) {
        moves.push((*prev, elem.clone()));
        at = *prev;
    }

    let mut nb = mb.reps().to_vec();
    let mut nc = mc.reps().to_vec();
    for (i, d) in &moves {
        nb[*i] = d.clone();
        nc[*i] = d.clone();
    }
    Ok(ExchangeStep {
        mb: Sdr::new(nb),
        mc: Sdr::new(nc),
        mb_moves: moves.clone(),
        mc_moves: moves,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testdata::{ex_a, ex_g, pres, vs};

    fn sdr(reps: &[&str]) -> Sdr {
        Sdr::new(reps.iter().map(|r| (*r).into()).collect())
    }

    #[test]
    fn ex_a_transversals_exclude_two_sets() {
        let m = enumerate_transversals(&ex_a()).unwrap();
        assert_eq!(m.bases().len(), 18);
        assert!(!m.bases().contains(&vs(&["1", "2", "4"])));
        assert!(!m.bases().contains(&vs(&["1", "3", "6"])));
    }

    #[test]
    fn empty_family_has_one_empty_transversal() {
        let p = pres(&["1", "2"], &[]);
        let m = enumerate_transversals(&p).unwrap();
        assert_eq!(m.bases().len(), 1);
        assert!(m.bases().contains(&vs(&[])));
    }

    #[test]
    fn hall_violation_is_reported() {
        let p = pres(&["1", "2"], &[&["1"], &["1"]]);
        match enumerate_transversals(&p) {
            Err(Error::NoTransversal(idx)) => assert_eq!(idx, vec![0, 1]),
            other => panic!("expected no-transversal error, got {other:?}"),
        }
    }

    #[test]
    fn find_sdr_is_greedy_canonical() {
        assert_eq!(find_sdr(&ex_a()), Some(sdr(&["1", "2", "3"])));
    }

    #[test]
    fn find_sdr_backtracks() {
        // position 0 must give up element 1 for position 1
        let p = pres(&["1", "2"], &[&["1", "2"], &["1"]]);
        assert_eq!(find_sdr(&p), Some(sdr(&["2", "1"])));
    }

    #[test]
    fn find_sdr_reports_absence() {
        let p = pres(&["1", "2"], &[&["1"], &["1"]]);
        assert_eq!(find_sdr(&p), None);
    }

    #[test]
    fn dragon_holds_for_ex_a() {
        assert!(dragon_condition(&ex_a()));
    }

    #[test]
    fn dragon_fails_on_tight_union() {
        let p = pres(&["1", "2", "3"], &[&["1", "2"], &["1", "2"]]);
        assert!(!dragon_condition(&p));
    }

    #[test]
    fn dragon_is_vacuous_for_empty_family() {
        assert!(dragon_condition(&pres(&["1"], &[])));
    }

    #[test]
    fn dualize_reads_claws_off_the_graph() {
        let (p, m) = dualize(&ex_g()).unwrap();
        assert_eq!(p, ex_a());
        assert_eq!(m, sdr(&["1", "2", "3"]));
    }

    #[test]
    fn undualize_rebuilds_ex_g() {
        let g = undualize(&ex_a(), &sdr(&["1", "2", "3"])).unwrap();
        assert_eq!(g, ex_g());
    }

    #[test]
    fn undualize_rejects_bad_sdr() {
        match undualize(&ex_a(), &sdr(&["1", "2", "2"])) {
            Err(Error::InvalidSdr(_)) => {}
            other => panic!("expected invalid SDR, got {other:?}"),
        }
        match undualize(&ex_a(), &sdr(&["1", "3", "5"])) {
            Err(Error::InvalidSdr(msg)) => {
                assert_eq!(msg, "representative 3 is not in the set at position 1")
            }
            other => panic!("expected invalid SDR, got {other:?}"),
        }
    }

    #[test]
    fn round_trips_are_exact() {
        let g = ex_g();
        let (p, m) = dualize(&g).unwrap();
        assert_eq!(undualize(&p, &m).unwrap(), g);

        let other = sdr(&["1", "2", "5"]);
        let g2 = undualize(&ex_a(), &other).unwrap();
        let (p2, m2) = dualize(&g2).unwrap();
        assert_eq!(p2.sets_multiset(), ex_a().sets_multiset());
        assert_eq!(m2.rep_set(), other.rep_set());
    }

    #[test]
    fn exchange_path_follows_single_position_moves() {
        let path = sdr_exchange_path(&ex_a(), &sdr(&["1", "2", "3"]), &sdr(&["3", "2", "5"]))
            .unwrap();
        assert_eq!(
            path,
            vec![sdr(&["1", "2", "3"]), sdr(&["1", "2", "5"]), sdr(&["3", "2", "5"])]
        );
    }

    #[test]
    fn exchange_path_of_equal_endpoints_is_trivial() {
        let m = sdr(&["1", "2", "3"]);
        assert_eq!(sdr_exchange_path(&ex_a(), &m, &m).unwrap(), vec![m]);
    }

    #[test]
    fn exchange_path_requires_dragon() {
        let p = pres(&["1", "2"], &[&["1", "2"]]);
        // union of the single set has exactly one extra element: fine
        assert!(dragon_condition(&p));
        let tight = pres(&["1", "2"], &[&["1", "2"], &["1", "2"]]);
        match sdr_exchange_path(&tight, &sdr(&["1", "2"]), &sdr(&["2", "1"])) {
            Err(Error::Input(_)) => {}
            other => panic!("expected input error, got {other:?}"),
        }
    }

    #[test]
    fn step_case_rep_sets_differ() {
        let (nb, nc) =
            sdr_exchange_step(&ex_a(), &sdr(&["1", "2", "3"]), &sdr(&["3", "2", "5"])).unwrap();
        assert_eq!(nb, sdr(&["1", "2", "3"]));
        assert_eq!(nc, sdr(&["1", "2", "5"]));
    }

    #[test]
    fn step_case_equal_rep_sets_free_element() {
        let p = pres(&["1", "2", "3"], &[&["1", "2", "3"], &["1", "2", "3"]]);
        let (nb, nc) = sdr_exchange_step(&p, &sdr(&["1", "2"]), &sdr(&["2", "1"])).unwrap();
        assert_eq!(nb, sdr(&["3", "2"]));
        assert_eq!(nc, sdr(&["3", "1"]));
    }

    #[test]
    fn step_case_zigzag() {
        // both disagreeing sets live inside the common rep set {1,2,3};
        // the path must run through position 2 to reach the unused 4
        let p = pres(&["1", "2", "3", "4"], &[&["1", "2", "3"], &["1", "2"], &["3", "4"]]);
        let mb = sdr(&["1", "2", "3"]);
        let mc = sdr(&["2", "1", "3"]);
        let step = sdr_exchange_step_detailed(&p, &mb, &mc).unwrap();
        assert_eq!(step.mb, sdr(&["3", "2", "4"]));
        assert_eq!(step.mc, sdr(&["3", "1", "4"]));
        // moves apply free-end first and keep every intermediate an SDR
        let mut cur = mb.reps().to_vec();
        for (i, d) in &step.mb_moves {
            cur[*i] = d.clone();
            Sdr::new(cur.clone()).validate_for(&p).unwrap();
        }
        assert_eq!(Sdr::new(cur), step.mb);
    }

    #[test]
    fn step_iteration_terminates() {
        let p = ex_a();
        let mut mb = sdr(&["4", "2", "3"]);
        let mut mc = sdr(&["1", "5", "6"]);
        let mut guard = 0;
        while mb != mc {
            let (nb, nc) = sdr_exchange_step(&p, &mb, &mc).unwrap();
            mb = nb;
            mc = nc;
            guard += 1;
            assert!(guard <= 3, "steps exceeded initial disagreement count");
        }
    }

    #[test]
    fn step_rejects_equal_inputs() {
        let m = sdr(&["1", "2", "3"]);
        match sdr_exchange_step(&ex_a(), &m, &m) {
            Err(Error::Input(_)) => {}
            other => panic!("expected input error, got {other:?}"),
        }
    }
}
