//! Homomorphism and coKleisli-morphism existence.
//!
//! [`find_homomorphism`] is a sound and complete backtracking search with
//! generalized arc-consistency pruning; witnesses are re-verified before they
//! are returned. The three `exists_ckm_*` deciders answer "is there a
//! morphism out of the resource-bounded carrier" by game fixpoints over
//! canonical positions, never materializing the carrier: positions are the
//! induced partial maps (round-bounded case), current pebble windows
//! (pebbling case), or element pairs with remaining depth (modal case).

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use thiserror::Error;

use crate::structure::{is_homomorphism, is_partial_hom, Elem, Structure, StructureError};
use crate::{modal, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomError {
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error("position space of size {required} exceeds cap {cap}")]
    CapExceeded { required: u128, cap: usize },
    #[error("modal deciders require pointed structures")]
    NotPointed,
}

/// Which comonad a resource-indexed query refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ComonadTag {
    Ef,
    Pebble,
    Modal,
}

/// A verified homomorphism together with search statistics.
#[derive(Debug, Clone)]
pub struct HomWitness {
    pub assignment: Vec<Elem>,
    pub nodes: u64,
    pub backtracks: u64,
}

struct Csp<'a> {
    a: &'a Structure,
    b: &'a Structure,
    /// (relation, source tuple) pairs acting as constraints.
    constraints: Vec<(usize, Vec<Elem>)>,
    /// constraint indices touching each source element
    by_var: Vec<Vec<usize>>,
    nodes: u64,
    backtracks: u64,
}

impl<'a> Csp<'a> {
    fn new(a: &'a Structure, b: &'a Structure) -> Self {
        let mut constraints = Vec::new();
        for (r, _) in a.vocab().symbols() {
            for t in a.tuples(r) {
                constraints.push((r, t.clone()));
            }
        }
        let mut by_var = alloc::vec![Vec::new(); a.size()];
        for (ci, (_, t)) in constraints.iter().enumerate() {
            for &x in t {
                if !by_var[x as usize].contains(&ci) {
                    by_var[x as usize].push(ci);
                }
            }
        }
        Csp {
            a,
            b,
            constraints,
            by_var,
            nodes: 0,
            backtracks: 0,
        }
    }

    fn initial_domains(&self) -> Vec<BTreeSet<Elem>> {
        let full: BTreeSet<Elem> = (0..self.b.size() as Elem).collect();
        let mut domains = alloc::vec![full; self.a.size()];
        if let (Some(pa), Some(pb)) = (self.a.point(), self.b.point()) {
            domains[pa as usize] = BTreeSet::from([pb]);
        }
        domains
    }

    /// Does value `v` for variable `x` have a supporting target tuple under
    /// the current domains?
    fn supported(&self, c: &(usize, Vec<Elem>), x: Elem, v: Elem, domains: &[BTreeSet<Elem>]) -> bool {
        let (r, src) = c;
        'tuples: for tgt in self.b.tuples(*r) {
            if tgt.len() != src.len() {
                continue;
            }
            // Respect the equality pattern of the source tuple.
            let mut assign: BTreeMap<Elem, Elem> = BTreeMap::new();
            for (&sx, &tv) in src.iter().zip(tgt) {
                match assign.get(&sx) {
                    Some(&prev) if prev != tv => continue 'tuples,
                    Some(_) => {}
                    None => {
                        assign.insert(sx, tv);
                    }
                }
            }
            if assign.get(&x) != Some(&v) {
                continue;
            }
            if assign
                .iter()
                .all(|(&sx, &tv)| domains[sx as usize].contains(&tv))
            {
                return true;
            }
        }
        false
    }

    /// Generalized arc consistency to fixpoint. Returns false on wipeout.
    fn propagate(&self, domains: &mut [BTreeSet<Elem>]) -> bool {
        let mut queue: Vec<usize> = (0..self.constraints.len()).collect();
        while let Some(ci) = queue.pop() {
            let c = self.constraints[ci].clone();
            let vars: BTreeSet<Elem> = c.1.iter().copied().collect();
            for &x in &vars {
                let to_drop: Vec<Elem> = domains[x as usize]
                    .iter()
                    .copied()
                    .filter(|&v| !self.supported(&c, x, v, domains))
                    .collect();
                if !to_drop.is_empty() {
                    for v in to_drop {
                        domains[x as usize].remove(&v);
                    }
                    if domains[x as usize].is_empty() {
                        return false;
                    }
                    for &cj in &self.by_var[x as usize] {
                        if !queue.contains(&cj) {
                            queue.push(cj);
                        }
                    }
                }
            }
        }
        true
    }

    fn search(
        &mut self,
        domains: &mut Vec<BTreeSet<Elem>>,
        on_solution: &mut impl FnMut(&[Elem]) -> bool,
    ) -> bool {
        self.nodes += 1;
        // Smallest open domain first.
        let open = domains
            .iter()
            .enumerate()
            .filter(|(_, d)| d.len() > 1)
            .min_by_key(|(_, d)| d.len());
        let x = match open {
            Some((x, _)) => x,
            None => {
                if domains.iter().any(|d| d.is_empty()) {
                    return false;
                }
                let solution: Vec<Elem> =
                    domains.iter().map(|d| *d.first().expect("non-empty")).collect();
                return on_solution(&solution);
            }
        };
        let candidates: Vec<Elem> = domains[x].iter().copied().collect();
        for v in candidates {
            let mut next = domains.clone();
            next[x] = BTreeSet::from([v]);
            if self.propagate(&mut next) && self.search(&mut next, on_solution) {
                return true;
            }
            self.backtracks += 1;
        }
        false
    }
}

/// Sound and complete homomorphism search from `a` to `b`. Respects points
/// when both structures carry one.
pub fn find_homomorphism(a: &Structure, b: &Structure) -> Result<Option<HomWitness>, HomError> {
    if a.vocab() != b.vocab() {
        return Err(StructureError::VocabMismatch.into());
    }
    if a.size() == 0 {
        return Ok(Some(HomWitness {
            assignment: Vec::new(),
            nodes: 0,
            backtracks: 0,
        }));
    }
    if b.size() == 0 {
        return Ok(None);
    }
    let mut csp = Csp::new(a, b);
    let mut domains = csp.initial_domains();
    if !csp.propagate(&mut domains) {
        return Ok(None);
    }
    let mut found: Option<Vec<Elem>> = None;
    csp.search(&mut domains, &mut |sol| {
        found = Some(sol.to_vec());
        true
    });
    match found {
        Some(assignment) => {
            debug_assert!(is_homomorphism(&assignment, a, b)?);
            if !is_homomorphism(&assignment, a, b)? {
                return Ok(None);
            }
            Ok(Some(HomWitness {
                assignment,
                nodes: csp.nodes,
                backtracks: csp.backtracks,
            }))
        }
        None => Ok(None),
    }
}

/// All homomorphisms from `a` to `b`, up to `limit` of them.
pub fn find_all_homomorphisms(
    a: &Structure,
    b: &Structure,
    limit: usize,
) -> Result<Vec<Vec<Elem>>, HomError> {
    if a.vocab() != b.vocab() {
        return Err(StructureError::VocabMismatch.into());
    }
    if a.size() == 0 {
        return Ok(alloc::vec![Vec::new()]);
    }
    if b.size() == 0 || limit == 0 {
        return Ok(Vec::new());
    }
    let mut csp = Csp::new(a, b);
    let mut domains = csp.initial_domains();
    let mut out = Vec::new();
    if !csp.propagate(&mut domains) {
        return Ok(Vec::new());
    }
    csp.search(&mut domains, &mut |sol| {
        out.push(sol.to_vec());
        out.len() >= limit
    });
    Ok(out)
}

/// Duplicator's canonical responses for an existential game, one response per
/// reachable winning position. Responses are the lexicographically least
/// surviving choice, so tables are reproducible.
#[derive(Debug, Clone, Default)]
pub struct ExistentialStrategy {
    /// (canonical position, remaining rounds, Spoiler move) -> response.
    /// For the pebbling game the position is the window and rounds are absent
    /// (greatest-fixpoint semantics), encoded with rounds = 0 and the move
    /// carrying the pebble index.
    pub responses: BTreeMap<(Vec<(Elem, Elem)>, usize, u32, Elem), Elem>,
}

type PartialMap = BTreeMap<Elem, Elem>;

fn canon(map: &PartialMap) -> Vec<(Elem, Elem)> {
    map.iter().map(|(&x, &y)| (x, y)).collect()
}

fn extension_ok(map: &PartialMap, x: Elem, y: Elem, a: &Structure, b: &Structure) -> bool {
    let mut pairs = canon(map);
    pairs.push((x, y));
    is_partial_hom(&pairs, a, b)
}

struct EfExistential<'a> {
    a: &'a Structure,
    b: &'a Structure,
    memo: BTreeMap<(Vec<(Elem, Elem)>, usize), bool>,
}

impl EfExistential<'_> {
    fn win(&mut self, map: &PartialMap, rounds: usize) -> bool {
        if rounds == 0 {
            return true;
        }
        let key = (canon(map), rounds);
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        // Spoiler repeating an already-played element forces the recorded
        // response, so those branches reduce to the same map one round later.
        let mut result = map.is_empty() || self.win(map, rounds - 1);
        if result {
            for x in self.a.elements() {
                if map.contains_key(&x) {
                    continue;
                }
                let mut answered = false;
                for y in self.b.elements() {
                    if extension_ok(map, x, y, self.a, self.b) {
                        let mut next = map.clone();
                        next.insert(x, y);
                        if self.win(&next, rounds - 1) {
                            answered = true;
                            break;
                        }
                    }
                }
                if !answered {
                    result = false;
                    break;
                }
            }
        }
        self.memo.insert(key, result);
        result
    }

    fn extract(&mut self, k: usize) -> ExistentialStrategy {
        let mut strategy = ExistentialStrategy::default();
        let mut queue: Vec<(PartialMap, usize)> = alloc::vec![(PartialMap::new(), k)];
        let mut seen = BTreeSet::new();
        while let Some((map, rounds)) = queue.pop() {
            if rounds == 0 || !seen.insert((canon(&map), rounds)) {
                continue;
            }
            for x in self.a.elements() {
                if let Some(&y) = map.get(&x) {
                    strategy
                        .responses
                        .insert((canon(&map), rounds, 0, x), y);
                    queue.push((map.clone(), rounds - 1));
                    continue;
                }
                let response = self.b.elements().find(|&y| {
                    if !extension_ok(&map, x, y, self.a, self.b) {
                        return false;
                    }
                    let mut next = map.clone();
                    next.insert(x, y);
                    self.win(&next, rounds - 1)
                });
                if let Some(y) = response {
                    strategy.responses.insert((canon(&map), rounds, 0, x), y);
                    let mut next = map.clone();
                    next.insert(x, y);
                    queue.push((next, rounds - 1));
                }
            }
        }
        strategy
    }
}

/// Existence of a coKleisli morphism out of the `k`-round carrier, decided by
/// the existential game fixpoint with the partial-homomorphism winning
/// condition.
pub fn exists_ckm_ef(
    a: &Structure,
    b: &Structure,
    k: usize,
) -> Result<(bool, Option<ExistentialStrategy>), HomError> {
    if a.vocab() != b.vocab() {
        return Err(StructureError::VocabMismatch.into());
    }
    if a.size() > 0 && b.size() == 0 {
        return Ok((false, None));
    }
    let mut solver = EfExistential {
        a,
        b,
        memo: BTreeMap::new(),
    };
    let won = solver.win(&PartialMap::new(), k);
    let strategy = won.then(|| solver.extract(k));
    Ok((won, strategy))
}

/// A pebble window: the current placement of each pebble on a pair.
type Window = Vec<Option<(Elem, Elem)>>;

fn window_pairs(w: &Window) -> Vec<(Elem, Elem)> {
    w.iter().flatten().copied().collect()
}

fn enumerate_windows(k: usize, pairs: &[(Elem, Elem)]) -> Vec<Window> {
    let mut out: Vec<Window> = alloc::vec![Vec::new()];
    for _ in 0..k {
        let mut next = Vec::with_capacity(out.len() * (pairs.len() + 1));
        for w in &out {
            let mut w0 = w.clone();
            w0.push(None);
            next.push(w0);
            for &p in pairs {
                let mut w1 = w.clone();
                w1.push(Some(p));
                next.push(w1);
            }
        }
        out = next;
    }
    out
}

/// Existence of a coKleisli morphism out of the `k`-pebble carrier, decided
/// by greatest fixpoint over windows: a position survives iff its window is a
/// partial homomorphism and every Spoiler re-placement has a surviving
/// response. `cap` bounds the position space `(|A||B|+1)^k`.
pub fn exists_ckm_pebble(
    a: &Structure,
    b: &Structure,
    k: usize,
    cap: usize,
) -> Result<(bool, Option<ExistentialStrategy>), HomError> {
    if a.vocab() != b.vocab() {
        return Err(StructureError::VocabMismatch.into());
    }
    if a.size() > 0 && b.size() == 0 {
        return Ok((false, None));
    }
    let pair_count = (a.size() as u128) * (b.size() as u128) + 1;
    let mut required: u128 = 1;
    for _ in 0..k {
        required = required.saturating_mul(pair_count);
    }
    if required > cap as u128 {
        return Err(HomError::CapExceeded { required, cap });
    }

    let pairs: Vec<(Elem, Elem)> = a
        .elements()
        .flat_map(|x| b.elements().map(move |y| (x, y)))
        .collect();
    let mut alive: BTreeSet<Window> = enumerate_windows(k, &pairs)
        .into_iter()
        .filter(|w| is_partial_hom(&window_pairs(w), a, b))
        .collect();

    // Survive-forever semantics: prune until stable.
    loop {
        let mut doomed: Vec<Window> = Vec::new();
        for w in &alive {
            'moves: for p in 0..k {
                for x in a.elements() {
                    let has_response = b.elements().any(|y| {
                        let mut next = w.clone();
                        next[p] = Some((x, y));
                        alive.contains(&next)
                    });
                    if !has_response {
                        doomed.push(w.clone());
                        break 'moves;
                    }
                }
            }
        }
        if doomed.is_empty() {
            break;
        }
        for w in doomed {
            alive.remove(&w);
        }
    }

    let empty: Window = alloc::vec![None; k];
    let won = alive.contains(&empty);
    let strategy = won.then(|| {
        let mut strategy = ExistentialStrategy::default();
        for w in &alive {
            for p in 0..k {
                for x in a.elements() {
                    let y = b.elements().find(|&y| {
                        let mut next = w.clone();
                        next[p] = Some((x, y));
                        alive.contains(&next)
                    });
                    if let Some(y) = y {
                        strategy
                            .responses
                            .insert((window_pairs(w), 0, p as u32 + 1, x), y);
                    }
                }
            }
        }
        strategy
    });
    Ok((won, strategy))
}

/// Existence of a coKleisli morphism out of the depth-`k` unravelling,
/// decided through the simulation preorder.
pub fn exists_ckm_modal(a: &Structure, b: &Structure, k: usize) -> Result<bool, HomError> {
    if a.vocab() != b.vocab() {
        return Err(StructureError::VocabMismatch.into());
    }
    let (pa, pb) = match (a.point(), b.point()) {
        (Some(pa), Some(pb)) => (pa, pb),
        _ => return Err(HomError::NotPointed),
    };
    Ok(modal::simulation_preorder(a, pa, b, pb, k))
}

/// The resource-bounded approximation preorder: quantification over all
/// coalgebras with parameter at most `k` collapses to the single coKleisli
/// test for the tagged comonad.
pub fn rossman_preorder(
    a: &Structure,
    b: &Structure,
    k: usize,
    tag: ComonadTag,
    cap: usize,
) -> Result<bool, HomError> {
    match tag {
        ComonadTag::Ef => Ok(exists_ckm_ef(a, b, k)?.0),
        ComonadTag::Pebble => Ok(exists_ckm_pebble(a, b, k, cap)?.0),
        ComonadTag::Modal => exists_ckm_modal(a, b, k),
    }
}

/// Equivalence by coKleisli morphisms in both directions.
pub fn equiv_existential(
    a: &Structure,
    b: &Structure,
    k: usize,
    tag: ComonadTag,
    cap: usize,
) -> Result<bool, HomError> {
    Ok(rossman_preorder(a, b, k, tag, cap)? && rossman_preorder(b, a, k, tag, cap)?)
}

/// Verdict wrapper that reports cap overruns as undecided instead of failing.
pub fn rossman_preorder_verdict(
    a: &Structure,
    b: &Structure,
    k: usize,
    tag: ComonadTag,
    cap: usize,
) -> Result<Verdict, HomError> {
    match rossman_preorder(a, b, k, tag, cap) {
        Ok(v) => Ok(Verdict::from_bool(v)),
        Err(HomError::CapExceeded { .. }) => Ok(Verdict::Undecided),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::Structure;

    #[test]
    fn hom_k2_into_k3_exists() {
        let k2 = Structure::clique(2);
        let k3 = Structure::clique(3);
        let w = find_homomorphism(&k2, &k3).unwrap().unwrap();
        assert!(is_homomorphism(&w.assignment, &k2, &k3).unwrap());
    }

    #[test]
    fn hom_k3_into_k2_does_not_exist() {
        let k3 = Structure::clique(3);
        let k2 = Structure::clique(2);
        assert!(find_homomorphism(&k3, &k2).unwrap().is_none());
        // Brute force over all 8 maps agrees.
        let mut any = false;
        for bits in 0..8u32 {
            let f = [bits & 1, (bits >> 1) & 1, (bits >> 2) & 1];
            if is_homomorphism(&f, &k3, &k2).unwrap() {
                any = true;
            }
        }
        assert!(!any);
    }

    #[test]
    fn c5_is_3_colorable() {
        let c5 = Structure::cycle(5);
        let k3 = Structure::clique(3);
        let w = find_homomorphism(&c5, &k3).unwrap().unwrap();
        assert!(is_homomorphism(&w.assignment, &c5, &k3).unwrap());
    }

    #[test]
    fn all_homs_enumeration() {
        let k2 = Structure::clique(2);
        let homs = find_all_homomorphisms(&k2, &k2, 100).unwrap();
        // The two graph automorphisms.
        assert_eq!(homs.len(), 2);
    }

    #[test]
    fn ckm_ef_examples() {
        let k3 = Structure::clique(3);
        let k2 = Structure::clique(2);
        assert!(exists_ckm_ef(&k3, &k2, 2).unwrap().0);
        assert!(!exists_ckm_ef(&k3, &k2, 3).unwrap().0);
        // Whenever a homomorphism exists, every k works.
        let k4 = Structure::clique(4);
        for k in 1..=4 {
            assert!(exists_ckm_ef(&k3, &k4, k).unwrap().0);
        }
    }

    #[test]
    fn ckm_ef_monotone_in_k() {
        let p3 = Structure::path_graph(3);
        let k3 = Structure::clique(3);
        let mut previous = true;
        for k in 1..=4 {
            let now = exists_ckm_ef(&p3, &k3, k).unwrap().0;
            assert!(previous || !now, "monotonicity violated at k={k}");
            previous = now;
        }
    }

    #[test]
    fn ckm_pebble_examples() {
        let k3 = Structure::clique(3);
        let k2 = Structure::clique(2);
        assert!(exists_ckm_pebble(&k3, &k2, 2, 1 << 20).unwrap().0);
        assert!(!exists_ckm_pebble(&k3, &k2, 3, 1 << 20).unwrap().0);
        assert!(exists_ckm_pebble(&k3, &k3, 2, 1 << 20).unwrap().0);
    }

    #[test]
    fn pebble_cap_is_reported() {
        let k3 = Structure::clique(3);
        match exists_ckm_pebble(&k3, &k3, 3, 10) {
            Err(HomError::CapExceeded { required, cap }) => {
                assert_eq!(required, 1000);
                assert_eq!(cap, 10);
            }
            other => panic!("expected cap error, got {other:?}"),
        }
    }

    #[test]
    fn equiv_existential_examples() {
        let k3 = Structure::clique(3);
        let k2 = Structure::clique(2);
        assert!(equiv_existential(&k3, &k3, 3, ComonadTag::Ef, 1 << 20).unwrap());
        assert!(equiv_existential(&k3, &k2, 2, ComonadTag::Ef, 1 << 20).unwrap());
        assert!(!equiv_existential(&k3, &k2, 3, ComonadTag::Ef, 1 << 20).unwrap());
    }

    #[test]
    fn strategy_tables_are_recorded_for_wins() {
        let k3 = Structure::clique(3);
        let k2 = Structure::clique(2);
        let (won, strat) = exists_ckm_ef(&k3, &k2, 2).unwrap();
        assert!(won);
        let strat = strat.unwrap();
        // Empty-position responses exist for every Spoiler opening.
        for x in 0..3u32 {
            assert!(strat.responses.contains_key(&(Vec::new(), 2, 0, x)));
        }
    }
}
