//! The depth-indexed comonad on pointed structures with arities at most 2.
//!
//! The carrier of depth `k` is the unravelling of the structure from its
//! point: realizable transition paths of length at most `k`. Unary symbols
//! hold at a play iff they hold at its last element; a binary symbol relates
//! `s` to exactly its one-step extensions. The simulation preorder is decided
//! top-down with memoization rather than by materializing the unravelling,
//! which grows exponentially on branching structures.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

use crate::structure::{Elem, RelId, Structure};
use crate::{hom, pebble, LawReport};

pub type PlayId = usize;

/// Steps of a modal play: `(label, element)` transitions from the point.
/// The empty step list is the distinguished play `[a]`.
pub type Steps = Vec<(RelId, Elem)>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModalError {
    #[error("modal operations require a pointed structure")]
    NotPointed,
    #[error("relation `{0}` has arity > 2")]
    ArityTooHigh(String),
    #[error("universe of size {required} exceeds budget {budget}")]
    BudgetExceeded { required: usize, budget: usize },
}

fn modal_check(base: &Structure) -> Result<Elem, ModalError> {
    let point = base.point().ok_or(ModalError::NotPointed)?;
    for (_, sym) in base.vocab().symbols() {
        if sym.arity > 2 {
            return Err(ModalError::ArityTooHigh(sym.name.clone()));
        }
    }
    Ok(point)
}

/// The materialized depth-`k` unravelling of a pointed structure.
#[derive(Debug, Clone)]
pub struct ModalStructure {
    base: Structure,
    k: usize,
    point: Elem,
    plays: Vec<Steps>,
    index: BTreeMap<Steps, PlayId>,
}

impl ModalStructure {
    /// Unravels from the point to depth `k` (`k = 0` gives the singleton).
    pub fn build(base: &Structure, k: usize, budget: usize) -> Result<Self, ModalError> {
        let point = modal_check(base)?;
        let binary: Vec<RelId> = base.vocab().binary_rels().collect();
        let mut plays: Vec<Steps> = alloc::vec![Vec::new()];
        let mut frontier: Vec<Steps> = alloc::vec![Vec::new()];
        for _ in 0..k {
            let mut next = Vec::new();
            for s in &frontier {
                let last = s.last().map(|&(_, a)| a).unwrap_or(point);
                for &alpha in &binary {
                    for t in base.tuples(alpha) {
                        if t[0] == last {
                            let mut extended = s.clone();
                            extended.push((alpha, t[1]));
                            next.push(extended);
                        }
                    }
                }
            }
            if plays.len() + next.len() > budget {
                return Err(ModalError::BudgetExceeded {
                    required: plays.len() + next.len(),
                    budget,
                });
            }
            plays.extend(next.iter().cloned());
            frontier = next;
            if frontier.is_empty() {
                break;
            }
        }
        let index = plays
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        Ok(ModalStructure {
            base: base.clone(),
            k,
            point,
            plays,
            index,
        })
    }

    pub fn base(&self) -> &Structure {
        &self.base
    }

    pub fn depth(&self) -> usize {
        self.k
    }

    pub fn point(&self) -> Elem {
        self.point
    }

    pub fn universe_size(&self) -> usize {
        self.plays.len()
    }

    pub fn play(&self, id: PlayId) -> &Steps {
        &self.plays[id]
    }

    pub fn plays(&self) -> impl Iterator<Item = (PlayId, &Steps)> {
        self.plays.iter().enumerate()
    }

    pub fn play_id(&self, steps: &Steps) -> Option<PlayId> {
        self.index.get(steps).copied()
    }

    pub fn counit(&self, id: PlayId) -> Elem {
        self.plays[id].last().map(|&(_, a)| a).unwrap_or(self.point)
    }

    /// Rendering `[a|α|b|α|c]` with label and element names.
    pub fn render(&self, id: PlayId) -> String {
        let mut out = String::new();
        out.push('[');
        out.push_str(&self.base.elem_name(self.point));
        for &(alpha, a) in &self.plays[id] {
            out.push('|');
            out.push_str(self.base.vocab().name(alpha));
            out.push('|');
            out.push_str(&self.base.elem_name(a));
        }
        out.push(']');
        out
    }

    /// Unary symbols hold via the counit; a binary symbol relates a play to
    /// its one-step extensions by that label.
    pub fn rel_holds(&self, r: RelId, ids: &[PlayId]) -> bool {
        match self.base.vocab().arity(r) {
            1 => self.base.holds(r, &[self.counit(ids[0])]),
            2 => {
                let (s, t) = (&self.plays[ids[0]], &self.plays[ids[1]]);
                t.len() == s.len() + 1
                    && t.starts_with(s)
                    && t.last().expect("non-empty").0 == r
                    && self.base.holds(r, &[self.counit(ids[0]), self.counit(ids[1])])
            }
            _ => false,
        }
    }

    /// Materializes the unravelling as a pointed structure on plays.
    pub fn realize(&self) -> Structure {
        let mut out = Structure::new(self.base.vocab().clone(), self.plays.len());
        out.set_names((0..self.plays.len()).map(|i| self.render(i)).collect());
        for (r, sym) in self.base.vocab().symbols() {
            match sym.arity {
                1 => {
                    for (i, _) in self.plays() {
                        if self.base.holds(r, &[self.counit(i)]) {
                            out.add_tuple_unchecked(r, alloc::vec![i as Elem]);
                        }
                    }
                }
                2 => {
                    for (i, s) in self.plays() {
                        for (j, t) in self.plays() {
                            if t.len() == s.len() + 1
                                && t.starts_with(s)
                                && t.last().expect("non-empty").0 == r
                            {
                                out.add_tuple_unchecked(r, alloc::vec![i as Elem, j as Elem]);
                            }
                        }
                    }
                }
                _ => unreachable!("arity checked at build"),
            }
        }
        out.set_point_unchecked(0);
        out
    }
}

/// An image sequence under coextension: start element plus labelled steps.
pub type ModalSeq = (Elem, Vec<(RelId, Elem)>);

/// Kleisli coextension: `f*[a] = [f[a]]`, and
/// `f*(s[α,a']) = f*(s)[α, f(s[α,a'])]`.
pub fn coextension(ms: &ModalStructure, f: &[Elem]) -> Vec<ModalSeq> {
    ms.plays()
        .map(|(_, steps)| {
            let root = f[ms.play_id(&Vec::new()).expect("root")];
            let images: Vec<(RelId, Elem)> = (1..=steps.len())
                .map(|l| {
                    let prefix: Steps = steps[..l].to_vec();
                    (steps[l - 1].0, f[ms.play_id(&prefix).expect("prefix")])
                })
                .collect();
            (root, images)
        })
        .collect()
}

/// Comultiplication: the sequence of prefixes, labelled as in the play.
pub fn comultiplication(ms: &ModalStructure) -> Vec<(PlayId, Vec<(RelId, PlayId)>)> {
    let root = ms.play_id(&Vec::new()).expect("root");
    ms.plays()
        .map(|(_, steps)| {
            let ids: Vec<(RelId, PlayId)> = (1..=steps.len())
                .map(|l| (steps[l - 1].0, ms.play_id(&steps[..l].to_vec()).expect("prefix")))
                .collect();
            (root, ids)
        })
        .collect()
}

/// Inclusion of a shallower unravelling into a deeper one of the same base.
pub fn inclusion(small: &ModalStructure, large: &ModalStructure) -> Option<Vec<PlayId>> {
    if small.depth() > large.depth() {
        return None;
    }
    small
        .plays()
        .map(|(_, steps)| large.play_id(steps))
        .collect()
}

/// The simulation preorder `a ≼_k b`, by its two-clause induction: unary
/// profiles are carried forward, and every transition from `a` is matched by
/// one from `b` whose targets are related one level down. The base case
/// checks only the unary clause.
pub fn simulation_preorder(a: &Structure, pa: Elem, b: &Structure, pb: Elem, k: usize) -> bool {
    let mut memo = BTreeMap::new();
    sim(a, pa, b, pb, k, &mut memo)
}

fn sim(
    a: &Structure,
    x: Elem,
    b: &Structure,
    y: Elem,
    depth: usize,
    memo: &mut BTreeMap<(Elem, Elem, usize), bool>,
) -> bool {
    if let Some(&v) = memo.get(&(x, y, depth)) {
        return v;
    }
    let mut ok = true;
    for r in a.vocab().unary_rels() {
        if a.holds(r, &[x]) && !b.holds(r, &[y]) {
            ok = false;
            break;
        }
    }
    if ok && depth > 0 {
        'outer: for alpha in a.vocab().binary_rels() {
            for t in a.tuples(alpha) {
                if t[0] != x {
                    continue;
                }
                let x2 = t[1];
                let matched = b
                    .tuples(alpha)
                    .filter(|u| u[0] == y)
                    .any(|u| sim(a, x2, b, u[1], depth - 1, memo));
                if !matched {
                    ok = false;
                    break 'outer;
                }
            }
        }
    }
    memo.insert((x, y, depth), ok);
    ok
}

/// Both verdicts of the equivalence: brute-force homomorphism search out of
/// the materialized unravelling, and the simulation fixpoint. The two must
/// agree; `agree` records whether they did.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HomEquivReport {
    pub hom_exists: bool,
    pub simulates: bool,
    pub agree: bool,
}

pub fn hom_equiv_check(
    a: &Structure,
    b: &Structure,
    k: usize,
    budget: usize,
) -> Result<HomEquivReport, ModalError> {
    let pa = modal_check(a)?;
    let pb = modal_check(b)?;
    let ms = ModalStructure::build(a, k, budget)?;
    let realized = ms.realize();
    let hom_exists = hom::find_homomorphism(&realized, b)
        .map_err(|_| ModalError::NotPointed)?
        .is_some();
    let simulates = simulation_preorder(a, pa, b, pb, k);
    Ok(HomEquivReport {
        hom_exists,
        simulates,
        agree: hom_exists == simulates,
    })
}

/// The hand-over-hand encoding into 2-pebble plays:
/// `[a_0,α_1,a_1,…,α_j,a_j]` becomes `[(1,a_0),(2,a_1),…,((j mod 2)+1,a_j)]`.
pub fn to_pebble2_play(point: Elem, steps: &Steps) -> Vec<pebble::Move> {
    let mut out = Vec::with_capacity(steps.len() + 1);
    out.push((1, point));
    for (i, &(_, a)) in steps.iter().enumerate() {
        out.push((((i as u32 + 1) % 2) + 1, a));
    }
    out
}

/// The morphism on a whole unravelling, into a pebble truncation over the
/// same base with 2 pebbles and length bound at least `k + 1`.
pub fn modal_to_pebble2(
    ms: &ModalStructure,
    pbs: &pebble::PebbleStructure,
) -> Option<Vec<pebble::PlayId>> {
    if pbs.pebbles() < 2 || pbs.length_bound() < ms.depth() + 1 {
        return None;
    }
    ms.plays()
        .map(|(_, steps)| pbs.play_id(&to_pebble2_play(ms.point(), steps)))
        .collect()
}

/// A depth-capped stage of the colimit construction: the unravelling at the
/// cap together with the least depth at which the play set stabilized, when
/// it did within the cap.
#[derive(Debug, Clone)]
pub struct OmegaApprox {
    pub stage: ModalStructure,
    pub stabilized_at: Option<usize>,
}

pub fn omega_approx(a: &Structure, cap: usize, budget: usize) -> Result<OmegaApprox, ModalError> {
    let mut previous = ModalStructure::build(a, 0, budget)?;
    let mut stabilized_at = None;
    for d in 0..cap {
        let next = ModalStructure::build(a, d + 1, budget)?;
        if stabilized_at.is_none() && previous.plays.len() == next.plays.len() {
            // Identical play sets: unravelling has stopped growing.
            let same: BTreeSet<&Steps> = previous.plays.iter().collect();
            if next.plays.iter().all(|p| same.contains(p)) {
                stabilized_at = Some(d);
            }
        }
        previous = next;
    }
    Ok(OmegaApprox {
        stage: previous,
        stabilized_at,
    })
}

pub struct LawOptions<'a> {
    pub seed: u64,
    pub samples: usize,
    pub counit_override: Option<&'a dyn Fn(Elem, &Steps) -> Elem>,
    /// Cap on the number of enumerated homomorphisms used for the
    /// composition law.
    pub hom_limit: usize,
}

impl Default for LawOptions<'_> {
    fn default() -> Self {
        LawOptions {
            seed: 0,
            samples: 8,
            counit_override: None,
            hom_limit: 16,
        }
    }
}

/// Law battery for the unravelling comonad. Coextension is only defined on
/// homomorphisms here (arbitrary maps need not produce realizable paths), so
/// the sampled functions for the Kleisli equations are enumerated
/// homomorphisms from the realized unravelling to the base.
pub fn check_comonad_laws(ms: &ModalStructure, opts: &LawOptions) -> LawReport {
    let mut report = LawReport::default();
    let eps = |id: PlayId| -> Elem {
        match opts.counit_override {
            Some(f) => f(ms.point(), ms.play(id)),
            None => ms.counit(id),
        }
    };
    let realized = ms.realize();

    // Realized relations agree with the defining conditions.
    {
        let mut bad = None;
        'outer: for (r, sym) in ms.base.vocab().symbols() {
            match sym.arity {
                1 => {
                    for (i, _) in ms.plays() {
                        if realized.holds(r, &[i as Elem]) != ms.base.holds(r, &[eps(i)]) {
                            bad = Some(format!("{}({})", sym.name, ms.render(i)));
                            break 'outer;
                        }
                    }
                }
                2 => {
                    for (i, _) in ms.plays() {
                        for (j, _) in ms.plays() {
                            let direct = realized.holds(r, &[i as Elem, j as Elem]);
                            if direct != ms.rel_holds(r, &[i, j]) {
                                bad = Some(format!(
                                    "{}({},{})",
                                    sym.name,
                                    ms.render(i),
                                    ms.render(j)
                                ));
                                break 'outer;
                            }
                        }
                    }
                }
                _ => {}
            }
        }
        report.record("relation_conditions", bad.is_none(), bad);
    }

    // Counit is a pointed homomorphism.
    {
        let mut bad = None;
        if eps(0) != ms.point() {
            bad = Some(format!("point maps to {}", ms.base.elem_name(eps(0))));
        }
        'outer: for (r, sym) in ms.base.vocab().symbols() {
            for tuple in realized.tuples(r) {
                let image: Vec<Elem> = tuple.iter().map(|&i| eps(i as PlayId)).collect();
                if !ms.base.holds(r, &image) {
                    let shown: Vec<String> =
                        tuple.iter().map(|&i| ms.render(i as PlayId)).collect();
                    bad = Some(format!("{}({})", sym.name, shown.join(", ")));
                    break 'outer;
                }
            }
        }
        report.record("counit_is_homomorphism", bad.is_none(), bad);
    }

    // Coextension of the counit is the identity.
    {
        let eps_map: Vec<Elem> = (0..ms.universe_size()).map(&eps).collect();
        let co = coextension(ms, &eps_map);
        let mut bad = None;
        for (i, steps) in ms.plays() {
            let (root, images) = &co[i];
            if *root != ms.point() || images != steps {
                bad = Some(ms.render(i));
                break;
            }
        }
        report.record("coext_identity", bad.is_none(), bad);
    }

    // Kleisli equations over enumerated homomorphisms f, g : M_k A -> A.
    {
        let homs = hom::find_all_homomorphisms(&realized, &ms.base, opts.hom_limit)
            .unwrap_or_default();
        let mut bad_counit = None;
        let mut bad_compose = None;
        for f in &homs {
            let f_star = coextension(ms, f);
            for (i, _) in ms.plays() {
                let (root, images) = &f_star[i];
                let last = images.last().map(|&(_, a)| a).unwrap_or(*root);
                if last != f[i] {
                    bad_counit.get_or_insert(ms.render(i));
                }
            }
            for g in &homs {
                // g . f* as a map on play ids; f*(s) is a play of the image
                // unravelling over the same base.
                let gf: Option<Vec<Elem>> = ms
                    .plays()
                    .map(|(i, _)| {
                        let (_, images) = &f_star[i];
                        ms.play_id(images).map(|id| g[id])
                    })
                    .collect();
                let gf = match gf {
                    Some(v) => v,
                    None => continue, // image leaves this unravelling
                };
                let lhs = coextension(ms, &gf);
                let g_star = coextension(ms, g);
                for (i, _) in ms.plays() {
                    let mid = ms.play_id(&f_star[i].1).expect("checked above");
                    if lhs[i] != g_star[mid] {
                        bad_compose.get_or_insert(ms.render(i));
                    }
                }
            }
        }
        report.record("coext_counit", bad_counit.is_none(), bad_counit);
        report.record("coext_compose", bad_compose.is_none(), bad_compose);
    }

    // Comultiplication diagrams and coequalizer, pointwise.
    {
        let delta = comultiplication(ms);
        let mut bad_left = None;
        let mut bad_right = None;
        for (i, steps) in ms.plays() {
            let (root, ids) = &delta[i];
            let last = ids.last().map(|&(_, p)| p).unwrap_or(*root);
            if last != i {
                bad_left.get_or_insert(ms.render(i));
            }
            let pointwise_root = eps(*root);
            let pointwise: Vec<(RelId, Elem)> =
                ids.iter().map(|&(alpha, p)| (alpha, eps(p))).collect();
            if pointwise_root != ms.point() || &pointwise != steps {
                bad_right.get_or_insert(ms.render(i));
            }
        }
        report.record("comult_counit_left", bad_left.is_none(), bad_left);
        report.record("comult_counit_right", bad_right.is_none(), bad_right);

        let mut bad = None;
        for (i, _) in ms.plays() {
            let (root, ids) = &delta[i];
            // delta_{MA} . delta vs M(delta) . delta, as nested sequences.
            let lhs: Vec<(RelId, Vec<(RelId, PlayId)>)> = (1..=ids.len())
                .map(|l| (ids[l - 1].0, ids[..l].to_vec()))
                .collect();
            let rhs: Vec<(RelId, Vec<(RelId, PlayId)>)> = ids
                .iter()
                .map(|&(alpha, p)| (alpha, delta[p].1.clone()))
                .collect();
            let _ = root;
            if lhs != rhs {
                bad = Some(ms.render(i));
                break;
            }
        }
        report.record("comult_coassoc", bad.is_none(), bad);

        // eps . M(eps) = eps . eps_{MA} over prefix-list second-level plays.
        let mut bad = None;
        for (i, _) in ms.plays() {
            let (root, ids) = &delta[i];
            let pointwise_last = ids.last().map(|&(_, p)| eps(p)).unwrap_or(eps(*root));
            let rhs = eps(ids.last().map(|&(_, p)| p).unwrap_or(*root));
            if pointwise_last != rhs {
                bad = Some(ms.render(i));
                break;
            }
        }
        report.record("coequalizer", bad.is_none(), bad);
    }

    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::sync::Arc;
    use crate::structure::Vocabulary;

    fn pointed(n: usize, edges: &[(Elem, Elem)], point: Elem) -> Structure {
        let vocab = Arc::new(Vocabulary::new(alloc::vec![("R", 2)]).unwrap());
        let mut s = Structure::new(vocab, n);
        for &(u, v) in edges {
            s.add_tuple(0, alloc::vec![u, v]).unwrap();
        }
        s.set_point(point).unwrap();
        s
    }

    #[test]
    fn self_loop_unravels_to_a_chain() {
        let a = pointed(1, &[(0, 0)], 0);
        let ms = ModalStructure::build(&a, 2, 100).unwrap();
        assert_eq!(ms.universe_size(), 3);
        // Chain shape: each play reaches only its one-step extension.
        let realized = ms.realize();
        assert!(realized.holds(0, &[0, 1]) && realized.holds(0, &[1, 2]));
        assert!(!realized.holds(0, &[0, 2]) && !realized.holds(0, &[2, 0]));
    }

    #[test]
    fn depth_zero_is_singleton_with_unary_profile() {
        let vocab = Arc::new(Vocabulary::new(alloc::vec![("P", 1), ("R", 2)]).unwrap());
        let mut a = Structure::new(vocab, 2);
        a.add_tuple(0, alloc::vec![0]).unwrap();
        a.add_tuple(1, alloc::vec![0, 1]).unwrap();
        a.set_point(0).unwrap();
        let ms = ModalStructure::build(&a, 0, 100).unwrap();
        assert_eq!(ms.universe_size(), 1);
        let realized = ms.realize();
        assert!(realized.holds(0, &[0]));
        assert_eq!(realized.tuples(1).count(), 0);
    }

    #[test]
    fn two_step_chain_cut_at_depth_one() {
        let a = pointed(3, &[(0, 1), (1, 2)], 0);
        let ms = ModalStructure::build(&a, 1, 100).unwrap();
        assert_eq!(ms.universe_size(), 2);
    }

    #[test]
    fn counit_and_coext_identity() {
        let a = pointed(2, &[(0, 1)], 0);
        let ms = ModalStructure::build(&a, 1, 100).unwrap();
        let id = ms.play_id(&alloc::vec![(0, 1)]).unwrap();
        assert_eq!(ms.counit(id), 1);
        let eps_map: Vec<Elem> = (0..ms.universe_size()).map(|i| ms.counit(i)).collect();
        let co = coextension(&ms, &eps_map);
        for (i, steps) in ms.plays() {
            assert_eq!(co[i].0, 0);
            assert_eq!(&co[i].1, steps);
        }
    }

    #[test]
    fn simulation_examples() {
        // a with one edge vs b a two-step chain.
        let a = pointed(2, &[(0, 1)], 0);
        let b = pointed(3, &[(0, 1), (1, 2)], 0);
        assert!(simulation_preorder(&a, 0, &b, 0, 2));
        assert!(!simulation_preorder(&b, 0, &a, 0, 2));
        // Depth 0 ignores transitions.
        assert!(simulation_preorder(&b, 0, &a, 0, 0));
    }

    #[test]
    fn hom_equiv_agreement() {
        let a = pointed(1, &[(0, 0)], 0);
        let report = hom_equiv_check(&a, &a, 3, 1000).unwrap();
        assert!(report.hom_exists && report.simulates && report.agree);

        let chain = pointed(3, &[(0, 1), (1, 2)], 0);
        let edge = pointed(2, &[(0, 1)], 0);
        let report = hom_equiv_check(&chain, &edge, 2, 1000).unwrap();
        assert!(!report.hom_exists && !report.simulates && report.agree);
    }

    #[test]
    fn pebble2_encoding() {
        let a = pointed(3, &[(0, 1), (1, 2)], 0);
        assert_eq!(to_pebble2_play(0, &alloc::vec![]), alloc::vec![(1, 0)]);
        assert_eq!(
            to_pebble2_play(0, &alloc::vec![(0, 1), (0, 2)]),
            alloc::vec![(1, 0), (2, 1), (1, 2)]
        );
        let ms = ModalStructure::build(&a, 2, 100).unwrap();
        let pbs = pebble::PebbleStructure::build(&a, 2, 3, 10_000).unwrap();
        let t = modal_to_pebble2(&ms, &pbs).unwrap();
        // Image plays satisfy the pebble relation conditions whenever the
        // source plays are related.
        for (r, _) in a.vocab().symbols() {
            for (i, _) in ms.plays() {
                for (j, _) in ms.plays() {
                    if ms.rel_holds(r, &[i, j]) {
                        assert!(pbs.rel_holds(r, &[t[i], t[j]]));
                    }
                }
            }
        }
        // Distinguished element goes to [(1,a)].
        assert_eq!(pbs.play(t[0]), &[(1, 0)]);
    }

    #[test]
    fn omega_approx_stabilizes_on_acyclic() {
        let a = pointed(3, &[(0, 1), (1, 2)], 0);
        let approx = omega_approx(&a, 5, 1000).unwrap();
        assert_eq!(approx.stabilized_at, Some(2));

        let looped = pointed(1, &[(0, 0)], 0);
        let approx = omega_approx(&looped, 5, 1000).unwrap();
        assert_eq!(approx.stabilized_at, None);
        assert_eq!(approx.stage.universe_size(), 6);
    }

    #[test]
    fn inclusion_preserves_point_and_counit() {
        let a = pointed(3, &[(0, 1), (1, 2)], 0);
        let m1 = ModalStructure::build(&a, 1, 100).unwrap();
        let m2 = ModalStructure::build(&a, 2, 100).unwrap();
        let inc = inclusion(&m1, &m2).unwrap();
        assert_eq!(inc[0], 0);
        for (i, _) in m1.plays() {
            assert_eq!(m2.counit(inc[i]), m1.counit(i));
        }
    }

    #[test]
    fn laws_pass_and_mutant_caught() {
        let a = pointed(2, &[(0, 1), (1, 0)], 0);
        let ms = ModalStructure::build(&a, 2, 100).unwrap();
        let report = check_comonad_laws(&ms, &LawOptions::default());
        assert!(report.all_pass(), "failures: {:?}", report.failures().collect::<Vec<_>>());

        let first = |point: Elem, _steps: &Steps| point;
        let opts = LawOptions {
            counit_override: Some(&first),
            ..LawOptions::default()
        };
        let report = check_comonad_laws(&ms, &opts);
        assert!(!report.all_pass());
    }
}
