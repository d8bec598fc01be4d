//! The round-indexed comonad on plays.
//!
//! For a structure with universe `A` and bound `k`, the carrier is `A^{<=k}`,
//! the non-empty sequences of length at most `k`. A relation holds on a tuple
//! of plays iff the plays are pairwise comparable in the prefix order and the
//! base relation holds on their last elements. The counit takes a play to its
//! last element; coextension replays a map prefix by prefix.
//!
//! Universes are materialized eagerly under an explicit budget; the relation
//! predicate [`EfStructure::rel_holds`] is independent of materialization and
//! is what coalgebra validation uses for larger parameters.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

use crate::structure::{Elem, RelId, Structure};
use crate::{util, LawReport};

/// Index of a play in the enumeration of `A^{<=k}`: all plays of length 1
/// first, then length 2, and so on, lexicographically within a block.
pub type PlayId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EfError {
    #[error("universe of size {required} exceeds budget {budget}")]
    BudgetExceeded { required: u128, budget: usize },
    #[error("resource bound k must be positive")]
    ZeroK,
    #[error("inclusion requires k <= l, got k={k}, l={l}")]
    BadInclusion { k: usize, l: usize },
}

/// Number of plays `sum_{j=1..k} n^j`, or `None` on overflow.
pub fn universe_count(n: usize, k: usize) -> Option<u128> {
    let n = n as u128;
    let mut total: u128 = 0;
    let mut power: u128 = 1;
    for _ in 0..k {
        power = power.checked_mul(n)?;
        total = total.checked_add(power)?;
    }
    Some(total)
}

/// The materialized comonad structure over a base structure.
#[derive(Debug, Clone)]
pub struct EfStructure {
    base: Structure,
    k: usize,
    plays: Vec<Vec<Elem>>,
}

impl EfStructure {
    pub fn build(base: &Structure, k: usize, budget: usize) -> Result<Self, EfError> {
        if k == 0 {
            return Err(EfError::ZeroK);
        }
        let n = base.size();
        let required = universe_count(n, k).ok_or(EfError::BudgetExceeded {
            required: u128::MAX,
            budget,
        })?;
        if required > budget as u128 {
            return Err(EfError::BudgetExceeded { required, budget });
        }
        let mut plays = Vec::with_capacity(required as usize);
        let mut current: Vec<Vec<Elem>> = (0..n as Elem).map(|a| alloc::vec![a]).collect();
        for _ in 0..k {
            if current.is_empty() {
                break;
            }
            plays.extend(current.iter().cloned());
            let mut next = Vec::with_capacity(current.len() * n);
            for s in &current {
                for a in 0..n as Elem {
                    let mut t = s.clone();
                    t.push(a);
                    next.push(t);
                }
            }
            current = next;
        }
        Ok(EfStructure {
            base: base.clone(),
            k,
            plays,
        })
    }

    pub fn base(&self) -> &Structure {
        &self.base
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn universe_size(&self) -> usize {
        self.plays.len()
    }

    pub fn play(&self, id: PlayId) -> &[Elem] {
        &self.plays[id]
    }

    pub fn plays(&self) -> impl Iterator<Item = (PlayId, &[Elem])> {
        self.plays.iter().enumerate().map(|(i, p)| (i, p.as_slice()))
    }

    /// Identifier of a sequence, by block arithmetic: the length-`j` block
    /// starts at `sum_{i<j} n^i` and is ordered lexicographically.
    pub fn play_id(&self, seq: &[Elem]) -> Option<PlayId> {
        let n = self.base.size();
        if seq.is_empty() || seq.len() > self.k || n == 0 {
            return None;
        }
        let mut index = 0usize;
        for &a in seq {
            if (a as usize) >= n {
                return None;
            }
            index = index * n + a as usize;
        }
        let mut begin = 0usize;
        let mut block = n;
        for _ in 1..seq.len() {
            begin += block;
            block *= n;
        }
        Some(begin + index)
    }

    pub fn counit(&self, id: PlayId) -> Elem {
        *self.plays[id].last().expect("plays are non-empty")
    }

    /// Identifier of the length-`len` prefix.
    pub fn prefix_id(&self, id: PlayId, len: usize) -> PlayId {
        self.play_id(&self.plays[id][..len]).expect("prefix is a play")
    }

    /// The defining relation predicate: pairwise prefix-comparable and the
    /// base relation holds on the last elements.
    pub fn rel_holds(&self, r: RelId, ids: &[PlayId]) -> bool {
        let longest = match ids.iter().max_by_key(|&&i| self.plays[i].len()) {
            Some(&m) => &self.plays[m],
            None => return false,
        };
        if !ids.iter().all(|&i| longest.starts_with(&self.plays[i])) {
            return false;
        }
        let lasts: Vec<Elem> = ids.iter().map(|&i| self.counit(i)).collect();
        self.base.holds(r, &lasts)
    }

    /// Play rendering `[a;b;c]` with base element names.
    pub fn render(&self, id: PlayId) -> String {
        render_seq(&self.base, &self.plays[id])
    }

    /// Materializes the full relational structure on plays. Intended for
    /// small instances; the relation sets grow as `sum_t len(t)^arity`.
    pub fn realize(&self, budget: usize) -> Result<Structure, EfError> {
        if self.plays.len() > budget {
            return Err(EfError::BudgetExceeded {
                required: self.plays.len() as u128,
                budget,
            });
        }
        let mut out = Structure::new(self.base.vocab().clone(), self.plays.len());
        out.set_names(self.plays.iter().map(|p| render_seq(&self.base, p)).collect());
        for (r, sym) in self.base.vocab().symbols() {
            let m = sym.arity;
            // Every pairwise-comparable tuple consists of prefixes of its
            // longest member, so enumerating per top play covers them all.
            for (_, top) in self.plays() {
                let prefix_ids: Vec<PlayId> = (1..=top.len())
                    .map(|l| self.play_id(&top[..l]).expect("prefix"))
                    .collect();
                let mut tuple = alloc::vec![0usize; m];
                enumerate_tuples(&prefix_ids, &mut tuple, 0, &mut |ids| {
                    if self.rel_holds(r, ids) {
                        out.add_tuple_unchecked(r, ids.iter().map(|&i| i as Elem).collect());
                    }
                });
            }
        }
        Ok(out)
    }
}

pub(crate) fn render_seq(base: &Structure, seq: &[Elem]) -> String {
    let parts: Vec<String> = seq.iter().map(|&a| base.elem_name(a)).collect();
    format!("[{}]", parts.join(";"))
}

fn enumerate_tuples(
    pool: &[PlayId],
    tuple: &mut [PlayId],
    pos: usize,
    f: &mut impl FnMut(&[PlayId]),
) {
    if pos == tuple.len() {
        f(tuple);
        return;
    }
    for &p in pool {
        tuple[pos] = p;
        enumerate_tuples(pool, tuple, pos + 1, f);
    }
}

/// Kleisli coextension: `f* [a_1..a_j] = [f[a_1], f[a_1,a_2], ..., f[a_1..a_j]]`.
///
/// `f` assigns an element of the codomain to every play id; the result maps
/// each play id to its image sequence.
pub fn coextension(efs: &EfStructure, f: &[Elem]) -> Vec<Vec<Elem>> {
    efs.plays()
        .map(|(_, seq)| {
            (1..=seq.len())
                .map(|l| f[efs.play_id(&seq[..l]).expect("prefix")])
                .collect()
        })
        .collect()
}

/// Comultiplication: the sequence of prefixes of each play, as play ids.
pub fn comultiplication(efs: &EfStructure) -> Vec<Vec<PlayId>> {
    efs.plays()
        .map(|(_, seq)| {
            (1..=seq.len())
                .map(|l| efs.play_id(&seq[..l]).expect("prefix"))
                .collect()
        })
        .collect()
}

/// Functor action on a homomorphism `h : A -> B`: pointwise on sequences.
/// Returns the image play id in `target` for every play id of `source`.
pub fn functor_action(source: &EfStructure, target: &EfStructure, h: &[Elem]) -> Vec<PlayId> {
    source
        .plays()
        .map(|(_, seq)| {
            let image: Vec<Elem> = seq.iter().map(|&a| h[a as usize]).collect();
            target.play_id(&image).expect("image play")
        })
        .collect()
}

/// Inclusion of `k`-bounded plays into `l`-bounded plays, `k <= l`:
/// identity on sequences, re-indexed.
pub fn inclusion(small: &EfStructure, large: &EfStructure) -> Result<Vec<PlayId>, EfError> {
    if small.k() > large.k() {
        return Err(EfError::BadInclusion {
            k: small.k(),
            l: large.k(),
        });
    }
    Ok(small
        .plays()
        .map(|(_, seq)| large.play_id(seq).expect("shorter play"))
        .collect())
}

/// Is `f` an I-morphism: comparable plays with equal last elements get equal
/// images? Returns the first violating pair when not.
pub fn i_morphism_witness(efs: &EfStructure, f: &[Elem]) -> Option<(PlayId, PlayId)> {
    for (s_id, s) in efs.plays() {
        for l in 1..s.len() {
            let p_id = efs.play_id(&s[..l]).expect("prefix");
            if s[l - 1] == s[s.len() - 1] && f[p_id] != f[s_id] {
                return Some((p_id, s_id));
            }
        }
    }
    None
}

pub fn is_i_morphism(efs: &EfStructure, f: &[Elem]) -> bool {
    i_morphism_witness(efs, f).is_none()
}

/// The equivalent characterization over the identity-lifted vocabulary:
/// `f` preserves the lifted identity relation.
pub fn preserves_lifted_identity(efs: &EfStructure, f: &[Elem], target: &Structure) -> bool {
    let id_rel = match efs.base.vocab().rel(crate::structure::IDENTITY_SYMBOL) {
        Some(r) => r,
        None => return true,
    };
    for (s_id, _) in efs.plays() {
        for (t_id, _) in efs.plays() {
            if efs.rel_holds(id_rel, &[s_id, t_id])
                && !target.holds(id_rel, &[f[s_id], f[t_id]])
            {
                return false;
            }
        }
    }
    true
}

/// Options for the law battery; overrides exist to seed faults in tests.
pub struct LawOptions<'a> {
    pub seed: u64,
    /// Number of sampled functions per Kleisli equation.
    pub samples: usize,
    pub counit_override: Option<&'a dyn Fn(&[Elem]) -> Elem>,
    /// Replaces the relation predicate used when checking the realized
    /// relations against the defining conditions.
    pub relation_override: Option<&'a dyn Fn(&EfStructure, RelId, &[PlayId]) -> bool>,
}

impl Default for LawOptions<'_> {
    fn default() -> Self {
        LawOptions {
            seed: 0,
            samples: 8,
            counit_override: None,
            relation_override: None,
        }
    }
}

/// Verifies the Kleisli-form equations, the counit/coassociativity diagrams,
/// and the coequalizer identity, pointwise over all plays, with functions
/// sampled deterministically from the seed.
pub fn check_comonad_laws(efs: &EfStructure, opts: &LawOptions) -> LawReport {
    let mut report = LawReport::default();
    let n_plays = efs.universe_size();
    let base_n = efs.base.size();
    let eps = |seq: &[Elem]| -> Elem {
        match opts.counit_override {
            Some(f) => f(seq),
            None => *seq.last().expect("non-empty"),
        }
    };
    let rel_ok = |r: RelId, ids: &[PlayId]| -> bool {
        match opts.relation_override {
            Some(f) => f(efs, r, ids),
            None => efs.rel_holds(r, ids),
        }
    };

    // Realized relations agree with the defining conditions.
    {
        let mut pass = true;
        let mut witness = None;
        'outer: for (r, sym) in efs.base.vocab().symbols() {
            for (_, top) in efs.plays() {
                let prefix_ids: Vec<PlayId> = (1..=top.len())
                    .map(|l| efs.play_id(&top[..l]).expect("prefix"))
                    .collect();
                let mut tuple = alloc::vec![0usize; sym.arity];
                let mut bad: Option<Vec<PlayId>> = None;
                enumerate_tuples(&prefix_ids, &mut tuple, 0, &mut |ids| {
                    if bad.is_none() && rel_ok(r, ids) != efs.rel_holds(r, ids) {
                        bad = Some(ids.to_vec());
                    }
                });
                if let Some(ids) = bad {
                    pass = false;
                    let shown: Vec<String> = ids.iter().map(|&i| efs.render(i)).collect();
                    witness = Some(format!("{}({})", sym.name, shown.join(", ")));
                    break 'outer;
                }
            }
        }
        report.record("relation_conditions", pass, witness);
    }

    // Counit is a homomorphism.
    {
        let mut pass = true;
        let mut witness = None;
        'outer: for (r, sym) in efs.base.vocab().symbols() {
            for (_, top) in efs.plays() {
                let prefix_ids: Vec<PlayId> = (1..=top.len())
                    .map(|l| efs.play_id(&top[..l]).expect("prefix"))
                    .collect();
                let mut tuple = alloc::vec![0usize; sym.arity];
                let mut bad: Option<Vec<PlayId>> = None;
                enumerate_tuples(&prefix_ids, &mut tuple, 0, &mut |ids| {
                    if bad.is_none() && rel_ok(r, ids) {
                        let image: Vec<Elem> =
                            ids.iter().map(|&i| eps(efs.play(i))).collect();
                        if !efs.base.holds(r, &image) {
                            bad = Some(ids.to_vec());
                        }
                    }
                });
                if let Some(ids) = bad {
                    pass = false;
                    let shown: Vec<String> = ids.iter().map(|&i| efs.render(i)).collect();
                    witness = Some(format!("{}({})", sym.name, shown.join(", ")));
                    break 'outer;
                }
            }
        }
        report.record("counit_is_homomorphism", pass, witness);
    }

    // Coextension of the counit is the identity.
    {
        let eps_map: Vec<Elem> = (0..n_plays).map(|i| eps(efs.play(i))).collect();
        let co = coextension(efs, &eps_map);
        let bad = efs.plays().find(|&(i, seq)| co[i] != seq);
        report.record(
            "coext_identity",
            bad.is_none(),
            bad.map(|(i, _)| efs.render(i)),
        );
    }

    if base_n > 0 {
        // eps_B . f* = f for sampled f : E_k A -> A.
        let mut pass = true;
        let mut witness = None;
        'eq2: for c in 0..opts.samples as u64 {
            let f = util::sampled_map(opts.seed, c, n_plays, base_n);
            let co = coextension(efs, &f);
            for (i, _) in efs.plays() {
                if eps(&co[i]) != f[i] {
                    pass = false;
                    witness = Some(format!("sample {c} at {}", efs.render(i)));
                    break 'eq2;
                }
            }
        }
        report.record("coext_counit", pass, witness);

        // (g . f*)* = g* . f* for sampled f, g : E_k A -> A.
        let mut pass = true;
        let mut witness = None;
        'eq3: for c in 0..opts.samples as u64 {
            let f = util::sampled_map(opts.seed, 2 * c + 101, n_plays, base_n);
            let g = util::sampled_map(opts.seed, 2 * c + 102, n_plays, base_n);
            let f_star = coextension(efs, &f);
            // g . f* as a map on play ids
            let gf: Vec<Elem> = (0..n_plays)
                .map(|i| g[efs.play_id(&f_star[i]).expect("play")])
                .collect();
            let lhs = coextension(efs, &gf);
            let g_star = coextension(efs, &g);
            for (i, _) in efs.plays() {
                let rhs: &Vec<Elem> = &g_star[efs.play_id(&f_star[i]).expect("play")];
                if &lhs[i] != rhs {
                    pass = false;
                    witness = Some(format!("sample {c} at {}", efs.render(i)));
                    break 'eq3;
                }
            }
        }
        report.record("coext_compose", pass, witness);
    }

    // Comultiplication diagrams, pointwise: eps_{GA} . delta = id and
    // G(eps) . delta = id.
    {
        let delta = comultiplication(efs);
        let mut bad_left = None;
        let mut bad_right = None;
        for (i, seq) in efs.plays() {
            let prefixes = &delta[i];
            if *prefixes.last().expect("non-empty") != i {
                bad_left.get_or_insert(i);
            }
            let pointwise: Vec<Elem> = prefixes.iter().map(|&p| eps(efs.play(p))).collect();
            if pointwise != seq {
                bad_right.get_or_insert(i);
            }
        }
        report.record(
            "comult_counit_left",
            bad_left.is_none(),
            bad_left.map(|i| efs.render(i)),
        );
        report.record(
            "comult_counit_right",
            bad_right.is_none(),
            bad_right.map(|i| efs.render(i)),
        );

        // Coassociativity: delta_{GA}(delta s) = G(delta)(delta s), compared
        // as nested prefix lists.
        let mut bad = None;
        for (i, _) in efs.plays() {
            let ds = &delta[i];
            let lhs: Vec<Vec<PlayId>> = (1..=ds.len()).map(|l| ds[..l].to_vec()).collect();
            let rhs: Vec<Vec<PlayId>> = ds.iter().map(|&p| delta[p].clone()).collect();
            if lhs != rhs {
                bad = Some(i);
                break;
            }
        }
        report.record("comult_coassoc", bad.is_none(), bad.map(|i| efs.render(i)));

        // Coequalizer identity: eps . G(eps) = eps . eps_{GA} on E^2, with
        // second-level plays sampled as prefix lists plus pseudo-random
        // sequences of play ids.
        let mut second_level: Vec<Vec<PlayId>> = delta.clone();
        for c in 0..opts.samples as u64 {
            if n_plays == 0 {
                break;
            }
            let len = 1 + (util::mix(opts.seed ^ c) % efs.k() as u64) as usize;
            let seq: Vec<PlayId> = (0..len)
                .map(|j| (util::mix(opts.seed ^ c ^ (j as u64) << 17) % n_plays as u64) as usize)
                .collect();
            second_level.push(seq);
        }
        let mut bad = None;
        for s2 in &second_level {
            let pointwise: Vec<Elem> = s2.iter().map(|&p| eps(efs.play(p))).collect();
            let lhs = *pointwise.last().expect("non-empty");
            let rhs = eps(efs.play(*s2.last().expect("non-empty")));
            if lhs != rhs {
                bad = Some(s2.clone());
                break;
            }
        }
        report.record(
            "coequalizer",
            bad.is_none(),
            bad.map(|s2| {
                let parts: Vec<String> = s2.iter().map(|&p| efs.render(p)).collect();
                format!("[{}]", parts.join(";"))
            }),
        );
    }

    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::is_homomorphism;

    #[test]
    fn universe_sizes() {
        assert_eq!(universe_count(3, 2), Some(12));
        assert_eq!(universe_count(2, 3), Some(14));
        let a = Structure::clique(3);
        let efs = EfStructure::build(&a, 2, 1000).unwrap();
        assert_eq!(efs.universe_size(), 12);
    }

    #[test]
    fn budget_errors_report_required_size() {
        let a = Structure::clique(3);
        match EfStructure::build(&a, 2, 5) {
            Err(EfError::BudgetExceeded { required, budget }) => {
                assert_eq!(required, 12);
                assert_eq!(budget, 5);
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn play_ids_round_trip() {
        let a = Structure::clique(3);
        let efs = EfStructure::build(&a, 3, 1000).unwrap();
        for (i, seq) in efs.plays() {
            assert_eq!(efs.play_id(seq), Some(i));
        }
    }

    #[test]
    fn relation_comparability() {
        let k2 = Structure::clique(2);
        let efs = EfStructure::build(&k2, 2, 100).unwrap();
        let s0 = efs.play_id(&[0]).unwrap();
        let s01 = efs.play_id(&[0, 1]).unwrap();
        let s1 = efs.play_id(&[1]).unwrap();
        assert!(efs.rel_holds(0, &[s0, s01]));
        assert!(!efs.rel_holds(0, &[s0, s1])); // incomparable
    }

    #[test]
    fn k1_on_loop_free_clique_has_empty_relations() {
        let k3 = Structure::clique(3);
        let efs = EfStructure::build(&k3, 1, 100).unwrap();
        let realized = efs.realize(100).unwrap();
        assert_eq!(realized.tuples(0).count(), 0);
    }

    #[test]
    fn counit_examples_and_homomorphism() {
        let k2 = Structure::clique(2);
        let efs = EfStructure::build(&k2, 3, 100).unwrap();
        let id = efs.play_id(&[0, 1, 0]).unwrap();
        assert_eq!(efs.counit(id), 0);

        let realized = efs.realize(100).unwrap();
        let eps: Vec<Elem> = (0..efs.universe_size()).map(|i| efs.counit(i)).collect();
        assert!(is_homomorphism(&eps, &realized, &k2).unwrap());
    }

    #[test]
    fn coextension_of_counit_is_identity_and_preserves_length() {
        let k2 = Structure::clique(2);
        let efs = EfStructure::build(&k2, 3, 100).unwrap();
        let eps: Vec<Elem> = (0..efs.universe_size()).map(|i| efs.counit(i)).collect();
        let co = coextension(&efs, &eps);
        for (i, seq) in efs.plays() {
            assert_eq!(co[i], seq);
        }
        // Constant map: the image is the constant sequence of matching length.
        let constant: Vec<Elem> = alloc::vec![1; efs.universe_size()];
        let co = coextension(&efs, &constant);
        for (i, seq) in efs.plays() {
            assert_eq!(co[i].len(), seq.len());
            assert!(co[i].iter().all(|&b| b == 1));
        }
    }

    #[test]
    fn comultiplication_unfolds_prefixes() {
        let k2 = Structure::clique(2);
        let efs = EfStructure::build(&k2, 2, 100).unwrap();
        let delta = comultiplication(&efs);
        let s01 = efs.play_id(&[0, 1]).unwrap();
        let s0 = efs.play_id(&[0]).unwrap();
        assert_eq!(delta[s01], alloc::vec![s0, s01]);
        assert_eq!(delta[s0], alloc::vec![s0]);
    }

    #[test]
    fn functor_laws_on_small_instances() {
        let k3 = Structure::clique(3);
        let efs = EfStructure::build(&k3, 2, 100).unwrap();
        // identity
        let id_map: Vec<Elem> = (0..3).collect();
        let act = functor_action(&efs, &efs, &id_map);
        assert!(act.iter().enumerate().all(|(i, &j)| i == j));
        // composition E(g . h) = E(g) . E(h) for maps on K_3
        let h: Vec<Elem> = alloc::vec![1, 2, 0];
        let g: Vec<Elem> = alloc::vec![2, 0, 1];
        let gh: Vec<Elem> = h.iter().map(|&x| g[x as usize]).collect();
        let lhs = functor_action(&efs, &efs, &gh);
        let eh = functor_action(&efs, &efs, &h);
        let eg = functor_action(&efs, &efs, &g);
        let rhs: Vec<PlayId> = (0..efs.universe_size()).map(|i| eg[eh[i]]).collect();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn inclusions_compose_and_preserve_counit() {
        let k2 = Structure::clique(2);
        let e1 = EfStructure::build(&k2, 1, 100).unwrap();
        let e2 = EfStructure::build(&k2, 2, 100).unwrap();
        let e3 = EfStructure::build(&k2, 3, 100).unwrap();
        let i12 = inclusion(&e1, &e2).unwrap();
        let i23 = inclusion(&e2, &e3).unwrap();
        let i13 = inclusion(&e1, &e3).unwrap();
        for (i, _) in e1.plays() {
            assert_eq!(i23[i12[i]], i13[i]);
            assert_eq!(e3.counit(i13[i]), e1.counit(i));
        }
        assert!(inclusion(&e2, &e1).is_err());
        let i22 = inclusion(&e2, &e2).unwrap();
        assert!(i22.iter().enumerate().all(|(i, &j)| i == j));
    }

    #[test]
    fn laws_pass_on_k2() {
        let k2 = Structure::clique(2);
        let efs = EfStructure::build(&k2, 2, 100).unwrap();
        let report = check_comonad_laws(&efs, &LawOptions::default());
        assert!(report.all_pass(), "failures: {:?}", report.failures().collect::<Vec<_>>());
    }

    #[test]
    fn mutated_counit_is_caught() {
        let k2 = Structure::clique(2);
        let efs = EfStructure::build(&k2, 2, 100).unwrap();
        let first = |seq: &[Elem]| seq[0];
        let opts = LawOptions {
            counit_override: Some(&first),
            ..LawOptions::default()
        };
        let report = check_comonad_laws(&efs, &opts);
        assert!(!report.all_pass());
        let failing: Vec<_> = report.failures().map(|c| c.name).collect();
        assert!(failing.contains(&"coext_identity") || failing.contains(&"counit_is_homomorphism"));
        assert!(report.failures().any(|c| c.witness.is_some()));
    }

    #[test]
    fn i_morphism_counit_and_violation() {
        let k2 = Structure::clique(2).lift_identity().unwrap();
        let efs = EfStructure::build(&k2, 3, 100).unwrap();
        let eps: Vec<Elem> = (0..efs.universe_size()).map(|i| efs.counit(i)).collect();
        assert!(is_i_morphism(&efs, &eps));

        // f([0]) != f([0,1,0]) violates the condition.
        let mut f = eps.clone();
        let s0 = efs.play_id(&[0]).unwrap();
        let s010 = efs.play_id(&[0, 1, 0]).unwrap();
        f[s0] = 0;
        f[s010] = 1;
        let witness = i_morphism_witness(&efs, &f);
        assert!(witness.is_some());
    }

    #[test]
    fn i_morphism_agrees_with_lifted_identity_preservation() {
        let base = Structure::clique(2).lift_identity().unwrap();
        let efs = EfStructure::build(&base, 3, 100).unwrap();
        for c in 0..40u64 {
            let f = util::sampled_map(7, c, efs.universe_size(), base.size());
            assert_eq!(
                is_i_morphism(&efs, &f),
                preserves_lifted_identity(&efs, &f, &base),
                "characterizations disagree on sample {c}"
            );
        }
    }
}
