//! The pebble-indexed comonad on plays.
//!
//! Plays are non-empty sequences of moves `(p, a)` with pebble index
//! `p` in `1..=k`. The full carrier is infinite; this module materializes the
//! truncation to plays of length at most `n`, which is closed under all the
//! structure maps (they preserve play length). Questions about morphism
//! existence out of the full carrier are never answered here — the game
//! fixpoints in [`crate::hom`] are authoritative for those.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

use crate::structure::{Elem, RelId, Structure};
use crate::{ef, util, LawReport};

pub type PlayId = usize;

/// A single move: pebble index (1-based) and the element it lands on.
pub type Move = (u32, Elem);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PebbleError {
    #[error("universe of size {required} exceeds budget {budget}")]
    BudgetExceeded { required: u128, budget: usize },
    #[error("pebble count k must be positive")]
    ZeroK,
    #[error("length bound n must be positive")]
    ZeroLen,
    #[error("play length {len} exceeds the bound {bound}")]
    LengthExceeded { len: usize, bound: usize },
}

/// Number of plays `sum_{j=1..n} (k*|A|)^j`, or `None` on overflow.
pub fn universe_count(base_size: usize, k: usize, n: usize) -> Option<u128> {
    let b = (k as u128).checked_mul(base_size as u128)?;
    let mut total: u128 = 0;
    let mut power: u128 = 1;
    for _ in 0..n {
        power = power.checked_mul(b)?;
        total = total.checked_add(power)?;
    }
    Some(total)
}

/// The length-bounded materialization of the pebbling comonad.
#[derive(Debug, Clone)]
pub struct PebbleStructure {
    base: Structure,
    k: usize,
    n: usize,
    plays: Vec<Vec<Move>>,
}

impl PebbleStructure {
    pub fn build(base: &Structure, k: usize, n: usize, budget: usize) -> Result<Self, PebbleError> {
        if k == 0 {
            return Err(PebbleError::ZeroK);
        }
        if n == 0 {
            return Err(PebbleError::ZeroLen);
        }
        let required = universe_count(base.size(), k, n).ok_or(PebbleError::BudgetExceeded {
            required: u128::MAX,
            budget,
        })?;
        if required > budget as u128 {
            return Err(PebbleError::BudgetExceeded { required, budget });
        }
        let moves: Vec<Move> = (1..=k as u32)
            .flat_map(|p| (0..base.size() as Elem).map(move |a| (p, a)))
            .collect();
        let mut plays = Vec::with_capacity(required as usize);
        let mut current: Vec<Vec<Move>> = moves.iter().map(|&m| alloc::vec![m]).collect();
        for _ in 0..n {
            if current.is_empty() {
                break;
            }
            plays.extend(current.iter().cloned());
            let mut next = Vec::with_capacity(current.len() * moves.len());
            for s in &current {
                for &m in &moves {
                    let mut t = s.clone();
                    t.push(m);
                    next.push(t);
                }
            }
            current = next;
        }
        Ok(PebbleStructure {
            base: base.clone(),
            k,
            n,
            plays,
        })
    }

    pub fn base(&self) -> &Structure {
        &self.base
    }

    pub fn pebbles(&self) -> usize {
        self.k
    }

    pub fn length_bound(&self) -> usize {
        self.n
    }

    pub fn universe_size(&self) -> usize {
        self.plays.len()
    }

    pub fn play(&self, id: PlayId) -> &[Move] {
        &self.plays[id]
    }

    pub fn plays(&self) -> impl Iterator<Item = (PlayId, &[Move])> {
        self.plays.iter().enumerate().map(|(i, p)| (i, p.as_slice()))
    }

    pub fn play_id(&self, seq: &[Move]) -> Option<PlayId> {
        let width = self.k * self.base.size();
        if seq.is_empty() || seq.len() > self.n || width == 0 {
            return None;
        }
        let mut index = 0usize;
        for &(p, a) in seq {
            if p == 0 || p as usize > self.k || (a as usize) >= self.base.size() {
                return None;
            }
            let digit = (p as usize - 1) * self.base.size() + a as usize;
            index = index * width + digit;
        }
        let mut begin = 0usize;
        let mut block = width;
        for _ in 1..seq.len() {
            begin += block;
            block *= width;
        }
        Some(begin + index)
    }

    pub fn counit(&self, id: PlayId) -> Elem {
        self.plays[id].last().expect("plays are non-empty").1
    }

    pub fn last_pebble(&self, id: PlayId) -> u32 {
        self.plays[id].last().expect("plays are non-empty").0
    }

    /// The element currently pinned by pebble `p`, if `p` occurs in the play.
    pub fn current_placing(&self, id: PlayId, p: u32) -> Option<Elem> {
        self.plays[id].iter().rev().find(|&&(q, _)| q == p).map(|&(_, a)| a)
    }

    /// The defining relation predicate: (1) pairwise prefix-comparable,
    /// (2) the last pebble of each play is not re-placed in its suffix inside
    /// any longer play of the tuple, (3) the base relation holds on the last
    /// elements.
    pub fn rel_holds(&self, r: RelId, ids: &[PlayId]) -> bool {
        self.rel_holds_conditions(r, ids, true)
    }

    pub(crate) fn rel_holds_conditions(&self, r: RelId, ids: &[PlayId], condition2: bool) -> bool {
        let longest = match ids.iter().max_by_key(|&&i| self.plays[i].len()) {
            Some(&m) => &self.plays[m],
            None => return false,
        };
        if !ids.iter().all(|&i| longest.starts_with(&self.plays[i])) {
            return false;
        }
        if condition2 {
            // The suffix test runs on the actual suffix of s_i in s_j, for
            // every comparable ordered pair in the tuple.
            for &i in ids {
                let si = &self.plays[i];
                let pi = si.last().expect("non-empty").0;
                for &j in ids {
                    let sj = &self.plays[j];
                    if sj.len() >= si.len()
                        && sj.starts_with(si)
                        && sj[si.len()..].iter().any(|&(q, _)| q == pi)
                    {
                        return false;
                    }
                }
            }
        }
        let lasts: Vec<Elem> = ids.iter().map(|&i| self.counit(i)).collect();
        self.base.holds(r, &lasts)
    }

    /// Play rendering `[(p,a);(q,b)]` with base element names.
    pub fn render(&self, id: PlayId) -> String {
        render_moves(&self.base, &self.plays[id])
    }

    /// Materializes the truncation as a relational structure.
    pub fn realize(&self, budget: usize) -> Result<Structure, PebbleError> {
        self.realize_conditions(budget, true)
    }

    /// As [`PebbleStructure::realize`], optionally skipping condition (2);
    /// the skip exists only to seed faults against the law battery.
    pub fn realize_conditions(&self, budget: usize, condition2: bool) -> Result<Structure, PebbleError> {
        if self.plays.len() > budget {
            return Err(PebbleError::BudgetExceeded {
                required: self.plays.len() as u128,
                budget,
            });
        }
        let mut out = Structure::new(self.base.vocab().clone(), self.plays.len());
        out.set_names(self.plays.iter().map(|p| render_moves(&self.base, p)).collect());
        for (r, sym) in self.base.vocab().symbols() {
            for (_, top) in self.plays() {
                let prefix_ids: Vec<PlayId> = (1..=top.len())
                    .map(|l| self.play_id(&top[..l]).expect("prefix"))
                    .collect();
                let mut tuple = alloc::vec![0usize; sym.arity];
                enumerate_tuples(&prefix_ids, &mut tuple, 0, &mut |ids| {
                    if self.rel_holds_conditions(r, ids, condition2) {
                        out.add_tuple_unchecked(r, ids.iter().map(|&i| i as Elem).collect());
                    }
                });
            }
        }
        Ok(out)
    }
}

pub(crate) fn render_moves(base: &Structure, seq: &[Move]) -> String {
    let parts: Vec<String> = seq
        .iter()
        .map(|&(p, a)| format!("({},{})", p, base.elem_name(a)))
        .collect();
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

/// Kleisli coextension: pebble indices are preserved, elements are replayed
/// prefix by prefix through `f`.
pub fn coextension(pbs: &PebbleStructure, f: &[Elem]) -> Vec<Vec<Move>> {
    pbs.plays()
        .map(|(_, seq)| {
            (1..=seq.len())
                .map(|l| (seq[l - 1].0, f[pbs.play_id(&seq[..l]).expect("prefix")]))
                .collect()
        })
        .collect()
}

/// Comultiplication: move `i` of `delta(s)` is `(p_i, prefix_i(s))`.
pub fn comultiplication(pbs: &PebbleStructure) -> Vec<Vec<(u32, PlayId)>> {
    pbs.plays()
        .map(|(_, seq)| {
            (1..=seq.len())
                .map(|l| (seq[l - 1].0, pbs.play_id(&seq[..l]).expect("prefix")))
                .collect()
        })
        .collect()
}

/// The comonad morphism from round-indexed plays: `[a_1..a_j]` becomes
/// `[(1,a_1),...,(j,a_j)]`.
pub fn from_ef_play(seq: &[Elem]) -> Vec<Move> {
    seq.iter()
        .enumerate()
        .map(|(i, &a)| (i as u32 + 1, a))
        .collect()
}

/// The morphism on whole carriers; errors when some play is too long for the
/// target truncation.
pub fn ef_to_pebble(efs: &ef::EfStructure, pbs: &PebbleStructure) -> Result<Vec<PlayId>, PebbleError> {
    let bound = pbs.pebbles().min(pbs.length_bound());
    efs.plays()
        .map(|(_, seq)| {
            if seq.len() > bound {
                return Err(PebbleError::LengthExceeded {
                    len: seq.len(),
                    bound,
                });
            }
            Ok(pbs.play_id(&from_ef_play(seq)).expect("within bounds"))
        })
        .collect()
}

/// Is `f` an I-morphism over the identity-lifted vocabulary: plays related by
/// the lifted identity relation get equal images?
pub fn is_i_morphism(pbs: &PebbleStructure, f: &[Elem]) -> bool {
    i_morphism_witness(pbs, f).is_none()
}

pub fn i_morphism_witness(pbs: &PebbleStructure, f: &[Elem]) -> Option<(PlayId, PlayId)> {
    let id_rel = pbs.base.vocab().rel(crate::structure::IDENTITY_SYMBOL)?;
    for (s_id, _) in pbs.plays() {
        for (t_id, _) in pbs.plays() {
            if pbs.rel_holds(id_rel, &[s_id, t_id]) && f[s_id] != f[t_id] {
                return Some((s_id, t_id));
            }
        }
    }
    None
}

pub struct LawOptions<'a> {
    pub seed: u64,
    pub samples: usize,
    pub counit_override: Option<&'a dyn Fn(&[Move]) -> Elem>,
    /// When false, the realized-relation cross-check runs against a predicate
    /// with condition (2) dropped, to verify the fault is caught.
    pub condition2: bool,
}

impl Default for LawOptions<'_> {
    fn default() -> Self {
        LawOptions {
            seed: 0,
            samples: 8,
            counit_override: None,
            condition2: true,
        }
    }
}

/// The same battery as the round-indexed comonad, on the length-bounded
/// truncation: all structure maps stay within the bound by construction.
pub fn check_comonad_laws(pbs: &PebbleStructure, opts: &LawOptions) -> LawReport {
    let mut report = LawReport::default();
    let n_plays = pbs.universe_size();
    let base_n = pbs.base.size();
    let eps = |seq: &[Move]| -> Elem {
        match opts.counit_override {
            Some(f) => f(seq),
            None => seq.last().expect("non-empty").1,
        }
    };

    // Realized relations agree with the defining conditions (1)-(3).
    {
        let mut pass = true;
        let mut witness = None;
        'outer: for (r, sym) in pbs.base.vocab().symbols() {
            for (_, top) in pbs.plays() {
                let prefix_ids: Vec<PlayId> = (1..=top.len())
                    .map(|l| pbs.play_id(&top[..l]).expect("prefix"))
                    .collect();
                let mut tuple = alloc::vec![0usize; sym.arity];
                let mut bad: Option<Vec<PlayId>> = None;
                enumerate_tuples(&prefix_ids, &mut tuple, 0, &mut |ids| {
                    if bad.is_none()
                        && pbs.rel_holds_conditions(r, ids, opts.condition2)
                            != pbs.rel_holds(r, ids)
                    {
                        bad = Some(ids.to_vec());
                    }
                });
                if let Some(ids) = bad {
                    pass = false;
                    let shown: Vec<String> = ids.iter().map(|&i| pbs.render(i)).collect();
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
        'outer: for (r, sym) in pbs.base.vocab().symbols() {
            for (_, top) in pbs.plays() {
                let prefix_ids: Vec<PlayId> = (1..=top.len())
                    .map(|l| pbs.play_id(&top[..l]).expect("prefix"))
                    .collect();
                let mut tuple = alloc::vec![0usize; sym.arity];
                let mut bad: Option<Vec<PlayId>> = None;
                enumerate_tuples(&prefix_ids, &mut tuple, 0, &mut |ids| {
                    if bad.is_none() && pbs.rel_holds_conditions(r, ids, opts.condition2) {
                        let image: Vec<Elem> =
                            ids.iter().map(|&i| eps(pbs.play(i))).collect();
                        if !pbs.base.holds(r, &image) {
                            bad = Some(ids.to_vec());
                        }
                    }
                });
                if let Some(ids) = bad {
                    pass = false;
                    let shown: Vec<String> = ids.iter().map(|&i| pbs.render(i)).collect();
                    witness = Some(format!("{}({})", sym.name, shown.join(", ")));
                    break 'outer;
                }
            }
        }
        report.record("counit_is_homomorphism", pass, witness);
    }

    // Coextension of the counit is the identity.
    {
        let eps_map: Vec<Elem> = (0..n_plays).map(|i| eps(pbs.play(i))).collect();
        let co = coextension(pbs, &eps_map);
        let bad = pbs.plays().find(|&(i, seq)| co[i] != seq);
        report.record(
            "coext_identity",
            bad.is_none(),
            bad.map(|(i, _)| pbs.render(i)),
        );
    }

    if base_n > 0 {
        // Pebble indices of f*(s) always equal those of s.
        let mut pass = true;
        let mut witness = None;
        'shape: for c in 0..opts.samples as u64 {
            let f = util::sampled_map(opts.seed, c + 900, n_plays, base_n);
            let co = coextension(pbs, &f);
            for (i, seq) in pbs.plays() {
                let same_shape = co[i].len() == seq.len()
                    && co[i].iter().zip(seq).all(|(&(p, _), &(q, _))| p == q);
                if !same_shape {
                    pass = false;
                    witness = Some(format!("sample {c} at {}", pbs.render(i)));
                    break 'shape;
                }
            }
        }
        report.record("coext_preserves_pebbles", pass, witness);

        // eps_B . f* = f.
        let mut pass = true;
        let mut witness = None;
        'eq2: for c in 0..opts.samples as u64 {
            let f = util::sampled_map(opts.seed, c, n_plays, base_n);
            let co = coextension(pbs, &f);
            for (i, _) in pbs.plays() {
                if eps(&co[i]) != f[i] {
                    pass = false;
                    witness = Some(format!("sample {c} at {}", pbs.render(i)));
                    break 'eq2;
                }
            }
        }
        report.record("coext_counit", pass, witness);

        // (g . f*)* = g* . f*.
        let mut pass = true;
        let mut witness = None;
        'eq3: for c in 0..opts.samples as u64 {
            let f = util::sampled_map(opts.seed, 2 * c + 101, n_plays, base_n);
            let g = util::sampled_map(opts.seed, 2 * c + 102, n_plays, base_n);
            let f_star = coextension(pbs, &f);
            let gf: Vec<Elem> = (0..n_plays)
                .map(|i| g[pbs.play_id(&f_star[i]).expect("play")])
                .collect();
            let lhs = coextension(pbs, &gf);
            let g_star = coextension(pbs, &g);
            for (i, _) in pbs.plays() {
                let rhs: &Vec<Move> = &g_star[pbs.play_id(&f_star[i]).expect("play")];
                if &lhs[i] != rhs {
                    pass = false;
                    witness = Some(format!("sample {c} at {}", pbs.render(i)));
                    break 'eq3;
                }
            }
        }
        report.record("coext_compose", pass, witness);
    }

    // Comultiplication diagrams and the coequalizer identity.
    {
        let delta = comultiplication(pbs);
        let mut bad_left = None;
        let mut bad_right = None;
        for (i, seq) in pbs.plays() {
            if delta[i].last().expect("non-empty").1 != i {
                bad_left.get_or_insert(i);
            }
            let pointwise: Vec<Move> = delta[i]
                .iter()
                .map(|&(p, pid)| (p, eps(pbs.play(pid))))
                .collect();
            if pointwise != seq {
                bad_right.get_or_insert(i);
            }
        }
        report.record(
            "comult_counit_left",
            bad_left.is_none(),
            bad_left.map(|i| pbs.render(i)),
        );
        report.record(
            "comult_counit_right",
            bad_right.is_none(),
            bad_right.map(|i| pbs.render(i)),
        );

        let mut bad = None;
        for (i, _) in pbs.plays() {
            let ds = &delta[i];
            let lhs: Vec<Vec<(u32, PlayId)>> =
                (1..=ds.len()).map(|l| ds[..l].to_vec()).collect();
            let rhs: Vec<Vec<(u32, PlayId)>> =
                ds.iter().map(|&(_, pid)| delta[pid].clone()).collect();
            if lhs != rhs {
                bad = Some(i);
                break;
            }
        }
        report.record("comult_coassoc", bad.is_none(), bad.map(|i| pbs.render(i)));

        // eps . P(eps) = eps . eps_{P A} on second-level plays: prefix lists
        // plus pseudo-random sequences of play ids.
        let mut second_level: Vec<Vec<(u32, PlayId)>> = delta;
        for c in 0..opts.samples as u64 {
            if n_plays == 0 {
                break;
            }
            let len = 1 + (util::mix(opts.seed ^ c) % pbs.length_bound() as u64) as usize;
            let seq: Vec<(u32, PlayId)> = (0..len)
                .map(|j| {
                    let h = util::mix(opts.seed ^ (c << 8) ^ j as u64);
                    (
                        (h % pbs.pebbles() as u64) as u32 + 1,
                        (util::mix(h) % n_plays as u64) as usize,
                    )
                })
                .collect();
            second_level.push(seq);
        }
        let mut bad = None;
        for s2 in &second_level {
            let pointwise: Vec<Move> = s2.iter().map(|&(p, pid)| (p, eps(pbs.play(pid)))).collect();
            let lhs = eps(&pointwise);
            let rhs = eps(pbs.play(s2.last().expect("non-empty").1));
            if lhs != rhs {
                bad = Some(s2.clone());
                break;
            }
        }
        report.record(
            "coequalizer",
            bad.is_none(),
            bad.map(|s2| format!("{} second-level moves", s2.len())),
        );
    }

    report
}

/// All distinct pebble indices placed in a play.
pub fn pebbles_used(seq: &[Move]) -> BTreeSet<u32> {
    seq.iter().map(|&(p, _)| p).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn universe_sizes() {
        assert_eq!(universe_count(2, 1, 2), Some(6));
        let a = Structure::clique(2);
        let pbs = PebbleStructure::build(&a, 1, 2, 100).unwrap();
        assert_eq!(pbs.universe_size(), 6);
    }

    #[test]
    fn play_ids_round_trip() {
        let a = Structure::clique(2);
        let pbs = PebbleStructure::build(&a, 2, 2, 100).unwrap();
        for (i, seq) in pbs.plays() {
            assert_eq!(pbs.play_id(seq), Some(i));
        }
    }

    #[test]
    fn relation_conditions_on_k2() {
        let k2 = Structure::clique(2);
        let pbs = PebbleStructure::build(&k2, 2, 2, 100).unwrap();
        // Pebble 1's placing survives into the suffix [(2,1)]; R(0,1) holds.
        let s = pbs.play_id(&[(1, 0)]).unwrap();
        let t = pbs.play_id(&[(1, 0), (2, 1)]).unwrap();
        assert!(pbs.rel_holds(0, &[s, t]));

        // One pebble: re-placing pebble 1 kills the pair.
        let pbs1 = PebbleStructure::build(&k2, 1, 2, 100).unwrap();
        let s = pbs1.play_id(&[(1, 0)]).unwrap();
        let t = pbs1.play_id(&[(1, 0), (1, 1)]).unwrap();
        assert!(!pbs1.rel_holds(0, &[s, t]));
    }

    #[test]
    fn counit_examples() {
        let k2 = Structure::clique(2);
        let pbs = PebbleStructure::build(&k2, 2, 3, 10_000).unwrap();
        let id = pbs.play_id(&[(1, 0), (2, 1), (1, 0)]).unwrap();
        assert_eq!(pbs.counit(id), 0);
        let id = pbs.play_id(&[(1, 1)]).unwrap();
        assert_eq!(pbs.counit(id), 1);
    }

    #[test]
    fn counit_is_homomorphism_on_truncation() {
        let k2 = Structure::clique(2);
        let pbs = PebbleStructure::build(&k2, 2, 2, 100).unwrap();
        let realized = pbs.realize(100).unwrap();
        let eps: Vec<Elem> = (0..pbs.universe_size()).map(|i| pbs.counit(i)).collect();
        assert!(crate::structure::is_homomorphism(&eps, &realized, &k2).unwrap());
    }

    #[test]
    fn ef_to_pebble_examples() {
        let k2 = Structure::clique(2);
        let efs = ef::EfStructure::build(&k2, 2, 100).unwrap();
        let pbs = PebbleStructure::build(&k2, 2, 2, 100).unwrap();
        assert_eq!(from_ef_play(&[0, 1]), alloc::vec![(1, 0), (2, 1)]);
        let t = ef_to_pebble(&efs, &pbs).unwrap();
        // Counits agree.
        for (i, _) in efs.plays() {
            assert_eq!(pbs.counit(t[i]), efs.counit(i));
        }
        // The map is a homomorphism into the truncation.
        for (r, _) in k2.vocab().symbols() {
            for (i, _) in efs.plays() {
                for (j, _) in efs.plays() {
                    if efs.rel_holds(r, &[i, j]) {
                        assert!(pbs.rel_holds(r, &[t[i], t[j]]));
                    }
                }
            }
        }
    }

    #[test]
    fn ef_to_pebble_commutes_with_structure_maps() {
        let k2 = Structure::clique(2);
        let efs = ef::EfStructure::build(&k2, 2, 100).unwrap();
        let pbs = PebbleStructure::build(&k2, 2, 2, 100).unwrap();
        let t = ef_to_pebble(&efs, &pbs).unwrap();
        let delta_e = ef::comultiplication(&efs);
        let delta_p = comultiplication(&pbs);
        for (i, _) in efs.plays() {
            // Counits agree and delta_P(t(s)) is the image of delta_E(s),
            // annotated with the pebbles t introduces.
            assert_eq!(pbs.counit(t[i]), efs.counit(i));
            let lhs = &delta_p[t[i]];
            let rhs: Vec<(u32, PlayId)> = delta_e[i]
                .iter()
                .enumerate()
                .map(|(pos, &pid)| (pos as u32 + 1, t[pid]))
                .collect();
            assert_eq!(lhs, &rhs);
        }
    }

    #[test]
    fn laws_pass_on_k2() {
        let k2 = Structure::clique(2);
        let pbs = PebbleStructure::build(&k2, 2, 2, 100).unwrap();
        let report = check_comonad_laws(&pbs, &LawOptions::default());
        assert!(report.all_pass(), "failures: {:?}", report.failures().collect::<Vec<_>>());
    }

    #[test]
    fn condition2_fault_is_caught_with_witness() {
        let k2 = Structure::clique(2);
        let pbs = PebbleStructure::build(&k2, 1, 2, 100).unwrap();
        let opts = LawOptions {
            condition2: false,
            ..LawOptions::default()
        };
        let report = check_comonad_laws(&pbs, &opts);
        assert!(!report.all_pass());
        let fail = report.failures().next().unwrap();
        assert_eq!(fail.name, "relation_conditions");
        assert!(fail.witness.is_some());
    }

    #[test]
    fn i_morphism_counit_and_violation() {
        let k2 = Structure::clique(2).lift_identity().unwrap();
        let pbs = PebbleStructure::build(&k2, 2, 2, 100).unwrap();
        let eps: Vec<Elem> = (0..pbs.universe_size()).map(|i| pbs.counit(i)).collect();
        assert!(is_i_morphism(&pbs, &eps));

        // Two I-related plays forced to distinct images.
        let s = pbs.play_id(&[(1, 0)]).unwrap();
        let t = pbs.play_id(&[(1, 0), (2, 0)]).unwrap();
        let id_rel = k2.vocab().rel(crate::structure::IDENTITY_SYMBOL).unwrap();
        assert!(pbs.rel_holds(id_rel, &[s, t]));
        let mut f = eps.clone();
        f[s] = 0;
        f[t] = 1;
        assert!(!is_i_morphism(&pbs, &f));
    }
}
