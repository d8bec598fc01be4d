//! Tree-ordered structures, path embeddings, and the open-map checker.
//!
//! A tree-ordered structure is a structure with a forest order given by
//! parent pointers. Morphisms map roots to roots, preserve the covering
//! relation, and are homomorphisms. A chain from a root is a *path* when the
//! reserved identity relation, if interpreted, is the identity on it — chains
//! that repeat an identity class cannot be the image of a path embedding.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

use crate::structure::{Elem, Structure, StructureError, IDENTITY_SYMBOL};

pub type NodeId = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("parent pointers contain a cycle at node {0}")]
    Cyclic(NodeId),
    #[error("parent table has {got} entries for {want} nodes")]
    SizeMismatch { got: usize, want: usize },
    #[error(transparent)]
    Structure(#[from] StructureError),
}

/// A structure together with a forest order on its universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeOrderedStructure {
    pub structure: Structure,
    pub parent: Vec<Option<NodeId>>,
}

impl TreeOrderedStructure {
    pub fn new(structure: Structure, parent: Vec<Option<NodeId>>) -> Result<Self, TreeError> {
        if parent.len() != structure.size() {
            return Err(TreeError::SizeMismatch {
                got: parent.len(),
                want: structure.size(),
            });
        }
        let t = TreeOrderedStructure { structure, parent };
        for v in 0..t.parent.len() as NodeId {
            // Walk up; a walk longer than the node count means a cycle.
            let mut current = v;
            let mut steps = 0;
            while let Some(p) = t.parent[current as usize] {
                current = p;
                steps += 1;
                if steps > t.parent.len() {
                    return Err(TreeError::Cyclic(v));
                }
            }
        }
        Ok(t)
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn is_root(&self, v: NodeId) -> bool {
        self.parent[v as usize].is_none()
    }

    pub fn roots(&self) -> impl Iterator<Item = NodeId> + '_ {
        (0..self.len() as NodeId).filter(|&v| self.is_root(v))
    }

    pub fn children(&self, v: NodeId) -> impl Iterator<Item = NodeId> + '_ {
        (0..self.len() as NodeId).filter(move |&c| self.parent[c as usize] == Some(v))
    }

    /// The chain from a root down to `v`, inclusive.
    pub fn chain_to(&self, v: NodeId) -> Vec<NodeId> {
        let mut chain = alloc::vec![v];
        let mut current = v;
        while let Some(p) = self.parent[current as usize] {
            chain.push(p);
            current = p;
        }
        chain.reverse();
        chain
    }

    pub fn depth(&self, v: NodeId) -> usize {
        self.chain_to(v).len()
    }

    pub fn height(&self) -> usize {
        (0..self.len() as NodeId)
            .map(|v| self.depth(v))
            .max()
            .unwrap_or(0)
    }

    /// Comparability in the forest order.
    pub fn comparable(&self, u: NodeId, v: NodeId) -> bool {
        self.chain_to(u).contains(&v) || self.chain_to(v).contains(&u)
    }

    /// Is the root chain to each node of `chain` the image of a path
    /// embedding: when the identity symbol is interpreted, it must be the
    /// identity on the chain.
    pub fn chain_is_path(&self, chain: &[NodeId]) -> bool {
        let id_rel = match self.structure.vocab().rel(IDENTITY_SYMBOL) {
            Some(r) => r,
            None => return true,
        };
        for (i, &u) in chain.iter().enumerate() {
            if !self.structure.holds(id_rel, &[u, u]) {
                return false;
            }
            for &v in &chain[i + 1..] {
                if self.structure.holds(id_rel, &[u, v]) || self.structure.holds(id_rel, &[v, u]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Is `f` a morphism of tree-ordered structures: a homomorphism mapping roots
/// to roots and preserving the covering relation?
pub fn is_tree_morphism(
    f: &[NodeId],
    dom: &TreeOrderedStructure,
    cod: &TreeOrderedStructure,
) -> Result<bool, TreeError> {
    if f.len() != dom.len() {
        return Err(TreeError::SizeMismatch {
            got: f.len(),
            want: dom.len(),
        });
    }
    if !crate::structure::is_homomorphism(f, &dom.structure, &cod.structure)? {
        return Ok(false);
    }
    for v in 0..dom.len() as NodeId {
        match dom.parent[v as usize] {
            None => {
                if !cod.is_root(f[v as usize]) {
                    return Ok(false);
                }
            }
            Some(p) => {
                if cod.parent[f[v as usize] as usize] != Some(f[p as usize]) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Is `f` an open pathwise embedding? Checks, in order: tree-morphism shape,
/// every branch-prefix composite is an embedding (injective and strong), and
/// path lifting for every one-step extension (the empty path included, so
/// roots lift too). Returns a failure description, or `None` when all checks
/// pass.
pub fn open_pathwise_embedding_witness(
    f: &[NodeId],
    dom: &TreeOrderedStructure,
    cod: &TreeOrderedStructure,
) -> Result<Option<String>, TreeError> {
    if !is_tree_morphism(f, dom, cod)? {
        return Ok(Some("not a root- and covering-preserving homomorphism".into()));
    }

    // Pathwise embedding: on every path-chain, f is injective and strong.
    for v in 0..dom.len() as NodeId {
        let chain = dom.chain_to(v);
        if !dom.chain_is_path(&chain) {
            continue;
        }
        let image: Vec<NodeId> = chain.iter().map(|&u| f[u as usize]).collect();
        for (i, &u) in image.iter().enumerate() {
            for &w in &image[i + 1..] {
                if u == w {
                    return Ok(Some(format!("chain to node {v} collapses under the map")));
                }
            }
        }
        for (r, sym) in dom.structure.vocab().symbols() {
            let mut tuple = alloc::vec![0usize; sym.arity];
            let mut bad = None;
            enumerate_chain_tuples(&chain, &mut tuple, 0, &mut |idx| {
                if bad.is_some() {
                    return;
                }
                let src: Vec<Elem> = idx.iter().map(|&i| chain[i]).collect();
                let img: Vec<Elem> = idx.iter().map(|&i| image[i]).collect();
                // Homomorphism gives forward preservation; strength is the
                // reflected direction.
                if cod.structure.holds(r, &img) && !dom.structure.holds(r, &src) {
                    bad = Some(format!(
                        "composite along chain to {v} is not strong at {}",
                        sym.name
                    ));
                }
            });
            if let Some(msg) = bad {
                return Ok(Some(msg));
            }
        }
    }

    // Path lifting, one-step: for every path-chain P in the domain (the
    // empty chain included) and every path extension of f(P) in the
    // codomain, some extension of P maps onto it.
    let mut domain_chains: Vec<Vec<NodeId>> = alloc::vec![Vec::new()];
    for v in 0..dom.len() as NodeId {
        let chain = dom.chain_to(v);
        if dom.chain_is_path(&chain) {
            domain_chains.push(chain);
        }
    }
    for chain in &domain_chains {
        let image: Vec<NodeId> = chain.iter().map(|&u| f[u as usize]).collect();
        let cod_extensions: Vec<NodeId> = match image.last() {
            Some(&top) => cod.children(top).collect(),
            None => cod.roots().collect(),
        };
        for y in cod_extensions {
            let mut extended_image = image.clone();
            extended_image.push(y);
            if !cod.chain_is_path(&extended_image) {
                continue;
            }
            let dom_candidates: Vec<NodeId> = match chain.last() {
                Some(&top) => dom.children(top).collect(),
                None => dom.roots().collect(),
            };
            let lifted = dom_candidates.into_iter().any(|x| {
                if f[x as usize] != y {
                    return false;
                }
                let mut extended = chain.clone();
                extended.push(x);
                dom.chain_is_path(&extended)
            });
            if !lifted {
                let shown: Vec<String> = image.iter().map(|u| u.to_string()).collect();
                return Ok(Some(format!(
                    "no lift of extension {y} above image chain [{}]",
                    shown.join(",")
                )));
            }
        }
    }

    Ok(None)
}

pub fn is_open_pathwise_embedding(
    f: &[NodeId],
    dom: &TreeOrderedStructure,
    cod: &TreeOrderedStructure,
) -> Result<bool, TreeError> {
    Ok(open_pathwise_embedding_witness(f, dom, cod)?.is_none())
}

fn enumerate_chain_tuples(
    chain: &[NodeId],
    tuple: &mut [usize],
    pos: usize,
    f: &mut impl FnMut(&[usize]),
) {
    if pos == tuple.len() {
        f(tuple);
        return;
    }
    for i in 0..chain.len() {
        tuple[pos] = i;
        enumerate_chain_tuples(chain, tuple, pos + 1, f);
    }
}

use alloc::string::ToString;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ef::EfStructure;

    fn ef_tree(base: &Structure, k: usize) -> (EfStructure, TreeOrderedStructure) {
        let lifted = base.lift_identity().unwrap();
        let efs = EfStructure::build(&lifted, k, 10_000).unwrap();
        let realized = efs.realize(10_000).unwrap();
        let parent: Vec<Option<NodeId>> = efs
            .plays()
            .map(|(_, seq)| {
                if seq.len() == 1 {
                    None
                } else {
                    Some(efs.play_id(&seq[..seq.len() - 1]).unwrap() as NodeId)
                }
            })
            .collect();
        let tree = TreeOrderedStructure::new(realized, parent).unwrap();
        (efs, tree)
    }

    #[test]
    fn identity_is_open_pathwise_embedding() {
        let k2 = Structure::clique(2);
        let (_, tree) = ef_tree(&k2, 2);
        let id: Vec<NodeId> = (0..tree.len() as NodeId).collect();
        assert!(is_open_pathwise_embedding(&id, &tree, &tree).unwrap());
    }

    #[test]
    fn chain_and_depth() {
        let k2 = Structure::clique(2);
        let (efs, tree) = ef_tree(&k2, 2);
        let s01 = efs.play_id(&[0, 1]).unwrap() as NodeId;
        let s0 = efs.play_id(&[0]).unwrap() as NodeId;
        assert_eq!(tree.chain_to(s01), alloc::vec![s0, s01]);
        assert_eq!(tree.height(), 2);
    }

    #[test]
    fn repeating_chains_are_not_paths() {
        let k2 = Structure::clique(2);
        let (efs, tree) = ef_tree(&k2, 2);
        let s00 = efs.play_id(&[0, 0]).unwrap() as NodeId;
        assert!(!tree.chain_is_path(&tree.chain_to(s00)));
        let s01 = efs.play_id(&[0, 1]).unwrap() as NodeId;
        assert!(tree.chain_is_path(&tree.chain_to(s01)));
    }

    #[test]
    fn collapsing_distinct_profiles_is_rejected() {
        use alloc::sync::Arc;
        use crate::structure::Vocabulary;
        // Two siblings with different unary profiles collapsed onto one node:
        // the composite along a branch is not strong.
        let vocab = Arc::new(Vocabulary::new(alloc::vec![("P", 1)]).unwrap());
        let mut dom = Structure::new(vocab.clone(), 3);
        dom.add_tuple(0, alloc::vec![1]).unwrap();
        let dom = TreeOrderedStructure::new(dom, alloc::vec![None, Some(0), Some(0)]).unwrap();
        let mut cod = Structure::new(vocab, 2);
        cod.add_tuple(0, alloc::vec![1]).unwrap();
        let cod = TreeOrderedStructure::new(cod, alloc::vec![None, Some(0)]).unwrap();
        // Node 2 (no P) maps onto node 1 (P holds): hom is fine, strength fails.
        let f = alloc::vec![0, 1, 1];
        let witness = open_pathwise_embedding_witness(&f, &dom, &cod).unwrap();
        assert!(witness.is_some());
    }

    #[test]
    fn missing_lift_is_detected() {
        use alloc::sync::Arc;
        use crate::structure::Vocabulary;
        // Codomain has a branch the domain cannot cover.
        let vocab = Arc::new(Vocabulary::new(alloc::vec![("P", 1)]).unwrap());
        let dom = Structure::new(vocab.clone(), 1);
        let dom = TreeOrderedStructure::new(dom, alloc::vec![None]).unwrap();
        let cod = Structure::new(vocab, 2);
        let cod = TreeOrderedStructure::new(cod, alloc::vec![None, Some(0)]).unwrap();
        let f = alloc::vec![0];
        let witness = open_pathwise_embedding_witness(&f, &dom, &cod).unwrap();
        assert!(witness.unwrap().contains("no lift"));
    }
}
