//! Finite relational vocabularies and structures.
//!
//! Elements of a structure are dense integers `0..size`; an optional name
//! table is used only for display and serialization. Relations are stored as
//! sorted tuple sets, so membership tests on the game solvers' hot paths are
//! logarithmic and iteration order is deterministic everywhere.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

/// Element of a structure's universe.
pub type Elem = u32;

/// Index of a relation symbol within its vocabulary.
pub type RelId = usize;

/// The reserved binary symbol interpreted as the identity relation.
pub const IDENTITY_SYMBOL: &str = "I";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VocabError {
    #[error("duplicate relation symbol `{0}`")]
    DuplicateSymbol(String),
    #[error("relation symbol `{0}` has arity 0; arities must be >= 1")]
    ZeroArity(String),
    #[error("vocabulary already contains the reserved symbol `{IDENTITY_SYMBOL}`")]
    IdentityCollision,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelSym {
    pub name: String,
    pub arity: usize,
}

/// A finite relational vocabulary: a list of relation symbols with arities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vocabulary {
    relations: Vec<RelSym>,
}

impl Vocabulary {
    pub fn new<S: Into<String>>(relations: Vec<(S, usize)>) -> Result<Self, VocabError> {
        let mut seen = BTreeSet::new();
        let mut rels = Vec::with_capacity(relations.len());
        for (name, arity) in relations {
            let name = name.into();
            if arity == 0 {
                return Err(VocabError::ZeroArity(name));
            }
            if !seen.insert(name.clone()) {
                return Err(VocabError::DuplicateSymbol(name));
            }
            rels.push(RelSym { name, arity });
        }
        Ok(Vocabulary { relations: rels })
    }

    /// Vocabulary with a single binary symbol, the common graph case.
    pub fn binary(name: &str) -> Arc<Self> {
        Arc::new(Self::new(vec![(name, 2)]).expect("binary vocabulary"))
    }

    pub fn rel(&self, name: &str) -> Option<RelId> {
        self.relations.iter().position(|r| r.name == name)
    }

    pub fn arity(&self, r: RelId) -> usize {
        self.relations[r].arity
    }

    pub fn name(&self, r: RelId) -> &str {
        &self.relations[r].name
    }

    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    pub fn symbols(&self) -> impl Iterator<Item = (RelId, &RelSym)> {
        self.relations.iter().enumerate()
    }

    /// All arities are <= 2, so the structure can be read as a Kripke structure.
    pub fn is_modal(&self) -> bool {
        self.relations.iter().all(|r| r.arity <= 2)
    }

    pub fn unary_rels(&self) -> impl Iterator<Item = RelId> + '_ {
        self.symbols().filter(|(_, s)| s.arity == 1).map(|(i, _)| i)
    }

    pub fn binary_rels(&self) -> impl Iterator<Item = RelId> + '_ {
        self.symbols().filter(|(_, s)| s.arity == 2).map(|(i, _)| i)
    }

    /// The extension with the reserved identity symbol.
    pub fn with_identity(&self) -> Result<Vocabulary, VocabError> {
        if self.rel(IDENTITY_SYMBOL).is_some() {
            return Err(VocabError::IdentityCollision);
        }
        let mut relations = self.relations.clone();
        relations.push(RelSym {
            name: IDENTITY_SYMBOL.to_string(),
            arity: 2,
        });
        Ok(Vocabulary { relations })
    }

    pub fn has_identity(&self) -> bool {
        self.rel(IDENTITY_SYMBOL).is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("tuple for `{rel}` has length {got}, arity is {want}")]
    ArityMismatch { rel: String, got: usize, want: usize },
    #[error("element {0} is not in the universe (size {1})")]
    ElementOutOfRange(Elem, usize),
    #[error("structures are over different vocabularies")]
    VocabMismatch,
    #[error("operation requires a pointed structure")]
    NotPointed,
    #[error("map is not total on the source universe")]
    NotTotal,
    #[error(transparent)]
    Vocab(#[from] VocabError),
}

/// A violation found by [`Structure::validate`]. Violations are data, not failures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    ArityMismatch { rel: String, tuple: Vec<Elem> },
    ElementOutOfRange { rel: String, tuple: Vec<Elem>, elem: Elem },
    PointOutOfRange { point: Elem },
    NameTableSizeMismatch { names: usize, size: usize },
}

impl core::fmt::Display for Violation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Violation::ArityMismatch { rel, tuple } => {
                write!(f, "arity mismatch: {rel} applied to {tuple:?}")
            }
            Violation::ElementOutOfRange { rel, tuple, elem } => {
                write!(f, "element {elem} not in universe: {rel} applied to {tuple:?}")
            }
            Violation::PointOutOfRange { point } => {
                write!(f, "point {point} not in universe")
            }
            Violation::NameTableSizeMismatch { names, size } => {
                write!(f, "name table has {names} entries for universe of size {size}")
            }
        }
    }
}

/// A finite relational structure, optionally pointed.
///
/// Structures are immutable after construction in practice: all operations in
/// this crate take `&Structure` and return fresh values, so sharing across
/// threads behind `Arc` is safe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Structure {
    vocab: Arc<Vocabulary>,
    size: usize,
    names: Vec<String>,
    interp: Vec<BTreeSet<Vec<Elem>>>,
    point: Option<Elem>,
}

impl Structure {
    pub fn new(vocab: Arc<Vocabulary>, size: usize) -> Self {
        let interp = vocab.symbols().map(|_| BTreeSet::new()).collect();
        Structure {
            vocab,
            size,
            names: Vec::new(),
            interp,
            point: None,
        }
    }

    pub fn vocab(&self) -> &Arc<Vocabulary> {
        &self.vocab
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.size as Elem
    }

    pub fn point(&self) -> Option<Elem> {
        self.point
    }

    pub fn set_point(&mut self, e: Elem) -> Result<(), StructureError> {
        if (e as usize) >= self.size {
            return Err(StructureError::ElementOutOfRange(e, self.size));
        }
        self.point = Some(e);
        Ok(())
    }

    pub fn clear_point(&mut self) {
        self.point = None;
    }

    pub fn set_names(&mut self, names: Vec<String>) {
        self.names = names;
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Display name of an element: its table entry when present, else its index.
    pub fn elem_name(&self, e: Elem) -> String {
        match self.names.get(e as usize) {
            Some(n) => n.clone(),
            None => e.to_string(),
        }
    }

    pub fn add_tuple(&mut self, r: RelId, tuple: Vec<Elem>) -> Result<(), StructureError> {
        let want = self.vocab.arity(r);
        if tuple.len() != want {
            return Err(StructureError::ArityMismatch {
                rel: self.vocab.name(r).to_string(),
                got: tuple.len(),
                want,
            });
        }
        if let Some(&e) = tuple.iter().find(|&&e| (e as usize) >= self.size) {
            return Err(StructureError::ElementOutOfRange(e, self.size));
        }
        self.interp[r].insert(tuple);
        Ok(())
    }

    /// Inserts without validation; pair with [`Structure::validate`].
    pub fn add_tuple_unchecked(&mut self, r: RelId, tuple: Vec<Elem>) {
        self.interp[r].insert(tuple);
    }

    pub fn set_point_unchecked(&mut self, e: Elem) {
        self.point = Some(e);
    }

    pub fn holds(&self, r: RelId, tuple: &[Elem]) -> bool {
        self.interp[r].contains(tuple)
    }

    pub fn tuples(&self, r: RelId) -> impl Iterator<Item = &Vec<Elem>> {
        self.interp[r].iter()
    }

    pub fn tuple_count(&self) -> usize {
        self.interp.iter().map(|s| s.len()).sum()
    }

    /// Every invariant violation in the structure, in deterministic order.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if !self.names.is_empty() && self.names.len() != self.size {
            out.push(Violation::NameTableSizeMismatch {
                names: self.names.len(),
                size: self.size,
            });
        }
        for (r, sym) in self.vocab.symbols() {
            for tuple in &self.interp[r] {
                if tuple.len() != sym.arity {
                    out.push(Violation::ArityMismatch {
                        rel: sym.name.clone(),
                        tuple: tuple.clone(),
                    });
                }
                for &e in tuple {
                    if (e as usize) >= self.size {
                        out.push(Violation::ElementOutOfRange {
                            rel: sym.name.clone(),
                            tuple: tuple.clone(),
                            elem: e,
                        });
                    }
                }
            }
        }
        if let Some(p) = self.point {
            if (p as usize) >= self.size {
                out.push(Violation::PointOutOfRange { point: p });
            }
        }
        out
    }

    /// The lift to the extended vocabulary, with the reserved symbol
    /// interpreted as the identity relation on the universe.
    pub fn lift_identity(&self) -> Result<Structure, StructureError> {
        let vocab = Arc::new(self.vocab.with_identity()?);
        let id_rel = vocab.rel(IDENTITY_SYMBOL).expect("just added");
        let mut interp = self.interp.clone();
        interp.push((0..self.size as Elem).map(|e| vec![e, e]).collect());
        debug_assert_eq!(interp.len(), id_rel + 1);
        Ok(Structure {
            vocab,
            size: self.size,
            names: self.names.clone(),
            interp,
            point: self.point,
        })
    }

    /// Componentwise product. The pair `(x, y)` is encoded as `x * |b| + y`.
    pub fn product(&self, other: &Structure) -> Result<Structure, StructureError> {
        if self.vocab != other.vocab {
            return Err(StructureError::VocabMismatch);
        }
        let nb = other.size as Elem;
        let mut out = Structure::new(self.vocab.clone(), self.size * other.size);
        for (r, _) in self.vocab.symbols() {
            for ta in self.tuples(r) {
                for tb in other.tuples(r) {
                    let t: Vec<Elem> = ta.iter().zip(tb).map(|(&x, &y)| x * nb + y).collect();
                    out.interp[r].insert(t);
                }
            }
        }
        if !self.names.is_empty() || !other.names.is_empty() {
            let names = (0..self.size as Elem)
                .flat_map(|x| {
                    (0..nb).map(move |y| (x, y))
                })
                .map(|(x, y)| format!("({},{})", self.elem_name(x), other.elem_name(y)))
                .collect();
            out.set_names(names);
        }
        if let (Some(pa), Some(pb)) = (self.point, other.point) {
            out.point = Some(pa * nb + pb);
        }
        Ok(out)
    }

    pub fn product_projections(&self, other: &Structure) -> (Vec<Elem>, Vec<Elem>) {
        let nb = other.size as Elem;
        let total = self.size * other.size;
        let mut pa = Vec::with_capacity(total);
        let mut pb = Vec::with_capacity(total);
        for i in 0..total as Elem {
            pa.push(i / nb);
            pb.push(i % nb);
        }
        (pa, pb)
    }

    /// Builds a loop-free undirected graph as a structure over one binary
    /// symbol `E`, inserting both orientations of each edge.
    pub fn graph(n: usize, edges: &[(Elem, Elem)]) -> Structure {
        let vocab = Vocabulary::binary("E");
        let mut s = Structure::new(vocab, n);
        for &(u, v) in edges {
            if u != v {
                s.add_tuple(0, vec![u, v]).expect("edge in range");
                s.add_tuple(0, vec![v, u]).expect("edge in range");
            }
        }
        s
    }

    pub fn clique(n: usize) -> Structure {
        let edges: Vec<(Elem, Elem)> = (0..n as Elem)
            .flat_map(|u| ((u + 1)..n as Elem).map(move |v| (u, v)))
            .collect();
        Structure::graph(n, &edges)
    }

    pub fn path_graph(n: usize) -> Structure {
        let edges: Vec<(Elem, Elem)> = (1..n as Elem).map(|v| (v - 1, v)).collect();
        Structure::graph(n, &edges)
    }

    pub fn cycle(n: usize) -> Structure {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let mut edges: Vec<(Elem, Elem)> = (1..n as Elem).map(|v| (v - 1, v)).collect();
        edges.push((n as Elem - 1, 0));
        Structure::graph(n, &edges)
    }
}

/// Is `f` (totally defined by the slice) a homomorphism from `a` to `b`?
///
/// Every relation tuple must be preserved, and the point when both structures
/// carry one.
pub fn is_homomorphism(f: &[Elem], a: &Structure, b: &Structure) -> Result<bool, StructureError> {
    if a.vocab() != b.vocab() {
        return Err(StructureError::VocabMismatch);
    }
    if f.len() != a.size() {
        return Err(StructureError::NotTotal);
    }
    if let Some(&img) = f.iter().find(|&&img| (img as usize) >= b.size()) {
        return Err(StructureError::ElementOutOfRange(img, b.size()));
    }
    if let (Some(pa), Some(pb)) = (a.point(), b.point()) {
        if f[pa as usize] != pb {
            return Ok(false);
        }
    }
    for (r, _) in a.vocab().symbols() {
        for tuple in a.tuples(r) {
            let image: Vec<Elem> = tuple.iter().map(|&e| f[e as usize]).collect();
            if !b.holds(r, &image) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Classification of a finite relation between two universes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartialMapClass {
    /// Not single-valued on its domain.
    NotFunction,
    /// Single-valued, a homomorphism on the induced substructure, and the
    /// converse relation is one too.
    PartialIso,
    /// Single-valued and a homomorphism on the induced substructure.
    PartialHom,
    /// Single-valued but not a partial homomorphism.
    Neither,
}

fn single_valued(pairs: &[(Elem, Elem)]) -> bool {
    for (i, &(x, y)) in pairs.iter().enumerate() {
        for &(x2, y2) in &pairs[i + 1..] {
            if x == x2 && y != y2 {
                return false;
            }
        }
    }
    true
}

/// Is the single-valued relation a homomorphism on the substructure of `a`
/// induced by its domain?
fn preserves_on_domain(pairs: &[(Elem, Elem)], a: &Structure, b: &Structure) -> bool {
    let lookup = |x: Elem| pairs.iter().find(|&&(s, _)| s == x).map(|&(_, t)| t);
    for (r, _) in a.vocab().symbols() {
        'tuple: for tuple in a.tuples(r) {
            let mut image = Vec::with_capacity(tuple.len());
            for &e in tuple {
                match lookup(e) {
                    Some(t) => image.push(t),
                    None => continue 'tuple, // tuple not inside the domain
                }
            }
            if !b.holds(r, &image) {
                return false;
            }
        }
    }
    true
}

/// Classifies a finite relation `r ⊆ A × B` as in the statement of
/// [`PartialMapClass`]. Both structures must share a vocabulary.
pub fn classify_partial_map(
    pairs: &[(Elem, Elem)],
    a: &Structure,
    b: &Structure,
) -> PartialMapClass {
    if !single_valued(pairs) {
        return PartialMapClass::NotFunction;
    }
    let forward = preserves_on_domain(pairs, a, b);
    let converse: Vec<(Elem, Elem)> = pairs.iter().map(|&(x, y)| (y, x)).collect();
    let backward = single_valued(&converse) && preserves_on_domain(&converse, b, a);
    match (forward, backward) {
        (true, true) => PartialMapClass::PartialIso,
        (true, false) => PartialMapClass::PartialHom,
        _ => PartialMapClass::Neither,
    }
}

/// Is the relation a partial homomorphism (single-valued and preserving)?
pub fn is_partial_hom(pairs: &[(Elem, Elem)], a: &Structure, b: &Structure) -> bool {
    matches!(
        classify_partial_map(pairs, a, b),
        PartialMapClass::PartialHom | PartialMapClass::PartialIso
    )
}

/// Is the relation a partial isomorphism?
pub fn is_partial_iso(pairs: &[(Elem, Elem)], a: &Structure, b: &Structure) -> bool {
    classify_partial_map(pairs, a, b) == PartialMapClass::PartialIso
}

/// A finite loop-free undirected graph; edges are stored normalized `u < v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(Elem, Elem)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop on vertex {0}")]
    SelfLoop(Elem),
    #[error("vertex {0} out of range (order {1})")]
    OutOfRange(Elem, usize),
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(Elem, Elem)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: Elem, v: Elem) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        for w in [u, v] {
            if (w as usize) >= self.n {
                return Err(GraphError::OutOfRange(w, self.n));
            }
        }
        self.edges.insert((u.min(v), u.max(v)));
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn adjacent(&self, u: Elem, v: Elem) -> bool {
        u != v && self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn edges(&self) -> impl Iterator<Item = (Elem, Elem)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, u: Elem) -> Vec<Elem> {
        (0..self.n as Elem).filter(|&v| self.adjacent(u, v)).collect()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Elem> {
        0..self.n as Elem
    }
}

/// The Gaifman graph: distinct elements are adjacent iff they co-occur in
/// some relation tuple.
pub fn gaifman(s: &Structure) -> Graph {
    let mut g = Graph::new(s.size());
    for (r, _) in s.vocab().symbols() {
        for tuple in s.tuples(r) {
            for (i, &x) in tuple.iter().enumerate() {
                for &y in &tuple[i + 1..] {
                    if x != y {
                        let _ = g.add_edge(x, y);
                    }
                }
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validate_well_formed() {
        let k2 = Structure::clique(2);
        assert!(k2.validate().is_empty());
        assert!(k2.holds(0, &[0, 1]) && k2.holds(0, &[1, 0]));
    }

    #[test]
    fn validate_reports_out_of_universe_and_arity() {
        let vocab = Arc::new(Vocabulary::new(vec![("E", 2), ("T", 3)]).unwrap());
        let mut s = Structure::new(vocab, 2);
        s.add_tuple_unchecked(0, vec![0, 5]);
        s.add_tuple_unchecked(1, vec![0, 1]);
        let violations = s.validate();
        assert!(violations.iter().any(|v| matches!(
            v,
            Violation::ElementOutOfRange { elem: 5, .. }
        )));
        assert!(violations
            .iter()
            .any(|v| matches!(v, Violation::ArityMismatch { .. })));
    }

    #[test]
    fn checked_insert_rejects_bad_tuples() {
        let mut s = Structure::graph(2, &[(0, 1)]);
        assert!(matches!(
            s.add_tuple(0, vec![0, 5]),
            Err(StructureError::ElementOutOfRange(5, 2))
        ));
        assert!(matches!(
            s.add_tuple(0, vec![0]),
            Err(StructureError::ArityMismatch { .. })
        ));
    }

    #[test]
    fn homomorphism_identity_and_constant() {
        let k3 = Structure::clique(3);
        assert!(is_homomorphism(&[0, 1, 2], &k3, &k3).unwrap());
        let k2 = Structure::clique(2);
        // Constant map sends the edge (0,1) to the non-edge (0,0).
        assert!(!is_homomorphism(&[0, 0], &k2, &k2).unwrap());
    }

    #[test]
    fn homomorphism_path_to_edge() {
        // 0↦0, 1↦1, 2↦0 from the path 0-1-2 onto an edge: both edges check out.
        let p3 = Structure::path_graph(3);
        let k2 = Structure::clique(2);
        assert!(is_homomorphism(&[0, 1, 0], &p3, &k2).unwrap());
    }

    #[test]
    fn classify_examples() {
        let k2 = Structure::clique(2);
        let k3 = Structure::clique(3);
        assert_eq!(
            classify_partial_map(&[(0, 0), (0, 1)], &k2, &k3),
            PartialMapClass::NotFunction
        );
        assert_eq!(
            classify_partial_map(&[(0, 0), (1, 1)], &k2, &k3),
            PartialMapClass::PartialIso
        );
        // Two endpoints of an edge collapsing onto one loop-free target.
        assert_eq!(
            classify_partial_map(&[(0, 0), (1, 0)], &k2, &k3),
            PartialMapClass::Neither
        );
    }

    #[test]
    fn classify_symmetry_under_reversal() {
        let p3 = Structure::path_graph(3);
        let k3 = Structure::clique(3);
        let pairs = [(0, 0), (1, 1)];
        let rev: Vec<(Elem, Elem)> = pairs.iter().map(|&(x, y)| (y, x)).collect();
        let fwd = classify_partial_map(&pairs, &p3, &k3);
        let bwd = classify_partial_map(&rev, &k3, &p3);
        assert_eq!(fwd == PartialMapClass::PartialIso, bwd == PartialMapClass::PartialIso);
    }

    #[test]
    fn gaifman_of_clique_and_ternary() {
        let k3 = Structure::clique(3);
        let g = gaifman(&k3);
        assert_eq!(g.edge_count(), 3);

        let vocab = Arc::new(Vocabulary::new(vec![("T", 3)]).unwrap());
        let mut s = Structure::new(vocab, 3);
        s.add_tuple(0, vec![0, 1, 2]).unwrap();
        let g = gaifman(&s);
        assert!(g.adjacent(0, 1) && g.adjacent(1, 2) && g.adjacent(0, 2));

        let vocab = Arc::new(Vocabulary::new(vec![("P", 1)]).unwrap());
        let mut s = Structure::new(vocab, 3);
        s.add_tuple(0, vec![1]).unwrap();
        assert_eq!(gaifman(&s).edge_count(), 0);
    }

    #[test]
    fn identity_lift() {
        let k2 = Structure::clique(2);
        let lifted = k2.lift_identity().unwrap();
        let id = lifted.vocab().rel(IDENTITY_SYMBOL).unwrap();
        assert!(lifted.holds(id, &[0, 0]) && lifted.holds(id, &[1, 1]));
        assert!(!lifted.holds(id, &[0, 1]));
        assert!(matches!(
            lifted.lift_identity(),
            Err(StructureError::Vocab(VocabError::IdentityCollision))
        ));

        let empty = Structure::graph(0, &[]);
        let lifted = empty.lift_identity().unwrap();
        let id = lifted.vocab().rel(IDENTITY_SYMBOL).unwrap();
        assert_eq!(lifted.tuples(id).count(), 0);
    }

    #[test]
    fn product_of_k2_with_itself() {
        let k2 = Structure::clique(2);
        let p = k2.product(&k2).unwrap();
        assert_eq!(p.size(), 4);
        // Edges exactly between pairs differing in both components.
        let mut count = 0;
        for x in 0..4u32 {
            for y in 0..4u32 {
                if p.holds(0, &[x, y]) {
                    count += 1;
                    assert!(x / 2 != y / 2 && x % 2 != y % 2);
                }
            }
        }
        assert_eq!(count, 4);

        let (pa, pb) = k2.product_projections(&k2);
        assert!(is_homomorphism(&pa, &p, &k2).unwrap());
        assert!(is_homomorphism(&pb, &p, &k2).unwrap());
    }

    #[test]
    fn product_with_loopless_point_kills_edges() {
        let k3 = Structure::clique(3);
        let one = Structure::graph(1, &[]);
        let p = k3.product(&one).unwrap();
        assert_eq!(p.size(), 3);
        assert_eq!(p.tuples(0).count(), 0);
    }
}
