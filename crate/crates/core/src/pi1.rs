//! Fundamental groups of order complexes and the homotopical-triviality
//! decision.
//!
//! Triviality of `π₁` is undecidable in general, so the decision is a
//! pipeline that may answer [`TrivialityVerdict::Unknown`]: a nonzero `H₁`
//! proves nontriviality, a collapse to a point proves contractibility, and a
//! bounded Tietze simplification of the edge-path presentation may empty it.
//! Every `Trivial` verdict carries a certificate that can be replayed.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::complex::{OrderComplex, Simplex};
use crate::homology::{homology, HomologyGroup};
use crate::homotopy::{core, BeatRemoval};
use crate::poset::{FinitePoset, PointSet, MAX_POINTS};
use crate::snf::{smith_normal_form, IntMatrix};

/// Default number of Tietze rewrite steps.
pub const DEFAULT_TIETZE_BUDGET: usize = 10_000;

/// A letter of a group word: `g + 1` for generator `g`, `-(g + 1)` for its
/// inverse.
pub type Letter = i32;

pub fn letter(generator: usize, inverse: bool) -> Letter {
    let l = generator as Letter + 1;
    if inverse {
        -l
    } else {
        l
    }
}

pub fn generator_of(l: Letter) -> usize {
    l.unsigned_abs() as usize - 1
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Pi1Error {
    #[error("the complex is not connected")]
    Disconnected,
    #[error("vertex {0} is not in the complex")]
    NoSuchBasepoint(usize),
    #[error("relator letter {0} references a missing generator")]
    BadLetter(Letter),
}

/// A finite group presentation with freely reduced relators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    pub generators: usize,
    pub relators: Vec<Vec<Letter>>,
}

impl GroupPresentation {
    pub fn new(generators: usize, relators: Vec<Vec<Letter>>) -> Result<Self, Pi1Error> {
        for &l in relators.iter().flatten() {
            if l == 0 || generator_of(l) >= generators {
                return Err(Pi1Error::BadLetter(l));
            }
        }
        Ok(GroupPresentation {
            generators,
            relators: relators.into_iter().map(free_reduce).collect(),
        })
    }

    /// `G / [G, G]`, from the Smith form of the exponent-sum matrix.
    pub fn abelianization(&self) -> HomologyGroup {
        let mut m = IntMatrix::zeros(self.relators.len(), self.generators);
        for (i, r) in self.relators.iter().enumerate() {
            for &l in r {
                let g = generator_of(l);
                m.set(i, g, m.get(i, g) + l.signum() as i64);
            }
        }
        let snf = smith_normal_form(&m);
        HomologyGroup {
            rank: self.generators - snf.rank(),
            torsion: snf.torsion().map(|t| t.magnitude().clone()).collect(),
        }
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = |w: &Vec<Letter>| {
            if w.is_empty() {
                return "1".to_string();
            }
            w.iter()
                .map(|&l| {
                    if l > 0 {
                        format!("x{}", l - 1)
                    } else {
                        format!("x{}'", -l - 1)
                    }
                })
                .collect::<Vec<_>>()
                .join(" ")
        };
        let rels: Vec<String> = self.relators.iter().map(word).collect();
        write!(f, "<{} generators | {}>", self.generators, rels.join(", "))
    }
}

pub fn free_reduce(word: Vec<Letter>) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(word.len());
    for l in word {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Free and cyclic reduction.
fn cyclic_reduce(word: Vec<Letter>) -> Vec<Letter> {
    let mut w = VecDeque::from(free_reduce(word));
    while w.len() >= 2 && w.front().copied() == w.back().map(|l| -l) {
        w.pop_front();
        w.pop_back();
    }
    w.into()
}

fn inverse_word(w: &[Letter]) -> Vec<Letter> {
    w.iter().rev().map(|l| -l).collect()
}

/// Edge-path presentation of `π₁(K, basepoint)` from the 2-skeleton: one
/// generator per edge outside a breadth-first spanning tree (neighbours visited
/// in index order), one relator per triangle.
pub fn edge_path_presentation(
    k: &OrderComplex,
    basepoint: usize,
) -> Result<GroupPresentation, Pi1Error> {
    let verts = k.vertex_set();
    if !verts.contains(basepoint) {
        return Err(Pi1Error::NoSuchBasepoint(basepoint));
    }
    let edges = k.simplices(1);
    let mut adj = [0u64; MAX_POINTS];
    for e in edges {
        let (a, b) = endpoints(*e);
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    let mut seen = PointSet::singleton(basepoint);
    let mut tree = BTreeSet::new();
    let mut queue = VecDeque::from([basepoint]);
    while let Some(v) = queue.pop_front() {
        for w in PointSet::from_bits(adj[v]) {
            if !seen.contains(w) {
                seen.insert(w);
                tree.insert((v.min(w), v.max(w)));
                queue.push_back(w);
            }
        }
    }
    if seen != verts {
        return Err(Pi1Error::Disconnected);
    }
    // Generator index of each edge (None for tree edges).
    let mut generator = std::collections::HashMap::new();
    let mut count = 0usize;
    for e in edges {
        let ab = endpoints(*e);
        if !tree.contains(&ab) {
            generator.insert(ab, count);
            count += 1;
        }
    }
    let edge_letter = |a: usize, b: usize| generator.get(&(a, b)).map(|&g| letter(g, false));
    let relators = k
        .simplices(2)
        .iter()
        .map(|t| {
            let v: Vec<usize> = t.vertices().collect();
            let mut word = Vec::with_capacity(3);
            word.extend(edge_letter(v[0], v[1]));
            word.extend(edge_letter(v[1], v[2]));
            word.extend(edge_letter(v[0], v[2]).map(|l| -l));
            word
        })
        .collect();
    GroupPresentation::new(count, relators)
}

fn endpoints(e: Simplex) -> (usize, usize) {
    let mut it = e.vertices();
    (it.next().unwrap(), it.next().unwrap())
}

/// An elementary collapse: `face` is a free face of `coface`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Collapse {
    pub face: Simplex,
    pub coface: Simplex,
}

/// A sequence of elementary collapses reducing a complex to one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollapseCertificate {
    pub steps: Vec<Collapse>,
}

fn cofaces(present: &BTreeSet<Simplex>, s: Simplex, verts: PointSet) -> (usize, Option<Simplex>) {
    let mut count = 0;
    let mut last = None;
    for v in verts.difference(s.vertex_set()) {
        let mut t = s.vertex_set();
        t.insert(v);
        let t = Simplex::new(t);
        if present.contains(&t) {
            count += 1;
            last = Some(t);
        }
    }
    (count, last)
}

/// Greedy elementary collapses. Free faces are taken in lexicographic simplex
/// order, pass after pass, until none is left. Returns a certificate when the
/// complex collapses to a single vertex.
pub fn try_collapse(k: &OrderComplex) -> Option<CollapseCertificate> {
    let verts = k.vertex_set();
    let mut present: BTreeSet<Simplex> = k.all_simplices().collect();
    let mut steps = Vec::new();
    loop {
        let mut changed = false;
        let snapshot: Vec<Simplex> = present.iter().copied().collect();
        for s in snapshot {
            if !present.contains(&s) {
                continue;
            }
            if let (1, Some(t)) = cofaces(&present, s, verts) {
                present.remove(&s);
                present.remove(&t);
                steps.push(Collapse { face: s, coface: t });
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    (present.len() == 1).then_some(CollapseCertificate { steps })
}

pub fn collapses_to_point(k: &OrderComplex) -> bool {
    try_collapse(k).is_some()
}

/// Checks that `cert` is a valid sequence of elementary collapses of `k`
/// ending in a single vertex.
pub fn replay_collapse(k: &OrderComplex, cert: &CollapseCertificate) -> bool {
    let verts = k.vertex_set();
    let mut present: BTreeSet<Simplex> = k.all_simplices().collect();
    for step in &cert.steps {
        if !present.contains(&step.face) || !step.face.is_face_of(step.coface) {
            return false;
        }
        if step.coface.dim() != step.face.dim() + 1 {
            return false;
        }
        match cofaces(&present, step.face, verts) {
            (1, Some(t)) if t == step.coface => {}
            _ => return false,
        }
        present.remove(&step.face);
        present.remove(&step.coface);
    }
    present.len() == 1
}

/// One Tietze elimination: `relator` (as it stood, normalized) contains
/// `generator` exactly once, so the generator is solved for and both are
/// removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TietzeMove {
    pub generator: usize,
    pub relator: Vec<Letter>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TietzeTrace {
    pub moves: Vec<TietzeMove>,
}

/// Result of a bounded Tietze simplification.
#[derive(Debug, Clone)]
pub struct TietzeOutcome {
    /// Remaining generators (original indices).
    pub generators: BTreeSet<usize>,
    pub relators: Vec<Vec<Letter>>,
    pub trace: TietzeTrace,
    pub steps: usize,
    pub budget_exhausted: bool,
}

impl TietzeOutcome {
    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }
}

struct TietzeState {
    generators: BTreeSet<usize>,
    relators: Vec<Vec<Letter>>,
}

impl TietzeState {
    fn new(p: &GroupPresentation) -> Self {
        let mut s = TietzeState {
            generators: (0..p.generators).collect(),
            relators: p.relators.clone(),
        };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        let mut rels: Vec<Vec<Letter>> = std::mem::take(&mut self.relators)
            .into_iter()
            .map(cyclic_reduce)
            .filter(|r| !r.is_empty())
            .collect();
        rels.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        rels.dedup();
        self.relators = rels;
    }

    fn occurrences(r: &[Letter], g: usize) -> usize {
        r.iter().filter(|&&l| generator_of(l) == g).count()
    }

    /// First relator (in normalized order) with a generator occurring once,
    /// and the smallest such generator.
    fn next_move(&self) -> Option<(usize, usize)> {
        self.relators.iter().enumerate().find_map(|(i, r)| {
            let mut gens: Vec<usize> = r.iter().map(|&l| generator_of(l)).collect();
            gens.sort_unstable();
            gens.into_iter()
                .find(|&g| Self::occurrences(r, g) == 1)
                .map(|g| (i, g))
        })
    }

    /// Eliminates `g` using relator `i`; returns the number of substituted
    /// occurrences.
    fn apply(&mut self, i: usize, g: usize) -> usize {
        let r = self.relators.remove(i);
        let pos = r.iter().position(|&l| generator_of(l) == g).expect("generator occurs");
        // r = u g^e v  ⇒  g^e = u⁻¹ v⁻¹ ... rotate so that r = g^e w, w = v u.
        let e = r[pos].signum();
        let w: Vec<Letter> = r[pos + 1..].iter().chain(&r[..pos]).copied().collect();
        // g^e w = 1 ⇒ g^e = w⁻¹ ⇒ g = w⁻¹ (e = 1) or g = w (e = −1).
        let image = if e > 0 { inverse_word(&w) } else { w };
        let image_inv = inverse_word(&image);
        let mut substituted = 0;
        for rel in &mut self.relators {
            if Self::occurrences(rel, g) == 0 {
                continue;
            }
            let mut out = Vec::with_capacity(rel.len());
            for &l in rel.iter() {
                if generator_of(l) == g {
                    substituted += 1;
                    out.extend_from_slice(if l > 0 { &image } else { &image_inv });
                } else {
                    out.push(l);
                }
            }
            *rel = out;
        }
        self.generators.remove(&g);
        self.normalize();
        substituted
    }
}

/// Tietze simplification by repeated generator elimination, bounded by
/// `budget` rewrite steps (one per elimination plus one per substituted
/// occurrence).
pub fn tietze_simplify(p: &GroupPresentation, budget: usize) -> TietzeOutcome {
    let mut state = TietzeState::new(p);
    let mut trace = TietzeTrace::default();
    let mut steps = 0usize;
    let mut budget_exhausted = false;
    while !state.generators.is_empty() {
        let Some((i, g)) = state.next_move() else {
            break;
        };
        if steps >= budget {
            budget_exhausted = true;
            break;
        }
        trace.moves.push(TietzeMove {
            generator: g,
            relator: state.relators[i].clone(),
        });
        steps += 1 + state.apply(i, g);
    }
    TietzeOutcome {
        generators: state.generators,
        relators: state.relators,
        trace,
        steps,
        budget_exhausted,
    }
}

/// Replays a Tietze trace against `p`; true iff every move is legal and the
/// presentation ends with no generators.
pub fn replay_tietze(p: &GroupPresentation, trace: &TietzeTrace) -> bool {
    let mut state = TietzeState::new(p);
    for mv in &trace.moves {
        let Some(i) = state.relators.iter().position(|r| *r == mv.relator) else {
            return false;
        };
        if !state.generators.contains(&mv.generator)
            || TietzeState::occurrences(&mv.relator, mv.generator) != 1
        {
            return false;
        }
        state.apply(i, mv.generator);
    }
    state.generators.is_empty()
}

/// Why a space or complex is known to be homotopically trivial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TrivialityCertificate {
    /// Beat-point reduction of the finite space to a single point.
    Contractible { core_trace: Vec<BeatRemoval> },
    /// Collapse of the complex to a vertex.
    Collapse(CollapseCertificate),
    /// Tietze simplification of the edge-path presentation (based at the
    /// smallest vertex) to the empty presentation.
    Tietze(TietzeTrace),
}

impl TrivialityCertificate {
    pub fn route(&self) -> &'static str {
        match self {
            TrivialityCertificate::Contractible { .. } => "contractible",
            TrivialityCertificate::Collapse(_) => "collapse",
            TrivialityCertificate::Tietze(_) => "tietze",
        }
    }
}

/// A nonzero reduced homology group (in degree 1 this is the abelianization
/// of `π₁`). Degree `-1` marks the empty space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NontrivialWitness {
    pub degree: isize,
    pub group: HomologyGroup,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TrivialityVerdict {
    Trivial(TrivialityCertificate),
    Nontrivial(NontrivialWitness),
    /// Homology vanishes but neither collapsing nor Tietze simplification
    /// within the budget settled `π₁`.
    Unknown { steps: usize },
}

impl TrivialityVerdict {
    pub fn is_trivial(&self) -> bool {
        matches!(self, TrivialityVerdict::Trivial(_))
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, TrivialityVerdict::Unknown { .. })
    }
}

impl fmt::Display for TrivialityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TrivialityVerdict::Trivial(c) => write!(f, "Trivial (via {})", c.route()),
            TrivialityVerdict::Nontrivial(w) => {
                write!(f, "Nontrivial (reduced H{} = {})", w.degree, w.group)
            }
            TrivialityVerdict::Unknown { steps } => {
                write!(f, "Unknown (no certificate after {steps} rewrite steps)")
            }
        }
    }
}

/// Decides whether `π₁(K)` is trivial: `H₁ ≠ 0`, then collapse, then
/// bounded Tietze simplification.
pub fn decide_trivial_pi1(k: &OrderComplex, budget: usize) -> Result<TrivialityVerdict, Pi1Error> {
    if !k.is_connected() {
        return Err(Pi1Error::Disconnected);
    }
    let h1 = homology(k, true).degree(1);
    if !h1.is_trivial() {
        return Ok(TrivialityVerdict::Nontrivial(NontrivialWitness { degree: 1, group: h1 }));
    }
    settle_simply_connected(k, budget)
}

fn settle_simply_connected(k: &OrderComplex, budget: usize) -> Result<TrivialityVerdict, Pi1Error> {
    if let Some(cert) = try_collapse(k) {
        return Ok(TrivialityVerdict::Trivial(TrivialityCertificate::Collapse(cert)));
    }
    let base = k.vertex_set().first().ok_or(Pi1Error::Disconnected)?;
    let pres = edge_path_presentation(k, base)?;
    let out = tietze_simplify(&pres, budget);
    if out.is_trivial() {
        Ok(TrivialityVerdict::Trivial(TrivialityCertificate::Tietze(out.trace)))
    } else {
        Ok(TrivialityVerdict::Unknown { steps: out.steps })
    }
}

/// Weak contractibility of a finite space: all reduced homology of `𝒦(X)`
/// vanishes and `π₁` is trivial.
pub fn is_homotopically_trivial(x: &FinitePoset) -> TrivialityVerdict {
    is_homotopically_trivial_with_budget(x, DEFAULT_TIETZE_BUDGET)
}

pub fn is_homotopically_trivial_with_budget(x: &FinitePoset, budget: usize) -> TrivialityVerdict {
    if x.is_empty() {
        return TrivialityVerdict::Nontrivial(NontrivialWitness {
            degree: -1,
            group: HomologyGroup::free(1),
        });
    }
    let c = core(x);
    if c.space.len() == 1 {
        return TrivialityVerdict::Trivial(TrivialityCertificate::Contractible {
            core_trace: c.trace,
        });
    }
    let k = OrderComplex::of_poset(x);
    let h = homology(&k, true);
    if let Some((d, g)) = h.first_nontrivial() {
        return TrivialityVerdict::Nontrivial(NontrivialWitness {
            degree: d as isize,
            group: g.clone(),
        });
    }
    settle_simply_connected(&k, budget).expect("acyclic complexes are connected")
}

/// Checks a `Trivial` certificate against the space it was issued for.
pub fn verify_certificate(x: &FinitePoset, cert: &TrivialityCertificate) -> bool {
    match cert {
        TrivialityCertificate::Contractible { core_trace } => {
            let mut space = x.clone();
            let mut retained: Vec<usize> = (0..x.len()).collect();
            for step in core_trace {
                let Some(i) = retained.iter().position(|&p| p == step.point) else {
                    return false;
                };
                let ok = match step.kind {
                    crate::homotopy::BeatKind::Up => crate::homotopy::is_up_beat(&space, i),
                    crate::homotopy::BeatKind::Down => crate::homotopy::is_down_beat(&space, i),
                };
                if !ok {
                    return false;
                }
                retained.remove(i);
                space = space.remove_point(i);
            }
            space.len() == 1
        }
        TrivialityCertificate::Collapse(c) => replay_collapse(&OrderComplex::of_poset(x), c),
        TrivialityCertificate::Tietze(t) => {
            let k = OrderComplex::of_poset(x);
            let Some(base) = k.vertex_set().first() else {
                return false;
            };
            edge_path_presentation(&k, base).is_ok_and(|p| replay_tietze(&p, t))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::order_complex;
    use crate::spaces;

    fn triangle() -> OrderComplex {
        OrderComplex::from_facets(3, &[vec![0, 1, 2]]).unwrap()
    }

    #[test]
    fn circle_presentation_is_free_of_rank_one() {
        let k = order_complex(&spaces::sphere(1));
        let p = edge_path_presentation(&k, 0).unwrap();
        assert_eq!(p.generators, 1);
        assert!(p.relators.is_empty());
        assert_eq!(p.abelianization(), HomologyGroup::free(1));
    }

    #[test]
    fn triangle_relator_kills_generator() {
        let p = edge_path_presentation(&triangle(), 0).unwrap();
        assert_eq!(p.generators, 1);
        assert_eq!(p.relators.len(), 1);
        let out = tietze_simplify(&p, 10);
        assert!(out.is_trivial());
        assert!(replay_tietze(&p, &out.trace));
    }

    #[test]
    fn w9_presentation_counts() {
        let k = order_complex(&spaces::w9());
        let p = edge_path_presentation(&k, 0).unwrap();
        assert_eq!(p.generators, 14);
        assert_eq!(p.relators.len(), 14);
        assert!(p.abelianization().is_trivial());
        let out = tietze_simplify(&p, DEFAULT_TIETZE_BUDGET);
        assert!(out.is_trivial());
        assert!(replay_tietze(&p, &out.trace));
    }

    #[test]
    fn collapses() {
        let w = order_complex(&spaces::w9());
        let cert = try_collapse(&w).expect("the order complex of W9 is collapsible");
        assert!(replay_collapse(&w, &cert));
        assert!(collapses_to_point(&triangle()));
        assert!(!collapses_to_point(&order_complex(&spaces::sphere(1))));
        let mut bad = cert.clone();
        bad.steps.swap(0, 1);
        bad.steps.pop();
        assert!(!replay_collapse(&w, &bad));
    }

    #[test]
    fn pipeline_verdicts() {
        let w = order_complex(&spaces::w9());
        assert!(matches!(
            decide_trivial_pi1(&w, DEFAULT_TIETZE_BUDGET).unwrap(),
            TrivialityVerdict::Trivial(TrivialityCertificate::Collapse(_))
        ));
        let c = order_complex(&spaces::sphere(1));
        assert_eq!(
            decide_trivial_pi1(&c, DEFAULT_TIETZE_BUDGET).unwrap(),
            TrivialityVerdict::Nontrivial(NontrivialWitness {
                degree: 1,
                group: HomologyGroup::free(1)
            })
        );
        let two = OrderComplex::from_facets(4, &[vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
        assert!(matches!(
            decide_trivial_pi1(&two, 10).unwrap(),
            TrivialityVerdict::Trivial(TrivialityCertificate::Collapse(_))
        ));
        // S² is simply connected but not collapsible.
        let s2 = order_complex(&spaces::sphere(2));
        match decide_trivial_pi1(&s2, DEFAULT_TIETZE_BUDGET).unwrap() {
            TrivialityVerdict::Trivial(TrivialityCertificate::Tietze(t)) => {
                let p = edge_path_presentation(&s2, 0).unwrap();
                assert!(replay_tietze(&p, &t));
            }
            other => panic!("unexpected verdict {other:?}"),
        }
        let apart = order_complex(&spaces::antichain(2));
        assert_eq!(decide_trivial_pi1(&apart, 10), Err(Pi1Error::Disconnected));
    }

    #[test]
    fn space_verdicts() {
        let w = spaces::w9();
        let v = is_homotopically_trivial(&w);
        match &v {
            TrivialityVerdict::Trivial(cert @ TrivialityCertificate::Collapse(_)) => {
                assert!(verify_certificate(&w, cert))
            }
            other => panic!("unexpected verdict {other:?}"),
        }
        assert_eq!(
            is_homotopically_trivial(&spaces::sphere(3)),
            TrivialityVerdict::Nontrivial(NontrivialWitness {
                degree: 3,
                group: HomologyGroup::free(1)
            })
        );
        match is_homotopically_trivial(&spaces::chain(4)) {
            TrivialityVerdict::Trivial(cert @ TrivialityCertificate::Contractible { .. }) => {
                assert!(verify_certificate(&spaces::chain(4), &cert))
            }
            other => panic!("unexpected verdict {other:?}"),
        }
        assert!(matches!(
            is_homotopically_trivial(&spaces::antichain(2)),
            TrivialityVerdict::Nontrivial(NontrivialWitness { degree: 0, .. })
        ));
    }

    #[test]
    fn exhausted_budget_is_unknown() {
        let s2 = order_complex(&spaces::sphere(2));
        let p = edge_path_presentation(&s2, 0).unwrap();
        let out = tietze_simplify(&p, 0);
        assert!(out.budget_exhausted && !out.is_trivial());
        assert!(matches!(settle_simply_connected(&s2, 0).unwrap(), TrivialityVerdict::Unknown { .. }));
    }

    #[test]
    fn bad_letters_rejected() {
        assert_eq!(GroupPresentation::new(1, vec![vec![2]]), Err(Pi1Error::BadLetter(2)));
        let p = GroupPresentation::new(2, vec![vec![1, 2, -2, -1, 1]]).unwrap();
        assert_eq!(p.relators, vec![vec![1]]);
    }
}
