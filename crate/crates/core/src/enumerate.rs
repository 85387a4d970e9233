//! Isomorph-free generation of unlabelled posets.
//!
//! Every poset on `n + 1` points arises from one on `n` points by adding a new
//! maximal point above an order ideal. A child is kept only when the new
//! point lies in the automorphism orbit of a canonically chosen maximal point
//! (the maximal point with the largest canonical label), which makes the
//! parent of every class unique up to isomorphism. Distinct ideals of the same
//! parent can still yield isomorphic children; those are removed per parent by
//! canonical form. Nodes are stored in their canonical labelling, so the walk
//! does not depend on how it was reached.

use std::collections::HashSet;
use std::ops::RangeInclusive;

use rayon::prelude::*;

use crate::canon::{are_twins, canonical_form_marked, canonize, point_keys, top_labelled, CanonicalForm};
use crate::homotopy::has_beat_points;
use crate::poset::{FinitePoset, PointSet, MAX_POINTS};

/// Largest size the exhaustive searches are meant for.
pub const MAX_ENUMERATION_POINTS: usize = 10;

/// Shards are the nodes of this size (or of the largest requested size, if
/// smaller); everything below is walked sequentially.
const SHARD_LEVEL: usize = 6;

/// Restrictions on the generated classes.
///
/// `max_height` prunes the generation tree, since adding a maximal point never
/// lowers the height. Every other field is checked on each generated poset
/// without pruning: beat-point-freeness, connectivity and the cardinality
/// bounds are not inherited by parents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationFilter {
    pub connected: bool,
    pub cores_only: bool,
    pub min_height: usize,
    pub max_height: Option<usize>,
    pub maximal: RangeInclusive<usize>,
    pub minimal: RangeInclusive<usize>,
    /// Bounds on `#ℬ_X`, the points that are neither maximal nor minimal.
    pub middle: RangeInclusive<usize>,
    /// Skip posets with a maximum or a minimum (they are contractible).
    pub skip_extremum: bool,
}

impl Default for EnumerationFilter {
    fn default() -> Self {
        EnumerationFilter {
            connected: false,
            cores_only: false,
            min_height: 0,
            max_height: None,
            maximal: 0..=MAX_POINTS,
            minimal: 0..=MAX_POINTS,
            middle: 0..=MAX_POINTS,
            skip_extremum: false,
        }
    }
}

impl EnumerationFilter {
    pub fn all() -> Self {
        Self::default()
    }

    pub fn cores() -> Self {
        EnumerationFilter {
            cores_only: true,
            ..Self::default()
        }
    }

    pub fn connected_cores() -> Self {
        EnumerationFilter {
            connected: true,
            cores_only: true,
            ..Self::default()
        }
    }

    /// Whether the subtree below `p` can contain accepted posets.
    fn expands(&self, p: &FinitePoset) -> bool {
        self.max_height.is_none_or(|h| p.is_empty() || p.height() <= h)
    }

    pub fn accepts(&self, p: &FinitePoset) -> bool {
        let height = if p.is_empty() { 0 } else { p.height() };
        if height < self.min_height || self.max_height.is_some_and(|h| height > h) {
            return false;
        }
        let (mx, mn) = (p.mxl(), p.mnl());
        if !self.maximal.contains(&mx.len())
            || !self.minimal.contains(&mn.len())
            || !self.middle.contains(&p.mid_points().len())
        {
            return false;
        }
        if self.connected && !p.is_connected() {
            return false;
        }
        if self.skip_extremum && (p.has_maximum() || p.has_minimum()) {
            return false;
        }
        !(self.cores_only && has_beat_points(p))
    }
}

/// A generated class: its canonically labelled representative and form.
#[derive(Debug, Clone)]
pub struct Node {
    pub poset: FinitePoset,
    pub form: CanonicalForm,
}

impl Node {
    fn root() -> Self {
        let poset = FinitePoset::empty();
        let form = canonize(&poset, None).form;
        Node { poset, form }
    }
}

/// All order ideals of `p`, each exactly once.
pub fn order_ideals(p: &FinitePoset) -> Vec<PointSet> {
    let order = p.linear_extension();
    let mut out = Vec::new();
    fn go(p: &FinitePoset, order: &[usize], chosen: PointSet, out: &mut Vec<PointSet>) {
        let Some((&x, rest)) = order.split_first() else {
            out.push(chosen);
            return;
        };
        go(p, rest, chosen, out);
        if p.u_hat(x).is_subset(chosen) {
            let mut with = chosen;
            with.insert(x);
            go(p, rest, with, out);
        }
    }
    go(p, &order, PointSet::EMPTY, &mut out);
    out
}

/// Whether `child`, whose last point is maximal, is the canonical extension
/// of `child` minus that point. Returns the child's canonical form if so.
fn canonical_extension(child: &FinitePoset) -> Option<CanonicalForm> {
    let x = child.len() - 1;
    let mx = child.mxl();
    let keys = point_keys(child);
    let top_key = mx.iter().map(|m| keys[m]).max().expect("x is maximal");
    // Canonical labels increase with the key, so the chosen maximal point
    // carries the largest key among maximal points.
    if keys[x] < top_key {
        return None;
    }
    let canon = canonize(child, None);
    let star = top_labelled(&canon.labeling, mx).expect("x is maximal");
    debug_assert_eq!(keys[star], top_key);
    let accept = star == x
        || are_twins(child, x, star)
        || canonical_form_marked(child, x) == canonical_form_marked(child, star);
    accept.then_some(canon.form)
}

/// Canonical children of `node`, in a fixed order.
pub fn children(node: &Node) -> Vec<Node> {
    let p = &node.poset;
    if p.len() >= MAX_POINTS {
        return Vec::new();
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for ideal in order_ideals(p) {
        let child = p.with_new_maximal(ideal);
        if let Some(form) = canonical_extension(&child) {
            if seen.insert(form.clone()) {
                out.push(Node {
                    poset: form.to_poset(),
                    form,
                });
            }
        }
    }
    out
}

/// Sizes, filter and worker count of an exhaustive search.
#[derive(Debug, Clone)]
pub struct Search {
    pub sizes: RangeInclusive<usize>,
    pub filter: EnumerationFilter,
    pub jobs: usize,
}

/// What a search saw, per size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome<T> {
    /// `generated[k]` counts classes on `k` points reached by the walk
    /// (after height pruning, before the other filters).
    pub generated: Vec<u64>,
    /// `accepted[k]` counts classes on `k` points passing the filter.
    pub accepted: Vec<u64>,
    /// Visitor results in walk order, which does not depend on `jobs`.
    pub items: Vec<T>,
}

impl<T> SearchOutcome<T> {
    fn new(max: usize) -> Self {
        SearchOutcome {
            generated: vec![0; max + 1],
            accepted: vec![0; max + 1],
            items: Vec::new(),
        }
    }

    fn merge(mut self, other: SearchOutcome<T>) -> Self {
        for (a, b) in self.generated.iter_mut().zip(other.generated) {
            *a += b;
        }
        for (a, b) in self.accepted.iter_mut().zip(other.accepted) {
            *a += b;
        }
        self.items.extend(other.items);
        self
    }

    pub fn total_generated(&self) -> u64 {
        self.generated.iter().sum()
    }

    pub fn total_accepted(&self) -> u64 {
        self.accepted.iter().sum()
    }
}

impl Search {
    pub fn new(sizes: RangeInclusive<usize>, filter: EnumerationFilter) -> Self {
        Search {
            sizes,
            filter,
            jobs: 1,
        }
    }

    pub fn jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs.max(1);
        self
    }

    /// Walks every class with a size in `sizes`, calling `visit` on those
    /// passing the filter. Panics if the largest size exceeds the word width.
    pub fn run<T, F>(&self, visit: F) -> SearchOutcome<T>
    where
        T: Send,
        F: Fn(&Node) -> Option<T> + Sync,
    {
        let max = *self.sizes.end();
        assert!(max <= MAX_POINTS, "at most {MAX_POINTS} points");
        let shard_level = max.min(SHARD_LEVEL);
        let mut outcome = SearchOutcome::new(max);
        let mut shards = Vec::new();
        let mut stack = vec![Node::root()];
        while let Some(node) = stack.pop() {
            if node.poset.len() == shard_level {
                shards.push(node);
                continue;
            }
            self.visit(&node, &visit, &mut outcome);
            if self.filter.expands(&node.poset) {
                let mut kids = children(&node);
                kids.reverse();
                stack.extend(kids);
            }
        }
        let walk = |shard: &Node| {
            let mut out = SearchOutcome::new(max);
            let mut stack = vec![shard.clone()];
            while let Some(node) = stack.pop() {
                self.visit(&node, &visit, &mut out);
                if node.poset.len() < max && self.filter.expands(&node.poset) {
                    let mut kids = children(&node);
                    kids.reverse();
                    stack.extend(kids);
                }
            }
            out
        };
        let parts: Vec<SearchOutcome<T>> = if self.jobs == 1 {
            shards.iter().map(walk).collect()
        } else {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(self.jobs)
                .build()
                .expect("worker pool");
            pool.install(|| shards.par_iter().map(walk).collect())
        };
        parts.into_iter().fold(outcome, SearchOutcome::merge)
    }

    fn visit<T, F>(&self, node: &Node, visit: &F, out: &mut SearchOutcome<T>)
    where
        F: Fn(&Node) -> Option<T>,
    {
        let n = node.poset.len();
        if !self.sizes.contains(&n) || !self.filter.expands(&node.poset) {
            return;
        }
        out.generated[n] += 1;
        if self.filter.accepts(&node.poset) {
            out.accepted[n] += 1;
            out.items.extend(visit(node));
        }
    }
}

/// Streams one representative of every class of `n`-point posets passing
/// `filter` to `sink`; returns how many were streamed.
pub fn enumerate_posets<F>(n: usize, filter: &EnumerationFilter, mut sink: F) -> u64
where
    F: FnMut(&FinitePoset),
{
    let search = Search::new(n..=n, filter.clone());
    let outcome = search.run(|node| Some(node.poset.clone()));
    for p in &outcome.items {
        sink(p);
    }
    outcome.accepted[n]
}

/// Classes of `n`-point posets without beat points.
pub fn enumerate_cores<F>(n: usize, sink: F) -> u64
where
    F: FnMut(&FinitePoset),
{
    enumerate_posets(n, &EnumerationFilter::cores(), sink)
}

pub fn count_posets(n: usize, filter: &EnumerationFilter) -> u64 {
    Search::new(n..=n, filter.clone()).run(|_| None::<()>).accepted[n]
}
