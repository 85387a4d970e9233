//! Finite T₀-spaces represented as finite posets.
//!
//! A point `x` of a finite T₀-space is identified with an index in `0..n`.
//! The strict order is stored closed under transitivity as one `u64` bitset
//! per point for the strict down-set and one for the strict up-set, so all
//! queries for `Û_x`, `F̂_x` and comparability are single word operations.

use std::fmt;

use thiserror::Error;

/// Largest number of points a [`FinitePoset`] can hold.
pub const MAX_POINTS: usize = 64;

/// Errors raised while building a poset.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("a poset holds at most {MAX_POINTS} points, got {0}")]
    TooManyPoints(usize),
    #[error("point {point} is out of range for a poset of {n} points")]
    PointOutOfRange { point: usize, n: usize },
    #[error("the relation is not antisymmetric: cycle {}", format_cycle(.0))]
    Cycle(Vec<usize>),
    #[error("the relation is not transitive: {lower} < {middle} < {upper} but not {lower} < {upper}")]
    NotTransitive {
        lower: usize,
        middle: usize,
        upper: usize,
    },
}

fn format_cycle(cycle: &[usize]) -> String {
    let mut out = String::new();
    for p in cycle {
        out.push_str(&p.to_string());
        out.push_str(" -> ");
    }
    if let Some(first) = cycle.first() {
        out.push_str(&first.to_string());
    }
    out
}

/// A set of points of an ambient poset.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PointSet(u64);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        PointSet(bits)
    }

    /// The set `{0, .., n-1}`.
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            PointSet(u64::MAX)
        } else {
            PointSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(x: usize) -> Self {
        PointSet(1u64 << x)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, x: usize) -> bool {
        x < 64 && self.0 >> x & 1 == 1
    }

    pub fn insert(&mut self, x: usize) {
        self.0 |= 1u64 << x;
    }

    pub fn remove(&mut self, x: usize) {
        self.0 &= !(1u64 << x);
    }

    pub const fn union(self, other: PointSet) -> PointSet {
        PointSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: PointSet) -> PointSet {
        PointSet(self.0 & other.0)
    }

    pub const fn difference(self, other: PointSet) -> PointSet {
        PointSet(self.0 & !other.0)
    }

    pub const fn is_subset(self, other: PointSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> PointSetIter {
        PointSetIter(self.0)
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = PointSet::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl IntoIterator for PointSet {
    type Item = usize;
    type IntoIter = PointSetIter;

    fn into_iter(self) -> PointSetIter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`PointSet`].
#[derive(Clone, Debug)]
pub struct PointSetIter(u64);

impl Iterator for PointSetIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for PointSetIter {}

/// A finite T₀-space, stored as the transitive closure of its strict order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinitePoset {
    below: Vec<u64>,
    above: Vec<u64>,
}

impl fmt::Debug for FinitePoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FinitePoset")
            .field("n", &self.len())
            .field("covers", &self.covers())
            .finish()
    }
}

impl FinitePoset {
    /// Builds the poset generated by the cover pairs `(i, j)`, meaning `i ⋖ j`.
    ///
    /// Duplicate pairs are harmless. Pairs that are not actual covers of the
    /// closure (e.g. `(0, 2)` next to `(0, 1), (1, 2)`) are absorbed.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Self, PosetError> {
        if n > MAX_POINTS {
            return Err(PosetError::TooManyPoints(n));
        }
        let mut succ = vec![0u64; n];
        for &(i, j) in covers {
            for p in [i, j] {
                if p >= n {
                    return Err(PosetError::PointOutOfRange { point: p, n });
                }
            }
            if i == j {
                return Err(PosetError::Cycle(vec![i]));
            }
            succ[i] |= 1u64 << j;
        }
        // Reachability by repeated squaring of the successor relation.
        let mut reach = succ.clone();
        loop {
            let mut changed = false;
            for x in 0..n {
                let mut acc = reach[x];
                for y in PointSet(reach[x]) {
                    acc |= reach[y];
                }
                if acc != reach[x] {
                    reach[x] = acc;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        if let Some(x) = (0..n).find(|&x| reach[x] >> x & 1 == 1) {
            return Err(PosetError::Cycle(find_cycle(&succ, x)));
        }
        let mut below = vec![0u64; n];
        for x in 0..n {
            for y in PointSet(reach[x]) {
                below[y] |= 1u64 << x;
            }
        }
        Ok(Self::from_below_closed(below))
    }

    /// Builds a poset from strict down-sets, validating that they form a
    /// strict partial order.
    pub fn from_strict_below(below: Vec<PointSet>) -> Result<Self, PosetError> {
        let n = below.len();
        if n > MAX_POINTS {
            return Err(PosetError::TooManyPoints(n));
        }
        let full = PointSet::full(n);
        for (x, b) in below.iter().enumerate() {
            if let Some(p) = b.difference(full).first() {
                return Err(PosetError::PointOutOfRange { point: p, n });
            }
            if b.contains(x) {
                return Err(PosetError::Cycle(vec![x]));
            }
        }
        for x in 0..n {
            for y in below[x] {
                if below[y].contains(x) {
                    return Err(PosetError::Cycle(vec![x, y]));
                }
                if let Some(z) = below[y].difference(below[x]).first() {
                    return Err(PosetError::NotTransitive {
                        lower: z,
                        middle: y,
                        upper: x,
                    });
                }
            }
        }
        Ok(Self::from_below_closed(below.into_iter().map(PointSet::bits).collect()))
    }

    /// Builds a poset from down-sets already known to be a transitive,
    /// irreflexive, antisymmetric relation.
    pub(crate) fn from_below_closed(below: Vec<u64>) -> Self {
        let n = below.len();
        let mut above = vec![0u64; n];
        for (x, &b) in below.iter().enumerate() {
            for y in PointSet(b) {
                above[y] |= 1u64 << x;
            }
        }
        let p = FinitePoset { below, above };
        debug_assert!(p.check_invariants().is_ok());
        p
    }

    /// The empty space.
    pub fn empty() -> Self {
        FinitePoset {
            below: Vec::new(),
            above: Vec::new(),
        }
    }

    /// Verifies irreflexivity, antisymmetry, transitivity and mirror consistency.
    pub fn check_invariants(&self) -> Result<(), String> {
        let n = self.len();
        if self.above.len() != n || n > MAX_POINTS {
            return Err("inconsistent storage".into());
        }
        let full = PointSet::full(n);
        for x in 0..n {
            let (b, a) = (self.u_hat(x), self.f_hat(x));
            if !b.is_subset(full) || !a.is_subset(full) {
                return Err(format!("point {x} relates to out-of-range points"));
            }
            if b.contains(x) {
                return Err(format!("point {x} is below itself"));
            }
            if !b.intersection(a).is_empty() {
                return Err(format!("point {x} violates antisymmetry"));
            }
            for y in b {
                if !self.u_hat(y).is_subset(b) {
                    return Err(format!("down-set of {x} is not transitive through {y}"));
                }
            }
            for y in 0..n {
                if b.contains(y) != self.f_hat(y).contains(x) {
                    return Err(format!("mirror mismatch between {y} and {x}"));
                }
            }
        }
        Ok(())
    }

    /// Number of points.
    pub fn len(&self) -> usize {
        self.below.len()
    }

    pub fn is_empty(&self) -> bool {
        self.below.is_empty()
    }

    pub fn points(&self) -> PointSet {
        PointSet::full(self.len())
    }

    /// `Û_x = {a : a < x}`.
    #[inline]
    pub fn u_hat(&self, x: usize) -> PointSet {
        PointSet(self.below[x])
    }

    /// `F̂_x = {a : a > x}`.
    #[inline]
    pub fn f_hat(&self, x: usize) -> PointSet {
        PointSet(self.above[x])
    }

    /// `Ĉ_x = Û_x ∪ F̂_x`.
    #[inline]
    pub fn c_hat(&self, x: usize) -> PointSet {
        PointSet(self.below[x] | self.above[x])
    }

    /// `U_x = Û_x ∪ {x}`.
    pub fn u(&self, x: usize) -> PointSet {
        PointSet(self.below[x] | 1u64 << x)
    }

    /// `F_x = F̂_x ∪ {x}`.
    pub fn f(&self, x: usize) -> PointSet {
        PointSet(self.above[x] | 1u64 << x)
    }

    /// `a < b` in the strict order.
    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.below[b] >> a & 1 == 1
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        a == b || self.lt(a, b) || self.lt(b, a)
    }

    /// Maximal points.
    pub fn mxl(&self) -> PointSet {
        (0..self.len()).filter(|&x| self.above[x] == 0).collect()
    }

    /// Minimal points.
    pub fn mnl(&self) -> PointSet {
        (0..self.len()).filter(|&x| self.below[x] == 0).collect()
    }

    /// Points that are neither maximal nor minimal.
    pub fn mid_points(&self) -> PointSet {
        self.points().difference(self.mxl().union(self.mnl()))
    }

    pub fn has_maximum(&self) -> bool {
        self.mxl().len() == 1
    }

    pub fn has_minimum(&self) -> bool {
        self.mnl().len() == 1
    }

    pub fn is_antichain(&self, s: PointSet) -> bool {
        s.iter().all(|x| self.c_hat(x).intersection(s).is_empty())
    }

    pub fn is_chain(&self, s: PointSet) -> bool {
        s.iter()
            .all(|x| s.difference(self.c_hat(x)).difference(PointSet::singleton(x)).is_empty())
    }

    /// Points listed so that every point comes after everything below it.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&x| (self.below[x].count_ones(), x));
        order
    }

    /// Length of the longest chain ending at each point (0 for minimal points).
    pub fn levels(&self) -> Vec<usize> {
        let mut level = vec![0usize; self.len()];
        for x in self.linear_extension() {
            level[x] = self
                .u_hat(x)
                .iter()
                .map(|y| level[y] + 1)
                .max()
                .unwrap_or(0);
        }
        level
    }

    /// `h(X)`: the cardinality of a longest chain minus one. The empty space
    /// has height 0 by convention.
    pub fn height(&self) -> usize {
        self.levels().into_iter().max().unwrap_or(0)
    }

    /// The same points with the inverse order.
    pub fn opposite(&self) -> FinitePoset {
        FinitePoset {
            below: self.above.clone(),
            above: self.below.clone(),
        }
    }

    /// Non-Hausdorff suspension: two new incomparable points `n` and `n+1`
    /// placed above every old point.
    pub fn nh_suspension(&self) -> Result<FinitePoset, PosetError> {
        let n = self.len();
        if n + 2 > MAX_POINTS {
            return Err(PosetError::TooManyPoints(n + 2));
        }
        let mut below = self.below.clone();
        let all = PointSet::full(n).bits();
        below.push(all);
        below.push(all);
        Ok(Self::from_below_closed(below))
    }

    /// Number of chains of cardinality `k + 1`, i.e. of `k`-simplices of the
    /// order complex.
    pub fn chain_count(&self, k: usize) -> u64 {
        self.chain_counts().get(k).copied().unwrap_or(0)
    }

    /// Chain counts for every dimension `0..=h(X)`.
    ///
    /// `ending[x]` holds the number of chains of the current cardinality whose
    /// top element is `x`; extending by one point is a sum over `Û_x`.
    pub fn chain_counts(&self) -> Vec<u64> {
        let n = self.len();
        if n == 0 {
            return Vec::new();
        }
        let order = self.linear_extension();
        let mut ending = vec![1u64; n];
        let mut counts = vec![n as u64];
        loop {
            let mut next = vec![0u64; n];
            for &x in &order {
                next[x] = self.u_hat(x).iter().map(|y| ending[y]).sum();
            }
            let total: u64 = next.iter().sum();
            if total == 0 {
                break;
            }
            counts.push(total);
            ending = next;
        }
        counts
    }

    /// `χ(X) = Σ_k (−1)^k · #{k-chains}`.
    pub fn euler_characteristic(&self) -> i64 {
        self.chain_counts()
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// Connected components of the comparability graph, each as a point set,
    /// ordered by smallest member.
    pub fn components(&self) -> Vec<PointSet> {
        let mut seen = PointSet::EMPTY;
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = PointSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = PointSet::EMPTY;
                for x in frontier {
                    next = next.union(self.c_hat(x));
                }
                frontier = next.difference(comp);
                comp = comp.union(next);
            }
            seen = seen.union(comp);
            out.push(comp);
        }
        out
    }

    /// Connectedness of the comparability graph. The empty space counts as
    /// disconnected.
    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Induced subspace on `s`. Returns the subspace together with the map
    /// from new indices to old indices (ascending).
    pub fn subspace(&self, s: PointSet) -> (FinitePoset, Vec<usize>) {
        let s = s.intersection(self.points());
        let map: Vec<usize> = s.iter().collect();
        let mut index = [usize::MAX; MAX_POINTS];
        for (i, &x) in map.iter().enumerate() {
            index[x] = i;
        }
        let below = map
            .iter()
            .map(|&x| {
                self.u_hat(x)
                    .intersection(s)
                    .iter()
                    .fold(0u64, |acc, y| acc | 1u64 << index[y])
            })
            .collect();
        (Self::from_below_closed(below), map)
    }

    /// `X − {x}`, with indices above `x` shifted down by one.
    pub fn remove_point(&self, x: usize) -> FinitePoset {
        let mut s = self.points();
        s.remove(x);
        self.subspace(s).0
    }

    /// Relabels the points: point `x` becomes `perm[x]`.
    pub fn permute(&self, perm: &[usize]) -> FinitePoset {
        assert_eq!(perm.len(), self.len(), "permutation has the wrong length");
        let mut below = vec![0u64; self.len()];
        for x in 0..self.len() {
            below[perm[x]] = self
                .u_hat(x)
                .iter()
                .fold(0u64, |acc, y| acc | 1u64 << perm[y]);
        }
        Self::from_below_closed(below)
    }

    /// Adds a new point with index `n` whose strict down-set is `ideal`,
    /// which must be closed downwards. The new point is maximal.
    pub fn with_new_maximal(&self, ideal: PointSet) -> FinitePoset {
        debug_assert!(ideal.iter().all(|y| self.u_hat(y).is_subset(ideal)));
        let mut below = self.below.clone();
        below.push(ideal.bits());
        let mut above = self.above.clone();
        let bit = 1u64 << self.len();
        for y in ideal {
            above[y] |= bit;
        }
        above.push(0);
        FinitePoset { below, above }
    }

    /// Whether `s` is closed downwards.
    pub fn is_down_closed(&self, s: PointSet) -> bool {
        s.iter().all(|y| self.u_hat(y).is_subset(s))
    }

    /// The Hasse diagram: pairs `(i, j)` with `i ⋖ j`, sorted ascending.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for j in 0..self.len() {
            let b = self.u_hat(j);
            for i in b {
                // i ⋖ j iff nothing strictly between them.
                if self.f_hat(i).intersection(b).is_empty() {
                    out.push((i, j));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Disjoint union; points of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &FinitePoset) -> Result<FinitePoset, PosetError> {
        let n = self.len();
        if n + other.len() > MAX_POINTS {
            return Err(PosetError::TooManyPoints(n + other.len()));
        }
        let mut below = self.below.clone();
        below.extend(other.below.iter().map(|&b| b << n));
        Ok(Self::from_below_closed(below))
    }
}

fn find_cycle(succ: &[u64], start: usize) -> Vec<usize> {
    // Breadth-first search from the successors of `start` back to `start`.
    let n = succ.len();
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for y in PointSet(succ[start]) {
        if parent[y] == usize::MAX {
            parent[y] = start;
            queue.push_back(y);
        }
    }
    while let Some(x) = queue.pop_front() {
        if x == start {
            break;
        }
        for y in PointSet(succ[x]) {
            if parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut cycle = vec![start];
    let mut x = parent[start];
    while x != start {
        cycle.push(x);
        x = parent[x];
    }
    cycle[1..].reverse();
    cycle
}
