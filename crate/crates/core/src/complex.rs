//! Order complexes and their integer boundary matrices.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::poset::{FinitePoset, PointSet, MAX_POINTS};
use crate::snf::IntMatrix;

/// A simplex, stored as its vertex set. Simplices compare lexicographically
/// by their sorted vertex tuples.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Simplex(PointSet);

impl Simplex {
    pub fn new(vertices: PointSet) -> Self {
        Simplex(vertices)
    }

    pub fn vertex_set(self) -> PointSet {
        self.0
    }

    pub fn vertices(self) -> impl Iterator<Item = usize> {
        self.0.iter()
    }

    pub fn dim(self) -> usize {
        self.0.len() - 1
    }

    /// Codimension-one faces, `(i, face)` where `i` is the position of the
    /// dropped vertex in the sorted tuple.
    pub fn facets(self) -> impl Iterator<Item = (usize, Simplex)> {
        let s = self.0;
        s.iter().enumerate().filter_map(move |(i, v)| {
            let mut f = s;
            f.remove(v);
            (!f.is_empty()).then_some((i, Simplex(f)))
        })
    }

    pub fn is_face_of(self, other: Simplex) -> bool {
        self.0.is_subset(other.0)
    }
}

impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.vertices().cmp(other.vertices())
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.vertices()).finish()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("vertex {vertex} is out of range for {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("empty facet")]
    EmptyFacet,
    #[error("at most {MAX_POINTS} vertices are supported")]
    TooManyVertices,
}

/// A finite simplicial complex on vertices `0..vertex_count`, closed under
/// taking faces, with simplices grouped by dimension and sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderComplex {
    vertex_count: usize,
    simplices: Vec<Vec<Simplex>>,
}

impl OrderComplex {
    /// `𝒦(X)`: the complex of non-empty chains of `p`.
    pub fn of_poset(p: &FinitePoset) -> Self {
        let n = p.len();
        // Chains with top element x are {x} plus extensions of chains whose
        // top lies strictly below x.
        let mut ending: Vec<Vec<u64>> = vec![Vec::new(); n];
        for x in p.linear_extension() {
            let bit = 1u64 << x;
            let mut list = vec![bit];
            for y in p.u_hat(x) {
                list.extend(ending[y].iter().map(|c| c | bit));
            }
            ending[x] = list;
        }
        let all = ending.into_iter().flatten().map(|c| Simplex(PointSet::from_bits(c)));
        Self::from_closed(n, all)
    }

    /// The complex generated by `facets` (all their non-empty faces).
    pub fn from_facets(vertex_count: usize, facets: &[Vec<usize>]) -> Result<Self, ComplexError> {
        if vertex_count > MAX_POINTS {
            return Err(ComplexError::TooManyVertices);
        }
        let mut all = Vec::new();
        for facet in facets {
            if facet.is_empty() {
                return Err(ComplexError::EmptyFacet);
            }
            if let Some(&v) = facet.iter().find(|&&v| v >= vertex_count) {
                return Err(ComplexError::VertexOutOfRange {
                    vertex: v,
                    count: vertex_count,
                });
            }
            let set: PointSet = facet.iter().copied().collect();
            let bits = set.bits();
            // Enumerate all non-empty subsets of the facet.
            let mut sub = bits;
            while sub != 0 {
                all.push(Simplex(PointSet::from_bits(sub)));
                sub = (sub - 1) & bits;
            }
        }
        Ok(Self::from_closed(vertex_count, all))
    }

    fn from_closed(vertex_count: usize, all: impl IntoIterator<Item = Simplex>) -> Self {
        let mut simplices: Vec<Vec<Simplex>> = Vec::new();
        for s in all {
            let d = s.dim();
            if simplices.len() <= d {
                simplices.resize_with(d + 1, Vec::new);
            }
            simplices[d].push(s);
        }
        for level in &mut simplices {
            level.sort_unstable();
            level.dedup();
        }
        OrderComplex {
            vertex_count,
            simplices,
        }
    }

    /// Number of vertex labels (some may be unused in a complex built from
    /// facets).
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Dimension, or `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.simplices.len().checked_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Sorted `k`-simplices.
    pub fn simplices(&self, k: usize) -> &[Simplex] {
        self.simplices.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn count(&self, k: usize) -> usize {
        self.simplices(k).len()
    }

    pub fn counts(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    pub fn all_simplices(&self) -> impl Iterator<Item = Simplex> + '_ {
        self.simplices.iter().flatten().copied()
    }

    pub fn contains(&self, s: Simplex) -> bool {
        self.simplices(s.dim()).binary_search(&s).is_ok()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.counts()
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// Vertices actually present.
    pub fn vertex_set(&self) -> PointSet {
        self.simplices(0)
            .iter()
            .fold(PointSet::EMPTY, |acc, s| acc.union(s.vertex_set()))
    }

    /// Connectivity of the 1-skeleton over the vertices present.
    pub fn is_connected(&self) -> bool {
        let verts = self.vertex_set();
        let Some(start) = verts.first() else {
            return false;
        };
        let mut adj = [0u64; MAX_POINTS];
        for e in self.simplices(1) {
            let mut it = e.vertices();
            let (a, b) = (it.next().unwrap(), it.next().unwrap());
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        let mut seen = PointSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = PointSet::EMPTY;
            for v in frontier {
                next = next.union(PointSet::from_bits(adj[v]));
            }
            frontier = next.difference(seen);
            seen = seen.union(next);
        }
        seen == verts
    }

    /// `∂_k : C_k → C_{k−1}` for `k ≥ 1`, rows indexed by the sorted
    /// `(k−1)`-simplices and columns by the sorted `k`-simplices. The face
    /// obtained by dropping the `i`-th vertex carries sign `(−1)^i`.
    pub fn boundary_matrix(&self, k: usize) -> IntMatrix {
        self.relative_boundary_matrix(k, PointSet::EMPTY)
    }

    /// Boundary of the quotient chain complex `C(K) / C(K_A)`, where `K_A` is
    /// the full subcomplex on the vertices `a`: simplices lying inside `a` are
    /// dropped from both rows and columns.
    pub fn relative_boundary_matrix(&self, k: usize, a: PointSet) -> IntMatrix {
        assert!(k >= 1, "∂_0 is not a simplicial boundary");
        let keep = |s: &&Simplex| !s.vertex_set().is_subset(a);
        let rows: Vec<Simplex> = self.simplices(k - 1).iter().filter(keep).copied().collect();
        let cols: Vec<Simplex> = self.simplices(k).iter().filter(keep).copied().collect();
        let row_index: HashMap<Simplex, usize> =
            rows.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let mut m = IntMatrix::zeros(rows.len(), cols.len());
        for (j, &s) in cols.iter().enumerate() {
            for (i, face) in s.facets() {
                if let Some(&r) = row_index.get(&face) {
                    m.set(r, j, if i % 2 == 0 { 1 } else { -1 });
                }
            }
        }
        m
    }

    /// Number of `k`-simplices not inside `a`.
    pub fn relative_count(&self, k: usize, a: PointSet) -> usize {
        self.simplices(k)
            .iter()
            .filter(|s| !s.vertex_set().is_subset(a))
            .count()
    }
}

/// `𝒦(X)`.
pub fn order_complex(p: &FinitePoset) -> OrderComplex {
    OrderComplex::of_poset(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces;

    #[test]
    fn w9_simplex_counts() {
        let k = order_complex(&spaces::w9());
        assert_eq!(k.counts(), vec![9, 22, 14]);
        assert_eq!(k.dim(), Some(2));
    }

    #[test]
    fn antichain_and_circle() {
        let k = order_complex(&spaces::antichain(3));
        assert_eq!(k.counts(), vec![3]);
        assert!(!k.is_connected());
        let k = order_complex(&spaces::sphere(1));
        assert_eq!(k.counts(), vec![4, 4]);
        assert!(k.is_connected());
    }

    #[test]
    fn lexicographic_order() {
        let k = OrderComplex::from_facets(4, &[vec![0, 1, 2], vec![0, 3]]).unwrap();
        assert_eq!(
            k.simplices(1).iter().map(|s| s.vertices().collect()).collect::<Vec<Vec<_>>>(),
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2]]
        );
        assert!(Simplex::new([0, 1, 2].into_iter().collect()) < Simplex::new([0, 2].into_iter().collect()));
    }

    #[test]
    fn boundary_squares_to_zero() {
        for p in [spaces::w9(), spaces::sphere(3), spaces::chain(5)] {
            let k = order_complex(&p);
            for d in 2..=k.dim().unwrap() {
                let prod = k.boundary_matrix(d - 1).mul(&k.boundary_matrix(d));
                assert!(prod.is_zero());
            }
        }
    }

    #[test]
    fn bad_facets() {
        assert_eq!(
            OrderComplex::from_facets(2, &[vec![0, 2]]),
            Err(ComplexError::VertexOutOfRange { vertex: 2, count: 2 })
        );
        assert_eq!(OrderComplex::from_facets(2, &[vec![]]), Err(ComplexError::EmptyFacet));
    }
}
