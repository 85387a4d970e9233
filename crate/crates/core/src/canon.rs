//! Canonical labelling of finite posets.
//!
//! Points are first coloured by order invariants (depth, co-depth, sizes of the
//! strict down- and up-sets), the colouring is refined to an equitable ordered
//! partition, and the remaining ties are broken by individualizing points of
//! the first non-trivial cell. Every leaf of that search tree is a labelling;
//! the canonical one is the leaf whose relabelled strict-order matrix is
//! lexicographically smallest. Interchangeable points (same strict down-set
//! and same strict up-set) are only branched on once, since swapping them is
//! an automorphism that fixes the current partition.

use std::fmt;

use crate::poset::{FinitePoset, PointSet, MAX_POINTS};

/// Isomorphism-invariant encoding of a poset: the point count followed by the
/// canonically relabelled strict down-sets, each in `ceil(n / 8)` little-endian
/// bytes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    fn from_rows(rows: &[u64]) -> Self {
        let n = rows.len();
        let width = n.div_ceil(8);
        let mut bytes = Vec::with_capacity(1 + n * width);
        bytes.push(n as u8);
        for row in rows {
            bytes.extend_from_slice(&row.to_le_bytes()[..width]);
        }
        CanonicalForm(bytes)
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Number of points of the encoded poset.
    pub fn points(&self) -> usize {
        self.0[0] as usize
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    /// Rebuilds the canonically labelled poset this form encodes.
    pub fn to_poset(&self) -> FinitePoset {
        let n = self.points();
        let width = n.div_ceil(8);
        let below = (0..n)
            .map(|i| {
                let mut word = [0u8; 8];
                word[..width].copy_from_slice(&self.0[1 + i * width..1 + (i + 1) * width]);
                u64::from_le_bytes(word)
            })
            .collect();
        FinitePoset::from_below_closed(below)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// A canonical labelling together with the form it produces.
#[derive(Debug, Clone)]
pub struct Canonical {
    pub form: CanonicalForm,
    /// `labeling[x]` is the canonical index of point `x`.
    pub labeling: Vec<usize>,
}

pub fn canonical_form(p: &FinitePoset) -> CanonicalForm {
    canonize(p, None).form
}

pub fn canonize(p: &FinitePoset, marked: Option<usize>) -> Canonical {
    Canonizer::new(p).run(marked)
}

/// Canonical form of the pair `(X, x)`: two marked points get equal forms iff
/// some automorphism of `X` maps one to the other.
pub fn canonical_form_marked(p: &FinitePoset, x: usize) -> CanonicalForm {
    canonize(p, Some(x)).form
}

/// `X` relabelled into its canonical labelling.
pub fn canonical_poset(p: &FinitePoset) -> FinitePoset {
    p.permute(&canonize(p, None).labeling)
}

pub fn isomorphic(a: &FinitePoset, b: &FinitePoset) -> bool {
    a.len() == b.len() && canonical_form(a) == canonical_form(b)
}

/// Labelling-independent colour of every point. Larger keys end up at larger
/// canonical indices.
pub(crate) fn point_keys(p: &FinitePoset) -> [u64; MAX_POINTS] {
    let n = p.len();
    let order = p.linear_extension();
    let mut depth = [0u64; MAX_POINTS];
    let mut codepth = [0u64; MAX_POINTS];
    for &x in &order {
        depth[x] = p.u_hat(x).iter().map(|y| depth[y] + 1).max().unwrap_or(0);
    }
    for &x in order.iter().rev() {
        codepth[x] = p.f_hat(x).iter().map(|y| codepth[y] + 1).max().unwrap_or(0);
    }
    let mut keys = [0u64; MAX_POINTS];
    for x in 0..n {
        keys[x] = depth[x] << 24
            | (p.u_hat(x).len() as u64) << 16
            | (p.f_hat(x).len() as u64) << 8
            | codepth[x];
    }
    keys
}

/// Ordered partition of the points. Cells are contiguous runs of `order`.
#[derive(Clone, Copy)]
struct Partition {
    n: usize,
    order: [u8; MAX_POINTS],
    /// Start position of the cell containing each point.
    cell: [u8; MAX_POINTS],
    /// For each cell start, the end position (exclusive).
    end: [u8; MAX_POINTS],
}

impl Partition {
    fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let mut start = 0;
        std::iter::from_fn(move || {
            (start < self.n).then(|| {
                let s = start;
                start = self.end[s] as usize;
                (s, start)
            })
        })
    }

    fn cell_mask(&self, start: usize) -> u64 {
        self.order[start..self.end[start] as usize]
            .iter()
            .fold(0, |m, &v| m | 1u64 << v)
    }
}

struct Canonizer<'a> {
    p: &'a FinitePoset,
    n: usize,
    best_rows: [u64; MAX_POINTS],
    best_labeling: [u8; MAX_POINTS],
    have_best: bool,
}

impl<'a> Canonizer<'a> {
    fn new(p: &'a FinitePoset) -> Self {
        Canonizer {
            p,
            n: p.len(),
            best_rows: [0; MAX_POINTS],
            best_labeling: [0; MAX_POINTS],
            have_best: false,
        }
    }

    fn run(mut self, marked: Option<usize>) -> Canonical {
        let n = self.n;
        if n == 0 {
            return Canonical {
                form: CanonicalForm::from_rows(&[]),
                labeling: Vec::new(),
            };
        }
        let mut keys = point_keys(self.p);
        if let Some(m) = marked {
            // The marked point forms a cell of its own in front.
            for (x, k) in keys.iter_mut().enumerate().take(n) {
                *k |= ((x != m) as u64) << 40;
            }
        }
        let mut verts: Vec<u8> = (0..n as u8).collect();
        verts.sort_unstable_by_key(|&v| keys[v as usize]);
        let mut part = Partition {
            n,
            order: [0; MAX_POINTS],
            cell: [0; MAX_POINTS],
            end: [0; MAX_POINTS],
        };
        part.order[..n].copy_from_slice(&verts);
        let mut start = 0;
        let mut queue = 0u64;
        while start < n {
            let k = keys[verts[start] as usize];
            let mut stop = start + 1;
            while stop < n && keys[verts[stop] as usize] == k {
                stop += 1;
            }
            for &v in &verts[start..stop] {
                part.cell[v as usize] = start as u8;
            }
            part.end[start] = stop as u8;
            queue |= 1u64 << start;
            start = stop;
        }
        self.refine(&mut part, queue);
        self.search(part);
        let mut labeling = vec![0usize; n];
        for (x, l) in labeling.iter_mut().enumerate() {
            *l = self.best_labeling[x] as usize;
        }
        Canonical {
            form: CanonicalForm::from_rows(&self.best_rows[..n]),
            labeling,
        }
    }

    /// Splits cells until every cell is uniform with respect to every other
    /// cell. `queue` holds the start positions of cells still to be used as
    /// splitters; the smallest one is processed first.
    fn refine(&self, part: &mut Partition, mut queue: u64) {
        let n = self.n;
        while queue != 0 {
            let w = queue.trailing_zeros() as usize;
            queue &= queue - 1;
            let wmask = part.cell_mask(w);
            let mut start = 0;
            while start < n {
                let stop = part.end[start] as usize;
                if stop - start > 1 {
                    let mut keys = [0u32; MAX_POINTS];
                    let mut uniform = true;
                    for i in start..stop {
                        let v = part.order[i] as usize;
                        keys[v] = (self.p.u_hat(v).bits() & wmask).count_ones() << 8
                            | (self.p.f_hat(v).bits() & wmask).count_ones();
                        uniform &= keys[v] == keys[part.order[start] as usize];
                    }
                    if !uniform {
                        let slice = &mut part.order[start..stop];
                        slice.sort_unstable_by_key(|&v| keys[v as usize]);
                        let mut s = start;
                        while s < stop {
                            let k = keys[part.order[s] as usize];
                            let mut e = s + 1;
                            while e < stop && keys[part.order[e] as usize] == k {
                                e += 1;
                            }
                            for i in s..e {
                                part.cell[part.order[i] as usize] = s as u8;
                            }
                            part.end[s] = e as u8;
                            queue |= 1u64 << s;
                            s = e;
                        }
                    }
                }
                start = stop;
            }
        }
    }

    fn search(&mut self, part: Partition) {
        let target = part.cells().find(|&(s, e)| e - s > 1);
        let Some((start, stop)) = target else {
            self.leaf(&part);
            return;
        };
        let mut tried = [0usize; MAX_POINTS];
        let mut tried_len = 0;
        for i in start..stop {
            let v = part.order[i] as usize;
            let twin = tried[..tried_len].iter().any(|&u| {
                self.p.u_hat(u) == self.p.u_hat(v) && self.p.f_hat(u) == self.p.f_hat(v)
            });
            if twin {
                continue;
            }
            tried[tried_len] = v;
            tried_len += 1;

            let mut child = part;
            let pos = child.order[start..stop]
                .iter()
                .position(|&u| u as usize == v)
                .expect("vertex is in its cell")
                + start;
            child.order.swap(start, pos);
            child.cell[v] = start as u8;
            child.end[start] = start as u8 + 1;
            for j in start + 1..stop {
                child.cell[child.order[j] as usize] = start as u8 + 1;
            }
            child.end[start + 1] = stop as u8;
            self.refine(&mut child, 1u64 << start | 1u64 << (start + 1));
            self.search(child);
        }
    }

    fn leaf(&mut self, part: &Partition) {
        let n = self.n;
        let mut label = [0u8; MAX_POINTS];
        for i in 0..n {
            label[part.order[i] as usize] = i as u8;
        }
        let mut rows = [0u64; MAX_POINTS];
        for i in 0..n {
            let v = part.order[i] as usize;
            rows[i] = self
                .p
                .u_hat(v)
                .iter()
                .fold(0, |acc, y| acc | 1u64 << label[y]);
        }
        if !self.have_best || rows[..n] < self.best_rows[..n] {
            self.best_rows = rows;
            self.best_labeling = label;
            self.have_best = true;
        }
    }
}

/// Whether two points have the same strict down-set and strict up-set.
pub fn are_twins(p: &FinitePoset, a: usize, b: usize) -> bool {
    p.u_hat(a) == p.u_hat(b) && p.f_hat(a) == p.f_hat(b)
}

/// Points of `s` whose canonical labels are largest among `s`.
pub(crate) fn top_labelled(labeling: &[usize], s: PointSet) -> Option<usize> {
    s.iter().max_by_key(|&x| labeling[x])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces;

    #[test]
    fn relabelled_chain_has_same_form() {
        let a = spaces::chain(3);
        let b = FinitePoset::from_covers(3, &[(2, 0), (0, 1)]).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
    }

    #[test]
    fn w9_is_not_self_opposite() {
        let w = spaces::w9();
        assert_ne!(canonical_form(&w), canonical_form(&w.opposite()));
        let swapped = w.permute(&[1, 0, 2, 4, 3, 5, 7, 6, 8]);
        assert_eq!(canonical_form(&w), canonical_form(&swapped));
    }

    #[test]
    fn form_round_trips_to_poset() {
        let w = spaces::w9();
        let f = canonical_form(&w);
        let q = f.to_poset();
        assert!(isomorphic(&q, &w));
        assert_eq!(canonical_poset(&w), q);
        assert_eq!(f.points(), 9);
    }

    #[test]
    fn marked_orbits() {
        let w = spaces::w9();
        use spaces::w9::*;
        // a1 and a3 are swapped by the reflection c1<->c3, b1<->b3, a1<->a3.
        assert_eq!(canonical_form_marked(&w, A1), canonical_form_marked(&w, A3));
        assert_ne!(canonical_form_marked(&w, A1), canonical_form_marked(&w, A2));
        assert_ne!(canonical_form_marked(&w, B1), canonical_form_marked(&w, B2));
    }

    #[test]
    fn large_symmetric_spaces_finish() {
        let a = spaces::antichain(64);
        assert_eq!(canonical_form(&a).points(), 64);
        let s = spaces::sphere(20);
        assert_eq!(canonical_form(&s).points(), 42);
    }
}
