//! Integral simplicial homology of order complexes: absolute, reduced and
//! relative to a full subcomplex.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use thiserror::Error;

use crate::complex::OrderComplex;
use crate::poset::{FinitePoset, PointSet};
use crate::snf::{smith_normal_form, smith_normal_form_big, SnfResult};

/// A finitely generated abelian group `Z^rank ⊕ Z/t₁ ⊕ … ⊕ Z/t_k` in
/// invariant-factor form (`tᵢ ≥ 2`, `tᵢ | tᵢ₊₁`). Two groups are isomorphic
/// iff they compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, serde::Serialize)]
pub struct HomologyGroup {
    pub rank: usize,
    #[serde(serialize_with = "serialize_torsion")]
    pub torsion: Vec<BigUint>,
}

fn serialize_torsion<S: serde::Serializer>(t: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(t.iter().map(|v| v.to_string()))
}

impl HomologyGroup {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        HomologyGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    /// Builds a group from arbitrary cyclic torsion orders, normalizing them to
    /// invariant factors. Orders `0` and `1` are ignored.
    pub fn from_parts(rank: usize, orders: impl IntoIterator<Item = BigUint>) -> Self {
        let orders: Vec<BigUint> = orders.into_iter().filter(|o| *o > BigUint::from(1u8)).collect();
        let k = orders.len();
        let rows: Vec<Vec<BigInt>> = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| if i == j { BigInt::from(orders[i].clone()) } else { BigInt::from(0) })
                    .collect()
            })
            .collect();
        let snf = smith_normal_form_big(rows);
        HomologyGroup {
            rank,
            torsion: snf
                .torsion()
                .map(|t| t.magnitude().clone())
                .collect(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &HomologyGroup) -> HomologyGroup {
        Self::from_parts(
            self.rank + other.rank,
            self.torsion.iter().chain(&other.torsion).cloned(),
        )
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        f.write_str(&parts.join(" + "))
    }
}

/// Homology in degrees `0..=dim`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct HomologyProfile {
    pub reduced: bool,
    pub groups: Vec<HomologyGroup>,
}

impl HomologyProfile {
    /// The group in degree `k`; zero above the top degree.
    pub fn degree(&self, k: usize) -> HomologyGroup {
        self.groups.get(k).cloned().unwrap_or_default()
    }

    pub fn is_trivial(&self) -> bool {
        self.groups.iter().all(HomologyGroup::is_trivial)
    }

    pub fn betti(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.rank).collect()
    }

    /// First degree with a nonzero group.
    pub fn first_nontrivial(&self) -> Option<(usize, &HomologyGroup)> {
        self.groups.iter().enumerate().find(|(_, g)| !g.is_trivial())
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = if self.reduced { "H~" } else { "H" };
        let parts: Vec<String> = self
            .groups
            .iter()
            .enumerate()
            .map(|(k, g)| format!("{name}{k}={g}"))
            .collect();
        f.write_str(&parts.join(", "))
    }
}

/// Ranks and nontrivial invariant factors of the boundary maps of a chain
/// complex, degree by degree.
struct ChainData {
    /// `dims[k]` = rank of `C_k`.
    dims: Vec<usize>,
    /// `snfs[k]` = Smith form of `∂_k : C_k → C_{k−1}`; `snfs[0]` describes
    /// the augmentation (or nothing).
    snfs: Vec<SnfResult>,
}

impl ChainData {
    fn new(k: &OrderComplex, a: PointSet, augmented: bool) -> Self {
        let top = k.dim().map_or(0, |d| d + 1);
        let dims: Vec<usize> = (0..top).map(|d| k.relative_count(d, a)).collect();
        let mut snfs = Vec::with_capacity(top);
        let augmentation_rank = usize::from(augmented && dims.first().is_some_and(|&c| c > 0));
        snfs.push(SnfResult {
            diagonal: vec![BigInt::from(1); augmentation_rank],
        });
        for d in 1..top {
            snfs.push(smith_normal_form(&k.relative_boundary_matrix(d, a)));
        }
        ChainData { dims, snfs }
    }

    fn rank_of(&self, k: usize) -> usize {
        self.snfs.get(k).map_or(0, SnfResult::rank)
    }

    fn group(&self, k: usize) -> HomologyGroup {
        let Some(&c) = self.dims.get(k) else {
            return HomologyGroup::zero();
        };
        let rank = c - self.rank_of(k) - self.rank_of(k + 1);
        let torsion = self
            .snfs
            .get(k + 1)
            .map(|s| s.torsion().map(|t| t.magnitude().clone()).collect())
            .unwrap_or_default();
        HomologyGroup { rank, torsion }
    }
}

/// `H_*(K)` or, with `reduced`, `H̃_*(K)` (augmented at degree 0).
pub fn homology(k: &OrderComplex, reduced: bool) -> HomologyProfile {
    let data = ChainData::new(k, PointSet::EMPTY, reduced);
    HomologyProfile {
        reduced,
        groups: (0..data.dims.len()).map(|d| data.group(d)).collect(),
    }
}

/// `H̃_k(K)` for `k ≥ −1`. The only nonzero group in degree `−1` is that of
/// the empty complex, `H̃_{−1}(∅) = Z`.
pub fn reduced_homology_degree(k: &OrderComplex, degree: isize) -> HomologyGroup {
    match degree {
        d if d < -1 => HomologyGroup::zero(),
        -1 => HomologyGroup::free(usize::from(k.is_empty())),
        d => homology(k, true).degree(d as usize),
    }
}

/// Reduced homology of a finite space, through its order complex.
pub fn reduced_homology(p: &FinitePoset) -> HomologyProfile {
    homology(&OrderComplex::of_poset(p), true)
}

/// All groups `H_n(X, A)` for `n` in `0..=h(X)` from the quotient chain
/// complex `C(𝒦(X)) / C(𝒦(A))`.
pub fn relative_homology_profile(x: &FinitePoset, a: PointSet) -> HomologyProfile {
    let k = OrderComplex::of_poset(x);
    let data = ChainData::new(&k, a, false);
    HomologyProfile {
        reduced: false,
        groups: (0..data.dims.len()).map(|d| data.group(d)).collect(),
    }
}

/// `H_n(X, A)`.
pub fn relative_homology(x: &FinitePoset, a: PointSet, n: usize) -> HomologyGroup {
    relative_homology_profile(x, a).degree(n)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("points {0} and {1} are comparable, so the set is not an antichain")]
pub struct NotAntichain(pub usize, pub usize);

/// Both sides of `H_n(X, X−D) ≅ ⊕_{x∈D} H̃_{n−1}(Ĉ_x)` for `n` in
/// `0..=h(X)+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntichainSplitting {
    pub relative: Vec<HomologyGroup>,
    pub link_sum: Vec<HomologyGroup>,
}

impl AntichainSplitting {
    pub fn holds(&self) -> bool {
        self.relative == self.link_sum
    }
}

pub fn antichain_splitting(x: &FinitePoset, d: PointSet) -> Result<AntichainSplitting, NotAntichain> {
    let d = d.intersection(x.points());
    for p in d {
        if let Some(q) = x.c_hat(p).intersection(d).first() {
            return Err(NotAntichain(p.min(q), p.max(q)));
        }
    }
    let top = x.height() + 1;
    let rel = relative_homology_profile(x, x.points().difference(d));
    let relative: Vec<HomologyGroup> = (0..=top).map(|n| rel.degree(n)).collect();

    let links: Vec<OrderComplex> = d
        .iter()
        .map(|p| OrderComplex::of_poset(&x.subspace(x.c_hat(p)).0))
        .collect();
    let link_sum = (0..=top)
        .map(|n| {
            links.iter().fold(HomologyGroup::zero(), |acc, k| {
                acc.direct_sum(&reduced_homology_degree(k, n as isize - 1))
            })
        })
        .collect();
    Ok(AntichainSplitting { relative, link_sum })
}

/// Checks the antichain splitting of relative homology for `(X, D)`.
pub fn check_antichain_splitting(x: &FinitePoset, d: PointSet) -> Result<bool, NotAntichain> {
    antichain_splitting(x, d).map(|s| s.holds())
}
