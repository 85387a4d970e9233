//! Named spaces used throughout the library and its tests.

use crate::poset::{FinitePoset, PointSet};

/// Point indices of [`w9`], bottom level first.
pub mod w9 {
    pub const C1: usize = 0;
    pub const C2: usize = 1;
    pub const C3: usize = 2;
    pub const B1: usize = 3;
    pub const B2: usize = 4;
    pub const B3: usize = 5;
    pub const A1: usize = 6;
    pub const A2: usize = 7;
    pub const A3: usize = 8;

    /// Labels in index order.
    pub const LABELS: [&str; 9] = ["c1", "c2", "c3", "b1", "b2", "b3", "a1", "a2", "a3"];
}

/// Cover relations of the 9-point homotopically trivial non-contractible space.
pub const W9_COVERS: [(usize, usize); 13] = {
    use w9::*;
    [
        (B1, A1),
        (B1, A2),
        (B2, A1),
        (B2, A3),
        (B3, A2),
        (B3, A3),
        (C1, B1),
        (C1, B2),
        (C2, B1),
        (C2, B2),
        (C2, B3),
        (C3, B2),
        (C3, B3),
    ]
};

/// The 9-point homotopically trivial space without beat points: three
/// maximal points, three middle points and three minimal points, where the
/// middle point `b2` lies above all three minimal points.
pub fn w9() -> FinitePoset {
    FinitePoset::from_covers(9, &W9_COVERS).expect("static covers are acyclic")
}

/// `0 < 1 < .. < n-1`.
pub fn chain(n: usize) -> FinitePoset {
    let covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    FinitePoset::from_covers(n, &covers).expect("a chain is acyclic")
}

/// `n` pairwise incomparable points.
pub fn antichain(n: usize) -> FinitePoset {
    FinitePoset::from_strict_below(vec![PointSet::EMPTY; n]).expect("discrete order")
}

/// `𝕊^k S⁰`, the minimal finite model of the `k`-sphere (`2k + 2` points).
pub fn sphere(k: usize) -> FinitePoset {
    let mut x = antichain(2);
    for _ in 0..k {
        x = x.nh_suspension().expect("spheres of dimension < 31 fit");
    }
    x
}

/// Golden PosetFile documents shipped with the crate.
pub mod golden {
    pub const W9: &str = include_str!("../assets/w9.poset");
    pub const W9_OP: &str = include_str!("../assets/w9op.poset");
    pub const S0: &str = include_str!("../assets/s0.poset");
    pub const S1: &str = include_str!("../assets/s1.poset");
    pub const S2: &str = include_str!("../assets/s2.poset");
    pub const S3: &str = include_str!("../assets/s3.poset");

    /// `(file name, contents)` for every bundled document.
    pub const ALL: [(&str, &str); 6] = [
        ("w9.poset", W9),
        ("w9op.poset", W9_OP),
        ("s0.poset", S0),
        ("s1.poset", S1),
        ("s2.poset", S2),
        ("s3.poset", S3),
    ];
}
