//! Beat points, Stong cores and homotopy-type decisions for finite spaces.

use crate::canon::canonical_form;
use crate::poset::{FinitePoset, PointSet};

/// Direction of a beat point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BeatKind {
    /// `F̂_x` has a minimum.
    Up,
    /// `Û_x` has a maximum.
    Down,
}

/// One step of a core reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct BeatRemoval {
    /// Index of the removed point in the original space.
    pub point: usize,
    pub kind: BeatKind,
}

/// A core of a space together with the reduction that produced it.
#[derive(Debug, Clone)]
pub struct Core {
    pub space: FinitePoset,
    /// Removed points, in removal order.
    pub trace: Vec<BeatRemoval>,
    /// Original indices of the surviving points, ascending; point `i` of
    /// `space` is `retained[i]` of the input.
    pub retained: Vec<usize>,
}

/// Whether `s` (inside `p`) has a minimum element.
fn has_min(p: &FinitePoset, s: PointSet) -> bool {
    s.iter().any(|m| s.is_subset(p.f(m)))
}

fn has_max(p: &FinitePoset, s: PointSet) -> bool {
    s.iter().any(|m| s.is_subset(p.u(m)))
}

pub fn is_up_beat(p: &FinitePoset, x: usize) -> bool {
    has_min(p, p.f_hat(x))
}

pub fn is_down_beat(p: &FinitePoset, x: usize) -> bool {
    has_max(p, p.u_hat(x))
}

pub fn beat_kind(p: &FinitePoset, x: usize) -> Option<BeatKind> {
    if is_up_beat(p, x) {
        Some(BeatKind::Up)
    } else if is_down_beat(p, x) {
        Some(BeatKind::Down)
    } else {
        None
    }
}

/// All beat points, ascending.
pub fn beat_points(p: &FinitePoset) -> Vec<(usize, BeatKind)> {
    (0..p.len())
        .filter_map(|x| beat_kind(p, x).map(|k| (x, k)))
        .collect()
}

pub fn has_beat_points(p: &FinitePoset) -> bool {
    (0..p.len()).any(|x| beat_kind(p, x).is_some())
}

/// Removes beat points until none is left, always taking the beat point with
/// the smallest current index.
pub fn core(p: &FinitePoset) -> Core {
    core_with(p, |candidates| candidates[0].0)
}

/// Core reduction where `choose` picks the next point to remove among the
/// current beat points (given in current indices, ascending). Used to check
/// that the result does not depend on the removal order.
pub fn core_with<F>(p: &FinitePoset, mut choose: F) -> Core
where
    F: FnMut(&[(usize, BeatKind)]) -> usize,
{
    let mut space = p.clone();
    let mut retained: Vec<usize> = (0..p.len()).collect();
    let mut trace = Vec::new();
    loop {
        let beats = beat_points(&space);
        if beats.is_empty() {
            break;
        }
        let x = choose(&beats);
        let kind = beats
            .iter()
            .find(|(y, _)| *y == x)
            .map(|&(_, k)| k)
            .expect("chosen point must be a beat point");
        trace.push(BeatRemoval {
            point: retained[x],
            kind,
        });
        retained.remove(x);
        space = space.remove_point(x);
    }
    Core {
        space,
        trace,
        retained,
    }
}

/// A finite T₀-space is contractible iff its core is a single point.
pub fn is_contractible(p: &FinitePoset) -> bool {
    !p.is_empty() && core(p).space.len() == 1
}

/// Homotopy equivalence of finite T₀-spaces: isomorphic cores.
pub fn homotopy_equivalent(a: &FinitePoset, b: &FinitePoset) -> bool {
    let (ca, cb) = (core(a).space, core(b).space);
    ca.len() == cb.len() && canonical_form(&ca) == canonical_form(&cb)
}
