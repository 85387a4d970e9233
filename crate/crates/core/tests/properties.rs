mod common;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use finspace::canon::{canonical_form, isomorphic};
use finspace::complex::{order_complex, OrderComplex};
use finspace::enumerate::{EnumerationFilter, Search};
use finspace::format::PosetFile;
use finspace::homology::{antichain_splitting, homology, reduced_homology, HomologyGroup};
use finspace::homotopy::{core, core_with, has_beat_points};
use finspace::pi1::{edge_path_presentation, is_homotopically_trivial, verify_certificate, TrivialityVerdict};
use finspace::poset::{FinitePoset, PointSet};
use finspace::spaces;

fn all_posets(max: usize) -> Vec<FinitePoset> {
    Search::new(1..=max, EnumerationFilter::all())
        .run(|n| Some(n.poset.clone()))
        .items
}

/// A random poset: a random DAG on `n` points closed under transitivity.
fn random_poset(rng: &mut impl Rng, n: usize, density: f64) -> FinitePoset {
    let mut covers = Vec::new();
    for j in 0..n {
        for i in 0..j {
            if rng.gen_bool(density) {
                covers.push((i, j));
            }
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    FinitePoset::from_covers(n, &covers).unwrap().permute(&perm)
}

#[test]
fn canonical_form_is_labelling_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut cases = vec![spaces::w9(), spaces::w9().opposite(), spaces::sphere(4), spaces::chain(6)];
    for _ in 0..20 {
        let n = rng.gen_range(1..=14);
        cases.push(random_poset(&mut rng, n, 0.3));
    }
    for p in cases {
        let form = canonical_form(&p);
        let mut perm: Vec<usize> = (0..p.len()).collect();
        for _ in 0..100 {
            perm.shuffle(&mut rng);
            assert_eq!(canonical_form(&p.permute(&perm)), form);
        }
    }
}

#[test]
fn opposite_and_w9_are_distinct() {
    let w = spaces::w9();
    assert!(!isomorphic(&w, &w.opposite()));
    // Distinguished by the middle level: b2 has three points below in W9.
    let profile = |p: &FinitePoset| {
        let mut v: Vec<(usize, usize)> =
            p.mid_points().iter().map(|b| (p.u_hat(b).len(), p.f_hat(b).len())).collect();
        v.sort();
        v
    };
    assert_eq!(profile(&w), vec![(2, 2), (2, 2), (3, 2)]);
    assert_eq!(profile(&w.opposite()), vec![(2, 2), (2, 2), (2, 3)]);
}

#[test]
fn core_does_not_depend_on_removal_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for p in all_posets(7) {
        let reference = canonical_form(&core(&p).space);
        for _ in 0..2 {
            let c = core_with(&p, |beats| beats[rng.gen_range(0..beats.len())].0);
            assert!(!has_beat_points(&c.space));
            assert_eq!(canonical_form(&c.space), reference);
        }
    }
}

#[test]
fn euler_poincare_on_small_posets() {
    for p in all_posets(7) {
        let h = homology(&order_complex(&p), false);
        let alt: i64 = h
            .betti()
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum();
        assert_eq!(alt, p.euler_characteristic());
        assert_eq!(order_complex(&p).euler_characteristic(), p.euler_characteristic());
    }
}

#[test]
fn abelianized_presentation_matches_h1() {
    for p in all_posets(7) {
        if !p.is_connected() {
            continue;
        }
        let k = order_complex(&p);
        let pres = edge_path_presentation(&k, 0).unwrap();
        assert_eq!(pres.abelianization(), homology(&k, false).degree(1));
    }
}

#[test]
fn trivial_verdicts_carry_replayable_certificates() {
    let mut trivial = 0;
    for p in all_posets(7) {
        match is_homotopically_trivial(&p) {
            TrivialityVerdict::Trivial(cert) => {
                trivial += 1;
                assert!(verify_certificate(&p, &cert));
            }
            TrivialityVerdict::Nontrivial(w) => {
                assert!(!w.group.is_trivial());
            }
            TrivialityVerdict::Unknown { .. } => panic!("unknown verdict below 8 points"),
        }
    }
    assert!(trivial > 0);
}

#[test]
fn boundary_of_boundary_vanishes() {
    for p in all_posets(6).into_iter().chain([spaces::w9(), spaces::sphere(4)]) {
        let k = order_complex(&p);
        for d in 2..=k.dim().unwrap_or(0) {
            assert!(k.boundary_matrix(d - 1).mul(&k.boundary_matrix(d)).is_zero());
        }
    }
}

#[test]
fn homology_is_invariant_under_opposite() {
    for p in all_posets(6) {
        assert_eq!(reduced_homology(&p), reduced_homology(&p.opposite()));
    }
}

#[test]
fn height_equals_complex_dimension() {
    for p in all_posets(6) {
        assert_eq!(order_complex(&p).dim(), Some(p.height()));
    }
}

#[test]
fn splitting_detects_second_homology() {
    // A core with middle points b1 < b2; the antichain {c1, c3} sees H2.
    let (c1, c2, c3, b1, b2, b3, a1, a2, a3) = (0, 1, 2, 3, 4, 5, 6, 7, 8);
    let x = FinitePoset::from_covers(
        9,
        &[
            (b1, b2),
            (b2, a1),
            (b2, a2),
            (b1, a3),
            (b3, a1),
            (b3, a2),
            (b3, a3),
            (c1, b1),
            (c1, b3),
            (c2, b1),
            (c2, b3),
            (c3, b2),
            (c3, b3),
        ],
    )
    .unwrap();
    assert!(!has_beat_points(&x));
    let d: PointSet = [c1, c3].into_iter().collect();
    let s = antichain_splitting(&x, d).unwrap();
    assert!(s.holds());
    assert!(!s.relative[2].is_trivial());
    let links: Vec<HomologyGroup> = [c1, c3]
        .iter()
        .map(|&c| homology(&order_complex(&x.subspace(x.f_hat(c)).0), true).degree(1))
        .collect();
    assert_eq!(s.relative[2], links[0].direct_sum(&links[1]));
}

#[test]
fn smith_form_matches_determinantal_divisors() {
    common::snf_against_oracle(3, 1000).unwrap();
}

fn arb_poset() -> impl Strategy<Value = FinitePoset> {
    (1usize..=12, any::<u64>()).prop_map(|(n, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_poset(&mut rng, n, 0.35)
    })
}

proptest! {
    #[test]
    fn poset_files_round_trip(p in arb_poset()) {
        let text = PosetFile::new("x", p.clone()).to_string();
        let parsed = PosetFile::parse(&text).unwrap();
        prop_assert_eq!(&parsed.poset, &p);
        prop_assert_eq!(parsed.to_string(), text);
    }

    #[test]
    fn opposite_is_an_involution(p in arb_poset()) {
        prop_assert_eq!(p.opposite().opposite(), p.clone());
        prop_assert_eq!(p.opposite().euler_characteristic(), p.euler_characteristic());
        prop_assert_eq!(
            canonical_form(&core(&p.opposite()).space),
            canonical_form(&core(&p).space.opposite())
        );
    }

    #[test]
    fn suspension_shifts_homology(p in arb_poset()) {
        let h = reduced_homology(&p);
        let s = reduced_homology(&p.nh_suspension().unwrap());
        for k in 0..=p.height() {
            prop_assert_eq!(s.degree(k + 1), h.degree(k));
        }
        prop_assert!(s.degree(0).is_trivial());
    }

    #[test]
    fn permuted_complexes_have_equal_homology(p in arb_poset(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut perm: Vec<usize> = (0..p.len()).collect();
        perm.shuffle(&mut rng);
        let a: OrderComplex = order_complex(&p);
        let b = order_complex(&p.permute(&perm));
        prop_assert_eq!(a.counts(), b.counts());
        prop_assert_eq!(homology(&a, true), homology(&b, true));
    }
}

#[test]
fn fast_mode_agrees_with_full_search() {
    use finspace::verify::{verify, Target, VerifyConfig};
    for (target, k) in [(Target::Min9, 8), (Target::Classify9, 9), (Target::Prop35, 8), (Target::Lemma33, 9)] {
        let run = |fast| {
            let cfg = VerifyConfig {
                max_points: Some(k),
                fast,
                ..VerifyConfig::default()
            };
            verify(target, &cfg).unwrap()
        };
        let (slow, quick) = (run(false), run(true));
        assert_eq!(slow.status, quick.status, "{target}");
        assert_eq!(slow.findings, quick.findings, "{target}");
        assert_eq!(slow.counterexamples, quick.counterexamples, "{target}");
        assert_eq!(slow.unknown, quick.unknown, "{target}");
    }
}
