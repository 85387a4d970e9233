#![no_main]

//! Bytes as a cover list: the first byte picks the size, each following pair
//! of bytes one relation `i < j`. Invalid lists must be rejected cleanly;
//! valid ones must canonicalize consistently.

use finspace::canon::{canonical_form, canonical_poset};
use finspace::poset::FinitePoset;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&size, rest)) = data.split_first() else {
        return;
    };
    let n = usize::from(size % 17);
    let covers: Vec<(usize, usize)> = rest
        .chunks_exact(2)
        .map(|c| (usize::from(c[0] % 20), usize::from(c[1] % 20)))
        .collect();
    let Ok(p) = FinitePoset::from_covers(n, &covers) else {
        return;
    };
    p.check_invariants().unwrap();
    let form = canonical_form(&p);
    assert_eq!(form.points(), n);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.rotate_left(usize::from(size) % n.max(1));
    perm.reverse();
    assert_eq!(canonical_form(&p.permute(&perm)), form);
    assert_eq!(form.to_poset(), canonical_poset(&p));
});
