//! Replays the checked-in fuzz corpus so the seeds are exercised by
//! `cargo test` without a fuzzing toolchain.

use std::fs;
use std::path::PathBuf;

use finspace::canon::{canonical_form, canonical_poset};
use finspace::format::PosetFile;
use finspace::poset::FinitePoset;

fn seeds(target: &str) -> Vec<(String, Vec<u8>)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fuzz/corpus").join(target);
    let mut out: Vec<(String, Vec<u8>)> = fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let path = e.unwrap().path();
            (path.file_name().unwrap().to_string_lossy().into_owned(), fs::read(&path).unwrap())
        })
        .collect();
    out.sort();
    out
}

#[test]
fn poset_file_seeds() {
    let mut accepted = Vec::new();
    for (name, data) in seeds("parse_poset_file") {
        let text = String::from_utf8(data).unwrap();
        let Ok(file) = PosetFile::parse(&text) else {
            continue;
        };
        accepted.push(name);
        let normal = file.to_string();
        let again = PosetFile::parse(&normal).unwrap();
        assert_eq!(again.poset, file.poset);
        assert_eq!(again.to_string(), normal);
    }
    assert_eq!(
        accepted,
        [
            "chain_with_comments.poset",
            "empty.poset",
            "s0.poset",
            "s1.poset",
            "s2.poset",
            "s3.poset",
            "w9.poset",
            "w9op.poset"
        ]
    );
}

#[test]
fn cover_list_seeds() {
    let mut valid = 0;
    for (_, data) in seeds("covers_canonical") {
        let (&size, rest) = data.split_first().unwrap();
        let n = usize::from(size % 17);
        let covers: Vec<(usize, usize)> = rest
            .chunks_exact(2)
            .map(|c| (usize::from(c[0] % 20), usize::from(c[1] % 20)))
            .collect();
        let Ok(p) = FinitePoset::from_covers(n, &covers) else {
            continue;
        };
        valid += 1;
        let mut perm: Vec<usize> = (0..n).collect();
        perm.reverse();
        assert_eq!(canonical_form(&p.permute(&perm)), canonical_form(&p));
        assert_eq!(canonical_form(&p).to_poset(), canonical_poset(&p));
    }
    assert_eq!(valid, 4);
}
