#![no_main]

use finspace::format::PosetFile;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(file) = PosetFile::parse(text) else {
        return;
    };
    file.poset.check_invariants().unwrap();
    let normal = file.to_string();
    let again = PosetFile::parse(&normal).expect("serialized documents parse");
    assert_eq!(again.poset, file.poset);
    assert_eq!(again.to_string(), normal);
});
