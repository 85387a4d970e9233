//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Tolerances are exact unless stated on the line.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use finspace::canon::{canonical_form, isomorphic};
use finspace::complex::order_complex;
use finspace::enumerate::{EnumerationFilter, Search};
use finspace::format::PosetFile;
use finspace::homology::{homology, reduced_homology};
use finspace::homotopy::{beat_points, core};
use finspace::pi1::{
    edge_path_presentation, is_homotopically_trivial, replay_collapse, TrivialityCertificate,
    TrivialityVerdict,
};
use finspace::poset::FinitePoset;
use finspace::spaces;
use finspace::verify::{verify, SearchReport, Status, Target, VerifyConfig};

const MIN9_RUNTIME: Duration = Duration::from_secs(60);
const CLASSIFY9_RUNTIME: Duration = Duration::from_secs(600);

struct Gate {
    failed: usize,
}

impl Gate {
    fn check(&mut self, id: &str, title: &str, result: Result<String, String>) {
        match result {
            Ok(detail) => println!("[PASS] {id} {title}: {detail}"),
            Err(detail) => {
                self.failed += 1;
                println!("[FAIL] {id} {title}: {detail}");
            }
        }
    }
}

fn run(target: Target, max_points: Option<usize>, jobs: usize) -> (SearchReport, Duration) {
    let cfg = VerifyConfig {
        max_points,
        jobs,
        ..VerifyConfig::default()
    };
    let start = Instant::now();
    let report = verify(target, &cfg).expect("valid configuration");
    (report, start.elapsed())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn golden(name: &str) -> FinitePoset {
    let text = spaces::golden::ALL
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| *t)
        .expect("bundled file");
    PosetFile::parse(text).expect("golden file parses").poset
}

fn criterion1() -> Result<String, String> {
    let (r, t) = run(Target::Min9, Some(8), 1);
    let total: u64 = r.classes_generated.iter().sum();
    ensure(r.status == Status::Pass, || r.to_text())?;
    ensure(r.findings.is_empty() && r.counterexamples.is_empty(), || "findings below 9 points".into())?;
    ensure(r.unknown.is_empty(), || format!("{} unknown verdicts", r.unknown.len()))?;
    ensure(r.classes_generated[3] == 5 && r.classes_generated[4] == 16, || {
        format!("class counts {:?}", r.classes_generated)
    })?;
    ensure(total <= 20_000, || format!("{total} classes"))?;
    ensure(t < MIN9_RUNTIME, || format!("took {t:?}, limit {MIN9_RUNTIME:?}"))?;
    Ok(format!(
        "{total} classes, {} cores, 0 findings, 0 unknown, {:.2}s (limit 60s)",
        r.classes_examined.iter().sum::<u64>(),
        t.as_secs_f64()
    ))
}

fn criterion2() -> Result<(String, SearchReport), String> {
    let (r, t) = run(Target::Classify9, Some(9), 1);
    ensure(r.status == Status::Pass, || r.to_text())?;
    ensure(r.unknown.is_empty(), || format!("{} unknown verdicts", r.unknown.len()))?;
    ensure(r.classes_generated[9] == 183_231, || {
        format!("{} nine-point classes", r.classes_generated[9])
    })?;
    let (w, wop) = (golden("w9.poset"), golden("w9op.poset"));
    ensure(!isomorphic(&w, &wop), || "W9 is isomorphic to its opposite".into())?;
    let mut expected = vec![canonical_form(&w).to_hex(), canonical_form(&wop).to_hex()];
    expected.sort();
    let found: Vec<String> = r.findings.iter().map(|f| f.canonical_form.clone()).collect();
    ensure(found == expected, || format!("found {found:?}, expected {expected:?}"))?;
    ensure(t < CLASSIFY9_RUNTIME, || format!("took {t:?}, limit {CLASSIFY9_RUNTIME:?}"))?;
    let cores = r.notes.iter().find(|n| n.starts_with("connected cores")).cloned().unwrap_or_default();
    Ok((
        format!(
            "183231 classes, {} cores on 9 points, exactly W9 and W9op, {:.2}s (limit 600s); {cores}",
            r.classes_examined[9],
            t.as_secs_f64()
        ),
        r,
    ))
}

fn criterion3() -> Result<String, String> {
    let (r, _) = run(Target::SphereMin, Some(9), 1);
    ensure(r.status == Status::Pass && r.counterexamples.is_empty(), || r.to_text())?;
    for n in [4, 6, 8] {
        let here: Vec<&String> = r
            .findings
            .iter()
            .filter(|f| f.points == n)
            .map(|f| &f.canonical_form)
            .collect();
        let sphere = canonical_form(&spaces::sphere(n / 2 - 1)).to_hex();
        ensure(here == vec![&sphere], || format!("size {n}: {here:?}"))?;
    }
    Ok(format!(
        "{} cores checked, equality classes at 4/6/8 are the 1/2/3-sphere models",
        r.classes_examined.iter().sum::<u64>()
    ))
}

fn criterion4() -> Result<String, String> {
    let w = golden("w9.poset");
    ensure(w == spaces::w9(), || "golden W9 differs from the construction".into())?;
    let k = order_complex(&w);
    ensure(k.counts() == vec![9, 22, 14], || format!("simplices {:?}", k.counts()))?;
    ensure(w.euler_characteristic() == 1, || format!("chi = {}", w.euler_characteristic()))?;
    ensure(beat_points(&w).is_empty(), || "beat points present".into())?;
    ensure(reduced_homology(&w).is_trivial(), || format!("{}", reduced_homology(&w)))?;
    let c = core(&w);
    ensure(c.space.len() == 9 && c.space == w, || "core is not W9 itself".into())?;
    match is_homotopically_trivial(&w) {
        TrivialityVerdict::Trivial(TrivialityCertificate::Collapse(cert)) => {
            ensure(replay_collapse(&k, &cert), || "certificate does not replay".into())?;
            Ok(format!(
                "chi = 9 - 22 + 14 = 1, no beat points, reduced homology 0, collapse certificate of {} steps replays, core has 9 points",
                cert.steps.len()
            ))
        }
        other => Err(format!("verdict {other:?}")),
    }
}

fn criterion5() -> Result<String, String> {
    let (r, _) = run(Target::Prop22, Some(6), 1);
    ensure(r.status == Status::Pass, || r.to_text())?;
    Ok(format!(
        "{} posets; {}",
        r.classes_examined.iter().sum::<u64>(),
        r.notes.join("; ")
    ))
}

fn criterion6() -> Result<String, String> {
    let mut parts = Vec::new();
    for (target, k) in [
        (Target::Lemma31, Some(8)),
        (Target::Lemma32, None),
        (Target::Lemma33, Some(9)),
        (Target::Prop35, Some(9)),
        (Target::Remark23, Some(8)),
    ] {
        let (r, _) = run(target, k, 1);
        ensure(r.status == Status::Pass, || r.to_text())?;
        parts.push(format!("{target}: {}", r.notes.last().cloned().unwrap_or_default()));
    }
    Ok(parts.join("; "))
}

fn criterion7() -> Result<String, String> {
    let posets: Vec<FinitePoset> = Search::new(1..=7, EnumerationFilter::all())
        .run(|n| Some(n.poset.clone()))
        .items;
    let mut complexes = 0;
    for p in posets.iter().chain([&spaces::w9(), &spaces::w9().opposite(), &spaces::sphere(3)]) {
        let k = order_complex(p);
        let h = homology(&k, false);
        let alt: i64 = h
            .betti()
            .iter()
            .enumerate()
            .map(|(d, &b)| if d % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum();
        ensure(alt == p.euler_characteristic(), || format!("Euler-Poincare fails on {:?}", p.covers()))?;
        if p.is_connected() {
            let pres = edge_path_presentation(&k, 0).map_err(|e| e.to_string())?;
            ensure(pres.abelianization() == h.degree(1), || {
                format!("abelianization differs from H1 on {:?}", p.covers())
            })?;
        }
        for d in 2..=k.dim().unwrap_or(0) {
            ensure(k.boundary_matrix(d - 1).mul(&k.boundary_matrix(d)).is_zero(), || {
                format!("boundary squared nonzero on {:?}", p.covers())
            })?;
        }
        complexes += 1;
    }
    common::snf_against_oracle(0x5eed, 1000)?;
    Ok(format!(
        "{} posets up to 7 points: Euler-Poincare, abelianization = H1, boundary squared = 0 on {complexes} complexes; SNF = determinantal divisors on 1000 random matrices",
        posets.len()
    ))
}

fn criterion8(single: &SearchReport) -> Result<String, String> {
    let (eight, _) = run(Target::Classify9, Some(9), 8);
    ensure(single.to_text() == eight.to_text(), || "text reports differ".into())?;
    ensure(single.to_json() == eight.to_json(), || "structured reports differ".into())?;
    Ok(format!(
        "jobs=1 and jobs=8 reports byte-identical ({} text bytes, {} structured bytes)",
        single.to_text().len(),
        single.to_json().len()
    ))
}

fn main() -> ExitCode {
    let mut gate = Gate { failed: 0 };
    gate.check("1", "no homotopically trivial non-contractible space below 9 points", criterion1());
    let classify = criterion2();
    let single = classify.as_ref().ok().map(|(_, r)| r.clone());
    gate.check(
        "2",
        "9-point classification is exactly W9 and W9op",
        classify.map(|(s, _)| s),
    );
    gate.check("3", "cores have at least 2h+2 points, equality only for sphere models", criterion3());
    gate.check("4", "W9 invariants", criterion4());
    gate.check("5", "relative homology splits over antichains (up to 6 points)", criterion5());
    gate.check("6", "lemma suite", criterion6());
    gate.check("7", "numerical cross-checks", criterion7());
    let det = match single {
        Some(r) => criterion8(&r),
        None => Err("criterion 2 produced no report".into()),
    };
    gate.check("8", "determinism across worker counts", det);
    if gate.failed == 0 {
        println!("acceptance: all 8 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {} of 8 criteria failed", gate.failed);
        ExitCode::FAILURE
    }
}
