//! Exhaustive verification targets and their reports.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::canon::{canonical_form, CanonicalForm};
use crate::complex::OrderComplex;
use crate::enumerate::{EnumerationFilter, Search, MAX_ENUMERATION_POINTS};
use crate::format::PosetFile;
use crate::homology::{antichain_splitting, homology, reduced_homology};
use crate::homotopy::{has_beat_points, is_contractible};
use crate::pi1::{is_homotopically_trivial_with_budget, TrivialityVerdict, DEFAULT_TIETZE_BUDGET};
use crate::poset::{FinitePoset, PointSet};
use crate::spaces;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Target {
    Min9,
    Classify9,
    SphereMin,
    Prop35,
    Lemma31,
    Lemma32,
    Lemma33,
    Lemma34,
    Prop22,
    Remark23,
}

impl Target {
    pub const ALL: [Target; 10] = [
        Target::Min9,
        Target::Classify9,
        Target::SphereMin,
        Target::Prop35,
        Target::Lemma31,
        Target::Lemma32,
        Target::Lemma33,
        Target::Lemma34,
        Target::Prop22,
        Target::Remark23,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Target::Min9 => "min9",
            Target::Classify9 => "classify9",
            Target::SphereMin => "sphere-min",
            Target::Prop35 => "prop35",
            Target::Lemma31 => "lemma31",
            Target::Lemma32 => "lemma32",
            Target::Lemma33 => "lemma33",
            Target::Lemma34 => "lemma34",
            Target::Prop22 => "prop22",
            Target::Remark23 => "remark23",
        }
    }

    /// Largest size searched when no bound is given. `None` for targets that
    /// check fixed spaces.
    pub fn default_max_points(self) -> Option<usize> {
        match self {
            Target::Min9 | Target::Lemma31 | Target::Remark23 => Some(8),
            Target::Prop22 => Some(6),
            Target::Lemma32 => None,
            _ => Some(9),
        }
    }

    pub fn claim(self) -> &'static str {
        match self {
            Target::Min9 => "every homotopically trivial space on fewer than 9 points is contractible",
            Target::Classify9 => {
                "the homotopically trivial non-contractible spaces on 9 points are W9 and its opposite"
            }
            Target::SphereMin => {
                "a core other than a point has at least 2h+2 points, with equality only for the minimal sphere models"
            }
            Target::Prop35 => "homotopically trivial spaces of height at most 1 are contractible",
            Target::Lemma31 => "in a core, a > b implies #U(a) >= #U(b) + 2 and #F(b) >= #F(a) + 2 (strict sets)",
            Target::Lemma32 => "every subspace of W9 and of its opposite has vanishing H2",
            Target::Lemma33 => {
                "in a homotopically trivial core of height 2, middle points sharing two points above share at most one below"
            }
            Target::Lemma34 => {
                "if the suspension of X is homotopically trivial then so is X (checked on enumerated X)"
            }
            Target::Prop22 => {
                "H_n(X, X-D) is the direct sum of the reduced H_(n-1) of the links of the points of an antichain D"
            }
            Target::Remark23 => {
                "connected spaces have disjoint mxl and mnl; in a core non-maximal points lie below two maximal points (dually for minimal); a core with two maximal points is a suspension"
            }
        }
    }
}

impl FromStr for Target {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, VerifyError> {
        Target::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| VerifyError::UnknownTarget(s.to_string()))
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown target `{0}`")]
    UnknownTarget(String),
    #[error("--max-points must be between {min} and {max} for {target}")]
    PointsOutOfRange { target: Target, min: usize, max: usize },
    #[error("{0} checks fixed spaces and takes no --max-points")]
    NoPointBound(Target),
    #[error("--jobs must be at least 1")]
    NoWorkers,
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub max_points: Option<usize>,
    pub jobs: usize,
    pub budget: usize,
    /// Skip posets with a maximum or minimum before computing verdicts.
    pub fast: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_points: None,
            jobs: 1,
            budget: DEFAULT_TIETZE_BUDGET,
            fast: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Counterexample,
    Unknown,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Counterexample => 1,
            Status::Unknown => 2,
        }
    }
}

/// A class singled out by a search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub points: usize,
    pub canonical_form: String,
    pub detail: String,
    /// The class as a PosetFile document, in canonical labelling.
    pub poset: String,
}

impl Finding {
    fn new(p: &FinitePoset, detail: impl Into<String>) -> Self {
        let form = canonical_form(p);
        Self::with_form(&form, detail)
    }

    fn with_form(form: &CanonicalForm, detail: impl Into<String>) -> Self {
        let hex = form.to_hex();
        let name = format!("n{}-{hex}", form.points());
        Finding {
            points: form.points(),
            canonical_form: hex,
            detail: detail.into(),
            poset: PosetFile::new(name, form.to_poset()).to_string(),
        }
    }
}

/// Result of one verification run. Everything in it is determined by the
/// target and configuration; timing is reported separately.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub schema_version: u32,
    pub target: Target,
    pub claim: String,
    pub max_points: Option<usize>,
    pub tietze_budget: usize,
    pub fast: bool,
    /// Classes reached by the walk, indexed by size.
    pub classes_generated: Vec<u64>,
    /// Classes passing the target's filter, indexed by size.
    pub classes_examined: Vec<u64>,
    /// Classes the target reports on (for example the spaces found).
    pub findings: Vec<Finding>,
    pub counterexamples: Vec<Finding>,
    pub unknown: Vec<Finding>,
    pub notes: Vec<String>,
    pub status: Status,
}

impl SearchReport {
    fn new(target: Target, cfg: &VerifyConfig, max_points: Option<usize>) -> Self {
        SearchReport {
            schema_version: SCHEMA_VERSION,
            target,
            claim: target.claim().to_string(),
            max_points,
            tietze_budget: cfg.budget,
            fast: cfg.fast,
            classes_generated: Vec::new(),
            classes_examined: Vec::new(),
            findings: Vec::new(),
            counterexamples: Vec::new(),
            unknown: Vec::new(),
            notes: Vec::new(),
            status: Status::Pass,
        }
    }

    fn finish(mut self) -> Self {
        for list in [&mut self.findings, &mut self.counterexamples, &mut self.unknown] {
            list.sort_by(|a, b| (a.points, &a.canonical_form).cmp(&(b.points, &b.canonical_form)));
        }
        self.status = if !self.counterexamples.is_empty() {
            Status::Counterexample
        } else if !self.unknown.is_empty() {
            Status::Unknown
        } else {
            Status::Pass
        };
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "target: {}", self.target);
        let _ = writeln!(out, "claim: {}", self.claim);
        match self.max_points {
            Some(k) => _ = writeln!(out, "max points: {k}"),
            None => _ = writeln!(out, "max points: fixed spaces"),
        }
        let _ = writeln!(out, "tietze budget: {}", self.tietze_budget);
        if self.fast {
            let _ = writeln!(out, "fast mode: skipping spaces with a maximum or minimum");
        }
        let per_size = |v: &[u64]| {
            let parts: Vec<String> = v
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(|(n, c)| format!("{n}:{c}"))
                .collect();
            format!("{} ({})", v.iter().sum::<u64>(), parts.join(" "))
        };
        if !self.classes_generated.is_empty() {
            let _ = writeln!(out, "classes generated: {}", per_size(&self.classes_generated));
            let _ = writeln!(out, "classes examined: {}", per_size(&self.classes_examined));
        }
        for note in &self.notes {
            let _ = writeln!(out, "note: {note}");
        }
        for (title, list) in [
            ("findings", &self.findings),
            ("counterexamples", &self.counterexamples),
            ("unknown", &self.unknown),
        ] {
            let _ = writeln!(out, "{title}: {}", list.len());
            for f in list {
                let _ = writeln!(out, "  - {} points, form {}: {}", f.points, f.canonical_form, f.detail);
                for line in f.poset.lines() {
                    let _ = writeln!(out, "    {line}");
                }
            }
        }
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Counterexample => "FAIL (counterexample)",
            Status::Unknown => "UNKNOWN",
        };
        let _ = writeln!(out, "status: {status}");
        out
    }
}

/// What the visitor of a search hands back for one class.
enum Mark {
    Finding(Finding),
    Counterexample(Finding),
    Unknown(Finding),
    Count(&'static str, u64),
}

fn absorb(report: &mut SearchReport, marks: Vec<Mark>) -> Vec<(&'static str, u64)> {
    let mut counts: Vec<(&'static str, u64)> = Vec::new();
    for m in marks {
        match m {
            Mark::Finding(f) => report.findings.push(f),
            Mark::Counterexample(f) => report.counterexamples.push(f),
            Mark::Unknown(f) => report.unknown.push(f),
            Mark::Count(key, c) => match counts.iter_mut().find(|(k, _)| *k == key) {
                Some((_, v)) => *v += c,
                None => counts.push((key, c)),
            },
        }
    }
    counts
}

fn count_of(counts: &[(&str, u64)], key: &str) -> u64 {
    counts.iter().find(|(k, _)| *k == key).map_or(0, |&(_, v)| v)
}

fn per_size_note(label: &str, v: &[u64]) -> String {
    let parts: Vec<String> = v.iter().enumerate().map(|(n, c)| format!("{n}:{c}")).collect();
    format!("{label}: {}", parts.join(" "))
}

fn run_search<F>(report: &mut SearchReport, search: Search, visit: F) -> Vec<(&'static str, u64)>
where
    F: Fn(&FinitePoset, &CanonicalForm) -> Vec<Mark> + Sync,
{
    let outcome = search.run(|node| {
        let marks = visit(&node.poset, &node.form);
        (!marks.is_empty()).then_some(marks)
    });
    report.classes_generated = outcome.generated;
    report.classes_examined = outcome.accepted;
    absorb(report, outcome.items.into_iter().flatten().collect())
}

pub fn verify(target: Target, cfg: &VerifyConfig) -> Result<SearchReport, VerifyError> {
    if cfg.jobs == 0 {
        return Err(VerifyError::NoWorkers);
    }
    let max_points = match (target.default_max_points(), cfg.max_points) {
        (None, Some(_)) => return Err(VerifyError::NoPointBound(target)),
        (None, None) => None,
        (Some(d), k) => {
            let k = k.unwrap_or(d);
            let (min, max) = match target {
                Target::Classify9 => (1, 9),
                Target::SphereMin | Target::Lemma34 => (2, MAX_ENUMERATION_POINTS),
                _ => (1, MAX_ENUMERATION_POINTS),
            };
            if !(min..=max).contains(&k) {
                return Err(VerifyError::PointsOutOfRange { target, min, max });
            }
            Some(k)
        }
    };
    let mut report = SearchReport::new(target, cfg, max_points);
    let k = max_points.unwrap_or(0);
    match target {
        Target::Min9 => min9(&mut report, cfg, k),
        Target::Classify9 => classify9(&mut report, cfg, k),
        Target::SphereMin => sphere_min(&mut report, cfg, k),
        Target::Prop35 => prop35(&mut report, cfg, k),
        Target::Lemma31 => lemma31(&mut report, cfg, k),
        Target::Lemma32 => lemma32(&mut report),
        Target::Lemma33 => lemma33(&mut report, cfg, k),
        Target::Lemma34 => lemma34(&mut report, cfg, k),
        Target::Prop22 => prop22(&mut report, cfg, k),
        Target::Remark23 => remark23(&mut report, cfg, k),
    }
    Ok(report.finish())
}

fn core_filter(cfg: &VerifyConfig) -> EnumerationFilter {
    EnumerationFilter {
        skip_extremum: cfg.fast,
        ..EnumerationFilter::cores()
    }
}

/// Verdict marks for a core: homotopically trivial cores other than the point
/// are non-contractible, so they are findings.
fn verdict_marks(p: &FinitePoset, form: &CanonicalForm, budget: usize) -> Vec<Mark> {
    if p.len() == 1 {
        return Vec::new();
    }
    match is_homotopically_trivial_with_budget(p, budget) {
        TrivialityVerdict::Trivial(cert) => vec![Mark::Finding(Finding::with_form(
            form,
            format!("homotopically trivial core (certificate: {})", cert.route()),
        ))],
        TrivialityVerdict::Unknown { steps } => vec![Mark::Unknown(Finding::with_form(
            form,
            format!("acyclic, pi1 undecided after {steps} steps"),
        ))],
        TrivialityVerdict::Nontrivial(_) => Vec::new(),
    }
}

/// Connected cores up to `k` points and their verdicts. Disconnected spaces
/// are never homotopically trivial (their reduced H0 is nonzero), so only
/// connected cores need verdicts.
fn core_census(report: &mut SearchReport, cfg: &VerifyConfig, sizes: std::ops::RangeInclusive<usize>) {
    let max = *sizes.end();
    let budget = cfg.budget;
    let search = Search::new(sizes, core_filter(cfg)).jobs(cfg.jobs);
    let counts = run_search(report, search, |p, form| {
        if !p.is_connected() {
            return Vec::new();
        }
        let mut marks = vec![Mark::Count(size_key(p.len()), 1)];
        marks.extend(verdict_marks(p, form, budget));
        marks
    });
    let connected: Vec<u64> = (0..=max).map(|n| count_of(&counts, size_key(n))).collect();
    report.notes.push(per_size_note("cores per size", &report.classes_examined.clone()));
    report.notes.push(per_size_note("connected cores per size", &connected));
}

fn size_key(n: usize) -> &'static str {
    const KEYS: [&str; 11] = ["c0", "c1", "c2", "c3", "c4", "c5", "c6", "c7", "c8", "c9", "c10"];
    KEYS[n]
}

fn min9(report: &mut SearchReport, cfg: &VerifyConfig, k: usize) {
    core_census(report, cfg, 1..=k);
    let (small, rest): (Vec<_>, Vec<_>) =
        std::mem::take(&mut report.findings).into_iter().partition(|f| f.points < 9);
    report.counterexamples = small;
    report.findings = rest;
}

fn classify9(report: &mut SearchReport, cfg: &VerifyConfig, k: usize) {
    core_census(report, cfg, k..=k);
    let mut expected: Vec<String> = if k == 9 {
        [spaces::w9(), spaces::w9().opposite()]
            .iter()
            .map(|p| canonical_form(p).to_hex())
            .collect()
    } else {
        Vec::new()
    };
    expected.sort();
    let mut found: Vec<String> = report.findings.iter().map(|f| f.canonical_form.clone()).collect();
    found.sort();
    report.notes.push(format!(
        "{} homeomorphism classes found, {} expected",
        found.len(),
        expected.len()
    ));
    if found != expected {
        for f in &report.findings {
            if !expected.contains(&f.canonical_form) {
                report.counterexamples.push(f.clone());
            }
        }
        for e in expected.iter().filter(|e| !found.contains(e)) {
            report.notes.push(format!("missing expected class {e}"));
            let form = canonical_of_hex(e);
            report
                .counterexamples
                .push(Finding::new(&form, "expected class not found"));
        }
    } else if k == 9 {
        report.notes.push("the classes are W9 and its opposite, which are not homeomorphic".into());
    }
}

fn canonical_of_hex(hex: &str) -> FinitePoset {
    [spaces::w9(), spaces::w9().opposite()]
        .into_iter()
        .find(|p| canonical_form(p).to_hex() == hex)
        .expect("expected forms come from W9")
}

fn sphere_min(report: &mut SearchReport, cfg: &VerifyConfig, k: usize) {
    let search = Search::new(2..=k, core_filter(cfg)).jobs(cfg.jobs);
    run_search(report, search, |p, form| {
        let h = p.height();
        let n = p.len();
        if n < 2 * h + 2 {
            vec![Mark::Counterexample(Finding::with_form(form, format!("height {h} with only {n} points")))]
        } else if n == 2 * h + 2 {
            vec![Mark::Finding(Finding::with_form(form, format!("equality case, height {h}")))]
        } else {
            Vec::new()
        }
    });
    for n in (2..=k).step_by(2) {
        let sphere = canonical_form(&spaces::sphere(n / 2 - 1)).to_hex();
        let here: Vec<&Finding> = report.findings.iter().filter(|f| f.points == n).collect();
        let ok = here.len() == 1 && here[0].canonical_form == sphere;
        report.notes.push(format!(
            "size {n}: {} equality class(es), {} the {}-sphere model",
            here.len(),
            if ok { "exactly" } else { "not exactly" },
            n / 2 - 1
        ));
        if !ok {
            let extra: Vec<Finding> = here
                .into_iter()
                .filter(|f| f.canonical_form != sphere)
                .cloned()
                .collect();
            report.counterexamples.extend(extra);
            if !report.findings.iter().any(|f| f.canonical_form == sphere) {
                report
                    .counterexamples
                    .push(Finding::new(&spaces::sphere(n / 2 - 1), "sphere model missing"));
            }
        }
    }
    if !report.findings.iter().all(|f| f.points % 2 == 0) {
        report.notes.push("equality class at odd size".into());
    }
}

fn prop35(report: &mut SearchReport, cfg: &VerifyConfig, k: usize) {
    let filter = EnumerationFilter {
        max_height: Some(1),
        skip_extremum: cfg.fast,
        ..EnumerationFilter::all()
    };
    let budget = cfg.budget;
    let search = Search::new(1..=k, filter).jobs(cfg.jobs);
    let counts = run_search(report, search, |p, form| {
        match is_homotopically_trivial_with_budget(p, budget) {
            TrivialityVerdict::Trivial(_) if !is_contractible(p) => vec![Mark::Counterexample(
                Finding::with_form(form, "homotopically trivial but not contractible"),
            )],
            TrivialityVerdict::Trivial(_) => vec![Mark::Count("trivial", 1)],
            TrivialityVerdict::Unknown { steps } => vec![Mark::Unknown(Finding::with_form(
                form,
                format!("pi1 undecided after {steps} steps"),
            ))],
            TrivialityVerdict::Nontrivial(_) => Vec::new(),
        }
    });
    report.notes.push(format!(
        "{} homotopically trivial spaces of height at most 1, all contractible unless listed",
        count_of(&counts, "trivial")
    ));
}

fn lemma31(report: &mut SearchReport, cfg: &VerifyConfig, k: usize) {
    let search = Search::new(1..=k, core_filter(cfg)).jobs(cfg.jobs);
    let counts = run_search(report, search, |p, form| {
        let mut pairs = 0;
        for a in 0..p.len() {
            for b in p.u_hat(a) {
                pairs += 1;
                let up = p.u_hat(a).len() >= p.u_hat(b).len() + 2;
                let down = p.f_hat(b).len() >= p.f_hat(a).len() + 2;
                if !(up && down) {
                    return vec![Mark::Counterexample(Finding::with_form(
                        form,
                        format!("gap fails for {b} < {a}"),
                    ))];
                }
            }
        }
        vec![Mark::Count("pairs", pairs)]
    });
    report
        .notes
        .push(format!("{} comparable pairs checked", count_of(&counts, "pairs")));
}

fn lemma32(report: &mut SearchReport) {
    let mut checked = 0;
    for (name, x) in [("W9", spaces::w9()), ("W9op", spaces::w9().opposite())] {
        let trivial = is_homotopically_trivial_with_budget(&x, report.tietze_budget).is_trivial();
        report.notes.push(format!(
            "{name}: height {}, homotopically trivial: {trivial}",
            x.height()
        ));
        if !trivial {
            report.counterexamples.push(Finding::new(&x, "hypothesis fails"));
        }
        for bits in 0u64..1 << x.len() {
            let (sub, _) = x.subspace(PointSet::from_bits(bits));
            checked += 1;
            let h2 = homology(&OrderComplex::of_poset(&sub), false).degree(2);
            if !h2.is_trivial() {
                report.counterexamples.push(Finding::new(
                    &sub,
                    format!("subspace {bits:#011b} of {name} has H2 = {h2}"),
                ));
            }
        }
    }
    report.notes.push(format!("{checked} subspaces checked"));
}

fn lemma33(report: &mut SearchReport, cfg: &VerifyConfig, k: usize) {
    let filter = EnumerationFilter {
        min_height: 2,
        max_height: Some(2),
        connected: true,
        ..core_filter(cfg)
    };
    let budget = cfg.budget;
    let search = Search::new(1..=k, filter).jobs(cfg.jobs);
    let counts = run_search(report, search, |p, form| {
        match is_homotopically_trivial_with_budget(p, budget) {
            TrivialityVerdict::Trivial(_) => {}
            TrivialityVerdict::Unknown { steps } => {
                return vec![Mark::Unknown(Finding::with_form(
                    form,
                    format!("pi1 undecided after {steps} steps"),
                ))]
            }
            TrivialityVerdict::Nontrivial(_) => return Vec::new(),
        }
        let mut marks = vec![Mark::Count("spaces", 1), Mark::Finding(Finding::with_form(form, "hypothesis holds"))];
        let mid: Vec<usize> = p.mid_points().iter().collect();
        for (i, &b) in mid.iter().enumerate() {
            for &c in &mid[i + 1..] {
                if p.f_hat(b).intersection(p.f_hat(c)).len() < 2 {
                    continue;
                }
                marks.push(Mark::Count("antecedents", 1));
                if p.u_hat(b).intersection(p.u_hat(c)).len() > 1 {
                    marks.push(Mark::Counterexample(Finding::with_form(
                        form,
                        format!("middle points {b} and {c} share two points above and below"),
                    )));
                }
            }
        }
        marks
    });
    report.notes.push(format!(
        "{} homotopically trivial height-2 cores, {} middle-point pairs satisfying the antecedent",
        count_of(&counts, "spaces"),
        count_of(&counts, "antecedents")
    ));
}

fn lemma34(report: &mut SearchReport, cfg: &VerifyConfig, k: usize) {
    let filter = EnumerationFilter {
        skip_extremum: cfg.fast,
        ..EnumerationFilter::all()
    };
    let budget = cfg.budget;
    let search = Search::new(1..=k - 2, filter).jobs(cfg.jobs);
    let counts = run_search(report, search, |p, form| {
        let s = p.nh_suspension().expect("sizes are bounded");
        match is_homotopically_trivial_with_budget(&s, budget) {
            TrivialityVerdict::Nontrivial(_) => Vec::new(),
            TrivialityVerdict::Unknown { steps } => vec![Mark::Unknown(Finding::with_form(
                form,
                format!("suspension undecided after {steps} steps"),
            ))],
            TrivialityVerdict::Trivial(_) => {
                let mut marks = vec![Mark::Count("antecedents", 1)];
                if !is_contractible(p) {
                    marks.push(Mark::Count("non-contractible", 1));
                }
                match is_homotopically_trivial_with_budget(p, budget) {
                    TrivialityVerdict::Trivial(_) => {}
                    TrivialityVerdict::Unknown { steps } => marks.push(Mark::Unknown(
                        Finding::with_form(form, format!("pi1 undecided after {steps} steps")),
                    )),
                    TrivialityVerdict::Nontrivial(w) => marks.push(Mark::Counterexample(
                        Finding::with_form(
                            form,
                            format!("suspension trivial but reduced H{} = {}", w.degree, w.group),
                        ),
                    )),
                }
                marks
            }
        }
    });
    report.notes.push(format!(
        "{} spaces with homotopically trivial suspension ({} of them non-contractible); suspensions up to {k} points",
        count_of(&counts, "antecedents"),
        count_of(&counts, "non-contractible")
    ));
}

fn prop22(report: &mut SearchReport, cfg: &VerifyConfig, k: usize) {
    let search = Search::new(1..=k, EnumerationFilter::all()).jobs(cfg.jobs);
    let counts = run_search(report, search, |p, form| {
        let n = p.len();
        let mut checked = 0;
        for bits in 0u64..1 << n {
            let d = PointSet::from_bits(bits);
            if !p.is_antichain(d) {
                continue;
            }
            checked += 1;
            let s = antichain_splitting(p, d).expect("d is an antichain");
            if !s.holds() {
                return vec![Mark::Counterexample(Finding::with_form(
                    form,
                    format!("splitting fails for antichain {bits:#b}"),
                ))];
            }
        }
        vec![Mark::Count("pairs", checked)]
    });
    report.notes.push(format!(
        "{} (space, antichain) pairs checked, all degrees 0..=h+1",
        count_of(&counts, "pairs")
    ));
}

fn remark23(report: &mut SearchReport, cfg: &VerifyConfig, k: usize) {
    let search = Search::new(1..=k, EnumerationFilter::all()).jobs(cfg.jobs);
    let counts = run_search(report, search, |p, form| {
        let mut marks = Vec::new();
        let (mx, mn) = (p.mxl(), p.mnl());
        if p.len() > 1 && p.is_connected() {
            marks.push(Mark::Count("item1", 1));
            if !mx.intersection(mn).is_empty() {
                marks.push(Mark::Counterexample(Finding::with_form(
                    form,
                    "connected with a point both maximal and minimal",
                )));
            }
        }
        if has_beat_points(p) {
            return marks;
        }
        marks.push(Mark::Count("item2", 1));
        let item2 = (0..p.len()).all(|a| {
            (mx.contains(a) || p.f_hat(a).intersection(mx).len() >= 2)
                && (mn.contains(a) || p.u_hat(a).intersection(mn).len() >= 2)
        });
        if !item2 {
            marks.push(Mark::Counterexample(Finding::with_form(
                form,
                "core point below fewer than two maximal (or above fewer than two minimal) points",
            )));
        }
        if mx.len() == 2 {
            marks.push(Mark::Count("item3", 1));
            let (rest, _) = p.subspace(p.points().difference(mx));
            let suspended = rest.nh_suspension().expect("same size as p");
            if canonical_form(&suspended) != *form {
                marks.push(Mark::Counterexample(Finding::with_form(
                    form,
                    "core with two maximal points that is not a suspension",
                )));
            }
        }
        marks
    });
    report.notes.push(format!(
        "item 1 checked on {} connected spaces, item 2 on {} cores, item 3 on {} cores with two maximal points",
        count_of(&counts, "item1"),
        count_of(&counts, "item2"),
        count_of(&counts, "item3")
    ));
}

/// One-line summary of the invariants of a space.
pub fn describe(name: &str, p: &FinitePoset, budget: usize) -> String {
    let mut out = String::new();
    let set = |s: PointSet| format!("{:?}", s.iter().collect::<Vec<_>>());
    let _ = writeln!(out, "space: {name}");
    let _ = writeln!(out, "points: {}", p.len());
    let _ = writeln!(out, "height: {}", p.height());
    let _ = writeln!(out, "chains: {:?}", p.chain_counts());
    let _ = writeln!(out, "euler characteristic: {}", p.euler_characteristic());
    let _ = writeln!(out, "connected: {}", p.is_connected());
    let _ = writeln!(out, "maximal: {}", set(p.mxl()));
    let _ = writeln!(out, "minimal: {}", set(p.mnl()));
    let _ = writeln!(out, "middle: {}", set(p.mid_points()));
    let beats = crate::homotopy::beat_points(p);
    let _ = writeln!(
        out,
        "beat points: {:?}",
        beats
            .iter()
            .map(|(x, k)| format!("{x}:{}", if *k == crate::homotopy::BeatKind::Up { "up" } else { "down" }))
            .collect::<Vec<_>>()
    );
    let core = crate::homotopy::core(p);
    let _ = writeln!(
        out,
        "core: {} points{}",
        core.space.len(),
        if core.trace.is_empty() { " (the space itself)" } else { "" }
    );
    let _ = writeln!(out, "contractible: {}", is_contractible(p));
    if !p.is_empty() {
        let _ = writeln!(out, "reduced homology: {}", reduced_homology(p));
    }
    let _ = writeln!(out, "pi1 verdict: {}", is_homotopically_trivial_with_budget(p, budget));
    let _ = writeln!(out, "canonical form: {}", canonical_form(p));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(target: Target, k: Option<usize>) -> SearchReport {
        let cfg = VerifyConfig {
            max_points: k,
            ..VerifyConfig::default()
        };
        verify(target, &cfg).unwrap()
    }

    #[test]
    fn small_searches_pass() {
        for t in [Target::Min9, Target::SphereMin, Target::Prop35, Target::Lemma31, Target::Remark23, Target::Lemma33] {
            let r = run(t, Some(6));
            assert_eq!(r.status, Status::Pass, "{}", r.to_text());
        }
        assert_eq!(run(Target::Prop22, Some(4)).status, Status::Pass);
        assert_eq!(run(Target::Lemma34, Some(6)).status, Status::Pass);
    }

    #[test]
    fn classify_below_nine_is_empty() {
        let r = run(Target::Classify9, Some(6));
        assert!(r.findings.is_empty());
        assert_eq!(r.status, Status::Pass);
    }

    #[test]
    fn bad_bounds() {
        let cfg = VerifyConfig {
            max_points: Some(11),
            ..VerifyConfig::default()
        };
        assert!(matches!(verify(Target::Min9, &cfg), Err(VerifyError::PointsOutOfRange { .. })));
        let cfg = VerifyConfig {
            max_points: Some(3),
            ..VerifyConfig::default()
        };
        assert_eq!(verify(Target::Lemma32, &cfg), Err(VerifyError::NoPointBound(Target::Lemma32)));
        assert_eq!("nope".parse::<Target>(), Err(VerifyError::UnknownTarget("nope".into())));
    }

    #[test]
    fn report_renderings() {
        let r = run(Target::SphereMin, Some(4));
        let text = r.to_text();
        assert!(text.contains("status: PASS"));
        assert!(text.contains("poset n4-"));
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(json["schema_version"], 1);
        assert_eq!(json["target"], "sphere-min");
        assert_eq!(json["status"], "pass");
    }
}
