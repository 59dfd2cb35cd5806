//! One line per acceptance criterion, each run at its stated bounds and
//! time limit.

use std::process::Command;
use std::time::{Duration, Instant};

use gmackey::burnside::canonical_class;
use gmackey::group::{subgroups, FiniteGroup};
use gmackey::gset::{coset_gset, product, GSet};
use gmackey::report::Report;
use gmackey::span::Span;
use gmackey::suites::{self, Mutation};
use gmackey::Result;

struct Outcome {
    passed: bool,
    detail: String,
}

fn from_reports(reports: &[Report], detail: String) -> Outcome {
    let passed = reports.iter().all(Report::passed);
    let mut detail = detail;
    for r in reports.iter().filter(|r| !r.passed()) {
        detail.push_str(&format!("\n{r}"));
    }
    Outcome { passed, detail }
}

fn groups() -> Vec<(&'static str, FiniteGroup)> {
    vec![
        ("C2", FiniteGroup::cyclic(2)),
        ("C3", FiniteGroup::cyclic(3)),
        ("C4", FiniteGroup::cyclic(4)),
        ("C2xC2", FiniteGroup::klein_four()),
        ("S3", FiniteGroup::symmetric(3)),
    ]
}

fn marks() -> Result<Outcome> {
    let expected: [(FiniteGroup, Vec<Vec<usize>>); 2] = [
        (FiniteGroup::cyclic(2), vec![vec![2, 0], vec![1, 1]]),
        (FiniteGroup::symmetric(3), vec![vec![6, 0, 0, 0], vec![3, 1, 0, 0], vec![2, 0, 2, 0], vec![1, 1, 1, 1]]),
    ];
    let mut reports = Vec::new();
    let mut detail = Vec::new();
    for (g, table) in expected {
        let (t, mut r) = suites::marks_suite(&g)?;
        r.check(t.marks == table, "expected matrix", || format!("{:?}", t.marks));
        detail.push(format!("{:?}", t.marks));
        reports.push(r);
    }
    Ok(from_reports(&reports, detail.join(", ")))
}

fn strictness() -> Result<Outcome> {
    let mut reports = Vec::new();
    let mut witnesses = 0;
    let mut checked = 0;
    for (name, g) in groups() {
        let s = suites::span_strictness(&g, 6)?;
        checked += s.report.checked;
        witnesses += usize::from(s.identity_witness.is_some());
        let mut r = s.report;
        r.name = name.into();
        reports.push(r);
    }
    Ok(from_reports(&reports, format!("{checked} checks, {witnesses} groups with an identity-span witness")))
}

fn mackey() -> Result<Outcome> {
    let g = FiniteGroup::symmetric(3);
    let c2 = subgroups(&g)?.into_iter().find(|h| h.order() == 2).expect("S3 has an involution");
    let (_, mut report) = suites::mackey_suite(&g)?;
    let a = coset_gset(&g, &c2);
    let pair = product(&a, &a);
    let n = a.size();
    let expected = Span::new(
        a.clone(),
        a.clone(),
        pair.clone(),
        (0..pair.size()).map(|p| p / n).collect(),
        (0..pair.size()).map(|p| p % n).collect(),
    )?;
    let orders: Vec<usize> = {
        let mut o: Vec<usize> = pair.orbits().iter().map(|o| pair.stabilizer(o[0]).order()).collect();
        o.sort_unstable();
        o
    };
    report.check(orders == vec![1, 2], "apex orbits are C2/e and C2/C2", || format!("{orders:?}"));
    let composite = suites::transfer_then_restriction(&g, &c2, &c2)?;
    report.check(
        canonical_class(&g, &composite) == canonical_class(&g, &expected),
        "transfer then restriction",
        || format!("{:?}", canonical_class(&g, &composite)),
    );
    let detail = format!("{} checks", report.checked);
    Ok(from_reports(&[report], detail))
}

fn tom_dieck() -> Result<Outcome> {
    let mut reports = Vec::new();
    let mut counts = Vec::new();
    for g in [FiniteGroup::cyclic(2), FiniteGroup::symmetric(3)] {
        let xs = suites::tom_dieck_gsets(&g)?;
        let mut r = Report::new(format!("order {}", g.order()));
        r.check(xs.len() >= 5, "at least five G-sets", || format!("{}", xs.len()));
        r.merge(suites::tom_dieck_suite(&g, &xs, None)?.1);
        counts.push(xs.len());
        reports.push(r);
    }
    Ok(from_reports(&reports, format!("G-sets per group {counts:?}")))
}

fn theta() -> Result<Outcome> {
    let mut reports = Vec::new();
    for (g, bounds) in [suites::theta_bounds_c2(None)?, suites::theta_bounds_s3(None)?] {
        reports.push(suites::theta_suite(&g, &bounds)?);
    }
    let detail = reports.iter().map(|r| format!("{} checks", r.checked)).collect::<Vec<_>>().join(", ");
    Ok(from_reports(&reports, detail))
}

fn strictification() -> Result<Outcome> {
    let (instances, mut report) = suites::strictification_suite(0, None)?;
    report.check(instances >= 50, "at least fifty instances", || format!("{instances}"));
    Ok(from_reports(&[report], format!("{instances} instances")))
}

fn splitting() -> Result<Outcome> {
    let mut reports = Vec::new();
    for (name, g) in groups() {
        let mut r = suites::splitting_for(&g, &[GSet::point(&g), GSet::regular(&g)], 4)?;
        r.name = name.into();
        reports.push(r);
    }
    let checked: u64 = reports.iter().map(|r| r.checked).sum();
    Ok(from_reports(&reports, format!("{checked} checks")))
}

fn mutations() -> Result<Outcome> {
    let bin = env!("CARGO_BIN_EXE_gmackey");
    let family = |m: Mutation| match m {
        Mutation::BrokenComposition => vec!["multiparam"],
        Mutation::InvertedTheta => vec!["strictify", "theta"],
        Mutation::NonEquivariantBijection => vec!["hfp"],
        Mutation::BrokenActionTable => vec!["actions"],
    };
    let mut report = Report::new("mutations");
    for m in Mutation::ALL {
        let mut args = vec!["coherence".to_string(), "--group".into(), "C2".into()];
        for f in family(m) {
            args.extend(["--family".into(), f.to_string()]);
        }
        let clean = Command::new(bin).args(&args).output().expect("binary runs");
        report.check(clean.status.success(), "unmutated run passes", || format!("{}: {:?}", m.name(), clean.status));
        args.extend(["--mutate".into(), m.name().into()]);
        let out = Command::new(bin).args(&args).output().expect("binary runs");
        let stdout = String::from_utf8_lossy(&out.stdout);
        let witness = stdout.lines().any(|l| l.starts_with("  ") && !l.starts_with("  unchecked"));
        report.check(out.status.code() == Some(1), "nonzero exit", || format!("{}: {:?}", m.name(), out.status));
        report.check(witness, "witness printed", || format!("{}: {stdout}", m.name()));
    }
    let detail = format!("{} modes", Mutation::ALL.len());
    Ok(from_reports(&[report], detail))
}

fn assembly() -> Result<Outcome> {
    let c2 = FiniteGroup::cyclic(2);
    let s3 = FiniteGroup::symmetric(3);
    let s3_c2 = subgroups(&s3)?.into_iter().find(|h| h.order() == 2).expect("S3 has an involution");
    let mut reports = Vec::new();
    let mut certified = Vec::new();
    for (g, x) in [(c2.clone(), GSet::regular(&c2)), (s3.clone(), coset_gset(&s3, &s3_c2))] {
        let a = suites::assembly_suite(&g, &x, &suites::assembly_bounds(&g))?;
        let mut r = a.report;
        r.check(a.levels.len() == subgroups(&g)?.len(), "a certificate per level", || format!("{:?}", a.levels));
        r.check(
            !a.levels.is_empty() && a.levels.iter().all(|l| l.equivalence && l.sources > 0 && l.targets > 0),
            "levelwise equivalences",
            || format!("{:?}", a.levels),
        );
        certified.push(format!("{}/{} levels", a.levels.iter().filter(|l| l.equivalence).count(), a.levels.len()));
        reports.push(r);
    }
    let checked: u64 = reports.iter().map(|r| r.checked).sum();
    Ok(from_reports(&reports, format!("{checked} checks, equivalences on {}", certified.join(" and "))))
}

type Criterion = (&'static str, Duration, fn() -> Result<Outcome>);

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 table of marks", Duration::from_secs(1), marks),
        ("2 span strictness", Duration::from_secs(60), strictness),
        ("3 double cosets", Duration::from_secs(10), mackey),
        ("4 tom Dieck", Duration::from_secs(5), tom_dieck),
        ("5 theta coherence", Duration::from_secs(300), theta),
        ("6 strictification", Duration::from_secs(120), strictification),
        ("7 splitting", Duration::from_secs(30), splitting),
        ("8 mutations", Duration::from_secs(300), mutations),
        ("9 assembly", Duration::from_secs(300), assembly),
    ];
    let mut failed = 0;
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (passed, detail) = match outcome {
            Ok(o) => (o.passed && elapsed < limit, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        let verdict = if passed { "PASS" } else { "FAIL" };
        println!("{verdict} criterion {name}: {:.2}s of {}s; {detail}", elapsed.as_secs_f64(), limit.as_secs());
        failed += usize::from(!passed);
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}
