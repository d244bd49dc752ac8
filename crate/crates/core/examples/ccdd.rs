// Christ Church Dublin Differential Doubles and its 120 extent.

use ringlab::leads::{extent_feasibility, lead_scheme, FeasibilityOptions};
use ringlab::methods::{ccdd_course, expand_leads};
use ringlab::notation::CompositionFile;
use ringlab::rules::{covers_every_row, validate, Ruleset};

pub fn run_example() -> ringlab::Result<()> {
    let course = ccdd_course()?;
    println!("plain course: {} rows", course.row_count());

    let s = lead_scheme(&"ccdd-5".parse()?)?;
    let comp = CompositionFile::from_letters("ccdd-5", "PPPB PPPB PPPB")?;
    let m = expand_leads(&s, &comp)?;
    println!(
        "{}: {} changes, covers every row = {}",
        comp.letters(),
        m.transition_count(),
        covers_every_row(&m)
    );

    // Every row appears, but some bells lie still for three rows.
    let report = validate(&m, Ruleset::Ringers);
    for v in report.violations.iter().take(3) {
        println!("  rule {} at row {}: {}", v.rule, v.row, v.description);
    }
    println!("  {} violations of the ringers rules in all", report.violations.len());

    let f = extent_feasibility(&s, &FeasibilityOptions::default())?;
    println!("feasibility: {:?} by {:?}", f.verdict, f.test);
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
