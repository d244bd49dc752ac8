// The parity oracle on the Grandsire Triples lead heads.

use ringlab::leads::{extent_feasibility, lead_scheme, FeasibilityOptions};
use ringlab::notation::parse_cycles;
use ringlab::unicursal::{closure, rankin_oracle};

pub fn run_example() -> ringlab::Result<()> {
    let p = parse_cycles("(3 4 6 7 5)", 7)?;
    let b = parse_cycles("(2 4 7)(3 6 5)", 7)?;
    let group = closure(&[p.clone(), b.clone()], 1000)?;
    let report = rankin_oracle(&group, &p, &b)?;
    println!(
        "order {}: {:?}, order of gamma {}, index of <P> {}, index of <B> {}",
        group.order(),
        report.verdict,
        report.order_gamma,
        report.index_x,
        report.index_y
    );

    let s = lead_scheme(&"grandsire-7".parse()?)?;
    let f = extent_feasibility(&s, &FeasibilityOptions::default())?;
    println!(
        "{:?}: at most {:?} leads = {:?} rows",
        f.verdict, f.bound_leads, f.bound_rows
    );
    println!("{}", f.reason);
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
