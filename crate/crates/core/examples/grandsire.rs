// Grandsire Doubles and Triples. Touches that fail to close report the
// lead head they stop at.

use ringlab::leads::{composition_to_chain, extent_feasibility, lead_scheme, leadhead_graph, FeasibilityOptions};
use ringlab::methods::{expand_leads, grandsire_course};
use ringlab::notation::CompositionFile;
use ringlab::rules::{validate, Ruleset};
use ringlab::Error;

pub fn run_example() -> ringlab::Result<()> {
    let course = grandsire_course(5)?;
    println!("Grandsire Doubles plain course: {} changes", course.transition_count());
    for row in course.rows().take(11) {
        println!("  {row}");
    }

    let doubles = lead_scheme(&"grandsire-5".parse()?)?;
    println!("P = {}  B = {}", doubles.p(), doubles.b());
    for letters in ["BPBPBP", "BPPBPP"] {
        let comp = CompositionFile::from_letters("grandsire-5", letters)?;
        let m = expand_leads(&doubles, &comp)?;
        println!(
            "{letters}: {} changes, ends at {}, ringers rules pass = {}",
            m.transition_count(),
            m.last_row(),
            validate(&m, Ruleset::Ringers).passed
        );
    }
    let f = extent_feasibility(&doubles, &FeasibilityOptions::default())?;
    println!(
        "doubles extent: {:?} by {:?}, at most {:?} rows",
        f.verdict, f.test, f.bound_rows
    );

    let triples = lead_scheme(&"grandsire-7".parse()?)?;
    let lg = leadhead_graph(&triples)?;
    println!("Triples lead heads: {}", lg.graph.vertex_count());
    for letters in ["BPPPP".repeat(3), "BPPPP".repeat(5)] {
        let comp = CompositionFile::from_letters("grandsire-7", &letters)?;
        match composition_to_chain(&lg, &comp) {
            Ok(chain) => println!(
                "{letters}: closes after {} leads, true = {}",
                chain.len(),
                lg.is_true(&chain)
            ),
            Err(Error::Closure { residual }) => println!("{letters}: does not close, stops at {residual}"),
            Err(e) => return Err(e),
        }
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
