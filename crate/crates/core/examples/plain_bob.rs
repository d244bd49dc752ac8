// Plain Bob: courses, bobs and the longest true touch of Minor.

use ringlab::leads::{chain_to_composition, composition_to_chain, lead_scheme, leadhead_graph, short_leadhead};
use ringlab::methods::{expand_leads, plain_bob_course};
use ringlab::notation::CompositionFile;
use ringlab::rules::{is_extent, validate, Ruleset};
use ringlab::unicursal::{longest_cycle, LongestOptions};

pub fn run_example() -> ringlab::Result<()> {
    let minimus = plain_bob_course(4)?;
    println!(
        "Plain Bob Minimus: {} rows, extent = {}",
        minimus.row_count(),
        is_extent(&minimus)
    );

    let s = lead_scheme(&"plain-bob-6".parse()?)?;
    println!("P = {}  B = {}", s.p(), s.b());
    let mut head = ringlab::Perm::identity(6)?;
    for _ in 0..s.plain_course_leads() {
        head = head.compose(s.p())?;
        println!("  lead head {}", short_leadhead(&head));
    }
    println!("plain course: {} rows", plain_bob_course(6)?.row_count());

    let comp = CompositionFile::from_letters("plain-bob-6", "PPPPB PPPPB PPPPB")?;
    let m = expand_leads(&s, &comp)?;
    println!(
        "{}: {} changes, back to rounds = {}",
        comp.letters(),
        m.transition_count(),
        m.last_row().is_rounds()
    );

    // Longest touch over the lead-head graph, rows kept disjoint.
    let lg = leadhead_graph(&s)?;
    let best = longest_cycle(&lg.graph, Some(&lg.footprints), &LongestOptions::default());
    println!(
        "longest: {} leads, optimal = {}, {} expansions",
        best.length(),
        best.optimal,
        best.expansions
    );
    if let Some(chain) = &best.best {
        let comp = chain_to_composition(&s, chain)?;
        println!("  {}", comp.letters());
    }

    let thirty = CompositionFile::from_letters("plain-bob-6", &"BPPPBBPPPP".repeat(3))?;
    let chain = composition_to_chain(&lg, &thirty)?;
    let m = expand_leads(&s, &thirty)?;
    let report = validate(&m, Ruleset::Ringers);
    println!(
        "{}: {} leads, true = {}, {} changes, ringers rules pass = {}",
        thirty.letters(),
        chain.len(),
        lg.is_true(&chain),
        m.transition_count(),
        report.passed
    );
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
