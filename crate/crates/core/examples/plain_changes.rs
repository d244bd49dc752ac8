// Plain changes: every row on n bells, one adjacent swap at a time.
//
// ```text
// cargo run --example plain_changes
// ```

use ringlab::methods::sjt_extent;
use ringlab::rules::{validate, Ruleset};

pub fn run_example() -> ringlab::Result<()> {
    let m = sjt_extent(4)?;
    println!("plain changes on 4: {} rows", m.row_count());
    println!("word: {}", m.word_labels().join(","));
    for row in m.rows().take(9) {
        println!("  {row}");
    }

    // Motel rules hold at every stage; ringers rules fail from 4 bells.
    for n in 1..=7 {
        let m = sjt_extent(n)?;
        let motel = validate(&m, Ruleset::Motel);
        let ringers = validate(&m, Ruleset::Ringers);
        println!(
            "n={n}: rows={} motel={} ringers={} ({} violations)",
            m.row_count(),
            motel.passed,
            ringers.passed,
            ringers.violations.len()
        );
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
