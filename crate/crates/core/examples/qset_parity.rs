// Rearranging chain covers one Q-set at a time never changes the parity
// of the chain count when the Q-sets have odd size.

use ringlab::notation::parse_cycles;
use ringlab::unicursal::qset::random_trace;
use ringlab::unicursal::{closure, parity_audit};

fn audit(n: usize, p: &str, b: &str, steps: usize, seed: u64) -> ringlab::Result<()> {
    let p = parse_cycles(p, n)?;
    let b = parse_cycles(b, n)?;
    let group = closure(&[p.clone(), b.clone()], 1000)?;
    let cosets = group.order() / b.compose(&p.inverse())?.order() as usize;
    let trace = random_trace(cosets, steps, seed);
    let report = parity_audit(&group, &p, &b, &trace)?;
    let counts: Vec<String> = report
        .steps
        .iter()
        .take(12)
        .map(|s| s.chains_after.to_string())
        .collect();
    println!(
        "order {}, gamma {} of order {}, {} Q-sets, start {} chains",
        report.group_order, report.gamma, report.gamma_order, report.coset_count, report.start_chains
    );
    println!("  chains: {} ...", counts.join(" "));
    println!(
        "  parity law {}, label flip {}, rotation identity {}, count prediction {}",
        report.parity_law_held,
        report.label_flip_held,
        report.rotation_identity_held,
        report.chain_count_prediction_held
    );
    Ok(())
}

pub fn run_example() -> ringlab::Result<()> {
    audit(7, "(3 4 6 7 5)", "(2 4 7)(3 6 5)", 200, 7)?;
    audit(4, "(1 2 3)", "(3 4)", 20, 1)?;
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
