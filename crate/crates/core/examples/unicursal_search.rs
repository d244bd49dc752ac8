// Hamiltonian cycles in Cayley colour graphs of permutation groups.

use ringlab::notation::parse_cycles;
use ringlab::unicursal::{closure, hamiltonian_cycle, verify_word, CayleyGraph, HamiltonianOutcome, SearchOptions};

fn search(n: usize, gens: &[&str]) -> ringlab::Result<()> {
    let gens = gens
        .iter()
        .map(|g| parse_cycles(g, n))
        .collect::<ringlab::Result<Vec<_>>>()?;
    let group = closure(&gens, 100_000)?;
    let graph = CayleyGraph::new(group.clone(), gens.clone())?;
    let report = hamiltonian_cycle(&graph, &SearchOptions::default())?;
    let names: Vec<String> = gens.iter().map(ToString::to_string).collect();
    match report.outcome {
        HamiltonianOutcome::Found(word) => {
            let letters: String = word.iter().map(|&t| char::from(b'A' + t as u8)).collect();
            println!(
                "order {} <{}>: found {letters}, verified = {}",
                group.order(),
                names.join(", "),
                verify_word(&group, &gens, &word)?
            );
        }
        HamiltonianOutcome::None => {
            println!(
                "order {} <{}>: none ({} expansions)",
                group.order(),
                names.join(", "),
                report.expansions
            )
        }
        HamiltonianOutcome::Exhausted => println!("order {}: budget exhausted", group.order()),
    }
    Ok(())
}

pub fn run_example() -> ringlab::Result<()> {
    search(3, &["(1 2)", "(2 3)"])?;
    search(4, &["(1 2 3)", "(1 2 3 4)"])?;
    search(4, &["(3 4)", "(1 2 3)"])?;
    search(5, &["(1 2 3 4 5)", "(1 2)"])?;
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
