// Plain Hunt and its hunting subgroup.

use ringlab::methods::{hunting_pair, plain_hunt};
use ringlab::notation::format_cycles;
use ringlab::unicursal::closure;

pub fn run_example() -> ringlab::Result<()> {
    let m = plain_hunt(5)?;
    let mut acc = ringlab::Perm::identity(5)?;
    let mut steps = m.transitions().zip(m.word_labels());
    for row in m.rows() {
        println!("{row}");
        if let Some((t, label)) = steps.next() {
            acc = acc.compose(t)?;
            let shown = if acc.is_identity() {
                "identity".to_string()
            } else {
                format_cycles(&acc)
            };
            println!("        {label}, {shown}");
        }
    }

    for n in 3..=8 {
        let (x, y) = hunting_pair(n)?;
        let h = closure(&[x, y], 1000)?;
        println!(
            "n={n}: {} rows, hunting subgroup of order {}",
            plain_hunt(n)?.row_count(),
            h.order()
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
