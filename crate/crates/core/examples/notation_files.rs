// Cycle notation, rows and the JSON method and composition files.

use ringlab::methods::plain_bob_course;
use ringlab::notation::{
    composition_file_to_json, format_cycles, method_file_from_json, method_file_to_json, parse_cycles, parse_row,
    CompositionFile, MethodFile,
};

pub fn run_example() -> ringlab::Result<()> {
    let x = parse_cycles("(1 2)(3 4)", 4)?;
    let y = parse_cycles("(2 3)", 4)?;
    let xy = x.compose(&y)?;
    println!(
        "X = {}, Y = {}, XY = {}, order {}",
        format_cycles(&x),
        format_cycles(&y),
        format_cycles(&xy),
        xy.order()
    );
    println!(
        "XY applied to 1 2 3 4 gives {}",
        xy.apply_to_row(&parse_row("1 2 3 4")?)?
    );

    for bad in ["(1 2", "(1 1)", "(1 9)"] {
        match parse_cycles(bad, 4) {
            Ok(p) => println!("{bad:>6} -> {p}"),
            Err(e) => println!("{bad:>6} -> {e}"),
        }
    }

    let file = MethodFile::from_method(&plain_bob_course(4)?);
    let json = method_file_to_json(&file);
    println!("{json}");
    let back = method_file_from_json(&json)?.to_method()?;
    println!("round trip: {} rows", back.row_count());

    if let Err(e) = method_file_from_json(r#"{"stage": 4, "name": "x", "transitions": ["(1 2", "(3 4)"]}"#) {
        println!("rejected: {e}");
    }

    let comp = CompositionFile::from_letters("plain-bob-6", "PPPPB PPPPB PPPPB")?;
    println!("{}", composition_file_to_json(&comp));
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
