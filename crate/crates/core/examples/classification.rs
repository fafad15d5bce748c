//! The finite/infinite table over the default parameter grid.
//!
//! `cargo run --example classification -- json` prints the JSON report.

use dinf_nichols::classify::{theorem_table, ParamGrid};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let report = theorem_table(&ParamGrid::default())?;
    match std::env::args().nth(1).as_deref() {
        Some("json") => println!("{}", report.to_json()),
        Some("csv") => print!("{}", report.to_csv()),
        _ => print!("{}", report.to_text()),
    }
    Ok(())
}
