//! Runs the property suites on a small window.

use dinf_nichols::verify::{run, Suite, VerifyOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let opts = VerifyOptions {
        window: 4,
        seed: 1,
        ..Default::default()
    };
    for r in run(Suite::All, &opts)? {
        println!("{r}");
    }
    Ok(())
}
