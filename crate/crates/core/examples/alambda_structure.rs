//! The algebra A_lambda = k[D]/(h + h^-1 - lambda) and its simple modules.
//!
//! Run with an optional lambda: `cargo run --example alambda_structure -- 3`.

use dinf_nichols::field::CyclotomicField;
use dinf_nichols::repn::{
    idempotent_pair, radical_line, rep_iso_check, simple_modules, structure_table, CornerData,
    Sign, BASIS_LABELS,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k = CyclotomicField::new(12)?;
    let lambda = k.parse(&std::env::args().nth(1).unwrap_or_else(|| "0".into()))?;
    println!("lambda = {lambda}");

    let table = structure_table(&lambda);
    for (i, row) in table.iter().enumerate() {
        for (j, p) in row.iter().enumerate() {
            println!("  {} * {} = {}", BASIS_LABELS[i], BASIS_LABELS[j], p);
        }
    }

    let (e1, e2) = idempotent_pair(&lambda)?;
    println!("e1 = {e1}\ne2 = {e2}");
    for sign in [Sign::Plus, Sign::Minus] {
        let corner = CornerData::right(&lambda, sign)?;
        println!("radical line of the {sign:?} right corner: {}", radical_line(&corner, &lambda)?);
    }

    let cands = simple_modules(&lambda)?;
    for c in &cands {
        println!(
            "{}: dim {}, axioms {:?}, irreducible {:?}",
            c.name,
            c.rep.dim(),
            c.axioms,
            c.irreducible
        );
    }
    if let [a, b] = &cands[..] {
        if a.axioms.passed() && b.axioms.passed() {
            println!("{} ~ {}: {}", a.name, b.name, rep_iso_check(&a.rep, &b.rep)?);
        }
    }
    Ok(())
}
