//! Normal forms, conjugation and conjugacy classes in the infinite dihedral group.

use dinf_nichols::group::{ConjClass, GroupElement};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g: GroupElement = "g".parse()?;
    let h: GroupElement = "h".parse()?;
    let x: GroupElement = "g h^3".parse()?;

    println!("h g = {}", h.multiply(&g));
    println!("(g h^3)^-1 = {}", x.inverse());
    println!("h^2 |> g = {}", "h^2".parse::<GroupElement>()?.conjugate(&g));
    println!("class of {x}: {}", x.conj_class().label());

    for class in [
        ConjClass::One,
        ConjClass::HPower(2.into()),
        ConjClass::EvenReflections,
        ConjClass::OddReflections,
    ] {
        let base = class.base_point();
        let orbit: Vec<String> = class
            .coset_reps()
            .take(6)
            .map(|r| r.conjugate(&base).to_string())
            .collect();
        println!("{:<6} base {:<4} orbit {}", class.label(), base, orbit.join(", "));
    }
    Ok(())
}
