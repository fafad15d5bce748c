//! Graded dimensions of Nichols algebras from the quantum symmetrizer.

use dinf_nichols::field::CyclotomicField;
use dinf_nichols::nichols::{growth_fit, BraidedSpace};
use dinf_nichols::repn::simple_modules;
use dinf_nichols::ydmod::YdModule;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k = CyclotomicField::new(12)?;
    let mut spaces = Vec::new();
    for a in ["1", "-1", "2", "z^4"] {
        let m = YdModule::h_class(1, &k.parse(a)?)?;
        spaces.push((m.label(), BraidedSpace::from_module(&m)?));
    }
    let s2 = simple_modules(&k.int(2))?.remove(0);
    let m = YdModule::one_class(&s2.name, s2.rep)?;
    spaces.push((m.label(), BraidedSpace::from_module(&m)?));

    for (label, space) in &spaces {
        let dims = space.graded_dims(6)?;
        println!("{label:<28} {:?}  {:?}", dims.dims, growth_fit(&dims)?);
    }
    Ok(())
}
