//! Action, coaction and braiding of the four module families.

use dinf_nichols::field::CyclotomicField;
use dinf_nichols::group::GroupElement;
use dinf_nichols::ydmod::{braiding_table_check, BasisVector, ReflectionRep, YdModule};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k = CyclotomicField::new(12)?;

    let m = YdModule::h_class(1, &k.int(2))?;
    println!("{}", m.label());
    println!("braiding matrix:\n{}", m.diagonal_type()?.expect("diagonal"));

    let m = YdModule::g_class(&k, ReflectionRep::Sign);
    println!("{}", m.label());
    for v in [BasisVector::A(0), BasisVector::A(2), BasisVector::B(1)] {
        println!("  deg {v} = {}, h.{v} = {}", m.coact(v)?, m.act(&GroupElement::h(), v)?);
    }
    for (v, w) in [(BasisVector::A(1), BasisVector::B(2)), (BasisVector::B(2), BasisVector::B(1))] {
        println!("  c({v}⊗{w}) = {}", m.braid(v, w)?);
    }

    for rep in [ReflectionRep::Sign, ReflectionRep::Eps] {
        for m in [YdModule::g_class(&k, rep), YdModule::gh_class(&k, rep)] {
            let r = braiding_table_check(&m, 8)?;
            match r.first_mismatch() {
                None => println!("{}: closed-form table agrees on window 8", m.label()),
                Some(x) => println!(
                    "{}: closed-form table differs, c({}⊗{}) = {} vs {}",
                    m.label(),
                    x.left,
                    x.right,
                    x.computed,
                    x.table
                ),
            }
        }
    }
    Ok(())
}
