//! Exact arithmetic in Q(z_12).

use dinf_nichols::field::{CyclotomicField, Matrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k = CyclotomicField::new(12)?;
    let z = k.zeta();
    println!("degree of Q(z_12): {}", k.degree());

    // z^3 is a primitive 4th root of unity, z^4 a primitive cube root
    let i = z.pow(3)?;
    let w = z.pow(4)?;
    println!("z^3 = {i}, (z^3)^2 = {}", i.pow(2)?);
    println!("z^4 = {w}, order {:?}", w.root_of_unity_order()?);

    let x = k.parse("3/2*z^2 - z + 1")?;
    let y = x.inv()?;
    println!("x = {x}\n1/x = {y}\nx * (1/x) = {}", &x * &y);
    println!("x ~ {:.6}", x.to_complex());

    let m = Matrix::from_rows(vec![
        vec![k.one(), i.clone()],
        vec![i.clone(), k.int(-1)],
    ]);
    println!("rank of [[1, i], [i, -1]] = {}", m.rank());
    Ok(())
}
