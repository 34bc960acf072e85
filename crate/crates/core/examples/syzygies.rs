//! Graded pieces of the syzygy module and the lift of a syzygy of one
//! factor to a syzygy of a product.

use syzlab::cli::parse_poly;
use syzlab::jacobian::{lift_syzygy, mdr, syzygy_space};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = parse_poly("x(xz + y^2)(xz + 2y^2)")?;
    println!("f = {f}");
    for t in 0..=3 {
        let basis = syzygy_space(&f, t)?;
        println!("degree {t}: dimension {}", basis.len());
        for s in basis.iter().take(3) {
            println!("  {s}");
        }
    }

    let f1 = parse_poly("y^4z + x^5")?;
    let f2 = parse_poly("x + y + z")?;
    let r1 = mdr(&f1)?;
    let delta = syzygy_space(&f1, r1)?.remove(0);
    let lifted = lift_syzygy(&delta, &f1, &f2)?;
    let product = f1.mul(&f2);
    println!("syzygy of f1 in degree {r1}: {delta}");
    println!("lifted to f1*f2: {lifted}");
    println!("annihilates the product gradient: {}", lifted.is_syzygy_of(&product));
    Ok(())
}
