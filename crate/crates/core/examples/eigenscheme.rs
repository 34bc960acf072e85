//! Eigenschemes of tensors and the test whether a Jacobian ideal is one.

use syzlab::cli::parse_poly;
use syzlab::eigenscheme::{
    blowup_class, contains_point, eigenscheme_degree, jacobian_to_tensor, Tensor,
};
use syzlab::algebra::point;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t = Tensor::new(parse_poly("x^2")?, parse_poly("y^2")?, parse_poly("z^2")?)?;
    println!("tensor {t}: eigenscheme of length {}", eigenscheme_degree(&t)?);
    for p in [[1, 1, 0], [1, -1, 0], [1, 1, 1]] {
        println!("  {p:?} eigenpoint: {}", contains_point(&t, &point(p))?);
    }

    for src in [
        "xyz(x + y)(x - y)",
        "x(xz + y^2)(xz + 2y^2)",
        "(xz + y^2)(xz + 2y^2)(xz + 3y^2)",
        "y(x^3 - y^2z)",
    ] {
        let f = parse_poly(src)?;
        match jacobian_to_tensor(&f) {
            Ok(t) => println!(
                "{src}: J_f is the eigenscheme ideal of {t}, length {}",
                eigenscheme_degree(&t)?
            ),
            Err(e) => println!("{src}: {e}"),
        }
    }

    let (a, b, c) = blowup_class(6)?;
    println!("class of the blow-up for d = 6: {a} h1^2 + {b} h1 h2 + {c} h2^2");
    Ok(())
}
