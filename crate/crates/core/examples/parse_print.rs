//! Reading polynomials and factored curve files.

use syzlab::cli::{parse_components, parse_poly};

fn main() {
    for src in ["3x^2y - 1/2 z^3", "(xz + y^2)(xz + 2y^2)", "x^2 + y", "x*(y"] {
        match parse_poly(src) {
            Ok(f) => println!("{src:<24} -> {f} (degree {})", f.degree()),
            Err(e) => println!("{src:<24} -> error: {e}"),
        }
    }
    let file = "# a CL2 curve\nx\nxz + y^2\n\nxz + 2y^2\n";
    match parse_components(file) {
        Ok(parts) => println!("{} components read", parts.len()),
        Err((line, e)) => println!("line {line}: {e}"),
    }
}
