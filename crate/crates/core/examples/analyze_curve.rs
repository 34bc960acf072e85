//! Minimal degree of a syzygy, Tjurina number and freeness for a few curves.
//!
//! Usage: `cargo run --example analyze_curve -- "x^2y^2z + x^5 + y^5"`

use syzlab::cli::parse_poly;
use syzlab::jacobian::Jacobian;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if args.is_empty() {
        vec![
            "y^4z + x^5 + x^2y^3".to_string(),
            "y^4z + x^5".to_string(),
            "(x^2 + y^2 + z^2)(x^3 + y^3 + z^3)".to_string(),
            "xyz(x + y + z)".to_string(),
        ]
    } else {
        args
    };
    for src in inputs {
        let f = parse_poly(&src)?;
        let mut j = Jacobian::new(&f)?;
        let rep = j.report()?;
        println!("{src}");
        println!("  d = {}, mdr = {}, tau = {}, {}", rep.d, rep.r, rep.tau, rep.freeness);
        if let (Some(lo), Some(hi)) = (rep.dpw_lower, rep.dpw_upper) {
            println!("  du Plessis-Wall window [{lo}, {hi}]");
        }
        let table: Vec<String> = rep.hilbert_table.iter().map(|(t, h)| format!("{t}:{h}")).collect();
        println!("  Hilbert function of R/J: {}", table.join(" "));
    }
    Ok(())
}
