//! Contracted lines, degree and fibers of the polar map of a line
//! arrangement with a point of multiplicity d - 1.

use syzlab::arrangements::{generate_family, trial_rng, FamilyTag};
use syzlab::algebra::rat;
use syzlab::polar::{hessian_report, polar_report, sample_fibers};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let slopes = [(1, 0), (0, 1), (1, 1), (1, -1), (1, 2)];
    let params: Vec<_> = slopes.iter().flat_map(|&(a, b)| [rat(a), rat(b)]).collect();
    let c = generate_family(FamilyTag::L, &params)?;
    let f = c.product();
    let report = polar_report(&c)?;
    println!("f = {f}");
    println!("polar degree (quasihomogeneous singularities): {}", report.degree_estimate.degree);
    let lines: Vec<String> = report.contracted_lines.iter().map(|l| l.to_string()).collect();
    println!("contracted lines: {}", lines.join(", "));

    let hess = hessian_report(f, &c)?;
    if let Some(q) = &hess.quotient {
        println!("h(f)/f = {q}");
    }

    let mut rng = trial_rng(1, 0);
    for (q, fiber) in sample_fibers(f, 5, &mut rng)? {
        let q: Vec<String> = q.iter().map(|c| c.to_string()).collect();
        println!(
            "fiber over ({}): line {}, {} distinct points",
            q.join(":"),
            fiber.line,
            fiber.roots_distinct
        );
    }
    Ok(())
}
