use super::*;
use crate::algebra::{point, rat};
use crate::arrangements::{generate_family, int_params, FamilyTag};
use crate::cli::parse_poly;
use rand::SeedableRng;

fn p(s: &str) -> HPoly {
    parse_poly(s).unwrap()
}

fn l4() -> CurveInput {
    generate_family(FamilyTag::L, &int_params(&[1, 0, 0, 1, 1, 1])).unwrap()
}

fn l5() -> CurveInput {
    generate_family(FamilyTag::L, &int_params(&[1, 0, 0, 1, 1, 1, 1, -1])).unwrap()
}

fn cl2() -> CurveInput {
    generate_family(FamilyTag::CL2, &int_params(&[1, 2])).unwrap()
}

#[test]
fn contracted_lines_of_a_line_arrangement() {
    let f = p("xyz(x+y)");
    let (a, b, c) = (point([1, 0, 0]), point([0, 1, 0]), point([1, 0, 1]));
    assert!(is_contracted(&f, &a, &b).unwrap());
    assert!(!is_contracted(&f, &b, &c).unwrap());
    assert_eq!(is_contracted_pairwise(&f, &a, &b), Ok(true));
    assert_eq!(is_contracted_pairwise(&f, &b, &c), Ok(false));
    assert_eq!(contracted_component_lines(&l4()).unwrap().len(), 4);
}

#[test]
fn tangent_line_is_the_only_contracted_line() {
    let c = cl2();
    assert!(is_line_contracted(c.product(), &p("x")).unwrap());
    assert_eq!(contracted_component_lines(&c).unwrap(), vec![p("x")]);
    // Any line component l of f = l·g is contracted: on l = 0 the gradient
    // is g·∇l. So the base line of CL6 is contracted too.
    let cl6 = generate_family(FamilyTag::CL6, &int_params(&[1, 2, 3])).unwrap();
    assert_eq!(contracted_component_lines(&cl6).unwrap(), vec![p("y")]);
}

#[test]
fn vanishing_gradient_is_an_error() {
    // The gradient of z^3 vanishes on z = 0.
    assert_eq!(
        is_line_contracted(&p("z^3"), &p("z")),
        Err(PolarError::GradientVanishesOnLine)
    );
}

#[test]
fn polar_degrees() {
    assert_eq!(polar_degree_qh(l5().product()).unwrap().degree, 3);
    assert_eq!(polar_degree_qh(cl2().product()).unwrap().degree, 3);
    assert_eq!(polar_degree_qh(&p("x^3+y^3+z^3")).unwrap().degree, 4);
}

#[test]
fn fibers() {
    let f = l4();
    let fib = fiber_over_point(f.product(), &point([1, 1, 1])).unwrap();
    assert!(fib.line.is_proportional_to(&p("x+y-3z")));
    assert!(!fib.identically_zero);
    assert_eq!(fib.roots_total, 2);
    assert!(fib.roots_distinct <= 2);

    // z = 0 is contracted to (0:0:1).
    let over_image = fiber_over_point(f.product(), &point([0, 0, 1])).unwrap();
    assert!(over_image.identically_zero);

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    let sample = sample_fibers(l5().product(), 20, &mut rng).unwrap();
    assert!(sample.iter().all(|(_, fb)| fb.roots_distinct <= 3));
    assert!(sample.iter().any(|(_, fb)| fb.roots_distinct == 3));
}

#[test]
fn hessians() {
    let c = l4();
    let r = hessian_report(c.product(), &c).unwrap();
    assert!(r.quotient.is_some());
    assert!(r.quotient_vars.unwrap().iter().all(|v| *v != Var::Z));
    assert_eq!(r.divisible_by, vec![0, 1, 2, 3]);

    let xyz = CurveInput::new(vec![p("x"), p("y"), p("z")]);
    let r = hessian_report(xyz.product(), &xyz).unwrap();
    assert_eq!(r.hessian, p("2xyz"));
    assert_eq!(r.divisible_by, vec![0, 1, 2]);

    let conic = CurveInput::new(vec![p("xz+y^2")]);
    let r = hessian_report(conic.product(), &conic).unwrap();
    assert_eq!(r.hessian.degree(), 0);
    assert!(r.divisible_by.is_empty() && r.quotient.is_none());
    let _ = rat(1);
}

#[test]
fn report_for_cl2() {
    let r = polar_report(&cl2()).unwrap();
    assert_eq!(r.degree_estimate.degree, 3);
    assert_eq!(r.contracted_lines, vec![p("x")]);
}
