use super::*;
use crate::algebra::rat;
use crate::cli::parse_poly;

fn p(s: &str) -> HPoly {
    parse_poly(s).unwrap()
}

fn syz(a: &str, b: &str, c: &str) -> SyzygyVec {
    let parts: Vec<Option<HPoly>> = [a, b, c]
        .iter()
        .map(|s| if *s == "0" { None } else { Some(p(s)) })
        .collect();
    let deg = parts.iter().flatten().next().map_or(0, |f| f.degree());
    let mut it = parts.into_iter().map(|f| f.unwrap_or_else(|| HPoly::zero(deg)));
    SyzygyVec::new(it.next().unwrap(), it.next().unwrap(), it.next().unwrap()).unwrap()
}

#[test]
fn linear_syzygies() {
    let s = syzygy_space(&p("y^4z + x^5"), 1).unwrap();
    assert_eq!(s.len(), 1);
    assert!(s[0].is_proportional_to(&syz("0", "y", "-4z")));

    let c1 = p("(x^2 + xz + y^2)(x^2 + 2(xz + y^2))(x^2 - 3(xz + y^2))");
    let s = syzygy_space(&c1, 1).unwrap();
    assert_eq!(s.len(), 1);
    assert!(s[0].is_proportional_to(&syz("0", "x", "-2y")));

    let cl2 = p("x(xz + y^2)(xz + 2y^2)");
    let s = syzygy_space(&cl2, 1).unwrap();
    assert_eq!(s.len(), 1);
    assert!(s[0].is_proportional_to(&syz("4x", "-y", "-6z")));
}

#[test]
fn minimal_degrees() {
    assert_eq!(mdr(&p("xy(x+y)")).unwrap(), 0);
    assert_eq!(mdr(&p("y^4z + x^5")).unwrap(), 1);
    assert_eq!(mdr(&p("(x^2+y^2+z^2)(x^3+y^3+z^3)")).unwrap(), 3);
}

#[test]
fn fermat_cubic_hilbert_table() {
    let f = p("x^3 + y^3 + z^3");
    let table: Vec<usize> = (0..5).map(|t| hilbert_function(&f, t).unwrap()).collect();
    assert_eq!(table, vec![1, 3, 3, 1, 0]);
    assert_eq!(tjurina(&f).unwrap(), 0);
}

#[test]
fn golden_curves() {
    let mut j = Jacobian::new(&p("y^4z + x^5 + x^2y^3")).unwrap();
    assert_eq!((j.mdr(), j.tjurina().unwrap()), (2, 12));
    assert_eq!(j.freeness(), Freeness::Free { d1: 2, d2: 2 });

    let mut j = Jacobian::new(&p("y^4z + x^5")).unwrap();
    assert_eq!((j.mdr(), j.tjurina().unwrap()), (1, 12));
    assert_eq!(j.freeness(), Freeness::NearlyFree { d1: 1, d2: 4 });
    assert_eq!(j.hilbert(40), 12);

    let mut j = Jacobian::new(&p("(x^2+y^2+z^2)(x^3+y^3+z^3)")).unwrap();
    assert_eq!((j.mdr(), j.tjurina().unwrap()), (3, 6));
    assert_eq!(
        j.freeness(),
        Freeness::Neither {
            generator_degrees: vec![3, 4, 4, 4],
            scanned_through: 4
        }
    );
}

#[test]
fn dpw_examples() {
    let c = dpw_check(&p("(x^2+y^2+z^2)(x^3+y^3+z^3)")).unwrap();
    assert_eq!((c.lower, c.upper, c.tau, c.holds), (4, 13, 6, true));
    let l = dpw_check(&p("z x y (x+y)(x-y)")).unwrap();
    assert_eq!((l.lower, l.upper, l.tau, l.holds), (12, 13, 13, true));
    let c2 = dpw_check(&p("(xz+y^2)(xz+2y^2)(xz+3y^2)")).unwrap();
    assert_eq!((c2.lower, c2.upper, c2.tau, c2.holds), (20, 21, 20, true));
    assert_eq!(dpw_check(&p("xy(x+y)")), Err(JacobianError::ConcurrentLines));
}

#[test]
fn concurrent_lines_take_the_closed_form() {
    let f = p("xy(x+y)(x-y)");
    assert_eq!(tjurina(&f).unwrap(), 9);
    assert_eq!(resolution_probe(&f).unwrap(), Freeness::ConcurrentLines);
}

#[test]
fn non_reduced_input_has_no_plateau() {
    let err = tjurina(&p("x^2 y z")).unwrap_err();
    assert!(matches!(err, JacobianError::NoPlateau { .. }));
}

#[test]
fn lifting_through_a_product() {
    let f1 = p("x^2 + xz + y^2");
    let f2 = p("x");
    let d1 = syz("0", "x", "-2y");
    assert!(d1.derive(&f2).is_zero());
    let d = lift_syzygy(&d1, &f1, &f2).unwrap();
    assert_eq!(d, syz("0", "x^2", "-2xy"));

    let g1 = p("y^4z + x^5");
    let e1 = syz("0", "y", "-4z");
    let e = lift_syzygy(&e1, &g1, &f2).unwrap();
    assert_eq!(e, syz("0", "xy", "-4xz"));
    assert!(e.is_syzygy_of(&g1.mul(&f2)));

    assert_eq!(
        lift_syzygy(&e1, &g1, &HPoly::one()),
        Err(JacobianError::ConstantFactor)
    );
    assert_eq!(
        lift_syzygy(&syz("x", "0", "0"), &g1, &f2),
        Err(JacobianError::InvalidSyzygy)
    );
}

#[test]
fn explicit_degree_two_syzygy_of_the_pencil() {
    let (a1, a2) = (rat(2), rat(-3));
    let q = p("xz + y^2");
    let x2 = p("x^2");
    let f = (&x2 + &q.scale(&a1)).mul(&(&x2 + &q.scale(&a2)));
    let s = &a1 + &a2;
    let pr = &a1 * &a2;
    let a = &p("x^2").scale(&-s.clone()) - &p("y^2 + xz").scale(&(rat(2) * &pr));
    let b = p("yz").scale(&pr);
    let c = &(&(&p("4x^2") + &p("y^2").scale(&(rat(2) * &s))) + &p("xz").scale(&(rat(3) * &s)))
        + &p("z^2").scale(&(rat(2) * &pr));
    let delta = SyzygyVec::new(a, b, c).unwrap();
    assert!(delta.is_syzygy_of(&f));
}
