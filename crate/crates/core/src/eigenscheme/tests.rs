use super::*;
use crate::algebra::{point, ratio};
use crate::arrangements::{generate_family, int_params, FamilyTag};
use crate::cli::parse_poly;
use crate::jacobian::tjurina;
use rand::{Rng, SeedableRng};

fn p(s: &str) -> HPoly {
    parse_poly(s).unwrap()
}

fn tensor(a: &str, b: &str, c: &str) -> Tensor {
    let e = p(a).degree().max(p(b).degree()).max(p(c).degree());
    let q = |s: &str| parse_poly(s).unwrap_or_else(|_| HPoly::zero(e));
    Tensor::new(q(a), q(b), q(c)).unwrap()
}

fn fermat() -> Tensor {
    tensor("x^2", "y^2", "z^2")
}

#[test]
fn minors() {
    assert_eq!(
        fermat().minors(),
        [p("xy^2-x^2y"), p("xz^2-x^2z"), p("yz^2-y^2z")]
    );
    assert!(tensor("x", "y", "z").minors().iter().all(|m| m.is_zero()));
    let t = Tensor::new(p("y"), p("x"), HPoly::zero(1)).unwrap();
    assert_eq!(t.minors(), [p("x^2-y^2"), p("-yz"), p("-xz")]);
}

#[test]
fn bad_tensors() {
    assert_eq!(
        Tensor::new(p("x"), p("y^2"), p("z")),
        Err(EigenError::DegreeMismatch(1, 2, 1))
    );
    assert_eq!(
        Tensor::new(HPoly::zero(2), HPoly::zero(2), HPoly::zero(2)),
        Err(EigenError::ZeroTensor)
    );
}

#[test]
fn fermat_eigenpoints() {
    let t = fermat();
    assert_eq!(eigenscheme_degree(&t), Ok(7));
    assert!(contains_point(&t, &point([1, 1, 1])).unwrap());
    assert!(contains_point(&t, &point([1, 1, 0])).unwrap());
    assert!(!contains_point(&t, &point([1, 2, 0])).unwrap());
    assert!(contains_point(&t, &point([0, 0, 0])).is_err());
}

#[test]
fn identity_tensor_is_not_zero_dimensional() {
    assert_eq!(
        eigenscheme_degree(&tensor("x", "y", "z")),
        Err(EigenError::NotZeroDimensional)
    );
    // A common factor of the minors gives a curve of eigenpoints.
    assert_eq!(
        eigenscheme_degree(&tensor("x^2", "xy", "z^2")),
        Err(EigenError::NotZeroDimensional)
    );
}

#[test]
fn random_tensors_have_generic_length() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    for e in 1..=3u32 {
        let mut rand_form = || {
            HPoly::from_terms(
                e,
                crate::algebra::monomials(e)
                    .into_iter()
                    .map(|m| (m, rat(rng.gen_range(-5..=5)))),
            )
            .unwrap()
        };
        let t = Tensor::new(rand_form(), rand_form(), rand_form()).unwrap();
        assert_eq!(eigenscheme_degree(&t), Ok((e * e + e + 1) as usize), "e = {e}");
    }
}

#[test]
fn line_arrangement_is_an_eigenscheme() {
    let f = generate_family(FamilyTag::L, &int_params(&[1, 0, 0, 1, 1, 1])).unwrap();
    let t = jacobian_to_tensor(f.product()).unwrap();
    assert_eq!(t.degree(), 2);
    assert_eq!(eigenscheme_degree(&t), Ok(7));
}

#[test]
fn hyperosculating_conics_are_not() {
    let f = generate_family(FamilyTag::C1, &int_params(&[1, 2, 3])).unwrap();
    assert_eq!(
        jacobian_to_tensor(f.product()),
        Err(EigenError::NotEigenscheme(NotEigenscheme::EntriesDependent))
    );
    let smooth = p("x^3+y^3+z^3");
    assert_eq!(
        jacobian_to_tensor(&smooth),
        Err(EigenError::NotEigenscheme(NotEigenscheme::NoLinearSyzygy))
    );
}

#[test]
fn cusp_with_inflectional_tangent() {
    let f = p("y(x^3-y^2z)");
    let s = SyzygyVec::new(p("x"), p("-3y"), p("9z")).unwrap();
    assert!(s.is_syzygy_of(&f));
    let t = jacobian_to_tensor(&f).unwrap();
    assert_eq!(eigenscheme_degree(&t), Ok(tjurina(&f).unwrap()));
}

#[test]
fn hilbert_burch_matrices() {
    let l = generate_family(FamilyTag::L, &int_params(&[1, 0, 0, 1, 1, 1])).unwrap();
    let f = l.product();
    let s = SyzygyVec::new(p("x"), p("y"), p("-3z")).unwrap();
    let hb = buchweitz_conca_matrix(f, &s).unwrap();
    // Proportional to (f_yz / (1 - d), f_xz / (d - 1), 0).
    let expected = SyzygyVec::new(
        f.partial(Var::Y).partial(Var::Z).scale(&ratio(-1, 3)),
        f.partial(Var::X).partial(Var::Z).scale(&ratio(1, 3)),
        HPoly::zero(2),
    )
    .unwrap();
    assert!(SyzygyVec::from_array(hb.high_column.clone())
        .unwrap()
        .is_proportional_to(&expected));

    let cl2 = generate_family(FamilyTag::CL2, &int_params(&[1, 2])).unwrap();
    let s = SyzygyVec::new(p("4x"), p("-y"), p("-6z")).unwrap();
    assert!(buchweitz_conca_matrix(cl2.product(), &s).is_ok());

    let cubic = p("x^3+y^3+z^3");
    let s = SyzygyVec::new(p("x"), p("y"), p("z")).unwrap();
    assert_eq!(buchweitz_conca_matrix(&cubic, &s), Err(EigenError::InvalidSyzygy));
    let s = SyzygyVec::new(p("y"), p("y"), p("z")).unwrap();
    assert_eq!(buchweitz_conca_matrix(&cubic, &s), Err(EigenError::NotDiagonal));
}

#[test]
fn blowup_classes() {
    assert_eq!(blowup_class(5), Ok((rat(4), rat(5), rat(1))));
    assert_eq!(blowup_class(3), Ok((rat(2), rat(3), rat(1))));
    assert_eq!(blowup_class(10), Ok((rat(9), rat(10), rat(1))));
    assert_eq!(blowup_class(2), Err(EigenError::DegreeTooLow(2)));
}
