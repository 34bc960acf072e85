use super::*;
use crate::algebra::rat;
use crate::cli::parse_poly;
use crate::jacobian::{analyze, Freeness};

fn p(s: &str) -> HPoly {
    parse_poly(s).unwrap()
}

fn curve(parts: &[&str]) -> CurveInput {
    CurveInput::new(parts.iter().map(|s| p(s)).collect())
}

#[test]
fn normal_forms() {
    let l = generate_family(FamilyTag::L, &int_params(&[1, 0, 0, 1, 1, 1])).unwrap();
    assert_eq!(l.components(), curve(&["z", "x", "y", "x+y"]).components());
    let cl2 = generate_family(FamilyTag::CL2, &int_params(&[1, 2])).unwrap();
    assert_eq!(cl2.components(), curve(&["x", "xz+y^2", "xz+2y^2"]).components());
    assert_eq!(cl2.degree(), 5);
    let c2 = generate_family(FamilyTag::C2, &int_params(&[1, 2, 3])).unwrap();
    assert_eq!(c2.components(), curve(&["xz+y^2", "xz+2y^2", "xz+3y^2"]).components());
}

#[test]
fn bad_parameters() {
    assert!(matches!(
        generate_family(FamilyTag::C1, &int_params(&[1, 1])),
        Err(ArrangementError::DuplicateParameters(..))
    ));
    assert!(matches!(
        generate_family(FamilyTag::C1, &int_params(&[0, 1])),
        Err(ArrangementError::ZeroParameter(_))
    ));
    assert!(matches!(
        generate_family(FamilyTag::CL5, &int_params(&[3])),
        Err(ArrangementError::TooFew { .. })
    ));
    assert!(matches!(
        generate_family(FamilyTag::L, &int_params(&[1, 1, 2, 2])),
        Err(ArrangementError::DuplicateParameters(..))
    ));
}

#[test]
fn validation() {
    assert_eq!(
        validate(&curve(&["x", "2x"]), false),
        Err(Diagnostic::DuplicateComponents { first: 0, second: 1 })
    );
    assert_eq!(
        validate(&curve(&["y^2"]), false),
        Err(Diagnostic::DegenerateConic { index: 0, rank: 1 })
    );
    assert_eq!(validate(&curve(&["x", "xz+y^2"]), true), Ok(()));
    assert!(validate(&curve(&["xy"]), false).is_ok());
    assert!(validate(&curve(&["xy"]), true).is_err());
}

#[test]
fn pair_classes() {
    assert_eq!(pair_class(&p("xz+y^2"), &p("xz+2y^2")).unwrap(), PairClass::Tacnodal);
    assert_eq!(
        pair_class(&p("x^2+xz+y^2"), &p("x^2+2xz+2y^2")).unwrap(),
        PairClass::Hyperosculating
    );
    assert_eq!(pair_class(&p("xz+y^2"), &p("x^2+y^2-z^2")).unwrap(), PairClass::Other);
    assert!(pair_class(&p("xz+y^2"), &p("2xz+2y^2")).is_err());
}

#[test]
fn pencils() {
    let bit = detect_pencil(&[p("xz+y^2"), p("xz+2y^2"), p("xz+3y^2")]).unwrap();
    assert_eq!(bit.kind, PencilKind::Bitangent);
    let hyp = detect_pencil(&[p("x^2+xz+y^2"), p("x^2+3xz+3y^2")]).unwrap();
    assert_eq!(hyp.kind, PencilKind::Hyperosculating);
    let other = detect_pencil(&[p("xz+y^2"), p("x^2+y^2-z^2")]).unwrap();
    assert_eq!(other.kind, PencilKind::Other);
    assert!(detect_pencil(&[p("xz+y^2")]).is_err());
}

#[test]
fn line_roles() {
    let pencil = PencilClass {
        kind: PencilKind::Bitangent,
        basis: Some([p("xz"), p("y^2")]),
    };
    assert_eq!(line_role(&p("y"), &pencil).unwrap(), LineRole::BaseLine);
    assert_eq!(line_role(&p("x"), &pencil).unwrap(), LineRole::TangentLine);
    assert_eq!(line_role(&p("z"), &pencil).unwrap(), LineRole::TangentLine);
    assert_eq!(line_role(&p("x+y+z"), &pencil).unwrap(), LineRole::Generic);
    let other = PencilClass {
        kind: PencilKind::Other,
        basis: None,
    };
    assert!(line_role(&p("x"), &other).is_err());
}

#[test]
fn recognition_examples() {
    assert_eq!(recognize(&curve(&["z", "x", "y", "x+y"])).unwrap(), FamilyTag::L);
    assert_eq!(recognize(&curve(&["x", "xz+y^2", "xz+2y^2"])).unwrap(), FamilyTag::CL2);
    assert_eq!(
        recognize(&curve(&["x+y+z", "xz+y^2", "xz+2y^2"])).unwrap(),
        FamilyTag::Unrecognized
    );
    // All lines through one point.
    assert_eq!(recognize(&curve(&["x", "y", "x+y", "x-y"])).unwrap(), FamilyTag::Unrecognized);
    assert!(matches!(
        recognize(&curve(&["x^3+y^3+z^3", "x"])),
        Err(ArrangementError::HighDegree { index: 0, degree: 3 })
    ));
}

#[test]
fn round_trip_in_both_coordinate_systems() {
    for (k, tag) in FamilyTag::FAMILIES.iter().enumerate() {
        for random in [false, true] {
            let mut rng = trial_rng(11, k as u64);
            let inst = sample_instance(*tag, 4, 8, random, &mut rng).unwrap();
            assert_eq!(recognize(&inst.curve).unwrap(), *tag, "{tag} random={random}");
        }
        let mut rng = trial_rng(12, k as u64);
        let inst = sample_instance(*tag, 5, 8, false, &mut rng).unwrap();
        let bad = perturb_off_pencil(*tag, &inst.normal_form);
        assert_eq!(recognize(&bad).unwrap(), FamilyTag::Unrecognized, "perturbed {tag}");
    }
}

#[test]
fn linear_syzygy_of_l_family() {
    let l = generate_family(FamilyTag::L, &int_params(&[1, 0, 0, 1, 1, 1, 1, -1])).unwrap();
    let r = analyze(l.product()).unwrap();
    assert_eq!((r.d, r.r, r.tau), (5, 1, 13));
    assert_eq!(r.freeness, Freeness::Free { d1: 1, d2: 3 });
}

#[test]
fn tags_parse_and_print() {
    for t in FamilyTag::FAMILIES {
        assert_eq!(t.name().parse::<FamilyTag>().unwrap(), t);
    }
    assert_eq!("cl3".parse::<FamilyTag>().unwrap(), FamilyTag::CL3);
    assert_eq!(FamilyTag::Unrecognized.to_string(), "None");
    assert!("CL9".parse::<FamilyTag>().is_err());
    assert_eq!(FamilyTag::CL5.degree_for(2), 7);
    assert_eq!(FamilyTag::C2.counts_for_degrees(6, 10), vec![3, 4, 5]);
    let _ = rat(0);
}

#[test]
fn linear_syzygies_of_normal_forms() {
    use crate::jacobian::{syzygy_space, SyzygyVec};
    for tag in FamilyTag::FAMILIES {
        let m = if tag == FamilyTag::L { 4 } else { 3 };
        let mut rng = trial_rng(21, 0);
        let params = random_params(tag, m, &mut rng);
        let c = generate_family(tag, &params).unwrap();
        let d = c.degree() as i64;
        let (a, b, cc) = match tag {
            FamilyTag::C1 | FamilyTag::CL1 => ("0".to_string(), "x".to_string(), "-2y".to_string()),
            // A lone tangent line x (with or without the base line y) shifts
            // the syzygy of the pencil by a multiple of the Euler relation.
            FamilyTag::CL2 | FamilyTag::CL4 => {
                (format!("{}x", d - 1), "-y".into(), format!("-{}z", d + 1))
            }
            FamilyTag::L => ("x".into(), "y".into(), format!("{}z", 1 - d)),
            _ => ("x".into(), "0".into(), "-z".into()),
        };
        let q = |s: &str| parse_poly(s).unwrap_or_else(|_| HPoly::zero(1));
        let want = SyzygyVec::new(q(&a), q(&b), q(&cc)).unwrap();
        let got = syzygy_space(c.product(), 1).unwrap();
        assert_eq!(got.len(), 1, "{tag}");
        assert!(got[0].is_proportional_to(&want), "{tag}: {}", got[0]);
    }
}
