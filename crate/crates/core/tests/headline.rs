//! Regression for the flagship glue equation x + (y−x)² = w₁ + w₂ + w₁w₂
//! with x ≠ y, under two colors. The threshold is an output of this tool,
//! frozen here after cross-checking against the exhaustive oracle.

use ringshift_core::domain::Domain;
use ringshift_core::pattern::{find_monochromatic, PatternSpec};
use ringshift_core::search::{
    brute_force_decide, decide, rado_number, DomainKind, RadoOutcome, SearchOutcome,
};

#[test]
fn headline_equation_rado_number_is_six() {
    let p = PatternSpec::parse("glue:poly=d^2:star=1,1").unwrap();
    match rado_number(&p, 2, 200, DomainKind::Positive).unwrap() {
        RadoOutcome::Found { n_star, avoider, .. } => {
            assert_eq!(n_star, 6);
            let avoider = avoider.unwrap();
            assert!(find_monochromatic(&avoider, &p).unwrap().is_none());
            // the forced chain from color(1) = 0 pins the avoider exactly
            assert_eq!(avoider.colors(), &[0, 1, 1, 0, 0]);
        }
        other => panic!("expected a threshold, got {other:?}"),
    }

    // oracle confirmation on both sides of the threshold
    assert!(matches!(
        brute_force_decide(&p, 2, &Domain::positive(5).unwrap()).unwrap(),
        SearchOutcome::Avoidable(_)
    ));
    assert!(matches!(
        brute_force_decide(&p, 2, &Domain::positive(6).unwrap()).unwrap(),
        SearchOutcome::Unavoidable(_)
    ));
    assert!(matches!(
        decide(&p, 2, &Domain::positive(6).unwrap()).unwrap(),
        SearchOutcome::Unavoidable(_)
    ));
}

#[test]
fn cubic_variant_terminates() {
    // same glue family with P(d) = d^3; the exact value is informational,
    // termination and verification are the contract
    let p = PatternSpec::parse("glue:poly=d^3:star=1,1").unwrap();
    match rado_number(&p, 2, 200, DomainKind::Positive).unwrap() {
        RadoOutcome::Found { n_star, avoider, .. } => {
            assert!(n_star >= 2);
            if let Some(avoider) = avoider {
                assert!(find_monochromatic(&avoider, &p).unwrap().is_none());
            }
        }
        RadoOutcome::BoundExceeded { avoider, .. } => {
            assert!(find_monochromatic(&avoider, &p).unwrap().is_none());
        }
    }
}
