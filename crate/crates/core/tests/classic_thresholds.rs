//! The search reproduces classical threshold values, computed here from
//! scratch: the 3-color additive Schur threshold (14, one above the Schur
//! number 13) and the 2-color van der Waerden number for 4-term
//! progressions (35).

use ringshift_core::pattern::{find_monochromatic, PatternSpec};
use ringshift_core::search::{rado_number, DomainKind, RadoOutcome};

fn threshold(name: &str, r: u32, max: i64) -> (i64, ringshift_core::domain::Coloring) {
    let p = PatternSpec::parse(name).unwrap();
    match rado_number(&p, r, max, DomainKind::Positive).unwrap() {
        RadoOutcome::Found { n_star, avoider, .. } => {
            let avoider = avoider.unwrap();
            assert!(find_monochromatic(&avoider, &p).unwrap().is_none());
            (n_star, avoider)
        }
        other => panic!("{name}: {other:?}"),
    }
}

#[test]
fn three_color_schur_threshold() {
    let (n_star, avoider) = threshold("schur:add", 3, 20);
    assert_eq!(n_star, 14);
    assert_eq!(avoider.domain().len(), 13);
}

#[test]
fn two_color_four_term_progression_threshold() {
    let (n_star, _) = threshold("ap:4", 2, 40);
    assert_eq!(n_star, 35);
}

#[test]
fn three_color_three_term_progression_threshold() {
    // 3-color van der Waerden number for 3-term progressions
    let (n_star, _) = threshold("ap:3", 3, 40);
    assert_eq!(n_star, 27);
}
