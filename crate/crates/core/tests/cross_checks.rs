//! Recurrences and series against the brute-force oracle at small sizes.
//! The full sweeps live in the `gpav` acceptance suite.

use gpav_core::gf::{centralizer_ogf, p_egf_counts, EgfExponent};
use gpav_core::recurrences::refined_c_boundaries;
use gpav_core::{
    brute_force_refined, brute_force_sequence, c_sequence, classical_centralizer_set,
    p_closed_form_l1, p_sequence, reference_sequence, CentralizerReading, CountSequence,
    FamilyParams, Kind, PatternFamily, Reference,
};
use num_bigint::BigUint;

const N: usize = 7;

fn oracle(fam: &PatternFamily) -> CountSequence {
    brute_force_sequence(fam, N).unwrap()
}

#[test]
fn c_recurrence_matches_oracle() {
    for params in FamilyParams::all(Kind::C, 4) {
        assert_eq!(
            c_sequence(&params, N).unwrap(),
            oracle(&params.family()),
            "{params}"
        );
    }
}

#[test]
fn p_recurrence_matches_oracle() {
    for params in FamilyParams::all(Kind::P, 4) {
        assert_eq!(
            p_sequence(&params, N).unwrap(),
            oracle(&params.family()),
            "{params}"
        );
    }
}

#[test]
fn boundary_refinement_matches_oracle() {
    for params in FamilyParams::all(Kind::C, 4) {
        let fam = params.family();
        let (k, a) = (params.k(), params.a());
        for n in k..=N {
            let fast = refined_c_boundaries(&params, n).unwrap();
            for (idx, value) in fast.iter().enumerate() {
                let i = idx + 1;
                let first = (n - k + a + 1 - i) as u8;
                assert_eq!(*value, brute_force_refined(&fam, n, &[first]).unwrap());
            }
        }
    }
}

#[test]
fn egf_matches_recurrence() {
    for k in 3..=5 {
        for l in 1..k {
            let params = FamilyParams::p(k, 1, l).unwrap();
            assert_eq!(
                p_egf_counts(k, l, 12, EgfExponent::KMinusL).unwrap(),
                p_sequence(&params, 12).unwrap(),
                "k={k} l={l}"
            );
        }
    }
}

#[test]
fn l1_closed_form() {
    for k in 3..=6 {
        let p = p_sequence(&FamilyParams::p(k, 1, 1).unwrap(), 15).unwrap();
        for n in k - 1..=15 {
            assert_eq!(p_closed_form_l1(k, n).unwrap(), p[n]);
        }
    }
}

#[test]
fn centralizer_series_matches_oracle() {
    for k in [3, 4] {
        let fam = classical_centralizer_set(k, CentralizerReading::Prefix).unwrap();
        let series = centralizer_ogf(k, N).unwrap().count_coeffs().unwrap();
        assert_eq!(series, oracle(&fam).into_values(), "k={k}");
    }
}

#[test]
fn length_three_cases() {
    let fam = |s: &[&str]| {
        PatternFamily::explicit(s.iter().map(|p| p.parse().unwrap()).collect()).unwrap()
    };
    assert_eq!(
        oracle(&fam(&["1-23"])),
        reference_sequence(Reference::Bell, N)
    );
    assert_eq!(
        oracle(&fam(&["2-13"])),
        reference_sequence(Reference::Catalan, N)
    );
    assert_eq!(
        oracle(&fam(&["1-23", "1-32"])),
        reference_sequence(Reference::Involutions, N)
    );
    assert_eq!(
        oracle(&fam(&["1-23", "13-2"])),
        reference_sequence(Reference::Motzkin, N)
    );
}

#[test]
fn count_bounds() {
    for params in FamilyParams::all(Kind::C, 5)
        .into_iter()
        .chain(FamilyParams::all(Kind::P, 5))
    {
        let seq = oracle(&params.family());
        let k = params.k();
        let mut fact = BigUint::from(1u32);
        for (n, v) in seq.values().iter().enumerate() {
            if n > 0 {
                fact *= n;
            }
            assert!(*v <= fact);
            assert!(*v >= BigUint::from(1u32));
        }
        assert!(seq[k] < (1..=k as u32).product::<u32>().into());
    }
}

#[test]
fn ogf_solution_matches_recurrence() {
    use gpav_core::gf::c_ogf_counts;
    for params in FamilyParams::all(Kind::C, 7)
        .into_iter()
        .filter(|p| p.l() >= 2)
    {
        assert_eq!(
            c_ogf_counts(&params, 14).unwrap(),
            c_sequence(&params, 14).unwrap(),
            "{params}"
        );
    }
    assert!(c_ogf_counts(&FamilyParams::c(3, 1, 1).unwrap(), 5).is_err());
}
