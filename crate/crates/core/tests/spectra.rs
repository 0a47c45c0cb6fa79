mod common;

use lcrng_core::catalog;
use lcrng_core::ideals::{enumerate_ideals, spectrum};
use lcrng_core::kernel::{Elem, Subset};
use lcrng_core::lyingover::{embed_check, verify_lying_over_all};
use lcrng_core::ideals::SubrngMode;

fn lists(sets: Vec<Subset>) -> Vec<Vec<Elem>> {
    sets.iter().map(Subset::to_vec).collect()
}

#[test]
fn ideals_match_subset_search() {
    for (name, r) in catalog::all() {
        if r.order() > 16 {
            continue;
        }
        let got = lists(enumerate_ideals(&r).into_iter().map(|i| i.carrier).collect());
        assert_eq!(got, common::brute_ideals(&r), "{name}");
    }
}

#[test]
fn spectra_match_subset_search() {
    for (name, r) in catalog::all() {
        if r.order() > 16 {
            continue;
        }
        assert_eq!(lists(spectrum(&r).carriers()), common::brute_spectrum(&r), "{name}");
    }
}

#[test]
fn z6z3_spectrum_from_ideal_list() {
    let r = catalog::z6z3();
    let expected: Vec<Vec<Elem>> = enumerate_ideals(&r)
        .iter()
        .filter(|i| common::is_prime(&r, i.carrier.bits()))
        .map(|i| i.carrier.to_vec())
        .collect();
    assert_eq!(lists(spectrum(&r).carriers()), expected);
    assert!(!expected.is_empty());
}

#[test]
fn r8_has_five_ideals() {
    assert_eq!(common::brute_ideals(&catalog::r8()).len(), 5);
}

#[test]
fn lying_over_on_every_strict_subrng_of_r16() {
    let u = catalog::r16();
    for s in lcrng_core::constructions::strict_subrngs(&u) {
        let pair = embed_check(&u, &s, SubrngMode::Strict).unwrap();
        let report = verify_lying_over_all(&pair);
        assert!(report.pass, "{s}");
        assert!(report.maximal_elements_ok(), "{s}");
    }
}
