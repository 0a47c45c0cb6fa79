use lcrng_core::constructions::{product_ring, zmod, FiniteCommRing};
use lcrng_core::kernel::{enumerate_subgroups, subgroup_closure, Subset};
use proptest::prelude::*;

fn ring_of(factors: &[usize]) -> FiniteCommRing {
    factors[1..]
        .iter()
        .fold(zmod(factors[0]), |acc, &n| product_ring(&acc, &zmod(n)).unwrap())
}

fn small_groups() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(2usize..=4, 1..=2)
        .prop_filter("order at most 12", |f| f.iter().product::<usize>() <= 12)
}

/// Counts subgroups by testing all 2^n subsets.
fn brute_force_count(ring: &FiniteCommRing) -> usize {
    let g = ring.group();
    let n = g.order();
    (0u64..1 << n)
        .filter(|&bits| g.is_subgroup(&Subset::from_bits(n, bits)))
        .count()
}

proptest! {
    #[test]
    fn closure_is_idempotent_and_extensive(factors in small_groups(), seed in any::<u64>()) {
        let ring = ring_of(&factors);
        let g = ring.group();
        let n = g.order();
        let s = Subset::from_bits(n, seed & ((1u64 << n) - 1));
        let c = subgroup_closure(g, &s);
        prop_assert!(s.is_subset_of(&c));
        prop_assert!(g.is_subgroup(&c));
        prop_assert_eq!(subgroup_closure(g, &c), c);
    }

    #[test]
    fn closure_is_monotone(factors in small_groups(), a in any::<u64>(), b in any::<u64>()) {
        let ring = ring_of(&factors);
        let g = ring.group();
        let n = g.order();
        let mask = (1u64 << n) - 1;
        let small = Subset::from_bits(n, a & b & mask);
        let large = Subset::from_bits(n, a & mask);
        prop_assert!(subgroup_closure(g, &small).is_subset_of(&subgroup_closure(g, &large)));
    }

    #[test]
    fn lattice_matches_brute_force(factors in small_groups()) {
        let ring = ring_of(&factors);
        let lattice = enumerate_subgroups(ring.group());
        prop_assert_eq!(lattice.len(), brute_force_count(&ring));
        prop_assert!(lattice.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(lattice.iter().all(|h| ring.group().is_subgroup(h)));
    }
}

#[test]
fn z2_times_z4_has_eight_subgroups() {
    let ring = ring_of(&[2, 4]);
    assert_eq!(enumerate_subgroups(ring.group()).len(), 8);
    assert_eq!(brute_force_count(&ring), 8);
}

#[test]
fn cyclic_lattices_count_divisors() {
    for n in 1..=12usize {
        let divisors = (1..=n).filter(|d| n % d == 0).count();
        assert_eq!(enumerate_subgroups(zmod(n).group()).len(), divisors, "Z{n}");
    }
}
