use lcrng_core::catalog;
use lcrng_core::constructions::{
    enumerate_lcrngs, find_isomorphism, product_ring, semidirect_null, zmod, CensusOptions, RingHom,
};
use lcrng_core::kernel::Elem;
use lcrng_core::lcrng::{left_identities, validate_lcrng, LcRng};

/// Tries every permutation fixing 0 and sending the designated left identity
/// to the designated left identity.
fn isomorphic_by_permutation(r: &LcRng, s: &LcRng) -> bool {
    let n = r.order();
    if n != s.order() {
        return false;
    }
    let mut perm: Vec<Elem> = (0..n).collect();
    fn next(p: &mut [Elem]) -> bool {
        let Some(i) = (0..p.len().saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
            return false;
        };
        let j = (i + 1..p.len()).rev().find(|&j| p[j] > p[i]).unwrap();
        p.swap(i, j);
        p[i + 1..].reverse();
        true
    }
    loop {
        let ok = perm[0] == 0
            && perm[r.left_identity()] == s.left_identity()
            && (0..n).all(|x| {
                (0..n).all(|y| {
                    perm[r.add(x, y)] == s.add(perm[x], perm[y])
                        && perm[r.mul(x, y)] == s.mul(perm[x], perm[y])
                })
            })
            && r.halo().iter().all(|a| {
                r.halo()
                    .iter()
                    .all(|b| perm[r.local(a, b)] == s.local(perm[a], perm[b]))
            });
        if ok {
            return true;
        }
        if !next(&mut perm) {
            return false;
        }
    }
}

#[test]
fn klein_census_contains_r4() {
    let klein = product_ring(&zmod(2), &zmod(2)).unwrap();
    let found = enumerate_lcrngs(klein.group(), &CensusOptions::default()).unwrap();
    assert!(!found.is_empty());
    // r4 lives on Z2 x Z2 with the same numbering as the census group
    let r4 = catalog::r4();
    assert!(found.iter().any(|r| find_isomorphism(r, &r4).is_some()));
}

#[test]
fn census_is_pairwise_non_isomorphic() {
    for factors in [vec![4], vec![2, 2], vec![2, 4], vec![6]] {
        let ring = factors[1..]
            .iter()
            .fold(zmod(factors[0]), |acc, &n| product_ring(&acc, &zmod(n)).unwrap());
        let found = enumerate_lcrngs(ring.group(), &CensusOptions::default()).unwrap();
        for (i, r) in found.iter().enumerate() {
            for s in &found[i + 1..] {
                assert!(!isomorphic_by_permutation(r, s), "{factors:?}: duplicate classes");
            }
        }
    }
}

#[test]
fn dedup_agrees_with_permutation_search() {
    let klein = product_ring(&zmod(2), &zmod(2)).unwrap();
    let group = klein.group();
    let all = enumerate_lcrngs(
        group,
        &CensusOptions {
            dedup: false,
            ..CensusOptions::default()
        },
    )
    .unwrap();
    let classes = enumerate_lcrngs(group, &CensusOptions::default()).unwrap();
    assert!(all.len() >= classes.len());
    for r in &all {
        let matches = classes.iter().filter(|c| isomorphic_by_permutation(r, c)).count();
        assert_eq!(matches, 1);
    }
    for r in &all {
        for s in &all {
            assert_eq!(
                find_isomorphism(r, s).is_some(),
                isomorphic_by_permutation(r, s)
            );
        }
    }
}

#[test]
fn semidirect_shape() {
    let a = zmod(4);
    let b = zmod(2);
    for phi in lcrng_core::constructions::ring_homs(&a, &b) {
        let r = validate_lcrng(semidirect_null(&a, &b, &phi).unwrap()).unwrap();
        let na = a.order();
        let pairs = |f: &dyn Fn(Elem, Elem) -> bool| {
            (0..r.order())
                .filter(|&i| f(i % na, i / na))
                .collect::<Vec<_>>()
        };
        assert_eq!(r.halo().to_vec(), pairs(&|x, _| x == 0));
        assert_eq!(r.r0().to_vec(), pairs(&|_, y| y == 0));
        assert_eq!(left_identities(&r).to_vec(), pairs(&|x, _| x == a.one()));
    }
    let klein = product_ring(&zmod(2), &zmod(2)).unwrap();
    assert!(RingHom::new(&klein, &zmod(2), vec![0, 1, 0, 1]).is_ok());
}

#[test]
fn census_of_z8_validates() {
    // every structure found validates and has a nonzero halo
    let found = enumerate_lcrngs(zmod(8).group(), &CensusOptions::default()).unwrap();
    for r in found {
        assert!(r.halo().len() > 1);
        assert!(validate_lcrng(r.raw().clone()).is_ok());
    }
}
