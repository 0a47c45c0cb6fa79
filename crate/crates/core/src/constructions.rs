//! Builders for concrete structures and an exhaustive census.
//!
//! The workhorse is the null left-action construction `A ⋉ B`: carrier
//! `A x B`, componentwise addition, product `(a,b)(a',b') = (aa', φ(a)b')`
//! and local product `(0,b)#(0,b') = (0,bb')`. Element `(a,b)` has index
//! `a + |A|·b`.

use std::collections::HashSet;

use thiserror::Error;

use crate::kernel::{
    enumerate_subgroups, validate_group, Elem, FiniteAbelianGroup, FiniteTable, Subset, UNDEFINED,
};
use crate::lcrng::{left_identities, validate_lcrng, LcRng, RawLcRng};
use crate::violation::{first_pair, first_triple, render_violations, Axiom, Violation};

/// Census searches are bounded to groups of at most this order.
pub const MAX_CENSUS_ORDER: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("the ring B is the zero ring")]
    ZeroB,
    #[error("homomorphism does not send 1 to 1")]
    NonUnitalHom,
    #[error("map has {found} entries, expected {expected}")]
    MapLength { found: usize, expected: usize },
    #[error("commutative ring axioms fail:\n{}", render_violations(.0))]
    Violations(Vec<Violation>),
    #[error("group order {0} exceeds the census bound of {MAX_CENSUS_ORDER}")]
    OrderTooLarge(usize),
    #[error("product order {0} exceeds the supported maximum")]
    ProductTooLarge(usize),
}

/// A finite commutative ring with identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteCommRing {
    group: FiniteAbelianGroup,
    mul: FiniteTable,
    one: Elem,
}

/// Checks that `mul` makes `group` a commutative unital ring with identity `one`.
pub fn validate_ring(
    group: FiniteAbelianGroup,
    mul: FiniteTable,
    one: Elem,
) -> Result<FiniteCommRing, ConstructionError> {
    let n = group.order();
    if mul.order() != n {
        return Err(ConstructionError::MapLength {
            found: mul.order(),
            expected: n,
        });
    }
    let mut v = Vec::new();
    if let Some(w) = mul.first_undefined() {
        v.push(Violation::new(Axiom::UndefinedEntry, w, "mul"));
    }
    if let Some(w) = mul.out_of_range() {
        v.push(Violation::new(Axiom::EntryOutOfRange, w, "mul"));
    }
    if one >= n {
        v.push(Violation::new(Axiom::EntryOutOfRange, [one], "one"));
    }
    if !v.is_empty() {
        return Err(ConstructionError::Violations(v));
    }
    let m = |x, y| mul.get(x, y);
    if let Some(w) = first_triple(n, |x, y, z| m(x, group.add(y, z)) != group.add(m(x, y), m(x, z))) {
        v.push(Violation::new(Axiom::LeftDistributive, w, ""));
    }
    if let Some(w) = first_triple(n, |x, y, z| m(m(x, y), z) != m(x, m(y, z))) {
        v.push(Violation::new(Axiom::MulAssociative, w, ""));
    }
    if let Some(w) = first_pair(n, |x, y| m(x, y) != m(y, x)) {
        v.push(Violation::new(Axiom::RingCommutative, w, ""));
    }
    if let Some(x) = (0..n).find(|&x| m(one, x) != x || m(x, one) != x) {
        v.push(Violation::new(Axiom::RingIdentity, [x], ""));
    }
    if v.is_empty() {
        Ok(FiniteCommRing { group, mul, one })
    } else {
        Err(ConstructionError::Violations(v))
    }
}

impl FiniteCommRing {
    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn mul_table(&self) -> &FiniteTable {
        &self.mul
    }

    #[inline]
    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        self.group.add(x, y)
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.mul.get(x, y)
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn is_zero_ring(&self) -> bool {
        self.order() == 1
    }
}

/// Integers mod `n`, element `i` standing for `i mod n`.
pub fn zmod(n: usize) -> FiniteCommRing {
    assert!(n >= 1, "zmod needs n >= 1");
    let group = validate_group(FiniteTable::from_fn(n, |x, y| (x + y) % n))
        .expect("cyclic group table");
    let mul = FiniteTable::from_fn(n, |x, y| (x * y) % n);
    FiniteCommRing {
        group,
        mul,
        one: 1 % n,
    }
}

/// `A x B` with `(a,b)` at index `a + |A|·b`.
pub fn product_ring(a: &FiniteCommRing, b: &FiniteCommRing) -> Result<FiniteCommRing, ConstructionError> {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    if n > crate::kernel::MAX_ORDER {
        return Err(ConstructionError::ProductTooLarge(n));
    }
    let split = |x: Elem| (x % na, x / na);
    let group = validate_group(FiniteTable::from_fn(n, |x, y| {
        let ((p, q), (r, s)) = (split(x), split(y));
        a.add(p, r) + na * b.add(q, s)
    }))
    .expect("product of groups");
    let mul = FiniteTable::from_fn(n, |x, y| {
        let ((p, q), (r, s)) = (split(x), split(y));
        a.mul(p, r) + na * b.mul(q, s)
    });
    Ok(FiniteCommRing {
        group,
        mul,
        one: a.one() + na * b.one(),
    })
}

/// A unital ring homomorphism, stored as its table of images.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingHom {
    map: Vec<Elem>,
}

impl RingHom {
    pub fn new(a: &FiniteCommRing, b: &FiniteCommRing, map: Vec<Elem>) -> Result<Self, ConstructionError> {
        if map.len() != a.order() {
            return Err(ConstructionError::MapLength {
                found: map.len(),
                expected: a.order(),
            });
        }
        if let Some(x) = map.iter().position(|&y| y >= b.order()) {
            return Err(ConstructionError::Violations(vec![Violation::new(
                Axiom::EntryOutOfRange,
                [x],
                "map",
            )]));
        }
        let n = a.order();
        let mut v = Vec::new();
        if let Some(w) = first_pair(n, |x, y| map[a.add(x, y)] != b.add(map[x], map[y])) {
            v.push(Violation::new(Axiom::HomAdditive, w, ""));
        }
        if let Some(w) = first_pair(n, |x, y| map[a.mul(x, y)] != b.mul(map[x], map[y])) {
            v.push(Violation::new(Axiom::HomMultiplicative, w, ""));
        }
        if !v.is_empty() {
            return Err(ConstructionError::Violations(v));
        }
        if map[a.one()] != b.one() {
            return Err(ConstructionError::NonUnitalHom);
        }
        Ok(RingHom { map })
    }

    pub fn identity(a: &FiniteCommRing) -> Self {
        RingHom {
            map: (0..a.order()).collect(),
        }
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.map[x]
    }

    pub fn images(&self) -> &[Elem] {
        &self.map
    }
}

/// Every unital homomorphism `A → B`, ordered by image vector.
pub fn ring_homs(a: &FiniteCommRing, b: &FiniteCommRing) -> Vec<RingHom> {
    let gens = a.group().generators();
    let coords = a.group().coordinates(&gens);
    let mut out = Vec::new();
    let mut images = vec![0; gens.len()];
    loop {
        let map: Vec<Elem> = coords
            .iter()
            .map(|c| {
                let c = c.as_ref().expect("generators span the group");
                b.group()
                    .sum(c.iter().zip(&images).map(|(&k, &img)| b.group().scale(k, img)))
            })
            .collect();
        if let Ok(h) = RingHom::new(a, b, map) {
            out.push(h);
        }
        if !advance(&mut images, |_| b.order()) {
            break;
        }
    }
    out.sort_by(|x, y| x.map.cmp(&y.map));
    out.dedup();
    out
}

/// Mixed-radix increment; returns false after the last combination.
fn advance(digits: &mut [usize], radix: impl Fn(usize) -> usize) -> bool {
    for i in (0..digits.len()).rev() {
        digits[i] += 1;
        if digits[i] < radix(i) {
            return true;
        }
        digits[i] = 0;
    }
    false
}

/// The null left-action construction `A ⋉ B` through `φ: A → B`.
///
/// The result always satisfies the left commutative rng axioms; callers still
/// run [`validate_lcrng`] on it.
pub fn semidirect_null(
    a: &FiniteCommRing,
    b: &FiniteCommRing,
    phi: &RingHom,
) -> Result<RawLcRng, ConstructionError> {
    if b.is_zero_ring() {
        return Err(ConstructionError::ZeroB);
    }
    if phi.images().len() != a.order() {
        return Err(ConstructionError::MapLength {
            found: phi.images().len(),
            expected: a.order(),
        });
    }
    if phi.apply(a.one()) != b.one() {
        return Err(ConstructionError::NonUnitalHom);
    }
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    if n > crate::kernel::MAX_ORDER {
        return Err(ConstructionError::ProductTooLarge(n));
    }
    let split = |x: Elem| (x % na, x / na);
    let pack = |p: Elem, q: Elem| p + na * q;
    let group = validate_group(FiniteTable::from_fn(n, |x, y| {
        let ((p, q), (r, s)) = (split(x), split(y));
        pack(a.add(p, r), b.add(q, s))
    }))
    .expect("product of groups");
    let mul = FiniteTable::from_fn(n, |x, y| {
        let ((p, _), (r, s)) = (split(x), split(y));
        pack(a.mul(p, r), b.mul(phi.apply(p), s))
    });
    let local_mul = FiniteTable::from_fn(n, |x, y| {
        let ((p, q), (r, s)) = (split(x), split(y));
        if p == 0 && r == 0 {
            pack(0, b.mul(q, s))
        } else {
            UNDEFINED
        }
    });
    Ok(RawLcRng {
        group,
        mul,
        left_identity: pack(a.one(), 0),
        local_mul,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusOptions {
    /// Keep one representative per isomorphism class.
    pub dedup: bool,
    /// Stop after examining this many candidate `·` tables.
    pub max_candidates: Option<usize>,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            dedup: true,
            max_candidates: Some(1 << 20),
        }
    }
}

/// Every product, local product and designated left identity on `group` that
/// passes validation.
///
/// Products are searched as biadditive maps, fixed by their values on pairs of
/// generators; each candidate is then validated exhaustively.
pub fn enumerate_lcrngs(
    group: &FiniteAbelianGroup,
    options: &CensusOptions,
) -> Result<Vec<LcRng>, ConstructionError> {
    let n = group.order();
    if n > MAX_CENSUS_ORDER {
        return Err(ConstructionError::OrderTooLarge(n));
    }
    let budget = options.max_candidates.unwrap_or(usize::MAX);
    let mut found: Vec<LcRng> = Vec::new();
    let mut examined = 0usize;

    let gens = group.generators();
    let choices = pair_choices(group, &gens, &group.carrier(), false);
    let coords = group.coordinates(&gens);
    let mut digits = vec![0; choices.len()];
    if choices.iter().any(|c| c.is_empty()) {
        return Ok(found);
    }
    loop {
        if examined >= budget {
            break;
        }
        examined += 1;
        let values: Vec<Elem> = digits.iter().zip(&choices).map(|(&d, c)| c[d]).collect();
        let mul = biadditive_table(group, &gens, &coords, &values, false);
        if plausible_mul(group, &mul) {
            collect_for_mul(group, mul, options, &mut found);
        }
        if !advance(&mut digits, |i| choices[i].len()) {
            break;
        }
    }
    Ok(found)
}

/// Candidate values for each ordered generator pair `(i, j)` (or unordered
/// when `symmetric`), restricted to elements killed by the gcd of the orders.
fn pair_choices(
    group: &FiniteAbelianGroup,
    gens: &[Elem],
    target: &Subset,
    symmetric: bool,
) -> Vec<Vec<Elem>> {
    let orders: Vec<usize> = gens.iter().map(|&g| group.element_order(g)).collect();
    let mut out = Vec::new();
    for i in 0..gens.len() {
        for j in 0..gens.len() {
            if symmetric && j < i {
                continue;
            }
            let d = gcd(orders[i], orders[j]);
            out.push(target.iter().filter(|&c| group.scale(d, c) == 0).collect());
        }
    }
    out
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Extends generator-pair values biadditively. Entries are only meaningful if
/// the result passes a distributivity check. With `symmetric`, `values` holds
/// the upper triangle only.
fn biadditive_table(
    group: &FiniteAbelianGroup,
    gens: &[Elem],
    coords: &[Option<Vec<usize>>],
    values: &[Elem],
    symmetric: bool,
) -> FiniteTable {
    let k = gens.len();
    let value = |i: usize, j: usize| {
        if symmetric {
            let (i, j) = if i <= j { (i, j) } else { (j, i) };
            // index of (i, j) in the upper triangle
            values[i * k - i * (i + 1) / 2 + j]
        } else {
            values[i * k + j]
        }
    };
    FiniteTable::from_fn(group.order(), |x, y| match (&coords[x], &coords[y]) {
        (Some(cx), Some(cy)) => {
            let mut acc = 0;
            for i in 0..k {
                for j in 0..k {
                    let times = cx[i] * cy[j];
                    if times > 0 {
                        acc = group.add(acc, group.scale(times, value(i, j)));
                    }
                }
            }
            acc
        }
        _ => UNDEFINED,
    })
}

fn plausible_mul(group: &FiniteAbelianGroup, mul: &FiniteTable) -> bool {
    let n = group.order();
    let m = |x, y| mul.get(x, y);
    first_triple(n, |x, y, z| m(x, group.add(y, z)) != group.add(m(x, y), m(x, z))).is_none()
        && first_triple(n, |x, y, z| m(group.add(y, z), x) != group.add(m(y, x), m(z, x))).is_none()
        && first_triple(n, |x, y, z| m(m(x, y), z) != m(x, m(y, z))).is_none()
        && first_triple(n, |x, y, z| m(m(x, y), z) != m(m(y, x), z)).is_none()
}

fn collect_for_mul(
    group: &FiniteAbelianGroup,
    mul: FiniteTable,
    options: &CensusOptions,
    found: &mut Vec<LcRng>,
) {
    let n = group.order();
    let lefts = Subset::from_predicate(n, |e| (0..n).all(|x| mul.get(e, x) == x));
    // a two-sided identity rules the product out for every choice of 1l
    if lefts
        .iter()
        .any(|e| (0..n).all(|x| mul.get(x, e) == x))
    {
        return;
    }
    for one in lefts.iter() {
        let halo = Subset::from_predicate(n, |x| mul.get(x, one) == 0);
        if halo.len() <= 1 || !group.is_subgroup(&halo) {
            continue;
        }
        let hgens = group.generators_of(&halo);
        let hcoords = group.coordinates(&hgens);
        let choices = pair_choices(group, &hgens, &halo, true);
        let mut digits = vec![0; choices.len()];
        if choices.iter().any(|c| c.is_empty()) {
            continue;
        }
        loop {
            let values: Vec<Elem> = digits.iter().zip(&choices).map(|(&d, c)| c[d]).collect();
            let local_mul = biadditive_table(group, &hgens, &hcoords, &values, true);
            let raw = RawLcRng {
                group: group.clone(),
                mul: mul.clone(),
                left_identity: one,
                local_mul,
            };
            if let Ok(r) = validate_lcrng(raw) {
                if !options.dedup || found.iter().all(|s| find_isomorphism(s, &r).is_none()) {
                    found.push(r);
                }
            }
            if !advance(&mut digits, |i| choices[i].len()) {
                break;
            }
        }
    }
}

/// An isomorphism `f: R → S` fixing 0, preserving `+`, `·`, `#` and sending
/// the designated left identity of `R` to that of `S`.
pub fn find_isomorphism(r: &LcRng, s: &LcRng) -> Option<Vec<Elem>> {
    let n = r.order();
    if n != s.order()
        || r.halo().len() != s.halo().len()
        || r.r0().len() != s.r0().len()
        || left_identities(r).len() != left_identities(s).len()
    {
        return None;
    }
    let gr = r.group();
    let gs = s.group();
    let gens = gr.generators();
    let coords = gr.coordinates(&gens);
    let candidates: Vec<Vec<Elem>> = gens
        .iter()
        .map(|&g| {
            let ord = gr.element_order(g);
            (0..n).filter(|&y| gs.element_order(y) == ord).collect()
        })
        .collect();
    if candidates.iter().any(|c| c.is_empty()) {
        return None;
    }
    let mut digits = vec![0; gens.len()];
    loop {
        let images: Vec<Elem> = digits.iter().zip(&candidates).map(|(&d, c)| c[d]).collect();
        let f: Vec<Elem> = coords
            .iter()
            .map(|c| {
                let c = c.as_ref().expect("generators span the group");
                gs.sum(c.iter().zip(&images).map(|(&k, &img)| gs.scale(k, img)))
            })
            .collect();
        if is_isomorphism(r, s, &f) {
            return Some(f);
        }
        if !advance(&mut digits, |i| candidates[i].len()) {
            return None;
        }
    }
}

fn is_isomorphism(r: &LcRng, s: &LcRng, f: &[Elem]) -> bool {
    let n = r.order();
    let image: HashSet<Elem> = f.iter().copied().collect();
    if image.len() != n || f[r.left_identity()] != s.left_identity() {
        return false;
    }
    let halo = r.halo().to_vec();
    (0..n).all(|x| {
        (0..n).all(|y| {
            f[r.add(x, y)] == s.add(f[x], f[y]) && f[r.mul(x, y)] == s.mul(f[x], f[y])
        })
    }) && halo
        .iter()
        .all(|&a| halo.iter().all(|&b| f[r.local(a, b)] == s.local(f[a], f[b])))
}

/// All subgroups `S` of `r` passing the strict subrng test.
pub fn strict_subrngs(r: &LcRng) -> Vec<Subset> {
    enumerate_subgroups(r.group())
        .into_iter()
        .filter(|s| crate::ideals::is_subrng(r, s, crate::ideals::SubrngMode::Strict).is_ok())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zmod_basics() {
        assert_eq!(zmod(2).order(), 2);
        assert_eq!(zmod(4).mul(2, 2), 0);
        assert!(zmod(1).is_zero_ring());
    }

    #[test]
    fn zero_b_rejected() {
        let a = zmod(2);
        let b = zmod(1);
        let phi = RingHom { map: vec![0, 0] };
        assert_eq!(semidirect_null(&a, &b, &phi), Err(ConstructionError::ZeroB));
    }

    #[test]
    fn non_unital_hom_rejected() {
        let a = zmod(2);
        let b = zmod(2);
        assert_eq!(
            RingHom::new(&a, &b, vec![0, 0]),
            Err(ConstructionError::NonUnitalHom)
        );
        let zero = RingHom { map: vec![0, 0] };
        assert_eq!(semidirect_null(&a, &b, &zero), Err(ConstructionError::NonUnitalHom));
    }

    #[test]
    fn homs_from_klein_ring_to_z2_are_the_projections() {
        let a = product_ring(&zmod(2), &zmod(2)).unwrap();
        let homs = ring_homs(&a, &zmod(2));
        let images: Vec<&[Elem]> = homs.iter().map(|h| h.images()).collect();
        assert_eq!(images, vec![&[0, 0, 1, 1][..], &[0, 1, 0, 1][..]]);
    }

    #[test]
    fn reduction_is_the_only_hom_z4_to_z2() {
        let homs = ring_homs(&zmod(4), &zmod(2));
        assert_eq!(homs.len(), 1);
        assert_eq!(homs[0].images(), &[0, 1, 0, 1]);
    }

    #[test]
    fn census_of_z2_is_empty() {
        let g = zmod(2).group().clone();
        assert!(enumerate_lcrngs(&g, &CensusOptions::default()).unwrap().is_empty());
    }

    #[test]
    fn census_bound_zero_is_empty() {
        let g = product_ring(&zmod(2), &zmod(2)).unwrap().group().clone();
        let opts = CensusOptions {
            dedup: true,
            max_candidates: Some(0),
        };
        assert!(enumerate_lcrngs(&g, &opts).unwrap().is_empty());
    }

    #[test]
    fn census_order_bound() {
        let g = zmod(17).group().clone();
        assert_eq!(
            enumerate_lcrngs(&g, &CensusOptions::default()),
            Err(ConstructionError::OrderTooLarge(17))
        );
    }
}
