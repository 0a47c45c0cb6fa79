//! Finite left commutative rngs: validation, grading and the induced
//! commutative product.
//!
//! A left commutative rng carries an associative, left commutative product
//! `·` with a designated left identity `1l`, and a local product `#` on the
//! halo `{x : x·1l = 0}` turning the halo into a commutative unital ring.
//! Every validator here is exhaustive over all pairs or triples of elements.

use thiserror::Error;

use crate::kernel::{Elem, FiniteAbelianGroup, FiniteTable, Subset};
use crate::violation::{first_pair, first_triple, render_violations, Axiom, Violation};

/// Tables as read from a file or produced by a builder, not yet checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawLcRng {
    pub group: FiniteAbelianGroup,
    pub mul: FiniteTable,
    pub left_identity: Elem,
    /// Defined exactly on halo x halo, [`crate::kernel::UNDEFINED`] elsewhere.
    pub local_mul: FiniteTable,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LcRngError {
    #[error("{table} table has order {found}, expected {expected}")]
    ShapeMismatch {
        table: &'static str,
        found: usize,
        expected: usize,
    },
    #[error("left identity {0} is not an element")]
    LeftIdentityOutOfRange(Elem),
    #[error("left commutative rng axioms fail:\n{}", render_violations(.0))]
    Violations(Vec<Violation>),
    #[error("grading is not a direct sum at element {0}")]
    DecompositionNotDirect(Elem),
    #[error("subset {0} is not closed under the operations of the structure")]
    NotClosed(Subset),
}

impl LcRngError {
    pub fn violations(&self) -> &[Violation] {
        match self {
            LcRngError::Violations(v) => v,
            _ => &[],
        }
    }
}

/// A validated left commutative rng.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcRng {
    raw: RawLcRng,
    halo: Subset,
    local_identity: Elem,
    r0: Subset,
}

/// The grading `R = R0 + R1` with per-element components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub r0: Subset,
    pub r1: Subset,
    /// `a ↦ a·1l`
    pub comp0: Vec<Elem>,
    /// `a ↦ a - a·1l`
    pub comp1: Vec<Elem>,
}

/// Checks every axiom exhaustively. On failure the error lists each failed
/// axiom once, with its first failing tuple in row-major order.
pub fn validate_lcrng(raw: RawLcRng) -> Result<LcRng, LcRngError> {
    let n = raw.group.order();
    for (table, t) in [("mul", &raw.mul), ("local_mul", &raw.local_mul)] {
        if t.order() != n {
            return Err(LcRngError::ShapeMismatch {
                table,
                found: t.order(),
                expected: n,
            });
        }
    }
    if raw.left_identity >= n {
        return Err(LcRngError::LeftIdentityOutOfRange(raw.left_identity));
    }

    let mut shape = Vec::new();
    if let Some(w) = raw.mul.first_undefined() {
        shape.push(Violation::new(Axiom::UndefinedEntry, w, "mul must be total"));
    }
    if let Some(w) = raw.mul.out_of_range() {
        shape.push(Violation::new(Axiom::EntryOutOfRange, w, "mul"));
    }
    if let Some(w) = raw.local_mul.out_of_range() {
        shape.push(Violation::new(Axiom::EntryOutOfRange, w, "local_mul"));
    }
    if !shape.is_empty() {
        return Err(LcRngError::Violations(shape));
    }

    let g = &raw.group;
    let m = |x: Elem, y: Elem| raw.mul.get(x, y);
    let one = raw.left_identity;
    let mut v = Vec::new();

    if let Some(w) = first_triple(n, |x, y, z| m(x, g.add(y, z)) != g.add(m(x, y), m(x, z))) {
        v.push(Violation::new(Axiom::LeftDistributive, w, ""));
    }
    if let Some(w) = first_triple(n, |x, y, z| m(g.add(y, z), x) != g.add(m(y, x), m(z, x))) {
        v.push(Violation::new(Axiom::RightDistributive, w, ""));
    }
    if let Some(w) = first_triple(n, |x, y, z| m(m(x, y), z) != m(x, m(y, z))) {
        v.push(Violation::new(Axiom::MulAssociative, w, ""));
    }
    if let Some(w) = first_triple(n, |x, y, z| m(m(x, y), z) != m(m(y, x), z)) {
        v.push(Violation::new(Axiom::LeftCommutative, w, ""));
    }
    if let Some(x) = (0..n).find(|&x| m(one, x) != x) {
        v.push(Violation::new(
            Axiom::LeftIdentity,
            [x],
            format!("{one}·{x} = {}", m(one, x)),
        ));
    }
    if let Some(e) = (0..n).find(|&e| (0..n).all(|x| m(e, x) == x && m(x, e) == x)) {
        v.push(Violation::new(
            Axiom::TwoSidedIdentityExists,
            [e],
            format!("{e} is a two-sided identity"),
        ));
    }

    let halo = Subset::from_predicate(n, |x| m(x, one) == 0);
    let halo_vec = halo.to_vec();
    if let Some((a, b)) = pairs(&halo_vec).find(|&(a, b)| !halo.contains(g.add(a, b))) {
        v.push(Violation::new(Axiom::HaloNotSubgroup, [a, b], ""));
    }
    if halo.len() <= 1 {
        v.push(Violation::new(Axiom::EmptyHalo, [0], "halo is {0}"));
    }

    let lm = &raw.local_mul;
    if let Some(w) = first_pair(n, |x, y| {
        lm.try_get(x, y).is_some() && !(halo.contains(x) && halo.contains(y))
    }) {
        v.push(Violation::new(Axiom::LocalMulOutsideHalo, w, ""));
    }
    let mut local_ok = true;
    if let Some((a, b)) = pairs(&halo_vec).find(|&(a, b)| lm.try_get(a, b).is_none()) {
        v.push(Violation::new(Axiom::LocalMulUndefinedOnHalo, [a, b], ""));
        local_ok = false;
    } else if let Some((a, b)) = pairs(&halo_vec).find(|&(a, b)| !halo.contains(lm.get(a, b))) {
        v.push(Violation::new(
            Axiom::LocalMulNotClosed,
            [a, b],
            format!("{a}#{b} = {}", lm.get(a, b)),
        ));
        local_ok = false;
    }

    let mut local_identity = None;
    if local_ok {
        let s = |a: Elem, b: Elem| lm.get(a, b);
        if let Some((a, b)) = pairs(&halo_vec).find(|&(a, b)| s(a, b) != s(b, a)) {
            v.push(Violation::new(Axiom::LocalMulCommutative, [a, b], ""));
        }
        if let Some((a, b, c)) =
            triples(&halo_vec).find(|&(a, b, c)| s(s(a, b), c) != s(a, s(b, c)))
        {
            v.push(Violation::new(Axiom::LocalMulAssociative, [a, b, c], ""));
        }
        if let Some((a, b, c)) = triples(&halo_vec).find(|&(a, b, c)| {
            s(a, g.add(b, c)) != g.add(s(a, b), s(a, c))
                || s(g.add(b, c), a) != g.add(s(b, a), s(c, a))
        }) {
            v.push(Violation::new(Axiom::LocalMulDistributive, [a, b, c], ""));
        }
        local_identity = halo_vec
            .iter()
            .copied()
            .find(|&e| halo_vec.iter().all(|&a| s(e, a) == a && s(a, e) == a));
        if local_identity.is_none() {
            v.push(Violation::new(Axiom::NoLocalIdentity, [], ""));
        }

        // (x·a)#b = x·(a#b)
        'outer: for x in 0..n {
            for &a in &halo_vec {
                for &b in &halo_vec {
                    let lhs = lm.try_get(m(x, a), b);
                    if lhs != Some(m(x, s(a, b))) {
                        v.push(Violation::new(Axiom::LocalTriassociative, [x, a, b], ""));
                        break 'outer;
                    }
                }
            }
        }
    }

    if !v.is_empty() {
        return Err(LcRngError::Violations(v));
    }
    let r0 = Subset::from_indices(n, (0..n).map(|x| m(x, one)));
    let local_identity = local_identity.expect("checked above");
    Ok(LcRng {
        raw,
        halo,
        local_identity,
        r0,
    })
}

fn pairs(xs: &[Elem]) -> impl Iterator<Item = (Elem, Elem)> + '_ {
    xs.iter().flat_map(move |&a| xs.iter().map(move |&b| (a, b)))
}

fn triples(xs: &[Elem]) -> impl Iterator<Item = (Elem, Elem, Elem)> + '_ {
    pairs(xs).flat_map(move |(a, b)| xs.iter().map(move |&c| (a, b, c)))
}

impl LcRng {
    pub fn raw(&self) -> &RawLcRng {
        &self.raw
    }

    pub fn into_raw(self) -> RawLcRng {
        self.raw
    }

    pub fn order(&self) -> usize {
        self.raw.group.order()
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.raw.group
    }

    pub fn carrier(&self) -> Subset {
        Subset::full(self.order())
    }

    #[inline]
    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        self.raw.group.add(x, y)
    }

    #[inline]
    pub fn neg(&self, x: Elem) -> Elem {
        self.raw.group.neg(x)
    }

    #[inline]
    pub fn sub(&self, x: Elem, y: Elem) -> Elem {
        self.raw.group.sub(x, y)
    }

    /// The product `x·y`.
    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.raw.mul.get(x, y)
    }

    /// The local product `a#b`; both arguments must lie in the halo.
    #[inline]
    pub fn local(&self, a: Elem, b: Elem) -> Elem {
        debug_assert!(self.halo.contains(a) && self.halo.contains(b));
        self.raw.local_mul.get(a, b)
    }

    pub fn left_identity(&self) -> Elem {
        self.raw.left_identity
    }

    pub fn local_identity(&self) -> Elem {
        self.local_identity
    }

    /// The halo `{x : x·1l = 0}`, which is also the 1-part `R1`.
    pub fn halo(&self) -> Subset {
        self.halo
    }

    /// The 0-part `R0 = R·1l`.
    pub fn r0(&self) -> Subset {
        self.r0
    }

    pub fn r1(&self) -> Subset {
        self.halo
    }

    /// The part of the given grade: 0 or 1.
    pub fn part(&self, grade: Grade) -> Subset {
        match grade {
            Grade::Zero => self.r0,
            Grade::One => self.halo,
        }
    }

    pub fn comp0(&self, a: Elem) -> Elem {
        self.mul(a, self.left_identity())
    }

    pub fn comp1(&self, a: Elem) -> Elem {
        self.sub(a, self.comp0(a))
    }

    /// `x·x·…·x` with `k ≥ 1` factors.
    pub fn mul_power(&self, x: Elem, k: usize) -> Elem {
        assert!(k >= 1, "power of a rng element needs k >= 1");
        (1..k).fold(x, |acc, _| self.mul(acc, x))
    }

    /// `a#a#…#a` with `k` factors; `k = 0` gives the local identity.
    pub fn local_power(&self, a: Elem, k: usize) -> Elem {
        (0..k).fold(self.local_identity, |acc, _| self.local(acc, a))
    }

    /// Restriction of the structure to a subset containing 0 and `1l`, closed
    /// under `+`, `·` and `#`. Elements are renumbered in ascending order; the
    /// returned vector maps new indices to old ones.
    pub fn substructure(&self, s: &Subset) -> Result<(LcRng, Vec<Elem>), LcRngError> {
        let embed = s.to_vec();
        let one = self.left_identity();
        if !s.contains(0) || !s.contains(one) {
            return Err(LcRngError::NotClosed(*s));
        }
        let mut index = vec![usize::MAX; self.order()];
        for (i, &x) in embed.iter().enumerate() {
            index[x] = i;
        }
        let k = embed.len();
        let closed = embed.iter().all(|&x| {
            embed.iter().all(|&y| {
                s.contains(self.add(x, y))
                    && s.contains(self.mul(x, y))
                    && (!(self.halo.contains(x) && self.halo.contains(y))
                        || s.contains(self.local(x, y)))
            })
        });
        if !closed {
            return Err(LcRngError::NotClosed(*s));
        }
        let add = FiniteTable::from_fn(k, |i, j| index[self.add(embed[i], embed[j])]);
        let group = crate::kernel::validate_group(add)
            .expect("a closed subset of a finite abelian group is a subgroup");
        let mul = FiniteTable::from_fn(k, |i, j| index[self.mul(embed[i], embed[j])]);
        let local_mul = FiniteTable::from_fn(k, |i, j| {
            let (x, y) = (embed[i], embed[j]);
            if self.halo.contains(x) && self.halo.contains(y) {
                index[self.local(x, y)]
            } else {
                crate::kernel::UNDEFINED
            }
        });
        let raw = RawLcRng {
            group,
            mul,
            left_identity: index[one],
            local_mul,
        };
        Ok((validate_lcrng(raw)?, embed))
    }
}

/// The two parts of the grading.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Grade {
    Zero,
    One,
}

impl Grade {
    pub const BOTH: [Grade; 2] = [Grade::Zero, Grade::One];
}

/// Every `e` with `e·x = x` for all `x`.
pub fn left_identities(r: &LcRng) -> Subset {
    let n = r.order();
    Subset::from_predicate(n, |e| (0..n).all(|x| r.mul(e, x) == x))
}

/// Splits the carrier into `R0 = R·1l` and `R1 = halo` and checks that every
/// element is uniquely `a0 + a1`.
pub fn decompose(r: &LcRng) -> Result<Decomposition, LcRngError> {
    let n = r.order();
    let comp0: Vec<Elem> = (0..n).map(|a| r.comp0(a)).collect();
    let comp1: Vec<Elem> = (0..n).map(|a| r.comp1(a)).collect();
    let (r0, r1) = (r.r0(), r.r1());
    if r0.intersection(&r1) != Subset::zero(n) {
        let bad = r0.intersection(&r1).iter().find(|&x| x != 0).unwrap_or(0);
        return Err(LcRngError::DecompositionNotDirect(bad));
    }
    for a in 0..n {
        if !r0.contains(comp0[a]) || !r1.contains(comp1[a]) || r.add(comp0[a], comp1[a]) != a {
            return Err(LcRngError::DecompositionNotDirect(a));
        }
    }
    if r0.len() * r1.len() != n {
        return Err(LcRngError::DecompositionNotDirect(0));
    }
    Ok(Decomposition { r0, r1, comp0, comp1 })
}

/// The commutative product `xy + yx - (yx)·1l`.
pub fn induced_product(r: &LcRng, x: Elem, y: Elem) -> Elem {
    let xy = r.mul(x, y);
    let yx = r.mul(y, x);
    r.sub(r.add(xy, yx), r.mul(yx, r.left_identity()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{validate_group, UNDEFINED};

    /// Z2 ⋉ Z2 with (a,b) ↦ a + 2b, written out by hand.
    fn r4_raw() -> RawLcRng {
        let split = |x: usize| (x % 2, x / 2);
        let pack = |a: usize, b: usize| a % 2 + 2 * (b % 2);
        let group = validate_group(FiniteTable::from_fn(4, |x, y| {
            let ((a, b), (c, d)) = (split(x), split(y));
            pack(a + c, b + d)
        }))
        .unwrap();
        let mul = FiniteTable::from_fn(4, |x, y| {
            let ((a, _), (c, d)) = (split(x), split(y));
            pack(a * c, a * d)
        });
        let local_mul = FiniteTable::from_fn(4, |x, y| {
            let ((a, b), (c, d)) = (split(x), split(y));
            if a == 0 && c == 0 {
                pack(0, b * d)
            } else {
                UNDEFINED
            }
        });
        RawLcRng {
            group,
            mul,
            left_identity: 1,
            local_mul,
        }
    }

    #[test]
    fn r4_validates() {
        let r = validate_lcrng(r4_raw()).unwrap();
        assert_eq!(r.halo().to_vec(), vec![0, 2]);
        assert_eq!(r.local_identity(), 2);
        assert_eq!(left_identities(&r).to_vec(), vec![1, 3]);
    }

    #[test]
    fn patched_left_identity_row_names_witness() {
        let mut raw = r4_raw();
        raw.mul.set(1, 2, 0);
        let err = validate_lcrng(raw).unwrap_err();
        let v = err
            .violations()
            .iter()
            .find(|v| v.axiom == Axiom::LeftIdentity)
            .expect("left identity violation");
        assert_eq!(v.witness, vec![2]);
    }

    #[test]
    fn local_product_off_halo_rejected() {
        let mut raw = r4_raw();
        raw.local_mul.set(1, 2, 0);
        let err = validate_lcrng(raw).unwrap_err();
        let v = err
            .violations()
            .iter()
            .find(|v| v.axiom == Axiom::LocalMulOutsideHalo)
            .unwrap();
        assert_eq!(v.witness, vec![1, 2]);
    }

    #[test]
    fn commutative_ring_is_not_an_lcrng() {
        // Z2 as a ring: the identity is two-sided and the halo is trivial.
        let group = validate_group(FiniteTable::from_fn(2, |x, y| (x + y) % 2)).unwrap();
        let raw = RawLcRng {
            group,
            mul: FiniteTable::from_fn(2, |x, y| x * y),
            left_identity: 1,
            local_mul: FiniteTable::from_rows(&[vec![0, UNDEFINED], vec![UNDEFINED, UNDEFINED]])
                .unwrap(),
        };
        let err = validate_lcrng(raw).unwrap_err();
        let axioms: Vec<_> = err.violations().iter().map(|v| v.axiom).collect();
        assert!(axioms.contains(&Axiom::TwoSidedIdentityExists));
        assert!(axioms.contains(&Axiom::EmptyHalo));
    }

    #[test]
    fn r4_decomposition() {
        let r = validate_lcrng(r4_raw()).unwrap();
        let d = decompose(&r).unwrap();
        assert_eq!(d.r0.to_vec(), vec![0, 1]);
        assert_eq!(d.r1.to_vec(), vec![0, 2]);
        assert_eq!((d.comp0[3], d.comp1[3]), (1, 2));
        assert_eq!((d.comp0[0], d.comp1[0]), (0, 0));
    }

    #[test]
    fn r4_induced_product() {
        let r = validate_lcrng(r4_raw()).unwrap();
        assert_eq!(induced_product(&r, 2, 2), 0);
        assert_eq!(induced_product(&r, 1, 2), 2);
        assert_eq!(induced_product(&r, 2, 1), 2);
        for y in 0..4 {
            assert_eq!(induced_product(&r, 1, y), y);
        }
    }

    #[test]
    fn substructure_of_whole_is_identity() {
        let r = validate_lcrng(r4_raw()).unwrap();
        let (s, embed) = r.substructure(&r.carrier()).unwrap();
        assert_eq!(embed, vec![0, 1, 2, 3]);
        assert_eq!(s, r);
        assert!(r.substructure(&Subset::from_indices(4, [0, 2])).is_err());
    }
}
