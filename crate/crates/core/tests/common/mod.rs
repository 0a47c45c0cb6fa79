//! Brute-force oracles written directly from the definitions, sharing no
//! code with the library beyond table lookups.
#![allow(dead_code)]

use lcrng_core::kernel::{Elem, UNDEFINED};
use lcrng_core::lcrng::{LcRng, RawLcRng};
use lcrng_core::violation::Axiom;

pub fn add(raw: &RawLcRng, x: Elem, y: Elem) -> Elem {
    raw.group.table().get(x, y)
}

pub fn mul(raw: &RawLcRng, x: Elem, y: Elem) -> Elem {
    raw.mul.get(x, y)
}

pub fn local(raw: &RawLcRng, x: Elem, y: Elem) -> Option<Elem> {
    let v = raw.local_mul.get(x, y);
    (v != UNDEFINED).then_some(v)
}

pub fn halo(raw: &RawLcRng) -> Vec<bool> {
    let n = raw.group.order();
    (0..n).map(|x| mul(raw, x, raw.left_identity) == 0).collect()
}

/// Whether `axiom` fails at `w` in `raw`. `None` when the axiom has no
/// pointwise form.
pub fn fails_at(raw: &RawLcRng, axiom: Axiom, w: &[Elem]) -> Option<bool> {
    let n = raw.group.order();
    let h = halo(raw);
    let a = |x, y| add(raw, x, y);
    let m = |x, y| mul(raw, x, y);
    let s = |x, y| local(raw, x, y);
    let one = raw.left_identity;
    let in_halo = |xs: &[Elem]| xs.iter().all(|&x| h[x]);
    Some(match (axiom, w) {
        (Axiom::LeftDistributive, &[x, y, z]) => m(x, a(y, z)) != a(m(x, y), m(x, z)),
        (Axiom::RightDistributive, &[x, y, z]) => m(a(y, z), x) != a(m(y, x), m(z, x)),
        (Axiom::MulAssociative, &[x, y, z]) => m(m(x, y), z) != m(x, m(y, z)),
        (Axiom::LeftCommutative, &[x, y, z]) => m(m(x, y), z) != m(m(y, x), z),
        (Axiom::LeftIdentity, &[x]) => m(one, x) != x,
        (Axiom::TwoSidedIdentityExists, &[e]) => (0..n).all(|x| m(e, x) == x && m(x, e) == x),
        (Axiom::HaloNotSubgroup, &[x, y]) => in_halo(&[x, y]) && !h[a(x, y)],
        (Axiom::EmptyHalo, _) => h.iter().filter(|&&b| b).count() <= 1,
        (Axiom::LocalMulOutsideHalo, &[x, y]) => s(x, y).is_some() && !in_halo(&[x, y]),
        (Axiom::LocalMulUndefinedOnHalo, &[x, y]) => in_halo(&[x, y]) && s(x, y).is_none(),
        (Axiom::LocalMulNotClosed, &[x, y]) => in_halo(&[x, y]) && s(x, y).is_some_and(|v| !h[v]),
        (Axiom::LocalMulCommutative, &[x, y]) => in_halo(&[x, y]) && s(x, y) != s(y, x),
        (Axiom::LocalMulAssociative, &[x, y, z]) => {
            in_halo(&[x, y, z])
                && s(x, y).and_then(|xy| s(xy, z)) != s(y, z).and_then(|yz| s(x, yz))
        }
        (Axiom::LocalMulDistributive, &[x, y, z]) => {
            in_halo(&[x, y, z])
                && (s(x, a(y, z)) != s(x, y).zip(s(x, z)).map(|(p, q)| a(p, q))
                    || s(a(y, z), x) != s(y, x).zip(s(z, x)).map(|(p, q)| a(p, q)))
        }
        (Axiom::NoLocalIdentity, &[]) => {
            let hv: Vec<Elem> = (0..n).filter(|&x| h[x]).collect();
            !hv.iter()
                .any(|&e| hv.iter().all(|&x| s(e, x) == Some(x) && s(x, e) == Some(x)))
        }
        (Axiom::LocalTriassociative, &[x, p, q]) => {
            in_halo(&[p, q]) && s(m(x, p), q) != s(p, q).map(|pq| m(x, pq))
        }
        _ => return None,
    })
}

/// First tuple of the given arity, in row-major order, at which `axiom` fails.
pub fn first_failure(raw: &RawLcRng, axiom: Axiom, arity: usize) -> Option<Vec<Elem>> {
    let n = raw.group.order();
    let total = n.pow(arity as u32);
    (0..total)
        .map(|mut code| {
            let mut t = vec![0; arity];
            for slot in t.iter_mut().rev() {
                *slot = code % n;
                code /= n;
            }
            t
        })
        .find(|t| fails_at(raw, axiom, t) == Some(true))
}

pub fn members(bits: u64, n: usize) -> Vec<Elem> {
    (0..n).filter(|&i| bits >> i & 1 == 1).collect()
}

/// Ideal test from the definition: additive subgroup, absorbing on both
/// sides, and the halo part absorbing under `#`.
pub fn is_ideal(r: &LcRng, bits: u64) -> bool {
    let raw = r.raw();
    let n = r.order();
    let inside = |x: Elem| bits >> x & 1 == 1;
    let h = halo(raw);
    if !inside(0) {
        return false;
    }
    let els = members(bits, n);
    els.iter().all(|&i| els.iter().all(|&j| inside(add(raw, i, j))))
        && els
            .iter()
            .all(|&i| (0..n).all(|x| inside(mul(raw, i, x)) && inside(mul(raw, x, i))))
        && els.iter().filter(|&&i| h[i]).all(|&i| {
            (0..n)
                .filter(|&b| h[b])
                .all(|b| local(raw, i, b).is_some_and(inside))
        })
}

/// Primality tested over all tuples: `p` proper, and for `x` in `R·1l`,
/// homogeneous `y`, `x·y ∈ p` forces `x ∈ p` or `y ∈ p`; for `x, y` in the
/// halo, `x#y ∈ p` forces `x ∈ p` or `y ∈ p`.
pub fn is_prime(r: &LcRng, bits: u64) -> bool {
    let raw = r.raw();
    let n = r.order();
    if !is_ideal(r, bits) || members(bits, n).len() == n {
        return false;
    }
    let inside = |x: Elem| bits >> x & 1 == 1;
    let h = halo(raw);
    let r0: Vec<Elem> = {
        let mut v: Vec<Elem> = (0..n).map(|x| mul(raw, x, raw.left_identity)).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let r1: Vec<Elem> = (0..n).filter(|&x| h[x]).collect();
    for &x in &r0 {
        for &y in r0.iter().chain(&r1) {
            if inside(mul(raw, x, y)) && !inside(x) && !inside(y) {
                return false;
            }
        }
    }
    for &x in &r1 {
        for &y in &r1 {
            if local(raw, x, y).is_some_and(inside) && !inside(x) && !inside(y) {
                return false;
            }
        }
    }
    true
}

/// Every prime ideal, found by testing all subsets. Only for small orders.
pub fn brute_spectrum(r: &LcRng) -> Vec<Vec<Elem>> {
    let n = r.order();
    assert!(n <= 16, "brute force over 2^{n} subsets");
    let mut out: Vec<Vec<Elem>> = (0u64..1 << n)
        .filter(|&b| b & 1 == 1 && is_prime(r, b))
        .map(|b| members(b, n))
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Every ideal, found by testing all subsets. Only for small orders.
pub fn brute_ideals(r: &LcRng) -> Vec<Vec<Elem>> {
    let n = r.order();
    assert!(n <= 16);
    let mut out: Vec<Vec<Elem>> = (0u64..1 << n)
        .filter(|&b| b & 1 == 1 && is_ideal(r, b))
        .map(|b| members(b, n))
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}
