//! Ideals, left commutative subrngs, Hu-Liu prime ideals and the spectrum.

use thiserror::Error;

use crate::kernel::{enumerate_subgroups, Elem, Subset};
use crate::lcrng::LcRng;
use crate::violation::{Axiom, Verdict, Violation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdealKind {
    Ideal,
    Subrng,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Primality {
    Unknown,
    Prime,
    NotPrime,
}

/// How the halo part of a subrng is read: `Strict` requires it to contain the
/// local identity, `Lenient` only asks for closure under `+` and `#`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum SubrngMode {
    #[default]
    Strict,
    Lenient,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("{0}")]
    NotAnIdeal(Violation),
    #[error("{0}")]
    NotASubrng(Violation),
    #[error("element {0} has a component outside the subset")]
    GradingViolation(Elem),
}

/// An ideal or subrng with its graded split `I = I0 + I1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedIdeal {
    pub carrier: Subset,
    pub i0: Subset,
    pub i1: Subset,
    pub kind: IdealKind,
    pub prime: Primality,
}

impl PartialOrd for GradedIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GradedIdeal {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.carrier.cmp(&other.carrier)
    }
}

fn subgroup_verdict(r: &LcRng, s: &Subset) -> Verdict {
    if !s.contains(0) {
        return Err(Violation::new(Axiom::NotSubgroup, [0], "0 is missing"));
    }
    for x in s.iter() {
        for y in s.iter() {
            let z = r.add(x, y);
            if !s.contains(z) {
                return Err(Violation::new(
                    Axiom::NotSubgroup,
                    [x, y],
                    format!("{x}+{y} = {z} is missing"),
                ));
            }
        }
    }
    Ok(())
}

/// `S` is a subgroup with `SR ⊆ S`, `RS ⊆ S`, and `S ∩ halo` is an ideal of
/// the halo ring.
pub fn is_ideal(r: &LcRng, s: &Subset) -> Verdict {
    subgroup_verdict(r, s)?;
    let n = r.order();
    for i in s.iter() {
        for x in 0..n {
            let p = r.mul(i, x);
            if !s.contains(p) {
                return Err(Violation::new(
                    Axiom::RightAbsorbing,
                    [i, x],
                    format!("{i}·{x} = {p} is missing"),
                ));
            }
        }
    }
    for x in 0..n {
        for i in s.iter() {
            let p = r.mul(x, i);
            if !s.contains(p) {
                return Err(Violation::new(
                    Axiom::LeftAbsorbing,
                    [x, i],
                    format!("{x}·{i} = {p} is missing"),
                ));
            }
        }
    }
    let halo = r.halo();
    for a in s.intersection(&halo).iter() {
        for b in halo.iter() {
            let p = r.local(a, b);
            if !s.contains(p) {
                return Err(Violation::new(
                    Axiom::HaloPartNotIdeal,
                    [a, b],
                    format!("{a}#{b} = {p} is missing"),
                ));
            }
        }
    }
    Ok(())
}

/// `S` contains `1l`, is a subgroup closed under `·`, and meets the halo in a
/// subring (containing the local identity in strict mode).
pub fn is_subrng(r: &LcRng, s: &Subset, mode: SubrngMode) -> Verdict {
    let one = r.left_identity();
    if !s.contains(one) {
        return Err(Violation::new(
            Axiom::MissingLeftIdentity,
            [one],
            format!("left identity {one} is missing"),
        ));
    }
    subgroup_verdict(r, s)?;
    for x in s.iter() {
        for y in s.iter() {
            let p = r.mul(x, y);
            if !s.contains(p) {
                return Err(Violation::new(
                    Axiom::NotProductClosed,
                    [x, y],
                    format!("{x}·{y} = {p} is missing"),
                ));
            }
        }
    }
    let part = s.intersection(&r.halo());
    for a in part.iter() {
        for b in part.iter() {
            let p = r.local(a, b);
            if !s.contains(p) {
                return Err(Violation::new(
                    Axiom::HaloPartNotSubring,
                    [a, b],
                    format!("{a}#{b} = {p} is missing"),
                ));
            }
        }
    }
    let e = r.local_identity();
    if mode == SubrngMode::Strict && !s.contains(e) {
        return Err(Violation::new(
            Axiom::MissingLocalIdentity,
            [e],
            format!("local identity {e} is missing"),
        ));
    }
    Ok(())
}

/// `(I ∩ R0, I ∩ R1)`, after checking that both components of every member
/// of `I` stay in `I`.
pub fn ideal_components(r: &LcRng, carrier: &Subset) -> Result<(Subset, Subset), IdealError> {
    for a in carrier.iter() {
        if !carrier.contains(r.comp0(a)) || !carrier.contains(r.comp1(a)) {
            return Err(IdealError::GradingViolation(a));
        }
    }
    Ok((carrier.intersection(&r.r0()), carrier.intersection(&r.r1())))
}

/// Wraps a subset that passes [`is_ideal`].
pub fn graded_ideal(r: &LcRng, s: &Subset) -> Result<GradedIdeal, IdealError> {
    is_ideal(r, s).map_err(IdealError::NotAnIdeal)?;
    let (i0, i1) = ideal_components(r, s)?;
    Ok(GradedIdeal {
        carrier: *s,
        i0,
        i1,
        kind: IdealKind::Ideal,
        prime: Primality::Unknown,
    })
}

/// Wraps a subset that passes [`is_subrng`].
pub fn graded_subrng(r: &LcRng, s: &Subset, mode: SubrngMode) -> Result<GradedIdeal, IdealError> {
    is_subrng(r, s, mode).map_err(IdealError::NotASubrng)?;
    let (i0, i1) = ideal_components(r, s)?;
    Ok(GradedIdeal {
        carrier: *s,
        i0,
        i1,
        kind: IdealKind::Subrng,
        prime: Primality::Unknown,
    })
}

/// Hu-Liu primality: `p` is a proper ideal and, for homogeneous `x0`, `y_ε`,
/// `x1`, `y1`,
///
/// * `x0·y_ε ∈ p` implies `x0 ∈ p0` or `y_ε ∈ p_ε`,
/// * `x1#y1 ∈ p1` implies `x1 ∈ p1` or `y1 ∈ p1`.
pub fn is_huliu_prime(r: &LcRng, p: &Subset) -> Verdict {
    is_ideal(r, p)?;
    if p.is_full() {
        return Err(Violation::new(Axiom::ProperIdeal, [], "p = R"));
    }
    let (r0, r1) = (r.r0(), r.r1());
    for (axiom, ys) in [
        (Axiom::PrimeZeroComponent, r0),
        (Axiom::PrimeMixedComponent, r1),
    ] {
        for x in r0.iter() {
            for y in ys.iter() {
                let xy = r.mul(x, y);
                if p.contains(xy) && !p.contains(x) && !p.contains(y) {
                    return Err(Violation::new(
                        axiom,
                        [x, y],
                        format!("{x}·{y} = {xy} lies in p, but {x} and {y} do not"),
                    ));
                }
            }
        }
    }
    for x in r1.iter() {
        for y in r1.iter() {
            let xy = r.local(x, y);
            if p.contains(xy) && !p.contains(x) && !p.contains(y) {
                return Err(Violation::new(
                    Axiom::PrimeLocalComponent,
                    [x, y],
                    format!("{x}#{y} = {xy} lies in p, but {x} and {y} do not"),
                ));
            }
        }
    }
    Ok(())
}

/// The complement form of primality: a proper ideal `q` whose complements
/// `U0 \ q0` and `U1 \ q1` are closed under `·`, the mixed product, and `#`.
pub fn is_complement_closed(r: &LcRng, q: &Subset) -> Verdict {
    is_ideal(r, q)?;
    if q.is_full() {
        return Err(Violation::new(Axiom::ProperIdeal, [], "q = U"));
    }
    let outside0 = r.r0().difference(q);
    let outside1 = r.r1().difference(q);
    for x in outside0.iter() {
        for y in outside0.iter() {
            if q.contains(r.mul(x, y)) {
                return Err(Violation::new(Axiom::ComplementZeroClosed, [x, y], ""));
            }
        }
        for y in outside1.iter() {
            if q.contains(r.mul(x, y)) {
                return Err(Violation::new(Axiom::ComplementMixedClosed, [x, y], ""));
            }
        }
    }
    for x in outside1.iter() {
        for y in outside1.iter() {
            if q.contains(r.local(x, y)) {
                return Err(Violation::new(Axiom::ComplementLocalClosed, [x, y], ""));
            }
        }
    }
    Ok(())
}

/// Every ideal, smallest first, primality left [`Primality::Unknown`].
pub fn enumerate_ideals(r: &LcRng) -> Vec<GradedIdeal> {
    enumerate_subgroups(r.group())
        .iter()
        .filter_map(|s| graded_ideal(r, s).ok())
        .collect()
}

/// Fills in the primality flag.
pub fn classify(r: &LcRng, mut ideal: GradedIdeal) -> GradedIdeal {
    ideal.prime = if is_huliu_prime(r, &ideal.carrier).is_ok() {
        Primality::Prime
    } else {
        Primality::NotPrime
    };
    ideal
}

/// The Hu-Liu prime ideals of a structure, in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    pub primes: Vec<GradedIdeal>,
}

impl Spectrum {
    pub fn carriers(&self) -> Vec<Subset> {
        self.primes.iter().map(|p| p.carrier).collect()
    }

    pub fn contains(&self, s: &Subset) -> bool {
        self.primes.iter().any(|p| p.carrier == *s)
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }
}

pub fn spectrum(r: &LcRng) -> Spectrum {
    let primes = enumerate_ideals(r)
        .into_iter()
        .map(|i| classify(r, i))
        .filter(|i| i.prime == Primality::Prime)
        .collect();
    Spectrum { primes }
}
