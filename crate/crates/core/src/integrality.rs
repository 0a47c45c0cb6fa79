//! Graded integrality over a subrng.
//!
//! The 0-part `R0` is a commutative ring under `·` with identity `1l`, the
//! 1-part (the halo) is one under `#` with identity `1#`. An element is
//! graded integral over a subrng when each of its two components satisfies a
//! monic relation over the matching part of the subrng.

use thiserror::Error;

use crate::ideals::{is_subrng, SubrngMode};
use crate::kernel::{Elem, FiniteAbelianGroup, FiniteTable, Subset};
use crate::lcrng::{Grade, LcRng};
use crate::violation::{Axiom, Violation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntegralityError {
    #[error("coefficient subring does not contain the identity {0}")]
    SubringNotUnital(Elem),
    #[error("coefficient set is not a subring: {0}")]
    NotASubring(Violation),
    #[error("{0}")]
    NotASubrng(Violation),
    #[error("element {0} does not lie in the expected component")]
    NotInComponent(Elem),
    #[error("component ring fails: {0}")]
    ComponentRingInvalid(Violation),
}

/// `(R0, ·, 1l)` or `(R1, #, 1#)` viewed as a ring in its own right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentRing {
    pub grade: Grade,
    pub carrier: Subset,
    group: FiniteAbelianGroup,
    product: FiniteTable,
    pub identity: Elem,
}

/// A monic relation `u^n + a1·u^(n-1) + … + an = 0`, powers and products
/// taken in a component ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntegralWitness {
    pub degree: usize,
    /// `a1, …, an`
    pub coefficients: Vec<Elem>,
}

impl ComponentRing {
    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.product.get(x, y)
    }

    #[inline]
    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        self.group.add(x, y)
    }

    pub fn neg(&self, x: Elem) -> Elem {
        self.group.neg(x)
    }

    /// `u^k` with `u^0` the identity.
    pub fn power(&self, u: Elem, k: usize) -> Elem {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, u))
    }

    /// Value of the witness polynomial at `u`.
    pub fn evaluate(&self, w: &IntegralWitness, u: Elem) -> Elem {
        let n = w.degree;
        w.coefficients
            .iter()
            .enumerate()
            .fold(self.power(u, n), |acc, (i, &a)| {
                self.add(acc, self.mul(a, self.power(u, n - 1 - i)))
            })
    }

    fn verify(&self) -> Result<(), Violation> {
        let c = self.carrier.to_vec();
        for &x in &c {
            if self.mul(self.identity, x) != x || self.mul(x, self.identity) != x {
                return Err(Violation::new(Axiom::RingIdentity, [x], ""));
            }
            for &y in &c {
                if !self.carrier.contains(self.mul(x, y)) {
                    return Err(Violation::new(Axiom::NotProductClosed, [x, y], ""));
                }
                if self.mul(x, y) != self.mul(y, x) {
                    return Err(Violation::new(Axiom::RingCommutative, [x, y], ""));
                }
                for &z in &c {
                    if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)) {
                        return Err(Violation::new(Axiom::MulAssociative, [x, y, z], ""));
                    }
                }
            }
        }
        Ok(())
    }
}

/// The component ring of the given grade, re-verified on construction.
pub fn component_ring(r: &LcRng, grade: Grade) -> Result<ComponentRing, IntegralityError> {
    let (product, identity) = match grade {
        Grade::Zero => (r.raw().mul.clone(), r.left_identity()),
        Grade::One => (r.raw().local_mul.clone(), r.local_identity()),
    };
    let ring = ComponentRing {
        grade,
        carrier: r.part(grade),
        group: r.group().clone(),
        product,
        identity,
    };
    ring.verify().map_err(IntegralityError::ComponentRingInvalid)?;
    Ok(ring)
}

/// Least-degree monic relation for `u` with coefficients in `s`, of degree at
/// most `max_degree`. `s` must be a subring of `ambient` containing its identity.
pub fn integral_witness(
    ambient: &ComponentRing,
    s: &Subset,
    u: Elem,
    max_degree: usize,
) -> Result<Option<IntegralWitness>, IntegralityError> {
    check_coefficients(ambient, s)?;
    if !s.contains(ambient.identity) {
        return Err(IntegralityError::SubringNotUnital(ambient.identity));
    }
    if !ambient.carrier.contains(u) {
        return Err(IntegralityError::NotInComponent(u));
    }
    Ok(search_witness(ambient, s, u, max_degree))
}

fn check_coefficients(ambient: &ComponentRing, s: &Subset) -> Result<(), IntegralityError> {
    if !s.is_subset_of(&ambient.carrier) {
        let x = s.difference(&ambient.carrier).iter().next().unwrap_or(0);
        return Err(IntegralityError::NotInComponent(x));
    }
    if !s.contains(0) {
        return Err(IntegralityError::NotASubring(Violation::new(Axiom::NotSubgroup, [0], "")));
    }
    for x in s.iter() {
        for y in s.iter() {
            if !s.contains(ambient.add(x, y)) {
                return Err(IntegralityError::NotASubring(Violation::new(
                    Axiom::NotSubgroup,
                    [x, y],
                    "",
                )));
            }
            if !s.contains(ambient.mul(x, y)) {
                return Err(IntegralityError::NotASubring(Violation::new(
                    Axiom::NotProductClosed,
                    [x, y],
                    "",
                )));
            }
        }
    }
    Ok(())
}

/// Grows the `s`-span of `1, u, …, u^(k-1)` one degree at a time and stops at
/// the first `k` with `u^k` inside it. Each span element keeps the first
/// coefficient vector that reached it. No unitality is assumed of `s`.
pub(crate) fn search_witness(
    ambient: &ComponentRing,
    s: &Subset,
    u: Elem,
    max_degree: usize,
) -> Option<IntegralWitness> {
    let n = ambient.group.order();
    let coeffs: Vec<Elem> = s.to_vec();
    // span[x] = Some(c) with x = sum_j c[j]·u^j
    let mut span: Vec<Option<Vec<Elem>>> = vec![None; n];
    span[0] = Some(Vec::new());
    let mut power = ambient.identity;
    for k in 1..=max_degree {
        let mut next: Vec<Option<Vec<Elem>>> = vec![None; n];
        for x in 0..n {
            let Some(c) = &span[x] else { continue };
            for &a in &coeffs {
                let y = ambient.add(x, ambient.mul(a, power));
                if next[y].is_none() {
                    let mut cy = c.clone();
                    cy.push(a);
                    next[y] = Some(cy);
                }
            }
        }
        span = next;
        power = ambient.mul(power, u);
        if let Some(c) = &span[power] {
            // u^k = sum_j c[j] u^j, so a_i = -c[k - i]
            let coefficients = (1..=k).map(|i| ambient.neg(c[k - i])).collect();
            return Some(IntegralWitness {
                degree: k,
                coefficients,
            });
        }
    }
    None
}

/// Minimal witnesses for both components of `u` over the subrng `r`, with
/// degrees bounded by `max_degree`.
pub fn graded_integral_witnesses(
    u_ring: &LcRng,
    r: &Subset,
    u: Elem,
    max_degree: usize,
) -> Result<(Option<IntegralWitness>, Option<IntegralWitness>), IntegralityError> {
    is_subrng(u_ring, r, SubrngMode::Lenient).map_err(IntegralityError::NotASubrng)?;
    let ring0 = component_ring(u_ring, Grade::Zero)?;
    let ring1 = component_ring(u_ring, Grade::One)?;
    let w0 = integral_witness(&ring0, &r.intersection(&ring0.carrier), u_ring.comp0(u), max_degree)?;
    let w1 = integral_witness(&ring1, &r.intersection(&ring1.carrier), u_ring.comp1(u), max_degree)?;
    Ok((w0, w1))
}

/// Whether both components of `u` are integral over the matching parts of
/// the subrng `r`, searching up to degree `|U|`.
pub fn is_graded_integral(u_ring: &LcRng, r: &Subset, u: Elem) -> Result<bool, IntegralityError> {
    let (w0, w1) = graded_integral_witnesses(u_ring, r, u, u_ring.order())?;
    Ok(w0.is_some() && w1.is_some())
}

/// Multiplies a relation `u1^n + a1#u1^(n-1) + … + an = 0` on the left by
/// `x0^n` and evaluates the resulting relation in `x0·u1`:
///
/// `(x0u1)^n + (x0 a1)#(x0u1)^(n-1) + … + (x0^(n-1) a(n-1))#(x0u1) + x0^n an`.
///
/// Returns whether it vanishes.
pub fn push_down_check(
    u_ring: &LcRng,
    x0: Elem,
    u1: Elem,
    w: &IntegralWitness,
) -> Result<bool, IntegralityError> {
    let halo = u_ring.halo();
    if !u_ring.r0().contains(x0) {
        return Err(IntegralityError::NotInComponent(x0));
    }
    if !halo.contains(u1) {
        return Err(IntegralityError::NotInComponent(u1));
    }
    if let Some(&a) = w.coefficients.iter().find(|&&a| !halo.contains(a)) {
        return Err(IntegralityError::NotInComponent(a));
    }
    let n = w.degree;
    let v = u_ring.mul(x0, u1);
    let mut total = u_ring.local_power(v, n);
    for (idx, &a) in w.coefficients.iter().enumerate() {
        let i = idx + 1;
        let scaled = u_ring.mul(u_ring.mul_power(x0, i), a);
        let term = if i == n {
            scaled
        } else {
            u_ring.local(scaled, u_ring.local_power(v, n - i))
        };
        total = u_ring.add(total, term);
    }
    Ok(total == 0)
}

/// `(x0·u1)^#k == x0^k · u1^#k`.
pub fn power_transport_holds(u_ring: &LcRng, x0: Elem, u1: Elem, k: usize) -> bool {
    let lhs = u_ring.local_power(u_ring.mul(x0, u1), k);
    let rhs = u_ring.mul(u_ring.mul_power(x0, k), u_ring.local_power(u1, k));
    lhs == rhs
}
