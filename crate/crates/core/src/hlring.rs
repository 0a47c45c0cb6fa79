//! Rings with the Hu-Liu product.
//!
//! A ring `(R, +, •)` with identity `σ` whose product splits through two
//! auxiliary products `⇀` and `↼` as `x•y = x⇀y + x↼y - (x↼σ)⇀y`, subject to
//! three triassociative laws and distributivity of `⇀`, `↼`. Its halo is
//! `{x : σ⇀x = 0}`.

use thiserror::Error;

use crate::kernel::{Elem, FiniteAbelianGroup, FiniteTable, Subset};
use crate::lcrng::{induced_product, LcRng};
use crate::violation::{first_pair, first_triple, render_violations, Axiom, Verdict, Violation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawHlRing {
    pub group: FiniteAbelianGroup,
    pub bullet: FiniteTable,
    pub rarrow: FiniteTable,
    pub larrow: FiniteTable,
    pub sigma: Elem,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HlRingError {
    #[error("{table} table has order {found}, expected {expected}")]
    ShapeMismatch {
        table: &'static str,
        found: usize,
        expected: usize,
    },
    #[error("identity {0} is not an element")]
    SigmaOutOfRange(Elem),
    #[error("Hu-Liu product axioms fail:\n{}", render_violations(.0))]
    Violations(Vec<Violation>),
    #[error("bridge from a left commutative rng failed:\n{}", render_violations(.0))]
    BridgeAxiomFailure(Vec<Violation>),
}

impl HlRingError {
    pub fn violations(&self) -> &[Violation] {
        match self {
            HlRingError::Violations(v) | HlRingError::BridgeAxiomFailure(v) => v,
            _ => &[],
        }
    }
}

/// A validated ring with the Hu-Liu product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HlRing {
    raw: RawHlRing,
    halo: Subset,
}

impl HlRing {
    pub fn raw(&self) -> &RawHlRing {
        &self.raw
    }

    pub fn order(&self) -> usize {
        self.raw.group.order()
    }

    pub fn sigma(&self) -> Elem {
        self.raw.sigma
    }

    #[inline]
    pub fn bullet(&self, x: Elem, y: Elem) -> Elem {
        self.raw.bullet.get(x, y)
    }

    #[inline]
    pub fn rarrow(&self, x: Elem, y: Elem) -> Elem {
        self.raw.rarrow.get(x, y)
    }

    #[inline]
    pub fn larrow(&self, x: Elem, y: Elem) -> Elem {
        self.raw.larrow.get(x, y)
    }
}

/// Runs every law exhaustively, including associativity of `⇀` and `↼`,
/// which any consistent input must satisfy.
pub fn validate_hlring(raw: RawHlRing) -> Result<HlRing, HlRingError> {
    let n = raw.group.order();
    for (table, t) in [
        ("bullet", &raw.bullet),
        ("rarrow", &raw.rarrow),
        ("larrow", &raw.larrow),
    ] {
        if t.order() != n {
            return Err(HlRingError::ShapeMismatch {
                table,
                found: t.order(),
                expected: n,
            });
        }
    }
    if raw.sigma >= n {
        return Err(HlRingError::SigmaOutOfRange(raw.sigma));
    }
    let mut shape = Vec::new();
    for (name, t) in [
        ("bullet", &raw.bullet),
        ("rarrow", &raw.rarrow),
        ("larrow", &raw.larrow),
    ] {
        if let Some(w) = t.first_undefined() {
            shape.push(Violation::new(Axiom::UndefinedEntry, w, name));
        }
        if let Some(w) = t.out_of_range() {
            shape.push(Violation::new(Axiom::EntryOutOfRange, w, name));
        }
    }
    if !shape.is_empty() {
        return Err(HlRingError::Violations(shape));
    }

    let g = &raw.group;
    let b = |x, y| raw.bullet.get(x, y);
    let ra = |x, y| raw.rarrow.get(x, y);
    let la = |x, y| raw.larrow.get(x, y);
    let s = raw.sigma;
    let mut v = Vec::new();

    if let Some(w) = first_triple(n, |x, y, z| b(b(x, y), z) != b(x, b(y, z))) {
        v.push(Violation::new(Axiom::BulletAssociative, w, ""));
    }
    if let Some(w) = first_triple(n, |x, y, z| {
        b(x, g.add(y, z)) != g.add(b(x, y), b(x, z)) || b(g.add(y, z), x) != g.add(b(y, x), b(z, x))
    }) {
        v.push(Violation::new(Axiom::BulletDistributive, w, ""));
    }
    if let Some(x) = (0..n).find(|&x| b(s, x) != x || b(x, s) != x) {
        v.push(Violation::new(Axiom::BulletIdentity, [x], ""));
    }
    if let Some([x, y]) = first_pair(n, |x, y| {
        b(x, y) != g.sub(g.add(ra(x, y), la(x, y)), ra(la(x, s), y))
    }) {
        v.push(Violation::new(
            Axiom::HuLiuDecomposition,
            [x, y],
            format!(
                "{x}•{y} = {} but {x}⇀{y} + {x}↼{y} - ({x}↼σ)⇀{y} = {}",
                b(x, y),
                g.sub(g.add(ra(x, y), la(x, y)), ra(la(x, s), y))
            ),
        ));
    }
    if let Some(w) = first_triple(n, |x, y, z| b(ra(x, y), z) != b(x, la(y, z))) {
        v.push(Violation::new(Axiom::TriassociativeMixed, w, ""));
    }
    if let Some(w) = first_triple(n, |x, y, z| ra(x, b(y, z)) != ra(ra(x, y), z)) {
        v.push(Violation::new(Axiom::TriassociativeRight, w, ""));
    }
    if let Some(w) = first_triple(n, |x, y, z| la(b(x, y), z) != la(la(x, y), z)) {
        v.push(Violation::new(Axiom::TriassociativeLeft, w, ""));
    }
    for (axiom, op) in [
        (Axiom::RarrowDistributive, &raw.rarrow),
        (Axiom::LarrowDistributive, &raw.larrow),
    ] {
        let o = |x, y| op.get(x, y);
        if let Some(w) = first_triple(n, |x, y, z| {
            o(x, g.add(y, z)) != g.add(o(x, y), o(x, z)) || o(g.add(y, z), x) != g.add(o(y, x), o(z, x))
        }) {
            v.push(Violation::new(axiom, w, ""));
        }
    }
    if let Some(w) = first_triple(n, |x, y, z| ra(ra(x, y), z) != ra(x, ra(y, z))) {
        v.push(Violation::new(Axiom::RarrowAssociative, w, "inconsistent input"));
    }
    if let Some(w) = first_triple(n, |x, y, z| la(la(x, y), z) != la(x, la(y, z))) {
        v.push(Violation::new(Axiom::LarrowAssociative, w, "inconsistent input"));
    }
    if !v.is_empty() {
        return Err(HlRingError::Violations(v));
    }
    let halo = Subset::from_predicate(n, |x| ra(s, x) == 0);
    Ok(HlRing { raw, halo })
}

/// `{x : σ⇀x = 0}`
pub fn hl_halo(h: &HlRing) -> Subset {
    h.halo
}

/// `x⇀y - y↼x`
pub fn hl_commutator(h: &HlRing, x: Elem, y: Elem) -> Elem {
    h.raw.group.sub(h.rarrow(x, y), h.larrow(y, x))
}

/// Whether every `x⇀y - y↼x` lies in the halo.
pub fn is_hl_commutative(h: &HlRing) -> Verdict {
    match first_pair(h.order(), |x, y| !h.halo.contains(hl_commutator(h, x, y))) {
        None => Ok(()),
        Some([x, y]) => Err(Violation::new(
            Axiom::HuLiuCommutative,
            [x, y],
            format!("{x}⇀{y} - {y}↼{x} = {}", hl_commutator(h, x, y)),
        )),
    }
}

/// Views a left commutative rng as a ring with the Hu-Liu product:
/// `σ = 1l`, `x⇀y = y·x`, `x↼y = x·y`, and `•` the induced product.
pub fn from_lcrng(r: &LcRng) -> Result<HlRing, HlRingError> {
    let n = r.order();
    let raw = RawHlRing {
        group: r.group().clone(),
        bullet: FiniteTable::from_fn(n, |x, y| induced_product(r, x, y)),
        rarrow: FiniteTable::from_fn(n, |x, y| r.mul(y, x)),
        larrow: FiniteTable::from_fn(n, |x, y| r.mul(x, y)),
        sigma: r.left_identity(),
    };
    let h = validate_hlring(raw).map_err(|e| match e {
        HlRingError::Violations(v) => HlRingError::BridgeAxiomFailure(v),
        other => other,
    })?;
    if let Err(v) = is_hl_commutative(&h) {
        return Err(HlRingError::BridgeAxiomFailure(vec![v]));
    }
    Ok(h)
}

/// One of the identities relating `⇀` and `↼`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DiIdentity {
    /// `(x↼y)↼z = x↼(y↼z)`
    LeftAssociative,
    /// `(x↼y)↼z = x↼(y⇀z)`
    LeftAbsorbsRight,
    /// `(x⇀y)↼z = x⇀(y↼z)`
    Middle,
    /// `(x↼y)⇀z = (x⇀y)⇀z`
    RightAbsorbsLeft,
    /// `(x⇀y)⇀z = x⇀(y⇀z)`
    RightAssociative,
}

impl DiIdentity {
    /// The five dialgebra identities, `↼` playing the left product and `⇀`
    /// the right product.
    pub const STANDARD: [DiIdentity; 5] = [
        DiIdentity::LeftAssociative,
        DiIdentity::LeftAbsorbsRight,
        DiIdentity::Middle,
        DiIdentity::RightAbsorbsLeft,
        DiIdentity::RightAssociative,
    ];

    pub fn formula(self) -> &'static str {
        match self {
            DiIdentity::LeftAssociative => "(x↼y)↼z = x↼(y↼z)",
            DiIdentity::LeftAbsorbsRight => "(x↼y)↼z = x↼(y⇀z)",
            DiIdentity::Middle => "(x⇀y)↼z = x⇀(y↼z)",
            DiIdentity::RightAbsorbsLeft => "(x↼y)⇀z = (x⇀y)⇀z",
            DiIdentity::RightAssociative => "(x⇀y)⇀z = x⇀(y⇀z)",
        }
    }

    fn sides(self, h: &HlRing, x: Elem, y: Elem, z: Elem) -> (Elem, Elem) {
        let (ra, la) = (|a, b| h.rarrow(a, b), |a, b| h.larrow(a, b));
        match self {
            DiIdentity::LeftAssociative => (la(la(x, y), z), la(x, la(y, z))),
            DiIdentity::LeftAbsorbsRight => (la(la(x, y), z), la(x, ra(y, z))),
            DiIdentity::Middle => (la(ra(x, y), z), ra(x, la(y, z))),
            DiIdentity::RightAbsorbsLeft => (ra(la(x, y), z), ra(ra(x, y), z)),
            DiIdentity::RightAssociative => (ra(ra(x, y), z), ra(x, ra(y, z))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiIdentityStatus {
    pub identity: DiIdentity,
    pub holds: bool,
    /// First failing triple, when the identity fails.
    pub witness: Option<[Elem; 3]>,
}

/// Evaluates the standard five identities.
pub fn diassociativity_report(h: &HlRing) -> Vec<DiIdentityStatus> {
    diassociativity_report_with(h, &DiIdentity::STANDARD)
}

pub fn diassociativity_report_with(h: &HlRing, identities: &[DiIdentity]) -> Vec<DiIdentityStatus> {
    identities
        .iter()
        .map(|&identity| {
            let witness = first_triple(h.order(), |x, y, z| {
                let (l, r) = identity.sides(h, x, y, z);
                l != r
            });
            DiIdentityStatus {
                identity,
                holds: witness.is_none(),
                witness,
            }
        })
        .collect()
}

/// A commutative ring read as a Hu-Liu ring with all three products equal.
pub fn degenerate(group: FiniteAbelianGroup, mul: FiniteTable, one: Elem) -> RawHlRing {
    RawHlRing {
        group,
        bullet: mul.clone(),
        rarrow: mul.clone(),
        larrow: mul,
        sigma: one,
    }
}
