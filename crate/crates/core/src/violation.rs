//! Axiom names and witness-carrying violation records shared by every validator.

use std::fmt;

/// Every law the workbench checks, named by what it asserts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    // table shape
    EntryOutOfRange,
    UndefinedEntry,

    // additive group
    AddAssociative,
    AddCommutative,
    AddZeroNeutral,
    AddInverse,

    // (R, +, ·)
    LeftDistributive,
    RightDistributive,
    MulAssociative,
    LeftCommutative,
    LeftIdentity,
    TwoSidedIdentityExists,

    // halo and local product
    HaloNotSubgroup,
    EmptyHalo,
    LocalMulOutsideHalo,
    LocalMulUndefinedOnHalo,
    LocalMulNotClosed,
    LocalMulCommutative,
    LocalMulAssociative,
    LocalMulDistributive,
    NoLocalIdentity,
    LocalTriassociative,

    // commutative unital rings
    RingCommutative,
    RingIdentity,

    // ideals and subrngs
    NotSubgroup,
    RightAbsorbing,
    LeftAbsorbing,
    HaloPartNotIdeal,
    MissingLeftIdentity,
    NotProductClosed,
    HaloPartNotSubring,
    MissingLocalIdentity,
    GradingViolation,

    // Hu-Liu primality
    ProperIdeal,
    PrimeZeroComponent,
    PrimeMixedComponent,
    PrimeLocalComponent,
    ComplementZeroClosed,
    ComplementMixedClosed,
    ComplementLocalClosed,

    // rings with the Hu-Liu product
    BulletAssociative,
    BulletDistributive,
    BulletIdentity,
    HuLiuDecomposition,
    TriassociativeMixed,
    TriassociativeRight,
    TriassociativeLeft,
    RarrowDistributive,
    LarrowDistributive,
    RarrowAssociative,
    LarrowAssociative,
    HuLiuCommutative,

    // ring homomorphisms
    HomAdditive,
    HomMultiplicative,
    HomUnital,
}

impl Axiom {
    pub fn describe(self) -> &'static str {
        use Axiom::*;
        match self {
            EntryOutOfRange => "table entry out of range",
            UndefinedEntry => "table entry undefined",
            AddAssociative => "addition is associative",
            AddCommutative => "addition is commutative",
            AddZeroNeutral => "0 is the additive identity",
            AddInverse => "every element has an additive inverse",
            LeftDistributive => "x(y+z) = xy + xz",
            RightDistributive => "(y+z)x = yx + zx",
            MulAssociative => "(xy)z = x(yz)",
            LeftCommutative => "left commutativity xyz = yxz",
            LeftIdentity => "left identity 1l·x = x",
            TwoSidedIdentityExists => "a rng has no two-sided identity",
            HaloNotSubgroup => "the halo is an additive subgroup",
            EmptyHalo => "the halo is nonzero",
            LocalMulOutsideHalo => "local product defined only on halo x halo",
            LocalMulUndefinedOnHalo => "local product total on halo x halo",
            LocalMulNotClosed => "local product lands in the halo",
            LocalMulCommutative => "local product is commutative",
            LocalMulAssociative => "local product is associative",
            LocalMulDistributive => "local product distributes over +",
            NoLocalIdentity => "the halo ring has an identity",
            LocalTriassociative => "local triassociativity (xa)#b = x(a#b)",
            RingCommutative => "ring product is commutative",
            RingIdentity => "ring identity",
            NotSubgroup => "subset is an additive subgroup",
            RightAbsorbing => "IR is contained in I",
            LeftAbsorbing => "RI is contained in I",
            HaloPartNotIdeal => "I meets the halo in an ideal of the halo ring",
            MissingLeftIdentity => "subrng contains the left identity",
            NotProductClosed => "II is contained in I",
            HaloPartNotSubring => "I meets the halo in a subring of the halo ring",
            MissingLocalIdentity => "subrng contains the local identity",
            GradingViolation => "I = I0 + I1 componentwise",
            ProperIdeal => "prime ideal is proper",
            PrimeZeroComponent => "x0·y0 in p implies x0 in p0 or y0 in p0",
            PrimeMixedComponent => "x0·y1 in p implies x0 in p0 or y1 in p1",
            PrimeLocalComponent => "x1#y1 in p1 implies x1 in p1 or y1 in p1",
            ComplementZeroClosed => "U0 \\ q0 is closed under ·",
            ComplementMixedClosed => "(U0 \\ q0)(U1 \\ q1) avoids q1",
            ComplementLocalClosed => "U1 \\ q1 is closed under #",
            BulletAssociative => "bullet is associative",
            BulletDistributive => "bullet distributes over +",
            BulletIdentity => "sigma is a two-sided bullet identity",
            HuLiuDecomposition => "x•y = x⇀y + x↼y - (x↼σ)⇀y",
            TriassociativeMixed => "(x⇀y)•z = x•(y↼z)",
            TriassociativeRight => "x⇀(y•z) = (x⇀y)⇀z",
            TriassociativeLeft => "(x•y)↼z = (x↼y)↼z",
            RarrowDistributive => "⇀ distributes over +",
            LarrowDistributive => "↼ distributes over +",
            RarrowAssociative => "⇀ is associative",
            LarrowAssociative => "↼ is associative",
            HuLiuCommutative => "x⇀y - y↼x lies in the halo",
            HomAdditive => "map is additive",
            HomMultiplicative => "map is multiplicative",
            HomUnital => "map sends 1 to 1",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.describe())
    }
}

/// A failed law together with the first failing tuple in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
    pub detail: String,
}

impl Violation {
    pub fn new(axiom: Axiom, witness: impl Into<Vec<usize>>, detail: impl Into<String>) -> Self {
        Violation {
            axiom,
            witness: witness.into(),
            detail: detail.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at (", self.axiom)?;
        for (k, w) in self.witness.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str(")")?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

/// Outcome of a boolean predicate that reports why it failed.
pub type Verdict = Result<(), Violation>;

/// Formats a list of violations, one per line.
pub fn render_violations(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("\n")
}

/// Returns the first `(x, y)` in row-major order over `0..n` for which `fails` holds.
pub(crate) fn first_pair(n: usize, mut fails: impl FnMut(usize, usize) -> bool) -> Option<[usize; 2]> {
    for x in 0..n {
        for y in 0..n {
            if fails(x, y) {
                return Some([x, y]);
            }
        }
    }
    None
}

pub(crate) fn first_triple(
    n: usize,
    mut fails: impl FnMut(usize, usize, usize) -> bool,
) -> Option<[usize; 3]> {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if fails(x, y, z) {
                    return Some([x, y, z]);
                }
            }
        }
    }
    None
}
