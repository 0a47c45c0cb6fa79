//! Lying-over for a subrng `R ⊆ U` with `U` graded integral over `R`.
//!
//! For each Hu-Liu prime `p` of `R`, the set
//! `T = {J ideal of U : J ∩ R ⊆ p}` is finite, so its maximal elements are
//! found by direct search. Each maximal `q` should satisfy `q ∩ R = p` and be
//! a Hu-Liu prime of `U`; the report records both facts for every `q`.

use std::fmt::Write as _;

use thiserror::Error;

use crate::ideals::{
    enumerate_ideals, is_complement_closed, is_huliu_prime, is_subrng, spectrum, GradedIdeal,
    IdealKind, Primality, Spectrum, SubrngMode,
};
use crate::integrality::{component_ring, search_witness};
use crate::kernel::{Elem, Subset};
use crate::lcrng::{Grade, LcRng, LcRngError};
use crate::violation::Violation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LyingOverError {
    #[error("not a subrng: {0}")]
    NotASubrng(Violation),
    #[error("element {element} is not graded integral over the subrng ({grade:?} component)")]
    NotGradedIntegral { element: Elem, grade: Grade },
    #[error("restricting to the subrng failed: {0}")]
    Restriction(#[from] LcRngError),
    #[error("{0} is not a Hu-Liu prime of the subrng")]
    PNotPrime(Subset),
    #[error("no prime of U lies over {p}; this contradicts lying-over\n{dump}")]
    NoWitness { p: Subset, dump: String },
    #[error(transparent)]
    Integrality(#[from] crate::integrality::IntegralityError),
}

/// A subrng `R` of `U`, with `R` also available as a structure of its own.
#[derive(Debug, Clone)]
pub struct SubrngPair {
    pub ambient: LcRng,
    pub sub: Subset,
    /// `R` renumbered to `0..|R|`.
    pub sub_ring: LcRng,
    /// Maps indices of `sub_ring` back into `ambient`.
    pub embedding: Vec<Elem>,
}

impl SubrngPair {
    /// Maps a subset of `sub_ring` into the ambient numbering.
    pub fn lift(&self, s: &Subset) -> Subset {
        Subset::from_indices(self.ambient.order(), s.iter().map(|i| self.embedding[i]))
    }

    /// Spectrum of `R`, in ambient numbering.
    pub fn sub_spectrum(&self) -> Vec<GradedIdeal> {
        spectrum(&self.sub_ring)
            .primes
            .into_iter()
            .map(|p| GradedIdeal {
                carrier: self.lift(&p.carrier),
                i0: self.lift(&p.i0),
                i1: self.lift(&p.i1),
                kind: IdealKind::Ideal,
                prime: Primality::Prime,
            })
            .collect()
    }
}

/// Checks that `s` is a subrng of `u` and that `u` is graded integral over it.
pub fn embed_check(u: &LcRng, s: &Subset, mode: SubrngMode) -> Result<SubrngPair, LyingOverError> {
    is_subrng(u, s, mode).map_err(LyingOverError::NotASubrng)?;
    let n = u.order();
    for grade in Grade::BOTH {
        let ring = component_ring(u, grade)?;
        let coeffs = s.intersection(&ring.carrier);
        for x in ring.carrier.iter() {
            if search_witness(&ring, &coeffs, x, n).is_none() {
                return Err(LyingOverError::NotGradedIntegral { element: x, grade });
            }
        }
    }
    // integrality of 1# forces it into s, so only strict pairs reach here
    is_subrng(u, s, SubrngMode::Strict).map_err(LyingOverError::NotASubrng)?;
    let (sub_ring, embedding) = u.substructure(s)?;
    Ok(SubrngPair {
        ambient: u.clone(),
        sub: *s,
        sub_ring,
        embedding,
    })
}

fn require_prime(pair: &SubrngPair, p: &Subset) -> Result<(), LyingOverError> {
    if pair.sub_spectrum().iter().any(|q| q.carrier == *p) {
        Ok(())
    } else {
        Err(LyingOverError::PNotPrime(*p))
    }
}

/// All ideals `J` of `U` with `J ∩ R ⊆ p`, in canonical order.
pub fn t_set(pair: &SubrngPair, p: &Subset) -> Result<Vec<GradedIdeal>, LyingOverError> {
    require_prime(pair, p)?;
    Ok(enumerate_ideals(&pair.ambient)
        .into_iter()
        .filter(|j| j.carrier.intersection(&pair.sub).is_subset_of(p))
        .collect())
}

/// The inclusion-maximal members of [`t_set`].
pub fn maximal_in_t(pair: &SubrngPair, p: &Subset) -> Result<Vec<GradedIdeal>, LyingOverError> {
    let t = t_set(pair, p)?;
    Ok(t.iter()
        .filter(|j| !t.iter().any(|k| j.carrier.is_proper_subset_of(&k.carrier)))
        .cloned()
        .collect())
}

/// The canonically least `q` in the spectrum of `U` with `q ∩ R = p`.
pub fn lying_over(pair: &SubrngPair, p: &Subset) -> Result<GradedIdeal, LyingOverError> {
    require_prime(pair, p)?;
    let spec_u = spectrum(&pair.ambient);
    let witness = spec_u
        .primes
        .iter()
        .find(|q| q.carrier.intersection(&pair.sub) == *p)
        .cloned();
    match witness {
        Some(q) => Ok(q),
        None => Err(LyingOverError::NoWitness {
            p: *p,
            dump: diagnostic_dump(pair, p, &spec_u),
        }),
    }
}

fn diagnostic_dump(pair: &SubrngPair, p: &Subset, spec_u: &Spectrum) -> String {
    let u = &pair.ambient;
    let mut out = String::new();
    let _ = writeln!(out, "order: {}", u.order());
    let _ = writeln!(out, "left identity: {}", u.left_identity());
    let _ = writeln!(out, "local identity: {}", u.local_identity());
    let _ = writeln!(out, "halo: {}", u.halo());
    let _ = writeln!(out, "subrng: {}", pair.sub);
    let _ = writeln!(out, "p: {p}");
    for (name, t) in [("add", u.group().table()), ("mul", &u.raw().mul)] {
        let _ = writeln!(out, "{name}:");
        for row in t.rows() {
            let _ = writeln!(out, "  {row:?}");
        }
    }
    let _ = writeln!(out, "local_mul:");
    for row in u.raw().local_mul.partial_rows() {
        let _ = writeln!(out, "  {row:?}");
    }
    let _ = writeln!(out, "spectrum of U: {:?}", spec_u.carriers());
    out
}

/// What was found about one maximal element `q` of `T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalCheck {
    pub q: Subset,
    /// `q ∩ R = p`
    pub lies_over: bool,
    pub prime: bool,
    pub complement_closed: bool,
}

impl MaximalCheck {
    pub fn ok(&self) -> bool {
        self.lies_over && self.prime && self.complement_closed
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LyingOverRow {
    pub p: Subset,
    /// Every prime of `U` lying over `p`.
    pub witnesses: Vec<Subset>,
    pub maximal: Vec<MaximalCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LyingOverReport {
    pub rows: Vec<LyingOverRow>,
    /// Every row has at least one witness.
    pub pass: bool,
}

impl LyingOverReport {
    /// Every maximal element of every `T` lies over its `p` and is prime.
    pub fn maximal_elements_ok(&self) -> bool {
        self.rows.iter().all(|r| r.maximal.iter().all(MaximalCheck::ok))
    }
}

/// Runs lying-over for every prime of `R`.
pub fn verify_lying_over_all(pair: &SubrngPair) -> LyingOverReport {
    let spec_u = spectrum(&pair.ambient);
    let ideals_u = enumerate_ideals(&pair.ambient);
    let mut rows = Vec::new();
    for p in pair.sub_spectrum() {
        let p = p.carrier;
        let witnesses: Vec<Subset> = spec_u
            .carriers()
            .into_iter()
            .filter(|q| q.intersection(&pair.sub) == p)
            .collect();
        let t: Vec<&GradedIdeal> = ideals_u
            .iter()
            .filter(|j| j.carrier.intersection(&pair.sub).is_subset_of(&p))
            .collect();
        let maximal = t
            .iter()
            .filter(|j| !t.iter().any(|k| j.carrier.is_proper_subset_of(&k.carrier)))
            .map(|q| MaximalCheck {
                q: q.carrier,
                lies_over: q.carrier.intersection(&pair.sub) == p,
                prime: is_huliu_prime(&pair.ambient, &q.carrier).is_ok(),
                complement_closed: is_complement_closed(&pair.ambient, &q.carrier).is_ok(),
            })
            .collect();
        rows.push(LyingOverRow {
            p,
            witnesses,
            maximal,
        });
    }
    let pass = rows.iter().all(|r| !r.witnesses.is_empty());
    LyingOverReport { rows, pass }
}
