//! Named example structures used throughout the tests and the CLI.

use crate::constructions::{product_ring, semidirect_null, zmod, FiniteCommRing, RingHom};
use crate::format::Document;
use crate::hlring::from_lcrng;
use crate::kernel::Subset;
use crate::lcrng::{validate_lcrng, LcRng};

fn build(a: &FiniteCommRing, b: &FiniteCommRing, images: Vec<usize>) -> LcRng {
    let phi = RingHom::new(a, b, images).expect("catalog homomorphism");
    validate_lcrng(semidirect_null(a, b, &phi).expect("catalog construction"))
        .expect("catalog structure validates")
}

fn klein_ring() -> FiniteCommRing {
    product_ring(&zmod(2), &zmod(2)).expect("order 4")
}

/// `Z2 ⋉ Z2` through the identity.
pub fn r4() -> LcRng {
    build(&zmod(2), &zmod(2), vec![0, 1])
}

/// `Z4 ⋉ Z2` through reduction mod 2.
pub fn r8() -> LcRng {
    build(&zmod(4), &zmod(2), vec![0, 1, 0, 1])
}

/// `(Z2 x Z2) ⋉ Z2` through the first projection.
pub fn u8() -> LcRng {
    build(&klein_ring(), &zmod(2), vec![0, 1, 0, 1])
}

/// The diagonal subrng `{(a,a)} x Z2` of [`u8`], isomorphic to [`r4`].
pub fn u8_diagonal() -> Subset {
    Subset::from_indices(8, [0, 3, 4, 7])
}

/// `Z6 ⋉ Z3` through reduction mod 3.
pub fn z6z3() -> LcRng {
    build(&zmod(6), &zmod(3), (0..6).map(|i| i % 3).collect())
}

/// `(Z2 x Z2) ⋉ (Z2 x Z2)` through the identity.
pub fn r16() -> LcRng {
    let k = klein_ring();
    build(&k, &k, (0..4).collect())
}

/// Every catalog structure with its short name.
pub fn all() -> Vec<(&'static str, LcRng)> {
    vec![
        ("r4", r4()),
        ("r8", r8()),
        ("u8", u8()),
        ("z6z3", z6z3()),
        ("r16", r16()),
    ]
}

fn described(
    name: &'static str,
    title: &str,
    r: &LcRng,
    text: &str,
) -> (&'static str, Document) {
    let mut doc = Document::lcrng(title, r);
    doc.metadata.insert("description".into(), text.into());
    (name, doc)
}

/// The documents shipped in `catalog/`, keyed by file stem.
pub fn documents() -> Vec<(&'static str, Document)> {
    let r4 = r4();
    let mut docs = vec![
        described("r4", "R4 = Z2 ⋉ Z2", &r4, "phi = identity"),
        described("r8", "R8 = Z4 ⋉ Z2", &r8(), "phi = reduction mod 2"),
        described(
            "u8",
            "U8 = (Z2 x Z2) ⋉ Z2",
            &u8(),
            "phi = first projection; diagonal subrng 0,3,4,7",
        ),
        described("z6z3", "Z6 ⋉ Z3", &z6z3(), "phi = reduction mod 3"),
        described("r16", "R16 = (Z2 x Z2) ⋉ (Z2 x Z2)", &r16(), "phi = identity"),
    ];
    let h = from_lcrng(&r4).expect("R4 bridges");
    docs.push(("r4_hl", Document::hlring("R4 (Hu-Liu)", &h)));
    docs.push(("z4", Document::ring("Z4", &zmod(4))));
    docs
}
