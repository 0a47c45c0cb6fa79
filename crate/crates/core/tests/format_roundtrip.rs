use lcrng_core::catalog;
use lcrng_core::format::{emit_structure, parse_structure, Document, FormatError};
use proptest::prelude::*;

proptest! {
    #[test]
    fn emit_then_parse_is_identity(
        which in 0usize..5,
        x in 0usize..64,
        y in 0usize..64,
        v in 0usize..64,
        note in "[a-z ]{0,12}",
    ) {
        let (_, r) = catalog::all().swap_remove(which);
        let n = r.order();
        let mut raw = r.raw().clone();
        raw.mul.set(x % n, y % n, v % n);
        let mut doc = Document::new(format!("mutant {which}"), lcrng_core::format::Structure::LcRng(raw));
        doc.metadata.insert("note".into(), note.into());
        let text = emit_structure(&doc);
        let back = parse_structure(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(emit_structure(&back), text);
    }

    #[test]
    fn truncation_is_malformed(cut in 1usize..200) {
        let text = emit_structure(&catalog::documents().swap_remove(0).1);
        let cut = cut.min(text.len() - 2);
        let err = parse_structure(&text[..cut]).unwrap_err();
        prop_assert!(matches!(err, FormatError::MalformedDocument(_)));
    }
}

#[test]
fn every_kind_round_trips() {
    for (stem, doc) in catalog::documents() {
        let text = emit_structure(&doc);
        assert_eq!(parse_structure(&text).unwrap(), doc, "{stem}");
    }
}
