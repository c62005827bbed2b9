use confalg::{builtins, dsl, Basis, DPoly, Element, Generator, Parity, ParseErrorKind, Scalar};
use proptest::prelude::*;

fn basis() -> Basis {
    Basis::new(vec![Generator::new("u", Parity::Even), Generator::new("v", Parity::Odd), Generator::new("w2", Parity::Even)])
}

fn coeff() -> impl Strategy<Value = Scalar> {
    (-9i64..9, 1i64..5, -4i64..4).prop_map(|(n, d, i)| &Scalar::from_ratio(n, d) + &(&Scalar::i() * &Scalar::from_ratio(i, d)))
}

fn element() -> impl Strategy<Value = Element> {
    prop::collection::vec((0usize..3, prop::collection::vec(coeff(), 0..4)), 0..4).prop_map(|terms| {
        Element::from_terms(terms.into_iter().map(|(g, c)| (g, DPoly::from_coeffs(c))))
    })
}

fn line_col_in_range(src: &str, line: usize, col: usize) -> bool {
    let lines: Vec<&str> = src.split('\n').collect();
    line >= 1 && line <= lines.len().max(1) && col >= 1 && col <= lines.get(line - 1).map_or(1, |l| l.chars().count() + 1)
}

proptest! {
    #[test]
    fn element_text_round_trip(x in element()) {
        let b = basis();
        let text = dsl::emit_element(&b, &x);
        let back = dsl::parse_elements(&b, &text).unwrap();
        prop_assert_eq!(back, vec![x]);
    }

    #[test]
    fn arbitrary_text_never_panics(src in "[a-z{}\\[\\]<>();=+*^/0-9 \\n#,.-]{0,80}") {
        if let Err(e) = dsl::parse(&src) {
            prop_assert!(line_col_in_range(&src, e.line, e.col), "{:?} at {}:{}", e.kind, e.line, e.col);
        }
    }

    #[test]
    fn truncations_of_valid_text_are_rejected_cleanly(cut in 0usize..200) {
        let text = dsl::emit_algebra(&builtins::algebra("w1").unwrap());
        let cut = cut.min(text.len());
        if cut < text.trim_end().len() {
            let res = dsl::parse(&text[..cut]);
            if let Err(e) = res {
                prop_assert!(line_col_in_range(&text[..cut], e.line, e.col));
            }
        }
    }
}

#[test]
fn error_kinds() {
    let kind = |src: &str| dsl::parse(src).err().map(|e| e.kind);
    assert_eq!(kind("algebra a { even x; [x 0 y] = x; }"), Some(ParseErrorKind::UndefinedGenerator));
    assert_eq!(kind("algebra a { even x; [x 0 x] = (1/0) x; }"), Some(ParseErrorKind::MalformedCoefficient));
    assert_eq!(kind("algebra a { even x, x; }"), Some(ParseErrorKind::DuplicateGenerator));
    assert_eq!(kind("algebra a { even x; [x 0 x] = x; [x 0 x] = x; }"), Some(ParseErrorKind::DuplicateProduct));
    assert_eq!(kind("algebra a { even x [x 0 x] = x; }"), Some(ParseErrorKind::Syntax));
}

#[test]
fn module_and_cocycle_over_builtin() {
    let vir = std::sync::Arc::new(builtins::algebra("vir").unwrap());
    let m = dsl::parse_module("module m over vir {\n  even v;\n  <L 0 v> = d v + 1/2 v;\n  <L 1 v> = 2 v;\n}", std::slice::from_ref(&vir)).unwrap();
    assert!(m.check().passed());
    let text = dsl::emit_module(&m);
    let back = dsl::parse_module(&text, std::slice::from_ref(&vir)).unwrap();
    assert_eq!(dsl::emit_module(&back), text);
    let c = dsl::parse_cocycle("cocycle c over vir { (L 3 L) = 2i; }", &[vir]).unwrap();
    assert!(dsl::emit_cocycle("c", &c).contains("2i"));
}
