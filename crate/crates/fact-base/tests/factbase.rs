//! Integration tests for the bundled fact file: loading, validation,
//! round-tripping, lookup semantics and expression evaluation.

use fact_base::rexpr::{self, ParamAssignment, RCond};
use fact_base::words::parse_word;
use fact_base::{FactBase, FactRecord};

fn load() -> FactBase {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../facts/core.json");
    FactBase::load(path).expect("bundled fact file loads")
}

#[test]
fn bundled_file_loads_and_validates() {
    let fb = load();
    assert_eq!(fb.version(), "1.0.0");
    assert!(fb.validate().is_empty());
    assert!(!fb.facts().is_empty());
    assert!(!fb.expected_entries().is_empty());
}

#[test]
fn serialize_round_trips() {
    let fb = load();
    let text = fb.serialize();
    let fb2 = FactBase::load_str(&text).expect("serialized text reloads");
    assert_eq!(fb.version(), fb2.version());
    assert_eq!(fb.facts().len(), fb2.facts().len());
    assert_eq!(fb.expected_entries().len(), fb2.expected_entries().len());
    assert!(fb2.validate().is_empty());
    // A second serialization is byte-identical (stable field order).
    assert_eq!(text, fb2.serialize());
}

#[test]
fn sphere_group_queries() {
    let fb = load();
    // pi_7(S^4) = inf + 4 with both generators addressable by name.
    let g = fb.sphere_group_by_m(4, 7).unwrap();
    assert_eq!(g.free_rank(), 1);
    assert_eq!(g.torsion(), &[4]);
    assert!(g.generator("nu_4").is_ok());
    assert!(g.generator("Snup_4").is_ok());
    // pi_10(S^6) is curated as the trivial group, not a missing record.
    let t = fb.sphere_group_by_m(6, 10).unwrap();
    assert_eq!(t.free_rank(), 0);
    assert!(t.torsion().is_empty());
    // An uncurated dimension is reported as such.
    assert!(fb.sphere_group_by_m(6, 40).is_err());
}

/// The r-conditioned lookups return the first matching record in file
/// order; this checks that whatever they return actually matches r, and
/// that it is the first match when scanning the file directly.
#[test]
fn conditioned_lookups_are_first_match_in_file_order() {
    let fb = load();
    for r in [1u32, 2, 3, 4, 8] {
        for f in fb.facts() {
            match f {
                FactRecord::Boundary(b) => {
                    if let Some(hit) = fb.boundary_fact(b.k, b.m, &b.gen, r) {
                        assert!(RCond::parse(&hit.r_cond).unwrap().matches(r));
                        let first = fb
                            .facts()
                            .iter()
                            .find_map(|g| match g {
                                FactRecord::Boundary(x)
                                    if x.k == b.k
                                        && x.m == b.m
                                        && x.gen == b.gen
                                        && RCond::parse(&x.r_cond).unwrap().matches(r) =>
                                {
                                    Some(&x.id)
                                }
                                _ => None,
                            })
                            .unwrap();
                        assert_eq!(&hit.id, first);
                    }
                }
                FactRecord::Extension(e) => {
                    if let Some(hit) = fb.extension_fact(e.n, e.i, r) {
                        assert!(RCond::parse(&hit.r_cond).unwrap().matches(r));
                    }
                }
                FactRecord::JGroup(j) => {
                    if let Some(hit) = fb.jgroup_fact(j.k, &j.stage, j.m, r) {
                        assert!(RCond::parse(&hit.r_cond).unwrap().matches(r));
                    }
                }
                _ => {}
            }
        }
    }
}

#[test]
fn r_split_records_resolve_to_distinct_values() {
    let fb = load();
    // pi_14(P^5) has separate resolutions at r=1 and r>=2.
    let e1 = fb.extension_fact(5, 14, 1).expect("r=1 record");
    let e2 = fb.extension_fact(5, 14, 2).expect("r>=2 record");
    let e8 = fb.extension_fact(5, 14, 8).expect("r=8 uses the r>=2 record");
    assert_ne!(e1.id, e2.id);
    assert_eq!(e2.id, e8.id);
    // pi_16(P^8) splits three ways: r=1, r=2 and r>=3.
    let f1 = fb.extension_fact(8, 16, 1).expect("r=1 record");
    let f2 = fb.extension_fact(8, 16, 2).expect("r=2 record");
    let f3 = fb.extension_fact(8, 16, 3).expect("r>=3 record");
    let f8 = fb.extension_fact(8, 16, 8).expect("r=8 uses the r>=3 record");
    assert_ne!(f1.id, f2.id);
    assert_ne!(f2.id, f3.id);
    assert_eq!(f3.id, f8.id);
}

#[test]
fn rcond_parsing_and_matching() {
    assert!(RCond::parse("*").unwrap().matches(1));
    assert!(RCond::parse("*").unwrap().matches(8));
    assert!(RCond::parse("r=2").unwrap().matches(2));
    assert!(!RCond::parse("r=2").unwrap().matches(3));
    assert!(RCond::parse("r<=2").unwrap().matches(1));
    assert!(!RCond::parse("r<=2").unwrap().matches(3));
    assert!(RCond::parse("r>=3").unwrap().matches(8));
    assert!(!RCond::parse("r>=3").unwrap().matches(2));
    assert!(RCond::parse("r == 2").is_err());
}

#[test]
fn expression_evaluation() {
    let p = ParamAssignment::empty();
    let ev = |s: &str, r: u32| rexpr::eval_str(s, r, &p).unwrap();
    assert_eq!(ev("2^r", 3), 8);
    assert_eq!(ev("1+2*3", 1), 7);
    assert_eq!(ev("-(3-5)", 1), 2);
    assert_eq!(ev("min(r+1, 3)", 1), 2);
    assert_eq!(ev("min(r+1, 3)", 4), 3);
    assert_eq!(ev("binom2(4)", 1), 6);
    // Builtins tied to the exponent r.
    assert_eq!(ev("theta", 1), 0);
    assert_eq!(ev("theta", 2), 1);
    assert_eq!(ev("2^(2*theta)", 1), 1);
    assert_eq!(ev("2^(2*theta)", 5), 4);
    assert_eq!((1..=4).map(|r| ev("delta", r)).collect::<Vec<_>>(), [4, 2, 1, 1]);
    assert_eq!(
        (1..=5).map(|r| ev("delta16", r)).collect::<Vec<_>>(),
        [8, 4, 2, 1, 1]
    );
    // Named parameters resolve through the assignment.
    let q = ParamAssignment::of(&[("a0", 3), ("eps1", -1)]);
    assert_eq!(rexpr::eval_str("a0*eps1", 1, &q).unwrap(), -3);
    assert!(rexpr::eval_str("nosuchparam", 1, &p).is_err());
}

#[test]
fn word_parsing_against_the_symbol_table() {
    let fb = load();
    let tab = fb.symbol_table();
    let w = parse_word("nu_5 eta_8 eta_9", tab).unwrap();
    assert_eq!(w.key(), "nu_5 eta_8 eta_9");
    assert!(w.is_suspension());
    let v = parse_word("nu_4 eta_7", tab).unwrap();
    assert!(!v.is_suspension());
    assert!(parse_word("nu_5 bogus_9", tab).is_err());
    // Structured factors parse too: degree maps and Whitehead products.
    let d = parse_word("(2 iota_4)", tab).unwrap();
    assert_eq!(d.key(), "(2 iota_4)");
    let wh = parse_word("W[iota_5,iota_5]", tab).unwrap();
    assert_eq!(wh.key(), "W[iota_5,iota_5]");
}
