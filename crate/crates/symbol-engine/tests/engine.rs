//! Worked examples for the rewrite engine: composition-fact substitution,
//! suspension, Whitehead simplifications, degree expansion, Hopf
//! invariants, decomposition ranges, Toda brackets, and normalization.

use std::collections::HashMap;

use abelian_core::FgAbGroup;
use symbol_engine::{
    compose, degree_precompose, hilton_decompose, hopf_h2, normalize, suspend, toda_bracket,
    whitehead, BracketFact, EmptyFactSource, Factor, FactSource, FormalElement, GenSymbol,
    HiltonSummand, SpaceId, SymbolError,
};

/// A small in-memory fact source for tests.
#[derive(Default)]
struct TestFacts {
    groups: HashMap<(SpaceId, u32), FgAbGroup>,
    compositions: HashMap<(String, String), FormalElement>,
    degrees: HashMap<(i64, String), FormalElement>,
    suspensions: HashMap<String, Factor>,
    hopfs: HashMap<String, FormalElement>,
    whitehead_expansions: HashMap<String, FormalElement>,
    brackets: HashMap<String, BracketFact>,
}

impl FactSource for TestFacts {
    fn group(&self, space: &SpaceId, m: u32) -> Option<FgAbGroup> {
        self.groups.get(&(space.clone(), m)).cloned()
    }
    fn composition(&self, l: &str, r: &str) -> Option<FormalElement> {
        self.compositions.get(&(l.to_string(), r.to_string())).cloned()
    }
    fn degree(&self, t: i64, w: &str) -> Option<FormalElement> {
        self.degrees.get(&(t, w.to_string())).cloned()
    }
    fn suspension(&self, g: &str) -> Option<Factor> {
        self.suspensions.get(g).cloned()
    }
    fn hopf(&self, w: &str) -> Option<FormalElement> {
        self.hopfs.get(w).cloned()
    }
    fn whitehead_expansion(&self, k: &str) -> Option<FormalElement> {
        self.whitehead_expansions.get(k).cloned()
    }
    fn bracket(&self, k: &str) -> Option<BracketFact> {
        self.brackets.get(k).cloned()
    }
}

fn gen(name: &str, src: u32, tgt: u32, sus: bool) -> FormalElement {
    FormalElement::gen(name, src, tgt, sus)
}

#[test]
fn compose_concatenates_and_checks_dimensions() {
    let beta = gen("beta_6", 14, 6, false);
    let sigma = gen("sigma''", 13, 14, true);
    let c = compose(&beta, &sigma).unwrap();
    assert_eq!(c.terms.len(), 1);
    assert_eq!(c.terms[0].1.key(), "beta_6 sigma''");
    let wrong = gen("eta_5", 6, 5, true);
    assert!(matches!(
        compose(&beta, &wrong),
        Err(SymbolError::DimensionMismatch { .. })
    ));
}

#[test]
fn post_composition_distributes_over_suspension_sums() {
    let f = gen("f", 8, 3, false);
    let sum = gen("a", 10, 8, true).add(&gen("b", 10, 8, true).scale(3));
    let c = compose(&f, &sum).unwrap();
    assert_eq!(c.terms.len(), 2);
    assert_eq!(c.terms[0].0, 1);
    assert_eq!(c.terms[1].0, 3);
}

#[test]
fn left_sum_over_non_suspension_is_rejected() {
    // (a + b) ∘ w with w not a suspension has no canonical expansion.
    let sum = gen("a", 8, 3, false).add(&gen("b", 8, 3, false));
    let w = gen("w", 10, 8, false);
    assert!(matches!(
        compose(&sum, &w),
        Err(SymbolError::IllegalDistribution { .. })
    ));
    // But a single ±1 term on the left always passes.
    let single = gen("a", 8, 3, false).scale(-1);
    assert!(compose(&single, &w).is_ok());
}

#[test]
fn composition_fact_substitution_inside_a_word() {
    // β₆ ∘ σ'' ∘ η₁₃ rewrites via σ''∘η₁₃ = 4·ν̄₆ to 4·(β₆ ∘ ν̄₆).
    let mut facts = TestFacts::default();
    facts.compositions.insert(
        ("sigma''".into(), "eta_13".into()),
        gen("bar_nu_6", 14, 6, true).scale(4),
    );
    let word = compose(
        &compose(&gen("beta_6", 6, 20, false), &gen("sigma''", 13, 6, true)).unwrap(),
        &gen("eta_13", 14, 13, true),
    )
    .unwrap();
    let grp = FgAbGroup::direct_sum_finite(&[("beta_6 bar_nu_6", 8)]).unwrap();
    let coords = normalize(&word, &grp, &facts).unwrap();
    assert_eq!(coords, grp.scale(4, &grp.generator("beta_6 bar_nu_6").unwrap()));
}

#[test]
fn suspension_kills_whitehead_words_and_renames_generators() {
    let facts = {
        let mut f = TestFacts::default();
        f.suspensions
            .insert("nu'".into(), Factor::Gen(GenSymbol {
                name: "Sigma nu'".into(),
                source_dim: 7,
                target_dim: 4,
                suspension: true,
            }));
        f
    };
    let w = whitehead(&FormalElement::iota(4), &FormalElement::iota(4)).unwrap();
    assert!(suspend(&w, 1, &facts).unwrap().is_zero());
    let s = suspend(&gen("nu'", 6, 3, false), 1, &facts).unwrap();
    assert_eq!(s.terms[0].1.key(), "Sigma nu'");
    assert!(matches!(
        suspend(&gen("unknown", 6, 3, false), 1, &facts),
        Err(SymbolError::MissingFact { .. })
    ));
}

#[test]
fn whitehead_self_brackets_simplify() {
    // [ι₃,ι₃] = 0, [ι₇,ι₇] = 0, 2[ι₅,ι₅] = 0 but [ι₅,ι₅] ≠ 0.
    assert!(whitehead(&FormalElement::iota(3), &FormalElement::iota(3))
        .unwrap()
        .is_zero());
    assert!(whitehead(&FormalElement::iota(7), &FormalElement::iota(7))
        .unwrap()
        .is_zero());
    let i5 = FormalElement::iota(5);
    assert!(whitehead(&i5.scale(2), &i5).unwrap().is_zero());
    let w5 = whitehead(&i5, &i5).unwrap();
    assert_eq!(w5.terms.len(), 1);
    assert_eq!(w5.terms[0].1.key(), "W[iota_5,iota_5]");
    assert_eq!(w5.terms[0].1.source_dim(), Some(9));
    // Even-dimensional self-bracket survives with full coefficient.
    let i4 = FormalElement::iota(4);
    let w4 = whitehead(&i4.scale(2), &i4).unwrap();
    assert_eq!(w4.terms[0].0, 2);
}

#[test]
fn degree_expansion_uses_curated_whitehead_value() {
    // (2ι₄)∘ν₄ = 2ν₄ + [ι₄,ι₄]∘H₂(ν₄) with H₂(ν₄) = ι₇ and
    // [ι₄,ι₄] = 2ν₄ − Σν'.
    let mut facts = TestFacts::default();
    facts.hopfs.insert("nu_4".into(), FormalElement::iota(7));
    facts.whitehead_expansions.insert(
        "W[iota_4,iota_4]".into(),
        gen("nu_4", 7, 4, false)
            .scale(2)
            .sub(&gen("Sigma nu'", 7, 4, true)),
    );
    let nu4 = gen("nu_4", 7, 4, false);
    let grp = FgAbGroup::direct_sum_finite(&[("Sigma nu'", 4), ("nu_4", 8)]).unwrap();
    let got = degree_precompose(2, &nu4, &facts).unwrap();
    let coords = normalize(&got, &grp, &facts).unwrap();
    // 2ν₄ + (2ν₄ − Σν') = 4ν₄ − Σν'.
    let expect = grp.add(
        &grp.scale(4, &grp.generator("nu_4").unwrap()),
        &grp.scale(-1, &grp.generator("Sigma nu'").unwrap()),
    );
    assert_eq!(coords, grp.reduce(&expect));
}

#[test]
fn degree_correction_vanishes_in_the_parallelizable_and_odd_cases() {
    let facts = EmptyFactSource;
    // S³ and S⁷: no correction even without any Hopf fact.
    for dim in [3u32, 7] {
        let a = gen("alpha", dim + 4, dim, false);
        let got = degree_precompose(2, &a, &facts).unwrap();
        assert_eq!(got, a.scale(2));
    }
    // Odd sphere with even binomial coefficient: t = 4 gives C(4,2) = 6.
    let a = gen("alpha", 9, 5, false);
    let got = degree_precompose(4, &a, &facts).unwrap();
    assert_eq!(got, a.scale(4));
    // Suspensions always pass the scalar straight through.
    let s = gen("beta", 9, 6, true);
    assert_eq!(degree_precompose(5, &s, &facts).unwrap(), s.scale(5));
    // Unit degrees are free.
    assert_eq!(degree_precompose(1, &a, &facts).unwrap(), a);
    assert_eq!(degree_precompose(-1, &a, &facts).unwrap(), a.scale(-1));
    assert!(degree_precompose(0, &a, &facts).unwrap().is_zero());
}

#[test]
fn hopf_of_wedge_bracket_is_smash_difference() {
    let j1 = gen("j1", 5, 5, false);
    let j2 = gen("j2", 10, 10, false);
    let w = whitehead(&j1, &j2).unwrap();
    let h = hopf_h2(&w, &EmptyFactSource).unwrap();
    assert_eq!(h.terms.len(), 2);
    let keys: Vec<_> = h.terms.iter().map(|(c, w)| (*c, w.key())).collect();
    assert!(keys.contains(&(1, "Sigma(j1^j2)".into())));
    assert!(keys.contains(&(-1, "Sigma(j2^j1)".into())));
}

#[test]
fn hopf_kills_suspensions_and_demands_facts_otherwise() {
    let s = gen("eta_6", 7, 6, true);
    assert!(hopf_h2(&s, &EmptyFactSource).unwrap().is_zero());
    let ns = gen("nu'", 6, 3, false);
    assert!(matches!(
        hopf_h2(&ns, &EmptyFactSource),
        Err(SymbolError::MissingFact { .. })
    ));
}

#[test]
fn hilton_range_examples() {
    // S⁵ ∨ S¹⁰ through dimension 14: weight ≤ 2 only.
    let got = hilton_decompose(5, 10, 14).unwrap();
    assert_eq!(
        got,
        vec![
            HiltonSummand { inclusion: "j1".into(), sphere_dim: 5 },
            HiltonSummand { inclusion: "j2".into(), sphere_dim: 10 },
            HiltonSummand { inclusion: "W[j1,j2]".into(), sphere_dim: 14 },
        ]
    );
    // Dimension 18 picks up the first weight-3 product.
    let got = hilton_decompose(5, 10, 18).unwrap();
    assert_eq!(got.len(), 4);
    assert_eq!(got[3].inclusion, "W[j1,W[j1,j2]]");
    assert_eq!(got[3].sphere_dim, 18);
    // S³ ∨ S⁶ in dimension 3: only the first wedge summand contributes.
    let got = hilton_decompose(3, 6, 3).unwrap();
    assert_eq!(got, vec![HiltonSummand { inclusion: "j1".into(), sphere_dim: 3 }]);
    // Past the first weight-4 product the decomposition refuses.
    assert!(matches!(
        hilton_decompose(3, 6, 12),
        Err(SymbolError::RangeExceeded { .. })
    ));
}

#[test]
fn toda_shuffle_rule() {
    let alpha = gen("alpha", 6, 3, false);
    let beta = gen("Sigma beta", 7, 6, true);
    let gamma = gen("Sigma gamma", 9, 7, true);
    // r = 1: {2α, Σβ, 2Σγ} ∋ α ∘ Σβ ∘ η₇ ∘ Σ²γ.
    let got = toda_bracket(
        &alpha.scale(2),
        &beta,
        &gamma.scale(2),
        &SpaceId::Sphere(3),
        &{
            let mut f = TestFacts::default();
            f.suspensions.insert(
                "Sigma gamma".into(),
                Factor::Gen(GenSymbol {
                    name: "Sigma^2 gamma".into(),
                    source_dim: 10,
                    target_dim: 8,
                    suspension: true,
                }),
            );
            f
        },
    )
    .unwrap();
    assert_eq!(
        got.representative.terms[0].1.key(),
        "alpha Sigma beta eta_7 Sigma^2 gamma"
    );
    // r ≥ 2: the bracket contains zero.
    let got = toda_bracket(
        &alpha.scale(4),
        &beta,
        &gamma.scale(4),
        &SpaceId::Sphere(3),
        &EmptyFactSource,
    )
    .unwrap();
    assert!(got.representative.is_zero());
}

#[test]
fn toda_curated_entry_wins() {
    let mut facts = TestFacts::default();
    let f = gen("2 iota", 3, 3, true).scale(2);
    let g = gen("g", 7, 3, true);
    let h = gen("h", 8, 7, true);
    let key = format!("{} | {} | {}", f.elem_key(), g.elem_key(), h.elem_key());
    facts.brackets.insert(
        key,
        BracketFact {
            representative: gen("eps", 9, 3, false),
            indeterminacy: vec![],
        },
    );
    let got = toda_bracket(&f, &g, &h, &SpaceId::Sphere(3), &facts).unwrap();
    assert_eq!(got.representative.terms[0].1.key(), "eps");
}

#[test]
fn normalize_reports_unresolvable_words() {
    let grp = FgAbGroup::direct_sum_finite(&[("eta_5", 2)]).unwrap();
    let unknown = gen("mystery", 6, 5, false);
    match normalize(&unknown, &grp, &EmptyFactSource) {
        Err(SymbolError::MissingFact { word }) => assert_eq!(word, "mystery"),
        other => panic!("expected MissingFact, got {other:?}"),
    }
}

#[test]
fn normalize_reduces_into_the_group() {
    let grp = FgAbGroup::direct_sum_finite(&[("eta_5", 2)]).unwrap();
    let e = gen("eta_5", 6, 5, true).scale(3);
    let coords = normalize(&e, &grp, &EmptyFactSource).unwrap();
    assert_eq!(coords, grp.generator("eta_5").unwrap());
    // Even multiples die in ℤ/2.
    let coords = normalize(&e.scale(2), &grp, &EmptyFactSource).unwrap();
    assert!(coords.is_zero());
}

#[test]
fn normalize_is_idempotent_on_resolved_elements() {
    let mut facts = TestFacts::default();
    facts.compositions.insert(
        ("a".into(), "b".into()),
        gen("c", 9, 4, true),
    );
    let grp = FgAbGroup::direct_sum_finite(&[("c", 4)]).unwrap();
    let word = compose(&gen("a", 7, 4, false), &gen("b", 9, 7, true)).unwrap();
    let once = normalize(&word, &grp, &facts).unwrap();
    let again = normalize(&gen("c", 9, 4, true), &grp, &facts).unwrap();
    assert_eq!(once, again);
}
