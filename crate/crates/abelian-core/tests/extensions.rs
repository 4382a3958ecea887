//! Ext groups and extension-problem resolution.

use abelian_core::{
    enumerate_extensions, ext1, extension_from_lift_relations, resolve_extension, AbelianError,
    ExtensionConstraint, FgAbGroup, GroupElement, Order,
};

fn z(orders: &[(&str, u128)]) -> FgAbGroup {
    FgAbGroup::direct_sum_finite(orders).unwrap()
}

#[test]
fn ext_of_cyclics() {
    // Ext¹(ℤ₄, ℤ₂) = ℤ₂
    let e = ext1(&z(&[("c", 4)]), &z(&[("a", 2)]));
    assert_eq!(e.torsion(), &[2]);
    // Ext¹(ℤ, ℤ₈) = 0
    let free = FgAbGroup::direct_sum(&[("c", Order::Infinite)]).unwrap();
    let e = ext1(&free, &z(&[("a", 8)]));
    assert!(e.is_trivial());
    // Ext¹(ℤ₂⊕ℤ₄, ℤ₄) = ℤ₂ ⊕ ℤ₄ by bilinearity.
    let e = ext1(&z(&[("c1", 2), ("c2", 4)]), &z(&[("a", 4)]));
    assert_eq!(e.torsion(), &[2, 4]);
}

#[test]
fn enumerate_z2_by_z2() {
    let out = enumerate_extensions(&z(&[("a", 2)]), &z(&[("c", 2)])).unwrap();
    let labels: Vec<(String, u128)> = out
        .iter()
        .map(|(t, n)| (t.label(), *n))
        .collect();
    assert_eq!(
        labels,
        vec![("(2)^2".to_string(), 1), ("4".to_string(), 1)]
    );
}

#[test]
fn enumerate_z2_by_z4() {
    let out = enumerate_extensions(&z(&[("a", 2)]), &z(&[("c", 4)])).unwrap();
    let labels: Vec<(String, u128)> = out.iter().map(|(t, n)| (t.label(), *n)).collect();
    assert_eq!(
        labels,
        vec![("2 + 4".to_string(), 1), ("8".to_string(), 1)]
    );
}

#[test]
fn enumeration_counts_match_ext_classes() {
    // For assorted small pairs, total classes = |Ext¹(C, A)|.
    let pairs: Vec<(FgAbGroup, FgAbGroup)> = vec![
        (z(&[("a", 2)]), z(&[("c", 2)])),
        (z(&[("a", 4)]), z(&[("c", 2)])),
        (z(&[("a1", 2), ("a2", 4)]), z(&[("c", 4)])),
        (z(&[("a", 8)]), z(&[("c1", 2), ("c2", 2)])),
        (z(&[("a1", 2), ("a2", 2)]), z(&[("c1", 2), ("c2", 4)])),
    ];
    for (a, c) in &pairs {
        let out = enumerate_extensions(a, c).unwrap();
        let total: u128 = out.iter().map(|(_, n)| n).sum();
        let ext = ext1(c, a);
        let ext_order = match ext.order() {
            Order::Finite(n) => n,
            Order::Infinite => unreachable!(),
        };
        assert_eq!(total, ext_order, "class count vs |Ext¹| for {a} by {c}");
    }
}

#[test]
fn infinite_input_is_rejected() {
    let free = FgAbGroup::direct_sum(&[("a", Order::Infinite)]).unwrap();
    let err = enumerate_extensions(&free, &z(&[("c", 2)])).unwrap_err();
    assert!(matches!(err, AbelianError::InfiniteGroup { .. }));
}

#[test]
fn bound_is_enforced() {
    let a = z(&[("a1", 2), ("a2", 2), ("a3", 2), ("a4", 2)]);
    let c = z(&[("c1", 2), ("c2", 2), ("c3", 2), ("c4", 2)]);
    // 16^4 = 65536 classes > 2^12.
    let err = enumerate_extensions(&a, &c).unwrap_err();
    assert!(matches!(err, AbelianError::BoundExceeded { .. }));
}

#[test]
fn forced_split_by_lift_order() {
    let a = z(&[("a", 2)]);
    let c = z(&[("c", 2)]);
    let out = resolve_extension(
        &a,
        &c,
        &[ExtensionConstraint::LiftOrder {
            quotient_gen: "c".into(),
            order: 2,
        }],
    )
    .unwrap();
    let tys = out.iso_types();
    assert_eq!(tys.len(), 1);
    assert_eq!(tys[0].label(), "(2)^2");
}

#[test]
fn table_one_style_resolution() {
    // A = ℤ₂ ⊕ ℤ₂ ⊕ ℤ₄, C = ℤ₂{nu4eta7} ⊕ ℤ₂{Snu'eta7}; the quotient
    // generators lift to orders 4 and 2 and the extension does not split:
    // only (2)² + (4)² survives.
    let a = z(&[("a1", 2), ("a2", 2), ("a3", 4)]);
    let c = z(&[("nu4 eta7", 2), ("Snu' eta7", 2)]);
    let out = resolve_extension(
        &a,
        &c,
        &[
            ExtensionConstraint::LiftOrder {
                quotient_gen: "Snu' eta7".into(),
                order: 2,
            },
            ExtensionConstraint::LiftOrder {
                quotient_gen: "nu4 eta7".into(),
                order: 4,
            },
            ExtensionConstraint::DoesNotSplit,
        ],
    )
    .unwrap();
    let tys = out.iso_types();
    assert_eq!(tys.len(), 1, "constraints must pin the extension");
    assert_eq!(tys[0].label(), "(2)^2 + (4)^2");
}

#[test]
fn lift_relation_creates_z4() {
    // A = ℤ₂{beta17 eta17^2}, C = ℤ₂{eta18}, with 2·lift = beta17 eta17²:
    // the middle group is ℤ₄ generated by the lift.
    let a = z(&[("beta17 eta17^2", 2)]);
    let c = z(&[("eta18", 2)]);
    let out = resolve_extension(
        &a,
        &c,
        &[ExtensionConstraint::LiftTimesOrderEquals {
            quotient_gen: "eta18".into(),
            target: vec![(1, "beta17 eta17^2".into())],
        }],
    )
    .unwrap();
    let tys = out.iso_types();
    assert_eq!(tys.len(), 1);
    assert_eq!(tys[0].label(), "4");
}

#[test]
fn contradiction_reports_constraint() {
    // ℤ₂ by ℤ₂ with a lift of order 8 is impossible.
    let err = resolve_extension(
        &z(&[("a", 2)]),
        &z(&[("c", 2)]),
        &[ExtensionConstraint::LiftOrder {
            quotient_gen: "c".into(),
            order: 8,
        }],
    )
    .unwrap_err();
    match err {
        AbelianError::Contradiction { constraint } => {
            assert!(constraint.contains("lift_order"), "got: {constraint}");
        }
        other => panic!("expected Contradiction, got {other:?}"),
    }
}

#[test]
fn empty_constraints_match_enumeration_support() {
    let a = z(&[("a1", 2), ("a2", 4)]);
    let c = z(&[("c1", 2), ("c2", 2)]);
    let enumerated = enumerate_extensions(&a, &c).unwrap();
    let resolved = resolve_extension(&a, &c, &[]).unwrap();
    let mut support: Vec<String> = enumerated.iter().map(|(t, _)| t.label()).collect();
    support.sort();
    let mut got: Vec<String> = resolved.iso_types().iter().map(|t| t.label()).collect();
    got.sort();
    assert_eq!(got, support);
}

#[test]
fn direct_construction_matches_constraints() {
    // 4·lift = a (order-2 element of A = ℤ₂⊕ℤ₂) with C = ℤ₄ gives a ℤ₈
    // summand: G = ℤ₂ ⊕ ℤ₈.
    let a = z(&[("u", 2), ("v", 2)]);
    let c = z(&[("w", 4)]);
    let target = a.generator("u").unwrap();
    let g = extension_from_lift_relations(&a, &c, &[target]).unwrap();
    assert_eq!(g.iso_type().label(), "2 + 8");
    // The lift is addressable and has order 8.
    let lift = g.generator("lift.w").unwrap();
    assert_eq!(g.element_order(&lift), Order::Finite(8));
    // And 4·lift equals the image of u.
    let four_lift = g.scale(4, &lift);
    let u_img = g.generator("u").unwrap();
    assert_eq!(four_lift, u_img);
}

#[test]
fn split_construction_with_zero_targets() {
    let a = z(&[("u", 2), ("v", 4)]);
    let c = z(&[("w", 4), ("x", 2)]);
    let zeroes = vec![GroupElement::zero(a.rank()), GroupElement::zero(a.rank())];
    let g = extension_from_lift_relations(&a, &c, &zeroes).unwrap();
    assert_eq!(g.iso_type().label(), "(2)^2 + (4)^2");
}
