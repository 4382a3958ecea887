//! Acceptance gate: one test per contract criterion, each printing a
//! single pass/fail line. Run with `--nocapture` to see the lines for
//! passing criteria too.

use std::time::Instant;

use abelian_core::{
    enumerate_extensions, ext1, resolve_extension, smith_normal_form, FgAbGroup, IntMatrix,
    Order,
};
use fact_base::words::symbols_mentioned;
use fact_base::{FactBase, FactRecord, ParamAssignment, RCond};
use fibration_pipeline::{
    param_sweep, pi_moore, verify_tables, Status, DEFAULT_R_SET,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tensor_algebra::{
    hurewicz_divisibility, left_normed_bracket, samelson_h2_model, Alphabet, TAElement,
};

fn load() -> FactBase {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../facts/core.json");
    FactBase::load(path).expect("bundled fact file loads")
}

fn line(tag: &str, ok: bool, detail: &str) {
    println!(
        "ACCEPTANCE {tag}: {} ({detail})",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "ACCEPTANCE {tag} FAILED: {detail}");
}

fn failures_of(report: &fibration_pipeline::Report, source_prefix: &str) -> Vec<String> {
    report
        .entries
        .iter()
        .filter(|e| e.source.starts_with(source_prefix))
        .filter_map(|e| match &e.status {
            Status::Pass => None,
            Status::Fail { expected, computed } => Some(format!(
                "pi_{}(P^{}(2^{})): expected {expected}, computed {computed}",
                e.i, e.n, e.r
            )),
            Status::Skipped { reason } => {
                Some(format!("pi_{}(P^{}(2^{})): skipped: {reason}", e.i, e.n, e.r))
            }
        })
        .collect()
}

fn torsion_of(fb: &FactBase, n: u32, r: u32, i: u32) -> Vec<u128> {
    let c = pi_moore(fb, n, r, i, &ParamAssignment::canonical()).expect("target resolves");
    assert_eq!(c.result.free_rank(), 0);
    c.result.torsion().to_vec()
}

/// Criterion: every Table 1–5 entry reproduces exactly at r ∈ {1,2,3,4,8}
/// within 60 seconds, including the contract's sample values.
#[test]
fn a_table_reproduction() {
    let fb = load();
    let started = Instant::now();
    let report = verify_tables(&fb, DEFAULT_R_SET, &[ParamAssignment::canonical()]);
    let elapsed = started.elapsed();
    let problems = failures_of(&report, "table");
    let count = report
        .entries
        .iter()
        .filter(|e| e.source.starts_with("table"))
        .count();

    // Sample spot values quoted in the contract.
    assert_eq!(torsion_of(&fb, 4, 1, 8), vec![2, 2, 2]);
    assert_eq!(torsion_of(&fb, 5, 2, 14), vec![2, 2, 2, 2, 2, 2, 2, 4, 4, 4]);
    assert_eq!(torsion_of(&fb, 6, 1, 10), vec![8]);
    // Closed-form family: (2)^3 + 2^min(r,2) + 2^min(r-1,3) + 2^min(r+1,4).
    // The printed formula holds for r >= 2; at r = 1 the curated value is
    // the order-audited correction, checked through the table sweep above.
    for r in [2u32, 3, 4, 8] {
        let mut want: Vec<u128> = vec![
            2,
            2,
            2,
            1 << r.min(2),
            1 << (r - 1).min(3),
            1 << (r + 1).min(4),
        ];
        want.sort();
        assert_eq!(torsion_of(&fb, 8, r, 21), want, "closed form at r={r}");
    }

    line(
        "a table-reproduction",
        problems.is_empty() && elapsed.as_secs() < 60,
        &format!(
            "{count} table entries, {} problem(s), {} ms",
            problems.len(),
            elapsed.as_millis()
        ),
    );
}

/// Criterion: the six externally cited families for bottom dimensions 9–11
/// reproduce exactly at the same exponent sample.
#[test]
fn b_higher_dimension_families() {
    let fb = load();
    let report = verify_tables(&fb, DEFAULT_R_SET, &[ParamAssignment::canonical()]);
    let problems = failures_of(&report, "theorem61");
    let targets: std::collections::BTreeSet<(u32, u32)> = fb
        .expected_entries()
        .iter()
        .filter(|e| e.source == "theorem61")
        .map(|e| (e.n, e.i))
        .collect();
    line(
        "b higher-dimension-families",
        problems.is_empty() && targets.len() == 6,
        &format!("{} families, {} problem(s)", targets.len(), problems.len()),
    );
}

/// Criterion: sweeping every symbolic-parameter assignment (a0 ∈ {1,3,5},
/// both signs, b, c ∈ {0,1}) changes no isomorphism type anywhere.
#[test]
fn c_parameter_insensitivity() {
    let fb = load();
    let sweep = param_sweep();
    let report = verify_tables(&fb, DEFAULT_R_SET, &sweep);
    let problems = failures_of(&report, "");
    line(
        "c parameter-insensitivity",
        problems.is_empty(),
        &format!(
            "{} assignments x {} entries, {} problem(s)",
            sweep.len(),
            report.entries.len(),
            problems.len()
        ),
    );
}

/// Criterion: every resolved target passes the five-term exactness audit at
/// both middle spots and the order identity |pi| = |Coker|·|Ker|.
#[test]
fn d_exactness_audit() {
    let fb = load();
    let p = ParamAssignment::canonical();
    let mut total = 0usize;
    let mut bad = Vec::new();
    for e in fb.expected_entries() {
        let cond = RCond::parse(&e.r_cond).expect("stored r-condition parses");
        for &r in DEFAULT_R_SET {
            if !cond.matches(r) {
                continue;
            }
            total += 1;
            let c = pi_moore(&fb, e.n, r, e.i, &p).expect("target resolves");
            if !(c.exact_ok && c.order_ok) {
                bad.push(format!("pi_{}(P^{}(2^{r}))", e.i, e.n));
            }
        }
    }
    line(
        "d exactness-audit",
        bad.is_empty() && total > 0,
        &format!("{total} targets audited, {} failure(s)", bad.len()),
    );
}

/// Criterion: on 1000 random matrices up to 6×6 with entries in [−99, 99],
/// the Smith decomposition satisfies A = U·S·V exactly, U and V are
/// unimodular, and the diagonal is a divisibility chain.
#[test]
fn e_snf_property_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_5eed);
    let identity = |k: usize| {
        let mut m = IntMatrix::zero(k, k);
        for i in 0..k {
            m.set(i, i, 1.into());
        }
        m
    };
    for case in 0..1000 {
        let rows = rng.gen_range(1..=6);
        let cols = rng.gen_range(1..=6);
        let data: Vec<Vec<i64>> = (0..rows)
            .map(|_| (0..cols).map(|_| rng.gen_range(-99..=99)).collect())
            .collect();
        let a = IntMatrix::from_rows(&data);
        let snf = smith_normal_form(&a);
        assert_eq!(snf.u().mul(snf.s()).mul(snf.v()), a, "A = U·S·V, case {case}");
        assert_eq!(
            snf.u().mul(snf.u_inv()),
            identity(rows),
            "U unimodular, case {case}"
        );
        assert_eq!(
            snf.v().mul(snf.v_inv()),
            identity(cols),
            "V unimodular, case {case}"
        );
        let diag = snf.diagonal();
        for w in diag.windows(2) {
            let (d0, d1) = (&w[0], &w[1]);
            use num_traits::Zero;
            if d0.is_zero() {
                assert!(d1.is_zero(), "zeros trail the chain, case {case}");
            } else {
                assert!((d1 % d0).is_zero(), "divisibility chain, case {case}");
            }
        }
    }
    line("e snf-property-suite", true, "1000 random matrices checked");
}

/// All finite 2-groups of order ≤ `max`, as lists of cyclic orders.
fn two_groups_up_to(max: u128) -> Vec<Vec<u128>> {
    let mut out = vec![vec![]];
    fn rec(prefix: &mut Vec<u128>, min: u128, budget: u128, out: &mut Vec<Vec<u128>>) {
        let mut d = min;
        while d <= budget {
            prefix.push(d);
            out.push(prefix.clone());
            rec(prefix, d, budget / d, out);
            prefix.pop();
            d *= 2;
        }
    }
    rec(&mut Vec::new(), 2, max, &mut out);
    out
}

fn group_of(orders: &[u128]) -> FgAbGroup {
    let named: Vec<(String, u128)> = orders
        .iter()
        .enumerate()
        .map(|(i, &d)| (format!("g{i}"), d))
        .collect();
    let refs: Vec<(&str, u128)> = named.iter().map(|(n, d)| (n.as_str(), *d)).collect();
    FgAbGroup::direct_sum_finite(&refs).expect("2-power orders")
}

/// Criterion: for every pair of finite 2-groups with |A|·|C| ≤ 64, the
/// constraint resolver with no constraints returns exactly the support of
/// the brute-force cocycle enumeration, and the class multiplicities sum to
/// |Ext¹(C, A)|.
#[test]
fn f_extension_oracle_equivalence() {
    let groups = two_groups_up_to(64);
    let mut pairs = 0usize;
    for a_orders in &groups {
        for c_orders in &groups {
            let a_size: u128 = a_orders.iter().product();
            let c_size: u128 = c_orders.iter().product();
            if a_size * c_size > 64 {
                continue;
            }
            pairs += 1;
            let a = group_of(a_orders);
            let c = group_of(c_orders);
            let enumerated = enumerate_extensions(&a, &c).expect("enumeration in bounds");
            let resolved = resolve_extension(&a, &c, &[]).expect("unconstrained resolution");
            let support: Vec<_> = enumerated.iter().map(|(t, _)| t.clone()).collect();
            assert_eq!(
                resolved.iso_types(),
                support,
                "support for A={a_orders:?}, C={c_orders:?}"
            );
            let classes: u128 = enumerated.iter().map(|(_, k)| k).sum();
            let ext_order = match ext1(&c, &a).order() {
                Order::Finite(v) => v,
                Order::Infinite => unreachable!("Ext of finite groups is finite"),
            };
            assert_eq!(
                classes, ext_order,
                "class count vs Ext order for A={a_orders:?}, C={c_orders:?}"
            );
        }
    }
    line(
        "f extension-oracle-equivalence",
        pairs > 0,
        &format!("{pairs} group pairs checked"),
    );
}

/// Criterion: in the free algebra on u, v over ℤ/2^r (r ≤ 5), every odd
/// multiple of the triple bracket [u,[u,[u,v]]] has 2^s·x not divisible by
/// 2^{s+1} for all s < r; and the two-cell commutator model puts (+1, −1)
/// on the mixed words across dimension pairs.
#[test]
fn g_hurewicz_divisibility() {
    let mut checks = 0usize;
    for r in 1u32..=5 {
        let alphabet = Alphabet::new(&[("u", 4), ("v", 10)]).with_degree_cap(24);
        let modulus = 1u128 << r;
        let u = TAElement::letter(&alphabet, "u", modulus).unwrap();
        let v = TAElement::letter(&alphabet, "v", modulus).unwrap();
        let bracket = left_normed_bracket(&u, &v, 3).unwrap();
        for l in [1i128, 3, 5] {
            let x = bracket.scale(l);
            for s in 0..r {
                assert!(
                    hurewicz_divisibility(&x, 1u128 << (s + 1)),
                    "r={r}, l={l}, s={s}"
                );
                checks += 1;
            }
        }
    }
    for (m, n) in [(2usize, 5usize), (3, 3), (4, 7), (6, 6), (5, 8)] {
        let c = samelson_h2_model(m, n);
        assert_eq!((c.x12, c.x21), (1, -1), "mixed words at ({m},{n})");
        checks += 1;
    }
    line(
        "g hurewicz-divisibility",
        true,
        &format!("{checks} divisibility/model checks"),
    );
}

/// Criterion: the bundled fact file validates with zero findings and no
/// word mentions an undeclared symbol.
#[test]
fn h_fact_base_gate() {
    let fb = load();
    let findings = fb.validate();
    // Independent dangling scan over every word the records mention.
    let tab = fb.symbol_table();
    let mut dangling = Vec::new();
    let mut scan = |word: &str| {
        for s in symbols_mentioned(word) {
            if !s.starts_with("iota_") && !tab.contains(&s) {
                dangling.push(s);
            }
        }
    };
    for rec in fb.file().sphere_groups.iter() {
        for s in &rec.summands {
            scan(&s.name);
            if let Some(d) = &s.desuspension {
                scan(d);
            }
        }
    }
    // Boundary images address fiber-stage generators by name (which may be
    // opaque secondary classes), so they are checked against the declared
    // generator names rather than the symbol table.
    let declared = fb.declared_generator_names();
    for f in fb.facts() {
        if let FactRecord::Boundary(b) = f {
            scan(&b.gen);
            for t in &b.result {
                if !declared.contains_key(&t.word) {
                    scan(&t.word);
                }
            }
        }
    }
    line(
        "h fact-base-gate",
        findings.is_empty() && dangling.is_empty(),
        &format!(
            "{} validation finding(s), {} dangling symbol(s)",
            findings.len(),
            dangling.len()
        ),
    );
}
