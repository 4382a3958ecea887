//! Ext groups and resolution of abelian extension problems
//! 0 → A → G → C → 0 under lifting constraints.

use crate::error::{AbelianError, Result};
use crate::group::{presentation_to_group, FgAbGroup, GroupElement, IsoType, Order};
use crate::hom::Homomorphism;
use crate::matrix::IntMatrix;
use indexmap::IndexMap;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

/// Default work bound for extension enumeration (number of cocycle classes).
pub const DEFAULT_EXTENSION_BOUND: u128 = 1 << 12;

/// A constraint on the middle group of an extension 0 → A → G → C → 0.
#[derive(Clone, Debug)]
pub enum ExtensionConstraint {
    /// Some preimage of the named quotient generator has order exactly 2^t.
    LiftOrder { quotient_gen: String, order: u128 },
    /// Some lift x of the named quotient generator c satisfies
    /// o(c)·x = (the given combination of subgroup generators).
    LiftTimesOrderEquals {
        quotient_gen: String,
        target: Vec<(i128, String)>,
    },
    /// The extension splits: G ≅ A ⊕ C.
    Splits,
    /// The extension does not split.
    DoesNotSplit,
    /// The cyclic subgroup generated by the named subgroup generator is a
    /// direct summand of G.
    SummandSplitsOff { subgroup_gen: String },
}

impl std::fmt::Display for ExtensionConstraint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExtensionConstraint::LiftOrder { quotient_gen, order } => {
                write!(f, "lift_order({quotient_gen}, {order})")
            }
            ExtensionConstraint::LiftTimesOrderEquals { quotient_gen, target } => {
                let t: Vec<String> = target
                    .iter()
                    .map(|(k, n)| format!("{k}·{n}"))
                    .collect();
                write!(f, "lift_relation({quotient_gen} -> {})", t.join(" + "))
            }
            ExtensionConstraint::Splits => write!(f, "splits"),
            ExtensionConstraint::DoesNotSplit => write!(f, "does_not_split"),
            ExtensionConstraint::SummandSplitsOff { subgroup_gen } => {
                write!(f, "summand_splits_off({subgroup_gen})")
            }
        }
    }
}

/// One admissible middle group, with provenance for its generators.
#[derive(Clone, Debug)]
pub struct ExtensionCandidate {
    pub group: FgAbGroup,
    /// Names inherited from the subgroup A.
    pub subgroup_gens: Vec<String>,
    /// Names of the lift generators, one per quotient generator of C.
    pub lift_gens: Vec<String>,
}

/// All middle-group candidates surviving the given constraints.
#[derive(Clone, Debug)]
pub struct ExtensionCandidateSet {
    pub candidates: Vec<ExtensionCandidate>,
}

impl ExtensionCandidateSet {
    pub fn iso_types(&self) -> Vec<IsoType> {
        let mut tys: Vec<IsoType> = self.candidates.iter().map(|c| c.group.iso_type()).collect();
        tys.sort();
        tys.dedup();
        tys
    }

    pub fn is_singleton(&self) -> bool {
        self.iso_types().len() == 1
    }
}

/// Ext¹(C, A) computed by bilinearity from
/// Ext¹(ℤ_{2^a}, ℤ_{2^b}) = ℤ_{2^min(a,b)}, Ext¹(ℤ, −) = 0,
/// Ext¹(ℤ_{2^a}, ℤ) = ℤ_{2^a}.
pub fn ext1(c: &FgAbGroup, a: &FgAbGroup) -> FgAbGroup {
    let mut orders: Vec<u128> = Vec::new();
    for &dc in c.torsion() {
        for &da in a.torsion() {
            orders.push(dc.min(da));
        }
        for _ in 0..a.free_rank() {
            orders.push(dc);
        }
    }
    orders.sort();
    let summands: Vec<(String, u128)> = orders
        .iter()
        .enumerate()
        .map(|(i, &d)| (format!("e{i}"), d))
        .collect();
    let refs: Vec<(&str, u128)> = summands.iter().map(|(n, d)| (n.as_str(), *d)).collect();
    FgAbGroup::direct_sum_finite(&refs).expect("2-power orders by construction")
}

/// The quotient-side data of an extension problem: the canonical torsion
/// generators of C with their orders.
fn quotient_generators(c: &FgAbGroup) -> Result<Vec<(String, u128)>> {
    if c.free_rank() > 0 {
        return Err(AbelianError::InfiniteGroup {
            free_rank: c.free_rank(),
        });
    }
    // Prefer named generators when they form a basis; otherwise fall back
    // to canonical coordinates.
    let names: Vec<String> = c.generator_names().map(str::to_string).collect();
    let mut by_slot: Vec<Option<String>> = vec![None; c.rank()];
    let mut basis_named = !names.is_empty();
    for name in &names {
        let g = c.generator(name)?;
        let nonzero: Vec<usize> = (0..c.rank())
            .filter(|&j| !g.coords[j].is_zero())
            .collect();
        if nonzero.len() == 1 && g.coords[nonzero[0]] == BigInt::from(1) {
            by_slot[nonzero[0]] = Some(name.clone());
        } else {
            basis_named = false;
        }
    }
    let mut out = Vec::with_capacity(c.rank());
    for (slot, &d) in c.torsion().iter().enumerate() {
        let name = if basis_named {
            by_slot[slot].clone()
        } else {
            None
        };
        out.push((name.unwrap_or_else(|| format!("c{slot}")), d));
    }
    Ok(out)
}

/// Builds the middle group of the extension determined by the lift
/// relations o(cᵢ)·xᵢ = aᵢ: presentation over A's canonical basis plus one
/// lift generator per quotient generator. Generator names of A survive, and
/// each lift is addressable as `lift.<quotient name>`.
pub fn extension_from_lift_relations(
    a: &FgAbGroup,
    c: &FgAbGroup,
    lift_targets: &[GroupElement],
) -> Result<FgAbGroup> {
    extension_maps_from_lift_relations(a, c, lift_targets).map(|(g, _, _)| g)
}

/// Like [`extension_from_lift_relations`], but also returns the structure
/// maps of the extension: the inclusion A → G and the projection G → C,
/// both computed from the presentation's change-of-basis data (so they are
/// exact by construction, independent of how SNF reshuffles the basis).
pub fn extension_maps_from_lift_relations(
    a: &FgAbGroup,
    c: &FgAbGroup,
    lift_targets: &[GroupElement],
) -> Result<(FgAbGroup, Homomorphism, Homomorphism)> {
    let qgens = quotient_generators(c)?;
    assert_eq!(lift_targets.len(), qgens.len(), "one target per quotient generator");
    let ar = a.rank();
    let total = ar + qgens.len();
    let mut names: Vec<String> = (0..ar).map(|i| format!("a{i}")).collect();
    for (name, _) in &qgens {
        names.push(format!("lift.{name}"));
    }
    // Relations: A's invariant factors, then o(cᵢ)·xᵢ − aᵢ = 0.
    let mut rel_rows: Vec<Vec<BigInt>> = Vec::new();
    for (i, &d) in a.torsion().iter().enumerate() {
        let mut row = vec![BigInt::zero(); total];
        row[i] = BigInt::from(d);
        rel_rows.push(row);
    }
    for (i, ((_, d), target)) in qgens.iter().zip(lift_targets).enumerate() {
        let target = a.reduce(target);
        let mut row = vec![BigInt::zero(); total];
        for j in 0..ar {
            row[j] = -target.coords[j].clone();
        }
        row[ar + i] = BigInt::from(*d);
        rel_rows.push(row);
    }
    let relations = IntMatrix::from_bigint_rows(rel_rows, total);
    let (g, pres) = presentation_to_group(&names, &relations)?;
    // Keep the canonical-basis names of A addressable, and additionally
    // re-key A's own generator names into the middle group.
    let mut named = IndexMap::new();
    for j in 0..ar {
        named.insert(format!("a{j}"), g.generator(&format!("a{j}"))?);
    }
    for aname in a.generator_names() {
        let elem = a.generator(aname)?;
        let mut acc = GroupElement::zero(g.rank());
        for (j, coef) in elem.coords.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            let img = g.generator(&format!("a{j}"))?;
            let scaled: Vec<BigInt> = img.coords.iter().map(|x| x * coef).collect();
            acc = g.add(&acc, &GroupElement { coords: scaled });
        }
        named.insert(aname.to_string(), acc);
    }
    for (name, _) in &qgens {
        let lift_name = format!("lift.{name}");
        let elem = g.generator(&lift_name)?;
        named.insert(lift_name, elem);
    }
    let g = g.with_generators(named);
    // Inclusion: A's canonical basis maps to the presentation generators
    // a₀, …, a_{ar−1} inside G.
    let incl = Homomorphism::new(
        a.clone(),
        g.clone(),
        pres.gen_images[..ar].to_vec(),
    )?;
    // Projection: each canonical basis element of G, expressed in the
    // presentation generators, keeps only its lift components, which map to
    // the corresponding quotient generators of C.
    let proj_images: Vec<GroupElement> = pres
        .basis_in_gens
        .iter()
        .map(|expr| {
            let coords: Vec<BigInt> = (0..c.rank()).map(|i| expr[ar + i].clone()).collect();
            c.reduce(&GroupElement { coords })
        })
        .collect();
    let proj = Homomorphism::new(g.clone(), c.clone(), proj_images)?;
    Ok((g, incl, proj))
}

/// Like [`extension_from_lift_relations`], but with targets keyed by the
/// quotient generator's name; unnamed generators get a zero target.
pub fn extension_with_named_lifts(
    a: &FgAbGroup,
    c: &FgAbGroup,
    rels: &[(&str, GroupElement)],
) -> Result<FgAbGroup> {
    extension_maps_with_named_lifts(a, c, rels).map(|(g, _, _)| g)
}

/// Like [`extension_with_named_lifts`], but also returns the inclusion
/// A → G and projection G → C structure maps.
pub fn extension_maps_with_named_lifts(
    a: &FgAbGroup,
    c: &FgAbGroup,
    rels: &[(&str, GroupElement)],
) -> Result<(FgAbGroup, Homomorphism, Homomorphism)> {
    let qgens = quotient_generators(c)?;
    let mut targets = vec![GroupElement::zero(a.rank()); qgens.len()];
    for (name, elem) in rels {
        let idx = qgens
            .iter()
            .position(|(n, _)| n == name)
            .ok_or_else(|| AbelianError::UnknownGenerator {
                name: name.to_string(),
                group: "quotient".to_string(),
            })?;
        targets[idx] = elem.clone();
    }
    extension_maps_from_lift_relations(a, c, &targets)
}

/// Enumerates all abelian extensions 0 → A → G → C → 0 by cocycle class.
///
/// Classes are parametrized by the value of a representative cocycle on the
/// quotient generators: for C = ⊕ ℤ_{mᵢ}, the class is the tuple
/// (aᵢ mod mᵢA), matching Ext¹(C, A) ≅ ⊕ A/mᵢA. Returns iso types with the
/// number of classes realizing each.
pub fn enumerate_extensions_bounded(
    a: &FgAbGroup,
    c: &FgAbGroup,
    bound: u128,
) -> Result<Vec<(IsoType, u128)>> {
    let class_tuples = extension_class_tuples(a, c, bound)?;
    let mut counts: IndexMap<IsoType, u128> = IndexMap::new();
    for targets in &class_tuples {
        let g = extension_from_lift_relations(a, c, targets)?;
        *counts.entry(g.iso_type()).or_insert(0) += 1;
    }
    let mut out: Vec<(IsoType, u128)> = counts.into_iter().collect();
    out.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(out)
}

/// Enumeration with the default bound.
pub fn enumerate_extensions(a: &FgAbGroup, c: &FgAbGroup) -> Result<Vec<(IsoType, u128)>> {
    enumerate_extensions_bounded(a, c, DEFAULT_EXTENSION_BOUND)
}

/// One representative target tuple per extension class.
fn extension_class_tuples(
    a: &FgAbGroup,
    c: &FgAbGroup,
    bound: u128,
) -> Result<Vec<Vec<GroupElement>>> {
    if a.free_rank() > 0 {
        return Err(AbelianError::InfiniteGroup {
            free_rank: a.free_rank(),
        });
    }
    let qgens = quotient_generators(c)?;
    let a_elems = a.elements()?;
    // Coset representatives of mᵢ·A in A, computed per distinct mᵢ.
    let mut reps_for: IndexMap<u128, Vec<GroupElement>> = IndexMap::new();
    for (_, m) in &qgens {
        let m = *m;
        if reps_for.contains_key(&m) {
            continue;
        }
        let subgroup: Vec<GroupElement> = {
            let mut seen: Vec<GroupElement> = Vec::new();
            for e in &a_elems {
                let s = a.scale(m as i128, e);
                if !seen.contains(&s) {
                    seen.push(s);
                }
            }
            seen
        };
        let mut reps: Vec<GroupElement> = Vec::new();
        let mut covered: Vec<GroupElement> = Vec::new();
        for e in &a_elems {
            if covered.contains(e) {
                continue;
            }
            reps.push(e.clone());
            for s in &subgroup {
                covered.push(a.add(e, s));
            }
        }
        reps_for.insert(m, reps);
    }
    // Bound check on the total number of classes.
    let mut total: u128 = 1;
    for (_, m) in &qgens {
        total = total.saturating_mul(reps_for[m].len() as u128);
        if total > bound {
            return Err(AbelianError::BoundExceeded { size: total, bound });
        }
    }
    // Cartesian product of representative choices.
    let mut tuples: Vec<Vec<GroupElement>> = vec![Vec::new()];
    for (_, m) in &qgens {
        let mut next = Vec::with_capacity(tuples.len() * reps_for[m].len());
        for t in &tuples {
            for rep in &reps_for[m] {
                let mut t2 = t.clone();
                t2.push(rep.clone());
                next.push(t2);
            }
        }
        tuples = next;
    }
    Ok(tuples)
}

/// Resolves an extension problem: filters the full cocycle-class enumeration
/// by the given constraints and returns the surviving iso types with
/// generator provenance.
pub fn resolve_extension(
    a: &FgAbGroup,
    c: &FgAbGroup,
    constraints: &[ExtensionConstraint],
) -> Result<ExtensionCandidateSet> {
    let qgens = quotient_generators(c)?;
    let class_tuples = extension_class_tuples(a, c, DEFAULT_EXTENSION_BOUND)?;
    let split_type = split_iso_type(a, c);

    let mut survivors: Vec<ExtensionCandidate> = Vec::new();
    let mut alive = class_tuples.len();
    let mut killer: Option<&ExtensionConstraint> = None;
    for targets in &class_tuples {
        let g = extension_from_lift_relations(a, c, targets)?;
        let mut ok = true;
        for con in constraints {
            if !check_constraint(a, c, &qgens, targets, &g, con, &split_type)? {
                ok = false;
                alive -= 1;
                if alive == 0 {
                    killer = Some(con);
                }
                break;
            }
        }
        if ok {
            survivors.push(ExtensionCandidate {
                group: g,
                subgroup_gens: a.generator_names().map(str::to_string).collect(),
                lift_gens: qgens.iter().map(|(n, _)| format!("lift.{n}")).collect(),
            });
        }
    }
    if survivors.is_empty() {
        let constraint = killer
            .map(|c| c.to_string())
            .unwrap_or_else(|| "(empty enumeration)".to_string());
        return Err(AbelianError::Contradiction { constraint });
    }
    // Deduplicate by iso type, keeping the first representative.
    let mut seen: Vec<IsoType> = Vec::new();
    let mut dedup = Vec::new();
    for cand in survivors {
        let ty = cand.group.iso_type();
        if !seen.contains(&ty) {
            seen.push(ty);
            dedup.push(cand);
        }
    }
    dedup.sort_by(|x, y| x.group.iso_type().cmp(&y.group.iso_type()));
    Ok(ExtensionCandidateSet { candidates: dedup })
}

fn split_iso_type(a: &FgAbGroup, c: &FgAbGroup) -> IsoType {
    let mut torsion: Vec<u128> = a.torsion().iter().chain(c.torsion()).copied().collect();
    torsion.sort();
    // Not yet an invariant-factor chain; normalize through a presentation.
    let summands: Vec<(String, u128)> = torsion
        .iter()
        .enumerate()
        .map(|(i, &d)| (format!("s{i}"), d))
        .collect();
    let refs: Vec<(&str, u128)> = summands.iter().map(|(n, d)| (n.as_str(), *d)).collect();
    let g = FgAbGroup::direct_sum_finite(&refs).expect("2-power orders");
    IsoType {
        free_rank: a.free_rank() + c.free_rank(),
        torsion: g.torsion().to_vec(),
    }
}

/// Evaluates one constraint against a concrete extension.
fn check_constraint(
    a: &FgAbGroup,
    _c: &FgAbGroup,
    qgens: &[(String, u128)],
    targets: &[GroupElement],
    g: &FgAbGroup,
    con: &ExtensionConstraint,
    split_type: &IsoType,
) -> Result<bool> {
    match con {
        ExtensionConstraint::Splits => Ok(&g.iso_type() == split_type),
        ExtensionConstraint::DoesNotSplit => Ok(&g.iso_type() != split_type),
        ExtensionConstraint::LiftOrder { quotient_gen, order } => {
            for_each_preimage(a, qgens, targets, g, quotient_gen, |x| {
                g.element_order(x) == Order::Finite(*order)
            })
        }
        ExtensionConstraint::LiftTimesOrderEquals {
            quotient_gen,
            target,
        } => {
            let (_, d) = qgens
                .iter()
                .find(|(n, _)| n == quotient_gen)
                .ok_or_else(|| AbelianError::UnknownGenerator {
                    name: quotient_gen.clone(),
                    group: "quotient".to_string(),
                })?;
            let d = *d;
            // Express the target via A's names pushed into G.
            let mut want = GroupElement::zero(g.rank());
            for (k, name) in target {
                let img = g.generator(name)?;
                want = g.add(&want, &g.scale(*k, &img));
            }
            for_each_preimage(a, qgens, targets, g, quotient_gen, |x| {
                let dx = g.scale(d as i128, x);
                dx == want
            })
        }
        ExtensionConstraint::SummandSplitsOff { subgroup_gen } => {
            let elem = g.generator(subgroup_gen)?;
            is_pure_cyclic_summand(g, &elem)
        }
    }
}

/// Applies `pred` over all preimages of the named quotient generator; true
/// if any preimage satisfies it. Preimages are lift + i(a) over all a ∈ A.
fn for_each_preimage(
    a: &FgAbGroup,
    qgens: &[(String, u128)],
    _targets: &[GroupElement],
    g: &FgAbGroup,
    quotient_gen: &str,
    pred: impl Fn(&GroupElement) -> bool,
) -> Result<bool> {
    if !qgens.iter().any(|(n, _)| n == quotient_gen) {
        return Err(AbelianError::UnknownGenerator {
            name: quotient_gen.to_string(),
            group: "quotient".to_string(),
        });
    }
    let lift = g.generator(&format!("lift.{quotient_gen}"))?;
    for e in a.elements()? {
        // Push e into G through the subgroup's canonical-basis names.
        let mut img = GroupElement::zero(g.rank());
        for (j, coef) in e.coords.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            let basis = g.generator(&format!("a{j}")).or_else(|_| {
                // Canonical-basis names are replaced by A's own names after
                // construction; recover through A's generator table.
                recover_basis_image(a, g, j)
            })?;
            let scaled: Vec<BigInt> = basis.coords.iter().map(|x| x * coef).collect();
            img = g.add(&img, &GroupElement { coords: scaled });
        }
        let x = g.add(&lift, &img);
        if pred(&x) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Recovers the image of A's j-th canonical basis element inside G using
/// A's named generators (which are unit vectors for direct-sum groups).
fn recover_basis_image(a: &FgAbGroup, g: &FgAbGroup, j: usize) -> Result<GroupElement> {
    for name in a.generator_names() {
        let gen = a.generator(name)?;
        let nonzero: Vec<usize> = (0..a.rank())
            .filter(|&i| !gen.coords[i].is_zero())
            .collect();
        if nonzero == [j] && gen.coords[j] == BigInt::from(1) {
            return g.generator(name);
        }
    }
    Err(AbelianError::UnknownGenerator {
        name: format!("a{j}"),
        group: "extension middle group".to_string(),
    })
}

/// True iff ⟨x⟩ is a direct summand of the finite 2-group `g`, tested via
/// purity: ⟨x⟩ ∩ 2^k·G = 2^k·⟨x⟩ for all k (pure bounded subgroups are
/// summands).
pub fn is_pure_cyclic_summand(g: &FgAbGroup, x: &GroupElement) -> Result<bool> {
    let ord = match g.element_order(x) {
        Order::Finite(n) => n,
        Order::Infinite => {
            return Err(AbelianError::InfiniteGroup {
                free_rank: g.free_rank(),
            })
        }
    };
    if ord == 1 {
        return Ok(true);
    }
    let max_d = g.torsion().iter().copied().max().unwrap_or(1);
    let mut pow: u128 = 2;
    while pow <= max_d {
        // |2^k⟨x⟩| = ord / gcd(2^k, ord)
        let expected = ord / pow.gcd(&ord);
        // |⟨x⟩ ∩ 2^kG|: count multiples m·x divisible by 2^k in G.
        let mut count: u128 = 0;
        for m in 0..ord {
            let mx = g.scale(m as i128, x);
            if divisible_by(g, &mx, pow) {
                count += 1;
            }
        }
        if count != expected {
            return Ok(false);
        }
        pow *= 2;
    }
    Ok(true)
}

/// True iff ∃y with n·y = x in g (n a power of 2), checked coordinatewise.
fn divisible_by(g: &FgAbGroup, x: &GroupElement, n: u128) -> bool {
    let x = g.reduce(x);
    for (i, &d) in g.torsion().iter().enumerate() {
        // n·y ≡ xᵢ (mod d) solvable iff gcd(n, d) | xᵢ.
        let gcd = n.gcd(&d);
        let xi = x.coords[i].to_u128().expect("reduced coordinate fits");
        if xi % gcd != 0 {
            return false;
        }
    }
    for i in g.torsion().len()..g.rank() {
        let xi = &x.coords[i];
        if !(xi % BigInt::from(n)).is_zero() {
            return false;
        }
    }
    true
}
