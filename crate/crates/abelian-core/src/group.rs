//! Finitely generated abelian groups localized at 2.
//!
//! A group is stored in canonical form: an ascending divisibility chain of
//! 2-power invariant factors followed by a free rank (ℤ localized at 2).
//! Named generators are kept addressable through every construction via a
//! change-of-basis record, so that elements like `beta_5 . nu_5 sigma_8` keep
//! their identity through quotients and extensions.

use crate::error::{AbelianError, Result};
use crate::matrix::IntMatrix;
use crate::snf::smith_normal_form;
use indexmap::IndexMap;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use std::fmt;

/// Order of a group or element: a positive integer or infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Order {
    Finite(u128),
    Infinite,
}

impl Order {
    pub fn finite(self) -> Option<u128> {
        match self {
            Order::Finite(n) => Some(n),
            Order::Infinite => None,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinite => write!(f, "infinite"),
        }
    }
}

/// Isomorphism type of a 2-local finitely generated abelian group:
/// free rank plus the multiset of 2-power invariant factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IsoType {
    pub free_rank: usize,
    pub torsion: Vec<u128>,
}

impl IsoType {
    /// Table-style label: summands ascending, repeated factors grouped, e.g.
    /// `(2)^3 + 8`, free summands rendered `Z(2)`.
    pub fn label(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.torsion.len() {
            let d = self.torsion[i];
            let mut j = i;
            while j < self.torsion.len() && self.torsion[j] == d {
                j += 1;
            }
            let count = j - i;
            if count == 1 {
                parts.push(format!("{d}"));
            } else {
                parts.push(format!("({d})^{count}"));
            }
            i = j;
        }
        match self.free_rank {
            0 => {}
            1 => parts.push("Z(2)".to_string()),
            k => parts.push(format!("Z(2)^{k}")),
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Display for IsoType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// An element given by integer coordinates in a group's canonical basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    pub coords: Vec<BigInt>,
}

impl GroupElement {
    pub fn from_i64(coords: &[i64]) -> Self {
        GroupElement {
            coords: coords.iter().map(|&x| BigInt::from(x)).collect(),
        }
    }

    pub fn zero(rank: usize) -> Self {
        GroupElement {
            coords: vec![BigInt::zero(); rank],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

/// A finitely generated abelian group, 2-local, in canonical form.
///
/// Canonical basis: first `torsion.len()` coordinates are cyclic of the
/// listed orders (ascending divisibility chain), the remaining `free_rank`
/// coordinates are free.
#[derive(Clone, Debug)]
pub struct FgAbGroup {
    torsion: Vec<u128>,
    free_rank: usize,
    generators: IndexMap<String, GroupElement>,
}

impl FgAbGroup {
    /// The trivial group.
    pub fn trivial() -> Self {
        FgAbGroup {
            torsion: Vec::new(),
            free_rank: 0,
            generators: IndexMap::new(),
        }
    }

    /// Direct sum of named cyclic groups. Each order must be a power of 2
    /// (≥ 2) or infinite; an order of 1 contributes a zero generator.
    pub fn direct_sum(summands: &[(&str, Order)]) -> Result<Self> {
        // Stable sort torsion ascending so the invariant-factor chain holds.
        let mut torsion_parts: Vec<(usize, u128)> = Vec::new();
        let mut free_parts: Vec<usize> = Vec::new();
        let mut trivial_parts: Vec<usize> = Vec::new();
        for (idx, (_, order)) in summands.iter().enumerate() {
            match order {
                Order::Infinite => free_parts.push(idx),
                Order::Finite(1) => trivial_parts.push(idx),
                Order::Finite(n) => {
                    if !n.is_power_of_two() {
                        return Err(AbelianError::OddTorsion {
                            factor: n.to_string(),
                        });
                    }
                    torsion_parts.push((idx, *n));
                }
            }
        }
        torsion_parts.sort_by_key(|&(idx, n)| (n, idx));
        let torsion: Vec<u128> = torsion_parts.iter().map(|&(_, n)| n).collect();
        let rank = torsion.len() + free_parts.len();
        let mut generators = IndexMap::new();
        for (slot, &(idx, _)) in torsion_parts.iter().enumerate() {
            let mut coords = vec![BigInt::zero(); rank];
            coords[slot] = BigInt::one();
            generators.insert(summands[idx].0.to_string(), GroupElement { coords });
        }
        for (slot, &idx) in free_parts.iter().enumerate() {
            let mut coords = vec![BigInt::zero(); rank];
            coords[torsion.len() + slot] = BigInt::one();
            generators.insert(summands[idx].0.to_string(), GroupElement { coords });
        }
        for &idx in &trivial_parts {
            generators.insert(summands[idx].0.to_string(), GroupElement::zero(rank));
        }
        Ok(FgAbGroup {
            torsion,
            free_rank: free_parts.len(),
            generators,
        })
    }

    /// Direct sum of finite cyclic groups given as (name, order) pairs.
    pub fn direct_sum_finite(summands: &[(&str, u128)]) -> Result<Self> {
        let with_orders: Vec<(&str, Order)> = summands
            .iter()
            .map(|&(n, o)| (n, Order::Finite(o)))
            .collect();
        FgAbGroup::direct_sum(&with_orders)
    }

    pub fn torsion(&self) -> &[u128] {
        &self.torsion
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    /// Number of canonical coordinates.
    pub fn rank(&self) -> usize {
        self.torsion.len() + self.free_rank
    }

    pub fn iso_type(&self) -> IsoType {
        IsoType {
            free_rank: self.free_rank,
            torsion: self.torsion.clone(),
        }
    }

    pub fn order(&self) -> Order {
        if self.free_rank > 0 {
            Order::Infinite
        } else {
            Order::Finite(self.torsion.iter().product())
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.torsion.is_empty() && self.free_rank == 0
    }

    /// Named generators in insertion order.
    pub fn generator_names(&self) -> impl Iterator<Item = &str> {
        self.generators.keys().map(String::as_str)
    }

    /// Looks up a named generator.
    pub fn generator(&self, name: &str) -> Result<GroupElement> {
        self.generators
            .get(name)
            .cloned()
            .ok_or_else(|| AbelianError::UnknownGenerator {
                name: name.to_string(),
                group: self.iso_type().label(),
            })
    }

    pub fn has_generator(&self, name: &str) -> bool {
        self.generators.contains_key(name)
    }

    /// Replaces the named-generator table (used when threading names through
    /// quotients and extensions).
    pub fn with_generators(mut self, generators: IndexMap<String, GroupElement>) -> Self {
        self.generators = generators;
        self
    }

    pub fn insert_generator(&mut self, name: &str, elem: GroupElement) {
        self.generators.insert(name.to_string(), elem);
    }

    /// Reduces coordinates into canonical range: torsion coordinates into
    /// [0, dᵢ), free coordinates untouched.
    pub fn reduce(&self, elem: &GroupElement) -> GroupElement {
        assert_eq!(elem.coords.len(), self.rank(), "coordinate rank mismatch");
        let mut coords = elem.coords.clone();
        for (i, &d) in self.torsion.iter().enumerate() {
            let m = BigInt::from(d);
            coords[i] = coords[i].mod_floor(&m);
        }
        GroupElement { coords }
    }

    /// Sum of two elements, reduced.
    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let coords = a
            .coords
            .iter()
            .zip(&b.coords)
            .map(|(x, y)| x + y)
            .collect();
        self.reduce(&GroupElement { coords })
    }

    /// Integer multiple of an element, reduced.
    pub fn scale(&self, k: i128, a: &GroupElement) -> GroupElement {
        let k = BigInt::from(k);
        let coords = a.coords.iter().map(|x| x * &k).collect();
        self.reduce(&GroupElement { coords })
    }

    /// Linear combination of named generators.
    pub fn combination(&self, terms: &[(i128, &str)]) -> Result<GroupElement> {
        let mut acc = GroupElement::zero(self.rank());
        for &(coef, name) in terms {
            let g = self.generator(name)?;
            acc = self.add(&acc, &self.scale(coef, &g));
        }
        Ok(acc)
    }

    /// Least n ≥ 1 with n·x = 0, or infinite. Always a power of 2 for valid
    /// 2-local input.
    pub fn element_order(&self, x: &GroupElement) -> Order {
        let x = self.reduce(x);
        for i in self.torsion.len()..self.rank() {
            if !x.coords[i].is_zero() {
                return Order::Infinite;
            }
        }
        let mut ord: u128 = 1;
        for (i, &d) in self.torsion.iter().enumerate() {
            let c = &x.coords[i];
            if c.is_zero() {
                continue;
            }
            let d_big = BigInt::from(d);
            let g = c.gcd(&d_big);
            let comp = (&d_big / g)
                .to_u128()
                .expect("invariant factor fits in u128");
            ord = ord.lcm(&comp);
        }
        Order::Finite(ord)
    }

    /// All elements of a finite group, in lexicographic coordinate order.
    pub fn elements(&self) -> Result<Vec<GroupElement>> {
        if self.free_rank > 0 {
            return Err(AbelianError::InfiniteGroup {
                free_rank: self.free_rank,
            });
        }
        let mut out = vec![GroupElement::zero(self.rank())];
        for (i, &d) in self.torsion.iter().enumerate() {
            let mut next = Vec::with_capacity(out.len() * d as usize);
            for e in &out {
                for v in 0..d {
                    let mut coords = e.coords.clone();
                    coords[i] = BigInt::from(v);
                    next.push(GroupElement { coords });
                }
            }
            out = next;
        }
        Ok(out)
    }

    /// Presentation matrix of this group: relations dᵢ·eᵢ = 0 over the
    /// canonical basis (free coordinates contribute no relation).
    pub fn relation_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zero(self.torsion.len(), self.rank());
        for (i, &d) in self.torsion.iter().enumerate() {
            m.set(i, i, BigInt::from(d));
        }
        m
    }
}

impl PartialEq for FgAbGroup {
    fn eq(&self, other: &Self) -> bool {
        self.torsion == other.torsion && self.free_rank == other.free_rank
    }
}
impl Eq for FgAbGroup {}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.iso_type().label())
    }
}

/// Change-of-basis data produced alongside a presented group.
pub struct PresentationData {
    /// Per presentation generator: its coordinates in the canonical basis.
    pub gen_images: Vec<GroupElement>,
    /// Per canonical basis element: its expression in presentation
    /// generators.
    pub basis_in_gens: Vec<Vec<BigInt>>,
}

/// Internal form of `group_from_presentation` that also returns the
/// change-of-basis data needed by the homomorphism calculus.
pub fn presentation_to_group(
    names: &[String],
    relations: &IntMatrix,
) -> Result<(FgAbGroup, PresentationData)> {
    let g = names.len();
    assert_eq!(relations.cols(), g, "relation matrix columns ≠ generators");
    let snf = smith_normal_form(relations);
    let min = relations.rows().min(g);

    // Classify the canonical coordinates of ℤ^g / rows(S): order 1 entries
    // vanish, nonzero entries give torsion, zero diagonal and surplus
    // columns give free summands.
    let diag = |j: usize| -> BigInt {
        if j < min {
            snf.s().get(j, j).clone()
        } else {
            BigInt::zero()
        }
    };
    let mut torsion_cols: Vec<(usize, u128)> = Vec::new();
    let mut free_cols: Vec<usize> = Vec::new();
    for j in 0..g {
        let d = diag(j);
        if d.is_zero() {
            free_cols.push(j);
        } else if d.is_one() {
            // trivial coordinate, dropped
        } else {
            let d_u = d.to_u128().ok_or_else(|| AbelianError::OddTorsion {
                factor: d.to_string(),
            })?;
            if !d_u.is_power_of_two() {
                return Err(AbelianError::OddTorsion {
                    factor: d_u.to_string(),
                });
            }
            torsion_cols.push((j, d_u));
        }
    }
    // SNF chain is ascending, so torsion_cols is already in chain order.
    let torsion: Vec<u128> = torsion_cols.iter().map(|&(_, d)| d).collect();
    let free_rank = free_cols.len();
    let kept: Vec<usize> = torsion_cols
        .iter()
        .map(|&(j, _)| j)
        .chain(free_cols.iter().copied())
        .collect();

    let group = FgAbGroup {
        torsion,
        free_rank,
        generators: IndexMap::new(),
    };

    // eᵢ has canonical coordinates = row i of V⁻¹ restricted to kept
    // columns; canonical basis element j is row j of V over the
    // presentation generators.
    let mut gen_images = Vec::with_capacity(g);
    for i in 0..g {
        let coords: Vec<BigInt> = kept.iter().map(|&j| snf.v_inv().get(i, j).clone()).collect();
        gen_images.push(group.reduce(&GroupElement { coords }));
    }
    let mut basis_in_gens = Vec::with_capacity(kept.len());
    for &j in &kept {
        basis_in_gens.push(snf.v().row(j));
    }

    let mut generators = IndexMap::new();
    for (name, img) in names.iter().zip(&gen_images) {
        generators.insert(name.clone(), img.clone());
    }
    let group = group.with_generators(generators);
    Ok((
        group,
        PresentationData {
            gen_images,
            basis_in_gens,
        },
    ))
}

/// Builds the canonical group presented by the given generators and
/// relations (rows of `relations` are relations, columns are indexed by
/// `generator_names`). Rejects presentations with odd torsion.
pub fn group_from_presentation(
    generator_names: &[String],
    relations: &IntMatrix,
) -> Result<FgAbGroup> {
    presentation_to_group(generator_names, relations).map(|(g, _)| g)
}
