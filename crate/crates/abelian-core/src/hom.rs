//! Homomorphisms between 2-local finitely generated abelian groups, with
//! kernel / cokernel / image computed exactly through Smith normal form.

use crate::error::{AbelianError, Result};
use crate::group::{presentation_to_group, FgAbGroup, GroupElement, Order};
use crate::matrix::IntMatrix;
use crate::snf::{left_kernel_basis, row_lattice_contains};
use indexmap::IndexMap;
use num_bigint::BigInt;
use num_traits::Zero;

/// A homomorphism, stored as the images of the domain's canonical basis.
#[derive(Clone, Debug)]
pub struct Homomorphism {
    domain: FgAbGroup,
    codomain: FgAbGroup,
    /// matrix[i] = image of the i-th canonical basis element, reduced.
    matrix: Vec<GroupElement>,
}

impl Homomorphism {
    /// Builds a homomorphism from images of the canonical basis, verifying
    /// well-definedness: each torsion basis element of order d must map to
    /// an element killed by d.
    pub fn new(
        domain: FgAbGroup,
        codomain: FgAbGroup,
        images: Vec<GroupElement>,
    ) -> Result<Self> {
        assert_eq!(images.len(), domain.rank(), "one image per basis element");
        for (i, &d) in domain.torsion().iter().enumerate() {
            let killed = codomain.scale(d as i128, &images[i]);
            if !killed.is_zero() {
                return Err(AbelianError::NotWellDefined {
                    generator: format!("e{i}"),
                    order: d,
                });
            }
        }
        let matrix = images.iter().map(|x| codomain.reduce(x)).collect();
        Ok(Homomorphism {
            domain,
            codomain,
            matrix,
        })
    }

    /// The zero homomorphism.
    pub fn zero(domain: FgAbGroup, codomain: FgAbGroup) -> Self {
        let rank = domain.rank();
        let corank = codomain.rank();
        Homomorphism {
            domain,
            codomain,
            matrix: vec![GroupElement::zero(corank); rank],
        }
    }

    /// The identity on `g`.
    pub fn identity(g: &FgAbGroup) -> Self {
        let rank = g.rank();
        let matrix = (0..rank)
            .map(|i| {
                let mut coords = vec![BigInt::zero(); rank];
                coords[i] = BigInt::from(1);
                GroupElement { coords }
            })
            .collect();
        Homomorphism {
            domain: g.clone(),
            codomain: g.clone(),
            matrix,
        }
    }

    /// Builds a homomorphism from images of *named* generators of the
    /// domain. The named generators must together express every canonical
    /// basis element (true for groups built as direct sums).
    pub fn on_generators(
        domain: &FgAbGroup,
        codomain: &FgAbGroup,
        images: &[(&str, GroupElement)],
    ) -> Result<Self> {
        // Solve for basis images: each named generator g has canonical
        // coordinates; we need the basis images B with g·B = image(g) for
        // all named generators, and the named generators must span.
        let rank = domain.rank();
        let mut rows = Vec::with_capacity(images.len());
        let mut targets = Vec::with_capacity(images.len());
        for (name, img) in images {
            let gen = domain.generator(name)?;
            rows.push(gen.coords);
            targets.push(img.clone());
        }
        // For the groups this crate builds, named generators are unit
        // vectors up to permutation; solve coordinate-wise.
        let mut basis_images: Vec<Option<GroupElement>> = vec![None; rank];
        for (row, img) in rows.iter().zip(&targets) {
            let nonzero: Vec<usize> = (0..rank).filter(|&j| !row[j].is_zero()).collect();
            if nonzero.len() == 1 && row[nonzero[0]] == BigInt::from(1) {
                basis_images[nonzero[0]] = Some(img.clone());
            } else {
                return Err(AbelianError::Composability {
                    context: "generator images must be given on a unit-vector basis".into(),
                });
            }
        }
        let images: Vec<GroupElement> = basis_images
            .into_iter()
            .map(|x| x.unwrap_or_else(|| GroupElement::zero(codomain.rank())))
            .collect();
        Homomorphism::new(domain.clone(), codomain.clone(), images)
    }

    pub fn domain(&self) -> &FgAbGroup {
        &self.domain
    }

    pub fn codomain(&self) -> &FgAbGroup {
        &self.codomain
    }

    /// Applies the map to an element of the domain.
    pub fn apply(&self, x: &GroupElement) -> GroupElement {
        let x = self.domain.reduce(x);
        let mut acc = GroupElement::zero(self.codomain.rank());
        for (xi, img) in x.coords.iter().zip(&self.matrix) {
            if xi.is_zero() {
                continue;
            }
            let coords = acc
                .coords
                .iter()
                .zip(&img.coords)
                .map(|(a, b)| a + xi * b)
                .collect();
            acc = GroupElement { coords };
        }
        self.codomain.reduce(&acc)
    }

    /// Composition `other ∘ self` (apply `self` first).
    pub fn then(&self, other: &Homomorphism) -> Result<Homomorphism> {
        if self.codomain != other.domain {
            return Err(AbelianError::Composability {
                context: format!(
                    "cannot compose: codomain {} ≠ domain {}",
                    self.codomain, other.domain
                ),
            });
        }
        let images = self.matrix.iter().map(|x| other.apply(x)).collect();
        Homomorphism::new(self.domain.clone(), other.codomain.clone(), images)
    }

    pub fn is_zero_map(&self) -> bool {
        self.matrix.iter().all(GroupElement::is_zero)
    }

    /// The images of the canonical basis as an IntMatrix (rank × corank).
    fn image_matrix(&self) -> IntMatrix {
        IntMatrix::from_bigint_rows(
            self.matrix.iter().map(|e| e.coords.clone()).collect(),
            self.codomain.rank(),
        )
    }
}

/// Names used for automatically generated basis elements.
fn auto_names(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

/// Takes the first `a` coordinates of each lattice basis vector.
fn project_rows(basis: &[Vec<BigInt>], a: usize) -> Vec<Vec<BigInt>> {
    basis.iter().map(|row| row[..a].to_vec()).collect()
}

/// Kernel of `h` with its inclusion into the domain.
pub fn kernel(h: &Homomorphism) -> Result<(FgAbGroup, Homomorphism)> {
    let a = h.domain().rank();
    let hm = h.image_matrix();
    let rb = h.codomain().relation_matrix();
    // Generators of ker: x with x·H ≡ 0 modulo codomain relations.
    let stacked = hm.vstack(&rb);
    let gens_rows = project_rows(&left_kernel_basis(&stacked), a);
    let t = gens_rows.len();
    let x_matrix = IntMatrix::from_bigint_rows(gens_rows.clone(), a);
    // Relations among those generators: c with c·X ≡ 0 modulo domain
    // relations.
    let ra = h.domain().relation_matrix();
    let rel_rows = project_rows(&left_kernel_basis(&x_matrix.vstack(&ra)), t);
    let relations = IntMatrix::from_bigint_rows(rel_rows, t);
    let (k, pres) = presentation_to_group(&auto_names("ker", t), &relations)?;
    // Inclusion: canonical basis j of K ↦ (expression in xᵢ) · X.
    let images = pres
        .basis_in_gens
        .iter()
        .map(|expr| {
            let coords = x_matrix.row_vec_mul(expr);
            h.domain().reduce(&GroupElement { coords })
        })
        .collect();
    let incl = Homomorphism::new(k.clone(), h.domain().clone(), images)?;
    Ok((k, incl))
}

/// Cokernel of `h` with the projection from the codomain. Named generators
/// of the codomain keep their names in the quotient.
pub fn cokernel(h: &Homomorphism) -> Result<(FgAbGroup, Homomorphism)> {
    let b = h.codomain().rank();
    let relations = h.image_matrix().vstack(&h.codomain().relation_matrix());
    let (q, pres) = presentation_to_group(&auto_names("q", b), &relations)?;
    let proj = Homomorphism::new(
        h.codomain().clone(),
        q.clone(),
        pres.gen_images.clone(),
    )?;
    // Thread the codomain's generator names through the projection.
    let mut named = IndexMap::new();
    for name in h.codomain().generator_names() {
        let g = h.codomain().generator(name)?;
        named.insert(name.to_string(), proj.apply(&g));
    }
    let q = q.with_generators(named);
    let proj = Homomorphism {
        domain: proj.domain,
        codomain: q.clone(),
        matrix: proj.matrix,
    };
    Ok((q, proj))
}

/// Image of `h` with its inclusion into the codomain.
pub fn image(h: &Homomorphism) -> Result<(FgAbGroup, Homomorphism)> {
    let a = h.domain().rank();
    let hm = h.image_matrix();
    let rb = h.codomain().relation_matrix();
    // The image is generated by the basis images; relations are the
    // combinations landing in the codomain relations.
    let rel_rows = project_rows(&left_kernel_basis(&hm.vstack(&rb)), a);
    let relations = IntMatrix::from_bigint_rows(rel_rows, a);
    let (im, pres) = presentation_to_group(&auto_names("im", a), &relations)?;
    let images = pres
        .basis_in_gens
        .iter()
        .map(|expr| {
            let coords = hm.row_vec_mul(expr);
            h.codomain().reduce(&GroupElement { coords })
        })
        .collect();
    let incl = Homomorphism::new(im.clone(), h.codomain().clone(), images)?;
    Ok((im, incl))
}

/// True iff `im f = ker g` as subgroups of the middle group.
///
/// Verified in both directions: g∘f = 0 gives im f ⊆ ker g, and every
/// kernel generator must lie in the lattice spanned by im f together with
/// the middle group's relations.
pub fn is_exact(f: &Homomorphism, g: &Homomorphism) -> Result<bool> {
    if f.codomain() != g.domain() || f.codomain().rank() != g.domain().rank() {
        return Err(AbelianError::Composability {
            context: format!(
                "is_exact: middle groups differ ({} vs {})",
                f.codomain(),
                g.domain()
            ),
        });
    }
    if !f.then(g)?.is_zero_map() {
        return Ok(false);
    }
    let f_rows = f.image_matrix();
    let rb = f.codomain().relation_matrix();
    let lattice = f_rows.vstack(&rb);
    let (k, incl) = kernel(g)?;
    for j in 0..k.rank() {
        let mut coords = vec![BigInt::zero(); k.rank()];
        coords[j] = BigInt::from(1);
        let x = incl.apply(&GroupElement { coords });
        if !row_lattice_contains(&lattice, &x.coords) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Order bookkeeping helper: |domain| = |ker|·|im| for finite groups.
pub fn order_coherent(h: &Homomorphism) -> Result<bool> {
    let (k, _) = kernel(h)?;
    let (im, _) = image(h)?;
    match (h.domain().order(), k.order(), im.order()) {
        (Order::Finite(d), Order::Finite(kk), Order::Finite(ii)) => Ok(d == kk * ii),
        _ => Ok(true),
    }
}
