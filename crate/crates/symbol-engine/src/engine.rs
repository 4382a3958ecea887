//! The rewrite engine: composition, degree-map expansion, suspension,
//! Whitehead products, James–Hopf invariants, Hilton-range decompositions,
//! Toda brackets, and normalization into declared groups.
//!
//! Legality discipline: post-composition is additive for any map, but a
//! sum (or scalar) may only be pushed through a pre-composition when the
//! pre-composed map is a suspension. The engine never applies the illegal
//! left distribution.

use crate::elem::{Factor, FormalElement, GenSymbol, Word};
use crate::facts::{BracketFact, FactSource, SpaceId};
use abelian_core::{AbelianError, FgAbGroup, GroupElement};
use thiserror::Error;

/// Errors raised by the symbolic calculus.
#[derive(Debug, Error)]
pub enum SymbolError {
    #[error("dimension mismatch: {context}")]
    DimensionMismatch { context: String },

    #[error("missing fact: cannot resolve '{word}'")]
    MissingFact { word: String },

    #[error("not composable: {context}")]
    NotComposable { context: String },

    #[error("illegal distribution: {context}")]
    IllegalDistribution { context: String },

    #[error("decomposition range exceeded: first omitted basic product {omitted}")]
    RangeExceeded { omitted: String },

    #[error("rewrite limit reached while normalizing '{word}'")]
    RewriteLimit { word: String },

    #[error(transparent)]
    Group(#[from] AbelianError),
}

pub type Result<T> = std::result::Result<T, SymbolError>;

/// Composition x ∘ y.
///
/// Distributes over sums in `y` unconditionally (post-composition by the
/// words of `x` is a homomorphism) and over sums/scalars in `x` only when
/// the relevant word of `y` is a suspension.
pub fn compose(x: &FormalElement, y: &FormalElement) -> Result<FormalElement> {
    if x.is_zero() || y.is_zero() {
        return Ok(FormalElement::zero());
    }
    let mut out = Vec::new();
    for (b, v) in &y.terms {
        let distributable = v.is_suspension() || (x.terms.len() == 1 && x.terms[0].0.abs() == 1);
        if !distributable {
            return Err(SymbolError::IllegalDistribution {
                context: format!(
                    "cannot distribute ({x}) over non-suspension '{}'",
                    v.key()
                ),
            });
        }
        for (a, u) in &x.terms {
            if u.source_dim() != v.target_dim() {
                return Err(SymbolError::DimensionMismatch {
                    context: format!(
                        "compose: '{}' expects S^{:?}, got '{}' into S^{:?}",
                        u.key(),
                        u.source_dim(),
                        v.key(),
                        v.target_dim()
                    ),
                });
            }
            let mut factors = u.factors.clone();
            factors.extend(v.factors.iter().cloned());
            out.push((a * b, Word::new(factors)));
        }
    }
    Ok(FormalElement::from_terms(out))
}

/// Expansion of (t·ι_n) ∘ w for a single word `w` landing on S^n.
fn expand_degree_word(
    t: i64,
    n: u32,
    w: &Word,
    facts: &dyn FactSource,
) -> Result<FormalElement> {
    if t == 0 {
        return Ok(FormalElement::zero());
    }
    if t == 1 {
        return Ok(FormalElement::from_word(w.clone()));
    }
    if t == -1 {
        return Ok(FormalElement::from_word(w.clone()).scale(-1));
    }
    if w.is_suspension() {
        // (t·ι)∘Σα = t·Σα: the sum of identities distributes over
        // pre-composition by a suspension.
        return Ok(FormalElement::from_word(w.clone()).scale(t));
    }
    if let Some(rhs) = facts.degree(t, &w.key()) {
        return Ok(rhs);
    }
    // Degree expansion: (t·ι)∘α = t·α + C(t,2)·[ι_n,ι_n]∘H₂(α).
    let c2 = t * (t - 1) / 2;
    let correction_dies = n == 3 || n == 7 || (n % 2 == 1 && c2 % 2 == 0) || c2 == 0;
    let linear = FormalElement::from_word(w.clone()).scale(t);
    if correction_dies {
        return Ok(linear);
    }
    let h2 = hopf_h2(&FormalElement::from_word(w.clone()), facts)?;
    if h2.is_zero() {
        return Ok(linear);
    }
    let bracket = Factor::Whitehead {
        left: Box::new(Word::single(Factor::Iota { dim: n })),
        right: Box::new(Word::single(Factor::Iota { dim: n })),
        source_dim: 2 * n - 1,
        target_dim: n,
    };
    let bracket_elem = match facts.whitehead_expansion(&bracket.key()) {
        Some(e) => e,
        None => FormalElement::from_word(Word::single(bracket)),
    };
    let correction = compose(&bracket_elem, &h2)?.scale(c2);
    Ok(linear.add(&correction))
}

/// (t·ι_n) ∘ alpha, with the Whitehead-correction expansion. `alpha` must
/// land on a single sphere S^n.
pub fn degree_precompose(
    t: i64,
    alpha: &FormalElement,
    facts: &dyn FactSource,
) -> Result<FormalElement> {
    if alpha.is_zero() {
        return Ok(FormalElement::zero());
    }
    let n = alpha.terms[0]
        .1
        .target_dim()
        .ok_or_else(|| SymbolError::NotComposable {
            context: "degree map needs a target sphere".to_string(),
        })?;
    // Post-composition by the degree map is a homomorphism: distribute.
    let mut out = FormalElement::zero();
    for (c, w) in &alpha.terms {
        if w.target_dim() != Some(n) {
            return Err(SymbolError::DimensionMismatch {
                context: format!("degree map on S^{n} applied to '{}'", w.key()),
            });
        }
        out = out.add(&expand_degree_word(t, n, w, facts)?.scale(*c));
    }
    Ok(out)
}

/// Suspension Σ^times. Whitehead-bracket words suspend to zero; generators
/// suspend through facts.
pub fn suspend(
    x: &FormalElement,
    times: u32,
    facts: &dyn FactSource,
) -> Result<FormalElement> {
    let mut cur = x.clone();
    for _ in 0..times {
        let mut next = Vec::new();
        for (c, w) in &cur.terms {
            if w.contains_whitehead() {
                continue; // Σ[f₁,…] = 0
            }
            let mut factors = Vec::with_capacity(w.factors.len());
            let mut dead = false;
            for f in &w.factors {
                match f {
                    Factor::Iota { dim } => factors.push(Factor::Iota { dim: dim + 1 }),
                    Factor::Degree { dim, t } => {
                        factors.push(Factor::Degree { dim: dim + 1, t: *t })
                    }
                    Factor::Gen(g) => match facts.suspension(&g.name) {
                        Some(sf) => factors.push(sf),
                        None => {
                            return Err(SymbolError::MissingFact {
                                word: format!("suspension of {}", g.name),
                            })
                        }
                    },
                    Factor::Whitehead { .. } => {
                        dead = true;
                        break;
                    }
                }
            }
            if !dead {
                next.push((*c, Word::new(factors)));
            }
        }
        cur = FormalElement::from_terms(next);
    }
    Ok(cur)
}

/// Whitehead product [f, g], bilinear, with the identity-class
/// simplifications [ι_k, ι_k] = 0 for k = 3, 7 and 2[ι_k, ι_k] = 0 for
/// odd k.
pub fn whitehead(f: &FormalElement, g: &FormalElement) -> Result<FormalElement> {
    if f.is_zero() || g.is_zero() {
        return Ok(FormalElement::zero());
    }
    let mut out = Vec::new();
    for (a, u) in &f.terms {
        for (b, v) in &g.terms {
            let (su, tu) = (u.source_dim(), u.target_dim());
            let (sv, _tv) = (v.source_dim(), v.target_dim());
            let (su, sv) = match (su, sv) {
                (Some(x), Some(y)) => (x, y),
                _ => {
                    return Err(SymbolError::NotComposable {
                        context: "whitehead of empty word".to_string(),
                    })
                }
            };
            let mut coef = a * b;
            let both_iota_k = match (u.factors.as_slice(), v.factors.as_slice()) {
                ([Factor::Iota { dim: k1 }], [Factor::Iota { dim: k2 }]) if k1 == k2 => Some(*k1),
                _ => None,
            };
            if let Some(k) = both_iota_k {
                if k == 3 || k == 7 {
                    continue; // [ι_k, ι_k] = 0
                }
                if k % 2 == 1 {
                    coef = coef.rem_euclid(2); // 2[ι_k, ι_k] = 0
                }
            }
            if coef == 0 {
                continue;
            }
            out.push((
                coef,
                Word::single(Factor::Whitehead {
                    left: Box::new(u.clone()),
                    right: Box::new(v.clone()),
                    source_dim: su + sv - 1,
                    target_dim: tu.unwrap_or(0),
                }),
            ));
        }
    }
    Ok(FormalElement::from_terms(out))
}

/// Second James–Hopf invariant H₂. Suspensions die; wedge brackets expand
/// to the smash difference; everything else resolves through facts.
pub fn hopf_h2(x: &FormalElement, facts: &dyn FactSource) -> Result<FormalElement> {
    let mut out = FormalElement::zero();
    for (c, w) in &x.terms {
        // Wedge rule: H₂([j₁, j₂]) = Σ(j₁∧j₂) − Σ(j₂∧j₁).
        if let [Factor::Whitehead {
            left,
            right,
            source_dim,
            ..
        }] = w.factors.as_slice()
        {
            let sd = *source_dim;
            let lk = left.key();
            let rk = right.key();
            let mk_smash = |a: &str, b: &str| {
                FormalElement::from_word(Word::single(Factor::Gen(GenSymbol {
                    name: format!("Sigma({a}^{b})"),
                    source_dim: sd + 1,
                    target_dim: sd + 1,
                    suspension: true,
                })))
            };
            let part = mk_smash(&lk, &rk).sub(&mk_smash(&rk, &lk)).scale(*c);
            out = out.add(&part);
            continue;
        }
        if w.is_suspension() {
            continue; // H₂ kills suspensions
        }
        match facts.hopf(&w.key()) {
            Some(rhs) => out = out.add(&rhs.scale(*c)),
            None => {
                return Err(SymbolError::MissingFact {
                    word: format!("H2({})", w.key()),
                })
            }
        }
    }
    Ok(out)
}

/// One summand of a Hilton-range decomposition of π_m(S^a ∨ S^b).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HiltonSummand {
    pub inclusion: String,
    pub sphere_dim: u32,
}

/// Basic-product summands of π_m(S^a ∨ S^b) through weight 3. Errors if
/// `m` reaches the first weight-4 basic product's sphere.
pub fn hilton_decompose(a: u32, b: u32, m: u32) -> Result<Vec<HiltonSummand>> {
    let weight4_dim = (3 * a + b - 3).min(2 * a + 2 * b - 3).min(a + 3 * b - 3);
    if m >= weight4_dim {
        return Err(SymbolError::RangeExceeded {
            omitted: format!("W[j1,W[j1,W[j1,j2]]] on S^{}", 3 * a + b - 3),
        });
    }
    let candidates = [
        ("j1".to_string(), a),
        ("j2".to_string(), b),
        ("W[j1,j2]".to_string(), a + b - 1),
        ("W[j1,W[j1,j2]]".to_string(), 2 * a + b - 2),
        ("W[W[j1,j2],j2]".to_string(), a + 2 * b - 2),
    ];
    Ok(candidates
        .into_iter()
        .filter(|(_, d)| *d <= m)
        .map(|(inclusion, sphere_dim)| HiltonSummand {
            inclusion,
            sphere_dim,
        })
        .collect())
}

/// A Toda-bracket value: a coset given by one representative and a list of
/// indeterminacy generators (elements of the ambient group).
#[derive(Clone, Debug)]
pub struct BracketCoset {
    pub representative: FormalElement,
    pub indeterminacy: Vec<FormalElement>,
}

/// Toda bracket {f, g, h}: curated entry when available, else the 2-power
/// shuffle rule {2^r·α, Σβ, 2^r·Σγ} ∋ α∘Σβ∘η∘Σ²γ for r = 1 and 0 for
/// r ≥ 2. Indeterminacy f∘π + π∘Σh is assembled from declared groups when
/// they are curated.
pub fn toda_bracket(
    f: &FormalElement,
    g: &FormalElement,
    h: &FormalElement,
    target: &SpaceId,
    facts: &dyn FactSource,
) -> Result<BracketCoset> {
    let key = format!("{} | {} | {}", f.elem_key(), g.elem_key(), h.elem_key());
    if let Some(BracketFact {
        representative,
        indeterminacy,
    }) = facts.bracket(&key)
    {
        return Ok(BracketCoset {
            representative,
            indeterminacy,
        });
    }
    // Shuffle rule pattern: f = 2^r·α, g a suspension, h = 2^r·(suspension).
    let (fc, fw) = match f.terms.as_slice() {
        [t] => (t.0, &t.1),
        _ => {
            return Err(SymbolError::MissingFact {
                word: format!("toda bracket {key}"),
            })
        }
    };
    let (hc, hw) = match h.terms.as_slice() {
        [t] => (t.0, &t.1),
        _ => {
            return Err(SymbolError::MissingFact {
                word: format!("toda bracket {key}"),
            })
        }
    };
    let applies = fc == hc
        && fc >= 2
        && (fc as u64).is_power_of_two()
        && g.is_suspension()
        && hw.is_suspension();
    if !applies {
        return Err(SymbolError::MissingFact {
            word: format!("toda bracket {key}"),
        });
    }
    let indeterminacy = bracket_indeterminacy(f, g, h, target, facts)?;
    if fc >= 4 {
        // r ≥ 2: the bracket contains 0.
        return Ok(BracketCoset {
            representative: FormalElement::zero(),
            indeterminacy,
        });
    }
    // r = 1: representative α ∘ Σβ ∘ η ∘ Σ(h-word).
    let p = hw
        .target_dim()
        .ok_or_else(|| SymbolError::NotComposable {
            context: "empty h word".to_string(),
        })?;
    let eta = FormalElement::gen(&format!("eta_{p}"), p + 1, p, true);
    let alpha = FormalElement::from_word(fw.clone());
    let sus_h = suspend(&FormalElement::from_word(hw.clone()), 1, facts)?;
    let rep = compose(&compose(&compose(&alpha, g)?, &eta)?, &sus_h)?;
    Ok(BracketCoset {
        representative: rep,
        indeterminacy,
    })
}

/// Indeterminacy f∘π_{m+1}(S^src f) + π_{p+1}(X)∘Σh, assembled from the
/// curated groups when present (best effort: missing groups contribute
/// nothing rather than failing the bracket).
fn bracket_indeterminacy(
    f: &FormalElement,
    _g: &FormalElement,
    h: &FormalElement,
    target: &SpaceId,
    facts: &dyn FactSource,
) -> Result<Vec<FormalElement>> {
    let mut out = Vec::new();
    let (m, p) = match h.terms.first().map(|(_, w)| (w.source_dim(), w.target_dim())) {
        Some((Some(m), Some(p))) => (m, p),
        _ => return Ok(out),
    };
    // f ∘ π_{m+1}(S^{source of f})
    if let Some((_, fw)) = f.terms.first() {
        if let Some(sf) = fw.source_dim() {
            if let Some(grp) = facts.group(&SpaceId::Sphere(sf), m + 1) {
                for name in grp.generator_names() {
                    let w = FormalElement::gen(name, m + 1, sf, false);
                    if let Ok(c) = compose(f, &w) {
                        out.push(c);
                    }
                }
            }
        }
    }
    // π_{p+1}(X) ∘ Σh
    if let Some(grp) = facts.group(target, p + 1) {
        if let Some((_, hw)) = h.terms.first() {
            if let Ok(sh) = suspend(&FormalElement::from_word(hw.clone()), 1, facts) {
                for name in grp.generator_names() {
                    let u = FormalElement::gen(name, p + 1, 0, false);
                    if let Ok(c) = compose(&u, &sh) {
                        out.push(c);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Maximum number of rewrite passes before giving up (loop guard).
const MAX_REWRITE_PASSES: usize = 64;

/// Applies one composition-fact substitution if any pair (or contiguous
/// split) of factors matches; returns None if nothing applies.
fn rewrite_composition_once(
    elem: &FormalElement,
    facts: &dyn FactSource,
) -> Result<Option<FormalElement>> {
    for (ti, (c, w)) in elem.terms.iter().enumerate() {
        let n = w.factors.len();
        for i in 0..n {
            for j in (i + 2)..=n {
                for k in (i + 1)..j {
                    let left_key = Word::new(w.factors[i..k].to_vec()).key();
                    let right_key = Word::new(w.factors[k..j].to_vec()).key();
                    let Some(rhs) = facts.composition(&left_key, &right_key) else {
                        continue;
                    };
                    // Legality: the suffix after the replaced span must be a
                    // suspension (or empty), unless the replacement is a
                    // single unit term.
                    let suffix = Word::new(w.factors[j..].to_vec());
                    let unit_rhs = rhs.terms.len() <= 1
                        && rhs.terms.first().map_or(true, |(rc, _)| rc.abs() == 1);
                    if !(suffix.factors.is_empty() || suffix.is_suspension() || unit_rhs) {
                        continue;
                    }
                    // Substitute: prefix ∘ rhs ∘ suffix.
                    let mut new_terms: Vec<(i64, Word)> = elem
                        .terms
                        .iter()
                        .enumerate()
                        .filter(|(idx, _)| *idx != ti)
                        .map(|(_, t)| t.clone())
                        .collect();
                    for (rc, rw) in &rhs.terms {
                        let mut factors = w.factors[..i].to_vec();
                        factors.extend(rw.factors.iter().cloned());
                        factors.extend(w.factors[j..].iter().cloned());
                        new_terms.push((c * rc, Word::new(factors)));
                    }
                    return Ok(Some(FormalElement::from_terms(new_terms)));
                }
            }
        }
    }
    Ok(None)
}

/// Expands the leftmost Degree factor in any word, if present.
fn rewrite_degree_once(
    elem: &FormalElement,
    facts: &dyn FactSource,
) -> Result<Option<FormalElement>> {
    for (ti, (c, w)) in elem.terms.iter().enumerate() {
        for (fi, f) in w.factors.iter().enumerate() {
            let Factor::Degree { dim, t } = f else {
                continue;
            };
            let suffix = Word::new(w.factors[fi + 1..].to_vec());
            let expanded = if suffix.factors.is_empty() {
                // t·ι_n standing alone.
                FormalElement::from_word(Word::single(Factor::Iota { dim: *dim })).scale(*t)
            } else {
                expand_degree_word(*t, *dim, &suffix, facts)?
            };
            let mut new_terms: Vec<(i64, Word)> = elem
                .terms
                .iter()
                .enumerate()
                .filter(|(idx, _)| *idx != ti)
                .map(|(_, t)| t.clone())
                .collect();
            for (rc, rw) in &expanded.terms {
                let mut factors = w.factors[..fi].to_vec();
                factors.extend(rw.factors.iter().cloned());
                new_terms.push((c * rc, Word::new(factors)));
            }
            return Ok(Some(FormalElement::from_terms(new_terms)));
        }
    }
    Ok(None)
}

/// Kills or expands Whitehead-bracket factors: [ι_k,ι_k] = 0 for k = 3, 7;
/// even multiples die for odd k (when the tail permits moving the scalar);
/// otherwise curated expansions are substituted.
fn rewrite_brackets_once(
    elem: &FormalElement,
    facts: &dyn FactSource,
) -> Result<Option<FormalElement>> {
    for (ti, (c, w)) in elem.terms.iter().enumerate() {
        for (fi, f) in w.factors.iter().enumerate() {
            let Factor::Whitehead { left, right, .. } = f else {
                continue;
            };
            let both_iota_k = match (left.factors.as_slice(), right.factors.as_slice()) {
                ([Factor::Iota { dim: k1 }], [Factor::Iota { dim: k2 }]) if k1 == k2 => Some(*k1),
                _ => None,
            };
            let suffix = Word::new(w.factors[fi + 1..].to_vec());
            let scalar_movable = suffix.factors.is_empty() || suffix.is_suspension();
            let mut remove_term = false;
            if let Some(k) = both_iota_k {
                if k == 3 || k == 7 {
                    remove_term = true;
                } else if k % 2 == 1 && c % 2 == 0 && scalar_movable {
                    remove_term = true;
                }
            }
            if remove_term {
                let new_terms: Vec<(i64, Word)> = elem
                    .terms
                    .iter()
                    .enumerate()
                    .filter(|(idx, _)| *idx != ti)
                    .map(|(_, t)| t.clone())
                    .collect();
                return Ok(Some(FormalElement::from_terms(new_terms)));
            }
            if let Some(rhs) = facts.whitehead_expansion(&f.key()) {
                let unit_rhs = rhs.terms.len() <= 1
                    && rhs.terms.first().map_or(true, |(rc, _)| rc.abs() == 1);
                if !(scalar_movable || unit_rhs) {
                    continue;
                }
                let mut new_terms: Vec<(i64, Word)> = elem
                    .terms
                    .iter()
                    .enumerate()
                    .filter(|(idx, _)| *idx != ti)
                    .map(|(_, t)| t.clone())
                    .collect();
                for (rc, rw) in &rhs.terms {
                    let mut factors = w.factors[..fi].to_vec();
                    factors.extend(rw.factors.iter().cloned());
                    factors.extend(w.factors[fi + 1..].iter().cloned());
                    new_terms.push((c * rc, Word::new(factors)));
                }
                return Ok(Some(FormalElement::from_terms(new_terms)));
            }
        }
    }
    Ok(None)
}

/// Exhaustively rewrites `x` (composition facts, then degree expansion,
/// then bracket kills — in that fixed order per pass).
pub fn rewrite(x: &FormalElement, facts: &dyn FactSource) -> Result<FormalElement> {
    let mut cur = x.clone();
    for _ in 0..MAX_REWRITE_PASSES {
        if let Some(next) = rewrite_composition_once(&cur, facts)? {
            cur = next;
            continue;
        }
        if let Some(next) = rewrite_degree_once(&cur, facts)? {
            cur = next;
            continue;
        }
        if let Some(next) = rewrite_brackets_once(&cur, facts)? {
            cur = next;
            continue;
        }
        return Ok(cur);
    }
    Err(SymbolError::RewriteLimit {
        word: cur
            .terms
            .first()
            .map(|(_, w)| w.key())
            .unwrap_or_default(),
    })
}

/// Normalizes `x` into canonical coordinates of the declared ambient
/// group. Every fully rewritten word must name a generator of the group;
/// otherwise the first unresolvable word is reported.
pub fn normalize(
    x: &FormalElement,
    ambient: &FgAbGroup,
    facts: &dyn FactSource,
) -> Result<GroupElement> {
    let rewritten = rewrite(x, facts)?;
    let mut acc = GroupElement::zero(ambient.rank());
    for (c, w) in &rewritten.terms {
        let key = w.key();
        let gen = ambient
            .generator(&key)
            .map_err(|_| SymbolError::MissingFact { word: key.clone() })?;
        acc = ambient.add(&acc, &ambient.scale(*c as i128, &gen));
    }
    Ok(ambient.reduce(&acc))
}
