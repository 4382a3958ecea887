//! Free tensor algebra on a graded alphabet, with coefficients in ℤ or
//! ℤ/2^r: the loop-space homology model behind the non-divisibility
//! arguments. Supports the concatenation product, iterated commutator
//! brackets (ungraded by default, graded-sign variant available), and the
//! 2-power divisibility verdicts extracted from Hurewicz images.

#![forbid(unsafe_code)]

use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Errors raised by tensor algebra operations.
#[derive(Debug, Error)]
pub enum TensorError {
    /// Two elements over different alphabets or moduli were combined.
    #[error("alphabet mismatch: {context}")]
    AlphabetMismatch { context: String },

    /// A product would create a word of degree above the configured cap.
    #[error("degree cap exceeded: word of degree {degree} > cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, TensorError>;

/// Default guard against uncontrolled word growth.
pub const DEFAULT_DEGREE_CAP: usize = 24;

/// A declared graded alphabet: ordered letters with positive degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    letters: Vec<(String, usize)>,
    degree_cap: usize,
}

impl Alphabet {
    pub fn new(letters: &[(&str, usize)]) -> Self {
        Alphabet {
            letters: letters
                .iter()
                .map(|&(n, d)| (n.to_string(), d))
                .collect(),
            degree_cap: DEFAULT_DEGREE_CAP,
        }
    }

    pub fn with_degree_cap(mut self, cap: usize) -> Self {
        self.degree_cap = cap;
        self
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.letters.iter().position(|(n, _)| n == name)
    }

    pub fn degree_of(&self, idx: usize) -> usize {
        self.letters[idx].1
    }

    fn word_degree(&self, word: &[usize]) -> usize {
        word.iter().map(|&i| self.degree_of(i)).sum()
    }
}

/// An element of the tensor algebra: a finite sum of words with integer
/// coefficients, reduced modulo `modulus` when it is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TAElement {
    alphabet: Alphabet,
    /// 0 means integral coefficients; otherwise a power of 2.
    modulus: u128,
    terms: BTreeMap<Vec<usize>, i128>,
}

impl TAElement {
    /// The zero element.
    pub fn zero(alphabet: &Alphabet, modulus: u128) -> Self {
        TAElement {
            alphabet: alphabet.clone(),
            modulus,
            terms: BTreeMap::new(),
        }
    }

    /// A single letter with coefficient 1.
    pub fn letter(alphabet: &Alphabet, name: &str, modulus: u128) -> Result<Self> {
        let idx = alphabet
            .index_of(name)
            .ok_or_else(|| TensorError::AlphabetMismatch {
                context: format!("unknown letter '{name}'"),
            })?;
        let mut terms = BTreeMap::new();
        terms.insert(vec![idx], 1);
        Ok(TAElement {
            alphabet: alphabet.clone(),
            modulus,
            terms,
        })
        .map(TAElement::normalized)
    }

    pub fn modulus(&self) -> u128 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the given word (letters by name).
    pub fn coefficient(&self, word: &[&str]) -> Result<i128> {
        let mut idx_word = Vec::with_capacity(word.len());
        for name in word {
            idx_word.push(self.alphabet.index_of(name).ok_or_else(|| {
                TensorError::AlphabetMismatch {
                    context: format!("unknown letter '{name}'"),
                }
            })?);
        }
        Ok(self.terms.get(&idx_word).copied().unwrap_or(0))
    }

    /// All nonzero terms, as (word-of-names, coefficient).
    pub fn terms(&self) -> Vec<(Vec<String>, i128)> {
        self.terms
            .iter()
            .map(|(w, &c)| {
                (
                    w.iter()
                        .map(|&i| self.alphabet.letters[i].0.clone())
                        .collect(),
                    c,
                )
            })
            .collect()
    }

    fn normalized(mut self) -> Self {
        if self.modulus != 0 {
            let m = self.modulus as i128;
            for c in self.terms.values_mut() {
                *c = c.rem_euclid(m);
            }
        }
        self.terms.retain(|_, c| *c != 0);
        self
    }

    fn compatible(&self, other: &TAElement) -> Result<()> {
        if self.alphabet != other.alphabet || self.modulus != other.modulus {
            return Err(TensorError::AlphabetMismatch {
                context: "elements live in different algebras".to_string(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &TAElement) -> Result<TAElement> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            *out.terms.entry(w.clone()).or_insert(0) += c;
        }
        Ok(out.normalized())
    }

    pub fn scale(&self, k: i128) -> TAElement {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c *= k;
        }
        out.normalized()
    }

    pub fn sub(&self, other: &TAElement) -> Result<TAElement> {
        self.add(&other.scale(-1))
    }
}

impl fmt::Display for TAElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .iter()
            .map(|(w, c)| format!("{c}·{}", w.join("⊗")))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Concatenation product in the tensor algebra.
pub fn ta_multiply(x: &TAElement, y: &TAElement) -> Result<TAElement> {
    x.compatible(y)?;
    let mut out = TAElement::zero(&x.alphabet, x.modulus);
    for (wx, cx) in &x.terms {
        for (wy, cy) in &y.terms {
            let mut w = wx.clone();
            w.extend_from_slice(wy);
            let deg = x.alphabet.word_degree(&w);
            if deg > x.alphabet.degree_cap {
                return Err(TensorError::DegreeCapExceeded {
                    degree: deg,
                    cap: x.alphabet.degree_cap,
                });
            }
            *out.terms.entry(w).or_insert(0) += cx * cy;
        }
    }
    Ok(out.normalized())
}

/// Commutator bracket [x, y] = xy − yx (the ungraded convention used in
/// the source computations).
pub fn ta_bracket(x: &TAElement, y: &TAElement) -> Result<TAElement> {
    ta_multiply(x, y)?.sub(&ta_multiply(y, x)?)
}

/// Graded-sign bracket [x, y] = xy − (−1)^{|x||y|} yx, applied termwise
/// by word degree.
pub fn ta_bracket_graded(x: &TAElement, y: &TAElement) -> Result<TAElement> {
    x.compatible(y)?;
    let mut out = ta_multiply(x, y)?;
    for (wy, cy) in &y.terms {
        for (wx, cx) in &x.terms {
            let sign = if (x.alphabet.word_degree(wx) * x.alphabet.word_degree(wy)) % 2 == 0 {
                1
            } else {
                -1
            };
            let mut w = wy.clone();
            w.extend_from_slice(wx);
            let deg = x.alphabet.word_degree(&w);
            if deg > x.alphabet.degree_cap {
                return Err(TensorError::DegreeCapExceeded {
                    degree: deg,
                    cap: x.alphabet.degree_cap,
                });
            }
            *out.terms.entry(w).or_insert(0) -= sign * cx * cy;
        }
    }
    Ok(out.normalized())
}

/// Divisibility verdict on a Hurewicz image: for `power` = 2^{s+1}, returns
/// true iff 2^s·x is *not* divisible by 2^{s+1} in the algebra over
/// ℤ/2^r — i.e. some coefficient of 2^s·x is odd after dividing out 2^s.
///
/// `power` must be a power of two ≥ 2, and s < r.
pub fn hurewicz_divisibility(x: &TAElement, power: u128) -> bool {
    assert!(power >= 2 && power.is_power_of_two(), "power must be 2^(s+1)");
    let s = power.trailing_zeros() - 1;
    let shifted = x.scale(1i128 << s);
    // Not divisible iff some coefficient is nonzero mod 2^{s+1}.
    shifted
        .terms
        .values()
        .any(|c| c.rem_euclid(power as i128) != 0)
}

/// The four coefficients (x₁₁, x₁₂, x₂₁, x₂₂) of the degree-(m+n) part of
/// the commutator model for a wedge of two cells.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CommutatorModelCoefficients {
    pub x11: i128,
    pub x12: i128,
    pub x21: i128,
    pub x22: i128,
}

/// Recomputes, in T⟨a, b⟩ with |a| = m and |b| = n, the homology image of
/// the commutator of the two inclusions: the bracket [a, b] expanded over
/// the four two-letter words. The mixed words always carry (+1, −1); the
/// squares only contribute in degree m+n when m = n, where they vanish.
pub fn samelson_h2_model(m: usize, n: usize) -> CommutatorModelCoefficients {
    assert!(m >= 1 && n >= 1);
    let alphabet = Alphabet::new(&[("a", m), ("b", n)]).with_degree_cap(2 * m.max(n) + 2);
    let a = TAElement::letter(&alphabet, "a", 0).expect("letter a");
    let b = TAElement::letter(&alphabet, "b", 0).expect("letter b");
    let bracket = ta_bracket(&a, &b).expect("bracket in fresh algebra");
    CommutatorModelCoefficients {
        x11: bracket.coefficient(&["a", "a"]).expect("word aa"),
        x12: bracket.coefficient(&["a", "b"]).expect("word ab"),
        x21: bracket.coefficient(&["b", "a"]).expect("word ba"),
        x22: bracket.coefficient(&["b", "b"]).expect("word bb"),
    }
}

/// Left-normed iterated bracket [x, [x, … [x, y] …]] with `depth` copies
/// of `x`.
pub fn left_normed_bracket(x: &TAElement, y: &TAElement, depth: usize) -> Result<TAElement> {
    let mut acc = y.clone();
    for _ in 0..depth {
        acc = ta_bracket(x, &acc)?;
    }
    Ok(acc)
}
