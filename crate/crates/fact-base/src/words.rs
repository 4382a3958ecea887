//! Parsing of generator words into symbol-engine terms.
//!
//! A word is a space-separated sequence of factor keys, outermost first.
//! Factor keys: `iota_N`, `(T iota_N)` for a degree map with literal T,
//! `W[w1,w2]` for a Whitehead product of two words, and otherwise the name
//! of a declared atomic symbol.

use crate::schema::SymbolFact;
use indexmap::IndexMap;
use symbol_engine::{Factor, GenSymbol, Word};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("unknown symbol '{name}' in word '{word}'")]
    UnknownSymbol { name: String, word: String },
    #[error("malformed word '{word}': {reason}")]
    Malformed { word: String, reason: String },
}

/// Declared atomic symbols, by name.
#[derive(Clone, Debug, Default)]
pub struct SymbolTable {
    map: IndexMap<String, GenSymbol>,
}

impl SymbolTable {
    pub fn from_facts<'a>(facts: impl Iterator<Item = &'a SymbolFact>) -> Self {
        let mut map = IndexMap::new();
        for f in facts {
            map.insert(
                f.name.clone(),
                GenSymbol {
                    name: f.name.clone(),
                    source_dim: f.source,
                    target_dim: f.target,
                    suspension: f.suspension,
                },
            );
        }
        SymbolTable { map }
    }

    pub fn get(&self, name: &str) -> Option<&GenSymbol> {
        self.map.get(name)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.map.contains_key(name)
    }
}

/// Splits `s` on `sep` at bracket/paren depth zero.
fn split_depth0(s: &str, sep: char) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '[' | '(' => {
                depth += 1;
                cur.push(ch);
            }
            ']' | ')' => {
                depth -= 1;
                cur.push(ch);
            }
            c if c == sep && depth == 0 => {
                if !cur.trim().is_empty() {
                    out.push(cur.trim().to_string());
                }
                cur.clear();
            }
            c => cur.push(c),
        }
    }
    if !cur.trim().is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}

fn parse_factor(tok: &str, tab: &SymbolTable, whole: &str) -> Result<Factor, WordError> {
    if let Some(dim) = tok.strip_prefix("iota_") {
        let dim: u32 = dim.parse().map_err(|_| WordError::Malformed {
            word: whole.to_string(),
            reason: format!("bad identity-class dimension in '{tok}'"),
        })?;
        return Ok(Factor::Iota { dim });
    }
    if let Some(inner) = tok.strip_prefix("W[").and_then(|s| s.strip_suffix(']')) {
        let operands = split_depth0(inner, ',');
        if operands.len() != 2 {
            return Err(WordError::Malformed {
                word: whole.to_string(),
                reason: format!("W[..] needs exactly two operands in '{tok}'"),
            });
        }
        let left = parse_word(&operands[0], tab)?;
        let right = parse_word(&operands[1], tab)?;
        let (ls, rs) = match (left.source_dim(), right.source_dim()) {
            (Some(a), Some(b)) => (a, b),
            _ => {
                return Err(WordError::Malformed {
                    word: whole.to_string(),
                    reason: format!("empty W-operand in '{tok}'"),
                })
            }
        };
        let target_dim = left.target_dim().unwrap_or(ls);
        return Ok(Factor::Whitehead {
            left: Box::new(left),
            right: Box::new(right),
            source_dim: ls + rs - 1,
            target_dim,
        });
    }
    if let Some(inner) = tok.strip_prefix('(').and_then(|s| s.strip_suffix(')')) {
        let parts = split_depth0(inner, ' ');
        if parts.len() == 2 {
            if let (Ok(t), Some(dim)) = (
                parts[0].parse::<i64>(),
                parts[1]
                    .strip_prefix("iota_")
                    .and_then(|d| d.parse::<u32>().ok()),
            ) {
                return Ok(Factor::Degree { dim, t });
            }
        }
        return Err(WordError::Malformed {
            word: whole.to_string(),
            reason: format!("unparsable degree factor '{tok}'"),
        });
    }
    match tab.get(tok) {
        Some(g) => Ok(Factor::Gen(g.clone())),
        None => Err(WordError::UnknownSymbol {
            name: tok.to_string(),
            word: whole.to_string(),
        }),
    }
}

/// Parses a full word (factors space-separated, outermost first).
pub fn parse_word(s: &str, tab: &SymbolTable) -> Result<Word, WordError> {
    let toks = split_depth0(s, ' ');
    if toks.is_empty() {
        return Err(WordError::Malformed {
            word: s.to_string(),
            reason: "empty word".to_string(),
        });
    }
    let mut factors = Vec::with_capacity(toks.len());
    for t in &toks {
        factors.push(parse_factor(t, tab, s)?);
    }
    Ok(Word::new(factors))
}

/// All atomic symbol names a word mentions (recursing into W-operands).
pub fn symbols_mentioned(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    collect_symbols(s, &mut out);
    out
}

fn collect_symbols(s: &str, out: &mut Vec<String>) {
    for tok in split_depth0(s, ' ') {
        if tok.starts_with("iota_") || tok.starts_with('(') {
            continue;
        }
        if let Some(inner) = tok.strip_prefix("W[").and_then(|t| t.strip_suffix(']')) {
            for op in split_depth0(inner, ',') {
                collect_symbols(&op, out);
            }
            continue;
        }
        if !out.contains(&tok) {
            out.push(tok);
        }
    }
}
