//! Loading, validation, and querying of the curated knowledge base:
//! 2-local homotopy groups of spheres with named generators,
//! composition/suspension/Hopf/Whitehead/Toda-bracket relations, fiber
//! boundary images, fiber-skeleton group presentations, extension
//! resolution data, and the expected result tables.
//!
//! The base is data, not code: every computation the pipeline performs is
//! driven by records loaded here, each carrying a provenance string.

#![forbid(unsafe_code)]

pub mod rexpr;
pub mod schema;
pub mod words;

use abelian_core::{FgAbGroup, Order};
use indexmap::IndexMap;
use std::collections::{HashMap, HashSet};
use std::path::Path;
use symbol_engine::{BracketFact, Factor, FactSource, FormalElement, SpaceId, Word};
use thiserror::Error;

pub use rexpr::{ParamAssignment, RCond};
pub use schema::*;

/// Names of the lift generators produced by extension assembly.
pub const LIFT_PREFIX: &str = "lift.";

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("cannot read fact file: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("validation error in record '{id}': {reason}")]
    Validation { id: String, reason: String },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QueryError {
    #[error("not curated: {what}")]
    NotCurated { what: String },
}

/// One finding of the semantic validation pass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Finding {
    pub record_id: String,
    pub category: String,
    pub message: String,
}

impl std::fmt::Display for Finding {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}] {}: {}", self.category, self.record_id, self.message)
    }
}

/// The loaded, structurally valid knowledge base.
#[derive(Clone, Debug)]
pub struct FactBase {
    file: schema::FactFile,
    symtab: words::SymbolTable,
}

impl PartialEq for FactBase {
    fn eq(&self, other: &Self) -> bool {
        self.file == other.file
    }
}

fn order_from_str(s: &str) -> Result<Order, String> {
    if s == "inf" {
        return Ok(Order::Infinite);
    }
    let v: u128 = s
        .parse()
        .map_err(|_| format!("order '{s}' is neither 'inf' nor an integer"))?;
    if !v.is_power_of_two() {
        return Err(format!("order '{s}' is not a power of 2"));
    }
    Ok(Order::Finite(v))
}

impl FactBase {
    /// Loads and structurally validates a fact file; all-or-nothing.
    pub fn load(path: impl AsRef<Path>) -> Result<FactBase, LoadError> {
        let text = std::fs::read_to_string(path)?;
        FactBase::load_str(&text)
    }

    pub fn load_str(text: &str) -> Result<FactBase, LoadError> {
        let file: schema::FactFile =
            serde_json::from_str(text).map_err(|e| LoadError::Parse {
                line: e.line(),
                reason: e.to_string(),
            })?;
        let fb = FactBase::from_file(file)?;
        Ok(fb)
    }

    pub fn from_file(file: schema::FactFile) -> Result<FactBase, LoadError> {
        let symtab = words::SymbolTable::from_facts(file.facts.iter().filter_map(|f| {
            if let FactRecord::Symbol(s) = f {
                Some(s)
            } else {
                None
            }
        }));
        let fb = FactBase { file, symtab };
        fb.structural_check()?;
        Ok(fb)
    }

    fn structural_check(&self) -> Result<(), LoadError> {
        let err = |id: &str, reason: String| LoadError::Validation {
            id: id.to_string(),
            reason,
        };
        if self.file.version.is_empty() {
            return Err(err("(file)", "empty version".to_string()));
        }
        let mut ids = HashSet::new();
        for f in &self.file.facts {
            if !ids.insert(f.id().to_string()) {
                return Err(err(f.id(), "duplicate record id".to_string()));
            }
            if f.provenance().trim().is_empty() {
                return Err(err(f.id(), "empty provenance".to_string()));
            }
        }
        let expr = |id: &str, s: &str| {
            rexpr::parse(s).map_err(|e| err(id, e.to_string())).map(|_| ())
        };
        let cond = |id: &str, s: &str| {
            RCond::parse(s).map_err(|e| err(id, e.to_string())).map(|_| ())
        };
        let word = |id: &str, s: &str| {
            words::parse_word(s, &self.symtab)
                .map_err(|e| err(id, e.to_string()))
                .map(|_| ())
        };
        let terms = |id: &str, ts: &[Term]| -> Result<(), LoadError> {
            for t in ts {
                expr(id, &t.coeff)?;
                word(id, &t.word)?;
            }
            Ok(())
        };
        // Term lists whose words are opaque fiber-generator names, not
        // engine words: only the coefficients are expressions.
        let opaque_terms = |id: &str, ts: &[Term]| -> Result<(), LoadError> {
            for t in ts {
                expr(id, &t.coeff)?;
                if t.word.trim().is_empty() {
                    return Err(err(id, "empty generator name".to_string()));
                }
            }
            Ok(())
        };
        for sg in &self.file.sphere_groups {
            let id = format!("sphere.{}.{}", sg.n, sg.m);
            if sg.provenance.trim().is_empty() {
                return Err(err(&id, "empty provenance".to_string()));
            }
            for s in &sg.summands {
                order_from_str(&s.order).map_err(|e| err(&id, e))?;
                word(&id, &s.name)?;
                if let Some(d) = &s.desuspension {
                    word(&id, d)?;
                }
            }
        }
        for f in &self.file.facts {
            match f {
                FactRecord::Symbol(_) => {}
                FactRecord::Composition(c) => {
                    word(&c.id, &c.left)?;
                    word(&c.id, &c.right)?;
                    terms(&c.id, &c.result)?;
                    if let Some(o) = &c.order {
                        expr(&c.id, o)?;
                    }
                }
                FactRecord::Degree(d) => {
                    expr(&d.id, &d.t)?;
                    word(&d.id, &d.word)?;
                    terms(&d.id, &d.result)?;
                }
                FactRecord::Suspension(s) => {
                    word(&s.id, &s.gen)?;
                    word(&s.id, &s.result)?;
                }
                FactRecord::Hopf(h) => {
                    word(&h.id, &h.word)?;
                    terms(&h.id, &h.result)?;
                }
                FactRecord::Whitehead(w) => {
                    word(&w.id, &w.key)?;
                    terms(&w.id, &w.result)?;
                }
                FactRecord::Bracket(b) => {
                    terms(&b.id, &b.representative)?;
                    for ind in &b.indeterminacy {
                        terms(&b.id, ind)?;
                    }
                }
                FactRecord::Boundary(b) => {
                    cond(&b.id, &b.r_cond)?;
                    word(&b.id, &b.gen)?;
                    opaque_terms(&b.id, &b.result)?;
                }
                FactRecord::JGroup(j) => {
                    cond(&j.id, &j.r_cond)?;
                    if j.stage != "J2" && j.stage != "J3" {
                        return Err(err(&j.id, format!("bad stage '{}'", j.stage)));
                    }
                    for s in j.a_part.iter().chain(&j.c_part) {
                        if s.order != "inf" {
                            expr(&j.id, &s.order)?;
                        }
                    }
                    for l in &j.lifts {
                        if !j.c_part.iter().any(|s| s.name == l.gen) {
                            return Err(err(
                                &j.id,
                                format!("lift for undeclared ker-side generator '{}'", l.gen),
                            ));
                        }
                        opaque_terms(&j.id, &l.target)?;
                    }
                }
                FactRecord::Extension(e) => {
                    cond(&e.id, &e.r_cond)?;
                    for l in &e.lifts {
                        opaque_terms(&e.id, l)?;
                    }
                }
                FactRecord::Imported(imp) => {
                    cond(&imp.id, &imp.r_cond)?;
                    for o in &imp.orders {
                        expr(&imp.id, o)?;
                    }
                }
            }
        }
        for g in &self.file.gamma {
            let id = format!("gamma{}.k{}", g.stage, g.k);
            if g.stage != 2 && g.stage != 3 {
                return Err(err(&id, format!("bad gamma stage {}", g.stage)));
            }
            terms(&id, &g.terms)?;
        }
        for e in &self.file.expected_tables {
            let id = format!("expected.{}.{}.{}", e.n, e.i, e.r_cond);
            cond(&id, &e.r_cond)?;
            for o in &e.orders {
                expr(&id, o)?;
            }
        }
        Ok(())
    }

    pub fn version(&self) -> &str {
        &self.file.version
    }

    pub fn file(&self) -> &schema::FactFile {
        &self.file
    }

    pub fn symbol_table(&self) -> &words::SymbolTable {
        &self.symtab
    }

    /// Canonical serialization (stable field and record order).
    pub fn serialize(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.file).expect("schema serializes");
        s.push('\n');
        s
    }

    /// π_{n+k}(S^n) with named generators.
    pub fn query_sphere_group(&self, n: u32, k: i64) -> Result<FgAbGroup, QueryError> {
        let m = n as i64 + k;
        if m < 0 {
            return Err(QueryError::NotCurated {
                what: format!("pi_{{{n}+({k})}}(S^{n})"),
            });
        }
        self.sphere_group_by_m(n, m as u32)
    }

    /// π_m(S^n) with named generators.
    pub fn sphere_group_by_m(&self, n: u32, m: u32) -> Result<FgAbGroup, QueryError> {
        let rec = self.sphere_record(n, m).ok_or_else(|| QueryError::NotCurated {
            what: format!("pi_{m}(S^{n})"),
        })?;
        let summands: Vec<(&str, Order)> = rec
            .summands
            .iter()
            .map(|s| {
                (
                    s.name.as_str(),
                    order_from_str(&s.order).expect("validated at load"),
                )
            })
            .collect();
        Ok(FgAbGroup::direct_sum(&summands).expect("validated at load"))
    }

    pub fn sphere_record(&self, n: u32, m: u32) -> Option<&SphereGroupRecord> {
        self.file
            .sphere_groups
            .iter()
            .find(|sg| sg.n == n && sg.m == m)
    }

    /// Looks up a record by kind and id.
    pub fn query_fact(&self, kind: &str, key: &str) -> Result<&FactRecord, QueryError> {
        self.file
            .facts
            .iter()
            .find(|f| f.kind() == kind && f.id() == key)
            .ok_or_else(|| QueryError::NotCurated {
                what: format!("{kind} fact '{key}'"),
            })
    }

    pub fn facts(&self) -> &[FactRecord] {
        &self.file.facts
    }

    pub fn gamma_record(&self, k: u32, stage: u32) -> Option<&GammaRecord> {
        self.file.gamma.iter().find(|g| g.k == k && g.stage == stage)
    }

    pub fn expected_entries(&self) -> &[ExpectedEntry] {
        &self.file.expected_tables
    }

    pub fn boundary_fact(&self, k: u32, m: u32, gen: &str, r: u32) -> Option<&BoundaryFact> {
        self.file.facts.iter().find_map(|f| match f {
            FactRecord::Boundary(b)
                if b.k == k
                    && b.m == m
                    && b.gen == gen
                    && RCond::parse(&b.r_cond).expect("validated").matches(r) =>
            {
                Some(b)
            }
            _ => None,
        })
    }

    pub fn jgroup_fact(&self, k: u32, stage: &str, m: u32, r: u32) -> Option<&JGroupFact> {
        self.file.facts.iter().find_map(|f| match f {
            FactRecord::JGroup(j)
                if j.k == k
                    && j.stage == stage
                    && j.m == m
                    && RCond::parse(&j.r_cond).expect("validated").matches(r) =>
            {
                Some(j)
            }
            _ => None,
        })
    }

    pub fn extension_fact(&self, n: u32, i: u32, r: u32) -> Option<&ExtensionFact> {
        self.file.facts.iter().find_map(|f| match f {
            FactRecord::Extension(e)
                if e.n == n
                    && e.i == i
                    && RCond::parse(&e.r_cond).expect("validated").matches(r) =>
            {
                Some(e)
            }
            _ => None,
        })
    }

    pub fn imported_fact(&self, n: u32, i: u32, r: u32) -> Option<&ImportedFact> {
        self.file.facts.iter().find_map(|f| match f {
            FactRecord::Imported(imp)
                if imp.n == n
                    && imp.i == i
                    && RCond::parse(&imp.r_cond).expect("validated").matches(r) =>
            {
                Some(imp)
            }
            _ => None,
        })
    }

    /// Declared generator name of a sphere-group summand, if `name` is one.
    fn declared_sphere_summand(&self, name: &str) -> Option<(&SphereGroupRecord, &SphereSummand)> {
        for sg in &self.file.sphere_groups {
            for s in &sg.summands {
                if s.name == name {
                    return Some((sg, s));
                }
            }
        }
        None
    }

    /// Semantic validation pass; an empty report is the release gate.
    pub fn validate(&self) -> Vec<Finding> {
        let mut findings = Vec::new();
        fn push(findings: &mut Vec<Finding>, record_id: &str, category: &str, message: String) {
            findings.push(Finding {
                record_id: record_id.to_string(),
                category: category.to_string(),
                message,
            });
        }
        let tab = &self.symtab;
        let chain = |w: &Word| w.chains();

        // Degree chains and order conflicts on composition facts.
        for f in &self.file.facts {
            match f {
                FactRecord::Composition(c) => {
                    let left = words::parse_word(&c.left, tab).expect("validated at load");
                    let right = words::parse_word(&c.right, tab).expect("validated at load");
                    if left.source_dim() != right.target_dim() {
                        push(
                            &mut findings,
                            &c.id,
                            "degree chain",
                            format!(
                                "'{}' (source {:?}) does not chain onto '{}' (target {:?})",
                                c.left,
                                left.source_dim(),
                                c.right,
                                right.target_dim()
                            ),
                        );
                    }
                    for t in &c.result {
                        let w = words::parse_word(&t.word, tab).expect("validated at load");
                        if !chain(&w) {
                            push(
                                &mut findings,
                                &c.id,
                                "degree chain",
                                format!("result word '{}' does not chain", t.word),
                            );
                        }
                    }
                    if let Some(order_claim) = &c.order {
                        self.check_order_claim(c, order_claim, &mut findings);
                    }
                }
                FactRecord::Degree(d) => {
                    for t in &d.result {
                        let w = words::parse_word(&t.word, tab).expect("validated at load");
                        if !chain(&w) {
                            push(
                                &mut findings,
                                &d.id,
                                "degree chain",
                                format!("result word '{}' does not chain", t.word),
                            );
                        }
                    }
                }
                FactRecord::Suspension(s) => {
                    // Homomorphism check: the suspension image's declared
                    // order must divide the generator's declared order.
                    let src = self.declared_sphere_summand(&s.gen);
                    let dst = self.declared_sphere_summand(&s.result);
                    if let (Some((_, src)), Some((_, dst))) = (src, dst) {
                        if let (Ok(Order::Finite(a)), Ok(Order::Finite(b))) =
                            (order_from_str(&src.order), order_from_str(&dst.order))
                        {
                            if a % b != 0 {
                                push(
                                    &mut findings,
                                    &s.id,
                                    "suspension homomorphism",
                                    format!(
                                        "order {} of '{}' does not kill its suspension '{}' of order {}",
                                        a, s.gen, s.result, b
                                    ),
                                );
                            }
                        }
                    }
                }
                FactRecord::Bracket(b) => {
                    self.check_bracket(b, &mut findings);
                }
                _ => {}
            }
        }

        // Dangling-name scan over fiber-generator references.
        self.dangling_scan(&mut findings);
        findings
    }

    fn check_order_claim(&self, c: &CompositionFact, claim: &str, findings: &mut Vec<Finding>) {
        // The claim is checked when the result is a combination of
        // declared generators of a single curated sphere group.
        let mut group_key: Option<(u32, u32)> = None;
        for t in &c.result {
            match self.declared_sphere_summand(&t.word) {
                Some((sg, _)) => {
                    if group_key.get_or_insert((sg.n, sg.m)) != &(sg.n, sg.m) {
                        return;
                    }
                }
                None => return,
            }
        }
        let Some((n, m)) = group_key else { return };
        let group = self.sphere_group_by_m(n, m).expect("declared above");
        let params = ParamAssignment::canonical();
        for r in [1u32, 2, 3, 4, 8] {
            let mut elem = abelian_core::GroupElement::zero(group.rank());
            for t in &c.result {
                let coef = match rexpr::eval_str(&t.coeff, r, &params) {
                    Ok(v) => v,
                    Err(_) => return,
                };
                let g = group.generator(&t.word).expect("declared above");
                elem = group.add(&elem, &group.scale(coef as i128, &g));
            }
            let actual = group.element_order(&elem);
            let claimed = match rexpr::eval_str(claim, r, &params) {
                Ok(v) if v > 0 => Order::Finite(v as u128),
                _ => return,
            };
            if actual != claimed {
                findings.push(Finding {
                    record_id: c.id.clone(),
                    category: "order conflict".to_string(),
                    message: format!(
                        "claimed order {claimed} but the element has order {actual} in pi_{m}(S^{n}) at r={r}"
                    ),
                });
                return;
            }
        }
    }

    fn check_bracket(&self, b: &BracketFactRecord, findings: &mut Vec<Finding>) {
        let params = ParamAssignment::canonical();
        let rep = self.terms_to_element(&b.representative, 1, &params);
        let rep = match rep {
            Ok(e) => e,
            Err(e) => {
                findings.push(Finding {
                    record_id: b.id.clone(),
                    category: "bracket indeterminacy".to_string(),
                    message: e,
                });
                return;
            }
        };
        if !rep.well_formed() {
            findings.push(Finding {
                record_id: b.id.clone(),
                category: "bracket indeterminacy".to_string(),
                message: "representative is not dimension-coherent".to_string(),
            });
        }
        for ind in &b.indeterminacy {
            match self.terms_to_element(ind, 1, &params) {
                Ok(e) => {
                    if !e.well_formed() {
                        findings.push(Finding {
                            record_id: b.id.clone(),
                            category: "bracket indeterminacy".to_string(),
                            message: "indeterminacy element is not dimension-coherent".to_string(),
                        });
                    }
                }
                Err(e) => findings.push(Finding {
                    record_id: b.id.clone(),
                    category: "bracket indeterminacy".to_string(),
                    message: e,
                }),
            }
        }
    }

    fn dangling_scan(&self, findings: &mut Vec<Finding>) {
        // Names a boundary/extension/jgroup-lift record may reference:
        // declared fiber-skeleton generators ("a-part" names and
        // "lift.<c-part name>" forms) plus sphere summand names.
        let mut declared: HashSet<String> = HashSet::new();
        for sg in &self.file.sphere_groups {
            for s in &sg.summands {
                declared.insert(s.name.clone());
            }
        }
        let mut jgroup_names: HashMap<(u32, u32), HashSet<String>> = HashMap::new();
        for f in &self.file.facts {
            if let FactRecord::JGroup(j) = f {
                let entry = jgroup_names.entry((j.k, j.m)).or_default();
                for s in &j.a_part {
                    entry.insert(s.name.clone());
                    declared.insert(s.name.clone());
                }
                for s in &j.c_part {
                    entry.insert(format!("{LIFT_PREFIX}{}", s.name));
                    declared.insert(format!("{LIFT_PREFIX}{}", s.name));
                }
            }
        }
        let mut dangle = |record_id: &str, name: &str, scope: &str| {
            findings.push(Finding {
                record_id: record_id.to_string(),
                category: "dangling symbol".to_string(),
                message: format!("'{name}' is not declared {scope}"),
            });
        };
        for f in &self.file.facts {
            match f {
                FactRecord::Boundary(b) => {
                    let scope = jgroup_names.get(&(b.k, b.m));
                    for t in &b.result {
                        let known = scope.map(|s| s.contains(&t.word)).unwrap_or(false);
                        if !known {
                            dangle(
                                &b.id,
                                &t.word,
                                &format!("in any fiber-skeleton group at (k={}, m={})", b.k, b.m),
                            );
                        }
                    }
                }
                FactRecord::JGroup(j) => {
                    let a_names: HashSet<&str> =
                        j.a_part.iter().map(|s| s.name.as_str()).collect();
                    for l in &j.lifts {
                        for t in &l.target {
                            if !a_names.contains(t.word.as_str()) {
                                dangle(&j.id, &t.word, "among the record's coker-side generators");
                            }
                        }
                    }
                }
                FactRecord::Extension(e) => {
                    let scope = jgroup_names.get(&(e.n - 1, e.i));
                    for l in &e.lifts {
                        for t in l {
                            let known = scope.map(|s| s.contains(&t.word)).unwrap_or(false);
                            if !known {
                                dangle(
                                    &e.id,
                                    &t.word,
                                    &format!(
                                        "in any fiber-skeleton group at (k={}, m={})",
                                        e.n - 1,
                                        e.i
                                    ),
                                );
                            }
                        }
                    }
                }
                _ => {}
            }
        }
        // Every symbol mentioned in gamma terms must be declared atomic.
        for g in &self.file.gamma {
            let id = format!("gamma{}.k{}", g.stage, g.k);
            for t in &g.terms {
                for sym in words::symbols_mentioned(&t.word) {
                    if !self.symtab.contains(&sym) {
                        dangle(&id, &sym, "as an atomic symbol");
                    }
                }
            }
        }
    }

    /// Builds a FormalElement from a term list at concrete (r, params).
    pub fn terms_to_element(
        &self,
        terms: &[Term],
        r: u32,
        params: &ParamAssignment,
    ) -> Result<FormalElement, String> {
        let mut out = FormalElement::zero();
        for t in terms {
            let coef = rexpr::eval_str(&t.coeff, r, params).map_err(|e| e.to_string())?;
            if coef == 0 {
                continue;
            }
            let w = words::parse_word(&t.word, &self.symtab).map_err(|e| e.to_string())?;
            out = out.add(&FormalElement::from_terms(vec![(coef, w)]));
        }
        Ok(out)
    }

    /// Concretizes the base at (r, params) as an engine fact source.
    pub fn instantiate(
        &self,
        r: u32,
        params: &ParamAssignment,
    ) -> Result<Instantiated<'_>, String> {
        let mut composition = HashMap::new();
        let mut degree = HashMap::new();
        let mut suspension = HashMap::new();
        let mut hopf = HashMap::new();
        let mut whitehead = HashMap::new();
        let mut bracket = HashMap::new();
        for f in &self.file.facts {
            match f {
                FactRecord::Composition(c) => {
                    let left = words::parse_word(&c.left, &self.symtab)
                        .map_err(|e| e.to_string())?;
                    let right = words::parse_word(&c.right, &self.symtab)
                        .map_err(|e| e.to_string())?;
                    let elem = self.terms_to_element(&c.result, r, params)?;
                    composition.insert((left.key(), right.key()), elem);
                }
                FactRecord::Degree(d) => {
                    let t = rexpr::eval_str(&d.t, r, params).map_err(|e| e.to_string())?;
                    let w = words::parse_word(&d.word, &self.symtab)
                        .map_err(|e| e.to_string())?;
                    let elem = self.terms_to_element(&d.result, r, params)?;
                    degree.insert((t, w.key()), elem);
                }
                FactRecord::Suspension(s) => {
                    let w = words::parse_word(&s.result, &self.symtab)
                        .map_err(|e| e.to_string())?;
                    if w.factors.len() != 1 {
                        return Err(format!(
                            "suspension fact '{}' must resolve to a single factor",
                            s.id
                        ));
                    }
                    suspension.insert(s.gen.clone(), w.factors[0].clone());
                }
                FactRecord::Hopf(h) => {
                    let w = words::parse_word(&h.word, &self.symtab)
                        .map_err(|e| e.to_string())?;
                    let elem = self.terms_to_element(&h.result, r, params)?;
                    hopf.insert(w.key(), elem);
                }
                FactRecord::Whitehead(wf) => {
                    let w = words::parse_word(&wf.key, &self.symtab)
                        .map_err(|e| e.to_string())?;
                    let elem = self.terms_to_element(&wf.result, r, params)?;
                    whitehead.insert(w.key(), elem);
                }
                FactRecord::Bracket(b) => {
                    let rep = self.terms_to_element(&b.representative, r, params)?;
                    let ind = b
                        .indeterminacy
                        .iter()
                        .map(|ts| self.terms_to_element(ts, r, params))
                        .collect::<Result<Vec<_>, _>>()?;
                    bracket.insert(
                        b.key.clone(),
                        BracketFact {
                            representative: rep,
                            indeterminacy: ind,
                        },
                    );
                }
                _ => {}
            }
        }
        Ok(Instantiated {
            base: self,
            composition,
            degree,
            suspension,
            hopf,
            whitehead,
            bracket,
        })
    }

    /// All generator words declared anywhere, keyed for diagnostics.
    pub fn declared_generator_names(&self) -> IndexMap<String, String> {
        let mut out = IndexMap::new();
        for sg in &self.file.sphere_groups {
            for s in &sg.summands {
                out.insert(s.name.clone(), format!("pi_{}(S^{})", sg.m, sg.n));
            }
        }
        for f in &self.file.facts {
            if let FactRecord::JGroup(j) = f {
                for s in &j.a_part {
                    out.insert(s.name.clone(), format!("pi_{}({} k={})", j.m, j.stage, j.k));
                }
                for s in &j.c_part {
                    out.insert(
                        format!("{LIFT_PREFIX}{}", s.name),
                        format!("pi_{}({} k={})", j.m, j.stage, j.k),
                    );
                }
            }
        }
        out
    }
}

/// The fact base concretized at (r, params): an engine fact source.
pub struct Instantiated<'a> {
    base: &'a FactBase,
    composition: HashMap<(String, String), FormalElement>,
    degree: HashMap<(i64, String), FormalElement>,
    suspension: HashMap<String, Factor>,
    hopf: HashMap<String, FormalElement>,
    whitehead: HashMap<String, FormalElement>,
    bracket: HashMap<String, BracketFact>,
}

impl<'a> Instantiated<'a> {
    pub fn base(&self) -> &FactBase {
        self.base
    }
}

impl<'a> FactSource for Instantiated<'a> {
    fn group(&self, space: &SpaceId, m: u32) -> Option<FgAbGroup> {
        match space {
            SpaceId::Sphere(n) => self.base.sphere_group_by_m(*n, m).ok(),
            SpaceId::Named(_) => None,
        }
    }

    fn composition(&self, left_key: &str, right_key: &str) -> Option<FormalElement> {
        self.composition
            .get(&(left_key.to_string(), right_key.to_string()))
            .cloned()
    }

    fn degree(&self, t: i64, word_key: &str) -> Option<FormalElement> {
        self.degree.get(&(t, word_key.to_string())).cloned()
    }

    fn suspension(&self, gen_name: &str) -> Option<Factor> {
        self.suspension.get(gen_name).cloned()
    }

    fn hopf(&self, word_key: &str) -> Option<FormalElement> {
        self.hopf.get(word_key).cloned()
    }

    fn whitehead_expansion(&self, key: &str) -> Option<FormalElement> {
        self.whitehead.get(key).cloned()
    }

    fn bracket(&self, key: &str) -> Option<BracketFact> {
        self.bracket.get(key).cloned()
    }
}
