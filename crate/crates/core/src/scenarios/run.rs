//! Verification of a case against its expected values.

use std::collections::{BTreeSet, HashMap};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use super::dataset::{Limit, ScenarioCase, SpecializationEntry};
use super::families::sample_family_member;
use crate::error::Result;
use crate::geometry::{
    find_specialization_weight, gin, tangent_dimension, verify_specialization, WeightVector,
    DEFAULT_GIN_TRIALS,
};
use crate::groebner::GradedIdeal;
use crate::hilbert::{lex_segment, monomial_regularity};
use crate::monomial_ideal::{
    enumerate_borel_with_hf, enumerate_saturated_borel_with_hp, nonsat_expansions, MonomialIdeal,
    DEFAULT_NODE_CAP,
};
use crate::ring::MonomialOrder;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub computed: Value,
    pub pass: bool,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub case: String,
    pub checks: Vec<Check>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }
}

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub seed: u64,
    pub gin_trials: usize,
    pub max_weight_entry: i64,
    /// Sample family members and check their generic initial ideals.
    pub families: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            seed: 1,
            gin_trials: DEFAULT_GIN_TRIALS,
            max_weight_entry: 6,
            families: true,
        }
    }
}

fn gens(i: &MonomialIdeal) -> Value {
    json!(i.generator_strings())
}

fn error_value(e: impl std::fmt::Display) -> Value {
    json!({ "error": e.to_string() })
}

fn as_set(list: &[MonomialIdeal]) -> BTreeSet<Vec<String>> {
    list.iter().map(|i| i.generator_strings()).collect()
}

struct Runner<'a> {
    case: &'a ScenarioCase,
    opts: &'a RunOptions,
    checks: Vec<Check>,
    tangent_memo: HashMap<Vec<String>, usize>,
}

impl Runner<'_> {
    fn push(&mut self, name: impl Into<String>, expected: Value, computed: Value, pass: bool) {
        self.checks.push(Check {
            name: name.into(),
            expected,
            computed,
            pass,
        });
    }

    fn tangent(&mut self, ideal: &GradedIdeal) -> usize {
        let key = ideal.generator_strings();
        if let Some(&v) = self.tangent_memo.get(&key) {
            return v;
        }
        let v = tangent_dimension(ideal).dimension;
        self.tangent_memo.insert(key, v);
        v
    }

    /// Index into the case's Borel list of the generic initial ideal.
    fn gin_component(&self, ideal: &GradedIdeal, seed: u64) -> std::result::Result<usize, Value> {
        let g = gin(ideal, &MonomialOrder::Grevlex, seed, self.opts.gin_trials);
        if !g.agreed {
            return Err(
                json!({ "error": "trials disagree", "trials": g.per_trial.iter().map(gens).collect::<Vec<_>>() }),
            );
        }
        self.case
            .borel
            .iter()
            .position(|b| b.ideal == g.ideal)
            .ok_or_else(|| gens(&g.ideal))
    }

    fn borel_and_lex(&mut self) -> Result<u32> {
        let case = self.case;
        let target = case.target()?;
        let expected: Vec<MonomialIdeal> = case.borel.iter().map(|b| b.ideal.clone()).collect();
        let bound = match enumerate_borel_with_hf(&case.ring, &target, None) {
            Ok(e) => {
                let pass = e.complete && as_set(&e.ideals) == as_set(&expected);
                self.push(
                    "borel-ideals",
                    json!(expected.iter().map(gens).collect::<Vec<_>>()),
                    json!(e.ideals.iter().map(gens).collect::<Vec<_>>()),
                    pass,
                );
                e.degree_bound
            }
            Err(err) => {
                self.push(
                    "borel-ideals",
                    json!(expected.iter().map(gens).collect::<Vec<_>>()),
                    error_value(&err),
                    false,
                );
                return Err(err);
            }
        };
        let lex = lex_segment(&case.ring, &target.values(bound));
        let computed = match &lex {
            Ok(l) => gens(l),
            Err(e) => error_value(e),
        };
        let pass = lex.as_ref().is_ok_and(|l| l == case.lex_ideal());
        self.push("lex-segment", gens(case.lex_ideal()), computed, pass);
        Ok(bound)
    }

    fn saturated(&mut self) {
        let case = self.case;
        if case.saturated.is_empty() {
            return;
        }
        let expected: Vec<MonomialIdeal> = case.saturated.iter().map(|s| s.ideal.clone()).collect();
        let exp_value = json!(expected.iter().map(gens).collect::<Vec<_>>());
        match enumerate_saturated_borel_with_hp(
            &case.ring,
            &case.hilbert_polynomial,
            case.saturated_degree_bound,
            DEFAULT_NODE_CAP,
        ) {
            Ok(e) => {
                let pass = e.complete && as_set(&e.ideals) == as_set(&expected);
                self.push(
                    "saturated-ideals",
                    exp_value,
                    json!(e.ideals.iter().map(gens).collect::<Vec<_>>()),
                    pass,
                );
            }
            Err(err) => self.push("saturated-ideals", exp_value, error_value(err), false),
        }
        for s in &case.saturated {
            let r = monomial_regularity(&s.ideal);
            let computed = match &r {
                Ok(v) => json!(v),
                Err(e) => error_value(e),
            };
            self.push(
                format!("regularity:{}", s.label),
                json!(s.regularity),
                computed,
                r == Ok(s.regularity),
            );
        }
    }

    /// Each Borel-fixed ideal saturates to the stated ideal and is recovered
    /// from it by removing Borel-minimal monomials.
    fn saturations(&mut self, bound: u32) -> Result<()> {
        let case = self.case;
        let target = case.target()?;
        for b in &case.borel {
            let sat = b.ideal.saturate();
            let found = case.saturated.iter().find(|s| s.ideal == sat);
            let computed_label = found.map(|s| json!(s.label)).unwrap_or_else(|| gens(&sat));
            let recovered = match nonsat_expansions(&sat, &target, bound) {
                Ok(list) => list.contains(&b.ideal),
                Err(_) => false,
            };
            let pass = found.is_some_and(|s| s.label == b.saturation) && recovered;
            self.push(
                format!("saturation:{}", b.label),
                json!({ "saturation": b.saturation, "recovered": true }),
                json!({ "saturation": computed_label, "recovered": recovered }),
                pass,
            );
        }
        Ok(())
    }

    fn tangents(&mut self) {
        let case = self.case;
        for t in &case.tangent {
            let v = self.tangent(&t.ideal);
            self.push(
                format!("tangent:{}", t.label),
                json!(t.value),
                json!(v),
                v == t.value,
            );
            if let Some(c) = t.component {
                let dim = case.component_dims[c];
                self.push(
                    format!("nonsingular:{}", t.label),
                    json!(dim),
                    json!(v),
                    v == dim,
                );
            }
        }
    }

    fn specialization(&mut self, s: &SpecializationEntry) -> bool {
        let case = self.case;
        let target = &case.borel[case.borel_index(&s.target).expect("validated")].ideal;
        let name = format!("specialization:{}->{}", s.label, s.target);
        let expected =
            json!({ "limit": gens(target), "hilbert": true, "tangent_nondecreasing": true });
        let n = case.ring.nvars();
        let w = match &s.limit {
            Limit::Lex => Ok(WeightVector::with_tie_break(vec![0; n], MonomialOrder::Lex)),
            Limit::Weight(Some(w)) => Ok(WeightVector::new(w.clone())),
            Limit::Weight(None) => find_specialization_weight(
                &s.source,
                target,
                self.opts.max_weight_entry,
                &MonomialOrder::Grevlex,
            ),
        };
        let outcome = w.and_then(|w| verify_specialization(&s.source, target, &w).map(|c| (w, c)));
        match outcome {
            Ok((w, c)) => {
                let limit = crate::geometry::weight_initial_ideal(&s.source, &w)
                    .map(|l| gens(&l))
                    .unwrap_or(Value::Null);
                let weight = match s.limit {
                    Limit::Lex => json!("lex"),
                    Limit::Weight(_) => json!(w.weights),
                };
                let pass = c.holds();
                self.push(
                    name,
                    expected,
                    json!({
                        "limit": limit,
                        "hilbert": c.hilbert_matches,
                        "tangent_nondecreasing": c.tangent_target >= c.tangent_source,
                        "weight": weight,
                        "tangent": [c.tangent_source, c.tangent_target],
                    }),
                    pass,
                );
                pass
            }
            Err(e) => {
                self.push(name, expected, error_value(e), false);
                false
            }
        }
    }

    fn specializations(&mut self) {
        let case = self.case;
        let lex_label = case.borel[0].label.clone();
        let mut on_lex: BTreeSet<usize> = BTreeSet::from([0]);
        let mut unresolved: Vec<Value> = Vec::new();
        for (k, s) in case.specializations.iter().enumerate() {
            let holds = self.specialization(s);
            if holds && s.target == lex_label {
                match self.gin_component(&s.source, self.opts.seed.wrapping_add(1000 + k as u64)) {
                    Ok(c) => {
                        on_lex.insert(c);
                    }
                    Err(v) => unresolved.push(json!({ "source": s.label, "gin": v })),
                }
            }
        }
        let computed = if unresolved.is_empty() {
            json!(on_lex.len())
        } else {
            json!({ "count": on_lex.len(), "unresolved": unresolved })
        };
        let pass = unresolved.is_empty() && on_lex.len() == case.lex_components;
        self.push("lex-components", json!(case.lex_components), computed, pass);
    }

    fn families(&mut self) {
        let case = self.case;
        let jobs: Vec<(usize, String, usize)> = case
            .families
            .iter()
            .enumerate()
            .map(|(k, f)| (k, f.id.clone(), f.component))
            .collect();
        let results: Vec<(String, usize, std::result::Result<usize, Value>)> = jobs
            .par_iter()
            .map(|(k, id, comp)| {
                let seed = self.opts.seed.wrapping_add(*k as u64);
                let r = sample_family_member(case, id, seed)
                    .map_err(error_value)
                    .and_then(|j| self.gin_component(&j, seed));
                (id.clone(), *comp, r)
            })
            .collect();
        for (id, comp, r) in results {
            let expected = gens(&case.borel[comp].ideal);
            match r {
                Ok(c) => self.push(
                    format!("gin:{id}"),
                    expected,
                    gens(&case.borel[c].ideal),
                    c == comp,
                ),
                Err(v) => self.push(format!("gin:{id}"), expected, v, false),
            }
        }
    }

    fn singular_lex(&mut self) {
        let case = self.case;
        let max = case.component_dims.iter().copied().max().unwrap_or(0);
        let v = self.tangent(&case.lex_ideal().to_graded_ideal());
        self.push(
            "singular-lex",
            json!({ "greater_than": max }),
            json!(v),
            v > max,
        );
    }
}

/// Run every check of a case with default options.
pub fn run_case(case: &ScenarioCase) -> VerificationReport {
    run_case_with(case, &RunOptions::default())
}

/// Run the checks in order: Borel-fixed ideals, lex segment, saturated ideals
/// and regularities, saturations, tangent dimensions, specializations and the
/// components through the lex point, generic initial ideals of family
/// members, and finally the singular lex point.
pub fn run_case_with(case: &ScenarioCase, opts: &RunOptions) -> VerificationReport {
    let start = Instant::now();
    let mut r = Runner {
        case,
        opts,
        checks: Vec::new(),
        tangent_memo: HashMap::new(),
    };
    let bound = r.borel_and_lex();
    r.saturated();
    if let Ok(bound) = bound {
        if let Err(e) = r.saturations(bound) {
            r.push("saturations", Value::Null, error_value(e), false);
        }
    }
    r.tangents();
    r.specializations();
    if opts.families {
        r.families();
    }
    r.singular_lex();
    VerificationReport {
        case: case.id.clone(),
        checks: r.checks,
        elapsed: start.elapsed(),
    }
}

/// Run several cases in parallel; reports come back in input order.
pub fn run_cases(cases: &[ScenarioCase], opts: &RunOptions) -> Vec<VerificationReport> {
    cases.par_iter().map(|c| run_case_with(c, opts)).collect()
}
