//! Loading the scenario dataset.
//!
//! The dataset is TOML with one `[[case]]` table per Hilbert function; the
//! schema is described at the top of `data/scenarios.toml`.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::GradedIdeal;
use crate::hilbert::HilbertTarget;
use crate::monomial_ideal::MonomialIdeal;
use crate::parse::{parse_expressions, parse_generators};
use crate::ring::{MonomialOrder, Polynomial, Ring, UniPoly};

/// The dataset shipped with the crate.
pub const BUILTIN_DATASET: &str = include_str!("../../data/scenarios.toml");

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Origin {
    Published,
    Computed,
}

#[derive(Clone, Debug)]
pub struct SaturatedEntry {
    pub label: String,
    pub ideal: MonomialIdeal,
    pub regularity: u32,
    pub origin: Origin,
}

#[derive(Clone, Debug)]
pub struct BorelEntry {
    pub label: String,
    pub ideal: MonomialIdeal,
    /// Label of the saturated entry this ideal saturates to.
    pub saturation: String,
    pub origin: Origin,
}

#[derive(Clone, Debug)]
pub struct TangentEntry {
    pub label: String,
    pub ideal: GradedIdeal,
    pub value: usize,
    /// Index of the component on which the ideal is a nonsingular point.
    pub component: Option<usize>,
    pub origin: Origin,
}

/// How the limit of a specialization is taken.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Limit {
    /// A weight degeneration; the weight is searched for when not given.
    Weight(Option<Vec<i64>>),
    /// The lex initial ideal.
    Lex,
}

#[derive(Clone, Debug)]
pub struct SpecializationEntry {
    pub label: String,
    pub source: GradedIdeal,
    /// Label of a Borel-fixed ideal of the case.
    pub target: String,
    pub limit: Limit,
    pub origin: Origin,
}

/// A parameterized family: symbols in `template` stand for random forms.
#[derive(Clone, Debug)]
pub struct FamilySpec {
    pub id: String,
    pub component: usize,
    /// Symbol names and degrees, in a fixed order.
    pub forms: Vec<(String, u32)>,
    /// Ring of the case followed by the symbols.
    pub template_ring: Ring,
    pub template: Vec<Polynomial>,
}

#[derive(Clone, Debug)]
pub struct ScenarioCase {
    pub id: String,
    pub title: String,
    pub ring: Ring,
    pub hilbert_prefix: Vec<u64>,
    pub hilbert_polynomial: UniPoly,
    pub saturated_degree_bound: u32,
    pub saturated: Vec<SaturatedEntry>,
    pub borel: Vec<BorelEntry>,
    pub tangent: Vec<TangentEntry>,
    pub specializations: Vec<SpecializationEntry>,
    pub component_dims: Vec<usize>,
    pub lex_components: usize,
    pub families: Vec<FamilySpec>,
}

impl ScenarioCase {
    pub fn target(&self) -> Result<HilbertTarget> {
        HilbertTarget::with_polynomial(
            self.ring.nvars(),
            self.hilbert_prefix.clone(),
            self.hilbert_polynomial.clone(),
        )
    }

    /// The lex-segment ideal, listed first among the Borel-fixed ideals.
    pub fn lex_ideal(&self) -> &MonomialIdeal {
        &self.borel[0].ideal
    }

    pub fn borel_index(&self, label: &str) -> Option<usize> {
        self.borel.iter().position(|b| b.label == label)
    }

    pub fn family(&self, id: &str) -> Option<&FamilySpec> {
        self.families.iter().find(|f| f.id == id)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDataset {
    version: u32,
    case: Vec<RawCase>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCase {
    id: String,
    title: String,
    ring: Vec<String>,
    hilbert_prefix: Vec<u64>,
    hilbert_polynomial: String,
    saturated_degree_bound: u32,
    component_dims: Vec<usize>,
    lex_components: usize,
    #[serde(default)]
    saturated: Vec<RawSaturated>,
    borel: Vec<RawBorel>,
    #[serde(default)]
    tangent: Vec<RawTangent>,
    #[serde(default)]
    specialization: Vec<RawSpecialization>,
    #[serde(default)]
    family: Vec<RawFamily>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSaturated {
    label: String,
    generators: String,
    regularity: u32,
    origin: Origin,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBorel {
    label: String,
    generators: String,
    saturation: String,
    origin: Origin,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTangent {
    label: String,
    generators: String,
    value: usize,
    component: Option<usize>,
    origin: Origin,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpecialization {
    label: String,
    source: String,
    target: String,
    #[serde(default)]
    limit: Option<String>,
    #[serde(default)]
    weight: Option<Vec<i64>>,
    origin: Origin,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFamily {
    id: String,
    component: usize,
    forms: BTreeMap<String, u32>,
    generators: String,
}

fn bad(case: &str, message: impl std::fmt::Display) -> Error {
    Error::Dataset(format!("case `{case}`: {message}"))
}

fn graded(case: &str, ring: &Ring, what: &str, text: &str) -> Result<GradedIdeal> {
    let gens = parse_generators(ring, text, &MonomialOrder::Grevlex)
        .map_err(|e| bad(case, format!("{what}: {e}")))?;
    GradedIdeal::new(ring.clone(), gens).map_err(|e| bad(case, format!("{what}: {e}")))
}

fn monomial(case: &str, ring: &Ring, what: &str, text: &str) -> Result<MonomialIdeal> {
    graded(case, ring, what, text)?
        .as_monomial_ideal()
        .ok_or_else(|| bad(case, format!("{what} is not a monomial ideal")))
}

fn unique<'a>(case: &str, what: &str, labels: impl Iterator<Item = &'a str>) -> Result<()> {
    let mut seen = HashSet::new();
    for l in labels {
        if !seen.insert(l) {
            return Err(bad(case, format!("duplicate {what} label `{l}`")));
        }
    }
    Ok(())
}

fn convert(raw: RawCase) -> Result<ScenarioCase> {
    let id = raw.id.clone();
    let ring = Ring::new(&raw.ring).map_err(|e| bad(&id, e))?;
    let hilbert_polynomial = UniPoly::parse(&raw.hilbert_polynomial).map_err(|e| bad(&id, e))?;

    let saturated = raw
        .saturated
        .into_iter()
        .map(|s| {
            Ok(SaturatedEntry {
                ideal: monomial(&id, &ring, &s.label, &s.generators)?,
                label: s.label,
                regularity: s.regularity,
                origin: s.origin,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    unique(&id, "saturated", saturated.iter().map(|s| s.label.as_str()))?;

    if raw.borel.is_empty() {
        return Err(bad(&id, "at least one Borel-fixed ideal is required"));
    }
    let borel = raw
        .borel
        .into_iter()
        .map(|b| {
            if !saturated.iter().any(|s| s.label == b.saturation) {
                return Err(bad(
                    &id,
                    format!("`{}` saturates to unknown `{}`", b.label, b.saturation),
                ));
            }
            Ok(BorelEntry {
                ideal: monomial(&id, &ring, &b.label, &b.generators)?,
                label: b.label,
                saturation: b.saturation,
                origin: b.origin,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    unique(&id, "Borel", borel.iter().map(|b| b.label.as_str()))?;

    let check_component = |c: usize, what: &str| {
        if c >= raw.component_dims.len() || c >= borel.len() {
            Err(bad(
                &id,
                format!("{what} names component {c}, which does not exist"),
            ))
        } else {
            Ok(())
        }
    };

    let tangent = raw
        .tangent
        .into_iter()
        .map(|t| {
            if let Some(c) = t.component {
                check_component(c, &t.label)?;
            }
            Ok(TangentEntry {
                ideal: graded(&id, &ring, &t.label, &t.generators)?,
                label: t.label,
                value: t.value,
                component: t.component,
                origin: t.origin,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let specializations = raw
        .specialization
        .into_iter()
        .map(|s| {
            if !borel.iter().any(|b| b.label == s.target) {
                return Err(bad(
                    &id,
                    format!(
                        "specialization `{}` targets unknown `{}`",
                        s.label, s.target
                    ),
                ));
            }
            let limit = match (s.limit.as_deref(), s.weight) {
                (None | Some("weight"), w) => Limit::Weight(w),
                (Some("lex"), None) => Limit::Lex,
                (Some("lex"), Some(_)) => return Err(bad(&id, "a lex limit takes no weight")),
                (Some(other), _) => return Err(bad(&id, format!("unknown limit `{other}`"))),
            };
            if let Limit::Weight(Some(w)) = &limit {
                if w.len() != ring.nvars() {
                    return Err(bad(
                        &id,
                        format!("weight of `{}` has the wrong length", s.label),
                    ));
                }
            }
            Ok(SpecializationEntry {
                source: graded(&id, &ring, &s.label, &s.source)?,
                label: s.label,
                target: s.target,
                limit,
                origin: s.origin,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let families = raw
        .family
        .into_iter()
        .map(|f| {
            check_component(f.component, &f.id)?;
            let forms: Vec<(String, u32)> = f.forms.into_iter().collect();
            let mut names: Vec<String> = ring.names().to_vec();
            for (s, _) in &forms {
                if names.contains(s) {
                    return Err(bad(&id, format!("family `{}` reuses the name `{s}`", f.id)));
                }
                names.push(s.clone());
            }
            let template_ring = Ring::new(&names).map_err(|e| bad(&id, e))?;
            let template =
                parse_expressions(&template_ring, &f.generators, &MonomialOrder::Grevlex)
                    .map_err(|e| bad(&id, format!("family `{}`: {e}", f.id)))?;
            Ok(FamilySpec {
                id: f.id,
                component: f.component,
                forms,
                template_ring,
                template,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    unique(&id, "family", families.iter().map(|f| f.id.as_str()))?;

    Ok(ScenarioCase {
        id,
        title: raw.title,
        ring,
        hilbert_prefix: raw.hilbert_prefix,
        hilbert_polynomial,
        saturated_degree_bound: raw.saturated_degree_bound,
        saturated,
        borel,
        tangent,
        specializations,
        component_dims: raw.component_dims,
        lex_components: raw.lex_components,
        families,
    })
}

/// Parse a dataset document.
pub fn parse_dataset(text: &str) -> Result<Vec<ScenarioCase>> {
    let raw: RawDataset = toml::from_str(text).map_err(|e| Error::Dataset(e.to_string()))?;
    if raw.version != 1 {
        return Err(Error::Dataset(format!(
            "unsupported dataset version {}",
            raw.version
        )));
    }
    let cases = raw
        .case
        .into_iter()
        .map(convert)
        .collect::<Result<Vec<_>>>()?;
    unique("*", "case", cases.iter().map(|c| c.id.as_str()))?;
    Ok(cases)
}

/// The five built-in cases.
pub fn builtin_cases() -> Vec<ScenarioCase> {
    parse_dataset(BUILTIN_DATASET).expect("built-in dataset is valid")
}

pub fn builtin_case(id: &str) -> Option<ScenarioCase> {
    builtin_cases().into_iter().find(|c| c.id == id)
}
