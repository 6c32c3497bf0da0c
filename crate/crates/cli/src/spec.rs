//! Ring specification files (JSON, `"schema": 1`).

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use coxgor_core::polyring::{format_polynomial, parse_polynomial};
use coxgor_core::{GradedRing, GroupElement, GroupSpec, IdealPresentation, OrderSpec, Polynomial, Rational, Role};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const SCHEMA: u32 = 1;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub schema: u32,
    pub group: GroupJson,
    pub variables: Vec<VariableJson>,
    #[serde(default)]
    pub order: OrderJson,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub polynomials: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub ideals: BTreeMap<String, IdealJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupJson {
    pub free_rank: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub moduli: Vec<i64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VariableJson {
    pub name: String,
    pub degree: String,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrderJson {
    #[serde(default)]
    pub mode: OrderMode,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub functionals: Vec<Vec<String>>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderMode {
    #[default]
    Semigroup,
    Componentwise,
    Functional,
}

/// Which side of the apolarity pairing a name lives on.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    /// The declared polynomial ring.
    #[default]
    S,
    /// Its differential partner, with case-swapped variable names.
    Q,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealJson {
    #[serde(default)]
    pub ring: Side,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub generators: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub spans: Vec<String>,
    /// Name of a polynomial on the other side; the ideal then contains its annihilator.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub apolar: Option<String>,
}

/// A spec file resolved against its ring.
pub struct Loaded {
    pub file: SpecFile,
    pub s: Arc<GradedRing>,
    pub q: Arc<GradedRing>,
}

impl Loaded {
    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))?;
        let file: SpecFile = serde_json::from_str(&text).map_err(|e| CliError::Json(path.display().to_string(), e))?;
        Self::from_file(file)
    }

    pub fn from_file(file: SpecFile) -> Result<Self, CliError> {
        if file.schema != SCHEMA {
            return Err(CliError::Spec(format!("schema: unsupported version {}, expected {SCHEMA}", file.schema)));
        }
        let group = GroupSpec::new(file.group.free_rank, file.group.moduli.clone()).map_err(|e| CliError::core("group", e))?;
        let mut names = Vec::new();
        let mut degrees = Vec::new();
        for (i, v) in file.variables.iter().enumerate() {
            let d = group
                .parse_element(&v.degree)
                .map_err(|e| CliError::core(&format!("variables[{i}].degree"), e))?;
            names.push(v.name.clone());
            degrees.push(d);
        }
        let order = match file.order.mode {
            OrderMode::Semigroup => OrderSpec::Semigroup,
            OrderMode::Componentwise => OrderSpec::componentwise(group.free_rank()),
            OrderMode::Functional => {
                let mut rows = Vec::new();
                for (i, row) in file.order.functionals.iter().enumerate() {
                    let parsed: Result<Vec<Rational>, _> = row.iter().map(|c| c.parse::<Rational>()).collect();
                    rows.push(parsed.map_err(|e| CliError::Spec(format!("order.functionals[{i}]: {e}")))?);
                }
                OrderSpec::functional(rows).map_err(|e| CliError::core("order", e))?
            }
        };
        let s = GradedRing::new(names, degrees, group, order, Role::Polynomial).map_err(|e| CliError::core("variables", e))?;
        let q = s.dual();
        Ok(Loaded { file, s, q })
    }

    pub fn ring(&self, side: Side) -> &Arc<GradedRing> {
        match side {
            Side::S => &self.s,
            Side::Q => &self.q,
        }
    }

    pub fn element(&self, what: &str, text: &str) -> Result<GroupElement, CliError> {
        self.s.group().parse_element(text).map_err(|e| CliError::core(what, e))
    }

    /// A named polynomial, read in whichever ring declares all of its names.
    pub fn polynomial(&self, name: &str) -> Result<Polynomial, CliError> {
        let text = self
            .file
            .polynomials
            .get(name)
            .ok_or_else(|| CliError::Spec(format!("polynomials: no polynomial named `{name}`")))?;
        self.parse_either(&format!("polynomials.{name}"), text)
    }

    pub fn parse_either(&self, what: &str, text: &str) -> Result<Polynomial, CliError> {
        parse_polynomial(&self.s, text)
            .or_else(|first| parse_polynomial(&self.q, text).map_err(|_| first))
            .map_err(|e| CliError::core(what, e))
    }

    pub fn parse_in(&self, side: Side, what: &str, text: &str) -> Result<Polynomial, CliError> {
        parse_polynomial(self.ring(side), text).map_err(|e| CliError::core(what, e))
    }

    pub fn ideal(&self, name: &str) -> Result<IdealPresentation, CliError> {
        let spec = self
            .file
            .ideals
            .get(name)
            .ok_or_else(|| CliError::Spec(format!("ideals: no ideal named `{name}`")))?;
        let ring = self.ring(spec.ring);
        let here = format!("ideals.{name}");
        let mut ideal = IdealPresentation::zero(ring);
        for (i, g) in spec.generators.iter().enumerate() {
            let p = self.parse_in(spec.ring, &format!("{here}.generators[{i}]"), g)?;
            ideal.push_generator(p).map_err(|e| CliError::core(&format!("{here}.generators[{i}]"), e))?;
        }
        for (i, h) in spec.spans.iter().enumerate() {
            let d = self.element(&format!("{here}.spans[{i}]"), h)?;
            ideal.push_span(d).map_err(|e| CliError::core(&format!("{here}.spans[{i}]"), e))?;
        }
        if let Some(f) = &spec.apolar {
            let poly = self.polynomial(f)?;
            let other = match spec.ring {
                Side::S => Side::Q,
                Side::Q => Side::S,
            };
            let poly = poly
                .reinterpret(self.ring(other))
                .map_err(|e| CliError::core(&format!("{here}.apolar"), e))?;
            ideal.set_apolar(&poly).map_err(|e| CliError::core(&format!("{here}.apolar"), e))?;
        }
        Ok(ideal)
    }

    /// The same ring, carrying a single derived ideal.
    pub fn derived(&self, name: &str, ideal: &IdealPresentation) -> SpecFile {
        let side = if Arc::ptr_eq(ideal.ring(), &self.s) || ideal.ring().names() == self.s.names() {
            Side::S
        } else {
            Side::Q
        };
        let group = self.s.group();
        let mut polynomials = BTreeMap::new();
        let apolar = ideal.apolar().map(|f| {
            let key = format!("{name}_dual");
            polynomials.insert(key.clone(), format_polynomial(f));
            key
        });
        let entry = IdealJson {
            ring: side,
            generators: ideal.generators().iter().map(format_polynomial).collect(),
            spans: ideal.spans().iter().map(|h| group.format(h)).collect(),
            apolar,
        };
        SpecFile {
            schema: SCHEMA,
            group: self.file.group.clone(),
            variables: self.file.variables.clone(),
            order: self.file.order.clone(),
            polynomials,
            ideals: BTreeMap::from([(name.to_string(), entry)]),
        }
    }
}
