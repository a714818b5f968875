//! Sector data for a global quotient `Y/G` and the orbifold Hodge
//! polynomial built from it.
//!
//! The geometry never enters directly: each conjugacy class lists the
//! components of its fixed locus modulo the centralizer, each with a Hodge
//! table and an integer shift (age). Everything downstream is computed from
//! those tables.

mod series;

use std::collections::BTreeSet;
use std::path::Path;

use num::rational::Ratio;
use num::{BigInt, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::{BigradedPoly, JsonInt};

pub use series::{symmetric_quotient_series, wreath_series_direct, wreath_series_product, wreath_shift};

/// One component `Y^c_α / Z_G(c)` of a sector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectorComponent {
    pub label: String,
    pub shift: u32,
    /// Hodge polynomial (not virtual) with integer exponents.
    pub hodge: BigradedPoly,
}

impl SectorComponent {
    pub fn new(label: impl Into<String>, shift: u32, hodge: BigradedPoly) -> Self {
        SectorComponent {
            label: label.into(),
            shift,
            hodge,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sector {
    pub class: String,
    pub identity: bool,
    pub components: Vec<SectorComponent>,
}

impl Sector {
    pub fn new(class: impl Into<String>, identity: bool, components: Vec<SectorComponent>) -> Self {
        Sector {
            class: class.into(),
            identity,
            components,
        }
    }
}

/// Validated sector data of a `d`-dimensional orbifold, `d` even.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbifoldData {
    name: String,
    dim: u32,
    sectors: Vec<Sector>,
}

impl OrbifoldData {
    pub fn new(name: impl Into<String>, dim: u32, sectors: Vec<Sector>) -> Result<Self> {
        let name = name.into();
        if dim == 0 {
            return Err(Error::InvalidOrbifold(format!(
                "{name}: dimension must be positive"
            )));
        }
        if dim % 2 == 1 {
            return Err(Error::OddDimension(dim));
        }
        let identities = sectors.iter().filter(|s| s.identity).count();
        if identities != 1 {
            return Err(Error::InvalidOrbifold(format!(
                "{name}: expected exactly one identity sector, found {identities}"
            )));
        }
        let mut seen = BTreeSet::new();
        for sector in &sectors {
            if !seen.insert(sector.class.as_str()) {
                return Err(Error::InvalidOrbifold(format!(
                    "{name}: class `{}` listed twice",
                    sector.class
                )));
            }
            for comp in &sector.components {
                if sector.identity && comp.shift != 0 {
                    return Err(Error::InvalidOrbifold(format!(
                        "{name}: identity component `{}` has shift {}",
                        comp.label, comp.shift
                    )));
                }
                validate_hodge_table(&comp.hodge, dim).map_err(|msg| {
                    Error::InvalidOrbifold(format!("{name}: component `{}`: {msg}", comp.label))
                })?;
            }
        }
        Ok(OrbifoldData { name, dim, sectors })
    }

    /// Orbifold of a space with the trivial group: one untwisted component.
    pub fn trivial(name: impl Into<String>, dim: u32, hodge: BigradedPoly) -> Result<Self> {
        let name = name.into();
        let comp = SectorComponent::new(name.clone(), 0, hodge);
        Self::new(name, dim, vec![Sector::new("c0", true, vec![comp])])
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn sectors(&self) -> &[Sector] {
        &self.sectors
    }

    pub fn untwisted(&self) -> &Sector {
        self.sectors.iter().find(|s| s.identity).expect("validated")
    }

    pub fn components(&self) -> impl Iterator<Item = &SectorComponent> {
        self.sectors.iter().flat_map(|s| s.components.iter())
    }

    /// `h(Y/G)`: the untwisted sector alone.
    pub fn quotient_hodge_poly(&self) -> BigradedPoly {
        self.untwisted()
            .components
            .iter()
            .fold(BigradedPoly::zero(), |acc, c| &acc + &c.hodge)
    }

    /// `H(Y,G; x,y) = Σ_c Σ_α h(Y^c_α/Z_c)·(xy)^{F^c_α}`.
    pub fn orbifold_hodge_poly(&self) -> BigradedPoly {
        self.components().fold(BigradedPoly::zero(), |acc, c| {
            &acc + &c.hodge.twist(c.shift as i64)
        })
    }

    /// `e(Y,G; x,y) = Σ (−1)^{s+t} h^{s,t}(Y,G) x^s y^t`.
    pub fn orbifold_virtual_poly(&self) -> BigradedPoly {
        self.orbifold_hodge_poly()
            .to_virtual()
            .expect("validated tables have integer exponents")
    }

    /// All component tables satisfy `h^{s,t} = h^{t,s}`.
    pub fn is_hodge_symmetric(&self) -> bool {
        self.components().all(|c| c.hodge.is_symmetric())
    }

    /// Every nonzero `h^{s,t}` has `s + t` even.
    pub fn is_purely_even(&self) -> bool {
        self.components()
            .all(|c| c.hodge.terms().all(|(s2, t2, _)| ((s2 + t2) / 2) % 2 == 0))
    }

    pub fn from_file(file: &OrbifoldFile) -> Result<Self> {
        let mut sectors = Vec::new();
        for s in &file.sectors {
            let mut components = Vec::new();
            for c in &s.components {
                components.push(SectorComponent::new(
                    c.label.clone(),
                    c.resolve_shift()?,
                    c.hodge_poly()?,
                ));
            }
            sectors.push(Sector::new(s.class.clone(), s.identity, components));
        }
        Self::new(file.name.clone(), file.dim, sectors)
    }

    pub fn to_file(&self) -> OrbifoldFile {
        OrbifoldFile {
            name: self.name.clone(),
            dim: self.dim,
            sectors: self
                .sectors
                .iter()
                .map(|s| SectorFile {
                    class: s.class.clone(),
                    identity: s.identity,
                    components: s
                        .components
                        .iter()
                        .map(|c| ComponentFile {
                            label: c.label.clone(),
                            shift: Some(serde_json::Number::from(c.shift)),
                            weights: None,
                            hodge: hodge_to_table(&c.hodge),
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn from_json_str(text: &str, origin: &str) -> Result<Self> {
        let file: OrbifoldFile = serde_json::from_str(text).map_err(|e| Error::json(origin, e))?;
        Self::from_file(&file)
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let (text, origin) = crate::read_text(path.as_ref())?;
        Self::from_json_str(&text, &origin)
    }
}

/// Checks a Hodge table: nonnegative, integer exponents in `[0, d]²`.
pub(crate) fn validate_hodge_table(hodge: &BigradedPoly, dim: u32) -> std::result::Result<(), String> {
    if !hodge.has_integer_exponents() {
        return Err("Hodge exponents must be integers".into());
    }
    let d2 = 2 * dim as i64;
    for (s2, t2, c) in hodge.terms() {
        if c.is_negative() {
            return Err(format!("negative Hodge number {c} at ({}, {})", s2 / 2, t2 / 2));
        }
        if !(0..=d2).contains(&s2) || !(0..=d2).contains(&t2) {
            return Err(format!("bidegree ({}, {}) outside [0, {dim}]²", s2 / 2, t2 / 2));
        }
    }
    Ok(())
}

pub(crate) fn hodge_to_table(p: &BigradedPoly) -> Vec<(i64, i64, JsonInt)> {
    p.terms()
        .map(|(s2, t2, c)| (s2 / 2, t2 / 2, JsonInt(c.clone())))
        .collect()
}

pub(crate) fn table_to_hodge(table: &[(i64, i64, JsonInt)]) -> BigradedPoly {
    let mut p = BigradedPoly::zero();
    for (s, t, c) in table {
        p.add_term(2 * s, 2 * t, c.0.clone());
    }
    p
}

/// `F = Σ θ_j` for rotation weights `θ_j ∈ [0, 1)`.
pub fn shift_from_weights(theta: &[Ratio<i64>]) -> Result<Ratio<i64>> {
    let one = Ratio::from_integer(1);
    for th in theta {
        if *th < Ratio::zero() || *th >= one {
            return Err(Error::WeightOutOfRange(th.to_string()));
        }
    }
    Ok(theta.iter().fold(Ratio::zero(), |acc, th| acc + th))
}

/// `{"name", "dim", "sectors": [{"class", "identity", "components": [..]}]}`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrbifoldFile {
    pub name: String,
    pub dim: u32,
    pub sectors: Vec<SectorFile>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SectorFile {
    pub class: String,
    #[serde(default)]
    pub identity: bool,
    pub components: Vec<ComponentFile>,
}

/// A component gives its shift directly, or as rotation weights
/// (`["1/3", "2/3"]`) whose sum must be an integer; both may be given if
/// they agree.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComponentFile {
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shift: Option<serde_json::Number>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<String>>,
    pub hodge: Vec<(i64, i64, JsonInt)>,
}

impl ComponentFile {
    fn resolve_shift(&self) -> Result<u32> {
        let non_integer = |value: String| Error::NonIntegerShift {
            label: self.label.clone(),
            value,
        };
        let direct = match &self.shift {
            Some(n) => Some(
                n.as_u64()
                    .and_then(|v| u32::try_from(v).ok())
                    .ok_or_else(|| non_integer(n.to_string()))?,
            ),
            None => None,
        };
        let from_weights = match &self.weights {
            Some(ws) => {
                let theta = ws
                    .iter()
                    .map(|w| {
                        w.trim()
                            .parse::<Ratio<i64>>()
                            .map_err(|_| Error::WeightOutOfRange(w.clone()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let f = shift_from_weights(&theta)?;
                if !f.is_integer() {
                    return Err(non_integer(f.to_string()));
                }
                Some(*f.numer() as u32)
            }
            None => None,
        };
        match (direct, from_weights) {
            (Some(a), Some(b)) if a != b => Err(Error::InvalidOrbifold(format!(
                "component `{}`: shift {a} disagrees with weights (sum {b})",
                self.label
            ))),
            (Some(a), _) | (None, Some(a)) => Ok(a),
            (None, None) => Err(Error::InvalidOrbifold(format!(
                "component `{}` needs a shift or weights",
                self.label
            ))),
        }
    }

    fn hodge_poly(&self) -> Result<BigradedPoly> {
        if let Some((s, t, _)) = self.hodge.iter().find(|(s, t, _)| *s < 0 || *t < 0) {
            return Err(Error::InvalidOrbifold(format!(
                "component `{}`: negative bidegree ({s}, {t})",
                self.label
            )));
        }
        if let Some((s, t, c)) = self.hodge.iter().find(|(_, _, c)| c.0 < BigInt::zero()) {
            return Err(Error::InvalidOrbifold(format!(
                "component `{}`: negative Hodge number {} at ({s}, {t})",
                self.label, c.0
            )));
        }
        Ok(table_to_hodge(&self.hodge))
    }
}
