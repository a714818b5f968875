//! Hodge series of Hilbert schemes of points on a surface, and the
//! comparisons with wreath-product orbifolds.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::{
    euler_product_graded, BigradedPoly, EulerFactor, JsonInt, Monomial, SeriesQ, Truncation,
};
use crate::orbifold::{
    hodge_to_table, table_to_hodge, validate_hodge_table, wreath_series_product, OrbifoldData,
};
use crate::report::ComparisonReport;

/// Hodge table of a smooth surface. Noncompact surfaces carry virtual
/// (compactly supported) tables and skip the symmetry check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceHodge {
    name: String,
    compact: bool,
    hodge: BigradedPoly,
}

/// `{"name": .., "compact": bool, "hodge": [[s, t, h], …]}`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurfaceFile {
    pub name: String,
    pub compact: bool,
    pub hodge: Vec<(i64, i64, JsonInt)>,
}

impl SurfaceHodge {
    pub fn new(name: impl Into<String>, compact: bool, hodge: BigradedPoly) -> Result<Self> {
        let name = name.into();
        validate_hodge_table(&hodge, 2).map_err(|m| Error::InvalidSurface(format!("{name}: {m}")))?;
        if compact && !hodge.is_symmetric() {
            return Err(Error::InvalidSurface(format!(
                "{name}: compact surface table violates h^{{s,t}} = h^{{t,s}}"
            )));
        }
        Ok(SurfaceHodge { name, compact, hodge })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_compact(&self) -> bool {
        self.compact
    }

    pub fn hodge(&self) -> &BigradedPoly {
        &self.hodge
    }

    /// The surface as an orbifold with trivial group.
    pub fn as_trivial_orbifold(&self) -> OrbifoldData {
        OrbifoldData::trivial(self.name.clone(), 2, self.hodge.clone()).expect("validated surface table")
    }

    pub fn from_file(file: &SurfaceFile) -> Result<Self> {
        if let Some((s, t, _)) = file.hodge.iter().find(|(s, t, _)| *s < 0 || *t < 0) {
            return Err(Error::InvalidSurface(format!(
                "{}: negative bidegree ({s}, {t})",
                file.name
            )));
        }
        Self::new(file.name.clone(), file.compact, table_to_hodge(&file.hodge))
    }

    pub fn to_file(&self) -> SurfaceFile {
        SurfaceFile {
            name: self.name.clone(),
            compact: self.compact,
            hodge: hodge_to_table(&self.hodge),
        }
    }

    pub fn from_json_str(text: &str, origin: &str) -> Result<Self> {
        let file: SurfaceFile = serde_json::from_str(text).map_err(|e| Error::json(origin, e))?;
        Self::from_file(&file)
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let (text, origin) = crate::read_text(path.as_ref())?;
        Self::from_json_str(&text, &origin)
    }
}

/// `Σ_n e(X^{[n]}) q^n = ∏_{r≥1} ∏_{s,t} (1 − x^s y^t q^r (xy)^{r−1})^{−e^{s,t}(X)}`.
pub fn goettsche_series(x: &SurfaceHodge, qmax: u32) -> SeriesQ {
    let e = x.hodge.to_virtual().expect("integer exponents");
    euler_product_graded(Truncation::q(qmax), |r| {
        let lift = 2 * (r as i64 - 1);
        e.terms()
            .map(|(s2, t2, c)| EulerFactor::new(Monomial::new(s2 + lift, t2 + lift, r, 0), c.clone()))
            .collect()
    })
    .expect("factors are generated at their own degree")
}

/// Compares the Hilbert-scheme series of `x` with the wreath series of `o`,
/// after checking `h(X) = h(Y, G)`.
pub fn verify_samehodge(o: &OrbifoldData, x: &SurfaceHodge, qmax: u32) -> Result<ComparisonReport> {
    if o.dim() != 2 {
        return Err(Error::NotSurface(o.dim()));
    }
    let title = format!("Hilbert scheme of {} vs wreath orbifold of {}", x.name, o.name());
    if let Some(r) = ComparisonReport::hypothesis_failed(&title, &x.hodge, &o.orbifold_hodge_poly()) {
        return Ok(r);
    }
    Ok(ComparisonReport::compare(
        title,
        &goettsche_series(x, qmax),
        &wreath_series_product(o, qmax),
    ))
}

/// Compares the symmetric-product orbifold series of `x` (an orbifold with
/// only an untwisted sector) with the wreath series of `o`.
pub fn verify_cor1(o: &OrbifoldData, x: &OrbifoldData, qmax: u32) -> Result<ComparisonReport> {
    for d in [o.dim(), x.dim()] {
        if d % 2 == 1 {
            return Err(Error::OddDimension(d));
        }
    }
    if o.dim() != x.dim() {
        return Err(Error::DimensionMismatch(o.dim(), x.dim()));
    }
    let twisted = x
        .sectors()
        .iter()
        .any(|s| !s.identity && !s.components.is_empty());
    if twisted {
        return Err(Error::InvalidOrbifold(format!(
            "{}: resolution data must have only an untwisted sector",
            x.name()
        )));
    }
    let title = format!(
        "symmetric products of {} vs wreath orbifold of {}",
        x.name(),
        o.name()
    );
    if let Some(r) =
        ComparisonReport::hypothesis_failed(&title, &x.orbifold_hodge_poly(), &o.orbifold_hodge_poly())
    {
        return Ok(r);
    }
    Ok(ComparisonReport::compare(
        title,
        &wreath_series_product(x, qmax),
        &wreath_series_product(o, qmax),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::report::Hypothesis;
    use num::BigInt;

    #[test]
    fn first_coefficient_is_the_surface() {
        let k3 = fixtures::k3();
        let g = goettsche_series(&k3, 3);
        assert_eq!(g.coeff(1), k3.hodge().to_virtual().unwrap());
        assert_eq!(g.coeff(2).coeff(1, 1), BigInt::from(21));
        assert_eq!(g.specialize(1, 1).unwrap().coeff(3), BigInt::from(3200));
    }

    #[test]
    fn kummer_and_k3_agree() {
        let r = verify_samehodge(&fixtures::kummer(), &fixtures::k3(), 4).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.degrees.len(), 5);
    }

    #[test]
    fn perturbed_surface_violates_hypothesis() {
        let k3 = fixtures::k3();
        let bumped =
            SurfaceHodge::new("k3+", true, k3.hodge() + &BigradedPoly::from_table([(1, 1, 1)])).unwrap();
        let r = verify_samehodge(&fixtures::kummer(), &bumped, 4).unwrap();
        assert!(!r.passed());
        match &r.hypothesis {
            Hypothesis::Violated { mismatch } => assert_eq!((mismatch.s2, mismatch.t2), (2, 2)),
            Hypothesis::Holds => panic!("expected a violation"),
        }
    }

    #[test]
    fn non_surface_is_rejected() {
        let four = OrbifoldData::trivial("y", 4, BigradedPoly::one()).unwrap();
        assert!(matches!(
            verify_samehodge(&four, &fixtures::k3(), 2),
            Err(Error::NotSurface(4))
        ));
    }

    #[test]
    fn surface_validation() {
        assert!(SurfaceHodge::new("a", true, BigradedPoly::from_table([(1, 0, 1)])).is_err());
        assert!(SurfaceHodge::new("a", false, BigradedPoly::from_table([(1, 0, 1)])).is_ok());
        assert!(SurfaceHodge::new("a", false, BigradedPoly::from_table([(3, 0, 1)])).is_err());
        assert!(
            SurfaceHodge::from_json_str(r#"{"name":"a","compact":true,"hodge":[[0,0,-1]]}"#, "a").is_err()
        );
    }

    #[test]
    fn cor1_checks() {
        let k3 = fixtures::k3().as_trivial_orbifold();
        assert!(verify_cor1(&fixtures::kummer(), &k3, 3).unwrap().passed());
        let four = OrbifoldData::trivial("y", 4, BigradedPoly::one()).unwrap();
        assert!(matches!(
            verify_cor1(&four, &k3, 2),
            Err(Error::DimensionMismatch(4, 2))
        ));
        assert!(verify_cor1(&k3, &fixtures::kummer(), 2).is_err());
    }
}
