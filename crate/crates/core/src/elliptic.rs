//! Product expansion `Σ_N p^N χ(Y^N, G_N; q, y) = ∏ (1 − p^n q^m y^l)^{−c(nm, l)}`
//! from a user-supplied coefficient table `c(m, l)`, and its `q = 0`
//! consistency check against the orbifold Hodge series.
//!
//! Series produced here have coefficients in `y` only; they are stored as
//! [`BigradedPoly`] with the `x`-exponent fixed at zero.

use std::collections::BTreeMap;
use std::path::Path;

use num::{BigInt, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::{
    euler_product_graded, BigradedPoly, EulerFactor, JsonInt, Monomial, SeriesQ, Truncation,
};
use crate::orbifold::{wreath_series_product, OrbifoldData};
use crate::report::ComparisonReport;

/// Coefficients `c(m, l)` of `χ(Y; q, y) = Σ c(m, l) q^m y^l`, rows
/// `m = 0 ..= depth`, with `l` stored doubled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenusTable {
    name: String,
    d: u32,
    coeffs: BTreeMap<(u32, i64), BigInt>,
    depth: u32,
}

/// `{"name", "d", "coeffs": [[m, l2, c], …], "qmax"?}`; `qmax` defaults to
/// the largest `m` present and may declare trailing all-zero rows.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenusFile {
    pub name: String,
    pub d: u32,
    pub coeffs: Vec<(u32, i64, JsonInt)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub qmax: Option<u32>,
}

impl GenusTable {
    pub fn new(
        name: impl Into<String>,
        d: u32,
        entries: impl IntoIterator<Item = (u32, i64, BigInt)>,
        depth: Option<u32>,
    ) -> Result<Self> {
        let name = name.into();
        let mut coeffs: BTreeMap<(u32, i64), BigInt> = BTreeMap::new();
        let mut max_m = 0;
        for (m, l2, c) in entries {
            max_m = max_m.max(m);
            *coeffs.entry((m, l2)).or_default() += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        let depth = match depth {
            Some(q) if q < max_m => {
                return Err(Error::InvalidGenus(format!(
                    "{name}: declared qmax {q} but row {max_m} is present"
                )))
            }
            Some(q) => q,
            None => max_m,
        };
        Ok(GenusTable {
            name,
            d,
            coeffs,
            depth,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> u32 {
        self.d
    }

    /// Largest `m` the table covers.
    pub fn depth(&self) -> u32 {
        self.depth
    }

    /// `c(m, l2/2)`.
    pub fn coeff(&self, m: u32, l2: i64) -> BigInt {
        self.coeffs.get(&(m, l2)).cloned().unwrap_or_default()
    }

    /// Row `m` as a Laurent polynomial in `y`.
    pub fn row(&self, m: u32) -> BigradedPoly {
        let mut p = BigradedPoly::zero();
        for (&(_, l2), c) in self.coeffs.range((m, i64::MIN)..=(m, i64::MAX)) {
            p.add_term(0, l2, c.clone());
        }
        p
    }

    pub fn from_file(file: &GenusFile) -> Result<Self> {
        Self::new(
            file.name.clone(),
            file.d,
            file.coeffs.iter().map(|(m, l2, c)| (*m, *l2, c.0.clone())),
            file.qmax,
        )
    }

    pub fn to_file(&self) -> GenusFile {
        GenusFile {
            name: self.name.clone(),
            d: self.d,
            coeffs: self
                .coeffs
                .iter()
                .map(|(&(m, l2), c)| (m, l2, JsonInt(c.clone())))
                .collect(),
            qmax: Some(self.depth),
        }
    }

    pub fn from_json_str(text: &str, origin: &str) -> Result<Self> {
        let file: GenusFile = serde_json::from_str(text).map_err(|e| Error::json(origin, e))?;
        Self::from_file(&file)
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let (text, origin) = crate::read_text(path.as_ref())?;
        Self::from_json_str(&text, &origin)
    }
}

/// `χ_{−y}` specialization of a Hodge polynomial shifted by `y^{−shift2/2}`:
/// `y^{−shift2/2} Σ (−1)^t (−y)^s h^{s,t}`, returned as a polynomial in `y`.
fn chi_y_polynomial(h: &BigradedPoly, shift2: i64) -> Result<BigradedPoly> {
    let e = h.to_virtual()?;
    let mut out = BigradedPoly::zero();
    for (s2, _, c) in e.terms() {
        out.add_term(0, s2 - shift2, c.clone());
    }
    Ok(out)
}

/// Row `m = 0`: `χ(Y; 0, y) = y^{−d/2} Σ_{s,t} (−1)^t (−y)^s h^{s,t}(Y)`.
pub fn chi_y0(h: &BigradedPoly, d: u32) -> Result<GenusTable> {
    let row = chi_y_polynomial(h, d as i64)?;
    GenusTable::new(
        "chi_y",
        d,
        row.terms()
            .map(|(_, l2, c)| (0, l2, c.clone()))
            .collect::<Vec<_>>(),
        Some(0),
    )
}

/// Expands `∏_{n≥1, m≥0, l} (1 − p^n q^m y^l)^{−c(nm, l)}` to `p ≤ pmax`,
/// `q ≤ qmax`. Every factor in the box needs row `nm` of the table.
pub fn dmvv_expand(t: &GenusTable, pmax: u32, qmax: u32) -> Result<SeriesQ> {
    let missing = (1..=pmax)
        .flat_map(|n| (0..=qmax).map(move |m| (n, m)))
        .filter(|&(n, m)| (n as u64) * (m as u64) > t.depth as u64)
        .min_by_key(|&(n, m)| ((n as u64) * (m as u64), n));
    if let Some((n, m)) = missing {
        return Err(Error::MissingGenusRow {
            row: n as u64 * m as u64,
            depth: t.depth,
            n,
            m,
        });
    }
    euler_product_graded(Truncation::qp(qmax, pmax), |n| {
        let mut factors = Vec::new();
        for m in 0..=qmax {
            for (_, l2, c) in t.row(n * m).terms() {
                factors.push(EulerFactor::new(Monomial::new(0, l2, m, n), c.clone()));
            }
        }
        factors
    })
}

/// Checks the `q = 0` slice of the product against the `χ_y` specialization
/// of the wreath Hodge series: the coefficient `P_n(x, y)` of `q^n` maps to
/// `y^{−nd/2} Σ (−1)^t (−y)^s h^{s,t}` of `p^n`. Row 0 is derived from `o`.
pub fn verify_q0_consistency(o: &OrbifoldData, pmax: u32) -> Result<ComparisonReport> {
    let table = chi_y0(&o.orbifold_hodge_poly(), o.dim())?;
    verify_q0_with_table(&table, o, pmax)
}

/// As [`verify_q0_consistency`], with row 0 taken from a supplied table; the
/// hypothesis is that this row is the `χ_y` genus of `o`.
pub fn verify_q0_with_table(t: &GenusTable, o: &OrbifoldData, pmax: u32) -> Result<ComparisonReport> {
    let d = o.dim();
    if t.dim() != d {
        return Err(Error::DimensionMismatch(t.dim(), d));
    }
    let title = format!(
        "q = 0 product of {} vs chi_y of wreath Hodge series for {}",
        t.name(),
        o.name()
    );
    let expected_row = chi_y0(&o.orbifold_hodge_poly(), d)?.row(0);
    if let Some(r) = ComparisonReport::hypothesis_failed(&title, &t.row(0), &expected_row) {
        return Ok(r);
    }
    let side_a = dmvv_expand(t, pmax, 0)?;

    let hodge_series = wreath_series_product(o, pmax);
    let mut side_b = SeriesQ::zero(Truncation::qp(0, pmax));
    for n in 0..=pmax {
        // P_n is already virtual: keep Σ e^{s,t} y^s, then shift by y^{−nd/2}
        let mut row = BigradedPoly::zero();
        for (s2, _, c) in hodge_series.coeff(n).terms() {
            row.add_term(0, s2 - (n * d) as i64, c.clone());
        }
        side_b.set(0, n, row);
    }
    Ok(ComparisonReport::compare(title, &side_a, &side_b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::laurent::euler_number_series;

    #[test]
    fn chi_y0_examples() {
        let point = chi_y0(&BigradedPoly::one(), 0).unwrap();
        assert_eq!(point.row(0), BigradedPoly::one());

        let k3 = chi_y0(fixtures::k3().hodge(), 2).unwrap();
        let expected = BigradedPoly::from_table([(0, -1, 2), (0, 0, 20), (0, 1, 2)]);
        assert_eq!(k3.row(0), expected);
        assert_eq!(k3.row(0).eval_signs(1, 1).unwrap(), BigInt::from(24));

        let cp2z3 = chi_y0(&fixtures::cp2_z3().orbifold_hodge_poly(), 2).unwrap();
        assert_eq!(
            cp2z3.row(0),
            BigradedPoly::from_table([(0, -1, 1), (0, 0, 7), (0, 1, 1)])
        );
        assert_eq!(cp2z3.row(0).eval_signs(1, 1).unwrap(), BigInt::from(9));
    }

    #[test]
    fn odd_dimension_gives_half_integer_powers() {
        // a curve of genus 1: h = 1 + x + y + xy, d = 1
        let h = BigradedPoly::from_table([(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)]);
        let row = chi_y0(&h, 1).unwrap().row(0);
        // y^{-1/2}(1 - 1 - y + y) = 0
        assert!(row.is_zero());
        let p1 = chi_y0(&BigradedPoly::from_table([(0, 0, 1), (1, 1, 1)]), 1)
            .unwrap()
            .row(0);
        assert_eq!(
            p1,
            &BigradedPoly::monomial(0, -1, 1) + &BigradedPoly::monomial(0, 1, 1)
        );
    }

    #[test]
    fn first_p_coefficient_is_the_genus() {
        let t = fixtures::k3_elliptic_genus();
        let s = dmvv_expand(&t, 1, 2).unwrap();
        for m in 0..=2 {
            assert_eq!(s.coeff_qp(m, 1), t.row(m));
        }
    }

    #[test]
    fn constant_genus_reduces_to_euler_product() {
        let t = GenusTable::new("e", 2, [(0, 0, BigInt::from(5))], None).unwrap();
        let s = dmvv_expand(&t, 5, 0).unwrap();
        let expected = euler_number_series(&BigInt::from(5), 5);
        for (n, a) in expected.iter().enumerate() {
            assert_eq!(s.coeff_qp(0, n as u32), BigradedPoly::constant(a.clone()));
        }
    }

    #[test]
    fn missing_rows_are_reported() {
        let t = fixtures::k3_elliptic_genus();
        match dmvv_expand(&t, 2, 2) {
            Err(Error::MissingGenusRow { row, depth, n, m }) => {
                assert_eq!((row, depth, n, m), (4, 2, 2, 2));
            }
            other => panic!("expected missing row, got {other:?}"),
        }
        assert!(dmvv_expand(&t, 1, 2).is_ok());
    }

    #[test]
    fn q0_rows_only_when_higher_rows_vanish() {
        let t = chi_y0(fixtures::k3().hodge(), 2).unwrap();
        let padded = GenusTable::new(
            "k3q0",
            2,
            t.to_file().coeffs.iter().map(|(m, l, c)| (*m, *l, c.0.clone())),
            Some(6),
        )
        .unwrap();
        let a = dmvv_expand(&padded, 2, 0).unwrap();
        let b = dmvv_expand(&padded, 2, 3).unwrap();
        for ((q, p), c) in b.iter() {
            if q == 0 {
                assert_eq!(&a.coeff_qp(0, p), c);
            } else {
                panic!("unexpected q^{q} term");
            }
        }
    }

    #[test]
    fn supplied_table_is_checked_against_the_orbifold() {
        let k3 = fixtures::k3_elliptic_genus();
        assert!(verify_q0_with_table(&k3, &fixtures::kummer(), 3)
            .unwrap()
            .passed());
        let r = verify_q0_with_table(&k3, &fixtures::cp2_z3(), 3).unwrap();
        assert!(!r.passed());
        assert!(r.degrees.is_empty());
    }

    #[test]
    fn kummer_q0_consistency() {
        let r = verify_q0_consistency(&fixtures::kummer(), 3).unwrap();
        assert!(r.passed(), "{r}");
    }
}
