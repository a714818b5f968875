use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, One, Zero};
use serde::{Deserialize, Serialize};

use super::poly::BigradedPoly;
use crate::error::{Error, Result};

/// Truncation box: `q ≤ qmax` and, for bivariate series, `p ≤ pmax`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Truncation {
    pub qmax: u32,
    pub pmax: Option<u32>,
}

impl Truncation {
    pub fn q(qmax: u32) -> Self {
        Truncation { qmax, pmax: None }
    }

    pub fn qp(qmax: u32, pmax: u32) -> Self {
        Truncation {
            qmax,
            pmax: Some(pmax),
        }
    }

    pub fn contains(&self, q: u32, p: u32) -> bool {
        q <= self.qmax && p <= self.pmax.unwrap_or(0)
    }

    /// All `(q, p)` in the box, p-major.
    pub fn degrees(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (0..=self.pmax.unwrap_or(0)).flat_map(move |p| (0..=self.qmax).map(move |q| (q, p)))
    }
}

/// `x^{x2/2} y^{y2/2} q^q p^p` with unit coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub x2: i64,
    pub y2: i64,
    pub q: u32,
    pub p: u32,
}

impl Monomial {
    pub fn new(x2: i64, y2: i64, q: u32, p: u32) -> Self {
        Monomial { x2, y2, q, p }
    }
}

/// One factor `(1 − M)^{−exponent}` of an Euler product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerFactor {
    pub monomial: Monomial,
    pub exponent: BigInt,
}

impl EulerFactor {
    pub fn new(monomial: Monomial, exponent: impl Into<BigInt>) -> Self {
        EulerFactor {
            monomial,
            exponent: exponent.into(),
        }
    }
}

/// `((q, p), (s2, t2, left, right))` for one disagreeing monomial.
pub type CoeffDifference = ((u32, u32), (i64, i64, BigInt, BigInt));

/// Truncated power series in `q` (optionally `p`) over [`BigradedPoly`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesQ {
    trunc: Truncation,
    coeffs: BTreeMap<(u32, u32), BigradedPoly>,
}

impl SeriesQ {
    pub fn zero(trunc: Truncation) -> Self {
        SeriesQ {
            trunc,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(trunc: Truncation) -> Self {
        let mut s = Self::zero(trunc);
        s.set(0, 0, BigradedPoly::one());
        s
    }

    pub fn truncation(&self) -> Truncation {
        self.trunc
    }

    pub fn qmax(&self) -> u32 {
        self.trunc.qmax
    }

    pub fn is_bivariate(&self) -> bool {
        self.trunc.pmax.is_some()
    }

    /// Stores a coefficient; degrees outside the box are discarded.
    pub fn set(&mut self, q: u32, p: u32, poly: BigradedPoly) {
        if !self.trunc.contains(q, p) {
            return;
        }
        if poly.is_zero() {
            self.coeffs.remove(&(q, p));
        } else {
            self.coeffs.insert((q, p), poly);
        }
    }

    pub fn add_at(&mut self, q: u32, p: u32, poly: &BigradedPoly) {
        if !self.trunc.contains(q, p) || poly.is_zero() {
            return;
        }
        let slot = self.coeffs.entry((q, p)).or_default();
        *slot += poly;
        if slot.is_zero() {
            self.coeffs.remove(&(q, p));
        }
    }

    /// Coefficient of `q^q p^p`.
    pub fn coeff_qp(&self, q: u32, p: u32) -> BigradedPoly {
        self.coeffs.get(&(q, p)).cloned().unwrap_or_default()
    }

    /// Coefficient of `q^q` (with `p^0`).
    pub fn coeff(&self, q: u32) -> BigradedPoly {
        self.coeff_qp(q, 0)
    }

    /// Nonzero coefficients in `(q, p)` order.
    pub fn iter(&self) -> impl Iterator<Item = ((u32, u32), &BigradedPoly)> {
        self.coeffs.iter().map(|(&k, v)| (k, v))
    }

    pub fn add(&self, other: &SeriesQ) -> SeriesQ {
        let mut out = self.clone();
        for ((q, p), c) in other.iter() {
            out.add_at(q, p, c);
        }
        out
    }

    /// Product truncated to `self`'s box.
    pub fn mul(&self, other: &SeriesQ) -> SeriesQ {
        let mut out = SeriesQ::zero(self.trunc);
        for (&(q1, p1), a) in &self.coeffs {
            for (&(q2, p2), b) in &other.coeffs {
                if self.trunc.contains(q1 + q2, p1 + p2) {
                    out.add_at(q1 + q2, p1 + p2, &(a * b));
                }
            }
        }
        out
    }

    /// Applies `f` to each coefficient.
    pub fn map_coeffs(&self, mut f: impl FnMut(u32, u32, &BigradedPoly) -> BigradedPoly) -> SeriesQ {
        let mut out = SeriesQ::zero(self.trunc);
        for (&(q, p), c) in &self.coeffs {
            out.set(q, p, f(q, p, c));
        }
        out
    }

    /// Multiplies in the factor `(1 − M)^{−e}`; its expansion has
    /// `M^k`-coefficient `C(e + k − 1, k)`, which terminates for `e < 0`.
    pub fn mul_euler_factor(&mut self, factor: &EulerFactor) -> Result<()> {
        let m = factor.monomial;
        if m.q == 0 && m.p == 0 {
            return Err(Error::DivergentFactor);
        }
        if factor.exponent.is_zero() || !self.trunc.contains(m.q, m.p) {
            return Ok(());
        }
        let old = std::mem::take(&mut self.coeffs);
        let mut binom = BigInt::one();
        let mut k: u32 = 0;
        loop {
            let (dq, dp) = (k * m.q, k * m.p);
            if !self.trunc.contains(dq, dp) || binom.is_zero() {
                break;
            }
            for (&(q, p), c) in &old {
                if self.trunc.contains(q + dq, p + dp) {
                    let term = c.shift2(k as i64 * m.x2, k as i64 * m.y2).scale(&binom);
                    self.add_at(q + dq, p + dp, &term);
                }
            }
            k += 1;
            binom = binom * (&factor.exponent + BigInt::from(k - 1)) / BigInt::from(k);
        }
        Ok(())
    }

    /// Substitutes `x, y ∈ {1, −1}` into every coefficient.
    pub fn specialize(&self, x: i8, y: i8) -> Result<IntSeries> {
        let mut coeffs = BTreeMap::new();
        for (&(q, p), c) in &self.coeffs {
            let v = c.eval_signs(x, y)?;
            if !v.is_zero() {
                coeffs.insert((q, p), v);
            }
        }
        Ok(IntSeries {
            trunc: self.trunc,
            coeffs,
        })
    }

    /// Every `(q, p)` where the two series differ, with the first differing
    /// monomial `(s2, t2, left, right)`.
    pub fn differences(&self, other: &SeriesQ) -> Vec<CoeffDifference> {
        let keys: std::collections::BTreeSet<(u32, u32)> =
            self.coeffs.keys().chain(other.coeffs.keys()).copied().collect();
        keys.into_iter()
            .filter_map(|(q, p)| {
                self.coeff_qp(q, p)
                    .first_difference(&other.coeff_qp(q, p))
                    .map(|d| ((q, p), d))
            })
            .collect()
    }

    /// JSON list `[{"q", "p"?, "terms": [[s2, t2, c], …]}]` covering the whole
    /// box, zero coefficients included so the truncation survives a round trip.
    pub fn to_json(&self) -> Vec<SeriesEntry> {
        let mut out = Vec::new();
        let mut keys: Vec<(u32, u32)> = self.trunc.degrees().collect();
        keys.sort_unstable();
        for (q, p) in keys {
            let c = self.coeff_qp(q, p);
            out.push(SeriesEntry {
                q,
                p: self.trunc.pmax.map(|_| p),
                terms: c
                    .terms()
                    .map(|(s2, t2, v)| (s2, t2, JsonInt(v.clone())))
                    .collect(),
            });
        }
        out
    }

    pub fn from_json(entries: &[SeriesEntry]) -> Result<SeriesQ> {
        let bivariate = entries.iter().any(|e| e.p.is_some());
        if bivariate && entries.iter().any(|e| e.p.is_none()) {
            return Err(Error::InvalidHodge(
                "series mixes entries with and without `p`".into(),
            ));
        }
        let qmax = entries.iter().map(|e| e.q).max().unwrap_or(0);
        let trunc = if bivariate {
            Truncation::qp(qmax, entries.iter().filter_map(|e| e.p).max().unwrap_or(0))
        } else {
            Truncation::q(qmax)
        };
        let mut s = SeriesQ::zero(trunc);
        for e in entries {
            let mut poly = BigradedPoly::zero();
            for (s2, t2, c) in &e.terms {
                poly.add_term(*s2, *t2, c.0.clone());
            }
            s.add_at(e.q, e.p.unwrap_or(0), &poly);
        }
        Ok(s)
    }
}

impl fmt::Display for SeriesQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut keys: Vec<(u32, u32)> = self.trunc.degrees().collect();
        keys.sort_unstable_by_key(|&(q, p)| (p, q));
        for (q, p) in keys {
            if self.is_bivariate() {
                writeln!(f, "p^{p} q^{q}: {}", self.coeff_qp(q, p))?;
            } else {
                writeln!(f, "q^{q}: {}", self.coeff(q))?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesEntry {
    pub q: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
    pub terms: Vec<(i64, i64, JsonInt)>,
}

/// Arbitrary-precision integer carried as a bare JSON number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let n: serde_json::Number = self.0.to_string().parse().map_err(serde::ser::Error::custom)?;
        n.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let n = serde_json::Number::deserialize(deserializer)?;
        n.to_string()
            .parse::<BigInt>()
            .map(JsonInt)
            .map_err(|_| serde::de::Error::custom(format!("expected an integer, got {n}")))
    }
}

/// Integer-coefficient series, the result of numeric specialization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntSeries {
    trunc: Truncation,
    coeffs: BTreeMap<(u32, u32), BigInt>,
}

impl IntSeries {
    pub fn from_coeffs(trunc: Truncation, values: impl IntoIterator<Item = ((u32, u32), BigInt)>) -> Self {
        IntSeries {
            trunc,
            coeffs: values
                .into_iter()
                .filter(|(k, v)| !v.is_zero() && trunc.contains(k.0, k.1))
                .collect(),
        }
    }

    pub fn coeff_qp(&self, q: u32, p: u32) -> BigInt {
        self.coeffs.get(&(q, p)).cloned().unwrap_or_default()
    }

    pub fn coeff(&self, q: u32) -> BigInt {
        self.coeff_qp(q, 0)
    }

    /// Coefficients `q^0 … q^qmax` at `p^0`.
    pub fn q_coeffs(&self) -> Vec<BigInt> {
        (0..=self.trunc.qmax).map(|q| self.coeff(q)).collect()
    }

    pub fn truncation(&self) -> Truncation {
        self.trunc
    }
}

/// `Σ_n e(S^n V) q^n = ∏_{s,t} (1 − x^s y^t q)^{−e^{s,t}(V)}` for a virtual
/// Hodge polynomial `V`.
pub fn sym_series(v: &BigradedPoly, qmax: u32) -> SeriesQ {
    let factors = v
        .terms()
        .map(|(s2, t2, e)| EulerFactor::new(Monomial::new(s2, t2, 1, 0), e.clone()));
    euler_product(factors, Truncation::q(qmax)).expect("q-degree 1 factors converge")
}

/// Expands `∏ (1 − M)^{−e}` inside the truncation box.
pub fn euler_product(factors: impl IntoIterator<Item = EulerFactor>, trunc: Truncation) -> Result<SeriesQ> {
    let mut s = SeriesQ::one(trunc);
    for f in factors {
        s.mul_euler_factor(&f)?;
    }
    Ok(s)
}

/// Euler product whose factors are generated lazily per grading degree.
///
/// The grading variable is `p` for bivariate truncations and `q` otherwise;
/// `factors_at(k)` must return exactly the factors of grading degree `k`,
/// and is queried for `k = 1 ..= max`.
pub fn euler_product_graded(
    trunc: Truncation,
    mut factors_at: impl FnMut(u32) -> Vec<EulerFactor>,
) -> Result<SeriesQ> {
    let max = trunc.pmax.unwrap_or(trunc.qmax);
    let mut s = SeriesQ::one(trunc);
    for k in 1..=max {
        for f in factors_at(k) {
            let got = if trunc.pmax.is_some() {
                f.monomial.p
            } else {
                f.monomial.q
            };
            if got != k {
                return Err(Error::MisplacedFactor { expected: k, got });
            }
            s.mul_euler_factor(&f)?;
        }
    }
    Ok(s)
}

/// `∏_{r≥1} (1 − q^r)^{−e}` through `q^qmax`, computed from the divisor-sum
/// recurrence `n·a_n = e · Σ_{k=1}^n σ(k) a_{n−k}`.
pub fn euler_number_series(e: &BigInt, qmax: u32) -> Vec<BigInt> {
    let n = qmax as usize;
    let sigma: Vec<BigInt> = (0..=n)
        .map(|k| BigInt::from((1..=k).filter(|d| k % d == 0).sum::<usize>()))
        .collect();
    let mut a = vec![BigInt::one()];
    for m in 1..=n {
        let acc: BigInt = (1..=m).map(|k| &sigma[k] * &a[m - k]).sum::<BigInt>() * e;
        a.push(acc / BigInt::from(m));
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3_virtual() -> BigradedPoly {
        BigradedPoly::from_table([(0, 0, 1), (2, 0, 1), (0, 2, 1), (1, 1, 20), (2, 2, 1)])
    }

    #[test]
    fn sym_series_of_trivial_line() {
        let s = sym_series(&BigradedPoly::one(), 6);
        for q in 0..=6 {
            assert_eq!(s.coeff(q), BigradedPoly::one());
        }
    }

    #[test]
    fn sym_series_of_odd_line_is_exterior() {
        let v = BigradedPoly::from_table([(1, 0, -1)]);
        let s = sym_series(&v, 4);
        assert_eq!(s.coeff(0), BigradedPoly::one());
        assert_eq!(s.coeff(1), v);
        for q in 2..=4 {
            assert!(s.coeff(q).is_zero());
        }
    }

    #[test]
    fn sym_series_of_k3_second_power() {
        // S^2 of the 24-dim space: pairs {a, b} with a·b of degree (1,1)
        // are {1, one of the 20 (1,1)-classes}.
        let s = sym_series(&k3_virtual(), 2);
        assert_eq!(s.coeff(2).coeff(1, 1), BigInt::from(20));
        assert_eq!(s.specialize(1, 1).unwrap().coeff(1), BigInt::from(24));
    }

    #[test]
    fn single_factor_binomial() {
        let s = euler_product(
            [EulerFactor::new(Monomial::new(0, 0, 1, 0), 24)],
            Truncation::q(3),
        )
        .unwrap();
        assert_eq!(s.coeff(2), BigradedPoly::constant(300));
        // repeated multiplication check
        let mut by_hand = SeriesQ::one(Truncation::q(3));
        let mut geometric = SeriesQ::zero(Truncation::q(3));
        for q in 0..=3 {
            geometric.set(q, 0, BigradedPoly::one());
        }
        for _ in 0..24 {
            by_hand = by_hand.mul(&geometric);
        }
        assert_eq!(by_hand, s);
    }

    #[test]
    fn two_factors_give_324() {
        let s = euler_product(
            [
                EulerFactor::new(Monomial::new(0, 0, 1, 0), 24),
                EulerFactor::new(Monomial::new(0, 0, 2, 0), 24),
            ],
            Truncation::q(2),
        )
        .unwrap();
        assert_eq!(s.specialize(1, 1).unwrap().coeff(2), BigInt::from(324));
    }

    #[test]
    fn negative_exponent_terminates() {
        let s = euler_product(
            [EulerFactor::new(Monomial::new(0, 0, 1, 0), -3)],
            Truncation::q(6),
        )
        .unwrap();
        let c: Vec<BigInt> = s.specialize(1, 1).unwrap().q_coeffs();
        let expected: Vec<BigInt> = [1, -3, 3, -1, 0, 0, 0].into_iter().map(BigInt::from).collect();
        assert_eq!(c, expected);
    }

    #[test]
    fn empty_product_and_divergence() {
        let s = euler_product(Vec::new(), Truncation::q(3)).unwrap();
        assert_eq!(s, SeriesQ::one(Truncation::q(3)));
        assert!(matches!(
            euler_product([EulerFactor::new(Monomial::new(2, 0, 0, 0), 1)], Truncation::q(3)),
            Err(Error::DivergentFactor)
        ));
    }

    #[test]
    fn graded_product_checks_degrees() {
        let err = euler_product_graded(Truncation::q(3), |k| {
            vec![EulerFactor::new(Monomial::new(0, 0, k + 1, 0), 1)]
        });
        assert!(matches!(err, Err(Error::MisplacedFactor { expected: 1, got: 2 })));
        let eta = euler_product_graded(Truncation::q(5), |k| {
            vec![EulerFactor::new(Monomial::new(0, 0, k, 0), 24)]
        })
        .unwrap();
        let expected = euler_number_series(&BigInt::from(24), 5);
        assert_eq!(eta.specialize(1, 1).unwrap().q_coeffs(), expected);
    }

    #[test]
    fn euler_number_series_k3() {
        let a = euler_number_series(&BigInt::from(24), 3);
        let expected: Vec<BigInt> = [1, 24, 324, 3200].into_iter().map(BigInt::from).collect();
        assert_eq!(a, expected);
    }

    #[test]
    fn specialize_rejects_half_integer_with_minus_one() {
        let mut s = SeriesQ::zero(Truncation::q(1));
        s.set(1, 0, BigradedPoly::monomial(0, 1, 1));
        assert!(matches!(
            s.specialize(1, -1),
            Err(Error::AmbiguousSign { var: 'y', .. })
        ));
        assert_eq!(s.specialize(1, 1).unwrap().coeff(1), BigInt::one());
    }

    #[test]
    fn bivariate_box_is_respected() {
        let trunc = Truncation::qp(1, 2);
        let s = euler_product(
            [
                EulerFactor::new(Monomial::new(0, 0, 0, 1), 1),
                EulerFactor::new(Monomial::new(0, 0, 1, 1), 1),
            ],
            trunc,
        )
        .unwrap();
        // (1 − p)^{-1}(1 − pq)^{-1}
        assert_eq!(s.coeff_qp(0, 2), BigradedPoly::one());
        assert_eq!(s.coeff_qp(1, 2), BigradedPoly::one());
        assert_eq!(s.coeff_qp(1, 1), BigradedPoly::one());
        assert!(s.coeff_qp(1, 0).is_zero());
        assert!(s.iter().all(|((q, p), _)| q <= 1 && p <= 2));
    }

    #[test]
    fn json_round_trip_keeps_truncation() {
        let s = sym_series(&k3_virtual(), 3);
        let text = serde_json::to_string(&s.to_json()).unwrap();
        let back: Vec<SeriesEntry> = serde_json::from_str(&text).unwrap();
        assert_eq!(SeriesQ::from_json(&back).unwrap(), s);

        let big = BigInt::parse_bytes(b"123456789012345678901234567890", 10).unwrap();
        let mut t = SeriesQ::zero(Truncation::qp(0, 1));
        t.set(0, 1, BigradedPoly::constant(big));
        let text = serde_json::to_string(&t.to_json()).unwrap();
        assert!(text.contains("123456789012345678901234567890"));
        let back: Vec<SeriesEntry> = serde_json::from_str(&text).unwrap();
        assert_eq!(SeriesQ::from_json(&back).unwrap(), t);
    }
}
