use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num::{BigInt, Integer, One, Signed, Zero};

use crate::error::{Error, Result};

/// Laurent polynomial in `x, y` with integer coefficients and half-integer
/// exponents. Keys are `(2·s, 2·t)`; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct BigradedPoly {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl BigradedPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, 0, c)
    }

    /// `c · x^{s2/2} y^{t2/2}`.
    pub fn monomial(s2: i64, t2: i64, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(s2, t2, c.into());
        p
    }

    /// From integer-exponent entries `(s, t, h)`; repeated keys accumulate.
    pub fn from_table<C: Into<BigInt>>(entries: impl IntoIterator<Item = (i64, i64, C)>) -> Self {
        let mut p = Self::zero();
        for (s, t, c) in entries {
            p.add_term(2 * s, 2 * t, c.into());
        }
        p
    }

    pub fn add_term(&mut self, s2: i64, t2: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((s2, t2)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(s2, t2));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient at doubled exponents.
    pub fn coeff2(&self, s2: i64, t2: i64) -> BigInt {
        self.terms.get(&(s2, t2)).cloned().unwrap_or_default()
    }

    /// Coefficient of `x^s y^t` for integer `s, t`.
    pub fn coeff(&self, s: i64, t: i64) -> BigInt {
        self.coeff2(2 * s, 2 * t)
    }

    /// `((s2, t2), coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64, &BigInt)> {
        self.terms.iter().map(|(&(s2, t2), c)| (s2, t2, c))
    }

    /// Multiplies by `x^{ds2/2} y^{dt2/2}`.
    pub fn shift2(&self, ds2: i64, dt2: i64) -> Self {
        BigradedPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(s2, t2), c)| ((s2 + ds2, t2 + dt2), c.clone()))
                .collect(),
        }
    }

    /// `V{n}`: multiplication by `(xy)^n`.
    pub fn twist(&self, n: i64) -> Self {
        self.shift2(2 * n, 2 * n)
    }

    /// `V{n2/2}` for half-integer twists.
    pub fn twist_doubled(&self, n2: i64) -> Self {
        self.shift2(n2, n2)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BigradedPoly {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    /// Replaces `x` by `−x` and/or `y` by `−y`. Fails on a half-integer
    /// exponent in a negated variable.
    pub fn negate_vars(&self, neg_x: bool, neg_y: bool) -> Result<Self> {
        let mut out = Self::zero();
        for (&(s2, t2), c) in &self.terms {
            let mut flip = false;
            for (neg, e2, var) in [(neg_x, s2, 'x'), (neg_y, t2, 'y')] {
                if neg {
                    if e2.is_odd() {
                        return Err(Error::AmbiguousSign { var, exponent2: e2 });
                    }
                    flip ^= (e2 / 2).is_odd();
                }
            }
            out.add_term(s2, t2, if flip { -c } else { c.clone() });
        }
        Ok(out)
    }

    /// Hodge polynomial to virtual Hodge polynomial: `e = h(−x, −y)`.
    /// The map is an involution.
    pub fn to_virtual(&self) -> Result<Self> {
        self.negate_vars(true, true)
    }

    /// Evaluates at `x, y ∈ {1, −1}`.
    pub fn eval_signs(&self, x: i8, y: i8) -> Result<BigInt> {
        assert!(x.abs() == 1 && y.abs() == 1, "specialization values must be ±1");
        Ok(self
            .negate_vars(x < 0, y < 0)?
            .terms
            .values()
            .fold(BigInt::zero(), |acc, c| acc + c))
    }

    /// Adams operation `ψ^k`: `V(x, y) ↦ V(x^k, y^k)`.
    pub fn adams(&self, k: i64) -> Self {
        BigradedPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(s2, t2), c)| ((s2 * k, t2 * k), c.clone()))
                .collect(),
        }
    }

    /// `e(S^m V)` for a virtual Hodge polynomial `V`, by the Newton recurrence
    /// `m·S^m = Σ_{k=1}^m ψ^k(V) · S^{m−k}`.
    pub fn symmetric_power(&self, m: u32) -> Self {
        self.symmetric_powers(m).pop().expect("at least S^0")
    }

    /// `[S^0 V, S^1 V, …, S^m V]`.
    pub fn symmetric_powers(&self, m: u32) -> Vec<Self> {
        let adams: Vec<Self> = (1..=m as i64).map(|k| self.adams(k)).collect();
        let mut powers = vec![Self::one()];
        for n in 1..=m as usize {
            let mut acc = Self::zero();
            for k in 1..=n {
                acc += &(&adams[k - 1] * &powers[n - k]);
            }
            let n_big = BigInt::from(n);
            let mut divided = Self::zero();
            for (&(s2, t2), c) in &acc.terms {
                let (q, r) = c.div_rem(&n_big);
                assert!(
                    r.is_zero(),
                    "Newton recurrence produced a non-integral coefficient"
                );
                divided.add_term(s2, t2, q);
            }
            powers.push(divided);
        }
        powers
    }

    /// `h^{s,t} = h^{t,s}` for every term.
    pub fn is_symmetric(&self) -> bool {
        self.terms
            .iter()
            .all(|(&(s2, t2), c)| self.terms.get(&(t2, s2)) == Some(c))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Every exponent is an integer.
    pub fn has_integer_exponents(&self) -> bool {
        self.terms.keys().all(|&(s2, t2)| s2.is_even() && t2.is_even())
    }

    /// First monomial (ascending) where `self` and `other` differ.
    pub fn first_difference(&self, other: &Self) -> Option<(i64, i64, BigInt, BigInt)> {
        let keys: std::collections::BTreeSet<_> =
            self.terms.keys().chain(other.terms.keys()).copied().collect();
        keys.into_iter().find_map(|(s2, t2)| {
            let a = self.coeff2(s2, t2);
            let b = other.coeff2(s2, t2);
            (a != b).then_some((s2, t2, a, b))
        })
    }
}

impl From<i64> for BigradedPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a BigradedPoly> for &BigradedPoly {
    type Output = BigradedPoly;
    fn add(self, rhs: &'a BigradedPoly) -> BigradedPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for BigradedPoly {
    type Output = BigradedPoly;
    fn add(mut self, rhs: BigradedPoly) -> BigradedPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&BigradedPoly> for BigradedPoly {
    fn add_assign(&mut self, rhs: &BigradedPoly) {
        for (&(s2, t2), c) in &rhs.terms {
            self.add_term(s2, t2, c.clone());
        }
    }
}

impl Neg for &BigradedPoly {
    type Output = BigradedPoly;
    fn neg(self) -> BigradedPoly {
        self.scale(&-BigInt::one())
    }
}

impl<'a> Sub<&'a BigradedPoly> for &BigradedPoly {
    type Output = BigradedPoly;
    fn sub(self, rhs: &'a BigradedPoly) -> BigradedPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a BigradedPoly> for &BigradedPoly {
    type Output = BigradedPoly;
    fn mul(self, rhs: &'a BigradedPoly) -> BigradedPoly {
        let mut out = BigradedPoly::zero();
        for (&(s1, t1), a) in &self.terms {
            for (&(s2, t2), b) in &rhs.terms {
                out.add_term(s1 + s2, t1 + t2, a * b);
            }
        }
        out
    }
}

impl Mul for BigradedPoly {
    type Output = BigradedPoly;
    fn mul(self, rhs: BigradedPoly) -> BigradedPoly {
        &self * &rhs
    }
}

/// Writes a doubled exponent as `2`, `-1`, `3/2`, `-1/2`.
pub(crate) fn halved(e2: i64) -> String {
    if e2 % 2 == 0 {
        (e2 / 2).to_string()
    } else {
        format!("{e2}/2")
    }
}

fn power(var: char, e2: i64) -> Option<String> {
    match e2 {
        0 => None,
        2 => Some(var.to_string()),
        e if e % 2 == 0 && e > 0 => Some(format!("{var}^{}", e / 2)),
        e => Some(format!("{var}^{{{}}}", halved(e))),
    }
}

impl fmt::Display for BigradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&(s2, t2), c)) in self.terms.iter().enumerate() {
            let vars: Vec<String> = [power('x', s2), power('y', t2)].into_iter().flatten().collect();
            let magnitude = c.abs();
            let body = match (vars.is_empty(), magnitude.is_one()) {
                (true, _) => magnitude.to_string(),
                (false, true) => vars.join("*"),
                (false, false) => format!("{}*{}", magnitude, vars.join("*")),
            };
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                write!(f, "{}{}", if c.is_negative() { "-" } else { "" }, body)?;
            } else {
                write!(f, " {sign} {body}")?;
            }
        }
        Ok(())
    }
}
