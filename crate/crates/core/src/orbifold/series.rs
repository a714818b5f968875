//! Generating series `Σ_n e(Y^n, G≀S_n; x, y) q^n`, by two independent
//! routes: the closed Euler product, and a sum over conjugacy types of the
//! wreath product with symmetric powers of each fixed component.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::laurent::{
    euler_product_graded, sym_series, BigradedPoly, EulerFactor, Monomial, SeriesQ, Truncation,
};
use crate::types::{enumerate_types_over, weak_compositions};

use super::OrbifoldData;

/// Age of the component of `(Y^r)^{g≀σ_r}` over a component of shift `f`.
pub fn wreath_shift(f: i64, r: u32, d: u32) -> i64 {
    assert!(d.is_multiple_of(2), "wreath shift needs even dimension");
    f + (r as i64 - 1) * (d as i64 / 2)
}

/// `Σ_n e(Y^n/Γ_n) q^n = ∏ (1 − x^s y^t q)^{−e^{s,t}(Y/G)}`.
pub fn symmetric_quotient_series(o: &OrbifoldData, qmax: u32) -> SeriesQ {
    let e = o
        .quotient_hodge_poly()
        .to_virtual()
        .expect("validated tables have integer exponents");
    sym_series(&e, qmax)
}

/// `∏_{r≥1} ∏_{s,t} (1 − x^s y^t q^r (xy)^{(r−1)d/2})^{−e^{s,t}(Y,G)}`,
/// with constant term 1.
pub fn wreath_series_product(o: &OrbifoldData, qmax: u32) -> SeriesQ {
    let e = o.orbifold_virtual_poly();
    let d = o.dim() as i64;
    euler_product_graded(Truncation::q(qmax), |r| {
        // (r−1)d/2, doubled
        let lift = (r as i64 - 1) * d;
        e.terms()
            .map(|(s2, t2, c)| EulerFactor::new(Monomial::new(s2 + lift, t2 + lift, r, 0), c.clone()))
            .collect()
    })
    .expect("factors are generated at their own degree")
}

/// Direct summation over types `{m_r(c)} ∈ 𝒫_n(G_*)`.
///
/// For each type, each block `(c, r)` with multiplicity `m` distributes `m`
/// over the `N_c` components of sector `c`; a distribution `{m_α}`
/// contributes `∏_α e(S^{m_α}(Y^c_α/Z_c))` twisted by
/// `Σ_α m_α · (F^c_α + (r−1)d/2)`. Blocks multiply, types add.
///
/// If `group` is given, sector labels must read `c<rep>` for distinct class
/// representatives of it, with the identity sector at `c0`.
pub fn wreath_series_direct(o: &OrbifoldData, group: Option<&FiniteGroup>, qmax: u32) -> Result<SeriesQ> {
    if let Some(g) = group {
        check_labels(o, g)?;
    }
    let d = o.dim();
    // symmetric powers of each component's virtual polynomial, untwisted
    let powers: Vec<Vec<(i64, Vec<BigradedPoly>)>> = o
        .sectors()
        .iter()
        .map(|s| {
            s.components
                .iter()
                .map(|c| {
                    let e = c
                        .hodge
                        .to_virtual()
                        .expect("validated tables have integer exponents");
                    (c.shift as i64, e.symmetric_powers(qmax))
                })
                .collect()
        })
        .collect();

    let keys: Vec<usize> = (0..o.sectors().len()).collect();
    let mut blocks: BTreeMap<(usize, u32, u32), BigradedPoly> = BTreeMap::new();
    let mut out = SeriesQ::zero(Truncation::q(qmax));
    for n in 0..=qmax {
        let mut coeff = BigradedPoly::zero();
        for t in enumerate_types_over(&keys, n) {
            let mut term = BigradedPoly::one();
            for (c, r, m) in t.entries() {
                let block = blocks
                    .entry((c, r, m))
                    .or_insert_with(|| block_sum(&powers[c], r, m, d));
                term = &term * block;
                if term.is_zero() {
                    break;
                }
            }
            coeff += &term;
        }
        out.set(n, 0, coeff);
    }
    Ok(out)
}

fn block_sum(components: &[(i64, Vec<BigradedPoly>)], r: u32, m: u32, d: u32) -> BigradedPoly {
    let mut sum = BigradedPoly::zero();
    for dist in weak_compositions(m, components.len()) {
        let mut product = BigradedPoly::one();
        let mut shift = 0;
        for (&m_alpha, (f, sym)) in dist.iter().zip(components) {
            product = &product * &sym[m_alpha as usize];
            shift += m_alpha as i64 * wreath_shift(*f, r, d);
        }
        sum += &product.twist(shift);
    }
    sum
}

fn check_labels(o: &OrbifoldData, g: &FiniteGroup) -> Result<()> {
    let reps: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.representative).collect();
    for s in o.sectors() {
        let rep = s
            .class
            .strip_prefix('c')
            .and_then(|r| r.parse::<usize>().ok())
            .filter(|r| reps.contains(r))
            .ok_or_else(|| {
                Error::InvalidOrbifold(format!(
                    "sector `{}` does not name a class representative of {}",
                    s.class,
                    g.name()
                ))
            })?;
        if s.identity != (rep == 0) {
            return Err(Error::InvalidOrbifold(format!(
                "sector `{}`: identity flag does not match the identity class",
                s.class
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use num::BigInt;

    #[test]
    fn wreath_shift_examples() {
        assert_eq!(wreath_shift(0, 1, 2), 0);
        assert_eq!(wreath_shift(1, 2, 2), 2);
        assert_eq!(wreath_shift(1, 3, 4), 5);
    }

    #[test]
    fn low_degree_coefficients() {
        let k = fixtures::kummer();
        let e = k.orbifold_virtual_poly();
        for s in [
            wreath_series_product(&k, 3),
            wreath_series_direct(&k, None, 3).unwrap(),
        ] {
            assert_eq!(s.coeff(0), BigradedPoly::one());
            assert_eq!(s.coeff(1), e);
        }
    }

    #[test]
    fn kummer_second_coefficient() {
        let k = fixtures::kummer();
        let product = wreath_series_product(&k, 2);
        assert_eq!(product.coeff(2).coeff(1, 1), BigInt::from(21));
        assert_eq!(product.specialize(1, 1).unwrap().coeff(2), BigInt::from(324));
        assert_eq!(wreath_series_direct(&k, None, 2).unwrap(), product);
    }

    #[test]
    fn quotient_series_low_terms() {
        let k = fixtures::kummer();
        let s = symmetric_quotient_series(&k, 2);
        let e = k.quotient_hodge_poly().to_virtual().unwrap();
        assert_eq!(s.coeff(0), BigradedPoly::one());
        assert_eq!(s.coeff(1), e);
        // S^2 of 1 + x^2 + y^2 + 4xy + x^2y^2 (all even): pairs with repetition
        let dims = [(0, 0, 1), (2, 0, 1), (0, 2, 1), (1, 1, 4), (2, 2, 1)];
        let mut expected = BigradedPoly::zero();
        for (i, &(s1, t1, a)) in dims.iter().enumerate() {
            // a basis elements in this bidegree: C(a+1, 2) unordered pairs within
            expected += &BigradedPoly::from_table([(2 * s1, 2 * t1, a * (a + 1) / 2)]);
            for &(s2, t2, b) in &dims[i + 1..] {
                expected += &BigradedPoly::from_table([(s1 + s2, t1 + t2, a * b)]);
            }
        }
        assert_eq!(s.coeff(2), expected);
    }

    #[test]
    fn group_label_validation() {
        let k = fixtures::kummer();
        assert!(wreath_series_direct(&k, Some(&FiniteGroup::cyclic(2)), 1).is_ok());
        assert!(wreath_series_direct(&k, Some(&FiniteGroup::trivial()), 1).is_err());
        let c = fixtures::cp2_z3();
        assert!(wreath_series_direct(&c, Some(&FiniteGroup::cyclic(3)), 1).is_ok());
    }
}
