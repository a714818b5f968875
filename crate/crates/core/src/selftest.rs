//! The invariant suites behind `wreath-hodge selftest`.
//!
//! Each suite runs to its first counterexample and reports it serialized,
//! so a failing run can be replayed from the message alone.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num::BigUint;

use crate::elliptic::verify_q0_consistency;
use crate::error::Result;
use crate::fixtures;
use crate::group::{FiniteGroup, DEFAULT_ELEMENT_CAP};
use crate::hilbert::{goettsche_series, verify_samehodge, SurfaceHodge};
use crate::laurent::euler_number_series;
use crate::orbifold::{wreath_series_direct, wreath_series_product, OrbifoldData};
use crate::report::ComparisonReport;
use crate::types::{centralizer_order, enumerate_types, WreathType};

/// Seed of the randomized dual-path suite.
pub const RANDOM_SEED: u64 = 0x5eed_2003;

#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub checks: usize,
    pub elapsed: Duration,
    /// First counterexample, if any.
    pub failure: Option<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

type SuiteResult = std::result::Result<usize, String>;

fn timed(name: &'static str, body: impl FnOnce() -> SuiteResult) -> SuiteOutcome {
    let start = Instant::now();
    let result = body();
    let elapsed = start.elapsed();
    match result {
        Ok(checks) => SuiteOutcome {
            name,
            checks,
            elapsed,
            failure: None,
        },
        Err(failure) => SuiteOutcome {
            name,
            checks: 0,
            elapsed,
            failure: Some(failure),
        },
    }
}

/// Runs every suite in a fixed order.
pub fn run_all() -> Vec<SuiteOutcome> {
    vec![
        timed("wreath classes vs types", class_suite),
        timed("product vs direct (fixtures, q^4)", || {
            dual_path_suite(&fixtures::all_orbifolds(), 4)
        }),
        timed("product vs direct (20 random, q^3)", || {
            dual_path_suite(&fixtures::random_suite(RANDOM_SEED, 20), 3)
        }),
        timed("Goettsche vs trivial-group wreath (q^5)", goettsche_suite),
        timed("Hilbert scheme equalities (q^4)", samehodge_suite),
        timed("Euler specialization (q^5)", euler_suite),
        timed("q = 0 elliptic consistency (p^4)", q0_suite),
    ]
}

/// Brute-force check of one wreath product: every generator-orbit class has a
/// single type, types and classes correspond bijectively, and centralizers
/// counted element by element agree with the closed formula.
pub fn check_wreath_classes(g: &FiniteGroup, n: usize) -> Result<std::result::Result<usize, String>> {
    let w = g.build_wreath(n, DEFAULT_ELEMENT_CAP)?;
    let element = |i: usize| w.wreath_element(i).expect("index in range");
    let all: Vec<_> = (0..w.order()).map(element).collect();
    let mut seen = BTreeSet::new();
    for class in w.conjugacy_classes() {
        let rep = &all[class.representative];
        let ty = g.type_of(rep);
        if let Some(&m) = class.members.iter().find(|&&m| g.type_of(&all[m]) != ty) {
            return Ok(Err(format!(
                "{}: class of {rep} mixes types {ty} and {}",
                w.name(),
                g.type_of(&all[m])
            )));
        }
        if !seen.insert(ty.clone()) {
            return Ok(Err(format!("{}: type {ty} labels two classes", w.name())));
        }
        let commuting = all
            .iter()
            .filter(|h| h.compose(rep, g) == rep.compose(h, g))
            .count();
        let formula = centralizer_order(g, &ty);
        if BigUint::from(commuting) != formula || commuting != class.centralizer_order {
            return Ok(Err(format!(
                "{}: centralizer of {rep} (type {ty}) has {commuting} elements, formula gives {formula}",
                w.name()
            )));
        }
    }
    let expected: BTreeSet<WreathType> = enumerate_types(g, n as u32).into_iter().collect();
    if seen != expected {
        let missing: Vec<String> = expected.difference(&seen).map(|t| t.to_string()).collect();
        return Ok(Err(format!(
            "{}: types without a class: {}",
            w.name(),
            missing.join(" ")
        )));
    }
    Ok(Ok(seen.len()))
}

fn class_suite() -> SuiteResult {
    let cases = [
        (FiniteGroup::cyclic(2), 4),
        (FiniteGroup::cyclic(3), 3),
        (FiniteGroup::symmetric(3), 2),
    ];
    let mut checks = 0;
    for (g, nmax) in cases {
        for n in 1..=nmax {
            checks += check_wreath_classes(&g, n).map_err(|e| e.to_string())??;
        }
    }
    Ok(checks)
}

fn report_failure(r: &ComparisonReport) -> String {
    serde_json::to_string(r).expect("report serializes")
}

fn dual_path_suite(data: &[OrbifoldData], qmax: u32) -> SuiteResult {
    for o in data {
        let product = wreath_series_product(o, qmax);
        let direct = wreath_series_direct(o, None, qmax).map_err(|e| e.to_string())?;
        let r = ComparisonReport::compare(format!("product vs direct for {}", o.name()), &product, &direct);
        if !r.passed() {
            let data = serde_json::to_string(&o.to_file()).expect("orbifold serializes");
            return Err(format!("{}\n  input: {data}", report_failure(&r)));
        }
    }
    Ok(data.len())
}

fn goettsche_suite() -> SuiteResult {
    let surfaces = [fixtures::k3(), fixtures::cp2()];
    for x in &surfaces {
        let r = ComparisonReport::compare(
            format!("Goettsche vs wreath series of {} with trivial group", x.name()),
            &goettsche_series(x, 5),
            &wreath_series_product(&x.as_trivial_orbifold(), 5),
        );
        if !r.passed() {
            return Err(report_failure(&r));
        }
    }
    Ok(surfaces.len())
}

fn samehodge_suite() -> SuiteResult {
    let mut pairs: Vec<(OrbifoldData, SurfaceHodge)> = vec![
        (fixtures::kummer(), fixtures::k3()),
        (fixtures::cp2_z3(), fixtures::cp2_z3_resolution()),
    ];
    for k in [2, 3, 5] {
        pairs.push((fixtures::ale(k), fixtures::ale_resolution(k)));
    }
    for (o, x) in &pairs {
        let r = verify_samehodge(o, x, 4).map_err(|e| e.to_string())?;
        if !r.passed() {
            return Err(report_failure(&r));
        }
    }
    Ok(pairs.len())
}

/// `x = y = 1` turns the wreath series into `∏ (1 − q^r)^{−e}` with `e` the
/// orbifold Euler number.
pub fn check_euler_specialization(o: &OrbifoldData, qmax: u32) -> std::result::Result<(), String> {
    let e = o
        .orbifold_virtual_poly()
        .eval_signs(1, 1)
        .map_err(|err| err.to_string())?;
    let got = wreath_series_product(o, qmax)
        .specialize(1, 1)
        .map_err(|err| err.to_string())?
        .q_coeffs();
    let expected = euler_number_series(&e, qmax);
    if got != expected {
        return Err(format!(
            "{}: x=y=1 gives {:?}, expected {:?} for e = {e}",
            o.name(),
            got.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            expected.iter().map(|c| c.to_string()).collect::<Vec<_>>()
        ));
    }
    Ok(())
}

fn euler_suite() -> SuiteResult {
    let data = fixtures::all_orbifolds();
    for o in &data {
        check_euler_specialization(o, 5)?;
    }
    Ok(data.len())
}

fn q0_suite() -> SuiteResult {
    let data: Vec<OrbifoldData> = fixtures::all_orbifolds()
        .into_iter()
        .filter(|o| o.dim() == 2)
        .collect();
    for o in &data {
        let r = verify_q0_consistency(o, 4).map_err(|e| e.to_string())?;
        if !r.passed() {
            return Err(report_failure(&r));
        }
    }
    Ok(data.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_wreath_products_pass() {
        assert_eq!(check_wreath_classes(&FiniteGroup::cyclic(2), 2).unwrap(), Ok(5));
        assert_eq!(check_wreath_classes(&FiniteGroup::trivial(), 3).unwrap(), Ok(3));
    }

    #[test]
    fn euler_check_accepts_kummer() {
        assert!(check_euler_specialization(&fixtures::kummer(), 3).is_ok());
    }
}
