//! Graded symmetric powers of a super vector space from its virtual Hodge
//! polynomial, and the Euler-number shadow of the wreath series.
//!
//! ```text
//! cargo run --example symmetric_powers
//! ```

use num::BigInt;
use wreath_hodge::laurent::{euler_number_series, sym_series};
use wreath_hodge::selftest::check_euler_specialization;
use wreath_hodge::{fixtures, BigradedPoly};

fn main() {
    // e(K3) = 1 + x² + y² + 20xy + x²y²; all even, so Sⁿ is a plain symmetric power
    let k3 = fixtures::k3().hodge().to_virtual().expect("integer exponents");
    let s = sym_series(&k3, 3);
    println!("Σ e(S^n K3) q^n:\n{s}");

    // an odd line x: Sⁿ vanishes for n ≥ 2
    let odd = BigradedPoly::from_table([(1, 0, -1)]);
    println!("S^n of an odd line:\n{}", sym_series(&odd, 3));

    let euler = euler_number_series(&BigInt::from(24), 6);
    println!(
        "∏ (1 − q^r)^(−24): {:?}",
        euler.iter().map(|c| c.to_string()).collect::<Vec<_>>()
    );
    for o in fixtures::all_orbifolds() {
        let verdict = check_euler_specialization(&o, 5).map_or_else(|e| e, |()| "ok".into());
        println!("  {:<32} x = y = 1: {verdict}", o.name());
    }
}
