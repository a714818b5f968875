//! Expands `∏ (1 − pⁿ qᵐ yˡ)^{−c(nm,l)}` for the K3 elliptic genus and checks
//! its `q = 0` slice against the Kummer wreath Hodge series.
//!
//! ```text
//! cargo run --example elliptic_product
//! ```

use wreath_hodge::elliptic::{dmvv_expand, verify_q0_consistency, verify_q0_with_table};
use wreath_hodge::fixtures;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let genus = fixtures::k3_elliptic_genus();
    // row nm is needed for every factor, so pmax·qmax must stay within the table
    let series = dmvv_expand(&genus, 2, 1)?;
    println!("K3 product to p^2 q^1:\n{series}");

    print!("{}", verify_q0_with_table(&genus, &fixtures::kummer(), 4)?);
    print!("{}", verify_q0_consistency(&fixtures::cp2_z3(), 4)?);

    match dmvv_expand(&genus, 3, 1) {
        Err(e) => println!("p^3 q^1 needs more rows: {e}"),
        Ok(_) => unreachable!("row 3 is not in the table"),
    }
    Ok(())
}
