//! Exact orbifold Hodge numbers of wreath-product orbifolds `Yⁿ/(G ≀ Sₙ)`.
//!
//! Inputs are finite tables: a group by its multiplication table, an
//! orbifold `Y/G` by its sector data, a surface by its Hodge table, an
//! elliptic genus by its coefficients. Outputs are exact generating series
//! over `ℤ[x^{±1/2}, y^{±1/2}]`, produced along independent routes so they
//! can be checked against each other:
//!
//! - [`group`] and [`types`]: conjugacy classes of `G ≀ Sₙ`, by brute force
//!   and by partition-valued types.
//! - [`laurent`]: bigraded polynomials, truncated series, Euler products and
//!   graded symmetric powers.
//! - [`orbifold`]: orbifold Hodge polynomials and the wreath series, as a
//!   closed product and as a type-by-type sum.
//! - [`hilbert`]: Hilbert schemes of points and the equality checks.
//! - [`elliptic`]: the product formula for elliptic genera and its `q = 0`
//!   check.

pub mod cli;
pub mod elliptic;
pub mod error;
pub mod fixtures;
pub mod group;
pub mod hilbert;
pub mod laurent;
pub mod orbifold;
pub mod report;
pub mod selftest;
pub mod types;

pub use error::{Error, Result};
pub use group::{FiniteGroup, WreathElement, DEFAULT_ELEMENT_CAP};
pub use laurent::{BigradedPoly, SeriesQ, Truncation};
pub use orbifold::OrbifoldData;
pub use report::ComparisonReport;
pub use types::WreathType;

use std::path::Path;

pub(crate) fn read_text(path: &Path) -> Result<(String, String)> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok((text, path.display().to_string()))
}
