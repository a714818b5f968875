//! Exact bigraded Laurent polynomials and truncated power series over them,
//! with Euler-product expansion and graded symmetric powers.

mod poly;
mod series;

pub(crate) use poly::halved;
pub use poly::BigradedPoly;
pub use series::{
    euler_number_series, euler_product, euler_product_graded, sym_series, CoeffDifference, EulerFactor,
    IntSeries, JsonInt, Monomial, SeriesEntry, SeriesQ, Truncation,
};
