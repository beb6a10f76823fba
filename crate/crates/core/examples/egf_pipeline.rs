//! Builds x^r e^{-x} / (1-x)^{r+1} from its factors, reads off D_r(n), then
//! multiplies by e^x: the exponential cancels and the ordinary coefficients
//! become C(n, r).
//!
//!     cargo run --example egf_pipeline

use derangements::arith::fraction_string;
use derangements::egf::{
    cauchy_product, egf_b_derangement, series_exp, series_reciprocal_pole, series_shift, to_terms,
    Sign,
};

fn main() {
    let (r, order) = (2, 8);

    let decay = series_exp(Sign::Minus, order);
    let pole = series_reciprocal_pole(1, r + 1, order).unwrap();
    let egf = series_shift(&cauchy_product(&decay, &pole).unwrap(), r);
    let terms = to_terms(&egf).unwrap();

    let product = cauchy_product(&egf, &series_exp(Sign::Plus, order)).unwrap();

    println!("{:>3}  {:>12}  {:>8}  {:>10}", "n", "[x^n] EGF", "D_2(n)", "[x^n] * e^x");
    for n in 0..=order {
        println!(
            "{n:>3}  {:>12}  {:>8}  {:>10}",
            fraction_string(&egf.coeffs()[n]),
            terms.as_slice()[n],
            fraction_string(&product.coeffs()[n]),
        );
    }

    let b = to_terms(&egf_b_derangement(order)).unwrap();
    println!("\ne^(-x)/(1-2x) terms: {:?}", b.as_slice().iter().map(|v| v.to_string()).collect::<Vec<_>>());
}
