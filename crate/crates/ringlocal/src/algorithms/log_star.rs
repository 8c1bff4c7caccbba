//! Iterated base-2 logarithm.

use super::AlgorithmError;

/// Number of applications of `log2` needed to bring `x` down to at most 1.
pub fn log_star(x: f64) -> Result<u32, AlgorithmError> {
    if x <= 0.0 || x.is_nan() {
        return Err(AlgorithmError::NonPositiveArgument { value: x });
    }
    let mut x = x;
    let mut count = 0;
    while x > 1.0 {
        x = x.log2();
        count += 1;
    }
    Ok(count)
}

/// `log*` of `2^exponent`, evaluated symbolically so that towers beyond the
/// float range (e.g. `2^65536`) stay exact: `log*(2^e) = 1 + log*(e)`.
pub fn log_star_pow2(exponent: u64) -> u32 {
    if exponent == 0 {
        return 0; // 2^0 = 1
    }
    1 + log_star(exponent as f64).expect("positive exponent")
}
