//! Binomial coefficients with the vanishing convention used throughout:
//! `C(m, k) = 0` whenever `k < 0`, `m < 0` or `m < k`.

use num_bigint::BigUint;
use num_traits::{One, Zero};

pub fn binomial(top: i64, bottom: i64) -> BigUint {
    if bottom < 0 || top < 0 || top < bottom {
        return BigUint::zero();
    }
    let k = bottom.min(top - bottom);
    let mut acc = BigUint::one();
    for i in 1..=k {
        // acc = C(top - k + i, i) after this step; the division is exact.
        acc *= BigUint::from((top - k + i) as u64);
        acc /= BigUint::from(i as u64);
    }
    acc
}
