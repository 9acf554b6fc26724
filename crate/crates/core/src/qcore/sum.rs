//! Correctly rounded summation of a few terms.

use crate::Real;

/// `Σ xs` rounded once, via an exact expansion of non-overlapping partials.
/// The result does not depend on the order of the terms.
pub fn exact_sum<T: Real, const N: usize>(xs: [T; N]) -> T {
    let mut partials = [T::zero(); N];
    let mut len = 0;
    for mut x in xs {
        let mut kept = 0;
        for j in 0..len {
            let mut y = partials[j];
            if x.abs() < y.abs() {
                std::mem::swap(&mut x, &mut y);
            }
            let hi = x + y;
            let lo = y - (hi - x);
            if lo != T::zero() {
                partials[kept] = lo;
                kept += 1;
            }
            x = hi;
        }
        partials[kept] = x;
        len = kept + 1;
    }
    if len == 0 {
        return T::zero();
    }
    // add from the most significant partial down, fixing half-way ties
    len -= 1;
    let mut hi = partials[len];
    let mut lo = T::zero();
    while len > 0 {
        len -= 1;
        let (x, y) = (hi, partials[len]);
        hi = x + y;
        lo = y - (hi - x);
        if lo != T::zero() {
            break;
        }
    }
    if len > 0 {
        let next = partials[len - 1];
        if (lo < T::zero() && next < T::zero()) || (lo > T::zero() && next > T::zero()) {
            let y = lo + lo;
            let x = hi + y;
            if x - hi == y {
                hi = x;
            }
        }
    }
    hi
}
