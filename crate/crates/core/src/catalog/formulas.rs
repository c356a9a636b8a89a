//! Closed-form extremal and anti-Ramsey values.
//!
//! Values whose proof only covers large `n` come with an `in_proven_range`
//! flag instead of an error, so oracles can probe small `n` without claiming
//! the theorem applies there.

use crate::error::{invalid, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaValue {
    pub value: u64,
    pub in_proven_range: bool,
}

/// `⌊n²/4⌋ = t_2(n)`.
pub fn quarter_square(n: u64) -> u64 {
    n * n / 4
}

/// Chvátal–Hanson: `f(ν, Δ) = νΔ + ⌊Δ/2⌋·⌊ν / ⌈Δ/2⌉⌋`, the most edges in a graph
/// with matching number at most `ν` and maximum degree at most `Δ`.
pub fn f_formula(nu: u64, delta: u64) -> Result<u64> {
    if nu == 0 || delta == 0 {
        return invalid(format!("f(ν, Δ) needs ν, Δ >= 1, got ({nu}, {delta})"));
    }
    Ok(nu * delta + (delta / 2) * (nu / delta.div_ceil(2)))
}

/// `f(k, k)` by the Abbott–Hanson–Sauer case split, `k >= 2`.
pub fn f_diagonal(k: u64) -> Result<u64> {
    if k < 2 {
        return invalid("f(k, k) case formula needs k >= 2");
    }
    Ok(if k % 2 == 1 { k * k + (k - 1) / 2 } else { k * k + k })
}

/// Mantel: `ex(n, K_3) = ⌊n²/4⌋` for `n >= 3`.
pub fn ex_mantel(n: u64) -> Result<u64> {
    if n < 3 {
        return invalid(format!("ex(n, K_3) needs n >= 3, got {n}"));
    }
    Ok(quarter_square(n))
}

/// `ex(n, F_k)` for `k >= 2`: `⌊n²/4⌋ + k² - k` for odd `k`, `⌊n²/4⌋ + k² - 3k/2`
/// for even `k`. Proven for `n >= 5` when `k = 2` and for `n >= 50k²` otherwise.
pub fn ex_friendship(n: u64, k: u64) -> Result<FormulaValue> {
    if k < 2 {
        return invalid(format!("ex(n, F_k) closed form needs k >= 2, got {k} (use ex_mantel for K_3)"));
    }
    let extra = if k % 2 == 1 { k * k - k } else { k * k - 3 * k / 2 };
    let in_proven_range = if k == 2 { n >= 5 } else { n >= 50 * k * k };
    Ok(FormulaValue { value: quarter_square(n) + extra, in_proven_range })
}

/// `ar(n, {K_{1,k+1}, (k+1)K_2})`: 4 for `k = 2`, `k² - k + 2` for odd `k`,
/// `k² - 3k/2 + 2` for even `k >= 4`. Proven for `n >= 3k²`.
pub fn ar_star_matching(n: u64, k: u64) -> Result<FormulaValue> {
    if k < 2 {
        return invalid(format!("ar(n, {{K_1,k+1, (k+1)K_2}}) needs k >= 2, got {k}"));
    }
    let value = match k {
        2 => 4,
        k if k % 2 == 1 => k * k - k + 2,
        k => k * k - 3 * k / 2 + 2,
    };
    Ok(FormulaValue { value, in_proven_range: n >= 3 * k * k })
}

/// `ar(n, F_{k+1})`: `⌊n²/4⌋ + 2` for `k = 1` (proven for `n >= 5`), otherwise
/// `ex(n, F_k) + 2` (proven for `n >= 50(k+1)²`).
pub fn ar_friendship(n: u64, k: u64) -> Result<FormulaValue> {
    match k {
        0 => invalid("ar(n, F_{k+1}) needs k >= 1"),
        1 => Ok(FormulaValue { value: quarter_square(n) + 2, in_proven_range: n >= 5 }),
        k => {
            let ex = ex_friendship(n, k)?;
            Ok(FormulaValue { value: ex.value + 2, in_proven_range: n >= 50 * (k + 1) * (k + 1) })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chvatal_hanson_values() {
        assert_eq!(f_formula(2, 2).unwrap(), 6);
        assert_eq!(f_formula(3, 3).unwrap(), 10);
        assert_eq!(f_formula(2, 3).unwrap(), 7);
        assert_eq!(f_formula(1, 1).unwrap(), 1);
        assert_eq!(f_formula(1, 2).unwrap(), 3);
        assert_eq!(f_formula(1, 3).unwrap(), 3);
        assert!(f_formula(0, 3).is_err());
        assert!(f_formula(2, 0).is_err());
    }

    #[test]
    fn diagonal_matches_case_formula() {
        for k in 2..=10 {
            assert_eq!(f_formula(k, k).unwrap(), f_diagonal(k).unwrap(), "k = {k}");
        }
    }

    #[test]
    fn mantel_values() {
        assert_eq!(ex_mantel(3).unwrap(), 2);
        assert_eq!(ex_mantel(4).unwrap(), 4);
        assert_eq!(ex_mantel(5).unwrap(), 6);
        assert!(ex_mantel(2).is_err());
    }

    #[test]
    fn friendship_turan_values() {
        assert_eq!(ex_friendship(5, 2).unwrap(), FormulaValue { value: 7, in_proven_range: true });
        assert_eq!(ex_friendship(450, 3).unwrap(), FormulaValue { value: 50631, in_proven_range: true });
        assert_eq!(ex_friendship(800, 4).unwrap(), FormulaValue { value: 160010, in_proven_range: true });
        assert!(!ex_friendship(100, 3).unwrap().in_proven_range);
        assert!(!ex_friendship(4, 2).unwrap().in_proven_range);
        assert!(ex_friendship(10, 1).is_err());
    }

    #[test]
    fn star_matching_values() {
        assert_eq!(ar_star_matching(12, 2).unwrap().value, 4);
        assert_eq!(ar_star_matching(27, 3).unwrap().value, 8);
        assert_eq!(ar_star_matching(48, 4).unwrap().value, 12);
        assert!(ar_star_matching(12, 2).unwrap().in_proven_range);
        assert!(!ar_star_matching(11, 2).unwrap().in_proven_range);
        assert!(ar_star_matching(12, 1).is_err());
    }

    #[test]
    fn friendship_anti_ramsey_values() {
        assert_eq!(ar_friendship(5, 1).unwrap(), FormulaValue { value: 8, in_proven_range: true });
        assert_eq!(ar_friendship(450, 2).unwrap(), FormulaValue { value: 50628, in_proven_range: true });
        let v = ar_friendship(1250, 4).unwrap();
        assert_eq!(v.value, 1250 * 1250 / 4 + 10 + 2);
        assert!(v.in_proven_range);
        assert!(ar_friendship(10, 0).is_err());
    }
}
