//! Exact evaluations of the density bounds for generalized daisies.

use crate::field::is_prime_power;
use crate::rational::{rat, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsTable {
    pub t: u64,
    pub r: u64,
    /// `(t-1)^2 / (t^2 - t + 2)`; a valid lower bound only when `t - 1` is a prime power.
    pub link_lower: Rational,
    pub t_minus_1_prime_power: bool,
    /// `1 - 1/t - 1/(12 t^2)`.
    pub link_upper: Rational,
    /// `((t-1)^r - (t-1)^(r-1)) / ((t-1)^r - 1)`; `None` when `t = 2`.
    pub codeg_lower: Option<Rational>,
    /// `1 - 1/t - 1/(36 t^2)`.
    pub codeg_upper: Rational,
}

pub fn bounds_table(t: u64, r: u64) -> BoundsTable {
    let ti = t as i128;
    let s = ti - 1;
    let one = Rational::from_integer(1);
    let codeg_lower = (s >= 2).then(|| {
        let sr = s.pow(r as u32);
        rat(sr - s.pow(r as u32 - 1), sr - 1)
    });
    BoundsTable {
        t,
        r,
        link_lower: rat(s * s, ti * ti - ti + 2),
        t_minus_1_prime_power: is_prime_power(t - 1),
        link_upper: one - rat(1, ti) - rat(1, 12 * ti * ti),
        codeg_lower,
        codeg_upper: one - rat(1, ti) - rat(1, 36 * ti * ti),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t3_values() {
        let b = bounds_table(3, 3);
        assert_eq!(b.link_lower, rat(1, 2));
        assert_eq!(b.link_upper, rat(71, 108));
        assert_eq!(b.codeg_lower, Some(rat(4, 7)));
        assert_eq!(b.codeg_upper, rat(215, 324));
        assert!(b.t_minus_1_prime_power);
    }

    #[test]
    fn t2_values() {
        let b = bounds_table(2, 3);
        assert_eq!(b.link_upper, rat(23, 48));
        assert_eq!(b.codeg_lower, None);
        assert!(!b.t_minus_1_prime_power);
        assert!(!bounds_table(7, 3).t_minus_1_prime_power);
    }
}
