//! Exact rational helpers.

use num_rational::Ratio;

/// Exact rational number used for every user-visible density and bound.
pub type Rational = Ratio<i128>;

pub fn rat(n: i128, d: i128) -> Rational {
    Rational::new(n, d)
}

/// Binomial coefficient; exact for the desk-scale arguments used here.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// Always renders as `p/q`, including integers (`1/1`).
pub fn to_fraction_string(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses `p/q` or a bare integer.
pub fn parse_fraction(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i128 = p.trim().parse().ok()?;
            let q: i128 = q.trim().parse().ok()?;
            (q != 0).then(|| Rational::new(p, q))
        }
        None => s.trim().parse().ok().map(Rational::from_integer),
    }
}

/// Decimal rendering for display only.
pub fn to_decimal(x: &Rational) -> f64 {
    *x.numer() as f64 / *x.denom() as f64
}
