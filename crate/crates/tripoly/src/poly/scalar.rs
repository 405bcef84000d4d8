use std::str::FromStr;

use malachite_base::num::arithmetic::traits::{DivExact, Lcm};
use malachite_base::num::basic::traits::One;
use malachite_base::num::conversion::traits::RoundingFrom;
use malachite_base::rounding_modes::RoundingMode;
use malachite_nz::integer::Integer;
use malachite_nz::natural::Natural;
use malachite_q::Rational;

use crate::error::{Error, Result};

/// `n / d` as an exact rational. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::from_signeds(n, d)
}

/// Parses `"-3"`, `"7/2"` or `"−5"` (unicode minus) into a rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim().replace('\u{2212}', "-");
    let bad = || Error::domain(format!("not a rational number: {text:?}"));
    if t.is_empty() {
        return Err(bad());
    }
    match t.split_once('/') {
        Some((n, d)) => {
            let n = Integer::from_str(n.trim()).map_err(|_| bad())?;
            let d = Integer::from_str(d.trim()).map_err(|_| bad())?;
            if d == 0 {
                return Err(Error::domain(format!("zero denominator in {text:?}")));
            }
            Ok(Rational::from_integers(n, d))
        }
        None => Integer::from_str(&t).map(Rational::from).map_err(|_| bad()),
    }
}

/// Nearest `f64`; saturates to infinity for huge values.
pub fn rational_to_f64(r: &Rational) -> f64 {
    f64::rounding_from(r, RoundingMode::Nearest).0
}

/// The value as an integer, if the denominator is 1.
pub fn integer_value(r: &Rational) -> Option<Integer> {
    if *r.denominator_ref() == 1u32 {
        Some(Integer::from_sign_and_abs(*r >= 0u32, r.to_numerator()))
    } else {
        None
    }
}

/// Writes `coeffs` as `ints / den` with a common positive denominator.
pub(crate) fn clear_denominators(coeffs: &[Rational]) -> (Vec<Integer>, Natural) {
    let mut den = Natural::ONE;
    for c in coeffs {
        if *c.denominator_ref() != 1u32 {
            den = den.lcm(c.denominator_ref());
        }
    }
    let ints = coeffs
        .iter()
        .map(|c| {
            let (n, d) = c.to_numerator_and_denominator();
            let scaled = if den == 1u32 { n } else { n * (&den).div_exact(d) };
            Integer::from_sign_and_abs(*c >= 0u32, scaled)
        })
        .collect();
    (ints, den)
}

/// Inverse of [`clear_denominators`].
pub(crate) fn rescale(ints: Vec<Integer>, den: &Natural) -> Vec<Rational> {
    if *den == 1u32 {
        ints.into_iter().map(Rational::from).collect()
    } else {
        let d = Integer::from(den.clone());
        ints.into_iter()
            .map(|n| Rational::from_integers(n, d.clone()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("7/2").unwrap(), ratio(7, 2));
        assert_eq!(parse_rational(" −5 ").unwrap(), Rational::from(-5));
        assert_eq!(parse_rational("6/-4").unwrap(), ratio(-3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn clearing_round_trips() {
        let v = vec![ratio(1, 2), ratio(-2, 3), Rational::from(5)];
        let (ints, den) = clear_denominators(&v);
        assert_eq!(den, 6u32);
        assert_eq!(ints, vec![Integer::from(3), Integer::from(-4), Integer::from(30)]);
        assert_eq!(rescale(ints, &den), v);
    }
}
