//! Exact ratio arithmetic. Every comparison is a cross-multiplication in 128-bit
//! integers; floating point is only produced for display.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

/// `min(cc_a, cc_b) / max(cc_a, cc_b)`, kept unreduced so both sums stay visible.
#[derive(Debug, Clone, Copy)]
pub struct ExactRatio {
    numerator: u64,
    denominator: u64,
}

impl ExactRatio {
    /// Ratio of two closeness sums. At least one sum must be positive.
    pub fn from_sums(x: u64, y: u64) -> ExactRatio {
        let (numerator, denominator) = if x <= y { (x, y) } else { (y, x) };
        assert!(denominator > 0, "closeness ratio of two zero sums");
        ExactRatio { numerator, denominator }
    }

    pub const ONE: ExactRatio = ExactRatio { numerator: 1, denominator: 1 };

    pub fn numerator(&self) -> u64 {
        self.numerator
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    pub fn is_one(&self) -> bool {
        self.numerator == self.denominator
    }

    /// Display-only decimal value.
    pub fn to_f64(&self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }

    /// Compares against `p / q` (`q > 0`).
    pub fn cmp_fraction(&self, p: u64, q: u64) -> Ordering {
        (self.numerator as u128 * q as u128).cmp(&(p as u128 * self.denominator as u128))
    }

    /// `self >= alpha * other`, with `alpha = p / q`.
    pub fn at_least_times(&self, p: u64, q: u64, other: &ExactRatio) -> bool {
        // self.n / self.d >= p * other.n / (q * other.d)
        let lhs = self.numerator as u128 * q as u128 * other.denominator as u128;
        let rhs = p as u128 * other.numerator as u128 * self.denominator as u128;
        lhs >= rhs
    }

    pub fn as_rational(&self) -> Rational {
        Rational::new(self.numerator as i128, self.denominator as i128)
    }
}

impl PartialEq for ExactRatio {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for ExactRatio {}

impl PartialOrd for ExactRatio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactRatio {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_fraction(other.numerator, other.denominator)
    }
}

impl fmt::Display for ExactRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Reduced fraction with a positive denominator. Used for generator parameters
/// such as the target ratio, so construction never touches floating point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i128,
    den: i128,
}

impl Rational {
    pub fn new(num: i128, den: i128) -> Rational {
        assert!(den != 0, "zero denominator");
        let g = gcd(num, den).max(1);
        let sign = if den < 0 { -1 } else { 1 };
        Rational { num: sign * num / g, den: sign * den / g }
    }

    pub const fn integer(v: i128) -> Rational {
        Rational { num: v, den: 1 }
    }

    pub const ZERO: Rational = Rational::integer(0);
    pub const ONE: Rational = Rational::integer(1);

    pub fn numer(&self) -> i128 {
        self.num
    }

    pub fn denom(&self) -> i128 {
        self.den
    }

    pub fn floor(&self) -> i128 {
        self.num.div_euclid(self.den)
    }

    pub fn ceil(&self) -> i128 {
        -(-self.num).div_euclid(self.den)
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn recip(&self) -> Rational {
        Rational::new(self.den, self.num)
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<i128> for Rational {
    fn from(v: i128) -> Rational {
        Rational::integer(v)
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, o: Rational) -> Rational {
        Rational::new(self.num * o.den + o.num * self.den, self.den * o.den)
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, o: Rational) -> Rational {
        Rational::new(self.num * o.den - o.num * self.den, self.den * o.den)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, o: Rational) -> Rational {
        Rational::new(self.num * o.num, self.den * o.den)
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, o: Rational) -> Rational {
        Rational::new(self.num * o.den, self.den * o.num)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational { num: -self.num, den: self.den }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError;

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("expected a fraction like `3/4` or a decimal like `0.75`")
    }
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `p/q`, integers and finite decimals (`0.75` parses to exactly `3/4`).
    fn from_str(s: &str) -> Result<Rational, ParseRationalError> {
        let s = s.trim();
        if let Some((p, q)) = s.split_once('/') {
            let p: i128 = p.trim().parse().map_err(|_| ParseRationalError)?;
            let q: i128 = q.trim().parse().map_err(|_| ParseRationalError)?;
            if q == 0 {
                return Err(ParseRationalError);
            }
            return Ok(Rational::new(p, q));
        }
        let (negative, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(ParseRationalError);
        }
        if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) || frac_part.len() > 30 {
            return Err(ParseRationalError);
        }
        let mut num: i128 = 0;
        for b in int_part.bytes().chain(frac_part.bytes()) {
            num = num
                .checked_mul(10)
                .and_then(|x| x.checked_add((b - b'0') as i128))
                .ok_or(ParseRationalError)?;
        }
        let den = 10i128.pow(frac_part.len() as u32);
        Ok(Rational::new(if negative { -num } else { num }, den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_orders_by_cross_multiplication() {
        let a = ExactRatio::from_sums(7, 4);
        assert_eq!((a.numerator(), a.denominator()), (4, 7));
        assert!(a < ExactRatio::ONE);
        assert_eq!(ExactRatio::from_sums(6, 11), ExactRatio::from_sums(12, 22));
        assert_eq!(ExactRatio::from_sums(6, 11).cmp_fraction(6, 11), Ordering::Equal);
        assert!(ExactRatio::from_sums(17, 17).is_one());
    }

    #[test]
    fn approximation_comparison_is_exact_at_the_boundary() {
        let opt = ExactRatio::ONE;
        assert!(ExactRatio::from_sums(6, 11).at_least_times(6, 11, &opt));
        assert!(!ExactRatio::from_sums(599_999, 1_100_000).at_least_times(6, 11, &opt));
    }

    #[test]
    fn rational_arithmetic() {
        let t = Rational::new(3, 4);
        assert_eq!(t * t, Rational::new(9, 16));
        assert_eq!(t + t, Rational::new(3, 2));
        assert_eq!(Rational::new(-3, -6), Rational::new(1, 2));
        assert_eq!(Rational::new(23, 2).floor(), 11);
        assert_eq!(Rational::new(23, 2).ceil(), 12);
        assert_eq!(Rational::new(-1, 2).floor(), -1);
        assert_eq!(Rational::integer(10).floor(), 10);
    }

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!("3/4".parse::<Rational>(), Ok(Rational::new(3, 4)));
        assert_eq!("0.75".parse::<Rational>(), Ok(Rational::new(3, 4)));
        assert_eq!("0.55".parse::<Rational>(), Ok(Rational::new(11, 20)));
        assert_eq!("2".parse::<Rational>(), Ok(Rational::integer(2)));
        assert_eq!("-.5".parse::<Rational>(), Ok(Rational::new(-1, 2)));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("abc".parse::<Rational>().is_err());
        assert!(".".parse::<Rational>().is_err());
    }
}
