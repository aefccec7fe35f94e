//! Univariate integer polynomials with no constant term.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::{narrow, AlgebraError};

/// `c_1·d + c_2·d² + … + c_n·dⁿ`. The constant term is structurally absent,
/// which is exactly the shape required on the polynomial side of the glue
/// equations.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntPolynomial {
    /// `coeffs[i]` multiplies `d^(i+1)`; trailing zeros are trimmed.
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// The monomial `dⁿ`.
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = alloc::vec![0; n];
        if n > 0 {
            coeffs[n - 1] = 1;
        }
        IntPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Horner evaluation in checked 64-bit arithmetic. `P(0) = 0` always.
    pub fn eval(&self, d: i64) -> Result<i64, AlgebraError> {
        narrow(self.eval_wide(d).ok_or(AlgebraError::Overflow)?)
    }

    /// Horner evaluation in checked 128-bit arithmetic; `None` only when the
    /// true value leaves 128-bit range.
    pub fn eval_wide(&self, d: i64) -> Option<i128> {
        let mut acc: i128 = 0;
        for &c in self.coeffs.iter().rev() {
            acc = acc.checked_mul(d as i128)?.checked_add(c as i128)?;
        }
        acc.checked_mul(d as i128)
    }
}

impl fmt::Display for IntPolynomial {
    /// Renders in descending powers, e.g. `2d^3+d` or `-d^2`; zero is `0d`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0d");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let power = i + 1;
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let mag = c.unsigned_abs();
            if mag != 1 {
                write!(f, "{mag}")?;
            }
            if power == 1 {
                write!(f, "d")?;
            } else {
                write!(f, "d^{power}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for IntPolynomial {
    type Err = String;

    /// Parses sums of monomials in `d`, e.g. `d^2`, `-3d`, `2d^3+d-4d^2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(String::from("empty polynomial"));
        }
        if s == "0d" || s == "0" {
            return Ok(IntPolynomial::new(Vec::new()));
        }
        let mut coeffs: Vec<i64> = Vec::new();
        let mut rest = s;
        let mut sign: i64 = 1;
        if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r;
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        }
        loop {
            let term_end = rest.find(['+', '-']).unwrap_or(rest.len());
            let (term, tail) = rest.split_at(term_end);
            let term = term.trim();
            let (coef_str, pow_str) = match term.find('d') {
                Some(i) => (&term[..i], &term[i + 1..]),
                None => return Err(alloc::format!("term `{term}` has no variable d")),
            };
            let coef: i64 = if coef_str.is_empty() {
                1
            } else {
                coef_str.trim().parse().map_err(|_| alloc::format!("bad coefficient `{coef_str}`"))?
            };
            let power: usize = if pow_str.is_empty() {
                1
            } else {
                let p = pow_str
                    .strip_prefix('^')
                    .ok_or_else(|| alloc::format!("expected `^` in `{term}`"))?;
                p.trim().parse().map_err(|_| alloc::format!("bad exponent `{p}`"))?
            };
            if power == 0 {
                return Err(String::from("constant terms are not allowed"));
            }
            if power > 64 {
                return Err(alloc::format!("exponent {power} too large"));
            }
            if coeffs.len() < power {
                coeffs.resize(power, 0);
            }
            coeffs[power - 1] = coeffs[power - 1]
                .checked_add(sign * coef)
                .ok_or_else(|| String::from("coefficient overflow"))?;
            if tail.is_empty() {
                break;
            }
            sign = if tail.starts_with('-') { -1 } else { 1 };
            rest = &tail[1..];
        }
        Ok(IntPolynomial::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn eval_matches_direct_expansion() {
        let p = IntPolynomial::new(alloc::vec![1, -4, 2]); // d - 4d^2 + 2d^3
        for d in -20i64..=20 {
            assert_eq!(p.eval(d).unwrap(), d - 4 * d * d + 2 * d * d * d);
        }
        assert_eq!(p.eval(0).unwrap(), 0);
    }

    #[test]
    fn display_and_parse_round_trip() {
        for coeffs in [
            alloc::vec![0, 1],
            alloc::vec![1],
            alloc::vec![-1],
            alloc::vec![1, -4, 2],
            alloc::vec![0, 0, 5],
            alloc::vec![],
        ] {
            let p = IntPolynomial::new(coeffs);
            let s = p.to_string();
            let q: IntPolynomial = s.parse().unwrap();
            assert_eq!(p, q, "round trip through `{s}`");
        }
        assert_eq!("d^2".parse::<IntPolynomial>().unwrap(), IntPolynomial::monomial(2));
        assert_eq!("2d^3+d".parse::<IntPolynomial>().unwrap(), IntPolynomial::new(alloc::vec![1, 0, 2]));
        assert!("3".parse::<IntPolynomial>().is_err());
        assert!("d^2+7".parse::<IntPolynomial>().is_err());
    }

    #[test]
    fn zero_polynomial() {
        let z = IntPolynomial::new(alloc::vec![0, 0]);
        assert!(z.is_zero());
        assert_eq!(z.eval(5).unwrap(), 0);
        assert_eq!(z.to_string(), "0d");
    }
}
