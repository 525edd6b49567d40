//! Coefficient rings for exact polynomials: a small trait bundle over
//! num-traits plus the Gaussian rationals.

use crate::{format_rat, parse_rat, Rat};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Ring of exact coefficients. Implemented by [`Rat`] and [`Gauss`];
/// anything with the listed arithmetic works.
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(n: i64) -> Self;
}

/// Coefficient fields: exact inverse for nonzero elements.
pub trait FieldCoeff: Coeff {
    fn inv(&self) -> Self;
}

impl Coeff for Rat {
    fn from_i64(n: i64) -> Self {
        crate::rati(n)
    }
}

impl FieldCoeff for Rat {
    fn inv(&self) -> Self {
        use num_traits::Inv;
        assert!(!self.is_zero(), "inverse of zero");
        Inv::inv(self)
    }
}

/// A Gaussian rational `re + im*i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gauss {
    pub re: Rat,
    pub im: Rat,
}

impl Gauss {
    pub fn new(re: Rat, im: Rat) -> Self {
        Gauss { re, im }
    }

    pub fn from_rat(re: Rat) -> Self {
        Gauss {
            re,
            im: Rat::zero(),
        }
    }

    pub fn i() -> Self {
        Gauss {
            re: Rat::zero(),
            im: Rat::one(),
        }
    }

    pub fn conj(&self) -> Self {
        Gauss {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn norm(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Parse `p/q`, `i`, `-i`, `3i`, or a parenthesised pair like
    /// `(-41/256+19/128i)`.
    pub fn parse(s: &str) -> Result<Self, String> {
        let s = s.trim();
        let inner = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(s);
        let inner = inner.trim();
        if let Ok(r) = parse_rat(inner) {
            return Ok(Gauss::from_rat(r));
        }
        if let Some(body) = inner.strip_suffix('i') {
            // pure imaginary or a sum re+im i: split at the last +/- that is
            // not at position 0 and not inside the leading sign
            let body = body.trim();
            if body.is_empty() {
                return Ok(Gauss::i());
            }
            if body == "-" {
                return Ok(Gauss::new(Rat::zero(), -Rat::one()));
            }
            if body == "+" {
                return Ok(Gauss::i());
            }
            for (k, ch) in body.char_indices().rev() {
                if (ch == '+' || ch == '-') && k > 0 {
                    let (re_s, im_s) = body.split_at(k);
                    let im_body = im_s[1..].trim();
                    let im_mag = if im_body.is_empty() {
                        Rat::one()
                    } else {
                        parse_rat(im_body)?
                    };
                    let im = if ch == '-' { -im_mag } else { im_mag };
                    return Ok(Gauss::new(parse_rat(re_s)?, im));
                }
            }
            return Ok(Gauss::new(Rat::zero(), parse_rat(body)?));
        }
        Err(format!("invalid Gaussian rational literal {s:?}"))
    }
}

impl fmt::Display for Gauss {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", format_rat(&self.re));
        }
        if self.re.is_zero() {
            return write!(f, "({}i)", format_rat(&self.im));
        }
        let sign = if self.im < Rat::zero() { "-" } else { "+" };
        let im_abs = if self.im < Rat::zero() {
            -self.im.clone()
        } else {
            self.im.clone()
        };
        write!(f, "({}{}{}i)", format_rat(&self.re), sign, format_rat(&im_abs))
    }
}

impl Add for Gauss {
    type Output = Gauss;
    fn add(self, o: Gauss) -> Gauss {
        Gauss::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for Gauss {
    type Output = Gauss;
    fn sub(self, o: Gauss) -> Gauss {
        Gauss::new(self.re - o.re, self.im - o.im)
    }
}

impl Mul for Gauss {
    type Output = Gauss;
    fn mul(self, o: Gauss) -> Gauss {
        Gauss::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

impl Neg for Gauss {
    type Output = Gauss;
    fn neg(self) -> Gauss {
        Gauss::new(-self.re, -self.im)
    }
}

impl Zero for Gauss {
    fn zero() -> Self {
        Gauss::new(Rat::zero(), Rat::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for Gauss {
    fn one() -> Self {
        Gauss::from_rat(Rat::one())
    }
}

impl Coeff for Gauss {
    fn from_i64(n: i64) -> Self {
        Gauss::from_rat(crate::rati(n))
    }
}

impl FieldCoeff for Gauss {
    fn inv(&self) -> Self {
        let n = self.norm();
        assert!(!n.is_zero(), "inverse of zero Gaussian rational");
        let c = self.conj();
        Gauss::new(c.re / n.clone(), c.im / n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn gauss_arithmetic() {
        let a = Gauss::new(rat(1, 2), rat(-3, 4));
        let b = a.clone().mul(a.inv());
        assert!(b.is_zero() == false && b == Gauss::one());
    }

    #[test]
    fn gauss_parse_and_display() {
        for s in [
            "(-41/256+19/128i)",
            "(41/256-19/128i)",
            "3/4",
            "(2i)",
            "(-6/5+2/5i)",
        ] {
            let g = Gauss::parse(s).unwrap();
            assert_eq!(Gauss::parse(&g.to_string()).unwrap(), g, "round trip {s}");
        }
        assert_eq!(Gauss::parse("i").unwrap(), Gauss::i());
        let g = Gauss::parse("(-41/256+19/128i)").unwrap();
        assert_eq!(g.re, rat(-41, 256));
        assert_eq!(g.im, rat(19, 128));
    }
}
