//! Exact scalars: residues modulo a prime, or rationals.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use super::AlgebraError;

/// Coefficient field of an algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u32),
}

/// An element of a [`Field`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scalar {
    Mod { value: u32, p: u32 },
    Rational(Ratio<i128>),
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d: &u32| (*d as u64) * (*d as u64) <= p as u64).all(|d| !p.is_multiple_of(d))
}

fn mod_inverse(a: u32, p: u32) -> u32 {
    let e = i64::extended_gcd(&(a as i64), &(p as i64));
    e.x.rem_euclid(p as i64) as u32
}

impl Field {
    pub fn prime(p: u32) -> Result<Self, AlgebraError> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(AlgebraError::NotPrime(p))
        }
    }

    /// `0` for ℚ.
    pub fn characteristic(self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(Ratio::from_integer(n as i128)),
            Field::Prime(p) => Scalar::Mod { value: n.rem_euclid(p as i64) as u32, p },
        }
    }

    /// Parses `"3"`, `"-2"` or `"1/2"`.
    pub fn parse_scalar(self, text: &str) -> Result<Scalar, AlgebraError> {
        let bad = || AlgebraError::BadCoefficient(text.to_string());
        let text = text.trim();
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text, "1"),
        };
        let num = i64::from_str(num).map_err(|_| bad())?;
        let den = i64::from_str(den).map_err(|_| bad())?;
        let den = self.from_i64(den).inverse().ok_or_else(bad)?;
        Ok(self.from_i64(num) * den)
    }

    /// `"Q"` or `"Fp:<p>"`.
    pub fn parse(text: &str) -> Result<Self, AlgebraError> {
        match text.trim() {
            "Q" => Ok(Field::Rational),
            other => {
                let p = other
                    .strip_prefix("Fp:")
                    .and_then(|p| p.parse::<u32>().ok())
                    .ok_or_else(|| AlgebraError::BadField(text.to_string()))?;
                Field::prime(p)
            }
        }
    }

    /// `0` means ℚ, anything else must be prime.
    pub fn from_characteristic(ch: u32) -> Result<Self, AlgebraError> {
        if ch == 0 {
            Ok(Field::Rational)
        } else {
            Field::prime(ch)
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl Scalar {
    pub fn field(self) -> Field {
        match self {
            Scalar::Mod { p, .. } => Field::Prime(p),
            Scalar::Rational(_) => Field::Rational,
        }
    }

    pub fn is_zero(self) -> bool {
        match self {
            Scalar::Mod { value, .. } => value == 0,
            Scalar::Rational(r) => r.is_zero(),
        }
    }

    pub fn is_one(self) -> bool {
        match self {
            Scalar::Mod { value, .. } => value == 1,
            Scalar::Rational(r) => r.is_one(),
        }
    }

    pub fn inverse(self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Mod { value, p } => Scalar::Mod { value: mod_inverse(value, p), p },
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
        })
    }
}

impl Add for Scalar {
    type Output = Scalar;

    fn add(self, rhs: Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, p: q }) if p == q => {
                Scalar::Mod { value: ((a as u64 + b as u64) % p as u64) as u32, p }
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            _ => panic!("scalars from different fields: {self:?} + {rhs:?}"),
        }
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = *self + rhs;
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Mod { value, p } => Scalar::Mod { value: (p - value) % p, p },
            Scalar::Rational(r) => Scalar::Rational(-r),
        }
    }
}

impl Sub for Scalar {
    type Output = Scalar;

    fn sub(self, rhs: Scalar) -> Scalar {
        self + (-rhs)
    }
}

impl Mul for Scalar {
    type Output = Scalar;

    fn mul(self, rhs: Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, p: q }) if p == q => {
                Scalar::Mod { value: ((a as u64 * b as u64) % p as u64) as u32, p }
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            _ => panic!("scalars from different fields: {self:?} * {rhs:?}"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Mod { value, .. } => write!(f, "{value}"),
            Scalar::Rational(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Scalar::Rational(r) => {
                let sign = if r.is_negative() { "-" } else { "" };
                write!(f, "{sign}{}/{}", r.numer().abs(), r.denom())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(Field::prime(2).is_ok());
        assert!(Field::prime(97).is_ok());
        assert_eq!(Field::prime(1), Err(AlgebraError::NotPrime(1)));
        assert_eq!(Field::prime(91), Err(AlgebraError::NotPrime(91)));
    }

    #[test]
    fn modular_arithmetic() {
        let f5 = Field::Prime(5);
        let a = f5.from_i64(3);
        let b = f5.from_i64(4);
        assert_eq!(a + b, f5.from_i64(2));
        assert_eq!(a * b, f5.from_i64(2));
        assert_eq!(-a, f5.from_i64(2));
        assert_eq!(a.inverse().unwrap() * a, f5.one());
        assert_eq!(f5.zero().inverse(), None);
        assert_eq!(f5.from_i64(-1), f5.from_i64(4));
    }

    #[test]
    fn parsing() {
        let q = Field::Rational;
        assert_eq!(q.parse_scalar("-1/2").unwrap().to_string(), "-1/2");
        assert_eq!(q.parse_scalar("4/2").unwrap().to_string(), "2");
        let f3 = Field::Prime(3);
        // 1/2 = 2 in 𝔽₃
        assert_eq!(f3.parse_scalar("1/2").unwrap(), f3.from_i64(2));
        assert!(f3.parse_scalar("1/3").is_err());
        assert!(q.parse_scalar("x").is_err());
        assert_eq!(Field::parse("Fp:7").unwrap(), Field::Prime(7));
        assert_eq!(Field::parse("Q").unwrap(), Field::Rational);
        assert!(Field::parse("Fp:8").is_err());
        assert!(Field::parse("R").is_err());
    }

    #[test]
    #[should_panic(expected = "different fields")]
    fn mixing_fields_panics() {
        let _ = Field::Prime(2).one() + Field::Rational.one();
    }
}
