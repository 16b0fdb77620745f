//! Exact ground fields: the rationals and prime fields `F_p`.
//!
//! A [`Field`] is fixed for a computation; every [`Scalar`] carries enough
//! information to know which field it lives in. Combining scalars from two
//! different fields is a programming error and panics; user-facing
//! constructors check field agreement up front and report it as an error.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest modulus accepted for `F_p`; keeps products inside `u64`.
pub const MAX_PRIME: u64 = u32::MAX as u64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// `F_p`, rejecting composite or oversized moduli.
    pub fn prime(p: u64) -> Result<Self> {
        if !(2..=MAX_PRIME).contains(&p) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        self.int(0)
    }

    pub fn one(self) -> Scalar {
        self.int(1)
    }

    /// Image of an integer in this field.
    pub fn int(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(n.into())),
            Field::Prime(p) => Scalar::Residue {
                value: (n.rem_euclid(p as i64)) as u64,
                modulus: p,
            },
        }
    }

    /// Image of `num/den`. Fails when `den` vanishes in the field.
    pub fn ratio(self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {num}/{den}")));
        }
        match self {
            Field::Rational => Ok(Scalar::Rational(BigRational::new(num.clone(), den.clone()))),
            Field::Prime(p) => {
                let n = reduce_big(num, p);
                let d = reduce_big(den, p);
                if d == 0 {
                    return Err(Error::Parse(format!(
                        "denominator {den} is zero modulo {p}"
                    )));
                }
                let n = Scalar::Residue { value: n, modulus: p };
                let d = Scalar::Residue { value: d, modulus: p };
                Ok(&n * &d.inverse().expect("nonzero residue"))
            }
        }
    }

    /// Parses `"n"`, `"-n"` or `"num/den"`.
    pub fn parse_scalar(self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text, "1"),
        };
        let num = BigInt::from_str(num)
            .map_err(|_| Error::Parse(format!("invalid scalar {text:?}")))?;
        let den = BigInt::from_str(den)
            .map_err(|_| Error::Parse(format!("invalid scalar {text:?}")))?;
        self.ratio(&num, &den)
    }

    pub fn contains(self, s: &Scalar) -> bool {
        s.field() == self
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn reduce_big(n: &BigInt, p: u64) -> u64 {
    let r = n % BigInt::from(p);
    let r = if r.is_negative() { r + BigInt::from(p) } else { r };
    r.to_u64().expect("residue fits in u64")
}

/// An element of a [`Field`]. Rationals are kept in lowest terms with a
/// positive denominator; residues lie in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Residue { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    /// `(-1)^k` times `self`.
    pub fn signed(&self, k: usize) -> Scalar {
        if k.is_multiple_of(2) {
            self.clone()
        } else {
            -self
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

#[track_caller]
fn same_modulus(a: u64, b: u64) -> u64 {
    assert_eq!(a, b, "arithmetic across different prime fields");
    a
}

impl Add for &Scalar {
    type Output = Scalar;
    #[track_caller]
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (
                Scalar::Residue { value: a, modulus: p },
                Scalar::Residue { value: b, modulus: q },
            ) => {
                let p = same_modulus(*p, *q);
                Scalar::Residue { value: (a + b) % p, modulus: p }
            }
            _ => panic!("arithmetic across fields"),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    #[track_caller]
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (
                Scalar::Residue { value: a, modulus: p },
                Scalar::Residue { value: b, modulus: q },
            ) => {
                let p = same_modulus(*p, *q);
                Scalar::Residue { value: (a + p - b) % p, modulus: p }
            }
            _ => panic!("arithmetic across fields"),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    #[track_caller]
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (
                Scalar::Residue { value: a, modulus: p },
                Scalar::Residue { value: b, modulus: q },
            ) => {
                let p = same_modulus(*p, *q);
                Scalar::Residue { value: a * b % p, modulus: p }
            }
            _ => panic!("arithmetic across fields"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    #[track_caller]
    fn add_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a += b,
            _ => *self = &*self + rhs,
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    #[track_caller]
    fn sub_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a -= b,
            _ => *self = &*self - rhs,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_stay_canonical() {
        let q = Field::Rational;
        let a = q.parse_scalar("6/-4").unwrap();
        match &a {
            Scalar::Rational(r) => {
                assert_eq!(r.numer(), &BigInt::from(-3));
                assert_eq!(r.denom(), &BigInt::from(2));
            }
            _ => unreachable!(),
        }
        let b = &a + &q.parse_scalar("3/2").unwrap();
        assert!(b.is_zero());
        assert_eq!(a.to_string(), "-3/2");
    }

    #[test]
    fn residues_wrap() {
        let f = Field::prime(7).unwrap();
        let a = f.int(-1);
        assert_eq!(a, Scalar::Residue { value: 6, modulus: 7 });
        let inv = f.int(3).inverse().unwrap();
        assert!((&inv * &f.int(3)).is_one());
        assert_eq!(f.parse_scalar("1/2").unwrap(), f.int(4));
        assert!(f.parse_scalar("1/7").is_err());
    }

    #[test]
    fn composite_modulus_rejected() {
        assert!(matches!(Field::prime(9), Err(Error::NotPrime(9))));
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(2).is_ok());
    }

    #[test]
    fn zero_has_no_inverse() {
        assert!(Field::Rational.zero().inverse().is_none());
        assert!(Field::Prime(5).zero().inverse().is_none());
    }

    #[test]
    #[should_panic(expected = "across")]
    fn mixing_fields_panics() {
        let _ = &Field::Rational.one() + &Field::Prime(3).one();
    }
}
